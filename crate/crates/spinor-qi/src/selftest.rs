//! Self-contained invariant suite across all library crates, run at
//! default tolerances (or a global override) with a seeded generator for
//! the randomized sweeps.

use num_complex::Complex64 as C64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use delta_m::{delta_eval, delta_hat, delta_hat_quadrature, sifting_test, total_integral, DeltaParams};
use epr_engine::{chsh, CutoffProfile, DetectorRegion, RepChoice};
use fock_oracle::{cyclic_vacuum_demo, oracle_epr_average, pair_norm_sqr, OracleSpace};
use massive_rep::{
    pl_eigenvalues, principal_null_spinors, pst_experiment, wigner_u, GaugeSpec, Gaussian3,
    MassiveMomentum, MomentumGrid, MomentumSpinState,
};
use photon_rep::{
    antisymmetry_defect, transform_kernel, wigner_phase, EPRKernel, LightconeGrid, NullMomentum,
    Packet,
};
use spinor_core::{clifford_check, FourVector, SL2C};

use crate::error::CliError;

struct Check {
    name: &'static str,
    default_tol: f64,
    residual: f64,
}

fn random_sl2c(rng: &mut ChaCha8Rng) -> SL2C {
    let axis = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0f64)];
    let dir = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0f64)];
    let rot = SL2C::rotation(norm3(axis), rng.gen_range(-3.0..3.0));
    let boost = SL2C::boost(norm3(dir), rng.gen_range(-1.2..1.2));
    rot.mul(&boost)
}

fn norm3(v: [f64; 3]) -> [f64; 3] {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt().max(1e-9);
    [v[0] / n, v[1] / n, v[2] / n]
}

fn random_vector(rng: &mut ChaCha8Rng) -> FourVector {
    FourVector::new(
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
    )
}

fn metric_and_homomorphism(rng: &mut ChaCha8Rng) -> f64 {
    let eta = nalgebra::Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, -1.0, -1.0, -1.0));
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let l1 = random_sl2c(rng);
        let l2 = random_sl2c(rng);
        let m1 = l1.lorentz_of();
        worst = worst.max((m1.transpose() * eta * m1 - eta).abs().max());
        worst = worst.max((l1.mul(&l2).lorentz_of() - m1 * l2.lorentz_of()).abs().max());
        let neg = SL2C::minus_identity().mul(&l1);
        worst = worst.max((neg.lorentz_of() - m1).abs().max());
    }
    worst
}

fn clifford_residuals(rng: &mut ChaCha8Rng) -> f64 {
    (0..20)
        .map(|_| clifford_check(&random_vector(rng), &random_vector(rng)))
        .fold(0.0, f64::max)
}

fn pl_eigenvalue_cases() -> f64 {
    let p = MassiveMomentum::on_shell(1.3, [0.4, -0.7, 1.1]);
    let t_hel = FourVector::new(1.0 / p.p.spatial_norm(), 0.0, 0.0, 0.0);
    let (a, b) = pl_eigenvalues(&t_hel, &p).expect("physical input");
    let mut worst = (a - 0.5).abs().max((b + 0.5).abs());
    let t_par = (1.0 / (p.m * p.m)) * p.p;
    let (a, _) = pl_eigenvalues(&t_par, &p).expect("physical input");
    worst = worst.max(a.abs());
    worst
}

fn wigner_cocycles(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let p = MassiveMomentum::on_shell(
            rng.gen_range(0.4..2.0),
            [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)],
        );
        let l1 = random_sl2c(rng);
        let l2 = random_sl2c(rng);
        let gauge = GaugeSpec::Helicity;
        let u12 = wigner_u(&l1.mul(&l2), &p, &gauge).expect("gauge defined");
        let u1 = wigner_u(&l1, &p, &gauge).expect("gauge defined");
        let q = l1.inverse().act_vector(&p.p);
        let u2 = wigner_u(&l2, &MassiveMomentum::on_shell(p.m, [q.x, q.y, q.z]), &gauge)
            .expect("gauge defined");
        worst = worst.max(u12.unitarity_defect());
        worst = worst.max(u12.det_defect());
        worst = worst
            .max((u12.u - u1.u * u2.u).iter().map(|z| z.norm()).fold(0.0, f64::max));
    }
    worst
}

fn pst_contrast() -> f64 {
    let grid = MomentumGrid::cubic(1.0, [0.0, 0.0, 0.6], 0.5, 6);
    let profile = Gaussian3 { center: [0.0, 0.0, 0.6], sigma: 0.25 };
    let state = MomentumSpinState::product(grid, [C64::new(1.0, 0.0), C64::new(0.0, 0.0)], profile)
        .expect("normalizable");
    let l = SL2C::boost([1.0, 0.0, 0.0], 1.0);
    let (before, after) =
        pst_experiment(&state, &l, &GaugeSpec::Helicity).expect("gauge defined");
    let pn = principal_null_spinors(&l).remove(0);
    let gauge = GaugeSpec::PrincipalNull { tau: [pn.c0.re, pn.c0.im, pn.c1.re, pn.c1.im] };
    let (_, corrected) = pst_experiment(&state, &l, &gauge).expect("gauge defined");
    // residual is zero when the expected ordering holds: product state pure,
    // helicity-gauge boost decoheres, principal-null gauge does not
    let mut res = before.abs().max(corrected.abs());
    if after <= 0.01 {
        res = res.max(1.0);
    }
    res
}

fn massless_phase_cocycle(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let k = NullMomentum::from_spatial([
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(0.2..1.5),
        ])
        .expect("nonzero");
        let l1 = random_sl2c(rng);
        let l2 = random_sl2c(rng);
        let t12 = wigner_phase(&l1.mul(&l2), &k).expect("nonzero");
        let t1 = wigner_phase(&l1, &k).expect("nonzero");
        let kq = NullMomentum::new(l1.inverse().act_vector(&k.k)).expect("null");
        let t2 = wigner_phase(&l2, &kq).expect("null");
        worst = worst.max((t12.phase() - t1.phase() * t2.phase()).norm());
    }
    // the half-angle example: rotation about z by ψ on k ∥ +z
    let k = NullMomentum::from_spatial([0.0, 0.0, 2.0]).expect("nonzero");
    let t = wigner_phase(&SL2C::rotation_z(0.9), &k).expect("nonzero");
    worst.max((t.theta - 0.45).abs())
}

fn kernel_defect_contrast() -> f64 {
    let grid = LightconeGrid::cubic([0.0, 0.0, 1.2], 0.8, 3).expect("grid");
    let ker = EPRKernel::product_antisym(
        grid,
        Packet { center: [0.1, 0.0, 1.3], sigma: 0.5 },
        Packet { center: [-0.2, 0.1, 1.0], sigma: 0.6 },
    );
    let generic = transform_kernel(&ker, &SL2C::boost(norm3([1.0, 0.3, -0.2]), 0.5))
        .and_then(|t| antisymmetry_defect(&t))
        .expect("rule kernel transforms");
    let axis = LightconeGrid::axis_z(&[0.7, 1.0, 1.6]).expect("grid");
    let aker = EPRKernel::product_antisym(
        axis,
        Packet { center: [0.0, 0.0, 0.9], sigma: 0.4 },
        Packet { center: [0.0, 0.0, 1.5], sigma: 0.5 },
    );
    let parallel = transform_kernel(&aker, &SL2C::boost_z(0.5))
        .and_then(|t| antisymmetry_defect(&t))
        .expect("rule kernel transforms");
    // residual 0 when the contrast holds
    let mut res = parallel;
    if generic <= 1e-3 {
        res = res.max(1.0);
    }
    res
}

fn tsirelson() -> f64 {
    let grid = LightconeGrid::cubic([0.0, 0.0, 1.2], 0.9, 3).expect("grid");
    let ker = EPRKernel::product_antisym(
        grid.clone(),
        Packet { center: [0.0, 0.0, 1.9], sigma: 0.08 },
        Packet { center: [0.0, 0.0, 0.5], sigma: 0.08 },
    );
    let top = DetectorRegion::half_space(&grid, [0.0, 0.0, 1.0], 1.2);
    let bottom = top.clone().complement();
    let pi = std::f64::consts::PI;
    let r = chsh(
        0.0,
        pi / 4.0,
        pi / 8.0,
        3.0 * pi / 8.0,
        &top,
        &bottom,
        &ker,
        &RepChoice::Irreducible,
    )
    .expect("antisymmetric kernel");
    (r.s - 2.0 * 2f64.sqrt()).abs()
}

fn oracle_cross_checks() -> f64 {
    let grid =
        LightconeGrid::from_momenta(&[[0.0, 0.1, 1.0], [0.4, -0.2, 1.5]], 1.0).expect("grid");
    let o0 = CutoffProfile::gaussian(grid.clone(), [0.2, 0.0, 1.2], 0.7).expect("profile");
    let sp = OracleSpace::new(o0.clone(), 2, 2).expect("small space");
    let ker = EPRKernel::product_antisym(
        grid.clone(),
        Packet { center: [0.0, 0.0, 1.0], sigma: 0.6 },
        Packet { center: [0.5, 0.1, 1.7], sigma: 0.9 },
    );
    let rep = RepChoice::Reducible { n: 2, o0 };
    let norm_res = (pair_norm_sqr(&sp, &ker).expect("fits")
        - epr_engine::two_photon_norm(&ker, &rep).expect("reducible"))
    .abs();
    let omega = DetectorRegion::from_mask(&grid, vec![true, false]).expect("mask");
    let omegap = omega.complement();
    let avg_res = (oracle_epr_average(0.3, -0.4, &omega, &omegap, &ker, &sp).expect("fits")
        - epr_engine::epr_average(0.3, -0.4, &omega, &omegap, &ker, &rep).expect("reducible"))
    .abs();
    norm_res.max(avg_res)
}

fn delta_suite() -> f64 {
    let prm = DeltaParams::new(0.8, 0.25).expect("valid");
    let mut worst = (total_integral(&prm) - 1.0).abs();
    worst = worst.max((delta_eval(0.0, &prm) - 0.8).abs());
    for x in [0.3, 1.7, 6.0] {
        worst = worst.max((delta_hat(x, &prm) - delta_hat_quadrature(x, &prm)).abs());
    }
    let schedule: Vec<f64> = (0..10).map(|i| 0.5 * 0.5f64.powi(i)).collect();
    let step = sifting_test(|x| if x > 0.0 { 1.0 } else { 0.0 }, 0.8, &schedule);
    worst.max((step.limit() - 0.5).abs())
}

fn toy_demo() -> f64 {
    let r = cyclic_vacuum_demo();
    r.orbit_residual
        .max(r.second_factor_residual)
        .max((r.chsh - 2.0 * 2f64.sqrt()).abs())
}

/// Run every check; print one line per check; error (exit 3) if any fail.
pub fn selftest(seed: u64, tol_override: Option<f64>) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checks = vec![
        Check {
            name: "spinor-core: metric preservation, homomorphism, double cover",
            default_tol: 1e-10,
            residual: metric_and_homomorphism(&mut rng),
        },
        Check {
            name: "spinor-core: gamma anticommutator residuals",
            default_tol: 1e-12,
            residual: clifford_residuals(&mut rng),
        },
        Check {
            name: "massive-rep: polarization eigenvalue cases",
            default_tol: 1e-12,
            residual: pl_eigenvalue_cases(),
        },
        Check {
            name: "massive-rep: little-group unitarity and composition",
            default_tol: 1e-9,
            residual: wigner_cocycles(&mut rng),
        },
        Check {
            name: "massive-rep: boost decoherence and its principal-null cure",
            default_tol: 1e-10,
            residual: pst_contrast(),
        },
        Check {
            name: "photon-rep: massless phase composition and half-angle",
            default_tol: 1e-9,
            residual: massless_phase_cocycle(&mut rng),
        },
        Check {
            name: "photon-rep: antisymmetry defect contrast under boosts",
            default_tol: 1e-12,
            residual: kernel_defect_contrast(),
        },
        Check {
            name: "epr-engine: chsh at the optimal angles",
            default_tol: 1e-9,
            residual: tsirelson(),
        },
        Check {
            name: "fock-oracle: norms and averages vs closed forms",
            default_tol: 1e-10,
            residual: oracle_cross_checks(),
        },
        Check {
            name: "delta-m: normalization, transform, sifting",
            default_tol: 1e-7,
            residual: delta_suite(),
        },
        Check {
            name: "fock-oracle: two-qubit cyclic-vector demonstration",
            default_tol: 1e-12,
            residual: toy_demo(),
        },
    ];
    let mut failures = Vec::new();
    for c in &checks {
        let tol = tol_override.unwrap_or(c.default_tol);
        let ok = c.residual <= tol;
        println!(
            "{} {} (residual {:.3e}, tolerance {:.3e})",
            if ok { "PASS" } else { "FAIL" },
            c.name,
            c.residual,
            tol
        );
        if !ok {
            failures.push(c.name);
        }
    }
    if failures.is_empty() {
        println!("selftest: {} checks passed", checks.len());
        Ok(())
    } else {
        Err(CliError::numerical(format!(
            "{} of {} checks failed: {}",
            failures.len(),
            checks.len(),
            failures.join("; ")
        )))
    }
}
