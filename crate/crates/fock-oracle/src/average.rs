//! Polarization correlation averages evaluated by brute force in the
//! truncated space: ⟨Ψ, Y′_β Y_α Ψ⟩ / ⟨Ψ, Ψ⟩ with Ψ the pair state and
//! Y the region analyzers.

use epr_engine::DetectorRegion;
use photon_rep::EPRKernel;

use crate::build::analyzer;
use crate::error::OracleError;
use crate::space::OracleSpace;
use crate::state::pair_state;

/// The analyzer correlation average at angles (α, β) over regions (Ω, Ω′).
pub fn oracle_epr_average(
    alpha: f64,
    beta: f64,
    omega: &DetectorRegion,
    omegap: &DetectorRegion,
    ker: &EPRKernel,
    space: &OracleSpace,
) -> Result<f64, OracleError> {
    for region in [omega, omegap] {
        if region.mask.len() != space.cells() {
            return Err(OracleError::RegionMismatch {
                mask: region.mask.len(),
                cells: space.cells(),
            });
        }
    }
    let psi = pair_state(space, ker)?;
    let nn = psi.norm_sqr();
    if nn < 1e-300 {
        return Err(OracleError::ZeroNorm);
    }
    let ya = analyzer(space, omega, alpha)?;
    let yb = analyzer(space, omegap, beta)?;
    let v = yb.apply(&ya.apply(&psi.amps));
    let e = psi.dot(&v) / nn;
    if e.im.abs() > 1e-9 * (1.0 + e.re.abs()) {
        return Err(OracleError::NotReal(e.im));
    }
    Ok(e.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use epr_engine::{epr_average, CutoffProfile, RepChoice};
    use photon_rep::{LightconeGrid, Packet};

    fn grid(cells: usize) -> LightconeGrid {
        let k3s: Vec<[f64; 3]> =
            (0..cells).map(|i| [0.3 * i as f64, -0.2, 1.0 + 0.5 * i as f64]).collect();
        LightconeGrid::from_momenta(&k3s, 1.0).unwrap()
    }

    fn setup(cells: usize, big_n: usize) -> (OracleSpace, EPRKernel) {
        let g = grid(cells);
        let o0 = CutoffProfile::gaussian(g.clone(), [0.1, 0.0, 1.3], 0.8).unwrap();
        let sp = OracleSpace::new(o0, 2, big_n).unwrap();
        let ker = EPRKernel::product_antisym(
            g,
            Packet { center: [0.0, 0.0, 1.0], sigma: 0.6 },
            Packet { center: [0.5, 0.1, 1.7], sigma: 0.9 },
        );
        (sp, ker)
    }

    #[test]
    fn matches_the_closed_form_on_disjoint_regions() {
        for (cells, big_n) in [(2usize, 2usize), (3, 2)] {
            let (sp, ker) = setup(cells, big_n);
            let g = &sp.profile.grid;
            let mut ma = vec![false; cells];
            ma[0] = true;
            let mb: Vec<bool> = ma.iter().map(|b| !b).collect();
            let omega = DetectorRegion::from_mask(g, ma).unwrap();
            let omegap = DetectorRegion::from_mask(g, mb).unwrap();
            let rep = RepChoice::Reducible { n: big_n as u32, o0: sp.profile.clone() };
            for (alpha, beta) in [(0.0, 0.0), (0.3, -0.5), (1.2, 0.4)] {
                let oracle =
                    oracle_epr_average(alpha, beta, &omega, &omegap, &ker, &sp).unwrap();
                let closed = epr_average(alpha, beta, &omega, &omegap, &ker, &rep).unwrap();
                assert!(
                    (oracle - closed).abs() < 1e-12,
                    "cells {cells}, N {big_n}, ({alpha}, {beta}): {oracle} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn full_grid_regions_average_to_zero() {
        let (sp, ker) = setup(2, 2);
        let all = DetectorRegion::all(&sp.profile.grid);
        for (alpha, beta) in [(0.0, 0.0), (0.7, 0.1)] {
            let e = oracle_epr_average(alpha, beta, &all, &all, &ker, &sp).unwrap();
            assert!(e.abs() < 1e-12, "({alpha}, {beta}): {e}");
        }
    }

    #[test]
    fn average_is_independent_of_the_tensor_power() {
        let (sp2, ker) = setup(2, 2);
        let (sp3, _) = setup(2, 3);
        let g = &sp2.profile.grid;
        let omega = DetectorRegion::from_mask(g, vec![true, false]).unwrap();
        let omegap = omega.complement();
        let e2 = oracle_epr_average(0.4, -0.2, &omega, &omegap, &ker, &sp2).unwrap();
        let e3 = oracle_epr_average(0.4, -0.2, &omega, &omegap, &ker, &sp3).unwrap();
        assert!((e2 - e3).abs() < 1e-10, "{e2} vs {e3}");
    }

    #[test]
    fn mismatched_region_is_rejected() {
        let (sp, ker) = setup(2, 2);
        let other = grid(3);
        let bad = DetectorRegion::all(&other);
        let good = DetectorRegion::all(&sp.profile.grid);
        assert!(matches!(
            oracle_epr_average(0.0, 0.0, &bad, &good, &ker, &sp),
            Err(OracleError::RegionMismatch { .. })
        ));
    }
}
