//! Closed-form norms of two-photon states built on the finite-N vacuum.

use photon_rep::EPRKernel;
use spinor_core::FourVector;

use crate::cutoff::CutoffProfile;
use crate::engine::RepChoice;
use crate::error::EprError;

/// ‖Ψ(N)|0,N⟩‖² for an antisymmetric kernel:
/// (1 − 1/N) ∬ |ψ(k,k′)|² |O₀(k)|² |O₀(k′)|² via grid quadrature.
pub fn two_photon_norm(ker: &EPRKernel, rep: &RepChoice) -> Result<f64, EprError> {
    let (n, o0) = match rep {
        RepChoice::Reducible { n, o0 } => (*n, o0),
        RepChoice::Irreducible => return Err(EprError::NotReducible),
    };
    if n < 1 {
        return Err(EprError::BadPower { n, min: 1 });
    }
    if o0.amps.len() != ker.grid.len() {
        return Err(EprError::ProfileMismatch { amps: o0.amps.len(), cells: ker.grid.len() });
    }
    let m = ker.matrix()?;
    let inten = o0.intensity();
    let mut s = 0.0;
    for (i, (_, wi)) in ker.grid.cells.iter().enumerate() {
        for (j, (_, wj)) in ker.grid.cells.iter().enumerate() {
            s += wi * wj * m[i][j].norm_sqr() * inten[i] * inten[j];
        }
    }
    Ok((1.0 - 1.0 / n as f64) * s)
}

/// Norm² of the coincident-momentum pair state at tensor power N:
/// 1/N² + (1 − 1/N)·∫|O₀|⁴; equals 1 at N = 1.
pub fn psi2_norm(n: u32, o0: &CutoffProfile) -> Result<f64, EprError> {
    if n < 1 {
        return Err(EprError::BadPower { n, min: 1 });
    }
    let nf = n as f64;
    let quartic: f64 = o0
        .grid
        .cells
        .iter()
        .zip(o0.intensity())
        .map(|((_, w), i2)| w * i2 * i2)
        .sum();
    Ok(1.0 / (nf * nf) + (1.0 - 1.0 / nf) * quartic)
}

/// Norm² of the scalar pair state at tensor power N:
/// 2(1 − 1/N) ∬ (k·k′)² |O₀(k)|² |O₀(k′)|², with k·k′ the Minkowski
/// product of the null cell momenta (0 for parallel directions).
pub fn scalar_norm_example(n: u32, o0: &CutoffProfile) -> Result<f64, EprError> {
    if n < 1 {
        return Err(EprError::BadPower { n, min: 1 });
    }
    let inten = o0.intensity();
    let ks: Vec<FourVector> = o0.grid.cells.iter().map(|(k, _)| k.k).collect();
    let mut s = 0.0;
    for (i, (_, wi)) in o0.grid.cells.iter().enumerate() {
        for (j, (_, wj)) in o0.grid.cells.iter().enumerate() {
            let dot = ks[i].dot(&ks[j]);
            s += wi * wj * dot * dot * inten[i] * inten[j];
        }
    }
    Ok(2.0 * (1.0 - 1.0 / n as f64) * s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use photon_rep::{EPRKernel, LightconeGrid, Packet};

    fn grid() -> LightconeGrid {
        LightconeGrid::cubic([0.0, 0.0, 1.2], 0.7, 2).unwrap()
    }

    fn kernel(g: &LightconeGrid) -> EPRKernel {
        EPRKernel::product_antisym(
            g.clone(),
            Packet { center: [0.1, 0.0, 1.4], sigma: 0.5 },
            Packet { center: [-0.2, 0.1, 1.0], sigma: 0.6 },
        )
    }

    #[test]
    fn pair_norm_vanishes_at_power_one() {
        let g = grid();
        let o0 = CutoffProfile::gaussian(g.clone(), [0.0, 0.0, 1.2], 0.5).unwrap();
        let v = two_photon_norm(&kernel(&g), &RepChoice::Reducible { n: 1, o0 }).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn pair_norm_saturates_at_large_power() {
        let g = grid();
        let o0 = CutoffProfile::gaussian(g.clone(), [0.0, 0.0, 1.2], 0.5).unwrap();
        let ker = kernel(&g);
        let v2 = two_photon_norm(&ker, &RepChoice::Reducible { n: 2, o0: o0.clone() }).unwrap();
        let vbig =
            two_photon_norm(&ker, &RepChoice::Reducible { n: 1_000_000, o0 }).unwrap();
        assert!((vbig - 2.0 * v2).abs() < 1e-4 * vbig);
    }

    #[test]
    fn coincident_norm_is_one_at_power_one() {
        let g = grid();
        let o0 = CutoffProfile::gaussian(g, [0.0, 0.0, 1.2], 0.5).unwrap();
        assert!((psi2_norm(1, &o0).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn coincident_norm_matches_hand_quadrature_at_power_two() {
        let g = grid();
        let o0 = CutoffProfile::uniform(g).unwrap();
        let quartic: f64 = o0
            .grid
            .cells
            .iter()
            .zip(o0.intensity())
            .map(|((_, w), i2)| w * i2 * i2)
            .sum();
        let v = psi2_norm(2, &o0).unwrap();
        assert!((v - (0.25 + 0.5 * quartic)).abs() < 1e-15);
    }

    #[test]
    fn coincident_norm_limit_is_the_quartic_integral() {
        let g = grid();
        let o0 = CutoffProfile::gaussian(g, [0.0, 0.0, 1.2], 0.4).unwrap();
        let quartic: f64 = o0
            .grid
            .cells
            .iter()
            .zip(o0.intensity())
            .map(|((_, w), i2)| w * i2 * i2)
            .sum();
        let v = psi2_norm(1_000_000, &o0).unwrap();
        assert!((v - quartic).abs() < 1e-5 * (1.0 + quartic));
    }

    #[test]
    fn scalar_norm_vanishes_for_parallel_momenta() {
        let g = LightconeGrid::from_momenta(
            &[[0.0, 0.0, 0.5], [0.0, 0.0, 1.0], [0.0, 0.0, 2.0]],
            1.0,
        )
        .unwrap();
        let o0 = CutoffProfile::uniform(g).unwrap();
        let v = scalar_norm_example(3, &o0).unwrap();
        assert!(v.abs() < 1e-24, "v = {v}");
    }

    #[test]
    fn scalar_norm_two_cell_hand_check() {
        let g = LightconeGrid::from_momenta(&[[0.0, 0.0, 1.0], [1.0, 0.0, 0.0]], 1.0).unwrap();
        let o0 = CutoffProfile::uniform(g.clone()).unwrap();
        // k·k′ = 1·1 − 0 = 1 for the off-diagonal pair, 0 on the diagonal
        let w: Vec<f64> = g.cells.iter().map(|(_, w)| *w).collect();
        let inten = o0.intensity();
        let hand = 2.0 * 0.5 * (2.0 * w[0] * w[1] * inten[0] * inten[1]);
        let v = scalar_norm_example(2, &o0).unwrap();
        assert!((v - hand).abs() < 1e-12 * (1.0 + hand.abs()), "{v} vs {hand}");
        assert_eq!(scalar_norm_example(1, &o0).unwrap(), 0.0);
    }
}
