//! The ω/π splitting of a massive momentum into two null directions:
//! p = π π̄ + (m²/2) ω ω̄ with ω_A π^A = 1.

use spinor_core::{contract, vector_to_hermitian, FourVector, TwoSpinor, C64};

use crate::error::MassiveError;
use crate::momentum::MassiveMomentum;

/// The momentum-dependent spin-frame (ω(p), π(p)).
#[derive(Debug, Clone, Copy)]
pub struct OmegaFrame {
    pub omega: TwoSpinor,
    pub pi: TwoSpinor,
    pub p: MassiveMomentum,
}

/// Normalize a null direction τ against p: ω = τ/√(p·t) with t the flagpole
/// of τ, so that p·(ω ω̄) = 1.
pub fn omega_from_tau(tau: &TwoSpinor, p: &MassiveMomentum) -> Result<TwoSpinor, MassiveError> {
    if tau.norm() == 0.0 {
        return Err(MassiveError::ZeroSpinor);
    }
    let pt = p.p.dot(&tau.flagpole());
    // p future-timelike and t null future-pointing force p·t > 0.
    debug_assert!(pt > 0.0);
    Ok(tau.scale(C64::new(1.0 / pt.sqrt(), 0.0)))
}

/// The unique spin-partner π^A = p^{AB′} ω̄_{B′} of a p-normalized ω.
///
/// The returned frame satisfies ω_A π^A = 1 and the reconstruction identity
/// π π̄ + (m²/2) ω ω̄ = p.
pub fn pi_partner(omega: &TwoSpinor, p: &MassiveMomentum) -> Result<OmegaFrame, MassiveError> {
    let norm_defect = (p.p.dot(&omega.flagpole()) - 1.0).abs();
    if norm_defect > 1e-8 {
        return Err(MassiveError::BadNormalization(norm_defect));
    }
    let h = vector_to_hermitian(&p.p); // h[A][B′] = p^{AB′}
    let wbar_low = omega.conj().lowered(); // ω̄_{B′}
    let pi = TwoSpinor::new(
        h[(0, 0)] * wbar_low[0] + h[(0, 1)] * wbar_low[1],
        h[(1, 0)] * wbar_low[0] + h[(1, 1)] * wbar_low[1],
    );
    Ok(OmegaFrame { omega: *omega, pi, p: *p })
}

/// Invert the splitting: recover ω from π via p_{AC′} π^A = (m²/2) ω̄_{C′}.
pub fn omega_from_pi(pi: &TwoSpinor, p: &MassiveMomentum) -> Result<TwoSpinor, MassiveError> {
    if p.m <= 0.0 {
        return Err(MassiveError::MasslessUnsupported);
    }
    let h = vector_to_hermitian(&p.p); // p^{AB′}
    // Lower both indices: p_{AC′} = ε_{BA} ε_{B′C′} p^{BB′}, i.e. contract
    // each index with the ε-matrix on the right.
    let eps = [[C64::new(0.0, 0.0), C64::new(1.0, 0.0)], [C64::new(-1.0, 0.0), C64::new(0.0, 0.0)]];
    let mut p_low = [[C64::new(0.0, 0.0); 2]; 2];
    for a in 0..2 {
        for c in 0..2 {
            for b in 0..2 {
                for bp in 0..2 {
                    p_low[a][c] += eps[b][a] * eps[bp][c] * h[(b, bp)];
                }
            }
        }
    }
    // ω̄_{C′} = (2/m²) p_{AC′} π^A
    let s = 2.0 / (p.m * p.m);
    let wbar_low = [
        s * (p_low[0][0] * pi.c0 + p_low[1][0] * pi.c1),
        s * (p_low[0][1] * pi.c0 + p_low[1][1] * pi.c1),
    ];
    Ok(TwoSpinor::from_lowered([wbar_low[0].conj(), wbar_low[1].conj()]))
}

/// π π̄ + (m²/2) ω ω̄ — equals p for every consistent frame.
pub fn reconstruct_momentum(frame: &OmegaFrame) -> FourVector {
    let m2 = frame.p.m * frame.p.m;
    frame.pi.flagpole() + (m2 / 2.0) * frame.omega.flagpole()
}

impl OmegaFrame {
    /// Build the frame from a seed null direction τ.
    pub fn from_tau(tau: &TwoSpinor, p: &MassiveMomentum) -> Result<Self, MassiveError> {
        let omega = omega_from_tau(tau, p)?;
        pi_partner(&omega, p)
    }

    /// |ω_A π^A − 1|, the frame-normalization residual.
    pub fn normalization_residual(&self) -> f64 {
        (contract(&self.omega, &self.pi) - C64::new(1.0, 0.0)).norm()
    }

    /// ∞-norm of π π̄ + (m²/2) ω ω̄ − p.
    pub fn reconstruction_residual(&self) -> f64 {
        (reconstruct_momentum(self) - self.p.p).amax()
    }
}
