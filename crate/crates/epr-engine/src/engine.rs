//! Detection probabilities, polarization correlation averages, and CHSH
//! functionals for the two-photon state described by an antisymmetric
//! momentum kernel.

use rayon::prelude::*;

use photon_rep::{EPRKernel, SymmetryTag};

use crate::cutoff::CutoffProfile;
use crate::error::EprError;
use crate::region::DetectorRegion;

/// Which representation the detection statistics are computed in:
/// a finite tensor power N with a vacuum profile (cutoff χ from O₀), or
/// the limit where χ ≡ 1.
#[derive(Debug, Clone)]
pub enum RepChoice {
    Reducible { n: u32, o0: CutoffProfile },
    Irreducible,
}

impl RepChoice {
    fn chi(&self, cells: usize) -> Result<Vec<f64>, EprError> {
        match self {
            RepChoice::Reducible { n, o0 } => {
                if *n < 2 {
                    return Err(EprError::BadPower { n: *n, min: 2 });
                }
                if o0.amps.len() != cells {
                    return Err(EprError::ProfileMismatch { amps: o0.amps.len(), cells });
                }
                Ok(o0.chi())
            }
            RepChoice::Irreducible => Ok(vec![1.0; cells]),
        }
    }
}

/// Precomputed cellwise detection weights s_ij = w_i w_j |ψ_ij|² χ_i χ_j
/// and their total.
pub struct DetectionWeights {
    s: Vec<Vec<f64>>,
    den: f64,
}

impl DetectionWeights {
    pub fn build(ker: &EPRKernel, rep: &RepChoice) -> Result<Self, EprError> {
        if ker.tag != SymmetryTag::Antisymmetric {
            return Err(EprError::NotAntisymmetric);
        }
        let chi = rep.chi(ker.grid.len())?;
        let m = ker.matrix()?;
        let w: Vec<f64> = ker.grid.cells.iter().map(|(_, w)| *w).collect();
        let s: Vec<Vec<f64>> = (0..w.len())
            .into_par_iter()
            .map(|i| {
                (0..w.len())
                    .map(|j| w[i] * w[j] * m[i][j].norm_sqr() * chi[i] * chi[j])
                    .collect()
            })
            .collect();
        let den = s.iter().map(|row| row.iter().sum::<f64>()).sum();
        Ok(DetectionWeights { s, den })
    }

    /// p_{Ω×Ω′} = 2 Σ_{Ω×Ω′} s / Σ_all s.
    pub fn p(&self, omega: &DetectorRegion, omegap: &DetectorRegion) -> Result<f64, EprError> {
        if self.den <= 0.0 {
            return Err(EprError::ZeroDenominator);
        }
        let mut num = 0.0;
        for (i, row) in self.s.iter().enumerate() {
            if omega.mask[i] {
                for (j, v) in row.iter().enumerate() {
                    if omegap.mask[j] {
                        num += v;
                    }
                }
            }
        }
        Ok(2.0 * num / self.den)
    }

    /// The coefficient P in E(α, β) = −cos 2(α−β)·P for regions with
    /// arbitrary overlap: with Ω₀ = Ω∩Ω′, Ω₁ = Ω−Ω₀, Ω₁′ = Ω′−Ω₀,
    ///
    /// ```text
    /// P = p_{Ω₁×Ω₁′} + p_{Ω₁×Ω₀} + p_{Ω₀×Ω₁′} − p_{Ω₀×(all−Ω₀)}.
    /// ```
    pub fn effective_p(
        &self,
        omega: &DetectorRegion,
        omegap: &DetectorRegion,
    ) -> Result<f64, EprError> {
        let o0 = omega.intersect(omegap);
        let o1 = omega.minus(&o0);
        let o1p = omegap.minus(&o0);
        Ok(self.p(&o1, &o1p)? + self.p(&o1, &o0)? + self.p(&o0, &o1p)?
            - self.p(&o0, &o0.complement())?)
    }
}

/// The probability that one photon lands in Ω and the other in Ω′.
pub fn probability_p(
    omega: &DetectorRegion,
    omegap: &DetectorRegion,
    ker: &EPRKernel,
    rep: &RepChoice,
) -> Result<f64, EprError> {
    DetectionWeights::build(ker, rep)?.p(omega, omegap)
}

/// The linear-polarization correlation average E(α, β) = −cos 2(α−β)·P
/// with P the overlap-decomposed detection coefficient (reduces to
/// −cos 2(α−β)·p_{Ω×Ω′} for disjoint regions and to
/// +cos 2(α−β)·p_{Ω×(all−Ω)} for identical ones).
pub fn epr_average(
    alpha: f64,
    beta: f64,
    omega: &DetectorRegion,
    omegap: &DetectorRegion,
    ker: &EPRKernel,
    rep: &RepChoice,
) -> Result<f64, EprError> {
    let wts = DetectionWeights::build(ker, rep)?;
    Ok(-(2.0 * (alpha - beta)).cos() * wts.effective_p(omega, omegap)?)
}

/// CHSH summary at one angle quadruple.
#[derive(Debug, Clone, Copy)]
pub struct ChshReport {
    /// max over the four sign placements of |±E₁₁ ± E₁₂ ± E₂₁ ± E₂₂|
    /// with exactly one minus sign.
    pub s: f64,
    /// S > 2.
    pub violation: bool,
    /// The coefficient P of −cos 2(α−β) for these regions.
    pub effective_p: f64,
    /// The necessary condition P > 1/√2 for any violation.
    pub necessary_condition: bool,
}

/// Evaluate the CHSH functional at angles (a₁, a₂) × (b₁, b₂).
pub fn chsh(
    a1: f64,
    a2: f64,
    b1: f64,
    b2: f64,
    omega: &DetectorRegion,
    omegap: &DetectorRegion,
    ker: &EPRKernel,
    rep: &RepChoice,
) -> Result<ChshReport, EprError> {
    let wts = DetectionWeights::build(ker, rep)?;
    let p_eff = wts.effective_p(omega, omegap)?;
    let e = |a: f64, b: f64| -(2.0 * (a - b)).cos() * p_eff;
    let es = [e(a1, b1), e(a1, b2), e(a2, b1), e(a2, b2)];
    let total: f64 = es.iter().sum();
    let s = es.iter().map(|ek| (total - 2.0 * ek).abs()).fold(0.0, f64::max);
    Ok(ChshReport {
        s,
        violation: s > 2.0,
        effective_p: p_eff,
        necessary_condition: p_eff.abs() > std::f64::consts::FRAC_1_SQRT_2,
    })
}
