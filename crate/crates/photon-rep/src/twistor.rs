//! Spin-frame partners built from a reference unit timelike vector R:
//!
//! ```text
//! ω_A(R, k) = R_{AA′} π̄^{A′}(k) / (R·k),
//! ```
//!
//! which satisfies ω_A π^A = 1 automatically (R_{AA′} π^A π̄^{A′} = R·k)
//! and transforms with the conjugate of the π-field phase:
//! L·ω(Λ⁻¹R, Λ⁻¹k) = e^{−iΘ(Λ,k)} ω(R, k).

use spinor_core::{vector_to_hermitian, FourVector, TwoSpinor, C64};

use crate::error::PhotonError;
use crate::momentum::NullMomentum;
use crate::pi::pi_of_k;

/// ω(R, k) for a future unit timelike R (R·R = 1 within 1e−8, R⁰ > 0).
pub fn twistor_omega(r: &FourVector, k: &NullMomentum) -> Result<TwoSpinor, PhotonError> {
    let n2 = r.norm2();
    if (n2 - 1.0).abs() > 1e-8 || r.t <= 0.0 {
        return Err(PhotonError::NonTimelikeR(n2));
    }
    let rk = r.dot(&k.k);
    if rk <= 0.0 {
        return Err(PhotonError::NonTimelikeR(n2));
    }
    let pi = pi_of_k(k)?;
    let h = vector_to_hermitian(r); // R^{BB′}
    let eps = [[0.0, 1.0], [-1.0, 0.0]]; // ε_{BA}
    // R_{AA′} = ε_{BA} ε_{B′A′} R^{BB′}
    let mut r_low = [[C64::new(0.0, 0.0); 2]; 2];
    for a in 0..2 {
        for ap in 0..2 {
            let mut s = C64::new(0.0, 0.0);
            for b in 0..2 {
                for bp in 0..2 {
                    s += eps[b][a] * eps[bp][ap] * h[(b, bp)];
                }
            }
            r_low[a][ap] = s;
        }
    }
    let pib = [pi.c0.conj(), pi.c1.conj()]; // π̄^{A′}
    let low = [
        (r_low[0][0] * pib[0] + r_low[0][1] * pib[1]) / rk,
        (r_low[1][0] * pib[0] + r_low[1][1] * pib[1]) / rk,
    ];
    Ok(TwoSpinor::from_lowered(low))
}
