//! Delta-sequences that are regular at zero: compactly supported bumps
//! whose value at the origin is a free parameter while the integral stays
//! exactly 1, together with their Fourier transforms, convolutions,
//! ordered-limit calculus, measure-weighted variants, and plane-wave
//! normalization checks.

pub mod convolve;
pub mod error;
pub mod fourier;
pub mod shape;
pub mod sift;

pub use convolve::{convolve_integral, delta_convolve};
pub use error::DeltaError;
pub use fourier::{delta_hat, delta_hat_quadrature, plane_wave};
pub use shape::{delta_eval, integrate_against, square_integral, total_integral, DeltaParams};
pub use sift::{
    aitken_limit, measure_delta, ordered_limit, plane_wave_norm, sifting_test, SiftingTable,
};
