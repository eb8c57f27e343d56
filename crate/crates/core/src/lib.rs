//! Bargmann transform on finite Hermite expansions and sampled functions,
//! Fock-space geometry, the Gaussian-window STFT bridge, and detection /
//! reduction of radially symmetric elements.
//!
//! The core math is generic over the floating-point scalar through the
//! [`Scalar`] trait; `*64` aliases at the crate root pin everything to `f64`
//! for ordinary use.

pub mod error;
pub mod fock;
pub mod hermite;
pub mod io;
pub mod multi_index;
pub mod quadrature;
pub mod radial;
pub mod scalar;
pub mod special;
pub mod stft;

pub use error::{Error, NotRadial};
pub use multi_index::MultiIndex;
pub use scalar::Scalar;

/// Default degree cap for expansions; keeps polydisc evaluation
/// well-conditioned in double precision.
pub const DEFAULT_DEGREE_CAP: u32 = 64;

pub type Complex64 = num_complex::Complex<f64>;

pub type QuadratureRule64 = quadrature::QuadratureRule<f64>;
pub type HermiteExpansion64 = hermite::HermiteExpansion<f64>;
pub type FockSeries64 = fock::FockSeries<f64>;
pub type SampledFunction64 = fock::SampledFunction<f64>;
pub type ComplexPoint64 = fock::ComplexPoint<f64>;
pub type PhasePoint64 = stft::PhasePoint<f64>;
pub type RadialProfile64 = radial::RadialProfile<f64>;
pub type RadialReport64 = radial::RadialReport<f64>;
pub type OrthogonalMatrix64 = radial::OrthogonalMatrix<f64>;
