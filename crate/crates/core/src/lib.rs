//! Numerical de Branges–Rovnyak spaces on the disk and the annulus.
//!
//! The crate is organised bottom-up:
//!
//! * [`boundary`]: uniform grids on the unit circle, Fourier analysis, the Riesz
//!   projection and Toeplitz operators.
//! * [`poly`], [`rational`] and [`fejer_riesz`]: complex polynomials, rational
//!   symbols, root finding and spectral factorization of nonnegative
//!   trigonometric polynomials.
//! * [`hardy`]: truncated elements of the Hardy space H² of the disk.
//! * [`hb`]: Pythagorean pairs, the H(b) inner product, the defect-operator norm,
//!   the structural decomposition for rational pairs, the isometry `J` and
//!   polynomial density experiments.
//! * [`composition`]: disk automorphisms, finite Blaschke products and
//!   composition-operator probes.
//! * [`annulus`]: prime function, Green's function, harmonic measure and
//!   generalized Blaschke products on a circular annulus.
//!
//! Everything is immutable after construction and safe to share across threads.

pub mod annulus;
pub mod boundary;
pub mod composition;
pub mod curve;
mod error;
pub mod expr;
pub mod fejer_riesz;
mod fft;
pub mod hardy;
pub mod hb;
pub mod poly;
pub mod rational;
pub mod sampling;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;

pub use boundary::{BoundaryGrid, FourierCoeffs, TrigSymbol};
pub use curve::Curve;
pub use hardy::HardyFn;
pub use poly::Poly;
pub use rational::RationalFn;

/// Coefficients with modulus below this are reported as zero.
pub const REPORT_THRESHOLD: f64 = 1e-14;
