//! de Branges–Rovnyak spaces `H(b)` for rational `b`.
//!
//! For non-extreme `b` with Pythagorean mate `a`, an element `f` of `H(b)` has a
//! companion `f+` in H² determined by `T_{conj b} f = T_{conj a} f+`, and
//! `<f, g>_b = <f, g>_2 + <f+, g+>_2`. On polynomials both Toeplitz operators
//! are upper-triangular Toeplitz matrices, so truncations at order `N` are exact.

mod defect;
mod density;
mod extreme;
mod isometry;
mod pair;
mod plus;
mod space;

pub use defect::{defect_norm_oracle, DefectNorm, DefectOracle, ExtrapolatedNorm};
pub use density::{density_experiment, model_space_density, DensityReport};
pub use extreme::{classify_extreme, ExtremeClass, Extremality};
pub use isometry::{complement_inner, isometry_j, JImage, DEFAULT_SUPPORT_DELTA};
pub use pair::{pythagorean_mate, PythagoreanPair, PAIR_TOL};
pub use plus::{
    degree_preservation_check, hb_inner, hb_norm, plus_function, DegreeCheck, PlusOperator,
    PlusSolution, MAX_CONDITION,
};
pub use space::{
    decompose, membership, Decomposition, HbSpace, Membership, MembershipConfig,
    MembershipReport,
};
