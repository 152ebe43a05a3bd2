use thiserror::Error;

use crate::C64;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grid size mismatch: expected {expected} samples, got {got}")]
    GridMismatch { expected: usize, got: usize },
    #[error("grid size {0} is not a power of two")]
    GridNotPowerOfTwo(usize),
    #[error("a grid of {size} nodes aliases data of bandwidth {required}")]
    Aliasing { size: usize, required: usize },
    #[error("a constant polynomial has no roots")]
    ConstantPolynomial,
    #[error("weight is not real-valued (coefficient asymmetry {asymmetry:e})")]
    NonRealWeight { asymmetry: f64 },
    #[error("weight is negative on the circle (minimum {min:e})")]
    NegativeWeight { min: f64 },
    #[error("weight vanishes identically")]
    ZeroWeight,
    #[error("denominator vanishes in the closed unit disk (root {root})")]
    PoleInDisk { root: C64 },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("sup norm {norm} exceeds 1")]
    NotContractive { norm: f64 },
    #[error("symbol is an extreme point of the unit ball; it has no Pythagorean mate")]
    ExtremeSymbol,
    #[error("not a Pythagorean pair: {0}")]
    InvalidPair(String),
    #[error("system is ill-conditioned (condition number {condition:e})")]
    IllConditioned { condition: f64 },
    #[error("the mate has no zeros on the circle")]
    NoBoundaryZeros,
    #[error("interpolation nodes {0} and {1} coincide")]
    CoincidentNodes(C64, C64),
    #[error("function lies outside the range of the defect root (relative residual {residual:e})")]
    OutsideRange { residual: f64 },
    #[error("the set where |b| < 1 - {delta:e} is empty")]
    EmptySupport { delta: f64 },
    #[error("fixed points coincide")]
    CoincidentFixedPoints,
    #[error("map does not send the disk into itself (max boundary modulus {max_modulus})")]
    NotSelfMap { max_modulus: f64 },
    #[error("boundary interpolation did not converge (best residual {residual:e})")]
    InterpolationFailed { residual: f64 },
    #[error("Blaschke product does not map the target zeros onto the source zeros (residual {residual:e})")]
    HypothesisViolated { residual: f64 },
    #[error("point {0} lies outside the annulus")]
    OutsideAnnulus(C64),
    #[error("evaluation at the pole")]
    AtPole,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("generalized Blaschke product is multivalued (period {period})")]
    Multivalued { period: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
