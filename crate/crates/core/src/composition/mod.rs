//! Composition operators `f -> f o phi` for disk automorphisms and finite
//! Blaschke products, and probes of their norms on `H(b)`.

mod blaschke;
mod mobius;
mod probe;

pub use blaschke::{blaschke_boundary_interp, FiniteBlaschke, INTERP_TOL};
pub use mobius::{MobiusClass, MobiusMap};
pub use probe::{
    cross_norm_probe, cross_space_experiment, operator_norm_probe, structure_check,
    CrossSpaceReport, NormProbe, StructureCheck,
};

use crate::boundary::analyze;
use crate::{BoundaryGrid, Error, HardyFn, Result, C64};

/// Largest grid tried by [`compose`].
pub const MAX_GRID: usize = 1 << 22;
/// Relative size of the aliased tail accepted by [`compose`].
pub const ALIAS_TOL: f64 = 1e-13;

/// An analytic self-map of the closed unit disk.
pub trait DiskSelfMap: Sync {
    fn eval(&self, z: C64) -> C64;

    /// Rational degree, used to size sampling grids.
    fn degree(&self) -> usize;
}

/// Taylor coefficients of `f o phi`.
///
/// `f` is evaluated at `phi` on a boundary grid and transformed; the grid doubles
/// until the negative modes (the aliased tail of an analytic function) fall
/// below `ALIAS_TOL` relative to the total. Coefficients below
/// `1e-16` of the norm are dropped from the end.
pub fn compose(f: &HardyFn, phi: &dyn DiskSelfMap) -> Result<HardyFn> {
    let bandwidth = (f.order() * phi.degree().max(1) + 1).max(16);
    let mut size = (4 * bandwidth).next_power_of_two();
    loop {
        let grid = BoundaryGrid::new(size)?;
        let samples = grid.sample(|z| f.evaluate(phi.eval(z)));
        let spectrum = analyze(&grid, &samples)?;
        let (mut neg, mut total) = (0.0, 0.0);
        for (k, c) in spectrum.iter() {
            let e = c.norm_sqr();
            total += e;
            if k < 0 {
                neg += e;
            }
        }
        if neg <= (ALIAS_TOL * ALIAS_TOL) * total.max(f64::MIN_POSITIVE) || total == 0.0 {
            let coeffs: Vec<C64> = (0..(size / 2) as i64).map(|k| spectrum.coeff(k)).collect();
            let cut = 1e-16 * total.sqrt();
            let last = coeffs.iter().rposition(|c| c.norm() > cut).unwrap_or(0);
            return Ok(HardyFn::new(coeffs[..=last].to_vec()));
        }
        if size >= MAX_GRID {
            return Err(Error::Aliasing { size, required: 2 * size });
        }
        size *= 2;
    }
}
