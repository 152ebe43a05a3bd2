use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

use super::plus::{PlusOperator, MAX_CONDITION};
use super::space::HbSpace;
use crate::{Curve, HardyFn, Result, C64};

/// Best `H(b)` approximation errors of `f` by `P_d`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityReport {
    pub curve: Curve,
    /// Condition number of the Gram matrix of the monomials at each degree.
    pub gram_condition: Vec<f64>,
    pub ill_conditioned: Vec<bool>,
}

impl DensityReport {
    pub fn is_nonincreasing(&self, slack: f64) -> bool {
        self.curve.is_nonincreasing(slack)
    }
}

/// `min_{p in P_d} |f - p|_b` for each degree `d`.
///
/// Uses the embedding `u -> (u, u+)` into H² ⊕ H²: the least-squares problem
/// `[I; M_d] x ~ [u_{<=d}; u+_{<=d}]` is solved by QR and the tails of `u` and
/// `u+` above `d` are added back.
pub fn density_experiment(f: &HardyFn, space: &HbSpace, degrees: &[usize]) -> Result<DensityReport> {
    let top = degrees.iter().copied().max().unwrap_or(0).max(f.order());
    let op = PlusOperator::new(space.pair(), top);
    let u = f.resized(top);
    let up = op.solve(&u).plus;
    let results: Vec<(f64, f64)> = degrees
        .par_iter()
        .map(|&d| best_error(&op, &u, &up, d))
        .collect();
    let curve = Curve::new(degrees.to_vec(), results.iter().map(|r| r.0).collect());
    let gram_condition: Vec<f64> = results.iter().map(|r| r.1).collect();
    let ill_conditioned = gram_condition.iter().map(|c| *c > MAX_CONDITION).collect();
    Ok(DensityReport { curve, gram_condition, ill_conditioned })
}

fn best_error(op: &PlusOperator, u: &HardyFn, up: &HardyFn, d: usize) -> (f64, f64) {
    let n = d + 1;
    let m = op.matrix(d);
    let mut a = DMatrix::<C64>::zeros(2 * n, n);
    a.view_mut((0, 0), (n, n)).fill_with_identity();
    a.view_mut((n, 0), (n, n)).copy_from(&m);
    let mut y = DVector::<C64>::zeros(2 * n);
    for j in 0..n {
        y[j] = u.coeff(j);
        y[n + j] = up.coeff(j);
    }
    let qr = a.clone().qr();
    let rhs = qr.q().adjoint() * &y;
    let x = qr
        .r()
        .solve_upper_triangular(&rhs)
        .unwrap_or_else(|| DVector::zeros(n));
    let residual = (&y - &a * &x).norm_squared();
    let tail: f64 = u.coeffs().iter().skip(n).map(|c| c.norm_sqr()).sum::<f64>()
        + up.coeffs().iter().skip(n).map(|c| c.norm_sqr()).sum::<f64>();
    let sv = a.singular_values();
    let (smax, smin) = sv.iter().fold((0.0f64, f64::INFINITY), |(hi, lo), s| (hi.max(*s), lo.min(*s)));
    let condition = (smax / smin).powi(2);
    ((residual + tail).sqrt(), condition)
}

/// `|f - P_d f|_2` for each degree: in a model space `H(b)` with `b` inner the
/// norm is the H² norm, so the best approximation from `P_d` is truncation.
pub fn model_space_density(f: &HardyFn, degrees: &[usize]) -> Curve {
    let values = degrees
        .iter()
        .map(|&d| f.coeffs().iter().skip(d + 1).map(|c| c.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    Curve::new(degrees.to_vec(), values)
}
