use nalgebra::DMatrix;

use super::pair::PythagoreanPair;
use crate::fft;
use crate::rational::series_quotient;
use crate::{HardyFn, Poly, Result, C64};

/// Above this condition estimate of `T_{conj a}` a solution is flagged as low confidence.
pub const MAX_CONDITION: f64 = 1e12;

/// `f+` with the residual of `T_{conj a} f+ = T_{conj b} f` and the condition estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct PlusSolution {
    pub plus: HardyFn,
    pub residual: f64,
    pub condition: f64,
    pub confident: bool,
}

/// The map `f -> f+` truncated at a fixed order.
///
/// On `P_N` both `T_{conj a}` and `T_{conj b}` are upper-triangular Toeplitz, so
/// `f+ = T_{conj c} f` with `c` the Taylor series of `b / a`.
#[derive(Debug, Clone)]
pub struct PlusOperator {
    order: usize,
    a: Vec<C64>,
    b: Vec<C64>,
    ratio: Vec<C64>,
}

impl PlusOperator {
    pub fn new(pair: &PythagoreanPair, order: usize) -> Self {
        let (b, a) = (pair.b(), pair.a());
        let num = (b.num() * a.den()).coeffs().to_vec();
        let den = (b.den() * a.num()).coeffs().to_vec();
        Self {
            order,
            a: a.taylor(order),
            b: b.taylor(order),
            ratio: series_quotient(&num, &den, order),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Taylor coefficients of `b / a`.
    pub fn ratio(&self) -> &[C64] {
        &self.ratio
    }

    /// `kappa_1 = (sum |a_k|)(sum |(1/a)_k|)`, both truncated at the order.
    pub fn condition(&self) -> f64 {
        let inv = series_quotient(&[C64::new(1.0, 0.0)], &self.a, self.order);
        let s: f64 = self.a.iter().map(|c| c.norm()).sum();
        let t: f64 = inv.iter().map(|c| c.norm()).sum();
        s * t
    }

    /// Solve `T_{conj a} x = T_{conj b} f` by back substitution.
    pub fn solve(&self, f: &HardyFn) -> PlusSolution {
        let f = f.resized(self.order);
        let rhs = coanalytic_apply(&self.b, f.coeffs());
        let n = self.order + 1;
        let mut x = vec![C64::new(0.0, 0.0); n];
        let a0 = self.a[0].conj();
        for j in (0..n).rev() {
            let mut s = rhs[j];
            for k in j + 1..n {
                s -= self.a[k - j].conj() * x[k];
            }
            x[j] = s / a0;
        }
        let back = coanalytic_apply(&self.a, &x);
        let residual = back
            .iter()
            .zip(&rhs)
            .map(|(u, v)| (u - v).norm_sqr())
            .sum::<f64>()
            .sqrt();
        let condition = self.condition();
        PlusSolution {
            plus: HardyFn::new(x),
            residual,
            condition,
            confident: condition <= MAX_CONDITION,
        }
    }

    /// `u+ = T_{conj c} u` via FFT correlation; `u` may have at most `order + 1` entries.
    pub fn apply_series(&self, u: &[C64]) -> Vec<C64> {
        let n = u.len();
        assert!(n <= self.order + 1, "series longer than the operator order");
        // out_j = sum_k conj(c_{k-j}) u_k = reversed convolution of reversed u with conj(c)
        let rev: Vec<C64> = u.iter().rev().copied().collect();
        let c: Vec<C64> = self.ratio[..n].iter().map(|c| c.conj()).collect();
        let conv = fft::convolve(&rev, &c);
        (0..n).map(|j| conv[n - 1 - j]).collect()
    }

    /// The matrix `M` of `f -> f+` on `P_N`: `M_{jk} = conj(c_{k-j})` for `j <= k`.
    pub fn matrix(&self, order: usize) -> DMatrix<C64> {
        assert!(order <= self.order);
        let n = order + 1;
        DMatrix::from_fn(n, n, |j, k| if j <= k { self.ratio[k - j].conj() } else { C64::new(0.0, 0.0) })
    }

    /// Gram matrix `I + M^* M` of the monomials in the `H(b)` inner product
    /// (entry `(j, k)` is `<z^k, z^j>_b`).
    pub fn gram(&self, order: usize) -> DMatrix<C64> {
        let m = self.matrix(order);
        DMatrix::identity(order + 1, order + 1) + m.adjoint() * m
    }
}

/// `T_{conj s} x` on `P_N`: `y_j = sum_{k >= j} conj(s_{k-j}) x_k`.
fn coanalytic_apply(s: &[C64], x: &[C64]) -> Vec<C64> {
    let n = x.len();
    (0..n)
        .map(|j| (j..n).map(|k| s[k - j].conj() * x[k]).sum())
        .collect()
}

pub fn plus_function(f: &HardyFn, pair: &PythagoreanPair) -> Result<PlusSolution> {
    Ok(PlusOperator::new(pair, f.order()).solve(f))
}

/// `<f, g>_b = <f, g>_2 + <f+, g+>_2`.
pub fn hb_inner(f: &HardyFn, g: &HardyFn, pair: &PythagoreanPair) -> Result<C64> {
    let order = f.order().max(g.order());
    let op = PlusOperator::new(pair, order);
    let (f, g) = (f.resized(order), g.resized(order));
    let (fp, gp) = (op.solve(&f).plus, op.solve(&g).plus);
    Ok(f.inner(&g) + fp.inner(&gp))
}

pub fn hb_norm(f: &HardyFn, pair: &PythagoreanPair) -> Result<f64> {
    Ok(hb_inner(f, f, pair)?.re.max(0.0).sqrt())
}

/// Degree of `p` against the degree of `T_{conj a} p`.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeCheck {
    pub degree: usize,
    pub image: Poly,
    pub image_degree: usize,
}

impl DegreeCheck {
    pub fn preserved(&self) -> bool {
        self.degree == self.image_degree
    }
}

/// `T_{conj a}` maps `P_n` into itself and keeps the exact degree.
pub fn degree_preservation_check(p: &Poly, pair: &PythagoreanPair) -> DegreeCheck {
    let a = pair.a().taylor(p.degree());
    let image = Poly::new(coanalytic_apply(&a, p.coeffs()));
    let scale = p.norm().max(f64::MIN_POSITIVE);
    let trimmed = image.trimmed(1e-14 * scale);
    DegreeCheck { degree: p.degree(), image_degree: trimmed.degree(), image }
}
