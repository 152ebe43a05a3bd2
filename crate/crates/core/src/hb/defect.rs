use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::{Error, HardyFn, RationalFn, Result, C64};

/// Eigenvalues of the compressed defect operator at or below this are treated as zero.
pub const EIGEN_CUTOFF: f64 = 1e-14;
/// Relative residual above which `f` is reported outside the range of `D^{1/2}`.
pub const RANGE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DefectNorm {
    pub norm: f64,
    /// `|f - D^{1/2} u| / |f|` for the minimal-norm preimage `u`.
    pub residual: f64,
}

/// Norms at orders `N` and `2N` and their two-level extrapolation.
///
/// The compressed norm converges like the reciprocal of the matrix size, so the
/// squared norms are combined as `(m2 E2 - m1 E1) / (m2 - m1)` with `m = N + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtrapolatedNorm {
    pub coarse: DefectNorm,
    pub fine: DefectNorm,
    pub norm: f64,
}

/// `D = I - T_b T_b^*` compressed to `P_N` with its eigendecomposition.
#[derive(Debug, Clone)]
pub struct DefectOracle {
    order: usize,
    values: Vec<f64>,
    vectors: DMatrix<C64>,
}

impl DefectOracle {
    pub fn new(b: &RationalFn, order: usize) -> Self {
        let n = order + 1;
        let t = b.taylor(order);
        // (T T*)_{jk} = b_j conj(b_k) + (T T*)_{j-1,k-1}
        let mut d = DMatrix::<C64>::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                let prev = if j > 0 && k > 0 { d[(j - 1, k - 1)] } else { C64::new(0.0, 0.0) };
                d[(j, k)] = prev + t[j] * t[k].conj();
            }
        }
        let d = DMatrix::<C64>::identity(n, n) - d;
        let (values, vectors) = if t.iter().all(|c| c.im == 0.0) {
            let eig = SymmetricEigen::new(d.map(|c| c.re));
            (eig.eigenvalues.iter().copied().collect(), eig.eigenvectors.map(|x| C64::new(x, 0.0)))
        } else {
            let eig = SymmetricEigen::new(d);
            (eig.eigenvalues.iter().copied().collect(), eig.eigenvectors)
        };
        Self { order, values, vectors }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.values
    }

    /// Norm of the minimal-norm preimage `u` of `f` under `D^{1/2}`.
    pub fn norm(&self, f: &HardyFn) -> Result<DefectNorm> {
        if f.order() > self.order && f.coeffs()[self.order + 1..].iter().any(|c| c.norm() > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "function of order {} exceeds oracle order {}",
                f.order(),
                self.order
            )));
        }
        let f = f.resized(self.order);
        let x = DVector::from_column_slice(f.coeffs());
        let proj = self.vectors.adjoint() * &x;
        let (mut kept, mut dropped) = (0.0, 0.0);
        for (lambda, p) in self.values.iter().zip(proj.iter()) {
            if *lambda > EIGEN_CUTOFF {
                kept += p.norm_sqr() / lambda;
            } else {
                dropped += p.norm_sqr();
            }
        }
        let fnorm = f.h2_norm();
        let residual = if fnorm > 0.0 { dropped.sqrt() / fnorm } else { 0.0 };
        if residual > RANGE_TOL {
            return Err(Error::OutsideRange { residual });
        }
        Ok(DefectNorm { norm: kept.sqrt(), residual })
    }
}

/// Norms at `order` and `2 order` and the extrapolated value.
pub fn defect_norm_oracle(f: &HardyFn, b: &RationalFn, order: usize) -> Result<ExtrapolatedNorm> {
    let coarse = DefectOracle::new(b, order).norm(f)?;
    let fine = DefectOracle::new(b, 2 * order).norm(f)?;
    Ok(extrapolate(order, coarse, fine))
}

pub(crate) fn extrapolate(order: usize, coarse: DefectNorm, fine: DefectNorm) -> ExtrapolatedNorm {
    let (m1, m2) = ((order + 1) as f64, (2 * order + 1) as f64);
    let e = (m2 * fine.norm.powi(2) - m1 * coarse.norm.powi(2)) / (m2 - m1);
    ExtrapolatedNorm { coarse, fine, norm: e.max(0.0).sqrt() }
}
