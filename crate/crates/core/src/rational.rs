//! Rational functions analytic on a neighbourhood of the closed unit disk.

use std::f64::consts::{PI, TAU};

use crate::poly::cluster_roots;
use crate::{BoundaryGrid, Error, Poly, Result, C64};

/// Roots of a denominator must lie at modulus above `1 + POLE_MARGIN`.
pub const POLE_MARGIN: f64 = 1e-10;
/// A numerator root counts as a boundary zero when `||lambda| - 1|` is below this.
pub const BOUNDARY_ZERO_TOL: f64 = 1e-8;
/// Roots closer than this are treated as one multiple root.
pub const ROOT_CLUSTER_RADIUS: f64 = 1e-5;

/// A zero on the unit circle with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryZero {
    pub point: C64,
    pub multiplicity: usize,
}

/// `num / den` with `den` free of zeros on the closed unit disk and common
/// factors cancelled up to tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (num, den) = cancel_common_roots(num, den);
        if den.degree() > 0 {
            for r in den.roots()? {
                if r.norm() <= 1.0 + POLE_MARGIN {
                    return Err(Error::PoleInDisk { root: r });
                }
            }
        }
        // keep the denominator's constant term real and positive
        let phase = den.coeff(0).conj() / den.coeff(0).norm();
        Ok(Self { num: num.scale(phase), den: den.scale(phase) })
    }

    pub fn polynomial(p: Poly) -> Self {
        Self { num: p, den: Poly::one() }
    }

    pub fn constant(c: C64) -> Self {
        Self::polynomial(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `max(deg num, deg den)`.
    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.num.eval(z) / self.den.eval(z)
    }

    /// Taylor coefficients `0..=order` at the origin.
    pub fn taylor(&self, order: usize) -> Vec<C64> {
        series_quotient(self.num.coeffs(), self.den.coeffs(), order)
    }

    pub fn samples(&self, grid: &BoundaryGrid) -> Vec<C64> {
        grid.sample(|z| self.eval(z))
    }

    /// Product of two rational functions (no validation needed: poles stay outside).
    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        let (num, den) = cancel_common_roots(&self.num * &other.num, &self.den * &other.den);
        Self { num, den }
    }

    pub fn scaled(&self, s: C64) -> RationalFn {
        Self { num: self.num.scale(s), den: self.den.clone() }
    }

    /// `r(z^k)`.
    pub fn compose_power(&self, k: usize) -> RationalFn {
        Self { num: self.num.compose_power(k), den: self.den.compose_power(k) }
    }

    /// `max |r|` on the circle: grid search over 4096 nodes refined by
    /// golden-section search around the largest local maxima.
    pub fn sup_norm(&self) -> Result<f64> {
        if self.den.degree() > 0 {
            for r in self.den.roots()? {
                if r.norm() <= 1.0 + POLE_MARGIN {
                    return Err(Error::PoleInDisk { root: r });
                }
            }
        }
        let n = BoundaryGrid::DEFAULT_SIZE;
        let modulus = |t: f64| self.eval(C64::from_polar(1.0, t)).norm();
        let h = TAU / n as f64;
        let vals: Vec<f64> = (0..n).map(|k| modulus(k as f64 * h)).collect();
        let mut peaks: Vec<usize> = (0..n)
            .filter(|&k| vals[k] >= vals[(k + n - 1) % n] && vals[k] >= vals[(k + 1) % n])
            .collect();
        peaks.sort_by(|&a, &b| vals[b].partial_cmp(&vals[a]).unwrap());
        peaks.truncate(4);
        let mut best = vals.iter().cloned().fold(0.0, f64::max);
        for k in peaks {
            let t = k as f64 * h;
            best = best.max(golden_max(&modulus, t - h, t + h));
        }
        Ok(best)
    }

    /// Zeros of the numerator on the unit circle, clustered by multiplicity and
    /// snapped to exact modulus one; ordered by argument in `[0, 2 pi)`.
    pub fn boundary_zeros(&self) -> Vec<BoundaryZero> {
        if self.num.degree() == 0 {
            return Vec::new();
        }
        let roots = self.num.roots().expect("nonconstant numerator");
        let mut out: Vec<BoundaryZero> = cluster_roots(&roots, ROOT_CLUSTER_RADIUS)
            .into_iter()
            .filter(|(r, _)| (r.norm() - 1.0).abs() < BOUNDARY_ZERO_TOL)
            .map(|(r, m)| BoundaryZero { point: r / r.norm(), multiplicity: m })
            .collect();
        out.sort_by(|a, b| arg_positive(a.point).partial_cmp(&arg_positive(b.point)).unwrap());
        out
    }
}

fn arg_positive(z: C64) -> f64 {
    let a = z.arg();
    if a < -1e-12 {
        a + TAU
    } else {
        a.max(0.0)
    }
}

fn golden_max(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..80 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        }
        if hi - lo < 1e-15 * PI {
            break;
        }
    }
    f1.max(f2)
}

/// Taylor coefficients `0..=order` of `num / den`; requires `den[0] != 0`.
pub(crate) fn series_quotient(num: &[C64], den: &[C64], order: usize) -> Vec<C64> {
    let d0 = den[0];
    let mut out = vec![C64::new(0.0, 0.0); order + 1];
    for k in 0..=order {
        let mut s = num.get(k).copied().unwrap_or_default();
        for j in 1..den.len().min(k + 1) {
            s -= den[j] * out[k - j];
        }
        out[k] = s / d0;
    }
    out
}

/// Cancel numerator roots that are also denominator roots.
fn cancel_common_roots(mut num: Poly, mut den: Poly) -> (Poly, Poly) {
    if num.is_zero() {
        return (num, Poly::one());
    }
    loop {
        if den.degree() == 0 || num.degree() == 0 {
            break;
        }
        let Ok(roots) = den.roots() else { break };
        let common = roots.into_iter().find(|&r| {
            let scale: f64 = num
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| c.norm() * r.norm().powi(k as i32))
                .sum();
            num.eval(r).norm() <= 1e-9 * scale
        });
        let Some(r) = common else { break };
        let factor = Poly::new(vec![-r, C64::new(1.0, 0.0)]);
        num = num.div_rem(&factor).0;
        den = den.div_rem(&factor).0;
    }
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[f64]) -> Poly {
        Poly::from_real(c)
    }

    #[test]
    fn rejects_poles_in_disk() {
        assert!(matches!(RationalFn::new(p(&[1.0]), p(&[-0.5, 1.0])), Err(Error::PoleInDisk { .. })));
        assert!(matches!(RationalFn::new(p(&[1.0]), p(&[-1.0, 1.0])), Err(Error::PoleInDisk { .. })));
        assert_eq!(RationalFn::new(p(&[1.0]), Poly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn cancels_common_factor() {
        // (z - 2)(z + 1) / (z - 2) = z + 1
        let r = RationalFn::new(p(&[-2.0, -1.0, 1.0]), p(&[-2.0, 1.0])).unwrap();
        assert_eq!(r.den().degree(), 0);
        assert!((r.eval(C64::new(0.5, 0.0)) - 1.5).norm() < 1e-14);
    }

    #[test]
    fn sup_norm_examples() {
        let z = RationalFn::polynomial(p(&[0.0, 1.0]));
        assert!((z.sup_norm().unwrap() - 1.0).abs() < 1e-12);
        let half = RationalFn::polynomial(p(&[0.5, 0.5]));
        assert!((half.sup_norm().unwrap() - 1.0).abs() < 1e-12);
        let c = RationalFn::constant(C64::new(0.5, 0.0));
        assert!((c.sup_norm().unwrap() - 0.5).abs() < 1e-15);
        // 1/(1 - 0.9z) peaks at 10 when z = 1; max between grid nodes when rotated
        let r = RationalFn::new(p(&[1.0]), Poly::new(vec![C64::new(1.0, 0.0), C64::from_polar(-0.9, 0.0007)])).unwrap();
        assert!((r.sup_norm().unwrap() - 10.0).abs() < 1e-7);
    }

    #[test]
    fn boundary_zero_examples() {
        let a = RationalFn::polynomial(p(&[0.5, -0.5]));
        assert_eq!(a.boundary_zeros(), vec![BoundaryZero { point: C64::new(1.0, 0.0), multiplicity: 1 }]);
        assert!(RationalFn::constant(C64::new(3f64.sqrt() / 2.0, 0.0)).boundary_zeros().is_empty());
        let two = RationalFn::polynomial(p(&[-1.0, 0.0, 1.0])).boundary_zeros();
        assert_eq!(two.len(), 2);
        assert!((two[0].point - 1.0).norm() < 1e-14 && (two[1].point + 1.0).norm() < 1e-14);
        let double = RationalFn::polynomial(p(&[1.0, -2.0, 1.0])).boundary_zeros();
        assert_eq!(double.len(), 1);
        assert_eq!(double[0].multiplicity, 2);
        assert!((double[0].point - 1.0).norm() < 1e-12);
    }

    #[test]
    fn taylor_of_geometric_series() {
        let r = RationalFn::new(p(&[1.0]), p(&[1.0, -0.5])).unwrap();
        let t = r.taylor(10);
        for (k, c) in t.iter().enumerate() {
            assert!((c - 0.5f64.powi(k as i32)).norm() < 1e-15);
        }
    }
}
