//! Function theory on the annulus `q < |z| < 1`: the Schottky–Klein prime
//! function, Green's function, harmonic measure of the inner circle and
//! generalized Blaschke products.

mod blaschke;
mod green;

pub use blaschke::{
    annulus_compose_experiment, generalized_blaschke, solve_period, GeneralizedBlaschke,
    PeriodSolution, RadialAdjustment,
};
pub use green::{green_function, GreenFunction};

use crate::{Error, Result, C64};

/// Inner radii accepted by [`Annulus::new`].
pub const Q_RANGE: (f64, f64) = (0.05, 0.8);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Annulus {
    q: f64,
}

impl Annulus {
    pub fn new(q: f64) -> Result<Self> {
        if !(Q_RANGE.0..=Q_RANGE.1).contains(&q) {
            return Err(Error::InvalidParameter(format!(
                "inner radius {q} outside [{}, {}]",
                Q_RANGE.0, Q_RANGE.1
            )));
        }
        Ok(Self { q })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// Number of factor pairs keeping the prime-function tail `q^{2K}` below `1e-16`.
    pub fn truncation(&self) -> usize {
        (16.0 * std::f64::consts::LN_10 / (2.0 * (1.0 / self.q).ln())).ceil() as usize
    }

    pub fn contains(&self, z: C64) -> bool {
        let r = z.norm();
        r > self.q && r < 1.0
    }

    /// Within `tol` of the closed annulus.
    pub fn contains_closed(&self, z: C64, tol: f64) -> bool {
        let r = z.norm();
        r >= self.q - tol && r <= 1.0 + tol
    }

    pub fn prime(&self, zeta: C64) -> Result<C64> {
        prime_function(zeta, self.q, self.truncation())
    }

    /// `(r, theta)` nodes: `nr` radii strictly inside and `nt` angles.
    pub fn polar_grid(&self, nr: usize, nt: usize) -> Vec<C64> {
        let mut out = Vec::with_capacity(nr * nt);
        for i in 0..nr {
            let r = self.q + (1.0 - self.q) * (i as f64 + 0.5) / nr as f64;
            for j in 0..nt {
                out.push(C64::from_polar(r, std::f64::consts::TAU * j as f64 / nt as f64));
            }
        }
        out
    }
}

/// `P(zeta) = (1 - zeta) prod_{k=1..K} (1 - q^{2k} zeta)(1 - q^{2k} / zeta)`.
pub fn prime_function(zeta: C64, q: f64, k: usize) -> Result<C64> {
    if zeta.norm() == 0.0 {
        return Err(Error::ZeroArgument);
    }
    let q2 = q * q;
    let inv = zeta.inv();
    let mut p = 1.0 - zeta;
    let mut qk = 1.0;
    for _ in 0..k {
        qk *= q2;
        p *= (1.0 - qk * zeta) * (1.0 - qk * inv);
    }
    Ok(p)
}

/// `u(z) = log|z| / log q`: one on `|z| = q`, zero on `|z| = 1`.
pub fn harmonic_measure_inner(z: C64, annulus: &Annulus) -> Result<f64> {
    if z.norm() == 0.0 {
        return Err(Error::ZeroArgument);
    }
    if !annulus.contains_closed(z, 1e-12) {
        return Err(Error::OutsideAnnulus(z));
    }
    Ok(z.norm().ln() / annulus.q().ln())
}

/// A Laurent polynomial `sum_{k=lowest}^{highest} c_k z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentFn {
    lowest: i64,
    coeffs: Vec<C64>,
}

impl LaurentFn {
    pub fn new(lowest: i64, coeffs: Vec<C64>) -> Self {
        Self { lowest, coeffs }
    }

    pub fn zero() -> Self {
        Self::new(0, vec![])
    }

    pub fn monomial(k: i64) -> Self {
        Self::new(k, vec![C64::new(1.0, 0.0)])
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, C64)> + '_ {
        self.coeffs.iter().enumerate().map(|(i, c)| (self.lowest + i as i64, *c))
    }

    /// True if some negative power has a nonzero coefficient.
    pub fn has_negative_powers(&self) -> bool {
        self.iter().any(|(k, c)| k < 0 && c.norm() > 0.0)
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.iter().map(|(k, c)| c * z.powi(k as i32)).sum()
    }
}

/// `sqrt(|f|^2_{L2(|z|=1)} + |f|^2_{L2(|z|=q)}) = sqrt(sum |c_k|^2 (1 + q^{2k}))`
/// with normalized arclength on each circle.
pub fn annulus_norm(f: &LaurentFn, annulus: &Annulus) -> f64 {
    let q = annulus.q();
    f.iter()
        .map(|(k, c)| c.norm_sqr() * (1.0 + q.powi(2 * k as i32)))
        .sum::<f64>()
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::Sampler;
    use proptest::prelude::*;
    use rand::Rng;

    #[test]
    fn prime_function_examples() {
        let a = Annulus::new(0.3).unwrap();
        assert_eq!(a.prime(C64::new(1.0, 0.0)).unwrap(), C64::new(0.0, 0.0));
        let z = C64::new(0.4, 0.7);
        assert_eq!(prime_function(z, 0.3, 0).unwrap(), 1.0 - z);
        assert_eq!(a.prime(C64::new(0.0, 0.0)), Err(Error::ZeroArgument));
        assert!(a.q().powi(2 * a.truncation() as i32) < 1e-16);
    }

    #[test]
    fn invalid_radius() {
        assert!(Annulus::new(0.9).is_err());
        assert!(Annulus::new(0.01).is_err());
    }

    #[test]
    fn harmonic_measure_examples() {
        let a = Annulus::new(0.25).unwrap();
        let hm = |r: f64| harmonic_measure_inner(C64::from_polar(r, 0.3), &a).unwrap();
        assert!((hm(0.25) - 1.0).abs() < 1e-15);
        assert!(hm(1.0).abs() < 1e-15);
        assert!((hm(0.5) - 0.5).abs() < 1e-15);
        assert_eq!(harmonic_measure_inner(C64::new(0.0, 0.0), &a), Err(Error::ZeroArgument));
    }

    #[test]
    fn harmonic_measure_mean_value() {
        let a = Annulus::new(0.3).unwrap();
        let u = |z: C64| harmonic_measure_inner(z, &a).unwrap();
        let z = C64::new(0.45, 0.4);
        let mut prev = f64::INFINITY;
        for h in [1e-2, 5e-3, 2.5e-3] {
            let avg = (u(z + h) + u(z - h) + u(z + C64::new(0.0, h)) + u(z - C64::new(0.0, h))) / 4.0;
            let err = (avg - u(z)).abs();
            assert!(err < prev / 3.5 || err < 1e-13);
            prev = err;
        }
    }

    #[test]
    fn norm_examples() {
        let a = Annulus::new(0.4).unwrap();
        assert_eq!(annulus_norm(&LaurentFn::zero(), &a), 0.0);
        assert!((annulus_norm(&LaurentFn::monomial(0), &a) - 2f64.sqrt()).abs() < 1e-15);
        let inv = annulus_norm(&LaurentFn::monomial(-1), &a);
        assert!((inv - (1.0 + 0.4f64.powi(-2)).sqrt()).abs() < 1e-14);
    }

    proptest! {
        #[test]
        fn prime_function_identities(seed in any::<u64>()) {
            let mut s = Sampler::new(seed);
            let q = s.rng().gen_range(0.05..0.8);
            let a = Annulus::new(q).unwrap();
            let zeta = C64::from_polar(s.rng().gen_range(0.3..2.0), s.rng().gen_range(0.0..6.3));
            let p = a.prime(zeta).unwrap();
            let inv = a.prime(zeta.inv()).unwrap();
            prop_assert!((inv + p / zeta).norm() < 1e-12 * (1.0 + p.norm() / zeta.norm()));
            let shifted = a.prime(zeta * q * q).unwrap();
            prop_assert!((shifted + p / zeta).norm() < 1e-10 * (1.0 + p.norm() / zeta.norm()));
        }
    }
}
