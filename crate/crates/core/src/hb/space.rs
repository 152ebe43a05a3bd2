use super::pair::{divisor, PythagoreanPair};
use crate::rational::BoundaryZero;
use crate::{Curve, Error, HardyFn, Poly, Result, C64};

/// A non-extreme rational `H(b)` space with the boundary zeros of its mate.
#[derive(Debug, Clone)]
pub struct HbSpace {
    pair: PythagoreanPair,
    zeros: Vec<BoundaryZero>,
    divisor: Poly,
    order: usize,
}

impl HbSpace {
    pub const DEFAULT_ORDER: usize = 256;

    pub fn new(pair: PythagoreanPair, order: usize) -> Result<Self> {
        let zeros = pair.a().boundary_zeros();
        for (i, x) in zeros.iter().enumerate() {
            for y in &zeros[..i] {
                if (x.point - y.point).norm() < 1e-8 {
                    return Err(Error::CoincidentNodes(y.point, x.point));
                }
            }
        }
        let divisor = divisor(&zeros);
        Ok(Self { pair, zeros, divisor, order })
    }

    pub fn pair(&self) -> &PythagoreanPair {
        &self.pair
    }

    pub fn zeros(&self) -> &[BoundaryZero] {
        &self.zeros
    }

    /// Total multiplicity `n` of the boundary zeros.
    pub fn n(&self) -> usize {
        self.zeros.iter().map(|z| z.multiplicity).sum()
    }

    /// `W = prod (z - lambda_j)^{m_j}`.
    pub fn divisor(&self) -> &Poly {
        &self.divisor
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// `f = W g + p` with `g` in H² and `p` in `P_{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub g: HardyFn,
    pub p: Poly,
    /// `|W g + p - f|_2`.
    pub residual: f64,
}

impl Decomposition {
    /// Largest of `|f^(k)(lambda) - p^(k)(lambda)| / (1 + |f^(k)(lambda)|)` over the
    /// zeros and `k < m`.
    pub fn interpolation_defect(&self, f: &HardyFn, space: &HbSpace) -> f64 {
        let mut fd = f.to_poly();
        let mut pd = self.p.clone();
        let top = space.zeros().iter().map(|z| z.multiplicity).max().unwrap_or(0);
        let mut worst: f64 = 0.0;
        for k in 0..top {
            for z in space.zeros().iter().filter(|z| z.multiplicity > k) {
                let fv = fd.eval(z.point);
                worst = worst.max((fv - pd.eval(z.point)).norm() / (1.0 + fv.norm()));
            }
            fd = fd.derivative();
            pd = pd.derivative();
        }
        worst
    }
}

/// Divide by `W`; the remainder is the Hermite interpolant of `f` at the zeros.
pub fn decompose(f: &HardyFn, space: &HbSpace) -> Result<Decomposition> {
    if space.n() == 0 {
        return Err(Error::NoBoundaryZeros);
    }
    let fp = f.to_poly();
    let (q, r) = fp.div_rem(space.divisor());
    let back = &(space.divisor() * &q) + &r;
    let residual = (&back - &fp).norm();
    Ok(Decomposition { g: HardyFn::from(&q), p: r, residual })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    In,
    OutOfSpace,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipConfig {
    /// Relative change of `|g|` over the final doubling that counts as stable.
    pub stabilization_tol: f64,
    /// Ratio of consecutive `|g|` above which growth counts as divergence.
    pub growth_ratio: f64,
}

impl Default for MembershipConfig {
    fn default() -> Self {
        Self { stabilization_tol: 1e-6, growth_ratio: 1.05 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MembershipReport {
    pub verdict: Membership,
    /// `|g_N|_2` against the truncation order `N`.
    pub curve: Curve,
}

/// Decide whether the series with coefficients `coeff(k)` lies in `H(b)` from
/// the behaviour of `|g_N|` as the truncation order doubles.
pub fn membership(
    coeff: impl Fn(usize) -> C64,
    space: &HbSpace,
    orders: &[usize],
    config: MembershipConfig,
) -> Result<MembershipReport> {
    if orders.len() < 2 {
        return Err(Error::InvalidParameter("membership needs at least two orders".into()));
    }
    let mut values = Vec::with_capacity(orders.len());
    for &n in orders {
        let f = HardyFn::from_series(n, &coeff);
        values.push(decompose(&f, space)?.g.h2_norm());
    }
    let curve = Curve::new(orders.to_vec(), values);
    let verdict = verdict(&curve, config);
    Ok(MembershipReport { verdict, curve })
}

fn verdict(curve: &Curve, config: MembershipConfig) -> Membership {
    let v = &curve.values;
    let n = v.len();
    if v[n - 1] == 0.0 && v[n - 2] == 0.0 {
        return Membership::In;
    }
    if curve.final_relative_growth().is_some_and(|g| g.abs() < config.stabilization_tol) {
        return Membership::In;
    }
    let ratios = curve.ratios();
    let tail = &ratios[ratios.len().saturating_sub(2)..];
    if tail.iter().all(|r| *r > config.growth_ratio) {
        return Membership::OutOfSpace;
    }
    Membership::Inconclusive
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hb::pythagorean_mate;
    use crate::sampling::Sampler;
    use crate::RationalFn;
    use proptest::prelude::*;

    fn half_space() -> HbSpace {
        let b = RationalFn::new(Poly::from_real(&[0.5, 0.5]), Poly::one()).unwrap();
        HbSpace::new(pythagorean_mate(&b).unwrap(), HbSpace::DEFAULT_ORDER).unwrap()
    }

    #[test]
    fn zeros_of_the_mate() {
        let s = half_space();
        assert_eq!(s.n(), 1);
        assert!((s.zeros()[0].point - 1.0).norm() < 1e-12);
    }

    #[test]
    fn decompose_examples() {
        let s = half_space();
        let d = decompose(&HardyFn::from_real(&[1.0]), &s).unwrap();
        assert!(d.g.h2_norm() < 1e-14);
        assert!((d.p.coeff(0) - 1.0).norm() < 1e-14);
        let d = decompose(&HardyFn::from_real(&[0.0, 0.0, 1.0]), &s).unwrap();
        // z^2 = (z - 1)(z + 1) + 1
        assert!((d.g.coeff(0) - 1.0).norm() < 1e-14 && (d.g.coeff(1) - 1.0).norm() < 1e-14);
        assert!((d.p.coeff(0) - 1.0).norm() < 1e-14);
        assert!(d.residual < 1e-14);
    }

    #[test]
    fn no_boundary_zeros() {
        let b = RationalFn::new(Poly::from_real(&[0.0, 0.5]), Poly::one()).unwrap();
        let s = HbSpace::new(pythagorean_mate(&b).unwrap(), 16).unwrap();
        assert_eq!(decompose(&HardyFn::monomial(1), &s), Err(Error::NoBoundaryZeros));
    }

    #[test]
    fn membership_verdicts() {
        let s = half_space();
        let orders = [64, 128, 256, 512, 1024];
        let inside = membership(
            |k| C64::new(0.5f64.powi(k as i32), 0.0),
            &s,
            &orders,
            MembershipConfig::default(),
        )
        .unwrap();
        assert_eq!(inside.verdict, Membership::In);
        let outside = membership(
            |k| C64::new(1.0 / (k + 1) as f64, 0.0),
            &s,
            &orders,
            MembershipConfig::default(),
        )
        .unwrap();
        assert_eq!(outside.verdict, Membership::OutOfSpace);
        for r in outside.curve.ratios() {
            assert!(r > 1.35 && r < 1.5, "{r}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn decomposition_reconstructs_and_interpolates(seed in any::<u64>()) {
            let mut s = Sampler::new(seed);
            let zeros = s.boundary_zeros(3);
            let pair = PythagoreanPair::with_boundary_zeros(&zeros).unwrap();
            let space = HbSpace::new(pair, 64).unwrap();
            let f = s.hardy(20);
            let d = decompose(&f, &space).unwrap();
            prop_assert!(d.residual <= 1e-10 * f.h2_norm().max(1.0));
            prop_assert!(d.p.degree() < space.n() || d.p.is_zero());
            prop_assert!(d.interpolation_defect(&f, &space) < 1e-8);
        }
    }
}
