use super::extreme::{classify_extreme, Extremality};
use crate::fejer_riesz::{abs_squared, abs_squared_difference, fejer_riesz};
use crate::rational::BoundaryZero;
use crate::{BoundaryGrid, Error, Poly, RationalFn, Result, TrigSymbol, C64};

/// Tolerance on `|a|^2 + |b|^2 = 1` and on the outer/contractive checks.
pub const PAIR_TOL: f64 = 1e-9;

/// A pair `(b, a)` with `|a|^2 + |b|^2 = 1` on the circle, `a` outer and `a(0) > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct PythagoreanPair {
    b: RationalFn,
    a: RationalFn,
    residual: f64,
}

impl PythagoreanPair {
    /// Validate a user-supplied pair.
    pub fn new(b: RationalFn, a: RationalFn) -> Result<Self> {
        if a.num().is_zero() {
            return Err(Error::InvalidPair("a vanishes identically".into()));
        }
        if a.num().degree() > 0 {
            for r in a.num().roots()? {
                if r.norm() < 1.0 - PAIR_TOL {
                    return Err(Error::InvalidPair(format!("a has a zero inside the disk at {r}")));
                }
            }
        }
        let grid = BoundaryGrid::default();
        let residual = grid
            .nodes()
            .into_iter()
            .map(|z| (a.eval(z).norm_sqr() + b.eval(z).norm_sqr() - 1.0).abs())
            .fold(0.0, f64::max);
        if residual > PAIR_TOL {
            return Err(Error::InvalidPair(format!("|a|^2 + |b|^2 - 1 reaches {residual:e}")));
        }
        let sup = b.sup_norm()?;
        if sup > 1.0 + PAIR_TOL {
            return Err(Error::NotContractive { norm: sup });
        }
        let a0 = a.eval(C64::new(0.0, 0.0));
        let a = if a0.im.abs() > 1e-14 * a0.norm() || a0.re < 0.0 {
            a.scaled(a0.conj() / a0.norm())
        } else {
            a
        };
        Ok(Self { b, a, residual })
    }

    pub fn b(&self) -> &RationalFn {
        &self.b
    }

    pub fn a(&self) -> &RationalFn {
        &self.a
    }

    /// `max | |a|^2 + |b|^2 - 1 |` over 4096 boundary nodes.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// The pair `b = z^n / p`, `a = W / p` where `W = prod (z - lambda)^m` and
    /// `|p|^2 = 1 + |W|^2`. Its space equals `M(a) = W H^2 + P_{n-1}` as a set.
    pub fn with_boundary_zeros(zeros: &[BoundaryZero]) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::NoBoundaryZeros);
        }
        for (i, x) in zeros.iter().enumerate() {
            if (x.point.norm() - 1.0).abs() > 1e-12 || x.multiplicity == 0 {
                return Err(Error::InvalidParameter(format!("bad boundary zero {}", x.point)));
            }
            for y in &zeros[..i] {
                if (x.point - y.point).norm() < 1e-8 {
                    return Err(Error::CoincidentNodes(y.point, x.point));
                }
            }
        }
        let w = divisor(zeros);
        let n = w.degree();
        let weight = abs_squared(&w);
        let one = TrigSymbol::constant(C64::new(1.0, 0.0));
        let sum: Vec<C64> = (-(n as i64)..=n as i64)
            .map(|k| weight.coeff(k) + one.coeff(k))
            .collect();
        let p = fejer_riesz(&TrigSymbol::from_laurent(&sum)?)?;
        let b = RationalFn::new(Poly::monomial(n), p.clone())?;
        let a = RationalFn::new(w, p)?;
        Self::new(b, a)
    }
}

/// `prod (z - lambda_j)^{m_j}`.
pub(crate) fn divisor(zeros: &[BoundaryZero]) -> Poly {
    let roots: Vec<C64> = zeros
        .iter()
        .flat_map(|z| std::iter::repeat(z.point).take(z.multiplicity))
        .collect();
    Poly::from_roots(&roots, C64::new(1.0, 0.0))
}

/// The outer `a` with `a(0) > 0` and `|a|^2 + |b|^2 = 1` on the circle.
///
/// With `b = q1 / q2`, `a = q / q2` where `q` is the Fejér–Riesz factor of
/// `|q2|^2 - |q1|^2`.
pub fn pythagorean_mate(b: &RationalFn) -> Result<PythagoreanPair> {
    let class = classify_extreme(b)?;
    if class.tag == Extremality::Extreme {
        return Err(Error::ExtremeSymbol);
    }
    let w = abs_squared_difference(b.den(), b.num());
    let q = fejer_riesz(&w)?;
    let a = RationalFn::new(q, b.den().clone())?;
    PythagoreanPair::new(b.clone(), a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::Sampler;
    use proptest::prelude::*;

    fn rat(num: &[f64], den: &[f64]) -> RationalFn {
        RationalFn::new(Poly::from_real(num), Poly::from_real(den)).unwrap()
    }

    fn close(p: &Poly, expected: &[f64], tol: f64) -> bool {
        let e = Poly::from_real(expected);
        (p - &e).norm() < tol
    }

    #[test]
    fn worked_mates() {
        let pair = pythagorean_mate(&rat(&[0.5, 0.5], &[1.0])).unwrap();
        assert!(close(pair.a().num(), &[0.5, -0.5], 1e-10));
        assert!(pair.residual() < 1e-12);

        let pair = pythagorean_mate(&rat(&[0.5, 0.0, 0.5], &[1.0])).unwrap();
        assert!(close(pair.a().num(), &[0.5, 0.0, -0.5], 1e-7));

        let pair = pythagorean_mate(&rat(&[0.0, 0.5], &[1.0])).unwrap();
        assert!(close(pair.a().num(), &[0.75f64.sqrt()], 1e-12));
    }

    #[test]
    fn mate_errors() {
        assert_eq!(pythagorean_mate(&rat(&[0.0, 1.0], &[1.0])), Err(Error::ExtremeSymbol));
        assert!(matches!(
            pythagorean_mate(&rat(&[0.0, 1.5], &[1.0])),
            Err(Error::NotContractive { .. })
        ));
    }

    #[test]
    fn validation_rejects_bad_pairs() {
        let b = rat(&[0.5, 0.5], &[1.0]);
        assert!(matches!(
            PythagoreanPair::new(b.clone(), rat(&[0.5, 0.5], &[1.0])),
            Err(Error::InvalidPair(_))
        ));
        // |a| right but a not outer
        assert!(matches!(
            PythagoreanPair::new(b, rat(&[-0.5 * 0.5, 0.5], &[1.0])),
            Err(Error::InvalidPair(_))
        ));
    }

    #[test]
    fn prescribed_boundary_zeros() {
        let zeros = [
            BoundaryZero { point: C64::new(1.0, 0.0), multiplicity: 2 },
            BoundaryZero { point: C64::new(0.0, 1.0), multiplicity: 1 },
        ];
        let pair = PythagoreanPair::with_boundary_zeros(&zeros).unwrap();
        assert!(pair.residual() < 1e-10);
        let found = pair.a().boundary_zeros();
        assert_eq!(found.len(), 2);
        assert_eq!(found[0].multiplicity, 2);
        assert!((found[0].point - C64::new(1.0, 0.0)).norm() < 1e-8);
        assert_eq!(found[1].multiplicity, 1);
        assert!((found[1].point - C64::new(0.0, 1.0)).norm() < 1e-8);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mate_is_pythagorean_and_outer(seed in any::<u64>()) {
            let mut s = Sampler::new(seed);
            let b = s.non_extreme_rational(4);
            let pair = pythagorean_mate(&b).unwrap();
            prop_assert!(pair.residual() < 1e-10);
            let a0 = pair.a().eval(C64::new(0.0, 0.0));
            prop_assert!(a0.re > 0.0 && a0.im.abs() < 1e-12);
            if pair.a().num().degree() > 0 {
                for r in pair.a().num().roots().unwrap() {
                    prop_assert!(r.norm() >= 1.0 - 1e-6);
                }
            }
        }
    }
}
