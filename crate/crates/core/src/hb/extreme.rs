use crate::fejer_riesz::{abs_squared, abs_squared_difference, boundary_zeros_of_weight};
use crate::{BoundaryGrid, Error, RationalFn, Result};

/// Slack allowed above one in `||b||_inf <= 1`.
pub const SUP_SLACK: f64 = 1e-10;
/// Nodes closer than this to a zero of `1 - |b|^2` are left out of the log integral.
pub const LOG_EXCLUSION_RADIUS: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremality {
    Extreme,
    NonExtreme,
}

/// Classification of `b` with the quadrature of `log(1 - |b|^2)` over the circle
/// as a diagnostic (`-inf` for extreme `b`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremeClass {
    pub tag: Extremality,
    pub diagnostic: f64,
}

/// Decide whether `b` is an extreme point of the unit ball of `H^inf`.
///
/// For rational `b = q1/q2` this holds exactly when `|q2|^2 - |q1|^2` vanishes
/// identically on the circle; that is decided on the Laurent coefficients, not
/// by quadrature.
pub fn classify_extreme(b: &RationalFn) -> Result<ExtremeClass> {
    let sup = b.sup_norm()?;
    if sup > 1.0 + SUP_SLACK {
        return Err(Error::NotContractive { norm: sup });
    }
    let defect = abs_squared_difference(b.den(), b.num());
    let den_sq = abs_squared(b.den());
    let m = den_sq.degree() as i64;
    let scale: f64 = (-m..=m).map(|k| den_sq.coeff(k).norm()).sum();
    let d = defect.degree() as i64;
    let largest = (-d..=d).map(|k| defect.coeff(k).norm()).fold(0.0, f64::max);
    if largest <= 1e-10 * scale {
        return Ok(ExtremeClass { tag: Extremality::Extreme, diagnostic: f64::NEG_INFINITY });
    }

    let zeros = boundary_zeros_of_weight(&defect)?;
    let grid = BoundaryGrid::default();
    let mut sum = 0.0;
    for k in 0..grid.size() {
        let z = grid.node(k);
        if zeros.iter().any(|zero| (zero.point - z).norm() < LOG_EXCLUSION_RADIUS) {
            continue;
        }
        let value = defect.eval(z).re / b.den().eval(z).norm_sqr();
        sum += value.max(f64::MIN_POSITIVE).ln();
    }
    Ok(ExtremeClass { tag: Extremality::NonExtreme, diagnostic: sum * grid.weight() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;

    fn rat(num: &[f64], den: &[f64]) -> RationalFn {
        RationalFn::new(Poly::from_real(num), Poly::from_real(den)).unwrap()
    }

    #[test]
    fn examples() {
        let z = classify_extreme(&rat(&[0.0, 1.0], &[1.0])).unwrap();
        assert_eq!(z.tag, Extremality::Extreme);
        assert_eq!(z.diagnostic, f64::NEG_INFINITY);

        // 1 - |b|^2 = |1 - z|^2 / 4: integral of log|1 - e^it|^2 vanishes, leaving log(1/4)
        let half = classify_extreme(&rat(&[0.5, 0.5], &[1.0])).unwrap();
        assert_eq!(half.tag, Extremality::NonExtreme);
        assert!((half.diagnostic - 0.25f64.ln()).abs() < 1e-2);

        let small = classify_extreme(&rat(&[0.0, 0.5], &[1.0])).unwrap();
        assert_eq!(small.tag, Extremality::NonExtreme);
        assert!((small.diagnostic - 0.75f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn blaschke_factor_is_extreme() {
        // (z - 1/2) / (1 - z/2)
        let b = rat(&[-0.5, 1.0], &[1.0, -0.5]);
        assert_eq!(classify_extreme(&b).unwrap().tag, Extremality::Extreme);
    }

    #[test]
    fn rejects_non_contractive() {
        let b = rat(&[0.0, 1.5], &[1.0]);
        assert!(matches!(classify_extreme(&b), Err(Error::NotContractive { .. })));
    }
}
