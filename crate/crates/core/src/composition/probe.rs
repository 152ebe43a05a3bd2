use nalgebra::DMatrix;
use rayon::prelude::*;

use super::{compose, DiskSelfMap, FiniteBlaschke, ALIAS_TOL, INTERP_TOL};
use crate::boundary::analyze;
use crate::curve::PLATEAU_TOL;
use crate::hb::{decompose, hb_norm, HbSpace, PlusOperator, MAX_CONDITION};
use crate::{BoundaryGrid, Curve, Error, HardyFn, Result, C64};

/// Largest grid used to expand the powers `phi^k`.
const MAX_PROBE_GRID: usize = 1 << 18;

/// Lower bounds `|C_phi restricted to P_N|` for a list of orders `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormProbe {
    pub curve: Curve,
    /// Condition number of the Gram matrix of `1, z, .., z^N` in the source norm.
    pub gram_condition: Vec<f64>,
    pub ill_conditioned: Vec<bool>,
    /// Number of Taylor coefficients kept for the images `phi^k`.
    pub working_order: usize,
}

impl NormProbe {
    /// Relative growth over the final doubling below `PLATEAU_TOL`.
    pub fn plateaus(&self) -> bool {
        self.curve.plateaus(PLATEAU_TOL)
    }
}

/// `|C_phi|` on `P_N` as an operator of `H(b)`, for each order `N`.
///
/// With `G_N = R^* R` the Gram matrix of the monomials and `B` the matrix whose
/// columns are the embeddings `(phi^k, (phi^k)+)`, the value is the largest
/// singular value of `B R^{-1}`. Subspaces are nested, so the curve is
/// nondecreasing.
pub fn operator_norm_probe(phi: &dyn DiskSelfMap, space: &HbSpace, orders: &[usize]) -> Result<NormProbe> {
    cross_norm_probe(phi, space, space, orders)
}

/// `|C_phi|` on `P_N` from `H(b)` of `source` into `H(b)` of `target`.
pub fn cross_norm_probe(
    phi: &dyn DiskSelfMap,
    source: &HbSpace,
    target: &HbSpace,
    orders: &[usize],
) -> Result<NormProbe> {
    if orders.is_empty() || orders.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("orders must be ascending and nonempty".into()));
    }
    let top = *orders.last().unwrap();
    let columns = powers(phi, top)?;
    let rows = columns.iter().map(|c| c.len()).max().unwrap_or(1);
    let op = PlusOperator::new(target.pair(), rows - 1);
    let plus: Vec<Vec<C64>> = columns
        .par_iter()
        .map(|c| {
            let mut u = c.clone();
            u.resize(rows, C64::new(0.0, 0.0));
            op.apply_series(&u)
        })
        .collect();

    // B^* B via real products: B = X + iY gives B^*B = (X'X + Y'Y) + i(X'Y - Y'X)
    let n = top + 1;
    let height = 2 * rows;
    let mut x = DMatrix::<f64>::zeros(height, n);
    let mut y = DMatrix::<f64>::zeros(height, n);
    for k in 0..n {
        for (j, v) in columns[k].iter().enumerate() {
            x[(j, k)] = v.re;
            y[(j, k)] = v.im;
        }
        for (j, v) in plus[k].iter().enumerate() {
            x[(rows + j, k)] = v.re;
            y[(rows + j, k)] = v.im;
        }
    }
    let (xt, yt) = (x.transpose(), y.transpose());
    let re = &xt * &x + &yt * &y;
    let im = &xt * &y - &yt * &x;
    let image_gram = DMatrix::from_fn(n, n, |i, j| C64::new(re[(i, j)], im[(i, j)]));

    let source_gram = PlusOperator::new(source.pair(), top).gram(top);
    let results: Vec<Result<(f64, f64)>> = orders
        .par_iter()
        .map(|&order| probe_order(&source_gram, &image_gram, order))
        .collect();
    let mut values = Vec::with_capacity(orders.len());
    let mut gram_condition = Vec::with_capacity(orders.len());
    for r in results {
        let (v, c) = r?;
        values.push(v);
        gram_condition.push(c);
    }
    let ill_conditioned = gram_condition.iter().map(|c| *c > MAX_CONDITION).collect();
    Ok(NormProbe {
        curve: Curve::new(orders.to_vec(), values),
        gram_condition,
        ill_conditioned,
        working_order: rows - 1,
    })
}

fn probe_order(source_gram: &DMatrix<C64>, image_gram: &DMatrix<C64>, order: usize) -> Result<(f64, f64)> {
    let n = order + 1;
    let g = source_gram.view((0, 0), (n, n)).into_owned();
    let eig = g.clone().symmetric_eigenvalues();
    let (lo, hi) = eig.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), v| (lo.min(*v), hi.max(*v)));
    let condition = hi / lo;
    let chol = g.cholesky().ok_or(Error::IllConditioned { condition })?;
    let r = chol.l().adjoint();
    let r_inv = r
        .solve_upper_triangular(&DMatrix::identity(n, n))
        .ok_or(Error::IllConditioned { condition })?;
    let h = image_gram.view((0, 0), (n, n)).into_owned();
    let a = r_inv.adjoint() * h * &r_inv;
    let a = (&a + a.adjoint()) * C64::new(0.5, 0.0);
    let top = a.symmetric_eigenvalues().iter().cloned().fold(0.0, f64::max);
    Ok((top.sqrt(), condition))
}

/// Taylor coefficients of `phi^k`, `k = 0..=top`, each cut after its last
/// coefficient above `1e-17`.
fn powers(phi: &dyn DiskSelfMap, top: usize) -> Result<Vec<Vec<C64>>> {
    let mut size = (8 * (top + 1) * phi.degree().max(1)).next_power_of_two().max(1024);
    loop {
        let grid = BoundaryGrid::new(size)?;
        let base = grid.sample(|z| phi.eval(z));
        let mut samples = Vec::with_capacity(top + 1);
        let mut cur = vec![C64::new(1.0, 0.0); size];
        for _ in 0..=top {
            samples.push(cur.clone());
            for (c, b) in cur.iter_mut().zip(&base) {
                *c *= b;
            }
        }
        let spectra: Vec<Result<Vec<C64>>> = samples
            .par_iter()
            .enumerate()
            .map(|(k, s)| {
                let spec = analyze(&grid, s)?;
                let (mut neg, mut total) = (0.0, 0.0);
                for (k, c) in spec.iter() {
                    total += c.norm_sqr();
                    if k < 0 {
                        neg += c.norm_sqr();
                    }
                }
                // rounding in k repeated products spreads about k eps over all modes
                let floor = ALIAS_TOL.max(4.0 * (k + 1) as f64 * f64::EPSILON);
                if neg > floor * floor * total {
                    return Err(Error::Aliasing { size, required: 2 * size });
                }
                let coeffs: Vec<C64> = (0..(size / 2) as i64).map(|k| spec.coeff(k)).collect();
                let last = coeffs.iter().rposition(|c| c.norm() > 1e-17).unwrap_or(0);
                Ok(coeffs[..=last].to_vec())
            })
            .collect();
        match spectra.into_iter().collect::<Result<Vec<_>>>() {
            Ok(v) => return Ok(v),
            Err(Error::Aliasing { .. }) if size < MAX_PROBE_GRID => size *= 2,
            Err(e) => return Err(e),
        }
    }
}

/// Residuals of decomposing `f o phi` in the space of `f`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureCheck {
    /// `|W g + p - f o phi|_2`.
    pub residual: f64,
    /// `max |p(lambda_j) - f(lambda_j)|` over the zeros: `phi` fixes them, so the
    /// interpolating parts agree.
    pub fixed_point_defect: f64,
    pub g_norm: f64,
}

pub fn structure_check(f: &HardyFn, phi: &dyn DiskSelfMap, space: &HbSpace) -> Result<StructureCheck> {
    let h = compose(f, phi)?;
    let d = decompose(&h, space)?;
    let fixed_point_defect = space
        .zeros()
        .iter()
        .map(|z| (d.p.eval(z.point) - f.evaluate(z.point)).norm())
        .fold(0.0, f64::max);
    Ok(StructureCheck { residual: d.residual, fixed_point_defect, g_norm: d.g.h2_norm() })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossSpaceReport {
    pub image: HardyFn,
    /// Reconstruction error of decomposing `f o B` in the target space.
    pub residual: f64,
    /// `|f o B|_target / |f|_source`.
    pub norm_ratio: f64,
}

/// `C_B` from `source` into `target`; requires `B` to send each boundary zero of
/// the target mate to a boundary zero of the source mate.
pub fn cross_space_experiment(
    f: &HardyFn,
    b: &FiniteBlaschke,
    source: &HbSpace,
    target: &HbSpace,
) -> Result<CrossSpaceReport> {
    let mut worst: f64 = 0.0;
    for t in target.zeros() {
        let image = b.eval(t.point);
        let d = source
            .zeros()
            .iter()
            .map(|s| (s.point - image).norm())
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(d);
    }
    if worst > INTERP_TOL {
        return Err(Error::HypothesisViolated { residual: worst });
    }
    let image = compose(f, b)?;
    let d = decompose(&image, target)?;
    let num = hb_norm(&image, target.pair())?;
    let den = hb_norm(f, source.pair())?;
    let norm_ratio = if den > 0.0 { num / den } else { 0.0 };
    Ok(CrossSpaceReport { image, residual: d.residual, norm_ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::MobiusMap;
    use crate::hb::pythagorean_mate;
    use crate::sampling::Sampler;
    use crate::{Poly, RationalFn};
    use proptest::prelude::*;

    fn space(b: &[f64]) -> HbSpace {
        let b = RationalFn::new(Poly::from_real(b), Poly::one()).unwrap();
        HbSpace::new(pythagorean_mate(&b).unwrap(), 64).unwrap()
    }

    #[test]
    fn identity_and_rotation_have_norm_one() {
        let s = space(&[0.5, 0.5]);
        let p = operator_norm_probe(&MobiusMap::identity(), &s, &[4, 8, 16]).unwrap();
        for v in &p.curve.values {
            assert!((v - 1.0).abs() < 1e-10, "{v}");
        }
        let small = space(&[0.0, 0.5]);
        let p = operator_norm_probe(&MobiusMap::rotation(0.9), &small, &[4, 8, 16]).unwrap();
        for v in &p.curve.values {
            assert!((v - 1.0).abs() < 1e-10, "{v}");
        }
    }

    #[test]
    fn hyperbolic_curve_is_nondecreasing() {
        let s = space(&[0.5, 0.0, 0.5]);
        let phi = MobiusMap::hyperbolic(C64::new(1.0, 0.0), C64::new(-1.0, 0.0), 0.5).unwrap();
        let p = operator_norm_probe(&phi, &s, &[8, 16, 32, 64]).unwrap();
        assert!(p.curve.is_nondecreasing(1e-9));
        assert!(p.curve.values[0] > 1.0);
    }

    #[test]
    fn cross_space_example() {
        let source = space(&[0.5, 0.5]);
        let target = space(&[0.5, 0.0, 0.5]);
        let r = cross_space_experiment(&HardyFn::monomial(1), &FiniteBlaschke::power(2), &source, &target).unwrap();
        assert!(r.residual < 1e-10);
        let d = decompose(&r.image, &target).unwrap();
        assert!((d.g.coeff(0) - 1.0).norm() < 1e-10 && (d.p.coeff(0) - 1.0).norm() < 1e-10);
        let one = cross_space_experiment(&HardyFn::from_real(&[1.0]), &FiniteBlaschke::power(2), &source, &target).unwrap();
        assert!(one.residual == 0.0 && one.norm_ratio.is_finite());
        let bad = FiniteBlaschke::power(1);
        assert!(matches!(
            cross_space_experiment(&HardyFn::monomial(1), &bad, &source, &target),
            Err(Error::HypothesisViolated { .. })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn hyperbolic_map_respects_structure(seed in any::<u64>()) {
            let mut s = Sampler::new(seed);
            let sp = space(&[0.5, 0.0, 0.5]);
            let g = s.hardy(6);
            let f = HardyFn::from(&(&(sp.divisor() * &g.to_poly()) + &s.poly(1)));
            let phi = MobiusMap::hyperbolic(C64::new(1.0, 0.0), C64::new(-1.0, 0.0), 0.4).unwrap();
            let check = structure_check(&f, &phi, &sp).unwrap();
            prop_assert!(check.residual < 1e-9);
            prop_assert!(check.fixed_point_defect < 1e-9);
        }
    }
}
