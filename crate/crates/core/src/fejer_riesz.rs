//! Spectral factorization of nonnegative trigonometric polynomials on the circle.
//!
//! Given `w(theta) = sum_{|k| <= M} c_k e^{ik theta} >= 0`, the roots of the
//! degree-`2M` polynomial `z^M w(z)` come in pairs `(r, 1/conj(r))`. Keeping the
//! roots outside the disk, plus half of every (even-multiplicity) root on the
//! circle, yields an outer polynomial `q` of degree `M` with `|q|^2 = w`.

use crate::poly::{cluster_groups, cluster_roots};
use crate::rational::{BoundaryZero, ROOT_CLUSTER_RADIUS};
use crate::{BoundaryGrid, Error, FourierCoeffs, Poly, Result, TrigSymbol, C64};

/// Root clusters whose mean modulus is within this of one are boundary roots.
pub const BOUNDARY_PAIRING_TOL: f64 = 1e-7;
/// Allowed negativity of the weight on the check grid, relative to its scale.
pub const NEGATIVITY_TOL: f64 = 1e-12;

/// Laurent coefficients of `|p|^2` on the unit circle.
pub fn abs_squared(p: &Poly) -> TrigSymbol {
    let d = p.degree() as i64;
    let c = p.coeffs();
    let coeffs = (-d..=d)
        .map(|k| {
            (0..c.len())
                .filter_map(|j| {
                    let i = j as i64 + k;
                    (i >= 0 && (i as usize) < c.len()).then(|| c[i as usize] * c[j].conj())
                })
                .sum()
        })
        .collect();
    TrigSymbol::new(FourierCoeffs::new(-d, coeffs))
}

/// Difference `|q2|^2 - |q1|^2` as a trigonometric polynomial.
pub fn abs_squared_difference(q2: &Poly, q1: &Poly) -> TrigSymbol {
    let a = abs_squared(q2);
    let b = abs_squared(q1);
    let m = a.degree().max(b.degree()) as i64;
    let coeffs = (-m..=m).map(|k| a.coeff(k) - b.coeff(k)).collect();
    TrigSymbol::new(FourierCoeffs::new(-m, coeffs))
}

struct Prepared {
    /// Coefficients `c_{-M}..=c_M` with `c_M != 0`.
    coeffs: Vec<C64>,
    degree: usize,
}

fn prepare(w: &TrigSymbol) -> Result<Prepared> {
    let full = w.degree() as i64;
    let scale: f64 = (-full..=full).map(|k| w.coeff(k).norm()).sum();
    if scale == 0.0 {
        return Err(Error::ZeroWeight);
    }
    let asymmetry = w.hermitian_defect();
    if asymmetry > 1e-12 * scale {
        return Err(Error::NonRealWeight { asymmetry });
    }
    let degree = (0..=full)
        .rev()
        .find(|&k| w.coeff(k).norm() > 1e-14 * scale)
        .unwrap_or(0) as usize;
    let m = degree as i64;
    // symmetrize to remove rounding asymmetry
    let coeffs: Vec<C64> = (-m..=m).map(|k| (w.coeff(k) + w.coeff(-k).conj()) * 0.5).collect();

    let grid = BoundaryGrid::covering(4 * degree, BoundaryGrid::DEFAULT_SIZE);
    let min = TrigSymbol::new(FourierCoeffs::new(-m, coeffs.clone()))
        .samples(&grid)?
        .iter()
        .map(|v| v.re)
        .fold(f64::INFINITY, f64::min);
    if min < -NEGATIVITY_TOL * scale {
        return Err(Error::NegativeWeight { min });
    }
    Ok(Prepared { coeffs, degree })
}

/// Outer polynomial `q` of degree `M` with `|q|^2 = w` on the circle,
/// normalized so that `q(0) > 0`.
pub fn fejer_riesz(w: &TrigSymbol) -> Result<Poly> {
    let Prepared { coeffs, degree: m } = prepare(w)?;
    if m == 0 {
        let c0 = coeffs[0].re.max(0.0);
        return Ok(Poly::constant(C64::new(c0.sqrt(), 0.0)));
    }
    // z^M w(z), ascending
    let laurent_poly = Poly::new(coeffs.clone());
    let roots = laurent_poly.roots()?;
    let selected = select_outer_roots(&roots, m);

    let lead = coeffs[2 * m];
    let prod_mod: f64 = selected.iter().map(|r| r.norm()).product();
    let c = (lead.norm() / prod_mod).sqrt();
    let q = Poly::from_roots(&selected, C64::new(c, 0.0));
    let q0 = q.coeff(0);
    Ok(q.scale(q0.conj() / q0.norm()))
}

fn select_outer_roots(roots: &[C64], m: usize) -> Vec<C64> {
    let mut selected = Vec::with_capacity(m);
    for group in cluster_groups(roots, ROOT_CLUSTER_RADIUS) {
        let mean = group.iter().sum::<C64>() / group.len() as f64;
        if (mean.norm() - 1.0).abs() < BOUNDARY_PAIRING_TOL && group.len() % 2 == 0 {
            selected.extend(std::iter::repeat(mean / mean.norm()).take(group.len() / 2));
        } else {
            selected.extend(group.into_iter().filter(|r| r.norm() > 1.0));
        }
    }
    if selected.len() != m {
        let mut by_modulus = roots.to_vec();
        by_modulus.sort_by(|a, b| b.norm().partial_cmp(&a.norm()).unwrap());
        by_modulus.truncate(m);
        return by_modulus;
    }
    selected
}

/// Zeros of a nonnegative trigonometric polynomial on the circle; each is a root
/// of even order `2k` of `z^M w(z)` and is reported with multiplicity `k`.
pub fn boundary_zeros_of_weight(w: &TrigSymbol) -> Result<Vec<BoundaryZero>> {
    let Prepared { coeffs, degree: m } = prepare(w)?;
    if m == 0 {
        return Ok(Vec::new());
    }
    let roots = Poly::new(coeffs).roots()?;
    Ok(cluster_roots(&roots, ROOT_CLUSTER_RADIUS)
        .into_iter()
        .filter(|(r, mult)| (r.norm() - 1.0).abs() < BOUNDARY_PAIRING_TOL && mult % 2 == 0)
        .map(|(r, mult)| BoundaryZero { point: r / r.norm(), multiplicity: mult / 2 })
        .collect())
}
