//! Complex polynomials in ascending-degree form, with companion-matrix root
//! finding and Newton polishing.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, Schur};

use crate::{Error, Result, C64};

/// `sum coeffs[k] z^k`, normalized so the leading coefficient is nonzero.
/// The zero polynomial is stored as `[0]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<C64>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<C64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == C64::new(0.0, 0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(C64::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| C64::new(c, 0.0)).collect())
    }

    pub fn constant(c: C64) -> Self {
        Self::new(vec![c])
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(C64::new(1.0, 0.0))
    }

    /// The identity polynomial `z`.
    pub fn z() -> Self {
        Self::from_real(&[0.0, 1.0])
    }

    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![C64::new(0.0, 0.0); k + 1];
        coeffs[k] = C64::new(1.0, 0.0);
        Self { coeffs }
    }

    /// `lead * prod (z - r)`.
    pub fn from_roots(roots: &[C64], lead: C64) -> Self {
        let mut coeffs = vec![lead];
        for &r in roots {
            let mut next = vec![C64::new(0.0, 0.0); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == C64::new(0.0, 0.0)
    }

    pub fn leading(&self) -> C64 {
        *self.coeffs.last().unwrap()
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.coeffs.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() == 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: C64) -> Poly {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Drop trailing coefficients whose modulus is below `tol * norm`.
    pub fn trimmed(&self, tol: f64) -> Poly {
        let cut = tol * self.norm();
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() > 1 && coeffs.last().unwrap().norm() <= cut {
            coeffs.pop();
        }
        Self::new(coeffs)
    }

    /// `p(z^k)`.
    pub fn compose_power(&self, k: usize) -> Poly {
        let mut coeffs = vec![C64::new(0.0, 0.0); self.degree() * k + 1];
        for (j, &c) in self.coeffs.iter().enumerate() {
            coeffs[j * k] = c;
        }
        Self::new(coeffs)
    }

    /// Quotient and remainder of division by `divisor`; `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = divisor.degree();
        if self.degree() < d || self.is_zero() {
            return (Self::zero(), self.clone());
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C64::new(0.0, 0.0); self.degree() - d + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + d] / lead;
            quot[k] = q;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= q * dc;
            }
        }
        rem.truncate(d.max(1));
        (Self::new(quot), Self::new(rem))
    }

    /// All roots with multiplicity; see [`poly_roots`].
    pub fn roots(&self) -> Result<Vec<C64>> {
        poly_roots(self)
    }
}

fn zip_with(a: &Poly, b: &Poly, op: impl Fn(C64, C64) -> C64) -> Poly {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new((0..n).map(|k| op(a.coeff(k), b.coeff(k))).collect())
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::new(crate::fft::convolve(&self.coeffs, &rhs.coeffs))
    }
}

/// Roots of `p` with multiplicity.
///
/// Zero roots are split off exactly; the rest come from the eigenvalues of the
/// companion matrix (complex Schur form). Eigenvalues that a `k`-fold root has
/// scattered (spread below `(1e-12)^(1/k)` relative) are merged into their
/// centroid, refined by Newton steps on `p^(k-1)` and returned `k` times; simple
/// roots are polished by Newton steps on `p`, keeping a step only when it lowers `|p|`.
pub fn poly_roots(p: &Poly) -> Result<Vec<C64>> {
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let zeros = p.coeffs.iter().take_while(|c| **c == C64::new(0.0, 0.0)).count();
    let mut roots = vec![C64::new(0.0, 0.0); zeros];
    let reduced = Poly::new(p.coeffs[zeros..].to_vec());
    let n = reduced.degree();
    if n == 0 {
        return Ok(roots);
    }
    let lead = reduced.leading();
    let monic: Vec<C64> = reduced.coeffs.iter().map(|c| c / lead).collect();
    if n == 1 {
        roots.push(-monic[0]);
        return Ok(roots);
    }
    let raw = companion_eigenvalues(&monic)?;
    let mut derivatives = vec![reduced.clone()];
    for group in split_multiple(&raw, 1e-2) {
        let k = group.len();
        while derivatives.len() <= k {
            let next = derivatives.last().unwrap().derivative();
            derivatives.push(next);
        }
        if k == 1 {
            roots.push(polish(&derivatives[0], &derivatives[1], group[0]));
        } else {
            let mean = group.iter().sum::<C64>() / k as f64;
            let r = polish(&derivatives[k - 1], &derivatives[k], mean);
            roots.extend(std::iter::repeat(r).take(k));
        }
    }
    Ok(roots)
}

/// Eigenvalues of the companion matrix of a monic polynomial. QR iterations can
/// stall on symmetric root patterns, so on failure the variable is rotated
/// (`z = e^{i theta} w`) and the eigenvalues are rotated back.
fn companion_eigenvalues(monic: &[C64]) -> Result<Vec<C64>> {
    let n = monic.len() - 1;
    for theta in [0.0, 0.37, 1.13, 2.71] {
        let rot: Vec<C64> = (0..=n).map(|k| C64::from_polar(1.0, theta * k as f64)).collect();
        let lead = rot[n];
        let mut companion = DMatrix::<C64>::zeros(n, n);
        for i in 1..n {
            companion[(i, i - 1)] = C64::new(1.0, 0.0);
        }
        for i in 0..n {
            companion[(i, n - 1)] = -monic[i] * rot[i] / lead;
        }
        if let Some(schur) = Schur::try_new(companion, f64::EPSILON, 100 * n) {
            let (_, t) = schur.unpack();
            let back = C64::from_polar(1.0, theta);
            return Ok((0..n).map(|i| t[(i, i)] * back).collect());
        }
    }
    Err(Error::InvalidParameter("companion eigenvalue iteration did not converge".into()))
}

/// Split eigenvalues into groups that are each taken as one root of multiplicity
/// equal to the group size.
fn split_multiple(roots: &[C64], radius: f64) -> Vec<Vec<C64>> {
    let mut out = Vec::new();
    for group in cluster_groups(roots, radius) {
        let k = group.len();
        if k == 1 {
            out.push(group);
            continue;
        }
        let mean = group.iter().sum::<C64>() / k as f64;
        let spread = group.iter().map(|r| (r - mean).norm()).fold(0.0, f64::max);
        if spread <= 1e-12f64.powf(1.0 / k as f64) * (1.0 + mean.norm()) {
            out.push(group);
        } else if radius < 1e-9 {
            out.extend(group.into_iter().map(|r| vec![r]));
        } else {
            out.extend(split_multiple(&group, radius / 10.0));
        }
    }
    out
}

fn polish(p: &Poly, dp: &Poly, mut z: C64) -> C64 {
    let mut val = p.eval(z).norm();
    for _ in 0..8 {
        let d = dp.eval(z);
        if d.norm() == 0.0 || val == 0.0 {
            break;
        }
        let cand = z - p.eval(z) / d;
        let cval = p.eval(cand).norm();
        if !(cval < val) {
            break;
        }
        z = cand;
        val = cval;
    }
    z
}

/// Group roots lying within `radius` of each other (transitively).
pub fn cluster_groups(roots: &[C64], radius: f64) -> Vec<Vec<C64>> {
    let mut used = vec![false; roots.len()];
    let mut out = Vec::new();
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut members = vec![roots[i]];
        // grow transitively so a triple root's spread-out eigenvalues join up
        let mut grew = true;
        while grew {
            grew = false;
            for j in 0..roots.len() {
                if !used[j] && members.iter().any(|m| (m - roots[j]).norm() < radius) {
                    used[j] = true;
                    members.push(roots[j]);
                    grew = true;
                }
            }
        }
        out.push(members);
    }
    out
}

/// Clusters of nearby roots, each replaced by its mean and reported with its
/// size as multiplicity.
pub fn cluster_roots(roots: &[C64], radius: f64) -> Vec<(C64, usize)> {
    cluster_groups(roots, radius)
        .into_iter()
        .map(|g| (g.iter().sum::<C64>() / g.len() as f64, g.len()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sorted_re(mut v: Vec<C64>) -> Vec<f64> {
        v.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        v.into_iter().map(|c| c.re).collect()
    }

    #[test]
    fn simple_roots() {
        let r = sorted_re(Poly::from_real(&[-1.0, 0.0, 1.0]).roots().unwrap());
        assert!((r[0] + 1.0).abs() < 1e-14 && (r[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn repeated_roots() {
        let double = Poly::from_real(&[1.0, -2.0, 1.0]);
        for r in double.roots().unwrap() {
            assert!((r - 1.0).norm() < 1e-7);
            assert!(double.eval(r).norm() <= 1e-10 * double.norm());
        }
        let triple = Poly::from_real(&[-1.0, 3.0, -3.0, 1.0]);
        let roots = triple.roots().unwrap();
        assert_eq!(roots.len(), 3);
        for &r in &roots {
            assert!((r - 1.0).norm() < 1e-12);
            assert!(triple.eval(r).norm() <= 1e-10 * triple.norm());
        }
        let clusters = cluster_roots(&roots, 1e-3);
        assert_eq!(clusters.len(), 1);
        assert_eq!(clusters[0].1, 3);
        assert!((clusters[0].0 - 1.0).norm() < 1e-10);
    }

    #[test]
    fn quadruple_root_next_to_simple_roots() {
        let p = &Poly::from_roots(&[C64::new(-1.0, 0.0); 4], C64::new(1.0, 0.0))
            * &Poly::from_real(&[0.25, 0.0, 1.0]);
        let clusters = cluster_roots(&p.roots().unwrap(), 1e-5);
        assert_eq!(clusters.len(), 3);
        let quad = clusters.iter().find(|c| c.1 == 4).unwrap();
        assert!((quad.0 + 1.0).norm() < 1e-10);
    }

    #[test]
    fn constant_has_no_roots() {
        assert_eq!(Poly::constant(C64::new(2.0, 0.0)).roots(), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn zero_roots_are_exact() {
        let p = Poly::from_real(&[0.0, 0.0, 2.0, 1.0]);
        let roots = p.roots().unwrap();
        assert_eq!(roots.iter().filter(|r| **r == C64::new(0.0, 0.0)).count(), 2);
    }

    #[test]
    fn division() {
        // z^2 - 1 = (z - 1)(z + 1)
        let (q, r) = Poly::from_real(&[-1.0, 0.0, 1.0]).div_rem(&Poly::from_real(&[-1.0, 1.0]));
        assert_eq!(q, Poly::from_real(&[1.0, 1.0]));
        assert!(r.norm() < 1e-15);
        let (q, r) = Poly::from_real(&[0.0, 1.0]).div_rem(&Poly::from_real(&[-1.0, 1.0]));
        assert_eq!(q, Poly::one());
        assert_eq!(r, Poly::one());
    }

    fn arb_roots() -> impl Strategy<Value = Vec<C64>> {
        prop::collection::vec((0.2f64..2.0, 0.0f64..std::f64::consts::TAU), 1..=12)
            .prop_map(|v| v.into_iter().map(|(r, t)| C64::from_polar(r, t)).collect())
    }

    fn hausdorff(a: &[C64], b: &[C64]) -> f64 {
        let d = |x: &[C64], y: &[C64]| {
            x.iter()
                .map(|p| y.iter().map(|q| (p - q).norm()).fold(f64::INFINITY, f64::min))
                .fold(0.0, f64::max)
        };
        d(a, b).max(d(b, a))
    }

    proptest! {
        #[test]
        fn roots_of_product_recover_roots(roots in arb_roots()) {
            let p = Poly::from_roots(&roots, C64::new(1.0, 0.5));
            let found = p.roots().unwrap();
            prop_assert_eq!(found.len(), roots.len());
            prop_assert!(hausdorff(&found, &roots) < 1e-8);
            for r in &found {
                prop_assert!(p.eval(*r).norm() <= 1e-10 * p.norm());
            }
        }
    }
}
