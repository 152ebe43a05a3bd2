use std::f64::consts::{PI, TAU};

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::DiskSelfMap;
use crate::{Error, Poly, RationalFn, Result, C64};

/// Required accuracy of boundary interpolation.
pub const INTERP_TOL: f64 = 1e-8;
const STARTS: usize = 16;
const MAX_NODES: usize = 3;

/// `u prod (z - a) / (1 - conj(a) z)` with `|u| = 1` and zeros in the open disk.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteBlaschke {
    zeros: Vec<C64>,
    front: C64,
}

impl FiniteBlaschke {
    pub fn new(zeros: Vec<C64>, front: C64) -> Result<Self> {
        if let Some(a) = zeros.iter().find(|a| a.norm() >= 1.0) {
            return Err(Error::InvalidParameter(format!("zero {a} is not in the open disk")));
        }
        if front.norm() == 0.0 {
            return Err(Error::InvalidParameter("zero front factor".into()));
        }
        Ok(Self { zeros, front: front / front.norm() })
    }

    /// `z^n`.
    pub fn power(n: usize) -> Self {
        Self { zeros: vec![C64::new(0.0, 0.0); n], front: C64::new(1.0, 0.0) }
    }

    pub fn zeros(&self) -> &[C64] {
        &self.zeros
    }

    pub fn front(&self) -> C64 {
        self.front
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.zeros
            .iter()
            .fold(self.front, |acc, a| acc * (z - a) / (1.0 - a.conj() * z))
    }

    pub fn to_rational(&self) -> Result<RationalFn> {
        let num = Poly::from_roots(&self.zeros, self.front);
        let den = self
            .zeros
            .iter()
            .fold(Poly::one(), |acc, a| &acc * &Poly::new(vec![C64::new(1.0, 0.0), -a.conj()]));
        RationalFn::new(num, den)
    }
}

impl DiskSelfMap for FiniteBlaschke {
    fn eval(&self, z: C64) -> C64 {
        FiniteBlaschke::eval(self, z)
    }

    fn degree(&self) -> usize {
        self.zeros.len()
    }
}

/// Parameters: front angle, then `(s, alpha)` per zero with `a = tanh(s) e^{i alpha}`.
fn build(params: &[f64]) -> FiniteBlaschke {
    let zeros = params[1..]
        .chunks(2)
        .map(|p| C64::from_polar(p[0].tanh(), p[1]))
        .collect();
    FiniteBlaschke { zeros, front: C64::from_polar(1.0, params[0]) }
}

fn residuals(params: &[f64], pre: &[C64], post: &[C64]) -> DVector<f64> {
    let b = build(params);
    DVector::from_iterator(
        2 * pre.len(),
        pre.iter().zip(post).flat_map(|(x, y)| {
            let d = b.eval(*x) * y.conj() - 1.0;
            [d.re, d.im]
        }),
    )
}

fn max_error(b: &FiniteBlaschke, pre: &[C64], post: &[C64]) -> f64 {
    pre.iter().zip(post).map(|(x, y)| (b.eval(*x) - y).norm()).fold(0.0, f64::max)
}

/// Levenberg–Marquardt on the residuals `B(pre_j) conj(post_j) - 1`.
fn solve(mut p: DVector<f64>, pre: &[C64], post: &[C64]) -> DVector<f64> {
    let mut r = residuals(p.as_slice(), pre, post);
    let mut mu = 1e-3;
    let h = 1e-7;
    for _ in 0..200 {
        if r.amax() < 1e-13 {
            break;
        }
        let mut j = DMatrix::<f64>::zeros(r.len(), p.len());
        for k in 0..p.len() {
            let mut up = p.clone();
            let mut dn = p.clone();
            up[k] += h;
            dn[k] -= h;
            let d = (residuals(up.as_slice(), pre, post) - residuals(dn.as_slice(), pre, post)) / (2.0 * h);
            j.set_column(k, &d);
        }
        let jt = j.transpose();
        let g = &jt * &r;
        let mut improved = false;
        for _ in 0..20 {
            let lhs = &jt * &j + DMatrix::<f64>::identity(p.len(), p.len()) * mu;
            let Some(step) = lhs.cholesky().map(|c| c.solve(&g)) else {
                mu *= 10.0;
                continue;
            };
            let cand = &p - step;
            let rc = residuals(cand.as_slice(), pre, post);
            if rc.norm() < r.norm() {
                p = cand;
                r = rc;
                mu = (mu / 3.0).max(1e-12);
                improved = true;
                break;
            }
            mu *= 10.0;
        }
        if !improved {
            break;
        }
    }
    p
}

/// A Blaschke product of the lowest degree `<= n` with `B(pre_j) = post_j`,
/// found by a multi-start damped least-squares search over zeros and front factor.
pub fn blaschke_boundary_interp(pre: &[C64], post: &[C64]) -> Result<FiniteBlaschke> {
    if pre.len() != post.len() || pre.is_empty() || pre.len() > MAX_NODES {
        return Err(Error::InvalidParameter(format!(
            "need 1 to {MAX_NODES} node pairs of equal length"
        )));
    }
    for z in pre.iter().chain(post) {
        if (z.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!("{z} is not on the unit circle")));
        }
    }
    for i in 0..pre.len() {
        for j in 0..i {
            if (pre[i] - pre[j]).norm() < 1e-8 {
                return Err(Error::CoincidentNodes(pre[j], pre[i]));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best = f64::INFINITY;
    for degree in 1..=pre.len() {
        for start in 0..STARTS {
            let mut p = DVector::<f64>::zeros(1 + 2 * degree);
            if start == 0 {
                p[0] = (post[0] / pre[0].powu(degree as u32)).arg();
            } else {
                p[0] = rng.gen_range(-PI..PI);
                // half the starts put zeros close to the circle near a node
                for k in 0..degree {
                    if start % 2 == 0 {
                        let node = pre[rng.gen_range(0..pre.len())];
                        p[1 + 2 * k] = rng.gen_range(1.5..4.0);
                        p[2 + 2 * k] = node.arg() + rng.gen_range(-0.3..0.3);
                    } else {
                        p[1 + 2 * k] = rng.gen_range(0.0..1.5);
                        p[2 + 2 * k] = rng.gen_range(0.0..TAU);
                    }
                }
            }
            let p = solve(p, pre, post);
            let b = build(p.as_slice());
            let err = max_error(&b, pre, post);
            if err < INTERP_TOL {
                return Ok(b);
            }
            best = best.min(err);
        }
    }
    Err(Error::InterpolationFailed { residual: best })
}
