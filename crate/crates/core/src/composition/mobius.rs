use super::DiskSelfMap;
use crate::{BoundaryGrid, Error, Poly, RationalFn, Result, C64};

/// Tolerance on the normalized trace when classifying.
pub const TRACE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MobiusClass {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
    Loxodromic,
}

/// `z -> (alpha z + beta) / (gamma z + delta)` with unit determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    m: [C64; 4],
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn mat_mul(x: &[C64; 4], y: &[C64; 4]) -> [C64; 4] {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

fn check_unimodular(xi: C64) -> Result<()> {
    if (xi.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParameter(format!("{xi} is not on the unit circle")));
    }
    Ok(())
}

impl MobiusMap {
    pub fn new(alpha: C64, beta: C64, gamma: C64, delta: C64) -> Result<Self> {
        let det = alpha * delta - beta * gamma;
        let scale = [alpha, beta, gamma, delta].iter().map(|x| x.norm_sqr()).sum::<f64>();
        if det.norm() <= 1e-14 * scale {
            return Err(Error::InvalidParameter("singular Mobius matrix".into()));
        }
        let s = det.sqrt();
        Ok(Self { m: [alpha / s, beta / s, gamma / s, delta / s] })
    }

    pub fn identity() -> Self {
        Self { m: [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)] }
    }

    pub fn rotation(theta: f64) -> Self {
        let h = C64::from_polar(1.0, theta / 2.0);
        Self { m: [h, c(0.0, 0.0), c(0.0, 0.0), h.conj()] }
    }

    /// `z -> e^{i theta} (z - a) / (1 - conj(a) z)`.
    pub fn automorphism(a: C64, theta: f64) -> Result<Self> {
        if a.norm() >= 1.0 {
            return Err(Error::InvalidParameter(format!("{a} is not in the open disk")));
        }
        let u = C64::from_polar(1.0, theta);
        Self::new(u, -u * a, -a.conj(), c(1.0, 0.0))
    }

    /// Conjugate of `w -> w + t` on the upper half plane by the Cayley map
    /// `z -> i (z + xi) / (xi - z)` sending `xi` to infinity.
    pub fn parabolic(xi: C64, t: f64) -> Result<Self> {
        check_unimodular(xi)?;
        let i = c(0.0, 1.0);
        let cayley = [i, i * xi, c(-1.0, 0.0), xi];
        let cayley_inv = [xi, -i * xi, c(1.0, 0.0), i];
        let shift = [c(1.0, 0.0), c(t, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        let m = mat_mul(&cayley_inv, &mat_mul(&shift, &cayley));
        Self::new(m[0], m[1], m[2], m[3])
    }

    /// Automorphism fixing `xi1` and `xi2`; for `xi1 = 1`, `xi2 = -1` this is
    /// `(z + r) / (1 + r z)`.
    pub fn hyperbolic(xi1: C64, xi2: C64, r: f64) -> Result<Self> {
        check_unimodular(xi1)?;
        check_unimodular(xi2)?;
        if (xi1 - xi2).norm() < 1e-12 {
            return Err(Error::CoincidentFixedPoints);
        }
        if r.abs() >= 1.0 {
            return Err(Error::InvalidParameter(format!("r = {r} must lie in (-1, 1)")));
        }
        let k = (1.0 - r) / (1.0 + r);
        Self::new(
            xi1 - xi2 * k,
            xi1 * xi2 * (k - 1.0),
            c(1.0 - k, 0.0),
            xi1 * k - xi2,
        )
    }

    /// `(alpha, beta, gamma, delta)` normalized to unit determinant.
    pub fn coefficients(&self) -> [C64; 4] {
        self.m
    }

    pub fn eval(&self, z: C64) -> C64 {
        let [a, b, g, d] = self.m;
        (a * z + b) / (g * z + d)
    }

    pub fn derivative(&self, z: C64) -> C64 {
        let [_, _, g, d] = self.m;
        let den = g * z + d;
        C64::new(1.0, 0.0) / (den * den)
    }

    /// `self o other`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        Self { m: mat_mul(&self.m, &other.m) }
    }

    pub fn inverse(&self) -> MobiusMap {
        let [a, b, g, d] = self.m;
        Self { m: [d, -b, -g, a] }
    }

    /// Classification by the normalized trace `(alpha + delta)^2 / det`.
    pub fn classify(&self) -> MobiusClass {
        let [a, b, g, d] = self.m;
        if b.norm() < TRACE_TOL && g.norm() < TRACE_TOL && (a - d).norm() < TRACE_TOL {
            return MobiusClass::Identity;
        }
        let tau = (a + d) * (a + d);
        if (tau - 4.0).norm() < TRACE_TOL {
            MobiusClass::Parabolic
        } else if tau.im.abs() < TRACE_TOL && tau.re >= 0.0 && tau.re < 4.0 {
            MobiusClass::Elliptic
        } else if tau.im.abs() < TRACE_TOL && tau.re > 4.0 {
            MobiusClass::Hyperbolic
        } else {
            MobiusClass::Loxodromic
        }
    }

    /// Fixed points in the extended plane (`None` stands for infinity).
    pub fn fixed_points(&self) -> Vec<Option<C64>> {
        let [a, b, g, d] = self.m;
        if g.norm() < 1e-15 {
            if (a - d).norm() < 1e-15 {
                return vec![None];
            }
            return vec![Some(b / (d - a)), None];
        }
        // g z^2 + (d - a) z - b = 0
        let disc = ((d - a) * (d - a) + 4.0 * g * b).sqrt();
        let z1 = (a - d + disc) / (2.0 * g);
        let z2 = (a - d - disc) / (2.0 * g);
        if disc.norm() < 1e-15 {
            vec![Some(z1)]
        } else {
            vec![Some(z1), Some(z2)]
        }
    }

    /// `max |phi|` on a boundary grid, rejected above `1 + 1e-12`.
    pub fn check_self_map(&self) -> Result<f64> {
        let [_, _, g, d] = self.m;
        if g.norm() >= d.norm() {
            return Err(Error::NotSelfMap { max_modulus: f64::INFINITY });
        }
        let grid = BoundaryGrid::default();
        let max = grid.nodes().iter().map(|z| self.eval(*z).norm()).fold(0.0, f64::max);
        if max > 1.0 + 1e-12 {
            return Err(Error::NotSelfMap { max_modulus: max });
        }
        Ok(max)
    }

    pub fn to_rational(&self) -> Result<RationalFn> {
        let [a, b, g, d] = self.m;
        RationalFn::new(Poly::new(vec![b, a]), Poly::new(vec![d, g]))
    }
}

impl DiskSelfMap for MobiusMap {
    fn eval(&self, z: C64) -> C64 {
        MobiusMap::eval(self, z)
    }

    fn degree(&self) -> usize {
        1
    }
}
