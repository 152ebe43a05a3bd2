use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};

use super::Annulus;
use crate::{Error, Result, C64};

/// Boundary samples per circle used to calibrate the constants.
const CALIBRATION_NODES: usize = 64;

/// Green's function of the annulus with pole at `a`:
///
/// `G(z, a) = -log|P(z/a) / P(z conj(a))| + c1 + c2 log|z|`,
///
/// with `c1`, `c2` fitted by least squares so that `G` vanishes on both circles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreenFunction {
    annulus: Annulus,
    pole: C64,
    c1: f64,
    c2: f64,
    boundary_residual: f64,
}

impl GreenFunction {
    pub fn new(annulus: Annulus, pole: C64) -> Result<Self> {
        if !annulus.contains(pole) {
            return Err(Error::OutsideAnnulus(pole));
        }
        let mut g = Self { annulus, pole, c1: 0.0, c2: 0.0, boundary_residual: 0.0 };
        let n = CALIBRATION_NODES;
        let mut a = DMatrix::<f64>::zeros(2 * n, 2);
        let mut y = DVector::<f64>::zeros(2 * n);
        for (ring, r) in [1.0, annulus.q()].into_iter().enumerate() {
            for k in 0..n {
                let z = C64::from_polar(r, TAU * (k as f64 + 0.5) / n as f64);
                let row = ring * n + k;
                a[(row, 0)] = 1.0;
                a[(row, 1)] = r.ln();
                y[row] = -g.base(z)?;
            }
        }
        let c = a.clone().svd(true, true).solve(&y, 1e-14).map_err(|e| Error::InvalidParameter(e.to_string()))?;
        g.c1 = c[0];
        g.c2 = c[1];
        g.boundary_residual = (&a * &c - &y).amax();
        Ok(g)
    }

    fn base(&self, z: C64) -> Result<f64> {
        let num = self.annulus.prime(z / self.pole)?;
        let den = self.annulus.prime(z * self.pole.conj())?;
        Ok(-(num.norm().ln() - den.norm().ln()))
    }

    pub fn pole(&self) -> C64 {
        self.pole
    }

    /// Calibrated `(c1, c2)`.
    pub fn constants(&self) -> (f64, f64) {
        (self.c1, self.c2)
    }

    /// `(-log|a|, log|a| / log q)`, the values the calibration reproduces.
    pub fn analytic_constants(&self) -> (f64, f64) {
        let r = self.pole.norm();
        (-r.ln(), r.ln() / self.annulus.q().ln())
    }

    /// Largest `|G|` on the calibration nodes.
    pub fn boundary_residual(&self) -> f64 {
        self.boundary_residual
    }

    /// `G(z, a)` for `z` in the closed annulus, `z != a`.
    pub fn eval(&self, z: C64) -> Result<f64> {
        if !self.annulus.contains_closed(z, 1e-12) {
            return Err(Error::OutsideAnnulus(z));
        }
        if z == self.pole {
            return Err(Error::AtPole);
        }
        Ok(self.base(z)? + self.c1 + self.c2 * z.norm().ln())
    }
}

pub fn green_function(z: C64, a: C64, annulus: &Annulus) -> Result<f64> {
    GreenFunction::new(*annulus, a)?.eval(z)
}
