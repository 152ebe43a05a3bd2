//! Truncated elements of the Hardy space H² of the unit disk.

use std::ops::{Add, Mul, Neg, Sub};

use crate::{Poly, C64};

/// Taylor coefficients `c_0..=c_N` of an H² function truncated at order `N`.
///
/// Truncated elements are polynomials, so evaluation anywhere (including the
/// boundary circle) is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct HardyFn {
    coeffs: Vec<C64>,
}

impl HardyFn {
    pub fn new(mut coeffs: Vec<C64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(C64::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![C64::new(0.0, 0.0); order + 1] }
    }

    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![C64::new(0.0, 0.0); k + 1];
        coeffs[k] = C64::new(1.0, 0.0);
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| C64::new(c, 0.0)).collect())
    }

    /// First `order + 1` Taylor coefficients of a series given by its generator.
    pub fn from_series(order: usize, coeff: impl Fn(usize) -> C64) -> Self {
        Self { coeffs: (0..=order).map(coeff).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    /// Index of the last coefficient above `threshold`, or `None` for zero.
    pub fn degree(&self, threshold: f64) -> Option<usize> {
        self.coeffs.iter().rposition(|c| c.norm() > threshold)
    }

    pub fn h2_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `<f, g>_2 = sum f_n conj(g_n)`.
    pub fn inner(&self, other: &HardyFn) -> C64 {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b.conj()).sum()
    }

    pub fn distance(&self, other: &HardyFn) -> f64 {
        (self - other).h2_norm()
    }

    /// `S* f = (f - f(0)) / z`.
    pub fn backward_shift(&self) -> HardyFn {
        if self.coeffs.len() == 1 {
            return Self::zero(0);
        }
        Self { coeffs: self.coeffs[1..].to_vec() }
    }

    /// `z f`.
    pub fn shift(&self) -> HardyFn {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: C64) -> C64 {
        self.coeffs.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Keep `c_0..=c_order`, padding with zeros when growing.
    pub fn resized(&self, order: usize) -> HardyFn {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, C64::new(0.0, 0.0));
        Self { coeffs }
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    pub fn scale(&self, s: C64) -> HardyFn {
        Self { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }
}

impl From<&Poly> for HardyFn {
    fn from(p: &Poly) -> Self {
        Self::new(p.coeffs().to_vec())
    }
}

fn zip_with(a: &HardyFn, b: &HardyFn, op: impl Fn(C64, C64) -> C64) -> HardyFn {
    let n = a.coeffs.len().max(b.coeffs.len());
    HardyFn { coeffs: (0..n).map(|k| op(a.coeff(k), b.coeff(k))).collect() }
}

impl Add for &HardyFn {
    type Output = HardyFn;
    fn add(self, rhs: &HardyFn) -> HardyFn {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &HardyFn {
    type Output = HardyFn;
    fn sub(self, rhs: &HardyFn) -> HardyFn {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Neg for &HardyFn {
    type Output = HardyFn;
    fn neg(self) -> HardyFn {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul<C64> for &HardyFn {
    type Output = HardyFn;
    fn mul(self, rhs: C64) -> HardyFn {
        self.scale(rhs)
    }
}
