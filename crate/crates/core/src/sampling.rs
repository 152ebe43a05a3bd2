//! Seeded generators for randomized tests and experiments.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fejer_riesz::abs_squared;
use crate::rational::BoundaryZero;
use crate::{HardyFn, Poly, RationalFn, TrigSymbol, C64};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform in the square `[-1, 1]^2`.
    pub fn complex(&mut self) -> C64 {
        C64::new(self.rng.gen_range(-1.0..1.0), self.rng.gen_range(-1.0..1.0))
    }

    pub fn unit(&mut self) -> C64 {
        C64::from_polar(1.0, self.rng.gen_range(0.0..TAU))
    }

    /// Polynomial of exact degree in `1..=max_degree`.
    pub fn poly(&mut self, max_degree: usize) -> Poly {
        let d = self.rng.gen_range(1..=max_degree.max(1));
        let mut c: Vec<C64> = (0..=d).map(|_| self.complex()).collect();
        c[d] = c[d] + c[d] / c[d].norm().max(1e-3) * 0.5;
        Poly::new(c)
    }

    pub fn hardy(&mut self, order: usize) -> HardyFn {
        HardyFn::new((0..=order).map(|_| self.complex()).collect())
    }

    /// `|p|^2 + c` with `c >= 0`.
    pub fn nonnegative_trig(&mut self, max_degree: usize) -> TrigSymbol {
        let p = self.poly(max_degree);
        let c: f64 = self.rng.gen_range(0.0..1.0);
        let w = abs_squared(&p);
        let m = w.degree() as i64;
        let coeffs: Vec<C64> = (-m..=m)
            .map(|k| w.coeff(k) + if k == 0 { C64::new(c, 0.0) } else { C64::new(0.0, 0.0) })
            .collect();
        TrigSymbol::from_laurent(&coeffs).expect("odd length")
    }

    /// Polynomial with every root at modulus in `[lo, hi]`.
    pub fn poly_with_roots(&mut self, degree: usize, lo: f64, hi: f64) -> Poly {
        let roots: Vec<C64> = (0..degree)
            .map(|_| C64::from_polar(self.rng.gen_range(lo..hi), self.rng.gen_range(0.0..TAU)))
            .collect();
        Poly::from_roots(&roots, C64::new(1.0, 0.0))
    }

    /// A non-extreme rational `b` with `||b||_inf` either exactly one (half the
    /// time, so `1 - |b|^2` has boundary zeros) or in `[0.3, 0.95]`.
    pub fn non_extreme_rational(&mut self, max_degree: usize) -> RationalFn {
        let num = self.poly(max_degree);
        let den_degree = self.rng.gen_range(0..=2usize.min(max_degree));
        let den = self.poly_with_roots(den_degree, 1.5, 3.0);
        let b = RationalFn::new(num, den).expect("poles outside the disk");
        let sup = b.sup_norm().expect("valid symbol");
        let target = if self.rng.gen_bool(0.5) { 1.0 } else { self.rng.gen_range(0.3..0.95) };
        b.scaled(C64::new(target / sup, 0.0))
    }

    /// One to three well separated points on the circle with multiplicities,
    /// total multiplicity at most `max_total`.
    pub fn boundary_zeros(&mut self, max_total: usize) -> Vec<BoundaryZero> {
        let count = self.rng.gen_range(1..=max_total.clamp(1, 3));
        let start = self.rng.gen_range(0.0..TAU);
        let step = TAU / count as f64;
        let mut budget = max_total.max(1) - count;
        (0..count)
            .map(|i| {
                let extra = if budget > 0 { self.rng.gen_range(0..=budget.min(1)) } else { 0 };
                budget -= extra;
                let t = start + step * i as f64 + self.rng.gen_range(-0.2..0.2) * step;
                BoundaryZero { point: C64::from_polar(1.0, t), multiplicity: 1 + extra }
            })
            .collect()
    }
}
