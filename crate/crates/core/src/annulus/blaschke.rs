use std::f64::consts::TAU;

use rayon::prelude::*;

use super::{annulus_norm, harmonic_measure_inner, Annulus, GreenFunction, LaurentFn};
use crate::boundary::analyze;
use crate::{BoundaryGrid, Curve, Error, Result, C64};

/// Distance of `period / 2 pi` times `2 pi` from an integer accepted as single-valued.
pub const PERIOD_TOL: f64 = 1e-6;
/// Trapezoid nodes for the numerical period.
const PERIOD_NODES: usize = 8192;

/// `Phi` with `log|Phi| = -sum_nu G(z, a_nu) + c u(z)`.
///
/// The conjugate period of `log|Phi|` around the inner circle is
/// `2 pi (c / log q - sum_nu u(a_nu))`; when it is a multiple `2 pi m`,
/// `Phi = e^{i theta} z^m prod_nu |a_nu| P(z / a_nu) / P(z conj(a_nu))`,
/// normalized so that `Phi(1) > 0`.
#[derive(Debug, Clone)]
pub struct GeneralizedBlaschke {
    annulus: Annulus,
    zeros: Vec<C64>,
    greens: Vec<GreenFunction>,
    c: f64,
    period: f64,
    numeric_period: f64,
    single_valued: bool,
    winding: i64,
    phase: C64,
}

impl GeneralizedBlaschke {
    pub fn new(zeros: &[C64], c: f64, annulus: &Annulus) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::InvalidParameter("a generalized Blaschke product needs a zero".into()));
        }
        let greens = zeros
            .iter()
            .map(|a| GreenFunction::new(*annulus, *a))
            .collect::<Result<Vec<_>>>()?;
        let log_q = annulus.q().ln();
        let sum_u: f64 = zeros.iter().map(|a| a.norm().ln() / log_q).sum();
        let period = TAU * (c / log_q - sum_u);
        let winding = (period / TAU).round();
        let single_valued = (period - TAU * winding).abs() < PERIOD_TOL;
        let mut phi = Self {
            annulus: *annulus,
            zeros: zeros.to_vec(),
            greens,
            c,
            period,
            numeric_period: 0.0,
            single_valued,
            winding: winding as i64,
            phase: C64::new(1.0, 0.0),
        };
        phi.numeric_period = phi.flux_period()?;
        if single_valued {
            let raw = phi.product(C64::new(1.0, 0.0))?;
            phi.phase = raw.conj() / raw.norm();
        }
        Ok(phi)
    }

    pub fn annulus(&self) -> &Annulus {
        &self.annulus
    }

    pub fn zeros(&self) -> &[C64] {
        &self.zeros
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Closed-form conjugate period around the inner circle.
    pub fn period(&self) -> f64 {
        self.period
    }

    /// The same period from a quadrature of the radial derivative of `log|Phi|`.
    pub fn numeric_period(&self) -> f64 {
        self.numeric_period
    }

    pub fn single_valued(&self) -> bool {
        self.single_valued
    }

    /// `period / 2 pi` rounded.
    pub fn winding(&self) -> i64 {
        self.winding
    }

    /// `-sum G(z, a_nu) + c u(z)`; `-inf` at a zero.
    pub fn log_modulus(&self, z: C64) -> Result<f64> {
        let mut s = self.c * harmonic_measure_inner(z, &self.annulus)?;
        for g in &self.greens {
            match g.eval(z) {
                Ok(v) => s -= v,
                Err(Error::AtPole) => return Ok(f64::NEG_INFINITY),
                Err(e) => return Err(e),
            }
        }
        Ok(s)
    }

    pub fn modulus(&self, z: C64) -> Result<f64> {
        Ok(self.log_modulus(z)?.exp())
    }

    /// `Phi(z)`; only defined when the period closes.
    pub fn eval(&self, z: C64) -> Result<C64> {
        if !self.single_valued {
            return Err(Error::Multivalued { period: self.period });
        }
        if !self.annulus.contains_closed(z, 1e-12) {
            return Err(Error::OutsideAnnulus(z));
        }
        Ok(self.phase * self.product(z)?)
    }

    fn product(&self, z: C64) -> Result<C64> {
        let mut p = z.powi(self.winding as i32);
        for a in &self.zeros {
            p *= a.norm() * self.annulus.prime(z / a)? / self.annulus.prime(z * a.conj())?;
        }
        Ok(p)
    }

    /// `(min, max)` of `|Phi|` on the outer and inner circles over `n` nodes.
    pub fn boundary_moduli(&self, n: usize) -> Result<[(f64, f64); 2]> {
        let mut out = [(f64::INFINITY, 0.0f64); 2];
        for (i, r) in [1.0, self.annulus.q()].into_iter().enumerate() {
            for k in 0..n {
                let m = self.modulus(C64::from_polar(r, TAU * k as f64 / n as f64))?;
                out[i] = (out[i].0.min(m), out[i].1.max(m));
            }
        }
        Ok(out)
    }

    /// `max |Phi|` on an `nr x nt` polar grid strictly inside, rows in parallel.
    pub fn sup_on_grid(&self, nr: usize, nt: usize) -> Result<f64> {
        let nodes = self.annulus.polar_grid(nr, nt);
        let rows: Vec<Result<f64>> = nodes
            .par_chunks(nt)
            .map(|row| row.iter().try_fold(0.0f64, |m, z| Ok(m.max(self.modulus(*z)?))))
            .collect();
        rows.into_iter().try_fold(0.0f64, |m, r| Ok(m.max(r?)))
    }

    /// Trapezoid rule for `int r dU/dr dtheta` on a circle kept away from the
    /// zeros, minus `2 pi` for each zero inside that circle.
    fn flux_period(&self) -> Result<f64> {
        let q = self.annulus.q();
        let rho = (0..64)
            .map(|i| q + (1.0 - q) * (i as f64 + 0.5) / 64.0)
            .max_by(|x, y| {
                let gap = |r: f64| self.zeros.iter().map(|a| (a.norm() - r).abs()).fold(f64::INFINITY, f64::min);
                gap(*x).partial_cmp(&gap(*y)).unwrap()
            })
            .unwrap();
        let h = 1e-5 * rho;
        let mut sum = 0.0;
        for k in 0..PERIOD_NODES {
            let w = C64::from_polar(1.0, TAU * k as f64 / PERIOD_NODES as f64);
            let d = (self.log_modulus(w * (rho + h))? - self.log_modulus(w * (rho - h))?) / (2.0 * h);
            sum += rho * d;
        }
        let inside = self.zeros.iter().filter(|a| a.norm() < rho).count() as f64;
        Ok(sum * TAU / PERIOD_NODES as f64 - TAU * inside)
    }
}

/// Moving zero `index` to `radius` closes the period with `c = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialAdjustment {
    pub index: usize,
    pub radius: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodSolution {
    pub c: f64,
    /// The closing `c` keeps `|Phi| <= 1`.
    pub adjusted: bool,
    pub winding: i64,
    /// Smallest radial move of one zero that closes the period with `c = 0`.
    pub radial: Option<RadialAdjustment>,
}

/// The `c` in `(log q, 0]` that makes the period a multiple of `2 pi`:
/// `c = log q (m + sum u(a_nu))` with `m = ceil(-sum u(a_nu))`.
pub fn solve_period(zeros: &[C64], annulus: &Annulus) -> Result<PeriodSolution> {
    let us = zeros
        .iter()
        .map(|a| {
            if !annulus.contains(*a) {
                return Err(Error::OutsideAnnulus(*a));
            }
            harmonic_measure_inner(*a, annulus)
        })
        .collect::<Result<Vec<f64>>>()?;
    let sum: f64 = us.iter().sum();
    let (c, winding) = if (sum - sum.round()).abs() < 1e-12 {
        (0.0, -sum.round() as i64)
    } else {
        let m = (-sum).ceil();
        (annulus.q().ln() * (m + sum), m as i64)
    };
    let mut radial: Option<RadialAdjustment> = None;
    let mut best = f64::INFINITY;
    for (index, a) in zeros.iter().enumerate() {
        let others = sum - us[index];
        if (others - others.round()).abs() < 1e-12 {
            continue;
        }
        let target = others.floor() + 1.0 - others;
        let radius = annulus.q().powf(target);
        let shift = (radius - a.norm()).abs();
        if shift < best {
            best = shift;
            radial = Some(RadialAdjustment { index, radius });
        }
    }
    let adjusted = if zeros.is_empty() {
        true
    } else {
        GeneralizedBlaschke::new(zeros, c, annulus)?.sup_on_grid(32, 64)? <= 1.0 + 1e-8
    };
    Ok(PeriodSolution { c, adjusted, winding, radial })
}

/// The single-valued generalized Blaschke product with the given zeros and the
/// closing `c` from [`solve_period`].
pub fn generalized_blaschke(zeros: &[C64], annulus: &Annulus) -> Result<GeneralizedBlaschke> {
    let sol = solve_period(zeros, annulus)?;
    GeneralizedBlaschke::new(zeros, sol.c, annulus)
}

/// `|f o Phi| / |f|` in the two-circle norm, with `f o Phi` truncated to the
/// Laurent modes `-N..=N` on each circle, for each order `N`.
pub fn annulus_compose_experiment(f: &LaurentFn, phi: &GeneralizedBlaschke, orders: &[usize]) -> Result<Curve> {
    if !phi.single_valued() {
        return Err(Error::Multivalued { period: phi.period() });
    }
    if f.has_negative_powers() {
        return Err(Error::InvalidParameter("f o Phi needs f analytic at the zeros of Phi".into()));
    }
    let base = annulus_norm(f, phi.annulus());
    let q = phi.annulus().q();
    let values: Vec<Result<f64>> = orders
        .par_iter()
        .map(|&n| {
            if base == 0.0 {
                return Ok(0.0);
            }
            let grid = BoundaryGrid::new((4 * n).next_power_of_two().max(256))?;
            let mut total = 0.0;
            for r in [1.0, q] {
                let samples = grid
                    .nodes()
                    .iter()
                    .map(|w| phi.eval(w * r).map(|v| f.eval(v)))
                    .collect::<Result<Vec<C64>>>()?;
                let spec = analyze(&grid, &samples)?;
                total += spec
                    .iter()
                    .filter(|(k, _)| k.unsigned_abs() as usize <= n)
                    .map(|(_, c)| c.norm_sqr())
                    .sum::<f64>();
            }
            Ok(total.sqrt() / base)
        })
        .collect();
    Ok(Curve::new(orders.to_vec(), values.into_iter().collect::<Result<Vec<_>>>()?))
}
