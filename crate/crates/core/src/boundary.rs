//! Uniform grids on the unit circle, Fourier analysis and synthesis, the Riesz
//! projection and Toeplitz operators.
//!
//! Every operation states its alias-free minimum grid size and fails with
//! [`Error::Aliasing`] below it.

use std::f64::consts::PI;

use crate::{fft, Error, HardyFn, Result, C64, REPORT_THRESHOLD};

/// `size` equispaced nodes `exp(2 pi i (k + offset) / size)` on the unit circle,
/// each carrying quadrature weight `1 / size` (normalized arclength).
///
/// The offset is a fraction of one grid step; `0.5` gives the midpoint grid,
/// which avoids the roots of unity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryGrid {
    size: usize,
    offset: f64,
}

impl BoundaryGrid {
    pub const DEFAULT_SIZE: usize = 4096;

    pub fn new(size: usize) -> Result<Self> {
        Self::with_offset(size, 0.0)
    }

    /// Grid whose nodes sit halfway between the `size`-th roots of unity.
    pub fn midpoint(size: usize) -> Result<Self> {
        Self::with_offset(size, 0.5)
    }

    pub fn with_offset(size: usize, offset: f64) -> Result<Self> {
        if size < 2 || !size.is_power_of_two() {
            return Err(Error::GridNotPowerOfTwo(size));
        }
        if !(0.0..1.0).contains(&offset) {
            return Err(Error::InvalidParameter(format!("grid offset {offset} not in [0, 1)")));
        }
        Ok(Self { size, offset })
    }

    /// Smallest power-of-two grid (at least `floor`) with more than `bandwidth` nodes.
    pub fn covering(bandwidth: usize, floor: usize) -> Self {
        let size = (bandwidth + 1).max(floor).max(2).next_power_of_two();
        Self { size, offset: 0.0 }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn weight(&self) -> f64 {
        1.0 / self.size as f64
    }

    pub fn angle(&self, k: usize) -> f64 {
        2.0 * PI * (k as f64 + self.offset) / self.size as f64
    }

    pub fn node(&self, k: usize) -> C64 {
        C64::from_polar(1.0, self.angle(k))
    }

    pub fn nodes(&self) -> Vec<C64> {
        (0..self.size).map(|k| self.node(k)).collect()
    }

    pub fn sample(&self, f: impl Fn(C64) -> C64) -> Vec<C64> {
        (0..self.size).map(|k| f(self.node(k))).collect()
    }

    fn check(&self, samples: &[C64]) -> Result<()> {
        if samples.len() != self.size {
            return Err(Error::GridMismatch { expected: self.size, got: samples.len() });
        }
        Ok(())
    }
}

impl Default for BoundaryGrid {
    fn default() -> Self {
        Self { size: Self::DEFAULT_SIZE, offset: 0.0 }
    }
}

/// Two-sided (Laurent) coefficient vector; index `lowest + j` holds `coeffs[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoeffs {
    lowest: i64,
    coeffs: Vec<C64>,
}

impl FourierCoeffs {
    pub fn new(lowest: i64, coeffs: Vec<C64>) -> Self {
        Self { lowest, coeffs }
    }

    pub fn zero() -> Self {
        Self { lowest: 0, coeffs: Vec::new() }
    }

    pub fn from_analytic(coeffs: &[C64]) -> Self {
        Self { lowest: 0, coeffs: coeffs.to_vec() }
    }

    /// Coefficients of `conj(p)` on the circle for an analytic polynomial `p`.
    pub fn from_coanalytic(coeffs: &[C64]) -> Self {
        let n = coeffs.len() as i64;
        let coeffs = coeffs.iter().rev().map(|c| c.conj()).collect();
        Self { lowest: 1 - n, coeffs }
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    /// Highest stored index; `lowest - 1` when empty.
    pub fn highest(&self) -> i64 {
        self.lowest + self.coeffs.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> C64 {
        let j = k - self.lowest;
        if j < 0 || j >= self.coeffs.len() as i64 {
            C64::new(0.0, 0.0)
        } else {
            self.coeffs[j as usize]
        }
    }

    pub fn raw(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, C64)> + '_ {
        self.coeffs.iter().enumerate().map(move |(j, &c)| (self.lowest + j as i64, c))
    }

    pub fn l2_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Evaluate `sum c_k z^k`.
    pub fn eval(&self, z: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc * z.powi(self.lowest as i32)
    }

    /// Coefficients of `conj(f)` on the circle: index `k` holds `conj(c_{-k})`.
    pub fn conj_on_circle(&self) -> Self {
        let coeffs = self.coeffs.iter().rev().map(|c| c.conj()).collect();
        Self { lowest: -self.highest(), coeffs }
    }

    /// Zero out coefficients below the reporting threshold and trim both ends.
    pub fn reported(&self) -> Self {
        self.trimmed(REPORT_THRESHOLD)
    }

    pub fn trimmed(&self, threshold: f64) -> Self {
        let clean: Vec<C64> = self
            .coeffs
            .iter()
            .map(|&c| if c.norm() < threshold { C64::new(0.0, 0.0) } else { c })
            .collect();
        let Some(first) = clean.iter().position(|c| *c != C64::new(0.0, 0.0)) else {
            return Self::zero();
        };
        let last = clean.iter().rposition(|c| *c != C64::new(0.0, 0.0)).unwrap();
        Self { lowest: self.lowest + first as i64, coeffs: clean[first..=last].to_vec() }
    }
}

/// An L-infinity symbol on the circle held by its Laurent coefficients `-M..=M`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigSymbol {
    coeffs: FourierCoeffs,
}

impl TrigSymbol {
    pub fn new(coeffs: FourierCoeffs) -> Self {
        Self { coeffs }
    }

    /// Symbol from coefficients indexed `-M..=M` (`2M + 1` entries).
    pub fn from_laurent(coeffs: &[C64]) -> Result<Self> {
        if coeffs.len() % 2 == 0 {
            return Err(Error::InvalidParameter(format!(
                "Laurent coefficient list must have odd length, got {}",
                coeffs.len()
            )));
        }
        let m = (coeffs.len() / 2) as i64;
        Ok(Self { coeffs: FourierCoeffs::new(-m, coeffs.to_vec()) })
    }

    pub fn from_samples(grid: &BoundaryGrid, samples: &[C64]) -> Result<Self> {
        Ok(Self { coeffs: analyze(grid, samples)?.reported() })
    }

    pub fn analytic(coeffs: &[C64]) -> Self {
        Self { coeffs: FourierCoeffs::from_analytic(coeffs) }
    }

    pub fn coanalytic(coeffs: &[C64]) -> Self {
        Self { coeffs: FourierCoeffs::from_coanalytic(coeffs) }
    }

    pub fn constant(c: C64) -> Self {
        Self::analytic(&[c])
    }

    pub fn coeffs(&self) -> &FourierCoeffs {
        &self.coeffs
    }

    /// Laurent degree `M`: the largest `|k|` with a stored coefficient.
    pub fn degree(&self) -> usize {
        if self.coeffs.is_empty() {
            return 0;
        }
        self.coeffs.lowest().unsigned_abs().max(self.coeffs.highest().unsigned_abs()) as usize
    }

    pub fn coeff(&self, k: i64) -> C64 {
        self.coeffs.coeff(k)
    }

    /// Largest violation of the Hermitian symmetry `c_{-k} = conj(c_k)`.
    pub fn hermitian_defect(&self) -> f64 {
        let m = self.degree() as i64;
        (-m..=m)
            .map(|k| (self.coeff(-k) - self.coeff(k).conj()).norm())
            .fold(0.0, f64::max)
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.coeffs.eval(z)
    }

    pub fn samples(&self, grid: &BoundaryGrid) -> Result<Vec<C64>> {
        synthesize(grid, &self.coeffs)
    }
}

/// Coefficients of the trigonometric interpolant of `samples`, indices
/// `-N/2 ..= N/2 - 1`.
pub fn analyze(grid: &BoundaryGrid, samples: &[C64]) -> Result<FourierCoeffs> {
    grid.check(samples)?;
    let n = grid.size();
    let mut buf = samples.to_vec();
    fft::forward(&mut buf);
    let half = (n / 2) as i64;
    let scale = 1.0 / n as f64;
    let coeffs = (-half..half)
        .map(|m| {
            let bin = m.rem_euclid(n as i64) as usize;
            let shift = C64::from_polar(1.0, -2.0 * PI * m as f64 * grid.offset() / n as f64);
            buf[bin] * shift * scale
        })
        .collect();
    Ok(FourierCoeffs::new(-half, coeffs))
}

/// Samples of `sum c_k z^k` on the grid; the index span must fit in the grid.
pub fn synthesize(grid: &BoundaryGrid, coeffs: &FourierCoeffs) -> Result<Vec<C64>> {
    let n = grid.size();
    if coeffs.raw().len() > n {
        return Err(Error::Aliasing { size: n, required: coeffs.raw().len() });
    }
    let mut buf = vec![C64::new(0.0, 0.0); n];
    for (k, c) in coeffs.iter() {
        let bin = k.rem_euclid(n as i64) as usize;
        let shift = C64::from_polar(1.0, 2.0 * PI * k as f64 * grid.offset() / n as f64);
        buf[bin] += c * shift;
    }
    fft::inverse(&mut buf);
    Ok(buf)
}

/// The Riesz projection `P+`: keep the nonnegative modes.
pub fn riesz_project(c: &FourierCoeffs) -> HardyFn {
    if c.highest() < 0 {
        return HardyFn::zero(0);
    }
    let coeffs = (0..=c.highest()).map(|k| c.coeff(k)).collect();
    HardyFn::new(coeffs)
}

/// `T_psi f = P+(psi f)`, computed on the grid.
///
/// Needs `N >= 2 (deg f + M)`; smaller grids are rejected.
pub fn toeplitz_apply(grid: &BoundaryGrid, psi: &TrigSymbol, f: &HardyFn) -> Result<HardyFn> {
    let m = psi.degree();
    let required = 2 * (f.order() + m);
    if grid.size() < required {
        return Err(Error::Aliasing { size: grid.size(), required });
    }
    let ps = psi.samples(grid)?;
    let fs = synthesize(grid, &FourierCoeffs::from_analytic(f.coeffs()))?;
    let product: Vec<C64> = ps.iter().zip(&fs).map(|(a, b)| a * b).collect();
    let spectrum = analyze(grid, &product)?;
    let top = f.order() as i64 + psi.coeffs().highest().max(0);
    let coeffs = (0..=top).map(|k| spectrum.coeff(k)).collect();
    Ok(HardyFn::new(coeffs))
}

/// `<x, y>_2 = (1/N) sum x_k conj(y_k)` against normalized arclength.
pub fn l2_inner(grid: &BoundaryGrid, x: &[C64], y: &[C64]) -> Result<C64> {
    grid.check(x)?;
    grid.check(y)?;
    let sum: C64 = x.iter().zip(y).map(|(a, b)| a * b.conj()).sum();
    Ok(sum * grid.weight())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn analyze_constant_and_modes() {
        let grid = BoundaryGrid::new(64).unwrap();
        let one = analyze(&grid, &grid.sample(|_| c(1.0))).unwrap();
        assert!(close(one.coeff(0), c(1.0), 1e-14));
        assert!(one.iter().filter(|(k, _)| *k != 0).all(|(_, v)| v.norm() < 1e-14));

        let mode = analyze(&grid, &grid.sample(|z| z)).unwrap();
        assert!(close(mode.coeff(1), c(1.0), 1e-14));
        assert!(close(mode.coeff(0), c(0.0), 1e-14));

        // 2 + 2 cos(theta) = z^-1 + 2 + z
        let w = analyze(&grid, &grid.sample(|z| c(2.0 + 2.0 * z.re))).unwrap();
        assert!(close(w.coeff(-1), c(1.0), 1e-14));
        assert!(close(w.coeff(0), c(2.0), 1e-14));
        assert!(close(w.coeff(1), c(1.0), 1e-14));
        assert_eq!(w.reported().raw().len(), 3);
    }

    #[test]
    fn grid_mismatch_and_bad_sizes() {
        let grid = BoundaryGrid::new(16).unwrap();
        assert_eq!(
            analyze(&grid, &[c(1.0); 8]),
            Err(Error::GridMismatch { expected: 16, got: 8 })
        );
        assert!(BoundaryGrid::new(24).is_err());
        assert!(l2_inner(&grid, &[c(1.0); 16], &[c(1.0); 15]).is_err());
    }

    #[test]
    fn midpoint_grid_round_trip() {
        let grid = BoundaryGrid::midpoint(32).unwrap();
        let f = FourierCoeffs::new(-3, vec![c(1.0), C64::new(0.0, 2.0), c(-1.0), c(0.5), c(0.25)]);
        let samples = synthesize(&grid, &f).unwrap();
        for k in 0..grid.size() {
            assert!(close(samples[k], f.eval(grid.node(k)), 1e-13));
        }
        let back = analyze(&grid, &samples).unwrap();
        for k in -3..=1 {
            assert!(close(back.coeff(k), f.coeff(k), 1e-14));
        }
    }

    #[test]
    fn riesz_projection_examples() {
        let p = riesz_project(&FourierCoeffs::from_analytic(&[c(1.0), c(2.0)]));
        assert_eq!(p.coeffs(), &[c(1.0), c(2.0)]);
        let anti = riesz_project(&FourierCoeffs::new(-1, vec![c(1.0)]));
        assert_eq!(anti.h2_norm(), 0.0);
        // |1 + z|^2 = z^-1 + 2 + z  ->  2 + z
        let w = riesz_project(&FourierCoeffs::new(-1, vec![c(1.0), c(2.0), c(1.0)]));
        assert_eq!(w.coeffs(), &[c(2.0), c(1.0)]);
    }

    #[test]
    fn toeplitz_examples() {
        let grid = BoundaryGrid::new(64).unwrap();
        let f = HardyFn::new(vec![c(3.0), c(2.0), C64::new(0.0, 1.0)]);
        let id = toeplitz_apply(&grid, &TrigSymbol::constant(c(1.0)), &f).unwrap();
        assert!(id.distance(&f) < 1e-14);
        let zbar = TrigSymbol::new(FourierCoeffs::new(-1, vec![c(1.0)]));
        let shifted = toeplitz_apply(&grid, &zbar, &f).unwrap();
        assert!(shifted.distance(&HardyFn::new(vec![c(2.0), C64::new(0.0, 1.0)])) < 1e-14);
        let z = TrigSymbol::analytic(&[c(0.0), c(1.0)]);
        let mult = toeplitz_apply(&grid, &z, &f).unwrap();
        assert!(mult.distance(&f.shift()) < 1e-14);
    }

    #[test]
    fn toeplitz_rejects_aliasing_grid() {
        let grid = BoundaryGrid::new(8).unwrap();
        let psi = TrigSymbol::from_laurent(&[c(1.0); 5]).unwrap();
        let f = HardyFn::new(vec![c(1.0); 4]);
        assert_eq!(
            toeplitz_apply(&grid, &psi, &f),
            Err(Error::Aliasing { size: 8, required: 10 })
        );
    }

    #[test]
    fn l2_inner_examples() {
        let grid = BoundaryGrid::new(32).unwrap();
        let one = grid.sample(|_| c(1.0));
        let z = grid.sample(|z| z);
        let z2 = grid.sample(|z| z * z);
        let opz = grid.sample(|z| z + 1.0);
        assert!(close(l2_inner(&grid, &one, &one).unwrap(), c(1.0), 1e-15));
        assert!(close(l2_inner(&grid, &z, &z2).unwrap(), c(0.0), 1e-15));
        assert!(close(l2_inner(&grid, &opz, &opz).unwrap(), c(2.0), 1e-14));
    }

    #[test]
    fn symbol_helpers() {
        let s = TrigSymbol::from_laurent(&[c(1.0), c(2.0), c(1.0)]).unwrap();
        assert_eq!(s.degree(), 1);
        assert!(s.hermitian_defect() < 1e-15);
        let cz = TrigSymbol::coanalytic(&[c(1.0), C64::new(0.0, 1.0)]);
        assert_eq!(cz.coeff(-1), C64::new(0.0, -1.0));
        assert!(cz.hermitian_defect() > 0.5);
    }
}
