use super::pair::PythagoreanPair;
use super::plus::{hb_inner, PlusOperator};
use crate::boundary::{analyze, synthesize};
use crate::{BoundaryGrid, Error, FourierCoeffs, HardyFn, Result, C64};

/// Nodes with `1 - |b| <= delta` are left out of the support `E`.
pub const DEFAULT_SUPPORT_DELTA: f64 = 1e-10;

/// `Jf = (f, g)` in `H² ⊕ L²(E)` with `g = -(conj a / |a|) f+` sampled on `E`.
#[derive(Debug, Clone)]
pub struct JImage {
    pub grid: BoundaryGrid,
    pub f: HardyFn,
    /// Samples of `g` on the whole grid, zero off `E`.
    pub g: Vec<C64>,
    pub support: Vec<bool>,
    /// `|f|_b^2`.
    pub hb_norm_sq: f64,
    /// `|P+(conj b f + sqrt(1 - |b|^2) g)|_2`.
    pub projection_residual: f64,
}

impl JImage {
    pub fn g_norm_sq(&self) -> f64 {
        self.g.iter().map(|x| x.norm_sqr()).sum::<f64>() * self.grid.weight()
    }

    /// `|Jf|^2 = |f|_2^2 + |g|_{L^2(E)}^2`.
    pub fn norm_sq(&self) -> f64 {
        self.f.h2_norm().powi(2) + self.g_norm_sq()
    }

    /// `| |Jf|^2 - |f|_b^2 |`.
    pub fn isometry_defect(&self) -> f64 {
        (self.norm_sq() - self.hb_norm_sq).abs()
    }

    pub fn support_fraction(&self) -> f64 {
        self.support.iter().filter(|s| **s).count() as f64 / self.support.len() as f64
    }
}

/// Build `Jf` on a midpoint grid large enough for `f` and the tails of `b`.
pub fn isometry_j(
    f: &HardyFn,
    pair: &PythagoreanPair,
    delta: f64,
    grid_size: Option<usize>,
) -> Result<JImage> {
    let size = grid_size.unwrap_or_else(|| (4 * (f.order() + 1)).next_power_of_two().max(4096));
    let (grid, bs, support) = support_grid(pair, size, delta)?;
    let a_s = pair.a().samples(&grid);
    let abs_a: Vec<f64> = a_s.iter().map(|x| x.norm()).collect();
    let plus = PlusOperator::new(pair, f.order()).solve(f).plus;
    let fs = synthesize(&grid, &FourierCoeffs::from_analytic(f.coeffs()))?;
    let ps = synthesize(&grid, &FourierCoeffs::from_analytic(plus.coeffs()))?;
    let zero = C64::new(0.0, 0.0);
    let g: Vec<C64> = (0..size)
        .map(|k| if support[k] { -(a_s[k].conj() / abs_a[k]) * ps[k] } else { zero })
        .collect();
    let mixed: Vec<C64> = (0..size).map(|k| bs[k].conj() * fs[k] + abs_a[k] * g[k]).collect();
    let spectrum = analyze(&grid, &mixed)?;
    let projection_residual = spectrum
        .iter()
        .filter(|(k, _)| *k >= 0)
        .map(|(_, c)| c.norm_sqr())
        .sum::<f64>()
        .sqrt();
    let hb_norm_sq = hb_inner(f, f, pair)?.re;
    Ok(JImage { grid, f: f.clone(), g, support, hb_norm_sq, projection_residual })
}

/// Shifted grid with the fewest nodes where `1 - |b| <= delta`; every excised node
/// drops its share of `|g|^2` from the quadrature.
fn support_grid(pair: &PythagoreanPair, size: usize, delta: f64) -> Result<(BoundaryGrid, Vec<C64>, Vec<bool>)> {
    let mut best: Option<(usize, BoundaryGrid, Vec<C64>, Vec<bool>)> = None;
    for offset in [0.5, 0.25, 0.75, 0.125, 0.375, 0.625, 0.875] {
        let grid = BoundaryGrid::with_offset(size, offset)?;
        let bs = pair.b().samples(&grid);
        let support: Vec<bool> = bs.iter().map(|b| 1.0 - b.norm() > delta).collect();
        let excised = support.iter().filter(|s| !**s).count();
        if best.as_ref().is_none_or(|b| excised < b.0) {
            best = Some((excised, grid, bs, support));
        }
        if excised == 0 {
            break;
        }
    }
    let (_, grid, bs, support) = best.expect("at least one offset");
    if !support.iter().any(|s| *s) {
        return Err(Error::EmptySupport { delta });
    }
    Ok((grid, bs, support))
}

/// `<(b h, sqrt(1 - |b|^2) h), Jf>`; vanishes because the range of `J` is the
/// orthogonal complement of `{(b h, sqrt(1 - |b|^2) h)}`.
pub fn complement_inner(image: &JImage, h: &HardyFn, pair: &PythagoreanPair) -> Result<C64> {
    let grid = &image.grid;
    let bs = pair.b().samples(grid);
    let abs_a: Vec<f64> = pair.a().samples(grid).iter().map(|x| x.norm()).collect();
    let hs = synthesize(grid, &FourierCoeffs::from_analytic(h.coeffs()))?;
    let fs = synthesize(grid, &FourierCoeffs::from_analytic(image.f.coeffs()))?;
    let mut sum = C64::new(0.0, 0.0);
    for k in 0..grid.size() {
        sum += bs[k] * hs[k] * fs[k].conj();
        if image.support[k] {
            sum += abs_a[k] * hs[k] * image.g[k].conj();
        }
    }
    Ok(sum * grid.weight())
}
