//! Value-versus-truncation-order curves and the plateau test used to report
//! empirical boundedness.

/// Relative growth over the final doubling below which a curve is said to plateau.
pub const PLATEAU_TOL: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub orders: Vec<usize>,
    pub values: Vec<f64>,
}

impl Curve {
    pub fn new(orders: Vec<usize>, values: Vec<f64>) -> Self {
        assert_eq!(orders.len(), values.len());
        Self { orders, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn last(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// Index of the entry whose order is half the last order, or the
    /// second-to-last entry when no such order was sampled.
    fn final_doubling_base(&self) -> Option<usize> {
        let n = self.len();
        if n < 2 {
            return None;
        }
        let last = self.orders[n - 1];
        Some(self.orders.iter().position(|&o| 2 * o == last).unwrap_or(n - 2))
    }

    /// `(v_last - v_base) / |v_base|` over the final doubling.
    pub fn final_relative_growth(&self) -> Option<f64> {
        let base = self.final_doubling_base()?;
        let (a, b) = (self.values[base], *self.values.last()?);
        Some((b - a) / a.abs().max(f64::MIN_POSITIVE))
    }

    /// Consecutive ratios `v_{i+1} / v_i`.
    pub fn ratios(&self) -> Vec<f64> {
        self.values.windows(2).map(|w| w[1] / w[0]).collect()
    }

    pub fn plateaus(&self, tol: f64) -> bool {
        self.values.iter().all(|v| v.is_finite())
            && self.final_relative_growth().is_some_and(|g| g.abs() < tol)
    }

    pub fn is_nondecreasing(&self, slack: f64) -> bool {
        self.values.windows(2).all(|w| w[1] >= w[0] - slack)
    }

    pub fn is_nonincreasing(&self, slack: f64) -> bool {
        self.values.windows(2).all(|w| w[1] <= w[0] + slack)
    }

    pub fn points(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.orders.iter().copied().zip(self.values.iter().copied())
    }
}
