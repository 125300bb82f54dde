use serde::{Deserialize, Serialize};

/// Claimed limit of a probe.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Limit {
    Finite(f64),
    PlusInfinity,
    /// A positive constant that the lemma does not name.
    Unclaimed,
}

/// Rate at which a probed quantity approaches its limit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RateLabel {
    /// `x^{-1}`
    InvX,
    /// `x^{-1} log x`
    InvXLogX,
    /// `x^{a-b}`
    PowAMinusB(f64),
    /// `1/log x`
    InvLogX,
    /// `x^{b-a-1}`
    PowBMinusAMinus1(f64),
    None,
}

impl RateLabel {
    /// Exponent of a pure power rate.
    pub fn exponent(&self) -> Option<f64> {
        match *self {
            RateLabel::InvX => Some(-1.0),
            RateLabel::PowAMinusB(e) | RateLabel::PowBMinusAMinus1(e) => Some(e),
            _ => None,
        }
    }
}

/// Values of a quantity along a grid, compared with a claimed limit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitProbe {
    pub label: String,
    pub xs: Vec<f64>,
    /// Scale variable along which the rate is measured: `x` for limits at
    /// infinity, `1/(1-x)` for limits at `1⁻`.
    pub scale: Vec<f64>,
    pub values: Vec<f64>,
    pub claimed_limit: Limit,
    pub rate_label: RateLabel,
    /// Allowed final error; `None` when the limit is not a finite number.
    pub tolerance: Option<f64>,
    /// `|value - limit|` at the last point, for finite limits.
    pub final_error: Option<f64>,
    /// Log-log slope of `|value - limit|` over the last two points.
    pub observed_slope: Option<f64>,
    /// For `1/log` rates: error at the last point over error at the point
    /// whose scale is its square root, ideally `1/2`.
    pub log_ratio: Option<f64>,
    /// Largest scaled residual of `G - F = (b/c) z H` along the grid.
    pub contiguous_max: f64,
    pub converged: bool,
}

impl LimitProbe {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        label: &str,
        xs: Vec<f64>,
        scale: Vec<f64>,
        values: Vec<f64>,
        claimed_limit: Limit,
        rate_label: RateLabel,
        tolerance: f64,
        contiguous_max: f64,
    ) -> Self {
        let mut p = LimitProbe {
            label: label.into(),
            xs,
            scale,
            values,
            claimed_limit,
            rate_label,
            tolerance: Some(tolerance).filter(|t| t.is_finite()),
            final_error: None,
            observed_slope: None,
            log_ratio: None,
            contiguous_max,
            converged: false,
        };
        p.assess();
        p
    }

    /// Recomputes the derived fields with a new tolerance.
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = Some(tolerance).filter(|t| t.is_finite());
        self.assess();
        self
    }

    /// Value at the grid point closest to `x`.
    pub fn value_at(&self, x: f64) -> Option<f64> {
        let i = (0..self.xs.len()).min_by(|&i, &j| (self.xs[i] - x).abs().total_cmp(&(self.xs[j] - x).abs()))?;
        Some(self.values[i])
    }

    fn assess(&mut self) {
        let n = self.values.len();
        if n == 0 {
            return;
        }
        let v = &self.values;
        let last3 = &v[n.saturating_sub(3)..];
        let increasing = last3.windows(2).all(|w| w[1] > w[0]);
        let decreasing = last3.windows(2).all(|w| w[1] < w[0]);
        match self.claimed_limit {
            Limit::Finite(l) => {
                let err: Vec<f64> = v.iter().map(|x| (x - l).abs()).collect();
                self.final_error = Some(err[n - 1]);
                let toward = (increasing || decreasing) && err[n.saturating_sub(3)..].windows(2).all(|w| w[1] <= w[0]);
                if n >= 2 && err[n - 1] > 0.0 && err[n - 2] > 0.0 {
                    self.observed_slope = Some((err[n - 1] / err[n - 2]).ln() / (self.scale[n - 1] / self.scale[n - 2]).ln());
                }
                if self.rate_label == RateLabel::InvLogX {
                    let target = self.scale[n - 1].sqrt();
                    if let Some(i) = self.scale.iter().position(|&s| (s / target - 1.0).abs() < 1e-6) {
                        self.log_ratio = Some(err[n - 1] / err[i]);
                    }
                }
                self.converged = toward
                    && match self.log_ratio {
                        Some(r) => (r - 0.5).abs() <= 0.125,
                        None => self.tolerance.map_or(false, |t| err[n - 1] <= t),
                    };
            }
            Limit::PlusInfinity => {
                self.converged = increasing;
            }
            Limit::Unclaimed => {
                self.converged = increasing || decreasing;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn probe(values: Vec<f64>, limit: Limit, rate: RateLabel) -> LimitProbe {
        let xs: Vec<f64> = (1..=values.len()).map(|k| 10f64.powi(k as i32)).collect();
        LimitProbe::new("t", xs.clone(), xs, values, limit, rate, 1e-2, 0.0)
    }

    #[test]
    fn power_decay() {
        let vals = (1..=6).map(|k| 10f64.powi(-k)).collect();
        let p = probe(vals, Limit::Finite(0.0), RateLabel::InvX);
        assert!(p.converged);
        assert!((p.observed_slope.unwrap() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn log_decay_halves() {
        let vals = (1..=6).map(|k| 1.0 / (k as f64 * 10f64.ln())).collect();
        let p = probe(vals, Limit::Finite(0.0), RateLabel::InvLogX);
        assert!((p.log_ratio.unwrap() - 0.5).abs() < 1e-12);
        assert!(p.converged);
    }

    #[test]
    fn not_monotone() {
        let p = probe(vec![1.0, 0.1, 0.001, 0.002], Limit::Finite(0.0), RateLabel::None);
        assert!(!p.converged);
        let q = probe(vec![1.0, 2.0, 3.0], Limit::PlusInfinity, RateLabel::None);
        assert!(q.converged);
    }
}
