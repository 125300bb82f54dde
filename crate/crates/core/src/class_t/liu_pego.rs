use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::AnalyticHandle;
use crate::error::Result;

/// Sample points for the four class-𝒯 conditions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Negative real samples are log-spaced in `[-x_max, -x_min]`.
    pub x_max: f64,
    pub x_min: f64,
    pub n_negative: usize,
    /// Samples in `[0, 1)` are log-spaced in `1 - x` from `1` down to `one_gap`.
    pub one_gap: f64,
    pub n_positive: usize,
    /// Upper half-plane samples `r e^{iθ}`, `r` log-spaced, `θ` midpoints of `(0, π)`.
    pub r_min: f64,
    pub r_max: f64,
    pub n_radial: usize,
    pub n_angular: usize,
    /// Points `x` at which `F(-x)` is read for the limit at `-∞`.
    pub tail: Vec<f64>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            x_max: 1e6,
            x_min: 1e-3,
            n_negative: 60,
            one_gap: 1e-3,
            n_positive: 40,
            r_min: 1e-3,
            r_max: 1e3,
            n_radial: 64,
            n_angular: 64,
            tail: vec![1e3, 1e4, 1e5, 1e6],
        }
    }
}

fn geomspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (l, h) = (lo.ln(), hi.ln());
    (0..n).map(|i| (l + (h - l) * i as f64 / (n - 1) as f64).exp()).collect()
}

impl GridSpec {
    /// A square `n x n` half-plane grid with the default real axis sampling.
    pub fn square(n: usize) -> Self {
        GridSpec { n_radial: n, n_angular: n, ..GridSpec::default() }
    }

    /// Real samples in increasing order.
    pub fn real_points(&self) -> Vec<f64> {
        let mut xs: Vec<f64> = geomspace(self.x_min, self.x_max, self.n_negative).into_iter().rev().map(|x| -x).collect();
        xs.push(0.0);
        xs.extend(geomspace(self.one_gap, 1.0, self.n_positive).into_iter().rev().skip(1).map(|g| 1.0 - g));
        xs
    }

    pub fn half_plane_points(&self) -> Vec<Complex64> {
        let rs = geomspace(self.r_min, self.r_max, self.n_radial);
        let mut out = Vec::with_capacity(self.n_radial * self.n_angular);
        for &r in &rs {
            for j in 0..self.n_angular {
                let theta = std::f64::consts::PI * (j as f64 + 0.5) / self.n_angular as f64;
                out.push(Complex64::from_polar(r, theta));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CondI {
    pub value: Complex64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CondII {
    /// Largest `|Im F(x)| / (1 + |F(x)|)` on the real grid.
    pub max_rel_im: f64,
    pub positive: bool,
    pub non_decreasing: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CondIII {
    /// Smallest `Im F(z) / (1 + |F(z)|)` on the half-plane grid.
    pub min_scaled_im: f64,
    pub argmin: Complex64,
    /// Smallest `Im[z F(z)] / (1 + |z F(z)|)`.
    pub min_scaled_im_zf: f64,
    pub zf_pass: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CondIV {
    pub xs: Vec<f64>,
    /// `Re F(-x)` at each `x`.
    pub values: Vec<f64>,
    /// `F(-x)` non-increasing along the tail.
    pub trend_monotone: bool,
    pub limit_estimate: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TVerdict {
    Consistent,
    Violated { condition: String, z: Complex64, value: Complex64 },
}

/// Outcome of sampling the four class-𝒯 conditions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TCheckReport {
    pub label: String,
    pub cond_i: CondI,
    pub cond_ii: CondII,
    pub cond_iii: CondIII,
    pub cond_iv: CondIV,
    pub grids: GridSpec,
    pub verdict: TVerdict,
}

impl TCheckReport {
    pub fn is_consistent(&self) -> bool {
        self.verdict == TVerdict::Consistent
    }
}

const COND_I_TOL: f64 = 1e-12;
const REAL_TOL: f64 = 1e-9;
const IM_TOL: f64 = 1e-9;
const MONO_TOL: f64 = 1e-10;

fn eval_all(h: &AnalyticHandle, zs: &[Complex64]) -> Result<Vec<Complex64>> {
    let out: Vec<Result<Complex64>> = zs.par_iter().map(|&z| h.eval(z).map_err(|e| e.at(z))).collect();
    out.into_iter().collect()
}

/// Samples conditions (i)-(iv) for `h` on `grid`.
///
/// (i) `h(0) = 1`; (ii) `h` real on the real grid, with positivity and
/// monotonicity recorded; (iii) `Im h >= 0` on the upper half-plane grid;
/// (iv) `h(-x)` stays non-negative and non-increasing along the tail.
pub fn check_liu_pego(h: &AnalyticHandle, grid: &GridSpec) -> Result<TCheckReport> {
    let zero = Complex64::new(0.0, 0.0);
    let v0 = h.eval(zero).map_err(|e| e.at(zero))?;
    let cond_i = CondI { value: v0, pass: (v0 - 1.0).norm() <= COND_I_TOL };

    let xs = grid.real_points();
    let real_z: Vec<Complex64> = xs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let real_v = eval_all(h, &real_z)?;
    let mut max_rel_im = 0.0f64;
    let mut worst_real = (zero, zero);
    let mut positive = true;
    let mut non_decreasing = true;
    for (i, (&z, &v)) in real_z.iter().zip(&real_v).enumerate() {
        let r = v.im.abs() / (1.0 + v.norm());
        if r > max_rel_im || !r.is_finite() {
            max_rel_im = if r.is_finite() { r } else { f64::INFINITY };
            worst_real = (z, v);
        }
        positive &= v.re > 0.0;
        if i > 0 {
            let prev = real_v[i - 1].re;
            non_decreasing &= v.re >= prev - MONO_TOL * (1.0 + prev.abs());
        }
    }
    let cond_ii = CondII { max_rel_im, positive, non_decreasing, pass: max_rel_im <= REAL_TOL };

    let uhp = grid.half_plane_points();
    let uhp_v = eval_all(h, &uhp)?;
    let mut min_scaled_im = f64::INFINITY;
    let mut argmin = zero;
    let mut worst_uhp = zero;
    let mut min_zf = f64::INFINITY;
    for (&z, &v) in uhp.iter().zip(&uhp_v) {
        let s = v.im / (1.0 + v.norm());
        if s < min_scaled_im || s.is_nan() {
            min_scaled_im = if s.is_nan() { f64::NEG_INFINITY } else { s };
            argmin = z;
            worst_uhp = v;
        }
        let zf = z * v;
        min_zf = min_zf.min(zf.im / (1.0 + zf.norm()));
    }
    let cond_iii = CondIII {
        min_scaled_im,
        argmin,
        min_scaled_im_zf: min_zf,
        zf_pass: min_zf >= -IM_TOL,
        pass: min_scaled_im >= -IM_TOL,
    };

    let tail_z: Vec<Complex64> = grid.tail.iter().map(|&x| Complex64::new(-x, 0.0)).collect();
    let tail_v = eval_all(h, &tail_z)?;
    let values: Vec<f64> = tail_v.iter().map(|v| v.re).collect();
    let trend_monotone = values.windows(2).all(|w| w[1] <= w[0] + MONO_TOL * (1.0 + w[0].abs()));
    let limit_estimate = values.last().copied().unwrap_or(f64::NAN);
    let tail_ok = values.iter().zip(&tail_v).all(|(&x, v)| x >= -IM_TOL * (1.0 + v.norm()));
    let cond_iv = CondIV { xs: grid.tail.clone(), values, trend_monotone, limit_estimate, pass: tail_ok && trend_monotone };

    let verdict = if !cond_i.pass {
        TVerdict::Violated { condition: "i".into(), z: zero, value: v0 }
    } else if !cond_ii.pass {
        TVerdict::Violated { condition: "ii".into(), z: worst_real.0, value: worst_real.1 }
    } else if !cond_iii.pass {
        TVerdict::Violated { condition: "iii".into(), z: argmin, value: worst_uhp }
    } else if !cond_iv.pass {
        let i = cond_iv
            .values
            .iter()
            .position(|&x| x < 0.0)
            .unwrap_or(cond_iv.values.len() - 1);
        TVerdict::Violated { condition: "iv".into(), z: tail_z[i], value: tail_v[i] }
    } else {
        TVerdict::Consistent
    };
    Ok(TCheckReport { label: h.label().to_string(), cond_i, cond_ii, cond_iii, cond_iv, grids: grid.clone(), verdict })
}
