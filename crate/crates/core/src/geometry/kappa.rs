use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::params::ParamTriple;
use crate::specfun::{preschwarzian, PreschwarzRoute, SlitPoint};

/// `κ = (c² - a² - b² + 3(a+b-c) - 2) / (2(a+b-c))`, valid for
/// `0 < a < 1 < b <= c < min{a+b, 1+a+b-ab}` (checked exactly).
pub fn kappa_closed_form(p: &ParamTriple) -> Result<f64> {
    let r = p.rational();
    let zero = BigRational::zero();
    let one = BigRational::one();
    let cap = std::cmp::min(&r.a + &r.b, &one + &r.a + &r.b - &r.a * &r.b);
    if !(zero < r.a && r.a < one && one < r.b && r.b <= r.c && r.c < cap) {
        return Err(Error::Hypothesis(format!("need 0 < a < 1 < b <= c < min(a+b, 1+a+b-ab), got {p}")));
    }
    let (a, b, c, d) = (p.a, p.b, p.c, p.delta);
    Ok((c * c - a * a - b * b + 3.0 * d - 2.0) / (2.0 * d))
}

/// Minimum of `Re Ψ` on one circle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusMin {
    pub r: f64,
    pub min: f64,
    pub theta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexityReport {
    pub params: ParamTriple,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kappa_closed: Option<f64>,
    pub kappa_numeric: f64,
    /// `(r, θ)` of the smallest value found; `r = 1` for the boundary.
    pub argmin: (f64, f64),
    pub radii_trace: Vec<RadiusMin>,
    /// Linear extrapolation of the two outermost circle minima to `r = 1`.
    pub radius_extrapolation: f64,
    /// Boundary estimate; absent when `δ ∉ (0, 1)`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub boundary_estimate: Option<f64>,
    /// Fitted limit of `Q(x) = Ψ(x) - (δ+1)x/(1-x)` as `x → 1⁻`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q_at_one: Option<f64>,
    pub n_theta: usize,
    /// Points where `f'` was numerically zero.
    pub near_zero_derivative: Vec<Complex64>,
    pub tolerance: f64,
    pub consistent: bool,
}

pub const DEFAULT_RADII: [f64; 4] = [0.9, 0.99, 0.999, 0.9999];
const GUARD_RADII: [f64; 2] = [0.3, 0.6];

fn re_psi(p: &ParamTriple, z: Complex64) -> Result<f64> {
    Ok(preschwarzian(p, &SlitPoint::new(z)?, PreschwarzRoute::Direct)?.re + 1.0)
}

/// `e^{iθ}/(1 - e^{iθ})`, written to avoid cancellation near `θ = 0`.
fn cauchy_on_circle(theta: f64) -> Complex64 {
    // 1 - e^{iθ} = -2i sin(θ/2) e^{iθ/2}
    let one_minus = Complex64::new(0.0, -2.0 * (theta / 2.0).sin()) * Complex64::from_polar(1.0, theta / 2.0);
    Complex64::from_polar(1.0, theta) / one_minus
}

/// `Re Q(e^{iθ})` with `Q = Ψ - (δ+1) z/(1-z)`.
fn re_q_boundary(p: &ParamTriple, theta: f64) -> Result<f64> {
    let z = Complex64::from_polar(1.0, theta);
    let psi = preschwarzian(p, &SlitPoint::new(z)?, PreschwarzRoute::Direct)? + 1.0;
    Ok((psi - cauchy_on_circle(theta) * (p.delta + 1.0)).re)
}

/// Solves the small dense system `m x = rhs` by Gaussian elimination.
fn solve(mut m: Vec<Vec<f64>>, mut rhs: Vec<f64>) -> Vec<f64> {
    let n = rhs.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs())).unwrap();
        m.swap(col, piv);
        rhs.swap(col, piv);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            for k in col..n {
                m[row][k] -= f * m[col][k];
            }
            rhs[row] -= f * rhs[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| m[i][k] * x[k]).sum();
        x[i] = (rhs[i] - s) / m[i][i];
    }
    x
}

/// `lim Q(1-s)` from `Q(1-s) = Q1 + C s^δ + D s + E s^{1+δ}` fitted at four
/// points.
fn q_limit_at_one(p: &ParamTriple) -> Result<f64> {
    let d = p.delta;
    let mut m = Vec::new();
    let mut rhs = Vec::new();
    for k in 3..=6 {
        let x = 1.0 - 10f64.powi(-k);
        let s = 1.0 - x;
        let psi = re_psi(p, Complex64::new(x, 0.0))?;
        rhs.push(psi - (d + 1.0) * x / s);
        m.push(vec![1.0, s.powf(d), s, s.powf(1.0 + d)]);
    }
    Ok(solve(m, rhs)[0])
}

fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..60 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

fn theta_grid(n_theta: usize) -> Vec<f64> {
    (0..=n_theta).map(|j| PI * j as f64 / n_theta as f64).collect()
}

/// Minimum of `g` over the grid, refined by golden section between the
/// neighbours of the best grid point. Failed points are skipped and
/// collected.
fn grid_min(thetas: &[f64], g: impl Fn(f64) -> Result<f64> + Sync, bad: &mut Vec<f64>) -> Result<(f64, f64)> {
    let vals: Vec<Result<f64>> = thetas.par_iter().map(|&t| g(t)).collect();
    let mut best = (f64::NAN, f64::INFINITY);
    let mut best_i = 0;
    for (i, v) in vals.into_iter().enumerate() {
        match v {
            Ok(v) if v < best.1 => {
                best = (thetas[i], v);
                best_i = i;
            }
            Ok(_) => {}
            Err(Error::NearZeroDerivative { .. }) => bad.push(thetas[i]),
            Err(e) => return Err(e),
        }
    }
    if !best.1.is_finite() {
        return Ok(best);
    }
    let lo = if best_i == 0 { thetas[0] } else { thetas[best_i - 1] };
    let hi = thetas.get(best_i + 1).copied().unwrap_or(thetas[best_i]);
    let (t, v) = golden_min(|t| g(t).unwrap_or(f64::INFINITY), lo, hi);
    Ok(if v < best.1 { (t, v) } else { best })
}

/// Order of convexity from samples of `Re Ψ`, `Ψ = 1 + z f''/f'`.
///
/// Circle minima at the guard radii `0.3, 0.6` and at `radii` form the
/// trace. For `0 < δ < 1` the headline value comes from the boundary:
/// `Ψ = (δ+1) z/(1-z) + Q` with `Q` continuous on the closed disk, so
/// `κ = -(δ+1)/2 + min(inf Re Q(e^{iθ}), Q(1))`, where `Q(1)` is fitted
/// from points on `(0, 1)`. Otherwise the two outermost circle minima are
/// extrapolated linearly in `1 - r`.
pub fn kappa_numeric(p: &ParamTriple, radii: &[f64], n_theta: usize) -> Result<ConvexityReport> {
    if radii.iter().any(|&r| !(r > 0.0 && r < 1.0)) || n_theta < 4 {
        return Err(Error::InvalidArgument(format!("radii must lie in (0, 1) and n_theta >= 4, got {radii:?}, {n_theta}")));
    }
    let mut rs: Vec<f64> = GUARD_RADII.iter().chain(radii).copied().collect();
    rs.sort_by(f64::total_cmp);
    rs.dedup();
    let thetas = theta_grid(n_theta);
    let mut bad = Vec::new();
    let mut trace = Vec::new();
    for &r in &rs {
        let mut bad_t = Vec::new();
        let (theta, min) = grid_min(&thetas, |t| re_psi(p, Complex64::from_polar(r, t)), &mut bad_t)?;
        bad.extend(bad_t.into_iter().map(|t| Complex64::from_polar(r, t)));
        trace.push(RadiusMin { r, min, theta });
    }
    let radius_extrapolation = match trace.as_slice() {
        [.., u, v] => v.min + (v.min - u.min) * (1.0 - v.r) / (v.r - u.r),
        [v] => v.min,
        [] => unreachable!(),
    };

    let mut boundary_estimate = None;
    let mut q_at_one = None;
    let mut argmin = trace.iter().min_by(|x, y| x.min.total_cmp(&y.min)).map(|t| (t.r, t.theta)).unwrap();
    let mut kappa = trace.iter().map(|t| t.min).fold(f64::INFINITY, f64::min);
    if p.delta > 0.0 && p.delta < 1.0 {
        let q1 = q_limit_at_one(p)?;
        let mut fine: Vec<f64> = (0..48).map(|k| 1e-6 * (thetas[1] / 1e-6).powf(k as f64 / 48.0)).collect();
        fine.extend(&thetas[1..]);
        let mut bad_t = Vec::new();
        let (theta, q_min) = grid_min(&fine, |t| re_q_boundary(p, t), &mut bad_t)?;
        bad.extend(bad_t.into_iter().map(|t| Complex64::from_polar(1.0, t)));
        let base = -(p.delta + 1.0) / 2.0;
        let (t_best, est) = if q1 <= q_min { (0.0, base + q1) } else { (theta, base + q_min) };
        boundary_estimate = Some(est);
        q_at_one = Some(q1);
        if est <= kappa {
            kappa = est;
            argmin = (1.0, t_best);
        }
    } else if radius_extrapolation < kappa {
        kappa = radius_extrapolation;
        argmin = (1.0, trace.last().unwrap().theta);
    }

    let kappa_closed = kappa_closed_form(p).ok();
    let tolerance = match kappa_closed {
        Some(k) if k.abs() > 1.0 => 1e-2,
        _ => 1e-3,
    };
    let consistent = kappa_closed.map_or(true, |k| (k - kappa).abs() <= tolerance);
    Ok(ConvexityReport {
        params: *p,
        kappa_closed,
        kappa_numeric: kappa,
        argmin,
        radii_trace: trace,
        radius_extrapolation,
        boundary_estimate,
        q_at_one,
        n_theta,
        near_zero_derivative: bad,
        tolerance,
        consistent,
    })
}
