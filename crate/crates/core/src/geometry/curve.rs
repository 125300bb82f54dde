use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::kappa::{kappa_closed_form, kappa_numeric, DEFAULT_RADII};
use super::sampling::disk_samples;
use super::sector::{depth_in_sector, sector_contains, SectorSpec};
use super::theorem1::{require_unit_delta, SectorWitness};
use crate::error::{Error, Result};
use crate::params::ParamTriple;
use crate::specfun::hyp2f1::eval_raw;

/// The image of the unit circle, `γ = γ1 + γ2`, as component columns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    pub params: ParamTriple,
    pub a_const: f64,
    pub b_const: f64,
    pub theta: Vec<f64>,
    /// `γ(θ) = f(e^{iθ})`
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    /// `γ1(θ) = A e^{iθ} (1 - e^{iθ})^{-δ}`
    pub x1: Vec<f64>,
    pub y1: Vec<f64>,
    /// `γ2(θ) = e^{iθ} R(e^{iθ})`
    pub x2: Vec<f64>,
    pub y2: Vec<f64>,
    /// Largest `|γ - γ1 - γ2| / |γ|`.
    pub max_decomposition_residual: f64,
    /// Largest `|γ2|`; bounded by `|B|`.
    pub max_abs_gamma2: f64,
}

impl CurveSample {
    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub fn gamma(&self, i: usize) -> Complex64 {
        Complex64::new(self.x[i], self.y[i])
    }

    pub fn gamma1(&self, i: usize) -> Complex64 {
        Complex64::new(self.x1[i], self.y1[i])
    }

    pub fn gamma2(&self, i: usize) -> Complex64 {
        Complex64::new(self.x2[i], self.y2[i])
    }

    /// CSV with header `theta,x,y,x1,y1,x2,y2`, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theta,x,y,x1,y1,x2,y2\n");
        for i in 0..self.len() {
            let row = [self.theta[i], self.x[i], self.y[i], self.x1[i], self.y1[i], self.x2[i], self.y2[i]];
            let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// `θ` values geometric from `theta_min` to `π`.
pub fn theta_grid(n_theta: usize, theta_min: f64) -> Vec<f64> {
    if n_theta == 1 {
        return vec![PI];
    }
    let (l, h) = (theta_min.ln(), PI.ln());
    let mut out: Vec<f64> = (0..n_theta).map(|i| (l + (h - l) * i as f64 / (n_theta - 1) as f64).exp()).collect();
    *out.last_mut().unwrap() = PI;
    out
}

/// `R(z) = F(z) - A(1-z)^{-δ}` for `z` near `1`, from the connection
/// formula so that no cancellation against the singular part occurs.
fn remainder_near_one(p: &ParamTriple, a_const: f64, b_const: f64, u: Complex64) -> Result<Complex64> {
    let d = p.delta;
    let f1 = eval_raw(p.a, p.b, d + 1.0, u, None)?.value;
    let f2 = eval_raw(p.c - p.a, p.c - p.b, 1.0 - d, u, None)?.value;
    Ok(f1 * b_const + u.powf(-d) * (f2 - 1.0) * a_const)
}

/// Samples `γ`, `γ1` and `γ2` on a geometric grid of `θ ∈ [theta_min, π]`.
///
/// `γ` is evaluated on `|z| = 1` itself; `1 - e^{iθ}` is formed as
/// `2 sin(θ/2) e^{i(θ-π)/2}` throughout.
pub fn boundary_curve(p: &ParamTriple, n_theta: usize, theta_min: f64) -> Result<CurveSample> {
    require_unit_delta(p)?;
    if n_theta == 0 || !(theta_min > 0.0 && theta_min < PI) {
        return Err(Error::InvalidArgument(format!("need n_theta >= 1 and 0 < theta_min < pi, got {n_theta}, {theta_min}")));
    }
    let (a_const, b_const) = p.connection_constants()?;
    let d = p.delta;
    let thetas = theta_grid(n_theta, theta_min);
    let rows: Vec<Result<[Complex64; 3]>> = thetas
        .par_iter()
        .map(|&t| {
            let e = Complex64::from_polar(1.0, t);
            let s = 2.0 * (t / 2.0).sin();
            let u = Complex64::from_polar(s, (t - PI) / 2.0);
            let g1 = Complex64::from_polar(a_const * s.powf(-d), t + d * (PI - t) / 2.0);
            let g = e * eval_raw(p.a, p.b, p.c, e, None).map_err(|x| x.at(e))?.value;
            let g2 = if s <= 0.9 { e * remainder_near_one(p, a_const, b_const, u).map_err(|x| x.at(e))? } else { g - g1 };
            Ok([g, g1, g2])
        })
        .collect();
    let mut c = CurveSample {
        params: *p,
        a_const,
        b_const,
        theta: thetas.clone(),
        x: vec![],
        y: vec![],
        x1: vec![],
        y1: vec![],
        x2: vec![],
        y2: vec![],
        max_decomposition_residual: 0.0,
        max_abs_gamma2: 0.0,
    };
    for row in rows {
        let [g, g1, g2] = row?;
        c.x.push(g.re);
        c.y.push(g.im);
        c.x1.push(g1.re);
        c.y1.push(g1.im);
        c.x2.push(g2.re);
        c.y2.push(g2.im);
        c.max_decomposition_residual = c.max_decomposition_residual.max((g - g1 - g2).norm() / g.norm());
        c.max_abs_gamma2 = c.max_abs_gamma2.max(g2.norm());
    }
    Ok(c)
}

/// `|y(θ) - tan φ (x(θ) - B)|` at a given `θ` on the circle.
pub fn asymptotic_residual(p: &ParamTriple, theta: f64) -> Result<f64> {
    let (_, b_const) = p.connection_constants()?;
    let e = Complex64::from_polar(1.0, theta);
    let g = e * eval_raw(p.a, p.b, p.c, e, None)?.value;
    let tan = (PI * p.delta / 2.0).tan();
    Ok((g.im - tan * (g.re - b_const)).abs())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectorTheoremReport {
    pub params: ParamTriple,
    pub kappa: f64,
    /// `closed_form` or `numeric`.
    pub kappa_source: String,
    pub apex: f64,
    pub apex_negative: bool,
    pub phi: f64,
    pub n_samples: usize,
    pub seed: u64,
    pub violations: usize,
    pub witnesses: Vec<SectorWitness>,
    /// Smallest distance from an image sample to the sector boundary.
    pub min_boundary_distance: f64,
    /// `(θ, residual)` pairs of the asymptotic line along a geometric grid.
    pub residuals: Vec<(f64, f64)>,
    pub residual_at_1e_3: f64,
    pub residual_at_1e_6: f64,
    /// Largest grid `θ` below which the residual decreases monotonically as `θ → 0`.
    pub monotone_below: f64,
    pub pass: bool,
}

/// Checks that `f(𝔻)` lies in `{|arg(z - B)| < πδ/2}` when `κ(f) >= 0`.
///
/// `κ >= 0` is taken from the closed form when it applies and from
/// [`kappa_numeric`] (with slack `1e-6`) otherwise; a negative `κ` is a
/// hypothesis error. Failed assertions are reported with `pass = false`.
pub fn check_sector_theorem(p: &ParamTriple, n_samples: usize, seed: u64) -> Result<SectorTheoremReport> {
    require_unit_delta(p)?;
    let (kappa, kappa_source) = match kappa_closed_form(p) {
        Ok(k) => (k, "closed_form"),
        Err(_) => (kappa_numeric(p, &DEFAULT_RADII, 1024)?.kappa_numeric, "numeric"),
    };
    let floor = if kappa_source == "numeric" { -1e-6 } else { 0.0 };
    if kappa < floor {
        return Err(Error::Hypothesis(format!("order of convexity {kappa} < 0 for {p}")));
    }
    let (_, apex) = p.connection_constants()?;
    let sector = SectorSpec::apex_sector(p.delta, apex)?;
    let pts = disk_samples(n_samples, seed);
    let vals: Vec<Result<(Complex64, Complex64)>> = pts
        .par_iter()
        .map(|&z| Ok((z, z * eval_raw(p.a, p.b, p.c, z, None).map_err(|e| e.at(z))?.value)))
        .collect();
    let mut violations = 0;
    let mut witnesses = Vec::new();
    let mut min_depth = f64::INFINITY;
    for v in vals {
        let (z, fz) = v?;
        let m = sector_contains(&sector, fz);
        min_depth = min_depth.min(depth_in_sector(fz - apex, sector.phi));
        if !m.inside && m.dist > 1e-8 * (1.0 + fz.norm()) {
            violations += 1;
            if witnesses.len() < 8 {
                witnesses.push(SectorWitness { map: "f".into(), z, value: fz, dist: m.dist });
            }
        }
    }
    let grid: Vec<f64> = (0..=12).map(|k| 10f64.powf(-6.0 + 0.5 * k as f64)).collect();
    let res: Vec<Result<f64>> = grid.par_iter().map(|&t| asymptotic_residual(p, t)).collect();
    let residuals: Vec<(f64, f64)> = grid.iter().copied().zip(res.into_iter().collect::<Result<Vec<_>>>()?).collect();
    let mut k = 0;
    while k + 1 < residuals.len() && residuals[k + 1].1 > residuals[k].1 {
        k += 1;
    }
    let residual_at_1e_6 = residuals[0].1;
    let residual_at_1e_3 = residuals[6].1;
    let apex_negative = apex < 0.0;
    Ok(SectorTheoremReport {
        params: *p,
        kappa,
        kappa_source: kappa_source.into(),
        apex,
        apex_negative,
        phi: sector.phi,
        n_samples: pts.len(),
        seed,
        violations,
        witnesses,
        min_boundary_distance: min_depth,
        monotone_below: residuals[k].0,
        residual_at_1e_3,
        residual_at_1e_6,
        residuals,
        pass: apex_negative && violations == 0 && residual_at_1e_6 < residual_at_1e_3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: f64, b: f64, c: f64) -> ParamTriple {
        ParamTriple::new(a, b, c).unwrap()
    }

    #[test]
    fn grid_endpoints() {
        let g = theta_grid(50, 1e-6);
        assert_eq!(g.len(), 50);
        assert!((g[0] - 1e-6).abs() < 1e-18 && g[49] == PI);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn curve_decomposes() {
        let p = pt(0.9, 1.2, 2.0);
        let c = boundary_curve(&p, 200, 1e-6).unwrap();
        assert!(c.max_decomposition_residual < 1e-9, "{}", c.max_decomposition_residual);
        assert!(c.max_abs_gamma2 <= c.b_const.abs() * (1.0 + 1e-9));
        // θ = π: f(-1) is real
        assert!(c.y[199].abs() < 1e-14);
        // γ2 → B at θ → 0
        assert!((c.gamma2(0) - c.b_const).norm() < 1e-4);
        let tan = (PI * p.delta / 2.0).tan();
        assert!((c.y[0] - tan * c.x[0] + c.b_const * tan).abs() < 1e-4);
    }

    #[test]
    fn slope_tends_to_sector_edge() {
        // y/x converges like θ^δ, visible at δ = 0.4
        let p = pt(0.5, 0.9, 1.0);
        let c = boundary_curve(&p, 20, 1e-6).unwrap();
        let tan = (PI * p.delta / 2.0).tan();
        assert!((c.y[0] / c.x[0] - tan).abs() < 1e-2 * tan);
        assert!(c.max_decomposition_residual < 1e-9);
    }

    #[test]
    fn csv_header_and_rows() {
        let c = boundary_curve(&pt(0.5, 0.9, 1.0), 5, 1e-3).unwrap();
        let csv = c.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "theta,x,y,x1,y1,x2,y2");
        assert_eq!(lines.len(), 6);
        assert!(lines[1].split(',').all(|v| v.parse::<f64>().is_ok()));
    }

    #[test]
    fn negative_kappa_is_rejected() {
        assert!(matches!(check_sector_theorem(&pt(0.5, 1.2, 1.69), 100, 1), Err(Error::Hypothesis(_))));
    }
}
