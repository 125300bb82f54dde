//! Limits of hypergeometric ratios at `-∞` and at `1⁻`, and the connection
//! formula as an identity check.

mod probe;

pub use probe::{Limit, LimitProbe, RateLabel};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::ParamTriple;
use crate::specfun::hyp2f1::eval_raw;
use crate::specfun::{contiguous_residual, preschwarzian, PreschwarzRoute, SlitPoint};

/// `10, 100, ..., 10^6`.
pub fn default_xs() -> Vec<f64> {
    (1..=6).map(|k| 10f64.powi(k)).collect()
}

/// `1 - 10^{-k}` for `k = 1..=8`.
pub fn default_xs_to_one() -> Vec<f64> {
    (1..=8).map(|k| 1.0 - 10f64.powi(-k)).collect()
}

fn gauss(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let z = Complex64::new(z, 0.0);
    Ok(eval_raw(a, b, c, z, None).map_err(|e| e.at(z))?.value.re)
}

fn standard(p: &ParamTriple) -> Result<()> {
    if p.is_standard() {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!("need 0 < a <= b <= c, got {p}")))
    }
}

fn increasing(xs: &[f64]) -> Result<()> {
    if xs.is_empty() || xs.iter().any(|&x| !(x > 0.0)) || xs.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("probe grid must be positive and increasing".into()));
    }
    Ok(())
}

/// Values at each point, in grid order.
fn along<T: Send>(xs: &[f64], f: impl Fn(f64) -> Result<T> + Sync) -> Result<Vec<T>> {
    xs.par_iter().map(|&x| f(x)).collect::<Vec<_>>().into_iter().collect()
}

fn contiguous_along(p: &ParamTriple, zs: impl Iterator<Item = f64>) -> Result<f64> {
    let zs: Vec<f64> = zs.collect();
    let r = along(&zs, |z| contiguous_residual(p, &SlitPoint::real(z)?))?;
    Ok(r.into_iter().fold(0.0, f64::max))
}

fn near(x: f64, y: f64) -> bool {
    (x - y).abs() < 1e-12
}

/// Rate of `φ(x) = F(a+1,b;c;-x)/F(a,b;c;-x)` for `b < c`.
fn phi_rate(p: &ParamTriple) -> RateLabel {
    let d = p.b - p.a;
    if near(p.b, p.c) || d > 1.0 + 1e-12 {
        RateLabel::InvX
    } else if near(d, 1.0) {
        RateLabel::InvXLogX
    } else if near(d, 0.0) {
        RateLabel::InvLogX
    } else {
        RateLabel::PowAMinusB(p.a - p.b)
    }
}

/// `φ(x) = F(a+1,b;c;-x)/F(a,b;c;-x) → 0`.
///
/// For `b = c`, `φ(x) = 1/(1+x)` exactly and the largest deviation from it
/// is folded into `contiguous_max`.
pub fn phi_probe(p: &ParamTriple, xs: &[f64]) -> Result<LimitProbe> {
    standard(p)?;
    increasing(xs)?;
    let (a, b, c) = (p.a, p.b, p.c);
    let values = along(xs, |x| Ok(gauss(a + 1.0, b, c, -x)? / gauss(a, b, c, -x)?))?;
    let mut check = contiguous_along(p, xs.iter().map(|x| -x))?;
    if b == c {
        let dev = xs.iter().zip(&values).map(|(x, v)| (v * (1.0 + x) - 1.0).abs()).fold(0.0, f64::max);
        check = check.max(dev);
    }
    Ok(LimitProbe::new("phi", xs.to_vec(), xs.to_vec(), values, Limit::Finite(0.0), phi_rate(p), 1e-2, check))
}

/// `ψ(x) = F(a+1,b+1;c+1;-x)/F(a+1,b;c;-x)` and `x ψ(x)`.
///
/// Requires `b < c`. `x ψ → +∞` always; `ψ → 0` when also `b <= a + 1`,
/// otherwise `ψ` tends to an unnamed positive constant.
pub fn psi_probe(p: &ParamTriple, xs: &[f64]) -> Result<(LimitProbe, LimitProbe)> {
    standard(p)?;
    increasing(xs)?;
    if !(p.b < p.c) {
        return Err(Error::Hypothesis(format!("need b < c, got {p}")));
    }
    let (a, b, c) = (p.a, p.b, p.c);
    let values = along(xs, |x| Ok(gauss(a + 1.0, b + 1.0, c + 1.0, -x)? / gauss(a + 1.0, b, c, -x)?))?;
    let d = b - a;
    let (limit, rate) = if d > 1.0 + 1e-12 {
        (Limit::Unclaimed, RateLabel::None)
    } else if near(d, 1.0) {
        (Limit::Finite(0.0), RateLabel::InvLogX)
    } else if near(d, 0.0) {
        (Limit::Finite(0.0), RateLabel::InvXLogX)
    } else {
        (Limit::Finite(0.0), RateLabel::PowBMinusAMinus1(d - 1.0))
    };
    let check = contiguous_along(p, xs.iter().map(|x| -x))?;
    let scaled: Vec<f64> = xs.iter().zip(&values).map(|(x, v)| x * v).collect();
    let psi = LimitProbe::new("psi", xs.to_vec(), xs.to_vec(), values, limit, rate, 1e-1, check);
    let x_psi = LimitProbe::new("x*psi", xs.to_vec(), xs.to_vec(), scaled, Limit::PlusInfinity, rate, f64::INFINITY, check);
    Ok((psi, x_psi))
}

/// `x w(-x) → c/b` with `w = H/F`.
///
/// By the contiguous relation `x w(-x) = (c/b)(1 - φ(x))`; the largest
/// difference between the two expressions is folded into `contiguous_max`.
pub fn xw_probe(p: &ParamTriple, xs: &[f64]) -> Result<LimitProbe> {
    standard(p)?;
    increasing(xs)?;
    let (a, b, c) = (p.a, p.b, p.c);
    let rows = along(xs, |x| {
        let f = gauss(a, b, c, -x)?;
        let xw = x * gauss(a + 1.0, b + 1.0, c + 1.0, -x)? / f;
        let chain = c / b * (1.0 - gauss(a + 1.0, b, c, -x)? / f);
        Ok((xw, (xw - chain).abs() / (1.0 + xw.abs())))
    })?;
    let values: Vec<f64> = rows.iter().map(|r| r.0).collect();
    let chain = rows.iter().map(|r| r.1).fold(0.0, f64::max);
    let limit = c / b;
    Ok(LimitProbe::new("x*w(-x)", xs.to_vec(), xs.to_vec(), values, Limit::Finite(limit), phi_rate(p), 0.02 * limit, chain))
}

/// `x f''(x)/f'(x)` at `-x`, which tends to `-a`.
pub fn preschwarz_limit_probe(p: &ParamTriple, xs: &[f64]) -> Result<LimitProbe> {
    standard(p)?;
    increasing(xs)?;
    let values = along(xs, |x| Ok(preschwarzian(p, &SlitPoint::real(-x)?, PreschwarzRoute::Direct)?.re))?;
    let check = contiguous_along(p, xs.iter().map(|x| -x))?;
    Ok(LimitProbe::new(
        "x f''(x)/f'(x)",
        xs.to_vec(),
        xs.to_vec(),
        values,
        Limit::Finite(-p.a),
        phi_rate(p),
        1e-2 * (1.0 + p.a),
        check,
    ))
}

/// Which branch of `c/max{b, c-a-1}` applies, by the sign of `c - a - b - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HgBranch {
    Positive,
    Zero,
    Negative,
}

pub fn hg_branch(p: &ParamTriple) -> HgBranch {
    let d = p.rational();
    let dp = &d.c - &d.a - &d.b - num_rational::BigRational::from_integer(1.into());
    match dp.cmp(&num_traits::Zero::zero()) {
        std::cmp::Ordering::Greater => HgBranch::Positive,
        std::cmp::Ordering::Equal => HgBranch::Zero,
        std::cmp::Ordering::Less => HgBranch::Negative,
    }
}

/// `H(x)/G(x) → c/max{b, c-a-1}` as `x → 1⁻`, `H = F(a+1,b+1;c+1)`,
/// `G = F(a+1,b;c)`. The rate is logarithmic on the branch `c = a + b + 1`.
pub fn hg_ratio_limit_probe(p: &ParamTriple, xs_to_1: &[f64]) -> Result<LimitProbe> {
    standard(p)?;
    if xs_to_1.iter().any(|&x| !(0.0..1.0).contains(&x)) || xs_to_1.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("grid must increase inside [0, 1)".into()));
    }
    let (a, b, c) = (p.a, p.b, p.c);
    let values = along(xs_to_1, |x| Ok(gauss(a + 1.0, b + 1.0, c + 1.0, x)? / gauss(a + 1.0, b, c, x)?))?;
    let limit = c / b.max(c - a - 1.0);
    let rate = if hg_branch(p) == HgBranch::Zero { RateLabel::InvLogX } else { RateLabel::None };
    let scale = xs_to_1.iter().map(|x| 1.0 / (1.0 - x)).collect();
    let check = contiguous_along(p, xs_to_1.iter().copied())?;
    Ok(LimitProbe::new("H/G", xs_to_1.to_vec(), scale, values, Limit::Finite(limit), rate, 0.02 * limit, check))
}

/// Largest residual of the connection formula over a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConnectionCheck {
    pub params: ParamTriple,
    pub points: usize,
    /// Largest `|LHS - RHS| / (1 + |LHS|)`.
    pub max_residual: f64,
    pub worst_z: Complex64,
}

/// Compares `F(z)` with `B F(a,b;δ+1;1-z) + A (1-z)^{-δ} F(c-a,c-b;1-δ;1-z)`.
///
/// Points must avoid `(-∞, 0]` and `[1, ∞)`.
pub fn connection_identity_check(p: &ParamTriple, grid: &[Complex64]) -> Result<ConnectionCheck> {
    let (a_const, b_const) = p.connection_constants()?;
    let (a, b, c, d) = (p.a, p.b, p.c, p.delta);
    if let Some(z) = grid.iter().find(|z| z.im == 0.0 && (z.re <= 0.0 || z.re >= 1.0)) {
        return Err(Error::Domain(format!("{z} lies on (-inf, 0] or [1, inf)")));
    }
    let one = Complex64::new(1.0, 0.0);
    let res = grid
        .par_iter()
        .map(|&z| {
            let lhs = eval_raw(a, b, c, z, None).map_err(|e| e.at(z))?.value;
            let u = one - z;
            let t1 = eval_raw(a, b, d + 1.0, u, None).map_err(|e| e.at(z))?.value * b_const;
            let t2 = eval_raw(c - a, c - b, 1.0 - d, u, None).map_err(|e| e.at(z))?.value * u.powf(-d) * a_const;
            Ok((z, (lhs - t1 - t2).norm() / (1.0 + lhs.norm())))
        })
        .collect::<Vec<Result<_>>>();
    let mut out = ConnectionCheck { params: *p, points: grid.len(), max_residual: 0.0, worst_z: Complex64::new(0.0, 0.0) };
    for r in res {
        let (z, v) = r?;
        if v > out.max_residual || v.is_nan() {
            out.max_residual = if v.is_nan() { f64::INFINITY } else { v };
            out.worst_z = z;
        }
    }
    Ok(out)
}

/// `n x n` points `x + iy`, both coordinates on `[-w, w]` at cell midpoints,
/// which keeps every point off the real axis.
pub fn midpoint_grid(n: usize, half_width: f64) -> Vec<Complex64> {
    let t = |i: usize| -half_width + 2.0 * half_width * (i as f64 + 0.5) / n as f64;
    (0..n).flat_map(|i| (0..n).map(move |j| Complex64::new(t(i), t(j)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: f64, b: f64, c: f64) -> ParamTriple {
        ParamTriple::new(a, b, c).unwrap()
    }

    #[test]
    fn phi_exact_when_b_equals_c() {
        let p = phi_probe(&pt(0.5, 1.0, 1.0), &default_xs()).unwrap();
        assert!((p.values[0] - 1.0 / 11.0).abs() < 1e-15);
        assert!(p.contiguous_max < 1e-13 && p.converged);
    }

    #[test]
    fn phi_power_rate() {
        let p = phi_probe(&pt(0.5, 0.9, 1.2), &default_xs()).unwrap();
        assert!(p.converged && p.values[5] <= 1e-2);
        let s = p.observed_slope.unwrap();
        assert!((s + 0.4).abs() < 0.08, "{s}");
    }

    #[test]
    fn phi_log_rate_halves() {
        let p = phi_probe(&pt(0.5, 0.5, 1.2), &default_xs()).unwrap();
        assert_eq!(p.rate_label, RateLabel::InvLogX);
        let r = p.values[5] / p.values[2];
        assert!((r - 0.5).abs() < 0.125, "{r}");
    }

    #[test]
    fn psi_and_x_psi() {
        let (psi, xpsi) = psi_probe(&pt(0.5, 0.9, 1.2), &default_xs()).unwrap();
        assert!(psi.values[5] <= 0.1 && psi.converged);
        assert!(xpsi.values[5] >= 1e2 && xpsi.converged);
        assert!(matches!(psi_probe(&pt(0.5, 1.2, 1.2), &default_xs()), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn xw_limit() {
        let p = xw_probe(&pt(0.5, 0.9, 1.2), &default_xs()).unwrap();
        // mpmath: 1e6 * w(-1e6)
        assert!((p.values[5] - 1.331_464_9).abs() < 1e-6);
        assert!(p.converged && p.contiguous_max < 1e-12);
    }

    #[test]
    fn preschwarz_limits() {
        let p = preschwarz_limit_probe(&pt(1.0, 1.0, 2.0), &default_xs()).unwrap();
        for (x, v) in p.xs.iter().zip(&p.values) {
            assert!((v + x / (1.0 + x)).abs() < 1e-12);
        }
        let t = 0.7;
        let q = preschwarz_limit_probe(&pt(t, t, t), &default_xs()).unwrap();
        // f = z(1-z)^{-t}: f''/f' = (t+1)/(1-z) + (t-1)/(1+(t-1)z)
        for (x, v) in q.xs.iter().zip(&q.values) {
            let z = -x;
            let want = z * ((t + 1.0) / (1.0 - z) + (t - 1.0) / (1.0 + (t - 1.0) * z));
            assert!((v - want).abs() < 1e-12 * (1.0 + want.abs()), "{x}: {v} vs {want}");
        }
        assert!((q.values[5] + t).abs() < 1e-2 * (1.0 + t));
    }

    #[test]
    fn hg_branches() {
        let p = hg_ratio_limit_probe(&pt(0.5, 0.9, 3.0), &default_xs_to_one()).unwrap();
        assert!((p.value_at(1.0 - 1e-6).unwrap() - 1.999_192_8).abs() < 1e-6);
        let q = hg_ratio_limit_probe(&pt(0.5, 0.9, 1.2), &default_xs_to_one()).unwrap();
        assert!((q.value_at(1.0 - 1e-6).unwrap() - 1.333_331_46).abs() < 1e-7);
        assert_eq!(hg_branch(&pt(0.5, 0.9, 2.4)), HgBranch::Zero);
    }

    #[test]
    fn connection_identity() {
        let p = pt(0.5, 0.9, 1.0);
        let r = connection_identity_check(&p, &[Complex64::new(0.5, 0.0)]).unwrap();
        assert!(r.max_residual <= 1e-10);
        let r = connection_identity_check(&p, &[Complex64::new(0.3, 0.4)]).unwrap();
        assert!(r.max_residual <= 1e-9);
        assert!(matches!(connection_identity_check(&pt(0.5, 0.5, 1.0), &[]), Err(Error::UnsupportedParams(_))));
        assert!(matches!(connection_identity_check(&p, &[Complex64::new(-1.0, 0.0)]), Err(Error::Domain(_))));
    }

    #[test]
    fn grid_avoids_axis() {
        let g = midpoint_grid(20, 5.0);
        assert_eq!(g.len(), 400);
        assert!(g.iter().all(|z| z.im != 0.0));
    }
}
