//! Evaluation of `2F1(a, b; c; z)` on the slit plane `Λ = ℂ ∖ [1, +∞)`.
//!
//! Regions, checked in order:
//!
//! | region               | test                              | method                                   |
//! |----------------------|-----------------------------------|------------------------------------------|
//! | `InnerDisk`          | `|z| <= 0.6`                      | power series                             |
//! | `PfaffRegion`        | `|z/(z-1)| <= 0.6`                | Pfaff transform, series in `z/(z-1)`      |
//! | `NearOne`            | `|1-z| <= 0.4`                    | connection formula, series in `1-z`       |
//! | `NearOneReflected`   | `|1-z| >= 1/0.6`                  | Pfaff, then connection in `1/(1-z)`       |
//! | `Transition`         | everything else                   | Taylor re-expansion along a path         |
//!
//! The two connection routes need `δ = a+b-c` (resp. `a-b`) away from the
//! integers. When it is within `1e-3` of an integer the evaluator falls
//! back to the re-expansion, which has no such restriction.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{integer_distance, ParamTriple};
use crate::specfun::gamma::{gamma_real, rgamma};

const SERIES_RADIUS: f64 = 0.6;
const NEAR_ONE_RADIUS: f64 = 0.4;
const FORCED_RADIUS: f64 = 0.9;
const NEAR_INTEGER: f64 = 1e-3;
const SERIES_REL_TOL: f64 = 1e-18;
const SERIES_MAX_TERMS: usize = 10_000;

/// Evaluation method for `2F1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Series,
    Pfaff,
    Connection,
    PfaffConnection,
    Continuation,
}

/// Geometric region of a point of `Λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    InnerDisk,
    PfaffRegion,
    NearOne,
    NearOneReflected,
    Transition,
}

/// A point of the slit plane tagged with its region.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlitPoint {
    pub z: Complex64,
    pub region: Region,
}

impl SlitPoint {
    pub fn new(z: Complex64) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidArgument(format!("non-finite point {z}")));
        }
        if z.im == 0.0 && z.re >= 1.0 {
            return Err(Error::Domain(format!("z = {} lies on the branch cut [1, +inf)", z.re)));
        }
        Ok(SlitPoint { z, region: region_of(z) })
    }

    pub fn real(x: f64) -> Result<Self> {
        Self::new(Complex64::new(x, 0.0))
    }
}

fn region_of(z: Complex64) -> Region {
    let one = Complex64::new(1.0, 0.0);
    if z.norm() <= SERIES_RADIUS {
        Region::InnerDisk
    } else if (z / (z - one)).norm() <= SERIES_RADIUS {
        Region::PfaffRegion
    } else if (one - z).norm() <= NEAR_ONE_RADIUS {
        Region::NearOne
    } else if (one - z).norm() >= 1.0 / SERIES_RADIUS {
        Region::NearOneReflected
    } else {
        Region::Transition
    }
}

/// Value of `2F1` together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub value: Complex64,
    pub strategy: Strategy,
    /// Total number of series terms summed.
    pub terms: usize,
    /// Estimated absolute truncation error of the last series.
    pub tail_bound: f64,
}

struct SeriesSum {
    value: Complex64,
    terms: usize,
    tail: f64,
}

/// Plain power series in `zeta`; caller guarantees `|zeta| < 1`.
fn series(a: f64, b: f64, c: f64, zeta: Complex64) -> SeriesSum {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut small = 0;
    let mut n = 0usize;
    while n < SERIES_MAX_TERMS {
        let nf = n as f64;
        term *= zeta * ((a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)));
        sum += term;
        n += 1;
        if term.norm() <= SERIES_REL_TOL * sum.norm() {
            small += 1;
            if small >= 3 {
                break;
            }
        } else {
            small = 0;
        }
    }
    let r = zeta.norm();
    let tail = if r < 1.0 { term.norm() * r / (1.0 - r) } else { f64::INFINITY };
    SeriesSum { value: sum, terms: n + 1, tail }
}

fn cpow_real(base: Complex64, e: f64) -> Complex64 {
    if e == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    (base.ln() * e).exp()
}

fn near_integer(x: f64) -> bool {
    integer_distance(x) < NEAR_INTEGER
}

fn closed_form(a: f64, b: f64, c: f64, z: Complex64) -> Option<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    if z == Complex64::new(0.0, 0.0) || a == 0.0 || b == 0.0 {
        return Some(one);
    }
    if a == c {
        return Some(cpow_real(one - z, -b));
    }
    if b == c {
        return Some(cpow_real(one - z, -a));
    }
    None
}

fn auto_strategy(a: f64, b: f64, c: f64, region: Region) -> Strategy {
    match region {
        Region::InnerDisk => Strategy::Series,
        Region::PfaffRegion => Strategy::Pfaff,
        Region::NearOne if !near_integer(a + b - c) => Strategy::Connection,
        Region::NearOneReflected if !near_integer(a - b) => Strategy::PfaffConnection,
        _ => Strategy::Continuation,
    }
}

fn check_forced(a: f64, b: f64, c: f64, z: Complex64, s: Strategy) -> Result<()> {
    let one = Complex64::new(1.0, 0.0);
    let ok = match s {
        Strategy::Series => z.norm() <= FORCED_RADIUS,
        Strategy::Pfaff => (z / (z - one)).norm() <= FORCED_RADIUS,
        Strategy::Connection => {
            if integer_distance(a + b - c) == 0.0 {
                return Err(Error::UnsupportedParams(format!(
                    "connection formula needs non-integer delta, got {}",
                    a + b - c
                )));
            }
            (one - z).norm() <= FORCED_RADIUS
        }
        Strategy::PfaffConnection => {
            if integer_distance(a - b) == 0.0 {
                return Err(Error::UnsupportedParams(format!(
                    "reflected connection formula needs non-integer a-b, got {}",
                    a - b
                )));
            }
            (one - z).norm() >= 1.0 / FORCED_RADIUS
        }
        Strategy::Continuation => true,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("z = {z} is outside the validity region of {s:?}")))
    }
}

/// `2F1(a, b; c; z)` for raw parameters; `c` must not be a non-positive integer.
pub(crate) fn eval_raw(a: f64, b: f64, c: f64, z: Complex64, strategy: Option<Strategy>) -> Result<Evaluation> {
    let pt = SlitPoint::new(z)?;
    if let Some(v) = closed_form(a, b, c, z) {
        if strategy.is_none() {
            return Ok(Evaluation { value: v, strategy: Strategy::Series, terms: 0, tail_bound: 0.0 });
        }
    }
    let s = match strategy {
        Some(s) => {
            check_forced(a, b, c, z, s)?;
            s
        }
        None => auto_strategy(a, b, c, pt.region),
    };
    let one = Complex64::new(1.0, 0.0);
    let out = match s {
        Strategy::Series => {
            let r = series(a, b, c, z);
            (r.value, r.terms, r.tail)
        }
        Strategy::Pfaff => {
            let w = z / (z - one);
            let r = series(a, c - b, c, w);
            let pre = cpow_real(one - z, -a);
            (pre * r.value, r.terms, pre.norm() * r.tail)
        }
        Strategy::Connection => {
            let (ca, cb) = connection_coefficients(a, b, c)?;
            let d = a + b - c;
            let u = one - z;
            let r1 = series(a, b, d + 1.0, u);
            let r2 = series(c - a, c - b, 1.0 - d, u);
            let pw = cpow_real(u, -d);
            let v = r1.value * cb + pw * r2.value * ca;
            (v, r1.terms + r2.terms, cb.abs() * r1.tail + ca.abs() * pw.norm() * r2.tail)
        }
        Strategy::PfaffConnection => {
            let (ca, cb) = reflected_coefficients(a, b, c)?;
            let u = one - z;
            let t = one / u;
            let r1 = series(a, c - b, 1.0 + a - b, t);
            let r2 = series(c - a, b, 1.0 - a + b, t);
            let pa = cpow_real(u, -a);
            let pb = cpow_real(u, -b);
            let v = pa * r1.value * cb + pb * r2.value * ca;
            (v, r1.terms + r2.terms, cb.abs() * pa.norm() * r1.tail + ca.abs() * pb.norm() * r2.tail)
        }
        Strategy::Continuation => continuation(a, b, c, z),
    };
    let (value, terms, tail_bound) = out;
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Overflow { x: z.norm() });
    }
    Ok(Evaluation { value, strategy: s, terms, tail_bound })
}

/// `A = Γ(c)Γ(δ)/(Γ(a)Γ(b))` and `B = Γ(c)Γ(-δ)/(Γ(c-a)Γ(c-b))`.
fn connection_coefficients(a: f64, b: f64, c: f64) -> Result<(f64, f64)> {
    let d = a + b - c;
    if integer_distance(d) == 0.0 {
        return Err(Error::UnsupportedParams(format!("delta = {d} is an integer")));
    }
    let gc = gamma_real(c)?;
    let ca = gc * gamma_real(d)? * rgamma(a) * rgamma(b);
    let cb = gc * gamma_real(-d)? * rgamma(c - a) * rgamma(c - b);
    Ok((ca, cb))
}

/// Coefficients of the expansion in `1/(1-z)`:
/// `A' = Γ(c)Γ(a-b)/(Γ(a)Γ(c-b))`, `B' = Γ(c)Γ(b-a)/(Γ(c-a)Γ(b))`.
fn reflected_coefficients(a: f64, b: f64, c: f64) -> Result<(f64, f64)> {
    let gc = gamma_real(c)?;
    let ca = gc * gamma_real(a - b)? * rgamma(a) * rgamma(c - b);
    let cb = gc * gamma_real(b - a)? * rgamma(c - a) * rgamma(b);
    Ok((ca, cb))
}

/// Taylor coefficients `d_k = F^{(k)}(p) h^k / k!` of a solution of the
/// hypergeometric equation, summed at `h`; returns `(F(p+h), F'(p+h))`.
fn taylor_step(a: f64, b: f64, c: f64, p: Complex64, h: Complex64, f0: Complex64, df0: Complex64) -> (Complex64, Complex64, usize) {
    let one = Complex64::new(1.0, 0.0);
    let lead = p * (one - p);
    let lin = one - p * 2.0;
    let cst = Complex64::new(c, 0.0) - p * (a + b + 1.0);
    let h2 = h * h;
    let mut d0 = f0;
    let mut d1 = df0 * h;
    let mut sum = d0 + d1;
    let mut dsum = d1;
    let mut small = 0;
    let mut k = 0usize;
    while k < 2_000 {
        let kf = k as f64;
        let d2 = (d0 * h2 * ((kf + a) * (kf + b)) - (lin * kf + cst) * h * d1 * (kf + 1.0))
            / (lead * ((kf + 1.0) * (kf + 2.0)));
        sum += d2;
        dsum += d2 * (kf + 2.0);
        k += 1;
        let scale = sum.norm() + dsum.norm();
        if d2.norm() * (kf + 3.0) <= 1e-17 * scale {
            small += 1;
            if small >= 3 {
                break;
            }
        } else {
            small = 0;
        }
        d0 = d1;
        d1 = d2;
    }
    (sum, dsum / h, k + 2)
}

/// Walks the straight segment from `p` to `q`, each step at most half the
/// distance from the current centre to the singular points `0` and `1`.
fn walk_segment(a: f64, b: f64, c: f64, mut p: Complex64, q: Complex64, mut f: Complex64, mut df: Complex64) -> (Complex64, Complex64, usize) {
    let one = Complex64::new(1.0, 0.0);
    let mut terms = 0;
    loop {
        let remaining = q - p;
        let dist = remaining.norm();
        if dist == 0.0 {
            break;
        }
        let hmax = 0.5 * p.norm().min((one - p).norm());
        let last = dist <= hmax;
        let h = if last { remaining } else { remaining * (hmax / dist) };
        let (nf, ndf, n) = taylor_step(a, b, c, p, h, f, df);
        f = nf;
        df = ndf;
        terms += n;
        p = if last { q } else { p + h };
    }
    (f, df, terms)
}

/// Value and derivative at a real point `x < 1`, walking the real axis from `±1/2`.
fn real_start(a: f64, b: f64, c: f64, x: f64) -> (Complex64, Complex64, usize) {
    let z = Complex64::new(x, 0.0);
    if x.abs() <= 0.5 {
        let s0 = series(a, b, c, z);
        let s1 = series(a + 1.0, b + 1.0, c + 1.0, z);
        return (s0.value, s1.value * (a * b / c), s0.terms + s1.terms);
    }
    let p = Complex64::new(0.5f64.copysign(x), 0.0);
    let s0 = series(a, b, c, p);
    let s1 = series(a + 1.0, b + 1.0, c + 1.0, p);
    let (f, df, n) = walk_segment(a, b, c, p, z, s0.value, s1.value * (a * b / c));
    (f, df, n + s0.terms + s1.terms)
}

/// Analytic continuation by Taylor re-expansion of the hypergeometric equation.
///
/// Real points are reached along the real axis. Other points are reached
/// along the circle `|ζ - 1| = |z - 1|` in the half-plane of `z`, entered
/// either at its real point `1 - |1-z|` or at the point with `|ζ| = 1/2`.
/// The path keeps distance `|1-z|` from `1` and at least `1/2` from `0`.
fn continuation(a: f64, b: f64, c: f64, z: Complex64) -> (Complex64, usize, f64) {
    if z.im < 0.0 {
        let (v, n, t) = continuation(a, b, c, z.conj());
        return (v.conj(), n, t);
    }
    if z.norm() <= 0.5 {
        let s = series(a, b, c, z);
        return (s.value, s.terms, s.tail);
    }
    if z.im == 0.0 {
        let (f, _, n) = real_start(a, b, c, z.re);
        return (f, n, f.norm() * 1e-15);
    }
    let one = Complex64::new(1.0, 0.0);
    let rho = (z - one).norm();
    let phi_z = (z - one).arg();
    let (phi0, mut f, mut df, mut terms) = if (1.0 - rho).abs() >= 0.5 {
        let (f, df, n) = real_start(a, b, c, 1.0 - rho);
        (std::f64::consts::PI, f, df, n)
    } else {
        let cosphi = ((0.25 - 1.0 - rho * rho) / (2.0 * rho)).clamp(-1.0, 1.0);
        let phi = cosphi.acos();
        let p = one + Complex64::from_polar(rho, phi);
        let s0 = series(a, b, c, p);
        let s1 = series(a + 1.0, b + 1.0, c + 1.0, p);
        (phi, s0.value, s1.value * (a * b / c), s0.terms + s1.terms)
    };
    let mut phi = phi0;
    let mut p = one + Complex64::from_polar(rho, phi);
    while phi != phi_z {
        let hmax = 0.5 * p.norm().min(rho);
        let dphi = 2.0 * (hmax / (2.0 * rho)).min(1.0).asin();
        let next_phi = if (phi_z - phi).abs() <= dphi { phi_z } else { phi + dphi.copysign(phi_z - phi) };
        let q = if next_phi == phi_z { z } else { one + Complex64::from_polar(rho, next_phi) };
        let (nf, ndf, n) = taylor_step(a, b, c, p, q - p, f, df);
        f = nf;
        df = ndf;
        terms += n;
        p = q;
        phi = next_phi;
    }
    (f, terms, f.norm() * 1e-15)
}

/// `2F1(a, b; c; z)`; `strategy = None` picks the method from the region of `z`.
pub fn hyp2f1(p: &ParamTriple, z: &SlitPoint, strategy: Option<Strategy>) -> Result<Complex64> {
    Ok(eval_raw(p.a, p.b, p.c, z.z, strategy)?.value)
}

/// As [`hyp2f1`], also reporting the strategy and the series tail estimate.
pub fn hyp2f1_detailed(p: &ParamTriple, z: &SlitPoint, strategy: Option<Strategy>) -> Result<Evaluation> {
    eval_raw(p.a, p.b, p.c, z.z, strategy)
}

/// `2F1` at a bare complex point.
pub fn hyp2f1_at(p: &ParamTriple, z: Complex64) -> Result<Complex64> {
    Ok(eval_raw(p.a, p.b, p.c, z, None)?.value)
}

/// Gauss's sum `2F1(a,b;c;1) = Γ(c)Γ(c-a-b)/(Γ(c-a)Γ(c-b))`, valid for `c-a-b > 0`.
pub fn hyp2f1_at_one(p: &ParamTriple) -> Result<f64> {
    let s = p.c - p.a - p.b;
    if s <= 0.0 {
        return Err(Error::Domain(format!("2F1 diverges at z = 1 when c-a-b = {s} <= 0")));
    }
    Ok(gamma_real(p.c)? * gamma_real(s)? * rgamma(p.c - p.a) * rgamma(p.c - p.b))
}

/// Derivative of order 0, 1 or 2 via `F' = (ab/c) 2F1(a+1, b+1; c+1; z)`.
pub fn hyp2f1_derivatives(p: &ParamTriple, z: &SlitPoint, order: u8) -> Result<Complex64> {
    let (a, b, c) = (p.a, p.b, p.c);
    match order {
        0 => hyp2f1(p, z, None),
        1 => Ok(eval_raw(a + 1.0, b + 1.0, c + 1.0, z.z, None)?.value * (a * b / c)),
        2 => {
            let k = a * (a + 1.0) * b * (b + 1.0) / (c * (c + 1.0));
            Ok(eval_raw(a + 2.0, b + 2.0, c + 2.0, z.z, None)?.value * k)
        }
        _ => Err(Error::InvalidArgument(format!("derivative order {order} not in 0..=2"))),
    }
}

/// Scaled residual of `G - F = (b/c) z H`, with `G = 2F1(a+1,b;c;z)` and
/// `H = 2F1(a+1,b+1;c+1;z)`, divided by `max(|F|, |G|, |zH|)`.
pub fn contiguous_residual(p: &ParamTriple, z: &SlitPoint) -> Result<f64> {
    let (a, b, c) = (p.a, p.b, p.c);
    let f = hyp2f1(p, z, None)?;
    let g = eval_raw(a + 1.0, b, c, z.z, None)?.value;
    let zh = z.z * eval_raw(a + 1.0, b + 1.0, c + 1.0, z.z, None)?.value;
    let scale = f.norm().max(g.norm()).max(zh.norm());
    Ok((g - f - zh * (b / c)).norm() / scale)
}

/// `f(z) = z 2F1(a, b; c; z)`.
pub fn shifted_f(p: &ParamTriple, z: &SlitPoint) -> Result<Complex64> {
    Ok(z.z * hyp2f1(p, z, None)?)
}

/// `g(z) = z 2F1(a, b; c; z^2)`; requires `z^2 ∈ Λ`.
pub fn shifted_g(p: &ParamTriple, z: Complex64) -> Result<Complex64> {
    let sq = SlitPoint::new(z * z)?;
    Ok(z * hyp2f1(p, &sq, None)?)
}

/// `f'(z)` and `f''(z)` for `f(z) = z F(z)`.
pub fn shifted_f_derivatives(p: &ParamTriple, z: &SlitPoint) -> Result<(Complex64, Complex64)> {
    let f = hyp2f1(p, z, None)?;
    let d1 = hyp2f1_derivatives(p, z, 1)?;
    let d2 = hyp2f1_derivatives(p, z, 2)?;
    Ok((f + z.z * d1, d1 * 2.0 + z.z * d2))
}

/// How `z f''/f'` is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PreschwarzRoute {
    /// From the parameter-shifted derivatives.
    Direct,
    /// From the ratio `h = 2F1(a+1,b;c;z)/2F1(a,b;c;z)`.
    EqW,
}

const NEAR_ZERO_REL: f64 = 1e-13;

/// `z f''(z) / f'(z)` for the shifted function `f`.
pub fn preschwarzian(p: &ParamTriple, z: &SlitPoint, route: PreschwarzRoute) -> Result<Complex64> {
    let zz = z.z;
    if zz == Complex64::new(0.0, 0.0) {
        return Ok(zz);
    }
    match route {
        PreschwarzRoute::Direct => {
            let f = hyp2f1(p, z, None)?;
            let d1 = hyp2f1_derivatives(p, z, 1)?;
            let d2 = hyp2f1_derivatives(p, z, 2)?;
            let fp = f + zz * d1;
            if fp.norm() <= NEAR_ZERO_REL * (f.norm() + (zz * d1).norm()) {
                return Err(Error::NearZeroDerivative { z: zz });
            }
            Ok(zz * (d1 * 2.0 + zz * d2) / fp)
        }
        PreschwarzRoute::EqW => {
            let (a, b, c) = (p.a, p.b, p.c);
            let f = hyp2f1(p, z, None)?;
            let g = eval_raw(a + 1.0, b, c, zz, None)?.value;
            let one = Complex64::new(1.0, 0.0);
            // f' = F (1 - a + a h)
            let denom = (one - a) + g / f * a;
            if denom.norm() <= NEAR_ZERO_REL * (1.0 + (g / f * a).norm()) {
                return Err(Error::NearZeroDerivative { z: zz });
            }
            let u = one - zz;
            let first = ((a + b - 1.0) * zz + (2.0 - c)) / u;
            let second = ((1.0 - a) * (1.0 - b) * zz + (c - 2.0)) / (u * denom);
            Ok(first + second)
        }
    }
}
