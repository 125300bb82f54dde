//! Truncated power series with exact rational or floating entries.
//!
//! Float-mode series carry a running absolute error bound per coefficient,
//! which the delta tables use to separate real sign changes from rounding.

mod delta;
mod screen;

pub use delta::{delta_table, DeltaTable, Witness};
pub use screen::{necessary_conditions, NecessaryConditions};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{Num, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{rational_to_f64, ParamTriple, RationalTriple};

/// Arithmetic used for series coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    Float,
}

/// Coefficients `c_0, ..., c_depth`.
///
/// `values` always holds the `f64` image. In exact mode `exact` holds the
/// rationals and `err` is zero; in float mode `err[n]` bounds `|values[n] - c_n|`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffSeries {
    pub depth: usize,
    pub mode: Mode,
    pub values: Vec<f64>,
    pub err: Vec<f64>,
    /// Serialized as `"p/q"` strings.
    #[serde(with = "rational_strings", default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<BigRational>>,
}

mod rational_strings {
    use num_rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Vec<BigRational>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.collect_seq(v.iter().map(ToString::to_string)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<BigRational>>, D::Error> {
        let raw: Option<Vec<String>> = Option::deserialize(d)?;
        raw.map(|v| v.iter().map(|x| x.parse().map_err(D::Error::custom)).collect()).transpose()
    }
}

const EPS: f64 = f64::EPSILON;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl CoeffSeries {
    pub fn from_exact(exact: Vec<BigRational>) -> Self {
        let values = exact.iter().map(rational_to_f64).collect::<Vec<_>>();
        CoeffSeries {
            depth: exact.len() - 1,
            mode: Mode::Exact,
            err: vec![0.0; values.len()],
            values,
            exact: Some(exact),
        }
    }

    pub fn from_float(values: Vec<f64>, err: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), err.len());
        CoeffSeries { depth: values.len() - 1, mode: Mode::Float, values, err, exact: None }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Truncates to `c_0..=c_depth`.
    pub fn truncate(&self, depth: usize) -> Self {
        let n = (depth + 1).min(self.len());
        CoeffSeries {
            depth: n - 1,
            mode: self.mode,
            values: self.values[..n].to_vec(),
            err: self.err[..n].to_vec(),
            exact: self.exact.as_ref().map(|e| e[..n].to_vec()),
        }
    }

    /// Sum of the series at a real point, for spot checks.
    pub fn eval(&self, x: f64) -> f64 {
        self.values.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Quotient `self / other` truncated to the shorter depth.
    pub fn div(&self, other: &CoeffSeries) -> Result<CoeffSeries> {
        let n = self.len().min(other.len());
        match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => Ok(CoeffSeries::from_exact(div_exact(&a[..n], &b[..n])?)),
            _ => {
                let q = div_generic(&self.values[..n], &other.values[..n])?;
                let err = div_error(&self.values[..n], &self.err[..n], &other.values[..n], &other.err[..n], &q);
                Ok(CoeffSeries::from_float(q, err))
            }
        }
    }
}

/// Power-series quotient `num / den`; `den[0]` must be nonzero.
fn div_generic<T: Clone + Num>(num: &[T], den: &[T]) -> Result<Vec<T>> {
    if den[0].is_zero() {
        return Err(Error::DivisionBreakdown);
    }
    let mut q: Vec<T> = Vec::with_capacity(num.len());
    for n in 0..num.len() {
        let mut acc = num[n].clone();
        for k in 1..=n {
            acc = acc - den[k].clone() * q[n - k].clone();
        }
        q.push(acc / den[0].clone());
    }
    Ok(q)
}

/// Exact quotient computed fraction-free.
///
/// With `N = Dn num` and `M = Dd den` integral, `Q_n = M_0^{n+1} (N/M)_n`
/// satisfies `Q_n = M_0^n N_n - Σ_{k=1}^n M_k M_0^{k-1} Q_{n-k}`, so only the
/// final coefficients are reduced.
fn div_exact(num: &[BigRational], den: &[BigRational]) -> Result<Vec<BigRational>> {
    if den[0].is_zero() {
        return Err(Error::DivisionBreakdown);
    }
    let common = |v: &[BigRational]| v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let (dn, dd) = (common(num), common(den));
    let to_int = |v: &[BigRational], d: &BigInt| -> Vec<BigInt> { v.iter().map(|x| x.numer() * (d / x.denom())).collect() };
    let (nn, mm) = (to_int(num, &dn), to_int(den, &dd));
    let mut pow = vec![BigInt::one()];
    for k in 1..=num.len() {
        pow.push(&pow[k - 1] * &mm[0]);
    }
    let mut q: Vec<BigInt> = Vec::with_capacity(num.len());
    for n in 0..num.len() {
        let mut acc = &pow[n] * &nn[n];
        for k in 1..=n {
            acc -= &mm[k] * &pow[k - 1] * &q[n - k];
        }
        q.push(acc);
    }
    Ok(q.into_iter()
        .enumerate()
        .map(|(n, qn)| BigRational::new(qn * &dd, &dn * &pow[n + 1]))
        .collect())
}

/// Absolute error bound of a float quotient, first order in the inputs' errors.
fn div_error(num: &[f64], num_err: &[f64], den: &[f64], den_err: &[f64], q: &[f64]) -> Vec<f64> {
    let d0 = den[0].abs();
    let mut e: Vec<f64> = Vec::with_capacity(q.len());
    for n in 0..q.len() {
        let mut acc = num_err[n] + num[n].abs() * EPS;
        let mut mag = num[n].abs();
        for k in 1..=n {
            let t = (den[k] * q[n - k]).abs();
            acc += den[k].abs() * e[n - k] + den_err[k] * q[n - k].abs();
            mag += t;
        }
        acc += mag * (n as f64 + 2.0) * EPS;
        acc += q[n].abs() * den_err[0];
        e.push(acc / d0);
    }
    e
}

fn taylor_generic<T: Clone + Num>(a: &T, b: &T, c: &T, depth: usize, int: impl Fn(i64) -> T) -> Result<Vec<T>> {
    let mut out = Vec::with_capacity(depth + 1);
    let mut t = T::one();
    out.push(t.clone());
    for n in 0..depth {
        let nn = int(n as i64);
        let den = (c.clone() + nn.clone()) * (nn.clone() + T::one());
        if den.is_zero() {
            return Err(Error::Pole { x: -(n as f64) });
        }
        t = t * (a.clone() + nn.clone()) * (b.clone() + nn) / den;
        out.push(t.clone());
    }
    Ok(out)
}

/// Taylor coefficients `(a)_n (b)_n / ((c)_n n!)` of `2F1(a,b;c;z)` for raw parameters.
pub fn taylor_raw(a: f64, b: f64, c: f64, depth: usize, mode: Mode) -> Result<CoeffSeries> {
    match mode {
        Mode::Exact => {
            let r = RationalTriple {
                a: crate::params::decimal_rational(a),
                b: crate::params::decimal_rational(b),
                c: crate::params::decimal_rational(c),
            };
            taylor_rational(&r, depth)
        }
        Mode::Float => {
            let v = taylor_generic(&a, &b, &c, depth, |n| n as f64)?;
            // five roundings per recurrence step
            let err = v.iter().enumerate().map(|(n, x)| x.abs() * 5.0 * (n as f64 + 1.0) * EPS).collect();
            Ok(CoeffSeries::from_float(v, err))
        }
    }
}

pub fn taylor_rational(r: &RationalTriple, depth: usize) -> Result<CoeffSeries> {
    Ok(CoeffSeries::from_exact(taylor_generic(&r.a, &r.b, &r.c, depth, rat)?))
}

/// Taylor coefficients of `2F1(a,b;c;z)`.
pub fn taylor_2f1(p: &ParamTriple, depth: usize, mode: Mode) -> Result<CoeffSeries> {
    match mode {
        Mode::Exact => taylor_rational(&p.rational(), depth),
        Mode::Float => taylor_raw(p.a, p.b, p.c, depth, mode),
    }
}

/// Coefficients of `Ψ = 1 + z f''/f'` (`half = false`) or `1 + z f''/(2 f')`
/// (`half = true`) for `f(z) = z 2F1(a,b;c;z)`.
pub fn preschwarzian_series(p: &ParamTriple, depth: usize, half: bool, mode: Mode) -> Result<CoeffSeries> {
    if depth == 0 {
        return Err(Error::InvalidArgument("preschwarzian series needs depth >= 1".into()));
    }
    let f = taylor_2f1(p, depth, mode)?;
    // f'(z) = Σ (n+1) F_n z^n,  z f''(z) = Σ n(n+1) F_n z^n
    match &f.exact {
        Some(fx) => {
            let fp: Vec<BigRational> = fx.iter().enumerate().map(|(n, v)| v * rat(n as i64 + 1)).collect();
            let zfpp: Vec<BigRational> =
                fx.iter().enumerate().map(|(n, v)| v * rat((n as i64) * (n as i64 + 1))).collect();
            let mut q = div_generic(&zfpp, &fp)?;
            let two = rat(2);
            for (n, c) in q.iter_mut().enumerate() {
                if half {
                    *c = &*c / &two;
                }
                if n == 0 {
                    *c = &*c + BigRational::one();
                }
            }
            Ok(CoeffSeries::from_exact(q))
        }
        None => {
            let scale = |n: usize, k: f64| k * (n as f64 + 1.0);
            let fp: Vec<f64> = f.values.iter().enumerate().map(|(n, v)| v * scale(n, 1.0)).collect();
            let fp_err: Vec<f64> = f.err.iter().enumerate().map(|(n, e)| e * scale(n, 1.0) + (v_abs(&f, n) * scale(n, 1.0)) * EPS).collect();
            let zfpp: Vec<f64> = f.values.iter().enumerate().map(|(n, v)| v * scale(n, n as f64)).collect();
            let zfpp_err: Vec<f64> =
                f.err.iter().enumerate().map(|(n, e)| e * scale(n, n as f64) + v_abs(&f, n) * scale(n, n as f64) * 2.0 * EPS).collect();
            let mut q = div_generic(&zfpp, &fp)?;
            let mut err = div_error(&zfpp, &zfpp_err, &fp, &fp_err, &q);
            for (n, c) in q.iter_mut().enumerate() {
                if half {
                    *c /= 2.0;
                    err[n] /= 2.0;
                }
                if n == 0 {
                    *c += 1.0;
                }
                err[n] += c.abs() * EPS;
            }
            Ok(CoeffSeries::from_float(q, err))
        }
    }
}

fn v_abs(s: &CoeffSeries, n: usize) -> f64 {
    s.values[n].abs()
}

/// Coefficients of the quotient `2F1(num) / 2F1(den)` of two hypergeometric series.
pub fn ratio_series(num: (f64, f64, f64), den: (f64, f64, f64), depth: usize, mode: Mode) -> Result<CoeffSeries> {
    let n = taylor_raw(num.0, num.1, num.2, depth, mode)?;
    let d = taylor_raw(den.0, den.1, den.2, depth, mode)?;
    n.div(&d)
}
