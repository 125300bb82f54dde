//! The parameter triple `(a, b, c)` of `2F1(a, b; c; z)` and the constants
//! derived from it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters `(a, b, c)` with `a <= b` and `c` not a non-positive integer.
///
/// The derived constants are stored at construction and recomputed by the
/// accessor-free `recompute` path with the same expressions, so stored and
/// recomputed values agree bit for bit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTriple", into = "RawTriple")]
pub struct ParamTriple {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// `a + b - c`
    pub delta: f64,
    /// `ab / c`, the second Taylor coefficient of `z 2F1(a,b;c;z)`.
    pub alpha: f64,
    /// `(a+1)(b+1) / (2(c+1))`
    pub beta: f64,
    /// `ab / c` again, under the name used by the M-function of the first
    /// integral representation.
    pub tau: f64,
    /// `(a-1)b / c`
    pub sigma: f64,
    /// `(c-a-1)b / c`
    pub sigma_prime: f64,
}

#[derive(Serialize, Deserialize)]
struct RawTriple {
    a: f64,
    b: f64,
    c: f64,
}

impl TryFrom<RawTriple> for ParamTriple {
    type Error = Error;
    fn try_from(r: RawTriple) -> Result<Self> {
        ParamTriple::new(r.a, r.b, r.c)
    }
}

impl From<ParamTriple> for RawTriple {
    fn from(p: ParamTriple) -> Self {
        RawTriple { a: p.a, b: p.b, c: p.c }
    }
}

/// Derived constants in field order `(delta, alpha, beta, tau, sigma, sigma_prime)`.
pub(crate) fn derived(a: f64, b: f64, c: f64) -> [f64; 6] {
    [
        a + b - c,
        a * b / c,
        (a + 1.0) * (b + 1.0) / (2.0 * (c + 1.0)),
        a * b / c,
        (a - 1.0) * b / c,
        (c - a - 1.0) * b / c,
    ]
}

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Distance from `x` to the nearest integer.
pub(crate) fn integer_distance(x: f64) -> f64 {
    (x - x.round()).abs()
}

impl ParamTriple {
    /// Builds a triple, swapping `a` and `b` if needed so that `a <= b`.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "parameters must be finite, got ({a}, {b}, {c})"
            )));
        }
        if is_nonpositive_integer(c) {
            return Err(Error::Domain(format!(
                "c = {c} is a non-positive integer; the series has a pole"
            )));
        }
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let [delta, alpha, beta, tau, sigma, sigma_prime] = derived(a, b, c);
        Ok(ParamTriple { a, b, c, delta, alpha, beta, tau, sigma, sigma_prime })
    }

    /// Recomputes the derived constants from `(a, b, c)`.
    pub fn recompute(&self) -> [f64; 6] {
        derived(self.a, self.b, self.c)
    }

    /// The triple `(a + da, b + db, c + dc)`, re-canonicalised.
    pub fn shifted(&self, da: f64, db: f64, dc: f64) -> Result<Self> {
        ParamTriple::new(self.a + da, self.b + db, self.c + dc)
    }

    /// True when `0 < a <= b <= c`, the standing assumption of the
    /// geometric results.
    pub fn is_standard(&self) -> bool {
        0.0 < self.a && self.a <= self.b && self.b <= self.c
    }

    /// `(A, B)` of the decomposition `F = A(1-z)^{-delta} + R(z)`, `R(1) = B`:
    /// `A = Γ(c)Γ(δ)/(Γ(a)Γ(b))`, `B = Γ(c)Γ(-δ)/(Γ(c-a)Γ(c-b))`.
    pub fn connection_constants(&self) -> Result<(f64, f64)> {
        use crate::specfun::gamma::{gamma_real, rgamma};
        if integer_distance(self.delta) == 0.0 {
            return Err(Error::UnsupportedParams(format!(
                "delta = {} is an integer; connection coefficients have gamma poles",
                self.delta
            )));
        }
        let gc = gamma_real(self.c)?;
        let a_const = gc * gamma_real(self.delta)? * rgamma(self.a) * rgamma(self.b);
        let b_const = gc * gamma_real(-self.delta)? * rgamma(self.c - self.a) * rgamma(self.c - self.b);
        Ok((a_const, b_const))
    }

    /// Exact rational images of the parameters.
    ///
    /// Each `f64` is read as the shortest decimal string that round-trips to
    /// it, so `0.8` becomes `4/5` rather than the binary expansion.
    pub fn rational(&self) -> RationalTriple {
        RationalTriple {
            a: decimal_rational(self.a),
            b: decimal_rational(self.b),
            c: decimal_rational(self.c),
        }
    }
}

impl std::fmt::Display for ParamTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(a={}, b={}, c={})", self.a, self.b, self.c)
    }
}

/// Exact counterpart of [`ParamTriple`] used by exact-mode series.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalTriple {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
}

impl RationalTriple {
    pub fn delta(&self) -> BigRational {
        &self.a + &self.b - &self.c
    }

    pub fn alpha(&self) -> BigRational {
        &self.a * &self.b / &self.c
    }

    pub fn beta(&self) -> BigRational {
        let one = BigRational::one();
        let two = BigRational::from_integer(BigInt::from(2));
        (&self.a + &one) * (&self.b + &one) / (two * (&self.c + &one))
    }
}

/// Shortest round-trip decimal of `x` as an exact rational.
pub fn decimal_rational(x: f64) -> BigRational {
    let s = format!("{x}");
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.as_str()),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    let mut numer_digits = String::with_capacity(int_part.len() + frac_part.len());
    numer_digits.push_str(int_part);
    numer_digits.push_str(frac_part);
    let numer: BigInt = numer_digits.parse().unwrap_or_else(|_| BigInt::zero());
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    let r = BigRational::new(numer, denom);
    if neg {
        -r
    } else {
        r
    }
}

/// Rounds an exact rational to the nearest `f64`.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // numerator or denominator too large for a direct conversion
    let n = r.numer().bits() as i64;
    let d = r.denom().bits() as i64;
    let shift = (n - d) - 60;
    let scaled = if shift > 0 {
        BigRational::new(r.numer().clone(), r.denom() << (shift as usize))
    } else {
        BigRational::new(r.numer() << ((-shift) as usize), r.denom().clone())
    };
    scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
}
