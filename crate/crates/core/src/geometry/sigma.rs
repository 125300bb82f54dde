use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::theorem1::require_unit_delta;
use crate::error::Result;
use crate::params::{rational_to_f64, ParamTriple};
use crate::series::CoeffSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignPattern {
    AllPositive,
    AllNegative,
    AllZero,
    Mixed,
}

/// Taylor coefficients of `R(z) = F(z) - A(1-z)^{-δ} = Σ σ_n z^n`, written as
/// `σ_n = (δ)_n/n! (Q_n - A)` with `Q_n = (a)_n (b)_n / ((c)_n (δ)_n)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SigmaSeries {
    pub params: ParamTriple,
    /// `σ_n` for `n < N`, in floating point.
    pub sigma: CoeffSeries,
    /// `Q_n` for `n < N`, exact.
    pub q: CoeffSeries,
    pub a_const: f64,
    pub b_const: f64,
    /// Sign of `σ_n` proved from the exact monotonicity of `Q_n`.
    pub exact_pattern: SignPattern,
    /// Sign pattern of the floating-point `σ_n`.
    pub observed_pattern: SignPattern,
    /// Pattern predicted from the position of `c` relative to `a` and `b`.
    pub expected_pattern: SignPattern,
    /// `Q_{n+1}/Q_n - 1 = (a-c)(b-c)/((c+n)(δ+n))` held exactly for `n <= 50`.
    pub ratio_identity: bool,
    /// `(N, S_N)` with `S_N = Σ_{n<N} σ_n`.
    pub partial_sums: Vec<(usize, f64)>,
    /// Log-log slope of `|S_N - B|` between the last two partial sums.
    pub tail_slope: Option<f64>,
}

impl SigmaSeries {
    pub fn pattern_ok(&self) -> bool {
        self.exact_pattern == self.expected_pattern && self.observed_pattern == self.expected_pattern
    }
}

fn pattern_of(values: &[f64]) -> SignPattern {
    if values.iter().all(|&v| v > 0.0) {
        SignPattern::AllPositive
    } else if values.iter().all(|&v| v < 0.0) {
        SignPattern::AllNegative
    } else if values.iter().all(|&v| v == 0.0) {
        SignPattern::AllZero
    } else {
        SignPattern::Mixed
    }
}

/// `σ_n` for `n < n_terms` with exact `Q_n`, plus floating-point partial sums
/// at `10^k <= sum_to`.
///
/// `Q_n` is strictly monotone with limit `A`, so the sign of `(a-c)(b-c)`
/// decides the sign of every `σ_n` exactly.
pub fn sigma_series(p: &ParamTriple, n_terms: usize, sum_to: usize) -> Result<SigmaSeries> {
    require_unit_delta(p)?;
    let (a_const, b_const) = p.connection_constants()?;
    let r = p.rational();
    let d = r.delta();
    let zero = BigRational::zero();
    let mut q = vec![BigRational::one()];
    for n in 0..n_terms.saturating_sub(1) {
        let nb = BigRational::from_integer(n.into());
        let next = &q[n] * (&r.a + &nb) * (&r.b + &nb) / ((&r.c + &nb) * (&d + &nb));
        q.push(next);
    }
    let mono = (&r.a - &r.c) * (&r.b - &r.c);
    let mut ratio_identity = true;
    for n in 0..q.len().saturating_sub(1).min(51) {
        let nb = BigRational::from_integer(n.into());
        let lhs = &q[n + 1] / &q[n] - BigRational::one();
        ratio_identity &= lhs == &mono / ((&r.c + &nb) * (&d + &nb));
    }
    // Q decreasing means Q_n > A, hence σ_n > 0
    let exact_pattern = if mono.is_zero() {
        SignPattern::AllZero
    } else if mono < zero {
        SignPattern::AllPositive
    } else {
        SignPattern::AllNegative
    };
    let expected_pattern = if r.c == r.a || r.c == r.b {
        SignPattern::AllZero
    } else if r.a < r.c && r.c < r.b {
        SignPattern::AllPositive
    } else {
        SignPattern::AllNegative
    };

    let q_float: Vec<f64> = q.iter().map(rational_to_f64).collect();
    let mut sigma = Vec::with_capacity(q.len());
    let mut poch = 1.0; // (δ)_n / n!
    for (n, &qn) in q_float.iter().enumerate() {
        sigma.push(poch * (qn - a_const));
        poch *= (p.delta + n as f64) / (n as f64 + 1.0);
    }
    let observed_pattern = pattern_of(&sigma);

    // Partial sums in floating point with the recurrences for Q_n and (δ)_n/n!
    let mut partial_sums = Vec::new();
    let (mut qn, mut poch, mut s) = (1.0f64, 1.0f64, 0.0f64);
    let mut checkpoint = 10;
    for n in 0..sum_to {
        s += poch * (qn - a_const);
        let nf = n as f64;
        qn *= (p.a + nf) * (p.b + nf) / ((p.c + nf) * (p.delta + nf));
        poch *= (p.delta + nf) / (nf + 1.0);
        if n + 1 == checkpoint {
            partial_sums.push((checkpoint, s));
            checkpoint *= 10;
        }
    }
    let tail_slope = match partial_sums.as_slice() {
        [.., (n1, s1), (n2, s2)] => {
            Some(((s2 - b_const).abs() / (s1 - b_const).abs()).ln() / (*n2 as f64 / *n1 as f64).ln()).filter(|v| v.is_finite())
        }
        _ => None,
    };
    let err = vec![0.0; sigma.len()];
    let q_series = CoeffSeries::from_exact(q);
    Ok(SigmaSeries {
        params: *p,
        sigma: CoeffSeries::from_float(sigma, err),
        q: q_series,
        a_const,
        b_const,
        exact_pattern,
        observed_pattern,
        expected_pattern,
        ratio_identity,
        partial_sums,
        tail_slope,
    })
}
