use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{CoeffSeries, Mode};
use crate::params::rational_to_f64;

/// An entry `Δ^k c_n < 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub k: usize,
    pub n: usize,
    pub value: f64,
    /// Exact value as `p/q` when the table was built in exact mode.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact: Option<String>,
}

/// Forward differences `Δ^k c_n` for `k <= max_k`, `k + n <= max_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaTable {
    pub mode: Mode,
    pub max_k: usize,
    pub max_n: usize,
    /// Float witness threshold before error bounds; zero in exact mode.
    pub tol: f64,
    pub rows: Vec<Vec<f64>>,
    /// Absolute error bound per entry (zero in exact mode).
    pub err: Vec<Vec<f64>>,
    pub exact_rows: Option<Vec<Vec<BigRational>>>,
    /// Sorted by `(k + n, k)`.
    pub witnesses: Vec<Witness>,
    /// Negative float entries too small to be told apart from rounding.
    pub indeterminate: Vec<(usize, usize)>,
}

impl DeltaTable {
    pub fn is_clean(&self) -> bool {
        self.witnesses.is_empty() && self.indeterminate.is_empty()
    }

    /// Smallest entry with its position.
    pub fn min_entry(&self) -> (usize, usize, f64) {
        let mut best = (0, 0, f64::INFINITY);
        for (k, row) in self.rows.iter().enumerate() {
            for (n, &v) in row.iter().enumerate() {
                if v < best.2 {
                    best = (k, n, v);
                }
            }
        }
        best
    }

    pub fn get(&self, k: usize, n: usize) -> Option<f64> {
        self.rows.get(k).and_then(|r| r.get(n)).copied()
    }
}

/// Builds the table `rows[k+1][n] = rows[k][n] - rows[k][n+1]` from `s`.
///
/// The table covers `k <= max_k` and `k + n <= s.depth`. In float mode the
/// error bound of each entry is propagated, and an entry is a witness only
/// when it is below `-max(1e-12, 1e-10 |c_0|, bound)`.
pub fn delta_table(s: &CoeffSeries, max_k: usize) -> DeltaTable {
    let depth = s.depth;
    let max_k = max_k.min(depth);
    let mut witnesses = Vec::new();
    let mut indeterminate = Vec::new();
    let (rows, err, exact_rows, tol) = match &s.exact {
        Some(ex) => {
            // differences of integers over one common denominator
            let den = ex.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            let mut ints: Vec<Vec<BigInt>> = vec![ex.iter().map(|x| x.numer() * (&den / x.denom())).collect()];
            for k in 0..max_k {
                let prev = &ints[k];
                let next: Vec<BigInt> = (0..prev.len() - 1).map(|n| &prev[n] - &prev[n + 1]).collect();
                ints.push(next);
            }
            let xr: Vec<Vec<BigRational>> =
                ints.into_iter().map(|r| r.into_iter().map(|v| BigRational::new(v, den.clone())).collect()).collect();
            for (k, row) in xr.iter().enumerate() {
                for (n, v) in row.iter().enumerate() {
                    if v.is_negative() {
                        witnesses.push(Witness { k, n, value: rational_to_f64(v), exact: Some(v.to_string()) });
                    }
                }
            }
            let rows: Vec<Vec<f64>> = xr.iter().map(|r| r.iter().map(rational_to_f64).collect()).collect();
            let err = rows.iter().map(|r| vec![0.0; r.len()]).collect();
            (rows, err, Some(xr), 0.0)
        }
        None => {
            let mut rows = vec![s.values.clone()];
            let mut err = vec![s.err.clone()];
            for k in 0..max_k {
                let (pv, pe) = (&rows[k], &err[k]);
                let mut nv = Vec::with_capacity(pv.len() - 1);
                let mut ne = Vec::with_capacity(pv.len() - 1);
                for n in 0..pv.len() - 1 {
                    let v = pv[n] - pv[n + 1];
                    nv.push(v);
                    ne.push(pe[n] + pe[n + 1] + v.abs() * f64::EPSILON);
                }
                rows.push(nv);
                err.push(ne);
            }
            let tol = 1e-12f64.max(1e-10 * s.values[0].abs());
            for k in 0..rows.len() {
                for n in 0..rows[k].len() {
                    let v = rows[k][n];
                    if v < -tol.max(err[k][n]) {
                        witnesses.push(Witness { k, n, value: v, exact: None });
                    } else if v < 0.0 {
                        indeterminate.push((k, n));
                    }
                }
            }
            (rows, err, None, tol)
        }
    };
    witnesses.sort_by_key(|w| (w.k + w.n, w.k));
    indeterminate.sort_by_key(|&(k, n)| (k + n, k));
    DeltaTable { mode: s.mode, max_k, max_n: depth, tol, rows, err, exact_rows, witnesses, indeterminate }
}
