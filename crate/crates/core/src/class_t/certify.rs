use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{check_liu_pego, half_profile, GridSpec, TCheckReport};
use crate::error::{Error, Result};
use crate::params::ParamTriple;
use crate::series::{delta_table, necessary_conditions, preschwarzian_series, DeltaTable, Mode, NecessaryConditions, Witness};

/// Parameter ranges in which universal convexity is a theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PaperRoute {
    /// `a < 1`, `a + b >= 1`, `1 + a + b - ab <= c <= 2`.
    I,
    /// `b <= 1`, `c >= 2`.
    II,
    /// `b = 1`, `a <= 1`, `c >= 2`.
    C,
}

/// Ranges that contain `p`, compared exactly on the decimal parameters.
pub fn paper_routes(p: &ParamTriple) -> Vec<PaperRoute> {
    let r = p.rational();
    let one = BigRational::one();
    let two = &one + &one;
    let mut out = Vec::new();
    let lower = &one + &r.a + &r.b - &r.a * &r.b;
    if r.a < one && &r.a + &r.b >= one && lower <= r.c && r.c <= two {
        out.push(PaperRoute::I);
    }
    if r.b <= one && r.c >= two {
        out.push(PaperRoute::II);
    }
    if r.b == one && r.a <= one && r.c >= two {
        out.push(PaperRoute::C);
    }
    out
}

/// Summary of a delta-table scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeltaSummary {
    pub mode: Mode,
    pub depth: usize,
    pub max_k: usize,
    pub entries: usize,
    /// First witnesses in `(k + n, k)` order, at most eight.
    pub witnesses: Vec<Witness>,
    pub witness_count: usize,
    pub indeterminate_count: usize,
    /// Smallest entry `(k, n, value)`.
    pub min_entry: (usize, usize, f64),
    /// True when a float scan was redone in exact arithmetic.
    pub exact_recheck: bool,
}

impl DeltaSummary {
    fn from_table(t: &DeltaTable, exact_recheck: bool) -> Self {
        DeltaSummary {
            mode: t.mode,
            depth: t.max_n,
            max_k: t.max_k,
            entries: t.rows.iter().map(Vec::len).sum(),
            witnesses: t.witnesses.iter().take(8).cloned().collect(),
            witness_count: t.witnesses.len(),
            indeterminate_count: t.indeterminate.len(),
            min_entry: t.min_entry(),
            exact_recheck,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.witness_count == 0 && self.indeterminate_count == 0
    }
}

/// Scans `1 + z f''/(2 f')` for negative forward differences.
///
/// A float scan that finds a candidate witness or an indeterminate entry is
/// repeated in exact arithmetic, so reported witnesses are always exact.
pub fn scan_half_profile(p: &ParamTriple, depth: usize, max_k: usize, mode: Mode) -> Result<DeltaSummary> {
    let s = preschwarzian_series(p, depth, true, mode)?;
    let t = delta_table(&s, max_k);
    if mode == Mode::Float && !t.is_clean() {
        let s = preschwarzian_series(p, depth, true, Mode::Exact)?;
        return Ok(DeltaSummary::from_table(&delta_table(&s, max_k), true));
    }
    Ok(DeltaSummary::from_table(&t, false))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Verdict {
    Falsified { reason: String, witness: Option<Witness> },
    PaperCertified { route: PaperRoute },
    NumericallyConsistent { depth: usize },
    Inconclusive { reason: String },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Falsified { .. } => write!(f, "Falsified"),
            Verdict::PaperCertified { route } => write!(f, "PaperCertified({route:?})"),
            Verdict::NumericallyConsistent { depth } => write!(f, "NumericallyConsistent({depth})"),
            Verdict::Inconclusive { .. } => write!(f, "Inconclusive"),
        }
    }
}

/// Outcome of a universal-convexity certification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertReport {
    pub params: ParamTriple,
    pub paper_routes: Vec<PaperRoute>,
    pub screen: NecessaryConditions,
    pub delta: DeltaSummary,
    pub liu_pego: Option<TCheckReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub liu_pego_error: Option<String>,
    /// `1 - a/2`, the limit of the half profile at `-∞`.
    pub expected_tail_limit: f64,
    /// Delta table clean and the Liu–Pego grid consistent.
    pub numerically_consistent: bool,
    pub verdict: Verdict,
    pub verdict_label: String,
}

/// Certifies (or refutes) universal convexity of `z 2F1(a,b;c;z)`.
///
/// Precedence: exact falsification, then the paper ranges, then the
/// numeric scans.
pub fn certify_universal_convexity(p: &ParamTriple, depth: usize, max_k: usize, grid: &GridSpec, mode: Mode) -> Result<CertReport> {
    if !(p.a > 0.0 && p.is_standard()) {
        return Err(Error::Hypothesis(format!("need 0 < a <= b <= c, got {p}")));
    }
    let routes = paper_routes(p);
    let screen = necessary_conditions(p);
    let delta = scan_half_profile(p, depth, max_k, mode)?;
    let (liu_pego, liu_pego_error) = match check_liu_pego(&half_profile(p), grid) {
        Ok(r) => (Some(r), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let lp_ok = liu_pego.as_ref().is_some_and(TCheckReport::is_consistent);
    let numerically_consistent = delta.is_clean() && lp_ok;
    let exact_witness = if delta.mode == Mode::Exact || delta.exact_recheck { delta.witnesses.first().cloned() } else { None };
    let verdict = if let Some(w) = exact_witness {
        Verdict::Falsified { reason: format!("Δ^{} c_{} < 0", w.k, w.n), witness: Some(w) }
    } else if let Some(f) = screen.first_failure() {
        Verdict::Falsified { reason: format!("necessary condition fails: {f}"), witness: None }
    } else if let Some(&route) = routes.first() {
        Verdict::PaperCertified { route }
    } else if numerically_consistent {
        Verdict::NumericallyConsistent { depth }
    } else {
        let reason = match (&liu_pego, &liu_pego_error) {
            (_, Some(e)) => format!("Liu–Pego grid evaluation failed: {e}"),
            (Some(r), _) if !r.is_consistent() => format!("Liu–Pego grid: {:?}", r.verdict),
            _ => format!("{} indeterminate delta entries", delta.indeterminate_count),
        };
        Verdict::Inconclusive { reason }
    };
    Ok(CertReport {
        params: *p,
        paper_routes: routes,
        screen,
        delta,
        liu_pego,
        liu_pego_error,
        expected_tail_limit: 1.0 - p.a / 2.0,
        numerically_consistent,
        verdict_label: verdict.to_string(),
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: f64, b: f64, c: f64) -> ParamTriple {
        ParamTriple::new(a, b, c).unwrap()
    }

    #[test]
    fn routes() {
        assert_eq!(paper_routes(&pt(0.5, 0.8, 1.9)), vec![PaperRoute::I]);
        assert_eq!(paper_routes(&pt(0.5, 0.9, 2.5)), vec![PaperRoute::II]);
        assert_eq!(paper_routes(&pt(0.7, 1.0, 2.3)), vec![PaperRoute::II, PaperRoute::C]);
        assert!(paper_routes(&pt(1.5, 1.5, 1.5)).is_empty());
    }

    #[test]
    fn falsified_with_first_difference() {
        let r = certify_universal_convexity(&pt(1.5, 1.5, 1.5), 16, 16, &GridSpec::square(8), Mode::Float).unwrap();
        assert_eq!(r.verdict_label, "Falsified");
        match r.verdict {
            Verdict::Falsified { witness: Some(w), .. } => assert_eq!((w.k, w.n), (1, 0)),
            v => panic!("{v:?}"),
        }
    }
}
