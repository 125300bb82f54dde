use std::fmt::Write as _;
use std::time::Instant;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::render::{json, svg_figure, table, yes};
use super::suite::{run_suite, SuiteReport};
use super::{Output, OutputFormat, RunConfig};
use crate::asymptotics::{
    connection_identity_check, default_xs, default_xs_to_one, hg_branch, hg_ratio_limit_probe, midpoint_grid, phi_probe,
    preschwarz_limit_probe, psi_probe, xw_probe, ConnectionCheck, HgBranch, LimitProbe,
};
use crate::class_t::{certify_universal_convexity, CertReport, GridSpec, Verdict};
use crate::error::{Error, Result};
use crate::geometry::{
    boundary_curve, check_sector_theorem, check_theorem1, kappa_numeric, ConvexityReport, CurveSample, SectorTheoremReport,
    Theorem1Report,
};
use crate::params::ParamTriple;
use crate::series::Mode;
use crate::specfun::{hyp2f1_detailed, preschwarzian, shifted_f, shifted_g, PreschwarzRoute, Region, SlitPoint, Strategy};

fn ms(t: Instant) -> Vec<(String, f64)> {
    vec![("total".into(), t.elapsed().as_secs_f64() * 1e3)]
}

fn cnum(z: Complex64) -> String {
    if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn header(s: &mut String, title: &str, p: &ParamTriple) {
    let _ = writeln!(s, "{title} for (a, b, c) = ({}, {}, {}), delta = {}", p.a, p.b, p.c, p.delta);
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRow {
    pub z: Complex64,
    pub region: Region,
    pub strategy: Strategy,
    pub hyp2f1: Complex64,
    /// `z 2F1(a,b;c;z)`
    pub f: Complex64,
    /// `z 2F1(a,b;c;z²)`, absent when `z²` is on the cut.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub g: Option<Complex64>,
    /// `z f''/f'`, absent where `f'` vanishes.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub preschwarzian: Option<Complex64>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub params: ParamTriple,
    pub rows: Vec<EvalRow>,
}

fn eval_row(p: &ParamTriple, z: Complex64) -> Result<EvalRow> {
    let sp = SlitPoint::new(z)?;
    let ev = hyp2f1_detailed(p, &sp, None)?;
    let mut notes = Vec::new();
    let g = shifted_g(p, z).map_err(|e| notes.push(format!("g: {e}"))).ok();
    let pre = preschwarzian(p, &sp, PreschwarzRoute::Direct).map_err(|e| notes.push(format!("preschwarzian: {e}"))).ok();
    Ok(EvalRow { z, region: sp.region, strategy: ev.strategy, hyp2f1: ev.value, f: shifted_f(p, &sp)?, g, preschwarzian: pre, notes })
}

/// `2F1`, `f`, `g` and `z f''/f'` at each point (the origin when none is given).
pub fn cmd_eval(cfg: &RunConfig) -> Result<Output> {
    let t = Instant::now();
    let p = cfg.params()?;
    let pts = if cfg.points.is_empty() { vec![Complex64::new(0.0, 0.0)] } else { cfg.points.clone() };
    let rows = pts.iter().map(|&z| eval_row(&p, z)).collect::<Result<Vec<_>>>()?;
    let rep = EvalReport { params: p, rows };
    let body = match cfg.format {
        OutputFormat::Json => json(cfg, &rep, true, ms(t)),
        OutputFormat::Csv => {
            let mut s = String::from("re,im,hyp2f1_re,hyp2f1_im,f_re,f_im,g_re,g_im,pre_re,pre_im\n");
            let opt = |v: Option<Complex64>| match v {
                Some(v) => format!("{:.16e},{:.16e}", v.re, v.im),
                None => ",".into(),
            };
            for r in &rep.rows {
                let _ = writeln!(
                    s,
                    "{:.16e},{:.16e},{},{},{},{}",
                    r.z.re,
                    r.z.im,
                    opt(Some(r.hyp2f1)),
                    opt(Some(r.f)),
                    opt(r.g),
                    opt(r.preschwarzian)
                );
            }
            s
        }
        _ => {
            let mut s = String::new();
            header(&mut s, "2F1", &p);
            for r in &rep.rows {
                let _ = writeln!(s, "z = {}  [{:?}, {:?}]", cnum(r.z), r.region, r.strategy);
                let _ = writeln!(s, "  2F1            = {}", cnum(r.hyp2f1));
                let _ = writeln!(s, "  f(z)           = {}", cnum(r.f));
                if let Some(g) = r.g {
                    let _ = writeln!(s, "  g(z)           = {}", cnum(g));
                }
                if let Some(q) = r.preschwarzian {
                    let _ = writeln!(s, "  z f''/f'       = {}", cnum(q));
                }
                for n in &r.notes {
                    let _ = writeln!(s, "  note: {n}");
                }
            }
            s
        }
    };
    Ok(Output { body, pass: true })
}

/// Closed-form and numeric order of convexity.
pub fn cmd_kappa(cfg: &RunConfig) -> Result<Output> {
    let t = Instant::now();
    let p = cfg.params()?;
    let rep: ConvexityReport = kappa_numeric(&p, &cfg.radii, cfg.n_theta)?;
    let body = if cfg.format == OutputFormat::Json {
        json(cfg, &rep, rep.consistent, ms(t))
    } else {
        let mut s = String::new();
        header(&mut s, "Order of convexity", &p);
        match rep.kappa_closed {
            Some(k) => {
                let _ = writeln!(s, "closed form      {k}");
            }
            None => s.push_str("closed form      not applicable\n"),
        }
        let _ = writeln!(s, "numeric          {}", rep.kappa_numeric);
        let _ = writeln!(s, "argmin (r, th)   ({}, {})", rep.argmin.0, rep.argmin.1);
        if let Some(b) = rep.boundary_estimate {
            let _ = writeln!(s, "boundary         {b}");
        }
        let _ = writeln!(s, "radius extrap.   {}", rep.radius_extrapolation);
        let rows: Vec<Vec<String>> =
            rep.radii_trace.iter().map(|m| vec![m.r.to_string(), format!("{:.10}", m.min), format!("{:.6e}", m.theta)]).collect();
        s.push_str(&table(&["r", "min Re Psi - 1", "theta"], &rows));
        let _ = writeln!(s, "tolerance {}  consistent {}", rep.tolerance, yes(rep.consistent));
        s
    };
    Ok(Output { body, pass: rep.consistent })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectorReport {
    pub theorem1: Theorem1Report,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub apex_sector: Option<SectorTheoremReport>,
    /// Why the apex-sector check did not run.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub apex_sector_skipped: Option<String>,
}

/// Fattened sector containment, plus the apex sector when `κ >= 0`.
pub fn cmd_sector(cfg: &RunConfig) -> Result<Output> {
    let t = Instant::now();
    let p = cfg.params()?;
    let theorem1 = check_theorem1(&p, cfg.samples, cfg.seed)?;
    let (apex_sector, apex_sector_skipped) = match check_sector_theorem(&p, cfg.samples, cfg.seed) {
        Ok(r) => (Some(r), None),
        Err(Error::Hypothesis(m)) => (None, Some(m)),
        Err(e) => return Err(e),
    };
    let pass = theorem1.pass && apex_sector.as_ref().map_or(true, |r| r.pass);
    let rep = SectorReport { theorem1, apex_sector, apex_sector_skipped };
    let body = if cfg.format == OutputFormat::Json {
        json(cfg, &rep, pass, ms(t))
    } else {
        let r = &rep.theorem1;
        let mut s = String::new();
        header(&mut s, "Sector containment", &p);
        let _ = writeln!(s, "samples {}  seed {}  eps {}", r.n_samples, r.seed, r.eps);
        let _ = writeln!(s, "f in S_eps:   violations {}  max dist {:.3e}  max dist/eps {:.4}", r.f_violations, r.max_dist_f, r.max_ratio_f);
        let _ = writeln!(s, "g in S*_eps:  violations {}  max dist {:.3e}  max dist/eps {:.4}", r.g_violations, r.max_dist_g, r.max_ratio_g);
        let _ = writeln!(s, "max |f - A(1-z)^-delta| - eps  {:.3e}", r.max_decomposition_excess);
        for w in &r.witnesses {
            let _ = writeln!(s, "  witness {} at z = {}: value {}, dist {:.3e}", w.map, cnum(w.z), cnum(w.value), w.dist);
        }
        match (&rep.apex_sector, &rep.apex_sector_skipped) {
            (Some(a), _) => {
                let _ = writeln!(s, "apex sector: kappa {} ({}), B = {}, violations {}", a.kappa, a.kappa_source, a.apex, a.violations);
                let _ = writeln!(s, "  min depth {:.3e}", a.min_boundary_distance);
                let rows: Vec<Vec<String>> = a.residuals.iter().map(|(th, r)| vec![format!("{th:.3e}"), format!("{r:.6e}")]).collect();
                s.push_str(&table(&["theta", "line residual"], &rows));
                let _ = writeln!(s, "  pass {}", yes(a.pass));
            }
            (None, Some(m)) => {
                let _ = writeln!(s, "apex sector: skipped ({m})");
            }
            _ => {}
        }
        let _ = writeln!(s, "pass {}", yes(pass));
        s
    };
    Ok(Output { body, pass })
}

/// Universal-convexity certification.
///
/// The run fails when a parameter range with a theorem behind it is
/// contradicted by the numeric scans.
pub fn cmd_certify(cfg: &RunConfig) -> Result<Output> {
    let t = Instant::now();
    let p = cfg.params()?;
    let mode = if cfg.exact { Mode::Exact } else { Mode::Float };
    let rep: CertReport = certify_universal_convexity(&p, cfg.depth, cfg.max_k, &GridSpec::square(cfg.grid), mode)?;
    let contradicted = !rep.paper_routes.is_empty() && (matches!(rep.verdict, Verdict::Falsified { .. }) || !rep.numerically_consistent);
    let pass = !contradicted;
    let body = if cfg.format == OutputFormat::Json {
        json(cfg, &rep, pass, ms(t))
    } else {
        let mut s = String::new();
        header(&mut s, "Certification", &p);
        let _ = writeln!(s, "verdict                 {}", rep.verdict_label);
        match &rep.verdict {
            Verdict::Falsified { reason, witness } => {
                let _ = writeln!(s, "reason                  {reason}");
                if let Some(w) = witness {
                    let _ = writeln!(s, "witness                 k = {}, n = {}, value {}", w.k, w.n, w.exact.clone().unwrap_or(w.value.to_string()));
                }
            }
            Verdict::Inconclusive { reason } => {
                let _ = writeln!(s, "reason                  {reason}");
            }
            _ => {}
        }
        let _ = writeln!(s, "theorem ranges          {:?}", rep.paper_routes);
        let _ = writeln!(s, "necessary conditions    {}", rep.screen.first_failure().unwrap_or("all hold"));
        let d = &rep.delta;
        let _ = writeln!(
            s,
            "delta table             {:?}, k+n <= {}, k <= {}, {} entries, {} witnesses, {} indeterminate{}",
            d.mode,
            d.depth,
            d.max_k,
            d.entries,
            d.witness_count,
            d.indeterminate_count,
            if d.exact_recheck { ", rechecked exactly" } else { "" }
        );
        let _ = writeln!(s, "smallest entry          Δ^{} c_{} = {:e}", d.min_entry.0, d.min_entry.1, d.min_entry.2);
        match (&rep.liu_pego, &rep.liu_pego_error) {
            (Some(l), _) => {
                let _ = writeln!(
                    s,
                    "class-T grid            {:?} (i {} ii {} iii {} iv {}), tail -> {:.6} (expected {})",
                    l.verdict,
                    yes(l.cond_i.pass),
                    yes(l.cond_ii.pass),
                    yes(l.cond_iii.pass),
                    yes(l.cond_iv.pass),
                    l.cond_iv.limit_estimate,
                    rep.expected_tail_limit
                );
            }
            (_, Some(e)) => {
                let _ = writeln!(s, "class-T grid            failed: {e}");
            }
            _ => {}
        }
        let _ = writeln!(s, "numerically consistent  {}", yes(rep.numerically_consistent));
        s
    };
    Ok(Output { body, pass })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImageReport {
    pub curve: CurveSample,
    /// `πδ/2`
    pub phi: f64,
    /// Slope `tan(πδ/2)` of the asymptotic line through `B`.
    pub slope: f64,
}

/// The image of the unit circle as CSV, SVG, JSON or a text summary.
pub fn cmd_image(cfg: &RunConfig) -> Result<Output> {
    let t = Instant::now();
    let p = cfg.params()?;
    let curve = boundary_curve(&p, cfg.n_theta, cfg.theta_min)?;
    let phi = std::f64::consts::FRAC_PI_2 * p.delta;
    let tol = 1e-8 * (1.0 + curve.b_const.abs());
    let pass = curve.max_decomposition_residual <= 1e-8 && curve.max_abs_gamma2 <= curve.b_const.abs() + tol;
    let body = match cfg.format {
        OutputFormat::Csv => curve.to_csv(),
        OutputFormat::Svg => svg_figure(&curve),
        OutputFormat::Json => json(cfg, &ImageReport { curve: curve.clone(), phi, slope: phi.tan() }, pass, ms(t)),
        OutputFormat::Text => {
            let mut s = String::new();
            header(&mut s, "Image of the unit circle", &p);
            let _ = writeln!(s, "points {}  theta in [{}, pi]", curve.len(), cfg.theta_min);
            let _ = writeln!(s, "A = {}  B = {}  slope tan(pi delta/2) = {}", curve.a_const, curve.b_const, phi.tan());
            let _ = writeln!(s, "max |gamma - gamma1 - gamma2|/|gamma|  {:.3e}", curve.max_decomposition_residual);
            let _ = writeln!(s, "max |gamma2|                          {:.6}  (|B| = {:.6})", curve.max_abs_gamma2, curve.b_const.abs());
            s
        }
    };
    Ok(Output { body, pass })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Skipped {
    pub probe: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymReport {
    pub params: ParamTriple,
    pub probes: Vec<LimitProbe>,
    pub hg_branch: HgBranch,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub connection: Option<ConnectionCheck>,
    pub skipped: Vec<Skipped>,
}

/// Convergence tables for every limit probe that applies.
pub fn cmd_asym(cfg: &RunConfig) -> Result<Output> {
    let t = Instant::now();
    let p = cfg.params()?;
    if !(p.a > 0.0 && p.is_standard()) {
        return Err(Error::Hypothesis(format!("need 0 < a <= b <= c, got {p}")));
    }
    let xs = default_xs();
    let mut probes = Vec::new();
    let mut skipped = Vec::new();
    let mut keep = |name: &str, r: Result<Vec<LimitProbe>>| -> Result<()> {
        match r {
            Ok(v) => probes.extend(v),
            Err(e @ (Error::Hypothesis(_) | Error::UnsupportedParams(_))) => {
                skipped.push(Skipped { probe: name.into(), reason: e.to_string() })
            }
            Err(e) => return Err(e),
        }
        Ok(())
    };
    keep("phi", phi_probe(&p, &xs).map(|v| vec![v]))?;
    keep("psi", psi_probe(&p, &xs).map(|(a, b)| vec![a, b]))?;
    keep("x*w(-x)", xw_probe(&p, &xs).map(|v| vec![v]))?;
    keep("x f''/f'", preschwarz_limit_probe(&p, &xs).map(|v| vec![v]))?;
    keep("H/G", hg_ratio_limit_probe(&p, &default_xs_to_one()).map(|v| vec![v]))?;
    let connection = match connection_identity_check(&p, &midpoint_grid(10, 2.0)) {
        Ok(c) => Some(c),
        Err(e @ (Error::UnsupportedParams(_) | Error::Pole { .. })) => {
            skipped.push(Skipped { probe: "connection".into(), reason: e.to_string() });
            None
        }
        Err(e) => return Err(e),
    };
    let pass = probes.iter().all(|q| q.converged) && connection.as_ref().map_or(true, |c| c.max_residual <= 1e-8);
    let rep = AsymReport { params: p, probes, hg_branch: hg_branch(&p), connection, skipped };
    let body = if cfg.format == OutputFormat::Json {
        json(cfg, &rep, pass, ms(t))
    } else {
        let mut s = String::new();
        header(&mut s, "Limit probes", &p);
        for q in &rep.probes {
            let _ = writeln!(s, "{}  limit {:?}  rate {:?}", q.label, q.claimed_limit, q.rate_label);
            let rows: Vec<Vec<String>> = q
                .xs
                .iter()
                .zip(&q.values)
                .map(|(x, v)| vec![format!("{x}"), format!("{v:.12e}")])
                .collect();
            s.push_str(&table(&["x", "value"], &rows));
            let _ = writeln!(
                s,
                "  final error {:?}  slope {:?}  contiguous {:.2e}  converged {}",
                q.final_error,
                q.observed_slope,
                q.contiguous_max,
                yes(q.converged)
            );
        }
        let _ = writeln!(s, "H/G branch {:?}", rep.hg_branch);
        if let Some(c) = &rep.connection {
            let _ = writeln!(s, "connection formula: max residual {:.3e} at {}", c.max_residual, cnum(c.worst_z));
        }
        for k in &rep.skipped {
            let _ = writeln!(s, "skipped {}: {}", k.probe, k.reason);
        }
        let _ = writeln!(s, "pass {}", yes(pass));
        s
    };
    Ok(Output { body, pass })
}

/// Text lines, one per criterion, followed by the failing checks.
pub fn suite_text(rep: &SuiteReport) -> String {
    let mut s = String::new();
    for c in &rep.criteria {
        let _ = writeln!(s, "AC{:02} {} {}", c.id, if c.pass { "PASS" } else { "FAIL" }, c.title);
        for k in &c.checks {
            let _ = writeln!(s, "     [{}] {}: {}", if k.pass { "ok" } else { "FAIL" }, k.name, k.detail);
        }
    }
    let _ = writeln!(s, "suite {}", if rep.pass { "PASS" } else { "FAIL" });
    s
}

/// Runs the acceptance suite; the exit status is 0 only if every check passes.
pub fn cmd_suite(cfg: &RunConfig) -> Result<Output> {
    let (rep, times) = run_suite(cfg.seed);
    Ok(render_suite(cfg, &rep, &times))
}

/// Renders a suite report produced by [`run_suite`].
pub fn render_suite(cfg: &RunConfig, rep: &SuiteReport, times: &[std::time::Duration]) -> Output {
    let body = if cfg.format == OutputFormat::Json {
        let timing = rep.criteria.iter().zip(times).map(|(c, d)| (format!("AC{:02}", c.id), d.as_secs_f64() * 1e3)).collect();
        json(cfg, rep, rep.pass, timing)
    } else {
        suite_text(rep)
    };
    Output { body, pass: rep.pass }
}
