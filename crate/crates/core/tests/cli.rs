use std::process::{Command, Output};

use serde::de::DeserializeOwned;
use serde::Serialize;
use shifted_hyp::class_t::{CertReport, Verdict};
use shifted_hyp::cli::{AsymReport, Envelope, EvalReport, ImageReport, SectorReport, SCHEMA};
use shifted_hyp::geometry::ConvexityReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shifted-hyp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Parses a JSON report and checks that it serializes back to the same bytes.
fn round_trip<T: Serialize + DeserializeOwned>(args: &[&str]) -> Envelope<T> {
    let o = run(args);
    let text = stdout(&o);
    let env: Envelope<T> = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"));
    let mut again = serde_json::to_string_pretty(&env).unwrap();
    again.push('\n');
    assert_eq!(again, text, "{args:?} does not round-trip");
    assert_eq!(env.schema, SCHEMA);
    assert_eq!(env.tool_version, env!("CARGO_PKG_VERSION"));
    env
}

const P1: [&str; 6] = ["--a", "0.5", "--b", "0.8", "--c", "1.9"];

fn with<'a>(cmd: &'a str, p: &[&'a str], extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![cmd];
    v.extend_from_slice(p);
    v.extend_from_slice(extra);
    v
}

#[test]
fn certify_paper_range() {
    let o = run(&with("certify", &P1, &["--exact"]));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict                 PaperCertified(I)"));
}

#[test]
fn certify_falsified_json() {
    let env: Envelope<CertReport> = round_trip(&["certify", "--a", "1.5", "--b", "1.5", "--c", "1.5", "--format", "json", "--grid", "16"]);
    assert_eq!(env.report.verdict_label, "Falsified");
    match env.report.verdict {
        Verdict::Falsified { witness: Some(w), .. } => assert_eq!((w.k, w.n), (1, 0)),
        v => panic!("{v:?}"),
    }
    assert!(env.pass);
    assert!(env.timing_ms.is_none());
}

#[test]
fn eval_at_origin() {
    let env: Envelope<EvalReport> = round_trip(&["eval", "--a", "2.3", "--b", "-0.7", "--c", "4.1", "--format", "json"]);
    assert_eq!(env.report.rows.len(), 1);
    assert_eq!(env.report.rows[0].hyp2f1.re, 1.0);
    assert_eq!(env.report.rows[0].hyp2f1.im, 0.0);
    let env: Envelope<EvalReport> =
        round_trip(&with("eval", &P1, &["--z", "0.3+0.4i", "--z", "-2-0.5i", "--z", "0.9", "--format", "json"]));
    assert_eq!(env.report.rows.len(), 3);
    let csv = stdout(&run(&with("eval", &P1, &["--z", "0.3+0.4i", "--format", "csv"])));
    assert!(csv.starts_with("re,im,hyp2f1_re,hyp2f1_im,f_re,f_im,g_re,g_im,pre_re,pre_im\n"));
    assert_eq!(csv.lines().count(), 2);
}

#[test]
fn kappa_sector_asym_round_trip() {
    let k: Envelope<ConvexityReport> =
        round_trip(&["kappa", "--a", "0.9", "--b", "1.2", "--c", "2.0", "--n-theta", "512", "--format", "json"]);
    assert!((k.report.kappa_closed.unwrap() - 0.25).abs() < 1e-12);
    assert!(k.pass);
    let s: Envelope<SectorReport> =
        round_trip(&["sector", "--a", "0.9", "--b", "1.2", "--c", "2.0", "--samples", "300", "--format", "json"]);
    assert!(s.pass && s.report.apex_sector.is_some());
    let s: Envelope<SectorReport> =
        round_trip(&["sector", "--a", "0.5", "--b", "0.9", "--c", "1.0", "--samples", "300", "--format", "json"]);
    assert!(s.report.theorem1.pass);
    let a: Envelope<AsymReport> = round_trip(&["asym", "--a", "0.5", "--b", "0.9", "--c", "1.2", "--format", "json"]);
    assert!(a.report.probes.iter().any(|p| p.label == "x*w(-x)"));
    assert!(a.report.connection.is_some());
}

#[test]
fn image_outputs() {
    let args = ["image", "--a", "0.9", "--b", "1.2", "--c", "2.0", "--n-theta", "50"];
    let csv = run(&args);
    assert_eq!(csv.status.code(), Some(0));
    let text = stdout(&csv);
    assert!(text.starts_with("theta,x,y,x1,y1,x2,y2\n"));
    assert_eq!(text.lines().count(), 51);
    assert!(!text.contains('\r'));
    let svg = stdout(&run(&[&args[..], &["--format", "svg"]].concat()));
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert!(svg.contains("stroke-dasharray"));
    let env: Envelope<ImageReport> = round_trip(&[&args[..], &["--format", "json"]].concat());
    assert_eq!(env.report.curve.len(), 50);
}

#[test]
fn identical_configs_give_identical_bytes() {
    for args in [
        vec!["sector", "--a", "0.5", "--b", "0.9", "--c", "1.0", "--samples", "500", "--seed", "9", "--format", "json"],
        vec!["image", "--a", "0.5", "--b", "0.9", "--c", "1.0", "--n-theta", "80"],
        vec!["certify", "--a", "0.7", "--b", "1", "--c", "2.3", "--grid", "12", "--format", "json"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
    let a = run(&["sector", "--a", "0.5", "--b", "0.9", "--c", "1.0", "--samples", "200", "--seed", "1", "--format", "json"]);
    let b = run(&["sector", "--a", "0.5", "--b", "0.9", "--c", "1.0", "--samples", "200", "--seed", "2", "--format", "json"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn timing_is_opt_in() {
    let o = run(&with("certify", &P1, &["--grid", "8", "--format", "json", "--timing"]));
    let env: Envelope<CertReport> = serde_json::from_slice(&o.stdout).unwrap();
    assert!(env.timing_ms.is_some());
    assert!(env.config.timing);
}

#[test]
fn invalid_input_exits_2() {
    for (args, needle) in [
        (vec!["sector", "--a", "0.5", "--b", "0.5", "--c", "1.2"], "0 < a+b-c < 1"),
        (vec!["kappa", "--a", "0.5", "--b", "0.5"], "--a, --b and --c"),
        (vec!["eval", "--a", "1", "--b", "1", "--c", "-3"], "non-positive integer"),
        (vec!["eval", "--a", "1", "--b", "1", "--c", "2", "--z", "2"], "branch cut"),
        (vec!["certify", "--a", "-1", "--b", "1", "--c", "2"], "0 < a <= b <= c"),
        (vec!["kappa", "--a", "1", "--b", "1", "--c", "2", "--format", "csv"], "--format"),
        (vec!["nonsense"], "invalid value"),
    ] {
        let o = run(&args);
        let err = String::from_utf8_lossy(&o.stderr);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {err}");
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("shifted-hyp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("curve.csv");
    let o = run(&["image", "--a", "0.9", "--b", "1.2", "--c", "2.0", "--n-theta", "20", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.starts_with("theta,x,y"));
    std::fs::remove_dir_all(&dir).unwrap();
}
