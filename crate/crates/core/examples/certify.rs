//! Universal-convexity verdicts for a few parameter triples.

use shifted_hyp::class_t::{certify_universal_convexity, GridSpec};
use shifted_hyp::series::Mode;
use shifted_hyp::ParamTriple;

fn main() -> shifted_hyp::Result<()> {
    let grid = GridSpec::square(32);
    for (a, b, c) in [(0.5, 0.8, 1.9), (0.5, 0.9, 2.5), (0.7, 1.0, 2.3), (1.2, 1.5, 3.0), (1.5, 1.5, 1.5)] {
        let p = ParamTriple::new(a, b, c)?;
        let r = certify_universal_convexity(&p, 30, 30, &grid, Mode::Exact)?;
        println!(
            "({a}, {b}, {c}): {:<22} delta witnesses {}, grid consistent {}",
            r.verdict_label,
            r.delta.witness_count,
            r.liu_pego.as_ref().is_some_and(|l| l.is_consistent())
        );
    }
    Ok(())
}
