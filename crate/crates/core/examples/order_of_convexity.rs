//! Closed-form order of convexity against the numeric infimum of Re(1 + z f''/f').

use shifted_hyp::geometry::{kappa_closed_form, kappa_numeric, DEFAULT_RADII};
use shifted_hyp::ParamTriple;

fn main() -> shifted_hyp::Result<()> {
    for (a, b, c) in [(0.9, 1.2, 2.0), (0.5, 1.2, 1.69), (0.5, 0.8, 1.2)] {
        let p = ParamTriple::new(a, b, c)?;
        let r = kappa_numeric(&p, &DEFAULT_RADII, 2048)?;
        let closed = kappa_closed_form(&p).map(|k| format!("{k:.6}")).unwrap_or_else(|e| format!("n/a ({e})"));
        println!("({a}, {b}, {c}): closed {closed}, numeric {:.6}", r.kappa_numeric);
        for m in &r.radii_trace {
            println!("    r = {:<7} min = {:.8}", m.r, m.min);
        }
    }
    Ok(())
}
