//! Forward-difference tables of Taylor coefficients, exact and in floating point.

use shifted_hyp::series::{delta_table, preschwarzian_series, ratio_series, Mode};
use shifted_hyp::ParamTriple;

fn main() -> shifted_hyp::Result<()> {
    // the quotient F(a+1,b;c)/F(a,b;c) has totally monotone coefficients
    let s = ratio_series((1.7, 0.4, 2.2), (0.7, 0.4, 2.2), 20, Mode::Exact)?;
    let t = delta_table(&s, 20);
    let (k, n, v) = t.min_entry();
    println!("ratio: {} witnesses, smallest entry Δ^{k} c_{n} = {v:.3e}", t.witnesses.len());

    let p = ParamTriple::new(1.5, 1.5, 1.5)?;
    let half = preschwarzian_series(&p, 12, true, Mode::Exact)?;
    let t = delta_table(&half, 12);
    let w = &t.witnesses[0];
    println!("1 + zf''/(2f') for (1.5,1.5,1.5): first witness Δ^{} c_{} = {}", w.k, w.n, w.exact.as_deref().unwrap_or("?"));

    let f = delta_table(&preschwarzian_series(&p, 12, true, Mode::Float)?, 12);
    println!("float table: {} witnesses, {} indeterminate, threshold {:e}", f.witnesses.len(), f.indeterminate.len(), f.tol);
    Ok(())
}
