//! Sign of the Taylor coefficients of F(z) - A(1-z)^{-δ}, and the rate at
//! which their partial sums reach B.

use shifted_hyp::geometry::sigma_series;
use shifted_hyp::ParamTriple;

fn main() -> shifted_hyp::Result<()> {
    for (a, b, c) in [(0.5, 1.2, 1.0), (0.5, 0.9, 1.0)] {
        let p = ParamTriple::new(a, b, c)?;
        let s = sigma_series(&p, 201, 100_000)?;
        println!("({a}, {b}, {c}): A = {:.10}, B = {:.10}, signs {:?}", s.a_const, s.b_const, s.exact_pattern);
        for (n, sn) in &s.partial_sums {
            println!("    S_{n:<6} = {sn:.10}   |S_N - B| = {:.3e}", (sn - s.b_const).abs());
        }
        println!("    slope {:.4} (delta - 1 = {:.4})", s.tail_slope.unwrap_or(f64::NAN), p.delta - 1.0);
    }
    Ok(())
}
