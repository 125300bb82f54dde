//! Convergence of hypergeometric ratios at -∞ and at 1⁻.

use shifted_hyp::asymptotics::{default_xs, default_xs_to_one, hg_branch, hg_ratio_limit_probe, phi_probe, preschwarz_limit_probe};
use shifted_hyp::ParamTriple;

fn main() -> shifted_hyp::Result<()> {
    let p = ParamTriple::new(0.5, 0.9, 1.2)?;
    for probe in [phi_probe(&p, &default_xs())?, preschwarz_limit_probe(&p, &default_xs())?] {
        println!("{} -> {:?} at rate {:?}", probe.label, probe.claimed_limit, probe.rate_label);
        for (x, v) in probe.xs.iter().zip(&probe.values) {
            println!("    x = {x:<9e} {v:.10}");
        }
        println!("    slope {:?}, converged {}", probe.observed_slope, probe.converged);
    }
    for c in [3.0, 1.2, 2.4] {
        let q = ParamTriple::new(0.5, 0.9, c)?;
        let probe = hg_ratio_limit_probe(&q, &default_xs_to_one())?;
        println!("H/G for c = {c} ({:?} branch): {:.6} -> {:?}", hg_branch(&q), probe.values.last().unwrap(), probe.claimed_limit);
    }
    Ok(())
}
