//! Images of the disk under f(z) = zF(z) and g(z) = zF(z²) against the
//! fattened sectors S_eps(δ) and S*_eps(δ).

use shifted_hyp::geometry::{check_theorem1, epsilon_of, sector_contains, SectorSpec};
use shifted_hyp::{Complex64, ParamTriple};

fn main() -> shifted_hyp::Result<()> {
    let p = ParamTriple::new(0.5, 0.9, 1.0)?;
    let eps = epsilon_of(&p)?;
    println!("delta = {}, eps = {eps:.12}", p.delta);

    let s = SectorSpec::s_eps(p.delta, eps)?;
    for w in [Complex64::new(5.0, 1.0), Complex64::new(-1.0, 3.0), Complex64::new(-5.0, 0.0)] {
        let m = sector_contains(&s, w);
        println!("  {w} in S_eps: {} (distance to S {:.4})", m.inside, m.dist);
    }

    let r = check_theorem1(&p, 20_000, 7)?;
    println!(
        "{} samples: {} + {} violations, largest dist/eps {:.3} (f) {:.3} (g)",
        r.n_samples, r.f_violations, r.g_violations, r.max_ratio_f, r.max_ratio_g
    );
    Ok(())
}
