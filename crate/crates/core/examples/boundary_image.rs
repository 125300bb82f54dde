//! The image of the unit circle, its split into A(1-z)^{-δ} and a bounded
//! remainder, and an SVG figure with the sector of apex B.

use shifted_hyp::cli::svg_figure;
use shifted_hyp::geometry::{asymptotic_residual, boundary_curve, check_sector_theorem};
use shifted_hyp::ParamTriple;

fn main() -> shifted_hyp::Result<()> {
    let p = ParamTriple::new(0.9, 1.2, 2.0)?;
    let curve = boundary_curve(&p, 300, 1e-6)?;
    println!("A = {:.10}, B = {:.10}", curve.a_const, curve.b_const);
    println!("max |gamma2| = {:.6} <= |B|", curve.max_abs_gamma2);
    for t in [1e-2, 1e-4, 1e-6] {
        println!("line residual at theta = {t:e}: {:.3e}", asymptotic_residual(&p, t)?);
    }
    let r = check_sector_theorem(&p, 5000, 1)?;
    println!("kappa = {} ({}), f(D) in apex sector: {}", r.kappa, r.kappa_source, r.violations == 0);

    let path = std::env::temp_dir().join("shifted_hyp_image.svg");
    std::fs::write(&path, svg_figure(&curve)).expect("write svg");
    println!("figure written to {}", path.display());
    Ok(())
}
