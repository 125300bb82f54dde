//! 2F1 at points in every region of the slit plane, with the method used.

use shifted_hyp::specfun::{hyp2f1_at_one, hyp2f1_derivatives, hyp2f1_detailed, preschwarzian, PreschwarzRoute, SlitPoint};
use shifted_hyp::{Complex64, ParamTriple};

fn main() -> shifted_hyp::Result<()> {
    let p = ParamTriple::new(0.5, 0.9, 1.9)?;
    let points = [
        Complex64::new(0.3, 0.4),
        Complex64::new(-3.0, 0.0),
        Complex64::new(0.9, 0.05),
        Complex64::new(4.0, 1.0),
        Complex64::new(1.0, 1.0),
    ];
    println!("F = 2F1(0.5, 0.9; 1.9; z)");
    for z in points {
        let sp = SlitPoint::new(z)?;
        let ev = hyp2f1_detailed(&p, &sp, None)?;
        let d1 = hyp2f1_derivatives(&p, &sp, 1)?;
        println!("z = {z:>12}  {:?} via {:?}: F = {:.15}, F' = {:.12}", sp.region, ev.strategy, ev.value, d1);
    }
    println!("F(1) = {:.15} (Gauss summation)", hyp2f1_at_one(&p)?);

    let z = SlitPoint::new(Complex64::new(0.3, 0.4))?;
    let direct = preschwarzian(&p, &z, PreschwarzRoute::Direct)?;
    let via_w = preschwarzian(&p, &z, PreschwarzRoute::EqW)?;
    println!("z f''/f' at 0.3+0.4i: {direct:.15} (direct), {via_w:.15} (contiguous ratio)");
    Ok(())
}
