//! Sampled class-T conditions for hypergeometric ratios and M-functions.

use shifted_hyp::class_t::{check_liu_pego, m_p31_handle, m_p32_handle, ratio_w, t_reciprocal_transform, GridSpec};
use shifted_hyp::ParamTriple;

fn main() -> shifted_hyp::Result<()> {
    let grid = GridSpec::default();
    let p = ParamTriple::new(0.6, 1.4, 2.1)?;
    let w = ratio_w(&p);
    for h in [w.clone(), t_reciprocal_transform(&w)] {
        let r = check_liu_pego(&h, &grid)?;
        println!("{:<24} {:?}, min scaled Im {:.3e}", r.label, r.verdict, r.cond_iii.min_scaled_im);
    }
    for (p, h) in [
        (ParamTriple::new(0.5, 0.8, 1.9)?, m_p31_handle(&ParamTriple::new(0.5, 0.8, 1.9)?)?),
        (ParamTriple::new(0.5, 0.9, 2.5)?, m_p32_handle(&ParamTriple::new(0.5, 0.9, 2.5)?)?),
    ] {
        let r = check_liu_pego(&h, &grid)?;
        println!("{:<10} for {p}: Im >= 0 on grid {}, tail {:?}", r.label, r.cond_iii.pass, r.cond_iv.values);
    }
    Ok(())
}
