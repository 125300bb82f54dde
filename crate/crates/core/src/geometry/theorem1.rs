use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sampling::disk_samples;
use super::sector::{distance_to_sector, sector_contains, SectorSpec};
use crate::error::{Error, Result};
use crate::params::ParamTriple;
use crate::specfun::hyp2f1::eval_raw;

/// `0 < a + b - c < 1`, compared exactly on the decimal parameters.
pub(crate) fn require_unit_delta(p: &ParamTriple) -> Result<()> {
    let d = p.rational().delta();
    if d > BigRational::zero() && d < BigRational::one() {
        Ok(())
    } else {
        Err(Error::Domain(format!("need 0 < a+b-c < 1, got delta = {} for {p}", p.delta)))
    }
}

/// `ε = |B| + 2^{1-δ} A`, with `ε = 2^{1-δ}` when `c = a` or `c = b`.
pub fn epsilon_of(p: &ParamTriple) -> Result<f64> {
    require_unit_delta(p)?;
    let two_pow = (1.0 - p.delta).exp2();
    if p.c == p.a || p.c == p.b {
        return Ok(two_pow);
    }
    let (a_const, b_const) = p.connection_constants()?;
    Ok(b_const.abs() + two_pow * a_const)
}

/// A sample whose image left the fattened sector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectorWitness {
    pub map: String,
    pub z: Complex64,
    pub value: Complex64,
    pub dist: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub params: ParamTriple,
    pub eps: f64,
    pub n_samples: usize,
    pub seed: u64,
    pub slack: String,
    pub f_violations: usize,
    pub g_violations: usize,
    /// Up to eight violating samples.
    pub witnesses: Vec<SectorWitness>,
    /// Largest distance of `f(z)` to `S(δ)`, and the same divided by `ε`.
    pub max_dist_f: f64,
    pub max_ratio_f: f64,
    /// Largest distance of `g(z)` to `S*(δ)`.
    pub max_dist_g: f64,
    pub max_ratio_g: f64,
    /// Largest `|f(z) - A(1-z)^{-δ}| - ε`; never positive when the
    /// decomposition bound holds.
    pub max_decomposition_excess: f64,
    /// Largest distance of `A(1-z)^{-δ}` to `S(δ)`.
    pub max_leading_dist: f64,
    pub pass: bool,
}

struct SampleOutcome {
    z: Complex64,
    f: Complex64,
    g: Complex64,
    df: f64,
    dg: f64,
    excess: f64,
    lead_dist: f64,
}

/// Samples `f(z) ∈ S_ε(δ)` and `g(z) ∈ S*_ε(δ)` on `n_samples` points of the
/// unit disk, with slack `1e-8 (1 + |value|)`.
pub fn check_theorem1(p: &ParamTriple, n_samples: usize, seed: u64) -> Result<Theorem1Report> {
    require_unit_delta(p)?;
    if n_samples == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    let eps = epsilon_of(p)?;
    let (a_const, _) = p.connection_constants()?;
    let s_eps = SectorSpec::s_eps(p.delta, eps)?;
    let s_star_eps = SectorSpec::s_star_eps(p.delta, eps)?;
    let phi = s_eps.phi;
    let pts = disk_samples(n_samples, seed);
    let one = Complex64::new(1.0, 0.0);
    let outcomes: Vec<Result<SampleOutcome>> = pts
        .par_iter()
        .map(|&z| {
            let fz = z * eval_raw(p.a, p.b, p.c, z, None).map_err(|e| e.at(z))?.value;
            let gz = z * eval_raw(p.a, p.b, p.c, z * z, None).map_err(|e| e.at(z))?.value;
            let lead = (one - z).powf(-p.delta) * a_const;
            Ok(SampleOutcome {
                z,
                f: fz,
                g: gz,
                df: sector_contains(&s_eps, fz).dist,
                dg: sector_contains(&s_star_eps, gz).dist,
                excess: (fz - lead).norm() - eps,
                lead_dist: distance_to_sector(lead, phi),
            })
        })
        .collect();
    let mut rep = Theorem1Report {
        params: *p,
        eps,
        n_samples: pts.len(),
        seed,
        slack: "1e-8*(1+|value|)".into(),
        f_violations: 0,
        g_violations: 0,
        witnesses: Vec::new(),
        max_dist_f: 0.0,
        max_ratio_f: 0.0,
        max_dist_g: 0.0,
        max_ratio_g: 0.0,
        max_decomposition_excess: f64::NEG_INFINITY,
        max_leading_dist: 0.0,
        pass: true,
    };
    for o in outcomes {
        let o = o?;
        rep.max_dist_f = rep.max_dist_f.max(o.df);
        rep.max_dist_g = rep.max_dist_g.max(o.dg);
        rep.max_decomposition_excess = rep.max_decomposition_excess.max(o.excess);
        rep.max_leading_dist = rep.max_leading_dist.max(o.lead_dist);
        for (map, v, d, count) in [("f", o.f, o.df, &mut rep.f_violations), ("g", o.g, o.dg, &mut rep.g_violations)] {
            if d >= eps + 1e-8 * (1.0 + v.norm()) {
                *count += 1;
                if rep.witnesses.len() < 8 {
                    rep.witnesses.push(SectorWitness { map: map.into(), z: o.z, value: v, dist: d });
                }
            }
        }
    }
    rep.max_ratio_f = rep.max_dist_f / eps;
    rep.max_ratio_g = rep.max_dist_g / eps;
    rep.pass = rep.f_violations == 0 && rep.g_violations == 0;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma::gamma_real;

    #[test]
    fn epsilon_values() {
        let p = ParamTriple::new(0.4, 1.0, 1.0).unwrap();
        assert!((epsilon_of(&p).unwrap() - 0.6f64.exp2()).abs() < 1e-15);
        let q = ParamTriple::new(0.5, 0.9, 1.0).unwrap();
        let g = |x| gamma_real(x).unwrap();
        let want = (g(-0.4) / (g(0.5) * g(0.1))).abs() + 0.6f64.exp2() * g(0.4) / (g(0.5) * g(0.9));
        assert!((epsilon_of(&q).unwrap() - want).abs() < 1e-13 * want);
        // mpmath
        assert!((epsilon_of(&q).unwrap() - 1.995_831_371_806_356_5).abs() < 1e-12);
    }

    #[test]
    fn epsilon_domain() {
        for (a, b, c) in [(0.5, 0.5, 1.0), (1.0, 1.0, 1.0), (0.5, 0.9, 0.4)] {
            let p = ParamTriple::new(a, b, c).unwrap();
            assert!(matches!(epsilon_of(&p), Err(Error::Domain(_))), "{p}");
        }
    }

    #[test]
    fn epsilon_is_continuous() {
        let p = ParamTriple::new(0.5, 0.9, 1.0).unwrap();
        let e0 = epsilon_of(&p).unwrap();
        for h in [1e-7, -1e-7] {
            let q = ParamTriple::new(0.5 + h, 0.9, 1.0 - h).unwrap();
            assert!((epsilon_of(&q).unwrap() - e0).abs() < 1e-5);
        }
    }

    #[test]
    fn small_run_passes() {
        let p = ParamTriple::new(0.5, 0.9, 1.0).unwrap();
        let r = check_theorem1(&p, 500, 3).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(r.max_decomposition_excess <= 1e-8);
        assert!(r.max_leading_dist == 0.0);
    }
}
