use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SectorKind {
    /// `{|arg z| < φ}`
    S,
    /// `S ∪ (-S)`
    SStar,
    /// ε-neighbourhood of `S`
    SEps,
    /// ε-neighbourhood of `S*`
    SStarEps,
    /// `{|arg(z - B)| < φ}`
    ApexSector,
}

/// A sector of half-opening `φ = πδ/2` symmetric about the real axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SectorSpec {
    pub kind: SectorKind,
    pub delta: f64,
    pub eps: f64,
    pub apex: f64,
    pub phi: f64,
}

/// Membership with the distance to the un-fattened sector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Membership {
    pub inside: bool,
    pub dist: f64,
}

impl SectorSpec {
    fn build(kind: SectorKind, delta: f64, eps: f64, apex: f64) -> Result<Self> {
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::Domain(format!("sector opening delta = {delta} not in (0, 1)")));
        }
        if eps < 0.0 {
            return Err(Error::InvalidArgument(format!("negative fattening eps = {eps}")));
        }
        Ok(SectorSpec { kind, delta, eps, apex, phi: std::f64::consts::PI * delta / 2.0 })
    }

    pub fn s(delta: f64) -> Result<Self> {
        Self::build(SectorKind::S, delta, 0.0, 0.0)
    }

    pub fn s_star(delta: f64) -> Result<Self> {
        Self::build(SectorKind::SStar, delta, 0.0, 0.0)
    }

    pub fn s_eps(delta: f64, eps: f64) -> Result<Self> {
        Self::build(SectorKind::SEps, delta, eps, 0.0)
    }

    pub fn s_star_eps(delta: f64, eps: f64) -> Result<Self> {
        Self::build(SectorKind::SStarEps, delta, eps, 0.0)
    }

    pub fn apex_sector(delta: f64, apex: f64) -> Result<Self> {
        Self::build(SectorKind::ApexSector, delta, 0.0, apex)
    }

    fn is_star(&self) -> bool {
        matches!(self.kind, SectorKind::SStar | SectorKind::SStarEps)
    }

    fn is_fattened(&self) -> bool {
        matches!(self.kind, SectorKind::SEps | SectorKind::SStarEps)
    }
}

/// Distance from `u` to the closed sector `{|arg u| <= φ}` with apex at `0`.
pub(crate) fn distance_to_sector(u: Complex64, phi: f64) -> f64 {
    if u.norm() == 0.0 || u.arg().abs() <= phi {
        return 0.0;
    }
    // nearest boundary ray is the one on the same side of the real axis
    let dir = Complex64::from_polar(1.0, phi.copysign(if u.im == 0.0 { 1.0 } else { u.im }));
    let proj = u * dir.conj();
    if proj.re < 0.0 {
        u.norm()
    } else {
        proj.im.abs()
    }
}

/// Distance from a point `u` inside `{|arg u| <= φ}` to its boundary.
pub(crate) fn depth_in_sector(u: Complex64, phi: f64) -> f64 {
    let t = u.arg().abs();
    if t > phi {
        return 0.0;
    }
    let gap = phi - t;
    if gap >= std::f64::consts::FRAC_PI_2 {
        u.norm()
    } else {
        u.norm() * gap.sin()
    }
}

/// Membership of `z` in `s`, with the distance to the un-fattened sector.
///
/// For the starred kinds the distance is the smaller of the distances of
/// `z` and `-z`. Fattened kinds accept `dist < eps`.
pub fn sector_contains(s: &SectorSpec, z: Complex64) -> Membership {
    let u = z - s.apex;
    let mut dist = distance_to_sector(u, s.phi);
    if s.is_star() {
        dist = dist.min(distance_to_sector(-u, s.phi));
    }
    let inside = match s.kind {
        SectorKind::ApexSector | SectorKind::S | SectorKind::SStar => {
            let strict = |v: Complex64| v.norm() > 0.0 && v.arg().abs() < s.phi;
            let open = strict(u) || (s.is_star() && strict(-u));
            open || (s.kind != SectorKind::ApexSector && u.norm() == 0.0)
        }
        _ => dist < s.eps || (s.is_fattened() && dist == 0.0),
    };
    Membership { inside, dist }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    /// Distance to the two boundary rays by dense sampling.
    fn brute(u: Complex64, phi: f64) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..=200_000 {
            let t = 1e3 * i as f64 / 200_000.0;
            for s in [1.0, -1.0] {
                best = best.min((u - Complex64::from_polar(t, s * phi)).norm());
            }
        }
        best
    }

    #[test]
    fn origin_and_positive_axis() {
        let s = SectorSpec::s_eps(0.4, 0.1).unwrap();
        assert!(sector_contains(&s, Complex64::new(0.0, 0.0)).inside);
        for d in [0.05, 0.5, 0.95] {
            let s = SectorSpec::s(d).unwrap();
            assert!(sector_contains(&s, Complex64::new(3.0, 0.0)).inside);
        }
    }

    #[test]
    fn far_negative_point() {
        let s = SectorSpec::s_eps(0.4, 1.0).unwrap();
        let z = Complex64::new(-50.0, 0.0);
        let m = sector_contains(&s, z);
        assert!(!m.inside);
        assert!((m.dist - 50.0).abs() < 1e-12);
        for z in [Complex64::new(-3.0, 2.0), Complex64::new(1.0, 4.0), Complex64::new(-0.5, -7.0)] {
            let d = sector_contains(&s, z).dist;
            assert!((d - brute(z, s.phi)).abs() < 1e-4, "{z}: {d}");
        }
    }

    #[test]
    fn star_takes_the_closer_branch() {
        let s = SectorSpec::s_star(0.4).unwrap();
        assert!(sector_contains(&s, Complex64::new(-2.0, 0.1)).inside);
        assert!(!sector_contains(&s, Complex64::new(0.0, 1.0)).inside);
    }

    #[test]
    fn conjugation_symmetry() {
        let s = SectorSpec::s_eps(0.3, 0.2).unwrap();
        for z in [Complex64::new(0.1, 0.9), Complex64::new(-1.0, 0.3)] {
            assert_eq!(sector_contains(&s, z), sector_contains(&s, z.conj()));
        }
    }

    #[test]
    fn apex_sector_boundary_is_open() {
        let s = SectorSpec::apex_sector(0.5, -1.0).unwrap();
        assert!(sector_contains(&s, Complex64::new(0.0, 0.0)).inside);
        let edge = Complex64::new(-1.0, 0.0) + Complex64::from_polar(2.0, PI / 4.0);
        let m = sector_contains(&s, edge * Complex64::from_polar(1.0, 1e-9));
        assert!(!m.inside && m.dist < 1e-8);
    }
}
