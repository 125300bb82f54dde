//! The auxiliary functions `M` whose membership in class 𝒯 gives the
//! integral representations of `z f''/f'`.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::handles::{t_reciprocal_transform, AnalyticHandle};
use crate::error::{Error, Result};
use crate::params::ParamTriple;
use crate::specfun::hyp2f1::eval_raw;
use crate::specfun::SlitPoint;

fn gauss(a: f64, b: f64, c: f64, z: Complex64) -> Result<Complex64> {
    Ok(eval_raw(a, b, c, z, None)?.value)
}

/// Hypotheses of the first representation: `0 < a <= b <= c`, `a <= 1` and
/// `(2-c)(c+ab-a-b-1) >= 0`, compared exactly on the decimal parameters.
pub fn check_p31_hypotheses(p: &ParamTriple) -> Result<()> {
    let r = p.rational();
    let zero = BigRational::zero();
    let one = BigRational::one();
    let two = &one + &one;
    if !(r.a > zero && r.a <= r.b && r.b <= r.c && r.a <= one) {
        return Err(Error::Hypothesis(format!("need 0 < a <= b <= c and a <= 1, got {p}")));
    }
    let lhs = (&two - &r.c) * (&r.c + &r.a * &r.b - &r.a - &r.b - &one);
    if lhs < zero {
        return Err(Error::Hypothesis(format!("(2-c)(c+ab-a-b-1) >= 0 fails for {p}")));
    }
    if (&one - &r.a) * (&one - &r.b) == zero {
        return Err(Error::Degenerate(format!(
            "(1-a)(1-b) = 0 for {p}; then f'(z) = (1-z)^(-b) in closed form"
        )));
    }
    Ok(())
}

/// Hypotheses of the second representation: `0 < a <= b <= 1`, `c >= 2`.
pub fn check_p32_hypotheses(p: &ParamTriple) -> Result<()> {
    let r = p.rational();
    let one = BigRational::one();
    if !(r.a > BigRational::zero() && r.a <= r.b && r.b <= one && r.c >= &one + &one) {
        return Err(Error::Hypothesis(format!("need 0 < a <= b <= 1 and c >= 2, got {p}")));
    }
    Ok(())
}

/// `M(z) = (1-a-b+2τ)(1 + τ z w) / ((1-a)(1-b) + (2-c)τ w)`, `w = H/F`.
///
/// `1-a-b+2τ` and `(1-a)(1-b)+(2-c)τ` are equal; the numerator uses the
/// second expression so that `M(0) = 1` holds in floating point.
pub fn m_function_p31(p: &ParamTriple, z: &SlitPoint) -> Result<Complex64> {
    check_p31_hypotheses(p)?;
    Ok(m31_unchecked(p, z.z)?)
}

fn m31_unchecked(p: &ParamTriple, z: Complex64) -> Result<Complex64> {
    let (a, b, c, tau) = (p.a, p.b, p.c, p.tau);
    let w = gauss(a + 1.0, b + 1.0, c + 1.0, z)? / gauss(a, b, c, z)?;
    let k0 = (1.0 - a) * (1.0 - b);
    let k1 = (2.0 - c) * tau;
    let den = w * k1 + k0;
    if den.norm() == 0.0 {
        return Err(Error::DivisionByZero { z });
    }
    Ok((z * w * tau + 1.0) * (k0 + k1) / den)
}

/// `M1(z) = 1 + σ z w1(z)`, `w1 = H/G`.
pub fn m1_p32(p: &ParamTriple, z: Complex64) -> Result<Complex64> {
    let w1 = gauss(p.a + 1.0, p.b + 1.0, p.c + 1.0, z)? / gauss(p.a + 1.0, p.b, p.c, z)?;
    Ok(z * w1 * p.sigma + 1.0)
}

/// `M2(z) = 1 + (b-1) z - σ' z w1(z)`.
pub fn m2_p32(p: &ParamTriple, z: Complex64) -> Result<Complex64> {
    let w1 = gauss(p.a + 1.0, p.b + 1.0, p.c + 1.0, z)? / gauss(p.a + 1.0, p.b, p.c, z)?;
    Ok(z * (p.b - 1.0) - z * w1 * p.sigma_prime + 1.0)
}

/// `M = M1/M2`.
pub fn m_function_p32(p: &ParamTriple, z: &SlitPoint) -> Result<Complex64> {
    check_p32_hypotheses(p)?;
    m32_unchecked(p, z.z)
}

fn m32_unchecked(p: &ParamTriple, z: Complex64) -> Result<Complex64> {
    let w1 = gauss(p.a + 1.0, p.b + 1.0, p.c + 1.0, z)? / gauss(p.a + 1.0, p.b, p.c, z)?;
    let m1 = z * w1 * p.sigma + 1.0;
    let m2 = z * (p.b - 1.0) - z * w1 * p.sigma_prime + 1.0;
    if m2.norm() == 0.0 {
        return Err(Error::DivisionByZero { z });
    }
    Ok(m1 / m2)
}

/// Handle for `M` of the first representation.
pub fn m_p31_handle(p: &ParamTriple) -> Result<AnalyticHandle> {
    check_p31_hypotheses(p)?;
    let p = *p;
    Ok(AnalyticHandle::new("M", move |z| m31_unchecked(&p, z)))
}

/// Handle for `M = M1/M2` of the second representation.
pub fn m_p32_handle(p: &ParamTriple) -> Result<AnalyticHandle> {
    check_p32_hypotheses(p)?;
    let p = *p;
    Ok(AnalyticHandle::new("M=M1/M2", move |z| m32_unchecked(&p, z)))
}

pub fn m1_handle(p: &ParamTriple) -> AnalyticHandle {
    let p = *p;
    AnalyticHandle::new("M1", move |z| m1_p32(&p, z))
}

pub fn m2_handle(p: &ParamTriple) -> AnalyticHandle {
    let p = *p;
    AnalyticHandle::new("M2", move |z| m2_p32(&p, z))
}

/// `Φ1 = 1/((1-z) M)` with `M` from the first representation.
pub fn phi1(p: &ParamTriple) -> Result<AnalyticHandle> {
    let h = t_reciprocal_transform(&m_p31_handle(p)?);
    Ok(AnalyticHandle::new("Phi1", move |z| h.eval(z)))
}

/// `Φ2 = 1/((1-z) M)` with `M = M1/M2`.
pub fn phi2(p: &ParamTriple) -> Result<AnalyticHandle> {
    let h = t_reciprocal_transform(&m_p32_handle(p)?);
    Ok(AnalyticHandle::new("Phi2", move |z| h.eval(z)))
}

/// `Ψ = 1 + (a+b-1) z/(1-z) + (1-a-b+2τ) z Φ1(z)`.
pub fn psi_via_phi1(p: &ParamTriple) -> Result<AnalyticHandle> {
    let phi = phi1(p)?;
    let (s, k) = (p.a + p.b - 1.0, 1.0 - p.a - p.b + 2.0 * p.tau);
    Ok(AnalyticHandle::new("Psi(Phi1)", move |z| {
        Ok(z * s / (Complex64::new(1.0, 0.0) - z) + z * phi.eval(z)? * k + 1.0)
    }))
}

/// `Ψ = 1 - a + a Φ2(z)`.
pub fn psi_via_phi2(p: &ParamTriple) -> Result<AnalyticHandle> {
    let phi = phi2(p)?;
    let a = p.a;
    Ok(AnalyticHandle::new("Psi(Phi2)", move |z| Ok(phi.eval(z)? * a + (1.0 - a))))
}
