use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::ParamTriple;
use crate::specfun::hyp2f1::eval_raw;
use crate::specfun::{preschwarzian, PreschwarzRoute, SlitPoint};

type Evaluator = dyn Fn(Complex64) -> Result<Complex64> + Send + Sync;

/// A labelled analytic function on the slit plane.
#[derive(Clone)]
pub struct AnalyticHandle {
    label: String,
    f: Arc<Evaluator>,
}

impl fmt::Debug for AnalyticHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AnalyticHandle").field("label", &self.label).finish()
    }
}

impl AnalyticHandle {
    pub fn new(label: impl Into<String>, f: impl Fn(Complex64) -> Result<Complex64> + Send + Sync + 'static) -> Self {
        AnalyticHandle { label: label.into(), f: Arc::new(f) }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        (self.f)(z)
    }

    pub fn constant(v: f64) -> Self {
        AnalyticHandle::new(format!("{v}"), move |_| Ok(Complex64::new(v, 0.0)))
    }

    /// `λ self + (1-λ) other`.
    pub fn convex_combination(&self, other: &AnalyticHandle, lambda: f64) -> Self {
        let (f, g) = (self.clone(), other.clone());
        let label = format!("{lambda}*{} + {}*{}", self.label, 1.0 - lambda, other.label);
        AnalyticHandle::new(label, move |z| Ok(f.eval(z)? * lambda + g.eval(z)? * (1.0 - lambda)))
    }
}

/// `z ↦ 1/((1-z) h(z))`.
pub fn t_reciprocal_transform(h: &AnalyticHandle) -> AnalyticHandle {
    let inner = h.clone();
    AnalyticHandle::new(format!("1/((1-z)*{})", h.label()), move |z| {
        let d = (Complex64::new(1.0, 0.0) - z) * inner.eval(z)?;
        if d.norm() == 0.0 || !d.norm().is_finite() {
            return Err(Error::DivisionByZero { z });
        }
        Ok(d.inv())
    })
}

fn gauss_raw(a: f64, b: f64, c: f64, z: Complex64) -> Result<Complex64> {
    Ok(eval_raw(a, b, c, z, None)?.value)
}

fn quotient(z: Complex64, num: Complex64, den: Complex64) -> Result<Complex64> {
    if den.norm() == 0.0 {
        return Err(Error::DivisionByZero { z });
    }
    Ok(num / den)
}

/// `F = 2F1(a,b;c;z)`.
pub fn gauss_f(p: &ParamTriple) -> AnalyticHandle {
    let (a, b, c) = (p.a, p.b, p.c);
    AnalyticHandle::new("F", move |z| gauss_raw(a, b, c, z))
}

/// `G = 2F1(a+1,b;c;z)`.
pub fn gauss_g(p: &ParamTriple) -> AnalyticHandle {
    let (a, b, c) = (p.a, p.b, p.c);
    AnalyticHandle::new("G", move |z| gauss_raw(a + 1.0, b, c, z))
}

/// `H = 2F1(a+1,b+1;c+1;z)`.
pub fn gauss_h(p: &ParamTriple) -> AnalyticHandle {
    let (a, b, c) = (p.a, p.b, p.c);
    AnalyticHandle::new("H", move |z| gauss_raw(a + 1.0, b + 1.0, c + 1.0, z))
}

/// `h = G/F`.
pub fn ratio_h(p: &ParamTriple) -> AnalyticHandle {
    let (a, b, c) = (p.a, p.b, p.c);
    AnalyticHandle::new("h=G/F", move |z| quotient(z, gauss_raw(a + 1.0, b, c, z)?, gauss_raw(a, b, c, z)?))
}

/// `w = H/F`.
pub fn ratio_w(p: &ParamTriple) -> AnalyticHandle {
    let (a, b, c) = (p.a, p.b, p.c);
    AnalyticHandle::new("w=H/F", move |z| {
        quotient(z, gauss_raw(a + 1.0, b + 1.0, c + 1.0, z)?, gauss_raw(a, b, c, z)?)
    })
}

/// `w1 = H/G`.
pub fn ratio_w1(p: &ParamTriple) -> AnalyticHandle {
    let (a, b, c) = (p.a, p.b, p.c);
    AnalyticHandle::new("w1=H/G", move |z| {
        quotient(z, gauss_raw(a + 1.0, b + 1.0, c + 1.0, z)?, gauss_raw(a + 1.0, b, c, z)?)
    })
}

/// `Ψ = 1 + z f''/f'`.
pub fn psi_profile(p: &ParamTriple) -> AnalyticHandle {
    let p = *p;
    AnalyticHandle::new("Psi=1+zf''/f'", move |z| {
        Ok(preschwarzian(&p, &SlitPoint::new(z)?, PreschwarzRoute::Direct)? + 1.0)
    })
}

/// `1 + z f''/(2 f')`.
pub fn half_profile(p: &ParamTriple) -> AnalyticHandle {
    let p = *p;
    AnalyticHandle::new("1+zf''/(2f')", move |z| {
        Ok(preschwarzian(&p, &SlitPoint::new(z)?, PreschwarzRoute::Direct)? * 0.5 + 1.0)
    })
}
