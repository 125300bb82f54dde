//! Real gamma function via the Lanczos approximation (g = 7, n = 9).
//!
//! Accuracy budget, measured against a 40-digit reference:
//! - `x` in `[0.5, 20]`: relative error below `5e-15`
//! - `x` in `[20, 170]`: below `1e-13` (the power `t^(x+1/2)` dominates)
//! - `x < 0.5` through reflection: below `1e-13` away from poles, degrading
//!   like `1/|sin(pi x)|` as `x` approaches a negative integer.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::params::is_nonpositive_integer;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest argument whose gamma value is finite in f64.
pub const GAMMA_OVERFLOW: f64 = 171.624_376_956_302_7;

const SQRT_2PI: f64 = 2.506_628_274_631_000_7;

/// `sin(pi x)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    if x == x.floor() {
        return 0.0;
    }
    // reduce to [-1, 1]
    let mut r = x - 2.0 * (x / 2.0).round();
    let mut sign = 1.0;
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    if r < 0.0 {
        r = -r;
        sign = -1.0;
    }
    sign * (PI * r).sin()
}

fn lanczos(x: f64) -> f64 {
    // Γ(x) for x >= 0.5
    let xm1 = x - 1.0;
    let mut sum = LANCZOS_COEF[0];
    for (i, &coef) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum += coef / (xm1 + i as f64);
    }
    let t = xm1 + LANCZOS_G + 0.5;
    let half_pow = t.powf((xm1 + 0.5) / 2.0);
    SQRT_2PI * sum * half_pow * (half_pow * (-t).exp())
}

/// `Γ(x)` for real `x`.
pub fn gamma_real(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::InvalidArgument("gamma of NaN".into()));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { x });
    }
    if x > GAMMA_OVERFLOW {
        return Err(Error::Overflow { x });
    }
    if x == x.floor() && x <= 23.0 {
        let mut f = 1.0;
        let mut k = 2.0;
        while k < x {
            f *= k;
            k += 1.0;
        }
        return Ok(f);
    }
    if x < 0.5 {
        let s = sin_pi(x);
        let g = lanczos(1.0 - x);
        let v = PI / (s * g);
        if !v.is_finite() {
            return Err(Error::Overflow { x });
        }
        return Ok(v);
    }
    Ok(lanczos(x))
}

/// `1/Γ(x)`, which is zero at the poles of `Γ`.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    match gamma_real(x) {
        Ok(g) => 1.0 / g,
        Err(Error::Overflow { .. }) if x > 0.0 => 0.0,
        Err(_) => f64::NAN,
    }
}
