use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::params::{rational_to_f64, ParamTriple};

/// The three coefficient inequalities that every universally convex
/// `z 2F1(a,b;c;z)` satisfies, compared exactly on the decimal parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NecessaryConditions {
    pub alpha: f64,
    pub beta: f64,
    /// `0 <= α <= 1`
    pub alpha_in_unit_interval: bool,
    /// `3β <= 1 + 2α`
    pub beta_bound: bool,
    /// `α(2 + 2α - 3β) <= 1`
    pub cubic_bound: bool,
    pub cubic_value: f64,
}

impl NecessaryConditions {
    pub fn all_pass(&self) -> bool {
        self.alpha_in_unit_interval && self.beta_bound && self.cubic_bound
    }

    /// Name of the first failed inequality.
    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.alpha_in_unit_interval {
            Some("0 <= alpha <= 1")
        } else if !self.beta_bound {
            Some("3 beta <= 1 + 2 alpha")
        } else if !self.cubic_bound {
            Some("alpha (2 + 2 alpha - 3 beta) <= 1")
        } else {
            None
        }
    }
}

pub fn necessary_conditions(p: &ParamTriple) -> NecessaryConditions {
    let r = p.rational();
    let alpha = r.alpha();
    let beta = r.beta();
    let one = BigRational::one();
    let two = &one + &one;
    let three = &two + &one;
    let cubic = &alpha * (&two + &two * &alpha - &three * &beta);
    NecessaryConditions {
        alpha: rational_to_f64(&alpha),
        beta: rational_to_f64(&beta),
        alpha_in_unit_interval: alpha >= BigRational::zero() && alpha <= one,
        beta_bound: &three * &beta <= &one + &two * &alpha,
        cubic_bound: cubic <= one,
        cubic_value: rational_to_f64(&cubic),
    }
}
