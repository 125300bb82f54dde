//! Gamma function and Gauss hypergeometric evaluation on the slit plane.

pub mod gamma;
pub mod hyp2f1;

pub use gamma::{gamma_real, rgamma, sin_pi};
pub use hyp2f1::{
    contiguous_residual, hyp2f1, hyp2f1_at, hyp2f1_at_one, hyp2f1_derivatives, hyp2f1_detailed, preschwarzian,
    shifted_f, shifted_f_derivatives, shifted_g, Evaluation, PreschwarzRoute, Region, SlitPoint,
    Strategy,
};
