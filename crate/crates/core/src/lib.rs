//! Gauss hypergeometric functions on the slit plane and the geometry of the
//! shifted map `f(z) = z 2F1(a, b; c; z)`.

pub mod asymptotics;
pub mod class_t;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod params;
pub mod series;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use params::ParamTriple;
