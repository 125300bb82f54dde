//! Sector domains, order of convexity and the image of the unit circle.
mod curve;
mod kappa;
mod sampling;
mod sector;
mod sigma;
mod theorem1;

pub use curve::{asymptotic_residual, boundary_curve, check_sector_theorem, theta_grid, CurveSample, SectorTheoremReport};
pub use kappa::{kappa_closed_form, kappa_numeric, ConvexityReport, RadiusMin, DEFAULT_RADII};
pub use sampling::{disk_samples, RING_RADIUS};
pub use sector::{sector_contains, Membership, SectorKind, SectorSpec};
pub use sigma::{sigma_series, SigmaSeries, SignPattern};
pub use theorem1::{check_theorem1, epsilon_of, SectorWitness, Theorem1Report};
