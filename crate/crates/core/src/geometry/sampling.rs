use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

/// Radius of the boundary ring.
pub const RING_RADIUS: f64 = 1.0 - 1e-4;

fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut out = 0.0;
    while i > 0 {
        out += f * (i % base) as f64;
        i /= base;
        f *= inv;
    }
    out
}

/// `n` points of the open unit disk: a shifted Halton set mapped with
/// `r = sqrt(u)` for the interior, and one fifth of the budget on the ring
/// `|z| = 1 - 1e-4`. The same `(n, seed)` always yields the same points.
pub fn disk_samples(n: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (s1, s2, s3): (f64, f64, f64) = (rng.gen(), rng.gen(), rng.gen());
    let n_ring = n / 5;
    let n_inner = n - n_ring;
    let mut out = Vec::with_capacity(n);
    for i in 0..n_inner as u64 {
        let u = (radical_inverse(i + 1, 2) + s1).fract();
        let v = (radical_inverse(i + 1, 3) + s2).fract();
        out.push(Complex64::from_polar(u.sqrt(), TAU * v));
    }
    for j in 0..n_ring {
        out.push(Complex64::from_polar(RING_RADIUS, TAU * (j as f64 + s3) / n_ring as f64));
    }
    out
}
