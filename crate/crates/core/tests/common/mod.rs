//! Shared samplers for the integration suites: reproducible random label
//! sextuples and edge lengths with the non-degeneracy margins the float
//! tolerances need.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sixj_core::geometry::{classify, gram_matrix, EdgeLengths, TetClass};
use sixj_core::labels::LabelSextuple;
use sixj_core::numeric::big_rational_to_f64;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Relative Gram determinant `det / max_entry³`; scale-free flatness gauge.
pub fn relative_det(lengths: &EdgeLengths) -> f64 {
    let det = big_rational_to_f64(&gram_matrix(lengths).det());
    let lmax = lengths
        .to_f64()
        .iter()
        .fold(0.0f64, |m, &x| m.max(x.abs()));
    det / lmax.powi(6).max(f64::MIN_POSITIVE)
}

/// `count` admissible sextuples with labels in `0..=max`, rejection-sampled.
pub fn random_admissible(seed: u64, max: u32, count: usize) -> Vec<LabelSextuple> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let l = LabelSextuple(std::array::from_fn(|_| rng.gen_range(0..=max)));
        if l.is_admissible() {
            out.push(l);
        }
    }
    out
}

/// Admissible, safely Euclidean sextuples: relative Gram determinant at
/// least `margin` so f64 angle computations stay far from degeneracy.
pub fn random_euclidean_labels(
    seed: u64,
    max: u32,
    margin: f64,
    count: usize,
) -> Vec<LabelSextuple> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let l = LabelSextuple(std::array::from_fn(|_| rng.gen_range(1..=max)));
        if !l.is_admissible() {
            continue;
        }
        let lengths = EdgeLengths::from_labels(&l).expect("admissible faces");
        if classify(&lengths) == TetClass::Euclidean && relative_det(&lengths) >= margin {
            out.push(l);
        }
    }
    out
}

/// Random rational edge lengths with valid faces (any class).
pub fn random_valid_lengths(seed: u64, count: usize) -> Vec<EdgeLengths> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: [BigRational; 6] = std::array::from_fn(|_| {
            BigRational::new(
                BigInt::from(rng.gen_range(1..=30i64)),
                BigInt::from(rng.gen_range(1..=4i64)),
            )
        });
        if let Ok(lengths) = EdgeLengths::new(v) {
            out.push(lengths);
        }
    }
    out
}

/// Random Euclidean rational edge lengths with a flatness margin.
pub fn random_euclidean_lengths(seed: u64, margin: f64, count: usize) -> Vec<EdgeLengths> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: [BigRational; 6] = std::array::from_fn(|_| {
            BigRational::new(
                BigInt::from(rng.gen_range(2..=24i64)),
                BigInt::from(rng.gen_range(1..=3i64)),
            )
        });
        if let Ok(lengths) = EdgeLengths::new(v) {
            if classify(&lengths) == TetClass::Euclidean && relative_det(&lengths) >= margin {
                out.push(lengths);
            }
        }
    }
    out
}

/// A random direction of unit Euclidean norm in length space.
pub fn random_unit_direction(rng: &mut ChaCha8Rng) -> [f64; 6] {
    loop {
        let v: [f64; 6] = std::array::from_fn(|_| rng.gen_range(-1.0..=1.0));
        let n: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 0.1 {
            return v.map(|x| x / n);
        }
    }
}
