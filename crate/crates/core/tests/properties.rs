//! Property tests of the module invariants.

mod common;

use num_traits::{Signed, Zero};
use proptest::prelude::*;
use sixj_core::asymptotics::{pr_theorem_estimate, series_sample};
use sixj_core::geometry::{
    cayley_menger_det, classify, embed, exterior_dihedral_angles, gram_matrix, volume,
    EdgeLengths, TetClass,
};
use sixj_core::labels::LabelSextuple;
use sixj_core::numeric::big_rational_to_f64;
use sixj_core::recoupling::sixj_exact;
use sixj_core::regge::tetrahedral_relabelings;
use sixj_core::{scale_labels, BigRational};

fn admissible_up_to_8() -> Vec<LabelSextuple> {
    let mut out = Vec::new();
    for a in 0..=8u32 {
        for b in 0..=8u32 {
            for c in 0..=8u32 {
                for d in 0..=8u32 {
                    for e in 0..=8u32 {
                        for f in 0..=8u32 {
                            let l = LabelSextuple::new(a, b, c, d, e, f);
                            if l.is_admissible() {
                                out.push(l);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn any_admissible() -> impl Strategy<Value = LabelSextuple> {
    prop::sample::select(admissible_up_to_8())
}

fn any_sextuple() -> impl Strategy<Value = LabelSextuple> {
    prop::array::uniform6(0..=8u32).prop_map(LabelSextuple)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The 6j-symbol is invariant under all 24 tetrahedral relabelings,
    /// exactly, sign and radicand alike.
    #[test]
    fn sixj_is_s4_invariant(labels in any_admissible()) {
        let base = sixj_exact(&labels);
        for p in tetrahedral_relabelings() {
            let relabeled = LabelSextuple(std::array::from_fn(|i| labels.0[p[i]]));
            let v = sixj_exact(&relabeled);
            prop_assert_eq!(v.sign, base.sign);
            prop_assert_eq!(v.radicand, base.radicand.clone());
        }
    }

    /// Inadmissible sextuples evaluate to the exact zero value; an
    /// admissible sextuple has sign 0 only when its tetrahedral net
    /// vanishes exactly (the accidental zeros).
    #[test]
    fn zero_extension(labels in any_sextuple()) {
        let v = sixj_exact(&labels);
        if !labels.is_admissible() {
            prop_assert_eq!(v.sign, 0);
            prop_assert!(v.radicand.is_zero());
        } else if v.sign == 0 {
            prop_assert!(v.tet.is_zero());
            prop_assert!(v.thetas.iter().all(|t| !t.is_zero()));
        }
    }

    /// radicand · |θ₁θ₂θ₃θ₄| = tet², exactly.
    #[test]
    fn radicand_identity(labels in any_admissible()) {
        let v = sixj_exact(&labels);
        let thetas: BigRational = v.thetas.iter().map(|t| t.abs()).product();
        prop_assert!(!thetas.is_zero());
        prop_assert_eq!(v.radicand * thetas, &v.tet * &v.tet);
    }

    /// Scaling by 1 is the identity on values.
    #[test]
    fn scale_one_idempotent(labels in any_sextuple()) {
        let v = sixj_exact(&scale_labels(&labels, 1));
        prop_assert_eq!(v, sixj_exact(&labels));
    }

    /// Gram and Cayley–Menger determinants agree in sign on every valid
    /// input, by exact comparison.
    #[test]
    fn gram_and_cayley_menger_sign_agree(labels in any_sextuple()) {
        if let Ok(lengths) = EdgeLengths::from_labels(&labels) {
            let g = gram_matrix(&lengths).det();
            let cm = cayley_menger_det(&lengths);
            prop_assert_eq!(g.is_zero(), cm.is_zero());
            prop_assert_eq!(g.is_positive(), cm.is_positive());
        }
    }
}

#[test]
fn homogeneity_and_angle_range() {
    for labels in common::random_euclidean_labels(11, 12, 1e-4, 40) {
        let lengths = EdgeLengths::from_labels(&labels).unwrap();
        let v1 = volume(&lengths).unwrap();
        let a1 = exterior_dihedral_angles(&lengths).unwrap();
        for th in a1 {
            assert!(th > 0.0 && th < std::f64::consts::PI);
        }
        for k in [2u32, 3, 7] {
            let scaled = EdgeLengths::from_labels(&scale_labels(&labels, k)).unwrap();
            let vk = volume(&scaled).unwrap();
            assert!((vk - f64::from(k).powi(3) * v1).abs() <= 1e-12 * vk);
            let ak = exterior_dihedral_angles(&scaled).unwrap();
            for i in 0..6 {
                assert!((ak[i] - a1[i]).abs() <= 1e-12 * a1[i]);
            }
        }
    }
}

#[test]
fn embedding_round_trip_on_random_euclidean() {
    for lengths in common::random_euclidean_lengths(17, 1e-4, 60) {
        let [a, c, e] = embed(&lengths).unwrap();
        let lf = lengths.to_f64();
        let add = |x: [f64; 3], y: [f64; 3]| [x[0] + y[0], x[1] + y[1], x[2] + y[2]];
        let sub = |x: [f64; 3], y: [f64; 3]| [x[0] - y[0], x[1] - y[1], x[2] - y[2]];
        let norm = |x: [f64; 3]| (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
        let got = [
            norm(a),
            norm(add(a, c)),
            norm(c),
            norm(sub(c, e)),
            norm(e),
            norm(add(a, e)),
        ];
        for i in 0..6 {
            assert!(
                (got[i] - lf[i]).abs() <= 1e-12 * lf[i],
                "slot {}: {} vs {}",
                i,
                got[i],
                lf[i]
            );
        }
    }
}

/// Consistency of the two estimate variants: the phase mismatch
/// `Σ(ka+1)(θ′ₐ − θₐ)` between shifted and unshifted angles stays bounded
/// and shrinks with k, so the two cosines stay coherent instead of drifting
/// apart.
fn phase_mismatch(labels: &LabelSextuple, k: u32) -> f64 {
    let base = EdgeLengths::from_labels(labels).unwrap();
    let theta = exterior_dihedral_angles(&base).unwrap();
    let shifted =
        EdgeLengths::from_integers(labels.0.map(|x| u64::from(k) * u64::from(x) + 1)).unwrap();
    let theta_shift = exterior_dihedral_angles(&shifted).unwrap();
    let mut mismatch = 0.0;
    for i in 0..6 {
        mismatch += (f64::from(k) * f64::from(labels.0[i]) + 1.0) * (theta_shift[i] - theta[i]);
    }
    (mismatch + std::f64::consts::PI).rem_euclid(2.0 * std::f64::consts::PI)
        - std::f64::consts::PI
}

#[test]
fn phase_coherence_of_shifted_angles() {
    // the regular family is a fixed shape under shifting: mismatch is zero
    // up to float noise
    let regular = LabelSextuple::new(2, 2, 2, 2, 2, 2);
    for k in (10..=100u32).step_by(10) {
        assert!(phase_mismatch(&regular, k).abs() < 1e-9, "k={}", k);
    }

    // a non-regular Euclidean family: the mismatch is genuinely nonzero at
    // small k, stays bounded, and trends to zero like 1/k
    let skew = LabelSextuple::new(4, 6, 8, 10, 8, 6);
    let values: Vec<f64> = (10..=100u32)
        .step_by(10)
        .map(|k| phase_mismatch(&skew, k).abs())
        .collect();
    assert!(values.iter().all(|m| *m < 0.5), "mismatches {:?}", values);
    let head: f64 = values[..3].iter().sum();
    let tail: f64 = values[values.len() - 3..].iter().sum();
    assert!(
        tail < head,
        "phase mismatch should shrink: head {:?} tail {:?}",
        &values[..3],
        &values[values.len() - 3..]
    );
}

/// The theorem estimate is a symmetric function of the edge/angle pairs:
/// exact relabeling invariance as a float.
#[test]
fn estimate_relabeling_invariance_on_random_labels() {
    for labels in common::random_euclidean_labels(23, 10, 1e-4, 10) {
        let base = pr_theorem_estimate(&labels, 9).unwrap();
        for p in tetrahedral_relabelings() {
            let relabeled = LabelSextuple(std::array::from_fn(|i| labels.0[p[i]]));
            let v = pr_theorem_estimate(&relabeled, 9).unwrap();
            assert!((v - base).abs() <= 1e-12 * base.abs().max(1e-300));
        }
    }
}

/// Series rows are self-consistent and absent instead of wrong.
#[test]
fn series_sample_consistency() {
    let flat = LabelSextuple::new(4, 3, 5, 4, 3, 5);
    let row = series_sample(&flat, 4);
    assert!(row.pr_theorem.is_none());
    assert!(row.pr_original.is_some());

    let mink = LabelSextuple::new(10, 6, 6, 10, 6, 6);
    let row = series_sample(&mink, 4);
    assert!(row.pr_theorem.is_none() && row.pr_original.is_none());
    assert!(row.abs_err_theorem.is_none() && row.abs_err_original.is_none());
}

/// 288·V² equals the Cayley–Menger determinant on Euclidean rationals.
#[test]
fn cayley_menger_volume_identity() {
    for lengths in common::random_euclidean_lengths(31, 1e-6, 50) {
        let v = volume(&lengths).unwrap();
        let cm = big_rational_to_f64(&cayley_menger_det(&lengths));
        assert!(
            (288.0 * v * v - cm).abs() <= 1e-10 * cm,
            "{} vs {}",
            288.0 * v * v,
            cm
        );
        assert_eq!(classify(&lengths), TetClass::Euclidean);
    }
}
