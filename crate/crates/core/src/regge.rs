//! The Regge symmetry of 6j-symbols and its geometric consequences.
//!
//! Fixing an opposite pair, say `(a, d)`, and letting `s` be half the sum of
//! the other four labels, the Regge transformation reflects those four about
//! their mean:
//!
//! ```text
//! (a, b, c, d, e, f) ↦ (a, s−b, s−c, d, s−e, s−f),   s = (b+c+e+f)/2
//! ```
//!
//! The three such involutions generate an order-6 group; together with the
//! 24 face-preserving relabelings they close into a group of 144 symmetries
//! of the 6j-symbol, isomorphic to S₄ × S₃. On the geometric side the orbit
//! of a generic Euclidean sextuple splits into twelve congruence classes of
//! tetrahedra sharing volume, Dehn invariant and the Hadwiger measure μ₁;
//! here the Dehn invariance is certified by checking that the exterior
//! dihedral angles transport under the same reflection-about-mean map as the
//! lengths, which is the numerically decidable surrogate.

use std::collections::BTreeSet;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::geometry::{
    classify, exterior_dihedral_angles, hadwiger_measures, volume, EdgeLengths, TetClass,
};
use crate::labels::{LabelSextuple, FACES, OPPOSITE_PAIRS};
use crate::recoupling::sixj_exact;
use crate::value::ExactValue;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReggeError {
    #[error("the four moving labels have odd sum; the reflection is half-integral")]
    HalfIntegerResult,
    #[error("the reflection produces a negative label on this raw input")]
    NegativeResult,
    #[error("labelling ({0}) is not admissible")]
    Inadmissible(LabelSextuple),
    #[error("tetrahedron is {0:?}, not Euclidean")]
    NotEuclidean(TetClass),
}

/// One of the three opposite edge pairs fixed by a Regge involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReggePair {
    AD,
    BE,
    CF,
}

impl ReggePair {
    pub const ALL: [ReggePair; 3] = [ReggePair::AD, ReggePair::BE, ReggePair::CF];

    /// Slot indices of the fixed pair.
    pub fn fixed_slots(self) -> [usize; 2] {
        match self {
            ReggePair::AD => OPPOSITE_PAIRS[0],
            ReggePair::BE => OPPOSITE_PAIRS[1],
            ReggePair::CF => OPPOSITE_PAIRS[2],
        }
    }

    /// Slot indices of the four reflected labels.
    pub fn moving_slots(self) -> [usize; 4] {
        let fixed = self.fixed_slots();
        let mut out = [0; 4];
        let mut n = 0;
        for slot in 0..6 {
            if !fixed.contains(&slot) {
                out[n] = slot;
                n += 1;
            }
        }
        out
    }
}

/// Apply one Regge involution: the fixed pair is untouched and each other
/// label is reflected about the mean of the moving four. An involution.
pub fn regge_transform(
    labels: &LabelSextuple,
    pair: ReggePair,
) -> Result<LabelSextuple, ReggeError> {
    let moving = pair.moving_slots();
    let sum: u32 = moving.iter().map(|&m| labels.0[m]).sum();
    if sum % 2 != 0 {
        return Err(ReggeError::HalfIntegerResult);
    }
    let s = sum / 2;
    let mut out = labels.0;
    for &m in &moving {
        if labels.0[m] > s {
            return Err(ReggeError::NegativeResult);
        }
        out[m] = s - labels.0[m];
    }
    Ok(LabelSextuple(out))
}

/// An element of the 144-element symmetry group, as an exact rational linear
/// map on label sextuples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReggeElement {
    matrix: [[Rational64; 6]; 6],
}

impl ReggeElement {
    pub fn identity() -> Self {
        let mut m = [[Rational64::zero(); 6]; 6];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Rational64::one();
        }
        ReggeElement { matrix: m }
    }

    /// Permutation matrix for a relabeling `new[i] = old[p[i]]`.
    pub fn from_permutation(p: &[usize; 6]) -> Self {
        let mut m = [[Rational64::zero(); 6]; 6];
        for (i, row) in m.iter_mut().enumerate() {
            row[p[i]] = Rational64::one();
        }
        ReggeElement { matrix: m }
    }

    /// The Regge involution fixing `pair`.
    pub fn involution(pair: ReggePair) -> Self {
        let mut m = [[Rational64::zero(); 6]; 6];
        let fixed = pair.fixed_slots();
        let moving = pair.moving_slots();
        for &i in &fixed {
            m[i][i] = Rational64::one();
        }
        let half = Rational64::new(1, 2);
        for &i in &moving {
            for &j in &moving {
                m[i][j] = if i == j { -half } else { half };
            }
        }
        ReggeElement { matrix: m }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &ReggeElement) -> ReggeElement {
        let mut m = [[Rational64::zero(); 6]; 6];
        for i in 0..6 {
            for j in 0..6 {
                let mut acc = Rational64::zero();
                for (k, other_row) in other.matrix.iter().enumerate() {
                    acc += self.matrix[i][k] * other_row[j];
                }
                m[i][j] = acc;
            }
        }
        ReggeElement { matrix: m }
    }

    /// Act on a sextuple. Admissible input always maps to natural numbers;
    /// raw input may fracture or go negative.
    pub fn apply(&self, labels: &LabelSextuple) -> Result<LabelSextuple, ReggeError> {
        let mut out = [0u32; 6];
        for (i, row) in self.matrix.iter().enumerate() {
            let mut acc = Rational64::zero();
            for (j, entry) in row.iter().enumerate() {
                acc += entry * Rational64::from_integer(labels.0[j] as i64);
            }
            if !acc.is_integer() {
                return Err(ReggeError::HalfIntegerResult);
            }
            if acc.is_negative() {
                return Err(ReggeError::NegativeResult);
            }
            out[i] = acc.to_integer() as u32;
        }
        Ok(LabelSextuple(out))
    }
}

/// All 24 edge-slot permutations preserving the face structure, found by
/// filtering the full symmetric group rather than by hand-coding.
pub fn tetrahedral_relabelings() -> Vec<[usize; 6]> {
    use itertools::Itertools;
    let face_sets: Vec<BTreeSet<usize>> = FACES
        .iter()
        .map(|f| f.iter().copied().collect())
        .collect();
    let mut out = Vec::new();
    for perm in (0..6).permutations(6) {
        let p: [usize; 6] = perm.try_into().unwrap();
        let preserves = FACES.iter().all(|face| {
            let image: BTreeSet<usize> = face.iter().map(|&i| p[i]).collect();
            face_sets.contains(&image)
        });
        if preserves {
            out.push(p);
        }
    }
    out
}

/// The full symmetry group: closure of the 24 relabelings and the three
/// Regge involutions under composition. Exactly 144 elements.
pub fn symmetry_group() -> Vec<ReggeElement> {
    let mut generators: Vec<ReggeElement> = tetrahedral_relabelings()
        .iter()
        .map(ReggeElement::from_permutation)
        .collect();
    generators.extend(ReggePair::ALL.map(ReggeElement::involution));
    close_under_composition(&generators)
}

fn close_under_composition(generators: &[ReggeElement]) -> Vec<ReggeElement> {
    let mut seen: BTreeSet<ReggeElement> = generators.iter().cloned().collect();
    seen.insert(ReggeElement::identity());
    let mut frontier: Vec<ReggeElement> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for el in &frontier {
            for g in generators {
                let prod = el.compose(g);
                if seen.insert(prod.clone()) {
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

/// Closure of the three Regge involutions alone. As raw transformations this
/// has 24 elements — e.g. `(R_ad∘R_be)³` is the relabeling swapping `a↔d` —
/// but it covers exactly six cosets of the relabeling subgroup, which is the
/// order-6 `S₃` factor the involutions generate modulo relabelings.
pub fn regge_involution_closure() -> Vec<ReggeElement> {
    close_under_composition(&ReggePair::ALL.map(ReggeElement::involution))
}

/// Number of relabeling cosets covered by a set of elements: the order of
/// its image in the quotient of the full group by the 24 relabelings.
pub fn relabeling_coset_count(elements: &[ReggeElement]) -> usize {
    let perms: Vec<ReggeElement> = tetrahedral_relabelings()
        .iter()
        .map(ReggeElement::from_permutation)
        .collect();
    let cosets: BTreeSet<ReggeElement> = elements
        .iter()
        .map(|el| perms.iter().map(|p| p.compose(el)).min().expect("24 perms"))
        .collect();
    cosets.len()
}

/// The twelve relabelings induced by orientation-reversing (mirror) vertex
/// permutations. A sextuple fixed by none of them labels a chiral
/// tetrahedron, whose mirror image is scissors-congruent but not congruent.
pub fn mirror_relabelings() -> Vec<[usize; 6]> {
    use itertools::Itertools;
    // vertex pairs of the six edge slots, as in the geometry module
    const EDGE_V: [[usize; 2]; 6] = [[0, 1], [0, 2], [1, 2], [2, 3], [1, 3], [0, 3]];
    let edge_index = |set: BTreeSet<usize>| -> usize {
        EDGE_V
            .iter()
            .position(|ev| ev.iter().copied().collect::<BTreeSet<_>>() == set)
            .expect("edge set")
    };
    let mut out = Vec::new();
    for sigma in (0..4).permutations(4) {
        let mut slot_map = [0usize; 6];
        for (j, ev) in EDGE_V.iter().enumerate() {
            slot_map[j] = edge_index(ev.iter().map(|&v| sigma[v]).collect());
        }
        let inversions = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .filter(|&(i, j)| sigma[i] > sigma[j])
            .count();
        if inversions % 2 == 1 {
            out.push(slot_map);
        }
    }
    out
}

/// True iff no mirror relabeling fixes the sextuple: its two embeddings in
/// 3-space are genuinely non-congruent tetrahedra.
pub fn is_chiral(labels: &LabelSextuple) -> bool {
    mirror_relabelings()
        .iter()
        .all(|p| LabelSextuple(std::array::from_fn(|i| labels.0[p[i]])) != *labels)
}

/// Lexicographic minimum of the sextuple over the 24 relabelings: the
/// canonical representative of its congruence class. Edge lengths cannot
/// distinguish mirror images, so reflections are included.
pub fn canonical_form(labels: &LabelSextuple) -> LabelSextuple {
    tetrahedral_relabelings()
        .iter()
        .map(|p| LabelSextuple(std::array::from_fn(|i| labels.0[p[i]])))
        .min()
        .expect("24 relabelings")
}

/// One label class of the orbit, with its geometry when Euclidean.
#[derive(Clone, Debug)]
pub struct OrbitClass {
    pub canonical: LabelSextuple,
    pub class: TetClass,
    pub volume: Option<f64>,
    pub mu1: Option<f64>,
    pub total_edge_length: u32,
    pub sorted_angles: Option<[f64; 6]>,
    /// Chiral shapes stand for a pair of mirror tetrahedra that share the
    /// labels but are not congruent to each other.
    pub chiral: bool,
}

/// Orbit of a sextuple under the 144-element group, decomposed into classes
/// canonical under the 24 relabelings, with the exact 6j value they share.
///
/// The group has 144 elements and the relabelings 24, so an orbit has at
/// most 144/24 = 6 label classes; generic sextuples reach that bound.
/// Counting congruence classes of tetrahedra doubles every chiral class
/// (edge lengths cannot tell a tetrahedron from its mirror image), so a
/// generic Euclidean orbit carries twelve mutually scissors-congruent,
/// pairwise non-congruent tetrahedra.
#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub classes: Vec<OrbitClass>,
    pub sixj: ExactValue,
}

impl OrbitReport {
    /// Congruence classes of tetrahedra in the orbit: chiral label classes
    /// count twice, mirror-symmetric ones once.
    pub fn congruence_class_count(&self) -> usize {
        self.classes
            .iter()
            .map(|c| if c.chiral { 2 } else { 1 })
            .sum()
    }
}

pub fn orbit_congruence_classes(labels: &LabelSextuple) -> Result<OrbitReport, ReggeError> {
    if !labels.is_admissible() {
        return Err(ReggeError::Inadmissible(*labels));
    }
    let mut canonicals = BTreeSet::new();
    for el in symmetry_group() {
        let image = el.apply(labels)?;
        canonicals.insert(canonical_form(&image));
    }
    let classes = canonicals
        .into_iter()
        .map(|canonical| {
            let lengths = EdgeLengths::from_labels(&canonical).expect("admissible faces");
            let class = classify(&lengths);
            let sorted_angles = exterior_dihedral_angles(&lengths).ok().map(|mut a| {
                a.sort_by(f64::total_cmp);
                a
            });
            OrbitClass {
                chiral: is_chiral(&canonical),
                canonical,
                class,
                volume: volume(&lengths).ok(),
                mu1: hadwiger_measures(&lengths).ok().map(|h| h.mu1),
                total_edge_length: canonical.total(),
                sorted_angles,
            }
        })
        .collect();
    Ok(OrbitReport {
        classes,
        sixj: sixj_exact(labels),
    })
}

/// One row of the invariance table: a congruence class and the quantities
/// the Regge symmetry is supposed to preserve (plus μ₂, which it is not).
#[derive(Clone, Debug)]
pub struct InvarianceRow {
    pub labels: LabelSextuple,
    pub volume: f64,
    pub mu1: f64,
    pub mu2: f64,
    pub total_edge_length: u32,
    pub sixj: ExactValue,
}

#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub rows: Vec<InvarianceRow>,
    /// Max relative spread of volume and μ₁ across classes.
    pub volume_spread: f64,
    pub mu1_spread: f64,
    /// μ₂ spread is reported but not required to vanish.
    pub mu2_spread: f64,
    pub total_edge_length_constant: bool,
    pub sixj_constant: bool,
}

impl InvarianceReport {
    /// The Regge invariance contract: volume and μ₁ constant to 1e-9
    /// relative, total edge length and the exact 6j value constant exactly.
    pub fn passes(&self) -> bool {
        self.volume_spread <= 1e-9
            && self.mu1_spread <= 1e-9
            && self.total_edge_length_constant
            && self.sixj_constant
    }
}

fn relative_spread(values: &[f64]) -> f64 {
    let max = values.iter().cloned().fold(f64::MIN, f64::max);
    let min = values.iter().cloned().fold(f64::MAX, f64::min);
    let scale = max.abs().max(min.abs()).max(f64::MIN_POSITIVE);
    (max - min) / scale
}

pub fn invariance_report(labels: &LabelSextuple) -> Result<InvarianceReport, ReggeError> {
    if !labels.is_admissible() {
        return Err(ReggeError::Inadmissible(*labels));
    }
    let base_lengths = EdgeLengths::from_labels(labels).expect("admissible faces");
    if classify(&base_lengths) != TetClass::Euclidean {
        return Err(ReggeError::NotEuclidean(classify(&base_lengths)));
    }
    let orbit = orbit_congruence_classes(labels)?;
    let mut rows = Vec::with_capacity(orbit.classes.len());
    for class in &orbit.classes {
        let lengths = EdgeLengths::from_labels(&class.canonical).expect("admissible faces");
        if classify(&lengths) != TetClass::Euclidean {
            return Err(ReggeError::NotEuclidean(classify(&lengths)));
        }
        let h = hadwiger_measures(&lengths).expect("euclidean");
        rows.push(InvarianceRow {
            labels: class.canonical,
            volume: h.mu3,
            mu1: h.mu1,
            mu2: h.mu2,
            total_edge_length: class.total_edge_length,
            sixj: sixj_exact(&class.canonical),
        });
    }
    let volumes: Vec<f64> = rows.iter().map(|r| r.volume).collect();
    let mu1s: Vec<f64> = rows.iter().map(|r| r.mu1).collect();
    let mu2s: Vec<f64> = rows.iter().map(|r| r.mu2).collect();
    let report = InvarianceReport {
        volume_spread: relative_spread(&volumes),
        mu1_spread: relative_spread(&mu1s),
        mu2_spread: relative_spread(&mu2s),
        total_edge_length_constant: rows
            .iter()
            .all(|r| r.total_edge_length == rows[0].total_edge_length),
        sixj_constant: rows
            .iter()
            .all(|r| r.sixj.sign == rows[0].sixj.sign && r.sixj.radicand == rows[0].sixj.radicand),
        rows,
    };
    Ok(report)
}

/// Residuals of the dihedral-angle transport law under one Regge involution.
///
/// With σ half the sum of the four moving angles of the original
/// tetrahedron, the transformed angles must satisfy `θ′ = θ` on the fixed
/// pair and `θ′ = σ − θ` on the moving slots. This is the computable
/// surrogate for equality of Dehn invariants.
#[derive(Clone, Debug)]
pub struct AngleTransport {
    pub residuals: [f64; 6],
    pub tolerance: f64,
}

impl AngleTransport {
    pub fn passes(&self) -> bool {
        self.residuals.iter().all(|r| r.abs() <= self.tolerance)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0f64, |m, r| m.max(r.abs()))
    }
}

pub const ANGLE_TRANSPORT_TOLERANCE: f64 = 1e-9;

pub fn angle_transport_check(
    labels: &LabelSextuple,
    pair: ReggePair,
) -> Result<AngleTransport, ReggeError> {
    let transformed = regge_transform(labels, pair)?;
    let angles_of = |l: &LabelSextuple| -> Result<[f64; 6], ReggeError> {
        let lengths = EdgeLengths::from_labels(l)
            .map_err(|_| ReggeError::Inadmissible(*l))?;
        exterior_dihedral_angles(&lengths)
            .map_err(|_| ReggeError::NotEuclidean(classify(&lengths)))
    };
    let theta = angles_of(labels)?;
    let theta_t = angles_of(&transformed)?;

    let moving = pair.moving_slots();
    let sigma: f64 = moving.iter().map(|&m| theta[m]).sum::<f64>() / 2.0;
    let mut residuals = [0.0; 6];
    for slot in 0..6 {
        let expected = if moving.contains(&slot) {
            sigma - theta[slot]
        } else {
            theta[slot]
        };
        residuals[slot] = theta_t[slot] - expected;
    }
    Ok(AngleTransport {
        residuals,
        tolerance: ANGLE_TRANSPORT_TOLERANCE,
    })
}
