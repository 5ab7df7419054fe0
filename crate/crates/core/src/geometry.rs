//! Metric geometry of the tetrahedron determined by six edge lengths.
//!
//! The edge vectors obey `b = −a−c`, `d = c−e`, `f = a+e`, so the Gram matrix
//! of the spanning triple `(A, C, E)` has exact rational entries in the
//! squared lengths:
//!
//! ```text
//! A·C = (b²−a²−c²)/2    C·E = (c²+e²−d²)/2    A·E = (f²−a²−e²)/2
//! ```
//!
//! Its determinant equals `[A,C,E]² = (6V)²`; the sign classifies the
//! tetrahedron as Euclidean (positive), flat (zero) or Minkowskian
//! (negative), exactly, for rational inputs. The 5×5 Cayley–Menger
//! determinant is kept alongside as an independent cross-check; on valid
//! faces it equals `288·V² = 8·det(Gram)` in the Euclidean case and agrees
//! in sign everywhere.

use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};
use thiserror::Error;

use crate::labels::{LabelSextuple, FACES};
use crate::numeric::big_rational_to_f64;

/// Vertex pairs of the six edge slots `a..f` in the vertex numbering
/// `P0, P1 = P0+A, P2 = P0+A+C, P3 = P0+A+E`.
const EDGE_VERTICES: [[usize; 2]; 6] = [[0, 1], [0, 2], [1, 2], [2, 3], [1, 3], [0, 3]];

/// Vertex triples of the four faces, aligned with [`FACES`].
const FACE_VERTICES: [[usize; 3]; 4] = [[0, 1, 2], [1, 2, 3], [0, 1, 3], [0, 2, 3]];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("face ({0}) violates the triangle inequality")]
    FaceViolation(String),
    #[error("tetrahedron is {0:?}, not Euclidean")]
    NotEuclidean(TetClass),
    #[error("finite-difference step leaves the Euclidean region")]
    StepLeavesEuclideanRegion,
}

/// Sign of the Cayley polynomial in the squared edge lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TetClass {
    Euclidean,
    Flat,
    Minkowskian,
}

/// Six nonnegative edge lengths whose four face triples all satisfy the
/// (non-strict) triangle inequality. Stored exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeLengths(pub [BigRational; 6]);

impl EdgeLengths {
    pub fn new(lengths: [BigRational; 6]) -> Result<Self, GeomError> {
        for l in &lengths {
            if l.is_negative() {
                return Err(GeomError::FaceViolation(format!("negative length {}", l)));
            }
        }
        for [i, j, k] in FACES {
            let (x, y, z) = (&lengths[i], &lengths[j], &lengths[k]);
            if x > &(y + z) || y > &(x + z) || z > &(x + y) {
                return Err(GeomError::FaceViolation(format!("{},{},{}", x, y, z)));
            }
        }
        Ok(EdgeLengths(lengths))
    }

    /// Edge lengths equal to the labels themselves.
    pub fn from_labels(labels: &LabelSextuple) -> Result<Self, GeomError> {
        Self::from_integers(labels.0.map(u64::from))
    }

    pub fn from_integers(v: [u64; 6]) -> Result<Self, GeomError> {
        Self::new(v.map(|x| BigRational::from_u64(x).expect("integer length")))
    }

    pub fn to_f64(&self) -> [f64; 6] {
        [0, 1, 2, 3, 4, 5].map(|i| big_rational_to_f64(&self.0[i]))
    }

    fn squared(&self) -> [BigRational; 6] {
        [0, 1, 2, 3, 4, 5].map(|i| &self.0[i] * &self.0[i])
    }
}

/// Exact Gram matrix of the spanning edge vectors `(A, C, E)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix(pub [[BigRational; 3]; 3]);

impl GramMatrix {
    pub fn det(&self) -> BigRational {
        let m = |i: usize, j: usize| &self.0[i][j];
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    }

    pub fn to_f64(&self) -> [[f64; 3]; 3] {
        [0, 1, 2].map(|i| [0, 1, 2].map(|j| big_rational_to_f64(&self.0[i][j])))
    }
}

/// Gram matrix with exact entries from the squared lengths.
pub fn gram_matrix(lengths: &EdgeLengths) -> GramMatrix {
    let [a2, b2, c2, d2, e2, f2] = lengths.squared();
    let two = BigRational::from_u64(2).unwrap();
    let ac = (&b2 - &a2 - &c2) / &two;
    let ce = (&c2 + &e2 - &d2) / &two;
    let ae = (&f2 - &a2 - &e2) / &two;
    GramMatrix([
        [a2, ac.clone(), ae.clone()],
        [ac, c2, ce.clone()],
        [ae, ce, e2],
    ])
}

/// Exact classification by the sign of the Gram determinant.
pub fn classify(lengths: &EdgeLengths) -> TetClass {
    let det = gram_matrix(lengths).det();
    if det.is_zero() {
        TetClass::Flat
    } else if det.is_positive() {
        TetClass::Euclidean
    } else {
        TetClass::Minkowskian
    }
}

/// The 5×5 Cayley–Menger determinant of the squared lengths, exactly.
///
/// Positive on Euclidean configurations (`288·V²`), zero on flat ones,
/// negative on Minkowskian ones; always sign-equal to the Gram determinant.
pub fn cayley_menger_det(lengths: &EdgeLengths) -> BigRational {
    let [a2, b2, c2, d2, e2, f2] = lengths.squared();
    let zero = BigRational::zero();
    let one = BigRational::from_u64(1).unwrap();
    // pairwise squared distances: d01=a, d02=b, d03=f, d12=c, d13=e, d23=d
    let m = [
        [zero.clone(), one.clone(), one.clone(), one.clone(), one.clone()],
        [one.clone(), zero.clone(), a2.clone(), b2.clone(), f2.clone()],
        [one.clone(), a2, zero.clone(), c2.clone(), e2.clone()],
        [one.clone(), b2, c2, zero.clone(), d2.clone()],
        [one, f2, e2, d2, zero],
    ];
    det_laplace(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn det_laplace(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = BigRational::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigRational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * det_laplace(&minor);
        if col % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// Embed a Euclidean tetrahedron: the spanning vectors `A, C, E` from a
/// Cholesky factorisation of the Gram matrix.
pub fn embed(lengths: &EdgeLengths) -> Result<[[f64; 3]; 3], GeomError> {
    let class = classify(lengths);
    if class != TetClass::Euclidean {
        return Err(GeomError::NotEuclidean(class));
    }
    Ok(cholesky(&gram_matrix(lengths).to_f64()))
}

/// Cholesky factorisation of a positive-definite 3×3 matrix, returning the
/// row vectors of the lower-triangular factor.
fn cholesky(g: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let ax = g[0][0].sqrt();
    let cx = g[0][1] / ax;
    let cy = (g[1][1] - cx * cx).max(0.0).sqrt();
    let ex = g[0][2] / ax;
    let ey = (g[1][2] - cx * ex) / cy;
    let ez = (g[2][2] - ex * ex - ey * ey).max(0.0).sqrt();
    [[ax, 0.0, 0.0], [cx, cy, 0.0], [ex, ey, ez]]
}

/// Volume `√(det Gram)/6`; zero for flat input, an error for Minkowskian.
pub fn volume(lengths: &EdgeLengths) -> Result<f64, GeomError> {
    let det = gram_matrix(lengths).det();
    if det.is_negative() {
        return Err(GeomError::NotEuclidean(TetClass::Minkowskian));
    }
    Ok(big_rational_to_f64(&det).sqrt() / 6.0)
}

/// Exterior dihedral angles at the six edges, each in `(0, π)`: the angle
/// between the outward unit normals of the two incident faces.
pub fn exterior_dihedral_angles(lengths: &EdgeLengths) -> Result<[f64; 6], GeomError> {
    let vectors = embed(lengths)?;
    Ok(angles_from_vectors(&vectors))
}

fn vertices_from_vectors(v: &[[f64; 3]; 3]) -> [[f64; 3]; 4] {
    let [a, c, e] = *v;
    let add = |x: [f64; 3], y: [f64; 3]| [x[0] + y[0], x[1] + y[1], x[2] + y[2]];
    [[0.0; 3], a, add(a, c), add(a, e)]
}

fn sub(x: [f64; 3], y: [f64; 3]) -> [f64; 3] {
    [x[0] - y[0], x[1] - y[1], x[2] - y[2]]
}

fn cross(x: [f64; 3], y: [f64; 3]) -> [f64; 3] {
    [
        x[1] * y[2] - x[2] * y[1],
        x[2] * y[0] - x[0] * y[2],
        x[0] * y[1] - x[1] * y[0],
    ]
}

fn dot(x: [f64; 3], y: [f64; 3]) -> f64 {
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

fn norm(x: [f64; 3]) -> f64 {
    dot(x, x).sqrt()
}

pub(crate) fn angles_from_vectors(v: &[[f64; 3]; 3]) -> [f64; 6] {
    let p = vertices_from_vectors(v);
    let centroid = [
        (p[0][0] + p[1][0] + p[2][0] + p[3][0]) / 4.0,
        (p[0][1] + p[1][1] + p[2][1] + p[3][1]) / 4.0,
        (p[0][2] + p[1][2] + p[2][2] + p[3][2]) / 4.0,
    ];

    // outward unit normals, oriented away from the centroid
    let normals: [[f64; 3]; 4] = FACE_VERTICES.map(|[i, j, k]| {
        let mut n = cross(sub(p[j], p[i]), sub(p[k], p[i]));
        let face_mid = [
            (p[i][0] + p[j][0] + p[k][0]) / 3.0,
            (p[i][1] + p[j][1] + p[k][1]) / 3.0,
            (p[i][2] + p[j][2] + p[k][2]) / 3.0,
        ];
        if dot(n, sub(face_mid, centroid)) < 0.0 {
            n = [-n[0], -n[1], -n[2]];
        }
        let len = norm(n);
        [n[0] / len, n[1] / len, n[2] / len]
    });

    let mut angles = [0.0; 6];
    for (slot, [u, v]) in EDGE_VERTICES.iter().enumerate() {
        let incident: Vec<usize> = (0..4)
            .filter(|&fi| FACE_VERTICES[fi].contains(u) && FACE_VERTICES[fi].contains(v))
            .collect();
        let (ni, nj) = (normals[incident[0]], normals[incident[1]]);
        angles[slot] = norm(cross(ni, nj)).atan2(dot(ni, nj));
    }
    angles
}

/// The dilation-homogeneous Hadwiger measures `(μ0, μ1, μ2, μ3)` of a
/// Euclidean tetrahedron: Euler characteristic, Σ length·exterior angle,
/// half the surface area, and the volume.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HadwigerMeasures {
    pub mu0: f64,
    pub mu1: f64,
    pub mu2: f64,
    pub mu3: f64,
}

pub fn hadwiger_measures(lengths: &EdgeLengths) -> Result<HadwigerMeasures, GeomError> {
    let class = classify(lengths);
    if class != TetClass::Euclidean {
        return Err(GeomError::NotEuclidean(class));
    }
    let angles = exterior_dihedral_angles(lengths)?;
    let l = lengths.to_f64();
    let mu1 = (0..6).map(|i| l[i] * angles[i]).sum();
    let mu2 = face_areas(lengths).iter().sum::<f64>() / 2.0;
    let mu3 = volume(lengths)?;
    Ok(HadwigerMeasures {
        mu0: 1.0,
        mu1,
        mu2,
        mu3,
    })
}

/// Heron areas of the four faces, in face order.
pub fn face_areas(lengths: &EdgeLengths) -> [f64; 4] {
    let l = lengths.to_f64();
    FACES.map(|[i, j, k]| {
        let (x, y, z) = (l[i], l[j], l[k]);
        let s = (x + y + z) / 2.0;
        (s * (s - x) * (s - y) * (s - z)).max(0.0).sqrt()
    })
}

/// Everything derived from one set of edge lengths. Volume is present for
/// Euclidean and flat inputs; angles and the embedding only for Euclidean.
#[derive(Clone, Debug)]
pub struct TetMetric {
    pub lengths: EdgeLengths,
    pub class: TetClass,
    pub volume: Option<f64>,
    pub exterior_angles: Option<[f64; 6]>,
    pub embedding: Option<[[f64; 3]; 3]>,
}

pub fn tet_metric(lengths: &EdgeLengths) -> TetMetric {
    let class = classify(lengths);
    TetMetric {
        lengths: lengths.clone(),
        class,
        volume: volume(lengths).ok(),
        exterior_angles: exterior_dihedral_angles(lengths).ok(),
        embedding: embed(lengths).ok(),
    }
}

/// Options for the Schläfli residual: the relative step of the central
/// difference and how far from flatness the base point must be.
#[derive(Clone, Copy, Debug)]
pub struct SchlafliOptions {
    pub step_scale: f64,
    pub min_relative_det: f64,
}

impl Default for SchlafliOptions {
    fn default() -> Self {
        SchlafliOptions {
            step_scale: 1e-5,
            min_relative_det: 1e-9,
        }
    }
}

/// Central-difference residual of the Schläfli identity `Σ lᵢ dθᵢ = 0`
/// along `direction`: `Σ lᵢ (θᵢ(l+δv) − θᵢ(l−δv)) / (2δ)` with
/// `δ = step_scale·‖l‖`. Small for any interior Euclidean point.
pub fn schlafli_residual(lengths: &EdgeLengths, direction: &[f64; 6]) -> Result<f64, GeomError> {
    schlafli_residual_with(lengths, direction, SchlafliOptions::default())
}

pub fn schlafli_residual_with(
    lengths: &EdgeLengths,
    direction: &[f64; 6],
    opts: SchlafliOptions,
) -> Result<f64, GeomError> {
    let class = classify(lengths);
    if class != TetClass::Euclidean {
        return Err(GeomError::NotEuclidean(class));
    }
    let l = lengths.to_f64();
    let scale: f64 = l.iter().map(|x| x * x).sum::<f64>().sqrt();
    let det = big_rational_to_f64(&gram_matrix(lengths).det());
    if det < opts.min_relative_det * scale.powi(6) {
        return Err(GeomError::StepLeavesEuclideanRegion);
    }
    let delta = opts.step_scale * scale;

    let angles_at = |sign: f64| -> Result<[f64; 6], GeomError> {
        let mut shifted = [0.0; 6];
        for i in 0..6 {
            shifted[i] = l[i] + sign * delta * direction[i];
        }
        float_euclidean_angles(&shifted).ok_or(GeomError::StepLeavesEuclideanRegion)
    };
    let plus = angles_at(1.0)?;
    let minus = angles_at(-1.0)?;

    let mut residual = 0.0;
    for i in 0..6 {
        residual += l[i] * (plus[i] - minus[i]) / (2.0 * delta);
    }
    Ok(residual)
}

/// Floating-point twin of the exact pipeline for perturbed (irrational)
/// lengths: validate faces, form the Gram matrix, require it safely
/// Euclidean, embed, and read off the angles.
fn float_euclidean_angles(l: &[f64; 6]) -> Option<[f64; 6]> {
    if l.iter().any(|&x| x < 0.0) {
        return None;
    }
    for [i, j, k] in FACES {
        if l[i] > l[j] + l[k] || l[j] > l[i] + l[k] || l[k] > l[i] + l[j] {
            return None;
        }
    }
    let sq = l.map(|x| x * x);
    let g = [
        [sq[0], (sq[1] - sq[0] - sq[2]) / 2.0, (sq[5] - sq[0] - sq[4]) / 2.0],
        [(sq[1] - sq[0] - sq[2]) / 2.0, sq[2], (sq[2] + sq[4] - sq[3]) / 2.0],
        [(sq[5] - sq[0] - sq[4]) / 2.0, (sq[2] + sq[4] - sq[3]) / 2.0, sq[4]],
    ];
    let det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    let entry_scale = g.iter().flatten().fold(0.0f64, |m, &x| m.max(x.abs()));
    // float flat-detection tolerance, cubic in the entry scale
    if det <= 1e-10 * entry_scale.powi(3) {
        return None;
    }
    Some(angles_from_vectors(&cholesky(&g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn lengths(v: [u64; 6]) -> EdgeLengths {
        EdgeLengths::from_integers(v).unwrap()
    }

    const REGULAR_EXTERIOR: f64 = std::f64::consts::PI - 1.230_959_417_340_774_7; // π − arccos(1/3)

    #[test]
    fn gram_matrix_examples() {
        let g = gram_matrix(&lengths([1, 1, 1, 1, 1, 1]));
        assert_eq!(g.0[0][0], BigRational::one());
        assert_eq!(g.0[0][1], rat(-1, 2));
        assert_eq!(g.0[1][2], rat(1, 2));
        assert_eq!(g.0[0][2], rat(-1, 2));
        assert_eq!(g.det(), rat(1, 2));

        let g = gram_matrix(&lengths([10, 6, 6, 10, 6, 6]));
        let expect = [[100, -50, -50], [-50, 36, -14], [-50, -14, 36]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g.0[i][j], rat(expect[i][j], 1));
            }
        }
        assert_eq!(g.det(), rat(-140_000, 1));

        let g = gram_matrix(&lengths([0, 0, 0, 0, 0, 0]));
        assert!(g.0.iter().flatten().all(|x| x.is_zero()));
    }

    #[test]
    fn face_violation_is_rejected() {
        // face (e,f,a) = (2,6,2) fails
        assert!(matches!(
            EdgeLengths::from_integers([2, 2, 2, 2, 2, 6]),
            Err(GeomError::FaceViolation(_))
        ));
    }

    #[test]
    fn classification() {
        assert_eq!(classify(&lengths([3, 3, 3, 3, 3, 3])), TetClass::Euclidean);
        assert_eq!(classify(&lengths([10, 6, 6, 10, 6, 6])), TetClass::Minkowskian);
        // planar rectangle with diagonals: genuinely flat
        assert_eq!(classify(&lengths([4, 3, 5, 4, 3, 5])), TetClass::Flat);
        // degenerate face (2,4,2) forces a Minkowskian configuration:
        // det Gram = −64 exactly
        let l = lengths([2, 2, 2, 2, 2, 4]);
        assert_eq!(gram_matrix(&l).det(), rat(-64, 1));
        assert_eq!(classify(&l), TetClass::Minkowskian);
        assert_eq!(classify(&lengths([0, 0, 0, 0, 0, 0])), TetClass::Flat);
    }

    #[test]
    fn cayley_menger_examples() {
        assert_eq!(cayley_menger_det(&lengths([1, 1, 1, 1, 1, 1])), rat(4, 1));
        assert_eq!(cayley_menger_det(&lengths([0, 0, 0, 0, 0, 0])), rat(0, 1));
        assert!(cayley_menger_det(&lengths([10, 6, 6, 10, 6, 6])).is_negative());
        // 8 × det(Gram) on a Euclidean example
        assert_eq!(
            cayley_menger_det(&lengths([4, 6, 8, 10, 6, 8])),
            rat(8 * 17136, 1)
        );
    }

    #[test]
    fn embedding_round_trip() {
        for v in [[1, 1, 1, 1, 1, 1], [4, 6, 8, 10, 6, 8], [5, 6, 7, 8, 7, 6]] {
            let l = lengths(v);
            let [a, c, e] = embed(&l).unwrap();
            let lf = l.to_f64();
            let add = |x: [f64; 3], y: [f64; 3]| [x[0] + y[0], x[1] + y[1], x[2] + y[2]];
            let checks = [
                (norm(a), lf[0]),
                (norm(add(a, c)), lf[1]),
                (norm(c), lf[2]),
                (norm(sub(c, e)), lf[3]),
                (norm(e), lf[4]),
                (norm(add(a, e)), lf[5]),
            ];
            for (got, want) in checks {
                assert!(
                    (got - want).abs() <= 1e-12 * want.max(1.0),
                    "{} vs {}",
                    got,
                    want
                );
            }
        }
        assert_eq!(
            embed(&lengths([4, 3, 5, 4, 3, 5])).unwrap_err(),
            GeomError::NotEuclidean(TetClass::Flat)
        );
        assert_eq!(gram_matrix(&lengths([4, 6, 8, 10, 6, 8])).det(), rat(17136, 1));
    }

    #[test]
    fn volume_examples() {
        let v = volume(&lengths([1, 1, 1, 1, 1, 1])).unwrap();
        assert!((v - 1.0 / (6.0 * 2f64.sqrt())).abs() < 1e-15);
        // degree-3 homogeneity
        let v5 = volume(&lengths([5, 5, 5, 5, 5, 5])).unwrap();
        assert!((v5 - 125.0 * v).abs() < 1e-12 * v5);
        assert_eq!(volume(&lengths([4, 3, 5, 4, 3, 5])).unwrap(), 0.0);
        assert!(volume(&lengths([10, 6, 6, 10, 6, 6])).is_err());
    }

    #[test]
    fn regular_angles() {
        let angles = exterior_dihedral_angles(&lengths([2, 2, 2, 2, 2, 2])).unwrap();
        for th in angles {
            assert!((th - REGULAR_EXTERIOR).abs() < 1e-12);
        }
        // scale invariance
        let scaled = exterior_dihedral_angles(&lengths([14, 14, 14, 14, 14, 14])).unwrap();
        for i in 0..6 {
            assert!((angles[i] - scaled[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn near_flat_angles_have_no_nan() {
        // nudge the flat rectangle configuration into the Euclidean region
        let v: [BigRational; 6] = [
            rat(4, 1),
            rat(3, 1),
            rat(5, 1),
            rat(4, 1),
            rat(3, 1),
            rat(499, 100),
        ];
        let l = EdgeLengths::new(v).unwrap();
        assert_eq!(classify(&l), TetClass::Euclidean);
        let angles = exterior_dihedral_angles(&l).unwrap();
        for th in angles {
            assert!(th.is_finite());
            assert!(th > 0.0 && th < std::f64::consts::PI);
        }
    }

    #[test]
    fn hadwiger_examples() {
        let h = hadwiger_measures(&lengths([1, 1, 1, 1, 1, 1])).unwrap();
        assert_eq!(h.mu0, 1.0);
        assert!((h.mu1 - 6.0 * REGULAR_EXTERIOR).abs() < 1e-12);
        assert!((h.mu2 - 3f64.sqrt() / 2.0).abs() < 1e-14);
        assert!((h.mu3 - 1.0 / (6.0 * 2f64.sqrt())).abs() < 1e-15);

        // dilation eigenvalues (1, k, k², k³)
        let hk = hadwiger_measures(&lengths([3, 3, 3, 3, 3, 3])).unwrap();
        assert!((hk.mu1 - 3.0 * h.mu1).abs() < 1e-12);
        assert!((hk.mu2 - 9.0 * h.mu2).abs() < 1e-12);
        assert!((hk.mu3 - 27.0 * h.mu3).abs() < 1e-12);

        assert_eq!(
            hadwiger_measures(&lengths([4, 3, 5, 4, 3, 5])).unwrap_err(),
            GeomError::NotEuclidean(TetClass::Flat)
        );
    }

    #[test]
    fn schlafli_residual_examples() {
        let l = lengths([2, 2, 2, 2, 2, 2]);
        let r = schlafli_residual(&l, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(r.abs() <= 1e-6 * 2.0, "residual {}", r);

        let r = schlafli_residual(&l, &[0.0; 6]).unwrap();
        assert_eq!(r, 0.0);

        let l = lengths([4, 6, 8, 10, 6, 8]);
        let dir = [0.3, -0.2, 0.1, 0.4, -0.5, 0.2];
        let dn: f64 = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
        let ln: f64 = l.to_f64().iter().map(|x| x * x).sum::<f64>().sqrt();
        let r = schlafli_residual(&l, &dir).unwrap();
        assert!(r.abs() <= 1e-6 * ln * dn, "residual {}", r);

        assert!(schlafli_residual(&lengths([10, 6, 6, 10, 6, 6]), &dir).is_err());
    }

    #[test]
    fn tet_metric_assembles() {
        let m = tet_metric(&lengths([4, 6, 8, 10, 6, 8]));
        assert_eq!(m.class, TetClass::Euclidean);
        assert!(m.volume.is_some() && m.exterior_angles.is_some() && m.embedding.is_some());

        let m = tet_metric(&lengths([10, 6, 6, 10, 6, 6]));
        assert_eq!(m.class, TetClass::Minkowskian);
        assert!(m.volume.is_none() && m.exterior_angles.is_none() && m.embedding.is_none());
    }
}
