//! Exact evaluation of classical SU(2) 6j-symbols together with the geometry
//! of the metric tetrahedron they label.
//!
//! The crate is organised around five pieces:
//!
//! - [`labels`]: admissible edge labellings of the tetrahedron.
//! - [`penrose`]: the brute-force spin-network (permutation-sum) evaluator,
//!   used as the oracle that pins down every sign and normalisation of the
//!   closed forms.
//! - [`recoupling`]: exact big-rational theta and tetrahedral nets and the
//!   normalised 6j-symbol `sign · √(tet² / |θ₁θ₂θ₃θ₄|)`.
//! - [`geometry`]: Gram-matrix classification (Euclidean / flat /
//!   Minkowskian), embeddings, volume, exterior dihedral angles, Hadwiger
//!   measures, Schläfli residuals and the Cayley–Menger cross-check.
//! - [`asymptotics`] and [`regge`]: the semiclassical estimates
//!   `√(2/(3πVk³)) cos(Σ(ka+1)θₐ/2 + π/4)`, the rotation-matrix warm-up, and
//!   the 144-element Regge symmetry group with its orbit invariants.
//!
//! All evaluation routines are pure functions of immutable inputs and are
//! safe to call concurrently.

pub mod asymptotics;
pub mod geometry;
pub mod labels;
pub mod numeric;
pub mod penrose;
pub mod recoupling;
pub mod regge;
pub mod value;

pub use labels::{is_admissible_sextuple, is_admissible_triple, scale_labels, LabelSextuple};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
pub use value::ExactValue;
