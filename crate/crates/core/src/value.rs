//! The exact value of a 6j-symbol, kept as `sign · √radicand` with the
//! underlying tetrahedral and theta evaluations retained.

use num_rational::BigRational;
use num_traits::Zero;

use crate::numeric::signed_sqrt_to_f64;

/// A 6j-symbol `sign · √radicand` together with its exact components.
///
/// Invariants: `radicand = tet² / |θ₁θ₂θ₃θ₄|` whenever all four thetas are
/// non-zero, and `sign` is the sign of the tetrahedral evaluation (the theta
/// normalisation enters only through its absolute value).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactValue {
    /// −1, 0 or +1.
    pub sign: i8,
    /// Nonnegative; the square of the symbol.
    pub radicand: BigRational,
    /// Exact tetrahedral (Mercedes) net evaluation.
    pub tet: BigRational,
    /// Exact theta evaluations of the four faces, in face order.
    pub thetas: [BigRational; 4],
}

impl ExactValue {
    /// The zero value assigned to inadmissible labellings.
    pub fn zero() -> Self {
        ExactValue {
            sign: 0,
            radicand: BigRational::zero(),
            tet: BigRational::zero(),
            thetas: [
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
            ],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// `sign · √radicand` rounded to `f64`, relative error ≤ 10⁻¹².
    pub fn to_f64(&self) -> f64 {
        signed_sqrt_to_f64(self.sign, &self.radicand)
    }
}
