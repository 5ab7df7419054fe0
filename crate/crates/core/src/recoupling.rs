//! Closed-form evaluation of theta symbols, tetrahedral nets and normalised
//! 6j-symbols in exact big-rational arithmetic.
//!
//! With `s = (a+b+c)/2` the theta symbol is
//!
//! ```text
//! θ(a,b,c) = (−1)^s (s+1)! (s−a)! (s−b)! (s−c)! / (a! b! c!)
//! ```
//!
//! and with vertex half-sums `t₁..t₄` over the four face triples and
//! quadrilateral half-sums `q₁..q₃` over the three opposite-pair complements,
//! the tetrahedral (Mercedes) net is the single alternating sum
//!
//! ```text
//! tet = (∏_{i,j} (qⱼ−tᵢ)! / ∏_edges x!) · Σ_{max t ≤ s ≤ min q}
//!       (−1)^s (s+1)! / (∏ᵢ (s−tᵢ)! ∏ⱼ (qⱼ−s)!)
//! ```
//!
//! Neither formula is taken on trust: the test suite requires both to agree
//! with the permutation-sum oracle of [`crate::penrose`] exactly, for every
//! admissible sextuple with labels ≤ 3 and every admissible theta triple with
//! labels ≤ 6, before anything downstream is believed. The 6j-symbol is the
//! tetrahedral net divided by the square roots of the absolute values of its
//! four theta symbols, and is extended by zero to inadmissible sextuples.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::labels::{is_admissible_triple, LabelSextuple};
use crate::numeric::factorial;
use crate::value::ExactValue;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("labelling ({0}) is not admissible")]
pub struct Inadmissible(pub String);

/// Exact theta symbol of an admissible triple.
pub fn theta_exact(a: u32, b: u32, c: u32) -> Result<BigRational, Inadmissible> {
    if !is_admissible_triple(a, b, c) {
        return Err(Inadmissible(format!("{},{},{}", a, b, c)));
    }
    let s = (a + b + c) / 2;
    let num = factorial(s as u64 + 1)
        * factorial((s - a) as u64)
        * factorial((s - b) as u64)
        * factorial((s - c) as u64);
    let den = factorial(a as u64) * factorial(b as u64) * factorial(c as u64);
    let sign = if s % 2 == 1 { -BigInt::one() } else { BigInt::one() };
    Ok(BigRational::new(sign * num, den))
}

/// Exact tetrahedral (Mercedes) net evaluation of an admissible sextuple.
pub fn tet_exact(labels: &LabelSextuple) -> Result<BigRational, Inadmissible> {
    if !labels.is_admissible() {
        return Err(Inadmissible(labels.to_string()));
    }
    let [a, b, c, d, e, f] = labels.0.map(u64::from);

    // vertex half-sums of the four faces and half-sums of the three
    // quadrilaterals (complements of the opposite pairs)
    let t = [
        (a + b + c) / 2,
        (c + d + e) / 2,
        (e + f + a) / 2,
        (f + d + b) / 2,
    ];
    let q = [
        (a + d + b + e) / 2,
        (a + d + c + f) / 2,
        (b + e + c + f) / 2,
    ];
    let lo = *t.iter().max().unwrap();
    let hi = *q.iter().min().unwrap();

    let mut sum = BigRational::zero();
    for s in lo..=hi {
        let mut den = BigInt::one();
        for &ti in &t {
            den *= factorial(s - ti);
        }
        for &qj in &q {
            den *= factorial(qj - s);
        }
        let mut term = BigRational::new(factorial(s + 1), den);
        if s % 2 == 1 {
            term = -term;
        }
        sum += term;
    }

    let mut prefactor_num = BigInt::one();
    for &qj in &q {
        for &ti in &t {
            prefactor_num *= factorial(qj - ti);
        }
    }
    let mut prefactor_den = BigInt::one();
    for x in [a, b, c, d, e, f] {
        prefactor_den *= factorial(x);
    }
    Ok(sum * BigRational::new(prefactor_num, prefactor_den))
}

/// The normalised 6j-symbol of a sextuple, zero when inadmissible.
///
/// For admissible labels this is `tet / √(|θ₁θ₂θ₃θ₄|)`, carried exactly as a
/// sign and a rational radicand. The thetas of admissible faces are never
/// zero, so the radicand is always well defined.
pub fn sixj_exact(labels: &LabelSextuple) -> ExactValue {
    if !labels.is_admissible() {
        return ExactValue::zero();
    }
    let thetas: [BigRational; 4] = labels
        .faces()
        .map(|[a, b, c]| theta_exact(a, b, c).expect("admissible face"));
    let tet = tet_exact(labels).expect("admissible sextuple");
    let theta_product: BigRational = thetas.iter().map(|t| t.abs()).product();
    debug_assert!(!theta_product.is_zero());
    let sign = match tet.numer().sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    };
    let radicand = &tet * &tet / theta_product;
    ExactValue {
        sign,
        radicand,
        tet,
        thetas,
    }
}
