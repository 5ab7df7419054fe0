//! Big-integer and floating-point plumbing shared across the crate:
//! a factorial cache, lossless-enough conversions from big rationals to
//! `f64`, and a small double-double type for summations that would otherwise
//! lose accuracy to cancellation.

use std::sync::RwLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `n!` as a big integer, memoised process-wide.
pub fn factorial(n: u64) -> BigInt {
    let n = n as usize;
    {
        let table = FACTORIALS.read().unwrap();
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// Convert a big rational to `f64` by binary scaling of an integer quotient.
///
/// `Ratio::to_f64` goes through separate numerator/denominator conversions
/// and overflows to `inf/inf` once either side exceeds the `f64` range, which
/// factorial-sized operands routinely do. Here the quotient is formed first,
/// at ~56 bits of precision, so only the value itself has to fit.
pub fn big_rational_to_f64(r: &BigRational) -> f64 {
    let sign = match r.numer().sign() {
        Sign::Minus => -1.0,
        Sign::NoSign => return 0.0,
        Sign::Plus => 1.0,
    };
    let a = r.numer().magnitude();
    let b = r.denom().magnitude();
    let shift = 57i64 - (a.bits() as i64 - b.bits() as i64);
    let q = if shift >= 0 {
        (a << shift as u64) / b
    } else {
        a / (b << (-shift) as u64)
    };
    // round the 57-bit quotient to nearest before the final f64 rounding
    let q: BigUint = (q + 1u32) >> 1;
    let shift = shift - 1;
    let m = q.to_u64().expect("quotient fits in 64 bits by construction") as f64;
    if shift > 1100 {
        // subnormal or below: scale in two steps to avoid powi overflow
        return sign * m * 2f64.powi(-1100) * 2f64.powi((1100 - shift) as i32);
    }
    sign * m * 2f64.powi(-shift as i32)
}

/// `sign · √radicand` rendered to `f64`.
///
/// The radicand `p/q` is scaled so that the integer square root of `p·q·10^{2g}`
/// carries at least 40 significant decimal digits, which keeps the relative
/// error of the rounded result far below the `10⁻¹²` contract.
pub fn signed_sqrt_to_f64(sign: i8, radicand: &BigRational) -> f64 {
    if sign == 0 || radicand.is_zero() {
        return 0.0;
    }
    debug_assert!(!radicand.is_negative());
    let p = radicand.numer().magnitude();
    let q = radicand.denom().magnitude();
    let n: BigUint = p * q;
    // decimal digit count from the bit count; slight overestimates are fine
    let digits = (n.bits() as f64 * std::f64::consts::LOG10_2).floor() as i64 + 1;
    let guard = ((90 - digits).max(0) as u64).div_ceil(2);
    let scaled = n * BigUint::from(10u32).pow(2 * guard as u32);
    let root = scaled.sqrt();
    let value = BigRational::new(
        BigInt::from(root),
        BigInt::from(q * BigUint::from(10u32).pow(guard as u32)),
    );
    f64::from(sign) * big_rational_to_f64(&value)
}

/// Double-double value `hi + lo` with `|lo| ≤ ulp(hi)/2`.
///
/// Enough arithmetic for the rotation-matrix oracle, where binomial-sized
/// terms of alternating sign cancel down to an O(1) result.
#[derive(Clone, Copy, Debug)]
pub struct DD {
    pub hi: f64,
    pub lo: f64,
}

impl DD {
    pub fn from_f64(x: f64) -> Self {
        DD { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn two_sum(a: f64, b: f64) -> (f64, f64) {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        (s, err)
    }

    fn two_prod(a: f64, b: f64) -> (f64, f64) {
        let p = a * b;
        let err = a.mul_add(b, -p);
        (p, err)
    }

    pub fn add(self, other: DD) -> DD {
        let (s, e) = Self::two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = Self::two_sum(s, e);
        DD { hi, lo }
    }

    pub fn mul(self, other: DD) -> DD {
        let (p, e) = Self::two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = Self::two_sum(p, e);
        DD { hi, lo }
    }

    pub fn mul_f64(self, x: f64) -> DD {
        self.mul(DD::from_f64(x))
    }

    pub fn powi(self, n: u32) -> DD {
        let mut acc = DD::from_f64(1.0);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(10), BigInt::from(3628800u64));
    }

    #[test]
    fn rational_to_f64_handles_huge_operands() {
        // 101! / 100! = 101 even though both sides overflow f64
        let r = BigRational::new(factorial(101), factorial(100));
        assert_eq!(big_rational_to_f64(&r), 101.0);

        let r = BigRational::new(BigInt::from(-1), BigInt::from(3));
        assert!((big_rational_to_f64(&r) + 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn signed_sqrt_precision() {
        // √(2) via radicand 2
        let two = BigRational::from_i64(2).unwrap();
        let v = signed_sqrt_to_f64(1, &two);
        assert!((v - 2f64.sqrt()).abs() / 2f64.sqrt() < 1e-15);

        // sign carries through; zero short-circuits
        assert!((signed_sqrt_to_f64(-1, &two) + 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(signed_sqrt_to_f64(0, &two), 0.0);

        // a big one: √(100!) relative to the ln-based route
        let r = BigRational::new(factorial(100), BigInt::one());
        let v = signed_sqrt_to_f64(1, &r);
        let expect = (0.5 * (2..=100u64).map(|i| (i as f64).ln()).sum::<f64>()).exp();
        assert!((v - expect).abs() / expect < 1e-12);
    }

    #[test]
    fn dd_recovers_cancellation() {
        // (1e16 + 1) - 1e16 = 1 exactly in double-double
        let s = DD::from_f64(1e16)
            .add(DD::from_f64(1.0))
            .add(DD::from_f64(-1e16));
        assert_eq!(s.to_f64(), 1.0);
    }
}
