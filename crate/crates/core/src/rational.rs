//! Small helpers around exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficient used throughout the crate.
pub type Q = BigRational;

pub fn q_zero() -> Q {
    Q::zero()
}

pub fn q_one() -> Q {
    Q::one()
}

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// num/den with den > 0, fraction reduced.
pub fn q_ratio(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// 2^e for e possibly negative.
pub fn q_pow2(e: i32) -> Q {
    if e >= 0 {
        Q::from_integer(BigInt::from(1) << (e as usize))
    } else {
        Q::new(BigInt::from(1), BigInt::from(1) << ((-e) as usize))
    }
}

/// True if the denominator of `q` (in lowest terms) is a power of two.
pub fn has_pow2_denominator(q: &Q) -> bool {
    let mut d = q.denom().abs();
    let two = BigInt::from(2);
    while (&d % &two).is_zero() {
        d /= &two;
    }
    d.is_one()
}

/// Renders `q` as `num`, or `num/den` when the denominator is not 1.
pub fn q_display(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow2_denominators() {
        assert!(has_pow2_denominator(&q_ratio(3, 8)));
        assert!(has_pow2_denominator(&q_int(5)));
        assert!(!has_pow2_denominator(&q_ratio(1, 6)));
    }

    #[test]
    fn pow2() {
        assert_eq!(q_pow2(3), q_int(8));
        assert_eq!(q_pow2(-2), q_ratio(1, 4));
    }
}
