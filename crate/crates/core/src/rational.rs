//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Rational`]; num-rational keeps the
//! fraction reduced with a positive denominator after every operation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_one(q: &Rational) -> bool {
    q.is_one()
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Writes `q` as `p` or `p/q`.
pub fn write_rational(f: &mut core::fmt::Formatter<'_>, q: &Rational) -> core::fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Absolute value, used by printers that emit the sign separately.
pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Falling factorial `u (u-1) ... (u-k+1)`, zero when `k > u`.
pub fn falling(u: u32, k: u32) -> Rational {
    if k > u {
        return zero();
    }
    let mut acc = BigInt::one();
    for t in 0..k {
        acc *= BigInt::from(u - t);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient as a rational.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return zero();
    }
    falling(n, k) / falling(k, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_after_arithmetic() {
        let a = frac(2, 4);
        assert_eq!(a, frac(1, 2));
        let b = frac(1, 6) + frac(1, 3);
        assert_eq!(*b.numer(), BigInt::from(1));
        assert_eq!(*b.denom(), BigInt::from(2));
        let c = frac(3, -9);
        assert!(c.denom().is_positive());
        assert_eq!(c, frac(-1, 3));
    }

    #[test]
    fn falling_and_binomial() {
        assert_eq!(falling(5, 2), int(20));
        assert_eq!(falling(2, 3), int(0));
        assert_eq!(falling(4, 0), int(1));
        assert_eq!(binomial(6, 3), int(20));
        assert_eq!(binomial(3, 4), int(0));
    }
}
