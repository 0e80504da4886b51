use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dd::{Cx, Dd};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Builds the rational `p/q`. Panics when `q` is zero.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Commutative ring operations shared by exact and floating coefficient types.
///
/// Method names avoid the `std::ops` names so that types implementing both
/// stay unambiguous at call sites.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }
}

/// A field: a ring with inverses of nonzero elements.
pub trait Field: Ring {
    fn recip(&self) -> Option<Self>;

    fn divide(&self, other: &Self) -> Option<Self> {
        other.recip().map(|r| self.times(&r))
    }

    fn from_rational(q: &Rational) -> Self;
}

/// An exact field with the extra queries the singularity classifier needs.
pub trait ExactField: Field + fmt::Display {
    /// The value as a rational number when it is one.
    fn as_rational(&self) -> Option<Rational>;

    /// A square root inside the field when one exists.
    fn try_sqrt(&self) -> Option<Self>;

    /// Complex approximation under the standard real embedding, when the
    /// value is a number rather than a formal expression.
    fn approx(&self) -> Option<Cx>;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(n: i64) -> Self {
        int(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl Field for Rational {
    fn recip(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(<Rational as One>::one() / self)
        }
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl ExactField for Rational {
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn try_sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }

    fn approx(&self) -> Option<Cx> {
        Some(Cx::new(Dd::from_rational(self), Dd::zero()))
    }
}

/// Exact square root of a nonnegative rational that is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = integer_sqrt(q.numer())?;
    let d = integer_sqrt(q.denom())?;
    Some(Rational::new(n, d))
}

/// Exact square root of a nonnegative perfect-square integer.
pub fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Splits a positive integer as `s² · f` with `f` square-free.
pub fn square_free_split(n: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        while rest.is_multiple_of(p * p) {
            rest /= p * p;
            square *= p;
        }
        p += 1;
    }
    (square, rest)
}

/// Floor of a rational number.
pub fn floor(q: &Rational) -> BigInt {
    q.floor().to_integer()
}

/// Converts a rational to `i64` when it is an integer in range.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}
