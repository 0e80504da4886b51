use std::cmp::Ordering;
use std::fmt;

use num_traits::Signed;

use super::dd::{Cx, Dd};
use super::scalar::{int, rational_sqrt, square_free_split, ExactField, Field, Rational, Ring};

/// Element `a + b·√m` of a real quadratic field.
///
/// The radicand `m` is square-free and positive. Rational values carry
/// `m = 0` until they meet an irrational operand, so one radicand is shared
/// per computation without threading a context object through every call.
/// Mixing two different radicands with nonzero `b` panics.
#[derive(Clone, Debug)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub m: u64,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, m: u64) -> Self {
        assert!(m != 1, "radicand 1 is not square-free in the required sense");
        if b.is_zero() {
            return QuadExt { a, b, m };
        }
        let (s, f) = square_free_split(m);
        assert!(f > 1, "radicand {m} is a perfect square");
        QuadExt { a, b: b * int(s as i64), m: f }
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt { a, b: Rational::zero(), m: 0 }
    }

    /// `√m` itself.
    pub fn sqrt_of(m: u64) -> Self {
        QuadExt::new(Rational::zero(), int(1), m)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The Galois conjugate `a − b·√m`.
    pub fn conjugate(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -&self.b, m: self.m }
    }

    /// The field norm `a² − m·b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - int(self.m as i64) * &self.b * &self.b
    }

    fn joint_radicand(&self, other: &Self) -> u64 {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, true) => self.m.max(other.m),
            (true, false) => other.m,
            (false, true) => self.m,
            (false, false) => {
                assert_eq!(self.m, other.m, "operands live in different quadratic fields");
                self.m
            }
        }
    }

    /// Sign of the real number `a + b·√m`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2m = &self.b * &self.b * int(self.m as i64);
        match a2.cmp(&b2m) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn cmp_real(&self, other: &Self) -> Ordering {
        self.minus(other).signum()
    }

    pub fn to_dd(&self) -> Dd {
        let r = Dd::from_f64(self.m as f64).sqrt();
        Dd::from_rational(&self.a) + Dd::from_rational(&self.b) * r
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.m == other.m)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.m)
        } else if self.b.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.a, -&self.b, self.m)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.m)
        }
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rational::zero())
    }
    fn one() -> Self {
        QuadExt::rational(int(1))
    }
    fn from_int(n: i64) -> Self {
        QuadExt::rational(int(n))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        let m = self.joint_radicand(o);
        QuadExt { a: &self.a + &o.a, b: &self.b + &o.b, m }
    }
    fn minus(&self, o: &Self) -> Self {
        let m = self.joint_radicand(o);
        QuadExt { a: &self.a - &o.a, b: &self.b - &o.b, m }
    }
    fn times(&self, o: &Self) -> Self {
        let m = self.joint_radicand(o);
        let a = &self.a * &o.a + &self.b * &o.b * int(m as i64);
        let b = &self.a * &o.b + &self.b * &o.a;
        QuadExt { a, b, m }
    }
    fn negate(&self) -> Self {
        QuadExt { a: -&self.a, b: -&self.b, m: self.m }
    }
}

impl Field for QuadExt {
    fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conjugate();
        Some(QuadExt { a: &c.a / &n, b: &c.b / &n, m: self.m })
    }
    fn from_rational(q: &Rational) -> Self {
        QuadExt::rational(q.clone())
    }
}

impl ExactField for QuadExt {
    fn as_rational(&self) -> Option<Rational> {
        if self.b.is_zero() {
            Some(self.a.clone())
        } else {
            None
        }
    }

    fn try_sqrt(&self) -> Option<Self> {
        if self.b.is_zero() {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(QuadExt { a: r, b: Rational::zero(), m: self.m });
            }
            if self.m > 1 {
                let q = &self.a / int(self.m as i64);
                if let Some(r) = rational_sqrt(&q) {
                    return Some(QuadExt { a: Rational::zero(), b: r, m: self.m });
                }
            }
            return None;
        }
        let n = self.norm();
        let s = rational_sqrt(&n)?;
        let two = int(2);
        for cand in [(&self.a + &s) / &two, (&self.a - &s) / &two] {
            if cand.is_positive() {
                if let Some(p) = rational_sqrt(&cand) {
                    let q = &self.b / (&two * &p);
                    let root = QuadExt { a: p, b: q, m: self.m };
                    if root.times(&root) == *self {
                        return Some(root);
                    }
                }
            }
        }
        None
    }

    fn approx(&self) -> Option<Cx> {
        Some(Cx::new(self.to_dd(), Dd::default()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::scalar::rat;

    fn q(a: (i64, i64), b: (i64, i64), m: u64) -> QuadExt {
        QuadExt::new(rat(a.0, a.1), rat(b.0, b.1), m)
    }

    #[test]
    fn norm_identity() {
        let x = q((3, 2), (-5, 7), 2);
        assert_eq!(x.times(&x.conjugate()), QuadExt::rational(x.norm()));
    }

    #[test]
    fn radicand_is_made_square_free() {
        let x = QuadExt::new(rat(0, 1), rat(1, 1), 8);
        assert_eq!(x.m, 2);
        assert_eq!(x.b, rat(2, 1));
    }

    #[test]
    fn sign_of_mixed_terms() {
        assert_eq!(q((3, 2), (-1, 1), 2).signum(), Ordering::Greater);
        assert_eq!(q((1, 1), (-1, 1), 2).signum(), Ordering::Less);
        assert_eq!(q((0, 1), (0, 1), 2).signum(), Ordering::Equal);
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let x = q((1, 1), (1, 1), 3);
        assert_eq!(x.times(&x.recip().unwrap()), QuadExt::one());
    }

    #[test]
    fn square_roots_inside_the_field() {
        let x = q((3, 1), (2, 1), 2);
        let r = x.try_sqrt().unwrap();
        assert_eq!(r.times(&r), x);
        assert!(q((2, 1), (0, 1), 3).try_sqrt().is_none());
        assert_eq!(q((6, 1), (0, 1), 6).try_sqrt(), Some(QuadExt::sqrt_of(6)));
    }
}
