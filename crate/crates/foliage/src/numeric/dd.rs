use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_complex::Complex;
use num_traits::{Num, One, ToPrimitive, Zero};

use super::scalar::{Field, Rational, Ring};

/// Double-double real number: an unevaluated sum `hi + lo` carrying about
/// 106 bits of mantissa.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Complex numbers over double-double parts.
pub type Cx = Complex<Dd>;

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const EPS: f64 = 4.93038065763132e-32;

    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Dd { hi, lo }
    }

    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Nearest double-double to an exact rational.
    pub fn from_rational(q: &Rational) -> Self {
        let hi = q.to_f64().unwrap_or(f64::NAN);
        if !hi.is_finite() {
            return Dd::from_f64(hi);
        }
        let hi_exact = Rational::from_float(hi).unwrap_or_else(<Rational as Zero>::zero);
        let lo = (q - hi_exact).to_f64().unwrap_or(0.0);
        Dd::new(hi, lo)
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::zero();
        }
        let x = self.hi.sqrt();
        let (p, e) = two_prod(x, x);
        let r = ((self.hi - p) - e + self.lo) / (2.0 * x);
        Dd::new(x, r)
    }

    pub fn is_nan(self) -> bool {
        self.hi.is_nan()
    }

    pub fn trunc(self) -> Self {
        let t = self.hi.trunc();
        if t == self.hi {
            Dd::new(t, self.lo.trunc())
        } else {
            Dd::from_f64(t)
        }
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * Dd::from_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b * Dd::from_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from_f64(q3)
    }
}

impl Rem for Dd {
    type Output = Dd;
    fn rem(self, b: Dd) -> Dd {
        self - (self / b).trunc() * b
    }
}

impl Zero for Dd {
    fn zero() -> Self {
        Dd { hi: 0.0, lo: 0.0 }
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }
}

impl One for Dd {
    fn one() -> Self {
        Dd { hi: 1.0, lo: 0.0 }
    }
}

impl Num for Dd {
    type FromStrRadixErr = std::num::ParseFloatError;
    fn from_str_radix(s: &str, _radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        s.parse::<f64>().map(Dd::from_f64)
    }
}

/// Modulus of a complex double-double.
pub fn cabs(z: &Cx) -> Dd {
    (z.re * z.re + z.im * z.im).sqrt()
}

/// Principal square root of a complex double-double.
pub fn csqrt(z: &Cx) -> Cx {
    let r = cabs(z);
    if r.is_zero() {
        return Cx::new(Dd::zero(), Dd::zero());
    }
    let half = Dd::from_f64(0.5);
    let re = ((r + z.re) * half).sqrt();
    let im = ((r - z.re) * half).sqrt();
    if z.im.hi < 0.0 {
        Cx::new(re, -im)
    } else {
        Cx::new(re, im)
    }
}

/// Complex approximation of a real rational.
pub fn cx_from_rational(q: &Rational) -> Cx {
    Cx::new(Dd::from_rational(q), Dd::zero())
}

pub fn cx_f64(re: f64, im: f64) -> Cx {
    Cx::new(Dd::from_f64(re), Dd::from_f64(im))
}

impl Ring for Cx {
    fn zero() -> Self {
        Cx::new(Dd::zero(), Dd::zero())
    }
    fn one() -> Self {
        Cx::new(Dd::one(), Dd::zero())
    }
    fn from_int(n: i64) -> Self {
        Cx::new(Dd::from_f64(n as f64), Dd::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        *self + *other
    }
    fn minus(&self, other: &Self) -> Self {
        *self - *other
    }
    fn times(&self, other: &Self) -> Self {
        *self * *other
    }
    fn negate(&self) -> Self {
        -*self
    }
}

impl Field for Cx {
    fn recip(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(Cx::new(Dd::one(), Dd::zero()) / *self)
        }
    }
    fn from_rational(q: &Rational) -> Self {
        cx_from_rational(q)
    }
}
