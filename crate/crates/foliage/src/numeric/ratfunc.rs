use std::fmt;

use super::bipoly::BiPoly;
use super::dd::Cx;
use super::scalar::{rational_sqrt, ExactField, Field, Rational, Ring};

/// Rational function in two formal parameters `α`, `β` over ℚ.
///
/// Numerator and denominator are bivariate polynomials whose first variable
/// stands for `α` and second for `β`. Common factors are cancelled when one
/// side divides the other or shares a monomial factor; full multivariate gcd
/// is not attempted, so equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: BiPoly<Rational>,
    den: BiPoly<Rational>,
}

impl RatFunc {
    pub fn new(num: BiPoly<Rational>, den: BiPoly<Rational>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFunc { num, den };
        r.normalize();
        r
    }

    pub fn alpha() -> Self {
        RatFunc::from_poly(BiPoly::x())
    }

    pub fn beta() -> Self {
        RatFunc::from_poly(BiPoly::y())
    }

    pub fn from_poly(p: BiPoly<Rational>) -> Self {
        RatFunc::new(p, BiPoly::constant(<Rational as Ring>::one()))
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(BiPoly::constant(c))
    }

    pub fn numerator(&self) -> &BiPoly<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &BiPoly<Rational> {
        &self.den
    }

    /// Evaluates at numeric parameter values.
    pub fn eval_cx(&self, alpha: &Cx, beta: &Cx) -> Option<Cx> {
        let lift = |p: &BiPoly<Rational>| p.map(super::dd::cx_from_rational).eval(alpha, beta);
        lift(&self.num).divide(&lift(&self.den))
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = BiPoly::constant(<Rational as Ring>::one());
            return;
        }
        let kx = self.num.x_adic_order().min(self.den.x_adic_order());
        let ky = self.num.y_adic_order().min(self.den.y_adic_order());
        if kx > 0 {
            self.num = self.num.div_x_pow(kx);
            self.den = self.den.div_x_pow(kx);
        }
        if ky > 0 {
            self.num = self.num.div_y_pow(ky);
            self.den = self.den.div_y_pow(ky);
        }
        if !self.den.is_constant() {
            let (q, r) = self.num.divrem(&self.den);
            if r.is_zero() {
                self.num = q;
                self.den = BiPoly::constant(<Rational as Ring>::one());
            } else if !self.num.is_constant() {
                let (q, r) = self.den.divrem(&self.num);
                if r.is_zero() {
                    self.den = q;
                    self.num = BiPoly::constant(<Rational as Ring>::one());
                }
            }
        }
        let lead = self.den.terms()[0].1.clone();
        if !lead.is_one() {
            let inv = Field::recip(&lead).expect("nonzero");
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }
}


impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::constant(Rational::from_integer(0.into()))
    }
    fn one() -> Self {
        RatFunc::constant(<Rational as Ring>::one())
    }
    fn from_int(n: i64) -> Self {
        RatFunc::constant(Rational::from_integer(n.into()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        RatFunc::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negate())
    }
    fn times(&self, o: &Self) -> Self {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn negate(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Field for RatFunc {
    fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }
    fn from_rational(q: &Rational) -> Self {
        RatFunc::constant(q.clone())
    }
}

impl ExactField for RatFunc {
    fn as_rational(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeff(0, 0) / self.den.coeff(0, 0))
        } else {
            None
        }
    }

    fn try_sqrt(&self) -> Option<Self> {
        self.as_rational().and_then(|q| rational_sqrt(&q)).map(RatFunc::constant)
    }

    fn approx(&self) -> Option<Cx> {
        None
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &BiPoly<Rational>| p.to_string().replace("*x", "*α").replace("*y", "*β");
        if self.den.is_constant() && self.den.coeff(0, 0).is_one() {
            write!(f, "{}", show(&self.num))
        } else {
            write!(f, "({}) / ({})", show(&self.num), show(&self.den))
        }
    }
}
