//! Eigenvalue formulas for the two-parameter family
//! `x(α + x^d + y^d)·∂x + y(β + y^{d−1} + x^d + y^d)·∂y` and the local
//! double-cover computation at a simple tangency point.

use crate::error::{FoliageError, Result};
use crate::numeric::bipoly::BiPoly;
use crate::numeric::dd::{cabs, csqrt, cx_f64, Cx, Dd};
use crate::numeric::ratfunc::RatFunc;
use crate::numeric::roots::complex_roots;
use crate::numeric::scalar::{int, Rational, Ring};
use crate::numeric::upoly::UPoly;

use super::classify::{classify_exact, LinearClass};

/// Strata of the singular set of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyCase {
    /// The origin.
    Origin,
    /// `y = 0`, `x^d = −α`.
    XAxis,
    /// `x = 0`, `y^d + y^{d−1} + β = 0`.
    YAxis,
    /// `y^{d−1} = α − β`, `x^d = −α − y^d`.
    Interior,
}

impl FamilyCase {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyCase::Origin => "origin",
            FamilyCase::XAxis => "x_axis",
            FamilyCase::YAxis => "y_axis",
            FamilyCase::Interior => "interior",
        }
    }
}

/// Which eigenvalue-quotient formula is being tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formula {
    /// The formula as published with the construction.
    Stated,
    /// The formula recomputed from the Jacobian.
    Recomputed,
}

/// The family's field over `ℚ(α, β)`.
pub fn family_field(d: u32) -> (BiPoly<RatFunc>, BiPoly<RatFunc>) {
    let one = RatFunc::one();
    let x = BiPoly::<RatFunc>::x();
    let y = BiPoly::<RatFunc>::y();
    let xd = BiPoly::monomial(one.clone(), d, 0);
    let yd = BiPoly::monomial(one.clone(), 0, d);
    let yd1 = BiPoly::monomial(one, 0, d - 1);
    let a = x.mul(&BiPoly::constant(RatFunc::alpha()).add(&xd).add(&yd));
    let b = y.mul(&BiPoly::constant(RatFunc::beta()).add(&yd1).add(&xd).add(&yd));
    (a, b)
}

fn rf(c: i64) -> RatFunc {
    RatFunc::from_int(c)
}

fn upoly_const(c: RatFunc) -> UPoly<RatFunc> {
    UPoly::constant(c)
}

fn monomial(c: RatFunc, k: usize) -> UPoly<RatFunc> {
    UPoly::constant(c).shift(k)
}

/// `λ = N/D` is an eigenvalue quotient of a 2×2 matrix exactly when
/// `tr²·N·D = det·(N + D)²`, and this relation is symmetric in `N ↔ D`.
fn quotient_relation(m: &[[UPoly<RatFunc>; 2]; 2], n: &UPoly<RatFunc>, den: &UPoly<RatFunc>) -> UPoly<RatFunc> {
    let tr = m[0][0].add(&m[1][1]);
    let det = m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]));
    let s = n.add(den);
    tr.mul(&tr).mul(n).mul(den).sub(&det.mul(&s).mul(&s))
}

/// Outcome of a symbolic check over `ℚ(α, β)[w]/(relation)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicCheck {
    pub case: FamilyCase,
    pub d: u32,
    pub formula: Formula,
    pub holds: bool,
}

/// Checks a closed-form quotient on one of the strata with a polynomial
/// relation, symbolically in the formal parameters.
pub fn check_symbolic(case: FamilyCase, d: u32, formula: Formula) -> Result<SymbolicCheck> {
    if d < 2 {
        return Err(FoliageError::input("the family needs d ≥ 2"));
    }
    let (a, b) = family_field(d);
    let jac = [[a.partial_x(), a.partial_y()], [b.partial_x(), b.partial_y()]];
    let (alpha, beta) = (RatFunc::alpha(), RatFunc::beta());
    let dd = rf(d as i64);
    let zero = RatFunc::zero();
    let (m, relation, n, den): ([[UPoly<RatFunc>; 2]; 2], UPoly<RatFunc>, UPoly<RatFunc>, UPoly<RatFunc>) = match case {
        FamilyCase::Origin => {
            let at = |p: &BiPoly<RatFunc>| upoly_const(p.eval(&zero, &zero));
            let m = [[at(&jac[0][0]), at(&jac[0][1])], [at(&jac[1][0]), at(&jac[1][1])]];
            (m, UPoly::var(), upoly_const(alpha.clone()), upoly_const(beta.clone()))
        }
        FamilyCase::XAxis => {
            let at = |p: &BiPoly<RatFunc>| p.at_y(&zero);
            let m = [[at(&jac[0][0]), at(&jac[0][1])], [at(&jac[1][0]), at(&jac[1][1])]];
            let rel = monomial(RatFunc::one(), d as usize).add(&upoly_const(alpha.clone()));
            (m, rel, upoly_const(dd.times(&alpha)), upoly_const(alpha.minus(&beta)))
        }
        FamilyCase::YAxis => {
            let at = |p: &BiPoly<RatFunc>| p.at_x(&zero);
            let m = [[at(&jac[0][0]), at(&jac[0][1])], [at(&jac[1][0]), at(&jac[1][1])]];
            let rel = monomial(RatFunc::one(), d as usize)
                .add(&monomial(RatFunc::one(), d as usize - 1))
                .add(&upoly_const(beta.clone()));
            let yd = monomial(RatFunc::one(), d as usize);
            let (n, den) = match formula {
                Formula::Stated => (
                    yd.scale(&rf(d as i64 + 1)).add(&upoly_const(alpha.clone())).neg(),
                    yd.add(&upoly_const(dd.times(&beta))),
                ),
                Formula::Recomputed => (
                    yd.add(&upoly_const(alpha.clone())),
                    yd.scale(&dd).add(&monomial(rf(d as i64 - 1), d as usize - 1)),
                ),
            };
            (m, rel, n, den)
        }
        FamilyCase::Interior => {
            return Err(FoliageError::input("the interior stratum has two relations; use the numerical check"));
        }
    };
    let r = quotient_relation(&m, &n, &den);
    let holds = r.divrem(&relation).1.is_zero() && !den.divrem(&relation).1.is_zero();
    Ok(SymbolicCheck { case, d, formula, holds })
}

/// Outcome of the numerical check on the interior stratum.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericCheck {
    pub d: u32,
    pub formula: Formula,
    pub points: usize,
    /// Largest relative distance between the formula and the nearest of
    /// `λ₁/λ₂`, `λ₂/λ₁`, minimized over the sign of the square root.
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl NumericCheck {
    pub fn holds(&self) -> bool {
        self.max_deviation <= self.tolerance
    }
}

fn cx(x: f64) -> Cx {
    cx_f64(x, 0.0)
}

fn cpow(z: Cx, k: u32) -> Cx {
    (0..k).fold(cx(1.0), |acc, _| acc * z)
}

/// Evaluates the interior-stratum formula at every interior singular point
/// for `α = √a2`, `β = √b2` and compares with the Jacobian eigenvalues.
pub fn check_interior_numeric(d: u32, a2: u32, b2: u32, formula: Formula, tolerance: f64) -> Result<NumericCheck> {
    if d < 2 {
        return Err(FoliageError::input("the family needs d ≥ 2"));
    }
    let alpha = Cx::new(Dd::from_f64(a2 as f64).sqrt(), Dd::default());
    let beta = Cx::new(Dd::from_f64(b2 as f64).sqrt(), Dd::default());
    let (a, b) = family_field(d);
    let lift = |p: &BiPoly<RatFunc>| -> BiPoly<Cx> { p.map(|c| c.eval_cx(&alpha, &beta).expect("defined")) };
    let (ac, bc) = (lift(&a), lift(&b));
    let jac = [[ac.partial_x(), ac.partial_y()], [bc.partial_x(), bc.partial_y()]];
    let df = cx(d as f64);
    let d1 = cx(d as f64 - 1.0);
    let mut y_rel = vec![<Cx as Ring>::zero(); d as usize];
    y_rel[0] = -(alpha - beta);
    y_rel[d as usize - 1] = cx(1.0);
    let mut worst = 0.0f64;
    let mut points = 0;
    for y0 in complex_roots(&UPoly::new(y_rel)) {
        let y0 = y0.value;
        let mut x_rel = vec![<Cx as Ring>::zero(); d as usize + 1];
        x_rel[0] = alpha + cpow(y0, d);
        x_rel[d as usize] = cx(1.0);
        for x0 in complex_roots(&UPoly::new(x_rel)) {
            let x0 = x0.value;
            points += 1;
            let m = [
                [jac[0][0].eval(&x0, &y0), jac[0][1].eval(&x0, &y0)],
                [jac[1][0].eval(&x0, &y0), jac[1][1].eval(&x0, &y0)],
            ];
            let tr = m[0][0] + m[1][1];
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            let r = csqrt(&(tr * tr - det * cx(4.0)));
            let (l1, l2) = ((tr + r) * cx(0.5), (tr - r) * cx(0.5));
            let engine = [l1 / l2, l2 / l1];
            let s = alpha + d1 * beta;
            let radicand = cpow(cx(2.0 * d as f64 - 1.0) * alpha - d1 * beta, 2)
                + cx(4.0) * df * d1 * cpow(alpha - beta, 2) * y0;
            let root = csqrt(&radicand);
            let kk = df * d1 * (alpha - beta) * (alpha + (alpha - beta) * y0);
            let candidates: Vec<Cx> = [root, -root]
                .iter()
                .map(|&rt| match formula {
                    Formula::Stated => cx(-1.0) + s * rt / (cx(2.0) * kk),
                    Formula::Recomputed => cx(-1.0) - s * s / (cx(2.0) * kk) + s * rt / (cx(2.0) * kk),
                })
                .collect();
            let best = candidates
                .iter()
                .flat_map(|c| engine.iter().map(move |e| cabs(&(*c - *e)).to_f64() / (1.0 + cabs(e).to_f64())))
                .fold(f64::INFINITY, f64::min);
            worst = worst.max(best);
        }
    }
    Ok(NumericCheck { d, formula, points, max_deviation: worst, tolerance })
}

/// The lift `α(z², y)·∂z + 2z·β(z², y)·∂y` of a germ `α·∂x + β·∂y` to the
/// double cover `z² = x` branched along `x = 0`.
pub fn double_cover_lift(alpha: &BiPoly<Rational>, beta: &BiPoly<Rational>) -> (BiPoly<Rational>, BiPoly<Rational>) {
    let z2 = BiPoly::x().mul(&BiPoly::x());
    let y = BiPoly::y();
    let a = alpha.compose(&z2, &y);
    let b = BiPoly::x().scale(&int(2)).mul(&beta.compose(&z2, &y));
    (a, b)
}

/// Classifies the lifted field at the origin when the branch line `x = 0` has
/// a simple tangency with a smooth germ there.
pub fn branched_tangency_class(alpha: &BiPoly<Rational>, beta: &BiPoly<Rational>) -> Result<LinearClass<Rational>> {
    let zero = <Rational as Ring>::zero();
    if !Ring::is_zero(&alpha.eval(&zero, &zero)) || Ring::is_zero(&alpha.coeff(0, 1)) {
        return Err(FoliageError::input("the branch line must have tangency order exactly 1"));
    }
    if Ring::is_zero(&beta.eval(&zero, &zero)) {
        return Err(FoliageError::input("the germ must be smooth at the tangency point"));
    }
    let (a, b) = double_cover_lift(alpha, beta);
    let m = [[a.coeff(1, 0), a.coeff(0, 1)], [b.coeff(1, 0), b.coeff(0, 1)]];
    Ok(classify_exact(&m))
}
