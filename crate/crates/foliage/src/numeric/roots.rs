use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::dd::{cabs, Cx, Dd};
use super::quadext::QuadExt;
use super::scalar::{ExactField, Field, Rational, Ring};
use super::upoly::UPoly;

/// Largest denominator accepted by continued-fraction rational recognition.
pub const DENOMINATOR_CAP: i64 = 1_000_000;

/// A numerically located complex root with a certified inclusion radius.
#[derive(Clone, Debug)]
pub struct ApproxRoot {
    pub value: Cx,
    pub radius: f64,
}

fn horner_with_derivative(p: &[Cx], z: &Cx) -> (Cx, Cx) {
    let mut val = <Cx as Ring>::zero();
    let mut der = <Cx as Ring>::zero();
    for c in p.iter().rev() {
        der = der * *z + val;
        val = val * *z + *c;
    }
    (val, der)
}

/// All complex roots of a polynomial by the Aberth–Ehrlich iteration.
///
/// Intended for square-free input; clustered roots converge slowly and are
/// reported with a correspondingly large radius.
pub fn complex_roots(p: &UPoly<Cx>) -> Vec<ApproxRoot> {
    let Some(n) = p.degree() else {
        return Vec::new();
    };
    if n == 0 {
        return Vec::new();
    }
    let lead = p.lead();
    let coeffs: Vec<Cx> = p.coeffs().iter().map(|c| *c / lead).collect();
    let bound = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| cabs(c).to_f64())
            .fold(0.0f64, f64::max);
    let mut z: Vec<Cx> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            let r = 0.5 * bound;
            Cx::new(Dd::from_f64(r * theta.cos()), Dd::from_f64(r * theta.sin()))
        })
        .collect();
    for _ in 0..800 {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let (v, d) = horner_with_derivative(&coeffs, &z[k]);
            if Ring::is_zero(&v) {
                continue;
            }
            let ratio = v / d;
            let mut s = <Cx as Ring>::zero();
            for j in 0..n {
                if j != k {
                    s = s + Cx::new(Dd::from_f64(1.0), Dd::zero()) / (z[k] - z[j]);
                }
            }
            let w = ratio / (Cx::new(Dd::from_f64(1.0), Dd::zero()) - ratio * s);
            z[k] = z[k] - w;
            let rel = cabs(&w).to_f64() / (1.0 + cabs(&z[k]).to_f64());
            max_step = max_step.max(rel);
        }
        if max_step < 1e-30 {
            break;
        }
    }
    z.into_iter()
        .map(|r| {
            let (v, d) = horner_with_derivative(&coeffs, &r);
            let radius = if Ring::is_zero(&v) {
                0.0
            } else {
                (n as f64) * cabs(&v).to_f64() / cabs(&d).to_f64()
            };
            ApproxRoot { value: r, radius }
        })
        .collect()
}

/// Best rational approximation with denominator at most `cap`, accepted only
/// when it agrees with `x` to near working precision.
pub fn recognize_rational(x: Dd, cap: i64) -> Option<Rational> {
    if x.is_nan() {
        return None;
    }
    let tol = 1e-24 * (1.0 + x.abs().to_f64());
    let (mut p0, mut q0) = (BigInt::from(1), BigInt::from(0));
    let (mut p1, mut q1) = (BigInt::from(0), BigInt::from(1));
    let mut y = x;
    for _ in 0..64 {
        let a = y.trunc();
        let a = if y < a { a - Dd::from_f64(1.0) } else { a };
        let ai = BigInt::from(a.hi as i64) + BigInt::from(a.lo as i64);
        let p2 = &ai * &p0 + &p1;
        let q2 = &ai * &q0 + &q1;
        if q2 > BigInt::from(cap) {
            return None;
        }
        let cand = Rational::new(p2.clone(), q2.clone());
        let err = (Dd::from_rational(&cand) - x).abs().to_f64();
        if err <= tol {
            return Some(cand);
        }
        p1 = p0;
        q1 = q0;
        p0 = p2;
        q0 = q2;
        let frac = y - a;
        if frac.abs().to_f64() < 1e-30 {
            return None;
        }
        y = Dd::from_f64(1.0) / frac;
    }
    None
}

/// Exact fields whose roots inside the field can be recovered from numerical
/// approximations and then verified.
pub trait RootField: ExactField {
    /// Distinct roots lying in the field of a square-free polynomial. `ctx` is
    /// the radicand of the working quadratic field, or 0 for ℚ.
    fn field_roots(p: &UPoly<Self>, ctx: u64) -> Vec<Self>;

    /// Complex approximation of a polynomial.
    fn approx_poly(p: &UPoly<Self>) -> UPoly<Cx> {
        p.map(|c| c.approx().expect("numeric coefficient"))
    }
}

fn is_real(r: &ApproxRoot) -> bool {
    r.value.im.abs().to_f64() <= 1e-20 * (1.0 + cabs(&r.value).to_f64()) + r.radius
}

impl RootField for Rational {
    fn field_roots(p: &UPoly<Self>, _ctx: u64) -> Vec<Self> {
        let mut out: Vec<Rational> = Vec::new();
        if p.degree() == Some(1) {
            return vec![-p.coeff(0) / p.coeff(1)];
        }
        for r in complex_roots(&Self::approx_poly(p)) {
            if !is_real(&r) {
                continue;
            }
            if let Some(q) = recognize_rational(r.value.re, DENOMINATOR_CAP) {
                if Ring::is_zero(&p.eval(&q)) && !out.contains(&q) {
                    out.push(q);
                }
            }
        }
        out
    }
}

impl RootField for QuadExt {
    fn field_roots(p: &UPoly<Self>, ctx: u64) -> Vec<Self> {
        let m = p.coeffs().iter().find(|c| !c.is_rational()).map_or(ctx, |c| c.m);
        if p.degree() == Some(1) {
            return vec![p.coeff(0).negate().divide(&p.coeff(1)).unwrap()];
        }
        let roots = complex_roots(&Self::approx_poly(p));
        let mut out: Vec<QuadExt> = Vec::new();
        let mut push = |q: QuadExt| {
            if Ring::is_zero(&p.eval(&q)) && !out.contains(&q) {
                out.push(q);
            }
        };
        if m == 0 {
            for r in roots.iter().filter(|r| is_real(r)) {
                if let Some(a) = recognize_rational(r.value.re, DENOMINATOR_CAP) {
                    push(QuadExt::rational(a));
                }
            }
            return out;
        }
        let conj = p.map(QuadExt::conjugate);
        let conj_roots = complex_roots(&Self::approx_poly(&conj));
        let sqrt_m = Dd::from_f64(m as f64).sqrt();
        let half = Dd::from_f64(0.5);
        for r in roots.iter().filter(|r| is_real(r)) {
            if let Some(a) = recognize_rational(r.value.re, DENOMINATOR_CAP) {
                push(QuadExt::rational(a));
            }
            for s in conj_roots.iter().filter(|s| is_real(s)) {
                let a = recognize_rational((r.value.re + s.value.re) * half, DENOMINATOR_CAP);
                let b = recognize_rational((r.value.re - s.value.re) * half / sqrt_m, DENOMINATOR_CAP);
                if let (Some(a), Some(b)) = (a, b) {
                    if !Ring::is_zero(&b) {
                        push(QuadExt::new(a, b, m));
                    }
                }
            }
        }
        out
    }
}

/// Newton refinement of a root of `p` starting at `z`.
pub fn polish(p: &UPoly<Cx>, z: Cx) -> ApproxRoot {
    let coeffs = p.coeffs().to_vec();
    let mut z = z;
    for _ in 0..8 {
        let (v, d) = horner_with_derivative(&coeffs, &z);
        if Ring::is_zero(&v) || Ring::is_zero(&d) {
            break;
        }
        z = z - v / d;
    }
    let (v, d) = horner_with_derivative(&coeffs, &z);
    let n = p.degree().unwrap_or(1) as f64;
    let radius = if Ring::is_zero(&v) { 0.0 } else { n * cabs(&v).to_f64() / cabs(&d).to_f64() };
    ApproxRoot { value: z, radius }
}

/// Lifts a rational polynomial to complex coefficients.
pub fn to_cx_poly<F: ExactField>(p: &UPoly<F>) -> Option<UPoly<Cx>> {
    let coeffs: Option<Vec<Cx>> = p.coeffs().iter().map(|c| c.approx()).collect();
    coeffs.map(UPoly::new)
}

pub fn is_negative_rational(q: &Rational) -> bool {
    q.is_negative()
}

pub fn cx_is_field_zero(z: &Cx) -> bool {
    Field::recip(z).is_none()
}
