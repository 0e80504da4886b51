use std::cmp::Ordering;

use num_traits::Signed;

use crate::numeric::dd::{cabs, csqrt, Cx, Dd};
use crate::numeric::roots::{recognize_rational, DENOMINATOR_CAP};
use crate::numeric::scalar::{int, ExactField, Ring};

/// Type of a singular point after the eigenvalue test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Classification {
    ReducedNondegenerate,
    SaddleNode,
    NonReduced,
    DicriticalAfterBlowup,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::ReducedNondegenerate => "reduced_nondegenerate",
            Classification::SaddleNode => "saddle_node",
            Classification::NonReduced => "non_reduced",
            Classification::DicriticalAfterBlowup => "dicritical_after_blowup",
        }
    }

    pub fn is_reduced(&self) -> bool {
        matches!(self, Classification::ReducedNondegenerate | Classification::SaddleNode)
    }
}

/// Whether a classification was decided exactly or numerically.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certainty {
    Exact,
    Numerical,
}

impl Certainty {
    pub fn name(&self) -> &'static str {
        match self {
            Certainty::Exact => "exact",
            Certainty::Numerical => "numerical",
        }
    }
}

/// Eigenvalues of the linear part.
#[derive(Clone, Debug, PartialEq)]
pub enum Eigenvalues<F> {
    InField(F, F),
    /// Roots of `t² − trace·t + det` lying outside the field.
    ConjugatePair { trace: F, det: F },
    Numeric(Cx, Cx),
}

/// The eigenvalue quotient `λ = λ₁/λ₂`, normalized up to reciprocal.
#[derive(Clone, Debug, PartialEq)]
pub enum Quotient<F> {
    InField(F),
    /// `λ` is a root of `t² − (κ − 2)·t + 1` with `κ = trace²/det`, outside the field.
    ViaKappa(F),
    Numeric(Cx),
    /// Both eigenvalues vanish.
    Undefined,
}

/// Outcome of classifying a linear part.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearClass<F> {
    pub eigenvalues: Eigenvalues<F>,
    pub quotient: Quotient<F>,
    pub classification: Classification,
    pub certainty: Certainty,
}

fn modulus_cmp_one<F: ExactField>(v: &F) -> Ordering {
    match v.approx() {
        Some(z) => cabs(&z).partial_cmp(&Dd::from_f64(1.0)).unwrap_or(Ordering::Equal),
        None => Ordering::Equal,
    }
}

fn normalize_quotient<F: ExactField>(num: &F, den: &F) -> F {
    let q = num.divide(den).expect("nonzero eigenvalue");
    if modulus_cmp_one(&q) == Ordering::Less && !q.is_zero() {
        q.recip().expect("nonzero")
    } else {
        q
    }
}

fn is_positive_rational<F: ExactField>(v: &F) -> bool {
    v.as_rational().is_some_and(|q| q.is_positive())
}

/// Classifies the linear part `[[a, b], [c, d]]` exactly.
///
/// With `κ = tr²/det`, the quotient is a positive rational exactly when `κ` is
/// a rational at least 4 with `κ(κ − 4)` a rational square.
pub fn classify_exact<F: ExactField>(m: &[[F; 2]; 2]) -> LinearClass<F> {
    let tr = m[0][0].plus(&m[1][1]);
    let det = m[0][0].times(&m[1][1]).minus(&m[0][1].times(&m[1][0]));
    let disc = tr.times(&tr).minus(&det.times(&F::from_int(4)));
    let root = disc.try_sqrt();
    let half = F::from_rational(&(int(1) / int(2)));
    let eigenvalues = match &root {
        Some(r) => Eigenvalues::InField(tr.plus(r).times(&half), tr.minus(r).times(&half)),
        None => Eigenvalues::ConjugatePair { trace: tr.clone(), det: det.clone() },
    };
    let exact = |quotient, classification| LinearClass {
        eigenvalues: eigenvalues.clone(),
        quotient,
        classification,
        certainty: Certainty::Exact,
    };
    if det.is_zero() {
        if tr.is_zero() {
            return exact(Quotient::Undefined, Classification::NonReduced);
        }
        return exact(Quotient::InField(F::zero()), Classification::SaddleNode);
    }
    if tr.is_zero() {
        return exact(Quotient::InField(F::from_int(-1)), Classification::ReducedNondegenerate);
    }
    match &eigenvalues {
        Eigenvalues::InField(l1, l2) => {
            let q = normalize_quotient(l1, l2);
            let class = if is_positive_rational(&q) {
                Classification::NonReduced
            } else {
                Classification::ReducedNondegenerate
            };
            exact(Quotient::InField(q), class)
        }
        _ => {
            let kappa = tr.times(&tr).divide(&det).expect("nonzero det");
            exact(Quotient::ViaKappa(kappa), Classification::ReducedNondegenerate)
        }
    }
}

/// Classifies a numerically known linear part; rationality of the quotient is
/// decided by continued fractions with denominators up to the cap.
pub fn classify_numeric(m: &[[Cx; 2]; 2]) -> LinearClass<Cx> {
    let scale = m.iter().flatten().map(|v| cabs(v).to_f64()).fold(0.0, f64::max).max(1e-300);
    let tol = 1e-18;
    let tr = m[0][0] + m[1][1];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let disc = tr * tr - det * Cx::from_int(4);
    let r = csqrt(&disc);
    let half = Cx::new(Dd::from_f64(0.5), Dd::from_f64(0.0));
    let (l1, l2) = ((tr + r) * half, (tr - r) * half);
    let numerical = |quotient, classification| LinearClass {
        eigenvalues: Eigenvalues::Numeric(l1, l2),
        quotient,
        classification,
        certainty: Certainty::Numerical,
    };
    let small = |z: &Cx, s: f64| cabs(z).to_f64() <= tol * s;
    if small(&det, scale * scale) {
        if small(&tr, scale) {
            return numerical(Quotient::Undefined, Classification::NonReduced);
        }
        return numerical(Quotient::Numeric(<Cx as Ring>::zero()), Classification::SaddleNode);
    }
    let (big, little) = if cabs(&l1) >= cabs(&l2) { (l1, l2) } else { (l2, l1) };
    let q = big / little;
    let real = q.im.abs().to_f64() <= 1e-15 * cabs(&q).to_f64();
    let positive_rational = real && q.re.hi > 0.0 && recognize_rational(q.re, DENOMINATOR_CAP).is_some();
    let class = if positive_rational {
        Classification::NonReduced
    } else {
        Classification::ReducedNondegenerate
    };
    numerical(Quotient::Numeric(q), class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::quadext::QuadExt;
    use crate::numeric::scalar::{rat, Rational};

    fn m(a: i64, b: i64, c: i64, d: i64) -> [[Rational; 2]; 2] {
        [[int(a), int(b)], [int(c), int(d)]]
    }

    #[test]
    fn radial_and_saddle() {
        assert_eq!(classify_exact(&m(1, 0, 0, 1)).classification, Classification::NonReduced);
        let s = classify_exact(&m(1, 0, 0, -1));
        assert_eq!(s.classification, Classification::ReducedNondegenerate);
        assert_eq!(s.quotient, Quotient::InField(int(-1)));
    }

    #[test]
    fn resonant_node_and_saddle_node() {
        assert_eq!(classify_exact(&m(1, 0, 0, 3)).classification, Classification::NonReduced);
        assert_eq!(classify_exact(&m(1, 0, 0, 0)).classification, Classification::SaddleNode);
        assert_eq!(classify_exact(&m(0, 1, 0, 0)).classification, Classification::NonReduced);
    }

    #[test]
    fn reciprocal_normalization() {
        let a = classify_exact(&m(2, 0, 0, -5));
        let b = classify_exact(&m(-5, 0, 0, 2));
        assert_eq!(a.quotient, Quotient::InField(rat(-5, 2)));
        assert_eq!(a.quotient, b.quotient);
    }

    #[test]
    fn irrational_quotient_in_quadratic_field() {
        let s2 = QuadExt::sqrt_of(2);
        let mat = [[s2.clone(), QuadExt::zero()], [QuadExt::zero(), QuadExt::one()]];
        let c = classify_exact(&mat);
        assert_eq!(c.classification, Classification::ReducedNondegenerate);
        assert_eq!(c.quotient, Quotient::InField(s2));
    }

    #[test]
    fn complex_pair_is_reduced() {
        let c = classify_exact(&m(1, -1, 1, 1));
        assert!(matches!(c.quotient, Quotient::ViaKappa(_)));
        assert_eq!(c.classification, Classification::ReducedNondegenerate);
    }

    #[test]
    fn numeric_agrees_with_exact() {
        let to_cx = |v: i64| Cx::from_int(v);
        for (a, b, c, d) in [(1, 0, 0, 1), (1, 0, 0, -1), (2, 1, 0, 6), (1, 0, 0, 0), (3, 1, -2, 5)] {
            let e = classify_exact(&m(a, b, c, d));
            let n = classify_numeric(&[[to_cx(a), to_cx(b)], [to_cx(c), to_cx(d)]]);
            assert_eq!(e.classification, n.classification, "{a} {b} {c} {d}");
            assert_eq!(n.certainty, Certainty::Numerical);
        }
    }
}
