use std::cmp::Ordering;

use foliage::bounds::{cmp_radical, Radical};
use foliage::numeric::linalg::{determinant, mat_vec};
use foliage::numeric::{int, rat, resultant_eliminate, solve_linear_system, BiPoly, QuadExt, Rational, Ring, Variable};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=7).prop_map(|(p, q)| rat(p, q))
}

fn quad(m: u64) -> impl Strategy<Value = QuadExt> {
    (small_rat(), small_rat()).prop_map(move |(a, b)| QuadExt::new(a, b, m))
}

fn radicand() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 6, 7, 10])
}

proptest! {
    #[test]
    fn quadratic_norm_is_multiplicative((x, y) in radicand().prop_flat_map(|m| (quad(m), quad(m)))) {
        prop_assert_eq!(x.times(&y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn quadratic_inverse((x, m) in radicand().prop_flat_map(|m| (quad(m), Just(m)))) {
        prop_assume!(!x.is_zero());
        let inv = foliage::numeric::Field::recip(&x).unwrap();
        prop_assert_eq!(x.times(&inv), QuadExt::one());
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
        let approx = x.to_dd().to_f64();
        let a = f64_of(&x.a) + f64_of(&x.b) * (m as f64).sqrt();
        prop_assert!((approx - a).abs() <= 1e-12 * (1.0 + a.abs()));
    }

    #[test]
    fn resultant_vanishes_at_common_root(
        x0 in -4i64..=4, y0 in -4i64..=4,
        a in prop::collection::vec(-3i64..=3, 3), b in prop::collection::vec(-3i64..=3, 3),
    ) {
        let x = BiPoly::<Rational>::x();
        let y = BiPoly::<Rational>::y();
        let lx = x.sub(&BiPoly::constant(int(x0)));
        let ly = y.sub(&BiPoly::constant(int(y0)));
        let p = lx.mul(&BiPoly::constant(int(1)).add(&y.scale(&int(a[0])))).add(&ly.scale(&int(a[1])));
        let q = lx.mul(&x.scale(&int(b[0] * b[0] + 1)).add(&BiPoly::constant(int(b[1])))).add(&ly.mul(&ly).scale(&int(b[2])));
        prop_assume!(!p.is_constant() && !q.is_constant());
        let rx = resultant_eliminate(&p, &q, Variable::First).unwrap();
        prop_assert!(rx.eval(&int(y0)).is_zero());
        let ry = resultant_eliminate(&p, &q, Variable::Second).unwrap();
        prop_assert!(ry.eval(&int(x0)).is_zero());
    }

    #[test]
    fn linear_solve_round_trip(entries in prop::collection::vec(-6i64..=6, 9), rhs in prop::collection::vec(-6i64..=6, 3)) {
        let m: Vec<Vec<Rational>> = entries.chunks(3).map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        let b: Vec<Rational> = rhs.iter().map(|&v| int(v)).collect();
        let det = determinant(&m);
        match solve_linear_system(&m, &b).unwrap().unique() {
            Some(x) => {
                prop_assert!(!det.is_zero());
                prop_assert_eq!(mat_vec(&m, &x), b);
            }
            None => prop_assert!(det.is_zero()),
        }
    }

    #[test]
    fn radical_comparison_agrees_with_floats(
        lhs in small_rat(), base in small_rat(), coef in small_rat(), n in 0i64..=50,
    ) {
        let r = Radical { base: base.clone(), coef: coef.clone(), radicand: n };
        let exact = cmp_radical(&lhs, &r);
        let approx = f64_of(&lhs) - (f64_of(&base) + f64_of(&coef) * (n as f64).sqrt());
        if approx.abs() > 1e-9 {
            let expected = if approx > 0.0 { Ordering::Greater } else { Ordering::Less };
            prop_assert_eq!(exact, expected);
        }
        let on = r.to_quadext();
        prop_assert!((on.to_dd().to_f64() - r.to_f64()).abs() < 1e-12);
    }
}

fn f64_of(q: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(q).unwrap()
}

#[test]
fn radical_equality_is_detected_exactly() {
    let r = Radical { base: int(1), coef: int(2), radicand: 8 };
    let lhs = int(1) + int(4) * int(2);
    assert_eq!(cmp_radical(&lhs, &Radical { base: int(1), coef: int(4), radicand: 4 }), Ordering::Equal);
    assert_eq!(cmp_radical(&int(1), &r), Ordering::Less);
    assert_eq!(cmp_radical(&int(7), &r), Ordering::Greater);
}
