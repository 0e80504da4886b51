use foliage::numeric::{int, BiPoly, QuadExt, Rational};
use foliage::plane::blowup::reduce_germ;
use foliage::plane::{classify_exact, Classification, PlaneFoliation, Quotient, DEFAULT_DEPTH_CAP};
use num_traits::Signed;
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = i64> {
    -6i64..=6
}

fn matrix() -> impl Strategy<Value = [[Rational; 2]; 2]> {
    (entry(), entry(), entry(), entry()).prop_map(|(a, b, c, d)| [[int(a), int(b)], [int(c), int(d)]])
}

fn q(c: i64) -> QuadExt {
    QuadExt::rational(int(c))
}

fn poly(coeffs: &[((u32, u32), i64)]) -> BiPoly<QuadExt> {
    BiPoly::from_terms(coeffs.iter().map(|&(e, c)| (e, q(c))))
}

proptest! {
    #[test]
    fn classification_is_invariant_under_scaling(m in matrix(), s in prop::sample::select(vec![-3i64, -2, -1, 2, 5])) {
        let scaled = [[&m[0][0] * int(s), &m[0][1] * int(s)], [&m[1][0] * int(s), &m[1][1] * int(s)]];
        let a = classify_exact(&m);
        let b = classify_exact(&scaled);
        prop_assert_eq!(a.classification, b.classification);
        prop_assert_eq!(a.quotient, b.quotient);
    }

    #[test]
    fn classification_is_invariant_under_conjugation(m in matrix(), t in entry()) {
        let p = [[int(1), int(t)], [int(0), int(1)]];
        let pinv = [[int(1), int(-t)], [int(0), int(1)]];
        let mul = |x: &[[Rational; 2]; 2], y: &[[Rational; 2]; 2]| -> [[Rational; 2]; 2] {
            let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
            [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
        };
        let conj = mul(&mul(&p, &m), &pinv);
        prop_assert_eq!(classify_exact(&m).classification, classify_exact(&conj).classification);
    }

    #[test]
    fn diagonal_classification_matches_eigenvalue_rule(l1 in entry(), l2 in entry()) {
        let m = [[int(l1), int(0)], [int(0), int(l2)]];
        let expected = match (l1 == 0, l2 == 0) {
            (true, true) => Classification::NonReduced,
            (true, false) | (false, true) => Classification::SaddleNode,
            _ if (l1 > 0) == (l2 > 0) => Classification::NonReduced,
            _ => Classification::ReducedNondegenerate,
        };
        let c = classify_exact(&m);
        prop_assert_eq!(c.classification, expected);
        if l1 != 0 && l2 != 0 {
            let ratio = int(l1) / int(l2);
            let Quotient::InField(got) = c.quotient else { panic!("rational eigenvalues") };
            let inv = int(l2) / int(l1);
            prop_assert!(got == ratio || got == inv);
            prop_assert!(got.abs() >= int(1));
        }
    }

    #[test]
    fn hamiltonian_field_preserves_its_level_curves(
        c in prop::collection::vec(-3i64..=3, 6),
    ) {
        let h = poly(&[((2, 0), c[0]), ((1, 1), c[1]), ((0, 2), c[2]), ((1, 0), c[3]), ((0, 1), c[4]), ((3, 0), 1)]);
        let a = h.partial_y();
        let b = h.partial_x().neg();
        let f = PlaneFoliation::new(a, b, 0);
        prop_assume!(f.is_ok());
        let f = f.unwrap();
        prop_assert!(f.is_invariant_curve(&h));
        let shifted = h.add(&BiPoly::constant(q(c[5] * c[5] + 1)));
        prop_assert!(f.is_invariant_curve(&shifted));
        prop_assert!(f.apply(&h).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generic_quadratic_field_has_seven_points(
        c in prop::collection::vec(1i64..=9, 10),
    ) {
        let a = poly(&[((0, 0), c[0]), ((1, 0), c[1]), ((0, 1), -c[2]), ((2, 0), c[3]), ((1, 1), -c[4])]);
        let b = poly(&[((0, 0), -c[5]), ((1, 0), c[6]), ((0, 1), c[7]), ((0, 2), c[8]), ((2, 0), -c[9])]);
        let f = PlaneFoliation::new(a, b, 0);
        prop_assume!(f.is_ok());
        let f = f.unwrap();
        prop_assume!(f.degree() == 2);
        let sings = f.find_singularities().unwrap();
        prop_assert_eq!(sings.iter().map(|s| s.multiplicity).sum::<usize>(), 7);
    }
}

#[test]
fn linear_fields_have_three_points() {
    for (a11, a12, a21, a22) in [(1, 0, 0, -1), (2, 1, 0, -3), (1, 1, -1, 1), (0, 1, -1, 0)] {
        let a = poly(&[((1, 0), a11), ((0, 1), a12)]);
        let b = poly(&[((1, 0), a21), ((0, 1), a22)]);
        let f = PlaneFoliation::new(a, b, 0).unwrap();
        assert_eq!(f.degree(), 1);
        assert_eq!(f.singularity_count().unwrap(), 3, "{a11} {a12} {a21} {a22}");
    }
}

#[test]
fn saddle_germ_needs_no_blowup() {
    let node = reduce_germ(&(poly(&[((1, 0), 1)]), poly(&[((0, 1), -1)])), 0, "root".into(), 0, DEFAULT_DEPTH_CAP).unwrap();
    assert_eq!(node.blowup_count(), 0);
    assert_eq!(node.classification, Classification::ReducedNondegenerate);
}

#[test]
fn resonant_node_is_resolved() {
    let node = reduce_germ(&(poly(&[((1, 0), 1)]), poly(&[((0, 1), 2)])), 0, "root".into(), 0, DEFAULT_DEPTH_CAP).unwrap();
    assert!(node.blowup_count() >= 1);
    assert!(node.leaves().iter().all(|l| l.classification.is_reduced()));
    assert_eq!(node.kf_coefficients().last(), Some(&-1));
}
