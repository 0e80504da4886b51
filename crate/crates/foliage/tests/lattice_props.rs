use foliage::lattice::{
    blow_up, chi_of_class, cover_pullback, finite_cover, h0_closed_form, make_surface, SurfaceLattice, SurfaceSpec,
};
use foliage::numeric::{int, Rational};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn base_surface() -> impl Strategy<Value = SurfaceLattice> {
    prop_oneof![
        Just(SurfaceSpec::ProjectivePlane),
        (0u32..=4).prop_map(SurfaceSpec::Hirzebruch),
        (0u32..=4).prop_map(SurfaceSpec::ProductRuled),
    ]
    .prop_map(|s| make_surface(s).unwrap())
}

fn coords(rank: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, rank)
}

fn with_classes(k: usize) -> impl Strategy<Value = (SurfaceLattice, Vec<Vec<i64>>)> {
    base_surface().prop_flat_map(move |l| {
        let r = l.rank();
        (Just(l), prop::collection::vec(coords(r), k))
    })
}

proptest! {
    #[test]
    fn pairing_is_symmetric_and_bilinear((l, v) in with_classes(3), a in -4i64..=4, b in -4i64..=4) {
        let (x, y, z) = (l.class_int(&v[0]), l.class_int(&v[1]), l.class_int(&v[2]));
        prop_assert_eq!(l.intersect(&x, &y).unwrap(), l.intersect(&y, &x).unwrap());
        let combo = x.scaled(&int(a)).plus(&y.scaled(&int(b)));
        let lhs = l.intersect(&combo, &z).unwrap();
        let rhs = int(a) * l.intersect(&x, &z).unwrap() + int(b) * l.intersect(&y, &z).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn riemann_roch_has_serre_symmetry((l, v) in with_classes(1)) {
        let d = l.class_int(&v[0]);
        let k_minus_d = l.canonical_class().minus(&d);
        prop_assert_eq!(chi_of_class(&l, &d).unwrap(), chi_of_class(&l, &k_minus_d).unwrap());
    }

    #[test]
    fn blow_up_pullback_preserves_pairing((l, v) in with_classes(2), count in 1usize..=4) {
        let up = blow_up(&l, count);
        let (x, y) = (l.class_int(&v[0]), l.class_int(&v[1]));
        let (px, py) = (up.pullback_from(&l, &x).unwrap(), up.pullback_from(&l, &y).unwrap());
        prop_assert_eq!(up.intersect(&px, &py).unwrap(), l.intersect(&x, &y).unwrap());
        for i in 1..=count {
            let e = up.generator(&format!("E{i}")).unwrap();
            prop_assert_eq!(up.intersect(&px, &e).unwrap(), int(0));
            prop_assert_eq!(up.square(&e).unwrap(), int(-1));
            prop_assert_eq!(up.canonical_dot(&e).unwrap(), int(-1));
        }
        let k2 = |s: &SurfaceLattice| s.square(&s.canonical_class()).unwrap();
        prop_assert_eq!(k2(&up), k2(&l) - int(count as i64));
        prop_assert_eq!(&up.chi, &l.chi);
    }

    #[test]
    fn cover_pullback_scales_pairing((l, v) in with_classes(3), e in 2u32..=5) {
        let cover = finite_cover(&l, e, &l.class_int(&v[2]), &[]).unwrap();
        let (x, y) = (l.class_int(&v[0]), l.class_int(&v[1]));
        let px = cover_pullback(&cover, &l, &x).unwrap();
        let py = cover_pullback(&cover, &l, &y).unwrap();
        prop_assert_eq!(cover.intersect(&px, &py).unwrap(), int(e as i64) * l.intersect(&x, &y).unwrap());
    }

    #[test]
    fn cover_chi_matches_eigensheaf_sum((l, v) in with_classes(1), e in 2u32..=5) {
        let half = l.class_int(&v[0]);
        let cover = finite_cover(&l, e, &half, &[]).unwrap();
        let mut expected = Rational::from_integer(0.into());
        for i in 0..e {
            expected += chi_of_class(&l, &half.scaled(&int(-(i as i64)))).unwrap();
        }
        prop_assert_eq!(&cover.chi, &expected);
    }

    #[test]
    fn closed_form_sections_match_riemann_roch_when_ample(n in 0u32..=4, a in 0i64..=6, extra in 0i64..=6) {
        let l = make_surface(SurfaceSpec::Hirzebruch(n)).unwrap();
        let d = l.class_int(&[a, a * n as i64 + extra]);
        let chi = chi_of_class(&l, &d).unwrap().to_i64().unwrap();
        prop_assert_eq!(h0_closed_form(&l, &d).unwrap() as i64, chi);
    }

    #[test]
    fn plane_sections_match_riemann_roch(k in -2i64..=12) {
        let l = make_surface(SurfaceSpec::ProjectivePlane).unwrap();
        let d = l.class_int(&[k]);
        let chi = chi_of_class(&l, &d).unwrap().to_i64().unwrap();
        prop_assert_eq!(h0_closed_form(&l, &d).unwrap() as i64, chi);
    }
}

#[test]
fn negative_section_is_rational() {
    for n in 0..5 {
        let l = make_surface(SurfaceSpec::Hirzebruch(n)).unwrap();
        let c0 = l.generator("C0").unwrap();
        assert_eq!(l.arithmetic_genus(&c0).unwrap(), int(0));
        assert_eq!(l.square(&l.canonical_class()).unwrap(), int(8));
    }
}

#[test]
fn product_ruled_invariants() {
    for g in 0..5 {
        let l = make_surface(SurfaceSpec::ProductRuled(g)).unwrap();
        assert_eq!(l.square(&l.canonical_class()).unwrap(), int(8 - 8 * g as i64));
        assert_eq!(l.chi, int(1 - g as i64));
    }
}
