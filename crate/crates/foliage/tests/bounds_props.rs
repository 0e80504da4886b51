use std::collections::BTreeSet;

use foliage::bounds::{
    castelnuovo_bound, catalog_ids, evaluate_bounds, weighted_image_bounds, ImageRecord, InvariantRecord, MapKind,
    SpecialFlag, Status, SurfaceClass,
};
use foliage::numeric::{int, rat, Rational};
use proptest::prelude::*;

fn surface_class() -> impl Strategy<Value = SurfaceClass> {
    prop::sample::select(vec![
        SurfaceClass::Rational,
        SurfaceClass::RuledIrrational,
        SurfaceClass::NonRuled,
        SurfaceClass::GeneralType,
        SurfaceClass::K3,
        SurfaceClass::Unknown,
    ])
}

fn map_kind() -> impl Strategy<Value = MapKind> {
    prop_oneof![
        (1i64..=4).prop_map(|degree| MapKind::GenericallyFinite { degree }),
        (1i64..=4, 0i64..=4, 0i64..=3, any::<bool>(), any::<bool>()).prop_map(|(d, gf, gb, tangent, h0)| {
            let tangent = tangent && gf >= 2;
            MapKind::Fibration {
                d: if tangent { 2 * gf - 2 } else { d },
                fiber_genus: gf,
                base_genus: gb,
                tangent_to_fibers: tangent,
                fiber_h0_one: h0,
            }
        }),
        Just(MapKind::Unknown),
    ]
}

fn record() -> impl Strategy<Value = InvariantRecord> {
    (1i64..=200, 1i64..=6, 3i64..=20, map_kind(), surface_class(), any::<bool>(), any::<bool>(), 1i64..=40, any::<bool>())
        .prop_map(|(p, q, pg, map, class, reduced, integrable, deg, ten)| {
            let mut r = InvariantRecord::new(rat(p, q), pg, map, class).integrable(integrable);
            r.reduced = reduced;
            let flags: BTreeSet<SpecialFlag> = if ten { [SpecialFlag::Is10Surface].into() } else { BTreeSet::new() };
            r.with_image(ImageRecord { degree: deg, class, flags })
        })
}

fn rank(s: Option<Status>) -> u8 {
    match s {
        Some(Status::Violated) => 0,
        Some(Status::Equality) => 1,
        Some(Status::Holds) | None => 2,
    }
}

proptest! {
    #[test]
    fn raising_volume_never_worsens_a_bound(r in record(), bump in 1i64..=50) {
        let before = evaluate_bounds(&r).unwrap();
        let mut higher = r.clone();
        higher.vol = &r.vol + int(bump);
        let after = evaluate_bounds(&higher).unwrap();
        for (a, b) in before.entries.iter().zip(&after.entries) {
            prop_assert_eq!(a.applicable, b.applicable);
            prop_assert!(rank(b.status) >= rank(a.status), "{} {:?} -> {:?}", a.id, a.status, b.status);
        }
        for (a, b) in weighted_image_bounds(&r).unwrap().iter().zip(&weighted_image_bounds(&higher).unwrap()) {
            prop_assert!(rank(b.status) >= rank(a.status));
        }
    }

    #[test]
    fn universal_bound_matches_direct_comparison(r in record()) {
        let report = evaluate_bounds(&r).unwrap();
        let rhs = int(r.pg - 2);
        let expected = match r.vol.cmp(&rhs) {
            std::cmp::Ordering::Greater => Status::Holds,
            std::cmp::Ordering::Equal => Status::Equality,
            std::cmp::Ordering::Less => Status::Violated,
        };
        prop_assert_eq!(report.status("(1.12)"), Some(expected));
        prop_assert_eq!(report.entries.len(), 19);
    }

    #[test]
    fn castelnuovo_for_plane_curves(d in 2i64..=30) {
        prop_assert_eq!(castelnuovo_bound(d, 3).unwrap(), (d - 1) * (d - 2) / 2);
    }
}

#[test]
fn catalog_ids_are_distinct() {
    let ids = catalog_ids();
    let set: BTreeSet<_> = ids.iter().collect();
    assert_eq!(set.len(), ids.len());
}

#[test]
fn twisted_cubic_genus() {
    assert_eq!(castelnuovo_bound(3, 4).unwrap(), 0);
    assert_eq!(castelnuovo_bound(4, 4).unwrap(), 1);
    assert!(castelnuovo_bound(2, 4).is_err());
}

#[test]
fn invalid_records_are_rejected() {
    let bad = InvariantRecord::new(Rational::from_integer(0.into()), 4, MapKind::Unknown, SurfaceClass::Unknown);
    assert!(evaluate_bounds(&bad).is_err());
    let low = InvariantRecord::new(int(5), 2, MapKind::GenericallyFinite { degree: 1 }, SurfaceClass::Unknown);
    assert!(evaluate_bounds(&low).is_err());
}
