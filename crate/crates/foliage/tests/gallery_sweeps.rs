use foliage::bounds::Status;
use foliage::gallery::{build_example, verify_example, CompareStatus, GalleryId, VerificationReport};
use foliage::numeric::{int, Rational};

fn verify(id: GalleryId) -> VerificationReport {
    let case = build_example(id).unwrap_or_else(|e| panic!("{id}: {e}"));
    verify_example(&case).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn engine(r: &VerificationReport, q: &str) -> Rational {
    r.get(q).and_then(|c| c.engine.clone()).unwrap_or_else(|| panic!("{} has no engine {q}", r.id))
}

fn assert_closed_forms(r: &VerificationReport, vol: i64, pg: i64) {
    assert_eq!(engine(r, "vol"), int(vol), "{} vol", r.id);
    assert_eq!(engine(r, "pg"), int(pg), "{} pg", r.id);
    assert!(r.all_match(), "{}: {:?}", r.id, r.quantities);
    assert!(r.axioms.holds(), "{}: {:?}", r.id, r.axioms);
    assert!(r.curve_checks.iter().all(|c| c.consistent), "{}: {:?}", r.id, r.curve_checks);
}

#[test]
fn hirzebruch_double_covers() {
    for n in 0..=2i64 {
        for m in [3 * n + 1, 3 * n + 2, 3 * n + 4] {
            for k in 1..=3 {
                let r = verify(GalleryId::Ex3_1 { m, n, k });
                assert_closed_forms(&r, k * (4 * m - 6 * n), 2 * m - 3 * n + 2);
                if k == 1 {
                    assert_eq!(r.bounds.status("(1.3)"), Some(Status::Equality), "{}", r.id);
                }
            }
        }
    }
}

#[test]
fn base_change_scales_volume() {
    for (m, n) in [(4, 1), (7, 2), (5, 0)] {
        let base = engine(&verify(GalleryId::Ex3_1 { m, n, k: 1 }), "vol");
        for k in 1..=4 {
            let v = engine(&verify(GalleryId::Ex3_1 { m, n, k }), "vol");
            assert_eq!(v, &base * int(k), "m={m} n={n} k={k}");
        }
    }
}

#[test]
fn plane_cyclic_covers() {
    for d in 1..=6 {
        let r = verify(GalleryId::Ex3_2 { d });
        assert_closed_forms(&r, d, 3);
        assert_eq!(r.bounds.status("(1.3)"), Some(Status::Equality), "d={d}");
        assert_eq!(r.bounds.status("(1.3')"), Some(Status::Equality), "d={d}");
    }
}

#[test]
fn k3_double_planes() {
    for d in 1..=6 {
        let r = verify(GalleryId::Ex3_3 { d });
        let pg = d * d + 4 * d + 6;
        assert_closed_forms(&r, 2 * (d + 2) * (d + 2), pg);
        assert_eq!(engine(&r, "vol"), int(2 * pg - 4));
        assert_eq!(engine(&r, "KS2"), int(0));
        assert_eq!(r.bounds.status("(1.5)"), Some(Status::Equality));
    }
}

#[test]
fn k3_canonical_class_is_pulled_back() {
    for d in 1..=4 {
        let case = build_example(GalleryId::Ex3_3 { d }).unwrap();
        let l = &case.model.lattice;
        let h = l.generator("p*H").unwrap();
        assert_eq!(case.model.kf, h.scaled(&int(d + 2)), "d={d}");
        assert_eq!(l.square(&l.canonical_class()).unwrap(), int(0));
    }
}

#[test]
fn one_two_surface_covers() {
    for d in 2..=6 {
        let r = verify(GalleryId::Ex3_4 { d });
        let pg = 2 * d * d + 9 * d + 13;
        assert_closed_forms(&r, (2 * d + 5) * (2 * d + 5), pg);
        assert_eq!(8 * pg - 23, (4 * d + 9) * (4 * d + 9));
        assert_eq!(engine(&r, "KS2"), int(1));
        assert_eq!(r.bounds.status("(1.5-2)"), Some(Status::Equality));
    }
}

#[test]
fn genus_fibrations() {
    for g in 2..=4 {
        for n in [2, 4, 6] {
            let r = verify(GalleryId::Ex6_4 { g, n });
            assert_closed_forms(&r, 2 * (g - 1) * g * n, n);
        }
    }
}

#[test]
fn product_examples_report_volume_side_by_side() {
    for gb in 2..=4 {
        for m in 1..=3 {
            for g in 2..=3 {
                let r = verify(GalleryId::Ex6_5 { gb, m, g });
                let vol = r.get("vol").unwrap();
                assert_eq!(vol.engine, Some(int(4 * gb - 4 + 2 * m)));
                assert_eq!(vol.paper, Some(int(4 * gb - 4)));
                assert_eq!(vol.status, CompareStatus::Finding);
                assert_eq!(engine(&r, "KS2"), int(4 * (g - 1) * (2 * gb - 2 + m)));
                assert_eq!(engine(&r, "d"), int(1));
                assert!(r.axioms.holds());
                assert!(r.all_match());
            }
        }
    }
}

#[test]
fn universal_bound_on_the_gallery() {
    for id in foliage::gallery::acceptance_cases() {
        let r = verify(id);
        let status = r.bounds.status("(1.12)").unwrap();
        assert_ne!(status, Status::Violated, "{id}");
        if id == (GalleryId::Ex3_2 { d: 1 }) {
            assert_eq!(status, Status::Equality);
        } else {
            assert_eq!(status, Status::Holds, "{id}");
        }
    }
}
