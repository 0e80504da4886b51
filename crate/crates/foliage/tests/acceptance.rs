mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use foliage::bounds::{catalog_ids, Status};
use foliage::gallery::{acceptance_cases, build_example, verify_example, CompareStatus, GalleryId, VerificationReport};
use foliage::numeric::{int, rat, solve_linear_system, BiPoly, QuadExt, Rational, Ring};
use foliage::plane::blowup::reduce_germ;
use foliage::plane::formal::{check_interior_numeric, check_symbolic, FamilyCase, Formula};
use foliage::plane::{Certainty, Classification, PlaneFoliation, DEFAULT_DEPTH_CAP};
use foliage::zariski::{chain_negative_part, zariski_decompose, ChainSpec};
use num_traits::Signed;
use rand::Rng;

const GALLERY_BUDGET: Duration = Duration::from_secs(5);
const ZARISKI_BUDGET: Duration = Duration::from_secs(30);
const PRODUCT_BUDGET: Duration = Duration::from_secs(2);
const ZARISKI_TRIALS: usize = 200;
const CHAIN_TRIALS: usize = 500;
const INTERIOR_TOLERANCE: f64 = 1e-9;
const NILPOTENT_TREE: &str = "root[0](t=0[0](s=0[-1](t=0:reduced_nondegenerate, t=2/3:reduced_nondegenerate, s=0:reduced_nondegenerate)))";

/// One named sub-check of a criterion.
struct Check {
    name: String,
    ok: bool,
}

#[derive(Default)]
struct Checks {
    items: Vec<Check>,
    notes: Vec<String>,
}

impl Checks {
    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.items.push(Check { name: name.into(), ok });
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn report(n: usize, title: &str, budget: Option<Duration>, run: impl FnOnce(&mut Checks)) -> bool {
    let mut c = Checks::default();
    let start = Instant::now();
    run(&mut c);
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        c.check(format!("runtime {:.3}s < {}s", elapsed.as_secs_f64(), b.as_secs()), elapsed < b);
    }
    let failed: Vec<&Check> = c.items.iter().filter(|x| !x.ok).collect();
    let pass = failed.is_empty() && !c.items.is_empty();
    println!(
        "criterion {n:>2} {}  {title}  ({} checks, {} failed, {:.3}s)",
        if pass { "PASS" } else { "FAIL" },
        c.items.len(),
        failed.len(),
        elapsed.as_secs_f64()
    );
    for f in failed {
        println!("    failed: {}", f.name);
    }
    for s in &c.notes {
        println!("    note: {s}");
    }
    pass
}

fn verify(id: GalleryId) -> Option<VerificationReport> {
    build_example(id).and_then(|case| verify_example(&case)).ok()
}

fn gallery_exactness(c: &mut Checks) {
    for id in acceptance_cases() {
        let Some(r) = verify(id) else {
            c.check(format!("{id} builds and verifies"), false);
            continue;
        };
        for q in ["vol", "pg"] {
            let ok = r.get(q).is_some_and(|x| x.status == CompareStatus::Match);
            c.check(format!("{id} {q}"), ok);
        }
        if let Some(k) = r.get("KS2").filter(|k| k.paper.is_some()) {
            c.check(format!("{id} KS2"), k.status == CompareStatus::Match);
        }
    }
}

fn noether_flags(c: &mut Checks) {
    for id in acceptance_cases() {
        let Some(r) = verify(id) else {
            c.check(format!("{id} verifies"), false);
            continue;
        };
        let equality = match id {
            GalleryId::Ex3_1 { .. } | GalleryId::Ex3_2 { .. } => Some("(1.3)"),
            GalleryId::Ex3_3 { .. } => Some("(1.5)"),
            GalleryId::Ex3_4 { .. } => Some("(1.5-2)"),
            _ => None,
        };
        if let Some(bound) = equality {
            c.check(format!("{id} {bound} equality"), r.bounds.status(bound) == Some(Status::Equality));
        }
        let universal = r.bounds.status("(1.12)");
        c.check(
            format!("{id} (1.12) strict (vol {}, pg − 2 = {}): {}", r.record.vol, r.record.pg - 2, universal.map_or("n/a", |s| s.name())),
            universal == Some(Status::Holds),
        );
    }
}

fn zariski_oracle(c: &mut Checks) {
    let mut rng = common::seeded(0xacce_0003);
    let mut agree = 0;
    for trial in 0..ZARISKI_TRIALS {
        let cfg = common::random_negative_definite(&mut rng, 6);
        let oracle = common::enumerate_decompositions(&cfg.gram, &cfg.d_dot);
        let engine = zariski_decompose(&cfg.lattice, &cfg.d, &cfg.candidates)
            .ok()
            .map(|z| z.n_coeffs.into_iter().map(|(_, v)| v).collect::<Vec<_>>());
        let ok = oracle.len() == 1 && engine.as_ref() == Some(&oracle[0]);
        if ok {
            agree += 1;
        } else {
            c.check(format!("trial {trial}: gram {:?} D·C {:?}", cfg.gram, cfg.d_dot), false);
        }
    }
    c.check(format!("{agree}/{ZARISKI_TRIALS} configurations agree with subset enumeration"), agree == ZARISKI_TRIALS);
}

fn chain_properties(c: &mut Checks) {
    let mut rng = common::seeded(0xacce_0004);
    let (mut solver, mut range) = (0, 0);
    for _ in 0..CHAIN_TRIALS {
        let r = rng.gen_range(1..=8);
        let e: Vec<i64> = (0..r).map(|_| rng.gen_range(2..=5)).collect();
        let spec = ChainSpec::foliation_chain(e);
        let y = chain_negative_part(&spec);
        if solve_linear_system(&spec.gram(), &spec.kf_dot).ok().and_then(|s| s.unique()) == Some(y.clone()) {
            solver += 1;
        }
        if y.iter().all(|v| v.is_positive() && *v < int(1)) {
            range += 1;
        }
    }
    c.check(format!("closed form equals linear solver on {solver}/{CHAIN_TRIALS} chains"), solver == CHAIN_TRIALS);
    c.check(format!("coefficients in (0,1) on {range}/{CHAIN_TRIALS} chains"), range == CHAIN_TRIALS);
    for r in 1..=8usize {
        let y = chain_negative_part(&ChainSpec::foliation_chain(vec![2; r]));
        let expected: Vec<Rational> = (1..=r).map(|j| rat((r + 1 - j) as i64, r as i64 + 1)).collect();
        c.check(format!("all-2 chain of length {r}"), y == expected);
    }
}

fn example_three_two_field() -> PlaneFoliation {
    let lambda = QuadExt::sqrt_of(2);
    let c = QuadExt::one();
    let x = BiPoly::<QuadExt>::x();
    let y = BiPoly::<QuadExt>::y();
    let linear = x
        .scale(&lambda)
        .add(&y.scale(&QuadExt::one().plus(&lambda)))
        .add(&BiPoly::constant(lambda.times(&c)));
    let a = x.mul(&linear);
    let b = y.mul(&y.add(&BiPoly::constant(c)));
    PlaneFoliation::new(a, b, 2).expect("saturated field")
}

fn plane_suite(c: &mut Checks) {
    let f = example_three_two_field();
    let x = BiPoly::<QuadExt>::x();
    let y = BiPoly::<QuadExt>::y();
    let one = BiPoly::constant(QuadExt::one());
    c.check("L1 = {x = 0} invariant", f.is_invariant_curve(&x));
    c.check("L2 = {y = 0} invariant", f.is_invariant_curve(&y));
    c.check("L3 = {x + y + c = 0} invariant", f.is_invariant_curve(&x.add(&y).add(&one)));
    c.check("L4 = line at infinity invariant", f.line_at_infinity_invariant());
    let mut rng = common::seeded(0xacce_0005);
    let (p, q) = loop {
        let p = rng.gen_range(1..=9i64);
        let q = rng.gen_range(1..=9i64);
        if p != q {
            break (p, q);
        }
    };
    let r0 = rng.gen_range(-9..=9i64);
    let fifth = x.scale(&QuadExt::from_int(p)).add(&y.scale(&QuadExt::from_int(q))).add(&BiPoly::constant(QuadExt::from_int(r0)));
    c.check(format!("random line {p}x + {q}y + {r0} not invariant"), !f.is_invariant_curve(&fifth));
    match f.find_singularities() {
        Ok(sings) => {
            let count: usize = sings.iter().map(|s| s.multiplicity).sum();
            c.check(format!("singularity count with multiplicity {count} = 7"), count == 7);
            c.check("every singularity classified exactly", sings.iter().all(|s| s.certainty() == Some(Certainty::Exact)));
            let bad: Vec<String> = sings
                .iter()
                .filter(|s| !s.classification().is_some_and(|k| k.is_reduced()))
                .map(|s| format!("{}({}, {})", s.chart.name(), s.x.display(), s.y.display()))
                .collect();
            c.check(format!("every singularity reduced (non-reduced: {})", bad.join(", ")), bad.is_empty());
        }
        Err(e) => c.check(format!("singularities located: {e}"), false),
    }
    for d in [2u32, 3] {
        for (case, label) in [(FamilyCase::Origin, "(i)"), (FamilyCase::XAxis, "(ii)"), (FamilyCase::YAxis, "(iii)")] {
            let stated = check_symbolic(case, d, Formula::Stated).map(|s| s.holds).unwrap_or(false);
            c.check(format!("case {label} stated formula, d = {d}"), stated);
            if !stated {
                let recomputed = check_symbolic(case, d, Formula::Recomputed).map(|s| s.holds).unwrap_or(false);
                c.note(format!("case {label}, d = {d}: recomputed quotient holds symbolically: {recomputed}"));
            }
        }
        match check_interior_numeric(d, 2, 3, Formula::Stated, INTERIOR_TOLERANCE) {
            Ok(n) => {
                c.check(
                    format!("case (iv) stated formula, d = {d}, {} points, max deviation {:.3e}", n.points, n.max_deviation),
                    n.holds(),
                );
                if !n.holds() {
                    if let Ok(r) = check_interior_numeric(d, 2, 3, Formula::Recomputed, INTERIOR_TOLERANCE) {
                        c.note(format!("case (iv), d = {d}: recomputed quotient max deviation {:.3e}", r.max_deviation));
                    }
                }
            }
            Err(e) => c.check(format!("case (iv), d = {d}: {e}"), false),
        }
    }
}

fn germ(a: &[((u32, u32), i64)], b: &[((u32, u32), i64)]) -> (BiPoly<QuadExt>, BiPoly<QuadExt>) {
    let p = |t: &[((u32, u32), i64)]| BiPoly::from_terms(t.iter().map(|&(e, c)| (e, QuadExt::from_int(c))));
    (p(a), p(b))
}

fn seidenberg(c: &mut Checks) {
    match reduce_germ(&germ(&[((1, 0), 1)], &[((0, 1), 1)]), 0, "root".into(), 0, DEFAULT_DEPTH_CAP) {
        Ok(n) => {
            c.check("radial point becomes dicritical", n.classification == Classification::DicriticalAfterBlowup);
            c.check(format!("radial K coefficients {:?} = [-1]", n.kf_coefficients()), n.kf_coefficients() == vec![-1]);
        }
        Err(e) => c.check(format!("radial reduction: {e}"), false),
    }
    match reduce_germ(&germ(&[((1, 0), 1)], &[((0, 1), -1)]), 0, "root".into(), 0, DEFAULT_DEPTH_CAP) {
        Ok(n) => c.check(format!("x∂x − y∂y needs {} blow-ups", n.blowup_count()), n.blowup_count() == 0),
        Err(e) => c.check(format!("saddle reduction: {e}"), false),
    }
    match reduce_germ(&germ(&[((0, 1), 1)], &[((2, 0), 1)]), 0, "root".into(), 0, DEFAULT_DEPTH_CAP) {
        Ok(n) => c.check(format!("nilpotent tree {}", n.signature()), n.signature() == NILPOTENT_TREE),
        Err(e) => c.check(format!("nilpotent reduction terminates: {e}"), false),
    }
}

fn scaling(c: &mut Checks) {
    for (m, n) in [(4, 1), (7, 2)] {
        let base = verify(GalleryId::Ex3_1 { m, n, k: 1 }).and_then(|r| r.get("vol").and_then(|v| v.engine.clone()));
        for k in 1..=3 {
            let v = verify(GalleryId::Ex3_1 { m, n, k }).and_then(|r| r.get("vol").and_then(|v| v.engine.clone()));
            let ok = matches!((&base, &v), (Some(b), Some(v)) if *v == b * int(k));
            c.check(format!("ex3_1(m={m},n={n}) vol(k={k}) = k·vol(1)"), ok);
        }
    }
    for d in [1, 2, 3] {
        let ok = build_example(GalleryId::Ex3_3 { d })
            .ok()
            .and_then(|case| {
                let h = case.model.lattice.generator("p*H").ok()?;
                Some(case.model.kf == h.scaled(&int(d + 2)))
            })
            .unwrap_or(false);
        c.check(format!("ex3_3(d={d}) K_F = π*O({})", d + 2), ok);
    }
}

fn product_finding(c: &mut Checks) {
    for (gb, m, g) in [(2, 1, 2), (3, 2, 2), (2, 3, 3), (4, 1, 3)] {
        let id = GalleryId::Ex6_5 { gb, m, g };
        let Some(r) = verify(id) else {
            c.check(format!("{id} verifies"), false);
            continue;
        };
        c.check(format!("{id} decomposition axioms"), r.axioms.holds());
        c.check(format!("{id} K_F·F = 1"), r.get("d").and_then(|x| x.engine.clone()) == Some(int(1)));
        let ks2 = int(4 * (g - 1) * (2 * gb - 2 + m));
        c.check(format!("{id} KS2 = {ks2}"), r.get("KS2").and_then(|x| x.engine.clone()) == Some(ks2));
        let vol = r.get("vol").expect("vol compared");
        let show = |q: &Option<Rational>| q.as_ref().map_or("-".to_string(), |v| v.to_string());
        c.note(format!("{id} vol engine {} paper {} ({})", show(&vol.engine), show(&vol.paper), vol.status.name()));
    }
}

fn catalog_manifest(c: &mut Checks) {
    let expected: BTreeSet<&str> = [
        "(1.3)", "(1.3')", "(1.4)", "(1.5)", "(1.5-1)", "(1.5-2)", "(1.6)", "(1.8)", "(1.9)", "(1.10)", "(1.12)",
        "(1.13)", "(1.14)", "(31-6)", "(31-1)", "(41-9)", "(41-9-1)", "(41-10)", "prop-5.1",
    ]
    .into_iter()
    .collect();
    let ids = catalog_ids();
    let got: BTreeSet<&str> = ids.iter().copied().collect();
    c.check(format!("{} entries, {} distinct", ids.len(), got.len()), ids.len() == got.len());
    for id in expected.difference(&got) {
        c.check(format!("missing {id}"), false);
    }
    for id in got.difference(&expected) {
        c.check(format!("unexpected {id}"), false);
    }
    c.check("catalog equals the 19 displayed inequalities", got == expected);
}

fn determinism(c: &mut Checks) {
    let bin = env!("CARGO_BIN_EXE_foliage");
    for id in acceptance_cases() {
        let params: Vec<String> = id.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
        let params = params.join(",");
        let run = || {
            Command::new(bin)
                .args(["gallery", "--case", id.name(), "--params", &params, "--verify"])
                .env_remove("FOLIAGE_DEPTH_CAP")
                .output()
                .ok()
                .filter(|o| o.status.success())
                .map(|o| o.stdout)
        };
        let (a, b) = (run(), run());
        c.check(format!("{id} identical bytes"), a.is_some() && a == b);
    }
}

fn main() {
    let results = [
        report(1, "gallery exactness", Some(GALLERY_BUDGET), gallery_exactness),
        report(2, "Noether equality flags", None, noether_flags),
        report(3, "Zariski oracle equivalence", Some(ZARISKI_BUDGET), zariski_oracle),
        report(4, "F-chain properties", None, chain_properties),
        report(5, "plane foliation suite", None, plane_suite),
        report(6, "Seidenberg step", None, seidenberg),
        report(7, "Riemann–Hurwitz volume scaling", None, scaling),
        report(8, "product example finding", Some(PRODUCT_BUDGET), product_finding),
        report(9, "bound catalog manifest", None, catalog_manifest),
        report(10, "determinism", None, determinism),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
}
