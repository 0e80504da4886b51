//! JSON encoding of models, fields, records and reports.
//!
//! Rationals are strings `"p/q"` (integers without a denominator), elements
//! of `ℚ(√m)` are objects `{"a", "b", "m"}`, and objects have sorted keys so
//! that equal inputs give byte-identical output.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use crate::bounds::{
    BoundEntry, BoundReport, ImageRecord, InvariantRecord, MapKind, Radical, SpecialFlag, SurfaceClass,
};
use crate::error::{FoliageError, Result};
use crate::foliation::{CurveClass, CurveRecord, FoliatedSurface, IndexReport};
use crate::gallery::{GalleryCase, VerificationReport};
use crate::lattice::{make_surface, DivClass, SurfaceLattice, SurfaceSpec};
use crate::numeric::bipoly::BiPoly;
use crate::numeric::dd::Cx;
use crate::numeric::quadext::QuadExt;
use crate::numeric::scalar::{int, square_free_split, Rational};
use crate::plane::{
    Certainty, Coord, Eigenvalues, LinearClass, PlaneFoliation, Quotient, ReductionNode, ReductionReport,
    SingularityReport,
};
use crate::zariski::{AxiomReport, ChainSpec, ZariskiResult};

fn bad(msg: impl Into<String>) -> FoliageError {
    FoliageError::input(msg)
}

pub fn rat_json(q: &Rational) -> Value {
    Value::String(q.to_string())
}

/// Parses `"p/q"`, `"n"` or a JSON integer.
pub fn parse_rat(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => Rational::from_str(s.trim()).map_err(|_| bad(format!("malformed rational {s:?}"))),
        Value::Number(n) => n
            .as_i64()
            .map(int)
            .ok_or_else(|| bad(format!("number {n} is not an integer; write rationals as \"p/q\""))),
        other => Err(bad(format!("expected a rational, found {other}"))),
    }
}

fn parse_int(v: &Value, what: &str) -> Result<i64> {
    let q = parse_rat(v)?;
    if !q.is_integer() {
        return Err(bad(format!("{what} must be an integer")));
    }
    crate::numeric::scalar::to_i64(&q).ok_or_else(|| bad(format!("{what} is out of range")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn rats(v: &Value, what: &str) -> Result<Vec<Rational>> {
    array(v, what)?.iter().map(parse_rat).collect()
}

fn rat_list(qs: &[Rational]) -> Value {
    Value::Array(qs.iter().map(rat_json).collect())
}

pub fn quadext_json(x: &QuadExt) -> Value {
    json!({"a": rat_json(&x.a), "b": rat_json(&x.b), "m": if x.b.is_zero() { 0 } else { x.m }})
}

/// Parses a rational or an object `{"a", "b", "m"}`.
pub fn parse_quadext(v: &Value) -> Result<QuadExt> {
    if !v.is_object() {
        return Ok(QuadExt::rational(parse_rat(v)?));
    }
    let a = parse_rat(field(v, "a")?)?;
    let b = v.get("b").map(parse_rat).transpose()?.unwrap_or_else(Rational::zero);
    let m = v.get("m").map(|m| parse_int(m, "m")).transpose()?.unwrap_or(0);
    if b.is_zero() {
        return Ok(QuadExt::rational(a));
    }
    if m < 2 {
        return Err(bad("a nonzero b needs a radicand m ≥ 2"));
    }
    if square_free_split(m as u64).1 == 1 {
        return Err(bad(format!("radicand {m} is a perfect square")));
    }
    Ok(QuadExt::new(a, b, m as u64))
}

pub fn class_json(d: &DivClass) -> Value {
    rat_list(&d.coords)
}

/// Parses a class given as a coordinate array or as `{label: rat}`.
pub fn parse_class(l: &SurfaceLattice, v: &Value) -> Result<DivClass> {
    match v {
        Value::Array(_) => {
            let c = rats(v, "class")?;
            if c.len() != l.rank() {
                return Err(bad(format!("class has {} coordinates, lattice rank is {}", c.len(), l.rank())));
            }
            Ok(l.class(c))
        }
        Value::Object(m) => {
            let mut d = l.zero_class();
            for (label, q) in m {
                d = d.plus(&l.generator(label)?.scaled(&parse_rat(q)?));
            }
            Ok(d)
        }
        other => Err(bad(format!("expected a class, found {other}"))),
    }
}

pub fn lattice_json(l: &SurfaceLattice) -> Value {
    json!({
        "basis": l.basis,
        "gram": l.gram.iter().map(|r| rat_list(r)).collect::<Vec<_>>(),
        "canonical": rat_list(&l.canonical),
        "chi": rat_json(&l.chi),
    })
}

pub fn parse_lattice(v: &Value) -> Result<SurfaceLattice> {
    let basis = array(field(v, "basis")?, "basis")?
        .iter()
        .map(|b| b.as_str().map(String::from).ok_or_else(|| bad("basis labels must be strings")))
        .collect::<Result<Vec<_>>>()?;
    let distinct: BTreeSet<&String> = basis.iter().collect();
    if distinct.len() != basis.len() {
        return Err(bad("basis labels must be distinct"));
    }
    let gram = array(field(v, "gram")?, "gram")?
        .iter()
        .map(|r| rats(r, "gram row"))
        .collect::<Result<Vec<_>>>()?;
    let canonical = rats(field(v, "canonical")?, "canonical")?;
    let chi = parse_rat(field(v, "chi")?)?;
    make_surface(SurfaceSpec::Abstract { basis, gram, canonical, chi })
}

fn curve_json(c: &CurveRecord) -> Value {
    let mut m = Map::new();
    m.insert("label".into(), json!(c.label));
    m.insert("class".into(), class_json(c.cls.total()));
    m.insert("invariant".into(), json!(c.invariant));
    if c.rational_smooth {
        m.insert("rational".into(), json!(true));
    }
    if let Some(a) = c.multiplicity_in_fiber {
        m.insert("mult".into(), json!(a));
    }
    if let Some(z) = c.declared_z {
        m.insert("Z".into(), json!(z));
    }
    if let CurveClass::Bundle(b) = &c.cls {
        m.insert("count".into(), json!(b.count));
        m.insert("member_square".into(), rat_json(&b.member_square));
    }
    Value::Object(m)
}

fn parse_curve(l: &SurfaceLattice, v: &Value, index: usize) -> Result<CurveRecord> {
    let label = match v.get("label") {
        Some(s) => s.as_str().ok_or_else(|| bad("curve label must be a string"))?.to_string(),
        None => format!("C{}", index + 1),
    };
    let cls = parse_class(l, field(v, "class")?)?;
    let mut c = match v.get("count") {
        Some(n) => {
            let count = parse_int(n, "count")?;
            if count < 1 {
                return Err(bad("count must be positive"));
            }
            let sq = parse_rat(field(v, "member_square")?)?;
            CurveRecord::bundle(&label, l.bundle(cls, count as u64, sq)?)
        }
        None => CurveRecord::single(&label, cls),
    };
    let invariant = field(v, "invariant")?.as_bool().ok_or_else(|| bad("invariant must be a boolean"))?;
    if invariant {
        let z = v.get("Z").map(|z| parse_int(z, "Z")).transpose()?;
        c = c.invariant(z);
    } else if v.get("Z").is_some() {
        return Err(bad(format!("curve {label} declares Z but is not invariant")));
    }
    if v.get("rational").and_then(Value::as_bool) == Some(true) {
        c = c.rational();
    }
    if let Some(a) = v.get("mult") {
        let a = parse_int(a, "mult")?;
        if a < 1 {
            return Err(bad("mult must be positive"));
        }
        c = c.with_multiplicity(a as u32);
    }
    Ok(c)
}

pub fn foliated_json(fs: &FoliatedSurface) -> Value {
    let mut v = lattice_json(&fs.lattice);
    let m = v.as_object_mut().expect("object");
    m.insert("kf".into(), class_json(&fs.kf));
    m.insert("curves".into(), Value::Array(fs.curves.iter().map(curve_json).collect()));
    m.insert("reduced".into(), json!(fs.reduced));
    v
}

pub fn parse_foliated(v: &Value) -> Result<FoliatedSurface> {
    let l = parse_lattice(v)?;
    let kf = parse_class(&l, field(v, "kf")?)?;
    let curves = match v.get("curves") {
        Some(cs) => array(cs, "curves")?.iter().enumerate().map(|(i, c)| parse_curve(&l, c, i)).collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    let labels: BTreeSet<&String> = curves.iter().map(|c| &c.label).collect();
    if labels.len() != curves.len() {
        return Err(bad("curve labels must be distinct"));
    }
    let mut fs = FoliatedSurface::new(l, kf);
    fs.curves = curves;
    if let Some(r) = v.get("reduced") {
        fs.reduced = r.as_bool().ok_or_else(|| bad("reduced must be a boolean"))?;
    }
    Ok(fs)
}

fn poly_json(p: &BiPoly<QuadExt>) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|((i, j), c)| {
                let c = if c.is_rational() { rat_json(&c.a) } else { quadext_json(c) };
                json!([i, j, c])
            })
            .collect(),
    )
}

fn parse_poly(v: &Value, ext: u64, what: &str) -> Result<BiPoly<QuadExt>> {
    let mut terms = Vec::new();
    for t in array(v, what)? {
        let t = array(t, "term")?;
        if t.len() != 3 {
            return Err(bad(format!("{what} terms are [i, j, coefficient]")));
        }
        let i = parse_int(&t[0], "exponent")?;
        let j = parse_int(&t[1], "exponent")?;
        if i < 0 || j < 0 {
            return Err(bad("exponents must be nonnegative"));
        }
        let c = parse_quadext(&t[2])?;
        if !c.is_rational() && c.m != ext {
            return Err(bad(format!("coefficient {c} lies outside Q(sqrt({ext}))")));
        }
        terms.push(((i as u32, j as u32), c));
    }
    Ok(BiPoly::from_terms(terms))
}

pub fn field_json(f: &PlaneFoliation) -> Value {
    let mut v = json!({"A": poly_json(&f.a), "B": poly_json(&f.b)});
    if f.ext != 0 {
        v["ext"] = json!(f.ext);
    }
    v
}

/// Parses `{"A": [[i, j, c], …], "B": […], "ext": m}`.
pub fn parse_field(v: &Value) -> Result<PlaneFoliation> {
    let ext = match v.get("ext") {
        Some(e) => {
            let m = parse_int(e, "ext")?;
            if m < 0 || m == 1 || (m > 1 && square_free_split(m as u64).0 != 1) {
                return Err(bad("ext must be 0 or a square-free integer ≥ 2"));
            }
            m as u64
        }
        None => 0,
    };
    let a = parse_poly(field(v, "A")?, ext, "A")?;
    let b = parse_poly(field(v, "B")?, ext, "B")?;
    PlaneFoliation::new(a, b, ext)
}

fn cx_string(z: &Cx) -> String {
    let re = z.re.to_f64();
    let im = z.im.to_f64();
    if im.abs() < 1e-30 {
        format!("{re:.12}")
    } else {
        format!("{re:.12}{im:+.12}i")
    }
}

pub fn coord_json(c: &Coord) -> Value {
    match c {
        Coord::Exact(q) => quadext_json(q),
        Coord::Approx { .. } => json!({"approx": c.display()}),
    }
}

fn quotient_json<F: std::fmt::Display>(q: &Quotient<F>) -> Value {
    match q {
        Quotient::InField(v) => json!({"value": v.to_string()}),
        Quotient::ViaKappa(k) => json!({"kappa": k.to_string()}),
        Quotient::Numeric(z) => json!({"approx": cx_string(z)}),
        Quotient::Undefined => Value::Null,
    }
}

fn eigen_json<F: std::fmt::Display>(e: &Eigenvalues<F>) -> Value {
    match e {
        Eigenvalues::InField(a, b) => json!([a.to_string(), b.to_string()]),
        Eigenvalues::ConjugatePair { trace, det } => json!({"trace": trace.to_string(), "det": det.to_string()}),
        Eigenvalues::Numeric(a, b) => json!([cx_string(a), cx_string(b)]),
    }
}

fn linear_json<F: std::fmt::Display>(lc: &LinearClass<F>) -> Value {
    json!({
        "classification": lc.classification.name(),
        "certainty": lc.certainty.name(),
        "eigenvalues": eigen_json(&lc.eigenvalues),
        "quotient": quotient_json(&lc.quotient),
    })
}

pub fn singularity_json(s: &SingularityReport) -> Value {
    let linear = match (&s.linear, &s.numeric_linear) {
        (Some(l), _) => linear_json(l),
        (None, Some(n)) => linear_json(n),
        (None, None) => Value::Null,
    };
    json!({
        "chart": s.chart.name(),
        "x": coord_json(&s.x),
        "y": coord_json(&s.y),
        "multiplicity": s.multiplicity,
        "linear": linear,
    })
}

pub fn singularities_json(f: &PlaneFoliation, sings: &[SingularityReport]) -> Value {
    let count: usize = sings.iter().map(|s| s.multiplicity).sum();
    let exact = sings.iter().all(|s| s.certainty() == Some(Certainty::Exact));
    let reduced = sings.iter().all(|s| s.classification().is_some_and(|c| c.is_reduced()));
    json!({
        "degree": f.degree(),
        "count": count,
        "all_exact": exact,
        "all_reduced": reduced,
        "singularities": sings.iter().map(singularity_json).collect::<Vec<_>>(),
    })
}

fn node_json(n: &ReductionNode) -> Value {
    let mut m = Map::new();
    m.insert("label".into(), json!(n.label));
    m.insert("depth".into(), json!(n.depth));
    m.insert("classification".into(), json!(n.classification.name()));
    m.insert("certainty".into(), json!(n.certainty.name()));
    if let Some(q) = &n.quotient {
        m.insert("quotient".into(), json!(q));
    }
    if let Some(b) = &n.blowup {
        m.insert(
            "blowup".into(),
            json!({
                "kf_coefficient": b.kf_coefficient,
                "exceptional_invariant": b.exceptional_invariant,
                "children": b.children.iter().map(node_json).collect::<Vec<_>>(),
            }),
        );
    }
    Value::Object(m)
}

pub fn reduction_json(r: &ReductionReport) -> Value {
    json!({
        "depth_cap": r.depth_cap,
        "blowups": r.blowup_count(),
        "points": r.roots.iter().map(|(chart, x, y, node)| json!({
            "chart": chart.name(),
            "x": coord_json(x),
            "y": coord_json(y),
            "signature": node.signature(),
            "kf_coefficients": node.kf_coefficients(),
            "tree": node_json(node),
        })).collect::<Vec<_>>(),
    })
}

pub fn zariski_json(z: &ZariskiResult) -> Value {
    let n: Map<String, Value> = z.n_coeffs.iter().map(|(l, c)| (l.clone(), rat_json(c))).collect();
    json!({"P": class_json(&z.p), "N": n, "vol": rat_json(&z.volume)})
}

pub fn axioms_json(a: &AxiomReport) -> Value {
    json!({
        "holds": a.holds(),
        "sums_to_d": a.sums_to_d,
        "nef_on_candidates": a.nef_on_candidates,
        "orthogonal": a.orthogonal,
        "nonnegative": a.nonnegative,
        "support_negative_definite": a.support_negative_definite,
        "floor_zero": a.floor_zero,
    })
}

/// Parses a chain `{"e": [e_1, …], "kf_dot": [rat, …]?}`; the default
/// right-hand side is `(−1, 0, …, 0)`.
pub fn parse_chain(v: &Value) -> Result<ChainSpec> {
    let e = array(field(v, "e")?, "e")?.iter().map(|x| parse_int(x, "e")).collect::<Result<Vec<_>>>()?;
    if e.is_empty() {
        return Err(bad("a chain needs at least one curve"));
    }
    if e.iter().any(|&x| x < 2) {
        return Err(bad("chain self-intersections must satisfy e_j ≥ 2"));
    }
    let spec = match v.get("kf_dot") {
        Some(k) => {
            let k = rats(k, "kf_dot")?;
            if k.len() != e.len() {
                return Err(bad("kf_dot must have one entry per curve"));
            }
            ChainSpec::new(e, k)
        }
        None => ChainSpec::foliation_chain(e),
    };
    Ok(spec)
}

pub fn chain_json(spec: &ChainSpec, y: &[Rational]) -> Value {
    let n: Map<String, Value> = spec.labels.iter().zip(y).map(|(l, c)| (l.clone(), rat_json(c))).collect();
    let mut n_sq = Rational::zero();
    let g = spec.gram();
    for i in 0..y.len() {
        for j in 0..y.len() {
            n_sq += &y[i] * &y[j] * &g[i][j];
        }
    }
    json!({
        "N": n,
        "N_squared": rat_json(&n_sq),
        "e": spec.self_intersections,
        "kf_dot": rat_list(&spec.kf_dot),
        "floor_zero": y.iter().all(|c| !c.is_negative() && *c < int(1)),
    })
}

pub fn index_json(r: &IndexReport) -> Value {
    match r {
        IndexReport::Tangency(t) => json!({"tangency": rat_json(t)}),
        IndexReport::Invariant { z, cs } => json!({"Z": rat_json(z), "CS": rat_json(cs)}),
    }
}

fn map_kind_json(k: &MapKind) -> Value {
    match k {
        MapKind::GenericallyFinite { degree } => json!({"kind": "generically_finite", "degree": degree}),
        MapKind::Fibration { d, fiber_genus, base_genus, tangent_to_fibers, fiber_h0_one } => json!({
            "kind": "fibration",
            "d": d,
            "fiber_genus": fiber_genus,
            "base_genus": base_genus,
            "tangent_to_fibers": tangent_to_fibers,
            "fiber_h0_one": fiber_h0_one,
        }),
        MapKind::Unknown => json!({"kind": "unknown"}),
    }
}

fn parse_map_kind(v: &Value) -> Result<MapKind> {
    let kind = field(v, "kind")?.as_str().ok_or_else(|| bad("map kind must be a string"))?;
    let flag = |k: &str| v.get(k).and_then(Value::as_bool).unwrap_or(false);
    Ok(match kind {
        "generically_finite" => MapKind::GenericallyFinite { degree: parse_int(field(v, "degree")?, "degree")? },
        "fibration" => MapKind::Fibration {
            d: parse_int(field(v, "d")?, "d")?,
            fiber_genus: parse_int(field(v, "fiber_genus")?, "fiber_genus")?,
            base_genus: parse_int(field(v, "base_genus")?, "base_genus")?,
            tangent_to_fibers: flag("tangent_to_fibers"),
            fiber_h0_one: flag("fiber_h0_one"),
        },
        "unknown" => MapKind::Unknown,
        other => return Err(bad(format!("unknown map kind {other:?}"))),
    })
}

fn flags_json(flags: &BTreeSet<SpecialFlag>) -> Value {
    Value::Array(flags.iter().map(|f| json!(f.name())).collect())
}

fn parse_flags(v: Option<&Value>) -> Result<BTreeSet<SpecialFlag>> {
    let Some(v) = v else { return Ok(BTreeSet::new()) };
    array(v, "flags")?
        .iter()
        .map(|f| f.as_str().ok_or_else(|| bad("flags must be strings")).and_then(SpecialFlag::parse))
        .collect()
}

fn parse_class_name(v: Option<&Value>) -> Result<SurfaceClass> {
    match v {
        Some(s) => SurfaceClass::parse(s.as_str().ok_or_else(|| bad("surface class must be a string"))?),
        None => Ok(SurfaceClass::Unknown),
    }
}

pub fn record_json(r: &InvariantRecord) -> Value {
    let mut v = json!({
        "vol": rat_json(&r.vol),
        "pg": r.pg,
        "map": map_kind_json(&r.map_kind),
        "surface_class": r.surface_class.name(),
        "flags": flags_json(&r.flags),
        "reduced": r.reduced,
        "algebraically_integrable": r.algebraically_integrable,
    });
    if let Some(img) = &r.image {
        v["image"] = json!({"degree": img.degree, "class": img.class.name(), "flags": flags_json(&img.flags)});
    }
    v
}

/// Parses an invariant record; only `vol` and `pg` are required.
pub fn parse_record(v: &Value) -> Result<InvariantRecord> {
    let vol = parse_rat(field(v, "vol")?)?;
    let pg = parse_int(field(v, "pg")?, "pg")?;
    let map_kind = match v.get("map") {
        Some(m) => parse_map_kind(m)?,
        None => MapKind::Unknown,
    };
    let mut r = InvariantRecord::new(vol, pg, map_kind, parse_class_name(v.get("surface_class"))?);
    r.flags = parse_flags(v.get("flags"))?;
    if let Some(b) = v.get("reduced") {
        r.reduced = b.as_bool().ok_or_else(|| bad("reduced must be a boolean"))?;
    }
    if let Some(b) = v.get("algebraically_integrable") {
        r.algebraically_integrable = b.as_bool().ok_or_else(|| bad("algebraically_integrable must be a boolean"))?;
    }
    if let Some(img) = v.get("image") {
        r.image = Some(ImageRecord {
            degree: parse_int(field(img, "degree")?, "image degree")?,
            class: parse_class_name(img.get("class"))?,
            flags: parse_flags(img.get("flags"))?,
        });
    }
    r.validate()?;
    Ok(r)
}

fn radical_json(r: &Radical) -> Value {
    let display = if r.coef.is_zero() || r.radicand == 0 {
        r.base.to_string()
    } else {
        format!("{} + {}*sqrt({})", r.base, r.coef, r.radicand)
    };
    json!({"base": rat_json(&r.base), "coef": rat_json(&r.coef), "radicand": r.radicand, "display": display})
}

pub fn bound_entry_json(e: &BoundEntry) -> Value {
    json!({
        "id": e.id,
        "statement": e.statement,
        "applicable": e.applicable,
        "relation": e.relation.symbol(),
        "lhs": e.lhs.as_ref().map(rat_json),
        "rhs": e.rhs.as_ref().map(radical_json),
        "status": e.status.map(|s| s.name()),
        "equality_note": e.equality_note,
    })
}

pub fn bounds_json(report: &BoundReport, weighted: &[BoundEntry]) -> Value {
    json!({
        "bounds": report.entries.iter().map(bound_entry_json).collect::<Vec<_>>(),
        "weighted": weighted.iter().map(bound_entry_json).collect::<Vec<_>>(),
        "violated": report.violated(),
    })
}

fn case_header(case: &GalleryCase) -> Value {
    let params: Map<String, Value> = case.id.params().into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    json!({"case": case.id.name(), "params": params})
}

pub fn expected_json(case: &GalleryCase) -> Value {
    let e = &case.expected;
    let mut m = Map::new();
    m.insert("vol".into(), rat_json(&e.vol));
    m.insert("pg".into(), json!(e.pg));
    if let Some(d) = e.deg_phi {
        m.insert("deg_phi".into(), json!(d));
    }
    if let Some(d) = e.d {
        m.insert("d".into(), json!(d));
    }
    if let Some(k) = &e.ks2 {
        m.insert("KS2".into(), rat_json(k));
    }
    Value::Object(m)
}

pub fn case_json(case: &GalleryCase) -> Value {
    let mut v = case_header(case);
    v["model"] = foliated_json(&case.model);
    v["expected"] = expected_json(case);
    v["pg_route"] = json!(case.pg_route.name());
    v
}

pub fn verification_json(case: &GalleryCase, r: &VerificationReport) -> Value {
    let mut v = case_header(case);
    let mut routes = BTreeMap::new();
    for (q, c) in &r.quantities {
        v[*q] = json!({
            "engine": c.engine.as_ref().map(rat_json),
            "paper": c.paper.as_ref().map(rat_json),
            "status": c.status.name(),
        });
        routes.insert(*q, c.route.clone());
    }
    v["routes"] = json!(routes);
    v["zariski"] = zariski_json(&r.zariski);
    v["axioms"] = axioms_json(&r.axioms);
    v["curves"] = Value::Object(
        r.curve_checks
            .iter()
            .map(|c| {
                let mut e = c.index.as_ref().map(index_json).unwrap_or_else(|| json!({}));
                e["consistent"] = json!(c.consistent);
                (c.label.clone(), e)
            })
            .collect(),
    );
    v["record"] = record_json(&r.record);
    v["bounds"] = Value::Array(r.bounds.entries.iter().filter(|e| e.applicable).map(bound_entry_json).collect());
    v["all_match"] = json!(r.all_match());
    v
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
