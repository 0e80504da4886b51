//! Catalog of the volume and genus inequalities for foliations of general
//! type, evaluated exactly on a record of birational invariants.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::error::{FoliageError, Result};
use crate::numeric::quadext::QuadExt;
use crate::numeric::scalar::{int, rat, square_free_split, Rational};

/// How the canonical map behaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapKind {
    /// Generically finite onto a surface, of the given degree.
    GenericallyFinite { degree: i64 },
    /// Induces a fibration with general fiber `F`.
    Fibration {
        /// `d = K_F·F`.
        d: i64,
        fiber_genus: i64,
        base_genus: i64,
        /// Whether the foliation is the one tangent to the fibration.
        tangent_to_fibers: bool,
        /// Whether `K_F` restricted to a general fiber has one section.
        fiber_h0_one: bool,
    },
    Unknown,
}

/// Birational class of a surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SurfaceClass {
    Rational,
    RuledIrrational,
    NonRuled,
    GeneralType,
    K3,
    Unknown,
}

impl SurfaceClass {
    pub fn name(&self) -> &'static str {
        match self {
            SurfaceClass::Rational => "rational",
            SurfaceClass::RuledIrrational => "ruled_irrational",
            SurfaceClass::NonRuled => "non_ruled",
            SurfaceClass::GeneralType => "general_type",
            SurfaceClass::K3 => "k3",
            SurfaceClass::Unknown => "unknown",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "rational" => SurfaceClass::Rational,
            "ruled_irrational" => SurfaceClass::RuledIrrational,
            "non_ruled" => SurfaceClass::NonRuled,
            "general_type" => SurfaceClass::GeneralType,
            "k3" => SurfaceClass::K3,
            "unknown" => SurfaceClass::Unknown,
            other => return Err(FoliageError::input(format!("unknown surface class {other:?}"))),
        })
    }

    /// Known not to be ruled.
    pub fn is_non_ruled(&self) -> bool {
        matches!(self, SurfaceClass::NonRuled | SurfaceClass::GeneralType | SurfaceClass::K3)
    }
}

/// Markers for minimal surfaces of general type with `(K², p_g)` equal to
/// `(1, 0)` or `(1, 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SpecialFlag {
    Is10Surface,
    Is12Surface,
}

impl SpecialFlag {
    pub fn name(&self) -> &'static str {
        match self {
            SpecialFlag::Is10Surface => "is_10_surface",
            SpecialFlag::Is12Surface => "is_12_surface",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "is_10_surface" => Ok(SpecialFlag::Is10Surface),
            "is_12_surface" => Ok(SpecialFlag::Is12Surface),
            other => Err(FoliageError::input(format!("unknown flag {other:?}"))),
        }
    }
}

/// Degree and class of the canonical image when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageRecord {
    pub degree: i64,
    pub class: SurfaceClass,
    pub flags: BTreeSet<SpecialFlag>,
}

/// Birational invariants of a foliated surface of general type.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantRecord {
    pub vol: Rational,
    pub pg: i64,
    pub map_kind: MapKind,
    pub surface_class: SurfaceClass,
    pub flags: BTreeSet<SpecialFlag>,
    pub reduced: bool,
    pub algebraically_integrable: bool,
    pub image: Option<ImageRecord>,
}

impl InvariantRecord {
    pub fn new(vol: Rational, pg: i64, map_kind: MapKind, surface_class: SurfaceClass) -> Self {
        InvariantRecord {
            vol,
            pg,
            map_kind,
            surface_class,
            flags: BTreeSet::new(),
            reduced: true,
            algebraically_integrable: false,
            image: None,
        }
    }

    pub fn with_flag(mut self, f: SpecialFlag) -> Self {
        self.flags.insert(f);
        self
    }

    pub fn with_image(mut self, image: ImageRecord) -> Self {
        self.image = Some(image);
        self
    }

    pub fn integrable(mut self, yes: bool) -> Self {
        self.algebraically_integrable = yes;
        self
    }

    /// Rejects records violating the basic consistency conditions.
    pub fn validate(&self) -> Result<()> {
        if !self.vol.is_positive() {
            return Err(FoliageError::input("vol must be positive for a foliation of general type"));
        }
        if self.pg < 0 {
            return Err(FoliageError::input("pg must be nonnegative"));
        }
        match &self.map_kind {
            MapKind::GenericallyFinite { degree } => {
                if *degree < 1 {
                    return Err(FoliageError::input("the canonical map degree must be at least 1"));
                }
                if self.pg < 3 {
                    return Err(FoliageError::input("a generically finite canonical map needs pg ≥ 3"));
                }
            }
            MapKind::Fibration { d, fiber_genus, base_genus, tangent_to_fibers, .. } => {
                if self.pg < 2 {
                    return Err(FoliageError::input("a canonical fibration needs pg ≥ 2"));
                }
                if *d < 1 || *fiber_genus < 0 || *base_genus < 0 {
                    return Err(FoliageError::input("fibration data must satisfy d ≥ 1, g_F ≥ 0, g_B ≥ 0"));
                }
                if *tangent_to_fibers && *d != 2 * fiber_genus - 2 {
                    return Err(FoliageError::input("a foliation tangent to the fibers has d = 2g_F − 2"));
                }
            }
            MapKind::Unknown => {}
        }
        if let Some(img) = &self.image {
            if img.degree < 1 {
                return Err(FoliageError::input("image degree must be positive"));
            }
        }
        Ok(())
    }
}

/// `base + coef·√radicand` with `radicand ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radical {
    pub base: Rational,
    pub coef: Rational,
    pub radicand: i64,
}

impl Radical {
    pub fn rational(q: Rational) -> Self {
        Radical { base: q, coef: Rational::zero(), radicand: 0 }
    }

    /// Exact value in a quadratic field.
    pub fn to_quadext(&self) -> QuadExt {
        let (s, f) = square_free_split(self.radicand as u64);
        if f == 1 || self.coef.is_zero() || self.radicand == 0 {
            let root = if self.radicand == 0 { 0 } else { s as i64 };
            return QuadExt::rational(&self.base + &self.coef * int(root));
        }
        QuadExt::new(self.base.clone(), &self.coef * int(s as i64), f)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_quadext().to_dd().to_f64()
    }
}

/// Compares `lhs` with `base + coef·√n` by sign-aware squaring.
pub fn cmp_radical(lhs: &Rational, r: &Radical) -> Ordering {
    let diff = lhs - &r.base;
    let c = &r.coef;
    let n = int(r.radicand);
    if c.is_zero() || r.radicand == 0 {
        return diff.cmp(&Rational::zero());
    }
    let sq = |q: &Rational| q * q;
    match (diff.is_negative(), c.is_negative()) {
        (false, true) => Ordering::Greater,
        (true, false) => Ordering::Less,
        (false, false) => sq(&diff).cmp(&(sq(c) * n)),
        (true, true) => (sq(c) * n).cmp(&sq(&diff)),
    }
}

/// Direction of a displayed inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `lhs ≥ rhs`.
    AtLeast,
    /// `lhs ≤ rhs`.
    AtMost,
}

impl Relation {
    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::AtLeast => ">=",
            Relation::AtMost => "<=",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Equality,
    Violated,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Equality => "equality",
            Status::Violated => "violated",
        }
    }
}

/// Outcome of one catalog entry.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundEntry {
    pub id: &'static str,
    pub statement: &'static str,
    pub applicable: bool,
    pub lhs: Option<Rational>,
    pub rhs: Option<Radical>,
    pub relation: Relation,
    pub status: Option<Status>,
    /// Conclusion attached to the equality case, reported but never checked.
    pub equality_note: Option<&'static str>,
}

/// Evaluations of the whole catalog on one record.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn get(&self, id: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn status(&self, id: &str) -> Option<Status> {
        self.get(id).and_then(|e| e.status)
    }

    pub fn violated(&self) -> Vec<&'static str> {
        self.entries.iter().filter(|e| e.status == Some(Status::Violated)).map(|e| e.id).collect()
    }
}

type Evaluator = fn(&InvariantRecord) -> Option<(Rational, Radical)>;

/// A catalog entry: applicability and both sides, as data.
pub struct BoundSpec {
    pub id: &'static str,
    pub statement: &'static str,
    pub relation: Relation,
    pub equality_note: Option<&'static str>,
    evaluate: Evaluator,
}

fn q(n: i64) -> Rational {
    int(n)
}

fn plain(r: Rational) -> Radical {
    Radical::rational(r)
}

fn finite_degree(r: &InvariantRecord) -> Option<i64> {
    match r.map_kind {
        MapKind::GenericallyFinite { degree } => Some(degree),
        _ => None,
    }
}

struct Fib {
    d: i64,
    gf: i64,
    gb: i64,
    tangent: bool,
    h0_one: bool,
}

fn fibration(r: &InvariantRecord) -> Option<Fib> {
    match r.map_kind {
        MapKind::Fibration { d, fiber_genus, base_genus, tangent_to_fibers, fiber_h0_one } => {
            Some(Fib { d, gf: fiber_genus, gb: base_genus, tangent: tangent_to_fibers, h0_one: fiber_h0_one })
        }
        _ => None,
    }
}

/// `d(d+2)/(d+1)`.
fn slope(d: i64) -> Rational {
    rat(d * (d + 2), d + 1)
}

fn fiber_section_hypothesis(f: &Fib) -> bool {
    f.h0_one || (f.d == 1 && f.gf >= 1)
}

fn image_general_type(r: &InvariantRecord) -> Option<&ImageRecord> {
    r.image.as_ref().filter(|i| i.class == SurfaceClass::GeneralType)
}

/// The catalog, in display order.
pub fn catalog() -> Vec<BoundSpec> {
    vec![
        BoundSpec {
            id: "(1.3)",
            statement: "deg φ ≤ vol/(pg − 2) for a generically finite canonical map",
            relation: Relation::AtMost,
            equality_note: Some("image is a surface of minimal degree"),
            evaluate: |r| finite_degree(r).map(|deg| (q(deg), plain(r.vol.clone() / q(r.pg - 2)))),
        },
        BoundSpec {
            id: "(1.3')",
            statement: "deg φ ≤ vol for a generically finite canonical map",
            relation: Relation::AtMost,
            equality_note: Some("pg = 3 and the image is the plane"),
            evaluate: |r| finite_degree(r).map(|deg| (q(deg), plain(r.vol.clone()))),
        },
        BoundSpec {
            id: "(1.4)",
            statement: "vol ≥ pg − 2 for a birational canonical map",
            relation: Relation::AtLeast,
            equality_note: Some("image of minimal degree, S rational"),
            evaluate: |r| (finite_degree(r) == Some(1)).then(|| (r.vol.clone(), plain(q(r.pg - 2)))),
        },
        BoundSpec {
            id: "(1.5)",
            statement: "vol ≥ 2pg − 4 for a birational canonical map on a non-ruled surface",
            relation: Relation::AtLeast,
            equality_note: Some("S is birational to a K3 surface"),
            evaluate: |r| {
                (finite_degree(r) == Some(1) && r.surface_class.is_non_ruled())
                    .then(|| (r.vol.clone(), plain(q(2 * r.pg - 4))))
            },
        },
        BoundSpec {
            id: "(1.5-1)",
            statement: "vol ≥ 2pg − 4 + (√(8pg − 31) − 7)/2 for a birational canonical map on a surface of general type",
            relation: Relation::AtLeast,
            equality_note: Some("S is birational to a (1,0)-surface"),
            evaluate: |r| {
                (finite_degree(r) == Some(1) && r.surface_class == SurfaceClass::GeneralType && 8 * r.pg >= 31).then(|| {
                    (r.vol.clone(), Radical { base: q(2 * r.pg - 4) - rat(7, 2), coef: rat(1, 2), radicand: 8 * r.pg - 31 })
                })
            },
        },
        BoundSpec {
            id: "(1.5-2)",
            statement: "vol ≥ 2pg − 4 + (√(8pg − 23) − 3)/2 for a birational canonical map on a surface of general type not birational to a (1,0)-surface",
            relation: Relation::AtLeast,
            equality_note: Some("S is birational to a (1,2)-surface"),
            evaluate: |r| {
                (finite_degree(r) == Some(1)
                    && r.surface_class == SurfaceClass::GeneralType
                    && !r.flags.contains(&SpecialFlag::Is10Surface)
                    && 8 * r.pg >= 23)
                    .then(|| {
                        (r.vol.clone(), Radical { base: q(2 * r.pg - 4) - rat(3, 2), coef: rat(1, 2), radicand: 8 * r.pg - 23 })
                    })
            },
        },
        BoundSpec {
            id: "(1.6)",
            statement: "vol ≥ d(d+2)/(d+1)·(pg − 1) when the foliation is tangent to the canonical fibration",
            relation: Relation::AtLeast,
            equality_note: None,
            evaluate: |r| {
                fibration(r).filter(|f| f.tangent).map(|f| (r.vol.clone(), plain(slope(f.d) * q(r.pg - 1))))
            },
        },
        BoundSpec {
            id: "(1.8)",
            statement: "vol ≥ d(pg − 1)²/pg when the foliation is transverse to the canonical fibration",
            relation: Relation::AtLeast,
            equality_note: None,
            evaluate: |r| {
                fibration(r)
                    .filter(|f| !f.tangent)
                    .map(|f| (r.vol.clone(), plain(rat(f.d * (r.pg - 1) * (r.pg - 1), r.pg))))
            },
        },
        BoundSpec {
            id: "(1.9)",
            statement: "vol ≥ d(d+2)/(d+1)·(pg − 1 + g_B) when the foliation is transverse to the canonical fibration and g_B ≥ 1",
            relation: Relation::AtLeast,
            equality_note: None,
            evaluate: |r| {
                fibration(r)
                    .filter(|f| !f.tangent && f.gb >= 1)
                    .map(|f| (r.vol.clone(), plain(slope(f.d) * q(r.pg - 1 + f.gb))))
            },
        },
        BoundSpec {
            id: "(1.10)",
            statement: "vol ≥ 2d(d+2)/(d+1)·(pg − 1) when transverse with d < 2g_F − 2 and pg = g_B ≥ 2",
            relation: Relation::AtLeast,
            equality_note: None,
            evaluate: |r| {
                fibration(r)
                    .filter(|f| !f.tangent && f.d < 2 * f.gf - 2 && r.pg == f.gb && f.gb >= 2)
                    .map(|f| (r.vol.clone(), plain(q(2) * slope(f.d) * q(r.pg - 1))))
            },
        },
        BoundSpec {
            id: "(1.12)",
            statement: "vol ≥ pg − 2",
            relation: Relation::AtLeast,
            equality_note: Some("birational canonical map onto a surface of minimal degree, S rational"),
            evaluate: |r| Some((r.vol.clone(), plain(q(r.pg - 2)))),
        },
        BoundSpec {
            id: "(1.13)",
            statement: "vol ≥ min{3(pg − 1)/2, 2(pg − 2)} on a non-ruled surface",
            relation: Relation::AtLeast,
            equality_note: None,
            evaluate: |r| {
                r.surface_class
                    .is_non_ruled()
                    .then(|| (r.vol.clone(), plain((rat(3, 2) * q(r.pg - 1)).min(q(2 * (r.pg - 2))))))
            },
        },
        BoundSpec {
            id: "(1.14)",
            statement: "vol ≥ 2(pg − 2) on a surface of general type",
            relation: Relation::AtLeast,
            equality_note: Some("two-to-one canonical map onto a surface of minimal degree"),
            evaluate: |r| (r.surface_class == SurfaceClass::GeneralType).then(|| (r.vol.clone(), plain(q(2 * (r.pg - 2))))),
        },
        BoundSpec {
            id: "(31-6)",
            statement: "deg Σ ≥ 2(N − 1) + (√(8N − 15) − 3)/2 for a canonical image of general type not birational to a (1,0)-surface, N = pg − 1",
            relation: Relation::AtLeast,
            equality_note: Some("Σ is birational to a (1,2)-surface"),
            evaluate: |r| {
                let n = r.pg - 1;
                image_general_type(r).filter(|i| !i.flags.contains(&SpecialFlag::Is10Surface) && 8 * n >= 15).map(|i| {
                    (q(i.degree), Radical { base: q(2 * (n - 1)) - rat(3, 2), coef: rat(1, 2), radicand: 8 * n - 15 })
                })
            },
        },
        BoundSpec {
            id: "(31-1)",
            statement: "deg Σ ≥ 2(N − 1) + (√(8N − 23) − 7)/2 for a canonical image birational to a (1,0)-surface, N = pg − 1",
            relation: Relation::AtLeast,
            equality_note: None,
            evaluate: |r| {
                let n = r.pg - 1;
                image_general_type(r).filter(|i| i.flags.contains(&SpecialFlag::Is10Surface) && 8 * n >= 23).map(|i| {
                    (q(i.degree), Radical { base: q(2 * (n - 1)) - rat(7, 2), coef: rat(1, 2), radicand: 8 * n - 23 })
                })
            },
        },
        BoundSpec {
            id: "(41-9)",
            statement: "vol ≥ 2d(d+2)/(d+1)·(pg − 1) for a canonical fibration with g_F ≥ 3 and one section of K_F on F",
            relation: Relation::AtLeast,
            equality_note: None,
            evaluate: |r| {
                fibration(r)
                    .filter(|f| fiber_section_hypothesis(f) && f.gf >= 3)
                    .map(|f| (r.vol.clone(), plain(q(2) * slope(f.d) * q(r.pg - 1))))
            },
        },
        BoundSpec {
            id: "(41-9-1)",
            statement: "vol ≥ 3(pg − 1) if d = 1 and vol ≥ 8(pg − 1)/3 if d = 2, for a canonical fibration with g_F = 2 and one section of K_F on F",
            relation: Relation::AtLeast,
            equality_note: None,
            evaluate: |r| {
                fibration(r).filter(|f| fiber_section_hypothesis(f) && f.gf == 2 && (f.d == 1 || f.d == 2)).map(|f| {
                    let c = if f.d == 1 { q(3) } else { rat(8, 3) };
                    (r.vol.clone(), plain(c * q(r.pg - 1)))
                })
            },
        },
        BoundSpec {
            id: "(41-10)",
            statement: "vol ≥ 3(pg − 1)/2 for a canonical elliptic fibration with one section of K_F on F",
            relation: Relation::AtLeast,
            equality_note: None,
            evaluate: |r| {
                fibration(r)
                    .filter(|f| fiber_section_hypothesis(f) && f.gf == 1)
                    .map(|_| (r.vol.clone(), plain(rat(3, 2) * q(r.pg - 1))))
            },
        },
        BoundSpec {
            id: "prop-5.1",
            statement: "vol ≥ 2(pg − 2) for a reduced algebraically integrable foliation on a non-ruled surface",
            relation: Relation::AtLeast,
            equality_note: None,
            evaluate: |r| {
                (r.reduced && r.algebraically_integrable && r.surface_class.is_non_ruled())
                    .then(|| (r.vol.clone(), plain(q(2 * (r.pg - 2)))))
            },
        },
    ]
}

/// Identifiers of all catalog entries.
pub fn catalog_ids() -> Vec<&'static str> {
    catalog().iter().map(|b| b.id).collect()
}

fn status_of(relation: Relation, lhs: &Rational, rhs: &Radical) -> Status {
    let ord = cmp_radical(lhs, rhs);
    let ord = match relation {
        Relation::AtLeast => ord,
        Relation::AtMost => ord.reverse(),
    };
    match ord {
        Ordering::Greater => Status::Holds,
        Ordering::Equal => Status::Equality,
        Ordering::Less => Status::Violated,
    }
}

/// Evaluates every catalog entry on a record.
pub fn evaluate_bounds(rec: &InvariantRecord) -> Result<BoundReport> {
    rec.validate()?;
    let entries = catalog()
        .into_iter()
        .map(|b| {
            let sides = (b.evaluate)(rec);
            let status = sides.as_ref().map(|(l, r)| status_of(b.relation, l, r));
            let (lhs, rhs) = match sides {
                Some((l, r)) => (Some(l), Some(r)),
                None => (None, None),
            };
            BoundEntry {
                id: b.id,
                statement: b.statement,
                applicable: status.is_some(),
                lhs,
                rhs,
                relation: b.relation,
                status,
                equality_note: b.equality_note,
            }
        })
        .collect();
    Ok(BoundReport { entries })
}

/// The degree-weighted refinements for a generically finite canonical map,
/// `vol ≥ deg φ · (bound on deg Σ)`, when the image class is known.
pub fn weighted_image_bounds(rec: &InvariantRecord) -> Result<Vec<BoundEntry>> {
    rec.validate()?;
    let (Some(deg), Some(img)) = (finite_degree(rec), rec.image.as_ref()) else {
        return Ok(Vec::new());
    };
    let pg = rec.pg;
    let d = q(deg);
    let mut out = Vec::new();
    let mut push = |id, statement, rhs: Option<Radical>| {
        let status = rhs.as_ref().map(|r| status_of(Relation::AtLeast, &rec.vol, r));
        out.push(BoundEntry {
            id,
            statement,
            applicable: rhs.is_some(),
            lhs: rhs.as_ref().map(|_| rec.vol.clone()),
            rhs,
            relation: Relation::AtLeast,
            status,
            equality_note: None,
        });
    };
    push(
        "weighted-non-ruled",
        "vol ≥ deg φ·(2pg − 4) when the canonical image is not ruled",
        img.class.is_non_ruled().then(|| plain(&d * q(2 * pg - 4))),
    );
    let gt = img.class == SurfaceClass::GeneralType;
    push(
        "weighted-general-type",
        "vol ≥ deg φ·(2pg − 4 + (√(8pg − 31) − 7)/2) when the canonical image is of general type",
        (gt && 8 * pg >= 31).then(|| Radical {
            base: &d * (q(2 * pg - 4) - rat(7, 2)),
            coef: &d * rat(1, 2),
            radicand: 8 * pg - 31,
        }),
    );
    push(
        "weighted-general-type-not-10",
        "vol ≥ deg φ·(2pg − 4 + (√(8pg − 23) − 3)/2) when the canonical image is of general type and not birational to a (1,0)-surface",
        (gt && !img.flags.contains(&SpecialFlag::Is10Surface) && 8 * pg >= 23).then(|| Radical {
            base: &d * (q(2 * pg - 4) - rat(3, 2)),
            coef: &d * rat(1, 2),
            radicand: 8 * pg - 23,
        }),
    );
    Ok(out)
}

/// Castelnuovo's genus bound for a non-degenerate curve of degree `d`
/// spanning `ℙ^{h0−1}`.
pub fn castelnuovo_bound(d: i64, h0: i64) -> Result<i64> {
    if h0 < 3 {
        return Err(FoliageError::input("the Castelnuovo bound needs h0 ≥ 3"));
    }
    if d < h0 - 1 {
        return Err(FoliageError::input("a non-degenerate curve has degree at least h0 − 1"));
    }
    let r = h0 - 2;
    let m = (d - 1) / r;
    let eps = (d - 1) - m * r;
    Ok(m * (m - 1) / 2 * r + m * eps)
}

/// Outcome of the Clifford inequality `deg ≥ 2·h0 − 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliffordCheck {
    pub holds: bool,
    pub equality: bool,
}

pub fn clifford_check(deg: i64, h0: i64) -> CliffordCheck {
    CliffordCheck { holds: deg >= 2 * h0 - 2, equality: deg == 2 * h0 - 2 }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeStatus {
    Violated,
    MinimalDegree,
    Holds,
}

impl DegreeStatus {
    pub fn name(&self) -> &'static str {
        match self {
            DegreeStatus::Violated => "violated",
            DegreeStatus::MinimalDegree => "minimal_degree",
            DegreeStatus::Holds => "holds",
        }
    }
}

/// Degree thresholds for a non-degenerate surface `Σ ⊆ ℙ^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeReport {
    pub status: DegreeStatus,
    pub non_ruled_threshold: i64,
    pub k3_threshold: bool,
    pub general_type_threshold: Radical,
    pub ten_surface_threshold: Option<Radical>,
}

pub fn minimal_degree_check(deg_sigma: i64, n: i64) -> Result<DegreeReport> {
    if n < 3 {
        return Err(FoliageError::input("the degree thresholds need N ≥ 3"));
    }
    let status = match deg_sigma.cmp(&(n - 1)) {
        Ordering::Less => DegreeStatus::Violated,
        Ordering::Equal => DegreeStatus::MinimalDegree,
        Ordering::Greater => DegreeStatus::Holds,
    };
    Ok(DegreeReport {
        status,
        non_ruled_threshold: 2 * (n - 1),
        k3_threshold: deg_sigma == 2 * (n - 1),
        general_type_threshold: Radical { base: q(2 * (n - 1)) - rat(3, 2), coef: rat(1, 2), radicand: 8 * n - 15 },
        ten_surface_threshold: (8 * n >= 23).then(|| Radical {
            base: q(2 * (n - 1)) - rat(7, 2),
            coef: rat(1, 2),
            radicand: 8 * n - 23,
        }),
    })
}
