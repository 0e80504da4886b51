//! Foliated surfaces: the class `K_F`, marked curves, and the rules that
//! transform `K_F` under fibrations, index formulas, blow-ups and covers.

use num_traits::Signed;

use crate::error::{FoliageError, Result};
use crate::lattice::{blow_up, cover_pullback, BundledClass, DivClass, SurfaceLattice};
use crate::numeric::scalar::{int, Rational};

/// The class carried by a marked curve: one curve or a bundle of alike ones.
#[derive(Clone, Debug, PartialEq)]
pub enum CurveClass {
    Single(DivClass),
    Bundle(BundledClass),
}

impl CurveClass {
    /// The class of all curves together.
    pub fn total(&self) -> &DivClass {
        match self {
            CurveClass::Single(c) => c,
            CurveClass::Bundle(b) => &b.aggregate,
        }
    }

    pub fn count(&self) -> u64 {
        match self {
            CurveClass::Single(_) => 1,
            CurveClass::Bundle(b) => b.count,
        }
    }
}

/// A marked curve with the data the index formulas and chain detection use.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveRecord {
    pub label: String,
    pub cls: CurveClass,
    pub invariant: bool,
    pub rational_smooth: bool,
    pub multiplicity_in_fiber: Option<u32>,
    pub declared_z: Option<i64>,
}

impl CurveRecord {
    pub fn new(label: &str, cls: CurveClass) -> Self {
        CurveRecord {
            label: label.to_string(),
            cls,
            invariant: false,
            rational_smooth: false,
            multiplicity_in_fiber: None,
            declared_z: None,
        }
    }

    pub fn single(label: &str, cls: DivClass) -> Self {
        CurveRecord::new(label, CurveClass::Single(cls))
    }

    pub fn bundle(label: &str, b: BundledClass) -> Self {
        CurveRecord::new(label, CurveClass::Bundle(b))
    }

    pub fn invariant(mut self, z: Option<i64>) -> Self {
        self.invariant = true;
        self.declared_z = z;
        self
    }

    pub fn rational(mut self) -> Self {
        self.rational_smooth = true;
        self
    }

    pub fn with_multiplicity(mut self, a: u32) -> Self {
        self.multiplicity_in_fiber = Some(a);
        self
    }

    /// Pairing of one member with `D`.
    pub fn dot(&self, l: &SurfaceLattice, d: &DivClass) -> Result<Rational> {
        match &self.cls {
            CurveClass::Single(c) => l.intersect(c, d),
            CurveClass::Bundle(b) => l.member_dot(b, d),
        }
    }

    /// Self-intersection of one member.
    pub fn square(&self, l: &SurfaceLattice) -> Result<Rational> {
        match &self.cls {
            CurveClass::Single(c) => l.square(c),
            CurveClass::Bundle(b) => Ok(b.member_square.clone()),
        }
    }

    /// Pairing of one member of `self` with one member of `other`, assuming
    /// members of a bundle meet any other curve alike.
    pub fn dot_curve(&self, l: &SurfaceLattice, other: &CurveRecord) -> Result<Rational> {
        if self.label == other.label {
            return self.square(l);
        }
        Ok(self.dot(l, other.cls.total())? / int(other.cls.count() as i64))
    }
}

/// Data of a fibration `f: S → B`.
#[derive(Clone, Debug, PartialEq)]
pub struct FibrationRecord {
    pub fiber_class: DivClass,
    pub base_genus: u32,
    pub fiber_genus: u32,
    pub base_canonical_pullback: DivClass,
}

/// A surface lattice with a foliation canonical class and marked curves.
#[derive(Clone, Debug, PartialEq)]
pub struct FoliatedSurface {
    pub lattice: SurfaceLattice,
    pub kf: DivClass,
    pub curves: Vec<CurveRecord>,
    pub reduced: bool,
    pub fibration: Option<FibrationRecord>,
}

impl FoliatedSurface {
    pub fn new(lattice: SurfaceLattice, kf: DivClass) -> Self {
        FoliatedSurface { lattice, kf, curves: Vec::new(), reduced: true, fibration: None }
    }

    pub fn curve(&self, label: &str) -> Option<&CurveRecord> {
        self.curves.iter().find(|c| c.label == label)
    }

    /// The normal class `N_F = K_F − K_S`.
    pub fn normal_class(&self) -> DivClass {
        self.kf.minus(&self.lattice.canonical_class())
    }
}

/// `K_F = K_rel + Σ(1 − a_i)·C_i` for the components of fibers.
pub fn canonical_from_fibration(
    s: &SurfaceLattice,
    k_rel: &DivClass,
    components: &[CurveRecord],
) -> Result<DivClass> {
    let mut k = k_rel.clone();
    s.intersect(k_rel, k_rel)?;
    for c in components {
        let a = c
            .multiplicity_in_fiber
            .ok_or_else(|| FoliageError::input(format!("fiber component {} lacks a multiplicity", c.label)))?;
        if a == 0 {
            return Err(FoliageError::input(format!("fiber component {} has multiplicity 0", c.label)));
        }
        k = k.plus(&c.cls.total().scaled(&int(1 - a as i64)));
    }
    Ok(k)
}

/// Index data of a curve: tangency order or the pair `(Z, CS)`.
#[derive(Clone, Debug, PartialEq)]
pub enum IndexReport {
    Tangency(Rational),
    Invariant { z: Rational, cs: Rational },
}

/// `tang = K_F·C + C²` for non-invariant curves; `Z = K_F·C − K_S·C − C²`
/// and `CS = C²` for invariant ones.
pub fn index_formulas(fs: &FoliatedSurface, c: &CurveRecord) -> Result<IndexReport> {
    let l = &fs.lattice;
    let kf = c.dot(l, &fs.kf)?;
    let c2 = c.square(l)?;
    if c.invariant {
        let ks = c.dot(l, &l.canonical_class())?;
        Ok(IndexReport::Invariant { z: &kf - ks - &c2, cs: c2 })
    } else {
        let t = kf + c2;
        if t.is_negative() {
            return Err(FoliageError::inconsistent(format!(
                "negative tangency {t} on non-invariant curve {}",
                c.label
            )));
        }
        Ok(IndexReport::Tangency(t))
    }
}

/// One term `coefficient · class` of the correction divisor of a cover.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrectionTerm {
    pub label: String,
    pub class: DivClass,
    pub coefficient: Rational,
}

/// `K_F̃ = Π*K_F + Σ(t_i − 1)R_i + ℰ` for a cover of a foliated surface.
///
/// When the source is reduced a negative coefficient in `ℰ` is a contract
/// violation.
pub fn riemann_hurwitz_pullback(
    fs: &FoliatedSurface,
    cover: &SurfaceLattice,
    ramified: &[(CurveRecord, u32)],
    correction: &[CorrectionTerm],
) -> Result<DivClass> {
    let mut k = cover_pullback(cover, &fs.lattice, &fs.kf)?;
    for (r, t) in ramified {
        if *t < 2 {
            return Err(FoliageError::input(format!("ramification index {t} of {} below 2", r.label)));
        }
        if r.invariant {
            return Err(FoliageError::input(format!("ramified curve {} must not be invariant", r.label)));
        }
        k = k.plus(&r.cls.total().scaled(&int(*t as i64 - 1)));
    }
    for term in correction {
        if fs.reduced && term.coefficient.is_negative() {
            return Err(FoliageError::contract(format!(
                "correction divisor has negative coefficient {} on {} over a reduced source",
                term.coefficient, term.label
            )));
        }
        k = k.plus(&term.class.scaled(&term.coefficient));
    }
    Ok(k)
}

/// The point being blown up, which fixes the coefficient of `E` in `K_F̃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlowupCenter {
    /// A regular point of the foliation.
    Smooth,
    /// A reduced singularity; coefficient `a ∈ {0, 1}`, default 1.
    Reduced(Option<i64>),
    /// A radial (dicritical) point.
    Radial,
    /// Coefficient computed elsewhere, for instance from a chart computation.
    Explicit(i64),
}

impl BlowupCenter {
    pub fn coefficient(&self) -> Result<i64> {
        match *self {
            BlowupCenter::Smooth => Ok(1),
            BlowupCenter::Reduced(None) => Ok(1),
            BlowupCenter::Reduced(Some(a)) if a == 0 || a == 1 => Ok(a),
            BlowupCenter::Reduced(Some(a)) => {
                Err(FoliageError::input(format!("reduced blow-up coefficient {a} not in {{0, 1}}")))
            }
            BlowupCenter::Radial => Ok(-1),
            BlowupCenter::Explicit(a) => Ok(a),
        }
    }
}

/// `K_F̃ = σ*K_F + a·E` on a lattice already extended by one blow-up, whose
/// last basis class is `E`.
pub fn blowup_canonical(fs: &FoliatedSurface, blown: &SurfaceLattice, center: BlowupCenter) -> Result<DivClass> {
    if blown.rank() != fs.lattice.rank() + 1 {
        return Err(FoliageError::input("lattice must be extended by exactly one blow-up"));
    }
    let pulled = blown.pullback_from(&fs.lattice, &fs.kf)?;
    let e = blown.generator(blown.basis.last().expect("nonempty basis"))?;
    Ok(pulled.plus(&e.scaled(&int(center.coefficient()?))))
}

/// Blows up one point of a foliated surface, pulling back the marked curves
/// as total transforms.
pub fn blow_up_foliated(fs: &FoliatedSurface, center: BlowupCenter) -> Result<FoliatedSurface> {
    let blown = blow_up(&fs.lattice, 1);
    let kf = blowup_canonical(fs, &blown, center)?;
    let lift = |c: &DivClass| blown.pullback_from(&fs.lattice, c);
    let mut curves = Vec::new();
    for c in &fs.curves {
        let cls = match &c.cls {
            CurveClass::Single(d) => CurveClass::Single(lift(d)?),
            CurveClass::Bundle(b) => CurveClass::Bundle(BundledClass { aggregate: lift(&b.aggregate)?, ..b.clone() }),
        };
        curves.push(CurveRecord { cls, ..c.clone() });
    }
    let reduced = fs.reduced && !matches!(center, BlowupCenter::Radial);
    Ok(FoliatedSurface { lattice: blown, kf, curves, reduced, fibration: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{make_surface, SurfaceSpec};

    #[test]
    fn generic_line_tangency() {
        let p2 = make_surface(SurfaceSpec::ProjectivePlane).unwrap();
        for d in 0..6 {
            let fs = FoliatedSurface::new(p2.clone(), p2.class_int(&[d - 1]));
            let line = CurveRecord::single("L", p2.class_int(&[1]));
            assert_eq!(index_formulas(&fs, &line).unwrap(), IndexReport::Tangency(int(d)));
        }
    }

    #[test]
    fn negative_tangency_is_inconsistent() {
        let p2 = make_surface(SurfaceSpec::ProjectivePlane).unwrap();
        let fs = FoliatedSurface::new(p2.clone(), p2.class_int(&[-3]));
        let line = CurveRecord::single("L", p2.class_int(&[1]));
        assert_eq!(index_formulas(&fs, &line).unwrap_err().code(), "model_inconsistency");
    }

    #[test]
    fn chain_interior_z() {
        let spec = SurfaceSpec::Abstract {
            basis: vec!["C".into()],
            gram: vec![vec![int(-2)]],
            canonical: vec![int(0)],
            chi: int(1),
        };
        let l = make_surface(spec).unwrap();
        let fs = FoliatedSurface::new(l.clone(), l.zero_class());
        let c = CurveRecord::single("C", l.class_int(&[1])).invariant(Some(2)).rational();
        assert_eq!(index_formulas(&fs, &c).unwrap(), IndexReport::Invariant { z: int(2), cs: int(-2) });
    }

    #[test]
    fn blow_up_coefficients() {
        let p2 = make_surface(SurfaceSpec::ProjectivePlane).unwrap();
        let fs = FoliatedSurface::new(p2.clone(), p2.class_int(&[1]));
        let blown = blow_up(&p2, 1);
        assert_eq!(blowup_canonical(&fs, &blown, BlowupCenter::Reduced(None)).unwrap().coords, vec![int(1), int(1)]);
        assert_eq!(blowup_canonical(&fs, &blown, BlowupCenter::Radial).unwrap().coords, vec![int(1), int(-1)]);
        assert_eq!(blowup_canonical(&fs, &blown, BlowupCenter::Smooth).unwrap().coords, vec![int(1), int(1)]);
        assert!(BlowupCenter::Reduced(Some(2)).coefficient().is_err());
    }

    #[test]
    fn fibration_formula() {
        let f0 = make_surface(SurfaceSpec::Hirzebruch(0)).unwrap();
        let k_rel = f0.class_int(&[-2, 0]);
        assert_eq!(canonical_from_fibration(&f0, &k_rel, &[]).unwrap(), k_rel);
        let semi = CurveRecord::single("F", f0.class_int(&[0, 1])).with_multiplicity(1);
        assert_eq!(canonical_from_fibration(&f0, &k_rel, &[semi]).unwrap(), k_rel);
        let double = CurveRecord::single("F", f0.class_int(&[0, 1])).with_multiplicity(2);
        assert_eq!(canonical_from_fibration(&f0, &k_rel, &[double]).unwrap(), f0.class_int(&[-2, -1]));
        let missing = CurveRecord::single("F", f0.class_int(&[0, 1]));
        assert!(canonical_from_fibration(&f0, &k_rel, &[missing]).is_err());
    }
}
