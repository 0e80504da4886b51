//! Néron–Severi lattice models of the explicit surfaces: intersection
//! pairing, blow-ups, finite covers, Riemann–Roch and closed-form `h⁰`.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_traits::{Signed, Zero};

use crate::error::{FoliageError, Result};
use crate::numeric::scalar::{int, rat, to_i64, Rational};

/// A divisor class as a coordinate vector in the basis of its lattice.
#[derive(Clone, Debug, PartialEq)]
pub struct DivClass {
    pub coords: Vec<Rational>,
    pub lattice_id: String,
}

impl DivClass {
    pub fn plus(&self, o: &DivClass) -> DivClass {
        assert_eq!(self.lattice_id, o.lattice_id, "classes from different lattices");
        DivClass {
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
            lattice_id: self.lattice_id.clone(),
        }
    }

    pub fn minus(&self, o: &DivClass) -> DivClass {
        self.plus(&o.scaled(&int(-1)))
    }

    pub fn scaled(&self, c: &Rational) -> DivClass {
        DivClass { coords: self.coords.iter().map(|a| a * c).collect(), lattice_id: self.lattice_id.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Whether every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

/// Which closed-form surface a lattice models, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceKind {
    ProjectivePlane,
    Hirzebruch(u32),
    ProductRuled(u32),
    Abstract,
    Derived,
}

/// Input to [`make_surface`].
#[derive(Clone, Debug)]
pub enum SurfaceSpec {
    ProjectivePlane,
    Hirzebruch(u32),
    ProductRuled(u32),
    Abstract { basis: Vec<String>, gram: Vec<Vec<Rational>>, canonical: Vec<Rational>, chi: Rational },
}

/// Cover data kept in the provenance of a covering lattice.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverRecord {
    pub degree: u32,
    pub base_id: String,
    pub branch_half: Vec<Rational>,
}

/// How a lattice was built.
#[derive(Clone, Debug, PartialEq)]
pub struct Provenance {
    pub base: String,
    pub blowup_centers: u64,
    pub cover: Option<CoverRecord>,
}

/// Néron–Severi lattice with canonical class and `χ(O_S)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceLattice {
    pub id: String,
    pub kind: SurfaceKind,
    pub basis: Vec<String>,
    pub gram: Vec<Vec<Rational>>,
    pub canonical: Vec<Rational>,
    pub chi: Rational,
    pub provenance: Provenance,
}

/// A family of interchangeable curves stored through their sum.
///
/// `aggregate` is the class of the whole family; pairings of one member with a
/// class that meets all members alike are `aggregate · D / count`.
#[derive(Clone, Debug, PartialEq)]
pub struct BundledClass {
    pub aggregate: DivClass,
    pub count: u64,
    pub member_square: Rational,
    pub pairwise_disjoint: bool,
}

impl BundledClass {
    /// The mean member `aggregate / count`.
    pub fn unit(&self) -> DivClass {
        self.aggregate.scaled(&Rational::new(1.into(), self.count.into()))
    }
}

fn lattice_id(basis: &[String], gram: &[Vec<Rational>], canonical: &[Rational]) -> String {
    let mut h = DefaultHasher::new();
    basis.hash(&mut h);
    for row in gram {
        for v in row {
            v.to_string().hash(&mut h);
        }
    }
    for v in canonical {
        v.to_string().hash(&mut h);
    }
    format!("{:016x}", h.finish())
}

fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
}

impl SurfaceLattice {
    fn assemble(
        kind: SurfaceKind,
        basis: Vec<String>,
        gram: Vec<Vec<Rational>>,
        canonical: Vec<Rational>,
        chi: Rational,
        provenance: Provenance,
    ) -> Self {
        let id = lattice_id(&basis, &gram, &canonical);
        SurfaceLattice { id, kind, basis, gram, canonical, chi, provenance }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn class(&self, coords: Vec<Rational>) -> DivClass {
        assert_eq!(coords.len(), self.rank(), "coordinate length must equal the basis length");
        DivClass { coords, lattice_id: self.id.clone() }
    }

    pub fn class_int(&self, coords: &[i64]) -> DivClass {
        self.class(coords.iter().map(|&v| int(v)).collect())
    }

    pub fn zero_class(&self) -> DivClass {
        self.class(vec![Rational::zero(); self.rank()])
    }

    /// The basis element with the given label.
    pub fn generator(&self, label: &str) -> Result<DivClass> {
        let i = self
            .basis
            .iter()
            .position(|b| b == label)
            .ok_or_else(|| FoliageError::input(format!("unknown basis label {label}")))?;
        let mut c = vec![Rational::zero(); self.rank()];
        c[i] = int(1);
        Ok(self.class(c))
    }

    pub fn canonical_class(&self) -> DivClass {
        self.class(self.canonical.clone())
    }

    fn check(&self, d: &DivClass) -> Result<()> {
        if d.lattice_id != self.id || d.coords.len() != self.rank() {
            return Err(FoliageError::input("class does not belong to this lattice"));
        }
        Ok(())
    }

    /// The intersection number `D1 · D2`.
    pub fn intersect(&self, d1: &DivClass, d2: &DivClass) -> Result<Rational> {
        self.check(d1)?;
        self.check(d2)?;
        let mut acc = Rational::zero();
        for (i, a) in d1.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in d2.coords.iter().enumerate() {
                if !b.is_zero() {
                    acc += a * b * &self.gram[i][j];
                }
            }
        }
        Ok(acc)
    }

    pub fn square(&self, d: &DivClass) -> Result<Rational> {
        self.intersect(d, d)
    }

    /// `K_S · D`.
    pub fn canonical_dot(&self, d: &DivClass) -> Result<Rational> {
        self.intersect(&self.canonical_class(), d)
    }

    /// Arithmetic genus `1 + ½(C² + K·C)`.
    pub fn arithmetic_genus(&self, c: &DivClass) -> Result<Rational> {
        Ok(int(1) + (self.square(c)? + self.canonical_dot(c)?) / int(2))
    }

    /// Pairing of one member of a bundle with a class `D`.
    pub fn member_dot(&self, b: &BundledClass, d: &DivClass) -> Result<Rational> {
        Ok(self.intersect(&b.aggregate, d)? / int(b.count as i64))
    }

    /// Builds a bundle, validating the disjointness bookkeeping.
    pub fn bundle(&self, aggregate: DivClass, count: u64, member_square: Rational) -> Result<BundledClass> {
        if count == 0 {
            return Err(FoliageError::input("bundle count must be positive"));
        }
        let sq = self.square(&aggregate)?;
        if sq != int(count as i64) * &member_square {
            return Err(FoliageError::input(format!(
                "bundle aggregate square {sq} differs from count·member square {}",
                int(count as i64) * &member_square
            )));
        }
        Ok(BundledClass { aggregate, count, member_square, pairwise_disjoint: true })
    }

    /// Moves a class of a base lattice to this one through the coordinate
    /// embedding used by blow-ups (old basis first, new classes appended).
    pub fn pullback_from(&self, base: &SurfaceLattice, d: &DivClass) -> Result<DivClass> {
        base.check(d)?;
        if base.rank() > self.rank() {
            return Err(FoliageError::input("target lattice is smaller than the base"));
        }
        let mut c = d.coords.clone();
        c.resize(self.rank(), Rational::zero());
        Ok(self.class(c))
    }
}

/// Constructs one of the built-in surfaces or an abstract lattice.
pub fn make_surface(spec: SurfaceSpec) -> Result<SurfaceLattice> {
    let prov = |base: &str| Provenance { base: base.to_string(), blowup_centers: 0, cover: None };
    Ok(match spec {
        SurfaceSpec::ProjectivePlane => SurfaceLattice::assemble(
            SurfaceKind::ProjectivePlane,
            vec!["H".into()],
            ints(&[&[1]]),
            vec![int(-3)],
            int(1),
            prov("projective_plane"),
        ),
        SurfaceSpec::Hirzebruch(n) => SurfaceLattice::assemble(
            SurfaceKind::Hirzebruch(n),
            vec!["C0".into(), "G".into()],
            ints(&[&[-(n as i64), 1], &[1, 0]]),
            vec![int(-2), int(-(n as i64) - 2)],
            int(1),
            prov(&format!("hirzebruch({n})")),
        ),
        SurfaceSpec::ProductRuled(b) => SurfaceLattice::assemble(
            SurfaceKind::ProductRuled(b),
            vec!["A".into(), "Bf".into()],
            ints(&[&[0, 1], &[1, 0]]),
            vec![int(2 * b as i64 - 2), int(-2)],
            int(1 - b as i64),
            prov(&format!("product_ruled({b})")),
        ),
        SurfaceSpec::Abstract { basis, gram, canonical, chi } => {
            let n = basis.len();
            if gram.len() != n || gram.iter().any(|r| r.len() != n) || canonical.len() != n {
                return Err(FoliageError::input("abstract lattice dimensions do not match the basis"));
            }
            for i in 0..n {
                for j in 0..i {
                    if gram[i][j] != gram[j][i] {
                        return Err(FoliageError::input(format!("gram matrix not symmetric at ({i},{j})")));
                    }
                }
            }
            SurfaceLattice::assemble(SurfaceKind::Abstract, basis, gram, canonical, chi, prov("abstract"))
        }
    })
}

fn extend_blown_up(l: &SurfaceLattice, labels: Vec<String>, squares: Vec<Rational>) -> SurfaceLattice {
    let n = l.rank();
    let k = labels.len();
    let mut gram = vec![vec![Rational::zero(); n + k]; n + k];
    for i in 0..n {
        for j in 0..n {
            gram[i][j] = l.gram[i][j].clone();
        }
    }
    for (t, s) in squares.into_iter().enumerate() {
        gram[n + t][n + t] = s;
    }
    let mut basis = l.basis.clone();
    basis.extend(labels);
    let mut canonical = l.canonical.clone();
    canonical.extend(std::iter::repeat_n(int(1), k));
    let blowups = l.provenance.blowup_centers;
    let provenance = Provenance { blowup_centers: blowups, ..l.provenance.clone() };
    let kind = if k == 0 { l.kind.clone() } else { SurfaceKind::Derived };
    SurfaceLattice::assemble(kind, basis, gram, canonical, l.chi.clone(), provenance)
}

/// Blows up `count` distinct points, appending exceptional classes
/// `E1..Ek` with `Ei² = −1` and `K ↦ K + ΣEi`.
pub fn blow_up(l: &SurfaceLattice, count: usize) -> SurfaceLattice {
    if count == 0 {
        return l.clone();
    }
    let start = l.basis.iter().filter(|b| b.starts_with('E')).count();
    let labels = (1..=count).map(|i| format!("E{}", start + i)).collect();
    let mut out = extend_blown_up(l, labels, vec![int(-1); count]);
    out.provenance.blowup_centers += count as u64;
    out.id = lattice_id(&out.basis, &out.gram, &out.canonical);
    out
}

/// Blows up `count` points whose exceptional curves are stored as one bundle
/// labelled `label`.
pub fn blow_up_bundled(l: &SurfaceLattice, count: u64, label: &str) -> Result<(SurfaceLattice, BundledClass)> {
    if count == 0 {
        return Err(FoliageError::input("bundled blow-up needs at least one center"));
    }
    let mut out = extend_blown_up(l, vec![label.to_string()], vec![int(-(count as i64))]);
    out.provenance.blowup_centers += count;
    out.id = lattice_id(&out.basis, &out.gram, &out.canonical);
    let e = out.generator(label)?;
    let b = out.bundle(e, count, int(-1))?;
    Ok((out, b))
}

/// A class of a cover that is not a pullback, given by its pairings.
#[derive(Clone, Debug)]
pub struct ExtraClass {
    pub label: String,
    /// Pairings with the pulled-back basis classes, in base basis order.
    pub with_pullbacks: Vec<Rational>,
    /// Pairings with the extra classes listed so far, ending with its own square.
    pub with_extras: Vec<Rational>,
}

/// Cyclic cover of degree `e` branched along a divisor `B ∼ e·L`, where `L`
/// is `branch_half` (the half of the branch class for double covers).
///
/// The new basis is the pullbacks `π*b` (labelled `p*b`) followed by the extra
/// classes; pullback pairings scale by `e`, `K = π*(K + (e−1)L)` and
/// `χ = e·χ + Σ_{i=1}^{e−1} ½·iL·(iL + K)`.
pub fn finite_cover(
    l: &SurfaceLattice,
    degree: u32,
    branch_half: &DivClass,
    extras: &[ExtraClass],
) -> Result<SurfaceLattice> {
    if degree < 2 {
        return Err(FoliageError::input(format!("cover degree {degree} must be at least 2")));
    }
    l.check(branch_half)?;
    let n = l.rank();
    let k = extras.len();
    let e = int(degree as i64);
    let mut gram = vec![vec![Rational::zero(); n + k]; n + k];
    for i in 0..n {
        for j in 0..n {
            gram[i][j] = &l.gram[i][j] * &e;
        }
    }
    for (t, x) in extras.iter().enumerate() {
        if x.with_pullbacks.len() != n || x.with_extras.len() != t + 1 {
            return Err(FoliageError::input(format!("extra class {} has malformed pairings", x.label)));
        }
        for i in 0..n {
            gram[n + t][i] = x.with_pullbacks[i].clone();
            gram[i][n + t] = x.with_pullbacks[i].clone();
        }
        for s in 0..=t {
            gram[n + t][n + s] = x.with_extras[s].clone();
            gram[n + s][n + t] = x.with_extras[s].clone();
        }
    }
    let k_base = l.canonical_class();
    let mut canonical: Vec<Rational> =
        k_base.plus(&branch_half.scaled(&(e.clone() - int(1)))).coords;
    canonical.extend(std::iter::repeat_n(Rational::zero(), k));
    let mut chi = &l.chi * &e;
    for i in 1..degree {
        let il = branch_half.scaled(&int(i as i64));
        chi += l.intersect(&il, &il.plus(&k_base))? / int(2);
    }
    let mut basis: Vec<String> = l.basis.iter().map(|b| format!("p*{b}")).collect();
    basis.extend(extras.iter().map(|x| x.label.clone()));
    let provenance = Provenance {
        base: l.provenance.base.clone(),
        blowup_centers: l.provenance.blowup_centers,
        cover: Some(CoverRecord { degree, base_id: l.id.clone(), branch_half: branch_half.coords.clone() }),
    };
    Ok(SurfaceLattice::assemble(SurfaceKind::Derived, basis, gram, canonical, chi, provenance))
}

/// One component `a·D` of a branch divisor.
#[derive(Clone, Debug)]
pub struct BranchComponent {
    pub class: DivClass,
    pub multiplicity: u32,
}

/// Normalized cyclic cover of degree `e` defined by `Σ a_j·D_j ∼ e·L` with
/// `L = line`.
///
/// Returns the lattice of pulled-back classes and the splitting
/// `π_*O = ⊕ (L⁽ⁱ⁾)⁻¹` with `L⁽ⁱ⁾ = iL − Σ⌊i·a_j/e⌋·D_j`. The canonical class
/// is the ℚ-class `π*(K + Σ(1 − gcd(a_j, e)/e)·D_j)` of the normal cover and
/// `χ = Σ χ(−L⁽ⁱ⁾)`, which is `χ(O)` of any resolution when the cover has
/// rational singularities.
pub fn normal_cyclic_cover(
    l: &SurfaceLattice,
    degree: u32,
    line: &DivClass,
    branch: &[BranchComponent],
) -> Result<(SurfaceLattice, Vec<DivClass>)> {
    l.check(line)?;
    let e = degree as i64;
    let mut total = l.zero_class();
    for c in branch {
        l.check(&c.class)?;
        if c.multiplicity == 0 || c.multiplicity as i64 >= e {
            return Err(FoliageError::input(format!(
                "branch multiplicity {} must lie in 1..{degree}",
                c.multiplicity
            )));
        }
        total = total.plus(&c.class.scaled(&int(c.multiplicity as i64)));
    }
    if total != line.scaled(&int(e)) {
        return Err(FoliageError::input("branch divisor is not linearly equivalent to degree·L"));
    }
    let mut cover = finite_cover(l, degree, line, &[])?;
    let splitting: Vec<DivClass> = (0..e)
        .map(|i| {
            branch.iter().fold(line.scaled(&int(i)), |acc, c| {
                acc.minus(&c.class.scaled(&int(i * c.multiplicity as i64 / e)))
            })
        })
        .collect();
    let mut k = l.canonical_class();
    for c in branch {
        let g = num_integer::gcd(c.multiplicity as i64, e);
        k = k.plus(&c.class.scaled(&(int(1) - rat(g, e))));
    }
    let mut chi = Rational::zero();
    for li in &splitting {
        chi += chi_of_class(l, &li.scaled(&int(-1)))?;
    }
    let n = l.rank();
    cover.canonical = k.coords;
    cover.canonical.resize(n, Rational::zero());
    cover.chi = chi;
    cover.id = lattice_id(&cover.basis, &cover.gram, &cover.canonical);
    Ok((cover, splitting))
}

/// Pulls a base class up along a cover built by [`finite_cover`].
pub fn cover_pullback(cover: &SurfaceLattice, base: &SurfaceLattice, d: &DivClass) -> Result<DivClass> {
    match &cover.provenance.cover {
        Some(rec) if rec.base_id == base.id => cover.pullback_from(base, d),
        _ => Err(FoliageError::input("lattice is not a cover of the given base")),
    }
}

/// Riemann–Roch: `χ(O_S) + ½·D·(D − K_S)`.
pub fn chi_of_class(l: &SurfaceLattice, d: &DivClass) -> Result<Rational> {
    let dk = d.minus(&l.canonical_class());
    Ok(&l.chi + l.intersect(d, &dk)? / int(2))
}

/// Closed-form `h⁰` on the plane and Hirzebruch surfaces; `None` when the
/// surface or class is outside the supported range.
pub fn h0_closed_form(l: &SurfaceLattice, d: &DivClass) -> Option<u64> {
    l.check(d).ok()?;
    if !d.is_integral() {
        return None;
    }
    match l.kind {
        SurfaceKind::ProjectivePlane => {
            let k = to_i64(&d.coords[0])?;
            Some(if k < 0 { 0 } else { ((k + 1) * (k + 2) / 2) as u64 })
        }
        SurfaceKind::Hirzebruch(n) => {
            let a = to_i64(&d.coords[0])?;
            let b = to_i64(&d.coords[1])?;
            if a < 0 {
                return Some(0);
            }
            Some((0..=a).map(|i| (b - i * n as i64 + 1).max(0) as u64).sum())
        }
        _ => None,
    }
}

/// Whether all coordinates of a class are nonnegative.
pub fn is_effective_combination(coeffs: &[Rational]) -> bool {
    coeffs.iter().all(|c| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;


    #[test]
    fn built_in_canonical_squares() {
        let p2 = make_surface(SurfaceSpec::ProjectivePlane).unwrap();
        assert_eq!(p2.square(&p2.canonical_class()).unwrap(), int(9));
        let f2 = make_surface(SurfaceSpec::Hirzebruch(2)).unwrap();
        assert_eq!(f2.square(&f2.canonical_class()).unwrap(), int(8));
        for b in 0..5 {
            let y = make_surface(SurfaceSpec::ProductRuled(b)).unwrap();
            assert_eq!(y.square(&y.canonical_class()).unwrap(), int(8 - 8 * b as i64));
        }
    }

    #[test]
    fn hirzebruch_pairing() {
        let f1 = make_surface(SurfaceSpec::Hirzebruch(1)).unwrap();
        assert_eq!(f1.intersect(&f1.class_int(&[1, 1]), &f1.class_int(&[0, 1])).unwrap(), int(1));
        let d = f1.class(vec![int(1), rat(3, 2)]);
        assert_eq!(f1.square(&d).unwrap(), int(2));
    }

    #[test]
    fn graph_class_square() {
        let y = make_surface(SurfaceSpec::ProductRuled(3)).unwrap();
        for m in 1..5 {
            assert_eq!(y.square(&y.class_int(&[2 * m, 1])).unwrap(), int(4 * m));
        }
    }

    #[test]
    fn blow_up_drops_k_squared() {
        let p2 = make_surface(SurfaceSpec::ProjectivePlane).unwrap();
        let b = blow_up(&p2, 1);
        assert_eq!(b.square(&b.canonical_class()).unwrap(), int(8));
        let f0 = make_surface(SurfaceSpec::Hirzebruch(0)).unwrap();
        assert_eq!(blow_up(&f0, 0), f0);
    }

    #[test]
    fn k3_double_plane() {
        let p2 = make_surface(SurfaceSpec::ProjectivePlane).unwrap();
        let s = finite_cover(&p2, 2, &p2.class_int(&[3]), &[]).unwrap();
        assert!(s.canonical_class().is_zero());
        assert_eq!(s.chi, int(2));
    }

    #[test]
    fn hirzebruch_two_double_cover_chi() {
        let f2 = make_surface(SurfaceSpec::Hirzebruch(2)).unwrap();
        let s = finite_cover(&f2, 2, &f2.class_int(&[3, 5]), &[]).unwrap();
        assert_eq!(s.chi, int(3));
        assert!(finite_cover(&f2, 1, &f2.class_int(&[3, 5]), &[]).is_err());
    }

    #[test]
    fn normal_cover_matches_smooth_double_plane() {
        let p2 = make_surface(SurfaceSpec::ProjectivePlane).unwrap();
        let branch = [BranchComponent { class: p2.class_int(&[6]), multiplicity: 1 }];
        let (s, split) = normal_cyclic_cover(&p2, 2, &p2.class_int(&[3]), &branch).unwrap();
        let t = finite_cover(&p2, 2, &p2.class_int(&[3]), &[]).unwrap();
        assert_eq!(s, t);
        assert_eq!(split, vec![p2.class_int(&[0]), p2.class_int(&[3])]);
    }

    #[test]
    fn normal_cover_with_multiple_branch_lines() {
        let p2 = make_surface(SurfaceSpec::ProjectivePlane).unwrap();
        for d in 2..7u32 {
            let h = p2.class_int(&[1]);
            let branch: Vec<BranchComponent> = [1, d - 1, 1, d - 1]
                .iter()
                .map(|&a| BranchComponent { class: h.clone(), multiplicity: a })
                .collect();
            let (s, split) = normal_cyclic_cover(&p2, d, &p2.class_int(&[2]), &branch).unwrap();
            assert_eq!(split[0], p2.class_int(&[0]));
            assert!(split[1..].iter().all(|c| *c == p2.class_int(&[2])));
            assert_eq!(s.chi, int(1));
            assert_eq!(s.canonical, vec![rat(d as i64 - 4, d as i64)]);
        }
        let bad = [BranchComponent { class: p2.class_int(&[3]), multiplicity: 1 }];
        assert!(normal_cyclic_cover(&p2, 2, &p2.class_int(&[2]), &bad).is_err());
    }

    #[test]
    fn riemann_roch_examples() {
        let p2 = make_surface(SurfaceSpec::ProjectivePlane).unwrap();
        assert_eq!(chi_of_class(&p2, &p2.zero_class()).unwrap(), int(1));
        assert_eq!(chi_of_class(&p2, &p2.canonical_class()).unwrap(), int(1));
    }

    #[test]
    fn h0_values() {
        let p2 = make_surface(SurfaceSpec::ProjectivePlane).unwrap();
        assert_eq!(h0_closed_form(&p2, &p2.class_int(&[3])), Some(10));
        assert_eq!(h0_closed_form(&p2, &p2.class_int(&[-1])), Some(0));
        for n in 1..6 {
            let f = make_surface(SurfaceSpec::Hirzebruch(n)).unwrap();
            assert_eq!(h0_closed_form(&f, &f.class_int(&[0, n as i64 - 1])), Some(n as u64));
        }
        for d in 1..8i64 {
            let a = h0_closed_form(&p2, &p2.class_int(&[d + 2])).unwrap();
            let b = h0_closed_form(&p2, &p2.class_int(&[d - 1])).unwrap();
            assert_eq!(a + b, (d * d + 4 * d + 6) as u64);
        }
    }

    #[test]
    fn asymmetric_abstract_rejected() {
        let spec = SurfaceSpec::Abstract {
            basis: vec!["a".into(), "b".into()],
            gram: vec![vec![int(0), int(1)], vec![int(2), int(0)]],
            canonical: vec![int(0), int(0)],
            chi: int(1),
        };
        assert!(make_surface(spec).is_err());
    }
}
