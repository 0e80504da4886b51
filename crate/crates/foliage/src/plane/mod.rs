//! Polynomial vector fields on the projective plane: degree, singular points,
//! eigenvalue classification, invariant curves, tangency and blow-ups.

pub mod blowup;
pub mod classify;
pub mod formal;
pub mod intersect;

use crate::error::{FoliageError, Result};
use crate::numeric::bipoly::{poly_divides, BiPoly};
use crate::numeric::dd::Cx;
use crate::numeric::quadext::QuadExt;
use crate::numeric::scalar::{ExactField, Ring};

pub use blowup::{blow_up_origin, reduce_singularities, BlowupCharts, ReductionNode, ReductionReport, DEFAULT_DEPTH_CAP};
pub use classify::{classify_exact, classify_numeric, Certainty, Classification, Eigenvalues, LinearClass, Quotient};
pub use intersect::{affine_intersections, Coord, Intersection};

/// Which chart of the projective plane a point lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Chart {
    /// Affine coordinates `(x, y)`.
    Affine,
    /// Coordinates `(u, w) = (1/x, y/x)`; only points with `u = 0` are used.
    InfinityU,
    /// Coordinates `(s, r) = (x/y, 1/y)`; only the origin is used.
    InfinityOrigin,
}

impl Chart {
    pub fn name(&self) -> &'static str {
        match self {
            Chart::Affine => "affine",
            Chart::InfinityU => "infinity_u",
            Chart::InfinityOrigin => "infinity_origin",
        }
    }
}

/// Polynomial vector field `A·∂x + B·∂y` over ℚ or one real quadratic field.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneFoliation {
    pub a: BiPoly<QuadExt>,
    pub b: BiPoly<QuadExt>,
    /// Radicand of the working quadratic field, or 0 for ℚ.
    pub ext: u64,
}

/// A located singular point with its classification.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularityReport {
    pub chart: Chart,
    pub x: Coord,
    pub y: Coord,
    pub multiplicity: usize,
    pub linear: Option<LinearClass<QuadExt>>,
    pub numeric_linear: Option<LinearClass<Cx>>,
}

impl SingularityReport {
    pub fn classification(&self) -> Option<Classification> {
        self.linear
            .as_ref()
            .map(|l| l.classification)
            .or_else(|| self.numeric_linear.as_ref().map(|l| l.classification))
    }

    pub fn certainty(&self) -> Option<Certainty> {
        self.linear
            .as_ref()
            .map(|l| l.certainty)
            .or_else(|| self.numeric_linear.as_ref().map(|l| l.certainty))
    }
}

fn jacobian(a: &BiPoly<QuadExt>, b: &BiPoly<QuadExt>) -> [[BiPoly<QuadExt>; 2]; 2] {
    [[a.partial_x(), a.partial_y()], [b.partial_x(), b.partial_y()]]
}

/// `(−u·Ã, B̃ − w·Ã)` with `Ã = u^D·A(1/u, w/u)`, saturated by powers of `u`.
fn chart_infinity_u(a: &BiPoly<QuadExt>, b: &BiPoly<QuadExt>, top: u32) -> (BiPoly<QuadExt>, BiPoly<QuadExt>) {
    let homog = |p: &BiPoly<QuadExt>| {
        BiPoly::from_terms(p.terms().into_iter().map(|((i, j), c)| ((top - i - j, j), c)))
    };
    let (at, bt) = (homog(a), homog(b));
    let u = BiPoly::x();
    let w = BiPoly::y();
    let p = u.mul(&at).neg();
    let q = bt.sub(&w.mul(&at));
    saturate_first(p, q)
}

/// `(Â − s·B̂, −r·B̂)` with `Â = r^D·A(s/r, 1/r)`, saturated by powers of `r`.
fn chart_infinity_origin(a: &BiPoly<QuadExt>, b: &BiPoly<QuadExt>, top: u32) -> (BiPoly<QuadExt>, BiPoly<QuadExt>) {
    let homog = |p: &BiPoly<QuadExt>| {
        BiPoly::from_terms(p.terms().into_iter().map(|((i, j), c)| ((i, top - i - j), c)))
    };
    let (ah, bh) = (homog(a), homog(b));
    let s = BiPoly::x();
    let r = BiPoly::y();
    let p = ah.sub(&s.mul(&bh));
    let q = r.mul(&bh).neg();
    let (p, q) = saturate_first(p.swap(), q.swap());
    (p.swap(), q.swap())
}

fn saturate_first(p: BiPoly<QuadExt>, q: BiPoly<QuadExt>) -> (BiPoly<QuadExt>, BiPoly<QuadExt>) {
    let k = p.x_adic_order().min(q.x_adic_order());
    if k == 0 || k == u32::MAX {
        (p, q)
    } else {
        (p.div_x_pow(k), q.div_x_pow(k))
    }
}

impl PlaneFoliation {
    /// Builds a saturated field; a common nonconstant factor of `A` and `B` is
    /// an input error.
    pub fn new(a: BiPoly<QuadExt>, b: BiPoly<QuadExt>, ext: u64) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(FoliageError::input("zero vector field"));
        }
        let f = PlaneFoliation { a, b, ext };
        if f.a.is_zero() || f.b.is_zero() {
            let other = if f.a.is_zero() { &f.b } else { &f.a };
            if !other.is_constant() {
                return Err(FoliageError::input("vector field is not saturated: one component divides the other"));
            }
            return Ok(f);
        }
        intersect::affine_intersection_count(&f.a, &f.b).map_err(|_| {
            FoliageError::input("vector field is not saturated: A and B share a nonconstant factor")
        })?;
        Ok(f)
    }

    pub fn from_rational(a: BiPoly<crate::numeric::scalar::Rational>, b: BiPoly<crate::numeric::scalar::Rational>) -> Result<Self> {
        PlaneFoliation::new(a.map(|c| QuadExt::rational(c.clone())), b.map(|c| QuadExt::rational(c.clone())), 0)
    }

    /// Largest total degree of `A`, `B`.
    pub fn top_degree(&self) -> u32 {
        self.a.degree().unwrap_or(0).max(self.b.degree().unwrap_or(0))
    }

    /// Degree of the foliation: tangencies with a generic line.
    pub fn degree(&self) -> u32 {
        let top = self.top_degree();
        let radial = BiPoly::x()
            .mul(&self.b.homogeneous_part(top))
            .sub(&BiPoly::y().mul(&self.a.homogeneous_part(top)));
        if radial.is_zero() {
            top.saturating_sub(1)
        } else {
            top
        }
    }

    /// The saturated field in the chart `(u, w) = (1/x, y/x)`.
    pub fn chart_u(&self) -> (BiPoly<QuadExt>, BiPoly<QuadExt>) {
        chart_infinity_u(&self.a, &self.b, self.top_degree())
    }

    /// The saturated field in the chart `(s, r) = (x/y, 1/y)`.
    pub fn chart_origin(&self) -> (BiPoly<QuadExt>, BiPoly<QuadExt>) {
        chart_infinity_origin(&self.a, &self.b, self.top_degree())
    }

    /// The field components in the given chart.
    pub fn chart_field(&self, chart: Chart) -> (BiPoly<QuadExt>, BiPoly<QuadExt>) {
        match chart {
            Chart::Affine => (self.a.clone(), self.b.clone()),
            Chart::InfinityU => self.chart_u(),
            Chart::InfinityOrigin => self.chart_origin(),
        }
    }

    /// Whether the line at infinity is invariant.
    pub fn line_at_infinity_invariant(&self) -> bool {
        let (p, _) = self.chart_u();
        p.x_adic_order() >= 1
    }

    /// `v(f) = A·f_x + B·f_y`.
    pub fn apply(&self, f: &BiPoly<QuadExt>) -> BiPoly<QuadExt> {
        self.a.mul(&f.partial_x()).add(&self.b.mul(&f.partial_y()))
    }

    /// Whether the curve `f = 0` is invariant: `f` divides `v(f)`.
    pub fn is_invariant_curve(&self, f: &BiPoly<QuadExt>) -> bool {
        poly_divides(f, &self.apply(f))
    }

    /// All singular points with multiplicities, unclassified.
    pub fn locate_singularities(&self) -> Result<Vec<(Chart, Intersection)>> {
        let mut out = Vec::new();
        for p in affine_intersections(&self.a, &self.b, self.ext)? {
            out.push((Chart::Affine, p));
        }
        let (pu, qu) = self.chart_u();
        for p in affine_intersections(&pu, &qu, self.ext)? {
            if p.x.is_zero_within(1e-20) {
                out.push((Chart::InfinityU, p));
            }
        }
        let (po, qo) = self.chart_origin();
        if po.coeff(0, 0).is_zero() && qo.coeff(0, 0).is_zero() {
            for p in affine_intersections(&po, &qo, self.ext)? {
                if p.x.is_exact_zero() && p.y.is_exact_zero() {
                    out.push((Chart::InfinityOrigin, p));
                }
            }
        }
        Ok(out)
    }

    /// Singular points with classification.
    pub fn find_singularities(&self) -> Result<Vec<SingularityReport>> {
        let mut out = Vec::new();
        for (chart, p) in self.locate_singularities()? {
            out.push(self.classify_located(chart, p)?);
        }
        Ok(out)
    }

    /// Total number of singular points counted with multiplicity.
    pub fn singularity_count(&self) -> Result<usize> {
        Ok(self.locate_singularities()?.iter().map(|(_, p)| p.multiplicity).sum())
    }

    fn classify_located(&self, chart: Chart, p: Intersection) -> Result<SingularityReport> {
        let (a, b) = self.chart_field(chart);
        let j = jacobian(&a, &b);
        let (linear, numeric_linear) = match (p.x.exact(), p.y.exact()) {
            (Some(x), Some(y)) => {
                let m = [[j[0][0].eval(x, y), j[0][1].eval(x, y)], [j[1][0].eval(x, y), j[1][1].eval(x, y)]];
                (Some(classify_exact(&m)), None)
            }
            _ => {
                let (x, y) = (p.x.approx(), p.y.approx());
                let lift = |q: &BiPoly<QuadExt>| q.map(|c| c.approx().expect("real value")).eval(&x, &y);
                let m = [[lift(&j[0][0]), lift(&j[0][1])], [lift(&j[1][0]), lift(&j[1][1])]];
                (None, Some(classify_numeric(&m)))
            }
        };
        Ok(SingularityReport { chart, x: p.x, y: p.y, multiplicity: p.multiplicity, linear, numeric_linear })
    }

    /// Classifies the singular point `(x, y)` of the given chart.
    pub fn classify_singularity(&self, chart: Chart, x: &QuadExt, y: &QuadExt) -> Result<SingularityReport> {
        let (a, b) = self.chart_field(chart);
        if !a.eval(x, y).is_zero() || !b.eval(x, y).is_zero() {
            return Err(FoliageError::input(format!("({x}, {y}) is not a zero of the field")));
        }
        let multiplicity = affine_intersections(&a.translate(x, y), &b.translate(x, y), self.ext)?
            .into_iter()
            .find(|p| p.x.is_exact_zero() && p.y.is_exact_zero())
            .map_or(1, |p| p.multiplicity);
        let p = Intersection { x: Coord::Exact(x.clone()), y: Coord::Exact(y.clone()), multiplicity };
        self.classify_located(chart, p)
    }

    /// Total tangency order of a non-invariant curve `f = 0` with the
    /// foliation, summed over the whole plane.
    pub fn tangency(&self, f: &BiPoly<QuadExt>) -> Result<usize> {
        if f.is_constant() {
            return Err(FoliageError::input("tangency needs a nonconstant curve"));
        }
        if self.is_invariant_curve(f) {
            return Err(FoliageError::input("curve is invariant; tangency is undefined"));
        }
        let mut total = intersect::affine_intersection_count(f, &self.apply(f))?;
        let e = f.degree().unwrap_or(0);
        let homog_u = BiPoly::from_terms(f.terms().into_iter().map(|((i, j), c)| ((e - i - j, j), c)));
        let (pu, qu) = self.chart_u();
        let vf_u = pu.mul(&homog_u.partial_x()).add(&qu.mul(&homog_u.partial_y()));
        for p in affine_intersections(&homog_u, &vf_u, self.ext)? {
            if p.x.is_zero_within(1e-20) {
                total += p.multiplicity;
            }
        }
        let homog_o = BiPoly::from_terms(f.terms().into_iter().map(|((i, j), c)| ((i, e - i - j), c)));
        if homog_o.coeff(0, 0).is_zero() {
            let (po, qo) = self.chart_origin();
            let vf_o = po.mul(&homog_o.partial_x()).add(&qo.mul(&homog_o.partial_y()));
            for p in affine_intersections(&homog_o, &vf_o, self.ext)? {
                if p.x.is_exact_zero() && p.y.is_exact_zero() {
                    total += p.multiplicity;
                }
            }
        }
        Ok(total)
    }
}
