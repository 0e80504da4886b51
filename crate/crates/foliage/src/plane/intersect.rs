use crate::error::{FoliageError, Result};
use crate::numeric::bipoly::BiPoly;
use crate::numeric::dd::{cabs, Cx};
use crate::numeric::quadext::QuadExt;
use crate::numeric::resultant::{resultant_eliminate, Variable};
use crate::numeric::roots::{complex_roots, RootField};
use crate::numeric::scalar::{rat, ExactField, Field, Ring};
use crate::numeric::upoly::UPoly;

/// A coordinate of a point: exact in the working field or a certified
/// numerical approximation.
#[derive(Clone, Debug, PartialEq)]
pub enum Coord {
    Exact(QuadExt),
    Approx { value: Cx, radius: f64 },
}

impl Coord {
    pub fn exact(&self) -> Option<&QuadExt> {
        match self {
            Coord::Exact(v) => Some(v),
            Coord::Approx { .. } => None,
        }
    }

    pub fn approx(&self) -> Cx {
        match self {
            Coord::Exact(v) => v.approx().expect("real quadratic value"),
            Coord::Approx { value, .. } => *value,
        }
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self, Coord::Exact(v) if v.is_zero())
    }

    /// Exact value, or a decimal approximation with its error radius.
    pub fn display(&self) -> String {
        match self {
            Coord::Exact(v) => v.to_string(),
            Coord::Approx { value, radius } => {
                let (re, im) = (value.re.to_f64(), value.im.to_f64());
                if im.abs() <= *radius {
                    format!("{re:.12}±{radius:.1e}")
                } else {
                    format!("{re:.12}{im:+.12}i±{radius:.1e}")
                }
            }
        }
    }

    /// Exactly zero, or numerically zero within its radius.
    pub fn is_zero_within(&self, tol: f64) -> bool {
        match self {
            Coord::Exact(v) => v.is_zero(),
            Coord::Approx { value, radius } => cabs(value).to_f64() <= tol.max(*radius),
        }
    }
}

/// A common zero of two polynomials with its intersection multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Intersection {
    pub x: Coord,
    pub y: Coord,
    pub multiplicity: usize,
}

impl Intersection {
    pub fn is_exact(&self) -> bool {
        self.x.exact().is_some() && self.y.exact().is_some()
    }
}

const SHEARS: [(i64, i64); 14] =
    [(0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2), (3, 1), (-3, 1), (2, 3), (5, 1), (-5, 2), (7, 1), (-7, 3)];

/// `p(x, w − c·x)`, so that the new second coordinate is `w = y + c·x`.
fn shear(p: &BiPoly<QuadExt>, c: &QuadExt) -> BiPoly<QuadExt> {
    let x = BiPoly::x();
    let w = BiPoly::y().sub(&x.scale(c));
    p.compose(&x, &w)
}

fn leading_x_constant(p: &BiPoly<QuadExt>) -> bool {
    match p.degree() {
        Some(d) => !p.coeff(d, 0).is_zero(),
        None => false,
    }
}

fn squarefree_part(g: &UPoly<QuadExt>) -> UPoly<QuadExt> {
    let d = g.derivative();
    if d.is_zero() {
        return g.monic();
    }
    g.divrem(&g.gcd(&d)).0.monic()
}

enum Attempt {
    Done(Vec<Intersection>),
    NotSeparated,
}

/// All common zeros of `p` and `q` in the affine plane, each with its
/// intersection multiplicity.
///
/// After a generic shear `w = y + c·x` both polynomials have constant leading
/// coefficient in `x`, so the multiplicity of a root `w₀` of `Res_x` is the sum
/// of intersection multiplicities on the line `w = w₀`; shears are retried
/// until every such line carries a single common zero. Roots in the working
/// field are exact; the rest are located numerically.
pub fn affine_intersections(p: &BiPoly<QuadExt>, q: &BiPoly<QuadExt>, ext: u64) -> Result<Vec<Intersection>> {
    if p.is_zero() && q.is_zero() {
        return Err(FoliageError::input("both polynomials vanish identically"));
    }
    if p.is_zero() || q.is_zero() {
        let other = if p.is_zero() { q } else { p };
        if other.is_constant() {
            return Ok(Vec::new());
        }
        return Err(FoliageError::input("polynomials share a nonconstant common factor"));
    }
    if p.is_constant() || q.is_constant() {
        return Ok(Vec::new());
    }
    for &(cn, cd) in SHEARS.iter() {
        let c = QuadExt::rational(rat(cn, cd));
        let ps = shear(p, &c);
        let qs = shear(q, &c);
        if !leading_x_constant(&ps) || !leading_x_constant(&qs) {
            continue;
        }
        let res = resultant_eliminate(&ps, &qs, Variable::First)?;
        if res.is_zero() {
            return Err(FoliageError::input("polynomials share a nonconstant common factor"));
        }
        if let Attempt::Done(points) = solve_sheared(&ps, &qs, &res, &c, ext)? {
            return Ok(points);
        }
    }
    Err(FoliageError::input("could not separate the common zeros by a shear"))
}

fn solve_sheared(
    ps: &BiPoly<QuadExt>,
    qs: &BiPoly<QuadExt>,
    res: &UPoly<QuadExt>,
    c: &QuadExt,
    ext: u64,
) -> Result<Attempt> {
    let mut out = Vec::new();
    if res.is_constant() {
        return Ok(Attempt::Done(out));
    }
    for (g, k) in res.square_free_decomposition() {
        let mut rest = g.clone();
        for w0 in QuadExt::field_roots(&g, ext) {
            let px = ps.at_y(&w0);
            let qx = qs.at_y(&w0);
            let common = squarefree_part(&px.gcd(&qx));
            if common.degree() != Some(1) {
                return Ok(Attempt::NotSeparated);
            }
            let x0 = common.coeff(0).negate();
            let y0 = w0.minus(&c.times(&x0));
            out.push(Intersection { x: Coord::Exact(x0), y: Coord::Exact(y0), multiplicity: k });
            rest = rest.divrem(&UPoly::new(vec![w0.negate(), QuadExt::one()])).0;
        }
        if rest.degree().unwrap_or(0) == 0 {
            continue;
        }
        let psc = ps.map(|v| v.approx().expect("real value"));
        let qsc = qs.map(|v| v.approx().expect("real value"));
        let rest_c = rest.map(|v| v.approx().expect("real value"));
        for w in complex_roots(&rest_c) {
            let px = psc.at_y(&w.value);
            let qx = qsc.at_y(&w.value);
            let mut cands: Vec<(f64, Cx)> = complex_roots(&px)
                .into_iter()
                .map(|r| (cabs(&qx.eval(&r.value)).to_f64(), r.value))
                .collect();
            cands.sort_by(|a, b| a.0.total_cmp(&b.0));
            let scale = 1.0 + qx.coeffs().iter().map(|v| cabs(v).to_f64()).fold(0.0, f64::max);
            let hits = cands.iter().filter(|(e, _)| *e <= 1e-12 * scale).count();
            let Some(&(_, x0)) = cands.first() else {
                return Ok(Attempt::NotSeparated);
            };
            let distinct = cands
                .iter()
                .filter(|(e, x)| *e <= 1e-12 * scale && cabs(&(*x - x0)).to_f64() > 1e-8)
                .count();
            if hits == 0 || distinct > 0 {
                return Ok(Attempt::NotSeparated);
            }
            let (x0, w0, radius) = newton_polish(&psc, &qsc, x0, w.value, w.radius);
            let cc = c.approx().expect("real shear");
            let y0 = w0 - cc * x0;
            out.push(Intersection {
                x: Coord::Approx { value: x0, radius },
                y: Coord::Approx { value: y0, radius: radius * (1.0 + cabs(&cc).to_f64()) },
                multiplicity: k,
            });
        }
    }
    Ok(Attempt::Done(out))
}

/// Two-variable Newton refinement of a common zero; returns the refined point
/// and a radius bounding the last correction.
fn newton_polish(p: &BiPoly<Cx>, q: &BiPoly<Cx>, x: Cx, y: Cx, start_radius: f64) -> (Cx, Cx, f64) {
    let (px, py, qx, qy) = (p.partial_x(), p.partial_y(), q.partial_x(), q.partial_y());
    let (mut x, mut y) = (x, y);
    let mut step = start_radius;
    for _ in 0..12 {
        let f = p.eval(&x, &y);
        let g = q.eval(&x, &y);
        let (a, b, c, d) = (px.eval(&x, &y), py.eval(&x, &y), qx.eval(&x, &y), qy.eval(&x, &y));
        let det = a * d - b * c;
        let Some(inv) = det.recip() else {
            break;
        };
        let dx = (d * f - b * g) * inv;
        let dy = (a * g - c * f) * inv;
        x = x - dx;
        y = y - dy;
        step = cabs(&dx).to_f64().max(cabs(&dy).to_f64());
        if step < 1e-28 {
            break;
        }
    }
    (x, y, step.max(1e-28) * 2.0)
}

/// Total number of affine common zeros with multiplicity.
pub fn affine_intersection_count(p: &BiPoly<QuadExt>, q: &BiPoly<QuadExt>) -> Result<usize> {
    if p.is_constant() || q.is_constant() {
        if p.is_zero() || q.is_zero() {
            return Err(FoliageError::input("intersection with the zero polynomial"));
        }
        return Ok(0);
    }
    for &(cn, cd) in SHEARS.iter() {
        let c = QuadExt::rational(rat(cn, cd));
        let ps = shear(p, &c);
        let qs = shear(q, &c);
        if !leading_x_constant(&ps) || !leading_x_constant(&qs) {
            continue;
        }
        let res = resultant_eliminate(&ps, &qs, Variable::First)?;
        if res.is_zero() {
            return Err(FoliageError::input("polynomials share a nonconstant common factor"));
        }
        return Ok(res.degree().unwrap_or(0));
    }
    Err(FoliageError::input("no admissible shear"))
}
