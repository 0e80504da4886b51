use crate::error::{FoliageError, Result};
use crate::numeric::bipoly::BiPoly;
use crate::numeric::dd::Cx;
use crate::numeric::quadext::QuadExt;
use crate::numeric::roots::{complex_roots, RootField};
use crate::numeric::scalar::{ExactField, Ring};
use crate::numeric::upoly::UPoly;

use super::classify::{classify_exact, classify_numeric, Certainty, Classification};
use super::intersect::Coord;
use super::{Chart, PlaneFoliation};

/// Default depth cap of the reduction loop.
pub const DEFAULT_DEPTH_CAP: usize = 16;

type Field2 = (BiPoly<QuadExt>, BiPoly<QuadExt>);

/// One blow-up of a germ at the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct BlowupCharts {
    /// Chart `(x, t)` with `y = t·x`; the exceptional curve is `x = 0`.
    pub t_chart: Field2,
    /// Chart `(s, y)` with `x = s·y`; the exceptional curve is `y = 0`.
    pub s_chart: Field2,
    /// Power of the exceptional equation removed when saturating.
    pub saturation: u32,
    /// Coefficient `a` in `K_F̃ = σ*K_F + a·E`.
    pub kf_coefficient: i64,
    pub exceptional_invariant: bool,
}

/// Blows up the origin of the germ `A·∂x + B·∂y`.
pub fn blow_up_origin(a: &BiPoly<QuadExt>, b: &BiPoly<QuadExt>) -> Result<BlowupCharts> {
    if a.is_zero() && b.is_zero() {
        return Err(FoliageError::input("zero vector field"));
    }
    let x = BiPoly::x();
    let y = BiPoly::y();
    let t_raw_p = x.mul(&a.compose(&x, &x.mul(&y)));
    let t_raw_q = b.compose(&x, &x.mul(&y)).sub(&y.mul(&a.compose(&x, &x.mul(&y))));
    let k = t_raw_p.x_adic_order().min(t_raw_q.x_adic_order());
    let t_chart = (t_raw_p.div_x_pow(k), t_raw_q.div_x_pow(k));
    let s_raw_p = a.compose(&x.mul(&y), &y).sub(&x.mul(&b.compose(&x.mul(&y), &y)));
    let s_raw_q = y.mul(&b.compose(&x.mul(&y), &y));
    let ks = s_raw_p.y_adic_order().min(s_raw_q.y_adic_order());
    let s_chart = (s_raw_p.div_y_pow(ks), s_raw_q.div_y_pow(ks));
    let exceptional_invariant = t_chart.0.x_adic_order() >= 1;
    Ok(BlowupCharts { t_chart, s_chart, saturation: k, kf_coefficient: 1 - k as i64, exceptional_invariant })
}

/// A point visited by the reduction, with its subtree.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionNode {
    /// Path label such as `root`, `t=2/3`, `s=0`.
    pub label: String,
    pub depth: usize,
    pub classification: Classification,
    pub certainty: Certainty,
    /// Eigenvalue quotient when it lies in the field.
    pub quotient: Option<String>,
    pub blowup: Option<BlowupStep>,
}

/// Data of one blow-up inside the tree.
#[derive(Clone, Debug, PartialEq)]
pub struct BlowupStep {
    pub kf_coefficient: i64,
    pub exceptional_invariant: bool,
    pub children: Vec<ReductionNode>,
}

impl ReductionNode {
    /// Number of blow-ups in the subtree.
    pub fn blowup_count(&self) -> usize {
        self.blowup.as_ref().map_or(0, |s| 1 + s.children.iter().map(ReductionNode::blowup_count).sum::<usize>())
    }

    /// `K_F` coefficients of all blow-ups in the subtree, in visiting order.
    pub fn kf_coefficients(&self) -> Vec<i64> {
        let mut out = Vec::new();
        if let Some(s) = &self.blowup {
            out.push(s.kf_coefficient);
            for c in &s.children {
                out.extend(c.kf_coefficients());
            }
        }
        out
    }

    /// Final singular points: leaves of the tree.
    pub fn leaves(&self) -> Vec<&ReductionNode> {
        match &self.blowup {
            None => vec![self],
            Some(s) => s.children.iter().flat_map(ReductionNode::leaves).collect(),
        }
    }

    /// Compact form, e.g. `root[-1](t=0[...], s=0)`.
    pub fn signature(&self) -> String {
        match &self.blowup {
            None => format!("{}:{}", self.label, self.classification.name()),
            Some(s) => {
                let kids: Vec<String> = s.children.iter().map(ReductionNode::signature).collect();
                format!("{}[{}]({})", self.label, s.kf_coefficient, kids.join(", "))
            }
        }
    }
}

/// Reduction of every singular point of a plane foliation.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionReport {
    pub depth_cap: usize,
    pub roots: Vec<(Chart, Coord, Coord, ReductionNode)>,
}

impl ReductionReport {
    pub fn blowup_count(&self) -> usize {
        self.roots.iter().map(|r| r.3.blowup_count()).sum()
    }
}

fn jacobian_at_origin(f: &Field2) -> [[QuadExt; 2]; 2] {
    [[f.0.coeff(1, 0), f.0.coeff(0, 1)], [f.1.coeff(1, 0), f.1.coeff(0, 1)]]
}

fn quotient_label(q: &super::classify::Quotient<QuadExt>) -> Option<String> {
    match q {
        super::classify::Quotient::InField(v) => Some(v.to_string()),
        _ => None,
    }
}

fn squarefree(g: &UPoly<QuadExt>) -> UPoly<QuadExt> {
    let d = g.derivative();
    if d.is_zero() {
        return g.monic();
    }
    g.divrem(&g.gcd(&d)).0.monic()
}

fn numeric_node(label: String, depth: usize, f: &Field2, x: Cx, y: Cx) -> ReductionNode {
    let lift = |p: &BiPoly<QuadExt>| p.map(|c| c.approx().expect("real value")).eval(&x, &y);
    let m = [
        [lift(&f.0.partial_x()), lift(&f.0.partial_y())],
        [lift(&f.1.partial_x()), lift(&f.1.partial_y())],
    ];
    let lc = classify_numeric(&m);
    ReductionNode { label, depth, classification: lc.classification, certainty: lc.certainty, quotient: None, blowup: None }
}

fn partial_tree(node: &ReductionNode) -> String {
    node.signature()
}

/// Reduces the germ at the origin; `label` names the point in the tree.
pub fn reduce_germ(f: &Field2, ext: u64, label: String, depth: usize, cap: usize) -> Result<ReductionNode> {
    let lc = classify_exact(&jacobian_at_origin(f));
    let mut node = ReductionNode {
        label,
        depth,
        classification: lc.classification,
        certainty: Certainty::Exact,
        quotient: quotient_label(&lc.quotient),
        blowup: None,
    };
    if lc.classification.is_reduced() {
        return Ok(node);
    }
    if depth >= cap {
        return Err(FoliageError::BoundedReduction(format!(
            "depth cap {cap} reached; partial tree {}",
            partial_tree(&node)
        )));
    }
    let charts = blow_up_origin(&f.0, &f.1)?;
    let mut children = Vec::new();
    let (tp, tq) = &charts.t_chart;
    let on_e = |p: &BiPoly<QuadExt>| p.at_x(&QuadExt::zero());
    let (p0, q0) = (on_e(tp), on_e(tq));
    let g = if p0.is_zero() { q0.clone() } else if q0.is_zero() { p0.clone() } else { p0.gcd(&q0) };
    if !g.is_zero() && !g.is_constant() {
        let mut rest = squarefree(&g);
        let mut exact = QuadExt::field_roots(&rest, ext);
        exact.sort_by(|a, b| a.cmp_real(b));
        for t0 in &exact {
            rest = rest.divrem(&UPoly::new(vec![t0.negate(), QuadExt::one()])).0;
            let moved = (tp.translate(&QuadExt::zero(), t0), tq.translate(&QuadExt::zero(), t0));
            children.push(reduce_germ(&moved, ext, format!("t={t0}"), depth + 1, cap)?);
        }
        if rest.degree().unwrap_or(0) > 0 {
            let approx = rest.map(|c| c.approx().expect("real value"));
            for r in complex_roots(&approx) {
                let child = numeric_node(format!("t~{}", Coord::Approx { value: r.value, radius: r.radius }.display()), depth + 1, &charts.t_chart, <Cx as Ring>::zero(), r.value);
                if !child.classification.is_reduced() {
                    return Err(FoliageError::BoundedReduction(format!(
                        "non-reduced point with numerical coordinates; partial tree {}",
                        node.signature()
                    )));
                }
                children.push(child);
            }
        }
    } else if g.is_zero() {
        return Err(FoliageError::inconsistent("exceptional curve lies in the singular set after saturation"));
    }
    let (sp, sq) = &charts.s_chart;
    if sp.coeff(0, 0).is_zero() && sq.coeff(0, 0).is_zero() {
        children.push(reduce_germ(&charts.s_chart, ext, "s=0".to_string(), depth + 1, cap)?);
    }
    node.classification = if charts.exceptional_invariant { lc.classification } else { Classification::DicriticalAfterBlowup };
    node.blowup = Some(BlowupStep {
        kf_coefficient: charts.kf_coefficient,
        exceptional_invariant: charts.exceptional_invariant,
        children,
    });
    Ok(node)
}

/// Blows up every non-reduced singular point of `f` until all points are
/// reduced, or fails once the depth cap is reached.
pub fn reduce_singularities(f: &PlaneFoliation, cap: usize) -> Result<ReductionReport> {
    let mut roots = Vec::new();
    for (chart, p) in f.locate_singularities()? {
        let field = f.chart_field(chart);
        let label = format!("{}({}, {})", chart.name(), p.x.display(), p.y.display());
        let node = match (p.x.exact(), p.y.exact()) {
            (Some(x0), Some(y0)) => {
                let moved = (field.0.translate(x0, y0), field.1.translate(x0, y0));
                reduce_germ(&moved, f.ext, label, 0, cap)?
            }
            _ => {
                let node = numeric_node(label, 0, &field, p.x.approx(), p.y.approx());
                if !node.classification.is_reduced() {
                    return Err(FoliageError::BoundedReduction(
                        "non-reduced point with numerical coordinates".to_string(),
                    ));
                }
                node
            }
        };
        roots.push((chart, p.x, p.y, node));
    }
    Ok(ReductionReport { depth_cap: cap, roots })
}
