//! Zariski decomposition relative to a finite set of curves, F-chain
//! recognition and chain coefficients.

use num_traits::{Signed, Zero};

use crate::error::{FoliageError, Result};
use crate::foliation::{CurveClass, CurveRecord, FoliatedSurface};
use crate::lattice::{DivClass, SurfaceLattice};
use crate::numeric::linalg::{is_negative_definite, solve_linear_system, Solution};
use crate::numeric::scalar::{int, Rational};

/// `D = P + N` with `N = Σ coeff·C` over the candidate curves.
#[derive(Clone, Debug, PartialEq)]
pub struct ZariskiResult {
    pub p: DivClass,
    /// Coefficient per candidate label, in candidate order; for a bundle the
    /// coefficient of each member.
    pub n_coeffs: Vec<(String, Rational)>,
    pub volume: Rational,
    pub iterations: usize,
    /// Candidates with `P·C < 0` after termination; empty on success.
    pub residual_negative: Vec<String>,
}

impl ZariskiResult {
    pub fn coefficient(&self, label: &str) -> Option<&Rational> {
        self.n_coeffs.iter().find(|(l, _)| l == label).map(|(_, c)| c)
    }

    pub fn support(&self) -> Vec<&str> {
        self.n_coeffs.iter().filter(|(_, c)| !c.is_zero()).map(|(l, _)| l.as_str()).collect()
    }
}

/// Pairing matrix between members: entry `(i, j)` is one member of `i`
/// against the whole of `j`.
fn member_matrix(l: &SurfaceLattice, curves: &[&CurveRecord]) -> Result<Vec<Vec<Rational>>> {
    let mut m = Vec::with_capacity(curves.len());
    for ci in curves {
        let mut row = Vec::with_capacity(curves.len());
        for cj in curves {
            if ci.label == cj.label {
                row.push(ci.square(l)?);
            } else {
                row.push(ci.dot(l, cj.cls.total())?);
            }
        }
        m.push(row);
    }
    Ok(m)
}

/// Whether a configuration of curves has negative definite intersection
/// form, bundles included member by member.
pub fn configuration_negative_definite(l: &SurfaceLattice, curves: &[&CurveRecord]) -> Result<bool> {
    let mut gram = Vec::with_capacity(curves.len());
    for ci in curves {
        let mut row = Vec::with_capacity(curves.len());
        for cj in curves {
            row.push(l.intersect(ci.cls.total(), cj.cls.total())?);
        }
        gram.push(row);
        if let CurveClass::Bundle(b) = &ci.cls {
            if !b.member_square.is_negative() || !b.pairwise_disjoint {
                return Ok(false);
            }
        }
    }
    Ok(is_negative_definite(&gram))
}

/// Zariski decomposition of `d` relative to `candidates` by growing the
/// support with every curve meeting the current positive part negatively.
pub fn zariski_decompose(l: &SurfaceLattice, d: &DivClass, candidates: &[CurveRecord]) -> Result<ZariskiResult> {
    let n = candidates.len();
    let d_dot: Vec<Rational> = candidates.iter().map(|c| c.dot(l, d)).collect::<Result<_>>()?;
    let mut in_support = vec![false; n];
    let mut y = vec![Rational::zero(); n];
    let mut p = d.clone();
    let mut iterations = 0;
    loop {
        let mut grew = false;
        for (i, c) in candidates.iter().enumerate() {
            if !in_support[i] && c.dot(l, &p)?.is_negative() {
                in_support[i] = true;
                grew = true;
            }
        }
        if !grew {
            break;
        }
        iterations += 1;
        let idx: Vec<usize> = (0..n).filter(|&i| in_support[i]).collect();
        let support: Vec<&CurveRecord> = idx.iter().map(|&i| &candidates[i]).collect();
        if !configuration_negative_definite(l, &support)? {
            let labels: Vec<&str> = support.iter().map(|c| c.label.as_str()).collect();
            return Err(FoliageError::DecompositionFailure(format!(
                "support {labels:?} is not negative definite"
            )));
        }
        let m = member_matrix(l, &support)?;
        let rhs: Vec<Rational> = idx.iter().map(|&i| d_dot[i].clone()).collect();
        let sol = match solve_linear_system(&m, &rhs)? {
            Solution::Unique(x) => x,
            Solution::Singular => {
                return Err(FoliageError::DecompositionFailure("support system is singular".into()));
            }
        };
        for (k, &i) in idx.iter().enumerate() {
            if sol[k].is_negative() {
                return Err(FoliageError::DecompositionFailure(format!(
                    "negative coefficient {} on {}",
                    sol[k], candidates[i].label
                )));
            }
            y[i] = sol[k].clone();
        }
        p = d.clone();
        for (i, c) in candidates.iter().enumerate() {
            if in_support[i] {
                p = p.minus(&c.cls.total().scaled(&y[i]));
            }
        }
    }
    let mut residual = Vec::new();
    for c in candidates {
        if c.dot(l, &p)?.is_negative() {
            residual.push(c.label.clone());
        }
    }
    let volume = l.square(&p)?;
    Ok(ZariskiResult {
        p,
        n_coeffs: candidates.iter().zip(y).map(|(c, v)| (c.label.clone(), v)).collect(),
        volume,
        iterations,
        residual_negative: residual,
    })
}

/// Which Zariski decomposition axioms a result satisfies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    /// `D = P + N` as classes.
    pub sums_to_d: bool,
    /// `P·C ≥ 0` for every candidate.
    pub nef_on_candidates: bool,
    /// `P·C = 0` for every curve in the support of `N`.
    pub orthogonal: bool,
    pub nonnegative: bool,
    pub support_negative_definite: bool,
    /// Every coefficient of `N` is below 1.
    pub floor_zero: bool,
}

impl AxiomReport {
    /// The defining axioms; `floor_zero` is reported separately.
    pub fn holds(&self) -> bool {
        self.sums_to_d && self.nef_on_candidates && self.orthogonal && self.nonnegative && self.support_negative_definite
    }
}

/// Checks a decomposition of `d` against the candidate curves it was
/// computed from.
pub fn check_axioms(
    l: &SurfaceLattice,
    d: &DivClass,
    candidates: &[CurveRecord],
    z: &ZariskiResult,
) -> Result<AxiomReport> {
    let mut n = l.zero_class();
    let mut support = Vec::new();
    let mut report = AxiomReport {
        sums_to_d: true,
        nef_on_candidates: true,
        orthogonal: true,
        nonnegative: true,
        support_negative_definite: true,
        floor_zero: true,
    };
    for c in candidates {
        let y = z.coefficient(&c.label).cloned().unwrap_or_else(Rational::zero);
        let pc = c.dot(l, &z.p)?;
        report.nef_on_candidates &= !pc.is_negative();
        report.nonnegative &= !y.is_negative();
        report.floor_zero &= y < int(1);
        if !y.is_zero() {
            report.orthogonal &= pc.is_zero();
            support.push(c);
            n = n.plus(&c.cls.total().scaled(&y));
        }
    }
    report.sums_to_d = z.p.plus(&n) == *d;
    report.support_negative_definite = configuration_negative_definite(l, &support)?;
    Ok(report)
}

/// A Hirzebruch–Jung string `C_1, …, C_r` with `C_j² = −e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainSpec {
    pub labels: Vec<String>,
    pub self_intersections: Vec<i64>,
    pub kf_dot: Vec<Rational>,
    /// Number of disjoint copies, greater than 1 for bundled curves.
    pub copies: u64,
}

impl ChainSpec {
    pub fn new(self_intersections: Vec<i64>, kf_dot: Vec<Rational>) -> Self {
        let labels = (1..=self_intersections.len()).map(|j| format!("C{j}")).collect();
        ChainSpec { labels, self_intersections, kf_dot, copies: 1 }
    }

    /// The F-chain right-hand side `(−1, 0, …, 0)`.
    pub fn foliation_chain(self_intersections: Vec<i64>) -> Self {
        let r = self_intersections.len();
        let mut kf = vec![Rational::zero(); r];
        if r > 0 {
            kf[0] = int(-1);
        }
        ChainSpec::new(self_intersections, kf)
    }

    pub fn len(&self) -> usize {
        self.self_intersections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.self_intersections.is_empty()
    }

    /// The tridiagonal intersection matrix of the string.
    pub fn gram(&self) -> Vec<Vec<Rational>> {
        let r = self.len();
        let mut g = vec![vec![Rational::zero(); r]; r];
        for j in 0..r {
            g[j][j] = int(-self.self_intersections[j]);
            if j + 1 < r {
                g[j][j + 1] = int(1);
                g[j + 1][j] = int(1);
            }
        }
        g
    }
}

/// Solves `y_{j−1} − e_j·y_j + y_{j+1} = kf_dot_j` with `y_0 = y_{r+1} = 0` by
/// forward elimination along the string.
pub fn chain_negative_part(spec: &ChainSpec) -> Vec<Rational> {
    let r = spec.len();
    if r == 0 {
        return Vec::new();
    }
    let mut c_prime = vec![Rational::zero(); r];
    let mut d_prime = vec![Rational::zero(); r];
    for j in 0..r {
        let diag = int(-spec.self_intersections[j]);
        let (denom, prev_d) = if j == 0 {
            (diag, Rational::zero())
        } else {
            (diag - &c_prime[j - 1], d_prime[j - 1].clone())
        };
        c_prime[j] = int(1) / &denom;
        d_prime[j] = (&spec.kf_dot[j] - prev_d) / denom;
    }
    let mut y = vec![Rational::zero(); r];
    y[r - 1] = d_prime[r - 1].clone();
    for j in (0..r - 1).rev() {
        y[j] = &d_prime[j] - &c_prime[j] * &y[j + 1];
    }
    y
}

fn chain_eligible(l: &SurfaceLattice, c: &CurveRecord) -> Result<bool> {
    Ok(c.rational_smooth
        && c.invariant
        && matches!(c.declared_z, Some(1) | Some(2))
        && c.square(l)? <= int(-2))
}

/// Maximal F-chains among the marked curves: connected strings of invariant
/// smooth rational curves with `C² ≤ −2`, consecutive pairings 1 and index
/// pattern `Z = (1, 2, …, 2)`.
pub fn detect_f_chains(fs: &FoliatedSurface) -> Result<Vec<ChainSpec>> {
    let l = &fs.lattice;
    let mut eligible = Vec::new();
    for c in &fs.curves {
        if chain_eligible(l, c)? {
            eligible.push(c);
        }
    }
    let n = eligible.len();
    let mut adj = vec![Vec::new(); n];
    let mut bad_edge = vec![false; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let v = eligible[i].dot_curve(l, eligible[j])?;
                if !v.is_zero() {
                    adj[i].push(j);
                    if v != int(1) || matches!(eligible[i].cls, CurveClass::Bundle(_)) {
                        bad_edge[i] = true;
                    }
                }
            }
        }
    }
    let mut seen = vec![false; n];
    let mut chains = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            for &j in &adj[comp[k]] {
                if !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        if comp.iter().any(|&i| bad_edge[i] || adj[i].len() > 2) {
            continue;
        }
        let ends: Vec<usize> = comp.iter().copied().filter(|&i| adj[i].len() <= 1).collect();
        let Some(&first) = ends.iter().find(|&&i| eligible[i].declared_z == Some(1)) else {
            continue;
        };
        let mut order = vec![first];
        let mut prev = usize::MAX;
        let mut cur = first;
        while let Some(&next) = adj[cur].iter().find(|&&j| j != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        if order.len() != comp.len() || order[1..].iter().any(|&i| eligible[i].declared_z != Some(2)) {
            continue;
        }
        let mut e = Vec::new();
        let mut kf = Vec::new();
        for &i in &order {
            let sq = eligible[i].square(l)?;
            e.push(-crate::numeric::scalar::to_i64(&sq).ok_or_else(|| FoliageError::input("non-integral self-intersection"))?);
            kf.push(eligible[i].dot(l, &fs.kf)?);
        }
        chains.push(ChainSpec {
            labels: order.iter().map(|&i| eligible[i].label.clone()).collect(),
            self_intersections: e,
            kf_dot: kf,
            copies: eligible[first].cls.count(),
        });
    }
    Ok(chains)
}
