use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::scalar::{Field, Ring};
use super::upoly::UPoly;

/// Sparse bivariate polynomial in `x`, `y`.
///
/// Keys are exponent pairs `(i, j)` for `x^i y^j`; zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly<T> {
    terms: BTreeMap<(u32, u32), T>,
}

/// Graded lexicographic comparison of exponent pairs, largest first.
fn grlex_desc(a: &(u32, u32), b: &(u32, u32)) -> Ordering {
    (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0))
}

impl<T: Ring> BiPoly<T> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: T) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn monomial(c: T, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn x() -> Self {
        BiPoly::monomial(T::one(), 1, 0)
    }

    pub fn y() -> Self {
        BiPoly::monomial(T::one(), 0, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), T)>) -> Self {
        let mut p = BiPoly::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, &c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &T) {
        let e = self.terms.entry((i, j)).or_insert_with(T::zero);
        *e = e.plus(c);
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    /// Terms in graded lexicographic order, leading term first.
    pub fn terms(&self) -> Vec<((u32, u32), T)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort_by(|a, b| grlex_desc(&a.0, &b.0));
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn homogeneous_part(&self, k: u32) -> Self {
        BiPoly {
            terms: self.terms.iter().filter(|(e, _)| e.0 + e.1 == k).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    /// Part of total degree below `k`.
    pub fn truncate_below(&self, k: u32) -> Self {
        BiPoly {
            terms: self.terms.iter().filter(|(e, _)| e.0 + e.1 < k).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    /// Lowest total degree of a term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, &c.negate());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = BiPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &o.terms {
                out.add_term(i + k, j + l, &a.times(b));
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly::from_terms(self.terms.iter().map(|(e, a)| (*e, a.times(c))))
    }

    pub fn neg(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(e, a)| (*e, a.negate())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BiPoly::constant(T::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        let mut acc = T::zero();
        for (&(i, j), c) in &self.terms {
            acc = acc.plus(&c.times(&x.pow(i)).times(&y.pow(j)));
        }
        acc
    }

    pub fn partial_x(&self) -> Self {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e.0 > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c.times(&T::from_int(i as i64)))),
        )
    }

    pub fn partial_y(&self) -> Self {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e.1 > 0)
                .map(|(&(i, j), c)| ((i, j - 1), c.times(&T::from_int(j as i64)))),
        )
    }

    /// Substitutes `x ↦ p`, `y ↦ q`.
    pub fn compose(&self, p: &Self, q: &Self) -> Self {
        let max_i = self.degree_x().unwrap_or(0);
        let max_j = self.degree_y().unwrap_or(0);
        let mut px = vec![BiPoly::constant(T::one())];
        for k in 0..max_i {
            px.push(px[k as usize].mul(p));
        }
        let mut qy = vec![BiPoly::constant(T::one())];
        for k in 0..max_j {
            qy.push(qy[k as usize].mul(q));
        }
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            out = out.add(&px[i as usize].mul(&qy[j as usize]).scale(c));
        }
        out
    }

    /// Translation `f(x + x0, y + y0)`.
    pub fn translate(&self, x0: &T, y0: &T) -> Self {
        let p = BiPoly::x().add(&BiPoly::constant(x0.clone()));
        let q = BiPoly::y().add(&BiPoly::constant(y0.clone()));
        self.compose(&p, &q)
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    /// Coefficients as a polynomial in `x` over `T[y]`.
    pub fn as_poly_in_x(&self) -> Vec<UPoly<T>> {
        let n = self.degree_x().map_or(0, |d| d as usize + 1);
        let mut rows: Vec<Vec<T>> = vec![Vec::new(); n];
        for (&(i, j), c) in &self.terms {
            let row = &mut rows[i as usize];
            if row.len() <= j as usize {
                row.resize(j as usize + 1, T::zero());
            }
            row[j as usize] = c.clone();
        }
        rows.into_iter().map(UPoly::new).collect()
    }

    /// Restriction to `y = y0` as a polynomial in `x`.
    pub fn at_y(&self, y0: &T) -> UPoly<T> {
        let rows = self.as_poly_in_x();
        UPoly::new(rows.iter().map(|r| r.eval(y0)).collect())
    }

    /// Restriction to `x = x0` as a polynomial in `y`.
    pub fn at_x(&self, x0: &T) -> UPoly<T> {
        self.swap().at_y(x0)
    }

    /// Largest `k` with `x^k` dividing the polynomial.
    pub fn x_adic_order(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).min().unwrap_or(u32::MAX)
    }

    pub fn y_adic_order(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).min().unwrap_or(u32::MAX)
    }

    /// Exact division by `x^k`; the caller guarantees divisibility.
    pub fn div_x_pow(&self, k: u32) -> Self {
        BiPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((i - k, j), c.clone())).collect() }
    }

    pub fn div_y_pow(&self, k: u32) -> Self {
        BiPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((i, j - k), c.clone())).collect() }
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> BiPoly<U> {
        BiPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Homogeneous top part evaluated as a polynomial in `t` at `(1, t)`.
    pub fn top_form_dehomogenized(&self) -> UPoly<T> {
        let d = self.degree().unwrap_or(0);
        let top = self.homogeneous_part(d);
        let mut coeffs = vec![T::zero(); d as usize + 1];
        for (&(_, j), c) in &top.terms {
            coeffs[j as usize] = c.clone();
        }
        UPoly::new(coeffs)
    }
}

impl<T: Field> BiPoly<T> {
    /// Division by `d` with remainder, in graded lexicographic order.
    /// A single polynomial generates its ideal as a Gröbner basis, so the
    /// remainder vanishes exactly when `d` divides `self`.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let lead = d.terms()[0].clone();
        let inv = lead.1.recip().expect("nonzero leading coefficient");
        let mut q = BiPoly::zero();
        let mut r = BiPoly::zero();
        let mut p = self.clone();
        while let Some(((i, j), c)) = p.terms().into_iter().next() {
            let (a, b) = lead.0;
            if i >= a && j >= b {
                let t = BiPoly::monomial(c.times(&inv), i - a, j - b);
                p = p.sub(&t.mul(d));
                q = q.add(&t);
            } else {
                r.add_term(i, j, &c);
                p.terms.remove(&(i, j));
            }
        }
        (q, r)
    }

    /// Whether `d` divides `self` exactly.
    pub fn divisible_by(&self, d: &Self) -> bool {
        if d.is_zero() {
            return self.is_zero();
        }
        self.divrem(d).1.is_zero()
    }
}

impl<T: Ring + fmt::Display> fmt::Display for BiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|((i, j), c)| {
                let mut s = format!("({c})");
                if i > 0 {
                    s.push_str(&if i == 1 { "*x".to_string() } else { format!("*x^{i}") });
                }
                if j > 0 {
                    s.push_str(&if j == 1 { "*y".to_string() } else { format!("*y^{j}") });
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Whether `d` divides `p` exactly.
pub fn poly_divides<T: Field>(d: &BiPoly<T>, p: &BiPoly<T>) -> bool {
    p.divisible_by(d)
}
