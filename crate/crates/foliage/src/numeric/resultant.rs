use super::bipoly::BiPoly;
use super::scalar::Field;
use super::upoly::UPoly;
use crate::error::{FoliageError, Result};

/// The variable removed by [`resultant_eliminate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    First,
    Second,
}

/// Resultant of `p` and `q` with respect to one variable, as a polynomial in
/// the other.
///
/// Eliminating `Variable::First` (that is, `x`) yields a polynomial in `y`.
pub fn resultant_eliminate<F: Field>(p: &BiPoly<F>, q: &BiPoly<F>, variable: Variable) -> Result<UPoly<F>> {
    if p.is_zero() || q.is_zero() {
        return Err(FoliageError::input("resultant of a zero polynomial"));
    }
    if p.is_constant() && q.is_constant() {
        return Err(FoliageError::input("resultant of two constants"));
    }
    let (p, q) = match variable {
        Variable::First => (p.clone(), q.clone()),
        Variable::Second => (p.swap(), q.swap()),
    };
    Ok(sylvester_resultant(&p.as_poly_in_x(), &q.as_poly_in_x()))
}

/// Resultant of two polynomials given by their coefficient lists over `F[y]`,
/// lowest degree first.
pub fn sylvester_resultant<F: Field>(a: &[UPoly<F>], b: &[UPoly<F>]) -> UPoly<F> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    if m == 0 {
        return a[0].pow(n as u32);
    }
    if n == 0 {
        return b[0].pow(m as u32);
    }
    let size = m + n;
    let mut mat = vec![vec![UPoly::zero(); size]; size];
    for r in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            mat[n + r][r + k] = c.clone();
        }
    }
    bareiss_det(mat)
}

/// Determinant of a square matrix over `F[y]` by fraction-free elimination.
pub fn bareiss_det<F: Field>(mut mat: Vec<Vec<UPoly<F>>>) -> UPoly<F> {
    let n = mat.len();
    let mut sign_negative = false;
    let mut prev = UPoly::constant(F::one());
    for k in 0..n {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&r| !mat[r][k].is_zero()) {
                Some(r) => {
                    mat.swap(k, r);
                    sign_negative = !sign_negative;
                }
                None => return UPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = mat[i][j].mul(&mat[k][k]).sub(&mat[i][k].mul(&mat[k][j]));
                let (quo, rem) = num.divrem(&prev);
                debug_assert!(rem.is_zero());
                mat[i][j] = quo;
            }
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if sign_negative {
        det.neg()
    } else {
        det
    }
}
