use super::scalar::{Field, Rational, Ring};
use crate::error::{FoliageError, Result};
use num_traits::Signed;

/// Outcome of a square linear solve.
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<F> {
    Unique(Vec<F>),
    Singular,
}

impl<F> Solution<F> {
    pub fn unique(self) -> Option<Vec<F>> {
        match self {
            Solution::Unique(x) => Some(x),
            Solution::Singular => None,
        }
    }
}

/// Solves `matrix · x = rhs` exactly by Gaussian elimination.
pub fn solve_linear_system<F: Field>(matrix: &[Vec<F>], rhs: &[F]) -> Result<Solution<F>> {
    let n = matrix.len();
    if rhs.len() != n || matrix.iter().any(|row| row.len() != n) {
        return Err(FoliageError::input(format!(
            "linear system shape mismatch: {} rows, rhs length {}",
            n,
            rhs.len()
        )));
    }
    let mut a: Vec<Vec<F>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(Solution::Singular);
        };
        a.swap(k, p);
        let inv = a[k][k].recip().expect("nonzero pivot");
        for j in k..=n {
            a[k][j] = a[k][j].times(&inv);
        }
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k].clone();
                for j in k..=n {
                    let v = a[i][j].minus(&f.times(&a[k][j]));
                    a[i][j] = v;
                }
            }
        }
    }
    Ok(Solution::Unique(a.into_iter().map(|mut r| r.pop().unwrap()).collect()))
}

/// Determinant by exact elimination.
pub fn determinant<F: Field>(matrix: &[Vec<F>]) -> F {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    let mut det = F::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return F::zero();
        };
        if p != k {
            a.swap(k, p);
            det = det.negate();
        }
        det = det.times(&a[k][k]);
        let inv = a[k][k].recip().expect("nonzero pivot");
        for i in k + 1..n {
            let f = a[i][k].times(&inv);
            for j in k..n {
                let v = a[i][j].minus(&f.times(&a[k][j]));
                a[i][j] = v;
            }
        }
    }
    det
}

/// Whether a symmetric rational matrix is negative definite.
///
/// Symmetric elimination without pivoting succeeds with all pivots negative
/// exactly when every leading principal minor has the sign of `(-1)^k`.
pub fn is_negative_definite(matrix: &[Vec<Rational>]) -> bool {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    for k in 0..n {
        if !a[k][k].is_negative() {
            return false;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let v = &a[i][j] - &f * &a[k][j];
                a[i][j] = v;
            }
        }
    }
    true
}

pub fn mat_vec<R: Ring>(matrix: &[Vec<R>], v: &[R]) -> Vec<R> {
    matrix
        .iter()
        .map(|row| row.iter().zip(v).fold(R::zero(), |acc, (a, b)| acc.plus(&a.times(b))))
        .collect()
}
