use std::fmt;

use super::scalar::{Field, Ring};

/// Dense univariate polynomial, coefficients stored from degree 0 upward
/// with no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> UPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        UPoly::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn var() -> Self {
        UPoly::new(vec![T::zero(), T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        acc
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i).plus(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i).minus(&o.coeff(i))).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn neg(&self) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a.negate()).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![T::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        UPoly::new(out)
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.times(&T::from_int(i as i64)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UPoly::constant(T::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> UPoly<U> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Exponent of the largest power of `t` dividing the polynomial.
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl<T: Field> UPoly<T> {
    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lead().recip().expect("leading coefficient is nonzero");
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = r.len() - 1;
            let c = r[top].times(&inv);
            let shift = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] = r[shift + i].minus(&c.times(dc));
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn monic(&self) -> Self {
        match self.lead().recip() {
            Some(inv) => self.scale(&inv),
            None => UPoly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn divides(&self, p: &Self) -> bool {
        if self.is_zero() {
            return p.is_zero();
        }
        p.divrem(self).1.is_zero()
    }

    /// Square-free factorization `p = c · Π f_i^i` by Yun's algorithm.
    /// Returns the pairs `(f_i, i)` with nonconstant monic `f_i`.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.divrem(&a0).0;
        let mut c = fp.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a).0;
            if b.is_constant() {
                break;
            }
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Multiplicity of `x` as a root.
    pub fn root_multiplicity(&self, x: &T) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = UPoly::new(vec![x.negate(), T::one()]);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.divrem(&lin);
            if !r.is_zero() {
                return k;
            }
            p = q;
            k += 1;
        }
    }
}

impl<T: Ring + fmt::Display> fmt::Display for UPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::scalar::{int, Rational};

    fn p(c: &[i64]) -> UPoly<Rational> {
        UPoly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn yun_recovers_multiplicities() {
        let f = p(&[-1, 1]).pow(3).mul(&p(&[2, 1]).pow(2)).mul(&p(&[0, 0, 1]).add(&p(&[1])));
        let dec = f.square_free_decomposition();
        let mults: Vec<usize> = dec.iter().map(|(_, i)| *i).collect();
        assert_eq!(mults, vec![1, 2, 3]);
        assert_eq!(dec[1].0, p(&[2, 1]));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        assert_eq!(p(&[1, 1]).gcd(&p(&[-1, 1])), p(&[1]));
    }

    #[test]
    fn root_multiplicity_counts_repeats() {
        let f = p(&[-1, 1]).pow(4).mul(&p(&[3, 1]));
        assert_eq!(f.root_multiplicity(&int(1)), 4);
        assert_eq!(f.root_multiplicity(&int(-3)), 1);
        assert_eq!(f.root_multiplicity(&int(0)), 0);
    }
}
