//! Truncated power series over GF(q) and Newton (Hensel) lifting.

use thiserror::Error;

use crate::gf::{Elem, Gf};
use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series with zero constant term is not invertible")]
    NotInvertible,
    #[error("reversion needs a series of valuation exactly one")]
    NotReversible,
    #[error("composition needs an inner series with zero constant term")]
    BadComposition,
    #[error("derivative vanishes at the seed")]
    SingularSeed,
    #[error("seed does not satisfy the equation modulo t")]
    SeedNotRoot,
}

/// Coefficients s_0 .. s_{n-1}; everything of order >= n is unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Elem>,
}

impl Series {
    pub fn new(mut coeffs: Vec<Elem>, len: usize) -> Series {
        coeffs.resize(len, Elem::ZERO);
        Series { coeffs }
    }

    pub fn zero(len: usize) -> Series {
        Series {
            coeffs: vec![Elem::ZERO; len],
        }
    }

    pub fn constant(c: Elem, len: usize) -> Series {
        Series::new(vec![c], len)
    }

    /// The parameter t itself.
    pub fn var(len: usize) -> Series {
        Series::new(vec![Elem::ZERO, Elem::ONE], len)
    }

    pub fn from_poly(p: &Poly, len: usize) -> Series {
        Series::new(p.coeffs().iter().take(len).copied().collect(), len)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// Index of the first nonzero coefficient, `None` if zero to this precision.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, len: usize) -> Series {
        Series::new(self.coeffs.iter().take(len).copied().collect(), len)
    }

    pub fn add(&self, f: &Gf, o: &Series) -> Series {
        let n = self.len().min(o.len());
        Series {
            coeffs: (0..n).map(|i| f.add(self.coeffs[i], o.coeffs[i])).collect(),
        }
    }

    pub fn sub(&self, f: &Gf, o: &Series) -> Series {
        let n = self.len().min(o.len());
        Series {
            coeffs: (0..n).map(|i| f.sub(self.coeffs[i], o.coeffs[i])).collect(),
        }
    }

    pub fn scale(&self, f: &Gf, c: Elem) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, f: &Gf, o: &Series) -> Series {
        let n = self.len().min(o.len());
        let mut out = vec![Elem::ZERO; n];
        for (i, &a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Series { coeffs: out }
    }

    pub fn pow(&self, f: &Gf, mut e: u64) -> Series {
        let mut r = Series::constant(Elem::ONE, self.len());
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(f, &b);
            }
            b = b.mul(f, &b);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inv(&self, f: &Gf) -> Result<Series, SeriesError> {
        let n = self.len();
        let c0 = f
            .inv(self.coeff(0))
            .map_err(|_| SeriesError::NotInvertible)?;
        let mut out = vec![Elem::ZERO; n];
        for k in 0..n {
            let mut acc = if k == 0 { Elem::ONE } else { Elem::ZERO };
            for i in 1..=k {
                acc = f.sub(acc, f.mul(self.coeffs[i], out[k - i]));
            }
            out[k] = f.mul(acc, c0);
        }
        Ok(Series { coeffs: out })
    }

    /// Multiplication by t^k, keeping the length.
    pub fn shift_up(&self, k: usize) -> Series {
        let n = self.len();
        let mut v = vec![Elem::ZERO; k.min(n)];
        v.extend(self.coeffs.iter().take(n.saturating_sub(k)));
        Series { coeffs: v }
    }

    /// Division by t^k, dropping the first k coefficients (length shrinks).
    pub fn shift_down(&self, k: usize) -> Series {
        Series {
            coeffs: self.coeffs.iter().skip(k).copied().collect(),
        }
    }

    /// self(inner) for inner with zero constant term.
    pub fn compose(&self, f: &Gf, inner: &Series) -> Result<Series, SeriesError> {
        if !inner.coeff(0).is_zero() {
            return Err(SeriesError::BadComposition);
        }
        let n = self.len().min(inner.len());
        let mut acc = Series::zero(n);
        for &c in self.coeffs.iter().take(n).rev() {
            acc = acc
                .mul(f, &inner.truncate(n))
                .add(f, &Series::constant(c, n));
        }
        Ok(acc)
    }

    /// p(self) for a polynomial p.
    pub fn eval_poly(f: &Gf, p: &Poly, x: &Series) -> Series {
        let n = x.len();
        p.coeffs().iter().rev().fold(Series::zero(n), |acc, &c| {
            acc.mul(f, x).add(f, &Series::constant(c, n))
        })
    }

    /// Compositional inverse r with self(r(t)) = t. Needs s_0 = 0, s_1 != 0.
    pub fn reversion(&self, f: &Gf) -> Result<Series, SeriesError> {
        if !self.coeff(0).is_zero() || self.coeff(1).is_zero() {
            return Err(SeriesError::NotReversible);
        }
        let n = self.len();
        let a1inv = f.inv(self.coeff(1)).unwrap();
        let mut r = Series::new(vec![Elem::ZERO, a1inv], n);
        // fix one coefficient per step: self(r) = t + e_k t^k + ..., then r -= e_k/a1 t^k
        for k in 2..n {
            let comp = self.compose(f, &r)?;
            let e = comp.coeff(k);
            if !e.is_zero() {
                r.coeffs[k] = f.sub(r.coeffs[k], f.mul(e, a1inv));
            }
        }
        Ok(r)
    }
}

/// Newton lifting of a root of g(X) = rhs(t) in GF(q)[[t]], starting from a
/// seed a with g(a) = rhs(0). Returns X(t) to `len` coefficients.
pub fn hensel_lift(
    f: &Gf,
    g: &Poly,
    rhs: &Series,
    seed: Elem,
    len: usize,
) -> Result<Series, SeriesError> {
    let dg = g.derivative(f);
    let d0 = dg.eval(f, seed);
    if d0.is_zero() {
        return Err(SeriesError::SingularSeed);
    }
    if g.eval(f, seed) != rhs.coeff(0) {
        return Err(SeriesError::SeedNotRoot);
    }
    let rhs = rhs.truncate(len);
    let mut x = Series::constant(seed, len);
    let mut correct = 1usize;
    while correct < len {
        let residual = Series::eval_poly(f, g, &x).sub(f, &rhs);
        let deriv = Series::eval_poly(f, &dg, &x);
        let step = residual.mul(f, &deriv.inv(f)?);
        x = x.sub(f, &step);
        correct *= 2;
    }
    Ok(x)
}

/// The series X(t) with X^n = c + t and X(0) = a.
pub fn hensel_lift_series(
    f: &Gf,
    n: u64,
    c: Elem,
    seed: Elem,
    prec: usize,
) -> Result<Series, SeriesError> {
    let g = Poly::monomial(Elem::ONE, n as usize);
    let rhs = Series::new(vec![c, Elem::ONE], prec + 1);
    hensel_lift(f, &g, &rhs, seed, prec + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf16() -> Gf {
        Gf::new(2, 4, None).unwrap()
    }

    #[test]
    fn geometric_series_inverse() {
        let f = gf16();
        let one_minus_t = Series::new(vec![Elem::ONE, f.neg(Elem::ONE)], 8);
        let inv = one_minus_t.inv(&f).unwrap();
        assert!(inv.coeffs().iter().all(|&c| c == Elem::ONE));
        assert_eq!(Series::var(4).inv(&f), Err(SeriesError::NotInvertible));
    }

    #[test]
    fn reversion_round_trip() {
        let f = gf16();
        let s = Series::new(vec![Elem(0), Elem(3), Elem(7), Elem(1), Elem(9)], 9);
        let r = s.reversion(&f).unwrap();
        assert_eq!(s.compose(&f, &r).unwrap(), Series::var(9));
        assert_eq!(r.compose(&f, &s).unwrap(), Series::var(9));
    }

    #[test]
    fn hensel_gf4_cube_root() {
        let f = Gf::new(2, 2, None).unwrap();
        let x = hensel_lift_series(&f, 3, Elem::ONE, Elem::ONE, 2).unwrap();
        assert_eq!(x.coeff(0), Elem::ONE);
        assert_eq!(x.coeff(1), Elem::ONE);
        let residual = x
            .pow(&f, 3)
            .sub(&f, &Series::new(vec![Elem::ONE, Elem::ONE], 3));
        assert_eq!(residual.valuation(), None);
        assert_eq!(
            hensel_lift_series(&f, 3, Elem::ONE, Elem::ZERO, 2),
            Err(SeriesError::SingularSeed)
        );
    }

    #[test]
    fn hensel_residual_gf16() {
        let f = gf16();
        for a in f.elements().skip(1) {
            let c = f.pow(a, 15);
            let x = hensel_lift_series(&f, 15, c, a, 8).unwrap();
            let residual = x.pow(&f, 15).sub(&f, &Series::new(vec![c, Elem::ONE], 9));
            assert_eq!(residual.valuation(), None);
            // first-order term a / (15 c)
            let expect = f.div(a, f.mul(f.from_int(15), c)).unwrap();
            assert_eq!(x.coeff(1), expect);
        }
    }
}
