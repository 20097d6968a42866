//! Twisted polynomials over A = GF(q)[T] and the Carlitz module.

use std::fmt;

use crate::gf::{Elem, Gf};
use crate::poly::Poly;

/// u -> u^(p^i) on GF(q)[T]: coefficients are raised to p^i and T^k becomes
/// T^(k p^i).
pub fn frobenius_poly(f: &Gf, u: &Poly, i: u32) -> Poly {
    if i == 0 || u.is_zero() {
        return u.clone();
    }
    let pi = (f.characteristic() as u64).pow(i);
    let deg = u.degree().unwrap() * pi as usize;
    let mut v = vec![Elem::ZERO; deg + 1];
    for (k, &c) in u.coeffs().iter().enumerate() {
        v[k * pi as usize] = f.pow(c, pi);
    }
    Poly::new(v)
}

/// sum b_i π^i with π u = u^p π.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TwistedPoly {
    coeffs: Vec<Poly>,
}

impl TwistedPoly {
    pub fn new(mut coeffs: Vec<Poly>) -> TwistedPoly {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        TwistedPoly { coeffs }
    }

    pub fn zero() -> TwistedPoly {
        TwistedPoly::default()
    }

    pub fn one() -> TwistedPoly {
        TwistedPoly::constant(Poly::one())
    }

    pub fn constant(u: Poly) -> TwistedPoly {
        TwistedPoly::new(vec![u])
    }

    /// π^i.
    pub fn pi_power(i: usize) -> TwistedPoly {
        let mut v = vec![Poly::zero(); i + 1];
        v[i] = Poly::one();
        TwistedPoly::new(v)
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Poly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree in π.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Poly {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, f: &Gf, o: &TwistedPoly) -> TwistedPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        TwistedPoly::new((0..n).map(|i| self.coeff(i).add(f, &o.coeff(i))).collect())
    }

    pub fn sub(&self, f: &Gf, o: &TwistedPoly) -> TwistedPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        TwistedPoly::new((0..n).map(|i| self.coeff(i).sub(f, &o.coeff(i))).collect())
    }

    /// self ∘ o: (a_i π^i)(b_j π^j) = a_i b_j^(p^i) π^(i+j).
    pub fn mul(&self, f: &Gf, o: &TwistedPoly) -> TwistedPoly {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return TwistedPoly::zero();
        }
        let mut v = vec![Poly::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let term = a.mul(f, &frobenius_poly(f, b, i as u32));
                v[i + j] = v[i + j].add(f, &term);
            }
        }
        TwistedPoly::new(v)
    }
}

impl fmt::Debug for TwistedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({})", c.display("T")),
                1 => format!("({})π", c.display("T")),
                _ => format!("({})π^{i}", c.display("T")),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// φ: A -> A{π} with φ_T = T + π^λ, λ = log_p q.
#[derive(Clone, Debug)]
pub struct CarlitzModule {
    field: Gf,
    lambda: u32,
    phi_t: TwistedPoly,
}

impl CarlitzModule {
    pub fn new(field: Gf) -> CarlitzModule {
        let lambda = field.degree();
        let mut v = vec![Poly::zero(); lambda as usize + 1];
        v[0] = Poly::x();
        v[lambda as usize] = v[lambda as usize].add(&field, &Poly::one());
        CarlitzModule {
            field,
            lambda,
            phi_t: TwistedPoly::new(v),
        }
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn phi_t(&self) -> &TwistedPoly {
        &self.phi_t
    }

    /// φ_a by Horner's rule in φ_T.
    pub fn phi(&self, a: &Poly) -> TwistedPoly {
        let f = &self.field;
        a.coeffs()
            .iter()
            .rev()
            .fold(TwistedPoly::zero(), |acc, &c| {
                acc.mul(f, &self.phi_t)
                    .add(f, &TwistedPoly::constant(Poly::constant(c)))
            })
    }

    /// The additive polynomial sum b_i t^(p^i) as a dense polynomial in t
    /// with coefficients in A.
    pub fn as_additive(&self, tp: &TwistedPoly) -> Vec<Poly> {
        let p = self.field.characteristic() as usize;
        let Some(d) = tp.degree() else {
            return Vec::new();
        };
        let mut v = vec![Poly::zero(); p.pow(d as u32) + 1];
        for (i, c) in tp.coeffs().iter().enumerate() {
            v[p.pow(i as u32)] = c.clone();
        }
        v
    }
}
