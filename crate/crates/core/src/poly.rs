//! Univariate polynomials over GF(q).
//!
//! A [`Poly`] holds trimmed coefficients (low order first) and no field
//! reference; every operation takes the field explicitly.

use std::fmt;

use thiserror::Error;

use crate::gf::{Elem, Gf};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot parse polynomial {0:?}")]
    Parse(String),
    #[error("enumeration of q^{degree} polynomials over GF({q}) is too large")]
    TooLarge { q: u32, degree: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly {
            coeffs: vec![Elem::ONE],
        }
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::new(vec![c])
    }

    /// The monomial X.
    pub fn x() -> Poly {
        Poly {
            coeffs: vec![Elem::ZERO, Elem::ONE],
        }
    }

    pub fn monomial(c: Elem, deg: usize) -> Poly {
        let mut v = vec![Elem::ZERO; deg + 1];
        v[deg] = c;
        Poly::new(v)
    }

    pub fn new(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Elem::ONE
    }

    /// The polynomial whose coefficients are the base-q digits of `v`.
    pub fn from_index(f: &Gf, mut v: u64) -> Poly {
        let q = f.order() as u64;
        let mut c = Vec::new();
        while v > 0 {
            c.push(Elem((v % q) as u32));
            v /= q;
        }
        Poly::new(c)
    }

    /// Inverse of [`Poly::from_index`].
    pub fn index(&self, f: &Gf) -> u64 {
        let q = f.order() as u64;
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, c| acc * q + c.raw() as u64)
    }

    pub fn add(&self, f: &Gf, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| f.add(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn sub(&self, f: &Gf, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| f.sub(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn neg(&self, f: &Gf) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, f: &Gf, c: Elem) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Elem::ZERO; n];
        v.extend_from_slice(&self.coeffs);
        Poly { coeffs: v }
    }

    pub fn mul(&self, f: &Gf, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Elem::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Poly::new(v)
    }

    pub fn pow(&self, f: &Gf, mut e: u64) -> Poly {
        let mut r = Poly::one();
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

    pub fn div_rem(&self, f: &Gf, d: &Poly) -> Result<(Poly, Poly), PolyError> {
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let inv = f.inv(d.lead()).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut qv = vec![Elem::ZERO; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = f.mul(r[top], inv);
            if c.is_zero() {
                continue;
            }
            qv[top - dd] = c;
            for (i, &b) in d.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                r[idx] = f.sub(r[idx], f.mul(c, b));
            }
        }
        Ok((Poly::new(qv), Poly::new(r)))
    }

    pub fn rem(&self, f: &Gf, d: &Poly) -> Result<Poly, PolyError> {
        Ok(self.div_rem(f, d)?.1)
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, f: &Gf, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(f, d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self, f: &Gf) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f, f.inv(self.lead()).unwrap())
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, f: &Gf, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b).unwrap();
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn eval(&self, f: &Gf, x: Elem) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self, f: &Gf) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
                .collect(),
        )
    }

    /// self(g).
    pub fn compose(&self, f: &Gf, g: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, &c| {
            acc.mul(f, g).add(f, &Poly::constant(c))
        })
    }

    pub fn mul_mod(&self, f: &Gf, o: &Poly, m: &Poly) -> Poly {
        self.mul(f, o).rem(f, m).unwrap()
    }

    pub fn pow_mod(&self, f: &Gf, mut e: u64, m: &Poly) -> Poly {
        let mut r = Poly::one().rem(f, m).unwrap();
        let mut b = self.rem(f, m).unwrap();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul_mod(f, &b, m);
            }
            b = b.mul_mod(f, &b, m);
            e >>= 1;
        }
        r
    }

    /// X^(q^n) mod m by repeated q-th powering.
    pub fn frobenius_power_of_x(f: &Gf, n: u32, m: &Poly) -> Poly {
        let q = f.order() as u64;
        let mut r = Poly::x().rem(f, m).unwrap();
        for _ in 0..n {
            r = r.pow_mod(f, q, m);
        }
        r
    }

    /// Rabin's test: monic or not, `self` of degree n is irreducible iff
    /// X^(q^n) = X mod self and gcd(X^(q^(n/r)) - X, self) = 1 for each prime
    /// r | n.
    pub fn is_irreducible(&self, f: &Gf) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n as u32,
        };
        let x = Poly::x();
        if Poly::frobenius_power_of_x(f, n, self)
            .sub(f, &x)
            .rem(f, self)
            .unwrap()
            != Poly::zero()
        {
            return false;
        }
        for r in crate::gf::prime_factors(n as u64) {
            let h = Poly::frobenius_power_of_x(f, n / r as u32, self).sub(f, &x);
            if h.gcd(f, self).degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Irreducibility by trial division (slow; used as a cross-check).
    pub fn is_irreducible_naive(&self, f: &Gf) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        let q = f.order() as u64;
        for d in 1..=n / 2 {
            let base = q.pow(d as u32);
            for low in 0..base {
                let g = Poly::from_index(f, low).add(f, &Poly::monomial(Elem::ONE, d));
                if self.rem(f, &g).unwrap().is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Monic irreducibles of degree `d` in increasing index order.
    pub fn monic_irreducibles(f: &Gf, d: usize) -> Result<Vec<Poly>, PolyError> {
        let q = f.order() as u64;
        let count = (q as u128).pow(d as u32);
        if count > (1u128 << 24) {
            return Err(PolyError::TooLarge {
                q: f.order(),
                degree: d,
            });
        }
        let lead = Poly::monomial(Elem::ONE, d);
        Ok((0..count as u64)
            .map(|low| Poly::from_index(f, low).add(f, &lead))
            .filter(|p| p.is_irreducible(f))
            .collect())
    }

    /// Roots in GF(q), in increasing integer order.
    pub fn roots(&self, f: &Gf) -> Vec<Elem> {
        f.elements()
            .filter(|&a| self.eval(f, a).is_zero())
            .collect()
    }

    /// Parses expressions like `T^2+T+1`, `x^3 + 0x2*x + 0x1`, `2T^2-1`. Any
    /// single letter serves as the variable. Coefficients are decimal integers
    /// (reduced into the prime field) or `0x..` field elements.
    pub fn parse(f: &Gf, s: &str) -> Result<Poly, PolyError> {
        let err = || PolyError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && i == 0 {
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        terms.push((neg, cur));
        let mut out = Poly::zero();
        for (neg, t) in terms {
            if t.is_empty() {
                return Err(err());
            }
            let (coef_part, var_part) = split_term(&t);
            let coef = if coef_part.is_empty() {
                Elem::ONE
            } else if let Some(h) = coef_part.strip_prefix("0x") {
                let v = u32::from_str_radix(h, 16).map_err(|_| err())?;
                f.elem(v).map_err(|_| err())?
            } else {
                let v: i64 = coef_part.parse().map_err(|_| err())?;
                f.from_int(v)
            };
            let deg = match var_part {
                None => 0,
                Some(v) => {
                    let mut it = v.chars();
                    let var = it.next().ok_or_else(err)?;
                    if !var.is_ascii_alphabetic() {
                        return Err(err());
                    }
                    let rest: String = it.collect();
                    if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(err)?
                            .parse::<usize>()
                            .map_err(|_| err())?
                    }
                }
            };
            let c = if neg { f.neg(coef) } else { coef };
            out = out.add(f, &Poly::monomial(c, deg));
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

fn split_term(t: &str) -> (&str, Option<&str>) {
    let t = t.trim_end_matches('*');
    if let Some(h) = t.strip_prefix("0x") {
        // hex coefficient, then optional "*var"
        let end = h
            .find(|c: char| !c.is_ascii_hexdigit())
            .map(|e| e + 2)
            .unwrap_or(t.len());
        let (c, rest) = t.split_at(end);
        let rest = rest.trim_start_matches('*');
        return (c, (!rest.is_empty()).then_some(rest));
    }
    let end = t.find(|c: char| !c.is_ascii_digit()).unwrap_or(t.len());
    let (c, rest) = t.split_at(end);
    let rest = rest.trim_start_matches('*');
    (c, (!rest.is_empty()).then_some(rest))
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("X"))
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let show_coef = *c != Elem::ONE || i == 0;
            if show_coef {
                if c.raw() < 10 {
                    write!(f, "{}", c.raw())?;
                } else {
                    write!(f, "{c}")?;
                }
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, k: u32) -> Gf {
        Gf::new(p, k, None).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let f = gf(2, 1);
        let p = Poly::parse(&f, "T^2+T+1").unwrap();
        assert_eq!(p.coeffs(), &[Elem::ONE, Elem::ONE, Elem::ONE]);
        assert_eq!(p.display("T").to_string(), "T^2 + T + 1");
        let g = gf(3, 1);
        let p = Poly::parse(&g, "2T^2 - 1").unwrap();
        assert_eq!(p.coeffs(), &[Elem(2), Elem(0), Elem(2)]);
        let h = gf(2, 4);
        let p = Poly::parse(&h, "x^3 + 0x2*x + 0x9").unwrap();
        assert_eq!(p.coeffs(), &[Elem(9), Elem(2), Elem(0), Elem(1)]);
        assert!(Poly::parse(&f, "T^").is_err());
        assert!(Poly::parse(&f, "").is_err());
    }

    #[test]
    fn division_identity() {
        let f = gf(2, 4);
        let a = Poly::new((1..9).map(Elem).collect());
        let b = Poly::new(vec![Elem(3), Elem(0), Elem(7)]);
        let (q, r) = a.div_rem(&f, &b).unwrap();
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(q.mul(&f, &b).add(&f, &r), a);
        assert_eq!(a.div_rem(&f, &Poly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree n over GF(q): (1/n) sum_{d|n} mu(d) q^(n/d)
        let f = gf(2, 1);
        let expected = [2, 1, 2, 3, 6, 9, 18];
        for (n, &e) in (1..=7).zip(expected.iter()) {
            assert_eq!(
                Poly::monic_irreducibles(&f, n).unwrap().len(),
                e,
                "degree {n}"
            );
        }
        let g = gf(3, 1);
        assert_eq!(Poly::monic_irreducibles(&g, 2).unwrap().len(), 3);
        assert_eq!(Poly::monic_irreducibles(&g, 3).unwrap().len(), 8);
        let h = gf(2, 2);
        assert_eq!(Poly::monic_irreducibles(&h, 2).unwrap().len(), 6);
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        let f = gf(3, 1);
        for v in 0..729u64 {
            let p = Poly::from_index(&f, v);
            assert_eq!(p.is_irreducible(&f), p.is_irreducible_naive(&f), "{p:?}");
        }
    }

    #[test]
    fn index_round_trip() {
        let f = gf(2, 2);
        for v in 0..200 {
            assert_eq!(Poly::from_index(&f, v).index(&f), v);
        }
    }

    #[test]
    fn gcd_and_derivative() {
        let f = gf(5, 1);
        let a = Poly::parse(&f, "x^2 - 1").unwrap();
        let b = Poly::parse(&f, "x^2 + 2x + 1").unwrap();
        assert_eq!(a.gcd(&f, &b), Poly::parse(&f, "x + 1").unwrap());
        assert_eq!(
            Poly::parse(&f, "x^5 + 3x^2").unwrap().derivative(&f),
            Poly::parse(&f, "x").unwrap()
        );
    }
}
