//! Q-torsion of the Carlitz module, computed exactly.
//!
//! Let ψ_Q = prod_{D | Q} φ_D(t)^{μ(Q/D)}, monic in t with coefficients in A.
//! In R = A[t]/(ψ_Q) the class λ₀ of t is a root of φ_Q, and the torsion
//! module is realized as {φ_a(λ₀) : deg a < deg Q}. The report checks each
//! torsion fact on these explicit elements.

use std::collections::HashMap;

use serde::Serialize;

use super::twisted::CarlitzModule;
use super::CarlitzError;
use crate::gf::{Elem, Gf};
use crate::poly::Poly;

/// Largest supported deg Q.
pub const MAX_TORSION_DEGREE: usize = 4;

/// A polynomial in t over A, low order first.
type APoly = Vec<Poly>;

fn trim(mut v: APoly) -> APoly {
    while v.last().is_some_and(Poly::is_zero) {
        v.pop();
    }
    v
}

fn a_add(f: &Gf, a: &APoly, b: &APoly) -> APoly {
    let n = a.len().max(b.len());
    let zero = Poly::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero).add(f, b.get(i).unwrap_or(&zero)))
            .collect(),
    )
}

fn a_mul(f: &Gf, a: &APoly, b: &APoly) -> APoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![Poly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] = v[i + j].add(f, &x.mul(f, y));
        }
    }
    trim(v)
}

/// Division by a polynomial whose leading t-coefficient is 1.
fn a_div_rem(f: &Gf, a: &APoly, m: &APoly) -> (APoly, APoly) {
    let dm = m.len() - 1;
    debug_assert_eq!(m[dm], Poly::one());
    let mut r = a.clone();
    if r.len() <= dm {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![Poly::zero(); r.len() - dm];
    for top in (dm..r.len()).rev() {
        let c = r[top].clone();
        if c.is_zero() {
            continue;
        }
        for (i, mi) in m.iter().enumerate() {
            r[top - dm + i] = r[top - dm + i].sub(f, &c.mul(f, mi));
        }
        q[top - dm] = c;
    }
    (trim(q), trim(r))
}

/// Monic irreducible factors with multiplicities, by trial division.
pub fn factor(f: &Gf, q: &Poly) -> Vec<(Poly, u32)> {
    let mut rest = q.monic(f);
    let mut out = Vec::new();
    let n = rest.degree().unwrap_or(0);
    for d in 1..=n {
        if rest.degree().unwrap_or(0) < d {
            break;
        }
        for p in Poly::monic_irreducibles(f, d).expect("small degree") {
            let mut e = 0;
            while let Some(quot) = rest.div_exact(f, &p) {
                rest = quot;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
        }
    }
    out
}

/// |(A/Q)*| from the factorization.
pub fn euler_phi(f: &Gf, q: &Poly) -> u64 {
    let qq = f.order() as u64;
    factor(f, q)
        .iter()
        .map(|(p, e)| {
            let d = p.degree().unwrap() as u32;
            qq.pow(d * e) - qq.pow(d * (e - 1))
        })
        .product()
}

/// Monic divisors D of Q with μ(Q/D) != 0, paired with μ(Q/D).
fn mobius_divisors(f: &Gf, q: &Poly) -> Vec<(Poly, i32)> {
    let fac = factor(f, q);
    let mut out = Vec::new();
    for mask in 0u32..(1 << fac.len()) {
        // Q/D is the product of the primes in the mask
        let mut d = q.monic(f);
        let mut sign = 1;
        for (i, (p, _)) in fac.iter().enumerate() {
            if mask & (1 << i) != 0 {
                d = d.div_exact(f, p).unwrap();
                sign = -sign;
            }
        }
        out.push((d, sign));
    }
    out
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TorsionReport {
    pub q: u32,
    pub modulus: String,
    pub degree: usize,
    /// deg_π φ_Q.
    pub pi_degree: usize,
    /// deg_t ψ_Q.
    pub cyclotomic_degree: usize,
    pub root_count: u64,
    pub expected_count: u64,
    pub all_roots: bool,
    pub distinct: bool,
    pub closed_under_addition: bool,
    pub closed_under_phi_t: bool,
    pub annihilator_is_q: bool,
    pub generator_count: u64,
    pub phi_formula: u64,
    pub phi_enumerated: u64,
}

impl TorsionReport {
    pub fn all_ok(&self) -> bool {
        self.root_count == self.expected_count
            && self.all_roots
            && self.distinct
            && self.closed_under_addition
            && self.closed_under_phi_t
            && self.annihilator_is_q
            && self.generator_count == self.phi_formula
            && self.phi_formula == self.phi_enumerated
            && self.cyclotomic_degree as u64 == self.phi_formula
    }
}

/// Exact computations in A[t]/(ψ_Q).
pub struct TorsionModule {
    carlitz: CarlitzModule,
    q_poly: Poly,
    psi: APoly,
}

impl TorsionModule {
    pub fn new(field: &Gf, q_poly: &Poly) -> Result<TorsionModule, CarlitzError> {
        let d = q_poly
            .degree()
            .ok_or(CarlitzError::InvalidInput("Q must be nonzero".into()))?;
        if d == 0 {
            return Err(CarlitzError::InvalidInput("Q must be nonconstant".into()));
        }
        if !q_poly.is_monic() {
            return Err(CarlitzError::NotMonic);
        }
        if d > MAX_TORSION_DEGREE {
            return Err(CarlitzError::SplittingFieldTooLarge {
                degree: d,
                cap: MAX_TORSION_DEGREE,
            });
        }
        let carlitz = CarlitzModule::new(field.clone());
        let mut num: APoly = vec![Poly::one()];
        let mut den: APoly = vec![Poly::one()];
        for (dd, mu) in mobius_divisors(field, q_poly) {
            let phi_d = carlitz.as_additive(&carlitz.phi(&dd));
            if mu > 0 {
                num = a_mul(field, &num, &phi_d);
            } else {
                den = a_mul(field, &den, &phi_d);
            }
        }
        let (psi, r) = a_div_rem(field, &num, &den);
        if !r.is_empty() {
            return Err(CarlitzError::InvalidInput(
                "cyclotomic quotient is not exact".into(),
            ));
        }
        Ok(TorsionModule {
            carlitz,
            q_poly: q_poly.clone(),
            psi,
        })
    }

    pub fn field(&self) -> &Gf {
        self.carlitz.field()
    }

    /// ψ_Q as a polynomial in t.
    pub fn cyclotomic(&self) -> &[Poly] {
        &self.psi
    }

    fn reduce(&self, a: &APoly) -> APoly {
        a_div_rem(self.field(), a, &self.psi).1
    }

    /// x -> x^p in R.
    fn frob(&self, x: &APoly) -> APoly {
        let f = self.field();
        let mut r = x.clone();
        for _ in 1..f.characteristic() {
            r = self.reduce(&a_mul(f, &r, x));
        }
        r
    }

    /// φ_a(x) = sum b_i x^(p^i) in R.
    pub fn act(&self, a: &Poly, x: &APoly) -> APoly {
        let f = self.field();
        let tp = self.carlitz.phi(a);
        let mut acc: APoly = Vec::new();
        let mut pw = x.clone();
        for (i, b) in tp.coeffs().iter().enumerate() {
            if i > 0 {
                pw = self.frob(&pw);
            }
            if !b.is_zero() {
                acc = a_add(f, &acc, &self.reduce(&a_mul(f, &vec![b.clone()], &pw)));
            }
        }
        acc
    }

    /// λ₀, the class of t.
    pub fn generator(&self) -> APoly {
        self.reduce(&vec![Poly::zero(), Poly::one()])
    }

    pub fn report(&self) -> TorsionReport {
        let f = self.field();
        let qq = f.order() as u64;
        let d = self.q_poly.degree().unwrap();
        let expected = qq.pow(d as u32);
        let lambda0 = self.generator();
        let residues: Vec<Poly> = (0..expected).map(|i| Poly::from_index(f, i)).collect();
        let elems: Vec<APoly> = residues.iter().map(|a| self.act(a, &lambda0)).collect();
        let index: HashMap<APoly, usize> = elems
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let distinct = index.len() == elems.len();
        let all_roots = elems.iter().all(|x| self.act(&self.q_poly, x).is_empty());
        let closed_under_addition = elems
            .iter()
            .all(|x| elems.iter().all(|y| index.contains_key(&a_add(f, x, y))));
        let closed_under_phi_t = elems
            .iter()
            .all(|x| index.contains_key(&self.act(&Poly::x(), x)));
        // annihilator of λ₀ is (Q): φ_Q kills it and no nonzero a of smaller
        // degree does
        let annihilator_is_q = self.act(&self.q_poly, &lambda0).is_empty()
            && elems.iter().skip(1).all(|x| !x.is_empty());
        let primes: Vec<Poly> = factor(f, &self.q_poly)
            .into_iter()
            .map(|(p, _)| p)
            .collect();
        let cofactors: Vec<Poly> = primes
            .iter()
            .map(|p| self.q_poly.div_exact(f, p).unwrap())
            .collect();
        let generator_count = elems
            .iter()
            .filter(|x| cofactors.iter().all(|c| !self.act(c, x).is_empty()))
            .count() as u64;
        let phi_enumerated = residues
            .iter()
            .filter(|a| !a.is_zero() && a.gcd(f, &self.q_poly).degree() == Some(0))
            .count() as u64;
        let pi_degree = self.carlitz.phi(&self.q_poly).degree().unwrap_or(0);
        TorsionReport {
            q: f.order(),
            modulus: self.q_poly.display("T").to_string(),
            degree: d,
            pi_degree,
            cyclotomic_degree: self.psi.len() - 1,
            root_count: index.len() as u64,
            expected_count: (f.characteristic() as u64).pow(pi_degree as u32),
            all_roots,
            distinct,
            closed_under_addition,
            closed_under_phi_t,
            annihilator_is_q,
            generator_count,
            phi_formula: euler_phi(f, &self.q_poly),
            phi_enumerated,
        }
    }
}

/// φ_Q(t) as a dense polynomial in t over A.
pub fn torsion_polynomial(field: &Gf, q_poly: &Poly) -> Vec<Poly> {
    let c = CarlitzModule::new(field.clone());
    c.as_additive(&c.phi(q_poly))
}

pub fn torsion_report(field: &Gf, q_poly: &Poly) -> Result<TorsionReport, CarlitzError> {
    Ok(TorsionModule::new(field, q_poly)?.report())
}

/// All monic polynomials of the given degree over the field.
pub fn monic_of_degree(field: &Gf, d: usize) -> Vec<Poly> {
    let q = field.order() as u64;
    let lead = Poly::monomial(Elem::ONE, d);
    (0..q.pow(d as u32))
        .map(|i| Poly::from_index(field, i).add(field, &lead))
        .collect()
}
