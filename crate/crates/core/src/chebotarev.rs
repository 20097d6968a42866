//! Frobenius class counts for the narrow ray class field of GF(q)(T) with
//! modulus Q, checked against the explicit Chebotarev bound
//! B(h) = (2|C|/(eh))(e + g_F) q^{h/2} + e(2g_L + 1) q^{h/4} + g_F + de
//! with |C| = 1, g_L = 0, d = 1 and g_F the genus of the full class field.
//!
//! The Frobenius of an unramified place P is P mod Q in (A/Q)*, so the
//! experiment counts monic irreducibles of degree h by residue class.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::carlitz::classfield::hurwitz_rhs;
use crate::gf::{Elem, Gf};
use crate::poly::Poly;

/// Largest q^h enumerated.
pub const ENUMERATION_CAP: u128 = 1 << 24;

const SCALE_BITS: u32 = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChebotarevError {
    #[error("q^h = {size} exceeds the enumeration cap 2^24")]
    CapExceeded { size: u128 },
    #[error("place is ramified (Q divides P)")]
    RamifiedPlace,
    #[error("modulus must be monic irreducible")]
    InvalidModulus,
    #[error("quotient order {e} does not divide |(A/Q)*| = {order}")]
    InvalidQuotient { e: u64, order: u64 },
    #[error("genus formula is not integral")]
    NonIntegerGenus,
}

/// Monic irreducibles of degree h in increasing index order.
pub fn irreducibles_of_degree(field: &Gf, h: usize) -> Result<Vec<Poly>, ChebotarevError> {
    let q = field.order() as u128;
    let size = q.checked_pow(h as u32).unwrap_or(u128::MAX);
    if size > ENUMERATION_CAP {
        return Err(ChebotarevError::CapExceeded { size });
    }
    let lead = Poly::monomial(Elem::ONE, h);
    Ok((0..size as u64)
        .into_par_iter()
        .map(|i| Poly::from_index(field, i).add(field, &lead))
        .filter(|p| p.is_irreducible(field))
        .collect())
}

fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// (1/h) sum_{d | h} μ(d) q^(h/d).
pub fn irreducible_count(q: u64, h: u64) -> u64 {
    let total: i128 = (1..=h)
        .filter(|d| h.is_multiple_of(*d))
        .map(|d| mobius(d) as i128 * (q as i128).pow((h / d) as u32))
        .sum();
    (total / h as i128) as u64
}

/// Residue classes of (A/Q)* modulo its subgroup of index e.
#[derive(Clone, Debug)]
pub struct ClassMap {
    field: Gf,
    modulus: Poly,
    e: u64,
    /// unit index -> canonical representative index.
    rep_of: BTreeMap<u64, u64>,
}

fn poly_key(field: &Gf, p: &Poly) -> (usize, u64) {
    (p.degree().unwrap_or(0), p.index(field))
}

impl ClassMap {
    /// The quotient of (A/Q)* of order e. Cosets are P·H with H the image of
    /// x -> x^e, represented by their least member by (degree, index).
    pub fn new(field: &Gf, modulus: &Poly, e: u64) -> Result<ClassMap, ChebotarevError> {
        if !modulus.is_monic() || !modulus.is_irreducible(field) {
            return Err(ChebotarevError::InvalidModulus);
        }
        let d = modulus.degree().unwrap() as u32;
        let q = field.order() as u64;
        let order = q.pow(d) - 1;
        if e == 0 || !order.is_multiple_of(e) {
            return Err(ChebotarevError::InvalidQuotient { e, order });
        }
        let units: Vec<Poly> = (1..=order).map(|i| Poly::from_index(field, i)).collect();
        let subgroup: Vec<Poly> = {
            let mut seen = std::collections::BTreeSet::new();
            units
                .iter()
                .map(|x| x.pow_mod(field, e, modulus))
                .filter(|y| seen.insert(y.index(field)))
                .collect()
        };
        let mut rep_of = BTreeMap::new();
        for u in &units {
            let ui = u.index(field);
            if rep_of.contains_key(&ui) {
                continue;
            }
            let coset: Vec<Poly> = subgroup
                .iter()
                .map(|h| u.mul_mod(field, h, modulus))
                .collect();
            let rep = coset
                .iter()
                .min_by_key(|c| poly_key(field, c))
                .unwrap()
                .index(field);
            for c in coset {
                rep_of.insert(c.index(field), rep);
            }
        }
        Ok(ClassMap {
            field: field.clone(),
            modulus: modulus.clone(),
            e,
            rep_of,
        })
    }

    pub fn order(&self) -> u64 {
        self.e
    }

    /// Canonical representatives sorted by (degree, index).
    pub fn classes(&self) -> Vec<Poly> {
        let mut reps: Vec<u64> = self.rep_of.values().copied().collect();
        reps.sort_unstable();
        reps.dedup();
        let mut polys: Vec<Poly> = reps
            .into_iter()
            .map(|i| Poly::from_index(&self.field, i))
            .collect();
        polys.sort_by_key(|p| poly_key(&self.field, p));
        polys
    }

    /// The class of P mod Q.
    pub fn frobenius_class(&self, p: &Poly) -> Result<Poly, ChebotarevError> {
        let r = p.rem(&self.field, &self.modulus).unwrap();
        if r.is_zero() {
            return Err(ChebotarevError::RamifiedPlace);
        }
        Ok(Poly::from_index(
            &self.field,
            self.rep_of[&r.index(&self.field)],
        ))
    }
}

/// P mod Q as a unit of A/Q (full group).
pub fn frobenius_class(field: &Gf, p: &Poly, modulus: &Poly) -> Result<Poly, ChebotarevError> {
    let r = p.rem(field, modulus).unwrap();
    if r.is_zero() {
        return Err(ChebotarevError::RamifiedPlace);
    }
    Ok(r)
}

/// floor(n^(1/k)).
pub fn integer_root(n: u128, k: u32) -> u128 {
    if n < 2 {
        return n;
    }
    let (mut lo, mut hi) = (0u128, 1u128 << (128 / k + 1).min(127));
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        match mid.checked_pow(k) {
            Some(v) if v <= n => lo = mid,
            _ => hi = mid - 1,
        }
    }
    lo
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ClassCount {
    pub class_repr: String,
    pub count: u64,
    /// q^h/(eh).
    pub expected: f64,
    pub bound: f64,
    /// bound - |count - expected|.
    pub margin: f64,
    /// Exact, certified verdict of |count - expected| <= bound.
    pub within_bound: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct FrobeniusHistogram {
    pub q: u32,
    pub modulus: String,
    pub h: usize,
    pub e: u64,
    pub g_f: i128,
    pub classes: Vec<ClassCount>,
    pub total: u64,
    /// Möbius count minus places dividing Q.
    pub expected_total: u64,
}

impl FrobeniusHistogram {
    pub fn sum_rule_holds(&self) -> bool {
        self.total == self.expected_total
    }

    pub fn all_within_bound(&self) -> bool {
        self.classes.iter().all(|c| c.within_bound)
    }

    /// max |count - expected| / q^{h/2}, descriptive only.
    pub fn normalized_max_deviation(&self) -> f64 {
        let s = (self.q as f64).powf(self.h as f64 / 2.0);
        self.classes
            .iter()
            .map(|c| (c.count as f64 - c.expected).abs() / s)
            .fold(0.0, f64::max)
    }
}

/// Counts irreducibles of degree h per class of the order-e quotient and
/// tests each count against B(h).
pub fn chebotarev_check(
    field: &Gf,
    modulus: &Poly,
    h: usize,
    e: Option<u64>,
) -> Result<FrobeniusHistogram, ChebotarevError> {
    let q = field.order() as u64;
    let d = modulus.degree().ok_or(ChebotarevError::InvalidModulus)? as u32;
    let e = e.unwrap_or(q.pow(d) - 1);
    let map = ClassMap::new(field, modulus, e)?;
    let rhs = hurwitz_rhs(q as i128, d as i128, 0, 1).ok_or(ChebotarevError::NonIntegerGenus)?;
    if rhs % 2 != 0 {
        return Err(ChebotarevError::NonIntegerGenus);
    }
    let g_f = (rhs + 2) / 2;
    let places = irreducibles_of_degree(field, h)?;
    let mut counts: BTreeMap<u64, u64> =
        map.classes().iter().map(|c| (c.index(field), 0)).collect();
    let mut total = 0;
    for p in &places {
        match map.frobenius_class(p) {
            Ok(c) => {
                *counts.get_mut(&c.index(field)).unwrap() += 1;
                total += 1;
            }
            Err(ChebotarevError::RamifiedPlace) => {}
            Err(err) => return Err(err),
        }
    }
    let ramified = if h == d as usize { 1 } else { 0 };
    let expected_total = irreducible_count(q, h as u64) - ramified;

    let qh = (q as u128).pow(h as u32);
    let scale = 1u128 << SCALE_BITS;
    let sqrt_lo = integer_root(qh * scale * scale, 2);
    let root4_lo = integer_root(qh * scale.pow(4), 4);
    let (ei, hi, gi) = (e as i128, h as i128, g_f);
    let eh = ei * hi;
    // everything multiplied by eh·scale
    let rhs_lo = 2 * (ei + gi) * sqrt_lo as i128
        + eh * ei * root4_lo as i128
        + eh * (gi + ei) * scale as i128;

    let q_half = (q as f64).powf(h as f64 / 2.0);
    let q_quarter = (q as f64).powf(h as f64 / 4.0);
    let bound_f = (2.0 / (e as f64 * h as f64)) * (e as f64 + g_f as f64) * q_half
        + e as f64 * q_quarter
        + g_f as f64
        + e as f64;
    let expected_f = qh as f64 / (e as f64 * h as f64);

    let classes = map
        .classes()
        .iter()
        .map(|c| {
            let count = counts[&c.index(field)];
            let dev = (eh * count as i128 - qh as i128).abs() * scale as i128;
            let margin = bound_f - (count as f64 - expected_f).abs();
            ClassCount {
                class_repr: c.display("T").to_string(),
                count,
                expected: expected_f,
                bound: bound_f,
                margin,
                within_bound: dev <= rhs_lo,
            }
        })
        .collect();
    Ok(FrobeniusHistogram {
        q: field.order(),
        modulus: modulus.display("T").to_string(),
        h,
        e,
        g_f,
        classes,
        total,
        expected_total,
    })
}

/// CSV with columns h, class_repr, count, expected, bound, margin.
pub fn histograms_to_csv(hists: &[FrobeniusHistogram]) -> String {
    let mut out = String::from("h,class_repr,count,expected,bound,margin\n");
    for hist in hists {
        for c in &hist.classes {
            out.push_str(&format!(
                "{},{},{},{:.6},{:.6},{:.6}\n",
                hist.h, c.class_repr, c.count, c.expected, c.bound, c.margin
            ));
        }
    }
    out
}
