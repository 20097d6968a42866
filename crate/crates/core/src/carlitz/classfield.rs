//! Narrow ray class groups of GF(q)[T] and parameter calculators for the
//! function fields behind the code construction.

use num_rational::Ratio;
use serde::Serialize;

use super::CarlitzError;
use crate::decoder::{integer_sqrt, radius_formula};
use crate::gf::Gf;
use crate::poly::Poly;

/// |Cl⁺_Q(A)| = (q^d - 1) h with h = 1 for A = GF(q)[T].
pub fn narrow_ray_class_order(q: u64, d: u32) -> u64 {
    q.pow(d) - 1
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct NarrowRayReport {
    pub q: u32,
    pub d: u32,
    pub modulus: String,
    pub order: u64,
    /// |(A/Q)*| counted by enumeration.
    pub units_enumerated: u64,
    /// Units modulo GF(q)*, counted by enumeration.
    pub cl_q_enumerated: u64,
    /// (q^d - 1)/(q - 1).
    pub cl_q_formula: u64,
}

impl NarrowRayReport {
    pub fn consistent(&self) -> bool {
        self.units_enumerated == self.order
            && self.cl_q_enumerated == self.cl_q_formula
            && self.order / (self.q as u64 - 1) == self.cl_q_formula
    }
}

/// Checks the cardinalities on the first monic irreducible of degree d.
pub fn narrow_ray_check(field: &Gf, d: u32) -> Result<NarrowRayReport, CarlitzError> {
    let qq = field.order() as u64;
    if qq.checked_pow(d).is_none_or(|n| n > 1 << 20) {
        return Err(CarlitzError::InvalidInput(format!(
            "q^d too large for enumeration (q={qq}, d={d})"
        )));
    }
    let modulus = Poly::monic_irreducibles(field, d as usize)
        .map_err(|e| CarlitzError::InvalidInput(e.to_string()))?
        .into_iter()
        .next()
        .ok_or_else(|| CarlitzError::InvalidInput("no irreducible of that degree".into()))?;
    let total = qq.pow(d);
    let residues = (1..total).map(|i| Poly::from_index(field, i));
    let units: Vec<Poly> = residues
        .filter(|a| a.gcd(field, &modulus).degree() == Some(0))
        .collect();
    // a unit class modulo constants is represented by its monic normalization
    let cl_q = units.iter().filter(|a| a.is_monic()).count() as u64;
    Ok(NarrowRayReport {
        q: field.order(),
        d,
        modulus: modulus.display("T").to_string(),
        order: narrow_ray_class_order(qq, d),
        units_enumerated: units.len() as u64,
        cl_q_enumerated: cl_q,
        cl_q_formula: (total - 1) / (qq - 1),
    })
}

/// Genus of F^Q for a place of degree d >= 2 from
/// 2g - 2 = (2g_F - 2) h (q^d-1) + (q-2) h (q^d-1)/(q-1) + d (q^d-2) h.
pub fn class_field_genus(q: u64, d: u32, g_f: u64, h_f: u64) -> Result<i128, CarlitzError> {
    if d < 2 {
        return Err(CarlitzError::InvalidInput("d must be at least 2".into()));
    }
    if q < 2 {
        return Err(CarlitzError::InvalidInput("q must be at least 2".into()));
    }
    let rhs = hurwitz_rhs(q as i128, d as i128, g_f as i128, h_f as i128)
        .ok_or(CarlitzError::Overflow)?;
    if rhs % 2 != 0 {
        return Err(CarlitzError::NonIntegerGenus {
            twice_g_minus_two: rhs,
        });
    }
    Ok((rhs + 2) / 2)
}

/// The right-hand side 2g - 2 of the genus formula, for any d >= 1.
pub fn hurwitz_rhs(q: i128, d: i128, g: i128, h: i128) -> Option<i128> {
    let qd = q.checked_pow(u32::try_from(d).ok()?)?;
    Some((2 * g - 2) * h * (qd - 1) + (q - 2) * h * (qd - 1) / (q - 1) + d * (qd - 2) * h)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CyclicExtensionParameters {
    pub ell: u64,
    pub n: u64,
    pub g_e: u64,
    pub r: u64,
    /// (ℓ^r + 1)/(ℓ + 1).
    pub e: u128,
    /// e·n.
    pub rational_places_bound: u128,
    /// (g_E - 1)e + (r/2)(e - 1) + 1, as numerator/denominator.
    pub genus_bound: (i128, i128),
}

impl CyclicExtensionParameters {
    pub fn genus_bound_ratio(&self) -> Ratio<i128> {
        Ratio::new(self.genus_bound.0, self.genus_bound.1)
    }

    /// (√ℓ - 1)s, the exponent in the O(N^(...)) list size.
    pub fn list_size_exponent(&self, s: u64) -> u64 {
        (integer_sqrt(self.ell) - 1) * s
    }
}

/// r = 2⌈n/(√ℓ-1)⌉ + 1 for a square ℓ, then the remaining quantities.
pub fn cyclic_extension_parameters(
    ell: u64,
    n: u64,
    g_e: u64,
) -> Result<CyclicExtensionParameters, CarlitzError> {
    let root = integer_sqrt(ell);
    if root * root != ell || root < 2 {
        return Err(CarlitzError::InvalidInput(format!(
            "ℓ = {ell} is not a square prime power above 1"
        )));
    }
    let r = 2 * n.div_ceil(root - 1) + 1;
    cyclic_extension_parameters_with_r(ell, r, n, g_e)
}

/// The same quantities for an explicit odd r.
pub fn cyclic_extension_parameters_with_r(
    ell: u64,
    r: u64,
    n: u64,
    g_e: u64,
) -> Result<CyclicExtensionParameters, CarlitzError> {
    if r.is_multiple_of(2) {
        return Err(CarlitzError::InvalidInput(format!("r = {r} must be odd")));
    }
    if crate::gf::prime_power(ell).is_none() {
        return Err(CarlitzError::InvalidInput(format!(
            "ℓ = {ell} is not a prime power"
        )));
    }
    let ell128 = ell as u128;
    let pow = ell128.checked_pow(r as u32).ok_or(CarlitzError::Overflow)?;
    let num = pow + 1;
    if num % (ell128 + 1) != 0 {
        return Err(CarlitzError::InvalidInput(
            "ℓ + 1 does not divide ℓ^r + 1".into(),
        ));
    }
    let e = num / (ell128 + 1);
    let ei = i128::try_from(e).map_err(|_| CarlitzError::Overflow)?;
    let bound = Ratio::from_integer((g_e as i128 - 1) * ei)
        + Ratio::new(r as i128, 2) * Ratio::from_integer(ei - 1)
        + Ratio::from_integer(1);
    Ok(CyclicExtensionParameters {
        ell,
        n,
        g_e,
        r,
        e,
        rational_places_bound: e.checked_mul(n as u128).ok_or(CarlitzError::Overflow)?,
        genus_bound: (*bound.numer(), *bound.denom()),
    })
}

/// The ε-driven choice s = ⌈1/ε⌉, m = ℓ = ⌈1/ε²⌉ and the resulting radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonChoice {
    pub s: u64,
    pub m: u64,
    pub ell: u64,
    pub tau: Option<Ratio<i64>>,
    pub target: Ratio<i64>,
}

impl EpsilonChoice {
    pub fn meets_target(&self) -> bool {
        self.tau.is_some_and(|t| t >= self.target)
    }
}

pub fn epsilon_choice(eps: Ratio<i64>, rate: Ratio<i64>) -> EpsilonChoice {
    let inv = eps.recip();
    let s = inv.ceil().to_integer() as u64;
    let m = (inv * inv).ceil().to_integer() as u64;
    let ell = m;
    EpsilonChoice {
        s,
        m,
        ell,
        tau: radius_formula(s, m, rate, ell),
        target: Ratio::from_integer(1) - rate - eps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn narrow_ray_orders() {
        assert_eq!(narrow_ray_class_order(2, 2), 3);
        assert_eq!(narrow_ray_class_order(4, 1), 3);
        assert_eq!(narrow_ray_class_order(3, 3), 26);
        let r = narrow_ray_check(&Gf::prime(3).unwrap(), 3).unwrap();
        assert!(r.consistent());
        assert_eq!(r.cl_q_formula, 13);
        let r = narrow_ray_check(&Gf::new(2, 2, None).unwrap(), 1).unwrap();
        assert_eq!(r.cl_q_enumerated, 1);
        assert!(r.consistent());
    }

    #[test]
    fn genus_values() {
        assert_eq!(class_field_genus(2, 2, 0, 1).unwrap(), 0);
        assert_eq!(class_field_genus(4, 2, 0, 1).unwrap(), 5);
        assert_eq!(class_field_genus(2, 3, 0, 1).unwrap(), 3);
        assert!(class_field_genus(2, 1, 0, 1).is_err());
    }

    #[test]
    fn cyclic_extension_values() {
        let p = cyclic_extension_parameters_with_r(4, 3, 0, 1).unwrap();
        assert_eq!(p.e, 13);
        assert_eq!(p.genus_bound_ratio(), Ratio::from_integer(19));
        assert_eq!(cyclic_extension_parameters(9, 16, 0).unwrap().r, 17);
        assert!(cyclic_extension_parameters(8, 1, 0).is_err());
        assert!(cyclic_extension_parameters_with_r(4, 2, 1, 1).is_err());
    }

    #[test]
    fn epsilon_grid_values() {
        let c = epsilon_choice(Ratio::new(1, 5), Ratio::new(3, 10));
        assert_eq!((c.s, c.m, c.ell), (5, 25, 25));
        assert_eq!(c.tau, Some(Ratio::new(5, 126)));
        assert_eq!(c.target, Ratio::new(1, 2));
    }
}
