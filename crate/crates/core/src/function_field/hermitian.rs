//! The Hermitian curve y^ℓ + y = x^{ℓ+1} over GF(ℓ²), D the point at infinity.
//!
//! σ(x, y) = (γx, γ^{ℓ+1}y) has order q - 1 and fixes infinity. Pole orders at
//! infinity are v(x) = -ℓ, v(y) = -(ℓ+1), so L(lD) has basis x^i y^j with
//! j < ℓ and iℓ + j(ℓ+1) <= l.

use std::fmt;

use super::{
    BiPoly, Function, FunctionFieldBackend, FunctionFieldError, ListBoundWitness, Place, RRBasis,
    Result,
};
use crate::gf::{Elem, Gf};
use crate::series::Series;

#[derive(Clone)]
pub struct HermitianBackend {
    field: Gf,
    ell: u32,
    gamma: Elem,
}

impl fmt::Debug for HermitianBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HermitianBackend(ell = {}, GF({}))",
            self.ell,
            self.field.order()
        )
    }
}

impl HermitianBackend {
    /// `field` must have order ℓ².
    pub fn new(field: Gf, ell: u32) -> Result<HermitianBackend> {
        if ell < 2 || (ell as u64) * (ell as u64) != field.order() as u64 {
            return Err(FunctionFieldError::InvalidBackend(format!(
                "field of order {} is not GF({ell}^2)",
                field.order()
            )));
        }
        let gamma = field.primitive_element();
        Ok(HermitianBackend { field, ell, gamma })
    }

    /// Builds GF(ℓ²) with the canonical modulus.
    pub fn with_ell(ell: u32) -> Result<HermitianBackend> {
        let field = Gf::with_order(ell as u64 * ell as u64)?;
        HermitianBackend::new(field, ell)
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn on_curve(&self, x: Elem, y: Elem) -> bool {
        let f = &self.field;
        let l = self.ell as u64;
        f.add(f.pow(y, l), y) == f.pow(x, l + 1)
    }

    /// Rewrites y^ℓ as x^{ℓ+1} - y until every y-degree is below ℓ.
    pub fn reduce(&self, g: &BiPoly) -> BiPoly {
        let f = &self.field;
        let l = self.ell as usize;
        let mut cur = g.clone();
        loop {
            let Some(((i, j), c)) = cur.terms().find(|&((_, j), _)| j >= l) else {
                return cur;
            };
            let term = BiPoly::monomial(c, i, j);
            let replacement =
                BiPoly::monomial(c, i + l + 1, j - l).sub(f, &BiPoly::monomial(c, i, j + 1 - l));
            cur = cur.sub(f, &term).add(f, &replacement);
        }
    }

    fn weight(&self, i: usize, j: usize) -> usize {
        i * self.ell as usize + j * (self.ell as usize + 1)
    }
}

impl FunctionFieldBackend for HermitianBackend {
    fn name(&self) -> &'static str {
        "hermitian"
    }

    fn field(&self) -> &Gf {
        &self.field
    }

    fn genus(&self) -> u32 {
        self.ell * (self.ell - 1) / 2
    }

    fn divisor_degree(&self) -> u32 {
        1
    }

    fn sigma_order(&self) -> u64 {
        self.field.order() as u64 - 1
    }

    fn places(&self) -> Vec<Place> {
        let f = &self.field;
        let mut out = Vec::new();
        for x in f.elements() {
            for y in f.elements() {
                if self.on_curve(x, y) {
                    out.push(Place { x, y });
                }
            }
        }
        out
    }

    fn sigma_place(&self, p: &Place, power: i64) -> Place {
        let f = &self.field;
        let n = self.sigma_order() as i64;
        let k = power.rem_euclid(n) as u64;
        let gk = f.pow(self.gamma, k);
        Place {
            x: f.mul(gk, p.x),
            y: f.mul(f.pow(gk, self.ell as u64 + 1), p.y),
        }
    }

    fn sigma_fn(&self, g: &Function, power: i64) -> Function {
        let f = &self.field;
        let n = self.sigma_order() as i64;
        let k = (-power).rem_euclid(n) as u64;
        let gk = f.pow(self.gamma, k);
        let ell = self.ell as u64;
        let w = |i: usize, j: usize| f.pow(gk, i as u64 + j as u64 * (ell + 1));
        Function {
            num: g.num.map_coeffs(f, w),
            den: g.den.map_coeffs(f, w),
        }
    }

    fn rr_basis(&self, l: u32) -> Result<RRBasis> {
        let mut mons: Vec<(usize, usize, usize)> = Vec::new();
        for j in 0..self.ell as usize {
            let mut i = 0;
            while self.weight(i, j) <= l as usize {
                mons.push((self.weight(i, j), j, i));
                i += 1;
            }
        }
        mons.sort();
        Ok(RRBasis {
            multiplicity: l,
            functions: mons
                .iter()
                .map(|&(_, j, i)| Function::poly(BiPoly::monomial(Elem::ONE, i, j)))
                .collect(),
            pole_orders: mons.iter().map(|&(w, _, _)| w as u32).collect(),
        })
    }

    /// u = x - a; y(u) from the fixed point y = (a + u)^{ℓ+1} - y^ℓ.
    fn chart(&self, p: &Place, len: usize) -> Result<(Series, Series)> {
        let f = &self.field;
        if !self.on_curve(p.x, p.y) {
            return Err(FunctionFieldError::NotOnCurve(p.to_string()));
        }
        let xs = Series::new(vec![p.x, Elem::ONE], len);
        let rhs = xs.pow(f, self.ell as u64 + 1);
        let mut ys = Series::constant(p.y, len);
        for _ in 0..len {
            let next = rhs.sub(f, &ys.pow(f, self.ell as u64));
            if next == ys {
                break;
            }
            ys = next;
        }
        Ok((xs, ys))
    }

    /// x^{q-1} - 1, valid away from x = 0.
    fn fixed_parameter(&self, p: &Place) -> Result<Function> {
        if p.x.is_zero() {
            return Err(FunctionFieldError::BadParameter(
                "x^(q-1) - 1 at a point with x = 0".into(),
            ));
        }
        let f = &self.field;
        let n = self.field.order() as usize - 1;
        let t = BiPoly::monomial(Elem::ONE, n, 0).sub(f, &BiPoly::one());
        Ok(Function::poly(t))
    }

    fn list_bound_witness(&self, _l: u32) -> Option<ListBoundWitness> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_curve_points_and_orbits() {
        let h = HermitianBackend::with_ell(2).unwrap();
        assert_eq!(h.places().len(), 8);
        let lens: Vec<usize> = h.orbits().iter().map(|o| o.len()).collect();
        assert_eq!(lens, vec![3, 3, 1, 1]);
        assert_eq!(h.genus(), 1);
    }

    #[test]
    fn basis_for_l4() {
        let h = HermitianBackend::with_ell(2).unwrap();
        let b = h.rr_basis(4).unwrap();
        assert_eq!(b.dimension(), 4);
        let mons: Vec<(usize, usize)> = b
            .functions
            .iter()
            .map(|z| z.num.terms().next().unwrap().0)
            .collect();
        assert_eq!(mons, vec![(0, 0), (1, 0), (0, 1), (2, 0)]);
    }

    #[test]
    fn evaluation_and_sigma_on_gf4() {
        let h = HermitianBackend::with_ell(2).unwrap();
        let f = h.field().clone();
        let w = f.primitive_element();
        let p = Place { x: Elem::ONE, y: w };
        assert!(h.on_curve(p.x, p.y));
        let g = Function::poly(
            BiPoly::monomial(Elem::ONE, 2, 0).add(&f, &BiPoly::monomial(Elem::ONE, 0, 1)),
        );
        assert_eq!(h.evaluate(&g, &p).unwrap(), f.add(Elem::ONE, w));
        let img = h.sigma_place(&p, 1);
        assert_eq!(img, Place { x: w, y: w });
        assert!(h.on_curve(img.x, img.y));
    }

    #[test]
    fn chart_satisfies_curve_equation() {
        let h = HermitianBackend::with_ell(4).unwrap();
        let f = h.field().clone();
        for p in h.places().into_iter().take(20) {
            let (xs, ys) = h.chart(&p, 12).unwrap();
            let lhs = ys.pow(&f, 4).add(&f, &ys);
            assert_eq!(lhs, xs.pow(&f, 5));
        }
    }

    #[test]
    fn reduction_preserves_values() {
        let h = HermitianBackend::with_ell(2).unwrap();
        let f = h.field().clone();
        let g = BiPoly::monomial(Elem(3), 1, 3).add(&f, &BiPoly::monomial(Elem(2), 0, 2));
        let r = h.reduce(&g);
        assert!(r.terms().all(|((_, j), _)| j < 2));
        for p in h.places() {
            assert_eq!(g.eval(&f, p.x, p.y), r.eval(&f, p.x, p.y));
        }
    }

    #[test]
    fn sigma_compatibility() {
        let h = HermitianBackend::with_ell(2).unwrap();
        let b = h.rr_basis(5).unwrap();
        for z in &b.functions {
            let zs = h.sigma_fn(z, -1);
            for p in h.places() {
                assert_eq!(
                    h.evaluate(z, &h.sigma_place(&p, 1)).unwrap(),
                    h.evaluate(&zs, &p).unwrap()
                );
            }
        }
    }
}
