//! The rational function field GF(q)(X) with D the pole of X.
//!
//! σ acts on finite places by an affine map X=a -> X=αa+β. The default is
//! scaling by the primitive element, which gives folded Reed–Solomon codes.

use std::fmt;

use super::{
    BiPoly, ClosedPlace, Function, FunctionFieldBackend, FunctionFieldError, ListBoundWitness,
    Place, RRBasis, Result,
};
use crate::gf::{Elem, Gf};
use crate::poly::Poly;
use crate::series::Series;

/// a -> alpha * a + beta.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AffineMap {
    pub alpha: Elem,
    pub beta: Elem,
}

impl AffineMap {
    pub fn apply(&self, f: &Gf, a: Elem) -> Elem {
        f.add(f.mul(self.alpha, a), self.beta)
    }

    pub fn compose(&self, f: &Gf, inner: &AffineMap) -> AffineMap {
        AffineMap {
            alpha: f.mul(self.alpha, inner.alpha),
            beta: self.apply(f, inner.beta),
        }
    }

    pub fn inverse(&self, f: &Gf) -> AffineMap {
        let ai = f.inv(self.alpha).expect("alpha is nonzero");
        AffineMap {
            alpha: ai,
            beta: f.neg(f.mul(ai, self.beta)),
        }
    }

    pub fn identity() -> AffineMap {
        AffineMap {
            alpha: Elem::ONE,
            beta: Elem::ZERO,
        }
    }

    pub fn pow(&self, f: &Gf, k: i64) -> AffineMap {
        let base = if k < 0 { self.inverse(f) } else { *self };
        let mut e = k.unsigned_abs();
        let mut r = AffineMap::identity();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                r = r.compose(f, &b);
            }
            b = b.compose(f, &b);
            e >>= 1;
        }
        r
    }

    /// X -> alpha X + beta as a polynomial.
    pub fn as_poly(&self) -> Poly {
        Poly::new(vec![self.beta, self.alpha])
    }
}

#[derive(Clone)]
pub struct RationalBackend {
    field: Gf,
    sigma: AffineMap,
    order: u64,
    /// A generator g of the fixed field of σ: GF(q)(X)^σ = GF(q)(g).
    fixed_generator: Poly,
}

impl fmt::Debug for RationalBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RationalBackend(GF({}), sigma: X -> {}X + {})",
            self.field.order(),
            self.sigma.alpha,
            self.sigma.beta
        )
    }
}

impl RationalBackend {
    /// σ: X -> γX for the primitive element γ.
    pub fn new(field: Gf) -> RationalBackend {
        let gamma = field.primitive_element();
        RationalBackend::with_sigma(
            field,
            AffineMap {
                alpha: gamma,
                beta: Elem::ZERO,
            },
        )
        .expect("scaling by a nonzero element is an automorphism")
    }

    pub fn with_sigma(field: Gf, sigma: AffineMap) -> Result<RationalBackend> {
        if sigma.alpha.is_zero() {
            return Err(FunctionFieldError::InvalidSigma(
                "alpha must be nonzero".into(),
            ));
        }
        let f = &field;
        let (order, fixed_generator) = if sigma.alpha != Elem::ONE {
            let n = f.multiplicative_order(sigma.alpha).unwrap();
            let one_minus = f.sub(Elem::ONE, sigma.alpha);
            let c = f.div(sigma.beta, one_minus)?;
            let g = Poly::new(vec![f.neg(c), Elem::ONE]).pow(f, n);
            (n, g)
        } else if !sigma.beta.is_zero() {
            let p = f.characteristic() as u64;
            let coef = f.neg(f.pow(sigma.beta, p - 1));
            let g = Poly::monomial(Elem::ONE, p as usize).add(f, &Poly::monomial(coef, 1));
            (p, g)
        } else {
            (1, Poly::x())
        };
        Ok(RationalBackend {
            field,
            sigma,
            order,
            fixed_generator,
        })
    }

    pub fn sigma(&self) -> AffineMap {
        self.sigma
    }

    pub fn fixed_generator(&self) -> &Poly {
        &self.fixed_generator
    }

    /// Evaluation at X = a.
    pub fn place(&self, a: Elem) -> Place {
        Place {
            x: a,
            y: Elem::ZERO,
        }
    }
}

impl FunctionFieldBackend for RationalBackend {
    fn name(&self) -> &'static str {
        "rational"
    }

    fn field(&self) -> &Gf {
        &self.field
    }

    fn genus(&self) -> u32 {
        0
    }

    fn divisor_degree(&self) -> u32 {
        1
    }

    fn sigma_order(&self) -> u64 {
        self.order
    }

    fn places(&self) -> Vec<Place> {
        self.field.elements().map(|a| self.place(a)).collect()
    }

    fn sigma_place(&self, p: &Place, power: i64) -> Place {
        let k = power.rem_euclid(self.order as i64);
        self.place(self.sigma.pow(&self.field, k).apply(&self.field, p.x))
    }

    fn sigma_fn(&self, f: &Function, power: i64) -> Function {
        let fd = &self.field;
        let k = (-power).rem_euclid(self.order as i64);
        let sub = self.sigma.pow(fd, k).as_poly();
        let map = |b: &BiPoly| {
            let p = b
                .to_univariate()
                .expect("rational functions involve X only");
            BiPoly::from_univariate(&p.compose(fd, &sub))
        };
        Function {
            num: map(&f.num),
            den: map(&f.den),
        }
    }

    fn rr_basis(&self, l: u32) -> Result<RRBasis> {
        let functions = (0..=l as usize)
            .map(|i| Function::poly(BiPoly::monomial(Elem::ONE, i, 0)))
            .collect();
        Ok(RRBasis {
            multiplicity: l,
            functions,
            pole_orders: (0..=l).collect(),
        })
    }

    fn chart(&self, p: &Place, len: usize) -> Result<(Series, Series)> {
        Ok((Series::new(vec![p.x, Elem::ONE], len), Series::zero(len)))
    }

    fn fixed_parameter(&self, p: &Place) -> Result<Function> {
        let fd = &self.field;
        let g = &self.fixed_generator;
        if g.derivative(fd).eval(fd, p.x).is_zero() {
            return Err(FunctionFieldError::BadParameter(format!(
                "{} - g({}) at a ramified point",
                g.display("X"),
                p.x
            )));
        }
        let t = g.sub(fd, &Poly::constant(g.eval(fd, p.x)));
        Ok(Function::univariate(&t))
    }

    /// Irreducible factors g - δ of X^q - αX - β, largest degree first, until
    /// their degrees sum past l.
    fn list_bound_witness(&self, l: u32) -> Option<ListBoundWitness> {
        let fd = &self.field;
        let q = fd.order() as usize;
        let target = Poly::monomial(Elem::ONE, q).sub(fd, &self.sigma.as_poly());
        let mut cands: Vec<ClosedPlace> = fd
            .elements()
            .map(|d| self.fixed_generator.sub(fd, &Poly::constant(d)))
            .filter(|r| r.is_irreducible(fd) && target.rem(fd, r).unwrap().is_zero())
            .map(|r| {
                let degree = r.degree().unwrap();
                ClosedPlace { poly: r, degree }
            })
            .collect();
        cands.sort_by_key(|c| std::cmp::Reverse(c.degree));
        let mut chosen = Vec::new();
        let mut total = 0;
        for c in cands {
            if total > l as usize {
                break;
            }
            total += c.degree;
            chosen.push(c);
        }
        (total > l as usize).then_some(ListBoundWitness {
            places: chosen,
            u: 1,
        })
    }
}
