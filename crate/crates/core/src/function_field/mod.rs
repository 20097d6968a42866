//! Function fields over GF(q) with an automorphism σ, behind one backend
//! contract.
//!
//! A backend exposes its rational places (outside the support of the fixed
//! divisor D), the action of σ on places and functions, Riemann–Roch bases of
//! L(lD), and a local chart at each place. Evaluation and local expansions in
//! a σ-fixed parameter are derived from those pieces here.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::gf::{Elem, FieldError, Gf};
use crate::poly::Poly;
use crate::series::{Series, SeriesError};

mod hermitian;
mod rational;

pub use hermitian::HermitianBackend;
pub use rational::{AffineMap, RationalBackend};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FunctionFieldError {
    #[error("function has a pole at {0}")]
    PoleAtPlace(String),
    #[error("{0} is not a local parameter at the place")]
    BadParameter(String),
    #[error("unsupported divisor: {0}")]
    UnsupportedDivisor(String),
    #[error("point {0} is not on the curve")]
    NotOnCurve(String),
    #[error("invalid automorphism: {0}")]
    InvalidSigma(String),
    #[error("invalid backend: {0}")]
    InvalidBackend(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

type Result<T> = std::result::Result<T, FunctionFieldError>;

/// A rational place with affine coordinates. The rational backend leaves `y`
/// at zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Place {
    pub x: Elem,
    pub y: Elem,
}

impl Place {
    pub fn degree(&self) -> u32 {
        1
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A σ-orbit listed as P, P^σ, P^{σ^2}, ...
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub places: Vec<Place>,
}

impl Orbit {
    pub fn representative(&self) -> Place {
        self.places[0]
    }

    pub fn len(&self) -> usize {
        self.places.len()
    }

    pub fn is_empty(&self) -> bool {
        self.places.is_empty()
    }
}

/// Sparse polynomial in x, y: (i, j) -> coefficient of x^i y^j.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Elem>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn one() -> BiPoly {
        BiPoly::monomial(Elem::ONE, 0, 0)
    }

    pub fn monomial(c: Elem, i: usize, j: usize) -> BiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn from_univariate(p: &Poly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (i, &c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.terms.insert((i, 0), c);
            }
        }
        out
    }

    /// The x-part as a univariate polynomial; `None` if y occurs.
    pub fn to_univariate(&self) -> Option<Poly> {
        if self.terms.keys().any(|&(_, j)| j > 0) {
            return None;
        }
        let deg = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let mut v = vec![Elem::ZERO; deg + 1];
        for (&(i, _), &c) in &self.terms {
            v[i] = c;
        }
        Some(Poly::new(v))
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), Elem)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Elem {
        self.terms.get(&(i, j)).copied().unwrap_or(Elem::ZERO)
    }

    fn insert_add(&mut self, f: &Gf, k: (usize, usize), c: Elem) {
        let v = f.add(self.coeff(k.0, k.1), c);
        if v.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, v);
        }
    }

    pub fn add(&self, f: &Gf, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, &c) in &o.terms {
            out.insert_add(f, k, c);
        }
        out
    }

    pub fn sub(&self, f: &Gf, o: &BiPoly) -> BiPoly {
        self.add(f, &o.scale(f, f.neg(Elem::ONE)))
    }

    pub fn scale(&self, f: &Gf, c: Elem) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&k, &v) in &self.terms {
            out.insert_add(f, k, f.mul(v, c));
        }
        out
    }

    pub fn mul(&self, f: &Gf, o: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), &a) in &self.terms {
            for (&(i2, j2), &b) in &o.terms {
                out.insert_add(f, (i1 + i2, j1 + j2), f.mul(a, b));
            }
        }
        out
    }

    /// Multiplies the coefficient of x^i y^j by w(i, j).
    pub fn map_coeffs(&self, f: &Gf, w: impl Fn(usize, usize) -> Elem) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), &c) in &self.terms {
            out.insert_add(f, (i, j), f.mul(c, w(i, j)));
        }
        out
    }

    pub fn eval(&self, f: &Gf, x: Elem, y: Elem) -> Elem {
        self.terms.iter().fold(Elem::ZERO, |acc, (&(i, j), &c)| {
            f.add(acc, f.mul(c, f.mul(f.pow(x, i as u64), f.pow(y, j as u64))))
        })
    }

    /// Substitutes series for x and y.
    pub fn eval_series(&self, f: &Gf, xs: &Series, ys: &Series) -> Series {
        let n = xs.len().min(ys.len());
        let max_i = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let max_j = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        let mut xp = vec![Series::constant(Elem::ONE, n)];
        for i in 1..=max_i {
            let next = xp[i - 1].mul(f, xs);
            xp.push(next);
        }
        let mut yp = vec![Series::constant(Elem::ONE, n)];
        for j in 1..=max_j {
            let next = yp[j - 1].mul(f, ys);
            yp.push(next);
        }
        let mut acc = Series::zero(n);
        for (&(i, j), &c) in &self.terms {
            acc = acc.add(f, &xp[i].mul(f, &yp[j]).scale(f, c));
        }
        acc
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| format!("{c}*x^{i}*y^{j}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A function num/den in the coordinate ring's fraction field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Function {
    pub num: BiPoly,
    pub den: BiPoly,
}

impl Function {
    pub fn poly(num: BiPoly) -> Function {
        Function {
            num,
            den: BiPoly::one(),
        }
    }

    pub fn univariate(p: &Poly) -> Function {
        Function::poly(BiPoly::from_univariate(p))
    }

    pub fn zero() -> Function {
        Function::poly(BiPoly::zero())
    }

    pub fn constant(c: Elem) -> Function {
        Function::poly(BiPoly::monomial(c, 0, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, f: &Gf, o: &Function) -> Function {
        if self.den == o.den {
            return Function {
                num: self.num.add(f, &o.num),
                den: self.den.clone(),
            };
        }
        Function {
            num: self.num.mul(f, &o.den).add(f, &o.num.mul(f, &self.den)),
            den: self.den.mul(f, &o.den),
        }
    }

    pub fn mul(&self, f: &Gf, o: &Function) -> Function {
        Function {
            num: self.num.mul(f, &o.num),
            den: self.den.mul(f, &o.den),
        }
    }

    pub fn scale(&self, f: &Gf, c: Elem) -> Function {
        Function {
            num: self.num.scale(f, c),
            den: self.den.clone(),
        }
    }
}

/// Truncated Laurent expansion f = sum_{r >= v} a_r t^r at a rational place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalExpansion {
    pub place: Place,
    pub parameter: Function,
    pub valuation: i64,
    /// a_v, ..., a_{v + precision}.
    pub coeffs: Vec<Elem>,
    pub precision: usize,
}

impl LocalExpansion {
    /// a_r, zero below the valuation; `None` past the precision.
    pub fn coeff(&self, r: i64) -> Option<Elem> {
        if r < self.valuation {
            return Some(Elem::ZERO);
        }
        self.coeffs.get((r - self.valuation) as usize).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Orders 0 .. len-1 as a power series; the valuation must be >= 0 and the
    /// precision must reach len - 1.
    pub fn to_series(&self, len: usize) -> Option<Series> {
        if self.valuation < 0 && !self.is_zero() {
            return None;
        }
        let v: Option<Vec<Elem>> = (0..len as i64).map(|r| self.coeff(r)).collect();
        Some(Series::new(v?, len))
    }
}

#[derive(Clone, Debug)]
pub struct RRBasis {
    pub multiplicity: u32,
    pub functions: Vec<Function>,
    /// Pole orders at the divisor place, parallel to `functions`.
    pub pole_orders: Vec<u32>,
}

impl RRBasis {
    pub fn dimension(&self) -> usize {
        self.functions.len()
    }

    pub fn combine(&self, f: &Gf, coeffs: &[Elem]) -> Function {
        assert_eq!(coeffs.len(), self.functions.len());
        let den = self
            .functions
            .first()
            .map(|z| z.den.clone())
            .unwrap_or_else(BiPoly::one);
        let num = self
            .functions
            .iter()
            .zip(coeffs)
            .fold(BiPoly::zero(), |acc, (z, &c)| {
                acc.add(f, &z.num.scale(f, c))
            });
        Function { num, den }
    }
}

/// A place of degree > 1 given by an irreducible polynomial in X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedPlace {
    pub poly: Poly,
    pub degree: usize,
}

/// Places R with f^{σ^{-1}} = f^{q^u} mod R and total degree > le.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListBoundWitness {
    pub places: Vec<ClosedPlace>,
    pub u: u32,
}

impl ListBoundWitness {
    pub fn total_degree(&self) -> usize {
        self.places.iter().map(|p| p.degree).sum()
    }
}

pub trait FunctionFieldBackend: Send + Sync + fmt::Debug {
    fn name(&self) -> &'static str;
    fn field(&self) -> &Gf;
    fn genus(&self) -> u32;
    /// deg D.
    fn divisor_degree(&self) -> u32;
    /// Order of σ.
    fn sigma_order(&self) -> u64;
    /// All rational places outside supp(D), in canonical order.
    fn places(&self) -> Vec<Place>;
    fn sigma_place(&self, p: &Place, power: i64) -> Place;
    /// f^{σ^power}, characterized by f^{σ^k}(P) = f(P^{σ^{-k}}).
    fn sigma_fn(&self, f: &Function, power: i64) -> Function;
    fn rr_basis(&self, l: u32) -> Result<RRBasis>;
    /// Coordinate series (x(u), y(u)) in a uniformizer u at p.
    fn chart(&self, p: &Place, len: usize) -> Result<(Series, Series)>;
    /// A σ-fixed function vanishing to order one at p.
    fn fixed_parameter(&self, p: &Place) -> Result<Function>;
    fn list_bound_witness(&self, l: u32) -> Option<ListBoundWitness>;

    /// σ-orbits, longest first, ties broken by smallest member.
    fn orbits(&self) -> Vec<Orbit> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for p in self.places() {
            if seen.contains(&p) {
                continue;
            }
            let mut places = vec![p];
            let mut cur = self.sigma_place(&p, 1);
            while cur != p {
                places.push(cur);
                cur = self.sigma_place(&cur, 1);
            }
            seen.extend(places.iter().copied());
            out.push(Orbit { places });
        }
        out.sort_by(|a, b| {
            b.len()
                .cmp(&a.len())
                .then_with(|| a.places.iter().min().cmp(&b.places.iter().min()))
        });
        out
    }

    /// (representative, orbit length) pairs.
    fn rational_places(&self) -> Vec<(Place, usize)> {
        self.orbits()
            .iter()
            .map(|o| (o.representative(), o.len()))
            .collect()
    }

    fn evaluate(&self, f: &Function, p: &Place) -> Result<Elem> {
        let fd = self.field();
        let den = f.den.eval(fd, p.x, p.y);
        if !den.is_zero() {
            return Ok(fd.div(f.num.eval(fd, p.x, p.y), den)?);
        }
        let (v, h) = laurent_in_chart(self, f, p, 1)?;
        match v {
            v if v < 0 => Err(FunctionFieldError::PoleAtPlace(p.to_string())),
            0 => Ok(h.coeff(0)),
            _ => Ok(Elem::ZERO),
        }
    }

    /// Valuation of f at p (`None` for the zero function).
    fn valuation(&self, f: &Function, p: &Place) -> Result<Option<i64>> {
        if f.is_zero() {
            return Ok(None);
        }
        Ok(Some(laurent_in_chart(self, f, p, 1)?.0))
    }

    /// Expansion of f at p in the backend's σ-fixed parameter.
    fn local_expand(&self, f: &Function, p: &Place, prec: usize) -> Result<LocalExpansion> {
        let t = self.fixed_parameter(p)?;
        expand_in_parameter(self, f, p, &t, prec)
    }
}

/// f = u^v h(u) with h(0) != 0 in the chart at p; h has `len` coefficients.
/// The zero function gives v = 0 and h = 0.
pub fn laurent_in_chart<B: FunctionFieldBackend + ?Sized>(
    b: &B,
    f: &Function,
    p: &Place,
    len: usize,
) -> Result<(i64, Series)> {
    let fd = b.field();
    if f.num.is_zero() {
        return Ok((0, Series::zero(len)));
    }
    let (vn, hn) = poly_in_chart(b, &f.num, p, len)?;
    let (vd, hd) = poly_in_chart(b, &f.den, p, len)?;
    let h = hn.mul(fd, &hd.inv(fd)?);
    Ok((vn as i64 - vd as i64, h))
}

fn poly_in_chart<B: FunctionFieldBackend + ?Sized>(
    b: &B,
    g: &BiPoly,
    p: &Place,
    len: usize,
) -> Result<(usize, Series)> {
    let fd = b.field();
    let mut n = len + 2;
    loop {
        let (xs, ys) = b.chart(p, n)?;
        let s = g.eval_series(fd, &xs, &ys);
        if let Some(v) = s.valuation() {
            if v + len <= n {
                return Ok((v, s.shift_down(v).truncate(len)));
            }
            n = v + len;
            continue;
        }
        if n > 1 << 14 {
            return Err(FunctionFieldError::InvalidBackend(
                "function vanishes identically on the curve".into(),
            ));
        }
        n *= 2;
    }
}

/// Expansion of f at p in a given parameter t (ν_p(t) must be 1).
pub fn expand_in_parameter<B: FunctionFieldBackend + ?Sized>(
    b: &B,
    f: &Function,
    p: &Place,
    t: &Function,
    prec: usize,
) -> Result<LocalExpansion> {
    let fd = b.field();
    let n = prec + 1;
    let (vt, ht) = laurent_in_chart(b, t, p, n)?;
    if vt != 1 || t.is_zero() {
        return Err(FunctionFieldError::BadParameter(format!("{:?}", t.num)));
    }
    let t_of_u = Series::new(
        std::iter::once(Elem::ZERO)
            .chain(ht.coeffs().iter().copied())
            .collect(),
        n + 1,
    );
    let u_of_t = t_of_u.reversion(fd)?;
    let w = u_of_t.shift_down(1).truncate(n);
    if f.is_zero() {
        return Ok(LocalExpansion {
            place: *p,
            parameter: t.clone(),
            valuation: 0,
            coeffs: vec![Elem::ZERO; n],
            precision: prec,
        });
    }
    let (v, h) = laurent_in_chart(b, f, p, n)?;
    let h_t = h.compose(fd, &u_of_t.truncate(n))?;
    let wv = if v >= 0 {
        w.pow(fd, v as u64)
    } else {
        w.inv(fd)?.pow(fd, v.unsigned_abs())
    };
    let coeffs = wv.mul(fd, &h_t).coeffs().to_vec();
    Ok(LocalExpansion {
        place: *p,
        parameter: t.clone(),
        valuation: v,
        coeffs,
        precision: prec,
    })
}
