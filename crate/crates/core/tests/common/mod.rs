//! Shared fixtures and the coefficient-equating oracle for rational codes.
#![allow(dead_code)]

use std::sync::Arc;

use foldecode::codec::FoldedCode;
use foldecode::decoder::{Decoder, InterpolationPolynomial};
use foldecode::function_field::{AffineMap, RationalBackend};
use foldecode::gf::{Elem, Gf};
use foldecode::linalg::{AffineSolution, Matrix};
use foldecode::poly::Poly;

pub fn rational(q: u64) -> RationalBackend {
    RationalBackend::new(Gf::with_order(q).unwrap())
}

pub fn rational_code(q: u64, m: usize, n: usize, l: u32) -> (RationalBackend, FoldedCode) {
    let b = rational(q);
    let code = FoldedCode::new(Arc::new(b.clone()), m, n, l).unwrap();
    (b, code)
}

/// Solution set of A_0(X) + sum_k A_k(X) f(σ^{k-1}(X)) = 0 with f of degree
/// at most l, by equating polynomial coefficients.
pub fn oracle_solution(
    backend: &RationalBackend,
    decoder: &Decoder,
    q: &InterpolationPolynomial,
) -> Option<AffineSolution> {
    let f = decoder.field().clone();
    let sigma = backend.sigma();
    let l = decoder.code().l() as usize;
    let a0 = Poly::new(q.a0.clone());
    let ak: Vec<Poly> = q.a.iter().map(|c| Poly::new(c.clone())).collect();
    let cols: Vec<Poly> = (0..=l)
        .map(|j| {
            ak.iter().enumerate().fold(Poly::zero(), |acc, (k, a)| {
                let map: AffineMap = sigma.pow(&f, k as i64);
                acc.add(&f, &a.mul(&f, &map.as_poly().pow(&f, j as u64)))
            })
        })
        .collect();
    let deg = cols
        .iter()
        .chain([&a0])
        .filter_map(Poly::degree)
        .max()
        .unwrap_or(0);
    let mut mat = Matrix::zeros(deg + 1, l + 1);
    for (j, c) in cols.iter().enumerate() {
        for r in 0..=deg {
            mat.set(r, j, c.coeff(r));
        }
    }
    let rhs: Vec<Elem> = (0..=deg).map(|r| f.neg(a0.coeff(r))).collect();
    mat.solve_affine(&f, &rhs)
}

pub fn same_solution(f: &Gf, a: &Option<AffineSolution>, b: &Option<AffineSolution>) -> bool {
    match (a, b) {
        (None, None) => true,
        (Some(x), Some(y)) => x.same_space(f, y),
        _ => false,
    }
}
