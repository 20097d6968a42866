//! Linear-algebraic list decoding of folded codes.
//!
//! Stage one finds a nonzero Q(Y_1..Y_s) = A_0 + A_1 Y_1 + ... + A_s Y_s with
//! A_0 in L((κ+l)D), A_i in L(κD), vanishing on every window
//! (y_{i,j}, ..., y_{i,j+s-1}). Stage two solves
//! A_0 + A_1 f + A_2 f^{σ^{-1}} + ... + A_s f^{σ^{-(s-1)}} = 0 for f in L(lD)
//! by equating local expansion coefficients at an anchor place, which is
//! exact because the left side lies in L((κ+l)D).

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::codec::{column_distance, index_to_message, CodecError, FoldedCode, FoldedWord};
use crate::function_field::{
    expand_in_parameter, Function, FunctionFieldError, ListBoundWitness, Place, RRBasis,
};
use crate::gf::{Elem, Gf};
use crate::linalg::{AffineSolution, Matrix};
use crate::series::Series;

pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecodeError {
    #[error("s = {s} must satisfy 1 <= s <= m = {m}")]
    InvalidS { s: usize, m: usize },
    #[error("κ numerator {numerator} is negative")]
    NegativeKappa { numerator: i64 },
    #[error("interpolation system has only the zero solution")]
    NoSolution,
    #[error("expansion precision {have} is below the required {need}")]
    PrecisionTooLow { have: usize, need: usize },
    #[error("solution space of dimension {dim} exceeds the list bound exponent {bound}")]
    ListBoundViolated { dim: usize, bound: usize },
    #[error("solution space has {size} elements, above the enumeration cap {cap}")]
    EnumerationOverflow { size: u128, cap: u128 },
    #[error("received word has the wrong shape")]
    ShapeMismatch,
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error(transparent)]
    FunctionField(#[from] FunctionFieldError),
}

impl DecodeError {
    /// Errors that indicate a bug rather than bad input.
    pub fn is_tripwire(&self) -> bool {
        matches!(
            self,
            DecodeError::NoSolution | DecodeError::ListBoundViolated { .. }
        )
    }
}

/// floor((N(m-s+1) - le + (s+1)(g-1) + 1) / (e(s+1))).
pub fn compute_kappa(n: u64, m: u64, s: u64, e: u64, l: u64, g: u64) -> Result<i64, DecodeError> {
    let numerator =
        n as i64 * (m as i64 - s as i64 + 1) - (l * e) as i64 + (s as i64 + 1) * (g as i64 - 1) + 1;
    if numerator < 0 {
        return Err(DecodeError::NegativeKappa { numerator });
    }
    Ok(numerator / (e as i64 * (s as i64 + 1)))
}

/// 1 + floor((κ+l)e / (m-s+1)).
pub fn threshold(kappa: u32, l: u32, e: u32, m: usize, s: usize) -> usize {
    1 + ((kappa + l) as usize * e as usize) / (m - s + 1)
}

#[derive(Clone, Debug)]
pub struct DecoderParams {
    pub s: usize,
    /// The closed-form value.
    pub kappa_formula: i64,
    /// Smallest κ >= kappa_formula whose interpolation system has more
    /// unknowns than constraints.
    pub kappa: u32,
    pub threshold_t: usize,
    pub witness: Option<ListBoundWitness>,
    /// u(s-1)|T|, when a witness is known.
    pub list_bound_exponent: Option<usize>,
    pub enumeration_cap: u128,
}

impl DecoderParams {
    pub fn new(code: &FoldedCode, s: usize) -> Result<DecoderParams, DecodeError> {
        let m = code.m();
        if s == 0 || s > m {
            return Err(DecodeError::InvalidS { s, m });
        }
        let (n, e, l, g) = (
            code.n() as u64,
            code.e() as u64,
            code.l() as u64,
            code.genus() as u64,
        );
        let kappa_formula = compute_kappa(n, m as u64, s as u64, e, l, g)?;
        let constraints = code.n() * (m - s + 1);
        let backend = code.backend();
        let mut kappa = kappa_formula as u32;
        loop {
            let unknowns = s * backend.rr_basis(kappa)?.dimension()
                + backend.rr_basis(kappa + code.l())?.dimension();
            if unknowns > constraints {
                break;
            }
            kappa += 1;
        }
        let threshold_t = threshold(kappa, code.l(), code.e(), m, s);
        let witness = backend.list_bound_witness(code.l() * code.e());
        let list_bound_exponent = witness
            .as_ref()
            .map(|w| w.u as usize * (s - 1) * w.places.len());
        Ok(DecoderParams {
            s,
            kappa_formula,
            kappa,
            threshold_t,
            witness,
            list_bound_exponent,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        })
    }

    pub fn with_cap(mut self, cap: u128) -> DecoderParams {
        self.enumeration_cap = cap;
        self
    }

    /// N - t, the number of column errors always corrected.
    pub fn error_budget(&self, code: &FoldedCode) -> usize {
        code.n().saturating_sub(self.threshold_t)
    }
}

/// Decoding radius figures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radius {
    /// 1 - t/N.
    pub tau: Ratio<i64>,
    pub budget: usize,
    /// s/(s+1) - s/(s+1) * m/(m-s+1) * (k+g)/(mN).
    pub tau_approx: Ratio<i64>,
}

pub fn radius(code: &FoldedCode, params: &DecoderParams) -> Radius {
    let (n, m, s) = (code.n() as i64, code.m() as i64, params.s as i64);
    let tau = Ratio::from_integer(1) - Ratio::new(params.threshold_t as i64, n);
    let frac = Ratio::new(s, s + 1);
    let kg = code.dimension() as i64 + code.genus() as i64;
    let tau_approx = frac - frac * Ratio::new(m, m - s + 1) * Ratio::new(kg, m * n);
    Radius {
        tau,
        budget: params.error_budget(code),
        tau_approx,
    }
}

/// s/(s+1) (1 - m/(m-s+1) (R + 2/(√ℓ-1))), exact when ℓ is a perfect square
/// larger than one.
pub fn radius_formula(s: u64, m: u64, rate: Ratio<i64>, ell: u64) -> Option<Ratio<i64>> {
    let r = integer_sqrt(ell);
    if r * r != ell || r < 2 || s > m {
        return None;
    }
    let (s, m) = (s as i64, m as i64);
    let inner = rate + Ratio::new(2, r as i64 - 1);
    Some(Ratio::new(s, s + 1) * (Ratio::from_integer(1) - Ratio::new(m, m - s + 1) * inner))
}

pub fn integer_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// A_0 over the basis of L((κ+l)D), A_1..A_s over the basis of L(κD).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationPolynomial {
    pub a0: Vec<Elem>,
    pub a: Vec<Vec<Elem>>,
}

impl InterpolationPolynomial {
    pub fn is_zero(&self) -> bool {
        self.a0
            .iter()
            .chain(self.a.iter().flatten())
            .all(|c| c.is_zero())
    }
}

/// Rows c_0 .. c_{(κ+l)e} of M f = rhs.
#[derive(Clone, Debug)]
pub struct FunctionalSystem {
    pub matrix: Matrix,
    pub rhs: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub struct DecodeResult {
    pub interpolation: InterpolationPolynomial,
    /// `None` when the functional equation has no solution in L(lD).
    pub space: Option<AffineSolution>,
    /// Messages within the error budget of the received word.
    pub candidates: Vec<Vec<Elem>>,
}

impl DecodeResult {
    pub fn affine_dim(&self) -> Option<usize> {
        self.space.as_ref().map(AffineSolution::dimension)
    }
}

/// A code together with decoder parameters and precomputed evaluations and
/// expansions.
#[derive(Clone)]
pub struct Decoder {
    code: FoldedCode,
    params: DecoderParams,
    small: RRBasis,
    big: RRBasis,
    parameter: Function,
    /// small_evals[i][j][b] = z_b(P_i^{σ^j}) for z_b in L(κD); same for big.
    small_evals: Vec<Vec<Vec<Elem>>>,
    big_evals: Vec<Vec<Vec<Elem>>>,
    small_exp: Vec<Series>,
    big_exp: Vec<Series>,
    /// msg_exp[k][b] = expansion of z_b in L(lD) at P^{σ^k}, i.e. of
    /// z_b^{σ^{-k}} at P.
    msg_exp: Vec<Vec<Series>>,
}

impl fmt::Debug for Decoder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Decoder")
            .field("code", &self.code)
            .field("params", &self.params)
            .finish()
    }
}

impl Decoder {
    pub fn new(code: FoldedCode, s: usize) -> Result<Decoder, DecodeError> {
        let params = DecoderParams::new(&code, s)?;
        Decoder::with_params(code, params)
    }

    pub fn with_params(code: FoldedCode, params: DecoderParams) -> Result<Decoder, DecodeError> {
        let backend = code.backend().clone();
        let small = backend.rr_basis(params.kappa)?;
        let big = backend.rr_basis(params.kappa + code.l())?;
        let evals = |basis: &RRBasis| -> Result<Vec<Vec<Vec<Elem>>>, FunctionFieldError> {
            code.windows()
                .iter()
                .map(|w| {
                    w.iter()
                        .map(|p| {
                            basis
                                .functions
                                .iter()
                                .map(|z| backend.evaluate(z, p))
                                .collect()
                        })
                        .collect()
                })
                .collect()
        };
        let small_evals = evals(&small)?;
        let big_evals = evals(&big)?;
        let anchor = code.anchor();
        let parameter = backend.fixed_parameter(&anchor)?;
        let prec = Decoder::precision_for(&code, &params);
        let expand = |z: &Function, p: &Place| -> Result<Series, DecodeError> {
            let e = expand_in_parameter(backend.as_ref(), z, p, &parameter, prec)?;
            e.to_series(prec + 1).ok_or(DecodeError::PrecisionTooLow {
                have: e.precision,
                need: prec,
            })
        };
        let small_exp = small
            .functions
            .iter()
            .map(|z| expand(z, &anchor))
            .collect::<Result<Vec<_>, _>>()?;
        let big_exp = big
            .functions
            .iter()
            .map(|z| expand(z, &anchor))
            .collect::<Result<Vec<_>, _>>()?;
        let msg_exp = (0..params.s)
            .map(|k| {
                let pk = backend.sigma_place(&anchor, k as i64);
                code.basis()
                    .functions
                    .iter()
                    .map(|z| expand(z, &pk))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Decoder {
            code,
            params,
            small,
            big,
            parameter,
            small_evals,
            big_evals,
            small_exp,
            big_exp,
            msg_exp,
        })
    }

    /// (κ+l)e: the largest coefficient index used.
    fn precision_for(code: &FoldedCode, params: &DecoderParams) -> usize {
        (params.kappa + code.l()) as usize * code.e() as usize
    }

    pub fn precision(&self) -> usize {
        Decoder::precision_for(&self.code, &self.params)
    }

    pub fn code(&self) -> &FoldedCode {
        &self.code
    }

    pub fn params(&self) -> &DecoderParams {
        &self.params
    }

    pub fn field(&self) -> &Gf {
        self.code.field()
    }

    /// Basis of L(κD).
    pub fn small_basis(&self) -> &RRBasis {
        &self.small
    }

    /// Basis of L((κ+l)D).
    pub fn big_basis(&self) -> &RRBasis {
        &self.big
    }

    /// The σ-fixed local parameter at the anchor place.
    pub fn parameter(&self) -> &Function {
        &self.parameter
    }

    fn check_shape(&self, w: &FoldedWord) -> Result<(), DecodeError> {
        if w.n() != self.code.n() || w.columns.iter().any(|c| c.len() != self.code.m()) {
            return Err(DecodeError::ShapeMismatch);
        }
        Ok(())
    }

    /// One row per (i, j), i < N, j <= m - s; columns are A_0's coefficients
    /// followed by those of A_1, ..., A_s.
    pub fn interpolation_matrix(&self, received: &FoldedWord) -> Result<Matrix, DecodeError> {
        self.check_shape(received)?;
        let f = self.field();
        let (m, s) = (self.code.m(), self.params.s);
        let (nb, ns) = (self.big.dimension(), self.small.dimension());
        let mut rows = Vec::with_capacity(self.code.n() * (m - s + 1));
        for (i, col) in received.columns.iter().enumerate() {
            for j in 0..=m - s {
                let mut row = Vec::with_capacity(nb + s * ns);
                row.extend_from_slice(&self.big_evals[i][j]);
                for k in 1..=s {
                    let y = col[j + k - 1];
                    row.extend(self.small_evals[i][j].iter().map(|&z| f.mul(z, y)));
                }
                rows.push(row);
            }
        }
        Ok(Matrix::from_rows(rows))
    }

    pub fn interpolate(
        &self,
        received: &FoldedWord,
    ) -> Result<InterpolationPolynomial, DecodeError> {
        let mat = self.interpolation_matrix(received)?;
        let v = mat
            .nullspace(self.field())
            .into_iter()
            .next()
            .ok_or(DecodeError::NoSolution)?;
        let nb = self.big.dimension();
        let ns = self.small.dimension();
        let a = (0..self.params.s)
            .map(|k| v[nb + k * ns..nb + (k + 1) * ns].to_vec())
            .collect();
        Ok(InterpolationPolynomial {
            a0: v[..nb].to_vec(),
            a,
        })
    }

    fn combine_series(&self, exps: &[Series], coeffs: &[Elem]) -> Series {
        let f = self.field();
        let n = self.precision() + 1;
        exps.iter()
            .zip(coeffs)
            .fold(Series::zero(n), |acc, (e, &c)| acc.add(f, &e.scale(f, c)))
    }

    /// Expansion coefficients c_0..c_{(κ+l)e} of A_0 + sum_k A_k f^{σ^{-(k-1)}},
    /// as a linear system in the message coefficients of f.
    pub fn functional_equation_system(&self, q: &InterpolationPolynomial) -> FunctionalSystem {
        let f = self.field();
        let n = self.precision() + 1;
        let k = self.code.dimension();
        let a0 = self.combine_series(&self.big_exp, &q.a0);
        let ak: Vec<Series> =
            q.a.iter()
                .map(|c| self.combine_series(&self.small_exp, c))
                .collect();
        let mut matrix = Matrix::zeros(n, k);
        for b in 0..k {
            let mut col = Series::zero(n);
            for (kk, a) in ak.iter().enumerate() {
                col = col.add(f, &a.mul(f, &self.msg_exp[kk][b]));
            }
            for h in 0..n {
                matrix.set(h, b, col.coeff(h));
            }
        }
        let rhs = (0..n).map(|h| f.neg(a0.coeff(h))).collect();
        FunctionalSystem { matrix, rhs }
    }

    pub fn solve(&self, system: &FunctionalSystem) -> Result<Option<AffineSolution>, DecodeError> {
        let sol = system.matrix.solve_affine(self.field(), &system.rhs);
        if let (Some(sol), Some(bound)) = (&sol, self.params.list_bound_exponent) {
            if sol.dimension() > bound {
                return Err(DecodeError::ListBoundViolated {
                    dim: sol.dimension(),
                    bound,
                });
            }
        }
        Ok(sol)
    }

    /// Re-encodes every point of the solution space and keeps those within
    /// the error budget.
    pub fn enumerate(
        &self,
        space: &AffineSolution,
        received: &FoldedWord,
    ) -> Result<Vec<Vec<Elem>>, DecodeError> {
        let q = self.field().order();
        let size = space.size(q);
        if size > self.params.enumeration_cap {
            return Err(DecodeError::EnumerationOverflow {
                size,
                cap: self.params.enumeration_cap,
            });
        }
        let budget = self.params.error_budget(&self.code);
        let dim = space.dimension();
        let mut out = Vec::new();
        for idx in 0..size as u64 {
            let coeffs = index_to_message(idx, q as u64, dim);
            let msg = space.point(self.field(), &coeffs);
            let cw = self.code.encode(&msg)?;
            if column_distance(received, &cw)? <= budget {
                out.push(msg);
            }
        }
        Ok(out)
    }

    pub fn decode(&self, received: &FoldedWord) -> Result<DecodeResult, DecodeError> {
        let interpolation = self.interpolate(received)?;
        let system = self.functional_equation_system(&interpolation);
        let space = self.solve(&system)?;
        let candidates = match &space {
            Some(sp) => self.enumerate(sp, received)?,
            None => Vec::new(),
        };
        Ok(DecodeResult {
            interpolation,
            space,
            candidates,
        })
    }

    /// Checks A_0 + sum_k A_k h^{σ^{-(k-1)}} = 0 by expanding the conjugates of h
    /// directly (no reuse of the precomputed expansions).
    pub fn certify_candidate(
        &self,
        q: &InterpolationPolynomial,
        message: &[Elem],
    ) -> Result<bool, DecodeError> {
        let f = self.field();
        let backend = self.code.backend();
        let anchor = self.code.anchor();
        let prec = self.precision();
        let h = self.code.message_function(message)?;
        let mut total = self.combine_series(&self.big_exp, &q.a0);
        for (k, coeffs) in q.a.iter().enumerate() {
            let a = self.combine_series(&self.small_exp, coeffs);
            let hk = backend.sigma_fn(&h, -(k as i64));
            let e = expand_in_parameter(backend.as_ref(), &hk, &anchor, &self.parameter, prec)?;
            let hs = e.to_series(prec + 1).ok_or(DecodeError::PrecisionTooLow {
                have: prec,
                need: prec,
            })?;
            total = total.add(f, &a.mul(f, &hs));
        }
        Ok(total.valuation().is_none())
    }

    /// Checks Q(y_{i,j}, ..., y_{i,j+s-1}) = 0 on every constraint tuple.
    pub fn check_interpolation(
        &self,
        q: &InterpolationPolynomial,
        received: &FoldedWord,
    ) -> Result<bool, DecodeError> {
        let mat = self.interpolation_matrix(received)?;
        let mut v = q.a0.clone();
        for a in &q.a {
            v.extend_from_slice(a);
        }
        Ok(mat.mul_vec(self.field(), &v).iter().all(|e| e.is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::corrupt;
    use crate::function_field::{FunctionFieldBackend, HermitianBackend, RationalBackend};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn rs_code(p: u32, k: u32, m: usize, n: usize, l: u32) -> FoldedCode {
        let b: Arc<dyn FunctionFieldBackend> =
            Arc::new(RationalBackend::new(Gf::new(p, k, None).unwrap()));
        FoldedCode::new(b, m, n, l).unwrap()
    }

    #[test]
    fn kappa_values() {
        assert_eq!(compute_kappa(3, 4, 2, 1, 2, 0).unwrap(), 1);
        assert_eq!(compute_kappa(1, 1, 1, 1, 0, 0).unwrap(), 0);
        assert!(matches!(
            compute_kappa(1, 1, 1, 1, 5, 0),
            Err(DecodeError::NegativeKappa { .. })
        ));
    }

    #[test]
    fn threshold_and_budget_for_q16() {
        let code = rs_code(2, 4, 4, 3, 2);
        let p = DecoderParams::new(&code, 2).unwrap();
        assert_eq!(p.kappa_formula, 1);
        assert_eq!(p.kappa, 2);
        assert_eq!(p.threshold_t, 2);
        assert_eq!(p.error_budget(&code), 1);
        assert_eq!(p.list_bound_exponent, Some(1));
        assert_eq!(threshold(1, 2, 1, 4, 2), 2);
        let r = radius(&code, &p);
        assert_eq!(r.tau, Ratio::new(1, 3));
        assert_eq!(r.budget, 1);
    }

    #[test]
    fn radius_approximation_is_capped() {
        let code = rs_code(2, 4, 4, 3, 0);
        for s in 1..=3 {
            let p = DecoderParams::new(&code, s).unwrap();
            assert!(radius(&code, &p).tau_approx <= Ratio::new(s as i64, s as i64 + 1));
        }
        assert!(matches!(
            DecoderParams::new(&code, 4),
            Err(DecodeError::NegativeKappa { numerator: -1 })
        ));
    }

    #[test]
    fn decode_clean_and_single_error() {
        let code = rs_code(2, 4, 4, 3, 2);
        let dec = Decoder::new(code.clone(), 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for trial in 0..20 {
            let msg = code.random_message(&mut rng);
            let cw = code.encode(&msg).unwrap();
            let out = dec.decode(&cw).unwrap();
            assert!(out.candidates.contains(&msg));
            let rw = corrupt(code.field(), &cw, &[trial % 3], trial as u64).unwrap();
            let out = dec.decode(&rw).unwrap();
            assert!(dec.check_interpolation(&out.interpolation, &rw).unwrap());
            assert!(out.candidates.contains(&msg), "trial {trial}");
            for c in &out.candidates {
                assert!(dec.certify_candidate(&out.interpolation, c).unwrap());
            }
            assert!(out.space.unwrap().size(16) <= 16);
        }
    }

    #[test]
    fn zero_word_interpolates_with_zero_a0() {
        let code = rs_code(2, 4, 4, 3, 2);
        let dec = Decoder::new(code, 2).unwrap();
        let q = dec.interpolate(&FoldedWord::zeros(3, 4)).unwrap();
        assert!(q.a0.iter().all(|c| c.is_zero()));
        assert!(!q.is_zero());
        assert_eq!(
            dec.interpolation_matrix(&FoldedWord::zeros(3, 4))
                .unwrap()
                .rows(),
            9
        );
    }

    #[test]
    fn s_equal_one_is_unique_decoding() {
        let code = rs_code(2, 4, 3, 5, 4);
        let dec = Decoder::new(code.clone(), 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let msg = code.random_message(&mut rng);
        let cw = code.encode(&msg).unwrap();
        let out = dec.decode(&cw).unwrap();
        assert_eq!(out.affine_dim(), Some(0));
        assert_eq!(out.candidates, vec![msg]);
    }

    #[test]
    fn constant_term_matches_evaluation() {
        let code = rs_code(2, 4, 4, 3, 2);
        let dec = Decoder::new(code.clone(), 2).unwrap();
        let f = code.field().clone();
        let backend = code.backend().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let msg = code.random_message(&mut rng);
        let rw = corrupt(&f, &code.encode(&msg).unwrap(), &[1], 2).unwrap();
        let q = dec.interpolate(&rw).unwrap();
        let sys = dec.functional_equation_system(&q);
        let anchor = code.anchor();
        let a0 = dec.big_basis().combine(&f, &q.a0);
        let mut expect = backend.evaluate(&a0, &anchor).unwrap();
        let h = code.message_function(&msg).unwrap();
        for (k, c) in q.a.iter().enumerate() {
            let ak = dec.small_basis().combine(&f, c);
            let hv = backend
                .evaluate(&h, &backend.sigma_place(&anchor, k as i64))
                .unwrap();
            expect = f.add(expect, f.mul(backend.evaluate(&ak, &anchor).unwrap(), hv));
        }
        let lhs = sys.matrix.mul_vec(&f, &msg)[0];
        assert_eq!(f.sub(lhs, sys.rhs[0]), expect);
    }

    #[test]
    fn hermitian_decoding_round_trip() {
        let h: Arc<dyn FunctionFieldBackend> = Arc::new(HermitianBackend::with_ell(4).unwrap());
        let code = FoldedCode::new(h, 5, 6, 8).unwrap();
        let dec = Decoder::new(code.clone(), 2).unwrap();
        let budget = dec.params().error_budget(&code);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for trial in 0..5u64 {
            let msg = code.random_message(&mut rng);
            let cw = code.encode(&msg).unwrap();
            let errs: Vec<usize> = (0..budget).collect();
            let rw = corrupt(code.field(), &cw, &errs, trial).unwrap();
            let out = dec.decode(&rw).unwrap();
            assert!(out.candidates.contains(&msg));
        }
    }
}
