mod common;

use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use foldecode::carlitz::CarlitzModule;
use foldecode::chebotarev::{chebotarev_check, irreducible_count};
use foldecode::codec::{column_distance, corrupt, FoldedCode, FoldedWord};
use foldecode::decoder::Decoder;
use foldecode::function_field::{expand_in_parameter, FunctionFieldBackend, HermitianBackend};
use foldecode::gf::{Elem, Embedding, Gf};
use foldecode::linalg::{AffineSolution, Matrix};
use foldecode::poly::Poly;
use foldecode::series::Series;

use common::{oracle_solution, rational_code, same_solution};

const ORDERS: [u64; 7] = [2, 3, 4, 5, 8, 9, 16];

fn field(i: usize) -> Gf {
    Gf::with_order(ORDERS[i % ORDERS.len()]).unwrap()
}

fn elems(f: &Gf, raw: &[u32]) -> Vec<Elem> {
    raw.iter()
        .map(|&v| f.elem(v % f.order()).unwrap())
        .collect()
}

fn poly(f: &Gf, raw: &[u32]) -> Poly {
    Poly::new(elems(f, raw))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_ops_agree_with_reference(i in 0usize..7, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = field(i);
        let v = elems(&f, &[a, b, c]);
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(f.mul(a, b), f.mul_reference(a, b));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !b.is_zero() {
            prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
        }
        prop_assert_eq!(f.pow(a, f.order() as u64), a);
        prop_assert_eq!(f.parse_hex(&f.to_hex(a)).unwrap(), a);
    }

    #[test]
    fn embedding_is_a_ring_map(a in 0u32..4, b in 0u32..4) {
        let sub = Gf::with_order(4).unwrap();
        let sup = Gf::with_order(16).unwrap();
        let e = Embedding::new(&sub, &sup).unwrap();
        let (a, b) = (sub.elem(a).unwrap(), sub.elem(b).unwrap());
        prop_assert_eq!(e.apply(sub.mul(a, b)), sup.mul(e.apply(a), e.apply(b)));
        prop_assert_eq!(e.apply(sub.add(a, b)), sup.add(e.apply(a), e.apply(b)));
    }

    #[test]
    fn polynomial_division(i in 0usize..7, a in prop::collection::vec(any::<u32>(), 0..9),
                           b in prop::collection::vec(any::<u32>(), 1..6)) {
        let f = field(i);
        let (a, b) = (poly(&f, &a), poly(&f, &b));
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&f, &b).unwrap();
        prop_assert_eq!(q.mul(&f, &b).add(&f, &r), a.clone());
        prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        let g = a.gcd(&f, &b);
        prop_assert!(a.rem(&f, &g).unwrap().is_zero());
        prop_assert!(b.rem(&f, &g).unwrap().is_zero());
    }

    #[test]
    fn rabin_matches_trial_division(i in 0usize..4, raw in prop::collection::vec(any::<u32>(), 2..6)) {
        let f = field(i);
        let mut p = poly(&f, &raw);
        prop_assume!(p.degree().is_some_and(|d| d >= 1));
        p = p.monic(&f);
        prop_assert_eq!(p.is_irreducible(&f), p.is_irreducible_naive(&f));
    }

    #[test]
    fn series_inverse_and_reversion(i in 0usize..7, raw in prop::collection::vec(any::<u32>(), 1..8), len in 1usize..10) {
        let f = field(i);
        let s = Series::new(elems(&f, &raw), len);
        if !s.coeff(0).is_zero() {
            let prod = s.mul(&f, &s.inv(&f).unwrap());
            prop_assert_eq!(prod, Series::constant(Elem::ONE, len));
        }
        let mut c = elems(&f, &raw);
        c[0] = Elem::ZERO;
        if c.len() > 1 && !c[1].is_zero() && len > 1 {
            let g = Series::new(c, len);
            let r = g.reversion(&f).unwrap();
            prop_assert_eq!(g.compose(&f, &r).unwrap(), Series::var(len));
            prop_assert_eq!(r.compose(&f, &g).unwrap(), Series::var(len));
        }
    }

    #[test]
    fn canonical_form_is_basis_independent(seed in any::<u64>(), t in 0u32..16) {
        let f = Gf::with_order(16).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows: Vec<Vec<Elem>> = (0..3).map(|_| (0..6).map(|_| random_elem(&f, &mut rng)).collect()).collect();
        let mat = Matrix::from_rows(rows);
        let x: Vec<Elem> = (0..6).map(|_| random_elem(&f, &mut rng)).collect();
        let b = mat.mul_vec(&f, &x);
        let sol = mat.solve_affine(&f, &b).unwrap();
        prop_assert!(sol.kernel.iter().all(|k| mat.mul_vec(&f, k).iter().all(|e| e.is_zero())));
        prop_assert_eq!(mat.mul_vec(&f, &sol.particular), b.clone());
        let t = f.elem(t).unwrap();
        let coeffs = vec![t; sol.dimension()];
        let shifted = AffineSolution { particular: sol.point(&f, &coeffs), kernel: sol.kernel.clone() };
        prop_assert!(shifted.same_space(&f, &sol));
    }
}

fn random_elem(f: &Gf, rng: &mut ChaCha8Rng) -> Elem {
    f.elem(rng.gen_range(0..f.order())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn carlitz_is_a_ring_homomorphism(i in 0usize..3, a in prop::collection::vec(any::<u32>(), 0..5),
                                      b in prop::collection::vec(any::<u32>(), 0..5)) {
        let f = Gf::with_order([2, 3, 4][i]).unwrap();
        let c = CarlitzModule::new(f.clone());
        let (a, b) = (poly(&f, &a), poly(&f, &b));
        prop_assert_eq!(c.phi(&a.mul(&f, &b)), c.phi(&a).mul(&f, &c.phi(&b)));
        prop_assert_eq!(c.phi(&a.add(&f, &b)), c.phi(&a).add(&f, &c.phi(&b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn encoding_is_linear(seed in any::<u64>()) {
        let (_, code) = rational_code(16, 4, 3, 2);
        let f = code.field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (code.random_message(&mut rng), code.random_message(&mut rng));
        let sum: Vec<Elem> = a.iter().zip(&b).map(|(&x, &y)| f.add(x, y)).collect();
        let (ca, cb, cs) = (code.encode(&a).unwrap(), code.encode(&b).unwrap(), code.encode(&sum).unwrap());
        let expect = FoldedWord {
            columns: ca.columns.iter().zip(&cb.columns)
                .map(|(x, y)| x.iter().zip(y).map(|(&u, &v)| f.add(u, v)).collect())
                .collect(),
        };
        prop_assert_eq!(cs, expect);
    }

    #[test]
    fn decoding_within_budget_recovers_message(seed in any::<u64>(), cfg in 0usize..4) {
        let (q, m, n, l, s) = [(16, 4, 3, 2, 2), (16, 4, 3, 2, 1), (16, 3, 5, 3, 2), (9, 4, 2, 1, 2)][cfg];
        let (_, code) = rational_code(q, m, n, l);
        let decoder = Decoder::new(code, s).unwrap();
        let code = decoder.code();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let msg = code.random_message(&mut rng);
        let cw = code.encode(&msg).unwrap();
        let budget = decoder.params().error_budget(code);
        let cols = foldecode::codec::random_positions(code.n(), budget, &mut rng);
        let rw = corrupt(code.field(), &cw, &cols, seed).unwrap();
        prop_assert!(column_distance(&rw, &cw).unwrap() <= budget);
        let res = decoder.decode(&rw).unwrap();
        prop_assert!(res.candidates.contains(&msg));
        prop_assert!(decoder.certify_candidate(&res.interpolation, &msg).unwrap());
        for c in &res.candidates {
            prop_assert!(column_distance(&rw, &code.encode(c).unwrap()).unwrap() <= budget);
        }
    }

    #[test]
    fn local_system_matches_oracle(seed in any::<u64>()) {
        let (backend, code) = rational_code(16, 4, 3, 2);
        let decoder = Decoder::new(code, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = FoldedWord {
            columns: (0..3).map(|_| (0..4).map(|_| random_elem(decoder.field(), &mut rng)).collect()).collect(),
        };
        let interp = decoder.interpolate(&w).unwrap();
        let sys = decoder.functional_equation_system(&interp);
        let local = sys.matrix.solve_affine(decoder.field(), &sys.rhs);
        prop_assert!(same_solution(decoder.field(), &local, &oracle_solution(&backend, &decoder, &interp)));
    }
}

#[test]
fn hermitian_conjugate_expansions() {
    let b = HermitianBackend::with_ell(2).unwrap();
    let basis = b.rr_basis(4).unwrap();
    let prec = 6;
    let mut compared = 0;
    for p in b.places() {
        let Ok(t) = b.fixed_parameter(&p) else {
            continue;
        };
        for z in &basis.functions {
            let lhs = expand_in_parameter(&b, z, &b.sigma_place(&p, 1), &t, prec).unwrap();
            let rhs = expand_in_parameter(&b, &b.sigma_fn(z, -1), &p, &t, prec).unwrap();
            assert_eq!(lhs.to_series(prec + 1), rhs.to_series(prec + 1));
            compared += 1;
        }
    }
    assert!(compared > 0);
}

#[test]
fn hermitian_decoding_round_trip() {
    let code = FoldedCode::new(Arc::new(HermitianBackend::with_ell(2).unwrap()), 3, 2, 2).unwrap();
    let decoder = Decoder::new(code, 1).unwrap();
    let code = decoder.code();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let msg = code.random_message(&mut rng);
        let res = decoder.decode(&code.encode(&msg).unwrap()).unwrap();
        assert!(res.candidates.contains(&msg));
    }
}

#[test]
fn chebotarev_sum_rule_over_several_moduli() {
    for (q, modulus) in [(2u64, "T^2+T+1"), (2, "T^3+T+1"), (3, "T^2+1")] {
        let f = Gf::with_order(q).unwrap();
        let qp = Poly::parse(&f, modulus).unwrap();
        let d = qp.degree().unwrap();
        for h in 1..=6 {
            let hist = chebotarev_check(&f, &qp, h, None).unwrap();
            assert!(hist.sum_rule_holds(), "q={q} Q={modulus} h={h}");
            let ramified = u64::from(h == d);
            assert_eq!(hist.total + ramified, irreducible_count(q, h as u64));
        }
    }
}
