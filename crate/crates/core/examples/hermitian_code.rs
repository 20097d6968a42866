//! A folded code on the Hermitian curve y^4 + y = x^5 over GF(16).

use std::sync::Arc;

use foldecode::codec::{corrupt, FoldedCode};
use foldecode::decoder::Decoder;
use foldecode::function_field::HermitianBackend;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let backend = HermitianBackend::with_ell(4).unwrap();
    let code = FoldedCode::new(Arc::new(backend), 3, 12, 9).unwrap();
    println!(
        "genus {}, k = {}, N = {}, m = {}",
        code.genus(),
        code.dimension(),
        code.n(),
        code.m()
    );
    let decoder = Decoder::new(code, 2).unwrap();
    let budget = decoder.params().error_budget(decoder.code());
    println!(
        "kappa = {}, t = {}, budget = {budget}",
        decoder.params().kappa,
        decoder.params().threshold_t
    );
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let msg = decoder.code().random_message(&mut rng);
    let cw = decoder.code().encode(&msg).unwrap();
    let errs: Vec<usize> = (0..budget).collect();
    let rw = corrupt(decoder.code().field(), &cw, &errs, 5).unwrap();
    let res = decoder.decode(&rw).unwrap();
    println!(
        "{} candidates, transmitted found: {}",
        res.candidates.len(),
        res.candidates.contains(&msg)
    );
}
