//! Corrupts one column of a folded Reed–Solomon codeword and list decodes it.

use std::sync::Arc;

use foldecode::codec::{corrupt, FoldedCode};
use foldecode::decoder::{radius, Decoder};
use foldecode::function_field::RationalBackend;
use foldecode::gf::Gf;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let f = Gf::with_order(16).unwrap();
    let code = FoldedCode::new(Arc::new(RationalBackend::new(f.clone())), 4, 3, 2).unwrap();
    let decoder = Decoder::new(code, 2).unwrap();
    let p = decoder.params();
    let r = radius(decoder.code(), p);
    println!(
        "kappa = {} (closed form {}), t = {}, budget = {}, tau = {}",
        p.kappa, p.kappa_formula, p.threshold_t, r.budget, r.tau
    );

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let msg = decoder.code().random_message(&mut rng);
    let cw = decoder.code().encode(&msg).unwrap();
    let rw = corrupt(&f, &cw, &[1], 7).unwrap();
    let res = decoder.decode(&rw).unwrap();
    println!("sent {msg:?}");
    println!(
        "affine dimension {:?}, {} candidates",
        res.affine_dim(),
        res.candidates.len()
    );
    for c in &res.candidates {
        println!("  {c:?}{}", if *c == msg { "  <- transmitted" } else { "" });
    }
}
