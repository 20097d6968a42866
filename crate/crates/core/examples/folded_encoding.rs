//! Folded Reed–Solomon encoding with q = 16, m = 4, N = 3, l = 2.

use std::sync::Arc;

use foldecode::codec::FoldedCode;
use foldecode::function_field::RationalBackend;
use foldecode::gf::Gf;

fn main() {
    let f = Gf::with_order(16).unwrap();
    let code = FoldedCode::new(Arc::new(RationalBackend::new(f.clone())), 4, 3, 2).unwrap();
    println!(
        "k = {}, rate = {}, distance bound = {}",
        code.dimension(),
        code.rate(),
        code.distance_bound()
    );
    for (i, w) in code.windows().iter().enumerate() {
        let pts: Vec<String> = w.iter().map(|p| f.to_hex(p.x)).collect();
        println!("window {i}: X in {}", pts.join(" "));
    }
    let msg: Vec<_> = ["0x3", "0x9", "0xf"]
        .iter()
        .map(|s| f.parse_hex(s).unwrap())
        .collect();
    let cw = code.encode(&msg).unwrap();
    println!("codeword:\n{cw}");
}
