//! Arithmetic in GF(16): tables, inverses, hex text form and the GF(4) subfield.

use foldecode::gf::{Embedding, Gf};

fn main() {
    let f = Gf::new(2, 4, None).expect("GF(16)");
    println!("GF({}) with modulus digits {:?}", f.order(), f.modulus());
    let g = f.primitive_element();
    println!(
        "primitive element {} of order {:?}",
        f.to_hex(g),
        f.multiplicative_order(g)
    );

    let a = f.parse_hex("0x9").unwrap();
    let b = f.parse_hex("0x6").unwrap();
    println!("{a} + {b} = {}", f.add(a, b));
    println!("{a} * {b} = {}", f.mul(a, b));
    println!("{a}^-1 = {}", f.inv(a).unwrap());
    println!("log {a} = {:?}", f.log(a));

    let sub = Gf::new(2, 2, None).unwrap();
    let emb = Embedding::new(&sub, &f).unwrap();
    for x in sub.elements() {
        println!("GF(4) {x} -> GF(16) {}", emb.apply(x));
    }
}
