//! The Carlitz module over GF(2)[T] and its torsion at Q = T^2 + T + 1.

use foldecode::carlitz::{torsion_polynomial, torsion_report, CarlitzModule};
use foldecode::gf::Gf;
use foldecode::poly::Poly;

fn main() {
    let f = Gf::prime(2).unwrap();
    let c = CarlitzModule::new(f.clone());
    let q = Poly::parse(&f, "T^2+T+1").unwrap();
    println!("phi_T = {:?}", c.phi_t());
    println!("phi_Q = {:?}", c.phi(&q));
    let coeffs: Vec<String> = torsion_polynomial(&f, &q)
        .iter()
        .map(|p| format!("({})", p.display("T")))
        .collect();
    println!("phi_Q(t) coefficients by t-degree: {}", coeffs.join(" "));
    let report = torsion_report(&f, &q).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
