//! Local expansions in a σ-fixed parameter on the rational and Hermitian
//! function fields.

use foldecode::function_field::{
    expand_in_parameter, Function, FunctionFieldBackend, HermitianBackend, RationalBackend,
};
use foldecode::gf::Gf;
use foldecode::poly::Poly;

fn main() {
    let f = Gf::with_order(16).unwrap();
    let rat = RationalBackend::new(f.clone());
    let p = rat.place(f.one());
    let t = rat.fixed_parameter(&p).unwrap();
    let x2 = Function::univariate(&Poly::parse(&f, "X^2+X+1").unwrap());
    let e = expand_in_parameter(&rat, &x2, &p, &t, 6).unwrap();
    println!(
        "X^2+X+1 at X=1 in t = X^15 - 1: v = {}, coeffs {:?}",
        e.valuation, e.coeffs
    );

    let herm = HermitianBackend::with_ell(2).unwrap();
    println!(
        "Hermitian curve over GF(4): genus {}, {} affine points",
        herm.genus(),
        herm.places().len()
    );
    for orbit in herm.orbits() {
        let pts: Vec<String> = orbit.places.iter().map(|p| p.to_string()).collect();
        println!("orbit of length {}: {}", orbit.len(), pts.join(" "));
    }
    let p = herm
        .places()
        .into_iter()
        .find(|p| herm.fixed_parameter(p).is_ok())
        .unwrap();
    let t = herm.fixed_parameter(&p).unwrap();
    for z in &herm.rr_basis(3).unwrap().functions {
        let a = expand_in_parameter(&herm, z, &herm.sigma_place(&p, 1), &t, 4).unwrap();
        let b = expand_in_parameter(&herm, &herm.sigma_fn(z, -1), &p, &t, 4).unwrap();
        println!(
            "{:?}: at P^σ {:?}, conjugate at P {:?}",
            z.num, a.coeffs, b.coeffs
        );
    }
}
