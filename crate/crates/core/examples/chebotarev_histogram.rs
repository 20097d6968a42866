//! Frobenius class counts of degree-h places for Q = T^2 + T + 1 over GF(2).

use foldecode::chebotarev::{chebotarev_check, histograms_to_csv};
use foldecode::gf::Gf;
use foldecode::poly::Poly;

fn main() {
    let f = Gf::prime(2).unwrap();
    let q = Poly::parse(&f, "T^2+T+1").unwrap();
    let hists: Vec<_> = (4..=10)
        .map(|h| chebotarev_check(&f, &q, h, None).unwrap())
        .collect();
    print!("{}", histograms_to_csv(&hists));
    for h in &hists {
        println!(
            "h = {:2}: within bound {}, max deviation / q^(h/2) = {:.3}",
            h.h,
            h.all_within_bound(),
            h.normalized_max_deviation()
        );
    }
}
