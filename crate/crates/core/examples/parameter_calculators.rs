//! Class-field degrees and genera, cyclic-extension parameters and the
//! ε-driven radius.

use foldecode::carlitz::{
    class_field_genus, cyclic_extension_parameters, cyclic_extension_parameters_with_r,
    epsilon_choice, narrow_ray_class_order,
};
use num_rational::Ratio;

fn main() {
    for (q, d) in [(2, 2), (3, 3), (4, 2)] {
        println!(
            "q={q} d={d}: |Cl+_Q| = {}, genus of F^Q = {}",
            narrow_ray_class_order(q, d),
            class_field_genus(q, d, 0, 1).unwrap()
        );
    }
    let p = cyclic_extension_parameters_with_r(4, 3, 1, 1).unwrap();
    println!(
        "ell=4 r=3: e = {}, genus bound {}",
        p.e,
        p.genus_bound_ratio()
    );
    let p = cyclic_extension_parameters(9, 16, 0).unwrap();
    println!(
        "ell=9 n=16: r = {}, list exponent for s=3: {}",
        p.r,
        p.list_size_exponent(3)
    );
    for eps in [Ratio::new(1, 2), Ratio::new(1, 4), Ratio::new(1, 5)] {
        let c = epsilon_choice(eps, Ratio::new(3, 10));
        println!(
            "eps={eps}: s={} m={} tau={} target={} met={}",
            c.s,
            c.m,
            c.tau.map_or("undefined".into(), |t| t.to_string()),
            c.target,
            c.meets_target()
        );
    }
}
