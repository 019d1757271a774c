//! The chain of lines `R_{1/n}` converges to the null line `R_0`; no
//! separated line `R_c` is a normed colimit.

use qnlab::snvec::{colimit_weights, log_norm, verify_no_separated_colimit, MonomialMap, WeightTail, WeightedSpace};

fn main() {
    let w = colimit_weights(&[WeightTail::Reciprocal { c: 1.0 }]).unwrap();
    println!("colimit weights: {:?}", w.weights);
    for c in [1.0, 0.001, 1000.0] {
        print!("c = {c}: {}", verify_no_separated_colimit(c));
    }
    let id = MonomialMap::identity(1);
    for n in [1u32, 10, 100] {
        let norm = log_norm(&id, &WeightedSpace::line(1.0 / n as f64), &WeightedSpace::line(1.0)).unwrap();
        println!("|R_1/{n} → R_1| = {norm}");
    }
}
