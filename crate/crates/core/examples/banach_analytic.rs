//! Banach iteration for `φ(x) = x/2 + 1` with its a-priori certificate.

use qnlab::banach::{iterate_to_fixed_point, AnalyticMap};

fn main() {
    let phi = AnalyticMap::from_expr("x/2 + 1", 0.5).unwrap();
    print!("{}", phi.check_contraction(10_000, (-100.0, 100.0), 0).unwrap());
    let cert = iterate_to_fixed_point(&phi, 0.0, 1e-9, 100).unwrap();
    println!("fixed point {} after {} steps", cert.point, cert.iterations);
    for s in cert.steps.iter().step_by(5) {
        println!("m = {:2}  x_m = {:.12}  bound = {:e}  error = {:e}", s.m, s.point, s.bound, (2.0 - s.point).abs());
    }
}
