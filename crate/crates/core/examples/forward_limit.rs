//! Forward limit of `x_n = 1 − 1/n` on the real line, estimated to depth 10^7.

use qnlab::cauchy::{forward_limit_lazy, LazyForwardOptions};
use qnlab::vcat::LazyMetricSpace;

fn main() {
    let line = LazyMetricSpace::euclidean();
    let opts = LazyForwardOptions {
        tolerance: 1e-6,
        depth: 10_000_000,
    };
    let seq = |n: u64| 1.0 - 1.0 / n as f64;
    let probes = [-1.0, 0.0, 0.5, 1.0, 3.0];
    for candidate in [1.0, 0.999] {
        let r = forward_limit_lazy(&line, seq, &candidate, &probes, opts).unwrap();
        print!("candidate {candidate}: {r}");
    }
}
