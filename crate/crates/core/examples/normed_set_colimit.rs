//! Final and Cauchy norms on a sequential colimit of normed sets.

use qnlab::normed_sets::{seq_colimit, NormMode, NormedSet, NormedSetSequence, Tail};
use qnlab::{ExtReal, LawverePlus};

fn main() {
    let q = LawverePlus;
    let x = ExtReal::of;
    let seq = NormedSetSequence::new(
        vec![
            NormedSet::numbered(vec![x(0.0), x(3.0)]),
            NormedSet::numbered(vec![x(2.0), x(1.0)]),
        ],
        vec![vec![1, 1]],
        Tail::Idempotent(vec![1, 1]),
    )
    .expect("well-formed sequence");

    for mode in [NormMode::Final, NormMode::Cauchy] {
        match seq_colimit(&q, &seq, mode) {
            Ok(c) => println!("{mode:?}: elements {:?}, norms {:?}", c.set.elements, c.set.norm),
            Err(e) => println!("{mode:?}: {e}"),
        }
    }
}
