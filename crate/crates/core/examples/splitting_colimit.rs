//! A constant sequence at an idempotent `e = t·r` and its colimit `r`.
//! Raising `|t|` above `k` keeps the ordinary colimit but breaks C2b.

use qnlab::cauchy::{splitting_report, verify_normed_colimit, Cocone, MorphSequence};
use qnlab::normed_cat::NormedCategory;
use qnlab::{ExtReal, LawverePlus};

fn host(t_norm: f64) -> NormedCategory<ExtReal> {
    NormedCategory::from_names(
        &["x", "y"],
        &[("1x", "x", "x"), ("1y", "y", "y"), ("e", "x", "x"), ("r", "x", "y"), ("t", "y", "x")],
        &["1x", "1y"],
        &[("r", "t", "1y"), ("t", "r", "e"), ("r", "e", "r"), ("e", "t", "t"), ("e", "e", "e")],
        [0.0, 0.0, 0.0, 0.0, t_norm].map(ExtReal::of).to_vec(),
    )
    .unwrap()
}

fn main() {
    let q = LawverePlus;
    for t_norm in [0.0, 1.0] {
        let h = host(t_norm);
        let e = h.mor("e").unwrap();
        let seq = MorphSequence::constant(&h, e).unwrap();
        let cocone = Cocone::from_last(&seq, h.obj("y").unwrap(), h.mor("r").unwrap());
        let v = verify_normed_colimit(&q, &seq, &cocone).unwrap();
        println!("|t| = {t_norm}:\n{}{}", v.report, splitting_report(&q, &h, e));
    }
}
