//! Lipschitz norms of a map between Lawvere metric spaces, and the Met∞ norm
//! obtained from the multiplicative quantale by log°.

use qnlab::vcat::{lipschitz_norm, met_infty_norm, VCategory};
use qnlab::{ExtReal, LawverePlus, LawvereTimes};

fn main() {
    let x = ExtReal::of;
    let line = VCategory::new(
        vec!["a".into(), "b".into(), "c".into()],
        vec![
            vec![x(0.0), x(1.0), x(2.0)],
            vec![x(1.0), x(0.0), x(1.0)],
            vec![x(2.0), x(1.0), x(0.0)],
        ],
    )
    .unwrap();
    let stretched = VCategory::new(
        vec!["p".into(), "q".into()],
        vec![vec![x(0.0), x(3.0)], vec![x(3.0), x(0.0)]],
    )
    .unwrap();
    let phi = [0, 0, 1];

    let plus = lipschitz_norm(&LawverePlus, &phi, &line, &stretched).unwrap();
    let times = lipschitz_norm(&LawvereTimes, &phi, &line, &stretched).unwrap();
    let met = met_infty_norm(&phi, &line, &stretched).unwrap();
    println!("R+ Lipschitz norm  {plus}");
    println!("R× Lipschitz norm  {times}");
    println!("Met∞ norm          {met} = log°({times}) = {}", times.log_circ());
}
