//! The Hausdorff norm of a distributor and of its powerset lift.

use qnlab::dist::{choice_norm, hausdorff_lift_dist, hausdorff_norm};
use qnlab::enumerate::DEFAULT_CHOICE_CAP;
use qnlab::{ExtReal, LawverePlus};

fn main() {
    let q = LawverePlus;
    let x = ExtReal::of;
    let rho = vec![
        vec![x(0.0), x(1.0)],
        vec![x(2.0), x(0.5)],
        vec![x(1.0), x(4.0)],
    ];
    let h = hausdorff_norm(&q, &rho);
    let c = choice_norm(&q, &rho, 2, DEFAULT_CHOICE_CAP).unwrap();
    let lifted = hausdorff_lift_dist(&q, &rho, 2, 12).unwrap();
    println!("|ρ| = {h}, choice norm = {c}, |Hρ| = {}", hausdorff_norm(&q, &lifted));
    println!("Hρ has {} rows (subsets of the source, ∅ included)", lifted.len());
}
