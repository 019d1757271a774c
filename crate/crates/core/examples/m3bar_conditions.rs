//! The seven-element quantale that satisfies (A) but not (B), next to the
//! free quantale on Z2 which satisfies both.

use qnlab::quantale::{check_conditions, free_quantale, FiniteMonoid};
use qnlab::{FiniteQuantale, Quantale};

fn main() {
    let m3 = FiniteQuantale::m3bar();
    let report = check_conditions(&m3, false).expect("finite carrier");
    println!("{}:\n{}", m3.name(), report.to_validation_report(false));

    let z2 = free_quantale(&FiniteMonoid::cyclic(2), "free:Z2").expect("|Z2| is within the cap");
    let report = check_conditions(&z2, false).expect("finite carrier");
    println!("{}:\n{}", z2.name(), report.to_validation_report(true));

    // ≪ below k
    let k = m3.unit();
    let below: Vec<&str> = (0..m3.len())
        .filter(|&u| m3.totally_below(&u, &k))
        .map(|u| m3.element_name(u))
        .collect();
    println!("elements totally below k: {below:?}");
}
