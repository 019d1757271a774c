//! Normed groups as one-object normed categories and as V-categories.

use qnlab::normed_cat::{
    check_normed_monoid, group_to_vcat, rational_prime_norm, vcat_to_group_norm, NormedMonoid,
};
use qnlab::quantale::FiniteMonoid;
use qnlab::{ExtReal, LawverePlus};

fn main() {
    let z4 = FiniteMonoid::cyclic(4);
    let norm = [0.0, 1.0, 2.0, 1.0].map(ExtReal::of).to_vec();
    let g = NormedMonoid { monoid: z4.clone(), norm };
    print!("{}", check_normed_monoid(&LawverePlus, &g));
    let a = group_to_vcat(&g).unwrap();
    println!("A(1, 3) = {}", a.d[1][3]);
    println!("round trip: {:?}", vcat_to_group_norm(&z4, &a).norm);

    for (n, d) in [(12, 5), (1, 1), (49, 18)] {
        println!("|{n}/{d}| = {}", rational_prime_norm(n, d).unwrap());
    }
}
