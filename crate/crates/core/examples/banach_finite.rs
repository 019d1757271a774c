//! A contractive endofunctor on a two-point metric space viewed as a normed
//! category, and the fixed point its orbit converges to.

use qnlab::banach::{banach_run, functor_from_point_map};
use qnlab::normed_cat::from_vcategory;
use qnlab::vcat::VCategory;
use qnlab::{ExtReal, LawverePlus};

fn main() {
    let x = ExtReal::of;
    let space = VCategory::numbered(vec![vec![x(0.0), x(1.0)], vec![x(1.0), x(0.0)]]).unwrap();
    let host = from_vcategory(&LawverePlus, &space);
    let f = functor_from_point_map(2, &[0, 0]);
    // seed x → Fx from point 1
    let seed = host.mor("1→0").unwrap();
    let run = banach_run(&host, &f, 0.5, seed).unwrap();
    print!("{}", run.report);
    if let (Some(v), Some(c)) = (run.vertex, run.class) {
        println!("vertex {} is a {} point", host.objects[v], c.label());
    }
}
