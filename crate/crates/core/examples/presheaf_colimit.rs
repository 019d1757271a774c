//! Cauchy colimit of presheaves on the arrow category over the (A)-but-not-(B)
//! quantale, read from the bundled fixture.

use std::path::Path;

use qnlab::cauchy::{presheaf_cauchy_colimit, PresheafOptions, PresheafSequence};
use qnlab::io::load_presheaf_sequence;

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/presheaf_m3bar.json");
    let f = load_presheaf_sequence(&path).unwrap();
    let q = &f.category.quantale;
    let seq = PresheafSequence::new(&f.category.host, f.stages, f.maps, f.tail).unwrap();
    let out = presheaf_cauchy_colimit(q, &seq, &PresheafOptions::default()).unwrap();
    print!("{}", out.report);
    for (o, s) in f.category.host.objects.iter().zip(&out.colimit.sets) {
        println!("{o}: {:?}", s.elements);
    }
}
