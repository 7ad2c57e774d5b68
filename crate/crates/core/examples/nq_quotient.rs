//! Nilpotent quotient of a catalog presentation, printed as `.pcp`-style
//! layer data.
use std::time::Instant;

use engelkit::nq::{nilpotent_quotient, FpPresentation};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| "crates/core/catalog/rank3_p2.fp".into());
    let text = std::fs::read_to_string(&path).expect("readable file");
    let fp = FpPresentation::parse(&text).expect("valid presentation");
    let t = Instant::now();
    let r = nilpotent_quotient(&fp, 6).expect("finite quotient");
    println!("{path}: order {}^{}", r.pc.prime(), r.pc.order_exponent());
    println!("class {} (stabilized: {})", r.class, r.stabilized);
    println!("layers {:?}", r.layer_exponents);
    println!("elapsed {:.2?}", t.elapsed());
}
