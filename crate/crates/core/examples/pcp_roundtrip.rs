//! Nilpotent quotient written as `.pcp`, read back and compared.
//!
//!     cargo run --release --example pcp_roundtrip -- crates/core/catalog/rank4_p3.fp
use engelkit::nq::{nilpotent_quotient, FpPresentation};
use engelkit::pc::parse_pcp;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| "crates/core/catalog/cyclic_3_3.fp".into());
    let fp = FpPresentation::parse(&std::fs::read_to_string(&path).expect("readable file")).expect("valid presentation");
    print!("{fp}");
    let q = nilpotent_quotient(&fp, 6).expect("finite quotient");
    let text = q.pc.to_pcp();
    let lines: Vec<&str> = text.lines().collect();
    for l in lines.iter().take(12) {
        println!("{l}");
    }
    if lines.len() > 12 {
        println!("... {} more lines", lines.len() - 12);
    }
    let back = parse_pcp(&text).expect("own output parses");
    println!("round trip equal: {}", back == q.pc);
}
