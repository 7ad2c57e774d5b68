//! Verifies every catalog entry and prints the discrepancies; with a name
//! argument prints that entry's JSON report instead.
//!
//!     cargo run --release --example verify_catalog -- cyclic_5_4
use engelkit::catalog::{self, catalog, verify, verify_all};

fn main() {
    if let Some(name) = std::env::args().nth(1) {
        let spec = catalog::find(&name).expect("catalog entry");
        println!("{}", verify(&spec, 1).to_json());
        return;
    }
    for e in catalog() {
        println!("{:<12} p={:<3} expects {:?}", e.name, e.p, e.expected);
    }
    for r in verify_all(1) {
        println!("{:<12} {}", r.name, if r.passed() { "pass" } else { "discrepancies:" });
        for d in &r.discrepancies {
            println!("    {}: expected {}, computed {}", d.check, d.expected, d.computed);
        }
    }
}
