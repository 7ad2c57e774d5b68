//! Commutator identity suites on a catalog group.
//!
//!     cargo run --release --example identity_suites -- crates/core/catalog/rank4_p3.fp 500
use engelkit::analysis::{check_first_entry, check_gn_gamma5, check_gn_gamma6, check_power_commutator_laws};
use engelkit::nq::{nilpotent_quotient, FpPresentation};

fn main() {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| "crates/core/catalog/cyclic_3_3.fp".into());
    let samples = args.next().map_or(500, |s| s.parse().expect("sample count"));
    let fp = FpPresentation::parse(&std::fs::read_to_string(&path).expect("readable file")).expect("valid presentation");
    let pc = nilpotent_quotient(&fp, 6).expect("finite quotient").pc;
    let mut reports = vec![check_gn_gamma5(&pc, samples, 1), check_gn_gamma6(&pc, samples, 2), check_first_entry(&pc, 3, samples, 3)];
    reports.extend(check_power_commutator_laws(&pc, samples, 4, true));
    for r in reports {
        match &r.skipped {
            Some(why) => println!("{:<36} skipped: {why}", r.law),
            None => println!("{:<36} {} tuples, {} violations", r.law, r.samples, r.violations.len()),
        }
        for v in r.violations.iter().take(2) {
            println!("    {} at {:?}", v.relation, v.tuple);
        }
    }
}
