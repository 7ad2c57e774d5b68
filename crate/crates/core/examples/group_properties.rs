//! Structural profile of a presented group: series, powerfulness, Engel
//! verdicts and the power/class bounds.
//!
//!     cargo run --release --example group_properties -- crates/core/catalog/rank3_p2.fp
use std::time::Instant;

use engelkit::analysis::{self, EngelPolicy, Subgroup};
use engelkit::nq::{nilpotent_quotient, FpPresentation};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| "crates/core/catalog/rank3_p2.fp".into());
    let fp = FpPresentation::parse(&std::fs::read_to_string(&path).expect("readable file")).expect("valid presentation");
    let t = Instant::now();
    let q = nilpotent_quotient(&fp, 6).expect("finite quotient");
    let pc = &q.pc;
    println!("order {}^{}, nq {:.2?}", pc.prime(), pc.order_exponent(), t.elapsed());

    let series = analysis::lower_central_series(pc);
    let orders: Vec<String> = series.iter().map(|s| analysis::order_string(pc.prime(), s.order_exponent())).collect();
    println!("lower central series {}", orders.join(" > "));
    println!("class {}, rank {}", series.len() - 1, analysis::rank(pc));
    println!("powerful {}, metabelian {}", analysis::is_powerful(pc), analysis::is_metabelian(pc));
    let g = Subgroup::whole(pc);
    let d = analysis::derived_subgroup(&g);
    println!("|G'| = {}", d.order());
    println!("after series {:.2?}", t.elapsed());

    for policy in [EngelPolicy::GRID, EngelPolicy::Random { samples: 10_000, seed: 1 }] {
        let v = analysis::is_n_engel(pc, 3, policy).unwrap();
        println!("3-Engel ({}): {} [{:?}, {} evaluations] {:.2?}", v.policy, v.holds, v.soundness, v.evaluations, t.elapsed());
    }
    let b = analysis::subgroup_power_and_bounds(pc, 7);
    for c in &b.checks {
        println!("  {:<24} {:?}  {}", c.name, c.holds, c.detail);
    }
    println!("total {:.2?}", t.elapsed());
}
