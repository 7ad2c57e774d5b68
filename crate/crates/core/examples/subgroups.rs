//! Induced generating sequences: membership, orders, Frattini subgroup,
//! rank and power subgroups.
//!
//!     cargo run --release --example subgroups
use engelkit::analysis::{self, agemo_certified, derived_subgroup, frattini, Subgroup};
use engelkit::pc::cyclic_derived_example;

fn main() {
    let pc = cyclic_derived_example(5, 3).unwrap();
    let (b, a) = (pc.generator(0), pc.generator(1));
    let g = Subgroup::whole(&pc);
    let h = Subgroup::closure(&pc, &[pc.power_i64(&a, 5), b.clone()], false);
    println!("|G| = {}, |<a^5, b>| = {}", g.order(), h.order());
    println!("a in <a^5, b>: {}", h.contains(&a));
    println!("a^25 in <a^5, b>: {}", h.contains(&pc.power_i64(&a, 25)));
    let igs: Vec<String> = h.igs().iter().map(|x| x.to_string()).collect();
    println!("igs of <a^5, b>: {}", igs.join(", "));
    let d = derived_subgroup(&g);
    println!("|G'| = {}", d.order());
    println!("|Phi(G)| = {}, rank {}", frattini(&g).order(), analysis::rank(&pc));
    for i in 1..=2 {
        let (pw, cert) = agemo_certified(&g, i, 7);
        println!("|G^{}| = {} ({cert:?})", 5u64.pow(i), pw.order());
    }
    println!("powerful {}", analysis::is_powerful(&pc));
}
