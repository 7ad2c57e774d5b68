//! Grid, exhaustive and random Engel verdicts side by side.
//!
//!     cargo run --release --example engel_policies
use engelkit::analysis::{is_n_engel, EngelPolicy};
use engelkit::nq::{nilpotent_quotient, FpPresentation};

fn main() {
    let groups = [
        ("D16", "%p 2\ngens a b\nrel [a,b] = a^(-2)\npow a^(p^3) = 1\npow b^p = 1"),
        ("<a,b | a^3, b^3> class 3", "%p 3\ngens a b\npow a^3 = 1\npow b^3 = 1"),
        ("<a,b | a^2, b^2> class 5", "%p 2\ngens a b\npow a^2 = 1\npow b^2 = 1"),
    ];
    for (name, text) in groups {
        let class = if name.ends_with("class 5") { 5 } else if name.ends_with("class 3") { 3 } else { 6 };
        let pc = nilpotent_quotient(&FpPresentation::parse(text).unwrap(), class).unwrap().pc;
        println!("{name}: order {}", pc.order());
        for n in 1..=4 {
            for policy in [EngelPolicy::GRID, EngelPolicy::EXHAUSTIVE, EngelPolicy::Random { samples: 200, seed: 3 }] {
                let v = is_n_engel(&pc, n, policy).unwrap();
                println!("  n={n} {:<11} {:<5} {:?}, {} evaluations", v.policy, v.holds, v.soundness, v.evaluations);
            }
        }
    }
}
