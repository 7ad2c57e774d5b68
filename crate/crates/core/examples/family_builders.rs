//! The two parametrised families: cyclic derived subgroup and the rank-4
//! family for p > 3.
//!
//!     cargo run --release --example family_builders
use engelkit::catalog::{build_cyclic_example, p_gt_3_parameters, p_gt_3_text, verify};

fn main() {
    for (q, n) in [(3, 2), (5, 2), (4, 2), (3, 4), (2, 3)] {
        match build_cyclic_example(q, n) {
            Ok(spec) => {
                let r = verify(&spec, 1);
                println!(
                    "cyclic q={q} n={n}: order {}, class {}, powerful {}, discrepancies {}",
                    r.order.unwrap_or_default(),
                    r.class.unwrap_or(0),
                    r.powerful.unwrap_or(false),
                    r.discrepancies.len()
                );
            }
            Err(e) => println!("cyclic q={q} n={n}: {e}"),
        }
    }
    for p in [3, 5, 7, 11] {
        match p_gt_3_parameters(p) {
            Ok((alpha, gamma)) => println!("p={p}: alpha {alpha}, gamma {gamma}"),
            Err(e) => println!("p={p}: {e}"),
        }
    }
    print!("{}", p_gt_3_text(5).unwrap());
}
