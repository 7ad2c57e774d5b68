//! Certifies the scaled Lie ring `K/J` for `s = 5` and `s = 16` and prints
//! the certificates as JSON.
//!
//!     cargo run --release --example lie_ring -- 5
use engelkit::lie::{certify, LieScenario};

fn main() {
    let scales: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let scales = if scales.is_empty() { vec![5, 16] } else { scales };
    for s in scales {
        let t = std::time::Instant::now();
        match certify(&LieScenario::new(s), 1000, 7) {
            Ok(cert) => {
                println!("{}", serde_json::to_string_pretty(&cert).unwrap());
                eprintln!("s = {s}: {:.2?}", t.elapsed());
            }
            Err(e) => eprintln!("s = {s}: {e}"),
        }
    }
}
