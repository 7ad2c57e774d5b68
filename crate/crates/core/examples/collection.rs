//! Collection in a small pc presentation: products, powers, commutators
//! and the consistency checks.
//!
//!     cargo run --example collection
use engelkit::pc::{cyclic_derived_example, PcBuilder};

fn main() {
    // <a, b | [a,b] = a^3, a^27 = b^9 = 1> with g1 = b, g2 = a
    let pc = cyclic_derived_example(3, 3).expect("valid parameters");
    let (b, a) = (pc.generator(0), pc.generator(1));
    println!("order {}", pc.order());
    println!("a * b = {}", pc.multiply(&a, &b));
    println!("b * a = {}", pc.multiply(&b, &a));
    println!("[a,b] = {}", pc.commutator(&a, &b));
    println!("(a b)^9 = {}", pc.power_i64(&pc.multiply(&a, &b), 9));
    println!("(a b)^-1 = {}", pc.invert(&pc.multiply(&a, &b)));
    println!("order of a b: {}", pc.element_order(&pc.multiply(&a, &b)));
    println!("consistent: {}", pc.is_consistent());
    print!("{}", pc.to_pcp());

    // g1^2 = g2 while g2^g1 = g2 g3, so g1 would not commute with its own
    // square; the check lists the failing overlaps
    let bad = PcBuilder::new(2, vec![2, 2, 2]).power(0, vec![0, 1, 0]).commutator(1, 0, vec![0, 0, 1]).build().unwrap();
    for v in bad.consistency_check() {
        println!("inconsistent: {v}");
    }
}
