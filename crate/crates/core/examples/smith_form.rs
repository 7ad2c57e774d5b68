//! Hermite and Smith normal forms of an integer relation matrix, read as
//! the abelian group it presents.
//!
//!     cargo run --example smith_form
use engelkit::zmatrix::{hermite_normal_form, smith_normal_form, IntMatrix};

fn main() {
    // relations of Z^3 / <(2,4,4), (-6,6,12), (10,-4,-16)>
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let (h, u) = hermite_normal_form(&a);
    println!("H = {:?}", h.to_rows());
    println!("U unimodular: {}", u.is_unimodular());
    let snf = smith_normal_form(&a);
    let d: Vec<String> = snf.diagonal().iter().map(|x| x.to_string()).collect();
    println!("invariant factors {}", d.join(" | "));
    println!("U A V = S: {}", snf.u.mul(&a).mul(&snf.v).to_rows() == snf.s.to_rows());
}
