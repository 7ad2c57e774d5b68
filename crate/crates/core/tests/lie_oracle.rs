//! The free Lie ring on a, b, c inside the free associative ring, truncated
//! at degree 5, with [x, y] = xy - yx. Nothing here goes through the Hall
//! basis code except the comparisons.
use std::collections::BTreeMap;

use engelkit::lie::{FreeQuotient, HallBasis, LieLattice};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

const TOP: usize = 5;

type Tensor = BTreeMap<Vec<u8>, i64>;

fn letter(c: u8) -> Tensor {
    BTreeMap::from([(vec![c], 1)])
}

fn add_into(out: &mut Tensor, x: &Tensor, k: i64) {
    for (w, c) in x {
        let e = out.entry(w.clone()).or_insert(0);
        *e += k * c;
        if *e == 0 {
            out.remove(w);
        }
    }
}

fn mul(x: &Tensor, y: &Tensor) -> Tensor {
    let mut out = Tensor::new();
    for (u, a) in x {
        for (v, b) in y {
            if u.len() + v.len() <= TOP {
                let w: Vec<u8> = u.iter().chain(v).copied().collect();
                add_into(&mut out, &BTreeMap::from([(w, a * b)]), 1);
            }
        }
    }
    out
}

fn br(x: &Tensor, y: &Tensor) -> Tensor {
    let mut out = mul(x, y);
    add_into(&mut out, &mul(y, x), -1);
    out
}

fn left_normed(w: &str) -> Tensor {
    let b = w.as_bytes();
    b[1..].iter().fold(letter(b[0]), |acc, &c| br(&acc, &letter(c)))
}

/// Parses Hall names such as `[[c,b],b]`.
fn embed_name(s: &str) -> Tensor {
    let s = s.as_bytes();
    fn go(s: &[u8], i: &mut usize) -> Tensor {
        if s[*i] == b'[' {
            *i += 1;
            let x = go(s, i);
            assert_eq!(s[*i], b',');
            *i += 1;
            let y = go(s, i);
            assert_eq!(s[*i], b']');
            *i += 1;
            br(&x, &y)
        } else {
            *i += 1;
            letter(s[*i - 1])
        }
    }
    let mut i = 0;
    go(s, &mut i)
}

fn rank(vs: &[Tensor]) -> usize {
    // exact elimination over Q on the union of supports
    let mut keys: Vec<&Vec<u8>> = vs.iter().flat_map(|v| v.keys()).collect();
    keys.sort();
    keys.dedup();
    let mut rows: Vec<Vec<BigRational>> = vs
        .iter()
        .map(|v| keys.iter().map(|k| BigRational::from_integer((*v.get(*k).unwrap_or(&0)).into())).collect())
        .collect();
    let mut r = 0;
    for col in 0..keys.len() {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, piv);
        let p = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if !row[col].is_zero() {
                let f = &row[col] / &p[col];
                for (x, y) in row.iter_mut().zip(&p) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

fn words(len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..len {
        out = out.iter().flat_map(|w| ["a", "b", "c"].map(|l| format!("{w}{l}"))).collect();
    }
    out
}

fn multidegree(w: &str) -> [usize; 3] {
    let mut d = [0; 3];
    for b in w.bytes() {
        d[(b - b'a') as usize] += 1;
    }
    d
}

#[test]
fn hall_brackets_match_tensor_commutators() {
    let h = HallBasis::new(3, TOP as u32);
    let emb: Vec<Tensor> = (0..h.len()).map(|i| embed_name(&h.name(i))).collect();
    for u in 0..h.len() {
        for v in 0..h.len() {
            let mut got = Tensor::new();
            for (i, c) in h.bracket_basis(u, v) {
                add_into(&mut got, &emb[i], c);
            }
            assert_eq!(got, br(&emb[u], &emb[v]), "[{}, {}]", h.name(u), h.name(v));
        }
    }
    // the basis is independent in every weight
    for w in 1..=TOP {
        let of_w: Vec<Tensor> = (0..h.len()).filter(|&i| h.weight(i) as usize == w).map(|i| emb[i].clone()).collect();
        assert_eq!(rank(&of_w), of_w.len());
    }
}

#[test]
fn closure_witness_identity() {
    let lhs = br(&left_normed("bccb"), &letter(b'a'));
    let mut rhs = Tensor::new();
    for (w, k) in [("abbcc", 1), ("abcbc", -2), ("accbb", -1), ("acbcb", 2)] {
        add_into(&mut rhs, &left_normed(w), k);
    }
    assert_eq!(lhs, rhs);
    assert!(!lhs.is_empty());
}

/// Dimensions of L = F/I, where I holds every multidegree component with
/// deg_a >= 2, deg_b >= 3 or deg_c >= 3, the (0,2,2) component, and its
/// brackets with a.
#[test]
fn quotient_dimensions_from_tensors() {
    let killed = |d: [usize; 3]| d[0] >= 2 || d[1] >= 3 || d[2] >= 3 || d == [0, 2, 2];
    let mut dims = Vec::new();
    for w in 1..=TOP {
        let mut by_deg: BTreeMap<[usize; 3], Vec<Tensor>> = BTreeMap::new();
        for word in words(w) {
            by_deg.entry(multidegree(&word)).or_default().push(left_normed(&word));
        }
        let mut dim = 0;
        for (d, vs) in &by_deg {
            if killed(*d) {
                continue;
            }
            let mut r = rank(vs);
            if *d == [1, 2, 2] {
                let inside: Vec<Tensor> =
                    words(4).iter().filter(|x| multidegree(x) == [0, 2, 2]).map(|x| br(&left_normed(x), &letter(b'a'))).collect();
                r -= rank(&inside);
            }
            dim += r;
        }
        dims.push(dim);
    }
    assert_eq!(dims, vec![3, 3, 6, 6, 5]);
    let l = FreeQuotient::build();
    assert_eq!(l.weight_dims(), dims);
    assert_eq!(l.dim(), 23);
    assert_eq!(l.gamma_dim(5), 5);
}

#[test]
fn listed_dependency_lies_in_the_ideal() {
    // g1 - 2 g2 - g4 + 2 g5 is the closure witness up to sign
    let mut dep = Tensor::new();
    for (w, k) in [("abbcc", 1), ("abcbc", -2), ("accbb", -1), ("acbcb", 2)] {
        add_into(&mut dep, &left_normed(w), k);
    }
    let inside: Vec<Tensor> =
        words(4).iter().filter(|x| multidegree(x) == [0, 2, 2]).map(|x| br(&left_normed(x), &letter(b'a'))).collect();
    let mut with = inside.clone();
    with.push(dep.clone());
    assert_eq!(rank(&with), rank(&inside));
    assert!(dep.values().any(|c| c.is_positive()));

    let k = LieLattice::build(&FreeQuotient::build(), 5, "abcc").unwrap();
    assert_eq!(k.dependencies(), vec!["g1 = 2 g2 + g4 - 2 g5".to_string()]);
}
