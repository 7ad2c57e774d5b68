//! Free Lie rings on `a, b, c` up to weight 5.
//!
//! `L = F/I` is the free rational Lie algebra modulo the ideal generated by
//! the multidegree components with at least two `a`, three `b` or three `c`,
//! and by the `{b, c}` commutators with two of each. `K` is the lattice in
//! `L` spanned by the scaled left-normed commutators `s^{1-w} [x_1, ..., x_w]`
//! (the Lie ring generated by `a/s, b/s, c/s`, multiplied by `s`). `J` is the
//! ideal of `K` generated by `t K` and every value of `[y, x, x, x]`.
//!
//! Over the integers the values of `[y, x, x, x]` on all of `K` span the
//! same lattice as, on basis elements, `C(x,x,x)`, `C(x,x,z) + C(x,z,z)`,
//! `2 C(x,x,z)`, `2 C(x,z,z)` and the full linearization `C(x,z,w)`, where
//! `C` sums `[y, ...]` over the distinct orderings of its arguments. These
//! are the binomial-basis coefficients of `k -> [y, sum k_i e_i, ...]`.
mod hall;
mod linalg;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use serde::Serialize;

pub use hall::{HallBasis, LieElement};
use linalg::{Coordinates, Subspace, Q};

use crate::zmatrix::{smith_normal_form, IntMatrix, ModLattice};

/// Labels and words of the distinguished generators of `K`; the generator
/// for a word of length `w` is `s^{1-w}` times its left-normed commutator.
pub const LISTED: [(&str, &str); 24] = [
    ("a", "a"),
    ("b", "b"),
    ("c", "c"),
    ("d1", "ab"),
    ("d2", "ac"),
    ("d3", "bc"),
    ("e1", "abb"),
    ("e2", "abc"),
    ("e3", "acb"),
    ("e4", "acc"),
    ("e5", "bcc"),
    ("e6", "cbb"),
    ("f1", "abbc"),
    ("f2", "abcb"),
    ("f3", "acbb"),
    ("f4", "accb"),
    ("f5", "acbc"),
    ("f6", "abcc"),
    ("g1", "abbcc"),
    ("g2", "abcbc"),
    ("g3", "abccb"),
    ("g4", "accbb"),
    ("g5", "acbcb"),
    ("g6", "acbbc"),
];

/// `f6` as printed in the 2-adic list: a repeat of `f3`.
pub const F6_DUPLICATE: &str = "acbb";

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("structure constant of [{0}, {1}] is not integral")]
    NotIntegral(String, String),
    #[error("listed element {0} is not an integer combination of the others")]
    NotABasis(String),
    #[error("listed elements do not span the Lie ring: missing {0}")]
    DoesNotSpan(String),
    #[error("powerful containment fails: [K,K] not inside {0}K")]
    Containment(u64),
    #[error("certification failed: {0}")]
    Certification(String),
}

fn word_name(w: &str) -> String {
    let letters: Vec<String> = w.chars().map(String::from).collect();
    format!("[{}]", letters.join(","))
}

fn pow(s: u64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(s), e)
}

/// `F/I`, held as the free algebra together with `I` in echelon form.
#[derive(Clone, Debug)]
pub struct FreeQuotient {
    hall: HallBasis,
    ideal: Subspace,
    defining_dim: usize,
    closure_witness: Option<String>,
}

fn killed(md: &[u32]) -> bool {
    md[0] >= 2 || md[1] >= 3 || md[2] >= 3 || md == [0, 2, 2]
}

impl FreeQuotient {
    pub fn build() -> Self {
        let hall = HallBasis::new(3, 5);
        let n = hall.len();
        let mut defining = Subspace::new(n);
        let mut work: Vec<(LieElement, String)> = Vec::new();
        for i in (0..n).filter(|&i| killed(hall.multidegree(i))) {
            let e = LieElement::basis(i);
            defining.insert(&e.to_dense(n));
            work.push((e, hall.name(i)));
        }
        let mut ideal = defining.clone();
        let mut closure_witness = None;
        while let Some((x, name)) = work.pop() {
            for g in 0..3 {
                let y = hall.bracket(&x, &hall.generator(g));
                let v = y.to_dense(n);
                if ideal.insert(&v) {
                    let yname = format!("[{},{}]", name, (b'a' + g as u8) as char);
                    if closure_witness.is_none() && !defining.contains(&v) {
                        closure_witness = Some(yname.clone());
                    }
                    work.push((y, yname));
                }
            }
        }
        FreeQuotient { hall, defining_dim: defining.dim(), ideal, closure_witness }
    }

    pub fn hall(&self) -> &HallBasis {
        &self.hall
    }

    pub fn dim(&self) -> usize {
        self.hall.len() - self.ideal.dim()
    }

    /// `dim L_w` for `w = 1..=5`.
    pub fn weight_dims(&self) -> Vec<usize> {
        let mut dims = self.hall.counts();
        // rows of the echelon form stay homogeneous, so pivots count I_w
        for p in self.ideal.pivots() {
            dims[self.hall.weight(p) as usize - 1] -= 1;
        }
        dims
    }

    /// `dim gamma_k(L)`; `L` is generated in weight 1.
    pub fn gamma_dim(&self, k: u32) -> usize {
        self.weight_dims().iter().skip(k as usize - 1).sum()
    }

    /// Whether the span of the defining commutators is already an ideal.
    pub fn defining_span_is_ideal(&self) -> bool {
        self.defining_dim == self.ideal.dim()
    }

    /// A bracket of a defining commutator with a generator that leaves
    /// their span, if any.
    pub fn closure_witness(&self) -> Option<&str> {
        self.closure_witness.as_deref()
    }

    pub fn residue(&self, x: &LieElement) -> Vec<Q> {
        self.ideal.reduce(&x.to_dense(self.hall.len()))
    }

    pub fn is_zero(&self, x: &LieElement) -> bool {
        self.ideal.contains(&x.to_dense(self.hall.len()))
    }
}

/// `K` as a free abelian group with integral bracket.
#[derive(Clone, Debug)]
pub struct LieLattice {
    scale: u64,
    quotient: FreeQuotient,
    labels: Vec<String>,
    words: Vec<String>,
    coords: Coordinates,
    consts: Vec<Vec<Vec<(usize, i64)>>>,
    /// Listed generators that are integer combinations of the kept ones.
    dependent: Vec<(String, Vec<(String, i64)>)>,
}

fn to_integer(x: &Q) -> Option<i64> {
    x.is_integer().then(|| x.to_integer().to_i64()).flatten()
}

impl LieLattice {
    /// Builds `K` on the listed generators with `f6` given by `f6_word`.
    /// Later generators are preferred when the list is dependent.
    pub fn build(quotient: &FreeQuotient, scale: u64, f6_word: &str) -> Result<Self, LieError> {
        let hall = quotient.hall();
        let listed: Vec<(String, String)> = LISTED
            .iter()
            .map(|&(l, w)| (l.to_string(), if l == "f6" { f6_word.to_string() } else { w.to_string() }))
            .collect();
        let element = |w: &str| hall.word(w).div_int(&pow(scale, w.len() - 1));
        let residues: Vec<Vec<Q>> = listed.iter().map(|(_, w)| quotient.residue(&element(w))).collect();
        let rev: Vec<Vec<Q>> = residues.iter().rev().cloned().collect();
        let n = listed.len();
        let probe = Coordinates::new(&rev);
        let mut dropped = BTreeSet::new();
        let mut dependent = Vec::new();
        for (ri, dep) in &probe.dependencies {
            let i = n - 1 - ri;
            dropped.insert(i);
            let mut combo = Vec::new();
            for (rj, c) in dep.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let k = to_integer(c).ok_or_else(|| LieError::NotABasis(listed[i].0.clone()))?;
                combo.push((listed[n - 1 - rj].0.clone(), k));
            }
            combo.reverse();
            dependent.push((listed[i].0.clone(), combo));
        }
        dependent.reverse();
        let kept: Vec<usize> = (0..n).filter(|i| !dropped.contains(i)).collect();
        let coords = Coordinates::new(&kept.iter().map(|&i| residues[i].clone()).collect::<Vec<_>>());
        let labels: Vec<String> = kept.iter().map(|&i| listed[i].0.clone()).collect();
        let words: Vec<String> = kept.iter().map(|&i| listed[i].1.clone()).collect();
        let integral = |x: &LieElement| -> Option<Vec<i64>> {
            coords.solve(&quotient.residue(x))?.iter().map(to_integer).collect()
        };
        // every scaled left-normed commutator must lie in the span
        let mut word = Vec::new();
        fn all_words(len: usize, word: &mut Vec<u8>, out: &mut Vec<String>) {
            if word.len() == len {
                out.push(String::from_utf8(word.clone()).unwrap());
                return;
            }
            for l in b"abc" {
                word.push(*l);
                all_words(len, word, out);
                word.pop();
            }
        }
        for len in 1..=5 {
            let mut ws = Vec::new();
            all_words(len, &mut word, &mut ws);
            for w in ws {
                if integral(&element(&w)).is_none() {
                    return Err(LieError::DoesNotSpan(word_name(&w)));
                }
            }
        }
        let elems: Vec<LieElement> = words.iter().map(|w| element(w)).collect();
        let m = kept.len();
        let mut consts = vec![vec![Vec::new(); m]; m];
        for i in 0..m {
            for j in 0..m {
                let v = integral(&hall.bracket(&elems[i], &elems[j]))
                    .ok_or_else(|| LieError::NotIntegral(labels[i].clone(), labels[j].clone()))?;
                consts[i][j] = v.into_iter().enumerate().filter(|(_, c)| *c != 0).collect();
            }
        }
        Ok(LieLattice { scale, quotient: quotient.clone(), labels, words, coords, consts, dependent })
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.words[i].len() as u32
    }

    /// Dropped listed generators as `label = combination` strings.
    pub fn dependencies(&self) -> Vec<String> {
        self.dependent
            .iter()
            .map(|(l, combo)| {
                let terms: Vec<String> = combo
                    .iter()
                    .map(|(m, k)| match k {
                        1 => m.clone(),
                        -1 => format!("-{m}"),
                        _ => format!("{k} {m}"),
                    })
                    .collect();
                format!("{l} = {}", terms.join(" + ").replace("+ -", "- "))
            })
            .collect()
    }

    pub fn unit(&self, i: usize) -> Vec<i128> {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    /// Integral coordinates of a rational Lie element, if it lies in `K`.
    pub fn coordinates(&self, x: &LieElement) -> Option<Vec<i128>> {
        self.coords.solve(&self.quotient.residue(x))?.iter().map(|c| to_integer(c).map(i128::from)).collect()
    }

    /// The scaled left-normed commutator of a word, in coordinates.
    pub fn scaled_word(&self, w: &str) -> Vec<i128> {
        let x = self.quotient.hall().word(w).div_int(&pow(self.scale, w.len() - 1));
        self.coordinates(&x).expect("scaled commutators lie in K")
    }

    /// `[x, y]`, reduced modulo `m` when given.
    pub fn bracket(&self, x: &[i128], y: &[i128], m: Option<i128>) -> Vec<i128> {
        let mut out = vec![0i128; self.rank()];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let k = match m {
                    Some(m) => (xi * yj).rem_euclid(m),
                    None => xi * yj,
                };
                for &(t, c) in &self.consts[i][j] {
                    out[t] += k * c as i128;
                    if let Some(m) = m {
                        out[t] = out[t].rem_euclid(m);
                    }
                }
            }
        }
        out
    }

    /// Gcd of all structure constants: the largest `t` with `[K, K] <= tK`.
    pub fn structure_gcd(&self) -> u64 {
        let mut g = 0i64;
        for row in &self.consts {
            for cell in row {
                for &(_, c) in cell {
                    g = g.gcd(&c);
                }
            }
        }
        g as u64
    }

    /// Every value of `[y, x, x, x]` on `K` is an integer combination of
    /// these; see the module docs.
    pub fn engel_instances(&self) -> Vec<EngelInstance> {
        let n = self.rank();
        let mut out = Vec::new();
        let chain = |y: usize, xs: &[usize]| {
            let mut t = self.unit(y);
            for &x in xs {
                t = self.bracket(&t, &self.unit(x), None);
            }
            t
        };
        let sum = |y: usize, arrangements: &[[usize; 3]]| {
            let mut tot = vec![0i128; n];
            for xs in arrangements {
                for (a, b) in tot.iter_mut().zip(chain(y, xs)) {
                    *a += b;
                }
            }
            tot
        };
        let mut push = |first: usize, entries: Vec<usize>, kind: Linearization, value: Vec<i128>| {
            if value.iter().any(|&x| x != 0) {
                out.push(EngelInstance { first, entries, kind, value });
            }
        };
        for y in 0..n {
            let wy = self.weight(y);
            for i in 0..n {
                if wy + 3 * self.weight(i) <= 5 {
                    push(y, vec![i, i, i], Linearization::Cube, chain(y, &[i, i, i]));
                }
                for j in i + 1..n {
                    let (wi, wj) = (self.weight(i), self.weight(j));
                    if wy + wi + wj + wi.min(wj) > 5 {
                        continue;
                    }
                    let a1 = sum(y, &[[i, i, j], [i, j, i], [j, i, i]]);
                    let a2 = sum(y, &[[i, j, j], [j, i, j], [j, j, i]]);
                    let both: Vec<i128> = a1.iter().zip(&a2).map(|(x, z)| x + z).collect();
                    push(y, vec![i, i, j, j], Linearization::PairSum, both);
                    push(y, vec![i, i, j], Linearization::PairDouble, a1.iter().map(|x| 2 * x).collect());
                    push(y, vec![i, j, j], Linearization::PairDouble, a2.iter().map(|x| 2 * x).collect());
                    for k in j + 1..n {
                        if wy + wi + wj + self.weight(k) > 5 {
                            continue;
                        }
                        let perms = [[i, j, k], [i, k, j], [j, i, k], [j, k, i], [k, i, j], [k, j, i]];
                        push(y, vec![i, j, k], Linearization::Multilinear, sum(y, &perms));
                    }
                }
            }
        }
        out
    }
}

/// Which combination of `[y, x, x, x]` an instance is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Linearization {
    /// `[y, x, x, x]`.
    Cube,
    /// `C(x,x,z) + C(x,z,z)`, i.e. the substitution `x + z`.
    PairSum,
    /// `2 C(x,x,z)`.
    PairDouble,
    /// `sum over S_3` of `[y, x_1, x_2, x_3]`.
    Multilinear,
}

#[derive(Clone, Debug)]
pub struct EngelInstance {
    pub first: usize,
    pub entries: Vec<usize>,
    pub kind: Linearization,
    pub value: Vec<i128>,
}

impl EngelInstance {
    pub fn describe(&self, k: &LieLattice) -> String {
        let names: Vec<&str> = self.entries.iter().map(|&i| k.labels[i].as_str()).collect();
        let what = match self.kind {
            Linearization::Cube => format!("[{0},{1},{1},{1}]", k.labels[self.first], names[0]),
            Linearization::PairSum => format!("[{0},x,x,x] at x = {1} + {2}, mixed part", k.labels[self.first], names[0], names[2]),
            Linearization::PairDouble => format!("2 C({}; {}, {}, {})", k.labels[self.first], names[0], names[1], names[2]),
            Linearization::Multilinear => {
                format!("sum over S3 of [{}, {}, {}, {}]", k.labels[self.first], names[0], names[1], names[2])
            }
        };
        what
    }

    /// Labels of the first entry and all arguments, as a set.
    fn support<'a>(&self, k: &'a LieLattice) -> BTreeSet<&'a str> {
        std::iter::once(self.first).chain(self.entries.iter().copied()).map(|i| k.labels[i].as_str()).collect()
    }
}

fn big(v: &[i128]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Smallest ideal of `K` containing `m K` and `gens`.
pub fn ideal_closure(k: &LieLattice, m: u64, gens: impl IntoIterator<Item = Vec<i128>>) -> ModLattice {
    let mut j = ModLattice::new(k.rank(), m);
    for g in gens {
        j.insert(&big(&g));
    }
    loop {
        let mut grew = false;
        for (c, row) in j.rows().into_iter().enumerate() {
            if row[c] == BigInt::from(m) {
                continue;
            }
            let row: Vec<i128> = row.iter().map(|x| x.to_i128().unwrap()).collect();
            for i in 0..k.rank() {
                let v = k.bracket(&row, &k.unit(i), Some(m as i128));
                grew |= j.insert(&big(&v));
            }
        }
        if !grew {
            return j;
        }
    }
}

/// `K` modulo an ideal containing `m K`.
pub struct RingQuotient<'a> {
    k: &'a LieLattice,
    j: ModLattice,
    prime: u64,
}

fn smallest_prime_factor(s: u64) -> u64 {
    (2..=s).find(|d| s.is_multiple_of(*d)).unwrap_or(s)
}

impl<'a> RingQuotient<'a> {
    pub fn new(k: &'a LieLattice, j: ModLattice) -> Self {
        RingQuotient { prime: smallest_prime_factor(k.scale), k, j }
    }

    pub fn contains(&self, v: &[i128]) -> bool {
        self.j.contains(&big(v))
    }

    /// Order of the image of `v` as a power of the prime, as `p^k`.
    pub fn order_exponent(&self, v: &[i128]) -> Option<u32> {
        let mut x = v.to_vec();
        for e in 0..64 {
            if self.contains(&x) {
                return Some(e);
            }
            x.iter_mut().for_each(|c| *c *= self.prime as i128);
        }
        None
    }

    pub fn order_string(&self, v: &[i128]) -> String {
        match self.order_exponent(v) {
            Some(0) => "1".into(),
            Some(e) => format!("{}^{e}", self.prime),
            None => "infinite".into(),
        }
    }

    /// Abelian invariants of `K/J`, as `p^k` strings, largest last.
    pub fn invariants(&self) -> Vec<String> {
        let rows = self.j.rows();
        let snf = smith_normal_form(&IntMatrix::from_rows(&rows));
        let mut out: Vec<BigInt> = snf.diagonal().into_iter().map(|d| d.abs()).filter(|d| !d.is_one()).collect();
        out.sort();
        out.iter().map(|d| prime_power_string(self.prime, d)).collect()
    }

    pub fn order(&self) -> String {
        prime_power_string(self.prime, &self.j.index())
    }

    /// Lower central series of `K/J`: `gamma_k` as a lattice in `K`.
    fn gamma(&self, k: usize) -> ModLattice {
        let n = self.k.rank();
        let m = self.j.modulus();
        let mut g = ModLattice::new(n, m);
        for i in 0..n {
            g.insert(&big(&self.k.unit(i)));
        }
        for _ in 1..k {
            let mut next = ModLattice::new(n, m);
            for (c, row) in g.rows().into_iter().enumerate() {
                if row[c] == BigInt::from(m) {
                    continue;
                }
                let row: Vec<i128> = row.iter().map(|x| x.to_i128().unwrap()).collect();
                for i in 0..n {
                    next.insert(&big(&self.k.bracket(&row, &self.k.unit(i), Some(m as i128))));
                }
            }
            g = next;
        }
        g
    }

    /// Whether `gamma_k(K/J) != 0`.
    pub fn gamma_nonzero(&self, k: usize) -> bool {
        let g = self.gamma(k);
        g.rows().iter().any(|r| !self.j.contains(r))
    }

    pub fn class(&self) -> usize {
        let mut c = 0;
        while c < 6 && self.gamma_nonzero(c + 1) {
            c += 1;
        }
        c
    }

    /// `[y, x, x, x]` on random `x, y` with coordinates below `bound`.
    pub fn engel_violations(&self, samples: usize, bound: i128, seed: u64) -> usize {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = self.k.rank();
        let m = Some(self.j.modulus() as i128);
        let mut bad = 0;
        for _ in 0..samples {
            let x: Vec<i128> = (0..n).map(|_| rng.gen_range(0..bound)).collect();
            let y: Vec<i128> = (0..n).map(|_| rng.gen_range(0..bound)).collect();
            let mut t = y;
            for _ in 0..3 {
                t = self.k.bracket(&t, &x, m);
            }
            if !self.contains(&t) {
                bad += 1;
            }
        }
        bad
    }
}

fn prime_power_string(p: u64, x: &BigInt) -> String {
    if x.is_one() {
        return "1".into();
    }
    let mut e = 0;
    let mut y = x.clone();
    let pb = BigInt::from(p);
    while (&y % &pb).is_zero() {
        y /= &pb;
        e += 1;
    }
    if y.is_one() {
        format!("{p}^{e}")
    } else {
        x.to_string()
    }
}

/// One of the two scaled constructions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieScenario {
    pub scale: u64,
    /// `J` contains `torsion * K`.
    pub torsion: u64,
    /// `f6` as printed for this scale.
    pub printed_f6: String,
    pub experimental: bool,
}

impl LieScenario {
    /// `s = 5` uses torsion `5^5`; `s = 16` uses `4 * 16^4`. Other scales
    /// are allowed and marked experimental.
    pub fn new(scale: u64) -> Self {
        let two_adic = scale.is_power_of_two();
        LieScenario {
            scale,
            torsion: if two_adic { 4 * scale.pow(4) } else { scale.pow(5) },
            printed_f6: if two_adic { F6_DUPLICATE.into() } else { "abcc".into() },
            experimental: scale != 5 && scale != 16,
        }
    }

    pub fn with_torsion(mut self, torsion: u64) -> Self {
        self.torsion = torsion;
        self
    }

    /// Factor `t` in the powerful containment `[K, K] <= tK`.
    pub fn containment_factor(&self) -> u64 {
        if self.scale.is_multiple_of(2) {
            4
        } else {
            self.scale
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F6Note {
    pub printed: String,
    pub used: String,
    pub substituted: bool,
    /// Why the printed list cannot be used, when it cannot.
    pub printed_error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorCheck {
    pub relation: String,
    pub holds: bool,
}

/// The quotient by a smaller relator set: on the component with support
/// `{a, b, c, d3}` only the linearizations starting with `a` or `d3` are
/// kept, as in the classical hand derivation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictedQuotient {
    pub g2_order: String,
    pub class: usize,
    /// Instances of the full ideal that the restricted one misses.
    pub missing: Vec<String>,
    pub missing_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieCertificate {
    pub scale: u64,
    pub torsion: String,
    pub experimental: bool,
    pub free_counts: Vec<usize>,
    pub l_dim: usize,
    pub l_weight_dims: Vec<usize>,
    pub l_gamma5_dim: usize,
    pub defining_span_is_ideal: bool,
    pub closure_witness: Option<String>,
    pub listed: usize,
    pub dependencies: Vec<String>,
    pub f6: F6Note,
    pub k_rank: usize,
    pub structure_gcd: u64,
    pub containment_factor: u64,
    pub containment_holds: bool,
    pub quotient_order: String,
    pub quotient_invariants: Vec<String>,
    pub g2_order: String,
    pub abcbc_image_nonzero: bool,
    pub class: usize,
    pub gamma5_nonzero: bool,
    pub engel_instances: usize,
    pub engel_samples: usize,
    pub engel_violations: usize,
    pub relators: Vec<RelatorCheck>,
    pub restricted: RestrictedQuotient,
}

impl LieCertificate {
    pub fn relators_hold(&self) -> bool {
        self.relators.iter().all(|r| r.holds)
    }
}

/// Weight-5 relators and their first-entry refinements, as rational
/// combinations of left-normed words.
fn relators(s: u64) -> Vec<(String, Vec<(&'static str, i64)>, u32)> {
    let mut v: Vec<(String, Vec<(&'static str, i64)>, u32)> = vec![
        ("[a,b,c,b,c] = 3[a,b,b,c,c]".into(), vec![("abcbc", 1), ("abbcc", -3)], 0),
        ("[a,b,c,c,b] = -4[a,b,b,c,c]".into(), vec![("abccb", 1), ("abbcc", 4)], 0),
        ("[a,c,b,c,b] = 3[a,b,b,c,c]".into(), vec![("acbcb", 1), ("abbcc", -3)], 0),
        ("[a,c,b,b,c] = -4[a,b,b,c,c]".into(), vec![("acbbc", 1), ("abbcc", 4)], 0),
        ("[a,c,c,b,b] = [a,b,b,c,c]".into(), vec![("accbb", 1), ("abbcc", -1)], 0),
        ("5[a,b,b,c,c] = 0".into(), vec![("abbcc", 5)], 0),
    ];
    // first-entry refinements; these come from the odd-scale derivation
    if s % 2 == 1 {
        let rel = |l: &str, k: i64, r: &str| {
            let k = if k == 1 { String::new() } else { k.to_string() };
            format!("(1/{s})[{l}] = ({k}/{s})[{r}]").replace("(/", "(1/")
        };
        v.push((rel("a,b,b,c,c", 2, "a,b,c,b,c"), vec![("abbcc", 1), ("abcbc", -2)], 1));
        v.push((rel("a,b,c,c,b", -3, "a,b,c,b,c"), vec![("abccb", 1), ("abcbc", 3)], 1));
        v.push((rel("a,c,c,b,b", 2, "a,c,b,c,b"), vec![("accbb", 1), ("acbcb", -2)], 1));
        v.push((rel("a,c,b,b,c", -3, "a,c,b,c,b"), vec![("acbbc", 1), ("acbcb", 3)], 1));
        v.push((rel("a,b,c,b,c", 1, "a,c,b,c,b"), vec![("abcbc", 1), ("acbcb", -1)], 1));
    }
    v.push(("[a,b] + [b,a] = 0".into(), vec![("ab", 1), ("ba", 1)], 0));
    v
}

/// Builds `L`, `K` and `J` for the scenario and certifies `K/J`.
pub fn certify(scenario: &LieScenario, samples: usize, seed: u64) -> Result<LieCertificate, LieError> {
    let l = FreeQuotient::build();
    let s = scenario.scale;
    let printed_error = if scenario.printed_f6 != "abcc" {
        LieLattice::build(&l, s, &scenario.printed_f6).err().map(|e| e.to_string())
    } else {
        None
    };
    let k = LieLattice::build(&l, s, "abcc")?;
    let t = scenario.containment_factor();
    let gcd = k.structure_gcd();
    if gcd % t != 0 {
        return Err(LieError::Containment(t));
    }
    let m = scenario.torsion;
    let instances = k.engel_instances();
    let j = ideal_closure(&k, m, instances.iter().map(|i| i.value.clone()));
    let q = RingQuotient::new(&k, j);
    let g2 = k.unit(k.index_of("g2").ok_or_else(|| LieError::Certification("g2 dropped from the basis".into()))?);
    let abcbc = k.scaled_word("abcbc").iter().map(|x| x * s.pow(4) as i128).collect::<Vec<_>>();

    let hall = l.hall();
    let relator_checks = relators(s)
        .into_iter()
        .map(|(relation, terms, div)| {
            let mut x = LieElement::zero();
            for (w, c) in terms {
                x = x.add(&hall.word(w).scale_int(c));
            }
            let x = x.div_int(&pow(s, div as usize));
            let holds = k.coordinates(&x).map(|v| q.contains(&v)).unwrap_or(false);
            RelatorCheck { relation, holds }
        })
        .collect();

    let component: BTreeSet<&str> = ["a", "b", "c", "d3"].into();
    let restricted_keep = |i: &EngelInstance| {
        let first = k.labels[i.first].as_str();
        i.support(&k) != component || first == "a" || first == "d3"
    };
    let jr = ideal_closure(&k, m, instances.iter().filter(|i| restricted_keep(i)).map(|i| i.value.clone()));
    let qr = RingQuotient::new(&k, jr);
    let missing: Vec<String> = instances.iter().filter(|i| !qr.contains(&i.value)).map(|i| i.describe(&k)).collect();
    let restricted = RestrictedQuotient {
        g2_order: qr.order_string(&g2),
        class: qr.class(),
        missing_count: missing.len(),
        missing: missing.into_iter().take(8).collect(),
    };

    let class = q.class();
    Ok(LieCertificate {
        scale: s,
        torsion: prime_power_string(smallest_prime_factor(s), &BigInt::from(m)),
        experimental: scenario.experimental,
        free_counts: hall.counts(),
        l_dim: l.dim(),
        l_weight_dims: l.weight_dims(),
        l_gamma5_dim: l.gamma_dim(5),
        defining_span_is_ideal: l.defining_span_is_ideal(),
        closure_witness: l.closure_witness().map(String::from),
        listed: LISTED.len(),
        dependencies: k.dependencies(),
        f6: F6Note {
            printed: word_name(&scenario.printed_f6),
            used: word_name("abcc"),
            substituted: scenario.printed_f6 != "abcc",
            printed_error,
        },
        k_rank: k.rank(),
        structure_gcd: gcd,
        containment_factor: t,
        containment_holds: gcd % t == 0,
        quotient_order: q.order(),
        quotient_invariants: q.invariants(),
        g2_order: q.order_string(&g2),
        abcbc_image_nonzero: !q.contains(&abcbc),
        class,
        gamma5_nonzero: class >= 5,
        engel_instances: instances.len(),
        engel_samples: samples,
        engel_violations: q.engel_violations(samples, s.min(8) as i128, seed),
        relators: relator_checks,
        restricted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_dimensions() {
        let l = FreeQuotient::build();
        // weights 1..4 as listed; weight 5 loses [[b,c,c,b],a]
        assert_eq!(l.weight_dims(), vec![3, 3, 6, 6, 5]);
        assert_eq!(l.dim(), 23);
        assert_eq!(l.gamma_dim(5), 5);
        assert!(!l.defining_span_is_ideal());
        let h = l.hall();
        assert!(l.is_zero(&h.word("abba")));
        assert!(l.is_zero(&h.word("bcbc")));
        assert!(!l.is_zero(&h.word("abcbc")));
        let w = h.bracket(&h.word("bccb"), &h.word("a"));
        assert!(l.is_zero(&w));
    }

    #[test]
    fn lattice_for_scale_five() {
        let l = FreeQuotient::build();
        let k = LieLattice::build(&l, 5, "abcc").unwrap();
        assert_eq!(k.rank(), 23);
        assert_eq!(k.dependencies(), vec!["g1 = 2 g2 + g4 - 2 g5".to_string()]);
        // [d1, b] = (1/25)[a,b,b] * 5 = 5 e1
        let (d1, b, e1) = (k.index_of("d1").unwrap(), k.index_of("b").unwrap(), k.index_of("e1").unwrap());
        let v = k.bracket(&k.unit(d1), &k.unit(b), None);
        let mut want = vec![0; k.rank()];
        want[e1] = 5;
        assert_eq!(v, want);
        assert_eq!(k.structure_gcd() % 5, 0);
    }

    #[test]
    fn printed_duplicate_does_not_span() {
        let l = FreeQuotient::build();
        let e = LieLattice::build(&l, 16, F6_DUPLICATE).unwrap_err();
        assert!(matches!(e, LieError::NotABasis(_) | LieError::DoesNotSpan(_)), "{e}");
    }
}
