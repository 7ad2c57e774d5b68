//! Hall basis of the free Lie ring on `r` generators, truncated above
//! weight `W`, and exact rational Lie elements over it.
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
struct Basic {
    weight: u32,
    /// `[u, v]` with `u > v`; `None` for a generator.
    split: Option<(usize, usize)>,
    multideg: Vec<u32>,
}

/// Basic commutators ordered by weight. `[u, v]` is basic when `u > v`
/// and, writing `u = [x, y]`, also `y <= v`. Products above `W` are zero.
#[derive(Clone, Debug)]
pub struct HallBasis {
    rank: usize,
    max_weight: u32,
    elems: Vec<Basic>,
    index: HashMap<(usize, usize), usize>,
    /// `[e_u, e_v]` for `u > v`, sparse with integer coefficients.
    table: HashMap<(usize, usize), Vec<(usize, i64)>>,
}

type Sparse = Vec<(usize, i64)>;

fn add_into(acc: &mut BTreeMap<usize, i64>, v: &Sparse, k: i64) {
    for &(i, c) in v {
        let e = acc.entry(i).or_insert(0);
        *e += k * c;
        if *e == 0 {
            acc.remove(&i);
        }
    }
}

impl HallBasis {
    pub fn new(rank: usize, max_weight: u32) -> Self {
        assert!(rank >= 1 && max_weight >= 1);
        let mut elems: Vec<Basic> = (0..rank)
            .map(|i| {
                let mut multideg = vec![0; rank];
                multideg[i] = 1;
                Basic { weight: 1, split: None, multideg }
            })
            .collect();
        let mut index = HashMap::new();
        for w in 2..=max_weight {
            let before = elems.len();
            for v in 0..before {
                for u in v + 1..before {
                    if elems[u].weight + elems[v].weight != w {
                        continue;
                    }
                    if let Some((_, y)) = elems[u].split {
                        if y > v {
                            continue;
                        }
                    }
                    let multideg = elems[u].multideg.iter().zip(&elems[v].multideg).map(|(a, b)| a + b).collect();
                    index.insert((u, v), elems.len());
                    elems.push(Basic { weight: w, split: Some((u, v)), multideg });
                }
            }
        }
        let mut h = HallBasis { rank, max_weight, elems, index, table: HashMap::new() };
        for u in 0..h.len() {
            for v in 0..u {
                if h.elems[u].weight + h.elems[v].weight <= max_weight {
                    h.basic_bracket(u, v);
                }
            }
        }
        h
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.elems[i].weight
    }

    pub fn multidegree(&self, i: usize) -> &[u32] {
        &self.elems[i].multideg
    }

    /// Number of basis elements of each weight `1..=W`.
    pub fn counts(&self) -> Vec<usize> {
        (1..=self.max_weight).map(|w| self.elems.iter().filter(|e| e.weight == w).count()).collect()
    }

    /// Bracket of basis elements, memoised. Non-basic products are
    /// rewritten with `[[x, y], v] = [[x, v], y] + [x, [y, v]]`.
    fn basic_bracket(&mut self, u: usize, v: usize) -> Sparse {
        if u == v || self.elems[u].weight + self.elems[v].weight > self.max_weight {
            return Vec::new();
        }
        if u < v {
            return self.basic_bracket(v, u).into_iter().map(|(i, c)| (i, -c)).collect();
        }
        if let Some(r) = self.table.get(&(u, v)) {
            return r.clone();
        }
        let out = match self.elems[u].split {
            Some((x, y)) if y > v => {
                let mut acc = BTreeMap::new();
                let xv = self.basic_bracket(x, v);
                for (i, c) in xv {
                    let t = self.basic_bracket(i, y);
                    add_into(&mut acc, &t, c);
                }
                let yv = self.basic_bracket(y, v);
                for (i, c) in yv {
                    let t = self.basic_bracket(x, i);
                    add_into(&mut acc, &t, c);
                }
                acc.into_iter().collect()
            }
            _ => vec![(self.index[&(u, v)], 1)],
        };
        self.table.insert((u, v), out.clone());
        out
    }

    /// Integer structure constants of `[e_u, e_v]`.
    pub fn bracket_basis(&self, u: usize, v: usize) -> Sparse {
        if u == v || self.elems[u].weight + self.elems[v].weight > self.max_weight {
            return Vec::new();
        }
        if u > v {
            self.table[&(u, v)].clone()
        } else {
            self.table[&(v, u)].iter().map(|&(i, c)| (i, -c)).collect()
        }
    }

    pub fn generator(&self, i: usize) -> LieElement {
        assert!(i < self.rank);
        LieElement::basis(i)
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (&u, a) in &x.0 {
            for (&v, b) in &y.0 {
                let ab = a * b;
                for (i, c) in self.bracket_basis(u, v) {
                    out.add_term(i, &ab * BigRational::from_integer(c.into()));
                }
            }
        }
        out
    }

    /// `[x_1, x_2, ..., x_k]`, bracketed from the left, on generator indices.
    pub fn left_normed(&self, letters: &[usize]) -> LieElement {
        let mut x = self.generator(letters[0]);
        for &l in &letters[1..] {
            x = self.bracket(&x, &self.generator(l));
        }
        x
    }

    /// Left-normed commutator from a word such as `"abcbc"`, letters
    /// `a, b, c, ...` naming the generators.
    pub fn word(&self, w: &str) -> LieElement {
        let letters: Vec<usize> = w.bytes().map(|b| (b - b'a') as usize).collect();
        self.left_normed(&letters)
    }

    pub fn name(&self, i: usize) -> String {
        match self.elems[i].split {
            None => ((b'a' + i as u8) as char).to_string(),
            Some((u, v)) => format!("[{},{}]", self.name(u), self.name(v)),
        }
    }
}

/// Exact rational combination of Hall basis elements; zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LieElement(BTreeMap<usize, BigRational>);

impl LieElement {
    pub fn zero() -> Self {
        LieElement(BTreeMap::new())
    }

    pub fn basis(i: usize) -> Self {
        LieElement(BTreeMap::from([(i, BigRational::one())]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.0.get(&i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.0.iter().map(|(&i, c)| (i, c))
    }

    fn add_term(&mut self, i: usize, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(i).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&i);
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (&i, c) in &other.0 {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        self.add(&other.scale(&BigRational::from_integer((-1).into())))
    }

    pub fn scale(&self, k: &BigRational) -> LieElement {
        if k.is_zero() {
            return LieElement::zero();
        }
        LieElement(self.0.iter().map(|(&i, c)| (i, c * k)).collect())
    }

    pub fn scale_int(&self, k: i64) -> LieElement {
        self.scale(&BigRational::from_integer(k.into()))
    }

    /// Divides by `d`.
    pub fn div_int(&self, d: &BigInt) -> LieElement {
        self.scale(&BigRational::new(BigInt::one(), d.clone()))
    }

    pub fn to_dense(&self, n: usize) -> Vec<BigRational> {
        (0..n).map(|i| self.coeff(i)).collect()
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(i, c)| format!("{c}*e{i}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    /// Necklace count: `(1/n) sum_{d | n} mu(d) r^{n/d}`.
    fn witt(r: i64, n: i64) -> i64 {
        fn mu(mut d: i64) -> i64 {
            let mut m = 1;
            let mut q = 2;
            while q * q <= d {
                if d % q == 0 {
                    d /= q;
                    if d % q == 0 {
                        return 0;
                    }
                    m = -m;
                }
                q += 1;
            }
            if d > 1 {
                m = -m;
            }
            m
        }
        (1..=n).filter(|d| n % d == 0).map(|d| mu(d) * r.pow((n / d) as u32)).sum::<i64>() / n
    }

    #[test]
    fn counts_match_necklaces() {
        for (r, w) in [(2, 6), (3, 5), (4, 4)] {
            let h = HallBasis::new(r, w);
            let want: Vec<usize> = (1..=w as i64).map(|n| witt(r as i64, n) as usize).collect();
            assert_eq!(h.counts(), want, "rank {r}");
        }
        assert_eq!(HallBasis::new(3, 5).counts(), vec![3, 3, 8, 18, 48]);
    }

    #[test]
    fn antisymmetry_and_truncation() {
        let h = HallBasis::new(3, 5);
        let a = h.generator(0);
        assert!(h.bracket(&a, &a).is_zero());
        let ab = h.word("ab");
        assert_eq!(h.word("ba"), ab.scale_int(-1));
        assert!(h.bracket(&h.word("abc"), &h.word("abc")).is_zero());
        assert!(h.bracket(&h.word("abc"), &h.word("bcb")).is_zero(), "weight 6 truncates");
    }

    fn random_element(h: &HallBasis, rng: &mut impl Rng) -> LieElement {
        let mut x = LieElement::zero();
        for _ in 0..4 {
            let i = rng.gen_range(0..h.len());
            x = x.add(&LieElement::basis(i).scale_int(rng.gen_range(-3..=3)));
        }
        x
    }

    #[test]
    fn jacobi_on_random_triples() {
        let h = HallBasis::new(3, 5);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let a = h.word("a");
        let (b, c) = (h.word("b"), h.word("c"));
        let j = h.bracket(&h.bracket(&a, &b), &c).add(&h.bracket(&h.bracket(&b, &c), &a)).add(&h.bracket(&h.bracket(&c, &a), &b));
        assert!(j.is_zero());
        for _ in 0..1000 {
            let (x, y, z) = (random_element(&h, &mut rng), random_element(&h, &mut rng), random_element(&h, &mut rng));
            let j = h
                .bracket(&h.bracket(&x, &y), &z)
                .add(&h.bracket(&h.bracket(&y, &z), &x))
                .add(&h.bracket(&h.bracket(&z, &x), &y));
            assert!(j.is_zero());
            assert_eq!(h.bracket(&x, &y), h.bracket(&y, &x).scale_int(-1));
            let lin = h.bracket(&x.add(&y), &z);
            assert_eq!(lin, h.bracket(&x, &z).add(&h.bracket(&y, &z)));
        }
    }

    #[test]
    fn basis_is_multihomogeneous() {
        let h = HallBasis::new(3, 5);
        for u in 0..h.len() {
            for v in 0..h.len() {
                let md: Vec<u32> = h.multidegree(u).iter().zip(h.multidegree(v)).map(|(a, b)| a + b).collect();
                for (i, _) in h.bracket_basis(u, v) {
                    assert_eq!(h.multidegree(i), &md[..]);
                }
            }
        }
    }
}
