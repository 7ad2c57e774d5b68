//! Weighted power-commutator presentations of finite p-groups.
//!
//! A presentation on generators `g_1, ..., g_n` (0-based in code) fixes for
//! each generator a relative order `p^{e_i}`, a power relation
//! `g_i^{p^{e_i}} = w_i` with `w_i` over later generators, and for every
//! `i < j` a conjugation relation `g_j^{g_i} = g_j * u_ij` with `u_ij` over
//! generators after `j`. Elements are exponent vectors with entries in the
//! canonical range `[0, p^{e_i})`.
//!
//! Presentations need not be consistent; [`PcPresentation::consistency_check`]
//! decides whether collection defines a group of order `prod p^{e_i}`.

pub mod collect;
pub mod pcp;
pub use pcp::{parse_element, parse_pcp, write_pcp, PcpError};

use std::fmt;

use num_bigint::BigInt;
use rand::Rng;
use thiserror::Error;

use collect::{Elt, Rules};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PcError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("relative order {order} of generator {gen} is not a power of {prime} greater than 1")]
    BadOrder { gen: usize, order: u64, prime: u64 },
    #[error("relative order {0} is too large for machine exponents")]
    OrderTooLarge(u64),
    #[error("generator count mismatch: expected {expected}, found {found}")]
    Length { expected: usize, found: usize },
    #[error("exponent {exp} of generator {gen} outside [0, {order})")]
    ExponentRange { gen: usize, exp: u64, order: u64 },
    #[error("relation {0} uses generators that are not strictly later")]
    RelationShape(String),
    #[error("weights must be positive and non-decreasing")]
    Weights,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent `e` with `p^e = x`, if `x` is a power of `p`.
pub fn p_log(p: u64, x: u64) -> Option<u32> {
    let mut e = 0;
    let mut v = 1u64;
    while v < x {
        v = v.checked_mul(p)?;
        e += 1;
    }
    (v == x).then_some(e)
}

/// An element in collected normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    exps: Vec<u64>,
}

impl Element {
    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Index of the first nonzero exponent.
    pub fn leading(&self) -> Option<(usize, u64)> {
        self.exps.iter().enumerate().find(|(_, &e)| e != 0).map(|(i, &e)| (i, e))
    }

    pub(crate) fn from_raw(exps: Vec<u64>) -> Self {
        Element { exps }
    }

    fn to_elt(&self) -> Elt<()> {
        Elt { exps: self.exps.clone(), central: () }
    }

    fn from_elt(e: Elt<()>) -> Self {
        Element { exps: e.exps }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| if e == 1 { format!("g{}", i + 1) } else { format!("g{}^{}", i + 1, e) })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// How a generator arose, when known. Used to pick grid coordinates and
/// to drive tail elimination in the nilpotent quotient.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Definition {
    /// Image of an input generator.
    Image(usize),
    /// Tail of the conjugation relation `g_j^{g_i}`: (j, i).
    Commutator(usize, usize),
    /// Tail of the power relation of generator j.
    Power(usize),
}

#[derive(Clone, Debug)]
pub struct PcPresentation {
    prime: u64,
    weights: Vec<u32>,
    definitions: Vec<Option<Definition>>,
    rules: Rules<()>,
}

impl PartialEq for PcPresentation {
    fn eq(&self, other: &Self) -> bool {
        if self.prime != other.prime || self.weights != other.weights || self.n() != other.n() {
            return false;
        }
        if self.rules.orders() != other.rules.orders() {
            return false;
        }
        (0..self.n()).all(|i| {
            self.rules.power_rhs(i) == other.rules.power_rhs(i)
                && (i + 1..self.n()).all(|j| self.rules.conj_rhs(j, i) == other.rules.conj_rhs(j, i))
        })
    }
}

/// Incremental construction of a presentation; unspecified relations are
/// trivial.
#[derive(Clone, Debug)]
pub struct PcBuilder {
    prime: u64,
    orders: Vec<u64>,
    weights: Vec<u32>,
    power: Vec<Vec<u64>>,
    conj: Vec<Vec<Vec<u64>>>,
    definitions: Vec<Option<Definition>>,
}

impl PcBuilder {
    pub fn new(prime: u64, orders: Vec<u64>) -> Self {
        let n = orders.len();
        let conj = (0..n)
            .map(|i| {
                (i + 1..n)
                    .map(|k| {
                        let mut v = vec![0; n];
                        v[k] = 1;
                        v
                    })
                    .collect()
            })
            .collect();
        PcBuilder {
            prime,
            orders,
            weights: vec![1; n],
            power: vec![vec![0; n]; n],
            conj,
            definitions: vec![None; n],
        }
    }

    pub fn weights(mut self, weights: Vec<u32>) -> Self {
        self.weights = weights;
        self
    }

    pub fn definitions(mut self, defs: Vec<Option<Definition>>) -> Self {
        self.definitions = defs;
        self
    }

    /// `g_i^{r_i} = rhs` with `rhs` given as a full exponent vector.
    pub fn power(mut self, i: usize, rhs: Vec<u64>) -> Self {
        self.power[i] = rhs;
        self
    }

    /// `g_j^{g_i} = rhs` for `i < j`.
    pub fn conjugate(mut self, j: usize, i: usize, rhs: Vec<u64>) -> Self {
        assert!(i < j, "conjugation relations need i < j");
        self.conj[i][j - i - 1] = rhs;
        self
    }

    /// `[g_j, g_i] = rhs`, stored as `g_j^{g_i} = g_j * rhs` (rhs over > j).
    pub fn commutator(self, j: usize, i: usize, rhs: Vec<u64>) -> Self {
        let mut v = rhs;
        v[j] = 1;
        self.conjugate(j, i, v)
    }

    pub fn build(self) -> Result<PcPresentation, PcError> {
        PcPresentation::from_parts(self.prime, self.orders, self.weights, self.power, self.conj, self.definitions)
    }
}

impl PcPresentation {
    fn from_parts(
        prime: u64,
        orders: Vec<u64>,
        weights: Vec<u32>,
        power: Vec<Vec<u64>>,
        conj: Vec<Vec<Vec<u64>>>,
        definitions: Vec<Option<Definition>>,
    ) -> Result<Self, PcError> {
        if !is_prime(prime) {
            return Err(PcError::NotPrime(prime));
        }
        let n = orders.len();
        for (gen, &order) in orders.iter().enumerate() {
            if order < 2 || p_log(prime, order).is_none() {
                return Err(PcError::BadOrder { gen, order, prime });
            }
            if order >= 1 << 62 {
                return Err(PcError::OrderTooLarge(order));
            }
        }
        if weights.len() != n {
            return Err(PcError::Length { expected: n, found: weights.len() });
        }
        if weights.contains(&0) || weights.windows(2).any(|w| w[0] > w[1]) {
            return Err(PcError::Weights);
        }
        let check = |v: &[u64], what: String, first: usize| -> Result<(), PcError> {
            if v.len() != n {
                return Err(PcError::Length { expected: n, found: v.len() });
            }
            for (g, &e) in v.iter().enumerate() {
                if e >= orders[g] {
                    return Err(PcError::ExponentRange { gen: g, exp: e, order: orders[g] });
                }
                if e != 0 && g < first {
                    return Err(PcError::RelationShape(what.clone()));
                }
            }
            Ok(())
        };
        for i in 0..n {
            check(&power[i], format!("g{}^{}", i + 1, orders[i]), i + 1)?;
            for k in i + 1..n {
                let rhs = &conj[i][k - i - 1];
                check(rhs, format!("g{}^g{}", k + 1, i + 1), k)?;
                if rhs[k].is_multiple_of(prime) {
                    return Err(PcError::RelationShape(format!("g{}^g{}", k + 1, i + 1)));
                }
            }
        }
        let mk = |v: &Vec<u64>| Elt { exps: v.clone(), central: () };
        let rules = Rules::new(
            orders,
            power.iter().map(mk).collect(),
            conj.iter().map(|row| row.iter().map(mk).collect()).collect(),
        );
        let definitions = if definitions.len() == n { definitions } else { vec![None; n] };
        Ok(PcPresentation { prime, weights, definitions, rules })
    }

    /// The trivial group.
    pub fn trivial(prime: u64) -> Result<Self, PcError> {
        PcBuilder::new(prime, vec![]).build()
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn n(&self) -> usize {
        self.rules.n()
    }

    pub fn relative_orders(&self) -> &[u64] {
        self.rules.orders()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn definitions(&self) -> &[Option<Definition>] {
        &self.definitions
    }

    /// `log_p |G|` assuming consistency.
    pub fn order_exponent(&self) -> u32 {
        self.relative_orders().iter().map(|&r| p_log(self.prime, r).unwrap()).sum()
    }

    pub fn order(&self) -> BigInt {
        self.relative_orders().iter().map(|&r| BigInt::from(r)).product()
    }

    pub fn power_relation(&self, i: usize) -> Element {
        Element::from_elt(self.rules.power_rhs(i).clone())
    }

    /// Right-hand side of `g_j^{g_i}` for `i < j`.
    pub fn conjugate_relation(&self, j: usize, i: usize) -> Element {
        Element::from_elt(self.rules.conj_rhs(j, i).clone())
    }

    pub fn identity(&self) -> Element {
        Element { exps: vec![0; self.n()] }
    }

    pub fn generator(&self, i: usize) -> Element {
        let mut e = self.identity();
        e.exps[i] = 1;
        e
    }

    /// Validates and wraps an exponent vector.
    pub fn element(&self, exps: Vec<u64>) -> Result<Element, PcError> {
        if exps.len() != self.n() {
            return Err(PcError::Length { expected: self.n(), found: exps.len() });
        }
        for (g, (&e, &r)) in exps.iter().zip(self.relative_orders()).enumerate() {
            if e >= r {
                return Err(PcError::ExponentRange { gen: g, exp: e, order: r });
            }
        }
        Ok(Element { exps })
    }

    /// Collects an arbitrary word given as (generator, exponent) letters.
    pub fn collect_word(&self, letters: &[(usize, i64)]) -> Element {
        let mut x = self.identity();
        for &(g, e) in letters {
            let y = self.power(&self.generator(g), &BigInt::from(e));
            x = self.multiply(&x, &y);
        }
        x
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Element {
        Element::from_elt(self.rules.mul(&u.to_elt(), &v.to_elt()))
    }

    pub fn invert(&self, u: &Element) -> Element {
        Element::from_elt(self.rules.inv(&u.to_elt()))
    }

    pub fn power(&self, u: &Element, k: &BigInt) -> Element {
        Element::from_elt(self.rules.pow_big(&u.to_elt(), k))
    }

    pub fn power_i64(&self, u: &Element, k: i64) -> Element {
        self.power(u, &BigInt::from(k))
    }

    /// `[u, v] = u^-1 v^-1 u v`.
    pub fn commutator(&self, u: &Element, v: &Element) -> Element {
        Element::from_elt(self.rules.comm(&u.to_elt(), &v.to_elt()))
    }

    /// Left-normed `[y, x_1, ..., x_k]`.
    pub fn comm_chain(&self, y: &Element, xs: &[Element]) -> Element {
        xs.iter().fold(y.clone(), |acc, x| self.commutator(&acc, x))
    }

    /// `u^v = v^-1 u v`.
    pub fn conjugate(&self, u: &Element, v: &Element) -> Element {
        Element::from_elt(self.rules.conjugate(&u.to_elt(), &v.to_elt()))
    }

    pub fn product<'a>(&self, xs: impl IntoIterator<Item = &'a Element>) -> Element {
        xs.into_iter().fold(self.identity(), |acc, x| self.multiply(&acc, x))
    }

    /// Uniformly random exponent vector.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Element {
        Element { exps: self.relative_orders().iter().map(|&r| rng.gen_range(0..r)).collect() }
    }

    /// Order of an element (a power of p).
    pub fn element_order(&self, u: &Element) -> BigInt {
        let mut x = u.clone();
        let mut ord = BigInt::from(1);
        while !x.is_identity() {
            x = self.power_i64(&x, self.prime as i64);
            ord *= self.prime;
        }
        ord
    }

    /// Standard overlap tests; an empty list means the presentation is
    /// consistent.
    pub fn consistency_check(&self) -> Vec<ConsistencyViolation> {
        let n = self.n();
        let mut out = Vec::new();
        let g = |i: usize| self.generator(i);
        let gp = |i: usize, e: u64| {
            let mut x = self.identity();
            x.exps[i] = e;
            x
        };
        let r = self.relative_orders();
        for k in 0..n {
            for j in 0..k {
                for i in 0..j {
                    let lhs = self.multiply(&self.multiply(&g(k), &g(j)), &g(i));
                    let rhs = self.multiply(&g(k), &self.multiply(&g(j), &g(i)));
                    if lhs != rhs {
                        out.push(ConsistencyViolation {
                            test: format!("(g{} g{}) g{} != g{} (g{} g{})", k + 1, j + 1, i + 1, k + 1, j + 1, i + 1),
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        for j in 0..n {
            for i in 0..j {
                // (g_j^{r_j-1} g_j) g_i = g_j^{r_j-1} (g_j g_i)
                let lhs = self.multiply(&self.power_relation(j), &g(i));
                let rhs = self.multiply(&gp(j, r[j] - 1), &self.multiply(&g(j), &g(i)));
                if lhs != rhs {
                    out.push(ConsistencyViolation {
                        test: format!("(g{0}^{1} g{0}) g{2} != g{0}^{1} (g{0} g{2})", j + 1, r[j] - 1, i + 1),
                        lhs,
                        rhs,
                    });
                }
                // (g_j g_i^{r_i-1}) g_i = g_j (g_i^{r_i})
                let lhs = self.multiply(&self.multiply(&g(j), &gp(i, r[i] - 1)), &g(i));
                let rhs = self.multiply(&g(j), &self.power_relation(i));
                if lhs != rhs {
                    out.push(ConsistencyViolation {
                        test: format!("(g{0} g{1}^{2}) g{1} != g{0} (g{1}^{2} g{1})", j + 1, i + 1, r[i] - 1),
                        lhs,
                        rhs,
                    });
                }
            }
        }
        for i in 0..n {
            let lhs = self.multiply(&self.power_relation(i), &g(i));
            let rhs = self.multiply(&g(i), &self.power_relation(i));
            if lhs != rhs {
                out.push(ConsistencyViolation {
                    test: format!("(g{0}^{1} g{0}) g{0} != g{0} (g{0}^{1} g{0})", i + 1, r[i] - 1),
                    lhs,
                    rhs,
                });
            }
        }
        out
    }

    pub fn is_consistent(&self) -> bool {
        self.consistency_check().is_empty()
    }

    /// Generators of weight 1 whose definition is not a power relation;
    /// their images generate `G` modulo `[G, G]`.
    pub fn primary_generators(&self, weight: u32) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.weights[i] == weight)
            .filter(|&i| match &self.definitions[i] {
                Some(Definition::Power(_)) => false,
                Some(_) => true,
                None => !self.is_power_of_earlier(i),
            })
            .collect()
    }

    fn is_power_of_earlier(&self, i: usize) -> bool {
        (0..i).any(|j| self.weights[j] == self.weights[i] && self.power_relation(j) == self.generator(i))
    }

    pub(crate) fn rules(&self) -> &Rules<()> {
        &self.rules
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyViolation {
    pub test: String,
    pub lhs: Element,
    pub rhs: Element,
}

impl fmt::Display for ConsistencyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} vs {}", self.test, self.lhs, self.rhs)
    }
}

/// The metacyclic group `<a, b | [a,b] = a^q, a^{q^n} = b^{q^{n-1}} = 1>`
/// with generator order `g1 = b`, `g2 = a`, where `q` is an odd prime or 4.
pub fn cyclic_derived_example(q: u64, n: u32) -> Result<PcPresentation, PcError> {
    let prime = if q == 4 { 2 } else { q };
    let a_order = q.pow(n);
    let b_order = q.pow(n - 1);
    // a^b = a^{1+q}
    PcBuilder::new(prime, vec![b_order, a_order])
        .conjugate(1, 0, vec![0, 1 + q])
        .definitions(vec![Some(Definition::Image(1)), Some(Definition::Image(0))])
        .build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cyc() -> PcPresentation {
        cyclic_derived_example(3, 3).unwrap()
    }

    fn el(p: &PcPresentation, v: &[u64]) -> Element {
        p.element(v.to_vec()).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let p = cyc();
        let a = el(&p, &[0, 1]);
        let b = el(&p, &[1, 0]);
        assert_eq!(p.multiply(&p.identity(), &a), a);
        assert_eq!(p.multiply(&a, &b).exponents(), &[1, 4]);
        assert!(p.multiply(&el(&p, &[0, 26]), &a).is_identity());
    }

    #[test]
    fn power_and_inverse_examples() {
        let p = cyc();
        let a = el(&p, &[0, 1]);
        let b = el(&p, &[1, 0]);
        assert!(p.invert(&p.identity()).is_identity());
        assert!(p.power_i64(&b, 9).is_identity());
        assert_eq!(p.power_i64(&a, -1).exponents(), &[0, 26]);
    }

    #[test]
    fn commutator_examples() {
        let p = cyc();
        let a = el(&p, &[0, 1]);
        let b = el(&p, &[1, 0]);
        assert!(p.commutator(&a, &a).is_identity());
        assert_eq!(p.commutator(&a, &b).exponents(), &[0, 3]);
        assert_eq!(p.comm_chain(&b, &[a]).exponents(), &[0, 24]);
    }

    #[test]
    fn consistency_examples() {
        assert!(PcPresentation::trivial(2).unwrap().consistency_check().is_empty());
        assert!(cyc().consistency_check().is_empty());
        // b of relative order 3 instead of 9: b^3 = 1 but conjugation by b
        // has order 9 on <a>
        let broken = PcBuilder::new(3, vec![3, 27]).conjugate(1, 0, vec![0, 4]).build().unwrap();
        let v = broken.consistency_check();
        assert!(!v.is_empty());
        assert!(v[0].test.contains("g1"));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(PcBuilder::new(4, vec![4]).build(), Err(PcError::NotPrime(4))));
        assert!(matches!(PcBuilder::new(3, vec![6]).build(), Err(PcError::BadOrder { .. })));
        assert!(PcBuilder::new(3, vec![3, 3]).power(1, vec![1, 0]).build().is_err());
        assert!(PcBuilder::new(3, vec![3, 3]).weights(vec![2, 1]).build().is_err());
    }

    #[test]
    fn group_exponent_kills_everything() {
        let p = cyc();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let e = BigInt::from(3u64.pow(p.order_exponent()));
        for _ in 0..50 {
            let u = p.random_element(&mut rng);
            assert!(p.power(&u, &e).is_identity());
            assert!(p.multiply(&u, &p.invert(&u)).is_identity());
        }
    }
}
