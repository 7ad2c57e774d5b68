//! Subgroups held as induced generating sequences.
//!
//! An igs keeps at most one element per leading position `i`, with leading
//! exponent a power of p strictly below the relative order `r_i`. Once the
//! set is closed under powers and commutators, every subgroup element is a
//! unique product `s_1^{e_1} s_2^{e_2} ...` with `0 <= e_k < r_k / q_k`.
use std::collections::HashSet;

use num_bigint::BigInt;
use rand::Rng;

use crate::pc::{Element, PcPresentation};

#[derive(Clone, Debug)]
pub struct Subgroup<'a> {
    pc: &'a PcPresentation,
    slots: Vec<Option<Element>>,
}

/// Leading exponent normalised to `p^v`: returns the unit `u` with
/// `u * e = p^v (mod r)`.
fn unit_inverse(e: u64, r: u64, p: u64) -> u64 {
    let mut unit = e;
    while unit.is_multiple_of(p) {
        unit /= p;
    }
    let (mut a, mut b) = (unit as i128 % r as i128, r as i128);
    let (mut x0, mut x1) = (1i128, 0i128);
    while b != 0 {
        let q = a / b;
        (a, b) = (b, a - q * b);
        (x0, x1) = (x1, x0 - q * x1);
    }
    x0.rem_euclid(r as i128) as u64
}

impl<'a> Subgroup<'a> {
    pub fn trivial(pc: &'a PcPresentation) -> Self {
        Subgroup { pc, slots: vec![None; pc.n()] }
    }

    pub fn whole(pc: &'a PcPresentation) -> Self {
        Subgroup { pc, slots: (0..pc.n()).map(|i| Some(pc.generator(i))).collect() }
    }

    /// Smallest subgroup containing `gens`, or the smallest normal subgroup
    /// when `normal` is set.
    pub fn closure(pc: &'a PcPresentation, gens: &[Element], normal: bool) -> Self {
        let conj: Vec<Element> = if normal { (0..pc.n()).map(|i| pc.generator(i)).collect() } else { Vec::new() };
        Self::closure_under(pc, gens, &conj)
    }

    /// Smallest subgroup containing `gens` and normalised by `conj`.
    pub fn closure_under(pc: &'a PcPresentation, gens: &[Element], conj: &[Element]) -> Self {
        let mut s = Subgroup::trivial(pc);
        s.extend(gens.to_vec(), conj);
        s
    }

    pub fn ambient(&self) -> &'a PcPresentation {
        self.pc
    }

    pub fn igs(&self) -> Vec<&Element> {
        self.slots.iter().flatten().collect()
    }

    pub fn igs_owned(&self) -> Vec<Element> {
        self.slots.iter().flatten().cloned().collect()
    }

    /// Leading exponent of the igs element at position `i`, if any.
    pub fn leading_exponent(&self, i: usize) -> Option<u64> {
        self.slots[i].as_ref().map(|s| s.exponents()[i])
    }

    /// `log_p |S|`.
    pub fn order_exponent(&self) -> u32 {
        let p = self.pc.prime();
        let mut total = 0;
        for (i, s) in self.slots.iter().enumerate() {
            if let Some(s) = s {
                let r = self.pc.relative_orders()[i];
                let mut k = r / s.exponents()[i];
                while k > 1 {
                    k /= p;
                    total += 1;
                }
            }
        }
        total
    }

    pub fn order(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.pc.prime()), self.order_exponent() as usize)
    }

    pub fn is_trivial(&self) -> bool {
        self.slots.iter().all(Option::is_none)
    }

    /// Residue of `x` after dividing out igs elements from the right.
    /// Trivial exactly when `x` lies in the subgroup.
    pub fn sift(&self, x: &Element) -> Element {
        let mut x = x.clone();
        while let Some((i, e)) = x.leading() {
            let Some(s) = &self.slots[i] else { return x };
            let q = s.exponents()[i];
            if e % q != 0 {
                return x;
            }
            let k = (e / q) as i64;
            x = self.pc.multiply(&x, &self.pc.power_i64(s, -k));
        }
        x
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.sift(x).is_identity()
    }

    pub fn contains_subgroup(&self, other: &Subgroup) -> bool {
        other.igs().into_iter().all(|x| self.contains(x))
    }

    /// Canonical representative of the coset `xS`: every exponent at an igs
    /// position is reduced below the leading exponent there.
    pub fn coset_rep(&self, x: &Element) -> Element {
        let mut x = x.clone();
        let mut from = 0;
        loop {
            let next = (from..x.len()).find(|&i| x.exponents()[i] != 0 && self.slots[i].is_some());
            let Some(i) = next else { return x };
            let s = self.slots[i].as_ref().unwrap();
            let q = s.exponents()[i];
            let k = (x.exponents()[i] / q) as i64;
            if k != 0 {
                x = self.pc.multiply(&x, &self.pc.power_i64(s, -k));
            }
            from = i + 1;
        }
    }

    /// Uniform element, as a normal-form product of the igs.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Element {
        let mut x = self.pc.identity();
        for (i, s) in self.slots.iter().enumerate() {
            if let Some(s) = s {
                let range = self.pc.relative_orders()[i] / s.exponents()[i];
                let e = rng.gen_range(0..range);
                if e > 0 {
                    x = self.pc.multiply(&x, &self.pc.power_i64(s, e as i64));
                }
            }
        }
        x
    }

    /// Adds `gens` and closes under powers, commutators and conjugation by
    /// `conj`.
    pub fn extend(&mut self, gens: Vec<Element>, conj: &[Element]) {
        let mut queue = gens;
        loop {
            while let Some(x) = queue.pop() {
                self.absorb(x, conj, &mut queue);
            }
            // closure conditions are re-checked on the final igs: a slot
            // replaced midway can leave stale sifts behind
            let igs = self.igs_owned();
            for (k, s) in igs.iter().enumerate() {
                let (i, q) = s.leading().unwrap();
                let r = self.pc.relative_orders()[i];
                queue.push(self.pc.power_i64(s, (r / q) as i64));
                for t in &igs[k + 1..] {
                    queue.push(self.pc.commutator(t, s));
                }
                for g in conj {
                    queue.push(self.pc.commutator(s, g));
                }
            }
            queue.retain(|x| !self.contains(x));
            if queue.is_empty() {
                return;
            }
        }
    }

    fn absorb(&mut self, x: Element, conj: &[Element], queue: &mut Vec<Element>) {
        let r = self.sift(&x);
        let Some((i, e)) = r.leading() else { return };
        let p = self.pc.prime();
        let order = self.pc.relative_orders()[i];
        let s = self.pc.power_i64(&r, unit_inverse(e, order, p) as i64);
        let q = s.exponents()[i];
        if let Some(old) = self.slots[i].take() {
            let q_old = old.exponents()[i];
            queue.push(self.pc.multiply(&old, &self.pc.power_i64(&s, -((q_old / q) as i64))));
        }
        queue.push(self.pc.power_i64(&s, (order / q) as i64));
        for t in self.slots.iter().flatten() {
            queue.push(self.pc.commutator(&s, t));
        }
        for g in conj {
            queue.push(self.pc.commutator(&s, g));
        }
        self.slots[i] = Some(s);
    }

    /// Enumerates coset representatives of `self` modulo a normal subgroup
    /// `n <= self`; gives up beyond `cap` cosets.
    pub fn quotient_transversal(&self, n: &Subgroup, cap: usize) -> Option<Vec<Element>> {
        let start = self.pc.identity();
        let mut seen: HashSet<Element> = HashSet::from([start.clone()]);
        let mut order = vec![start];
        let gens = self.igs_owned();
        let mut k = 0;
        while k < order.len() {
            for g in &gens {
                let y = n.coset_rep(&self.pc.multiply(&order[k], g));
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    order.push(y);
                }
            }
            k += 1;
        }
        Some(order)
    }

    /// Brute-force element list, for small subgroups and oracles.
    pub fn elements(&self, cap: usize) -> Option<Vec<Element>> {
        self.quotient_transversal(&Subgroup::trivial(self.pc), cap)
    }

    pub fn same_as(&self, other: &Subgroup) -> bool {
        self.order_exponent() == other.order_exponent() && self.contains_subgroup(other)
    }

    /// Index `|self : other|` for `other <= self`.
    pub fn index_exponent(&self, other: &Subgroup) -> u32 {
        self.order_exponent() - other.order_exponent()
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.pc, other.pc) && self.same_as(other)
    }
}

/// `|S|` as `p^k`, for reports.
pub fn order_string(p: u64, k: u32) -> String {
    if k == 0 {
        "1".into()
    } else {
        format!("{p}^{k}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pc::{cyclic_derived_example, PcBuilder};

    fn extraspecial27() -> PcPresentation {
        // x, y, z = [y, x] central, exponent 3
        PcBuilder::new(3, vec![3, 3, 3]).commutator(1, 0, vec![0, 0, 1]).build().unwrap()
    }

    #[test]
    fn sift_and_membership() {
        let pc = cyclic_derived_example(3, 3).unwrap();
        let t = Subgroup::trivial(&pc);
        assert!(t.sift(&pc.identity()).is_identity());
        let a = pc.generator(1);
        let b = pc.generator(0);
        let s = Subgroup::closure(&pc, &[pc.power_i64(&a, 3)], false);
        assert!(s.contains(&pc.power_i64(&a, 9)));
        assert!(!s.contains(&b));
        assert_eq!(s.order(), BigInt::from(9));
    }

    #[test]
    fn closure_examples() {
        let pc = cyclic_derived_example(3, 3).unwrap();
        assert_eq!(Subgroup::closure(&pc, &[], false).order(), BigInt::from(1));
        let a3 = pc.power_i64(&pc.generator(1), 3);
        assert_eq!(Subgroup::closure(&pc, &[a3], true).order(), BigInt::from(9));
        let e = extraspecial27();
        let z = e.commutator(&e.generator(0), &e.generator(1));
        assert_eq!(Subgroup::closure(&e, &[z], true).order(), BigInt::from(3));
        assert_eq!(Subgroup::closure(&e, &[e.generator(0)], true).order(), BigInt::from(9));
    }

    #[test]
    fn normalisation_replaces_slots() {
        // <a^9> then a^3: slot at a is replaced and a^27 = 1 handled
        let pc = cyclic_derived_example(3, 3).unwrap();
        let a = pc.generator(1);
        let mut s = Subgroup::closure(&pc, &[pc.power_i64(&a, 9)], false);
        assert_eq!(s.order(), BigInt::from(3));
        s.extend(vec![pc.power_i64(&a, 6)], &[]);
        assert_eq!(s.order(), BigInt::from(9));
        assert_eq!(s.leading_exponent(1), Some(3));
        // a unit multiple of b^3 a^5 normalises to leading exponent 3
        let w = pc.collect_word(&[(0, 6), (1, 5)]);
        let t = Subgroup::closure(&pc, &[w], false);
        assert_eq!(t.leading_exponent(0), Some(3));
    }

    #[test]
    fn transversal_counts_cosets() {
        let pc = cyclic_derived_example(3, 3).unwrap();
        let g = Subgroup::whole(&pc);
        let n = Subgroup::closure(&pc, &[pc.power_i64(&pc.generator(1), 3)], true);
        let t = g.quotient_transversal(&n, 1000).unwrap();
        assert_eq!(t.len(), 27);
        assert_eq!(g.elements(1000).unwrap().len(), 243);
    }
}
