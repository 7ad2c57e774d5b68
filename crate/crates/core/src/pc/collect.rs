//! Collection from the left with whole-power moves.
//!
//! Words are kept as exponent vectors. Multiplying a collected word
//! `x = P * g_j^a * S` (P over indices < j, S over indices > j) by `g_j^b`
//! yields `P * g_j^{a+b} * S^(g_j^b)`; the conjugate `S^(g_j^b)` is computed
//! by applying the automorphism "conjugation by `g_j^(2^t)`" for every set
//! bit `t` of `b`. Images of the later generators under those
//! automorphisms are tabulated lazily, so the cost of a move is logarithmic
//! in the exponent instead of linear.
//!
//! The engine is generic over a central part `C` which accumulates
//! contributions of central "tail" generators; the plain group arithmetic
//! uses `()`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// An abelian group of central contributions carried along a collection.
pub trait Central: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn neg(&self) -> Self;
    fn scaled(&self, k: &BigInt) -> Self;
}

impl Central for () {
    fn zero() -> Self {}
    fn is_zero(&self) -> bool {
        true
    }
    fn add_assign(&mut self, _: &Self) {}
    fn neg(&self) -> Self {}
    fn scaled(&self, _: &BigInt) -> Self {}
}

/// Sparse integer vector over tail indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TailVec(pub BTreeMap<usize, BigInt>);

impl TailVec {
    pub fn unit(i: usize) -> Self {
        let mut m = BTreeMap::new();
        m.insert(i, BigInt::one());
        TailVec(m)
    }

    pub fn to_dense(&self, dim: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); dim];
        for (&i, x) in &self.0 {
            v[i] = x.clone();
        }
        v
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(&other.neg());
        out
    }
}

impl Central for TailVec {
    fn zero() -> Self {
        TailVec(BTreeMap::new())
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn add_assign(&mut self, other: &Self) {
        for (&i, x) in &other.0 {
            let e = self.0.entry(i).or_insert_with(BigInt::zero);
            *e += x;
            if e.is_zero() {
                self.0.remove(&i);
            }
        }
    }
    fn neg(&self) -> Self {
        TailVec(self.0.iter().map(|(&i, x)| (i, -x)).collect())
    }
    fn scaled(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        TailVec(self.0.iter().map(|(&i, x)| (i, x * k)).collect())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Elt<C> {
    pub exps: Vec<u64>,
    pub central: C,
}

impl<C: Central> Elt<C> {
    pub fn identity(n: usize) -> Self {
        Elt { exps: vec![0; n], central: C::zero() }
    }

    pub fn generator(n: usize, i: usize, e: u64) -> Self {
        let mut x = Self::identity(n);
        x.exps[i] = e;
        x
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0) && self.central.is_zero()
    }

    fn is_single(&self, k: usize) -> bool {
        self.central.is_zero()
            && self.exps.iter().enumerate().all(|(i, &e)| if i == k { e == 1 } else { e == 0 })
    }
}

/// Rewriting rules of a power-conjugate presentation with central parts.
#[derive(Debug)]
pub struct Rules<C> {
    n: usize,
    orders: Vec<u64>,
    /// `power[i]` is the value of `g_i^{orders[i]}`.
    power: Vec<Elt<C>>,
    /// `conj[i][k - i - 1]` is the value of `g_k^{g_i}` for `k > i`.
    conj: Vec<Vec<Elt<C>>>,
    tables: Vec<OnceLock<Vec<Vec<Elt<C>>>>>,
}

impl<C: Central> Clone for Rules<C> {
    fn clone(&self) -> Self {
        Rules::new(self.orders.clone(), self.power.clone(), self.conj.clone())
    }
}

fn bit_length(x: u64) -> usize {
    (64 - x.leading_zeros()) as usize
}

impl<C: Central> Rules<C> {
    pub fn new(orders: Vec<u64>, power: Vec<Elt<C>>, conj: Vec<Vec<Elt<C>>>) -> Self {
        let n = orders.len();
        assert_eq!(power.len(), n);
        assert_eq!(conj.len(), n);
        Rules { n, orders, power, conj, tables: (0..n).map(|_| OnceLock::new()).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn power_rhs(&self, i: usize) -> &Elt<C> {
        &self.power[i]
    }

    pub fn conj_rhs(&self, k: usize, i: usize) -> &Elt<C> {
        &self.conj[i][k - i - 1]
    }

    pub fn identity(&self) -> Elt<C> {
        Elt::identity(self.n)
    }

    fn table(&self, j: usize) -> &Vec<Vec<Elt<C>>> {
        self.tables[j].get_or_init(|| {
            let levels = bit_length(self.orders[j].saturating_sub(1)).max(1);
            let mut out: Vec<Vec<Elt<C>>> = Vec::with_capacity(levels);
            out.push(self.conj[j].clone());
            for t in 1..levels {
                let prev = &out[t - 1];
                let next: Vec<Elt<C>> = prev.iter().map(|img| self.apply_images(j, prev, img)).collect();
                out.push(next);
            }
            out
        })
    }

    /// Applies the endomorphism of the subgroup on generators `> j` given by
    /// generator images.
    fn apply_images(&self, j: usize, images: &[Elt<C>], s: &Elt<C>) -> Elt<C> {
        let mut out = Elt { exps: vec![0; self.n], central: s.central.clone() };
        for k in j + 1..self.n {
            let e = s.exps[k];
            if e == 0 {
                continue;
            }
            let img = &images[k - j - 1];
            if img.is_single(k) {
                self.mul_gen_pow(&mut out, k, e);
            } else {
                let pw = self.pow_u64(img, e);
                out = self.mul(&out, &pw);
            }
        }
        out
    }

    /// `s^(g_j^b)` for `s` supported on indices `> j` and `b < orders[j]`.
    fn conj_pow(&self, s: Elt<C>, j: usize, b: u64) -> Elt<C> {
        if b == 0 {
            return s;
        }
        let table = self.table(j);
        let mut out = s;
        for (t, images) in table.iter().enumerate() {
            if (b >> t) & 1 == 1 {
                out = self.apply_images(j, images, &out);
            }
        }
        out
    }

    /// `x := x * g_j^b`.
    pub fn mul_gen_pow(&self, x: &mut Elt<C>, j: usize, b: u64) {
        if b == 0 {
            return;
        }
        let r = self.orders[j];
        let b0 = b % r;
        let q0 = b / r;
        if b0 > 0 {
            let has_suffix = x.exps[j + 1..].iter().any(|&e| e != 0);
            let e = x.exps[j] + b0;
            let carry = e >= r;
            x.exps[j] = if carry { e - r } else { e };
            if has_suffix || carry {
                let mut suffix = Elt { exps: vec![0; self.n], central: C::zero() };
                for k in j + 1..self.n {
                    suffix.exps[k] = std::mem::take(&mut x.exps[k]);
                }
                let moved = if has_suffix { self.conj_pow(suffix, j, b0) } else { suffix };
                let rest = if carry { self.mul(&self.power[j], &moved) } else { moved };
                for k in j + 1..self.n {
                    x.exps[k] = rest.exps[k];
                }
                x.central.add_assign(&rest.central);
            }
        }
        if q0 > 0 {
            let w = self.pow_u64(&self.power[j], q0);
            *x = self.mul(x, &w);
        }
    }

    pub fn mul(&self, a: &Elt<C>, b: &Elt<C>) -> Elt<C> {
        let mut out = a.clone();
        for (k, &e) in b.exps.iter().enumerate() {
            if e != 0 {
                self.mul_gen_pow(&mut out, k, e);
            }
        }
        out.central.add_assign(&b.central);
        out
    }

    pub fn pow_u64(&self, a: &Elt<C>, k: u64) -> Elt<C> {
        if k == 0 {
            return self.identity();
        }
        // a single letter g_i^e: one move
        if a.central.is_zero() {
            let mut nz = a.exps.iter().enumerate().filter(|(_, &e)| e != 0);
            if let (Some((i, &e)), None) = (nz.next(), nz.next()) {
                if let Some(total) = e.checked_mul(k) {
                    let mut out = self.identity();
                    self.mul_gen_pow(&mut out, i, total);
                    return out;
                }
            }
        }
        let mut result = self.identity();
        let mut base = a.clone();
        let mut k = k;
        loop {
            if k & 1 == 1 {
                result = self.mul(&result, &base);
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = self.mul(&base, &base);
        }
        result
    }

    pub fn pow_big(&self, a: &Elt<C>, k: &BigInt) -> Elt<C> {
        let base = if k.is_negative() { self.inv(a) } else { a.clone() };
        let mag: BigUint = k.magnitude().clone();
        if let Ok(small) = u64::try_from(&mag) {
            return self.pow_u64(&base, small);
        }
        let mut result = self.identity();
        let mut b = base;
        let bits = mag.bits();
        for t in 0..bits {
            if mag.bit(t) {
                result = self.mul(&result, &b);
            }
            if t + 1 < bits {
                b = self.mul(&b, &b);
            }
        }
        result
    }

    /// Inverse: multiply by generator powers until the word is cleared.
    pub fn inv(&self, a: &Elt<C>) -> Elt<C> {
        let mut z = a.clone();
        z.central = C::zero();
        let mut y = self.identity();
        for j in 0..self.n {
            let e = z.exps[j];
            if e != 0 {
                let f = self.orders[j] - e;
                self.mul_gen_pow(&mut z, j, f);
                y.exps[j] = f;
            }
        }
        debug_assert!(z.exps.iter().all(|&e| e == 0));
        // a * y = central(z) + central(a)
        let mut c = z.central;
        c.add_assign(&a.central);
        y.central = c.neg();
        y
    }

    pub fn comm(&self, a: &Elt<C>, b: &Elt<C>) -> Elt<C> {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(&self.inv(&ba), &ab)
    }

    pub fn conjugate(&self, a: &Elt<C>, by: &Elt<C>) -> Elt<C> {
        self.mul(&self.inv(by), &self.mul(a, by))
    }
}
