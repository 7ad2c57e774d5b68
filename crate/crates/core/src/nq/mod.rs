//! Class-bounded nilpotent quotients of finitely presented groups whose
//! lower central factors are finite p-groups.
//!
//! The quotient is built one lower central layer at a time. Given the
//! class-(c-1) quotient `H` with a weighted pc presentation, every relation
//! of `H` that does not define a generator gets a free central "tail"; the
//! conjugation relations only for `w_i + w_j <= c`, since the others hold
//! exactly in any class-c group. Consistency overlaps and then the input
//! relators, evaluated in this extension, give linear relations among the
//! tails; the quotient of the free abelian tail group by them is the new
//! layer `gamma_c / gamma_{c+1}`. The layer gets pc generators of relative
//! order p chosen among the tails themselves, so every new generator has a
//! definition and its defining relation carries no tail in the next step.

pub mod fp;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::pc::collect::{Central, Elt, Rules, TailVec};
use crate::pc::{p_log, Definition, Element, PcBuilder, PcError, PcPresentation};
use crate::zmatrix::{Lattice, ModLattice};
pub use fp::{Expr, FpError, FpPresentation, RWord, Relation, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NqError {
    #[error("infinite layer: gamma_{class}/gamma_{} is not finite", class + 1)]
    InfiniteLayer { class: usize },
    #[error("layer {class} has order {order}, which is not a power of {prime}")]
    NotPGroup { class: usize, order: String, prime: u64 },
    #[error("class bound must be at least 1")]
    ClassBound,
    #[error(transparent)]
    Fp(#[from] FpError),
    #[error(transparent)]
    Pc(#[from] PcError),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Clone, Debug)]
pub struct NqResult {
    pub pc: PcPresentation,
    /// Images of the input generators.
    pub images: Vec<Element>,
    /// Class of the computed quotient.
    pub class: usize,
    /// False when the class bound was reached and the next layer is
    /// nonzero, i.e. the group has a larger nilpotent quotient.
    pub stabilized: bool,
    /// `log_p` of the order of each lower central factor.
    pub layer_exponents: Vec<u32>,
}

/// Per-relator outcome of re-evaluating a presentation at the images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorStatus {
    pub relation: String,
    pub value: Element,
    pub holds: bool,
}

/// Evaluates every relator of `fp` at `images` inside `pc`.
pub fn epimorphism_check(fp: &FpPresentation, pc: &PcPresentation, images: &[Element]) -> Result<Vec<RelatorStatus>, FpError> {
    let relators = fp.relators()?;
    Ok(relators
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let value = r.evaluate(pc, images);
            RelatorStatus { relation: fp.relation_text(k), holds: value.is_identity(), value }
        })
        .collect())
}

/// A pc presentation under construction, with exponent vectors as plain
/// data so it can be extended by a layer.
#[derive(Clone, Debug)]
struct Stage {
    prime: u64,
    orders: Vec<u64>,
    weights: Vec<u32>,
    power: Vec<Vec<u64>>,
    /// `conj[i][k - i - 1]` is `g_k^{g_i}`.
    conj: Vec<Vec<Vec<u64>>>,
    defs: Vec<Definition>,
    images: Vec<Vec<u64>>,
    /// `log_p` of the exponent of the last layer.
    top_exponent: Option<u32>,
}

impl Stage {
    fn empty(prime: u64, ngens: usize) -> Self {
        Stage {
            prime,
            orders: vec![],
            weights: vec![],
            power: vec![],
            conj: vec![],
            defs: vec![],
            images: vec![vec![]; ngens],
            top_exponent: None,
        }
    }

    fn n(&self) -> usize {
        self.orders.len()
    }

    fn to_pc(&self) -> Result<PcPresentation, PcError> {
        let mut b = PcBuilder::new(self.prime, self.orders.clone())
            .weights(self.weights.clone())
            .definitions(self.defs.iter().cloned().map(Some).collect());
        for i in 0..self.n() {
            b = b.power(i, self.power[i].clone());
            for k in i + 1..self.n() {
                b = b.conjugate(k, i, self.conj[i][k - i - 1].clone());
            }
        }
        b.build()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum TailSite {
    Comm(usize, usize),
    Power(usize),
    Image(usize),
}

impl TailSite {
    fn definition(self) -> Definition {
        match self {
            TailSite::Comm(j, i) => Definition::Commutator(j, i),
            TailSite::Power(i) => Definition::Power(i),
            TailSite::Image(x) => Definition::Image(x),
        }
    }
}

fn extend(v: &[u64], n: usize) -> Vec<u64> {
    let mut out = v.to_vec();
    out.resize(n, 0);
    out
}

/// The new layer as `Z^J / lattice` together with the coordinates of every
/// tail.
struct Layer {
    /// Coordinates of each tail in `Z^J`.
    phi: Vec<Vec<BigInt>>,
    rel: Lattice,
}

/// The tail relations, over the integers or, when the layer exponent is
/// bounded in advance, modulo that bound.
enum TailLattice {
    Big(Lattice),
    Mod(ModLattice),
}

impl TailLattice {
    fn insert(&mut self, v: &TailVec) {
        match self {
            TailLattice::Big(l) => {
                l.insert(v.to_dense(l.dim()));
            }
            TailLattice::Mod(l) => {
                l.insert_sparse(v.0.iter().map(|(&c, x)| (c, x)));
            }
        }
    }

    fn is_trivial(&self) -> bool {
        match self {
            TailLattice::Big(l) => l.index().is_some_and(|d| d.is_one()),
            TailLattice::Mod(l) => l.index().is_one(),
        }
    }

    /// Echelon rows (row `c` with pivot in column `c`) and the index.
    fn echelon(&self, class: usize) -> Result<(Vec<Vec<BigInt>>, BigInt), NqError> {
        match self {
            TailLattice::Big(l) => {
                let index = l.index().ok_or(NqError::InfiniteLayer { class })?;
                Ok(((0..l.dim()).map(|c| l.pivot_row(c).unwrap().to_vec()).collect(), index))
            }
            TailLattice::Mod(l) => Ok((l.rows(), l.index())),
        }
    }
}

fn layer_from_lattice(lat: &TailLattice, prime: u64, class: usize) -> Result<Layer, NqError> {
    let (rows, index) = lat.echelon(class)?;
    let t = rows.len();
    let is_p_power = {
        let mut d = index.clone();
        let p = BigInt::from(prime);
        while !d.is_one() && d.is_multiple_of(&p) {
            d /= &p;
        }
        d.is_one()
    };
    if !is_p_power {
        return Err(NqError::NotPGroup { class, order: index.to_string(), prime });
    }
    let cols: Vec<usize> = (0..t).filter(|&c| !rows[c][c].is_one()).collect();
    let pos: HashMap<usize, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let m = cols.len();
    let mut phi = vec![vec![BigInt::zero(); m]; t];
    let mut rel = Lattice::new(m);
    for i in (0..t).rev() {
        let row = &rows[i];
        let mut acc = vec![BigInt::zero(); m];
        for j in i + 1..t {
            if !row[j].is_zero() {
                for (a, b) in acc.iter_mut().zip(&phi[j]) {
                    if !b.is_zero() {
                        *a += &row[j] * b;
                    }
                }
            }
        }
        if let Some(&k) = pos.get(&i) {
            acc[k] += &row[i];
            rel.insert(acc);
            phi[i][k] = BigInt::one();
        } else {
            phi[i] = acc.into_iter().map(|x| (-x).mod_floor(&index)).collect();
        }
    }
    if rel.index().as_ref() != Some(&index) {
        return Err(NqError::Internal("layer elimination changed the order".into()));
    }
    Ok(Layer { phi, rel })
}

struct LayerBasis {
    gens: Vec<Vec<BigInt>>,
    /// Source tail (level 0) or the generator it is the p-th power of.
    defs: Vec<Result<usize, usize>>,
    /// `chain[k]` is the relation lattice plus generators `k..`.
    chain: Vec<Lattice>,
    /// Number of levels, i.e. `log_p` of the exponent of the layer.
    levels: u32,
}

impl LayerBasis {
    /// Picks generators of relative order p: a basis of `M/pM` among the
    /// tails (in the given order of preference), then their p-th powers
    /// level by level.
    fn choose(layer: &Layer, order: &[usize], prime: u64) -> LayerBasis {
        let m = layer.rel.dim();
        let p = BigInt::from(prime);
        let scale = |v: &[BigInt], k: &BigInt| v.iter().map(|x| x * k).collect::<Vec<_>>();
        // M/pM
        let mut modp = layer.rel.clone();
        for c in 0..m {
            let mut e = vec![BigInt::zero(); m];
            e[c] = p.clone();
            modp.insert(e);
        }
        let mut gens = Vec::new();
        let mut defs = Vec::new();
        let mut level: Vec<usize> = Vec::new();
        for &tail in order {
            if modp.is_full_rank() && modp.index().unwrap().is_one() {
                break;
            }
            let v = &layer.phi[tail];
            if !modp.contains(v) {
                modp.insert(v.clone());
                level.push(gens.len());
                gens.push(v.clone());
                defs.push(Ok(tail));
            }
        }
        // deeper levels: p^k M / p^{k+1} M spanned by p-th powers of the
        // previous level
        let mut pk = p.clone();
        let mut levels = 0;
        while !level.is_empty() {
            levels += 1;
            let mut below = layer.rel.clone();
            for c in 0..m {
                let mut e = vec![BigInt::zero(); m];
                e[c] = &pk * &p;
                below.insert(e);
            }
            let mut next = Vec::new();
            for &g in &level {
                let v = scale(&gens[g], &p);
                if !below.contains(&v) {
                    below.insert(v.clone());
                    next.push(gens.len());
                    gens.push(v);
                    defs.push(Err(g));
                }
            }
            level = next;
            pk *= &p;
        }
        let s = gens.len();
        let mut chain = vec![layer.rel.clone(); s + 1];
        for k in (0..s).rev() {
            let mut l = chain[k + 1].clone();
            l.insert(gens[k].clone());
            chain[k] = l;
        }
        LayerBasis { gens, defs, chain, levels }
    }

    fn express(&self, v: &[BigInt], prime: u64) -> Vec<u64> {
        let mut v = v.to_vec();
        let mut out = vec![0; self.gens.len()];
        for (k, g) in self.gens.iter().enumerate() {
            for c in 0..prime {
                if self.chain[k + 1].contains(&v) {
                    out[k] = c;
                    break;
                }
                assert!(c + 1 < prime, "layer sifting failed");
                for (a, b) in v.iter_mut().zip(g) {
                    *a -= b;
                }
            }
        }
        out
    }
}

fn step(stage: &Stage, relators: &[RWord], class: usize, filtered: bool) -> Result<Option<Stage>, NqError> {
    let n = stage.n();
    let w = &stage.weights;
    let prime = stage.prime;
    let mut defined_power = vec![false; n];
    let mut defined_comm = std::collections::HashSet::new();
    let mut defined_image = vec![false; stage.images.len()];
    for d in &stage.defs {
        match *d {
            Definition::Power(i) => defined_power[i] = true,
            Definition::Commutator(j, i) => {
                defined_comm.insert((j, i));
            }
            Definition::Image(x) => defined_image[x] = true,
        }
    }
    let mut sites = Vec::new();
    for i in 0..n {
        if !defined_power[i] {
            sites.push(TailSite::Power(i));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let in_range = !filtered || (w[i] + w[j]) as usize <= class;
            if in_range && !defined_comm.contains(&(j, i)) {
                sites.push(TailSite::Comm(j, i));
            }
        }
    }
    for (x, &d) in defined_image.iter().enumerate() {
        if !d {
            sites.push(TailSite::Image(x));
        }
    }
    let t = sites.len();
    let index: HashMap<TailSite, usize> = sites.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let tail = |s: TailSite| index.get(&s).map(|&k| TailVec::unit(k)).unwrap_or_else(TailVec::zero);

    let power: Vec<Elt<TailVec>> =
        (0..n).map(|i| Elt { exps: stage.power[i].clone(), central: tail(TailSite::Power(i)) }).collect();
    let conj: Vec<Vec<Elt<TailVec>>> = (0..n)
        .map(|i| {
            (i + 1..n)
                .map(|k| Elt { exps: stage.conj[i][k - i - 1].clone(), central: tail(TailSite::Comm(k, i)) })
                .collect()
        })
        .collect();
    let rules = Rules::new(stage.orders.clone(), power, conj);
    let images: Vec<Elt<TailVec>> = stage
        .images
        .iter()
        .enumerate()
        .map(|(x, e)| Elt { exps: e.clone(), central: tail(TailSite::Image(x)) })
        .collect();

    // for c >= 2 the layer gamma_c/gamma_{c+1} is an image of
    // G/G' (x) gamma_{c-1}/gamma_c, so its exponent divides the previous one
    let bound = stage.top_exponent.and_then(|e| prime.checked_pow(e)).filter(|&m| m < 1 << 62);
    let mut lat = match bound {
        Some(m) => TailLattice::Mod(ModLattice::new(t, m)),
        None => TailLattice::Big(Lattice::new(t)),
    };
    let mut impose = |lhs: Elt<TailVec>, rhs: Elt<TailVec>, what: &dyn Fn() -> String| -> Result<(), NqError> {
        if lhs.exps != rhs.exps {
            return Err(NqError::Internal(format!("{} differs outside the new layer", what())));
        }
        let d = lhs.central.sub(&rhs.central);
        if !d.is_zero() {
            lat.insert(&d);
        }
        Ok(())
    };

    let gen = |i: usize, e: u64| Elt::<TailVec>::generator(n, i, e);
    let wsum = |ws: &[usize]| ws.iter().map(|&i| w[i] as usize).sum::<usize>();
    for k in 0..n {
        for j in 0..k {
            for i in 0..j {
                if filtered && wsum(&[i, j, k]) > class {
                    continue;
                }
                let lhs = rules.mul(&rules.mul(&gen(k, 1), &gen(j, 1)), &gen(i, 1));
                let rhs = rules.mul(&gen(k, 1), &rules.mul(&gen(j, 1), &gen(i, 1)));
                impose(lhs, rhs, &|| format!("overlap g{k} g{j} g{i}"))?;
            }
        }
    }
    let r = &stage.orders;
    for j in 0..n {
        for i in 0..j {
            if filtered && wsum(&[i, j]) > class {
                continue;
            }
            let lhs = rules.mul(rules.power_rhs(j), &gen(i, 1));
            let rhs = rules.mul(&gen(j, r[j] - 1), &rules.mul(&gen(j, 1), &gen(i, 1)));
            impose(lhs, rhs, &|| format!("overlap g{j}^p g{i}"))?;
            let lhs = rules.mul(&rules.mul(&gen(j, 1), &gen(i, r[i] - 1)), &gen(i, 1));
            let rhs = rules.mul(&gen(j, 1), rules.power_rhs(i));
            impose(lhs, rhs, &|| format!("overlap g{j} g{i}^p"))?;
        }
    }
    for i in 0..n {
        let lhs = rules.mul(rules.power_rhs(i), &gen(i, 1));
        let rhs = rules.mul(&gen(i, 1), rules.power_rhs(i));
        impose(lhs, rhs, &|| format!("overlap g{i}^p g{i}"))?;
    }
    for (k, rw) in relators.iter().enumerate() {
        let v = rw.eval(&rules, &images);
        impose(v, rules.identity(), &|| format!("relator {}", k + 1))?;
    }

    if t == 0 {
        return Ok(None);
    }
    if lat.is_trivial() {
        return Ok(None);
    }
    let layer = layer_from_lattice(&lat, prime, class)?;

    // preference: commutators of a weight-1 generator with the previous
    // layer, then other commutators, powers, and images
    let mut order: Vec<usize> = (0..t).collect();
    order.sort_by_key(|&k| {
        let rank = match sites[k] {
            TailSite::Comm(j, i) if w[i] == 1 && w[j] as usize + 1 == class => 0,
            TailSite::Comm(..) => 1,
            TailSite::Power(_) => 2,
            TailSite::Image(_) => 3,
        };
        (rank, sites[k])
    });
    let basis = LayerBasis::choose(&layer, &order, prime);
    let s = basis.gens.len();
    let n2 = n + s;
    let ext = |old: &[u64], site: Option<TailSite>| -> Vec<u64> {
        let mut v = extend(old, n2);
        if let Some(&k) = site.and_then(|st| index.get(&st)) {
            let e = basis.express(&layer.phi[k], prime);
            v[n..].copy_from_slice(&e);
        }
        v
    };

    let mut next = Stage {
        prime,
        orders: r.iter().copied().chain(std::iter::repeat_n(prime, s)).collect(),
        weights: w.iter().copied().chain(std::iter::repeat_n(class as u32, s)).collect(),
        power: Vec::with_capacity(n2),
        conj: Vec::with_capacity(n2),
        defs: stage.defs.clone(),
        images: vec![],
        top_exponent: Some(basis.levels),
    };
    for i in 0..n {
        next.power.push(ext(&stage.power[i], Some(TailSite::Power(i))));
        let mut row: Vec<Vec<u64>> =
            (i + 1..n).map(|k| ext(&stage.conj[i][k - i - 1], Some(TailSite::Comm(k, i)))).collect();
        for k in n..n2 {
            let mut v = vec![0; n2];
            v[k] = 1;
            row.push(v);
        }
        next.conj.push(row);
    }
    let pvec = BigInt::from(prime);
    for (k, g) in basis.gens.iter().enumerate() {
        let pg: Vec<BigInt> = g.iter().map(|x| x * &pvec).collect();
        let mut v = vec![0; n2];
        v[n..].copy_from_slice(&basis.express(&pg, prime));
        next.power.push(v);
        next.conj.push(
            (n + k + 1..n2)
                .map(|m| {
                    let mut v = vec![0; n2];
                    v[m] = 1;
                    v
                })
                .collect(),
        );
        next.defs.push(match basis.defs[k] {
            Ok(tail) => sites[tail].definition(),
            Err(g) => Definition::Power(n + g),
        });
    }
    next.images = stage.images.iter().enumerate().map(|(x, e)| ext(e, Some(TailSite::Image(x)))).collect();
    Ok(Some(next))
}

/// Largest quotient of class at most `class_bound` of the group presented
/// by `fp`.
pub fn nilpotent_quotient(fp: &FpPresentation, class_bound: usize) -> Result<NqResult, NqError> {
    if class_bound == 0 {
        return Err(NqError::ClassBound);
    }
    let prime = fp.group_prime();
    let relators = fp.relators()?;
    let mut stage = Stage::empty(prime, fp.generators.len());
    let mut layers = Vec::new();
    let mut stabilized = false;
    for class in 1..=class_bound + 1 {
        let next = match step(&stage, &relators, class, true)? {
            Some(s) if s.to_pc()?.is_consistent() => Some(s),
            Some(_) => {
                let s = step(&stage, &relators, class, false)?;
                match s {
                    Some(s) if !s.to_pc()?.is_consistent() => {
                        return Err(NqError::Internal(format!("class {class} extension is inconsistent")))
                    }
                    other => other,
                }
            }
            None => None,
        };
        match next {
            None => {
                stabilized = true;
                break;
            }
            Some(s) if class <= class_bound => {
                layers.push((s.n() - stage.n()) as u32);
                stage = s;
            }
            // the probe layer beyond the bound is nonzero
            Some(_) => break,
        }
    }
    let pc = stage.to_pc()?;
    let images: Vec<Element> = stage.images.iter().map(|e| pc.element(e.clone())).collect::<Result<_, _>>()?;
    if !epimorphism_check(fp, &pc, &images)?.iter().all(|r| r.holds) {
        return Err(NqError::Internal("relators fail in the computed quotient".into()));
    }
    Ok(NqResult { class: layers.len(), pc, images, stabilized, layer_exponents: layers })
}

/// Re-encodes a pc presentation as a finite presentation on its own
/// generators (named `g1, g2, ...`). Conjugation relations are written as
/// `g_i^-1 g_j g_i = rhs` and omitted when trivial.
pub fn pc_to_fp(pc: &PcPresentation) -> FpPresentation {
    let n = pc.n();
    let word = |e: &Element| {
        Word::product(
            e.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(k, &x)| if x == 1 { Word::Gen(k) } else { Word::Gen(k).pow(Expr::int(x)) })
                .collect(),
        )
    };
    let mut relations = Vec::new();
    for i in 0..n {
        let rhs = word(&pc.power_relation(i));
        relations.push(Relation::Power { gen: i, exp: Expr::int(pc.relative_orders()[i]), rhs });
    }
    for i in 0..n {
        for j in i + 1..n {
            let rhs = pc.conjugate_relation(j, i);
            if rhs != pc.generator(j) {
                let lhs = Word::Prod(vec![Word::Gen(i).pow(Expr::int(-1)), Word::Gen(j), Word::Gen(i)]);
                relations.push(Relation::Equal(lhs, word(&rhs)));
            }
        }
    }
    FpPresentation { p: pc.prime(), prime: None, generators: (1..=n).map(|i| format!("g{i}")).collect(), relations }
}

/// `log_p` of an order, when it is a power of p.
pub fn order_exponent(order: &BigInt, prime: u64) -> Option<u32> {
    if order.is_negative() {
        return None;
    }
    let v = order.to_u64()?;
    p_log(prime, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nq(text: &str, c: usize) -> NqResult {
        nilpotent_quotient(&FpPresentation::parse(text).unwrap(), c).unwrap()
    }

    #[test]
    fn cyclic_of_order_nine() {
        let r = nq("%p 3\ngens x\nrel x^9\n", 2);
        assert_eq!(r.pc.order(), BigInt::from(9));
        assert_eq!(r.class, 1);
        assert!(r.stabilized);
    }

    #[test]
    fn infinite_layer_is_reported() {
        let fp = FpPresentation::parse("%p 3\ngens x y\nrel x^9\n").unwrap();
        assert_eq!(nilpotent_quotient(&fp, 2).unwrap_err(), NqError::InfiniteLayer { class: 1 });
        let fp = FpPresentation::parse("%p 3\ngens x\nrel x^6\n").unwrap();
        assert!(matches!(nilpotent_quotient(&fp, 2), Err(NqError::NotPGroup { .. })));
    }

    #[test]
    fn cyclic_derived_family_member() {
        let r = nq("%p 3\ngens a b\nrel [a,b] = a^p\npow a^(p^3) = 1\npow b^(p^2) = 1\n", 4);
        assert_eq!(r.pc.order(), BigInt::from(243));
        assert_eq!(r.class, 3);
        assert!(r.stabilized);
        assert_eq!(r.layer_exponents, vec![3, 1, 1]);
    }

    #[test]
    fn flags_missing_stabilization() {
        // free nilpotent-ish: class grows until the torsion stops it
        let r = nq("%p 2\ngens x y\nrel x^4\nrel y^4\n", 2);
        assert!(!r.stabilized);
        assert_eq!(r.class, 2);
    }

    #[test]
    fn round_trip_through_fp() {
        let r = nq("%p 3\ngens a b\nrel [a,b] = a^p\npow a^(p^3) = 1\npow b^(p^2) = 1\n", 4);
        let fp = pc_to_fp(&r.pc);
        let again = nilpotent_quotient(&fp, 6).unwrap();
        assert_eq!(again.pc.order(), r.pc.order());
        assert_eq!(again.class, r.class);
    }
}
