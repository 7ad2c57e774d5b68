//! Structural deciders on consistent pc presentations: series, power
//! subgroups, powerfulness, Engel laws and commutator identity suites.
mod engel;
mod identities;
mod subgroup;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::pc::{Element, PcPresentation};

pub use engel::{is_n_engel, EngelError, EngelPolicy, EngelVerdict, GridInfo, Soundness};
pub use identities::{
    check_first_entry, check_gn_gamma5, check_gn_gamma6, check_power_commutator_laws, subgroup_power_and_bounds,
    engel_class_bound, BoundCheck, BoundsReport, LawReport, Violation,
};
pub use subgroup::{order_string, Subgroup};

/// Coset enumeration cap used when certifying agemo subgroups exactly.
pub const AGEMO_QUOTIENT_CAP: usize = 1 << 16;

/// `gamma_1 = G, gamma_2, ...` down to (and including) the first trivial term.
pub fn lower_central_series(pc: &PcPresentation) -> Vec<Subgroup<'_>> {
    let gens: Vec<Element> = (0..pc.n()).map(|i| pc.generator(i)).collect();
    let mut series = vec![Subgroup::whole(pc)];
    while !series.last().unwrap().is_trivial() {
        let top = series.last().unwrap();
        let comms: Vec<Element> =
            top.igs().into_iter().flat_map(|s| gens.iter().map(move |g| (s, g))).map(|(s, g)| pc.commutator(s, g)).collect();
        series.push(Subgroup::closure(pc, &comms, true));
    }
    series
}

/// Largest `k` with `gamma_k != 1` (0 for the trivial group).
pub fn nilpotency_class(pc: &PcPresentation) -> usize {
    lower_central_series(pc).len() - 1
}

/// `gamma_k(G)` with 1-based `k`, trivial past the end of the series.
pub fn gamma<'a>(series: &[Subgroup<'a>], k: usize) -> Subgroup<'a> {
    series.get(k - 1).cloned().unwrap_or_else(|| Subgroup::trivial(series[0].ambient()))
}

/// `[S, S]`.
pub fn derived_subgroup<'a>(s: &Subgroup<'a>) -> Subgroup<'a> {
    let pc = s.ambient();
    let igs = s.igs_owned();
    let mut comms = Vec::new();
    for (k, x) in igs.iter().enumerate() {
        for y in &igs[k + 1..] {
            comms.push(pc.commutator(x, y));
        }
    }
    Subgroup::closure_under(pc, &comms, &igs)
}

pub fn is_metabelian(pc: &PcPresentation) -> bool {
    derived_subgroup(&derived_subgroup(&Subgroup::whole(pc))).is_trivial()
}

/// `Phi(S) = S^p [S, S]`, exact: modulo `S'` the p-th powers of
/// generators already generate `S^p`.
pub fn frattini<'a>(s: &Subgroup<'a>) -> Subgroup<'a> {
    let pc = s.ambient();
    let igs = s.igs_owned();
    let p = pc.prime() as i64;
    let mut gens: Vec<Element> = igs.iter().map(|x| pc.power_i64(x, p)).collect();
    for (k, x) in igs.iter().enumerate() {
        for y in &igs[k + 1..] {
            gens.push(pc.commutator(x, y));
        }
    }
    Subgroup::closure_under(pc, &gens, &igs)
}

/// A minimal generating set of `S` picked from its igs.
pub fn minimal_generators(s: &Subgroup) -> Vec<Element> {
    let phi = frattini(s);
    s.igs()
        .into_iter()
        .filter(|x| {
            let i = x.leading().unwrap().0;
            phi.leading_exponent(i) != s.leading_exponent(i)
        })
        .cloned()
        .collect()
}

/// Rank `d(G)`; for powerful groups this is the rank in the usual sense.
pub fn rank(pc: &PcPresentation) -> usize {
    minimal_generators(&Subgroup::whole(pc)).len()
}

/// How an agemo subgroup was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AgemoCertificate {
    /// `S` is powerful, so `S^{p^i}` is generated by the `p^i`-th powers
    /// of any generating set.
    Powerful,
    /// Every coset of the candidate was enumerated.
    Enumerated,
    /// Quotient too large; grid plus random witnesses found nothing.
    Sampled,
}

/// `S^{p^i}` together with how it was certified.
pub fn agemo_certified<'a>(s: &Subgroup<'a>, i: u32, seed: u64) -> (Subgroup<'a>, AgemoCertificate) {
    let pc = s.ambient();
    let e = pc.prime().pow(i) as i64;
    let conj = s.igs_owned();
    let powers: Vec<Element> = conj.iter().map(|x| pc.power_i64(x, e)).collect();
    let mut n = Subgroup::closure_under(pc, &powers, &conj);
    if powerful_by_generators(s) {
        return (n, AgemoCertificate::Powerful);
    }
    'outer: loop {
        match s.quotient_transversal(&n, AGEMO_QUOTIENT_CAP) {
            Some(reps) => {
                for x in reps {
                    let y = pc.power_i64(&x, e);
                    if !n.contains(&y) {
                        n.extend(vec![y], &conj);
                        continue 'outer;
                    }
                }
                return (n, AgemoCertificate::Enumerated);
            }
            None => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let candidates = engel::grid_elements(s, 1).into_iter().chain((0..2000).map(|_| s.random_element(&mut rng)));
                for x in candidates {
                    let y = pc.power_i64(&x, e);
                    if !n.contains(&y) {
                        n.extend(vec![y], &conj);
                        continue 'outer;
                    }
                }
                return (n, AgemoCertificate::Sampled);
            }
        }
    }
}

/// `S^{p^i} = <x^{p^i} : x in S>`.
pub fn agemo<'a>(s: &Subgroup<'a>, i: u32) -> Subgroup<'a> {
    agemo_certified(s, i, 0).0
}

/// The power used in the definition of powerful: 4 for p = 2, else p.
pub fn powerful_exponent(p: u64) -> u32 {
    if p == 2 {
        2
    } else {
        1
    }
}

/// `[S, S]` inside the normal closure of the `p^k`-th powers of the igs,
/// with `k` from [`powerful_exponent`]. That closure sits inside `S^{p^k}`,
/// so a positive answer already proves `S` powerful.
fn powerful_by_generators(s: &Subgroup) -> bool {
    let pc = s.ambient();
    let e = pc.prime().pow(powerful_exponent(pc.prime())) as i64;
    let conj = s.igs_owned();
    let powers: Vec<Element> = conj.iter().map(|x| pc.power_i64(x, e)).collect();
    Subgroup::closure_under(pc, &powers, &conj).contains_subgroup(&derived_subgroup(s))
}

/// `[S, S] <= S^p` (p odd) or `[S, S] <= S^4` (p = 2).
pub fn is_powerful_subgroup(s: &Subgroup) -> bool {
    powerful_by_generators(s) || agemo(s, powerful_exponent(s.ambient().prime())).contains_subgroup(&derived_subgroup(s))
}

pub fn is_powerful(pc: &PcPresentation) -> bool {
    is_powerful_subgroup(&Subgroup::whole(pc))
}

/// Seeded generator shared by all sampling checks.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pc::{cyclic_derived_example, PcBuilder};
    use num_bigint::BigInt;

    fn extraspecial27() -> PcPresentation {
        PcBuilder::new(3, vec![3, 3, 3]).commutator(1, 0, vec![0, 0, 1]).build().unwrap()
    }

    fn abelian() -> PcPresentation {
        PcBuilder::new(3, vec![9, 3]).build().unwrap()
    }

    #[test]
    fn series_of_cyclic_example() {
        let pc = cyclic_derived_example(3, 3).unwrap();
        let lcs = lower_central_series(&pc);
        let orders: Vec<BigInt> = lcs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, [243, 9, 3, 1].map(BigInt::from));
        assert_eq!(nilpotency_class(&pc), 3);
        let a3 = pc.power_i64(&pc.generator(1), 3);
        assert!(lcs[1].contains(&a3));
        assert!(is_metabelian(&pc));
    }

    #[test]
    fn abelian_basics() {
        let pc = abelian();
        assert_eq!(nilpotency_class(&pc), 1);
        assert!(derived_subgroup(&Subgroup::whole(&pc)).is_trivial());
        assert!(is_powerful(&pc));
    }

    #[test]
    fn agemo_examples() {
        let c9 = PcBuilder::new(3, vec![9]).build().unwrap();
        assert_eq!(agemo(&Subgroup::whole(&c9), 1).order(), BigInt::from(3));
        let e = PcBuilder::new(3, vec![3, 3]).build().unwrap();
        assert!(agemo(&Subgroup::whole(&e), 1).is_trivial());
        // not powerful, so the quotient is enumerated
        let x = extraspecial27();
        let (a, cert) = agemo_certified(&Subgroup::whole(&x), 1, 1);
        assert!(a.is_trivial());
        assert_eq!(cert, AgemoCertificate::Enumerated);
        let pc = cyclic_derived_example(3, 3).unwrap();
        let g = Subgroup::whole(&pc);
        let (a1, cert) = agemo_certified(&g, 1, 1);
        assert_eq!(cert, AgemoCertificate::Powerful);
        assert_eq!(g.index_exponent(&a1), 2);
        assert!(a1.contains(&pc.power_i64(&pc.generator(1), 3)));
        assert!(a1.contains(&pc.power_i64(&pc.generator(0), 3)));
        assert!(a1.contains_subgroup(&derived_subgroup(&g)));
    }

    #[test]
    fn powerful_examples() {
        assert!(!is_powerful(&extraspecial27()));
        assert!(is_powerful(&cyclic_derived_example(3, 3).unwrap()));
        assert!(is_powerful(&cyclic_derived_example(4, 3).unwrap()));
    }

    #[test]
    fn minimal_generators_and_rank() {
        assert_eq!(rank(&extraspecial27()), 2);
        assert_eq!(rank(&cyclic_derived_example(5, 4).unwrap()), 2);
        assert_eq!(rank(&abelian()), 2);
    }
}
