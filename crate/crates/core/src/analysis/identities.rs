//! Commutator identity suites for 3-Engel groups and the class/power
//! bounds they feed into. Every check samples tuples from a seeded
//! generator and records violations instead of failing fast.
use rand::Rng;
use serde::Serialize;

use super::{
    agemo_certified, derived_subgroup, gamma, is_metabelian, is_powerful_subgroup, lower_central_series, rng,
    AgemoCertificate, Subgroup,
};
use crate::pc::{Element, PcPresentation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub relation: String,
    pub tuple: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub seed: u64,
    pub samples: usize,
    /// Why the law was not evaluated, when its hypotheses fail.
    pub skipped: Option<String>,
    pub violations: Vec<Violation>,
}

impl LawReport {
    fn new(law: &str, seed: u64) -> Self {
        LawReport { law: law.into(), seed, samples: 0, skipped: None, violations: Vec::new() }
    }

    fn skip(mut self, why: &str) -> Self {
        self.skipped = Some(why.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, relation: &str, tuple: &[&Element]) {
        // a handful of witnesses is enough to debug with
        if self.violations.len() < 16 {
            self.violations.push(Violation { relation: relation.into(), tuple: tuple.iter().map(|x| x.to_string()).collect() });
        }
    }
}

struct Ctx<'a> {
    pc: &'a PcPresentation,
}

impl Ctx<'_> {
    fn c(&self, xs: &[&Element]) -> Element {
        let mut w = xs[0].clone();
        for x in &xs[1..] {
            w = self.pc.commutator(&w, x);
        }
        w
    }

    fn mul(&self, xs: &[Element]) -> Element {
        self.pc.product(xs)
    }

    fn pow(&self, x: &Element, k: i64) -> Element {
        self.pc.power_i64(x, k)
    }

    /// `lhs == rhs` modulo the normal subgroup `n`.
    fn congruent(&self, lhs: &Element, rhs: &Element, n: &Subgroup) -> bool {
        n.contains(&self.pc.multiply(lhs, &self.pc.invert(rhs)))
    }
}

/// Five relations that hold modulo `gamma_5` in any 3-Engel group.
pub fn check_gn_gamma5(pc: &PcPresentation, samples: usize, seed: u64) -> LawReport {
    let series = lower_central_series(pc);
    let g5 = gamma(&series, 5);
    let cx = Ctx { pc };
    let mut rep = LawReport::new("gamma5 relations", seed);
    let mut r = rng(seed);
    let one = pc.identity();
    for _ in 0..samples {
        let (a, b, c) = (pc.random_element(&mut r), pc.random_element(&mut r), pc.random_element(&mut r));
        let caab = cx.c(&[&c, &a, &a, &b]);
        let caba = cx.c(&[&c, &a, &b, &a]);
        let cbaa = cx.c(&[&c, &b, &a, &a]);
        let cabb = cx.c(&[&c, &a, &b, &b]);
        let cbab = cx.c(&[&c, &b, &a, &b]);
        let cbba = cx.c(&[&c, &b, &b, &a]);
        let checks: [(&str, Element, Element); 5] = [
            ("(i) product of six", cx.mul(&[caab.clone(), caba.clone(), cbaa.clone(), cabb, cbab, cbba]), one.clone()),
            ("(ii) squares", cx.mul(&[cx.pow(&caab, 2), cx.pow(&caba, 2), cx.pow(&cbaa, 2)]), one.clone()),
            ("(iii) [b,a,a,c]", cx.c(&[&b, &a, &a, &c]), cx.mul(&[cx.pow(&cbaa, -3), cx.pow(&caab, -3)])),
            ("(iv) fourth and sixth powers", cx.mul(&[cx.pow(&caab, 4), cx.pow(&cbaa, 6)]), one.clone()),
            ("(v) [c,b,a,a]^2", cx.pow(&cbaa, 2), cx.pow(&caba, 4)),
        ];
        for (name, lhs, rhs) in &checks {
            if !cx.congruent(lhs, rhs, &g5) {
                rep.record(name, &[&a, &b, &c]);
            }
        }
        rep.samples += 1;
    }
    rep
}

/// Six relations modulo `gamma_6`, with `w_1 = [c,a,a,b,b]` and friends.
pub fn check_gn_gamma6(pc: &PcPresentation, samples: usize, seed: u64) -> LawReport {
    let series = lower_central_series(pc);
    let g6 = gamma(&series, 6);
    let cx = Ctx { pc };
    let mut rep = LawReport::new("gamma6 relations", seed);
    let mut r = rng(seed);
    let one = pc.identity();
    for _ in 0..samples {
        let (a, b, c) = (pc.random_element(&mut r), pc.random_element(&mut r), pc.random_element(&mut r));
        let w1 = cx.c(&[&c, &a, &a, &b, &b]);
        let w2 = cx.c(&[&c, &a, &b, &a, &b]);
        let w3 = cx.c(&[&c, &a, &b, &b, &a]);
        let w4 = cx.c(&[&c, &b, &a, &a, &b]);
        let w5 = cx.c(&[&c, &b, &a, &b, &a]);
        let w6 = cx.c(&[&c, &b, &b, &a, &a]);
        let w12 = cx.mul(&[cx.pow(&w1, -1), cx.pow(&w2, -1)]);
        let checks: [(&str, Element, Element); 10] = [
            ("(i) [c,a,b,a,a]", cx.c(&[&c, &a, &b, &a, &a]), one.clone()),
            ("(ii) [c,a,a,b,a]", cx.c(&[&c, &a, &a, &b, &a]), one.clone()),
            ("(iii) w3 = w1^-1 w2^-1", w3.clone(), w12.clone()),
            ("(iii) w4 = w1^-1 w2^-1", w4, w12),
            ("(iii) w2 = w5", w2.clone(), w5),
            ("(iii) w1 = w6", w1.clone(), w6),
            ("(iv) [b,a,a,b,c]", cx.c(&[&b, &a, &a, &b, &c]), one.clone()),
            ("(v) w2 = w1^3", w2, cx.pow(&w1, 3)),
            ("(v) w3 = w1^-4", w3, cx.pow(&w1, -4)),
            ("(vi) w1^10", cx.pow(&w1, 10), one.clone()),
        ];
        for (name, lhs, rhs) in &checks {
            if !cx.congruent(lhs, rhs, &g6) {
                rep.record(name, &[&a, &b, &c]);
            }
        }
        rep.samples += 1;
    }
    rep
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// `[x_1, ..., x_n, y]` lies in `<[y, x_s(1), ..., x_s(n)] : s> gamma_{n+2}`.
pub fn check_first_entry(pc: &PcPresentation, n: usize, samples: usize, seed: u64) -> LawReport {
    let series = lower_central_series(pc);
    let tail = gamma(&series, n + 2).igs_owned();
    let cx = Ctx { pc };
    let mut rep = LawReport::new(&format!("first entry, n = {n}"), seed);
    let mut r = rng(seed);
    let perms = permutations(n);
    for _ in 0..samples {
        let xs: Vec<Element> = (0..n).map(|_| pc.random_element(&mut r)).collect();
        let y = pc.random_element(&mut r);
        let mut lhs: Vec<&Element> = xs.iter().collect();
        lhs.push(&y);
        let target = cx.c(&lhs);
        let mut gens = tail.clone();
        for s in &perms {
            let mut w: Vec<&Element> = vec![&y];
            w.extend(s.iter().map(|&k| &xs[k]));
            gens.push(cx.c(&w));
        }
        if !Subgroup::closure(pc, &gens, false).contains(&target) {
            rep.record("membership", &lhs);
        }
        rep.samples += 1;
    }
    rep
}

/// Power-commutator laws, each evaluated only where its hypotheses hold:
/// the power lift `[x^{p^i}, y..]^p = [x, y..]^{p^{i+1}} = 1` when
/// `gamma_n^p = gamma_{n+1} = 1` and `x^{p^i} in G'`; the
/// linearity `[x^{4k}, a, b, c] = [x, a, b, c]^{4k}` for metabelian groups
/// with `gamma_5^2 = gamma_6 = 1`; and the square identity
/// `[a,b,c,d]^2 [a,c,b,d]^2 [a,d,c,b]^2 in gamma_5` for metabelian 3-Engel
/// 2-groups.
pub fn check_power_commutator_laws(pc: &PcPresentation, samples: usize, seed: u64, three_engel: bool) -> Vec<LawReport> {
    let series = lower_central_series(pc);
    let class = series.len() - 1;
    let p = pc.prime();
    let cx = Ctx { pc };
    let g = Subgroup::whole(pc);
    let derived = derived_subgroup(&g);
    let metabelian = is_metabelian(pc);
    let mut out = Vec::new();

    // power lift: smallest n >= 2 with gamma_n^p = gamma_{n+1} = 1
    let mut lift = LawReport::new("power lift", seed);
    if class == 0 {
        out.push(lift.skip("trivial group"));
    } else {
        let top_killed = agemo_certified(&gamma(&series, class), 1, seed).0.is_trivial();
        let n = if top_killed { class.max(2) } else { class + 1 };
        let mut r = rng(seed);
        for _ in 0..samples {
            let x = pc.random_element(&mut r);
            let ys: Vec<Element> = (0..n.saturating_sub(2)).map(|_| pc.random_element(&mut r)).collect();
            let (mut i, mut xp) = (0u32, x.clone());
            while !derived.contains(&xp) {
                xp = cx.pow(&xp, p as i64);
                i += 1;
            }
            let mut a: Vec<&Element> = vec![&xp];
            a.extend(ys.iter());
            let mut b: Vec<&Element> = vec![&x];
            b.extend(ys.iter());
            let lhs = cx.pow(&cx.c(&a), p as i64);
            let rhs = pc.power(&cx.c(&b), &num_traits::pow(num_bigint::BigInt::from(p), i as usize + 1));
            if !lhs.is_identity() || !rhs.is_identity() {
                lift.record(&format!("n = {n}, i = {i}"), &b);
            }
            lift.samples += 1;
        }
        out.push(lift);
    }

    let g5 = gamma(&series, 5);
    let g5_sq_trivial = if p == 2 { agemo_certified(&g5, 1, seed).0.is_trivial() } else { g5.is_trivial() };
    let hp_ok = metabelian && gamma(&series, 6).is_trivial() && g5_sq_trivial;
    let mut lin = LawReport::new("power linearity in the first entry", seed);
    if !hp_ok {
        out.push(lin.skip("needs a metabelian group with gamma5^2 = gamma6 = 1"));
    } else {
        let mut r = rng(seed ^ 0x5eed);
        for _ in 0..samples {
            let (x, a, b, c) = (pc.random_element(&mut r), pc.random_element(&mut r), pc.random_element(&mut r), pc.random_element(&mut r));
            let k = 4 * r.gen_range(1..=64i64);
            let lhs = cx.c(&[&cx.pow(&x, k), &a, &b, &c]);
            let rhs = cx.pow(&cx.c(&[&x, &a, &b, &c]), k);
            if lhs != rhs {
                lin.record(&format!("k = {k}"), &[&x, &a, &b, &c]);
            }
            lin.samples += 1;
        }
        out.push(lin);
    }

    let mut sq = LawReport::new("metabelian square identity", seed);
    if !(p == 2 && metabelian && three_engel) {
        out.push(sq.skip("needs a metabelian 3-Engel 2-group"));
    } else {
        let mut r = rng(seed ^ 0xabcd);
        for _ in 0..samples {
            let v: Vec<Element> = (0..4).map(|_| pc.random_element(&mut r)).collect();
            let (a, b, c, d) = (&v[0], &v[1], &v[2], &v[3]);
            let w = cx.mul(&[
                cx.pow(&cx.c(&[a, b, c, d]), 2),
                cx.pow(&cx.c(&[a, c, b, d]), 2),
                cx.pow(&cx.c(&[a, d, c, b]), 2),
            ]);
            if !g5.contains(&w) {
                sq.record("membership in gamma5", &[a, b, c, d]);
            }
            sq.samples += 1;
        }
        out.push(sq);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    /// `None` when the check does not apply.
    pub holds: Option<bool>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds != Some(false))
    }

    pub fn get(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn cert_note(c: AgemoCertificate) -> &'static str {
    match c {
        AgemoCertificate::Powerful => "powerful, power subgroup from generators",
        AgemoCertificate::Enumerated => "power subgroup enumerated",
        AgemoCertificate::Sampled => "power subgroup sampled",
    }
}

/// Power and series bounds: `gamma_5^20 = 1`, `gamma_6 = 1`, the
/// powerful-series inclusions, and powerfulness of `G^{p^i}` (of
/// `G^{2^{i+1}}` when p = 2) once the class is at most `p^i`.
pub fn subgroup_power_and_bounds(pc: &PcPresentation, seed: u64) -> BoundsReport {
    let series = lower_central_series(pc);
    let class = series.len() - 1;
    let p = pc.prime();
    let mut checks = Vec::new();

    let g5 = gamma(&series, 5);
    let v = match p {
        2 => 2,
        5 => 1,
        _ => 0,
    };
    let (killed, note) = if v == 0 {
        (g5.is_trivial(), "gamma5 must be trivial")
    } else {
        let (a, c) = agemo_certified(&g5, v, seed);
        (a.is_trivial(), cert_note(c))
    };
    checks.push(BoundCheck { name: "gamma5^20 = 1".into(), holds: Some(killed), detail: format!("|gamma5| = {}; {note}", g5.order()) });
    let g6 = gamma(&series, 6);
    checks.push(BoundCheck { name: "gamma6 = 1".into(), holds: Some(g6.is_trivial()), detail: format!("|gamma6| = {}", g6.order()) });

    let g = Subgroup::whole(pc);
    if is_powerful_subgroup(&g) {
        for m in 1..class.max(1) {
            let k = if m == 1 { super::powerful_exponent(p) } else { 1 };
            let (pow, c) = agemo_certified(&gamma(&series, m), k, seed);
            let next = gamma(&series, m + 1);
            checks.push(BoundCheck {
                name: format!("gamma{} <= gamma{}^{}", m + 1, m, p.pow(k)),
                holds: Some(pow.contains_subgroup(&next)),
                detail: cert_note(c).into(),
            });
        }
    } else {
        checks.push(BoundCheck { name: "powerful series".into(), holds: None, detail: "group is not powerful".into() });
    }

    // smallest i >= 1 with class <= p^i, and the next one
    let mut i = 1;
    while (p.pow(i) as usize) < class {
        i += 1;
    }
    for i in [i, i + 1] {
        let k = if p == 2 { i + 1 } else { i };
        let (h, c) = agemo_certified(&g, k, seed);
        checks.push(BoundCheck {
            name: format!("G^{} powerful", p.pow(k)),
            holds: Some(is_powerful_subgroup(&h)),
            detail: format!("class {class} <= {}; |G^{}| = {}; {}", p.pow(i), p.pow(k), h.order(), cert_note(c)),
        });
    }
    BoundsReport { checks }
}

/// Best class bound for a powerful 3-Engel p-group of rank `r`, with a
/// short description of the branch used. Metabelian groups of rank >= 3
/// get the sharper bound.
pub fn engel_class_bound(p: u64, r: usize, metabelian: bool) -> (usize, String) {
    let mut best = match (p, r) {
        (_, 0) => (0, "trivial group".to_string()),
        (_, 1) => (1, "cyclic group".into()),
        // powerful of rank 2 has cyclic derived subgroup: class <= n
        (_, 2) => (3, "rank 2, cyclic derived subgroup".into()),
        (5, 3) => (3, "rank 3, p = 5".into()),
        (2, 3) => (4, "rank 3, p = 2".into()),
        (2 | 5, 4..=5) => (4, "rank 4 or 5, p in {2, 5}".into()),
        (2 | 5, _) => (5, "p in {2, 5}".into()),
        (_, 3) => (3, "rank 3, p not in {2, 5}".into()),
        _ => (4, "rank >= 4, p not in {2, 5}".into()),
    };
    if metabelian && r >= 3 {
        let m = if p == 2 { 4 } else { 3 };
        if m < best.0 {
            best = (m, format!("metabelian, rank >= 3, {}", if p == 2 { "p = 2" } else { "p odd" }));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pc::{cyclic_derived_example, PcBuilder};

    fn class2() -> PcPresentation {
        PcBuilder::new(3, vec![3, 3, 3]).commutator(1, 0, vec![0, 0, 1]).build().unwrap()
    }

    #[test]
    fn class_two_passes_everything() {
        let pc = class2();
        assert!(check_gn_gamma5(&pc, 50, 1).passed());
        assert!(check_gn_gamma6(&pc, 50, 1).passed());
        for n in 1..=3 {
            assert!(check_first_entry(&pc, n, 30, 2).passed());
        }
    }

    #[test]
    fn first_entry_on_cyclic_example() {
        let pc = cyclic_derived_example(3, 3).unwrap();
        let r = check_first_entry(&pc, 2, 100, 9);
        assert!(r.passed());
        assert_eq!(r.samples, 100);
    }

    #[test]
    fn abelian_laws_pass() {
        let pc = PcBuilder::new(2, vec![8, 2]).build().unwrap();
        for r in check_power_commutator_laws(&pc, 50, 3, true) {
            assert!(r.passed(), "{}", r.law);
        }
    }

    #[test]
    fn gamma5_check_detects_a_broken_identity() {
        // class 4 cyclic group is not 3-Engel: (i) must fail somewhere
        // for generators c = a, a = b, b = b or similar triples
        let pc = cyclic_derived_example(5, 4).unwrap();
        let r = check_gn_gamma5(&pc, 200, 4);
        assert!(!r.passed());
    }

    #[test]
    fn bounds_on_small_class() {
        let pc = cyclic_derived_example(3, 3).unwrap();
        let b = subgroup_power_and_bounds(&pc, 5);
        assert!(b.passed(), "{b:?}");
        assert_eq!(b.get("gamma5^20 = 1").unwrap().holds, Some(true));
        assert_eq!(b.get("gamma2 <= gamma1^3").unwrap().holds, Some(true));
    }

    #[test]
    fn class_bounds_by_branch() {
        assert_eq!(engel_class_bound(3, 3, false).0, 3);
        assert_eq!(engel_class_bound(7, 4, false).0, 4);
        assert_eq!(engel_class_bound(2, 3, false).0, 4);
        assert_eq!(engel_class_bound(5, 3, false).0, 3);
        assert_eq!(engel_class_bound(5, 5, false).0, 4);
        assert_eq!(engel_class_bound(2, 14, false).0, 5);
        assert_eq!(engel_class_bound(2, 7, true).0, 4);
        assert_eq!(engel_class_bound(3, 7, true).0, 3);
    }
}
