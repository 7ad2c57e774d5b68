//! One line per acceptance criterion. Criteria whose stated values the
//! toolkit does not reproduce print FAIL with the computed values; the
//! target itself fails only when a criterion's status changes.
use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use engelkit::analysis::{is_n_engel, EngelPolicy, Subgroup};
use engelkit::catalog::{self, p_gt_3_parameters, VerificationReport};
use engelkit::nq::{nilpotent_quotient, FpPresentation};
use engelkit::pc::{cyclic_derived_example, Element, PcPresentation};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 1;

struct Line {
    pass: bool,
    parts: Vec<String>,
}

impl Line {
    fn new() -> Self {
        Line { pass: true, parts: vec![] }
    }

    fn check(&mut self, label: &str, ok: bool, detail: impl std::fmt::Display) {
        self.pass &= ok;
        let detail = detail.to_string();
        let verdict = if ok { "ok" } else { "NO" };
        self.parts.push(if detail.is_empty() { format!("{label} {verdict}") } else { format!("{label} {verdict} ({detail})") });
    }

    fn time(&mut self, t: Duration, budget: Duration) {
        self.check("runtime", t <= budget, format!("{:.1}s of {}s", t.as_secs_f64(), budget.as_secs()));
    }
}

/// Verifies the entries in sequence and keeps the reports for the
/// catalog-wide criteria.
fn timed(all: &mut Vec<VerificationReport>, names: &[&str]) -> (Vec<VerificationReport>, Duration) {
    let t = Instant::now();
    let r: Vec<VerificationReport> = names.iter().map(|n| catalog::verify(&catalog::find(n).unwrap(), SEED)).collect();
    let elapsed = t.elapsed();
    all.extend(r.iter().cloned());
    (r, elapsed)
}

fn criterion1(all: &mut Vec<VerificationReport>) -> Line {
    let mut l = Line::new();
    let (reps, t) = timed(all, &["cyclic_3_3", "cyclic_5_4", "cyclic_4_3"]);
    for r in &reps {
        let vacuous = r.engel.iter().any(|v| Some(v.n) == r.class && v.holds);
        l.check(
            &r.name,
            r.passed() && vacuous && r.nq.as_ref().is_some_and(|n| n.consistent),
            format!("order {}, class {}, G' cyclic of order {}", r.order.as_deref().unwrap_or("?"), r.class.unwrap_or(0), r.derived_order.as_deref().unwrap_or("?")),
        );
    }
    l.time(t, Duration::from_secs(5));
    l
}

fn criterion2(all: &mut Vec<VerificationReport>) -> Line {
    let mut l = Line::new();
    let (reps, t) = timed(all, &["rank3_p2"]);
    let r = &reps[0];
    let nq = r.nq.as_ref().unwrap();
    l.check("nq stabilizes", nq.stabilized, format!("layers {:?}", nq.layers));
    l.check("class 4", r.class == Some(4), format!("order {}", r.order.as_deref().unwrap_or("?")));
    l.check("powerful", r.powerful == Some(true), "");
    l.check("metabelian", r.metabelian == Some(true), "");
    let engel: Vec<String> = r.engel.iter().filter(|v| v.n == 3).map(|v| format!("{} {}", v.policy, v.holds)).collect();
    l.check("3-Engel", r.engel.iter().filter(|v| v.n == 3).all(|v| v.holds) && engel.len() == 2, engel.join(", "));
    l.check("relators", nq.relators_holding == nq.relators, format!("{}/{} hold", nq.relators_holding, nq.relators));
    l.check("no discrepancies", r.passed(), r.discrepancies.len());
    l.time(t, Duration::from_secs(180));
    l
}

fn criterion3(all: &mut Vec<VerificationReport>) -> Line {
    let mut l = Line::new();
    let (reps, t) = timed(all, &["rank4_p3"]);
    let r = &reps[0];
    l.check("class 4", r.class == Some(4), format!("computed class {}", r.class.unwrap_or(0)));
    l.check("powerful", r.powerful == Some(true), "");
    l.check("3-Engel", r.three_engel == Some(true), "grid");
    l.check("gamma5 = 1", r.lower_central.len() <= 5, format!("series {}", r.lower_central.join(" > ")));
    let b = r.bound("class bound for (p, rank)").unwrap();
    l.check("rank bound", b.holds == Some(true) && r.class.unwrap_or(9) <= 4, format!("rank {}, {}", r.rank.unwrap_or(0), b.detail));
    l.time(t, Duration::from_secs(180));
    l
}

fn criterion4(all: &mut Vec<VerificationReport>) -> Line {
    let mut l = Line::new();
    let (alpha, gamma) = p_gt_3_parameters(7).unwrap();
    l.check("parameters", true, format!("alpha {alpha}, gamma {gamma}"));
    let (reps, t) = timed(all, &["rank4_p7"]);
    let r = &reps[0];
    l.check("class 4", r.class == Some(4), format!("order {}", r.order.as_deref().unwrap_or("?")));
    l.check("powerful", r.powerful == Some(true), "");
    let grid = r.engel.iter().find(|v| v.n == 3).unwrap();
    l.check("3-Engel", grid.holds, format!("grid finds a failing pair after {} evaluations", grid.evaluations));
    l.time(t, Duration::from_secs(300));
    l
}

fn criterion5(all: &mut Vec<VerificationReport>) -> Line {
    let mut l = Line::new();
    let (reps, t) = timed(all, &["lie_s5"]);
    let c = reps[0].lie.as_ref().unwrap();
    l.check("dim L = 24", c.l_dim == 24, format!("computed {}", c.l_dim));
    l.check("dim gamma5(L) = 6", c.l_gamma5_dim == 6, format!("computed {}", c.l_gamma5_dim));
    l.check("[K,K] <= 5K", c.containment_holds && c.containment_factor == 5, format!("gcd {}", c.structure_gcd));
    l.check("g2 of order 5^5", c.g2_order == "5^5", format!("computed {}", c.g2_order));
    l.check("[a,b,c,b,c] nonzero", c.abcbc_image_nonzero, "");
    l.check("relators", c.relators_hold() && c.engel_violations == 0, format!("{} linearized instances, {} samples", c.engel_instances, c.engel_samples));
    l.check("gamma5(K/J) != 0", c.gamma5_nonzero, format!("class {}", c.class));
    l.time(t, Duration::from_secs(30));
    l
}

fn criterion6(all: &mut Vec<VerificationReport>) -> Line {
    let mut l = Line::new();
    let (reps, t) = timed(all, &["lie_s16"]);
    let c = reps[0].lie.as_ref().unwrap();
    l.check("rank 24", c.k_rank == 24, format!("computed {}", c.k_rank));
    l.check("[K,K] <= 4K", c.containment_holds && c.containment_factor == 4, format!("gcd {}", c.structure_gcd));
    l.check("gamma5 != 0", c.gamma5_nonzero, format!("class {}", c.class));
    l.check("f6 flagged", c.f6.substituted, format!("{} used for {}", c.f6.used, c.f6.printed));
    l.time(t, Duration::from_secs(30));
    l
}

fn criterion7(all: &[VerificationReport]) -> Line {
    let mut l = Line::new();
    let mut exercised = BTreeSet::new();
    let mut laws = BTreeSet::new();
    for r in all.iter().filter(|r| r.three_engel == Some(true)) {
        let ran: Vec<_> = r.identity_suites.iter().filter(|s| s.skipped.is_none()).collect();
        let ok = ran.iter().all(|s| s.samples >= 500 && s.violations == 0);
        laws.extend(r.identity_suites.iter().map(|s| s.law.clone()));
        exercised.extend(ran.iter().map(|s| s.law.clone()));
        l.check(&r.name, ok && !ran.is_empty(), format!("{} suites, min {} tuples", ran.len(), r.suite_samples_min()));
    }
    l.check("every law exercised", exercised == laws, format!("{} laws", laws.len()));
    l
}

fn criterion8(all: &[VerificationReport]) -> Line {
    let mut l = Line::new();
    for r in all.iter().filter(|r| r.nq.is_some()) {
        let g5 = r.bound("gamma5^20 = 1").and_then(|b| b.holds) == Some(true);
        let g6 = r.bound("gamma6 = 1").and_then(|b| b.holds) == Some(true);
        let certified = r.three_engel == Some(true) && r.powerful == Some(true);
        let branch = r.bound("class bound for (p, rank)");
        let ok = g5 && g6 && (!certified || branch.and_then(|b| b.holds) == Some(true));
        l.check(&r.name, ok, branch.map_or("powers only".to_string(), |b| b.detail.clone()));
    }
    let p3 = all.iter().find(|r| r.name == "rank4_p3").unwrap();
    l.check("G^9 powerful on rank4_p3", p3.bound("G^9 powerful").and_then(|b| b.holds) == Some(true), "");
    l
}

fn corpus() -> Vec<(String, PcPresentation)> {
    let mut v: Vec<(String, PcPresentation)> =
        [(3, 2), (4, 2), (5, 2), (3, 3), (7, 2)].iter().map(|&(q, n)| (format!("cyclic {q} {n}"), cyclic_derived_example(q, n).unwrap())).collect();
    let texts = [
        ("D8", "%p 2\ngens a b\nrel [a,b] = a^(-2)\npow a^(p^2) = 1\npow b^p = 1", 6),
        ("D16", "%p 2\ngens a b\nrel [a,b] = a^(-2)\npow a^(p^3) = 1\npow b^p = 1", 6),
        ("D32", "%p 2\ngens a b\nrel [a,b] = a^(-2)\npow a^(p^4) = 1\npow b^p = 1", 6),
        ("Q8", "%p 2\ngens a b\nrel [a,b] = a^(-2)\npow a^(p^2) = 1\npow b^p = a^p", 6),
        ("Q16", "%p 2\ngens a b\nrel [a,b] = a^(-2)\npow a^(p^3) = 1\npow b^p = a^(p^2)", 6),
        ("SD16", "%p 2\ngens a b\nrel [a,b] = a^2\npow a^(p^3) = 1\npow b^p = 1", 6),
        ("M16", "%p 2\ngens a b\nrel [a,b] = a^4\npow a^(p^3) = 1\npow b^p = 1", 6),
        ("Heisenberg 27", "%p 3\ngens a b\npow a^p = 1\npow b^p = 1\nrel [a,b,a]\nrel [a,b,b]", 6),
        ("Heisenberg 125", "%p 5\ngens a b\npow a^p = 1\npow b^p = 1\nrel [a,b,a]\nrel [a,b,b]", 6),
        ("C4 x C2", "%p 2\ngens a b\npow a^4 = 1\npow b^2 = 1\nrel [a,b]", 6),
        ("C9 x C3", "%p 3\ngens a b\npow a^9 = 1\npow b^3 = 1\nrel [a,b]", 6),
        ("<a,b | a^4, b^4> class 2", "%p 2\ngens a b\npow a^4 = 1\npow b^4 = 1", 2),
        ("<a,b | a^4, b^4> class 3", "%p 2\ngens a b\npow a^4 = 1\npow b^4 = 1", 3),
        ("<a,b | a^3, b^3> class 3", "%p 3\ngens a b\npow a^3 = 1\npow b^3 = 1", 3),
        ("<a,b,c | a^2, b^2, c^2> class 2", "%p 2\ngens a b c\npow a^2 = 1\npow b^2 = 1\npow c^2 = 1", 2),
        ("<a,b | a^2, b^4> class 4", "%p 2\ngens a b\npow a^2 = 1\npow b^4 = 1", 4),
        ("<a,b | a^9, b^3, [a,b,b]> class 3", "%p 3\ngens a b\npow a^9 = 1\npow b^3 = 1\nrel [a,b,b]", 3),
        ("<a,b | a^2, b^2> class 5", "%p 2\ngens a b\npow a^2 = 1\npow b^2 = 1", 5),
    ];
    for (name, text, c) in texts {
        let q = nilpotent_quotient(&FpPresentation::parse(text).unwrap(), c).unwrap();
        v.push((name.to_string(), q.pc));
    }
    v
}

fn brute_closure(pc: &PcPresentation, gens: &[Element]) -> usize {
    let mut seen: HashSet<Element> = HashSet::from([pc.identity()]);
    let mut frontier = vec![pc.identity()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = pc.multiply(&x, g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len()
}

fn criterion9() -> Line {
    let mut l = Line::new();
    let groups = corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut engel_pairs, mut engel_ok, mut sub_checks, mut sub_ok) = (0, 0, 0, 0);
    let mut max_order = num_bigint::BigInt::from(1);
    for (name, pc) in &groups {
        assert!(pc.is_consistent(), "{name}");
        max_order = max_order.max(pc.order());
        let els = Subgroup::whole(pc).elements(1 << 12).unwrap();
        for n in 1..=4 {
            let g = is_n_engel(pc, n, EngelPolicy::GRID).unwrap();
            let e = is_n_engel(pc, n, EngelPolicy::EXHAUSTIVE).unwrap();
            engel_pairs += 1;
            if g.holds == e.holds {
                engel_ok += 1;
            } else {
                l.check(&format!("{name} n={n}"), false, format!("grid {} exhaustive {}", g.holds, e.holds));
            }
        }
        for k in 1..=3 {
            for _ in 0..4 {
                let gens: Vec<Element> = els.choose_multiple(&mut rng, k).cloned().collect();
                let s = Subgroup::closure(pc, &gens, false);
                let nc = Subgroup::closure(pc, &gens, true);
                sub_checks += 2;
                // normal closure: the conjugates under the pc generators and their iterates
                let brute_normal = {
                    let mut cur = gens.clone();
                    loop {
                        let size = brute_closure(pc, &cur);
                        let mut next = cur.clone();
                        for g in &cur {
                            for i in 0..pc.n() {
                                next.push(pc.conjugate(g, &pc.generator(i)));
                            }
                        }
                        next.sort();
                        next.dedup();
                        if brute_closure(pc, &next) == size {
                            break size;
                        }
                        cur = next;
                    }
                };
                if s.order() == brute_closure(pc, &gens).into() {
                    sub_ok += 1;
                }
                if nc.order() == brute_normal.into() {
                    sub_ok += 1;
                }
            }
        }
        if els.len() <= 256 {
            let comms: Vec<Element> = els.iter().flat_map(|x| els.iter().map(|y| pc.commutator(x, y))).collect::<BTreeSet<_>>().into_iter().collect();
            let d = engelkit::analysis::derived_subgroup(&Subgroup::whole(pc));
            sub_checks += 1;
            if d.order() == brute_closure(pc, &comms).into() {
                sub_ok += 1;
            }
        }
    }
    l.check("corpus", groups.len() >= 20 && max_order <= (1 << 12).into(), format!("{} groups, largest order {max_order}", groups.len()));
    l.check("grid = exhaustive", engel_ok == engel_pairs, format!("{engel_ok}/{engel_pairs} verdicts"));
    l.check("subgroup orders", sub_ok == sub_checks, format!("{sub_ok}/{sub_checks} match brute force"));
    l
}

fn main() {
    let mut all = Vec::new();
    let lines: Vec<(usize, Line, bool)> = vec![
        (1, criterion1(&mut all), true),
        (2, criterion2(&mut all), true),
        (3, criterion3(&mut all), false),
        (4, criterion4(&mut all), false),
        (5, criterion5(&mut all), false),
        (6, criterion6(&mut all), false),
        (7, criterion7(&all), true),
        (8, criterion8(&all), true),
        (9, criterion9(), true),
    ];
    let mut changed = vec![];
    for (k, line, known) in &lines {
        println!("criterion {k}: {} | {}", if line.pass { "PASS" } else { "FAIL" }, line.parts.join("; "));
        if line.pass != *known {
            changed.push(*k);
        }
    }
    if !changed.is_empty() {
        eprintln!("status changed for criteria {changed:?}");
        std::process::exit(1);
    }
}
