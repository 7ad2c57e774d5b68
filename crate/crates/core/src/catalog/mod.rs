//! The example catalog and the verification pipeline behind the CLI.
//!
//! Each entry states what is expected of a group (or Lie ring scenario);
//! [`verify`] recomputes everything from the presentation and lists every
//! mismatch as a [`Discrepancy`].
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{
    self, check_first_entry, check_gn_gamma5, check_gn_gamma6, check_power_commutator_laws, derived_subgroup, gamma,
    is_n_engel, lower_central_series, minimal_generators, order_string, subgroup_power_and_bounds, engel_class_bound,
    BoundCheck, EngelPolicy, EngelVerdict, LawReport, Subgroup,
};
use crate::lie::{certify, LieCertificate, LieScenario};
use crate::nq::{epimorphism_check, nilpotent_quotient, FpPresentation};
use crate::pc::is_prime;

pub const CLASS_BOUND: usize = 6;
pub const SUITE_SAMPLES: usize = 500;
pub const LIE_SAMPLES: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Source {
    /// Text of a `.fp` presentation.
    Fp(String),
    /// Lie ring scenario with the given scale `s`.
    Lie(u64),
}

/// Checks beyond the common fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Extra {
    DerivedCyclic { order: String },
    Gamma5Trivial,
    /// A named bound check must hold.
    Bound { name: String },
    RandomEngel { samples: usize },
    LieDim(usize),
    LieGamma5Dim(usize),
    LatticeRank(usize),
    Containment(u64),
    G2Order(String),
    AbcbcNonzero,
    LieRelatorsHold,
    F6Flagged,
}

/// `None` means no expectation; fields listed in `determined_by_toolkit`
/// hold frozen toolkit output rather than stated values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub order: Option<String>,
    pub class: Option<usize>,
    pub powerful: Option<bool>,
    pub metabelian: Option<bool>,
    pub engel_n: Option<usize>,
    pub extras: Vec<Extra>,
    pub determined_by_toolkit: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleSpec {
    pub name: String,
    pub p: u64,
    pub source: Source,
    pub expected: Expected,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("{0} is not an odd prime or 4")]
    CyclicParameter(u64),
    #[error("n must be at least 2, got {0}")]
    CyclicLength(u32),
    #[error("{0} is not a prime greater than 3")]
    LargePrime(u64),
    #[error("no catalog entry named {0}")]
    Unknown(String),
}

/// `<a, b | [a,b] = a^q, a^{q^n} = b^{q^{n-1}} = 1>` for q an odd prime or 4.
pub fn build_cyclic_example(q: u64, n: u32) -> Result<ExampleSpec, CatalogError> {
    if !(q == 4 || (q > 2 && is_prime(q))) {
        return Err(CatalogError::CyclicParameter(q));
    }
    if n < 2 {
        return Err(CatalogError::CyclicLength(n));
    }
    let prime = if q == 4 { 2 } else { q };
    let header = if q == 4 { "%p 4\n%prime 2\n".to_string() } else { format!("%p {q}\n") };
    let text = format!(
        "# cyclic derived subgroup, class n = {n}\n{header}gens a b\nrel [a,b] = a^p\npow a^(p^{n}) = 1\npow b^(p^{}) = 1\n",
        n - 1
    );
    let log = if q == 4 { 2 } else { 1 };
    Ok(ExampleSpec {
        name: format!("cyclic_{q}_{n}"),
        p: prime,
        source: Source::Fp(text),
        expected: Expected {
            order: Some(order_string(prime, log * (2 * n - 1))),
            class: Some(n as usize),
            powerful: Some(true),
            engel_n: Some(n as usize),
            extras: vec![Extra::DerivedCyclic { order: order_string(prime, log * (n - 1)) }],
            ..Default::default()
        },
    })
}

/// Inverse of `a` modulo `m`, when it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// `(alpha, gamma)` for the rank-4 family: `alpha = -5r mod p^9`,
/// `gamma = -11s mod p^11` with `3r = 1 (p^9)` and `9s = 1 (p^11)`.
pub fn p_gt_3_parameters(p: u64) -> Result<(BigInt, BigInt), CatalogError> {
    if p <= 3 || !is_prime(p) {
        return Err(CatalogError::LargePrime(p));
    }
    let m9 = BigInt::from(p).pow(9);
    let m11 = BigInt::from(p).pow(11);
    let r = mod_inverse(&3.into(), &m9).expect("p > 3");
    let s = mod_inverse(&9.into(), &m11).expect("p > 3");
    Ok(((BigInt::from(-5) * r).mod_floor(&m9), (BigInt::from(-11) * s).mod_floor(&m11)))
}

pub fn p_gt_3_text(p: u64) -> Result<String, CatalogError> {
    let (alpha, gamma) = p_gt_3_parameters(p)?;
    Ok(format!(
        "# powerful 3-Engel p-group of class 4 on four generators, p = {p}
# alpha = -5r mod p^9, gamma = -11s mod p^11 with 3r = 1 mod p^9, 9s = 1 mod p^11
%p {p}
gens a b c d
rel [b,c] = c^(p^4)
rel [b,d] = b^(p^3)
rel [c,d] = a^p
rel [a,b] = a^(-p^4) c^(p^6)
rel [a,c] = 1
rel [a,d] = a^({alpha}*p^3) c^({gamma}*p^5)
pow c^(p^9) = a^(-3*p^7)
pow a^(p^9) = 1
pow b^(p^9) = 1
pow c^(p^11) = 1
pow d^(p^8) = 1
"
    ))
}

pub fn build_p_gt_3_example(p: u64) -> Result<ExampleSpec, CatalogError> {
    Ok(ExampleSpec {
        name: format!("rank4_p{p}"),
        p,
        source: Source::Fp(p_gt_3_text(p)?),
        expected: Expected {
            order: (p == 7).then(|| "7^34".to_string()),
            class: Some(4),
            powerful: Some(true),
            engel_n: Some(3),
            determined_by_toolkit: if p == 7 { vec!["order".into()] } else { vec![] },
            ..Default::default()
        },
    })
}

pub const RANK3_P2: &str = include_str!("../../catalog/rank3_p2.fp");
pub const RANK4_P3: &str = include_str!("../../catalog/rank4_p3.fp");

fn lie_example(s: u64) -> ExampleSpec {
    let prime = if s.is_multiple_of(2) { 2 } else { s };
    let extras = if s == 5 {
        vec![
            Extra::LieDim(24),
            Extra::LieGamma5Dim(6),
            Extra::Containment(5),
            Extra::G2Order("5^5".into()),
            Extra::AbcbcNonzero,
            Extra::LieRelatorsHold,
        ]
    } else {
        vec![Extra::LatticeRank(24), Extra::Containment(4), Extra::F6Flagged]
    };
    ExampleSpec {
        name: format!("lie_s{s}"),
        p: prime,
        source: Source::Lie(s),
        expected: Expected { class: Some(5), engel_n: Some(3), extras, ..Default::default() },
    }
}

/// Every shipped entry, sorted by name.
pub fn catalog() -> Vec<ExampleSpec> {
    let mut v: Vec<ExampleSpec> =
        [(3, 3), (5, 4), (4, 3)].iter().map(|&(q, n)| build_cyclic_example(q, n).expect("valid parameters")).collect();
    v.push(ExampleSpec {
        name: "rank3_p2".into(),
        p: 2,
        source: Source::Fp(RANK3_P2.into()),
        expected: Expected {
            order: Some("2^33".into()),
            class: Some(4),
            powerful: Some(true),
            metabelian: Some(true),
            engel_n: Some(3),
            extras: vec![Extra::Gamma5Trivial, Extra::RandomEngel { samples: 10_000 }],
            determined_by_toolkit: vec!["order".into()],
        },
    });
    v.push(ExampleSpec {
        name: "rank4_p3".into(),
        p: 3,
        source: Source::Fp(RANK4_P3.into()),
        expected: Expected {
            order: Some("3^18".into()),
            class: Some(4),
            powerful: Some(true),
            engel_n: Some(3),
            extras: vec![Extra::Gamma5Trivial, Extra::Bound { name: "G^9 powerful".into() }],
            determined_by_toolkit: vec!["order".into()],
            ..Default::default()
        },
    });
    v.push(build_p_gt_3_example(7).expect("7 is a prime > 3"));
    v.push(lie_example(5));
    v.push(lie_example(16));
    v.sort_by(|a, b| a.name.cmp(&b.name));
    v
}

pub fn find(name: &str) -> Result<ExampleSpec, CatalogError> {
    catalog().into_iter().find(|e| e.name == name).ok_or_else(|| CatalogError::Unknown(name.into()))
}

/// Entry for an arbitrary presentation with nothing expected.
pub fn adhoc(name: &str, fp: &FpPresentation) -> ExampleSpec {
    ExampleSpec { name: name.into(), p: fp.group_prime(), source: Source::Fp(fp.to_string()), expected: Expected::default() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub check: String,
    pub expected: String,
    pub computed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NqSummary {
    pub class_bound: usize,
    pub stabilized: bool,
    pub layers: Vec<u32>,
    pub consistent: bool,
    pub relators: usize,
    pub relators_holding: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub law: String,
    pub samples: usize,
    pub violations: usize,
    pub skipped: Option<String>,
}

impl From<&LawReport> for SuiteSummary {
    fn from(r: &LawReport) -> Self {
        SuiteSummary { law: r.law.clone(), samples: r.samples, violations: r.violations.len(), skipped: r.skipped.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub seed: u64,
    pub order: Option<String>,
    pub class: Option<usize>,
    /// Orders of gamma_1, gamma_2, ... down to the trivial term.
    pub lower_central: Vec<String>,
    pub rank: Option<usize>,
    pub powerful: Option<bool>,
    pub metabelian: Option<bool>,
    pub derived_order: Option<String>,
    pub derived_cyclic: Option<bool>,
    pub nq: Option<NqSummary>,
    pub engel: Vec<EngelVerdict>,
    /// Grid verdict for n = 3, which gates the identity suites.
    pub three_engel: Option<bool>,
    pub identity_suites: Vec<SuiteSummary>,
    pub bounds: Vec<BoundCheck>,
    pub lie: Option<LieCertificate>,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerificationReport {
    fn new(name: &str, seed: u64) -> Self {
        VerificationReport {
            name: name.into(),
            seed,
            order: None,
            class: None,
            lower_central: vec![],
            rank: None,
            powerful: None,
            metabelian: None,
            derived_order: None,
            derived_cyclic: None,
            nq: None,
            engel: vec![],
            three_engel: None,
            identity_suites: vec![],
            bounds: vec![],
            lie: None,
            discrepancies: vec![],
        }
    }

    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }

    fn mismatch(&mut self, check: &str, expected: impl ToString, computed: impl ToString) {
        self.discrepancies.push(Discrepancy { check: check.into(), expected: expected.to_string(), computed: computed.to_string() });
    }

    fn compare<T: PartialEq + std::fmt::Debug>(&mut self, check: &str, expected: Option<T>, computed: Option<T>) {
        if let Some(e) = expected {
            if computed.as_ref() != Some(&e) {
                let c = computed.map_or("not computed".to_string(), |c| format!("{c:?}"));
                self.mismatch(check, format!("{e:?}"), c);
            }
        }
    }

    pub fn bound(&self, name: &str) -> Option<&BoundCheck> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn suite_samples_min(&self) -> usize {
        self.identity_suites.iter().filter(|s| s.skipped.is_none()).map(|s| s.samples).min().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Independent sub-seeds for the stages of one run.
fn sub_seed(seed: u64, k: u64) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(k.wrapping_mul(0xbf58_476d_1ce4_e5b9)) ^ k
}

pub fn verify(spec: &ExampleSpec, seed: u64) -> VerificationReport {
    let mut rep = VerificationReport::new(&spec.name, seed);
    match &spec.source {
        Source::Fp(text) => verify_fp(spec, text, seed, &mut rep),
        Source::Lie(s) => verify_lie(spec, *s, seed, &mut rep),
    }
    rep
}

fn verify_fp(spec: &ExampleSpec, text: &str, seed: u64, rep: &mut VerificationReport) {
    let ex = &spec.expected;
    let fp = match FpPresentation::parse(text) {
        Ok(fp) => fp,
        Err(e) => return rep.mismatch("parse", "valid presentation", e),
    };
    let q = match nilpotent_quotient(&fp, CLASS_BOUND) {
        Ok(q) => q,
        Err(e) => return rep.mismatch("nilpotent quotient", "finite p-quotient", e),
    };
    let pc = &q.pc;
    let status = epimorphism_check(&fp, pc, &q.images).unwrap_or_default();
    let consistent = pc.is_consistent();
    rep.nq = Some(NqSummary {
        class_bound: CLASS_BOUND,
        stabilized: q.stabilized,
        layers: q.layer_exponents.clone(),
        consistent,
        relators: status.len(),
        relators_holding: status.iter().filter(|s| s.holds).count(),
    });
    if !q.stabilized {
        rep.mismatch("nq stabilizes", format!("class <= {CLASS_BOUND}"), "larger quotient exists");
    }
    if !consistent {
        rep.mismatch("consistency", true, false);
    }
    if let Some(bad) = status.iter().find(|s| !s.holds) {
        rep.mismatch("input relators hold", "all", format!("{} = {}", bad.relation, bad.value));
    }

    let p = pc.prime();
    let series = lower_central_series(pc);
    let class = series.len() - 1;
    let g = Subgroup::whole(pc);
    let d = derived_subgroup(&g);
    let powerful = analysis::is_powerful(pc);
    let metabelian = analysis::is_metabelian(pc);
    let rank = analysis::rank(pc);
    rep.order = Some(order_string(p, pc.order_exponent()));
    rep.class = Some(class);
    rep.lower_central = series.iter().map(|s| order_string(p, s.order_exponent())).collect();
    rep.rank = Some(rank);
    rep.powerful = Some(powerful);
    rep.metabelian = Some(metabelian);
    rep.derived_order = Some(order_string(p, d.order_exponent()));
    rep.derived_cyclic = Some(minimal_generators(&d).len() <= 1);

    rep.compare("order", ex.order.clone(), rep.order.clone());
    rep.compare("class", ex.class, Some(class));
    rep.compare("powerful", ex.powerful, Some(powerful));
    rep.compare("metabelian", ex.metabelian, Some(metabelian));

    let mut engel_ns = vec![3];
    if let Some(n) = ex.engel_n {
        if n != 3 {
            engel_ns.push(n);
        }
    }
    for &n in &engel_ns {
        match is_n_engel(pc, n, EngelPolicy::GRID) {
            Ok(v) => {
                if n == 3 {
                    rep.three_engel = Some(v.holds);
                }
                if ex.engel_n == Some(n) && !v.holds {
                    rep.mismatch(&format!("{n}-Engel (grid)"), true, false);
                }
                rep.engel.push(v);
            }
            Err(e) => rep.mismatch(&format!("{n}-Engel (grid)"), "verdict", e),
        }
    }
    for extra in &ex.extras {
        if let Extra::RandomEngel { samples } = extra {
            let n = ex.engel_n.unwrap_or(3);
            let v = is_n_engel(pc, n, EngelPolicy::Random { samples: *samples, seed: sub_seed(seed, 1) }).expect("sampling never fails");
            if !v.holds {
                rep.mismatch(&format!("{n}-Engel ({})", v.policy), true, false);
            }
            rep.engel.push(v);
        }
    }

    // identity suites and bounds only have content for 3-Engel groups
    let engel3 = rep.three_engel == Some(true);
    if engel3 {
        let s = SUITE_SAMPLES;
        let mut suites = vec![
            check_gn_gamma5(pc, s, sub_seed(seed, 2)),
            check_gn_gamma6(pc, s, sub_seed(seed, 3)),
            check_first_entry(pc, 2, s, sub_seed(seed, 4)),
            check_first_entry(pc, 3, s, sub_seed(seed, 5)),
        ];
        suites.extend(check_power_commutator_laws(pc, s, sub_seed(seed, 6), true));
        for r in &suites {
            if !r.passed() {
                rep.mismatch(&format!("identity suite: {}", r.law), "0 violations", r.violations.len());
            }
        }
        rep.identity_suites = suites.iter().map(SuiteSummary::from).collect();
    }

    let mut bounds = subgroup_power_and_bounds(pc, sub_seed(seed, 7)).checks;
    if engel3 && powerful {
        let (bound, branch) = engel_class_bound(p, rank, metabelian);
        bounds.push(BoundCheck {
            name: "class bound for (p, rank)".into(),
            holds: Some(class <= bound),
            detail: format!("class {class} <= {bound}: {branch}"),
        });
        for b in &bounds {
            if b.holds == Some(false) {
                rep.mismatch(&format!("bound: {}", b.name), "holds", &b.detail);
            }
        }
    }
    rep.bounds = bounds;

    for extra in &ex.extras {
        match extra {
            Extra::DerivedCyclic { order } => {
                rep.compare("derived subgroup order", Some(order.clone()), rep.derived_order.clone());
                rep.compare("derived subgroup cyclic", Some(true), rep.derived_cyclic);
            }
            Extra::Gamma5Trivial => {
                let t = gamma(&series, 5).is_trivial();
                rep.compare("gamma5 trivial", Some(true), Some(t));
            }
            Extra::Bound { name } => {
                let h = rep.bound(name).and_then(|b| b.holds);
                rep.compare(name, Some(true), h);
            }
            _ => {}
        }
    }
}

fn verify_lie(spec: &ExampleSpec, s: u64, seed: u64, rep: &mut VerificationReport) {
    let ex = &spec.expected;
    let cert = match certify(&LieScenario::new(s), LIE_SAMPLES, seed) {
        Ok(c) => c,
        Err(e) => return rep.mismatch("lie certification", "certificate", e),
    };
    rep.order = Some(cert.quotient_order.clone());
    rep.class = Some(cert.class);
    rep.compare("class", ex.class, Some(cert.class));
    if ex.engel_n.is_some() && cert.engel_violations > 0 {
        rep.mismatch("3-Engel relators (sampled)", 0, cert.engel_violations);
    }
    for extra in &ex.extras {
        match extra {
            Extra::LieDim(d) => rep.compare("dim L", Some(*d), Some(cert.l_dim)),
            Extra::LieGamma5Dim(d) => rep.compare("dim gamma5(L)", Some(*d), Some(cert.l_gamma5_dim)),
            Extra::LatticeRank(r) => rep.compare("rank K", Some(*r), Some(cert.k_rank)),
            Extra::Containment(m) => {
                rep.compare("[K,K] <= mK, m", Some(*m), Some(cert.containment_factor));
                rep.compare("[K,K] <= mK", Some(true), Some(cert.containment_holds));
            }
            Extra::G2Order(o) => rep.compare("order of g2", Some(o.clone()), Some(cert.g2_order.clone())),
            Extra::AbcbcNonzero => rep.compare("[a,b,c,b,c] nonzero", Some(true), Some(cert.abcbc_image_nonzero)),
            Extra::LieRelatorsHold => {
                for r in cert.relators.iter().filter(|r| !r.holds) {
                    rep.mismatch(&format!("relator {}", r.relation), "holds", "fails");
                }
            }
            Extra::F6Flagged => rep.compare("f6 substitution flagged", Some(true), Some(cert.f6.substituted)),
            _ => {}
        }
    }
    rep.lie = Some(cert);
}

/// Every catalog entry, verified concurrently, ordered by name.
pub fn verify_all(seed: u64) -> Vec<VerificationReport> {
    let mut out: Vec<VerificationReport> = catalog().par_iter().map(|e| verify(e, seed)).collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub order: String,
    pub class: usize,
    pub stabilized: bool,
    pub layers: Vec<u32>,
    pub series: Vec<String>,
    pub rank: usize,
    pub powerful: bool,
    pub metabelian: bool,
    pub engel: EngelVerdict,
    pub bounds: Vec<BoundCheck>,
}

/// `grid`, `exhaustive` or `random:k`.
pub fn parse_policy(s: &str, seed: u64) -> Option<EngelPolicy> {
    match s {
        "grid" => Some(EngelPolicy::GRID),
        "exhaustive" => Some(EngelPolicy::EXHAUSTIVE),
        _ => {
            let k = s.strip_prefix("random:")?.parse().ok()?;
            Some(EngelPolicy::Random { samples: k, seed })
        }
    }
}

#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error(transparent)]
    Nq(#[from] crate::nq::NqError),
    #[error(transparent)]
    Engel(#[from] crate::analysis::EngelError),
}

/// Structural profile of the class-bounded quotient of `fp`.
pub fn analyze(fp: &FpPresentation, class_bound: usize, engel_n: usize, policy: EngelPolicy, seed: u64) -> Result<AnalysisReport, AnalyzeError> {
    let q = nilpotent_quotient(fp, class_bound)?;
    let pc = &q.pc;
    let series = lower_central_series(pc);
    Ok(AnalysisReport {
        order: order_string(pc.prime(), pc.order_exponent()),
        class: q.class,
        stabilized: q.stabilized,
        layers: q.layer_exponents.clone(),
        series: series.iter().map(|s| order_string(pc.prime(), s.order_exponent())).collect(),
        rank: analysis::rank(pc),
        powerful: analysis::is_powerful(pc),
        metabelian: analysis::is_metabelian(pc),
        engel: is_n_engel(pc, engel_n, policy)?,
        bounds: subgroup_power_and_bounds(pc, seed).checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_builder() {
        let e = build_cyclic_example(3, 3).unwrap();
        assert_eq!(e.expected.order.as_deref(), Some("3^5"));
        assert_eq!(e.expected.class, Some(3));
        assert_eq!(build_cyclic_example(5, 2).unwrap().expected.class, Some(2));
        let four = build_cyclic_example(4, 3).unwrap();
        assert_eq!((four.p, four.expected.order.as_deref()), (2, Some("2^10")));
        assert_eq!(build_cyclic_example(2, 3), Err(CatalogError::CyclicParameter(2)));
        assert_eq!(build_cyclic_example(9, 3), Err(CatalogError::CyclicParameter(9)));
        assert_eq!(build_cyclic_example(3, 1), Err(CatalogError::CyclicLength(1)));
    }

    #[test]
    fn p_gt_3_rejects_small_primes() {
        assert_eq!(build_p_gt_3_example(3), Err(CatalogError::LargePrime(3)));
        assert_eq!(build_p_gt_3_example(9), Err(CatalogError::LargePrime(9)));
        assert!(build_p_gt_3_example(11).is_ok());
    }

    #[test]
    fn catalog_is_sorted_and_parses() {
        let c = catalog();
        assert!(c.windows(2).all(|w| w[0].name < w[1].name));
        for e in &c {
            if let Source::Fp(t) = &e.source {
                let fp = FpPresentation::parse(t).unwrap();
                assert_eq!(fp.group_prime(), e.p, "{}", e.name);
            }
        }
        assert!(find("nope").is_err());
    }

    #[test]
    fn verify_small_cyclic() {
        let r = verify(&build_cyclic_example(3, 3).unwrap(), 1);
        assert!(r.passed(), "{:?}", r.discrepancies);
        assert_eq!(r.order.as_deref(), Some("3^5"));
        assert_eq!(r.derived_order.as_deref(), Some("3^2"));
    }

    #[test]
    fn discrepancy_when_expectation_is_wrong() {
        let mut e = build_cyclic_example(3, 2).unwrap();
        e.expected.class = Some(3);
        let r = verify(&e, 1);
        assert_eq!(r.discrepancies.len(), 1);
        assert_eq!(r.discrepancies[0].check, "class");
    }
}
