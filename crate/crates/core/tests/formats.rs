use engelkit::catalog::{self, build_p_gt_3_example, p_gt_3_parameters, Source};
use engelkit::nq::{nilpotent_quotient, FpError, FpPresentation};
use engelkit::pc::{parse_pcp, PcpError};
use num_bigint::BigInt;

fn catalog_texts() -> Vec<(String, String)> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/catalog");
    let mut v: Vec<(String, String)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "fp"))
        .map(|p| (p.display().to_string(), std::fs::read_to_string(&p).unwrap()))
        .collect();
    for e in catalog::catalog() {
        if let Source::Fp(t) = e.source {
            v.push((e.name, t));
        }
    }
    v
}

#[test]
fn fp_roundtrip() {
    let texts = catalog_texts();
    assert!(texts.len() >= 10);
    for (name, text) in texts {
        let fp = FpPresentation::parse(&text).unwrap();
        let again = FpPresentation::parse(&fp.to_string()).unwrap();
        assert_eq!(fp, again, "{name}");
    }
}

#[test]
fn pcp_roundtrip_of_catalog_quotients() {
    for (name, text) in catalog_texts() {
        let q = nilpotent_quotient(&FpPresentation::parse(&text).unwrap(), 6).unwrap();
        let out = q.pc.to_pcp();
        assert_eq!(parse_pcp(&out).unwrap(), q.pc, "{name}");
        assert_eq!(parse_pcp(&out).unwrap().to_pcp(), out);
    }
}

#[test]
fn negative_exponent_relator() {
    // [a,b] = a^(-p^5) at p = 2 is the relator [a,b] a^32
    let fp = FpPresentation::parse("%p 2\ngens a b\nrel [a,b] = a^(-p^5)\npow a^(p^7) = 1\npow b^(p^3) = 1\n").unwrap();
    let same = FpPresentation::parse("%p 2\ngens a b\nrel [a,b] a^32\npow a^128 = 1\npow b^8 = 1\n").unwrap();
    let q = nilpotent_quotient(&fp, 6).unwrap();
    let r = nilpotent_quotient(&same, 6).unwrap();
    assert_eq!(q.pc, r.pc);
    let (a, b) = (&q.images[0], &q.images[1]);
    let value = q.pc.multiply(&q.pc.commutator(a, b), &q.pc.power_i64(a, 32));
    assert!(value.is_identity());
    assert!(!q.pc.commutator(a, b).is_identity());
}

#[test]
fn positive_power_relator_at_p3() {
    let fp = FpPresentation::parse("%p 3\ngens a b c d\nrel [b,d] = a^(p)\n").unwrap();
    assert_eq!(fp.relation_text(0), "[b, d] = a^p");
    let q = nilpotent_quotient(&FpPresentation::parse("%p 3\ngens a b d\nrel [b,d] = a^(p)\npow a^9 = 1\npow b^3 = 1\npow d^3 = 1\n").unwrap(), 4).unwrap();
    let (a, b, d) = (&q.images[0], &q.images[1], &q.images[2]);
    assert_eq!(q.pc.commutator(b, d), q.pc.power_i64(a, 3));
}

#[test]
fn fp_errors() {
    assert_eq!(FpPresentation::parse("%p 2\ngens\n"), Err(FpError::NoGenerators));
    match FpPresentation::parse("%p 2\ngens a b\nrel [a,x] = 1\n") {
        Err(FpError::UnknownGenerator { line: 3, col, name }) => assert_eq!((col, name.as_str()), (8, "x")),
        other => panic!("{other:?}"),
    }
    assert!(matches!(FpPresentation::parse("%p 2\ngens a b\nrel a^(p^-1) = 1\n"), Err(FpError::NonInteger { line: 3, .. })));
    assert!(matches!(FpPresentation::parse("%p 2\ngens a b\nrel [a,b = 1\n"), Err(FpError::Syntax { line: 3, .. })));
}

#[test]
fn pcp_errors() {
    assert!(matches!(parse_pcp("%p 5\n%orders 5 5\ng2^g1 = g1\n"), Err(PcpError::Pc(_))));
    assert!(matches!(parse_pcp("%p 5\n%orders 5 5\ng2^g1 = g2 g3\n"), Err(PcpError::UnknownGenerator { .. })));
    assert!(matches!(parse_pcp("%p 5\n%orders 5 x\n"), Err(PcpError::NotInteger { line: 2, .. })));
}

/// Returns `(gcd, s)` with `s a = gcd (mod b)`.
fn xgcd(a: i128, b: i128) -> (i128, i128) {
    let (mut r0, mut r1, mut s0, mut s1) = (a, b, 1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0, s0)
}

#[test]
fn p_gt_3_parameters_match_xgcd() {
    for p in [5i128, 7, 11, 13] {
        let m9 = p.pow(9);
        let m11 = p.pow(11);
        let (g, s3) = xgcd(3, m9);
        assert_eq!(g, 1);
        let r = s3.rem_euclid(m9);
        assert_eq!((3 * r) % m9, 1);
        let (_, s9) = xgcd(9, m11);
        let s = s9.rem_euclid(m11);
        assert_eq!((9 * s) % m11, 1);
        let (alpha, gamma) = p_gt_3_parameters(p as u64).unwrap();
        assert_eq!(alpha, BigInt::from((-5 * r).rem_euclid(m9)));
        assert_eq!(gamma, BigInt::from((-11 * s).rem_euclid(m11)));
    }
    let (alpha, gamma) = p_gt_3_parameters(7).unwrap();
    assert_eq!((alpha, gamma), (BigInt::from(26902403), BigInt::from(1098514856u64)));
    assert!(build_p_gt_3_example(3).is_err());
}

#[test]
fn shipped_p7_file_is_generated() {
    let file = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/catalog/rank4_p7.fp")).unwrap();
    assert_eq!(file, catalog::p_gt_3_text(7).unwrap());
}
