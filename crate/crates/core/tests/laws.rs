use std::collections::HashSet;

use asymlogic::laws::{
    catalog, classical_rules, find_rule, negative_fixtures, rewrite_once, simplify, verify_rule, LawError, Pattern,
    RewriteRule, RuleStatus,
};
use asymlogic::{parse, Assignment, VarId};

#[test]
fn catalog_is_large_unique_and_proven() {
    let rules = catalog();
    assert!(rules.len() >= 44, "{}", rules.len());
    let names: HashSet<&str> = rules.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names.len(), rules.len());
    for r in rules.iter().chain(&classical_rules()) {
        let report = verify_rule(r);
        assert!(report.is_proven(), "{} {:?}", r.name, report.status);
        assert_eq!(report.rows, 1 << r.lhs.metavars().len().max(r.rhs.metavars().len()));
        assert!(!r.citation.is_empty());
    }
}

#[test]
fn reversed_rules_mirror_their_forward_rule() {
    for r in catalog() {
        if let Some(base) = r.name.strip_suffix("-rev") {
            let fwd = find_rule(base).unwrap();
            assert_eq!((fwd.lhs, fwd.rhs), (r.rhs.clone(), r.lhs.clone()));
        }
    }
}

#[test]
fn fixtures_are_refuted_at_the_first_failing_row() {
    let abc: Vec<VarId> = ["A", "B", "C"].iter().map(|v| VarId::new(*v).unwrap()).collect();
    let expect = [
        ("non-associativity-iand", "101"),
        ("non-associativity-imply", "000"),
        ("non-commutativity-iand", "01"),
        ("non-commutativity-imply", "01"),
    ];
    let fixtures = negative_fixtures();
    for (name, bits) in expect {
        let f = fixtures.iter().find(|f| f.name == name).unwrap();
        let want = Assignment::from_bits(&abc[..bits.len()], bits).unwrap();
        assert_eq!(verify_rule(f).status, RuleStatus::Refuted(want), "{name}");
    }
}

#[test]
fn unbound_right_side_is_rejected() {
    let err = RewriteRule::new("bad", Pattern::parse("A @ B").unwrap(), Pattern::parse("A @ C").unwrap(), "x");
    assert_eq!(err, Err(LawError::UnboundMeta { rule: "bad".into(), meta: "C".into() }));
}

#[test]
fn named_rewrites() {
    let e = parse("X @ Y @ Z").unwrap();
    let swapped = rewrite_once(&e, &find_rule("non-inverting-assoc-iand").unwrap(), &[]).unwrap();
    assert_eq!(swapped, parse("X @ Z @ Y").unwrap());
    // The head of a longer chain binds as one operand.
    let commuted = rewrite_once(&e, &find_rule("asymmetric-commutation-iand").unwrap(), &[]).unwrap();
    assert_eq!(commuted, parse("!Z @ !(X @ Y)").unwrap());
    let inner = parse("Q | (X @ 1)").unwrap();
    let r = find_rule("annulment-iand-right").unwrap();
    assert_eq!(rewrite_once(&inner, &r, &[1]).unwrap(), parse("Q | 0").unwrap());
    assert!(matches!(rewrite_once(&inner, &r, &[0]), Err(LawError::NoMatch { .. })));
    assert!(matches!(rewrite_once(&inner, &r, &[5]), Err(LawError::InvalidPath(_))));
}

#[test]
fn simplifier_examples() {
    let s = simplify(&parse("X @ Y @ 0").unwrap(), 10);
    assert_eq!(s.expr.to_string(), "X @ Y");
    let s = simplify(&parse("(X @ X) | Y").unwrap(), 10);
    assert_eq!(s.expr.to_string(), "Y");
    let s = simplify(&parse("(X -> Y) -> 1").unwrap(), 10);
    assert_eq!(s.expr.to_string(), "1");
    let s = simplify(&parse("!(X -> Y)").unwrap(), 10);
    assert_eq!(s.expr.to_string(), "X @ Y");
    assert_eq!(simplify(&parse("X @ Y").unwrap(), 10).trace.len(), 0);
}
