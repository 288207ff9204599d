//! The law catalog.
//!
//! Each equation is written once as `(name, left, right, citation)`. Equations
//! are bidirectional and become two directed rules (`name` and `name-rev`),
//! except where the reverse would introduce a metavariable absent from its
//! left side, or where both directions are the same schema up to renaming.

use super::{Pattern, RewriteRule};

enum Dir {
    Both,
    Forward,
}

use Dir::*;

#[rustfmt::skip]
const EQUATIONS: &[(Dir, &str, &str, &str, &str)] = &[
    // Interaction with constants
    (Forward, "annulment-iand-right", "A @ 1", "0", "Annulment Law (IAND): A @ 1 = 0"),
    (Forward, "annulment-iand-left", "0 @ A", "0", "Annulment Law (IAND): 0 @ A = 0"),
    (Forward, "annulment-imply", "A -> 1", "1", "Annulment Law (IMPLY): A -> 1 = 1"),
    (Both, "inversion-iand", "1 @ A", "!A", "Inversion Law (IAND): 1 @ A = !A"),
    (Both, "inversion-imply", "A -> 0", "!A", "Inversion Law (IMPLY): A -> 0 = !A"),
    (Both, "identity-iand", "A @ 0", "A", "Identity Law (IAND): A @ 0 = A"),
    (Both, "identity-imply", "1 -> A", "A", "Identity Law (IMPLY): 1 -> A = A"),
    // Idempotency
    (Forward, "null-idempotency-iand", "A @ A", "0", "Null Idempotency (IAND)"),
    (Forward, "null-idempotency-imply", "A -> A", "1", "Null Idempotency (IMPLY)"),
    (Both, "inverse-idempotency-i-iand", "A @ !A", "A", "Inverse Idempotency I (IAND)"),
    (Both, "inverse-idempotency-i-imply", "A -> !A", "!A", "Inverse Idempotency I (IMPLY)"),
    (Both, "inverse-idempotency-ii-iand", "!A @ A", "!A", "Inverse Idempotency II (IAND)"),
    (Both, "inverse-idempotency-ii-imply", "!A -> A", "A", "Inverse Idempotency II (IMPLY)"),
    // Commutation and associativity
    (Both, "asymmetric-commutation-iand", "A @ B", "!B @ !A", "Asymmetric Commutation (IAND)"),
    (Both, "asymmetric-commutation-imply", "A -> B", "!B -> !A", "Asymmetric Commutation (IMPLY)"),
    (Forward, "non-inverting-assoc-iand", "A @ B @ C", "A @ C @ B", "Non-Inverting Associativity (IAND)"),
    (Forward, "non-inverting-assoc-imply", "A -> B -> C", "B -> A -> C", "Non-Inverting Associativity (IMPLY)"),
    (Both, "inverting-assoc-iand", "A @ B @ C", "!B @ !A @ C", "Inverting Associativity (IAND)"),
    (Both, "inverting-assoc-iand-2", "A @ B @ C", "!C @ B @ !A", "Inverting Associativity (IAND)"),
    (Both, "inverting-assoc-iand-3", "A @ B @ C", "!C @ !A @ B", "Inverting Associativity (IAND)"),
    (Both, "inverting-assoc-imply", "A -> B -> C", "!C -> B -> !A", "Inverting Associativity (IMPLY)"),
    (Both, "inverting-assoc-imply-2", "A -> B -> C", "A -> !C -> !B", "Inverting Associativity (IMPLY)"),
    (Both, "inverting-assoc-imply-3", "A -> B -> C", "B -> !C -> !A", "Inverting Associativity (IMPLY)"),
    // Distribution over AND / OR
    (Both, "distributive-law-i-iand", "A @ (B & C)", "(A @ B) | (A @ C)", "Distributive Law I (IAND)"),
    (Both, "distributive-law-i-imply", "A -> (B & C)", "(A -> B) & (A -> C)", "Distributive Law I (IMPLY)"),
    (Both, "distributive-law-ii-iand", "(A @ B) & C", "A @ B @ !C", "Distributive Law II (IAND)"),
    (Both, "distributive-law-ii-imply", "(A -> B) & C", "(!A & C) | (B & C)", "Distributive Law II (IMPLY)"),
    (Both, "distributive-law-iii-iand", "(A | B) @ C", "(A @ C) | (B @ C)", "Distributive Law III (IAND)"),
    (Both, "distributive-law-iii-imply", "(A | B) -> C", "(A -> C) & (B -> C)", "Distributive Law III (IMPLY)"),
    (Both, "distributive-law-iv-iand", "A @ (B | C)", "(A @ B) & (A @ C)", "Distributive Law IV (IAND)"),
    (Both, "distributive-law-iv-imply", "A -> (B | C)", "(A -> B) | C", "Distributive Law IV (IMPLY)"),
    (Both, "distributive-law-iv-imply-2", "A -> (B | C)", "A -> !B -> C", "Distributive Law IV (IMPLY)"),
    (Both, "distributive-law-v-iand", "A & (B @ C)", "(A & B) @ C", "Distributive Law V (IAND)"),
    (Both, "distributive-law-v-iand-2", "A & (B @ C)", "A @ !B @ C", "Distributive Law V (IAND)"),
    (Both, "distributive-law-v-imply", "A & (B -> C)", "(A & !B) | (A & C)", "Distributive Law V (IMPLY)"),
    (Both, "distributive-law-vi-iand", "A | (B @ C)", "(A | B) & (A | !C)", "Distributive Law VI (IAND)"),
    (Both, "distributive-law-vi-imply", "A | (B -> C)", "!A -> B -> C", "Distributive Law VI (IMPLY)"),
    (Both, "distributive-law-vii-iand", "(A @ B) | C", "(A | C) & (!B | C)", "Distributive Law VII (IAND)"),
    (Both, "distributive-law-vii-imply", "(A & B) -> C", "A -> B -> C", "Distributive Law VII (IMPLY)"),
    // De Morgan for asymmetric operators
    (Both, "demorgan-iand", "!(A @ B)", "!A | B", "De Morgan (IAND): negated IAND is OR with the non-inverted operand complemented"),
    (Both, "demorgan-imply", "!(A -> B)", "A & !B", "De Morgan (IMPLY): negated IMPLY is AND with the non-inverted operand complemented"),
    (Both, "demorgan-or-to-iand", "!(A | B)", "!A @ B", "De Morgan (IAND), converse form"),
    (Both, "demorgan-and-to-imply", "!(A & B)", "A -> !B", "De Morgan (IMPLY), converse form"),
    (Both, "demorgan-iand-3", "!(A @ B @ C)", "!A | B | C", "De Morgan (IAND), three operands"),
    (Both, "demorgan-imply-3", "!(A -> B -> C)", "A & B & !C", "De Morgan (IMPLY), three operands"),
    (Both, "demorgan-or-to-iand-3", "!(A | B | C)", "!A @ B @ C", "De Morgan (IAND), converse form, three operands"),
    (Both, "demorgan-and-to-imply-3", "!(A & B & C)", "A -> B -> !C", "De Morgan (IMPLY), converse form, three operands"),
    // IAND / IMPLY conversion
    (Both, "not-imply-to-iand", "!(A -> B)", "A @ B", "IAND/IMPLY relationship: !(A -> B) = A @ B"),
    (Both, "not-imply-to-iand-commuted", "!(A -> B)", "!B @ !A", "IAND/IMPLY relationship: !(A -> B) = !B @ !A"),
    (Both, "not-imply-to-iand-3", "!(A -> B -> C)", "!C @ !B @ !A", "IAND/IMPLY relationship, three operands"),
    (Both, "not-iand-to-imply", "!(A @ B)", "!B -> !A", "IAND/IMPLY relationship: !(A @ B) = !B -> !A"),
    (Both, "not-iand-to-imply-3", "!(A @ B @ C)", "!C -> !B -> !A", "IAND/IMPLY relationship, three operands"),
];

#[rustfmt::skip]
const CLASSICAL: &[(&str, &str, &str)] = &[
    ("or-zero-right", "A | 0", "A"),
    ("or-zero-left", "0 | A", "A"),
    ("or-one-right", "A | 1", "1"),
    ("or-one-left", "1 | A", "1"),
    ("and-one-right", "A & 1", "A"),
    ("and-one-left", "1 & A", "A"),
    ("and-zero-right", "A & 0", "0"),
    ("and-zero-left", "0 & A", "0"),
    ("or-idempotent", "A | A", "A"),
    ("and-idempotent", "A & A", "A"),
    ("or-complement", "A | !A", "1"),
    ("or-complement-left", "!A | A", "1"),
    ("and-complement", "A & !A", "0"),
    ("and-complement-left", "!A & A", "0"),
];

/// Equations that must NOT hold. Each is reported Refuted by the verifier.
#[rustfmt::skip]
const NEGATIVE: &[(&str, &str, &str, &str)] = &[
    ("non-associativity-iand", "(A @ B) @ C", "A @ (B @ C)", "Conventional Non-Associativity (IAND)"),
    ("non-associativity-imply", "(A -> B) -> C", "A -> (B -> C)", "Conventional Non-Associativity (IMPLY)"),
    ("non-commutativity-iand", "A @ B", "B @ A", "IAND is not commutative"),
    ("non-commutativity-imply", "A -> B", "B -> A", "IMPLY is not commutative"),
    (
        "duality-imply-printed-example",
        "!A & !B & C",
        "!A | !B | C",
        "Principle of Duality worked example: printed OR form of the IMPLY chain dual differs from the stated procedure",
    ),
];

fn rule(name: &str, lhs: &str, rhs: &str, citation: &str) -> RewriteRule {
    RewriteRule::new(
        name,
        Pattern::parse(lhs).expect("catalog pattern"),
        Pattern::parse(rhs).expect("catalog pattern"),
        citation,
    )
    .expect("catalog rule")
}

/// Every directed rule derived from the asymmetric identities and theorems.
pub fn catalog() -> Vec<RewriteRule> {
    let mut out = Vec::new();
    for (dir, name, lhs, rhs, citation) in EQUATIONS {
        out.push(rule(name, lhs, rhs, citation));
        if let Both = dir {
            out.push(rule(&format!("{name}-rev"), rhs, lhs, citation));
        }
    }
    out
}

/// Conventional AND/OR simplifications used alongside the catalog.
pub fn classical_rules() -> Vec<RewriteRule> {
    CLASSICAL.iter().map(|(name, l, r)| rule(name, l, r, "classical Boolean identity")).collect()
}

/// Non-laws kept as refutation fixtures.
pub fn negative_fixtures() -> Vec<RewriteRule> {
    NEGATIVE.iter().map(|(name, l, r, c)| rule(name, l, r, c)).collect()
}

/// Look up a rule by name in the catalog or the classical set.
pub fn find_rule(name: &str) -> Option<RewriteRule> {
    catalog().into_iter().chain(classical_rules()).find(|r| r.name == name)
}
