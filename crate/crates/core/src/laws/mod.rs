//! Law catalog, exhaustive rule verification, positional rewriting and a
//! cost-guided simplifier.

mod catalog;
mod dual;
mod pattern;

pub use catalog::{catalog, classical_rules, find_rule, negative_fixtures};
pub use dual::{demorgan_dual_expr, dual};
pub use pattern::{Bindings, Pattern};

use serde::Serialize;
use thiserror::Error;

use crate::expr::{normalize_not, Expr, VarId};
use crate::semantics::{equivalent_over, Assignment, Verdict};

/// Verification enumerates `2^k` rows; more metavariables than this are refused.
pub const MAX_METAVARS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawError {
    #[error("rule {rule}: right side uses metavariable {meta} not bound by the left side")]
    UnboundMeta { rule: String, meta: String },
    #[error("rule {rule} does not match at position {path:?}")]
    NoMatch { rule: String, path: Vec<usize> },
    #[error("invalid position {0:?}")]
    InvalidPath(Vec<usize>),
    #[error("{0} is not an IAND or IMPLY chain")]
    Unsupported(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub name: String,
    pub lhs: Pattern,
    pub rhs: Pattern,
    pub citation: String,
}

impl RewriteRule {
    pub fn new(
        name: impl Into<String>,
        lhs: Pattern,
        rhs: Pattern,
        citation: impl Into<String>,
    ) -> Result<Self, LawError> {
        let name = name.into();
        let bound = lhs.metavars();
        if let Some(meta) = rhs.metavars().into_iter().find(|m| !bound.contains(m)) {
            return Err(LawError::UnboundMeta { rule: name, meta });
        }
        Ok(RewriteRule { name, lhs, rhs, citation: citation.into() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleStatus {
    Proven,
    Refuted(Assignment),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleReport {
    pub name: String,
    pub citation: String,
    pub status: RuleStatus,
    pub rows: usize,
}

impl RuleReport {
    pub fn is_proven(&self) -> bool {
        self.status == RuleStatus::Proven
    }

    /// One line of the law report: a JSON object with fields
    /// `name`, `citation`, `status`, `rows`.
    pub fn to_record(&self) -> String {
        #[derive(Serialize)]
        struct Record<'a> {
            name: &'a str,
            citation: &'a str,
            status: &'a str,
            rows: usize,
        }
        let status = match self.status {
            RuleStatus::Proven => "Proven",
            RuleStatus::Refuted(_) => "Refuted",
        };
        serde_json::to_string(&Record { name: &self.name, citation: &self.citation, status, rows: self.rows })
            .expect("serializable record")
    }
}

/// Check a rule schema by instantiating each metavariable as a fresh variable
/// of the same name and comparing both sides on every assignment.
///
/// Panics if the rule has more than [`MAX_METAVARS`] metavariables.
pub fn verify_rule(r: &RewriteRule) -> RuleReport {
    let mut metas = r.lhs.metavars();
    for m in r.rhs.metavars() {
        if !metas.contains(&m) {
            metas.push(m);
        }
    }
    assert!(metas.len() <= MAX_METAVARS, "rule {} has {} metavariables", r.name, metas.len());
    let vars: Vec<VarId> = metas.iter().map(|m| VarId::new(m.as_str()).unwrap()).collect();
    let verdict = equivalent_over(&r.lhs.to_expr(), &r.rhs.to_expr(), &vars).expect("metavariable bound");
    RuleReport {
        name: r.name.clone(),
        citation: r.citation.clone(),
        status: match verdict {
            Verdict::Equal => RuleStatus::Proven,
            Verdict::Counterexample(a) => RuleStatus::Refuted(a),
        },
        rows: 1 << vars.len(),
    }
}

fn replace_at(e: &Expr, path: &[usize], new: Expr) -> Option<Expr> {
    match path.split_first() {
        None => Some(new),
        Some((&i, rest)) => {
            let children = e.children();
            let child = children.get(i)?;
            let mut kids = children.to_vec();
            kids[i] = replace_at(child, rest, new)?;
            Some(e.with_children(kids))
        }
    }
}

/// Apply `r` at the subtree addressed by `path` (child indices from the root).
pub fn rewrite_once(e: &Expr, r: &RewriteRule, path: &[usize]) -> Result<Expr, LawError> {
    let target = e.at_path(path).ok_or_else(|| LawError::InvalidPath(path.to_vec()))?;
    let bindings =
        r.lhs.matches(target).ok_or_else(|| LawError::NoMatch { rule: r.name.clone(), path: path.to_vec() })?;
    let replaced = replace_at(e, path, r.rhs.instantiate(&bindings)).expect("path checked above");
    Ok(normalize_not(&replaced))
}

/// Ordering key for the simplifier: literals first, then operators.
pub fn cost(e: &Expr) -> (usize, usize) {
    (e.literal_count(), e.operator_count())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: String,
    pub path: Vec<usize>,
    pub result: Expr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplified {
    pub expr: Expr,
    pub trace: Vec<TraceStep>,
}

fn paths(e: &Expr, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(prefix.clone());
    for (i, c) in e.children().iter().enumerate() {
        prefix.push(i);
        paths(c, prefix, out);
        prefix.pop();
    }
}

type Candidate<'a> = ((usize, usize), &'a str, Vec<usize>, Expr);

/// Greedy simplification with the catalog plus the classical AND/OR rules.
pub fn simplify(e: &Expr, budget: usize) -> Simplified {
    let rules: Vec<RewriteRule> = catalog().into_iter().chain(classical_rules()).collect();
    simplify_with(e, &rules, budget)
}

/// At each step, apply the rule application with the lowest resulting cost
/// among those that strictly reduce cost. Ties go to the lexicographically
/// smaller rule name, then the leftmost position.
pub fn simplify_with(e: &Expr, rules: &[RewriteRule], budget: usize) -> Simplified {
    let mut current = normalize_not(e);
    let mut trace = Vec::new();
    let mut sorted: Vec<&RewriteRule> = rules.iter().collect();
    sorted.sort_by(|a, b| a.name.cmp(&b.name));
    for _ in 0..budget {
        let current_cost = cost(&current);
        let mut positions = Vec::new();
        paths(&current, &mut Vec::new(), &mut positions);
        positions.sort();
        let mut best: Option<Candidate> = None;
        for r in &sorted {
            for path in &positions {
                let Ok(next) = rewrite_once(&current, r, path) else { continue };
                let c = cost(&next);
                if c >= current_cost {
                    continue;
                }
                // Rules are visited in name order and positions in path order,
                // so a strictly lower cost is the only reason to replace.
                if best.as_ref().is_none_or(|(bc, ..)| c < *bc) {
                    best = Some((c, &r.name, path.clone(), next));
                }
            }
        }
        let Some((_, rule, path, next)) = best else { break };
        trace.push(TraceStep { rule: rule.to_string(), path, result: next.clone() });
        current = next;
    }
    debug_assert!(
        crate::semantics::equivalent(e, &current).map(|v| v.is_equal()).unwrap_or(true),
        "simplify changed the function of {e}"
    );
    Simplified { expr: current, trace }
}
