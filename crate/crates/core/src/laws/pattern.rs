//! Equation schemas over metavariables.

use crate::expr::{Expr, VarId};
use crate::syntax::{self, ParseError};

/// An expression tree whose leaves are metavariables or constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Pattern {
    Meta(String),
    Const(bool),
    Not(Box<Pattern>),
    And(Vec<Pattern>),
    Or(Vec<Pattern>),
    Iand(Vec<Pattern>),
    Imply(Vec<Pattern>),
}

/// Metavariable bindings in binding order.
pub type Bindings = Vec<(String, Expr)>;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Absorb {
    None,
    Head,
    Tail,
    Both,
}

impl Pattern {
    /// Parse a schema written in the expression syntax; every identifier is a
    /// metavariable.
    pub fn parse(text: &str) -> Result<Pattern, ParseError> {
        Ok(Pattern::from_expr(&syntax::parse(text)?))
    }

    pub fn from_expr(e: &Expr) -> Pattern {
        let kids = |cs: &[Expr]| cs.iter().map(Pattern::from_expr).collect();
        match e {
            Expr::Const(b) => Pattern::Const(*b),
            Expr::Var(v) => Pattern::Meta(v.as_str().to_string()),
            Expr::Not(c) => Pattern::Not(Box::new(Pattern::from_expr(c))),
            Expr::And(cs) => Pattern::And(kids(cs)),
            Expr::Or(cs) => Pattern::Or(kids(cs)),
            Expr::Iand(cs) => Pattern::Iand(kids(cs)),
            Expr::Imply(cs) => Pattern::Imply(kids(cs)),
        }
    }

    /// Metavariables in first-appearance order.
    pub fn metavars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_metas(&mut out);
        out
    }

    fn collect_metas(&self, out: &mut Vec<String>) {
        match self {
            Pattern::Meta(m) => {
                if !out.contains(m) {
                    out.push(m.clone());
                }
            }
            Pattern::Const(_) => {}
            Pattern::Not(c) => c.collect_metas(out),
            Pattern::And(cs) | Pattern::Or(cs) | Pattern::Iand(cs) | Pattern::Imply(cs) => {
                cs.iter().for_each(|c| c.collect_metas(out))
            }
        }
    }

    /// Substitute bindings. Chains go through the flattening constructors.
    /// Panics if a metavariable is unbound.
    pub fn instantiate(&self, b: &Bindings) -> Expr {
        let kids = |cs: &[Pattern]| cs.iter().map(|c| c.instantiate(b)).collect::<Vec<_>>();
        match self {
            Pattern::Meta(m) => b
                .iter()
                .find(|(k, _)| k == m)
                .map(|(_, e)| e.clone())
                .unwrap_or_else(|| panic!("unbound metavariable {m}")),
            Pattern::Const(c) => Expr::Const(*c),
            Pattern::Not(c) => Expr::not(c.instantiate(b)),
            Pattern::And(cs) => Expr::And(kids(cs)),
            Pattern::Or(cs) => Expr::Or(kids(cs)),
            Pattern::Iand(cs) => Expr::iand_chain(kids(cs)).unwrap(),
            Pattern::Imply(cs) => Expr::imply_chain(kids(cs)).unwrap(),
        }
    }

    /// Instantiate every metavariable as the variable of the same name.
    pub fn to_expr(&self) -> Expr {
        let b: Bindings = self
            .metavars()
            .into_iter()
            .map(|m| {
                let v = Expr::Var(VarId::new(m.as_str()).expect("metavariable names are identifiers"));
                (m, v)
            })
            .collect();
        self.instantiate(&b)
    }

    /// Match against `e`. Operand lists match positionally; on the associative
    /// side of a node (either end of AND/OR, the head of an IAND chain, the
    /// tail of an IMPLY chain) a metavariable may absorb several operands.
    pub fn matches(&self, e: &Expr) -> Option<Bindings> {
        self.match_into(e, Vec::new())
    }

    fn match_into(&self, e: &Expr, mut b: Bindings) -> Option<Bindings> {
        match (self, e) {
            (Pattern::Meta(m), _) => {
                match b.iter().find(|(k, _)| k == m) {
                    Some((_, bound)) => return (bound == e).then_some(b),
                    None => b.push((m.clone(), e.clone())),
                }
                Some(b)
            }
            (Pattern::Const(p), Expr::Const(c)) => (p == c).then_some(b),
            (Pattern::Not(p), Expr::Not(c)) => p.match_into(c, b),
            (Pattern::And(ps), Expr::And(es)) => match_list(ps, es, b, Absorb::Both, Expr::And),
            (Pattern::Or(ps), Expr::Or(es)) => match_list(ps, es, b, Absorb::Both, Expr::Or),
            (Pattern::Iand(ps), Expr::Iand(es)) => match_list(ps, es, b, Absorb::Head, Expr::Iand),
            (Pattern::Imply(ps), Expr::Imply(es)) => match_list(ps, es, b, Absorb::Tail, Expr::Imply),
            _ => None,
        }
    }
}

fn match_pairs(ps: &[Pattern], es: &[Expr], b: Bindings) -> Option<Bindings> {
    ps.iter().zip(es).try_fold(b, |b, (p, e)| p.match_into(e, b))
}

fn match_list(
    ps: &[Pattern],
    es: &[Expr],
    b: Bindings,
    absorb: Absorb,
    build: fn(Vec<Expr>) -> Expr,
) -> Option<Bindings> {
    if ps.len() == es.len() {
        return match_pairs(ps, es, b);
    }
    if ps.len() > es.len() || absorb == Absorb::None {
        return None;
    }
    let extra = es.len() - ps.len();
    if matches!(absorb, Absorb::Head | Absorb::Both) && matches!(ps[0], Pattern::Meta(_)) {
        let group = build(es[..=extra].to_vec());
        let found = ps[0].match_into(&group, b.clone()).and_then(|b| match_pairs(&ps[1..], &es[extra + 1..], b));
        if found.is_some() {
            return found;
        }
    }
    let last = ps.len() - 1;
    if matches!(absorb, Absorb::Tail | Absorb::Both) && matches!(ps[last], Pattern::Meta(_)) {
        let group = build(es[last..].to_vec());
        return match_pairs(&ps[..last], &es[..last], b).and_then(|b| ps[last].match_into(&group, b));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn p(s: &str) -> Pattern {
        Pattern::parse(s).unwrap()
    }

    fn e(s: &str) -> Expr {
        parse(s).unwrap()
    }

    #[test]
    fn metavars_in_order() {
        assert_eq!(p("!B @ !A @ C").metavars(), ["B", "A", "C"]);
        assert_eq!(p("0 @ A").metavars(), ["A"]);
    }

    #[test]
    fn positional_match() {
        let b = p("A @ B").matches(&e("X | Y @ !Z")).is_none();
        assert!(b);
        let b = p("A @ B").matches(&e("(X | Y) @ !Z")).unwrap();
        assert_eq!(b, vec![("A".into(), e("X | Y")), ("B".into(), e("!Z"))]);
        assert!(p("A @ A").matches(&e("X @ Y")).is_none());
        assert!(p("A @ A").matches(&e("X @ X")).is_some());
        assert!(p("A @ 1").matches(&e("X @ 0")).is_none());
    }

    #[test]
    fn associative_side_absorption() {
        let b = p("A @ 1").matches(&e("X @ Y @ 1")).unwrap();
        assert_eq!(b, vec![("A".into(), e("X @ Y"))]);
        assert!(p("1 @ A").matches(&e("1 @ X @ Y")).is_none());
        let b = p("A -> B").matches(&e("X -> Y -> Z")).unwrap();
        assert_eq!(b, vec![("A".into(), e("X")), ("B".into(), e("Y -> Z"))]);
        let b = p("0 | A").matches(&e("0 | X | Y")).unwrap();
        assert_eq!(b, vec![("A".into(), e("X | Y"))]);
        let b = p("A | 0").matches(&e("X | Y | 0")).unwrap();
        assert_eq!(b, vec![("A".into(), e("X | Y"))]);
    }

    #[test]
    fn instantiate_flattens_chains() {
        let b = vec![("A".to_string(), e("X @ Y")), ("B".to_string(), e("Z"))];
        assert_eq!(p("A @ B").instantiate(&b), e("X @ Y @ Z"));
        assert_eq!(p("B @ A").instantiate(&b), e("Z @ (X @ Y)"));
        assert_eq!(p("!A @ !B @ C").to_expr(), e("!A @ !B @ C"));
    }
}
