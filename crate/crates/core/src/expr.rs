//! Expression trees for asymmetric logic.
//!
//! IAND and IMPLY are non-commutative and non-associative, so chains of more
//! than two operands carry a fixed pairing direction:
//!
//! * `Iand(x1, x2, .., xk)` is `((x1 @ x2) @ x3) ..`, paired left to right.
//! * `Imply(x1, x2, .., xk)` is `x1 -> (x2 -> (.. -> xk))`, paired right to left.
//!
//! The chain constructors only flatten a nested chain on the associative side
//! (head of an IAND chain, tail of an IMPLY chain). Flattening anywhere else
//! would change the function.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("invalid variable name {0:?}")]
    InvalidName(String),
    #[error("{kind} needs at least 2 operands, got {got}")]
    Arity { kind: &'static str, got: usize },
}

/// A variable name: letters, digits and underscore, not starting with a digit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(String);

impl VarId {
    pub fn new(name: impl Into<String>) -> Result<Self, ExprError> {
        let name = name.into();
        if is_identifier(&name) {
            Ok(VarId(name))
        } else {
            Err(ExprError::InvalidName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(bool),
    Var(VarId),
    Not(Box<Expr>),
    And(Vec<Expr>),
    Or(Vec<Expr>),
    /// Left-to-right IAND chain; `x @ y` is `x & !y`.
    Iand(Vec<Expr>),
    /// Right-to-left IMPLY chain; `x -> y` is `!x | y`.
    Imply(Vec<Expr>),
}

impl Expr {
    /// Variable leaf. Panics on an invalid identifier; use [`VarId::new`] for
    /// untrusted names.
    pub fn var(name: &str) -> Expr {
        Expr::Var(VarId::new(name).expect("invalid variable name"))
    }

    pub fn constant(bit: bool) -> Expr {
        Expr::Const(bit)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: Expr) -> Expr {
        Expr::Not(Box::new(e))
    }

    pub fn and(children: Vec<Expr>) -> Result<Expr, ExprError> {
        check_arity("AND", children.len())?;
        Ok(Expr::And(children))
    }

    pub fn or(children: Vec<Expr>) -> Result<Expr, ExprError> {
        check_arity("OR", children.len())?;
        Ok(Expr::Or(children))
    }

    /// Build an IAND chain. A chain in the first position is spliced in;
    /// chains in later positions stay nested.
    pub fn iand_chain(operands: Vec<Expr>) -> Result<Expr, ExprError> {
        check_arity("IAND chain", operands.len())?;
        let mut iter = operands.into_iter();
        let mut flat = match iter.next() {
            Some(Expr::Iand(head)) => head,
            Some(other) => vec![other],
            None => unreachable!(),
        };
        flat.extend(iter);
        Ok(Expr::Iand(flat))
    }

    /// Build an IMPLY chain. A chain in the last position is spliced in;
    /// chains elsewhere stay nested.
    pub fn imply_chain(mut operands: Vec<Expr>) -> Result<Expr, ExprError> {
        check_arity("IMPLY chain", operands.len())?;
        if let Some(Expr::Imply(_)) = operands.last() {
            if let Some(Expr::Imply(tail)) = operands.pop() {
                operands.extend(tail);
            }
        }
        Ok(Expr::Imply(operands))
    }

    /// Two-operand IAND, `a @ b`.
    pub fn iand(a: Expr, b: Expr) -> Expr {
        Expr::iand_chain(vec![a, b]).unwrap()
    }

    /// Two-operand IMPLY, `a -> b`.
    pub fn imply(a: Expr, b: Expr) -> Expr {
        Expr::imply_chain(vec![a, b]).unwrap()
    }

    /// Negation that never stacks: `!!x` becomes `x` and `!c` folds the constant.
    pub fn negate(self) -> Expr {
        match self {
            Expr::Not(inner) => *inner,
            Expr::Const(b) => Expr::Const(!b),
            other => Expr::not(other),
        }
    }

    pub fn children(&self) -> &[Expr] {
        match self {
            Expr::Const(_) | Expr::Var(_) => &[],
            Expr::Not(c) => std::slice::from_ref(c.as_ref()),
            Expr::And(cs) | Expr::Or(cs) | Expr::Iand(cs) | Expr::Imply(cs) => cs,
        }
    }

    /// Subtree at a child-index path, if the path is valid.
    pub fn at_path(&self, path: &[usize]) -> Option<&Expr> {
        path.iter().try_fold(self, |node, &i| node.children().get(i))
    }

    /// Variables in first-appearance order (depth first, left to right).
    pub fn vars(&self) -> Vec<VarId> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<VarId>) {
        match self {
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            _ => self.children().iter().for_each(|c| c.collect_vars(out)),
        }
    }

    /// Number of variable occurrences.
    pub fn literal_count(&self) -> usize {
        match self {
            Expr::Var(_) => 1,
            Expr::Const(_) => 0,
            _ => self.children().iter().map(Expr::literal_count).sum(),
        }
    }

    /// Number of operator applications: one per `!`, `k - 1` per k-ary node.
    pub fn operator_count(&self) -> usize {
        let own = match self {
            Expr::Const(_) | Expr::Var(_) => 0,
            Expr::Not(_) => 1,
            Expr::And(cs) | Expr::Or(cs) | Expr::Iand(cs) | Expr::Imply(cs) => cs.len() - 1,
        };
        own + self.children().iter().map(Expr::operator_count).sum::<usize>()
    }

    /// True for a variable or a negated variable.
    pub fn is_literal(&self) -> bool {
        match self {
            Expr::Var(_) => true,
            Expr::Not(inner) => matches!(inner.as_ref(), Expr::Var(_)),
            _ => false,
        }
    }

    /// Rebuild this node with new children, keeping its kind.
    pub(crate) fn with_children(&self, children: Vec<Expr>) -> Expr {
        match self {
            Expr::Const(_) | Expr::Var(_) => self.clone(),
            Expr::Not(_) => Expr::Not(Box::new(children.into_iter().next().unwrap())),
            Expr::And(_) => Expr::And(children),
            Expr::Or(_) => Expr::Or(children),
            Expr::Iand(_) => Expr::Iand(children),
            Expr::Imply(_) => Expr::Imply(children),
        }
    }
}

fn check_arity(kind: &'static str, got: usize) -> Result<(), ExprError> {
    if got < 2 {
        Err(ExprError::Arity { kind, got })
    } else {
        Ok(())
    }
}

/// Strip double negations and fold negated constants. Nothing else changes.
pub fn normalize_not(e: &Expr) -> Expr {
    match e {
        Expr::Not(inner) => match normalize_not(inner) {
            Expr::Not(x) => *x,
            Expr::Const(b) => Expr::Const(!b),
            other => Expr::not(other),
        },
        Expr::Const(_) | Expr::Var(_) => e.clone(),
        _ => e.with_children(e.children().iter().map(normalize_not).collect()),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::format(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Expr {
        Expr::var(n)
    }

    #[test]
    fn var_names() {
        assert!(VarId::new("A").is_ok());
        assert!(VarId::new("_x9").is_ok());
        assert!(VarId::new("9x").is_err());
        assert!(VarId::new("").is_err());
        assert!(VarId::new("a-b").is_err());
        assert_ne!(VarId::new("a").unwrap(), VarId::new("A").unwrap());
    }

    #[test]
    fn iand_flattens_head_only() {
        let ab = Expr::iand(v("A"), v("B"));
        assert_eq!(Expr::iand_chain(vec![ab.clone(), v("C")]).unwrap(), Expr::Iand(vec![v("A"), v("B"), v("C")]));
        let bc = Expr::iand(v("B"), v("C"));
        assert_eq!(Expr::iand_chain(vec![v("A"), bc.clone()]).unwrap(), Expr::Iand(vec![v("A"), bc]));
    }

    #[test]
    fn imply_flattens_tail_only() {
        let bc = Expr::imply(v("B"), v("C"));
        assert_eq!(Expr::imply_chain(vec![v("A"), bc]).unwrap(), Expr::Imply(vec![v("A"), v("B"), v("C")]));
        let ab = Expr::imply(v("A"), v("B"));
        assert_eq!(Expr::imply_chain(vec![ab.clone(), v("C")]).unwrap(), Expr::Imply(vec![ab, v("C")]));
    }

    #[test]
    fn chain_arity_errors() {
        assert_eq!(Expr::iand_chain(vec![v("A")]), Err(ExprError::Arity { kind: "IAND chain", got: 1 }));
        assert!(Expr::imply_chain(vec![]).is_err());
        assert!(Expr::and(vec![v("A")]).is_err());
        assert!(Expr::or(vec![]).is_err());
    }

    #[test]
    fn normalize_strips_double_negation() {
        let nna = Expr::not(Expr::not(v("A")));
        assert_eq!(normalize_not(&nna), v("A"));
        assert_eq!(normalize_not(&Expr::not(Expr::Const(true))), Expr::Const(false));
        let nand = Expr::not(Expr::iand(v("A"), v("B")));
        assert_eq!(normalize_not(&nand), nand);
        let triple = Expr::not(Expr::not(Expr::not(v("A"))));
        assert_eq!(normalize_not(&triple), Expr::not(v("A")));
        let nested = Expr::Or(vec![Expr::not(Expr::not(v("A"))), Expr::not(Expr::Const(false))]);
        assert_eq!(normalize_not(&nested), Expr::Or(vec![v("A"), Expr::Const(true)]));
    }

    #[test]
    fn counts_and_vars() {
        let e = Expr::Or(vec![Expr::Iand(vec![v("B"), v("A"), v("B")]), Expr::not(v("C"))]);
        assert_eq!(e.literal_count(), 4);
        assert_eq!(e.operator_count(), 1 + 2 + 1);
        let names: Vec<_> = e.vars().iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["B", "A", "C"]);
        assert_eq!(e.at_path(&[0, 1]), Some(&v("A")));
        assert_eq!(e.at_path(&[1, 0]), Some(&v("C")));
        assert_eq!(e.at_path(&[2]), None);
    }
}
