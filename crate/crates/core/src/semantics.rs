//! Evaluation, truth tables and equivalence checking by exhaustive enumeration.
//!
//! Row convention used everywhere in the crate: for a table over `n` variables,
//! row `r` assigns variable `i` the bit `(r >> (n - 1 - i)) & 1`, so the first
//! variable is the most significant bit.

use std::fmt;

use thiserror::Error;

use crate::expr::{Expr, VarId};

/// Largest variable count accepted for exhaustive enumeration.
pub const MAX_VARS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound variable {0}")]
    Unbound(VarId),
    #[error("{0} variables exceed the limit of {MAX_VARS}")]
    Capacity(usize),
    #[error("variable order is missing {0}")]
    MissingVar(VarId),
    #[error("duplicate variable {0} in order")]
    DuplicateVar(VarId),
    #[error("malformed truth table: {0}")]
    Malformed(String),
}

/// A total assignment of bits to variables, kept in variable order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment(Vec<(VarId, bool)>);

impl Assignment {
    pub fn new(pairs: Vec<(VarId, bool)>) -> Self {
        Assignment(pairs)
    }

    /// The assignment for row `row` of a table over `vars`.
    pub fn from_row(vars: &[VarId], row: usize) -> Self {
        let n = vars.len();
        Assignment(vars.iter().enumerate().map(|(i, v)| (v.clone(), (row >> (n - 1 - i)) & 1 == 1)).collect())
    }

    /// Positional bits such as `"10"` over `vars`.
    pub fn from_bits(vars: &[VarId], bits: &str) -> Result<Self, EvalError> {
        if bits.len() != vars.len() || !bits.chars().all(|c| c == '0' || c == '1') {
            return Err(EvalError::Malformed(format!(
                "expected {} bits for {:?}, got {bits:?}",
                vars.len(),
                vars.iter().map(VarId::as_str).collect::<Vec<_>>()
            )));
        }
        Ok(Assignment(vars.iter().cloned().zip(bits.chars().map(|c| c == '1')).collect()))
    }

    pub fn get(&self, v: &VarId) -> Option<bool> {
        self.0.iter().find(|(k, _)| k == v).map(|(_, b)| *b)
    }

    pub fn pairs(&self) -> &[(VarId, bool)] {
        &self.0
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(v, b)| format!("{v}={}", u8::from(*b))).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Evaluate under an assignment.
pub fn eval(e: &Expr, a: &Assignment) -> Result<bool, EvalError> {
    eval_with(e, &|v| a.get(v).ok_or_else(|| EvalError::Unbound(v.clone())))
}

fn eval_with(e: &Expr, lookup: &dyn Fn(&VarId) -> Result<bool, EvalError>) -> Result<bool, EvalError> {
    Ok(match e {
        Expr::Const(b) => *b,
        Expr::Var(v) => lookup(v)?,
        Expr::Not(c) => !eval_with(c, lookup)?,
        Expr::And(cs) => {
            let mut acc = true;
            for c in cs {
                acc &= eval_with(c, lookup)?;
            }
            acc
        }
        Expr::Or(cs) => {
            let mut acc = false;
            for c in cs {
                acc |= eval_with(c, lookup)?;
            }
            acc
        }
        Expr::Iand(cs) => {
            let mut acc = eval_with(&cs[0], lookup)?;
            for c in &cs[1..] {
                acc = acc && !eval_with(c, lookup)?;
            }
            acc
        }
        Expr::Imply(cs) => {
            let mut acc = eval_with(&cs[cs.len() - 1], lookup)?;
            for c in cs[..cs.len() - 1].iter().rev() {
                acc = !eval_with(c, lookup)? || acc;
            }
            acc
        }
    })
}

/// Index-resolved expression for fast row evaluation.
enum Compiled {
    Const(bool),
    Var(usize),
    Not(Box<Compiled>),
    And(Vec<Compiled>),
    Or(Vec<Compiled>),
    Iand(Vec<Compiled>),
    Imply(Vec<Compiled>),
}

impl Compiled {
    fn new(e: &Expr, vars: &[VarId]) -> Result<Compiled, EvalError> {
        let n = vars.len();
        let kids = |cs: &[Expr]| cs.iter().map(|c| Compiled::new(c, vars)).collect::<Result<Vec<_>, _>>();
        Ok(match e {
            Expr::Const(b) => Compiled::Const(*b),
            Expr::Var(v) => {
                let i = vars.iter().position(|x| x == v).ok_or_else(|| EvalError::MissingVar(v.clone()))?;
                Compiled::Var(n - 1 - i)
            }
            Expr::Not(c) => Compiled::Not(Box::new(Compiled::new(c, vars)?)),
            Expr::And(cs) => Compiled::And(kids(cs)?),
            Expr::Or(cs) => Compiled::Or(kids(cs)?),
            Expr::Iand(cs) => Compiled::Iand(kids(cs)?),
            Expr::Imply(cs) => Compiled::Imply(kids(cs)?),
        })
    }

    fn eval(&self, row: usize) -> bool {
        match self {
            Compiled::Const(b) => *b,
            Compiled::Var(shift) => (row >> shift) & 1 == 1,
            Compiled::Not(c) => !c.eval(row),
            Compiled::And(cs) => cs.iter().all(|c| c.eval(row)),
            Compiled::Or(cs) => cs.iter().any(|c| c.eval(row)),
            Compiled::Iand(cs) => cs[1..].iter().fold(cs[0].eval(row), |acc, c| acc && !c.eval(row)),
            Compiled::Imply(cs) => {
                let (last, init) = cs.split_last().unwrap();
                init.iter().rev().fold(last.eval(row), |acc, c| !c.eval(row) || acc)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    vars: Vec<VarId>,
    bits: Vec<bool>,
}

impl TruthTable {
    pub fn new(vars: Vec<VarId>, bits: Vec<bool>) -> Result<Self, EvalError> {
        check_order(&vars)?;
        if bits.len() != 1usize << vars.len() {
            return Err(EvalError::Malformed(format!(
                "{} variables need {} rows, got {}",
                vars.len(),
                1usize << vars.len(),
                bits.len()
            )));
        }
        Ok(TruthTable { vars, bits })
    }

    /// Table whose ON-set is exactly `rows`.
    pub fn from_onset(vars: Vec<VarId>, rows: &[usize]) -> Result<Self, EvalError> {
        check_order(&vars)?;
        let mut bits = vec![false; 1 << vars.len()];
        for &r in rows {
            *bits.get_mut(r).ok_or_else(|| EvalError::Malformed(format!("row {r} out of range")))? = true;
        }
        Ok(TruthTable { vars, bits })
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn rows(&self) -> usize {
        self.bits.len()
    }

    pub fn get(&self, row: usize) -> bool {
        self.bits[row]
    }

    pub fn onset(&self) -> Vec<usize> {
        (0..self.rows()).filter(|&r| self.bits[r]).collect()
    }

    pub fn offset(&self) -> Vec<usize> {
        (0..self.rows()).filter(|&r| !self.bits[r]).collect()
    }

    /// Output bits as a `0`/`1` string in row order.
    pub fn bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// Two-line text form: variable names, then the output column.
    pub fn to_text(&self) -> String {
        let names: Vec<&str> = self.vars.iter().map(VarId::as_str).collect();
        format!("{}\n{}\n", names.join(" "), self.bit_string())
    }

    pub fn from_text(text: &str) -> Result<Self, EvalError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| EvalError::Malformed("missing variable line".into()))?;
        let vars = header
            .split_whitespace()
            .map(|name| VarId::new(name).map_err(|e| EvalError::Malformed(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let body = lines.next().ok_or_else(|| EvalError::Malformed("missing output line".into()))?;
        if lines.next().is_some() {
            return Err(EvalError::Malformed("trailing content after output line".into()));
        }
        if vars.len() > MAX_VARS {
            return Err(EvalError::Capacity(vars.len()));
        }
        let bits = body
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(EvalError::Malformed(format!("unexpected character {c:?} in output line"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        TruthTable::new(vars, bits)
    }
}

fn check_order(vars: &[VarId]) -> Result<(), EvalError> {
    if vars.len() > MAX_VARS {
        return Err(EvalError::Capacity(vars.len()));
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(EvalError::DuplicateVar(v.clone()));
        }
    }
    Ok(())
}

/// Truth table over `vars` (default: first-appearance order).
pub fn truth_table(e: &Expr, vars: Option<&[VarId]>) -> Result<TruthTable, EvalError> {
    let vars = match vars {
        Some(vs) => vs.to_vec(),
        None => e.vars(),
    };
    check_order(&vars)?;
    let compiled = Compiled::new(e, &vars)?;
    let bits = (0..1usize << vars.len()).map(|r| compiled.eval(r)).collect();
    Ok(TruthTable { vars, bits })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Counterexample(Assignment),
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

/// Compare over the union of both variable sets; report the lowest differing row.
pub fn equivalent(e1: &Expr, e2: &Expr) -> Result<Verdict, EvalError> {
    let mut vars = e1.vars();
    for v in e2.vars() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    equivalent_over(e1, e2, &vars)
}

pub fn equivalent_over(e1: &Expr, e2: &Expr, vars: &[VarId]) -> Result<Verdict, EvalError> {
    check_order(vars)?;
    let (c1, c2) = (Compiled::new(e1, vars)?, Compiled::new(e2, vars)?);
    Ok(match (0..1usize << vars.len()).find(|&r| c1.eval(r) != c2.eval(r)) {
        None => Verdict::Equal,
        Some(r) => Verdict::Counterexample(Assignment::from_row(vars, r)),
    })
}

/// Classical dual: row `r` of the result is the complement of row `!r`.
pub fn classical_dual_tt(t: &TruthTable) -> TruthTable {
    let last = t.rows() - 1;
    TruthTable { vars: t.vars.clone(), bits: (0..t.rows()).map(|r| !t.bits[last - r]).collect() }
}

/// Asymmetric De Morgan dual: inputs complemented and reversed, output complemented.
pub fn demorgan_dual_tt(t: &TruthTable) -> TruthTable {
    let n = t.num_vars();
    let mask = t.rows() - 1;
    let bits = (0..t.rows()).map(|r| !t.bits[reverse_bits(!r & mask, n)]).collect();
    TruthTable { vars: t.vars.clone(), bits }
}

fn reverse_bits(x: usize, n: usize) -> usize {
    (0..n).fold(0, |acc, i| acc | (((x >> i) & 1) << (n - 1 - i)))
}
