//! Canonical forms for the IAND/OR and IMPLY/NAND logic sets.
//!
//! * SOI: OR of IAND chains, one per ON-set minterm. A product `l1 & l2 & .. & lk`
//!   is written `l1 @ !l2 @ .. @ !lk`.
//! * NOI: NAND of IMPLY chains. A product `l1 & .. & lk` is the negation of
//!   `l1 -> .. -> l(k-1) -> !lk`.
//! * IOS / ION: IAND of two sums and IMPLY of two NANDs. Under chain semantics
//!   these only reach functions with exactly one ON row (IOS) or exactly one OFF
//!   row (ION); other tables are reported as unsupported.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::expr::{Expr, VarId};
use crate::semantics::TruthTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("expected {expected} form, got {got}")]
    Shape { expected: &'static str, got: String },
    #[error("malformed cover: {0}")]
    Cover(String),
}

/// One position of a cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Trit {
    Zero,
    One,
    Dash,
}

/// A product term over a fixed variable order, stored as care/value masks.
/// Bit `n - 1 - i` belongs to variable `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cube {
    n: u8,
    care: u32,
    value: u32,
}

impl Cube {
    pub fn minterm(n: usize, row: usize) -> Cube {
        let full = mask(n);
        Cube { n: n as u8, care: full, value: row as u32 & full }
    }

    pub fn from_trits(trits: &[Trit]) -> Cube {
        let n = trits.len();
        let (mut care, mut value) = (0, 0);
        for (i, t) in trits.iter().enumerate() {
            let bit = 1 << (n - 1 - i);
            match t {
                Trit::Zero => care |= bit,
                Trit::One => {
                    care |= bit;
                    value |= bit
                }
                Trit::Dash => {}
            }
        }
        Cube { n: n as u8, care, value }
    }

    pub(crate) fn from_masks(n: usize, care: u32, value: u32) -> Cube {
        Cube { n: n as u8, care, value: value & care }
    }

    pub fn num_vars(&self) -> usize {
        self.n as usize
    }

    pub fn care(&self) -> u32 {
        self.care
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn trit(&self, i: usize) -> Trit {
        let bit = 1 << (self.num_vars() - 1 - i);
        match (self.care & bit != 0, self.value & bit != 0) {
            (false, _) => Trit::Dash,
            (true, false) => Trit::Zero,
            (true, true) => Trit::One,
        }
    }

    pub fn trits(&self) -> Vec<Trit> {
        (0..self.num_vars()).map(|i| self.trit(i)).collect()
    }

    pub fn literal_count(&self) -> usize {
        self.care.count_ones() as usize
    }

    pub fn covers(&self, row: usize) -> bool {
        (row as u32 & self.care) == self.value
    }

    /// True if every row of `other` is a row of `self`.
    pub fn contains(&self, other: &Cube) -> bool {
        self.care & other.care == self.care && other.value & self.care == self.value
    }

    /// Literals of the cube in variable order; `true` marks a positive literal.
    pub fn literals<'a>(&self, vars: &'a [VarId]) -> Vec<(&'a VarId, bool)> {
        (0..self.num_vars())
            .filter_map(|i| match self.trit(i) {
                Trit::Dash => None,
                t => Some((&vars[i], t == Trit::One)),
            })
            .collect()
    }

    pub fn parse(text: &str) -> Result<Cube, CanonError> {
        let trits = text
            .chars()
            .map(|c| match c {
                '0' => Ok(Trit::Zero),
                '1' => Ok(Trit::One),
                '-' => Ok(Trit::Dash),
                _ => Err(CanonError::Cover(format!("bad cube character {c:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if trits.len() > 32 {
            return Err(CanonError::Cover("cube wider than 32 variables".into()));
        }
        Ok(Cube::from_trits(&trits))
    }
}

/// Cubes order position by position with `0 < 1 < -`, so full minterms sort
/// by row index.
impl Ord for Cube {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.trits().cmp(&other.trits()))
    }
}

impl PartialOrd for Cube {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in self.trits() {
            f.write_str(match t {
                Trit::Zero => "0",
                Trit::One => "1",
                Trit::Dash => "-",
            })?;
        }
        Ok(())
    }
}

fn mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// A set of cubes over a variable order, kept distinct and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    vars: Vec<VarId>,
    cubes: Vec<Cube>,
}

impl Cover {
    pub fn new(vars: Vec<VarId>, mut cubes: Vec<Cube>) -> Cover {
        cubes.sort();
        cubes.dedup();
        Cover { vars, cubes }
    }

    pub fn from_table(t: &TruthTable) -> Cover {
        let n = t.num_vars();
        Cover::new(t.vars().to_vec(), t.onset().into_iter().map(|r| Cube::minterm(n, r)).collect())
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn literal_count(&self) -> usize {
        self.cubes.iter().map(Cube::literal_count).sum()
    }

    /// Header line of variable names, then one cube per line.
    pub fn to_text(&self) -> String {
        let mut out = self.vars.iter().map(VarId::as_str).collect::<Vec<_>>().join(" ");
        out.push('\n');
        for c in &self.cubes {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Cover, CanonError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| CanonError::Cover("missing variable header".into()))?;
        let vars = header
            .split_whitespace()
            .map(|v| VarId::new(v).map_err(|e| CanonError::Cover(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let cubes = lines
            .map(|l| {
                let c = Cube::parse(l)?;
                if c.num_vars() != vars.len() {
                    return Err(CanonError::Cover(format!("cube {l:?} does not match {} variables", vars.len())));
                }
                Ok(c)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Cover::new(vars, cubes))
    }
}

fn literal(v: &VarId, positive: bool) -> Expr {
    let x = Expr::Var(v.clone());
    if positive {
        x
    } else {
        Expr::not(x)
    }
}

/// IAND-chain encoding of a product: first literal as is, the rest complemented.
pub fn soi_term(lits: &[(&VarId, bool)]) -> Expr {
    match lits {
        [] => Expr::Const(true),
        [(v, p)] => literal(v, *p),
        [(v, p), rest @ ..] => {
            let mut ops = vec![literal(v, *p)];
            ops.extend(rest.iter().map(|(v, p)| literal(v, !p)));
            Expr::Iand(ops)
        }
    }
}

/// IMPLY-chain encoding of a product's complement: last literal complemented.
pub fn noi_term(lits: &[(&VarId, bool)]) -> Expr {
    match lits {
        [] => Expr::Const(false),
        [(v, p)] => literal(v, !p),
        [init @ .., (v, p)] => {
            let mut ops: Vec<Expr> = init.iter().map(|(v, p)| literal(v, *p)).collect();
            ops.push(literal(v, !p));
            Expr::Imply(ops)
        }
    }
}

/// OR of SOI terms; one term stands alone and none is constant 0.
pub fn soi_from_terms(mut terms: Vec<Expr>) -> Expr {
    match terms.len() {
        0 => Expr::Const(false),
        1 => terms.pop().unwrap(),
        _ => Expr::Or(terms),
    }
}

/// NAND of NOI terms; one term is simply negated and none is constant 0.
pub fn noi_from_terms(mut terms: Vec<Expr>) -> Expr {
    match terms.len() {
        0 => Expr::Const(false),
        1 => terms.pop().unwrap().negate(),
        _ => Expr::not(Expr::And(terms)),
    }
}

fn cube_terms(vars: &[VarId], cubes: &[Cube], encode: fn(&[(&VarId, bool)]) -> Expr) -> Vec<Expr> {
    cubes.iter().map(|c| encode(&c.literals(vars))).collect()
}

/// Sum of IANDs over the ON-set minterms in ascending row order.
pub fn soi_from_tt(t: &TruthTable) -> Expr {
    let cover = Cover::from_table(t);
    soi_from_terms(cube_terms(t.vars(), cover.cubes(), soi_term))
}

/// NAND of implications over the ON-set minterms in ascending row order.
pub fn noi_from_tt(t: &TruthTable) -> Expr {
    let cover = Cover::from_table(t);
    noi_from_terms(cube_terms(t.vars(), cover.cubes(), noi_term))
}

fn soi_terms(e: &Expr) -> Option<Vec<Expr>> {
    let is_term = |x: &Expr| x.is_literal() || matches!(x, Expr::Iand(ops) if ops.iter().all(Expr::is_literal));
    match e {
        Expr::Or(ts) if ts.iter().all(is_term) => Some(ts.clone()),
        Expr::Const(false) => Some(vec![]),
        x if is_term(x) => Some(vec![x.clone()]),
        _ => None,
    }
}

fn noi_terms(e: &Expr) -> Option<Vec<Expr>> {
    let is_term = |x: &Expr| x.is_literal() || matches!(x, Expr::Imply(ops) if ops.iter().all(Expr::is_literal));
    match e {
        Expr::Const(false) => Some(vec![]),
        // `!(!x)` collapses to `x` when a single negative literal is the only term.
        Expr::Var(_) => Some(vec![Expr::not(e.clone())]),
        Expr::Not(inner) => match inner.as_ref() {
            Expr::And(ts) if ts.iter().all(is_term) => Some(ts.clone()),
            x if is_term(x) => Some(vec![x.clone()]),
            _ => None,
        },
        _ => None,
    }
}

/// Split a syntactic SOI into its terms (literals or IAND chains of literals).
pub fn split_soi(e: &Expr) -> Result<Vec<Expr>, CanonError> {
    soi_terms(e).ok_or_else(|| CanonError::Shape { expected: "SOI", got: e.to_string() })
}

/// Split a syntactic NOI into its terms (literals or IMPLY chains of literals).
/// A bare variable `x` is read as the one-term NOI `!(!x)`.
pub fn split_noi(e: &Expr) -> Result<Vec<Expr>, CanonError> {
    noi_terms(e).ok_or_else(|| CanonError::Shape { expected: "NOI", got: e.to_string() })
}

fn reversed_complements(ops: &[Expr]) -> Vec<Expr> {
    ops.iter().rev().map(|x| x.clone().negate()).collect()
}

/// `!(x1 @ .. @ xk) = !xk -> .. -> !x1`, applied term by term.
pub fn soi_to_noi(e: &Expr) -> Result<Expr, CanonError> {
    let terms = split_soi(e)?;
    let converted = terms
        .into_iter()
        .map(|t| match t {
            Expr::Iand(ops) => Expr::Imply(reversed_complements(&ops)),
            lit => lit.negate(),
        })
        .collect();
    Ok(noi_from_terms(converted))
}

/// `!(y1 -> .. -> yk) = !yk @ .. @ !y1`, applied term by term.
pub fn noi_to_soi(e: &Expr) -> Result<Expr, CanonError> {
    let terms = split_noi(e)?;
    let converted = terms
        .into_iter()
        .map(|t| match t {
            Expr::Imply(ops) => Expr::Iand(reversed_complements(&ops)),
            lit => lit.negate(),
        })
        .collect();
    Ok(soi_from_terms(converted))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Restricted {
    Supported(Expr),
    Unsupported(String),
}

impl Restricted {
    pub fn expr(&self) -> Option<&Expr> {
        match self {
            Restricted::Supported(e) => Some(e),
            Restricted::Unsupported(_) => None,
        }
    }
}

/// Full-support sum that is false exactly at `row`.
fn maxterm(vars: &[VarId], row: usize) -> Expr {
    let lits: Vec<Expr> =
        Cube::minterm(vars.len(), row).literals(vars).into_iter().map(|(v, p)| literal(v, !p)).collect();
    soi_from_terms(lits)
}

/// NAND of the full-support product true exactly at `row`.
fn nand_term(vars: &[VarId], row: usize) -> Expr {
    let lits: Vec<Expr> =
        Cube::minterm(vars.len(), row).literals(vars).into_iter().map(|(v, p)| literal(v, p)).collect();
    match lits.len() {
        1 => lits.into_iter().next().unwrap().negate(),
        _ => Expr::not(Expr::And(lits)),
    }
}

/// IAND of two sums, for tables with exactly one ON row `m`: the first sum is
/// false only at the lowest OFF row, the second only at `m`.
pub fn ios_from_tt(t: &TruthTable) -> Restricted {
    let on = t.onset();
    if t.num_vars() == 0 || on.len() != 1 {
        return Restricted::Unsupported(format!(
            "an IAND of full-support sums S1 @ S2 is true on at most one row; this table has {} ON rows",
            on.len()
        ));
    }
    let m = on[0];
    let p = t.offset()[0];
    Restricted::Supported(Expr::iand(maxterm(t.vars(), p), maxterm(t.vars(), m)))
}

/// IMPLY of two NANDs, for tables with exactly one OFF row `p`: the first NAND
/// is false only at the highest ON row, the second only at `p`.
pub fn ion_from_tt(t: &TruthTable) -> Restricted {
    let off = t.offset();
    if t.num_vars() == 0 || off.len() != 1 {
        let note = if off.is_empty() { " (the constant 1 is only reachable as the degenerate N -> N)" } else { "" };
        return Restricted::Unsupported(format!(
            "an IMPLY of full-support NANDs N1 -> N2 is false on exactly one row; this table has {} OFF rows{note}",
            off.len()
        ));
    }
    let p = off[0];
    let q = *t.onset().last().unwrap();
    Restricted::Supported(Expr::imply(nand_term(t.vars(), q), nand_term(t.vars(), p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::truth_table;
    use crate::syntax::parse;

    fn abc() -> Vec<VarId> {
        ["A", "B", "C"].iter().map(|n| VarId::new(*n).unwrap()).collect()
    }

    fn e(s: &str) -> Expr {
        parse(s).unwrap()
    }

    fn onset(rows: &[usize]) -> TruthTable {
        TruthTable::from_onset(abc(), rows).unwrap()
    }

    #[test]
    fn cube_text_and_order() {
        let c = Cube::parse("1-0").unwrap();
        assert_eq!(c.to_string(), "1-0");
        assert_eq!(c.literal_count(), 2);
        assert!(c.covers(0b100) && c.covers(0b110) && !c.covers(0b101));
        assert!(Cube::parse("1--").unwrap().contains(&c));
        assert!(!c.contains(&Cube::parse("1--").unwrap()));
        let mut cubes: Vec<Cube> = ["-11", "1-1", "11-"].iter().map(|s| Cube::parse(s).unwrap()).collect();
        cubes.sort();
        let s: Vec<String> = cubes.iter().map(Cube::to_string).collect();
        assert_eq!(s, ["11-", "1-1", "-11"]);
        assert!(Cube::parse("1x").is_err());
    }

    #[test]
    fn cover_text() {
        let text = "A B C\n11-\n1-1\n-11\n";
        let cover = Cover::from_text(text).unwrap();
        assert_eq!(cover.to_text(), text);
        assert_eq!(cover.literal_count(), 6);
        assert!(Cover::from_text("A B\n111\n").is_err());
    }

    #[test]
    fn soi_examples() {
        assert_eq!(soi_from_tt(&onset(&[4, 7])), e("A @ B @ C | A @ !B @ !C"));
        assert_eq!(soi_from_tt(&onset(&[3])), e("!A @ !B @ !C"));
        let zero = TruthTable::from_onset(abc()[..2].to_vec(), &[]).unwrap();
        assert_eq!(soi_from_tt(&zero), Expr::Const(false));
        let one_var = TruthTable::from_onset(abc()[..1].to_vec(), &[0, 1]).unwrap();
        assert_eq!(soi_from_tt(&one_var), e("!A | A"));
    }

    #[test]
    fn noi_examples() {
        assert_eq!(noi_from_tt(&onset(&[7])), e("!(A -> B -> !C)"));
        assert_eq!(noi_from_tt(&onset(&[2, 6])), e("!((!A -> B -> C) & (A -> B -> C))"));
        let carry = noi_from_tt(&onset(&[3, 5, 6, 7]));
        assert_eq!(truth_table(&carry, Some(&abc())).unwrap(), onset(&[3, 5, 6, 7]));
        assert_eq!(split_noi(&carry).unwrap().len(), 4);
        let not_a = TruthTable::from_onset(abc()[..1].to_vec(), &[0]).unwrap();
        assert_eq!(noi_from_tt(&not_a), e("!A"));
    }

    #[test]
    fn conversions() {
        assert_eq!(soi_to_noi(&e("A @ B")).unwrap(), e("!(!B -> !A)"));
        let soi = e("A @ B @ C | A @ !B @ !C");
        let noi = soi_to_noi(&soi).unwrap();
        assert_eq!(noi, e("!((!C -> !B -> !A) & (C -> B -> !A))"));
        assert_eq!(truth_table(&noi, Some(&abc())).unwrap(), truth_table(&soi, Some(&abc())).unwrap());
        assert_eq!(noi_to_soi(&noi).unwrap(), soi);
        assert_eq!(soi_to_noi(&e("!A | B")).unwrap(), e("!(A & !B)"));
        assert!(matches!(soi_to_noi(&e("A -> B")), Err(CanonError::Shape { expected: "SOI", .. })));
        assert!(matches!(noi_to_soi(&e("A @ B")), Err(CanonError::Shape { expected: "NOI", .. })));
        assert!(soi_to_noi(&e("(A | B) @ C")).is_err());
    }

    #[test]
    fn ios_examples() {
        assert_eq!(ios_from_tt(&onset(&[4])), Restricted::Supported(e("(A | B | C) @ (!A | B | C)")));
        assert!(matches!(ios_from_tt(&onset(&[4, 7])), Restricted::Unsupported(_)));
        assert!(matches!(ios_from_tt(&onset(&[])), Restricted::Unsupported(_)));
        // lowest OFF row is not always 000
        let r = ios_from_tt(&onset(&[0]));
        assert_eq!(r, Restricted::Supported(e("(A | B | !C) @ (A | B | C)")));
    }

    #[test]
    fn ion_examples() {
        let all_but_011: Vec<usize> = (0..8).filter(|&r| r != 3).collect();
        let r = ion_from_tt(&onset(&all_but_011));
        assert_eq!(r, Restricted::Supported(e("!(A & B & C) -> !(!A & B & C)")));
        assert_eq!(
            truth_table(r.expr().unwrap(), Some(&abc())).unwrap(),
            truth_table(&e("A | !B | !C"), Some(&abc())).unwrap()
        );
        let two_off: Vec<usize> = (1..7).collect();
        assert!(matches!(ion_from_tt(&onset(&two_off)), Restricted::Unsupported(_)));
        let one: Vec<usize> = (0..8).collect();
        match ion_from_tt(&onset(&one)) {
            Restricted::Unsupported(msg) => assert!(msg.contains("N -> N")),
            r => panic!("{r:?}"),
        }
    }
}
