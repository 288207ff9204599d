//! Two-level minimization: Quine-McCluskey prime implicants followed by an
//! exact minimum-literal cover (essential primes, then branch and bound).

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::canon::{noi_from_terms, noi_term, soi_from_terms, soi_term, Cover, Cube};
use crate::expr::Expr;
use crate::semantics::TruthTable;

pub const MAX_MIN_VARS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinimizeError {
    #[error("{0} variables exceed the minimizer limit of {MAX_MIN_VARS}")]
    Capacity(usize),
    #[error("row {row} is out of range for {n} variables")]
    Range { row: usize, n: usize },
    #[error("row {0} is both in the ON-set and a don't-care")]
    Overlap(usize),
    #[error("row {0} is not covered by any prime implicant")]
    Uncovered(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeImplicantSet {
    pub n: usize,
    /// Sorted ascending (`0 < 1 < -` per position).
    pub cubes: Vec<Cube>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    /// Sorted ascending.
    pub cubes: Vec<Cube>,
    /// Total literal count.
    pub cost: usize,
    pub trace: Vec<String>,
}

/// All prime implicants of `onset ∪ dc` by iterated single-position merging.
pub fn prime_implicants(onset: &[usize], dc: &[usize], n: usize) -> Result<PrimeImplicantSet, MinimizeError> {
    if n > MAX_MIN_VARS {
        return Err(MinimizeError::Capacity(n));
    }
    for &row in onset.iter().chain(dc) {
        if row >= 1 << n {
            return Err(MinimizeError::Range { row, n });
        }
    }
    if let Some(&row) = onset.iter().find(|r| dc.contains(r)) {
        return Err(MinimizeError::Overlap(row));
    }

    let full = (1u32 << n) - 1;
    let mut level: HashSet<(u32, u32)> = onset.iter().chain(dc).map(|&r| (full, r as u32)).collect();
    let mut primes = Vec::new();
    while !level.is_empty() {
        let mut merged = HashSet::new();
        let mut used = HashSet::new();
        for &(care, value) in &level {
            let mut bits = care;
            while bits != 0 {
                let bit = bits & bits.wrapping_neg();
                bits &= bits - 1;
                let neighbour = (care, value ^ bit);
                if level.contains(&neighbour) {
                    used.insert((care, value));
                    used.insert(neighbour);
                    merged.insert((care & !bit, value & !bit));
                }
            }
        }
        primes
            .extend(level.iter().filter(|c| !used.contains(*c)).map(|&(care, value)| Cube::from_masks(n, care, value)));
        level = merged;
    }
    primes.sort();
    Ok(PrimeImplicantSet { n, cubes: primes })
}

type Key = (usize, usize, Vec<Cube>);

fn key(cubes: &[Cube]) -> Key {
    let mut sorted = cubes.to_vec();
    sorted.sort();
    (cubes.iter().map(Cube::literal_count).sum(), cubes.len(), sorted)
}

struct Search<'a> {
    candidates: &'a [Cube],
    best: Option<Key>,
}

impl Search<'_> {
    fn run(&mut self, chosen: &mut Vec<Cube>, remaining: &[usize]) {
        let literals: usize = chosen.iter().map(Cube::literal_count).sum();
        if let Some((best_lits, best_count, _)) = &self.best {
            if literals > *best_lits || (literals == *best_lits && chosen.len() > *best_count) {
                return;
            }
        }
        if remaining.is_empty() {
            let k = key(chosen);
            if self.best.as_ref().is_none_or(|b| k < *b) {
                self.best = Some(k);
            }
            return;
        }
        // Branch on the row with the fewest covering candidates.
        let row =
            *remaining.iter().min_by_key(|&&r| (self.candidates.iter().filter(|c| c.covers(r)).count(), r)).unwrap();
        let mut options: Vec<Cube> = self.candidates.iter().copied().filter(|c| c.covers(row)).collect();
        options.sort_by_key(|c| (c.literal_count(), *c));
        for c in options {
            chosen.push(c);
            let rest: Vec<usize> = remaining.iter().copied().filter(|&r| !c.covers(r)).collect();
            self.run(chosen, &rest);
            chosen.pop();
        }
    }
}

/// Cheapest set of primes covering `onset`: fewest literals, then fewest
/// cubes, then the smallest sorted cube list.
pub fn minimum_cover(p: &PrimeImplicantSet, onset: &[usize]) -> Result<CoverSolution, MinimizeError> {
    let rows: BTreeSet<usize> = onset.iter().copied().collect();
    let mut trace = Vec::new();
    let mut chosen: Vec<Cube> = Vec::new();
    for &row in &rows {
        let covering: Vec<&Cube> = p.cubes.iter().filter(|c| c.covers(row)).collect();
        match covering.as_slice() {
            [] => return Err(MinimizeError::Uncovered(row)),
            [only] if !chosen.contains(only) => {
                trace.push(format!("essential {only}: only prime covering row {row}"));
                chosen.push(**only);
            }
            _ => {}
        }
    }
    let remaining: Vec<usize> = rows.iter().copied().filter(|&r| !chosen.iter().any(|c| c.covers(r))).collect();
    if !remaining.is_empty() {
        let candidates: Vec<Cube> =
            p.cubes.iter().copied().filter(|c| !chosen.contains(c) && remaining.iter().any(|&r| c.covers(r))).collect();
        trace.push(format!("branch and bound over {} candidates for rows {remaining:?}", candidates.len()));
        let mut search = Search { candidates: &candidates, best: None };
        search.run(&mut Vec::new(), &remaining);
        let (_, _, extra) = search.best.expect("candidates cover every remaining row");
        for c in &extra {
            trace.push(format!("selected {c}"));
        }
        chosen.extend(extra);
    }
    chosen.sort();
    let cost = chosen.iter().map(Cube::literal_count).sum();
    Ok(CoverSolution { cubes: chosen, cost, trace })
}

/// Minimum cover of a table's ON-set.
pub fn minimized_cover(t: &TruthTable) -> Result<Cover, MinimizeError> {
    let onset = t.onset();
    let primes = prime_implicants(&onset, &[], t.num_vars())?;
    let solution = minimum_cover(&primes, &onset)?;
    Ok(Cover::new(t.vars().to_vec(), solution.cubes))
}

/// Minimized sum of IANDs.
pub fn minimized_soi(t: &TruthTable) -> Result<Expr, MinimizeError> {
    let cover = minimized_cover(t)?;
    Ok(soi_from_terms(cover.cubes().iter().map(|c| soi_term(&c.literals(cover.vars()))).collect()))
}

/// Minimized NAND of implications.
pub fn minimized_noi(t: &TruthTable) -> Result<Expr, MinimizeError> {
    let cover = minimized_cover(t)?;
    Ok(noi_from_terms(cover.cubes().iter().map(|c| noi_term(&c.literals(cover.vars()))).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::VarId;
    use crate::syntax::parse;

    fn strs(cubes: &[Cube]) -> Vec<String> {
        cubes.iter().map(Cube::to_string).collect()
    }

    fn table(vars: &[&str], on: &[usize]) -> TruthTable {
        TruthTable::from_onset(vars.iter().map(|v| VarId::new(*v).unwrap()).collect(), on).unwrap()
    }

    #[test]
    fn primes_examples() {
        let p = prime_implicants(&[3, 5, 6, 7], &[], 3).unwrap();
        assert_eq!(strs(&p.cubes), ["11-", "1-1", "-11"]);
        let p = prime_implicants(&(0..8).collect::<Vec<_>>(), &[], 3).unwrap();
        assert_eq!(strs(&p.cubes), ["---"]);
        let p = prime_implicants(&[1, 2, 4, 7], &[], 3).unwrap();
        assert_eq!(strs(&p.cubes), ["001", "010", "100", "111"]);
        assert!(prime_implicants(&[], &[], 3).unwrap().cubes.is_empty());
    }

    #[test]
    fn primes_errors() {
        assert_eq!(prime_implicants(&[8], &[], 3), Err(MinimizeError::Range { row: 8, n: 3 }));
        assert_eq!(prime_implicants(&[1], &[1], 3), Err(MinimizeError::Overlap(1)));
        assert_eq!(prime_implicants(&[], &[], 13), Err(MinimizeError::Capacity(13)));
    }

    #[test]
    fn dont_cares_enlarge_primes() {
        let p = prime_implicants(&[1, 3], &[5, 7], 3).unwrap();
        assert_eq!(strs(&p.cubes), ["--1"]);
        let s = minimum_cover(&p, &[1, 3]).unwrap();
        assert_eq!(strs(&s.cubes), ["--1"]);
    }

    #[test]
    fn cover_examples() {
        let p = prime_implicants(&[3, 5, 6, 7], &[], 3).unwrap();
        let s = minimum_cover(&p, &[3, 5, 6, 7]).unwrap();
        assert_eq!(strs(&s.cubes), ["11-", "1-1", "-11"]);
        assert_eq!(s.cost, 6);
        assert_eq!(s.trace.iter().filter(|t| t.starts_with("essential")).count(), 3);

        let p = prime_implicants(&[1, 2, 4, 7], &[], 3).unwrap();
        assert_eq!(minimum_cover(&p, &[1, 2, 4, 7]).unwrap().cubes.len(), 4);

        let p = prime_implicants(&[0, 1], &[], 2).unwrap();
        assert_eq!(strs(&minimum_cover(&p, &[0, 1]).unwrap().cubes), ["0-"]);
    }

    #[test]
    fn cyclic_cover_needs_search() {
        // Classic cyclic core: every row has two covering primes, none essential.
        let on = [0, 1, 2, 5, 6, 7];
        let p = prime_implicants(&on, &[], 3).unwrap();
        assert_eq!(p.cubes.len(), 6);
        let s = minimum_cover(&p, &on).unwrap();
        assert_eq!(s.cubes.len(), 3);
        assert_eq!(s.cost, 6);
        assert!(s.trace.iter().any(|t| t.starts_with("branch")));
        assert_eq!(strs(&s.cubes), ["00-", "1-1", "-10"]);
    }

    #[test]
    fn minimized_expressions() {
        let carry = table(&["A", "B", "C"], &[3, 5, 6, 7]);
        assert_eq!(minimized_noi(&carry).unwrap(), parse("!((A -> !B) & (A -> !C) & (B -> !C))").unwrap());
        assert_eq!(minimized_soi(&carry).unwrap(), parse("A @ !B | A @ !C | B @ !C").unwrap());
        let sum = table(&["A", "B", "C"], &[1, 2, 4, 7]);
        assert_eq!(
            minimized_noi(&sum).unwrap(),
            parse("!((!A -> !B -> !C) & (!A -> B -> C) & (A -> !B -> C) & (A -> B -> !C))").unwrap()
        );
        assert_eq!(minimized_soi(&table(&["A", "B"], &[0, 1])).unwrap(), parse("!A").unwrap());
        assert_eq!(minimized_noi(&table(&["A", "B"], &[0, 1])).unwrap(), parse("!A").unwrap());
        assert_eq!(minimized_soi(&table(&["A"], &[0, 1])).unwrap(), Expr::Const(true));
        assert_eq!(minimized_noi(&table(&["A"], &[])).unwrap(), Expr::Const(false));
    }
}
