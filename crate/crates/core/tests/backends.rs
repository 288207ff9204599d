use std::fs;

use asymlogic::canon::{ion_from_tt, ios_from_tt, Restricted};
use asymlogic::memristor::{compile_noi, simulate, ImplyProgram};
use asymlogic::spindiode::{netlist_stats, simulate_netlist, Netlist, NetlistStats};
use asymlogic::{parse, truth_table, Assignment, Expr, TruthTable, VarId};

fn golden(name: &str) -> String {
    fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn abc(n: usize) -> Vec<VarId> {
    ["A", "B", "C"][..n].iter().map(|v| VarId::new(*v).unwrap()).collect()
}

#[test]
fn golden_programs_parse_and_run() {
    let nand = ImplyProgram::from_text(&golden("nand.imp")).unwrap();
    assert_eq!(nand.steps.len(), 3);
    let carry = ImplyProgram::from_text(&golden("carry.imp")).unwrap();
    assert_eq!(carry, compile_noi(&parse("!((A -> !B) & (A -> !C) & (B -> !C))").unwrap()).unwrap());
    for row in 0..8usize {
        let out = simulate(&carry, &Assignment::from_row(&abc(3), row)).unwrap().output;
        assert_eq!(out, row.count_ones() >= 2);
    }
}

#[test]
fn golden_netlist_parses_and_runs() {
    let net = Netlist::from_text(&golden("carry.net")).unwrap();
    assert_eq!(netlist_stats(&net), NetlistStats { gates: 5, depth: 3, iand: 3, or: 2 });
    for row in 0..8usize {
        assert_eq!(simulate_netlist(&net, &Assignment::from_row(&abc(3), row)).unwrap(), row.count_ones() >= 2);
    }
}

fn maxterm(vars: &[VarId], row: usize) -> Expr {
    let n = vars.len();
    let lits = (0..n).map(|i| {
        let v = Expr::Var(vars[i].clone());
        if row >> (n - 1 - i) & 1 == 1 {
            Expr::not(v)
        } else {
            v
        }
    });
    Expr::or(lits.collect()).unwrap_or_else(|_| unreachable!())
}

fn nand_of_minterm(vars: &[VarId], row: usize) -> Expr {
    let n = vars.len();
    let lits = (0..n).map(|i| {
        let v = Expr::Var(vars[i].clone());
        if row >> (n - 1 - i) & 1 == 1 {
            v
        } else {
            Expr::not(v)
        }
    });
    Expr::not(Expr::and(lits.collect()).unwrap_or_else(|_| unreachable!()))
}

/// Which tables can be written as `S1 @ S2` over full-support sums, or as
/// `N1 -> N2` over full-support NANDs, found by trying every pair.
#[test]
fn restricted_forms_match_pair_search() {
    for n in 2..=3 {
        let vars = abc(n);
        let rows = 1 << n;
        let mut ios_reachable = Vec::new();
        let mut ion_reachable = Vec::new();
        for p in 0..rows {
            for q in 0..rows {
                let s = Expr::iand(maxterm(&vars, p), maxterm(&vars, q));
                ios_reachable.push(truth_table(&s, Some(&vars)).unwrap());
                if p != q {
                    let m = Expr::imply(nand_of_minterm(&vars, p), nand_of_minterm(&vars, q));
                    ion_reachable.push(truth_table(&m, Some(&vars)).unwrap());
                }
            }
        }
        for f in 0..1u32 << rows {
            let bits: Vec<bool> = (0..rows).map(|r| f >> r & 1 == 1).collect();
            let t = TruthTable::new(vars.clone(), bits).unwrap();
            let ios = ios_from_tt(&t);
            let ion = ion_from_tt(&t);
            // S @ S is the constant 0, which the restricted form leaves out.
            let ios_by_search = ios_reachable.contains(&t) && !t.onset().is_empty();
            assert_eq!(ios_by_search, ios.expr().is_some(), "IOS {}", t.bit_string());
            assert_eq!(ion_reachable.contains(&t), ion.expr().is_some(), "ION {}", t.bit_string());
            for r in [ios, ion] {
                if let Restricted::Supported(e) = r {
                    assert_eq!(truth_table(&e, Some(&vars)).unwrap(), t);
                }
            }
        }
    }
}

#[test]
fn constant_one_is_only_the_degenerate_ion() {
    let vars = abc(2);
    let n = nand_of_minterm(&vars, 0);
    let degenerate = Expr::imply(n.clone(), n);
    let t = truth_table(&degenerate, Some(&vars)).unwrap();
    assert!(t.offset().is_empty());
    assert!(matches!(ion_from_tt(&t), Restricted::Unsupported(_)));
}
