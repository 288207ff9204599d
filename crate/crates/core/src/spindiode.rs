//! Two-input OR / IAND gate netlists, the basis set of a bilayer avalanche
//! spin-diode. Evaluation is purely combinational.
//!
//! Signals are referenced as `in:<var>`, `in:!<var>` (complemented primary
//! input, available dual-rail), `const:0`, `const:1` or `g<i>`.

use std::fmt;

use thiserror::Error;

use crate::canon::CanonError;
use crate::expr::{Expr, VarId};
use crate::semantics::Assignment;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetlistError {
    #[error(transparent)]
    Shape(#[from] CanonError),
    #[error("input {0} is not bound")]
    Unbound(VarId),
    #[error("gate g{gate} reads {signal}, which is not a primary input or an earlier gate")]
    Order { gate: usize, signal: Signal },
    #[error("netlist text line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Signal {
    Input { var: VarId, inverted: bool },
    Const(bool),
    Gate(usize),
}

impl fmt::Display for Signal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Signal::Input { var, inverted: false } => write!(f, "in:{var}"),
            Signal::Input { var, inverted: true } => write!(f, "in:!{var}"),
            Signal::Const(b) => write!(f, "const:{}", u8::from(*b)),
            Signal::Gate(i) => write!(f, "g{i}"),
        }
    }
}

impl Signal {
    pub fn parse(text: &str) -> Option<Signal> {
        if let Some(rest) = text.strip_prefix("in:") {
            let (name, inverted) = match rest.strip_prefix('!') {
                Some(n) => (n, true),
                None => (rest, false),
            };
            return VarId::new(name).ok().map(|var| Signal::Input { var, inverted });
        }
        match text {
            "const:0" => return Some(Signal::Const(false)),
            "const:1" => return Some(Signal::Const(true)),
            _ => {}
        }
        text.strip_prefix('g').and_then(|d| d.parse().ok()).map(Signal::Gate)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    Or,
    /// `a & !b`
    Iand,
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GateKind::Or => "OR",
            GateKind::Iand => "IAND",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gate {
    pub kind: GateKind,
    pub a: Signal,
    pub b: Signal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Netlist {
    pub inputs: Vec<VarId>,
    /// Topologically ordered; gate `i` is `g<i>`.
    pub gates: Vec<Gate>,
    pub output: Signal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NetlistStats {
    pub gates: usize,
    pub depth: usize,
    pub iand: usize,
    pub or: usize,
}

impl Netlist {
    /// Every gate reads primary inputs, constants or earlier gates.
    pub fn validate(&self) -> Result<(), NetlistError> {
        let ok = |s: &Signal, limit: usize| match s {
            Signal::Input { var, .. } => self.inputs.contains(var),
            Signal::Const(_) => true,
            Signal::Gate(j) => *j < limit,
        };
        for (i, g) in self.gates.iter().enumerate() {
            for s in [&g.a, &g.b] {
                if !ok(s, i) {
                    return Err(NetlistError::Order { gate: i, signal: s.clone() });
                }
            }
        }
        if !ok(&self.output, self.gates.len()) {
            return Err(NetlistError::Order { gate: self.gates.len(), signal: self.output.clone() });
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let names: Vec<&str> = self.inputs.iter().map(VarId::as_str).collect();
        let mut out = format!("inputs {}\n", names.join(" ")).replace("inputs \n", "inputs\n");
        for (i, g) in self.gates.iter().enumerate() {
            out.push_str(&format!("g{i} = {} {} {}\n", g.kind, g.a, g.b));
        }
        out.push_str(&format!("output {}\n", self.output));
        out
    }

    pub fn from_text(text: &str) -> Result<Netlist, NetlistError> {
        let mut inputs = None;
        let mut gates = Vec::new();
        let mut output = None;
        for (n, line) in text.lines().enumerate() {
            let err = |message: String| NetlistError::Parse { line: n + 1, message };
            let sig = |t: &str| Signal::parse(t).ok_or_else(|| err(format!("bad signal {t:?}")));
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                [] => {}
                ["inputs", names @ ..] => {
                    let vars = names.iter().map(|v| VarId::new(*v)).collect::<Result<Vec<_>, _>>();
                    inputs = Some(vars.map_err(|e| err(e.to_string()))?);
                }
                [id, "=", kind, a, b] => {
                    if *id != format!("g{}", gates.len()) {
                        return Err(err(format!("expected g{}, got {id}", gates.len())));
                    }
                    let kind = match *kind {
                        "OR" => GateKind::Or,
                        "IAND" => GateKind::Iand,
                        other => return Err(err(format!("unknown gate kind {other:?}"))),
                    };
                    gates.push(Gate { kind, a: sig(a)?, b: sig(b)? });
                }
                ["output", s] => output = Some(sig(s)?),
                _ => return Err(err(format!("unrecognized line {line:?}"))),
            }
        }
        let missing = |what: &str| NetlistError::Parse { line: 0, message: format!("missing {what} line") };
        let netlist = Netlist {
            inputs: inputs.ok_or_else(|| missing("inputs"))?,
            gates,
            output: output.ok_or_else(|| missing("output"))?,
        };
        netlist.validate()?;
        Ok(netlist)
    }
}

fn shape(e: &Expr) -> CanonError {
    CanonError::Shape { expected: "SOI", got: e.to_string() }
}

fn leaf(e: &Expr) -> Option<Signal> {
    match e {
        Expr::Const(b) => Some(Signal::Const(*b)),
        Expr::Var(v) => Some(Signal::Input { var: v.clone(), inverted: false }),
        Expr::Not(inner) => match inner.as_ref() {
            Expr::Var(v) => Some(Signal::Input { var: v.clone(), inverted: true }),
            Expr::Const(b) => Some(Signal::Const(!b)),
            _ => None,
        },
        _ => None,
    }
}

struct Builder {
    gates: Vec<Gate>,
}

impl Builder {
    fn gate(&mut self, kind: GateKind, a: Signal, b: Signal) -> Signal {
        self.gates.push(Gate { kind, a, b });
        Signal::Gate(self.gates.len() - 1)
    }

    /// Left-fold cascade `((x1 @ x2) @ x3) ..` with constant operands folded.
    fn term(&mut self, e: &Expr) -> Result<Signal, CanonError> {
        let ops: &[Expr] = match e {
            Expr::Iand(ops) => ops,
            other => std::slice::from_ref(other),
        };
        let mut sigs = ops.iter().map(|x| leaf(x).ok_or_else(|| shape(e)));
        let mut acc = sigs.next().expect("chains are non-empty")?;
        for s in sigs {
            let s = s?;
            acc = match (acc, s) {
                (Signal::Const(false), _) | (_, Signal::Const(true)) => Signal::Const(false),
                (a, Signal::Const(false)) => a,
                (a, b) => self.gate(GateKind::Iand, a, b),
            };
        }
        Ok(acc)
    }

    /// Balanced OR tree; the left half takes the extra operand.
    fn or_tree(&mut self, sigs: &[Signal]) -> Signal {
        match sigs {
            [] => Signal::Const(false),
            [one] => one.clone(),
            _ => {
                let mid = sigs.len().div_ceil(2);
                let a = self.or_tree(&sigs[..mid]);
                let b = self.or_tree(&sigs[mid..]);
                self.gate(GateKind::Or, a, b)
            }
        }
    }
}

/// Compile a sum of IAND chains. Inputs are the expression's variables in
/// order of first appearance.
pub fn compile_soi(e: &Expr) -> Result<Netlist, NetlistError> {
    compile_soi_with_vars(e, None)
}

pub fn compile_soi_with_vars(e: &Expr, vars: Option<&[VarId]>) -> Result<Netlist, NetlistError> {
    let inputs = match vars {
        Some(vs) => vs.to_vec(),
        None => e.vars(),
    };
    if let Some(v) = e.vars().into_iter().find(|v| !inputs.contains(v)) {
        return Err(NetlistError::Unbound(v));
    }
    let terms: &[Expr] = match e {
        Expr::Or(ts) => ts,
        other => std::slice::from_ref(other),
    };
    let mut b = Builder { gates: Vec::new() };
    let mut sigs = Vec::new();
    for t in terms {
        match b.term(t)? {
            Signal::Const(false) => {}
            s => sigs.push(s),
        }
    }
    let output = if sigs.contains(&Signal::Const(true)) {
        // Gates already emitted for other terms are dead; drop them.
        b.gates.clear();
        Signal::Const(true)
    } else {
        b.or_tree(&sigs)
    };
    let netlist = Netlist { inputs, gates: b.gates, output };
    debug_assert!(netlist.validate().is_ok());
    Ok(netlist)
}

fn value(s: &Signal, a: &Assignment, values: &[bool]) -> Result<bool, NetlistError> {
    match s {
        Signal::Input { var, inverted } => {
            a.get(var).map(|b| b != *inverted).ok_or_else(|| NetlistError::Unbound(var.clone()))
        }
        Signal::Const(b) => Ok(*b),
        Signal::Gate(i) => Ok(values[*i]),
    }
}

/// Evaluate gates in order.
pub fn simulate_netlist(n: &Netlist, inputs: &Assignment) -> Result<bool, NetlistError> {
    n.validate()?;
    let mut values = Vec::with_capacity(n.gates.len());
    for g in &n.gates {
        let a = value(&g.a, inputs, &values)?;
        let b = value(&g.b, inputs, &values)?;
        values.push(match g.kind {
            GateKind::Or => a || b,
            GateKind::Iand => a && !b,
        });
    }
    value(&n.output, inputs, &values)
}

pub fn netlist_stats(n: &Netlist) -> NetlistStats {
    let mut depth = Vec::with_capacity(n.gates.len());
    let level = |s: &Signal, depth: &[usize]| match s {
        Signal::Gate(i) => depth[*i],
        _ => 0,
    };
    for g in &n.gates {
        let d = 1 + level(&g.a, &depth).max(level(&g.b, &depth));
        depth.push(d);
    }
    let iand = n.gates.iter().filter(|g| g.kind == GateKind::Iand).count();
    NetlistStats { gates: n.gates.len(), depth: level(&n.output, &depth), iand, or: n.gates.len() - iand }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn stats(s: &str) -> NetlistStats {
        netlist_stats(&compile_soi(&parse(s).unwrap()).unwrap())
    }

    fn sim(n: &Netlist, bits: &str) -> bool {
        simulate_netlist(n, &Assignment::from_bits(&n.inputs, bits).unwrap()).unwrap()
    }

    #[test]
    fn gate_counts() {
        assert_eq!(stats("A @ B"), NetlistStats { gates: 1, depth: 1, iand: 1, or: 0 });
        assert_eq!(stats("A @ !B | A @ !C | B @ !C"), NetlistStats { gates: 5, depth: 3, iand: 3, or: 2 });
        assert_eq!(stats("A @ B @ C | A @ !B @ !C"), NetlistStats { gates: 5, depth: 3, iand: 4, or: 1 });
    }

    #[test]
    fn iand_gate_truth() {
        let n = compile_soi(&parse("A @ B").unwrap()).unwrap();
        let rows: Vec<bool> = ["00", "01", "10", "11"].iter().map(|b| sim(&n, b)).collect();
        assert_eq!(rows, [false, false, true, false]);
    }

    #[test]
    fn carry_is_majority() {
        let n = compile_soi(&parse("A @ !B | A @ !C | B @ !C").unwrap()).unwrap();
        for row in 0..8u32 {
            assert_eq!(sim(&n, &format!("{row:03b}")), row.count_ones() >= 2);
        }
    }

    #[test]
    fn pass_through_and_constants() {
        let n = compile_soi(&parse("A").unwrap()).unwrap();
        assert!(n.gates.is_empty());
        assert!(sim(&n, "1") && !sim(&n, "0"));
        let n = compile_soi(&parse("!A").unwrap()).unwrap();
        assert_eq!(n.output.to_string(), "in:!A");
        let n = compile_soi(&parse("A @ 0 @ B").unwrap()).unwrap();
        assert_eq!(n.gates.len(), 1);
        let n = compile_soi(&parse("A @ 1 | B").unwrap()).unwrap();
        assert_eq!(n.output, Signal::Input { var: VarId::new("B").unwrap(), inverted: false });
        let n = compile_soi(&parse("A @ B | 1").unwrap()).unwrap();
        assert!(n.gates.is_empty() && n.output == Signal::Const(true));
        let n = compile_soi(&Expr::Const(false)).unwrap();
        assert_eq!(n.output, Signal::Const(false));
    }

    #[test]
    fn rejects_non_soi() {
        assert!(matches!(compile_soi(&parse("A & B").unwrap()), Err(NetlistError::Shape(_))));
        assert!(matches!(compile_soi(&parse("(A | B) @ C").unwrap()), Err(NetlistError::Shape(_))));
    }

    #[test]
    fn text_round_trip() {
        let n = compile_soi(&parse("A @ !B | A @ !C | B @ !C").unwrap()).unwrap();
        let text = n.to_text();
        assert_eq!(
            text,
            "inputs A B C\ng0 = IAND in:A in:!B\ng1 = IAND in:A in:!C\ng2 = IAND in:B in:!C\n\
             g3 = OR g0 g1\ng4 = OR g3 g2\noutput g4\n"
        );
        assert_eq!(Netlist::from_text(&text).unwrap(), n);
        assert!(matches!(
            Netlist::from_text("inputs A\ng0 = OR g1 in:A\noutput g0\n"),
            Err(NetlistError::Order { gate: 0, .. })
        ));
        assert!(matches!(
            Netlist::from_text("inputs A\ng0 = XOR in:A in:A\n"),
            Err(NetlistError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn unbound_input() {
        let n = compile_soi(&parse("A @ B").unwrap()).unwrap();
        let a = Assignment::new(vec![(VarId::new("A").unwrap(), true)]);
        assert_eq!(simulate_netlist(&n, &a), Err(NetlistError::Unbound(VarId::new("B").unwrap())));
    }
}
