//! Stateful IMPLY logic on a memristor array, at the logic level.
//!
//! A register is one memristor: 1 is the conductive state, 0 the resistive
//! state. Two operations exist: `RESET t` drives `t` to 0, and `IMPLY c t`
//! applies the conditioning voltage to `c` and the set voltage to `t`, leaving
//! `t <- !c | t`. Input registers are never written.

use std::fmt;

use thiserror::Error;

use crate::canon::{split_noi, CanonError};
use crate::expr::{Expr, VarId};
use crate::semantics::{eval, Assignment, EvalError};

/// Largest number of input variables `compile_noi` accepts.
pub const MAX_PROGRAM_INPUTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MemristorError {
    #[error("register r{index} out of range for {registers} registers")]
    Index { index: usize, registers: usize },
    #[error("IMPLY needs distinct registers, got r{0} twice")]
    SameRegister(usize),
    #[error("step {step} writes input register r{register}")]
    InputWrite { step: usize, register: usize },
    #[error("input {0} is not bound")]
    Unbound(VarId),
    #[error("{0} inputs exceed the limit of {MAX_PROGRAM_INPUTS}")]
    Capacity(usize),
    #[error(transparent)]
    Shape(#[from] CanonError),
    #[error("program text line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ImplyStep {
    Reset(usize),
    Imply { cond: usize, set: usize },
}

impl ImplyStep {
    pub fn target(&self) -> usize {
        match *self {
            ImplyStep::Reset(t) => t,
            ImplyStep::Imply { set, .. } => set,
        }
    }

    fn map(self, f: impl Fn(usize) -> usize) -> ImplyStep {
        match self {
            ImplyStep::Reset(t) => ImplyStep::Reset(f(t)),
            ImplyStep::Imply { cond, set } => ImplyStep::Imply { cond: f(cond), set: f(set) },
        }
    }
}

impl fmt::Display for ImplyStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImplyStep::Reset(t) => write!(f, "RESET r{t}"),
            ImplyStep::Imply { cond, set } => write!(f, "IMPLY r{cond} r{set}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplyProgram {
    pub registers: usize,
    pub inputs: Vec<(VarId, usize)>,
    pub output: usize,
    pub steps: Vec<ImplyStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrayState(pub Vec<bool>);

impl ArrayState {
    pub fn get(&self, r: usize) -> bool {
        self.0[r]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepCount {
    pub total: usize,
    pub resets: usize,
    pub implies: usize,
    pub registers: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simulation {
    pub output: bool,
    pub state: ArrayState,
    /// State after every step, in order.
    pub trace: Vec<ArrayState>,
}

/// Apply one step.
pub fn step_semantics(s: &ArrayState, step: &ImplyStep) -> Result<ArrayState, MemristorError> {
    let registers = s.0.len();
    let check = |index: usize| {
        if index < registers {
            Ok(())
        } else {
            Err(MemristorError::Index { index, registers })
        }
    };
    let mut next = s.clone();
    match *step {
        ImplyStep::Reset(t) => {
            check(t)?;
            next.0[t] = false;
        }
        ImplyStep::Imply { cond, set } => {
            check(cond)?;
            check(set)?;
            if cond == set {
                return Err(MemristorError::SameRegister(cond));
            }
            next.0[set] = !s.0[cond] || s.0[set];
        }
    }
    Ok(next)
}

impl ImplyProgram {
    fn is_input(&self, r: usize) -> bool {
        self.inputs.iter().any(|(_, i)| *i == r)
    }

    /// Check register bounds, distinct IMPLY operands and read-only inputs.
    pub fn validate(&self) -> Result<(), MemristorError> {
        let registers = self.registers;
        let check = |index: usize| {
            if index < registers {
                Ok(())
            } else {
                Err(MemristorError::Index { index, registers })
            }
        };
        check(self.output)?;
        for (_, r) in &self.inputs {
            check(*r)?;
        }
        for (i, s) in self.steps.iter().enumerate() {
            if let ImplyStep::Imply { cond, set } = *s {
                check(cond)?;
                if cond == set {
                    return Err(MemristorError::SameRegister(cond));
                }
            }
            check(s.target())?;
            if self.is_input(s.target()) {
                return Err(MemristorError::InputWrite { step: i, register: s.target() });
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("registers {}\n", self.registers);
        for (v, r) in &self.inputs {
            out.push_str(&format!("input {v} r{r}\n"));
        }
        out.push_str(&format!("output r{}\n", self.output));
        for s in &self.steps {
            out.push_str(&format!("{s}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<ImplyProgram, MemristorError> {
        let mut registers = None;
        let mut inputs = Vec::new();
        let mut output = None;
        let mut steps = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line_no = n + 1;
            let err = |message: String| MemristorError::Parse { line: line_no, message };
            let reg = |tok: &str| -> Result<usize, MemristorError> {
                tok.strip_prefix('r')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| err(format!("expected register like r0, got {tok:?}")))
            };
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                [] => {}
                ["registers", k] => registers = Some(k.parse().map_err(|_| err(format!("bad count {k:?}")))?),
                ["input", v, r] => inputs.push((VarId::new(*v).map_err(|e| err(e.to_string()))?, reg(r)?)),
                ["output", r] => output = Some(reg(r)?),
                ["RESET", t] => steps.push(ImplyStep::Reset(reg(t)?)),
                ["IMPLY", c, t] => steps.push(ImplyStep::Imply { cond: reg(c)?, set: reg(t)? }),
                _ => return Err(err(format!("unrecognized line {line:?}"))),
            }
        }
        let missing = |what: &str| MemristorError::Parse { line: 0, message: format!("missing {what} line") };
        let program = ImplyProgram {
            registers: registers.ok_or_else(|| missing("registers"))?,
            inputs,
            output: output.ok_or_else(|| missing("output"))?,
            steps,
        };
        program.validate()?;
        Ok(program)
    }
}

/// The three-step NAND: `RESET s; IMPLY p s; IMPLY q s` with `p = r0`,
/// `q = r1`, `s = r2`.
pub fn compile_nand(in1: &VarId, in2: &VarId) -> ImplyProgram {
    ImplyProgram {
        registers: 3,
        inputs: vec![(in1.clone(), 0), (in2.clone(), 1)],
        output: 2,
        steps: vec![ImplyStep::Reset(2), ImplyStep::Imply { cond: 0, set: 2 }, ImplyStep::Imply { cond: 1, set: 2 }],
    }
}

/// Lowest-free-index register pool over the work registers.
struct Pool {
    first: usize,
    free: Vec<bool>,
}

impl Pool {
    fn alloc(&mut self) -> usize {
        match self.free.iter().position(|f| *f) {
            Some(i) => {
                self.free[i] = false;
                self.first + i
            }
            None => {
                self.free.push(false);
                self.first + self.free.len() - 1
            }
        }
    }

    fn release(&mut self, r: usize) {
        self.free[r - self.first] = true;
    }

    fn high_water(&self) -> usize {
        self.first + self.free.len()
    }
}

struct Emitter<'a> {
    vars: &'a [VarId],
    pool: Pool,
    steps: Vec<ImplyStep>,
}

impl Emitter<'_> {
    fn input(&self, v: &VarId) -> usize {
        self.vars.iter().position(|x| x == v).expect("variable bound")
    }

    /// Register holding the literal; a negative literal is materialized into
    /// a fresh register that the caller must release.
    fn literal(&mut self, v: &VarId, positive: bool) -> (usize, bool) {
        let x = self.input(v);
        if positive {
            (x, false)
        } else {
            let u = self.pool.alloc();
            self.steps.push(ImplyStep::Reset(u));
            self.steps.push(ImplyStep::Imply { cond: x, set: u });
            (u, true)
        }
    }

    /// `target <- target | value` where `value` is the complement of the literal.
    fn or_complement_of(&mut self, v: &VarId, positive: bool, target: usize) {
        let (src, temp) = self.literal(v, positive);
        self.steps.push(ImplyStep::Imply { cond: src, set: target });
        if temp {
            self.pool.release(src);
        }
    }
}

fn as_literal(e: &Expr) -> Result<(&VarId, bool), CanonError> {
    match e {
        Expr::Var(v) => Ok((v, true)),
        Expr::Not(inner) => match inner.as_ref() {
            Expr::Var(v) => Ok((v, false)),
            _ => Err(CanonError::Shape { expected: "NOI literal", got: e.to_string() }),
        },
        _ => Err(CanonError::Shape { expected: "NOI literal", got: e.to_string() }),
    }
}

/// Straight-line program before peephole optimization. Each term `T` is
/// accumulated into a work register as an OR of literal values, then OR-ed
/// into the result register as `!T`.
pub fn compile_noi_unoptimized(e: &Expr, vars: Option<&[VarId]>) -> Result<ImplyProgram, MemristorError> {
    let vars: Vec<VarId> = match vars {
        Some(vs) => vs.to_vec(),
        None => e.vars(),
    };
    if let Some(v) = e.vars().into_iter().find(|v| !vars.contains(v)) {
        return Err(MemristorError::Unbound(v));
    }
    if vars.len() > MAX_PROGRAM_INPUTS {
        return Err(MemristorError::Capacity(vars.len()));
    }
    let n = vars.len();
    let mut em = Emitter { vars: &vars, pool: Pool { first: n, free: Vec::new() }, steps: Vec::new() };
    let result = em.pool.alloc();
    em.steps.push(ImplyStep::Reset(result));

    if *e == Expr::Const(true) {
        let zero = em.pool.alloc();
        em.steps.push(ImplyStep::Reset(zero));
        em.steps.push(ImplyStep::Imply { cond: zero, set: result });
    } else {
        for term in split_noi(e)? {
            // Literal values whose OR is the term's value.
            let values: Vec<(&VarId, bool)> = match &term {
                Expr::Imply(ops) => {
                    let (last, init) = ops.split_last().unwrap();
                    let mut vals =
                        init.iter().map(|op| as_literal(op).map(|(v, p)| (v, !p))).collect::<Result<Vec<_>, _>>()?;
                    vals.push(as_literal(last)?);
                    vals
                }
                lit => vec![as_literal(lit)?],
            };
            let w = em.pool.alloc();
            em.steps.push(ImplyStep::Reset(w));
            for (v, positive) in values {
                // IMPLY c w adds !c, so the source register must hold the
                // complement of the value.
                em.or_complement_of(v, !positive, w);
            }
            em.steps.push(ImplyStep::Imply { cond: w, set: result });
            em.pool.release(w);
        }
    }
    Ok(ImplyProgram {
        registers: em.pool.high_water(),
        inputs: vars.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect(),
        output: result,
        steps: em.steps,
    })
}

/// Compile a NOI expression (`!(T1 & .. & Tm)` over literal IMPLY chains, a
/// single negated term, or a constant) and run the peephole pass.
pub fn compile_noi(e: &Expr) -> Result<ImplyProgram, MemristorError> {
    compile_noi_with_vars(e, None)
}

pub fn compile_noi_with_vars(e: &Expr, vars: Option<&[VarId]>) -> Result<ImplyProgram, MemristorError> {
    let program = peephole(&compile_noi_unoptimized(e, vars)?);
    debug_assert!(program.validate().is_ok());
    debug_assert!(program.inputs.len() > 10 || agrees_with(&program, e), "compiled program disagrees with {e}");
    Ok(program)
}

fn agrees_with(p: &ImplyProgram, e: &Expr) -> bool {
    let vars: Vec<VarId> = p.inputs.iter().map(|(v, _)| v.clone()).collect();
    (0..1usize << vars.len()).all(|row| {
        let a = Assignment::from_row(&vars, row);
        simulate(p, &a).map(|s| s.output).ok() == eval(e, &a).ok()
    })
}

fn cond_reads(steps: &[ImplyStep], r: usize, range: std::ops::Range<usize>) -> Vec<usize> {
    range.filter(|&i| matches!(steps[i], ImplyStep::Imply { cond, .. } if cond == r)).collect()
}

fn last_write_before(steps: &[ImplyStep], r: usize, k: usize) -> Option<usize> {
    (0..k).rev().find(|&i| steps[i].target() == r)
}

fn next_write_after(steps: &[ImplyStep], r: usize, k: usize) -> usize {
    (k + 1..steps.len()).find(|&i| steps[i].target() == r).unwrap_or(steps.len())
}

/// Find `RESET c; IMPLY x c; .. RESET w; IMPLY c w; .. IMPLY w t` where `c` and
/// `w` are single-use copies, i.e. `w` holds `x`, and return the step indices
/// `(a, b, i, j, k, x)`.
fn find_double_inversion(p: &ImplyProgram) -> Option<[usize; 6]> {
    let steps = &p.steps;
    for k in 0..steps.len() {
        let ImplyStep::Imply { cond: w, set: t } = steps[k] else { continue };
        if w == p.output || p.is_input(w) {
            continue;
        }
        let Some(j) = last_write_before(steps, w, k) else { continue };
        let ImplyStep::Imply { cond: c, .. } = steps[j] else { continue };
        let Some(i) = last_write_before(steps, w, j) else { continue };
        if steps[i] != ImplyStep::Reset(w) {
            continue;
        }
        let w_end = next_write_after(steps, w, k);
        if cond_reads(steps, w, i..w_end) != [k] {
            continue;
        }
        if c == p.output || p.is_input(c) {
            continue;
        }
        let Some(b) = last_write_before(steps, c, j) else { continue };
        let ImplyStep::Imply { cond: x, .. } = steps[b] else { continue };
        let Some(a) = last_write_before(steps, c, b) else { continue };
        if steps[a] != ImplyStep::Reset(c) {
            continue;
        }
        let c_end = next_write_after(steps, c, j);
        if cond_reads(steps, c, a..c_end) != [j] {
            continue;
        }
        if x == t || (b + 1..=k).any(|s| steps[s].target() == x) {
            continue;
        }
        return Some([a, b, i, j, k, x]);
    }
    None
}

/// Collapse single-use double inversions (`IMPLY w t` where `w = !!x`) into
/// `IMPLY x t`, then renumber work registers densely in order of first use.
pub fn peephole(p: &ImplyProgram) -> ImplyProgram {
    let mut out = p.clone();
    while let Some([a, b, i, j, k, x]) = find_double_inversion(&out) {
        let t = out.steps[k].target();
        out.steps[k] = ImplyStep::Imply { cond: x, set: t };
        let drop = [a, b, i, j];
        out.steps = out.steps.iter().enumerate().filter(|(s, _)| !drop.contains(s)).map(|(_, st)| *st).collect();
    }
    compact(&out)
}

fn compact(p: &ImplyProgram) -> ImplyProgram {
    let n_inputs = p.inputs.len();
    let mut map: Vec<Option<usize>> = vec![None; p.registers];
    for (_, r) in &p.inputs {
        map[*r] = Some(*r);
    }
    let mut next = p.inputs.iter().map(|(_, r)| r + 1).max().unwrap_or(0).max(n_inputs);
    let mut touch = |r: usize, map: &mut Vec<Option<usize>>| {
        if map[r].is_none() {
            map[r] = Some(next);
            next += 1;
        }
    };
    let order = std::iter::once(p.output).chain(p.steps.iter().flat_map(|s| match *s {
        ImplyStep::Reset(t) => vec![t],
        ImplyStep::Imply { cond, set } => vec![set, cond],
    }));
    for r in order {
        touch(r, &mut map);
    }
    let f = |r: usize| map[r].unwrap();
    ImplyProgram {
        registers: next,
        inputs: p.inputs.clone(),
        output: f(p.output),
        steps: p.steps.iter().map(|s| s.map(f)).collect(),
    }
}

/// Run the program: inputs load into their registers, everything else starts at 0.
pub fn simulate(p: &ImplyProgram, inputs: &Assignment) -> Result<Simulation, MemristorError> {
    let mut state = ArrayState(vec![false; p.registers]);
    for (v, r) in &p.inputs {
        let bit = inputs.get(v).ok_or_else(|| MemristorError::Unbound(v.clone()))?;
        if *r >= p.registers {
            return Err(MemristorError::Index { index: *r, registers: p.registers });
        }
        state.0[*r] = bit;
    }
    let mut trace = Vec::with_capacity(p.steps.len());
    for s in &p.steps {
        state = step_semantics(&state, s)?;
        trace.push(state.clone());
    }
    if p.output >= p.registers {
        return Err(MemristorError::Index { index: p.output, registers: p.registers });
    }
    Ok(Simulation { output: state.get(p.output), state, trace })
}

pub fn step_count(p: &ImplyProgram) -> StepCount {
    let resets = p.steps.iter().filter(|s| matches!(s, ImplyStep::Reset(_))).count();
    StepCount { total: p.steps.len(), resets, implies: p.steps.len() - resets, registers: p.registers }
}

impl From<EvalError> for MemristorError {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::Unbound(v) | EvalError::MissingVar(v) => MemristorError::Unbound(v),
            EvalError::Capacity(n) => MemristorError::Capacity(n),
            other => MemristorError::Parse { line: 0, message: other.to_string() },
        }
    }
}
