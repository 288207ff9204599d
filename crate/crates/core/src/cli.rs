//! Command-line front end. [`run`] takes the argument vector and returns the
//! exit status with the text that would be printed, so the binary is a thin
//! wrapper and every command is testable in-process.
//!
//! Exit codes: 0 ok, 1 refuted or inequivalent, 2 usage or input error,
//! 3 internal error.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::canon::{
    ion_from_tt, ios_from_tt, noi_from_tt, noi_to_soi, soi_from_tt, soi_to_noi, split_noi, split_soi, Restricted,
};
use crate::expr::{Expr, VarId};
use crate::laws::{catalog, demorgan_dual_expr, dual, negative_fixtures, verify_rule, RuleReport, RuleStatus};
use crate::memristor::{compile_noi_with_vars, simulate, step_count, ImplyProgram};
use crate::minimize::{minimized_noi, minimized_soi, MinimizeError};
use crate::semantics::{
    classical_dual_tt, demorgan_dual_tt, equivalent, equivalent_over, truth_table, Assignment, TruthTable, Verdict,
};
use crate::spindiode::{compile_soi_with_vars, netlist_stats, simulate_netlist, Netlist};
use crate::syntax::parse;

#[derive(Debug, Parser)]
#[command(
    name = "asymlogic",
    version,
    about = "IAND/IMPLY logic: tables, laws, canonical forms, minimization, backends"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Input {
    /// Expression, e.g. "A @ B | C".
    #[arg(conflicts_with = "table")]
    expr: Option<String>,
    /// Truth-table file: variable names on the first line, 2^n bits on the second.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Variable order, space or comma separated. Defaults to first appearance.
    #[arg(long)]
    vars: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct FormatOnly {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CanonForm {
    Soi,
    Noi,
    Ios,
    Ion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TwoLevel {
    Soi,
    Noi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Memristor,
    Spindiode,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the truth table.
    Table(Input),
    /// Verify the law catalog by exhaustive enumeration.
    Laws(FormatOnly),
    /// Canonical form of a function.
    Canon {
        #[arg(long, value_enum)]
        form: CanonForm,
        #[command(flatten)]
        input: Input,
    },
    /// Convert between SOI and NOI term by term.
    Convert {
        #[arg(long, value_enum)]
        to: TwoLevel,
        #[command(flatten)]
        input: Input,
    },
    /// Minimum-literal two-level form.
    Minimize {
        #[arg(long, value_enum)]
        form: TwoLevel,
        #[command(flatten)]
        input: Input,
    },
    /// Compile to an IMPLY program (NOI input) or an OR/IAND netlist (SOI input).
    /// A table input compiles its minimized form.
    Compile {
        #[arg(long, value_enum)]
        target: Target,
        #[command(flatten)]
        input: Input,
    },
    /// Compile, then run on one input vector given as bits in variable order.
    Simulate {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        inputs: String,
        #[command(flatten)]
        input: Input,
    },
    /// Check two expressions for equivalence.
    Verify {
        left: String,
        right: String,
        #[arg(long)]
        vars: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classical dual: swap AND/OR and 0/1.
    Dual(Input),
    /// De Morgan dual: swap IAND and IMPLY chains.
    Dmdual(Input),
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input { module: &'static str, message: String },
    Internal(String),
}

impl Failure {
    fn input(module: &'static str, e: impl ToString) -> Failure {
        Failure::Input { module, message: e.to_string() }
    }
}

type CmdResult = Result<(i32, String), Failure>;

/// Run the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.command) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(f) => {
            let (code, stderr) = match f {
                Failure::Usage(m) => (2, format!("error: usage: {m}\n")),
                Failure::Input { module, message } => (2, format!("error: {module}: {message}\n")),
                Failure::Internal(m) => (3, format!("error: internal: {m}\n")),
            };
            Outcome { code, stdout: String::new(), stderr }
        }
    }
}

fn parse_vars(text: &str) -> Result<Vec<VarId>, Failure> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| VarId::new(s).map_err(|e| Failure::input("expr", e)))
        .collect()
}

fn parse_expr(text: &str) -> Result<Expr, Failure> {
    parse(text).map_err(|e| Failure::input("syntax", e))
}

enum Source {
    Expr(Expr, Option<Vec<VarId>>),
    Table(TruthTable),
}

impl Input {
    fn load(&self) -> Result<Source, Failure> {
        let vars = self.vars.as_deref().map(parse_vars).transpose()?;
        match (&self.expr, &self.table) {
            (Some(text), None) => Ok(Source::Expr(parse_expr(text)?, vars)),
            (None, Some(path)) => {
                let text =
                    fs::read_to_string(path).map_err(|e| Failure::input("io", format!("{}: {e}", path.display())))?;
                let t = TruthTable::from_text(&text).map_err(|e| Failure::input("semantics", e))?;
                if vars.as_ref().is_some_and(|v| v.as_slice() != t.vars()) {
                    return Err(Failure::Usage("--vars must match the table file's variables".into()));
                }
                Ok(Source::Table(t))
            }
            _ => Err(Failure::Usage("give exactly one of an expression or --table FILE".into())),
        }
    }

    fn table(&self) -> Result<(Option<Expr>, TruthTable), Failure> {
        match self.load()? {
            Source::Expr(e, vars) => {
                let t = truth_table(&e, vars.as_deref()).map_err(|x| Failure::input("semantics", x))?;
                Ok((Some(e), t))
            }
            Source::Table(t) => Ok((None, t)),
        }
    }

    fn expr(&self, command: &str) -> Result<(Expr, Option<Vec<VarId>>), Failure> {
        match self.load()? {
            Source::Expr(e, vars) => Ok((e, vars)),
            Source::Table(_) => Err(Failure::Usage(format!("{command} needs an expression, not a table"))),
        }
    }
}

fn table_json(t: &TruthTable) -> Value {
    json!({ "vars": t.vars().iter().map(VarId::as_str).collect::<Vec<_>>(), "bits": t.bit_string() })
}

fn assignment_json(a: &Assignment) -> Value {
    Value::Object(a.pairs().iter().map(|(v, b)| (v.to_string(), json!(u8::from(*b)))).collect::<Map<_, _>>())
}

fn record(command: &str, fields: Value) -> String {
    let mut obj = Map::new();
    obj.insert("command".into(), json!(command));
    if let Value::Object(rest) = fields {
        obj.extend(rest);
    }
    format!("{}\n", Value::Object(obj))
}

fn emit_expr(command: &str, format: Format, e: &Expr, extra: Value) -> String {
    match format {
        Format::Text => format!("{e}\n"),
        Format::Json => {
            let mut fields = json!({ "expr": e.to_string() });
            if let (Value::Object(f), Value::Object(x)) = (&mut fields, extra) {
                f.extend(x);
            }
            record(command, fields)
        }
    }
}

fn emit_table(command: &str, format: Format, t: &TruthTable) -> String {
    match format {
        Format::Text => t.to_text(),
        Format::Json => record(command, json!({ "table": table_json(t) })),
    }
}

fn minimize_error(e: MinimizeError) -> Failure {
    match e {
        MinimizeError::Capacity(_) => Failure::input("minimize", e),
        other => Failure::Internal(other.to_string()),
    }
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Table(input) => {
            let (_, t) = input.table()?;
            Ok((0, emit_table("table", input.format, &t)))
        }
        Command::Laws(opts) => laws(opts.format),
        Command::Canon { form, input } => {
            let (_, t) = input.table()?;
            let e = match form {
                CanonForm::Soi => soi_from_tt(&t),
                CanonForm::Noi => noi_from_tt(&t),
                CanonForm::Ios | CanonForm::Ion => {
                    let r = if form == CanonForm::Ios { ios_from_tt(&t) } else { ion_from_tt(&t) };
                    match r {
                        Restricted::Supported(e) => e,
                        Restricted::Unsupported(why) => {
                            return Err(Failure::input("canon", format!("unsupported: {why}")))
                        }
                    }
                }
            };
            let form = format!("{form:?}").to_lowercase();
            Ok((0, emit_expr("canon", input.format, &e, json!({ "form": form }))))
        }
        Command::Convert { to, input } => {
            let (e, _) = input.expr("convert")?;
            let out = match to {
                TwoLevel::Noi => soi_to_noi(&e),
                TwoLevel::Soi => noi_to_soi(&e),
            }
            .map_err(|x| Failure::input("canon", x))?;
            Ok((0, emit_expr("convert", input.format, &out, json!({}))))
        }
        Command::Minimize { form, input } => {
            let (_, t) = input.table()?;
            let e = match form {
                TwoLevel::Soi => minimized_soi(&t),
                TwoLevel::Noi => minimized_noi(&t),
            }
            .map_err(minimize_error)?;
            Ok((0, emit_expr("minimize", input.format, &e, json!({ "literals": e.literal_count() }))))
        }
        Command::Compile { target, input } => {
            let compiled = compile(target, &input)?;
            Ok((0, compiled.emit(input.format)))
        }
        Command::Simulate { target, inputs, input } => {
            let compiled = compile(target, &input)?;
            let vars = compiled.vars();
            let a = Assignment::from_bits(&vars, &inputs).map_err(|e| Failure::input("semantics", e))?;
            let out = match &compiled {
                Compiled::Program(_, p) => simulate(p, &a).map_err(|e| Failure::input("memristor", e))?.output,
                Compiled::Netlist(_, n) => simulate_netlist(n, &a).map_err(|e| Failure::input("spindiode", e))?,
            };
            let text = match input.format {
                Format::Text => format!("{}\n", u8::from(out)),
                Format::Json => {
                    let mut fields = compiled.fields();
                    fields["inputs"] = json!(assignment_json(&a));
                    fields["output"] = json!(u8::from(out));
                    record("simulate", fields)
                }
            };
            Ok((0, text))
        }
        Command::Verify { left, right, vars, format } => {
            let (l, r) = (parse_expr(&left)?, parse_expr(&right)?);
            let verdict = match vars.as_deref().map(parse_vars).transpose()? {
                Some(vs) => equivalent_over(&l, &r, &vs),
                None => equivalent(&l, &r),
            }
            .map_err(|e| Failure::input("semantics", e))?;
            let (code, status, cex) = match &verdict {
                Verdict::Equal => (0, "equivalent", Value::Null),
                Verdict::Counterexample(a) => (1, "inequivalent", assignment_json(a)),
            };
            let text = match (format, &verdict) {
                (Format::Text, Verdict::Equal) => "equivalent\n".to_string(),
                (Format::Text, Verdict::Counterexample(a)) => format!("inequivalent: counterexample {a}\n"),
                (Format::Json, _) => record(
                    "verify",
                    json!({ "expr": [l.to_string(), r.to_string()], "status": status, "counterexample": cex }),
                ),
            };
            Ok((code, text))
        }
        Command::Dual(input) => match input.load()? {
            Source::Expr(e, _) => Ok((0, emit_expr("dual", input.format, &dual(&e), json!({})))),
            Source::Table(t) => Ok((0, emit_table("dual", input.format, &classical_dual_tt(&t)))),
        },
        Command::Dmdual(input) => match input.load()? {
            Source::Expr(e, _) => {
                let d = demorgan_dual_expr(&e).map_err(|x| Failure::input("laws", x))?;
                Ok((0, emit_expr("dmdual", input.format, &d, json!({}))))
            }
            Source::Table(t) => Ok((0, emit_table("dmdual", input.format, &demorgan_dual_tt(&t)))),
        },
    }
}

fn report_line(r: &RuleReport) -> String {
    match &r.status {
        RuleStatus::Proven => format!("Proven   {} [{}] rows={}", r.name, r.citation, r.rows),
        RuleStatus::Refuted(a) => format!("Refuted  {} [{}] rows={} counterexample {a}", r.name, r.citation, r.rows),
    }
}

fn report_json(r: &RuleReport, fixture: bool) -> String {
    let mut v: Value = serde_json::from_str(&r.to_record()).expect("record is JSON");
    if let RuleStatus::Refuted(a) = &r.status {
        v["counterexample"] = assignment_json(a);
    }
    v["fixture"] = json!(fixture);
    format!("{v}\n")
}

fn laws(format: Format) -> CmdResult {
    let rules: Vec<RuleReport> = catalog().iter().map(verify_rule).collect();
    let fixtures: Vec<RuleReport> = negative_fixtures().iter().map(verify_rule).collect();
    let proven = rules.iter().filter(|r| r.is_proven()).count();
    let refuted_fixtures = fixtures.iter().filter(|r| !r.is_proven()).count();
    let mut out = String::new();
    for r in &rules {
        out.push_str(&match format {
            Format::Text => format!("{}\n", report_line(r)),
            Format::Json => report_json(r, false),
        });
    }
    for r in &fixtures {
        out.push_str(&match format {
            Format::Text => format!("fixture  {}\n", report_line(r)),
            Format::Json => report_json(r, true),
        });
    }
    if format == Format::Text {
        out.push_str(&format!(
            "{proven}/{} rules proven, {refuted_fixtures}/{} negative fixtures refuted\n",
            rules.len(),
            fixtures.len()
        ));
    }
    let ok = proven == rules.len() && refuted_fixtures == fixtures.len();
    Ok((if ok { 0 } else { 1 }, out))
}

enum Compiled {
    Program(Expr, ImplyProgram),
    Netlist(Expr, Netlist),
}

impl Compiled {
    fn vars(&self) -> Vec<VarId> {
        match self {
            Compiled::Program(_, p) => p.inputs.iter().map(|(v, _)| v.clone()).collect(),
            Compiled::Netlist(_, n) => n.inputs.clone(),
        }
    }

    fn fields(&self) -> Value {
        match self {
            Compiled::Program(e, p) => {
                let c = step_count(p);
                json!({
                    "target": "memristor",
                    "expr": e.to_string(),
                    "steps": p.steps.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "step_count": { "total": c.total, "resets": c.resets, "implies": c.implies, "registers": c.registers },
                })
            }
            Compiled::Netlist(e, n) => {
                let s = netlist_stats(n);
                let gates: Vec<String> =
                    n.gates.iter().enumerate().map(|(i, g)| format!("g{i} = {} {} {}", g.kind, g.a, g.b)).collect();
                json!({
                    "target": "spindiode",
                    "expr": e.to_string(),
                    "gates": gates,
                    "output": n.output.to_string(),
                    "stats": { "gates": s.gates, "depth": s.depth, "iand": s.iand, "or": s.or },
                })
            }
        }
    }

    fn emit(&self, format: Format) -> String {
        match format {
            Format::Text => match self {
                Compiled::Program(_, p) => p.to_text(),
                Compiled::Netlist(_, n) => n.to_text(),
            },
            Format::Json => record("compile", self.fields()),
        }
    }
}

fn compile(target: Target, input: &Input) -> Result<Compiled, Failure> {
    let (e, vars) = match input.load()? {
        Source::Expr(e, vars) => (e, vars),
        Source::Table(t) => {
            let e = match target {
                Target::Memristor => minimized_noi(&t),
                Target::Spindiode => minimized_soi(&t),
            }
            .map_err(minimize_error)?;
            (e, Some(t.vars().to_vec()))
        }
    };
    match target {
        Target::Memristor => {
            if !matches!(e, Expr::Const(true)) {
                split_noi(&e).map_err(|x| Failure::input("memristor", x))?;
            }
            let p = compile_noi_with_vars(&e, vars.as_deref()).map_err(|x| Failure::input("memristor", x))?;
            Ok(Compiled::Program(e, p))
        }
        Target::Spindiode => {
            if !matches!(e, Expr::Const(_)) {
                split_soi(&e).map_err(|x| Failure::input("spindiode", x))?;
            }
            let n = compile_soi_with_vars(&e, vars.as_deref()).map_err(|x| Failure::input("spindiode", x))?;
            Ok(Compiled::Netlist(e, n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Outcome {
        run(std::iter::once("asymlogic").chain(args.iter().copied()))
    }

    #[test]
    fn table_command() {
        let o = cli(&["table", "A @ B"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "A B\n0010\n"));
        let o = cli(&["table", "A -> B", "--format", "json"]);
        assert_eq!(o.stdout, "{\"command\":\"table\",\"table\":{\"bits\":\"1101\",\"vars\":[\"A\",\"B\"]}}\n");
        let o = cli(&["table", "B & A", "--vars", "A,B"]);
        assert_eq!(o.stdout, "A B\n0001\n");
    }

    #[test]
    fn verify_command() {
        let o = cli(&["verify", "A @ B", "!B @ !A"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "equivalent\n"));
        let o = cli(&["verify", "A @ B", "B @ A"]);
        assert_eq!(o.code, 1);
        assert_eq!(o.stdout, "inequivalent: counterexample A=0 B=1\n");
        let o = cli(&["verify", "A @ B", "B @ A", "--format", "json"]);
        assert!(
            o.stdout.contains("\"status\":\"inequivalent\"")
                && o.stdout.contains("\"counterexample\":{\"A\":0,\"B\":1}")
        );
    }

    #[test]
    fn usage_and_input_errors() {
        let o = cli(&["table", "A @ B -> C"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("error: syntax:") && o.stderr.contains("parenthesize mixed asymmetric operators"));
        assert_eq!(cli(&["table"]).code, 2);
        assert_eq!(cli(&["frobnicate"]).code, 2);
        assert_eq!(cli(&["canon", "--form", "ios", "A | B"]).code, 2);
        assert_eq!(cli(&["convert", "--to", "noi", "A & B"]).code, 2);
        assert_eq!(cli(&["table", "--table", "/nonexistent/file"]).code, 2);
        assert_eq!(cli(&["simulate", "--target", "memristor", "--inputs", "1", "!(A & B)"]).code, 2);
        assert_eq!(cli(&["--help"]).code, 0);
    }

    #[test]
    fn canon_convert_dual() {
        assert_eq!(cli(&["canon", "--form", "soi", "A & B"]).stdout, "A @ !B\n");
        assert_eq!(cli(&["canon", "--form", "noi", "A & B"]).stdout, "!(A -> !B)\n");
        assert_eq!(cli(&["convert", "--to", "noi", "A @ !B | !A @ B"]).stdout, "!((B -> !A) & (!B -> A))\n");
        assert_eq!(cli(&["dual", "A @ B"]).stdout, "A | !B\n");
        assert_eq!(cli(&["dmdual", "A @ B @ C"]).stdout, "A -> B -> C\n");
    }

    #[test]
    fn compile_and_simulate() {
        let o = cli(&["compile", "--target", "memristor", "!(p & q)"]);
        assert_eq!(o.stdout, "registers 3\ninput p r0\ninput q r1\noutput r2\nRESET r2\nIMPLY r0 r2\nIMPLY r1 r2\n");
        assert_eq!(cli(&["simulate", "--target", "memristor", "--inputs", "11", "!(p & q)"]).stdout, "0\n");
        assert_eq!(cli(&["simulate", "--target", "spindiode", "--inputs", "10", "A @ B"]).stdout, "1\n");
        assert_eq!(cli(&["compile", "--target", "spindiode", "A & B"]).code, 2);
    }
}
