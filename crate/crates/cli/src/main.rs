//! `twistor`: verification checks, cohomology diamonds, ddbar-lemma decisions
//! and form evaluation on the twistor space of the flat 4-torus.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use twistor_core::catalog;
use twistor_core::diamond::{
    self, CohomologyNumbers, DecisionMode, Diamond, DiamondKind, Entry, FrolicherOutcome, TopologicalInput,
};
use twistor_core::exterior::Form;
use twistor_core::parser::{self, print};
use twistor_core::verify::{self, CheckResult};
use twistor_core::Error;

#[derive(Parser)]
#[command(name = "twistor", version, about = "Exact verification engine for the twistor space of the flat 4-torus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks (exit 1 if any fails).
    Verify {
        /// Check name (C1..C12) or title; repeatable.
        #[arg(long = "check", value_name = "NAME", required_unless_present = "all")]
        checks: Vec<String>,
        /// Run every registered check.
        #[arg(long, conflicts_with = "checks")]
        all: bool,
    },
    /// Render a Hodge, Bott-Chern, Aeppli or Betti diamond.
    Diamond {
        #[arg(long, value_parser = parse_kind)]
        kind: DiamondKind,
        #[command(flatten)]
        topology: Topology,
        #[command(flatten)]
        numbers: Numbers,
    },
    /// Decide the ddbar-lemma from candidate Bott-Chern and Aeppli numbers.
    Ddbar {
        #[command(flatten)]
        topology: Topology,
        #[command(flatten)]
        numbers: Numbers,
        #[arg(long, value_parser = parse_mode, default_value = "A")]
        mode: DecisionMode,
    },
    /// Evaluate an expression, optionally applying an operator.
    Eval {
        /// Expression in the form language, e.g. "m^2 * sb1*sb2".
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum)]
        apply: Option<Operator>,
        #[arg(long, value_enum)]
        metric: Option<MetricChoice>,
    },
    /// Test Froelicher degeneration at E1 against the twistor constraints.
    Frolicher {
        #[command(flatten)]
        topology: Topology,
        /// The base metric is regular (e.g. Einstein).
        #[arg(long)]
        regular: bool,
    },
}

#[derive(Args)]
struct Topology {
    #[arg(long)]
    b1: u64,
    #[arg(long)]
    bplus: u64,
    #[arg(long)]
    bminus: u64,
}

impl Topology {
    fn input(&self) -> TopologicalInput {
        TopologicalInput::new(self.b1, self.bplus, self.bminus)
    }

    fn json(&self) -> Value {
        json!({"b1": self.b1, "bplus": self.bplus, "bminus": self.bminus})
    }
}

#[derive(Args)]
struct Numbers {
    #[arg(long)]
    h11bc: Option<u64>,
    #[arg(long)]
    h11a: Option<u64>,
    #[arg(long)]
    h12bc: Option<u64>,
    /// Dolbeault h^{1,1}, for the Hodge diamond.
    #[arg(long)]
    h11: Option<u64>,
    /// Dolbeault h^{1,2}, for the Hodge diamond.
    #[arg(long)]
    h12: Option<u64>,
}

impl Numbers {
    fn numbers(&self) -> CohomologyNumbers {
        CohomologyNumbers {
            h11_bc: self.h11bc,
            h11_a: self.h11a,
            h12_bc: self.h12bc,
            h11_dolbeault: self.h11,
            h12_dolbeault: self.h12,
        }
    }

    fn is_empty(&self) -> bool {
        self.numbers() == CohomologyNumbers::default()
    }

    fn json(&self) -> Value {
        json!({"h11bc": self.h11bc, "h11a": self.h11a, "h12bc": self.h12bc, "h11": self.h11, "h12": self.h12})
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Operator {
    D,
    Del,
    Delbar,
    Star,
    Astar,
    Conj,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricChoice {
    Paper,
}

fn parse_kind(s: &str) -> Result<DiamondKind, String> {
    s.parse()
}

fn parse_mode(s: &str) -> Result<DecisionMode, String> {
    s.parse()
}

/// Exit code 1 for failed checks or evaluation errors, 2 for bad input.
enum Failure {
    Check,
    Runtime(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnknownCheck(_) | Error::MissingNumber(_) | Error::MetricRequired(_) | Error::UnknownName { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(format: Format, text: String, value: Value) {
    let out = match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).expect("serializable") + "\n",
    };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Verify { checks, all } => cmd_verify(cli.format, checks, *all),
        Command::Diamond { kind, topology, numbers } => {
            let n = numbers.numbers();
            let d = diamond::diamond(&topology.input(), *kind, (!numbers.is_empty()).then_some(&n));
            let mut inputs = topology.json();
            inputs.as_object_mut().unwrap().extend(numbers.json().as_object().unwrap().clone());
            let mut value = diamond_json(&d);
            let obj = value.as_object_mut().unwrap();
            obj.insert("command".into(), json!("diamond"));
            obj.insert("inputs".into(), inputs);
            emit(cli.format, diamond_text(&d, topology), value);
            Ok(())
        }
        Command::Ddbar { topology, numbers, mode } => cmd_ddbar(cli.format, topology, numbers, *mode),
        Command::Eval { expr, apply, metric } => cmd_eval(cli.format, expr, *apply, *metric),
        Command::Frolicher { topology, regular } => {
            let outcome = diamond::frolicher_e1_check(&topology.input(), *regular);
            let mut inputs = topology.json();
            inputs.as_object_mut().unwrap().insert("regular".into(), json!(regular));
            let (text, value) = match &outcome {
                FrolicherOutcome::Consistent(h) => (
                    format!("consistent: h01={}, h02={}, h11={}, h21={}\n", h.h01, h.h02, h.h11, h.h21),
                    json!({"outcome": "consistent", "hodge": h, "trace": Value::Null}),
                ),
                FrolicherOutcome::Contradiction(trace) => {
                    let mut text = "contradiction: E1 != E_inf\n".to_string();
                    for line in trace {
                        text.push_str(&format!("  {line}\n"));
                    }
                    (text, json!({"outcome": "contradiction", "hodge": Value::Null, "trace": trace}))
                }
            };
            let mut value = value;
            let obj = value.as_object_mut().unwrap();
            obj.insert("command".into(), json!("frolicher"));
            obj.insert("inputs".into(), inputs);
            emit(cli.format, text, value);
            Ok(())
        }
    }
}

fn cmd_verify(format: Format, checks: &[String], all: bool) -> Result<(), Failure> {
    let results: Vec<CheckResult> = if all {
        verify::run_all()
    } else {
        checks.iter().map(|c| verify::run_check(c)).collect::<twistor_core::Result<_>>()?
    };
    let mut text = String::new();
    for r in &results {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        text.push_str(&format!("{:<4} {status}  {:<28} {}\n", r.name, r.title, r.location));
        if let Some(w) = &r.witness {
            text.push_str(&format!("       witness: {w}\n"));
        }
        for note in &r.notes {
            text.push_str(&format!("       note: {note}\n"));
        }
    }
    let passed = results.iter().filter(|r| r.passed()).count();
    text.push_str(&format!("{passed}/{} checks passed\n", results.len()));
    let inputs = if all { json!({"all": true}) } else { json!({"checks": checks}) };
    emit(format, text, json!({"command": "verify", "inputs": inputs, "results": results}));
    if passed == results.len() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn diamond_json(d: &Diamond) -> Value {
    let entries: Vec<Value> = d
        .entries
        .iter()
        .map(|(&(p, q), e)| match e {
            Entry::Known(v) => json!({"p": p, "q": q, "value": v, "symbol": Value::Null}),
            Entry::Unknown(s) => json!({"p": p, "q": q, "value": Value::Null, "symbol": s}),
        })
        .collect();
    json!({"kind": d.kind.name(), "entries": entries, "warnings": d.warnings})
}

fn diamond_text(d: &Diamond, t: &Topology) -> String {
    let mut text = format!("{} diamond (b1={}, b+={}, b-={})\n", d.kind.name(), t.b1, t.bplus, t.bminus);
    text.push_str(&d.render());
    if d.kind == DiamondKind::Betti {
        text.push('\n');
    }
    let unknowns = d.unknowns();
    if !unknowns.is_empty() {
        text.push_str(&format!("unknowns: {}\n", unknowns.join(", ")));
    }
    for w in &d.warnings {
        text.push_str(&format!("warning: {w}\n"));
    }
    text
}

fn cmd_ddbar(format: Format, topology: &Topology, numbers: &Numbers, mode: DecisionMode) -> Result<(), Failure> {
    let d = diamond::ddbar_decision(&topology.input(), &numbers.numbers(), mode)?;
    let verdict = if d.holds { "YES" } else { "NO" };
    let mut text = format!("{verdict}: {}\n", d.reason);
    if let Some(other) = d.other_mode {
        let agree = if other == d.holds { "agrees" } else { "disagrees" };
        text.push_str(&format!("other mode {agree} ({})\n", if other { "YES" } else { "NO" }));
    }
    if d.non_realizable {
        text.push_str("non-realizable input: the two modes disagree\n");
    }
    if let Some((b1, b2, b3)) = d.betti_profile {
        text.push_str(&format!("forced Betti numbers: b1(Z)={b1}, b2(Z)={b2}, b3(Z)={b3}\n"));
    }
    if let Some(bc) = &d.bc_diamond {
        text.push_str("forced Bott-Chern diamond:\n");
        text.push_str(&bc.render());
    }
    for w in &d.warnings {
        text.push_str(&format!("warning: {w}\n"));
    }
    let mut inputs = topology.json();
    inputs.as_object_mut().unwrap().extend(numbers.json().as_object().unwrap().clone());
    inputs.as_object_mut().unwrap().insert("mode".into(), json!(mode));
    let value = json!({
        "command": "ddbar",
        "inputs": inputs,
        "verdict": d.holds,
        "reason": d.reason,
        "other_mode": d.other_mode,
        "non_realizable": d.non_realizable,
        "betti_profile": d.betti_profile,
        "bc_diamond": d.bc_diamond.as_ref().map(diamond_json),
        "warnings": d.warnings,
    });
    emit(format, text, value);
    Ok(())
}

fn cmd_eval(format: Format, expr: &str, apply: Option<Operator>, metric: Option<MetricChoice>) -> Result<(), Failure> {
    let g = metric.map(|MetricChoice::Paper| catalog::paper_metric());
    let parsed = parser::parse(expr).map_err(Error::from)?;
    let value = parser::evaluate(&parsed, g.as_ref())?;
    let need_metric = |name| g.as_ref().ok_or(Failure::Usage(Error::MetricRequired(name).to_string()));
    let result: Form = match apply {
        None => value,
        Some(Operator::D) => value.d(),
        Some(Operator::Del) => value.del()?,
        Some(Operator::Delbar) => value.delbar()?,
        Some(Operator::Conj) => value.conjugate(),
        Some(Operator::Star) => need_metric("star")?.star(&value)?,
        Some(Operator::Astar) => need_metric("astar")?.antilinear_star(&value)?,
    };
    let shown = print(&result);
    let apply_name = apply.map(|a| a.to_possible_value().unwrap().get_name().to_string());
    let inputs = json!({"expr": expr, "apply": apply_name, "metric": metric.map(|_| "paper")});
    emit(format, format!("{shown}\n"), json!({"command": "eval", "inputs": inputs, "result": shown}));
    Ok(())
}
