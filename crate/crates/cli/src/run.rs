use crate::args::{ArtinianArgs, Cli, Command, Common, FormatArg, Op, SemigroupArgs, SuiteArg};
use serde_json::{json, Value};
use std::path::Path;
use trace_lab::caps::CapsParseError;
use trace_lab::finalg::{AlgebraError, IdealSubspace};
use trace_lab::numsgp::{is_translate, NumericalSemigroup, RelativeIdeal, SemigroupError};
use trace_lab::spec::{Ring, RingSpec, SpecError};
use trace_lab::verify::{self, Format, Suite, VerificationReport};
use trace_lab::Caps;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Caps(#[from] CapsParseError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "E_USAGE",
            CliError::Spec(e) => e.code(),
            CliError::Algebra(_) => "E_ALGEBRA",
            CliError::Semigroup(_) => "E_SEMIGROUP",
            CliError::Caps(_) => "E_CAPS",
            CliError::Io { .. } => "E_IO",
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Result of a successful invocation.
pub enum Outcome {
    Ok,
    ChecksFailed,
}

impl Outcome {
    pub fn code(&self) -> u8 {
        match self {
            Outcome::Ok => 0,
            Outcome::ChecksFailed => 1,
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Artinian(args) => run_artinian(args),
        Command::Semigroup(args) => run_semigroup(args),
        Command::Catalog(common) => {
            let caps = caps(&common)?;
            let catalog = verify::run_catalog(suite(common.suite), &caps);
            write_output(&common, &catalog.emit(format(common.format)))?;
            Ok(if catalog.succeeded() { Outcome::Ok } else { Outcome::ChecksFailed })
        }
    }
}

/// Defaults, then the environment, then flags.
fn caps(common: &Common) -> Result<Caps, CliError> {
    let mut caps = Caps::from_env()?;
    if let Some(d) = common.cap_dim {
        caps.dim = Some(d);
    }
    if let Some(g) = common.cap_gaps {
        caps.gaps = g;
    }
    if let Some(h) = common.cap_hom {
        caps.hom = h;
    }
    Ok(caps)
}

fn suite(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Lp => Suite::Lp,
        SuiteArg::Identities => Suite::Identities,
        SuiteArg::All => Suite::All,
    }
}

fn format(f: FormatArg) -> Format {
    match f {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    }
}

fn read_spec(path: &Path) -> Result<RingSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    Ok(RingSpec::parse(&text)?)
}

fn write_output(common: &Common, text: &str) -> Result<(), CliError> {
    match &common.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_reports(common: &Common, reports: &[VerificationReport]) -> Result<Outcome, CliError> {
    let text = match format(common.format) {
        Format::Text => reports.iter().map(|r| verify::emit_report(r, Format::Text)).collect::<Vec<_>>().join("\n"),
        Format::Json => {
            let doc = match reports {
                [single] => single.to_json(),
                many => json!({"reports": many.iter().map(VerificationReport::to_json).collect::<Vec<_>>()}),
            };
            serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
        }
    };
    write_output(common, &text)?;
    Ok(if reports.iter().any(VerificationReport::has_failures) { Outcome::ChecksFailed } else { Outcome::Ok })
}

/// Prints a single operation result: the bare text, or `{"op", "result"}` as JSON.
fn emit_result(common: &Common, op: Op, text: String, data: Value) -> Result<Outcome, CliError> {
    let out = match format(common.format) {
        Format::Text => text + "\n",
        Format::Json => {
            let name = format!("{op:?}").to_lowercase();
            serde_json::to_string_pretty(&json!({"op": name, "result": data})).expect("serializes") + "\n"
        }
    };
    write_output(common, &out)?;
    Ok(Outcome::Ok)
}

fn need<T>(items: &[T], n: usize, op: Op, what: &str) -> Result<(), CliError> {
    if items.len() == n {
        Ok(())
    } else {
        Err(usage(format!("--op {} needs exactly {n} {what}, got {}", format!("{op:?}").to_lowercase(), items.len())))
    }
}

// ---- artinian --------------------------------------------------------------

fn run_artinian(args: ArtinianArgs) -> Result<Outcome, CliError> {
    let caps = caps(&args.common)?;
    let a = match read_spec(&args.spec)?.build()? {
        Ring::Artinian(a) => a,
        Ring::Semigroup(_) => return Err(usage("the spec describes a semigroup; use the semigroup subcommand")),
    };
    let Some(op) = args.op else {
        if !args.ideal_gens.is_empty() {
            return Err(usage("--ideal-gens needs --op"));
        }
        return emit_reports(&args.common, &verify::run_suites(&Ring::Artinian(a), suite(args.common.suite), &caps));
    };
    let ideals: Vec<IdealSubspace> = args.ideal_gens.iter().map(|g| a.parse_ideal(g)).collect::<Result<_, _>>()?;
    let show = |i: &IdealSubspace| a.render_ideal(i);
    let (text, data) = match op {
        Op::Trace | Op::Ann => {
            need(&ideals, 1, op, "--ideal-gens")?;
            let r = if op == Op::Trace { a.trace_ideal(&ideals[0]) } else { a.annihilator(&ideals[0]) };
            (show(&r), json!(show(&r)))
        }
        Op::Colon => {
            need(&ideals, 2, op, "--ideal-gens")?;
            let r = a.colon(&ideals[0], &ideals[1]);
            (show(&r), json!(show(&r)))
        }
        Op::Dual | Op::Endo => {
            need(&ideals, 1, op, "--ideal-gens")?;
            let target = if op == Op::Dual { a.unit_ideal() } else { ideals[0].clone() };
            let dim = a.hom_module(&ideals[0], &target).dim();
            let name = if op == Op::Dual { "Hom(I, R)" } else { "Hom(I, I)" };
            (format!("dim {name} = {dim}"), json!({"hom_dim": dim}))
        }
        Op::Iso => {
            need(&ideals, 2, op, "--ideal-gens")?;
            let iso = a.is_isomorphic(&ideals[0], &ideals[1], caps.hom_budget())?;
            (if iso { "isomorphic" } else { "not isomorphic" }.to_string(), json!(iso))
        }
        Op::Enumerate => {
            need(&ideals, 0, op, "--ideal-gens")?;
            let all: Vec<String> = a.enumerate_ideals(&caps)?.iter().map(show).collect();
            (all.join("\n"), json!(all))
        }
    };
    emit_result(&args.common, op, text, data)
}

// ---- semigroup -------------------------------------------------------------

fn parse_offsets(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| usage(format!("bad offset list `{text}`"))))
        .collect()
}

fn run_semigroup(args: SemigroupArgs) -> Result<Outcome, CliError> {
    let caps = caps(&args.common)?;
    let spec = match (&args.spec, &args.gens) {
        (Some(path), _) => read_spec(path)?,
        (None, Some(gens)) => RingSpec::from_value(&json!({"kind": "semigroup", "generators": gens}))?,
        (None, None) => return Err(usage("give --gens or --spec")),
    };
    let s = match spec.build()? {
        Ring::Semigroup(s) => s,
        Ring::Artinian(_) => return Err(usage("the spec describes an artinian ring; use the artinian subcommand")),
    };
    let Some(op) = args.op else {
        if !args.ideal.is_empty() {
            return Err(usage("--ideal needs --op"));
        }
        return emit_reports(&args.common, &verify::run_suites(&Ring::Semigroup(s), suite(args.common.suite), &caps));
    };
    let ideals: Vec<RelativeIdeal> = args
        .ideal
        .iter()
        .map(|t| Ok(s.ideal_from_gens(&parse_offsets(t)?)?))
        .collect::<Result<_, CliError>>()?;
    semigroup_op(&args.common, &s, op, &ideals, &caps)
}

fn semigroup_op(
    common: &Common,
    s: &NumericalSemigroup,
    op: Op,
    ideals: &[RelativeIdeal],
    caps: &Caps,
) -> Result<Outcome, CliError> {
    let one = |e: RelativeIdeal| (e.to_string(), json!(e.to_string()));
    let (text, data) = match op {
        Op::Trace => {
            need(ideals, 1, op, "--ideal")?;
            one(s.trace(&ideals[0]))
        }
        Op::Dual => {
            need(ideals, 1, op, "--ideal")?;
            one(s.dual(&ideals[0]))
        }
        Op::Colon => {
            need(ideals, 2, op, "--ideal")?;
            one(s.ideal_colon(&ideals[0], &ideals[1]))
        }
        Op::Endo => {
            need(ideals, 1, op, "--ideal")?;
            let e = ideals[0].normalized();
            let endo = s.endo_semigroup(&e);
            (endo.to_string(), json!(endo.to_string()))
        }
        Op::Iso => {
            need(ideals, 2, op, "--ideal")?;
            match is_translate(&ideals[0], &ideals[1]) {
                Some(z) => (format!("isomorphic (offset {z})"), json!({"isomorphic": true, "offset": z})),
                None => ("not isomorphic".into(), json!({"isomorphic": false, "offset": null})),
            }
        }
        Op::Enumerate => {
            need(ideals, 0, op, "--ideal")?;
            let all: Vec<String> = s.enumerate_normalized_ideals(caps)?.iter().map(|e| e.to_string()).collect();
            (all.join("\n"), json!(all))
        }
        Op::Ann => {
            return Err(usage(
                "--op ann is not defined for semigroup rings: nonzero ideals of a domain have zero annihilator",
            ))
        }
    };
    emit_result(common, op, text, data)
}
