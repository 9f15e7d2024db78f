//! `numsemi`: invariants of numerical semigroup rings from the command line.
//!
//! Exit status is 0 on success, 2 on a domain error and 1 when two
//! computations that must agree did not. Errors are printed to standard error
//! as one JSON object `{"error": kind, "message": text}`.

mod output;
mod sweep;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use numsemi_core::catalog::{
    expand_template, parse_template, semigroups_with_generators_up_to, three_generated_up_to,
};
use numsemi_core::gorenstein_search::{bg_upper_bound_capped, DEFAULT_NODE_CAP};
use numsemi_core::herzog::structure_matrix;
use numsemi_core::interchange::{parse_generator_list, parse_integer};
use numsemi_core::invariants::{
    classify, h_invariant, integral_representative, is_burch, is_partial_trace, is_weakly_m_full,
    monomial_partial_trace,
};
use numsemi_core::oracle::{SieveTable, DEFAULT_WINDOW_CAP};
use numsemi_core::{Error, NumericalSemigroup, RelativeIdeal};
use serde::Serialize;
use serde_json::{json, Value};

use output::{write_result, Format};

/// Default node budget per semigroup in sweeps.
const SWEEP_NODE_CAP: usize = 2_000;

#[derive(Parser)]
#[command(
    name = "numsemi",
    version,
    about = "Trace ideals, h-invariants and canonical modules of numerical semigroup rings"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Depth of the Gorenstein subsemigroup search (default: h(ω)).
    #[arg(long, global = true)]
    bg_bound: Option<u32>,
    /// Node budget of the Gorenstein subsemigroup search.
    #[arg(long, global = true)]
    bg_node_cap: Option<usize>,
    /// Largest oracle window, in cells, used by --verify.
    #[arg(long, global = true, default_value_t = DEFAULT_WINDOW_CAP)]
    window_cap: u64,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Frobenius number, gaps, Apéry set, pseudo-Frobenius numbers, type.
    Semigroup {
        /// Generators, e.g. `3 4 5` or `3,4,5`.
        #[arg(required = true)]
        generators: Vec<String>,
    },
    /// Arithmetic on relative ideals.
    Ideal {
        #[arg(value_enum)]
        op: IdealOp,
        #[command(flatten)]
        input: IdealInput,
        /// Second operand for binary operations.
        #[arg(long, num_args = 1.., allow_negative_numbers = true)]
        other: Option<Vec<String>>,
        /// Exponent for `power`, shift for `shift`.
        #[arg(long, allow_negative_numbers = true)]
        by: Option<String>,
    },
    /// h(E) = ℓ(R/E') + v(R:E') for an integral copy E' of E.
    HInvariant(IdealInput),
    /// The monomial partial trace ideal of E.
    PartialTrace(IdealInput),
    /// The trace ideal (R:E)E.
    Trace(IdealInput),
    /// Type, h(ω), Gorenstein-type flags, tr(ω) and a bg upper bound.
    Classify {
        #[arg(required = true)]
        generators: Vec<String>,
    },
    /// Herzog's structure matrix of a non-symmetric 3-generated semigroup.
    Herzog {
        #[arg(required = true)]
        generators: Vec<String>,
    },
    /// Search for symmetric subsemigroups of small colength.
    Bg {
        #[arg(required = true)]
        generators: Vec<String>,
    },
    /// Invariant table over a family of semigroups.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct IdealInput {
    /// Generators of H.
    #[arg(long, num_args = 1.., required = true)]
    semigroup: Vec<String>,
    /// Generators of the ideal; may be negative.
    #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
    ideal: Vec<String>,
    /// Recompute the answer with the explicit-set oracle and compare.
    #[arg(long)]
    verify: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealOp {
    Normalize,
    Sum,
    Intersection,
    Product,
    Colon,
    ColonInR,
    Power,
    Shift,
    Colength,
    Trace,
    IsTraceIdeal,
    Closure,
    IsReduction,
    Socle,
    WeaklyMFull,
    Burch,
}

#[derive(Args)]
struct SweepArgs {
    /// Explicit members, one generator list per argument, e.g. `3,4,5`.
    members: Vec<String>,
    /// Affine family template such as `2n+1,2n+2,2n+3`.
    #[arg(long, requires_all = ["from", "to"])]
    template: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    from: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    to: Option<String>,
    /// Every minimally 3-generated semigroup with generators at most N.
    #[arg(long, value_name = "N")]
    three_generated: Option<i64>,
    /// Every semigroup with minimal generators at most N.
    #[arg(long, value_name = "N")]
    generators_up_to: Option<i64>,
    /// File with one generator list per line.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write rows here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

/// Failure of a command, mapped to the exit status.
enum Failure {
    Domain(Error),
    Internal(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e)
        } else {
            Failure::Domain(e)
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult<T> = std::result::Result<T, Failure>;

fn generators(args: &[String]) -> CmdResult<Vec<i64>> {
    Ok(parse_generator_list(&args.join(" "))?)
}

fn semigroup(args: &[String]) -> CmdResult<Arc<NumericalSemigroup>> {
    Ok(Arc::new(NumericalSemigroup::build(&generators(args)?)?))
}

fn ideal_of(input: &IdealInput) -> CmdResult<(Arc<NumericalSemigroup>, RelativeIdeal)> {
    let h = semigroup(&input.semigroup)?;
    let e = RelativeIdeal::from_generators(&h, &generators(&input.ideal)?)?;
    Ok((h, e))
}

fn oracle_table(
    h: &NumericalSemigroup,
    ideals: &[&RelativeIdeal],
    cap: u64,
) -> CmdResult<SieveTable> {
    let max_abs = ideals
        .iter()
        .flat_map(|e| e.min_gens().iter())
        .map(|g| g.abs())
        .max()
        .unwrap_or(0);
    Ok(SieveTable::new(h.generators(), max_abs, cap)?)
}

fn mismatch(what: String) -> Failure {
    Failure::Internal(Error::InternalInconsistency(format!(
        "oracle disagrees: {what}"
    )))
}

fn check_set(
    table: &SieveTable,
    e: &RelativeIdeal,
    set: &numsemi_core::oracle::ExplicitSet,
) -> CmdResult<()> {
    let r = table.radius();
    match (-r..=r).find(|&x| e.contains(x) != set.contains(x)) {
        Some(x) => Err(mismatch(format!("{e} at {x}"))),
        None => Ok(()),
    }
}

fn semigroup_report(h: &NumericalSemigroup) -> CmdResult<Value> {
    let symmetric = if h.is_full() {
        None
    } else {
        Some(h.is_symmetric()?)
    };
    Ok(json!({
        "generators": h.generators(),
        "minimal_generators": h.minimal_generators(),
        "multiplicity": h.multiplicity(),
        "edim": h.embedding_dimension(),
        "frobenius": h.frobenius(),
        "genus": h.genus(),
        "gaps": h.gaps(),
        "apery": h.apery(),
        "pseudo_frobenius": h.pseudo_frobenius().unwrap_or(&[]),
        "type": h.cm_type(),
        "symmetric": symmetric,
    }))
}

fn ideal_command(
    op: IdealOp,
    input: &IdealInput,
    other: Option<&[String]>,
    by: Option<&str>,
    cap: u64,
) -> CmdResult<Value> {
    let (h, e) = ideal_of(input)?;
    let other = match other {
        Some(g) => Some(RelativeIdeal::from_generators(&h, &generators(g)?)?),
        None => None,
    };
    let need_other = || -> CmdResult<&RelativeIdeal> {
        other
            .as_ref()
            .ok_or_else(|| Failure::Usage("this operation needs --other".into()))
    };
    let by = || -> CmdResult<i64> {
        let text = by.ok_or_else(|| Failure::Usage("this operation needs --by".into()))?;
        Ok(parse_integer(text)?)
    };

    let result: Value = match op {
        IdealOp::Normalize => json!(e),
        IdealOp::Sum => json!(e.sum(need_other()?)?),
        IdealOp::Intersection => json!(e.intersection(need_other()?)?),
        IdealOp::Product => json!(e.product(need_other()?)?),
        IdealOp::Colon => {
            let b = need_other()?;
            let colon = e.colon(b)?;
            if input.verify {
                let table = oracle_table(&h, &[&e, b], cap)?;
                check_set(
                    &table,
                    &colon,
                    &table.oracle_colon(e.min_gens(), b.min_gens())?,
                )?;
            }
            json!(colon)
        }
        IdealOp::ColonInR => json!(e.colon_in_r(need_other()?)?),
        IdealOp::Power => {
            let n = u32::try_from(by()?).map_err(|_| Error::Overflow)?;
            json!(e.power(n))
        }
        IdealOp::Shift => json!(e.shift(by()?)?),
        IdealOp::Colength => {
            let colength = e.colength()?;
            if input.verify
                && oracle_table(&h, &[&e], cap)?.oracle_colength(e.min_gens())? != colength
            {
                return Err(mismatch(format!("colength of {e}")));
            }
            json!(colength)
        }
        IdealOp::Trace => json!(e.trace()),
        IdealOp::IsTraceIdeal => json!(e.is_trace_ideal()?),
        IdealOp::Closure => json!(e.integral_closure()?),
        IdealOp::IsReduction => json!(e.is_reduction(need_other()?)?),
        IdealOp::Socle => json!(e.socle_dimension()?),
        IdealOp::WeaklyMFull => json!(is_weakly_m_full(&e)?),
        IdealOp::Burch => json!(is_burch(&e)?),
    };
    let mut out = json!({
        "op": op.to_possible_value().expect("no skipped variants").get_name(),
        "semigroup": h.minimal_generators(),
        "ideal": e,
    });
    if let Some(b) = &other {
        out["other"] = json!(b);
    }
    out["result"] = result;
    Ok(out)
}

fn h_invariant_command(input: &IdealInput, cap: u64) -> CmdResult<Value> {
    let (h, e) = ideal_of(input)?;
    let value = h_invariant(&e)?;
    if input.verify {
        let (expected, _) = oracle_table(&h, &[&e], cap)?.oracle_h(e.min_gens())?;
        if expected != value {
            return Err(mismatch(format!("h({e}) = {value}, oracle {expected}")));
        }
    }
    Ok(json!({ "semigroup": h.minimal_generators(), "ideal": e, "h": value }))
}

fn partial_trace_command(input: &IdealInput, cap: u64) -> CmdResult<Value> {
    let (h, e) = ideal_of(input)?;
    let j = monomial_partial_trace(&e)?;
    let (c, _) = integral_representative(&e)?;
    if input.verify {
        let table = oracle_table(&h, &[&e, &j], cap)?;
        let (expected, _) = table.oracle_h(e.min_gens())?;
        if table.oracle_colength(j.min_gens())? != expected {
            return Err(mismatch(format!("partial trace {j} of {e}")));
        }
    }
    let input_is_partial_trace = if e.is_integral() {
        Some(is_partial_trace(&e)?)
    } else {
        None
    };
    Ok(json!({
        "semigroup": h.minimal_generators(),
        "ideal": e,
        "integral_shift": c,
        "partial_trace": j,
        "h": j.colength()?,
        "is_partial_trace": input_is_partial_trace,
    }))
}

fn trace_command(input: &IdealInput, cap: u64) -> CmdResult<Value> {
    let (h, e) = ideal_of(input)?;
    let trace = e.trace();
    if input.verify {
        let table = oracle_table(&h, &[&e], cap)?;
        check_set(&table, &trace, &table.oracle_trace(e.min_gens())?)?;
    }
    Ok(json!({
        "semigroup": h.minimal_generators(),
        "ideal": e,
        "trace": trace,
        "is_trace_ideal": e.is_integral().then(|| e.is_trace_ideal()).transpose()?,
    }))
}

fn family(args: &SweepArgs) -> CmdResult<Vec<std::result::Result<Vec<i64>, Error>>> {
    let mut members = Vec::new();
    for m in &args.members {
        members.push(parse_generator_list(m));
    }
    if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path)?;
        for line in text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
        {
            members.push(parse_generator_list(line));
        }
    }
    if let Some(template) = &args.template {
        let terms = parse_template(template)?;
        let lo = parse_integer(args.from.as_deref().unwrap_or_default())?;
        let hi = parse_integer(args.to.as_deref().unwrap_or_default())?;
        members.extend(expand_template(&terms, lo, hi)?.into_iter().map(Ok));
    }
    if let Some(n) = args.three_generated {
        members.extend(
            three_generated_up_to(n)
                .iter()
                .map(|h| Ok(h.minimal_generators().to_vec())),
        );
    }
    if let Some(n) = args.generators_up_to {
        members.extend(
            semigroups_with_generators_up_to(n)
                .iter()
                .map(|h| Ok(h.minimal_generators().to_vec())),
        );
    }
    Ok(members)
}

fn sweep_command(cli: &Cli, args: &SweepArgs) -> CmdResult<()> {
    let members = family(args)?;
    let settings = sweep::SweepSettings {
        bg_bound: cli.bg_bound,
        node_cap: cli.bg_node_cap.unwrap_or(SWEEP_NODE_CAP),
    };
    // unparsable members are skipped rows, like those failing validation
    let parsed: Vec<Vec<i64>> = members
        .iter()
        .map(|m| m.clone().unwrap_or_default())
        .collect();
    let mut rows = match cli.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(io::Error::other)?
            .install(|| sweep::run(&parsed, &settings))?,
        None => sweep::run(&parsed, &settings)?,
    };
    for (row, member) in rows.iter_mut().zip(&members) {
        if let Err(e) = member {
            row.invariants = None;
            row.skipped = Some(sweep::Skip {
                error: e.kind(),
                message: e.to_string(),
            });
        }
    }
    match &args.output {
        Some(path) => {
            let mut out = BufWriter::new(File::create(path)?);
            sweep::write_rows(&mut out, cli.format, &rows)?;
            out.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            sweep::write_rows(&mut out, cli.format, &rows)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn emit<T: Serialize>(format: Format, value: &T) -> CmdResult<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    write_result(&mut out, format, value)?;
    Ok(())
}

fn run(cli: &Cli) -> CmdResult<()> {
    let node_cap = cli.bg_node_cap.unwrap_or(DEFAULT_NODE_CAP);
    match &cli.command {
        Command::Semigroup { generators } => {
            emit(cli.format, &semigroup_report(&*semigroup(generators)?)?)
        }
        Command::Ideal {
            op,
            input,
            other,
            by,
        } => emit(
            cli.format,
            &ideal_command(*op, input, other.as_deref(), by.as_deref(), cli.window_cap)?,
        ),
        Command::HInvariant(input) => {
            emit(cli.format, &h_invariant_command(input, cli.window_cap)?)
        }
        Command::PartialTrace(input) => {
            emit(cli.format, &partial_trace_command(input, cli.window_cap)?)
        }
        Command::Trace(input) => emit(cli.format, &trace_command(input, cli.window_cap)?),
        Command::Classify { generators } => {
            let h = semigroup(generators)?;
            let mut report = classify(&h, None)?;
            let bound = cli.bg_bound.unwrap_or(report.h_omega as u32);
            let search = bg_upper_bound_capped(&h, bound, node_cap)?;
            if search.best_colength.is_some_and(|b| report.h_omega > 2 * b) {
                return Err(Failure::Internal(Error::InternalInconsistency(format!(
                    "{h}: h(ω) = {} exceeds twice the subsemigroup colength",
                    report.h_omega
                ))));
            }
            report.bg_upper = search.best_colength;
            emit(cli.format, &report)
        }
        Command::Herzog { generators } => {
            let h = semigroup(generators)?;
            let data = structure_matrix(&h)?;
            let mut value = serde_json::to_value(&data).map_err(io::Error::other)?;
            value["h_omega"] = json!(data.h_omega());
            emit(cli.format, &value)
        }
        Command::Bg { generators } => {
            let h = semigroup(generators)?;
            let bound = match cli.bg_bound {
                Some(b) => b,
                None => h_invariant(&numsemi_core::invariants::canonical_ideal(&h)?)? as u32,
            };
            emit(cli.format, &bg_upper_bound_capped(&h, bound, node_cap)?)
        }
        Command::Sweep(args) => sweep_command(cli, args),
    }
}

fn report_error(kind: &str, message: String) {
    eprintln!("{}", json!({ "error": kind, "message": message }));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            report_error(e.kind(), e.to_string());
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            report_error(e.kind(), e.to_string());
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            report_error("Usage", message);
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            report_error("Io", e.to_string());
            ExitCode::from(2)
        }
    }
}
