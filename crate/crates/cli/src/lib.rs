//! Command-line front end. [`run`] parses arguments, executes one subcommand
//! and writes its report; the binary is a thin wrapper around it.

mod corpus;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nevgcd::exactpoly::parse::max_var_index;
use nevgcd::exactpoly::{parse_multi, parse_rational, parse_rf, parse_uni};
use nevgcd::expunits::{exp_slope_table, QuadExt};
use nevgcd::idealslice::{
    asymptotic_check, build_basis_slice, verify_basis, verify_sum_formulas, BasisReport, BasisSlice, SequenceSummary, SliceConstants,
    SumReport,
};
use nevgcd::nevandeg::{gcd_sweep, mult_independent, tgcd_sweep, SweepConfig, Track};
use nevgcd::par::Execution;
use nevgcd::report;
use nevgcd::suites::run_suite;
use nevgcd::wronskian::{bs_check, ordw_check, wronskian, LocalCheckReport};
use nevgcd::{Error, MonomialOrder, Place, Rational, RationalFunction};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "nevgcd", version, about = "Exact gcd-counting and ideal-slice verification tools")]
pub struct Cli {
    /// Seed for randomized suites; recorded in every report header.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report into this directory instead of standard output.
    #[arg(long, global = true, env = "NEVGCD_OUT_DIR")]
    pub out_dir: Option<PathBuf>,
    /// Run without the thread pool.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build and verify the basis of a graded ideal slice (JSON).
    Basis {
        #[arg(long = "F1")]
        f1: String,
        #[arg(long = "F2")]
        f2: String,
        #[arg(long)]
        m: u32,
        /// `lex` or `weight:u0,u1,...`.
        #[arg(long, default_value = "lex")]
        order: String,
    },
    /// Table of slice constants and scaled residuals for m up to mmax (CSV).
    Identities {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        mmax: u32,
    },
    /// deg gcd(F(g^k), G(g^k)) against k (CSV, or JSON with --format json).
    GcdSweep {
        /// Polynomial in x1..xn.
        #[arg(long = "F")]
        f: String,
        #[arg(long = "G")]
        g: String,
        /// One rational function per variable x1..xn.
        #[arg(long = "g", required = true)]
        gs: Vec<String>,
        #[arg(long, default_value_t = 1)]
        kmin: u32,
        #[arg(long)]
        kmax: u32,
        #[arg(long, default_value_t = 1)]
        kstep: u32,
        #[arg(long, default_value = "1/10")]
        epsilon: String,
        #[arg(long, value_enum, default_value = "n")]
        track: TrackArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Multiplicative-independence certificate (JSON).
    Indep {
        #[arg(long = "g", required = true)]
        gs: Vec<String>,
        /// Exit with the hypothesis-rejection status when dependent.
        #[arg(long)]
        gate: bool,
    },
    /// Wronskian vanishing-order bound at one place (JSON).
    WronskianCheck {
        #[arg(long = "eta", required = true)]
        etas: Vec<String>,
        /// Squarefree polynomial in z, or `inf`.
        #[arg(long)]
        place: String,
    },
    /// Local basis inequality for forms F, G composed with g (JSON).
    BsCheck {
        /// Homogeneous form in x0..xn.
        #[arg(long = "F")]
        f: String,
        #[arg(long = "G")]
        g: String,
        #[arg(long)]
        m: u32,
        /// One polynomial per variable x0..xn.
        #[arg(long = "g", required = true)]
        gs: Vec<String>,
        #[arg(long)]
        place: String,
    },
    /// Slopes for e^{kaz}-1 and e^{kbz}-1 (CSV).
    ExpSlopes {
        /// Element of Q(sqrt D), e.g. `3/2`, `sqrt2`, `1+2*sqrt5`.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        kmax: u32,
    },
    /// Run every `*.toml` case in a directory (JSON summary).
    Corpus { dir: PathBuf },
    /// Run one named randomized suite (JSON).
    Suite {
        #[arg(long)]
        name: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TrackArg {
    N,
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// A finished report: file extension and contents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub ext: &'static str,
    pub body: String,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Option<Report>,
    /// Warnings and error messages for standard error.
    pub notes: Vec<String>,
}

impl Outcome {
    fn new(code: i32, report: Report) -> Self {
        Outcome {
            code,
            report: Some(report),
            notes: Vec::new(),
        }
    }

    fn usage(msg: String) -> Self {
        Outcome {
            code: EXIT_USAGE,
            report: None,
            notes: vec![msg],
        }
    }
}

pub struct Context {
    pub seed: u64,
    pub exec: Execution,
    pub out_dir: Option<PathBuf>,
}

/// Parses `args` (program name first), runs the command and writes the
/// report to `out`, or into the output directory when one is configured.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if code == EXIT_PASS {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let ctx = Context {
        seed: cli.seed,
        exec: if cli.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        },
        out_dir: cli.out_dir.clone(),
    };
    let name = command_name(&cli.command);
    let outcome = execute(&cli.command, &ctx);
    for note in &outcome.notes {
        let _ = writeln!(err, "{note}");
    }
    if let Some(rep) = &outcome.report {
        let written = match &ctx.out_dir {
            Some(dir) => write_report(dir, name, rep).map(|path| {
                let _ = writeln!(err, "wrote {}", path.display());
            }),
            None => out.write_all(rep.body.as_bytes()).map_err(|e| e.to_string()),
        };
        if let Err(e) = written {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    }
    outcome.code
}

pub(crate) fn write_report(dir: &Path, stem: &str, rep: &Report) -> Result<PathBuf, String> {
    std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let path = dir.join(format!("{stem}.{}", rep.ext));
    std::fs::write(&path, &rep.body).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(path)
}

pub fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Basis { .. } => "basis",
        Command::Identities { .. } => "identities",
        Command::GcdSweep { .. } => "gcd-sweep",
        Command::Indep { .. } => "indep",
        Command::WronskianCheck { .. } => "wronskian-check",
        Command::BsCheck { .. } => "bs-check",
        Command::ExpSlopes { .. } => "exp-slopes",
        Command::Corpus { .. } => "corpus",
        Command::Suite { .. } => "suite",
    }
}

/// Runs a parsed command. Library errors become a JSON error report with
/// status 2 for rejected hypotheses and 3 for malformed input.
pub fn execute(c: &Command, ctx: &Context) -> Outcome {
    let name = command_name(c);
    let result = match c {
        Command::Basis { f1, f2, m, order } => basis(ctx, f1, f2, *m, order),
        Command::Identities { n, d, mmax } => identities(ctx, *n, *d, *mmax),
        Command::GcdSweep {
            f,
            g,
            gs,
            kmin,
            kmax,
            kstep,
            epsilon,
            track,
            format,
        } => sweep(ctx, f, g, gs, (*kmin, *kmax, *kstep), epsilon, *track, *format),
        Command::Indep { gs, gate } => indep(ctx, gs, *gate),
        Command::WronskianCheck { etas, place } => wronskian_check(ctx, etas, place),
        Command::BsCheck { f, g, m, gs, place } => bs(ctx, f, g, *m, gs, place),
        Command::ExpSlopes { a, b, kmax } => exp_slopes(ctx, a, b, *kmax),
        Command::Corpus { dir } => return corpus::run_corpus(dir, ctx),
        Command::Suite { name } => suite(ctx, name),
    };
    match result {
        Ok(o) => o,
        Err(e) => error_outcome(name, ctx.seed, &e),
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    seed: u64,
    pass: bool,
    report: &'a T,
}

fn json<T: Serialize>(command: &str, seed: u64, pass: bool, report: &T) -> Report {
    let env = Envelope {
        command,
        seed,
        pass,
        report,
    };
    let mut body = serde_json::to_string_pretty(&env).expect("reports serialize");
    body.push('\n');
    Report { ext: "json", body }
}

fn csv<T: Serialize, S: Serialize>(command: &str, seed: u64, rows: &[T], summary: &S) -> Report {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("rows serialize");
    }
    let table = String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8");
    let summary = serde_json::to_string(summary).expect("summaries serialize");
    Report {
        ext: "csv",
        body: format!("# nevgcd {command} seed={seed}\n{table}# summary: {summary}\n"),
    }
}

fn status(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

#[derive(Serialize)]
struct ErrorReport {
    kind: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_witness")]
    witness: Option<Vec<num_bigint::BigInt>>,
}

fn opt_witness<S: serde::Serializer>(w: &Option<Vec<num_bigint::BigInt>>, s: S) -> Result<S::Ok, S::Error> {
    report::opt_bigints(w, s)
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ArityMismatch(..) => "arity_mismatch",
        Error::DegreeTooLow { .. } => "degree_too_low",
        Error::ZeroDenominator => "zero_denominator",
        Error::ZeroInput(_) => "zero_input",
        Error::ConstantInput(_) => "constant_input",
        Error::NotSquarefree(_) => "not_squarefree",
        Error::InvalidPlace(_) => "invalid_place",
        Error::PlaceSplits { .. } => "place_splits",
        Error::NotHomogeneous(_) => "not_homogeneous",
        Error::UnequalDegrees(..) => "unequal_degrees",
        Error::NotCoprime(_) => "not_coprime",
        Error::CommonZero(_) => "common_zero",
        Error::Dependent { .. } => "dependent",
        Error::BothVanishAtOrigin => "both_vanish_at_origin",
        Error::NotPolynomial(_) => "not_polynomial",
        Error::Parse { .. } => "parse",
        Error::Empty(_) => "empty",
        Error::FieldMismatch(..) => "field_mismatch",
        Error::Invalid(_) => "invalid",
    }
}

fn error_outcome(command: &str, seed: u64, e: &Error) -> Outcome {
    let witness = match e {
        Error::Dependent { witness } => Some(witness.clone()),
        _ => None,
    };
    let rep = ErrorReport {
        kind: error_kind(e),
        message: e.to_string(),
        witness,
    };
    let code = if e.is_hypothesis() { EXIT_HYPOTHESIS } else { EXIT_USAGE };
    let mut o = Outcome::new(code, json(command, seed, false, &rep));
    o.notes.push(format!("error: {e}"));
    o
}

type CmdResult = nevgcd::Result<Outcome>;

fn parse_rfs(gs: &[String]) -> nevgcd::Result<Vec<RationalFunction>> {
    gs.iter().map(|s| parse_rf(s)).collect()
}

fn parse_place(s: &str) -> nevgcd::Result<Place> {
    match s.trim() {
        "inf" | "infinity" => Ok(Place::Infinity),
        p => Place::finite(parse_uni(p)?),
    }
}

#[derive(Serialize)]
struct BasisOutput<'a> {
    slice: &'a BasisSlice,
    constants: SliceConstants,
    basis_check: BasisReport,
    sums: SumReport,
}

fn basis(ctx: &Context, f1: &str, f2: &str, m: u32, order: &str) -> CmdResult {
    let ord: MonomialOrder = order.parse()?;
    let used = [max_var_index(f1)?, max_var_index(f2)?]
        .into_iter()
        .flatten()
        .max()
        .map_or(1, |i| i + 1);
    let nvars = used.max(ord.arity().unwrap_or(0));
    let s = build_basis_slice(&parse_multi(f1, Some(nvars))?, &parse_multi(f2, Some(nvars))?, m, &ord)?;
    let out = BasisOutput {
        slice: &s,
        constants: s.constants(),
        basis_check: verify_basis(&s),
        sums: verify_sum_formulas(&s),
    };
    let pass = out.basis_check.pass && out.sums.pass;
    Ok(Outcome::new(status(pass), json("basis", ctx.seed, pass, &out)))
}

#[derive(Serialize)]
struct IdentitiesSummary<'a> {
    n: u32,
    d: u32,
    m_max: u32,
    reference_m: u32,
    sequences: &'a [SequenceSummary],
    pass: bool,
}

fn identities(ctx: &Context, n: u32, d: u32, mmax: u32) -> CmdResult {
    let rep = asymptotic_check(n, d, mmax)?;
    let summary = IdentitiesSummary {
        n,
        d,
        m_max: mmax,
        reference_m: rep.reference_m,
        sequences: &rep.sequences,
        pass: rep.pass,
    };
    Ok(Outcome::new(status(rep.pass), csv("identities", ctx.seed, &rep.rows, &summary)))
}

#[derive(Serialize)]
struct SweepSummary {
    track: Track,
    rank: usize,
    #[serde(serialize_with = "report::rational")]
    epsilon: Rational,
    first_below: Option<u32>,
    stable_from: Option<u32>,
    all_later_below: bool,
    pass: bool,
}

#[allow(clippy::too_many_arguments)]
fn sweep(
    ctx: &Context,
    f: &str,
    g: &str,
    gs: &[String],
    (kmin, kmax, kstep): (u32, u32, u32),
    epsilon: &str,
    track: TrackArg,
    format: Format,
) -> CmdResult {
    let nvars = gs.len() + 1;
    let mut cfg = SweepConfig::new(
        parse_multi(f, Some(nvars))?,
        parse_multi(g, Some(nvars))?,
        parse_rfs(gs)?,
        kmin,
        kmax,
    );
    cfg.k_step = kstep;
    cfg.epsilon = parse_rational(epsilon)?;
    cfg.exec = ctx.exec;
    let rep = match track {
        TrackArg::N => gcd_sweep(&cfg)?,
        TrackArg::T => tgcd_sweep(&cfg)?,
    };
    let pass = rep.stable_from.is_some();
    let report = match format {
        Format::Json => json("gcd-sweep", ctx.seed, pass, &rep),
        Format::Csv => {
            let summary = SweepSummary {
                track: rep.track,
                rank: rep.rank,
                epsilon: rep.epsilon.clone(),
                first_below: rep.first_below,
                stable_from: rep.stable_from,
                all_later_below: rep.all_later_below,
                pass,
            };
            csv("gcd-sweep", ctx.seed, &rep.rows, &summary)
        }
    };
    Ok(Outcome::new(status(pass), report))
}

fn indep(ctx: &Context, gs: &[String], gate: bool) -> CmdResult {
    let cert = mult_independent(&parse_rfs(gs)?)?;
    let code = if gate && !cert.independent { EXIT_HYPOTHESIS } else { EXIT_PASS };
    Ok(Outcome::new(code, json("indep", ctx.seed, cert.independent, &cert)))
}

#[derive(Serialize)]
struct WronskianOutput<'a> {
    #[serde(flatten)]
    check: &'a LocalCheckReport,
    #[serde(serialize_with = "report::display")]
    wronskian: RationalFunction,
}

fn wronskian_check(ctx: &Context, etas: &[String], place: &str) -> CmdResult {
    let etas = parse_rfs(etas)?;
    let pl = parse_place(place)?;
    let check = ordw_check(&etas, &pl)?;
    let out = WronskianOutput {
        check: &check,
        wronskian: wronskian(&etas)?,
    };
    Ok(Outcome::new(
        status(check.pass),
        json("wronskian-check", ctx.seed, check.pass, &out),
    ))
}

fn bs(ctx: &Context, f: &str, g: &str, m: u32, gs: &[String], place: &str) -> CmdResult {
    let nvars = gs.len();
    let gs = gs.iter().map(|s| parse_uni(s)).collect::<nevgcd::Result<Vec<_>>>()?;
    let rep = bs_check(
        &parse_multi(f, Some(nvars))?,
        &parse_multi(g, Some(nvars))?,
        m,
        &gs,
        &parse_place(place)?,
    )?;
    Ok(Outcome::new(
        status(rep.check.pass),
        json("bs-check", ctx.seed, rep.check.pass, &rep),
    ))
}

#[derive(Serialize)]
struct ExpSummary {
    #[serde(serialize_with = "report::display")]
    a: QuadExt,
    #[serde(serialize_with = "report::display")]
    b: QuadExt,
    k_max: u32,
}

fn exp_slopes(ctx: &Context, a: &str, b: &str, kmax: u32) -> CmdResult {
    let (a, b): (QuadExt, QuadExt) = (a.parse()?, b.parse()?);
    let rows = exp_slope_table(&a, &b, kmax)?;
    let summary = ExpSummary { a, b, k_max: kmax };
    Ok(Outcome::new(EXIT_PASS, csv("exp-slopes", ctx.seed, &rows, &summary)))
}

fn suite(ctx: &Context, name: &str) -> CmdResult {
    let rep = run_suite(name, ctx.seed, ctx.exec)?;
    Ok(Outcome::new(status(rep.pass), json("suite", ctx.seed, rep.pass, &rep)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Context {
        Context {
            seed: 9,
            exec: Execution::Sequential,
            out_dir: None,
        }
    }

    #[test]
    fn places_parse() {
        assert_eq!(parse_place("inf").unwrap(), Place::Infinity);
        assert!(matches!(parse_place("z^2 + 1").unwrap(), Place::Finite(_)));
        assert!(parse_place("z^2").is_err());
    }

    #[test]
    fn exit_codes_follow_error_class() {
        let o = error_outcome("x", 0, &Error::BothVanishAtOrigin);
        assert_eq!(o.code, EXIT_HYPOTHESIS);
        let o = error_outcome("x", 0, &Error::Invalid("bad".into()));
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.report.unwrap().body.contains("\"kind\": \"invalid\""));
    }

    #[test]
    fn csv_header_records_seed() {
        let o = execute(
            &Command::ExpSlopes {
                a: "1".into(),
                b: "2".into(),
                kmax: 1,
            },
            &ctx(),
        );
        let body = o.report.unwrap().body;
        assert_eq!(
            body,
            "# nevgcd exp-slopes seed=9\nk,ngcd_slope,maxT_slope,ratio\n1,1,2,1/2\n# summary: {\"a\":\"1\",\"b\":\"2\",\"k_max\":1}\n"
        );
    }
}
