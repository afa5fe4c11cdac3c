//! `vacarg`: solve, explain, and check vacuous reduct semantics from the
//! command line.
//!
//! Exit status: 0 success, 1 refuted claim (or violated principle with
//! `--strict`), 2 usage error, 3 unparsable input, 4 internal error.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use vacarg::claims::{self, Claim};
use vacarg::enumeration::{parse_corpus_specs, Corpus, CorpusSpec};
use vacarg::formats::{self, OutputStyle, CORPUS_SEPARATOR};
use vacarg::principles::{self, PrincipleId};
use vacarg::semantics::Frame;
use vacarg::vacuous::{self, Evaluator};
use vacarg::{ArgSet, ArgumentationFramework, Error, SemanticsSpec};

const DEFAULT_VERIFY_CORPUS: &str = "exhaustive:3+exhaustive:4";

#[derive(Parser)]
#[command(name = "vacarg", version, about = "Vacuous reduct semantics for abstract argumentation")]
struct Cli {
    /// Worker threads; defaults to one per core. Output does not depend on it.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the extensions of every framework in the input.
    Solve(SolveArgs),
    /// Check principles on input frameworks, or search a corpus for violations.
    Principles(PrinciplesArgs),
    /// Verify registered claims on a corpus.
    Verify(VerifyArgs),
    /// Write a corpus as APX blocks separated by `%---` lines.
    Gen(GenArgs),
    /// Show why a set is or is not an extension.
    Explain(ExplainArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Apx,
    Tgf,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Iccma,
    Json,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, short)]
    semantics: String,
    /// Input format; `.tgf` files default to tgf, everything else to apx.
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    #[arg(long, value_enum, default_value = "iccma")]
    output: OutputFormat,
    /// Input file, or `-` for stdin.
    file: PathBuf,
}

#[derive(Args)]
struct PrinciplesArgs {
    #[arg(long, short)]
    semantics: String,
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    principle: Vec<String>,
    /// Check all thirteen principles.
    #[arg(long)]
    all: bool,
    /// Corpus to search, e.g. `exhaustive:3` or
    /// `random:n=6,p=1/4,loops=1/8,count=100,seed=0`; `+` joins corpora.
    #[arg(long, required_unless_present = "file", conflicts_with = "file")]
    corpus: Option<String>,
    #[arg(long)]
    iso_reduce: bool,
    /// Exit with status 1 if any principle is violated.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    file: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    claim: Vec<String>,
    /// Verify the whole registry.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value = DEFAULT_VERIFY_CORPUS)]
    corpus: String,
    #[arg(long)]
    iso_reduce: bool,
}

#[derive(Args)]
struct GenArgs {
    /// Every framework over N arguments (N ≤ 5).
    #[arg(long, value_name = "N", required_unless_present = "random", conflicts_with = "random")]
    exhaustive: Option<usize>,
    /// Random frameworks: `n=<n>,p=<a>/<b>,loops=<a>/<b>,count=<k>,seed=<s>`.
    #[arg(long, value_name = "PARAMS")]
    random: Option<String>,
    /// Keep one framework per isomorphism class.
    #[arg(long)]
    iso_reduce: bool,
}

#[derive(Args)]
struct ExplainArgs {
    #[arg(long, short)]
    semantics: String,
    /// Comma-separated argument names; empty for the empty set.
    #[arg(long, allow_hyphen_values = true)]
    set: String,
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    file: PathBuf,
}

enum Failure {
    Usage(String),
    Parse(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(diags) => Failure::Parse(
                diags.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n"),
            ),
            Error::Invariant(msg) => Failure::Internal(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn semantics_help() -> String {
    let tokens = vacuous::all_tokens().join(", ");
    format!(
        "Semantics tokens: {tokens}.\n\
         Combinators are written vac:<base>:<vacuity>, nesting allowed, e.g. vac:adm:cf or vac:vac:cf:adm:gr."
    )
}

fn main() -> ExitCode {
    let help = semantics_help();
    let mut command = Cli::command().after_help(help.clone());
    for name in ["solve", "principles", "verify", "gen", "explain"] {
        command = command.mut_subcommand(name, |sub| sub.after_help(help.clone()));
    }
    let cli = match Cli::from_arg_matches(&command.get_matches()) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };

    let result = claims::with_workers(cli.jobs, || run(cli.command)).unwrap_or_else(|e| Err(e.into()));
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("parse error:\n{msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(4)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Solve(args) => solve(args),
        Command::Principles(args) => check_principles(args),
        Command::Verify(args) => verify(args),
        Command::Gen(args) => generate(args),
        Command::Explain(args) => explain(args),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let bytes = if path == Path::new("-") {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        buf
    } else {
        fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    String::from_utf8(bytes).map_err(|e| Failure::Parse(format!("input is not UTF-8 ({e})")))
}

fn read_frameworks(path: &Path, format: Option<InputFormat>) -> Result<Vec<ArgumentationFramework>, Failure> {
    let text = read_input(path)?;
    let format = format.unwrap_or(match path.extension().and_then(|e| e.to_str()) {
        Some("tgf") => InputFormat::Tgf,
        _ => InputFormat::Apx,
    });
    Ok(match format {
        InputFormat::Apx => formats::parse_apx_corpus(&text)?,
        InputFormat::Tgf => vec![formats::parse_tgf(&text)?],
    })
}

fn parse_spec(token: &str) -> Result<SemanticsSpec, Failure> {
    let spec: SemanticsSpec = token.parse()?;
    spec.resolved()?;
    Ok(spec)
}

fn corpus_from(spec: &str, iso_reduce: bool) -> Result<Corpus, Failure> {
    Ok(Corpus::new(parse_corpus_specs(spec, iso_reduce)?)?)
}

fn print_json(value: &serde_json::Value) -> io::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)
}

fn solve(args: SolveArgs) -> Outcome {
    let spec = parse_spec(&args.semantics)?;
    let afs = read_frameworks(&args.file, args.format)?;
    let style = match args.output {
        OutputFormat::Iccma => OutputStyle::Iccma,
        OutputFormat::Json => OutputStyle::Json,
    };
    let lines: Vec<Result<String, Error>> = afs
        .par_iter()
        .map(|af| {
            let exts = vacuous::vac_extensions(af, &spec)?;
            Ok(formats::write_extensions(af, &exts, &args.semantics, style))
        })
        .collect();
    let mut out = io::stdout().lock();
    for line in lines {
        writeln!(out, "{}", line?)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn selected_principles(all: bool, tokens: &[String]) -> Result<Vec<PrincipleId>, Failure> {
    if all {
        return Ok(PrincipleId::ALL.to_vec());
    }
    tokens.iter().map(|t| t.parse().map_err(Failure::from)).collect()
}

fn check_principles(args: PrinciplesArgs) -> Outcome {
    let spec = parse_spec(&args.semantics)?;
    let selected = selected_principles(args.all, &args.principle)?;
    let mut violated = false;
    let report = if let Some(corpus_spec) = &args.corpus {
        let corpus = corpus_from(corpus_spec, args.iso_reduce)?;
        let mut results = Vec::new();
        for p in selected {
            let found = principles::find_counterexample(&corpus, &spec, p)?;
            violated |= found.is_some();
            results.push(serde_json::json!({
                "principle": p.token(),
                "counterexample": found.map(|v| v.to_json()),
            }));
        }
        serde_json::json!({
            "semantics": spec.to_string(),
            "corpus": corpus.describe(),
            "afs": corpus.len(),
            "results": results,
        })
    } else {
        let path = args.file.as_deref().expect("clap requires a file or a corpus");
        let afs = read_frameworks(path, args.format)?;
        let verdicts: Vec<Result<Vec<principles::Verdict>, Error>> = afs
            .par_iter()
            .map(|af| selected.iter().map(|&p| principles::check(af, &spec, p)).collect())
            .collect();
        let mut results = Vec::new();
        for verdict in verdicts {
            for v in verdict? {
                violated |= !v.holds();
                results.push(v.to_json());
            }
        }
        serde_json::json!({"semantics": spec.to_string(), "results": results})
    };
    print_json(&report)?;
    Ok(if violated && args.strict {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn verify(args: VerifyArgs) -> Outcome {
    let selected: Vec<&Claim> = if args.all {
        claims::registry().iter().collect()
    } else {
        args.claim
            .iter()
            .map(|id| claims::find(id).map_err(Failure::from))
            .collect::<Result<_, _>>()?
    };
    let corpus = corpus_from(&args.corpus, args.iso_reduce)?;
    let summary = claims::verify_claims(&selected, &corpus)?;
    print_json(&summary.to_json())?;

    let mut err = io::stderr().lock();
    write!(err, "{}", summary.table())?;
    writeln!(err, "slowest claims:")?;
    for r in summary.slowest(5) {
        writeln!(err, "  {:<14} {:>10.1} ms", r.id, r.wall_time.as_secs_f64() * 1e3)?;
    }
    Ok(if summary.refuted() > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn generate(args: GenArgs) -> Outcome {
    let mut spec: CorpusSpec = match (args.exhaustive, &args.random) {
        (Some(n), _) => CorpusSpec::exhaustive(n),
        (None, Some(params)) => CorpusSpec {
            mode: format!("random:{params}").parse()?,
            iso_reduce: false,
        },
        (None, None) => unreachable!("clap requires one corpus"),
    };
    spec.iso_reduce = args.iso_reduce;
    let corpus = Corpus::new([spec])?;
    let mut out = BufWriter::new(io::stdout().lock());
    for (i, af) in corpus.iter().enumerate() {
        if i > 0 {
            writeln!(out, "{CORPUS_SEPARATOR}")?;
        }
        out.write_all(formats::write_apx(&af).as_bytes())?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn parse_set(af: &ArgumentationFramework, list: &str) -> Result<ArgSet, Failure> {
    let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    Ok(af.set_of(&names)?)
}

fn explain(args: ExplainArgs) -> Outcome {
    let spec = parse_spec(&args.semantics)?;
    let afs = read_frameworks(&args.file, args.format)?;
    let [af] = afs.as_slice() else {
        return Err(Failure::Usage(format!("explain expects one framework, found {}", afs.len())));
    };
    let set = parse_set(af, &args.set)?;
    let mut lines = vec![format!("framework {af:?}")];
    if spec != spec.resolved()? {
        lines.push(format!("semantics {} = {}", args.semantics, spec.resolved()?));
    }
    let mut ev = Evaluator::new(af);
    let member = explain_spec(&mut ev, &spec.resolved()?, set, 0, &mut lines)?;
    lines.push(format!(
        "verdict: {} {} {}(F)",
        show(af, set),
        if member { "∈" } else { "∉" },
        args.semantics
    ));
    let mut out = io::stdout().lock();
    for line in lines {
        writeln!(out, "{line}")?;
    }
    Ok(ExitCode::SUCCESS)
}

fn show(af: &ArgumentationFramework, set: ArgSet) -> String {
    format!("{{{}}}", af.set_names(set).join(","))
}

fn explain_spec(
    ev: &mut Evaluator<'_>,
    spec: &SemanticsSpec,
    set: ArgSet,
    depth: usize,
    lines: &mut Vec<String>,
) -> Result<bool, Failure> {
    let af = ev.framework();
    let frame = Frame::whole(af);
    let pad = "  ".repeat(depth);
    match spec {
        SemanticsSpec::Vac { base, vacuity } => {
            lines.push(format!("{pad}{spec}: base {base}, vacuity {vacuity}"));
            let in_base = explain_spec(ev, base, set, depth + 1, lines)?;
            let reduct = af.reduct(set)?;
            lines.push(format!("{pad}reduct F^{} = {:?}", show(af, set), reduct.framework));
            lines.push(format!(
                "{pad}Γ(∅) on the reduct = {}",
                show(af, reduct.lift(Frame::whole(&reduct.framework).defended(ArgSet::EMPTY)))
            ));
            let found = ev.eval_on(frame.reduct(set), vacuity)?;
            let witness = found.iter().find(|e| !e.is_empty());
            match witness {
                None => lines.push(format!("{pad}{vacuity} vacuity holds")),
                Some(w) => lines.push(format!(
                    "{pad}{vacuity} vacuity fails: {} is a nonempty {vacuity} extension of the reduct",
                    show(af, w)
                )),
            }
            Ok(in_base && witness.is_none())
        }
        SemanticsSpec::Classical(_) => {
            lines.push(format!(
                "{pad}E = {}, E+ = {}, Γ(E) = {}",
                show(af, set),
                show(af, frame.plus(set)),
                show(af, frame.defended(set))
            ));
            let member = ev.eval(spec)?.contains(set);
            lines.push(format!(
                "{pad}{} {} a {spec} extension",
                show(af, set),
                if member { "is" } else { "is not" }
            ));
            Ok(member)
        }
        SemanticsSpec::Named(_) => explain_spec(ev, &spec.resolved()?, set, depth, lines),
    }
}
