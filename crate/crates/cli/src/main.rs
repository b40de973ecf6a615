use std::io::{self, Write};
use std::num::NonZeroUsize;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semiinf::characters::{
    brute_force_gch_minus_e, gch_demazure_minus_e, gch_demazure_plus_w0, gch_quotient_minus, gch_quotient_plus,
    invert_xq, macdonald_t0,
};
use semiinf::export::{character_record, path_record, paths_dot, qls_records, root_system_record, si_graph_dot};
use semiinf::path::parse_rational;
use semiinf::{
    enumerate_demazure, AffineWeylElt, CartanDatum, CartanType, EnumerationConfig, Error, FiniteWeylElt, GradedCharacter,
    QlsCrystal, QlsData, Rational, Shape,
};

#[derive(Parser)]
#[command(name = "semiinf", version, about = "Semi-infinite LS paths, QLS paths and graded Demazure characters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan data, roots and marks as JSON.
    RootSystem(TypeArgs),
    /// Cover graph of the semi-infinite Bruhat graph as DOT.
    SiGraph {
        #[command(flatten)]
        weight: WeightArgs,
        /// keep Peterson projections of words of length <= R with |si_length| <= R
        #[arg(long, default_value_t = 3)]
        radius: usize,
        /// restrict to edges of SB(a), e.g. 1/2
        #[arg(long, value_parser = parse_cut)]
        a: Option<Rational>,
    },
    /// Semi-infinite LS paths.
    Sils {
        #[command(subcommand)]
        action: SilsAction,
    },
    /// Quantum LS paths.
    Qls {
        #[command(subcommand)]
        action: QlsAction,
    },
    /// Graded characters and identity checks.
    Char {
        #[arg(value_enum)]
        what: CharKind,
        #[command(flatten)]
        weight: WeightArgs,
        /// truncation depth D
        #[arg(long, default_value_t = 2)]
        depth: i64,
        /// Weyl element in W^J as a word, e.g. 1,2 (empty or e for the identity)
        #[arg(long, default_value = "")]
        w: String,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Subcommand)]
enum SilsAction {
    /// Paths in B(>= x) with delta coefficient >= -D.
    Enumerate {
        #[command(flatten)]
        weight: WeightArgs,
        /// Peterson representative as "word|xi", e.g. "1,2|0,1"
        #[arg(long, default_value = "|")]
        x: String,
        #[arg(long, default_value_t = 2)]
        depth: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        out: Format,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Subcommand)]
enum QlsAction {
    /// All of QLS(lambda), one JSON row per path.
    Enumerate {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct TypeArgs {
    /// Cartan type A..G
    #[arg(long = "type", value_parser = parse_type)]
    cartan: CartanType,
    #[arg(long)]
    rank: usize,
}

#[derive(Args)]
struct WeightArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// coefficients m_1,...,m_n of lambda in fundamental weights
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Args)]
struct RunArgs {
    /// search node budget
    #[arg(long, default_value = "50000000")]
    budget: NonZeroUsize,
    /// worker threads for enumeration
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharKind {
    Macdonald,
    DemazureMinus,
    DemazurePlus,
    QuotientMinus,
    QuotientPlus,
    /// enumeration against the closed form of the minus side
    #[value(name = "verify-grch1")]
    VerifyGrch1,
    /// plus side against the inverted minus side of -w0 lambda
    #[value(name = "verify-grch2")]
    VerifyGrch2,
}

fn parse_type(s: &str) -> Result<CartanType, Error> {
    s.parse()
}

fn parse_ints(s: &str) -> Result<Vec<i64>, String> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(|t| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"))).collect()
}

fn parse_cut(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational p/q"))
}

enum Failure {
    Usage(String),
    Budget(String),
    Mismatch(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExhausted(_) => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn datum(ty: &TypeArgs) -> Result<Arc<CartanDatum>, Failure> {
    Ok(CartanDatum::build(ty.cartan, ty.rank)?)
}

fn shape(w: &WeightArgs) -> Result<Arc<Shape>, Failure> {
    let d = datum(&w.ty)?;
    Ok(Shape::new(d, &lambda(w)?)?)
}

fn lambda(w: &WeightArgs) -> Result<Vec<i64>, Failure> {
    parse_ints(&w.lambda).map_err(|e| Failure::Usage(format!("--lambda: {e}")))
}

fn config(run: &RunArgs) -> EnumerationConfig {
    EnumerationConfig { budget: run.budget.get(), jobs: run.jobs.max(1) }
}

fn parse_word(d: &CartanDatum, s: &str) -> Result<FiniteWeylElt, Failure> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(FiniteWeylElt::identity(d));
    }
    let word = parse_ints(s).map_err(Failure::Usage)?;
    let word: Vec<usize> = word.into_iter().map(|i| usize::try_from(i).map_err(|_| Failure::Usage(format!("bad node {i}")))).collect::<Result<_, _>>()?;
    Ok(FiniteWeylElt::from_word(d, &word)?)
}

fn emit_json(out: &mut impl Write, value: &impl serde::Serialize) -> Outcome {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn emit_char(out: &mut impl Write, w: &WeightArgs, depth: Option<i64>, ch: &GradedCharacter) -> Outcome {
    let d = datum(&w.ty)?;
    emit_json(out, &character_record(&d, &lambda(w)?, depth, ch))
}

fn verify(out: &mut impl Write, label: &str, left: &GradedCharacter, right: &GradedCharacter) -> Outcome {
    let diff = left.diff(right);
    if diff.is_empty() && left.window() == right.window() {
        writeln!(out, "{label}: OK ({} terms)", left.len())?;
        return Ok(());
    }
    let mut report = format!("{label}: MISMATCH in {} terms\n", diff.len());
    for (fw, q, l, r) in diff {
        report.push_str(&format!("  x^{fw:?} q^{q}: {l} != {r}\n"));
    }
    Err(Failure::Mismatch(report))
}

fn run_char(out: &mut impl Write, kind: CharKind, w: &WeightArgs, depth: i64, word: &str, run: &RunArgs) -> Outcome {
    if depth < 0 {
        return Err(Failure::Usage("--depth must be >= 0".into()));
    }
    let sh = shape(w)?;
    let d = sh.datum().clone();
    match kind {
        CharKind::Macdonald => {
            let c = QlsCrystal::generate(sh, run.budget.get())?;
            emit_char(out, w, None, &macdonald_t0(&c))
        }
        CharKind::DemazureMinus => {
            let c = QlsCrystal::generate(sh, run.budget.get())?;
            emit_char(out, w, Some(depth), &gch_demazure_minus_e(&c, depth))
        }
        CharKind::DemazurePlus => {
            let c = QlsCrystal::generate(sh, run.budget.get())?;
            emit_char(out, w, Some(depth), &gch_demazure_plus_w0(&c, depth))
        }
        CharKind::QuotientMinus => {
            let c = QlsCrystal::generate(sh, run.budget.get())?;
            let x = parse_word(&d, word)?;
            emit_char(out, w, None, &gch_quotient_minus(&c, &x)?)
        }
        CharKind::QuotientPlus => {
            let data = QlsData::generate(sh, run.budget.get())?;
            let x = parse_word(&d, word)?;
            emit_char(out, w, None, &gch_quotient_plus(&data, &x)?)
        }
        CharKind::VerifyGrch1 => {
            let c = QlsCrystal::generate(sh.clone(), run.budget.get())?;
            let closed = gch_demazure_minus_e(&c, depth);
            let brute = brute_force_gch_minus_e(&sh, depth, config(run))?;
            verify(out, "enumeration vs closed form", &brute, &closed)
        }
        CharKind::VerifyGrch2 => {
            let data = QlsData::generate(sh.clone(), run.budget.get())?;
            let plus = gch_demazure_plus_w0(&data.crystal, depth);
            let minus = invert_xq(&gch_demazure_minus_e(&data.dual, depth));
            verify(out, "plus side vs inverted minus side of -w0 lambda", &plus, &minus)?;
            let brute = invert_xq(&brute_force_gch_minus_e(&sh.dual(), depth, config(run))?);
            verify(out, "plus side vs inverted enumeration for -w0 lambda", &plus, &brute)
        }
    }
}

fn dispatch(cli: Cli, out: &mut impl Write) -> Outcome {
    match cli.command {
        Command::RootSystem(ty) => {
            let d = datum(&ty)?;
            serde_json::to_writer_pretty(&mut *out, &root_system_record(&d))?;
            writeln!(out)?;
            Ok(())
        }
        Command::SiGraph { weight, radius, a } => {
            let sh = shape(&weight)?;
            let r = radius as i64;
            let nodes: Vec<AffineWeylElt> = sh.parabolic().word_ball(radius).into_iter().filter(|x| x.si_length().abs() <= r).collect();
            write!(out, "{}", si_graph_dot(&sh, &nodes, a))?;
            Ok(())
        }
        Command::Sils { action: SilsAction::Enumerate { weight, x, depth, out: format, run } } => {
            let sh = shape(&weight)?;
            let x = AffineWeylElt::parse(sh.datum(), &x)?;
            let paths = enumerate_demazure(&sh, &x, depth, config(&run))?;
            match format {
                Format::Json => {
                    for eta in &paths {
                        emit_json(out, &path_record(&sh, eta))?;
                    }
                }
                Format::Dot => write!(out, "{}", paths_dot(&sh, &paths))?,
            }
            Ok(())
        }
        Command::Qls { action: QlsAction::Enumerate { weight, run } } => {
            let sh = shape(&weight)?;
            let data = QlsData::generate(sh, run.budget.get())?;
            for row in qls_records(&data) {
                emit_json(out, &row)?;
            }
            Ok(())
        }
        Command::Char { what, weight, depth, w, run } => run_char(out, what, &weight, depth, &w, &run),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = dispatch(cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::Io)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}; no output was written for the incomplete search, raise --budget");
            ExitCode::from(3)
        }
        Err(Failure::Mismatch(report)) => {
            eprint!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
