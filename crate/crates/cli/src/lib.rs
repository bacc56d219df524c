//! `symcalc`: command-line access to the symbol-calculus library.
//!
//! [`execute`] runs one command and returns its exit status together with
//! everything it would print, so the binary and the tests share one path.
//! Output is a pure function of the arguments.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use symbol_calculus::verify::{verify_all, verify_prop12};
use symbol_calculus::{
    atomize, counts, decompose_step, enumerate, exceptional_delta, member, springer_set, tau, verify_closure,
    ClassicalType, ClosureRule, Error, ExceptionalType, Family, GroupType, Series, Side, SymbolPair,
    ENUMERATION_CAP,
};

mod render;
mod table;

pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CAP_EXCEEDED: i32 = 3;
    pub const INVALID_PAIR: i32 = 4;
    pub const NOT_IN_FAMILY: i32 = 5;
    pub const NOT_NORMALIZED: i32 = 6;
    pub const UNKNOWN_CASE: i32 = 7;
    pub const IO: i32 = 8;
    pub const INTERNAL: i32 = 9;
}

/// Default size cap for commands that list one size.
pub const DEFAULT_N_CAP: usize = 12;
/// Default cap for commands that sweep every size up to `--max-n`.
pub const DEFAULT_MAX_N_CAP: usize = 10;

const GRAMMAR: &str = "\
verbs:
  enumerate     --family F --n INT
  member        --family F --pair JSON
  decompose     --series S --pair JSON
  atomize       --series S --pair JSON
  verify        (--closure L+R=T | --prop12 --series S | --all) --max-n INT
  springer-set  --type T --n INT --side {group,algebra}
  tau           --type T --n INT
  counts        --series T --max-n INT
  exceptional   --type {g2,f4,e6,e7,e8} --p INT
  F = c|d|b|b1|b2|c1|dd|d1|d2   S = a|b|d   T = b|c|d
common: --format {json,csv,text} (default json), --output PATH, --unsafe-cap
";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Group,
    Algebra,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Group => Side::Group,
            SideArg::Algebra => Side::Algebra,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "symcalc", version, about = "Symbol-pair families, decompositions, and orbit parametrizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the output to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Raise the size caps to the library maximum.
    #[arg(long)]
    unsafe_cap: bool,
}

fn family_arg() -> impl TypedValueParser<Value = Family> {
    PossibleValuesParser::new(Family::ALL.map(Family::tag)).map(|s| s.parse::<Family>().expect("listed tag"))
}

fn series_arg() -> impl TypedValueParser<Value = Series> {
    PossibleValuesParser::new(Series::ALL.map(Series::tag)).map(|s| s.parse::<Series>().expect("listed tag"))
}

fn type_arg() -> impl TypedValueParser<Value = ClassicalType> {
    PossibleValuesParser::new(["b", "c", "d"]).map(|s| s.parse::<ClassicalType>().expect("listed tag"))
}

fn exceptional_arg() -> impl TypedValueParser<Value = ExceptionalType> {
    PossibleValuesParser::new(["g2", "f4", "e6", "e7", "e8"])
        .map(|s| s.parse::<ExceptionalType>().expect("listed tag"))
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List a family at size n (canonical k = n + 1).
    Enumerate {
        #[arg(long, value_parser = family_arg())]
        family: Family,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Test membership of a pair, at the pair's own k.
    Member {
        #[arg(long, value_parser = family_arg())]
        family: Family,
        #[arg(long)]
        pair: String,
        #[command(flatten)]
        common: Common,
    },
    /// One decomposition step (the pair is normalized first).
    Decompose {
        #[arg(long, value_parser = series_arg())]
        series: Series,
        #[arg(long)]
        pair: String,
        #[command(flatten)]
        common: Common,
    },
    /// Decompose repeatedly down to terminal pieces.
    Atomize {
        #[arg(long, value_parser = series_arg())]
        series: Series,
        #[arg(long)]
        pair: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run exhaustive checks.
    #[command(group(ArgGroup::new("mode").required(true).args(["closure", "prop12", "all"])))]
    Verify {
        #[arg(long)]
        closure: Option<String>,
        #[arg(long, requires = "series")]
        prop12: bool,
        #[arg(long)]
        all: bool,
        #[arg(long, value_parser = series_arg())]
        series: Option<Series>,
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Labels of unipotent classes (group) or nilpotent orbits (algebra).
    SpringerSet {
        #[arg(long = "type", value_parser = type_arg())]
        group_type: ClassicalType,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        side: SideArg,
        #[command(flatten)]
        common: Common,
    },
    /// Map from group-side labels to algebra-side labels.
    Tau {
        #[arg(long = "type", value_parser = type_arg())]
        group_type: ClassicalType,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Label counts on both sides for every rank up to max-n.
    Counts {
        #[arg(long, value_parser = type_arg())]
        series: ClassicalType,
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Recorded algebra-only representations for an exceptional type.
    Exceptional {
        #[arg(long = "type", value_parser = exceptional_arg())]
        group_type: ExceptionalType,
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Enumerate { common, .. }
            | Command::Member { common, .. }
            | Command::Decompose { common, .. }
            | Command::Atomize { common, .. }
            | Command::Verify { common, .. }
            | Command::SpringerSet { common, .. }
            | Command::Tau { common, .. }
            | Command::Counts { common, .. }
            | Command::Exceptional { common, .. } => common,
        }
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

struct Success {
    body: String,
    /// Exit status for a completed run; nonzero only for failed verification.
    code: i32,
    warnings: Vec<String>,
}

impl Success {
    fn ok(body: String) -> Self {
        Success { body, code: exit::OK, warnings: Vec::new() }
    }
}

fn check_cap(value: usize, default_cap: usize, unsafe_cap: bool) -> Result<(), Failure> {
    let cap = if unsafe_cap { ENUMERATION_CAP } else { default_cap };
    if value > cap {
        return Err(Failure::Lib(Error::CapExceeded { requested: value, cap }));
    }
    Ok(())
}

fn parse_pair(text: &str) -> Result<SymbolPair, Failure> {
    SymbolPair::from_json(text).map_err(|e| Failure::Usage(format!("invalid --pair: {e}")))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output serializes");
    s.push('\n');
    s
}

fn run(cmd: &Command) -> Result<Success, Failure> {
    let (format, unsafe_cap) = (cmd.common().format, cmd.common().unsafe_cap);
    match cmd {
        Command::Enumerate { family, n, .. } => {
            check_cap(*n, DEFAULT_N_CAP, unsafe_cap)?;
            let pairs = enumerate(*family, *n)?;
            Ok(Success::ok(render::pairs(&pairs, format)))
        }
        Command::Member { family, pair, .. } => {
            let p = parse_pair(pair)?;
            Ok(Success::ok(render::membership(&p, *family, member(&p, *family), format)))
        }
        Command::Decompose { series, pair, .. } => {
            let p = normalized_input(pair, unsafe_cap)?;
            let d = decompose_step(&p, *series)?;
            Ok(Success::ok(render::decomposition(&d, format)))
        }
        Command::Atomize { series, pair, .. } => {
            let p = normalized_input(pair, unsafe_cap)?;
            let leaves = atomize(&p, *series)?;
            Ok(Success::ok(render::leaves(&leaves, format)))
        }
        Command::Verify { closure, prop12, all, series, max_n, .. } => {
            check_cap(*max_n, DEFAULT_MAX_N_CAP, unsafe_cap)?;
            let (body, pass) = if let Some(rule) = closure {
                let rule: ClosureRule =
                    rule.parse().map_err(|_| Failure::Usage(format!("invalid --closure `{rule}`")))?;
                let r = verify_closure(rule, *max_n)?;
                (render::closure(&r, format), r.pass)
            } else if *prop12 {
                let series = series.ok_or_else(|| Failure::Usage("--prop12 needs --series".into()))?;
                let r = verify_prop12(series, *max_n)?;
                (render::prop12(&r, format), r.pass)
            } else {
                debug_assert!(*all);
                let r = verify_all(*max_n)?;
                (render::all(&r, format), r.pass)
            };
            let code = if pass { exit::OK } else { exit::VERIFY_FAILED };
            Ok(Success { body, code, warnings: Vec::new() })
        }
        Command::SpringerSet { group_type, n, side, .. } => {
            check_cap(*n, DEFAULT_N_CAP, unsafe_cap)?;
            let set = springer_set(GroupType::new(*group_type, *n), (*side).into())?;
            let warnings = range_warning(set.below_min_rank, set.group);
            Ok(Success { body: render::springer(&set, format), code: exit::OK, warnings })
        }
        Command::Tau { group_type, n, .. } => {
            check_cap(*n, DEFAULT_N_CAP, unsafe_cap)?;
            let map = tau(GroupType::new(*group_type, *n))?;
            let warnings = range_warning(map.below_min_rank, map.group);
            Ok(Success { body: render::tau(&map, format), code: exit::OK, warnings })
        }
        Command::Counts { series, max_n, .. } => {
            check_cap(*max_n, DEFAULT_MAX_N_CAP, unsafe_cap)?;
            let rows = counts(*series, *max_n)?;
            Ok(Success::ok(render::counts(&rows, format)))
        }
        Command::Exceptional { group_type, p, .. } => {
            let delta = exceptional_delta(*group_type, *p)?;
            Ok(Success::ok(render::exceptional(&delta, format)))
        }
    }
}

fn normalized_input(text: &str, unsafe_cap: bool) -> Result<SymbolPair, Failure> {
    let p = parse_pair(text)?;
    check_cap(p.size() as usize, DEFAULT_N_CAP, unsafe_cap)?;
    Ok(p.normalize()?)
}

fn range_warning(outside: bool, g: GroupType) -> Vec<String> {
    if outside {
        vec![format!("warning: {g} is below the rank range of the parametrization (computed anyway)")]
    } else {
        Vec::new()
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => exit::CAP_EXCEEDED,
        Error::EmptySequence
        | Error::NotNondecreasing { .. }
        | Error::LengthMismatch { .. }
        | Error::SizeOverflow { .. }
        | Error::NotStabilizable => exit::INVALID_PAIR,
        Error::NotInFamily { .. } => exit::NOT_IN_FAMILY,
        Error::NotNormalized => exit::NOT_NORMALIZED,
        Error::UnknownCase { .. } => exit::UNKNOWN_CASE,
        Error::Parse { .. } => exit::USAGE,
        Error::Internal { .. } => exit::INTERNAL,
    }
}

fn error_hint(e: &Error) -> Option<String> {
    if let Error::UnknownCase { group, p } = e {
        let t: ExceptionalType = group.parse().ok()?;
        if !t.bad_primes().contains(p) {
            return Some(format!(
                "note: p = {p} is not a bad prime for {t}; in good characteristic the group and algebra sets coincide"
            ));
        }
    }
    None
}

/// Runs one command line (`argv[0]` is the program name).
pub fn execute<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: exit::OK, stdout: e.render().to_string(), stderr: String::new() }
                }
                _ => Outcome {
                    code: exit::USAGE,
                    stdout: String::new(),
                    stderr: format!("{}\n{GRAMMAR}", e.render()),
                },
            };
        }
    };
    let output_path = cli.command.common().output.clone();
    match run(&cli.command) {
        Ok(success) => {
            let mut stderr = success.warnings.join("\n");
            if !stderr.is_empty() {
                stderr.push('\n');
            }
            match output_path {
                Some(path) => match std::fs::write(&path, &success.body) {
                    Ok(()) => Outcome { code: success.code, stdout: String::new(), stderr },
                    Err(e) => Outcome {
                        code: exit::IO,
                        stdout: String::new(),
                        stderr: format!("{stderr}error: cannot write {}: {e}\n", path.display()),
                    },
                },
                None => Outcome { code: success.code, stdout: success.body, stderr },
            }
        }
        Err(Failure::Usage(msg)) => {
            Outcome { code: exit::USAGE, stdout: String::new(), stderr: format!("error: {msg}\n\n{GRAMMAR}") }
        }
        Err(Failure::Lib(e)) => {
            let mut stderr = format!("error: {e}\n");
            if let Some(h) = error_hint(&e) {
                stderr.push_str(&h);
                stderr.push('\n');
            }
            Outcome { code: error_code(&e), stdout: String::new(), stderr }
        }
    }
}
