//! The `ncprop` command line: compose morphisms, compute `Phi` and `Psi`,
//! evaluate spans on bialgebras, convert encodings and run the verification
//! suites.
//!
//! Exit status is 0 on success, 1 when a verification suite fails and 2 on
//! malformed input; diagnostics go to the error stream.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::bialg::{builtin, eval_span, psi, Bialgebra, LinMap};
use crate::doublecat::DoubleKind;
use crate::error::{Error, Result};
use crate::ncset::{FinSetMap, NcMap, Permutation};
use crate::operad::{as_operad, compose_fp, FPMorphism, SetOperad};
use crate::qprop::{
    compose_span, mon_span_of_words, mon_words_of_span, phi_compose, qf_from_matrix, qf_to_matrix, qfas_decode,
    qfas_encode, shuffle_to_word, word_to_shuffle, EndoPair, NatMatrix, QfasEncoding, Shuffle, Span, WordTuple,
};
use crate::verify::{self, Bounds, SUITES};

/// Largest arity for which `compose --cat fp` tabulates the associative
/// operad on its own.
const FP_ARITY_LIMIT: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "ncprop", version, about = "Noncommutative finite sets and the PROP of bialgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compose two morphisms: A first, then B.
    Compose {
        #[arg(long = "cat", value_enum)]
        category: Category,
        a: PathBuf,
        b: PathBuf,
        /// Operad JSON for `--cat fp`; the associative operad by default.
        #[arg(long)]
        operad: Option<PathBuf>,
    },
    /// Print Phi(sigma, tau) in one-line notation.
    Phi {
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
    },
    /// Print the matrix of Psi^(n, sigma) on a bialgebra.
    Psi {
        #[arg(long)]
        algebra: String,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
        format: MatrixFormat,
    },
    /// Evaluate a span on a bialgebra.
    Eval {
        #[arg(long)]
        algebra: String,
        span: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Json)]
        format: MatrixFormat,
    },
    /// Convert a span (or, for shuffles, a word tuple) into an encoding.
    Encode {
        #[arg(long, value_enum)]
        scheme: Scheme,
        input: PathBuf,
    },
    /// Convert an encoding back into a span (or, for shuffles, a word tuple).
    Decode {
        #[arg(long, value_enum)]
        scheme: Scheme,
        input: PathBuf,
    },
    /// Run verification suites.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Override a size bound, as `name=value`.
        #[arg(long = "bound", value_name = "NAME=VALUE")]
        bounds: Vec<String>,
        /// Also print one line per criterion and the first mismatches.
        #[arg(long, short)]
        verbose: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Category {
    Fas,
    F,
    #[value(name = "q-fas")]
    QFas,
    #[value(name = "q-f")]
    QF,
    #[value(name = "q-fas1")]
    QFas1,
    #[value(name = "q-fas2")]
    QFas2,
    Mon,
    Fp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MatrixFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Scheme {
    Matrix,
    Words,
    Shuffle,
    Qfas,
}

/// A failure of a command, sorted into the exit status it produces.
enum Failure {
    Input(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Run the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Input(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Compose {
            category,
            a,
            b,
            operad,
        } => {
            let text = compose(category, &a, &b, operad.as_deref())?;
            writeln!(out, "{text}")?;
        }
        Command::Phi { sigma, tau } => {
            let sigma = parse_permutation(&sigma)?;
            let tau = parse_permutation(&tau)?;
            writeln!(out, "{}", phi_compose(&sigma, &tau))?;
        }
        Command::Psi {
            algebra,
            n,
            sigma,
            format,
        } => {
            let sigma = match sigma {
                Some(text) => parse_permutation(&text)?,
                None => Permutation::identity(n),
            };
            let b = load_algebra(&algebra)?;
            write_matrix(out, &psi(n, &sigma, &b)?, format)?;
        }
        Command::Eval { algebra, span, format } => {
            let span: Span = read_json(&span)?;
            let b = load_algebra(&algebra)?;
            write_matrix(out, &eval_span(&span, &b)?, format)?;
        }
        Command::Encode { scheme, input } => {
            let text = encode(scheme, &input)?;
            writeln!(out, "{text}")?;
        }
        Command::Decode { scheme, input } => {
            let text = decode(scheme, &input)?;
            writeln!(out, "{text}")?;
        }
        Command::Check {
            suite,
            bounds,
            verbose,
        } => {
            let mut limits = Bounds::default();
            for entry in &bounds {
                let (key, value) = entry
                    .split_once('=')
                    .ok_or_else(|| Failure::Input(format!("bound {entry:?} is not NAME=VALUE")))?;
                limits.set(key.trim(), value.trim())?;
            }
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut all_pass = true;
            for name in names {
                let report = verify::run_suite(name, &limits)?;
                writeln!(out, "{report}")?;
                if verbose {
                    for criterion in &report.criteria {
                        writeln!(out, "  {criterion}")?;
                        for failure in &criterion.failures {
                            writeln!(out, "    mismatch: {failure}")?;
                        }
                    }
                }
                all_pass &= report.ok();
            }
            if !all_pass {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

/// Whitespace-separated images, e.g. `"2 3 1"`.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let images = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("{tok:?} is not a positive integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(images)
}

/// A builtin name, or a path to a JSON file of structure constants.
fn load_algebra(name: &str) -> Result<Bialgebra> {
    if name.ends_with(".json") {
        read_json(Path::new(name))
    } else {
        builtin(name)
    }
}

fn read_text(path: &Path) -> Result<String> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Parse(format!("standard input: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)?)
}

fn write_matrix(out: &mut dyn Write, m: &LinMap, format: MatrixFormat) -> std::io::Result<()> {
    match format {
        MatrixFormat::Json => writeln!(out, "{}", m.to_json()),
        MatrixFormat::Csv => write!(out, "{}", m.to_csv()),
        MatrixFormat::Text => {
            for row in m.to_dense() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
            Ok(())
        }
    }
}

fn span_kind(category: Category) -> Option<DoubleKind> {
    match category {
        Category::QFas => Some(DoubleKind::Fas),
        Category::QF => Some(DoubleKind::F),
        Category::QFas1 => Some(DoubleKind::Fas1),
        Category::QFas2 => Some(DoubleKind::Fas2),
        _ => None,
    }
}

fn compose(category: Category, a: &Path, b: &Path, operad: Option<&Path>) -> Result<String> {
    if let Some(kind) = span_kind(category) {
        let (first, second): (Span, Span) = (read_json(a)?, read_json(b)?);
        for s in [&first, &second] {
            if s.kind() != kind {
                return Err(Error::Kind {
                    expected: kind,
                    found: s.kind(),
                });
            }
        }
        return to_json(&compose_span(&second, &first)?);
    }
    match category {
        Category::Fas => {
            let (first, second): (NcMap, NcMap) = (read_json(a)?, read_json(b)?);
            to_json(&second.compose(&first)?)
        }
        Category::F => {
            let (first, second): (FinSetMap, FinSetMap) = (read_json(a)?, read_json(b)?);
            to_json(&second.compose(&first)?)
        }
        Category::Mon => {
            let (first, second): (EndoPair, EndoPair) = (read_json(a)?, read_json(b)?);
            to_json(&second.after(&first))
        }
        Category::Fp => {
            let (first, second): (FPMorphism, FPMorphism) = (read_json(a)?, read_json(b)?);
            let op: SetOperad = match operad {
                Some(path) => read_json(path)?,
                None => {
                    let arity = first.source_size().max(1);
                    if arity > FP_ARITY_LIMIT {
                        return Err(Error::NotCovered(format!(
                            "composites of arity {arity}; pass --operad with larger tables"
                        )));
                    }
                    as_operad(arity)
                }
            };
            first.validate(&op)?;
            second.validate(&op)?;
            to_json(&compose_fp(&op, &second, &first)?)
        }
        _ => unreachable!("span categories are handled above"),
    }
}

fn encode(scheme: Scheme, input: &Path) -> Result<String> {
    match scheme {
        Scheme::Matrix => to_json(&qf_to_matrix(&read_json::<Span>(input)?)?),
        Scheme::Words => to_json(&mon_words_of_span(&read_json::<Span>(input)?)?),
        Scheme::Qfas => to_json(&qfas_encode(&read_json::<Span>(input)?)?),
        Scheme::Shuffle => {
            let words: WordTuple = read_json(input)?;
            let shuffles = words
                .words()
                .iter()
                .map(|w| word_to_shuffle(w, words.alphabet()))
                .collect::<Result<Vec<Shuffle>>>()?;
            to_json(&shuffles)
        }
    }
}

fn decode(scheme: Scheme, input: &Path) -> Result<String> {
    match scheme {
        Scheme::Matrix => to_json(&qf_from_matrix(&read_json::<NatMatrix>(input)?)),
        Scheme::Words => to_json(&mon_span_of_words(&read_json::<WordTuple>(input)?)),
        Scheme::Qfas => to_json(&qfas_decode(&read_json::<QfasEncoding>(input)?)?),
        Scheme::Shuffle => {
            let shuffles: Vec<Shuffle> = read_json(input)?;
            let alphabet = shuffles.first().map_or(0, |s| s.block_type().len());
            if shuffles.iter().any(|s| s.block_type().len() != alphabet) {
                return Err(Error::invalid("shuffle list", "all shuffles need the same number of blocks"));
            }
            to_json(&WordTuple::new(alphabet, shuffles.iter().map(shuffle_to_word).collect())?)
        }
    }
}
