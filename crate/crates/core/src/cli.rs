//! The `hyperspace` command-line tool.
//!
//! Scalars print as plain decimals (`inf` for infinity), structures as
//! single-line JSON. Exit status: 0 on success, 1 when an identity check finds
//! a counterexample, 2 on malformed input or usage, 3 when a search runs out
//! of budget.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::cubes::{make_cube, make_halfcube, CubeShape};
use crate::error::{Error, Result};
use crate::hyperspace::{Coloring, FiniteIndexedHyperspace};
use crate::morphisms::{
    fcn_estimate, find_morphism, find_parbedding_with, FcnValue, MorphismKind, NodeBudget, Search,
};
use crate::setsystem::identities::{run_all, IdentityConfig};
use crate::setsystem::{
    dandy_to_depth, depth, induced_system, parse_set_system, parse_set_tuple, transversal_number,
    SetSystem, SetTuple,
};
use crate::spray::{
    cover_with_sprays, parse_centers, spray_stream, write_csv, SprayConfig, SprayStream,
};
use crate::stream::{
    acceptability_audit, collapsed, color_prefix, CubeStream, FnStream, StreamHyperspace,
    Strategy,
};
use crate::FORMAT_VERSION;

pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_INDETERMINATE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hyperspace", version = FORMAT_VERSION, about = "Acceptable colorings of indexed hyperspaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Depth of a set system (`n=<ground>` text file).
    Depth { file: PathBuf },
    /// Transversal number of a set system.
    Tau { file: PathBuf },
    /// Whether a set system is dandy to depth `d`.
    Dandy {
        file: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// The system I(S) of a set tuple (`m=<codomain>` text file).
    Induced { file: PathBuf },
    /// Color a stream prefix; prints the coloring as JSON.
    Color {
        #[command(flatten)]
        stream: StreamArgs,
        #[arg(long = "N", value_parser = parse_len)]
        len: usize,
        /// greedy, cyclic, constant or constant:<c>
        #[arg(long, default_value = "greedy")]
        strategy: String,
    },
    /// Audit a coloring of a stream prefix; prints the report as JSON.
    Audit {
        #[command(flatten)]
        stream: StreamArgs,
        #[arg(long = "N", value_parser = parse_len)]
        len: usize,
        /// Strategy used when no coloring file is given.
        #[arg(long, default_value = "greedy")]
        strategy: String,
        /// Coloring JSON as printed by `color`.
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// A finite S-cube as hyperspace JSON.
    Cube {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Size of every factor.
        #[arg(long, conflicts_with = "sizes", required_unless_present = "sizes")]
        size: Option<usize>,
        /// Comma-separated factor sizes.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
    },
    /// A finite halfcube over strictly increasing tuples from {0..k-1}.
    Halfcube {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long)]
        k: usize,
    },
    /// Search for a morphism from one hyperspace into another.
    Embed {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long, value_enum, default_value = "embed")]
        kind: KindArg,
        /// Fix beta for a parbedding (comma-separated).
        #[arg(long, value_delimiter = ',')]
        beta: Option<Vec<usize>>,
        /// Search-node budget, e.g. 1e7.
        #[arg(long, default_value = "1e7", value_parser = parse_count)]
        budget: u64,
    },
    /// Budget-relative finite cube number of a hyperspace.
    Fcn {
        file: PathBuf,
        /// Largest factor size of the cubes checked.
        #[arg(long)]
        max_factor: usize,
        /// Only consider tuples of nonempty sets.
        #[arg(long)]
        nonempty: bool,
        #[arg(long, default_value = "1e7", value_parser = parse_count)]
        budget: u64,
    },
    /// Greedy spray cover of a prefix of Q^m.
    SprayCover {
        /// Centers as "x,y;x,y;..", coordinates integers or p/q.
        #[arg(long)]
        centers: String,
        #[arg(long = "N", value_parser = parse_count)]
        len: u64,
        /// Write x_num,x_den,y_num,y_den,color rows here.
        #[arg(long)]
        plot: Option<PathBuf>,
        /// Write the full audit report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run the identity suites; exit 1 on a counterexample.
    CheckIdentities {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Embed,
    Weak,
    Parbed,
}

impl From<KindArg> for MorphismKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Embed => MorphismKind::Embedding,
            KindArg::Weak => MorphismKind::Weak,
            KindArg::Parbed => MorphismKind::Parbedding,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StreamKind {
    /// N^2 with E_0 = same first coordinate, E_1 = same second coordinate.
    Plane,
    /// The S-cube over N^m for --tuple.
    Cube,
    /// Spheres around --centers over Q^m.
    Spray,
    /// One class per relation, with a (false) declared bound.
    Collapsed,
}

#[derive(Debug, Args)]
struct StreamArgs {
    #[arg(long, value_enum, default_value = "plane")]
    stream: StreamKind,
    /// Set-tuple file for the cube stream.
    #[arg(long)]
    tuple: Option<PathBuf>,
    #[arg(long)]
    centers: Option<String>,
    /// Relation count of the collapsed stream.
    #[arg(long, default_value_t = 2)]
    relations: usize,
    /// Declared total-intersection bound of the collapsed stream.
    #[arg(long, default_value_t = 1)]
    declared_bound: usize,
}

#[derive(Debug, Args)]
struct TupleArgs {
    /// Set-tuple file.
    #[arg(long, conflicts_with = "n", required_unless_present = "n")]
    tuple: Option<PathBuf>,
    /// Use the standard tuple <{0},..,{n-1}>.
    #[arg(long)]
    n: Option<usize>,
}

impl TupleArgs {
    fn load(&self) -> Result<SetTuple> {
        match (&self.tuple, self.n) {
            (Some(path), _) => parse_set_tuple(&read(path)?),
            (None, Some(n)) => SetTuple::standard(n),
            (None, None) => Err(Error::parse("one of --tuple or --n is required")),
        }
    }
}

fn parse_len(s: &str) -> std::result::Result<usize, String> {
    usize::try_from(parse_count(s)?).map_err(|e| e.to_string())
}

/// Parses a count written as an integer or as `<integer>e<exponent>`.
pub fn parse_count(s: &str) -> std::result::Result<u64, String> {
    let bad = || format!("{s:?} is not a count (expected e.g. 10000 or 1e7)");
    let (mantissa, exponent) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<u32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let mantissa: u64 = mantissa.parse().map_err(|_| bad())?;
    10u64
        .checked_pow(exponent)
        .and_then(|p| mantissa.checked_mul(p))
        .ok_or_else(bad)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::parse(format!("{}: {e}", path.display())))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| Error::parse(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawColoring {
    n: usize,
    colors: Vec<usize>,
}

enum Outcome {
    Done(String),
    Refuted(String),
    Indeterminate(String),
}

fn color_stream<S: StreamHyperspace>(stream: &S, len: usize, strategy: Strategy) -> Result<String> {
    Ok(json(&color_prefix(stream, len, strategy)?))
}

fn audit_stream<S: StreamHyperspace>(
    stream: &S,
    len: usize,
    strategy: Strategy,
    coloring: Option<Coloring>,
) -> Result<String> {
    let coloring = match coloring {
        Some(c) => c,
        None => color_prefix(stream, len, strategy)?,
    };
    Ok(json(&acceptability_audit(stream, &coloring, len)?))
}

enum AnyStream {
    Cube(CubeStream),
    Spray(SprayStream),
    Collapsed(FnStream<(), fn(usize, u64)>),
}

impl StreamArgs {
    fn build(&self) -> Result<AnyStream> {
        match self.stream {
            StreamKind::Plane => Ok(AnyStream::Cube(CubeStream::plane())),
            StreamKind::Cube => {
                let path = self
                    .tuple
                    .as_ref()
                    .ok_or_else(|| Error::parse("--stream cube needs --tuple"))?;
                Ok(AnyStream::Cube(CubeStream::new(parse_set_tuple(&read(path)?)?)?))
            }
            StreamKind::Spray => {
                let centers = self
                    .centers
                    .as_ref()
                    .ok_or_else(|| Error::parse("--stream spray needs --centers"))?;
                let config = SprayConfig::new(parse_centers(centers)?)?;
                Ok(AnyStream::Spray(spray_stream(config)?))
            }
            StreamKind::Collapsed => Ok(AnyStream::Collapsed(collapsed(
                self.relations,
                self.declared_bound,
            )?)),
        }
    }
}

fn search_outcome<T: Serialize>(found: Search<T>) -> Outcome {
    match found {
        Search::Found(w) => Outcome::Done(json(&w)),
        Search::NotFound => Outcome::Done("none".into()),
        Search::Indeterminate => Outcome::Indeterminate("indeterminate".into()),
    }
}

#[derive(Serialize)]
struct SpraySummary {
    #[serde(rename = "N")]
    len: usize,
    centers: Vec<String>,
    color_sizes: Vec<usize>,
    max_count: usize,
    bounds_exact: bool,
    certificate_violations: usize,
    profile_violations: usize,
}

fn execute(command: Command) -> Result<Outcome> {
    let done = |s: String| Ok(Outcome::Done(s));
    match command {
        Command::Depth { file } => done(depth(&parse_set_system(&read(&file)?)?).to_string()),
        Command::Tau { file } => {
            done(transversal_number(&parse_set_system(&read(&file)?)?).to_string())
        }
        Command::Dandy { file, d } => {
            done(dandy_to_depth(&parse_set_system(&read(&file)?)?, d)?.to_string())
        }
        Command::Induced { file } => {
            let system: SetSystem = induced_system(&parse_set_tuple(&read(&file)?)?)?;
            done(system.to_string().trim_end().to_string())
        }
        Command::Color {
            stream,
            len,
            strategy,
        } => {
            let strategy: Strategy = strategy.parse()?;
            done(match stream.build()? {
                AnyStream::Cube(s) => color_stream(&s, len, strategy)?,
                AnyStream::Spray(s) => color_stream(&s, len, strategy)?,
                AnyStream::Collapsed(s) => color_stream(&s, len, strategy)?,
            })
        }
        Command::Audit {
            stream,
            len,
            strategy,
            coloring,
        } => {
            let strategy: Strategy = strategy.parse()?;
            let coloring = match coloring {
                Some(path) => {
                    let raw: RawColoring = read_json(&path)?;
                    Some(Coloring::new(raw.n, raw.colors)?)
                }
                None => None,
            };
            done(match stream.build()? {
                AnyStream::Cube(s) => audit_stream(&s, len, strategy, coloring)?,
                AnyStream::Spray(s) => audit_stream(&s, len, strategy, coloring)?,
                AnyStream::Collapsed(s) => audit_stream(&s, len, strategy, coloring)?,
            })
        }
        Command::Cube { tuple, size, sizes } => {
            let tuple = tuple.load()?;
            let shape = match (size, sizes) {
                (Some(size), _) => CubeShape::over(tuple, size),
                (None, Some(sizes)) => CubeShape::finite(tuple, &sizes)?,
                (None, None) => return Err(Error::parse("one of --size or --sizes is required")),
            };
            done(json(&make_cube(&shape)?.space))
        }
        Command::Halfcube { tuple, k } => done(json(&make_halfcube(&tuple.load()?, k)?.space)),
        Command::Embed {
            from,
            to,
            kind,
            beta,
            budget,
        } => {
            let b: FiniteIndexedHyperspace = read_json(&from)?;
            let a: FiniteIndexedHyperspace = read_json(&to)?;
            let mut budget = NodeBudget::new(budget);
            let found = match (kind, beta) {
                (KindArg::Parbed, Some(beta)) => find_parbedding_with(&b, &a, &beta, &mut budget)?,
                (_, Some(_)) => return Err(Error::parse("--beta only applies to --kind parbed")),
                (kind, None) => find_morphism(kind.into(), &b, &a, &mut budget)?,
            };
            Ok(search_outcome(found))
        }
        Command::Fcn {
            file,
            max_factor,
            nonempty,
            budget,
        } => {
            let a: FiniteIndexedHyperspace = read_json(&file)?;
            let estimate = fcn_estimate(&a, max_factor, nonempty, &mut NodeBudget::new(budget))?;
            let text = json(&estimate);
            Ok(if estimate.value == FcnValue::Indeterminate {
                Outcome::Indeterminate(text)
            } else {
                Outcome::Done(text)
            })
        }
        Command::SprayCover {
            centers,
            len,
            plot,
            report,
        } => {
            let len = usize::try_from(len).map_err(|_| Error::parse("--N is too large"))?;
            let config = SprayConfig::new(parse_centers(&centers)?)?;
            let center_names = config.centers().iter().map(ToString::to_string).collect();
            let n = config.n();
            let cover = cover_with_sprays(config, len)?;
            if let Some(path) = plot {
                let mut bytes = Vec::new();
                write_csv(&cover, &mut bytes).expect("writing to memory");
                write_file(&path, &bytes)?;
            }
            if let Some(path) = report {
                write_file(&path, json(&cover.report).as_bytes())?;
            }
            let mut color_sizes = vec![0; n];
            for &c in cover.coloring.colors() {
                color_sizes[c] += 1;
            }
            done(json(&SpraySummary {
                len,
                centers: center_names,
                color_sizes,
                max_count: cover.report.max_count(),
                bounds_exact: cover.report.bounds_exact,
                certificate_violations: cover.report.certificate_violations(),
                profile_violations: cover.report.profile_violations(),
            }))
        }
        Command::CheckIdentities {
            n_max,
            samples,
            seed,
        } => {
            let results = run_all(&IdentityConfig {
                n_max,
                samples,
                seed,
            })?;
            let lines: Vec<String> = results
                .iter()
                .map(|r| match &r.counterexample {
                    None => format!("PASS {} checked={}", r.name, r.checked),
                    Some(c) => format!("FAIL {} checked={} counterexample: {c}", r.name, r.checked),
                })
                .collect();
            let text = lines.join("\n");
            Ok(if results.iter().all(|r| r.passed()) {
                Outcome::Done(text)
            } else {
                Outcome::Refuted(text)
            })
        }
    }
}

/// Runs the tool with explicit output streams and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_MALFORMED
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let (text, code) = match execute(cli.command) {
        Ok(Outcome::Done(text)) => (text, 0),
        Ok(Outcome::Refuted(text)) => (text, EXIT_REFUTED),
        Ok(Outcome::Indeterminate(text)) => (text, EXIT_INDETERMINATE),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_MALFORMED;
        }
    };
    let _ = writeln!(out, "{text}");
    code
}

pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("hyperspace").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn counts() {
        assert_eq!(parse_count("1e7"), Ok(10_000_000));
        assert_eq!(parse_count("25E2"), Ok(2500));
        assert_eq!(parse_count("42"), Ok(42));
        for bad in ["", "e3", "1e", "1.5e3", "-1", "1e40", "99999999999e9"] {
            assert!(parse_count(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn version_and_usage() {
        let (code, out, _) = run_str(&["--version"]);
        assert_eq!((code, out.trim()), (0, "hyperspace 1"));
        assert_eq!(run_str(&["depth"]).0, EXIT_MALFORMED);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_MALFORMED);
        assert_eq!(run_str(&["check-identities", "--bogus"]).0, EXIT_MALFORMED);
    }

    #[test]
    fn missing_file_is_malformed_input() {
        let (code, _, err) = run_str(&["tau", "/nonexistent/family.txt"]);
        assert_eq!(code, EXIT_MALFORMED);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn stream_commands() {
        let (code, out, _) = run_str(&["color", "--N", "3"]);
        assert_eq!((code, out.trim()), (0, r#"{"n":2,"colors":[0,1,0]}"#));
        let (code, out, _) = run_str(&["audit", "--N", "1", "--stream", "collapsed"]);
        assert_eq!(code, 0);
        assert!(out.starts_with(r#"{"N":1,"#));
        assert_eq!(run_str(&["color", "--N", "3", "--stream", "cube"]).0, EXIT_MALFORMED);
        assert_eq!(run_str(&["color", "--N", "3", "--strategy", "best"]).0, EXIT_MALFORMED);
    }

    #[test]
    fn identities_pass() {
        let (code, out, _) = run_str(&["check-identities", "--n-max", "3", "--samples", "50", "--seed", "7"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 3);
        assert!(out.lines().all(|l| l.starts_with("PASS ")));
    }
}
