//! The `rotint` command line. Every subcommand is a thin adapter over the
//! library; [`execute`] never touches the process state beyond reading and
//! writing the files it is given.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rotint_core::families::{self, Region};
use rotint_core::kneading::{self, Itinerary};
use rotint_core::orders::{pair_forces, sharkovskii_sharper};
use rotint_core::pattern::{self, CyclicPattern, CENSUS_MAX_PERIOD};
use rotint_core::rational::gcd_u64;
use rotint_core::{Error, OverRotationPair, Rational, UnimodalMap};

use crate::formats::{self, FormatError};
use crate::report::{self, q};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_PRECONDITION: i32 = 66;

/// Largest census period without `--force`.
pub const CENSUS_DEFAULT_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    /// JSON record or CSV body, written to stdout.
    pub artifact: String,
    /// Human-readable line, written to stderr.
    pub summary: String,
}

impl CommandResult {
    fn ok(artifact: String, summary: impl Into<String>) -> Self {
        CommandResult { code: EXIT_OK, artifact, summary: summary.into() }
    }

    fn json(v: Value, summary: impl Into<String>) -> Self {
        Self::ok(report::render(&v), summary)
    }

    fn fail(code: i32, summary: impl Into<String>) -> Self {
        CommandResult { code, artifact: String::new(), summary: summary.into() }
    }
}

#[derive(Debug, Parser)]
#[command(name = "rotint", version, about = "Over-rotation numbers, kneading sequences and over-rotation intervals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Lemma {
    #[value(name = "3.1")]
    Repellence,
    #[value(name = "3.2")]
    Steepness,
    #[value(name = "3.7")]
    Dominance,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RegionArg {
    Core,
    Hypotheses,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The over-twist pattern of rotation number p/q.
    Gamma { p: i64, q: i64 },
    /// Over-rotation pair of a cyclic pattern.
    Orp { pattern: PathBuf },
    /// Whether a cyclic pattern is an over-twist, with its code.
    Overtwist { pattern: PathBuf },
    /// Kneading sequences nu_{p/q} and nu'_{p/q}, or nu of a real rotation number.
    Nu {
        p: Option<i64>,
        q: Option<i64>,
        #[arg(long)]
        real: Option<String>,
        #[arg(long, default_value_t = 64)]
        len: usize,
    },
    /// Kneading sequence of a unimodal map.
    Kneading {
        map: PathBuf,
        #[arg(long, default_value_t = 64)]
        len: usize,
    },
    /// Left endpoint of the over-rotation interval from a kneading sequence.
    RhoFromKneading {
        itinerary: String,
        #[arg(long, default_value = "1/1000000")]
        tol: String,
        #[arg(long, default_value_t = kneading::DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Over-rotation interval of a unimodal map.
    Rotint {
        map: PathBuf,
        #[arg(long, default_value = "1/1000000")]
        tol: String,
    },
    /// Over-twists among max-unimodal cyclic patterns, period by period.
    Census {
        #[arg(long, default_value_t = 8)]
        max_period: usize,
        /// Allow periods above the default cap (cost doubles per period).
        #[arg(long)]
        force: bool,
    },
    /// Sharkovskii order of two periods, or forcing between over-rotation pairs.
    Order {
        values: Vec<u64>,
        #[arg(long)]
        pairs: bool,
    },
    /// Checks a sufficient condition for I_f to contain I_g.
    Compare {
        #[arg(long, value_enum)]
        lemma: Lemma,
        f: PathBuf,
        g: PathBuf,
        #[arg(long, default_value_t = 400)]
        grid: usize,
        #[arg(long, value_enum, default_value = "core")]
        region: RegionArg,
    },
    /// Over-rotation intervals along a one-parameter family.
    Sweep {
        family: PathBuf,
        #[arg(long, default_value = "1/1000")]
        tol: String,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Data(String),
    Precondition(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Data(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e.root() {
            Error::Parse(_) | Error::InvalidPattern(_) | Error::InvalidMap(_) => Failure::Data(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

/// Runs one command; `args` excludes the program name.
pub fn execute<I, S>(args: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("rotint")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult::ok(e.to_string(), ""),
                _ => CommandResult::fail(EXIT_USAGE, e.to_string()),
            };
        }
    };
    match run(cli.command) {
        Ok(r) => r,
        Err(Failure::Usage(m)) => CommandResult::fail(EXIT_USAGE, m),
        Err(Failure::Data(m)) => CommandResult::fail(EXIT_DATA, m),
        Err(Failure::Precondition(m)) => CommandResult::fail(EXIT_PRECONDITION, m),
    }
}

fn parse_rational(s: &str, what: &str) -> Result<Rational, Failure> {
    s.parse().map_err(|_| Failure::Usage(format!("{what}: not a rational: {s:?}")))
}

fn load_pattern(path: &Path) -> Result<CyclicPattern, Failure> {
    let images = formats::parse_pattern(&formats::read_file(path)?)?;
    Ok(CyclicPattern::new(&images)?)
}

fn load_map(path: &Path) -> Result<UnimodalMap, Failure> {
    Ok(formats::parse_map(&formats::read_file(path)?)?)
}

fn run(cmd: Command) -> Result<CommandResult, Failure> {
    Ok(match cmd {
        Command::Gamma { p, q: d } => {
            let g = pattern::gamma(p, d)?;
            let orp = pattern::over_rotation_pair(&g)?;
            let v = json!({
                "pattern": g.one_based(),
                "orp": [orp.crossings(), orp.period()],
                "overtwist": pattern::is_overtwist(&g),
            });
            CommandResult::json(v, format!("gamma {p}/{d}"))
        }
        Command::Orp { pattern: path } => {
            let p = load_pattern(&path)?;
            let orp = pattern::over_rotation_pair(&p)?;
            let v = json!({"orp": [orp.crossings(), orp.period()], "rho": q(&orp.rho())});
            CommandResult::json(v, format!("over-rotation number {}", orp.rho()))
        }
        Command::Overtwist { pattern: path } => {
            let p = load_pattern(&path)?;
            let shape = pattern::classify_shape(&p);
            let code = if shape.convergent { pattern::code_of(&p).ok() } else { None };
            let v = json!({
                "overtwist": pattern::is_overtwist(&p),
                "convergent": shape.convergent,
                "max_unimodal": shape.max_unimodal,
                "code": code.as_ref().map(|c| c.values.iter().map(q).collect::<Vec<_>>()),
                "code_well_defined": code.as_ref().map(|c| c.well_defined),
                "code_monotone": code.as_ref().map(|c| c.monotone),
            });
            CommandResult::json(v, "over-twist check")
        }
        Command::Nu { p, q: d, real, len } => match (p, d, real) {
            (Some(p), Some(d), None) => {
                let (nu, nu_p) = (kneading::nu_rho(p, d)?, kneading::nu_prime(p, d)?);
                let v = json!({"rho": q(&Rational::new(p, d)), "nu": nu.to_string(), "nu_prime": nu_p.to_string()});
                CommandResult::json(v, format!("nu_{p}/{d} = {nu}"))
            }
            (None, None, Some(x)) => {
                let x = parse_rational(&x, "--real")?;
                let nu = kneading::nu_real(&x, len)?;
                CommandResult::json(json!({"rho": q(&x), "nu": nu.to_string()}), format!("nu = {nu}"))
            }
            _ => return Err(Failure::Usage("use `nu p q` or `nu --real x --len n`".into())),
        },
        Command::Kneading { map, len } => {
            let m = load_map(&map)?;
            let k = m.kneading(len);
            CommandResult::json(json!({"kneading": k.to_string(), "length": len, "exact": m.is_exact()}), k.to_string())
        }
        Command::RhoFromKneading { itinerary, tol, depth } => {
            let k: Itinerary = itinerary.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let tol = parse_rational(&tol, "--tol")?;
            let r = kneading::rho_from_kneading(&k, &tol, depth)?;
            CommandResult::json(report::rho(&r), format!("rho in [{}, {}]", r.lo(), r.hi()))
        }
        Command::Rotint { map, tol } => {
            let tol = parse_rational(&tol, "--tol")?;
            let m = load_map(&map)?;
            let iv = m.over_rotation_interval(&tol)?;
            let summary = match iv.left() {
                None => "trivial dynamics".to_string(),
                Some(l) if l.is_exact() => format!("I_f = [{}, 1/2]", l.lo()),
                Some(l) => format!("I_f = [rho, 1/2] with rho in [{}, {}]", l.lo(), l.hi()),
            };
            CommandResult::json(report::interval(&iv), summary)
        }
        Command::Census { max_period, force } => {
            if max_period > CENSUS_DEFAULT_CAP && !force {
                return Err(Failure::Usage(format!("periods above {CENSUS_DEFAULT_CAP} need --force")));
            }
            if !(2..=CENSUS_MAX_PERIOD).contains(&max_period) {
                return Err(Failure::Precondition(Error::CensusBound { n: max_period }.to_string()));
            }
            let mut rows = Vec::new();
            let mut all = true;
            for n in 2..=max_period {
                let c = census(n)?;
                all &= c.matches;
                rows.push(json!({
                    "period": n,
                    "patterns": c.total,
                    "overtwists": c.overtwists.iter().map(|p| p.one_based()).collect::<Vec<_>>(),
                    "matches_gamma": c.matches,
                }));
            }
            CommandResult::json(json!({"periods": rows, "all_match": all}), format!("census up to period {max_period}"))
        }
        Command::Order { values, pairs } => {
            if pairs {
                let [p, d, k, l] = values[..] else {
                    return Err(Failure::Usage("--pairs takes four numbers: p q k l".into()));
                };
                let (a, b) = (OverRotationPair::new(p, d)?, OverRotationPair::new(k, l)?);
                CommandResult::json(json!({"forces": pair_forces(&a, &b)}), format!("({p},{d}) vs ({k},{l})"))
            } else {
                let [m, n] = values[..] else {
                    return Err(Failure::Usage("order takes two periods".into()));
                };
                if m == 0 || n == 0 {
                    return Err(Failure::Usage("periods are positive".into()));
                }
                CommandResult::json(json!({"sharper": sharkovskii_sharper(m, n)}), format!("{m} vs {n}"))
            }
        }
        Command::Compare { lemma, f, g, grid, region } => {
            let (f, g) = (load_map(&f)?, load_map(&g)?);
            let v = match lemma {
                Lemma::Steepness => families::compare_lemma32(&f, &g, grid)?,
                Lemma::Dominance => families::dominance_check(&f, &g, grid),
                Lemma::Repellence => {
                    let region = match region {
                        RegionArg::Core => Region::Core,
                        RegionArg::Hypotheses => Region::Hypotheses,
                    };
                    families::repellence_check(&f, &g, &region, grid)?
                }
            };
            let summary = if v.holds { "criterion holds" } else { "criterion fails" };
            CommandResult::json(report::verdict(&v), summary)
        }
        Command::Sweep { family, tol, csv } => {
            let tol = parse_rational(&tol, "--tol")?;
            let text = formats::read_file(&family)?;
            let dir = family.parent().map(Path::to_path_buf).unwrap_or_default();
            let spec = formats::parse_family(&text, &dir)?;
            let rep = families::sweep(&spec, &tol);
            let body = report::sweep_csv(&rep).map_err(|e| Failure::Data(e.to_string()))?;
            let summary = format!("{} rows, monotone = {}", rep.rows.len(), rep.monotone);
            match csv {
                Some(out) => {
                    std::fs::write(&out, body).map_err(|e| Failure::Data(format!("{}: {e}", out.display())))?;
                    CommandResult::json(report::sweep_summary(&rep), summary)
                }
                None => CommandResult::ok(body, summary),
            }
        }
    })
}

/// Over-twists among the max-unimodal cyclic patterns of period `n`,
/// compared with the patterns `gamma_{p/n}`.
pub struct CensusRow {
    pub total: usize,
    pub overtwists: Vec<CyclicPattern>,
    pub expected: Vec<CyclicPattern>,
    pub matches: bool,
}

pub fn census(n: usize) -> Result<CensusRow, Error> {
    let all = pattern::enumerate_unimodal_patterns(n)?;
    let overtwists: Vec<CyclicPattern> = all.iter().filter(|p| pattern::is_overtwist(p)).cloned().collect();
    let mut expected: Vec<CyclicPattern> = (1..=n as i64 / 2)
        .filter(|&p| gcd_u64(p as u64, n as u64) == 1)
        .map(|p| pattern::gamma(p, n as i64))
        .collect::<Result<_, _>>()?;
    expected.sort();
    let matches = overtwists == expected;
    Ok(CensusRow { total: all.len(), overtwists, expected, matches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors() {
        assert_eq!(execute(["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(execute(["order", "3"]).code, EXIT_USAGE);
        assert_eq!(execute(["census", "--max-period", "11"]).code, EXIT_USAGE);
        assert_eq!(execute(["--help"]).code, EXIT_OK);
    }

    #[test]
    fn precondition_errors_carry_messages() {
        let r = execute(["gamma", "3", "5"]);
        assert_eq!(r.code, EXIT_PRECONDITION);
        assert!(r.summary.contains("coprime"));
    }

    #[test]
    fn census_small() {
        let r = census(5).unwrap();
        assert!(r.matches);
        assert_eq!(r.overtwists.len(), 2);
    }
}
