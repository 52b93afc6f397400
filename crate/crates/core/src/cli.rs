//! Command-line driver.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 usage or parse error,
//! 3 search cap exceeded.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::crosscut::{c_poset, d_poset, gamma, u_poset, CrosscutPoset};
use crate::dot::{crosscut_dot, poset_dot, DotOptions};
use crate::error::Error;
use crate::fpp::{dismantle, has_fpp_with, is_crown, pipeline_fpp};
use crate::gallery::{fixture, FixtureSpec, FIXTURE_NAMES};
use crate::morphism::{induced_c, induced_d, induced_u, InducedMap};
use crate::poset::Poset;
use crate::random::random_poset;
use crate::search::SearchConfig;
use crate::set::ElementSet;
use crate::text::{
    emit_crosscut, emit_map, emit_poset, format_trace, format_verdict, parse_map, parse_poset,
};
use crate::theorems::{run_all, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "crosscut",
    version,
    about = "Crosscut posets and the fixed point property"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a poset and print basic statistics.
    Show { input: Option<PathBuf> },
    /// Graphviz output of a poset or one of its crosscut posets.
    Dot {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Which::Poset)]
        which: Which,
    },
    /// The crosscut poset generated by a cutset.
    Gamma {
        input: Option<PathBuf>,
        /// Element labels, comma or space separated.
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        cutset: Vec<String>,
        #[arg(long)]
        dot: bool,
    },
    /// The down-side crosscut poset.
    Dpose {
        input: Option<PathBuf>,
        #[arg(long)]
        dot: bool,
    },
    /// The up-side crosscut poset.
    Upose {
        input: Option<PathBuf>,
        #[arg(long)]
        dot: bool,
    },
    /// The combined crosscut poset.
    Cpose {
        input: Option<PathBuf>,
        #[arg(long)]
        dot: bool,
    },
    /// Decide the fixed point property.
    Fpp {
        input: Option<PathBuf>,
        /// Try the crosscut reduction before the direct search.
        #[arg(long)]
        pipeline: bool,
    },
    /// Greedy dismantling by irreducible points.
    Dismantle { input: Option<PathBuf> },
    /// The map induced on a crosscut poset by an order-preserving self-map.
    Induced {
        input: Option<PathBuf>,
        #[arg(long)]
        map: PathBuf,
        #[arg(long, value_enum, default_value_t = Side3::D)]
        which: Side3,
    },
    /// Validate a self-map and report its fixed points.
    Check {
        input: Option<PathBuf>,
        #[arg(long)]
        map: PathBuf,
    },
    /// Print a named poset.
    Fixture { name: String, params: Vec<usize> },
    /// Run every property suite on random posets.
    CheckTheorems {
        #[arg(long, default_value_t = 200)]
        seeds: u64,
        #[arg(long, default_value_t = 9)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a random poset.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Poset,
    D,
    U,
    C,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side3 {
    D,
    U,
    C,
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let cfg = SearchConfig::from_env();
    match dispatch(cli.command, &cfg, stdin, stdout) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::CapExceeded { .. } => EXIT_CAP,
                _ => EXIT_USAGE,
            }
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn read_input(input: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, Failure> {
    match input {
        Some(path) if path.as_os_str() != "-" => {
            fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        _ => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn load(input: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<Poset, Failure> {
    Ok(parse_poset(&read_input(input, stdin)?)?)
}

fn write_crosscut(out: &mut dyn Write, c: &CrosscutPoset, dot: bool, name: &str) -> Outcome {
    if dot {
        out.write_all(crosscut_dot(c, &named(name)).as_bytes())?;
    } else {
        out.write_all(emit_crosscut(c).as_bytes())?;
    }
    Ok(EXIT_OK)
}

fn dispatch(cmd: Command, cfg: &SearchConfig, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Show { input } => show(&load(&input, stdin)?, out),
        Command::Dot { input, which } => {
            let p = load(&input, stdin)?;
            let text = match which {
                Which::Poset => poset_dot(&p, &DotOptions::default()),
                Which::D => crosscut_dot(&d_poset(&p)?, &named("D")),
                Which::U => crosscut_dot(&u_poset(&p)?, &named("U")),
                Which::C => crosscut_dot(&c_poset(&p)?, &named("C")),
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Gamma { input, cutset, dot } => {
            let p = load(&input, stdin)?;
            let mut x = ElementSet::EMPTY;
            for label in cutset.iter().flat_map(|s| s.split_whitespace()) {
                let e = p
                    .find(label)
                    .ok_or_else(|| Error::BadParams(format!("unknown element {label:?}")))?;
                x.insert(e);
            }
            if !p.is_cutset(x)? {
                writeln!(out, "# warning: not a cutset")?;
            }
            write_crosscut(out, &gamma(&p, x)?, dot, "Gamma")
        }
        Command::Dpose { input, dot } => write_crosscut(out, &d_poset(&load(&input, stdin)?)?, dot, "D"),
        Command::Upose { input, dot } => write_crosscut(out, &u_poset(&load(&input, stdin)?)?, dot, "U"),
        Command::Cpose { input, dot } => write_crosscut(out, &c_poset(&load(&input, stdin)?)?, dot, "C"),
        Command::Fpp { input, pipeline } => {
            let p = load(&input, stdin)?;
            let verdict = if pipeline {
                pipeline_fpp(&p, cfg)?
            } else {
                has_fpp_with(&p, cfg)?
            };
            out.write_all(format_verdict(&verdict).as_bytes())?;
            Ok(if verdict.has_fpp { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Dismantle { input } => {
            let p = load(&input, stdin)?;
            let trace = dismantle(&p);
            out.write_all(format_trace(&p, &trace).as_bytes())?;
            Ok(if trace.is_dismantlable() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Induced { input, map, which } => {
            let p = load(&input, stdin)?;
            let f = parse_map(&p, &p, &read_input(&Some(map), stdin)?)?;
            let induced: InducedMap = match which {
                Side3::D => induced_d(&f)?,
                Side3::U => induced_u(&f)?,
                Side3::C => induced_c(&f)?,
            };
            out.write_all(emit_map(&induced.map).as_bytes())?;
            let fixed: Vec<String> = induced
                .fixed_nodes()?
                .iter()
                .map(|&(s, side)| format!("{side}{}", crate::crosscut::subset_label(&p, s)))
                .collect();
            writeln!(out, "fixed nodes: {}", fixed.join(" "))?;
            Ok(EXIT_OK)
        }
        Command::Check { input, map } => {
            let p = load(&input, stdin)?;
            let f = parse_map(&p, &p, &read_input(&Some(map), stdin)?)?;
            let fixed = f.fixed_points()?;
            let labels: Vec<&str> = fixed.iter().map(|x| p.label(x)).collect();
            writeln!(out, "order-preserving: true")?;
            writeln!(out, "fixed points: {}", labels.join(" "))?;
            Ok(if fixed.is_empty() { EXIT_NEGATIVE } else { EXIT_OK })
        }
        Command::Fixture { name, params } => {
            let spec = FixtureSpec::parse(&name, &params).map_err(|e| match e {
                Error::BadParams(msg) => {
                    Error::BadParams(format!("{msg} (fixtures: {})", FIXTURE_NAMES.join(", ")))
                }
                other => other,
            })?;
            out.write_all(emit_poset(&fixture(spec)?).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::CheckTheorems {
            seeds,
            max_size,
            seed,
        } => {
            let reports = run_all(&SuiteConfig {
                seeds,
                max_size,
                base_seed: seed,
                ..SuiteConfig::default()
            })?;
            let mut ok = true;
            for r in &reports {
                writeln!(out, "{r}")?;
                for failure in r.failures.iter().take(5) {
                    writeln!(out, "    {failure}")?;
                }
                ok &= r.passed();
            }
            writeln!(
                out,
                "{}",
                if ok {
                    "all suites pass"
                } else {
                    "some suites FAILED"
                }
            )?;
            Ok(if ok { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Random { n, density, seed } => {
            out.write_all(emit_poset(&random_poset(n, density, seed)?).as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn named(name: &str) -> DotOptions {
    DotOptions {
        graph_name: name.into(),
        ..DotOptions::default()
    }
}

fn show(p: &Poset, out: &mut dyn Write) -> Outcome {
    let labels = |s: ElementSet| s.iter().map(|x| p.label(x)).collect::<Vec<_>>().join(" ");
    let height = p.heights().into_iter().max().unwrap_or(0);
    writeln!(out, "elements: {}", p.len())?;
    writeln!(out, "covers: {}", p.covers().len())?;
    writeln!(out, "height: {height}")?;
    writeln!(out, "maximal: {}", labels(p.maximal_elements()))?;
    writeln!(out, "minimal: {}", labels(p.minimal_elements()))?;
    writeln!(out, "components: {}", p.connected_components(p.all()).len())?;
    writeln!(out, "dismantlable: {}", dismantle(p).is_dismantlable())?;
    match is_crown(p) {
        Some(n) => writeln!(out, "crown: {}", 2 * n)?,
        None => writeln!(out, "crown: no")?,
    }
    Ok(EXIT_OK)
}
