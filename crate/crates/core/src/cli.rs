//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain error or failed verification (with a JSON
//! error object on stderr), 2 usage error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::characterize::{self, ClassSpec};
use crate::classify;
use crate::counting::{self, CnFamily, CountFn};
use crate::error::{Error, Result};
use crate::generators::{self, Seed};
use crate::graph::{self, Graph};
use crate::profile::{self, EnumerationOptions, Profile, DEFAULT_ENUMERATION_CAP};
use crate::vertex_set::VertexSet;

#[derive(Parser, Debug)]
#[command(name = "centerset", version, about = "S-centers, center sets and center numbers of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Args, Debug)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Display vertices 1-based (input stays 0-based).
    #[arg(long)]
    pub one_based: bool,
}

#[derive(Args, Debug)]
pub struct Cap {
    /// Raise the enumeration cap above the default of 16 vertices.
    #[arg(long, value_name = "N")]
    pub max_n: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// S-center of a profile, or the classical center when no profile is given.
    Center {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated 0-indexed vertices, e.g. "0,3,5".
        #[arg(long)]
        profile: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// All center sets of a graph.
    Enumerate {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        cap: Cap,
        #[command(flatten)]
        out: Output,
    },
    /// Structural flags as a flat JSON object.
    Classify {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Compare a class characterization against enumeration.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(ClassSpec::TAGS))]
        class: String,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        cap: Cap,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate a counting function or a center-number formula.
    Count {
        #[arg(long = "fn", value_name = "L|L1|L2|R|R1", conflicts_with = "cn", required_unless_present = "cn")]
        function: Option<String>,
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(CnFamily::TAGS))]
        cn: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: usize,
        /// Omit to get the whole row 0..=n.
        #[arg(long, conflicts_with = "cn")]
        k: Option<i64>,
        /// Also evaluate the exhaustive oracle and fail on disagreement.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Emit a generated graph in edge-list format.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        /// Edge probability for random-connected, as "num/den".
        #[arg(long, default_value = "1/2")]
        p: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Wheel,
    KnMinusE,
    /// `--n` is the dimension.
    Hypercube,
    RandomTree,
    /// `--n` blocks of at most `--m` vertices.
    RandomBlock,
    RandomConnected,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let obj = json!({ "error": e.kind(), "message": e.to_string() });
            let _ = writeln!(stderr, "{obj}");
            1
        }
    }
}

fn load(path: &PathBuf) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    graph::parse_edge_list(&text)
}

fn parse_vertex_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| Error::Parse { line: 0, msg: format!("vertex {t:?}: {e}") }))
        .collect()
}

fn options(cap: &Cap, stderr: &mut dyn Write) -> EnumerationOptions {
    match cap.max_n {
        Some(n) => {
            if n > DEFAULT_ENUMERATION_CAP {
                let _ = writeln!(
                    stderr,
                    "warning: enumeration cap raised to {n} vertices (2^n profiles)"
                );
            }
            EnumerationOptions::with_cap(n)
        }
        None => EnumerationOptions::default(),
    }
}

fn shift(s: VertexSet, one_based: bool) -> Vec<usize> {
    s.iter().map(|v| v + one_based as usize).collect()
}

fn emit(stdout: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string(value).expect("plain data serializes");
    writeln!(stdout, "{text}").map_err(|e| Error::Io(e.to_string()))
}

fn text(stdout: &mut dyn Write, s: impl AsRef<str>) -> Result<()> {
    writeln!(stdout, "{}", s.as_ref()).map_err(|e| Error::Io(e.to_string()))
}

fn fmt_set(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Center { graph, profile, out } => {
            let g = load(&graph)?;
            let center = match profile {
                Some(p) => profile::s_center(&g, Profile::from_vertices(&g, &parse_vertex_list(&p)?)?),
                None => g.center(),
            };
            let shown = shift(center, out.one_based);
            match out.format {
                Format::Json => emit(stdout, &shown)?,
                Format::Text => text(stdout, fmt_set(&shown))?,
            }
        }
        Command::Enumerate { graph, cap, out } => {
            let g = load(&graph)?;
            let family = profile::enumerate_center_sets(&g, options(&cap, stderr))?;
            let sets: Vec<Vec<usize>> = family.sets().iter().map(|&s| shift(s, out.one_based)).collect();
            match out.format {
                Format::Json => emit(stdout, &sets)?,
                Format::Text => {
                    for s in &sets {
                        text(stdout, fmt_set(s))?;
                    }
                    text(stdout, format!("count: {}", family.count()))?;
                }
            }
        }
        Command::Classify { graph, out } => {
            let c = classify::classify(&load(&graph)?);
            match out.format {
                Format::Json => emit(stdout, &c)?,
                Format::Text => {
                    let Value::Object(map) = serde_json::to_value(c).unwrap() else { unreachable!() };
                    for (k, v) in map {
                        text(stdout, format!("{k}: {v}"))?;
                    }
                }
            }
        }
        Command::Verify { class, graph, m, n, cap, out } => {
            let spec = ClassSpec::from_tag(&class, m, n)?;
            let g = match graph {
                Some(path) => load(&path)?,
                None => spec.canonical_graph()?,
            };
            let report = characterize::verify_class(&g, spec, options(&cap, stderr))?;
            match out.format {
                Format::Json => {
                    let mut v = serde_json::to_value(&report).unwrap();
                    for key in ["missing", "unexpected"] {
                        let sets: Vec<Vec<usize>> = report_sets(&report, key)
                            .iter()
                            .map(|&s| shift(s, out.one_based))
                            .collect();
                        v[key] = json!(sets);
                    }
                    emit(stdout, &v)?
                }
                Format::Text => {
                    text(
                        stdout,
                        format!(
                            "{} on {} vertices: predicted {}, enumerated {}: {}",
                            report.class,
                            report.n,
                            report.predicted_count,
                            report.enumerated_count,
                            if report.pass { "PASS" } else { "FAIL" }
                        ),
                    )?;
                    for &s in &report.missing {
                        text(stdout, format!("missing {}", fmt_set(&shift(s, out.one_based))))?;
                    }
                    for &s in &report.unexpected {
                        text(stdout, format!("unexpected {}", fmt_set(&shift(s, out.one_based))))?;
                    }
                }
            }
            return Ok(if report.pass { 0 } else { 1 });
        }
        Command::Count { function, cn, m, n, k, oracle, out } => {
            if let Some(tag) = cn {
                let family = CnFamily::from_tag(&tag, m, n)?;
                let value = counting::cn_formula(family)?;
                match out.format {
                    Format::Json => emit(stdout, &json!({ "cn": tag, "m": m, "n": n, "value": value }))?,
                    Format::Text => text(stdout, value.to_string())?,
                }
                return Ok(0);
            }
            let label: CountFn = function.expect("clap enforces --fn or --cn").parse()?;
            let n = n as i64;
            let ks: Vec<i64> = match k {
                Some(k) => vec![k],
                None => (0..=n).collect(),
            };
            let mut rows = Vec::new();
            let mut agree = true;
            for k in ks {
                let value = label.eval(n, k)?;
                let oracle_value = if oracle { Some(counting::oracle_count(label, n, k)?) } else { None };
                agree &= oracle_value.is_none_or(|o| o == value);
                rows.push(json!({ "fn": label.to_string(), "n": n, "k": k, "value": value, "oracle": oracle_value }));
            }
            match out.format {
                Format::Json if rows.len() == 1 => emit(stdout, &rows[0])?,
                Format::Json => emit(stdout, &rows)?,
                Format::Text => {
                    text(stdout, if oracle { "fn\tn\tk\tvalue\toracle" } else { "fn\tn\tk\tvalue" })?;
                    for r in &rows {
                        let mut line = format!("{}\t{}\t{}\t{}", r["fn"].as_str().unwrap(), r["n"], r["k"], r["value"]);
                        if oracle {
                            line.push_str(&format!("\t{}", r["oracle"]));
                        }
                        text(stdout, line)?;
                    }
                }
            }
            if !agree {
                let obj = json!({ "error": "OracleMismatch", "message": format!("{label} disagrees with the oracle") });
                let _ = writeln!(stderr, "{obj}");
                return Ok(1);
            }
        }
        Command::Gen { family, n, m, p, seed, out } => {
            let g = generate(family, n, m, &p, Seed(seed))?;
            let body = graph::to_edge_list(&g);
            match out {
                Some(path) => fs::write(&path, body)
                    .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))?,
                None => write!(stdout, "{body}").map_err(|e| Error::Io(e.to_string()))?,
            }
        }
    }
    Ok(0)
}

fn report_sets<'a>(report: &'a characterize::VerificationReport, key: &str) -> &'a [VertexSet] {
    if key == "missing" {
        &report.missing
    } else {
        &report.unexpected
    }
}

fn generate(family: GenFamily, n: usize, m: Option<usize>, p: &str, seed: Seed) -> Result<Graph> {
    let need_m = || m.ok_or_else(|| Error::BadParams("this family needs --m".into()));
    match family {
        GenFamily::Path => generators::path(n),
        GenFamily::Cycle => generators::cycle(n),
        GenFamily::Complete => generators::complete(n),
        GenFamily::CompleteBipartite => generators::complete_bipartite(need_m()?, n),
        GenFamily::Star => generators::star(n),
        GenFamily::Wheel => generators::wheel(n),
        GenFamily::KnMinusE => generators::kn_minus_e(n),
        GenFamily::Hypercube => generators::hypercube(n),
        GenFamily::RandomTree => generators::random_tree(n, seed),
        GenFamily::RandomBlock => generators::random_block_graph(n, need_m()?, seed),
        GenFamily::RandomConnected => {
            let (num, den) = p
                .split_once('/')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| Error::BadParams(format!("probability {p:?} is not num/den")))?;
            generators::random_connected(n, num, den, seed)
        }
    }
}
