//! The `empire` command: generation, verification, colouring, bounds and
//! surface computations over JSON files.
//!
//! Exit status is 0 on success, 1 when the computation fails or a
//! verification does not pass, and 2 for usage errors.

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use empire_core::bounds::{self, known_value, markdown_table};
use empire_core::colouring::{six_m_colouring, ChromaticSolver, Colouring, DEFAULT_SOLVER_CAP};
use empire_core::empire::{builtin_j14_2_with_warnings, verify_jnm, verify_uniform_jnm, EmpireGraph};
use empire_core::graph::hamiltonian_decomposition;
use empire_core::io;
use empire_core::topology::{min_genus_lower_bound, RotationSystem, Surface, SurfaceWord};
use empire_core::wessel::wessel_graph;
use empire_core::{Error, Graph};

/// Environment variable overriding the exact solver's vertex cap.
pub const SOLVER_CAP_VAR: &str = "EMPIRE_SOLVER_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "empire",
    version,
    about = "Colouring, bounds and constructions for empire maps"
)]
struct Cli {
    /// Report failures as a JSON object on stdout.
    #[arg(long, global = true)]
    error_json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Dot,
}

#[derive(Debug, Args)]
struct Input {
    /// JSON input file; `-` or absent reads standard input.
    #[arg(long, short)]
    input: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Known value or interval for the chromatic empire number.
    Bound {
        #[arg(long, required_unless_present = "table")]
        genus: Option<u64>,
        #[arg(long, required_unless_present = "table")]
        empires: Option<u64>,
        /// All genera up to GMAX and empire sizes up to MMAX.
        #[arg(long, num_args = 2, value_names = ["GMAX", "MMAX"], conflicts_with_all = ["genus", "empires"])]
        table: Option<Vec<u64>>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Slack 2E - 3C, either of given counts or of the uniform graph.
    Slack {
        #[arg(long, requires = "empires", conflicts_with_all = ["edges", "countries"])]
        genus: Option<i64>,
        #[arg(long, requires = "genus")]
        empires: Option<i64>,
        #[arg(long, requires = "countries")]
        edges: Option<i64>,
        #[arg(long, requires = "edges")]
        countries: Option<i64>,
    },
    /// Planar complete m-pire graph on 6m empires with its embedding.
    Wessel {
        #[arg(long)]
        empires: usize,
        /// Keep the construction's separate components.
        #[arg(long)]
        no_connectify: bool,
        /// Graphviz output with empires coloured.
        #[arg(long)]
        dot: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Check the complete empire graph conditions.
    Verify {
        #[arg(long, num_args = 2, value_names = ["N", "M"], required = true)]
        jnm: Vec<usize>,
        /// Also require exactly M countries per empire and one edge per pair.
        #[arg(long)]
        uniform: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Identify the countries of each empire.
    Collapse {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Exact chromatic number of an empire graph or graph.
    Colour {
        #[command(flatten)]
        input: Input,
        /// Print the colouring, not just the count.
        #[arg(long)]
        witness: bool,
        /// Use the peeling colouring for m-pire graphs of the sphere.
        #[arg(long, value_name = "M")]
        six_m: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Genus of an embedding, or the Euler lower bound for a graph.
    Genus {
        #[command(flatten)]
        input: Input,
        /// Read a graph and give the least genus not ruled out by 3C <= 2E.
        #[arg(long)]
        lower_bound: bool,
    },
    /// Dual graph of an embedding.
    Dual {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Genus of a surface word, or one rewrite step.
    Word {
        /// Word such as "A B A' B'".
        #[arg(long, value_name = "WORD", conflicts_with = "rewrite")]
        genus: Option<String>,
        /// Rule 1 moves a block right to left past X', rule 2 left to right.
        #[arg(long, value_parser = ["1", "2", "right-to-left", "left-to-right"], requires_all = ["label", "split", "word"])]
        rewrite: Option<String>,
        #[arg(long)]
        label: Option<String>,
        /// Index where the moved block (rule 2) or the block it passes (rule 1) starts.
        #[arg(long)]
        split: Option<usize>,
        word: Option<String>,
    },
    /// Hamiltonian path decomposition of K_2n.
    Decompose {
        #[arg(long)]
        n: usize,
    },
    /// Built-in data sets.
    Builtin {
        #[arg(value_parser = ["j14-2"])]
        name: String,
        /// Print how the printed table was repaired to standard error.
        #[arg(long)]
        warnings: bool,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
    solver: ChromaticSolver,
}

enum Failure {
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::UnknownVertex(_) => "unknown-vertex",
        Error::EmptyGraph => "empty-graph",
        Error::EmptyPart => "empty-part",
        Error::NotConnected => "not-connected",
        Error::NotSimple => "not-simple",
        Error::InvalidPath(_) => "invalid-path",
        Error::PathsNotDisjoint(_) => "paths-not-disjoint",
        Error::NonOrientableWord => "non-orientable-word",
        Error::MalformedWord(_) => "malformed-word",
        Error::InvalidRewrite(_) => "invalid-rewrite",
        Error::InvalidRotation(_) => "invalid-rotation",
        Error::InconsistentFaces(_) => "inconsistent-faces",
        Error::InvalidEmpires(_) => "invalid-empires",
        Error::TooLarge { .. } => "too-large",
        Error::DegreePrecondition { .. } => "degree-precondition",
        Error::NotMPire { .. } => "not-m-pire",
        Error::PositiveEulerCharacteristic(_) => "positive-euler-characteristic",
        Error::InvalidArgument(_) => "invalid-argument",
        Error::Parse(_) => "parse",
    }
}

/// Runs the command line `args` (program name first). `solver_cap` is the
/// raw value of [`SOLVER_CAP_VAR`], if set.
pub fn run<I, T>(
    args: I,
    solver_cap: Option<&str>,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let cap = match solver_cap.map(str::parse::<usize>) {
        None => DEFAULT_SOLVER_CAP,
        Some(Ok(c)) => c,
        Some(Err(_)) => {
            let _ = writeln!(stderr, "error: {SOLVER_CAP_VAR} must be a non-negative integer");
            return 2;
        }
    };
    let error_json = cli.error_json;
    let mut io = Io {
        stdin,
        stdout,
        stderr,
        solver: ChromaticSolver::new(cap),
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(failure) => {
            let (kind, message) = match &failure {
                Failure::Domain(e) => (error_kind(e), e.to_string()),
                Failure::Io(m) => ("io", m.clone()),
            };
            if error_json {
                let _ = writeln!(io.stdout, "{}", json!({"error": message, "kind": kind}));
            } else {
                let _ = writeln!(io.stderr, "error: {message}");
            }
            1
        }
    }
}

fn read_json(io: &mut Io, input: &Input) -> std::result::Result<Value, Failure> {
    let text = match input.input.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            io.stdin.read_to_string(&mut s)?;
            s
        }
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?,
    };
    serde_json::from_str(&text).map_err(|e| Failure::Domain(Error::Parse(e.to_string())))
}

fn emit(io: &mut Io, v: &Value) -> std::result::Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).expect("values serialize");
    writeln!(io.stdout, "{text}")?;
    Ok(())
}

fn emit_text(io: &mut Io, s: &str) -> std::result::Result<(), Failure> {
    io.stdout.write_all(s.as_bytes())?;
    if !s.ends_with('\n') {
        io.stdout.write_all(b"\n")?;
    }
    Ok(())
}

/// Wrapper, empire graph, or plain graph with one empire per vertex.
fn empire_graph_from(v: &Value) -> Result<EmpireGraph, Error> {
    if v.get("empire_graph").is_some() {
        Ok(io::embedded_from_json(v)?.empire_graph)
    } else if v.get("empires").is_some() {
        io::empire_graph_from_json(v)
    } else {
        Ok(EmpireGraph::singletons(io::graph_from_json(v)?))
    }
}

/// Wrapper or rotation system.
fn rotation_from(v: &Value) -> Result<RotationSystem, Error> {
    if v.get("rotation_system").is_some() {
        Ok(io::embedded_from_json(v)?.rotation)
    } else {
        io::rotation_from_json(v)
    }
}

fn plain_graph_from(v: &Value) -> Result<Graph, Error> {
    if v.get("rotation").is_some() {
        Ok(io::rotation_from_json(v)?.into_graph())
    } else {
        Ok(empire_graph_from(v)?.graph().clone())
    }
}

fn dispatch(command: Command, io: &mut Io) -> Outcome {
    match command {
        Command::Bound {
            genus,
            empires,
            table,
            format,
        } => {
            if let Some(t) = table {
                let (gmax, mmax) = (t[0], t[1]);
                if format == Some(Format::Json) {
                    let mut rows = Vec::new();
                    for g in 0..=gmax {
                        for m in 1..=mmax {
                            let mut r = serde_json::to_value(known_value(g, m)?).expect("serializes");
                            r["genus"] = json!(g);
                            r["empires"] = json!(m);
                            rows.push(r);
                        }
                    }
                    emit(io, &Value::Array(rows))?;
                } else {
                    emit_text(io, &markdown_table(gmax, mmax)?)?;
                }
            } else {
                let (g, m) = (
                    genus.expect("clap requires genus"),
                    empires.expect("clap requires empires"),
                );
                let r = known_value(g, m)?;
                if format == Some(Format::Markdown) {
                    let cell = match r.lower {
                        Some(lo) if lo == r.upper => lo.to_string(),
                        Some(lo) => format!("{lo}..{}", r.upper),
                        None => format!("..{}", r.upper),
                    };
                    emit_text(io, &format!("| g | m | h |\n|---|---|---|\n| {g} | {m} | {cell} |"))?;
                } else {
                    emit(io, &serde_json::to_value(r).expect("serializes"))?;
                }
            }
            Ok(0)
        }
        Command::Slack {
            genus,
            empires,
            edges,
            countries,
        } => {
            if let (Some(e), Some(c)) = (edges, countries) {
                emit_text(io, &bounds::slack(e, c).to_string())?;
                return Ok(0);
            }
            let (Some(g), Some(m)) = (genus, empires) else {
                return Err(
                    Error::InvalidArgument("give --genus and --empires, or --edges and --countries".into()).into(),
                );
            };
            let h = bounds::empire_upper(g, m)?;
            let s = bounds::uniform_slack(g, m)?;
            let edges = h * (h - 1) / 2;
            emit(
                io,
                &json!({
                    "genus": g,
                    "empires": m,
                    "h": h,
                    "vertices": h * m,
                    "edges": edges,
                    "countries": edges - h * m + 2 - 2 * g,
                    "slack": s,
                    "vertex_removal_budget": bounds::vertex_removal_budget(g, m)?,
                }),
            )?;
            Ok(0)
        }
        Command::Wessel {
            empires,
            no_connectify,
            dot,
            format,
        } => {
            let eeg = wessel_graph(empires, !no_connectify)?;
            if dot || format == Some(Format::Dot) {
                let (_, colouring) = io.solver.solve_empires(&eeg.empire_graph)?;
                emit_text(io, &io::empire_graph_to_dot(&eeg.empire_graph, Some(&colouring)))?;
            } else {
                emit(io, &io::embedded_to_json(&eeg))?;
            }
            Ok(0)
        }
        Command::Verify { jnm, uniform, input } => {
            let eg = empire_graph_from(&read_json(io, &input)?)?;
            let (n, m) = (jnm[0], jnm[1]);
            let report = if uniform {
                verify_uniform_jnm(&eg, n, m)
            } else {
                verify_jnm(&eg, n, m)
            };
            emit(io, &serde_json::to_value(&report).expect("serializes"))?;
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Collapse { input, format } => {
            let eg = empire_graph_from(&read_json(io, &input)?)?;
            let c = eg.collapse();
            if format == Some(Format::Dot) {
                emit_text(io, &io::to_dot(&c.graph, None))?;
            } else {
                emit(io, &io::graph_to_json(&c.graph))?;
            }
            Ok(0)
        }
        Command::Colour {
            input,
            witness,
            six_m,
            format,
        } => {
            let eg = empire_graph_from(&read_json(io, &input)?)?;
            let colouring: Colouring = match six_m {
                Some(m) => six_m_colouring(&eg, m)?,
                None => io.solver.solve_empires(&eg)?.1,
            };
            if format == Some(Format::Dot) {
                emit_text(io, &io::empire_graph_to_dot(&eg, Some(&colouring)))?;
            } else if witness {
                emit(io, &io::colouring_to_json(&colouring, eg.empire_ids()))?;
            } else {
                emit_text(io, &colouring.count().to_string())?;
            }
            Ok(0)
        }
        Command::Genus { input, lower_bound } => {
            let v = read_json(io, &input)?;
            if lower_bound {
                let g = plain_graph_from(&v)?;
                emit_text(io, &min_genus_lower_bound(&g)?.to_string())?;
                return Ok(0);
            }
            let rs = rotation_from(&v)?;
            let g = rs.graph();
            if g.is_connected() {
                let faces = rs.trace_faces()?.len();
                let Surface { genus } = rs.genus()?;
                emit(
                    io,
                    &json!({
                        "genus": genus,
                        "euler_characteristic": rs.euler_characteristic()?,
                        "vertices": g.vertex_count(),
                        "edges": g.edge_count(),
                        "faces": faces,
                    }),
                )?;
            } else {
                let genera: Vec<u32> = rs.component_genera().into_iter().map(|s| s.genus).collect();
                emit(io, &json!({"connected": false, "component_genera": genera}))?;
            }
            Ok(0)
        }
        Command::Dual { input, format } => {
            let rs = rotation_from(&read_json(io, &input)?)?;
            let dual = rs.dual_graph()?;
            if format == Some(Format::Dot) {
                emit_text(io, &io::to_dot(&dual, None))?;
            } else {
                emit(io, &io::graph_to_json(&dual))?;
            }
            Ok(0)
        }
        Command::Word {
            genus,
            rewrite,
            label,
            split,
            word,
        } => {
            if let Some(w) = genus {
                let w: SurfaceWord = w.parse()?;
                emit_text(io, &w.genus().genus.to_string())?;
                return Ok(0);
            }
            let Some(rule) = rewrite else {
                return Err(Error::InvalidArgument("give --genus WORD or --rewrite RULE".into()).into());
            };
            let w: SurfaceWord = word.expect("clap requires word").parse()?;
            let (x, k) = (label.expect("clap requires label"), split.expect("clap requires split"));
            let out = match rule.as_str() {
                "1" | "right-to-left" => w.rewrite_right_to_left(&x, k)?,
                _ => w.rewrite_left_to_right(&x, k)?,
            };
            emit_text(io, &out.to_string())?;
            Ok(0)
        }
        Command::Decompose { n } => {
            let paths = hamiltonian_decomposition(n)?;
            let v: Vec<&[usize]> = paths.iter().map(|p| p.vertices()).collect();
            emit_text(io, &json!(v).to_string())?;
            Ok(0)
        }
        Command::Builtin { name, warnings } => {
            debug_assert_eq!(name, "j14-2");
            let (eg, notes) = builtin_j14_2_with_warnings();
            if warnings {
                let text = serde_json::to_string_pretty(&notes).expect("serializes");
                writeln!(io.stderr, "{text}")?;
            }
            emit(io, &io::empire_graph_to_json(&eg))?;
            Ok(0)
        }
    }
}
