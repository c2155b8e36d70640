mod specs;

use std::io::Write;
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use vbridge_core::algebra::{enumerate_endos, serialize_biquandle, validate_tables, Quandle};
use vbridge_core::bridge::{b1_lower, b2_lower, min_seed_size_with, wirtinger_saturate, DEFAULT_K_MAX};
use vbridge_core::coloring::{
    coloring_matrix, coloring_table, count_colorings_with, count_solutions_snf, enumerate_colorings_with_loops,
};
use vbridge_core::diagram::{chain, connected_sum, pretzel, serialize_pd, strands, torus_2n, SemiarcDiagram};
use vbridge_core::enhance::column_group_multiset_with;
use vbridge_core::exec::Exec;
use vbridge_core::poly::ExponentPolynomial;
use vbridge_core::quiver::{build_quiver_with, in_degree_polynomial, quivers_isomorphic, ColoringQuiver};
use vbridge_core::repro;

use specs::{BIQUANDLE_HELP, DIAGRAM_HELP};

const REPRO_SCHEMA: &str = include_str!("../schema/repro-report.schema.json");

/// Biquandle colorings, coloring quivers and bridge index bounds for virtual links.
#[derive(Parser)]
#[command(name = "vbridge", version, about)]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Worker threads (overrides VBRIDGE_THREADS); 1 runs sequentially.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Knot table replacing the shipped one (`name | crossings | determinant` per line).
    #[arg(long, global = true, value_name = "FILE")]
    knot_table: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Biquandle tables.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Diagram generation, validation and surgery.
    #[command(subcommand)]
    Diagram(DiagramCmd),
    /// Colorings and counting.
    #[command(subcommand)]
    Color(ColorCmd),
    /// Wirtinger seed sets and counting bounds.
    #[command(subcommand)]
    Bridge(BridgeCmd),
    /// Coloring quivers.
    #[command(subcommand)]
    Quiver(QuiverCmd),
    /// Column group enhancement.
    #[command(subcommand)]
    Enhance(EnhanceCmd),
    /// Rerun the reproduction suite.
    Repro(ReproArgs),
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Check the axioms and report a witness for each failure.
    Validate {
        #[arg(help = BIQUANDLE_HELP)]
        biquandle: String,
    },
    /// Print the operation tables in the text format.
    Show {
        #[arg(help = BIQUANDLE_HELP)]
        biquandle: String,
    },
    /// List every endomorphism.
    Endos {
        #[arg(help = BIQUANDLE_HELP)]
        biquandle: String,
    },
}

#[derive(Subcommand)]
enum DiagramCmd {
    /// Print a family member as PD text.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Parse and check a diagram.
    Validate {
        #[arg(help = DIAGRAM_HELP)]
        diagram: String,
    },
    /// Maximal overpasses.
    Strands {
        #[arg(help = DIAGRAM_HELP)]
        diagram: String,
    },
    /// Connected sum at semiarc S1 of the first diagram and S2 of the second.
    Sum {
        #[arg(help = DIAGRAM_HELP)]
        first: String,
        s1: usize,
        #[arg(help = DIAGRAM_HELP)]
        second: String,
        s2: usize,
    },
    /// List the knot table and check each determinant against R_3..R_12 counts.
    Knots,
}

#[derive(Subcommand)]
enum Family {
    /// T(2, n).
    Torus2 { n: usize },
    /// Closed chain of k rings, k odd.
    Chain { k: usize },
    /// Pretzel link from comma-separated twist counts.
    Pretzel {
        #[arg(value_delimiter = ',', allow_negative_numbers = true, required = true)]
        twists: Vec<i64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Search,
    Snf,
}

#[derive(Subcommand)]
enum ColorCmd {
    /// Number of colorings.
    Count {
        #[arg(help = DIAGRAM_HELP)]
        diagram: String,
        #[arg(help = BIQUANDLE_HELP)]
        biquandle: String,
        /// `snf` needs a linear target.
        #[arg(long, value_enum, default_value_t = CountMethod::Search)]
        method: CountMethod,
    },
    /// Every coloring, sorted; free loops add trailing coordinates.
    List {
        #[arg(help = DIAGRAM_HELP)]
        diagram: String,
        #[arg(help = BIQUANDLE_HELP)]
        biquandle: String,
        /// Tab-separated table with a semiarc header.
        #[arg(long)]
        table: bool,
    },
    /// Relation matrix over a linear target.
    Matrix {
        #[arg(help = DIAGRAM_HELP)]
        diagram: String,
        #[arg(help = BIQUANDLE_HELP)]
        biquandle: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundMode {
    B1,
    B2,
}

#[derive(Subcommand)]
enum BridgeCmd {
    /// Smallest saturating seed set.
    Seeds {
        #[arg(help = DIAGRAM_HELP)]
        diagram: String,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        kmax: usize,
    },
    /// Run coloring moves from the given seed strands.
    Saturate {
        #[arg(help = DIAGRAM_HELP)]
        diagram: String,
        #[arg(long, value_delimiter = ',', required = true)]
        seeds: Vec<usize>,
    },
    /// Counting lower bound from one or more targets.
    Lower {
        #[arg(help = DIAGRAM_HELP)]
        diagram: String,
        /// Target; repeatable.
        #[arg(long = "alg", required = true)]
        algs: Vec<String>,
        /// b1 needs quandle targets.
        #[arg(long, value_enum, default_value_t = BoundMode::B2)]
        mode: BoundMode,
    },
}

#[derive(Args)]
struct EndoArgs {
    /// Endomorphism as a 1-based image list, e.g. 2,4,2,4; repeatable.
    #[arg(long = "endo", value_name = "MAP")]
    endos: Vec<String>,
    /// Use every endomorphism of the target.
    #[arg(long, conflicts_with = "endos")]
    all_endos: bool,
}

#[derive(Subcommand)]
enum QuiverCmd {
    /// Vertices and edges.
    Build {
        #[arg(help = DIAGRAM_HELP)]
        diagram: String,
        #[arg(help = BIQUANDLE_HELP)]
        biquandle: String,
        #[command(flatten)]
        endos: EndoArgs,
    },
    /// In-degree polynomial.
    Indeg {
        #[arg(help = DIAGRAM_HELP)]
        diagram: String,
        #[arg(help = BIQUANDLE_HELP)]
        biquandle: String,
        #[command(flatten)]
        endos: EndoArgs,
    },
    /// Whether two diagrams have isomorphic quivers for the same target and maps.
    Iso {
        #[arg(help = DIAGRAM_HELP)]
        first: String,
        #[arg(help = DIAGRAM_HELP)]
        second: String,
        #[arg(help = BIQUANDLE_HELP)]
        biquandle: String,
        #[command(flatten)]
        endos: EndoArgs,
    },
}

#[derive(Subcommand)]
enum EnhanceCmd {
    /// Column group polynomial over a quandle.
    Colgroup {
        #[arg(help = DIAGRAM_HELP)]
        diagram: String,
        #[arg(help = "quandle: R<n>, trivial:N or a table file")]
        quandle: String,
    },
}

#[derive(Args)]
struct ReproArgs {
    /// Run every claim (the default when no --only is given).
    #[arg(long)]
    all: bool,
    /// Claim id such as AC5; repeatable.
    #[arg(long = "only", value_name = "ID", conflicts_with = "all")]
    only: Vec<String>,
    /// Omit runtimes so output is byte-stable.
    #[arg(long)]
    no_timings: bool,
    /// Print the JSON schema of the report and exit.
    #[arg(long)]
    schema: bool,
}

/// Why a command did not succeed.
pub enum Failure {
    /// Bad argument; exit 2.
    Usage(String),
    /// Input or computation failed; exit 1.
    Compute(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Compute(e)
    }
}

/// What a command prints, in both styles, and whether it counts as success.
struct Report {
    human: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn ok(human: impl Into<String>, json: Value) -> Self {
        Report { human: human.into(), json, ok: true }
    }
}

fn poly_json(p: &ExponentPolynomial) -> Value {
    let terms: Vec<Value> = p.terms().map(|(e, c)| json!({"exponent": e, "coefficient": c})).collect();
    json!({"text": p.to_string(), "terms": terms})
}

fn diagram_json(d: &SemiarcDiagram) -> Value {
    json!({
        "semiarcs": d.semiarc_count(),
        "crossings": d.crossings().len(),
        "free_loops": d.free_loops(),
        "components": d.component_count(),
        "pd": serialize_pd(d),
    })
}

fn quiver_for(
    d: &str,
    y: &str,
    e: &EndoArgs,
    exec: Exec,
) -> Result<ColoringQuiver, Failure> {
    let d = specs::diagram(d)?;
    let y = specs::biquandle(y)?;
    let s = specs::endos(&y, &e.endos, e.all_endos)?;
    build_quiver_with(&d, &y, &s, exec).map_err(|e| Failure::Usage(e.to_string()))
}

fn run_algebra(cmd: AlgebraCmd) -> Result<Report, Failure> {
    match cmd {
        AlgebraCmd::Validate { biquandle } => {
            let (over, under) = specs::tables(&biquandle)?;
            let report = validate_tables(&over, &under).map_err(|e| Failure::Compute(anyhow!(e)))?;
            let lines: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            let human = if lines.is_empty() { "valid".to_string() } else { format!("invalid\n{}", lines.join("\n")) };
            Ok(Report {
                human,
                json: json!({"valid": report.is_valid(), "violations": lines}),
                ok: report.is_valid(),
            })
        }
        AlgebraCmd::Show { biquandle } => {
            let y = specs::biquandle(&biquandle)?;
            let (over, under) = y.to_tables();
            let linear = y.linear_form().map(|l| json!({"n": l.modulus, "a": l.a, "b": l.b, "c": l.c, "d": l.d}));
            let text = serialize_biquandle(&y);
            Ok(Report::ok(
                text.trim_end(),
                json!({"order": y.order(), "over": over, "under": under, "quandle": y.is_quandle(), "linear": linear}),
            ))
        }
        AlgebraCmd::Endos { biquandle } => {
            let y = specs::biquandle(&biquandle)?;
            let endos: Vec<String> = enumerate_endos(&y).iter().map(|f| f.to_string()).collect();
            Ok(Report::ok(endos.join("\n"), json!({"count": endos.len(), "endomorphisms": endos})))
        }
    }
}

fn run_diagram(cmd: DiagramCmd, exec: Exec) -> Result<Report, Failure> {
    match cmd {
        DiagramCmd::Gen { family } => {
            let d = match family {
                Family::Torus2 { n } => torus_2n(n),
                Family::Chain { k } => chain(k),
                Family::Pretzel { twists } => pretzel(&twists),
            }
            .map_err(|e| Failure::Usage(e.to_string()))?;
            let pd = serialize_pd(&d);
            Ok(Report::ok(pd.trim_end(), diagram_json(&d)))
        }
        DiagramCmd::Validate { diagram } => {
            let d = specs::diagram(&diagram)?;
            let human = format!(
                "ok: {} semiarcs, {} crossings, {} components, {} free loops",
                d.semiarc_count(),
                d.crossings().len(),
                d.component_count(),
                d.free_loops()
            );
            Ok(Report::ok(human, diagram_json(&d)))
        }
        DiagramCmd::Strands { diagram } => {
            let d = specs::diagram(&diagram)?;
            let sd = strands(&d);
            let lines: Vec<String> = sd
                .strands
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let arcs: Vec<String> = s.0.iter().map(|a| a.to_string()).collect();
                    format!("{i}: {}", arcs.join(" "))
                })
                .collect();
            Ok(Report::ok(lines.join("\n"), serde_json::to_value(&sd).map_err(anyhow::Error::from)?))
        }
        DiagramCmd::Sum { first, s1, second, s2 } => {
            let (a, b) = (specs::diagram(&first)?, specs::diagram(&second)?);
            let (d, relabel) = connected_sum(&a, s1, &b, s2).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut j = diagram_json(&d);
            j["relabel"] = json!(relabel);
            Ok(Report::ok(serialize_pd(&d).trim_end(), j))
        }
        DiagramCmd::Knots => {
            let table = specs::knots();
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            let mut all_ok = true;
            for rec in table.records() {
                let consistent = rec.determinant.map(|det| {
                    (3..=12u128).all(|n| {
                        let q = vbridge_core::algebra::make_dihedral(n as usize).map(Quandle::into_biquandle);
                        q.is_ok_and(|q| count_colorings_with(&rec.diagram, &q, exec) == n * gcd(det as u128, n))
                    })
                });
                all_ok &= consistent != Some(false);
                let det = rec.determinant.map_or("-".to_string(), |d| d.to_string());
                let check = match consistent {
                    Some(true) => "consistent",
                    Some(false) => "INCONSISTENT",
                    None => "unchecked",
                };
                lines.push(format!("{}\t{} crossings\tdet {det}\t{check}", rec.name, rec.diagram.crossings().len()));
                rows.push(json!({
                    "name": rec.name,
                    "crossings": rec.diagram.crossings().len(),
                    "determinant": rec.determinant,
                    "consistent": consistent,
                }));
            }
            Ok(Report { human: lines.join("\n"), json: json!({"knots": rows}), ok: all_ok })
        }
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn run_color(cmd: ColorCmd, exec: Exec) -> Result<Report, Failure> {
    match cmd {
        ColorCmd::Count { diagram, biquandle, method } => {
            let (d, y) = (specs::diagram(&diagram)?, specs::biquandle(&biquandle)?);
            let count = match method {
                CountMethod::Search => count_colorings_with(&d, &y, exec),
                CountMethod::Snf => {
                    let m = coloring_matrix(&d, &y).map_err(|e| Failure::Usage(format!("--method snf: {e}")))?;
                    count_solutions_snf(&m).map_err(|e| Failure::Compute(anyhow!(e)))?
                }
            };
            Ok(Report::ok(count.to_string(), json!({"count": count.to_string()})))
        }
        ColorCmd::List { diagram, biquandle, table } => {
            let (d, y) = (specs::diagram(&diagram)?, specs::biquandle(&biquandle)?);
            let all = enumerate_colorings_with_loops(&d, &y, exec);
            let width = d.semiarc_count() + d.free_loops();
            let human = if table {
                coloring_table(width, &all).trim_end().to_string()
            } else {
                all.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n")
            };
            let rows: Vec<Vec<usize>> =
                all.iter().map(|c| c.values().iter().map(|&v| v as usize + 1).collect()).collect();
            Ok(Report::ok(human, json!({"semiarcs": width, "count": all.len(), "colorings": rows})))
        }
        ColorCmd::Matrix { diagram, biquandle } => {
            let (d, y) = (specs::diagram(&diagram)?, specs::biquandle(&biquandle)?);
            let m = coloring_matrix(&d, &y).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(Report::ok(m.to_tsv().trim_end(), serde_json::to_value(&m).map_err(anyhow::Error::from)?))
        }
    }
}

fn run_bridge(cmd: BridgeCmd, exec: Exec) -> Result<Report, Failure> {
    match cmd {
        BridgeCmd::Seeds { diagram, kmax } => {
            let d = specs::diagram(&diagram)?;
            match min_seed_size_with(&d, kmax, exec) {
                Some(s) => {
                    let w: Vec<String> = s.witness.iter().map(|x| x.to_string()).collect();
                    Ok(Report::ok(
                        format!("{} (strands {})", s.size, w.join(",")),
                        json!({"size": s.size, "witness": s.witness}),
                    ))
                }
                None => Ok(Report {
                    human: format!("no saturating seed set with at most {kmax} strands"),
                    json: json!({"size": null, "kmax": kmax}),
                    ok: false,
                }),
            }
        }
        BridgeCmd::Saturate { diagram, seeds } => {
            let d = specs::diagram(&diagram)?;
            let r = wirtinger_saturate(&d, &seeds).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut lines: Vec<String> = r
                .sequence
                .iter()
                .map(|m| format!("crossing {}: strand {} gets color {}", m.crossing, m.strand, m.token))
                .collect();
            lines.push(if r.saturated { "saturated".into() } else { "not saturated".into() });
            Ok(Report::ok(lines.join("\n"), serde_json::to_value(&r).map_err(anyhow::Error::from)?))
        }
        BridgeCmd::Lower { diagram, algs, mode } => {
            let d = specs::diagram(&diagram)?;
            let bound = match mode {
                BoundMode::B1 => {
                    let qs = algs.iter().map(|a| specs::quandle(a)).collect::<Result<Vec<Quandle>, _>>()?;
                    let counts: Vec<(&Quandle, u128)> =
                        qs.iter().map(|q| (q, count_colorings_with(&d, q.as_biquandle(), exec))).collect();
                    b1_lower(&counts)
                }
                BoundMode::B2 => {
                    let ys = algs.iter().map(|a| specs::biquandle(a)).collect::<Result<Vec<_>, _>>()?;
                    let counts: Vec<(&_, u128)> = ys.iter().map(|y| (y, count_colorings_with(&d, y, exec))).collect();
                    b2_lower(&counts)
                }
            }
            .map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(Report::ok(bound.to_string(), json!({"lower_bound": bound})))
        }
    }
}

fn run_quiver(cmd: QuiverCmd, exec: Exec) -> Result<Report, Failure> {
    match cmd {
        QuiverCmd::Build { diagram, biquandle, endos } => {
            let q = quiver_for(&diagram, &biquandle, &endos, exec)?;
            let mut lines: Vec<String> = q.vertices.iter().enumerate().map(|(i, c)| format!("v{i} {c}")).collect();
            lines.extend(q.edges.iter().map(|(s, t, k)| format!("v{s} -> v{t} [{}]", q.endomorphisms[*k])));
            let vertices: Vec<Vec<usize>> =
                q.vertices.iter().map(|c| c.values().iter().map(|&v| v as usize + 1).collect()).collect();
            let endos: Vec<String> = q.endomorphisms.iter().map(|f| f.to_string()).collect();
            Ok(Report::ok(
                lines.join("\n"),
                json!({"vertices": vertices, "edges": q.edges, "endomorphisms": endos}),
            ))
        }
        QuiverCmd::Indeg { diagram, biquandle, endos } => {
            let q = quiver_for(&diagram, &biquandle, &endos, exec)?;
            let p = in_degree_polynomial(&q);
            Ok(Report::ok(p.to_string(), poly_json(&p)))
        }
        QuiverCmd::Iso { first, second, biquandle, endos } => {
            let a = quiver_for(&first, &biquandle, &endos, exec)?;
            let b = quiver_for(&second, &biquandle, &endos, exec)?;
            let iso = quivers_isomorphic(&a, &b).map_err(|e| Failure::Compute(anyhow!(e)))?;
            Ok(Report::ok(
                if iso { "isomorphic" } else { "not isomorphic" },
                json!({"isomorphic": iso, "vertices": [a.vertices.len(), b.vertices.len()]}),
            ))
        }
    }
}

fn run_enhance(cmd: EnhanceCmd, exec: Exec) -> Result<Report, Failure> {
    match cmd {
        EnhanceCmd::Colgroup { diagram, quandle } => {
            let d = specs::diagram(&diagram)?;
            let q = specs::quandle(&quandle)?;
            let m = column_group_multiset_with(&d, &q, exec).map_err(|e| Failure::Compute(anyhow!(e)))?;
            let p = m.to_polynomial();
            Ok(Report::ok(p.to_string(), poly_json(&p)))
        }
    }
}

fn run_repro(args: ReproArgs, exec: Exec) -> Result<Report, Failure> {
    if args.schema {
        let schema: Value = serde_json::from_str(REPRO_SCHEMA).map_err(anyhow::Error::from)?;
        return Ok(Report::ok(REPRO_SCHEMA.trim_end(), schema));
    }
    let report = repro::run(&args.only, exec).map_err(|e| Failure::Usage(format!("--only: {e}")))?;
    let mut lines = Vec::new();
    for item in &report.items {
        let status = if item.pass { "PASS" } else { "FAIL" };
        let timing = if args.no_timings { String::new() } else { format!(" ({} ms)", item.runtime_ms) };
        lines.push(format!("{} {status}{timing}: {}", item.id, item.claim));
        lines.push(format!("    expected: {}", item.expected));
        lines.push(format!("    computed: {}", item.computed));
    }
    lines.push(format!("{} passed, {} failed", report.passed, report.failed));
    let mut json = serde_json::to_value(&report).map_err(anyhow::Error::from)?;
    if args.no_timings {
        if let Some(items) = json["items"].as_array_mut() {
            for item in items {
                item.as_object_mut().map(|o| o.remove("runtime_ms"));
            }
        }
    }
    Ok(Report { human: lines.join("\n"), json, ok: report.all_passed() })
}

fn configure_threads(flag: Option<usize>) -> Result<Exec, Failure> {
    let threads = match flag {
        Some(n) => Some(n),
        None => match std::env::var("VBRIDGE_THREADS") {
            Ok(v) if !v.trim().is_empty() => Some(
                v.trim()
                    .parse::<usize>()
                    .map_err(|_| Failure::Usage(format!("VBRIDGE_THREADS: expected a thread count, found {v:?}")))?,
            ),
            _ => None,
        },
    };
    match threads {
        Some(0) => Err(Failure::Usage("--threads must be at least 1".into())),
        Some(1) => Ok(Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(n) => {
            rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(anyhow::Error::from)?;
            Ok(Exec::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(Exec::Sequential),
        None => Ok(Exec::default()),
    }
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let exec = configure_threads(cli.threads)?;
    if let Some(path) = &cli.knot_table {
        specs::load_knot_table(path)?;
    }
    match cli.command {
        Command::Algebra(c) => run_algebra(c),
        Command::Diagram(c) => run_diagram(c, exec),
        Command::Color(c) => run_color(c, exec),
        Command::Bridge(c) => run_bridge(c, exec),
        Command::Quiver(c) => run_quiver(c, exec),
        Command::Enhance(c) => run_enhance(c, exec),
        Command::Repro(a) => run_repro(a, exec),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(report) => {
            let text = match format {
                Format::Human => report.human,
                Format::Json => serde_json::to_string_pretty(&report.json).expect("json value"),
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
