//! `tetra`: check, classify, sample and export convex tropical tetrahedra.
//!
//! Inputs are `registry NAME`, `gen FAMILY PARAMS...`, a matrix file, or `-`
//! for standard input. Exit codes: 0 ok, 1 domain refusal, 2 parse error.

use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use tetra::census::{run_census, CensusConfig};
use tetra::classify::{classify_polytrope, require_hypotheses, symmetry_chirality, ClassVerdict};
use tetra::export::{to_off, ExportDocument};
use tetra::extremal::{check_hypothesis1, check_hypothesis2};
use tetra::families::{registry, FamilySpec};
use tetra::io::parse_matrix;
use tetra::maxplus::{is_kleene_star, KleeneMatrix};
use tetra::polytrope::{polytrope_of, Polytrope};
use tetra::TetraError;

#[derive(Parser)]
#[command(name = "tetra", version, about = "Exact geometry of convex tropical tetrahedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Kleene star test, both hypotheses with witnesses, maximality.
    Check {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        input: Vec<String>,
    },
    /// Combinatorial class with its supporting data.
    Classify {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        input: Vec<String>,
    },
    /// Random census of 4×4 Kleene stars.
    Census {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 50)]
        range: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write an OFF mesh and/or an exact JSON document.
    Export {
        #[arg(long)]
        off: Option<String>,
        #[arg(long)]
        json: Option<String>,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        input: Vec<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn refuse(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<TetraError> for Failure {
    fn from(e: TetraError) -> Self {
        match e {
            TetraError::Parse(_) | TetraError::UnknownMatrix(_) => Failure::parse(e.to_string()),
            other => Failure::refuse(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

/// Text of a file or of standard input.
fn read_source(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::parse(format!("{path}: {e}")))
    }
}

enum Loaded {
    Kleene(Box<KleeneMatrix>),
    /// Parsed but not a Kleene star; the report lists the violations.
    NotKleene(Vec<String>),
}

fn load(input: &[String]) -> CliResult<Loaded> {
    match input {
        [cmd, name] if cmd == "registry" => Ok(Loaded::Kleene(Box::new(registry(name)?))),
        [cmd, rest @ ..] if cmd == "gen" => {
            let spec = FamilySpec::parse(rest).map_err(|e| Failure::parse(e.to_string()))?;
            Ok(Loaded::Kleene(Box::new(spec.build()?)))
        }
        [path] => {
            let text = read_source(path)?;
            let m = parse_matrix(&text).map_err(|e| Failure::parse(format!("{path}: {e}")))?;
            let verdict = is_kleene_star(&m);
            if verdict.violations.is_empty() {
                Ok(Loaded::Kleene(Box::new(KleeneMatrix::new(m)?)))
            } else {
                Ok(Loaded::NotKleene(verdict.violations.iter().map(ToString::to_string).collect()))
            }
        }
        _ => Err(Failure::parse("input must be `registry NAME`, `gen FAMILY PARAMS...`, a file, or -")),
    }
}

fn load_kleene(input: &[String]) -> CliResult<KleeneMatrix> {
    match load(input)? {
        Loaded::Kleene(a) => Ok(*a),
        Loaded::NotKleene(v) => Err(Failure::refuse(format!("matrix is not a Kleene star: {}", v.join(", ")))),
    }
}

fn cmd_check(input: &[String]) -> CliResult<String> {
    let a = match load(input)? {
        Loaded::Kleene(a) => *a,
        Loaded::NotKleene(v) => {
            return Err(Failure::refuse(format!("kleene: no ({})\n{}", v.len(), v.join("\n"))));
        }
    };
    let h1 = check_hypothesis1(&a);
    let h2 = check_hypothesis2(&a);
    let h1_text = if h1.passes() {
        "pass".to_string()
    } else {
        let g: Vec<String> = h1.failing().iter().map(|g| format!("generator {}", g + 1)).collect();
        format!("FAIL ({})", g.join(", "))
    };
    let h2_text = if h2.passes() {
        "pass".to_string()
    } else {
        let w: Vec<String> = h2.failing.iter().map(ToString::to_string).collect();
        format!("FAIL ({})", w.join(", "))
    };
    let maximal = if h1.passes() && h2.passes() { "yes" } else { "no" };
    let mut out = format!("kleene: yes, hypothesis1: {h1_text}, hypothesis2: {h2_text}, maximal: {maximal}\n");
    for e in &h1.evaluations {
        let terms: Vec<String> = e.terms.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "  plane without generator {}: terms [{}], max {} attained {}x",
            e.omit + 1,
            terms.join(", "),
            e.max,
            e.attain_count
        );
    }
    Ok(out)
}

fn edge_table(p: &Polytrope) -> String {
    let mut s = String::from("edges:\n  edge        tropical  euclidean  direction\n");
    for e in &p.edges {
        let name = format!("{}-{}", e.a, e.b);
        let _ = writeln!(
            s,
            "  {name:<10}  {:>8}  {:>9.6}  {}",
            e.tropical_length.to_string(),
            e.euclidean_length(),
            e.direction
        );
    }
    s
}

fn classify_text(p: &Polytrope, v: &ClassVerdict, transpose: Option<&ClassVerdict>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "class: {}", v.class_id);
    let _ = writeln!(s, "type-vector: {}", v.type_vector);
    let _ = writeln!(s, "polygon-vector: {}", v.polygon_vector);
    let _ = writeln!(s, "f-vector: {}", p.f_vector);
    let hex: Vec<String> = v
        .hexes
        .hexagons
        .iter()
        .map(|&(l, m)| p.facet_on(l, m).map_or_else(String::new, |f| f.equation.clone()))
        .collect();
    let _ = writeln!(s, "hexagons: {} ({:?}) on {}", v.hexes.hexagon_count, v.hexes.adjacency, hex.join("; "));
    let types: Vec<String> = tetra::matrix::PAIRS
        .iter()
        .zip(p.extremals.line_types())
        .map(|(&(i, j), t)| format!("L{}{} {t}", i + 1, j + 1))
        .collect();
    let _ = writeln!(s, "line types: {}", types.join(", "));
    s += "configurations:\n";
    for c in &v.configurations {
        let _ = writeln!(s, "  {:<4} {c}", c.at.to_string());
    }
    s += "facets:\n";
    for f in &p.facets {
        let cycle: Vec<String> = f.cycle.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "  {:<14} {}-gon  {}", f.equation, f.gon, cycle.join(" "));
    }
    s += &edge_table(p);
    let _ = writeln!(s, "centrally symmetric: {}", if v.centrally_symmetric { "yes" } else { "no" });
    let _ = writeln!(s, "chiral partner distinct: {}", if v.chiral_partner_distinct { "yes" } else { "no" });
    if let Some(t) = transpose {
        let _ = writeln!(s, "transpose: class {}, type-vector {}", t.class_id, t.type_vector);
    }
    s
}

fn cmd_classify(input: &[String], format: Format) -> CliResult<String> {
    let a = load_kleene(input)?;
    require_hypotheses(&a)?;
    let p = polytrope_of(&a)?;
    let v = classify_polytrope(&p)?;
    let sym = symmetry_chirality(&a);
    Ok(match format {
        Format::Text => classify_text(&p, &v, sym.transpose_verdict.as_ref()),
        Format::Json => {
            let edges: Vec<_> = p
                .edges
                .iter()
                .map(|e| {
                    json!({
                        "a": e.a, "b": e.b,
                        "tropical_length": e.tropical_length,
                        "euclidean_length": e.euclidean_length(),
                        "direction": e.direction,
                    })
                })
                .collect();
            let doc = json!({
                "verdict": v,
                "f_vector": p.f_vector,
                "line_types": p.extremals.line_types(),
                "facets": p.facets,
                "edges": edges,
                "symmetry": {
                    "centrally_symmetric": sym.centrally_symmetric,
                    "transpose_class": sym.transpose_verdict.as_ref().map(|t| t.class_id),
                    "transpose_configurations": sym.transpose_verdict.as_ref().map(|t| &t.configurations),
                },
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
    })
}

fn cmd_census(config: CensusConfig, format: Format) -> CliResult<String> {
    let report = run_census(config)?;
    Ok(match format {
        Format::Text => report.table(),
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
    })
}

fn cmd_export(input: &[String], off: Option<&str>, json_path: Option<&str>) -> CliResult<String> {
    if off.is_none() && json_path.is_none() {
        return Err(Failure::parse("export needs --off PATH and/or --json PATH"));
    }
    let a = load_kleene(input)?;
    let doc = ExportDocument::of(&a)?;
    let mut out = String::new();
    let write = |path: &str, text: &str| fs::write(path, text).map_err(|e| Failure::refuse(format!("{path}: {e}")));
    if let Some(path) = json_path {
        write(path, &(doc.to_json() + "\n"))?;
        let _ = writeln!(out, "wrote {path} (maximal: {})", doc.maximal);
    }
    if let Some(path) = off {
        let mesh = match doc.polytrope() {
            Some(p) => to_off(&p)?,
            None => return Err(Failure::refuse("span is not maximal: facets unavailable, OFF refused")),
        };
        write(path, &mesh)?;
        let _ = writeln!(out, "wrote {path}");
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { input } => cmd_check(&input),
        Command::Classify { format, input } => cmd_classify(&input, format),
        Command::Census { samples, range, seed, jobs, format } => {
            cmd_census(CensusConfig { samples, range, seed, jobs }, format)
        }
        Command::Export { off, json, input } => cmd_export(&input, off.as_deref(), json.as_deref()),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
