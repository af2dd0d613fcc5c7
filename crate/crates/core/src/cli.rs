//! Command-line front end. Every command prints one JSON document tagged with
//! the output schema version; graph commands print DOT instead with `--dot`.
//!
//! Exit codes: 0 success, 1 domain error (printed as JSON on stdout),
//! 2 usage error (printed by clap on stderr).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arcs::{Arc, ArcModel};
use crate::cluster::{b_matrix, b_matrix_glued, exchange_check, exchange_check_ball, mutate, Seed};
use crate::complexes::{ball, build_arc_complex, build_flip_graph, stats, FlipGraph};
use crate::error::Error;
use crate::surface::CiliatedSurface;
use crate::symmetry::{
    automorphisms, distinguish, flipgraph_aut_check, graph_automorphisms, rigidity_report, PermutationGroup,
    SearchLimits, DEFAULT_NODE_BUDGET, DEFAULT_VERTEX_BOUND,
};
use crate::triangulation::{ExplicitTriangulation, GluedTriangulation};

pub const SCHEMA: &str = "arcflip/1";
pub const DEFAULT_MAX_RADIUS: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "arcflip", version, about = "Arc complexes, flip graphs and B-matrices of ciliated surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Surfaces are written `g,b,s;p1,...,pb`, e.g. `0,1,0;6` for the hexagon.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Topological class and counting data of a surface
    Classify { surface: String },
    /// List the arcs of a finite-type surface or an annulus window
    Arcs {
        surface: String,
        #[command(flatten)]
        window: Window,
    },
    /// Arc complex: vertices and facets
    Complex {
        surface: String,
        #[command(flatten)]
        window: Window,
        #[arg(long)]
        dot: bool,
    },
    /// Flip graph of a finite-type surface or an annulus window
    Flipgraph {
        surface: String,
        #[command(flatten)]
        window: Window,
        #[arg(long)]
        dot: bool,
    },
    /// Flip-graph ball around a glued triangulation read from a file
    Ball {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        radius: Radius,
        #[arg(long)]
        dot: bool,
    },
    /// Summary numbers of an arc complex or a flip graph
    Stats {
        #[arg(long, value_name = "SURFACE", conflicts_with = "flipgraph", required_unless_present = "flipgraph")]
        complex: Option<String>,
        #[arg(long, value_name = "SURFACE")]
        flipgraph: Option<String>,
        #[command(flatten)]
        window: Window,
    },
    /// Automorphism group of the arc complex (or of the flip graph)
    Aut {
        surface: String,
        /// Use the flip graph instead of the arc complex
        #[arg(long)]
        flipgraph: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// Compare the automorphism group with the mapping class action
    Rigidity {
        surface: String,
        #[command(flatten)]
        limits: Limits,
        /// Also compare with the flip graph's automorphism group
        #[arg(long)]
        flipgraph: bool,
    },
    /// Decide whether two surfaces have isomorphic arc complexes
    Distinguish {
        a: String,
        b: String,
        #[command(flatten)]
        limits: Limits,
    },
    /// Signed adjacency matrix of a triangulation
    Bmatrix {
        /// Surface whose fan (or `--arcs` triangulation) is used
        #[arg(required_unless_present = "file", conflicts_with = "file")]
        surface: Option<String>,
        /// Space-separated arcs, e.g. "C(0,2) C(2,4)"
        #[arg(long)]
        arcs: Option<String>,
        /// Glued triangulation file
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Mutate a seed at an index
    Mutate {
        /// Surface whose fan seed is mutated
        #[arg(required_unless_present = "file", conflicts_with = "file")]
        surface: Option<String>,
        /// Seed file: `labels ...` followed by the matrix rows
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(short, long)]
        k: usize,
    },
    /// Check that flips and mutations agree on every flip edge
    ExchangeCheck {
        #[arg(required_unless_present = "file", conflicts_with = "file")]
        surface: Option<String>,
        /// Glued triangulation; checks the ball around it
        #[arg(long)]
        file: Option<PathBuf>,
        #[command(flatten)]
        radius: Radius,
    },
    /// Validate a glued triangulation file
    Validate {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct Window {
    /// Largest |winding| of annulus arcs
    #[arg(long, value_name = "W")]
    pub winding_bound: Option<u32>,
}

#[derive(Debug, Args)]
pub struct Radius {
    #[arg(long, default_value_t = 2)]
    pub radius: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_RADIUS)]
    pub max_radius: usize,
}

#[derive(Debug, Args)]
pub struct Limits {
    #[arg(long, default_value_t = DEFAULT_VERTEX_BOUND)]
    pub max_vertices: usize,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub node_budget: u64,
}

impl Limits {
    fn get(&self) -> SearchLimits {
        SearchLimits { vertex_bound: self.max_vertices, node_budget: self.node_budget }
    }
}

impl Radius {
    fn get(&self) -> Result<usize, Failure> {
        if self.radius > self.max_radius {
            return Err(Error::TooLarge { size: self.radius, bound: self.max_radius }.into());
        }
        Ok(self.radius)
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Arcs { .. } => "arcs",
            Command::Complex { .. } => "complex",
            Command::Flipgraph { .. } => "flipgraph",
            Command::Ball { .. } => "ball",
            Command::Stats { .. } => "stats",
            Command::Aut { .. } => "aut",
            Command::Rigidity { .. } => "rigidity",
            Command::Distinguish { .. } => "distinguish",
            Command::Bmatrix { .. } => "bmatrix",
            Command::Mutate { .. } => "mutate",
            Command::ExchangeCheck { .. } => "exchange-check",
            Command::Validate { .. } => "validate",
        }
    }
}

enum Output {
    Json(Value),
    Dot(String),
}

enum Failure {
    Domain(Error),
    Io { path: PathBuf, message: String },
    Invalid(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    fn to_json(&self) -> Value {
        match self {
            Failure::Domain(e) => json!({ "kind": e.kind(), "message": e.to_string() }),
            Failure::Io { path, message } => {
                json!({ "kind": "Io", "message": format!("{}: {message}", path.display()) })
            }
            Failure::Invalid(report) => {
                json!({ "kind": "InvalidTriangulation", "message": "triangulation failed validation", "report": report })
            }
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn surface(text: &str) -> Result<CiliatedSurface, Failure> {
    Ok(text.parse::<CiliatedSurface>()?)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io { path: path.to_path_buf(), message: e.to_string() })
}

fn glued(path: &Path) -> Result<GluedTriangulation, Failure> {
    let t = read(path)?.parse::<GluedTriangulation>()?;
    let report = t.validate();
    if !report.ok {
        return Err(Failure::Invalid(to_value(&report)));
    }
    Ok(t)
}

fn group_json(g: &PermutationGroup) -> Value {
    json!({
        "order": g.order(),
        "degree": g.degree,
        "generators": g.generators,
    })
}

fn graph_output(g: &FlipGraph, dot: bool, extra: Value) -> Output {
    if dot {
        return Output::Dot(g.to_dot());
    }
    let mut v = to_value(g);
    if let (Value::Object(map), Value::Object(more)) = (&mut v, extra) {
        map.extend(more);
    }
    Output::Json(v)
}

fn execute(cmd: &Command) -> Result<Output, Failure> {
    let out = match cmd {
        Command::Classify { surface: s } => {
            let s = surface(s)?;
            let class = s.classify();
            Output::Json(json!({
                "surface": s,
                "text": s.to_string(),
                "tag": class.tag,
                "dim": s.complex_dim(),
                "arcCount": s.arc_count().ok(),
                "triangles": s.triangle_count().ok(),
                "finiteType": s.is_finite_type(),
            }))
        }
        Command::Arcs { surface: s, window } => {
            let s = surface(s)?;
            let arcs = ArcModel::new(&s, window.winding_bound)?.arcs()?;
            Output::Json(json!({ "surface": s, "count": arcs.len(), "arcs": arcs }))
        }
        Command::Complex { surface: s, window, dot } => {
            let c = build_arc_complex(&surface(s)?, window.winding_bound)?;
            if *dot {
                Output::Dot(c.to_dot())
            } else {
                let facets: Vec<Vec<Arc>> =
                    c.facets().iter().map(|f| f.iter().map(|&i| c.vertices()[i]).collect()).collect();
                Output::Json(json!({
                    "surface": c.surface(),
                    "dim": c.dimension(),
                    "vertices": c.vertices(),
                    "facets": facets,
                    "frontier": c.frontier(),
                }))
            }
        }
        Command::Flipgraph { surface: s, window, dot } => {
            let g = build_flip_graph(&surface(s)?, window.winding_bound)?;
            graph_output(&g, *dot, json!({ "connected": g.is_connected(), "diameter": g.diameter() }))
        }
        Command::Ball { file, radius, dot } => {
            let r = radius.get()?;
            let b = ball(&glued(file)?, r)?;
            graph_output(&b.graph, *dot, json!({ "radius": r, "depth": b.depth }))
        }
        Command::Stats { complex, flipgraph, window } => {
            if let Some(s) = complex {
                Output::Json(to_value(&stats(&build_arc_complex(&surface(s)?, window.winding_bound)?)?))
            } else {
                let s = surface(flipgraph.as_deref().expect("clap requires one of the two"))?;
                let g = build_flip_graph(&s, window.winding_bound)?;
                let mut degrees = g.degrees();
                degrees.sort_unstable_by(|a, b| b.cmp(a));
                Output::Json(json!({
                    "vertices": g.vertices.len(),
                    "edges": g.edges.len(),
                    "connected": g.is_connected(),
                    "diameter": g.diameter(),
                    "degreeSequence": degrees,
                    "frontier": g.frontier.iter().filter(|&&f| f).count(),
                }))
            }
        }
        Command::Aut { surface: s, flipgraph, limits } => {
            let s = surface(s)?;
            let group = if *flipgraph {
                graph_automorphisms(&build_flip_graph(&s, None)?, limits.get())?
            } else {
                automorphisms(&build_arc_complex(&s, None)?, limits.get())?
            };
            Output::Json(json!({ "surface": s, "object": if *flipgraph { "flipgraph" } else { "complex" }, "group": group_json(&group) }))
        }
        Command::Rigidity { surface: s, limits, flipgraph } => {
            let s = surface(s)?;
            let mut v = to_value(&rigidity_report(&s, limits.get())?);
            if *flipgraph {
                v["flipgraph"] = to_value(&flipgraph_aut_check(&s, limits.get())?);
            }
            Output::Json(v)
        }
        Command::Distinguish { a, b, limits } => Output::Json(to_value(&distinguish(&surface(a)?, &surface(b)?, limits.get())?)),
        Command::Bmatrix { surface: s, arcs, file } => {
            let seed = match (s, file) {
                (_, Some(path)) => b_matrix_glued(&glued(path)?)?,
                (Some(s), None) => b_matrix(&explicit(&surface(s)?, arcs.as_deref())?)?,
                (None, None) => unreachable!("clap requires a surface or a file"),
            };
            Output::Json(seed_json(&seed))
        }
        Command::Mutate { surface: s, file, k } => {
            let seed = match (s, file) {
                (_, Some(path)) => read(path)?.parse::<Seed>()?,
                (Some(s), None) => b_matrix(&ExplicitTriangulation::fan(&surface(s)?, None)?)?,
                (None, None) => unreachable!("clap requires a surface or a file"),
            };
            let after = mutate(&seed, *k)?;
            Output::Json(json!({ "k": k, "before": seed_json(&seed), "after": seed_json(&after) }))
        }
        Command::ExchangeCheck { surface: s, file, radius } => {
            let report = match (s, file) {
                (_, Some(path)) => exchange_check_ball(&glued(path)?, radius.get()?)?,
                (Some(s), None) => exchange_check(&surface(s)?)?,
                (None, None) => unreachable!("clap requires a surface or a file"),
            };
            let mut v = to_value(&report);
            v["allVerified"] = json!(report.all_verified());
            Output::Json(v)
        }
        Command::Validate { file } => {
            let t = read(file)?.parse::<GluedTriangulation>()?;
            let report = t.validate();
            if !report.ok {
                return Err(Failure::Invalid(to_value(&report)));
            }
            Output::Json(to_value(&report))
        }
    };
    Ok(out)
}

fn seed_json(s: &Seed) -> Value {
    json!({ "labels": s.labels, "matrix": s.matrix, "text": s.to_string() })
}

fn explicit(s: &CiliatedSurface, arcs: Option<&str>) -> Result<ExplicitTriangulation, Failure> {
    match arcs {
        None => Ok(ExplicitTriangulation::fan(s, None)?),
        Some(text) => {
            let arcs: Vec<Arc> = text.split_whitespace().map(str::parse).collect::<Result<_, Error>>()?;
            Ok(ExplicitTriangulation::new(&ArcModel::new(s, None)?, arcs)?)
        }
    }
}

/// Runs the command line `args` (program name first), writing the result to
/// `out` and usage errors to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = if e.use_stderr() { e.render().to_string() } else { e.to_string() };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = target.write_all(text.as_bytes());
            return code;
        }
    };
    let name = cli.command.name();
    let (code, body) = match execute(&cli.command) {
        Ok(Output::Dot(text)) => {
            let _ = out.write_all(text.as_bytes());
            return 0;
        }
        Ok(Output::Json(result)) => (0, json!({ "schema": SCHEMA, "command": name, "result": result })),
        Err(f) => (1, json!({ "schema": SCHEMA, "command": name, "error": f.to_json() })),
    };
    let mut text = serde_json::to_string_pretty(&body).expect("json values serialize");
    text.push('\n');
    let _ = out.write_all(text.as_bytes());
    code
}
