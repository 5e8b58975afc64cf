use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use coxeter_weyl::catalog::{self, Classifier};
use coxeter_weyl::cosetgraph::{self, TreeVerdict};
use coxeter_weyl::decompose::{self, GraphOfSpecialSubgroups, Predicate};
use coxeter_weyl::words::{self, ThicknessVector};
use coxeter_weyl::{davis, invariants, parse_system, CoxeterSystem, Error, Limits, SpecialSubset};

/// Invariants of Coxeter systems read from JSON files.
#[derive(Parser)]
#[command(name = "weyl", version)]
struct Cli {
    /// Treat INPUT as a directory and run the command on every `*.json` file in it.
    #[arg(long, global = true)]
    each: bool,
    #[command(flatten)]
    limits: LimitArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LimitArgs {
    /// Largest ball enumerated, in group elements [default: 1000000]
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_ball_elements: Option<u64>,
    /// Largest braid class explored when reducing a word [default: 200000]
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_braid_class: Option<u64>,
    /// Largest poset of spherical subsets [default: 1048576]
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_spherical_subsets: Option<u64>,
    /// Most simplices in the Davis chamber [default: 2000000]
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_simplices: Option<u64>,
    /// Most generators accepted by the algebraic-rank search [default: 14]
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_alg_rank_generators: Option<u64>,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        let pick = |v: Option<u64>, default: usize| v.map_or(default, |x| x as usize);
        Limits {
            ball_elements: pick(self.max_ball_elements, d.ball_elements),
            braid_class: pick(self.max_braid_class, d.braid_class),
            spherical_poset: pick(self.max_spherical_subsets, d.spherical_poset),
            chamber_simplices: pick(self.max_simplices, d.chamber_simplices),
            algebraic_rank_generators: pick(self.max_alg_rank_generators, d.algebraic_rank_generators),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible components, their types, signature and maximal spherical subsets.
    Classify { input: PathBuf },
    /// Ends, cd_Q, algebraic rank, vcd and the Weyl-invariance notes.
    Invariants {
        input: PathBuf,
        /// Thickness as `s=2,t=3`.
        #[arg(long)]
        thickness: Option<String>,
        /// Accepted for compatibility; output is always JSON.
        #[arg(long)]
        json: bool,
    },
    /// Number of ends, cross-checked between the Ξ_J and Davis routes.
    Ends { input: PathBuf },
    /// Visual decomposition along the clique tree, or the iterated-split accessibility tree.
    Decompose {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = PredicateArg::Spherical)]
        predicate: PredicateArg,
        #[arg(long, value_enum, default_value_t = Strategy::CliqueTree)]
        strategy: Strategy,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Rational cohomology of the Davis chamber relative to its mirrors.
    Davis {
        input: PathBuf,
        /// Include the full table of H^k(K, K^{S∖J}) over spherical J.
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Sphere sizes, descent counts and Poincaré partial sums.
    Growth {
        input: PathBuf,
        #[arg(long)]
        radius: usize,
        /// Evaluation point `p/q` with 0 < t <= 1.
        #[arg(long)]
        t: Option<String>,
    },
    /// Counts R(n) of elements with q_w = n for n <= N.
    DoubleCosets {
        input: PathBuf,
        #[arg(long)]
        max: u64,
        /// Thickness as `s=2,t=3`.
        #[arg(long)]
        thickness: String,
    },
    /// Residue graph of a graph of special subgroups on a ball.
    CosetGraph {
        input: PathBuf,
        /// JSON file with `vertices` and `edges` carrying generator lists.
        #[arg(long)]
        gog: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Cayley graph of a ball with generator edges.
    ChamberGraph {
        input: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Components of B(R) minus B(r) reaching the sphere of radius R.
    EndsEstimate {
        input: PathBuf,
        #[arg(long = "r")]
        r: usize,
        #[arg(long = "R")]
        big_r: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PredicateArg {
    Spherical,
    Affine,
    OneEnded,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    CliqueTree,
    IteratedSplit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Tsv,
}

enum Output {
    Json(Value),
    Text(String),
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::LimitExceeded(_) => 2,
            Error::Internal(_) => 3,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

impl Command {
    fn input(&self) -> &Path {
        match self {
            Command::Classify { input }
            | Command::Invariants { input, .. }
            | Command::Ends { input }
            | Command::Decompose { input, .. }
            | Command::Davis { input, .. }
            | Command::Growth { input, .. }
            | Command::DoubleCosets { input, .. }
            | Command::CosetGraph { input, .. }
            | Command::ChamberGraph { input, .. }
            | Command::EndsEstimate { input, .. } => input,
        }
    }
}

fn subsets_json(sys: &CoxeterSystem, sets: &[SpecialSubset]) -> Value {
    json!(sets.iter().map(|&j| sys.subset_names(j)).collect::<Vec<_>>())
}

fn signature_json(s: &catalog::Signature) -> Value {
    json!({ "positive": s.positive, "negative": s.negative, "zero": s.zero })
}

fn parse_thickness(sys: &CoxeterSystem, text: &str) -> Result<ThicknessVector, Failure> {
    let mut pairs = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, q) = part
            .split_once('=')
            .ok_or_else(|| input_error(format!("thickness entry `{part}` is not of the form name=q")))?;
        let q: u64 = q.trim().parse().map_err(|_| input_error(format!("thickness `{q}` is not an integer")))?;
        pairs.push((name.trim(), q));
    }
    Ok(ThicknessVector::from_pairs(sys, &pairs)?)
}

fn run(cmd: &Command, sys: &CoxeterSystem, limits: &Limits) -> Result<Output, Failure> {
    match cmd {
        Command::Classify { .. } => {
            let mut c = Classifier::new(sys);
            let mut comps = Vec::new();
            for k in sys.irreducible_components() {
                let sub = sys.restrict(k)?;
                let t = c.classify_connected(k);
                let mut entry = json!({
                    "generators": sys.subset_names(k),
                    "type": t.to_string(),
                    "family": t.family(),
                });
                if let Some(actual) = catalog::signature_discrepancy(&sub, t) {
                    entry["signature_discrepancy"] = signature_json(&actual);
                }
                comps.push(entry);
            }
            let signature = catalog::bilinear_signature(sys, 1e-9)?;
            Ok(Output::Json(json!({
                "generators": sys.names(),
                "spherical": c.is_spherical(sys.generators()),
                "components": comps,
                "signature": signature_json(&signature),
                "maximal_spherical_subsets": subsets_json(sys, &catalog::maximal_spherical_subsets(sys)),
                "provenance": { "type": "CATALOG", "signature": "BILINEAR_FORM" },
            })))
        }
        Command::Invariants { thickness, .. } => {
            let q = thickness.as_deref().map(|t| parse_thickness(sys, t)).transpose()?;
            Ok(Output::Json(invariants::invariant_report(sys, q.as_ref(), limits)?.to_json()))
        }
        Command::Ends { .. } => {
            let e = decompose::ends(sys, limits)?;
            let split = decompose::find_spherical_infinity_decomposition(sys, limits)?;
            let h1 = davis::more_than_one_end_h1(sys, limits)?;
            if h1 != split.is_some() {
                return Err(Failure {
                    code: 3,
                    message: "the Ξ_J route and the Davis H^1 route disagree".into(),
                });
            }
            let split = split.map(|d| {
                json!({
                    "down": sys.subset_names(d.down),
                    "up": sys.subset_names(d.up),
                    "meet": sys.subset_names(d.meet),
                })
            });
            Ok(Output::Json(json!({
                "ends": e.value.as_json(),
                "decomposition": split,
                "more_than_one_end_h1": h1,
                "provenance": { "ends": e.provenance, "cross_check": "DAVIS_ROUTE" },
            })))
        }
        Command::Decompose { predicate, strategy, format, .. } => {
            let gog = match strategy {
                Strategy::CliqueTree => {
                    let pred = match predicate {
                        PredicateArg::Spherical => Predicate::Spherical,
                        PredicateArg::Affine => Predicate::SphericalOrAffine,
                        PredicateArg::OneEnded => Predicate::AtMostOneEnd,
                    };
                    decompose::visual_decomposition(sys, &pred, limits)?
                }
                Strategy::IteratedSplit => decompose::accessibility_tree(sys, limits)?,
            };
            match format {
                Format::Dot => Ok(Output::Text(gog.to_dot(sys))),
                Format::Json => {
                    let mut doc = gog.to_json(sys);
                    doc["provenance"] = json!({
                        "decomposition": if *strategy == Strategy::CliqueTree { "CLIQUE_TREE" } else { "ITERATED_SPLIT" },
                    });
                    Ok(Output::Json(doc))
                }
                Format::Tsv => Err(input_error("decompose supports --format json or dot")),
            }
        }
        Command::Davis { table, format, .. } => {
            let t = davis::cohomology_table(sys, limits)?;
            if *format == Format::Tsv {
                return Ok(Output::Text(t.to_tsv(sys)));
            }
            if *format == Format::Dot {
                return Err(input_error("davis supports --format json or tsv"));
            }
            let h1 = t.rows.values().any(|d| d.get(1).is_some_and(|&x| x != 0));
            let mut doc = json!({
                "cd_q": t.top_degree(),
                "dimension": t.dimension,
                "spherical_subsets": t.rows.len(),
                "more_than_one_end_h1": h1,
            });
            if *table {
                doc["rows"] = t.to_json(sys)["rows"].clone();
            }
            doc["provenance"] = json!({ "cd_q": "DAVIS_ROUTE" });
            Ok(Output::Json(doc))
        }
        Command::Growth { radius, t, .. } => {
            let census = words::ball(sys, *radius, limits)?;
            let descents: Vec<Value> = census
                .descent_counts
                .iter()
                .map(|(&j, &n)| json!({ "descent": sys.subset_names(j), "count": n }))
                .collect();
            let mut doc = json!({
                "radius": radius,
                "sphere_sizes": census.sphere_sizes,
                "ball_size": census.len(),
                "descent_counts": descents,
                "convergence_exponent": words::convergence_exponent(sys),
            });
            if let Some(t) = t {
                let t = BigRational::from_str(t).map_err(|_| input_error(format!("`{t}` is not a rational p/q")))?;
                if t <= BigRational::from_integer(0.into()) || t > BigRational::from_integer(1.into()) {
                    return Err(input_error(format!("t = {t} must satisfy 0 < t <= 1")));
                }
                let v = words::growth_sum(&census.sphere_sizes, &t);
                doc["poincare_partial"] = json!({ "t": t.to_string(), "value": v.to_string() });
            }
            doc["provenance"] = json!({ "sphere_sizes": "BALL_ENUMERATION" });
            Ok(Output::Json(doc))
        }
        Command::DoubleCosets { max, thickness, .. } => {
            let q = parse_thickness(sys, thickness)?;
            let counts = words::double_coset_counts(sys, &q, *max, limits)?;
            let total: u64 = counts.values().sum();
            let mut obj = Map::new();
            for (n, c) in &counts {
                obj.insert(n.to_string(), json!(c));
            }
            Ok(Output::Json(json!({
                "max": max,
                "radius": 63 - max.leading_zeros(),
                "counts": obj,
                "total": total,
                "provenance": { "counts": "LOG2_BOUNDED_BALL" },
            })))
        }
        Command::CosetGraph { gog, radius, format, .. } => {
            let text = fs::read_to_string(gog).map_err(|e| input_error(format!("{}: {e}", gog.display())))?;
            let doc: Value = serde_json::from_str(&text).map_err(|e| input_error(format!("{}: {e}", gog.display())))?;
            let g = GraphOfSpecialSubgroups::from_json(sys, &doc)?;
            let graph = cosetgraph::coset_graph(sys, &g, *radius, limits)?;
            if *format == Format::Dot {
                return Ok(Output::Text(graph.to_dot(sys, &g)));
            }
            let verdict = cosetgraph::is_tree_within_ball(&graph);
            let mut out = json!({
                "radius": radius,
                "vertices": graph.vertices.len(),
                "edges": graph.edges.len(),
                "verdict": verdict.tag(),
                "caveat": cosetgraph::TREE_CAVEAT,
            });
            match verdict {
                TreeVerdict::CycleFound(c) => out["cycle"] = json!(c),
                TreeVerdict::Disconnected(k) => out["components"] = json!(k),
                TreeVerdict::AcyclicConnected => {}
            }
            out["graph"] = graph.to_json(sys);
            out["provenance"] = json!({ "verdict": "BALL_TRUNCATION" });
            Ok(Output::Json(out))
        }
        Command::ChamberGraph { radius, format, .. } => {
            let g = cosetgraph::chamber_graph(sys, *radius, limits)?;
            Ok(match format {
                Format::Dot => Output::Text(g.to_dot(sys)),
                _ => Output::Json(g.to_json(sys)),
            })
        }
        Command::EndsEstimate { r, big_r, .. } => {
            let g = cosetgraph::chamber_graph(sys, *big_r, limits)?;
            let n = cosetgraph::ends_estimate(&g, *r, *big_r)?;
            Ok(Output::Json(json!({
                "r": r,
                "R": big_r,
                "estimate": n,
                "provenance": { "estimate": "BALL_COMPLEMENT" },
            })))
        }
    }
}

fn run_file(cmd: &Command, path: &Path, limits: &Limits) -> Result<Output, Failure> {
    let text = fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let sys = parse_system(&text)?;
    run(cmd, &sys, limits)
}

fn render(out: &Output) -> String {
    match out {
        Output::Json(v) => serde_json::to_string_pretty(v).expect("serializable") + "\n",
        Output::Text(t) => t.clone(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            // Usage errors are input errors; exit code 2 is reserved for exceeded limits.
            return ExitCode::from(1);
        }
        Err(e) => e.exit(),
    };
    let limits = cli.limits.limits();
    let input = cli.command.input();
    if !cli.each {
        return match run_file(&cli.command, input, &limits) {
            Ok(out) => {
                print!("{}", render(&out));
                ExitCode::SUCCESS
            }
            Err(f) => {
                eprintln!("weyl: {}", f.message);
                ExitCode::from(f.code)
            }
        };
    }
    let mut files: Vec<PathBuf> = match fs::read_dir(input) {
        Ok(rd) => rd
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect(),
        Err(e) => {
            eprintln!("weyl: {}: {e}", input.display());
            return ExitCode::from(1);
        }
    };
    files.sort();
    let mut code = 0u8;
    let mut combined = Map::new();
    let mut text = String::new();
    let mut any_text = false;
    for path in &files {
        let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        match run_file(&cli.command, path, &limits) {
            Ok(Output::Json(v)) => {
                combined.insert(name, v);
            }
            Ok(Output::Text(t)) => {
                any_text = true;
                text.push_str(&format!("# {name}\n{t}"));
            }
            Err(f) => {
                eprintln!("weyl: {name}: {}", f.message);
                combined.insert(name.clone(), json!({ "error": f.message, "exit_code": f.code }));
                text.push_str(&format!("# {name}: error: {}\n", f.message));
                code = code.max(f.code);
            }
        }
    }
    if any_text {
        print!("{text}");
    } else {
        print!("{}", render(&Output::Json(Value::Object(combined))));
    }
    ExitCode::from(code)
}
