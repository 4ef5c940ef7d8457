//! Command-line front end for `permpoly`.
//!
//! Every command builds a serializable report; JSON is the canonical output
//! and the table format is a flattened rendering of the same JSON value.
//!
//! Exit codes: 0 success, 1 usage, 2 parse error, 3 cap exceeded,
//! 4 invariant or theorem violation.

use std::fmt;
use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use permpoly::catalog::CATALOG_NAMES;
use permpoly::indecomp::{self, Factorizer, DEFAULT_MAX_CYCLES};
use permpoly::mixing::{self, ExactLimits, Mode, SlowFamily};
use permpoly::polytope::{self, PolytopeGraph};
use permpoly::{CatalogEntry, Error, GroupSpec, Permutation, PermutationGroup, DEFAULT_ORDER_CAP};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "permpoly", version, about = "Analyze permutation polytopes P(G)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Largest group order that will be enumerated.
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP, global = true)]
    pub cap: usize,

    /// Largest number of nontrivial cycles for subset enumeration.
    #[arg(long, default_value_t = DEFAULT_MAX_CYCLES, global = true)]
    pub max_cycles: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WalkMode {
    Exact,
    Float,
    MonteCarlo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Gp,
    Wreath,
}

#[derive(Debug, Args)]
pub struct SpecArg {
    /// Group spec file (TOML), or `catalog:<entry>` such as `catalog:symmetric(4)`.
    pub spec: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report: orbits, indecomposables, factorization length, dimension, diameter.
    Analyze {
        #[command(flatten)]
        spec: SpecArg,
        /// Include wall-clock timings (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Smallest face containing two elements.
    Face {
        #[command(flatten)]
        spec: SpecArg,
        g: String,
        h: String,
    },
    /// Shortest factorization into nontrivial indecomposables.
    Decompose {
        #[command(flatten)]
        spec: SpecArg,
        g: String,
    },
    /// List the indecomposable elements.
    Indecomposables {
        #[command(flatten)]
        spec: SpecArg,
    },
    /// Diameter of the edge graph.
    Diameter {
        #[command(flatten)]
        spec: SpecArg,
    },
    /// Exact dimension with its orbit bound.
    Dimension {
        #[command(flatten)]
        spec: SpecArg,
    },
    /// Edge graph as an adjacency list with a legend.
    Graph {
        #[command(flatten)]
        spec: SpecArg,
    },
    /// Random walk generated by the indecomposables.
    Mixing {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
        #[arg(long, value_enum, default_value_t = WalkMode::Float)]
        mode: WalkMode,
        /// Monte Carlo trials.
        #[arg(long, default_value_t = 1_000_000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Generators (cycle notation) of a subgroup whose mass is tracked.
        #[arg(long = "subgroup")]
        subgroup: Vec<String>,
        /// Largest group order for exact mode.
        #[arg(long, default_value_t = 2000)]
        exact_max_order: usize,
        /// Largest number of steps for exact mode.
        #[arg(long, default_value_t = 12)]
        exact_max_steps: usize,
    },
    /// Slow-mixing family report.
    Family {
        #[arg(value_enum)]
        family: FamilyName,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
        #[arg(long, default_value_t = 2000)]
        exact_max_order: usize,
        #[arg(long, default_value_t = 12)]
        exact_max_steps: usize,
    },
    /// List catalog entries or emit a group spec.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    /// Emit a spec file, e.g. `emit dihedral4_power 2` or `emit "direct_product(cyclic(3),cyclic(4))"`.
    Emit { name: String, params: Vec<String> },
}

/// A failure with its process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
    /// Report still printed to stdout when a check fails.
    pub report: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl CliError {
    fn violation(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_VIOLATION,
            message: message.into(),
            report: String::new(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Malformed(_)
            | Error::PointOutOfRange { .. }
            | Error::RepeatedPoint(_)
            | Error::NotBijection(_)
            | Error::DegreeMismatch { .. }
            | Error::Spec(_) => EXIT_PARSE,
            Error::CapExceeded { .. } | Error::ExactCapExceeded { .. } | Error::TooManyCycles { .. } => EXIT_CAP,
            Error::TheoremViolation(_) => EXIT_VIOLATION,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
            report: String::new(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.code,
            stdout: e.report.clone(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn execute(cli: &Cli) -> CliResult<String> {
    let render = |value: Value| -> String {
        match cli.format {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("json")),
            Format::Table => table(&value),
        }
    };
    let load = |spec: &SpecArg| load_group(&spec.spec, cli.cap);
    let to_value = |v: &dyn erased::Serialize| erased::to_value(v);

    match &cli.command {
        Command::Analyze { spec, timing } => {
            let (spec, group) = load(spec)?;
            let report = analyze(&spec, &group, cli.max_cycles, *timing)?;
            Ok(render(to_value(&report)))
        }
        Command::Face { spec, g, h } => {
            let (_, group) = load(spec)?;
            let g = Permutation::parse(g, group.degree())?;
            let h = Permutation::parse(h, group.degree())?;
            let face = polytope::smallest_face_with(&group, &g, &h, cli.max_cycles)?;
            let report = FaceReport {
                g: g.to_string(),
                h: h.to_string(),
                vertices: face.vertex_indices.iter().map(|&i| group.element(i).to_string()).collect(),
                vertex_indices: face.vertex_indices.clone(),
                vertex_count: face.vertex_indices.len(),
                affine_dim: face.affine_dim,
                is_edge: face.vertex_indices.len() == 2,
            };
            Ok(render(to_value(&report)))
        }
        Command::Decompose { spec, g } => {
            let (_, group) = load(spec)?;
            let g = Permutation::parse(g, group.degree())?;
            group.index_of(&g).ok_or_else(|| Error::NotMember(g.to_string()))?;
            let set = indecomp::indecomposable_set_with(&group, cli.max_cycles)?;
            let factors = Factorizer::new(&group, set).decompose_min(&g)?;
            let bound = polytope::diameter_bound(&group);
            if factors.len() > bound {
                return Err(CliError::violation(format!(
                    "factorization length {} exceeds min(2t, n/2) = {bound}",
                    factors.len()
                )));
            }
            let report = DecomposeReport {
                element: g.to_string(),
                length: factors.len(),
                factors: factors.iter().map(Permutation::to_string).collect(),
                bound,
            };
            Ok(render(to_value(&report)))
        }
        Command::Indecomposables { spec } => {
            let (_, group) = load(spec)?;
            let set = indecomp::indecomposable_set_with(&group, cli.max_cycles)?;
            let report = IndecomposablesReport {
                order: group.order(),
                count: set.len(),
                elements: set.members().iter().map(|&i| group.element(i).to_string()).collect(),
            };
            Ok(render(to_value(&report)))
        }
        Command::Diameter { spec } => {
            let (_, group) = load(spec)?;
            let set = indecomp::indecomposable_set_with(&group, cli.max_cycles)?;
            let graph = PolytopeGraph::new(&group, set);
            let report = DiameterReport {
                diameter: graph.diameter(),
                bound: polytope::diameter_bound(&group),
                profile: graph.eccentricity_profile(),
            };
            if report.diameter > report.bound {
                return Err(CliError::violation(format!(
                    "diameter {} exceeds min(2t, n/2) = {}",
                    report.diameter, report.bound
                )));
            }
            Ok(render(to_value(&report)))
        }
        Command::Dimension { spec } => {
            let (_, group) = load(spec)?;
            let bounds = polytope::dimension_bounds(&group)?;
            if bounds.dimension > bounds.upper {
                return Err(CliError::violation(format!(
                    "dimension {} exceeds (n - t)^2 = {}",
                    bounds.dimension, bounds.upper
                )));
            }
            let report = DimensionReport {
                simplex: bounds.dimension + 1 == group.order(),
                bounds,
            };
            Ok(render(to_value(&report)))
        }
        Command::Graph { spec } => {
            let (_, group) = load(spec)?;
            let set = indecomp::indecomposable_set_with(&group, cli.max_cycles)?;
            Ok(PolytopeGraph::new(&group, set).export_adjacency())
        }
        Command::Mixing {
            spec,
            kmax,
            mode,
            trials,
            seed,
            subgroup,
            exact_max_order,
            exact_max_steps,
        } => {
            let (_, group) = load(spec)?;
            let limits = ExactLimits {
                max_order: *exact_max_order,
                max_steps: *exact_max_steps,
            };
            let value = mixing_report(&group, cli.max_cycles, *kmax, *mode, *trials, *seed, subgroup, limits)?;
            Ok(render(value))
        }
        Command::Family {
            family,
            p,
            q,
            r,
            kmax,
            exact_max_order,
            exact_max_steps,
        } => {
            let family = match family {
                FamilyName::Gp => SlowFamily::Gp { p: *p },
                FamilyName::Wreath => SlowFamily::Wreath {
                    p: *p,
                    q: q.ok_or_else(|| usage("wreath needs --q"))?,
                    r: r.ok_or_else(|| usage("wreath needs --r"))?,
                },
            };
            let limits = ExactLimits {
                max_order: *exact_max_order,
                max_steps: *exact_max_steps,
            };
            let report = mixing::slow_family_report(family, *kmax, limits)?;
            let text = render(to_value(&report));
            if !report.all_inequalities_hold || !report.fraction_below_bound {
                return Err(CliError {
                    code: EXIT_VIOLATION,
                    message: format!("{} report: a checked inequality fails (see report)", report.family),
                    report: text,
                });
            }
            Ok(text)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let entries: Vec<CatalogListing> = CATALOG_NAMES
                    .iter()
                    .map(|(name, params)| CatalogListing { name, params })
                    .collect();
                Ok(render(to_value(&entries)))
            }
            CatalogAction::Emit { name, params } => {
                let entry = if params.is_empty() && name.contains('(') {
                    CatalogEntry::parse(name)?
                } else {
                    CatalogEntry::from_parts(name, params)?
                };
                Ok(entry.spec().to_toml())
            }
        },
    }
}

fn usage(message: &str) -> CliError {
    CliError {
        code: EXIT_USAGE,
        message: message.to_string(),
        report: String::new(),
    }
}

/// Loads a spec file, or a catalog entry given as `catalog:<entry>`.
pub fn load_group(source: &str, cap: usize) -> CliResult<(GroupSpec, PermutationGroup)> {
    let spec = match source.strip_prefix("catalog:") {
        Some(entry) => CatalogEntry::parse(entry)
            .map_err(|e| CliError {
                code: EXIT_PARSE,
                message: e.to_string(),
                report: String::new(),
            })?
            .spec(),
        None => {
            let text = std::fs::read_to_string(Path::new(source)).map_err(|e| CliError {
                code: EXIT_PARSE,
                message: format!("cannot read {source}: {e}"),
                report: String::new(),
            })?;
            GroupSpec::from_toml(&text)?
        }
    };
    let group = spec.build(cap)?;
    Ok((spec, group))
}

#[derive(Debug, Serialize)]
struct CatalogListing {
    name: &'static str,
    params: &'static str,
}

#[derive(Debug, Serialize)]
pub struct FaceReport {
    pub g: String,
    pub h: String,
    pub vertices: Vec<String>,
    pub vertex_indices: Vec<usize>,
    pub vertex_count: usize,
    pub affine_dim: usize,
    pub is_edge: bool,
}

#[derive(Debug, Serialize)]
pub struct DecomposeReport {
    pub element: String,
    pub length: usize,
    pub factors: Vec<String>,
    pub bound: usize,
}

#[derive(Debug, Serialize)]
pub struct IndecomposablesReport {
    pub order: usize,
    pub count: usize,
    pub elements: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct DiameterReport {
    pub diameter: usize,
    pub bound: usize,
    pub profile: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct DimensionReport {
    #[serde(flatten)]
    pub bounds: polytope::DimensionBounds,
    pub simplex: bool,
}

#[derive(Debug, Serialize)]
pub struct GroupIdentity {
    pub name: Option<String>,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct OrbitData {
    pub t_all: usize,
    pub t_nontrivial: usize,
    pub transitive: bool,
    pub two_transitive: bool,
    /// `null` for intransitive groups.
    pub primitive: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct FactorizationData {
    pub max_length: usize,
    /// `min{2t, floor(n/2)}`
    pub bound: usize,
}

#[derive(Debug, Serialize)]
pub struct PolytopeData {
    pub dimension: usize,
    /// `(n - t)^2`
    pub dimension_bound: usize,
    pub simplex: bool,
    pub diameter: usize,
    /// `min{2t, floor(n/2)}`
    pub diameter_bound: usize,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub indecomposables_ms: u128,
    pub graph_ms: u128,
    pub dimension_ms: u128,
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub group: GroupIdentity,
    pub orbits: OrbitData,
    pub indecomposable_count: usize,
    pub factorization: FactorizationData,
    pub polytope: PolytopeData,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl AnalysisReport {
    /// Every bound field against its measured value; `Err` names the first violation.
    pub fn check(&self) -> std::result::Result<(), String> {
        let n = self.group.degree;
        if self.factorization.max_length > self.factorization.bound {
            return Err(format!(
                "max factorization length {} exceeds {}",
                self.factorization.max_length, self.factorization.bound
            ));
        }
        if self.polytope.diameter > self.polytope.diameter_bound {
            return Err(format!(
                "diameter {} exceeds {}",
                self.polytope.diameter, self.polytope.diameter_bound
            ));
        }
        if self.orbits.transitive && self.polytope.diameter > 2 {
            return Err(format!("transitive group with diameter {}", self.polytope.diameter));
        }
        if self.polytope.dimension > self.polytope.dimension_bound {
            return Err(format!(
                "dimension {} exceeds (n - t)^2 = {}",
                self.polytope.dimension, self.polytope.dimension_bound
            ));
        }
        let full = n > 0 && self.polytope.dimension == (n - 1) * (n - 1);
        if full != self.orbits.two_transitive {
            return Err(format!(
                "dimension {} vs (n-1)^2 = {} disagrees with 2-transitivity {}",
                self.polytope.dimension,
                (n.max(1) - 1).pow(2),
                self.orbits.two_transitive
            ));
        }
        if self.polytope.simplex != (self.polytope.dimension + 1 == self.group.order) {
            return Err("simplex flag inconsistent with dimension".into());
        }
        Ok(())
    }
}

pub fn analyze(spec: &GroupSpec, group: &PermutationGroup, max_cycles: usize, timing: bool) -> CliResult<AnalysisReport> {
    let orbits = group.orbits();
    let transitive = orbits.t_all <= 1;
    let n = group.degree();
    let two_transitive = n < 2 || group.is_k_transitive(2)?;
    let primitive = if transitive { Some(group.is_primitive()?) } else { None };

    let t0 = Instant::now();
    let set = indecomp::indecomposable_set_with(group, max_cycles)?;
    let t1 = Instant::now();
    let indecomposable_count = set.len();
    let graph = PolytopeGraph::new(group, set);
    let diameter = graph.diameter();
    let t2 = Instant::now();
    let dimension = polytope::dimension(group);
    let t3 = Instant::now();
    let bound = polytope::diameter_bound(group);

    let report = AnalysisReport {
        group: GroupIdentity {
            name: spec.name.clone(),
            degree: n,
            order: group.order(),
            generators: group.generators().iter().map(Permutation::to_string).collect(),
        },
        orbits: OrbitData {
            t_all: orbits.t_all,
            t_nontrivial: orbits.t_nontrivial,
            transitive,
            two_transitive,
            primitive,
        },
        indecomposable_count,
        // the longest minimal factorization is the word-length radius, i.e. the diameter
        factorization: FactorizationData {
            max_length: diameter,
            bound,
        },
        polytope: PolytopeData {
            dimension,
            dimension_bound: (n - orbits.t_all).pow(2),
            simplex: dimension + 1 == group.order(),
            diameter,
            diameter_bound: bound,
        },
        timing: timing.then(|| Timing {
            indecomposables_ms: (t1 - t0).as_millis(),
            graph_ms: (t2 - t1).as_millis(),
            dimension_ms: (t3 - t2).as_millis(),
        }),
    };
    report.check().map_err(CliError::violation)?;
    Ok(report)
}

#[derive(Debug, Serialize)]
struct MonteCarloReport {
    mode: &'static str,
    order: usize,
    s_size: usize,
    k: usize,
    trials: usize,
    seed: u64,
    tv_to_uniform: f64,
    tv_to_exact: f64,
    tolerance: f64,
    within_tolerance: bool,
}

#[derive(Debug, Serialize)]
struct CosetRow {
    k: usize,
    d: f64,
    subgroup_mass: f64,
}

#[allow(clippy::too_many_arguments)]
fn mixing_report(
    group: &PermutationGroup,
    max_cycles: usize,
    kmax: usize,
    mode: WalkMode,
    trials: usize,
    seed: u64,
    subgroup: &[String],
    limits: ExactLimits,
) -> CliResult<Value> {
    let set = indecomp::indecomposable_set_with(group, max_cycles)?;
    match mode {
        WalkMode::MonteCarlo => {
            let empirical = mixing::monte_carlo_walk(group, &set, kmax, trials, seed)?;
            let exact = mixing::walk_distribution(group, &set, kmax, Mode::Float)?;
            let tv_to_exact = mixing::tv_between(&empirical, &exact);
            let tolerance = mixing::monte_carlo_tolerance(group.order(), trials);
            Ok(erased::to_value(&MonteCarloReport {
                mode: "monte-carlo",
                order: group.order(),
                s_size: set.len(),
                k: kmax,
                trials,
                seed,
                tv_to_uniform: empirical.tv_distance(),
                tv_to_exact,
                tolerance,
                within_tolerance: tv_to_exact <= tolerance,
            }))
        }
        WalkMode::Exact | WalkMode::Float => {
            let mode = if mode == WalkMode::Exact { Mode::Exact } else { Mode::Float };
            let curve = mixing::mixing_curve(group, &set, kmax, mode, limits)?;
            let mut value = erased::to_value(&curve);
            if !subgroup.is_empty() {
                let gens = subgroup
                    .iter()
                    .map(|g| Permutation::parse(g, group.degree()))
                    .collect::<permpoly::Result<Vec<_>>>()?;
                let h = group.subgroup_indices(&gens)?;
                let mut dist = mixing::Distribution::point_mass(group.order(), 0, mode)?;
                let mut rows = Vec::new();
                for k in 0..=kmax {
                    if k > 0 {
                        dist = dist.evolve(group, &set)?;
                    }
                    rows.push(CosetRow {
                        k,
                        d: dist.tv_distance(),
                        subgroup_mass: dist.coset_mass(&h)?,
                    });
                }
                value["subgroup_order"] = Value::from(h.len());
                value["subgroup_mass"] = erased::to_value(&rows);
            }
            Ok(value)
        }
    }
}

mod erased {
    use serde_json::Value;

    pub trait Serialize {
        fn value(&self) -> Value;
    }

    impl<T: serde::Serialize> Serialize for T {
        fn value(&self) -> Value {
            serde_json::to_value(self).expect("report serializes")
        }
    }

    pub fn to_value(v: &dyn Serialize) -> Value {
        v.value()
    }
}

/// Flattens a JSON value into `path: value` lines.
pub fn table(value: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        match v {
            Value::Object(map) => {
                for (k, child) in map {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, child, out);
                }
            }
            Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
                let parts: Vec<String> = items.iter().map(scalar).collect();
                out.push((prefix.to_string(), parts.join(" ")));
            }
            Value::Array(items) => {
                for (i, child) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), child, out);
                }
            }
            other => out.push((prefix.to_string(), scalar(other))),
        }
    }
    fn scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            Value::Null => "n/a".into(),
            other => other.to_string(),
        }
    }
    let mut rows = Vec::new();
    walk("", value, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(args: &[&str]) -> Value {
        let mut full = vec!["permpoly"];
        full.extend_from_slice(args);
        let out = run(full);
        assert_eq!(out.code, 0, "{}", out.stderr);
        serde_json::from_str(&out.stdout).unwrap()
    }

    #[test]
    fn analyze_s4() {
        let v = ok(&["analyze", "catalog:symmetric(4)"]);
        assert_eq!(v["group"]["order"], 24);
        assert_eq!(v["polytope"]["dimension"], 9);
        assert_eq!(v["polytope"]["diameter"], 2);
        assert_eq!(v["indecomposable_count"], 21);
        assert_eq!(v["orbits"]["primitive"], true);
        assert!(v.get("timing").is_none());
    }

    #[test]
    fn analyze_gp5() {
        let v = ok(&["analyze", "catalog:mixing_example_gp(5)"]);
        assert_eq!(v["group"]["order"], 50);
        assert_eq!(v["orbits"]["t_all"], 1);
        assert!(v["polytope"]["diameter"].as_u64().unwrap() <= 2);
    }

    #[test]
    fn intransitive_primitive_is_null() {
        let v = ok(&["analyze", "catalog:dihedral4_power(2)"]);
        assert_eq!(v["orbits"]["primitive"], Value::Null);
        assert_eq!(v["polytope"]["diameter"], 4);
        assert_eq!(v["factorization"]["bound"], 4);
    }

    #[test]
    fn report_check_catches_violations() {
        let (spec, group) = load_group("catalog:symmetric(4)", 1000).unwrap();
        let mut report = analyze(&spec, &group, 24, false).unwrap();
        assert!(report.check().is_ok());
        report.polytope.diameter = 3;
        assert!(report.check().is_err());
    }

    #[test]
    fn table_flattening() {
        let v: Value = serde_json::json!({"a": 1, "b": {"c": [1, 2]}, "d": [{"e": null}]});
        assert_eq!(table(&v), "a       1\nb.c     1 2\nd[0].e  n/a\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["permpoly"]).code, EXIT_USAGE);
        assert_eq!(run(["permpoly", "bogus"]).code, EXIT_USAGE);
        assert_eq!(run(["permpoly", "--help"]).code, 0);
        assert_eq!(run(["permpoly", "analyze", "catalog:nope(3)"]).code, EXIT_PARSE);
        assert_eq!(run(["permpoly", "analyze", "/nonexistent/spec.toml"]).code, EXIT_PARSE);
        assert_eq!(run(["permpoly", "--cap", "10", "analyze", "catalog:symmetric(4)"]).code, EXIT_CAP);
        assert_eq!(run(["permpoly", "decompose", "catalog:cyclic(4)", "(1 2)"]).code, EXIT_USAGE);
        assert_eq!(run(["permpoly", "decompose", "catalog:cyclic(4)", "(1 2"]).code, EXIT_PARSE);
        assert_eq!(
            run(["permpoly", "mixing", "catalog:symmetric(4)", "--mode", "exact", "--kmax", "20"]).code,
            EXIT_CAP
        );
    }
}
