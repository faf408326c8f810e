//! Command-line dispatch and report emission.
//!
//! Exit codes: 0 success, 2 usage, 3 data, 4 a verification failed,
//! 5 a structural conjecture failed (backtrack factor does not divide).

use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::acceptance::run_acceptance;
use crate::catalog::{parse_tower_file, run_identity_suite, Catalog, CatalogError, TowerDef, CHECK_GROUPS};
use crate::engine::{dv_bound, limit_report, weighted_count, Engine, EngineError, Point, Starts};
use crate::props::DEFAULT_SEED;
use crate::skew::{
    commutation_constraints, eliminate_s, eliminate_t, find_isogeny_specialization, isogeny_system_s,
    isogeny_system_t, simplify_p3_identity, SkewError,
};

pub const SCHEMA: &str = "towerforge.report/1";

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;
pub const EXIT_CONJECTURE: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "towerforge", version, about = "Exact computations on recursive towers of function fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Catalog towers.
    Towers {
        #[command(subcommand)]
        action: TowersAction,
    },
    /// Run catalog identity checks: `all`, a group, or a check id.
    Verify {
        target: String,
        #[arg(long)]
        json: bool,
    },
    /// Chains, loci, ramification and genus bounds up to a level.
    Analyze {
        /// Catalog tower id or path to a tower-definition JSON file.
        tower: String,
        #[arg(long, default_value_t = 1)]
        levels: usize,
        /// `affine`, `all`, `split` (rational locus), or comma-separated values (`b^e`, packed integers, `inf`).
        #[arg(long, default_value = "affine")]
        starts: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        csv: bool,
        /// Deepest level scanned for the ramification locus.
        #[arg(long, default_value_t = 1)]
        ramification_depth: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Count affine chains, optionally against the brute-force oracle.
    Count {
        tower: String,
        #[arg(long, default_value_t = 1)]
        levels: usize,
        #[arg(long)]
        oracle: bool,
    },
    /// Commutation constraints, isogeny equations and their eliminations.
    IsogenyDerive {
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Run acceptance criteria 1–9.
    Acceptance {
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum TowersAction {
    List {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Text,
}

/// Captured result of one invocation.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Skew(#[from] SkewError),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Engine(EngineError::BacktrackDivisionFails { .. }) => EXIT_CONJECTURE,
            CliError::Engine(EngineError::SizeExceeded(_) | EngineError::BadLevel) => EXIT_USAGE,
            _ => EXIT_DATA,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Catalog(_) => "data",
            CliError::Engine(EngineError::BacktrackDivisionFails { .. }) => "backtrack-division-fails",
            CliError::Engine(EngineError::SizeExceeded(_)) => "size-exceeded",
            CliError::Engine(_) => "engine",
            CliError::Skew(_) => "skew",
        }
    }
}

fn pretty(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn done(stdout: String, code: i32) -> Result<Output, CliError> {
    Ok(Output { stdout, stderr: String::new(), code })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { stdout: text, stderr: String::new(), code }
            } else {
                Output { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => Output {
            stdout: String::new(),
            stderr: serde_json::to_string(&json!({"error": e.kind(), "message": e.to_string(), "exit": e.code()})).unwrap()
                + "\n",
            code: e.code(),
        },
    }
}

fn dispatch(cmd: Command) -> Result<Output, CliError> {
    match cmd {
        Command::Towers { action: TowersAction::List { json } } => towers_list(json),
        Command::Verify { target, json } => verify(&target, json),
        Command::Analyze { tower, levels, starts, format, json, csv, ramification_depth, seed } => {
            let format = if csv {
                Format::Csv
            } else if json {
                Format::Json
            } else {
                format
            };
            analyze(&tower, levels, &starts, format, ramification_depth, seed)
        }
        Command::Count { tower, levels, oracle } => count(&tower, levels, oracle),
        Command::IsogenyDerive { q, emit } => isogeny_derive(q, emit),
        Command::Acceptance { json, seed } => acceptance(json, seed),
    }
}

fn load_tower(cat: &Catalog, name: &str) -> Result<TowerDef, CliError> {
    if cat.tower_ids().any(|id| id == name) {
        return Ok(cat.tower(name)?);
    }
    let p = Path::new(name);
    if p.exists() {
        return Ok(parse_tower_file(p)?);
    }
    Err(CliError::Usage(format!("unknown tower {name:?}: neither a catalog id nor a file")))
}

fn towers_list(as_json: bool) -> Result<Output, CliError> {
    let cat = Catalog::load_default()?;
    let mut rows = Vec::new();
    for id in cat.tower_ids() {
        let t = cat.tower(id)?;
        rows.push(json!({
            "id": id,
            "kind": t.kind_name(),
            "field": t.field.label(),
            "step_degrees": [t.step_degree(1), t.step_degree(2)],
            "notes": t.notes,
        }));
    }
    if as_json {
        return done(pretty(&json!({"schema": SCHEMA, "towers": rows})), 0);
    }
    let mut s = String::new();
    for r in &rows {
        s += &format!(
            "{:<14} {:<15} {:<10} degrees {}  {}\n",
            r["id"].as_str().unwrap(),
            r["kind"].as_str().unwrap(),
            r["field"].as_str().unwrap(),
            r["step_degrees"],
            r["notes"].as_str().unwrap()
        );
    }
    done(s, 0)
}

fn verify(target: &str, as_json: bool) -> Result<Output, CliError> {
    let cat = Catalog::load_default()?;
    let results = if target == "all" {
        run_identity_suite(&cat, None)
    } else if CHECK_GROUPS.contains(&target) {
        run_identity_suite(&cat, Some(&[target]))
    } else {
        let r: Vec<_> = run_identity_suite(&cat, None).into_iter().filter(|c| c.id == target || c.id.starts_with(&format!("{target}/"))).collect();
        if r.is_empty() {
            return Err(CliError::Usage(format!("unknown check or group {target:?}; groups: all, {}", CHECK_GROUPS.join(", "))));
        }
        r
    };
    let passed = results.iter().all(|c| c.passed);
    let code = if passed { 0 } else { EXIT_VERIFY };
    if as_json {
        let checks: Vec<Value> = results.iter().map(|c| json!({"id": c.id, "passed": c.passed, "detail": c.detail})).collect();
        let failed = results.iter().filter(|c| !c.passed).count();
        let v = json!({
            "schema": SCHEMA,
            "config": {"command": "verify", "target": target},
            "checks": checks,
            "summary": {"total": results.len(), "failed": failed, "passed": passed},
        });
        return done(pretty(&v), code);
    }
    let mut s = String::new();
    for c in &results {
        s += &format!("{:<36} {}  {}\n", c.id, if c.passed { "ok  " } else { "FAIL" }, c.detail);
    }
    s += &format!("{} checks, {} failed\n", results.len(), results.iter().filter(|c| !c.passed).count());
    done(s, code)
}

fn parse_starts(e: &Engine, spec: &str, n: usize) -> Result<(Starts, String), CliError> {
    Ok(match spec {
        "affine" => (Starts::Affine, spec.into()),
        "all" => (Starts::All, spec.into()),
        "split" => (Starts::Values(e.rational_locus(n, &Starts::Affine)?), spec.into()),
        list => {
            let pts = list
                .split(',')
                .map(|s| e.parse_point(s).ok_or_else(|| CliError::Usage(format!("bad start value {s:?}"))))
                .collect::<Result<Vec<Point>, _>>()?;
            (Starts::Values(pts), list.into())
        }
    })
}

#[derive(Serialize)]
struct LevelRow {
    level: usize,
    chains: usize,
    split_chains: u64,
    places_lower: u64,
    genus_upper: Option<i64>,
    genus_sharp: Option<i64>,
    ratio: Option<String>,
}

fn analyze(tower: &str, levels: usize, starts: &str, format: Format, ram_depth: usize, seed: u64) -> Result<Output, CliError> {
    if levels == 0 {
        return Err(CliError::Usage("--levels must be at least 1".into()));
    }
    let cat = Catalog::load_default()?;
    let e = Engine::new(load_tower(&cat, tower)?);
    let (st, st_label) = parse_starts(&e, starts, levels)?;
    let start_labels: Vec<String> = match &st {
        Starts::Values(v) => v.iter().map(|p| e.label(*p)).collect(),
        _ => Vec::new(),
    };
    let (genus, genus_note) = match limit_report(&e, levels) {
        Ok(rows) => (Some(rows), Value::Null),
        Err(EngineError::NoGenusRecipe(id)) => (None, json!(format!("no genus recipe for tower {id}"))),
        Err(err) => return Err(err.into()),
    };
    let mut rows = Vec::new();
    for n in 1..=levels {
        let chains = e.enumerate_chains(n, &st)?;
        let w = weighted_count(&chains);
        let g = genus.as_ref().map(|g| &g[n - 1]);
        rows.push(LevelRow {
            level: n,
            chains: chains.len(),
            split_chains: w,
            places_lower: w,
            genus_upper: g.map(|g| g.genus_upper),
            genus_sharp: g.map(|g| g.genus_sharp),
            ratio: g.map(|g| format!("{}/{}", w, g.genus_upper)),
        });
    }
    let locus: Vec<String> = e.splitting_locus(levels, &Starts::All)?.iter().map(|p| e.label(*p)).collect();
    let ram: Vec<Value> = e
        .ramification_locus(ram_depth.min(levels))?
        .into_iter()
        .map(|(base, r)| {
            json!({
                "base": base,
                "level": r.level,
                "context": r.context,
                "pattern": r.pattern(),
                "infinity_mult": r.infinity_mult,
                "degree_drop": r.degree_drop,
                "squarefree": r.squarefree,
            })
        })
        .collect();
    let last = rows.last().unwrap();
    let def = e.def();
    let report = json!({
        "schema": SCHEMA,
        "config": {"command": "analyze", "tower": tower, "levels": levels, "starts": st_label, "ramification_depth": ram_depth, "seed": seed},
        "tower": {
            "id": def.id,
            "kind": def.kind_name(),
            "field": def.field.label(),
            "step_degrees": (1..=levels).map(|l| def.step_degree(l)).collect::<Vec<_>>(),
        },
        "level": levels,
        "start_values": start_labels,
        "chains": last.chains,
        "split_chains": last.split_chains,
        "places_lower": last.places_lower,
        "genus_upper": last.genus_upper,
        "genus_sharp": last.genus_sharp,
        "genus_exact_level1": genus.as_ref().and_then(|g| g[0].genus_exact),
        "genus_note": genus_note,
        "ratio": last.ratio,
        "dv_bound": dv_bound(def.field.order()),
        "splitting_locus": locus,
        "ramification": ram,
        "levels": rows,
    });
    let out = match format {
        Format::Json => pretty(&report),
        Format::Csv => {
            let mut s = String::from("tower,level,chains,split_chains,places_lower,genus_upper,genus_sharp,ratio\n");
            for r in &rows {
                let opt = |x: Option<i64>| x.map_or(String::new(), |x| x.to_string());
                s += &format!(
                    "{},{},{},{},{},{},{},{}\n",
                    def.id,
                    r.level,
                    r.chains,
                    r.split_chains,
                    r.places_lower,
                    opt(r.genus_upper),
                    opt(r.genus_sharp),
                    r.ratio.clone().unwrap_or_default()
                );
            }
            s
        }
        Format::Text => {
            let mut s = format!("{} over {} ({}), starts {}\n", def.id, def.field.label(), def.kind_name(), st_label);
            s += "level    chains  split  genus<=  ratio\n";
            for r in &rows {
                s += &format!(
                    "{:>5} {:>9} {:>6} {:>8}  {}\n",
                    r.level,
                    r.chains,
                    r.split_chains,
                    r.genus_upper.map_or("-".into(), |g| g.to_string()),
                    r.ratio.clone().unwrap_or_else(|| "-".into())
                );
            }
            s += &format!("splitting locus at level {levels}: {}\n", locus.len());
            s += &format!("ramified fibers up to level {}: {}\n", ram_depth.min(levels), ram.len());
            s
        }
    };
    done(out, 0)
}

fn count(tower: &str, levels: usize, oracle: bool) -> Result<Output, CliError> {
    if levels == 0 {
        return Err(CliError::Usage("--levels must be at least 1".into()));
    }
    let cat = Catalog::load_default()?;
    let e = Engine::new(load_tower(&cat, tower)?);
    let engine = e.enumerate_chains(levels, &Starts::Affine)?.len() as u64;
    let oracle = if oracle { Some(e.oracle_count(levels)?) } else { None };
    let equal = oracle.map(|o| o == engine);
    let v = json!({
        "schema": SCHEMA,
        "config": {"command": "count", "tower": tower, "levels": levels},
        "engine": engine,
        "oracle": oracle,
        "equal": equal,
    });
    done(pretty(&v), if equal == Some(false) { EXIT_VERIFY } else { 0 })
}

fn isogeny_derive(q: u64, emit: Emit) -> Result<Output, CliError> {
    if q != 2 {
        return Err(CliError::Usage(format!("isogeny derivation is implemented for q = 2, not {q}")));
    }
    let c = commutation_constraints(q)?;
    let fmt_all = |v: &[crate::poly::SparsePoly<crate::poly::GfRing>]| v.iter().map(|p| p.format()).collect::<Vec<_>>();
    let eqs = |v: Vec<(crate::poly::SparsePoly<crate::poly::GfRing>, crate::poly::SparsePoly<crate::poly::GfRing>)>| {
        v.iter().map(|(l, r)| format!("{} = {}", l.format(), r.format())).collect::<Vec<_>>()
    };
    let p3: Vec<Value> = simplify_p3_identity()?.iter().map(|i| json!({"name": i.name, "holds": i.holds})).collect();
    let (spec, seen) = find_isogeny_specialization(&[1, 2, 4, 5], 3)?;
    let v = json!({
        "schema": SCHEMA,
        "config": {"command": "isogeny-derive", "q": q},
        "curve_constraints": fmt_all(&c.curve),
        "commute_constraints": fmt_all(&c.commute),
        "p3_identities": p3,
        "isogeny_t": eqs(isogeny_system_t(q)?),
        "isogeny_s": eqs(isogeny_system_s(q)?),
        "eliminated_t": eliminate_t(q)?.format(),
        "eliminated_s": eliminate_s(q)?.format(),
        "specialization": spec.as_ref().map(|s| json!({"field": s.field, "gcd_degree": s.gcd_degree(), "point": s.formatted})),
        "parameter_points_seen": seen,
    });
    let out = match emit {
        Emit::Json => pretty(&v),
        Emit::Text => {
            let mut s = String::new();
            for key in ["curve_constraints", "commute_constraints", "isogeny_t", "isogeny_s"] {
                s += &format!("{key}:\n");
                for line in v[key].as_array().unwrap() {
                    s += &format!("  {}\n", line.as_str().unwrap());
                }
            }
            s += &format!("eliminated_t: {}\neliminated_s: {}\n", v["eliminated_t"].as_str().unwrap(), v["eliminated_s"].as_str().unwrap());
            s += &format!("specialization: {}\n", v["specialization"]);
            s
        }
    };
    done(out, 0)
}

fn acceptance(as_json: bool, seed: u64) -> Result<Output, CliError> {
    let cat = Catalog::load_default()?;
    let rs = run_acceptance(&cat, seed);
    let passed = rs.iter().all(|c| c.passed);
    let code = if passed { 0 } else { EXIT_VERIFY };
    if as_json {
        let v = json!({
            "schema": SCHEMA,
            "config": {"command": "acceptance", "seed": seed},
            "criteria": rs,
            "summary": {"passed": rs.iter().filter(|c| c.passed).count(), "total": rs.len()},
        });
        return done(pretty(&v), code);
    }
    let mut s: String = rs.iter().map(|c| c.line() + "\n").collect();
    s += &format!("{}/{} criteria pass\n", rs.iter().filter(|c| c.passed).count(), rs.len());
    done(s, code)
}
