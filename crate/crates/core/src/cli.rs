//! Command-line front end.
//!
//! Data goes to stdout (or `--output`), diagnostics to stderr. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success; `land`: landed; `audit`: satisfied |
//! | 1 | I/O failure |
//! | 2 | parse error or violated precondition |
//! | 3 | `land`: not converged or pullback escaped |
//! | 4 | `land`: singular hit |
//! | 5 | `audit`: inequality violated |
//! | 6 | `audit`: not applicable |
//!
//! Values come from flags, then a `key = value` config file, then built-in
//! defaults; the thread count also falls back to `RAYCENSUS_THREADS`. The
//! resolved configuration is embedded in every JSON report.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;

use crate::census::{audit, to_csv, AuditConfig, Tolerances, Verdict};
use crate::cycles::{find_cycles, Cycle, CycleSearchOptions};
use crate::geometry::SearchBox;
use crate::map::MapModel;
use crate::rays::{landing_point, trace_ray, LandingOptions, LandingStatus, RayError};
use crate::regions::{build_ray_graph, interior_fixed_point_audit, SeparationAudit, Star};
use crate::report::{fmt_f64, ser_c64, to_canonical_json};
use crate::symbolic::InfiniteAddress;
use crate::tails::{MappingCheck, TailContext, TailContextSummary, TailLevelReport};

pub const THREADS_ENV: &str = "RAYCENSUS_THREADS";

const DEFAULT_BOX: [f64; 4] = [-3.0, 3.0, -7.0, 7.0];
const DEFAULT_T_SAMPLES: usize = 200;

#[derive(Debug, Parser)]
#[command(name = "raycensus", version, about = "Dynamic rays, cycles and the singular-orbit census for e^z + c")]
struct Cli {
    #[command(flatten)]
    common: CommonArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Parameter c as `re,im`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    c: Option<String>,
    /// Search box `re_min,re_max,im_min,im_max`.
    #[arg(long = "box", global = true, allow_hyphen_values = true)]
    search_box: Option<String>,
    #[arg(long, global = true)]
    max_period: Option<usize>,
    /// Address entries range over `[-window, window]`.
    #[arg(long, global = true)]
    window: Option<u32>,
    #[arg(long, global = true)]
    depth: Option<usize>,
    #[arg(long, global = true)]
    horizon: Option<usize>,
    /// Seeds per box side in the cycle search.
    #[arg(long, global = true)]
    grid: Option<usize>,
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true)]
    tol_band: Option<f64>,
    #[arg(long, global = true)]
    landing_tol: Option<f64>,
    #[arg(long, global = true)]
    match_tol: Option<f64>,
    /// Worker threads; falls back to RAYCENSUS_THREADS, then the core count.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// `key = value` file with defaults for the flags above.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write data here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample a ray as CSV `t,re,im`.
    TraceRay {
        #[arg(long, allow_hyphen_values = true)]
        address: String,
        /// Potential range `t_min:t_max[:samples]`, geometrically spaced.
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Landing point of a periodic ray.
    Land {
        #[arg(long, allow_hyphen_values = true)]
        address: String,
    },
    /// Periodic cycles in the box.
    Cycles,
    /// The ray graph for `f^p` and the regions of its complement.
    Regions {
        #[arg(long, default_value_t = 1)]
        p: usize,
        /// Points `re,im` to locate; repeatable.
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// Tails and pieces around a repelling cycle.
    Tails {
        /// A point of the cycle, `re,im`; polished by Newton.
        #[arg(long, allow_hyphen_values = true)]
        cycle: String,
        #[arg(long, default_value_t = 1)]
        period: usize,
        /// Regions are taken for `f^p`; defaults to the cycle period.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        address: String,
        #[arg(long, default_value_t = 10)]
        levels: usize,
        #[arg(long, default_value_t = 400)]
        samples: usize,
        /// Also check `f^m(P_j) ⊆ P_{j-1}` for `j = 2..=levels`.
        #[arg(long)]
        mapping: bool,
    },
    /// The census.
    Audit {
        /// Flat per-cycle CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Write rays and cycle points as CSV files for external plotting.
    Plot {
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::TraceRay { .. } => "trace-ray",
            Command::Land { .. } => "land",
            Command::Cycles => "cycles",
            Command::Regions { .. } => "regions",
            Command::Tails { .. } => "tails",
            Command::Audit { .. } => "audit",
            Command::Plot { .. } => "plot",
        }
    }
}

/// The fully resolved configuration of a run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(serialize_with = "ser_c64")]
    pub c: Complex64,
    pub search_box: SearchBox,
    pub max_period: usize,
    pub window: u32,
    pub depth: usize,
    pub horizon: usize,
    pub grid: usize,
    pub tolerances: Tolerances,
    pub config_file: Option<String>,
    pub output: Option<String>,
    /// Subcommand arguments.
    pub arguments: BTreeMap<String, String>,
}

impl RunConfig {
    pub fn audit_config(&self) -> AuditConfig {
        AuditConfig {
            search_box: self.search_box,
            max_period: self.max_period,
            window: self.window,
            depth: self.depth,
            horizon: self.horizon,
            grid: self.grid,
            tolerances: self.tolerances,
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    run_config: &'a RunConfig,
    #[serde(flatten)]
    result: T,
}

/// A failed run: message for stderr and exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure {
        code: 1,
        message: e.to_string(),
    }
}

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(format!("expected `re,im`, got {s:?}"));
    }
    let re: f64 = parts[0].parse().map_err(|_| format!("bad real part in {s:?}"))?;
    let im: f64 = parts[1].parse().map_err(|_| format!("bad imaginary part in {s:?}"))?;
    if !(re.is_finite() && im.is_finite()) {
        return Err(format!("non-finite value in {s:?}"));
    }
    Ok(Complex64::new(re, im))
}

pub fn parse_box(s: &str) -> Result<SearchBox, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("bad box {s:?}"))?;
    if v.len() != 4 {
        return Err(format!("box needs four numbers, got {s:?}"));
    }
    SearchBox::new(v[0], v[1], v[2], v[3]).ok_or_else(|| format!("empty or non-finite box {s:?}"))
}

/// `a:b` or `a:b:n` with `0 < a < b`; `n ≥ 2` geometric samples.
pub fn parse_t_range(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if !(2..=3).contains(&parts.len()) {
        return Err(format!("expected `t_min:t_max[:samples]`, got {s:?}"));
    }
    let a: f64 = parts[0].trim().parse().map_err(|_| format!("bad t_min in {s:?}"))?;
    let b: f64 = parts[1].trim().parse().map_err(|_| format!("bad t_max in {s:?}"))?;
    let n: usize = match parts.get(2) {
        Some(p) => p.trim().parse().map_err(|_| format!("bad sample count in {s:?}"))?,
        None => DEFAULT_T_SAMPLES,
    };
    if !(a.is_finite() && b.is_finite() && a > 0.0 && a < b) {
        return Err(format!("empty potential range {s:?}"));
    }
    if n < 2 {
        return Err(format!("need at least two samples, got {n}"));
    }
    let ratio = (b / a).ln() / (n - 1) as f64;
    Ok((0..n)
        .map(|i| if i + 1 == n { b } else { a * (ratio * i as f64).exp() })
        .collect())
}

/// `key = value` lines; `#` starts a comment.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected `key = value`", i + 1))?;
        let key = k.trim().replace('_', "-");
        if !CONFIG_KEYS.contains(&key.as_str()) {
            return Err(format!("line {}: unknown key {key:?}", i + 1));
        }
        out.insert(key, v.trim().to_string());
    }
    Ok(out)
}

const CONFIG_KEYS: &[&str] = &[
    "c",
    "box",
    "max-period",
    "window",
    "depth",
    "horizon",
    "grid",
    "tol",
    "tol-band",
    "landing-tol",
    "match-tol",
    "threads",
];

fn pick<T: std::str::FromStr>(flag: Option<T>, file: &BTreeMap<String, String>, key: &str, default: T) -> Result<T, Failure> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match file.get(key) {
        Some(s) => s
            .parse()
            .map_err(|_| usage(format!("config file: bad value {s:?} for {key}"))),
        None => Ok(default),
    }
}

fn resolve(common: &CommonArgs, command: &Command) -> Result<(RunConfig, Option<usize>), Failure> {
    let file = match &common.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| usage(format!("config file {}: {e}", path.display())))?;
            parse_config_file(&text).map_err(|e| usage(format!("config file {}: {e}", path.display())))?
        }
        None => BTreeMap::new(),
    };
    let c_text = common
        .c
        .clone()
        .or_else(|| file.get("c").cloned())
        .ok_or_else(|| usage("missing --c re,im"))?;
    let c = parse_complex(&c_text).map_err(usage)?;
    let box_text = common.search_box.clone().or_else(|| file.get("box").cloned());
    let search_box = match box_text {
        Some(t) => parse_box(&t).map_err(usage)?,
        None => SearchBox::new(DEFAULT_BOX[0], DEFAULT_BOX[1], DEFAULT_BOX[2], DEFAULT_BOX[3]).expect("valid"),
    };
    let defaults = AuditConfig::new(search_box, 2, 1);
    let d = defaults.tolerances;
    let tolerances = Tolerances {
        newton: pick(common.tol, &file, "tol", d.newton)?,
        band: pick(common.tol_band, &file, "tol-band", d.band)?,
        landing: pick(common.landing_tol, &file, "landing-tol", d.landing)?,
        matching: pick(common.match_tol, &file, "match-tol", d.matching)?,
        ..d
    };
    for (name, v) in [
        ("tol", tolerances.newton),
        ("tol-band", tolerances.band),
        ("landing-tol", tolerances.landing),
        ("match-tol", tolerances.matching),
    ] {
        if !(v.is_finite() && v > 0.0) {
            return Err(usage(format!("{name} must be positive, got {v}")));
        }
    }
    let threads_env = std::env::var(THREADS_ENV)
        .ok()
        .map(|s| s.parse::<usize>().map_err(|_| usage(format!("{THREADS_ENV}: bad value {s:?}"))))
        .transpose()?;
    let threads = match common.threads.or(threads_env) {
        Some(t) => Some(t),
        None => file
            .get("threads")
            .map(|s| s.parse().map_err(|_| usage(format!("config file: bad threads {s:?}"))))
            .transpose()?,
    };
    let max_period = pick(common.max_period, &file, "max-period", defaults.max_period)?;
    if max_period == 0 {
        return Err(usage("max-period must be at least 1"));
    }
    let config = RunConfig {
        command: command.name().to_string(),
        c,
        search_box,
        max_period,
        window: pick(common.window, &file, "window", defaults.window)?,
        depth: pick(common.depth, &file, "depth", defaults.depth)?,
        horizon: pick(common.horizon, &file, "horizon", defaults.horizon)?,
        grid: pick(common.grid, &file, "grid", defaults.grid)?,
        tolerances,
        config_file: common.config.as_ref().map(|p| p.display().to_string()),
        output: common.output.as_ref().map(|p| p.display().to_string()),
        arguments: command_arguments(command),
    };
    Ok((config, threads))
}

fn command_arguments(command: &Command) -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    match command {
        Command::TraceRay { address, t } => {
            m.insert("address".into(), address.clone());
            m.insert("t".into(), t.clone());
        }
        Command::Land { address } => {
            m.insert("address".into(), address.clone());
        }
        Command::Cycles => {}
        Command::Regions { p, points } => {
            m.insert("p".into(), p.to_string());
            m.insert("points".into(), points.join(" "));
        }
        Command::Tails {
            cycle,
            period,
            p,
            address,
            levels,
            samples,
            mapping,
        } => {
            m.insert("cycle".into(), cycle.clone());
            m.insert("period".into(), period.to_string());
            m.insert("p".into(), p.unwrap_or(*period).to_string());
            m.insert("address".into(), address.clone());
            m.insert("levels".into(), levels.to_string());
            m.insert("samples".into(), samples.to_string());
            m.insert("mapping".into(), mapping.to_string());
        }
        Command::Audit { csv } => {
            m.insert("csv".into(), csv.to_string());
        }
        Command::Plot { p, out_dir } => {
            m.insert("p".into(), p.to_string());
            m.insert("out-dir".into(), out_dir.display().to_string());
        }
    }
    m
}

/// Parse `args` (including the program name), run, and return the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let outcome = resolve(&cli.common, &cli.command).and_then(|(config, threads)| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.unwrap_or(0))
            .build()
            .map_err(|e| usage(format!("thread pool: {e}")))?;
        pool.install(|| execute(&config, &cli.command))
    });
    match outcome {
        Ok(Output { data, code, note }) => {
            if let Some(note) = note {
                let _ = writeln!(err, "{note}");
            }
            let written = match &cli.common.output {
                Some(path) => fs::write(path, &data),
                None => out.write_all(data.as_bytes()),
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    1
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

struct Output {
    data: String,
    code: i32,
    note: Option<String>,
}

fn json<T: Serialize>(config: &RunConfig, result: T) -> Result<String, Failure> {
    to_canonical_json(&Envelope {
        run_config: config,
        result,
    })
    .map_err(|e| Failure {
        code: 1,
        message: format!("serialization: {e}"),
    })
}

fn parse_address(s: &str) -> Result<InfiniteAddress, Failure> {
    s.parse().map_err(|e: crate::symbolic::AddressError| usage(e.to_string()))
}

fn execute(config: &RunConfig, command: &Command) -> Result<Output, Failure> {
    let map = MapModel::exponential(config.c).map_err(|e| usage(e.to_string()))?;
    match command {
        Command::TraceRay { address, t } => {
            let s = parse_address(address)?;
            let grid = parse_t_range(t).map_err(usage)?;
            let ray = trace_ray(&map, &s, config.depth, &grid).map_err(|e| match e {
                RayError::InvalidPotential(_) => usage(e.to_string()),
                other => Failure {
                    code: 4,
                    message: other.to_string(),
                },
            })?;
            let note = (!ray.converged).then(|| {
                format!(
                    "warning: depth {} leaves movement {:e} above tolerance",
                    config.depth, ray.max_movement
                )
            });
            Ok(Output {
                data: ray.to_csv(),
                code: 0,
                note,
            })
        }
        Command::Land { address } => {
            let s = parse_address(address)?;
            let opts = LandingOptions {
                tol: config.tolerances.landing,
                ..LandingOptions::default()
            };
            let result = landing_point(&map, &s, &opts).map_err(|e| usage(e.to_string()))?;
            let code = match result.status {
                LandingStatus::Landed => 0,
                LandingStatus::NotConverged | LandingStatus::EscapedPullback => 3,
                LandingStatus::SingularHit => 4,
            };
            Ok(Output {
                data: json(config, &result)?,
                code,
                note: None,
            })
        }
        Command::Cycles => {
            let search = find_cycles(&map, config.max_period, config.search_box, &search_options(config));
            Ok(Output {
                data: json(config, &search)?,
                code: 0,
                note: None,
            })
        }
        Command::Regions { p, points } => {
            if *p == 0 {
                return Err(usage("p must be at least 1"));
            }
            let located = points
                .iter()
                .map(|t| parse_complex(t).map_err(usage))
                .collect::<Result<Vec<_>, _>>()?;
            let graph = build_ray_graph(&map, *p, config.window, config.depth);
            let cycles = find_cycles(&map, *p, config.search_box, &search_options(config)).cycles;
            let separation = interior_fixed_point_audit(&graph, &cycles);
            let report = RegionsReport {
                p: *p,
                window: config.window,
                truncation: graph.truncation,
                arcs: graph
                    .arcs
                    .iter()
                    .map(|a| ArcSummary {
                        address: a.address.clone(),
                        landing: a.landing,
                        gap: a.gap,
                        t_min: a.t_min,
                        vertices: a.points.len(),
                    })
                    .collect(),
                stars: graph.stars.clone(),
                regions: graph.regions().iter().map(|r| (r.id, r.representative)).map(RegionSummary::from).collect(),
                excluded: graph.excluded.iter().map(|r| r.address.clone()).collect(),
                located: located
                    .into_iter()
                    .map(|z| match graph.basic_region_of(z) {
                        Ok(r) => Located {
                            point: z,
                            region: Some(r.id),
                            error: None,
                        },
                        Err(e) => Located {
                            point: z,
                            region: None,
                            error: Some(e.to_string()),
                        },
                    })
                    .collect(),
                separation,
            };
            Ok(Output {
                data: json(config, &report)?,
                code: 0,
                note: None,
            })
        }
        Command::Tails {
            cycle,
            period,
            p,
            address,
            levels,
            samples,
            mapping,
        } => {
            let z = parse_complex(cycle).map_err(usage)?;
            let s = parse_address(address)?;
            let p = p.unwrap_or(*period);
            if *period == 0 || p % period != 0 {
                return Err(usage(format!("p = {p} must be a positive multiple of the period {period}")));
            }
            if *levels == 0 {
                return Err(usage("levels must be at least 1"));
            }
            let cycle = Cycle::from_point(&map, z, *period, config.tolerances.band)
                .ok_or_else(|| usage(format!("no cycle of period {period} found near {z}")))?;
            let graph = build_ray_graph(&map, p, config.window, config.depth);
            let report = match TailContext::new(&map, &cycle, &graph, config.horizon) {
                Ok(ctx) => TailsReport {
                    address: s.clone(),
                    context: Some(ctx.summary()),
                    error: None,
                    levels: ctx.diagnostics(&s, *levels, *samples),
                    mapping: if *mapping {
                        (2..=*levels)
                            .map(|j| ctx.piece_mapping_check(&s, j, *samples))
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|e| usage(e.to_string()))?
                    } else {
                        Vec::new()
                    },
                },
                Err(e @ crate::tails::TailError::Unbounded { .. }) => TailsReport {
                    address: s.clone(),
                    context: None,
                    error: Some(e.to_string()),
                    levels: Vec::new(),
                    mapping: Vec::new(),
                },
                Err(e) => return Err(usage(e.to_string())),
            };
            Ok(Output {
                data: json(config, &report)?,
                code: 0,
                note: None,
            })
        }
        Command::Audit { csv } => {
            let report = audit(&map, &config.audit_config());
            let code = match report.verdict {
                Verdict::Satisfied => 0,
                Verdict::Violated => 5,
                Verdict::NotApplicable => 6,
            };
            let note = match report.verdict {
                Verdict::Violated => report.reproducer.clone().map(|r| format!("inequality violated; reproduce with: {r}")),
                Verdict::NotApplicable => Some("hypotheses failed; verdict not applicable".into()),
                Verdict::Satisfied => None,
            };
            let data = if *csv { to_csv(&report) } else { json(config, &report)? };
            Ok(Output { data, code, note })
        }
        Command::Plot { p, out_dir } => {
            if *p == 0 {
                return Err(usage("p must be at least 1"));
            }
            let graph = build_ray_graph(&map, *p, config.window, config.depth);
            let cycles = find_cycles(&map, config.max_period, config.search_box, &search_options(config)).cycles;
            write_plot(out_dir, &graph.arcs, &cycles).map_err(io_failure)?;
            Ok(Output {
                data: String::new(),
                code: 0,
                note: Some(format!("wrote rays.csv and cycles.csv to {}", out_dir.display())),
            })
        }
    }
}

fn search_options(config: &RunConfig) -> CycleSearchOptions {
    CycleSearchOptions {
        grid: config.grid,
        tol: config.tolerances.newton,
        tol_band: config.tolerances.band,
        coverage_check: true,
    }
}

fn write_plot(dir: &Path, arcs: &[crate::regions::Arc], cycles: &[Cycle]) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut rays = String::from("address,index,re,im\n");
    for arc in arcs {
        for (i, z) in arc.points.iter().enumerate() {
            rays.push_str(&format!("{},{},{},{}\n", arc.address, i, fmt_f64(z.re), fmt_f64(z.im)));
        }
    }
    fs::write(dir.join("rays.csv"), rays)?;
    let mut pts = String::from("cycle,period,class,re,im\n");
    for (k, c) in cycles.iter().enumerate() {
        for z in &c.points {
            pts.push_str(&format!("{},{},{},{},{}\n", k, c.period, c.class.name(), fmt_f64(z.re), fmt_f64(z.im)));
        }
    }
    fs::write(dir.join("cycles.csv"), pts)
}

#[derive(Serialize)]
struct ArcSummary {
    address: InfiniteAddress,
    #[serde(serialize_with = "ser_c64")]
    landing: Complex64,
    gap: f64,
    t_min: f64,
    vertices: usize,
}

#[derive(Serialize)]
struct RegionSummary {
    id: usize,
    #[serde(serialize_with = "ser_c64")]
    representative: Complex64,
}

impl From<(usize, Complex64)> for RegionSummary {
    fn from((id, representative): (usize, Complex64)) -> Self {
        RegionSummary { id, representative }
    }
}

#[derive(Serialize)]
struct Located {
    #[serde(serialize_with = "ser_c64")]
    point: Complex64,
    region: Option<usize>,
    error: Option<String>,
}

#[derive(Serialize)]
struct RegionsReport {
    p: usize,
    window: u32,
    truncation: f64,
    arcs: Vec<ArcSummary>,
    stars: Vec<Star>,
    regions: Vec<RegionSummary>,
    excluded: Vec<InfiniteAddress>,
    located: Vec<Located>,
    separation: SeparationAudit,
}

#[derive(Serialize)]
struct TailsReport {
    address: InfiniteAddress,
    context: Option<TailContextSummary>,
    error: Option<String>,
    levels: Vec<TailLevelReport>,
    mapping: Vec<MappingCheck>,
}
