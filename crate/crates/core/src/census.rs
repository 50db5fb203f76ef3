//! The audit: cycles in a box, landing rays for every repelling cycle, the
//! fate of the singular orbit, and the count
//! `N_indifferent + N_invisible_candidates ≤ q_effective`.
//!
//! Repelling cycles with no landing address in the searched window are
//! "invisible candidates": the search is finite, so they are never
//! certified as rationally invisible.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cycles::{find_cycles, Cycle, CycleClass, CycleSearchOptions, DEFAULT_GRID, DEFAULT_TOL, DEFAULT_TOL_BAND};
use crate::geometry::SearchBox;
use crate::map::{Family, MapModel};
use crate::rays::{
    landing_point, singular_escape_status, LandingOptions, LandingResult, LandingStatus, SingularEscape,
    DEFAULT_LANDING_TOL,
};
use crate::regions::{build_ray_graph, interior_fixed_point_audit, RayGraph, RegionId, SeparationAudit};
use crate::report::{ser_c64, ser_vec_c64};
use crate::symbolic::{periodic_addresses_for_cycle, InfiniteAddress};
use crate::tails::{choose_radius, RadiusChoice, TailContext, TailError, DEFAULT_HORIZON};

pub const SCHEMA: &str = "raycensus.census/1";
/// Landing points and cycle points closer than this are identified.
pub const DEFAULT_MATCH_TOL: f64 = 1e-6;
pub const DEFAULT_BASIN_TOL: f64 = 1e-6;
/// Consecutive steps within `basin_tol` that count as convergence.
pub const DEFAULT_BASIN_STEPS: usize = 50;
pub const DEFAULT_DEPTH: usize = 40;
/// A parabolic basin is suspected when the orbit ends this close to the
/// cycle and still approaches it.
const PARABOLIC_APPROACH: f64 = 1e-2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CensusError {
    #[error("landing search needs a repelling cycle, got {0}")]
    NotRepelling(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub newton: f64,
    pub band: f64,
    pub landing: f64,
    #[serde(rename = "match")]
    pub matching: f64,
    pub basin: f64,
    pub basin_steps: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            newton: DEFAULT_TOL,
            band: DEFAULT_TOL_BAND,
            landing: DEFAULT_LANDING_TOL,
            matching: DEFAULT_MATCH_TOL,
            basin: DEFAULT_BASIN_TOL,
            basin_steps: DEFAULT_BASIN_STEPS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AuditConfig {
    pub search_box: SearchBox,
    pub max_period: usize,
    pub window: u32,
    pub depth: usize,
    pub horizon: usize,
    pub grid: usize,
    pub tolerances: Tolerances,
}

impl AuditConfig {
    pub fn new(search_box: SearchBox, max_period: usize, window: u32) -> Self {
        AuditConfig {
            search_box,
            max_period,
            window,
            depth: DEFAULT_DEPTH,
            horizon: DEFAULT_HORIZON,
            grid: DEFAULT_GRID,
            tolerances: Tolerances::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MapSummary {
    pub family: Family,
    #[serde(serialize_with = "ser_c64")]
    pub c: Complex64,
    pub tract_radius: f64,
    #[serde(serialize_with = "ser_vec_c64")]
    pub singular_values: Vec<Complex64>,
}

impl MapSummary {
    pub fn of(map: &MapModel) -> Self {
        MapSummary {
            family: map.family(),
            c: map.c(),
            tract_radius: map.tract_radius(),
            singular_values: map.singular_values(),
        }
    }
}

/// Addresses found landing on one cycle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LandingSearch {
    pub addresses: Vec<InfiniteAddress>,
    /// Cycle point index for each address.
    pub landing_index: Vec<usize>,
    pub attempted: usize,
    /// All found addresses share one period.
    pub equal_period: bool,
}

/// Evidence on which case of the trichotomy holds for a cycle's regions.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum Trichotomy {
    /// The singular orbit followed the cycle's regions for the whole horizon.
    TrappedBounded { horizon: usize, postsingular_max: f64 },
    /// The singular orbit escaped while following the cycle's regions.
    TrappedEscaping { escape_step: usize },
    /// The singular orbit left the itinerary after `followed` steps (or
    /// never entered it): all tails exist for the reported radius.
    TailsExist { followed: Option<usize>, r: f64 },
    Undetermined { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CycleEntry {
    pub index: usize,
    #[serde(flatten)]
    pub cycle: Cycle,
    pub landing: Option<LandingSearch>,
    pub invisible_candidate: bool,
    pub trichotomy: Option<Trichotomy>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Counts {
    pub attracting: usize,
    pub indifferent: usize,
    pub parabolic_suspected: usize,
    pub repelling: usize,
    pub invisible_candidates: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum SingularStatus {
    InAttractingOrParabolicBasin { cycle: usize, step: usize },
    #[serde(rename = "trapped-case-1")]
    TrappedCase1 { horizon: usize, cycle: usize },
    EscapingAlongPeriodicRay { address: InfiniteAddress },
    EscapingOther { escape_step: usize },
    Undetermined { horizon: usize },
}

/// Statistics of the tail of a bounded singular orbit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Accumulation {
    /// Number of final orbit points used.
    pub points: usize,
    pub diameter: f64,
    pub min_modulus: f64,
    pub max_modulus: f64,
    /// Smallest distance from those points to a non-repelling cycle point.
    pub distance_to_neutral: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularReport {
    pub status: SingularStatus,
    pub escape: SingularEscape,
    pub accumulation: Option<Accumulation>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hypotheses {
    pub window_rays_landed: bool,
    pub singular_escapes_along_periodic_ray: bool,
    pub not_landed: Vec<LandingResult>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Satisfied,
    Violated,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inequality {
    /// `N_indifferent + N_invisible_candidates`.
    pub lhs: usize,
    pub q_effective: usize,
    pub q: usize,
    pub holds_against_q: bool,
    /// `N_attracting + N_parabolic + N_indifferent ≤ q`.
    pub classical_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusReport {
    pub schema: &'static str,
    pub map: MapSummary,
    pub config: AuditConfig,
    pub cycles: Vec<CycleEntry>,
    pub counts: Counts,
    pub singular: SingularReport,
    pub hypotheses: Hypotheses,
    pub separation: SeparationAudit,
    pub stability: WindowStability,
    pub inequality: Inequality,
    pub verdict: Verdict,
    pub reproducer: Option<String>,
    pub warnings: Vec<String>,
}

/// The window-sensitive results recomputed with the window widened by one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WindowStability {
    pub window: u32,
    pub invisible_candidates: usize,
    pub regions: usize,
    pub separation_passed: bool,
    /// Same invisible-candidate count, region count and separation outcome
    /// as at the configured window.
    pub stable: bool,
}

/// Addresses of exact period `q` with `m | q ≤ cap` and entries in
/// `[-window, window]` landing within `match_tol` of a point of `cycle`.
pub fn landing_search(
    map: &MapModel,
    cycle: &Cycle,
    window: u32,
    period_cap: usize,
    tol: &Tolerances,
) -> Result<LandingSearch, CensusError> {
    if !cycle.class.is_repelling() {
        return Err(CensusError::NotRepelling(cycle.class.name()));
    }
    let addresses = periodic_addresses_for_cycle(window, cycle.period, period_cap);
    let results = land_all(map, &addresses, tol);
    Ok(match_landings(cycle, &addresses, &results, tol.matching))
}

fn land_all(map: &MapModel, addresses: &[InfiniteAddress], tol: &Tolerances) -> Vec<LandingResult> {
    let opts = LandingOptions {
        tol: tol.landing,
        ..LandingOptions::default()
    };
    addresses
        .par_iter()
        .map(|s| {
            landing_point(map, s, &opts).unwrap_or_else(|e| LandingResult {
                address: s.clone(),
                status: LandingStatus::NotConverged,
                point: None,
                psi_derivative: None,
                multiplier: None,
                iterations: 0,
                detail: Some(e.to_string()),
            })
        })
        .collect()
}

fn match_landings(
    cycle: &Cycle,
    addresses: &[InfiniteAddress],
    results: &[LandingResult],
    match_tol: f64,
) -> LandingSearch {
    let mut found = Vec::new();
    let mut index = Vec::new();
    for r in results {
        if r.status != LandingStatus::Landed || r.address.period() % cycle.period != 0 {
            continue;
        }
        if let Some(i) = r.point.and_then(|z| cycle.index_of(z, match_tol)) {
            found.push(r.address.clone());
            index.push(i);
        }
    }
    let equal_period = found.windows(2).all(|w| w[0].period() == w[1].period());
    LandingSearch {
        addresses: found,
        landing_index: index,
        attempted: addresses.len(),
        equal_period,
    }
}

fn regions_of(graph: &RayGraph, cycle: &Cycle) -> Option<Vec<RegionId>> {
    cycle.points.iter().map(|&z| graph.basic_region_of(z).ok()).collect()
}

fn trichotomy_evidence(map: &MapModel, cycle: &Cycle, graph: &RayGraph, horizon: usize) -> Trichotomy {
    let choice = if cycle.class.is_repelling() {
        match TailContext::new(map, cycle, graph, horizon) {
            Ok(ctx) => ctx.radius,
            Err(TailError::Unbounded { escape_step }) => RadiusChoice::Unbounded { escape_step },
            Err(e) => return Trichotomy::Undetermined { reason: e.to_string() },
        }
    } else {
        let Some(regions) = regions_of(graph, cycle) else {
            return Trichotomy::Undetermined {
                reason: "cycle point lies on the ray graph".into(),
            };
        };
        choose_radius(map, graph, cycle, &regions, horizon)
    };
    match choice {
        RadiusChoice::Unbounded { escape_step } => Trichotomy::TrappedEscaping { escape_step },
        RadiusChoice::Radius {
            trapped: true,
            postsingular_max,
            ..
        } => Trichotomy::TrappedBounded { horizon, postsingular_max },
        RadiusChoice::Radius { followed, r, .. } => Trichotomy::TailsExist { followed, r },
    }
}

/// Iterate `c` and look for convergence to an attracting cycle, or a slow
/// approach to a suspected parabolic one.
fn basin_of(map: &MapModel, cycles: &[Cycle], tol: &Tolerances, horizon: usize) -> (Option<(usize, usize)>, Vec<Complex64>) {
    let mut orbit = vec![map.c()];
    let mut z = map.c();
    for _ in 0..horizon {
        match map.evaluate(z) {
            Ok(w) if w.norm() <= 1e5 => {
                orbit.push(w);
                z = w;
            }
            _ => break,
        }
    }
    let distance = |k: usize, w: Complex64| {
        cycles[k]
            .points
            .iter()
            .map(|p| (p - w).norm())
            .fold(f64::INFINITY, f64::min)
    };
    for (k, cycle) in cycles.iter().enumerate() {
        if !cycle.class.is_attracting() {
            continue;
        }
        let mut run = 0;
        for (step, &w) in orbit.iter().enumerate() {
            if distance(k, w) < tol.basin {
                run += 1;
                if run >= tol.basin_steps {
                    return (Some((k, step + 1 - run)), orbit);
                }
            } else {
                run = 0;
            }
        }
    }
    for (k, cycle) in cycles.iter().enumerate() {
        if !matches!(cycle.class, CycleClass::ParabolicSuspected { .. }) || orbit.len() < 200 {
            continue;
        }
        let n = orbit.len();
        let late = distance(k, orbit[n - 1]);
        let earlier = distance(k, orbit[n - 100]);
        if late < PARABOLIC_APPROACH && late < earlier {
            return (Some((k, n - 1)), orbit);
        }
    }
    (None, orbit)
}

fn accumulation(orbit: &[Complex64], cycles: &[Cycle]) -> Accumulation {
    let tail = &orbit[orbit.len() / 2..];
    let diameter = crate::tails::point_cloud_diameter(tail);
    let moduli = tail.iter().map(|z| z.norm());
    let neutral: Vec<Complex64> = cycles
        .iter()
        .filter(|c| !c.class.is_repelling())
        .flat_map(|c| c.points.iter().copied())
        .collect();
    let distance_to_neutral = (!neutral.is_empty()).then(|| {
        tail.iter()
            .flat_map(|z| neutral.iter().map(move |p| (p - z).norm()))
            .fold(f64::INFINITY, f64::min)
    });
    Accumulation {
        points: tail.len(),
        diameter,
        min_modulus: moduli.clone().fold(f64::INFINITY, f64::min),
        max_modulus: moduli.fold(0.0, f64::max),
        distance_to_neutral,
    }
}

/// Run the full audit.
pub fn audit(map: &MapModel, config: &AuditConfig) -> CensusReport {
    let tol = config.tolerances;
    let mut warnings = Vec::new();

    let search = find_cycles(
        map,
        config.max_period,
        config.search_box,
        &CycleSearchOptions {
            grid: config.grid,
            tol: tol.newton,
            tol_band: tol.band,
            coverage_check: true,
        },
    );
    warnings.extend(search.warnings.iter().cloned());
    let cycles = search.cycles;

    // every address any repelling cycle may be matched against
    let mut needed: BTreeMap<InfiniteAddress, ()> = BTreeMap::new();
    let periods: Vec<usize> = {
        let mut v: Vec<usize> = cycles.iter().filter(|c| c.class.is_repelling()).map(|c| c.period).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    for &m in &periods {
        for s in periodic_addresses_for_cycle(config.window, m, config.max_period * m) {
            needed.insert(s, ());
        }
    }
    let addresses: Vec<InfiniteAddress> = needed.into_keys().collect();
    let landings = land_all(map, &addresses, &tol);
    let not_landed: Vec<LandingResult> = landings
        .iter()
        .filter(|r| r.status != LandingStatus::Landed)
        .cloned()
        .collect();

    let mut entries: Vec<CycleEntry> = cycles
        .iter()
        .enumerate()
        .map(|(index, cycle)| {
            let landing = cycle.class.is_repelling().then(|| {
                let cap = config.max_period * cycle.period;
                let (addrs, results): (Vec<InfiniteAddress>, Vec<LandingResult>) = addresses
                    .iter()
                    .zip(&landings)
                    .filter(|(s, _)| s.period() % cycle.period == 0 && s.period() <= cap)
                    .map(|(s, r)| (s.clone(), r.clone()))
                    .unzip();
                match_landings(cycle, &addrs, &results, tol.matching)
            });
            let invisible_candidate = landing.as_ref().is_some_and(|l| l.addresses.is_empty());
            CycleEntry {
                index,
                cycle: cycle.clone(),
                landing,
                invisible_candidate,
                trichotomy: None,
            }
        })
        .collect();
    for e in &entries {
        if e.landing.as_ref().is_some_and(|l| !l.equal_period) {
            warnings.push(format!(
                "cycle {} is the landing point of rays of different periods; numerics suspect",
                e.index
            ));
        }
    }

    let mut counts = Counts::default();
    for e in &entries {
        match e.cycle.class {
            CycleClass::Superattracting | CycleClass::Attracting => counts.attracting += 1,
            CycleClass::Indifferent { .. } => counts.indifferent += 1,
            CycleClass::ParabolicSuspected { .. } => counts.parabolic_suspected += 1,
            CycleClass::Repelling => counts.repelling += 1,
        }
        if e.invisible_candidate {
            counts.invisible_candidates += 1;
        }
    }

    // trichotomy evidence on the regions of the cycles that need a singular orbit
    let mut graphs: BTreeMap<usize, RayGraph> = BTreeMap::new();
    for e in entries.iter_mut() {
        let needs = e.invisible_candidate || matches!(e.cycle.class, CycleClass::Indifferent { .. });
        if !needs {
            continue;
        }
        let graph = graphs
            .entry(e.cycle.period)
            .or_insert_with(|| build_ray_graph(map, e.cycle.period, config.window, config.depth));
        e.trichotomy = Some(trichotomy_evidence(map, &e.cycle, graph, config.horizon));
    }

    let escape = singular_escape_status(map, config.horizon);
    let (basin, orbit) = basin_of(map, &cycles, &tol, config.horizon);
    let trapped_cycle = entries
        .iter()
        .find(|e| matches!(e.trichotomy, Some(Trichotomy::TrappedBounded { .. })))
        .map(|e| e.index);
    let status = if let Some((cycle, step)) = basin {
        SingularStatus::InAttractingOrParabolicBasin { cycle, step }
    } else {
        match &escape {
            SingularEscape::EscapesAlongPeriodicRay { address, .. } => SingularStatus::EscapingAlongPeriodicRay {
                address: address.clone(),
            },
            SingularEscape::EscapesOther { escape_step } => SingularStatus::EscapingOther {
                escape_step: *escape_step,
            },
            _ => match trapped_cycle {
                Some(cycle) => SingularStatus::TrappedCase1 {
                    horizon: config.horizon,
                    cycle,
                },
                None => SingularStatus::Undetermined { horizon: config.horizon },
            },
        }
    };
    let bounded = matches!(
        escape,
        SingularEscape::BoundedSoFar { .. } | SingularEscape::EntersDRepeatedly { .. }
    );
    let accumulation = (basin.is_none() && bounded && orbit.len() > 2).then(|| accumulation(&orbit, &cycles));

    let q = map.singular_orbit_count();
    let q_effective = q - usize::from(basin.is_some());
    let hypotheses = Hypotheses {
        window_rays_landed: not_landed.is_empty(),
        singular_escapes_along_periodic_ray: matches!(escape, SingularEscape::EscapesAlongPeriodicRay { .. }),
        not_landed,
    };
    if !hypotheses.window_rays_landed {
        warnings.push(format!(
            "{} address(es) in the window did not land",
            hypotheses.not_landed.len()
        ));
    }

    let separation_graph = graphs
        .remove(&1)
        .unwrap_or_else(|| build_ray_graph(map, 1, config.window, config.depth));
    let separation = interior_fixed_point_audit(&separation_graph, &cycles);

    let wider = config.window + 1;
    let invisible_wider = entries
        .iter()
        .filter(|e| e.invisible_candidate)
        .filter(|e| {
            landing_search(map, &e.cycle, wider, config.max_period * e.cycle.period, &tol)
                .map_or(true, |l| l.addresses.is_empty())
        })
        .count();
    let wider_graph = build_ray_graph(map, 1, wider, config.depth);
    let wider_separation = interior_fixed_point_audit(&wider_graph, &cycles);
    let stability = WindowStability {
        window: wider,
        invisible_candidates: invisible_wider,
        regions: wider_graph.regions().len(),
        separation_passed: wider_separation.passed,
        stable: invisible_wider == counts.invisible_candidates
            && wider_graph.regions().len() == separation_graph.regions().len()
            && wider_separation.passed == separation.passed,
    };
    if !stability.stable {
        warnings.push(format!(
            "results change from window {} to {wider}; the window is too small",
            config.window
        ));
    }

    let lhs = counts.indifferent + counts.invisible_candidates;
    let inequality = Inequality {
        lhs,
        q_effective,
        q,
        holds_against_q: lhs <= q,
        classical_holds: counts.attracting + counts.parabolic_suspected + counts.indifferent <= q,
    };
    let verdict = if !hypotheses.window_rays_landed || hypotheses.singular_escapes_along_periodic_ray {
        Verdict::NotApplicable
    } else if lhs <= q_effective {
        Verdict::Satisfied
    } else {
        Verdict::Violated
    };
    let reproducer = (verdict == Verdict::Violated).then(|| {
        let b = config.search_box;
        format!(
            "raycensus audit --c {:.17e},{:.17e} --box {:.17e},{:.17e},{:.17e},{:.17e} --max-period {} --window {} --depth {} --horizon {} --grid {}",
            map.c().re,
            map.c().im,
            b.re_min,
            b.re_max,
            b.im_min,
            b.im_max,
            config.max_period,
            config.window,
            config.depth,
            config.horizon,
            config.grid
        )
    });

    CensusReport {
        schema: SCHEMA,
        map: MapSummary::of(map),
        config: *config,
        cycles: entries,
        counts,
        singular: SingularReport {
            status,
            escape,
            accumulation,
        },
        hypotheses,
        separation,
        stability,
        inequality,
        verdict,
        reproducer,
        warnings,
    }
}

/// One flat CSV row per cycle.
pub fn to_csv(report: &CensusReport) -> String {
    use crate::report::fmt_f64;
    let mut out = String::from("index,period,re,im,multiplier_re,multiplier_im,class,landing_addresses,invisible_candidate\n");
    for e in &report.cycles {
        let z = e.cycle.z0();
        let addrs = e
            .landing
            .as_ref()
            .map(|l| l.addresses.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" "))
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},\"{}\",{}\n",
            e.index,
            e.cycle.period,
            fmt_f64(z.re),
            fmt_f64(z.im),
            fmt_f64(e.cycle.multiplier.re),
            fmt_f64(e.cycle.multiplier.im),
            e.cycle.class.name(),
            addrs,
            e.invisible_candidate
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::Cycle;

    fn minus2() -> MapModel {
        MapModel::exponential(Complex64::new(-2.0, 0.0)).unwrap()
    }

    fn report_box() -> SearchBox {
        SearchBox::new(-3.0, 3.0, -7.0, 7.0).unwrap()
    }

    #[test]
    fn landing_search_examples() {
        let f = minus2();
        let tol = Tolerances::default();
        let fixed = Cycle::from_point(&f, Complex64::new(1.146, 0.0), 1, 1e-6).unwrap();
        let found = landing_search(&f, &fixed, 1, 3, &tol).unwrap();
        assert_eq!(found.addresses, vec![InfiniteAddress::constant(0)]);
        assert_eq!(found.attempted, 3 + 6 + 24);

        // the fixed point at the end of 1̄
        let upper = Cycle::from_point(&f, Complex64::new(2.131, 7.341), 1, 1e-6).unwrap();
        let found = landing_search(&f, &upper, 1, 3, &tol).unwrap();
        assert_eq!(found.addresses, vec![InfiniteAddress::constant(1)]);

        let attracting = Cycle::from_point(&f, Complex64::new(-1.84, 0.0), 1, 1e-6).unwrap();
        assert!(landing_search(&f, &attracting, 1, 3, &tol).is_err());
    }

    #[test]
    fn hyperbolic_audit() {
        let f = minus2();
        let report = audit(&f, &AuditConfig::new(report_box(), 2, 1));
        assert_eq!(report.counts.attracting, 1);
        assert_eq!(report.counts.indifferent, 0);
        assert_eq!(report.counts.invisible_candidates, 0);
        assert!(report.counts.repelling >= 3);
        assert!(matches!(report.singular.status, SingularStatus::InAttractingOrParabolicBasin { .. }));
        assert_eq!(report.inequality.q_effective, 0);
        assert!(report.inequality.holds_against_q);
        assert!(report.inequality.classical_holds);
        assert_eq!(report.verdict, Verdict::Satisfied);
        assert!(report.separation.passed);
        assert!(report.stability.stable);
        assert_eq!(report.stability.window, 2);
        assert!(report.reproducer.is_none());
        for e in report.cycles.iter().filter(|e| e.cycle.class.is_repelling()) {
            let l = e.landing.as_ref().unwrap();
            assert!(!l.addresses.is_empty());
            assert!(l.equal_period);
        }
    }

    #[test]
    fn hyperbolic_report_is_conjugation_symmetric() {
        let f = minus2();
        let report = audit(&f, &AuditConfig::new(report_box(), 2, 1));
        let cycles: Vec<&CycleEntry> = report.cycles.iter().collect();
        for e in &cycles {
            let conj: Vec<Complex64> = e.cycle.points.iter().map(|z| z.conj()).collect();
            let mirror = cycles
                .iter()
                .find(|o| o.cycle.period == e.cycle.period && conj.iter().all(|z| o.cycle.index_of(*z, 1e-9).is_some()))
                .expect("conjugate cycle present");
            let negated: Vec<InfiniteAddress> = e
                .landing
                .iter()
                .flat_map(|l| l.addresses.iter())
                .map(|s| InfiniteAddress::periodic(s.period_word().iter().map(|k| -k).collect()).unwrap())
                .collect();
            let mut theirs: Vec<InfiniteAddress> = mirror.landing.iter().flat_map(|l| l.addresses.clone()).collect();
            let mut ours = negated;
            theirs.sort();
            ours.sort();
            assert_eq!(ours, theirs);
        }
    }

    #[test]
    fn escaping_singular_value_is_not_applicable() {
        let f = MapModel::exponential(Complex64::new(0.0, 0.0)).unwrap();
        let report = audit(&f, &AuditConfig::new(report_box(), 1, 1));
        assert_eq!(report.verdict, Verdict::NotApplicable);
        assert!(report.hypotheses.singular_escapes_along_periodic_ray);
        assert_eq!(
            report.singular.status,
            SingularStatus::EscapingAlongPeriodicRay {
                address: InfiniteAddress::constant(0)
            }
        );
    }

    #[test]
    fn csv_has_one_row_per_cycle() {
        let f = minus2();
        let report = audit(&f, &AuditConfig::new(report_box(), 1, 1));
        let csv = to_csv(&report);
        assert_eq!(csv.lines().count(), report.cycles.len() + 1);
        assert!(csv.lines().nth(1).unwrap().contains("attracting"));
    }
}
