//! Fundamental tails `τ_n(s)` and pieces `P_n(s) = τ_{n+1}(s) ∖ τ_n(s)`
//! around a repelling cycle `z_0, …, z_{m-1}`.
//!
//! A level-1 tail `τ_1(F)` is the unbounded part of
//! `F ∩ B_0 ∩ f^{-1}(ℂ ∖ (D̄_r ∪ δ_r))`; level-`n` tails are pulled back
//! along an address through the basic regions `B_i` of the cycle points.
//! Tails are only known through membership predicates, so pieces are
//! sampled and their diameters are lower bounds.
//!
//! Along a pullback chain each point is recovered from its image by the
//! branch `L_k` with `k` its strip label, so the address entry of an orbit
//! point is read off as [`MapModel::strip_label`]. Near the landing point
//! the orbit leaves the half-plane where [`MapModel::fundamental_domain_of`]
//! is defined, while the strip label still names the branch.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cycles::Cycle;
use crate::map::{DomainLabel, MapModel};
use crate::rays::{psi, pullback_chain, RayError, DEFAULT_ESCAPE_THRESHOLD};
use crate::regions::{RayGraph, RegionError, RegionId};
use crate::report::{ser_c64, ser_opt_c64};
use crate::symbolic::{FiniteAddress, InfiniteAddress};

/// `r = RADIUS_MARGIN · max(R, |z_i|, |𝒫_B ∪ f(𝒫_B)|)`.
pub const RADIUS_MARGIN: f64 = 1.25;
pub const DEFAULT_HORIZON: usize = 1000;
/// Step of the rightward probe certifying the unbounded component.
pub const PROBE_STEP: f64 = 0.1;
/// Relative snap tolerance for `δ_r`.
pub const CUT_SNAP: f64 = 1e-9;
/// Sampled piece points keep this distance from every boundary condition.
pub const SAMPLE_MARGIN: f64 = 1e-3;
/// Arcs landing this close to a cycle point are removed from the context.
pub const CYCLE_LANDING_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TailError {
    #[error("cycle is {0}, tails need a repelling cycle")]
    NotRepelling(&'static str),
    #[error("graph period {p} is not a multiple of the cycle period {m}")]
    PeriodMismatch { p: usize, m: usize },
    #[error("cycle point {0} could not be placed in a basic region")]
    CycleNotInterior(Complex64),
    #[error("singular orbit escapes at step {escape_step} while following the cycle's regions")]
    Unbounded { escape_step: usize },
    #[error("radius {r} must exceed R and every |z_i|")]
    InvalidRadius { r: f64 },
    #[error("address of length {len} is not of the form m(n-1)+1 with m = {m}")]
    BadLength { len: usize, m: usize },
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Region(#[from] RegionError),
}

/// Outcome of the radius choice.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RadiusChoice {
    Radius {
        r: f64,
        /// `n(s)`, or the horizon when the orbit followed it throughout.
        followed: Option<usize>,
        /// The orbit followed the cycle's regions for the whole horizon.
        trapped: bool,
        /// Largest modulus in the tracked `𝒫_B ∪ f(𝒫_B)`.
        postsingular_max: f64,
    },
    Unbounded {
        escape_step: usize,
    },
}

/// Region index `i(s)` and tracked orbit of the singular value along
/// `B_{i(s)}, B_{i(s)+1}, …`.
#[derive(Debug, Clone, PartialEq)]
struct Following {
    points: Vec<Complex64>,
    next: Option<Complex64>,
    escaped_at: Option<usize>,
}

fn follow(map: &MapModel, graph: &RayGraph, regions: &[RegionId], start: usize, horizon: usize) -> Following {
    let m = regions.len();
    let mut points = vec![map.c()];
    let mut z = map.c();
    for j in 1..=horizon + 1 {
        let w = match map.evaluate(z) {
            Ok(w) if w.norm() <= DEFAULT_ESCAPE_THRESHOLD => w,
            _ => {
                return Following { points, next: None, escaped_at: Some(j) };
            }
        };
        let expected = regions[(start + j) % m];
        let inside = matches!(graph.basic_region_of(w), Ok(r) if r == expected);
        if !inside || j > horizon {
            return Following { points, next: Some(w), escaped_at: None };
        }
        points.push(w);
        z = w;
    }
    unreachable!("loop returns by j = horizon + 1")
}

/// Follow the singular orbit through the cycle's regions for up to
/// `horizon` steps and pick `r` from the tracked `𝒫_B`.
pub fn choose_radius(
    map: &MapModel,
    graph: &RayGraph,
    cycle: &Cycle,
    regions: &[RegionId],
    horizon: usize,
) -> RadiusChoice {
    let base = map.tract_radius().max(cycle.modulus_max());
    let c_region = graph.basic_region_of(map.c()).ok();
    let starts: Vec<usize> = (0..regions.len()).filter(|&i| Some(regions[i]) == c_region).collect();
    let mut best: Option<Following> = None;
    for i in starts {
        let f = follow(map, graph, regions, i, horizon);
        if let Some(escape_step) = f.escaped_at {
            return RadiusChoice::Unbounded { escape_step };
        }
        if best.as_ref().is_none_or(|b| f.points.len() > b.points.len()) {
            best = Some(f);
        }
    }
    let (postsingular_max, followed, trapped) = match &best {
        None => (0.0, None, false),
        Some(f) => {
            let pb = f
                .points
                .iter()
                .chain(f.next.iter())
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            let n_s = f.points.len() - 1;
            (pb, Some(n_s), n_s >= horizon)
        }
    };
    RadiusChoice::Radius {
        r: RADIUS_MARGIN * base.max(postsingular_max),
        followed,
        trapped,
        postsingular_max,
    }
}

/// Everything tails are defined relative to.
#[derive(Debug, Clone)]
pub struct TailContext {
    pub map: MapModel,
    pub cycle: Cycle,
    /// `Γ` without the arcs landing on the cycle.
    pub graph: RayGraph,
    /// Addresses of the arcs removed because they land on the cycle.
    pub removed: Vec<InfiniteAddress>,
    /// `B_i ∋ z_i`.
    pub regions: Vec<RegionId>,
    pub r: f64,
    pub horizon: usize,
    pub radius: RadiusChoice,
}

impl TailContext {
    /// Context for `cycle` in the regions of `graph`, with `r` from
    /// [`choose_radius`].
    pub fn new(map: &MapModel, cycle: &Cycle, graph: &RayGraph, horizon: usize) -> Result<Self, TailError> {
        if !cycle.class.is_repelling() {
            return Err(TailError::NotRepelling(cycle.class.name()));
        }
        if !graph.p.is_multiple_of(cycle.period) {
            return Err(TailError::PeriodMismatch { p: graph.p, m: cycle.period });
        }
        let removed: Vec<InfiniteAddress> = graph
            .arcs
            .iter()
            .filter(|a| cycle.points.iter().any(|z| (a.landing - z).norm() <= CYCLE_LANDING_TOL))
            .map(|a| a.address.clone())
            .collect();
        let graph = graph.without_arcs_landing_at(map, &cycle.points, CYCLE_LANDING_TOL);
        let regions = cycle
            .points
            .iter()
            .map(|&z| graph.basic_region_of(z).map_err(|_| TailError::CycleNotInterior(z)))
            .collect::<Result<Vec<_>, _>>()?;
        let radius = choose_radius(map, &graph, cycle, &regions, horizon);
        let r = match radius {
            RadiusChoice::Radius { r, .. } => r,
            RadiusChoice::Unbounded { escape_step } => return Err(TailError::Unbounded { escape_step }),
        };
        Ok(TailContext {
            map: *map,
            cycle: cycle.clone(),
            graph,
            removed,
            regions,
            r,
            horizon,
            radius,
        })
    }

    /// Replace the chosen radius.
    pub fn with_radius(mut self, r: f64) -> Result<Self, TailError> {
        if !(r >= self.map.tract_radius() && r > self.cycle.modulus_max()) {
            return Err(TailError::InvalidRadius { r });
        }
        self.r = r;
        Ok(self)
    }

    pub fn m(&self) -> usize {
        self.cycle.period
    }

    fn in_region(&self, z: Complex64, i: usize) -> Result<bool, RegionError> {
        Ok(self.graph.basic_region_of(z)? == self.regions[i % self.m()])
    }

    fn tail1_with_margin(&self, label: DomainLabel, z: Complex64, margin: f64) -> Result<bool, RegionError> {
        let map = &self.map;
        if map.fundamental_domain_of(z) != Some(label) {
            return Ok(false);
        }
        // f(z) - c = e^z lies on δ exactly when Im z is an odd multiple of π
        let to_cut = ((z.im - TAU * label.0 as f64).abs() - PI).abs();
        if to_cut <= margin.max(CUT_SNAP) {
            return Ok(false);
        }
        // beyond the overflow line |f(z)| > r holds trivially
        if let Ok(w) = map.evaluate(z) {
            if w.norm() <= self.r + margin || map.on_cut_outside(w, self.r, CUT_SNAP) {
                return Ok(false);
            }
        }
        if margin > 0.0 && self.graph.distance_to_arcs(z, margin).is_some() {
            return Ok(false);
        }
        if !self.in_region(z, 0)? {
            return Ok(false);
        }
        let c_mod = map.c().norm();
        let end = self.graph.truncation;
        let mut x = z.re;
        while x < end && x.exp() - c_mod <= self.r + margin {
            x += PROBE_STEP;
            let Ok(w) = map.evaluate(Complex64::new(x, z.im)) else {
                break;
            };
            if w.norm() <= self.r + margin {
                return Ok(false);
            }
        }
        Ok(z.re >= end || !self.graph.segment_crosses_arcs(z, Complex64::new(end, z.im)))
    }

    /// `z ∈ τ_1(F)`: `z ∈ F`, `|f(z)| > r` with `f(z) ∉ δ_r`, `z ∈ B_0`, and
    /// the horizontal probe from `z` to the truncation line stays in that
    /// set.
    pub fn tail1_membership(&self, label: DomainLabel, z: Complex64) -> Result<bool, RegionError> {
        self.tail1_with_margin(label, z, 0.0)
    }

    /// Level `n` of an address of length `ℓ_n = m(n-1)+1`.
    pub fn level_of(&self, len: usize) -> Result<usize, TailError> {
        let m = self.m();
        if len == 0 || !(len - 1).is_multiple_of(m) {
            return Err(TailError::BadLength { len, m });
        }
        Ok((len - 1) / m + 1)
    }

    /// `z ∈ τ_n(s)`: the first `(n-1)m` images visit `B_0, B_1, …` in the
    /// strips named by `s`, and `f^{(n-1)m}(z) ∈ τ_1(s_{ℓ_n - 1})`.
    /// An orbit that overflows before reaching level 1 counts as outside.
    pub fn tail_membership(&self, s: &FiniteAddress, z: Complex64) -> Result<bool, TailError> {
        Ok(self.tail_membership_detail(s, z)? == Membership::Inside)
    }

    /// [`TailContext::tail_membership`], keeping overflow apart.
    pub fn tail_membership_detail(&self, s: &FiniteAddress, z: Complex64) -> Result<Membership, TailError> {
        let n = self.level_of(s.len())?;
        let steps = (n - 1) * self.m();
        let mut w = z;
        for k in 0..steps {
            if !self.in_region(w, k)? || self.map.strip_label(w) != s.entry(k) {
                return Ok(Membership::Outside);
            }
            w = match self.map.evaluate(w) {
                Ok(v) if v.re.is_finite() && v.im.is_finite() => v,
                _ => return Ok(Membership::Escaped { step: k + 1 }),
            };
        }
        Ok(if self.tail1_membership(s.last(), w)? {
            Membership::Inside
        } else {
            Membership::Outside
        })
    }

    /// A point of `τ_1(F)`, tried at a few heights inside the strip.
    pub fn tail1_witness(&self, label: DomainLabel) -> Option<Complex64> {
        let x = ((self.r + self.map.c().norm()).ln() + 1.0).max(10.0);
        [0.25, -0.25, 0.5, -0.5, 0.75, -0.75, 0.0, 0.9, -0.9]
            .iter()
            .map(|f| Complex64::new(x, TAU * label.0 as f64 + f * PI))
            .find(|&z| matches!(self.tail1_membership(label, z), Ok(true)))
    }

    /// Whether `τ_n(s)` exists, certified by pulling a level-1 witness back
    /// along `project(s, n, m)`.
    pub fn tail_exists(&self, s: &InfiniteAddress, n: usize) -> TailAddressRecord {
        let m = self.m();
        let address = s.project(n, m);
        let mut record = TailAddressRecord {
            address: address.clone(),
            level: n,
            exists: false,
            indeterminate: false,
            witness: None,
            reason: None,
        };
        let Some(w1) = self.tail1_witness(address.last()) else {
            record.reason = Some(format!("no level-1 tail in F_{}", address.last()));
            return record;
        };
        let chain = match pullback_chain(&self.map, s, w1, (n - 1) * m) {
            Ok(c) => c,
            Err(e) => {
                record.reason = Some(e.to_string());
                return record;
            }
        };
        record.witness = Some(chain[0]);
        match self.tail_membership(&address, chain[0]) {
            Ok(true) => record.exists = true,
            Ok(false) => record.reason = Some("pulled-back witness fails membership".into()),
            Err(e) => {
                record.indeterminate = true;
                record.reason = Some(e.to_string());
            }
        }
        record
    }

    /// Sample `τ_1(σ^{mn}s) ∩ D_r` on a grid of about `samples` cells and
    /// pull every kept point back `mn` steps along `s`, keeping the points
    /// of `τ_{n+1}(s) ∖ τ_n(s)`.
    pub fn piece_points(&self, s: &InfiniteAddress, n: usize, samples: usize) -> PieceSample {
        let m = self.m();
        let label = s.entry(m * n);
        let g = (samples as f64).sqrt().ceil().max(1.0) as usize;
        let x0 = self.map.tract_threshold();
        let x1 = self.r.max(x0);
        let y0 = TAU * label.0 as f64 - PI;
        let cells: Vec<Complex64> = (0..g * g)
            .map(|k| {
                let (i, j) = (k / g, k % g);
                Complex64::new(
                    x0 + (x1 - x0) * (i as f64 + 0.5) / g as f64,
                    y0 + TAU * (j as f64 + 0.5) / g as f64,
                )
            })
            .collect();
        let outcomes: Vec<SampleOutcome> = cells
            .par_iter()
            .map(|&w| self.piece_sample(s, n, label, w))
            .collect();
        let mut out = PieceSample {
            address: s.clone(),
            level: n,
            grid: g * g,
            seeds: 0,
            points: Vec::new(),
            indeterminate: 0,
            rejected: 0,
        };
        for o in outcomes {
            match o {
                SampleOutcome::Outside => {}
                SampleOutcome::Point(z) => {
                    out.seeds += 1;
                    out.points.push(z);
                }
                SampleOutcome::Indeterminate => {
                    out.seeds += 1;
                    out.indeterminate += 1;
                }
                SampleOutcome::Rejected => {
                    out.seeds += 1;
                    out.rejected += 1;
                }
            }
        }
        out
    }

    fn piece_sample(&self, s: &InfiniteAddress, n: usize, label: DomainLabel, w: Complex64) -> SampleOutcome {
        let m = self.m();
        if w.norm() >= self.r - SAMPLE_MARGIN {
            return SampleOutcome::Outside;
        }
        match self.tail1_with_margin(label, w, SAMPLE_MARGIN) {
            Ok(true) => {}
            Ok(false) => return SampleOutcome::Outside,
            Err(_) => return SampleOutcome::Indeterminate,
        }
        let Ok(chain) = pullback_chain(&self.map, s, w, n * m) else {
            return SampleOutcome::Rejected;
        };
        for (k, &z) in chain[..n * m].iter().enumerate() {
            match self.in_region(z, k) {
                Ok(true) => {}
                Ok(false) => return SampleOutcome::Rejected,
                Err(_) => return SampleOutcome::Indeterminate,
            }
        }
        if n >= 1 {
            // not in τ_n(s): the level-1 test fails at f^{m(n-1)}
            let k = m * (n - 1);
            match self.tail1_membership(s.entry(k), chain[k]) {
                Ok(false) => {}
                Ok(true) => return SampleOutcome::Rejected,
                Err(_) => return SampleOutcome::Indeterminate,
            }
        }
        SampleOutcome::Point(chain[0])
    }

    /// Diameter of the sampled piece `P_n(s)`; a lower bound.
    pub fn piece_diameter(&self, s: &InfiniteAddress, n: usize, samples: usize) -> PieceDiameter {
        let sample = self.piece_points(s, n, samples);
        let diameter = point_cloud_diameter(&sample.points);
        PieceDiameter {
            address: s.clone(),
            level: n,
            diameter,
            empty: sample.points.is_empty(),
            grid: sample.grid,
            valid: sample.points.len(),
            indeterminate: sample.indeterminate,
        }
    }

    /// Check `f^m(P_j(s)) ⊆ P_{j-1}(σ^m s)` on sampled points.
    pub fn piece_mapping_check(&self, s: &InfiniteAddress, j: usize, samples: usize) -> Result<MappingCheck, TailError> {
        if j < 2 {
            return Err(TailError::Precondition(format!("piece mapping needs j >= 2, got {j}")));
        }
        let m = self.m();
        let sample = self.piece_points(s, j, samples);
        let image = s.shift_by(m);
        let upper = image.project(j, m);
        let lower = image.project(j - 1, m);
        let verdicts: Vec<Option<bool>> = sample
            .points
            .par_iter()
            .map(|&z| {
                let w = self.map.iterate(z, m).ok()?;
                let inside = self.tail_membership(&upper, w).ok()?;
                let below = self.tail_membership(&lower, w).ok()?;
                Some(inside && !below)
            })
            .collect();
        let valid = verdicts.iter().filter(|v| v.is_some()).count();
        let conforming = verdicts.iter().filter(|v| **v == Some(true)).count();
        let indeterminate = sample.indeterminate + (verdicts.len() - valid);
        Ok(MappingCheck {
            address: s.clone(),
            j,
            valid,
            conforming,
            indeterminate,
            passed: valid > 0 && conforming == valid,
        })
    }

    /// Tail existence and piece diameter for levels `1..=levels`.
    pub fn diagnostics(&self, s: &InfiniteAddress, levels: usize, samples: usize) -> Vec<TailLevelReport> {
        (1..=levels)
            .map(|n| {
                let record = self.tail_exists(s, n);
                let piece = record.exists.then(|| self.piece_diameter(s, n, samples));
                TailLevelReport { record, piece }
            })
            .collect()
    }

    pub fn summary(&self) -> TailContextSummary {
        TailContextSummary {
            cycle: self.cycle.clone(),
            p: self.graph.p,
            window: self.graph.window,
            removed: self.removed.clone(),
            regions: self.regions.iter().map(|r| r.id).collect(),
            r: self.r,
            horizon: self.horizon,
            radius: self.radius.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Membership {
    Inside,
    Outside,
    /// `f^step(z)` overflowed before level 1 was reached.
    Escaped { step: usize },
}

enum SampleOutcome {
    Outside,
    Point(Complex64),
    Indeterminate,
    Rejected,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TailAddressRecord {
    pub address: FiniteAddress,
    pub level: usize,
    pub exists: bool,
    /// Region location of the witness hit an arc.
    pub indeterminate: bool,
    #[serde(serialize_with = "ser_opt_c64")]
    pub witness: Option<Complex64>,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PieceSample {
    pub address: InfiniteAddress,
    pub level: usize,
    pub grid: usize,
    /// Grid cells inside `τ_1 ∩ D_r`.
    pub seeds: usize,
    pub points: Vec<Complex64>,
    pub indeterminate: usize,
    pub rejected: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PieceDiameter {
    pub address: InfiniteAddress,
    pub level: usize,
    pub diameter: f64,
    pub empty: bool,
    pub grid: usize,
    pub valid: usize,
    pub indeterminate: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MappingCheck {
    pub address: InfiniteAddress,
    pub j: usize,
    pub valid: usize,
    pub conforming: usize,
    pub indeterminate: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TailLevelReport {
    #[serde(flatten)]
    pub record: TailAddressRecord,
    pub piece: Option<PieceDiameter>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TailContextSummary {
    pub cycle: Cycle,
    pub p: usize,
    pub window: u32,
    pub removed: Vec<InfiniteAddress>,
    pub regions: Vec<usize>,
    pub r: f64,
    pub horizon: usize,
    pub radius: RadiusChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WitnessLimit {
    #[serde(serialize_with = "ser_c64")]
    pub point: Complex64,
    pub steps: usize,
}

/// `ζ_{kq}(s) = ψ^k(ζ)` for `k = 1..=count`, with `q` the period of `s`.
pub fn pullback_witnesses(
    map: &MapModel,
    s: &InfiniteAddress,
    zeta: Complex64,
    count: usize,
) -> Result<Vec<Complex64>, RayError> {
    if !s.is_periodic() {
        return Err(RayError::NotPeriodic(s.to_string()));
    }
    let mut out = Vec::with_capacity(count);
    let mut z = zeta;
    for _ in 0..count {
        z = psi(map, s, z)?;
        if !(z.re.is_finite() && z.im.is_finite()) || z.norm() > DEFAULT_ESCAPE_THRESHOLD {
            break;
        }
        out.push(z);
    }
    Ok(out)
}

/// First term of `seq` after which consecutive steps stay below `tol` for
/// the rest of the sequence (at least three steps).
pub fn cauchy_limit(seq: &[Complex64], tol: f64) -> Option<WitnessLimit> {
    let steps: Vec<f64> = seq.windows(2).map(|w| (w[1] - w[0]).norm()).collect();
    let tail_ok = steps.iter().rev().take_while(|d| **d < tol).count();
    if tail_ok < 3 {
        return None;
    }
    Some(WitnessLimit {
        point: *seq.last()?,
        steps: seq.len(),
    })
}

/// Largest pairwise distance.
pub fn point_cloud_diameter(points: &[Complex64]) -> f64 {
    points
        .par_iter()
        .enumerate()
        .map(|(i, p)| points[i + 1..].iter().map(|q| (p - q).norm()).fold(0.0, f64::max))
        .reduce(|| 0.0, f64::max)
}
