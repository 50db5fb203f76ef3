//! The graph `Γ` of landed periodic rays fixed by `f^p` and the basic regions
//! of its complement.
//!
//! Distinct rays are disjoint and land at finitely many points, so `Γ` is a
//! disjoint union of stars: a landing point with `k ≥ 1` rays leaving it
//! towards `Re → +∞`. A star with `k` rays cuts the plane into `k` sectors,
//! and a basic region is determined by the sector it occupies for each star
//! with `k ≥ 2`. Sectors are read off by walking the horizontal half-line
//! from a point to `+∞` and toggling across every ray it meets. Arcs are
//! traced up to `Re = truncation` and continued horizontally from there.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cycles::Cycle;
use crate::geometry::{point_segment_distance, segments_intersect};
use crate::map::MapModel;
use crate::rays::{landing_point, ray_point, LandingOptions, LandingResult, LandingStatus};
use crate::report::{ser_c64, ser_vec_c64};
use crate::symbolic::{enumerate_periodic, InfiniteAddress};

pub const SNAP_TOL: f64 = 1e-9;
/// Horizontal extensions run to this real part.
pub const EXTENSION_RE: f64 = 1e6;
/// Arc tracing stops once a sample is this close to the landing point.
pub const LANDING_APPROACH: f64 = 1e-6;
/// Arcs landing this close together belong to the same star.
pub const STAR_TOL: f64 = 1e-8;

const T_RATIO: f64 = 0.85;
const T_FLOOR: f64 = 1e-6;
const REFINE_GAP: f64 = 0.02;
const REFINE_LEVELS: usize = 12;
const SCAN_LINES: usize = 80;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RegionError {
    #[error("point {z} lies within {SNAP_TOL:e} of the arc for address {address}")]
    OnArc { z: Complex64, address: String },
    #[error("point {0} could not be assigned a consistent sector")]
    Unlocatable(Complex64),
}

/// A landed ray, from its landing point outwards.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Arc {
    pub address: InfiniteAddress,
    #[serde(serialize_with = "ser_c64")]
    pub landing: Complex64,
    /// `points[0]` is the landing point, the last point has
    /// `Re > truncation` and is continued horizontally.
    #[serde(serialize_with = "ser_vec_c64")]
    pub points: Vec<Complex64>,
    /// Distance from the innermost traced sample to the landing point.
    pub gap: f64,
    /// Potential of the innermost traced sample.
    pub t_min: f64,
}

impl Arc {
    /// Height of the horizontal extension.
    pub fn height(&self) -> f64 {
        self.points.last().expect("nonempty").im
    }

    fn segments(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        let last = *self.points.last().expect("nonempty");
        self.points
            .windows(2)
            .map(|w| (w[0], w[1]))
            .chain(std::iter::once((last, Complex64::new(EXTENSION_RE.max(last.re), last.im))))
    }
}

/// Trace the landed ray `G_s` down to within `LANDING_APPROACH` of its
/// landing point, refining where consecutive samples are far apart.
pub fn trace_arc(map: &MapModel, s: &InfiniteAddress, landing: Complex64, depth: usize) -> Arc {
    let x_trunc = truncation_re(map);
    let mut samples: Vec<(f64, Complex64)> = Vec::new();
    let mut t = x_trunc + 1.0;
    while t >= T_FLOOR {
        let Ok((z, _)) = ray_point(map, s, t, depth) else {
            break;
        };
        samples.push((t, z));
        if (z - landing).norm() < LANDING_APPROACH {
            break;
        }
        t *= T_RATIO;
    }
    samples.reverse();
    for _ in 0..REFINE_LEVELS {
        let mut refined = Vec::with_capacity(samples.len() * 2);
        let mut changed = false;
        for (i, &(ti, zi)) in samples.iter().enumerate() {
            if i > 0 {
                let (tp, zp) = samples[i - 1];
                if (zi - zp).norm() > REFINE_GAP && ti < 40.0 {
                    let tm = (tp * ti).sqrt();
                    if let Ok((zm, _)) = ray_point(map, s, tm, depth) {
                        refined.push((tm, zm));
                        changed = true;
                    }
                }
            }
            refined.push((ti, zi));
        }
        samples = refined;
        if !changed {
            break;
        }
    }
    let (t_min, gap) = samples
        .first()
        .map(|&(t, z)| (t, (z - landing).norm()))
        .unwrap_or((f64::NAN, f64::INFINITY));
    let mut points = vec![landing];
    for (_, z) in samples {
        if points.last() != Some(&z) {
            points.push(z);
        }
    }
    Arc {
        address: s.clone(),
        landing,
        points,
        gap,
        t_min,
    }
}

/// `max(2R, 100)`: arcs are traced up to this real part.
pub fn truncation_re(map: &MapModel) -> f64 {
    (2.0 * map.tract_radius()).max(100.0)
}

/// Opaque region label with a representative point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionId {
    pub id: usize,
    #[serde(serialize_with = "ser_c64")]
    pub representative: Complex64,
}

impl Eq for RegionId {}

impl PartialOrd for RegionId {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RegionId {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.id.cmp(&other.id)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Star {
    #[serde(serialize_with = "ser_c64")]
    pub landing: Complex64,
    /// Arc indices ordered by the height of their horizontal extension.
    pub arcs: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RayGraph {
    pub p: usize,
    pub window: u32,
    pub depth: usize,
    pub truncation: f64,
    pub arcs: Vec<Arc>,
    pub stars: Vec<Star>,
    pub regions: Vec<RegionId>,
    /// Addresses whose landing was not established; excluded from `Γ`.
    pub excluded: Vec<LandingResult>,
    #[serde(skip)]
    labels: Vec<Vec<usize>>,
}

/// Attempt landing for every address of `enumerate_periodic(window, p)`;
/// landed rays become arcs of `Γ`, the rest are listed in `excluded`.
pub fn build_ray_graph(map: &MapModel, p: usize, window: u32, depth: usize) -> RayGraph {
    let mut addresses = enumerate_periodic(window, p);
    addresses.sort();
    addresses.dedup();
    let outcomes: Vec<Result<Arc, Box<LandingResult>>> = addresses
        .par_iter()
        .map(|s| {
            let landing = match landing_point(map, s, &LandingOptions::default()) {
                Ok(r) => r,
                Err(e) => LandingResult {
                    address: s.clone(),
                    status: LandingStatus::NotConverged,
                    point: None,
                    psi_derivative: None,
                    multiplier: None,
                    iterations: 0,
                    detail: Some(e.to_string()),
                },
            };
            match (landing.status, landing.point) {
                (LandingStatus::Landed, Some(z)) => Ok(trace_arc(map, s, z, depth)),
                _ => Err(Box::new(landing)),
            }
        })
        .collect();
    let mut arcs = Vec::new();
    let mut excluded = Vec::new();
    for o in outcomes {
        match o {
            Ok(a) => arcs.push(a),
            Err(d) => excluded.push(*d),
        }
    }
    RayGraph::from_arcs(map, p, window, depth, arcs, excluded)
}

impl RayGraph {
    pub fn from_arcs(
        map: &MapModel,
        p: usize,
        window: u32,
        depth: usize,
        arcs: Vec<Arc>,
        excluded: Vec<LandingResult>,
    ) -> RayGraph {
        let mut stars: Vec<Star> = Vec::new();
        for (k, arc) in arcs.iter().enumerate() {
            match stars
                .iter_mut()
                .find(|s| (s.landing - arc.landing).norm() <= STAR_TOL * arc.landing.norm().max(1.0))
            {
                Some(s) => s.arcs.push(k),
                None => stars.push(Star {
                    landing: arc.landing,
                    arcs: vec![k],
                }),
            }
        }
        for s in &mut stars {
            s.arcs
                .sort_by(|&a, &b| arcs[a].height().total_cmp(&arcs[b].height()).then(a.cmp(&b)));
        }
        let mut g = RayGraph {
            p,
            window,
            depth,
            truncation: truncation_re(map),
            arcs,
            stars,
            regions: Vec::new(),
            excluded,
            labels: Vec::new(),
        };
        g.enumerate_regions();
        g
    }

    /// The same graph without the arcs landing within `tol` of any of
    /// `points`.
    pub fn without_arcs_landing_at(&self, map: &MapModel, points: &[Complex64], tol: f64) -> RayGraph {
        let arcs: Vec<Arc> = self
            .arcs
            .iter()
            .filter(|a| points.iter().all(|z| (a.landing - z).norm() > tol))
            .cloned()
            .collect();
        RayGraph::from_arcs(map, self.p, self.window, self.depth, arcs, self.excluded.clone())
    }

    fn branching_stars(&self) -> impl Iterator<Item = &Star> {
        self.stars.iter().filter(|s| s.arcs.len() >= 2)
    }

    /// Sector of `z` for one star: 0 is the sector containing the left
    /// half-plane, `i ≥ 1` lies between the `(i-1)`-th and `i`-th rays in
    /// height order.
    fn sector(&self, star: &Star, z: Complex64) -> Option<usize> {
        let k = star.arcs.len();
        let y = z.im;
        let below = star.arcs.iter().filter(|&&a| self.arcs[a].height() <= y).count();
        let mut sector = if below == 0 || below == k { 0 } else { below };
        let mut hits: Vec<(f64, usize)> = Vec::new();
        for (pos, &a) in star.arcs.iter().enumerate() {
            for (p, q) in self.arcs[a].segments() {
                if (p.im > y) != (q.im > y) {
                    let x = p.re + (y - p.im) * (q.re - p.re) / (q.im - p.im);
                    if x > z.re {
                        hits.push((x, pos));
                    }
                }
            }
        }
        hits.sort_by(|a, b| b.0.total_cmp(&a.0));
        for (_, pos) in hits {
            let lower = pos;
            let upper = (pos + 1) % k;
            sector = if sector == lower {
                upper
            } else if sector == upper {
                lower
            } else {
                return None;
            };
        }
        Some(sector)
    }

    fn label(&self, z: Complex64) -> Option<Vec<usize>> {
        self.branching_stars().map(|s| self.sector(s, z)).collect()
    }

    /// Collect every realised label from points between consecutive arc
    /// crossings on a family of vertical lines; ids follow label order.
    fn enumerate_regions(&mut self) {
        let mut found: BTreeMap<Vec<usize>, Complex64> = BTreeMap::new();
        let far = self
            .arcs
            .iter()
            .map(|a| a.points.last().expect("nonempty").re)
            .fold(self.truncation, f64::max)
            + 1.0;
        let left = self
            .arcs
            .iter()
            .flat_map(|a| a.points.iter().map(|z| z.re))
            .fold(far, f64::min)
            - 1.0;
        let mut xs = vec![far];
        for i in 0..SCAN_LINES {
            // denser towards the landing points
            let s = (i as f64 + 0.5) / SCAN_LINES as f64;
            xs.push(left + (far - left) * s * s);
        }
        for x in xs {
            let mut ys: Vec<f64> = Vec::new();
            for arc in &self.arcs {
                for (p, q) in arc.segments() {
                    if (p.re > x) != (q.re > x) {
                        ys.push(p.im + (x - p.re) * (q.im - p.im) / (q.re - p.re));
                    }
                }
            }
            ys.sort_by(f64::total_cmp);
            ys.dedup();
            let mut probes = Vec::with_capacity(ys.len() + 1);
            match (ys.first(), ys.last()) {
                (Some(&lo), Some(&hi)) => {
                    probes.push(lo - 1.0);
                    probes.push(hi + 1.0);
                }
                _ => probes.push(0.0),
            }
            for w in ys.windows(2) {
                if w[1] - w[0] > 4.0 * SNAP_TOL {
                    probes.push(0.5 * (w[0] + w[1]));
                }
            }
            for y in probes {
                let z = Complex64::new(x, y);
                if self.distance_to_arcs(z, SNAP_TOL).is_some() {
                    continue;
                }
                if let Some(l) = self.label(z) {
                    found.entry(l).or_insert(z);
                }
            }
        }
        if found.is_empty() {
            found.insert(Vec::new(), Complex64::new(far, 0.0));
        }
        self.labels = found.keys().cloned().collect();
        self.regions = found
            .values()
            .enumerate()
            .map(|(id, &representative)| RegionId { id, representative })
            .collect();
    }

    /// Whether the segment `[p, q]` meets an arc (extensions included).
    pub fn segment_crosses_arcs(&self, p: Complex64, q: Complex64) -> bool {
        let (lo_re, hi_re) = (p.re.min(q.re), p.re.max(q.re));
        let (lo_im, hi_im) = (p.im.min(q.im), p.im.max(q.im));
        self.arcs.iter().any(|arc| {
            arc.segments().any(|(a, b)| {
                a.re.max(b.re) >= lo_re
                    && a.re.min(b.re) <= hi_re
                    && a.im.max(b.im) >= lo_im
                    && a.im.min(b.im) <= hi_im
                    && segments_intersect(p, q, a, b)
            })
        })
    }

    /// Distance from `z` to the nearest arc when it is at most `within`,
    /// with that arc's index.
    pub fn distance_to_arcs(&self, z: Complex64, within: f64) -> Option<(f64, usize)> {
        let mut best: Option<(f64, usize)> = None;
        for (k, arc) in self.arcs.iter().enumerate() {
            for (a, b) in arc.segments() {
                if a.re.min(b.re) - within > z.re
                    || a.re.max(b.re) + within < z.re
                    || a.im.min(b.im) - within > z.im
                    || a.im.max(b.im) + within < z.im
                {
                    continue;
                }
                let d = point_segment_distance(z, a, b);
                if d <= within && best.is_none_or(|(b, _)| d < b) {
                    best = Some((d, k));
                }
            }
        }
        best
    }

    pub fn regions(&self) -> &[RegionId] {
        &self.regions
    }

    /// Region containing `z`.
    pub fn basic_region_of(&self, z: Complex64) -> Result<RegionId, RegionError> {
        if let Some((_, arc)) = self.distance_to_arcs(z, SNAP_TOL) {
            return Err(RegionError::OnArc {
                z,
                address: self.arcs[arc].address.to_string(),
            });
        }
        let label = self.label(z).ok_or(RegionError::Unlocatable(z))?;
        self.labels
            .binary_search(&label)
            .map(|i| self.regions[i])
            .map_err(|_| RegionError::Unlocatable(z))
    }

    /// Landing points of the arcs.
    pub fn landing_points(&self) -> Vec<Complex64> {
        self.arcs.iter().map(|a| a.landing).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ItineraryEntry {
    Region { id: usize },
    OnArc,
    Escaped,
    Unlocatable,
}

/// Regions of `z, f(z), …, f^{n_steps}(z)`.
pub fn itinerary(map: &MapModel, graph: &RayGraph, z: Complex64, n_steps: usize) -> Vec<ItineraryEntry> {
    let mut out = Vec::with_capacity(n_steps + 1);
    let mut w = Some(z);
    for _ in 0..=n_steps {
        match w {
            None => out.push(ItineraryEntry::Escaped),
            Some(p) => {
                out.push(match graph.basic_region_of(p) {
                    Ok(r) => ItineraryEntry::Region { id: r.id },
                    Err(RegionError::OnArc { .. }) => ItineraryEntry::OnArc,
                    Err(RegionError::Unlocatable(_)) => ItineraryEntry::Unlocatable,
                });
                w = map.evaluate(p).ok().filter(|v| v.re.is_finite() && v.im.is_finite());
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixedPointEntry {
    #[serde(serialize_with = "ser_c64")]
    pub point: Complex64,
    pub cycle_period: usize,
    pub class: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeparationAudit {
    pub p: usize,
    pub window: u32,
    /// Region id → interior fixed points of `f^p` in it.
    pub interior: BTreeMap<usize, Vec<FixedPointEntry>>,
    /// Fixed points of `f^p` that are landing points of arcs.
    pub landing: Vec<FixedPointEntry>,
    /// Fixed points lying on an arc away from its landing point, or that
    /// could not be located.
    pub unresolved: Vec<FixedPointEntry>,
    pub violations: Vec<String>,
    pub warnings: Vec<String>,
    pub passed: bool,
}

/// Assign every fixed point of `f^p` (points of cycles whose period divides
/// `p`) either to an arc landing point or to its region, and flag regions
/// with two or more interior fixed points.
pub fn interior_fixed_point_audit(graph: &RayGraph, cycles: &[Cycle]) -> SeparationAudit {
    let mut interior: BTreeMap<usize, Vec<FixedPointEntry>> = BTreeMap::new();
    let mut landing = Vec::new();
    let mut unresolved = Vec::new();
    let landings = graph.landing_points();
    for cycle in cycles.iter().filter(|c| graph.p.is_multiple_of(c.period)) {
        for &z in &cycle.points {
            let entry = FixedPointEntry {
                point: z,
                cycle_period: cycle.period,
                class: cycle.class.name(),
            };
            if landings.iter().any(|l| (l - z).norm() <= 1e-8 * z.norm().max(1.0)) {
                landing.push(entry);
                continue;
            }
            match graph.basic_region_of(z) {
                Ok(r) => interior.entry(r.id).or_default().push(entry),
                Err(_) => unresolved.push(entry),
            }
        }
    }
    let mut violations = Vec::new();
    for (id, pts) in &interior {
        if pts.len() >= 2 {
            violations.push(format!(
                "region {id} holds {} interior fixed points of f^{}",
                pts.len(),
                graph.p
            ));
        }
    }
    let mut warnings = Vec::new();
    if !graph.excluded.is_empty() {
        warnings.push(format!(
            "{} address(es) in the window did not land and are missing from the graph",
            graph.excluded.len()
        ));
    }
    if !unresolved.is_empty() {
        warnings.push(format!("{} fixed point(s) could not be located", unresolved.len()));
    }
    SeparationAudit {
        p: graph.p,
        window: graph.window,
        passed: violations.is_empty(),
        interior,
        landing,
        unresolved,
        violations,
        warnings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{find_cycles, CycleSearchOptions};
    use crate::geometry::SearchBox;

    fn minus2() -> MapModel {
        MapModel::exponential(Complex64::new(-2.0, 0.0)).unwrap()
    }

    fn report_box() -> SearchBox {
        SearchBox::new(-3.0, 3.0, -7.0, 7.0).unwrap()
    }

    fn straight_arc(k: i64, landing: Complex64, height: f64) -> Arc {
        Arc {
            address: InfiniteAddress::constant(k),
            landing,
            points: vec![landing, Complex64::new(landing.re + 1.0, height), Complex64::new(200.0, height)],
            gap: 0.0,
            t_min: 1.0,
        }
    }

    #[test]
    fn fixed_ray_graph_for_minus_two() {
        let f = minus2();
        let g = build_ray_graph(&f, 1, 1, 40);
        assert_eq!(g.arcs.len(), 3);
        assert!(g.excluded.is_empty());
        let real = g.arcs.iter().find(|a| a.address == InfiniteAddress::constant(0)).unwrap();
        assert!((real.landing - 1.146_193_220_620_582_5).norm() < 1e-12);
        assert!(real.gap < LANDING_APPROACH);
        assert!(real.points.iter().all(|z| z.im == 0.0));
        let up = g.arcs.iter().find(|a| a.address == InfiniteAddress::constant(1)).unwrap();
        let down = g.arcs.iter().find(|a| a.address == InfiniteAddress::constant(-1)).unwrap();
        assert!((up.landing - down.landing.conj()).norm() < 1e-12);
        assert!(up.points.last().unwrap().re > g.truncation);
        assert_eq!(g.stars.len(), 3);
    }

    #[test]
    fn window_zero_period_two_has_one_arc() {
        let f = minus2();
        let g = build_ray_graph(&f, 2, 0, 40);
        assert_eq!(g.arcs.len(), 1);
        assert_eq!(g.arcs[0].address, InfiniteAddress::constant(0));
    }

    #[test]
    fn point_location_examples() {
        let f = minus2();
        let g = build_ray_graph(&f, 1, 1, 40);
        let a = g.basic_region_of(Complex64::new(-1.841_405_660_436_960_6, 0.0)).unwrap();
        let b = g.basic_region_of(Complex64::new(-1.0, 0.0)).unwrap();
        assert_eq!(a, b);
        assert!(matches!(
            g.basic_region_of(Complex64::new(1.146_193_220_620_582_5, 0.0)),
            Err(RegionError::OnArc { .. })
        ));
        assert!(matches!(
            g.basic_region_of(Complex64::new(2.0, 0.0)),
            Err(RegionError::OnArc { .. })
        ));
        // three rays with distinct landing points are slits: one region
        assert_eq!(g.regions().len(), 1);
        let up = g.basic_region_of(Complex64::new(5.0, 3.0)).unwrap();
        let down = g.basic_region_of(Complex64::new(5.0, -3.0)).unwrap();
        assert_eq!(up, down);
    }

    #[test]
    fn two_rays_at_one_point_make_two_regions() {
        let f = minus2();
        let l = Complex64::new(0.0, 0.0);
        let arcs = vec![straight_arc(0, l, -1.0), straight_arc(1, l, 1.0)];
        let g = RayGraph::from_arcs(&f, 1, 1, 40, arcs, Vec::new());
        assert_eq!(g.regions().len(), 2);
        let inside = g.basic_region_of(Complex64::new(50.0, 0.0)).unwrap();
        let left = g.basic_region_of(Complex64::new(-5.0, 0.0)).unwrap();
        let above = g.basic_region_of(Complex64::new(50.0, 3.0)).unwrap();
        assert_ne!(inside, left);
        assert_eq!(left, above);
        assert_eq!(g.basic_region_of(Complex64::new(0.5, 0.1)).unwrap(), inside);
        // a third ray adds a third region
        let arcs = vec![straight_arc(0, l, -1.0), straight_arc(1, l, 1.0), straight_arc(2, l, 4.0)];
        let g = RayGraph::from_arcs(&f, 1, 1, 40, arcs, Vec::new());
        assert_eq!(g.regions().len(), 3);
        for r in g.regions() {
            assert_eq!(g.basic_region_of(r.representative).unwrap(), *r);
        }
    }

    #[test]
    fn region_ids_are_stable_near_representatives() {
        let f = minus2();
        let l = Complex64::new(0.0, 0.0);
        let arcs = vec![straight_arc(0, l, -1.0), straight_arc(1, l, 1.0)];
        let g = RayGraph::from_arcs(&f, 1, 1, 40, arcs, Vec::new());
        for r in g.regions() {
            for k in 0..8 {
                let d = Complex64::from_polar(1e-3, k as f64 * std::f64::consts::FRAC_PI_4);
                assert_eq!(g.basic_region_of(r.representative + d).unwrap(), *r);
            }
        }
    }

    #[test]
    fn empty_graph_is_one_region() {
        let f = minus2();
        let g = RayGraph::from_arcs(&f, 1, 0, 40, Vec::new(), Vec::new());
        assert_eq!(g.regions().len(), 1);
        let cycles = find_cycles(&f, 1, report_box(), &CycleSearchOptions::default()).cycles;
        let audit = interior_fixed_point_audit(&g, &cycles);
        assert!(!audit.passed);
        assert_eq!(audit.interior.values().map(Vec::len).sum::<usize>(), 2);
    }

    #[test]
    fn itinerary_of_attracting_point_and_singular_value() {
        let f = minus2();
        let g = build_ray_graph(&f, 1, 1, 40);
        let fixed = Complex64::new(-1.841_405_660_436_960_6, 0.0);
        let it = itinerary(&f, &g, fixed, 5);
        assert!(it.windows(2).all(|w| w[0] == w[1]));
        let from_c = itinerary(&f, &g, Complex64::new(-2.0, 0.0), 20);
        assert_eq!(from_c.last(), it.last());

        let exp = MapModel::exponential(Complex64::new(0.0, 0.0)).unwrap();
        let ge = RayGraph::from_arcs(&exp, 1, 0, 40, Vec::new(), Vec::new());
        let it = itinerary(&exp, &ge, Complex64::new(0.0, 0.0), 5);
        assert_eq!(it[4], ItineraryEntry::Region { id: 0 });
        assert_eq!(it[5], ItineraryEntry::Escaped);
    }

    #[test]
    fn separation_audit_for_minus_two() {
        let f = minus2();
        let g = build_ray_graph(&f, 1, 1, 40);
        let cycles = find_cycles(&f, 1, report_box(), &CycleSearchOptions::default()).cycles;
        let audit = interior_fixed_point_audit(&g, &cycles);
        assert!(audit.passed, "{audit:?}");
        assert_eq!(audit.landing.len(), 1);
        let interior: Vec<&FixedPointEntry> = audit.interior.values().flatten().collect();
        assert_eq!(interior.len(), 1);
        assert!((interior[0].point.re + 1.841_405_660_436_960_6).abs() < 1e-12);
    }
}
