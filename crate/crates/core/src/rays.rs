//! Dynamic rays by backward iteration of the labelled inverse branches,
//! pullbacks along addresses, landing, and the fate of the singular orbit.
//!
//! Rays are parametrised by escape potential. With `F(t) = e^t - 1` the
//! model map on potentials, a ray point is
//!
//! ```text
//! G_s(t) = L_{s_0} ∘ … ∘ L_{s_{n-1}}(F^n(t) + 2πi·s_n),
//! ```
//!
//! where `n` is the smaller of the requested depth and the first `k` with
//! `F^k(t) ≥ T_FAR`. Far out the straight seed is accurate to `e^{-T_FAR}`,
//! and the parametrisation satisfies `f(G_s(t)) = G_{σs}(F(t))`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::geometry::point_polyline_distance;
use crate::map::{MapError, MapModel};
use crate::report::{ser_c64, ser_opt_c64};
use crate::symbolic::InfiniteAddress;

/// Potential beyond which the straight seed `t + 2πi·k` is used.
pub const T_FAR: f64 = 40.0;
/// Depth-to-depth movement above which a trace is flagged unconverged.
pub const MOVEMENT_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_LANDING_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 10_000;
pub const DEFAULT_ESCAPE_THRESHOLD: f64 = 1e5;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RayError {
    #[error("inverse branch hit the singular value at step {step}")]
    SingularHit { step: usize },
    #[error("pullback crossed the cut at step {step}: w - c is negative real")]
    CutHit { step: usize },
    #[error("invalid potential {0}: potentials must be positive and finite")]
    InvalidPotential(f64),
    #[error("address {0} is not purely periodic")]
    NotPeriodic(String),
    #[error("pullback round trip failed at step {step}: residual {residual:e}")]
    RoundTripFailure { step: usize, residual: f64 },
}

/// The model map on potentials, `F(t) = e^t - 1`.
pub fn potential_map(t: f64) -> f64 {
    t.exp_m1()
}

/// Default seed potential `t₀ = max(50, 2R)`.
pub fn seed_potential(map: &MapModel) -> f64 {
    (2.0 * map.tract_radius()).max(50.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RaySample {
    pub t: f64,
    #[serde(serialize_with = "ser_c64")]
    pub z: Complex64,
    /// `|G^{(n+1)}(t) - G^{(n)}(t)|`: effect of one more branch level.
    pub movement: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ray {
    pub address: InfiniteAddress,
    pub depth: usize,
    pub samples: Vec<RaySample>,
    pub max_movement: f64,
    pub converged: bool,
}

impl Ray {
    pub fn points(&self) -> Vec<Complex64> {
        self.samples.iter().map(|s| s.z).collect()
    }

    /// CSV with header `t,re,im`, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,re,im\n");
        for s in &self.samples {
            out.push_str(&format!(
                "{},{},{}\n",
                crate::report::fmt_f64(s.t),
                crate::report::fmt_f64(s.z.re),
                crate::report::fmt_f64(s.z.im)
            ));
        }
        out
    }
}

fn step_error(_: MapError, step: usize) -> RayError {
    // the only failure of an inverse branch is w = c
    RayError::SingularHit { step }
}

/// `L_{s_0} ∘ … ∘ L_{s_{n-1}}(w)`.
fn compose(map: &MapModel, s: &InfiniteAddress, n: usize, seed: Complex64) -> Result<Complex64, RayError> {
    let mut w = seed;
    for i in (0..n).rev() {
        let b = map
            .inverse_branch_flagged(w, s.entry(i))
            .map_err(|e| step_error(e, i))?;
        if b.on_cut {
            return Err(RayError::CutHit { step: i });
        }
        w = b.z;
    }
    Ok(w)
}

/// `Log(1 + e)` accurate for small `e`.
fn ln_1p(e: Complex64) -> Complex64 {
    if e.norm() < 1e-8 {
        e - e * e / 2.0
    } else {
        (Complex64::new(1.0, 0.0) + e).ln()
    }
}

/// One ray point and its depth movement.
pub fn ray_point(
    map: &MapModel,
    s: &InfiniteAddress,
    t: f64,
    depth: usize,
) -> Result<(Complex64, f64), RayError> {
    if !(t.is_finite() && t > 0.0) {
        return Err(RayError::InvalidPotential(t));
    }
    let mut x = t;
    let mut n = 0;
    while n < depth && x < T_FAR {
        x = potential_map(x);
        n += 1;
    }
    let k = s.raw_entry(n) as f64;
    let next = s.raw_entry(n + 1) as f64;
    let seed = Complex64::new(x, TAU * k);
    // L_{s_n}(F(x) + 2πi·s_{n+1}), without forming e^x
    let deeper = if x > 20.0 {
        let eps = (Complex64::new(-1.0, TAU * next) - map.c()) * (-x).exp();
        seed + ln_1p(eps)
    } else {
        let w = Complex64::new(potential_map(x), TAU * next);
        let b = map
            .inverse_branch_flagged(w, s.entry(n))
            .map_err(|e| step_error(e, n))?;
        if b.on_cut {
            return Err(RayError::CutHit { step: n });
        }
        b.z
    };
    let z = compose(map, s, n, seed)?;
    let z_deeper = compose(map, s, n, deeper)?;
    Ok((z, (z_deeper - z).norm()))
}

/// Trace `G_s` over `t_grid` (sorted and deduplicated first). Consecutive
/// samples that coincide exactly are dropped.
pub fn trace_ray(
    map: &MapModel,
    s: &InfiniteAddress,
    depth: usize,
    t_grid: &[f64],
) -> Result<Ray, RayError> {
    let mut ts: Vec<f64> = t_grid.to_vec();
    if let Some(&bad) = ts.iter().find(|t| !(t.is_finite() && **t > 0.0)) {
        return Err(RayError::InvalidPotential(bad));
    }
    ts.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    ts.dedup();
    let mut samples: Vec<RaySample> = Vec::with_capacity(ts.len());
    let mut max_movement: f64 = 0.0;
    for t in ts {
        let (z, movement) = ray_point(map, s, t, depth)?;
        max_movement = max_movement.max(movement);
        if samples.last().is_some_and(|p| p.z == z) {
            continue;
        }
        samples.push(RaySample { t, z, movement });
    }
    Ok(Ray {
        address: s.clone(),
        depth,
        samples,
        max_movement,
        converged: max_movement <= MOVEMENT_TOLERANCE,
    })
}

/// Worst relative distance from `f(G_s(t))` to the polyline of
/// `G_{σs}` traced over the re-gridded potentials `F(t)`.
pub fn functional_equation_residual(
    map: &MapModel,
    s: &InfiniteAddress,
    depth: usize,
    t_grid: &[f64],
) -> Result<f64, RayError> {
    let ray = trace_ray(map, s, depth, t_grid)?;
    let regrid: Vec<f64> = ray.samples.iter().map(|p| potential_map(p.t)).collect();
    let image_ray = trace_ray(map, &s.shift(), depth, &regrid)?;
    let image_pts = image_ray.points();
    let mut worst: f64 = 0.0;
    for p in &ray.samples {
        let w = map.evaluate(p.z).map_err(|_| RayError::InvalidPotential(p.t))?;
        let d = point_polyline_distance(w, &image_pts) / w.norm().max(1.0);
        worst = worst.max(d);
    }
    Ok(worst)
}

/// Every point of a pullback chain: `chain[0] = ζ_n`, `chain[nm] = ζ`, with
/// `chain[i] = L_{s_i}(chain[i+1])`.
pub fn pullback_chain(
    map: &MapModel,
    s: &InfiniteAddress,
    zeta: Complex64,
    steps: usize,
) -> Result<Vec<Complex64>, RayError> {
    let mut chain = vec![Complex64::new(0.0, 0.0); steps + 1];
    chain[steps] = zeta;
    for i in (0..steps).rev() {
        let b = map
            .inverse_branch_flagged(chain[i + 1], s.entry(i))
            .map_err(|e| step_error(e, i))?;
        if b.on_cut {
            return Err(RayError::CutHit { step: i });
        }
        chain[i] = b.z;
    }
    Ok(chain)
}

/// `ζ_n(s) = L_{s_0} ∘ … ∘ L_{s_{nm-1}}(ζ)`. Each branch step is checked by
/// re-applying `f`; the full forward re-expansion in high precision lives in
/// [`crate::precise::round_trip_residual`].
pub fn pullback_along_address(
    map: &MapModel,
    s: &InfiniteAddress,
    zeta: Complex64,
    n: usize,
    m: usize,
) -> Result<Complex64, RayError> {
    let chain = pullback_chain(map, s, zeta, n * m)?;
    for i in 0..n * m {
        let target = chain[i + 1];
        let back = map
            .evaluate(chain[i])
            .map_err(|_| RayError::RoundTripFailure { step: i, residual: f64::INFINITY })?;
        let residual = (back - target).norm();
        if residual > 1e-12 * target.norm().max(map.c().norm()).max(1.0) {
            return Err(RayError::RoundTripFailure { step: i, residual });
        }
    }
    Ok(chain[0])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LandingStatus {
    Landed,
    NotConverged,
    EscapedPullback,
    SingularHit,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LandingResult {
    pub address: InfiniteAddress,
    pub status: LandingStatus,
    #[serde(serialize_with = "ser_opt_c64")]
    pub point: Option<Complex64>,
    /// `ψ'(z₀) = 1 / (f^p)'(z₀)`.
    #[serde(serialize_with = "ser_opt_c64")]
    pub psi_derivative: Option<Complex64>,
    /// `(f^p)'(z₀)`.
    #[serde(serialize_with = "ser_opt_c64")]
    pub multiplier: Option<Complex64>,
    pub iterations: usize,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LandingOptions {
    pub tol: f64,
    pub max_iter: usize,
    pub seed: Option<Complex64>,
    pub escape_threshold: f64,
}

impl Default for LandingOptions {
    fn default() -> Self {
        LandingOptions {
            tol: DEFAULT_LANDING_TOL,
            max_iter: DEFAULT_MAX_ITER,
            seed: None,
            escape_threshold: DEFAULT_ESCAPE_THRESHOLD,
        }
    }
}

/// One period of inverse branches, `ψ = L_{s_0} ∘ … ∘ L_{s_{p-1}}`.
pub fn psi(map: &MapModel, s: &InfiniteAddress, z: Complex64) -> Result<Complex64, RayError> {
    compose(map, s, s.period().max(1), z)
}

/// Newton on `f^p(z) - z`.
pub fn polish_periodic_point(map: &MapModel, z: Complex64, p: usize) -> Option<Complex64> {
    let mut z = z;
    for _ in 0..60 {
        let (w, d) = map.iterate_with_derivative(z, p).ok()?;
        let denom = d - 1.0;
        if denom.norm() == 0.0 {
            return None;
        }
        let step = (w - z) / denom;
        z -= step;
        if !(z.re.is_finite() && z.im.is_finite()) {
            return None;
        }
        if step.norm() <= 1e-15 * z.norm().max(1.0) {
            return Some(z);
        }
    }
    Some(z)
}

fn landing_failure(s: &InfiniteAddress, status: LandingStatus, iterations: usize, detail: String) -> LandingResult {
    LandingResult {
        address: s.clone(),
        status,
        point: None,
        psi_derivative: None,
        multiplier: None,
        iterations,
        detail: Some(detail),
    }
}

/// Decide landing of the periodic ray `G_s` by iterating `ψ` from the seed.
pub fn landing_point(
    map: &MapModel,
    s: &InfiniteAddress,
    opts: &LandingOptions,
) -> Result<LandingResult, RayError> {
    let p = s.period();
    if p == 0 {
        return Err(RayError::NotPeriodic(s.to_string()));
    }
    let mut zeta = opts
        .seed
        .unwrap_or_else(|| Complex64::new(seed_potential(map), TAU * s.raw_entry(0) as f64));
    let mut limit = None;
    let mut iterations = 0;
    for k in 1..=opts.max_iter {
        iterations = k;
        let next = match psi(map, s, zeta) {
            Ok(w) => w,
            Err(e) => {
                return Ok(landing_failure(s, LandingStatus::SingularHit, k, e.to_string()));
            }
        };
        if !(next.re.is_finite() && next.im.is_finite()) || next.norm() > opts.escape_threshold {
            return Ok(landing_failure(
                s,
                LandingStatus::EscapedPullback,
                k,
                format!("pullback left the working region at iteration {k}"),
            ));
        }
        if (next - zeta).norm() < opts.tol {
            limit = Some(next);
            break;
        }
        zeta = next;
    }
    let Some(limit) = limit else {
        return Ok(landing_failure(
            s,
            LandingStatus::NotConverged,
            iterations,
            format!("no convergence within {} iterations", opts.max_iter),
        ));
    };
    let z0 = match polish_periodic_point(map, limit, p) {
        Some(z) if (z - limit).norm() < 1e-6 => z,
        _ => limit,
    };
    let fixed = psi(map, s, z0).map(|w| (w - z0).norm());
    match fixed {
        Ok(r) if r < opts.tol => {}
        Ok(r) => {
            return Ok(landing_failure(
                s,
                LandingStatus::NotConverged,
                iterations,
                format!("refined point is not fixed by the branch composition (|ψ(z)-z| = {r:e})"),
            ));
        }
        Err(e) => {
            return Ok(landing_failure(s, LandingStatus::SingularHit, iterations, e.to_string()));
        }
    }
    let multiplier = map.iterate_with_derivative(z0, p).ok().map(|(_, d)| d);
    Ok(LandingResult {
        address: s.clone(),
        status: LandingStatus::Landed,
        point: Some(z0),
        psi_derivative: multiplier.map(|d| 1.0 / d),
        multiplier,
        iterations,
        detail: None,
    })
}

/// Finite-horizon fate of the singular orbit.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SingularEscape {
    EscapesAlongPeriodicRay {
        address: InfiniteAddress,
        escape_step: usize,
    },
    EscapesOther {
        escape_step: usize,
    },
    BoundedSoFar {
        horizon: usize,
    },
    EntersDRepeatedly {
        excursions: usize,
        horizon: usize,
    },
}

/// Iterate `c` for up to `horizon` steps. An orbit escapes once `Re z` passes
/// the overflow threshold or `|z| > DEFAULT_ESCAPE_THRESHOLD`; its escaping
/// tail (increasing moduli, inside the tract) is read off as labels, and a
/// label tail that repeats with some period `p` (length at least
/// `max(3, 2p)`) is reported as escape along the periodic ray with that word.
pub fn singular_escape_status(map: &MapModel, horizon: usize) -> SingularEscape {
    let mut orbit = vec![map.c()];
    let mut escape_step = None;
    let mut z = map.c();
    for step in 1..=horizon {
        match map.evaluate(z) {
            Ok(w) if w.re.is_finite() && w.im.is_finite() => {
                orbit.push(w);
                z = w;
                if w.norm() > DEFAULT_ESCAPE_THRESHOLD {
                    escape_step = Some(step);
                    break;
                }
            }
            _ => {
                escape_step = Some(step);
                break;
            }
        }
    }
    if let Some(escape_step) = escape_step {
        let mut start = orbit.len() - 1;
        while start > 0
            && orbit[start - 1].norm() < orbit[start].norm()
            && map.fundamental_domain_of(orbit[start - 1]).is_some()
        {
            start -= 1;
        }
        let labels: Vec<i64> = orbit[start..]
            .iter()
            .map_while(|w| map.fundamental_domain_of(*w).map(|l| l.0))
            .collect();
        if let Some(word) = periodic_tail(&labels) {
            if let Ok(address) = InfiniteAddress::periodic(word) {
                return SingularEscape::EscapesAlongPeriodicRay { address, escape_step };
            }
        }
        return SingularEscape::EscapesOther { escape_step };
    }
    let r = map.tract_radius();
    let mut excursions = 0;
    let mut outside = false;
    for w in &orbit {
        if !outside && w.norm() > 10.0 * r {
            outside = true;
        } else if outside && w.norm() <= r {
            outside = false;
            excursions += 1;
        }
    }
    if excursions >= 2 {
        SingularEscape::EntersDRepeatedly { excursions, horizon }
    } else {
        SingularEscape::BoundedSoFar { horizon }
    }
}

fn periodic_tail(labels: &[i64]) -> Option<Vec<i64>> {
    let len = labels.len();
    (1..=len / 2)
        .filter(|&p| len >= (2 * p).max(3))
        .find(|&p| (p..len).all(|i| labels[i] == labels[i - p]))
        .map(|p| labels[..p].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(c: Complex64) -> MapModel {
        MapModel::exponential(c).unwrap()
    }

    fn minus2() -> MapModel {
        m(Complex64::new(-2.0, 0.0))
    }

    fn siegel_c() -> Complex64 {
        let theta = (5f64.sqrt() - 1.0) / 2.0;
        let l = Complex64::new(0.0, TAU * theta);
        l - l.exp()
    }

    #[test]
    fn depth_zero_is_the_seed() {
        let f = minus2();
        for (k, t) in [(0, 0.3), (1, 5.0), (-2, 77.0)] {
            let s = InfiniteAddress::constant(k);
            let (z, _) = ray_point(&f, &s, t, 0).unwrap();
            assert_eq!(z, Complex64::new(t, TAU * k as f64));
        }
    }

    #[test]
    fn far_ray_is_asymptotically_straight() {
        let f = minus2();
        let s = InfiniteAddress::constant(0);
        for t in [100.0, 150.0, 400.0] {
            let (z, _) = ray_point(&f, &s, t, 40).unwrap();
            assert!((z - t).norm() < 0.1);
        }
    }

    #[test]
    fn real_ray_is_real_and_decreases_to_fixed_point() {
        let f = minus2();
        let s = InfiniteAddress::constant(0);
        let grid: Vec<f64> = (1..=200).map(|i| 0.05 * i as f64).collect();
        let ray = trace_ray(&f, &s, 40, &grid).unwrap();
        assert!(ray.converged, "movement {}", ray.max_movement);
        for w in ray.samples.windows(2) {
            assert_eq!(w[0].z.im, 0.0);
            assert!(w[0].z.re < w[1].z.re);
            assert!(w[0].z.re > 1.146_193_220_620_582);
        }
    }

    #[test]
    fn trace_rejects_bad_potentials() {
        let f = minus2();
        let s = InfiniteAddress::constant(0);
        assert!(matches!(
            trace_ray(&f, &s, 10, &[1.0, -1.0]),
            Err(RayError::InvalidPotential(_))
        ));
    }

    #[test]
    fn functional_equation_on_a_period_two_ray() {
        let f = minus2();
        let s = InfiniteAddress::periodic(vec![1, -1]).unwrap();
        let grid: Vec<f64> = (1..=60).map(|i| 0.3 * i as f64).collect();
        let r = functional_equation_residual(&f, &s, 40, &grid).unwrap();
        assert!(r < 1e-9, "{r}");
    }

    #[test]
    fn pullback_examples() {
        let f = minus2();
        let s = InfiniteAddress::constant(0);
        let z10 = Complex64::new(10.0, 0.0);
        let one = pullback_along_address(&f, &s, z10, 1, 1).unwrap();
        assert!((one - 12f64.ln()).norm() < 1e-15);
        let three = pullback_along_address(&f, &s, z10, 3, 1).unwrap();
        assert!((three.re - 1.25297).abs() < 1e-5 && three.im == 0.0);
        let many = pullback_along_address(&f, &s, z10, 60, 1).unwrap();
        assert!((many.re - 1.146_193_220_620_582_5).abs() < 1e-12);
        let l52 = pullback_along_address(&f, &s, Complex64::new(50.0, 0.0), 1, 1).unwrap();
        assert!((l52.re - 52f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn pullback_recursion_over_one_block() {
        let f = minus2();
        let s = InfiniteAddress::periodic(vec![1, 0, -1]).unwrap();
        let zeta = Complex64::new(30.0, 2.0);
        let m = 3;
        let lhs = pullback_along_address(&f, &s, zeta, 4, m).unwrap();
        let inner = pullback_along_address(&f, &s.shift_by(m), zeta, 3, m).unwrap();
        let rhs = compose(&f, &s, m, inner).unwrap();
        assert!((lhs - rhs).norm() < 1e-14);
    }

    #[test]
    fn singular_value_hit_is_reported() {
        let f = minus2();
        let s = InfiniteAddress::constant(0);
        assert_eq!(
            pullback_along_address(&f, &s, Complex64::new(-2.0, 0.0), 1, 1),
            Err(RayError::SingularHit { step: 0 })
        );
    }

    #[test]
    fn landing_of_fixed_rays_for_minus_two() {
        let f = minus2();
        let r = landing_point(&f, &InfiniteAddress::constant(0), &LandingOptions::default()).unwrap();
        assert_eq!(r.status, LandingStatus::Landed);
        let z0 = r.point.unwrap();
        assert!((z0 - 1.146_193_220_620_582_5).norm() < 1e-12);
        assert!((r.psi_derivative.unwrap() - 1.0 / (z0 + 2.0)).norm() < 1e-12);
        assert!((r.psi_derivative.unwrap().re - 0.31784).abs() < 1e-5);

        let r = landing_point(&f, &InfiniteAddress::constant(1), &LandingOptions::default()).unwrap();
        assert_eq!(r.status, LandingStatus::Landed);
        let z1 = r.point.unwrap();
        assert!((z1 - Complex64::new(2.131_075_457_666_587_3, 7.341_435_092_197_778)).norm() < 1e-10);
        assert_eq!(f.strip_label(z1).0, 1);
        assert!(((z1.exp() - 2.0) - z1).norm() < 1e-12);
    }

    #[test]
    fn landing_of_period_two_ray() {
        let f = minus2();
        let s = InfiniteAddress::periodic(vec![0, 1]).unwrap();
        let r = landing_point(&f, &s, &LandingOptions::default()).unwrap();
        assert_eq!(r.status, LandingStatus::Landed);
        let z = r.point.unwrap();
        assert!((f.iterate(z, 2).unwrap() - z).norm() < 1e-10);
        assert!((f.evaluate(z).unwrap() - z).norm() > 1e-3);
        assert!(r.multiplier.unwrap().norm() > 1.0);
    }

    #[test]
    fn landing_requires_periodic_address() {
        let f = minus2();
        let s = InfiniteAddress::new(vec![3], vec![0]).unwrap();
        assert!(matches!(
            landing_point(&f, &s, &LandingOptions::default()),
            Err(RayError::NotPeriodic(_))
        ));
    }

    #[test]
    fn exp_ray_through_singular_value_fails_to_land() {
        let f = m(Complex64::new(0.0, 0.0));
        let r = landing_point(&f, &InfiniteAddress::constant(0), &LandingOptions::default()).unwrap();
        assert!(matches!(
            r.status,
            LandingStatus::SingularHit | LandingStatus::NotConverged
        ));
    }

    #[test]
    fn singular_orbit_fates() {
        let exp = m(Complex64::new(0.0, 0.0));
        match singular_escape_status(&exp, 10) {
            SingularEscape::EscapesAlongPeriodicRay { address, .. } => {
                assert_eq!(address, InfiniteAddress::constant(0));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            singular_escape_status(&minus2(), 1000),
            SingularEscape::BoundedSoFar { horizon: 1000 }
        );
        let siegel = m(siegel_c());
        assert_eq!(
            singular_escape_status(&siegel, 10_000),
            SingularEscape::BoundedSoFar { horizon: 10_000 }
        );
        // c = 3 escapes in the real direction
        let big = m(Complex64::new(3.0, 0.0));
        assert!(matches!(
            singular_escape_status(&big, 20),
            SingularEscape::EscapesAlongPeriodicRay { .. }
        ));
    }

    #[test]
    fn periodic_tail_detection() {
        assert_eq!(periodic_tail(&[0, 0, 0]), Some(vec![0]));
        assert_eq!(periodic_tail(&[0, 0]), None);
        assert_eq!(periodic_tail(&[1, 2, 1, 2]), Some(vec![1, 2]));
        assert_eq!(periodic_tail(&[1, 2, 3]), None);
    }
}
