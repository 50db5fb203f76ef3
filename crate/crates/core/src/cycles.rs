//! Periodic orbits by Newton's method on `f^p(z) - z` from a seed grid.
//!
//! Searches are relative to a box: only cycles with every point inside the
//! box are reported.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::geometry::SearchBox;
use crate::map::MapModel;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_TOL_BAND: f64 = 1e-6;
pub const DEFAULT_GRID: usize = 60;
/// Largest `k` tested for `λ^k ≈ 1`.
pub const PARABOLIC_ORDER_CAP: u32 = 64;
/// Seeds this close to a root of lower period are skipped.
pub const SEED_EXCLUSION: f64 = 1e-3;

const NEWTON_MAX_ITER: usize = 100;
const NEWTON_MAX_STEP: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CycleClass {
    Superattracting,
    Attracting,
    Repelling,
    /// `|λ| = 1` within the band; `rotation = arg(λ) / 2π ∈ [0, 1)`.
    Indifferent { rotation: f64 },
    /// Indifferent with `|λ^order - 1|` within the band.
    ParabolicSuspected { rotation: f64, order: u32 },
}

impl CycleClass {
    pub fn name(&self) -> &'static str {
        match self {
            CycleClass::Superattracting => "superattracting",
            CycleClass::Attracting => "attracting",
            CycleClass::Repelling => "repelling",
            CycleClass::Indifferent { .. } => "indifferent",
            CycleClass::ParabolicSuspected { .. } => "parabolic-suspected",
        }
    }

    pub fn is_attracting(&self) -> bool {
        matches!(self, CycleClass::Superattracting | CycleClass::Attracting)
    }

    pub fn is_repelling(&self) -> bool {
        matches!(self, CycleClass::Repelling)
    }

    /// Indifferent or parabolic-suspected.
    pub fn is_neutral(&self) -> bool {
        matches!(
            self,
            CycleClass::Indifferent { .. } | CycleClass::ParabolicSuspected { .. }
        )
    }

    pub fn rotation(&self) -> Option<f64> {
        match *self {
            CycleClass::Indifferent { rotation } | CycleClass::ParabolicSuspected { rotation, .. } => {
                Some(rotation)
            }
            _ => None,
        }
    }
}

impl Serialize for CycleClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

pub fn classify(lambda: Complex64, tol_band: f64) -> CycleClass {
    let a = lambda.norm();
    if a == 0.0 {
        return CycleClass::Superattracting;
    }
    if a < 1.0 - tol_band {
        return CycleClass::Attracting;
    }
    if a > 1.0 + tol_band {
        return CycleClass::Repelling;
    }
    let rotation = (lambda.arg() / std::f64::consts::TAU).rem_euclid(1.0);
    let mut power = Complex64::new(1.0, 0.0);
    for k in 1..=PARABOLIC_ORDER_CAP {
        power *= lambda;
        if (power - 1.0).norm() <= tol_band {
            return CycleClass::ParabolicSuspected { rotation, order: k };
        }
    }
    CycleClass::Indifferent { rotation }
}

/// `min_{1≤k≤64} |λ^k - 1|`.
pub fn min_return_distance(lambda: Complex64) -> f64 {
    let mut power = Complex64::new(1.0, 0.0);
    (1..=PARABOLIC_ORDER_CAP)
        .map(|_| {
            power *= lambda;
            (power - 1.0).norm()
        })
        .fold(f64::INFINITY, f64::min)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cycle {
    /// `points[i+1] = f(points[i])`; `points[0]` is the lexicographically
    /// least point.
    pub points: Vec<Complex64>,
    pub period: usize,
    pub multiplier: Complex64,
    pub class: CycleClass,
}

impl Cycle {
    /// Build the cycle through `z` of exact period `period`, polishing each
    /// point separately.
    pub fn from_point(map: &MapModel, z: Complex64, period: usize, tol_band: f64) -> Option<Cycle> {
        let mut pts = Vec::with_capacity(period);
        let mut w = z;
        for _ in 0..period {
            pts.push(w);
            w = map.evaluate(w).ok()?;
        }
        for p in pts.iter_mut() {
            *p = newton_periodic(map, *p, period)?.0;
        }
        let start = pts
            .iter()
            .enumerate()
            .min_by(|a, b| lex(*a.1, *b.1))
            .map(|(i, _)| i)?;
        pts.rotate_left(start);
        let multiplier = pts
            .iter()
            .map(|p| p.exp())
            .fold(Complex64::new(1.0, 0.0), |a, b| a * b);
        Some(Cycle {
            points: pts,
            period,
            multiplier,
            class: classify(multiplier, tol_band),
        })
    }

    pub fn z0(&self) -> Complex64 {
        self.points[0]
    }

    /// Index of a cycle point within `tol` of `z`.
    pub fn index_of(&self, z: Complex64, tol: f64) -> Option<usize> {
        self.points.iter().position(|p| (p - z).norm() <= tol)
    }

    /// Largest `|f^m(z_0) - z_0|` over the cycle points.
    pub fn closure_residual(&self, map: &MapModel) -> f64 {
        self.points
            .iter()
            .map(|p| map.iterate(*p, self.period).map(|w| (w - p).norm()).unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }

    pub fn modulus_max(&self) -> f64 {
        self.points.iter().map(|p| p.norm()).fold(0.0, f64::max)
    }
}

#[derive(Serialize)]
struct CycleRecord<'a> {
    period: usize,
    #[serde(serialize_with = "crate::report::ser_vec_c64")]
    points: &'a [Complex64],
    #[serde(serialize_with = "crate::report::ser_c64")]
    multiplier: Complex64,
    class: CycleClass,
    rotation_number: Option<f64>,
}

impl Serialize for Cycle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycleRecord {
            period: self.period,
            points: &self.points,
            multiplier: self.multiplier,
            class: self.class,
            rotation_number: self.class.rotation(),
        }
        .serialize(s)
    }
}

fn lex(a: Complex64, b: Complex64) -> std::cmp::Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Newton on `f^p(z) - z`. Returns the root and `(f^p)'` there once the step
/// falls below round-off.
pub fn newton_periodic(map: &MapModel, z: Complex64, p: usize) -> Option<(Complex64, Complex64)> {
    let mut z = z;
    for _ in 0..NEWTON_MAX_ITER {
        let (w, d) = map.iterate_with_derivative(z, p).ok()?;
        let denom = d - 1.0;
        if denom.norm() == 0.0 || !(w.re.is_finite() && w.im.is_finite()) {
            return None;
        }
        let mut step = (w - z) / denom;
        if step.norm() > NEWTON_MAX_STEP {
            step *= NEWTON_MAX_STEP / step.norm();
        }
        z -= step;
        if step.norm() <= 1e-14 * z.norm().max(1.0) {
            let (_, d) = map.iterate_with_derivative(z, p).ok()?;
            return Some((z, d));
        }
    }
    None
}

/// Smallest `d | p` with `f^d(z) ≈ z`.
fn exact_period(map: &MapModel, z: Complex64, p: usize) -> Option<usize> {
    (1..=p).filter(|d| p.is_multiple_of(*d)).find(|&d| {
        map.iterate(z, d)
            .map(|w| (w - z).norm() <= 1e-8 * z.norm().max(1.0))
            .unwrap_or(false)
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CycleSearch {
    pub cycles: Vec<Cycle>,
    pub search_box: SearchBox,
    pub max_period: usize,
    pub grid: usize,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleSearchOptions {
    pub grid: usize,
    pub tol: f64,
    pub tol_band: f64,
    /// Also search at half the grid and warn if that finds more cycles.
    pub coverage_check: bool,
}

impl Default for CycleSearchOptions {
    fn default() -> Self {
        CycleSearchOptions {
            grid: DEFAULT_GRID,
            tol: DEFAULT_TOL,
            tol_band: DEFAULT_TOL_BAND,
            coverage_check: true,
        }
    }
}

/// Cycles of period `1..=max_period` with all points in `search_box`,
/// sorted by `(period, Re z_0, Im z_0)`.
pub fn find_cycles(
    map: &MapModel,
    max_period: usize,
    search_box: SearchBox,
    opts: &CycleSearchOptions,
) -> CycleSearch {
    let cycles = search(map, max_period, search_box, opts.grid, opts.tol, opts.tol_band);
    let mut warnings = Vec::new();
    if opts.coverage_check && opts.grid >= 4 {
        let coarse = search(map, max_period, search_box, opts.grid / 2, opts.tol, opts.tol_band);
        if coarse.len() > cycles.len() {
            warnings.push(format!(
                "coverage: grid {} found {} cycles but grid {} found only {}",
                opts.grid / 2,
                coarse.len(),
                opts.grid,
                cycles.len()
            ));
        }
    }
    CycleSearch {
        cycles,
        search_box,
        max_period,
        grid: opts.grid,
        warnings,
    }
}

fn search(
    map: &MapModel,
    max_period: usize,
    b: SearchBox,
    grid: usize,
    tol: f64,
    tol_band: f64,
) -> Vec<Cycle> {
    let g = grid.max(1);
    let seeds: Vec<Complex64> = (0..=g)
        .flat_map(|i| {
            (0..=g).map(move |j| {
                Complex64::new(
                    b.re_min + b.width() * i as f64 / g as f64,
                    b.im_min + b.height() * j as f64 / g as f64,
                )
            })
        })
        .collect();
    let mut found: Vec<Cycle> = Vec::new();
    for p in 1..=max_period.max(1) {
        let known: Vec<Complex64> = found
            .iter()
            .filter(|c| p % c.period == 0)
            .flat_map(|c| c.points.iter().copied())
            .collect();
        let roots: Vec<Option<Complex64>> = seeds
            .par_iter()
            .map(|&seed| {
                if known.iter().any(|k| (k - seed).norm() < SEED_EXCLUSION) {
                    return None;
                }
                let (z, d) = newton_periodic(map, seed, p)?;
                let residual = (map.iterate(z, p).ok()? - z).norm();
                let scale = z.norm().max(1.0) * d.norm().max(1.0);
                (residual <= tol * scale && b.contains(z)).then_some(z)
            })
            .collect();
        let mut candidates: Vec<Cycle> = Vec::new();
        for z in roots.into_iter().flatten() {
            if exact_period(map, z, p) != Some(p) {
                continue;
            }
            if candidates.iter().any(|c| c.index_of(z, 1e-8 * z.norm().max(1.0)).is_some()) {
                continue;
            }
            let Some(cycle) = Cycle::from_point(map, z, p, tol_band) else {
                continue;
            };
            if !cycle.points.iter().all(|q| b.contains(*q)) {
                continue;
            }
            if candidates.iter().any(|c| same_cycle(c, &cycle)) {
                continue;
            }
            candidates.push(cycle);
        }
        found.extend(candidates);
    }
    found.sort_by(|a, b| a.period.cmp(&b.period).then(lex(a.z0(), b.z0())));
    found
}

fn same_cycle(a: &Cycle, b: &Cycle) -> bool {
    a.period == b.period && (a.z0() - b.z0()).norm() <= 1e-8 * a.z0().norm().max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minus2() -> MapModel {
        MapModel::exponential(Complex64::new(-2.0, 0.0)).unwrap()
    }

    fn siegel() -> (MapModel, Complex64) {
        let theta = (5f64.sqrt() - 1.0) / 2.0;
        let z0 = Complex64::new(0.0, std::f64::consts::TAU * theta);
        (MapModel::exponential(z0 - z0.exp()).unwrap(), z0)
    }

    fn newton_fixed_oracle(c: f64, seed: f64) -> f64 {
        // real Newton on e^x + c - x
        let mut x = seed;
        for _ in 0..100 {
            x -= (x.exp() + c - x) / (x.exp() - 1.0);
        }
        x
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(Complex64::new(0.15859, 0.0), 1e-6), CycleClass::Attracting);
        assert_eq!(classify(Complex64::new(0.0, 0.0), 1e-6), CycleClass::Superattracting);
        assert_eq!(classify(Complex64::new(3.14619, 0.0), 1e-6), CycleClass::Repelling);
        assert!(matches!(
            classify(Complex64::new(1.0, 0.0), 1e-6),
            CycleClass::ParabolicSuspected { order: 1, .. }
        ));
        assert!(matches!(
            classify(Complex64::new(-1.0, 0.0), 1e-6),
            CycleClass::ParabolicSuspected { order: 2, .. }
        ));
        let theta = (5f64.sqrt() - 1.0) / 2.0;
        let golden = Complex64::from_polar(1.0, std::f64::consts::TAU * theta);
        match classify(golden, 1e-6) {
            CycleClass::Indifferent { rotation } => assert!((rotation - theta).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn golden_rotation_stays_away_from_roots_of_unity() {
        let theta = (5f64.sqrt() - 1.0) / 2.0;
        let golden = Complex64::from_polar(1.0, std::f64::consts::TAU * theta);
        let d = min_return_distance(golden);
        // attained at k = 55, a Fibonacci number: 2·|sin(π·55·θ)|
        let k55 = 2.0 * (std::f64::consts::PI * 55.0 * theta).sin().abs();
        assert!((d - k55).abs() < 1e-12);
        assert!(d > 0.05 && d < 0.052);
    }

    #[test]
    fn real_fixed_points_of_minus_two() {
        let f = minus2();
        let b = SearchBox::new(-3.0, 3.0, -1.0, 1.0).unwrap();
        let r = find_cycles(&f, 1, b, &CycleSearchOptions::default());
        assert_eq!(r.cycles.len(), 2, "{:?}", r.cycles);
        let att = &r.cycles[0];
        let rep = &r.cycles[1];
        assert!((att.z0().re - newton_fixed_oracle(-2.0, -1.8)).abs() < 1e-12);
        assert!(att.class.is_attracting());
        assert!((att.multiplier.re - 0.15859).abs() < 1e-5);
        assert!((rep.z0().re - newton_fixed_oracle(-2.0, 1.1)).abs() < 1e-12);
        assert!(rep.class.is_repelling());
        // λ = z₀ + 2 for a fixed point
        assert!((rep.multiplier - (rep.z0() + 2.0)).norm() < 1e-12);
    }

    #[test]
    fn fixed_point_in_the_first_strip() {
        let f = minus2();
        let b = SearchBox::new(-3.0, 3.0, 3.0, 9.0).unwrap();
        let opts = CycleSearchOptions {
            grid: 50,
            ..Default::default()
        };
        let r = find_cycles(&f, 1, b, &opts);
        assert_eq!(r.cycles.len(), 1);
        let z = r.cycles[0].z0();
        assert!((z - Complex64::new(2.131_075_457_666_587_3, 7.341_435_092_197_778)).norm() < 1e-10);
        assert!((z.exp() - (z + 2.0)).norm() < 1e-12);
        assert!(r.cycles[0].class.is_repelling());
    }

    #[test]
    fn siegel_fixed_point() {
        let (f, z0) = siegel();
        let b = SearchBox::new(-1.0, 2.0, 2.0, 6.0).unwrap();
        let r = find_cycles(&f, 1, b, &CycleSearchOptions::default());
        let neutral: Vec<&Cycle> = r.cycles.iter().filter(|c| c.class.is_neutral()).collect();
        assert_eq!(neutral.len(), 1);
        assert!((neutral[0].z0() - z0).norm() < 1e-10);
        assert!((neutral[0].multiplier.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn period_two_cycles_of_minus_two() {
        let f = minus2();
        let b = SearchBox::new(-3.0, 3.0, -7.0, 7.0).unwrap();
        let r = find_cycles(&f, 2, b, &CycleSearchOptions::default());
        assert!(r.warnings.is_empty(), "{:?}", r.warnings);
        let two: Vec<&Cycle> = r.cycles.iter().filter(|c| c.period == 2).collect();
        assert!(!two.is_empty());
        for c in &two {
            // λ = ∏ (z_i - c) for the exponential family
            let alt = c.points.iter().map(|z| z + 2.0).fold(Complex64::new(1.0, 0.0), |a, b| a * b);
            assert!((alt - c.multiplier).norm() <= 1e-8 * alt.norm());
            assert!(c.closure_residual(&f) < 1e-10);
            assert!((f.evaluate(c.points[0]).unwrap() - c.points[1]).norm() < 1e-10);
        }
        let want = Complex64::new(1.422_069_052_304_481_9, -6.549_058_809_827_807);
        assert!(two.iter().any(|c| c.index_of(want, 1e-9).is_some()));
        for w in r.cycles.windows(2) {
            assert!(w[0].period < w[1].period || lex(w[0].z0(), w[1].z0()).is_lt());
        }
    }
}
