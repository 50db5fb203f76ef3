//! The exponential family `f(z) = e^z + c`: forward evaluation, singular
//! values, fundamental-domain labels and the labelled inverse branches.
//!
//! Geometry conventions:
//!
//! * `D` is the disk of radius `R` (the tract radius) centred at 0.
//! * The cut `δ` is the half-line `c + (-∞, 0]`, i.e. the points where
//!   `w - c` is negative real. The principal logarithm of `w - c` is
//!   discontinuous exactly there.
//! * The inverse branch `L_k(w) = Log(w - c) + 2πik` maps the slit plane
//!   onto the open horizontal strip `(2k-1)π < Im z < (2k+1)π`, so the
//!   fundamental domain `F_k` is labelled by `round(Im z / 2π)`.

use std::f64::consts::{E, PI, TAU};
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

/// `Re z` above this is treated as escaped: `e^z` would overflow.
pub const OVERFLOW_RE: f64 = 700.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MapError {
    #[error("orbit escaped to infinity (Re z = {re} beyond the overflow threshold)")]
    Escaped { re: f64 },
    #[error("inverse branch undefined: w coincides with the singular value {c}")]
    SingularValueHit { c: Complex64 },
    #[error("invalid map model: {0}")]
    InvalidModel(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Exponential,
}

/// Index `k` of the fundamental domain `F_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct DomainLabel(pub i64);

impl fmt::Display for DomainLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for DomainLabel {
    fn from(k: i64) -> Self {
        DomainLabel(k)
    }
}

/// Result of an inverse-branch evaluation. `on_cut` is set when `w - c` was
/// exactly negative real; the value is then taken with `Im Log = +π`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchValue {
    pub z: Complex64,
    pub on_cut: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapModel {
    family: Family,
    c: Complex64,
    tract_radius: f64,
}

impl MapModel {
    /// `e^z + c` with the default tract radius
    /// `R = max(|c| + 2, |1 + c| + 1, e)`.
    pub fn exponential(c: Complex64) -> Result<Self, MapError> {
        Self::with_tract_radius(c, default_tract_radius(c))
    }

    pub fn with_tract_radius(c: Complex64, tract_radius: f64) -> Result<Self, MapError> {
        if !c.re.is_finite() || !c.im.is_finite() {
            return Err(MapError::InvalidModel(format!("non-finite parameter {c}")));
        }
        if !(tract_radius.is_finite() && tract_radius > 0.0) {
            return Err(MapError::InvalidModel(format!(
                "tract radius must be positive, got {tract_radius}"
            )));
        }
        if c.norm() >= tract_radius {
            return Err(MapError::InvalidModel(format!(
                "|c| = {} must be below the tract radius {tract_radius}",
                c.norm()
            )));
        }
        if (1.0 + c).norm() >= tract_radius {
            return Err(MapError::InvalidModel(format!(
                "|f(0)| = {} must be below the tract radius {tract_radius}",
                (1.0 + c).norm()
            )));
        }
        if (tract_radius - c.norm()).ln() <= -tract_radius {
            return Err(MapError::InvalidModel(format!(
                "tract radius {tract_radius} too small for the cut to avoid the tract"
            )));
        }
        Ok(MapModel {
            family: Family::Exponential,
            c,
            tract_radius,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    /// Radius `R` of the disk `D ⊇ S(f) ∪ {f(0)}`.
    pub fn tract_radius(&self) -> f64 {
        self.tract_radius
    }

    /// Points with `Re z` above this lie in the tract (`|f(z)| > R`).
    pub fn tract_threshold(&self) -> f64 {
        (self.tract_radius + self.c.norm()).ln()
    }

    pub fn evaluate(&self, z: Complex64) -> Result<Complex64, MapError> {
        Ok(self.exp_checked(z)? + self.c)
    }

    pub fn derivative(&self, z: Complex64) -> Result<Complex64, MapError> {
        self.exp_checked(z)
    }

    fn exp_checked(&self, z: Complex64) -> Result<Complex64, MapError> {
        if z.re > OVERFLOW_RE || z.re.is_nan() || z.im.is_nan() {
            return Err(MapError::Escaped { re: z.re });
        }
        Ok(z.exp())
    }

    /// `f^n(z)`, together with `(f^n)'(z)`.
    pub fn iterate_with_derivative(
        &self,
        z: Complex64,
        n: usize,
    ) -> Result<(Complex64, Complex64), MapError> {
        let mut w = z;
        let mut d = Complex64::new(1.0, 0.0);
        for _ in 0..n {
            let e = self.exp_checked(w)?;
            d *= e;
            w = e + self.c;
        }
        Ok((w, d))
    }

    pub fn iterate(&self, z: Complex64, n: usize) -> Result<Complex64, MapError> {
        let mut w = z;
        for _ in 0..n {
            w = self.evaluate(w)?;
        }
        Ok(w)
    }

    pub fn singular_values(&self) -> Vec<Complex64> {
        match self.family {
            Family::Exponential => vec![self.c],
        }
    }

    /// Number of singular orbits `q`.
    pub fn singular_orbit_count(&self) -> usize {
        self.singular_values().len()
    }

    /// `L_k(w) = Log(w - c) + 2πik`.
    pub fn inverse_branch(&self, w: Complex64, label: DomainLabel) -> Result<Complex64, MapError> {
        self.inverse_branch_flagged(w, label).map(|b| b.z)
    }

    pub fn inverse_branch_flagged(
        &self,
        w: Complex64,
        label: DomainLabel,
    ) -> Result<BranchValue, MapError> {
        let u = w - self.c;
        if u.re == 0.0 && u.im == 0.0 {
            return Err(MapError::SingularValueHit { c: self.c });
        }
        let on_cut = u.im == 0.0 && u.re < 0.0;
        let arg = if on_cut { PI } else { u.im.atan2(u.re) };
        let z = Complex64::new(u.norm().ln(), arg + TAU * label.0 as f64);
        Ok(BranchValue { z, on_cut })
    }

    /// Whether `w` lies on the cut `δ` outside the disk of radius `radius`,
    /// within the relative tolerance `snap`.
    pub fn on_cut_outside(&self, w: Complex64, radius: f64, snap: f64) -> bool {
        let u = w - self.c;
        u.re < 0.0 && u.im.abs() <= snap * u.norm().max(1.0) && w.norm() > radius
    }

    /// Label of the strip `(2k-1)π < Im z < (2k+1)π` containing `z`; this is
    /// the label of the inverse branch that produced `z`.
    pub fn strip_label(&self, z: Complex64) -> DomainLabel {
        DomainLabel((z.im / TAU).round() as i64)
    }

    /// Fundamental domain of `z`, when `z` lies in the half-plane
    /// `Re z > ln(R + |c|)` where `|f(z)| > R` is guaranteed.
    pub fn fundamental_domain_of(&self, z: Complex64) -> Option<DomainLabel> {
        (z.re > self.tract_threshold()).then(|| self.strip_label(z))
    }
}

pub fn default_tract_radius(c: Complex64) -> f64 {
    (c.norm() + 2.0).max((1.0 + c).norm() + 1.0).max(E)
}
