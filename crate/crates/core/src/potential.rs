//! The radial square well and the complex kinematics attached to it.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::AngularMomentum;

/// Square well `v(r) = -v0` inside the cutoff `a`, zero outside, in the
/// partial wave `ell`.
///
/// The point `r = a` belongs to the interior piece. Wavefunctions and their
/// derivatives are continuous there, so only the potential itself notices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    v0: f64,
    a: f64,
    ell: AngularMomentum,
}

impl PotentialSpec {
    pub fn new(v0: f64, a: f64, ell: AngularMomentum) -> Result<Self> {
        if !(v0 >= 0.0) || !v0.is_finite() {
            return Err(Error::Input(format!(
                "well depth v0 must be finite and >= 0, got {v0}"
            )));
        }
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::Input(format!(
                "cutoff a must be finite and > 0, got {a}"
            )));
        }
        Ok(Self { v0, a, ell })
    }

    /// s-wave well.
    pub fn s_wave(v0: f64, a: f64) -> Result<Self> {
        Self::new(v0, a, AngularMomentum::S_WAVE)
    }

    pub fn v0(&self) -> f64 {
        self.v0
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn ell(&self) -> AngularMomentum {
        self.ell
    }

    /// Dimensionless strength `eta = a sqrt(v0)`.
    pub fn eta(&self) -> f64 {
        self.a * self.v0.sqrt()
    }

    pub fn is_interior(&self, r: f64) -> bool {
        r <= self.a
    }

    /// Bare well `v(r)`.
    pub fn potential(&self, r: f64) -> f64 {
        if self.is_interior(r) {
            -self.v0
        } else {
            0.0
        }
    }

    /// `V_ell(r) = v(r) + ell (ell + 1) / r^2`.
    pub fn effective_potential(&self, r: f64) -> f64 {
        self.potential(r) + self.ell.centrifugal() / (r * r)
    }

    pub fn point(&self, k: Complex64) -> ComplexPoint {
        ComplexPoint::new(self, k)
    }
}

/// Kinetic parameter `k` with energy `eps = k^2` and interaction parameter
/// `q = sqrt(v0 + k^2)` (principal branch).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint {
    pub k: Complex64,
    pub eps: Complex64,
    pub q: Complex64,
}

impl ComplexPoint {
    pub fn new(spec: &PotentialSpec, k: Complex64) -> Self {
        let eps = k * k;
        let q = (spec.v0 + eps).sqrt();
        Self { k, eps, q }
    }
}
