//! Radial grids, sampled complex functions and the closed-form solution trait.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::potential::PotentialSpec;

/// Strictly increasing radii, all positive.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    points: Vec<f64>,
}

impl RadialGrid {
    pub fn from_points(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidGrid("grid is empty".into()));
        }
        if !points.iter().all(|r| r.is_finite() && *r > 0.0) {
            return Err(Error::InvalidGrid(
                "grid radii must be finite and > 0".into(),
            ));
        }
        if points.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidGrid(
                "grid must be strictly increasing".into(),
            ));
        }
        Ok(Self { points })
    }

    /// `count` evenly spaced radii from `r_min` to `r_max` inclusive.
    pub fn linear(r_min: f64, r_max: f64, count: usize) -> Result<Self> {
        match count {
            0 => Err(Error::InvalidGrid("grid needs at least one point".into())),
            1 if r_min == r_max || r_max.is_nan() => Self::from_points(vec![r_min]),
            1 => Err(Error::InvalidGrid(
                "single-point grid needs r_min = r_max".into(),
            )),
            _ => {
                if !(r_max > r_min) {
                    return Err(Error::InvalidGrid(format!(
                        "empty range [{r_min}, {r_max}]"
                    )));
                }
                let step = (r_max - r_min) / (count - 1) as f64;
                let mut points: Vec<f64> = (0..count).map(|i| r_min + step * i as f64).collect();
                points[count - 1] = r_max;
                Self::from_points(points)
            }
        }
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn r_min(&self) -> f64 {
        self.points[0]
    }

    pub fn r_max(&self) -> f64 {
        self.points[self.points.len() - 1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Piece {
    Interior,
    Exterior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionLabel {
    Wavefunction,
    Superpotential,
    Potential,
    Transformed,
}

/// Closed-form description of one piece of a sampled function.
#[derive(Debug, Clone, PartialEq)]
pub struct PieceMeta {
    pub piece: Piece,
    pub r_from: f64,
    pub r_to: f64,
    pub form: String,
}

/// Complex function sampled on a radial grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialFunction {
    grid: RadialGrid,
    values: Vec<Complex64>,
    derivatives: Option<Vec<Complex64>>,
    label: FunctionLabel,
    meta: Vec<PieceMeta>,
}

impl RadialFunction {
    pub fn new(grid: RadialGrid, values: Vec<Complex64>, label: FunctionLabel) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Input(format!(
                "{} values for {} grid points",
                values.len(),
                grid.len()
            )));
        }
        if let Some(i) = values
            .iter()
            .position(|v| !v.re.is_finite() || !v.im.is_finite())
        {
            return Err(Error::Range(format!(
                "non-finite value at r = {}",
                grid.points()[i]
            )));
        }
        Ok(Self {
            grid,
            values,
            derivatives: None,
            label,
            meta: Vec::new(),
        })
    }

    pub fn with_derivatives(mut self, derivatives: Vec<Complex64>) -> Result<Self> {
        if derivatives.len() != self.grid.len() {
            return Err(Error::Input("derivative length does not match grid".into()));
        }
        self.derivatives = Some(derivatives);
        Ok(self)
    }

    pub fn with_meta(mut self, meta: Vec<PieceMeta>) -> Self {
        self.meta = meta;
        self
    }

    pub fn grid(&self) -> &RadialGrid {
        &self.grid
    }

    pub fn radii(&self) -> &[f64] {
        self.grid.points()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn derivatives(&self) -> Option<&[Complex64]> {
        self.derivatives.as_deref()
    }

    pub fn label(&self) -> FunctionLabel {
        self.label
    }

    pub fn meta(&self) -> &[PieceMeta] {
        &self.meta
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, Complex64)> + '_ {
        self.grid
            .points()
            .iter()
            .copied()
            .zip(self.values.iter().copied())
    }

    pub fn re(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }

    pub fn im(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.im).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Stored derivatives, or three-point differences on the (possibly
    /// non-uniform) grid when none were attached.
    pub fn derivative_or_difference(&self) -> Result<Vec<Complex64>> {
        if let Some(d) = &self.derivatives {
            return Ok(d.clone());
        }
        let r = self.grid.points();
        let u = &self.values;
        let n = r.len();
        if n < 3 {
            return Err(Error::InvalidGrid(
                "finite differences need at least three points".into(),
            ));
        }
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let (i0, i1, i2) = match i {
                0 => (0, 1, 2),
                _ if i == n - 1 => (n - 3, n - 2, n - 1),
                _ => (i - 1, i, i + 1),
            };
            let (x0, x1, x2) = (r[i0], r[i1], r[i2]);
            let x = r[i];
            // derivative of the Lagrange interpolant through three points
            let l0 = (2.0 * x - x1 - x2) / ((x0 - x1) * (x0 - x2));
            let l1 = (2.0 * x - x0 - x2) / ((x1 - x0) * (x1 - x2));
            let l2 = (2.0 * x - x0 - x1) / ((x2 - x0) * (x2 - x1));
            out.push(l0 * u[i0] + l1 * u[i1] + l2 * u[i2]);
        }
        Ok(out)
    }
}

/// A solution of a radial equation `-u'' + W(r) u = E u` known in closed form.
pub trait RadialSolution: Sync {
    fn spec(&self) -> &PotentialSpec;

    /// Energy `E` of the equation this function solves.
    fn energy(&self) -> Complex64;

    /// `(u(r), u'(r))`.
    fn eval(&self, r: f64) -> Result<(Complex64, Complex64)>;

    /// Potential `W(r)` of the equation this function solves.
    fn potential_at(&self, r: f64) -> Complex64 {
        Complex64::new(self.spec().effective_potential(r), 0.0)
    }

    fn describe(&self) -> Vec<PieceMeta> {
        Vec::new()
    }

    /// Sample values and derivatives on `grid`, in grid order.
    fn sample(&self, grid: &RadialGrid, label: FunctionLabel) -> Result<RadialFunction> {
        let pairs: Vec<(Complex64, Complex64)> = grid
            .points()
            .par_iter()
            .map(|&r| self.eval(r))
            .collect::<Result<_>>()?;
        let (values, derivs): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        Ok(RadialFunction::new(grid.clone(), values, label)?
            .with_derivatives(derivs)?
            .with_meta(self.describe()))
    }
}
