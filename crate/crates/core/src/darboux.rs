//! Complex Darboux deformations seeded by Gamow-Siegert functions.
//!
//! With a transformation function `phi` at energy `eps` and `beta = -phi'/phi`,
//! the deformed potential is
//!
//! ```text
//! V~ = V + 2 beta' = 2 beta^2 + 2 eps - V        (beta' = beta^2 + eps - V)
//! ```
//!
//! and a solution `u` of the original equation at `E_u` maps to
//! `y = u' + beta u = W(phi, u) / phi`, a solution of the deformed equation at
//! the same `E_u`. Everything is evaluated from closed forms; no numerical
//! differentiation is involved.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::potential::PotentialSpec;
use crate::radial::{FunctionLabel, PieceMeta, RadialFunction, RadialGrid, RadialSolution};
use crate::resonance::{GamowFunction, GamowMode};
use crate::scattering::ScatteringSolution;
use crate::specfun::{self, wronskian};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `u` counts as a node when `|u| <= NODE_TOL * r * |u'|`.
pub const NODE_TOL: f64 = 1e-12;

/// `max|y|` below this times the coefficient scale is a null transform.
pub const NULL_TOL: f64 = 1e-10;

/// A tail component below this fraction of the other is treated as absent.
pub const PURE_TOL: f64 = 1e-8;

/// Both tail waves below this times the local term size at the fit radius,
/// with `y` not null, leaves the tail undetermined.
pub const AMBIGUOUS_TOL: f64 = 1e-12;

fn is_node(r: f64, u: Complex64, du: Complex64) -> bool {
    u.norm() <= NODE_TOL * r * du.norm() || u == Complex64::new(0.0, 0.0)
}

fn node_error(radii: Vec<f64>) -> Result<()> {
    if radii.is_empty() {
        Ok(())
    } else {
        Err(Error::Node { radii })
    }
}

/// `beta = -u'/u` from closed-form values and derivatives on `grid`.
pub fn superpotential<S: RadialSolution + ?Sized>(
    u: &S,
    grid: &RadialGrid,
) -> Result<RadialFunction> {
    let sampled = u.sample(grid, FunctionLabel::Wavefunction)?;
    superpotential_sampled(&sampled)
}

/// `beta = -u'/u` from samples, using stored derivatives when present and
/// three-point differences otherwise.
pub fn superpotential_sampled(u: &RadialFunction) -> Result<RadialFunction> {
    let derivs = u.derivative_or_difference()?;
    let nodes: Vec<f64> = u
        .iter()
        .zip(&derivs)
        .filter(|((r, v), d)| is_node(*r, *v, **d))
        .map(|((r, _), _)| r)
        .collect();
    node_error(nodes)?;
    let beta = u
        .values()
        .iter()
        .zip(&derivs)
        .map(|(v, d)| -d / v)
        .collect();
    Ok(
        RadialFunction::new(u.grid().clone(), beta, FunctionLabel::Superpotential)?
            .with_meta(u.meta().to_vec()),
    )
}

/// Analytic node check for a Gamow function on `(0, r_max]`.
///
/// The interior `sin(qr)` vanishes only for real `q`; the pure exterior is an
/// exponential. The matched exterior is left to the grid check.
pub fn check_nodeless(g: &GamowFunction, r_max: f64) -> Result<()> {
    let q = g.point.q;
    let a = g.spec.a();
    let mut radii = Vec::new();
    if q.im == 0.0 && q.re != 0.0 {
        let step = std::f64::consts::PI / q.re.abs();
        let limit = r_max.min(a);
        let mut n = 1.0;
        while n * step <= limit {
            radii.push(n * step);
            n += 1.0;
        }
    }
    if g.mode == GamowMode::PureOutgoing
        && r_max > a
        && g.exterior_amplitude == Complex64::new(0.0, 0.0)
    {
        radii.push(a);
    }
    node_error(radii)
}

/// Deformed potential sampled on a grid, with a closed-form evaluator.
#[derive(Debug, Clone)]
pub struct DarbouxPotential {
    pub base: PotentialSpec,
    /// Factorization energy `k_alpha^2`.
    pub eps: Complex64,
    pub mode: GamowMode,
    pub gamow: GamowFunction,
    pub beta: RadialFunction,
    pub values: RadialFunction,
}

impl DarbouxPotential {
    /// `V~(r)` at any `r > 0`.
    pub fn at(&self, r: f64) -> Result<Complex64> {
        let (u, du) = self.gamow.eval(r)?;
        if is_node(r, u, du) {
            return Err(Error::Node { radii: vec![r] });
        }
        let beta = -du / u;
        Ok(deformed(beta, self.eps, self.gamow.potential_at(r)))
    }

    pub fn grid(&self) -> &RadialGrid {
        self.values.grid()
    }

    pub fn re_part(&self) -> Vec<f64> {
        self.values.re()
    }

    pub fn im_part(&self) -> Vec<f64> {
        self.values.im()
    }
}

fn deformed(beta: Complex64, eps: Complex64, v: Complex64) -> Complex64 {
    2.0 * beta * beta + 2.0 * eps - v
}

/// `V~ = 2 beta^2 + 2 eps - V` for the transformation function `g`.
pub fn darboux_potential(
    spec: &PotentialSpec,
    g: &GamowFunction,
    grid: &RadialGrid,
) -> Result<DarbouxPotential> {
    if spec != &g.spec {
        return Err(Error::Contract(
            "Gamow function belongs to a different potential".into(),
        ));
    }
    check_nodeless(g, grid.r_max())?;
    let beta = superpotential(g, grid)?;
    let eps = g.energy();
    let values = grid
        .points()
        .iter()
        .zip(beta.values())
        .map(|(&r, &b)| deformed(b, eps, g.potential_at(r)))
        .collect();
    let values = RadialFunction::new(grid.clone(), values, FunctionLabel::Potential)?
        .with_meta(g.describe());
    Ok(DarbouxPotential {
        base: *spec,
        eps,
        mode: g.mode,
        gamow: *g,
        beta,
        values,
    })
}

/// Darboux image `y = u' + beta u` of a solution `u`, with `beta` taken from
/// the transformation function `phi`.
pub struct Transformed<'a> {
    phi: &'a dyn RadialSolution,
    u: &'a dyn RadialSolution,
}

impl<'a> Transformed<'a> {
    pub fn new(phi: &'a dyn RadialSolution, u: &'a dyn RadialSolution) -> Result<Self> {
        if phi.spec() != u.spec() {
            return Err(Error::Contract(
                "transformation function and solution belong to different potentials".into(),
            ));
        }
        Ok(Self { phi, u })
    }

    fn beta(&self, r: f64) -> Result<Complex64> {
        let (p, dp) = self.phi.eval(r)?;
        if is_node(r, p, dp) {
            return Err(Error::Node { radii: vec![r] });
        }
        Ok(-dp / p)
    }

    /// `(y, y', |u'| + |beta u|)` at `r`.
    pub fn eval_with_scale(&self, r: f64) -> Result<(Complex64, Complex64, f64)> {
        let beta = self.beta(r)?;
        let (u, du) = self.u.eval(r)?;
        let eps = self.phi.energy();
        // y' = u'' + beta' u + beta u' with u'' = (V - E_u) u
        let y = du + beta * u;
        let dy = (beta * beta + eps - self.u.energy()) * u + beta * du;
        Ok((y, dy, du.norm() + (beta * u).norm()))
    }
}

impl RadialSolution for Transformed<'_> {
    fn spec(&self) -> &PotentialSpec {
        self.u.spec()
    }

    fn energy(&self) -> Complex64 {
        self.u.energy()
    }

    fn eval(&self, r: f64) -> Result<(Complex64, Complex64)> {
        self.eval_with_scale(r).map(|(y, dy, _)| (y, dy))
    }

    fn potential_at(&self, r: f64) -> Complex64 {
        match self.beta(r) {
            Ok(beta) => deformed(beta, self.phi.energy(), self.phi.potential_at(r)),
            Err(_) => Complex64::new(f64::NAN, f64::NAN),
        }
    }

    fn describe(&self) -> Vec<PieceMeta> {
        self.u
            .describe()
            .into_iter()
            .map(|mut m| {
                m.form = format!("W(phi, {}) / phi", m.form);
                m
            })
            .collect()
    }
}

/// `y = W(phi, u) / phi` sampled on `grid`.
pub fn transform_solution(
    phi: &dyn RadialSolution,
    u: &dyn RadialSolution,
    grid: &RadialGrid,
) -> Result<RadialFunction> {
    let t = Transformed::new(phi, u)?;
    let nodes: Vec<f64> = grid
        .points()
        .par_iter()
        .map(|&r| phi.eval(r).map(|(p, dp)| (r, is_node(r, p, dp))))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(r, node)| node.then_some(r))
        .collect();
    node_error(nodes)?;
    t.sample(grid, FunctionLabel::Transformed)
}

/// `y = (phi u' - phi' u) / phi` from samples on a common grid.
pub fn transform_sampled(phi: &RadialFunction, u: &RadialFunction) -> Result<RadialFunction> {
    if phi.radii() != u.radii() {
        return Err(Error::InvalidGrid("samples must share one grid".into()));
    }
    let beta = superpotential_sampled(phi)?;
    let du = u.derivative_or_difference()?;
    let y = u
        .values()
        .iter()
        .zip(&du)
        .zip(beta.values())
        .map(|((v, d), b)| d + b * v)
        .collect();
    RadialFunction::new(u.grid().clone(), y, FunctionLabel::Transformed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Asymptotics {
    /// Both exterior waves present.
    Scattering,
    /// Only `u_plus`, not decaying.
    Outgoing,
    /// A single exterior wave that vanishes exponentially.
    Decaying,
    /// `y` vanishes identically.
    Null,
    /// Only `u_minus`, not decaying.
    Incoming,
}

/// Tail fit of a transformed solution against
/// `y -> -i gamma [(k_alpha + k) u_minus - (k_alpha - k) S u_plus]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub kind: Asymptotics,
    /// Radius of the tail fit.
    pub r_fit: f64,
    /// Fitted coefficient of `u_minus`.
    pub incoming: Complex64,
    /// Fitted coefficient of `u_plus`.
    pub outgoing: Complex64,
    /// `-i gamma (k_alpha + k)`, for `u` the matched scattering solution at `k`.
    pub expected_incoming: Complex64,
    /// `i gamma S (k_alpha - k)`, for `u` the matched scattering solution at `k`.
    pub expected_outgoing: Complex64,
    /// Largest `|u'| + |beta u|` on the grid, the size of the terms that cancel in `y`.
    pub scale: f64,
    pub max_abs: f64,
}

impl Classification {
    /// Largest relative deviation of the fitted coefficients from the expected ones.
    pub fn coefficient_error(&self) -> f64 {
        let floor = (self.expected_incoming.norm() + self.expected_outgoing.norm()) * f64::EPSILON;
        let rel = |fit: Complex64, want: Complex64| (fit - want).norm() / want.norm().max(floor);
        rel(self.incoming, self.expected_incoming).max(rel(self.outgoing, self.expected_outgoing))
    }
}

/// Classify the large-`r` behaviour of the Darboux image of a solution at
/// kinetic parameter `k`, sampled on `grid`.
///
/// The coefficients are fitted at the last grid point, which must lie outside
/// the well.
pub fn classify_asymptotics(
    spec: &PotentialSpec,
    k: Complex64,
    k_alpha: Complex64,
    t: &Transformed<'_>,
    grid: &RadialGrid,
) -> Result<Classification> {
    let r_fit = grid.r_max();
    if !(r_fit > spec.a()) {
        return Err(Error::Precondition(format!(
            "tail fit needs samples beyond a = {}, last radius is {r_fit}",
            spec.a()
        )));
    }
    if t.spec() != spec {
        return Err(Error::Contract(
            "transform belongs to a different potential".into(),
        ));
    }
    let samples: Vec<(Complex64, Complex64, f64)> = grid
        .points()
        .par_iter()
        .map(|&r| t.eval_with_scale(r))
        .collect::<Result<_>>()?;
    let scale = samples.iter().map(|s| s.2).fold(0.0, f64::max);
    let max_abs = samples.iter().map(|s| s.0.norm()).fold(0.0, f64::max);
    let (yv, dyv, local_scale) = samples[samples.len() - 1];

    let sol = ScatteringSolution::new(spec, k)?;
    let expected_incoming = -I * sol.zeta() * (k_alpha + k);
    let expected_outgoing = I * sol.xi() * (k_alpha - k);

    let ((m, p), (dm, dp)) = specfun::exterior_basis_with_derivative(spec.ell(), k, r_fit)?;
    let two_ik = 2.0 * I * k;
    let incoming = wronskian(yv, dyv, p, dp) / two_ik;
    let outgoing = -wronskian(yv, dyv, m, dm) / two_ik;

    let kind = if max_abs <= NULL_TOL * scale {
        Asymptotics::Null
    } else {
        // compare the two waves at the fit radius
        let (ni, no) = ((incoming * m).norm(), (outgoing * p).norm());
        if ni.max(no) <= AMBIGUOUS_TOL * local_scale {
            return Err(Error::Classification(format!(
                "tail components {ni:e} and {no:e} are negligible but max|y| = {max_abs:e}"
            )));
        }
        if ni <= PURE_TOL * no {
            if k.im > 0.0 {
                Asymptotics::Decaying
            } else {
                Asymptotics::Outgoing
            }
        } else if no <= PURE_TOL * ni {
            if k.im < 0.0 {
                Asymptotics::Decaying
            } else {
                Asymptotics::Incoming
            }
        } else {
            Asymptotics::Scattering
        }
    };
    Ok(Classification {
        kind,
        r_fit,
        incoming,
        outgoing,
        expected_incoming,
        expected_outgoing,
        scale,
        max_abs,
    })
}

/// One point of the Argand-Wessel curve of `V~`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArgandPoint {
    pub r: f64,
    pub re: f64,
    pub im: f64,
}

/// `samples` equally spaced points of `V~` over `range`, which must lie inside
/// the potential's grid.
pub fn argand_export(
    dp: &DarbouxPotential,
    range: (f64, f64),
    samples: usize,
) -> Result<Vec<ArgandPoint>> {
    let (from, to) = range;
    let grid = dp.grid();
    if !(from >= grid.r_min() && to <= grid.r_max()) {
        return Err(Error::Input(format!(
            "range [{from}, {to}] outside the grid [{}, {}]",
            grid.r_min(),
            grid.r_max()
        )));
    }
    let points = RadialGrid::linear(from, to, samples).map_err(|e| Error::Input(e.to_string()))?;
    points
        .points()
        .par_iter()
        .map(|&r| {
            dp.at(r).map(|v| ArgandPoint {
                r,
                re: v.re,
                im: v.im,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resonance::{analytic_resonance, gamow_function, refine_pole};
    use crate::scattering::bound_states;

    fn well() -> PotentialSpec {
        PotentialSpec::s_wave(100.0, 10.0).unwrap()
    }

    fn pole(spec: &PotentialSpec, m: u32) -> Complex64 {
        let rec = analytic_resonance(spec, m).unwrap();
        refine_pole(spec, rec.k_seed).unwrap().k
    }

    fn pure(spec: &PotentialSpec) -> GamowFunction {
        gamow_function(spec, pole(spec, 1), GamowMode::PureOutgoing).unwrap()
    }

    fn seed_k_alpha(spec: &PotentialSpec) -> Complex64 {
        analytic_resonance(spec, 1).unwrap().k_seed
    }

    #[test]
    fn interior_superpotential_is_cotangent() {
        let spec = well();
        let g = pure(&spec);
        let grid = RadialGrid::linear(0.5, 9.5, 19).unwrap();
        let beta = superpotential(&g, &grid).unwrap();
        let q = g.point.q;
        for (r, b) in beta.iter() {
            let want = -q * (q * r).cos() / (q * r).sin();
            assert!((b - want).norm() < 1e-12 * want.norm().max(1.0));
        }
    }

    #[test]
    fn pure_exterior_superpotential_is_constant() {
        let spec = well();
        let g = pure(&spec);
        let grid = RadialGrid::linear(10.5, 40.0, 30).unwrap();
        for (_, b) in superpotential(&g, &grid).unwrap().iter() {
            assert!((b + I * g.k_alpha).norm() < 1e-14);
        }
    }

    #[test]
    fn superpotential_edge_limit() {
        let spec = well();
        let g = pure(&spec);
        let r = 1e-4 * spec.a();
        let grid = RadialGrid::from_points(vec![r]).unwrap();
        let b = superpotential(&g, &grid).unwrap().values()[0];
        assert!((r * b + 1.0).norm() < 1e-3);
    }

    #[test]
    fn pure_mode_exterior_is_flat() {
        let spec = well();
        let g = pure(&spec);
        let grid = RadialGrid::linear(10.01, 50.0, 200).unwrap();
        let dp = darboux_potential(&spec, &g, &grid).unwrap();
        assert!(dp.values.max_abs() < 1e-8 * spec.v0());
    }

    #[test]
    fn centrifugal_term_near_origin() {
        let spec = well();
        let g = pure(&spec);
        let r = 1e-3 * spec.a();
        let grid = RadialGrid::from_points(vec![r]).unwrap();
        let dp = darboux_potential(&spec, &g, &grid).unwrap();
        let v = dp.values.values()[0] * r * r;
        assert!((v - 2.0).norm() / 2.0 < 1e-2);
        // the imaginary part tends to (2/3) Im eps, not to zero
        let grid = RadialGrid::from_points(vec![1e-3]).unwrap();
        let im = darboux_potential(&spec, &g, &grid).unwrap().im_part()[0];
        assert!((im - 2.0 / 3.0 * g.energy().im).abs() < 1e-4);
    }

    #[test]
    fn matched_mode_edge_values() {
        let spec = well();
        let g = gamow_function(&spec, seed_k_alpha(&spec), GamowMode::FullMatched).unwrap();
        let grid = RadialGrid::from_points(vec![10.0, 10.1]).unwrap();
        let dp = darboux_potential(&spec, &g, &grid).unwrap();
        let v = dp.values.values();
        assert!((v[0] - Complex64::new(100.2255, -0.8076)).norm() < 1e-3);
        assert!((v[1] - Complex64::new(-0.1157, -0.8306)).norm() < 1e-3);
        assert_eq!(dp.at(10.1).unwrap(), v[1]);
    }

    #[test]
    fn deformed_potential_matches_riccati_derivative() {
        let spec = well();
        let g = pure(&spec);
        let h = 1e-5;
        for r in [0.7, 3.3, 8.1] {
            let grid = RadialGrid::from_points(vec![r - h, r, r + h]).unwrap();
            let dp = darboux_potential(&spec, &g, &grid).unwrap();
            let b = dp.beta.values();
            let fd = spec.potential(r) + (b[2] - b[0]) / h; // V + 2 beta'

            let v = dp.values.values()[1];
            assert!((fd - v).norm() / v.norm().max(1.0) < 1e-6);
        }
    }

    #[test]
    fn real_transformation_function_has_nodes() {
        let free = PotentialSpec::s_wave(0.0, 1.0).unwrap();
        let g = gamow_function(&free, Complex64::new(1.0, 0.0), GamowMode::FullMatched).unwrap();
        let pi = std::f64::consts::PI;
        let grid = RadialGrid::from_points(vec![0.5, 2.0, pi, 4.0]).unwrap();
        match darboux_potential(&free, &g, &grid) {
            Err(Error::Node { radii }) => assert_eq!(radii, vec![pi]),
            other => panic!("expected node error, got {other:?}"),
        }
        // a real-q interior on a wider well is caught analytically
        let spec = PotentialSpec::s_wave(1.0, 10.0).unwrap();
        let g = gamow_function(&spec, Complex64::new(1.0, 0.0), GamowMode::FullMatched).unwrap();
        let grid = RadialGrid::linear(0.1, 1.0, 3).unwrap();
        assert!(darboux_potential(&spec, &g, &grid).is_ok());
        let grid = RadialGrid::linear(0.1, 5.0, 3).unwrap();
        match darboux_potential(&spec, &g, &grid) {
            Err(Error::Node { radii }) => assert!((radii[0] - pi / 2f64.sqrt()).abs() < 1e-12),
            other => panic!("expected node error, got {other:?}"),
        }
    }

    #[test]
    fn transform_of_phi_vanishes() {
        let spec = well();
        let g = pure(&spec);
        let grid = RadialGrid::linear(0.1, 30.0, 300).unwrap();
        let y = transform_solution(&g, &g, &grid).unwrap();
        assert!(y.max_abs() < 1e-10 * g.k_alpha.norm());
    }

    #[test]
    fn special_cases_of_the_tail() {
        let spec = well();
        let g = pure(&spec);
        let ka = g.k_alpha;
        let grid = RadialGrid::linear(0.05, 30.0, 600).unwrap();
        let classify = |k: Complex64| {
            let u = ScatteringSolution::new(&spec, k).unwrap();
            let t = Transformed::new(&g, &u).unwrap();
            classify_asymptotics(&spec, k, ka, &t, &grid).unwrap()
        };
        assert_eq!(classify(-ka).kind, Asymptotics::Null);
        assert_eq!(classify(ka).kind, Asymptotics::Null);
        assert_eq!(classify(-ka.conj()).kind, Asymptotics::Outgoing);
        // S(conj k_alpha) = 0 leaves the incoming wave, which grows for Im k > 0
        assert_eq!(classify(ka.conj()).kind, Asymptotics::Incoming);
        let c = classify(Complex64::new(1.0, 0.0));
        assert_eq!(c.kind, Asymptotics::Scattering);
        assert!(c.coefficient_error() < 1e-6);
    }

    #[test]
    fn transformed_bound_state_decays() {
        let spec = well();
        let g = pure(&spec);
        let state = bound_states(&spec).unwrap().remove(5);
        let sol = state.solution(&spec);
        let k = Complex64::new(0.0, state.kappa);
        let grid = RadialGrid::linear(0.05, 14.0, 400).unwrap();
        let t = Transformed::new(&g, &sol).unwrap();
        let c = classify_asymptotics(&spec, k, g.k_alpha, &t, &grid).unwrap();
        assert_eq!(c.kind, Asymptotics::Decaying);
        let tail: Vec<f64> = [11.0, 12.0, 13.0]
            .iter()
            .map(|&r| t.eval(r).unwrap().0.norm() * (state.kappa * r).exp())
            .collect();
        assert!((tail[0] - tail[2]).abs() / tail[0] < 1e-6);
    }

    #[test]
    fn sampled_transform_agrees_with_closed_form() {
        let spec = well();
        let g = pure(&spec);
        let u = ScatteringSolution::new(&spec, Complex64::new(1.5, 0.0)).unwrap();
        let grid = RadialGrid::linear(1.0, 2.0, 3).unwrap();
        let exact = transform_solution(&g, &u, &grid).unwrap();
        let phi = g.sample(&grid, FunctionLabel::Wavefunction).unwrap();
        let us = u.sample(&grid, FunctionLabel::Wavefunction).unwrap();
        let sampled = transform_sampled(&phi, &us).unwrap();
        for (a, b) in exact.values().iter().zip(sampled.values()) {
            assert!((a - b).norm() < 1e-12 * a.norm().max(1.0));
        }
    }

    #[test]
    fn argand_sampling() {
        let spec = well();
        let g = gamow_function(&spec, seed_k_alpha(&spec), GamowMode::FullMatched).unwrap();
        let grid = RadialGrid::linear(1.0, 20.0, 20).unwrap();
        let dp = darboux_potential(&spec, &g, &grid).unwrap();
        let curve = argand_export(&dp, (10.0, 10.1), 11).unwrap();
        assert_eq!(curve.len(), 11);
        assert!(curve.windows(2).all(|w| w[0].r < w[1].r));
        assert!((curve[0].re - 100.2255).abs() < 1e-3 && (curve[10].im + 0.8306).abs() < 1e-3);
        let one = argand_export(&dp, (10.0, 10.0), 1).unwrap();
        let v = dp.at(10.0).unwrap();
        assert_eq!((one[0].re, one[0].im), (v.re, v.im));
        assert!(matches!(
            argand_export(&dp, (10.0, 10.1), 0),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            argand_export(&dp, (10.1, 10.0), 3),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            argand_export(&dp, (0.5, 10.0), 3),
            Err(Error::Input(_))
        ));
    }
}
