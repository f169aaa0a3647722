//! s-wave resonances of the square well.
//!
//! The analytic estimate quantizes the real part of the interaction parameter
//! at odd multiples of `pi / 2a`, shifted by `n_inf = ceil(2 eta / pi)` so that
//! the real part of the energy is positive:
//!
//! ```text
//! Re eps = ([(n_inf + m) pi / (2 a sqrt(v0))]^2 - 1) v0,   Im eps = -(2/a) sqrt(Re eps)
//! ```
//!
//! The estimate seeds a Newton iteration on the pole function, and the
//! refined pole defines a Gamow-Siegert function with a purely outgoing tail.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::potential::{ComplexPoint, PotentialSpec};
use crate::radial::{Piece, PieceMeta, RadialSolution};
use crate::scattering::{self, ScatteringSolution};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Newton stops once `|D(k)|` drops below this.
pub const POLE_TOL: f64 = 1e-12;

pub const MAX_NEWTON_ITERATIONS: usize = 50;

/// Pure-mode Gamow functions need `|D(k_alpha)|` below this.
pub const PURE_MODE_TOL: f64 = 1e-8;

/// Parity of the admissible offsets `m`; `n = n_inf + m` is always odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MParity {
    /// `m = 0, 2, 4, ...` (`n_inf` odd).
    Even,
    /// `m = 1, 3, 5, ...` (`n_inf` even).
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceIndices {
    pub eta: f64,
    pub n_inf: u32,
    pub m_parity: MParity,
}

impl ResonanceIndices {
    pub fn first_m(&self) -> u32 {
        match self.m_parity {
            MParity::Even => 0,
            MParity::Odd => 1,
        }
    }

    /// Admissible offsets up to and including `m_max`, ascending.
    pub fn allowed_m(&self, m_max: u32) -> impl Iterator<Item = u32> {
        (self.first_m()..=m_max).step_by(2)
    }

    pub fn admits(&self, m: u32) -> bool {
        (self.n_inf + m) % 2 == 1
    }
}

/// One analytic resonance estimate, optionally with its refined pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceRecord {
    pub eta: f64,
    pub n_inf: u32,
    pub m: u32,
    /// `n_inf + m`, always odd.
    pub n: u32,
    /// Correction to `Q1 a` around `n pi / 2`, `-sin(n pi / 2) / eta`.
    pub delta_n: f64,
    /// Leading term of `Q2 a`; the `+1/eta` root is discarded.
    pub q2a: f64,
    pub eps_estimate: Complex64,
    pub k_seed: Complex64,
    pub k_refined: Option<Complex64>,
    /// `|D(k)|` at the refined pole if present, else at the seed.
    pub pole_residual: f64,
}

impl ResonanceRecord {
    /// Width `Gamma = -2 Im eps`.
    pub fn width(&self) -> f64 {
        -2.0 * self.eps_estimate.im
    }

    /// Refine the seed in place.
    pub fn refine(&mut self, spec: &PotentialSpec) -> Result<PoleRefinement> {
        let refined = refine_pole(spec, self.k_seed)?;
        self.k_refined = Some(refined.k);
        self.pole_residual = refined.residual;
        Ok(refined)
    }
}

/// `eta`, `n_inf` and the parity of `m` for an s-wave well.
pub fn resonance_indices(spec: &PotentialSpec) -> Result<ResonanceIndices> {
    require_s_wave(spec)?;
    let eta = spec.eta();
    if eta <= std::f64::consts::FRAC_PI_2 * (1.0 + 1e-12) {
        return Err(Error::NoResonanceRegime { eta });
    }
    if eta < 10.0 {
        log::warn!("eta = {eta} is not large; the analytic resonance estimate is rough");
    }
    let n_inf = (2.0 * eta / std::f64::consts::PI).ceil() as u32;
    let m_parity = if n_inf % 2 == 1 {
        MParity::Even
    } else {
        MParity::Odd
    };
    Ok(ResonanceIndices {
        eta,
        n_inf,
        m_parity,
    })
}

/// Analytic resonance estimate for offset `m`.
pub fn analytic_resonance(spec: &PotentialSpec, m: u32) -> Result<ResonanceRecord> {
    let idx = resonance_indices(spec)?;
    if !idx.admits(m) {
        return Err(Error::Parity {
            m,
            n_inf: idx.n_inf,
        });
    }
    let (v0, a, eta) = (spec.v0(), spec.a(), idx.eta);
    let n = idx.n_inf + m;
    let ratio = f64::from(n) * std::f64::consts::PI / (2.0 * eta);
    let re = (ratio * ratio - 1.0) * v0;
    let validity = a * a * re;
    if validity <= 1.0 {
        return Err(Error::ApproximationDomain(format!(
            "a^2 Re(eps) = {validity} must exceed 1 (m = {m})"
        )));
    }
    if validity < 10.0 {
        log::warn!("a^2 Re(eps) = {validity} is close to 1; width estimate is rough (m = {m})");
    }
    let im = -(2.0 / a) * re.sqrt();
    let sin_half = if n % 4 == 1 { 1.0 } else { -1.0 };
    let eps_estimate = Complex64::new(re, im);
    let k_seed = seed_from_energy(eps_estimate)?;
    Ok(ResonanceRecord {
        eta,
        n_inf: idx.n_inf,
        m,
        n,
        delta_n: -sin_half / eta,
        q2a: -1.0 / eta,
        eps_estimate,
        k_seed,
        k_refined: None,
        pole_residual: scattering::jost_denominator(spec, k_seed).norm(),
    })
}

/// Levels `E_n = (n pi / 2a)^2 - v0` for a real interaction parameter.
pub fn real_q_levels(spec: &PotentialSpec, n: u32) -> f64 {
    let q = f64::from(n) * std::f64::consts::PI / (2.0 * spec.a());
    q * q - spec.v0()
}

/// Kinetic parameter of the estimate, on the fourth-quadrant branch.
pub fn seed_wavenumber(rec: &ResonanceRecord) -> Result<Complex64> {
    seed_from_energy(rec.eps_estimate)
}

fn seed_from_energy(eps: Complex64) -> Result<Complex64> {
    if !(eps.re > 0.0) || eps.im > 0.0 {
        return Err(Error::Contract(format!(
            "resonance energy {eps} must have Re > 0 and Im <= 0"
        )));
    }
    // principal root of a fourth-quadrant energy lies in the fourth quadrant
    Ok(eps.sqrt())
}

#[derive(Debug, Clone, PartialEq)]
pub struct PoleRefinement {
    pub k: Complex64,
    /// `|D(k)|` with `D = ik sin(qa) - q cos(qa)`.
    pub residual: f64,
    pub iterations: usize,
}

/// Newton iteration for a pole of the s-wave amplitude.
///
/// Steps use `D(k)/q`, which shares the poles of `S` but not the spurious
/// root at `q = 0`. A seed in the open fourth quadrant must stay there.
pub fn refine_pole(spec: &PotentialSpec, k_seed: Complex64) -> Result<PoleRefinement> {
    require_s_wave(spec)?;
    let fourth = k_seed.re > 0.0 && k_seed.im < 0.0;
    let mut k = k_seed;
    let mut trace = vec![k];
    let fail = |trace: Vec<Complex64>, reason: String| Error::NonConvergence {
        iterations: trace.len() - 1,
        reason,
        trace,
    };
    for iteration in 0..=MAX_NEWTON_ITERATIONS {
        let residual = scattering::jost_denominator(spec, k).norm();
        if residual < POLE_TOL {
            if fourth && !(k.re > 0.0 && k.im < 0.0) {
                return Err(fail(
                    trace,
                    format!("converged to {k} outside the fourth quadrant"),
                ));
            }
            let inv_s = scattering::inverse_s_wave_amplitude(spec, k).norm();
            if !(inv_s < 1e-8) {
                return Err(fail(
                    trace,
                    format!("root {k} is not a pole of S (|1/S| = {inv_s})"),
                ));
            }
            return Ok(PoleRefinement {
                k,
                residual,
                iterations: iteration,
            });
        }
        if iteration == MAX_NEWTON_ITERATIONS {
            break;
        }
        let (f, df) = scattering::reduced_denominator(spec, k);
        let step = f / df;
        if !step.re.is_finite() || !step.im.is_finite() {
            return Err(fail(trace, "vanishing derivative".into()));
        }
        k -= step;
        trace.push(k);
        if fourth && k.im > 0.0 && k.re < 0.0 {
            return Err(fail(trace, "iterate escaped to the second quadrant".into()));
        }
    }
    let last = *trace.last().unwrap();
    Err(fail(
        trace,
        format!(
            "|D| = {} at {last}",
            scattering::jost_denominator(spec, last).norm()
        ),
    ))
}

fn require_s_wave(spec: &PotentialSpec) -> Result<()> {
    if spec.ell().value() != 0 {
        return Err(Error::Precondition(format!(
            "resonance analysis is available for ell = 0 only, got ell = {}",
            spec.ell()
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GamowMode {
    /// `2ik sin(qr)` inside, `2ik sin(qa) e^{ik(r-a)}` outside.
    PureOutgoing,
    /// The matched scattering solution at complex `k`, both exterior waves kept.
    FullMatched,
}

/// Gamow-Siegert function of the square well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GamowFunction {
    pub spec: PotentialSpec,
    pub k_alpha: Complex64,
    pub mode: GamowMode,
    pub point: ComplexPoint,
    /// `theta = 2ik_alpha`.
    pub interior_amplitude: Complex64,
    /// Coefficient of the outgoing wave outside the well.
    pub exterior_amplitude: Complex64,
    matched: Option<ScatteringSolution>,
}

pub fn gamow_function(
    spec: &PotentialSpec,
    k_alpha: Complex64,
    mode: GamowMode,
) -> Result<GamowFunction> {
    let point = spec.point(k_alpha);
    let theta = scattering::theta(k_alpha);
    match mode {
        GamowMode::PureOutgoing => {
            require_s_wave(spec)?;
            let d = scattering::jost_denominator(spec, k_alpha).norm();
            if !(d < PURE_MODE_TOL) {
                return Err(Error::Precondition(format!(
                    "pure outgoing mode needs a pole, |D({k_alpha})| = {d}"
                )));
            }
            Ok(GamowFunction {
                spec: *spec,
                k_alpha,
                mode,
                point,
                interior_amplitude: theta,
                exterior_amplitude: theta * (point.q * spec.a()).sin(),
                matched: None,
            })
        }
        GamowMode::FullMatched => {
            scattering::s_matrix(spec, k_alpha)?;
            let sol = ScatteringSolution::new(spec, k_alpha)?;
            Ok(GamowFunction {
                spec: *spec,
                k_alpha,
                mode,
                point,
                interior_amplitude: theta,
                exterior_amplitude: -sol.xi(),
                matched: Some(sol),
            })
        }
    }
}

impl GamowFunction {
    /// `beta = -u'/u`; exactly `-ik_alpha` on the pure outgoing tail.
    pub fn log_derivative(&self, r: f64) -> Result<Complex64> {
        if self.mode == GamowMode::PureOutgoing && r > self.spec.a() {
            return Ok(-I * self.k_alpha);
        }
        let (u, du) = self.eval(r)?;
        if u == Complex64::new(0.0, 0.0) {
            return Err(Error::Node { radii: vec![r] });
        }
        Ok(-du / u)
    }
}

impl RadialSolution for GamowFunction {
    fn spec(&self) -> &PotentialSpec {
        &self.spec
    }

    fn energy(&self) -> Complex64 {
        self.point.eps
    }

    fn eval(&self, r: f64) -> Result<(Complex64, Complex64)> {
        if let Some(sol) = &self.matched {
            return sol.eval(r);
        }
        if !(r > 0.0) {
            return Err(Error::Domain(format!("radius must be positive, got {r}")));
        }
        let (k, q, a) = (self.k_alpha, self.point.q, self.spec.a());
        if self.spec.is_interior(r) {
            let z = q * r;
            Ok((
                self.interior_amplitude * z.sin(),
                self.interior_amplitude * q * z.cos(),
            ))
        } else {
            let u = self.exterior_amplitude * (I * k * (r - a)).exp();
            Ok((u, I * k * u))
        }
    }

    fn describe(&self) -> Vec<PieceMeta> {
        let exterior = match self.mode {
            GamowMode::PureOutgoing => "2ik sin(qa) exp(ik(r - a))",
            GamowMode::FullMatched => "zeta u_minus(r) - xi u_plus(r)",
        };
        vec![
            PieceMeta {
                piece: Piece::Interior,
                r_from: 0.0,
                r_to: self.spec.a(),
                form: "2ik sin(qr)".into(),
            },
            PieceMeta {
                piece: Piece::Exterior,
                r_from: self.spec.a(),
                r_to: f64::INFINITY,
                form: exterior.into(),
            },
        ]
    }
}

/// `|beta(r) + i k_alpha|` with `beta = -u'/u`, for `r > a`.
pub fn outgoing_residual(g: &GamowFunction, r: f64) -> Result<f64> {
    if !(r > g.spec.a()) {
        return Err(Error::Precondition(format!(
            "outgoing residual is defined outside the well, got r = {r} <= a = {}",
            g.spec.a()
        )));
    }
    Ok((g.log_derivative(r)? + I * g.k_alpha).norm())
}
