//! Interior/exterior matching for the square well: scattering amplitude,
//! phase shift, bound states and full radial wavefunctions.
//!
//! The interior solution is normalized as `theta q r j_ell(qr)` with
//! `theta = 2ik`, so for the s-wave it is `2ik sin(qr)`. Outside the well the
//! solution is written `zeta u_minus - xi u_plus`, with `gamma = zeta` and
//! `S = xi / zeta`. Both coefficients come from Wronskians at `r = a`:
//!
//! ```text
//! zeta = W(u_in, u_plus) / 2ik,    xi = W(u_in, u_minus) / 2ik
//! ```
//!
//! For `ell = 0` the s-wave closed forms are used directly, and the pole
//! function is evaluated as `D~(k) = ik sin(qa)/q - cos(qa)`, which is entire
//! in `q^2` and so independent of the branch of `q`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::potential::{ComplexPoint, PotentialSpec};
use crate::radial::{FunctionLabel, Piece, PieceMeta, RadialFunction, RadialGrid, RadialSolution};
use crate::specfun::{self, wronskian, SphKind};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Wronskian modulus below which `k` is treated as sitting on a pole.
pub const POLE_GUARD: f64 = 1e-300;

/// Bisection stops once the kappa bracket is narrower than this.
pub const BOUND_STATE_TOL: f64 = 1e-13;

/// Outcome of matching at a single kinetic parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringData {
    pub k: Complex64,
    pub s_value: Complex64,
    pub gamma: Complex64,
    /// Phase shift, present only for real `k`.
    pub delta: Option<f64>,
    pub zeta: Complex64,
    pub xi: Complex64,
}

/// `q`, `sin(qa)`, `cos(qa)` and `sin(qa)/q` at one `k`.
///
/// `q a` is carried to roughly twice working precision before the
/// trigonometric functions are taken, since `qa` is a few hundred for the
/// wells of interest and one rounding of `q` would otherwise show up in the
/// pole residual.
#[derive(Debug, Clone, Copy)]
pub(crate) struct WellTrig {
    pub q: Complex64,
    pub sin_qa: Complex64,
    pub cos_qa: Complex64,
    /// `sin(qa) / q`, continuous through `q = 0`.
    pub sinc: Complex64,
    /// `d/dk [sin(qa) / q]`.
    pub sinc_dk: Complex64,
}

impl WellTrig {
    pub fn new(spec: &PotentialSpec, k: Complex64) -> Self {
        let a = spec.a();
        let (q, q_lo) = sqrt_compensated(spec.v0(), k);
        let (x_hi, x_lo) = scale_compensated(q, q_lo, a);
        let (s_hi, c_hi) = (x_hi.sin(), x_hi.cos());
        let sin_qa = s_hi + x_lo * c_hi;
        let cos_qa = c_hi - x_lo * s_hi;
        let x = x_hi + x_lo;
        let (sinc, sinc_dk) = if x.norm() < 1e-3 {
            let x2 = x * x;
            let sinc = a * (1.0 - x2 / 6.0 + x2 * x2 / 120.0);
            let d = k * a * a * a * (-1.0 / 3.0 + x2 / 30.0 - x2 * x2 / 840.0);
            (sinc, d)
        } else {
            let sinc = sin_qa / q;
            (sinc, k * (a * cos_qa - sinc) / (q * q))
        };
        Self {
            q,
            sin_qa,
            cos_qa,
            sinc,
            sinc_dk,
        }
    }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Principal `sqrt(v0 + k^2)` as an unevaluated sum `hi + lo`.
fn sqrt_compensated(v0: f64, k: Complex64) -> (Complex64, Complex64) {
    let (xx, e_xx) = two_prod(k.re, k.re);
    let (yy, e_yy) = two_prod(k.im, k.im);
    let (xy, e_xy) = two_prod(k.re, k.im);
    let (s1, e1) = two_sum(v0, xx);
    let (w_re, e2) = two_sum(s1, -yy);
    let w_re_lo = e1 + e2 + e_xx - e_yy;
    let (w_im, w_im_lo) = (2.0 * xy, 2.0 * e_xy);
    let q = Complex64::new(w_re, w_im).sqrt();
    if q == Complex64::new(0.0, 0.0) {
        return (q, Complex64::new(0.0, 0.0));
    }
    // residual w - q^2, then one Newton correction
    let (aa, e_aa) = two_prod(q.re, q.re);
    let (bb, e_bb) = two_prod(q.im, q.im);
    let (ab, e_ab) = two_prod(q.re, q.im);
    let (d1, f1) = two_sum(w_re, -aa);
    let (d2, f2) = two_sum(d1, bb);
    let res_re = d2 + (f1 + f2 + w_re_lo - e_aa + e_bb);
    let res_im = (w_im - 2.0 * ab) + (w_im_lo - 2.0 * e_ab);
    (q, Complex64::new(res_re, res_im) / (2.0 * q))
}

fn scale_compensated(hi: Complex64, lo: Complex64, a: f64) -> (Complex64, Complex64) {
    let (re, e_re) = two_prod(hi.re, a);
    let (im, e_im) = two_prod(hi.im, a);
    (Complex64::new(re, im), Complex64::new(e_re, e_im) + lo * a)
}

/// s-wave pole function `D(k) = ik sin(qa) - q cos(qa)`, the denominator of
/// the closed-form scattering amplitude. Its zeros in `k` are the poles of `S`
/// together with the spurious pair `q = 0`.
pub fn jost_denominator(spec: &PotentialSpec, k: Complex64) -> Complex64 {
    let t = WellTrig::new(spec, k);
    I * k * t.sin_qa - t.q * t.cos_qa
}

/// `D(k) / q = ik sin(qa)/q - cos(qa)` and its derivative in `k`.
///
/// Same poles as [`jost_denominator`] without the spurious root at `q = 0`.
pub fn reduced_denominator(spec: &PotentialSpec, k: Complex64) -> (Complex64, Complex64) {
    let t = WellTrig::new(spec, k);
    let a = spec.a();
    let value = I * k * t.sinc - t.cos_qa;
    let deriv = I * t.sinc + I * k * t.sinc_dk + a * k * t.sinc;
    (value, deriv)
}

/// Interior normalization `theta = 2ik`.
pub fn theta(k: Complex64) -> Complex64 {
    2.0 * I * k
}

/// Matching coefficients `(zeta, xi)` without any pole guard.
fn matching(spec: &PotentialSpec, k: Complex64) -> Result<(Complex64, Complex64)> {
    if k == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain("kinetic parameter k = 0".into()));
    }
    let a = spec.a();
    if spec.ell().value() == 0 {
        let t = WellTrig::new(spec, k);
        let e = (I * k * a).exp();
        let zeta = e * (I * k * t.sin_qa - t.q * t.cos_qa);
        let xi = -(I * k * t.sin_qa + t.q * t.cos_qa) / e;
        return Ok((zeta, xi));
    }
    let (u_in, du_in) = interior_regular(spec, k, a)?;
    let ((m, p), (dm, dp)) = specfun::exterior_basis_with_derivative(spec.ell(), k, a)?;
    let two_ik = 2.0 * I * k;
    Ok((
        wronskian(u_in, du_in, p, dp) / two_ik,
        wronskian(u_in, du_in, m, dm) / two_ik,
    ))
}

/// Interior regular solution `theta q r j_ell(qr)` and its derivative.
fn interior_regular(spec: &PotentialSpec, k: Complex64, r: f64) -> Result<(Complex64, Complex64)> {
    let th = theta(k);
    if spec.ell().value() == 0 {
        let q = spec.point(k).q;
        let z = q * r;
        return Ok((th * z.sin(), th * q * z.cos()));
    }
    let q = spec.point(k).q;
    let (f, df) = specfun::riccati(SphKind::J, spec.ell(), q * r)?;
    Ok((th * f, th * q * df))
}

/// Scattering amplitude and matching coefficients at complex `k`.
pub fn s_matrix(spec: &PotentialSpec, k: Complex64) -> Result<ScatteringData> {
    let (zeta, xi) = matching(spec, k)?;
    // zeta = W(u_in, u_plus) / 2ik
    let w_plus = zeta * 2.0 * I * k;
    if w_plus.norm() < POLE_GUARD || zeta == Complex64::new(0.0, 0.0) {
        return Err(Error::AtPole { k });
    }
    let s_value = if spec.ell().value() == 0 {
        let t = WellTrig::new(spec, k);
        let (d, _) = reduced_denominator(spec, k);
        -(I * k * t.sinc + t.cos_qa) / d * (-2.0 * I * k * spec.a()).exp()
    } else {
        xi / zeta
    };
    let delta = if k.im == 0.0 {
        phase_from(s_value).ok()
    } else {
        None
    };
    Ok(ScatteringData {
        k,
        s_value,
        gamma: zeta,
        delta,
        zeta,
        xi,
    })
}

fn phase_from(s: Complex64) -> Result<f64> {
    if (s.norm() - 1.0).abs() > 1e-9 {
        return Err(Error::Contract(format!(
            "phase shift needs |S| = 1, got |S| = {}",
            s.norm()
        )));
    }
    // arg in (-pi, pi] maps onto (-pi/2, pi/2]
    Ok(0.5 * s.arg())
}

/// `delta = arg(S) / 2` in `(-pi/2, pi/2]`, for real `k` only.
pub fn phase_shift(sd: &ScatteringData) -> Result<f64> {
    if sd.k.im != 0.0 {
        return Err(Error::Contract(format!(
            "phase shift needs real k, got {}",
            sd.k
        )));
    }
    phase_from(sd.s_value)
}

/// Regular solution at complex `k` in closed form on both sides of `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringSolution {
    spec: PotentialSpec,
    point: ComplexPoint,
    theta: Complex64,
    zeta: Complex64,
    xi: Complex64,
}

impl ScatteringSolution {
    /// Builds the solution without checking for a pole; at an exact pole the
    /// exterior reduces to the outgoing wave.
    pub fn new(spec: &PotentialSpec, k: Complex64) -> Result<Self> {
        let (zeta, xi) = matching(spec, k)?;
        Ok(Self {
            spec: *spec,
            point: spec.point(k),
            theta: theta(k),
            zeta,
            xi,
        })
    }

    pub fn k(&self) -> Complex64 {
        self.point.k
    }

    pub fn point(&self) -> ComplexPoint {
        self.point
    }

    pub fn zeta(&self) -> Complex64 {
        self.zeta
    }

    pub fn xi(&self) -> Complex64 {
        self.xi
    }
}

impl RadialSolution for ScatteringSolution {
    fn spec(&self) -> &PotentialSpec {
        &self.spec
    }

    fn energy(&self) -> Complex64 {
        self.point.eps
    }

    fn eval(&self, r: f64) -> Result<(Complex64, Complex64)> {
        let k = self.point.k;
        if self.spec.is_interior(r) {
            if !(r > 0.0) {
                return Err(Error::Domain(format!("radius must be positive, got {r}")));
            }
            return interior_regular(&self.spec, k, r);
        }
        let ((m, p), (dm, dp)) = specfun::exterior_basis_with_derivative(self.spec.ell(), k, r)?;
        Ok((self.zeta * m - self.xi * p, self.zeta * dm - self.xi * dp))
    }

    fn describe(&self) -> Vec<PieceMeta> {
        vec![
            PieceMeta {
                piece: Piece::Interior,
                r_from: 0.0,
                r_to: self.spec.a(),
                form: "2ik qr j_l(qr)".into(),
            },
            PieceMeta {
                piece: Piece::Exterior,
                r_from: self.spec.a(),
                r_to: f64::INFINITY,
                form: "zeta u_minus(r) - xi u_plus(r)".into(),
            },
        ]
    }
}

/// Regular radial wavefunction at `k` sampled on `grid`.
pub fn wavefunction(
    spec: &PotentialSpec,
    k: Complex64,
    grid: &RadialGrid,
) -> Result<RadialFunction> {
    s_matrix(spec, k)?;
    ScatteringSolution::new(spec, k)?.sample(grid, FunctionLabel::Wavefunction)
}

/// s-wave bound state at `E = -kappa^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundState {
    pub kappa: f64,
    pub energy: f64,
    /// `sin(qr)` inside, `sin(qa) e^{-kappa (r - a)}` outside, sampled out to
    /// `a + 30 / kappa`.
    pub wave: RadialFunction,
    /// `int_0^inf |phi|^2 dr` of the unnormalized function in `wave`.
    pub norm: f64,
}

impl BoundState {
    pub fn solution(&self, spec: &PotentialSpec) -> BoundSolution {
        BoundSolution::new(spec, self.kappa)
    }
}

/// Closed form of an s-wave bound state, unnormalized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundSolution {
    spec: PotentialSpec,
    kappa: f64,
    q: f64,
}

impl BoundSolution {
    pub fn new(spec: &PotentialSpec, kappa: f64) -> Self {
        Self {
            spec: *spec,
            kappa,
            q: (spec.v0() - kappa * kappa).max(0.0).sqrt(),
        }
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// `int_0^inf |phi|^2 dr`.
    pub fn norm(&self) -> f64 {
        let (a, q, kappa) = (self.spec.a(), self.q, self.kappa);
        let interior = if q * a < 1e-8 {
            q * q * a * a * a / 3.0
        } else {
            a / 2.0 - (2.0 * q * a).sin() / (4.0 * q)
        };
        interior + (q * a).sin().powi(2) / (2.0 * kappa)
    }
}

impl RadialSolution for BoundSolution {
    fn spec(&self) -> &PotentialSpec {
        &self.spec
    }

    fn energy(&self) -> Complex64 {
        Complex64::new(-self.kappa * self.kappa, 0.0)
    }

    fn eval(&self, r: f64) -> Result<(Complex64, Complex64)> {
        let (a, q, kappa) = (self.spec.a(), self.q, self.kappa);
        let (u, du) = if self.spec.is_interior(r) {
            ((q * r).sin(), q * (q * r).cos())
        } else {
            let tail = (q * a).sin() * (-kappa * (r - a)).exp();
            (tail, -kappa * tail)
        };
        Ok((Complex64::new(u, 0.0), Complex64::new(du, 0.0)))
    }

    fn describe(&self) -> Vec<PieceMeta> {
        vec![
            PieceMeta {
                piece: Piece::Interior,
                r_from: 0.0,
                r_to: self.spec.a(),
                form: "sin(qr)".into(),
            },
            PieceMeta {
                piece: Piece::Exterior,
                r_from: self.spec.a(),
                r_to: f64::INFINITY,
                form: "sin(qa) exp(-kappa (r - a))".into(),
            },
        ]
    }
}

/// `q cos(qa) + kappa sin(qa)` with `q = sqrt(v0 - kappa^2)`; zero at bound states.
fn bound_condition(spec: &PotentialSpec, kappa: f64) -> f64 {
    let q = (spec.v0() - kappa * kappa).max(0.0).sqrt();
    let x = q * spec.a();
    q * x.cos() + kappa * x.sin()
}

fn bisect_kappa(spec: &PotentialSpec, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = bound_condition(spec, lo);
    for _ in 0..400 {
        if hi - lo < BOUND_STATE_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = bound_condition(spec, mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// All s-wave bound states, deepest first.
///
/// `qa` runs over `(0, eta)` in brackets of width `pi/2`; each bracket with a
/// strict sign change of the matching condition holds exactly one level,
/// which is then bisected in `kappa`.
pub fn bound_states(spec: &PotentialSpec) -> Result<Vec<BoundState>> {
    if spec.ell().value() != 0 {
        return Err(Error::Precondition(
            "bound-state search is implemented for the s-wave only".into(),
        ));
    }
    let eta = spec.eta();
    let a = spec.a();
    let kappa_of = |x: f64| ((eta * eta - x * x).max(0.0)).sqrt() / a;
    let step = std::f64::consts::FRAC_PI_2;
    let mut out = Vec::new();
    let mut j = 0usize;
    loop {
        let x_l = step * j as f64;
        if x_l >= eta {
            break;
        }
        let x_r = (step * (j + 1) as f64).min(eta);
        j += 1;
        let (k_hi, k_lo) = (kappa_of(x_l), kappa_of(x_r));
        let (f_hi, f_lo) = (bound_condition(spec, k_hi), bound_condition(spec, k_lo));
        if x_l == 0.0 || f_hi == 0.0 || f_lo == 0.0 || (f_hi > 0.0) == (f_lo > 0.0) {
            continue;
        }
        let kappa = bisect_kappa(spec, k_lo, k_hi);
        if !(kappa > 0.0) {
            continue;
        }
        let solution = BoundSolution::new(spec, kappa);
        let inv_s = inverse_s_wave_amplitude(spec, Complex64::new(0.0, kappa));
        if inv_s.norm() >= 1e-6 {
            log::warn!(
                "bound state kappa = {kappa}: |1/S(i kappa)| = {} is not small",
                inv_s.norm()
            );
        }
        let grid = RadialGrid::linear(1e-4 * a, a + 30.0 / kappa, 2001)?;
        let wave = solution.sample(&grid, FunctionLabel::Wavefunction)?;
        out.push(BoundState {
            kappa,
            energy: -kappa * kappa,
            wave,
            norm: solution.norm(),
        });
    }
    Ok(out)
}

/// `1/S(k)` for the s-wave, finite at the poles of `S`.
pub fn inverse_s_wave_amplitude(spec: &PotentialSpec, k: Complex64) -> Complex64 {
    let t = WellTrig::new(spec, k);
    let (d, _) = reduced_denominator(spec, k);
    -d / (I * k * t.sinc + t.cos_qa) * (2.0 * I * k * spec.a()).exp()
}
