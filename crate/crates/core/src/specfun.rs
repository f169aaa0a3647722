//! Spherical Bessel, Neumann and Hankel functions of complex argument, and
//! the Riccati-type radial bases built from them.
//!
//! Orders 0 and 1 come from closed forms. `h1` and `h2` are summed from their
//! terminating expansions, and `n` uses upward recurrence, which is stable for
//! the dominant solution. The
//! regular function `j` is the minimal solution of the recurrence, so orders
//! above one are summed from the power series when `|z| < ell` and obtained
//! by Miller's downward recurrence otherwise.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest angular momentum accepted by the public API.
pub const MAX_ELL: u32 = 10;

/// Largest `|Im z|` accepted before `e^{|Im z|}` leaves double range.
pub const MAX_IMAG_ARG: f64 = 700.0;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Orbital angular momentum quantum number, `0 <= ell <= MAX_ELL`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AngularMomentum(u32);

impl AngularMomentum {
    pub const S_WAVE: AngularMomentum = AngularMomentum(0);

    pub fn new(ell: u32) -> Result<Self> {
        if ell > MAX_ELL {
            return Err(Error::Domain(format!(
                "angular momentum {ell} outside supported range 0..={MAX_ELL}"
            )));
        }
        Ok(Self(ell))
    }

    pub fn value(self) -> u32 {
        self.0
    }

    /// Centrifugal coefficient `ell (ell + 1)`.
    pub fn centrifugal(self) -> f64 {
        let l = f64::from(self.0);
        l * (l + 1.0)
    }

    /// Normalization `Lambda_ell = 2^-ell sqrt(pi) / Gamma(ell + 1/2) = 1 / (2 ell - 1)!!`.
    pub fn lambda(self) -> f64 {
        1.0 / double_factorial(2 * i64::from(self.0) - 1)
    }
}

impl TryFrom<u32> for AngularMomentum {
    type Error = Error;

    fn try_from(ell: u32) -> Result<Self> {
        Self::new(ell)
    }
}

impl std::fmt::Display for AngularMomentum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which spherical function to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SphKind {
    /// Spherical Bessel `j_ell`.
    J,
    /// Spherical Neumann `n_ell` (also written `y_ell`).
    N,
    /// Spherical Hankel of the first kind, `j + i n`.
    H1,
    /// Spherical Hankel of the second kind, `j - i n`.
    H2,
}

impl SphKind {
    pub const ALL: [SphKind; 4] = [SphKind::J, SphKind::N, SphKind::H1, SphKind::H2];

    fn singular_at_origin(self) -> bool {
        !matches!(self, SphKind::J)
    }
}

/// Values of the four radial basis solutions at one radius.
///
/// `u_plus`/`u_minus` are the outgoing/incoming exterior solutions, `u_reg`
/// and `u_irr` the regular and irregular interior ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisValue {
    pub u_plus: Complex64,
    pub u_minus: Complex64,
    pub u_reg: Complex64,
    pub u_irr: Complex64,
}

/// Spherical function of the requested kind and order at complex `z`.
pub fn sph_bessel(kind: SphKind, ell: AngularMomentum, z: Complex64) -> Result<Complex64> {
    eval(kind, ell.value() as usize, z)
}

/// `W(f, g) = f g' - f' g`.
pub fn wronskian(f: Complex64, df: Complex64, g: Complex64, dg: Complex64) -> Complex64 {
    f * dg - df * g
}

/// Riccati form `z f_ell(z)` of a spherical function together with its
/// derivative with respect to `z`.
///
/// The derivative uses `(z f_ell)' = (ell + 1) f_ell - z f_{ell+1}`.
pub fn riccati(
    kind: SphKind,
    ell: AngularMomentum,
    z: Complex64,
) -> Result<(Complex64, Complex64)> {
    let l = ell.value() as usize;
    if l == 0 {
        check_argument(kind, z)?;
        return Ok(riccati_s_wave(kind, z));
    }
    if kind == SphKind::J && z == Complex64::new(0.0, 0.0) {
        return Ok((z, z));
    }
    let f = eval(kind, l, z)?;
    let f_next = eval(kind, l + 1, z)?;
    let value = z * f;
    let deriv = (l as f64 + 1.0) * f - z * f_next;
    finite(value, "riccati value")?;
    finite(deriv, "riccati derivative")?;
    Ok((value, deriv))
}

/// Exterior pair `(u_minus, u_plus)` with `u_plus = i k r h1_ell(kr)` and
/// `u_minus = -i k r h2_ell(kr)`. For `ell = 0` these are `e^{-ikr}`, `e^{ikr}`.
pub fn exterior_basis(
    ell: AngularMomentum,
    k: Complex64,
    r: f64,
) -> Result<(Complex64, Complex64)> {
    let (values, _) = exterior_basis_with_derivative(ell, k, r)?;
    Ok(values)
}

/// Exterior pair and its radial derivative: `((u_minus, u_plus), (u_minus', u_plus'))`.
#[allow(clippy::type_complexity)]
pub fn exterior_basis_with_derivative(
    ell: AngularMomentum,
    k: Complex64,
    r: f64,
) -> Result<((Complex64, Complex64), (Complex64, Complex64))> {
    check_radial(k, r)?;
    let z = k * r;
    if ell.value() == 0 {
        check_argument(SphKind::H1, z)?;
        let plus = (I * z).exp();
        let minus = (-I * z).exp();
        return Ok(((minus, plus), (-I * k * minus, I * k * plus)));
    }
    let (h1, dh1) = riccati(SphKind::H1, ell, z)?;
    let (h2, dh2) = riccati(SphKind::H2, ell, z)?;
    let plus = I * h1;
    let minus = -I * h2;
    Ok(((minus, plus), (-I * k * dh2, I * k * dh1)))
}

/// Interior pair `(u_reg, u_irr)` with `u_reg = ((2 ell + 1) / Lambda) k r j_ell(kr)`
/// and `u_irr = -Lambda k r n_ell(kr)`.
pub fn interior_basis(
    ell: AngularMomentum,
    k: Complex64,
    r: f64,
) -> Result<(Complex64, Complex64)> {
    let (values, _) = interior_basis_with_derivative(ell, k, r)?;
    Ok(values)
}

/// Interior pair and its radial derivative.
#[allow(clippy::type_complexity)]
pub fn interior_basis_with_derivative(
    ell: AngularMomentum,
    k: Complex64,
    r: f64,
) -> Result<((Complex64, Complex64), (Complex64, Complex64))> {
    check_radial(k, r)?;
    let z = k * r;
    let lambda = ell.lambda();
    let reg_scale = (2.0 * f64::from(ell.value()) + 1.0) / lambda;
    let (j, dj) = riccati(SphKind::J, ell, z)?;
    let (n, dn) = riccati(SphKind::N, ell, z)?;
    Ok((
        (reg_scale * j, -lambda * n),
        (reg_scale * k * dj, -lambda * k * dn),
    ))
}

/// All four basis values at `(k, r)`.
pub fn basis(ell: AngularMomentum, k: Complex64, r: f64) -> Result<BasisValue> {
    let (u_minus, u_plus) = exterior_basis(ell, k, r)?;
    let (u_reg, u_irr) = interior_basis(ell, k, r)?;
    Ok(BasisValue {
        u_plus,
        u_minus,
        u_reg,
        u_irr,
    })
}

fn check_radial(k: Complex64, r: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Domain(format!(
            "radius must be positive and finite, got {r}"
        )));
    }
    if k == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain("kinetic parameter k = 0".into()));
    }
    Ok(())
}

fn check_argument(kind: SphKind, z: Complex64) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {z}")));
    }
    if kind.singular_at_origin() && z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain(format!("{kind:?} is singular at z = 0")));
    }
    if z.im.abs() > MAX_IMAG_ARG {
        return Err(Error::Range(format!(
            "|Im z| = {} exceeds overflow guard {MAX_IMAG_ARG}",
            z.im.abs()
        )));
    }
    Ok(())
}

fn finite(v: Complex64, what: &str) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Range(format!("{what} overflowed")))
    }
}

fn riccati_s_wave(kind: SphKind, z: Complex64) -> (Complex64, Complex64) {
    match kind {
        SphKind::J => (z.sin(), z.cos()),
        SphKind::N => (-z.cos(), z.sin()),
        SphKind::H1 => {
            let e = (I * z).exp();
            (-I * e, e)
        }
        SphKind::H2 => {
            let e = (-I * z).exp();
            (I * e, e)
        }
    }
}

/// Order-`l` function without the public `MAX_ELL` cap (derivatives need `l + 1`).
fn eval(kind: SphKind, l: usize, z: Complex64) -> Result<Complex64> {
    check_argument(kind, z)?;
    let value = match kind {
        SphKind::J => j_any(l, z),
        SphKind::N => upward(kind, l, z),
        SphKind::H1 | SphKind::H2 => hankel_sum(kind, l, z),
    };
    finite(value, "spherical function")
}

fn closed_form(kind: SphKind, l: usize, z: Complex64) -> Complex64 {
    debug_assert!(l <= 1);
    let (s, c) = (z.sin(), z.cos());
    match (kind, l) {
        (SphKind::J, 0) => s / z,
        (SphKind::J, _) => s / (z * z) - c / z,
        (SphKind::N, 0) => -c / z,
        (SphKind::N, _) => -c / (z * z) - s / z,
        (SphKind::H1, 0) => -I * (I * z).exp() / z,
        (SphKind::H1, _) => -(I * z).exp() * (z + I) / (z * z),
        (SphKind::H2, 0) => I * (-I * z).exp() / z,
        (SphKind::H2, _) => -(-I * z).exp() * (z - I) / (z * z),
    }
}

fn upward(kind: SphKind, l: usize, z: Complex64) -> Complex64 {
    let mut prev = closed_form(kind, 0, z);
    if l == 0 {
        return prev;
    }
    let mut cur = closed_form(kind, 1, z);
    for n in 1..l {
        let next = (2.0 * n as f64 + 1.0) / z * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Finite expansion
/// `h1_l(z) = (-i)^{l+1} e^{iz} / z * sum_k (l+k)! / (k! (l-k)!) (i / 2z)^k`,
/// and its mirror for `h2`. Unlike upward recurrence it keeps full relative
/// accuracy where the function is exponentially recessive.
fn hankel_sum(kind: SphKind, l: usize, z: Complex64) -> Complex64 {
    let sign = if kind == SphKind::H1 { 1.0 } else { -1.0 };
    let step = sign * I / (2.0 * z);
    let mut coeff = 1.0;
    let mut power = Complex64::new(1.0, 0.0);
    let mut sum = power;
    for k in 1..=l {
        coeff *= ((l + k) * (l + 1 - k)) as f64 / k as f64;
        power *= step;
        sum += coeff * power;
    }
    let mut phase = Complex64::new(1.0, 0.0);
    for _ in 0..=l {
        phase *= -sign * I;
    }
    phase * (sign * I * z).exp() / z * sum
}

fn j_any(l: usize, z: Complex64) -> Complex64 {
    let r = z.norm();
    match l {
        0 if r == 0.0 => Complex64::new(1.0, 0.0),
        0 => closed_form(SphKind::J, 0, z),
        1 if r < 1.0 => j_series(1, z),
        1 => closed_form(SphKind::J, 1, z),
        _ if r < l as f64 => j_series(l, z),
        _ => j_miller(l, z),
    }
}

fn j_series(l: usize, z: Complex64) -> Complex64 {
    let lf = l as f64;
    let mut prefactor = Complex64::new(1.0, 0.0);
    for _ in 0..l {
        prefactor *= z;
    }
    prefactor /= double_factorial(2 * l as i64 + 1);
    let x = -0.5 * z * z;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for s in 1..200 {
        let sf = s as f64;
        term *= x / (sf * (2.0 * lf + 2.0 * sf + 1.0));
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            break;
        }
    }
    prefactor * sum
}

fn j_miller(l: usize, z: Complex64) -> Complex64 {
    let r = z.norm();
    let start = l.max(r.ceil() as usize) + 30 + (6.0 * r.cbrt()).ceil() as usize;
    let mut f_next = Complex64::new(0.0, 0.0);
    let mut f_cur = Complex64::new(1.0, 0.0);
    let mut f_l = Complex64::new(0.0, 0.0);
    for n in (1..=start).rev() {
        let f_prev = (2.0 * n as f64 + 1.0) / z * f_cur - f_next;
        f_next = f_cur;
        f_cur = f_prev;
        if n - 1 == l {
            f_l = f_cur;
        }
        let scale = f_cur.norm();
        if scale > 1e150 {
            f_cur /= scale;
            f_next /= scale;
            f_l /= scale;
        }
    }
    // f_cur = f_0, f_next = f_1
    let j0 = closed_form(SphKind::J, 0, z);
    let j1 = closed_form(SphKind::J, 1, z);
    let norm = if j0.norm() >= j1.norm() {
        j0 / f_cur
    } else {
        j1 / f_next
    };
    f_l * norm
}

fn double_factorial(n: i64) -> f64 {
    let mut acc = 1.0;
    let mut k = n;
    while k > 1 {
        acc *= k as f64;
        k -= 2;
    }
    acc
}
