#![allow(dead_code)]

use gamow_core::{Complex64, RadialSolution};

/// Central 9-point second-derivative weights.
pub const D2_STENCIL: [f64; 9] = [
    -1.0 / 560.0,
    8.0 / 315.0,
    -1.0 / 5.0,
    8.0 / 5.0,
    -205.0 / 72.0,
    8.0 / 5.0,
    -1.0 / 5.0,
    8.0 / 315.0,
    -1.0 / 560.0,
];

pub fn second_derivative(f: impl Fn(f64) -> Complex64, r: f64, h: f64) -> Complex64 {
    D2_STENCIL
        .iter()
        .enumerate()
        .map(|(i, w)| *w * f(r + (i as f64 - 4.0) * h))
        .sum::<Complex64>()
        / (h * h)
}

/// `|-u'' + (W - E) u| / (|u''| + |(W - E) u|)` from values alone.
pub fn schrodinger_residual<S: RadialSolution + ?Sized>(s: &S, r: f64, h: f64) -> f64 {
    let u = |x: f64| s.eval(x).unwrap().0;
    let d2 = second_derivative(u, r, h);
    let rest = (s.potential_at(r) - s.energy()) * u(r);
    (rest - d2).norm() / (d2.norm() + rest.norm())
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
