//! Scattering amplitude and bound states against direct integration of the
//! radial equation and against frozen high-precision pole locations.

mod common;

use common::c;
use gamow_core::specfun::{exterior_basis_with_derivative, wronskian};
use gamow_core::{
    bound_states, refine_pole, s_matrix, scattering, AngularMomentum, Complex64, PotentialSpec,
};

/// Regular solution of `u'' = (V_l(r) - k^2) u` by classical RK4, started
/// from the small-r series and stepped across `r = a` on a grid point.
fn integrate(spec: &PotentialSpec, k: f64, r_end: f64, h: f64) -> (f64, f64) {
    let l = spec.ell().value() as f64;
    let r0: f64 = 0.01;
    let q2 = spec.v0() + k * k;
    // u = r^{l+1} sum_s (-q^2 r^2 / 2)^s / (s! (2l+3)(2l+5)...(2l+2s+1))
    let (mut u, mut du) = (0.0, 0.0);
    let mut term = 1.0;
    for s in 0..8 {
        let p = l + 1.0 + 2.0 * s as f64;
        u += term * r0.powf(p);
        du += term * p * r0.powf(p - 1.0);
        let sf = s as f64 + 1.0;
        term *= -q2 / (2.0 * sf * (2.0 * l + 2.0 * sf + 1.0));
    }
    let f = |r: f64, u: f64| (spec.effective_potential(r) - k * k) * u;
    let mut r = r0;
    let mut y = (u, du);
    let step = |r: f64, y: (f64, f64), h: f64| {
        let k1 = (y.1, f(r, y.0));
        let k2 = (y.1 + 0.5 * h * k1.1, f(r + 0.5 * h, y.0 + 0.5 * h * k1.0));
        let k3 = (y.1 + 0.5 * h * k2.1, f(r + 0.5 * h, y.0 + 0.5 * h * k2.0));
        let k4 = (y.1 + h * k3.1, f(r + h, y.0 + h * k3.0));
        (
            y.0 + h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
            y.1 + h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
        )
    };
    // the potential jumps at a; land on it exactly, evaluating just inside
    let n_in = ((spec.a() - r0) / h).round() as usize;
    let h_in = (spec.a() - r0) / n_in as f64;
    let inside = |x: f64| x.min(spec.a() * (1.0 - 1e-15));
    for _ in 0..n_in {
        let fi = |x: f64, u: f64| (spec.effective_potential(inside(x)) - k * k) * u;
        let k1 = (y.1, fi(r, y.0));
        let k2 = (
            y.1 + 0.5 * h_in * k1.1,
            fi(r + 0.5 * h_in, y.0 + 0.5 * h_in * k1.0),
        );
        let k3 = (
            y.1 + 0.5 * h_in * k2.1,
            fi(r + 0.5 * h_in, y.0 + 0.5 * h_in * k2.0),
        );
        let k4 = (y.1 + h_in * k3.1, fi(r + h_in, y.0 + h_in * k3.0));
        y = (
            y.0 + h_in / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
            y.1 + h_in / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
        );
        r += h_in;
    }
    r = spec.a() * (1.0 + 1e-15);
    let n_out = ((r_end - r) / h).round() as usize;
    let h_out = (r_end - r) / n_out as f64;
    for _ in 0..n_out {
        y = step(r, y, h_out);
        r += h_out;
    }
    y
}

fn ode_s_matrix(spec: &PotentialSpec, k: f64) -> Complex64 {
    let r_end = spec.a() + 1.5;
    let (u, du) = integrate(spec, k, r_end, 2e-4);
    let (u, du) = (c(u, 0.0), c(du, 0.0));
    let ((m, p), (dm, dp)) = exterior_basis_with_derivative(spec.ell(), c(k, 0.0), r_end).unwrap();
    // u = const (u_minus - S u_plus)
    wronskian(u, du, m, dm) / wronskian(u, du, p, dp)
}

#[test]
fn amplitude_matches_direct_integration() {
    for l in 0..=2 {
        let spec = PotentialSpec::new(30.0, 2.0, AngularMomentum::new(l).unwrap()).unwrap();
        for k in [0.4, 1.3, 3.7] {
            let want = ode_s_matrix(&spec, k);
            let got = s_matrix(&spec, c(k, 0.0)).unwrap().s_value;
            assert!((got - want).norm() < 1e-8, "l={l} k={k}: {got} vs {want}");
        }
    }
}

#[test]
fn phase_shift_of_deep_well_matches_integration() {
    let spec = PotentialSpec::s_wave(100.0, 10.0).unwrap();
    for k in [0.5, 2.0] {
        let want = ode_s_matrix(&spec, k);
        let sd = s_matrix(&spec, c(k, 0.0)).unwrap();
        assert!((sd.s_value - want).norm() < 1e-6, "k={k}");
        let delta = sd.delta.unwrap();
        assert!((delta - 0.5 * want.arg()).abs() < 1e-6);
    }
}

/// Newton-refined poles of the two tabulated wells, from a 50-digit
/// evaluation of `ik sin(qa) - q cos(qa) = 0`.
const POLES: [(f64, [(f64, f64); 4]); 2] = [
    (
        100.0,
        [
            (2.0584654918770453, -0.10138918584375094),
            (3.2788120128442113, -0.10343859150857),
            (4.178677140547615, -0.10545077062329043),
            (4.93654564315446, -0.10742699204035007),
        ],
    ),
    (
        1000.0,
        [
            (4.096480538755696, -0.10055565809540877),
            (6.075767369638189, -0.10121271468628901),
            (7.566117831557309, -0.1018659045845787),
            (8.818997818206952, -0.1025152709226956),
        ],
    ),
];

#[test]
fn refined_poles_match_reference() {
    for (v0, poles) in POLES {
        let spec = PotentialSpec::s_wave(v0, 10.0).unwrap();
        let idx = gamow_core::resonance_indices(&spec).unwrap();
        for (m, (re, im)) in idx.allowed_m(7).zip(poles) {
            let rec = gamow_core::analytic_resonance(&spec, m).unwrap();
            let p = refine_pole(&spec, rec.k_seed).unwrap();
            assert!((p.k - c(re, im)).norm() < 1e-12, "v0={v0} m={m}: {}", p.k);
            // the interior parameter obeys q^2 - k^2 = v0
            let q = spec.point(p.k).q;
            assert!(((q * q - p.k * p.k) - v0).norm() / v0 < 1e-12);
        }
    }
}

#[test]
fn one_newton_step_gains_an_order_of_magnitude() {
    for (v0, _) in POLES {
        let spec = PotentialSpec::s_wave(v0, 10.0).unwrap();
        let idx = gamow_core::resonance_indices(&spec).unwrap();
        for m in idx.allowed_m(7) {
            let k0 = gamow_core::analytic_resonance(&spec, m).unwrap().k_seed;
            let (f, df) = scattering::reduced_denominator(&spec, k0);
            let k1 = k0 - f / df;
            let d0 = scattering::jost_denominator(&spec, k0).norm();
            let d1 = scattering::jost_denominator(&spec, k1).norm();
            assert!(d1 * 10.0 <= d0, "v0={v0} m={m}: {d0} -> {d1}");
        }
    }
}

#[test]
fn quartet_closure_at_refined_poles() {
    for (v0, poles) in POLES {
        let spec = PotentialSpec::s_wave(v0, 10.0).unwrap();
        for (re, im) in poles {
            let k = refine_pole(&spec, c(re, im)).unwrap().k;
            assert!(scattering::jost_denominator(&spec, -k.conj()).norm() < 1e-10);
            assert!(s_matrix(&spec, k.conj()).unwrap().s_value.norm() < 1e-6);
            assert!(s_matrix(&spec, -k).unwrap().s_value.norm() < 1e-6);
            // S(k) itself is huge
            assert!(scattering::inverse_s_wave_amplitude(&spec, k).norm() < 1e-8);
        }
    }
}

#[test]
fn newton_on_imaginary_axis_reproduces_bisection() {
    let spec = PotentialSpec::s_wave(100.0, 10.0).unwrap();
    let states = bound_states(&spec).unwrap();
    assert_eq!(states.len(), 32);
    for s in &states {
        let p = refine_pole(&spec, c(0.0, s.kappa)).unwrap();
        assert!(
            (p.k - c(0.0, s.kappa)).norm() < 1e-10,
            "kappa={}: {}",
            s.kappa,
            p.k
        );
        assert!(scattering::inverse_s_wave_amplitude(&spec, c(0.0, s.kappa)).norm() < 1e-6);
    }
}
