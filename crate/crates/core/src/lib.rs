//! Bound states, scattering amplitudes, Gamow-Siegert resonance states and
//! complex Darboux deformations for radial short-range potentials, with the
//! radial square well as the built-in model.

// `!(x > 0.0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod darboux;
pub mod error;
pub mod potential;
pub mod radial;
pub mod resonance;
pub mod scattering;
pub mod specfun;

pub use darboux::{
    argand_export, classify_asymptotics, darboux_potential, superpotential, transform_solution,
    ArgandPoint, Asymptotics, Classification, DarbouxPotential, Transformed,
};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use potential::{ComplexPoint, PotentialSpec};
pub use radial::{FunctionLabel, Piece, PieceMeta, RadialFunction, RadialGrid, RadialSolution};
pub use resonance::{
    analytic_resonance, gamow_function, outgoing_residual, real_q_levels, refine_pole,
    resonance_indices, seed_wavenumber, GamowFunction, GamowMode, MParity, PoleRefinement,
    ResonanceIndices, ResonanceRecord,
};
pub use scattering::{
    bound_states, phase_shift, s_matrix, wavefunction, BoundSolution, BoundState, ScatteringData,
    ScatteringSolution,
};
pub use specfun::{AngularMomentum, BasisValue, SphKind};
