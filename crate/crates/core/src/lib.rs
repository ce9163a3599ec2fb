//! Bound-state spectroscopy for a minimal-length deformation of quantum
//! mechanics.
//!
//! The deformed commutator `[X_i, P_j] = i(δ_ij + β δ_ij P² + 2β P_i P_j)`
//! adds a `(β/m) p⁴` term to the Schrödinger equation. To first order in β
//! every energy level of a central potential is shifted by the eigenvalues of
//! a small matrix built from `⟨V⟩` and `⟨V²⟩` in the unperturbed eigenbasis,
//! and the shifts split otherwise degenerate levels. This crate provides:
//!
//! * closed-form shifted spectra for the 3-D harmonic oscillator and the
//!   hydrogen atom ([`spectra`]),
//! * the generic perturbation machinery (degenerate blocks, diagonal shifts,
//!   power-law specialization, explicit shift integrals) ([`perturbation`]),
//! * an independent Numerov shooting solver for arbitrary central potentials
//!   ([`solver`]),
//! * the special-function substrate: generalized Laguerre polynomials,
//!   log-gamma, Gauss–Laguerre quadrature ([`specfun`]),
//! * phenomenological upper bounds on the minimal length `Δx₀ = √(5β)`
//!   ([`bounds`]),
//! * a runtime self-check suite mirroring the crate's numerical invariants
//!   ([`validation`]).
//!
//! Everything internal works in natural units (ħ = c = 1) with eV as the one
//! energy scale; lengths are eV⁻¹. Conversions to laboratory units (fm, kHz)
//! live in [`constants`] and belong at the interface boundary.

pub mod bounds;
pub mod constants;
pub mod eigen;
pub mod error;
pub mod perturbation;
pub mod solver;
pub mod specfun;
pub mod spectra;
pub mod validation;

pub use error::{Error, Result};
pub use spectra::{
    Convention, CorrectedLevel, DeformationParams, HydrogenSystem, OscillatorSystem,
    QuantumNumbers,
};
pub use solver::{CentralPotential, RadialGrid, RadialState, SolverOptions, Spacing};
