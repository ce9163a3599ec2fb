//! Closed-form deformed spectra and wavefunctions for the two analytically
//! solvable systems: the 3-D isotropic harmonic oscillator and the hydrogen
//! atom.
//!
//! The angular parts are never materialized: the perturbation is diagonal in
//! (ℓ, m), so everything here is radial with measure r² dr.

mod hydrogen;
mod oscillator;

pub use hydrogen::HydrogenSystem;
pub use oscillator::OscillatorSystem;

use crate::error::{Error, Result};

/// Which quantum-number convention `n` follows.
///
/// The oscillator counts radial nodes (`n ≥ 0`); hydrogen uses the principal
/// quantum number (`n ≥ 1`, `ℓ ≤ n-1`, radial nodes = n-ℓ-1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    RadialN,
    PrincipalN,
}

/// An (n, ℓ, m) level label with its convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    n: u32,
    l: u32,
    m: i32,
    convention: Convention,
}

impl QuantumNumbers {
    /// Radial-`n` label (oscillator convention), m = 0.
    pub fn radial(n: u32, l: u32) -> Self {
        Self {
            n,
            l,
            m: 0,
            convention: Convention::RadialN,
        }
    }

    /// Principal-`n` label (hydrogen convention), m = 0. Requires n ≥ 1 and
    /// ℓ ≤ n-1.
    pub fn principal(n: u32, l: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Usage(
                "principal quantum number must be >= 1".into(),
            ));
        }
        if l >= n {
            return Err(Error::Usage(format!(
                "angular momentum l={l} must satisfy l <= n-1 for principal n={n}"
            )));
        }
        Ok(Self {
            n,
            l,
            m: 0,
            convention: Convention::PrincipalN,
        })
    }

    /// Same label with an explicit azimuthal quantum number, |m| ≤ ℓ.
    pub fn with_m(self, m: i32) -> Result<Self> {
        if m.unsigned_abs() > self.l {
            return Err(Error::Usage(format!(
                "|m|={} exceeds l={}",
                m.unsigned_abs(),
                self.l
            )));
        }
        Ok(Self { m, ..self })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// 2ℓ+1, the residual degeneracy of every level.
    pub fn multiplicity(&self) -> u32 {
        2 * self.l + 1
    }
}

/// Deformation strength. The two parameters of the commutator are locked to
/// `β' = 2β`, the choice that keeps position operators commuting, so a single
/// number characterizes the algebra. The minimal observable length is
/// `Δx₀ = √(5β)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationParams {
    beta_inv_ev2: f64,
}

impl DeformationParams {
    /// From β in eV⁻².
    pub fn from_beta(beta_inv_ev2: f64) -> Result<Self> {
        if !beta_inv_ev2.is_finite() || beta_inv_ev2 < 0.0 {
            return Err(Error::Domain(format!(
                "deformation beta must be >= 0 eV^-2, got {beta_inv_ev2}"
            )));
        }
        Ok(Self { beta_inv_ev2 })
    }

    /// From the minimal length Δx₀ in natural units (eV⁻¹); β = Δx₀²/5.
    pub fn from_min_length(dx0_inv_ev: f64) -> Result<Self> {
        if !dx0_inv_ev.is_finite() || dx0_inv_ev < 0.0 {
            return Err(Error::Domain(format!(
                "minimal length must be >= 0 eV^-1, got {dx0_inv_ev}"
            )));
        }
        Ok(Self {
            beta_inv_ev2: dx0_inv_ev * dx0_inv_ev / 5.0,
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta_inv_ev2
    }

    /// β' = 2β.
    pub fn beta_prime(&self) -> f64 {
        2.0 * self.beta_inv_ev2
    }

    /// Δx₀ = √(5β), eV⁻¹.
    pub fn min_length(&self) -> f64 {
        (5.0 * self.beta_inv_ev2).sqrt()
    }
}

/// One (n, ℓ) level with its unperturbed energy and first-order shift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrectedLevel {
    pub n: u32,
    pub l: u32,
    /// Unperturbed energy, eV.
    pub e0_ev: f64,
    /// First-order shift, eV; non-negative for β ≥ 0.
    pub shift_ev: f64,
    /// 2ℓ+1.
    pub multiplicity: u32,
}

impl CorrectedLevel {
    /// E⁰ + ΔE.
    pub fn total_ev(&self) -> f64 {
        self.e0_ev + self.shift_ev
    }
}
