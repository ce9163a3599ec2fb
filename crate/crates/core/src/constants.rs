//! Physical constants and unit conversions.
//!
//! The crate computes in natural units (ħ = c = 1) with energies in eV and
//! lengths in eV⁻¹. Laboratory units (fm for lengths, kHz for transition
//! frequencies) appear only at interface boundaries, through the conversions
//! below.

use crate::error::{Error, Result};

/// Pinned constants (CODATA recommended values).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Electron mass, eV.
    pub electron_mass_ev: f64,
    /// Fine-structure constant, dimensionless.
    pub fine_structure: f64,
    /// ħc, MeV·fm.
    pub hbar_c_mev_fm: f64,
    /// Planck constant, eV·s.
    pub planck_h_ev_s: f64,
}

/// The single constant set used everywhere in the crate.
pub const CONSTANTS: PhysicalConstants = PhysicalConstants {
    electron_mass_ev: 510_998.95,
    fine_structure: 1.0 / 137.035_999,
    hbar_c_mev_fm: 197.326_980_4,
    planck_h_ev_s: 4.135_667_696e-15,
};

/// ħc in eV·fm; the fm ↔ eV⁻¹ conversion factor.
pub const HBAR_C_EV_FM: f64 = CONSTANTS.hbar_c_mev_fm * 1.0e6;

/// Convert a length in fm to natural units (eV⁻¹).
pub fn length_to_natural(x_fm: f64) -> Result<f64> {
    if !x_fm.is_finite() || x_fm < 0.0 {
        return Err(Error::Domain(format!("length must be >= 0 fm, got {x_fm}")));
    }
    Ok(x_fm / HBAR_C_EV_FM)
}

/// Convert a length in natural units (eV⁻¹) back to fm.
pub fn length_from_natural(x_inv_ev: f64) -> Result<f64> {
    if !x_inv_ev.is_finite() || x_inv_ev < 0.0 {
        return Err(Error::Domain(format!(
            "length must be >= 0 eV^-1, got {x_inv_ev}"
        )));
    }
    Ok(x_inv_ev * HBAR_C_EV_FM)
}

/// Convert a frequency in kHz to an energy in eV (E = h·f).
pub fn frequency_to_energy(f_khz: f64) -> Result<f64> {
    if !f_khz.is_finite() || f_khz < 0.0 {
        return Err(Error::Domain(format!(
            "frequency must be >= 0 kHz, got {f_khz}"
        )));
    }
    Ok(CONSTANTS.planck_h_ev_s * f_khz * 1.0e3)
}

/// Convert an energy in eV to a frequency in kHz (f = E/h).
pub fn energy_to_frequency(e_ev: f64) -> Result<f64> {
    if !e_ev.is_finite() || e_ev < 0.0 {
        return Err(Error::Domain(format!("energy must be >= 0 eV, got {e_ev}")));
    }
    Ok(e_ev / (CONSTANTS.planck_h_ev_s * 1.0e3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn constants_are_positive_and_sane() {
        assert!(CONSTANTS.electron_mass_ev > 0.0);
        assert!(CONSTANTS.fine_structure > 0.0 && CONSTANTS.fine_structure < 1.0);
        assert!(CONSTANTS.hbar_c_mev_fm > 0.0);
    }

    #[test]
    fn zero_length_maps_to_zero() {
        assert_eq!(length_to_natural(0.0).unwrap(), 0.0);
    }

    #[test]
    fn hbar_c_fm_maps_to_inverse_mev() {
        // By definition of ħc, 197.3269804 fm is exactly 1 MeV⁻¹.
        let x = length_to_natural(197.326_980_4).unwrap();
        assert_relative_eq!(x, 1.0e-6, max_relative = 1e-15);
    }

    #[test]
    fn hundredth_fm_in_natural_units() {
        // Oracle: direct division by ħc in eV·fm.
        let expect = 0.01 / 197.326_980_4e6;
        assert_relative_eq!(length_to_natural(0.01).unwrap(), expect, max_relative = 1e-15);
        assert_relative_eq!(expect, 5.0677307e-11, max_relative = 1e-7);
    }

    #[test]
    fn zero_frequency_maps_to_zero() {
        assert_eq!(frequency_to_energy(0.0).unwrap(), 0.0);
    }

    #[test]
    fn one_khz_in_ev() {
        // Oracle: h = 4.135667696e-15 eV·s times 10³ Hz.
        let expect = 4.135_667_696e-15 * 1.0e3;
        assert_relative_eq!(frequency_to_energy(1.0).unwrap(), expect, max_relative = 1e-15);
        assert_relative_eq!(expect, 4.1357e-12, max_relative = 1e-4);
    }

    #[test]
    fn picoelectronvolt_precision_in_khz() {
        // The 10⁻¹² eV precision figure corresponds to about 0.242 kHz.
        let f = energy_to_frequency(1.0e-12).unwrap();
        assert_relative_eq!(f, 0.241_798_924, max_relative = 1e-8);
        // Inverse of frequency_to_energy.
        assert_relative_eq!(
            frequency_to_energy(f).unwrap(),
            1.0e-12,
            max_relative = 1e-15
        );
    }

    #[test]
    fn negative_inputs_are_domain_errors() {
        assert!(length_to_natural(-1.0).is_err());
        assert!(length_from_natural(-1.0).is_err());
        assert!(frequency_to_energy(-1.0).is_err());
        assert!(energy_to_frequency(-1.0).is_err());
    }

    #[test]
    fn length_round_trip() {
        for &x in &[1e-3, 0.01, 1.0, 197.3269804, 4.2e7] {
            let back = length_from_natural(length_to_natural(x).unwrap()).unwrap();
            assert_relative_eq!(back, x, max_relative = 1e-15);
        }
    }
}
