//! Generalized Gauss–Laguerre quadrature.
//!
//! A rule of N points integrates `∫₀^∞ x^α e^{-x} f(x) dx` exactly for
//! polynomial `f` up to degree 2N-1. Nodes and weights come from the
//! Golub–Welsch construction: eigenvalues of the symmetric tridiagonal Jacobi
//! matrix of the weight (diagonal `2i+α+1`, off-diagonal `√(i(i+α))`), with
//! the weight of node j equal to `Γ(α+1)` times the squared first component
//! of eigenvector j.

use super::ln_gamma;
use crate::eigen::tridiagonal_eigen_first_row;
use crate::error::{Error, Result};

/// Hard cap on the point count; beyond this, node clustering at the origin
/// starts to cost digits.
pub const MAX_POINTS: usize = 256;

/// A fixed Gauss–Laguerre rule for the weight x^α e^{-x} on [0, ∞).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    alpha: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Build the N-point rule for weight exponent `alpha > -1`.
    pub fn gauss_laguerre(alpha: f64, points: usize) -> Result<Self> {
        if !alpha.is_finite() || alpha <= -1.0 {
            return Err(Error::Domain(format!(
                "quadrature weight exponent must be > -1, got {alpha}"
            )));
        }
        if points < 1 || points > MAX_POINTS {
            return Err(Error::Domain(format!(
                "point count must be in 1..={MAX_POINTS}, got {points}"
            )));
        }

        let diag: Vec<f64> = (0..points)
            .map(|i| 2.0 * i as f64 + alpha + 1.0)
            .collect();
        let offdiag: Vec<f64> = (1..points)
            .map(|i| {
                let i = i as f64;
                (i * (i + alpha)).sqrt()
            })
            .collect();

        let pairs = tridiagonal_eigen_first_row(&diag, &offdiag)?;
        let mu0 = ln_gamma(alpha + 1.0)?.exp();

        let nodes: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let weights: Vec<f64> = pairs.iter().map(|p| mu0 * p.1 * p.1).collect();

        // Contract checks: strictly increasing positive nodes, positive weights.
        for w in &nodes {
            if !(*w > 0.0) {
                return Err(Error::Convergence(format!(
                    "Golub-Welsch produced a non-positive node {w:.6e} (alpha={alpha}, N={points})"
                )));
            }
        }
        for pair in nodes.windows(2) {
            if !(pair[1] > pair[0]) {
                return Err(Error::Convergence(format!(
                    "Golub-Welsch nodes not strictly increasing (alpha={alpha}, N={points})"
                )));
            }
        }
        for w in &weights {
            if !(*w > 0.0) {
                return Err(Error::Convergence(format!(
                    "Golub-Welsch produced a non-positive weight {w:.6e} (alpha={alpha}, N={points})"
                )));
            }
        }

        Ok(Self {
            alpha,
            nodes,
            weights,
        })
    }

    /// Integrate `x^α e^{-x} f(x)` over [0, ∞).
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::laguerre_nax;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    #[test]
    fn one_point_rule_alpha_zero() {
        // ∫ e^{-x} f(x) dx ≈ f(1) with unit weight: exact through degree 1.
        let rule = QuadratureRule::gauss_laguerre(0.0, 1).unwrap();
        assert_eq!(rule.len(), 1);
        assert_relative_eq!(rule.nodes()[0], 1.0, max_relative = 1e-14);
        assert_relative_eq!(rule.weights()[0], 1.0, max_relative = 1e-14);
    }

    #[test]
    fn classical_three_point_rule() {
        // Classical values for the 3-point rule with alpha = 0.
        let rule = QuadratureRule::gauss_laguerre(0.0, 3).unwrap();
        let x_ref = [0.415_774_556_783_479_1, 2.294_280_360_279_042, 6.289_945_082_937_479_4];
        let w_ref = [0.711_093_009_929_173, 0.278_517_733_569_240_87, 0.010_389_256_501_586_135];
        for i in 0..3 {
            assert_abs_diff_eq!(rule.nodes()[i], x_ref[i], epsilon = 1e-13);
            assert_abs_diff_eq!(rule.weights()[i], w_ref[i], epsilon = 1e-13);
        }
    }

    #[test]
    fn classical_two_point_rule_alpha_five() {
        let rule = QuadratureRule::gauss_laguerre(5.0, 2).unwrap();
        let x_ref = [4.354_248_688_935_409, 9.645_751_311_064_59];
        let w_ref = [82.677_868_380_553_63, 37.322_131_619_446_37];
        for i in 0..2 {
            assert_abs_diff_eq!(rule.nodes()[i], x_ref[i], epsilon = 1e-11);
            assert_abs_diff_eq!(rule.weights()[i], w_ref[i], epsilon = 1e-11);
        }
    }

    #[test]
    fn half_integer_weight_total_mass() {
        // ∫ x^{1/2} e^{-x} dx = Γ(3/2) = √π/2.
        let rule = QuadratureRule::gauss_laguerre(0.5, 8).unwrap();
        assert_relative_eq!(rule.integrate(|_| 1.0), PI.sqrt() / 2.0, max_relative = 1e-13);
    }

    #[test]
    fn monomial_exactness_through_degree_2n_minus_1() {
        // Oracle: Γ(α+k+1) by the recurrence Γ(z+1) = zΓ(z) from Γ(α+1).
        for &alpha in &[0.0, 0.5, 2.5] {
            for &n in &[1usize, 4, 16, 64] {
                let rule = QuadratureRule::gauss_laguerre(alpha, n).unwrap();
                let mut moment = crate::specfun::ln_gamma(alpha + 1.0).unwrap().exp();
                for k in 0..(2 * n) {
                    // moment = Γ(α+k+1) at loop entry.
                    let got = rule.integrate(|x| x.powi(k as i32));
                    assert_relative_eq!(got, moment, max_relative = 1e-12);
                    moment *= alpha + k as f64 + 1.0;
                }
            }
        }
    }

    #[test]
    fn laguerre_orthonormality_integral() {
        // ∫ e^{-x} x^α L_n^α L_m^α dx = Γ(α+n+1)/n! · δ_nm for α = 1/2, n,m <= 6.
        let alpha = 0.5;
        let rule = QuadratureRule::gauss_laguerre(alpha, 32).unwrap();
        for n in 0..=6u32 {
            for m in 0..=6u32 {
                let got = rule.integrate(|x| {
                    laguerre_nax(n, alpha, x).unwrap() * laguerre_nax(m, alpha, x).unwrap()
                });
                let norm = (crate::specfun::ln_gamma(alpha + f64::from(n) + 1.0).unwrap()
                    - crate::specfun::ln_gamma(f64::from(n) + 1.0).unwrap())
                .exp();
                if n == m {
                    assert_relative_eq!(got, norm, max_relative = 1e-11);
                } else {
                    assert!(
                        (got / norm).abs() <= 1e-11,
                        "off-diagonal ({n},{m}) = {got:.3e}"
                    );
                }
            }
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(QuadratureRule::gauss_laguerre(-1.0, 4).is_err());
        assert!(QuadratureRule::gauss_laguerre(0.0, 0).is_err());
        assert!(QuadratureRule::gauss_laguerre(0.0, MAX_POINTS + 1).is_err());
        assert!(QuadratureRule::gauss_laguerre(0.0, MAX_POINTS).is_ok());
    }
}
