//! Eigenvalue sequence models and the heat trace θ_A(t) = Σ_n e^{-t a_n}
//! with certified tails.

use super::{Bounded, RegProdError};

/// Small-time asymptotic data θ_A(t) ~ Σ_k c_k t^{α_k}, exponents strictly
/// increasing. Required to continue the zeta function of a polynomial
/// sequence towards s = 0; the shifted-linear variant computes its own.
#[derive(Debug, Clone, PartialEq)]
pub struct HeatTraceExpansion {
    terms: Vec<(f64, f64)>, // (coefficient c_k, exponent alpha_k)
}

impl HeatTraceExpansion {
    pub fn new(terms: Vec<(f64, f64)>) -> Result<Self, RegProdError> {
        for w in terms.windows(2) {
            if !(w[1].1 > w[0].1) {
                return Err(RegProdError::InvalidSequence(format!(
                    "heat expansion exponents must be strictly increasing, got {} then {}",
                    w[0].1, w[1].1
                )));
            }
        }
        Ok(HeatTraceExpansion { terms })
    }

    pub fn terms(&self) -> &[(f64, f64)] {
        &self.terms
    }
}

/// A zeta-admissible eigenvalue sequence.
#[derive(Debug, Clone, PartialEq)]
pub enum EigenSequence {
    /// Finitely many eigenvalues, ascending and strictly positive.
    Finite(Vec<f64>),
    /// a_n = n + κ for n ≥ 0, κ > 0.
    ShiftedLinear { kappa: f64 },
    /// a_n = p(n) for n ≥ offset, p nonconstant with positive leading
    /// coefficient and p(n) > 0 on the range. `expansion` supplies the
    /// small-t heat-trace data when the Mellin continuation is wanted.
    Polynomial {
        /// Ascending coefficients c_0 + c_1 x + …
        coeffs: Vec<f64>,
        offset: u64,
        expansion: Option<HeatTraceExpansion>,
    },
}

pub(super) fn poly_eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

pub(super) fn poly_deriv(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| i as f64 * c)
        .collect()
}

/// Cauchy bound: all real roots of the polynomial lie in |x| < bound.
fn cauchy_root_bound(coeffs: &[f64]) -> f64 {
    let d = coeffs.len().saturating_sub(1);
    if d == 0 {
        return 0.0;
    }
    let lead = coeffs[d].abs();
    1.0 + coeffs[..d].iter().map(|c| c.abs()).fold(0.0, f64::max) / lead
}

impl EigenSequence {
    pub fn finite(mut values: Vec<f64>) -> Result<Self, RegProdError> {
        values.sort_by(f64::total_cmp);
        if values.iter().any(|&a| !(a > 0.0) || !a.is_finite()) {
            return Err(RegProdError::InvalidSequence(
                "finite sequence must consist of strictly positive reals".into(),
            ));
        }
        Ok(EigenSequence::Finite(values))
    }

    pub fn shifted_linear(kappa: f64) -> Result<Self, RegProdError> {
        if !(kappa > 0.0) || !kappa.is_finite() {
            return Err(RegProdError::InvalidSequence(format!(
                "shifted-linear kappa must be positive, got {kappa}"
            )));
        }
        Ok(EigenSequence::ShiftedLinear { kappa })
    }

    pub fn polynomial(coeffs: Vec<f64>, offset: u64) -> Result<Self, RegProdError> {
        Self::polynomial_with_expansion(coeffs, offset, None)
    }

    pub fn polynomial_with_expansion(
        mut coeffs: Vec<f64>,
        offset: u64,
        expansion: Option<HeatTraceExpansion>,
    ) -> Result<Self, RegProdError> {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(RegProdError::InvalidSequence(
                "polynomial must be nonconstant".into(),
            ));
        }
        if !(coeffs[coeffs.len() - 1] > 0.0) {
            return Err(RegProdError::InvalidSequence(
                "polynomial leading coefficient must be positive".into(),
            ));
        }
        let seq = EigenSequence::Polynomial {
            coeffs,
            offset,
            expansion,
        };
        // positivity on the modeled range: explicit check up to the point
        // where the polynomial is provably increasing
        if let EigenSequence::Polynomial { ref coeffs, offset, .. } = seq {
            let start = seq.poly_tail_start();
            let mut n = offset;
            loop {
                if poly_eval(coeffs, n as f64) <= 0.0 {
                    return Err(RegProdError::InvalidSequence(format!(
                        "polynomial is not positive at n = {n}"
                    )));
                }
                if n as f64 >= start {
                    break;
                }
                n += 1;
            }
        }
        Ok(seq)
    }

    /// Smallest modeled eigenvalue.
    pub fn min_eigenvalue(&self) -> f64 {
        match self {
            EigenSequence::Finite(v) => v.first().copied().unwrap_or(f64::INFINITY),
            EigenSequence::ShiftedLinear { kappa } => *kappa,
            EigenSequence::Polynomial { coeffs, offset, .. } => {
                // the minimum over the range is attained no later than the
                // convexity threshold
                let start = self.poly_tail_start();
                let mut min = f64::INFINITY;
                let mut n = *offset;
                loop {
                    min = min.min(poly_eval(coeffs, n as f64));
                    if n as f64 >= start {
                        break;
                    }
                    n += 1;
                }
                min
            }
        }
    }

    /// Index beyond which a polynomial sequence is increasing and convex
    /// (both derived polynomials have positive sign past their Cauchy root
    /// bounds). Meaningless for the other variants.
    pub(super) fn poly_tail_start(&self) -> f64 {
        match self {
            EigenSequence::Polynomial { coeffs, offset, .. } => {
                let d1 = poly_deriv(coeffs);
                let d2 = poly_deriv(&d1);
                let b = cauchy_root_bound(&d1).max(cauchy_root_bound(&d2));
                b.max(*offset as f64).ceil()
            }
            _ => 0.0,
        }
    }
}

/// θ_A(t) = Σ_n e^{-t a_n}, with the infinite tail bounded by integral
/// comparison; the bound actually used is returned alongside the value.
pub fn theta(seq: &EigenSequence, t: f64, tol: f64) -> Result<Bounded, RegProdError> {
    if !(t > 0.0) {
        return Err(RegProdError::NonPositiveT(t));
    }
    if !(tol > 0.0) {
        return Err(RegProdError::NonPositiveTol(tol));
    }
    match seq {
        EigenSequence::Finite(vals) => {
            let value = vals.iter().map(|a| (-t * a).exp()).sum();
            Ok(Bounded { value, bound: 0.0 })
        }
        EigenSequence::ShiftedLinear { kappa } => {
            // Σ_{n>N} e^{-t(n+κ)} = e^{-t(N+1+κ)} / (1 - e^{-t}), exact tail
            let q = (-t).exp();
            let geom = 1.0 / (1.0 - q);
            let mut term = (-t * kappa).exp();
            let mut sum = 0.0;
            loop {
                sum += term;
                term *= q;
                let tail = term * geom;
                if tail < tol || term == 0.0 {
                    return Ok(Bounded { value: sum, bound: tail });
                }
            }
        }
        EigenSequence::Polynomial { coeffs, offset, .. } => {
            let deriv = poly_deriv(coeffs);
            let start = seq.poly_tail_start();
            let mut sum = 0.0;
            let mut n = *offset as f64;
            let cap = 100_000_000.0;
            loop {
                sum += (-t * poly_eval(coeffs, n)).exp();
                if n >= start {
                    // convexity: p(x) ≥ p(n) + p'(n)(x-n) for x ≥ n, so
                    // Σ_{m>n} e^{-t p(m)} ≤ e^{-t p(n)} / (t p'(n))
                    let slope = poly_eval(&deriv, n);
                    let tail = (-t * poly_eval(coeffs, n)).exp() / (t * slope);
                    if tail < tol {
                        return Ok(Bounded { value: sum, bound: tail });
                    }
                }
                n += 1.0;
                if n > cap {
                    return Err(RegProdError::ConfigInsufficient(format!(
                        "theta summation did not certify tolerance {tol} within {cap} terms"
                    )));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_finite_two_terms() {
        let seq = EigenSequence::finite(vec![1.0, 2.0]).unwrap();
        let v = theta(&seq, 1.0, 1e-14).unwrap();
        assert!((v.value - 0.503214724408055).abs() < 1e-14);
        assert_eq!(v.bound, 0.0);
    }

    #[test]
    fn theta_shifted_linear_matches_geometric_closed_form() {
        // oracle: Σ_{n≥0} e^{-t(n+κ)} = e^{-tκ}/(1-e^{-t})
        for (kappa, t) in [(1.0, 1.0), (0.5, 0.25), (3.0, 2.0)] {
            let seq = EigenSequence::shifted_linear(kappa).unwrap();
            let v = theta(&seq, t, 1e-14).unwrap();
            let oracle = (-t * kappa).exp() / (1.0 - (-t).exp());
            assert!(
                (v.value - oracle).abs() <= v.bound + 1e-13,
                "kappa={kappa} t={t}: {} vs {oracle} (bound {})",
                v.value,
                v.bound
            );
        }
        let seq = EigenSequence::shifted_linear(1.0).unwrap();
        let v = theta(&seq, 1.0, 1e-14).unwrap();
        assert!((v.value - 0.5819767068693265).abs() < 1e-13);
    }

    #[test]
    fn theta_polynomial_matches_brute_force() {
        let seq = EigenSequence::polynomial(vec![1.0, 0.0, 1.0], 0).unwrap(); // n^2 + 1
        let v = theta(&seq, 0.3, 1e-13).unwrap();
        let brute: f64 = (0..2000).map(|n| (-0.3 * ((n * n + 1) as f64)).exp()).sum();
        assert!((v.value - brute).abs() <= v.bound + 1e-13);
    }

    #[test]
    fn theta_monotone_decreasing_in_t() {
        let seq = EigenSequence::polynomial(vec![2.0, 1.0], 0).unwrap();
        let mut prev = f64::INFINITY;
        for t in [0.5, 1.0, 2.0, 4.0, 8.0] {
            let v = theta(&seq, t, 1e-12).unwrap().value;
            assert!(v < prev);
            assert!(v <= (-t * 2.0).exp() / (1.0 - (-t).exp()) + 1e-12);
            prev = v;
        }
    }

    #[test]
    fn theta_rejects_bad_arguments() {
        let seq = EigenSequence::finite(vec![1.0]).unwrap();
        assert!(matches!(theta(&seq, 0.0, 1e-10), Err(RegProdError::NonPositiveT(_))));
        assert!(matches!(theta(&seq, 1.0, 0.0), Err(RegProdError::NonPositiveTol(_))));
    }

    #[test]
    fn sequence_constructors_validate() {
        assert!(EigenSequence::finite(vec![1.0, -2.0]).is_err());
        assert!(EigenSequence::finite(vec![0.0, 1.0]).is_err());
        assert!(EigenSequence::shifted_linear(0.0).is_err());
        assert!(EigenSequence::polynomial(vec![5.0], 0).is_err()); // constant
        assert!(EigenSequence::polynomial(vec![0.0, -1.0], 0).is_err()); // negative lead
        assert!(EigenSequence::polynomial(vec![0.0, 1.0], 0).is_err()); // p(0) = 0
        assert!(EigenSequence::polynomial(vec![0.0, 1.0], 1).is_ok()); // p(n) = n, n ≥ 1
        // p(n) = n^2 - 4 is negative at n = 1
        assert!(EigenSequence::polynomial(vec![-4.0, 0.0, 1.0], 1).is_err());
        assert!(EigenSequence::polynomial(vec![-4.0, 0.0, 1.0], 3).is_ok());
    }

    #[test]
    fn expansion_rejects_duplicate_exponents() {
        assert!(HeatTraceExpansion::new(vec![(1.0, -1.0), (0.5, -1.0)]).is_err());
        assert!(HeatTraceExpansion::new(vec![(1.0, -1.0), (0.5, 0.0)]).is_ok());
    }
}
