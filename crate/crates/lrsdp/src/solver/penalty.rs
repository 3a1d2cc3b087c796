//! Dynamic penalty scheduling. A stationary point of the penalized problem
//! collapses to a single factor only when the penalty exceeds a quarter of
//! the smoothness/convexity gap, so every emitted value must clear that
//! threshold with margin.

use crate::error::{Error, Result};
use crate::linalg::{eigen_extremes, DenseFactor, DenseSymmetric};
use crate::problem::BiconvexQuadraticProblem;

/// How the strong-convexity constant (and with it the exact smoothness
/// constant) is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaMode {
    /// sigma = 0. The block Hessians are rank-deficient whenever the number
    /// of constraints is below n*r, so zero is the honest default and always
    /// valid in the bound.
    Zero,
    /// Both smoothness and convexity constants from a dense eigensolve of the
    /// explicitly assembled block Hessian. Only allowed for n*r <= 256.
    ExactSmallScale,
}

/// Limit for the explicit-Hessian path.
pub const EXACT_SIGMA_MAX_DIM: usize = 256;

/// Parameters of the dynamic schedule.
#[derive(Debug, Clone, Copy)]
pub struct PenaltyParams {
    /// Multiplier c > 1 applied to the bound; keeps the inequality strict.
    pub multiplier: f64,
    /// Floor for the emitted penalty.
    pub gamma_min: f64,
    pub sigma_mode: SigmaMode,
}

impl Default for PenaltyParams {
    fn default() -> Self {
        Self { multiplier: 1.05, gamma_min: 1e-8, sigma_mode: SigmaMode::Zero }
    }
}

/// Penalty configuration for a solve: the dynamic schedule, or a fixed value
/// for diagnostics (a fixed 0 turns the coupling off entirely).
#[derive(Debug, Clone, Copy)]
pub enum PenaltyConfig {
    Dynamic(PenaltyParams),
    Fixed(f64),
}

impl Default for PenaltyConfig {
    fn default() -> Self {
        PenaltyConfig::Dynamic(PenaltyParams::default())
    }
}

/// max(c/4 * (L - sigma), gamma_min); strictly exceeds (L - sigma)/4 whenever
/// the gap is positive and the multiplier is above one.
pub fn estimate_gamma(l_est: f64, sigma_est: f64, params: &PenaltyParams) -> Result<f64> {
    if l_est < sigma_est {
        return Err(Error::SmoothnessBelowConvexity { l: l_est, sigma: sigma_est });
    }
    Ok((params.multiplier * 0.25 * (l_est - sigma_est)).max(params.gamma_min))
}

/// Stateful schedule: applies `estimate_gamma` per half-step and never lets
/// the emitted value decrease across a run, so the penalty cannot oscillate.
#[derive(Debug, Clone)]
pub struct PenaltySchedule {
    params: PenaltyParams,
    current: f64,
}

impl PenaltySchedule {
    pub fn new(params: PenaltyParams) -> Self {
        Self { params, current: 0.0 }
    }

    pub fn current(&self) -> f64 {
        self.current
    }

    pub fn params(&self) -> &PenaltyParams {
        &self.params
    }

    pub fn advance(&mut self, l_est: f64, sigma_est: f64) -> Result<f64> {
        let gamma = estimate_gamma(l_est, sigma_est, &self.params)?.max(self.current);
        self.current = gamma;
        Ok(gamma)
    }
}

/// Block-Hessian smoothness/convexity estimates for one half-step.
pub struct HessianEstimates {
    pub l: f64,
    pub sigma: f64,
}

/// Estimates for the X block at fixed `y`.
pub fn hessian_estimates_x<P: BiconvexQuadraticProblem + ?Sized>(
    problem: &P,
    y: &DenseFactor,
    mode: SigmaMode,
) -> Result<HessianEstimates> {
    match mode {
        SigmaMode::Zero => Ok(HessianEstimates { l: problem.lipschitz_x(y), sigma: 0.0 }),
        SigmaMode::ExactSmallScale => {
            let h = assemble_hessian(|d| problem.quad_form_x(d, y), problem.dims())?;
            let (lo, hi) = eigen_extremes(&h)?;
            Ok(HessianEstimates { l: hi, sigma: lo.max(0.0) })
        }
    }
}

/// Estimates for the Y block at fixed `x`.
pub fn hessian_estimates_y<P: BiconvexQuadraticProblem + ?Sized>(
    problem: &P,
    x: &DenseFactor,
    mode: SigmaMode,
) -> Result<HessianEstimates> {
    match mode {
        SigmaMode::Zero => Ok(HessianEstimates { l: problem.lipschitz_y(x), sigma: 0.0 }),
        SigmaMode::ExactSmallScale => {
            let h = assemble_hessian(|d| problem.quad_form_y(x, d), problem.dims())?;
            let (lo, hi) = eigen_extremes(&h)?;
            Ok(HessianEstimates { l: hi, sigma: lo.max(0.0) })
        }
    }
}

/// Assembles the block Hessian entrywise by polarizing the quadratic form on
/// basis directions. The index of entry (i, a) of a factor is a*n + i
/// (column-major), matching the usual vec(.) convention.
fn assemble_hessian<F: Fn(&DenseFactor) -> f64>(
    quad: F,
    (n, r): (usize, usize),
) -> Result<DenseSymmetric> {
    let dim = n * r;
    if dim > EXACT_SIGMA_MAX_DIM {
        return Err(Error::InvalidParam(format!(
            "exact sigma estimation needs n*r <= {EXACT_SIGMA_MAX_DIM}, got {dim}"
        )));
    }
    let basis = |k: usize| {
        let mut e = DenseFactor::zeros(n, r);
        e.set(k % n, k / n, 1.0);
        e
    };
    let mut h = DenseSymmetric::zeros(dim);
    let mut diag = vec![0.0; dim];
    for k in 0..dim {
        diag[k] = quad(&basis(k));
        h.set_sym(k, k, diag[k]);
    }
    for a in 0..dim {
        let ea = basis(a);
        for b in (a + 1)..dim {
            let sum = ea.add(&basis(b)).expect("shapes match");
            // H_ab = (q(e_a + e_b) - q(e_a) - q(e_b)) / 2
            h.set_sym(a, b, 0.5 * (quad(&sum) - diag[a] - diag[b]));
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gamma_formula_matches_hand_arithmetic() {
        let params = PenaltyParams { multiplier: 1.05, gamma_min: 1e-6, sigma_mode: SigmaMode::Zero };
        assert_relative_eq!(estimate_gamma(4.0, 0.0, &params).unwrap(), 1.05, max_relative = 1e-15);
    }

    #[test]
    fn zero_gap_falls_to_floor() {
        let params = PenaltyParams { multiplier: 1.05, gamma_min: 1e-6, sigma_mode: SigmaMode::Zero };
        assert_eq!(estimate_gamma(3.0, 3.0, &params).unwrap(), 1e-6);
    }

    #[test]
    fn inverted_gap_errors() {
        let params = PenaltyParams::default();
        assert!(matches!(
            estimate_gamma(1.0, 2.0, &params),
            Err(Error::SmoothnessBelowConvexity { .. })
        ));
    }

    #[test]
    fn emitted_gamma_strictly_exceeds_bound_when_gap_positive() {
        let params = PenaltyParams::default();
        for l in [0.5, 1.0, 10.0, 1e4] {
            let g = estimate_gamma(l, 0.1, &params).unwrap();
            assert!(g > 0.25 * (l - 0.1));
        }
    }

    #[test]
    fn schedule_is_monotone() {
        let mut sched = PenaltySchedule::new(PenaltyParams::default());
        let g1 = sched.advance(8.0, 0.0).unwrap();
        let g2 = sched.advance(2.0, 0.0).unwrap();
        assert_eq!(g2, g1, "schedule must not decrease when the estimate drops");
        let g3 = sched.advance(20.0, 0.0).unwrap();
        assert!(g3 > g2);
    }
}
