//! The degenerated-FISTA momentum sequence shared by the alternating solver
//! and the quadratic-factorization baseline.

/// Momentum bookkeeping: t_{k-1}, t_k and the extrapolation weight
/// omega_k = (t_{k-1} - 1) / t_k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumState {
    pub t_prev: f64,
    pub t: f64,
    pub omega: f64,
}

impl MomentumState {
    /// Fresh state with t_0 = 1. The first update then yields omega_1 = 0,
    /// so the first iteration takes a plain gradient step.
    pub fn initial() -> Self {
        Self { t_prev: 1.0, t: 1.0, omega: 0.0 }
    }
}

/// Advances the sequence: t' = (1 + sqrt(1 + 4 t^2)) / 2, omega' = (t - 1) / t'.
pub fn momentum_update(state: MomentumState) -> MomentumState {
    let t_prev = state.t;
    let t = 0.5 * (1.0 + (1.0 + 4.0 * t_prev * t_prev).sqrt());
    MomentumState { t_prev, t, omega: (t_prev - 1.0) / t }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn first_update_has_zero_weight() {
        let s = momentum_update(MomentumState::initial());
        assert_relative_eq!(s.t, (1.0 + 5.0_f64.sqrt()) / 2.0, max_relative = 1e-15);
        assert_eq!(s.omega, 0.0);
    }

    #[test]
    fn second_update_matches_recurrence() {
        // Frozen from evaluating the recurrence at f64 precision:
        // t1 = (1 + sqrt(5)) / 2, t2 = (1 + sqrt(1 + 4 t1^2)) / 2.
        let s1 = momentum_update(MomentumState::initial());
        let s2 = momentum_update(s1);
        let t1 = 1.618033988749895_f64;
        let t2 = 0.5 * (1.0 + (1.0 + 4.0 * t1 * t1).sqrt());
        assert_relative_eq!(s2.t, t2, max_relative = 1e-13);
        assert_relative_eq!(s2.omega, (t1 - 1.0) / t2, max_relative = 1e-13);
        // and the spot values
        assert_relative_eq!(s2.t, 2.193527085, max_relative = 1e-9);
        assert_relative_eq!(s2.omega, 0.281749164, max_relative = 1e-8);
    }

    proptest! {
        #[test]
        fn sequence_grows_and_weight_stays_in_unit_interval(t in 1.0f64..1e6) {
            let s = momentum_update(MomentumState { t_prev: t, t, omega: 0.0 });
            prop_assert!(s.t > t);
            prop_assert!(s.omega >= 0.0 && s.omega < 1.0);
            prop_assert!(s.t >= s.t_prev && s.t_prev >= 1.0);
        }
    }

    #[test]
    fn sequence_is_strictly_increasing() {
        let mut s = MomentumState::initial();
        let mut prev_t = s.t;
        for _ in 0..50 {
            s = momentum_update(s);
            assert!(s.t > prev_t);
            assert!((0.0..1.0).contains(&s.omega));
            prev_t = s.t;
        }
    }
}
