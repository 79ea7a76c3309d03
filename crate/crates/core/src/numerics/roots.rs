//! Bracketed scalar root finding.

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ITERATIONS: usize = 200;

/// A continuous function together with a sign-changing bracket.
pub struct BracketedProblem<F> {
    pub function: F,
    pub lo: f64,
    pub hi: f64,
    /// Accept `x` once `|f(x)| <= tolerance`.
    pub tolerance: f64,
    /// Accept once the bracket is narrower than this.
    pub width_tolerance: f64,
    pub max_iterations: usize,
}

impl<F: Fn(f64) -> f64> BracketedProblem<F> {
    pub fn new(function: F, lo: f64, hi: f64, tolerance: f64) -> Self {
        Self {
            function,
            lo,
            hi,
            tolerance,
            width_tolerance: tolerance,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }

    pub fn with_width_tolerance(mut self, width_tolerance: f64) -> Self {
        self.width_tolerance = width_tolerance;
        self
    }
}

/// Bisection safeguarded secant iteration.
///
/// Every step proposes the secant through the two most recent iterates. The
/// proposal is replaced by the midpoint whenever it leaves the current bracket,
/// or when the previous two steps failed to halve the bracket between them.
/// The bracket therefore shrinks at least as fast as plain bisection every
/// second step.
pub fn bracketed_root<F: Fn(f64) -> f64>(problem: &BracketedProblem<F>) -> Result<f64> {
    let f = &problem.function;
    let (mut lo, mut hi) = if problem.lo <= problem.hi {
        (problem.lo, problem.hi)
    } else {
        (problem.hi, problem.lo)
    };
    if !(problem.tolerance > 0.0) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "bracket [{lo}, {hi}] with tolerance {}",
            problem.tolerance
        )));
    }

    let mut f_lo = f(lo);
    let mut f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if !(f_lo.signum() * f_hi.signum() < 0.0) {
        return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
    }
    if f_lo.abs() <= problem.tolerance {
        return Ok(lo);
    }
    if f_hi.abs() <= problem.tolerance {
        return Ok(hi);
    }

    // Last two iterates feeding the secant.
    let (mut x_prev, mut f_prev) = (lo, f_lo);
    let (mut x_cur, mut f_cur) = (hi, f_hi);
    let mut width_two_steps_ago = hi - lo;
    let mut width_one_step_ago = hi - lo;

    for _ in 0..problem.max_iterations {
        let width = hi - lo;
        let mid = lo + 0.5 * width;
        if width <= problem.width_tolerance || mid <= lo || mid >= hi {
            return Ok(if f_lo.abs() <= f_hi.abs() { lo } else { hi });
        }

        let stalled = width > 0.5 * width_two_steps_ago;
        let secant = if f_cur != f_prev {
            x_cur - f_cur * (x_cur - x_prev) / (f_cur - f_prev)
        } else {
            f64::NAN
        };
        let x = if !stalled && secant > lo && secant < hi {
            secant
        } else {
            mid
        };

        let fx = f(x);
        if !fx.is_finite() {
            return Err(Error::NonConvergence { iterations: 0, last: x });
        }
        if fx.abs() <= problem.tolerance {
            return Ok(x);
        }
        if fx.signum() == f_lo.signum() {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
        x_prev = x_cur;
        f_prev = f_cur;
        x_cur = x;
        f_cur = fx;
        width_two_steps_ago = width_one_step_ago;
        width_one_step_ago = width;
    }

    Err(Error::NonConvergence {
        iterations: problem.max_iterations,
        last: 0.5 * (lo + hi),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sqrt_two() {
        let p = BracketedProblem::new(|x: f64| x * x - 2.0, 1.0, 2.0, 1e-12);
        let x = bracketed_root(&p).unwrap();
        assert!((x - std::f64::consts::SQRT_2).abs() < 1e-10);
    }

    #[test]
    fn quadratic_roots_of_profile_polynomial() {
        let z = |x: f64| x - x * x - 0.16;
        let x1 = bracketed_root(&BracketedProblem::new(z, 0.01, 0.5, 1e-14)).unwrap();
        let x2 = bracketed_root(&BracketedProblem::new(z, 0.5, 0.99, 1e-14)).unwrap();
        assert!((x1 - 0.2).abs() < 1e-12);
        assert!((x2 - 0.8).abs() < 1e-12);
    }

    #[test]
    fn reversed_bracket_is_accepted() {
        let p = BracketedProblem::new(|x: f64| x - 0.3, 1.0, 0.0, 1e-14);
        assert!((bracketed_root(&p).unwrap() - 0.3).abs() < 1e-14);
    }

    #[test]
    fn same_sign_is_rejected() {
        let p = BracketedProblem::new(|x: f64| x * x + 1.0, -1.0, 1.0, 1e-12);
        assert!(matches!(bracketed_root(&p), Err(Error::NoSignChange { .. })));
    }

    #[test]
    fn iteration_cap_is_reported() {
        let mut p = BracketedProblem::new(|x: f64| x.powi(3) - 0.5, 0.0, 1.0, 1e-300);
        p.width_tolerance = 0.0;
        p.max_iterations = 3;
        assert!(matches!(bracketed_root(&p), Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn flat_function_falls_back_to_bisection() {
        // Secant steps are useless on a step-like function.
        let p = BracketedProblem::new(|x: f64| (50.0 * (x - 0.123)).tanh(), -3.0, 5.0, 1e-14);
        let x = bracketed_root(&p).unwrap();
        assert!((x - 0.123).abs() < 1e-13);
    }

    proptest! {
        #[test]
        fn residual_within_scaled_tolerance(root in 0.05f64..0.95, k in 1u32..7, tol_exp in 6i32..14) {
            let tol = 10f64.powi(-tol_exp);
            let f = move |x: f64| (x - root) * (1.0 + x * x) * k as f64 + (x - root).powi(3);
            let p = BracketedProblem::new(f, 0.0, 1.0, tol);
            let x = bracketed_root(&p).unwrap();
            prop_assert!((0.0..=1.0).contains(&x));
            let scale = 1f64.max(f(0.0).abs()).max(f(1.0).abs());
            prop_assert!(f(x).abs() <= 10.0 * tol * scale || (x - root).abs() <= tol);
        }
    }
}
