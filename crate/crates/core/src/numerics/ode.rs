//! Classical fixed-step fourth-order Runge-Kutta.

use crate::error::{Error, Result};

pub const MIN_STEPS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct OdeState {
    pub t: f64,
    pub components: Vec<f64>,
}

impl OdeState {
    pub fn new(t: f64, components: Vec<f64>) -> Self {
        Self { t, components }
    }
}

/// One RK4 step of size `h` from `(t, y)`.
pub fn rk4_step<F>(rhs: &F, t: f64, y: &[f64], h: f64) -> Vec<f64>
where
    F: Fn(f64, &[f64]) -> Vec<f64>,
{
    let axpy = |base: &[f64], k: &[f64], s: f64| -> Vec<f64> { base.iter().zip(k).map(|(b, k)| b + s * k).collect() };
    let k1 = rhs(t, y);
    let k2 = rhs(t + 0.5 * h, &axpy(y, &k1, 0.5 * h));
    let k3 = rhs(t + 0.5 * h, &axpy(y, &k2, 0.5 * h));
    let k4 = rhs(t + h, &axpy(y, &k3, h));
    y.iter()
        .enumerate()
        .map(|(i, yi)| yi + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect()
}

/// Integrates from `initial.t` to `t_end` in `steps` equal steps and returns
/// all `steps + 1` states.
pub fn integrate_ode<F>(rhs: F, initial: &OdeState, t_end: f64, steps: usize) -> Result<Vec<OdeState>>
where
    F: Fn(f64, &[f64]) -> Vec<f64>,
{
    if steps < MIN_STEPS {
        return Err(Error::InvalidArgument(format!(
            "fixed-step integration needs at least {MIN_STEPS} steps (got {steps})"
        )));
    }
    if !t_end.is_finite() || !initial.t.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "integration interval [{}, {t_end}]",
            initial.t
        )));
    }
    if initial.components.iter().any(|c| !c.is_finite()) {
        return Err(Error::NonFinite { t: initial.t });
    }

    let h = (t_end - initial.t) / steps as f64;
    let mut path = Vec::with_capacity(steps + 1);
    path.push(initial.clone());
    let mut y = initial.components.clone();
    for k in 0..steps {
        let t = initial.t + k as f64 * h;
        y = rk4_step(&rhs, t, &y, h);
        let t_next = if k + 1 == steps {
            t_end
        } else {
            initial.t + (k + 1) as f64 * h
        };
        if y.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite { t: t_next });
        }
        path.push(OdeState::new(t_next, y.clone()));
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    fn oscillator(_: f64, y: &[f64]) -> Vec<f64> {
        vec![y[1], -y[0]]
    }

    #[test]
    fn exponential_growth() {
        let path = integrate_ode(|_, y: &[f64]| vec![y[0]], &OdeState::new(0.0, vec![1.0]), 1.0, 1000).unwrap();
        assert_eq!(path.len(), 1001);
        assert!((path[1000].components[0] - E).abs() < 1e-9);
        assert_eq!(path[1000].t, 1.0);
    }

    #[test]
    fn oscillator_returns_after_one_period() {
        let path = integrate_ode(oscillator, &OdeState::new(0.0, vec![1.0, 0.0]), 2.0 * PI, 1000).unwrap();
        let end = &path.last().unwrap().components;
        assert!((end[0] - 1.0).abs() < 1e-8);
        assert!(end[1].abs() < 1e-8);
    }

    #[test]
    fn zero_rhs_keeps_state() {
        let init = OdeState::new(0.5, vec![3.0, -1.0, 7.25]);
        let path = integrate_ode(|_, y: &[f64]| vec![0.0; y.len()], &init, 2.0, 100).unwrap();
        assert!(path.iter().all(|s| s.components == init.components));
        assert!(path.windows(2).all(|w| w[0].t <= w[1].t));
    }

    #[test]
    fn blow_up_is_reported() {
        // y' = y^2 from y(0) = 1 blows up at t = 1.
        let err = integrate_ode(
            |_, y: &[f64]| vec![y[0] * y[0]],
            &OdeState::new(0.0, vec![1.0]),
            2.0,
            100,
        );
        assert!(matches!(err, Err(Error::NonFinite { .. })));
    }

    #[test]
    fn too_few_steps_rejected() {
        assert!(integrate_ode(oscillator, &OdeState::new(0.0, vec![1.0, 0.0]), 1.0, 99).is_err());
    }

    #[test]
    fn observed_order_is_four() {
        let end_error = |steps: usize| {
            let path = integrate_ode(oscillator, &OdeState::new(0.0, vec![1.0, 0.0]), 2.0 * PI, steps).unwrap();
            let end = &path.last().unwrap().components;
            ((end[0] - 1.0).powi(2) + end[1].powi(2)).sqrt()
        };
        let coarse = end_error(200);
        let fine = end_error(400);
        let order = (coarse / fine).log2();
        assert!(order >= 3.5, "observed order {order}");
    }
}
