//! Gamma at half-integer arguments by exact recurrence from `Gamma(1/2) = sqrt(pi)`
//! and `Gamma(1) = 1`.

use std::f64::consts::PI;

/// `Gamma(k / 2)` for `k >= 1`.
pub fn gamma_half(k: u32) -> f64 {
    assert!(k >= 1, "Gamma(k/2) needs k >= 1");
    let (mut value, mut arg) = if k.is_multiple_of(2) {
        (1.0, 1.0)
    } else {
        (PI.sqrt(), 0.5)
    };
    let target = k as f64 / 2.0;
    while arg < target {
        value *= arg;
        arg += 1.0;
    }
    value
}
