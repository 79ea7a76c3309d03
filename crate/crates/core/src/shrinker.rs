//! Entropy of cones over minimal hypersurfaces of the sphere.
//!
//! For `M^n` minimal in `S^{n+1}` the cone `C(M)` is a self-shrinker in
//! `R^{n+2}`, and its Gaussian entropy reduces to
//!
//! ```text
//! lambda(C(M)) = (2 pi)^{-(n+1)/2} |M| int_0^inf t^n e^{-t^2/2} dt = |M| / sigma_n.
//! ```

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{catalog_with, clifford_area, critical_parameter, sphere_area, QuadratureOptions};
use crate::numerics::special::gamma_half;

pub fn cone_entropy(n: u32, area: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidDimension(n as i64));
    }
    if !(area > 0.0 && area.is_finite()) {
        return Err(Error::InvalidArea(area));
    }
    Ok(area / sphere_area(n)?)
}

/// `int_0^inf t^n e^{-t^2/2} dt = 2^{(n-1)/2} Gamma((n+1)/2)`.
pub fn gaussian_moment(n: u32) -> f64 {
    2f64.powf((n as f64 - 1.0) / 2.0) * gamma_half(n + 1)
}

/// `(2 pi)^{-(n+1)/2} * gaussian_moment(n) * sigma_n`, which equals one.
pub fn entropy_normalisation(n: u32) -> Result<f64> {
    Ok((2.0 * PI).powf(-(n as f64 + 1.0) / 2.0) * gaussian_moment(n) * sphere_area(n)?)
}

/// Lower threshold `4 (pi - 1) sigma_{n-1} sqrt(a0) / sigma_n` for cones over
/// the non-Clifford compact members.
pub fn entropy_threshold(n: u32) -> Result<f64> {
    Ok(4.0 * (PI - 1.0) * sphere_area(n - 1)? * critical_parameter(n)?.sqrt() / sphere_area(n)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntropySource {
    RoundSphere,
    Clifford,
    Spec { p: u32, s: u32 },
}

impl std::fmt::Display for EntropySource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EntropySource::RoundSphere => f.write_str("round_sphere"),
            EntropySource::Clifford => f.write_str("clifford"),
            EntropySource::Spec { p, s } => write!(f, "spec({p},{s})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyRecord {
    pub n: u32,
    pub source: EntropySource,
    pub area: f64,
    pub entropy: f64,
}

impl EntropyRecord {
    pub fn exceeds_threshold(&self, threshold: f64) -> bool {
        self.entropy > threshold
    }
}

pub fn entropy_table(n: u32, s_max: u32) -> Result<Vec<EntropyRecord>> {
    entropy_table_with(
        n,
        s_max,
        crate::geometry::DEFAULT_SOLVE_TOLERANCE,
        QuadratureOptions::default(),
    )
}

/// Round sphere, Clifford, then every catalog entry in catalog order.
pub fn entropy_table_with(n: u32, s_max: u32, tol: f64, options: QuadratureOptions) -> Result<Vec<EntropyRecord>> {
    let sphere = sphere_area(n)?;
    let clifford = clifford_area(n, 1)?;
    let mut rows = vec![
        EntropyRecord {
            n,
            source: EntropySource::RoundSphere,
            area: sphere,
            entropy: cone_entropy(n, sphere)?,
        },
        EntropyRecord {
            n,
            source: EntropySource::Clifford,
            area: clifford,
            entropy: cone_entropy(n, clifford)?,
        },
    ];
    for entry in catalog_with(n, s_max, tol, options)? {
        rows.push(EntropyRecord {
            n,
            source: EntropySource::Spec { p: entry.p, s: entry.s },
            area: entry.area,
            entropy: entry.entropy,
        });
    }
    Ok(rows)
}
