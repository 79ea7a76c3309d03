//! The family `M_a` of minimal rotational hypersurfaces in the unit sphere
//! `S^{n+1}`: period, rotation angle, area density, and compact members
//! `M^n(s, p)` closing up after `s` copies of the fundamental portion.
//!
//! Every integral is written in `x = r^2`, where the profile polynomial is
//! `z(x) = x^{n-1} - x^n - a` with roots `0 < x1 < (n-1)/n < x2 < 1`:
//!
//! ```text
//! T    = int x^{(n-2)/2}          / sqrt(z) dx
//! K(a) = sqrt(a) int 1 / ((1 - x) sqrt(x) sqrt(z)) dx
//! J(a) = int x^{n - 3/2}          / sqrt(z) dx,    w(a) = 2 pi sigma_{n-1} J / K
//! ```
//!
//! All three are taken over `[x1, x2]` with the shared singular kernel. The
//! reduced factor `z(x) / ((x - x1)(x2 - x))` is the second divided difference
//! of `-z` at `(x1, x2, x)`, which for a polynomial is a difference of complete
//! homogeneous symmetric polynomials `h_{n-2} - h_{n-3}` and stays accurate
//! when the two roots nearly merge.

use std::f64::consts::{PI, SQRT_2};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::quadrature::DEFAULT_NODES;
use crate::numerics::special::gamma_half;
use crate::numerics::{bracketed_root, integrate_reduced, BracketedProblem};

pub const ROOT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_SOLVE_TOLERANCE: f64 = 1e-10;
/// Relative margin kept from both ends of `(0, a0)` when inverting `K`.
pub const SOLVE_BRACKET_MARGIN: f64 = 1e-9;
const ROOT_BRACKET_EPS: f64 = 1e-12;
const GAP_POLISH_LIMIT: f64 = 1e-3;

/// `(n-1)^{n-1} / n^n`, evaluated in log space.
pub fn critical_parameter(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidDimension(n as i64));
    }
    let nf = n as f64;
    Ok(((nf - 1.0) * (nf - 1.0).ln() - nf * nf.ln()).exp())
}

/// Area of the unit sphere `S^m`.
pub fn sphere_area(m: u32) -> Result<f64> {
    if m < 1 {
        return Err(Error::InvalidDimension(m as i64));
    }
    Ok(2.0 * PI.powf((m as f64 + 1.0) / 2.0) / gamma_half(m + 1))
}

/// Area of the Clifford hypersurface `S^k(sqrt(k/n)) x S^{n-k}(sqrt((n-k)/n))`.
pub fn clifford_area(n: u32, k: u32) -> Result<f64> {
    if n < 2 || k < 1 || k >= n {
        return Err(Error::InvalidDimension(k as i64));
    }
    let (nf, kf) = (n as f64, k as f64);
    let first = sphere_area(k)? * (kf / nf).powf(kf / 2.0);
    let second = sphere_area(n - k)? * ((nf - kf) / nf).powf((nf - kf) / 2.0);
    Ok(first * second)
}

/// Dimension and modulus selecting one hypersurface `M_a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShapeParameter {
    n: u32,
    a: f64,
}

impl ShapeParameter {
    pub fn new(n: u32, a: f64) -> Result<Self> {
        let a0 = critical_parameter(n)?;
        if !(a > 0.0 && a < a0) {
            return Err(Error::DegenerateShape { a, a0 });
        }
        Ok(Self { n, a })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn a0(&self) -> f64 {
        critical_parameter(self.n).expect("validated at construction")
    }

    /// `x0 = (n-1)/n`, the maximum of `z`.
    pub fn critical_point(&self) -> f64 {
        (self.n as f64 - 1.0) / self.n as f64
    }

    /// `z(x) = x^{n-1} - x^n - a`.
    pub fn z(&self, x: f64) -> f64 {
        let p = x.powi(self.n as i32 - 1);
        p - p * x - self.a
    }
}

/// The roots `x1 < x2` of `z` in `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootPair {
    pub x1: f64,
    pub x2: f64,
    /// `1 - x2`, resolved below the spacing of doubles near 1.
    pub gap2: f64,
}

impl RootPair {
    /// Radii `r1 = sqrt(x1)` and `r2 = sqrt(x2)` of the profile turning points.
    pub fn radii(&self) -> (f64, f64) {
        (self.x1.sqrt(), self.x2.sqrt())
    }
}

pub fn find_roots(shape: &ShapeParameter) -> Result<RootPair> {
    let x0 = shape.critical_point();
    let z = |x: f64| shape.z(x);
    let x1 = bracketed_root(&BracketedProblem::new(z, ROOT_BRACKET_EPS, x0, ROOT_TOLERANCE).with_width_tolerance(0.0))?;
    let x2 = bracketed_root(
        &BracketedProblem::new(z, x0, 1.0 - ROOT_BRACKET_EPS, ROOT_TOLERANCE).with_width_tolerance(0.0),
    )?;
    let x2 = polish_root(shape, x2);
    Ok(RootPair {
        x1: polish_root(shape, x1),
        x2,
        gap2: upper_gap(shape, 1.0 - x2),
    })
}

/// Newton on `(1 - y)^{n-1} y = a` for `y = 1 - x2`. Only small gaps need it;
/// near the merged roots the slope vanishes and `1 - x2` is already exact enough.
fn upper_gap(shape: &ShapeParameter, mut y: f64) -> f64 {
    if y > GAP_POLISH_LIMIT {
        return y;
    }
    let n = shape.n as f64;
    let residual = |y: f64| (1.0 - y).powi(shape.n as i32 - 1) * y - shape.a;
    for _ in 0..6 {
        let slope = (1.0 - y).powi(shape.n as i32 - 2) * (1.0 - n * y);
        if slope == 0.0 {
            break;
        }
        let next = y - residual(y) / slope;
        if next > 0.0 && residual(next).abs() < residual(y).abs() {
            y = next;
        } else {
            break;
        }
    }
    y
}

/// A few Newton steps on `z`, kept only while they reduce the residual.
fn polish_root(shape: &ShapeParameter, mut x: f64) -> f64 {
    let n = shape.n as f64;
    for _ in 0..4 {
        let p = x.powi(shape.n as i32 - 2);
        let dz = p * ((n - 1.0) - n * x);
        if dz == 0.0 {
            break;
        }
        let next = x - shape.z(x) / dz;
        if shape.z(next).abs() < shape.z(x).abs() {
            x = next;
        } else {
            break;
        }
    }
    x
}

/// `z(x) / ((x - x1)(x2 - x))` from the divided-difference form.
pub fn reduced_profile_factor(n: u32, roots: &RootPair, x: f64) -> f64 {
    let k = n as usize;
    // h_m(x1, x2, x) for m = 0..=k-2, accumulated via
    // h_m(u, v) = v h_{m-1}(u, v) + u^m and h_m(u, v, w) = w h_{m-1}(u, v, w) + h_m(u, v).
    let (u, v, w) = (roots.x1, roots.x2, x);
    let mut h_two = 1.0; // h_m(u, v)
    let mut u_pow = 1.0;
    let mut h_three = 1.0; // h_m(u, v, w)
    let mut previous = 0.0; // h_{m-1}(u, v, w)
    for _ in 1..=k.saturating_sub(2) {
        u_pow *= u;
        h_two = v * h_two + u_pow;
        previous = h_three;
        h_three = w * h_three + h_two;
    }
    h_three - previous
}

/// Quadrature settings shared by the period integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureOptions {
    pub nodes: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self { nodes: DEFAULT_NODES }
    }
}

/// Everything that only depends on `(n, a)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PeriodIntegrals {
    pub period: f64,
    pub rotation: f64,
    /// `int_{x1}^{x2} x^{n-3/2} / sqrt(z) dx`.
    pub area_integral: f64,
}

fn integrate_over_roots<N: Fn(f64, f64, f64) -> f64>(
    shape: &ShapeParameter,
    roots: &RootPair,
    numerator: N,
    options: QuadratureOptions,
) -> Result<f64> {
    integrate_reduced(
        numerator,
        |x| reduced_profile_factor(shape.n, roots, x),
        roots.x1,
        roots.x2,
        options.nodes,
    )
}

pub fn period_t_with(shape: &ShapeParameter, roots: &RootPair, options: QuadratureOptions) -> Result<f64> {
    let e = (shape.n as f64 - 2.0) / 2.0;
    integrate_over_roots(shape, roots, |x, _, _| x.powf(e), options)
}

pub fn rotation_angle_with(shape: &ShapeParameter, roots: &RootPair, options: QuadratureOptions) -> Result<f64> {
    let v = integrate_over_roots(
        shape,
        roots,
        |x, _, from_right| 1.0 / ((roots.gap2 + from_right) * x.sqrt()),
        options,
    )?;
    Ok(shape.a.sqrt() * v)
}

pub fn area_integral_with(shape: &ShapeParameter, roots: &RootPair, options: QuadratureOptions) -> Result<f64> {
    let e = shape.n as f64 - 1.5;
    integrate_over_roots(shape, roots, |x, _, _| x.powf(e), options)
}

pub fn period_integrals(shape: &ShapeParameter, options: QuadratureOptions) -> Result<PeriodIntegrals> {
    let roots = find_roots(shape)?;
    Ok(PeriodIntegrals {
        period: period_t_with(shape, &roots, options)?,
        rotation: rotation_angle_with(shape, &roots, options)?,
        area_integral: area_integral_with(shape, &roots, options)?,
    })
}

/// Profile period `T` in arclength.
pub fn period_t(shape: &ShapeParameter) -> Result<f64> {
    period_t_with(shape, &find_roots(shape)?, QuadratureOptions::default())
}

/// Rotation angle `K(a)` accumulated over one profile period.
pub fn rotation_angle(shape: &ShapeParameter) -> Result<f64> {
    rotation_angle_with(shape, &find_roots(shape)?, QuadratureOptions::default())
}

pub fn area_density_with(shape: &ShapeParameter, options: QuadratureOptions) -> Result<f64> {
    let p = period_integrals(shape, options)?;
    density_from(shape.n, &p)
}

fn density_from(n: u32, p: &PeriodIntegrals) -> Result<f64> {
    Ok(2.0 * PI * sphere_area(n - 1)? * p.area_integral / p.rotation)
}

/// Area per unit rotation number, `w(a)`.
pub fn area_density(shape: &ShapeParameter) -> Result<f64> {
    area_density_with(shape, QuadratureOptions::default())
}

/// Coprime `(p, s)` with `1/2 < p/s < sqrt(2)/2`, naming the compact
/// hypersurface `M^n(s, p)` with `s`-fold symmetry and rotation number `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RotationSpec {
    p: u32,
    s: u32,
}

impl RotationSpec {
    pub fn new(p: u32, s: u32) -> Result<Self> {
        let invalid = |reason| Error::InvalidRotation {
            p: p as i64,
            s: s as i64,
            reason,
        };
        if p == 0 || s == 0 {
            return Err(invalid("p and s must be positive"));
        }
        if gcd(p, s) != 1 {
            return Err(invalid("p and s must be coprime"));
        }
        // 1/2 < p/s  <=>  2p > s;  p/s < sqrt(2)/2  <=>  2p^2 < s^2
        let (p64, s64) = (p as u64, s as u64);
        if 2 * p64 <= s64 || 2 * p64 * p64 >= s64 * s64 {
            return Err(invalid("need 1/2 < p/s < sqrt(2)/2"));
        }
        Ok(Self { p, s })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `2 pi p / s`.
    pub fn target_angle(&self) -> f64 {
        2.0 * PI * self.p as f64 / self.s as f64
    }
}

impl std::fmt::Display for RotationSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.p, self.s)
    }
}

pub fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverts the period map: finds `a` with `K(a) = 2 pi p / s`.
pub fn solve_shape(n: u32, spec: &RotationSpec, tol: f64) -> Result<ShapeParameter> {
    solve_shape_with(n, spec, tol, QuadratureOptions::default())
}

pub fn solve_shape_with(n: u32, spec: &RotationSpec, tol: f64, options: QuadratureOptions) -> Result<ShapeParameter> {
    solve_angle(n, spec.target_angle(), tol, options)
}

/// Finds `a` with `K(a) = target` for any target in `(pi, sqrt(2) pi)`.
pub fn solve_angle(n: u32, target: f64, tol: f64, options: QuadratureOptions) -> Result<ShapeParameter> {
    let a0 = critical_parameter(n)?;
    if !(target > PI && target < SQRT_2 * PI) {
        return Err(Error::TargetOutOfRange { target });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance {tol}")));
    }
    let residual = |a: f64| -> f64 {
        ShapeParameter::new(n, a)
            .and_then(|s| rotation_angle_with(&s, &find_roots(&s)?, options))
            .map(|k| k - target)
            .unwrap_or(f64::NAN)
    };

    // Quadrature near a = 0 is costly, so the lower end walks down by decades
    // and stops at the first modulus whose angle falls below the target.
    let mut hi = a0 * (1.0 - SOLVE_BRACKET_MARGIN);
    let mut lo = a0 * 0.1;
    let floor = a0 * SOLVE_BRACKET_MARGIN;
    loop {
        let r = residual(lo);
        if r.is_nan() {
            return Err(Error::NonConvergence {
                iterations: 0,
                last: lo,
            });
        }
        if r <= 0.0 || lo <= floor {
            break;
        }
        hi = lo;
        lo = (lo * 0.1).max(floor);
    }

    // K is far closer to linear in log a than in a.
    let problem = BracketedProblem::new(|u: f64| residual(u.exp()), lo.ln(), hi.ln(), tol).with_width_tolerance(0.0);
    let a = match bracketed_root(&problem) {
        Ok(u) => u.exp().clamp(floor, a0 * (1.0 - SOLVE_BRACKET_MARGIN)),
        // The extreme brackets sit next to the limits pi and sqrt(2) pi.
        Err(Error::NoSignChange { .. }) => return Err(Error::TargetOutOfRange { target }),
        Err(e) => return Err(e),
    };
    ShapeParameter::new(n, a)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeometrySummary {
    pub n: u32,
    pub p: u32,
    pub s: u32,
    pub a: f64,
    #[serde(rename = "T")]
    pub period: f64,
    #[serde(rename = "K")]
    pub rotation: f64,
    pub w: f64,
    pub area: f64,
    pub entropy: f64,
    pub clifford_ratio: f64,
}

/// Quantities of a (not necessarily compact) `M_a` normalised to unit rotation
/// number; `area = w`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanRow {
    pub a: f64,
    #[serde(rename = "T")]
    pub period: f64,
    #[serde(rename = "K")]
    pub rotation: f64,
    pub w: f64,
    pub area: f64,
    pub entropy: f64,
    pub clifford_ratio: f64,
}

pub fn scan_point(shape: &ShapeParameter, options: QuadratureOptions) -> Result<ScanRow> {
    let n = shape.n;
    let integrals = period_integrals(shape, options)?;
    let w = density_from(n, &integrals)?;
    Ok(ScanRow {
        a: shape.a,
        period: integrals.period,
        rotation: integrals.rotation,
        w,
        area: w,
        entropy: w / sphere_area(n)?,
        clifford_ratio: w / clifford_area(n, 1)?,
    })
}

pub fn summarize(n: u32, spec: &RotationSpec) -> Result<GeometrySummary> {
    summarize_with(n, spec, DEFAULT_SOLVE_TOLERANCE, QuadratureOptions::default())
}

pub fn summarize_with(n: u32, spec: &RotationSpec, tol: f64, options: QuadratureOptions) -> Result<GeometrySummary> {
    let shape = solve_shape_with(n, spec, tol, options)?;
    let integrals = period_integrals(&shape, options)?;
    let w = density_from(n, &integrals)?;
    let area = w * spec.p as f64;
    Ok(GeometrySummary {
        n,
        p: spec.p,
        s: spec.s,
        a: shape.a,
        period: integrals.period,
        rotation: integrals.rotation,
        w,
        area,
        entropy: crate::shrinker::cone_entropy(n, area)?,
        clifford_ratio: area / clifford_area(n, 1)?,
    })
}

/// Every admissible `(p, s)` with `s <= s_max`, ordered by `s` then `p`.
pub fn rotation_specs(s_max: u32) -> Vec<RotationSpec> {
    let mut specs = Vec::new();
    for s in 1..=s_max {
        for p in 1..s {
            if let Ok(spec) = RotationSpec::new(p, s) {
                specs.push(spec);
            }
        }
    }
    specs
}

pub fn catalog(n: u32, s_max: u32) -> Result<Vec<GeometrySummary>> {
    catalog_with(n, s_max, DEFAULT_SOLVE_TOLERANCE, QuadratureOptions::default())
}

/// All compact members with at most `s_max` folds, sorted by area (ties by
/// `s`). Entries are computed in parallel; the order is deterministic.
pub fn catalog_with(n: u32, s_max: u32, tol: f64, options: QuadratureOptions) -> Result<Vec<GeometrySummary>> {
    if s_max < 3 {
        return Err(Error::InvalidArgument(format!(
            "catalog needs s_max >= 3 (got {s_max})"
        )));
    }
    critical_parameter(n)?;
    let mut rows = rotation_specs(s_max)
        .par_iter()
        .map(|spec| summarize_with(n, spec, tol, options))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|l, r| l.area.total_cmp(&r.area).then(l.s.cmp(&r.s)));
    Ok(rows)
}
