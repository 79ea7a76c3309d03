//! Comparison functions for the area bounds and the certificates built on them.
//!
//! With `y = x^{n-1/2}` the area integral becomes
//! `I(a) = int_{y1}^{y2} dy / sqrt(f(y))`, where
//! `f(y) = y^{(2n-2)/(2n-1)} - y^{2n/(2n-1)} - a` and `I = (2n-1)/2 * J`.
//! Two piecewise envelopes split at `y_c`, the image of the critical point:
//!
//! ```text
//! g1 = c (sqrt(y1) - sqrt(y_c))^2 - c (sqrt(y) - sqrt(y_c))^2   on [y1, y_c]
//!      b (y2 - y_c)^2 - b (y - y_c)^2                          on (y_c, y2]
//! g2 = C (y1 - y_c)^2 - C (y - y_c)^2                          on [y1, y_c]
//!      B (y2 - y_c)^2 - B (y - y_c)^2                          on (y_c, 1]
//! ```
//!
//! `g1 >= f` gives a lower bound for `I`, `g2 <= f` an upper one, and every
//! `1 / sqrt(g)` piece integrates in closed form. The pieces need not agree
//! at `y_c`; each is only compared with `f` on its own side.

use std::f64::consts::{PI, SQRT_2};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    area_integral_with, catalog_with, critical_parameter, find_roots, solve_shape_with, summarize_with,
    QuadratureOptions, RotationSpec, ShapeParameter, DEFAULT_SOLVE_TOLERANCE,
};
use crate::numerics::{integrate_singular, GaussLegendre, SingularIntegral};

/// Slack allowed when checking `h1 >= 0` and `h2 <= 0` on a grid.
pub const ENVELOPE_TOLERANCE: f64 = 1e-12;
/// Relative agreement required between closed-form and numerical envelope integrals.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-8;
pub const MIN_ENVELOPE_SAMPLES: usize = 1000;
pub const DEFAULT_ENVELOPE_SAMPLES: usize = 10_000;
const ENDPOINT_PANELS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnvelopeParams {
    pub n: u32,
    pub a: f64,
    pub a0: f64,
    pub y1: f64,
    pub y2: f64,
    pub y_c: f64,
    pub c: f64,
    pub b: f64,
    #[serde(rename = "C")]
    pub big_c: f64,
    #[serde(rename = "B")]
    pub big_b: f64,
    #[serde(rename = "A0")]
    pub big_a0: f64,
}

/// Which side of `y_c` a piecewise envelope is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

pub fn envelope_params(shape: &ShapeParameter) -> Result<EnvelopeParams> {
    let n = shape.n();
    let nf = n as f64;
    let m = 2.0 * nf - 1.0;
    let roots = find_roots(shape)?;
    let exponent = nf - 0.5;
    let ratio = (nf - 1.0) / nf;
    let a0 = critical_parameter(n)?;
    let b = 2.0 * (nf - 1.0) / (m * m) * ratio.powf(-nf);
    Ok(EnvelopeParams {
        n,
        a: shape.a(),
        a0,
        y1: roots.x1.powf(exponent),
        y2: roots.x2.powf(exponent),
        y_c: ratio.powf(exponent),
        c: 8.0 * (nf * (nf - 1.0)).sqrt() / (m * m),
        b,
        big_c: b,
        big_b: 1.0 / m,
        big_a0: m / 4.0 * (2.0 * a0).sqrt(),
    })
}

/// `f(y) = y^{(2n-2)/(2n-1)} - y^{2n/(2n-1)} - a`.
pub fn f_eval(params: &EnvelopeParams, y: f64) -> Result<f64> {
    if !(y > 0.0 && y <= 1.0) {
        return Err(Error::DomainError { x: y, domain: "(0, 1]" });
    }
    Ok(f_unchecked(params, y))
}

fn f_unchecked(params: &EnvelopeParams, y: f64) -> f64 {
    let nf = params.n as f64;
    let m = 2.0 * nf - 1.0;
    let low = y.powf((2.0 * nf - 2.0) / m);
    // y^{2n/(2n-1)} = y^{(2n-2)/(2n-1)} * y^{2/(2n-1)}
    low - low * y.powf(2.0 / m) - params.a
}

fn check_envelope_domain(params: &EnvelopeParams, y: f64) -> Result<()> {
    if !(y >= params.y1 && y <= params.y2) {
        return Err(Error::DomainError {
            x: y,
            domain: "[y1, y2]",
        });
    }
    Ok(())
}

/// One piece of `g1`, evaluated without a domain check.
pub fn g1_piece(params: &EnvelopeParams, side: Side, y: f64) -> f64 {
    match side {
        Side::Left => {
            let sc = params.y_c.sqrt();
            params.c * ((params.y1.sqrt() - sc).powi(2) - (y.sqrt() - sc).powi(2))
        }
        Side::Right => params.b * ((params.y2 - params.y_c).powi(2) - (y - params.y_c).powi(2)),
    }
}

/// One piece of `g2`, evaluated without a domain check.
pub fn g2_piece(params: &EnvelopeParams, side: Side, y: f64) -> f64 {
    match side {
        Side::Left => params.big_c * ((params.y1 - params.y_c).powi(2) - (y - params.y_c).powi(2)),
        Side::Right => params.big_b * ((params.y2 - params.y_c).powi(2) - (y - params.y_c).powi(2)),
    }
}

fn side_of(params: &EnvelopeParams, y: f64) -> Side {
    if y <= params.y_c {
        Side::Left
    } else {
        Side::Right
    }
}

pub fn g1_eval(params: &EnvelopeParams, y: f64) -> Result<f64> {
    check_envelope_domain(params, y)?;
    Ok(g1_piece(params, side_of(params, y), y))
}

pub fn g2_eval(params: &EnvelopeParams, y: f64) -> Result<f64> {
    check_envelope_domain(params, y)?;
    Ok(g2_piece(params, side_of(params, y), y))
}

/// Grid on `[y1, y2]` tagged by side: uniform in `sqrt(y)` on `[y1, y_c]` and
/// uniform in `y` on `[y_c, y2]`. `y_c` appears once per side.
pub fn envelope_grid(params: &EnvelopeParams, samples: usize) -> Vec<(Side, f64)> {
    let left = samples / 2;
    let right = samples - left;
    let (s1, sc) = (params.y1.sqrt(), params.y_c.sqrt());
    let mut grid = Vec::with_capacity(samples);
    for i in 0..left {
        let u = s1 + (sc - s1) * i as f64 / (left - 1) as f64;
        let y = if i == 0 {
            params.y1
        } else if i == left - 1 {
            params.y_c
        } else {
            u * u
        };
        grid.push((Side::Left, y));
    }
    for i in 0..right {
        let y = if i == right - 1 {
            params.y2
        } else {
            params.y_c + (params.y2 - params.y_c) * i as f64 / (right - 1) as f64
        };
        grid.push((Side::Right, y));
    }
    grid
}

/// `(min h1, max h2)` with `h = g - f`, sampled on [`envelope_grid`].
pub fn envelope_margins(params: &EnvelopeParams, samples: usize) -> Result<(f64, f64)> {
    if samples < MIN_ENVELOPE_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "envelope sampling needs at least {MIN_ENVELOPE_SAMPLES} points (got {samples})"
        )));
    }
    let mut min_h1 = f64::INFINITY;
    let mut max_h2 = f64::NEG_INFINITY;
    for (side, y) in envelope_grid(params, samples) {
        let f = f_unchecked(params, y);
        min_h1 = min_h1.min(g1_piece(params, side, y) - f);
        max_h2 = max_h2.max(g2_piece(params, side, y) - f);
    }
    Ok((min_h1, max_h2))
}

/// `int 1/sqrt(g)` over each envelope piece.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnvelopeIntegrals {
    pub g1_left: f64,
    pub g1_right: f64,
    pub g2_left: f64,
    pub g2_right: f64,
}

impl EnvelopeIntegrals {
    pub fn values(&self) -> [f64; 4] {
        [self.g1_left, self.g1_right, self.g2_left, self.g2_right]
    }
}

/// The displayed closed forms, written in terms of `A0`, `n` and `y1 / y_c`.
pub fn closed_form_envelope_integrals(params: &EnvelopeParams) -> EnvelopeIntegrals {
    let nf = params.n as f64;
    let m = 2.0 * nf - 1.0;
    let a0_pi = params.big_a0 * PI;
    EnvelopeIntegrals {
        g1_left: (1.0 - 2.0 / PI + 2.0 / PI * (params.y1 / params.y_c).sqrt()) * a0_pi,
        g1_right: a0_pi,
        g2_left: 0.5 * (m * m / (2.0 * (nf - 1.0)) * (nf / (nf - 1.0)).powf(-nf)).sqrt() * PI,
        g2_right: m.sqrt() / 2.0 * PI,
    }
}

/// The same integrals from elementary antiderivatives in the coefficients:
/// an arcsine in `sqrt(y)` for the left `g1` piece and quarter circles for the rest.
pub fn arcsine_envelope_integrals(params: &EnvelopeParams) -> EnvelopeIntegrals {
    let (s1, sc) = (params.y1.sqrt(), params.y_c.sqrt());
    EnvelopeIntegrals {
        g1_left: 2.0 / params.c.sqrt() * (PI * sc / 2.0 - (sc - s1)),
        g1_right: PI / (2.0 * params.b.sqrt()),
        g2_left: PI / (2.0 * params.big_c.sqrt()),
        g2_right: PI / (2.0 * params.big_b.sqrt()),
    }
}

/// `int dy / sqrt(g(y))` between a simple root of `g` and another point, via
/// `y = root + sign * tau^2`, which leaves a bounded integrand.
fn root_endpoint_integral<G: Fn(f64) -> f64>(g: G, root: f64, other: f64) -> Result<f64> {
    let sign = (other - root).signum();
    let tau_max = (other - root).abs().sqrt();
    let rule = GaussLegendre::new(16);
    let step = tau_max / ENDPOINT_PANELS as f64;
    let mut total = 0.0;
    for k in 0..ENDPOINT_PANELS {
        let lo = k as f64 * step;
        total += rule.integrate(lo, lo + step, |tau| {
            let value = g(root + sign * tau * tau);
            2.0 * tau / value.max(f64::MIN_POSITIVE).sqrt()
        });
    }
    if !total.is_finite() {
        return Err(Error::NonFinite { t: tau_max });
    }
    Ok(total)
}

/// The four envelope integrals by direct quadrature of the piecewise functions.
pub fn quadrature_envelope_integrals(params: &EnvelopeParams) -> Result<EnvelopeIntegrals> {
    let p = params;
    Ok(EnvelopeIntegrals {
        g1_left: root_endpoint_integral(|y| g1_piece(p, Side::Left, y), p.y1, p.y_c)?,
        g1_right: root_endpoint_integral(|y| g1_piece(p, Side::Right, y), p.y2, p.y_c)?,
        g2_left: root_endpoint_integral(|y| g2_piece(p, Side::Left, y), p.y1, p.y_c)?,
        g2_right: root_endpoint_integral(|y| g2_piece(p, Side::Right, y), p.y2, p.y_c)?,
    })
}

/// `I(a) = int_{y1}^{y2} dy / sqrt(f(y))` through the generic singular kernel.
pub fn y_integral(params: &EnvelopeParams, options: QuadratureOptions) -> Result<f64> {
    let problem =
        SingularIntegral::new(|_| 1.0, |y| f_unchecked(params, y), params.y1, params.y2).with_nodes(options.nodes);
    integrate_singular(&problem)
}

/// Coefficient of `A0 pi` in the sharpened lower bound for `I(a)`.
pub fn theorem1_coefficient(params: &EnvelopeParams) -> f64 {
    2.0 - 2.0 / PI + 2.0 / PI * (params.y1 / params.y_c).sqrt()
}

/// Coefficient of `A0 pi` in the upper bound for `I` at `M^n(3,2)`.
pub fn theorem4_coefficient(n: u32) -> Result<f64> {
    let a0 = critical_parameter(n)?;
    Ok(1.0 + (2.0 / ((2.0 * n as f64 - 1.0) * a0)).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Theorem1,
    Corollary2,
    Theorem3,
    Theorem4,
    EnvelopeG1,
    EnvelopeG2,
}

impl std::fmt::Display for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Claim::Theorem1 => "theorem1",
            Claim::Corollary2 => "corollary2",
            Claim::Theorem3 => "theorem3",
            Claim::Theorem4 => "theorem4",
            Claim::EnvelopeG1 => "envelope_g1",
            Claim::EnvelopeG2 => "envelope_g2",
        };
        f.write_str(name)
    }
}

/// Outcome of one numerical certificate. `margin` is the signed slack of the
/// headline inequality; a failed side check replaces it with its own
/// (nonpositive) slack.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateReport {
    pub claim: Claim,
    pub passed: bool,
    pub margin: f64,
    pub samples: usize,
    pub detail: String,
}

impl CertificateReport {
    fn new(claim: Claim, headline: f64, side_checks: &[(&str, f64)], samples: usize, mut detail: String) -> Self {
        let failed: Vec<_> = side_checks.iter().filter(|(_, slack)| !(*slack > 0.0)).collect();
        let margin = if failed.is_empty() {
            headline
        } else {
            let worst = failed.iter().map(|(_, slack)| *slack).fold(f64::INFINITY, f64::min);
            for (name, slack) in &failed {
                detail.push_str(&format!("; failed {name} (slack {slack:e})"));
            }
            worst.min(0.0)
        };
        let margin = if margin.is_nan() { f64::NEG_INFINITY } else { margin };
        Self {
            claim,
            passed: margin > 0.0,
            margin,
            samples,
            detail,
        }
    }
}

/// `points` moduli evenly spaced strictly inside `(0, a0)`.
pub fn uniform_a_grid(n: u32, points: usize) -> Result<Vec<f64>> {
    let a0 = critical_parameter(n)?;
    Ok((1..=points).map(|k| a0 * k as f64 / (points + 1) as f64).collect())
}

pub fn certify_theorem1(n: u32, a_grid: &[f64]) -> Result<CertificateReport> {
    certify_theorem1_with(n, a_grid, QuadratureOptions::default())
}

/// `I(a) >= (2 - 2/pi + (2/pi) sqrt(y1/y_c)) A0 pi > (2 - 2/pi) A0 pi` at every
/// grid point, together with the equivalent statement in `x`.
pub fn certify_theorem1_with(n: u32, a_grid: &[f64], options: QuadratureOptions) -> Result<CertificateReport> {
    if a_grid.is_empty() {
        return Err(Error::InvalidArgument("empty modulus grid".into()));
    }
    let a0 = critical_parameter(n)?;
    let m = 2.0 * n as f64 - 1.0;
    let x_bound = 2.0 * (1.0 - 1.0 / PI) * (2.0 * a0).sqrt() * PI;
    let mut headline = f64::INFINITY;
    let mut sharp_slack = f64::INFINITY;
    let mut x_slack = f64::INFINITY;
    let mut consistency_slack = f64::INFINITY;
    let mut worst_a = a_grid[0];
    for &a in a_grid {
        let shape = ShapeParameter::new(n, a)?;
        let params = envelope_params(&shape)?;
        let i_y = y_integral(&params, options)?;
        let a0_pi = params.big_a0 * PI;
        let ratio = i_y / ((2.0 - 2.0 / PI) * a0_pi) - 1.0;
        if ratio < headline {
            headline = ratio;
            worst_a = a;
        }
        sharp_slack = sharp_slack.min(i_y / (theorem1_coefficient(&params) * a0_pi) - 1.0);

        let roots = find_roots(&shape)?;
        let j = area_integral_with(&shape, &roots, options)?;
        x_slack = x_slack.min(2.0 * j / x_bound - 1.0);
        let relative = (i_y - m / 2.0 * j).abs() / i_y;
        consistency_slack = consistency_slack.min(CLOSED_FORM_TOLERANCE - relative);
    }
    // The sharpened bound is non-strict; a tie within rounding still counts.
    let sharp_slack_tolerant = sharp_slack + 1e-12;
    let detail = format!(
        "n={n}: min I(a)/((2-2/pi)A0 pi) - 1 = {headline:.6e} at a = {worst_a:.6e}; \
         sharpened bound slack {sharp_slack:.3e}; x-form slack {x_slack:.3e}"
    );
    Ok(CertificateReport::new(
        Claim::Theorem1,
        headline,
        &[
            ("sharpened lower bound", sharp_slack_tolerant),
            ("x-form inequality", x_slack),
            ("y/x consistency", consistency_slack),
        ],
        a_grid.len(),
        detail,
    ))
}

pub fn certify_corollary2(n: u32, s_max: u32) -> Result<CertificateReport> {
    certify_corollary2_with(n, s_max, DEFAULT_SOLVE_TOLERANCE, QuadratureOptions::default())
}

/// Every catalog entry other than `(2,3)` exceeds `3(1 - 1/pi)` Clifford areas,
/// which itself exceeds 2. Margin in Clifford-ratio units.
pub fn certify_corollary2_with(n: u32, s_max: u32, tol: f64, options: QuadratureOptions) -> Result<CertificateReport> {
    let rows = catalog_with(n, s_max, tol, options)?;
    let threshold = 3.0 * (1.0 - 1.0 / PI);
    let others: Vec<_> = rows.iter().filter(|r| !(r.p == 2 && r.s == 3)).collect();
    let headline = others
        .iter()
        .map(|r| r.clifford_ratio - threshold)
        .fold(f64::INFINITY, f64::min);
    let detail = format!(
        "n={n}, s<={s_max}: {} entries besides (2,3); min clifford_ratio - 3(1-1/pi) = {headline:.6e}",
        others.len()
    );
    Ok(CertificateReport::new(
        Claim::Corollary2,
        headline,
        &[("3(1-1/pi) > 2", threshold - 2.0)],
        rows.len(),
        detail,
    ))
}

pub fn certify_theorem4(n: u32) -> Result<CertificateReport> {
    certify_theorem4_with(n, DEFAULT_SOLVE_TOLERANCE, QuadratureOptions::default())
}

/// `|M^n(3,2)| < 3 |Clifford|` with the constant chain behind it.
pub fn certify_theorem4_with(n: u32, tol: f64, options: QuadratureOptions) -> Result<CertificateReport> {
    let spec = RotationSpec::new(2, 3)?;
    let shape = solve_shape_with(n, &spec, tol, options)?;
    let params = envelope_params(&shape)?;
    let i_y = y_integral(&params, options)?;
    let a0_pi = params.big_a0 * PI;
    let coefficient = theorem4_coefficient(n)?;
    let summary = summarize_with(n, &spec, tol, options)?;

    let mut checks = vec![
        ("I(a*) <= bound", coefficient - i_y / a0_pi),
        ("I(a*) < (4/sqrt 2) A0 pi", 4.0 / SQRT_2 - i_y / a0_pi),
        ("25/9 < 4/sqrt 2", 4.0 / SQRT_2 - 25.0 / 9.0),
    ];
    if n == 3 {
        let expected = 1.0 + (27.0f64 / 10.0).sqrt();
        checks.push(("n=3 coefficient", 1e-12 - (coefficient - expected).abs()));
    }
    if n >= 4 {
        checks.push(("coefficient < 25/9", 25.0 / 9.0 - coefficient));
    }
    let headline = 3.0 - summary.clifford_ratio;
    let detail = format!(
        "n={n}: a* = {:.12e}; I/(A0 pi) = {:.9}; bound coefficient {coefficient:.9}; \
         |M(3,2)|/|Clifford| = {:.9}",
        shape.a(),
        i_y / a0_pi,
        summary.clifford_ratio
    );
    Ok(CertificateReport::new(Claim::Theorem4, headline, &checks, 1, detail))
}

pub fn certify_theorem3(n: u32, s_max: u32) -> Result<CertificateReport> {
    certify_theorem3_with(n, s_max, DEFAULT_SOLVE_TOLERANCE, QuadratureOptions::default())
}

/// The catalog minimum sits at `(2,3)` or `(3,5)`, with the intermediate
/// facts on `(4,7)` and on rotation numbers `p >= 5`. Margin in Clifford-ratio units.
pub fn certify_theorem3_with(n: u32, s_max: u32, tol: f64, options: QuadratureOptions) -> Result<CertificateReport> {
    if s_max < 7 {
        return Err(Error::InvalidArgument(format!(
            "theorem 3 certificate needs s_max >= 7 (got {s_max})"
        )));
    }
    let rows = catalog_with(n, s_max, tol, options)?;
    let is_candidate = |p: u32, s: u32| (p, s) == (2, 3) || (p, s) == (3, 5);
    let best_candidate = rows
        .iter()
        .filter(|r| is_candidate(r.p, r.s))
        .map(|r| r.clifford_ratio)
        .fold(f64::INFINITY, f64::min);
    let best_other = rows
        .iter()
        .filter(|r| !is_candidate(r.p, r.s))
        .map(|r| r.clifford_ratio)
        .fold(f64::INFINITY, f64::min);
    let minimizer = rows.first().map(|r| (r.p, r.s)).unwrap_or((0, 0));

    let seven_four = rows
        .iter()
        .find(|r| (r.p, r.s) == (4, 7))
        .map(|r| r.clifford_ratio)
        .ok_or_else(|| Error::InvalidArgument("catalog lacks (4,7)".into()))?;
    let seven_four_bound = 4.0 * (1.0 - 1.0 / PI) * 7.0 * SQRT_2 / 8.0;
    let high_p_bound = 5.0 * (1.0 - 1.0 / PI);
    let high_p = rows
        .iter()
        .filter(|r| r.p >= 5)
        .map(|r| r.clifford_ratio - high_p_bound)
        .fold(f64::INFINITY, f64::min);

    let headline = best_other - best_candidate;
    let detail = format!(
        "n={n}, s<={s_max}: minimum at ({},{}) with clifford_ratio {best_candidate:.9}; \
         next best {best_other:.9}; (4,7) ratio {seven_four:.9}",
        minimizer.0, minimizer.1
    );
    Ok(CertificateReport::new(
        Claim::Theorem3,
        headline,
        &[
            ("(4,7) > 4(1-1/pi) 7 sqrt2/8", seven_four - seven_four_bound),
            ("(4,7) > 3", seven_four - 3.0),
            ("4(1-1/pi) 7 sqrt2/8 > 3", seven_four_bound - 3.0),
            ("p >= 5 entries > 5(1-1/pi)", high_p),
            ("5(1-1/pi) > 3", high_p_bound - 3.0),
        ],
        rows.len(),
        detail,
    ))
}

/// `g1 >= f` and `g2 <= f` on the sampling grid of every modulus, plus
/// three-way agreement of the envelope integrals. Margins in units of `f`.
pub fn certify_envelopes(n: u32, a_grid: &[f64], samples: usize) -> Result<[CertificateReport; 2]> {
    if a_grid.is_empty() {
        return Err(Error::InvalidArgument("empty modulus grid".into()));
    }
    let mut min_h1 = f64::INFINITY;
    let mut max_h2 = f64::NEG_INFINITY;
    let mut g1_agreement = f64::INFINITY;
    let mut g2_agreement = f64::INFINITY;
    for &a in a_grid {
        let params = envelope_params(&ShapeParameter::new(n, a)?)?;
        let (h1, h2) = envelope_margins(&params, samples)?;
        min_h1 = min_h1.min(h1);
        max_h2 = max_h2.max(h2);

        let closed = closed_form_envelope_integrals(&params);
        let arcsine = arcsine_envelope_integrals(&params);
        let numeric = quadrature_envelope_integrals(&params)?;
        let slack = |x: f64, y: f64| CLOSED_FORM_TOLERANCE - (x - y).abs() / x.abs();
        let pieces = |v: &EnvelopeIntegrals| [v.g1_left, v.g1_right, v.g2_left, v.g2_right];
        for (k, ((c, s), q)) in pieces(&closed)
            .iter()
            .zip(pieces(&arcsine))
            .zip(pieces(&numeric))
            .enumerate()
        {
            let worst = slack(*c, s).min(slack(*c, q)).min(slack(s, q));
            if k < 2 {
                g1_agreement = g1_agreement.min(worst);
            } else {
                g2_agreement = g2_agreement.min(worst);
            }
        }
    }
    let total = samples * a_grid.len();
    let g1 = CertificateReport::new(
        Claim::EnvelopeG1,
        min_h1 + ENVELOPE_TOLERANCE,
        &[("closed-form g1 integrals", g1_agreement)],
        total,
        format!("n={n}: min h1 = {min_h1:.3e} over {} moduli", a_grid.len()),
    );
    let g2 = CertificateReport::new(
        Claim::EnvelopeG2,
        ENVELOPE_TOLERANCE - max_h2,
        &[("closed-form g2 integrals", g2_agreement)],
        total,
        format!("n={n}: max h2 = {max_h2:.3e} over {} moduli", a_grid.len()),
    );
    Ok([g1, g2])
}
