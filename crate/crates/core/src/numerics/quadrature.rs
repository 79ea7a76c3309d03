//! Quadrature for integrands of the form `numerator / sqrt(denominator)` where
//! the denominator has simple zeros at both ends of the interval.
//!
//! The substitution `x = m - h cos(phi)` with `m = (x1 + x2) / 2` and
//! `h = (x2 - x1) / 2` turns `dx / sqrt((x - x1)(x2 - x))` into `d phi`, so
//!
//! ```text
//! int_{x1}^{x2} N(x) / sqrt(D(x)) dx = int_0^pi N(x(phi)) / sqrt(rho(x(phi))) d phi,
//! rho(x) = D(x) / ((x - x1)(x2 - x)).
//! ```
//!
//! `rho` is smooth and positive on the closed interval, so the right-hand side
//! is handled by composite Gauss-Legendre panels. Panels whose estimate moves
//! when split in two are refined recursively, which keeps the rule accurate
//! when `N` or `rho` has a nearby singularity outside `[x1, x2]`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_NODES: usize = 128;
pub const MIN_NODES: usize = 8;

/// Points per Gauss-Legendre panel.
const PANEL_ORDER: usize = 16;
/// Relative width of the layer next to each endpoint where `rho` is built from
/// the one-sided derivative of the denominator instead of the 0/0 ratio.
const BOUNDARY_LAYER: f64 = 1e-6;
const REFINE_RELATIVE_TOLERANCE: f64 = 1e-14;
/// Upper bound on panel bisections per integral; reached only when the
/// integrand is too noisy for the requested accuracy.
const MAX_SPLITS: usize = 2000;

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Newton iteration on `P_m` from the Tricomi initial guesses.
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "Gauss-Legendre order must be positive");
        let m = order;
        let mut nodes = vec![0.0; m];
        let mut weights = vec![0.0; m];
        for i in 0..m.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(m, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(m, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[m - 1 - i] = x;
            weights[i] = w;
            weights[m - 1 - i] = w;
        }
        if m % 2 == 1 {
            nodes[m / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        sum * half
    }
}

fn legendre_with_derivative(m: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if m == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=m {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = m as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn cached_rule(order: usize) -> GaussLegendre {
    static PANEL: OnceLock<GaussLegendre> = OnceLock::new();
    if order == PANEL_ORDER {
        PANEL.get_or_init(|| GaussLegendre::new(PANEL_ORDER)).clone()
    } else {
        GaussLegendre::new(order)
    }
}

/// `int_{x1}^{x2} numerator(x) / sqrt(denominator(x)) dx` for a denominator
/// with simple zeros at `x1` and `x2`.
pub struct SingularIntegral<N, D> {
    pub numerator: N,
    pub denominator: D,
    pub x1: f64,
    pub x2: f64,
    pub nodes: usize,
}

impl<N, D> SingularIntegral<N, D>
where
    N: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    pub fn new(numerator: N, denominator: D, x1: f64, x2: f64) -> Self {
        Self {
            numerator,
            denominator,
            x1,
            x2,
            nodes: DEFAULT_NODES,
        }
    }

    pub fn with_nodes(mut self, nodes: usize) -> Self {
        self.nodes = nodes;
        self
    }
}

pub fn integrate_singular<N, D>(problem: &SingularIntegral<N, D>) -> Result<f64>
where
    N: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let (x1, x2) = (problem.x1, problem.x2);
    check_interval(x1, x2, problem.nodes)?;
    let width = x2 - x1;
    let den = &problem.denominator;

    // Inside the layer rho is extrapolated linearly from the ratios at one and
    // two layer widths, which keeps it continuous at the layer edge.
    let layer = BOUNDARY_LAYER * width;
    let ratio = |x: f64, from_left: f64, from_right: f64| -> Result<f64> {
        let d = den(x);
        if !(d > 0.0) {
            return Err(Error::DenominatorNonpositive { x, value: d });
        }
        Ok(d / (from_left * from_right))
    };
    let ratio_at = |x: f64| ratio(x, x - x1, x2 - x);
    let edge_left = ratio_at(x1 + layer)?;
    let edge_right = ratio_at(x2 - layer)?;
    let rho_left = 2.0 * edge_left - ratio_at(x1 + 2.0 * layer)?;
    let rho_right = 2.0 * edge_right - ratio_at(x2 - 2.0 * layer)?;
    if !(rho_left > 0.0) || !(rho_right > 0.0) {
        return Err(Error::DenominatorNonpositive {
            x: if rho_left > 0.0 { x2 } else { x1 },
            value: if rho_left > 0.0 { rho_right } else { rho_left },
        });
    }
    let rho = |x: f64, from_left: f64, from_right: f64| -> Result<f64> {
        if from_left < layer {
            return Ok(rho_left + (edge_left - rho_left) * (from_left / layer));
        }
        if from_right < layer {
            return Ok(rho_right + (edge_right - rho_right) * (from_right / layer));
        }
        ratio(x, from_left, from_right)
    };
    integrate_substituted(x1, x2, problem.nodes, |x, from_left, from_right| {
        // Distances from the rounded abscissa, so that a denominator built from
        // `x - x1` and `x2 - x` sees the same factors as the ratio.
        let (from_left, from_right) = if x > x1 && x < x2 {
            (x - x1, x2 - x)
        } else {
            (from_left, from_right)
        };
        Ok((problem.numerator)(x) / rho(x, from_left, from_right)?.sqrt())
    })
}

/// Same integral when the caller already knows the reduced factor
/// `rho(x) = denominator(x) / ((x - x1)(x2 - x))` in closed form. The
/// numerator is called as `numerator(x, x - x1, x2 - x)`.
pub fn integrate_reduced<N, R>(numerator: N, reduced: R, x1: f64, x2: f64, nodes: usize) -> Result<f64>
where
    N: Fn(f64, f64, f64) -> f64,
    R: Fn(f64) -> f64,
{
    check_interval(x1, x2, nodes)?;
    integrate_substituted(x1, x2, nodes, |x, from_left, from_right| {
        let r = reduced(x);
        if !(r > 0.0) {
            return Err(Error::DenominatorNonpositive { x, value: r });
        }
        Ok(numerator(x, from_left, from_right) / r.sqrt())
    })
}

fn check_interval(x1: f64, x2: f64, nodes: usize) -> Result<()> {
    if !(x1.is_finite() && x2.is_finite() && x1 < x2) {
        return Err(Error::InvalidArgument(format!("singular interval [{x1}, {x2}]")));
    }
    if nodes < MIN_NODES {
        return Err(Error::InvalidArgument(format!(
            "quadrature needs at least {MIN_NODES} nodes (got {nodes})"
        )));
    }
    Ok(())
}

/// Integrates `g(x(phi))` over `phi` in `[0, pi]`. `g` receives `x` along with
/// the exact distances `x - x1` and `x2 - x` of the unrounded abscissa.
fn integrate_substituted<G>(x1: f64, x2: f64, nodes: usize, g: G) -> Result<f64>
where
    G: Fn(f64, f64, f64) -> Result<f64>,
{
    let half = 0.5 * (x2 - x1);
    let integrand = |phi: f64| -> Result<f64> {
        // 1 - cos(phi) = 2 sin^2(phi/2) and 1 + cos(phi) = 2 cos^2(phi/2).
        let s = (0.5 * phi).sin();
        let c = (0.5 * phi).cos();
        let from_left = 2.0 * half * s * s;
        let from_right = 2.0 * half * c * c;
        let x = if from_left <= from_right {
            x1 + from_left
        } else {
            x2 - from_right
        };
        let value = g(x, from_left, from_right)?;
        if !value.is_finite() {
            return Err(Error::NonFinite { t: x });
        }
        Ok(value)
    };

    let order = nodes.min(PANEL_ORDER);
    let panels = nodes.div_ceil(order);
    let rule = cached_rule(order);
    let panel_width = PI / panels as f64;

    let estimate = |a: f64, b: f64| -> Result<f64> {
        let mut err = None;
        let v = rule.integrate(a, b, |phi| match integrand(phi) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                0.0
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(v),
        }
    };
    // A panel carries the two-half estimate and its distance from the
    // one-piece estimate as error indicator.
    let panel = |a: f64, b: f64, whole: f64| -> Result<Panel> {
        let m = 0.5 * (a + b);
        let left = estimate(a, m)?;
        let right = estimate(m, b)?;
        let value = left + right;
        let error = (value - whole).abs();
        if !error.is_finite() {
            return Err(Error::NonFinite { t: m });
        }
        Ok(Panel {
            a,
            b,
            left,
            right,
            value,
            error,
        })
    };

    let mut heap = BinaryHeap::with_capacity(panels + 2 * MAX_SPLITS);
    for k in 0..panels {
        let a = k as f64 * panel_width;
        let b = if k + 1 == panels {
            PI
        } else {
            (k + 1) as f64 * panel_width
        };
        heap.push(panel(a, b, estimate(a, b)?)?);
    }

    for _ in 0..MAX_SPLITS {
        let total: f64 = heap.iter().map(|p| p.value).sum();
        let error: f64 = heap.iter().map(|p| p.error).sum();
        let floor = 8.0 * f64::EPSILON * heap.iter().map(|p| p.value.abs()).sum::<f64>();
        if error <= (REFINE_RELATIVE_TOLERANCE * total.abs()).max(floor) {
            break;
        }
        let worst = heap.pop().expect("at least one panel");
        let m = 0.5 * (worst.a + worst.b);
        heap.push(panel(worst.a, m, worst.left)?);
        heap.push(panel(m, worst.b, worst.right)?);
    }

    // Sum in a fixed order so results do not depend on heap layout.
    let mut parts: Vec<Panel> = heap.into_vec();
    parts.sort_by(|l, r| l.a.total_cmp(&r.a));
    Ok(parts.iter().map(|p| p.value).sum())
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    left: f64,
    right: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    /// Largest error first; ties broken by position for determinism.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}
