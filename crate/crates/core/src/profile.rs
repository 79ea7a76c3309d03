//! The profile curve traced by the ODE itself, independent of the period
//! quadratures, together with curve and mesh exports.
//!
//! In arclength `t` the radius obeys `r'^2 = 1 - r^2 - a r^{2-2n}`. That
//! first-order form loses the sign of `r'` at the turning points, so the path
//! is integrated from its `t`-derivative
//!
//! ```text
//! r''    = -r + a (n-1) r^{1-2n}
//! theta' = sqrt(a) r^{1-n} / (1 - r^2)
//! ```
//!
//! starting at `(r, r', theta) = (r1, 0, 0)`. The first-order equation then
//! survives as a conserved quantity. Along `phi(y, t) = (r y, sqrt(1-r^2) cos theta,
//! sqrt(1-r^2) sin theta)` one finds
//! `|phi_t|^2 = r'^2 + r^2 r'^2 / (1-r^2) + a r^{2-2n} / (1-r^2)`,
//! which equals 1 exactly when the first integral holds. So `t` is arclength
//! and the area of one fundamental portion is `sigma_{n-1} int_0^T r^{n-1} dt`.

use std::io::{self, Write};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{find_roots, period_t, sphere_area, RotationSpec, ShapeParameter};
use crate::numerics::rk4_step;

pub const DEFAULT_STEPS_PER_PERIOD: usize = 4096;
pub const MIN_STEPS_PER_PERIOD: usize = 1000;
/// Relative slack of the radius band `[r1, r2]` before the path is rejected.
pub const RADIUS_BAND_SLACK: f64 = 1e-3;
pub const MIN_CIRCLE_SAMPLES: usize = 16;
pub const DEFAULT_CIRCLE_SAMPLES: usize = 48;
/// Profile rows per fundamental portion in a mesh.
pub const MESH_PROFILE_SAMPLES: usize = 256;
/// Largest fourth coordinate accepted before stereographic projection.
pub const POLE_GUARD: f64 = 1.0 - 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProfileSample {
    pub t: f64,
    pub r: f64,
    pub r_dot: f64,
    pub theta: f64,
}

/// One period of the profile curve on a uniform arclength grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfilePath {
    pub shape: ShapeParameter,
    pub samples: Vec<ProfileSample>,
    /// Period from quadrature; the grid ends exactly here.
    pub period: f64,
}

fn profile_rhs(n: u32, a: f64) -> impl Fn(f64, &[f64]) -> Vec<f64> {
    let nf = n as f64;
    let sqrt_a = a.sqrt();
    move |_, y: &[f64]| {
        let (r, v) = (y[0], y[1]);
        let r_pow = r.powi(1 - n as i32);
        vec![
            v,
            -r + a * (nf - 1.0) * r_pow * r_pow / r,
            sqrt_a * r_pow / (1.0 - r * r),
        ]
    }
}

pub fn integrate_profile(shape: &ShapeParameter, steps_per_period: usize) -> Result<ProfilePath> {
    if steps_per_period < MIN_STEPS_PER_PERIOD {
        return Err(Error::InvalidArgument(format!(
            "profile integration needs at least {MIN_STEPS_PER_PERIOD} steps per period (got {steps_per_period})"
        )));
    }
    let (r1, r2) = find_roots(shape)?.radii();
    let period = period_t(shape)?;
    let lo = (r1 * (1.0 - RADIUS_BAND_SLACK)).max(0.5 * r1);
    let hi = r2 * (1.0 + RADIUS_BAND_SLACK);

    let rhs = profile_rhs(shape.n(), shape.a());
    let h = period / steps_per_period as f64;
    let mut state = vec![r1, 0.0, 0.0];
    let mut samples = Vec::with_capacity(steps_per_period + 1);
    samples.push(ProfileSample {
        t: 0.0,
        r: r1,
        r_dot: 0.0,
        theta: 0.0,
    });
    for k in 0..steps_per_period {
        state = rk4_step(&rhs, k as f64 * h, &state, h);
        let t = if k + 1 == steps_per_period {
            period
        } else {
            (k + 1) as f64 * h
        };
        if state.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite { t });
        }
        if !(state[0] >= lo && state[0] <= hi) {
            return Err(Error::TurningPointStall { t, r: state[0], lo, hi });
        }
        samples.push(ProfileSample {
            t,
            r: state[0],
            r_dot: state[1],
            theta: state[2],
        });
    }
    Ok(ProfilePath {
        shape: *shape,
        samples,
        period,
    })
}

impl ProfilePath {
    pub fn end(&self) -> &ProfileSample {
        self.samples.last().expect("a path holds at least two samples")
    }

    /// Accumulated rotation `theta(T)`.
    pub fn rotation(&self) -> f64 {
        self.end().theta
    }

    /// Sample nearest `t = T/2`, where the radius peaks.
    pub fn half_period_sample(&self) -> &ProfileSample {
        &self.samples[(self.samples.len() - 1) / 2]
    }

    /// Return time to the minimum radius as seen by the integrator: one Newton
    /// step on `r'` from the last sample.
    pub fn ode_period(&self) -> f64 {
        let end = self.end();
        let n = self.shape.n() as f64;
        let a = self.shape.a();
        let accel = -end.r + a * (n - 1.0) * end.r.powf(1.0 - 2.0 * n);
        end.t - end.r_dot / accel
    }

    /// `|phi_t|^2 - 1` at a sample; zero along exact solutions.
    pub fn speed_defect(&self, sample: &ProfileSample) -> f64 {
        let (r, v) = (sample.r, sample.r_dot);
        let n = self.shape.n() as f64;
        let q = 1.0 - r * r;
        v * v + r * r * v * v / q + self.shape.a() * r.powf(2.0 - 2.0 * n) / q - 1.0
    }

    /// `r'^2 - (1 - r^2 - a r^{2-2n})` at a sample.
    pub fn energy_defect(&self, sample: &ProfileSample) -> f64 {
        let (r, v) = (sample.r, sample.r_dot);
        let n = self.shape.n() as f64;
        v * v - (1.0 - r * r - self.shape.a() * r.powf(2.0 - 2.0 * n))
    }
}

/// `sigma_{n-1} int_0^T r^{n-1} dt` by the trapezoid rule, which is spectrally
/// accurate for this periodic integrand.
pub fn fundamental_area(path: &ProfilePath) -> Result<f64> {
    let n = path.shape.n();
    let samples = &path.samples;
    let mut sum = 0.0;
    for w in samples.windows(2) {
        let f0 = w[0].r.powi(n as i32 - 1);
        let f1 = w[1].r.powi(n as i32 - 1);
        sum += 0.5 * (w[1].t - w[0].t) * (f0 + f1);
    }
    Ok(sphere_area(n - 1)? * sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveRow {
    pub t: f64,
    pub r: f64,
    pub theta: f64,
    pub alpha_x: f64,
    pub alpha_y: f64,
}

/// The planar curve `alpha = sqrt(1-r^2) (cos theta, sin theta)` over `copies`
/// periods, each copy advanced by `theta(T)`.
pub fn export_profile_curve(path: &ProfilePath, copies: usize) -> Result<Vec<CurveRow>> {
    if copies < 1 {
        return Err(Error::InvalidArgument("at least one copy is required".into()));
    }
    let per_copy = path.samples.len() - 1;
    let (period, rotation) = (path.period, path.rotation());
    let mut rows = Vec::with_capacity(copies * per_copy + 1);
    for copy in 0..copies {
        let last = if copy + 1 == copies { per_copy + 1 } else { per_copy };
        for sample in &path.samples[..last] {
            let t = sample.t + copy as f64 * period;
            let theta = sample.theta + copy as f64 * rotation;
            let rho = (1.0 - sample.r * sample.r).sqrt();
            rows.push(CurveRow {
                t,
                r: sample.r,
                theta,
                alpha_x: rho * theta.cos(),
                alpha_y: rho * theta.sin(),
            });
        }
    }
    Ok(rows)
}

/// CSV with header `t,r,theta,alpha_x,alpha_y`, 17 significant digits, LF endings.
pub fn write_curve_csv<W: Write>(rows: &[CurveRow], mut out: W) -> io::Result<()> {
    out.write_all(b"t,r,theta,alpha_x,alpha_y\n")?;
    for row in rows {
        writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            row.t, row.r, row.theta, row.alpha_x, row.alpha_y
        )?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeshMetadata {
    pub n: u32,
    pub p: u32,
    pub s: u32,
    pub a: f64,
    pub copies: u32,
}

/// Triangulated surface in `R^3`. Faces index `vertices` from zero.
#[derive(Debug, Clone, PartialEq)]
pub struct MeshArtifact {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<[usize; 3]>,
    pub metadata: MeshMetadata,
}

fn mesh_rows(path: &ProfilePath) -> Vec<usize> {
    let steps = path.samples.len() - 1;
    let count = MESH_PROFILE_SAMPLES.min(steps);
    (0..count).map(|i| (i * steps + count / 2) / count).collect()
}

fn check_mesh_request(path: &ProfilePath, circle_samples: usize) -> Result<()> {
    if path.shape.n() != 2 {
        return Err(Error::DimensionUnsupported(path.shape.n()));
    }
    if circle_samples < MIN_CIRCLE_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "mesh needs at least {MIN_CIRCLE_SAMPLES} circle samples (got {circle_samples})"
        )));
    }
    Ok(())
}

/// Points of the surface in `S^3`, profile-major: `s` copies of the
/// fundamental portion times `circle_samples` points on each circle.
pub fn s3_points(path: &ProfilePath, spec: &RotationSpec, circle_samples: usize) -> Result<Vec<[f64; 4]>> {
    check_mesh_request(path, circle_samples)?;
    let rows = mesh_rows(path);
    let rotation = path.rotation();
    let mut points = Vec::with_capacity(spec.s() as usize * rows.len() * circle_samples);
    for copy in 0..spec.s() {
        for &i in &rows {
            let sample = &path.samples[i];
            let theta = sample.theta + copy as f64 * rotation;
            let rho = (1.0 - sample.r * sample.r).sqrt();
            for j in 0..circle_samples {
                let beta = 2.0 * std::f64::consts::PI * j as f64 / circle_samples as f64;
                points.push([
                    sample.r * beta.cos(),
                    sample.r * beta.sin(),
                    rho * theta.cos(),
                    rho * theta.sin(),
                ]);
            }
        }
    }
    Ok(points)
}

/// Stereographic image `(u1, u2, u3) / (1 - u4)` of the compact surface, as a
/// closed torus grid oriented to enclose positive signed volume.
pub fn export_mesh_s3(path: &ProfilePath, spec: &RotationSpec, circle_samples: usize) -> Result<MeshArtifact> {
    let points = s3_points(path, spec, circle_samples)?;
    let mut vertices = Vec::with_capacity(points.len());
    for u in &points {
        if u[3] > POLE_GUARD {
            return Err(Error::PoleCollision { u4: u[3] });
        }
        let scale = 1.0 / (1.0 - u[3]);
        vertices.push([u[0] * scale, u[1] * scale, u[2] * scale]);
    }

    let rows = points.len() / circle_samples;
    let index = |i: usize, j: usize| (i % rows) * circle_samples + j % circle_samples;
    let mut faces = Vec::with_capacity(2 * points.len());
    for i in 0..rows {
        for j in 0..circle_samples {
            let (v00, v10, v01, v11) = (index(i, j), index(i + 1, j), index(i, j + 1), index(i + 1, j + 1));
            faces.push([v00, v10, v11]);
            faces.push([v00, v11, v01]);
        }
    }
    if signed_volume(&vertices, &faces) < 0.0 {
        for face in &mut faces {
            face.swap(1, 2);
        }
    }
    Ok(MeshArtifact {
        vertices,
        faces,
        metadata: MeshMetadata {
            n: path.shape.n(),
            p: spec.p(),
            s: spec.s(),
            a: path.shape.a(),
            copies: spec.s(),
        },
    })
}

pub fn signed_volume(vertices: &[[f64; 3]], faces: &[[usize; 3]]) -> f64 {
    faces
        .iter()
        .map(|f| {
            let (a, b, c) = (vertices[f[0]], vertices[f[1]], vertices[f[2]]);
            let cross = [
                b[1] * c[2] - b[2] * c[1],
                b[2] * c[0] - b[0] * c[2],
                b[0] * c[1] - b[1] * c[0],
            ];
            (a[0] * cross[0] + a[1] * cross[1] + a[2] * cross[2]) / 6.0
        })
        .sum()
}

pub fn triangle_area(vertices: &[[f64; 3]], face: &[usize; 3]) -> f64 {
    let (a, b, c) = (vertices[face[0]], vertices[face[1]], vertices[face[2]]);
    let u = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
    let v = [c[0] - a[0], c[1] - a[1], c[2] - a[2]];
    let cross = [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ];
    0.5 * (cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]).sqrt()
}

/// Wavefront OBJ: a metadata comment, `v` lines, then 1-based `f` lines.
pub fn write_obj<W: Write>(mesh: &MeshArtifact, mut out: W) -> io::Result<()> {
    let m = &mesh.metadata;
    writeln!(out, "# n={} p={} s={} a={} copies={}", m.n, m.p, m.s, m.a, m.copies)?;
    for v in &mesh.vertices {
        writeln!(out, "v {} {} {}", v[0], v[1], v[2])?;
    }
    for f in &mesh.faces {
        writeln!(out, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{clifford_area, critical_parameter, rotation_angle, solve_shape, summarize};
    use approx::assert_relative_eq;
    use std::collections::HashSet;

    fn path(n: u32, fraction: f64, steps: usize) -> ProfilePath {
        let a0 = critical_parameter(n).unwrap();
        integrate_profile(&ShapeParameter::new(n, fraction * a0).unwrap(), steps).unwrap()
    }

    #[test]
    fn path_starts_at_the_inner_turning_point() {
        let p = path(2, 0.5, 2000);
        let (r1, _) = find_roots(&p.shape).unwrap().radii();
        assert_eq!(
            p.samples[0],
            ProfileSample {
                t: 0.0,
                r: r1,
                r_dot: 0.0,
                theta: 0.0
            }
        );
        assert_eq!(p.samples.len(), 2001);
        assert_eq!(p.end().t, p.period);
    }

    #[test]
    fn path_is_periodic_and_peaks_midway() {
        for n in 2..=4 {
            for fraction in [0.25, 0.5, 0.75] {
                let p = path(n, fraction, DEFAULT_STEPS_PER_PERIOD);
                let (r1, r2) = find_roots(&p.shape).unwrap().radii();
                assert!((p.end().r - r1).abs() < 1e-6, "n={n}");
                assert!(p.end().r_dot.abs() < 1e-6, "n={n}");
                assert!((p.half_period_sample().r - r2).abs() < 1e-6, "n={n}");
            }
        }
    }

    #[test]
    fn rotation_and_period_match_quadrature() {
        for n in 2..=4 {
            for fraction in [0.25, 0.5, 0.75] {
                let p = path(n, fraction, DEFAULT_STEPS_PER_PERIOD);
                let k = rotation_angle(&p.shape).unwrap();
                assert_relative_eq!(p.rotation(), k, max_relative = 1e-6);
                assert_relative_eq!(p.ode_period(), p.period, max_relative = 1e-6);
            }
        }
    }

    #[test]
    fn unit_speed_and_energy_hold_along_the_path() {
        for n in 2..=4 {
            let p = path(n, 0.5, DEFAULT_STEPS_PER_PERIOD);
            for s in &p.samples {
                assert!(p.speed_defect(s).abs() < 1e-8);
                assert!(p.energy_defect(s).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn theta_increases_strictly() {
        let p = path(3, 0.3, 2000);
        assert!(p.samples.windows(2).all(|w| w[1].theta > w[0].theta));
    }

    #[test]
    fn fundamental_area_matches_density() {
        let spec = RotationSpec::new(2, 3).unwrap();
        let summary = summarize(2, &spec).unwrap();
        let shape = solve_shape(2, &spec, 1e-12).unwrap();
        let p = integrate_profile(&shape, DEFAULT_STEPS_PER_PERIOD).unwrap();
        let total = 3.0 * fundamental_area(&p).unwrap();
        assert_relative_eq!(total, summary.w * 2.0, max_relative = 1e-6);
    }

    #[test]
    fn fundamental_area_converges() {
        let coarse = fundamental_area(&path(3, 0.4, 2048)).unwrap();
        let fine = fundamental_area(&path(3, 0.4, 4096)).unwrap();
        assert_relative_eq!(coarse, fine, max_relative = 1e-8);
    }

    #[test]
    fn fundamental_area_near_clifford() {
        // As a -> a0 the portion shrinks onto the Clifford torus while
        // s K(a) -> 2 pi p, so s portions approach p sqrt(2) Clifford areas.
        let n = 2;
        let p = path(n, 1.0 - 1e-6, DEFAULT_STEPS_PER_PERIOD);
        let expected = clifford_area(n, 1).unwrap() * p.rotation() / (2.0 * std::f64::consts::PI);
        assert_relative_eq!(fundamental_area(&p).unwrap(), expected, max_relative = 1e-5);
    }

    #[test]
    fn short_integrations_are_rejected() {
        let shape = ShapeParameter::new(2, 0.1).unwrap();
        assert!(matches!(integrate_profile(&shape, 999), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn curve_closes_after_s_copies() {
        let spec = RotationSpec::new(2, 3).unwrap();
        let shape = solve_shape(2, &spec, 1e-12).unwrap();
        let p = integrate_profile(&shape, DEFAULT_STEPS_PER_PERIOD).unwrap();
        let rows = export_profile_curve(&p, 3).unwrap();
        assert_eq!(rows.len(), 3 * DEFAULT_STEPS_PER_PERIOD + 1);
        let last = rows.last().unwrap();
        assert!((last.theta - 4.0 * std::f64::consts::PI).abs() < 1e-5);
        let (r1, _) = find_roots(&shape).unwrap().radii();
        let first = rows[0];
        assert_eq!((first.t, first.r, first.theta, first.alpha_y), (0.0, r1, 0.0, 0.0));
        assert_eq!(first.alpha_x, (1.0 - r1 * r1).sqrt());
        for row in &rows {
            let on_circle = row.alpha_x.powi(2) + row.alpha_y.powi(2) - (1.0 - row.r * row.r);
            assert!(on_circle.abs() < 1e-12);
        }
        assert!(rows.windows(2).all(|w| w[1].t > w[0].t));
    }

    #[test]
    fn curve_csv_format() {
        let p = path(2, 0.5, 1000);
        let rows = export_profile_curve(&p, 1).unwrap();
        let mut buf = Vec::new();
        write_curve_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(!text.contains('\r'));
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("t,r,theta,alpha_x,alpha_y"));
        let second: Vec<f64> = lines.nth(1).unwrap().split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(second[0], rows[1].t);
        assert_eq!(second[4], rows[1].alpha_y);
        assert_eq!(text.lines().count(), rows.len() + 1);
        assert!(export_profile_curve(&p, 0).is_err());
    }

    fn mesh_fixture() -> (ProfilePath, RotationSpec) {
        let spec = RotationSpec::new(2, 3).unwrap();
        let shape = solve_shape(2, &spec, 1e-12).unwrap();
        (integrate_profile(&shape, 2048).unwrap(), spec)
    }

    #[test]
    fn surface_points_lie_on_the_three_sphere() {
        let (p, spec) = mesh_fixture();
        for u in s3_points(&p, &spec, 24).unwrap() {
            let norm = u.iter().map(|c| c * c).sum::<f64>();
            assert!((norm - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn mesh_is_a_closed_oriented_torus() {
        let (p, spec) = mesh_fixture();
        let mesh = export_mesh_s3(&p, &spec, 24).unwrap();
        assert_eq!(mesh.vertices.len(), 3 * MESH_PROFILE_SAMPLES * 24);
        let mut directed = HashSet::new();
        for f in &mesh.faces {
            assert!(f.iter().all(|&i| i < mesh.vertices.len()));
            for k in 0..3 {
                assert!(
                    directed.insert((f[k], f[(k + 1) % 3])),
                    "edge used twice in one direction"
                );
            }
            assert!(triangle_area(&mesh.vertices, f) > 0.0);
        }
        for &(i, j) in &directed {
            assert!(directed.contains(&(j, i)), "boundary edge");
        }
        let edges = directed.len() / 2;
        let euler = mesh.vertices.len() as i64 - edges as i64 + mesh.faces.len() as i64;
        assert_eq!(euler, 0);
        assert!(signed_volume(&mesh.vertices, &mesh.faces) > 0.0);
    }

    #[test]
    fn mesh_guards() {
        let (p, spec) = mesh_fixture();
        assert!(matches!(export_mesh_s3(&p, &spec, 8), Err(Error::InvalidArgument(_))));
        let p3 = path(3, 0.5, 1000);
        assert!(matches!(
            export_mesh_s3(&p3, &spec, 24),
            Err(Error::DimensionUnsupported(3))
        ));
        let mut corrupt = p.clone();
        for s in &mut corrupt.samples {
            s.r = 1e-6;
            s.theta = std::f64::consts::FRAC_PI_2;
        }
        assert!(matches!(
            export_mesh_s3(&corrupt, &spec, 24),
            Err(Error::PoleCollision { .. })
        ));
    }

    #[test]
    fn obj_layout() {
        let (p, spec) = mesh_fixture();
        let mesh = export_mesh_s3(&p, &spec, 16).unwrap();
        let mut buf = Vec::new();
        write_obj(&mesh, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("# n=2 p=2 s=3 a="));
        let v = text.lines().filter(|l| l.starts_with("v ")).count();
        let f: Vec<&str> = text.lines().filter(|l| l.starts_with("f ")).collect();
        assert_eq!(v, mesh.vertices.len());
        assert_eq!(f.len(), mesh.faces.len());
        let indices: Vec<usize> = f
            .iter()
            .flat_map(|l| l.split_whitespace().skip(1).map(|i| i.parse::<usize>().unwrap()))
            .collect();
        assert_eq!(indices.iter().min(), Some(&1));
        assert_eq!(indices.iter().max(), Some(&v));
    }
}
