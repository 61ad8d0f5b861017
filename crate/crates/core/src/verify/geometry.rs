use std::f64::consts::TAU;

use rand::Rng;

use super::{worst, Check, Suite, SuiteReport, Tolerances, TrialErrors};
use crate::action::{bisector_tangent_check, jacobi_velocity_decomposition};
use crate::affine::{affine_focus_property_check, geometric_progression_check, AffineMap2D};
use crate::conic::UnifocalConic;
use crate::cycle::affine_map_o12;
use crate::error::Error;
use crate::sampling::{self, Regime};
use crate::vec2::Vec2;

/// Length of the focal chord along `d`, from the two intersections of the
/// line with `r = e.p + gamma`.
fn focal_chord(conic: &UnifocalConic, d: Vec2) -> f64 {
    let k = conic.eccentricity_vector().dot(d);
    conic.gamma() / (1.0 - k) + conic.gamma() / (1.0 + k)
}

/// Geometric progression of chords, the tangent and velocity constructions
/// on random arcs, and the affine focus property on constructed maps.
pub fn geometry_suite(trials: usize, seed: u64, tol: &Tolerances) -> SuiteReport {
    let mut errors = TrialErrors::default();

    let (mut progression, mut chord_oracle) = (0.0f64, 0.0f64);
    for i in 0..trials {
        let mut rng = sampling::trial_rng(seed, i as u64);
        let c = sampling::ellipse(&mut rng);
        let d = Vec2::from_angle(rng.random_range(0.0..TAU));
        match geometric_progression_check(&c, d) {
            Ok((f, g, h)) => {
                worst(&mut progression, (g * g - f * h).abs() / (g * g));
                worst(&mut chord_oracle, (f - focal_chord(&c, d)).abs() / f);
            }
            Err(e) => errors.record(i, "progression", e),
        }
    }

    let (mut bisector, mut jacobi, mut degenerate) = (0.0f64, 0.0f64, 0usize);
    for i in 0..trials {
        let mut rng = sampling::trial_rng(seed ^ 0xb15e, i as u64);
        let arc = match sampling::arc(&mut rng, Regime::Mixed) {
            Ok(a) => a,
            Err(e) => {
                errors.record(i, "arc", e);
                continue;
            }
        };
        match bisector_tangent_check(&arc) {
            Ok(v) => worst(&mut bisector, v.line_distance.max(v.angle_mismatch)),
            Err(Error::ParallelTangents) => degenerate += 1,
            Err(e) => errors.record(i, "bisector", e),
        }
        match jacobi_velocity_decomposition(&arc) {
            Ok(j) => worst(&mut jacobi, j.closure_residual.max(j.chord_sine)),
            Err(Error::AntipodalDirections) => degenerate += 1,
            Err(e) => errors.record(i, "jacobi", e),
        }
    }

    // Three constructions: the shear of the vertical branch onto an arc of
    // its cycle, generic maps fixing a random line through the center, and
    // stretches across the axis of a conic.
    let (mut one_sided, mut both, mut neither) = (0usize, 0usize, 0usize);
    for i in 0..trials {
        let mut rng = sampling::trial_rng(seed ^ 0xaff1, i as u64);
        let (conic, map, line) = match i % 3 {
            0 => {
                let phi = rng.random_range(0.05..TAU / 2.0 - 0.05);
                let m = rng.random_range(-0.9..0.9);
                let n = sampling::log_uniform(&mut rng, 0.2, 3.0);
                let sigma = UnifocalConic::new(0.0, m, n).expect("positive gamma");
                (sigma, affine_map_o12(phi, m, n).linear(), Vec2::X)
            }
            1 => {
                let d = Vec2::from_angle(rng.random_range(0.0..TAU));
                let shear = rng.random_range(-1.5..1.5);
                let jac = sampling::log_uniform(&mut rng, 0.2, 3.0);
                let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
                let map = AffineMap2D::fixing_line(Vec2::ZERO, d, shear, sign * jac);
                (sampling::conic(&mut rng), map, d)
            }
            _ => {
                let c = sampling::conic(&mut rng);
                let d = c.periapsis_direction();
                let jac = sampling::log_uniform(&mut rng, 0.2, 3.0);
                (c, AffineMap2D::fixing_line(Vec2::ZERO, d, 0.0, jac), d)
            }
        };
        match affine_focus_property_check(&conic, &map, line) {
            Ok(v) => {
                one_sided += usize::from(!v.consistent());
                if v.semiparameter_scaled && v.focus_on_line {
                    both += 1;
                } else if !v.semiparameter_scaled && !v.focus_on_line {
                    neither += 1;
                }
            }
            Err(e) => errors.record(i, "focus property", e),
        }
    }

    let checks = vec![
        Check::below("geometric_progression", progression, tol.get("progression")),
        Check::below("focal_chord_oracle", chord_oracle, tol.get("progression")),
        Check::below("bisector_tangent", bisector, tol.get("bisector"))
            .with_detail(format!("{degenerate} degenerate arcs skipped")),
        Check::below("jacobi_decomposition", jacobi, tol.get("bisector")),
        Check::holds("affine_focus_biconditional", one_sided, format!("{both} with both, {neither} with neither")),
        errors.check(),
    ];
    SuiteReport {
        suite: Suite::Geometry,
        trials,
        seed,
        checks,
        table: Vec::new(),
    }
}
