use std::f64::consts::{PI, TAU};

use rand::Rng;

use super::{worst, Check, Suite, SuiteReport, Tolerances, TrialErrors};
use crate::conic::RectilinearOrbit;
use crate::kepler::{period, rectilinear_position, RadialSense};
use crate::oracle::propagate;
use crate::sampling::{self, Regime};
use crate::vec2::Vec2;

/// Oracle closure on random arcs, and the radial motion laws.
pub fn conservation_suite(trials: usize, seed: u64, tol: &Tolerances) -> SuiteReport {
    let mut errors = TrialErrors::default();
    let mut pos: f64 = 0.0;
    let mut drift: f64 = 0.0;
    for i in 0..trials {
        let mut rng = sampling::trial_rng(seed, i as u64);
        let arc = match sampling::arc(&mut rng, Regime::Mixed) {
            Ok(a) => a,
            Err(e) => {
                errors.record(i, "arc", e);
                continue;
            }
        };
        let start = match arc.start_state() {
            Ok(s) => s,
            Err(e) => {
                errors.record(i, "state", e);
                continue;
            }
        };
        match propagate(&start, arc.time_of_flight(), 1e-13) {
            Ok(res) => {
                let end = arc.end();
                worst(&mut pos, (res.final_state.q - end).norm() / end.norm());
                let h = arc.energy().abs().max(1.0 / start.radius());
                worst(&mut drift, res.max_energy_drift / h);
            }
            Err(e) => errors.record(i, "propagate", e),
        }
    }

    let r_tol = tol.get("rectilinear");
    let cycloid = RectilinearOrbit::new(Vec2::X, -0.5, 0.0).expect("valid orbit");
    let period_err = (period(-0.5).map(|p| p - TAU).unwrap_or(f64::NAN))
        .abs()
        .max((cycloid.elapsed(0.0, TAU) - TAU).abs())
        / TAU;
    let half_err = (cycloid.time_at(PI) - PI).abs() / PI;

    // r(t) along r = 1 - cos u, t = u - sin u, over two bounces
    let mut path: f64 = 0.0;
    for k in 0..=4000 {
        let u = 4.0 * PI * k as f64 / 4000.0;
        let t = u - u.sin();
        match rectilinear_position(&cycloid, t) {
            Ok((r, _)) => worst(&mut path, (r - (1.0 - u.cos())).abs()),
            Err(e) => errors.record(k, "cycloid", e),
        }
    }

    // collision crossings at random energies: r even in time about the
    // collision, falling before it and rising after it
    let mut crossing: f64 = 0.0;
    let mut at_collision: f64 = 0.0;
    let mut sense_flips = 0usize;
    for i in 0..trials {
        let mut rng = sampling::trial_rng(seed ^ 0x5eed, i as u64);
        let h = match i % 3 {
            0 => -sampling::log_uniform(&mut rng, 0.05, 5.0),
            1 => 0.0,
            _ => sampling::log_uniform(&mut rng, 0.05, 5.0),
        };
        // dyadic epochs and offsets keep t_c +- dt exact
        let t_c = rng.random_range(-80..=80) as f64 / 8.0;
        let ray = Vec2::from_angle(rng.random_range(0.0..TAU));
        let orbit = match RectilinearOrbit::new(ray, h, t_c) {
            Ok(o) => o,
            Err(e) => {
                errors.record(i, "orbit", e);
                continue;
            }
        };
        let reach = if h < 0.0 {
            0.9 * PI * (-2.0 * h).powf(-1.5)
        } else {
            1.0
        };
        for j in 1..=20 {
            let dt = reach * j as f64 / 20.0;
            match (
                rectilinear_position(&orbit, t_c - dt),
                rectilinear_position(&orbit, t_c + dt),
            ) {
                (Ok((r0, s0)), Ok((r1, s1))) => {
                    worst(&mut crossing, (r0 - r1).abs() / r0.max(r1));
                    if !(s0 == RadialSense::Inward && s1 == RadialSense::Outward) {
                        sense_flips += 1;
                    }
                }
                (Err(e), _) | (_, Err(e)) => errors.record(i, "crossing", e),
            }
        }
        // the radius is continuous through the collision itself
        for tiny in [2f64.powi(-40), 2f64.powi(-30), 2f64.powi(-20)] {
            if let (Ok((r0, _)), Ok((r1, _))) = (
                rectilinear_position(&orbit, t_c - tiny),
                rectilinear_position(&orbit, t_c + tiny),
            ) {
                worst(&mut crossing, (r0 - r1).abs() / r0.max(r1));
            }
        }
        match rectilinear_position(&orbit, t_c) {
            Ok((r, _)) => worst(&mut at_collision, r),
            Err(e) => errors.record(i, "collision", e),
        }
    }

    let checks = vec![
        Check::below("oracle_position", pos, tol.get("oracle_position")),
        Check::below("oracle_energy_drift", drift, tol.get("oracle_position")),
        Check::below("rectilinear_period", period_err, r_tol),
        Check::below("rectilinear_half_period", half_err, r_tol),
        Check::below("rectilinear_cycloid_path", path, r_tol),
        Check::below("collision_symmetry", crossing, r_tol),
        Check::below("collision_radius", at_collision, r_tol),
        Check::holds("collision_sense_flip", sense_flips, String::new()),
        errors.check(),
    ];
    SuiteReport {
        suite: Suite::Conservation,
        trials,
        seed,
        checks,
        table: Vec::new(),
    }
}
