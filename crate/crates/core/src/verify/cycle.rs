use super::{worst, Check, Suite, SuiteReport, Tolerances, TrialErrors};
use crate::cycle::{cycle_closure_check, cycle_from_arc, cycle_invariant_report};
use crate::sampling::{self, Regime};

/// Samples along each cycle (plus the refinement towards its ends).
pub const CYCLE_SAMPLES: usize = 20;
/// Continuation steps for one turn around a cycle.
pub const CLOSURE_STEPS: usize = 720;

/// Invariance of the Lambert data along random cycles, their radial ends,
/// and closure of the continuation around them.
pub fn cycle_suite(trials: usize, seed: u64, tol: &Tolerances) -> SuiteReport {
    let mut errors = TrialErrors::default();
    let (mut tof, mut chord, mut radii, mut energy) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let (mut momentum, mut area, mut limits, mut closure) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let (mut class_breaks, mut flat) = (0usize, 0usize);
    for i in 0..trials {
        let mut rng = sampling::trial_rng(seed, i as u64);
        let cycle = match sampling::arc(&mut rng, Regime::Mixed).and_then(|a| cycle_from_arc(&a)) {
            Ok(c) => c,
            Err(e) => {
                errors.record(i, "seed", e);
                continue;
            }
        };
        if cycle.is_flat() {
            flat += 1;
            continue;
        }
        match cycle_invariant_report(&cycle, CYCLE_SAMPLES) {
            Ok(r) => {
                worst(&mut tof, r.time_of_flight);
                worst(&mut chord, r.chord);
                worst(&mut radii, r.radii_sum);
                worst(&mut energy, r.energy);
                worst(&mut momentum, r.scaled_angular_momentum);
                worst(&mut area, r.scaled_area);
                worst(&mut limits, r.limit_deviation());
                class_breaks += usize::from(!r.classes_agree);
                for (end, t) in &r.limits {
                    if let Err(e) = t {
                        errors.record(i, &format!("{end:?}"), e);
                    }
                }
            }
            Err(e) => errors.record(i, "report", e),
        }
        match cycle_closure_check(&cycle, CLOSURE_STEPS) {
            Ok(c) => {
                worst(&mut closure, c.closure_error.max(c.closure_time_error));
                class_breaks += usize::from(!c.classes_agree);
            }
            Err(e) => errors.record(i, "closure", e),
        }
    }
    let geo = tol.get("geometric_invariance");
    let checks = vec![
        Check::below("time_of_flight", tof, tol.get("tof_invariance")),
        Check::below("chord", chord, geo),
        Check::below("radii_sum", radii, geo),
        Check::below("energy", energy, geo),
        Check::below("scaled_angular_momentum", momentum, tol.get("sine_scaling")),
        Check::below("scaled_area", area, tol.get("sine_scaling")),
        Check::below("radial_limits", limits, tol.get("tof_invariance")),
        Check::below("closure", closure, tol.get("closure")),
        Check::holds("one_class_per_cycle", class_breaks, String::new()),
        Check::holds("flat_cycles_skipped", flat, "seed chords through the center".into()),
        errors.check(),
    ];
    SuiteReport {
        suite: Suite::Cycle,
        trials,
        seed,
        checks,
        table: Vec::new(),
    }
}
