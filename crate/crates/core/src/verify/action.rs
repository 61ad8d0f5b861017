use super::{worst, Check, Suite, SuiteReport, Tolerances, TrialErrors};
use crate::action::{verify_hamilton_dwdh, ActionReport};
use crate::cycle::{cycle_from_arc, cycle_invariant_report};
use crate::lambert::{h_min, ChordConfig};
use crate::record::Record;
use crate::sampling::{self, Regime};

/// Energy steps of the convergence study; the residual is judged at the last.
pub const HAMILTON_STEPS: [f64; 3] = [1e-3, 1e-4, 1e-5];

/// Arcs closer than this to the minimal energy of their chord are left out
/// of the finite-difference checks: there the two branches through the
/// ends merge and `dt(H)` has a square-root singularity.
pub const FOLD_MARGIN: f64 = 1e-2;

/// `dw/dH = dt` by central differences, its order, the identity between
/// the two actions and the constancy of `w` along cycles.
pub fn action_suite(trials: usize, seed: u64, tol: &Tolerances) -> SuiteReport {
    let mut errors = TrialErrors::default();
    let mut table = Vec::new();
    let (mut hamilton, mut identity, mut constancy) = (0.0f64, 0.0f64, 0.0f64);
    let (mut order_dev, mut shrunk, mut near_fold, mut order_arcs) = (0.0f64, 0usize, 0usize, 0usize);
    for i in 0..trials {
        let mut rng = sampling::trial_rng(seed, i as u64);
        let arc = match sampling::arc(&mut rng, Regime::Mixed) {
            Ok(a) => a,
            Err(e) => {
                errors.record(i, "arc", e);
                continue;
            }
        };
        let w = match ActionReport::of(&arc) {
            Ok(r) => {
                worst(&mut identity, r.identity_residual());
                r.w
            }
            Err(e) => {
                errors.record(i, "actions", e);
                continue;
            }
        };
        let mut residuals = Vec::new();
        let margin = ChordConfig::new(arc.start(), arc.end()).map(|c| arc.energy() - h_min(&c));
        let steps: &[f64] = if matches!(margin, Ok(m) if m >= FOLD_MARGIN) {
            &HAMILTON_STEPS
        } else {
            near_fold += 1;
            &[]
        };
        for &h in steps {
            match verify_hamilton_dwdh(&arc, h) {
                Ok(c) => {
                    shrunk += usize::from(c.step != h);
                    residuals.push(c.residual);
                    table.push(
                        Record::new()
                            .with("suite", "action")
                            .with("trial", i)
                            .with("step", c.step)
                            .with("dt", c.dt)
                            .with("dw_dh", c.dw_dh)
                            .with("residual", c.residual),
                    );
                }
                Err(e) => errors.record(i, "hamilton", e),
            }
        }
        if let Some(&last) = residuals.get(HAMILTON_STEPS.len() - 1) {
            worst(&mut hamilton, last);
            // order from the two coarser steps, on arcs where truncation
            // still dominates rounding in w(H + h) - w(H - h) at the finer one
            let floor = 100.0 * f64::EPSILON * w.abs() / (HAMILTON_STEPS[1] * arc.time_of_flight());
            if residuals[1] > floor {
                order_arcs += 1;
                worst(&mut order_dev, ((residuals[0] / residuals[1]).log10() - 2.0).abs());
            }
        }
        if i % 5 == 0 {
            match cycle_from_arc(&arc).and_then(|c| {
                if c.is_flat() {
                    Err(crate::error::Error::Precondition("flat cycle".into()))
                } else {
                    cycle_invariant_report(&c, 12)
                }
            }) {
                Ok(r) => worst(&mut constancy, r.action),
                Err(e) => errors.record(i, "cycle", e),
            }
        }
    }
    let checks = vec![
        Check::below("hamilton_residual", hamilton, tol.get("hamilton_residual"))
            .with_detail(format!("{near_fold} arcs within {FOLD_MARGIN} of the minimal energy skipped")),
        Check::below("hamilton_order", order_dev, 0.2)
            .with_detail(format!("|observed order - 2| between the two coarser steps, {order_arcs} arcs above the rounding floor")),
        Check::holds("hamilton_step_reduced", shrunk, "stencil clipped at the minimal energy".into()),
        Check::below("action_identity", identity, tol.get("action_identity")),
        Check::below("action_constancy", constancy, tol.get("action_constancy")),
        errors.check(),
    ];
    SuiteReport {
        suite: Suite::Action,
        trials,
        seed,
        checks,
        table,
    }
}
