use rand::Rng;

use super::{worst, Check, Suite, SuiteReport, Tolerances, TrialErrors};
use crate::arc::KeplerianArc;
use crate::conic::{unifocal_residual, ConicKind, Orientation};
use crate::lambert::{
    arc_on_conic, classify_arc, euler_parabolic_tof, gauss_rescaled, h_min, solve_lambert,
    ChordConfig, FamilyParam, LambertFamily, Sense,
};
use crate::record::Record;
use crate::roots::bisect;
use crate::sampling;

/// Scan of the family: a uniform grid refined geometrically towards both
/// ends, where the transfer time goes to infinity and to zero.
fn scan_points() -> Vec<f64> {
    const UNIFORM: usize = 256;
    let mut xs: Vec<f64> = (1..UNIFORM).map(|k| k as f64 / UNIFORM as f64).collect();
    for k in 3..=9 {
        let e = 10f64.powi(-k);
        xs.push(e);
        xs.push(1.0 - e);
    }
    xs.sort_by(f64::total_cmp);
    xs
}

/// Number of sign changes of `T(x) - dt` over the family, whether the scan
/// brackets `dt`, and whether `T` is strictly decreasing along it.
fn count_crossings(fam: &LambertFamily, dt: f64) -> crate::error::Result<(usize, bool, bool)> {
    let mut times = Vec::new();
    for x in scan_points() {
        times.push(fam.transfer_time(FamilyParam::from_unit(x), 0)?);
    }
    let monotone = times.windows(2).all(|w| w[1] < w[0]);
    let crossings = times.windows(2).filter(|w| (w[0] - dt) * (w[1] - dt) <= 0.0).count();
    let bracketed = times[0] >= dt && times[times.len() - 1] <= dt;
    Ok((crossings, bracketed, monotone))
}

/// Arcs of the two parabolas through the chord ends, both directions.
fn parabolic_arcs(cfg: &ChordConfig) -> crate::error::Result<Vec<KeplerianArc>> {
    let mut out = Vec::new();
    for c in gauss_rescaled(cfg, 0.0)? {
        for o in [Orientation::Ccw, Orientation::Cw] {
            if let Ok(a) = arc_on_conic(c, o, cfg.a, cfg.b, 0) {
                out.push(a);
            }
        }
    }
    Ok(out)
}

/// The elliptic arc at `H = -delta` continuing a parabolic one.
fn continued(parabolic: &KeplerianArc, cfg: &ChordConfig, delta: f64) -> Option<KeplerianArc> {
    let c0 = parabolic.orbit().as_conic()?;
    let e0 = c0.conic.eccentricity_vector();
    gauss_rescaled(cfg, -delta)
        .ok()?
        .into_iter()
        .filter_map(|c| arc_on_conic(c, c0.orientation, cfg.a, cfg.b, 0).ok())
        .min_by(|p, q| {
            let d = |a: &KeplerianArc| {
                (a.orbit().as_conic().map(|c| c.conic.eccentricity_vector()).unwrap_or(e0) - e0)
                    .norm()
            };
            d(p).total_cmp(&d(q))
        })
}

fn euler_reference(arc: &KeplerianArc, cfg: &ChordConfig) -> crate::error::Result<f64> {
    let indirect = classify_arc(arc)?.about_o == Sense::Indirect;
    Ok(euler_parabolic_tof(cfg, indirect))
}

/// Uniqueness and accuracy of the solver, the fixed-energy construction,
/// and the parabolic limit.
pub fn lambert_suite(trials: usize, seed: u64, tol: &Tolerances) -> SuiteReport {
    let mut errors = TrialErrors::default();
    let mut table = Vec::new();

    let (mut residual, mut not_unique, mut not_monotone, mut wrong_dir) = (0.0f64, 0, 0, 0);
    let mut unbracketed = 0usize;
    for i in 0..trials {
        let mut rng = sampling::trial_rng(seed, i as u64);
        let cfg = sampling::endpoints(&mut rng);
        let dt = sampling::log_uniform(&mut rng, 0.05, 50.0);
        for dir in [Orientation::Ccw, Orientation::Cw] {
            let fam = match LambertFamily::new(&cfg, dir) {
                Ok(f) => f,
                Err(e) => {
                    errors.record(i, "family", e);
                    continue;
                }
            };
            match count_crossings(&fam, dt) {
                Ok((n, bracketed, mono)) => {
                    not_unique += usize::from(bracketed && n != 1);
                    unbracketed += usize::from(!bracketed);
                    not_monotone += usize::from(!mono);
                }
                Err(e) => errors.record(i, "scan", e),
            }
            match solve_lambert(cfg.a, cfg.b, dt, dir, 0) {
                Ok(arc) => {
                    worst(&mut residual, (arc.time_of_flight() - dt).abs() / dt.max(1.0));
                    let o = arc.orbit().as_conic().map(|c| c.orientation);
                    wrong_dir += usize::from(o != Some(dir));
                }
                Err(e) => errors.record(i, "solve", e),
            }
        }
    }

    let (mut through, mut identity, mut hmin_loc, mut counts) = (0.0f64, 0.0f64, 0.0f64, 0usize);
    for i in 0..trials {
        let mut rng = sampling::trial_rng(seed ^ 0x6a55, i as u64);
        let cfg = sampling::endpoints(&mut rng);
        let hm = h_min(&cfg);
        // energies from just above the minimum to well into the hyperbolic range
        let h = hm + sampling::log_uniform(&mut rng, 1e-6, 10.0) * hm.abs();
        match gauss_rescaled(&cfg, h) {
            Ok(conics) => {
                counts += usize::from(conics.is_empty());
                for c in conics {
                    for p in [cfg.a, cfg.b] {
                        worst(&mut through, unifocal_residual(&c, p).abs() / p.norm());
                    }
                    let e2m1 = c.eccentricity_vector().norm_squared() - 1.0;
                    let rhs = 2.0 * h * c.gamma();
                    worst(&mut identity, (e2m1 - rhs).abs() / 1f64.max(rhs.abs()));
                }
            }
            Err(e) => errors.record(i, "gauss", e),
        }
        // 0 solutions below h_min, 2 above; locate the switch
        let count = |x: f64| gauss_rescaled(&cfg, x).map(|v| v.len()).unwrap_or(usize::MAX);
        let (lo, hi) = (hm * (1.0 + 1e-3), hm * (1.0 - 1e-3));
        let (n_lo, n_hi) = (count(lo), count(hi));
        if n_lo != 0 || n_hi != 2 {
            counts += 1;
            continue;
        }
        let switch = bisect(|x| if count(x) == 0 { -1.0 } else { 1.0 }, lo, hi, 200);
        worst(&mut hmin_loc, (switch - hm).abs() / hm.abs());
        let at = count(hm);
        counts += usize::from(!(1..=2).contains(&at));
    }

    let (mut euler, mut rate_dev) = (0.0f64, 0.0f64);
    let deltas = [1e-2, 1e-3, 1e-4];
    for i in 0..trials {
        let mut rng = sampling::trial_rng(seed ^ 0xe01e, i as u64);
        let cfg = sampling::endpoints(&mut rng);
        let arcs = match parabolic_arcs(&cfg) {
            Ok(a) => a,
            Err(e) => {
                errors.record(i, "parabolas", e);
                continue;
            }
        };
        for arc in &arcs {
            let t_e = match euler_reference(arc, &cfg) {
                Ok(t) => t,
                Err(e) => {
                    errors.record(i, "classify", e);
                    continue;
                }
            };
            worst(&mut euler, (arc.time_of_flight() - t_e).abs() / t_e);
        }
        // first-order approach from the elliptic side, on a subset
        if i % 10 != 0 {
            continue;
        }
        let pick = rng.random_range(0..arcs.len().max(1));
        let Some(arc) = arcs.get(pick) else { continue };
        let Ok(t_e) = euler_reference(arc, &cfg) else { continue };
        let mut errs = Vec::new();
        for &d in &deltas {
            match continued(arc, &cfg, d) {
                Some(a) if a.kind() == Some(ConicKind::Ellipse) => {
                    errs.push((a.time_of_flight() - t_e).abs())
                }
                _ => errors.record(i, "continuation", "no elliptic neighbour"),
            }
        }
        if errs.len() == deltas.len() {
            for w in 0..deltas.len() - 1 {
                let rate = (errs[w] / errs[w + 1]).ln() / (deltas[w] / deltas[w + 1]).ln();
                worst(&mut rate_dev, (rate - 1.0).abs());
                table.push(
                    Record::new()
                        .with("suite", "lambert")
                        .with("trial", i)
                        .with("delta", deltas[w + 1])
                        .with("tof_error", errs[w + 1])
                        .with("observed_rate", rate),
                );
            }
        }
    }

    let checks = vec![
        Check::holds("unique_sub_revolution_arc", not_unique, format!("{unbracketed} outside the scanned range")),
        Check::holds("transfer_time_monotone", not_monotone, String::new()),
        Check::holds("solution_direction", wrong_dir, String::new()),
        Check::below("solver_residual", residual, tol.get("lambert_residual")),
        Check::below("gauss_through_endpoints", through, tol.get("gauss_residual")),
        Check::below("gauss_energy_identity", identity, tol.get("gauss_residual")),
        Check::holds("gauss_solution_count", counts, String::new()),
        Check::below("hmin_location", hmin_loc, tol.get("hmin_location")),
        Check::below("euler_parabolic", euler, tol.get("euler")),
        Check::below("euler_first_order_rate", rate_dev, 0.1)
            .with_detail("|observed rate - 1| as H -> 0-".into()),
        errors.check(),
    ];
    SuiteReport {
        suite: Suite::Lambert,
        trials,
        seed,
        checks,
        table,
    }
}
