//! Numerical propagation of `q'' = -q/r^3`, independent of the analytic
//! time laws, for differential testing.
//!
//! The integrator is Gragg-Bulirsch-Stoer extrapolation of the modified
//! midpoint rule. It runs in the Sundman time `tau` with `dt = r dtau`, so
//! step sizes shrink automatically at pericenter. Alongside the state it
//! integrates time, the swept area and the Maupertuis action `int |v|^2 dt`.

use crate::conic::{angular_momentum, energy, StateVector};
use crate::error::{Error, Result};
use crate::vec2::Vec2;

/// Radius below which the trajectory is treated as a collision.
pub const COLLISION_GUARD: f64 = 1e-8;

const DIM: usize = 7;
const ROWS: usize = 8;
const MAX_STEPS: usize = 2_000_000;

type Y = [f64; DIM];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationResult {
    pub final_state: StateVector,
    pub steps: usize,
    /// Largest `|H(t) - H(0)|` over the accepted steps.
    pub max_energy_drift: f64,
    /// Smallest radius seen at step boundaries.
    pub min_radius: f64,
    /// Area swept by the radius vector, `int (x vy - y vx)/2 dt`.
    pub swept_area: f64,
    /// `int |v|^2 dt`.
    pub action: f64,
}

fn deriv(y: &Y) -> Y {
    let (x, yy, vx, vy) = (y[0], y[1], y[2], y[3]);
    let r = x.hypot(yy);
    let r2 = r * r;
    let v2 = vx * vx + vy * vy;
    [
        r * vx,
        r * vy,
        -x / r2,
        -yy / r2,
        r,
        0.5 * r * (x * vy - yy * vx),
        r * v2,
    ]
}

fn add_scaled(a: &Y, k: f64, b: &Y) -> Y {
    let mut out = *a;
    for i in 0..DIM {
        out[i] += k * b[i];
    }
    out
}

fn modified_midpoint(y0: &Y, h: f64, n: usize) -> Y {
    let hs = h / n as f64;
    let mut z0 = *y0;
    let mut z1 = add_scaled(y0, hs, &deriv(y0));
    for _ in 1..n {
        let z2 = add_scaled(&z0, 2.0 * hs, &deriv(&z1));
        z0 = z1;
        z1 = z2;
    }
    let f = deriv(&z1);
    let mut out = [0.0; DIM];
    for i in 0..DIM {
        out[i] = 0.5 * (z0[i] + z1[i] + hs * f[i]);
    }
    out
}

/// One extrapolated step and its error estimate (scaled max-norm).
fn gbs_step(y: &Y, h: f64, tol: f64) -> (Y, f64) {
    let mut table: [[Y; ROWS]; ROWS] = [[[0.0; DIM]; ROWS]; ROWS];
    let seq = |j: usize| 2 * (j + 1);
    for j in 0..ROWS {
        table[j][0] = modified_midpoint(y, h, seq(j));
        for k in 1..=j {
            let ratio = seq(j) as f64 / seq(j - k) as f64;
            let den = ratio * ratio - 1.0;
            let mut t = [0.0; DIM];
            for i in 0..DIM {
                t[i] = table[j][k - 1][i] + (table[j][k - 1][i] - table[j - 1][k - 1][i]) / den;
            }
            table[j][k] = t;
        }
    }
    let best = table[ROWS - 1][ROWS - 1];
    let prev = table[ROWS - 1][ROWS - 2];
    let mut err: f64 = 0.0;
    // Error control on position, velocity and time only.
    for i in 0..5 {
        let sc = tol * (1.0 + y[i].abs().max(best[i].abs()));
        err = err.max((best[i] - prev[i]).abs() / sc);
    }
    (best, err)
}

fn to_state(y: &Y) -> StateVector {
    StateVector {
        q: Vec2::new(y[0], y[1]),
        v: Vec2::new(y[2], y[3]),
        t: y[4],
    }
}

/// Propagates `initial` forward by `dt`.
pub fn propagate(initial: &StateVector, dt: f64, tol: f64) -> Result<PropagationResult> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::InvalidInput(format!("dt must be positive, got {dt}")));
    }
    if !(1e-14..=1e-6).contains(&tol) {
        return Err(Error::InvalidInput(format!("tol must be in [1e-14, 1e-6], got {tol}")));
    }
    let r0 = initial.q.norm();
    if !(r0 > 0.0) {
        return Err(Error::InvalidInput("initial state at the origin".into()));
    }
    let t_end = initial.t + dt;
    let h0 = energy(initial);
    let mut y: Y = [
        initial.q.x,
        initial.q.y,
        initial.v.x,
        initial.v.y,
        initial.t,
        0.0,
        0.0,
    ];
    let mut min_radius = r0;
    let mut drift: f64 = 0.0;
    let mut steps = 0;
    // Tau runs at roughly the eccentric-anomaly rate times sqrt(a).
    let mut h = (0.25 * (dt / r0)).min(0.5 * r0.sqrt().max(1e-3));

    for _ in 0..MAX_STEPS {
        let (y_new, err) = gbs_step(&y, h, tol);
        let finite = y_new.iter().all(|v| v.is_finite());
        if !finite || err > 1.0 {
            let shrink = if finite {
                (0.94 * err.powf(-1.0 / (2 * ROWS - 1) as f64)).clamp(0.1, 0.9)
            } else {
                0.25
            };
            h *= shrink;
            if h < 1e-300 {
                return Err(Error::NonConvergence {
                    what: "oracle step size control",
                    iterations: steps,
                });
            }
            continue;
        }
        let grow = (0.94 * err.max(1e-30).powf(-1.0 / (2 * ROWS - 1) as f64)).clamp(0.2, 4.0);

        if y_new[4] >= t_end {
            let y_end = finish_at(&y, h, y_new[4], t_end, tol)?;
            steps += 1;
            let r_end = y_end[0].hypot(y_end[1]);
            min_radius = min_radius.min(r_end);
            if min_radius < COLLISION_GUARD {
                return Err(Error::CollisionEncountered);
            }
            let fs = to_state(&y_end);
            drift = drift.max((energy(&fs) - h0).abs());
            return Ok(PropagationResult {
                final_state: StateVector { t: t_end, ..fs },
                steps,
                max_energy_drift: drift,
                min_radius,
                swept_area: y_end[5],
                action: y_end[6],
            });
        }

        y = y_new;
        steps += 1;
        let r = y[0].hypot(y[1]);
        min_radius = min_radius.min(r);
        if min_radius < COLLISION_GUARD {
            return Err(Error::CollisionEncountered);
        }
        drift = drift.max((energy(&to_state(&y)) - h0).abs());
        h *= grow;
    }
    Err(Error::NonConvergence {
        what: "oracle propagation",
        iterations: MAX_STEPS,
    })
}

/// Secant search for the Sundman step that lands on `t_end`.
fn finish_at(y: &Y, h_over: f64, t_over: f64, t_end: f64, tol: f64) -> Result<Y> {
    let t0 = y[4];
    let (mut h_a, mut t_a) = (0.0, t0);
    let (mut h_b, mut t_b) = (h_over, t_over);
    let mut best = *y;
    for _ in 0..40 {
        let h = if t_b != t_a {
            h_a + (t_end - t_a) * (h_b - h_a) / (t_b - t_a)
        } else {
            h_b
        };
        let (yh, _) = gbs_step(y, h, tol);
        best = yh;
        let miss = yh[4] - t_end;
        if miss.abs() <= 4.0 * f64::EPSILON * t_end.abs().max(t_end - t0) {
            break;
        }
        h_a = h_b;
        t_a = t_b;
        h_b = h;
        t_b = yh[4];
    }
    // Remove the last rounding-level time mismatch with one Euler correction.
    let miss = best[4] - t_end;
    if miss != 0.0 {
        let f = deriv(&best);
        let r = best[0].hypot(best[1]);
        let dtau = -miss / r;
        best = add_scaled(&best, dtau, &f);
    }
    Ok(best)
}

/// Area swept by the radius vector over `dt`, `C dt / 2`.
pub fn sweep_area(initial: &StateVector, dt: f64) -> Result<f64> {
    let c = angular_momentum(initial);
    if c == 0.0 {
        return Err(Error::ZeroAngularMomentum);
    }
    Ok(0.5 * c * dt)
}

/// Swept area by quadrature along the oracle trajectory.
pub fn sweep_area_by_quadrature(initial: &StateVector, dt: f64, tol: f64) -> Result<f64> {
    if angular_momentum(initial) == 0.0 {
        return Err(Error::ZeroAngularMomentum);
    }
    Ok(propagate(initial, dt, tol)?.swept_area)
}

/// Time reversal: same position, opposite velocity.
pub fn reversed(state: &StateVector) -> StateVector {
    StateVector {
        q: state.q,
        v: -state.v,
        t: state.t,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    fn st(x: f64, y: f64, vx: f64, vy: f64) -> StateVector {
        StateVector::new(Vec2::new(x, y), Vec2::new(vx, vy), 0.0).unwrap()
    }

    #[test]
    fn circle_closes_after_one_period() {
        let s = st(1.0, 0.0, 0.0, 1.0);
        let res = propagate(&s, TAU, 1e-13).unwrap();
        assert!((res.final_state.q - s.q).norm() < 1e-10);
        assert!((res.final_state.v - s.v).norm() < 1e-10);
        assert!((res.final_state.t - TAU).abs() < 1e-15);
        assert!((res.swept_area - PI).abs() < 1e-10);
        assert!((res.action - TAU).abs() < 1e-10);
    }

    #[test]
    fn eccentric_orbit_closes() {
        let s = st(1.0, 0.0, 0.0, 0.5);
        let t = crate::kepler::period(-0.875).unwrap();
        let res = propagate(&s, t, 1e-13).unwrap();
        assert!((res.final_state.q - s.q).norm() < 1e-9);
        assert!((res.final_state.v - s.v).norm() < 1e-9);
        assert!(res.max_energy_drift < 1e-11);
        // Sampled at step ends, so never below the pericenter distance.
        assert!(res.min_radius >= 0.25 / 1.75 * (1.0 - 1e-12));
    }

    #[test]
    fn sweep_area_examples() {
        let s = st(1.0, 0.0, 0.0, 1.0);
        assert!((sweep_area(&s, TAU).unwrap() - PI).abs() < 1e-15);
        assert!((sweep_area(&s, PI).unwrap() - PI / 2.0).abs() < 1e-15);
        let e = st(0.7, -0.2, 0.3, 1.1);
        let a = sweep_area(&e, 2.3).unwrap();
        let q = sweep_area_by_quadrature(&e, 2.3, 1e-13).unwrap();
        assert!((a - q).abs() < 1e-10 * a.abs());
        assert_eq!(sweep_area(&st(1.0, 0.0, 1.0, 0.0), 1.0), Err(Error::ZeroAngularMomentum));
    }

    #[test]
    fn reversibility() {
        let s = st(0.9, 0.3, -0.2, 1.0);
        let fwd = propagate(&s, 3.7, 1e-12).unwrap().final_state;
        let back = propagate(&reversed(&fwd), 3.7, 1e-12).unwrap().final_state;
        assert!((back.q - s.q).norm() < 1e-11);
        assert!((back.v + s.v).norm() < 1e-11);
    }

    #[test]
    fn radial_fall_hits_the_guard() {
        let s = st(1.0, 0.0, 0.0, 0.0);
        assert_eq!(propagate(&s, 2.0, 1e-12), Err(Error::CollisionEncountered));
    }

    #[test]
    fn rejects_bad_arguments() {
        let s = st(1.0, 0.0, 0.0, 1.0);
        assert!(propagate(&s, -1.0, 1e-12).is_err());
        assert!(propagate(&s, 1.0, 1e-3).is_err());
    }
}
