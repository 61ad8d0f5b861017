//! Values from an independent 30-digit Taylor-series integration of the
//! equations of motion, frozen here.

#![allow(clippy::excessive_precision)]

use lambert_core::prelude::*;

/// Start, start velocity, transfer time, end position, end velocity.
type Case = ([f64; 2], [f64; 2], f64, [f64; 2], [f64; 2]);

const PROPAGATED: [Case; 5] = [
    ([1.0, 0.0], [0.2, 1.1], 1.3, [0.62917366157407892, 1.1803250609972238], [-0.60223300676563309, 0.61854033841973204]),
    ([1.5, 0.5], [-0.3, 0.6], 2.7, [-0.45608690083974197, 0.84267888744524249], [-0.83640315723043059, -0.75683102797697041]),
    ([0.8, -0.2], [0.9, 1.4], 0.9, [1.2256209895938752, 1.020438228257475], [0.22124441889411673, 1.2448924062027926]),
    ([-1.0, 0.4], [0.1, -1.5], 1.6, [0.21700379899007341, -1.575388522392864], [1.032901761855644, -0.77059287056259421]),
    ([2.0, 1.0], [-0.5, 0.2], 4.0, [0.32378514032258709, -0.99261285556387373], [1.0532369048887772, -0.44923770004388383]),
];

fn v(p: [f64; 2]) -> Vec2 {
    Vec2::new(p[0], p[1])
}

#[test]
fn lambert_recovers_propagated_velocities() {
    for (a, va, dt, b, vb) in PROPAGATED {
        let arc = solve_lambert(v(a), v(b), dt, Orientation::Ccw, 0).unwrap();
        let (s, e) = (arc.start_state().unwrap(), arc.end_state().unwrap());
        assert!((s.v - v(va)).norm() < 1e-11, "{:?} vs {va:?}", s.v);
        assert!((e.v - v(vb)).norm() < 1e-11, "{:?} vs {vb:?}", e.v);
        let h = v(va).norm_squared() / 2.0 - 1.0 / v(a).norm();
        assert!((arc.energy() - h).abs() < 1e-12 * h.abs().max(1.0));
    }
}

#[test]
fn analytic_propagation_matches() {
    for (a, va, dt, b, vb) in PROPAGATED {
        let start = StateVector::new(v(a), v(va), 0.0).unwrap();
        let orbit = orbit_from_state(&start);
        let c = orbit.as_conic().unwrap();
        let s = c.anomaly_at_time(dt).unwrap();
        let end = c.state_at(s);
        assert!((end.q - v(b)).norm() < 1e-12 * v(b).norm(), "{:?} vs {b:?}", end.q);
        assert!((end.v - v(vb)).norm() < 1e-12 * v(vb).norm().max(1.0));
    }
}

#[test]
fn numerical_oracle_matches() {
    for (a, va, dt, b, _) in PROPAGATED {
        let start = StateVector::new(v(a), v(va), 0.0).unwrap();
        let run = propagate(&start, dt, 1e-13).unwrap();
        assert!((run.final_state.q - v(b)).norm() < 1e-10 * v(b).norm());
    }
}

#[test]
fn parabolic_transfer_times() {
    let cfg = ChordConfig::new(Vec2::X, Vec2::Y).unwrap();
    let direct = euler_parabolic_tof(&cfg, false);
    let indirect = euler_parabolic_tof(&cfg, true);
    assert!((direct - 0.97671708843832249).abs() < 1e-15);
    assert!((indirect - 1.1261642648276442).abs() < 2e-15);
    let arc = solve_lambert(cfg.a, cfg.b, direct, Orientation::Ccw, 0).unwrap();
    assert!(arc.energy().abs() < 1e-9);
}

#[test]
fn radial_fall_time() {
    let orbit = RectilinearOrbit::new(Vec2::X, -0.5, 0.0).unwrap();
    let (r, _) = rectilinear_position(&orbit, 0.57079632679489662).unwrap();
    assert!((r - 1.0).abs() < 1e-14);
}
