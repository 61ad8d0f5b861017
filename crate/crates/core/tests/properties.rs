use std::f64::consts::{PI, TAU};

use lambert_core::prelude::*;
use lambert_core::record::{render, Format, Record};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Vec2> {
    (0.0..TAU, 0.3f64..3.0).prop_map(|(a, r)| Vec2::from_angle(a) * r)
}

/// Two points whose rays are neither aligned nor opposite.
fn chord() -> impl Strategy<Value = (Vec2, Vec2)> {
    (point(), 0.05..PI - 0.05, any::<bool>(), 0.3f64..3.0).prop_map(|(a, sep, flip, r)| {
        let sep = if flip { -sep } else { sep };
        (a, Vec2::from_angle(a.angle() + sep) * r)
    })
}

fn orientation() -> impl Strategy<Value = Orientation> {
    prop_oneof![Just(Orientation::Ccw), Just(Orientation::Cw)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn state_round_trip(q in point(), vx in -1.5f64..1.5, vy in -1.5f64..1.5) {
        let s = StateVector::new(q, Vec2::new(vx, vy), 0.0).unwrap();
        prop_assume!(angular_momentum(&s).abs() > 1e-3);
        let orbit = orbit_from_state(&s);
        let c = orbit.as_conic().unwrap();
        let back = c.state_at(c.anomaly_of(q).unwrap());
        prop_assert!((back.q - q).norm() < 1e-12 * q.norm());
        prop_assert!((back.v - s.v).norm() < 1e-11 * s.v.norm().max(1.0));
        prop_assert!(back.t.abs() < 1e-10 * c.time_at(0.0).abs().max(1.0));
    }

    #[test]
    fn conserved_quantities_agree(q in point(), vx in -1.5f64..1.5, vy in -1.5f64..1.5) {
        let s = StateVector::new(q, Vec2::new(vx, vy), 0.0).unwrap();
        let c = angular_momentum(&s);
        prop_assume!(c.abs() > 1e-3);
        let e = eccentricity_vector(&s);
        // |E|^2 - 1 = 2 H C^2
        let lhs = e.norm_squared() - 1.0;
        let rhs = 2.0 * energy(&s) * c * c;
        prop_assert!((lhs - rhs).abs() < 1e-12 * (1.0 + e.norm_squared()));
        // r = E.q + C^2
        prop_assert!((q.norm() - e.dot(q) - c * c).abs() < 1e-12 * (q.norm() + c * c));
    }

    #[test]
    fn transfer_time_is_additive(alpha in -0.9f64..1.9, beta in -0.9f64..0.9, gamma in 0.3f64..2.0,
                                 s0 in -1.0f64..1.0, d1 in 0.01f64..0.8, d2 in 0.01f64..0.8,
                                 o in orientation()) {
        let conic = UnifocalConic::new(alpha, beta, gamma).unwrap();
        let orbit = Orbit::Conic(ConicOrbit::new(conic, o, 0.0));
        let t = |a: f64, b: f64| KeplerianArc::new(orbit, a, b).unwrap().time_of_flight();
        let whole = t(s0, s0 + d1 + d2);
        let parts = t(s0, s0 + d1) + t(s0 + d1, s0 + d1 + d2);
        prop_assert!((whole - parts).abs() < 1e-12 * whole.max(1.0));
    }

    #[test]
    fn lambert_solution_hits_the_target((a, b) in chord(), dt in 0.05f64..50.0, o in orientation()) {
        let arc = solve_lambert(a, b, dt, o, 0).unwrap();
        prop_assert!((arc.time_of_flight() - dt).abs() < 1e-10 * dt.max(1.0));
        prop_assert!((arc.start() - a).norm() < 1e-12 * a.norm());
        prop_assert!((arc.end() - b).norm() < 1e-11 * b.norm());
        prop_assert_eq!(arc.orbit().as_conic().unwrap().orientation, o);
        prop_assert_eq!(arc.revolutions(), 0);
    }

    #[test]
    fn solutions_lie_above_the_minimal_energy((a, b) in chord(), dt in 0.05f64..50.0, o in orientation()) {
        let hm = h_min(&ChordConfig::new(a, b).unwrap());
        let arc = solve_lambert(a, b, dt, o, 0).unwrap();
        prop_assert!(arc.energy() >= hm - 1e-12 * hm.abs());
    }

    #[test]
    fn gauss_count_follows_minimal_energy((a, b) in chord(), k in 0.01f64..5.0) {
        let cfg = ChordConfig::new(a, b).unwrap();
        let hm = h_min(&cfg);
        prop_assert!(hm < 0.0);
        prop_assert!((hm + 2.0 / (cfg.chord() + cfg.radii_sum())).abs() < 1e-15 * hm.abs());
        prop_assert_eq!(gauss_rescaled(&cfg, hm * (1.0 + k)).unwrap().len(), 0);
        let two = gauss_rescaled(&cfg, hm * (1.0 - k)).unwrap();
        prop_assert_eq!(two.len(), 2);
        for c in two {
            prop_assert!((c.energy() - hm * (1.0 - k)).abs() < 1e-12 * hm.abs().max(1.0));
        }
    }

    #[test]
    fn parabolic_times_bracket((a, b) in chord()) {
        let cfg = ChordConfig::new(a, b).unwrap();
        let (direct, indirect) = (euler_parabolic_tof(&cfg, false), euler_parabolic_tof(&cfg, true));
        prop_assert!(0.0 < direct && direct < indirect);
        for (dt, o) in [(direct, Orientation::Ccw), (direct, Orientation::Cw)] {
            let arc = solve_lambert(a, b, dt, o, 0).unwrap();
            let indirect_arc = classify_arc(&arc).unwrap().about_o == Sense::Indirect;
            // the solution at the direct time is parabolic only when it is direct
            if !indirect_arc {
                prop_assert!(arc.energy().abs() < 1e-9);
            }
        }
    }

    #[test]
    fn cycle_arcs_keep_the_invariants((a, b) in chord(), dt in 0.2f64..10.0, o in orientation(), phi in 0.02f64..PI - 0.02) {
        let seed = solve_lambert(a, b, dt, o, 0).unwrap();
        let cycle = cycle_from_arc(&seed).unwrap();
        prop_assume!(!cycle.is_flat());
        let arc = cycle_arc_at(&cycle, phi).unwrap();
        prop_assert!((arc.time_of_flight() - dt).abs() < 1e-9 * dt);
        prop_assert!((arc.chord() - seed.chord()).abs() < 1e-12 * seed.chord());
        prop_assert!((arc.radii_sum() - seed.radii_sum()).abs() < 1e-12 * seed.radii_sum());
        prop_assert!((arc.energy() - seed.energy()).abs() < 1e-12 * seed.energy().abs().max(1.0));
        prop_assert_eq!(classify_arc(&arc).unwrap(), classify_arc(&seed).unwrap());
    }

    #[test]
    fn action_identity_holds((a, b) in chord(), dt in 0.2f64..10.0, o in orientation()) {
        let arc = solve_lambert(a, b, dt, o, 0).unwrap();
        let r = ActionReport::of(&arc).unwrap();
        prop_assert!(r.identity_residual() < 1e-12);
        prop_assert!(r.w > 0.0);
    }

    #[test]
    fn radial_motion_is_even_about_collisions(h in -2.0f64..2.0, k in -40i32..40, j in 1u32..20) {
        let t_c = k as f64 / 4.0;
        let orbit = RectilinearOrbit::new(Vec2::Y, h, t_c).unwrap();
        let dt = j as f64 / 32.0;
        let (r0, _) = rectilinear_position(&orbit, t_c - dt).unwrap();
        let (r1, _) = rectilinear_position(&orbit, t_c + dt).unwrap();
        prop_assert!((r0 - r1).abs() < 1e-12 * r0.max(r1));
    }

    #[test]
    fn floats_round_trip_through_json(x in any::<f64>().prop_filter("finite", |x| x.is_finite())) {
        let line = render(&[Record::new().with("x", x)], Format::Json);
        let text = line.trim().trim_start_matches("{\"x\":").trim_end_matches('}');
        prop_assert_eq!(text.parse::<f64>().unwrap().to_bits(), x.to_bits());
    }

    #[test]
    fn affine_inverse_round_trips(m00 in -2.0f64..2.0, m01 in -2.0f64..2.0, m10 in -2.0f64..2.0,
                                  m11 in -2.0f64..2.0, p in point()) {
        let f = AffineMap2D::new([[m00, m01], [m10, m11]], Vec2::new(0.3, -0.7));
        prop_assume!(f.det().abs() > 0.05);
        let g = f.inverse().unwrap();
        prop_assert!((g.apply(f.apply(p)) - p).norm() < 1e-11 * (1.0 + p.norm()));
    }
}
