//! Time along Keplerian orbits.
//!
//! Each orbit type has its own anomaly parameter `s`:
//!
//! | orbit       | `s`                                   | time law                               |
//! |-------------|---------------------------------------|----------------------------------------|
//! | ellipse     | eccentric anomaly (unbounded)         | `a^(3/2) (s - e sin s)`                |
//! | hyperbola   | hyperbolic anomaly                    | `|a|^(3/2) (e sinh s - s)`             |
//! | parabola    | `D = tan(nu/2)`                       | `gamma^(3/2) (D + D^3/3) / 2`          |
//! | rectilinear | cycloid parameter, `u = 0` at impact  | `a^(3/2) (u - sin u)` and analogs      |
//!
//! Elapsed times are computed with universal variables by default; the
//! closed forms of the table are available through [`TofMode::ClosedForm`].

pub mod rectilinear;
pub mod stumpff;

use std::f64::consts::{PI, TAU};

use crate::arc::KeplerianArc;
use crate::conic::{ConicKind, ConicOrbit, Orbit, StateVector};
use crate::error::{Error, Result};
use crate::vec2::Vec2;

pub use rectilinear::{rectilinear_position, RadialSense};
use stumpff::{c2, c3, sinh_minus_x, x_minus_sin};

/// Iteration cap of every anomaly inversion.
pub const MAX_ITERATIONS: usize = 64;

/// Anomaly interval of an arc in its orbit's own parametrization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnomalyInterval {
    pub s_a: f64,
    pub s_b: f64,
}

impl AnomalyInterval {
    /// Number of full turns, for periodic parametrizations.
    pub fn revolutions(&self) -> u32 {
        ((self.s_b - self.s_a) / TAU).floor().max(0.0) as u32
    }
}

/// Solves `u - e sin u = M` for `0 <= e <= 1`.
pub fn solve_kepler_elliptic(mean_anomaly: f64, e: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&e) || !mean_anomaly.is_finite() {
        return Err(Error::InvalidInput(format!(
            "elliptic Kepler equation needs 0 <= e <= 1 and finite M (e = {e}, M = {mean_anomaly})"
        )));
    }
    elliptic_anomaly(mean_anomaly, e, 1.0 - e)
}

/// Solves `e sinh w - w = M` for `e > 1`.
pub fn solve_kepler_hyperbolic(mean_anomaly: f64, e: f64) -> Result<f64> {
    if e.partial_cmp(&1.0) != Some(std::cmp::Ordering::Greater) || !mean_anomaly.is_finite() {
        return Err(Error::InvalidInput(format!(
            "hyperbolic Kepler equation needs e > 1 and finite M (e = {e}, M = {mean_anomaly})"
        )));
    }
    hyperbolic_anomaly(mean_anomaly, e, e - 1.0)
}

/// Elliptic solver with `1 - e` supplied separately so that nearly
/// parabolic and rectilinear orbits keep their precision.
pub(crate) fn elliptic_anomaly(m: f64, e: f64, one_minus_e: f64) -> Result<f64> {
    let k = (m / TAU).round();
    let reduced = m - k * TAU;
    let sign = if reduced < 0.0 { -1.0 } else { 1.0 };
    let m = reduced.abs().min(PI);

    // f(u) = (1-e) u + e (u - sin u) - m is increasing on [0, pi].
    let f = |u: f64| one_minus_e * u + e * x_minus_sin(u) - m;
    let df = |u: f64| {
        let s = (0.5 * u).sin();
        one_minus_e + 2.0 * e * s * s
    };
    let mut lo = m;
    let mut hi = (m + e).min(PI);
    let mut u = if e < 0.8 {
        m
    } else {
        (6.0 * m / e.max(f64::MIN_POSITIVE)).cbrt().clamp(lo, hi)
    };
    if m == 0.0 || hi <= lo {
        return Ok(sign * lo + k * TAU);
    }
    for _ in 0..MAX_ITERATIONS {
        let fu = f(u);
        if fu == 0.0 {
            return Ok(sign * u + k * TAU);
        }
        if fu > 0.0 {
            hi = u;
        } else {
            lo = u;
        }
        let d = df(u);
        let mut next = u - fu / d;
        if !(d > 0.0) || !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - u).abs() <= 2.0 * f64::EPSILON * u.max(1e-300) || hi - lo <= f64::EPSILON * hi {
            return Ok(sign * next + k * TAU);
        }
        u = next;
    }
    Err(Error::NonConvergence {
        what: "elliptic Kepler equation",
        iterations: MAX_ITERATIONS,
    })
}

/// Solves `(e-1) w + e (sinh w - w) = M` for `e >= 1`.
pub(crate) fn hyperbolic_anomaly(m: f64, e: f64, e_minus_one: f64) -> Result<f64> {
    let sign = if m < 0.0 { -1.0 } else { 1.0 };
    let m = m.abs();
    if m == 0.0 {
        return Ok(0.0);
    }
    let f = |w: f64| e_minus_one * w + e * sinh_minus_x(w) - m;
    let df = |w: f64| {
        let s = (0.5 * w).sinh();
        e_minus_one + 2.0 * e * s * s
    };
    // Three upper bounds of the root; f is convex on w > 0, so Newton from
    // any of them decreases monotonically to the root.
    let mut hi = (6.0 * m / e).cbrt();
    if e_minus_one > 0.0 {
        hi = hi.min(m / e_minus_one);
    }
    hi = hi.min((2.0 * (m + hi) / e + 1.0).ln());
    let mut lo = 0.0;
    let mut w = hi;
    for _ in 0..MAX_ITERATIONS {
        let fw = f(w);
        if fw == 0.0 {
            return Ok(sign * w);
        }
        if fw > 0.0 {
            hi = w;
        } else {
            lo = w;
        }
        let d = df(w);
        let mut next = w - fw / d;
        if !(d > 0.0) || !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - w).abs() <= 2.0 * f64::EPSILON * w || hi - lo <= f64::EPSILON * hi {
            return Ok(sign * next);
        }
        w = next;
    }
    Err(Error::NonConvergence {
        what: "hyperbolic Kepler equation",
        iterations: MAX_ITERATIONS,
    })
}

/// Period `2 pi (-2H)^(-3/2)` of a bound orbit.
pub fn period(energy: f64) -> Result<f64> {
    if energy.partial_cmp(&0.0) != Some(std::cmp::Ordering::Less) {
        return Err(Error::NonPeriodic { energy });
    }
    Ok(TAU * (-2.0 * energy).powf(-1.5))
}

/// How [`time_of_flight_with`] evaluates elapsed time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TofMode {
    /// Universal variables with Stumpff functions.
    #[default]
    Universal,
    /// Per-conic Kepler/Barker/cycloid formulas.
    ClosedForm,
}

/// Elapsed time along an arc.
pub fn time_of_flight(arc: &KeplerianArc) -> f64 {
    time_of_flight_with(arc, TofMode::Universal)
}

pub fn time_of_flight_with(arc: &KeplerianArc, mode: TofMode) -> f64 {
    let (s_a, s_b) = (arc.s_a(), arc.s_b());
    match arc.orbit() {
        Orbit::Rectilinear(r) => r.elapsed(s_a, s_b),
        Orbit::Conic(c) => match mode {
            TofMode::ClosedForm => c.time_since_periapsis(s_b) - c.time_since_periapsis(s_a),
            TofMode::Universal => c.universal_elapsed(s_a, s_b),
        },
    }
}

/// State on an orbit at anomaly `s`.
pub fn state_at(orbit: &Orbit, s: f64) -> Result<StateVector> {
    match orbit {
        Orbit::Conic(c) => Ok(c.state_at(s)),
        Orbit::Rectilinear(r) => r.state_at(s),
    }
}

impl Orbit {
    pub fn position_at(&self, s: f64) -> Vec2 {
        match self {
            Orbit::Conic(c) => c.position_at(s),
            Orbit::Rectilinear(r) => r.position_at(s),
        }
    }

    pub fn state_at(&self, s: f64) -> Result<StateVector> {
        state_at(self, s)
    }

    pub fn time_at(&self, s: f64) -> f64 {
        match self {
            Orbit::Conic(c) => c.time_at(s),
            Orbit::Rectilinear(r) => r.time_at(s),
        }
    }

    /// Anomaly at epoch `t`; for ellipses and bound rectilinear orbits the
    /// anomaly is continuous in `t` (it counts turns).
    pub fn anomaly_at_time(&self, t: f64) -> Result<f64> {
        match self {
            Orbit::Conic(c) => c.anomaly_at_time(t),
            Orbit::Rectilinear(r) => r.parameter_at_time(t),
        }
    }

    /// `dt/ds`.
    pub fn time_rate(&self, s: f64) -> f64 {
        match self {
            Orbit::Conic(c) => c.anomaly_scale() * c.radius_at(s),
            Orbit::Rectilinear(r) => r.time_rate(s),
        }
    }

    /// Length of one period in the anomaly variable, when the orbit is periodic.
    pub fn anomaly_period(&self) -> Option<f64> {
        let bound = match self {
            Orbit::Conic(c) => c.conic.kind() == ConicKind::Ellipse,
            Orbit::Rectilinear(r) => r.energy() < 0.0,
        };
        bound.then_some(TAU)
    }
}

impl ConicOrbit {
    /// Unit vectors along the pericenter and along the velocity at pericenter.
    pub fn perifocal_frame(&self) -> (Vec2, Vec2) {
        let p = self.conic.periapsis_direction();
        (p, p.perp() * self.orientation.sign())
    }

    /// True anomaly of `p` measured from the pericenter in the direction of motion.
    pub fn true_anomaly_of(&self, p: Vec2) -> f64 {
        let (ph, qh) = self.perifocal_frame();
        qh.dot(p).atan2(ph.dot(p))
    }

    /// `dchi/ds`: `sqrt|a|` for ellipses and hyperbolas, `sqrt gamma` for parabolas.
    pub fn anomaly_scale(&self) -> f64 {
        match self.conic.kind() {
            ConicKind::Parabola => self.conic.gamma().sqrt(),
            _ => (self.conic.gamma() / self.conic.ecc2_minus_one().abs()).sqrt(),
        }
    }

    fn abs_semimajor(&self) -> f64 {
        self.conic.gamma() / self.conic.ecc2_minus_one().abs()
    }

    /// Principal anomaly (in `(-pi, pi]` for ellipses) of a point of the branch.
    ///
    /// Read off the perifocal coordinates rather than the true anomaly, which
    /// loses accuracy far from the pericenter of nearly radial orbits. Where
    /// the ordinate is a poor handle on the anomaly (the flanks of eccentric
    /// ellipses, far out on open branches) the radius is used instead, with
    /// the ordinate giving the sign.
    pub fn anomaly_of(&self, p: Vec2) -> Result<f64> {
        if self.conic.linear_part(p) <= 0.0 {
            return Err(Error::InvalidInput("point on the far branch of the hyperbola".into()));
        }
        let (ph, qh) = self.perifocal_frame();
        let (xp, yp) = (ph.dot(p), qh.dot(p));
        let r = p.norm();
        let gamma = self.conic.gamma();
        let e = self.conic.eccentricity();
        let signed = |x: f64| if yp < 0.0 { -x } else { x };
        Ok(match self.conic.kind() {
            ConicKind::Ellipse => {
                let a = self.abs_semimajor();
                let cos_e = (a - r) / (a * e);
                if e > 0.5 && cos_e.abs() < 0.7 {
                    signed(cos_e.acos())
                } else {
                    let b = (a * gamma).sqrt();
                    (yp / b).atan2(xp / a + e)
                }
            }
            ConicKind::Hyperbola => {
                let a = self.abs_semimajor();
                let sinh = yp / (a * gamma).sqrt();
                if sinh.abs() > 1.0 {
                    signed(((r / a + 1.0) / e).max(1.0).acosh())
                } else {
                    sinh.asinh()
                }
            }
            ConicKind::Parabola => {
                let d = yp / gamma;
                if d.abs() > 1.0 {
                    signed((2.0 * r / gamma - 1.0).max(0.0).sqrt())
                } else {
                    d
                }
            }
        })
    }

    pub fn anomaly_from_true(&self, nu: f64) -> Result<f64> {
        let e = self.conic.eccentricity();
        let (sn, cn) = nu.sin_cos();
        match self.conic.kind() {
            ConicKind::Ellipse => {
                let b = (-self.conic.ecc2_minus_one()).sqrt();
                Ok((b * sn).atan2(e + cn))
            }
            ConicKind::Hyperbola => {
                let den = 1.0 + e * cn;
                if den <= 0.0 {
                    return Err(Error::InvalidInput(
                        "direction outside the asymptotes of the hyperbola".into(),
                    ));
                }
                Ok((self.conic.ecc2_minus_one().sqrt() * sn / den).asinh())
            }
            ConicKind::Parabola => {
                let den = 1.0 + cn;
                if den <= 0.0 {
                    return Err(Error::InvalidInput("direction of the parabola's axis".into()));
                }
                Ok(sn / den)
            }
        }
    }

    /// Position in the perifocal frame and radius.
    fn perifocal(&self, s: f64) -> (f64, f64, f64) {
        let gamma = self.conic.gamma();
        let e = self.conic.eccentricity();
        let rp = gamma / (1.0 + e);
        match self.conic.kind() {
            ConicKind::Ellipse => {
                let a = self.abs_semimajor();
                let h = (0.5 * s).sin();
                let xp = rp - 2.0 * a * h * h;
                let yp = (a * gamma).sqrt() * s.sin();
                (xp, yp, rp + 2.0 * a * e * h * h)
            }
            ConicKind::Hyperbola => {
                let a = self.abs_semimajor();
                let h = (0.5 * s).sinh();
                let xp = rp - 2.0 * a * h * h;
                let yp = (a * gamma).sqrt() * s.sinh();
                (xp, yp, rp + 2.0 * a * e * h * h)
            }
            ConicKind::Parabola => {
                let d2 = s * s;
                (0.5 * gamma * (1.0 - d2), gamma * s, 0.5 * gamma * (1.0 + d2))
            }
        }
    }

    pub fn position_at(&self, s: f64) -> Vec2 {
        let (ph, qh) = self.perifocal_frame();
        let (xp, yp, _) = self.perifocal(s);
        ph * xp + qh * yp
    }

    pub fn radius_at(&self, s: f64) -> f64 {
        self.perifocal(s).2
    }

    pub fn velocity_at(&self, s: f64) -> Vec2 {
        let (ph, qh) = self.perifocal_frame();
        let (_, _, r) = self.perifocal(s);
        let sg = self.conic.gamma().sqrt();
        let (vx, vy) = match self.conic.kind() {
            ConicKind::Ellipse => {
                let sa = self.abs_semimajor().sqrt();
                (-sa * s.sin() / r, sg * s.cos() / r)
            }
            ConicKind::Hyperbola => {
                let sa = self.abs_semimajor().sqrt();
                (-sa * s.sinh() / r, sg * s.cosh() / r)
            }
            ConicKind::Parabola => (-sg * s / r, sg / r),
        };
        ph * vx + qh * vy
    }

    /// Time from the pericenter passage `t_peri` to anomaly `s`.
    pub fn time_since_periapsis(&self, s: f64) -> f64 {
        let gamma = self.conic.gamma();
        let e = self.conic.eccentricity();
        let ecc2m1 = self.conic.ecc2_minus_one();
        match self.conic.kind() {
            ConicKind::Ellipse => {
                let a = self.abs_semimajor();
                let one_minus_e = -ecc2m1 / (1.0 + e);
                a * a.sqrt() * (one_minus_e * s + e * x_minus_sin(s))
            }
            ConicKind::Hyperbola => {
                let a = self.abs_semimajor();
                let e_minus_one = ecc2m1 / (1.0 + e);
                a * a.sqrt() * (e_minus_one * s + e * sinh_minus_x(s))
            }
            ConicKind::Parabola => 0.5 * gamma * gamma.sqrt() * (s + s * s * s / 3.0),
        }
    }

    pub fn time_at(&self, s: f64) -> f64 {
        self.t_peri + self.time_since_periapsis(s)
    }

    pub fn state_at(&self, s: f64) -> StateVector {
        StateVector {
            q: self.position_at(s),
            v: self.velocity_at(s),
            t: self.time_at(s),
        }
    }

    /// Anomaly at epoch `t` (continuous in `t`, counting turns on ellipses).
    pub fn anomaly_at_time(&self, t: f64) -> Result<f64> {
        let tau = t - self.t_peri;
        let gamma = self.conic.gamma();
        let e = self.conic.eccentricity();
        let ecc2m1 = self.conic.ecc2_minus_one();
        match self.conic.kind() {
            ConicKind::Ellipse => {
                let a = self.abs_semimajor();
                elliptic_anomaly(tau / (a * a.sqrt()), e, -ecc2m1 / (1.0 + e))
            }
            ConicKind::Hyperbola => {
                let a = self.abs_semimajor();
                hyperbolic_anomaly(tau / (a * a.sqrt()), e, ecc2m1 / (1.0 + e))
            }
            ConicKind::Parabola => {
                let m = tau / (gamma * gamma.sqrt());
                Ok(2.0 * ((3.0 * m).asinh() / 3.0).sinh())
            }
        }
    }

    /// Elapsed time from `s_a` to `s_b` by the universal Kepler equation.
    ///
    /// The interval is cut at the apsides. Outbound pieces are propagated
    /// forward from their start and inbound ones backward from their end,
    /// so every term of the universal equation has the sign of the result.
    pub(crate) fn universal_elapsed(&self, s_a: f64, s_b: f64) -> f64 {
        let closed = self.conic.kind() == ConicKind::Ellipse;
        let mut total = 0.0;
        let mut lo = s_a;
        while lo < s_b {
            let (apsis, outbound) = if closed {
                let k = (lo / PI).floor();
                ((k + 1.0) * PI, k.rem_euclid(2.0) == 0.0)
            } else if lo < 0.0 {
                (0.0, false)
            } else {
                (f64::INFINITY, true)
            };
            let hi = apsis.min(s_b);
            total += if outbound {
                self.universal_piece(lo, hi - lo)
            } else {
                -self.universal_piece(hi, lo - hi)
            };
            lo = hi;
        }
        total
    }

    fn universal_piece(&self, s0: f64, ds: f64) -> f64 {
        let q = self.position_at(s0);
        let v = self.velocity_at(s0);
        let r0 = q.norm();
        let sigma0 = q.dot(v);
        let alpha = -2.0 * self.conic.dynamical_energy();
        let chi = self.anomaly_scale() * ds;
        let chi2 = chi * chi;
        let z = alpha * chi2;
        sigma0 * chi2 * c2(z) + (1.0 - alpha * r0) * chi2 * chi * c3(z) + r0 * chi
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::{orbit_and_anomaly_from_state, Orientation, UnifocalConic};

    fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn elliptic_solver_examples() {
        assert_eq!(solve_kepler_elliptic(0.0, 0.5).unwrap(), 0.0);
        for &e in &[0.0, 0.3, 0.9, 1.0] {
            assert!((solve_kepler_elliptic(PI, e).unwrap() - PI).abs() < 1e-15);
        }
        let u = solve_kepler_elliptic(PI / 2.0, 1.0).unwrap();
        let oracle = bisect(|u| u - u.sin() - PI / 2.0, 0.0, PI);
        // Frozen from the bisection oracle.
        assert!((oracle - 2.309_881_460_010_057).abs() < 1e-14);
        assert!((u - oracle).abs() < 1e-14);
    }

    #[test]
    fn elliptic_solver_range_reduction() {
        let u = solve_kepler_elliptic(7.0 * PI + 0.3, 0.7).unwrap();
        assert!((u - 0.7 * u.sin() - (7.0 * PI + 0.3)).abs() < 1e-13);
        let u = solve_kepler_elliptic(-2.0, 0.2).unwrap();
        assert!((u - 0.2 * u.sin() + 2.0).abs() < 1e-15);
    }

    #[test]
    fn hyperbolic_solver_examples() {
        assert_eq!(solve_kepler_hyperbolic(0.0, 2.0).unwrap(), 0.0);
        let m = 2.0 * 1f64.sinh() - 1.0;
        assert!((solve_kepler_hyperbolic(m, 2.0).unwrap() - 1.0).abs() < 1e-15);
        let w = solve_kepler_hyperbolic(10.0, 1.5).unwrap();
        let oracle = bisect(|w| 1.5 * w.sinh() - w - 10.0, 0.0, 10.0);
        assert!((oracle - 2.843_947_202_416_640).abs() < 1e-13);
        assert!((w - oracle).abs() < 1e-14);
        let w = solve_kepler_hyperbolic(-1e6, 1.0 + 1e-9).unwrap();
        assert!(((1.0 + 1e-9) * w.sinh() - w + 1e6).abs() < 1e-13 * 1e6);
        assert!(solve_kepler_hyperbolic(1.0, 1.0).is_err());
    }

    #[test]
    fn period_examples() {
        assert!((period(-0.5).unwrap() - TAU).abs() < 1e-15);
        assert!((period(-0.125).unwrap() - 16.0 * PI).abs() < 1e-13);
        assert!((period(-2.0).unwrap() - TAU / 8.0).abs() < 1e-15);
        assert_eq!(period(0.0), Err(Error::NonPeriodic { energy: 0.0 }));
    }

    fn unit_circle() -> ConicOrbit {
        ConicOrbit::new(UnifocalConic::new(0.0, 0.0, 1.0).unwrap(), Orientation::Ccw, 0.0)
    }

    #[test]
    fn circle_state_and_half_turn() {
        let o = unit_circle();
        let s = o.state_at(PI / 2.0);
        assert!((s.q - Vec2::new(0.0, 1.0)).norm() < 1e-15);
        assert!((s.v - Vec2::new(-1.0, 0.0)).norm() < 1e-15);
        let arc = KeplerianArc::new(Orbit::Conic(o), 0.0, PI).unwrap();
        assert!((time_of_flight(&arc) - PI).abs() < 1e-14);
        assert!((time_of_flight_with(&arc, TofMode::ClosedForm) - PI).abs() < 1e-14);
    }

    #[test]
    fn pericenter_state() {
        let conic = UnifocalConic::new(0.75, 0.0, 0.25).unwrap();
        let o = ConicOrbit::new(conic, Orientation::Ccw, 0.0);
        let s = o.state_at(0.0);
        assert!((s.q - Vec2::new(-0.25 / 1.75, 0.0)).norm() < 1e-16);
        assert!((crate::conic::energy(&s) + 0.875).abs() < 1e-12);
    }

    #[test]
    fn round_trip_through_state() {
        let st = StateVector::new(Vec2::new(0.3, -1.1), Vec2::new(0.9, 0.2), 2.5).unwrap();
        let (orbit, s) = orbit_and_anomaly_from_state(&st);
        let back = orbit.state_at(s).unwrap();
        assert!((back.q - st.q).norm() < 1e-14);
        assert!((back.v - st.v).norm() < 1e-14);
        assert!((back.t - st.t).abs() < 1e-13);
    }

    #[test]
    fn universal_agrees_with_closed_form_near_parabolic() {
        for &e in &[0.999, 0.9999999, 1.0, 1.0000001, 1.001] {
            let gamma = 1.3;
            let conic = UnifocalConic::new(-e, 0.0, gamma).unwrap();
            let o = ConicOrbit::new(conic, Orientation::Cw, 0.0);
            let arc = KeplerianArc::new(Orbit::Conic(o), -0.4, 1.1).unwrap();
            let u = time_of_flight(&arc);
            let c = time_of_flight_with(&arc, TofMode::ClosedForm);
            assert!((u - c).abs() <= 1e-12 * c, "e = {e}: {u} vs {c}");
        }
    }

    #[test]
    fn full_revolution_adds_one_period() {
        let conic = UnifocalConic::new(0.3, -0.4, 0.8).unwrap();
        let o = Orbit::Conic(ConicOrbit::new(conic, Orientation::Ccw, 0.0));
        let t1 = time_of_flight(&KeplerianArc::new(o, 0.2, 1.7).unwrap());
        let t2 = time_of_flight(&KeplerianArc::new(o, 0.2, 1.7 + TAU).unwrap());
        let t = period(conic.energy()).unwrap();
        assert!((t2 - t1 - t).abs() < 1e-12 * t);
    }

    #[test]
    fn anomaly_at_time_inverts_time_at() {
        for (alpha, gamma) in [(0.6, 1.0), (1.0, 2.0), (3.0, 0.5)] {
            let conic = UnifocalConic::new(alpha, 0.2, gamma).unwrap();
            let o = ConicOrbit::new(conic, Orientation::Ccw, 0.7);
            let s = 0.8;
            let back = o.anomaly_at_time(o.time_at(s)).unwrap();
            assert!((back - s).abs() < 1e-13, "{alpha}: {back}");
        }
    }
}
