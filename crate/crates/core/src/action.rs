//! Maupertuis and principal actions and the identities around them.
//!
//! Along a solution of energy `H`, `|v|^2 = 2/r + 2H`, so both actions are
//! integrals of functions of `r` in time. They are evaluated in the anomaly
//! variable `s` of the orbit, where `dt/ds` is proportional to `r` and the
//! integrands stay bounded, including through collisions of radial arcs.

use std::f64::consts::PI;

use crate::arc::KeplerianArc;
use crate::conic::Orbit;
use crate::error::{Error, Result};
use crate::lambert::{arc_on_conic, gauss_rescaled, h_min, ChordConfig};
use crate::quadrature::integrate_adaptive;
use crate::vec2::Vec2;

const REL_TOL: f64 = 1e-13;

/// `(dt/ds) / r`, finite everywhere.
fn rate_over_r(orbit: &Orbit) -> f64 {
    match orbit {
        Orbit::Conic(c) => c.anomaly_scale(),
        Orbit::Rectilinear(r) => {
            let h = r.energy();
            if h == 0.0 {
                1.0
            } else {
                (0.5 / h.abs()).sqrt()
            }
        }
    }
}

fn energy_of(arc: &KeplerianArc) -> f64 {
    match arc.orbit() {
        Orbit::Conic(c) => c.conic.dynamical_energy(),
        Orbit::Rectilinear(r) => r.energy(),
    }
}

/// `int (a/r + b) dt` over the arc.
fn integrate_in_r(arc: &KeplerianArc, a: f64, b: f64) -> f64 {
    let orbit = *arc.orbit();
    integrate_adaptive(arc.s_a(), arc.s_b(), PI, REL_TOL, |s| {
        let k = rate_over_r(&orbit);
        let r = orbit.time_rate(s) / k;
        k * (a + b * r)
    })
}

/// Maupertuis action `w = int |v|^2 dt`.
pub fn maupertuis_action(arc: &KeplerianArc) -> Result<f64> {
    let h = energy_of(arc);
    Ok(integrate_in_r(arc, 2.0, 2.0 * h))
}

/// Principal action `S = int (|v|^2/2 + 1/r) dt`.
pub fn principal_action(arc: &KeplerianArc) -> Result<f64> {
    let h = energy_of(arc);
    Ok(integrate_in_r(arc, 2.0, h))
}

/// Both actions of an arc with its transfer time and energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ActionReport {
    pub w: f64,
    pub s: f64,
    pub dt: f64,
    pub h: f64,
}

impl ActionReport {
    pub fn of(arc: &KeplerianArc) -> Result<Self> {
        Ok(ActionReport {
            w: maupertuis_action(arc)?,
            s: principal_action(arc)?,
            dt: arc.time_of_flight(),
            h: energy_of(arc),
        })
    }

    /// `S - (w - H dt)`, relative to `|S|`.
    pub fn identity_residual(&self) -> f64 {
        (self.s - (self.w - self.h * self.dt)).abs() / self.s.abs()
    }
}

/// Finite-difference check of `dw/dH = dt` on the arcs with the ends of
/// `arc` held fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonCheck {
    pub dt: f64,
    pub dw_dh: f64,
    /// `|dw/dH - dt| / dt`.
    pub residual: f64,
    /// Energy step actually used.
    pub step: f64,
}

/// Arc through the ends of `reference` with energy `h`, on the branch
/// continuing it (same orientation and winding, nearest eccentricity vector).
fn neighbour(reference: &KeplerianArc, cfg: &ChordConfig, h: f64) -> Result<KeplerianArc> {
    let c0 = reference.orbit().as_conic().ok_or(Error::RectilinearFamily)?;
    let e0 = c0.conic.eccentricity_vector();
    let revs = reference.revolutions();
    gauss_rescaled(cfg, h)?
        .into_iter()
        .filter_map(|c| arc_on_conic(c, c0.orientation, cfg.a, cfg.b, revs).ok())
        .min_by(|p, q| {
            let d = |a: &KeplerianArc| {
                (a.orbit().as_conic().map(|c| c.conic.eccentricity_vector()).unwrap_or(e0) - e0)
                    .norm()
            };
            d(p).total_cmp(&d(q))
        })
        .ok_or(Error::NoArc)
}

/// Central difference of `w` in `H` along the fixed-ends family through
/// `arc`. When the stencil would reach below the minimal energy of the
/// chord the step is halved, up to 30 times.
pub fn verify_hamilton_dwdh(arc: &KeplerianArc, step: f64) -> Result<HamiltonCheck> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidInput("energy step must be positive".into()));
    }
    let cfg = ChordConfig::new(arc.start(), arc.end())?;
    if arc.orbit().is_rectilinear() || cfg.same_ray() {
        return Err(Error::RectilinearFamily);
    }
    let h = energy_of(arc);
    let hm = h_min(&cfg);
    if h < hm {
        return Err(Error::BelowMinimumEnergy { energy: h, h_min: hm });
    }
    let mut k = step;
    for _ in 0..30 {
        if h - k > hm {
            let lo = neighbour(arc, &cfg, h - k);
            let hi = neighbour(arc, &cfg, h + k);
            if let (Ok(lo), Ok(hi)) = (lo, hi) {
                let dw = (maupertuis_action(&hi)? - maupertuis_action(&lo)?) / (2.0 * k);
                let dt = arc.time_of_flight();
                return Ok(HamiltonCheck {
                    dt,
                    dw_dh: dw,
                    residual: (dw - dt).abs() / dt,
                    step: k,
                });
            }
        }
        k *= 0.5;
    }
    Err(Error::NoArc)
}

/// `v_A = k + rho eps_A`, `v_B = k - rho eps_B` with `eps` the unit
/// radial directions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiDecomposition {
    pub k: Vec2,
    pub rho: f64,
    /// `|k - (v_B + rho eps_B)|`, relative to the speeds.
    pub closure_residual: f64,
    /// Sine of the angle between `k` and the chord.
    pub chord_sine: f64,
}

pub fn jacobi_velocity_decomposition(arc: &KeplerianArc) -> Result<JacobiDecomposition> {
    let sa = arc.start_state()?;
    let sb = arc.end_state()?;
    let (ea, eb) = (sa.q.normalized(), sb.q.normalized());
    let sum = ea + eb;
    if sum.norm() <= 1e-12 {
        return Err(Error::AntipodalDirections);
    }
    let rho = (sa.v - sb.v).dot(sum) / sum.norm_squared();
    let k = sa.v - ea * rho;
    let other = sb.v + eb * rho;
    let speed = sa.v.norm().max(sb.v.norm());
    let chord = sb.q - sa.q;
    let chord_sine = if k.norm() == 0.0 {
        0.0
    } else {
        k.cross(chord).abs() / (k.norm() * chord.norm())
    };
    Ok(JacobiDecomposition {
        k,
        rho,
        closure_residual: (k - other).norm() / speed,
        chord_sine,
    })
}

/// Intersection `Q` of the tangents at the ends of an arc and how well the
/// line through `O` along `v_B - v_A` matches the bisector of `AOB`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BisectorVerdict {
    pub q: Vec2,
    /// Distance from `Q` to the line through `O` along `v_B - v_A`, over `|OQ|`.
    pub line_distance: f64,
    /// `|angle(A O Q) - angle(Q O B)|`, with `Q` taken on the side of the
    /// interior bisector.
    pub angle_mismatch: f64,
}

impl BisectorVerdict {
    pub fn holds(&self, tol: f64) -> bool {
        self.line_distance < tol && self.angle_mismatch < tol
    }
}

pub fn bisector_tangent_check(arc: &KeplerianArc) -> Result<BisectorVerdict> {
    let sa = arc.start_state()?;
    let sb = arc.end_state()?;
    if (sa.q - sb.q).norm() == 0.0 {
        return Err(Error::InvalidInput("coinciding endpoints".into()));
    }
    let den = sa.v.cross(sb.v);
    if den.abs() <= 1e-14 * sa.v.norm() * sb.v.norm() {
        return Err(Error::ParallelTangents);
    }
    // A + t vA = B + u vB  =>  t = ((B - A) x vB) / (vA x vB)
    let t = (sb.q - sa.q).cross(sb.v) / den;
    let q = sa.q + sa.v * t;
    let dv = (sb.v - sa.v).normalized();
    let oq = q.norm();
    let line_distance = dv.cross(q).abs() / oq;
    let bis = sa.q.normalized() + sb.q.normalized();
    let qq = if q.dot(bis) < 0.0 { -q } else { q };
    let angle_mismatch = (sa.q.angle_to(qq) - qq.angle_to(sb.q)).abs();
    Ok(BisectorVerdict {
        q,
        line_distance,
        angle_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::{ConicOrbit, Orientation, RectilinearOrbit, UnifocalConic};
    use crate::lambert::solve_lambert;
    use crate::oracle::propagate;
    use std::f64::consts::TAU;

    fn circle(s_b: f64) -> KeplerianArc {
        let o = ConicOrbit::new(UnifocalConic::new(0.0, 0.0, 1.0).unwrap(), Orientation::Ccw, 0.0);
        KeplerianArc::new(Orbit::Conic(o), 0.0, s_b).unwrap()
    }

    #[test]
    fn circle_actions() {
        assert!((maupertuis_action(&circle(TAU)).unwrap() - TAU).abs() < 1e-14);
        assert!((maupertuis_action(&circle(PI)).unwrap() - PI).abs() < 1e-14);
        assert!((principal_action(&circle(TAU)).unwrap() - 3.0 * PI).abs() < 1e-14);
        assert!((principal_action(&circle(PI)).unwrap() - 1.5 * PI).abs() < 1e-14);
    }

    #[test]
    fn action_matches_oracle() {
        let arc = solve_lambert(Vec2::new(1.2, -0.3), Vec2::new(-0.5, 0.9), 2.1, Orientation::Ccw, 0).unwrap();
        let w = maupertuis_action(&arc).unwrap();
        let res = propagate(&arc.start_state().unwrap(), arc.time_of_flight(), 1e-13).unwrap();
        assert!((w - res.action).abs() < 1e-9 * w);
        let rep = ActionReport::of(&arc).unwrap();
        assert!(rep.identity_residual() < 1e-12);
    }

    #[test]
    fn radial_action_is_finite() {
        // H = -1/2 over one bounce: |v|^2 = 2/r - 1 with dt = r du and
        // r = 1 - cos u, so w = int (2 - r) du = 4 pi - 2 pi.
        let o = Orbit::Rectilinear(RectilinearOrbit::new(Vec2::X, -0.5, 0.0).unwrap());
        let arc = KeplerianArc::new(o, -PI, PI).unwrap();
        let w = maupertuis_action(&arc).unwrap();
        assert!((w - (4.0 * PI - 2.0 * PI)).abs() < 1e-13, "{w}");
    }

    #[test]
    fn hamilton_relation() {
        let arc = solve_lambert(Vec2::new(1.0, 0.1), Vec2::new(-0.3, 1.2), 1.4, Orientation::Ccw, 0).unwrap();
        let chk = verify_hamilton_dwdh(&arc, 1e-5).unwrap();
        assert!(chk.residual < 1e-6, "{chk:?}");
        let coarse = verify_hamilton_dwdh(&arc, 1e-3).unwrap();
        let mid = verify_hamilton_dwdh(&arc, 1e-4).unwrap();
        let ratio = coarse.residual / mid.residual;
        assert!(ratio > 50.0 && ratio < 200.0, "{ratio}");
    }

    #[test]
    fn jacobi_examples() {
        let half = circle(PI);
        assert_eq!(jacobi_velocity_decomposition(&half), Err(Error::AntipodalDirections));
        let quarter = circle(PI / 2.0);
        let j = jacobi_velocity_decomposition(&quarter).unwrap();
        assert!((j.rho - 1.0).abs() < 1e-15);
        assert!((j.k - Vec2::new(-1.0, 1.0)).norm() < 1e-15);
        assert!(j.chord_sine < 1e-15 && j.closure_residual < 1e-15);
    }

    #[test]
    fn bisector_examples() {
        let v = bisector_tangent_check(&circle(PI / 2.0)).unwrap();
        assert!((v.q - Vec2::new(1.0, 1.0)).norm() < 1e-15);
        assert!(v.holds(1e-14));
        let o = ConicOrbit::new(UnifocalConic::new(0.0, 0.6, 1.0).unwrap(), Orientation::Ccw, 0.0);
        let sym = KeplerianArc::new(Orbit::Conic(o), -1.0, 1.0).unwrap();
        let v = bisector_tangent_check(&sym).unwrap();
        assert!(v.q.x.abs() < 1e-14 && v.holds(1e-12));
        assert_eq!(bisector_tangent_check(&circle(PI)), Err(Error::ParallelTangents));
    }
}
