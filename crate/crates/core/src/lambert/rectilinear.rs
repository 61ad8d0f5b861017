use std::f64::consts::TAU;

use crate::arc::KeplerianArc;
use crate::conic::{Orbit, RectilinearOrbit};
use crate::error::{Error, Result};
use crate::roots::brent;
use crate::vec2::Vec2;

/// Shape of a radial arc between two points of one ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RectilinearClass {
    /// Monotone motion from `A` to `B`.
    DirectDirect,
    /// Out through a culmination and back.
    DirectIndirect,
    /// In through a collision and back out.
    IndirectDirect,
    /// Collision, then culmination.
    IndirectIndirectCollisionFirst,
    /// Culmination, then collision.
    IndirectIndirectCulminationFirst,
}

impl RectilinearClass {
    fn bound_only(self) -> bool {
        !matches!(
            self,
            RectilinearClass::DirectDirect | RectilinearClass::IndirectDirect
        )
    }
}

/// Outgoing parameter of radius `r`: `u` with `r(u) = r`, `0 <= u <= pi` when bound.
fn u_out(orbit: &RectilinearOrbit, r: f64) -> f64 {
    let h = orbit.energy();
    if h == 0.0 {
        (2.0 * r).sqrt()
    } else if h < 0.0 {
        // r = 2a sin^2(u/2)
        let a = -0.5 / h;
        2.0 * (0.5 * r / a).sqrt().min(1.0).asin()
    } else {
        let a = 0.5 / h;
        2.0 * (0.5 * r / a).sqrt().asinh()
    }
}

fn interval(
    orbit: &RectilinearOrbit,
    r_a: f64,
    r_b: f64,
    class: RectilinearClass,
) -> Option<(f64, f64)> {
    let (ua, ub) = (u_out(orbit, r_a), u_out(orbit, r_b));
    let bound = orbit.energy() < 0.0;
    let iv = match class {
        RectilinearClass::DirectDirect => {
            if r_b > r_a {
                (ua, ub)
            } else if bound {
                (TAU - ua, TAU - ub)
            } else {
                (-ua, -ub)
            }
        }
        RectilinearClass::DirectIndirect => (ua, TAU - ub),
        RectilinearClass::IndirectDirect => (-ua, ub),
        RectilinearClass::IndirectIndirectCollisionFirst => (-ua, TAU - ub),
        RectilinearClass::IndirectIndirectCulminationFirst => (ua, TAU + ub),
    };
    (iv.1 > iv.0).then_some(iv)
}

/// Radial arc of known energy and class, leaving `A` at epoch 0, with
/// `revolutions` extra bounces when bound.
pub(crate) fn rectilinear_arc(
    ray: Vec2,
    r_a: f64,
    r_b: f64,
    energy: f64,
    class: RectilinearClass,
    revolutions: u32,
) -> Result<KeplerianArc> {
    let orbit = RectilinearOrbit::new(ray, energy, 0.0)?;
    if revolutions > 0 && energy >= 0.0 {
        return Err(Error::NoArcWithWinding);
    }
    if class.bound_only() && energy >= 0.0 {
        return Err(Error::NoArc);
    }
    let (ua, ub) = interval(&orbit, r_a, r_b, class).ok_or(Error::NoArc)?;
    let orbit = RectilinearOrbit::new(ray, energy, -orbit.time_offset(ua))?;
    KeplerianArc::new(Orbit::Rectilinear(orbit), ua, ub + TAU * revolutions as f64)
}

/// Radial arc from `r_a * ray` to `r_b * ray` of the given class taking
/// time `dt`. The energy is found by bracketed root finding on the
/// cycloid time law; the arc leaves `A` at epoch 0.
pub fn solve_rectilinear_lambert(
    ray: Vec2,
    r_a: f64,
    r_b: f64,
    dt: f64,
    class: RectilinearClass,
) -> Result<KeplerianArc> {
    if !(r_a > 0.0 && r_b > 0.0 && dt > 0.0 && dt.is_finite()) {
        return Err(Error::InvalidInput("radii and transfer time must be positive".into()));
    }
    if class == RectilinearClass::DirectDirect && r_a == r_b {
        return Err(Error::NoArc);
    }
    let ray = ray.normalized();
    // Bound motion needs 2a >= max(r_a, r_b), i.e. H >= -1/max(r).
    let h_lo = -1.0 / r_a.max(r_b);
    let arc_at = |h: f64| -> Result<KeplerianArc> {
        let orbit = RectilinearOrbit::new(ray, h, 0.0)?;
        let (ua, ub) = interval(&orbit, r_a, r_b, class).ok_or(Error::NoArc)?;
        let orbit = RectilinearOrbit::new(ray, h, -orbit.time_offset(ua))?;
        KeplerianArc::new(Orbit::Rectilinear(orbit), ua, ub)
    };
    let time = |h: f64| arc_at(h).map(|a| a.time_of_flight());
    let g = |h: f64| time(h).map(|t| t.ln() - dt.ln()).unwrap_or(f64::NAN);

    let h = if class.bound_only() {
        // Time grows from its value at h_lo to infinity as H -> 0-.
        // H = h_lo * (1 - x), x in (0, 1).
        let t0 = time(h_lo)?;
        if dt < t0 {
            return Err(Error::NoArc);
        }
        let mut lo = 0.5;
        let mut found = false;
        for _ in 0..1100 {
            if g(h_lo * lo) >= 0.0 {
                found = true;
                break;
            }
            lo *= 0.5;
        }
        if !found {
            return Err(Error::NoArc);
        }
        let x = brent(|x| g(h_lo * x), lo, 1.0, 0.0, 200)?;
        h_lo * x
    } else {
        // Time decreases from its value at h_lo to zero as H -> +inf.
        let t0 = time(h_lo)?;
        if dt > t0 {
            return Err(Error::NoArc);
        }
        // H = h_lo + s / (1 - s) * |h_lo|, s in [0, 1).
        let map = |s: f64| h_lo + s / (1.0 - s) * h_lo.abs();
        let mut hi = 0.5;
        let mut found = false;
        for _ in 0..1100 {
            if g(map(1.0 - hi)) <= 0.0 {
                found = true;
                break;
            }
            hi *= 0.5;
        }
        if !found {
            return Err(Error::NoArc);
        }
        let s = brent(|s| g(map(s)), 0.0, 1.0 - hi, 0.0, 200)?;
        map(s)
    };
    arc_at(h)
}
