//! Radial (collision) orbits continued through the collisions by bouncing.
//!
//! With `a = 1/(2|H|)` the motion is
//!
//! ```text
//! H < 0:  r = a (1 - cos u),   t - t_ref = a^(3/2) (u - sin u)
//! H = 0:  r = u^2 / 2,         t - t_ref = u^3 / 6
//! H > 0:  r = a (cosh u - 1),  t - t_ref = a^(3/2) (sinh u - u)
//! ```
//!
//! For `H < 0` the parameter runs over the whole line and each collision is
//! at a multiple of `2 pi`. For `H >= 0` there is a single collision at
//! `u = 0`; negative `u` is the infalling half.

use std::f64::consts::{PI, TAU};

use super::{elliptic_anomaly, hyperbolic_anomaly};
use super::stumpff::{sinh_minus_x, x_minus_sin};
use crate::conic::{energy, RectilinearOrbit, StateVector};
use crate::error::{Error, Result};
use crate::vec2::Vec2;

/// Direction of radial motion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialSense {
    Outward,
    Inward,
}

impl RadialSense {
    pub fn sign(self) -> f64 {
        match self {
            RadialSense::Outward => 1.0,
            RadialSense::Inward => -1.0,
        }
    }
}

/// Radius and direction of motion at epoch `t`.
pub fn rectilinear_position(orbit: &RectilinearOrbit, t: f64) -> Result<(f64, RadialSense)> {
    let u = orbit.parameter_at_time(t)?;
    let outward = if orbit.energy() < 0.0 {
        u - TAU * (u / TAU).floor() < PI
    } else {
        u >= 0.0
    };
    let sense = if outward {
        RadialSense::Outward
    } else {
        RadialSense::Inward
    };
    Ok((orbit.radius_at(u), sense))
}

/// Rectilinear orbit through a state with zero angular momentum, and the
/// state's cycloid parameter.
pub(crate) fn from_state(state: &StateVector) -> (RectilinearOrbit, f64) {
    let r = state.q.norm();
    let ray = state.q / r;
    let rdot = ray.dot(state.v);
    let mut h = energy(state);
    // Energies at rounding level of the kinetic and potential terms are parabolic.
    if h.abs() <= 8.0 * f64::EPSILON / r {
        h = 0.0;
    }
    let u = if h < 0.0 {
        let a = -0.5 / h;
        let u = (rdot * r / a.sqrt()).atan2(1.0 - r / a);
        if u < 0.0 {
            u + TAU
        } else {
            u
        }
    } else if h == 0.0 {
        rdot.signum() * (2.0 * r).sqrt()
    } else {
        let a = 0.5 / h;
        (rdot * r / a.sqrt()).asinh()
    };
    let mut orbit = RectilinearOrbit::new(ray, h, 0.0).expect("state is finite and off the origin");
    let t_ref = state.t - orbit.time_offset(u);
    orbit = RectilinearOrbit::new(ray, h, t_ref).expect("finite epoch");
    (orbit, u)
}

impl RectilinearOrbit {
    fn scale(&self) -> f64 {
        0.5 / self.energy().abs()
    }

    /// Whether the parameter value is a collision.
    pub fn is_collision(&self, u: f64) -> bool {
        if self.energy() < 0.0 {
            let rem = u - TAU * (u / TAU).round();
            rem == 0.0
        } else {
            u == 0.0
        }
    }

    pub fn radius_at(&self, u: f64) -> f64 {
        let h = self.energy();
        if h == 0.0 {
            0.5 * u * u
        } else if h < 0.0 {
            let s = (0.5 * u).sin();
            2.0 * self.scale() * s * s
        } else {
            let s = (0.5 * u).sinh();
            2.0 * self.scale() * s * s
        }
    }

    pub fn position_at(&self, u: f64) -> Vec2 {
        self.ray() * self.radius_at(u)
    }

    /// `t(u) - t_ref`.
    pub fn time_offset(&self, u: f64) -> f64 {
        let h = self.energy();
        if h == 0.0 {
            u * u * u / 6.0
        } else {
            let a = self.scale();
            let k = a * a.sqrt();
            if h < 0.0 {
                k * x_minus_sin(u)
            } else {
                k * sinh_minus_x(u)
            }
        }
    }

    pub fn time_at(&self, u: f64) -> f64 {
        self.t_ref() + self.time_offset(u)
    }

    /// `dt/du = sqrt(a) r` (and `r` itself when `H = 0`).
    pub fn time_rate(&self, u: f64) -> f64 {
        if self.energy() == 0.0 {
            self.radius_at(u)
        } else {
            self.scale().sqrt() * self.radius_at(u)
        }
    }

    /// Elapsed time from `u_a` to `u_b`.
    pub fn elapsed(&self, u_a: f64, u_b: f64) -> f64 {
        let h = self.energy();
        if h < 0.0 {
            // (u_b - u_a) - (sin u_b - sin u_a), the sine difference in product form.
            let a = self.scale();
            let d = u_b - u_a;
            let mid = 0.5 * (u_a + u_b);
            let dd = if d.abs() < 1.0 {
                // d - 2 sin(d/2) cos(mid) = (d - 2 sin(d/2)) + 2 sin(d/2)(1 - cos mid)
                let half = 0.5 * d;
                let c = (0.5 * mid).sin();
                2.0 * x_minus_sin(half) + 2.0 * half.sin() * 2.0 * c * c
            } else {
                d - 2.0 * mid.cos() * (0.5 * d).sin()
            };
            a * a.sqrt() * dd
        } else {
            self.time_offset(u_b) - self.time_offset(u_a)
        }
    }

    /// Radial velocity at a noncollision parameter.
    pub fn radial_velocity_at(&self, u: f64) -> Result<f64> {
        if self.is_collision(u) {
            return Err(Error::CollisionVelocity);
        }
        let h = self.energy();
        Ok(if h == 0.0 {
            2.0 / u
        } else if h < 0.0 {
            1.0 / (self.scale().sqrt() * (0.5 * u).tan())
        } else {
            1.0 / (self.scale().sqrt() * (0.5 * u).tanh())
        })
    }

    pub fn state_at(&self, u: f64) -> Result<StateVector> {
        let rdot = self.radial_velocity_at(u)?;
        Ok(StateVector {
            q: self.position_at(u),
            v: self.ray() * rdot,
            t: self.time_at(u),
        })
    }

    /// Cycloid parameter at epoch `t`.
    pub fn parameter_at_time(&self, t: f64) -> Result<f64> {
        let tau = t - self.t_ref();
        let h = self.energy();
        if h == 0.0 {
            return Ok((6.0 * tau).cbrt());
        }
        let a = self.scale();
        let m = tau / (a * a.sqrt());
        if h < 0.0 {
            // reduced about the nearest collision, so times just before one
            // keep their precision
            elliptic_anomaly(m, 1.0, 0.0)
        } else {
            hyperbolic_anomaly(m, 1.0, 0.0)
        }
    }
}
