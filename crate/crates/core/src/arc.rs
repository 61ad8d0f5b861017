use crate::conic::{ConicKind, Orbit, StateVector};
use crate::error::{Error, Result};
use crate::kepler::{self, AnomalyInterval, TofMode};
use crate::vec2::Vec2;

/// An orbit restricted to an anomaly interval `[s_a, s_b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeplerianArc {
    orbit: Orbit,
    interval: AnomalyInterval,
}

impl KeplerianArc {
    pub fn new(orbit: Orbit, s_a: f64, s_b: f64) -> Result<Self> {
        if !(s_a.is_finite() && s_b.is_finite()) || s_b <= s_a {
            return Err(Error::InvalidInput(format!(
                "anomaly interval must satisfy s_a < s_b (got {s_a}, {s_b})"
            )));
        }
        Ok(KeplerianArc {
            orbit,
            interval: AnomalyInterval { s_a, s_b },
        })
    }

    pub fn orbit(&self) -> &Orbit {
        &self.orbit
    }

    pub fn interval(&self) -> AnomalyInterval {
        self.interval
    }

    pub fn s_a(&self) -> f64 {
        self.interval.s_a
    }

    pub fn s_b(&self) -> f64 {
        self.interval.s_b
    }

    pub fn energy(&self) -> f64 {
        self.orbit.energy()
    }

    pub fn start(&self) -> Vec2 {
        self.orbit.position_at(self.s_a())
    }

    pub fn end(&self) -> Vec2 {
        self.orbit.position_at(self.s_b())
    }

    pub fn start_state(&self) -> Result<StateVector> {
        self.orbit.state_at(self.s_a())
    }

    pub fn end_state(&self) -> Result<StateVector> {
        self.orbit.state_at(self.s_b())
    }

    /// Full turns made by the arc (zero for open orbits).
    pub fn revolutions(&self) -> u32 {
        if self.orbit.anomaly_period().is_some() {
            self.interval.revolutions()
        } else {
            0
        }
    }

    pub fn time_of_flight(&self) -> f64 {
        kepler::time_of_flight(self)
    }

    pub fn time_of_flight_with(&self, mode: TofMode) -> f64 {
        kepler::time_of_flight_with(self, mode)
    }

    pub fn kind(&self) -> Option<ConicKind> {
        self.orbit.as_conic().map(|c| c.conic.kind())
    }

    /// Chord length `|AB|`.
    pub fn chord(&self) -> f64 {
        self.start().distance(self.end())
    }

    /// `|OA| + |OB|`.
    pub fn radii_sum(&self) -> f64 {
        self.start().norm() + self.end().norm()
    }

    /// The same arc with the epoch of `A` moved to `t`.
    pub fn with_start_time(&self, t: f64) -> KeplerianArc {
        let shift = t - self.orbit.time_at(self.s_a());
        let orbit = match self.orbit {
            Orbit::Conic(mut c) => {
                c.t_peri += shift;
                Orbit::Conic(c)
            }
            Orbit::Rectilinear(r) => Orbit::Rectilinear(
                crate::conic::RectilinearOrbit::new(r.ray(), r.energy(), r.t_ref() + shift)
                    .expect("shifted orbit stays valid"),
            ),
        };
        KeplerianArc { orbit, ..*self }
    }
}
