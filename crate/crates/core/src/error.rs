use thiserror::Error;

use crate::vec2::Vec2;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parabolic: semimajor axis undefined")]
    ParabolicSemimajorAxis,

    #[error("parabola: second focus at infinity, direction = {direction}")]
    SecondFocusAtInfinity { direction: Vec2 },

    #[error("nonperiodic orbit (H = {energy})")]
    NonPeriodic { energy: f64 },

    #[error("velocity undefined at collision")]
    CollisionVelocity,

    #[error("collision encountered: use rectilinear analytic extension")]
    CollisionEncountered,

    #[error("rectilinear: swept area is zero")]
    ZeroAngularMomentum,

    #[error("rectilinear family: use rectilinear solver")]
    RectilinearFamily,

    #[error("rectilinear arcs are cycle limits, not seeds")]
    RectilinearSeed,

    #[error("no arc with requested winding")]
    NoArcWithWinding,

    #[error("no arc from A to B along this orbit in the requested direction")]
    NoArc,

    #[error("energy {energy} is below the minimal energy {h_min} of the chord")]
    BelowMinimumEnergy { energy: f64, h_min: f64 },

    #[error("classification defined for sub-revolution arcs")]
    NotSubRevolution,

    #[error("antipodal directions: decomposition degenerate")]
    AntipodalDirections,

    #[error("Q at infinity")]
    ParallelTangents,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what} did not converge after {iterations} iterations")]
    NonConvergence { what: &'static str, iterations: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
