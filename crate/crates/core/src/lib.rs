//! Planar Kepler problem and Lambert's theorem.
//!
//! The crate works in canonical units (gravitational parameter 1) and covers:
//!
//! * states, unifocal conics `r = alpha x + beta y + gamma` and conserved
//!   quantities ([`conic`]);
//! * time along every orbit type, including radial orbits continued through
//!   collisions ([`kepler`], [`arc`]);
//! * an independent numerical propagator used as a test oracle ([`oracle`]);
//! * minimal energy, the rescaled Gauss construction, Euler's parabolic
//!   formula, the Lambert solver and arc classification ([`lambert`]);
//! * Lambert cycles generated by affine maps, and the affine geometry of
//!   conics ([`cycle`], [`affine`]);
//! * Maupertuis and principal actions with the variational identities
//!   ([`action`]);
//! * seeded verification suites, records and SVG output ([`verify`],
//!   [`record`], [`svg`]).
//!
//! ```
//! use lambert_core::prelude::*;
//!
//! let a = Vec2::new(1.0, 0.0);
//! let b = Vec2::new(0.0, 1.0);
//! let arc = solve_lambert(a, b, 1.2, Orientation::Ccw, 0).unwrap();
//! assert!((arc.time_of_flight() - 1.2).abs() < 1e-10);
//! ```

pub mod action;
pub mod affine;
pub mod arc;
pub mod conic;
pub mod cycle;
pub mod error;
pub mod kepler;
pub mod lambert;
pub mod oracle;
pub mod quadrature;
pub mod record;
pub mod roots;
pub mod sampling;
pub mod svg;
pub mod vec2;
pub mod verify;

pub mod prelude {
    pub use crate::action::{
        bisector_tangent_check, jacobi_velocity_decomposition, maupertuis_action,
        principal_action, verify_hamilton_dwdh, ActionReport,
    };
    pub use crate::affine::{affine_focus_property_check, geometric_progression_check, AffineMap2D};
    pub use crate::arc::KeplerianArc;
    pub use crate::conic::{
        angular_momentum, eccentricity_vector, energy, orbit_from_state, second_focus,
        semimajor_axis, unifocal_residual, ConicKind, ConicOrbit, Orbit, Orientation,
        RectilinearOrbit, StateVector, UnifocalConic,
    };
    pub use crate::cycle::{
        affine_map_o12, cycle_arc_at, cycle_from_arc, cycle_invariant_report,
        normalize_to_vertical, rectilinear_limit, CycleEnd, LambertCycle,
    };
    pub use crate::error::{Error, Result};
    pub use crate::kepler::{
        period, rectilinear_position, solve_kepler_elliptic, solve_kepler_hyperbolic, state_at,
        time_of_flight, TofMode,
    };
    pub use crate::lambert::{
        classify_arc, euler_parabolic_tof, gauss_rescaled, h_min, solve_lambert, ArcClass,
        ChordConfig, Sense,
    };
    pub use crate::oracle::{propagate, sweep_area, PropagationResult};
    pub use crate::record::{render, Format, Record};
    pub use crate::verify::{run_suite, Suite, SuiteReport, Tolerances};
    pub use crate::vec2::Vec2;
}
