//! States, unifocal conics and the conserved quantities of the planar Kepler
//! problem.
//!
//! Units are canonical: the gravitational parameter is 1, so the equation of
//! motion is `q'' = -q / r^3`. A nonrectilinear orbit is described by the
//! three constants of its *unifocal equation*
//!
//! ```text
//! r = alpha * x + beta * y + gamma,      gamma = C^2 > 0,
//! ```
//!
//! where `E = (alpha, beta)` is the eccentricity vector (it points away from
//! the pericenter) and `C = x*vy - y*vx` is the angular momentum. Energy,
//! eccentricity and semiparameter are tied by `alpha^2 + beta^2 - 1 = 2*H*gamma`.

use crate::error::{Error, Result};
use crate::kepler::rectilinear;
use crate::vec2::Vec2;

/// Conics with `|e^2 - 1|` at or below this value are treated as parabolas.
pub const PARABOLIC_BAND: f64 = 1e-13;

/// Sense of rotation about the attracting center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Counterclockwise, `C > 0`.
    Ccw,
    /// Clockwise, `C < 0`.
    Cw,
}

impl Orientation {
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Ccw => 1.0,
            Orientation::Cw => -1.0,
        }
    }

    /// Orientation with the sign of `value`; zero maps to counterclockwise.
    pub fn from_sign(value: f64) -> Self {
        if value < 0.0 {
            Orientation::Cw
        } else {
            Orientation::Ccw
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
        }
    }
}

/// Position, velocity and epoch of the moving body. Collision states are not
/// representable here; they live inside [`RectilinearOrbit`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector {
    pub q: Vec2,
    pub v: Vec2,
    pub t: f64,
}

impl StateVector {
    pub fn new(q: Vec2, v: Vec2, t: f64) -> Result<Self> {
        if !(q.is_finite() && v.is_finite() && t.is_finite()) {
            return Err(Error::InvalidInput("state has non-finite components".into()));
        }
        if q.norm() == 0.0 {
            return Err(Error::InvalidInput("state at collision (q = 0)".into()));
        }
        Ok(StateVector { q, v, t })
    }

    pub fn radius(&self) -> f64 {
        self.q.norm()
    }
}

/// Conic type, decided by the sign of `e^2 - 1` (within [`PARABOLIC_BAND`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConicKind {
    Ellipse,
    Parabola,
    Hyperbola,
}

/// Branch `r = alpha*x + beta*y + gamma` with focus at the origin.
///
/// Besides the three coefficients the value caches `e^2 - 1`. Constructors
/// that know the energy exactly (the Gauss construction, the affine images of
/// a Lambert cycle) store `2*H*gamma` there, which keeps the energy accurate
/// when `alpha^2 + beta^2` is close to one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnifocalConic {
    alpha: f64,
    beta: f64,
    gamma: f64,
    ecc2m1: f64,
}

impl UnifocalConic {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let ecc2m1 = alpha.mul_add(alpha, beta.mul_add(beta, -1.0));
        Self::from_parts(alpha, beta, gamma, ecc2m1)
    }

    /// Conic whose energy is known to be `energy`; the identity
    /// `alpha^2 + beta^2 - 1 = 2*H*gamma` is assumed to hold to rounding.
    pub fn with_energy(alpha: f64, beta: f64, gamma: f64, energy: f64) -> Result<Self> {
        Self::from_parts(alpha, beta, gamma, 2.0 * energy * gamma)
    }

    pub(crate) fn from_parts(alpha: f64, beta: f64, gamma: f64, ecc2m1: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite() && gamma.is_finite() && ecc2m1.is_finite()) {
            return Err(Error::InvalidInput("conic has non-finite parameters".into()));
        }
        if gamma <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "semiparameter must be positive, got {gamma}"
            )));
        }
        Ok(UnifocalConic {
            alpha,
            beta,
            gamma,
            ecc2m1,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `e^2 - 1`, equal to `2*H*gamma`.
    pub fn ecc2_minus_one(&self) -> f64 {
        self.ecc2m1
    }

    pub fn eccentricity_vector(&self) -> Vec2 {
        Vec2::new(self.alpha, self.beta)
    }

    pub fn eccentricity(&self) -> f64 {
        (1.0 + self.ecc2m1).max(0.0).sqrt()
    }

    pub fn kind(&self) -> ConicKind {
        if self.ecc2m1.abs() <= PARABOLIC_BAND {
            ConicKind::Parabola
        } else if self.ecc2m1 < 0.0 {
            ConicKind::Ellipse
        } else {
            ConicKind::Hyperbola
        }
    }

    /// Energy `H = (e^2 - 1) / (2 gamma)`.
    pub fn energy(&self) -> f64 {
        self.ecc2m1 / (2.0 * self.gamma)
    }

    /// Energy used by the time laws: exactly zero for parabolas.
    pub(crate) fn dynamical_energy(&self) -> f64 {
        match self.kind() {
            ConicKind::Parabola => 0.0,
            _ => self.energy(),
        }
    }

    /// Signed semimajor axis `-1/(2H)`.
    pub fn semimajor_axis(&self) -> Result<f64> {
        match self.kind() {
            ConicKind::Parabola => Err(Error::ParabolicSemimajorAxis),
            _ => Ok(-self.gamma / self.ecc2m1),
        }
    }

    /// Unit vector from the focus towards the pericenter, `-E/e`. Circles use +x.
    pub fn periapsis_direction(&self) -> Vec2 {
        let e = self.eccentricity_vector();
        if e.norm() == 0.0 {
            Vec2::X
        } else {
            -e.normalized()
        }
    }

    pub fn periapsis_radius(&self) -> f64 {
        self.gamma / (1.0 + self.eccentricity())
    }

    /// The same branch seen in a frame rotated by `-angle`, i.e. the branch
    /// itself rotated counterclockwise by `angle`.
    pub fn rotated(&self, angle: f64) -> UnifocalConic {
        let e = self.eccentricity_vector().rotated(angle);
        UnifocalConic {
            alpha: e.x,
            beta: e.y,
            ..*self
        }
    }

    /// Mirror image in the horizontal axis.
    pub fn reflected_x_axis(&self) -> UnifocalConic {
        UnifocalConic {
            beta: -self.beta,
            ..*self
        }
    }

    /// `alpha*x + beta*y + gamma`; this is the radius of `p` when `p` is on the branch.
    pub fn linear_part(&self, p: Vec2) -> f64 {
        self.alpha * p.x + self.beta * p.y + self.gamma
    }

    /// Membership of the Keplerian branch: the unifocal equation holds to
    /// `tol` (relative to `1 + |p|`) and its right-hand side is positive,
    /// which excludes the far branch of a hyperbola.
    pub fn contains(&self, p: Vec2, tol: f64) -> bool {
        let lin = self.linear_part(p);
        lin > 0.0 && unifocal_residual(self, p).abs() <= tol * (1.0 + p.norm())
    }
}

/// Angular momentum `C = x*vy - y*vx`.
pub fn angular_momentum(state: &StateVector) -> f64 {
    state.q.cross(state.v)
}

/// Eccentricity vector `E = (x/r - vy*C, y/r + vx*C)`.
pub fn eccentricity_vector(state: &StateVector) -> Vec2 {
    let c = angular_momentum(state);
    let r = state.q.norm();
    Vec2::new(state.q.x / r - state.v.y * c, state.q.y / r + state.v.x * c)
}

/// Energy `H = |v|^2/2 - 1/r`.
pub fn energy(state: &StateVector) -> f64 {
    0.5 * state.v.norm_squared() - 1.0 / state.q.norm()
}

/// `|p| - (alpha*x + beta*y + gamma)`.
pub fn unifocal_residual(conic: &UnifocalConic, p: Vec2) -> f64 {
    p.norm() - conic.linear_part(p)
}

/// Semimajor axis `a = -1/(2H)`; negative for hyperbolas.
pub fn semimajor_axis(energy: f64) -> Result<f64> {
    if energy == 0.0 {
        return Err(Error::ParabolicSemimajorAxis);
    }
    Ok(-1.0 / (2.0 * energy))
}

/// Second focus `F = 2a * (alpha, beta)`.
pub fn second_focus(conic: &UnifocalConic, energy: f64) -> Result<Vec2> {
    if energy == 0.0 {
        return Err(Error::SecondFocusAtInfinity {
            direction: conic.eccentricity_vector(),
        });
    }
    let a = semimajor_axis(energy)?;
    Ok(conic.eccentricity_vector() * (2.0 * a))
}

/// Rectilinear (collision) orbit on a ray from the origin.
///
/// The phase convention puts the cycloid parameter `u = 0` at a collision,
/// which happens at epoch `t_ref`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectilinearOrbit {
    ray: Vec2,
    energy: f64,
    t_ref: f64,
}

impl RectilinearOrbit {
    pub fn new(ray: Vec2, energy: f64, t_ref: f64) -> Result<Self> {
        let n = ray.norm();
        if !(n.is_finite() && n > 0.0 && energy.is_finite() && t_ref.is_finite()) {
            return Err(Error::InvalidInput("invalid rectilinear orbit".into()));
        }
        Ok(RectilinearOrbit {
            ray: ray / n,
            energy,
            t_ref,
        })
    }

    pub fn ray(&self) -> Vec2 {
        self.ray
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn t_ref(&self) -> f64 {
        self.t_ref
    }
}

/// An orbit of the body around the origin, up to nothing: the epoch is part of it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicOrbit {
    pub conic: UnifocalConic,
    pub orientation: Orientation,
    /// Epoch of a pericenter passage.
    pub t_peri: f64,
}

impl ConicOrbit {
    pub fn new(conic: UnifocalConic, orientation: Orientation, t_peri: f64) -> Self {
        ConicOrbit {
            conic,
            orientation,
            t_peri,
        }
    }

    /// `C = orientation * sqrt(gamma)`.
    pub fn angular_momentum(&self) -> f64 {
        self.orientation.sign() * self.conic.gamma().sqrt()
    }

    pub fn energy(&self) -> f64 {
        self.conic.energy()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Orbit {
    Conic(ConicOrbit),
    Rectilinear(RectilinearOrbit),
}

impl Orbit {
    pub fn energy(&self) -> f64 {
        match self {
            Orbit::Conic(c) => c.energy(),
            Orbit::Rectilinear(r) => r.energy(),
        }
    }

    pub fn angular_momentum(&self) -> f64 {
        match self {
            Orbit::Conic(c) => c.angular_momentum(),
            Orbit::Rectilinear(_) => 0.0,
        }
    }

    pub fn is_rectilinear(&self) -> bool {
        matches!(self, Orbit::Rectilinear(_))
    }

    pub fn as_conic(&self) -> Option<&ConicOrbit> {
        match self {
            Orbit::Conic(c) => Some(c),
            Orbit::Rectilinear(_) => None,
        }
    }
}

/// Orbit through a noncollision state, together with the state's anomaly
/// parameter on that orbit.
pub fn orbit_and_anomaly_from_state(state: &StateVector) -> (Orbit, f64) {
    let c = angular_momentum(state);
    if c == 0.0 {
        let (orbit, u) = rectilinear::from_state(state);
        return (Orbit::Rectilinear(orbit), u);
    }
    let e = eccentricity_vector(state);
    let gamma = c * c;
    // e^2 - 1 = 2 H gamma, evaluated from the state's energy to avoid the
    // cancellation in alpha^2 + beta^2 - 1.
    let conic = UnifocalConic::from_parts(e.x, e.y, gamma, 2.0 * energy(state) * gamma)
        .expect("finite state with C != 0 gives a valid conic");
    let mut orbit = ConicOrbit::new(conic, Orientation::from_sign(c), 0.0);
    let s = orbit.anomaly_of(state.q).expect("a state lies on its own branch");
    orbit.t_peri = state.t - orbit.time_since_periapsis(s);
    (Orbit::Conic(orbit), s)
}

/// Orbit through a noncollision state.
pub fn orbit_from_state(state: &StateVector) -> Orbit {
    orbit_and_anomaly_from_state(state).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(x: f64, y: f64, vx: f64, vy: f64) -> StateVector {
        StateVector::new(Vec2::new(x, y), Vec2::new(vx, vy), 0.0).unwrap()
    }

    #[test]
    fn angular_momentum_examples() {
        assert_eq!(angular_momentum(&st(1.0, 0.0, 0.0, 1.0)), 1.0);
        assert_eq!(angular_momentum(&st(1.0, 0.0, 1.0, 0.0)), 0.0);
        assert_eq!(angular_momentum(&st(1.0, 0.0, 0.0, 0.5)), 0.5);
    }

    #[test]
    fn eccentricity_vector_examples() {
        assert_eq!(eccentricity_vector(&st(1.0, 0.0, 0.0, 1.0)), Vec2::ZERO);
        let e = eccentricity_vector(&st(1.0, 0.0, 0.0, 2f64.sqrt()));
        assert!((e - Vec2::new(-1.0, 0.0)).norm() < 1e-15);
        assert!(energy(&st(1.0, 0.0, 0.0, 2f64.sqrt())).abs() < 1e-15);
        let s = st(1.0, 0.0, 0.0, 0.5);
        let e = eccentricity_vector(&s);
        assert_eq!(e, Vec2::new(0.75, 0.0));
        let h = energy(&s);
        assert_eq!(h, -0.875);
        let gamma = 0.25;
        assert!((e.norm_squared() - 1.0 - 2.0 * h * gamma).abs() < 1e-15);
    }

    #[test]
    fn energy_examples() {
        assert_eq!(energy(&st(1.0, 0.0, 0.0, 1.0)), -0.5);
        assert!(energy(&st(1.0, 0.0, 0.0, 2f64.sqrt())).abs() < 1e-15);
        // v^2/2 - 1/r = 1/2 - 1/2
        assert_eq!(energy(&st(2.0, 0.0, 0.0, 1.0)), 0.0);
        assert!((energy(&st(2.0, 0.0, 0.0, 0.5f64.sqrt())) + 0.25).abs() < 1e-16);
    }

    #[test]
    fn orbit_from_state_examples() {
        match orbit_from_state(&st(1.0, 0.0, 0.0, 1.0)) {
            Orbit::Conic(o) => {
                assert_eq!(o.conic.alpha(), 0.0);
                assert_eq!(o.conic.beta(), 0.0);
                assert_eq!(o.conic.gamma(), 1.0);
                assert_eq!(o.orientation, Orientation::Ccw);
            }
            other => panic!("expected conic, got {other:?}"),
        }
        match orbit_from_state(&st(1.0, 0.0, 1.0, 0.0)) {
            Orbit::Rectilinear(r) => {
                assert_eq!(r.ray(), Vec2::X);
                assert_eq!(r.energy(), -0.5);
            }
            other => panic!("expected rectilinear, got {other:?}"),
        }
        match orbit_from_state(&st(1.0, 0.0, 0.0, 0.5)) {
            Orbit::Conic(o) => {
                assert_eq!(o.conic.alpha(), 0.75);
                assert_eq!(o.conic.beta(), 0.0);
                assert_eq!(o.conic.gamma(), 0.25);
                assert_eq!(o.orientation, Orientation::Ccw);
                assert!(unifocal_residual(&o.conic, Vec2::X).abs() < 1e-15);
            }
            other => panic!("expected conic, got {other:?}"),
        }
    }

    #[test]
    fn unifocal_residual_examples() {
        let circle = UnifocalConic::new(0.0, 0.0, 1.0).unwrap();
        assert_eq!(unifocal_residual(&circle, Vec2::new(0.0, 1.0)), 0.0);
        assert_eq!(unifocal_residual(&circle, Vec2::new(2.0, 0.0)), 1.0);
        let ell = UnifocalConic::new(0.75, 0.0, 0.25).unwrap();
        assert_eq!(unifocal_residual(&ell, Vec2::new(1.0, 0.0)), 0.0);
    }

    #[test]
    fn semimajor_axis_examples() {
        assert_eq!(semimajor_axis(-0.5).unwrap(), 1.0);
        assert_eq!(semimajor_axis(-0.25).unwrap(), 2.0);
        assert_eq!(semimajor_axis(0.5).unwrap(), -1.0);
        assert_eq!(semimajor_axis(0.0), Err(Error::ParabolicSemimajorAxis));
    }

    #[test]
    fn second_focus_examples() {
        let circle = UnifocalConic::new(0.0, 0.0, 1.0).unwrap();
        assert_eq!(second_focus(&circle, -0.5).unwrap(), Vec2::ZERO);

        let ell = UnifocalConic::new(0.75, 0.0, 0.25).unwrap();
        let f = second_focus(&ell, -0.875).unwrap();
        assert!((f - Vec2::new(6.0 / 7.0, 0.0)).norm() < 1e-15);
        // |FP| + |OP| = 2a on sampled branch points.
        let a = 4.0 / 7.0;
        for k in 0..32 {
            let nu = k as f64 * std::f64::consts::TAU / 32.0;
            let r = 0.25 / (1.0 + 0.75 * (nu - std::f64::consts::PI).cos());
            let p = Vec2::from_angle(nu) * r;
            assert!((p.distance(f) + p.norm() - 2.0 * a).abs() < 1e-14);
        }

        // Hyperbola with alpha = 0.5 and H = +0.5: gamma = (e^2 - 1)/(2H) < 0 is
        // impossible for e = 0.5, so the example pairs alpha with a hyperbolic
        // energy only through the formula.
        let hyp_like = UnifocalConic::new(0.5, 0.0, 1.0).unwrap();
        let f = second_focus(&hyp_like, 0.5).unwrap();
        assert_eq!(f, Vec2::new(-1.0, 0.0));

        let parab = UnifocalConic::new(-1.0, 0.0, 1.0).unwrap();
        assert!(matches!(
            second_focus(&parab, 0.0),
            Err(Error::SecondFocusAtInfinity { .. })
        ));
    }

    #[test]
    fn hyperbolic_second_focus_distance_difference() {
        // e = 2, gamma = 3 gives H = (4-1)/6 = 0.5 and a = -1.
        let hyp = UnifocalConic::new(2.0, 0.0, 3.0).unwrap();
        let h = hyp.energy();
        assert!((h - 0.5).abs() < 1e-15);
        let f = second_focus(&hyp, h).unwrap();
        assert_eq!(f, Vec2::new(-4.0, 0.0));
        // Branch points: gamma / (1 + e cos(nu - pi)) with |nu - pi| < acos(-1/e).
        let nu_max = (-0.5f64).acos();
        for k in 1..20 {
            let d = -nu_max + 2.0 * nu_max * k as f64 / 20.0;
            let r = 3.0 / (1.0 + 2.0 * d.cos());
            let p = Vec2::from_angle(std::f64::consts::PI + d) * r;
            assert!(hyp.contains(p, 1e-12));
            assert!(((p.distance(f) - p.norm()).abs() - 2.0).abs() < 1e-11);
        }
    }

    #[test]
    fn state_rejects_collision() {
        assert!(StateVector::new(Vec2::ZERO, Vec2::X, 0.0).is_err());
        assert!(StateVector::new(Vec2::new(f64::NAN, 0.0), Vec2::X, 0.0).is_err());
    }
}
