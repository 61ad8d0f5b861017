//! Two-point boundary geometry: minimal energy, the rescaled Gauss
//! construction, Euler's parabolic time, the Lambert solver and arc
//! classification.
//!
//! Most computations run in the *chord frame*: the rotation that carries the
//! chord direction `B - A` to `+x`. There `A` and `B` share the ordinate
//! `y0`, and every branch through both points has
//!
//! ```text
//! alpha = (x_A + x_B) / (r_A + r_B),     gamma = r_A - alpha x_A - beta y0,
//! ```
//!
//! so the branches form a one-parameter family indexed by `beta`.

mod classify;
mod rectilinear;
mod solver;

use crate::conic::UnifocalConic;
use crate::error::{Error, Result};
use crate::vec2::Vec2;

pub use classify::{classify_arc, ArcClass, Sense};
pub(crate) use rectilinear::rectilinear_arc;
pub use rectilinear::{solve_rectilinear_lambert, RectilinearClass};
pub(crate) use solver::arc_on_conic;
pub use solver::{
    solve_lambert, solve_lambert_multi, FamilyParam, LambertFamily, MultiRevBranch,
};

/// Angle between the rays `OA` and `OB` below which the endpoints count as
/// being on one ray.
pub const SAME_RAY_ANGLE: f64 = 1e-7;

/// Endpoints of a transfer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordConfig {
    pub a: Vec2,
    pub b: Vec2,
}

impl ChordConfig {
    pub fn new(a: Vec2, b: Vec2) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidInput("non-finite endpoint".into()));
        }
        if a.norm() == 0.0 || b.norm() == 0.0 {
            return Err(Error::InvalidInput("endpoint at the attracting center".into()));
        }
        Ok(ChordConfig { a, b })
    }

    /// `|AB|`.
    pub fn chord(&self) -> f64 {
        self.a.distance(self.b)
    }

    /// `|OA| + |OB|`.
    pub fn radii_sum(&self) -> f64 {
        self.a.norm() + self.b.norm()
    }

    pub fn same_ray(&self) -> bool {
        self.a.angle_to(self.b) < SAME_RAY_ANGLE
    }
}

/// Minimal energy `-2 / (|AB| + |OA| + |OB|)` of a branch through `A` and `B`.
pub fn h_min(cfg: &ChordConfig) -> f64 {
    -2.0 / (cfg.chord() + cfg.radii_sum())
}

/// Euler's parabolic time `6 dt = s^(3/2) -+ (s - 2c)^(3/2)` with
/// `s = |OA| + |OB| + |AB|`; minus for direct arcs.
pub fn euler_parabolic_tof(cfg: &ChordConfig, indirect: bool) -> f64 {
    let c = cfg.chord();
    let s = cfg.radii_sum() + c;
    let m = (s - 2.0 * c).max(0.0);
    let (ps, pm) = (s * s.sqrt(), m * m.sqrt());
    if indirect {
        (ps + pm) / 6.0
    } else {
        // s^(3/2) - m^(3/2) = (s^3 - m^3) / (s^(3/2) + m^(3/2)) with s - m = 2c exact.
        let num = 2.0 * c * (s * s + s * m + m * m);
        num / (ps + pm) / 6.0
    }
}

/// The rotated frame in which the chord is horizontal and points to `+x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordFrame {
    /// Unit chord direction in the caller's frame.
    pub u: Vec2,
    pub x_a: f64,
    pub x_b: f64,
    /// Common ordinate of `A` and `B`.
    pub y0: f64,
    pub r_a: f64,
    pub r_b: f64,
    /// `alpha` shared by every branch through `A` and `B`.
    pub alpha0: f64,
    /// `gamma` of the branch with `beta = 0`.
    pub gamma0: f64,
    /// `sqrt(1 - alpha0^2)`: the parabolas have `beta = +-b_p`.
    pub b_p: f64,
    /// `1 - alpha0` and `1 + alpha0` without cancellation.
    pub one_minus_alpha0: f64,
    pub one_plus_alpha0: f64,
}

/// `(r - x, r + x)` for a point at distance `r` with abscissa `x` and
/// ordinate `y`, the smaller one from `r^2 - x^2 = y^2`.
fn radial_gaps(r: f64, x: f64, y: f64) -> (f64, f64) {
    if x > 0.0 {
        (y * y / (r + x), r + x)
    } else {
        (r - x, y * y / (r - x))
    }
}

impl ChordFrame {
    pub fn new(cfg: &ChordConfig) -> Result<Self> {
        let d = cfg.b - cfg.a;
        if d.norm() == 0.0 {
            return Err(Error::InvalidInput("coinciding endpoints".into()));
        }
        let u = d.normalized();
        let sum = cfg.a + cfg.b;
        let (r_a, r_b) = (cfg.a.norm(), cfg.b.norm());
        let x_a = u.dot(cfg.a);
        let x_b = u.dot(cfg.b);
        let y0 = 0.5 * u.cross(sum);
        let alpha0 = u.dot(sum) / (r_a + r_b);
        let gamma0 = if x_a.abs() < x_b.abs() {
            r_a - alpha0 * x_a
        } else {
            r_b - alpha0 * x_b
        };
        let (ma, pa) = radial_gaps(r_a, x_a, y0);
        let (mb, pb) = radial_gaps(r_b, x_b, y0);
        let one_minus_alpha0 = (ma + mb) / (r_a + r_b);
        let one_plus_alpha0 = (pa + pb) / (r_a + r_b);
        let b_p = (one_minus_alpha0 * one_plus_alpha0).sqrt();
        Ok(ChordFrame {
            u,
            x_a,
            x_b,
            y0,
            r_a,
            r_b,
            alpha0,
            gamma0,
            b_p,
            one_minus_alpha0,
            one_plus_alpha0,
        })
    }

    /// Vector of the chord frame expressed in the caller's frame.
    pub fn to_caller(&self, v: Vec2) -> Vec2 {
        self.u * v.x + self.u.perp() * v.y
    }

    pub fn from_caller(&self, v: Vec2) -> Vec2 {
        Vec2::new(self.u.dot(v), self.u.cross(v))
    }

    /// `gamma(beta) = gamma0 - beta y0`.
    pub fn gamma(&self, beta: f64) -> f64 {
        self.gamma0 - beta * self.y0
    }

    /// Branch with chord-frame eccentricity vector `(alpha0, beta)`,
    /// expressed in the caller's frame.
    pub fn conic(&self, beta: f64, gamma: f64, ecc2m1: f64) -> Result<UnifocalConic> {
        let e = self.to_caller(Vec2::new(self.alpha0, beta));
        UnifocalConic::from_parts(e.x, e.y, gamma, ecc2m1)
    }
}

/// Branches through `A` and `B` with energy `H`: none below the minimal
/// energy, one at it, two above.
pub fn gauss_rescaled(cfg: &ChordConfig, energy: f64) -> Result<Vec<UnifocalConic>> {
    if cfg.same_ray() {
        return Err(Error::RectilinearFamily);
    }
    let f = ChordFrame::new(cfg)?;
    let h = energy;
    // (beta + H y0)^2 = (1 + H r_A)^2 - (alpha0 + H x_A)^2, as a product.
    // Take the endpoint with the smaller |x| for the better conditioned form.
    let (x, r) = if f.x_a.abs() < f.x_b.abs() {
        (f.x_a, f.r_a)
    } else {
        (f.x_b, f.r_b)
    };
    let (below, above) = radial_gaps(r, x, f.y0);
    // 1 + H r -+ (alpha0 + H x) = (1 -+ alpha0) + H (r -+ x), with both
    // parts free of cancellation
    let lo = f.one_minus_alpha0 + h * below;
    let hi = f.one_plus_alpha0 + h * above;
    let disc = lo * hi;
    let center = -h * f.y0;
    let eps = 4.0 * f64::EPSILON;
    let tangent = lo.abs() <= eps * (f.one_minus_alpha0 + (h * below).abs())
        || hi.abs() <= eps * (f.one_plus_alpha0 + (h * above).abs());
    let mut betas = Vec::with_capacity(2);
    if tangent {
        betas.push(center);
    } else if disc > 0.0 {
        let s = disc.sqrt();
        betas.push(center - s);
        betas.push(center + s);
    }
    let mut out = Vec::with_capacity(2);
    for beta in betas {
        let gamma = f.gamma(beta);
        if gamma > 0.0 {
            out.push(f.conic(beta, gamma, 2.0 * h * gamma)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::{second_focus, unifocal_residual};

    fn cfg(ax: f64, ay: f64, bx: f64, by: f64) -> ChordConfig {
        ChordConfig::new(Vec2::new(ax, ay), Vec2::new(bx, by)).unwrap()
    }

    #[test]
    fn h_min_examples() {
        let v = h_min(&cfg(1.0, 0.0, 0.0, 1.0));
        assert!((v + 2.0 / (2f64.sqrt() + 2.0)).abs() < 1e-16);
        assert!((v + 0.585_786_437_626_905).abs() < 1e-14);
        assert_eq!(h_min(&cfg(1.0, 0.0, 2.0, 0.0)), -0.5);
        assert_eq!(h_min(&cfg(1.0, 0.0, -1.0, 0.0)), -0.5);
    }

    #[test]
    fn euler_examples() {
        let c = cfg(1.0, 0.0, 0.0, 1.0);
        let s2 = 2f64.sqrt();
        let direct = ((2.0 + s2).powf(1.5) - (2.0 - s2).powf(1.5)) / 6.0;
        assert!((euler_parabolic_tof(&c, false) - direct).abs() < 1e-15);
        let indirect = ((2.0 + s2).powf(1.5) + (2.0 - s2).powf(1.5)) / 6.0;
        assert!((euler_parabolic_tof(&c, true) - indirect).abs() < 1e-15);
        assert!(indirect > direct);
        let near = cfg(1.0, 0.0, 1.0, 1e-9);
        assert!(euler_parabolic_tof(&near, false) < 1e-8);
    }

    #[test]
    fn symmetric_config_has_symmetric_solutions() {
        let c = cfg(-0.8, 0.6, 0.8, 0.6);
        let sols = gauss_rescaled(&c, -0.3).unwrap();
        assert_eq!(sols.len(), 2);
        for s in &sols {
            assert!(s.alpha().abs() < 1e-16);
        }
    }

    #[test]
    fn zero_energy_solutions_on_unit_circle() {
        let c = cfg(1.0, 0.2, -0.3, 1.4);
        let sols = gauss_rescaled(&c, 0.0).unwrap();
        assert_eq!(sols.len(), 2);
        for s in &sols {
            assert!((s.eccentricity_vector().norm() - 1.0).abs() < 1e-15);
            for p in [c.a, c.b] {
                assert!(unifocal_residual(s, p).abs() < 1e-15 * (1.0 + p.norm()));
            }
        }
    }

    #[test]
    fn tangency_at_minimal_energy() {
        let c = cfg(1.0, 0.0, 0.0, 1.0);
        let hm = h_min(&c);
        let sols = gauss_rescaled(&c, hm).unwrap();
        assert_eq!(sols.len(), 1);
        let f = second_focus(&sols[0], hm).unwrap();
        // F on segment [A, B]: |AF| + |FB| = |AB|.
        assert!((c.a.distance(f) + f.distance(c.b) - c.chord()).abs() < 1e-12);
        assert_eq!(gauss_rescaled(&c, hm - 1e-9).unwrap().len(), 0);
        assert_eq!(gauss_rescaled(&c, hm + 1e-9).unwrap().len(), 2);
    }

    #[test]
    fn same_ray_is_rejected() {
        let c = cfg(1.0, 0.0, 2.0, 0.0);
        assert_eq!(gauss_rescaled(&c, -0.1), Err(Error::RectilinearFamily));
    }
}
