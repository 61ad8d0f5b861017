//! Lambert cycles: the one-parameter families of arcs with common chord,
//! radii sum, energy and transfer time.
//!
//! Work happens in the chord frame, where `A` and `B` share the ordinate
//! and the chord points to `+x`. Every branch with a horizontal chord is the
//! image of a vertical branch `Sigma: r = M y + N` under
//!
//! ```text
//! x3 = x1 + M cos(phi) y1 + N cos(phi),     y3 = sin(phi) y1,
//! ```
//!
//! which carries `Sigma` onto `r = x cos(phi) + y M sin(phi) + N sin^2(phi)`.
//! Fixing `M`, `N` and the chord of `Sigma` and letting `phi` run over
//! `(-pi, pi)` gives the cycle; negative `phi` are the mirror images in the
//! horizontal axis and the two ends `phi -> 0` and `phi -> +-pi` are radial
//! arcs.

use std::f64::consts::{PI, TAU};

use crate::action::maupertuis_action;
use crate::affine::AffineMap2D;
use crate::arc::KeplerianArc;
use crate::conic::{angular_momentum, energy, ConicKind, Orbit, Orientation, UnifocalConic};
use crate::error::{Error, Result};
use crate::lambert::{
    arc_on_conic, classify_arc, gauss_rescaled, rectilinear_arc, ArcClass, ChordConfig,
    ChordFrame, RectilinearClass, Sense,
};
use crate::quadrature::integrate_adaptive;
use crate::vec2::Vec2;

/// Which radial arc closes the cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleEnd {
    PhiToZero,
    PhiToPi,
}

/// `(phi, M, N)` with `phi = acos(alpha)`, `M = beta / sin(phi)`,
/// `N = gamma / sin^2(phi)` for a branch given in a frame where its chord is
/// horizontal.
pub fn normalize_to_vertical(conic: &UnifocalConic) -> Result<(f64, f64, f64)> {
    let alpha = conic.alpha();
    if !(alpha.abs() < 1.0) {
        return Err(Error::Precondition(format!(
            "a branch with a horizontal chord has |alpha| < 1, got {alpha}"
        )));
    }
    let s = ((1.0 - alpha) * (1.0 + alpha)).sqrt();
    Ok((alpha.acos(), conic.beta() / s, conic.gamma() / (s * s)))
}

/// The map carrying `Sigma: r = M y + N` onto the branch of parameter `phi`.
/// Its Jacobian is `sin(phi)`.
pub fn affine_map_o12(phi: f64, m: f64, n: f64) -> AffineMap2D {
    let (s, c) = phi.sin_cos();
    AffineMap2D::new([[1.0, m * c], [0.0, s]], Vec2::new(n * c, 0.0))
}

/// A Lambert cycle, stored through its vertical branch and chord.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambertCycle {
    pub m: f64,
    pub n: f64,
    /// `(|OA| + |OB|) / 2`.
    pub rho: f64,
    /// Chord midpoint at `phi` is `(rho cos(phi), -sigma sin(phi))`.
    pub sigma: f64,
    pub phi_gamma: f64,
    /// Ordinate of the chord on `Sigma`.
    pub y_level: f64,
    pub half_chord: f64,
    energy: f64,
    orientation: Orientation,
    revolutions: u32,
    /// Chord direction in the caller's frame.
    chord_dir: Vec2,
    class: Option<ArcClass>,
}

/// Drops the full turns of an arc.
fn sub_revolution(arc: &KeplerianArc) -> Result<KeplerianArc> {
    let k = arc.revolutions();
    if k == 0 || arc.orbit().is_rectilinear() {
        return Ok(*arc);
    }
    KeplerianArc::new(*arc.orbit(), arc.s_a(), arc.s_b() - TAU * k as f64)
}

/// Class of the arc with its full turns removed.
pub fn winding_class(arc: &KeplerianArc) -> Result<ArcClass> {
    classify_arc(&sub_revolution(arc)?)
}

/// The cycle through a nonrectilinear seed arc.
pub fn cycle_from_arc(arc: &KeplerianArc) -> Result<LambertCycle> {
    let orbit = match arc.orbit() {
        Orbit::Conic(c) => *c,
        Orbit::Rectilinear(_) => return Err(Error::RectilinearSeed),
    };
    let cfg = ChordConfig::new(arc.start(), arc.end())?;
    if cfg.a == cfg.b {
        return Err(Error::Precondition("coinciding endpoints do not generate a cycle".into()));
    }
    if cfg.same_ray() {
        return Err(Error::RectilinearSeed);
    }
    let frame = ChordFrame::new(&cfg)?;
    let e = frame.from_caller(orbit.conic.eccentricity_vector());
    let local = UnifocalConic::new(e.x, e.y, orbit.conic.gamma())?;
    let (phi, m, n) = normalize_to_vertical(&local)?;
    let s = ((1.0 - e.x) * (1.0 + e.x)).sqrt();
    let y_level = frame.y0 / s;
    let energy = orbit.conic.dynamical_energy();
    Ok(LambertCycle {
        m,
        n,
        rho: 0.5 * (frame.r_a + frame.r_b),
        sigma: -y_level,
        phi_gamma: phi,
        y_level,
        half_chord: 0.5 * (frame.x_b - frame.x_a),
        energy,
        orientation: orbit.orientation,
        revolutions: arc.revolutions(),
        chord_dir: frame.u,
        class: winding_class(arc).ok(),
    })
}

impl LambertCycle {
    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Orientation of the arcs with `phi > 0`.
    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn revolutions(&self) -> u32 {
        self.revolutions
    }

    pub fn chord_direction(&self) -> Vec2 {
        self.chord_dir
    }

    /// Class shared by the arcs of the cycle (with full turns removed).
    pub fn class(&self) -> Option<ArcClass> {
        self.class
    }

    /// `rho + M sigma - N`, zero for a consistent cycle.
    pub fn compatibility_residual(&self) -> f64 {
        self.rho + self.m * self.sigma - self.n
    }

    /// The origin lies on the chord: every arc of the cycle has `A`, `O`, `B`
    /// aligned and both radial limits run into the center.
    pub fn is_flat(&self) -> bool {
        self.y_level.abs() <= 1e-12 * self.rho
    }

    pub fn chord(&self) -> f64 {
        2.0 * self.half_chord
    }

    pub fn radii_sum(&self) -> f64 {
        2.0 * self.rho
    }

    fn to_caller(self, v: Vec2) -> Vec2 {
        self.chord_dir * v.x + self.chord_dir.perp() * v.y
    }

    /// Endpoints at `phi` in the chord frame.
    pub fn endpoints_local(&self, phi: f64) -> (Vec2, Vec2) {
        let (s, c) = phi.sin_cos();
        let y = self.y_level * s;
        let xm = self.rho * c;
        (
            Vec2::new(xm - self.half_chord, y),
            Vec2::new(xm + self.half_chord, y),
        )
    }

    /// Branch at `phi` in the chord frame.
    pub fn conic_local(&self, phi: f64) -> Result<UnifocalConic> {
        let (s, c) = phi.sin_cos();
        let gamma = self.n * s * s;
        UnifocalConic::with_energy(c, self.m * s, gamma, self.energy)
    }

    /// Arc at `phi` in the chord frame, leaving `A` at epoch 0.
    pub fn arc_local(&self, phi: f64) -> Result<KeplerianArc> {
        check_phi(phi)?;
        let (a, b) = self.endpoints_local(phi);
        let orientation = if phi > 0.0 {
            self.orientation
        } else {
            self.orientation.reversed()
        };
        arc_on_conic(self.conic_local(phi)?, orientation, a, b, self.revolutions)
    }

    pub fn rectilinear_endpoints(&self, end: CycleEnd) -> (f64, f64, Vec2) {
        let (rho, h) = (self.rho, self.half_chord);
        match end {
            CycleEnd::PhiToZero => (rho - h, rho + h, self.chord_dir),
            CycleEnd::PhiToPi => (rho + h, rho - h, -self.chord_dir),
        }
    }
}

fn check_phi(phi: f64) -> Result<()> {
    if !(phi.is_finite() && phi != 0.0 && phi.abs() < PI) {
        return Err(Error::InvalidInput(format!(
            "phi = {phi} is a radial end of the cycle: use rectilinear_limit"
        )));
    }
    Ok(())
}

/// Arc of the cycle at `phi` in the caller's frame, leaving `A` at epoch 0.
pub fn cycle_arc_at(cycle: &LambertCycle, phi: f64) -> Result<KeplerianArc> {
    check_phi(phi)?;
    let (a, b) = cycle.endpoints_local(phi);
    let local = cycle.conic_local(phi)?;
    let e = cycle.to_caller(local.eccentricity_vector());
    let conic = UnifocalConic::with_energy(e.x, e.y, local.gamma(), cycle.energy)?;
    let orientation = if phi > 0.0 {
        cycle.orientation
    } else {
        cycle.orientation.reversed()
    };
    arc_on_conic(
        conic,
        orientation,
        cycle.to_caller(a),
        cycle.to_caller(b),
        cycle.revolutions,
    )
}

/// The radial arc closing the cycle at one end, leaving `A` at epoch 0.
///
/// Near the end the branches flatten onto the segment from `O` to the
/// culmination point; which way the arc first moves along it follows from
/// the orientation and from the side of the axis the chord lies on.
pub fn rectilinear_limit(cycle: &LambertCycle, end: CycleEnd) -> Result<KeplerianArc> {
    let (r_a, r_b, ray) = cycle.rectilinear_endpoints(end);
    if cycle.is_flat() || r_a <= 0.0 || r_b <= 0.0 {
        return Err(Error::Precondition("flat cycle: the radial ends meet the center".into()));
    }
    let class = cycle.class.ok_or(Error::NotSubRevolution)?;
    let end_sign = match end {
        CycleEnd::PhiToZero => 1.0,
        CycleEnd::PhiToPi => -1.0,
    };
    let inward_first = cycle.orientation.sign() * cycle.y_level.signum() * end_sign > 0.0;
    let rclass = match (class.about_o, class.about_f) {
        (Sense::Direct, Sense::Direct) => RectilinearClass::DirectDirect,
        (Sense::Direct, Sense::Indirect) => RectilinearClass::DirectIndirect,
        (Sense::Indirect, Sense::Direct) => RectilinearClass::IndirectDirect,
        (Sense::Indirect, Sense::Indirect) => {
            if inward_first {
                RectilinearClass::IndirectIndirectCollisionFirst
            } else {
                RectilinearClass::IndirectIndirectCulminationFirst
            }
        }
    };
    rectilinear_arc(ray, r_a, r_b, cycle.energy, rclass, cycle.revolutions)
}

/// Quantities measured on one arc of a cycle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleSample {
    pub phi: f64,
    pub chord: f64,
    pub radii_sum: f64,
    /// Energy of the state at the endpoint farther from the center, where
    /// `v^2 / 2 - 1 / r` cancels least.
    pub energy: f64,
    pub time_of_flight: f64,
    /// Angular momentum of the state at `A` over `sin(phi)`.
    pub scaled_angular_momentum: f64,
    /// Swept area (by quadrature) over `sin(phi)`.
    pub scaled_area: f64,
    pub action: f64,
    pub class: Option<ArcClass>,
}

/// Largest relative deviations over the sampled arcs.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleReport {
    pub seed: CycleSample,
    pub samples: Vec<CycleSample>,
    pub chord: f64,
    pub radii_sum: f64,
    /// Relative to `max(|H|, 1/rho)`.
    pub energy: f64,
    pub time_of_flight: f64,
    pub scaled_angular_momentum: f64,
    pub scaled_area: f64,
    pub action: f64,
    pub classes_agree: bool,
    /// Transfer time of each radial end, or the reason it is missing.
    pub limits: Vec<(CycleEnd, Result<f64>)>,
    pub flat: bool,
}

impl CycleReport {
    /// Largest relative deviation of a limit's transfer time from the cycle's.
    pub fn limit_deviation(&self) -> f64 {
        self.limits
            .iter()
            .filter_map(|(_, t)| t.as_ref().ok())
            .map(|t| (t - self.seed.time_of_flight).abs() / self.seed.time_of_flight)
            .fold(0.0, f64::max)
    }
}

/// Measures an arc of the cycle.
pub fn sample_arc(phi: f64, arc: &KeplerianArc) -> Result<CycleSample> {
    let st = arc.start_state()?;
    let far = if arc.end().norm() > arc.start().norm() {
        arc.end_state()?
    } else {
        st
    };
    let s = phi.sin();
    let c = angular_momentum(&st);
    let orbit = *arc.orbit();
    let area = 0.5
        * integrate_adaptive(arc.s_a(), arc.s_b(), PI, 1e-13, |u| {
            let q = orbit.position_at(u);
            match orbit {
                Orbit::Conic(co) => q.cross(co.velocity_at(u)) * orbit.time_rate(u),
                Orbit::Rectilinear(_) => 0.0,
            }
        });
    Ok(CycleSample {
        phi,
        chord: arc.chord(),
        radii_sum: arc.radii_sum(),
        energy: energy(&far),
        time_of_flight: arc.time_of_flight(),
        scaled_angular_momentum: c / s,
        scaled_area: area / s,
        action: maupertuis_action(arc)?,
        class: winding_class(arc).ok(),
    })
}

/// Chebyshev points on `[lo, hi]`.
pub fn chebyshev_points(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
    (0..n)
        .map(|j| mid - half * ((2 * j + 1) as f64 * PI / (2 * n) as f64).cos())
        .collect()
}

/// Smallest distance of the report samples from the radial ends.
pub const PHI_MIN: f64 = 1e-3;

/// Samples the cycle at `samples` Chebyshev points of `[PHI_MIN, pi - PHI_MIN]`
/// plus a geometric refinement towards both ends, and reports the largest
/// relative deviation of each invariant from the seed.
pub fn cycle_invariant_report(cycle: &LambertCycle, samples: usize) -> Result<CycleReport> {
    if samples < 8 {
        return Err(Error::InvalidInput("at least 8 samples are needed".into()));
    }
    let seed = sample_arc(cycle.phi_gamma, &cycle_arc_at(cycle, cycle.phi_gamma)?)?;
    let mut phis = chebyshev_points(PHI_MIN, PI - PHI_MIN, samples);
    for k in 1..=2 {
        let p = PHI_MIN * 10f64.powi(k);
        phis.push(p);
        phis.push(PI - p);
    }
    let mut out = Vec::with_capacity(phis.len());
    for &phi in &phis {
        out.push(sample_arc(phi, &cycle_arc_at(cycle, phi)?)?);
    }
    let rel = |f: fn(&CycleSample) -> f64, scale: f64| {
        let x0 = f(&seed);
        out.iter()
            .map(|s| (f(s) - x0).abs() / scale.max(x0.abs()))
            .fold(0.0, f64::max)
    };
    let limits = [CycleEnd::PhiToZero, CycleEnd::PhiToPi]
        .into_iter()
        .map(|end| (end, rectilinear_limit(cycle, end).map(|a| a.time_of_flight())))
        .collect();
    Ok(CycleReport {
        chord: rel(|s| s.chord, 0.0),
        radii_sum: rel(|s| s.radii_sum, 0.0),
        energy: rel(|s| s.energy, 1.0 / cycle.rho),
        time_of_flight: rel(|s| s.time_of_flight, 0.0),
        scaled_angular_momentum: rel(|s| s.scaled_angular_momentum, 0.0),
        scaled_area: rel(|s| s.scaled_area, 0.0),
        action: rel(|s| s.action, 0.0),
        classes_agree: out.iter().all(|s| s.class == seed.class),
        limits,
        flat: cycle.is_flat(),
        seed,
        samples: out,
    })
}

/// Outcome of following a cycle once around by continuation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosureReport {
    pub steps: usize,
    /// Largest distance between the continued branch and the cycle's own
    /// branch at the same `phi`, in `(E, C)` space.
    pub max_branch_deviation: f64,
    /// Distance between the start and the end of the loop in `(E, C)` space.
    pub closure_error: f64,
    /// Relative transfer time mismatch between start and end of the loop.
    pub closure_time_error: f64,
    pub classes_agree: bool,
    pub flat: bool,
}

fn features(arc: &KeplerianArc) -> [f64; 3] {
    match arc.orbit() {
        Orbit::Conic(c) => {
            let e = c.conic.eccentricity_vector();
            [e.x, e.y, c.angular_momentum()]
        }
        Orbit::Rectilinear(_) => [f64::NAN; 3],
    }
}

fn distance(p: &[f64; 3], q: &[f64; 3]) -> f64 {
    p.iter().zip(q).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt()
}

/// Follows the cycle from the seed through `phi -> 0`, the mirrored arcs and
/// `phi -> +-pi` back to the seed. At each step the branches through the
/// current endpoints with the cycle's energy are rebuilt by the Gauss
/// construction and the one continuing the path (linear extrapolation in
/// `(E, C)`) is kept. Steps closer than `PHI_MIN` to an end are skipped.
pub fn cycle_closure_check(cycle: &LambertCycle, steps: usize) -> Result<ClosureReport> {
    if steps < 16 {
        return Err(Error::InvalidInput("at least 16 steps are needed".into()));
    }
    let wrap = |p: f64| {
        let w = (p + PI).rem_euclid(TAU) - PI;
        if w <= -PI {
            w + TAU
        } else {
            w
        }
    };
    let start = cycle.arc_local(cycle.phi_gamma)?;
    let seed_class = winding_class(&start).ok();
    let mut hist: Vec<(f64, [f64; 3])> = vec![(0.0, features(&start))];
    let mut max_dev: f64 = 0.0;
    let mut classes_agree = true;
    let mut last = start;
    let dphi = TAU / steps as f64;
    for j in 1..=steps {
        // unwrapped parameter decreases from phi_gamma to phi_gamma - 2 pi
        let t = j as f64 * dphi;
        let phi = if j == steps {
            cycle.phi_gamma
        } else {
            wrap(cycle.phi_gamma - t)
        };
        let s = phi.sin().abs();
        if s < PHI_MIN && j != steps {
            continue;
        }
        let (a, b) = cycle.endpoints_local(phi);
        let cfg = ChordConfig::new(a, b)?;
        let mut candidates = Vec::new();
        for conic in gauss_rescaled(&cfg, cycle.energy)? {
            for o in [Orientation::Ccw, Orientation::Cw] {
                if let Ok(arc) = arc_on_conic(conic, o, a, b, cycle.revolutions) {
                    candidates.push(arc);
                }
            }
        }
        let predicted = match hist.len() {
            1 => hist[0].1,
            n => {
                let (t1, f1) = hist[n - 1];
                let (t0, f0) = hist[n - 2];
                let w = (t - t1) / (t1 - t0);
                [
                    f1[0] + w * (f1[0] - f0[0]),
                    f1[1] + w * (f1[1] - f0[1]),
                    f1[2] + w * (f1[2] - f0[2]),
                ]
            }
        };
        let best = candidates
            .iter()
            .min_by(|p, q| {
                distance(&features(p), &predicted).total_cmp(&distance(&features(q), &predicted))
            })
            .copied()
            .ok_or(Error::NoArc)?;
        let own = cycle.arc_local(phi)?;
        max_dev = max_dev.max(distance(&features(&best), &features(&own)));
        if winding_class(&best).ok() != seed_class {
            classes_agree = false;
        }
        hist.push((t, features(&best)));
        last = best;
    }
    let t0 = start.time_of_flight();
    Ok(ClosureReport {
        steps,
        max_branch_deviation: max_dev,
        closure_error: distance(&features(&last), &features(&start)),
        closure_time_error: (last.time_of_flight() - t0).abs() / t0,
        classes_agree,
        flat: cycle.is_flat(),
    })
}

/// Kind of the branches of the cycle.
pub fn cycle_kind(cycle: &LambertCycle) -> ConicKind {
    match cycle.conic_local(cycle.phi_gamma) {
        Ok(c) => c.kind(),
        Err(_) => ConicKind::Parabola,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::ConicOrbit;
    use crate::lambert::solve_lambert;

    #[test]
    fn normalize_examples() {
        let (phi, m, n) = normalize_to_vertical(&UnifocalConic::new(0.5, 0.0, 0.75).unwrap()).unwrap();
        assert!((phi - PI / 3.0).abs() < 1e-15);
        assert!(m.abs() < 1e-16 && (n - 1.0).abs() < 1e-15);
        let (phi, m, n) = normalize_to_vertical(&UnifocalConic::new(0.0, 0.3, 0.8).unwrap()).unwrap();
        assert_eq!((phi, m, n), (PI / 2.0, 0.3, 0.8));
        assert!(normalize_to_vertical(&UnifocalConic::new(1.0, 0.0, 1.0).unwrap()).is_err());
    }

    #[test]
    fn map_sends_sigma_onto_the_branch() {
        let (phi, m, n) = (PI / 3.0, 0.0, 1.0);
        let map = affine_map_o12(phi, m, n);
        let target = UnifocalConic::new(0.5, 0.0, 0.75).unwrap();
        for k in 0..100 {
            let p = Vec2::from_angle(k as f64 * TAU / 100.0);
            let img = map.apply(p);
            assert!((img.norm() - target.linear_part(img)).abs() < 1e-12);
        }
        let id = affine_map_o12(PI / 2.0, 0.7, 1.3);
        assert!((id.apply(Vec2::new(0.4, -2.0)) - Vec2::new(0.4, -2.0)).norm() < 1e-15);
        // a tilted vertical branch
        let (phi, m, n) = (1.1f64, 0.4, 1.2);
        let map = affine_map_o12(phi, m, n);
        let expect = UnifocalConic::new(phi.cos(), m * phi.sin(), n * phi.sin().powi(2)).unwrap();
        for k in 0..100 {
            let th = k as f64 * TAU / 100.0;
            let p = Vec2::from_angle(th) * (n / (1.0 - m * th.sin()));
            let img = map.apply(p);
            assert!((img.norm() - expect.linear_part(img)).abs() < 1e-12);
        }
        assert!((map.det() - phi.sin()).abs() < 1e-15);
    }

    fn seed() -> KeplerianArc {
        solve_lambert(Vec2::new(1.0, 0.2), Vec2::new(-0.4, 1.3), 1.7, Orientation::Ccw, 0).unwrap()
    }

    #[test]
    fn round_trip_and_compatibility() {
        let arc = seed();
        let cy = cycle_from_arc(&arc).unwrap();
        assert!(cy.compatibility_residual().abs() < 1e-12);
        let back = cycle_arc_at(&cy, cy.phi_gamma).unwrap();
        assert!((back.start() - arc.start()).norm() < 1e-12);
        assert!((back.end() - arc.end()).norm() < 1e-12);
        let (c0, c1) = (arc.orbit().as_conic().unwrap(), back.orbit().as_conic().unwrap());
        assert!((c0.conic.eccentricity_vector() - c1.conic.eccentricity_vector()).norm() < 1e-12);
        assert!((c0.conic.gamma() - c1.conic.gamma()).abs() < 1e-12);
        assert!((back.time_of_flight() - 1.7).abs() < 1e-10);
    }

    #[test]
    fn symmetric_seed_is_its_own_sigma() {
        let o = ConicOrbit::new(UnifocalConic::new(0.0, 0.5, 1.0).unwrap(), Orientation::Ccw, 0.0);
        let arc = KeplerianArc::new(Orbit::Conic(o), -1.0, 1.0).unwrap();
        let cy = cycle_from_arc(&arc).unwrap();
        assert!((cy.phi_gamma - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn invariants_hold_along_the_cycle() {
        let cy = cycle_from_arc(&seed()).unwrap();
        let rep = cycle_invariant_report(&cy, 20).unwrap();
        assert!(rep.chord < 1e-12, "{}", rep.chord);
        assert!(rep.radii_sum < 1e-12, "{}", rep.radii_sum);
        assert!(rep.energy < 1e-12, "{}", rep.energy);
        assert!(rep.time_of_flight < 1e-9, "{}", rep.time_of_flight);
        assert!(rep.scaled_angular_momentum < 1e-12, "{}", rep.scaled_angular_momentum);
        assert!(rep.scaled_area < 1e-10, "{}", rep.scaled_area);
        assert!(rep.action < 1e-10, "{}", rep.action);
        assert!(rep.classes_agree);
        assert!(rep.limit_deviation() < 1e-9, "{:?}", rep.limits);
    }

    #[test]
    fn parabolic_limit_is_euler() {
        let a = Vec2::new(1.0, 0.0);
        let b = Vec2::new(0.0, 1.5);
        let cfg = ChordConfig::new(a, b).unwrap();
        let t = crate::lambert::euler_parabolic_tof(&cfg, false);
        let arc = solve_lambert(a, b, t, Orientation::Ccw, 0).unwrap();
        let cy = cycle_from_arc(&arc).unwrap();
        assert_eq!(cy.energy(), 0.0);
        let lim = rectilinear_limit(&cy, CycleEnd::PhiToZero).unwrap();
        assert!((lim.time_of_flight() - t).abs() < 1e-12 * t);
    }

    #[test]
    fn continuation_closes() {
        let cy = cycle_from_arc(&seed()).unwrap();
        let rep = cycle_closure_check(&cy, 720).unwrap();
        assert!(rep.max_branch_deviation < 1e-10, "{rep:?}");
        assert!(rep.closure_error < 1e-10, "{rep:?}");
        assert!(rep.classes_agree);
    }

    #[test]
    fn radial_seeds_are_rejected() {
        let o = Orbit::Rectilinear(crate::conic::RectilinearOrbit::new(Vec2::X, -0.5, 0.0).unwrap());
        let arc = KeplerianArc::new(o, 1.0, 2.0).unwrap();
        assert_eq!(cycle_from_arc(&arc), Err(Error::RectilinearSeed));
        assert!(cycle_arc_at(&cycle_from_arc(&seed()).unwrap(), 0.0).is_err());
    }
}
