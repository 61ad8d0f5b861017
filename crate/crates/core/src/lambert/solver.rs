use std::f64::consts::TAU;

use super::{ChordConfig, ChordFrame};
use crate::arc::KeplerianArc;
use crate::conic::{ConicKind, ConicOrbit, Orbit, Orientation, UnifocalConic};
use crate::error::{Error, Result};
use crate::roots::{brent, golden_min};
use crate::vec2::Vec2;

const ROOT_ITERATIONS: usize = 200;

/// Position on the family of arcs from `A` to `B` in one direction.
///
/// The elliptic members sit between the parabola that cannot reach `B`
/// without passing through infinity (`y -> 0`, transfer time unbounded) and
/// the parabola that can (`y = 1`). Beyond that parabola the members are
/// hyperbolas (`w` from 1 down to 0, transfer time going to zero).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyParam {
    Elliptic(f64),
    Hyperbolic(f64),
}

impl FamilyParam {
    /// Map of `x in (0, 1)` onto the whole family, monotone in transfer time.
    pub fn from_unit(x: f64) -> FamilyParam {
        if x <= 0.5 {
            FamilyParam::Elliptic(2.0 * x)
        } else {
            FamilyParam::Hyperbolic(2.0 - 2.0 * x)
        }
    }
}

/// Which root of a multi-revolution request to return.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MultiRevBranch {
    #[default]
    SmallerSemimajorAxis,
    LargerSemimajorAxis,
}

/// All branches through `A` and `B` traversed in one direction.
#[derive(Debug, Clone, Copy)]
pub struct LambertFamily {
    cfg: ChordConfig,
    frame: ChordFrame,
    orientation: Orientation,
    beta_ok: f64,
    beta_esc: f64,
    /// `beta` where `gamma` vanishes, if it lies past `beta_ok`.
    beta_end: Option<f64>,
}

impl LambertFamily {
    pub fn new(cfg: &ChordConfig, orientation: Orientation) -> Result<Self> {
        if cfg.same_ray() {
            return Err(Error::RectilinearFamily);
        }
        let frame = ChordFrame::new(cfg)?;
        let mut ok = None;
        for beta in [frame.b_p, -frame.b_p] {
            let gamma = frame.gamma(beta);
            if gamma <= 0.0 {
                continue;
            }
            let conic = frame.conic(beta, gamma, 0.0)?;
            let orbit = ConicOrbit::new(conic, orientation, 0.0);
            if let (Ok(da), Ok(db)) = (orbit.anomaly_of(cfg.a), orbit.anomaly_of(cfg.b)) {
                if db > da {
                    ok = Some(beta);
                    break;
                }
            }
        }
        let beta_ok = ok.ok_or(Error::NoArc)?;
        let beta_esc = -beta_ok;
        let beta_end = if frame.y0 != 0.0 {
            let end = frame.gamma0 / frame.y0;
            ((end - beta_ok) * (beta_ok - beta_esc) > 0.0).then_some(end)
        } else {
            None
        };
        Ok(LambertFamily {
            cfg: *cfg,
            frame,
            orientation,
            beta_ok,
            beta_esc,
            beta_end,
        })
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn frame(&self) -> &ChordFrame {
        &self.frame
    }

    /// Branch of the family at `p`.
    pub fn conic_at(&self, p: FamilyParam) -> Result<UnifocalConic> {
        let l = self.beta_ok - self.beta_esc;
        let (beta, gamma, ecc2m1) = match p {
            FamilyParam::Elliptic(y) => {
                if !(y > 0.0 && y <= 1.0) {
                    return Err(Error::InvalidInput(format!("elliptic parameter {y} not in (0, 1]")));
                }
                if y == 1.0 {
                    (self.beta_ok, self.frame.gamma(self.beta_ok), 0.0)
                } else {
                    let d_esc = y * l;
                    let d_ok = -(1.0 - y) * l;
                    let beta = self.beta_esc + d_esc;
                    (beta, self.frame.gamma(beta), d_esc * d_ok)
                }
            }
            FamilyParam::Hyperbolic(w) => {
                if !(w > 0.0 && w <= 1.0) {
                    return Err(Error::InvalidInput(format!(
                        "hyperbolic parameter {w} not in (0, 1]"
                    )));
                }
                match self.beta_end {
                    Some(end) => {
                        let span = end - self.beta_ok;
                        let d_ok = (1.0 - w) * span;
                        let beta = self.beta_ok + d_ok;
                        let gamma = self.frame.y0 * w * span;
                        (beta, gamma, d_ok * (l + d_ok))
                    }
                    None => {
                        let d_ok = l.signum() * (1.0 - w) / w;
                        let beta = self.beta_ok + d_ok;
                        (beta, self.frame.gamma(beta), d_ok * (l + d_ok))
                    }
                }
            }
        };
        self.frame.conic(beta, gamma, ecc2m1)
    }

    /// Arc of the family at `p` with `revolutions` extra full turns, timed
    /// so that it leaves `A` at epoch 0.
    pub fn arc_at(&self, p: FamilyParam, revolutions: u32) -> Result<KeplerianArc> {
        let conic = self.conic_at(p)?;
        arc_on_conic(conic, self.orientation, self.cfg.a, self.cfg.b, revolutions)
    }

    pub fn transfer_time(&self, p: FamilyParam, revolutions: u32) -> Result<f64> {
        Ok(self.arc_at(p, revolutions)?.time_of_flight())
    }

    fn solve_single(&self, dt: f64) -> Result<KeplerianArc> {
        let g = |p: FamilyParam| -> f64 {
            match self.transfer_time(p, 0) {
                Ok(t) if t > 0.0 => t.ln() - dt.ln(),
                _ => f64::NAN,
            }
        };
        let t_parab = self.transfer_time(FamilyParam::Elliptic(1.0), 0)?;
        let p = if dt >= t_parab {
            // Elliptic side: time grows without bound as y -> 0.
            let mut hi = 1.0;
            let mut lo = 0.5;
            let mut found = false;
            for _ in 0..1100 {
                let v = g(FamilyParam::Elliptic(lo));
                if v >= 0.0 {
                    found = true;
                    break;
                }
                hi = lo;
                lo *= 0.5;
            }
            if !found {
                return Err(Error::NonConvergence {
                    what: "Lambert bracket (elliptic side)",
                    iterations: 1100,
                });
            }
            let y = brent(|y| g(FamilyParam::Elliptic(y)), lo, hi, 0.0, ROOT_ITERATIONS)?;
            FamilyParam::Elliptic(y)
        } else {
            let mut hi = 1.0;
            let mut lo = 0.5;
            let mut found = false;
            for _ in 0..1100 {
                let v = g(FamilyParam::Hyperbolic(lo));
                if v <= 0.0 {
                    found = true;
                    break;
                }
                hi = lo;
                lo *= 0.5;
            }
            if !found {
                return Err(Error::NonConvergence {
                    what: "Lambert bracket (hyperbolic side)",
                    iterations: 1100,
                });
            }
            let w = brent(|w| g(FamilyParam::Hyperbolic(w)), lo, hi, 0.0, ROOT_ITERATIONS)?;
            FamilyParam::Hyperbolic(w)
        };
        self.arc_at(p, 0)
    }

    fn solve_multi(&self, dt: f64, k: u32, branch: MultiRevBranch) -> Result<KeplerianArc> {
        let t = |y: f64| self.transfer_time(FamilyParam::Elliptic(y), k);
        let lnt = |y: f64| t(y).map(f64::ln).unwrap_or(f64::INFINITY);
        let (y_min, ln_min) = golden_min(lnt, 1e-9, 1.0 - 1e-9, 1e-12);
        if ln_min > dt.ln() {
            return Err(Error::NoArcWithWinding);
        }
        let g = |y: f64| lnt(y) - dt.ln();
        let mut roots = Vec::with_capacity(2);
        // Towards escape (y -> 0).
        let mut inner = y_min;
        let mut outer = 0.5 * y_min;
        for _ in 0..1100 {
            if g(outer) >= 0.0 {
                roots.push(brent(g, outer, inner, 0.0, ROOT_ITERATIONS)?);
                break;
            }
            inner = outer;
            outer *= 0.5;
        }
        // Towards the parabola (y -> 1).
        let mut inner = y_min;
        let mut gap = 0.5 * (1.0 - y_min);
        for _ in 0..60 {
            let outer = 1.0 - gap;
            if g(outer) >= 0.0 {
                roots.push(brent(g, inner, outer, 0.0, ROOT_ITERATIONS)?);
                break;
            }
            inner = outer;
            gap *= 0.5;
        }
        let mut arcs = roots
            .into_iter()
            .map(|y| self.arc_at(FamilyParam::Elliptic(y), k))
            .collect::<Result<Vec<_>>>()?;
        if arcs.is_empty() {
            return Err(Error::NoArcWithWinding);
        }
        let semi = |a: &KeplerianArc| -0.5 / a.energy();
        arcs.sort_by(|p, q| semi(p).total_cmp(&semi(q)));
        Ok(match branch {
            MultiRevBranch::SmallerSemimajorAxis => arcs[0],
            MultiRevBranch::LargerSemimajorAxis => arcs[arcs.len() - 1],
        })
    }
}

/// Arc from `a` to `b` along a branch in the given direction, with extra
/// full turns, leaving `a` at epoch 0.
pub(crate) fn arc_on_conic(
    conic: UnifocalConic,
    orientation: Orientation,
    a: Vec2,
    b: Vec2,
    revolutions: u32,
) -> Result<KeplerianArc> {
    let mut orbit = ConicOrbit::new(conic, orientation, 0.0);
    let s_a = orbit.anomaly_of(a)?;
    let mut s_b = orbit.anomaly_of(b)?;
    if conic.kind() == ConicKind::Ellipse {
        if s_b <= s_a {
            s_b += TAU;
        }
        s_b += TAU * revolutions as f64;
    } else if s_b <= s_a || revolutions > 0 {
        return Err(Error::NoArc);
    }
    orbit.t_peri = -orbit.time_since_periapsis(s_a);
    KeplerianArc::new(Orbit::Conic(orbit), s_a, s_b)
}

/// The arc from `A` to `B` with transfer time `dt`, turning in `direction`
/// and making `revolutions` full turns. For several turns the root with the
/// smaller semimajor axis is returned.
pub fn solve_lambert(
    a: Vec2,
    b: Vec2,
    dt: f64,
    direction: Orientation,
    revolutions: u32,
) -> Result<KeplerianArc> {
    solve_lambert_multi(a, b, dt, direction, revolutions, MultiRevBranch::default())
}

pub fn solve_lambert_multi(
    a: Vec2,
    b: Vec2,
    dt: f64,
    direction: Orientation,
    revolutions: u32,
    branch: MultiRevBranch,
) -> Result<KeplerianArc> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::InvalidInput(format!("transfer time must be positive, got {dt}")));
    }
    let cfg = ChordConfig::new(a, b)?;
    let family = LambertFamily::new(&cfg, direction)?;
    if revolutions == 0 {
        family.solve_single(dt)
    } else {
        family.solve_multi(dt, revolutions, branch)
    }
}
