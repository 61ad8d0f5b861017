//! Seeded random instances for verification campaigns.
//!
//! The generator is ChaCha8. Trial `i` of a campaign with seed `s` draws
//! from stream `i` of the generator keyed by `s`, so trials are
//! independent of each other and of the order they run in.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arc::KeplerianArc;
use crate::conic::{Orientation, UnifocalConic};
use crate::error::Result;
use crate::lambert::{ChordConfig, FamilyParam, LambertFamily};
use crate::vec2::Vec2;

pub type TrialRng = ChaCha8Rng;

pub fn trial_rng(seed: u64, trial: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn log_uniform(rng: &mut TrialRng, lo: f64, hi: f64) -> f64 {
    (rng.random_range(lo.ln()..hi.ln())).exp()
}

pub fn orientation(rng: &mut TrialRng) -> Orientation {
    if rng.random_bool(0.5) {
        Orientation::Ccw
    } else {
        Orientation::Cw
    }
}

/// Point at log-uniform radius in `[0.3, 3]` and uniform polar angle.
pub fn point(rng: &mut TrialRng) -> Vec2 {
    Vec2::from_angle(rng.random_range(0.0..TAU)) * log_uniform(rng, 0.3, 3.0)
}

/// Two endpoints whose rays are at least 0.05 rad apart and at least
/// 0.05 rad from antipodal.
pub fn endpoints(rng: &mut TrialRng) -> ChordConfig {
    let a = point(rng);
    let sep = rng.random_range(0.05..PI - 0.05) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
    let b = Vec2::from_angle(a.angle() + sep) * log_uniform(rng, 0.3, 3.0);
    ChordConfig { a, b }
}

/// Energy regime of a random arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Elliptic,
    Parabolic,
    Hyperbolic,
    /// 45% elliptic, 10% parabolic, 45% hyperbolic.
    Mixed,
}

/// Random sub-revolution arc between random endpoints.
pub fn arc(rng: &mut TrialRng, regime: Regime) -> Result<KeplerianArc> {
    let cfg = endpoints(rng);
    let fam = LambertFamily::new(&cfg, orientation(rng))?;
    let regime = match regime {
        Regime::Mixed => {
            let u: f64 = rng.random();
            if u < 0.45 {
                Regime::Elliptic
            } else if u < 0.55 {
                Regime::Parabolic
            } else {
                Regime::Hyperbolic
            }
        }
        r => r,
    };
    let p = match regime {
        Regime::Elliptic => FamilyParam::Elliptic(rng.random_range(0.05..0.98)),
        Regime::Parabolic => FamilyParam::Elliptic(1.0),
        _ => FamilyParam::Hyperbolic(rng.random_range(0.05..0.98)),
    };
    fam.arc_at(p, 0)
}

/// Random ellipse `r = alpha x + beta y + gamma` with `e < 0.95`.
pub fn ellipse(rng: &mut TrialRng) -> UnifocalConic {
    let e = rng.random_range(0.0..0.95);
    let dir = Vec2::from_angle(rng.random_range(0.0..TAU)) * e;
    UnifocalConic::new(dir.x, dir.y, log_uniform(rng, 0.2, 3.0)).expect("positive gamma")
}

/// Random conic of any kind with `e < 3`.
pub fn conic(rng: &mut TrialRng) -> UnifocalConic {
    let e = match rng.random_range(0..3) {
        0 => rng.random_range(0.0..0.95),
        1 => 1.0,
        _ => rng.random_range(1.05..3.0),
    };
    let theta: f64 = rng.random_range(0.0..TAU);
    let (s, c) = theta.sin_cos();
    let gamma = log_uniform(rng, 0.2, 3.0);
    if e == 1.0 {
        UnifocalConic::with_energy(c, s, gamma, 0.0).expect("positive gamma")
    } else {
        UnifocalConic::new(e * c, e * s, gamma).expect("positive gamma")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let x: f64 = trial_rng(7, 3).random();
        let y: f64 = trial_rng(7, 3).random();
        let z: f64 = trial_rng(7, 4).random();
        assert_eq!(x, y);
        assert_ne!(x, z);
    }

    #[test]
    fn random_arcs_have_the_right_kind() {
        use crate::conic::ConicKind;
        let mut rng = trial_rng(1, 0);
        for _ in 0..50 {
            assert_eq!(arc(&mut rng, Regime::Elliptic).unwrap().kind(), Some(ConicKind::Ellipse));
            assert_eq!(arc(&mut rng, Regime::Parabolic).unwrap().kind(), Some(ConicKind::Parabola));
            assert_eq!(arc(&mut rng, Regime::Hyperbolic).unwrap().kind(), Some(ConicKind::Hyperbola));
        }
    }
}
