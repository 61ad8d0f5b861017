use std::f64::consts::{PI, TAU};

use crate::arc::KeplerianArc;
use crate::conic::{second_focus, ConicKind, Orbit};
use crate::error::{Error, Result};

/// Whether the convex hull of an arc avoids (direct) or contains (indirect) a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    Direct,
    Indirect,
}

impl Sense {
    fn from_indirect(indirect: bool) -> Sense {
        if indirect {
            Sense::Indirect
        } else {
            Sense::Direct
        }
    }

    pub fn short(self) -> char {
        match self {
            Sense::Direct => 'D',
            Sense::Indirect => 'I',
        }
    }
}

/// Position of the attracting center `O` and of the second focus `F`
/// relative to the convex hull of an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArcClass {
    pub about_o: Sense,
    pub about_f: Sense,
}

impl std::fmt::Display for ArcClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}O{}F", self.about_o.short(), self.about_f.short())
    }
}

fn wrap_positive(angle: f64) -> f64 {
    let w = angle.rem_euclid(TAU);
    if w == TAU {
        0.0
    } else {
        w
    }
}

/// Classification of a sub-revolution arc.
///
/// For conic arcs the hull contains a point exactly when the arc sweeps
/// more than a half turn as seen from that point. For radial arcs the
/// center is inside when the arc runs through a collision and the second
/// focus (which degenerates to the culmination point) when it runs
/// through a culmination.
///
/// A radial arc counts as sub-revolution while it passes at most one
/// collision and at most one culmination.
pub fn classify_arc(arc: &KeplerianArc) -> Result<ArcClass> {
    match arc.orbit() {
        Orbit::Rectilinear(r) => {
            let (ua, ub) = (arc.s_a(), arc.s_b());
            // number of u = k0 + 2 pi n strictly inside (ua, ub)
            let count = |k0: f64| {
                let first = ((ua - k0) / TAU).floor() + 1.0;
                let last = ((ub - k0) / TAU).ceil() - 1.0;
                (last - first + 1.0).max(0.0)
            };
            if r.energy() < 0.0 {
                let (collisions, culminations) = (count(0.0), count(PI));
                if collisions > 1.0 || culminations > 1.0 {
                    return Err(Error::NotSubRevolution);
                }
                Ok(ArcClass {
                    about_o: Sense::from_indirect(collisions == 1.0),
                    about_f: Sense::from_indirect(culminations == 1.0),
                })
            } else {
                Ok(ArcClass {
                    about_o: Sense::from_indirect(ua < 0.0 && ub > 0.0),
                    about_f: Sense::Direct,
                })
            }
        }
        Orbit::Conic(c) => {
            if arc.revolutions() > 0 {
                return Err(Error::NotSubRevolution);
            }
            let sigma = c.orientation.sign();
            let (a, b) = (arc.start(), arc.end());
            let swept_o = wrap_positive(sigma * (b.angle() - a.angle()));
            let about_o = Sense::from_indirect(swept_o > PI);
            let about_f = if c.conic.kind() == ConicKind::Ellipse {
                let f = second_focus(&c.conic, c.conic.energy())?;
                let swept_f = wrap_positive(sigma * ((b - f).angle() - (a - f).angle()));
                Sense::from_indirect(swept_f > PI)
            } else {
                Sense::Direct
            };
            Ok(ArcClass { about_o, about_f })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::{ConicOrbit, Orientation, RectilinearOrbit, UnifocalConic};
    use crate::vec2::Vec2;

    fn circle_arc(angle: f64) -> KeplerianArc {
        let o = ConicOrbit::new(UnifocalConic::new(0.0, 0.0, 1.0).unwrap(), Orientation::Ccw, 0.0);
        KeplerianArc::new(Orbit::Conic(o), 0.0, angle).unwrap()
    }

    #[test]
    fn circular_arcs() {
        let c = classify_arc(&circle_arc(PI / 2.0)).unwrap();
        assert_eq!((c.about_o, c.about_f), (Sense::Direct, Sense::Direct));
        let c = classify_arc(&circle_arc(1.5 * PI)).unwrap();
        assert_eq!((c.about_o, c.about_f), (Sense::Indirect, Sense::Indirect));
        assert_eq!(classify_arc(&circle_arc(7.0)), Err(Error::NotSubRevolution));
    }

    #[test]
    fn rectilinear_through_culmination() {
        let o = Orbit::Rectilinear(RectilinearOrbit::new(Vec2::X, -0.5, 0.0).unwrap());
        let arc = KeplerianArc::new(o, 1.0, 5.0).unwrap();
        let c = classify_arc(&arc).unwrap();
        assert_eq!((c.about_o, c.about_f), (Sense::Direct, Sense::Indirect));
        assert_eq!(c.to_string(), "DOIF");
        let through_collision = KeplerianArc::new(o, -1.0, 2.0).unwrap();
        let c = classify_arc(&through_collision).unwrap();
        assert_eq!((c.about_o, c.about_f), (Sense::Indirect, Sense::Direct));
    }

    #[test]
    fn hyperbolic_arcs_are_direct_about_f() {
        let o = ConicOrbit::new(UnifocalConic::new(-1.5, 0.0, 1.0).unwrap(), Orientation::Cw, 0.0);
        let arc = KeplerianArc::new(Orbit::Conic(o), -1.0, 1.0).unwrap();
        assert_eq!(classify_arc(&arc).unwrap().about_f, Sense::Direct);
    }
}
