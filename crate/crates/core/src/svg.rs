//! Minimal SVG output with an auto-fitted view box, and the figures the
//! command line can draw.

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;

use crate::arc::KeplerianArc;
use crate::conic::{ConicKind, ConicOrbit, Orientation};
use crate::cycle::{cycle_arc_at, rectilinear_limit, CycleEnd, LambertCycle};
use crate::error::Result;
use crate::lambert::{ChordConfig, FamilyParam, LambertFamily};
use crate::vec2::Vec2;

#[derive(Debug, Clone, PartialEq)]
enum Item {
    Line {
        pts: Vec<Vec2>,
        color: String,
        width: f64,
        dashed: bool,
    },
    Dot {
        at: Vec2,
        color: String,
    },
    Label {
        at: Vec2,
        text: String,
    },
}

/// Drawing in model coordinates (`y` up).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SvgPlot {
    title: String,
    items: Vec<Item>,
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

impl SvgPlot {
    pub fn new(title: &str) -> Self {
        SvgPlot {
            title: title.to_string(),
            items: Vec::new(),
        }
    }

    pub fn polyline(&mut self, pts: Vec<Vec2>, color: &str, width: f64) {
        let pts: Vec<Vec2> = pts.into_iter().filter(|p| p.is_finite()).collect();
        if pts.len() >= 2 {
            self.items.push(Item::Line {
                pts,
                color: color.into(),
                width,
                dashed: false,
            });
        }
    }

    pub fn dashed(&mut self, pts: Vec<Vec2>, color: &str, width: f64) {
        self.polyline(pts, color, width);
        if let Some(Item::Line { dashed, .. }) = self.items.last_mut() {
            *dashed = true;
        }
    }

    pub fn dot(&mut self, at: Vec2, color: &str) {
        self.items.push(Item::Dot {
            at,
            color: color.into(),
        });
    }

    pub fn label(&mut self, at: Vec2, text: &str) {
        self.items.push(Item::Label {
            at,
            text: text.into(),
        });
    }

    fn bounds(&self) -> (Vec2, Vec2) {
        let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut grow = |p: Vec2| {
            lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
        };
        for it in &self.items {
            match it {
                Item::Line { pts, .. } => pts.iter().for_each(|&p| grow(p)),
                Item::Dot { at, .. } | Item::Label { at, .. } => grow(*at),
            }
        }
        if !lo.is_finite() {
            return (Vec2::new(-1.0, -1.0), Vec2::new(1.0, 1.0));
        }
        (lo, hi)
    }

    pub fn render(&self) -> String {
        let (lo, hi) = self.bounds();
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
        let pad = 0.05 * span;
        let (x0, y0) = (lo.x - pad, -hi.y - pad);
        let (w, h) = (hi.x - lo.x + 2.0 * pad, hi.y - lo.y + 2.0 * pad);
        let px = 800.0;
        let unit = span / px;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
            num(px * w / span),
            num(px * h / span),
            num(x0),
            num(y0),
            num(w),
            num(h)
        );
        let _ = writeln!(s, "<title>{}</title>", escape(&self.title));
        for it in &self.items {
            match it {
                Item::Line {
                    pts,
                    color,
                    width,
                    dashed,
                } => {
                    let coords: Vec<String> =
                        pts.iter().map(|p| format!("{},{}", num(p.x), num(-p.y))).collect();
                    let dash = if *dashed {
                        format!(" stroke-dasharray=\"{} {}\"", num(6.0 * unit), num(4.0 * unit))
                    } else {
                        String::new()
                    };
                    let _ = writeln!(
                        s,
                        "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"{}\"{dash} points=\"{}\"/>",
                        num(width * unit),
                        coords.join(" ")
                    );
                }
                Item::Dot { at, color } => {
                    let _ = writeln!(
                        s,
                        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{color}\"/>",
                        num(at.x),
                        num(-at.y),
                        num(3.0 * unit)
                    );
                }
                Item::Label { at, text } => {
                    let _ = writeln!(
                        s,
                        "<text x=\"{}\" y=\"{}\" font-size=\"{}\">{}</text>",
                        num(at.x),
                        num(-at.y),
                        num(14.0 * unit),
                        escape(text)
                    );
                }
            }
        }
        s.push_str("</svg>\n");
        s
    }
}

/// Points along an arc, evenly spaced in its anomaly.
pub fn arc_points(arc: &KeplerianArc, n: usize) -> Vec<Vec2> {
    let (a, b) = (arc.s_a(), arc.s_b());
    (0..=n)
        .map(|i| arc.orbit().position_at(a + (b - a) * i as f64 / n as f64))
        .collect()
}

/// Points of a whole branch, clipped to radius `r_max` when open.
pub fn branch_points(orbit: &ConicOrbit, r_max: f64, n: usize) -> Vec<Vec2> {
    let c = &orbit.conic;
    let s_max = match c.kind() {
        ConicKind::Ellipse => PI,
        ConicKind::Hyperbola => {
            let a = c.gamma() / c.ecc2_minus_one();
            ((r_max / a + 1.0) / c.eccentricity()).max(1.0).acosh()
        }
        ConicKind::Parabola => (2.0 * r_max / c.gamma() - 1.0).max(0.0).sqrt(),
    };
    (0..=n)
        .map(|i| orbit.position_at(-s_max + 2.0 * s_max * i as f64 / n as f64))
        .collect()
}

fn kind_color(k: ConicKind) -> &'static str {
    match k {
        ConicKind::Ellipse => "#1f5fbf",
        ConicKind::Parabola => "#c0392b",
        ConicKind::Hyperbola => "#2e8b57",
    }
}

/// Branches through `A` and `B`: ellipses blue, parabolas red, hyperbolas green.
pub fn chord_family_figure(cfg: &ChordConfig, members: usize) -> Result<SvgPlot> {
    let mut plot = SvgPlot::new("branches through A and B");
    let fam = LambertFamily::new(cfg, Orientation::Ccw)?;
    let r_max = 2.5 * cfg.a.norm().max(cfg.b.norm());
    let mut params: Vec<FamilyParam> = (1..members)
        .map(|i| FamilyParam::from_unit(i as f64 / members as f64))
        .collect();
    params.push(FamilyParam::Elliptic(1.0));
    for p in params {
        if let Ok(conic) = fam.conic_at(p) {
            let orbit = ConicOrbit::new(conic, Orientation::Ccw, 0.0);
            let width = if conic.kind() == ConicKind::Parabola { 2.0 } else { 1.0 };
            plot.polyline(branch_points(&orbit, r_max, 400), kind_color(conic.kind()), width);
        }
    }
    plot.polyline(vec![cfg.a, cfg.b], "black", 1.5);
    mark_points(&mut plot, cfg.a, cfg.b);
    Ok(plot)
}

fn mark_points(plot: &mut SvgPlot, a: Vec2, b: Vec2) {
    plot.dot(Vec2::ZERO, "black");
    plot.label(Vec2::ZERO, "O");
    plot.dot(a, "black");
    plot.label(a, "A");
    plot.dot(b, "black");
    plot.label(b, "B");
}

/// The arcs of a cycle at `members` values of `phi` in `(0, pi)` and their
/// mirror images, with the radial ends drawn thick.
pub fn cycle_figure(cycle: &LambertCycle, members: usize) -> Result<SvgPlot> {
    let mut plot = SvgPlot::new("Lambert cycle");
    for i in 0..members {
        let phi = PI * (i as f64 + 0.5) / members as f64;
        for (sign, color) in [(1.0, "#1f5fbf"), (-1.0, "#8e44ad")] {
            let arc = cycle_arc_at(cycle, sign * phi)?;
            plot.polyline(arc_points(&arc, 200), color, 1.0);
            plot.dot(arc.start(), "black");
            plot.dot(arc.end(), "black");
        }
    }
    for end in [CycleEnd::PhiToZero, CycleEnd::PhiToPi] {
        if let Ok(arc) = rectilinear_limit(cycle, end) {
            let (r_a, r_b, ray) = cycle.rectilinear_endpoints(end);
            let far = arc_points(&arc, 400).iter().map(|p| p.norm()).fold(r_a.max(r_b), f64::max);
            plot.polyline(vec![Vec2::ZERO, ray * far], "#c0392b", 3.0);
        }
    }
    plot.dot(Vec2::ZERO, "black");
    plot.label(Vec2::ZERO, "O");
    Ok(plot)
}

/// Whole ellipses of an elliptic cycle with the path of their second focus.
pub fn foci_figure(cycle: &LambertCycle, members: usize) -> Result<SvgPlot> {
    let mut plot = SvgPlot::new("second foci along a cycle");
    let mut trace = Vec::new();
    // midpoints of 4 * members equal steps never land on 0 or +-pi
    for i in 0..4 * members {
        let phi = -PI + TAU * (i as f64 + 0.5) / (4 * members) as f64;
        let arc = cycle_arc_at(cycle, phi)?;
        if let Some(c) = arc.orbit().as_conic() {
            if c.conic.kind() == ConicKind::Ellipse {
                trace.push(crate::conic::second_focus(&c.conic, c.conic.energy())?);
                if i % 4 == 0 {
                    plot.dashed(branch_points(c, 0.0, 300), "#7f8c8d", 0.8);
                    plot.polyline(arc_points(&arc, 200), "#1f5fbf", 1.5);
                }
            }
        }
    }
    plot.polyline(trace, "#c0392b", 1.5);
    plot.dot(Vec2::ZERO, "black");
    plot.label(Vec2::ZERO, "O");
    Ok(plot)
}

/// Radius against time for radial motion at `H = -1/2`: the cycloid
/// `(u - sin u, 1 - cos u)`, over two bounces.
pub fn cycloid_figure() -> SvgPlot {
    let mut plot = SvgPlot::new("radial motion at H = -1/2");
    let pts = (0..=800)
        .map(|i| {
            let u = 4.0 * PI * i as f64 / 800.0;
            Vec2::new(u - u.sin(), 1.0 - u.cos())
        })
        .collect();
    plot.polyline(pts, "#1f5fbf", 1.5);
    plot.polyline(vec![Vec2::ZERO, Vec2::new(4.0 * PI, 0.0)], "black", 0.8);
    plot.label(Vec2::new(PI, 2.0), "culmination");
    plot.label(Vec2::new(TAU, 0.0), "collision");
    plot
}
