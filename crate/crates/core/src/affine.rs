//! Affine maps of the plane and the focal geometry they preserve.
//!
//! Conics are handled here in general quadratic form
//! `p^T A p + 2 b.p + c = 0`, which is closed under affine maps; the focal
//! form `|p - F|^2 = (E.(p - F) + g)^2` is recovered from it by an
//! eigen-decomposition of `A`.

use crate::conic::UnifocalConic;
use crate::error::{Error, Result};
use crate::vec2::Vec2;

/// `p -> m p + b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap2D {
    pub m: [[f64; 2]; 2],
    pub b: Vec2,
}

impl AffineMap2D {
    pub fn new(m: [[f64; 2]; 2], b: Vec2) -> Self {
        AffineMap2D { m, b }
    }

    pub fn identity() -> Self {
        AffineMap2D::new([[1.0, 0.0], [0.0, 1.0]], Vec2::ZERO)
    }

    /// The map fixing the line through `p0` along `d` pointwise: in the frame
    /// `(d, n)` attached to the line, `(t, h) -> (t + shear h, jacobian h)`.
    pub fn fixing_line(p0: Vec2, d: Vec2, shear: f64, jacobian: f64) -> Self {
        let d = d.normalized();
        let n = d.perp();
        // columns: image of d is d, image of n is shear d + jacobian n
        let img_n = d * shear + n * jacobian;
        // m = [d img_n] [d n]^T
        let m = [
            [d.x * d.x + img_n.x * n.x, d.x * d.y + img_n.x * n.y],
            [d.y * d.x + img_n.y * n.x, d.y * d.y + img_n.y * n.y],
        ];
        let lin = AffineMap2D::new(m, Vec2::ZERO);
        AffineMap2D::new(m, p0 - lin.apply(p0))
    }

    pub fn apply_linear(&self, v: Vec2) -> Vec2 {
        Vec2::new(
            self.m[0][0] * v.x + self.m[0][1] * v.y,
            self.m[1][0] * v.x + self.m[1][1] * v.y,
        )
    }

    pub fn apply(&self, p: Vec2) -> Vec2 {
        self.apply_linear(p) + self.b
    }

    pub fn det(&self) -> f64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d == 0.0 || !d.is_finite() {
            return Err(Error::InvalidInput("singular affine map".into()));
        }
        let m = [
            [self.m[1][1] / d, -self.m[0][1] / d],
            [-self.m[1][0] / d, self.m[0][0] / d],
        ];
        let inv = AffineMap2D::new(m, Vec2::ZERO);
        Ok(AffineMap2D::new(m, -inv.apply_linear(self.b)))
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &AffineMap2D) -> Self {
        let (a, b) = (&self.m, &other.m);
        let m = [
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ];
        AffineMap2D::new(m, self.apply(other.b))
    }

    /// Same map without its translation.
    pub fn linear(&self) -> Self {
        AffineMap2D::new(self.m, Vec2::ZERO)
    }

    /// Largest displacement of the sample points `p0 + k d`, `k` in -2..=2.
    pub fn line_displacement(&self, p0: Vec2, d: Vec2) -> f64 {
        let d = d.normalized();
        (-2..=2)
            .map(|k| {
                let p = p0 + d * k as f64;
                (self.apply(p) - p).norm()
            })
            .fold(0.0, f64::max)
    }
}

/// `p^T A p + 2 b.p + c` with `A = [[a11, a12], [a12, a22]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadric {
    pub a11: f64,
    pub a12: f64,
    pub a22: f64,
    pub b: Vec2,
    pub c: f64,
}

/// A focus with its focal form `|p - F| = E.(p - F) + g`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FocalForm {
    pub focus: Vec2,
    pub eccentricity_vector: Vec2,
    pub semiparameter: f64,
}

impl Quadric {
    /// `|p|^2 - (E.p + gamma)^2`.
    pub fn from_unifocal(conic: &UnifocalConic) -> Self {
        let e = conic.eccentricity_vector();
        let g = conic.gamma();
        Quadric {
            a11: 1.0 - e.x * e.x,
            a12: -e.x * e.y,
            a22: 1.0 - e.y * e.y,
            b: e * -g,
            c: -g * g,
        }
    }

    pub fn eval(&self, p: Vec2) -> f64 {
        self.a11 * p.x * p.x
            + 2.0 * self.a12 * p.x * p.y
            + self.a22 * p.y * p.y
            + 2.0 * self.b.dot(p)
            + self.c
    }

    fn apply_a(&self, p: Vec2) -> Vec2 {
        Vec2::new(
            self.a11 * p.x + self.a12 * p.y,
            self.a12 * p.x + self.a22 * p.y,
        )
    }

    /// Image of the zero set under `map`.
    pub fn mapped(&self, map: &AffineMap2D) -> Result<Self> {
        let inv = map.inverse()?;
        let k = inv.m;
        let t = map.b;
        // A' = K^T A K
        let col = |j: usize| Vec2::new(k[0][j], k[1][j]);
        let (k0, k1) = (col(0), col(1));
        let a11 = k0.dot(self.apply_a(k0));
        let a12 = k0.dot(self.apply_a(k1));
        let a22 = k1.dot(self.apply_a(k1));
        let img = Quadric {
            a11,
            a12,
            a22,
            b: Vec2::ZERO,
            c: 0.0,
        };
        // b' = K^T b - A' t,  c' = t^T A' t - 2 b^T K t + c
        let ktb = Vec2::new(k0.dot(self.b), k1.dot(self.b));
        let at = img.apply_a(t);
        let b = ktb - at;
        let c = t.dot(at) - 2.0 * self.b.dot(inv.apply_linear(t)) + self.c;
        Ok(Quadric { b, c, ..img })
    }

    /// Eigenpairs of `A`, eigenvalues in decreasing order.
    fn eigen(&self) -> [(f64, Vec2); 2] {
        let tr = self.a11 + self.a22;
        let half_diff = 0.5 * (self.a11 - self.a22);
        let rad = half_diff.hypot(self.a12);
        let (l1, l2) = (0.5 * tr + rad, 0.5 * tr - rad);
        // eigenvector of l1 at angle theta with tan 2 theta = 2 a12 / (a11 - a22)
        let theta = 0.5 * self.a12.atan2(half_diff);
        let u = Vec2::from_angle(theta);
        [(l1, u), (l2, u.perp())]
    }

    /// Every real focus with its focal form. Circles report their center,
    /// parabolas their single finite focus.
    pub fn foci(&self) -> Vec<FocalForm> {
        let eig = self.eigen();
        let scale = eig[0].0.abs().max(eig[1].0.abs());
        let mut out = Vec::new();
        if scale == 0.0 {
            return out;
        }
        if (eig[0].0 - eig[1].0).abs() <= 1e-14 * scale {
            let lam = 0.5 * (eig[0].0 + eig[1].0);
            let f = self.b * (-1.0 / lam);
            let g2 = -self.eval(f) / lam;
            if g2 > 0.0 {
                out.push(FocalForm {
                    focus: f,
                    eccentricity_vector: Vec2::ZERO,
                    semiparameter: g2.sqrt(),
                });
            }
            return out;
        }
        for (i, j) in [(0, 1), (1, 0)] {
            let (lam, u) = eig[i];
            let (mu, v) = eig[j];
            if lam.abs() <= 1e-14 * scale {
                continue;
            }
            let k = (lam - mu) / lam;
            if k <= 0.0 {
                continue;
            }
            let eps = k.sqrt();
            let (bu, bv) = (self.b.dot(u), self.b.dot(v));
            let fu = -bu / lam;
            let kk = self.c - bu * bu / lam;
            let mut fvs = Vec::new();
            if mu.abs() <= 1e-14 * scale {
                if bv != 0.0 {
                    fvs.push(-(kk * lam + bv * bv) / (2.0 * bv * lam));
                }
            } else {
                let disc = lam * (lam - mu) * (bv * bv - mu * kk);
                if disc >= 0.0 {
                    let s = disc.sqrt();
                    fvs.push((-bv * lam + s) / (mu * lam));
                    if s > 0.0 {
                        fvs.push((-bv * lam - s) / (mu * lam));
                    }
                }
            }
            for fv in fvs {
                let mut g = -(bv + mu * fv) / (lam * eps);
                let mut e = v * eps;
                if g < 0.0 {
                    g = -g;
                    e = -e;
                }
                if g > 0.0 {
                    out.push(FocalForm {
                        focus: u * fu + v * fv,
                        eccentricity_vector: e,
                        semiparameter: g,
                    });
                }
            }
        }
        out
    }
}

/// Lengths `(f, g, h)` of the focal chord along `direction`, the parallel
/// chord through the center and the major axis of an ellipse. They are in
/// geometric progression, `g^2 = f h`.
///
/// With the chord direction as `x` axis the horizontal semichord at
/// ordinate `y` is `sqrt(delta) / (1 - alpha^2)` where
/// `delta = (alpha^2 - 1) y^2 + (beta y + gamma)^2`; the focal chord is at
/// `y = 0` and the central one at `y = beta a`.
pub fn geometric_progression_check(conic: &UnifocalConic, direction: Vec2) -> Result<(f64, f64, f64)> {
    let ecc2m1 = conic.ecc2_minus_one();
    if !(ecc2m1 < 0.0) {
        return Err(Error::Precondition("geometric progression needs an ellipse".into()));
    }
    if !(direction.norm() > 0.0) {
        return Err(Error::InvalidInput("zero chord direction".into()));
    }
    let d = direction.normalized();
    let e = conic.eccentricity_vector();
    let (alpha, beta) = (e.dot(d), d.cross(e));
    let gamma = conic.gamma();
    let one_m_a2 = (1.0 - alpha) * (1.0 + alpha);
    let a = -gamma / ecc2m1;
    let semichord = |y: f64| {
        let lin = beta * y + gamma;
        let delta = lin * lin - one_m_a2 * y * y;
        delta.max(0.0).sqrt() / one_m_a2
    };
    Ok((2.0 * semichord(0.0), 2.0 * semichord(beta * a), 2.0 * a))
}

/// Outcome of [`affine_focus_property_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FocusVerdict {
    pub jacobian: f64,
    /// `J^2 gamma`.
    pub expected_semiparameter: f64,
    pub image_semiparameter: f64,
    pub semiparameter_scaled: bool,
    pub focus_on_line: bool,
    /// Only for ellipses: image and original major axes agree.
    pub major_axis_kept: Option<bool>,
    /// Only for ellipses: the chord along the line keeps its length.
    pub chord_kept: Option<bool>,
}

impl FocusVerdict {
    /// Semiparameter scaled by `J^2` exactly when a focus stays on the line,
    /// and for ellipses any two of (focal chord, chord length, major axis)
    /// give the third.
    pub fn consistent(&self) -> bool {
        let bicond = self.semiparameter_scaled == self.focus_on_line;
        let triad = match (self.chord_kept, self.major_axis_kept) {
            (Some(chord), Some(axis)) => {
                let n = [self.focus_on_line, chord, axis].iter().filter(|&&x| x).count();
                n != 2
            }
            _ => true,
        };
        bicond && triad
    }
}

const DECISION_TOL: f64 = 1e-9;

/// Checks that the image of a conic (attracting focus at the origin) by a
/// map fixing the line through the origin along `line_dir` has
/// semiparameter `J^2 gamma` if and only if it keeps a focus on that line.
/// A parabola whose axis is parallel to the line counts as having its focus
/// at infinity on it.
pub fn affine_focus_property_check(
    conic: &UnifocalConic,
    map: &AffineMap2D,
    line_dir: Vec2,
) -> Result<FocusVerdict> {
    let d = line_dir.normalized();
    let scale = 1.0 + conic.gamma();
    if map.line_displacement(Vec2::ZERO, d) > 1e-12 * scale * 4.0 {
        return Err(Error::Precondition("map does not fix the line".into()));
    }
    let j = map.det();
    let image = Quadric::from_unifocal(conic).mapped(map)?;
    let foci = image.foci();
    let expected = j * j * conic.gamma();
    let semi = foci.first().map(|f| f.semiparameter).unwrap_or(f64::NAN);
    let size = foci.iter().map(|f| f.focus.norm()).fold(scale, f64::max);
    let mut on_line = foci
        .iter()
        .any(|f| d.cross(f.focus).abs() <= DECISION_TOL * size);
    let parabolic = foci.len() == 1 && foci[0].eccentricity_vector.norm() > 1.0 - 1e-9;
    if parabolic && d.cross(foci[0].eccentricity_vector.normalized()).abs() <= DECISION_TOL {
        on_line = true;
    }
    let (mut axis, mut chord) = (None, None);
    if conic.ecc2_minus_one() < 0.0 && foci.len() == 2 {
        let a0 = -conic.gamma() / conic.ecc2_minus_one();
        let e2 = foci[0].eccentricity_vector.norm_squared();
        let a1 = foci[0].semiparameter / (1.0 - e2);
        axis = Some((a1 - a0).abs() <= DECISION_TOL * a0);
        let (f0, _, _) = geometric_progression_check(conic, d)?;
        let f1 = line_chord(&image, d).unwrap_or(f64::NAN);
        chord = Some((f1 - f0).abs() <= DECISION_TOL * f0);
    }
    Ok(FocusVerdict {
        jacobian: j,
        expected_semiparameter: expected,
        image_semiparameter: semi,
        semiparameter_scaled: (semi - expected).abs() <= DECISION_TOL * expected,
        focus_on_line: on_line,
        major_axis_kept: axis,
        chord_kept: chord,
    })
}

/// Length of the chord cut by the line through the origin along `d`.
fn line_chord(q: &Quadric, d: Vec2) -> Option<f64> {
    // q(t d) = A2 t^2 + 2 B1 t + c
    let a2 = d.dot(q.apply_a(d));
    let b1 = q.b.dot(d);
    let disc = b1 * b1 - a2 * q.c;
    (disc >= 0.0 && a2 != 0.0).then(|| 2.0 * disc.sqrt() / a2.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_compose() {
        let f = AffineMap2D::new([[2.0, 0.3], [-0.1, 0.7]], Vec2::new(0.4, -1.0));
        let g = f.inverse().unwrap();
        let p = Vec2::new(0.3, 2.2);
        assert!((g.apply(f.apply(p)) - p).norm() < 1e-15);
        let id = f.compose(&g);
        assert!((id.apply(p) - p).norm() < 1e-14);
    }

    #[test]
    fn fixing_line_fixes_it() {
        let m = AffineMap2D::fixing_line(Vec2::new(1.0, 1.0), Vec2::new(2.0, 1.0), 0.7, 1.9);
        assert!(m.line_displacement(Vec2::new(1.0, 1.0), Vec2::new(2.0, 1.0)) < 1e-14);
        assert!((m.det() - 1.9).abs() < 1e-14);
    }

    #[test]
    fn foci_of_an_ellipse() {
        let c = UnifocalConic::new(0.5, 0.0, 0.75).unwrap();
        let foci = Quadric::from_unifocal(&c).foci();
        assert_eq!(foci.len(), 2);
        let mut xs: Vec<f64> = foci.iter().map(|f| f.focus.x).collect();
        xs.sort_by(f64::total_cmp);
        // a = 1, foci at the origin and 2aE = (1, 0)
        assert!(xs[0].abs() < 1e-15 && (xs[1] - 1.0).abs() < 1e-15);
        for f in foci {
            assert!((f.semiparameter - 0.75).abs() < 1e-15);
            assert!(f.focus.y.abs() < 1e-15);
        }
    }

    #[test]
    fn focus_of_a_parabola() {
        let c = UnifocalConic::new(0.6, -0.8, 2.0).unwrap();
        let foci = Quadric::from_unifocal(&c).foci();
        assert_eq!(foci.len(), 1);
        assert!(foci[0].focus.norm() < 1e-14);
        assert!((foci[0].semiparameter - 2.0).abs() < 1e-14);
    }

    #[test]
    fn circle_progression() {
        let c = UnifocalConic::new(0.0, 0.0, 1.0).unwrap();
        for k in 0..8 {
            let (f, g, h) = geometric_progression_check(&c, Vec2::from_angle(k as f64)).unwrap();
            assert!((f - 2.0).abs() < 1e-15 && (g - 2.0).abs() < 1e-15 && (h - 2.0).abs() < 1e-15);
        }
    }

    #[test]
    fn progression_against_line_intersection() {
        let c = UnifocalConic::new(0.3, -0.55, 1.3).unwrap();
        let q = Quadric::from_unifocal(&c);
        let d = Vec2::from_angle(0.8);
        let (f, g, h) = geometric_progression_check(&c, d).unwrap();
        assert!((f - line_chord(&q, d).unwrap()).abs() < 1e-13);
        let a = -c.gamma() / c.ecc2_minus_one();
        let center = c.eccentricity_vector() * a;
        let shifted = q.mapped(&AffineMap2D::new([[1.0, 0.0], [0.0, 1.0]], -center)).unwrap();
        assert!((g - line_chord(&shifted, d).unwrap()).abs() < 1e-13);
        assert!((g * g - f * h).abs() < 1e-12 * g * g);
    }

    #[test]
    fn identity_keeps_everything() {
        let c = UnifocalConic::new(0.4, 0.2, 0.9).unwrap();
        let v = affine_focus_property_check(&c, &AffineMap2D::identity(), Vec2::X).unwrap();
        assert!(v.semiparameter_scaled && v.focus_on_line && v.consistent());
        assert_eq!(v.major_axis_kept, Some(true));
    }
}
