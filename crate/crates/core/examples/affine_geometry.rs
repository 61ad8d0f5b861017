//! Focal chords of an ellipse in geometric progression, and which
//! area-scaling maps fixing a line send a focus to a focus.

use lambert_core::prelude::*;

fn main() -> Result<()> {
    let ellipse = UnifocalConic::new(0.3, -0.4, 1.0)?;
    let (f, g, h) = geometric_progression_check(&ellipse, Vec2::from_angle(0.7))?;
    println!("chords {f:.12} {g:.12} {h:.12}, g^2 - f h = {:e}", g * g - f * h);

    let axis = ellipse.periapsis_direction();
    // a strong stretch makes the minor axis the longer one and moves the foci off
    for (label, d, shear, jac) in [
        ("squeeze towards the major axis", axis, 0.0, 0.8),
        ("strong stretch across the major axis", axis, 0.0, 1.6),
        ("shear along the major axis", axis, 0.8, 1.0),
        ("squeeze towards another line", Vec2::from_angle(1.1), 0.0, 0.8),
    ] {
        let map = AffineMap2D::fixing_line(Vec2::ZERO, d, shear, jac);
        let v = affine_focus_property_check(&ellipse, &map, d)?;
        println!(
            "{label}: semiparameter scaled {}, focus kept {}",
            v.semiparameter_scaled, v.focus_on_line
        );
    }
    Ok(())
}
