//! Radial motion continued through the collision: at H = -1/2 the radius
//! follows the cycloid r = 1 - cos u, t = u - sin u.

use std::f64::consts::PI;

use lambert_core::kepler::RadialSense;
use lambert_core::prelude::*;

fn main() -> Result<()> {
    let orbit = RectilinearOrbit::new(Vec2::X, -0.5, 0.0)?;
    println!("collision to culmination: {:.15}", orbit.elapsed(0.0, PI));
    println!("one bounce: {:.15}", orbit.elapsed(0.0, 2.0 * PI));
    println!("{:>8} {:>18} {:>18}  sense", "t", "r(t)", "1 - cos u");
    for k in 0..=16 {
        let u = 4.0 * PI * k as f64 / 16.0;
        let t = u - u.sin();
        let (r, sense) = rectilinear_position(&orbit, t)?;
        let s = match sense {
            RadialSense::Outward => "out",
            RadialSense::Inward => "in",
        };
        println!("{t:8.4} {r:18.15} {:18.15}  {s}", 1.0 - u.cos());
    }
    Ok(())
}
