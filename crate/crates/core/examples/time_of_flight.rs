//! Transfer time on the three conic types: the universal formulation
//! against the closed forms, and Kepler's equation on a high eccentricity.

use lambert_core::prelude::*;

fn main() -> Result<()> {
    for (name, alpha) in [("ellipse", 0.6), ("parabola", 1.0), ("hyperbola", 1.8)] {
        let conic = UnifocalConic::new(alpha, 0.0, 1.0)?;
        let orbit = Orbit::Conic(ConicOrbit::new(conic, Orientation::Ccw, 0.0));
        let arc = KeplerianArc::new(orbit, -0.4, 1.1)?;
        let universal = arc.time_of_flight_with(TofMode::Universal);
        let closed = arc.time_of_flight_with(TofMode::ClosedForm);
        println!("{name:9} dt = {universal:.15}  closed form differs by {:e}", universal - closed);
    }
    let e = 0.999;
    let ecc = solve_kepler_elliptic(0.01, e)?;
    println!("e = {e}, mean anomaly 0.01: E = {ecc:.15}, E - e sin E = {:.15}", ecc - e * ecc.sin());
    println!("period at H = -1/2: {:.15}", period(-0.5)?);
    Ok(())
}
