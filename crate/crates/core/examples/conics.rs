//! Conserved quantities of a state and the unifocal form of its orbit.

use lambert_core::prelude::*;

fn main() -> Result<()> {
    let state = StateVector::new(Vec2::new(1.0, 0.0), Vec2::new(0.2, 1.2), 0.0)?;
    let orbit = orbit_from_state(&state);
    let c = orbit.as_conic().expect("nonradial state");
    println!("H = {:.15}", energy(&state));
    println!("C = {:.15}", angular_momentum(&state));
    println!("E = {:?}", eccentricity_vector(&state));
    println!(
        "r = {:.12} x + {:.12} y + {:.12}  ({:?}, {:?})",
        c.conic.alpha(),
        c.conic.beta(),
        c.conic.gamma(),
        c.conic.kind(),
        c.orientation
    );
    // e^2 - 1 = 2 H gamma
    let e2m1 = c.conic.eccentricity_vector().norm_squared() - 1.0;
    println!("e^2 - 1 - 2 H gamma = {:e}", e2m1 - 2.0 * c.conic.energy() * c.conic.gamma());
    println!("residual at q = {:e}", unifocal_residual(&c.conic, state.q));
    println!("a = {:.12}", semimajor_axis(energy(&state))?);
    println!("second focus = {:?}", second_focus(&c.conic, c.conic.energy())?);
    Ok(())
}
