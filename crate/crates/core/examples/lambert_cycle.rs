//! Moving both ends of an arc along its cycle keeps chord, radii sum,
//! energy and transfer time fixed, up to the two radial ends.

use std::f64::consts::PI;

use lambert_core::prelude::*;

fn main() -> Result<()> {
    let seed = solve_lambert(Vec2::new(1.2, 0.3), Vec2::new(-0.4, 1.1), 1.7, Orientation::Ccw, 0)?;
    let cycle = cycle_from_arc(&seed)?;
    println!("seed dt = {:.15}, class {}", seed.time_of_flight(), classify_arc(&seed)?);
    for k in 1..8 {
        let phi = PI * k as f64 / 8.0;
        let arc = cycle_arc_at(&cycle, phi)?;
        println!(
            "phi = {phi:.4}  dt = {:.15}  |AB| = {:.12}  |OA|+|OB| = {:.12}  H = {:+.12}",
            arc.time_of_flight(),
            arc.chord(),
            arc.radii_sum(),
            arc.energy()
        );
    }
    for end in [CycleEnd::PhiToZero, CycleEnd::PhiToPi] {
        let arc = rectilinear_limit(&cycle, end)?;
        println!("{end:?}: radial arc, dt = {:.15}", arc.time_of_flight());
    }
    let report = cycle_invariant_report(&cycle, 20)?;
    println!("worst dt deviation over the cycle: {:e}", report.time_of_flight);
    Ok(())
}
