//! The numerical propagator lands on the analytic endpoint of an arc.

use lambert_core::prelude::*;

fn main() -> Result<()> {
    let a = Vec2::new(1.0, 0.0);
    let b = Vec2::new(-0.6, 1.4);
    for dt in [0.8, 2.5, 9.0] {
        let arc = solve_lambert(a, b, dt, Orientation::Ccw, 0)?;
        let run = propagate(&arc.start_state()?, dt, 1e-13)?;
        let miss = (run.final_state.q - b).norm() / b.norm();
        println!(
            "dt = {dt:4}  H = {:+.6}  steps = {:5}  relative miss = {miss:.2e}  energy drift = {:.2e}",
            arc.energy(),
            run.steps,
            run.max_energy_drift
        );
    }
    Ok(())
}
