//! Maupertuis and principal actions, dw/dH = dt by central differences,
//! and the tangent constructions at the ends of an arc.

use lambert_core::prelude::*;

fn main() -> Result<()> {
    let arc = solve_lambert(Vec2::new(1.0, 0.0), Vec2::new(0.2, 1.3), 1.5, Orientation::Ccw, 0)?;
    let r = ActionReport::of(&arc)?;
    println!("w = {:.15}  S = {:.15}  S - (w + H dt) = {:e}", r.w, r.s, r.identity_residual());
    for h in [1e-3, 1e-4, 1e-5] {
        let c = verify_hamilton_dwdh(&arc, h)?;
        println!("step {h:e}: dw/dH = {:.12}  dt = {:.12}  residual {:.2e}", c.dw_dh, c.dt, c.residual);
    }
    let q = bisector_tangent_check(&arc)?;
    println!("tangents meet at {:?}, off the bisector by {:.1e}", q.q, q.line_distance);
    let j = jacobi_velocity_decomposition(&arc)?;
    println!("velocity decomposition closes to {:.1e}", j.closure_residual);
    Ok(())
}
