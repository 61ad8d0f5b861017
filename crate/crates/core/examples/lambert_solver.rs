//! Both sub-revolution arcs for one transfer time, a multi-revolution pair,
//! and the parabolic transfer recovered from Euler's closed form.

use lambert_core::lambert::{solve_lambert_multi, MultiRevBranch};
use lambert_core::prelude::*;

fn main() -> Result<()> {
    let (a, b) = (Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.5));
    for dir in [Orientation::Ccw, Orientation::Cw] {
        let arc = solve_lambert(a, b, 2.0, dir, 0)?;
        println!(
            "{dir:?}: H = {:+.12}  class {}  v_A = {:?}",
            arc.energy(),
            classify_arc(&arc)?,
            arc.start_state()?.v
        );
    }
    for branch in [MultiRevBranch::SmallerSemimajorAxis, MultiRevBranch::LargerSemimajorAxis] {
        match solve_lambert_multi(a, b, 20.0, Orientation::Ccw, 1, branch) {
            Ok(arc) => println!("one turn, {branch:?}: H = {:+.12}", arc.energy()),
            Err(e) => println!("one turn, {branch:?}: {e}"),
        }
    }
    let cfg = ChordConfig::new(Vec2::X, Vec2::Y)?;
    let dt = euler_parabolic_tof(&cfg, false);
    let arc = solve_lambert(cfg.a, cfg.b, dt, Orientation::Ccw, 0)?;
    println!("parabolic transfer dt = {dt:.15}, solved H = {:e}", arc.energy());
    Ok(())
}
