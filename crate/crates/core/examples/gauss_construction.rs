//! Conics of one energy through two points: two above the minimal energy,
//! one at it, none below.

use lambert_core::prelude::*;

fn main() -> Result<()> {
    let cfg = ChordConfig::new(Vec2::new(1.0, 0.0), Vec2::new(-0.3, 2.0))?;
    let hm = h_min(&cfg);
    println!("minimal energy {hm:.15}");
    for h in [hm * 1.01, hm, hm * 0.99, -0.1, 0.0, 0.5] {
        let conics = gauss_rescaled(&cfg, h)?;
        print!("H = {h:+.6}: {} conic(s)", conics.len());
        for c in &conics {
            let through = unifocal_residual(c, cfg.a).abs().max(unifocal_residual(c, cfg.b).abs());
            print!("  [{:?}, e = {:.6}, residual {:.1e}]", c.kind(), c.eccentricity(), through);
        }
        println!();
    }
    Ok(())
}
