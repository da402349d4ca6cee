//! The zigzag construction on the rotating-triangles graph: the outer
//! triangles turn about the corners of the inner one.
//!
//! cargo run --example zigzag_rotating_triangles > rotating.svg

use std::f64::consts::PI;

use nacrig::fixtures;
use nacrig::motion::{component_grid, uniform_alphas, zigzag_motion, ZigzagData};
use nacrig::svg::animated_svg;
use nacrig::NacColoring;

fn main() -> nacrig::Result<()> {
    let g = fixtures::get("FIG5");
    let nac = NacColoring::validate(&g.graph, fixtures::fig5_rotating(&g))?;
    let ga = component_grid(&g.graph, &nac);

    let s = 3f64.sqrt();
    let a = vec![[0.0, 0.0], [-3.0 * s / 8.0, -3.0 / 8.0], [3.0 * s / 8.0, -3.0 / 8.0], [0.0, 0.75]];
    let b = vec![[0.0, 0.0], [-0.5, s / 2.0], [0.5, s / 2.0]];
    let z = ZigzagData::new(a, b)?;

    let steps: Vec<f64> = (0..7).map(|k| k as f64 * PI / 12.0).collect();
    let m = zigzag_motion(&ga, &z, &steps)?;
    m.check()?;
    for (k, f) in m.frames.iter().enumerate() {
        let p: Vec<String> = f.positions.iter().map(|p| format!("({:.4}, {:.4})", p[0], p[1])).collect();
        eprintln!("step {k}: {}", p.join(" "));
    }

    let full = zigzag_motion(&ga, &z, &uniform_alphas(48))?;
    print!("{}", animated_svg(&full));
    Ok(())
}
