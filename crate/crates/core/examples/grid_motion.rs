//! Grid construction: every vertex sits at i (1,0) + j (cos a, sin a), where i
//! and j index its red and blue components.
//!
//! cargo run --example grid_motion

use std::f64::consts::PI;

use nacrig::fixtures;
use nacrig::motion::{component_grid, grid_motion, injective_flex, uniform_alphas};
use nacrig::NacColoring;

fn main() -> nacrig::Result<()> {
    let g = fixtures::get("PRISM");
    let nac = nacrig::nac::find_nac(&g.graph).expect("the prism has a NAC-coloring");
    let ga = component_grid(&g.graph, &nac);
    for v in 0..g.graph.vertex_count() {
        println!("{} -> cell {:?}", g.name(v), ga.cell(v));
    }
    println!("injective: {}", injective_flex(&ga));

    let m = grid_motion(&ga, &uniform_alphas(12))?;
    m.check()?;
    for (idx, e) in g.graph.edges().iter().enumerate() {
        println!("{} {} length {}", g.edge_label(*e), nac.color(idx), m.labeling.length(idx));
    }
    let (u, v, spread) = m.most_varying_non_edge().expect("prism is not complete");
    println!("distance {}{} varies by {spread:.3}", g.name(u), g.name(v));

    let c4 = fixtures::get("C4");
    let delta1 = NacColoring::validate(&c4.graph, fixtures::c4_delta1(&c4))?;
    let square = grid_motion(&component_grid(&c4.graph, &delta1), &[PI / 2.0, PI / 3.0])?;
    for f in &square.frames {
        println!("alpha {:.3}: {:?}", f.alpha, f.positions);
    }
    Ok(())
}
