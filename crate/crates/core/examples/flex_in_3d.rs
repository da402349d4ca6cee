//! Any graph missing an edge uv flexes in space: u and v swing on a common
//! axis while the rest stays on a line.
//!
//! cargo run --example flex_in_3d -- K33

use std::env;

use nacrig::fixtures;
use nacrig::motion::{first_non_adjacent_pair, flex3d, uniform_alphas};

fn main() -> nacrig::Result<()> {
    let name = env::args().nth(1).unwrap_or_else(|| "K33".to_string());
    let g = fixtures::fixture(&name).expect("unknown fixture");
    let Some((u, v)) = first_non_adjacent_pair(&g.graph) else {
        println!("{name} is complete; no spatial flex of this kind");
        return Ok(());
    };
    let m = flex3d(&g.graph, u, v, &uniform_alphas(8))?;
    m.check()?;
    println!("moving pair {} {}", g.name(u), g.name(v));
    println!("max length error {:.1e}", m.max_length_error());
    println!("distance spread {:.3}", m.distance_spread(u, v));
    for f in &m.frames {
        let p = &f.positions;
        println!("alpha {:.3}: {} at {:?}, {} at {:?}", f.alpha, g.name(u), p[u], g.name(v), p[v]);
    }
    Ok(())
}
