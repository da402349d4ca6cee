//! Samples a motion and reads the NAC-coloring back from how edge directions turn.
//!
//! cargo run --example recover_coloring -- FIG12

use std::env;

use nacrig::fixtures;
use nacrig::motion::{component_grid, recover_coloring, uniform_alphas, zigzag_motion, ZigzagData};
use nacrig::nac::enumerate_nac;

fn main() -> nacrig::Result<()> {
    let name = env::args().nth(1).unwrap_or_else(|| "FIG12".to_string());
    let g = fixtures::fixture(&name).expect("unknown fixture");
    for nac in enumerate_nac(&g.graph, true) {
        let ga = component_grid(&g.graph, &nac);
        let m = zigzag_motion(&ga, &ZigzagData::default_for(&ga), &uniform_alphas(16))?;
        let back = recover_coloring(&m)?;
        let same = back == *nac.coloring() || back == nac.coloring().swapped();
        println!("{} -> {} {}", nac.coloring().letters(), back.letters(), if same { "ok" } else { "MISMATCH" });
    }
    Ok(())
}
