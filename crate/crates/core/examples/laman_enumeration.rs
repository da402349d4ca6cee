//! Builds Laman graphs level by level with Henneberg moves and counts them.
//!
//! cargo run --release --example laman_enumeration -- 7

use std::env;

use nacrig::canon::{canonical_form, CanonicalCode};
use nacrig::graph::Graph;
use nacrig::laman::{apply_henneberg, henneberg_moves, is_laman, next_level, MoveKind};
use nacrig::structure::delta_classes;

fn main() -> nacrig::Result<()> {
    let max_n: usize = env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);

    let edge = Graph::new(2, [(0, 1)])?;
    let moves = henneberg_moves(&edge);
    println!("a single edge admits {} moves", moves.len());
    let triangle = apply_henneberg(&edge, moves[0])?;
    assert!(is_laman(&triangle));

    let mut level: Vec<CanonicalCode> = vec![canonical_form(&edge)?];
    for n in 3..=max_n {
        level = next_level(&level);
        let graphs: Vec<Graph> = level.iter().map(|c| c.to_graph()).collect();
        let delta = graphs.iter().filter(|g| delta_classes(g).is_delta_connected()).count();
        let two = graphs
            .iter()
            .flat_map(henneberg_moves)
            .filter(|m| matches!(m.kind(), MoveKind::IIa | MoveKind::IIb | MoveKind::IIc))
            .count();
        println!("n={n}: {} Laman graphs, {delta} triangle-connected, {two} edge-splitting moves out", level.len());
    }
    Ok(())
}
