//! Enumerates the NAC-colorings of a bundled graph and checks a hand-made one.
//!
//! cargo run --example nac_colorings -- PRISM

use std::env;

use nacrig::fixtures;
use nacrig::nac::{enumerate_nac, is_nac, NacWitness};
use nacrig::{Color, EdgeColoring};

fn main() -> nacrig::Result<()> {
    let name = env::args().nth(1).unwrap_or_else(|| "C4".to_string());
    let g = fixtures::fixture(&name).expect("unknown fixture");
    let edges: Vec<String> = g.graph.edges().iter().map(|e| g.edge_label(*e)).collect();
    println!("{name}: {}", edges.join(" "));

    let all = enumerate_nac(&g.graph, false);
    let half = enumerate_nac(&g.graph, true);
    println!("{} NAC-colorings, {} up to swapping colors", all.len(), half.len());
    for nac in &half {
        println!("  {}", nac.coloring().letters());
    }

    // alternate colors around the edge list and see why it fails, if it does
    let guess = EdgeColoring::new(
        (0..g.graph.edge_count())
            .map(|i| if i % 2 == 0 { Color::Red } else { Color::Blue })
            .collect(),
    );
    match is_nac(&g.graph, &guess)?.witness() {
        None => println!("{} is NAC", guess.letters()),
        Some(NacWitness::NotSurjective { used }) => println!("{} uses only {used:?}", guess.letters()),
        Some(NacWitness::AlmostCycle { majority, cycle, off_edge }) => {
            let names: Vec<&str> = cycle.iter().map(|&v| g.name(v)).collect();
            println!(
                "{}: cycle {} is {majority} except edge {}",
                guess.letters(),
                names.join("-"),
                g.edge_label(*off_edge)
            );
        }
    }
    Ok(())
}
