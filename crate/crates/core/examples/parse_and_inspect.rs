//! Reads a graph in graph6 or edge-list form and prints basic facts.
//!
//! cargo run --example parse_and_inspect -- 'Fs\zw'
//! cargo run --example parse_and_inspect -- path/to/edges.txt

use std::env;
use std::fs;

use nacrig::canon::canonical_form;
use nacrig::formats::{parse_graph, to_graph6, GraphFormat};
use nacrig::graph::{connected_components, triangles};
use nacrig::laman::is_laman;

fn main() -> nacrig::Result<()> {
    let arg = env::args().nth(1).unwrap_or_else(|| "E?~o".to_string());
    let text = fs::read_to_string(&arg).unwrap_or(arg);
    let format = GraphFormat::detect(&text);
    let g = parse_graph(&text, format)?;
    let graph = &g.graph;

    println!("format     {}", format.as_str());
    println!("vertices   {}", graph.vertex_count());
    println!("edges      {}", graph.edge_count());
    for e in graph.edges() {
        println!("  {} {}", g.name(e.u), g.name(e.v));
    }
    let comps = connected_components(graph);
    println!("components {}", comps.len());
    println!("triangles  {}", triangles(graph).len());
    println!("laman      {}", is_laman(graph));
    println!("graph6     {}", to_graph6(graph));
    println!("canonical  {}", canonical_form(graph)?);
    Ok(())
}
