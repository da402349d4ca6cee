//! Triangle classes, necessary conditions and constructive colorings.
//!
//! cargo run --example structure_report -- FIG9

use std::env;

use nacrig::fixtures;
use nacrig::graph::members;
use nacrig::nac::is_nac;
use nacrig::structure::{
    coloring_from_edge_cut, coloring_from_independent_cut, coloring_from_triangle_free_vertex, delta_classes,
    edge_bound_check, find_connecting_edge_cut, find_independent_cut, spanning_delta_check,
    vertex_without_triangle, StructureReport, DEFAULT_MAX_CUT_SIZE,
};

fn main() -> nacrig::Result<()> {
    let name = env::args().nth(1).unwrap_or_else(|| "FIG9".to_string());
    let g = fixtures::fixture(&name).expect("unknown fixture");
    let graph = &g.graph;

    let classes = delta_classes(graph);
    println!("{} triangle classes", classes.len());
    for (c, class) in classes.classes().iter().enumerate() {
        let labels: Vec<String> = class.iter().map(|&e| g.edge_label(graph.edge(e))).collect();
        println!("  {c}: {}", labels.join(" "));
    }
    println!("spanning class: {:?}", spanning_delta_check(graph));
    println!("edge bound allows NAC: {}", edge_bound_check(graph));

    if let Some(cut) = find_independent_cut(graph, DEFAULT_MAX_CUT_SIZE) {
        let names: Vec<&str> = members(cut).map(|v| g.name(v)).collect();
        let c = coloring_from_independent_cut(graph, cut)?;
        println!("independent cut {{{}}} gives {}", names.join(","), c.coloring().letters());
    }
    if let Some(v) = vertex_without_triangle(graph) {
        let c = coloring_from_triangle_free_vertex(graph, v)?;
        println!("vertex {} lies in no triangle: {}", g.name(v), c.coloring().letters());
    }
    if let Some(cut) = find_connecting_edge_cut(graph) {
        let c = coloring_from_edge_cut(graph, &cut)?;
        assert!(is_nac(graph, c.coloring())?.is_nac());
        println!("cut of {} connecting edges gives {}", cut.len(), c.coloring().letters());
    }

    let report = StructureReport::new(&g, DEFAULT_MAX_CUT_SIZE);
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
