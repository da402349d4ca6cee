//! Bundled example graphs and colorings.
//!
//! Vertex `k` of each fixture is the `k`-th name in its declaration, so the
//! index layout is stable across releases.

use crate::graph::NamedGraph;
use crate::nac::{Color, EdgeColoring};

struct Fixture {
    name: &'static str,
    vertices: &'static [&'static str],
    edges: &'static [(&'static str, &'static str)],
}

const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "TRIANGLE",
        vertices: &["a", "b", "c"],
        edges: &[("a", "b"), ("b", "c"), ("a", "c")],
    },
    Fixture {
        name: "C4",
        vertices: &["v1", "v2", "v3", "v4"],
        edges: &[("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")],
    },
    Fixture {
        name: "K4",
        vertices: &["a", "b", "c", "d"],
        edges: &[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ],
    },
    Fixture {
        name: "STAR",
        vertices: &["c", "l1", "l2", "l3"],
        edges: &[("c", "l1"), ("c", "l2"), ("c", "l3")],
    },
    Fixture {
        name: "K23",
        vertices: &["x1", "x2", "y1", "y2", "y3"],
        edges: &[
            ("x1", "y1"),
            ("x1", "y2"),
            ("x1", "y3"),
            ("x2", "y1"),
            ("x2", "y2"),
            ("x2", "y3"),
        ],
    },
    Fixture {
        name: "K33",
        vertices: &["x1", "x2", "x3", "y1", "y2", "y3"],
        edges: &[
            ("x1", "y1"),
            ("x1", "y2"),
            ("x1", "y3"),
            ("x2", "y1"),
            ("x2", "y2"),
            ("x2", "y3"),
            ("x3", "y1"),
            ("x3", "y2"),
            ("x3", "y3"),
        ],
    },
    Fixture {
        name: "PRISM",
        vertices: &["a", "b", "c", "d", "e", "f"],
        edges: &[
            ("a", "b"),
            ("b", "c"),
            ("c", "a"),
            ("d", "e"),
            ("e", "f"),
            ("f", "d"),
            ("a", "d"),
            ("b", "e"),
            ("c", "f"),
        ],
    },
    Fixture {
        name: "FIG2L",
        vertices: &["a", "b", "c", "d", "e", "f"],
        edges: &[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("a", "e"),
            ("b", "c"),
            ("b", "d"),
            ("b", "e"),
            ("c", "d"),
            ("c", "e"),
            ("d", "e"),
            ("c", "f"),
        ],
    },
    Fixture {
        name: "FIG2R",
        vertices: &["a", "b", "c", "d", "e", "f"],
        edges: &[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("a", "e"),
            ("b", "c"),
            ("b", "d"),
            ("b", "e"),
            ("c", "e"),
            ("d", "e"),
            ("d", "f"),
            ("c", "f"),
        ],
    },
    Fixture {
        name: "FIG5",
        vertices: &["1", "2", "3", "4", "5", "6", "7", "8", "9"],
        edges: &[
            ("1", "2"),
            ("2", "3"),
            ("3", "1"),
            ("1", "4"),
            ("4", "5"),
            ("5", "1"),
            ("3", "6"),
            ("6", "7"),
            ("7", "3"),
            ("2", "8"),
            ("8", "9"),
            ("9", "2"),
            ("9", "4"),
            ("5", "6"),
            ("7", "8"),
        ],
    },
    Fixture {
        name: "FIG8L",
        vertices: &["a", "b", "c", "d", "e", "f", "g"],
        edges: &[
            ("a", "b"),
            ("a", "d"),
            ("a", "e"),
            ("b", "c"),
            ("b", "e"),
            ("c", "d"),
            ("c", "e"),
            ("c", "f"),
            ("d", "f"),
            ("e", "f"),
            ("g", "a"),
            ("g", "d"),
        ],
    },
    Fixture {
        name: "FIG8R",
        vertices: &["a", "b", "c", "d", "e", "f", "g"],
        edges: &[
            ("a", "d"),
            ("a", "e"),
            ("b", "c"),
            ("b", "e"),
            ("c", "d"),
            ("c", "e"),
            ("c", "f"),
            ("d", "f"),
            ("e", "f"),
            ("g", "a"),
            ("g", "b"),
            ("g", "d"),
        ],
    },
    Fixture {
        name: "FIG9",
        vertices: &["a", "b", "c", "d", "e", "f", "g"],
        edges: &[
            ("a", "b"),
            ("b", "c"),
            ("a", "c"),
            ("d", "e"),
            ("d", "f"),
            ("e", "f"),
            ("a", "d"),
            ("c", "f"),
            ("b", "e"),
            ("b", "g"),
            ("g", "e"),
        ],
    },
    Fixture {
        name: "FIG12",
        vertices: &[
            "a1", "a2", "a3", "a4", "a5", "a6", "i1", "i2", "i3", "i4", "i5", "i6",
        ],
        edges: &[
            ("a1", "a2"),
            ("a2", "a3"),
            ("a3", "a4"),
            ("a4", "a5"),
            ("a1", "i5"),
            ("i5", "a2"),
            ("a2", "i6"),
            ("i6", "a3"),
            ("a3", "i1"),
            ("i1", "a4"),
            ("a4", "i2"),
            ("i2", "a5"),
            ("i2", "i5"),
            ("a5", "a6"),
            ("a6", "a1"),
            ("a5", "i3"),
            ("i3", "a6"),
            ("a6", "i4"),
            ("i4", "a1"),
            ("i3", "i6"),
            ("i4", "i1"),
        ],
    },
];

/// Names accepted by [`fixture`].
pub fn fixture_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.name).collect()
}

/// Looks up a bundled graph by (case-insensitive) name.
pub fn fixture(name: &str) -> Option<NamedGraph> {
    let f = FIXTURES.iter().find(|f| f.name.eq_ignore_ascii_case(name))?;
    Some(NamedGraph::from_names(f.vertices, f.edges).expect("fixture is well formed"))
}

/// Panicking lookup for names known to exist.
pub fn get(name: &str) -> NamedGraph {
    fixture(name).unwrap_or_else(|| panic!("unknown fixture {name}"))
}

/// Colors the edges listed in `red` red and every other edge blue.
pub fn coloring_with_red(g: &NamedGraph, red: &[(&str, &str)]) -> EdgeColoring {
    let mut colors = vec![Color::Blue; g.graph.edge_count()];
    for (a, b) in red {
        let idx = g
            .edge_between(a, b)
            .unwrap_or_else(|| panic!("{a}{b} is not an edge"));
        colors[idx] = Color::Red;
    }
    EdgeColoring::new(colors)
}

/// First C4 coloring: `v2v3`, `v4v1` red; `v1v2`, `v3v4` blue.
pub fn c4_delta1(g: &NamedGraph) -> EdgeColoring {
    named_coloring(g, "delta1").expect("C4 edges")
}

/// Second C4 coloring: `v3v4`, `v4v1` red; `v1v2`, `v2v3` blue.
pub fn c4_delta2(g: &NamedGraph) -> EdgeColoring {
    named_coloring(g, "delta2").expect("C4 edges")
}

/// Outer triangles red, inner triangle and the three spokes blue.
pub fn fig5_rotating(g: &NamedGraph) -> EdgeColoring {
    named_coloring(g, "rotating").expect("FIG5 edges")
}

/// The coloring drawn on the twelve-vertex problematic graph.
pub fn fig12_coloring(g: &NamedGraph) -> EdgeColoring {
    named_coloring(g, "fig12").expect("FIG12 edges")
}

/// Bundled colorings by name: `delta1`, `delta2` (C4), `rotating` (FIG5)
/// and `fig12` (FIG12). Returns `None` if the name is unknown or the graph
/// lacks the required edges.
pub fn named_coloring(g: &NamedGraph, name: &str) -> Option<EdgeColoring> {
    let red: &[(&str, &str)] = match name.to_ascii_lowercase().as_str() {
        "delta1" | "δ1" => &[("v2", "v3"), ("v4", "v1")],
        "delta2" | "δ2" => &[("v3", "v4"), ("v4", "v1")],
        "rotating" => &[
            ("1", "4"),
            ("4", "5"),
            ("5", "1"),
            ("3", "6"),
            ("6", "7"),
            ("7", "3"),
            ("2", "8"),
            ("8", "9"),
            ("9", "2"),
        ],
        "fig12" => &[
            ("a5", "a6"),
            ("a6", "a1"),
            ("a5", "i3"),
            ("i3", "a6"),
            ("a6", "i4"),
            ("i4", "a1"),
            ("i3", "i6"),
            ("i4", "i1"),
        ],
        _ => return None,
    };
    let mut colors = vec![Color::Blue; g.graph.edge_count()];
    for (a, b) in red {
        colors[g.edge_between(a, b)?] = Color::Red;
    }
    Some(EdgeColoring::new(colors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let expect = [
            ("TRIANGLE", 3, 3),
            ("C4", 4, 4),
            ("K4", 4, 6),
            ("STAR", 4, 3),
            ("K23", 5, 6),
            ("K33", 6, 9),
            ("PRISM", 6, 9),
            ("FIG2L", 6, 11),
            ("FIG2R", 6, 11),
            ("FIG5", 9, 15),
            ("FIG8L", 7, 12),
            ("FIG8R", 7, 12),
            ("FIG9", 7, 11),
            ("FIG12", 12, 21),
        ];
        for (name, n, m) in expect {
            let g = get(name);
            assert_eq!(g.graph.vertex_count(), n, "{name}");
            assert_eq!(g.graph.edge_count(), m, "{name}");
        }
        assert!(fixture("prism").is_some());
        assert!(fixture("nope").is_none());
    }
}
