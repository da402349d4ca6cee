//! Triangle classes and structural conditions for NAC-colorings.
//!
//! Two edges are related when they lie in a common triangle; the classes of
//! the transitive closure group edges that every NAC-coloring colors alike.
//! The remaining checks either rule flexibility out (a spanning class, too
//! many edges) or exhibit a NAC-coloring directly (independent separating
//! sets, triangle-free vertices, separating sets of connecting edges).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, mask_of, members, triangles, Graph, NamedGraph, VertexSet};
use crate::nac::{Color, EdgeColoring, NacColoring};
use crate::unionfind::UnionFind;

pub const DEFAULT_MAX_CUT_SIZE: usize = 4;

/// Largest number of components of `G - connecting edges` for which every
/// minimal separating subset is tried when the greedy one fails.
const BOND_SEARCH_MAX_PARTS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaClassPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    supports: Vec<VertexSet>,
    in_triangle: Vec<bool>,
}

impl DeltaClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Classes as sorted edge-index lists, ordered by smallest edge.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn class_of(&self, edge: usize) -> usize {
        self.class_of[edge]
    }

    /// Vertices touched by the edges of class `c`.
    pub fn support(&self, c: usize) -> VertexSet {
        self.supports[c]
    }

    /// An edge in no triangle, equivalently one forming a singleton class
    /// without triangles.
    pub fn is_connecting(&self, edge: usize) -> bool {
        !self.in_triangle[edge]
    }

    pub fn connecting_edges(&self) -> Vec<usize> {
        (0..self.class_of.len())
            .filter(|&e| self.is_connecting(e))
            .collect()
    }

    /// A graph is triangle-connected when all its edges form one class.
    pub fn is_delta_connected(&self) -> bool {
        self.classes.len() == 1
    }
}

pub fn delta_classes(g: &Graph) -> DeltaClassPartition {
    let m = g.edge_count();
    let mut uf = UnionFind::new(m);
    let mut in_triangle = vec![false; m];
    for [a, b, c] in triangles(g) {
        let ids = [(a, b), (a, c), (b, c)].map(|(x, y)| g.edge_index(x, y).expect("triangle edge"));
        for &e in &ids {
            in_triangle[e] = true;
        }
        uf.union(ids[0], ids[1]);
        uf.union(ids[0], ids[2]);
    }
    let mut root_class = vec![usize::MAX; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; m];
    let mut supports = Vec::new();
    for (e, slot) in class_of.iter_mut().enumerate() {
        let r = uf.find(e);
        if root_class[r] == usize::MAX {
            root_class[r] = classes.len();
            classes.push(Vec::new());
            supports.push(0);
        }
        let c = root_class[r];
        *slot = c;
        classes[c].push(e);
        supports[c] |= g.edge(e).mask();
    }
    DeltaClassPartition {
        classes,
        class_of,
        supports,
        in_triangle,
    }
}

/// A class whose edges touch every vertex: a spanning triangle-connected
/// subgraph, which rules out NAC-colorings.
pub fn spanning_delta_check(g: &Graph) -> Option<usize> {
    let classes = delta_classes(g);
    (0..classes.len()).find(|&c| classes.support(c) == g.vertex_mask())
}

/// `|E| <= n(n-1)/2 - (n-2)`; `false` rules out NAC-colorings.
pub fn edge_bound_check(g: &Graph) -> bool {
    let n = g.vertex_count() as i64;
    (g.edge_count() as i64) <= n * (n - 1) / 2 - (n - 2)
}

fn separates(g: &Graph, removed: VertexSet) -> bool {
    g.components_without(removed).len() >= 2
}

/// Smallest independent separating vertex set with at most `max_size`
/// vertices, trying sizes in increasing order and subsets lexicographically.
/// Returns `None` for disconnected graphs.
pub fn find_independent_cut(g: &Graph, max_size: usize) -> Option<VertexSet> {
    if !g.is_connected() {
        return None;
    }
    let n = g.vertex_count();
    for size in 1..=max_size.min(n.saturating_sub(2)) {
        let mut chosen = Vec::with_capacity(size);
        if let Some(cut) = search_cut(g, 0, size, 0, &mut chosen) {
            return Some(cut);
        }
    }
    None
}

fn search_cut(
    g: &Graph,
    from: usize,
    left: usize,
    set: VertexSet,
    chosen: &mut Vec<usize>,
) -> Option<VertexSet> {
    if left == 0 {
        return separates(g, set).then_some(set);
    }
    let n = g.vertex_count();
    for v in from..=n - left {
        if g.neighbors(v) & set != 0 {
            continue;
        }
        chosen.push(v);
        let hit = search_cut(g, v + 1, left - 1, set | bit(v), chosen);
        chosen.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Red: edges with an endpoint in the component of `G - cut` holding the
/// smallest vertex. Blue: everything else.
pub fn coloring_from_independent_cut(g: &Graph, cut: VertexSet) -> Result<NacColoring> {
    if cut & !g.vertex_mask() != 0 {
        return Err(Error::contract("cut contains vertices outside the graph"));
    }
    if !g.is_independent(cut) {
        return Err(Error::contract("cut is not an independent set"));
    }
    let parts = g.components_without(cut);
    if parts.len() < 2 {
        return Err(Error::contract("cut does not separate the graph"));
    }
    let chosen = parts[0];
    let colors = g
        .edges()
        .iter()
        .map(|e| {
            if e.mask() & chosen != 0 {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .collect();
    NacColoring::validate(g, EdgeColoring::new(colors))
}

/// Smallest non-isolated vertex lying in no triangle.
pub fn vertex_without_triangle(g: &Graph) -> Option<usize> {
    (0..g.vertex_count()).find(|&v| {
        let nb = g.neighbors(v);
        nb != 0 && members(nb).all(|w| g.neighbors(w) & nb == 0)
    })
}

/// Colors via the neighborhood of a triangle-free vertex, which is an
/// independent set separating `v` from the rest unless `g` is a star around
/// `v`; a star gets one red edge.
pub fn coloring_from_triangle_free_vertex(g: &Graph, v: usize) -> Result<NacColoring> {
    let nb = g.neighbors(v);
    if nb == 0 || members(nb).any(|w| g.neighbors(w) & nb != 0) {
        return Err(Error::contract(format!("vertex {v} lies in a triangle or is isolated")));
    }
    if separates(g, nb) {
        return coloring_from_independent_cut(g, nb);
    }
    if g.edge_count() < 2 {
        return Err(Error::contract("a single edge has no NAC-coloring"));
    }
    let mut colors = vec![Color::Blue; g.edge_count()];
    colors[0] = Color::Red;
    NacColoring::validate(g, EdgeColoring::new(colors))
}

/// Whether the graph formed by `edges` contains a path with four edges.
fn has_path_with_four_edges(g: &Graph, edges: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![0u64; n];
    for &i in edges {
        let e = g.edge(i);
        adj[e.u] |= bit(e.v);
        adj[e.v] |= bit(e.u);
    }
    fn walk(adj: &[u64], at: usize, visited: VertexSet, depth: usize) -> bool {
        depth == 4
            || members(adj[at] & !visited).any(|w| walk(adj, w, visited | bit(w), depth + 1))
    }
    (0..n).any(|v| adj[v] != 0 && walk(&adj, v, bit(v), 0))
}

fn separates_by_edges(g: &Graph, removed: &[usize]) -> bool {
    !g.spanning_subgraph(|i| !removed.contains(&i)).is_connected()
}

/// Drops edges (in index order) while the rest still separates.
fn minimize_edge_cut(g: &Graph, cut: &[usize]) -> Vec<usize> {
    let mut kept: Vec<usize> = cut.to_vec();
    let mut k = 0;
    while k < kept.len() {
        let mut without = kept.clone();
        without.remove(k);
        if separates_by_edges(g, &without) {
            kept = without;
        } else {
            k += 1;
        }
    }
    kept
}

/// A minimal separating set of connecting edges with no 4-edge path.
/// The greedy minimization of all connecting edges is tried first; if it
/// contains such a path, every minimal separating subset is examined
/// provided the connecting edges split the graph into at most 20 parts.
pub fn find_connecting_edge_cut(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_connected() || g.edge_count() < 2 {
        return None;
    }
    let connecting = delta_classes(g).connecting_edges();
    if !separates_by_edges(g, &connecting) {
        return None;
    }
    let greedy = minimize_edge_cut(g, &connecting);
    if !has_path_with_four_edges(g, &greedy) {
        return Some(greedy);
    }
    minimal_cuts(g, &connecting)?
        .into_iter()
        .find(|cut| !has_path_with_four_edges(g, cut))
}

/// Every inclusion-minimal separating subset of `connecting`, as the edge
/// sets between the two sides of a connected bipartition of the parts of
/// `G - connecting`. `None` when there are too many parts.
fn minimal_cuts(g: &Graph, connecting: &[usize]) -> Option<Vec<Vec<usize>>> {
    let rest = g.spanning_subgraph(|i| !connecting.contains(&i));
    let parts = crate::graph::connected_components(&rest);
    let r = parts.len();
    if r > BOND_SEARCH_MAX_PARTS {
        return None;
    }
    let links: Vec<(usize, usize, usize)> = connecting
        .iter()
        .map(|&i| {
            let e = g.edge(i);
            (parts.block_of(e.u), parts.block_of(e.v), i)
        })
        .filter(|(a, b, _)| a != b)
        .collect();
    let mut part_adj = vec![0u32; r];
    for &(a, b, _) in &links {
        part_adj[a] |= 1 << b;
        part_adj[b] |= 1 << a;
    }
    let connected = |side: u32| {
        let start = side.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut stack = vec![start];
        while let Some(p) = stack.pop() {
            let mut fresh = part_adj[p] & side & !seen;
            seen |= fresh;
            while fresh != 0 {
                stack.push(fresh.trailing_zeros() as usize);
                fresh &= fresh - 1;
            }
        }
        seen == side
    };
    let all = if r == 32 { u32::MAX } else { (1u32 << r) - 1 };
    let mut cuts = Vec::new();
    // Part 0 stays on the first side, so each bipartition is seen once.
    for side in (1..all).step_by(2) {
        if connected(side) && connected(all & !side) {
            let cut: Vec<usize> = links
                .iter()
                .filter(|(a, b, _)| (side >> a & 1) != (side >> b & 1))
                .map(|&(_, _, i)| i)
                .collect();
            cuts.push(cut);
        }
    }
    cuts.sort();
    Some(cuts)
}

/// Red: a minimal separating subset of `cut`. Blue: everything else.
pub fn coloring_from_edge_cut(g: &Graph, cut: &[usize]) -> Result<NacColoring> {
    let classes = delta_classes(g);
    if let Some(&bad) = cut.iter().find(|&&i| i >= g.edge_count() || !classes.is_connecting(i)) {
        return Err(Error::contract(format!("edge {bad} is not a connecting edge")));
    }
    if !separates_by_edges(g, cut) {
        return Err(Error::contract("edge set does not separate the graph"));
    }
    let minimal = minimize_edge_cut(g, cut);
    if has_path_with_four_edges(g, &minimal) {
        return Err(Error::contract("minimal edge cut contains a path with four edges"));
    }
    let mut colors = vec![Color::Blue; g.edge_count()];
    for &i in &minimal {
        colors[i] = Color::Red;
    }
    NacColoring::validate(g, EdgeColoring::new(colors))
}

/// Bounds used by the exponential searches in a [`StructureReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchBounds {
    pub independent_cut_max_size: usize,
    pub bounded: bool,
}

/// Structural facts about a named graph, with witnesses by vertex name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureReport {
    pub delta_classes: Vec<Vec<[String; 2]>>,
    pub connecting_edges: Vec<[String; 2]>,
    pub spanned_by: Option<usize>,
    pub edge_bound_ok: bool,
    pub independent_cut: Option<Vec<String>>,
    pub triangle_free_vertex: Option<String>,
    pub connecting_edge_cut: Option<Vec<[String; 2]>>,
    pub search: SearchBounds,
}

impl StructureReport {
    pub fn new(g: &NamedGraph, max_cut_size: usize) -> StructureReport {
        let graph = &g.graph;
        let pair = |i: usize| {
            let e = graph.edge(i);
            [g.name(e.u).to_string(), g.name(e.v).to_string()]
        };
        let classes = delta_classes(graph);
        let connected = graph.is_connected();
        let enough_edges = graph.edge_count() >= 2;
        StructureReport {
            delta_classes: classes
                .classes()
                .iter()
                .map(|c| c.iter().map(|&i| pair(i)).collect())
                .collect(),
            connecting_edges: classes.connecting_edges().into_iter().map(pair).collect(),
            spanned_by: spanning_delta_check(graph),
            edge_bound_ok: edge_bound_check(graph),
            independent_cut: find_independent_cut(graph, max_cut_size)
                .map(|s| members(s).map(|v| g.name(v).to_string()).collect()),
            triangle_free_vertex: (connected && enough_edges)
                .then(|| vertex_without_triangle(graph))
                .flatten()
                .map(|v| g.name(v).to_string()),
            connecting_edge_cut: find_connecting_edge_cut(graph)
                .map(|cut| cut.into_iter().map(pair).collect()),
            search: SearchBounds {
                independent_cut_max_size: max_cut_size,
                bounded: max_cut_size < graph.vertex_count().saturating_sub(2),
            },
        }
    }

    /// A structural certificate that no NAC-coloring exists.
    pub fn rules_out_nac(&self) -> bool {
        self.spanned_by.is_some() || !self.edge_bound_ok
    }
}

/// Vertex set from vertex names, as accepted by the cut constructions.
pub fn vertex_set_by_name(g: &NamedGraph, names: &[&str]) -> Option<VertexSet> {
    names
        .iter()
        .map(|n| g.index_of(n))
        .collect::<Option<Vec<_>>>()
        .map(mask_of)
}
