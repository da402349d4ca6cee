//! NAC-colorings: red/blue edge colorings with no almost-monochromatic cycle.
//!
//! A coloring is checked through its monochromatic components: it is NAC iff
//! it uses both colors and every connected component of the red subgraph and
//! of the blue subgraph is an induced subgraph. Enumeration assigns one color
//! per triangle class, since the edges of a triangle (and hence of a whole
//! class) must agree in any NAC-coloring.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{connected_components, Edge, Graph, NamedGraph, VertexPartition};
use crate::structure::{delta_classes, DeltaClassPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
}

impl Color {
    pub fn swapped(self) -> Color {
        match self {
            Color::Blue => Color::Red,
            Color::Red => Color::Blue,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Blue => 'b',
            Color::Red => 'r',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Blue => "blue",
            Color::Red => "red",
        })
    }
}

/// One color per edge, indexed like [`Graph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> EdgeColoring {
        EdgeColoring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, edge: usize) -> Color {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn swapped(&self) -> EdgeColoring {
        EdgeColoring::new(self.colors.iter().map(|c| c.swapped()).collect())
    }

    pub fn count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    pub fn is_surjective(&self) -> bool {
        self.count(Color::Red) > 0 && self.count(Color::Blue) > 0
    }

    /// Indices of edges with the given color.
    pub fn edges_of(&self, color: Color) -> impl Iterator<Item = usize> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == color)
            .map(|(i, _)| i)
    }

    /// Compact `rb..` string in edge-index order.
    pub fn letters(&self) -> String {
        self.colors.iter().map(|c| c.letter()).collect()
    }
}

/// A coloring that has been validated as NAC, with its monochromatic components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NacColoring {
    coloring: EdgeColoring,
    red_components: VertexPartition,
    blue_components: VertexPartition,
}

impl NacColoring {
    /// Validates `coloring`, turning a failed check into a contract error.
    pub fn validate(g: &Graph, coloring: EdgeColoring) -> Result<NacColoring> {
        match is_nac(g, &coloring)? {
            NacVerdict::Nac(nac) => Ok(nac),
            NacVerdict::NotNac(w) => Err(Error::contract(format!("not a NAC-coloring: {w}"))),
        }
    }

    pub fn coloring(&self) -> &EdgeColoring {
        &self.coloring
    }

    pub fn into_coloring(self) -> EdgeColoring {
        self.coloring
    }

    pub fn color(&self, edge: usize) -> Color {
        self.coloring.color(edge)
    }

    /// Vertex sets of the components of the red spanning subgraph.
    pub fn red_components(&self) -> &VertexPartition {
        &self.red_components
    }

    pub fn blue_components(&self) -> &VertexPartition {
        &self.blue_components
    }
}

/// Why a coloring is not NAC.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NacWitness {
    /// Every edge has the same color (`used`).
    NotSurjective { used: Option<Color> },
    /// A cycle whose edges all have color `majority` except `off_edge`.
    /// `cycle` lists the vertices of the cycle, starting and ending at the
    /// endpoints of `off_edge`.
    AlmostCycle {
        majority: Color,
        cycle: Vec<usize>,
        off_edge: Edge,
    },
}

impl fmt::Display for NacWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NacWitness::NotSurjective { used: Some(c) } => {
                write!(f, "not surjective: every edge is {c}")
            }
            NacWitness::NotSurjective { used: None } => write!(f, "not surjective: no edges"),
            NacWitness::AlmostCycle {
                majority,
                cycle,
                off_edge,
            } => {
                let path: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
                write!(
                    f,
                    "almost {majority} cycle {} closed by {} edge {off_edge}",
                    path.join("-"),
                    majority.swapped()
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NacVerdict {
    Nac(NacColoring),
    NotNac(NacWitness),
}

impl NacVerdict {
    pub fn is_nac(&self) -> bool {
        matches!(self, NacVerdict::Nac(_))
    }

    pub fn witness(&self) -> Option<&NacWitness> {
        match self {
            NacVerdict::Nac(_) => None,
            NacVerdict::NotNac(w) => Some(w),
        }
    }

    pub fn into_nac(self) -> Option<NacColoring> {
        match self {
            NacVerdict::Nac(n) => Some(n),
            NacVerdict::NotNac(_) => None,
        }
    }
}

/// Decides whether `coloring` is a NAC-coloring of `g` in linear time.
pub fn is_nac(g: &Graph, coloring: &EdgeColoring) -> Result<NacVerdict> {
    if coloring.len() != g.edge_count() {
        return Err(Error::contract(format!(
            "coloring has {} entries for {} edges",
            coloring.len(),
            g.edge_count()
        )));
    }
    if !coloring.is_surjective() {
        let used = coloring.colors.first().copied();
        return Ok(NacVerdict::NotNac(NacWitness::NotSurjective { used }));
    }
    let n = g.vertex_count();
    let mono = |color: Color| {
        VertexPartition::from_edges(n, coloring.edges_of(color).map(|i| g.edge(i)))
    };
    let red = mono(Color::Red);
    let blue = mono(Color::Blue);
    for (majority, parts) in [(Color::Red, &red), (Color::Blue, &blue)] {
        for off in coloring.edges_of(majority.swapped()) {
            let e = g.edge(off);
            if parts.block_of(e.u) == parts.block_of(e.v) {
                let cycle = g
                    .shortest_path(e.u, e.v, |i| coloring.color(i) == majority)
                    .expect("endpoints share a monochromatic component");
                return Ok(NacVerdict::NotNac(NacWitness::AlmostCycle {
                    majority,
                    cycle,
                    off_edge: e,
                }));
            }
        }
    }
    Ok(NacVerdict::Nac(NacColoring {
        coloring: coloring.clone(),
        red_components: red,
        blue_components: blue,
    }))
}

/// Configurable search over class colorings.
///
/// Results come in increasing order of the red-class bitmask, where bit `c`
/// stands for triangle class `c` (classes ordered by smallest edge index).
/// With `up_to_swap`, only colorings whose class 0 is blue are produced.
pub struct NacSearch<'g> {
    g: &'g Graph,
    classes: DeltaClassPartition,
    up_to_swap: bool,
    node_limit: Option<u64>,
}

const PARALLEL_MIN_CLASSES: usize = 14;
const SPLIT_DEPTH: usize = 8;

impl<'g> NacSearch<'g> {
    pub fn new(g: &'g Graph) -> Self {
        NacSearch {
            g,
            classes: delta_classes(g),
            up_to_swap: false,
            node_limit: None,
        }
    }

    pub fn up_to_swap(mut self, yes: bool) -> Self {
        self.up_to_swap = yes;
        self
    }

    /// Abort with [`Error::SearchLimit`] after visiting this many search nodes.
    pub fn node_limit(mut self, limit: Option<u64>) -> Self {
        self.node_limit = limit;
        self
    }

    pub fn classes(&self) -> &DeltaClassPartition {
        &self.classes
    }

    pub fn enumerate(&self) -> Result<Vec<NacColoring>> {
        let ctx = self.context();
        let root = Node::root(self.g.vertex_count());
        let out = if self.classes.len() >= PARALLEL_MIN_CLASSES {
            let frontier = ctx.frontier(root, SPLIT_DEPTH)?;
            let parts: Vec<Result<Vec<EdgeColoring>>> = frontier
                .into_par_iter()
                .map(|node| {
                    let mut found = Vec::new();
                    ctx.dfs(node, &mut |c| {
                        found.push(c);
                        true
                    })?;
                    Ok(found)
                })
                .collect();
            let mut all = Vec::new();
            for p in parts {
                all.extend(p?);
            }
            all
        } else {
            let mut found = Vec::new();
            ctx.dfs(root, &mut |c| {
                found.push(c);
                true
            })?;
            found
        };
        Ok(out
            .into_iter()
            .map(|c| NacColoring::validate(self.g, c).expect("search yields NAC-colorings"))
            .collect())
    }

    /// The first coloring in enumeration order, if any.
    pub fn first(&self) -> Result<Option<NacColoring>> {
        let ctx = self.context();
        let root = Node::root(self.g.vertex_count());
        let found = if self.classes.len() >= PARALLEL_MIN_CLASSES {
            let frontier = ctx.frontier(root, SPLIT_DEPTH)?;
            let best = AtomicUsize::new(usize::MAX);
            let results: Vec<Result<Option<EdgeColoring>>> = frontier
                .into_par_iter()
                .enumerate()
                .map(|(idx, node)| {
                    if best.load(Ordering::Relaxed) < idx {
                        return Ok(None);
                    }
                    let mut hit = None;
                    ctx.dfs_cancellable(node, &|| best.load(Ordering::Relaxed) < idx, &mut |c| {
                        hit = Some(c);
                        false
                    })?;
                    if hit.is_some() {
                        best.fetch_min(idx, Ordering::Relaxed);
                    }
                    Ok(hit)
                })
                .collect();
            let mut first = None;
            for r in results {
                if let Some(c) = r? {
                    first = Some(c);
                    break;
                }
            }
            first
        } else {
            let mut hit = None;
            ctx.dfs(root, &mut |c| {
                hit = Some(c);
                false
            })?;
            hit
        };
        Ok(found.map(|c| NacColoring::validate(self.g, c).expect("search yields NAC-colorings")))
    }

    fn context(&self) -> SearchCtx<'_> {
        SearchCtx {
            g: self.g,
            classes: &self.classes,
            up_to_swap: self.up_to_swap,
            limit: self.node_limit,
            visited: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }
}

/// Partial assignment: classes `depth..k` are still open, assigned from the
/// highest class downwards.
#[derive(Clone)]
struct Node {
    depth: usize,
    class_colors: Vec<Option<Color>>,
    red_label: Vec<u8>,
    blue_label: Vec<u8>,
    red_edges: Vec<usize>,
    blue_edges: Vec<usize>,
}

impl Node {
    fn root(n: usize) -> Node {
        let labels: Vec<u8> = (0..n as u8).collect();
        Node {
            depth: 0,
            class_colors: Vec::new(),
            red_label: labels.clone(),
            blue_label: labels,
            red_edges: Vec::new(),
            blue_edges: Vec::new(),
        }
    }
}

struct SearchCtx<'a> {
    g: &'a Graph,
    classes: &'a DeltaClassPartition,
    up_to_swap: bool,
    limit: Option<u64>,
    visited: AtomicU64,
    exhausted: AtomicBool,
}

impl SearchCtx<'_> {
    fn class_at(&self, depth: usize) -> usize {
        self.classes.len() - 1 - depth
    }

    fn tick(&self) -> Result<()> {
        let seen = self.visited.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(limit) = self.limit {
            if seen > limit || self.exhausted.load(Ordering::Relaxed) {
                self.exhausted.store(true, Ordering::Relaxed);
                return Err(Error::SearchLimit(limit));
            }
        }
        Ok(())
    }

    /// Extends `node` by coloring the next class; `None` if that already
    /// closes an almost-monochromatic cycle.
    fn extend(&self, node: &Node, color: Color) -> Option<Node> {
        let class = self.class_at(node.depth);
        if self.up_to_swap && class == 0 && color == Color::Red {
            return None;
        }
        let mut next = node.clone();
        next.depth += 1;
        if next.class_colors.is_empty() {
            next.class_colors = vec![None; self.classes.len()];
        }
        next.class_colors[class] = Some(color);
        let (own, other, own_edges, other_edges) = match color {
            Color::Red => (
                &mut next.red_label,
                &next.blue_label,
                &mut next.red_edges,
                &next.blue_edges,
            ),
            Color::Blue => (
                &mut next.blue_label,
                &next.red_label,
                &mut next.blue_edges,
                &next.red_edges,
            ),
        };
        for &ei in self.classes.class(class) {
            let e = self.g.edge(ei);
            if other[e.u] == other[e.v] {
                return None;
            }
            let (keep, drop) = (own[e.u], own[e.v]);
            if keep != drop {
                for l in own.iter_mut() {
                    if *l == drop {
                        *l = keep;
                    }
                }
            }
            own_edges.push(ei);
        }
        for &ei in other_edges {
            let e = self.g.edge(ei);
            if own[e.u] == own[e.v] {
                return None;
            }
        }
        Some(next)
    }

    fn leaf(&self, node: &Node) -> Option<EdgeColoring> {
        if node.red_edges.is_empty() || node.blue_edges.is_empty() {
            return None;
        }
        let mut colors = vec![Color::Blue; self.g.edge_count()];
        for &e in &node.red_edges {
            colors[e] = Color::Red;
        }
        Some(EdgeColoring::new(colors))
    }

    /// Surviving partial assignments at `depth`, in search order.
    fn frontier(&self, root: Node, depth: usize) -> Result<Vec<Node>> {
        let depth = depth.min(self.classes.len());
        let mut level = vec![root];
        for _ in 0..depth {
            let mut next = Vec::with_capacity(level.len() * 2);
            for node in &level {
                for color in [Color::Blue, Color::Red] {
                    self.tick()?;
                    if let Some(child) = self.extend(node, color) {
                        next.push(child);
                    }
                }
            }
            level = next;
        }
        Ok(level)
    }

    /// Depth-first search; `emit` returns `false` to stop. Returns whether
    /// the search ran to completion.
    fn dfs(&self, node: Node, emit: &mut dyn FnMut(EdgeColoring) -> bool) -> Result<bool> {
        self.dfs_cancellable(node, &|| false, emit)
    }

    fn dfs_cancellable(
        &self,
        node: Node,
        cancelled: &dyn Fn() -> bool,
        emit: &mut dyn FnMut(EdgeColoring) -> bool,
    ) -> Result<bool> {
        if cancelled() {
            return Ok(false);
        }
        if node.depth == self.classes.len() {
            return Ok(match self.leaf(&node) {
                Some(c) => emit(c),
                None => true,
            });
        }
        for color in [Color::Blue, Color::Red] {
            self.tick()?;
            if let Some(child) = self.extend(&node, color) {
                if !self.dfs_cancellable(child, cancelled, emit)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// All NAC-colorings of `g` in enumeration order (see [`NacSearch`]).
pub fn enumerate_nac(g: &Graph, up_to_swap: bool) -> Vec<NacColoring> {
    NacSearch::new(g)
        .up_to_swap(up_to_swap)
        .enumerate()
        .expect("unbounded search cannot hit a limit")
}

/// A NAC-coloring if one exists. Graphs with two or more edge-bearing
/// components are answered directly: one such component red, the rest blue.
pub fn find_nac(g: &Graph) -> Option<NacColoring> {
    find_nac_limited(g, None).expect("unbounded search cannot hit a limit")
}

pub fn find_nac_limited(g: &Graph, node_limit: Option<u64>) -> Result<Option<NacColoring>> {
    if let Some(split) = disconnected_split(g) {
        return Ok(Some(split));
    }
    NacSearch::new(g).up_to_swap(true).node_limit(node_limit).first()
}

pub fn has_nac(g: &Graph) -> bool {
    find_nac(g).is_some()
}

/// Red = the edges of the first edge-bearing component, blue = all others;
/// `None` unless at least two components carry edges.
pub fn disconnected_split(g: &Graph) -> Option<NacColoring> {
    let comps = connected_components(g);
    let bearing: Vec<usize> = (0..comps.len())
        .filter(|&b| comps.blocks()[b].len() > 1)
        .collect();
    if bearing.len() < 2 {
        return None;
    }
    let first = bearing[0];
    let colors = g
        .edges()
        .iter()
        .map(|e| {
            if comps.block_of(e.u) == first {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .collect();
    Some(NacColoring::validate(g, EdgeColoring::new(colors)).expect("component split is NAC"))
}

/// Parses `u v r|b` lines (names as in `g`); every edge must appear once.
pub fn parse_coloring(g: &NamedGraph, text: &str) -> Result<EdgeColoring> {
    let mut colors: Vec<Option<Color>> = vec![None; g.graph.edge_count()];
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Coloring {
            line: lineno + 1,
            message,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [a, b, c] = tokens[..] else {
            return Err(err(format!("expected `u v r|b`, got {line:?}")));
        };
        let color = match c {
            "r" | "red" => Color::Red,
            "b" | "blue" => Color::Blue,
            other => return Err(err(format!("unknown color {other:?}"))),
        };
        let idx = g
            .edge_between(a, b)
            .ok_or_else(|| err(format!("{a} {b} is not an edge")))?;
        if colors[idx].replace(color).is_some() {
            return Err(err(format!("edge {a} {b} colored twice")));
        }
    }
    let missing: Vec<String> = colors
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_none())
        .map(|(i, _)| g.edge_label(g.graph.edge(i)))
        .collect();
    if !missing.is_empty() {
        return Err(Error::Coloring {
            line: 0,
            message: format!("uncolored edges: {}", missing.join(" ")),
        });
    }
    Ok(EdgeColoring::new(colors.into_iter().map(|c| c.expect("checked")).collect()))
}

pub fn format_coloring(g: &NamedGraph, c: &EdgeColoring) -> String {
    let mut out = String::new();
    for (i, e) in g.graph.edges().iter().enumerate() {
        out.push_str(&format!("{} {} {}\n", g.name(e.u), g.name(e.v), c.color(i).letter()));
    }
    out
}

/// One entry of the JSON array form of a coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredEdge {
    pub u: String,
    pub v: String,
    pub color: Color,
}

pub fn coloring_entries(g: &NamedGraph, c: &EdgeColoring) -> Vec<ColoredEdge> {
    g.graph
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| ColoredEdge {
            u: g.name(e.u).to_string(),
            v: g.name(e.v).to_string(),
            color: c.color(i),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn c4_delta2_is_nac() {
        let c4 = fixtures::get("C4");
        let v = is_nac(&c4.graph, &fixtures::c4_delta2(&c4)).unwrap();
        assert!(v.is_nac());
        let v = is_nac(&c4.graph, &fixtures::c4_delta1(&c4)).unwrap();
        assert!(v.is_nac());
    }

    #[test]
    fn monochromatic_rejected() {
        let c4 = fixtures::get("C4");
        let all_red = EdgeColoring::new(vec![Color::Red; 4]);
        assert_eq!(
            is_nac(&c4.graph, &all_red).unwrap().witness(),
            Some(&NacWitness::NotSurjective {
                used: Some(Color::Red)
            })
        );
    }

    #[test]
    fn triangle_with_one_blue_edge() {
        let t = fixtures::get("TRIANGLE");
        let c = fixtures::coloring_with_red(&t, &[("a", "b"), ("b", "c")]);
        match is_nac(&t.graph, &c).unwrap() {
            NacVerdict::NotNac(NacWitness::AlmostCycle {
                majority,
                cycle,
                off_edge,
            }) => {
                assert_eq!(majority, Color::Red);
                assert_eq!(off_edge, Edge::new(0, 2));
                assert_eq!(cycle, vec![0, 1, 2]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn length_mismatch_is_contract_error() {
        let t = fixtures::get("TRIANGLE");
        let c = EdgeColoring::new(vec![Color::Red, Color::Blue]);
        assert!(matches!(is_nac(&t.graph, &c), Err(Error::Contract(_))));
    }

    #[test]
    fn c4_counts() {
        let g = fixtures::get("C4").graph;
        assert_eq!(enumerate_nac(&g, false).len(), 6);
        assert_eq!(enumerate_nac(&g, true).len(), 3);
    }

    #[test]
    fn k4_and_fig8_have_none() {
        for name in ["K4", "FIG8L", "FIG8R"] {
            let g = fixtures::get(name).graph;
            assert!(enumerate_nac(&g, false).is_empty(), "{name}");
            assert!(!has_nac(&g), "{name}");
        }
    }

    #[test]
    fn prism_triangles_red_spokes_blue() {
        let p = fixtures::get("PRISM");
        let want = fixtures::coloring_with_red(
            &p,
            &[("a", "b"), ("b", "c"), ("c", "a"), ("d", "e"), ("e", "f"), ("f", "d")],
        );
        let all = enumerate_nac(&p.graph, false);
        assert!(all.iter().any(|n| n.coloring() == &want));
        assert!(has_nac(&p.graph));
    }

    #[test]
    fn fig12_has_nac() {
        let g = fixtures::get("FIG12");
        assert!(has_nac(&g.graph));
        assert!(is_nac(&g.graph, &fixtures::fig12_coloring(&g)).unwrap().is_nac());
    }

    #[test]
    fn enumeration_is_sorted_by_class_mask() {
        let g = fixtures::get("FIG9").graph;
        let search = NacSearch::new(&g);
        let classes = search.classes();
        let keys: Vec<Vec<Color>> = search
            .enumerate()
            .unwrap()
            .iter()
            .map(|n| {
                (0..classes.len())
                    .rev()
                    .map(|c| n.color(classes.class(c)[0]))
                    .collect()
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
        assert!(!keys.is_empty());
    }

    #[test]
    fn first_matches_enumeration_head() {
        for name in ["C4", "PRISM", "FIG9", "FIG12", "K23"] {
            let g = fixtures::get(name).graph;
            let head = enumerate_nac(&g, true).into_iter().next();
            assert_eq!(find_nac(&g), head, "{name}");
        }
    }

    #[test]
    fn node_limit_reported() {
        let g = fixtures::get("FIG12").graph;
        let r = NacSearch::new(&g).node_limit(Some(3)).enumerate();
        assert!(matches!(r, Err(Error::SearchLimit(3))));
    }

    #[test]
    fn disconnected_shortcut() {
        let g = Graph::new(5, [(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap();
        let nac = find_nac(&g).unwrap();
        assert_eq!(nac.coloring().letters(), "rbbb");
        // one edge-bearing component falls through to the search
        let single = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(disconnected_split(&single).is_none());
        assert!(!has_nac(&single));
    }

    #[test]
    fn coloring_text_round_trip() {
        let c4 = fixtures::get("C4");
        let d2 = fixtures::c4_delta2(&c4);
        let text = format_coloring(&c4, &d2);
        assert_eq!(parse_coloring(&c4, &text).unwrap(), d2);
        assert!(matches!(
            parse_coloring(&c4, "v1 v2 r\n"),
            Err(Error::Coloring { .. })
        ));
        assert!(matches!(
            parse_coloring(&c4, "v1 v3 r\n"),
            Err(Error::Coloring { line: 1, .. })
        ));
        assert!(matches!(
            parse_coloring(&c4, "v1 v2 green\n"),
            Err(Error::Coloring { line: 1, .. })
        ));
    }
}
