//! Simple undirected graphs on densely indexed vertices.
//!
//! Vertices are `0..n` with `n <= 64`, so every vertex set fits in a `u64`
//! bitmask. Edges are stored normalized (`u < v`) and sorted, which makes the
//! position of an edge in [`Graph::edges`] a stable edge index used by
//! colorings, labelings and the triangle-class decomposition.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

pub const MAX_VERTICES: usize = 64;

/// Bitmask of vertices; bit `v` set means vertex `v` is a member.
pub type VertexSet = u64;

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the normalized edge between `a` and `b`. Panics on `a == b`.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "self-loop {a}-{a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    pub fn mask(&self) -> VertexSet {
        bit(self.u) | bit(self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[inline]
pub fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// Iterates the members of a vertex bitmask in increasing order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

pub fn mask_of(vertices: impl IntoIterator<Item = usize>) -> VertexSet {
    vertices.into_iter().fold(0, |m, v| m | bit(v))
}

fn full_mask(n: usize) -> VertexSet {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.n)?;
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate pairs collapse to one edge;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                value: n,
                cap: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u64; n];
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {a}-{b} has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        Ok(Self::from_adjacency(adj))
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, &nb) in adj.iter().enumerate() {
            for v in members(nb & !full_mask(u + 1)) {
                edges.push(Edge { u, v });
            }
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, []).expect("empty graph within capacity")
    }

    pub fn complete(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, pairs).expect("complete graph within capacity")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in increasing `(u, v)` order; the slice position is the edge index.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        if a == b || a >= self.n || b >= self.n {
            return None;
        }
        self.edges.binary_search(&Edge::new(a, b)).ok()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a] & bit(b) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertex_mask(&self) -> VertexSet {
        full_mask(self.n)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Number of edges with both endpoints in `set`.
    pub fn induced_edge_count(&self, set: VertexSet) -> usize {
        members(set)
            .map(|v| (self.adj[v] & set).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// `true` when no two members of `set` are adjacent.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        members(set).all(|v| self.adj[v] & set == 0)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reachable(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Vertices reachable from `start` inside `allowed` (which must contain `start`).
    pub fn reachable(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by the vertices not in `removed`.
    pub fn components_without(&self, removed: VertexSet) -> Vec<VertexSet> {
        let mut rest = self.vertex_mask() & !removed;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let comp = self.reachable(start, rest);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let pairs: Vec<_> = self.edges.iter().map(|e| (perm[e.u], perm[e.v])).collect();
        Graph::new(self.n, pairs).expect("permutation preserves simplicity")
    }

    /// Graph with the same vertices and only the edges for which `keep` holds.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(usize) -> bool) -> Graph {
        let pairs: Vec<_> = (0..self.edge_count())
            .filter(|&i| keep(i))
            .map(|i| (self.edges[i].u, self.edges[i].v))
            .collect();
        Graph::new(self.n, pairs).expect("subgraph of a valid graph")
    }

    /// Shortest path from `from` to `to` using only edges accepted by `allow`
    /// (by edge index). Returns the vertex sequence including both ends.
    pub fn shortest_path(
        &self,
        from: usize,
        to: usize,
        mut allow: impl FnMut(usize) -> bool,
    ) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.n];
        let mut queue = VecDeque::from([from]);
        prev[from] = from;
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for y in members(self.adj[x]) {
                if prev[y] == usize::MAX {
                    let idx = self.edge_index(x, y).expect("adjacent");
                    if allow(idx) {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
        }
        None
    }
}

/// A partition of vertices into blocks: each block sorted, blocks ordered by
/// their smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
    #[serde(skip)]
    block_of: Vec<usize>,
}

impl VertexPartition {
    /// Components of the graph on `n` vertices formed by `edges`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> VertexPartition {
        let mut uf = UnionFind::new(n);
        for e in edges {
            uf.union(e.u, e.v);
        }
        Self::from_union_find(&mut uf)
    }

    pub(crate) fn from_union_find(uf: &mut UnionFind) -> VertexPartition {
        let n = uf.len();
        let mut root_block = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![0; n];
        // Scanning in vertex order yields blocks sorted by minimum element.
        for (v, slot) in block_of.iter_mut().enumerate() {
            let r = uf.find(v);
            if root_block[r] == usize::MAX {
                root_block[r] = blocks.len();
                blocks.push(Vec::new());
            }
            *slot = root_block[r];
            blocks[root_block[r]].push(v);
        }
        VertexPartition { blocks, block_of }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block containing `v`.
    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }
}

pub fn connected_components(g: &Graph) -> VertexPartition {
    VertexPartition::from_edges(g.vertex_count(), g.edges().iter().copied())
}

/// All 3-cliques as sorted triples, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for e in g.edges() {
        let above = !full_mask(e.v + 1);
        for w in members(g.neighbors(e.u) & g.neighbors(e.v) & above) {
            out.push([e.u, e.v, w]);
        }
    }
    out
}

/// A graph together with the external names of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGraph {
    pub graph: Graph,
    pub names: Vec<String>,
}

impl NamedGraph {
    /// Vertices are named `0..n`.
    pub fn with_index_names(graph: Graph) -> NamedGraph {
        let names = (0..graph.vertex_count()).map(|v| v.to_string()).collect();
        NamedGraph { graph, names }
    }

    /// Builds a graph whose vertex `k` is `names[k]`.
    pub fn from_names(names: &[&str], edges: &[(&str, &str)]) -> Result<NamedGraph> {
        let lookup = |s: &str| {
            names
                .iter()
                .position(|n| *n == s)
                .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex {s:?}")))
        };
        let pairs = edges
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(NamedGraph {
            graph: Graph::new(names.len(), pairs)?,
            names: names.iter().map(|s| s.to_string()).collect(),
        })
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    /// Edge index of the edge between two named vertices.
    pub fn edge_between(&self, a: &str, b: &str) -> Option<usize> {
        self.graph.edge_index(self.index_of(a)?, self.index_of(b)?)
    }

    pub fn edge_label(&self, e: Edge) -> String {
        format!("{}{}", self.names[e.u], self.names[e.v])
    }
}
