//! Canonical codes for small graphs.
//!
//! Vertices are first split into cells by iterated degree refinement (an
//! isomorphism-invariant ordered partition); the code is then the
//! lexicographically smallest upper-triangle adjacency string over all
//! orderings that respect the cell order, found by branch and bound.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph, VertexSet};

pub const DEFAULT_CANON_CAP: usize = 10;

/// Byte string identifying an isomorphism class: the vertex count followed by
/// the canonical adjacency bits in graph6 column order, packed MSB first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0[0] as usize
    }

    pub fn from_hex(s: &str) -> Option<CanonicalCode> {
        let bytes = hex::decode(s).ok()?;
        let n = *bytes.first()? as usize;
        let expected = 1 + (n * n.saturating_sub(1) / 2).div_ceil(8);
        (bytes.len() == expected).then_some(CanonicalCode(bytes))
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    /// The canonically labeled representative of the class.
    pub fn to_graph(&self) -> Graph {
        let n = self.vertex_count();
        let mut pairs = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.0[1 + k / 8] >> (7 - k % 8) & 1 == 1 {
                    pairs.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(n, pairs).expect("code decodes to a simple graph")
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    canonical_form_capped(g, DEFAULT_CANON_CAP)
}

pub fn canonical_form_capped(g: &Graph, cap: usize) -> Result<CanonicalCode> {
    let perm = canonical_labeling_capped(g, cap)?;
    let n = g.vertex_count();
    // perm[position] = original vertex
    let mut bytes = vec![n as u8];
    bytes.resize(1 + (n * n.saturating_sub(1) / 2).div_ceil(8), 0);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.adjacent(perm[i], perm[j]) {
                bytes[1 + k / 8] |= 1 << (7 - k % 8);
            }
            k += 1;
        }
    }
    Ok(CanonicalCode(bytes))
}

/// Canonical vertex order: `result[p]` is the vertex placed at position `p`.
pub fn canonical_labeling_capped(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::Capacity {
            what: "canonical form vertex count",
            value: n,
            cap,
        });
    }
    let cells = refined_cells(g);
    let mut slot_cell = Vec::with_capacity(n);
    for (c, cell) in cells.iter().enumerate() {
        slot_cell.extend(std::iter::repeat_n(c, cell.count_ones() as usize));
    }
    let mut search = Search {
        g,
        cells: &cells,
        slot_cell: &slot_cell,
        perm: Vec::with_capacity(n),
        bits: Vec::new(),
        best_bits: None,
        best_perm: Vec::new(),
    };
    search.run(0, false);
    if n == 0 || search.best_perm.is_empty() {
        search.best_perm = (0..n).collect();
    }
    Ok(search.best_perm)
}

/// Iterated degree refinement. Returns cells in an invariant order.
fn refined_cells(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = members(g.neighbors(v)).map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        let count = distinct.len();
        color = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let mut cells = vec![0u64; classes];
    for v in 0..n {
        cells[color[v]] |= bit(v);
    }
    cells
}

struct Search<'a> {
    g: &'a Graph,
    cells: &'a [VertexSet],
    slot_cell: &'a [usize],
    perm: Vec<usize>,
    bits: Vec<bool>,
    best_bits: Option<Vec<bool>>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    /// `ahead` is true when the current prefix is already strictly smaller
    /// than the best code's prefix. Returns whether the best code was replaced,
    /// after which the best shares the caller's prefix.
    fn run(&mut self, pos: usize, mut ahead: bool) -> bool {
        let n = self.g.vertex_count();
        if pos == n {
            if ahead || self.best_bits.is_none() {
                self.best_bits = Some(self.bits.clone());
                self.best_perm = self.perm.clone();
                return true;
            }
            return false;
        }
        let used: VertexSet = self.perm.iter().fold(0, |m, &v| m | bit(v));
        let candidates = self.cells[self.slot_cell[pos]] & !used;
        let mut replaced = false;
        for v in members(candidates) {
            let start = self.bits.len();
            // None: equal to best so far; Some(true): smaller; Some(false): larger.
            let mut state = if ahead || self.best_bits.is_none() {
                Some(true)
            } else {
                None
            };
            for q in 0..pos {
                let b = self.g.adjacent(self.perm[q], v);
                self.bits.push(b);
                if state.is_none() {
                    let best = self.best_bits.as_ref().expect("compared only with a best");
                    if b != best[self.bits.len() - 1] {
                        state = Some(!b);
                    }
                }
            }
            if state != Some(false) {
                self.perm.push(v);
                if self.run(pos + 1, state == Some(true)) {
                    replaced = true;
                    ahead = false;
                }
                self.perm.pop();
            }
            self.bits.truncate(start);
        }
        replaced
    }
}
