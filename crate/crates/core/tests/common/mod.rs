//! Independent reference implementations used as test oracles.

#![allow(dead_code)]

use std::collections::BTreeSet;

use nacrig::canon::{canonical_form_capped, CanonicalCode};
use nacrig::{Color, EdgeColoring, Graph};

/// All simple cycles of `g`, each as a bitmask over edge indices.
pub fn cycles(g: &Graph) -> Vec<u64> {
    assert!(g.edge_count() <= 64);
    let n = g.vertex_count();
    let mut found = BTreeSet::new();
    fn walk(g: &Graph, start: usize, at: usize, used_v: u64, used_e: u64, len: usize, out: &mut BTreeSet<u64>) {
        for w in 0..g.vertex_count() {
            if !g.adjacent(at, w) {
                continue;
            }
            let e = g.edge_index(at, w).unwrap();
            if w == start && len >= 2 && used_e & (1 << e) == 0 {
                out.insert(used_e | 1 << e);
            } else if w > start && used_v & (1 << w) == 0 {
                walk(g, start, w, used_v | 1 << w, used_e | 1 << e, len + 1, out);
            }
        }
    }
    for s in 0..n {
        walk(g, s, s, 1 << s, 0, 0, &mut found);
    }
    found.into_iter().collect()
}

/// NAC by definition: both colors used and no cycle with exactly one edge
/// of the other color.
pub fn brute_is_nac(m: usize, cycles: &[u64], red: u64) -> bool {
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    if red == 0 || red == all {
        return false;
    }
    cycles.iter().all(|&c| {
        let r = (c & red).count_ones();
        let len = c.count_ones();
        r != 1 && r + 1 != len
    })
}

pub fn red_mask(c: &EdgeColoring) -> u64 {
    (0..c.len()).filter(|&i| c.color(i) == Color::Red).fold(0, |m, i| m | 1 << i)
}

pub fn coloring_from_mask(m: usize, red: u64) -> EdgeColoring {
    EdgeColoring::new((0..m).map(|i| if red >> i & 1 == 1 { Color::Red } else { Color::Blue }).collect())
}

/// Red masks of all NAC-colorings, by filtering every coloring.
pub fn brute_nac_masks(g: &Graph) -> BTreeSet<u64> {
    let m = g.edge_count();
    assert!(m <= 20, "brute force over 2^{m} colorings");
    let cyc = cycles(g);
    (0..1u64 << m).filter(|&red| brute_is_nac(m, &cyc, red)).collect()
}

/// Laman by definition: 2n-3 edges and every vertex subset of size >= 2
/// induces at most 2k-3 edges.
pub fn brute_is_laman(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 2 || g.edge_count() != 2 * n - 3 {
        return false;
    }
    (0..1u64 << n).all(|s| {
        let k = s.count_ones() as usize;
        k < 2 || g.induced_edge_count(s) <= 2 * k - 3
    })
}

/// Isomorphism by trying every vertex permutation.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if g.edges().iter().all(|e| h.adjacent(perm[e.u], perm[e.v])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let k = pairs.len();
    (0..1u64 << k).map(move |mask| {
        Graph::new(n, (0..k).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b])).unwrap()
    })
}

/// One labeled representative per isomorphism class on `n` vertices.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let mut seen: BTreeSet<CanonicalCode> = BTreeSet::new();
    all_graphs(n)
        .filter(|g| seen.insert(canonical_form_capped(g, n.max(1)).unwrap()))
        .collect()
}

/// Connected graphs with exactly `m` edges, one per isomorphism class,
/// grown edge by edge from a single edge.
pub fn connected_graphs_by_edges(max_m: usize) -> Vec<Vec<Graph>> {
    let edge = Graph::new(2, [(0, 1)]).unwrap();
    let mut levels = vec![Vec::new(), vec![edge]];
    for _ in 2..=max_m {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in levels.last().unwrap() {
            let n = g.vertex_count();
            let pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
            let mut grow = |h: Graph| {
                if seen.insert(canonical_form_capped(&h, 16).unwrap()) {
                    next.push(h);
                }
            };
            for u in 0..n {
                for v in u + 1..n {
                    if !g.adjacent(u, v) {
                        let mut p = pairs.clone();
                        p.push((u, v));
                        grow(Graph::new(n, p).unwrap());
                    }
                }
                let mut p = pairs.clone();
                p.push((u, n));
                grow(Graph::new(n + 1, p).unwrap());
            }
        }
        levels.push(next);
    }
    levels
}

/// Triangle classes by repeated merging until nothing changes; each class
/// is a sorted list of edge indices, classes sorted.
pub fn closure_classes(g: &Graph) -> Vec<Vec<usize>> {
    let m = g.edge_count();
    let mut label: Vec<usize> = (0..m).collect();
    loop {
        let mut changed = false;
        for a in 0..g.vertex_count() {
            for b in a + 1..g.vertex_count() {
                for c in b + 1..g.vertex_count() {
                    let ids = [(a, b), (a, c), (b, c)].map(|(x, y)| g.edge_index(x, y));
                    let [Some(x), Some(y), Some(z)] = ids else { continue };
                    let low = label[x].min(label[y]).min(label[z]);
                    for old in [label[x], label[y], label[z]] {
                        if old != low {
                            changed = true;
                            for l in label.iter_mut() {
                                if *l == old {
                                    *l = low;
                                }
                            }
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for l in BTreeSet::from_iter(label.iter().copied()) {
        classes.push((0..m).filter(|&e| label[e] == l).collect());
    }
    classes.sort();
    classes
}

/// Random graph on `n` vertices with `m` distinct edges.
pub fn random_graph(rng: &mut impl rand::Rng, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    rand::seq::SliceRandom::shuffle(pairs.as_mut_slice(), rng);
    pairs.truncate(m);
    Graph::new(n, pairs).unwrap()
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected_graph(rng: &mut impl rand::Rng, n: usize, extra: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|p| !pairs.contains(p))
        .collect();
    rand::seq::SliceRandom::shuffle(rest.as_mut_slice(), rng);
    pairs.extend(rest.into_iter().take(extra));
    let perm: Vec<usize> = {
        let mut p: Vec<usize> = (0..n).collect();
        rand::seq::SliceRandom::shuffle(p.as_mut_slice(), rng);
        p
    };
    Graph::new(n, pairs).unwrap().permute(&perm)
}
