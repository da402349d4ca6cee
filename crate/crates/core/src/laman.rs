//! Laman graphs: recognition, Henneberg moves, enumeration and the sweep
//! checking that every Laman graph that is not triangle-connected has a
//! NAC-coloring.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::canon::{canonical_form_capped, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{members, Graph};
use crate::nac::find_nac;
use crate::structure::delta_classes;

/// Largest vertex count accepted by enumeration and the sweep.
pub const DEFAULT_LAMAN_CAP: usize = 8;

/// (2,3)-pebble game: every edge must gather four pebbles on its endpoints
/// before insertion, and a Laman graph has exactly `2n - 3` edges.
pub fn is_laman(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 2 || g.edge_count() != 2 * n - 3 {
        return false;
    }
    let mut game = PebbleGame::new(n);
    g.edges().iter().all(|e| game.insert(e.u, e.v))
}

struct PebbleGame {
    pebbles: Vec<u8>,
    out: Vec<Vec<usize>>,
}

impl PebbleGame {
    fn new(n: usize) -> Self {
        PebbleGame {
            pebbles: vec![2; n],
            out: vec![Vec::new(); n],
        }
    }

    fn insert(&mut self, u: usize, v: usize) -> bool {
        while self.pebbles[u] < 2 && self.collect(u, v) {}
        while self.pebbles[v] < 2 && self.collect(v, u) {}
        if self.pebbles[u] + self.pebbles[v] < 4 {
            return false;
        }
        self.pebbles[u] -= 1;
        self.out[u].push(v);
        true
    }

    /// Moves one free pebble to `x` along a directed path avoiding `other`.
    fn collect(&mut self, x: usize, other: usize) -> bool {
        let n = self.pebbles.len();
        let mut parent = vec![usize::MAX; n];
        parent[x] = x;
        parent[other] = other;
        let mut stack = vec![x];
        let mut found = None;
        while let Some(a) = stack.pop() {
            if a != x && self.pebbles[a] > 0 {
                found = Some(a);
                break;
            }
            for &b in &self.out[a] {
                if parent[b] == usize::MAX {
                    parent[b] = a;
                    stack.push(b);
                }
            }
        }
        let Some(mut w) = found else {
            return false;
        };
        self.pebbles[w] -= 1;
        while w != x {
            let a = parent[w];
            let pos = self.out[a].iter().position(|&b| b == w).expect("path edge");
            self.out[a].swap_remove(pos);
            self.out[w].push(a);
            w = a;
        }
        self.pebbles[x] += 1;
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MoveKind {
    Ia,
    Ib,
    IIa,
    IIb,
    IIc,
}

/// A vertex addition. The new vertex is always `n`, the old vertex count.
/// Type I joins it to `u` and `w`; type II joins it to `u`, `u1`, `u2` and
/// deletes the edge `u1u2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HennebergMove {
    One { kind: MoveKind, u: usize, w: usize },
    Two { kind: MoveKind, u: usize, u1: usize, u2: usize },
}

impl HennebergMove {
    /// The type I move from `u`, `w`, with its kind read off `g`.
    pub fn one(g: &Graph, u: usize, w: usize) -> HennebergMove {
        let kind = if g.adjacent(u, w) { MoveKind::Ia } else { MoveKind::Ib };
        HennebergMove::One { kind, u, w }
    }

    /// The type II move, or `None` if `u1u2` is not an edge of `g`.
    pub fn two(g: &Graph, u: usize, u1: usize, u2: usize) -> Option<HennebergMove> {
        if !g.adjacent(u1, u2) {
            return None;
        }
        let kind = match g.adjacent(u, u1) as u8 + g.adjacent(u, u2) as u8 {
            0 => MoveKind::IIa,
            1 => MoveKind::IIb,
            _ => MoveKind::IIc,
        };
        Some(HennebergMove::Two { kind, u, u1, u2 })
    }

    pub fn kind(&self) -> MoveKind {
        match *self {
            HennebergMove::One { kind, .. } | HennebergMove::Two { kind, .. } => kind,
        }
    }
}

impl fmt::Display for HennebergMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HennebergMove::One { kind, u, w } => write!(f, "{kind:?}({u},{w})"),
            HennebergMove::Two { kind, u, u1, u2 } => write!(f, "{kind:?}({u};{u1}{u2})"),
        }
    }
}

pub fn apply_henneberg(g: &Graph, m: HennebergMove) -> Result<Graph> {
    let n = g.vertex_count();
    let check_range = |vs: &[usize]| -> Result<()> {
        if let Some(&v) = vs.iter().find(|&&v| v >= n) {
            return Err(Error::contract(format!("vertex {v} not in graph")));
        }
        Ok(())
    };
    let mut pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    match m {
        HennebergMove::One { kind, u, w } => {
            check_range(&[u, w])?;
            if u == w {
                return Err(Error::contract("type I move needs two distinct vertices"));
            }
            let expected = HennebergMove::one(g, u, w).kind();
            if kind != expected {
                return Err(Error::contract(format!(
                    "{kind:?} requested but the pair {u},{w} gives {expected:?}"
                )));
            }
            pairs.extend([(u, n), (w, n)]);
        }
        HennebergMove::Two { kind, u, u1, u2 } => {
            check_range(&[u, u1, u2])?;
            if u == u1 || u == u2 || u1 == u2 {
                return Err(Error::contract("type II move needs three distinct vertices"));
            }
            let actual = HennebergMove::two(g, u, u1, u2)
                .ok_or_else(|| Error::contract(format!("{u1}{u2} is not an edge")))?
                .kind();
            if kind != actual {
                return Err(Error::contract(format!(
                    "{kind:?} requested but the vertices give {actual:?}"
                )));
            }
            pairs.retain(|&p| p != (u1.min(u2), u1.max(u2)));
            pairs.extend([(u, n), (u1, n), (u2, n)]);
        }
    }
    let out = Graph::new(n + 1, pairs)?;
    debug_assert!(!is_laman(g) || is_laman(&out), "Henneberg move broke the Laman property");
    Ok(out)
}

/// Every Henneberg move applicable to `g`, type I pairs first.
pub fn henneberg_moves(g: &Graph) -> Vec<HennebergMove> {
    let n = g.vertex_count();
    let mut moves = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            moves.push(HennebergMove::one(g, u, w));
        }
    }
    for e in g.edges() {
        for u in (0..n).filter(|&u| !e.touches(u)) {
            moves.extend(HennebergMove::two(g, u, e.u, e.v));
        }
    }
    moves
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Capacity {
            what: "Laman vertex count",
            value: n,
            cap,
        });
    }
    Ok(())
}

/// Isomorphism classes on one more vertex, reached by all moves from `level`.
pub fn next_level(level: &[CanonicalCode]) -> Vec<CanonicalCode> {
    let found: BTreeSet<CanonicalCode> = level
        .par_iter()
        .flat_map_iter(|code| {
            let g = code.to_graph();
            let cap = g.vertex_count() + 1;
            henneberg_moves(&g)
                .into_iter()
                .map(move |m| {
                    let h = apply_henneberg(&g, m).expect("generated move is valid");
                    canonical_form_capped(&h, cap).expect("within cap")
                })
                .collect::<Vec<_>>()
        })
        .collect();
    found.into_iter().collect()
}

/// Canonical codes of all Laman graphs on `n` vertices, in code order.
pub fn enumerate_laman(n: usize) -> Result<Vec<CanonicalCode>> {
    enumerate_laman_capped(n, DEFAULT_LAMAN_CAP)
}

pub fn enumerate_laman_capped(n: usize, cap: usize) -> Result<Vec<CanonicalCode>> {
    check_cap(n, cap)?;
    if n < 2 {
        return Err(Error::contract("Laman graphs need at least two vertices"));
    }
    let edge = Graph::new(2, [(0, 1)]).expect("single edge");
    let mut level = vec![canonical_form_capped(&edge, 2)?];
    for _ in 2..n {
        level = next_level(&level);
    }
    Ok(level)
}

pub fn laman_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_laman(n)?.iter().map(CanonicalCode::to_graph).collect())
}

/// Result of checking the problematic-graph conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProblematicAnalysis {
    pub problematic: bool,
    pub min_degree_ok: bool,
    pub degree_three_ok: bool,
    pub all_in_triangles: bool,
    /// Degree-3 vertices with two or more adjacent neighbor pairs, where
    /// "exactly two neighbors are connected" is open to reading.
    pub ambiguous_vertices: Vec<usize>,
}

/// Minimum degree 3; each degree-3 vertex has exactly one adjacent pair of
/// neighbors, both of degree at least 4; every vertex lies in a triangle.
pub fn problematic_analysis(g: &Graph) -> Result<ProblematicAnalysis> {
    if !is_laman(g) {
        return Err(Error::contract("problematic-graph test needs a Laman graph"));
    }
    let n = g.vertex_count();
    let min_degree_ok = (0..n).all(|v| g.degree(v) >= 3);
    let mut degree_three_ok = true;
    let mut ambiguous_vertices = Vec::new();
    for v in (0..n).filter(|&v| g.degree(v) == 3) {
        let nb: Vec<usize> = members(g.neighbors(v)).collect();
        let joined: Vec<(usize, usize)> = [(0, 1), (0, 2), (1, 2)]
            .into_iter()
            .map(|(a, b)| (nb[a], nb[b]))
            .filter(|&(a, b)| g.adjacent(a, b))
            .collect();
        match joined[..] {
            [(a, b)] => degree_three_ok &= g.degree(a) >= 4 && g.degree(b) >= 4,
            [] => degree_three_ok = false,
            _ => {
                degree_three_ok = false;
                ambiguous_vertices.push(v);
            }
        }
    }
    let all_in_triangles =
        (0..n).all(|v| members(g.neighbors(v)).any(|w| g.neighbors(v) & g.neighbors(w) != 0));
    Ok(ProblematicAnalysis {
        problematic: min_degree_ok && degree_three_ok && all_in_triangles,
        min_degree_ok,
        degree_three_ok,
        all_in_triangles,
        ambiguous_vertices,
    })
}

pub fn is_problematic(g: &Graph) -> Result<bool> {
    Ok(problematic_analysis(g)?.problematic)
}

/// Counts for one vertex count of the sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LevelStats {
    pub n: usize,
    pub total: usize,
    pub delta_connected: usize,
    pub with_nac: usize,
    pub problematic: usize,
    pub ambiguous: usize,
    /// Triangle-connected graphs that nevertheless have a NAC-coloring;
    /// always zero unless the search is wrong.
    pub inconsistent: usize,
    /// SHA-256 over the newline-joined hex codes of the level.
    pub hash: String,
    pub counterexamples: Vec<String>,
}

impl LevelStats {
    pub fn balanced(&self) -> bool {
        self.delta_connected + self.with_nac == self.total
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureReport {
    pub schema: &'static str,
    pub max_n: usize,
    pub cap: usize,
    pub levels: Vec<LevelStats>,
    pub counterexamples: Vec<String>,
    /// Largest vertex count restored from the checkpoint.
    pub resumed_from: Option<usize>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

const CHECKPOINT_HEADER: &str = "nac-rigidity-checkpoint/1";

pub fn verify_conjecture(max_n: usize, checkpoint: Option<&Path>) -> Result<ConjectureReport> {
    verify_conjecture_capped(max_n, checkpoint, DEFAULT_LAMAN_CAP)
}

pub fn verify_conjecture_capped(
    max_n: usize,
    checkpoint: Option<&Path>,
    cap: usize,
) -> Result<ConjectureReport> {
    check_cap(max_n, cap)?;
    if max_n < 3 {
        return Err(Error::contract("the sweep starts at three vertices"));
    }
    let stored = match checkpoint {
        Some(path) if path.exists() => read_checkpoint(path)?,
        _ => Vec::new(),
    };
    let mut levels = Vec::new();
    let mut resumed_from = None;
    let edge = Graph::new(2, [(0, 1)]).expect("single edge");
    let mut codes = vec![canonical_form_capped(&edge, 2)?];
    for n in 3..=max_n {
        codes = next_level(&codes);
        let hash = level_hash(&codes);
        if let Some(saved) = stored.iter().find(|s| s.n == n) {
            let path = checkpoint.expect("stored levels come from a file");
            if saved.hash != hash {
                return Err(checkpoint_error(path, format!("hash for n={n} does not match the enumeration")));
            }
            if saved.total != codes.len() || !saved.balanced() {
                return Err(checkpoint_error(path, format!("counts for n={n} do not match the enumeration")));
            }
            levels.push(saved.clone());
            resumed_from = Some(n);
            continue;
        }
        levels.push(sweep_level(n, &codes, hash));
        if let Some(path) = checkpoint {
            let mut merged: Vec<LevelStats> = stored.iter().filter(|s| s.n > n).cloned().collect();
            merged.extend(levels.iter().cloned());
            merged.sort_by_key(|s| s.n);
            write_checkpoint(path, &merged)?;
        }
    }
    let counterexamples = levels
        .iter()
        .flat_map(|l| l.counterexamples.iter().cloned())
        .collect();
    Ok(ConjectureReport {
        schema: crate::report::SCHEMA,
        max_n,
        cap,
        levels,
        counterexamples,
        resumed_from,
    })
}

fn sweep_level(n: usize, codes: &[CanonicalCode], hash: String) -> LevelStats {
    struct Row {
        delta: bool,
        nac: bool,
        problematic: bool,
        ambiguous: bool,
    }
    let rows: Vec<Row> = codes
        .par_iter()
        .map(|code| {
            let g = code.to_graph();
            let analysis = problematic_analysis(&g).expect("enumerated graphs are Laman");
            Row {
                delta: delta_classes(&g).is_delta_connected(),
                nac: find_nac(&g).is_some(),
                problematic: analysis.problematic,
                ambiguous: !analysis.ambiguous_vertices.is_empty(),
            }
        })
        .collect();
    let count = |f: &dyn Fn(&Row) -> bool| rows.iter().filter(|r| f(r)).count();
    LevelStats {
        n,
        total: codes.len(),
        delta_connected: count(&|r| r.delta),
        with_nac: count(&|r| r.nac),
        problematic: count(&|r| r.problematic),
        ambiguous: count(&|r| r.ambiguous),
        inconsistent: count(&|r| r.delta && r.nac),
        hash,
        counterexamples: codes
            .iter()
            .zip(&rows)
            .filter(|(_, r)| !r.delta && !r.nac)
            .map(|(c, _)| c.to_hex())
            .collect(),
    }
}

pub fn level_hash(codes: &[CanonicalCode]) -> String {
    let mut h = Sha256::new();
    for (k, c) in codes.iter().enumerate() {
        if k > 0 {
            h.update(b"\n");
        }
        h.update(c.to_hex().as_bytes());
    }
    hex::encode(h.finalize())
}

fn checkpoint_error(path: &Path, message: impl Into<String>) -> Error {
    Error::Checkpoint {
        path: path.display().to_string(),
        message: message.into(),
    }
}

fn format_level(l: &LevelStats) -> String {
    let ces = if l.counterexamples.is_empty() {
        "-".to_string()
    } else {
        l.counterexamples.join(",")
    };
    format!(
        "n={} total={} delta={} nac={} problematic={} ambiguous={} inconsistent={} hash={} counterexamples={}",
        l.n,
        l.total,
        l.delta_connected,
        l.with_nac,
        l.problematic,
        l.ambiguous,
        l.inconsistent,
        l.hash,
        ces
    )
}

fn parse_level(line: &str) -> std::result::Result<LevelStats, String> {
    let mut fields = std::collections::HashMap::new();
    for tok in line.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| format!("malformed field {tok:?}"))?;
        if fields.insert(k, v).is_some() {
            return Err(format!("duplicate field {k}"));
        }
    }
    let get = |k: &str| fields.get(k).copied().ok_or_else(|| format!("missing field {k}"));
    let num = |k: &str| -> std::result::Result<usize, String> {
        get(k)?.parse().map_err(|_| format!("field {k} is not a count"))
    };
    let hash = get("hash")?;
    if hash.len() != 64 || !hash.bytes().all(|b| b.is_ascii_hexdigit()) {
        return Err("hash is not a SHA-256 hex digest".into());
    }
    let ces = get("counterexamples")?;
    let counterexamples: Vec<String> = if ces == "-" {
        Vec::new()
    } else {
        ces.split(',').map(str::to_string).collect()
    };
    if counterexamples.iter().any(|c| CanonicalCode::from_hex(c).is_none()) {
        return Err("counterexample is not a canonical code".into());
    }
    if fields.len() != 9 {
        return Err("unexpected fields".into());
    }
    Ok(LevelStats {
        n: num("n")?,
        total: num("total")?,
        delta_connected: num("delta")?,
        with_nac: num("nac")?,
        problematic: num("problematic")?,
        ambiguous: num("ambiguous")?,
        inconsistent: num("inconsistent")?,
        hash: hash.to_string(),
        counterexamples,
    })
}

pub fn read_checkpoint(path: &Path) -> Result<Vec<LevelStats>> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    if lines.next() != Some(CHECKPOINT_HEADER) {
        return Err(checkpoint_error(path, "missing or unknown header"));
    }
    let mut levels = Vec::new();
    for (k, line) in lines.enumerate() {
        let level =
            parse_level(line).map_err(|m| checkpoint_error(path, format!("line {}: {m}", k + 2)))?;
        if level.n != 3 + k {
            return Err(checkpoint_error(
                path,
                format!("line {}: expected n={}, found n={}", k + 2, 3 + k, level.n),
            ));
        }
        levels.push(level);
    }
    Ok(levels)
}

pub fn write_checkpoint(path: &Path, levels: &[LevelStats]) -> Result<()> {
    let mut text = String::from(CHECKPOINT_HEADER);
    text.push('\n');
    for l in levels {
        text.push_str(&format_level(l));
        text.push('\n');
    }
    let mut tmp = PathBuf::from(path);
    tmp.as_mut_os_string().push(".tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn laman_fixtures() {
        assert!(is_laman(&fixtures::get("PRISM").graph));
        assert!(is_laman(&fixtures::get("K33").graph));
        assert!(is_laman(&fixtures::get("FIG12").graph));
        assert!(!is_laman(&Graph::complete(4)));
        assert!(!is_laman(&fixtures::get("C4").graph));
        // right count, but K4 plus a pendant path is overbraced
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.edge_count(), 7);
        assert!(!is_laman(&g));
    }

    #[test]
    fn moves() {
        let edge = Graph::new(2, [(0, 1)]).unwrap();
        let ia = HennebergMove::one(&edge, 0, 1);
        assert_eq!(ia.kind(), MoveKind::Ia);
        let tri = apply_henneberg(&edge, ia).unwrap();
        assert_eq!(tri, Graph::complete(3));
        let ib = HennebergMove::One {
            kind: MoveKind::Ib,
            u: 0,
            w: 1,
        };
        assert!(matches!(apply_henneberg(&tri, ib), Err(Error::Contract(_))));
        let iic = HennebergMove::Two {
            kind: MoveKind::IIc,
            u: 0,
            u1: 1,
            u2: 2,
        };
        let k4_minus = apply_henneberg(&tri, iic).unwrap();
        assert!(is_laman(&k4_minus));
        let bad = HennebergMove::Two {
            kind: MoveKind::IIc,
            u: 3,
            u1: 1,
            u2: 2,
        };
        // 3 is joined to 1 and 2 but the edge 12 was removed
        assert!(matches!(apply_henneberg(&k4_minus, bad), Err(Error::Contract(_))));
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (3..=6).map(|n| enumerate_laman(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 13]);
        assert!(matches!(enumerate_laman(9), Err(Error::Capacity { .. })));
    }

    #[test]
    fn problematic() {
        assert!(is_problematic(&fixtures::get("FIG12").graph).unwrap());
        assert!(!is_problematic(&fixtures::get("PRISM").graph).unwrap());
        assert!(!is_problematic(&Graph::complete(3)).unwrap());
        assert!(is_problematic(&Graph::complete(4)).is_err());
    }

    #[test]
    fn checkpoint_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck");
        let first = verify_conjecture(5, Some(&path)).unwrap();
        assert_eq!(first.resumed_from, None);
        assert_eq!(read_checkpoint(&path).unwrap().len(), 3);
        let second = verify_conjecture(6, Some(&path)).unwrap();
        assert_eq!(second.resumed_from, Some(5));
        assert_eq!(second.levels[..3], first.levels[..]);
        fs::write(&path, "garbage\n").unwrap();
        assert!(matches!(
            verify_conjecture(6, Some(&path)),
            Err(Error::Checkpoint { .. })
        ));
    }

    #[test]
    fn tampered_hash_detected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck");
        verify_conjecture(4, Some(&path)).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let line = text.lines().nth(2).unwrap();
        let hash = line.split("hash=").nth(1).unwrap().split(' ').next().unwrap();
        let flipped = format!("{}{}", if hash.starts_with('0') { '1' } else { '0' }, &hash[1..]);
        fs::write(&path, text.replace(hash, &flipped)).unwrap();
        assert!(matches!(
            verify_conjecture(4, Some(&path)),
            Err(Error::Checkpoint { .. })
        ));
    }
}
