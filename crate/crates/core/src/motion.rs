//! Flexible labelings and their motions built from NAC-colorings.
//!
//! A NAC-coloring places each vertex in a cell `(i, j)` given by its red
//! component `R_i` and blue component `B_j`. Red edges stay inside one red
//! component and rotate with the parameter; blue edges keep their direction.
//! Indices are 0-based here and 1-based in the placement formulas.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, NamedGraph, VertexPartition};
use crate::nac::{Color, EdgeColoring, NacColoring};

/// Tolerance on edge lengths along a constructed motion.
pub const LENGTH_TOLERANCE: f64 = 1e-9;
/// Minimum spread of some non-edge distance for a motion to count as a flex.
pub const FLEX_TOLERANCE: f64 = 1e-6;
/// Angular tolerance, in radians, when classifying edge directions.
pub const DIRECTION_TOLERANCE: f64 = 1e-6;
pub const DEFAULT_FRAMES: usize = 36;
/// Minimum number of frames accepted by [`recover_coloring`].
pub const MIN_RECOVERY_FRAMES: usize = 8;
/// Perturbation of the default zigzag vectors.
pub const ZIGZAG_EPSILON: f64 = 0.125;

/// Cell of every vertex in the red/blue component grid.
#[derive(Clone, Debug, PartialEq)]
pub struct GridAssignment {
    graph: Graph,
    coloring: EdgeColoring,
    red: VertexPartition,
    blue: VertexPartition,
    cells: Vec<(usize, usize)>,
}

impl GridAssignment {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &EdgeColoring {
        &self.coloring
    }

    pub fn red_components(&self) -> &VertexPartition {
        &self.red
    }

    pub fn blue_components(&self) -> &VertexPartition {
        &self.blue
    }

    /// `(i, j)` with `v` in red component `i` and blue component `j`.
    pub fn cell(&self, v: usize) -> (usize, usize) {
        self.cells[v]
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }
}

pub fn component_grid(g: &Graph, c: &NacColoring) -> GridAssignment {
    let red = c.red_components().clone();
    let blue = c.blue_components().clone();
    let cells: Vec<(usize, usize)> = (0..g.vertex_count())
        .map(|v| (red.block_of(v), blue.block_of(v)))
        .collect();
    debug_assert!(g.edges().iter().all(|e| cells[e.u] != cells[e.v]));
    GridAssignment {
        graph: g.clone(),
        coloring: c.coloring().clone(),
        red,
        blue,
        cells,
    }
}

/// Every cell holds at most one vertex, so generic realizations are injective.
pub fn injective_flex(ga: &GridAssignment) -> bool {
    let mut seen = ga.cells.clone();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

/// Edge lengths, indexed like the graph's edges.
#[derive(Clone, Debug, PartialEq)]
pub struct Labeling {
    lengths: Vec<f64>,
}

impl Labeling {
    pub fn new(lengths: Vec<f64>) -> Result<Labeling> {
        if let Some(i) = lengths.iter().position(|&l| !(l > 0.0 && l.is_finite())) {
            return Err(Error::contract(format!("edge {i} has non-positive length")));
        }
        Ok(Labeling { lengths })
    }

    pub fn length(&self, edge: usize) -> f64 {
        self.lengths[edge]
    }

    pub fn lengths(&self) -> &[f64] {
        &self.lengths
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Construction {
    Grid,
    Zigzag,
    ThreeD,
    External,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Frame {
    pub alpha: f64,
    pub positions: Vec<Vec<f64>>,
}

/// A labeling with a sampled one-parameter family of compatible realizations.
#[derive(Clone, Debug, PartialEq)]
pub struct Motion {
    pub dimension: usize,
    pub graph: Graph,
    pub labeling: Labeling,
    pub frames: Vec<Frame>,
    pub construction: Construction,
    /// The generating coloring, when there is one.
    pub coloring: Option<EdgeColoring>,
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

impl Motion {
    /// Largest `|distance - length|` over all edges and frames.
    pub fn max_length_error(&self) -> f64 {
        self.frames
            .iter()
            .flat_map(|f| {
                self.graph.edges().iter().enumerate().map(move |(i, e)| {
                    (distance(&f.positions[e.u], &f.positions[e.v]) - self.labeling.length(i)).abs()
                })
            })
            .fold(0.0, f64::max)
    }

    /// Spread (max minus min over frames) of the distance between `u` and `v`.
    pub fn distance_spread(&self, u: usize, v: usize) -> f64 {
        let ds = self
            .frames
            .iter()
            .map(|f| distance(&f.positions[u], &f.positions[v]));
        let (lo, hi) = ds.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), d| {
            (lo.min(d), hi.max(d))
        });
        if lo.is_finite() {
            hi - lo
        } else {
            0.0
        }
    }

    /// The non-adjacent pair whose distance varies most, with its spread.
    pub fn most_varying_non_edge(&self) -> Option<(usize, usize, f64)> {
        let n = self.graph.vertex_count();
        let mut best: Option<(usize, usize, f64)> = None;
        for u in 0..n {
            for v in u + 1..n {
                if self.graph.adjacent(u, v) {
                    continue;
                }
                let s = self.distance_spread(u, v);
                if best.is_none_or(|(_, _, b)| s > b) {
                    best = Some((u, v, s));
                }
            }
        }
        best
    }

    /// Lengths conserved within [`LENGTH_TOLERANCE`] and some non-edge
    /// distance varying by more than [`FLEX_TOLERANCE`].
    pub fn check(&self) -> Result<()> {
        let err = self.max_length_error();
        if err >= LENGTH_TOLERANCE {
            return Err(Error::contract(format!("edge length drifts by {err:e}")));
        }
        match self.most_varying_non_edge() {
            Some((_, _, s)) if s > FLEX_TOLERANCE => Ok(()),
            _ => Err(Error::contract("no non-edge distance varies")),
        }
    }

    /// Frame `k` moved so that the first vertex of edge 0 is at the origin
    /// and the edge points along the positive x-axis. 2D only.
    pub fn pinned_frame(&self, k: usize) -> Result<Vec<[f64; 2]>> {
        if self.dimension != 2 {
            return Err(Error::contract("pinning is defined for planar motions"));
        }
        let e = *self
            .graph
            .edges()
            .first()
            .ok_or_else(|| Error::contract("pinning needs an edge"))?;
        let pts: Vec<[f64; 2]> = self.frames[k].positions.iter().map(|p| [p[0], p[1]]).collect();
        Ok(pin(&pts, e.u, e.v))
    }

    pub fn to_document(&self, names: &NamedGraph) -> MotionDocument {
        MotionDocument {
            schema: crate::report::SCHEMA,
            dimension: self.dimension,
            labeling: self
                .graph
                .edges()
                .iter()
                .enumerate()
                .map(|(i, e)| LabeledEdge {
                    u: names.name(e.u).to_string(),
                    v: names.name(e.v).to_string(),
                    length: self.labeling.length(i),
                })
                .collect(),
            frames: self.frames.clone(),
            construction: self.construction,
        }
    }
}

/// Translates `pts[a]` to the origin and rotates `pts[b]` onto the positive
/// x-axis.
pub fn pin(pts: &[[f64; 2]], a: usize, b: usize) -> Vec<[f64; 2]> {
    let o = pts[a];
    let d = [pts[b][0] - o[0], pts[b][1] - o[1]];
    let theta = d[1].atan2(d[0]);
    let (s, c) = (-theta).sin_cos();
    pts.iter()
        .map(|p| {
            let (x, y) = (p[0] - o[0], p[1] - o[1]);
            [c * x - s * y, s * x + c * y]
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LabeledEdge {
    pub u: String,
    pub v: String,
    pub length: f64,
}

/// JSON form of a motion.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MotionDocument {
    pub schema: &'static str,
    pub dimension: usize,
    pub labeling: Vec<LabeledEdge>,
    pub frames: Vec<Frame>,
    pub construction: Construction,
}

/// `count` equally spaced parameters `k * 2pi / count`.
pub fn uniform_alphas(count: usize) -> Vec<f64> {
    (0..count).map(|k| k as f64 * TAU / count as f64).collect()
}

fn check_alphas(alphas: &[f64]) -> Result<()> {
    if alphas.len() < 2 {
        return Err(Error::contract("a motion needs at least two frames"));
    }
    if let Some(a) = alphas.iter().find(|a| !(0.0..TAU).contains(*a)) {
        return Err(Error::contract(format!("alpha {a} outside [0, 2pi)")));
    }
    Ok(())
}

fn build_frames(alphas: &[f64], place: impl Fn(f64) -> Vec<Vec<f64>> + Sync) -> Vec<Frame> {
    alphas
        .par_iter()
        .map(|&alpha| Frame {
            alpha,
            positions: place(alpha),
        })
        .collect()
}

/// `rho(v) = i (1,0) + j (cos a, sin a)` with 1-based cell `(i, j)`.
/// Red edges get length `|j - l|`, blue edges `|i - k|`.
pub fn grid_motion(ga: &GridAssignment, alphas: &[f64]) -> Result<Motion> {
    check_alphas(alphas)?;
    let g = &ga.graph;
    let lengths = g
        .edges()
        .iter()
        .enumerate()
        .map(|(idx, e)| {
            let ((i, j), (k, l)) = (ga.cell(e.u), ga.cell(e.v));
            match ga.coloring.color(idx) {
                Color::Red => j.abs_diff(l) as f64,
                Color::Blue => i.abs_diff(k) as f64,
            }
        })
        .collect();
    let frames = build_frames(alphas, |alpha| {
        let (s, c) = alpha.sin_cos();
        ga.cells
            .iter()
            .map(|&(i, j)| {
                let (i, j) = ((i + 1) as f64, (j + 1) as f64);
                vec![i + j * c, j * s]
            })
            .collect()
    });
    Ok(Motion {
        dimension: 2,
        graph: g.clone(),
        labeling: Labeling::new(lengths)?,
        frames,
        construction: Construction::Grid,
        coloring: Some(ga.coloring.clone()),
    })
}

/// Vectors `a_j` (one per blue component) and `b_i` (one per red component),
/// each family pairwise distinct.
#[derive(Clone, Debug, PartialEq)]
pub struct ZigzagData {
    a: Vec<[f64; 2]>,
    b: Vec<[f64; 2]>,
}

impl ZigzagData {
    pub fn new(a: Vec<[f64; 2]>, b: Vec<[f64; 2]>) -> Result<ZigzagData> {
        for (name, family) in [("a", &a), ("b", &b)] {
            for (x, p) in family.iter().enumerate() {
                if let Some(y) = family[x + 1..].iter().position(|q| q == p) {
                    return Err(Error::contract(format!(
                        "zigzag vectors {name}{} and {name}{} coincide",
                        x + 1,
                        x + 2 + y
                    )));
                }
            }
        }
        Ok(ZigzagData { a, b })
    }

    /// `a_j = (j^2 eps, j)` and `b_i = (i, i^2 eps)`, 1-based.
    pub fn default_for(ga: &GridAssignment) -> ZigzagData {
        let sq = |k: usize| ((k + 1) * (k + 1)) as f64 * ZIGZAG_EPSILON;
        ZigzagData {
            a: (0..ga.blue.len()).map(|j| [sq(j), (j + 1) as f64]).collect(),
            b: (0..ga.red.len()).map(|i| [(i + 1) as f64, sq(i)]).collect(),
        }
    }

    pub fn a(&self) -> &[[f64; 2]] {
        &self.a
    }

    pub fn b(&self) -> &[[f64; 2]] {
        &self.b
    }
}

/// `rho(v) = Rot(a) a_j + b_i` with `Rot(a) = [[cos, sin], [-sin, cos]]`.
/// Red edges get length `|a_j - a_l|`, blue edges `|b_i - b_k|`.
pub fn zigzag_motion(ga: &GridAssignment, z: &ZigzagData, alphas: &[f64]) -> Result<Motion> {
    check_alphas(alphas)?;
    if z.a.len() != ga.blue.len() || z.b.len() != ga.red.len() {
        return Err(Error::contract(format!(
            "zigzag data has {} a- and {} b-vectors for {} blue and {} red components",
            z.a.len(),
            z.b.len(),
            ga.blue.len(),
            ga.red.len()
        )));
    }
    let g = &ga.graph;
    let lengths = g
        .edges()
        .iter()
        .enumerate()
        .map(|(idx, e)| {
            let ((i, j), (k, l)) = (ga.cell(e.u), ga.cell(e.v));
            match ga.coloring.color(idx) {
                Color::Red => distance(&z.a[j], &z.a[l]),
                Color::Blue => distance(&z.b[i], &z.b[k]),
            }
        })
        .collect();
    let frames = build_frames(alphas, |alpha| {
        let (s, c) = alpha.sin_cos();
        ga.cells
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (z.a[j], z.b[i]);
                vec![c * a[0] + s * a[1] + b[0], -s * a[0] + c * a[1] + b[1]]
            })
            .collect()
    });
    Ok(Motion {
        dimension: 2,
        graph: g.clone(),
        labeling: Labeling::new(lengths)?,
        frames,
        construction: Construction::Zigzag,
        coloring: Some(ga.coloring.clone()),
    })
}

fn wrap_angle(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Reads the coloring back off a planar motion: an edge whose direction is
/// constant is blue, one whose direction turns by `+-(alpha_k - alpha_0)` in
/// every frame is red. Anything else is a classification error.
pub fn recover_coloring(m: &Motion) -> Result<EdgeColoring> {
    if m.dimension != 2 {
        return Err(Error::contract("coloring recovery needs a planar motion"));
    }
    if m.frames.len() < MIN_RECOVERY_FRAMES {
        return Err(Error::contract(format!(
            "coloring recovery needs at least {MIN_RECOVERY_FRAMES} frames, got {}",
            m.frames.len()
        )));
    }
    let f0 = &m.frames[0];
    let mut colors = Vec::with_capacity(m.graph.edge_count());
    for e in m.graph.edges() {
        let dir = |f: &Frame| {
            let (p, q) = (&f.positions[e.u], &f.positions[e.v]);
            (q[1] - p[1]).atan2(q[0] - p[0])
        };
        let theta0 = dir(f0);
        let turns: Vec<(f64, f64)> = m.frames[1..]
            .iter()
            .map(|f| (wrap_angle(dir(f) - theta0), f.alpha - f0.alpha))
            .collect();
        let fits = |sign: f64| {
            turns
                .iter()
                .all(|&(t, da)| wrap_angle(t - sign * da).abs() < DIRECTION_TOLERANCE)
        };
        let color = if fits(0.0) {
            Color::Blue
        } else if fits(1.0) || fits(-1.0) {
            Color::Red
        } else {
            let worst = turns.iter().map(|t| t.0.abs()).fold(0.0, f64::max);
            return Err(Error::Classification {
                u: e.u,
                v: e.v,
                reason: format!("direction neither constant nor turning with alpha (max turn {worst:.3e})"),
            });
        };
        colors.push(color);
    }
    Ok(EdgeColoring::new(colors))
}

/// First non-adjacent pair `(u, v)`, `u < v`, in lexicographic order.
pub fn first_non_adjacent_pair(g: &Graph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| !g.adjacent(u, v))
}

/// Spatial flex for a non-adjacent pair: `rho(u) = (1,0,0)`,
/// `rho(v) = (cos a, 1, sin a)` and `rho(w) = (0, w, 0)` otherwise.
pub fn flex3d(g: &Graph, u: usize, v: usize, alphas: &[f64]) -> Result<Motion> {
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    check_alphas(alphas)?;
    let n = g.vertex_count();
    if u >= n || v >= n || u == v {
        return Err(Error::contract(format!("{u},{v} is not a pair of distinct vertices")));
    }
    if g.adjacent(u, v) {
        return Err(Error::contract(format!("{u}{v} is an edge")));
    }
    let place = |alpha: f64| -> Vec<Vec<f64>> {
        let (s, c) = alpha.sin_cos();
        (0..n)
            .map(|w| {
                if w == u {
                    vec![1.0, 0.0, 0.0]
                } else if w == v {
                    vec![c, 1.0, s]
                } else {
                    vec![0.0, w as f64, 0.0]
                }
            })
            .collect()
    };
    let rest = place(0.0);
    let lengths = g
        .edges()
        .iter()
        .map(|e| distance(&rest[e.u], &rest[e.v]))
        .collect();
    Ok(Motion {
        dimension: 3,
        graph: g.clone(),
        labeling: Labeling::new(lengths)?,
        frames: build_frames(alphas, place),
        construction: Construction::ThreeD,
        coloring: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::nac::enumerate_nac;

    fn c4_grid() -> GridAssignment {
        let c4 = fixtures::get("C4");
        let nac = NacColoring::validate(&c4.graph, fixtures::c4_delta2(&c4)).unwrap();
        component_grid(&c4.graph, &nac)
    }

    #[test]
    fn c4_cells() {
        let ga = c4_grid();
        assert_eq!(ga.red_components().blocks(), &[vec![0, 2, 3], vec![1]]);
        assert_eq!(ga.blue_components().blocks(), &[vec![0, 1, 2], vec![3]]);
        assert_eq!(ga.cells(), &[(0, 0), (1, 0), (0, 0), (0, 1)]);
        assert!(!injective_flex(&ga));
    }

    #[test]
    fn c4_grid_motion() {
        let ga = c4_grid();
        let m = grid_motion(&ga, &uniform_alphas(DEFAULT_FRAMES)).unwrap();
        assert_eq!(m.labeling.lengths(), &[1.0; 4]);
        assert!(m.frames.iter().all(|f| f.positions[0] == f.positions[2]));
        m.check().unwrap();
        assert_eq!(recover_coloring(&m).unwrap(), *ga.coloring());
    }

    #[test]
    fn defining_frame_matches_labeling() {
        let ga = c4_grid();
        let m = grid_motion(&ga, &[0.0, PI / 2.0]).unwrap();
        let f = &m.frames[1];
        for (i, e) in m.graph.edges().iter().enumerate() {
            let d = distance(&f.positions[e.u], &f.positions[e.v]);
            assert!((d - m.labeling.length(i)).abs() < 1e-12);
        }
    }

    #[test]
    fn prism_is_injective() {
        let p = fixtures::get("PRISM");
        let red = [("a", "d"), ("b", "e"), ("c", "f")];
        let nac = NacColoring::validate(&p.graph, fixtures::coloring_with_red(&p, &red)).unwrap();
        let ga = component_grid(&p.graph, &nac);
        assert_eq!(ga.red_components().len(), 3);
        assert_eq!(ga.blue_components().len(), 2);
        assert!(injective_flex(&ga));
        let m = grid_motion(&ga, &uniform_alphas(12)).unwrap();
        let len = |a, b| m.labeling.length(p.edge_between(a, b).unwrap());
        for (a, b) in red {
            assert_eq!(len(a, b), 1.0);
        }
        // red components a, b, c sit in grid columns 1, 2, 3
        assert_eq!([len("a", "b"), len("b", "c"), len("c", "a")], [1.0, 1.0, 2.0]);
        assert_eq!([len("d", "e"), len("e", "f"), len("f", "d")], [1.0, 1.0, 2.0]);
    }

    #[test]
    fn k23_never_injective() {
        let g = fixtures::get("K23").graph;
        for nac in enumerate_nac(&g, false) {
            assert!(!injective_flex(&component_grid(&g, &nac)));
        }
    }

    #[test]
    fn zigzag_default_and_distinctness() {
        let ga = c4_grid();
        let z = ZigzagData::default_for(&ga);
        let m = zigzag_motion(&ga, &z, &uniform_alphas(DEFAULT_FRAMES)).unwrap();
        m.check().unwrap();
        assert_eq!(recover_coloring(&m).unwrap(), *ga.coloring());
        assert!(ZigzagData::new(vec![[0.0, 0.0], [0.0, 0.0]], vec![[1.0, 0.0]]).is_err());
        let wrong = ZigzagData::new(vec![[0.0, 0.0]], vec![[1.0, 0.0]]).unwrap();
        assert!(zigzag_motion(&ga, &wrong, &[0.0, 1.0]).is_err());
    }

    #[test]
    fn collinear_zigzag_still_positive() {
        let ga = c4_grid();
        let z = ZigzagData::new(vec![[0.0, 0.0], [0.0, 2.0]], vec![[0.0, 0.0], [0.0, 3.0]]).unwrap();
        let m = zigzag_motion(&ga, &z, &uniform_alphas(8)).unwrap();
        assert!(m.labeling.lengths().iter().all(|&l| l > 0.0));
    }

    #[test]
    fn rigid_motion_reads_all_blue() {
        let ga = c4_grid();
        let mut m = grid_motion(&ga, &uniform_alphas(8)).unwrap();
        let still = m.frames[0].positions.clone();
        for f in &mut m.frames {
            f.positions = still.clone();
        }
        let c = recover_coloring(&m).unwrap();
        assert!(!c.is_surjective());
        assert_eq!(c.count(Color::Blue), 4);
        m.frames.truncate(4);
        assert!(recover_coloring(&m).is_err());
    }

    #[test]
    fn scrambled_motion_is_unclassifiable() {
        let ga = c4_grid();
        let mut m = grid_motion(&ga, &uniform_alphas(8)).unwrap();
        m.frames[3].positions[1] = vec![5.0, -7.0];
        assert!(matches!(recover_coloring(&m), Err(Error::Classification { .. })));
    }

    #[test]
    fn spatial_flex() {
        let c4 = fixtures::get("C4").graph;
        let m = flex3d(&c4, 0, 2, &uniform_alphas(DEFAULT_FRAMES)).unwrap();
        m.check().unwrap();
        assert!(m.distance_spread(0, 2) > 1.0);
        assert!(matches!(
            flex3d(&Graph::complete(4), 0, 1, &[0.0, 1.0]),
            Err(Error::CompleteGraph)
        ));
        assert!(flex3d(&c4, 0, 1, &[0.0, 1.0]).is_err());
        assert_eq!(first_non_adjacent_pair(&c4), Some((0, 2)));
    }

    #[test]
    fn pinning() {
        let pts = [[1.0, 1.0], [1.0, 3.0], [0.0, 1.0]];
        let p = pin(&pts, 0, 1);
        assert!((p[0][0]).abs() < 1e-15 && (p[0][1]).abs() < 1e-15);
        assert!((p[1][0] - 2.0).abs() < 1e-15 && p[1][1].abs() < 1e-15);
        assert!((p[2][0]).abs() < 1e-15 && (p[2][1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bad_alphas_rejected() {
        let ga = c4_grid();
        assert!(grid_motion(&ga, &[0.0]).is_err());
        assert!(grid_motion(&ga, &[0.0, 7.0]).is_err());
    }
}
