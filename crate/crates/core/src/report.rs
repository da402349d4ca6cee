//! JSON reports tying the analyses together, plus the motion builder used by
//! the command line.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formats::GraphFormat;
use crate::graph::{Graph, NamedGraph};
use crate::laman::{is_laman, problematic_analysis};
use crate::motion::{
    component_grid, first_non_adjacent_pair, flex3d, grid_motion, uniform_alphas, zigzag_motion,
    Motion, ZigzagData,
};
use crate::nac::{
    coloring_entries, disconnected_split, find_nac_limited, ColoredEdge, EdgeColoring,
    NacColoring, NacSearch,
};
use crate::structure::{StructureReport, DEFAULT_MAX_CUT_SIZE};

/// Version tag embedded in every JSON document.
pub const SCHEMA: &str = "nac-rigidity/1";
pub const DEFAULT_COLORING_CAP: usize = 64;
pub const DEFAULT_NODE_LIMIT: u64 = 20_000_000;

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub up_to_swap: bool,
    pub max_cut_size: usize,
    /// Colorings listed in the report; `None` lists all.
    pub coloring_cap: Option<usize>,
    pub node_limit: Option<u64>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            up_to_swap: false,
            max_cut_size: DEFAULT_MAX_CUT_SIZE,
            coloring_cap: Some(DEFAULT_COLORING_CAP),
            node_limit: Some(DEFAULT_NODE_LIMIT),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InputEcho {
    pub format: &'static str,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NacSummary {
    pub exists: Option<bool>,
    /// `None` when the search stopped at its node limit.
    pub count: Option<usize>,
    pub up_to_swap: bool,
    pub colorings: Vec<Vec<ColoredEdge>>,
    pub truncated: bool,
    /// Answered by splitting edge-bearing components rather than by search.
    pub disconnected: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictKind {
    FlexibleLabelingExists,
    NoneExists,
    UnknownWithinBounds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// What decided it, e.g. `edge-count-bound` or `nac-coloring-witness`.
    pub reason: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub input: InputEcho,
    pub laman: bool,
    pub problematic: Option<bool>,
    pub structure: StructureReport,
    pub nac: NacSummary,
    pub verdict: Verdict,
}

impl AnalysisReport {
    /// 0 when a flexible labeling exists, 1 when none does, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self.verdict.kind {
            VerdictKind::FlexibleLabelingExists => 0,
            VerdictKind::NoneExists => 1,
            VerdictKind::UnknownWithinBounds => 2,
        }
    }
}

fn listed(g: &NamedGraph, all: &[NacColoring], cap: Option<usize>) -> (Vec<Vec<ColoredEdge>>, bool) {
    let keep = cap.unwrap_or(usize::MAX).min(all.len());
    let list = all[..keep]
        .iter()
        .map(|n| coloring_entries(g, n.coloring()))
        .collect();
    (list, keep < all.len())
}

pub fn analyze(g: &NamedGraph, format: GraphFormat, opts: &AnalyzeOptions) -> AnalysisReport {
    let graph = &g.graph;
    let laman = is_laman(graph);
    let structure = StructureReport::new(g, opts.max_cut_size);
    let (nac, verdict) = decide(g, &structure, opts);
    AnalysisReport {
        schema: SCHEMA,
        input: InputEcho {
            format: format.as_str(),
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
        },
        laman,
        problematic: laman.then(|| problematic_analysis(graph).ok().map(|a| a.problematic)).flatten(),
        structure,
        nac,
        verdict,
    }
}

fn decide(g: &NamedGraph, structure: &StructureReport, opts: &AnalyzeOptions) -> (NacSummary, Verdict) {
    let graph = &g.graph;
    let summary = |exists, count, colorings, truncated, disconnected| NacSummary {
        exists,
        count,
        up_to_swap: opts.up_to_swap,
        colorings,
        truncated,
        disconnected,
    };
    let verdict = |kind, reason| Verdict { kind, reason };
    if graph.edge_count() == 0 {
        return (
            summary(Some(false), Some(0), Vec::new(), false, false),
            verdict(VerdictKind::UnknownWithinBounds, "no-edges"),
        );
    }
    if let Some(split) = disconnected_split(graph) {
        let (list, _) = listed(g, std::slice::from_ref(&split), opts.coloring_cap);
        return (
            summary(Some(true), None, list, false, true),
            verdict(VerdictKind::FlexibleLabelingExists, "disconnected-components"),
        );
    }
    if structure.spanned_by.is_some() || !structure.edge_bound_ok {
        let reason = if structure.spanned_by.is_some() {
            "spanning-triangle-connected-subgraph"
        } else {
            "edge-count-bound"
        };
        return (
            summary(Some(false), Some(0), Vec::new(), false, false),
            verdict(VerdictKind::NoneExists, reason),
        );
    }
    let search = NacSearch::new(graph)
        .up_to_swap(opts.up_to_swap)
        .node_limit(opts.node_limit);
    match search.enumerate() {
        Ok(all) if all.is_empty() => (
            summary(Some(false), Some(0), Vec::new(), false, false),
            verdict(VerdictKind::NoneExists, "exhaustive-enumeration"),
        ),
        Ok(all) => {
            let (list, truncated) = listed(g, &all, opts.coloring_cap);
            (
                summary(Some(true), Some(all.len()), list, truncated, false),
                verdict(VerdictKind::FlexibleLabelingExists, "nac-coloring-witness"),
            )
        }
        Err(_) => match find_nac_limited(graph, opts.node_limit) {
            Ok(Some(w)) => {
                let (list, _) = listed(g, std::slice::from_ref(&w), opts.coloring_cap);
                (
                    summary(Some(true), None, list, true, false),
                    verdict(VerdictKind::FlexibleLabelingExists, "nac-coloring-witness"),
                )
            }
            Ok(None) => (
                summary(Some(false), Some(0), Vec::new(), false, false),
                verdict(VerdictKind::NoneExists, "exhaustive-enumeration"),
            ),
            Err(_) => (
                summary(None, None, Vec::new(), false, false),
                verdict(VerdictKind::UnknownWithinBounds, "search-limit"),
            ),
        },
    }
}

/// Listing produced by the `nac` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NacListing {
    pub schema: &'static str,
    pub count: usize,
    pub up_to_swap: bool,
    pub truncated: bool,
    pub colorings: Vec<Vec<ColoredEdge>>,
}

pub fn nac_listing(g: &NamedGraph, up_to_swap: bool, cap: Option<usize>) -> NacListing {
    let all = NacSearch::new(&g.graph)
        .up_to_swap(up_to_swap)
        .enumerate()
        .expect("unbounded search cannot hit a limit");
    let (colorings, truncated) = listed(g, &all, cap);
    NacListing {
        schema: SCHEMA,
        count: all.len(),
        up_to_swap,
        truncated,
        colorings,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlexMode {
    Grid,
    Zigzag,
    ThreeD,
}

/// Builds a motion of `g`. Planar modes use `coloring`, or when it is `None`
/// the first coloring found by [`crate::nac::find_nac`]; the spatial mode
/// uses the first non-adjacent vertex pair and ignores the coloring.
pub fn build_motion(
    g: &Graph,
    coloring: Option<&EdgeColoring>,
    mode: FlexMode,
    frames: usize,
) -> Result<Motion> {
    let alphas = uniform_alphas(frames);
    if mode == FlexMode::ThreeD {
        let (u, v) = first_non_adjacent_pair(g).ok_or(Error::CompleteGraph)?;
        return flex3d(g, u, v, &alphas);
    }
    let nac = match coloring {
        Some(c) => NacColoring::validate(g, c.clone())?,
        None => find_nac_limited(g, None)?.ok_or(Error::NoNacColoring)?,
    };
    let ga = component_grid(g, &nac);
    match mode {
        FlexMode::Grid => grid_motion(&ga, &alphas),
        _ => zigzag_motion(&ga, &ZigzagData::default_for(&ga), &alphas),
    }
}
