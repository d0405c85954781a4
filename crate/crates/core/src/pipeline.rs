//! The full run: partition, stage schedule with checkpoints, verification.

use serde::Serialize;

use crate::bounds::{bound_row, diameter_bound};
use crate::constructions::{apply_stage, ConstructionError};
use crate::graph::{find_bridges, is_connected, Distance, MultiGraph, VertexId};
use crate::mixed::{MixedOrientation, Stage};
use crate::partition::{
    build_partition, staged_refine, Cell, Checkpoint, Partition, PartitionError,
    PreconditionError,
};

/// One entry of the schedule.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Run(Stage),
    Refine(Checkpoint),
}

pub const SCHEDULE: [Step; 17] = [
    Step::Run(Stage::Cons1),
    Step::Run(Stage::Cons4),
    Step::Run(Stage::Cons5),
    Step::Refine(Checkpoint::D1),
    Step::Run(Stage::Cons6),
    Step::Run(Stage::Cons2),
    Step::Refine(Checkpoint::D2),
    Step::Run(Stage::Cons3),
    Step::Run(Stage::Cons8_2),
    Step::Run(Stage::Cons8_1),
    Step::Run(Stage::Cons8),
    Step::Refine(Checkpoint::D3),
    Step::Run(Stage::Cons8_5),
    Step::Refine(Checkpoint::D4),
    Step::Run(Stage::Cons10),
    Step::Run(Stage::Cons12),
    Step::Run(Stage::Cons11),
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("construction failed: {0}")]
    Construction(#[from] ConstructionError),
}

impl PipelineError {
    pub fn is_precondition(&self) -> bool {
        matches!(self, PipelineError::Partition(_))
    }
}

/// A completed run.
#[derive(Clone, Debug)]
pub struct PipelineResult<'g> {
    pub orientation: MixedOrientation<'g>,
    pub partition: Partition,
    pub report: VerificationReport,
}

/// Builds the partition and applies every stage. The orientation is left
/// as far as it got when a stage fails.
pub fn run_schedule<'g>(
    g: &'g MultiGraph,
    part: &mut Partition,
    o: &mut MixedOrientation<'g>,
) -> Result<(), ConstructionError> {
    for step in SCHEDULE {
        match step {
            Step::Run(stage) => apply_stage(o, part, stage)?,
            Step::Refine(cp) => staged_refine(g, &part.layers, &mut part.labels, o, cp),
        }
    }
    if let Some(&e) = o.undirected_edges().first() {
        return Err(ConstructionError::Internal {
            stage: Stage::Cons11,
            detail: format!("edge {e} still undirected"),
        });
    }
    Ok(())
}

pub fn orient_diameter4(g: &MultiGraph) -> Result<PipelineResult<'_>, PipelineError> {
    let mut part = build_partition(g)?;
    let mut o = MixedOrientation::new(g);
    run_schedule(g, &mut part, &mut o)?;
    let report = verify(g, &o, Some(&part));
    Ok(PipelineResult { orientation: o, partition: part, report })
}

/// DFS orientation: tree edges away from the root, every other edge back
/// towards the ancestor it reaches.
pub fn baseline_strong_orientation(
    g: &MultiGraph,
) -> Result<MixedOrientation<'_>, PreconditionError> {
    if g.vertex_count() == 0 {
        return Err(PreconditionError::Empty);
    }
    if !is_connected(g) {
        return Err(PreconditionError::Disconnected);
    }
    if let Some(&edge) = find_bridges(g).first() {
        return Err(PreconditionError::Bridged { edge });
    }
    let mut o = MixedOrientation::new(g);
    let mut visited = vec![false; g.vertex_count()];
    let mut used = vec![false; g.edge_count()];
    let root = VertexId(0);
    visited[0] = true;
    let mut stack = vec![(root, 0usize)];
    while let Some(top) = stack.last_mut() {
        let (x, i) = *top;
        let Some(&(y, e)) = g.incident(x).get(i) else {
            stack.pop();
            continue;
        };
        top.1 += 1;
        if used[e.0] {
            continue;
        }
        used[e.0] = true;
        o.orient(e, x, y, Stage::Baseline).expect("fresh edge");
        if !visited[y.0] {
            visited[y.0] = true;
            stack.push((y, 0));
        }
    }
    Ok(o)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseEdgeJson {
    pub u: usize,
    pub v: usize,
    pub e: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellViolation {
    pub vertex: usize,
    pub cell: String,
    pub kind: String,
    pub observed: Distance,
    pub allowed: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageSummary {
    pub stage: String,
    pub edges: usize,
}

/// Directed distances of one vertex against the base edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexDistances {
    pub vertex: usize,
    pub cell: Option<String>,
    pub to_u: Distance,
    pub from_v: Distance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub m: usize,
    pub gstar: Option<u32>,
    pub base_edge: Option<BaseEdgeJson>,
    pub strong: bool,
    pub directed_diameter: Distance,
    pub bound: Option<u32>,
    pub bound_ok: bool,
    pub cell_violations: Vec<CellViolation>,
    pub stage_log_summary: Vec<StageSummary>,
    /// Set to `"no-bound"` for baseline results.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub marker: Option<String>,
    #[serde(skip)]
    pub vertices: Vec<VertexDistances>,
}

impl VerificationReport {
    /// Strong, within the diameter bound and free of cell violations.
    pub fn passed(&self) -> bool {
        self.strong && self.bound_ok && self.cell_violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Checks a complete orientation. With a partition, every vertex is also
/// held against the bound rows of its finest and top-level cells, and the
/// exact distances around the base edge are confirmed.
pub fn verify(
    g: &MultiGraph,
    o: &MixedOrientation<'_>,
    part: Option<&Partition>,
) -> VerificationReport {
    let arcs = o.arc_lists();
    let strong = o.is_complete() && arcs.is_strong();
    let directed_diameter = if o.is_complete() { arcs.diameter() } else { None };
    let gstar = part.map(|p| p.base.gstar);
    let bound = gstar.map(diameter_bound);
    let bound_ok = match (bound, directed_diameter) {
        (Some(b), Some(d)) => strong && d <= b,
        _ => false,
    };
    let mut stage_log_summary: Vec<StageSummary> = Vec::new();
    for (stage, edges) in o.stage_log() {
        match stage_log_summary.last_mut() {
            Some(last) if last.stage == stage.name() => last.edges += edges.len(),
            _ => stage_log_summary.push(StageSummary { stage: stage.name().into(), edges: edges.len() }),
        }
    }
    let mut report = VerificationReport {
        n: g.vertex_count(),
        m: g.edge_count(),
        gstar,
        base_edge: part.map(|p| BaseEdgeJson { u: p.base.u.0, v: p.base.v.0, e: p.base.e.0 }),
        strong,
        directed_diameter,
        bound,
        bound_ok,
        cell_violations: Vec::new(),
        stage_log_summary,
        marker: None,
        vertices: Vec::new(),
    };
    if let Some(p) = part {
        check_cells(o, p, &arcs, &mut report);
    }
    report
}

fn check_cells(
    o: &MixedOrientation<'_>,
    p: &Partition,
    arcs: &crate::mixed::ArcLists,
    report: &mut VerificationReport,
) {
    let g = o.graph();
    let gs = p.base.gstar;
    let (u, v) = (p.base.u, p.base.v);
    let to_u = arcs.bfs(&[u], false);
    let from_v = arcs.bfs(&[v], true);
    let mut out = Vec::new();
    let mut push = |w: VertexId, cell: &str, kind: &str, observed: Distance, allowed: Option<u32>| {
        out.push(CellViolation {
            vertex: w.0,
            cell: cell.into(),
            kind: kind.into(),
            observed,
            allowed,
        })
    };
    let exceeds = |d: Distance, limit: u32| d.is_none_or(|d| d > limit);
    for w in g.vertices() {
        let finest = p.labels.finest(w);
        report.vertices.push(VertexDistances {
            vertex: w.0,
            cell: finest.map(|c| c.name().to_string()),
            to_u: to_u[w.0],
            from_v: from_v[w.0],
        });
        let Some(leaf) = finest else {
            push(w, "-", "unlabelled", None, None);
            continue;
        };
        let mut rows = vec![leaf];
        if leaf.root() != leaf {
            rows.push(leaf.root());
        }
        for c in rows {
            let Some(row) = bound_row(c) else {
                push(w, c.name(), "missing_row", None, None);
                continue;
            };
            let (a, b) = (row.to_u.at(gs), row.from_v.at(gs));
            if exceeds(to_u[w.0], a) {
                push(w, c.name(), "to_u", to_u[w.0], Some(a));
            }
            if exceeds(from_v[w.0], b) {
                push(w, c.name(), "from_v", from_v[w.0], Some(b));
            }
        }
        if leaf == Cell::S22 {
            if to_u[w.0] != Some(2) {
                push(w, "S22", "exact_to_u", to_u[w.0], Some(2));
            }
            if from_v[w.0] != Some(2) {
                push(w, "S22", "exact_from_v", from_v[w.0], Some(2));
            }
        }
    }
    if from_v[u.0] != Some(gs - 1) {
        push(u, "u", "exact_v_to_u", from_v[u.0], Some(gs - 1));
    }
    let uv = arcs.bfs(&[u], true)[v.0];
    if uv != Some(1) {
        push(u, "u", "exact_u_to_v", uv, Some(1));
    }
    report.cell_violations = out;
}

/// One `stage<TAB>edge<TAB>from<TAB>to` line per oriented edge, in the
/// order the stages ran.
pub fn stage_trace(o: &MixedOrientation<'_>) -> String {
    let mut out = String::new();
    for (stage, edges) in o.stage_log() {
        for &e in edges {
            if let Some((a, b)) = o.arc(e) {
                out.push_str(&format!("{}\t{}\t{}\t{}\n", stage.name(), e.0, a.0, b.0));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid2x4() -> MultiGraph {
        MultiGraph::new(
            8,
            &[(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap()
    }

    #[test]
    fn grid_end_to_end() {
        let g = grid2x4();
        let res = orient_diameter4(&g).unwrap();
        let r = &res.report;
        assert!(r.strong);
        assert!(r.directed_diameter.unwrap() <= 17);
        assert!(r.directed_diameter.unwrap() >= 4);
        assert!(r.cell_violations.is_empty(), "{:?}", r.cell_violations);
    }

    #[test]
    fn out_of_scope_inputs() {
        let c9 = MultiGraph::new(9, &(0..9).map(|i| (i, (i + 1) % 9)).collect::<Vec<_>>()).unwrap();
        let err = orient_diameter4(&c9).unwrap_err();
        assert!(err.is_precondition());
        assert!(err.to_string().contains("g* = 9"), "{err}");
    }

    #[test]
    fn baseline_is_strong() {
        let c5 = MultiGraph::new(5, &(0..5).map(|i| (i, (i + 1) % 5)).collect::<Vec<_>>()).unwrap();
        let o = baseline_strong_orientation(&c5).unwrap();
        assert!(o.is_strong());
        assert_eq!(o.directed_diameter(), Some(4));
        let k4 = MultiGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(baseline_strong_orientation(&k4).unwrap().is_strong());
        let bridged = MultiGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            baseline_strong_orientation(&bridged),
            Err(PreconditionError::Bridged { .. })
        ));
    }

    #[test]
    fn trace_lists_every_edge_once() {
        let g = grid2x4();
        let res = orient_diameter4(&g).unwrap();
        let trace = stage_trace(&res.orientation);
        assert_eq!(trace.lines().count(), g.edge_count());
        assert!(trace.starts_with("cons1\t"));
    }
}
