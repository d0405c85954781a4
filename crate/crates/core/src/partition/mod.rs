//! Base edge selection, the `S_{i,j}` layers around it, and the fine cells.
//!
//! Cells are computed in three passes: [`coarse_refine`] splits every layer
//! into its primed and unprimed halves, [`static_refine`] adds everything
//! that depends only on the graph, and [`staged_refine`] adds the cells that
//! look at a partial orientation at one of the checkpoints D1..D4.
//!
//! V(Di) is read as the set of vertices incident to at least one directed
//! edge when checkpoint i is reached.

mod cells;
pub mod check;
mod coarse;
mod refine;
mod staged;

use std::collections::BTreeMap;

pub use cells::Cell;
pub use coarse::coarse_refine;
pub use refine::static_refine;
pub use staged::staged_refine;

use crate::graph::{
    bfs_distances, diameter, find_bridges, graph_edge_girth, is_connected, Distance, EdgeId,
    MultiGraph, VertexId,
};
use crate::vset::VertexSet;

/// Input outside the class the construction handles.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PreconditionError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge {edge} is a bridge")]
    Bridged { edge: EdgeId },
    #[error("diameter is {found}, expected 4")]
    Diameter { found: u32 },
    #[error("g* = {gstar}, expected 4 or 5")]
    EdgeGirth { gstar: u32 },
}

/// A vertex that does not fit the layer structure. Only reachable when the
/// preconditions were bypassed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("vertex {vertex} at distances ({du:?}, {dv:?}) fits no layer")]
pub struct LayerError {
    pub vertex: VertexId,
    pub du: Distance,
    pub dv: Distance,
}

/// The edge `uv` the whole partition is built around.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct BaseEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub e: EdgeId,
    pub gstar: u32,
}

impl BaseEdge {
    pub fn swapped(self) -> Self {
        BaseEdge { u: self.v, v: self.u, ..self }
    }
}

/// Picks the lowest-id edge whose girth equals g*, after checking that the
/// graph is connected, bridgeless, of diameter 4 and with g* in {4, 5}.
/// `u` is the lower-id endpoint.
pub fn select_base_edge(g: &MultiGraph) -> Result<BaseEdge, PreconditionError> {
    if g.vertex_count() == 0 {
        return Err(PreconditionError::Empty);
    }
    if !is_connected(g) {
        return Err(PreconditionError::Disconnected);
    }
    if let Some(&edge) = find_bridges(g).first() {
        return Err(PreconditionError::Bridged { edge });
    }
    let d = diameter(g).expect("connected");
    if d != 4 {
        return Err(PreconditionError::Diameter { found: d });
    }
    let gstar = graph_edge_girth(g).expect("bridgeless");
    if gstar != 4 && gstar != 5 {
        return Err(PreconditionError::EdgeGirth { gstar });
    }
    let e = g
        .edge_ids()
        .find(|&e| crate::graph::edge_girth(g, e) == Some(gstar))
        .expect("g* is attained");
    let (a, b) = g.endpoints(e);
    let (u, v) = if a < b { (a, b) } else { (b, a) };
    Ok(BaseEdge { u, v, e, gstar })
}

/// The eleven admissible `(d(w,u), d(w,v))` pairs.
pub const LAYERS: [(u32, u32); 11] = [
    (0, 1),
    (1, 0),
    (1, 2),
    (2, 1),
    (2, 2),
    (2, 3),
    (3, 2),
    (3, 3),
    (3, 4),
    (4, 3),
    (4, 4),
];

/// `S_{i,j}` membership relative to a base edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerPartition {
    pub du: Vec<u32>,
    pub dv: Vec<u32>,
    sets: BTreeMap<(u32, u32), VertexSet>,
}

impl LayerPartition {
    /// `S_{i,j}`; empty for pairs that are not layers.
    pub fn layer(&self, i: u32, j: u32) -> VertexSet {
        self.sets.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn of(&self, w: VertexId) -> (u32, u32) {
        (self.du[w.0], self.dv[w.0])
    }
}

pub fn layer_partition(g: &MultiGraph, base: &BaseEdge) -> Result<LayerPartition, LayerError> {
    let du_raw = bfs_distances(g, base.u);
    let dv_raw = bfs_distances(g, base.v);
    let mut sets: BTreeMap<(u32, u32), VertexSet> = BTreeMap::new();
    let mut du = Vec::with_capacity(g.vertex_count());
    let mut dv = Vec::with_capacity(g.vertex_count());
    for w in g.vertices() {
        let pair = match (du_raw[w.0], dv_raw[w.0]) {
            (Some(i), Some(j)) if LAYERS.contains(&(i, j)) => (i, j),
            (a, b) => return Err(LayerError { vertex: w, du: a, dv: b }),
        };
        du.push(pair.0);
        dv.push(pair.1);
        sets.entry(pair).or_default().insert(w);
    }
    Ok(LayerPartition { du, dv, sets })
}

/// Checkpoints at which orientation-dependent cells are computed.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Checkpoint {
    D1,
    D2,
    D3,
    D4,
}

/// What the staged cells looked at, kept so they can be re-checked later.
#[derive(Clone, Debug, Default)]
pub struct Snapshots {
    pub vd: BTreeMap<Checkpoint, VertexSet>,
    /// `(tail, head)` per edge at D3, `None` for undirected edges.
    pub d3_arcs: Option<Vec<Option<(VertexId, VertexId)>>>,
}

/// Per-vertex hierarchical cell paths plus the auxiliary set I*.
#[derive(Clone, Debug)]
pub struct FineLabels {
    paths: Vec<Vec<Cell>>,
    members: BTreeMap<Cell, VertexSet>,
    pub istar: VertexSet,
    pub snapshots: Snapshots,
}

impl FineLabels {
    pub fn new(n: usize) -> Self {
        FineLabels {
            paths: vec![Vec::new(); n],
            members: BTreeMap::new(),
            istar: VertexSet::new(),
            snapshots: Snapshots::default(),
        }
    }

    /// Appends `cell` to the path of `w`. The cell must refine the current
    /// finest label (or be top-level on an empty path).
    pub fn assign(&mut self, w: VertexId, cell: Cell) {
        let path = &mut self.paths[w.0];
        assert_eq!(path.last().copied(), cell.parent(), "vertex {w} cannot enter {cell}");
        path.push(cell);
        self.members.entry(cell).or_default().insert(w);
    }

    pub fn assign_all(&mut self, set: &VertexSet, cell: Cell) {
        for w in set {
            self.assign(w, cell);
        }
    }

    /// Members of a cell at any level.
    pub fn set(&self, cell: Cell) -> VertexSet {
        self.members.get(&cell).cloned().unwrap_or_default()
    }

    pub fn union(&self, cells: &[Cell]) -> VertexSet {
        let mut out = VertexSet::new();
        for &c in cells {
            if let Some(s) = self.members.get(&c) {
                out.extend_from(s);
            }
        }
        out
    }

    pub fn path(&self, w: VertexId) -> &[Cell] {
        &self.paths[w.0]
    }

    pub fn finest(&self, w: VertexId) -> Option<Cell> {
        self.paths[w.0].last().copied()
    }

    pub fn contains(&self, w: VertexId, cell: Cell) -> bool {
        self.paths[w.0].contains(&cell)
    }

    pub fn vertex_count(&self) -> usize {
        self.paths.len()
    }

    /// Dotted label path, e.g. `I.I6.I61.I61(2).I61(21)`.
    pub fn path_string(&self, w: VertexId) -> String {
        let names: Vec<&str> = self.paths[w.0].iter().map(|c| c.name()).collect();
        names.join(".")
    }

    /// One `vertex<TAB>path` line per vertex.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, _) in self.paths.iter().enumerate() {
            out.push_str(&format!("{}\t{}\n", i, self.path_string(VertexId(i))));
        }
        out
    }
}

/// Base edge, layers and labels for one graph.
#[derive(Clone, Debug)]
pub struct Partition {
    pub base: BaseEdge,
    pub layers: LayerPartition,
    pub labels: FineLabels,
    /// Whether `u` and `v` were exchanged to get |K'| >= |L'|.
    pub swapped: bool,
}

/// Runs base selection, layering, coarse refinement with the |K'| >= |L'|
/// guard, and static refinement.
pub fn build_partition(g: &MultiGraph) -> Result<Partition, PartitionError> {
    let mut base = select_base_edge(g)?;
    let mut layers = layer_partition(g, &base)?;
    let mut labels = coarse_refine(g, &layers);
    let mut swapped = false;
    if labels.set(Cell::Kp).len() < labels.set(Cell::Lp).len() {
        base = base.swapped();
        layers = layer_partition(g, &base)?;
        labels = coarse_refine(g, &layers);
        swapped = true;
    }
    static_refine(g, &layers, &mut labels);
    Ok(Partition { base, layers, labels, swapped })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error(transparent)]
    Precondition(#[from] PreconditionError),
    #[error(transparent)]
    Layer(#[from] LayerError),
}
