//! Partial orientations layered over a [`MultiGraph`].
//!
//! Only directed edges are traversable in distance queries; an undirected
//! edge is invisible until some stage fixes its direction.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::graph::{Distance, EdgeId, MultiGraph, VertexId};
use crate::vset::VertexSet;

/// Direction state of one edge. `Forward` runs from the first listed
/// endpoint to the second.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeDirection {
    Undirected,
    Forward,
    Backward,
}

impl EdgeDirection {
    pub fn reversed(self) -> Self {
        match self {
            EdgeDirection::Forward => EdgeDirection::Backward,
            EdgeDirection::Backward => EdgeDirection::Forward,
            EdgeDirection::Undirected => EdgeDirection::Undirected,
        }
    }
}

/// Tag recorded against every oriented edge.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Stage {
    Cons1,
    Cons4,
    Cons5,
    Cons6,
    Cons2,
    Cons3,
    Cons8_2,
    Cons8_1,
    Cons8,
    Cons8_5,
    Cons10,
    Cons12,
    Cons11,
    Baseline,
    Input,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Cons1 => "cons1",
            Stage::Cons4 => "cons4",
            Stage::Cons5 => "cons5",
            Stage::Cons6 => "cons6",
            Stage::Cons2 => "cons2",
            Stage::Cons3 => "cons3",
            Stage::Cons8_2 => "cons8_2",
            Stage::Cons8_1 => "cons8_1",
            Stage::Cons8 => "cons8",
            Stage::Cons8_5 => "cons8.5",
            Stage::Cons10 => "cons10",
            Stage::Cons12 => "cons12",
            Stage::Cons11 => "cons11",
            Stage::Baseline => "baseline",
            Stage::Input => "input",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Attempt to reverse an edge that already carries a direction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{stage}: edge {edge} ({from}->{to}) already oriented the other way by {owner}")]
pub struct ConflictError {
    pub stage: Stage,
    pub edge: EdgeId,
    pub from: VertexId,
    pub to: VertexId,
    pub owner: Stage,
}

/// θ was asked against an empty set.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("theta against an empty vertex set")]
pub struct EmptySet;

/// Per-edge direction state plus the log of which stage fixed each edge.
#[derive(Clone, Debug)]
pub struct MixedOrientation<'g> {
    graph: &'g MultiGraph,
    dirs: Vec<EdgeDirection>,
    owner: Vec<Option<Stage>>,
    log: Vec<(Stage, Vec<EdgeId>)>,
}

impl<'g> MixedOrientation<'g> {
    /// All edges undirected.
    pub fn new(graph: &'g MultiGraph) -> Self {
        let m = graph.edge_count();
        MixedOrientation {
            graph,
            dirs: vec![EdgeDirection::Undirected; m],
            owner: vec![None; m],
            log: Vec::new(),
        }
    }

    pub fn graph(&self) -> &'g MultiGraph {
        self.graph
    }

    pub fn direction(&self, e: EdgeId) -> EdgeDirection {
        self.dirs[e.0]
    }

    pub fn directions(&self) -> &[EdgeDirection] {
        &self.dirs
    }

    pub fn owner(&self, e: EdgeId) -> Option<Stage> {
        self.owner[e.0]
    }

    /// `(stage, edges it oriented)` in the order stages first wrote.
    pub fn stage_log(&self) -> &[(Stage, Vec<EdgeId>)] {
        &self.log
    }

    /// `(tail, head)` of a directed edge.
    pub fn arc(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        let (a, b) = self.graph.endpoints(e);
        match self.dirs[e.0] {
            EdgeDirection::Forward => Some((a, b)),
            EdgeDirection::Backward => Some((b, a)),
            EdgeDirection::Undirected => None,
        }
    }

    pub fn is_directed(&self, e: EdgeId) -> bool {
        self.dirs[e.0] != EdgeDirection::Undirected
    }

    /// Fixes the direction of `e`. Repeating the same direction is a no-op;
    /// asking for the opposite one is a conflict.
    pub fn set_direction(
        &mut self,
        e: EdgeId,
        dir: EdgeDirection,
        stage: Stage,
    ) -> Result<(), ConflictError> {
        assert_ne!(dir, EdgeDirection::Undirected, "set_direction needs a direction");
        let current = self.dirs[e.0];
        if current == dir {
            return Ok(());
        }
        if current != EdgeDirection::Undirected {
            let (a, b) = self.graph.endpoints(e);
            let (from, to) = if dir == EdgeDirection::Forward { (a, b) } else { (b, a) };
            return Err(ConflictError {
                stage,
                edge: e,
                from,
                to,
                owner: self.owner[e.0].expect("directed edges have an owner"),
            });
        }
        self.dirs[e.0] = dir;
        self.owner[e.0] = Some(stage);
        match self.log.iter_mut().find(|(s, _)| *s == stage) {
            Some((_, edges)) => edges.push(e),
            None => self.log.push((stage, vec![e])),
        }
        Ok(())
    }

    /// Orients `e` as `from → to`.
    pub fn orient(
        &mut self,
        e: EdgeId,
        from: VertexId,
        to: VertexId,
        stage: Stage,
    ) -> Result<(), ConflictError> {
        let (a, b) = self.graph.endpoints(e);
        let dir = if (a, b) == (from, to) {
            EdgeDirection::Forward
        } else {
            assert_eq!((b, a), (from, to), "edge {e} does not join {from} and {to}");
            EdgeDirection::Backward
        };
        self.set_direction(e, dir, stage)
    }

    /// Whether `e` is undirected or already points `from → to`.
    pub fn allows(&self, e: EdgeId, from: VertexId, to: VertexId) -> bool {
        match self.arc(e) {
            None => true,
            Some(arc) => arc == (from, to),
        }
    }

    pub fn is_undirected_vertex(&self, z: VertexId) -> bool {
        self.graph.incident(z).iter().all(|&(_, e)| !self.is_directed(e))
    }

    /// V(D): vertices incident to at least one directed edge.
    pub fn directed_vertices(&self) -> VertexSet {
        let mut out = VertexSet::new();
        for e in self.graph.edge_ids() {
            if let Some((a, b)) = self.arc(e) {
                out.insert(a);
                out.insert(b);
            }
        }
        out
    }

    pub fn undirected_edges(&self) -> Vec<EdgeId> {
        self.graph.edge_ids().filter(|&e| !self.is_directed(e)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.dirs.iter().all(|&d| d != EdgeDirection::Undirected)
    }

    /// Out-arcs and in-arcs in adjacency order, for repeated BFS.
    pub fn arc_lists(&self) -> ArcLists {
        let n = self.graph.vertex_count();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for e in self.graph.edge_ids() {
            if let Some((a, b)) = self.arc(e) {
                out[a.0].push(b.0);
                inn[b.0].push(a.0);
            }
        }
        ArcLists { out, inn }
    }

    /// ∂(src, ·).
    pub fn directed_distances_from(&self, src: VertexId) -> Vec<Distance> {
        self.arc_lists().bfs(&[src], true)
    }

    /// ∂(·, dst).
    pub fn directed_distances_to(&self, dst: VertexId) -> Vec<Distance> {
        self.arc_lists().bfs(&[dst], false)
    }

    pub fn is_strong(&self) -> bool {
        self.arc_lists().is_strong()
    }

    /// Largest ∂ over ordered pairs, `None` when not strong.
    pub fn directed_diameter(&self) -> Distance {
        self.arc_lists().diameter()
    }

    /// θ(x, S) = max(∂(x, S), ∂(S, x)).
    pub fn theta(&self, x: VertexId, set: &VertexSet) -> Result<Distance, EmptySet> {
        if set.is_empty() {
            return Err(EmptySet);
        }
        let arcs = self.arc_lists();
        let fwd = arcs.bfs(&[x], true);
        let to = set.iter().filter_map(|s| fwd[s.0]).min();
        let sources = set.to_vec();
        let from = arcs.bfs(&sources, true)[x.0];
        Ok(match (to, from) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        })
    }
}

/// Directed adjacency snapshot.
#[derive(Clone, Debug)]
pub struct ArcLists {
    pub out: Vec<Vec<usize>>,
    pub inn: Vec<Vec<usize>>,
}

impl ArcLists {
    /// Multi-source BFS along arcs (`forward`) or against them.
    pub fn bfs(&self, sources: &[VertexId], forward: bool) -> Vec<Distance> {
        let lists = if forward { &self.out } else { &self.inn };
        let mut dist = vec![None; lists.len()];
        let mut queue = VecDeque::new();
        for s in sources {
            if dist[s.0].is_none() {
                dist[s.0] = Some(0);
                queue.push_back(s.0);
            }
        }
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &y in &lists[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_strong(&self) -> bool {
        let n = self.out.len();
        if n == 0 {
            return true;
        }
        let root = [VertexId(0)];
        self.bfs(&root, true).iter().all(Option::is_some)
            && self.bfs(&root, false).iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for x in 0..self.out.len() {
            for d in self.bfs(&[VertexId(x)], true) {
                best = best.max(d?);
            }
        }
        Some(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_cycle(g: &MultiGraph) -> MixedOrientation<'_> {
        let mut o = MixedOrientation::new(g);
        for e in g.edge_ids() {
            o.set_direction(e, EdgeDirection::Forward, Stage::Input).unwrap();
        }
        o
    }

    fn cycle(n: usize) -> MultiGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::new(n, &edges).unwrap()
    }

    #[test]
    fn set_direction_contract() {
        let g = MultiGraph::new(2, &[(0, 1)]).unwrap();
        let mut o = MixedOrientation::new(&g);
        o.set_direction(EdgeId(0), EdgeDirection::Forward, Stage::Cons1).unwrap();
        assert_eq!(o.direction(EdgeId(0)), EdgeDirection::Forward);
        o.set_direction(EdgeId(0), EdgeDirection::Forward, Stage::Cons2).unwrap();
        assert_eq!(o.owner(EdgeId(0)), Some(Stage::Cons1));
        let err = o.set_direction(EdgeId(0), EdgeDirection::Backward, Stage::Cons2).unwrap_err();
        assert_eq!(err.owner, Stage::Cons1);
        assert_eq!((err.from, err.to), (VertexId(1), VertexId(0)));
        assert_eq!(o.stage_log(), &[(Stage::Cons1, vec![EdgeId(0)])]);
    }

    #[test]
    fn undirected_vertices() {
        let g = MultiGraph::new(3, &[(0, 1)]).unwrap();
        let mut o = MixedOrientation::new(&g);
        assert!(o.is_undirected_vertex(VertexId(0)));
        assert!(o.directed_vertices().is_empty());
        o.orient(EdgeId(0), VertexId(1), VertexId(0), Stage::Input).unwrap();
        assert!(!o.is_undirected_vertex(VertexId(0)));
        assert!(o.is_undirected_vertex(VertexId(2)));
        assert_eq!(o.directed_vertices().to_vec(), vec![VertexId(0), VertexId(1)]);
        assert_eq!(o.direction(EdgeId(0)), EdgeDirection::Backward);
    }

    #[test]
    fn directed_cycle_distances() {
        let g = cycle(3);
        let o = directed_cycle(&g);
        assert_eq!(o.directed_distances_from(VertexId(0)), vec![Some(0), Some(1), Some(2)]);
        assert_eq!(o.directed_distances_to(VertexId(0)), vec![Some(0), Some(2), Some(1)]);
        assert!(o.is_strong());
        assert_eq!(o.directed_diameter(), Some(2));
        let c4 = cycle(4);
        assert_eq!(directed_cycle(&c4).directed_diameter(), Some(3));
        assert_eq!(directed_cycle(&cycle(7)).directed_diameter(), Some(6));
    }

    #[test]
    fn two_cycle_and_one_arc() {
        let g = MultiGraph::new(2, &[(0, 1), (0, 1)]).unwrap();
        let mut o = MixedOrientation::new(&g);
        assert_eq!(o.directed_distances_from(VertexId(0)), vec![Some(0), None]);
        o.orient(EdgeId(0), VertexId(0), VertexId(1), Stage::Input).unwrap();
        assert!(!o.is_strong());
        assert_eq!(o.directed_diameter(), None);
        o.orient(EdgeId(1), VertexId(1), VertexId(0), Stage::Input).unwrap();
        assert_eq!(o.directed_distances_from(VertexId(0))[1], Some(1));
        assert_eq!(o.directed_distances_from(VertexId(1))[0], Some(1));
    }

    #[test]
    fn theta_examples() {
        let g = MultiGraph::new(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        let mut o = MixedOrientation::new(&g);
        let s = VertexSet::single(VertexId(1));
        assert_eq!(o.theta(VertexId(0), &s), Ok(None));
        o.orient(EdgeId(0), VertexId(0), VertexId(1), Stage::Input).unwrap();
        o.orient(EdgeId(1), VertexId(1), VertexId(0), Stage::Input).unwrap();
        assert_eq!(o.theta(VertexId(0), &s), Ok(Some(1)));
        assert_eq!(o.theta(VertexId(2), &s), Ok(None));
        assert_eq!(o.theta(VertexId(0), &VertexSet::new()), Err(EmptySet));
    }
}
