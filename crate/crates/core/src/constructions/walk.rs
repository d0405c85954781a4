//! Search for mixed paths and cycles through prescribed vertex sets.
//!
//! A walk is mixed when its directed edges all agree with one traversal
//! direction. Orienting a mixed walk means directing its undirected edges
//! the same way.

use crate::graph::{EdgeId, VertexId};
use crate::mixed::{ConflictError, MixedOrientation, Stage};
use crate::vset::VertexSet;

/// Vertices `x0..xk` and the edges `x_{i-1} x_i` between them. A closed
/// walk repeats `x0` at the end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedWalk {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl MixedWalk {
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() > 1 && self.vertices.first() == self.vertices.last()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `(tail, head)` of every edge once the walk is traversed in `dir`.
    pub fn arcs(&self, dir: WalkDir) -> Vec<(EdgeId, VertexId, VertexId)> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let (a, b) = (self.vertices[i], self.vertices[i + 1]);
                match dir {
                    WalkDir::Along => (e, a, b),
                    WalkDir::Against => (e, b, a),
                }
            })
            .collect()
    }
}

/// Traversal direction: `Along` runs from the first listed vertex.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum WalkDir {
    Along,
    Against,
}

/// The direction in which `walk` is mixed, preferring `Along`.
pub fn walk_direction(o: &MixedOrientation<'_>, walk: &MixedWalk) -> Option<WalkDir> {
    [WalkDir::Along, WalkDir::Against]
        .into_iter()
        .find(|&d| walk.arcs(d).iter().all(|&(e, a, b)| o.allows(e, a, b)))
}

/// First mixed walk `x0 x1 .. xk` with `x_i ∈ steps[i]`, in lexicographic
/// order of (vertex, edge) at every step. Vertices are distinct except that
/// the final one may equal `x0`; edges are always distinct. `accept` sees
/// each candidate together with its direction and can reject it.
pub fn find_mixed_closure(
    o: &MixedOrientation<'_>,
    steps: &[VertexSet],
    accept: &dyn Fn(&MixedWalk, WalkDir) -> bool,
) -> Option<(MixedWalk, WalkDir)> {
    let (first, _) = steps.split_first()?;
    for x0 in first.iter() {
        let mut walk = MixedWalk { vertices: vec![x0], edges: Vec::new() };
        if let Some(found) = extend(o, steps, &mut walk, true, true, accept) {
            return Some(found);
        }
    }
    None
}

fn extend(
    o: &MixedOrientation<'_>,
    steps: &[VertexSet],
    walk: &mut MixedWalk,
    along: bool,
    against: bool,
    accept: &dyn Fn(&MixedWalk, WalkDir) -> bool,
) -> Option<(MixedWalk, WalkDir)> {
    let i = walk.vertices.len();
    if i == steps.len() {
        let dir = if along { WalkDir::Along } else { WalkDir::Against };
        if accept(walk, dir) {
            return Some((walk.clone(), dir));
        }
        if along && against && accept(walk, WalkDir::Against) {
            return Some((walk.clone(), WalkDir::Against));
        }
        return None;
    }
    let x = *walk.vertices.last().unwrap();
    let g = o.graph();
    let last_step = i + 1 == steps.len();
    for &(y, e) in g.incident(x) {
        if !steps[i].contains(y) || walk.edges.contains(&e) {
            continue;
        }
        let seen = walk.vertices.contains(&y);
        if seen && !(last_step && y == walk.vertices[0]) {
            continue;
        }
        let al = along && o.allows(e, x, y);
        let ag = against && o.allows(e, y, x);
        if !al && !ag {
            continue;
        }
        walk.vertices.push(y);
        walk.edges.push(e);
        let found = extend(o, steps, walk, al, ag, accept);
        walk.vertices.pop();
        walk.edges.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Directs every edge of `walk` according to `dir`.
pub fn orient_walk(
    o: &mut MixedOrientation<'_>,
    walk: &MixedWalk,
    dir: WalkDir,
    stage: Stage,
) -> Result<(), ConflictError> {
    for (e, a, b) in walk.arcs(dir) {
        o.orient(e, a, b, stage)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiGraph;

    fn set(ids: &[usize]) -> VertexSet {
        ids.iter().map(|&i| VertexId(i)).collect()
    }

    fn any(_: &MixedWalk, _: WalkDir) -> bool {
        true
    }

    #[test]
    fn finds_cycle_and_orients() {
        let g = MultiGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let mut o = MixedOrientation::new(&g);
        o.orient(EdgeId(2), VertexId(3), VertexId(2), Stage::Cons1).unwrap();
        let steps = [set(&[0]), set(&[1]), set(&[2]), set(&[3]), set(&[0])];
        let (w, d) = find_mixed_closure(&o, &steps, &any).unwrap();
        assert!(w.is_cycle());
        assert_eq!(d, WalkDir::Against);
        orient_walk(&mut o, &w, d, Stage::Cons2).unwrap();
        assert!(o.is_strong());
    }

    #[test]
    fn two_cycle_needs_distinct_edges() {
        let single = MultiGraph::new(2, &[(0, 1)]).unwrap();
        let o = MixedOrientation::new(&single);
        let steps = [set(&[0]), set(&[1]), set(&[0])];
        assert!(find_mixed_closure(&o, &steps, &any).is_none());

        let double = MultiGraph::new(2, &[(0, 1), (0, 1)]).unwrap();
        let o = MixedOrientation::new(&double);
        let (w, d) = find_mixed_closure(&o, &steps, &any).unwrap();
        assert_eq!(w.edges, vec![EdgeId(0), EdgeId(1)]);
        assert_eq!(d, WalkDir::Along);
    }

    #[test]
    fn rejects_inconsistent_arcs() {
        // 0 -> 1 and 2 -> 1 cannot sit on one directed path 0 1 2
        let g = MultiGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let mut o = MixedOrientation::new(&g);
        o.orient(EdgeId(0), VertexId(0), VertexId(1), Stage::Cons1).unwrap();
        o.orient(EdgeId(1), VertexId(2), VertexId(1), Stage::Cons1).unwrap();
        let steps = [set(&[0]), set(&[1]), set(&[2])];
        assert!(find_mixed_closure(&o, &steps, &any).is_none());
    }

    #[test]
    fn accept_callback_filters() {
        let g = MultiGraph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let o = MixedOrientation::new(&g);
        let steps = [set(&[0]), set(&[1]), set(&[2, 3])];
        let only3 = |w: &MixedWalk, _: WalkDir| w.vertices[2] == VertexId(3);
        let (w, _) = find_mixed_closure(&o, &steps, &only3).unwrap();
        assert_eq!(w.vertices, vec![VertexId(0), VertexId(1), VertexId(3)]);
        let against = |_: &MixedWalk, d: WalkDir| d == WalkDir::Against;
        let (_, d) = find_mixed_closure(&o, &steps, &against).unwrap();
        assert_eq!(d, WalkDir::Against);
    }
}
