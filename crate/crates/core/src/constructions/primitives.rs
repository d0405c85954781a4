//! Building blocks shared by the stages: set-to-set arcs, R-S orientation and
//! the small per-vertex patterns.

use std::collections::VecDeque;

use super::ConstructionError;
use crate::graph::{EdgeId, MultiGraph, VertexId};
use crate::mixed::{MixedOrientation, Stage};
use crate::vset::VertexSet;

/// Orients every edge of `[from, to]` as `from → to`.
pub fn arrow(
    o: &mut MixedOrientation<'_>,
    from: &VertexSet,
    to: &VertexSet,
    stage: Stage,
) -> Result<(), ConstructionError> {
    if from.meets(to) {
        return Err(ConstructionError::Internal {
            stage,
            detail: format!("arrow between overlapping sets at {:?}", from.intersect(to).first()),
        });
    }
    let g = o.graph();
    for a in from.iter() {
        for &(b, e) in g.incident(a) {
            if to.contains(b) {
                o.orient(e, a, b, stage)?;
            }
        }
    }
    Ok(())
}

/// Sides of the spanning forest used by an R-S orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsInstance {
    pub r_set: VertexSet,
    pub s_set: VertexSet,
    pub forest: Vec<EdgeId>,
    pub v1: VertexSet,
    pub v2: VertexSet,
}

/// Validates the R-S preconditions and builds the BFS forest of `G[S]`:
/// one root per component (its lowest id), even depth on side `V1`.
pub fn rs_instance(
    g: &MultiGraph,
    r_set: &VertexSet,
    s_set: &VertexSet,
) -> Result<RsInstance, String> {
    if r_set.meets(s_set) {
        return Err("R and S intersect".into());
    }
    for w in s_set.iter() {
        if g.isolated_in(w, s_set) {
            return Err(format!("vertex {w} is isolated in G[S]"));
        }
        if !g.touches(w, r_set) {
            return Err(format!("vertex {w} has no neighbor in R"));
        }
    }
    let mut depth: Vec<Option<u32>> = vec![None; g.vertex_count()];
    let mut forest = Vec::new();
    for root in s_set.iter() {
        if depth[root.0].is_some() {
            continue;
        }
        depth[root.0] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let dx = depth[x.0].unwrap();
            for &(y, e) in g.incident(x) {
                if s_set.contains(y) && depth[y.0].is_none() {
                    depth[y.0] = Some(dx + 1);
                    forest.push(e);
                    queue.push_back(y);
                }
            }
        }
    }
    let v1: VertexSet = s_set.iter().filter(|w| depth[w.0].unwrap().is_multiple_of(2)).collect();
    let v2 = s_set.minus(&v1);
    Ok(RsInstance { r_set: r_set.clone(), s_set: s_set.clone(), forest, v1, v2 })
}

/// `R → V1`, forest edges `V1 → V2`, `V2 → R`. Other edges of `G[S]` are
/// left alone.
pub fn rs_orient(
    o: &mut MixedOrientation<'_>,
    r_set: &VertexSet,
    s_set: &VertexSet,
    stage: Stage,
) -> Result<RsInstance, ConstructionError> {
    let inst = rs_instance(o.graph(), r_set, s_set)
        .map_err(|detail| ConstructionError::InvalidRs { stage, detail })?;
    arrow(o, &inst.r_set, &inst.v1, stage)?;
    for &e in &inst.forest {
        let (a, b) = o.graph().endpoints(e);
        if inst.v1.contains(a) {
            o.orient(e, a, b, stage)?;
        } else {
            o.orient(e, b, a, stage)?;
        }
    }
    arrow(o, &inst.v2, &inst.r_set, stage)?;
    Ok(inst)
}

/// Orients `[w, T]` so that `w` has an arc both to and from `T`: the lowest
/// edge goes out, the rest come in. Edges already directed count towards
/// whichever side they serve.
pub fn orient_two_ways(
    o: &mut MixedOrientation<'_>,
    w: VertexId,
    target: &VertexSet,
    stage: Stage,
) -> Result<(), ConstructionError> {
    let edges = o.graph().edges_to(w, target);
    if edges.len() < 2 {
        return Err(ConstructionError::TwoWays { stage, vertex: w, found: edges.len() });
    }
    let g = o.graph();
    let has_out = edges.iter().any(|&e| o.arc(e).is_some_and(|(t, _)| t == w));
    let mut undirected: Vec<EdgeId> = edges.iter().copied().filter(|&e| !o.is_directed(e)).collect();
    if !has_out {
        let Some(first) = undirected.first().copied() else {
            return Err(ConstructionError::TwoWays { stage, vertex: w, found: 0 });
        };
        o.orient(first, w, g.other(first, w), stage)?;
        undirected.remove(0);
    }
    let has_in = edges.iter().any(|&e| o.arc(e).is_some_and(|(_, h)| h == w));
    if !has_in && undirected.is_empty() {
        return Err(ConstructionError::TwoWays { stage, vertex: w, found: 1 });
    }
    for e in undirected {
        o.orient(e, g.other(e, w), w, stage)?;
    }
    Ok(())
}

/// One edge from `[w, C]` enters `w` (the lowest allowed one); every other
/// edge of `[w, T]` leaves `w`. `C` is a subset of `T`.
pub fn one_in_rest_out(
    o: &mut MixedOrientation<'_>,
    w: VertexId,
    candidates: &VertexSet,
    all: &VertexSet,
    stage: Stage,
) -> Result<(), ConstructionError> {
    single_then_rest(o, w, candidates, all, stage, true)
}

/// One edge from `[w, C]` leaves `w`; every other edge of `[w, T]` enters.
pub fn one_out_rest_in(
    o: &mut MixedOrientation<'_>,
    w: VertexId,
    candidates: &VertexSet,
    all: &VertexSet,
    stage: Stage,
) -> Result<(), ConstructionError> {
    single_then_rest(o, w, candidates, all, stage, false)
}

fn single_then_rest(
    o: &mut MixedOrientation<'_>,
    w: VertexId,
    candidates: &VertexSet,
    all: &VertexSet,
    stage: Stage,
    inward: bool,
) -> Result<(), ConstructionError> {
    let g = o.graph();
    let arc = |x: VertexId, e: EdgeId| {
        let y = g.other(e, x);
        if inward { (y, x) } else { (x, y) }
    };
    let picked = g
        .edges_to(w, candidates)
        .into_iter()
        .find(|&e| {
            let (a, b) = arc(w, e);
            o.allows(e, a, b)
        })
        .ok_or_else(|| ConstructionError::NotFound {
            stage,
            vertex: w,
            what: "edge for the single designated direction".into(),
        })?;
    for e in g.edges_to(w, all) {
        let (a, b) = arc(w, e);
        if e == picked {
            o.orient(e, a, b, stage)?;
        } else {
            o.orient(e, b, a, stage)?;
        }
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

    #[test]
    fn triangle_rs() {
        // r = 0, S = {1, 2}
        let g = MultiGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let mut o = MixedOrientation::new(&g);
        rs_orient(&mut o, &set(&[0]), &set(&[1, 2]), Stage::Cons2).unwrap();
        assert!(o.is_complete());
        for w in [1, 2] {
            assert!(o.theta(VertexId(w), &set(&[0])).unwrap().unwrap() <= 2);
        }
    }

    #[test]
    fn path_forest_alternates() {
        // R = {0}, S = path 1-2-3-4, every S vertex joined to 0
        let g = MultiGraph::new(
            5,
            &[(1, 2), (2, 3), (3, 4), (0, 1), (0, 2), (0, 3), (0, 4)],
        )
        .unwrap();
        let inst = rs_instance(&g, &set(&[0]), &set(&[1, 2, 3, 4])).unwrap();
        assert_eq!(inst.v1, set(&[1, 3]));
        assert_eq!(inst.v2, set(&[2, 4]));
        let mut o = MixedOrientation::new(&g);
        rs_orient(&mut o, &set(&[0]), &set(&[1, 2, 3, 4]), Stage::Cons2).unwrap();
        for w in 1..5 {
            let to = o.directed_distances_to(VertexId(0))[w].unwrap();
            let from = o.directed_distances_from(VertexId(0))[w].unwrap();
            assert!(to <= 2 && from <= 2, "vertex {w}: {to} {from}");
        }
    }

    #[test]
    fn rs_rejects_bad_input() {
        let g = MultiGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(rs_instance(&g, &set(&[0]), &set(&[1])).is_err());
        assert!(rs_instance(&g, &set(&[0]), &set(&[1, 2])).is_err());
        let mut o = MixedOrientation::new(&g);
        rs_orient(&mut o, &set(&[0]), &VertexSet::new(), Stage::Cons2).unwrap();
        assert!(o.undirected_edges().len() == 2);
    }

    #[test]
    fn two_ways_patterns() {
        let g = MultiGraph::new(2, &[(0, 1), (0, 1)]).unwrap();
        let mut o = MixedOrientation::new(&g);
        orient_two_ways(&mut o, VertexId(0), &set(&[1]), Stage::Cons4).unwrap();
        assert_eq!(o.arc(EdgeId(0)), Some((VertexId(0), VertexId(1))));
        assert_eq!(o.arc(EdgeId(1)), Some((VertexId(1), VertexId(0))));

        let star = MultiGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let mut o = MixedOrientation::new(&star);
        orient_two_ways(&mut o, VertexId(0), &set(&[1, 2, 3]), Stage::Cons4).unwrap();
        let outs = star.edge_ids().filter(|&e| o.arc(e).unwrap().0 == VertexId(0)).count();
        assert_eq!(outs, 1);

        let single = MultiGraph::new(2, &[(0, 1)]).unwrap();
        let mut o = MixedOrientation::new(&single);
        assert!(matches!(
            orient_two_ways(&mut o, VertexId(0), &set(&[1]), Stage::Cons4),
            Err(ConstructionError::TwoWays { found: 1, .. })
        ));
    }

    #[test]
    fn single_designated_edge() {
        let star = MultiGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let mut o = MixedOrientation::new(&star);
        one_in_rest_out(&mut o, VertexId(0), &set(&[2, 3]), &set(&[1, 2, 3]), Stage::Cons8)
            .unwrap();
        assert_eq!(o.arc(EdgeId(1)), Some((VertexId(2), VertexId(0))));
        assert_eq!(o.arc(EdgeId(0)), Some((VertexId(0), VertexId(1))));
        assert_eq!(o.arc(EdgeId(2)), Some((VertexId(0), VertexId(3))));
    }
}
