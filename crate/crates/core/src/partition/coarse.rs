//! Level one: primed/unprimed halves of every layer except `S_{2,2}`.

use super::{Cell, FineLabels, LayerPartition};
use crate::graph::{MultiGraph, VertexId};
use crate::vset::VertexSet;

fn neighbors_within(g: &MultiGraph, w: VertexId, allowed: &VertexSet) -> bool {
    g.incident(w).iter().all(|&(y, _)| allowed.contains(y))
}

/// Splits `layer` into the members whose neighborhood stays inside
/// `allowed` (primed) and the rest.
fn split_closed(
    g: &MultiGraph,
    layer: &VertexSet,
    allowed: &VertexSet,
) -> (VertexSet, VertexSet) {
    let primed: VertexSet = layer.iter().filter(|&w| neighbors_within(g, w, allowed)).collect();
    let rest = layer.minus(&primed);
    (primed, rest)
}

fn split_single_edge(
    g: &MultiGraph,
    layer: &VertexSet,
    target: &VertexSet,
) -> (VertexSet, VertexSet) {
    let primed: VertexSet = layer.iter().filter(|&w| g.edges_to(w, target).len() == 1).collect();
    let rest = layer.minus(&primed);
    (primed, rest)
}

pub fn coarse_refine(g: &MultiGraph, layers: &LayerPartition) -> FineLabels {
    let mut lab = FineLabels::new(g.vertex_count());
    let s = |i, j| layers.layer(i, j);
    let u = s(0, 1);
    let v = s(1, 0);
    let (s12, s21, s22, s23, s32) = (s(1, 2), s(2, 1), s(2, 2), s(2, 3), s(3, 2));
    let (s33, s34, s43, s44) = (s(3, 3), s(3, 4), s(4, 3), s(4, 4));

    let (ap, a) = split_closed(g, &s12, &s12.union(&u));
    let (bp, b) = split_closed(g, &s21, &s21.union(&v));
    let (ip, i) = split_closed(g, &s23, &s23.union(&a));
    let (jp, j) = split_closed(g, &s32, &s32.union(&b));
    let (kp, k) = split_closed(g, &s34, &s34.union(&i));
    let (lp, l) = split_closed(g, &s43, &s43.union(&j));
    let x_target = s22.union(&i).union(&j).union(&k).union(&l);
    let (xp, x) = split_single_edge(g, &s33, &x_target);
    let m_target = s33.union(&k).union(&l);
    let (mp, m) = split_single_edge(g, &s44, &m_target);

    for (set, cell) in [
        (&u, Cell::U),
        (&v, Cell::V),
        (&s22, Cell::S22),
        (&ap, Cell::Ap),
        (&a, Cell::A),
        (&bp, Cell::Bp),
        (&b, Cell::B),
        (&ip, Cell::Ip),
        (&i, Cell::I),
        (&jp, Cell::Jp),
        (&j, Cell::J),
        (&xp, Cell::Xp),
        (&x, Cell::X),
        (&kp, Cell::Kp),
        (&k, Cell::K),
        (&lp, Cell::Lp),
        (&l, Cell::L),
        (&mp, Cell::Mp),
        (&m, Cell::M),
    ] {
        lab.assign_all(set, cell);
    }
    lab
}
