//! Level two: sub-cells that depend on the graph alone.

use super::{Cell, FineLabels, LayerPartition};
use crate::graph::{bfs_from_set, MultiGraph, VertexId};
use crate::vset::VertexSet;

/// Takes members out of a shrinking remainder in definition order, so each
/// cell is implicitly "minus the cells before it".
pub(super) struct Sieve<'g> {
    g: &'g MultiGraph,
    rest: VertexSet,
}

impl<'g> Sieve<'g> {
    pub(super) fn new(g: &'g MultiGraph, set: VertexSet) -> Self {
        Sieve { g, rest: set }
    }

    pub(super) fn take(&mut self, keep: impl Fn(VertexId) -> bool) -> VertexSet {
        let out: VertexSet = self.rest.iter().filter(|&w| keep(w)).collect();
        self.rest = self.rest.minus(&out);
        out
    }

    /// Remaining members with a neighbor in `set`.
    pub(super) fn near(&mut self, set: &VertexSet) -> VertexSet {
        let g = self.g;
        self.take(|w| g.touches(w, set))
    }

    /// Remaining members isolated in the subgraph induced by the remainder.
    pub(super) fn isolated(&mut self) -> VertexSet {
        let g = self.g;
        let rest = self.rest.clone();
        self.take(|w| g.isolated_in(w, &rest))
    }

    pub(super) fn rest(self) -> VertexSet {
        self.rest
    }
}

pub fn static_refine(g: &MultiGraph, layers: &LayerPartition, lab: &mut FineLabels) {
    let s22 = layers.layer(2, 2);
    let s33 = layers.layer(3, 3);
    let set = |lab: &FineLabels, c| lab.set(c);

    // M
    let mut sv = Sieve::new(g, set(lab, Cell::M));
    let m1 = sv.near(&set(lab, Cell::K));
    let m2 = sv.near(&set(lab, Cell::L));
    let m3 = sv.rest();
    lab.assign_all(&m1, Cell::M1);
    lab.assign_all(&m2, Cell::M2);
    lab.assign_all(&m3, Cell::M3);

    // X'
    let mut sv = Sieve::new(g, set(lab, Cell::Xp));
    let xp1 = sv.near(&m1);
    let xp2 = sv.near(&m2);
    let xp3 = sv.near(&set(lab, Cell::X));
    let xp4 = sv.isolated();
    let xp5 = sv.rest();
    for (s, c) in [(xp1, Cell::Xp1), (xp2, Cell::Xp2), (xp3, Cell::Xp3), (xp4, Cell::Xp4), (xp5, Cell::Xp5)] {
        lab.assign_all(&s, c);
    }

    // K
    let l = set(lab, Cell::L);
    let mut sv = Sieve::new(g, set(lab, Cell::K));
    let k1 = sv.near(&s33.union(&l));
    let k2 = sv.near(&k1);
    let k3 = sv.rest();
    lab.assign_all(&k1, Cell::K1);
    lab.assign_all(&k2, Cell::K2);
    lab.assign_all(&k3, Cell::K3);

    // I
    let j = set(lab, Cell::J);
    let i = set(lab, Cell::I);
    let mut sv = Sieve::new(g, i.clone());
    let i1 = sv.near(&s22.union(&j));
    let i2 = sv.near(&s33);
    let i3 = sv.near(&i1);
    let i4 = sv.near(&i2.union(&k1));
    let i5 = sv.near(&k2.union(&k3));
    let i6 = sv.rest();
    let ii = [i1, i2, i3, i4, i5, i6];
    for (s, c) in ii.iter().zip([Cell::I1, Cell::I2, Cell::I3, Cell::I4, Cell::I5, Cell::I6]) {
        lab.assign_all(s, c);
    }

    // J1..J3, then L, then J4..J6
    let mut sj = Sieve::new(g, j.clone());
    let j1 = sj.near(&s22.union(&i));
    let j2 = sj.near(&s33);
    let j3 = sj.near(&j1);
    let mut sv = Sieve::new(g, l.clone());
    let l1 = sv.near(&set(lab, Cell::K));
    let l2 = sv.near(&l1.union(&m1));
    let lp = set(lab, Cell::Lp);
    let l3 = sv.take(|w| g.touches(w, &j1) && g.touches(w, &lp));
    let l4 = sv.rest();
    let j4 = sj.near(&j2.union(&l1));
    let j5 = sj.near(&l2.union(&l3).union(&l4));
    let j6 = sj.rest();
    let jj = [j1, j2, j3, j4, j5, j6];
    for (s, c) in jj.iter().zip([Cell::J1, Cell::J2, Cell::J3, Cell::J4, Cell::J5, Cell::J6]) {
        lab.assign_all(s, c);
    }
    for (s, c) in [(&l1, Cell::L1), (&l2, Cell::L2), (&l3, Cell::L3), (&l4, Cell::L4)] {
        lab.assign_all(s, c);
    }

    // A
    let b = set(lab, Cell::B);
    let a = set(lab, Cell::A);
    let mut sv = Sieve::new(g, a.clone());
    let mut aa = vec![sv.near(&b), sv.near(&s22)];
    let a1 = aa[0].clone();
    aa.push(sv.near(&a1));
    for ik in ii.iter().take(5) {
        aa.push(sv.near(ik));
    }
    aa.push(sv.rest());
    let a_cells = [
        Cell::A1, Cell::A2, Cell::A3, Cell::A4, Cell::A5, Cell::A6, Cell::A7, Cell::A8, Cell::A9,
    ];
    for (s, c) in aa.iter().zip(a_cells) {
        lab.assign_all(s, c);
    }

    // B
    let mut sv = Sieve::new(g, b);
    let mut bb = vec![sv.near(&a), sv.near(&s22)];
    let b1 = bb[0].clone();
    bb.push(sv.near(&b1));
    for jk in &jj {
        bb.push(sv.near(jk));
    }
    bb.push(sv.rest());
    let b_cells = [
        Cell::B1, Cell::B2, Cell::B3, Cell::B4, Cell::B5, Cell::B6, Cell::B7, Cell::B8, Cell::B9,
        Cell::B10,
    ];
    for (s, c) in bb.iter().zip(b_cells) {
        lab.assign_all(s, c);
    }
    let mut sv = Sieve::new(g, bb[9].clone());
    let b10a = sv.isolated();
    lab.assign_all(&b10a, Cell::B10a);
    lab.assign_all(&sv.rest(), Cell::B10b);

    // L'
    let kp = set(lab, Cell::Kp);
    let dk = bfs_from_set(g, &kp);
    let x = set(lab, Cell::X);
    let i12k1 = ii[0].union(&ii[1]).union(&k1);
    let mut sv = Sieve::new(g, lp.clone());
    let lp1 = sv.near(&l1.union(&l2).union(&l3));
    let lp2 = sv.take(|w| {
        has_layered_path(g, w, &dk, &[&l4, &x, &i12k1, &kp])
    });
    let lp3 = sv.isolated();
    let lp4 = sv.take(|w| dk[w.0] == Some(3));
    let lp5 = sv.rest();
    for (s, c) in [(&lp1, Cell::Lp1), (&lp2, Cell::Lp2), (&lp3, Cell::Lp3), (&lp4, Cell::Lp4), (&lp5, Cell::Lp5)] {
        lab.assign_all(s, c);
    }
    let mut sv = Sieve::new(g, lp1);
    let lp11 = sv.near(&l1.union(&l3));
    let lp12 = sv.near(&jj[0]);
    lab.assign_all(&lp11, Cell::Lp11);
    lab.assign_all(&lp12, Cell::Lp12);
    lab.assign_all(&sv.rest(), Cell::Lp13);
    let mut sv = Sieve::new(g, lp4.clone());
    let lp41 = sv.near(&lp5);
    let lp42 = sv.isolated();
    lab.assign_all(&lp41, Cell::Lp41);
    lab.assign_all(&lp42, Cell::Lp42);
    lab.assign_all(&sv.rest(), Cell::Lp43);
    let mut sv = Sieve::new(g, lp5);
    let lp51 = sv.near(&lp4);
    let rest = sv.rest.clone();
    let j6 = &jj[5];
    let lp52 = sv.take(|w| g.isolated_in(w, &rest) || g.touches(w, j6));
    let lp53 = sv.isolated();
    lab.assign_all(&lp51, Cell::Lp51);
    lab.assign_all(&lp52, Cell::Lp52);
    lab.assign_all(&lp53, Cell::Lp53);
    lab.assign_all(&sv.rest(), Cell::Lp54);

    // I6
    let a123 = aa[0].union(&aa[1]).union(&aa[2]);
    let mut sv = Sieve::new(g, ii[5].clone());
    let i61 = sv.near(&a123);
    let i62 = sv.rest();
    lab.assign_all(&i61, Cell::I61);
    lab.assign_all(&i62, Cell::I62);
    let mut sv = Sieve::new(g, i61);
    let i61a = sv.near(&i62);
    let i61b = sv.isolated();
    lab.assign_all(&i61a, Cell::I61a);
    lab.assign_all(&i61b, Cell::I61b);
    lab.assign_all(&sv.rest(), Cell::I61c);

    // X, one cell per case of the S22 rule
    let km1 = set(lab, Cell::K).union(&m1);
    for w in set(lab, Cell::X).iter() {
        let c = match g.edges_to(w, &s22).len() {
            0 => Cell::X0,
            1 if g.touches(w, &j) => Cell::XJ,
            1 if g.touches(w, &i) => Cell::XI,
            1 if g.touches(w, &km1) => Cell::XKM,
            1 => Cell::XL,
            _ => Cell::XMulti,
        };
        lab.assign(w, c);
    }
}

/// Whether some shortest path from `w` towards the set at distance 0 of `dist`
/// visits `steps[0]`, `steps[1]`, ... in order, one step per hop.
pub(super) fn has_layered_path(
    g: &MultiGraph,
    w: VertexId,
    dist: &[Option<u32>],
    steps: &[&VertexSet],
) -> bool {
    fn go(
        g: &MultiGraph,
        x: VertexId,
        dist: &[Option<u32>],
        steps: &[&VertexSet],
    ) -> bool {
        let Some((first, rest)) = steps.split_first() else {
            return true;
        };
        let dx = dist[x.0];
        g.incident(x).iter().any(|&(y, _)| {
            first.contains(y)
                && dx.is_some()
                && dist[y.0].map(|d| d + 1) == dx
                && go(g, y, dist, rest)
        })
    }
    dist[w.0] == Some(steps.len() as u32) && go(g, w, dist, steps)
}
