//! Independent re-evaluation of the partition, one vertex at a time.
//!
//! Every cell is re-derived from its definition: for each vertex and each
//! level of its label path, the first sibling whose predicate holds must be
//! the one assigned. Staged cells are judged against the snapshots taken at
//! their checkpoint. The structural facts the stages rely on are asserted
//! on top.

use std::fmt;

use super::refine::has_layered_path;
use super::{Cell, Checkpoint, Partition};
use crate::graph::{bfs_distances, bfs_from_set, MultiGraph, VertexId};
use crate::vset::VertexSet;

use Cell::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Issue {
    pub vertex: Option<VertexId>,
    pub detail: String,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.vertex {
            Some(w) => write!(f, "vertex {w}: {}", self.detail),
            None => f.write_str(&self.detail),
        }
    }
}

enum Pred {
    Near(VertexSet),
    In(VertexSet),
    /// Isolated among the parent members not claimed by earlier siblings.
    Isolated,
    Test(Box<dyn Fn(VertexId) -> bool>),
    Rest,
}

struct Checker<'a> {
    g: &'a MultiGraph,
    p: &'a Partition,
    issues: Vec<Issue>,
}

impl<'a> Checker<'a> {
    fn c(&self, cells: &[Cell]) -> VertexSet {
        self.p.labels.union(cells)
    }

    fn vd(&self, cp: Checkpoint) -> VertexSet {
        self.p.labels.snapshots.vd.get(&cp).cloned().unwrap_or_default()
    }

    fn issue(&mut self, w: Option<VertexId>, detail: String) {
        self.issues.push(Issue { vertex: w, detail });
    }

    /// The child of `parent` that `w` should land in.
    fn expected(&self, w: VertexId, parent: Cell, rules: &[(Cell, Pred)]) -> Option<Cell> {
        let mut rest = self.p.labels.set(parent);
        for (cell, pred) in rules {
            let hit = match pred {
                Pred::Near(s) => self.g.touches(w, s),
                Pred::In(s) => s.contains(w),
                Pred::Isolated => self.g.isolated_in(w, &rest),
                Pred::Test(f) => f(w),
                Pred::Rest => true,
            };
            if hit {
                return Some(*cell);
            }
            rest = rest.minus(&self.p.labels.set(*cell));
        }
        None
    }

    fn check_level(&mut self, parent: Cell, rules: Vec<(Cell, Pred)>) {
        for w in self.p.labels.set(parent).iter() {
            let path = self.p.labels.path(w);
            let pos = path.iter().position(|&c| c == parent).expect("member");
            let actual = path.get(pos + 1).copied();
            let want = self.expected(w, parent, &rules);
            if actual != want {
                let name = |c: Option<Cell>| c.map_or("none", |c| c.name());
                let detail = format!("under {parent}: assigned {}, definition gives {}", name(actual), name(want));
                self.issue(Some(w), detail);
            }
        }
    }

    fn top_level(&mut self) {
        let g = self.g;
        let base = self.p.base;
        let du = bfs_distances(g, base.u);
        let dv = bfs_distances(g, base.v);
        let layer = |i: u32, j: u32| -> VertexSet {
            g.vertices().filter(|w| du[w.0] == Some(i) && dv[w.0] == Some(j)).collect()
        };
        let within = |w: VertexId, allowed: &VertexSet| g.neighbors(w).is_subset(allowed);
        let u = VertexSet::single(base.u);
        let v = VertexSet::single(base.v);
        let (s12, s21, s23, s32) = (layer(1, 2), layer(2, 1), layer(2, 3), layer(3, 2));
        let (s34, s43) = (layer(3, 4), layer(4, 3));
        let a: VertexSet = s12.iter().filter(|&w| !within(w, &s12.union(&u))).collect();
        let b: VertexSet = s21.iter().filter(|&w| !within(w, &s21.union(&v))).collect();
        let i: VertexSet = s23.iter().filter(|&w| !within(w, &s23.union(&a))).collect();
        let j: VertexSet = s32.iter().filter(|&w| !within(w, &s32.union(&b))).collect();
        let k: VertexSet = s34.iter().filter(|&w| !within(w, &s34.union(&i))).collect();
        let l: VertexSet = s43.iter().filter(|&w| !within(w, &s43.union(&j))).collect();
        let x_target = layer(2, 2).union(&i).union(&j).union(&k).union(&l);
        let m_target = layer(3, 3).union(&k).union(&l);
        for w in g.vertices() {
            let (i0, j0) = match (du[w.0], dv[w.0]) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    self.issue(Some(w), "unreachable from the base edge".into());
                    continue;
                }
            };
            let want = match (i0, j0) {
                (0, 1) => Some(U),
                (1, 0) => Some(V),
                (2, 2) => Some(S22),
                (1, 2) => Some(if a.contains(w) { A } else { Ap }),
                (2, 1) => Some(if b.contains(w) { B } else { Bp }),
                (2, 3) => Some(if i.contains(w) { I } else { Ip }),
                (3, 2) => Some(if j.contains(w) { J } else { Jp }),
                (3, 4) => Some(if k.contains(w) { K } else { Kp }),
                (4, 3) => Some(if l.contains(w) { L } else { Lp }),
                (3, 3) => Some(if g.edges_to(w, &x_target).len() == 1 { Xp } else { X }),
                (4, 4) => Some(if g.edges_to(w, &m_target).len() == 1 { Mp } else { M }),
                _ => None,
            };
            let actual = self.p.labels.path(w).first().copied();
            if actual != want {
                self.issue(Some(w), format!("top level {actual:?}, definition gives {want:?} at ({i0},{j0})"));
            }
            if let Some(c) = self.p.labels.finest(w) {
                if !c.children().is_empty() {
                    self.issue(Some(w), format!("left in {c}, which has sub-cells"));
                }
            }
        }
    }

    fn static_levels(&mut self) {
        let g = self.g;
        let s22 = self.p.layers.layer(2, 2);
        let s33 = self.p.layers.layer(3, 3);
        let c = |x: &Self, cs: &[Cell]| x.c(cs);
        self.check_level(M, vec![(M1, Pred::Near(c(self, &[K]))), (M2, Pred::Near(c(self, &[L]))), (M3, Pred::Rest)]);
        self.check_level(
            Xp,
            vec![
                (Xp1, Pred::Near(c(self, &[M1]))),
                (Xp2, Pred::Near(c(self, &[M2]))),
                (Xp3, Pred::Near(c(self, &[X]))),
                (Xp4, Pred::Isolated),
                (Xp5, Pred::Rest),
            ],
        );
        self.check_level(
            K,
            vec![
                (K1, Pred::Near(s33.union(&c(self, &[L])))),
                (K2, Pred::Near(c(self, &[K1]))),
                (K3, Pred::Rest),
            ],
        );
        self.check_level(
            I,
            vec![
                (I1, Pred::Near(s22.union(&c(self, &[J])))),
                (I2, Pred::Near(s33.clone())),
                (I3, Pred::Near(c(self, &[I1]))),
                (I4, Pred::Near(c(self, &[I2, K1]))),
                (I5, Pred::Near(c(self, &[K2, K3]))),
                (I6, Pred::Rest),
            ],
        );
        self.check_level(
            J,
            vec![
                (J1, Pred::Near(s22.union(&c(self, &[I])))),
                (J2, Pred::Near(s33.clone())),
                (J3, Pred::Near(c(self, &[J1]))),
                (J4, Pred::Near(c(self, &[J2, L1]))),
                (J5, Pred::Near(c(self, &[L2, L3, L4]))),
                (J6, Pred::Rest),
            ],
        );
        let (j1, lp) = (c(self, &[J1]), c(self, &[Lp]));
        self.check_level(
            L,
            vec![
                (L1, Pred::Near(c(self, &[K]))),
                (L2, Pred::Near(c(self, &[L1, M1]))),
                (L3, Pred::Test(Box::new({
                    let g = g.clone();
                    move |w| g.touches(w, &j1) && g.touches(w, &lp)
                }))),
                (L4, Pred::Rest),
            ],
        );
        let mut rules = vec![
            (A1, Pred::Near(c(self, &[B]))),
            (A2, Pred::Near(s22.clone())),
            (A3, Pred::Near(c(self, &[A1]))),
        ];
        for (ac, ic) in [(A4, I1), (A5, I2), (A6, I3), (A7, I4), (A8, I5)] {
            rules.push((ac, Pred::Near(c(self, &[ic]))));
        }
        rules.push((A9, Pred::Rest));
        self.check_level(A, rules);
        let mut rules = vec![
            (B1, Pred::Near(c(self, &[A]))),
            (B2, Pred::Near(s22.clone())),
            (B3, Pred::Near(c(self, &[B1]))),
        ];
        for (bc, jc) in [(B4, J1), (B5, J2), (B6, J3), (B7, J4), (B8, J5), (B9, J6)] {
            rules.push((bc, Pred::Near(c(self, &[jc]))));
        }
        rules.push((B10, Pred::Rest));
        self.check_level(B, rules);
        self.check_level(B10, vec![(B10a, Pred::Isolated), (B10b, Pred::Rest)]);

        let kp = c(self, &[Kp]);
        let dk = bfs_from_set(g, &kp);
        let l4 = c(self, &[L4]);
        let x = c(self, &[X]);
        let i12k1 = c(self, &[I1, I2, K1]);
        let dk3: VertexSet = g.vertices().filter(|w| dk[w.0] == Some(3)).collect();
        self.check_level(
            Lp,
            vec![
                (Lp1, Pred::Near(c(self, &[L1, L2, L3]))),
                (Lp2, Pred::Test(Box::new({
                    let g = g.clone();
                    move |w| has_layered_path(&g, w, &dk, &[&l4, &x, &i12k1, &kp])
                }))),
                (Lp3, Pred::Isolated),
                (Lp4, Pred::In(dk3)),
                (Lp5, Pred::Rest),
            ],
        );
        self.check_level(
            Lp1,
            vec![(Lp11, Pred::Near(c(self, &[L1, L3]))), (Lp12, Pred::Near(c(self, &[J1]))), (Lp13, Pred::Rest)],
        );
        self.check_level(
            Lp4,
            vec![(Lp41, Pred::Near(c(self, &[Lp5]))), (Lp42, Pred::Isolated), (Lp43, Pred::Rest)],
        );
        let lp5_rest = c(self, &[Lp5]).minus(&c(self, &[Lp51]));
        let j6 = c(self, &[J6]);
        self.check_level(
            Lp5,
            vec![
                (Lp51, Pred::Near(c(self, &[Lp4]))),
                (Lp52, Pred::Test(Box::new({
                    let g = g.clone();
                    move |w| g.isolated_in(w, &lp5_rest) || g.touches(w, &j6)
                }))),
                (Lp53, Pred::Isolated),
                (Lp54, Pred::Rest),
            ],
        );
        self.check_level(I6, vec![(I61, Pred::Near(c(self, &[A1, A2, A3]))), (I62, Pred::Rest)]);
        self.check_level(
            I61,
            vec![(I61a, Pred::Near(c(self, &[I62]))), (I61b, Pred::Isolated), (I61c, Pred::Rest)],
        );

        let (j, i) = (c(self, &[J]), c(self, &[I]));
        let km1 = c(self, &[K, M1]);
        let x_rule = move |w: VertexId, want: Cell, g: &MultiGraph| {
            let cell = match g.edges_to(w, &s22).len() {
                0 => X0,
                1 if g.touches(w, &j) => XJ,
                1 if g.touches(w, &i) => XI,
                1 if g.touches(w, &km1) => XKM,
                1 => XL,
                _ => XMulti,
            };
            cell == want
        };
        let x_rule = std::rc::Rc::new(x_rule);
        let rules = [X0, XMulti, XJ, XI, XKM, XL]
            .into_iter()
            .map(|cell| {
                let (f, g) = (x_rule.clone(), g.clone());
                (cell, Pred::Test(Box::new(move |w| f(w, cell, &g))))
            })
            .collect();
        self.check_level(X, rules);
    }

    fn three_way(&mut self, parent: Cell, cells: [Cell; 3], other: Cell) {
        let rules = vec![
            (cells[0], Pred::Near(self.c(&[other]))),
            (cells[1], Pred::Isolated),
            (cells[2], Pred::Rest),
        ];
        self.check_level(parent, rules);
    }

    fn staged_levels(&mut self) {
        let g = self.g;
        let [vd1, vd2, vd3, vd4] = [Checkpoint::D1, Checkpoint::D2, Checkpoint::D3, Checkpoint::D4].map(|cp| self.vd(cp));
        // D1
        self.check_level(M3, vec![(M31, Pred::In(vd1.clone())), (M32, Pred::Rest)]);
        self.check_level(Mp, vec![(Mp1, Pred::In(vd1)), (Mp2, Pred::Rest)]);
        self.check_level(Mp2, vec![(Mp21, Pred::Near(self.c(&[M]))), (Mp22, Pred::Isolated), (Mp23, Pred::Rest)]);
        // D2
        self.check_level(Bp, vec![(Bp1, Pred::In(vd2.clone())), (Bp2, Pred::Isolated), (Bp3, Pred::Rest)]);
        let b16 = self.c(&[B1, B2, B3, B4, B5, B6]);
        self.check_level(
            Jp,
            vec![
                (Jp1, Pred::In(vd2)),
                (Jp2, Pred::Near(self.c(&[J1, J2, J3]))),
                (Jp3, Pred::Near(self.c(&[J4, J5, J6]))),
                (Jp4, Pred::Isolated),
                (Jp5, Pred::Near(b16.clone())),
                (Jp6, Pred::Rest),
            ],
        );
        for (parent, a, b) in [(Jp3, Jp31, Jp32), (Jp4, Jp41, Jp42)] {
            self.check_level(parent, vec![(a, Pred::Near(b16.clone())), (b, Pred::Rest)]);
        }
        self.three_way(Jp5, [Jp51, Jp52, Jp53], Jp6);
        self.three_way(Jp6, [Jp61, Jp62, Jp63], Jp5);
        // D3
        let a = self.c(&[A]);
        let arcs = self.p.labels.snapshots.d3_arcs.clone().unwrap_or_default();
        let into_from_a = {
            let g = g.clone();
            move |w: VertexId| {
                g.incident(w).iter().any(|&(y, e)| a.contains(y) && arcs.get(e.0) == Some(&Some((y, w))))
            }
        };
        self.check_level(I61b, vec![(I61ba, Pred::Test(Box::new(into_from_a))), (I61bb, Pred::Rest)]);
        let i61 = self.c(&[I61]);
        let i62c = self.c(&[I62c]);
        let i = self.c(&[I]);
        let a14 = self.c(&[A1, A2, A3, A4]);
        self.check_level(
            Ip,
            vec![
                (Ip1, Pred::In(vd3.clone())),
                (Ip2, Pred::Near(i61.minus(&self.c(&[I61bb])))),
                (Ip3, Pred::In(vd4.clone())),
                (Ip4, Pred::Near(i.minus(&i62c))),
                (Ip5, Pred::Near(i62c.clone())),
                (Ip6, Pred::Isolated),
                (Ip7, Pred::Near(a14)),
                (Ip8, Pred::Rest),
            ],
        );
        self.check_level(
            I62,
            vec![(I62a, Pred::Near(i61.clone())), (I62b, Pred::In(vd3.clone())), (I62c, Pred::Rest)],
        );
        self.check_level(
            A9,
            vec![
                (A91, Pred::Near(self.c(&[Ip1]))),
                (A92, Pred::Near(self.c(&[Ip2]))),
                (A93, Pred::Near(self.c(&[I61, I62a, I62b]))),
                (A94, Pred::Isolated),
                (A95, Pred::Rest),
            ],
        );
        // D4
        self.check_level(Ap, vec![(Ap1, Pred::In(vd4.clone())), (Ap2, Pred::Isolated), (Ap3, Pred::Rest)]);
        let a16 = self.c(&[A1, A2, A3, A4, A5, A6]);
        for (parent, x, y) in [(Ip4, Ip41, Ip42), (Ip5, Ip51, Ip52), (Ip6, Ip61, Ip62)] {
            self.check_level(parent, vec![(x, Pred::Near(a16.clone())), (y, Pred::Rest)]);
        }
        self.three_way(Ip7, [Ip71, Ip72, Ip73], Ip8);
        self.three_way(Ip8, [Ip81, Ip82, Ip83], Ip7);
        let feed = self.c(&[Ip1, Ip2, Ip3, Ip41, Ip51]).union(&i.minus(&self.c(&[I6])));
        self.check_level(
            I62c,
            vec![(I62ca, Pred::In(vd4.clone())), (I62cb, Pred::Near(feed)), (I62cc, Pred::Rest)],
        );
        let db = bfs_from_set(g, &self.c(&[B]));
        let db3: VertexSet = g.vertices().filter(|w| db[w.0] == Some(3)).collect();
        let i_low = i.minus(&i62c);
        let i_mid = self.c(&[I62ca, I62cb]);
        let i_top = self.c(&[I62cc]);
        let both = |x: VertexSet, y: VertexSet| {
            let g = g.clone();
            Pred::Test(Box::new(move |w| g.touches(w, &x) && g.touches(w, &y)))
        };
        self.check_level(
            Kp,
            vec![
                (Kp1, Pred::In(vd3)),
                (Kp2, Pred::In(db3)),
                (Kp3, Pred::Near(self.c(&[Kp1, Kp2]))),
                (Kp4, Pred::Near(self.c(&[K]))),
                (Kp5, both(i_low.clone(), i_top.clone())),
                (Kp6, both(i_mid.clone(), i_top)),
                (Kp7, Pred::Isolated),
                (Kp8, Pred::Near(i_low)),
                (Kp9, Pred::Near(i_mid)),
                (Kp10, Pred::Rest),
            ],
        );
        self.three_way(Kp2, [Kp21, Kp22, Kp23], Kp3);
        self.three_way(Kp8, [Kp81, Kp82, Kp83], Kp9);
        self.three_way(Kp9, [Kp91, Kp92, Kp93], Kp8);
    }

    /// Raw definitions the sieve only reaches by complement.
    fn complements(&mut self) {
        let b710 = self.c(&[B7, B8, B9, B10]);
        let a59 = self.c(&[A5, A6, A7, A8, A9]);
        let a79 = self.c(&[A7, A8, A9]);
        for (cells, set, what) in [
            (vec![Jp6], &b710, "B7..B10"),
            (vec![Ip8], &a59, "A5..A9"),
            (vec![Ip42, Ip52, Ip62], &a79, "A7..A9"),
        ] {
            for w in self.c(&cells).iter() {
                if !self.g.touches(w, set) {
                    self.issue(Some(w), format!("in {} without a neighbor in {what}", cells[0]));
                }
            }
        }
    }

    fn structural_facts(&mut self) {
        let g = self.g;
        let s22 = self.p.layers.layer(2, 2);
        let s33 = self.p.layers.layer(3, 3);
        let s44 = self.p.layers.layer(4, 4);
        let [i, j, k, l] = [I, J, K, L].map(|c| self.c(&[c]));
        for w in s44.iter() {
            if !g.touches(w, &s33) && !(g.touches(w, &k) && g.touches(w, &l)) {
                self.issue(Some(w), "S44 vertex off S33 misses K or L".into());
            }
        }
        for w in self.c(&[Mp]).iter() {
            if g.edges_to(w, &s33).len() != 1 || g.touches(w, &k.union(&l)) {
                self.issue(Some(w), "M' vertex without a single S33 edge".into());
            }
        }
        for w in s33.iter() {
            if !g.touches(w, &s22) && !(g.touches(w, &i) && g.touches(w, &j)) {
                self.issue(Some(w), "S33 vertex off S22 misses I or J".into());
            }
        }
        let ijkl = i.union(&j).union(&k).union(&l);
        for w in self.c(&[Xp]).iter() {
            if g.edges_to(w, &s22).len() != 1 || g.touches(w, &ijkl) {
                self.issue(Some(w), "X' vertex without a single S22 edge".into());
            }
        }
        let table = [
            (A9, self.c(&[B, I1, I2, I3, I4, I5]), self.c(&[I6, Ip])),
            (B10, self.c(&[A, J]), self.c(&[Jp])),
            (I6, self.c(&[J, K]).union(&s33), self.c(&[Kp])),
            (J6, self.c(&[I, L]).union(&s33), self.c(&[Lp])),
            (K3, self.c(&[L]).union(&s33), self.c(&[M1])),
            (L4, self.c(&[K]), self.c(&[M]).union(&s33)),
        ];
        for (cell, w1, w2) in table {
            for w in self.c(&[cell]).iter() {
                if g.touches(w, &s22) || g.touches(w, &w1) || !g.touches(w, &w2) {
                    self.issue(Some(w), format!("{cell} neighborhood pattern fails"));
                }
            }
        }
        let empty: &[Cell] = if self.p.base.gstar == 5 { &[Kp10, Kp6, Kp9, A1, B1] } else { &[Kp10] };
        for &cell in empty {
            if !self.c(&[cell]).is_empty() {
                self.issue(None, format!("{cell} is not empty at g* = {}", self.p.base.gstar));
            }
        }
        if !self.p.labels.istar.is_subset(&i.minus(&self.c(&[I62]))) {
            self.issue(None, "I* reaches into I62".into());
        }
    }
}

/// Everything wrong with `p` as a partition of `g`, empty when sound.
/// Expects the labels after checkpoint D4.
pub fn check_partition(g: &MultiGraph, p: &Partition) -> Vec<Issue> {
    let mut ck = Checker { g, p, issues: Vec::new() };
    ck.top_level();
    ck.static_levels();
    ck.staged_levels();
    ck.complements();
    ck.structural_facts();
    ck.issues
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::generate;
    use crate::partition::FineLabels;
    use crate::pipeline::orient_diameter4;

    /// Copy of `lab` with the path of `w` replaced.
    fn relabel(lab: &FineLabels, w: VertexId, path: &[Cell]) -> FineLabels {
        let mut out = FineLabels::new(lab.vertex_count());
        for x in 0..lab.vertex_count() {
            let x = VertexId(x);
            let p = if x == w { path } else { lab.path(x) };
            for &c in p {
                out.assign(x, c);
            }
        }
        out.istar = lab.istar.clone();
        out.snapshots = lab.snapshots.clone();
        out
    }

    #[test]
    fn generated_partitions_are_sound() {
        for gs in [4, 5] {
            for g in generate(11, gs, 8, 60) {
                let res = orient_diameter4(&g).unwrap();
                let issues = check_partition(&g, &res.partition);
                assert!(issues.is_empty(), "{}", issues[0]);
            }
        }
    }

    #[test]
    fn moved_vertex_is_reported() {
        let g = generate(11, 5, 1, 60).remove(0);
        let res = orient_diameter4(&g).unwrap();
        let lab = &res.partition.labels;
        let (w, path) = g
            .vertices()
            .find_map(|w| {
                let path = lab.path(w);
                let last = *path.last()?;
                let sib = last.parent()?.children().into_iter().find(|&c| c != last && c.children().is_empty())?;
                let mut p = path.to_vec();
                *p.last_mut().unwrap() = sib;
                Some((w, p))
            })
            .expect("some leaf has a sibling");
        let mut p = res.partition.clone();
        p.labels = relabel(lab, w, &path);
        let issues = check_partition(&g, &p);
        assert!(issues.iter().any(|i| i.vertex == Some(w)), "{issues:?}");
    }

    #[test]
    fn unrefined_vertex_is_reported() {
        let g = generate(11, 4, 1, 60).remove(0);
        let res = orient_diameter4(&g).unwrap();
        let lab = &res.partition.labels;
        let w = g.vertices().find(|&w| lab.path(w).len() > 1).unwrap();
        let mut p = res.partition.clone();
        p.labels = relabel(lab, w, &lab.path(w)[..1]);
        let issues = check_partition(&g, &p);
        assert!(issues.iter().any(|i| i.vertex == Some(w) && i.detail.contains("sub-cells")), "{issues:?}");
    }
}
