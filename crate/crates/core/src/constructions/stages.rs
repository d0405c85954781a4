//! One function per orientation stage.

use super::primitives::{arrow, one_in_rest_out, one_out_rest_in, orient_two_ways, rs_orient};
use super::walk::{find_mixed_closure, orient_walk, MixedWalk, WalkDir};
use super::ConstructionError;
use crate::graph::{bfs_from_set, edge_girth, MultiGraph, VertexId};
use crate::mixed::{MixedOrientation, Stage};
use crate::partition::{Cell, Partition};
use crate::vset::VertexSet;

use Cell::*;

type R = Result<(), ConstructionError>;

/// Everything a stage reads plus the orientation it writes.
pub struct Ctx<'a, 'g> {
    pub o: &'a mut MixedOrientation<'g>,
    pub part: &'a Partition,
    pub stage: Stage,
}

impl<'a, 'g> Ctx<'a, 'g> {
    fn g(&self) -> &'g MultiGraph {
        self.o.graph()
    }

    fn c(&self, cells: &[Cell]) -> VertexSet {
        self.part.labels.union(cells)
    }

    fn layer(&self, i: u32, j: u32) -> VertexSet {
        self.part.layers.layer(i, j)
    }

    fn u(&self) -> VertexSet {
        VertexSet::single(self.part.base.u)
    }

    fn v(&self) -> VertexSet {
        VertexSet::single(self.part.base.v)
    }

    fn to(&mut self, from: &VertexSet, to: &VertexSet) -> R {
        arrow(self.o, from, to, self.stage)
    }

    /// `X0 → X1 → X2 → ...`
    fn chain(&mut self, sets: &[&VertexSet]) -> R {
        for pair in sets.windows(2) {
            self.to(pair[0], pair[1])?;
        }
        Ok(())
    }

    fn rs(&mut self, r_set: &VertexSet, s_set: &VertexSet) -> R {
        rs_orient(self.o, r_set, s_set, self.stage).map(|_| ())
    }

    fn two_ways(&mut self, w: VertexId, target: &VertexSet) -> R {
        orient_two_ways(self.o, w, target, self.stage)
    }

    fn not_found(&self, w: VertexId, what: &str) -> ConstructionError {
        ConstructionError::NotFound { stage: self.stage, vertex: w, what: what.into() }
    }

    /// Searches `steps` in order and orients the first mixed walk found.
    fn walk_any(
        &mut self,
        w: VertexId,
        tries: &[Vec<VertexSet>],
        accept: &dyn Fn(&MixedWalk, WalkDir) -> bool,
        what: &str,
    ) -> R {
        for steps in tries {
            if let Some((walk, dir)) = find_mixed_closure(self.o, steps, accept) {
                orient_walk(self.o, &walk, dir, self.stage)?;
                return Ok(());
            }
        }
        Err(self.not_found(w, what))
    }

    /// Mixed cycle of shortest possible length through an edge `hub w`,
    /// traversed starting `hub, w`.
    fn shortest_cycle_through(&mut self, hub: VertexId, w: VertexId) -> R {
        let g = self.g();
        let edges = g.edges_to(w, &VertexSet::single(hub));
        let Some(&e) = edges.first() else {
            return Err(self.not_found(w, "edge to the hub"));
        };
        let r = if edges.len() >= 2 {
            2
        } else {
            match edge_girth(g, e) {
                Some(r) => r as usize,
                None => return Err(self.not_found(w, "cycle through the hub edge")),
            }
        };
        let all: VertexSet = g.vertices().collect();
        let mut steps = vec![VertexSet::single(hub), VertexSet::single(w)];
        steps.extend(std::iter::repeat_n(all, r.saturating_sub(2) + 1).collect::<Vec<_>>());
        let last = steps.len() - 1;
        steps[last] = VertexSet::single(hub);
        self.walk_any(w, &[steps], &|_, _| true, "mixed shortest cycle")
    }

    /// `hub` has a single edge to `w`: a mixed 3-cycle `hub w y hub` with
    /// `y ∈ via`, or two ways when the edge is parallel.
    fn hub_triangle_or_two_ways(&mut self, hub: VertexId, w: VertexId, via: &VertexSet) -> R {
        let hs = VertexSet::single(hub);
        if self.g().edges_to(w, &hs).len() >= 2 {
            return self.two_ways(w, &hs);
        }
        let steps = vec![hs.clone(), VertexSet::single(w), via.clone(), hs];
        self.walk_any(w, &[steps], &|_, _| true, "mixed 3-cycle")
    }

    fn undirected(&self, w: VertexId) -> bool {
        self.o.is_undirected_vertex(w)
    }

    fn nbrs(&self, w: VertexId, set: &VertexSet) -> VertexSet {
        self.g().neighbors(w).intersect(set)
    }

    /// Member of `candidates` with the most neighbors in `target`, lowest id
    /// on ties.
    fn best_by_neighbors(
        &self,
        candidates: &VertexSet,
        target: &VertexSet,
    ) -> Option<(VertexId, usize)> {
        let mut best: Option<(VertexId, usize)> = None;
        for y in candidates.iter() {
            let k = self.nbrs(y, target).len();
            if best.is_none_or(|(_, b)| k > b) {
                best = Some((y, k));
            }
        }
        best
    }
}

/// Runs one stage against the current partition.
pub fn apply_stage(o: &mut MixedOrientation<'_>, part: &Partition, stage: Stage) -> R {
    let mut cx = Ctx { o, part, stage };
    match stage {
        Stage::Cons1 => cons1(&mut cx),
        Stage::Cons4 => cons4(&mut cx),
        Stage::Cons5 => cons5(&mut cx),
        Stage::Cons6 => cons6(&mut cx),
        Stage::Cons2 => cons2(&mut cx),
        Stage::Cons3 => cons3(&mut cx),
        Stage::Cons8_2 => cons8_2(&mut cx),
        Stage::Cons8_1 => cons8_1(&mut cx),
        Stage::Cons8 => cons8(&mut cx),
        Stage::Cons8_5 => cons8_5(&mut cx),
        Stage::Cons10 => cons10(&mut cx),
        Stage::Cons12 => cons12(&mut cx),
        Stage::Cons11 => cons11(&mut cx),
        Stage::Baseline | Stage::Input => Err(ConstructionError::Internal {
            stage,
            detail: "not a construction stage".into(),
        }),
    }
}

fn cons1(cx: &mut Cx) -> R {
    let base = cx.part.base;
    cx.o.orient(base.e, base.u, base.v, cx.stage)?;
    let (u, v) = (cx.u(), cx.v());
    let s22 = cx.layer(2, 2);
    let s33 = cx.layer(3, 3);
    let [a, b, i, j, k, l, m, lp] = [A, B, I, J, K, L, M, Lp].map(|c| cx.c(&[c]));

    cx.to(&b, &a.union(&j))?;
    cx.to(&b.union(&j), &s22)?;
    cx.to(&s22, &a.union(&i))?;
    cx.to(&j, &i.union(&s33))?;
    cx.to(&l, &s33.union(&k).union(&m))?;
    cx.to(&s33, &k.union(&i))?;
    cx.to(&m, &k)?;
    cx.to(&k, &i)?;
    let l3 = cx.c(&[L3]);
    let j1 = cx.c(&[J1]);
    cx.to(&j, &cx.c(&[L1, L2, L4]))?;
    let lp_l3: VertexSet = lp.iter().filter(|&w| cx.g().touches(w, &l3)).collect();
    cx.to(&j, &lp_l3)?;
    cx.to(&lp.union(&j.minus(&j1)), &l3)?;
    cx.to(&l3, &j1)?;
    cx.to(&cx.c(&[I1, I2, I3, I4, I5]), &a)?;
    cx.to(&cx.c(&[A1, A2, A3, A4, A5, A6, A7, A8]), &u)?;
    cx.to(&v, &cx.c(&[B1, B2, B3, B4, B5, B6, B7, B8, B9]))?;

    let aa = [A1, A2, A3, A4, A5, A6, A7, A8].map(|c| cx.c(&[c]));
    let bb = [B1, B2, B3, B4, B5, B6, B7, B8, B9].map(|c| cx.c(&[c]));
    let ii = [I1, I2, I3, I4, I5].map(|c| cx.c(&[c]));
    let jj = [J1, J2, J3, J4, J5].map(|c| cx.c(&[c]));
    let kk = [K1, K2, K3].map(|c| cx.c(&[c]));
    let ll = [L1, L2, L3, L4].map(|c| cx.c(&[c]));
    // increasing index for A, I, K; decreasing for B, J, L
    for (sets, up) in [
        (&aa[..], true),
        (&bb[..], false),
        (&ii[..], true),
        (&jj[..], false),
        (&kk[..], true),
        (&ll[..], false),
    ] {
        for x in 0..sets.len() {
            for y in x + 1..sets.len() {
                if up {
                    cx.to(&sets[x], &sets[y])?;
                } else {
                    cx.to(&sets[y], &sets[x])?;
                }
            }
        }
    }
    Ok(())
}

type Cx<'a, 'g> = Ctx<'a, 'g>;

fn cons4(cx: &mut Cx) -> R {
    let s22 = cx.layer(2, 2);
    let km1 = cx.c(&[K, M1]);
    for w in cx.c(&[X]).iter() {
        let ws = VertexSet::single(w);
        match cx.part.labels.finest(w) {
            Some(XMulti) => cx.two_ways(w, &s22)?,
            Some(XJ) | Some(XL) => cx.to(&ws, &s22)?,
            Some(XI) => cx.to(&s22, &ws)?,
            Some(XKM) => cx.chain(&[&s22, &ws, &km1])?,
            _ => {}
        }
    }
    Ok(())
}

fn cons5(cx: &mut Cx) -> R {
    let s22 = cx.layer(2, 2);
    let s33 = cx.layer(3, 3);
    let s44 = cx.layer(4, 4);
    let [m1, m2, x, xp1, xp2, xp3] = [M1, M2, X, Xp1, Xp2, Xp3].map(|c| cx.c(&[c]));
    cx.chain(&[&m2, &xp2, &s22, &xp1, &m1])?;
    cx.chain(&[&x, &xp3, &s22])?;
    cx.rs(&s22, &cx.c(&[Xp5]))?;

    let mp_m3 = cx.c(&[Mp, M3]);
    let far = s22.union(&cx.c(&[I, J]));
    let xp23 = xp2.union(&xp3);
    for w in cx.c(&[Xp4]).iter() {
        if !cx.undirected(w) {
            continue;
        }
        let ws = VertexSet::single(w);
        if cx.g().touches(w, &xp1) {
            cx.chain(&[&xp1, &ws, &s22])?;
            continue;
        }
        if cx.g().touches(w, &xp23) {
            cx.chain(&[&s22, &ws, &xp23])?;
            continue;
        }
        let Some(w0) = cx.nbrs(w, &s22).first() else {
            return Err(cx.not_found(w, "S22 neighbor"));
        };
        let Some((w1, k)) = cx.best_by_neighbors(&cx.nbrs(w, &mp_m3), &s33) else {
            return Err(cx.not_found(w, "neighbor in M' or M3"));
        };
        let (w0s, w1s) = (VertexSet::single(w0), VertexSet::single(w1));
        if k >= 2 {
            let steps = vec![w0s, ws.clone(), w1s, s33.minus(&ws), far.clone()];
            cx.walk_any(w, &[steps], &|_, _| true, "mixed walk through S33")?;
        } else {
            let y1 = cx.nbrs(w, &mp_m3);
            let cycle = vec![w0s.clone(), ws.clone(), y1.clone(), s44.clone(), s33.clone(), w0s.clone()];
            let path = vec![w0s, ws, y1, s44.clone(), s33.clone(), far.clone()];
            cx.walk_any(w, &[cycle, path], &|_, _| true, "mixed 5-cycle or path")?;
        }
    }
    Ok(())
}

fn cons6(cx: &mut Cx) -> R {
    let s33 = cx.layer(3, 3);
    let [m, m1, m2, x, xp1] = [M, M1, M2, X, Xp1].map(|c| cx.c(&[c]));
    let [mp1, mp21, mp22, mp23] = [Mp1, Mp21, Mp22, Mp23].map(|c| cx.c(&[c]));
    cx.to(&m2, &x.union(&xp1))?;
    cx.to(&x, &m1)?;
    cx.chain(&[&m, &mp21, &s33])?;
    cx.chain(&[&s33, &mp22, &mp1.union(&mp21)])?;
    cx.rs(&s33, &mp23)?;
    for w in cx.c(&[M32]).iter() {
        cx.two_ways(w, &s33)?;
    }
    Ok(())
}

fn cons2(cx: &mut Cx) -> R {
    let v = cx.v();
    let vid = cx.part.base.v;
    cx.rs(&v, &cx.c(&[B10b]))?;
    let bb = cx.c(&[B, Bp]);
    let b10 = cx.c(&[B10]);
    for w in cx.c(&[B10a]).iter() {
        if !cx.undirected(w) {
            continue;
        }
        let ws = VertexSet::single(w);
        if !cx.g().isolated_in(w, &bb) {
            let t = cx.nbrs(w, &bb.minus(&b10));
            cx.chain(&[&v, &t, &ws, &v])?;
        } else {
            cx.shortest_cycle_through(vid, w)?;
        }
    }
    Ok(())
}

fn cons3(cx: &mut Cx) -> R {
    let v = cx.v();
    let vid = cx.part.base.v;
    cx.rs(&v, &cx.c(&[Bp3]))?;
    let bp = cx.c(&[Bp]);
    let bp1 = cx.c(&[Bp1]);
    let b = cx.c(&[B]);
    for w in cx.c(&[Bp2]).iter() {
        if !cx.undirected(w) {
            continue;
        }
        let ws = VertexSet::single(w);
        if !cx.g().isolated_in(w, &bp) {
            cx.chain(&[&bp1, &ws, &v])?;
        } else {
            cx.hub_triangle_or_two_ways(vid, w, &b)?;
        }
    }
    Ok(())
}

fn cons8_2(cx: &mut Cx) -> R {
    let [j, j1, l, l2, l4, lp, lp1] = [J, J1, L, L2, L4, Lp, Lp1].map(|c| cx.c(&[c]));
    let [lp11, lp12, lp13, lp2] = [Lp11, Lp12, Lp13, Lp2].map(|c| cx.c(&[c]));
    let [lp41, lp42, lp43, lp51, lp52, lp53, lp54] =
        [Lp41, Lp42, Lp43, Lp51, Lp52, Lp53, Lp54].map(|c| cx.c(&[c]));
    let j14 = cx.c(&[J1, J2, J3, J4]);
    let j56 = cx.c(&[J5, J6]);
    let feed = lp11.union(&lp13).union(&lp2);
    let sink = j14.union(&lp11).union(&lp12);

    cx.to(&j56, &lp)?;
    cx.chain(&[&j, &feed, &l])?;
    cx.chain(&[&l2, &lp12, &j1])?;
    cx.chain(&[&j, &lp51.union(&lp42), &lp41, &j1])?;
    cx.chain(&[&lp51, &lp52, &lp53, &sink])?;
    cx.to(&lp52, &sink)?;

    let dk = bfs_from_set(cx.g(), &cx.c(&[Kp]));
    for w in cx.c(&[Lp3]).iter() {
        let ws = VertexSet::single(w);
        let g = cx.g();
        if !g.isolated_in(w, &lp) {
            let toward: VertexSet = g
                .neighbors(w)
                .iter()
                .filter(|y| match (dk[y.0], dk[w.0]) {
                    (Some(a), Some(b)) => a + 1 == b,
                    _ => false,
                })
                .collect();
            if toward.meets(&j14) {
                if g.touches(w, &feed) {
                    cx.chain(&[&feed, &ws, &j14])?;
                } else if g.touches(w, &lp12) {
                    cx.chain(&[&j14, &ws, &lp12])?;
                } else {
                    return Err(cx.not_found(w, "neighbor in L'1 or L'2"));
                }
            } else if toward.meets(&lp1) {
                cx.chain(&[&j, &ws, &lp1])?;
            } else {
                return Err(cx.not_found(w, "shortest-path successor towards K'"));
            }
        } else if g.touches(w, &l) {
            cx.chain(&[&l4, &ws, &j14])?;
        } else {
            one_out_rest_in(cx.o, w, &j14, &j, cx.stage)?;
        }
    }

    cx.rs(&j1, &lp43)?;
    cx.rs(&j14, &lp54)?;
    Ok(())
}

fn cons8_1(cx: &mut Cx) -> R {
    let [b, j, jp1, jp2, jp31, jp32, jp41, jp42] =
        [B, J, Jp1, Jp2, Jp31, Jp32, Jp41, Jp42].map(|c| cx.c(&[c]));
    let [jp5, jp51, jp52, jp53, jp6, jp61, jp62, jp63] =
        [Jp5, Jp51, Jp52, Jp53, Jp6, Jp61, Jp62, Jp63].map(|c| cx.c(&[c]));
    let b16 = cx.c(&[B1, B2, B3, B4, B5, B6]);
    let b710 = cx.c(&[B7, B8, B9, B10]);
    let j46 = cx.c(&[J4, J5, J6]);
    let jp = cx.c(&[Jp]);
    let jp13 = cx.c(&[Jp1, Jp2, Jp3]);

    cx.chain(&[&b, &jp2, &j])?;
    cx.to(&cx.c(&[B8, B9]), &jp1)?;
    cx.chain(&[&jp62, &b710, &jp61, &jp51.union(&jp62)])?;
    cx.chain(&[&b16, &jp52, &jp51, &b16])?;
    cx.chain(&[&j46, &jp31, &b16])?;
    cx.chain(&[&b, &jp32, &j46])?;
    let src = jp32.union(&jp42).union(&jp6);
    let dst = jp1.union(&jp2).union(&jp31).union(&jp41).union(&jp5);
    cx.to(&src, &dst)?;
    cx.rs(&b16, &jp53)?;
    cx.rs(&b710, &jp63)?;

    for w in cx.c(&[Jp4]).iter() {
        let ws = VertexSet::single(w);
        let is41 = jp41.contains(w);
        if !cx.g().isolated_in(w, &jp) {
            if is41 {
                cx.chain(&[&jp13, &ws, &b16])?;
            } else {
                cx.chain(&[&b710, &ws, &jp13])?;
            }
        } else if is41 {
            one_out_rest_in(cx.o, w, &b16, &b, cx.stage)?;
        } else {
            cx.two_ways(w, &b)?;
        }
    }
    Ok(())
}

fn cons8(cx: &mut Cx) -> R {
    let a13 = cx.c(&[A1, A2, A3]);
    let [a, i, i6, ip, kp, k, i62, i61a] = [A, I, I6, Ip, Kp, K, I62, I61a].map(|c| cx.c(&[c]));
    cx.chain(&[&a13, &i61a, &i62])?;
    cx.rs(&a13, &cx.c(&[I61c]))?;

    let ii = i.union(&ip);
    let low = i.minus(&i6).union(&ip);
    // any arc from A into I must start in A1..A3
    let rule = {
        let (a, i, a13) = (a.clone(), i.clone(), a13.clone());
        move |walk: &MixedWalk, dir: WalkDir| {
            walk.arcs(dir)
                .iter()
                .all(|&(_, t, h)| !(a.contains(t) && i.contains(h)) || a13.contains(t))
        }
    };
    for w in cx.c(&[I61b]).iter() {
        if !cx.undirected(w) {
            continue;
        }
        let ws = VertexSet::single(w);
        let g = cx.g();
        if !g.isolated_in(w, &ii) {
            let t = cx.nbrs(w, &low.union(&i61a));
            cx.chain(&[&a13, &ws, &t])?;
            cx.to(&cx.nbrs(w, &low), &a)?;
        } else if g.edges_to(w, &a).len() >= 2 {
            one_in_rest_out(cx.o, w, &a13, &a, cx.stage)?;
        } else {
            let Some(w0) = cx.nbrs(w, &a13).first() else {
                return Err(cx.not_found(w, "A1..A3 neighbor"));
            };
            let Some((w1, cnt)) = cx.best_by_neighbors(&cx.nbrs(w, &kp), &i) else {
                return Err(cx.not_found(w, "K' neighbor"));
            };
            let w0s = VertexSet::single(w0);
            if cnt >= 2 {
                let steps = vec![w0s, ws.clone(), VertexSet::single(w1), i.minus(&ws), a.clone()];
                cx.walk_any(w, &[steps], &rule, "mixed walk through K'")?;
            } else {
                let y1 = cx.nbrs(w, &kp);
                let kk = kp.union(&k);
                let cycle = vec![w0s.clone(), ws.clone(), y1.clone(), kk.clone(), i.clone(), w0s.clone()];
                let path = vec![w0s, ws, y1, kk, i.clone(), a.clone()];
                cx.walk_any(w, &[cycle, path], &rule, "mixed 5-cycle or path")?;
            }
        }
    }
    Ok(())
}

fn cons8_5(cx: &mut Cx) -> R {
    let u = cx.u();
    let uid = cx.part.base.u;
    let a13 = cx.c(&[A1, A2, A3]);
    let [a, i, i61, i61a, i61bb, i62, i62a, i62b] =
        [A, I, I61, I61a, I61bb, I62, I62a, I62b].map(|c| cx.c(&[c]));
    let [ip1, ip2, a93, a94, a95] = [Ip1, Ip2, A93, A94, A95].map(|c| cx.c(&[c]));
    let a_main = a.minus(&a94).minus(&a95);

    cx.chain(&[&a13, &i61a, &i62a, &a_main, &u])?;
    cx.to(&i61.minus(&i61bb), &ip2)?;
    cx.chain(&[&i.minus(&i62), &ip1.union(&ip2), &a_main])?;
    cx.to(&i61.union(&i62a).union(&i62b), &a93)?;
    cx.rs(&u, &a95)?;

    let aa = cx.c(&[A, Ap]);
    let rest = aa.minus(&a94).minus(&a95);
    for w in a94.iter() {
        if !cx.undirected(w) {
            continue;
        }
        let ws = VertexSet::single(w);
        if !cx.g().isolated_in(w, &aa) {
            let t = cx.nbrs(w, &rest);
            cx.chain(&[&u, &ws, &t, &u])?;
        } else {
            cx.shortest_cycle_through(uid, w)?;
        }
    }
    Ok(())
}

fn cons10(cx: &mut Cx) -> R {
    let u = cx.u();
    let uid = cx.part.base.u;
    cx.rs(&u, &cx.c(&[Ap3]))?;
    let [a, ap, ap1] = [A, Ap, Ap1].map(|c| cx.c(&[c]));
    for w in cx.c(&[Ap2]).iter() {
        if !cx.undirected(w) {
            continue;
        }
        let ws = VertexSet::single(w);
        if !cx.g().isolated_in(w, &ap) {
            cx.chain(&[&u, &ws, &ap1, &u])?;
        } else {
            cx.hub_triangle_or_two_ways(uid, w, &a)?;
        }
    }
    Ok(())
}

fn cons12(cx: &mut Cx) -> R {
    let [a, i, i6, i62c] = [A, I, I6, I62c].map(|c| cx.c(&[c]));
    let [ip1, ip2, ip3, ip4, ip41, ip42, ip51, ip52] =
        [Ip1, Ip2, Ip3, Ip4, Ip41, Ip42, Ip51, Ip52].map(|c| cx.c(&[c]));
    let [ip61, ip62, ip7, ip71, ip72, ip73, ip8, ip81, ip82, ip83] =
        [Ip61, Ip62, Ip7, Ip71, Ip72, Ip73, Ip8, Ip81, Ip82, Ip83].map(|c| cx.c(&[c]));
    let a14 = cx.c(&[A1, A2, A3, A4]);
    let a16 = cx.c(&[A1, A2, A3, A4, A5, A6]);
    let a59 = cx.c(&[A5, A6, A7, A8, A9]);
    let a79 = cx.c(&[A7, A8, A9]);
    let i_low = i.minus(&i62c);
    let ip123 = ip1.union(&ip2).union(&ip3);

    cx.chain(&[&a16, &ip41.union(&ip51), &i])?;
    cx.chain(&[&a79, &ip52, &i])?;
    cx.chain(&[&i_low, &ip42, &a.union(&i62c)])?;
    cx.chain(&[&a14, &ip71, &ip81, &a])?;
    cx.chain(&[&ip71, &ip72, &a14])?;
    cx.chain(&[&a59, &ip82, &ip81])?;
    let i62bc = cx.c(&[I62cb, I62cc]);
    cx.chain(&[&ip123.union(&i.minus(&i6)), &i62bc, &a])?;
    let src = ip123.union(&ip4).union(&ip51).union(&ip61).union(&ip7);
    cx.to(&src, &ip52.union(&ip62).union(&ip8))?;

    cx.rs(&a14, &ip73)?;
    cx.rs(&a59, &ip83)?;

    let ip = cx.c(&[Ip]);
    let ip1_5 = cx.c(&[Ip1, Ip2, Ip3, Ip4, Ip5]);
    let ip_feed = ip123.union(&ip4).union(&ip51);
    for w in cx.c(&[Ip6]).iter() {
        let ws = VertexSet::single(w);
        let is61 = ip61.contains(w);
        let g = cx.g();
        if !g.isolated_in(w, &ip) {
            if is61 {
                cx.chain(&[&a16, &ws, &ip1_5])?;
            } else if g.touches(w, &ip_feed) {
                cx.chain(&[&ip_feed, &ws, &a])?;
            } else {
                cx.chain(&[&a79, &ws, &ip52])?;
            }
        } else if is61 {
            one_in_rest_out(cx.o, w, &a16, &a, cx.stage)?;
        } else {
            cx.two_ways(w, &a)?;
        }
    }
    Ok(())
}

fn cons11(cx: &mut Cx) -> R {
    let [i, k, kp, kp1, kp2, kp21, kp3, kp4, kp5, kp6] =
        [I, K, Kp, Kp1, Kp2, Kp21, Kp3, Kp4, Kp5, Kp6].map(|c| cx.c(&[c]));
    let [kp81, kp82, kp83, kp91, kp92, kp93, i62c, i62cc] =
        [Kp81, Kp82, Kp83, Kp91, Kp92, Kp93, I62c, I62cc].map(|c| cx.c(&[c]));
    let istar = cx.part.labels.istar.clone();
    let i_low = i.minus(&i62c);
    let i_mid = cx.c(&[I62ca, I62cb]);

    cx.to(&kp, &i62cc)?;
    cx.to(&istar, &kp21)?;
    cx.chain(&[&kp1.union(&kp21), &kp3, &i])?;
    cx.to(&k, &kp2.union(&kp3))?;
    cx.chain(&[&k, &kp4, &i])?;
    cx.to(&i_low, &kp5)?;
    cx.to(&i_mid, &kp6)?;
    cx.chain(&[&i_low, &kp81, &kp91, &i_mid])?;
    cx.chain(&[&kp81, &kp82, &i_low])?;
    cx.chain(&[&i_mid, &kp92, &kp91])?;

    for w in cx.c(&[Kp22]).iter() {
        let ws = VertexSet::single(w);
        let g = cx.g();
        if !g.isolated_in(w, &kp) {
            if g.touches(w, &kp1) {
                cx.chain(&[&istar, &ws, &kp1])?;
            } else {
                cx.chain(&[&kp21, &ws, &istar])?;
            }
        } else if g.touches(w, &k) {
            cx.chain(&[&k, &ws, &istar])?;
        } else {
            one_in_rest_out(cx.o, w, &istar, &i, cx.stage)?;
        }
    }

    let kp36 = kp3.union(&kp4).union(&kp5).union(&kp6);
    for w in cx.c(&[Kp7]).iter() {
        let ws = VertexSet::single(w);
        let g = cx.g();
        if !g.isolated_in(w, &kp) {
            cx.chain(&[&i.minus(&i62cc), &ws, &kp36])?;
        } else if g.touches(w, &i_low) {
            one_in_rest_out(cx.o, w, &i_low, &i, cx.stage)?;
        } else {
            cx.two_ways(w, &i)?;
        }
    }

    cx.rs(&istar, &cx.c(&[Kp23]))?;
    cx.rs(&i_low, &kp83)?;
    cx.rs(&i_mid, &kp93)?;

    // whatever is left goes from the lower id to the higher
    let g = cx.g();
    for e in cx.o.undirected_edges() {
        let (a, b) = g.endpoints(e);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        cx.o.orient(e, lo, hi, cx.stage)?;
    }
    Ok(())
}
