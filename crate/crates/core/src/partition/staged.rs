//! Cells that depend on the orientation reached at a checkpoint.

use super::refine::Sieve;
use super::{Cell, Checkpoint, FineLabels, LayerPartition};
use crate::graph::{bfs_distances, bfs_from_set, MultiGraph};
use crate::mixed::MixedOrientation;
use crate::vset::VertexSet;

pub fn staged_refine(
    g: &MultiGraph,
    layers: &LayerPartition,
    lab: &mut FineLabels,
    o: &MixedOrientation<'_>,
    cp: Checkpoint,
) {
    let vd = o.directed_vertices();
    lab.snapshots.vd.insert(cp, vd.clone());
    match cp {
        Checkpoint::D1 => at_d1(g, lab, &vd),
        Checkpoint::D2 => at_d2(g, lab, &vd),
        Checkpoint::D3 => {
            lab.snapshots.d3_arcs = Some(g.edge_ids().map(|e| o.arc(e)).collect());
            at_d3(g, lab, o, &vd)
        }
        Checkpoint::D4 => at_d4(g, layers, lab, &vd),
    }
}

fn assign_seq(lab: &mut FineLabels, parts: Vec<(VertexSet, Cell)>) {
    for (s, c) in parts {
        lab.assign_all(&s, c);
    }
}

fn at_d1(g: &MultiGraph, lab: &mut FineLabels, vd: &VertexSet) {
    let mut sv = Sieve::new(g, lab.set(Cell::M3));
    let m31 = sv.take(|w| vd.contains(w));
    assign_seq(lab, vec![(m31, Cell::M31), (sv.rest(), Cell::M32)]);

    let mut sv = Sieve::new(g, lab.set(Cell::Mp));
    let mp1 = sv.take(|w| vd.contains(w));
    let mp2 = sv.rest();
    let m = lab.set(Cell::M);
    let mut sv = Sieve::new(g, mp2.clone());
    let mp21 = sv.near(&m);
    let mp22 = sv.isolated();
    assign_seq(
        lab,
        vec![
            (mp1, Cell::Mp1),
            (mp2, Cell::Mp2),
            (mp21, Cell::Mp21),
            (mp22, Cell::Mp22),
            (sv.rest(), Cell::Mp23),
        ],
    );
}

fn at_d2(g: &MultiGraph, lab: &mut FineLabels, vd: &VertexSet) {
    let mut sv = Sieve::new(g, lab.set(Cell::Bp));
    let bp1 = sv.take(|w| vd.contains(w));
    let bp2 = sv.isolated();
    assign_seq(lab, vec![(bp1, Cell::Bp1), (bp2, Cell::Bp2), (sv.rest(), Cell::Bp3)]);

    let j13 = lab.union(&[Cell::J1, Cell::J2, Cell::J3]);
    let j46 = lab.union(&[Cell::J4, Cell::J5, Cell::J6]);
    let b16 = lab.union(&[Cell::B1, Cell::B2, Cell::B3, Cell::B4, Cell::B5, Cell::B6]);
    let mut sv = Sieve::new(g, lab.set(Cell::Jp));
    let jp1 = sv.take(|w| vd.contains(w));
    let jp2 = sv.near(&j13);
    let jp3 = sv.near(&j46);
    let jp4 = sv.isolated();
    let jp5 = sv.near(&b16);
    let jp6 = sv.rest();

    let split_b16 = |s: &VertexSet| {
        let mut sv = Sieve::new(g, s.clone());
        let near = sv.near(&b16);
        (near, sv.rest())
    };
    let (jp31, jp32) = split_b16(&jp3);
    let (jp41, jp42) = split_b16(&jp4);
    let three_way = |s: &VertexSet, other: &VertexSet| {
        let mut sv = Sieve::new(g, s.clone());
        let a = sv.near(other);
        let b = sv.isolated();
        (a, b, sv.rest())
    };
    let (jp51, jp52, jp53) = three_way(&jp5, &jp6);
    let (jp61, jp62, jp63) = three_way(&jp6, &jp5);
    assign_seq(
        lab,
        vec![
            (jp1, Cell::Jp1),
            (jp2, Cell::Jp2),
            (jp3, Cell::Jp3),
            (jp4, Cell::Jp4),
            (jp5, Cell::Jp5),
            (jp6, Cell::Jp6),
            (jp31, Cell::Jp31),
            (jp32, Cell::Jp32),
            (jp41, Cell::Jp41),
            (jp42, Cell::Jp42),
            (jp51, Cell::Jp51),
            (jp52, Cell::Jp52),
            (jp53, Cell::Jp53),
            (jp61, Cell::Jp61),
            (jp62, Cell::Jp62),
            (jp63, Cell::Jp63),
        ],
    );
}

fn at_d3(g: &MultiGraph, lab: &mut FineLabels, o: &MixedOrientation<'_>, vd: &VertexSet) {
    let a = lab.set(Cell::A);
    // I61(21): some A-neighbor already points into w
    let mut sv = Sieve::new(g, lab.set(Cell::I61b));
    let i61ba = sv.take(|w| {
        g.incident(w).iter().any(|&(y, e)| a.contains(y) && o.arc(e) == Some((y, w)))
    });
    let i61bb = sv.rest();

    let i61 = lab.set(Cell::I61);
    let mut sv = Sieve::new(g, lab.set(Cell::Ip));
    let ip1 = sv.take(|w| vd.contains(w));
    let ip2 = sv.near(&i61.minus(&i61bb));

    let mut sv = Sieve::new(g, lab.set(Cell::I62));
    let i62a = sv.near(&i61);
    let i62b = sv.take(|w| vd.contains(w));
    let i62c = sv.rest();

    let mut sv = Sieve::new(g, lab.set(Cell::A9));
    let a91 = sv.near(&ip1);
    let a92 = sv.near(&ip2);
    let a93 = sv.near(&i61.union(&i62a).union(&i62b));
    let a94 = sv.isolated();
    let a95 = sv.rest();

    let kp1: VertexSet = lab.set(Cell::Kp).intersect(vd);
    assign_seq(
        lab,
        vec![
            (i61ba, Cell::I61ba),
            (i61bb, Cell::I61bb),
            (ip1, Cell::Ip1),
            (ip2, Cell::Ip2),
            (i62a, Cell::I62a),
            (i62b, Cell::I62b),
            (i62c, Cell::I62c),
            (a91, Cell::A91),
            (a92, Cell::A92),
            (a93, Cell::A93),
            (a94, Cell::A94),
            (a95, Cell::A95),
            (kp1, Cell::Kp1),
        ],
    );
}

fn at_d4(g: &MultiGraph, _layers: &LayerPartition, lab: &mut FineLabels, vd: &VertexSet) {
    let mut sv = Sieve::new(g, lab.set(Cell::Ap));
    let ap1 = sv.take(|w| vd.contains(w));
    let ap2 = sv.isolated();
    assign_seq(lab, vec![(ap1, Cell::Ap1), (ap2, Cell::Ap2), (sv.rest(), Cell::Ap3)]);

    let i = lab.set(Cell::I);
    let i62c = lab.set(Cell::I62c);
    let a14 = lab.union(&[Cell::A1, Cell::A2, Cell::A3, Cell::A4]);
    let a16 = a14.union(&lab.union(&[Cell::A5, Cell::A6]));
    let ip12 = lab.union(&[Cell::Ip1, Cell::Ip2]);
    let mut sv = Sieve::new(g, lab.set(Cell::Ip).minus(&ip12));
    let ip3 = sv.take(|w| vd.contains(w));
    let ip4 = sv.near(&i.minus(&i62c));
    let ip5 = sv.near(&i62c);
    let ip6 = sv.isolated();
    let ip7 = sv.near(&a14);
    let ip8 = sv.rest();
    let split_a16 = |s: &VertexSet| {
        let mut sv = Sieve::new(g, s.clone());
        let near = sv.near(&a16);
        (near, sv.rest())
    };
    let (ip41, ip42) = split_a16(&ip4);
    let (ip51, ip52) = split_a16(&ip5);
    let (ip61, ip62) = split_a16(&ip6);
    let three_way = |s: &VertexSet, other: &VertexSet| {
        let mut sv = Sieve::new(g, s.clone());
        let a = sv.near(other);
        let b = sv.isolated();
        (a, b, sv.rest())
    };
    let (ip71, ip72, ip73) = three_way(&ip7, &ip8);
    let (ip81, ip82, ip83) = three_way(&ip8, &ip7);

    let i6 = lab.set(Cell::I6);
    let feed = ip12
        .union(&ip3)
        .union(&ip41)
        .union(&ip51)
        .union(&i.minus(&i6));
    let mut sv = Sieve::new(g, i62c.clone());
    let i62ca = sv.take(|w| vd.contains(w));
    let i62cb = sv.near(&feed);
    let i62cc = sv.rest();

    assign_seq(
        lab,
        vec![
            (ip3, Cell::Ip3),
            (ip4, Cell::Ip4),
            (ip5, Cell::Ip5),
            (ip6, Cell::Ip6),
            (ip7, Cell::Ip7),
            (ip8, Cell::Ip8),
            (ip41, Cell::Ip41),
            (ip42, Cell::Ip42),
            (ip51, Cell::Ip51),
            (ip52, Cell::Ip52),
            (ip61, Cell::Ip61),
            (ip62, Cell::Ip62),
            (ip71, Cell::Ip71),
            (ip72, Cell::Ip72),
            (ip73, Cell::Ip73),
            (ip81, Cell::Ip81),
            (ip82, Cell::Ip82),
            (ip83, Cell::Ip83),
            (i62ca.clone(), Cell::I62ca),
            (i62cb.clone(), Cell::I62cb),
            (i62cc.clone(), Cell::I62cc),
        ],
    );

    // K'
    let b = lab.set(Cell::B);
    let db = bfs_from_set(g, &b);
    let kp1 = lab.set(Cell::Kp1);
    let i_low = i.minus(&i62c);
    let i_mid = i62ca.union(&i62cb);
    let mut sv = Sieve::new(g, lab.set(Cell::Kp).minus(&kp1));
    let kp2 = sv.take(|w| db[w.0] == Some(3));
    let kp3 = sv.near(&kp1.union(&kp2));
    let kp4 = sv.near(&lab.set(Cell::K));
    let kp5 = sv.take(|w| g.touches(w, &i_low) && g.touches(w, &i62cc));
    let kp6 = sv.take(|w| g.touches(w, &i_mid) && g.touches(w, &i62cc));
    let kp7 = sv.isolated();
    let kp8 = sv.near(&i_low);
    let kp9 = sv.near(&i_mid);
    let kp10 = sv.rest();
    let (kp21, kp22, kp23) = three_way(&kp2, &kp3);
    let (kp81, kp82, kp83) = three_way(&kp8, &kp9);
    let (kp91, kp92, kp93) = three_way(&kp9, &kp8);

    // I*: members of I on some shortest (w', B)-path with w' in K'2
    let mut istar = VertexSet::new();
    for w in kp2.iter() {
        let dw = bfs_distances(g, w);
        let Some(target) = db[w.0] else { continue };
        for x in i.iter() {
            if let (Some(a), Some(b)) = (dw[x.0], db[x.0]) {
                if a + b == target {
                    istar.insert(x);
                }
            }
        }
    }
    lab.istar = istar;

    assign_seq(
        lab,
        vec![
            (kp2, Cell::Kp2),
            (kp3, Cell::Kp3),
            (kp4, Cell::Kp4),
            (kp5, Cell::Kp5),
            (kp6, Cell::Kp6),
            (kp7, Cell::Kp7),
            (kp8, Cell::Kp8),
            (kp9, Cell::Kp9),
            (kp10, Cell::Kp10),
            (kp21, Cell::Kp21),
            (kp22, Cell::Kp22),
            (kp23, Cell::Kp23),
            (kp81, Cell::Kp81),
            (kp82, Cell::Kp82),
            (kp83, Cell::Kp83),
            (kp91, Cell::Kp91),
            (kp92, Cell::Kp92),
            (kp93, Cell::Kp93),
        ],
    );
}
