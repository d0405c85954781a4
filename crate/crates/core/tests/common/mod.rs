#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use orient4_core::io::parse_graph;
use orient4_core::mixed::{EdgeDirection, MixedOrientation, Stage};
use orient4_core::{EdgeId, MultiGraph, VertexId, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

/// `(gstar, seed, count, max_n)` for each batch of the shipped corpus.
pub const CORPUS_BATCHES: [(u32, u64, usize, usize); 4] =
    [(4, 1, 100, 150), (4, 1, 40, 16), (5, 1, 100, 150), (5, 1, 40, 16)];

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

pub fn corpus_file(gstar: u32, seed: u64, max_n: usize, index: usize) -> PathBuf {
    data_dir().join(format!("corpus/g{gstar}/g{gstar}_s{seed}_n{max_n}_{index:03}.txt"))
}

pub struct CorpusGraph {
    pub name: String,
    pub gstar: u32,
    pub graph: MultiGraph,
}

pub fn load_corpus() -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    for gstar in [4, 5] {
        let dir = data_dir().join(format!("corpus/g{gstar}"));
        let mut files: Vec<PathBuf> = fs::read_dir(&dir)
            .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
            .map(|e| e.unwrap().path())
            .collect();
        files.sort();
        for path in files {
            let text = fs::read_to_string(&path).unwrap();
            let graph = parse_graph(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            out.push(CorpusGraph { name, gstar, graph });
        }
    }
    out
}

pub fn fixture(name: &str) -> MultiGraph {
    let path = data_dir().join(format!("fixtures/{name}.txt"));
    parse_graph(&fs::read_to_string(&path).unwrap()).unwrap()
}

/// Oriented diameter straight from the definition: every orientation,
/// full distance matrix, no pruning.
pub fn naive_oriented_diameter(g: &MultiGraph) -> Option<u32> {
    let m = g.edge_count();
    assert!(m <= 16, "naive search is for tiny graphs");
    let n = g.vertex_count();
    let mut best: Option<u32> = None;
    for mask in 0u32..1 << m {
        let mut d = vec![vec![u32::MAX / 2; n]; n];
        for (x, row) in d.iter_mut().enumerate() {
            row[x] = 0;
        }
        for (e, (a, b)) in g.edge_list().into_iter().enumerate() {
            let (s, t) = if mask >> e & 1 == 0 { (a, b) } else { (b, a) };
            d[s][t] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
        let diam = d.iter().flatten().copied().max().unwrap_or(0);
        if diam < u32::MAX / 2 && best.is_none_or(|b| diam < b) {
            best = Some(diam);
        }
    }
    best
}

/// Whether some directed walk of at most `k` arcs leads from `from` into
/// `to`, read off the arcs one at a time.
pub fn reaches_within(o: &MixedOrientation<'_>, from: &VertexSet, to: &VertexSet, k: u32) -> bool {
    let g = o.graph();
    let mut frontier = from.clone();
    for _ in 0..=k {
        if frontier.meets(to) {
            return true;
        }
        let mut next = frontier.clone();
        for e in g.edge_ids() {
            if let Some((a, b)) = o.arc(e) {
                if frontier.contains(a) {
                    next.insert(b);
                }
            }
        }
        frontier = next;
    }
    false
}

/// A random graph with a random R and the largest S inside a random
/// candidate set that satisfies the R-S preconditions. `None` when S ends
/// up empty.
pub fn random_rs_instance(rng: &mut impl Rng) -> Option<(MultiGraph, VertexSet, VertexSet)> {
    let n = rng.gen_range(3..=30);
    let p = rng.gen_range(0.08..0.5);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
                if rng.gen_bool(0.05) {
                    edges.push((a, b));
                }
            }
        }
    }
    let g = MultiGraph::new(n, &edges).unwrap();
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let r_len = rng.gen_range(1..n);
    let r: VertexSet = ids[..r_len].iter().map(|&x| VertexId(x)).collect();
    let mut s: VertexSet = ids[r_len..].iter().filter(|_| rng.gen_bool(0.8)).map(|&x| VertexId(x)).collect();
    loop {
        let keep: VertexSet = s.iter().filter(|&w| g.touches(w, &r) && !g.isolated_in(w, &s)).collect();
        if keep == s {
            break;
        }
        s = keep;
    }
    (!s.is_empty()).then_some((g, r, s))
}

/// Orientation `mask` in the oracle's convention: bit `e` clear is forward.
pub fn orientation_from_mask(g: &MultiGraph, mask: u64) -> MixedOrientation<'_> {
    let mut o = MixedOrientation::new(g);
    for e in 0..g.edge_count() {
        let dir = if mask >> e & 1 == 0 { EdgeDirection::Forward } else { EdgeDirection::Backward };
        o.set_direction(EdgeId(e), dir, Stage::Input).unwrap();
    }
    o
}
