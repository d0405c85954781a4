//! Test graphs: structured families, random candidates and the in-scope
//! filter.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{bfs_distances, diameter, MultiGraph, VertexId};
use crate::partition::select_base_edge;

/// `P_rows □ P_cols`, vertex `(r, c)` numbered `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> MultiGraph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let x = r * cols + c;
            if c + 1 < cols {
                edges.push((x, x + 1));
            }
            if r + 1 < rows {
                edges.push((x, x + cols));
            }
        }
    }
    MultiGraph::new(rows * cols, &edges).expect("grid is simple")
}

/// Two hubs `0` and `1` joined by internally disjoint paths of the given
/// lengths.
pub fn theta(lengths: &[usize]) -> MultiGraph {
    let mut n = 2;
    let mut edges = Vec::new();
    for &len in lengths {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, 1));
    }
    MultiGraph::new(n, &edges).expect("theta has no loops")
}

/// `k` pentagons in a row, consecutive ones sharing an edge.
pub fn prism_chain(k: usize) -> MultiGraph {
    let mut edges = vec![(0, 1)];
    let (mut a, mut b, mut n) = (0, 1, 2);
    for _ in 0..k {
        // pentagon a b x y z
        let (x, y, z) = (n, n + 1, n + 2);
        n += 3;
        edges.extend([(b, x), (x, y), (y, z), (z, a)]);
        // next pentagon shares the edge y z
        a = z;
        b = y;
    }
    MultiGraph::new(n, &edges).expect("chain has no loops")
}

pub fn cycle(n: usize) -> MultiGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    MultiGraph::new(n, &edges).expect("cycle of length >= 2")
}

pub fn complete(n: usize) -> MultiGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    MultiGraph::new(n, &edges).expect("simple")
}

pub fn complete_bipartite(p: usize, q: usize) -> MultiGraph {
    let mut edges = Vec::new();
    for a in 0..p {
        for b in 0..q {
            edges.push((a, p + b));
        }
    }
    MultiGraph::new(p + q, &edges).expect("simple")
}

/// Named fixture graphs used by the golden and oracle tests.
pub fn fixtures() -> Vec<(&'static str, MultiGraph)> {
    vec![
        ("c4", cycle(4)),
        ("c5", cycle(5)),
        ("c7", cycle(7)),
        ("c9", cycle(9)),
        ("k4", complete(4)),
        ("k23", complete_bipartite(2, 3)),
        ("k33", complete_bipartite(3, 3)),
        ("grid2x4", grid(2, 4)),
        ("theta444", theta(&[4, 4, 4])),
        ("prism_chain3", prism_chain(3)),
    ]
}

/// `g*` when `g` is connected, bridgeless, of diameter 4 with `g* ∈ {4,5}`.
pub fn in_scope(g: &MultiGraph) -> Option<u32> {
    select_base_edge(g).ok().map(|b| b.gstar)
}

pub fn filter_in_scope(graphs: Vec<MultiGraph>) -> Vec<(MultiGraph, u32)> {
    graphs.into_iter().filter_map(|g| in_scope(&g).map(|s| (g, s))).collect()
}

/// Random simple graphs: `n` uniform in `n_range`, every pair an edge with
/// probability `density`.
pub fn gen_candidates(
    seed: u64,
    n_range: (usize, usize),
    density: f64,
    count: usize,
) -> Vec<MultiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_range.0..=n_range.1);
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(density) {
                        edges.push((a, b));
                    }
                }
            }
            MultiGraph::new(n, &edges).expect("simple")
        })
        .collect()
}

/// Grows a graph from a `t`-cycle by adding ears whose new cycles have
/// length at most `t`, so `g*` never exceeds `t`. Additions that push the
/// diameter past 4 are undone.
fn grow(rng: &mut ChaCha8Rng, t: usize, n_target: usize) -> MultiGraph {
    let mut n = t;
    let mut edges: Vec<(usize, usize)> = (0..t).map(|i| (i, (i + 1) % t)).collect();
    let mut stalls = 0;
    while n < n_target && stalls < 200 {
        let g = MultiGraph::new(n, &edges).expect("ears add no loops");
        let a = rng.gen_range(0..n);
        let dist = bfs_distances(&g, VertexId(a));
        // ear length and the distance between its ends
        let (len, gap) = match rng.gen_range(0..10) {
            0..=3 => (t, 0),
            4..=6 => (t - 2, 2),
            7 | 8 => (t - 3, 3.min(t - 1)),
            _ => (1, t - 1),
        };
        let len = len.max(1);
        let mut ends: Vec<usize> = (0..n).filter(|&b| dist[b] == Some(gap as u32)).collect();
        ends.shuffle(rng);
        let Some(&b) = ends.first() else {
            stalls += 1;
            continue;
        };
        if len == 1 && gap == 0 {
            stalls += 1;
            continue;
        }
        let mut trial = edges.clone();
        let mut prev = a;
        let mut m = n;
        for _ in 1..len {
            trial.push((prev, m));
            prev = m;
            m += 1;
        }
        trial.push((prev, b));
        let candidate = MultiGraph::new(m, &trial).expect("ears add no loops");
        if diameter(&candidate).is_some_and(|d| d <= 4) {
            edges = trial;
            n = m;
            stalls = 0;
        } else {
            stalls += 1;
        }
    }
    // a few chords that close short cycles
    let extra = rng.gen_range(0..=n / 6);
    for _ in 0..extra {
        let g = MultiGraph::new(n, &edges).expect("simple");
        let a = rng.gen_range(0..n);
        let dist = bfs_distances(&g, VertexId(a));
        let gap = rng.gen_range(2..t) as u32;
        let ends: Vec<usize> = (0..n).filter(|&b| dist[b] == Some(gap)).collect();
        if let Some(&b) = ends.choose(rng) {
            edges.push((a, b));
        }
    }
    if n > 6 && rng.gen_bool(0.05) {
        // an occasional parallel edge
        let e = edges[rng.gen_range(0..edges.len())];
        edges.push(e);
    }
    MultiGraph::new(n, &edges).expect("simple")
}

/// Builds vertices layer by layer around an edge `0 1`, each new vertex in
/// `S_{i,j}` attached to vertices one step closer to `0` and to `1`, then
/// adds random edges between compatible layers and closes every edge that
/// lies on no cycle of length at most `t`.
fn layered(rng: &mut ChaCha8Rng, t: usize, n_target: usize) -> MultiGraph {
    use crate::partition::LAYERS;
    let mut label: Vec<(u32, u32)> = vec![(0, 1), (1, 0)];
    let mut edges = vec![(0usize, 1usize)];
    let layer_weight: Vec<f64> = LAYERS.iter().map(|_| rng.gen_range(0.0..1.0f64).powi(2)).collect();
    let total: f64 = layer_weight[2..].iter().sum::<f64>().max(1e-9);
    let compatible = |a: (u32, u32), b: (u32, u32)| a.0.abs_diff(b.0) <= 1 && a.1.abs_diff(b.1) <= 1;
    // layers in order of i + j so predecessors exist
    let mut order: Vec<usize> = (2..LAYERS.len()).collect();
    order.sort_by_key(|&k| LAYERS[k].0 + LAYERS[k].1);
    for &k in &order {
        let (i, j) = LAYERS[k];
        let size = ((n_target - 2) as f64 * layer_weight[k] / total).round() as usize;
        let size = if (i, j) == (1, 2) || (i, j) == (2, 1) { size.max(1) } else { size };
        for _ in 0..size {
            let toward_u: Vec<usize> =
                (0..label.len()).filter(|&x| label[x].0 + 1 == i && compatible(label[x], (i, j))).collect();
            let toward_v: Vec<usize> =
                (0..label.len()).filter(|&x| label[x].1 + 1 == j && compatible(label[x], (i, j))).collect();
            let (Some(&p), Some(&q)) = (toward_u.choose(rng), toward_v.choose(rng)) else {
                continue;
            };
            let w = label.len();
            label.push((i, j));
            edges.push((p, w));
            if q != p {
                edges.push((q, w));
            }
        }
    }
    let n = label.len();
    let density = rng.gen_range(0.0..2.5) / n as f64;
    for a in 2..n {
        for b in a + 1..n {
            if compatible(label[a], label[b]) && rng.gen_bool(density.min(1.0)) {
                edges.push((a, b));
            }
        }
    }
    // close long edges with an edge that makes a cycle of length <= t;
    // girths only shrink as edges are added, so only bad edges are rechecked
    let too_long = |g: &MultiGraph, e: usize| {
        crate::graph::edge_girth(g, crate::graph::EdgeId(e)).is_none_or(|c| c as usize > t)
    };
    let mut bad: Vec<usize> = (0..edges.len()).collect();
    for _ in 0..4 * n {
        let g = MultiGraph::new(n, &edges).expect("no loops");
        bad.retain(|&e| too_long(&g, e));
        let Some(&e) = bad.choose(rng) else { break };
        let (a, b) = g.endpoints(crate::graph::EdgeId(e));
        let (a, b) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
        let db = bfs_distances(&g, b);
        let want = rng.gen_range(1..t - 1) as u32;
        let cands: Vec<usize> = (0..n)
            .filter(|&c| c != a.0 && db[c] == Some(want) && compatible(label[a.0], label[c]))
            .collect();
        if let Some(&c) = cands.choose(rng) {
            bad.push(edges.len());
            edges.push((a.0, c));
        }
    }
    MultiGraph::new(n, &edges).expect("no loops")
}

/// Up to `count` in-scope graphs with the requested `g*`, at most `max_n`
/// vertices each, reproducible from `seed`. Half come from ear growth, half
/// from the layered builder.
pub fn generate(seed: u64, gstar: u32, count: usize, max_n: usize) -> Vec<MultiGraph> {
    assert!(gstar == 4 || gstar == 5, "only g* 4 and 5 are generated");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (gstar as u64) << 32);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < count * 400 {
        attempts += 1;
        let lo = 2 * gstar as usize;
        let n_target = rng.gen_range(lo..=max_n.max(lo));
        let g = if out.len() % 2 == 0 {
            grow(&mut rng, gstar as usize, n_target)
        } else {
            layered(&mut rng, gstar as usize, n_target)
        };
        if g.vertex_count() <= max_n && in_scope(&g) == Some(gstar) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{find_bridges, graph_edge_girth};

    #[test]
    fn families() {
        let g = grid(2, 4);
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 10));
        assert_eq!(in_scope(&g), Some(4));
        let t = theta(&[4, 4, 4]);
        assert_eq!((t.vertex_count(), t.edge_count()), (11, 12));
        assert_eq!(diameter(&t), Some(4));
        assert!(find_bridges(&t).is_empty());
        assert_eq!(graph_edge_girth(&t), Some(8));
        let p = prism_chain(3);
        assert_eq!((p.vertex_count(), p.edge_count()), (11, 13));
        assert_eq!(graph_edge_girth(&p), Some(5));
    }

    #[test]
    fn filter_examples() {
        let kept = filter_in_scope(vec![cycle(9), grid(2, 4), complete(4)]);
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0].1, 4);
    }

    #[test]
    fn candidates_are_reproducible() {
        let a = gen_candidates(1, (8, 8), 0.3, 10);
        let b = gen_candidates(1, (8, 8), 0.3, 10);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.vertex_count() == 8));
    }

    #[test]
    fn generated_graphs_are_in_scope() {
        for gs in [4, 5] {
            let gs_list = generate(7, gs, 5, 30);
            assert_eq!(gs_list.len(), 5);
            for g in &gs_list {
                assert_eq!(in_scope(g), Some(gs));
            }
            assert_eq!(gs_list, generate(7, gs, 5, 30));
        }
    }
}
