//! Exact oriented diameter by trying every orientation.
//!
//! Orientation `mask` directs edge `e` forward (`a → b` for endpoints
//! `(a, b)`) when bit `e` is 0. Masks are visited in increasing order and
//! the witness is the first one reaching the minimum.

use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU32, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::graph::{diameter, Distance, MultiGraph};
use crate::mixed::{EdgeDirection, MixedOrientation, Stage};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("{m} edges exceed the cap of {max}")]
    TooLarge { m: usize, max: usize },
    #[error("{n} vertices exceed the cap of 64")]
    TooManyVertices { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// `None` when no orientation is strong.
    pub min_diameter: Distance,
    pub witness: Option<Vec<EdgeDirection>>,
    pub orientations_checked: u64,
}

impl OracleResult {
    pub fn witness_orientation<'g>(&self, g: &'g MultiGraph) -> Option<MixedOrientation<'g>> {
        let dirs = self.witness.as_ref()?;
        let mut o = MixedOrientation::new(g);
        for (e, &d) in g.edge_ids().zip(dirs) {
            o.set_direction(e, d, Stage::Input).expect("fresh orientation");
        }
        Some(o)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    pub max_edges: usize,
    /// Worker count, 0 for the machine's parallelism.
    pub threads: usize,
    /// Fix edge 0 forward. Reversing all arcs keeps the diameter, so the
    /// minimum is unchanged while half the masks are skipped.
    pub half_space: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { max_edges: 20, threads: 0, half_space: false }
    }
}

pub fn min_oriented_diameter(g: &MultiGraph, max_edges: usize) -> Result<OracleResult, OracleError> {
    min_oriented_diameter_with(g, OracleOptions { max_edges, ..OracleOptions::default() })
}

struct Arcs {
    ends: Vec<(usize, usize)>,
    full: u64,
}

impl Arcs {
    /// Directed diameter of orientation `mask`, or `None` once it is known
    /// to be at least `cutoff` or not strong.
    fn diameter_below(&self, mask: u64, cutoff: u32, out: &mut [u64]) -> Option<u32> {
        out.fill(0);
        for (e, &(a, b)) in self.ends.iter().enumerate() {
            if mask >> e & 1 == 0 {
                out[a] |= 1 << b;
            } else {
                out[b] |= 1 << a;
            }
        }
        let mut diam = 0;
        for s in 0..out.len() {
            let mut reach = 1u64 << s;
            let mut frontier = reach;
            let mut ecc = 0;
            while reach != self.full {
                ecc += 1;
                if ecc >= cutoff {
                    return None;
                }
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    next |= out[f.trailing_zeros() as usize];
                    f &= f - 1;
                }
                frontier = next & !reach;
                if frontier == 0 {
                    return None;
                }
                reach |= frontier;
            }
            diam = diam.max(ecc);
        }
        Some(diam)
    }
}

pub fn min_oriented_diameter_with(g: &MultiGraph, opts: OracleOptions) -> Result<OracleResult, OracleError> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if m > opts.max_edges || m > 63 {
        return Err(OracleError::TooLarge { m, max: opts.max_edges.min(63) });
    }
    if n > 64 {
        return Err(OracleError::TooManyVertices { n });
    }
    let arcs = Arcs {
        ends: g.edge_list(),
        full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
    };
    // half space: bit 0 stays 0, so enumerate `i` and use mask `i << 1`
    let (free, shift) = if opts.half_space && m > 0 { (m - 1, 1) } else { (m, 0) };
    let total = 1u64 << free;
    let prefix_bits = free.min(8);
    let chunks = 1usize << prefix_bits;
    let chunk_len = total >> prefix_bits;
    let threads = match opts.threads {
        0 => std::thread::available_parallelism().map_or(1, NonZeroUsize::get),
        t => t,
    }
    .min(chunks);

    // Shared pruning is strict so that no chunk skips a tie that could be
    // the lowest optimal mask; within a chunk ties are skipped.
    let shared = AtomicU32::new(u32::MAX);
    let next = AtomicUsize::new(0);
    let found: Mutex<Vec<(u32, u64)>> = Mutex::new(Vec::new());
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| {
                let mut out = vec![0u64; n];
                loop {
                    let c = next.fetch_add(1, Ordering::Relaxed);
                    if c >= chunks {
                        break;
                    }
                    let mut best: Option<(u32, u64)> = None;
                    for i in (c as u64 * chunk_len)..((c as u64 + 1) * chunk_len) {
                        let strict = shared.load(Ordering::Relaxed).saturating_add(1);
                        let cutoff = best.map_or(strict, |(d, _)| d.min(strict));
                        let hit = arcs.diameter_below(i << shift, cutoff, &mut out);
                        if let Some(d) = hit.filter(|&d| best.is_none_or(|(b, _)| d < b)) {
                            best = Some((d, i << shift));
                            shared.fetch_min(d, Ordering::Relaxed);
                        }
                    }
                    if let Some(b) = best {
                        found.lock().unwrap().push(b);
                    }
                }
            });
        }
    });
    let best = found.into_inner().unwrap().into_iter().min();
    let witness = best.map(|(_, mask)| {
        (0..m)
            .map(|e| if mask >> e & 1 == 0 { EdgeDirection::Forward } else { EdgeDirection::Backward })
            .collect()
    });
    Ok(OracleResult { min_diameter: best.map(|(d, _)| d), witness, orientations_checked: total })
}

/// Whether a pipeline result of `pipeline_diameter` is consistent with the
/// exact minimum. Panics if the oracle undercuts the undirected diameter.
pub fn spot_check_bound(g: &MultiGraph, oracle: &OracleResult, pipeline_diameter: u32) -> bool {
    let Some(min) = oracle.min_diameter else {
        return false;
    };
    let d = diameter(g).expect("connected graph");
    assert!(min >= d, "oracle minimum {min} below the undirected diameter {d}");
    min <= pipeline_diameter
}
