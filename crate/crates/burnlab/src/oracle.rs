//! Naive brute-force oracle, independent of the solver.
//!
//! Enumerates every center tuple `(c_1, .., c_k)` over the host vertices
//! (with repetition) and reports whether some tuple's balls of radii
//! `k-1, .., 0` cover the target. Ball bitsets are computed from scratch
//! here — nothing is shared with the solver's search or pruning machinery —
//! so agreement between the two is meaningful cross-validation.

use crate::error::{Error, Result};
use crate::graph::ExplicitGraph;
use crate::grid::GridSpec;
use crate::target::TargetSet;

/// Size guards for the exponential enumeration.
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    /// Hosts up to this many vertices allow any `k`.
    pub max_vertices: usize,
    /// Larger hosts are allowed up to `small_k` rounds...
    pub small_k: u64,
    /// ...as long as they stay under this many vertices.
    pub max_vertices_small_k: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_vertices: 30, small_k: 3, max_vertices_small_k: 200 }
    }
}

impl OracleLimits {
    fn check(&self, n: usize, k: u64) -> Result<()> {
        if n <= self.max_vertices || (k <= self.small_k && n <= self.max_vertices_small_k) {
            Ok(())
        } else {
            Err(Error::ResourceLimit(format!(
                "oracle guard: {n} vertices at k={k} exceeds ({}, k<={} at {})",
                self.max_vertices, self.small_k, self.max_vertices_small_k
            )))
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
struct BitMask {
    words: Vec<u64>,
}

impl BitMask {
    fn zero(bits: usize) -> Self {
        BitMask { words: vec![0; bits.div_ceil(64)] }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn or_in(&mut self, other: &BitMask) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    fn contains_all(&self, other: &BitMask) -> bool {
        self.words.iter().zip(&other.words).all(|(w, o)| w & o == *o)
    }
}

/// DFS over tuple positions with an incrementally OR-ed coverage mask; stops
/// early once the target is covered (extra centers only ever add coverage).
fn exists_cover(balls: &[Vec<BitMask>], target: &BitMask, n: usize, k: u64) -> bool {
    fn rec(
        balls: &[Vec<BitMask>],
        target: &BitMask,
        n: usize,
        k: u64,
        pos: u64,
        acc: &BitMask,
    ) -> bool {
        if acc.contains_all(target) {
            return true;
        }
        if pos == k {
            return false;
        }
        let radius = (k - 1 - pos) as usize;
        for v in 0..n {
            let mut next = acc.clone();
            next.or_in(&balls[v][radius]);
            if rec(balls, target, n, k, pos + 1, &next) {
                return true;
            }
        }
        false
    }
    rec(balls, target, n, k, 0, &BitMask::zero(n))
}

/// Can `k` rounds burn `target` on the grid? Pure enumeration.
pub fn brute_force_oracle_grid(
    g: &GridSpec,
    target: &TargetSet,
    k: u64,
    limits: &OracleLimits,
) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidInput("oracle horizon must be positive".into()));
    }
    let n = g.vertex_count() as usize;
    limits.check(n, k)?;
    let target_ids = target.expand_grid_ids(g)?;
    let mut target_mask = BitMask::zero(n);
    for id in target_ids {
        target_mask.set(id);
    }

    let cols = g.n() as i64;
    let mut balls: Vec<Vec<BitMask>> = Vec::with_capacity(n);
    for v in 0..n {
        let (vr, vc) = (v as i64 / cols, v as i64 % cols);
        let mut per_radius = Vec::with_capacity(k as usize);
        for r in 0..k as i64 {
            let mut mask = BitMask::zero(n);
            for w in 0..n {
                let (wr, wc) = (w as i64 / cols, w as i64 % cols);
                if (vr - wr).abs() + (vc - wc).abs() <= r {
                    mask.set(w);
                }
            }
            per_radius.push(mask);
        }
        balls.push(per_radius);
    }
    Ok(exists_cover(&balls, &target_mask, n, k))
}

/// Explicit-host version of [`brute_force_oracle_grid`]; distances by BFS.
pub fn brute_force_oracle_explicit(
    graph: &ExplicitGraph,
    target: &TargetSet,
    k: u64,
    limits: &OracleLimits,
) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidInput("oracle horizon must be positive".into()));
    }
    let n = graph.vertex_count();
    limits.check(n, k)?;
    let target_ids = target.expand_explicit_ids(graph)?;
    let mut target_mask = BitMask::zero(n);
    for id in target_ids {
        target_mask.set(id);
    }

    let mut balls: Vec<Vec<BitMask>> = Vec::with_capacity(n);
    for v in 0..n {
        let dist = graph.bfs_distances(v);
        let mut per_radius = Vec::with_capacity(k as usize);
        for r in 0..k {
            let mut mask = BitMask::zero(n);
            for (w, d) in dist.iter().enumerate() {
                if matches!(d, Some(d) if *d <= r) {
                    mask.set(w);
                }
            }
            per_radius.push(mask);
        }
        balls.push(per_radius);
    }
    Ok(exists_cover(&balls, &target_mask, n, k))
}

/// Smallest `k` for which the oracle reports a cover.
pub fn oracle_threshold_explicit(
    graph: &ExplicitGraph,
    target: &TargetSet,
    limits: &OracleLimits,
) -> Result<u64> {
    for k in 1.. {
        if brute_force_oracle_explicit(graph, target, k, limits)? {
            return Ok(k);
        }
    }
    unreachable!("a center on every target vertex always covers")
}
