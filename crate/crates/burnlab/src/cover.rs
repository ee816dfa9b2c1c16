//! Covering certificates and their repair into strict burning sequences.
//!
//! A certificate lists centers whose balls of staggered radii
//! `k-1, k-2, .., 0` must cover the target. Fewer than `k` centers is
//! allowed: trailing radii are simply unused. Any valid cover converts into
//! a strictly valid burning sequence of the same horizon by keeping each
//! center that is still legal in its round and substituting an unburned
//! vertex otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::ExplicitGraph;
use crate::grid::{ball, GridSpec, Vertex};
use crate::sim::{GridHost, HostGraph};
use crate::target::TargetSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCertificate<V> {
    pub horizon: u64,
    pub centers: Vec<V>,
}

pub type GridCover = CoverCertificate<Vertex>;
pub type ExplicitCover = CoverCertificate<usize>;

impl<V> CoverCertificate<V> {
    pub fn new(horizon: u64, centers: Vec<V>) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::InvalidInput("cover horizon must be positive".into()));
        }
        if centers.is_empty() || centers.len() as u64 > horizon {
            return Err(Error::InvalidInput(format!(
                "expected between 1 and {horizon} centers, got {}",
                centers.len()
            )));
        }
        Ok(CoverCertificate { horizon, centers })
    }

    /// Ball radius of the `index`-th center (0-based): `horizon - 1 - index`.
    pub fn radius_of(&self, index: usize) -> u64 {
        self.horizon - 1 - index as u64
    }
}

/// Merged-interval check that `[1, n]` is fully covered.
fn intervals_cover_full(intervals: &mut Vec<(u64, u64)>, n: u64) -> bool {
    intervals.sort_unstable();
    let mut reach = 0u64;
    for &(lo, hi) in intervals.iter() {
        if lo > reach + 1 {
            return false;
        }
        reach = reach.max(hi);
        if reach >= n {
            return true;
        }
    }
    reach >= n
}

/// True iff the union of certificate balls covers `target` on the grid.
///
/// Path targets cost O(paths * centers log centers); `All` iterates rows.
pub fn validate_cover_grid(g: &GridSpec, cover: &GridCover, target: &TargetSet) -> Result<bool> {
    target.validate_for_grid(g)?;
    for &c in &cover.centers {
        g.check_vertex(c)?;
    }
    match target {
        TargetSet::All | TargetSet::Paths(_) => {
            let heights = target.grid_heights(g).unwrap();
            for h in heights {
                let mut intervals = Vec::with_capacity(cover.centers.len());
                for (i, &c) in cover.centers.iter().enumerate() {
                    let b = ball(g, c, cover.radius_of(i))?;
                    if let Some(iv) = b.row_interval(h) {
                        intervals.push(iv);
                    }
                }
                if !intervals_cover_full(&mut intervals, g.n()) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        TargetSet::GridVertices(vs) => Ok(vs.iter().all(|&v| {
            cover.centers.iter().enumerate().any(|(i, &c)| {
                v.row.abs_diff(c.row) + v.col.abs_diff(c.col) <= cover.radius_of(i)
            })
        })),
        TargetSet::Vertices(_) => unreachable!("rejected by validate_for_grid"),
    }
}

/// True iff the union of certificate balls covers `target` on an explicit host.
pub fn validate_cover_explicit(
    graph: &ExplicitGraph,
    cover: &ExplicitCover,
    target: &TargetSet,
) -> Result<bool> {
    let target_ids = target.expand_explicit_ids(graph)?;
    let mut covered = vec![false; graph.vertex_count()];
    for (i, &c) in cover.centers.iter().enumerate() {
        if c >= graph.vertex_count() {
            return Err(Error::InvalidInput(format!("center {c} out of range")));
        }
        let radius = cover.radius_of(i);
        for (v, d) in graph.bfs_distances(c).into_iter().enumerate() {
            if let Some(d) = d {
                if d <= radius {
                    covered[v] = true;
                }
            }
        }
    }
    Ok(target_ids.into_iter().all(|v| covered[v]))
}

/// Outcome of repairing a cover: a strict schedule over dense ids.
pub(crate) fn repair_ids(host: &impl HostGraph, centers: &[usize], horizon: u64) -> Vec<usize> {
    let n = host.len();
    let mut burn_round = vec![0u64; n];
    let mut frontier: Vec<usize> = Vec::new();
    let mut sources = Vec::with_capacity(horizon as usize);
    // smallest id never burned; only ever advances
    let mut next_unburned = 0usize;

    for round in 1..=horizon {
        let mut next = Vec::new();
        for &v in &frontier {
            host.for_each_neighbor(v, |w| {
                if burn_round[w] == 0 {
                    burn_round[w] = round;
                    next.push(w);
                }
            });
        }

        while next_unburned < n && burn_round[next_unburned] != 0 {
            next_unburned += 1;
        }

        let planned = centers.get(round as usize - 1).copied();
        let choice = match planned {
            // keep a center that is unburned, or that only this round's
            // spread reached (it was unburned when chosen)
            Some(c) if burn_round[c] == 0 || burn_round[c] == round => Some(c),
            _ => {
                if next_unburned < n {
                    Some(next_unburned)
                } else {
                    // every vertex burned before or during this round's
                    // spread; an ignition is still legal on a vertex burned
                    // exactly this round
                    (0..n).find(|&v| burn_round[v] == round)
                }
            }
        };

        match choice {
            Some(src) => {
                if burn_round[src] == 0 {
                    burn_round[src] = round;
                    next.push(src);
                }
                sources.push(src);
            }
            None => break, // whole host burned before this round began
        }

        frontier = next;
    }
    sources
}

/// Converts a grid cover into a strictly valid schedule of the same horizon
/// (shorter only if the whole grid burns out first, which cannot happen for
/// minimal covers).
pub fn repair_cover_grid(g: &GridSpec, cover: &GridCover) -> Result<Vec<Vertex>> {
    for &c in &cover.centers {
        g.check_vertex(c)?;
    }
    let ids: Vec<usize> = cover.centers.iter().map(|&c| g.vertex_id(c)).collect();
    let repaired = repair_ids(&GridHost(*g), &ids, cover.horizon);
    Ok(repaired.into_iter().map(|id| g.vertex_from_id(id)).collect())
}

/// Explicit-host version of [`repair_cover_grid`].
pub fn repair_cover_explicit(graph: &ExplicitGraph, cover: &ExplicitCover) -> Result<Vec<usize>> {
    for &c in &cover.centers {
        if c >= graph.vertex_count() {
            return Err(Error::InvalidInput(format!("center {c} out of range")));
        }
    }
    Ok(repair_ids(&graph, &cover.centers, cover.horizon))
}
