//! Metadata-driven validation of strategy schedules on implicit grids.
//!
//! Never touches per-vertex state: each declared path is checked by interval
//! arithmetic over the sources' claims (O(sources log sources) per path),
//! and the flood phase is checked from the gaps between covered heights
//! (O(paths)). Grids with a hundred million vertices validate in
//! microseconds.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::strategy::{StrategySchedule, StrategyTarget};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ScaleViolation {
    /// A claim does not fit in its source's ball at the end of the path phase.
    ClaimBeyondReach { source: usize, height: u64, lo: u64, hi: u64, reach_lo: u64, reach_hi: u64 },
    /// A claim references a height the schedule does not declare as covered.
    UndeclaredHeight { source: usize, height: u64 },
    /// A covered path has an unclaimed column.
    PathGap { height: u64, column: u64 },
    /// Some grid row is farther from every covered path than the flood allows.
    FloodGap { row: u64, distance: u64, flood_rounds: u64 },
    /// `path_rounds + flood_rounds` exceeds the claimed total.
    RoundsExceeded { needed: u64, claimed: u64 },
    /// More ignition rounds than the path phase provides.
    TooManySources { sources: usize, path_rounds: u64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScaleReport {
    pub ok: bool,
    pub violations: Vec<ScaleViolation>,
    pub paths_checked: usize,
    pub claims_checked: usize,
}

/// Checks that (a) every claim fits its source's ball and the claims tile
/// each covered path, (b) for full-grid targets every row is within
/// `flood_rounds` of a covered path, and (c) the round accounting adds up.
pub fn validate_strategy_at_scale(schedule: &StrategySchedule) -> Result<ScaleReport> {
    let g = &schedule.grid;
    let mut violations = Vec::new();
    let mut claims_checked = 0usize;

    if schedule.sources.len() != schedule.phases.len() {
        return Err(Error::InvalidInput("sources and phases must have equal length".into()));
    }
    for &v in &schedule.sources {
        g.check_vertex(v)?;
    }

    // (c) round accounting
    if schedule.path_rounds + schedule.flood_rounds > schedule.claimed_rounds {
        violations.push(ScaleViolation::RoundsExceeded {
            needed: schedule.path_rounds + schedule.flood_rounds,
            claimed: schedule.claimed_rounds,
        });
    }
    if schedule.sources.len() as u64 > schedule.path_rounds {
        violations.push(ScaleViolation::TooManySources {
            sources: schedule.sources.len(),
            path_rounds: schedule.path_rounds,
        });
    }

    // (a) claims: reach and per-path tiling
    let mut per_path: Vec<(u64, Vec<(u64, u64)>)> =
        schedule.covered_heights.iter().map(|&h| (h, Vec::new())).collect();
    for (i, (source, meta)) in schedule.sources.iter().zip(&schedule.phases).enumerate() {
        let round = i as u64 + 1;
        let radius = schedule.path_rounds.saturating_sub(round);
        for claim in &meta.claims {
            claims_checked += 1;
            let Some(slot) = per_path.iter_mut().find(|(h, _)| *h == claim.height) else {
                violations.push(ScaleViolation::UndeclaredHeight {
                    source: i,
                    height: claim.height,
                });
                continue;
            };
            let reach = radius.checked_sub(source.row.abs_diff(claim.height));
            let (reach_lo, reach_hi) = match reach {
                Some(r) => (source.col.saturating_sub(r).max(1), (source.col + r).min(g.n())),
                None => (1, 0),
            };
            if claim.lo < reach_lo || claim.hi > reach_hi || claim.lo > claim.hi {
                violations.push(ScaleViolation::ClaimBeyondReach {
                    source: i,
                    height: claim.height,
                    lo: claim.lo,
                    hi: claim.hi,
                    reach_lo,
                    reach_hi,
                });
                continue;
            }
            slot.1.push((claim.lo, claim.hi));
        }
    }
    for (height, intervals) in &mut per_path {
        intervals.sort_unstable();
        let mut reach = 0u64;
        for &(lo, hi) in intervals.iter() {
            if lo > reach + 1 {
                break;
            }
            reach = reach.max(hi);
        }
        if reach < g.n() {
            violations.push(ScaleViolation::PathGap { height: *height, column: reach + 1 });
        }
    }

    // (b) flood coverage of the remaining rows
    if matches!(schedule.target, StrategyTarget::FullGrid) {
        let hs = &schedule.covered_heights;
        let mut worst: (u64, u64) = (hs[0], hs[0] - 1); // (row, distance)
        if g.m() - hs[hs.len() - 1] > worst.1 {
            worst = (g.m(), g.m() - hs[hs.len() - 1]);
        }
        for pair in hs.windows(2) {
            let mid = (pair[0] + pair[1]) / 2;
            let d = (pair[1] - pair[0]) / 2;
            if d > worst.1 {
                worst = (mid, d);
            }
        }
        if worst.1 > schedule.flood_rounds {
            violations.push(ScaleViolation::FloodGap {
                row: worst.0,
                distance: worst.1,
                flood_rounds: schedule.flood_rounds,
            });
        }
    }

    Ok(ScaleReport {
        ok: violations.is_empty(),
        violations,
        paths_checked: per_path.len(),
        claims_checked,
    })
}
