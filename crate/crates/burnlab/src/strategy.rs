//! Constructive burning schedules with validation metadata.
//!
//! Every constructor returns a [`StrategySchedule`] whose per-source claims
//! (column intervals on declared path heights) let
//! [`crate::scale::validate_strategy_at_scale`] check the schedule on grids
//! far too large to simulate. Heights and columns coming from real-valued
//! formulas are floored and clamped; nothing is trusted from a formula
//! alone — small instances are re-simulated in tests and large ones are
//! interval-checked.

use serde::{Deserialize, Serialize};

use crate::bounds::ell_upper_from_m;
use crate::error::{Error, Result};
use crate::grid::{isqrt_ceil, GridSpec, Vertex};

/// What the schedule promises to burn within `claimed_rounds`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyTarget {
    FullGrid,
    /// Only the horizontal paths at these heights.
    Paths(Vec<u64>),
}

/// A column interval on one path that a source promises to burn by the end
/// of the path phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathClaim {
    pub height: u64,
    pub lo: u64,
    pub hi: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SourcePhase {
    /// Greedy left-to-right tiling of one or more paths.
    PathTiling,
    /// The alternating top/bottom placement with pairwise-disjoint coverage.
    Alternating,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceMeta {
    pub phase: SourcePhase,
    pub claims: Vec<PathClaim>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StrategySchedule {
    pub name: String,
    #[serde(flatten)]
    pub grid: GridSpec,
    /// Sources in ignition order; source `i` (0-based) ignites in round `i+1`.
    pub sources: Vec<Vertex>,
    /// Parallel to `sources`.
    pub phases: Vec<SourceMeta>,
    /// Heights fully burned once the path phase ends.
    pub covered_heights: Vec<u64>,
    /// Rounds in the path phase: every claim of the source ignited in round
    /// `i` must fit in its ball of radius `path_rounds - i`.
    pub path_rounds: u64,
    /// Spread-only rounds after the path phase that reach the rest of the
    /// grid; 0 for path-only targets.
    pub flood_rounds: u64,
    /// `path_rounds + flood_rounds`.
    pub claimed_rounds: u64,
    pub target: StrategyTarget,
    pub notes: Vec<String>,
}

// ---------------------------------------------------------------------------
// shared tiling machinery

#[derive(Debug, Clone, Copy)]
struct Segment {
    height: u64,
    lo: u64,
    hi: u64,
}

impl Segment {
    fn len(&self) -> u64 {
        self.hi - self.lo + 1
    }
}

struct Tiling {
    /// `(round, source, meta)` in round order.
    placed: Vec<(u64, Vertex, SourceMeta)>,
}

/// Covers the segments left to right with one shared descending radius
/// ladder: the source ignited in round `i` has radius `horizon - i` by the
/// end of the path phase, and each segment is tiled greedily before moving
/// on. Fails when the ladder runs out before everything is covered, or when
/// two sources would violate strict ignition (`d(x_i, x_j) >= j - i`); the
/// caller then retries with a larger horizon.
fn tile_segments(
    segments: &[Segment],
    horizon: u64,
    start_round: u64,
) -> std::result::Result<Tiling, String> {
    assert!(!segments.is_empty());
    let mut placed: Vec<(u64, Vertex, SourceMeta)> = Vec::new();
    let mut round = start_round;
    // per-segment round spans for the cross-segment strictness check
    let mut spans: Vec<(usize, u64, u64)> = Vec::new();

    for (si, seg) in segments.iter().enumerate() {
        let first_round = round;
        let mut next = seg.lo;
        while next <= seg.hi {
            let Some(radius) = horizon.checked_sub(round) else {
                return Err(format!(
                    "radius ladder exhausted at round {round} with column {next} of row {} \
                     uncovered (horizon {horizon})",
                    seg.height
                ));
            };
            let col = (next + radius).min(seg.hi);
            let lo = col.saturating_sub(radius).max(seg.lo);
            let hi = (col + radius).min(seg.hi);
            debug_assert!(lo <= next, "per-segment greedy keeps coverage contiguous");
            placed.push((
                round,
                Vertex::new(seg.height, col),
                SourceMeta {
                    phase: SourcePhase::PathTiling,
                    claims: vec![PathClaim { height: seg.height, lo, hi }],
                },
            ));
            next = hi + 1;
            round += 1;
        }
        spans.push((si, first_round, round - 1));
    }

    // Within a segment, source columns advance by at least one per round, so
    // strictness holds; across segments it must be checked. Segment pairs
    // whose row gap dominates their whole round span are safe wholesale.
    for (ai, a) in spans.iter().enumerate() {
        for b in spans.iter().skip(ai + 1) {
            let row_gap = segments[a.0].height.abs_diff(segments[b.0].height);
            if row_gap >= b.2.saturating_sub(a.1) {
                continue;
            }
            for &(ri, vi, _) in placed.iter().filter(|(r, ..)| (a.1..=a.2).contains(r)) {
                for &(rj, vj, _) in placed.iter().filter(|(r, ..)| (b.1..=b.2).contains(r)) {
                    let d = vi.row.abs_diff(vj.row) + vi.col.abs_diff(vj.col);
                    if d < rj - ri {
                        return Err(format!(
                            "sources {vi} (round {ri}) and {vj} (round {rj}) too close \
                             for strict ignition"
                        ));
                    }
                }
            }
        }
    }

    Ok(Tiling { placed })
}

fn flood_distance(m: u64, heights: &[u64]) -> u64 {
    let mut worst = (heights[0] - 1).max(m - heights[heights.len() - 1]);
    for pair in heights.windows(2) {
        worst = worst.max((pair[1] - pair[0]) / 2);
    }
    worst
}

fn assemble(
    name: &str,
    grid: GridSpec,
    tiling: Vec<(u64, Vertex, SourceMeta)>,
    covered_heights: Vec<u64>,
    path_rounds: u64,
    flood_rounds: u64,
    target: StrategyTarget,
    notes: Vec<String>,
) -> StrategySchedule {
    debug_assert!(tiling.windows(2).all(|w| w[0].0 + 1 == w[1].0));
    debug_assert!(tiling.first().map_or(true, |(r, ..)| *r == 1));
    let sources = tiling.iter().map(|(_, v, _)| *v).collect();
    let phases = tiling.into_iter().map(|(.., m)| m).collect();
    StrategySchedule {
        name: name.into(),
        grid,
        sources,
        phases,
        covered_heights,
        path_rounds,
        flood_rounds,
        claimed_rounds: path_rounds + flood_rounds,
        target,
        notes,
    }
}

// ---------------------------------------------------------------------------
// strategies

/// Burns the path `P_n` (as a `1 x n` grid) in `ceil(sqrt(n))` rounds.
pub fn path_strategy(n: u64) -> Result<StrategySchedule> {
    let grid = GridSpec::new(1, n)?;
    let horizon = isqrt_ceil(n as u128) as u64;
    let tiling = tile_segments(&[Segment { height: 1, lo: 1, hi: n }], horizon, 1)
        .map_err(Error::InvalidInput)?;
    Ok(assemble(
        "path",
        grid,
        tiling.placed,
        vec![1],
        horizon,
        0,
        StrategyTarget::FullGrid,
        Vec::new(),
    ))
}

/// Burns `ell = ceil((c/2)^(2/3))` evenly spaced horizontal paths as one cut
/// path, then floods. Rounds stay within `2*sqrt(ell*n) + ell + O(1)`.
pub fn multi_path_strategy(m: u64, n: u64) -> Result<StrategySchedule> {
    let grid = GridSpec::new(m, n)?;
    let ell = ell_upper_from_m(m, n);
    let spacing = isqrt_ceil((ell as u128) * (n as u128)) as u64; // s = ceil(sqrt(ell*n))

    let mut heights: Vec<u64> = (0..ell).map(|i| ((2 * spacing + 1) * i + spacing + 1).min(m)).collect();
    heights.dedup();
    let mut notes = Vec::new();
    if (heights.len() as u64) < ell {
        notes.push(format!(
            "grid too short for {ell} paths at spacing {spacing}; using {}",
            heights.len()
        ));
    }

    let segments: Vec<Segment> =
        heights.iter().map(|&h| Segment { height: h, lo: 1, hi: n }).collect();
    let path_len = (heights.len() as u64) * n;
    // row-end clipping costs at most a radius per path; retry absorbs it
    let base = isqrt_ceil(path_len as u128) as u64 + heights.len() as u64 - 1;
    let mut last_err = String::new();
    for horizon in base..=base + 12 {
        match tile_segments(&segments, horizon, 1) {
            Ok(tiling) => {
                let mut notes = notes.clone();
                if horizon > base {
                    notes.push(format!("path phase extended from {base} to {horizon} rounds"));
                }
                let flood = flood_distance(m, &heights);
                return Ok(assemble(
                    "multi-path",
                    grid,
                    tiling.placed,
                    heights,
                    horizon,
                    flood,
                    StrategyTarget::FullGrid,
                    notes,
                ));
            }
            Err(e) => last_err = e,
        }
    }
    Err(Error::InvalidInput(format!(
        "multi-path construction failed for {m}x{n} up to horizon {}: {last_err}",
        base + 12
    )))
}

/// Exact integer threshold `ceil((m + sqrt(4n - m^2 - 2m + 1) + 1) / 2)`.
fn top_bottom_budget(m: u64, n: u64) -> u64 {
    let disc = 4 * (n as u128) - (m as u128) * (m as u128) - 2 * m as u128 + 1;
    let root = isqrt_ceil(disc) as u64;
    ((m + 1 + root).div_ceil(2)).max(m)
}

fn try_top_bottom(grid: GridSpec, budget: u64) -> std::result::Result<StrategySchedule, String> {
    let (m, n) = (grid.m(), grid.n());
    let mut placed: Vec<(u64, Vertex, SourceMeta)> = Vec::new();

    // alternating phase: bottom, top, bottom, ..; consecutive sources are
    // offset so coverage on both paths stays contiguous and disjoint
    let mut col = budget;
    let mut round = 1u64;
    let mut front_bottom = 0u64; // row 1 covered through this column
    let mut front_top = m - 1; // row m covered through this column ([1, m-1] stays open)
    while round <= budget - m && col <= n && (front_bottom < n || front_top < n) {
        let radius = budget - round;
        let cross = radius - (m - 1);
        let on_bottom = round % 2 == 1;
        let (own_row, own_front, cross_row, cross_front) = if on_bottom {
            (1, &mut front_bottom, m, &mut front_top)
        } else {
            (m, &mut front_top, 1, &mut front_bottom)
        };

        let mut claims = Vec::new();
        let own = (col.saturating_sub(radius).max(1), (col + radius).min(n));
        if own.0 <= *own_front + 1 && own.1 > *own_front {
            claims.push(PathClaim { height: own_row, lo: own.0.max(1), hi: own.1 });
            *own_front = own.1;
        } else if own.0 > *own_front + 1 {
            return Err(format!("gap on row {own_row} before column {}", own.0));
        }
        let cr = (col.saturating_sub(cross).max(1), (col + cross).min(n));
        if cr.0 <= *cross_front + 1 && cr.1 > *cross_front {
            claims.push(PathClaim { height: cross_row, lo: cr.0, hi: cr.1 });
            *cross_front = cr.1;
        } else if cr.0 > *cross_front + 1 {
            return Err(format!("gap on row {cross_row} before column {}", cr.0));
        }

        placed.push((
            round,
            Vertex::new(own_row, col),
            SourceMeta { phase: SourcePhase::Alternating, claims },
        ));
        col += 2 * radius - m + 1;
        round += 1;
    }

    // leftover pieces: the head of the top path plus whatever the fronts
    // did not reach; at most three paths
    let mut pieces = Vec::new();
    if m >= 2 {
        pieces.push(Segment { height: m, lo: 1, hi: m - 1 });
    }
    if front_top < n {
        match pieces.last_mut() {
            Some(last) if last.height == m && last.hi + 1 >= front_top + 1 => {
                last.hi = n; // adjacent to the uncovered head, merge
            }
            _ => pieces.push(Segment { height: m, lo: front_top + 1, hi: n }),
        }
    }
    if front_bottom < n {
        pieces.push(Segment { height: 1, lo: front_bottom + 1, hi: n });
    }
    if pieces.len() > 3 {
        return Err(format!("{} leftover pieces", pieces.len()));
    }

    let tiling = tile_segments(&pieces, budget, round)?;
    placed.extend(tiling.placed);
    Ok(assemble(
        "top-bottom",
        grid,
        placed,
        vec![1, m],
        budget,
        0,
        StrategyTarget::Paths(vec![1, m]),
        Vec::new(),
    ))
}

/// Burns the top and bottom paths by alternating staggered sources, then
/// finishes the at most three leftover pieces as one cut path.
/// Applicable for `m <= sqrt(2n)`; rounds land within a small additive slack
/// of the exact threshold returned by the internal budget formula.
pub fn top_bottom_strategy(m: u64, n: u64) -> Result<StrategySchedule> {
    let grid = GridSpec::new(m, n)?;
    if (m as u128) * (m as u128) > 2 * n as u128 {
        return Err(Error::BranchInapplicable(format!(
            "top-bottom needs m <= sqrt(2n); got m={m}, n={n}"
        )));
    }
    if m == 1 {
        // top and bottom coincide
        let mut s = path_strategy(n)?;
        s.name = "top-bottom".into();
        s.target = StrategyTarget::Paths(vec![1]);
        s.notes.push("single-row grid: top and bottom paths coincide".into());
        return Ok(s);
    }
    let base = top_bottom_budget(m, n);
    let mut last_err = String::new();
    for budget in base..=base + 12 {
        match try_top_bottom(grid, budget) {
            Ok(mut schedule) => {
                if budget > base {
                    schedule
                        .notes
                        .push(format!("budget raised from {base} to {budget} for integrality"));
                }
                return Ok(schedule);
            }
            Err(e) => last_err = e,
        }
    }
    Err(Error::InvalidInput(format!(
        "top-bottom construction failed for {m}x{n} up to budget {}: {last_err}",
        base + 12
    )))
}

/// Runs the top-bottom strategy on the middle half of the rows (where the
/// fence parameter halves), then floods roughly `m/4 + 1` rounds to reach
/// the whole grid. Applicable for `m <= 2*sqrt(2n)`.
pub fn composed_small_c_strategy(m: u64, n: u64) -> Result<StrategySchedule> {
    let grid = GridSpec::new(m, n)?;
    if (m as u128) * (m as u128) > 8 * n as u128 {
        return Err(Error::BranchInapplicable(format!(
            "composed strategy needs m <= 2*sqrt(2n); got m={m}, n={n}"
        )));
    }
    if m == 1 {
        let mut s = path_strategy(n)?;
        s.name = "composed-small-c".into();
        s.notes.push("degenerate height: plain path burn".into());
        return Ok(s);
    }

    let row_lo = (m / 4).max(1);
    let mut row_hi = (3 * m / 4).saturating_sub(1).max(row_lo);
    // the inner band must itself satisfy the top-bottom regime
    while row_hi > row_lo {
        let inner_m = row_hi - row_lo + 1;
        if (inner_m as u128) * (inner_m as u128) <= 2 * n as u128 {
            break;
        }
        row_hi -= 1;
    }

    if row_hi == row_lo {
        // band too thin for two paths: burn one central path and flood
        let center = m.div_ceil(2);
        let horizon = isqrt_ceil(n as u128) as u64;
        let tiling = tile_segments(&[Segment { height: center, lo: 1, hi: n }], horizon, 1)
            .map_err(Error::InvalidInput)?;
        let flood = flood_distance(m, &[center]);
        let mut s = assemble(
            "composed-small-c",
            grid,
            tiling.placed,
            vec![center],
            horizon,
            flood,
            StrategyTarget::FullGrid,
            vec!["band too thin: single central path".into()],
        );
        s.notes.push(format!("flooding {flood} rounds from row {center}"));
        return Ok(s);
    }

    let inner_m = row_hi - row_lo + 1;
    let inner = top_bottom_strategy(inner_m, n)?;
    let shift = row_lo - 1;
    let placed: Vec<(u64, Vertex, SourceMeta)> = inner
        .sources
        .iter()
        .zip(&inner.phases)
        .enumerate()
        .map(|(i, (v, meta))| {
            let meta = SourceMeta {
                phase: meta.phase,
                claims: meta
                    .claims
                    .iter()
                    .map(|c| PathClaim { height: c.height + shift, ..*c })
                    .collect(),
            };
            (i as u64 + 1, Vertex::new(v.row + shift, v.col), meta)
        })
        .collect();

    let covered = vec![row_lo, row_hi];
    let flood = flood_distance(m, &covered);
    let mut notes = inner.notes;
    notes.push(format!("inner band rows {row_lo}..={row_hi}"));
    Ok(assemble(
        "composed-small-c",
        grid,
        placed,
        covered,
        inner.path_rounds,
        flood,
        StrategyTarget::FullGrid,
        notes,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{simulate_grid, SimMode};
    use crate::target::TargetSet;

    fn simulate_full(s: &StrategySchedule) -> u64 {
        let trace = simulate_grid(&s.grid, &s.sources, &TargetSet::All, SimMode::Strict).unwrap();
        trace.final_round.expect("strategy must burn the grid")
    }

    fn simulate_paths(s: &StrategySchedule, heights: &[u64]) -> u64 {
        let target = TargetSet::paths(heights.iter().copied());
        let trace = simulate_grid(&s.grid, &s.sources, &target, SimMode::Strict).unwrap();
        trace.final_round.expect("strategy must burn its paths")
    }

    #[test]
    fn path_strategy_examples() {
        let s = path_strategy(1).unwrap();
        assert_eq!(s.sources.len(), 1);
        assert_eq!(s.claimed_rounds, 1);

        let s = path_strategy(16).unwrap();
        assert_eq!(s.sources.len(), 4);
        assert_eq!(s.claimed_rounds, 4);
        assert_eq!(simulate_full(&s), 4);

        let s = path_strategy(17).unwrap();
        assert_eq!(s.claimed_rounds, 5);
        assert!(simulate_full(&s) <= 5);
    }

    #[test]
    fn path_strategy_full_sweep() {
        for n in 1..=120 {
            let s = path_strategy(n).unwrap();
            let rounds = simulate_full(&s);
            assert!(rounds <= s.claimed_rounds, "n={n}: {rounds} > {}", s.claimed_rounds);
            assert_eq!(s.claimed_rounds, isqrt_ceil(n as u128) as u64);
        }
    }

    #[test]
    fn multi_path_small_grids() {
        for (m, n) in [(1, 9), (2, 4), (3, 12), (4, 16), (6, 40), (5, 64)] {
            let s = multi_path_strategy(m, n).unwrap();
            let rounds = simulate_full(&s);
            assert!(
                rounds <= s.claimed_rounds,
                "{m}x{n}: burned in {rounds}, claimed {}",
                s.claimed_rounds
            );
        }
    }

    #[test]
    fn multi_path_degenerates_to_path() {
        let s = multi_path_strategy(1, 25).unwrap();
        assert_eq!(s.claimed_rounds, 5);
        assert_eq!(s.flood_rounds, 0);
    }

    #[test]
    fn top_bottom_regime_guard() {
        assert!(matches!(
            top_bottom_strategy(10, 20),
            Err(Error::BranchInapplicable(_))
        ));
    }

    #[test]
    fn top_bottom_small_cases() {
        for (m, n) in [(2, 2), (2, 16), (3, 30), (4, 16), (4, 60), (5, 40), (6, 64), (14, 100)] {
            let s = top_bottom_strategy(m, n).unwrap();
            let rounds = simulate_paths(&s, &[1, m]);
            assert!(
                rounds <= s.claimed_rounds,
                "{m}x{n}: paths burned in {rounds}, claimed {}",
                s.claimed_rounds
            );
        }
    }

    #[test]
    fn top_bottom_budget_examples() {
        // ceil((10 + sqrt(39881) + 1) / 2) = 106
        assert_eq!(top_bottom_budget(10, 10_000), 106);
        let s = top_bottom_strategy(10, 10_000).unwrap();
        assert!(s.claimed_rounds <= 106 + 3, "claimed {}", s.claimed_rounds);
        let rounds = simulate_paths(&s, &[1, 10]);
        assert!(rounds <= s.claimed_rounds);
    }

    #[test]
    fn top_bottom_degenerate_budget_equals_m() {
        // b = m: no alternating sources, pure leftover burn
        // m^2 = 2n boundary: m=4, n=8
        let s = top_bottom_strategy(4, 8).unwrap();
        let rounds = simulate_paths(&s, &[1, 4]);
        assert!(rounds <= s.claimed_rounds);
    }

    #[test]
    fn alternating_claims_are_disjoint_and_sized() {
        let s = top_bottom_strategy(10, 10_000).unwrap();
        let m = s.grid.m();
        let mut per_row: std::collections::HashMap<u64, Vec<(u64, u64)>> = Default::default();
        for (i, meta) in s.phases.iter().enumerate() {
            if meta.phase != SourcePhase::Alternating {
                continue;
            }
            let radius = s.path_rounds - (i as u64 + 1);
            let burn_rounds = radius + 1; // source burning i rounds has radius i-1
            let unclipped = meta
                .claims
                .iter()
                .all(|c| c.lo > 1 && c.hi < s.grid.n());
            if unclipped && burn_rounds >= m {
                let covered: u64 = meta.claims.iter().map(|c| c.hi - c.lo + 1).sum();
                assert_eq!(covered, 4 * burn_rounds - 2 * m, "source {i}");
            }
            for c in &meta.claims {
                per_row.entry(c.height).or_default().push((c.lo, c.hi));
            }
        }
        for (row, mut intervals) in per_row {
            intervals.sort_unstable();
            for pair in intervals.windows(2) {
                assert!(pair[0].1 < pair[1].0, "row {row}: overlapping alternating claims");
            }
        }
    }

    #[test]
    fn composed_small_cases() {
        for (m, n) in [(2, 4), (3, 9), (4, 16), (5, 25), (8, 36), (6, 64), (10, 100)] {
            let s = composed_small_c_strategy(m, n).unwrap();
            let rounds = simulate_full(&s);
            assert!(
                rounds <= s.claimed_rounds,
                "{m}x{n}: burned in {rounds}, claimed {}",
                s.claimed_rounds
            );
        }
    }

    #[test]
    fn composed_regime_guard_and_degenerate() {
        assert!(matches!(
            composed_small_c_strategy(100, 100),
            Err(Error::BranchInapplicable(_))
        ));
        let s = composed_small_c_strategy(1, 49).unwrap();
        assert_eq!(s.claimed_rounds, 7);
    }

    #[test]
    fn composed_hundred_by_ten_thousand() {
        // c = 1 flagship case: claimed/sqrt(n) lands in the expected window
        let s = composed_small_c_strategy(100, 10_000).unwrap();
        let ratio = s.claimed_rounds as f64 / 100.0;
        assert!(
            (1.468..1.62).contains(&ratio),
            "claimed {} gives ratio {ratio}",
            s.claimed_rounds
        );
        let rounds = simulate_full(&s);
        assert!(rounds <= s.claimed_rounds);
    }

    #[test]
    fn schedules_serialize_with_grid_fields_inline() {
        let s = path_strategy(9).unwrap();
        let json = serde_json::to_value(&s).unwrap();
        assert_eq!(json["m"], 1);
        assert_eq!(json["n"], 9);
        assert!(json["sources"].is_array());
        assert!(json["phases"].is_array());
    }
}
