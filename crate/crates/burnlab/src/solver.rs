//! Exact burning numbers via iterative-deepening cover search.
//!
//! For a horizon `k`, a burning sequence exists iff some choice of centers
//! with radii `k-1, k-2, .., 0` covers the target (the repair construction in
//! [`crate::cover`] turns any such cover into a strict sequence of the same
//! length). The search deepens `k = 1, 2, ..`; within a fixed `k` it branches
//! on the uncovered target vertex farthest from all chosen centers, assigning
//! it a remaining radius and a center within that radius, largest radius
//! first, candidates in (row, col) order.
//!
//! Pruning is by capacity counting: for a family of witness subsets `W` of
//! the target (each horizontal path, the top/bottom pair, the whole target),
//! a partial assignment is hopeless once some `W` has more uncovered vertices
//! than the remaining radii can cover, using the precomputed maxima
//! `max_v |B(v,r) ∩ W|`.
//!
//! With `symmetry_reduction` on and a flip-invariant target, the first center
//! (the one carrying radius `k-1`; any cover can be rewritten to use it) is
//! restricted to a fundamental domain of the grid's flip symmetries.
//!
//! The reported value is independent of `threads` whenever the node budget is
//! not exhausted; certificates may differ but always strict-validate.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cover::{repair_cover_explicit, repair_cover_grid, CoverCertificate};
use crate::error::{Error, Result};
use crate::graph::{ExplicitGraph, DEFAULT_MATERIALIZE_CAP};
use crate::grid::{GridSpec, HorizontalPath, Vertex};
use crate::sim::{simulate_explicit, simulate_grid, SimMode};
use crate::target::TargetSet;

/// Explicit hosts need an all-pairs distance table; keep them small.
pub const EXPLICIT_SOLVER_CAP: usize = 2_048;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Hard cap on the horizon `k`.
    pub max_horizon: u64,
    /// Search-node cap; exceeding it yields an inconclusive result.
    pub node_budget: u64,
    pub symmetry_reduction: bool,
    /// Worker threads for the first-assignment split. Values independent of
    /// this hint; certificates may vary.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_horizon: 10_000,
            node_budget: 10_000_000,
            symmetry_reduction: true,
            threads: 1,
        }
    }
}

impl SolverConfig {
    fn check(&self) -> Result<()> {
        if self.max_horizon == 0 || self.node_budget == 0 || self.threads == 0 {
            return Err(Error::InvalidInput("solver caps must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum SolveOutcome {
    Solved {
        value: u64,
    },
    /// The budget or horizon ran out: every `k < lower` is refuted, and
    /// `upper` carries the best certificate length found, if any.
    Inconclusive {
        lower: u64,
        upper: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed_ms: u64,
    pub highest_refuted: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveResult<V> {
    pub outcome: SolveOutcome,
    pub cover: Option<CoverCertificate<V>>,
    /// Strict-valid burning sequence realizing `value`.
    pub certificate: Option<Vec<V>>,
    pub stats: SearchStats,
}

impl<V> SolveResult<V> {
    pub fn value(&self) -> Option<u64> {
        match self.outcome {
            SolveOutcome::Solved { value } => Some(value),
            SolveOutcome::Inconclusive { .. } => None,
        }
    }
}

// ---------------------------------------------------------------------------
// search spaces

trait Space: Sync {
    fn distance(&self, a: usize, b: usize) -> u64;
    /// Candidate centers within distance `r` of `u`, ascending ids.
    fn candidates_within(&self, u: usize, r: u64, out: &mut Vec<usize>);
    /// Depth-0 candidates for the radius `k-1` center under symmetry
    /// reduction, or `None` when no flip symmetry applies.
    fn fundamental_domain(&self) -> Option<Vec<usize>>;
    /// `max_v |B(v, r) ∩ witness|` over all vertices `v`.
    fn max_ball_cover(&self, witness: &[usize], r: u64) -> u64;
}

struct GridSpace {
    g: GridSpec,
    row_symmetric: bool,
    col_symmetric: bool,
}

impl GridSpace {
    fn rc(&self, id: usize) -> (u64, u64) {
        let n = self.g.n() as usize;
        ((id / n) as u64 + 1, (id % n) as u64 + 1)
    }
}

impl Space for GridSpace {
    fn distance(&self, a: usize, b: usize) -> u64 {
        let (ar, ac) = self.rc(a);
        let (br, bc) = self.rc(b);
        ar.abs_diff(br) + ac.abs_diff(bc)
    }

    fn candidates_within(&self, u: usize, r: u64, out: &mut Vec<usize>) {
        let (m, n) = (self.g.m(), self.g.n());
        let (ur, uc) = self.rc(u);
        let lo_row = ur.saturating_sub(r).max(1);
        let hi_row = (ur + r).min(m);
        for row in lo_row..=hi_row {
            let rem = r - ur.abs_diff(row);
            let lo = uc.saturating_sub(rem).max(1);
            let hi = (uc + rem).min(n);
            for col in lo..=hi {
                out.push(self.g.vertex_id(Vertex::new(row, col)));
            }
        }
    }

    fn fundamental_domain(&self) -> Option<Vec<usize>> {
        if !self.row_symmetric && !self.col_symmetric {
            return None;
        }
        let (m, n) = (self.g.m(), self.g.n());
        let hi_row = if self.row_symmetric { m.div_ceil(2) } else { m };
        let hi_col = if self.col_symmetric { n.div_ceil(2) } else { n };
        let mut out = Vec::with_capacity((hi_row * hi_col) as usize);
        for row in 1..=hi_row {
            for col in 1..=hi_col {
                out.push(self.g.vertex_id(Vertex::new(row, col)));
            }
        }
        Some(out)
    }

    fn max_ball_cover(&self, witness: &[usize], r: u64) -> u64 {
        // witness sets are unions of rows or small vertex lists; group by row
        let mut rows: Vec<(u64, Vec<u64>)> = Vec::new();
        for &id in witness {
            let (row, col) = self.rc(id);
            match rows.iter_mut().find(|(h, _)| *h == row) {
                Some((_, cols)) => cols.push(col),
                None => rows.push((row, vec![col])),
            }
        }
        // full rows admit O(1) interval counting; sparse rows fall back to
        // scanning their columns
        let n = self.g.n();
        let mut best = 0u64;
        for vr in 1..=self.g.m() {
            for vc in 1..=n {
                let mut total = 0u64;
                for (h, cols) in &rows {
                    let Some(rem) = r.checked_sub(vr.abs_diff(*h)) else { continue };
                    if cols.len() as u64 == n {
                        total += (vc + rem).min(n) - vc.saturating_sub(rem).max(1) + 1;
                    } else {
                        total += cols.iter().filter(|&&c| c.abs_diff(vc) <= rem).count() as u64;
                    }
                }
                best = best.max(total);
            }
        }
        best
    }
}

struct ExplicitSpace {
    n: usize,
    /// Flattened all-pairs distances; `u32::MAX` marks unreachable.
    dist: Vec<u32>,
}

impl ExplicitSpace {
    fn build(graph: &ExplicitGraph) -> Result<Self> {
        let n = graph.vertex_count();
        if n > EXPLICIT_SOLVER_CAP {
            return Err(Error::ResourceLimit(format!(
                "explicit solver handles at most {EXPLICIT_SOLVER_CAP} vertices, got {n}"
            )));
        }
        let mut dist = vec![u32::MAX; n * n];
        for v in 0..n {
            for (w, d) in graph.bfs_distances(v).into_iter().enumerate() {
                if let Some(d) = d {
                    dist[v * n + w] = d as u32;
                }
            }
        }
        Ok(ExplicitSpace { n, dist })
    }
}

impl Space for ExplicitSpace {
    fn distance(&self, a: usize, b: usize) -> u64 {
        let d = self.dist[a * self.n + b];
        if d == u32::MAX {
            u64::MAX / 2
        } else {
            d as u64
        }
    }

    fn candidates_within(&self, u: usize, r: u64, out: &mut Vec<usize>) {
        for v in 0..self.n {
            if self.distance(u, v) <= r {
                out.push(v);
            }
        }
    }

    fn fundamental_domain(&self) -> Option<Vec<usize>> {
        None
    }

    fn max_ball_cover(&self, witness: &[usize], r: u64) -> u64 {
        (0..self.n)
            .map(|v| witness.iter().filter(|&&t| self.distance(v, t) <= r).count() as u64)
            .max()
            .unwrap_or(0)
    }
}

// ---------------------------------------------------------------------------
// witnesses and the per-k search

struct Witness {
    /// Indices into the target list.
    positions: Vec<usize>,
    /// `maxcov[r]`, extended lazily as the horizon deepens.
    maxcov: Vec<u64>,
}

fn build_witnesses(space: &impl Space, target: &[usize], heights: Option<&[u64]>, n_cols: u64) -> Vec<Witness> {
    let mut out = Vec::new();
    // the whole target
    out.push(Witness { positions: (0..target.len()).collect(), maxcov: Vec::new() });
    if let Some(heights) = heights {
        if heights.len() > 1 {
            // each row, plus the extreme pair, are the useful counting sets
            let row_of = |pos: usize| (target[pos] as u64) / n_cols;
            for &h in heights {
                let positions: Vec<usize> =
                    (0..target.len()).filter(|&p| row_of(p) == h - 1).collect();
                out.push(Witness { positions, maxcov: Vec::new() });
            }
            let (lo, hi) = (heights[0], *heights.last().unwrap());
            if hi > lo {
                let positions: Vec<usize> = (0..target.len())
                    .filter(|&p| row_of(p) == lo - 1 || row_of(p) == hi - 1)
                    .collect();
                out.push(Witness { positions, maxcov: Vec::new() });
            }
        }
    }
    let _ = space;
    out
}

fn extend_witnesses(space: &impl Space, target: &[usize], witnesses: &mut [Witness], k: u64) {
    for w in witnesses.iter_mut() {
        let ids: Vec<usize> = w.positions.iter().map(|&p| target[p]).collect();
        while (w.maxcov.len() as u64) < k {
            let r = w.maxcov.len() as u64;
            w.maxcov.push(space.max_ball_cover(&ids, r));
        }
    }
}

enum SearchOutcome {
    Found(Vec<(u64, usize)>),
    Refuted,
    BudgetExhausted,
    Aborted,
}

struct SearchCtx<'a, S: Space> {
    space: &'a S,
    target: &'a [usize],
    witnesses: &'a [Witness],
    nodes: &'a AtomicU64,
    budget: u64,
    stop: &'a AtomicBool,
}

struct SearchState {
    covered: Vec<bool>,
    uncovered: usize,
    min_dist: Vec<u64>,
    remaining: Vec<u64>,
    assignments: Vec<(u64, usize)>,
}

impl SearchState {
    fn fresh(target_len: usize, k: u64) -> Self {
        SearchState {
            covered: vec![false; target_len],
            uncovered: target_len,
            min_dist: vec![u64::MAX; target_len],
            remaining: (0..k).rev().collect(),
            assignments: Vec::new(),
        }
    }
}

struct Placement {
    covered_now: Vec<usize>,
    dist_undo: Vec<(usize, u64)>,
}

impl<'a, S: Space> SearchCtx<'a, S> {
    fn place(&self, state: &mut SearchState, radius: u64, center: usize) -> Placement {
        let mut undo = Placement { covered_now: Vec::new(), dist_undo: Vec::new() };
        for pos in 0..self.target.len() {
            let d = self.space.distance(center, self.target[pos]);
            if d < state.min_dist[pos] {
                undo.dist_undo.push((pos, state.min_dist[pos]));
                state.min_dist[pos] = d;
            }
            if !state.covered[pos] && d <= radius {
                state.covered[pos] = true;
                state.uncovered -= 1;
                undo.covered_now.push(pos);
            }
        }
        undo
    }

    fn unplace(&self, state: &mut SearchState, undo: Placement) {
        for pos in undo.covered_now {
            state.covered[pos] = false;
            state.uncovered += 1;
        }
        for (pos, d) in undo.dist_undo {
            state.min_dist[pos] = d;
        }
    }

    fn counting_prune(&self, state: &SearchState) -> bool {
        for w in self.witnesses {
            let uncovered_w =
                w.positions.iter().filter(|&&p| !state.covered[p]).count() as u64;
            if uncovered_w == 0 {
                continue;
            }
            let capacity: u64 =
                state.remaining.iter().map(|&r| w.maxcov[r as usize]).sum();
            if uncovered_w > capacity {
                return true;
            }
        }
        false
    }

    fn farthest_uncovered(&self, state: &SearchState) -> usize {
        let mut best = usize::MAX;
        let mut best_d = 0u64;
        for pos in 0..self.target.len() {
            if !state.covered[pos] && (best == usize::MAX || state.min_dist[pos] > best_d) {
                best = pos;
                best_d = state.min_dist[pos];
            }
        }
        best
    }

    fn search(&self, state: &mut SearchState) -> SearchOutcome {
        if state.uncovered == 0 {
            return SearchOutcome::Found(state.assignments.clone());
        }
        if state.remaining.is_empty() || self.counting_prune(state) {
            return SearchOutcome::Refuted;
        }
        if self.stop.load(Ordering::Relaxed) {
            return SearchOutcome::Aborted;
        }

        let u = self.target[self.farthest_uncovered(state)];
        let mut candidates = Vec::new();
        for ri in 0..state.remaining.len() {
            let r = state.remaining[ri];
            candidates.clear();
            self.space.candidates_within(u, r, &mut candidates);
            for &v in &candidates {
                if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
                    return SearchOutcome::BudgetExhausted;
                }
                state.remaining.remove(ri);
                let undo = self.place(state, r, v);
                state.assignments.push((r, v));
                let res = self.search(state);
                state.assignments.pop();
                self.unplace(state, undo);
                state.remaining.insert(ri, r);
                match res {
                    SearchOutcome::Refuted => {}
                    other => return other,
                }
            }
        }
        SearchOutcome::Refuted
    }
}

/// Per-horizon result: found assignments, a full refutation, or a budget cut.
fn solve_at_k<S: Space>(
    space: &S,
    target: &[usize],
    witnesses: &[Witness],
    k: u64,
    cfg: &SolverConfig,
    nodes: &AtomicU64,
) -> SearchOutcome {
    // depth-0 branch list
    let symmetric_first = if cfg.symmetry_reduction { space.fundamental_domain() } else { None };
    let branches: Vec<(u64, usize)> = match &symmetric_first {
        Some(domain) => domain.iter().map(|&v| (k - 1, v)).collect(),
        None => {
            let u0 = target[0];
            let mut out = Vec::new();
            let mut cands = Vec::new();
            for r in (0..k).rev() {
                cands.clear();
                space.candidates_within(u0, r, &mut cands);
                out.extend(cands.iter().map(|&v| (r, v)));
            }
            out
        }
    };

    let stop = AtomicBool::new(false);
    let found: Mutex<Option<Vec<(u64, usize)>>> = Mutex::new(None);
    let budget_hit = AtomicBool::new(false);

    let run_branch = |(r, v): (u64, usize)| -> bool {
        // returns true to keep going
        let ctx = SearchCtx {
            space,
            target,
            witnesses,
            nodes,
            budget: cfg.node_budget,
            stop: &stop,
        };
        let mut state = SearchState::fresh(target.len(), k);
        let ri = state.remaining.iter().position(|&x| x == r).unwrap();
        state.remaining.remove(ri);
        let undo = ctx.place(&mut state, r, v);
        state.assignments.push((r, v));
        let res = ctx.search(&mut state);
        ctx.unplace(&mut state, undo);
        match res {
            SearchOutcome::Found(a) => {
                let mut slot = found.lock().unwrap();
                if slot.is_none() {
                    *slot = Some(a);
                }
                stop.store(true, Ordering::Relaxed);
                false
            }
            SearchOutcome::BudgetExhausted => {
                budget_hit.store(true, Ordering::Relaxed);
                stop.store(true, Ordering::Relaxed);
                false
            }
            SearchOutcome::Aborted => false,
            SearchOutcome::Refuted => true,
        }
    };

    let threads = cfg.threads.min(branches.len().max(1));
    if threads <= 1 {
        for &b in &branches {
            if !run_branch(b) {
                break;
            }
        }
    } else {
        let chunk = branches.len().div_ceil(threads);
        let run_ref = &run_branch;
        let stop_ref = &stop;
        std::thread::scope(|scope| {
            for part in branches.chunks(chunk) {
                scope.spawn(move || {
                    for &b in part {
                        if stop_ref.load(Ordering::Relaxed) || !run_ref(b) {
                            break;
                        }
                    }
                });
            }
        });
    }

    let found = found.lock().unwrap().take();
    match found {
        Some(a) => SearchOutcome::Found(a),
        None if budget_hit.load(Ordering::Relaxed) => SearchOutcome::BudgetExhausted,
        None => SearchOutcome::Refuted,
    }
}

/// Arranges found assignments into a certificate center list: position `i`
/// carries radius `k-1-i`; unused positions repeat the widest-radius center.
fn assignments_to_centers(assignments: &[(u64, usize)], k: u64) -> Vec<usize> {
    let filler = assignments.iter().max_by_key(|(r, _)| *r).expect("nonempty assignments").1;
    let mut centers = vec![filler; k as usize];
    for &(r, v) in assignments {
        centers[(k - 1 - r) as usize] = v;
    }
    centers
}

struct RawSolve {
    outcome: SolveOutcome,
    assignments: Option<Vec<(u64, usize)>>,
    stats: SearchStats,
}

fn solve_ids<S: Space>(space: &S, target: &[usize], heights: Option<&[u64]>, n_cols: u64, cfg: &SolverConfig) -> RawSolve {
    let start = Instant::now();
    let nodes = AtomicU64::new(0);
    let mut witnesses = build_witnesses(space, target, heights, n_cols);
    let mut highest_refuted = 0u64;

    // k = |target| always succeeds (a center on every target vertex), so the
    // loop terminates before max_horizon on solvable instances.
    let horizon_cap = cfg.max_horizon.min(target.len() as u64);
    let mut k = 1u64;
    let outcome = loop {
        if k > horizon_cap {
            break None;
        }
        extend_witnesses(space, target, &mut witnesses, k);
        // root counting refutation needs no search
        let capacity: u64 = witnesses[0].maxcov[..k as usize].iter().sum();
        if capacity < target.len() as u64 {
            highest_refuted = k;
            k += 1;
            continue;
        }
        match solve_at_k(space, target, &witnesses, k, cfg, &nodes) {
            SearchOutcome::Found(a) => break Some(Some(a)),
            SearchOutcome::Refuted => {
                highest_refuted = k;
                k += 1;
            }
            SearchOutcome::BudgetExhausted => break Some(None),
            SearchOutcome::Aborted => unreachable!("abort only follows found or budget"),
        }
    };

    let stats = SearchStats {
        nodes: nodes.load(Ordering::Relaxed),
        elapsed_ms: start.elapsed().as_millis() as u64,
        highest_refuted,
    };
    match outcome {
        Some(Some(assignments)) => RawSolve {
            outcome: SolveOutcome::Solved { value: k },
            assignments: Some(assignments),
            stats,
        },
        // budget or horizon ran out
        _ => RawSolve {
            outcome: SolveOutcome::Inconclusive { lower: highest_refuted + 1, upper: None },
            assignments: None,
            stats,
        },
    }
}

// ---------------------------------------------------------------------------
// public entry points

/// Exact `b(host, target)` on an implicit grid host with at most
/// [`DEFAULT_MATERIALIZE_CAP`] vertices.
pub fn burning_number_grid(
    g: &GridSpec,
    target: &TargetSet,
    cfg: &SolverConfig,
) -> Result<SolveResult<Vertex>> {
    cfg.check()?;
    if g.vertex_count() > DEFAULT_MATERIALIZE_CAP {
        return Err(Error::ResourceLimit(format!(
            "exact solver handles grids up to {DEFAULT_MATERIALIZE_CAP} vertices, got {}",
            g.vertex_count()
        )));
    }
    let target_ids = target.expand_grid_ids(g)?;
    let heights = target.grid_heights(g);
    let space = GridSpace {
        g: *g,
        row_symmetric: target.row_symmetric(g),
        col_symmetric: target.col_symmetric(g),
    };
    let raw = solve_ids(&space, &target_ids, heights.as_deref(), g.n(), cfg);

    let (cover, certificate) = match (&raw.outcome, &raw.assignments) {
        (SolveOutcome::Solved { value }, Some(assignments)) => {
            let centers = assignments_to_centers(assignments, *value)
                .into_iter()
                .map(|id| g.vertex_from_id(id))
                .collect();
            let cover = CoverCertificate::new(*value, centers)?;
            let schedule = repair_cover_grid(g, &cover)?;
            let trace = simulate_grid(g, &schedule, target, SimMode::Strict)?;
            assert!(
                trace.target_burned_within_horizon && schedule.len() as u64 == *value,
                "solver certificate failed validation on {g}"
            );
            (Some(cover), Some(schedule))
        }
        _ => (None, None),
    };
    Ok(SolveResult { outcome: raw.outcome, cover, certificate, stats: raw.stats })
}

/// Exact `b(G, P)` for a union of horizontal paths.
pub fn partial_burning_number(
    g: &GridSpec,
    paths: &[HorizontalPath],
    cfg: &SolverConfig,
) -> Result<SolveResult<Vertex>> {
    burning_number_grid(g, &TargetSet::Paths(paths.to_vec()), cfg)
}

/// Exact `b(graph, target)` on an explicit host.
pub fn burning_number_explicit(
    graph: &ExplicitGraph,
    target: &TargetSet,
    cfg: &SolverConfig,
) -> Result<SolveResult<usize>> {
    cfg.check()?;
    let target_ids = target.expand_explicit_ids(graph)?;
    let space = ExplicitSpace::build(graph)?;
    let raw = solve_ids(&space, &target_ids, None, 0, cfg);

    let (cover, certificate) = match (&raw.outcome, &raw.assignments) {
        (SolveOutcome::Solved { value }, Some(assignments)) => {
            let centers = assignments_to_centers(assignments, *value);
            let cover = CoverCertificate::new(*value, centers)?;
            let schedule = repair_cover_explicit(graph, &cover)?;
            let trace = simulate_explicit(graph, &schedule, target, SimMode::Strict)?;
            assert!(
                trace.target_burned_within_horizon && schedule.len() as u64 == *value,
                "solver certificate failed validation on explicit host"
            );
            (Some(cover), Some(schedule))
        }
        _ => (None, None),
    };
    Ok(SolveResult { outcome: raw.outcome, cover, certificate, stats: raw.stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve_grid(m: u64, n: u64) -> u64 {
        let g = GridSpec::new(m, n).unwrap();
        burning_number_grid(&g, &TargetSet::All, &SolverConfig::default())
            .unwrap()
            .value()
            .unwrap()
    }

    #[test]
    fn tiny_grids() {
        assert_eq!(solve_grid(1, 1), 1);
        assert_eq!(solve_grid(2, 2), 2);
        assert_eq!(solve_grid(3, 3), 3);
    }

    #[test]
    fn path_formula_smoke() {
        // b(P_n) = ceil(sqrt(n)) for a few n; the full sweep is acceptance 1
        for (n, want) in [(1, 1), (2, 2), (4, 2), (5, 3), (16, 4), (17, 5), (30, 6)] {
            assert_eq!(solve_grid(1, n), want, "P_{n}");
        }
    }

    #[test]
    fn fence_4x16_is_six() {
        // pinned: >= 6 by the two-path counting bound, <= 6 by the shipped
        // six-round schedule
        assert_eq!(solve_grid(4, 16), 6);
    }

    #[test]
    fn partial_top_bottom_4x16() {
        let g = GridSpec::new(4, 16).unwrap();
        let res = partial_burning_number(
            &g,
            &[HorizontalPath::new(1), HorizontalPath::new(4)],
            &SolverConfig::default(),
        )
        .unwrap();
        assert_eq!(res.value(), Some(6));
    }

    #[test]
    fn partial_single_path_needs_sqrt_n() {
        for m in [1u64, 2, 4] {
            let g = GridSpec::new(m, 16).unwrap();
            let res =
                partial_burning_number(&g, &[HorizontalPath::new(1)], &SolverConfig::default())
                    .unwrap();
            assert_eq!(res.value(), Some(4), "m={m}");
        }
    }

    #[test]
    fn single_vertex_target() {
        let g = GridSpec::new(5, 9).unwrap();
        let res = burning_number_grid(
            &g,
            &TargetSet::GridVertices(vec![Vertex::new(3, 3)]),
            &SolverConfig::default(),
        )
        .unwrap();
        assert_eq!(res.value(), Some(1));
    }

    #[test]
    fn certificates_validate() {
        for (m, n) in [(1, 9), (2, 5), (3, 7), (4, 10)] {
            let g = GridSpec::new(m, n).unwrap();
            let res = burning_number_grid(&g, &TargetSet::All, &SolverConfig::default()).unwrap();
            let value = res.value().unwrap();
            let schedule = res.certificate.unwrap();
            assert_eq!(schedule.len() as u64, value);
            let trace = simulate_grid(&g, &schedule, &TargetSet::All, SimMode::Strict).unwrap();
            assert!(trace.target_burned_within_horizon);
        }
    }

    #[test]
    fn explicit_matches_grid() {
        use crate::graph::ExplicitGraph;
        for (m, n) in [(2, 3), (3, 4), (1, 10)] {
            let g = GridSpec::new(m, n).unwrap();
            let eg = ExplicitGraph::from_grid(&g, 10_000).unwrap();
            let a = burning_number_grid(&g, &TargetSet::All, &SolverConfig::default())
                .unwrap()
                .value();
            let b = burning_number_explicit(&eg, &TargetSet::All, &SolverConfig::default())
                .unwrap()
                .value();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let g = GridSpec::new(4, 16).unwrap();
        let cfg = SolverConfig { node_budget: 10, ..SolverConfig::default() };
        let res = burning_number_grid(&g, &TargetSet::All, &cfg).unwrap();
        match res.outcome {
            SolveOutcome::Inconclusive { lower, upper } => {
                assert!(lower >= 1);
                assert!(upper.is_none());
            }
            SolveOutcome::Solved { .. } => panic!("expected inconclusive under a 10-node budget"),
        }
    }

    #[test]
    fn symmetry_toggle_agrees() {
        for (m, n) in [(3, 5), (2, 7), (4, 6)] {
            let g = GridSpec::new(m, n).unwrap();
            let sym = burning_number_grid(&g, &TargetSet::All, &SolverConfig::default())
                .unwrap()
                .value();
            let nosym = burning_number_grid(
                &g,
                &TargetSet::All,
                &SolverConfig { symmetry_reduction: false, ..SolverConfig::default() },
            )
            .unwrap()
            .value();
            assert_eq!(sym, nosym);
        }
    }

    #[test]
    fn thread_hints_agree() {
        for threads in [1usize, 4, 8] {
            let g = GridSpec::new(3, 9).unwrap();
            let cfg = SolverConfig { threads, ..SolverConfig::default() };
            let res = burning_number_grid(&g, &TargetSet::All, &cfg).unwrap();
            assert_eq!(res.value(), Some(4), "threads={threads}");
            // certificate may differ across hints but must validate
            let schedule = res.certificate.unwrap();
            let trace = simulate_grid(&g, &schedule, &TargetSet::All, SimMode::Strict).unwrap();
            assert!(trace.target_burned_within_horizon);
        }
    }

    #[test]
    fn disconnected_explicit_host() {
        use crate::graph::ExplicitGraph;
        // two disjoint edges: burning everything needs sources in both parts
        let graph = ExplicitGraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let res =
            burning_number_explicit(&graph, &TargetSet::All, &SolverConfig::default()).unwrap();
        assert_eq!(res.value(), Some(2));
    }
}
