//! The discrete-round burning process.
//!
//! Round `t` first spreads fire from every vertex burned in earlier rounds,
//! then ignites the scheduled source `x_t`. A source is legal if it was
//! unburned at the start of the round, i.e. a schedule `(x_1, .., x_k)` is
//! strictly valid iff `d(x_i, x_j) >= j - i` for all `i < j`. A source that
//! this round's spread reaches is therefore still legal, which matches the
//! usual convention that the vertex chosen in round `t` burns in round `t`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::ExplicitGraph;
use crate::grid::{GridSpec, Vertex};
use crate::target::TargetSet;

/// Hard cap on host size for explicit simulation state.
pub const SIM_VERTEX_CAP: u64 = 1 << 24;

/// Whether an already-burned scheduled source is an error or a recorded skip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SimMode {
    Strict,
    Lenient,
}

/// An ignition that lenient mode skipped because the source was already
/// burned before its round began.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedIgnition {
    /// 1-based round / schedule index.
    pub round: u64,
    pub vertex_id: usize,
}

/// Summary of one simulation run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimulationTrace {
    /// Schedule length `k`.
    pub horizon: u64,
    /// Total burned vertices after rounds `1, 2, ..`.
    pub burned_per_round: Vec<u64>,
    /// First round after which the whole target was burned, if ever.
    pub final_round: Option<u64>,
    /// Whether the target was fully burned after round `horizon`.
    pub target_burned_within_horizon: bool,
    pub skipped: Vec<SkippedIgnition>,
}

pub(crate) trait HostGraph {
    fn len(&self) -> usize;
    fn for_each_neighbor(&self, v: usize, f: impl FnMut(usize));
}

pub(crate) struct GridHost(pub GridSpec);

impl HostGraph for GridHost {
    fn len(&self) -> usize {
        self.0.vertex_count() as usize
    }

    fn for_each_neighbor(&self, v: usize, mut f: impl FnMut(usize)) {
        let n = self.0.n() as usize;
        let (row, col) = (v / n, v % n);
        if col > 0 {
            f(v - 1);
        }
        if col + 1 < n {
            f(v + 1);
        }
        if row > 0 {
            f(v - n);
        }
        if row + 1 < self.0.m() as usize {
            f(v + n);
        }
    }
}

impl HostGraph for &ExplicitGraph {
    fn len(&self) -> usize {
        self.vertex_count()
    }

    fn for_each_neighbor(&self, v: usize, mut f: impl FnMut(usize)) {
        for &w in self.neighbors(v) {
            f(w);
        }
    }
}

/// Runs the burning process on dense vertex ids.
///
/// `target_ids` must be sorted; the trace keeps running past the schedule
/// horizon until the target burns or fire stops spreading.
pub(crate) fn simulate_ids(
    host: &impl HostGraph,
    sources: &[usize],
    target_ids: &[usize],
    mode: SimMode,
    display: impl Fn(usize) -> String,
) -> Result<SimulationTrace> {
    let n = host.len();
    if sources.is_empty() {
        return Err(Error::InvalidInput("schedule must contain at least one source".into()));
    }
    let mut in_target = vec![false; n];
    for &t in target_ids {
        in_target[t] = true;
    }
    let mut target_remaining = target_ids.len();

    // burn_round[v] = round in which v burned; 0 = unburned
    let mut burn_round = vec![0u64; n];
    let mut frontier: Vec<usize> = Vec::new();
    let mut burned_total = 0u64;

    let horizon = sources.len() as u64;
    let mut trace = SimulationTrace {
        horizon,
        burned_per_round: Vec::new(),
        final_round: None,
        target_burned_within_horizon: false,
        skipped: Vec::new(),
    };

    let mut round = 0u64;
    loop {
        round += 1;
        let mut next = Vec::new();
        let mut burn = |v: usize,
                        burn_round: &mut Vec<u64>,
                        next: &mut Vec<usize>,
                        target_remaining: &mut usize| {
            if burn_round[v] == 0 {
                burn_round[v] = round;
                next.push(v);
                burned_total += 1;
                if in_target[v] {
                    *target_remaining -= 1;
                }
            }
        };

        // spread
        for &v in &frontier {
            host.for_each_neighbor(v, |w| {
                burn(w, &mut burn_round, &mut next, &mut target_remaining)
            });
        }

        // ignite
        if round <= horizon {
            let src = sources[(round - 1) as usize];
            if src >= n {
                return Err(Error::InvalidInput(format!(
                    "source {} out of range for host with {n} vertices",
                    display(src)
                )));
            }
            let burned_before_round = burn_round[src] != 0 && burn_round[src] < round;
            if burned_before_round {
                match mode {
                    SimMode::Strict => {
                        return Err(Error::InvalidSchedule {
                            index: round as usize,
                            vertex: display(src),
                        });
                    }
                    SimMode::Lenient => {
                        trace.skipped.push(SkippedIgnition { round, vertex_id: src });
                    }
                }
            } else {
                burn(src, &mut burn_round, &mut next, &mut target_remaining);
            }
        }

        frontier.extend(next.iter().copied());
        frontier.retain(|&v| burn_round[v] == round);
        trace.burned_per_round.push(burned_total);

        if target_remaining == 0 && trace.final_round.is_none() {
            trace.final_round = Some(round);
        }
        if round == horizon {
            trace.target_burned_within_horizon = target_remaining == 0;
        }
        let done_target = trace.final_round.is_some();
        let past_schedule = round >= horizon;
        if done_target && past_schedule {
            break;
        }
        if past_schedule && frontier.is_empty() {
            break; // fire can no longer spread and the target is unreachable
        }
    }
    Ok(trace)
}

/// Simulates a schedule on an implicit grid host.
pub fn simulate_grid(
    g: &GridSpec,
    sources: &[Vertex],
    target: &TargetSet,
    mode: SimMode,
) -> Result<SimulationTrace> {
    if g.vertex_count() > SIM_VERTEX_CAP {
        return Err(Error::ResourceLimit(format!(
            "grid {g} exceeds the simulation cap of {SIM_VERTEX_CAP} vertices"
        )));
    }
    for &s in sources {
        g.check_vertex(s)?;
    }
    let ids: Vec<usize> = sources.iter().map(|&v| g.vertex_id(v)).collect();
    let target_ids = target.expand_grid_ids(g)?;
    simulate_ids(&GridHost(*g), &ids, &target_ids, mode, |id| {
        g.vertex_from_id(id).to_string()
    })
}

/// Simulates a schedule on an explicit host.
pub fn simulate_explicit(
    graph: &ExplicitGraph,
    sources: &[usize],
    target: &TargetSet,
    mode: SimMode,
) -> Result<SimulationTrace> {
    let target_ids = target.expand_explicit_ids(graph)?;
    simulate_ids(&graph, sources, &target_ids, mode, |id| id.to_string())
}

/// On-disk schedule format for grid hosts:
/// `{"m": .., "n": .., "sources": [[row, col], ..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScheduleFile {
    pub m: u64,
    pub n: u64,
    pub sources: Vec<Vertex>,
}

impl ScheduleFile {
    pub fn grid(&self) -> Result<GridSpec> {
        GridSpec::new(self.m, self.n)
    }
}
