//! Backtracking core shared by every list-coloring style solve.
//!
//! State is a candidate color mask per vertex. The search runs unit
//! propagation to a fixpoint, then branches on a most-constrained vertex
//! (fewest candidates, ties by label order), trying colors in ascending
//! order. Disjoint top-level branches may run on separate threads; the
//! only shared state is an atomic node counter and an abort flag, so the
//! feasible/infeasible decision is identical to the sequential run.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{Coloring, ListAssignment, SolveOptions, Verdict};
use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

/// A prepared instance: adjacency bitmasks, the color id -> value table,
/// and initial per-vertex candidate masks.
pub(crate) struct Instance {
    pub adj: Vec<u128>,
    pub colors: Vec<u32>,
    pub cand: Vec<u64>,
    /// Vertex ids sorted by label; position = tie-break rank.
    pub order: Vec<usize>,
}

impl Instance {
    pub fn from_lists(g: &Graph, lists: &ListAssignment) -> Result<Instance> {
        let universe: Vec<u32> = lists.universe().iter().copied().collect();
        let id_of: HashMap<u32, usize> = universe
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        let mut cand = vec![0u64; g.n()];
        for (v, label) in g.labels().iter().enumerate() {
            let list = lists.get(label).expect("validated");
            for c in list {
                if let Some(&i) = id_of.get(c) {
                    cand[v] |= 1u64 << i;
                }
            }
        }
        Instance::from_masks(g, universe, cand)
    }

    /// Instance from raw candidate masks over `colors` (used by the
    /// choosability and avoiding sweeps that never materialize labels).
    pub fn from_masks(g: &Graph, colors: Vec<u32>, cand: Vec<u64>) -> Result<Instance> {
        if colors.len() > 64 {
            return Err(Error::TooLarge {
                op: "list coloring",
                size: colors.len(),
                limit: 64,
            });
        }
        let adj = g.adj_masks()?;
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by(|&a, &b| g.label(a).cmp(g.label(b)));
        Ok(Instance {
            adj,
            colors,
            cand,
            order,
        })
    }

    fn tie_rank(&self) -> Vec<u32> {
        let mut rank = vec![0u32; self.adj.len()];
        for (pos, &v) in self.order.iter().enumerate() {
            rank[v] = pos as u32;
        }
        rank
    }
}

pub(crate) enum RawOutcome {
    /// Color id per vertex.
    Feasible(Vec<u8>),
    Infeasible,
    Unknown,
}

pub(crate) struct RawVerdict {
    pub outcome: RawOutcome,
    pub nodes: u64,
    pub millis: u64,
}

struct Ctx<'a> {
    adj: &'a [u128],
    tie_rank: &'a [u32],
    nodes: &'a AtomicU64,
    node_budget: u64,
    deadline: Option<Instant>,
    abort: &'a AtomicBool,
}

enum Search {
    /// Final candidate masks, all singletons.
    Found(Vec<u64>),
    Exhausted,
    Aborted,
}

/// Unit propagation to fixpoint. Returns the updated unfixed mask, or
/// `None` on an emptied candidate set.
fn propagate(ctx: &Ctx, cand: &mut [u64], mut unfixed: u128) -> Option<u128> {
    loop {
        let mut changed = false;
        let mut scan = unfixed;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if unfixed & (1u128 << v) == 0 {
                continue;
            }
            let c = cand[v];
            if c == 0 {
                return None;
            }
            if c & (c - 1) == 0 {
                unfixed &= !(1u128 << v);
                let mut nbrs = ctx.adj[v] & unfixed;
                while nbrs != 0 {
                    let w = nbrs.trailing_zeros() as usize;
                    nbrs &= nbrs - 1;
                    let pruned = cand[w] & !c;
                    if pruned == 0 {
                        return None;
                    }
                    cand[w] = pruned;
                }
                changed = true;
            }
        }
        if !changed {
            return Some(unfixed);
        }
    }
}

/// Most-constrained unfixed vertex; ties broken by label order.
fn pick_branch_vertex(ctx: &Ctx, cand: &[u64], unfixed: u128) -> usize {
    let mut best = usize::MAX;
    let mut best_key = (u32::MAX, u32::MAX);
    let mut scan = unfixed;
    while scan != 0 {
        let v = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let key = (cand[v].count_ones(), ctx.tie_rank[v]);
        if key < best_key {
            best_key = key;
            best = v;
        }
    }
    best
}

fn dfs(ctx: &Ctx, mut cand: Vec<u64>, unfixed: u128) -> Search {
    let node = ctx.nodes.fetch_add(1, Ordering::Relaxed) + 1;
    if node > ctx.node_budget {
        ctx.abort.store(true, Ordering::Relaxed);
        return Search::Aborted;
    }
    if node % 1024 == 0 {
        if let Some(deadline) = ctx.deadline {
            if Instant::now() >= deadline {
                ctx.abort.store(true, Ordering::Relaxed);
                return Search::Aborted;
            }
        }
        if ctx.abort.load(Ordering::Relaxed) {
            return Search::Aborted;
        }
    }
    let unfixed = match propagate(ctx, &mut cand, unfixed) {
        Some(u) => u,
        None => return Search::Exhausted,
    };
    if unfixed == 0 {
        return Search::Found(cand);
    }
    let v = pick_branch_vertex(ctx, &cand, unfixed);
    let mut choices = cand[v];
    while choices != 0 {
        let bit = choices & choices.wrapping_neg();
        choices &= choices - 1;
        let mut child = cand.clone();
        child[v] = bit;
        match dfs(ctx, child, unfixed) {
            Search::Found(c) => return Search::Found(c),
            Search::Aborted => return Search::Aborted,
            Search::Exhausted => {}
        }
    }
    Search::Exhausted
}

fn parallel_root(ctx: &Ctx, mut cand: Vec<u64>, unfixed: u128, threads: usize) -> Search {
    let unfixed = match propagate(ctx, &mut cand, unfixed) {
        Some(u) => u,
        None => return Search::Exhausted,
    };
    if unfixed == 0 {
        return Search::Found(cand);
    }
    let v = pick_branch_vertex(ctx, &cand, unfixed);
    let mut bits = Vec::new();
    let mut choices = cand[v];
    while choices != 0 {
        bits.push(choices & choices.wrapping_neg());
        choices &= choices - 1;
    }
    // Round-robin the color branches over the workers; each worker scans
    // its branches in ascending color order.
    let workers = threads.min(bits.len()).max(1);
    let mut slot_results: Vec<Option<(usize, Search)>> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..workers {
            let cand = &cand;
            let bits = &bits;
            let handle = scope.spawn(move || {
                let mut aborted = false;
                for (i, &bit) in bits.iter().enumerate() {
                    if i % workers != t {
                        continue;
                    }
                    let mut child = cand.clone();
                    child[v] = bit;
                    match dfs(ctx, child, unfixed) {
                        Search::Found(c) => return Some((i, Search::Found(c))),
                        Search::Aborted => {
                            aborted = true;
                            break;
                        }
                        Search::Exhausted => {}
                    }
                }
                if aborted {
                    Some((usize::MAX, Search::Aborted))
                } else {
                    None
                }
            });
            handles.push(handle);
        }
        for handle in handles {
            slot_results.push(handle.join().expect("solver thread panicked"));
        }
    });
    let mut found: Option<(usize, Vec<u64>)> = None;
    let mut any_abort = false;
    for result in slot_results.into_iter().flatten() {
        match result {
            (i, Search::Found(c)) => {
                if found.as_ref().map_or(true, |(j, _)| i < *j) {
                    found = Some((i, c));
                }
            }
            (_, Search::Aborted) => any_abort = true,
            _ => {}
        }
    }
    match (found, any_abort) {
        (Some((_, c)), _) => Search::Found(c),
        (None, true) => Search::Aborted,
        (None, false) => Search::Exhausted,
    }
}

/// Pins vertices one by one in label order, always to the least color that
/// keeps the instance solvable. Returns `None` if a budget interrupts.
fn canonical_witness(ctx: &Ctx, inst: &Instance, unfixed_all: u128) -> Option<Vec<u64>> {
    let mut base = inst.cand.clone();
    for &v in &inst.order {
        let mut choices = base[v];
        let mut chosen = None;
        while choices != 0 {
            let bit = choices & choices.wrapping_neg();
            choices &= choices - 1;
            let mut trial = base.clone();
            trial[v] = bit;
            match dfs(ctx, trial, unfixed_all) {
                Search::Found(_) => {
                    chosen = Some(bit);
                    break;
                }
                Search::Exhausted => {}
                Search::Aborted => return None,
            }
        }
        base[v] = chosen?;
    }
    Some(base)
}

pub(crate) fn solve_raw(inst: &Instance, opts: &SolveOptions) -> RawVerdict {
    let start = Instant::now();
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let tie_rank = inst.tie_rank();
    let ctx = Ctx {
        adj: &inst.adj,
        tie_rank: &tie_rank,
        nodes: &nodes,
        node_budget: opts.node_budget.unwrap_or(u64::MAX),
        deadline: opts
            .time_budget_ms
            .map(|ms| start + Duration::from_millis(ms)),
        abort: &abort,
    };
    let n = inst.adj.len();
    let unfixed: u128 = if n == 0 {
        0
    } else if n == 128 {
        !0
    } else {
        (1u128 << n) - 1
    };
    let result = if opts.threads > 1 {
        parallel_root(&ctx, inst.cand.clone(), unfixed, opts.threads)
    } else {
        dfs(&ctx, inst.cand.clone(), unfixed)
    };
    let outcome = match result {
        Search::Found(cand) => {
            let cand = if opts.deterministic {
                canonical_witness(&ctx, inst, unfixed).unwrap_or(cand)
            } else {
                cand
            };
            let ids = cand
                .iter()
                .map(|&mask| mask.trailing_zeros() as u8)
                .collect();
            RawOutcome::Feasible(ids)
        }
        Search::Exhausted => RawOutcome::Infeasible,
        Search::Aborted => RawOutcome::Unknown,
    };
    RawVerdict {
        outcome,
        nodes: nodes.load(Ordering::Relaxed),
        millis: start.elapsed().as_millis() as u64,
    }
}

/// Solve and map the witness back onto vertex labels and color values.
pub(crate) fn solve_labeled(g: &Graph, inst: &Instance, opts: &SolveOptions) -> Verdict {
    let raw = solve_raw(inst, opts);
    match raw.outcome {
        RawOutcome::Feasible(ids) => {
            let mut witness = Coloring::default();
            for (v, &id) in ids.iter().enumerate() {
                witness.insert(g.label(v).clone(), inst.colors[id as usize]);
            }
            Verdict {
                feasible: Some(true),
                witness: Some(witness),
                nodes: raw.nodes,
                millis: raw.millis,
                budget_hit: false,
            }
        }
        RawOutcome::Infeasible => Verdict {
            feasible: Some(false),
            witness: None,
            nodes: raw.nodes,
            millis: raw.millis,
            budget_hit: false,
        },
        RawOutcome::Unknown => Verdict {
            feasible: None,
            witness: None,
            nodes: raw.nodes,
            millis: raw.millis,
            budget_hit: true,
        },
    }
}
