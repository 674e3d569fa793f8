//! Bounded k-choosability by exhaustive list-assignment enumeration.
//!
//! Assignments are enumerated over a canonical universe {1..cap} with two
//! symmetry reductions: the first vertex's list is pinned to {1..k}, and
//! colors above k must make their first appearance in increasing order.
//! Both are sound quotients by color permutations, so a "false" answer is
//! always a real counterexample, and a "true" answer covers every
//! assignment over a universe of `cap` colors. A full proof of
//! choosability would need cap = |V| * k; anything smaller is flagged as
//! bounded verification.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::search::{self, Instance, RawOutcome};
use crate::solver::{ListAssignment, ListMode, SolveOptions};

#[derive(Clone, Debug)]
pub struct ChoosableReport {
    pub k: u32,
    pub universe_cap: u32,
    pub choosable: bool,
    /// True verdict proven only relative to the cap.
    pub bounded_verification: bool,
    pub bad_assignment: Option<ListAssignment>,
    pub assignments_checked: u64,
}

pub fn is_k_choosable(
    g: &Graph,
    k: u32,
    universe_cap: u32,
    opts: &SolveOptions,
) -> Result<ChoosableReport> {
    if k == 0 {
        return Err(Error::Parameter("k must be positive".into()));
    }
    if universe_cap < k {
        return Err(Error::Parameter("universe cap must be at least k".into()));
    }
    if universe_cap > 32 {
        return Err(Error::Parameter("universe cap above 32 is not supported".into()));
    }
    if g.n() > 16 {
        return Err(Error::TooLarge {
            op: "is_k_choosable",
            size: g.n(),
            limit: 16,
        });
    }
    let n = g.n();
    let bounded = (universe_cap as usize) < n * k as usize;
    if n == 0 {
        return Ok(ChoosableReport {
            k,
            universe_cap,
            choosable: true,
            bounded_verification: false,
            bad_assignment: None,
            assignments_checked: 0,
        });
    }
    let mut lists = vec![0u64; n];
    lists[0] = (1u64 << k) - 1;
    let mut checked = 0u64;
    let solve_opts = SolveOptions {
        threads: 1,
        deterministic: false,
        ..*opts
    };
    let bad = enumerate(g, k, universe_cap, 1, k, &mut lists, &mut checked, &solve_opts)?;
    Ok(ChoosableReport {
        k,
        universe_cap,
        choosable: bad.is_none(),
        bounded_verification: bad.is_none() && bounded,
        bad_assignment: bad.map(|masks| masks_to_assignment(g, universe_cap, &masks)),
        assignments_checked: checked,
    })
}

/// Recursive enumeration; `high` is the largest color introduced so far.
#[allow(clippy::too_many_arguments)]
fn enumerate(
    g: &Graph,
    k: u32,
    cap: u32,
    v: usize,
    high: u32,
    lists: &mut Vec<u64>,
    checked: &mut u64,
    opts: &SolveOptions,
) -> Result<Option<Vec<u64>>> {
    if v == g.n() {
        *checked += 1;
        let colors: Vec<u32> = (1..=cap).collect();
        let inst = Instance::from_masks(g, colors, lists.clone())?;
        let raw = search::solve_raw(&inst, opts);
        return match raw.outcome {
            RawOutcome::Feasible(_) => Ok(None),
            RawOutcome::Infeasible => Ok(Some(lists.clone())),
            RawOutcome::Unknown => Err(Error::BudgetExceeded {
                op: "is_k_choosable",
            }),
        };
    }
    for fresh in 0..=k.min(cap - high) {
        let fresh_mask = if fresh == 0 {
            0u64
        } else {
            ((1u64 << fresh) - 1) << high
        };
        let old = k - fresh;
        // Gosper's hack over `old`-subsets of the first `high` colors.
        let mut subset = if old == 0 { 0u64 } else { (1u64 << old) - 1 };
        loop {
            if old == 0 || subset < (1u64 << high) {
                lists[v] = subset | fresh_mask;
                if let Some(bad) =
                    enumerate(g, k, cap, v + 1, high + fresh, lists, checked, opts)?
                {
                    return Ok(Some(bad));
                }
            } else {
                break;
            }
            if old == 0 {
                break;
            }
            let low = subset & subset.wrapping_neg();
            let ripple = subset + low;
            subset = ripple | (((subset ^ ripple) >> 2) / low);
        }
    }
    Ok(None)
}

fn masks_to_assignment(g: &Graph, cap: u32, masks: &[u64]) -> ListAssignment {
    let mut out = ListAssignment::new(ListMode::Admissible, 1..=cap);
    for (v, &mask) in masks.iter().enumerate() {
        let colors: Vec<u32> = (0..cap).filter(|c| mask & (1u64 << c) != 0).map(|c| c + 1).collect();
        out.insert(g.label(v).clone(), colors);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::{Role, VertexLabel};
    use crate::solver::list_colorable;

    fn w(i: i64) -> VertexLabel {
        VertexLabel::tag1(Role::Vertex, i)
    }

    fn cycle(n: usize) -> Graph {
        let labels: Vec<_> = (1..=n as i64).map(w).collect();
        let edges: Vec<_> = (0..n)
            .map(|i| (w(i as i64 + 1), w(((i + 1) % n) as i64 + 1)))
            .collect();
        Graph::build(labels, &edges).unwrap()
    }

    #[test]
    fn even_cycle_is_two_choosable() {
        let report = is_k_choosable(&cycle(4), 2, 4, &SolveOptions::default()).unwrap();
        assert!(report.choosable);
        assert!(report.bounded_verification);
    }

    #[test]
    fn odd_cycle_is_not_two_choosable() {
        let report = is_k_choosable(&cycle(5), 2, 4, &SolveOptions::default()).unwrap();
        assert!(!report.choosable);
        let bad = report.bad_assignment.unwrap();
        let verdict = list_colorable(&cycle(5), &bad, &SolveOptions::default()).unwrap();
        assert!(verdict.is_infeasible());
    }

    #[test]
    fn k24_is_not_two_choosable() {
        // Exhaustive enumeration at cap 4 finds the classic bad assignment.
        let mut labels = vec![w(1), w(2)];
        labels.extend((3..=6).map(w));
        let mut edges = Vec::new();
        for a in 1..=2i64 {
            for b in 3..=6i64 {
                edges.push((w(a), w(b)));
            }
        }
        let g = Graph::build(labels, &edges).unwrap();
        let report = is_k_choosable(&g, 2, 4, &SolveOptions::default()).unwrap();
        assert!(!report.choosable);
    }

    #[test]
    fn two_shared_edge_four_cycles_not_two_choosable() {
        // Union of two 4-cycles with one edge in common.
        let labels: Vec<_> = (1..=6).map(w).collect();
        let edges = [
            (w(1), w(2)),
            (w(2), w(3)),
            (w(3), w(4)),
            (w(4), w(1)),
            (w(2), w(5)),
            (w(5), w(6)),
            (w(6), w(3)),
        ];
        let g = Graph::build(labels, &edges).unwrap();
        let report = is_k_choosable(&g, 2, 4, &SolveOptions::default()).unwrap();
        assert!(!report.choosable);
        // the bad assignment must re-verify as infeasible
        let bad = report.bad_assignment.unwrap();
        assert!(list_colorable(&g, &bad, &SolveOptions::default())
            .unwrap()
            .is_infeasible());
    }
}
