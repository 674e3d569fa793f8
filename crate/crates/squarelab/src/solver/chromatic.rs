//! Exact chromatic number.
//!
//! Lower bound from an exact maximum clique, upper bound from a DSATUR
//! greedy pass; the gap is closed by k-colorability solves with the clique
//! pre-colored to break color symmetry.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::search::{self, Instance, RawOutcome};
use crate::solver::{Coloring, SolveOptions};

#[derive(Clone, Debug)]
pub struct ChromaticResult {
    pub chi: u32,
    pub witness: Coloring,
    pub nodes: u64,
    pub millis: u64,
}

/// DSATUR greedy coloring; returns (colors 1.., count used).
fn dsatur_greedy(g: &Graph) -> (Vec<u32>, u32) {
    let n = g.n();
    let mut color = vec![0u32; n];
    let mut saturation = vec![0u64; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == 0)
            .max_by_key(|&v| (saturation[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex");
        let mut used = 0u64;
        for &w in g.neighbors(v) {
            let c = color[w as usize];
            if c > 0 {
                used |= 1 << (c - 1);
            }
        }
        let c = (!used).trailing_zeros() + 1;
        color[v] = c;
        for &w in g.neighbors(v) {
            saturation[w as usize] |= 1 << (c - 1);
        }
    }
    let count = color.iter().copied().max().unwrap_or(0);
    (color, count)
}

/// Exact chromatic number with an optimal witness coloring.
pub fn chromatic_number(g: &Graph, opts: &SolveOptions) -> Result<ChromaticResult> {
    if !g.is_simple() {
        return Err(Error::NotSimple {
            op: "chromatic_number",
        });
    }
    if g.n() == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            witness: Coloring::default(),
            nodes: 0,
            millis: 0,
        });
    }
    let clique = g.max_clique()?;
    let lower = clique.len() as u32;
    let (greedy, upper) = dsatur_greedy(g);
    let mut nodes = 0u64;
    let mut millis = 0u64;
    for k in lower..=upper {
        if k == upper {
            let mut witness = Coloring::default();
            for (v, &c) in greedy.iter().enumerate() {
                witness.insert(g.label(v).clone(), c);
            }
            if opts.deterministic {
                // Re-solve at k for the canonical witness.
                if let Some(result) = try_k(g, &clique, k, opts, &mut nodes, &mut millis)? {
                    return Ok(ChromaticResult {
                        chi: k,
                        witness: result,
                        nodes,
                        millis,
                    });
                }
            }
            return Ok(ChromaticResult {
                chi: k,
                witness,
                nodes,
                millis,
            });
        }
        if let Some(witness) = try_k(g, &clique, k, opts, &mut nodes, &mut millis)? {
            return Ok(ChromaticResult {
                chi: k,
                witness,
                nodes,
                millis,
            });
        }
    }
    unreachable!("greedy upper bound is always colorable")
}

/// Decision solve: is g k-colorable? The clique vertices are pinned to
/// distinct colors, which is sound up to color permutation.
fn try_k(
    g: &Graph,
    clique: &[usize],
    k: u32,
    opts: &SolveOptions,
    nodes: &mut u64,
    millis: &mut u64,
) -> Result<Option<Coloring>> {
    let full = if k >= 64 { !0u64 } else { (1u64 << k) - 1 };
    let mut cand = vec![full; g.n()];
    for (i, &v) in clique.iter().enumerate() {
        cand[v] = 1u64 << i;
    }
    let colors: Vec<u32> = (1..=k).collect();
    let inst = Instance::from_masks(g, colors, cand)?;
    let raw = search::solve_raw(&inst, opts);
    *nodes += raw.nodes;
    *millis += raw.millis;
    match raw.outcome {
        RawOutcome::Feasible(ids) => {
            let mut witness = Coloring::default();
            for (v, &id) in ids.iter().enumerate() {
                witness.insert(g.label(v).clone(), inst.colors[id as usize]);
            }
            Ok(Some(witness))
        }
        RawOutcome::Infeasible => Ok(None),
        RawOutcome::Unknown => Err(Error::BudgetExceeded {
            op: "chromatic_number",
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::{Role, VertexLabel};
    use crate::solver::validate_coloring;

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
    fn chromatic_of_small_graphs() {
        let opts = SolveOptions::default();
        assert_eq!(chromatic_number(&cycle(5), &opts).unwrap().chi, 3);
        assert_eq!(chromatic_number(&cycle(6), &opts).unwrap().chi, 2);
        let mut k5_edges = Vec::new();
        for i in 1..=5i64 {
            for j in i + 1..=5 {
                k5_edges.push((w(i), w(j)));
            }
        }
        let k5 = Graph::build((1..=5).map(w).collect(), &k5_edges).unwrap();
        assert_eq!(chromatic_number(&k5, &opts).unwrap().chi, 5);
    }

    #[test]
    fn witness_is_proper_and_optimal_size() {
        let g = cycle(7);
        let result = chromatic_number(&g, &SolveOptions::default()).unwrap();
        assert_eq!(result.chi, 3);
        let report = validate_coloring(&g, &result.witness, None).unwrap();
        assert!(report.ok);
        assert!(result.witness.colors_used().len() <= 3);
    }

    /// Partition-based oracle: minimum proper partition over all set
    /// partitions of the vertices (Bell numbers stay tiny for n <= 8).
    pub(crate) fn chromatic_oracle(g: &Graph) -> u32 {
        fn rec(g: &Graph, v: usize, blocks: &mut Vec<Vec<usize>>, best: &mut u32) {
            if blocks.len() as u32 >= *best {
                return;
            }
            if v == g.n() {
                *best = blocks.len() as u32;
                return;
            }
            for b in 0..blocks.len() {
                if blocks[b].iter().all(|&u| !g.has_edge(u, v)) {
                    blocks[b].push(v);
                    rec(g, v + 1, blocks, best);
                    blocks[b].pop();
                }
            }
            blocks.push(vec![v]);
            rec(g, v + 1, blocks, best);
            blocks.pop();
        }
        if g.n() == 0 {
            return 0;
        }
        let mut best = g.n() as u32;
        let mut blocks = Vec::new();
        rec(g, 0, &mut blocks, &mut best);
        best
    }

    #[test]
    fn matches_partition_oracle_on_random_graphs() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let opts = SolveOptions::default();
        for _ in 0..60 {
            let n = rng.gen_range(1..9usize);
            let labels: Vec<_> = (1..=n as i64).map(w).collect();
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((w(i as i64 + 1), w(j as i64 + 1)));
                    }
                }
            }
            let g = Graph::build(labels, &edges).unwrap();
            assert_eq!(chromatic_number(&g, &opts).unwrap().chi, chromatic_oracle(&g));
        }
    }
}
