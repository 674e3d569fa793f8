//! Exhaustive sweep over the 1296 ways to distribute the three bar-lists
//! over the four maximum independent sets of the square of L(S(K4)).
//!
//! The figure with the original assignment is not reproducible from text,
//! but the proof only constrains each independent set to carry all three of
//! the lists 1-bar, 2-bar, 3-bar; the sweep finds every distribution that is
//! actually infeasible.

use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::solver::{list_colorable, SolveOptions};
use crate::transforms;

/// perm[set][position] = excluded color (1..=3) for the position-th vertex
/// (ascending vertex order) of the set-th maximum independent set.
pub type Lsk4Perm = [[u8; 3]; 4];

#[derive(Debug)]
pub struct Lsk4Search {
    pub square: Graph,
    /// The four maximum independent sets of size 3, lexicographic order.
    pub independent_sets: Vec<Vec<usize>>,
    pub infeasible: Vec<Lsk4Perm>,
    pub checked: u64,
}

const PERMS3: [[u8; 3]; 6] = [
    [1, 2, 3],
    [1, 3, 2],
    [2, 1, 3],
    [2, 3, 1],
    [3, 1, 2],
    [3, 2, 1],
];

pub fn search_bad_permutation_lsk4(opts: &SolveOptions) -> Result<Lsk4Search> {
    let base = transforms::line_graph(&transforms::subdivision(&families::complete_graph(4)?));
    let square = transforms::square(&base)?;
    let sets = square.independent_sets_of_size(3)?;
    if sets.len() != 4 {
        return Err(Error::Precondition(format!(
            "expected 4 maximum independent sets of size 3, found {}",
            sets.len()
        )));
    }
    let mut infeasible = Vec::new();
    let mut checked = 0u64;
    let solve_opts = SolveOptions {
        threads: 1,
        deterministic: false,
        ..*opts
    };
    for a in 0..6 {
        for b in 0..6 {
            for c in 0..6 {
                for d in 0..6 {
                    let perm: Lsk4Perm = [PERMS3[a], PERMS3[b], PERMS3[c], PERMS3[d]];
                    let lists = families::lists_lsk4(&square, &sets, &perm)?;
                    let verdict = list_colorable(&square, &lists, &solve_opts)?;
                    checked += 1;
                    if verdict.is_unknown() {
                        return Err(Error::BudgetExceeded {
                            op: "search_bad_permutation_lsk4",
                        });
                    }
                    if verdict.is_infeasible() {
                        infeasible.push(perm);
                    }
                }
            }
        }
    }
    Ok(Lsk4Search {
        square,
        independent_sets: sets,
        infeasible,
        checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::list_colorable;

    #[test]
    fn sweep_finds_infeasible_distributions() {
        let opts = SolveOptions::default();
        let search = search_bad_permutation_lsk4(&opts).unwrap();
        assert_eq!(search.checked, 1296);
        assert!(!search.infeasible.is_empty());
        // every returned assignment re-verifies infeasible
        let perm = search.infeasible[0];
        let lists =
            families::lists_lsk4(&search.square, &search.independent_sets, &perm).unwrap();
        assert!(list_colorable(&search.square, &lists, &opts)
            .unwrap()
            .is_infeasible());
    }
}
