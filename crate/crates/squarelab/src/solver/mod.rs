//! Exact coloring engines.
//!
//! Everything here decides, never estimates: chromatic numbers come from
//! branch-and-bound with exact clique lower bounds, list-coloring verdicts
//! from backtracking with forward checking and unit propagation, and all
//! "true" answers carry witnesses that `validate_coloring` accepts.
//!
//! Every solve takes a node budget and a wall-clock budget; exceeding either
//! yields a distinct unknown outcome, never a silent "infeasible".

mod avoiding;
mod choosable;
mod chromatic;
mod lsk4;
pub(crate) mod search;

pub use avoiding::{
    avoid_colorable, avoiding_chromatic, check_avoiding_bounds, multipartite_adversary,
    proper_coloring_avoiding, AvoidingBoundsReport, AvoidingResult,
};
pub use choosable::{is_k_choosable, ChoosableReport};
pub use chromatic::{chromatic_number, ChromaticResult};
pub use lsk4::{search_bad_permutation_lsk4, Lsk4Perm, Lsk4Search};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::VertexLabel;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Whether the per-vertex sets are the colors a vertex may take or the
/// colors it must avoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ListMode {
    Admissible,
    Forbidden,
}

/// Per-vertex color sets over a declared universe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    universe: BTreeSet<u32>,
    mode: ListMode,
    lists: BTreeMap<VertexLabel, BTreeSet<u32>>,
}

impl ListAssignment {
    pub fn new(mode: ListMode, universe: impl IntoIterator<Item = u32>) -> Self {
        ListAssignment {
            universe: universe.into_iter().collect(),
            mode,
            lists: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, label: VertexLabel, colors: impl IntoIterator<Item = u32>) {
        self.lists.insert(label, colors.into_iter().collect());
    }

    pub fn get(&self, label: &VertexLabel) -> Option<&BTreeSet<u32>> {
        self.lists.get(label)
    }

    pub fn lists(&self) -> &BTreeMap<VertexLabel, BTreeSet<u32>> {
        &self.lists
    }

    pub fn universe(&self) -> &BTreeSet<u32> {
        &self.universe
    }

    pub fn mode(&self) -> ListMode {
        self.mode
    }

    /// Checks the assignment is usable on `g`: an entry for every vertex,
    /// and (in admissible mode) every listed color inside the universe.
    /// Forbidden-mode colors outside the palette are legal; they simply
    /// never constrain anything.
    pub fn validate_against(&self, g: &Graph) -> Result<()> {
        for label in g.labels() {
            let list = self
                .lists
                .get(label)
                .ok_or_else(|| Error::MissingVertexEntry(label.clone()))?;
            if self.mode == ListMode::Admissible {
                if let Some(&c) = list.iter().find(|c| !self.universe.contains(c)) {
                    return Err(Error::ColorOutsideUniverse { color: c });
                }
            }
        }
        Ok(())
    }
}

/// A (candidate) coloring, keyed by vertex label.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(pub BTreeMap<VertexLabel, u32>);

impl Coloring {
    pub fn get(&self, label: &VertexLabel) -> Option<u32> {
        self.0.get(label).copied()
    }

    pub fn insert(&mut self, label: VertexLabel, color: u32) {
        self.0.insert(label, color);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colors_used(&self) -> BTreeSet<u32> {
        self.0.values().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexLabel, u32)> {
        self.0.iter().map(|(l, &c)| (l, c))
    }
}

/// Outcome of one exact solve.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Verdict {
    /// `None` means unknown: a budget was exhausted before a decision.
    pub feasible: Option<bool>,
    pub witness: Option<Coloring>,
    pub nodes: u64,
    pub millis: u64,
    pub budget_hit: bool,
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        self.feasible == Some(true)
    }

    pub fn is_infeasible(&self) -> bool {
        self.feasible == Some(false)
    }

    pub fn is_unknown(&self) -> bool {
        self.feasible.is_none()
    }
}

/// Budgets and reproducibility knobs shared by all solvers.
#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub node_budget: Option<u64>,
    pub time_budget_ms: Option<u64>,
    /// When set, feasible verdicts carry the lexicographically least witness
    /// (by vertex order, then color value).
    pub deterministic: bool,
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            node_budget: None,
            time_budget_ms: None,
            deterministic: false,
            threads: 1,
        }
    }
}

/// Violations found when checking a coloring against a graph and an
/// optional list assignment.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violated_edges: Vec<(VertexLabel, VertexLabel)>,
    pub list_violations: Vec<VertexLabel>,
}

/// True iff `c` is proper on `g` and respects `lists` (admissible: color in
/// the list; forbidden: color outside it). Missing vertex entries are errors,
/// violations are reported.
pub fn validate_coloring(
    g: &Graph,
    c: &Coloring,
    lists: Option<&ListAssignment>,
) -> Result<ValidationReport> {
    for label in g.labels() {
        if c.get(label).is_none() {
            return Err(Error::MissingVertexEntry(label.clone()));
        }
    }
    let mut violated_edges = Vec::new();
    for &(u, v) in g.edges() {
        let (lu, lv) = (g.label(u as usize), g.label(v as usize));
        if c.get(lu) == c.get(lv) {
            violated_edges.push((lu.clone(), lv.clone()));
        }
    }
    let mut list_violations = Vec::new();
    if let Some(assignment) = lists {
        for label in g.labels() {
            let list = assignment
                .get(label)
                .ok_or_else(|| Error::MissingVertexEntry(label.clone()))?;
            let color = c.get(label).expect("checked above");
            let ok = match assignment.mode() {
                ListMode::Admissible => list.contains(&color),
                ListMode::Forbidden => !list.contains(&color),
            };
            if !ok {
                list_violations.push(label.clone());
            }
        }
    }
    Ok(ValidationReport {
        ok: violated_edges.is_empty() && list_violations.is_empty(),
        violated_edges,
        list_violations,
    })
}

/// Decides whether `g` has a proper coloring choosing each vertex's color
/// from its admissible list. Exact; empty lists make the instance
/// infeasible rather than erroring.
pub fn list_colorable(g: &Graph, lists: &ListAssignment, opts: &SolveOptions) -> Result<Verdict> {
    if lists.mode() != ListMode::Admissible {
        return Err(Error::WrongListMode {
            expected: "admissible",
        });
    }
    lists.validate_against(g)?;
    let instance = search::Instance::from_lists(g, lists)?;
    Ok(search::solve_labeled(g, &instance, opts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::Role;

    fn w(i: i64) -> VertexLabel {
        VertexLabel::tag1(Role::Vertex, i)
    }

    fn triangle() -> Graph {
        Graph::build(
            vec![w(1), w(2), w(3)],
            &[(w(1), w(2)), (w(2), w(3)), (w(1), w(3))],
        )
        .unwrap()
    }

    #[test]
    fn triangle_with_two_colors_is_infeasible() {
        let g = triangle();
        let mut lists = ListAssignment::new(ListMode::Admissible, 1..=2);
        for i in 1..=3 {
            lists.insert(w(i), 1..=2);
        }
        let verdict = list_colorable(&g, &lists, &SolveOptions::default()).unwrap();
        assert!(verdict.is_infeasible());
        assert!(verdict.witness.is_none());
    }

    #[test]
    fn triangle_with_three_colors_has_valid_witness() {
        let g = triangle();
        let mut lists = ListAssignment::new(ListMode::Admissible, 1..=3);
        for i in 1..=3 {
            lists.insert(w(i), 1..=3);
        }
        let verdict = list_colorable(&g, &lists, &SolveOptions::default()).unwrap();
        assert!(verdict.is_feasible());
        let witness = verdict.witness.unwrap();
        assert!(validate_coloring(&g, &witness, Some(&lists)).unwrap().ok);
    }

    #[test]
    fn empty_list_is_reported_infeasible_not_error() {
        let g = triangle();
        let mut lists = ListAssignment::new(ListMode::Admissible, 1..=3);
        lists.insert(w(1), std::iter::empty());
        lists.insert(w(2), 1..=3);
        lists.insert(w(3), 1..=3);
        let verdict = list_colorable(&g, &lists, &SolveOptions::default()).unwrap();
        assert!(verdict.is_infeasible());
    }

    #[test]
    fn missing_entry_is_an_error() {
        let g = triangle();
        let mut lists = ListAssignment::new(ListMode::Admissible, 1..=3);
        lists.insert(w(1), 1..=3);
        assert!(matches!(
            list_colorable(&g, &lists, &SolveOptions::default()),
            Err(Error::MissingVertexEntry(_))
        ));
    }

    #[test]
    fn constant_coloring_on_edge_is_invalid() {
        let g = Graph::build(vec![w(1), w(2)], &[(w(1), w(2))]).unwrap();
        let mut c = Coloring::default();
        c.insert(w(1), 1);
        c.insert(w(2), 1);
        let report = validate_coloring(&g, &c, None).unwrap();
        assert!(!report.ok);
        assert_eq!(report.violated_edges.len(), 1);
    }

    #[test]
    fn deterministic_witness_is_lexicographically_least() {
        let g = triangle();
        let mut lists = ListAssignment::new(ListMode::Admissible, 1..=4);
        for i in 1..=3 {
            lists.insert(w(i), 1..=4);
        }
        let opts = SolveOptions {
            deterministic: true,
            ..Default::default()
        };
        let verdict = list_colorable(&g, &lists, &opts).unwrap();
        let witness = verdict.witness.unwrap();
        assert_eq!(witness.get(&w(1)), Some(1));
        assert_eq!(witness.get(&w(2)), Some(2));
        assert_eq!(witness.get(&w(3)), Some(3));
    }

    #[test]
    fn node_budget_yields_unknown() {
        // A 3-colorability instance on a graph needing real search with an
        // absurdly small node budget must come back unknown, not infeasible.
        let n = 12usize;
        let labels: Vec<_> = (1..=n as i64).map(w).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((w(i as i64 + 1), w(((i + 1) % n) as i64 + 1)));
            edges.push((w(i as i64 + 1), w(((i + 3) % n) as i64 + 1)));
        }
        let g = Graph::build(labels, &edges).unwrap();
        let mut lists = ListAssignment::new(ListMode::Admissible, 1..=3);
        for i in 1..=n as i64 {
            lists.insert(w(i), 1..=3);
        }
        let opts = SolveOptions {
            node_budget: Some(2),
            ..Default::default()
        };
        let verdict = list_colorable(&g, &lists, &opts).unwrap();
        assert!(verdict.is_unknown());
        assert!(verdict.budget_hit);
    }

    #[test]
    fn verdicts_identical_across_thread_counts() {
        let g = triangle();
        let mut lists = ListAssignment::new(ListMode::Admissible, 1..=3);
        for i in 1..=3 {
            lists.insert(w(i), 1..=3);
        }
        let mut verdicts = Vec::new();
        for threads in [1, 2, 4] {
            let opts = SolveOptions {
                threads,
                deterministic: true,
                ..Default::default()
            };
            verdicts.push(list_colorable(&g, &lists, &opts).unwrap());
        }
        assert!(verdicts.iter().all(|v| v.is_feasible()));
        let first = verdicts[0].witness.clone().unwrap();
        assert!(verdicts.iter().all(|v| v.witness.as_ref() == Some(&first)));
    }
}
