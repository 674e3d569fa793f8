//! Avoiding colorings: proper colorings that dodge per-vertex forbidden
//! sets, and the worst-case m-avoiding chromatic number.
//!
//! The adversary sweep enumerates forbidden lists as subsets of the palette
//! {1..k} only. That is sound: a forbidden color outside the palette never
//! constrains a coloring into {1..k}, and shrinking a list only makes the
//! instance easier, so the exact-size palette subsets are the worst case.
//! That reduction is what keeps the sweep finite.

use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::solver::search::{self, Instance, RawOutcome};
use crate::solver::{
    chromatic_number, is_k_choosable, Coloring, ListAssignment, ListMode, SolveOptions, Verdict,
};

/// Decides whether g has a proper coloring c : V -> {1..k} with
/// c(v) outside the forbidden set of v.
pub fn avoid_colorable(
    g: &Graph,
    k: u32,
    forbidden: &ListAssignment,
    opts: &SolveOptions,
) -> Result<Verdict> {
    if forbidden.mode() != ListMode::Forbidden {
        return Err(Error::WrongListMode {
            expected: "forbidden",
        });
    }
    if k == 0 || k > 64 {
        return Err(Error::Parameter("k must be in 1..=64".into()));
    }
    forbidden.validate_against(g)?;
    let full = if k == 64 { !0u64 } else { (1u64 << k) - 1 };
    let mut cand = vec![full; g.n()];
    for (v, label) in g.labels().iter().enumerate() {
        for &c in forbidden.get(label).expect("validated") {
            if (1..=k).contains(&c) {
                cand[v] &= !(1u64 << (c - 1));
            }
        }
    }
    let colors: Vec<u32> = (1..=k).collect();
    let inst = Instance::from_masks(g, colors, cand)?;
    Ok(search::solve_labeled(g, &inst, opts))
}

/// Proper k-coloring avoiding a single forbidden color per vertex.
/// An infeasible verdict here is exactly a certificate that the
/// single-forbidden-color chromatic number exceeds k.
pub fn proper_coloring_avoiding(
    g: &Graph,
    k: u32,
    c0: &Coloring,
    opts: &SolveOptions,
) -> Result<Verdict> {
    let mut forbidden = ListAssignment::new(ListMode::Forbidden, 1..=k);
    for label in g.labels() {
        let c = c0
            .get(label)
            .ok_or_else(|| Error::MissingVertexEntry(label.clone()))?;
        forbidden.insert(label.clone(), [c]);
    }
    avoid_colorable(g, k, &forbidden, opts)
}

#[derive(Clone, Debug)]
pub struct AvoidingResult {
    pub value: u32,
    pub assignments_checked: u64,
}

/// Smallest k such that every forbidden assignment with lists of size at
/// most m can be avoided by a proper k-coloring. Exponential adversary
/// enumeration; guarded to 8 vertices.
pub fn avoiding_chromatic(g: &Graph, m: u32, opts: &SolveOptions) -> Result<AvoidingResult> {
    if g.n() > 8 {
        return Err(Error::TooLarge {
            op: "avoiding_chromatic",
            size: g.n(),
            limit: 8,
        });
    }
    if g.n() == 0 {
        return Ok(AvoidingResult {
            value: 0,
            assignments_checked: 0,
        });
    }
    let chi = chromatic_number(g, opts)?.chi;
    let mut checked = 0u64;
    for k in chi + m..=chi * (m + 1) {
        if sweep_holds(g, k, m, opts, &mut checked)? {
            return Ok(AvoidingResult {
                value: k,
                assignments_checked: checked,
            });
        }
    }
    // Theorem bound: the value is at most (m+1) * chi.
    Err(Error::Precondition(
        "avoiding sweep exceeded the (m+1)*chi bound; this is a solver bug".into(),
    ))
}

/// True iff every forbidden assignment with lists of size min(m, k) drawn
/// from {1..k} is avoidable at k colors.
fn sweep_holds(
    g: &Graph,
    k: u32,
    m: u32,
    opts: &SolveOptions,
    checked: &mut u64,
) -> Result<bool> {
    let n = g.n();
    let s = m.min(k);
    let combos = subsets_of_size(k, s);
    let full = if k == 64 { !0u64 } else { (1u64 << k) - 1 };
    let colors: Vec<u32> = (1..=k).collect();
    let solve_opts = SolveOptions {
        threads: 1,
        deterministic: false,
        ..*opts
    };
    let mut idx = vec![0usize; n];
    loop {
        *checked += 1;
        let cand: Vec<u64> = idx.iter().map(|&i| full & !combos[i]).collect();
        let inst = Instance::from_masks(g, colors.clone(), cand)?;
        let raw = search::solve_raw(&inst, &solve_opts);
        match raw.outcome {
            RawOutcome::Feasible(_) => {}
            RawOutcome::Infeasible => return Ok(false),
            RawOutcome::Unknown => {
                return Err(Error::BudgetExceeded {
                    op: "avoiding_chromatic",
                })
            }
        }
        // odometer over the per-vertex combination indices
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(true);
            }
            idx[pos] += 1;
            if idx[pos] < combos.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// All s-subsets of {1..k} as bitmasks (bit c-1 = color c), in Gosper order.
fn subsets_of_size(k: u32, s: u32) -> Vec<u64> {
    if s == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut subset = (1u64 << s) - 1;
    while subset < (1u64 << k) {
        out.push(subset);
        let low = subset & subset.wrapping_neg();
        let ripple = subset + low;
        subset = ripple | (((subset ^ ripple) >> 2) / low);
    }
    out
}

#[derive(Clone, Debug)]
pub struct AvoidingBoundsReport {
    pub m: u32,
    pub chi: u32,
    /// m-1 avoiding chromatic number.
    pub avoiding_prev: u32,
    /// m avoiding chromatic number.
    pub avoiding_m: u32,
    pub list_chromatic: u32,
    /// The list chromatic number came from bounded-universe verification.
    pub list_chromatic_bounded: bool,
    /// prev+1 <= cur <= prev+chi <= (m+1) chi.
    pub chain_holds: bool,
    /// chi+m <= cur <= list_chromatic+m.
    pub sandwich_holds: bool,
}

/// Computes both sides of the avoiding-number chain and the sandwich
/// between chi+m and the (bounded) list chromatic number plus m.
pub fn check_avoiding_bounds(g: &Graph, m: u32, opts: &SolveOptions) -> Result<AvoidingBoundsReport> {
    if m == 0 {
        return Err(Error::Parameter("bounds check needs m >= 1".into()));
    }
    let chi = chromatic_number(g, opts)?.chi;
    let prev = avoiding_chromatic(g, m - 1, opts)?.value;
    let cur = avoiding_chromatic(g, m, opts)?.value;
    let mut list_chromatic = chi;
    let mut list_chromatic_bounded = false;
    for k in chi.max(1).. {
        let report = is_k_choosable(g, k, 2 * k + 1, opts)?;
        if report.choosable {
            list_chromatic = k;
            list_chromatic_bounded = report.bounded_verification;
            break;
        }
    }
    let chain_holds = prev + 1 <= cur && cur <= prev + chi && prev + chi <= (m + 1) * chi;
    let sandwich_holds = chi + m <= cur && cur <= list_chromatic + m;
    Ok(AvoidingBoundsReport {
        m,
        chi,
        avoiding_prev: prev,
        avoiding_m: cur,
        list_chromatic,
        list_chromatic_bounded,
        chain_holds,
        sandwich_holds,
    })
}

fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc = 1u64;
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The adversary of the multipartite lower bound: a complete multipartite
/// graph with `parts` parts of size C(p, m), where every part receives all
/// m-subsets of {1..p} as forbidden lists.
pub fn multipartite_adversary(p: u32, m: u32, parts: u32) -> Result<(Graph, ListAssignment)> {
    if m > p {
        return Err(Error::Parameter("need m <= p".into()));
    }
    if parts == 0 {
        return Err(Error::Parameter("need at least one part".into()));
    }
    let size = binomial(p as u64, m as u64) as usize;
    let g = families::complete_multipartite(&vec![size; parts as usize])?;
    let combos = subsets_of_size(p, m.min(p));
    let mut lists = ListAssignment::new(ListMode::Forbidden, 1..=p);
    for part in 1..=parts as i64 {
        for (i, &combo) in combos.iter().enumerate() {
            let colors: Vec<u32> = (0..p).filter(|c| combo & (1u64 << c) != 0).map(|c| c + 1).collect();
            lists.insert(
                crate::label::VertexLabel::tag(crate::label::Role::Part, &[part, i as i64 + 1]),
                colors,
            );
        }
    }
    Ok((g, lists))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::{Role, VertexLabel};

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

    fn k1() -> Graph {
        Graph::build(vec![w(1)], &[]).unwrap()
    }

    #[test]
    fn single_vertex_avoiding_cases() {
        let g = k1();
        let mut f = ListAssignment::new(ListMode::Forbidden, 1..=2);
        f.insert(w(1), [1u32]);
        let v = avoid_colorable(&g, 2, &f, &SolveOptions::default()).unwrap();
        assert!(v.is_feasible());
        assert_eq!(v.witness.unwrap().get(&w(1)), Some(2));

        let mut f1 = ListAssignment::new(ListMode::Forbidden, 1..=1);
        f1.insert(w(1), [1u32]);
        let v1 = avoid_colorable(&g, 1, &f1, &SolveOptions::default()).unwrap();
        assert!(v1.is_infeasible());
    }

    #[test]
    fn forbidden_colors_outside_palette_never_constrain() {
        let g = k1();
        let mut f = ListAssignment::new(ListMode::Forbidden, 1..=1);
        f.insert(w(1), [7u32]);
        let v = avoid_colorable(&g, 1, &f, &SolveOptions::default()).unwrap();
        assert!(v.is_feasible());
    }

    #[test]
    fn avoiding_zero_is_chromatic_number() {
        let opts = SolveOptions::default();
        for (g, chi) in [(cycle(5), 3), (cycle(4), 2), (k1(), 1)] {
            assert_eq!(avoiding_chromatic(&g, 0, &opts).unwrap().value, chi);
        }
    }

    #[test]
    fn avoiding_one_of_c5_is_four() {
        let r = avoiding_chromatic(&cycle(5), 1, &SolveOptions::default()).unwrap();
        assert_eq!(r.value, 4);
    }

    #[test]
    fn avoiding_one_of_c4_is_three() {
        // C4 = K_{2,2}
        let r = avoiding_chromatic(&cycle(4), 1, &SolveOptions::default()).unwrap();
        assert_eq!(r.value, 3);
    }

    #[test]
    fn bounds_chain_on_triangle() {
        let labels = vec![w(1), w(2), w(3)];
        let g = Graph::build(labels, &[(w(1), w(2)), (w(2), w(3)), (w(1), w(3))]).unwrap();
        let report = check_avoiding_bounds(&g, 1, &SolveOptions::default()).unwrap();
        assert!(report.chain_holds);
        assert!(report.sandwich_holds);
        assert_eq!(report.chi, 3);
        assert_eq!(report.avoiding_prev, 3);
    }

    #[test]
    fn multipartite_adversary_forces_k22_to_three() {
        let (g, lists) = multipartite_adversary(2, 1, 2).unwrap();
        assert_eq!(g.n(), 4);
        let at2 = avoid_colorable(&g, 2, &lists, &SolveOptions::default()).unwrap();
        assert!(at2.is_infeasible());
        let at3 = avoid_colorable(&g, 3, &lists, &SolveOptions::default()).unwrap();
        assert!(at3.is_feasible());
    }

    #[test]
    fn full_forbidden_list_forces_more_colors() {
        // p = m: every part holds the single full list {1..p}; k = p is
        // trivially infeasible.
        let (g, lists) = multipartite_adversary(2, 2, 2).unwrap();
        let v = avoid_colorable(&g, 2, &lists, &SolveOptions::default()).unwrap();
        assert!(v.is_infeasible());
    }
}
