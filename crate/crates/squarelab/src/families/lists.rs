//! Per-theorem list assignments.
//!
//! The bar-list i-bar is the color universe minus {i}. Builders address
//! vertices through their structured labels and reject graphs whose label
//! set does not match the expected family shape, so a list assignment can
//! never silently land on the wrong construction.

use super::{lsk_vertex, LatinSquare};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::{Role, VertexLabel};
use crate::solver::{ListAssignment, ListMode};
use std::collections::BTreeSet;

/// Universe minus {i}.
pub fn bar(universe: &BTreeSet<u32>, i: u32) -> BTreeSet<u32> {
    universe.iter().copied().filter(|&c| c != i).collect()
}

fn mismatch(builder: &str, label: &VertexLabel) -> Error {
    Error::Precondition(format!(
        "{builder}: vertex {label} does not belong to the expected family"
    ))
}

fn tag_index(label: &VertexLabel) -> Option<(Role, i64)> {
    match label.as_tag() {
        Some((role, [i])) => Some((role, *i)),
        _ => None,
    }
}

/// Lists for the girth-6 cubic family: 1-bar on every x_i, 2-bar on
/// y_1..y_{n-4}, 3-bar on y_{n-3}..y_n, over {1..5}.
pub fn lists_thm21(g: &Graph, n: i64) -> Result<ListAssignment> {
    if n < 8 || n % 4 != 0 {
        return Err(Error::Parameter(format!(
            "lists_thm21 needs n >= 8 divisible by 4, got {n}"
        )));
    }
    let universe: BTreeSet<u32> = (1..=5).collect();
    let mut lists = ListAssignment::new(ListMode::Admissible, universe.clone());
    for label in g.labels() {
        let excluded = match tag_index(label) {
            Some((Role::X, i)) if (1..=n).contains(&i) => 1,
            Some((Role::Y, i)) if (1..=n - 4).contains(&i) => 2,
            Some((Role::Y, i)) if (n - 3..=n).contains(&i) => 3,
            _ => return Err(mismatch("lists_thm21", label)),
        };
        lists.insert(label.clone(), bar(&universe, excluded));
    }
    Ok(lists)
}

/// Lists for the consecutive-spoke cubic family over {1..5}: 4-bar on the
/// tail 8 <= i <= n, 3-bar on the middle block i in {3,4,5}, and the two
/// mixed quadruples 2-bar / 1-bar on x_1 x_2 y_6 x_7 and y_1 y_2 x_6 y_7.
pub fn lists_thm22(g: &Graph, n: i64) -> Result<ListAssignment> {
    if n < 12 || n % 4 != 0 {
        return Err(Error::Parameter(format!(
            "lists_thm22 needs n >= 12 divisible by 4, got {n}"
        )));
    }
    let universe: BTreeSet<u32> = (1..=5).collect();
    let mut lists = ListAssignment::new(ListMode::Admissible, universe.clone());
    for label in g.labels() {
        let excluded = match tag_index(label) {
            Some((Role::X, i)) if (8..=n).contains(&i) => 4,
            Some((Role::Y, i)) if (8..=n).contains(&i) => 4,
            Some((Role::X, i)) if (3..=5).contains(&i) => 3,
            Some((Role::Y, i)) if (3..=5).contains(&i) => 3,
            Some((Role::X, 1 | 2 | 7)) | Some((Role::Y, 6)) => 2,
            Some((Role::Y, 1 | 2 | 7)) | Some((Role::X, 6)) => 1,
            _ => return Err(mismatch("lists_thm22", label)),
        };
        lists.insert(label.clone(), bar(&universe, excluded));
    }
    Ok(lists)
}

/// Lists over {1..5} distributing {1-bar, 2-bar, 3-bar} over each of the
/// four maximum independent sets of the square of L(S(K4)).
/// perm[set][position] is the excluded color for the position-th vertex of
/// the set (ascending vertex order).
pub fn lists_lsk4(g: &Graph, sets: &[Vec<usize>], perm: &[[u8; 3]; 4]) -> Result<ListAssignment> {
    if sets.len() != 4 || sets.iter().any(|s| s.len() != 3) {
        return Err(Error::Parameter(
            "lists_lsk4 needs exactly four independent sets of size 3".into(),
        ));
    }
    for row in perm {
        let mut sorted = *row;
        sorted.sort_unstable();
        if sorted != [1, 2, 3] {
            return Err(Error::Parameter(format!(
                "lists_lsk4 rows must be permutations of 1..3, got {row:?}"
            )));
        }
    }
    let mut covered = vec![false; g.n()];
    let universe: BTreeSet<u32> = (1..=5).collect();
    let mut lists = ListAssignment::new(ListMode::Admissible, universe.clone());
    for (s, set) in sets.iter().enumerate() {
        for (pos, &v) in set.iter().enumerate() {
            if v >= g.n() || covered[v] {
                return Err(Error::Parameter(
                    "independent sets must partition the vertex set".into(),
                ));
            }
            covered[v] = true;
            lists.insert(g.label(v).clone(), bar(&universe, perm[s][pos] as u32));
        }
    }
    if !covered.iter().all(|&c| c) {
        return Err(Error::Parameter(
            "independent sets must cover the vertex set".into(),
        ));
    }
    Ok(lists)
}

/// Latin-square lists on L(S(K_t)): vertex v_{i,j} receives
/// {0..t} minus {L(i,j)}.
pub fn lists_lsk6(g: &Graph, latin: &LatinSquare) -> Result<ListAssignment> {
    let t = latin.order() as i64;
    let universe: BTreeSet<u32> = (0..=t as u32).collect();
    let mut lists = ListAssignment::new(ListMode::Admissible, universe.clone());
    for label in g.labels() {
        let (i, j) = lsk_indices(label)
            .filter(|&(i, j)| (1..=t).contains(&i) && (1..=t).contains(&j) && i != j)
            .ok_or_else(|| mismatch("lists_lsk6", label))?;
        let excluded = latin.get(i as usize, j as usize);
        lists.insert(label.clone(), bar(&universe, excluded));
    }
    Ok(lists)
}

/// Decodes a line vertex of L(S(K_t)) into its pair (i, j): the half-edge
/// at branch i toward branch j.
pub fn lsk_indices(label: &VertexLabel) -> Option<(i64, i64)> {
    let (a, b) = label.line_ends()?;
    let (branch, sub) = if a.as_tag().is_some() { (a, b) } else { (b, a) };
    let (role, i) = tag_index(branch)?;
    if role != Role::Vertex {
        return None;
    }
    let (s1, s2) = sub.sub_ends()?;
    let (r1, p) = tag_index(s1)?;
    let (r2, q) = tag_index(s2)?;
    if r1 != Role::Vertex || r2 != Role::Vertex {
        return None;
    }
    if p == i {
        Some((i, q))
    } else if q == i {
        Some((i, p))
    } else {
        None
    }
}

/// Which edge of P(n, k) a line-graph vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PetersenEdge {
    /// x_i = v_i v_{i+1}
    Outer,
    /// y_i = v_i u_i
    Spoke,
    /// z_i = u_i u_{i+k}
    Inner,
}

/// Decodes a vertex of L(P(n, k)) into (edge kind, ring index i).
pub fn petersen_line_index(label: &VertexLabel, n: i64, k: i64) -> Option<(PetersenEdge, i64)> {
    let (a, b) = label.line_ends()?;
    let (ra, p) = tag_index(a)?;
    let (rb, q) = tag_index(b)?;
    match (ra, rb) {
        (Role::V, Role::V) => {
            let (p, q) = (p.min(q), p.max(q));
            if q == p + 1 {
                Some((PetersenEdge::Outer, p))
            } else if p == 1 && q == n {
                Some((PetersenEdge::Outer, n))
            } else {
                None
            }
        }
        (Role::U, Role::V) | (Role::V, Role::U) => {
            if p == q {
                Some((PetersenEdge::Spoke, p))
            } else {
                None
            }
        }
        (Role::U, Role::U) => {
            let (p, q) = (p.min(q), p.max(q));
            if q - p == k {
                Some((PetersenEdge::Inner, p))
            } else if p + n - q == k {
                Some((PetersenEdge::Inner, q))
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Lists over Z_6 for L(P(n,3)) with n >= 15 divisible by 5: 1-bar on the
/// tail x_i, 2-bar on the tail y_i (n-8 <= i <= n), 3-bar elsewhere.
pub fn lists_lp3(g: &Graph, n: i64) -> Result<ListAssignment> {
    if n < 15 || n % 5 != 0 {
        return Err(Error::Parameter(format!(
            "lists_lp3 needs n >= 15 divisible by 5, got {n}"
        )));
    }
    let universe: BTreeSet<u32> = (1..=6).collect();
    let mut lists = ListAssignment::new(ListMode::Admissible, universe.clone());
    for label in g.labels() {
        let (kind, i) = petersen_line_index(label, n, 3)
            .ok_or_else(|| mismatch("lists_lp3", label))?;
        let excluded = match kind {
            PetersenEdge::Outer if i >= n - 8 => 1,
            PetersenEdge::Spoke if i >= n - 8 => 2,
            _ => 3,
        };
        lists.insert(label.clone(), bar(&universe, excluded));
    }
    Ok(lists)
}

/// Lists over Z_6 for L(P(n,2)) with n divisible by 5: 1-bar on every x_i,
/// 2-bar on every y_i, 3-bar on every z_i.
pub fn lists_lp2(g: &Graph, n: i64) -> Result<ListAssignment> {
    if n < 5 || n % 5 != 0 {
        return Err(Error::Parameter(format!(
            "lists_lp2 needs n divisible by 5, got {n}"
        )));
    }
    let universe: BTreeSet<u32> = (1..=6).collect();
    let mut lists = ListAssignment::new(ListMode::Admissible, universe.clone());
    for label in g.labels() {
        let (kind, _) = petersen_line_index(label, n, 2)
            .ok_or_else(|| mismatch("lists_lp2", label))?;
        let excluded = match kind {
            PetersenEdge::Outer => 1,
            PetersenEdge::Spoke => 2,
            PetersenEdge::Inner => 3,
        };
        lists.insert(label.clone(), bar(&universe, excluded));
    }
    Ok(lists)
}

/// Lists over Z_{k+1} for the sharpness construction: (k+1)-bar on X and Y,
/// and i-bar on the matched pair x'_{i+k-1}, y'_{i+k-1} (index mod k).
pub fn lists_sharpness(g: &Graph, k: i64) -> Result<ListAssignment> {
    if k < 3 {
        return Err(Error::Parameter("lists_sharpness needs k >= 3".into()));
    }
    let universe: BTreeSet<u32> = (1..=k as u32 + 1).collect();
    let mut lists = ListAssignment::new(ListMode::Admissible, universe.clone());
    for label in g.labels() {
        let excluded = match tag_index(label) {
            Some((Role::X | Role::Y, i)) if (1..k).contains(&i) => k as u32 + 1,
            Some((Role::XPrime | Role::YPrime, j)) if (1..=k).contains(&j) => {
                // j = i + k - 1 (mod k), so i = j + 1 (mod k)
                if j == k {
                    1
                } else {
                    j as u32 + 1
                }
            }
            _ => return Err(mismatch("lists_sharpness", label)),
        };
        lists.insert(label.clone(), bar(&universe, excluded));
    }
    Ok(lists)
}

/// Extends a base assignment of L(S(K_t)) to the chained family: old
/// vertices keep their lists, the chain vertices all receive the list the
/// two endpoints of the replaced edge share.
pub fn lists_chained(g: &Graph, base: &ListAssignment) -> Result<ListAssignment> {
    let end_x = lsk_vertex(1, 2);
    let end_y = lsk_vertex(2, 1);
    let shared = base
        .get(&end_x)
        .ok_or_else(|| mismatch("lists_chained", &end_x))?;
    if base.get(&end_y) != Some(shared) {
        return Err(Error::Precondition(
            "lists_chained: the replaced edge's endpoints must share one list".into(),
        ));
    }
    let shared = shared.clone();
    let mut lists = ListAssignment::new(
        ListMode::Admissible,
        base.universe().iter().copied().collect::<Vec<_>>(),
    );
    for label in g.labels() {
        if let Some(list) = base.get(label) {
            lists.insert(label.clone(), list.iter().copied());
        } else {
            match label.as_tag() {
                Some((Role::X | Role::Y | Role::U, _)) => {
                    lists.insert(label.clone(), shared.iter().copied());
                }
                _ => return Err(mismatch("lists_chained", label)),
            }
        }
    }
    Ok(lists)
}

/// Forbidden-mode lists from a proper edge coloring over Z_5: each vertex
/// must avoid exactly the colors that are NOT incident to it, i.e. it may
/// only use colors of its own edges.
pub fn lists_observ(g: &Graph, edge_colors: &[u32]) -> Result<ListAssignment> {
    if edge_colors.len() != g.m() {
        return Err(Error::Parameter(format!(
            "lists_observ: {} edge colors for {} edges",
            edge_colors.len(),
            g.m()
        )));
    }
    if let Some(&c) = edge_colors.iter().find(|&&c| !(1..=5).contains(&c)) {
        return Err(Error::Parameter(format!("edge color {c} outside Z_5")));
    }
    let mut incident: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); g.n()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        for v in [a as usize, b as usize] {
            if !incident[v].insert(edge_colors[e]) {
                return Err(Error::Precondition(format!(
                    "edge coloring is not proper at vertex {}",
                    g.label(v)
                )));
            }
        }
    }
    let universe: BTreeSet<u32> = (1..=5).collect();
    let mut lists = ListAssignment::new(ListMode::Forbidden, universe.clone());
    for (v, label) in g.labels().iter().enumerate() {
        let forbidden: Vec<u32> = universe
            .iter()
            .copied()
            .filter(|c| !incident[v].contains(c))
            .collect();
        lists.insert(label.clone(), forbidden);
    }
    Ok(lists)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::transforms;

    #[test]
    fn thm21_lists_match_statement() {
        let g = families::girth6_cubic(8).unwrap();
        let lists = lists_thm21(&g, 8).unwrap();
        let expect = |s: &[u32]| s.iter().copied().collect::<BTreeSet<u32>>();
        for i in 1..=8 {
            assert_eq!(
                lists.get(&VertexLabel::tag1(Role::X, i)).unwrap(),
                &expect(&[2, 3, 4, 5])
            );
        }
        for i in 1..=4 {
            assert_eq!(
                lists.get(&VertexLabel::tag1(Role::Y, i)).unwrap(),
                &expect(&[1, 3, 4, 5])
            );
        }
        for i in 5..=8 {
            assert_eq!(
                lists.get(&VertexLabel::tag1(Role::Y, i)).unwrap(),
                &expect(&[1, 2, 4, 5])
            );
        }
        assert!(lists_thm21(&g, 10).is_err(), "10 is not divisible by 4");
    }

    #[test]
    fn thm22_lists_cover_and_have_size_four() {
        let g = families::planar_cubic(12).unwrap();
        let lists = lists_thm22(&g, 12).unwrap();
        lists.validate_against(&g).unwrap();
        assert!(lists.lists().values().all(|l| l.len() == 4));
    }

    #[test]
    fn lsk6_lists_have_size_six_from_seven_colors() {
        let base = transforms::line_graph(&transforms::subdivision(
            &families::complete_graph(6).unwrap(),
        ));
        let rounds = families::one_factorization(6).unwrap();
        let latin = families::latin_from_factorization(6, &rounds).unwrap();
        let lists = lists_lsk6(&base, &latin).unwrap();
        lists.validate_against(&base).unwrap();
        assert_eq!(lists.universe().len(), 7);
        assert!(lists.lists().values().all(|l| l.len() == 6));
        // the two halves of one subdivision vertex share their list
        assert_eq!(
            lists.get(&lsk_vertex(1, 2)),
            lists.get(&lsk_vertex(2, 1))
        );
    }

    #[test]
    fn petersen_line_labels_decode() {
        let p = families::gen_petersen(10, 3).unwrap();
        let l = transforms::line_graph(&p);
        let mut counts = [0usize; 3];
        for label in l.labels() {
            let (kind, i) = petersen_line_index(label, 10, 3).unwrap();
            assert!((1..=10).contains(&i));
            counts[match kind {
                PetersenEdge::Outer => 0,
                PetersenEdge::Spoke => 1,
                PetersenEdge::Inner => 2,
            }] += 1;
        }
        assert_eq!(counts, [10, 10, 10]);
    }

    #[test]
    fn lp_lists_sizes() {
        let l15 = transforms::line_graph(&families::gen_petersen(15, 3).unwrap());
        let lists = lists_lp3(&l15, 15).unwrap();
        lists.validate_against(&l15).unwrap();
        assert!(lists.lists().values().all(|l| l.len() == 5));

        let l10 = transforms::line_graph(&families::gen_petersen(10, 2).unwrap());
        let lists2 = lists_lp2(&l10, 10).unwrap();
        lists2.validate_against(&l10).unwrap();
        assert!(lists2.lists().values().all(|l| l.len() == 5));
    }

    #[test]
    fn sharpness_lists_match_statement_at_k3() {
        let g = families::sharpness_graph(3).unwrap();
        let lists = lists_sharpness(&g, 3).unwrap();
        lists.validate_against(&g).unwrap();
        let expect = |s: &[u32]| s.iter().copied().collect::<BTreeSet<u32>>();
        // X and Y receive 4-bar = {1,2,3}
        assert_eq!(
            lists.get(&VertexLabel::tag1(Role::X, 1)).unwrap(),
            &expect(&[1, 2, 3])
        );
        // i=1 lands on x'_3 (1+3-1 = 3): 1-bar
        assert_eq!(
            lists.get(&VertexLabel::tag1(Role::XPrime, 3)).unwrap(),
            &expect(&[2, 3, 4])
        );
        assert_eq!(
            lists.get(&VertexLabel::tag1(Role::YPrime, 1)).unwrap(),
            &expect(&[1, 3, 4])
        );
        assert!(lists.lists().values().all(|l| l.len() == 3));
    }

    #[test]
    fn observ_lists_complement_incident_colors() {
        let g = families::complete_graph(3).unwrap();
        // triangle edges colored 1, 2, 3: each vertex sees two colors
        let lists = lists_observ(&g, &[1, 2, 3]).unwrap();
        assert!(lists.lists().values().all(|l| l.len() == 3));
        // improper coloring rejected
        assert!(lists_observ(&g, &[1, 1, 2]).is_err());
    }
}
