//! Constructors for every graph family the certificate pipeline touches,
//! plus one-factorizations, Latin squares, and the per-theorem list
//! builders.
//!
//! All ring indices live in {1..n} and arithmetic is taken modulo n back
//! into that range. Builders accept parameters outside the proof ranges of
//! the theorems; `FamilyDescriptor::claims_applicable` records whether the
//! divisibility constraints of the associated claims hold, so exploration
//! never silently inherits a claim it does not satisfy.

mod latin;
mod lists;

pub use latin::{latin_from_factorization, one_factorization, LatinSquare};
pub use lists::{
    bar, lists_chained, lists_lp2, lists_lp3, lists_lsk4, lists_lsk6, lists_observ,
    lists_sharpness, lists_thm21, lists_thm22, lsk_indices, petersen_line_index, PetersenEdge,
};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::{Role, VertexLabel};
use crate::transforms;
use serde::{Deserialize, Serialize};

fn x(i: i64) -> VertexLabel {
    VertexLabel::tag1(Role::X, i)
}

fn y(i: i64) -> VertexLabel {
    VertexLabel::tag1(Role::Y, i)
}

fn u(i: i64) -> VertexLabel {
    VertexLabel::tag1(Role::U, i)
}

fn v(i: i64) -> VertexLabel {
    VertexLabel::tag1(Role::V, i)
}

fn w(i: i64) -> VertexLabel {
    VertexLabel::tag1(Role::Vertex, i)
}

/// Maps an integer into the ring representatives {1..n}.
pub fn ring(i: i64, n: i64) -> i64 {
    (i - 1).rem_euclid(n) + 1
}

/// Cubic bipartite family of girth 6: vertices x_i, y_i and edges
/// x_i y_{i-2}, x_i y_i, x_i y_{i+1} over Z_n.
pub fn girth6_cubic(n: i64) -> Result<Graph> {
    if n < 8 {
        return Err(Error::Parameter(format!("girth6_cubic needs n >= 8, got {n}")));
    }
    let mut labels: Vec<_> = (1..=n).map(x).collect();
    labels.extend((1..=n).map(y));
    let mut edges = Vec::with_capacity(3 * n as usize);
    for i in 1..=n {
        edges.push((x(i), y(ring(i - 2, n))));
        edges.push((x(i), y(i)));
        edges.push((x(i), y(ring(i + 1, n))));
    }
    Graph::build(labels, &edges)
}

/// Cubic bipartite family with consecutive spokes: edges x_i y_{i-1},
/// x_i y_i, x_i y_{i+1}. The paper draws these planar; planarity is
/// recorded as metadata elsewhere, never verified.
pub fn planar_cubic(n: i64) -> Result<Graph> {
    if n < 12 {
        return Err(Error::Parameter(format!("planar_cubic needs n >= 12, got {n}")));
    }
    let mut labels: Vec<_> = (1..=n).map(x).collect();
    labels.extend((1..=n).map(y));
    let mut edges = Vec::with_capacity(3 * n as usize);
    for i in 1..=n {
        edges.push((x(i), y(ring(i - 1, n))));
        edges.push((x(i), y(i)));
        edges.push((x(i), y(ring(i + 1, n))));
    }
    Graph::build(labels, &edges)
}

/// Generalized Petersen graph P(n, k): outer cycle v_i, spokes v_i u_i,
/// inner k-step circulant u_i u_{i+k}.
pub fn gen_petersen(n: i64, k: i64) -> Result<Graph> {
    if !(1 <= k && 2 * k < n) {
        return Err(Error::Parameter(format!(
            "gen_petersen needs 1 <= k < n/2, got n={n} k={k}"
        )));
    }
    let mut labels: Vec<_> = (1..=n).map(v).collect();
    labels.extend((1..=n).map(u));
    let mut edges = Vec::with_capacity(3 * n as usize);
    for i in 1..=n {
        edges.push((v(i), v(ring(i + 1, n))));
        edges.push((v(i), u(i)));
        edges.push((u(i), u(ring(i + k, n))));
    }
    Graph::build(labels, &edges)
}

pub fn complete_graph(n: i64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Parameter("complete_graph needs n >= 1".into()));
    }
    let labels: Vec<_> = (1..=n).map(w).collect();
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((w(i), w(j)));
        }
    }
    Graph::build(labels, &edges)
}

/// Complete multipartite graph; vertex p[t, i] is the i-th vertex of part t.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
        return Err(Error::Parameter("part sizes must be nonempty and positive".into()));
    }
    let part = |t: usize, i: usize| VertexLabel::tag(Role::Part, &[t as i64 + 1, i as i64 + 1]);
    let mut labels = Vec::new();
    for (t, &s) in sizes.iter().enumerate() {
        for i in 0..s {
            labels.push(part(t, i));
        }
    }
    let mut edges = Vec::new();
    for (t1, &s1) in sizes.iter().enumerate() {
        for (t2, &s2) in sizes.iter().enumerate().skip(t1 + 1) {
            for i in 0..s1 {
                for j in 0..s2 {
                    edges.push((part(t1, i), part(t2, j)));
                }
            }
        }
    }
    Graph::build(labels, &edges)
}

/// Path-like multigraph of order 3n+3 on x, v_0..v_{3n}, y; consecutive
/// v_i v_{i+1} carry k parallel edges when i = 1 (mod 3). P_{n,1} is a path.
pub fn p_nk_multigraph(n: i64, k: i64) -> Result<Graph> {
    if n < 1 || k < 1 {
        return Err(Error::Parameter("p_nk_multigraph needs n, k >= 1".into()));
    }
    let mut labels = vec![x(0)];
    labels.extend((0..=3 * n).map(v));
    labels.push(y(0));
    let mut edges = vec![(x(0), v(0))];
    for i in 0..3 * n {
        let mult = if i % 3 == 1 { k } else { 1 };
        for _ in 0..mult {
            edges.push((v(i), v(i + 1)));
        }
    }
    edges.push((v(3 * n), y(0)));
    Graph::build(labels, &edges)
}

/// Line-graph vertex of L(S(K_t)) standing for the half-edge of branch i
/// toward branch j; the v_{i,j} of the subdivision constructions.
pub fn lsk_vertex(i: i64, j: i64) -> VertexLabel {
    VertexLabel::line(w(i), VertexLabel::sub(w(i), w(j)))
}

/// The chained (t-1)-regular family of the corollary proofs: L(S(K_t))
/// with the edge v_{1,2} v_{2,1} replaced by a chain of n copies of
/// K_t minus an edge, linked by edges x_i y_{i+1}.
pub fn chained_line_family(t: i64, n: i64) -> Result<Graph> {
    if t != 4 && t != 6 {
        return Err(Error::Parameter(format!("chained_line_family needs t in {{4, 6}}, got {t}")));
    }
    if n < 1 {
        return Err(Error::Parameter("chained_line_family needs n >= 1".into()));
    }
    let base = transforms::line_graph(&transforms::subdivision(&complete_graph(t)?));
    let end_x = lsk_vertex(1, 2);
    let end_y = lsk_vertex(2, 1);
    let mut labels = base.labels().to_vec();
    let mut edges: Vec<(VertexLabel, VertexLabel)> = base
        .edges()
        .iter()
        .map(|&(a, b)| (base.label(a as usize).clone(), base.label(b as usize).clone()))
        .filter(|(a, b)| {
            !((a == &end_x && b == &end_y) || (a == &end_y && b == &end_x))
        })
        .collect();
    for i in 1..=n {
        // H_i = K_t minus the edge x_i y_i, with internals u[i, c].
        let mut members = vec![x(i), y(i)];
        for c in 1..=t - 2 {
            members.push(VertexLabel::tag(Role::U, &[i, c]));
        }
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                if a == 0 && b == 1 {
                    continue;
                }
                edges.push((members[a].clone(), members[b].clone()));
            }
        }
        labels.extend(members);
    }
    edges.push((end_x, y(1)));
    for i in 1..n {
        edges.push((x(i), y(i + 1)));
    }
    edges.push((x(n), end_y));
    Graph::build(labels, &edges)
}

/// Sharpness construction on X, X', Y', Y: X and Y complete, X-X' and
/// Y'-Y complete bipartite, X'-Y' complete bipartite minus the matching
/// x'_i y'_i. (2k-2)-regular on 4k-2 vertices.
pub fn sharpness_graph(k: i64) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Parameter(format!("sharpness_graph needs k >= 3, got {k}")));
    }
    let xp = |i: i64| VertexLabel::tag1(Role::XPrime, i);
    let yp = |i: i64| VertexLabel::tag1(Role::YPrime, i);
    let mut labels: Vec<_> = (1..k).map(x).collect();
    labels.extend((1..=k).map(xp));
    labels.extend((1..=k).map(yp));
    labels.extend((1..k).map(y));
    let mut edges = Vec::new();
    for i in 1..k {
        for j in i + 1..k {
            edges.push((x(i), x(j)));
            edges.push((y(i), y(j)));
        }
    }
    for i in 1..k {
        for j in 1..=k {
            edges.push((x(i), xp(j)));
            edges.push((y(i), yp(j)));
        }
    }
    for i in 1..=k {
        for j in 1..=k {
            if i != j {
                edges.push((xp(i), yp(j)));
            }
        }
    }
    Graph::build(labels, &edges)
}

/// Family ids as they appear on the CLI and inside certificates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyName {
    Girth6Cubic,
    PlanarCubic,
    GenPetersen,
    Complete,
    CompleteMultipartite,
    PNkMultigraph,
    ChainedLine,
    Sharpness,
}

impl FamilyName {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::Girth6Cubic => "girth6-cubic",
            FamilyName::PlanarCubic => "planar-cubic",
            FamilyName::GenPetersen => "gen-petersen",
            FamilyName::Complete => "complete",
            FamilyName::CompleteMultipartite => "complete-multipartite",
            FamilyName::PNkMultigraph => "p-nk-multigraph",
            FamilyName::ChainedLine => "chained-line",
            FamilyName::Sharpness => "sharpness",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "girth6-cubic" => Ok(FamilyName::Girth6Cubic),
            "planar-cubic" => Ok(FamilyName::PlanarCubic),
            "gen-petersen" => Ok(FamilyName::GenPetersen),
            "complete" => Ok(FamilyName::Complete),
            "complete-multipartite" => Ok(FamilyName::CompleteMultipartite),
            "p-nk-multigraph" => Ok(FamilyName::PNkMultigraph),
            "chained-line" => Ok(FamilyName::ChainedLine),
            "sharpness" => Ok(FamilyName::Sharpness),
            other => Err(Error::Parameter(format!("unknown family {other:?}"))),
        }
    }
}

/// A family id plus its integer parameters; enough to rebuild the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDescriptor {
    pub name: FamilyName,
    pub params: Vec<i64>,
}

impl FamilyDescriptor {
    pub fn new(name: FamilyName, params: &[i64]) -> Self {
        FamilyDescriptor {
            name,
            params: params.to_vec(),
        }
    }

    fn param(&self, i: usize) -> Result<i64> {
        self.params.get(i).copied().ok_or_else(|| {
            Error::Parameter(format!(
                "family {} needs at least {} parameter(s)",
                self.name.as_str(),
                i + 1
            ))
        })
    }

    pub fn build(&self) -> Result<Graph> {
        match self.name {
            FamilyName::Girth6Cubic => girth6_cubic(self.param(0)?),
            FamilyName::PlanarCubic => planar_cubic(self.param(0)?),
            FamilyName::GenPetersen => gen_petersen(self.param(0)?, self.param(1)?),
            FamilyName::Complete => complete_graph(self.param(0)?),
            FamilyName::CompleteMultipartite => {
                let sizes: Vec<usize> = self
                    .params
                    .iter()
                    .map(|&s| {
                        usize::try_from(s)
                            .map_err(|_| Error::Parameter("part sizes must be nonnegative".into()))
                    })
                    .collect::<Result<_>>()?;
                complete_multipartite(&sizes)
            }
            FamilyName::PNkMultigraph => p_nk_multigraph(self.param(0)?, self.param(1)?),
            FamilyName::ChainedLine => chained_line_family(self.param(0)?, self.param(1)?),
            FamilyName::Sharpness => sharpness_graph(self.param(0)?),
        }
    }

    /// Whether the divisibility constraints of the family's theorem claims
    /// hold for these parameters. Building still succeeds when this is
    /// false; the claims just do not transfer.
    pub fn claims_applicable(&self) -> bool {
        match self.name {
            FamilyName::Girth6Cubic => self
                .params
                .first()
                .map_or(false, |&n| n >= 8 && n % 4 == 0),
            FamilyName::PlanarCubic => self
                .params
                .first()
                .map_or(false, |&n| n >= 12 && n % 4 == 0),
            _ => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth6_cubic_structure() {
        for n in [8i64, 12, 16] {
            let g = girth6_cubic(n).unwrap();
            assert_eq!(g.n(), 2 * n as usize);
            assert_eq!(g.m(), 3 * n as usize);
            assert_eq!(g.regular_degree(), Some(3));
            assert!(g.is_bipartite().is_some());
            assert_eq!(g.girth(), Some(6), "no 4-cycles at n={n}");
        }
        assert!(girth6_cubic(7).is_err());
    }

    #[test]
    fn girth6_cubic_bipartition_is_x_versus_y() {
        let g = girth6_cubic(8).unwrap();
        let b = g.is_bipartite().unwrap();
        let sides = b.sides();
        assert_eq!(sides[0].len(), 8);
        assert_eq!(sides[1].len(), 8);
        // all x on one side: x vertices are indices 0..8 by construction
        let side_of_x0 = b.side_of[0];
        for i in 0..8 {
            assert_eq!(b.side_of[i], side_of_x0);
        }
    }

    #[test]
    fn planar_cubic_structure() {
        for n in [12i64, 16] {
            let g = planar_cubic(n).unwrap();
            assert_eq!(g.n(), 2 * n as usize);
            assert_eq!(g.regular_degree(), Some(3));
            assert!(g.is_bipartite().is_some());
        }
        assert!(planar_cubic(11).is_err());
    }

    #[test]
    fn petersen_family() {
        let p52 = gen_petersen(5, 2).unwrap();
        assert_eq!(p52.n(), 10);
        assert_eq!(p52.m(), 15);
        assert_eq!(p52.regular_degree(), Some(3));
        assert_eq!(p52.girth(), Some(5));

        let p103 = gen_petersen(10, 3).unwrap();
        assert!(p103.is_bipartite().is_some());

        let p102 = gen_petersen(10, 2).unwrap();
        assert!(p102.is_bipartite().is_none());

        assert!(gen_petersen(10, 5).is_err());
    }

    #[test]
    fn multipartite_family() {
        let g = complete_multipartite(&[3, 3, 3, 3, 3]).unwrap();
        assert_eq!(g.n(), 15);
        let co = g.complement().unwrap();
        let comps = co.components();
        assert_eq!(comps.len(), 5);
        assert!(comps.iter().all(|c| c.len() == 3));

        assert_eq!(complete_multipartite(&[1, 1, 1]).unwrap().m(), 3);
        assert_eq!(complete_graph(4).unwrap().m(), 6);
    }

    #[test]
    fn p_nk_cases() {
        let path = p_nk_multigraph(1, 1).unwrap();
        assert_eq!(path.n(), 6);
        assert_eq!(path.m(), 5);
        assert!(path.is_simple());

        let p12 = p_nk_multigraph(1, 2).unwrap();
        assert_eq!(p12.n(), 6);
        assert!(!p12.is_simple());
        assert_eq!(p12.m(), 6);

        let p24 = p_nk_multigraph(2, 4).unwrap();
        assert_eq!(p24.n(), 9);
    }

    #[test]
    fn chained_family_is_regular_and_claw_free() {
        for (t, n, deg) in [(4i64, 1i64, 3), (4, 2, 3), (6, 1, 5)] {
            let g = chained_line_family(t, n).unwrap();
            assert_eq!(g.regular_degree(), Some(deg), "t={t} n={n}");
            assert!(g.is_claw_free().unwrap());
            let base_order = (t * (t - 1)) as usize;
            assert_eq!(g.n(), base_order + (t as usize) * n as usize);
        }
        assert!(chained_line_family(5, 1).is_err());
    }

    #[test]
    fn sharpness_structure() {
        let g3 = sharpness_graph(3).unwrap();
        assert_eq!(g3.n(), 10);
        assert_eq!(g3.regular_degree(), Some(4));

        let g4 = sharpness_graph(4).unwrap();
        assert_eq!(g4.n(), 14);
        assert_eq!(g4.regular_degree(), Some(6));

        assert!(sharpness_graph(2).is_err());
    }

    #[test]
    fn descriptor_round_trip() {
        let d = FamilyDescriptor::new(FamilyName::GenPetersen, &[10, 3]);
        let g = d.build().unwrap();
        assert_eq!(g.n(), 20);
        assert!(d.claims_applicable());
        let json = serde_json::to_string(&d).unwrap();
        assert!(json.contains("gen-petersen"));
        let back: FamilyDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn claims_flags() {
        assert!(FamilyDescriptor::new(FamilyName::Girth6Cubic, &[8]).claims_applicable());
        assert!(!FamilyDescriptor::new(FamilyName::Girth6Cubic, &[10]).claims_applicable());
        assert!(!FamilyDescriptor::new(FamilyName::PlanarCubic, &[13]).claims_applicable());
    }
}
