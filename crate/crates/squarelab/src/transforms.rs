//! Graph operators: powers, line graph, subdivision, total graph.
//!
//! Labels of derived vertices are computed deterministically from the input
//! labels (`e(a,b)` for line vertices, `s(a,b)` for subdivision vertices), so
//! a vertex of `line_graph(subdivision(K6))` can be addressed by the two
//! endpoints it came from. This is what lets theorem-specific list builders
//! find their targets after a chain of transforms.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::VertexLabel;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, VecDeque};

/// k-th power: same vertices, edges between vertices at distance 1..=k.
pub fn power(g: &Graph, k: u32) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Parameter("power requires k >= 1".into()));
    }
    if !g.is_simple() {
        return Err(Error::NotSimple { op: "power" });
    }
    let n = g.n();
    let mut edges = Vec::new();
    let mut dist = vec![u32::MAX; n];
    for s in 0..n {
        dist.fill(u32::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if dist[v] == k {
                continue;
            }
            for &w in g.neighbors(v) {
                let w = w as usize;
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for t in s + 1..n {
            if dist[t] != u32::MAX && dist[t] <= k {
                edges.push((s as u32, t as u32));
            }
        }
    }
    Ok(Graph::from_parts(g.labels().to_vec(), edges))
}

pub fn square(g: &Graph) -> Result<Graph> {
    power(g, 2)
}

/// Line graph; multigraphs are allowed and parallel edges of the input
/// become adjacent vertices of the output.
pub fn line_graph(g: &Graph) -> Graph {
    let mut copies: HashMap<(u32, u32), u32> = HashMap::new();
    let mut labels = Vec::with_capacity(g.m());
    for &(u, v) in g.edges() {
        let copy = copies.entry((u, v)).or_insert(0);
        labels.push(VertexLabel::line_copy(
            g.label(u as usize).clone(),
            g.label(v as usize).clone(),
            *copy,
        ));
        *copy += 1;
    }
    let mut incident = vec![Vec::new(); g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        incident[u as usize].push(e as u32);
        incident[v as usize].push(e as u32);
    }
    let mut edges = BTreeSet::new();
    for list in &incident {
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                edges.insert((list[i].min(list[j]), list[i].max(list[j])));
            }
        }
    }
    Graph::from_parts(labels, edges.into_iter().collect())
}

/// Replaces every edge by a path of length two through a fresh vertex.
/// The output is simple and bipartite even for multigraph input.
pub fn subdivision(g: &Graph) -> Graph {
    let mut labels = g.labels().to_vec();
    let mut copies: HashMap<(u32, u32), u32> = HashMap::new();
    let mut edges = Vec::with_capacity(2 * g.m());
    for &(u, v) in g.edges() {
        let copy = copies.entry((u, v)).or_insert(0);
        let mid = labels.len() as u32;
        labels.push(VertexLabel::sub_copy(
            g.label(u as usize).clone(),
            g.label(v as usize).clone(),
            *copy,
        ));
        *copy += 1;
        edges.push((u, mid));
        edges.push((mid, v));
    }
    Graph::from_parts(labels, edges)
}

/// Total graph on V(g) + E(g), built directly from the three adjacency
/// rules; label-identical to `square(subdivision(g))`.
pub fn total_graph(g: &Graph) -> Result<Graph> {
    if !g.is_simple() {
        return Err(Error::NotSimple { op: "total_graph" });
    }
    let n = g.n();
    let mut labels = g.labels().to_vec();
    for &(u, v) in g.edges() {
        labels.push(VertexLabel::sub(
            g.label(u as usize).clone(),
            g.label(v as usize).clone(),
        ));
    }
    let mut edges = Vec::new();
    // vertex-vertex
    for &(u, v) in g.edges() {
        edges.push((u, v));
    }
    // edge-edge on a shared end
    for (e, &(u1, v1)) in g.edges().iter().enumerate() {
        for (f, &(u2, v2)) in g.edges().iter().enumerate().skip(e + 1) {
            if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                edges.push(((n + e) as u32, (n + f) as u32));
            }
        }
    }
    // vertex-edge incidence
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, (n + e) as u32));
        edges.push((v, (n + e) as u32));
    }
    Ok(Graph::from_parts(labels, edges))
}

/// Named transform steps, as recorded in certificates and on the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformOp {
    Square,
    Line,
    Subdivide,
    Total,
}

impl TransformOp {
    pub fn apply(self, g: &Graph) -> Result<Graph> {
        match self {
            TransformOp::Square => square(g),
            TransformOp::Line => Ok(line_graph(g)),
            TransformOp::Subdivide => Ok(subdivision(g)),
            TransformOp::Total => total_graph(g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TransformOp::Square => "square",
            TransformOp::Line => "line",
            TransformOp::Subdivide => "subdivide",
            TransformOp::Total => "total",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "square" => Ok(TransformOp::Square),
            "line" => Ok(TransformOp::Line),
            "subdivide" => Ok(TransformOp::Subdivide),
            "total" => Ok(TransformOp::Total),
            other => Err(Error::Parameter(format!("unknown transform {other:?}"))),
        }
    }
}

/// Applies a chain of transforms left to right.
pub fn apply_chain(g: &Graph, chain: &[TransformOp]) -> Result<Graph> {
    let mut out = g.clone();
    for op in chain {
        out = op.apply(&out)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::Role;

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

    fn complete(n: usize) -> Graph {
        let labels: Vec<_> = (1..=n as i64).map(w).collect();
        let mut edges = Vec::new();
        for i in 1..=n as i64 {
            for j in i + 1..=n as i64 {
                edges.push((w(i), w(j)));
            }
        }
        Graph::build(labels, &edges).unwrap()
    }

    fn edge_set(g: &Graph) -> BTreeSet<(u32, u32)> {
        g.edges().iter().copied().collect()
    }

    #[test]
    fn power_of_c5_is_k5() {
        let sq = square(&cycle(5)).unwrap();
        assert_eq!(sq.m(), 10);
        assert_eq!(sq.clique_number().unwrap(), 5);
    }

    #[test]
    fn power_one_is_identity() {
        let g = cycle(6);
        let p = power(&g, 1).unwrap();
        assert_eq!(edge_set(&p), edge_set(&g));
    }

    #[test]
    fn power_is_monotone_in_k() {
        let g = cycle(7);
        let mut prev = edge_set(&power(&g, 1).unwrap());
        for k in 2..=4 {
            let cur = edge_set(&power(&g, k).unwrap());
            assert!(prev.is_subset(&cur));
            prev = cur;
        }
        // diameter of C7 is 3: the 3rd power is complete
        assert_eq!(power(&g, 3).unwrap().m(), 21);
    }

    #[test]
    fn line_graph_of_path3_is_single_edge() {
        let p3 = Graph::build(vec![w(1), w(2), w(3)], &[(w(1), w(2)), (w(2), w(3))]).unwrap();
        let l = line_graph(&p3);
        assert_eq!(l.n(), 2);
        assert_eq!(l.m(), 1);
    }

    #[test]
    fn line_graph_degree_rule() {
        // deg_L(uv) = deg(u) + deg(v) - 2 in simple graphs
        for g in [complete(5), cycle(6)] {
            let l = line_graph(&g);
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                assert_eq!(
                    l.degree(e),
                    g.degree(u as usize) + g.degree(v as usize) - 2
                );
            }
        }
    }

    #[test]
    fn line_graph_of_parallel_edges() {
        let g = Graph::build(vec![w(1), w(2)], &[(w(1), w(2)), (w(1), w(2))]).unwrap();
        let l = line_graph(&g);
        assert_eq!(l.n(), 2);
        assert_eq!(l.m(), 1);
        assert!(l.is_simple());
    }

    #[test]
    fn subdivision_counts() {
        let s4 = subdivision(&complete(4));
        assert_eq!(s4.n(), 10);
        assert_eq!(s4.m(), 12);
        assert!(s4.is_bipartite().is_some());
        assert_eq!(s4.girth(), Some(6));

        let s6 = subdivision(&complete(6));
        assert_eq!(s6.n(), 21);
        assert_eq!(s6.m(), 30);

        let one_edge = Graph::build(vec![w(1), w(2)], &[(w(1), w(2))]).unwrap();
        let s = subdivision(&one_edge);
        assert_eq!(s.n(), 3);
        assert_eq!(s.m(), 2);
        assert_eq!(s.girth(), None);
    }

    #[test]
    fn total_graph_equals_square_of_subdivision() {
        let one_edge = Graph::build(vec![w(1), w(2)], &[(w(1), w(2))]).unwrap();
        let samples = vec![complete(3), complete(4), cycle(5), one_edge];
        for g in samples {
            let t = total_graph(&g).unwrap().canonical();
            let s = square(&subdivision(&g)).unwrap().canonical();
            assert_eq!(t.labels(), s.labels());
            assert_eq!(t.edges(), s.edges());
        }
    }

    #[test]
    fn total_graph_of_single_edge_is_triangle() {
        let one_edge = Graph::build(vec![w(1), w(2)], &[(w(1), w(2))]).unwrap();
        let t = total_graph(&one_edge).unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(t.m(), 3);
    }

    #[test]
    fn total_graph_of_k4_max_degree() {
        // branch vertices of S(K4) have degree 3, so degree 6 in the square
        let t = total_graph(&complete(4)).unwrap();
        assert_eq!(t.max_degree(), 6);
    }
}
