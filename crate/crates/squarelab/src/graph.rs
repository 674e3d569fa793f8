//! Undirected labeled (multi)graphs and the structural predicates the
//! certificate pipeline relies on.
//!
//! Graphs are immutable after construction: every operation is a pure
//! function of its inputs, so values can be shared freely across threads.

use crate::clique;
use crate::error::{Error, Result};
use crate::label::VertexLabel;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Immutable undirected multigraph with unique structured vertex labels.
#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    index: HashMap<VertexLabel, usize>,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
    simple: bool,
}

/// Two-sided partition returned by `bipartition`.
#[derive(Clone, Debug)]
pub struct Bipartition {
    /// side_of[v] is 0 or 1.
    pub side_of: Vec<u8>,
}

impl Bipartition {
    pub fn sides(&self) -> [Vec<u32>; 2] {
        let mut sides = [Vec::new(), Vec::new()];
        for (v, &s) in self.side_of.iter().enumerate() {
            sides[s as usize].push(v as u32);
        }
        sides
    }
}

/// Outcome of the bipartiteness check; the negative case carries a witness.
#[derive(Clone, Debug)]
pub enum BipartiteCheck {
    Bipartite(Bipartition),
    /// Closed walk of odd length, given as a vertex sequence with
    /// first == last and consecutive vertices adjacent.
    OddClosedWalk(Vec<u32>),
}

/// Snapshot of the structural facts a certificate records.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub is_bipartite: bool,
    pub regular_degree: Option<u32>,
    pub girth: Option<u32>,
    pub clique_number: u32,
    pub is_claw_free: bool,
    pub max_degree: u32,
}

impl Graph {
    /// Builds a graph from labels and label pairs.
    ///
    /// The simple flag is set iff no parallel edges were supplied;
    /// self-loops are rejected outright.
    pub fn build(labels: Vec<VertexLabel>, edges: &[(VertexLabel, VertexLabel)]) -> Result<Graph> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let &u = index.get(a).ok_or_else(|| Error::UnknownEndpoint(a.clone()))?;
            let &v = index.get(b).ok_or_else(|| Error::UnknownEndpoint(b.clone()))?;
            if u == v {
                return Err(Error::SelfLoop(a.clone()));
            }
            idx_edges.push((u.min(v) as u32, u.max(v) as u32));
        }
        Ok(Self::from_indexed(labels, index, idx_edges))
    }

    /// Builds from pre-resolved vertex indices. Callers must not pass
    /// self-loops or out-of-range endpoints.
    pub(crate) fn from_parts(labels: Vec<VertexLabel>, edges: Vec<(u32, u32)>) -> Graph {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            let prev = index.insert(label.clone(), i);
            assert!(prev.is_none(), "duplicate label {label}");
        }
        let edges = edges
            .into_iter()
            .map(|(u, v)| {
                assert!(u != v, "self-loop at index {u}");
                assert!((v as usize) < labels.len(), "endpoint {v} out of range");
                (u.min(v), u.max(v))
            })
            .collect();
        Self::from_indexed(labels, index, edges)
    }

    fn from_indexed(
        labels: Vec<VertexLabel>,
        index: HashMap<VertexLabel, usize>,
        edges: Vec<(u32, u32)>,
    ) -> Graph {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        let simple = sorted.windows(2).all(|w| w[0] != w[1]);
        Graph {
            labels,
            index,
            edges,
            adj,
            simple,
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    /// Edge list as stored (endpoints normalized to (min, max)).
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn vertex(&self, label: &VertexLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require_vertex(&self, label: &VertexLabel) -> Result<usize> {
        self.vertex(label)
            .ok_or_else(|| Error::NoSuchVertex(label.clone()))
    }

    /// Neighbors of v in ascending order, repeated per parallel edge.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0.min(self.n().saturating_sub(1)));
        if self.n() > 0 && (0..self.n()).all(|v| self.degree(v) == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Adjacency bitmasks for exact solvers; parallel edges collapse to one bit.
    pub fn adj_masks(&self) -> Result<Vec<u128>> {
        if self.n() > 128 {
            return Err(Error::TooLarge {
                op: "adjacency masks",
                size: self.n(),
                limit: 128,
            });
        }
        let mut masks = vec![0u128; self.n()];
        for &(u, v) in &self.edges {
            masks[u as usize] |= 1u128 << v;
            masks[v as usize] |= 1u128 << u;
        }
        Ok(masks)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for root in 0..self.n() {
            if seen[root] {
                continue;
            }
            let mut comp = vec![root as u32];
            seen[root] = true;
            let mut queue = vec![root];
            while let Some(v) = queue.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                        queue.push(w as usize);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// BFS 2-coloring; the negative case returns an odd closed walk.
    pub fn bipartition_check(&self) -> BipartiteCheck {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for root in 0..n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    let w = w as usize;
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        // Odd walk: root -> v, edge vw, w -> root.
                        let mut up = Vec::new();
                        let mut a = v;
                        while a != usize::MAX {
                            up.push(a as u32);
                            a = parent[a];
                        }
                        up.reverse();
                        let mut walk = up;
                        let mut b = w;
                        while b != usize::MAX {
                            walk.push(b as u32);
                            b = parent[b];
                        }
                        return BipartiteCheck::OddClosedWalk(walk);
                    }
                }
            }
        }
        BipartiteCheck::Bipartite(Bipartition { side_of: side })
    }

    pub fn is_bipartite(&self) -> Option<Bipartition> {
        match self.bipartition_check() {
            BipartiteCheck::Bipartite(b) => Some(b),
            BipartiteCheck::OddClosedWalk(_) => None,
        }
    }

    /// Length of a shortest cycle; `None` for forests. Parallel edges count
    /// as 2-cycles.
    pub fn girth(&self) -> Option<u32> {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Some(2);
        }
        // Edge-id adjacency so the BFS can skip the tree edge to the parent.
        let mut adj = vec![Vec::new(); self.n()];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u as usize].push((v as usize, e));
            adj[v as usize].push((u as usize, e));
        }
        let mut best: Option<u32> = None;
        let mut dist = vec![usize::MAX; self.n()];
        let mut parent_edge = vec![usize::MAX; self.n()];
        for root in 0..self.n() {
            dist.fill(usize::MAX);
            parent_edge.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                if let Some(b) = best {
                    // No shorter cycle can be found past this depth.
                    if dist[v] as u32 * 2 >= b {
                        break;
                    }
                }
                for &(w, e) in &adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent_edge[w] = e;
                        queue.push_back(w);
                    } else if e != parent_edge[v] {
                        let len = (dist[v] + dist[w] + 1) as u32;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Exact maximum clique via branch-and-bound with coloring bounds.
    pub fn max_clique(&self) -> Result<Vec<usize>> {
        if !self.simple {
            return Err(Error::NotSimple { op: "max_clique" });
        }
        let masks = self.adj_masks()?;
        Ok(clique::max_clique(&masks))
    }

    pub fn clique_number(&self) -> Result<u32> {
        Ok(self.max_clique()?.len() as u32)
    }

    /// True iff no vertex has three pairwise non-adjacent neighbors.
    pub fn is_claw_free(&self) -> Result<bool> {
        if !self.simple {
            return Err(Error::NotSimple { op: "is_claw_free" });
        }
        for v in 0..self.n() {
            let nbrs = self.neighbors(v);
            for i in 0..nbrs.len() {
                for j in i + 1..nbrs.len() {
                    if self.has_edge(nbrs[i] as usize, nbrs[j] as usize) {
                        continue;
                    }
                    for k in j + 1..nbrs.len() {
                        if !self.has_edge(nbrs[i] as usize, nbrs[k] as usize)
                            && !self.has_edge(nbrs[j] as usize, nbrs[k] as usize)
                        {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// All independent sets of exactly the given size, in lexicographic
    /// order of their sorted vertex lists.
    pub fn independent_sets_of_size(&self, size: usize) -> Result<Vec<Vec<usize>>> {
        if !self.simple {
            return Err(Error::NotSimple {
                op: "independent_sets_of_size",
            });
        }
        let masks = self.adj_masks()?;
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(size);
        fn rec(
            masks: &[u128],
            n: usize,
            size: usize,
            start: usize,
            blocked: u128,
            current: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if current.len() == size {
                out.push(current.clone());
                return;
            }
            let need = size - current.len();
            for v in start..n {
                if n - v < need {
                    break;
                }
                if blocked & (1u128 << v) != 0 {
                    continue;
                }
                current.push(v);
                rec(masks, n, size, v + 1, blocked | masks[v], current, out);
                current.pop();
            }
        }
        rec(&masks, self.n(), size, 0, 0, &mut current, &mut out);
        Ok(out)
    }

    pub fn complement(&self) -> Result<Graph> {
        if !self.simple {
            return Err(Error::NotSimple { op: "complement" });
        }
        let mut edges = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if !self.has_edge(u, v) {
                    edges.push((u as u32, v as u32));
                }
            }
        }
        Ok(Graph::from_parts(self.labels.clone(), edges))
    }

    /// Sorted part sizes if this graph is complete multipartite, else `None`.
    ///
    /// Recognized by checking that the complement is a disjoint union of
    /// cliques (the parts).
    pub fn complete_multipartite_parts(&self) -> Result<Option<Vec<usize>>> {
        let co = self.complement()?;
        let comps = co.components();
        let mut within = vec![0usize; comps.len()];
        let mut comp_of = vec![0usize; self.n()];
        for (i, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v as usize] = i;
            }
        }
        for &(u, v) in co.edges() {
            if comp_of[u as usize] == comp_of[v as usize] {
                within[comp_of[u as usize]] += 1;
            }
        }
        for (i, comp) in comps.iter().enumerate() {
            let s = comp.len();
            if within[i] != s * (s - 1) / 2 {
                return Ok(None);
            }
        }
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        Ok(Some(sizes))
    }

    pub fn structure_report(&self) -> Result<StructureReport> {
        Ok(StructureReport {
            is_bipartite: self.is_bipartite().is_some(),
            regular_degree: self.regular_degree().map(|d| d as u32),
            girth: self.girth(),
            clique_number: self.clique_number()?,
            is_claw_free: self.is_claw_free()?,
            max_degree: self.max_degree() as u32,
        })
    }

    /// Same graph with vertices sorted by label and edges sorted
    /// lexicographically; the canonical form used for serialization
    /// and digests.
    pub fn canonical(&self) -> Graph {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        let mut rank = vec![0u32; self.n()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new as u32;
        }
        let labels: Vec<VertexLabel> = order.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (rank[u as usize], rank[v as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Graph::from_parts(labels, edges)
    }
}
