//! Serialization: versioned JSON schemas for graphs, list assignments,
//! colorings and orientations, DIMACS .col import/export with a JSON label
//! sidecar, canonical digests, and DOT export.
//!
//! JSON is the canonical interchange format. Graphs serialize in canonical
//! form (vertices sorted by label, edges sorted lexicographically), so
//! build -> serialize -> parse -> serialize is byte-identical.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::VertexLabel;
use crate::orient::Orientation;
use crate::solver::Coloring;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct GraphJson {
    schema: u32,
    kind: String,
    vertices: Vec<VertexLabel>,
    edges: Vec<(u32, u32)>,
    simple: bool,
}

/// Canonical pretty JSON for a graph.
pub fn graph_to_json(g: &Graph) -> String {
    let c = g.canonical();
    let doc = GraphJson {
        schema: SCHEMA_VERSION,
        kind: "graph".into(),
        vertices: c.labels().to_vec(),
        edges: c.edges().to_vec(),
        simple: c.is_simple(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph serializes");
    s.push('\n');
    s
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text)?;
    if doc.kind != "graph" {
        return Err(Error::Format {
            what: "graph json",
            detail: format!("kind {:?}, expected \"graph\"", doc.kind),
        });
    }
    if doc.schema != SCHEMA_VERSION {
        return Err(Error::Format {
            what: "graph json",
            detail: format!("schema {} unsupported", doc.schema),
        });
    }
    let labels = doc.vertices;
    let edges: Vec<(VertexLabel, VertexLabel)> = doc
        .edges
        .iter()
        .map(|&(a, b)| {
            let get = |i: u32| {
                labels.get(i as usize).cloned().ok_or(Error::Format {
                    what: "graph json",
                    detail: format!("edge endpoint {i} out of range"),
                })
            };
            Ok((get(a)?, get(b)?))
        })
        .collect::<Result<_>>()?;
    let g = Graph::build(labels, &edges)?;
    if g.is_simple() != doc.simple {
        return Err(Error::Format {
            what: "graph json",
            detail: "declared simple flag contradicts the edge list".into(),
        });
    }
    Ok(g)
}

/// Hex SHA-256 of the canonical compact serialization; the digest pinned
/// inside certificates.
pub fn graph_digest(g: &Graph) -> String {
    let c = g.canonical();
    let doc = GraphJson {
        schema: SCHEMA_VERSION,
        kind: "graph".into(),
        vertices: c.labels().to_vec(),
        edges: c.edges().to_vec(),
        simple: c.is_simple(),
    };
    let bytes = serde_json::to_vec(&doc).expect("graph serializes");
    hex::encode(Sha256::digest(&bytes))
}

/// DIMACS .col export: `p edge n m` then 1-based `e u v` lines, in
/// canonical vertex order. Labels travel in a JSON sidecar (the format
/// itself cannot carry them).
pub fn graph_to_dimacs(g: &Graph) -> String {
    let c = g.canonical();
    let mut out = String::new();
    out.push_str(&format!("p edge {} {}\n", c.n(), c.m()));
    for &(a, b) in c.edges() {
        out.push_str(&format!("e {} {}\n", a + 1, b + 1));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct LabelsJson {
    schema: u32,
    kind: String,
    labels: Vec<VertexLabel>,
}

pub fn labels_sidecar(g: &Graph) -> String {
    let c = g.canonical();
    let doc = LabelsJson {
        schema: SCHEMA_VERSION,
        kind: "labels".into(),
        labels: c.labels().to_vec(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("labels serialize");
    s.push('\n');
    s
}

/// Parses DIMACS .col; vertex i gets label w[i] unless a sidecar supplies
/// the real labels.
pub fn graph_from_dimacs(text: &str, sidecar: Option<&str>) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let bad = |detail: String| Error::Format {
            what: "dimacs",
            detail: format!("line {}: {detail}", lineno + 1),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["p", "edge", nv, _ne] => {
                n = Some(nv.parse().map_err(|_| bad(format!("bad vertex count {nv:?}")))?);
            }
            ["e", a, b] => {
                let a: u32 = a.parse().map_err(|_| bad(format!("bad endpoint {a:?}")))?;
                let b: u32 = b.parse().map_err(|_| bad(format!("bad endpoint {b:?}")))?;
                if a == 0 || b == 0 {
                    return Err(bad("endpoints are 1-based".into()));
                }
                edges.push((a - 1, b - 1));
            }
            _ => return Err(bad(format!("unrecognized line {line:?}"))),
        }
    }
    let n = n.ok_or(Error::Format {
        what: "dimacs",
        detail: "missing p edge header".into(),
    })?;
    let labels: Vec<VertexLabel> = match sidecar {
        Some(text) => {
            let doc: LabelsJson = serde_json::from_str(text)?;
            if doc.kind != "labels" || doc.labels.len() != n {
                return Err(Error::Format {
                    what: "labels sidecar",
                    detail: "kind or vertex count mismatch".into(),
                });
            }
            doc.labels
        }
        None => (1..=n as i64)
            .map(|i| VertexLabel::tag1(crate::label::Role::Vertex, i))
            .collect(),
    };
    let by_label: Vec<(VertexLabel, VertexLabel)> = edges
        .iter()
        .map(|&(a, b)| {
            let get = |i: u32| {
                labels.get(i as usize).cloned().ok_or(Error::Format {
                    what: "dimacs",
                    detail: format!("endpoint {} out of range", i + 1),
                })
            };
            Ok((get(a)?, get(b)?))
        })
        .collect::<Result<_>>()?;
    Graph::build(labels, &by_label)
}

#[derive(Serialize, Deserialize)]
struct WrappedJson<T> {
    schema: u32,
    kind: String,
    #[serde(flatten)]
    value: T,
}

fn wrap<T: Serialize>(kind: &str, value: T) -> String {
    let doc = WrappedJson {
        schema: SCHEMA_VERSION,
        kind: kind.into(),
        value,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

fn unwrap_json<T: for<'de> Deserialize<'de>>(kind: &'static str, text: &str) -> Result<T> {
    let doc: WrappedJson<T> = serde_json::from_str(text)?;
    if doc.kind != kind {
        return Err(Error::Format {
            what: "json document",
            detail: format!("kind {:?}, expected {kind:?}", doc.kind),
        });
    }
    if doc.schema != SCHEMA_VERSION {
        return Err(Error::Format {
            what: "json document",
            detail: format!("schema {} unsupported", doc.schema),
        });
    }
    Ok(doc.value)
}

#[derive(Serialize, Deserialize)]
struct ListsBody {
    lists: crate::solver::ListAssignment,
}

pub fn lists_to_json(lists: &crate::solver::ListAssignment) -> String {
    wrap("lists", ListsBody { lists: lists.clone() })
}

pub fn lists_from_json(text: &str) -> Result<crate::solver::ListAssignment> {
    Ok(unwrap_json::<ListsBody>("lists", text)?.lists)
}

#[derive(Serialize, Deserialize)]
struct ColoringBody {
    colors: Coloring,
}

pub fn coloring_to_json(c: &Coloring) -> String {
    wrap("coloring", ColoringBody { colors: c.clone() })
}

pub fn coloring_from_json(text: &str) -> Result<Coloring> {
    Ok(unwrap_json::<ColoringBody>("coloring", text)?.colors)
}

#[derive(Serialize, Deserialize)]
struct OrientationBody {
    arcs: Vec<(VertexLabel, VertexLabel)>,
}

pub fn orientation_to_json(o: &Orientation) -> String {
    wrap("orientation", OrientationBody { arcs: o.arc_labels() })
}

/// DOT export; an optional coloring becomes fill colors.
pub fn graph_to_dot(g: &Graph, coloring: Option<&Coloring>) -> String {
    const PALETTE: [&str; 8] = [
        "lightblue", "lightcoral", "palegreen", "gold", "plum", "orange", "cyan", "gray80",
    ];
    let c = g.canonical();
    let mut out = String::from("graph {\n  node [style=filled];\n");
    for (v, label) in c.labels().iter().enumerate() {
        match coloring.and_then(|col| col.get(label)) {
            Some(color) => out.push_str(&format!(
                "  n{v} [label=\"{label}\\n{color}\" fillcolor={}];\n",
                PALETTE[color as usize % PALETTE.len()]
            )),
            None => out.push_str(&format!("  n{v} [label=\"{label}\" fillcolor=white];\n")),
        }
    }
    for &(a, b) in c.edges() {
        out.push_str(&format!("  n{a} -- n{b};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::label::Role;

    #[test]
    fn graph_json_round_trip_is_byte_identical() {
        let g = families::gen_petersen(5, 2).unwrap();
        let once = graph_to_json(&g);
        let parsed = graph_from_json(&once).unwrap();
        let twice = graph_to_json(&parsed);
        assert_eq!(once, twice);
    }

    #[test]
    fn digest_ignores_construction_order() {
        let w = |i: i64| VertexLabel::tag1(Role::Vertex, i);
        let e = [(w(1), w(2)), (w(2), w(3))];
        let g1 = Graph::build(vec![w(1), w(2), w(3)], &e).unwrap();
        let g2 = Graph::build(vec![w(3), w(2), w(1)], &e).unwrap();
        assert_eq!(graph_digest(&g1), graph_digest(&g2));
    }

    #[test]
    fn dimacs_round_trip_with_sidecar() {
        let g = families::girth6_cubic(8).unwrap();
        let col = graph_to_dimacs(&g);
        assert!(col.starts_with("p edge 16 24\n"));
        let sidecar = labels_sidecar(&g);
        let back = graph_from_dimacs(&col, Some(&sidecar)).unwrap();
        assert_eq!(graph_digest(&back), graph_digest(&g));
    }

    #[test]
    fn dimacs_without_sidecar_uses_default_labels() {
        let back = graph_from_dimacs("p edge 3 2\ne 1 2\ne 2 3\n", None).unwrap();
        assert_eq!(back.n(), 3);
        assert_eq!(back.m(), 2);
    }

    #[test]
    fn dimacs_rejects_garbage() {
        assert!(graph_from_dimacs("e 1 2\n", None).is_err());
        assert!(graph_from_dimacs("p edge 2 1\ne 0 1\n", None).is_err());
        assert!(graph_from_dimacs("p edge 2 1\nq 1 2\n", None).is_err());
    }

    #[test]
    fn lists_json_round_trip() {
        use crate::solver::{ListAssignment, ListMode};
        let mut lists = ListAssignment::new(ListMode::Admissible, 1..=5);
        lists.insert(VertexLabel::tag1(Role::X, 1), [2u32, 3, 4, 5]);
        let text = lists_to_json(&lists);
        let back = lists_from_json(&text).unwrap();
        assert_eq!(back, lists);
    }
}
