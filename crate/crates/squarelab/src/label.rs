//! Structured vertex labels.
//!
//! Vertices carry a role plus integer indices (`x[3]`, `u[1,2]`) instead of
//! bare numbers, so that family-specific list builders can address "all x_i
//! with i >= n-8" without depending on vertex positions. Labels produced by
//! the line-graph and subdivision transforms embed the endpoint labels of the
//! originating edge, which keeps every derived vertex traceable back to the
//! base family.

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Role tag for a plain (non-derived) vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    X,
    Y,
    Z,
    U,
    V,
    XPrime,
    YPrime,
    /// Generic vertex of a base graph (complete graphs, DIMACS imports).
    Vertex,
    /// Vertex of a complete multipartite graph; indices are [part, position].
    Part,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::X => "x",
            Role::Y => "y",
            Role::Z => "z",
            Role::U => "u",
            Role::V => "v",
            Role::XPrime => "x'",
            Role::YPrime => "y'",
            Role::Vertex => "w",
            Role::Part => "p",
        }
    }
}

/// Label of a single vertex.
///
/// `Sub` and `Line` keep the unordered pair of endpoint labels of the edge
/// they came from; `copy` disambiguates parallel edges of a multigraph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    Tag { role: Role, indices: Vec<i64> },
    Sub { ends: Box<(VertexLabel, VertexLabel)>, copy: u32 },
    Line { ends: Box<(VertexLabel, VertexLabel)>, copy: u32 },
}

impl VertexLabel {
    pub fn tag(role: Role, indices: &[i64]) -> Self {
        VertexLabel::Tag {
            role,
            indices: indices.to_vec(),
        }
    }

    pub fn tag1(role: Role, i: i64) -> Self {
        Self::tag(role, &[i])
    }

    fn ordered(a: VertexLabel, b: VertexLabel) -> Box<(VertexLabel, VertexLabel)> {
        if a <= b {
            Box::new((a, b))
        } else {
            Box::new((b, a))
        }
    }

    /// Subdivision vertex inserted on the edge {a, b}.
    pub fn sub(a: VertexLabel, b: VertexLabel) -> Self {
        VertexLabel::Sub {
            ends: Self::ordered(a, b),
            copy: 0,
        }
    }

    pub fn sub_copy(a: VertexLabel, b: VertexLabel, copy: u32) -> Self {
        VertexLabel::Sub {
            ends: Self::ordered(a, b),
            copy,
        }
    }

    /// Line-graph vertex standing for the edge {a, b}.
    pub fn line(a: VertexLabel, b: VertexLabel) -> Self {
        VertexLabel::Line {
            ends: Self::ordered(a, b),
            copy: 0,
        }
    }

    pub fn line_copy(a: VertexLabel, b: VertexLabel, copy: u32) -> Self {
        VertexLabel::Line {
            ends: Self::ordered(a, b),
            copy,
        }
    }

    /// Role and indices if this is a plain tag label.
    pub fn as_tag(&self) -> Option<(Role, &[i64])> {
        match self {
            VertexLabel::Tag { role, indices } => Some((*role, indices)),
            _ => None,
        }
    }

    /// Endpoint labels if this is a line-graph vertex.
    pub fn line_ends(&self) -> Option<(&VertexLabel, &VertexLabel)> {
        match self {
            VertexLabel::Line { ends, .. } => Some((&ends.0, &ends.1)),
            _ => None,
        }
    }

    /// Endpoint labels if this is a subdivision vertex.
    pub fn sub_ends(&self) -> Option<(&VertexLabel, &VertexLabel)> {
        match self {
            VertexLabel::Sub { ends, .. } => Some((&ends.0, &ends.1)),
            _ => None,
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Tag { role, indices } => {
                write!(f, "{}", role.as_str())?;
                if !indices.is_empty() {
                    write!(f, "[")?;
                    for (k, i) in indices.iter().enumerate() {
                        if k > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{i}")?;
                    }
                    write!(f, "]")?;
                }
                Ok(())
            }
            VertexLabel::Sub { ends, copy } => {
                write!(f, "s({},{})", ends.0, ends.1)?;
                if *copy > 0 {
                    write!(f, "#{copy}")?;
                }
                Ok(())
            }
            VertexLabel::Line { ends, copy } => {
                write!(f, "e({},{})", ends.0, ends.1)?;
                if *copy > 0 {
                    write!(f, "#{copy}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("invalid vertex label {input:?}: {reason} at byte {at}")]
pub struct ParseLabelError {
    pub input: String,
    pub reason: &'static str,
    pub at: usize,
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, prefix: &str) -> bool {
        if self.rest().starts_with(prefix) {
            self.pos += prefix.len();
            true
        } else {
            false
        }
    }

    fn err(&self, reason: &'static str) -> ParseLabelError {
        ParseLabelError {
            input: self.src.to_string(),
            reason,
            at: self.pos,
        }
    }

    fn int(&mut self) -> Result<i64, ParseLabelError> {
        let rest = self.rest();
        let mut len = 0;
        let bytes = rest.as_bytes();
        if len < bytes.len() && bytes[len] == b'-' {
            len += 1;
        }
        while len < bytes.len() && bytes[len].is_ascii_digit() {
            len += 1;
        }
        let text = &rest[..len];
        let value: i64 = text.parse().map_err(|_| self.err("expected integer"))?;
        self.pos += len;
        Ok(value)
    }

    fn label(&mut self) -> Result<VertexLabel, ParseLabelError> {
        if self.eat("s(") {
            return self.derived(true);
        }
        if self.eat("e(") {
            return self.derived(false);
        }
        let role = if self.eat("x'") {
            Role::XPrime
        } else if self.eat("y'") {
            Role::YPrime
        } else if self.eat("x") {
            Role::X
        } else if self.eat("y") {
            Role::Y
        } else if self.eat("z") {
            Role::Z
        } else if self.eat("u") {
            Role::U
        } else if self.eat("v") {
            Role::V
        } else if self.eat("w") {
            Role::Vertex
        } else if self.eat("p") {
            Role::Part
        } else {
            return Err(self.err("expected role or s(/e("));
        };
        let mut indices = Vec::new();
        if self.eat("[") {
            loop {
                indices.push(self.int()?);
                if self.eat("]") {
                    break;
                }
                if !self.eat(",") {
                    return Err(self.err("expected ',' or ']'"));
                }
            }
        }
        Ok(VertexLabel::Tag { role, indices })
    }

    fn derived(&mut self, sub: bool) -> Result<VertexLabel, ParseLabelError> {
        let a = self.label()?;
        if !self.eat(",") {
            return Err(self.err("expected ','"));
        }
        let b = self.label()?;
        if !self.eat(")") {
            return Err(self.err("expected ')'"));
        }
        let copy = if self.eat("#") { self.int()? as u32 } else { 0 };
        Ok(if sub {
            VertexLabel::sub_copy(a, b, copy)
        } else {
            VertexLabel::line_copy(a, b, copy)
        })
    }
}

impl FromStr for VertexLabel {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor { src: s, pos: 0 };
        let label = cur.label()?;
        if cur.pos != s.len() {
            return Err(cur.err("trailing input"));
        }
        Ok(label)
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_round_trip() {
        let w1 = VertexLabel::tag1(Role::Vertex, 1);
        let w2 = VertexLabel::tag1(Role::Vertex, 2);
        let samples = vec![
            VertexLabel::tag(Role::X, &[3]),
            VertexLabel::tag(Role::Part, &[2, 5]),
            VertexLabel::tag(Role::XPrime, &[1]),
            VertexLabel::tag(Role::U, &[]),
            VertexLabel::sub(w1.clone(), w2.clone()),
            VertexLabel::line(w1.clone(), VertexLabel::sub(w1.clone(), w2.clone())),
            VertexLabel::line_copy(w1.clone(), w2.clone(), 2),
            VertexLabel::tag(Role::Y, &[-4, 0]),
        ];
        for label in samples {
            let text = label.to_string();
            let back: VertexLabel = text.parse().unwrap();
            assert_eq!(back, label, "round trip through {text:?}");
        }
    }

    #[test]
    fn derived_labels_order_endpoints() {
        let a = VertexLabel::tag1(Role::Vertex, 2);
        let b = VertexLabel::tag1(Role::Vertex, 1);
        assert_eq!(VertexLabel::sub(a.clone(), b.clone()), VertexLabel::sub(b, a));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("q[1]".parse::<VertexLabel>().is_err());
        assert!("x[1".parse::<VertexLabel>().is_err());
        assert!("s(x[1])".parse::<VertexLabel>().is_err());
        assert!("x[1]extra".parse::<VertexLabel>().is_err());
    }

    #[test]
    fn serde_uses_string_form() {
        let label = VertexLabel::line(
            VertexLabel::tag1(Role::Vertex, 1),
            VertexLabel::sub(VertexLabel::tag1(Role::Vertex, 1), VertexLabel::tag1(Role::Vertex, 2)),
        );
        let json = serde_json::to_string(&label).unwrap();
        assert_eq!(json, "\"e(w[1],s(w[1],w[2]))\"");
        let back: VertexLabel = serde_json::from_str(&json).unwrap();
        assert_eq!(back, label);
    }
}
