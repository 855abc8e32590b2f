//! Text formats for digraphs.
//!
//! JSON: `{"n": 4, "arcs": [[0,1],[1,2],[2,3],[3,0]]}` with 0-indexed,
//! loop-free arcs. Matrix text: the first line is `n`, followed by `n` rows of
//! `n` characters from `{0,1}`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Digraph, Vertex};
use crate::error::DigraphError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphJson {
    pub n: usize,
    pub arcs: Vec<[Vertex; 2]>,
}

impl From<&Digraph> for DigraphJson {
    fn from(g: &Digraph) -> Self {
        Self { n: g.order(), arcs: g.arcs().map(|(x, y)| [x, y]).collect() }
    }
}

impl TryFrom<DigraphJson> for Digraph {
    type Error = DigraphError;

    fn try_from(j: DigraphJson) -> Result<Self, DigraphError> {
        Digraph::new(j.n, j.arcs.into_iter().map(|[x, y]| (x, y)))
    }
}

impl Serialize for Digraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DigraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = DigraphJson::deserialize(d)?;
        Digraph::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Matrix,
}

impl FromStr for Format {
    type Err = DigraphError;

    fn from_str(s: &str) -> Result<Self, DigraphError> {
        match s {
            "json" => Ok(Format::Json),
            "matrix" => Ok(Format::Matrix),
            other => Err(DigraphError::Parse(format!("unknown format {other:?}"))),
        }
    }
}

impl Format {
    pub fn parse(self, text: &str) -> Result<Digraph, DigraphError> {
        match self {
            Format::Json => Digraph::from_json(text),
            Format::Matrix => Digraph::from_matrix_text(text),
        }
    }

    pub fn render(self, g: &Digraph) -> String {
        match self {
            Format::Json => g.to_json(),
            Format::Matrix => g.to_matrix_text(),
        }
    }
}

impl Digraph {
    pub fn from_json(text: &str) -> Result<Self, DigraphError> {
        let j: DigraphJson = serde_json::from_str(text).map_err(|e| DigraphError::Parse(e.to_string()))?;
        Digraph::try_from(j)
    }

    /// Compact canonical JSON: arcs in lexicographic order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&DigraphJson::from(self)).expect("digraph json is serializable")
    }

    pub fn from_matrix_text(text: &str) -> Result<Self, DigraphError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| DigraphError::Parse("missing vertex count".into()))?;
        let n: usize = header.parse().map_err(|_| DigraphError::Parse(format!("bad vertex count {header:?}")))?;
        let mut arcs = Vec::new();
        for x in 0..n {
            let row = lines.next().ok_or_else(|| DigraphError::Parse(format!("missing row {x}")))?;
            if row.chars().count() != n {
                return Err(DigraphError::Parse(format!("row {x} has length {}, expected {n}", row.chars().count())));
            }
            for (y, c) in row.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => arcs.push((x, y)),
                    other => return Err(DigraphError::Parse(format!("bad matrix entry {other:?} in row {x}"))),
                }
            }
        }
        if lines.next().is_some() {
            return Err(DigraphError::Parse("trailing rows after matrix".into()));
        }
        Digraph::new(n, arcs)
    }

    pub fn to_matrix_text(&self) -> String {
        let mut s = format!("{}\n", self.order());
        for x in 0..self.order() {
            for y in 0..self.order() {
                s.push(if self.has_arc(x, y) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }
}

impl std::fmt::Display for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut s = String::new();
        write!(s, "Digraph(n={}, arcs=[", self.order())?;
        for (i, (x, y)) in self.arcs().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            write!(s, "{x}->{y}")?;
        }
        s.push_str("])");
        f.write_str(&s)
    }
}
