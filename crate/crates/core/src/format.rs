//! Wire formats: JSON-lines records, DOT graphs and cycle-file parsing.
//!
//! Vertices travel as `{"v":[1,3,5]}`; classes as
//! `{"necklace":[1,2,3],"order":9,"base":[1,3,6]}`.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::classgraph::SckGraph;
use crate::error::{Error, Result};
use crate::hamilton::{ClassIndexing, SpanningTree};
use crate::model::{vertex_list, ClassInfo, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub v: Vec<u32>,
}

impl From<&Vertex> for VertexRecord {
    fn from(v: &Vertex) -> Self {
        VertexRecord { v: v.to_vec() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassRecord {
    pub necklace: Vec<u32>,
    pub order: u32,
    pub base: Vec<u32>,
}

impl From<&ClassInfo> for ClassRecord {
    fn from(c: &ClassInfo) -> Self {
        ClassRecord {
            necklace: c.necklace.as_slice().to_vec(),
            order: c.order,
            base: c.base_vertex.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeRecord {
    pub from: Vec<u32>,
    pub to: Vec<u32>,
    pub move_index: usize,
    pub witness_u: Vec<u32>,
    pub witness_v: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TreeRecord {
    pub class: Vec<u32>,
    pub level: u32,
    pub parent: Option<Vec<u32>>,
    pub anchor: Vec<u32>,
}

/// Writes one JSON object followed by a newline.
pub fn write_jsonl<T: Serialize>(out: &mut dyn Write, record: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, record)?;
    out.write_all(b"\n")
}

pub fn edge_records(g: &SckGraph) -> impl Iterator<Item = EdgeRecord> + '_ {
    g.edges.iter().map(|e| {
        let w = &e.witness;
        EdgeRecord {
            from: w.from_class.necklace.as_slice().to_vec(),
            to: w.to_class.necklace.as_slice().to_vec(),
            move_index: w.move_index,
            witness_u: w.witness_u.to_vec(),
            witness_v: w.witness_v.to_vec(),
        }
    })
}

pub fn tree_records<'a>(
    g: &'a SckGraph,
    t: &'a SpanningTree,
    idx: &'a ClassIndexing,
) -> impl Iterator<Item = TreeRecord> + 'a {
    t.order.iter().map(move |&c| TreeRecord {
        class: g.class(c).necklace.as_slice().to_vec(),
        level: t.level[c],
        parent: t.parent[c].map(|(b, _)| g.class(b).necklace.as_slice().to_vec()),
        anchor: idx.anchors[c].to_vec(),
    })
}

/// SCK as an undirected DOT graph; nodes are labelled by necklace, edges by
/// the move index of their witness.
pub fn write_sck_dot(out: &mut dyn Write, g: &SckGraph) -> io::Result<()> {
    writeln!(out, "graph sck {{")?;
    for c in g.catalog.iter() {
        writeln!(out, "  \"{}\" [label=\"{}\\norder {}\"];", c.necklace, c.necklace, c.order)?;
    }
    for e in &g.edges {
        writeln!(
            out,
            "  \"{}\" -- \"{}\" [label=\"{}\"];",
            e.witness.from_class.necklace, e.witness.to_class.necklace, e.witness.move_index
        )?;
    }
    writeln!(out, "}}")
}

pub fn write_tree_dot(out: &mut dyn Write, g: &SckGraph, t: &SpanningTree) -> io::Result<()> {
    writeln!(out, "digraph tree {{")?;
    for &c in &t.order {
        let class = g.class(c);
        writeln!(out, "  \"{}\" [label=\"{}\\nlevel {}\"];", class.necklace, class.necklace, t.level[c])?;
    }
    for &c in &t.order {
        if let Some((b, e)) = t.parent[c] {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                g.class(b).necklace,
                g.class(c).necklace,
                g.edges[e].witness.move_index
            )?;
        }
    }
    writeln!(out, "}}")
}

/// Reads a cycle file: one vertex per non-blank line, either `{"v":[...]}`
/// or `{1,3,5}`. Entries are returned raw so the verifier can report on
/// malformed or unstable ones.
pub fn parse_cycle(text: &str) -> Result<Vec<Vec<u32>>> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(no, line)| {
            let line = line.trim();
            if line.starts_with("{\"") {
                serde_json::from_str::<VertexRecord>(line)
                    .map(|r| r.v)
                    .map_err(|e| Error::MalformedSet(format!("line {}: {e}", no + 1)))
            } else {
                let inner = line
                    .strip_prefix('{')
                    .and_then(|l| l.strip_suffix('}'))
                    .ok_or_else(|| Error::MalformedSet(format!("line {}: expected {{a,b,...}}", no + 1)))?;
                vertex_list(inner)
            }
        })
        .collect()
}
