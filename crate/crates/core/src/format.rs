//! Line-based text format for signed graphs.
//!
//! ```text
//! # comment
//! vertices: v w
//! edges: v -> w +inf
//! edges: w -> v +2 -1
//! edges: w -> w +1
//! ```
//!
//! `vertices:` lines declare vertices in order (there may be several).
//! Each `edges:` line adds `+p` positively and `-n` negatively signed edges
//! from the source to the range; counts are naturals or `inf`, either clause
//! may be omitted, and repeated pairs accumulate. Vertices must be declared
//! before an edge line uses them.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Count, SignedGraph, SignedMultiplicity, VertexId};

pub fn parse_graph(text: &str) -> Result<SignedGraph> {
    let mut vertices: Vec<VertexId> = Vec::new();
    let mut declared: HashSet<String> = HashSet::new();
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(line_no, "expected `vertices:` or `edges:`"))?;
        match keyword.trim() {
            "vertices" => {
                let names: Vec<&str> = rest.split_whitespace().collect();
                if names.is_empty() {
                    return Err(Error::parse(line_no, "`vertices:` needs at least one name"));
                }
                for name in names {
                    let v = VertexId::new(name).map_err(|e| Error::parse(line_no, e.to_string()))?;
                    if !declared.insert(name.to_string()) {
                        return Err(Error::parse(line_no, format!("duplicate vertex `{name}`")));
                    }
                    vertices.push(v);
                }
            }
            "edges" => {
                let (src, dst, mult) = parse_edge(rest, line_no)?;
                for v in [&src, &dst] {
                    if !declared.contains(v.as_str()) {
                        return Err(Error::parse(line_no, format!("undeclared vertex `{v}`")));
                    }
                }
                edges.push(((src, dst), mult));
            }
            other => return Err(Error::parse(line_no, format!("unknown keyword `{other}`"))),
        }
    }
    SignedGraph::new(vertices, edges)
}

fn parse_edge(rest: &str, line_no: usize) -> Result<(VertexId, VertexId, SignedMultiplicity)> {
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    let [src, arrow, dst, clauses @ ..] = tokens.as_slice() else {
        return Err(Error::parse(line_no, "expected `<src> -> <dst> [+p] [-n]`"));
    };
    if *arrow != "->" {
        return Err(Error::parse(line_no, format!("expected `->`, found `{arrow}`")));
    }
    let src = VertexId::new(*src).map_err(|e| Error::parse(line_no, e.to_string()))?;
    let dst = VertexId::new(*dst).map_err(|e| Error::parse(line_no, e.to_string()))?;

    let mut pos: Option<Count> = None;
    let mut neg: Option<Count> = None;
    for clause in clauses {
        let (slot, digits) = if let Some(d) = clause.strip_prefix('+') {
            (&mut pos, d)
        } else if let Some(d) = clause.strip_prefix('-') {
            (&mut neg, d)
        } else {
            return Err(Error::parse(line_no, format!("expected `+<count>` or `-<count>`, found `{clause}`")));
        };
        if slot.is_some() {
            return Err(Error::parse(line_no, format!("repeated sign clause `{clause}`")));
        }
        *slot = Some(digits.parse::<Count>().map_err(|e| Error::parse(line_no, e))?);
    }
    Ok((src, dst, SignedMultiplicity::new(pos.unwrap_or(Count::ZERO), neg.unwrap_or(Count::ZERO))))
}

/// Canonical text for a graph; [`parse_graph`] inverts it.
pub fn serialize_graph(g: &SignedGraph) -> String {
    let mut out = String::new();
    if !g.vertices().is_empty() {
        let names: Vec<&str> = g.vertices().iter().map(VertexId::as_str).collect();
        out.push_str("vertices: ");
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    for (s, d, m) in g.edges_in_declaration_order() {
        out.push_str(&format!("edges: {s} -> {d}"));
        if !m.pos.is_zero() {
            out.push_str(&format!(" +{}", m.pos));
        }
        if !m.neg.is_zero() {
            out.push_str(&format!(" -{}", m.neg));
        }
        out.push('\n');
    }
    out
}
