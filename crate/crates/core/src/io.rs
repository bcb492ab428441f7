//! Instance serialization.
//!
//! The `.emb` text format carries one embedded graph per file:
//!
//! ```text
//! # comment
//! v <vid>: <dart> <dart> ...     cyclic rotation around the vertex
//! e <eid>: <dart> <dart> <+|->   the edge's two darts and its sign
//! ```
//!
//! The `.hemb` format is the incidence graph of an embedded hypergraph in
//! the same syntax plus `h <vid>` lines marking the star centers. Both have
//! JSON mirrors with identical fields, and all four round-trip exactly.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::embedding::{DartId, EdgeId, EdgeRec, EmbeddedGraph, Sign, VertexId};
use crate::error::{Error, Result};
use crate::hypergraph::EmbeddedHypergraph;

pub fn emit_emb(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    for v in g.vertex_ids() {
        let rot = g
            .rotation(v)
            .unwrap()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&format!("v {v}: {rot}\n"));
    }
    for e in g.edge_ids() {
        let rec = g.edge(e).unwrap();
        out.push_str(&format!(
            "e {e}: {} {} {}\n",
            rec.darts.0, rec.darts.1, rec.sign
        ));
    }
    out
}

pub fn emit_hemb(h: &EmbeddedHypergraph) -> String {
    let mut out = emit_emb(h.incidence());
    for c in h.centers() {
        out.push_str(&format!("h {c}\n"));
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

struct ParsedLines {
    rotations: BTreeMap<VertexId, Vec<DartId>>,
    edges: BTreeMap<EdgeId, EdgeRec>,
    centers: BTreeSet<VertexId>,
}

fn parse_lines(input: &str) -> Result<ParsedLines> {
    let mut rotations = BTreeMap::new();
    let mut edges = BTreeMap::new();
    let mut centers = BTreeSet::new();
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (kind, rest) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| parse_err(lineno, "expected 'v', 'e', or 'h' record"))?;
        match kind {
            "v" => {
                let (id, rot) = rest
                    .split_once(':')
                    .ok_or_else(|| parse_err(lineno, "expected 'v <id>: <darts>'"))?;
                let vid: VertexId = id
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad vertex id"))?;
                let darts = rot
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| parse_err(lineno, "bad dart id")))
                    .collect::<Result<Vec<DartId>>>()?;
                if rotations.insert(vid, darts).is_some() {
                    return Err(parse_err(lineno, format!("vertex {vid} repeated")));
                }
            }
            "e" => {
                let (id, body) = rest
                    .split_once(':')
                    .ok_or_else(|| parse_err(lineno, "expected 'e <id>: <d> <d> <sign>'"))?;
                let eid: EdgeId = id
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad edge id"))?;
                let toks: Vec<&str> = body.split_whitespace().collect();
                if toks.len() != 3 {
                    return Err(parse_err(lineno, "expected two darts and a sign"));
                }
                let d1: DartId = toks[0]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad dart id"))?;
                let d2: DartId = toks[1]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad dart id"))?;
                let sign = match toks[2] {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    other => return Err(parse_err(lineno, format!("bad sign {other:?}"))),
                };
                if edges
                    .insert(
                        eid,
                        EdgeRec {
                            darts: (d1, d2),
                            sign,
                        },
                    )
                    .is_some()
                {
                    return Err(parse_err(lineno, format!("edge {eid} repeated")));
                }
            }
            "h" => {
                let vid: VertexId = rest
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad hyperedge center id"))?;
                centers.insert(vid);
            }
            other => return Err(parse_err(lineno, format!("unknown record {other:?}"))),
        }
    }
    Ok(ParsedLines {
        rotations,
        edges,
        centers,
    })
}

pub fn parse_emb(input: &str) -> Result<EmbeddedGraph> {
    let parsed = parse_lines(input)?;
    if !parsed.centers.is_empty() {
        return Err(parse_err(0, "'h' records are only valid in .hemb files"));
    }
    EmbeddedGraph::from_parts(parsed.rotations, parsed.edges)
}

pub fn parse_hemb(input: &str) -> Result<EmbeddedHypergraph> {
    let parsed = parse_lines(input)?;
    let g = EmbeddedGraph::from_parts(parsed.rotations, parsed.edges)?;
    EmbeddedHypergraph::new(g, parsed.centers)
}

#[derive(Debug, Serialize, Deserialize)]
struct VertexJson {
    id: VertexId,
    rotation: Vec<DartId>,
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeJson {
    id: EdgeId,
    darts: [DartId; 2],
    sign: Sign,
}

#[derive(Debug, Serialize, Deserialize)]
struct EmbJson {
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    hyperedges: Vec<VertexId>,
}

fn to_json_value(g: &EmbeddedGraph, centers: Option<&BTreeSet<VertexId>>) -> EmbJson {
    EmbJson {
        vertices: g
            .vertex_ids()
            .map(|v| VertexJson {
                id: v,
                rotation: g.rotation(v).unwrap().to_vec(),
            })
            .collect(),
        edges: g
            .edge_ids()
            .map(|e| {
                let rec = g.edge(e).unwrap();
                EdgeJson {
                    id: e,
                    darts: [rec.darts.0, rec.darts.1],
                    sign: rec.sign,
                }
            })
            .collect(),
        hyperedges: centers
            .map(|c| c.iter().copied().collect())
            .unwrap_or_default(),
    }
}

pub fn emit_emb_json(g: &EmbeddedGraph) -> String {
    serde_json::to_string_pretty(&to_json_value(g, None)).expect("serializable")
}

pub fn emit_hemb_json(h: &EmbeddedHypergraph) -> String {
    serde_json::to_string_pretty(&to_json_value(h.incidence(), Some(h.centers())))
        .expect("serializable")
}

fn from_json_parts(parsed: EmbJson) -> Result<(EmbeddedGraph, BTreeSet<VertexId>)> {
    let rotations: BTreeMap<VertexId, Vec<DartId>> = parsed
        .vertices
        .into_iter()
        .map(|v| (v.id, v.rotation))
        .collect();
    let edges: BTreeMap<EdgeId, EdgeRec> = parsed
        .edges
        .into_iter()
        .map(|e| {
            (
                e.id,
                EdgeRec {
                    darts: (e.darts[0], e.darts[1]),
                    sign: e.sign,
                },
            )
        })
        .collect();
    let centers: BTreeSet<VertexId> = parsed.hyperedges.into_iter().collect();
    Ok((EmbeddedGraph::from_parts(rotations, edges)?, centers))
}

pub fn parse_emb_json(input: &str) -> Result<EmbeddedGraph> {
    let parsed: EmbJson = serde_json::from_str(input).map_err(|e| parse_err(0, e.to_string()))?;
    let (g, centers) = from_json_parts(parsed)?;
    if !centers.is_empty() {
        return Err(parse_err(0, "hyperedges present; use the .hemb parser"));
    }
    Ok(g)
}

pub fn parse_hemb_json(input: &str) -> Result<EmbeddedHypergraph> {
    let parsed: EmbJson = serde_json::from_str(input).map_err(|e| parse_err(0, e.to_string()))?;
    let (g, centers) = from_json_parts(parsed)?;
    EmbeddedHypergraph::new(g, centers)
}

/// Short content digest of the canonical text form, for report bookkeeping.
pub fn digest(g: &EmbeddedGraph) -> String {
    let hash = Sha256::digest(emit_emb(g).as_bytes());
    hex_prefix(&hash)
}

pub fn hyper_digest(h: &EmbeddedHypergraph) -> String {
    let hash = Sha256::digest(emit_hemb(h).as_bytes());
    hex_prefix(&hash)
}

fn hex_prefix(hash: &[u8]) -> String {
    hash.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::deck;

    #[test]
    fn emb_roundtrip() {
        for g in [
            deck::cycle(4),
            deck::complete4(),
            deck::k5_projective(),
            deck::bouquet(&[Sign::Minus, Sign::Plus]),
        ] {
            let text = emit_emb(&g);
            let back = parse_emb(&text).unwrap();
            assert_eq!(back, g);
            let json = emit_emb_json(&g);
            assert_eq!(parse_emb_json(&json).unwrap(), g);
        }
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# header\n\nv 0: 0 1   # rotation\ne 0: 0 1 -\n";
        let g = parse_emb(text).unwrap();
        assert_eq!(g.num_vertices(), 1);
        assert!(g.is_loop(EdgeId(0)));
        assert_eq!(g.euler_genus(), 1);
    }

    #[test]
    fn hemb_roundtrip() {
        let h = EmbeddedHypergraph::from_graph(&deck::cycle(3)).unwrap();
        let text = emit_hemb(&h);
        let back = parse_hemb(&text).unwrap();
        assert_eq!(back, h);
        let json = emit_hemb_json(&h);
        assert_eq!(parse_hemb_json(&json).unwrap(), h);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        assert!(parse_emb("x 0: 1\n").is_err());
        assert!(parse_emb("v 0: 0\n").is_err()); // dart without an edge
        assert!(parse_emb("v 0: 0 1\ne 0: 0 1 ?\n").is_err());
        assert!(parse_emb("v 0: 0 1\ne 0: 0 1 +\nh 0\n").is_err());
    }

    #[test]
    fn digests_are_stable_and_distinguish() {
        let a = digest(&deck::cycle(3));
        let b = digest(&deck::cycle(3));
        assert_eq!(a, b);
        assert_ne!(a, digest(&deck::cycle(4)));
        assert_eq!(a.len(), 16);
    }
}
