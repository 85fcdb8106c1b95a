//! Deterministic graph exports: edge list, DOT and JSON.
//!
//! Vertices are labelled like `{-1,2,4}`. Edges are written as `(u, v)` with
//! `u < v` in vertex-table order, sorted lexicographically.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::KneserBGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dot,
    Json,
}

/// One line per edge, `"u_label v_label\n"`.
pub fn edge_list(g: &KneserBGraph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.vertex(u), g.vertex(v));
    }
    out
}

pub fn dot(g: &KneserBGraph) -> String {
    let p = g.params();
    let mut out = format!("graph H_B_{}_{} {{\n", p.n(), p.k());
    for (i, v) in g.vertices().iter().enumerate() {
        let _ = writeln!(out, "  {i} [label=\"{v}\", part={}];", g.part(i).index());
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub index: usize,
    pub label: String,
    pub part: u8,
    pub mag: u32,
    pub neg: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: u32,
    pub k: u32,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub vertices: Vec<VertexRecord>,
    pub adjacency: Vec<Vec<u32>>,
}

impl GraphDocument {
    pub fn from_graph(g: &KneserBGraph) -> Self {
        let p = g.params();
        Self {
            n: p.n(),
            k: p.k(),
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            vertices: g
                .vertices()
                .iter()
                .enumerate()
                .map(|(index, v)| VertexRecord {
                    index,
                    label: v.to_string(),
                    part: g.part(index).index(),
                    mag: v.magnitude_set(),
                    neg: v.neg(),
                })
                .collect(),
            adjacency: (0..g.vertex_count())
                .map(|v| g.neighbors(v).to_vec())
                .collect(),
        }
    }
}

pub fn json(g: &KneserBGraph) -> String {
    let mut s = serde_json::to_string_pretty(&GraphDocument::from_graph(g))
        .expect("graph document serializes");
    s.push('\n');
    s
}

pub fn render(g: &KneserBGraph, format: Format) -> String {
    match format {
        Format::EdgeList => edge_list(g),
        Format::Dot => dot(g),
        Format::Json => json(g),
    }
}
