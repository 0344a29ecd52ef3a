//! DOT renderings of graphs, cover windows, and decompositions. Arrows
//! point from source vertex to range vertex, colors are drawn from a fixed
//! palette indexed by edge color.

use crate::decompose::DecompositionReport;
use crate::desourcify::DesWindow;
use crate::skeleton::KGraph;

/// Edge colors by graph color index; indices beyond the palette wrap.
pub const PALETTE: [&str; 6] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn edge_line(g: &KGraph, e: usize, indent: &str) -> String {
    let edge = g.edge(e);
    format!(
        "{indent}{} -> {} [label={}, color={}];\n",
        quote(g.vertex_id(edge.source)),
        quote(g.vertex_id(edge.range)),
        quote(&edge.id),
        quote(PALETTE[edge.color % PALETTE.len()]),
    )
}

/// Renders the graph: one node per vertex, one arrow per edge.
pub fn graph_dot(g: &KGraph) -> String {
    let mut out = String::from("digraph kgraph {\n  rankdir=LR;\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {};\n", quote(g.vertex_id(v))));
    }
    for e in 0..g.edge_count() {
        out.push_str(&edge_line(g, e, "  "));
    }
    out.push_str("}\n");
    out
}

/// Renders a materialized cover window. Interior vertices are drawn solid,
/// truncation-boundary vertices dashed; labels carry the base vertex plus
/// its excess.
pub fn window_dot(win: &DesWindow) -> String {
    let g = &win.graph;
    let mut out = String::from("digraph cover_window {\n  rankdir=LR;\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        let style = if win.is_interior(v) {
            "solid"
        } else {
            "dashed"
        };
        out.push_str(&format!(
            "  {} [style={}];\n",
            quote(g.vertex_id(v)),
            style
        ));
    }
    for e in 0..g.edge_count() {
        out.push_str(&edge_line(g, e, "  "));
    }
    out.push_str("}\n");
    out
}

/// Renders a decomposition: one cluster per summand component, remaining
/// vertices outside any cluster, all edges of the original graph.
pub fn decomposition_dot(g: &KGraph, report: &DecompositionReport) -> String {
    let mut out =
        String::from("digraph decomposition {\n  rankdir=LR;\n  node [shape=circle];\n");
    let mut assigned = vec![false; g.vertex_count()];
    for (i, comp) in report.components.iter().enumerate() {
        out.push_str(&format!(
            "  subgraph cluster_{i} {{\n    label=\"component {}\";\n",
            i + 1
        ));
        for cv in 0..comp.vertex_count() {
            let label = comp.vertex_id(cv);
            if let Ok(v) = g.vertex_idx(label) {
                if !assigned[v] {
                    assigned[v] = true;
                    out.push_str(&format!("    {};\n", quote(label)));
                }
            }
        }
        out.push_str("  }\n");
    }
    for v in 0..g.vertex_count() {
        if !assigned[v] {
            out.push_str(&format!("  {};\n", quote(g.vertex_id(v))));
        }
    }
    for e in 0..g.edge_count() {
        out.push_str(&edge_line(g, e, "  "));
    }
    out.push_str("}\n");
    out
}
