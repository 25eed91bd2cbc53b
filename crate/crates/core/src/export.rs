//! DOT and JSON renderings of Hasse diagrams and nested descent graphs.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::orders::{EdgeKind, HasseDiagram, OrderKind};
use crate::perm::SignedPermutation;
use crate::structure::NestedDescentGraph;

/// Line style of each edge kind: ◁_A solid, ◁_B and the other strong moves
/// dashed, the three-letter moves dotted.
pub fn edge_style(kind: EdgeKind) -> &'static str {
    match kind {
        EdgeKind::A => "solid",
        EdgeKind::B | EdgeKind::SB => "dashed",
        EdgeKind::BB => "dotted",
    }
}

/// Arrows run from lower to upper elements.
pub fn hasse_dot(h: &HasseDiagram) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", h.order).unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for (i, w) in h.elements.iter().enumerate() {
        writeln!(out, "  {i} [label=\"{w}\"];").unwrap();
    }
    for &(i, j, k) in &h.covers {
        writeln!(out, "  {i} -> {j} [style={}, kind={k}];", edge_style(k)).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn hasse_json(h: &HasseDiagram) -> Value {
    json!({
        "order": h.order.name(),
        "elements": h.elements.iter().map(|w| w.window()).collect::<Vec<_>>(),
        "covers": h.covers.iter().map(|&(i, j, k)| json!([i, j, k.name()])).collect::<Vec<_>>(),
    })
}

fn bad(what: &str) -> Error {
    Error::InvalidArgument(format!("malformed Hasse JSON: {what}"))
}

/// Inverse of [`hasse_json`].
pub fn hasse_from_json(v: &Value) -> Result<HasseDiagram> {
    let order: OrderKind = v["order"].as_str().ok_or_else(|| bad("order"))?.parse()?;
    let elements = v["elements"]
        .as_array()
        .ok_or_else(|| bad("elements"))?
        .iter()
        .map(|e| {
            let window: Vec<i32> = serde_json::from_value(e.clone()).map_err(|_| bad("element"))?;
            SignedPermutation::from_window(window)
        })
        .collect::<Result<Vec<_>>>()?;
    let covers = v["covers"]
        .as_array()
        .ok_or_else(|| bad("covers"))?
        .iter()
        .map(|c| {
            let idx = |k: usize| {
                c[k].as_u64()
                    .map(|x| x as usize)
                    .filter(|&x| x < elements.len())
                    .ok_or_else(|| bad("cover index"))
            };
            let kind = match c[2].as_str() {
                Some("A") => EdgeKind::A,
                Some("B") => EdgeKind::B,
                Some("SB") => EdgeKind::SB,
                Some("BB") => EdgeKind::BB,
                _ => return Err(bad("cover kind")),
            };
            Ok((idx(0)?, idx(1)?, kind))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HasseDiagram {
        order,
        elements,
        covers,
    })
}

/// A list of windows.
pub fn permutations_json(ws: &[SignedPermutation]) -> Value {
    json!(ws.iter().map(|w| w.window()).collect::<Vec<_>>())
}

/// Edges point from a word to the subword left after deleting the labelled
/// descent `(b, a)`.
pub fn nested_dot(g: &NestedDescentGraph) -> String {
    let mut out = String::from("digraph nested {\n  node [shape=plaintext];\n");
    for (i, w) in g.vertices.iter().enumerate() {
        let text: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        writeln!(out, "  {i} [label=\"{}\"];", text.join(",")).unwrap();
    }
    for &(s, t, (b, a)) in &g.edges {
        writeln!(out, "  {s} -> {t} [label=\"{b},{a}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn nested_json(g: &NestedDescentGraph) -> Value {
    json!({
        "vertices": g.vertices,
        "edges": g.edges.iter().map(|&(s, t, (b, a))| json!([s, t, [b, a]])).collect::<Vec<_>>(),
    })
}
