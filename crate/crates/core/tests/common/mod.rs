//! Hasse diagrams transcribed from the worked figures. Arrows point from the
//! lower element to the upper one.
#![allow(dead_code)]

pub mod criteria;

use std::collections::{BTreeMap, BTreeSet};

use atomkit::{EdgeKind, HasseDiagram, SignedPermutation};

pub const INTRO_NODES: &[(&str, &[i32])] = &[
    ("0", &[1, -2, 3, -4]),
    ("1a", &[1, 3, -4, -2]),
    ("1b", &[-2, -1, 3, -4]),
    ("1c", &[1, -4, 2, -3]),
    ("2a", &[3, -4, 1, -2]),
    ("2b", &[-2, 3, -4, -1]),
    ("2c", &[-4, -1, 2, -3]),
    ("3a", &[-4, -3, 1, -2]),
    ("3b", &[3, -4, -2, -1]),
    ("3c", &[-4, 2, -3, -1]),
    ("4a", &[-4, -3, -2, -1]),
];

pub const INTRO_EDGES: &[(&str, &str, &str)] = &[
    ("4a", "3b", "dashed"),
    ("4a", "3c", "dashed"),
    ("3a", "2a", "dashed"),
    ("3b", "2b", "solid"),
    ("3c", "2c", "solid"),
    ("2a", "1a", "solid"),
    ("2b", "1b", "solid"),
    ("2c", "1c", "dashed"),
    ("1a", "0", "solid"),
    ("1b", "0", "dashed"),
];

pub const FIG_LLB_NODES: &[(&str, &[i32])] = &[
    ("0", &[-1, 2, -3, 4, -5]),
    ("1a", &[-1, 2, 4, -5, -3]),
    ("1b", &[2, -3, -1, 4, -5]),
    ("1c", &[-3, 1, -2, 4, -5]),
    ("1d", &[-1, 2, -5, 3, -4]),
    ("2a", &[-1, 4, -5, 2, -3]),
    ("2b", &[2, -3, 4, -5, -1]),
    ("2c", &[-3, -2, -1, 4, -5]),
    ("2d", &[-3, 1, 4, -5, -2]),
    ("2e", &[-5, 1, -2, 3, -4]),
    ("2f", &[2, -5, -1, 3, -4]),
    ("3a", &[-5, 1, -4, 2, -3]),
    ("3b", &[4, -5, -1, 2, -3]),
    ("3c", &[2, 4, -5, -3, -1]),
    ("3d", &[-3, -2, 4, -5, -1]),
    ("3e", &[-3, 4, -5, 1, -2]),
    ("3f", &[-5, 1, 3, -4, -2]),
    ("3g", &[-5, -2, -1, 3, -4]),
    ("3h", &[2, -5, 3, -4, -1]),
    ("4a", &[-5, -4, -1, 2, -3]),
    ("4b", &[4, -5, 2, -3, -1]),
    ("4c", &[-3, 4, -5, -2, -1]),
    ("4d", &[4, -5, -3, 1, -2]),
    ("4e", &[-5, 3, -4, 1, -2]),
    ("4f", &[-5, -2, 3, -4, -1]),
    ("5a", &[-5, -4, 2, -3, -1]),
    ("5b", &[4, -5, -3, -2, -1]),
    ("5c", &[-5, -4, -3, 1, -2]),
    ("5d", &[-5, 3, -4, -2, -1]),
    ("6", &[-5, -4, -3, -2, -1]),
];

pub const FIG_LLB_EDGES: &[(&str, &str, &str)] = &[
    ("6", "5a", "dotted"),
    ("6", "5b", "dashed"),
    ("6", "5c", "dotted"),
    ("6", "5d", "dashed"),
    ("5a", "4a", "solid"),
    ("5a", "4b", "dashed"),
    ("5b", "4c", "solid"),
    ("5b", "4b", "dotted"),
    ("5b", "4d", "dotted"),
    ("5c", "4d", "dashed"),
    ("5c", "4e", "dashed"),
    ("5d", "4e", "dotted"),
    ("5d", "4f", "solid"),
    ("4a", "3a", "dashed"),
    ("4a", "3b", "dashed"),
    ("4b", "3b", "solid"),
    ("4b", "3c", "solid"),
    ("4c", "3d", "solid"),
    ("4c", "3e", "dotted"),
    ("4d", "3e", "solid"),
    ("4e", "3f", "solid"),
    ("4f", "3g", "solid"),
    ("4f", "3h", "dashed"),
    ("3b", "2a", "solid"),
    ("3c", "2b", "solid"),
    ("3d", "2b", "dashed"),
    ("3d", "2c", "solid"),
    ("3e", "2d", "solid"),
    ("3f", "2e", "solid"),
    ("3g", "2e", "dashed"),
    ("3g", "2f", "dashed"),
    ("3h", "2f", "solid"),
    ("2a", "1a", "solid"),
    ("2b", "1b", "solid"),
    ("2c", "1b", "dashed"),
    ("2c", "1c", "dashed"),
    ("2d", "1c", "solid"),
    ("2f", "1d", "solid"),
    ("1a", "0", "solid"),
    ("1b", "0", "solid"),
];

pub const FIG_LLLB_NODES: &[(&str, &[i32])] = &[
    ("0", &[1, -2, 3, -4]),
    ("1a", &[1, 3, -4, -2]),
    ("1b", &[-2, -1, 3, -4]),
    ("1c", &[1, -4, 2, -3]),
    ("2a", &[3, -4, 1, -2]),
    ("2b", &[-2, 3, -4, -1]),
    ("2c", &[-4, -1, 2, -3]),
    ("3a", &[-4, -3, 1, -2]),
    ("3b", &[3, -4, -2, -1]),
    ("3c", &[-4, 2, -3, -1]),
    ("4a", &[-4, -3, -2, -1]),
];

pub const FIG_LLLB_EDGES: &[(&str, &str, &str)] = &[
    ("4a", "3a", "dashed"),
    ("4a", "3b", "dashed"),
    ("4a", "3c", "dashed"),
    ("3a", "2a", "dashed"),
    ("3b", "2a", "dashed"),
    ("3b", "2b", "solid"),
    ("3c", "2c", "solid"),
    ("3c", "2b", "dotted"),
    ("2a", "1a", "solid"),
    ("2b", "1b", "solid"),
    ("2c", "1c", "dashed"),
    ("2c", "1b", "dotted"),
    ("1a", "0", "solid"),
    ("1b", "0", "dashed"),
    ("1c", "0", "dotted"),
];

pub type EdgeSet = BTreeSet<(Vec<i32>, Vec<i32>, String)>;

/// Edges of a transcribed figure as (lower window, upper window, style).
pub fn figure_edges(nodes: &[(&str, &[i32])], edges: &[(&str, &str, &str)]) -> EdgeSet {
    let by_name: BTreeMap<&str, Vec<i32>> = nodes.iter().map(|(k, v)| (*k, v.to_vec())).collect();
    edges
        .iter()
        .map(|(a, b, s)| (by_name[a].clone(), by_name[b].clone(), s.to_string()))
        .collect()
}

pub fn figure_vertices(nodes: &[(&str, &[i32])]) -> BTreeSet<Vec<i32>> {
    nodes.iter().map(|(_, v)| v.to_vec()).collect()
}

/// Edges of a computed diagram, with edge kinds drawn in a figure's styles.
pub fn diagram_edges(h: &HasseDiagram, style: impl Fn(EdgeKind) -> &'static str) -> EdgeSet {
    h.covers
        .iter()
        .map(|&(i, j, k)| {
            (
                h.elements[i].window().to_vec(),
                h.elements[j].window().to_vec(),
                style(k).to_string(),
            )
        })
        .collect()
}

pub fn diagram_vertices(h: &HasseDiagram) -> BTreeSet<Vec<i32>> {
    h.elements.iter().map(|w| w.window().to_vec()).collect()
}

/// Styles of the `<_B` figure: solid ◁_A, dashed ◁_B.
pub fn style_lt_b(k: EdgeKind) -> &'static str {
    match k {
        EdgeKind::A => "solid",
        EdgeKind::B => "dashed",
        _ => "other",
    }
}

/// Styles of the `≪_B` figure: solid ◁_A, dashed ◁_B, dotted for the other strong moves.
pub fn style_ll_b(k: EdgeKind) -> &'static str {
    match k {
        EdgeKind::A => "solid",
        EdgeKind::B => "dashed",
        EdgeKind::SB => "dotted",
        EdgeKind::BB => "other",
    }
}

/// Styles of the `⋘_B` figure: solid ◁_A, dashed strong moves, dotted three-letter moves.
pub fn style_lll_b(k: EdgeKind) -> &'static str {
    match k {
        EdgeKind::A => "solid",
        EdgeKind::B | EdgeKind::SB => "dashed",
        EdgeKind::BB => "dotted",
    }
}

pub fn sp(s: &str) -> SignedPermutation {
    s.parse().unwrap()
}

/// Node names of the top elements drawn with no outgoing arrows in the `≪_B` figure.
pub const FIG_LLB_SINKS: &[&str] = &["0", "1c", "1d", "2e", "3a"];

pub fn node(nodes: &[(&str, &[i32])], name: &str) -> Vec<i32> {
    nodes.iter().find(|(k, _)| *k == name).unwrap().1.to_vec()
}
