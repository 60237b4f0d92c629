//! Graphviz and JSON renderings of generation trees.

use std::fmt::Write;

use serde_json::{json, Value};
use whittaker_core::compression::GenerationTree;

use crate::io::poly_to_value;

fn join(col: &[usize]) -> String {
    col.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A node is absorbed into its parent when the parent has no other child.
fn representative(tree: &GenerationTree, id: usize) -> usize {
    let nodes = tree.nodes();
    let mut cur = id;
    while let Some(p) = nodes[cur].parent {
        if nodes[p].children.len() != 1 {
            break;
        }
        cur = p;
    }
    cur
}

/// Deterministic DOT digraph. Node labels show the left column, the fixed
/// right column and the node coefficient; skipped transpositions are drawn
/// as `~(p<q)`. With `collapse_unary`, chains of single-child nodes are
/// merged into their topmost node.
pub fn tree_to_dot(tree: &GenerationTree, collapse_unary: bool) -> String {
    let mut out =
        String::from("digraph generation_tree {\n  node [shape=box, fontname=\"monospace\"];\n");
    let right = join(tree.right());
    let keep = |id: usize| !collapse_unary || representative(tree, id) == id;
    for (id, node) in tree.nodes().iter().enumerate() {
        if keep(id) {
            let label = format!(
                "{} | {}\\n{}",
                join(&node.left),
                right,
                escape(&node.coefficient.to_string())
            );
            writeln!(out, "  n{id} [label=\"{label}\"];").unwrap();
        }
    }
    for (id, node) in tree.nodes().iter().enumerate() {
        if collapse_unary && node.children.len() == 1 {
            continue;
        }
        let from = if collapse_unary {
            representative(tree, id)
        } else {
            id
        };
        for e in &node.children {
            let mark = if e.applied { "" } else { "~" };
            writeln!(
                out,
                "  n{from} -> n{} [label=\"{mark}{}\"];",
                e.child, e.transposition
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

pub fn tree_to_value(tree: &GenerationTree) -> Value {
    let nodes: Vec<Value> = tree
        .nodes()
        .iter()
        .enumerate()
        .map(|(id, node)| {
            let children: Vec<Value> = node
                .children
                .iter()
                .map(|e| json!({ "child": e.child, "edge": e.transposition.to_string(), "applied": e.applied }))
                .collect();
            json!({
                "node": id,
                "columns": tree.columns_at(node),
                "coef": poly_to_value(&node.coefficient),
                "depth": node.depth,
                "children": children,
            })
        })
        .collect();
    json!({ "n": tree.n(), "beta": tree.beta().to_string(), "nodes": nodes })
}

pub fn tree_to_json(tree: &GenerationTree) -> String {
    tree_to_value(tree).to_string()
}
