//! Graphviz output of Hasse diagrams.
//!
//! Nodes are laid out bottom-up with one rank per height. In a combined
//! crosscut poset, Hasse edges from an up-side node to a down-side node are
//! drawn dashed and red.

use std::fmt::Write as _;

use crate::crosscut::{CrosscutPoset, Side};
use crate::poset::Poset;

#[derive(Clone, Debug)]
pub struct DotOptions {
    pub graph_name: String,
    pub rank_by_height: bool,
}

impl Default for DotOptions {
    fn default() -> Self {
        DotOptions {
            graph_name: "poset".into(),
            rank_by_height: true,
        }
    }
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

fn emit(
    p: &Poset,
    opts: &DotOptions,
    node_attrs: impl Fn(usize) -> String,
    edge_attrs: impl Fn(usize, usize) -> String,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", escape(&opts.graph_name));
    out.push_str("  rankdir=BT;\n  edge [arrowhead=none];\n");
    for x in p.elements() {
        let _ = writeln!(out, "  n{x} [label=\"{}\"{}];", escape(p.label(x)), node_attrs(x));
    }
    if opts.rank_by_height {
        let heights = p.heights();
        let top = heights.iter().copied().max().unwrap_or(0);
        for h in 0..=top {
            let level: Vec<String> = p
                .elements()
                .filter(|&x| heights[x] == h)
                .map(|x| format!("n{x};"))
                .collect();
            if !level.is_empty() {
                let _ = writeln!(out, "  {{ rank=same; {} }}", level.join(" "));
            }
        }
    }
    for (x, y) in p.covers() {
        let _ = writeln!(out, "  n{x} -> n{y}{};", edge_attrs(x, y));
    }
    out.push_str("}\n");
    out
}

pub fn poset_dot(p: &Poset, opts: &DotOptions) -> String {
    emit(p, opts, |_| String::new(), |_, _| String::new())
}

pub fn crosscut_dot(c: &CrosscutPoset, opts: &DotOptions) -> String {
    emit(
        c.order(),
        opts,
        |i| match c.side(i) {
            Side::Down => ", shape=box".into(),
            Side::Up => ", shape=box, style=rounded".into(),
        },
        |i, j| {
            if c.side(i) != c.side(j) {
                " [style=dashed, color=red]".into()
            } else {
                String::new()
            }
        },
    )
}
