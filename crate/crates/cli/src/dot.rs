//! Graphviz export with an optional witness overlay: forward steps bold,
//! backward steps dashed, other arcs grey.

use std::collections::HashMap;
use std::fmt::Write as _;

use hamdisc::{Digraph, Direction, OrientedWalk};

pub fn to_dot(d: &Digraph, witness: Option<&OrientedWalk>) -> String {
    // arc -> direction of the witness step that uses it
    let mut used: HashMap<(usize, usize), Direction> = HashMap::new();
    if let Some(w) = witness {
        for ((u, v), &dir) in w.steps().zip(w.directions()) {
            let arc = match dir {
                Direction::Forward => (u, v),
                Direction::Backward => (v, u),
            };
            used.insert(arc, dir);
        }
    }
    let mut out = String::from("digraph G {\n");
    for v in 0..d.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in d.arcs() {
        let style = match (witness.is_some(), used.get(&(u, v))) {
            (_, Some(Direction::Forward)) => " [style=bold, color=blue]",
            (_, Some(Direction::Backward)) => " [style=dashed, color=red]",
            (true, None) => " [color=gray]",
            (false, None) => "",
        };
        writeln!(out, "  {u} -> {v}{style};").unwrap();
    }
    out.push_str("}\n");
    out
}
