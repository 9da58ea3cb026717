use std::fmt::Write;

use patience_core::column_reading;
use patience_core::shiftgraph::ShiftGraph;

/// Undirected DOT graph, one node per tableau labelled by its column
/// reading. Loops are left out.
pub fn graph_to_dot(g: &ShiftGraph) -> String {
    let mut out = String::from("graph component {\n");
    for (i, t) in g.vertices().iter().enumerate() {
        let label = column_reading(t).to_string();
        let label = if label.is_empty() { "ε".to_owned() } else { label };
        writeln!(out, "  v{i} [label=\"{label}\"];").unwrap();
    }
    for &(a, b) in g.edges() {
        writeln!(out, "  v{a} -- v{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
