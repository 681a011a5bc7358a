//! Graphviz rendering of a system digraph with its placement.

use std::fmt::Write as _;

use structio_core::{StateDigraph, StructuralInputMatrix};

/// Renders states `x0..`, highlighting `selected`. Columns of `inputs`
/// become input nodes `u0..` with edges into their states; with `dual` they
/// become sensor nodes `y0..` fed by their states.
pub fn render(
    g: &StateDigraph,
    selected: &[usize],
    inputs: Option<&StructuralInputMatrix>,
    dual: bool,
) -> String {
    let mut out = String::from("digraph system {\n  rankdir=LR;\n  node [shape=circle];\n");
    for i in 0..g.n() {
        if selected.contains(&i) {
            let _ = writeln!(out, "  x{i} [style=filled, fillcolor=lightblue];");
        } else {
            let _ = writeln!(out, "  x{i};");
        }
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  x{a} -> x{b};");
    }
    if let Some(b) = inputs {
        let prefix = if dual { 'y' } else { 'u' };
        for (k, col) in b.columns().iter().enumerate() {
            let _ = writeln!(out, "  {prefix}{k} [shape=box];");
            for &i in col {
                if dual {
                    let _ = writeln!(out, "  x{i} -> y{k} [style=dashed];");
                } else {
                    let _ = writeln!(out, "  u{k} -> x{i} [style=dashed];");
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_inputs_and_sensors() {
        let g = StateDigraph::from_edges(2, [(0, 1)]).unwrap();
        let b = StructuralInputMatrix::dedicated(2, &[0]).unwrap();
        let dot = render(&g, &[0], Some(&b), false);
        assert!(dot.contains("x0 -> x1;"));
        assert!(dot.contains("u0 -> x0"));
        assert!(dot.contains("x0 [style=filled"));
        assert!(render(&g, &[0], Some(&b), true).contains("x0 -> y0"));
    }
}
