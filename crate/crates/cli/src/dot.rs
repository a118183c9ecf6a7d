//! Graphviz output.

use std::fmt::Write as _;

use radzero_core::{BratteliDiagram, ValuedQuiver};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per vertex (labelled with its weight when not 1) and one edge
/// per valued arrow, labelled `(a,b)`.
pub fn quiver_to_dot(name: &str, q: &ValuedQuiver) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(name));
    for (i, v) in q.vertices().iter().enumerate() {
        let f = q.weight(i);
        if f == 1 {
            let _ = writeln!(out, "  {};", quote(v.as_str()));
        } else {
            let _ = writeln!(out, "  {} [label={}];", quote(v.as_str()), quote(&format!("{v} (f={f})")));
        }
    }
    for (s, t, v) in q.arrows() {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(q.vertex(s).as_str()),
            quote(q.vertex(t).as_str()),
            quote(&v.to_string())
        );
    }
    out.push_str("}\n");
    out
}

/// Levels as ranked rows; node `L{i}_{v}` is labelled `v: size`.
pub fn bratteli_to_dot(name: &str, q: &ValuedQuiver, d: &BratteliDiagram) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(name));
    out.push_str("  rankdir=TB;\n");
    let node = |i: usize, v: usize| quote(&format!("L{i}_{}", q.vertex(v)));
    for (i, level) in d.levels.iter().enumerate() {
        let _ = write!(out, "  {{ rank=same;");
        for (v, c) in level {
            let _ = write!(out, " {} [label={}];", node(i, *v), quote(&format!("{}: {c}", q.vertex(*v))));
        }
        out.push_str(" }\n");
    }
    for (i, edges) in d.edges.iter().enumerate() {
        for &(l, j, a) in edges {
            let _ = writeln!(out, "  {} -> {} [label={}];", node(i, l), node(i + 1, j), quote(&a.to_string()));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use radzero_core::bratteli;
    use radzero_core::constructions::{gen_cycle, gen_loops};

    #[test]
    fn cycle_dot() {
        let dot = quiver_to_dot("C3", &gen_cycle(3));
        assert_eq!(dot.matches("->").count(), 3);
        assert_eq!(dot.matches("label=\"(1,1)\"").count(), 3);
        assert_eq!(dot.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("->")).count(), 3);
    }

    #[test]
    fn bratteli_dot_is_layered() {
        let q = gen_loops(2);
        let dot = bratteli_to_dot("L", &q, &bratteli(&q, 3).unwrap());
        assert_eq!(dot.matches("rank=same").count(), 4);
        assert!(dot.contains("\"1: 8\""));
        assert_eq!(dot.matches("->").count(), 3);
    }
}
