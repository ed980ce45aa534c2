//! Graphviz rendering. Output depends only on the stored layout, so equal
//! diagrams render identically.

use std::fmt::Write;

use super::{RibbonDiagram, Symmetry};

/// Leaves are boxes named by label, internal vertices are circles `v<k>`.
/// Edge ends at internal vertices carry their rotation slot as port labels.
/// For a valid diagram each edge is labelled `+` or `-`: the side of its tail
/// dart that carries the solid segment (the other side is dashed). Twisted
/// edges are red and their label ends in `~`.
pub fn to_dot(d: &RibbonDiagram) -> String {
    let symmetry = if d.has_twists() { Symmetry::Orthogonal } else { Symmetry::Unitary };
    let solid = d.analyze(symmetry).ok().map(|a| a.solid_flag);
    let mut out = String::from("graph diagram {\n");
    for p in 0..d.leaf_count() {
        let _ = writeln!(out, "  l{p} [shape=box, label=\"{}\"];", d.leaf_label(p));
    }
    for k in 0..d.internal_vertex_count() {
        let _ = writeln!(out, "  v{k} [shape=circle, label=\"v{k}\"];");
    }
    let end = |x: usize| -> (String, Option<usize>) {
        if d.is_leaf_dart(x) {
            (format!("l{x}"), None)
        } else {
            let k = d.vertex_of(x);
            (format!("v{k}"), Some(x - d.starts[k]))
        }
    };
    for x in 0..d.dart_count() {
        let y = d.mate[x];
        if y < x {
            continue;
        }
        let ((a, sa), (b, sb)) = (end(x), end(y));
        let mut attrs = Vec::new();
        let mut label = match &solid {
            Some(s) if s[2 * x] => "+".to_string(),
            Some(_) => "-".to_string(),
            None => String::new(),
        };
        if d.twisted[x] {
            label.push('~');
            attrs.push("color=red".to_string());
        }
        if !label.is_empty() {
            attrs.insert(0, format!("label=\"{label}\""));
        }
        if let Some(s) = sa {
            attrs.push(format!("taillabel=\"{s}\""));
        }
        if let Some(s) = sb {
            attrs.push(format!("headlabel=\"{s}\""));
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {a} -- {b};");
        } else {
            let _ = writeln!(out, "  {a} -- {b} [{}];", attrs.join(", "));
        }
    }
    out.push_str("}\n");
    out
}
