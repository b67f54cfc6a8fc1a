//! DOT (Graphviz) emitters. All output is deterministic for identical
//! inputs.

use std::fmt::Write;

use crate::action::ActionPoset;
use crate::cat::FiniteCategory;
use crate::greens::DClassPreorder;
use crate::labeled::LabeledPreorder;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram of the D-class order. Each node shows the class id,
/// its size and its regularity flag.
pub fn dclass_hasse(p: &DClassPreorder) -> String {
    let mut out = String::from("digraph dclasses {\n  rankdir=BT;\n  node [shape=box];\n");
    for (c, cls) in p.classes.iter().enumerate() {
        let reg = if p.regular[c] { "regular" } else { "null" };
        let _ = writeln!(
            out,
            "  d{c} [label=\"D{c} (size {}, {})\"];",
            cls.len(),
            reg
        );
    }
    for (a, b) in p.order.covers() {
        let _ = writeln!(out, "  d{a} -> d{b};");
    }
    out.push_str("}\n");
    out
}

/// A category as a graph: objects as nodes, hom-set cardinalities as
/// edge labels (self-homs included as loops).
pub fn category(c: &FiniteCategory) -> String {
    let mut out = String::from("digraph category {\n  node [shape=circle];\n");
    for ob in c.objects() {
        let _ = writeln!(out, "  o{ob} [label=\"{}\"];", escape(c.object_name(ob)));
    }
    for from in c.objects() {
        for to in c.objects() {
            let k = c.hom(from, to).len();
            if k > 0 {
                let _ = writeln!(out, "  o{from} -> o{to} [label=\"{k}\"];");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the poset of an action; nodes show the cyclic set.
pub fn action_poset(p: &ActionPoset) -> String {
    let mut out = String::from("digraph action_poset {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, set) in p.cyclic_sets.iter().enumerate() {
        let states = set
            .iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "  p{i} [label=\"{{{states}}}\"];");
    }
    for (a, b) in p.order.covers() {
        let _ = writeln!(out, "  p{a} -> p{b};");
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of a labeled preorder; labels rendered `ε/|G|` or
/// `ε/|G|/r` when a rank is present.
pub fn labeled_preorder(p: &LabeledPreorder) -> String {
    let mut out = String::from("digraph labeled {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, label) in p.labels.iter().enumerate() {
        let eps = if label.regular { 1 } else { 0 };
        let text = match label.rank {
            Some(r) => format!("{eps}/{}/{r}", label.group.order()),
            None => format!("{eps}/{}", label.group.order()),
        };
        let _ = writeln!(out, "  n{i} [label=\"{text}\"];");
    }
    for (a, b) in p.order.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::build_karoubi;
    use crate::fixtures;
    use crate::greens::d_class_preorder;
    use crate::labeled::labeled_dq;

    #[test]
    fn dclass_hasse_of_t2_has_one_cover() {
        let dot = dclass_hasse(&d_class_preorder(&fixtures::t2()));
        assert!(dot.contains("d1 -> d0;"));
        assert!(dot.contains("regular"));
    }

    #[test]
    fn category_dot_lists_hom_counts() {
        let dot = category(&build_karoubi(&fixtures::t2()));
        assert!(dot.contains("o0 -> o0 [label=\"4\"];"));
    }

    #[test]
    fn labeled_dot_renders_ranks() {
        let lp = labeled_dq(&fixtures::t2(), &fixtures::t2_point_action());
        let dot = labeled_preorder(&lp);
        assert!(dot.contains("1/2/2"));
        assert!(dot.contains("1/1/1"));
    }

    #[test]
    fn emitters_are_deterministic() {
        let p = crate::action::action_poset(&fixtures::u1(), &fixtures::u1_chain_action());
        assert_eq!(action_poset(&p), action_poset(&p));
    }
}
