//! Deterministic result serialization.
//!
//! Extensions go out as compact JSON with sorted assumption and conclusion
//! lists; attack graphs go out as DOT with brace-set node labels, solid
//! edges for normal (or two-way) attacks and dotted edges for reverse
//! attacks. Output bytes are identical across runs for the same input.

use serde::Serialize;

use crate::attacks::{AttackEdge, AttackKind};
use crate::framework::Framework;
use crate::semantics::{Extension, SemanticsId};
use crate::set::AsmSet;

#[derive(Serialize)]
struct ExtensionsDoc {
    semantics: String,
    extensions: Vec<ExtensionDoc>,
}

#[derive(Serialize)]
struct ExtensionDoc {
    assumptions: Vec<String>,
    conclusions: Vec<String>,
}

/// Extension list as one line of JSON.
pub fn emit_extensions(fw: &Framework, sem: SemanticsId, extensions: &[Extension]) -> String {
    let doc = ExtensionsDoc {
        semantics: sem.label(),
        extensions: extensions
            .iter()
            .map(|e| ExtensionDoc {
                assumptions: e.member_names(fw),
                conclusions: e.conclusion_names(fw),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("extension documents serialize")
}

fn node_label(fw: &Framework, set: AsmSet) -> String {
    format!("{{{}}}", fw.set_names(set).join(","))
}

/// Attack graph in DOT: nodes ascending by cardinality, then label; edges
/// sorted the same way; reverse attacks dotted, everything else solid.
pub fn emit_dot(fw: &Framework, nodes: &[AsmSet], edges: &[AttackEdge]) -> String {
    let mut out = String::from("digraph attacks {\n  rankdir=LR;\n  node [shape=ellipse];\n");
    let mut sorted_nodes = nodes.to_vec();
    sorted_nodes.sort_by_key(|n| (n.len(), fw.set_names(*n)));
    for &node in &sorted_nodes {
        out.push_str(&format!("  \"{}\";\n", node_label(fw, node)));
    }
    let mut sorted_edges = edges.to_vec();
    sorted_edges.sort_by_key(|e| {
        (
            e.from.len(),
            fw.set_names(e.from),
            e.to.len(),
            fw.set_names(e.to),
        )
    });
    for edge in &sorted_edges {
        let style = match edge.kind {
            AttackKind::Reverse => "dotted",
            AttackKind::Normal | AttackKind::Both => "solid",
        };
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [style={style}];\n",
            node_label(fw, edge.from),
            node_label(fw, edge.to)
        ));
    }
    out.push_str("}\n");
    out
}
