//! Attack relations between assumption sets.
//!
//! The plain relation holds when the attacker deduces the contrary of a
//! member of the target. The preference-aware relation splits into two
//! kinds: a *normal* attack is a plain attack whose support contains no
//! assumption strictly below the attacked member, and a *reverse* attack
//! points from the target of a would-be attack back at an attacking support
//! that uses a strictly less preferred assumption. Both kinds are decided
//! over minimal supports (see the deduction module notes).

use serde::Serialize;
use thiserror::Error;

use crate::deduction::minimal_supports;
use crate::framework::Framework;
use crate::set::AsmSet;

/// Kind of a preference-aware attack edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AttackKind {
    Normal,
    Reverse,
    /// Both the normal and the reverse condition hold for the ordered pair.
    Both,
}

/// A directed attack between two assumption sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AttackEdge {
    pub from: AsmSet,
    pub to: AsmSet,
    pub kind: AttackKind,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph over {assumptions} assumptions needs 2^{assumptions} nodes, above the bound of 2^{bound}; pass a node filter or raise the bound")]
    TooLarge { assumptions: usize, bound: usize },
}

/// Plain attack: some subset of `a` deduces the contrary of a member of `b`.
pub fn attacks(fw: &Framework, a: AsmSet, b: AsmSet) -> bool {
    b.iter().any(|target| {
        minimal_supports(fw, fw.contrary_at(target))
            .iter()
            .any(|s| s.is_subset(a))
    })
}

fn normal_attack(fw: &Framework, a: AsmSet, b: AsmSet) -> bool {
    b.iter().any(|target| {
        minimal_supports(fw, fw.contrary_at(target))
            .iter()
            .any(|s| s.is_subset(a) && s.iter().all(|m| !fw.lt_idx(m, target)))
    })
}

fn reverse_attack(fw: &Framework, a: AsmSet, b: AsmSet) -> bool {
    a.iter().any(|member| {
        minimal_supports(fw, fw.contrary_at(member))
            .iter()
            .any(|s| s.is_subset(b) && s.iter().any(|m| fw.lt_idx(m, member)))
    })
}

/// Preference-aware attack from `a` to `b`, if any, with its kind.
pub fn lt_attacks(fw: &Framework, a: AsmSet, b: AsmSet) -> Option<AttackKind> {
    match (normal_attack(fw, a, b), reverse_attack(fw, a, b)) {
        (true, true) => Some(AttackKind::Both),
        (true, false) => Some(AttackKind::Normal),
        (false, true) => Some(AttackKind::Reverse),
        (false, false) => None,
    }
}

/// Inclusion-minimal sets that attack `target` under the selected relation.
///
/// Quantifying defence over these suffices: every attacker contains one of
/// them, and an attack on a subset extends to an attack on any superset.
/// Normal attackers are the admissibly-guarded minimal supports of member
/// contraries; minimal reverse attackers are the singletons whose contrary
/// the target deduces through a support with a strictly smaller witness.
pub fn minimal_attackers(fw: &Framework, target: AsmSet, preference_aware: bool) -> Vec<AsmSet> {
    let mut out: Vec<AsmSet> = Vec::new();
    for member in target.iter() {
        for &s in minimal_supports(fw, fw.contrary_at(member)) {
            let guarded = !preference_aware || s.iter().all(|m| !fw.lt_idx(m, member));
            if guarded && !out.contains(&s) {
                out.push(s);
            }
        }
    }
    if preference_aware {
        for b in 0..fw.assumption_count() {
            let singleton = AsmSet::singleton(b);
            if out.contains(&singleton) {
                continue;
            }
            let reverses = minimal_supports(fw, fw.contrary_at(b))
                .iter()
                .any(|s| s.is_subset(target) && s.iter().any(|m| fw.lt_idx(m, b)));
            if reverses {
                out.push(singleton);
            }
        }
    }
    out.sort();
    out
}

/// Attack edges over the subsets of the assumption set.
///
/// Without a node filter the framework must stay within `2^bound` subsets.
/// With a filter, only subsets accepted by it become nodes and edge
/// endpoints.
pub fn attack_graph(
    fw: &Framework,
    use_preferences: bool,
    node_filter: Option<&dyn Fn(AsmSet) -> bool>,
    bound: usize,
) -> Result<Vec<AttackEdge>, GraphError> {
    let n = fw.assumption_count();
    if node_filter.is_none() && n > bound {
        return Err(GraphError::TooLarge {
            assumptions: n,
            bound,
        });
    }
    let nodes = graph_nodes(fw, node_filter);
    let mut edges = Vec::new();
    for &from in &nodes {
        for &to in &nodes {
            let kind = if use_preferences {
                lt_attacks(fw, from, to)
            } else {
                attacks(fw, from, to).then_some(AttackKind::Normal)
            };
            if let Some(kind) = kind {
                edges.push(AttackEdge { from, to, kind });
            }
        }
    }
    Ok(edges)
}

/// The node set an attack graph ranges over, ascending by cardinality.
pub fn graph_nodes(fw: &Framework, node_filter: Option<&dyn Fn(AsmSet) -> bool>) -> Vec<AsmSet> {
    let n = fw.assumption_count();
    let mut nodes: Vec<AsmSet> = (0..1u64 << n).map(AsmSet::from_bits).collect();
    if let Some(filter) = node_filter {
        nodes.retain(|&s| filter(s));
    }
    nodes.sort_by_key(|m| (m.len(), m.bits()));
    nodes
}
