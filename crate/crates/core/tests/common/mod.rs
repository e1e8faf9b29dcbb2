//! Shared helpers for the integration suites.

#![allow(dead_code)]

use abaplus::framework::Framework;
use abaplus::semantics::{extensions, Family, SemanticsId, DEFAULT_MAX_ASSUMPTIONS};
use abaplus::{dsl, AsmSet};

pub const PLAIN_PAIR: &str = include_str!("../fixtures/plain_pair.aba");
pub const REVERSED_PAIR: &str = include_str!("../fixtures/reversed_pair.aba");
pub const JOINT_ATTACK: &str = include_str!("../fixtures/joint_attack.aba");
pub const JOINT_ATTACK_CLOSED: &str = include_str!("../fixtures/joint_attack_closed.aba");
pub const FRAGILE_DEFENCE: &str = include_str!("../fixtures/fragile_defence.aba");
pub const FRAGILE_DEFENCE_FACT: &str = include_str!("../fixtures/fragile_defence_fact.aba");
pub const FRAGILE_DEFENCE_INDIRECT: &str =
    include_str!("../fixtures/fragile_defence_indirect.aba");

pub fn load(text: &str) -> Framework {
    dsl::parse(text).expect("fixture parses")
}

/// Extension member-name lists under `sem`, in engine order.
pub fn member_sets(fw: &Framework, sem: SemanticsId) -> Vec<Vec<String>> {
    extensions(fw, sem, DEFAULT_MAX_ASSUMPTIONS)
        .expect("within enumeration bound")
        .iter()
        .map(|e| e.member_names(fw))
        .collect()
}

pub fn strings(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Maps an assumption set of `from` into the equally-named set of `to`;
/// members missing in `to` are dropped.
pub fn map_set(from: &Framework, set: AsmSet, to: &Framework) -> AsmSet {
    let names = from.set_names(set);
    let present: Vec<&str> = names
        .iter()
        .map(String::as_str)
        .filter(|name| {
            to.sentence(name)
                .map(|id| to.is_assumption(id))
                .unwrap_or(false)
        })
        .collect();
    to.asm_set_from_names(present).expect("mapped names exist")
}

pub const AWARE_FAMILIES: [Family; 5] = [
    Family::Stable,
    Family::Complete,
    Family::Preferred,
    Family::Grounded,
    Family::Ideal,
];

/// The four families with unique extensions on the fragile-defence fixtures.
pub const NON_STABLE_FAMILIES: [Family; 4] = [
    Family::Grounded,
    Family::Ideal,
    Family::Preferred,
    Family::Complete,
];
