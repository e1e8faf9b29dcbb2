//! Conclusion closure and minimal supports.
//!
//! `closure` computes the set of sentences deducible from a set of
//! assumptions by forward rule application. `minimal_supports` computes, for
//! every sentence, the antichain of inclusion-minimal assumption sets it is
//! deducible from; this antichain is the substrate of all attack checks.
//!
//! Attack computation ranges over minimal supports only: every deduction
//! support contains a minimal support, and shrinking a support can only make
//! the "no element strictly below the target" guard easier to satisfy, so
//! minimal supports decide normal-attack existence. Reverse attacks and the
//! contraposition checks quantify over minimal supports by definition here;
//! the brute-force engine cross-validates this reduction on small inputs.

use std::collections::BTreeSet;

use crate::framework::Framework;
use crate::set::{antichain_insert, AsmSet};
use crate::symbols::SentenceId;

/// An inclusion-minimal assumption set from which `target` is deducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SupportSet {
    pub target: SentenceId,
    pub support: AsmSet,
}

/// All sentences deducible from the assumptions in `e`.
///
/// Facts (empty-body rules) are always included; saturation ignores
/// unproductive cycles through underivable sentences.
pub fn closure(fw: &Framework, e: AsmSet) -> BTreeSet<SentenceId> {
    let mut derived = vec![false; fw.language_size()];
    for index in e.iter() {
        derived[fw.assumption_at(index).index()] = true;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for rule in fw.rules() {
            if derived[rule.head.index()] {
                continue;
            }
            if rule.body.iter().all(|s| derived[s.index()]) {
                derived[rule.head.index()] = true;
                changed = true;
            }
        }
    }
    fw.language()
        .filter(|id| derived[id.index()])
        .collect()
}

/// Membership test: `phi` is in the closure of `e`.
pub fn derives(fw: &Framework, e: AsmSet, phi: SentenceId) -> bool {
    if let Some(index) = fw.assumption_index(phi) {
        // flat framework: an assumption is deducible only from itself
        return e.contains(index);
    }
    closure(fw, e).contains(&phi)
}

/// Minimal supports of `phi`, ascending; empty iff `phi` is underivable
/// from every assumption set.
pub fn minimal_supports(fw: &Framework, phi: SentenceId) -> &[AsmSet] {
    &support_table(fw)[phi.index()]
}

/// The spec-level view of [`minimal_supports`].
pub fn minimal_support_sets(fw: &Framework, phi: SentenceId) -> Vec<SupportSet> {
    minimal_supports(fw, phi)
        .iter()
        .map(|&support| SupportSet {
            target: phi,
            support,
        })
        .collect()
}

/// Per-sentence antichains of minimal supports, computed once per framework.
pub(crate) fn support_table(fw: &Framework) -> &Vec<Vec<AsmSet>> {
    fw.supports.get_or_init(|| compute_support_table(fw))
}

/// Forward saturation: each derived sentence is labelled with an antichain
/// of supports; rule application union-combines the body antichains and
/// prunes non-minimal results until a fixpoint is reached.
fn compute_support_table(fw: &Framework) -> Vec<Vec<AsmSet>> {
    let mut table: Vec<Vec<AsmSet>> = vec![Vec::new(); fw.language_size()];
    for (index, &id) in fw.assumptions().iter().enumerate() {
        table[id.index()].push(AsmSet::singleton(index));
    }
    let mut changed = true;
    while changed {
        changed = false;
        for rule in fw.rules() {
            let mut combined = vec![AsmSet::EMPTY];
            let mut derivable = true;
            for body in &rule.body {
                let body_supports = &table[body.index()];
                if body_supports.is_empty() {
                    derivable = false;
                    break;
                }
                let mut next = Vec::with_capacity(combined.len() * body_supports.len());
                for &acc in &combined {
                    for &s in body_supports {
                        antichain_insert(&mut next, acc.union(s));
                    }
                }
                combined = next;
            }
            if !derivable {
                continue;
            }
            let head = rule.head.index();
            for candidate in combined {
                if antichain_insert(&mut table[head], candidate) {
                    changed = true;
                }
            }
        }
    }
    for supports in &mut table {
        supports.sort();
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    fn sentences(fw: &Framework, set: &BTreeSet<SentenceId>) -> Vec<String> {
        fw.sentence_names(set.iter().copied())
    }

    #[test]
    fn closure_of_attacking_assumption() {
        let fw = examples::plain_pair();
        let beta = fw.asm_set_from_names(["beta"]).unwrap();
        assert_eq!(sentences(&fw, &closure(&fw, beta)), ["beta", "c_alpha"]);
    }

    #[test]
    fn closure_of_empty_set_without_facts_is_empty() {
        let fw = examples::plain_pair();
        assert!(closure(&fw, AsmSet::EMPTY).is_empty());
    }

    #[test]
    fn closure_collects_intermediate_conclusions() {
        let fw = examples::fragile_defence();
        let e = fw.asm_set_from_names(["p", "q", "alpha", "rho"]).unwrap();
        assert_eq!(
            sentences(&fw, &closure(&fw, e)),
            ["alpha", "p", "psi", "q", "rho"]
        );
    }

    #[test]
    fn derives_examples() {
        let fw = examples::plain_pair();
        let beta_set = fw.asm_set_from_names(["beta"]).unwrap();
        let alpha_set = fw.asm_set_from_names(["alpha"]).unwrap();
        let c_alpha = fw.sentence("c_alpha").unwrap();
        let beta = fw.sentence("beta").unwrap();
        let alpha = fw.sentence("alpha").unwrap();
        assert!(derives(&fw, beta_set, c_alpha));
        // assumptions are deducible only from sets containing them
        assert!(!derives(&fw, AsmSet::EMPTY, beta));
        assert!(derives(&fw, alpha_set, alpha));
    }

    #[test]
    fn minimal_support_of_rule_head() {
        let fw = examples::plain_pair();
        let c_alpha = fw.sentence("c_alpha").unwrap();
        let beta = fw.asm_set_from_names(["beta"]).unwrap();
        assert_eq!(minimal_supports(&fw, c_alpha), &[beta]);
    }

    #[test]
    fn minimal_support_of_assumption_is_itself() {
        let fw = examples::plain_pair();
        let alpha = fw.sentence("alpha").unwrap();
        let alpha_set = fw.asm_set_from_names(["alpha"]).unwrap();
        assert_eq!(minimal_supports(&fw, alpha), &[alpha_set]);
        let sets = minimal_support_sets(&fw, alpha);
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].target, alpha);
    }

    #[test]
    fn fact_shadows_larger_supports() {
        // psi is a fact and also derivable from {p, q}; only the empty
        // support is minimal
        let fw = examples::fragile_defence_fact();
        let psi = fw.sentence("psi").unwrap();
        assert_eq!(minimal_supports(&fw, psi), &[AsmSet::EMPTY]);
    }

    #[test]
    fn underivable_sentences_have_no_supports() {
        let fw = examples::plain_pair();
        let c_beta = fw.sentence("c_beta").unwrap();
        assert!(minimal_supports(&fw, c_beta).is_empty());
    }

    #[test]
    fn supports_route_through_intermediates() {
        let fw = examples::fragile_defence();
        let c_rho = fw.sentence("c_rho").unwrap();
        let expected = fw.asm_set_from_names(["beta", "chi", "p", "q"]).unwrap();
        assert_eq!(minimal_supports(&fw, c_rho), &[expected]);
    }

    #[test]
    fn self_referential_rules_are_ignored() {
        let mut b = Framework::builder();
        b.assumption("a");
        b.contrary("a", "c_a");
        b.rule("x", ["x"]);
        b.rule("c_a", ["x"]);
        let fw = b.build().unwrap();
        let c_a = fw.sentence("c_a").unwrap();
        assert!(minimal_supports(&fw, c_a).is_empty());
        assert!(closure(&fw, fw.all_assumptions())
            .iter()
            .all(|&s| fw.name(s) == "a"));
    }
}
