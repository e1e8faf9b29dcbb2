//! Brute-force reference engine.
//!
//! Re-implements closure, supports, attacks and extension semantics by
//! direct powerset enumeration, straight from the definitions and with no
//! sharing of the optimized code paths: supports are found by filtering all
//! subsets, defence quantifies over every subset of the assumption set, and
//! extension families are selected by their textbook characterisations.
//! Exponential and only meant for small frameworks, as a cross-check.

use std::collections::BTreeSet;

use crate::attacks::AttackKind;
use crate::framework::Framework;
use crate::semantics::{Family, SemanticsId};
use crate::set::AsmSet;
use crate::symbols::SentenceId;

/// Hard cap: the oracle enumerates `4^n` pairs in places.
const MAX_ORACLE_ASSUMPTIONS: usize = 12;

/// Brute-force engine over one framework. Minimal supports are recomputed
/// from scratch (powerset filter plus pairwise minimisation) on creation.
pub struct NaiveEngine<'a> {
    fw: &'a Framework,
    supports: Vec<Vec<AsmSet>>,
}

impl<'a> NaiveEngine<'a> {
    pub fn new(fw: &'a Framework) -> Self {
        let n = fw.assumption_count();
        assert!(
            n <= MAX_ORACLE_ASSUMPTIONS,
            "naive engine is limited to {MAX_ORACLE_ASSUMPTIONS} assumptions"
        );
        let mut supports = vec![Vec::new(); fw.language_size()];
        let subsets: Vec<AsmSet> = (0..1u64 << n).map(AsmSet::from_bits).collect();
        for phi in fw.language() {
            let deriving: Vec<AsmSet> = subsets
                .iter()
                .copied()
                .filter(|&s| Self::cn(fw, s).contains(&phi))
                .collect();
            let minimal: Vec<AsmSet> = deriving
                .iter()
                .copied()
                .filter(|&s| !deriving.iter().any(|&t| t.is_proper_subset(s)))
                .collect();
            supports[phi.index()] = minimal;
        }
        NaiveEngine { fw, supports }
    }

    pub fn framework(&self) -> &Framework {
        self.fw
    }

    /// Closure by repeated scans over the rule list.
    pub fn cn(fw: &Framework, e: AsmSet) -> BTreeSet<SentenceId> {
        let mut derived: BTreeSet<SentenceId> =
            e.iter().map(|i| fw.assumption_at(i)).collect();
        loop {
            let mut new = Vec::new();
            for rule in fw.rules() {
                if !derived.contains(&rule.head)
                    && rule.body.iter().all(|s| derived.contains(s))
                {
                    new.push(rule.head);
                }
            }
            if new.is_empty() {
                return derived;
            }
            derived.extend(new);
        }
    }

    pub fn minimal_supports(&self, phi: SentenceId) -> &[AsmSet] {
        &self.supports[phi.index()]
    }

    pub fn attacks(&self, a: AsmSet, b: AsmSet) -> bool {
        b.iter().any(|t| {
            self.minimal_supports(self.fw.contrary_at(t))
                .iter()
                .any(|s| s.is_subset(a))
        })
    }

    pub fn lt_attacks(&self, a: AsmSet, b: AsmSet) -> Option<AttackKind> {
        let normal = b.iter().any(|t| {
            self.minimal_supports(self.fw.contrary_at(t))
                .iter()
                .any(|s| s.is_subset(a) && s.iter().all(|m| !self.fw.lt_idx(m, t)))
        });
        let reverse = a.iter().any(|m| {
            self.minimal_supports(self.fw.contrary_at(m))
                .iter()
                .any(|s| s.is_subset(b) && s.iter().any(|w| self.fw.lt_idx(w, m)))
        });
        match (normal, reverse) {
            (true, true) => Some(AttackKind::Both),
            (true, false) => Some(AttackKind::Normal),
            (false, true) => Some(AttackKind::Reverse),
            (false, false) => None,
        }
    }

    fn attacks_under(&self, a: AsmSet, b: AsmSet, aware: bool) -> bool {
        if aware {
            self.lt_attacks(a, b).is_some()
        } else {
            self.attacks(a, b)
        }
    }

    pub fn is_conflict_free(&self, e: AsmSet, aware: bool) -> bool {
        !self.attacks_under(e, e, aware)
    }

    /// Defence quantified over every subset of the assumption set.
    pub fn defends(&self, e: AsmSet, target: AsmSet, aware: bool) -> bool {
        let n = self.fw.assumption_count();
        (0..1u64 << n).map(AsmSet::from_bits).all(|b| {
            !self.attacks_under(b, target, aware) || self.attacks_under(e, b, aware)
        })
    }

    pub fn is_admissible(&self, e: AsmSet, aware: bool) -> bool {
        self.is_conflict_free(e, aware) && self.defends(e, e, aware)
    }

    /// Extension member sets under `sem`, ascending.
    pub fn extensions(&self, sem: SemanticsId) -> Vec<AsmSet> {
        let n = self.fw.assumption_count();
        let aware = sem.preference_aware;
        let all: Vec<AsmSet> = (0..1u64 << n).map(AsmSet::from_bits).collect();
        let admissible: Vec<AsmSet> = all
            .iter()
            .copied()
            .filter(|&e| self.is_admissible(e, aware))
            .collect();
        let complete: Vec<AsmSet> = admissible
            .iter()
            .copied()
            .filter(|&e| {
                self.fw
                    .all_assumptions()
                    .difference(e)
                    .iter()
                    .all(|a| !self.defends(e, AsmSet::singleton(a), aware))
            })
            .collect();
        let mut chosen = match sem.family {
            Family::Stable => all
                .iter()
                .copied()
                .filter(|&e| {
                    self.is_conflict_free(e, aware)
                        && self
                            .fw
                            .all_assumptions()
                            .difference(e)
                            .iter()
                            .all(|b| self.attacks_under(e, AsmSet::singleton(b), aware))
                })
                .collect::<Vec<_>>(),
            Family::Complete => complete,
            Family::Preferred => keep_maximal(&admissible),
            Family::Grounded => keep_minimal(&complete),
            Family::Ideal => {
                let preferred = keep_maximal(&admissible);
                let core = preferred
                    .iter()
                    .copied()
                    .fold(self.fw.all_assumptions(), AsmSet::intersection);
                let inside: Vec<AsmSet> = admissible
                    .iter()
                    .copied()
                    .filter(|e| e.is_subset(core))
                    .collect();
                keep_maximal(&inside)
            }
        };
        chosen.sort();
        chosen
    }

    /// Contraposition, re-derived from raw subsets: for every assumption
    /// `b`, every inclusion-minimal `S` deriving the contrary of `b`
    /// (minimality re-checked element-wise) and every `a` in `S`, the
    /// contrary of `a` must follow from `S` minus `a` plus `b`.
    pub fn satisfies_contraposition(&self) -> bool {
        let fw = self.fw;
        let n = fw.assumption_count();
        for b in 0..n {
            let contrary = fw.contrary_at(b);
            for s in (0..1u64 << n).map(AsmSet::from_bits) {
                if !Self::cn(fw, s).contains(&contrary) {
                    continue;
                }
                let minimal = s
                    .iter()
                    .all(|m| !Self::cn(fw, s.without(m)).contains(&contrary));
                if !minimal {
                    continue;
                }
                for a in s.iter() {
                    let premise = s.without(a).with(b);
                    let want = fw.contrary_at(a);
                    if !Self::cn(fw, premise).contains(&want) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn keep_maximal(sets: &[AsmSet]) -> Vec<AsmSet> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| s.is_proper_subset(t)))
        .collect()
}

fn keep_minimal(sets: &[AsmSet]) -> Vec<AsmSet> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t.is_proper_subset(s)))
        .collect()
}

/// Compares the optimized engine against this oracle on all ten
/// family/relation combinations; returns the labels that diverge.
pub fn divergences(fw: &Framework) -> Vec<String> {
    let oracle = NaiveEngine::new(fw);
    let mut bad = Vec::new();
    for family in Family::ALL {
        for aware in [false, true] {
            let sem = SemanticsId { family, preference_aware: aware };
            let fast: Vec<AsmSet> = crate::semantics::extensions(fw, sem, 20)
                .expect("within bound")
                .into_iter()
                .map(|e| e.members)
                .collect();
            let mut fast_sorted = fast;
            fast_sorted.sort();
            if fast_sorted != oracle.extensions(sem) {
                bad.push(sem.label());
            }
        }
    }
    bad
}
