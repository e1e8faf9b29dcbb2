//! Extension semantics.
//!
//! Enumerates extensions under the stable, complete, preferred, grounded and
//! ideal semantics, each over either the plain or the preference-aware
//! attack relation, plus the defence fixed-point operator whose least fixed
//! point is the preference-aware grounded extension on frameworks closed
//! under contraposition.

use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

use crate::attacks::{attacks, lt_attacks, minimal_attackers};
use crate::deduction::closure;
use crate::framework::Framework;
use crate::set::AsmSet;
use crate::symbols::SentenceId;

/// Default cap on the assumption count for subset enumeration.
pub const DEFAULT_MAX_ASSUMPTIONS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Stable,
    Complete,
    Preferred,
    Grounded,
    Ideal,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Stable,
        Family::Complete,
        Family::Preferred,
        Family::Grounded,
        Family::Ideal,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Family::Stable => "stable",
            Family::Complete => "complete",
            Family::Preferred => "preferred",
            Family::Grounded => "grounded",
            Family::Ideal => "ideal",
        }
    }
}

/// A semantics: a family plus the choice of attack relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SemanticsId {
    pub family: Family,
    pub preference_aware: bool,
}

impl SemanticsId {
    pub fn aware(family: Family) -> Self {
        SemanticsId {
            family,
            preference_aware: true,
        }
    }

    pub fn plain(family: Family) -> Self {
        SemanticsId {
            family,
            preference_aware: false,
        }
    }

    /// `"<-complete"` for the preference-aware variant, `"complete"` otherwise.
    pub fn label(self) -> String {
        if self.preference_aware {
            format!("<-{}", self.family.label())
        } else {
            self.family.label().to_owned()
        }
    }
}

/// A selected assumption set together with its conclusion closure.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Extension {
    pub members: AsmSet,
    pub conclusions: BTreeSet<SentenceId>,
}

impl Extension {
    /// Conclusions are recomputed from the members on construction.
    pub fn new(fw: &Framework, members: AsmSet) -> Self {
        Extension {
            members,
            conclusions: closure(fw, members),
        }
    }

    pub fn member_names(&self, fw: &Framework) -> Vec<String> {
        fw.set_names(self.members)
    }

    pub fn conclusion_names(&self, fw: &Framework) -> Vec<String> {
        fw.sentence_names(self.conclusions.iter().copied())
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("{assumptions} assumptions exceed the enumeration bound of {bound}")]
    TooLarge { assumptions: usize, bound: usize },
}

fn attacks_under(fw: &Framework, a: AsmSet, b: AsmSet, preference_aware: bool) -> bool {
    if preference_aware {
        lt_attacks(fw, a, b).is_some()
    } else {
        attacks(fw, a, b)
    }
}

/// Conflict-freeness of `e` under the selected relation.
pub fn is_conflict_free(fw: &Framework, e: AsmSet, preference_aware: bool) -> bool {
    !attacks_under(fw, e, e, preference_aware)
}

/// Set defence: `e` attacks every set attacking `target`.
///
/// Quantification runs over the inclusion-minimal attackers of `target`;
/// attacking those extends to attacking every superset attacker.
pub fn defends(fw: &Framework, e: AsmSet, target: AsmSet, preference_aware: bool) -> bool {
    minimal_attackers(fw, target, preference_aware)
        .into_iter()
        .all(|attacker| attacks_under(fw, e, attacker, preference_aware))
}

/// Member-wise defence: `e` defends each of its members as a singleton.
///
/// For the plain relation this coincides with [`defends`] of the whole set;
/// with preferences a reverse attack can need several members of the target
/// at once, so set defence is the stronger notion. Admissibility uses the
/// set form.
pub fn defends_pointwise(fw: &Framework, e: AsmSet, preference_aware: bool) -> bool {
    e.iter()
        .all(|m| defends(fw, e, AsmSet::singleton(m), preference_aware))
}

/// Admissibility: conflict-free and defends itself as a set.
pub fn is_admissible(fw: &Framework, e: AsmSet, preference_aware: bool) -> bool {
    is_conflict_free(fw, e, preference_aware) && defends(fw, e, e, preference_aware)
}

/// All assumptions that `a` defends as singletons.
pub fn def_operator(fw: &Framework, a: AsmSet) -> AsmSet {
    (0..fw.assumption_count())
        .filter(|&i| defends(fw, a, AsmSet::singleton(i), true))
        .collect()
}

/// Least fixed point of [`def_operator`] from the empty set.
///
/// The operator is monotone, so iteration terminates within one step per
/// assumption. The result coincides with the preference-aware grounded
/// extension on frameworks closed under contraposition; elsewhere the two
/// can diverge and enumeration stays authoritative.
pub fn grounded_via_lfp(fw: &Framework) -> Extension {
    let mut current = AsmSet::EMPTY;
    loop {
        let next = def_operator(fw, current);
        if next == current {
            return Extension::new(fw, current);
        }
        current = next;
    }
}

/// Conflict-free sets in ascending cardinality.
///
/// Supersets of conflicting sets conflict as well, so candidates containing
/// a recorded minimal conflicting set are pruned without re-testing.
fn conflict_free_sets(fw: &Framework, preference_aware: bool) -> Vec<AsmSet> {
    let n = fw.assumption_count();
    let mut conflicting_minimal: Vec<AsmSet> = Vec::new();
    let mut out = Vec::new();
    for candidate in AsmSet::powerset_by_size(n) {
        if conflicting_minimal.iter().any(|c| c.is_subset(candidate)) {
            continue;
        }
        if is_conflict_free(fw, candidate, preference_aware) {
            out.push(candidate);
        } else {
            conflicting_minimal.push(candidate);
        }
    }
    out
}

fn maximal(sets: &[AsmSet]) -> Vec<AsmSet> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| s.is_proper_subset(t)))
        .collect()
}

fn minimal(sets: &[AsmSet]) -> Vec<AsmSet> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t.is_proper_subset(s)))
        .collect()
}

/// Exact extension enumeration under `sem`.
///
/// Output is sorted lexicographically by sorted member identifiers. The
/// grounded and ideal families can return several extensions on frameworks
/// not closed under contraposition; uniqueness there is a theorem, not part
/// of the definition.
pub fn extensions(
    fw: &Framework,
    sem: SemanticsId,
    max_assumptions: usize,
) -> Result<Vec<Extension>, EnumerationError> {
    let n = fw.assumption_count();
    if n > max_assumptions {
        return Err(EnumerationError::TooLarge {
            assumptions: n,
            bound: max_assumptions,
        });
    }
    let aware = sem.preference_aware;
    let cf = conflict_free_sets(fw, aware);
    let chosen: Vec<AsmSet> = match sem.family {
        Family::Stable => cf
            .iter()
            .copied()
            .filter(|&e| {
                fw.all_assumptions()
                    .difference(e)
                    .iter()
                    .all(|b| attacks_under(fw, e, AsmSet::singleton(b), aware))
            })
            .collect(),
        Family::Complete => complete_sets(fw, &cf, aware),
        Family::Preferred => maximal(&admissible_sets(fw, &cf, aware)),
        Family::Grounded => minimal(&complete_sets(fw, &cf, aware)),
        Family::Ideal => {
            let admissible = admissible_sets(fw, &cf, aware);
            let preferred = maximal(&admissible);
            // the empty set is always admissible, so maximal admissible
            // sets exist whenever enumeration runs at all
            debug_assert!(!preferred.is_empty());
            let core = preferred
                .iter()
                .copied()
                .fold(fw.all_assumptions(), AsmSet::intersection);
            let contained: Vec<AsmSet> = admissible
                .iter()
                .copied()
                .filter(|e| e.is_subset(core))
                .collect();
            maximal(&contained)
        }
    };
    let mut result: Vec<Extension> = chosen.into_iter().map(|e| Extension::new(fw, e)).collect();
    result.sort_by_key(|e| e.member_names(fw));
    Ok(result)
}

fn admissible_sets(fw: &Framework, cf: &[AsmSet], aware: bool) -> Vec<AsmSet> {
    cf.iter()
        .copied()
        .filter(|&e| defends(fw, e, e, aware))
        .collect()
}

fn complete_sets(fw: &Framework, cf: &[AsmSet], aware: bool) -> Vec<AsmSet> {
    admissible_sets(fw, cf, aware)
        .into_iter()
        .filter(|&e| {
            fw.all_assumptions()
                .difference(e)
                .iter()
                .all(|a| !defends(fw, e, AsmSet::singleton(a), aware))
        })
        .collect()
}

/// Convenience: enumeration at the default bound.
pub fn extensions_default(fw: &Framework, sem: SemanticsId) -> Result<Vec<Extension>, EnumerationError> {
    extensions(fw, sem, DEFAULT_MAX_ASSUMPTIONS)
}
