//! Decision procedures for contraposition and the preference-handling
//! principles.
//!
//! Every check returns a [`CheckReport`]: either the property holds, or it
//! is violated with concrete witnesses, or its preconditions fail and the
//! check is not applicable. Contraposition obligations are evaluated over
//! inclusion-minimal supports; the brute-force engine cross-validates that
//! reduction.

use serde::Serialize;

use crate::deduction::{derives, minimal_supports};
use crate::framework::Framework;
use crate::semantics::{extensions, is_conflict_free, EnumerationError, Family, SemanticsId};
use crate::set::AsmSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    Holds,
    Violated,
    /// The check's preconditions fail; not a violation.
    NotApplicable,
}

/// One counterexample: the violated clause plus the sets and assumptions
/// involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub clause: String,
    pub sets: Vec<Vec<String>>,
    pub items: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub status: CheckStatus,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    fn from_witnesses(check: &str, witnesses: Vec<Witness>) -> Self {
        let status = if witnesses.is_empty() {
            CheckStatus::Holds
        } else {
            CheckStatus::Violated
        };
        CheckReport {
            check: check.to_owned(),
            status,
            witnesses,
            note: None,
        }
    }

    fn not_applicable(check: &str, note: String) -> Self {
        CheckReport {
            check: check.to_owned(),
            status: CheckStatus::NotApplicable,
            witnesses: Vec::new(),
            note: Some(note),
        }
    }

    pub fn holds(&self) -> bool {
        self.status == CheckStatus::Holds
    }
}

/// Contraposition: whenever a set of assumptions deduces the contrary of an
/// assumption, each element of a minimal such support admits a deduction of
/// its own contrary from the remaining support plus the attacked assumption.
pub fn check_contraposition(fw: &Framework) -> CheckReport {
    let mut witnesses = Vec::new();
    for (b, _) in fw.assumptions().iter().enumerate() {
        for &support in minimal_supports(fw, fw.contrary_at(b)) {
            for a in support.iter() {
                let premise = support.without(a).with(b);
                if !derives(fw, premise, fw.contrary_at(a)) {
                    witnesses.push(Witness {
                        clause: "no contrapositive deduction".into(),
                        sets: vec![fw.set_names(support)],
                        items: vec![
                            fw.name(fw.assumption_at(b)).to_owned(),
                            fw.name(fw.assumption_at(a)).to_owned(),
                        ],
                    });
                }
            }
        }
    }
    CheckReport::from_witnesses("contraposition", witnesses)
}

/// Weak contraposition: the contrapositive deduction is only demanded for
/// supports containing an assumption strictly below the attacked one, and
/// only for some such element.
pub fn check_weak_contraposition(fw: &Framework) -> CheckReport {
    let mut witnesses = Vec::new();
    for (b, _) in fw.assumptions().iter().enumerate() {
        for &support in minimal_supports(fw, fw.contrary_at(b)) {
            let mut below: Vec<usize> = support.iter().filter(|&a| fw.lt_idx(a, b)).collect();
            if below.is_empty() {
                continue;
            }
            // try preference-minimal candidates first
            let snapshot = below.clone();
            below.sort_by_key(|&w| snapshot.iter().filter(|&&v| fw.lt_idx(v, w)).count());
            let discharged = below.iter().any(|&a| {
                let premise = support.without(a).with(b);
                derives(fw, premise, fw.contrary_at(a))
            });
            if !discharged {
                witnesses.push(Witness {
                    clause: "no strictly smaller element admits a contrapositive deduction".into(),
                    sets: vec![fw.set_names(support)],
                    items: vec![fw.name(fw.assumption_at(b)).to_owned()],
                });
            }
        }
    }
    CheckReport::from_witnesses("weak-contraposition", witnesses)
}

/// Conflict preservation: members of a preference-aware extension never
/// attack each other under the plain relation.
pub fn check_conflict_preservation(
    fw: &Framework,
    family: Family,
    max_assumptions: usize,
) -> Result<CheckReport, EnumerationError> {
    let exts = extensions(fw, SemanticsId::aware(family), max_assumptions)?;
    let mut witnesses = Vec::new();
    for ext in &exts {
        for a in ext.members.iter() {
            for b in ext.members.iter() {
                if crate::attacks::attacks(fw, AsmSet::singleton(a), AsmSet::singleton(b)) {
                    witnesses.push(Witness {
                        clause: "extension members attack each other".into(),
                        sets: vec![ext.member_names(fw)],
                        items: vec![
                            fw.name(fw.assumption_at(a)).to_owned(),
                            fw.name(fw.assumption_at(b)).to_owned(),
                        ],
                    });
                }
            }
        }
    }
    Ok(CheckReport::from_witnesses("conflict-preservation", witnesses))
}

/// Empty preferences: with the preorder stripped to its reflexive core, the
/// preference-aware semantics selects exactly the plain extensions.
pub fn check_empty_preferences(
    fw: &Framework,
    family: Family,
    max_assumptions: usize,
) -> Result<CheckReport, EnumerationError> {
    let stripped = fw.without_preferences();
    let aware: Vec<Vec<String>> =
        extensions(&stripped, SemanticsId::aware(family), max_assumptions)?
            .iter()
            .map(|e| e.member_names(&stripped))
            .collect();
    let plain: Vec<Vec<String>> = extensions(fw, SemanticsId::plain(family), max_assumptions)?
        .iter()
        .map(|e| e.member_names(fw))
        .collect();
    let mut witnesses = Vec::new();
    for e in &aware {
        if !plain.contains(e) {
            witnesses.push(Witness {
                clause: "extension only under the preference-aware relation".into(),
                sets: vec![e.clone()],
                items: vec![],
            });
        }
    }
    for e in &plain {
        if !aware.contains(e) {
            witnesses.push(Witness {
                clause: "extension only under the plain relation".into(),
                sets: vec![e.clone()],
                items: vec![],
            });
        }
    }
    Ok(CheckReport::from_witnesses("empty-preferences", witnesses))
}

/// The preference-maximal assumptions: no assumption is strictly above them.
pub fn maximal_elements(fw: &Framework) -> AsmSet {
    let n = fw.assumption_count();
    (0..n)
        .filter(|&a| (0..n).all(|b| !fw.lt_idx(a, b)))
        .collect()
}

/// Maximal elements: when the preference is total and the set of maximal
/// assumptions is conflict-free under the aware relation, that set belongs
/// to every preference-aware extension.
pub fn check_maximal_elements(
    fw: &Framework,
    family: Family,
    max_assumptions: usize,
) -> Result<CheckReport, EnumerationError> {
    let check = "maximal-elements";
    if !fw.is_total_over(fw.all_assumptions()) {
        return Ok(CheckReport::not_applicable(
            check,
            "preference order is not total over the assumptions".into(),
        ));
    }
    let maximal = maximal_elements(fw);
    if !is_conflict_free(fw, maximal, true) {
        return Ok(CheckReport::not_applicable(
            check,
            "the set of preference-maximal assumptions is not conflict-free".into(),
        ));
    }
    let exts = extensions(fw, SemanticsId::aware(family), max_assumptions)?;
    let mut witnesses = Vec::new();
    for ext in &exts {
        if !maximal.is_subset(ext.members) {
            witnesses.push(Witness {
                clause: "extension misses preference-maximal assumptions".into(),
                sets: vec![ext.member_names(fw), fw.set_names(maximal)],
                items: fw.set_names(maximal.difference(ext.members)),
            });
        }
    }
    Ok(CheckReport::from_witnesses(check, witnesses))
}

/// Coexisting extensions must not differ by exactly one assumption each
/// with the two assumptions strictly ordered.
pub fn check_principle_one(
    fw: &Framework,
    family: Family,
    max_assumptions: usize,
) -> Result<CheckReport, EnumerationError> {
    let exts = extensions(fw, SemanticsId::aware(family), max_assumptions)?;
    let mut witnesses = Vec::new();
    for first in &exts {
        for second in &exts {
            let common = first.members.intersection(second.members);
            let only_first = first.members.difference(common);
            let only_second = second.members.difference(common);
            if only_first.len() != 1 || only_second.len() != 1 {
                continue;
            }
            let stronger = only_first.iter().next().unwrap();
            let weaker = only_second.iter().next().unwrap();
            if fw.lt_idx(weaker, stronger) {
                witnesses.push(Witness {
                    clause: "both extensions coexist though their distinguishing assumptions are strictly ordered".into(),
                    sets: vec![first.member_names(fw), second.member_names(fw)],
                    items: vec![
                        fw.name(fw.assumption_at(stronger)).to_owned(),
                        fw.name(fw.assumption_at(weaker)).to_owned(),
                    ],
                });
            }
        }
    }
    Ok(CheckReport::from_witnesses("principle-one", witnesses))
}
