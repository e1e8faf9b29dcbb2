//! Non-monotonic inference checks.
//!
//! Starting from an extension `E`, a concluded sentence `psi` is promoted to
//! a fact in one of two ways: the strict transform adds `psi <- .` for a
//! non-assumption conclusion, the confirmation transform does the same for a
//! concluded assumption while removing it from the assumption set and
//! restricting the preference relation and contrary map accordingly. The
//! evaluator then compares conclusion sets of the old and new extensions:
//! cumulative transitivity (cut) asks for no new conclusions, cautious
//! monotonicity (mon) for no lost ones, each either for all new extensions
//! or for some.

use serde::Serialize;
use std::collections::BTreeSet;

use thiserror::Error;

use crate::framework::{BuildError, Framework, FrameworkBuilder};
use crate::semantics::{extensions, EnumerationError, SemanticsId};
use crate::symbols::SentenceId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NmrSetting {
    /// Add a non-assumption conclusion as a fact.
    Strict,
    /// Confirm a concluded assumption: fact plus assumption removal.
    Asm,
}

impl NmrSetting {
    pub fn label(self) -> &'static str {
        match self {
            NmrSetting::Strict => "strict",
            NmrSetting::Asm => "asm",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NmrDirection {
    Cut,
    Mon,
}

impl NmrDirection {
    pub fn label(self) -> &'static str {
        match self {
            NmrDirection::Cut => "cut",
            NmrDirection::Mon => "mon",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NmrMode {
    Sceptical,
    Credulous,
}

impl NmrMode {
    pub fn label(self) -> &'static str {
        match self {
            NmrMode::Sceptical => "sceptical",
            NmrMode::Credulous => "credulous",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NmrProperty {
    pub direction: NmrDirection,
    pub mode: NmrMode,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum NmrError {
    #[error("`{psi}` is {reality}, but the {setting} transform requires {requirement}")]
    SettingMismatch {
        psi: String,
        setting: String,
        reality: String,
        requirement: String,
    },
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Build(#[from] BuildError),
}

/// Builds the transformed framework for `psi`.
///
/// The strict transform keeps everything except the added fact. The
/// confirmation transform drops `psi` from the assumptions, its entry from
/// the contrary map, and every preference pair touching it; restriction of a
/// closed preorder stays closed.
pub fn transform(
    fw: &Framework,
    setting: NmrSetting,
    psi: SentenceId,
) -> Result<Framework, NmrError> {
    let psi_name = fw.name(psi).to_owned();
    match setting {
        NmrSetting::Strict => {
            if fw.is_assumption(psi) {
                return Err(NmrError::SettingMismatch {
                    psi: psi_name,
                    setting: "strict".into(),
                    reality: "an assumption".into(),
                    requirement: "a non-assumption sentence".into(),
                });
            }
            let mut builder = fw.to_builder();
            builder.fact(&psi_name);
            Ok(builder.build()?)
        }
        NmrSetting::Asm => {
            let Some(psi_index) = fw.assumption_index(psi) else {
                return Err(NmrError::SettingMismatch {
                    psi: psi_name,
                    setting: "asm".into(),
                    reality: "not an assumption".into(),
                    requirement: "an assumption".into(),
                });
            };
            let mut builder = FrameworkBuilder::new();
            for rule in fw.rules() {
                let head = fw.name(rule.head).to_owned();
                let body: Vec<&str> = rule.body.iter().map(|&s| fw.name(s)).collect();
                builder.rule(&head, body);
            }
            builder.fact(&psi_name);
            for (i, &a) in fw.assumptions().iter().enumerate() {
                if i == psi_index {
                    continue;
                }
                let name = fw.name(a).to_owned();
                builder.assumption(&name);
                builder.contrary(&name, fw.name(fw.contrary_at(i)));
            }
            for (ia, ib) in fw.preorder().edges() {
                if ia == psi_index || ib == psi_index {
                    continue;
                }
                builder.prefer_leq(
                    fw.name(fw.assumption_at(ia)),
                    fw.name(fw.assumption_at(ib)),
                );
            }
            Ok(builder.build()?)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseVerdict {
    Holds,
    Violated,
    /// The transformed framework has no extension (or is ill-formed);
    /// excluded from the aggregate by the triviality clause.
    Vacuous,
}

/// Extension of the transformed framework witnessing a sceptical violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NmrWitness {
    pub extension: Vec<String>,
    pub conclusions: Vec<String>,
}

/// Verdict for one base extension and one promoted conclusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NmrCase {
    pub extension: Vec<String>,
    pub conclusions: Vec<String>,
    pub psi: String,
    pub verdict: CaseVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<NmrWitness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AggregateVerdict {
    Holds,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NmrReport {
    pub semantics: String,
    pub setting: String,
    pub direction: String,
    pub mode: String,
    pub base_extension_count: usize,
    pub cases: Vec<NmrCase>,
    /// Holds iff no case is violated; vacuous cases never count either way.
    pub aggregate: AggregateVerdict,
}

impl NmrReport {
    pub fn holds(&self) -> bool {
        self.aggregate == AggregateVerdict::Holds
    }

    pub fn violated_cases(&self) -> impl Iterator<Item = &NmrCase> {
        self.cases
            .iter()
            .filter(|c| c.verdict == CaseVerdict::Violated)
    }

    pub fn non_vacuous_cases(&self) -> usize {
        self.cases
            .iter()
            .filter(|c| c.verdict != CaseVerdict::Vacuous)
            .count()
    }
}

fn inclusion_holds(
    direction: NmrDirection,
    base: &BTreeSet<String>,
    new: &BTreeSet<String>,
) -> bool {
    match direction {
        NmrDirection::Cut => new.is_subset(base),
        NmrDirection::Mon => base.is_subset(new),
    }
}

/// Evaluates one inference property over every base extension and every
/// eligible promoted conclusion (optionally restricted to one by name).
pub fn evaluate(
    fw: &Framework,
    sem: SemanticsId,
    setting: NmrSetting,
    property: NmrProperty,
    psi_filter: Option<&str>,
    max_assumptions: usize,
) -> Result<NmrReport, NmrError> {
    let base = extensions(fw, sem, max_assumptions)?;
    let mut cases = Vec::new();
    for ext in &base {
        let eligible: Vec<SentenceId> = ext
            .conclusions
            .iter()
            .copied()
            .filter(|&s| match setting {
                NmrSetting::Strict => !fw.is_assumption(s),
                NmrSetting::Asm => fw.is_assumption(s),
            })
            .filter(|&s| psi_filter.is_none_or(|name| fw.name(s) == name))
            .collect();
        let base_conclusions: BTreeSet<String> = ext
            .conclusions
            .iter()
            .map(|&s| fw.name(s).to_owned())
            .collect();
        for psi in eligible {
            let transformed = match transform(fw, setting, psi) {
                Ok(f) => f,
                // confirming the only assumption leaves no framework
                Err(NmrError::Build(BuildError::EmptyAssumptionSet)) => {
                    cases.push(NmrCase {
                        extension: ext.member_names(fw),
                        conclusions: base_conclusions.iter().cloned().collect(),
                        psi: fw.name(psi).to_owned(),
                        verdict: CaseVerdict::Vacuous,
                        witness: None,
                    });
                    continue;
                }
                Err(e) => return Err(e),
            };
            let new_exts = extensions(&transformed, sem, max_assumptions)?;
            let new_conclusions: Vec<(Vec<String>, BTreeSet<String>)> = new_exts
                .iter()
                .map(|e| {
                    (
                        e.member_names(&transformed),
                        e.conclusion_names(&transformed).into_iter().collect(),
                    )
                })
                .collect();
            let (verdict, witness) = if new_conclusions.is_empty() {
                (CaseVerdict::Vacuous, None)
            } else {
                let sceptical_ok = new_conclusions
                    .iter()
                    .all(|(_, cn)| inclusion_holds(property.direction, &base_conclusions, cn));
                let credulous_ok = new_conclusions
                    .iter()
                    .any(|(_, cn)| inclusion_holds(property.direction, &base_conclusions, cn));
                // sceptical satisfaction entails credulous satisfaction
                debug_assert!(!sceptical_ok || credulous_ok);
                match property.mode {
                    NmrMode::Sceptical if sceptical_ok => (CaseVerdict::Holds, None),
                    NmrMode::Sceptical => {
                        let bad = new_conclusions
                            .iter()
                            .find(|(_, cn)| {
                                !inclusion_holds(property.direction, &base_conclusions, cn)
                            })
                            .expect("a sceptical violation has a witness");
                        (
                            CaseVerdict::Violated,
                            Some(NmrWitness {
                                extension: bad.0.clone(),
                                conclusions: bad.1.iter().cloned().collect(),
                            }),
                        )
                    }
                    NmrMode::Credulous if credulous_ok => (CaseVerdict::Holds, None),
                    NmrMode::Credulous => (CaseVerdict::Violated, None),
                }
            };
            cases.push(NmrCase {
                extension: ext.member_names(fw),
                conclusions: base_conclusions.iter().cloned().collect(),
                psi: fw.name(psi).to_owned(),
                verdict,
                witness,
            });
        }
    }
    let aggregate = if cases.iter().any(|c| c.verdict == CaseVerdict::Violated) {
        AggregateVerdict::Violated
    } else {
        AggregateVerdict::Holds
    };
    Ok(NmrReport {
        semantics: sem.label(),
        setting: setting.label().to_owned(),
        direction: property.direction.label().to_owned(),
        mode: property.mode.label().to_owned(),
        base_extension_count: base.len(),
        cases,
        aggregate,
    })
}
