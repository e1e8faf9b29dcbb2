//! The framework data model.
//!
//! A framework bundles a rule base, a non-empty assumption set, a total
//! contrary map and a preference preorder over the assumptions. Instances
//! are validated and immutable after construction; every engine operation
//! takes `&Framework` and is safe to run concurrently.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::OnceLock;

use thiserror::Error;

use crate::preorder::Preorder;
use crate::set::AsmSet;
use crate::symbols::{SentenceId, SymbolTable};

/// An inference rule `head <- body`. An empty body marks a fact.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rule {
    pub head: SentenceId,
    pub body: BTreeSet<SentenceId>,
}

/// Construction-time validation failures.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("the assumption set must be non-empty")]
    EmptyAssumptionSet,
    #[error("assumption `{assumption}` occurs as the head of a rule; only flat frameworks are supported")]
    NotFlat { assumption: String },
    #[error("assumption `{assumption}` has no contrary")]
    MissingContrary { assumption: String },
    #[error("preference mentions `{name}`, which is not an assumption")]
    UnknownAssumptionInPreference { name: String },
    #[error("strict preference `{a} < {b}` is contradicted by the preorder closure")]
    InconsistentStrictPreference { a: String, b: String },
    #[error("frameworks are limited to 64 assumptions, got {count}")]
    TooManyAssumptions { count: usize },
}

/// Incrementally collects declarations, then validates into a [`Framework`].
#[derive(Debug, Clone, Default)]
pub struct FrameworkBuilder {
    symbols: SymbolTable,
    rules: Vec<Rule>,
    assumptions: BTreeSet<SentenceId>,
    contraries: HashMap<SentenceId, SentenceId>,
    leq_edges: Vec<(SentenceId, SentenceId)>,
    strict_edges: Vec<(SentenceId, SentenceId)>,
}

impl FrameworkBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sentence(&mut self, name: &str) -> SentenceId {
        self.symbols.intern(name)
    }

    pub fn assumption(&mut self, name: &str) -> SentenceId {
        let id = self.symbols.intern(name);
        self.assumptions.insert(id);
        id
    }

    pub fn contrary(&mut self, assumption: &str, contrary: &str) -> &mut Self {
        let a = self.symbols.intern(assumption);
        let c = self.symbols.intern(contrary);
        self.contraries.insert(a, c);
        self
    }

    pub fn rule<'a>(&mut self, head: &str, body: impl IntoIterator<Item = &'a str>) -> &mut Self {
        let head = self.symbols.intern(head);
        let body = body.into_iter().map(|s| self.symbols.intern(s)).collect();
        self.rules.push(Rule { head, body });
        self
    }

    pub fn fact(&mut self, head: &str) -> &mut Self {
        self.rule(head, [])
    }

    /// Declares `a <= b`.
    pub fn prefer_leq(&mut self, a: &str, b: &str) -> &mut Self {
        let a = self.symbols.intern(a);
        let b = self.symbols.intern(b);
        self.leq_edges.push((a, b));
        self
    }

    /// Declares `a < b`: stored as the edge `a <= b`, and after closure the
    /// builder rejects the input if `b <= a` also ended up holding.
    pub fn prefer_less(&mut self, a: &str, b: &str) -> &mut Self {
        let a = self.symbols.intern(a);
        let b = self.symbols.intern(b);
        self.leq_edges.push((a, b));
        self.strict_edges.push((a, b));
        self
    }

    pub fn build(self) -> Result<Framework, BuildError> {
        let FrameworkBuilder {
            symbols,
            rules,
            assumptions,
            contraries,
            leq_edges,
            strict_edges,
        } = self;

        if assumptions.is_empty() {
            return Err(BuildError::EmptyAssumptionSet);
        }
        if assumptions.len() > 64 {
            return Err(BuildError::TooManyAssumptions {
                count: assumptions.len(),
            });
        }

        for rule in &rules {
            if assumptions.contains(&rule.head) {
                return Err(BuildError::NotFlat {
                    assumption: symbols.name(rule.head).to_owned(),
                });
            }
        }

        // Assumption indices in identifier order keep all set-valued output
        // deterministic.
        let mut ordered: Vec<SentenceId> = assumptions.iter().copied().collect();
        ordered.sort_by(|a, b| symbols.name(*a).cmp(symbols.name(*b)));
        let asm_index: HashMap<SentenceId, usize> =
            ordered.iter().enumerate().map(|(i, &id)| (id, i)).collect();

        let mut contrary_by_index = Vec::with_capacity(ordered.len());
        for &a in &ordered {
            match contraries.get(&a) {
                Some(&c) => contrary_by_index.push(c),
                None => {
                    return Err(BuildError::MissingContrary {
                        assumption: symbols.name(a).to_owned(),
                    })
                }
            }
        }

        let mut index_edges = Vec::with_capacity(leq_edges.len());
        for &(a, b) in &leq_edges {
            match (asm_index.get(&a), asm_index.get(&b)) {
                (Some(&ia), Some(&ib)) => index_edges.push((ia, ib)),
                (None, _) => {
                    return Err(BuildError::UnknownAssumptionInPreference {
                        name: symbols.name(a).to_owned(),
                    })
                }
                (_, None) => {
                    return Err(BuildError::UnknownAssumptionInPreference {
                        name: symbols.name(b).to_owned(),
                    })
                }
            }
        }
        let preorder = Preorder::from_edges(ordered.len(), &index_edges);

        for &(a, b) in &strict_edges {
            let (ia, ib) = (asm_index[&a], asm_index[&b]);
            if preorder.leq(ib, ia) {
                return Err(BuildError::InconsistentStrictPreference {
                    a: symbols.name(a).to_owned(),
                    b: symbols.name(b).to_owned(),
                });
            }
        }

        // Collapse duplicate rules; rule multiplicity never matters.
        let mut unique_rules = rules;
        unique_rules.sort();
        unique_rules.dedup();

        Ok(Framework {
            symbols,
            rules: unique_rules,
            assumptions: ordered,
            asm_index,
            contraries: contrary_by_index,
            preorder,
            supports: OnceLock::new(),
        })
    }
}

/// A validated, immutable flat framework with preferences.
#[derive(Debug, Clone)]
pub struct Framework {
    symbols: SymbolTable,
    rules: Vec<Rule>,
    assumptions: Vec<SentenceId>,
    asm_index: HashMap<SentenceId, usize>,
    contraries: Vec<SentenceId>,
    preorder: Preorder,
    pub(crate) supports: OnceLock<Vec<Vec<AsmSet>>>,
}

impl Framework {
    pub fn builder() -> FrameworkBuilder {
        FrameworkBuilder::new()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Assumptions in identifier order; positions are the set indices.
    pub fn assumptions(&self) -> &[SentenceId] {
        &self.assumptions
    }

    pub fn assumption_count(&self) -> usize {
        self.assumptions.len()
    }

    pub fn all_assumptions(&self) -> AsmSet {
        AsmSet::full(self.assumptions.len())
    }

    pub fn is_assumption(&self, id: SentenceId) -> bool {
        self.asm_index.contains_key(&id)
    }

    pub fn assumption_index(&self, id: SentenceId) -> Option<usize> {
        self.asm_index.get(&id).copied()
    }

    pub fn assumption_at(&self, index: usize) -> SentenceId {
        self.assumptions[index]
    }

    /// Contrary of the assumption at `index`.
    pub fn contrary_at(&self, index: usize) -> SentenceId {
        self.contraries[index]
    }

    pub fn contrary_of(&self, id: SentenceId) -> Option<SentenceId> {
        self.assumption_index(id).map(|i| self.contraries[i])
    }

    pub fn preorder(&self) -> &Preorder {
        &self.preorder
    }

    /// Strict preference between assumptions, by index.
    pub fn lt_idx(&self, a: usize, b: usize) -> bool {
        self.preorder.lt(a, b)
    }

    pub fn leq_idx(&self, a: usize, b: usize) -> bool {
        self.preorder.leq(a, b)
    }

    /// Strict preference between assumption sentences.
    pub fn lt(&self, a: SentenceId, b: SentenceId) -> bool {
        match (self.assumption_index(a), self.assumption_index(b)) {
            (Some(ia), Some(ib)) => self.preorder.lt(ia, ib),
            _ => false,
        }
    }

    pub fn leq(&self, a: SentenceId, b: SentenceId) -> bool {
        match (self.assumption_index(a), self.assumption_index(b)) {
            (Some(ia), Some(ib)) => self.preorder.leq(ia, ib),
            _ => false,
        }
    }

    /// True iff the preference is total over the given assumptions.
    pub fn is_total_over(&self, over: AsmSet) -> bool {
        self.preorder.is_total(over)
    }

    /// True iff the strict part of the preference is empty.
    pub fn strict_part_empty(&self) -> bool {
        let n = self.assumptions.len();
        (0..n).all(|a| (0..n).all(|b| !self.preorder.lt(a, b)))
    }

    pub fn sentence(&self, name: &str) -> Option<SentenceId> {
        self.symbols.lookup(name)
    }

    pub fn name(&self, id: SentenceId) -> &str {
        self.symbols.name(id)
    }

    /// Every sentence mentioned by the framework.
    pub fn language(&self) -> impl Iterator<Item = SentenceId> + '_ {
        self.symbols.ids()
    }

    pub fn language_size(&self) -> usize {
        self.symbols.len()
    }

    pub fn asm_set_of(&self, ids: impl IntoIterator<Item = SentenceId>) -> Option<AsmSet> {
        let mut set = AsmSet::EMPTY;
        for id in ids {
            set = set.with(self.assumption_index(id)?);
        }
        Some(set)
    }

    /// Parses `names` into an assumption set; unknown or non-assumption
    /// names yield `None`.
    pub fn asm_set_from_names<'a>(
        &self,
        names: impl IntoIterator<Item = &'a str>,
    ) -> Option<AsmSet> {
        let mut set = AsmSet::EMPTY;
        for name in names {
            let id = self.sentence(name)?;
            set = set.with(self.assumption_index(id)?);
        }
        Some(set)
    }

    pub fn set_names(&self, set: AsmSet) -> Vec<String> {
        set.iter()
            .map(|i| self.name(self.assumptions[i]).to_owned())
            .collect()
    }

    pub fn sentence_names(&self, ids: impl IntoIterator<Item = SentenceId>) -> Vec<String> {
        let mut names: Vec<String> = ids.into_iter().map(|id| self.name(id).to_owned()).collect();
        names.sort();
        names
    }

    /// Rebuilds this framework with a different preference relation given by
    /// `leq` edges over assumption names. Used by the principle checkers.
    pub fn with_preferences(
        &self,
        leq_edges: &[(String, String)],
    ) -> Result<Framework, BuildError> {
        let mut builder = self.to_builder();
        builder.leq_edges.clear();
        builder.strict_edges.clear();
        for (a, b) in leq_edges {
            builder.prefer_leq(a, b);
        }
        builder.build()
    }

    /// Same framework with all preferences removed (reflexive-only preorder).
    pub fn without_preferences(&self) -> Framework {
        self.with_preferences(&[])
            .expect("stripping preferences cannot invalidate a framework")
    }

    /// Copies the declarations of this framework back into a builder.
    pub fn to_builder(&self) -> FrameworkBuilder {
        let mut builder = FrameworkBuilder::new();
        for rule in &self.rules {
            let head = self.name(rule.head).to_owned();
            let body: Vec<String> = rule.body.iter().map(|&s| self.name(s).to_owned()).collect();
            builder.rule(&head, body.iter().map(String::as_str));
        }
        for (i, &a) in self.assumptions.iter().enumerate() {
            let name = self.name(a).to_owned();
            builder.assumption(&name);
            let contrary = self.name(self.contraries[i]).to_owned();
            builder.contrary(&name, &contrary);
        }
        for (ia, ib) in self.preorder.edges() {
            let a = self.name(self.assumptions[ia]).to_owned();
            let b = self.name(self.assumptions[ib]).to_owned();
            builder.prefer_leq(&a, &b);
        }
        builder
    }

    /// Structural comparison by names: same rules, assumptions, contraries
    /// and preorder, regardless of interner layout.
    pub fn structurally_equal(&self, other: &Framework) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    fn canonical_form(&self) -> CanonicalForm {
        let rules = self
            .rules
            .iter()
            .map(|r| {
                (
                    self.name(r.head).to_owned(),
                    r.body.iter().map(|&s| self.name(s).to_owned()).collect(),
                )
            })
            .collect();
        let contraries = self
            .assumptions
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                (
                    self.name(a).to_owned(),
                    self.name(self.contraries[i]).to_owned(),
                )
            })
            .collect();
        let prefs = self
            .preorder
            .edges()
            .into_iter()
            .map(|(ia, ib)| {
                (
                    self.name(self.assumptions[ia]).to_owned(),
                    self.name(self.assumptions[ib]).to_owned(),
                )
            })
            .collect();
        (rules, contraries, prefs)
    }
}

type CanonicalForm = (
    BTreeSet<(String, BTreeSet<String>)>,
    BTreeMap<String, String>,
    BTreeSet<(String, String)>,
);
