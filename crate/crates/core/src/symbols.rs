//! Interned sentence identifiers.
//!
//! Every sentence of the language is an opaque, case-sensitive symbol.
//! Symbols are interned once per framework; equality and ordering of
//! [`SentenceId`]s are only meaningful within the table that issued them.

use std::collections::HashMap;

/// Handle to an interned sentence symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SentenceId(pub(crate) u32);

impl SentenceId {
    pub(crate) fn index(self) -> usize {
        self.0 as usize
    }
}

/// Append-only symbol interner.
#[derive(Debug, Clone, Default)]
pub struct SymbolTable {
    names: Vec<String>,
    index: HashMap<String, SentenceId>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Interns `name`, returning the existing id if already present.
    ///
    /// Panics on empty identifiers; callers validate input first.
    pub fn intern(&mut self, name: &str) -> SentenceId {
        assert!(!name.is_empty(), "sentence identifiers must be non-empty");
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = SentenceId(u32::try_from(self.names.len()).expect("symbol table overflow"));
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), id);
        id
    }

    pub fn lookup(&self, name: &str) -> Option<SentenceId> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: SentenceId) -> &str {
        &self.names[id.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = SentenceId> + '_ {
        (0..self.names.len()).map(|i| SentenceId(i as u32))
    }
}
