//! Compact assumption sets.
//!
//! Assumptions of a framework are indexed `0..n` in identifier order and a
//! set of them is a single `u64` bitmask. All subset enumeration, attack
//! checks and extension computations work on these masks, which keeps the
//! powerset machinery allocation-free. Frameworks are capped at 64
//! assumptions at construction time.

/// A set of assumptions, as a bitmask over assumption indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AsmSet(u64);

impl AsmSet {
    pub const EMPTY: AsmSet = AsmSet(0);

    pub fn singleton(index: usize) -> AsmSet {
        AsmSet(1u64 << index)
    }

    /// The full set over `n` assumptions.
    pub fn full(n: usize) -> AsmSet {
        if n == 0 {
            AsmSet(0)
        } else if n == 64 {
            AsmSet(u64::MAX)
        } else {
            AsmSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> AsmSet {
        AsmSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 & (1u64 << index) != 0
    }

    #[must_use]
    pub fn with(self, index: usize) -> AsmSet {
        AsmSet(self.0 | (1u64 << index))
    }

    #[must_use]
    pub fn without(self, index: usize) -> AsmSet {
        AsmSet(self.0 & !(1u64 << index))
    }

    #[must_use]
    pub fn union(self, other: AsmSet) -> AsmSet {
        AsmSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: AsmSet) -> AsmSet {
        AsmSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: AsmSet) -> AsmSet {
        AsmSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: AsmSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: AsmSet) -> bool {
        self != other && self.is_subset(other)
    }

    /// Indices of the members, ascending.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of the full set over `n` assumptions, in ascending
    /// cardinality (ties in ascending mask order).
    pub fn powerset_by_size(n: usize) -> Vec<AsmSet> {
        assert!(n <= 20, "powerset enumeration capped at 20 assumptions");
        let mut masks: Vec<AsmSet> = (0..1u64 << n).map(AsmSet).collect();
        masks.sort_by_key(|m| (m.len(), m.0));
        masks
    }
}

impl FromIterator<usize> for AsmSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = AsmSet::EMPTY;
        for i in iter {
            set = set.with(i);
        }
        set
    }
}

/// Inserts `candidate` into an antichain of inclusion-minimal sets.
///
/// Returns true if the antichain changed: the candidate is dropped when a
/// subset is already present, and existing supersets are evicted otherwise.
pub fn antichain_insert(antichain: &mut Vec<AsmSet>, candidate: AsmSet) -> bool {
    if antichain.iter().any(|s| s.is_subset(candidate)) {
        return false;
    }
    antichain.retain(|s| !candidate.is_subset(*s));
    antichain.push(candidate);
    true
}

/// Reduces an arbitrary collection to its inclusion-minimal elements.
pub fn minimize(sets: impl IntoIterator<Item = AsmSet>) -> Vec<AsmSet> {
    let mut antichain = Vec::new();
    for s in sets {
        antichain_insert(&mut antichain, s);
    }
    antichain.sort();
    antichain
}
