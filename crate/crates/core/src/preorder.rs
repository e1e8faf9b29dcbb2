//! Preference preorders over assumption indices.
//!
//! A preorder is a reflexive, transitive relation `leq`. The strict part
//! `lt(a, b)` is derived as `leq(a, b) && !leq(b, a)` and never stored.

use crate::set::AsmSet;

/// Reflexive-transitively closed preference relation on indices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    n: usize,
    leq: Vec<bool>,
}

impl Preorder {
    /// The discrete preorder: only `a <= a` holds.
    pub fn reflexive(n: usize) -> Self {
        let mut p = Preorder {
            n,
            leq: vec![false; n * n],
        };
        for i in 0..n {
            p.set(i, i);
        }
        p
    }

    /// Builds the reflexive-transitive closure of the given `leq` edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut p = Preorder::reflexive(n);
        for &(a, b) in edges {
            p.insert_edge(a, b);
        }
        p
    }

    fn set(&mut self, a: usize, b: usize) {
        self.leq[a * self.n + b] = true;
    }

    /// Adds `a <= b` and recomputes the closure.
    pub fn insert_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.n && b < self.n);
        self.set(a, b);
        self.close();
    }

    /// Reflexive-transitive closure (Warshall).
    pub fn close(&mut self) {
        let n = self.n;
        for i in 0..n {
            self.set(i, i);
        }
        for k in 0..n {
            for i in 0..n {
                if self.leq[i * n + k] {
                    for j in 0..n {
                        if self.leq[k * n + j] {
                            self.set(i, j);
                        }
                    }
                }
            }
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    /// Strict comparison: `a < b` iff `a <= b` and not `b <= a`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) && !self.leq(b, a)
    }

    /// True iff every pair in `over` is comparable.
    pub fn is_total(&self, over: AsmSet) -> bool {
        let members: Vec<usize> = over.iter().collect();
        for (k, &a) in members.iter().enumerate() {
            for &b in &members[k + 1..] {
                if !self.leq(a, b) && !self.leq(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Non-reflexive `leq` pairs, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && self.leq(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Restriction to the members of `keep`, reindexed by ascending member
    /// order. Restricting a closed preorder stays closed.
    pub fn restrict(&self, keep: AsmSet) -> Preorder {
        let members: Vec<usize> = keep.iter().collect();
        let m = members.len();
        let mut p = Preorder::reflexive(m);
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                if self.leq(a, b) {
                    p.set(i, j);
                }
            }
        }
        p
    }
}
