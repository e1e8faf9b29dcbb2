//! Seeded random framework generation for property testing and sweeps.

use rand::prelude::IndexedRandom;
use rand::Rng;

use crate::deduction::minimal_supports;
use crate::framework::{Framework, FrameworkBuilder};

/// Shape of the generated frameworks.
#[derive(Debug, Clone)]
pub struct GenConfig {
    pub min_assumptions: usize,
    pub max_assumptions: usize,
    pub max_rules: usize,
    /// Extra non-assumption sentences available as rule heads and bodies.
    pub extra_sentences: usize,
    /// Probability that an assumption's contrary is another assumption
    /// instead of a fresh sentence.
    pub assumption_contrary_prob: f64,
    /// Probability that a generated rule is a fact.
    pub fact_prob: f64,
    pub max_body: usize,
    pub max_preference_edges: usize,
    /// Probability of generating a total preference chain instead of random
    /// edges.
    pub total_preorder_prob: f64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            min_assumptions: 2,
            max_assumptions: 6,
            max_rules: 10,
            extra_sentences: 3,
            assumption_contrary_prob: 0.15,
            fact_prob: 0.15,
            max_body: 3,
            max_preference_edges: 3,
            total_preorder_prob: 0.2,
        }
    }
}

impl GenConfig {
    /// Fresh contraries only, so that contraposition can be restored by
    /// adding rules.
    pub fn repairable() -> Self {
        GenConfig {
            assumption_contrary_prob: 0.0,
            ..GenConfig::default()
        }
    }
}

/// Draws one random framework. All names are `a0..`, `s0..`, `c_a0..`.
pub fn random_framework(rng: &mut impl Rng, cfg: &GenConfig) -> Framework {
    let n = rng.random_range(cfg.min_assumptions..=cfg.max_assumptions);
    let asm_names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    let extra_names: Vec<String> = (0..cfg.extra_sentences).map(|i| format!("s{i}")).collect();
    let contrary_names: Vec<String> = asm_names.iter().map(|a| format!("c_{a}")).collect();

    let mut builder = FrameworkBuilder::new();
    for (i, name) in asm_names.iter().enumerate() {
        builder.assumption(name);
        if rng.random_bool(cfg.assumption_contrary_prob) && n > 1 {
            let mut other = rng.random_range(0..n);
            if other == i {
                other = (other + 1) % n;
            }
            builder.contrary(name, &asm_names[other]);
        } else {
            builder.contrary(name, &contrary_names[i]);
        }
    }

    // rule heads must not be assumptions; bodies may mention anything
    let heads: Vec<&String> = contrary_names.iter().chain(extra_names.iter()).collect();
    let body_pool: Vec<&String> = asm_names
        .iter()
        .chain(extra_names.iter())
        .chain(contrary_names.iter())
        .collect();
    let rule_count = rng.random_range(0..=cfg.max_rules);
    for _ in 0..rule_count {
        let head = heads.choose(rng).expect("head pool is non-empty");
        if rng.random_bool(cfg.fact_prob) {
            builder.fact(head);
            continue;
        }
        let body_len = rng.random_range(1..=cfg.max_body);
        let body: Vec<&str> = (0..body_len)
            .map(|_| body_pool.choose(rng).expect("body pool is non-empty").as_str())
            .collect();
        builder.rule(head, body);
    }

    if rng.random_bool(cfg.total_preorder_prob) {
        // a random chain over all assumptions makes the preference total
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.random_range(0..=i));
        }
        for pair in order.windows(2) {
            builder.prefer_leq(&asm_names[pair[0]], &asm_names[pair[1]]);
        }
    } else {
        let edges = rng.random_range(0..=cfg.max_preference_edges);
        for _ in 0..edges {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            builder.prefer_leq(&asm_names[a], &asm_names[b]);
        }
    }

    builder.build().expect("generated frameworks are valid")
}

/// Closes a framework under contraposition by adding the missing
/// contrapositive rules until a fixpoint.
///
/// Each missing obligation `(support A of the contrary of b, a in A)` is
/// repaired by the rule `contrary(a) <- (A minus a) plus b`; new rules
/// create new minimal supports, so the loop re-scans until clean. Returns
/// `None` when a repair would need an assumption as a rule head, i.e. when
/// some relevant contrary is itself an assumption.
pub fn close_under_contraposition(fw: &Framework) -> Option<Framework> {
    let mut current = fw.clone();
    for _round in 0..256 {
        let mut missing: Vec<(String, Vec<String>)> = Vec::new();
        for b in 0..current.assumption_count() {
            for &support in minimal_supports(&current, current.contrary_at(b)) {
                for a in support.iter() {
                    let premise = support.without(a).with(b);
                    let contrary = current.contrary_at(a);
                    if crate::deduction::derives(&current, premise, contrary) {
                        continue;
                    }
                    if current.is_assumption(contrary) {
                        return None;
                    }
                    let head = current.name(contrary).to_owned();
                    let body = current.set_names(premise);
                    if !missing.contains(&(head.clone(), body.clone())) {
                        missing.push((head, body));
                    }
                }
            }
        }
        if missing.is_empty() {
            return Some(current);
        }
        let mut builder = current.to_builder();
        for (head, body) in missing {
            builder.rule(&head, body.iter().map(String::as_str));
        }
        current = builder.build().expect("repair preserves validity");
    }
    unreachable!("contraposition repair did not reach a fixpoint");
}
