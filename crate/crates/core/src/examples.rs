//! Shared framework fixtures for unit tests.
//!
//! Small frameworks exercising each interesting shape: plain attack,
//! preference-reversed attack, joint attacks with and without contrapositive
//! rules, and a family where a defended assumption loses its defence once a
//! derived sentence is promoted to a fact.

use crate::framework::{Framework, FrameworkBuilder};

fn with_fresh_contraries(builder: &mut FrameworkBuilder, assumptions: &[&str]) {
    for name in assumptions {
        builder.assumption(name);
        let contrary = format!("c_{name}");
        builder.contrary(name, &contrary);
    }
}

/// Two assumptions, one attack: `c_alpha <- beta`, no preferences.
pub fn plain_pair() -> Framework {
    let mut b = FrameworkBuilder::new();
    with_fresh_contraries(&mut b, &["alpha", "beta"]);
    b.rule("c_alpha", ["beta"]);
    b.build().unwrap()
}

/// [`plain_pair`] plus `beta < alpha`: the attack on alpha reverses.
pub fn reversed_pair() -> Framework {
    let mut b = FrameworkBuilder::new();
    with_fresh_contraries(&mut b, &["alpha", "beta"]);
    b.rule("c_alpha", ["beta"]);
    b.prefer_less("beta", "alpha");
    b.build().unwrap()
}

/// Joint attack `c_beta <- alpha, gamma` with `alpha < beta`,
/// `alpha < gamma` and no contrapositive rules.
pub fn joint_attack() -> Framework {
    let mut b = FrameworkBuilder::new();
    with_fresh_contraries(&mut b, &["alpha", "beta", "gamma"]);
    b.rule("c_beta", ["alpha", "gamma"]);
    b.prefer_less("alpha", "beta");
    b.prefer_less("alpha", "gamma");
    b.build().unwrap()
}

/// [`joint_attack`] closed under contraposition by adding
/// `c_alpha <- beta, gamma` and `c_gamma <- alpha, beta`.
pub fn joint_attack_closed() -> Framework {
    let mut b = FrameworkBuilder::new();
    with_fresh_contraries(&mut b, &["alpha", "beta", "gamma"]);
    b.rule("c_beta", ["alpha", "gamma"]);
    b.rule("c_alpha", ["beta", "gamma"]);
    b.rule("c_gamma", ["alpha", "beta"]);
    b.prefer_less("alpha", "beta");
    b.prefer_less("alpha", "gamma");
    b.build().unwrap()
}

/// Six assumptions where `{alpha}` defends `{rho}` against
/// `{beta, chi, p, q}` only through a reverse attack that needs `p` inside
/// the attacking support.
pub fn fragile_defence() -> Framework {
    let mut b = FrameworkBuilder::new();
    with_fresh_contraries(&mut b, &["alpha", "beta", "p", "q", "rho", "chi"]);
    b.rule("psi", ["p", "q"]);
    b.rule("c_rho", ["beta", "chi", "psi"]);
    b.rule("c_alpha", ["beta", "chi", "p"]);
    b.rule("c_beta", ["alpha", "chi", "p"]);
    b.rule("c_chi", ["chi"]);
    b.prefer_less("beta", "alpha");
    b.build().unwrap()
}

/// [`fragile_defence`] with `psi` already a fact; the defence of `rho` is
/// gone because the attacker no longer needs `p` or `q`.
pub fn fragile_defence_fact() -> Framework {
    let mut b = FrameworkBuilder::new();
    with_fresh_contraries(&mut b, &["alpha", "beta", "p", "q", "rho", "chi"]);
    b.rule("psi", ["p", "q"]);
    b.rule("c_rho", ["beta", "chi", "psi"]);
    b.rule("c_alpha", ["beta", "chi", "p"]);
    b.rule("c_beta", ["alpha", "chi", "p"]);
    b.rule("c_chi", ["chi"]);
    b.fact("psi");
    b.prefer_less("beta", "alpha");
    b.build().unwrap()
}

/// Variant routing the attack on alpha through an intermediate sentence `y`
/// deducible from `p`; `c_beta <- alpha, chi` keeps weak contraposition
/// intact once `y` becomes a fact.
pub fn fragile_defence_indirect() -> Framework {
    let mut b = FrameworkBuilder::new();
    with_fresh_contraries(&mut b, &["alpha", "beta", "p", "q", "rho", "chi"]);
    b.rule("psi", ["p", "q"]);
    b.rule("c_rho", ["beta", "chi", "psi"]);
    b.rule("c_alpha", ["beta", "chi", "y"]);
    b.rule("y", ["p"]);
    b.rule("c_beta", ["alpha", "chi", "p"]);
    b.rule("c_chi", ["chi"]);
    b.rule("c_beta", ["alpha", "chi"]);
    b.fact("psi");
    b.prefer_less("beta", "alpha");
    b.build().unwrap()
}
