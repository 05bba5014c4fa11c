//! Each mutated presentation trips exactly the axiom family it breaks, and
//! the sign-mutated Λ breaks only identities that involve Λ.

use std::collections::BTreeSet;

use dgcyc::catalog::{self, negative_control_diagnostics, NEGATIVE_CONTROLS};
use dgcyc::cyclic::{verify_cocyclic_identities, SignMutatedLambda, Standard};
use dgcyc::dga::random::random_pool;
use dgcyc::hochschild::cochains_of;

#[test]
fn controls_break_one_family_each() {
    let mut families = BTreeSet::new();
    for c in NEGATIVE_CONTROLS {
        let diags = negative_control_diagnostics(c);
        assert!(!diags.is_empty(), "{} validates", c.name);
        for d in &diags {
            assert_eq!(d.family(), c.broken, "{}: {d}", c.name);
        }
        families.insert(c.broken);
    }
    assert_eq!(
        families.len(),
        NEGATIVE_CONTROLS.len(),
        "controls should cover distinct families"
    );
}

#[test]
fn sign_mutated_lambda_fails_only_lambda_identities() {
    let algebras = catalog::ALGEBRAS
        .iter()
        .map(|n| catalog::algebra(n).unwrap())
        .chain(random_pool(5, 6));
    for a in algebras {
        let c = cochains_of(&a);
        let q = 2 * a.top_degree();
        assert!(verify_cocyclic_identities(&Standard(c.clone()), 3, q).all_hold());
        let failed = verify_cocyclic_identities(&SignMutatedLambda(c), 3, q).failed_identities();
        assert!(!failed.is_empty(), "{}", a.name());
        assert!(failed.iter().all(|i| i.involves_lambda()), "{}: {failed:?}", a.name());
    }
}
