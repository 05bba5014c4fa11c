//! Emitting a presentation and parsing it back is lossless.

use proptest::prelude::*;

use dgcyc::catalog;
use dgcyc::dga::random::random_dga;
use dgcyc::dga::validate_dga;
use dgcyc::format::{emit, parse, strip_lines};
use dgcyc::presentation::Presentation;

#[test]
fn catalog_entries_roundtrip() {
    for e in catalog::ENTRIES {
        let p = parse(e.source).unwrap();
        let again = parse(&emit(&p)).unwrap();
        assert_eq!(strip_lines(&p), strip_lines(&again), "{}", e.name);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_dgas_roundtrip(seed in any::<u64>()) {
        let a = random_dga(seed);
        let p = Presentation::Algebra(a.to_presentation());
        let text = emit(&p);
        let back = parse(&text).unwrap();
        prop_assert_eq!(strip_lines(&back), strip_lines(&p));
        let Presentation::Algebra(q) = back else { unreachable!() };
        prop_assert_eq!(validate_dga(&q).unwrap(), a);
        // Emitting is deterministic.
        prop_assert_eq!(emit(&Presentation::Algebra(q)), text);
    }
}
