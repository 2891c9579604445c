mod common;

use hocalc_core::verify::verify_corpus_with;

#[test]
fn every_single_rule_mutation_is_caught() {
    for (name, rules) in common::mutants() {
        let summary = verify_corpus_with(rules.as_ref());
        assert_eq!(summary.exit_code(), 1, "mutated rule went unnoticed: {name}");
        assert!(summary.failures().all(|r| !r.expected.is_empty() && !r.actual.is_empty()));
    }
}
