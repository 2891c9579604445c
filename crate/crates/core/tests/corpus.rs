use std::collections::BTreeSet;

use hocalc_core::verify::{verify_corpus, Status};

#[test]
fn standard_corpus_has_no_failures() {
    let summary = verify_corpus();
    let failures: Vec<String> = summary.failures().map(|r| r.to_string()).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    assert_eq!(summary.exit_code(), 0);
}

#[test]
fn check_ids_are_unique_and_sorted() {
    let summary = verify_corpus();
    let ids: Vec<&str> = summary.reports.iter().map(|r| r.id.as_str()).collect();
    let unique: BTreeSet<&str> = ids.iter().copied().collect();
    assert_eq!(unique.len(), ids.len());
    assert!(ids.windows(2).all(|w| w[0] <= w[1]));
    assert!(summary.reports.iter().any(|r| r.status == Status::Flagged));
}
