use congruent::suite::{run, verify_all, CRITERIA};
use congruent::Exec;

#[test]
fn every_criterion_passes() {
    let all = verify_all(Exec::default());
    assert_eq!(all.len(), CRITERIA.len());
    for c in &all {
        let bad: Vec<String> = c.checks.iter().filter(|k| !k.pass).map(|k| k.to_string()).collect();
        assert!(c.pass(), "criterion {} {}: {bad:#?}", c.id, c.title);
    }
}

#[test]
fn unknown_criterion_fails() {
    assert!(!run(99, Exec::Sequential).pass());
}
