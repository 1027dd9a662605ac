//! Acceptance suite: one line per criterion, all must pass.

use fillsys::acceptance::run_all;
use fillsys::rng::DEFAULT_SEED;

#[test]
fn acceptance_criteria() {
    let report = run_all(DEFAULT_SEED);
    let mut failed = 0usize;
    for c in &report.criteria {
        println!(
            "criterion {:>2} [{}] {:<40} ({:.2}s) {}",
            c.id,
            if c.passed { "pass" } else { "FAIL" },
            c.name,
            c.seconds,
            c.detail
        );
        if !c.passed {
            failed += 1;
        }
    }
    assert_eq!(failed, 0, "{failed} criteria failed");
}

#[test]
fn genus1_oracle_survives_seed_variation() {
    for seed in [1u64, 42, 0xDEAD_BEEF] {
        let c = fillsys::acceptance::criterion_genus1_reduction(seed);
        assert!(c.passed, "seed {seed}: {}", c.detail);
    }
}
