//! One pass/fail line per acceptance criterion. Criterion 12 (command-line
//! determinism and worked scripts) lives in the cli crate's acceptance test.

use std::time::{Duration, Instant};

use formchase_core::suite::{run_criterion, SuiteConfig, CRITERIA};

/// Runtime budgets, where one is specified.
fn budget(id: u8) -> Option<Duration> {
    match id {
        1 => Some(Duration::from_secs(60)),
        3 => Some(Duration::from_secs(120)),
        9 => Some(Duration::from_secs(600)),
        _ => None,
    }
}

/// Minimum case counts, where one is specified.
fn minimum_cases(id: u8) -> u64 {
    match id {
        3 => 5000,
        // 1000 seeded S4 tuples on top of the exhaustive part
        9 => 1000,
        _ => 1,
    }
}

fn main() {
    let cfg = SuiteConfig::default();
    let mut failed = Vec::new();
    for (id, name) in CRITERIA {
        let start = Instant::now();
        let r = run_criterion(id, &cfg);
        let took = start.elapsed();
        let in_budget = budget(id).is_none_or(|b| took <= b);
        let enough = r.cases >= minimum_cases(id);
        let ok = r.passed && in_budget && enough;
        let limit = budget(id).map(|b| format!(" (budget {}s)", b.as_secs())).unwrap_or_default();
        println!(
            "criterion {id:>2} {name}: {} [{} cases, {} failures, {:.1}s{limit}]",
            if ok { "PASS" } else { "FAIL" },
            r.cases,
            r.failures,
            took.as_secs_f64()
        );
        for d in &r.details {
            println!("    {d}");
        }
        if !ok {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: PASS ({} criteria)", CRITERIA.len());
    } else {
        println!("acceptance: FAIL (criteria {failed:?})");
        std::process::exit(1);
    }
}
