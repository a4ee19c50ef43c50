//! The `selftest` verb: runs the acceptance suite and renders the results.

use serde::Serialize;

use formchase_core::suite::{run_suite, CriterionResult, HomCoverage, SuiteConfig};

use crate::exec::Format;

#[derive(Serialize)]
struct CriterionRecord<'a> {
    id: u8,
    name: &'a str,
    passed: bool,
    cases: u64,
    failures: u64,
    details: &'a [String],
}

#[derive(Serialize)]
struct SuiteRecord<'a> {
    seed: u64,
    max_order: usize,
    image_homs: &'a str,
    passed: bool,
    criteria: Vec<CriterionRecord<'a>>,
}

fn coverage(c: HomCoverage) -> &'static str {
    match c {
        HomCoverage::All => "all",
        HomCoverage::OrbitRepresentatives => "orbit-representatives",
    }
}

pub fn text_line(r: &CriterionResult) -> String {
    let mut out = format!(
        "criterion {} {}: {} ({} cases, {} failures)\n",
        r.id,
        r.name,
        if r.passed { "PASS" } else { "FAIL" },
        r.cases,
        r.failures
    );
    for d in &r.details {
        out.push_str(&format!("    {d}\n"));
    }
    out
}

/// Runs the suite, streaming text results to `emit` as they complete; JSON
/// is emitted once at the end. Returns whether every criterion passed.
pub fn selftest(cfg: &SuiteConfig, format: Format, mut emit: impl FnMut(&str)) -> bool {
    let results = run_suite(cfg, |r| {
        if format == Format::Text {
            emit(&text_line(r));
        }
    });
    let passed = results.iter().all(|r| r.passed) && !results.is_empty();
    match format {
        Format::Text => emit(&format!(
            "selftest: {} ({} of {} criteria passed)\n",
            if passed { "PASS" } else { "FAIL" },
            results.iter().filter(|r| r.passed).count(),
            results.len()
        )),
        Format::Json => {
            let record = SuiteRecord {
                seed: cfg.seed,
                max_order: cfg.max_order,
                image_homs: coverage(cfg.image_homs),
                passed,
                criteria: results
                    .iter()
                    .map(|r| CriterionRecord {
                        id: r.id,
                        name: r.name,
                        passed: r.passed,
                        cases: r.cases,
                        failures: r.failures,
                        details: &r.details,
                    })
                    .collect(),
            };
            emit(&(serde_json::to_string_pretty(&record).expect("suite record serializes") + "\n"));
        }
    }
    passed
}
