//! The full check suite over the built-in corpus, as `pebbling verify` runs it.

use pebbling::harness::{cmd_verify, default_corpus, VerifyOptions};

fn main() {
    let outcome = cmd_verify(&default_corpus(), &VerifyOptions::default());
    for r in &outcome.reports {
        let failed: Vec<_> = r.failed_checks().map(|c| c.name.as_str()).collect();
        println!(
            "{:<16} f = {:<3} best bound {:<4} {} checks{}",
            r.graph_id,
            r.exact_value().unwrap_or(0),
            r.best_bound.as_ref().map_or(0, |b| b.value),
            r.checks.len(),
            if failed.is_empty() { String::new() } else { format!(", failed {failed:?}") }
        );
    }
    for c in &outcome.global_checks {
        println!("global {:<26} {}", c.name, if c.passed { "ok" } else { "FAILED" });
    }
    for n in &outcome.notes {
        println!("note: {n}");
    }
    std::process::exit(outcome.exit_code());
}
