//! Runs the ten acceptance criteria at desk level and prints one line each.
//!
//! Lines go straight to the stderr handle, which the test harness does not
//! capture, so they show up in a plain `cargo test` log.

use std::io::Write;

use skewhook::verify::{run_all, Level};

#[test]
fn acceptance() {
    let reports = run_all(Level::Desk, true);
    let mut out = String::from("\n");
    for r in &reports {
        out += &r.line();
        out.push('\n');
        for note in &r.notes {
            out += &format!("       {note}\n");
        }
    }
    let _ = std::io::stderr().write_all(out.as_bytes());
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| (r.id, r.failures.clone())).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:#?}");
}
