//! Run the acceptance criteria and print one line per criterion.
//!
//! `cargo run --release --example acceptance_suite -- quick`

use skewhook::verify::{run_all, Level};

fn main() -> skewhook::Result<()> {
    let level: Level = std::env::args().nth(1).unwrap_or_else(|| "desk".into()).parse()?;
    let reports = run_all(level, true);
    for r in &reports {
        println!("{}", r.line());
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(2);
    }
    Ok(())
}
