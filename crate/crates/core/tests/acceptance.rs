//! Runs every acceptance check and prints one line per criterion.
//! Exits nonzero if any check fails.

use brauer_core::checks;

fn main() {
    let outcomes = checks::run_all();
    println!();
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("\nacceptance: {} passed, {failed} failed", outcomes.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
