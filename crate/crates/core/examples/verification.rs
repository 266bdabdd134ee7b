//! Running a verification suite from code.
//!
//! Run with `cargo run --example verification`.

use macdonald_interp::verify::{run_timed, Tally, VerifyConfig, SUITES};

fn main() {
    println!("suites: {}", SUITES.join(", "));
    let cfg = VerifyConfig { max_n: Some(3), ..VerifyConfig::default() };
    for suite in ["golden", "hecke-relations", "twoline-recursion"] {
        let (reports, elapsed) = run_timed(suite, &cfg).unwrap();
        let tally = Tally::of(&reports);
        println!("{suite}: {} pass, {} fail, {} error in {:.2?}", tally.pass, tally.fail, tally.error, elapsed);
        if let Some(first) = reports.first() {
            println!("  {}", first.to_json());
        }
    }
}
