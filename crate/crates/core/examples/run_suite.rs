//! Runs a named verification suite and prints its report.
//!
//! `cargo run --release --example run_suite -- boolean-square`

use lattice_vote::verify::{suites, VerifyOptions};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "all".into());
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let opts = VerifyOptions::default().with_workers(workers);
    match suites::run(&name, None, None, None, &opts) {
        Ok(report) => {
            print!("{}", report.to_text());
            println!("{} ms", report.elapsed_ms);
            if !report.passed() {
                std::process::exit(1);
            }
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    }
}
