use nuchi_core::corpus::corpus;
use nuchi_core::verify::{run_all, RunOptions};
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let report = run_all(&corpus(), &RunOptions::default());
    let elapsed = t0.elapsed();
    print!("{}", report.render_text());
    println!("entries: {}, failures: {}, oversize: {}, elapsed: {elapsed:.2?}",
        report.entries.len(), report.any_failure(), report.any_oversize());
}
