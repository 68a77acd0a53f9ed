use nuchi_core::corpus::corpus;
use nuchi_core::filter::TagFilter;
use nuchi_core::verify::{run_all, Profile, RunOptions};
use std::time::Instant;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "z5xz5".into());
    let entries: Vec<_> = corpus().into_iter().filter(|e| e.name == name).collect();
    let opts = RunOptions {
        profile: Profile::Full,
        filter: TagFilter::All,
        ..Default::default()
    };
    let t0 = Instant::now();
    let report = run_all(&entries, &opts);
    println!("{}", report.render_text());
    println!("elapsed: {:.2?}, failures: {}", t0.elapsed(), report.any_failure());
}
