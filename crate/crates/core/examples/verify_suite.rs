//! Run one identity suite and print its report.
//!
//! `cargo run --release --example verify_suite -- lemmas`

use g2kit::model::Model;
use g2kit::verify::{run_suite, Suite};

fn main() -> g2kit::error::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "bilinear".into());
    let suite: Suite = name.parse()?;
    let model = Model::build()?;
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = run_suite(suite, &model, workers)?;
    print!("{}", report.render());
    eprintln!("{:.2}s", report.elapsed.as_secs_f64());
    if !report.all_passed() {
        std::process::exit(1);
    }
    Ok(())
}
