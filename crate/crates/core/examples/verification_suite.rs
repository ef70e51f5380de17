//! Sweeps every identity over small shapes and prints per-identity counts.
//!
//! Usage: `cargo run --release --example verification_suite [n_max] [deg_max]`

use macpoly::verify::{run_suite, BasementMode, Checker, SweepBounds};

fn main() -> macpoly::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse().expect("a number"));
    let n_max = args.next().unwrap_or(3);
    let deg_max = args.next().unwrap_or(2) as u32;
    let bounds = SweepBounds::new(n_max, deg_max, BasementMode::All)?;
    let summary = run_suite(&bounds, &Checker::new());
    for c in &summary.counts {
        println!("{:<11} {:>5} instances, {} fail", c.identity_id, c.instances, c.fails);
    }
    println!("total {} in {} ms, exit code {}", summary.total, summary.elapsed_ms, summary.exit_code);

    let broken = run_suite(&SweepBounds::new(2, 1, BasementMode::All)?, &Checker::with_fault());
    if let Some(r) = broken.first_counterexample {
        println!("with a perturbed coefficient: {} fails at {}", r.identity_id, r.instance);
    }
    Ok(())
}
