//! Runs the Laman sweep with a checkpoint file, then resumes it one level higher.
//!
//! cargo run --release --example verify_conjecture -- 7

use std::env;

use nacrig::laman::verify_conjecture;

fn main() -> nacrig::Result<()> {
    let max_n: usize = env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let dir = env::temp_dir().join(format!("nacrig-sweep-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let ck = dir.join("sweep.ckpt");

    let first = verify_conjecture(max_n - 1, Some(&ck))?;
    let second = verify_conjecture(max_n, Some(&ck))?;
    println!("resumed from n={:?}", second.resumed_from);
    for l in &second.levels {
        println!(
            "n={} total={} triangle-connected={} with-nac={} problematic={} balanced={}",
            l.n,
            l.total,
            l.delta_connected,
            l.with_nac,
            l.problematic,
            l.balanced()
        );
    }
    println!("holds up to {}: {}", max_n, second.holds() && first.holds());
    println!("{}", std::fs::read_to_string(&ck)?);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
