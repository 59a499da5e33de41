//! Empirical verdict on the expansion of the polynomials through classical
//! Stirling numbers, sampled at `x = r/m`.
//!
//! ```text
//! cargo run --release --example stirling_verdict
//! ```

use qbernoulli::identities::{stirling_verdicts, Grid, Suite, Verifier};
use qbernoulli::rational::rat;
use qbernoulli::QParam;

fn main() -> qbernoulli::Result<()> {
    let grid = Grid::new(4, vec![1, 2], vec![1, 2, 3], vec![QParam::new(rat(1, 2))?])?;
    let reports = Verifier::new(grid).run(Suite::StirlingTheorem)?;
    for v in stirling_verdicts(&reports) {
        println!(
            "{:<9} n={} alpha={} m={}  {}",
            v.family.to_string(),
            v.n,
            v.alpha,
            v.m,
            if v.holds {
                "holds".to_string()
            } else {
                format!("fails at {} points", v.failing_points)
            }
        );
    }

    // one failing sample in full
    if let Some(r) = reports.iter().find(|r| !r.pass) {
        println!("\n{} at {:?}", r.identity_id, r.params);
        println!("  lhs      = {}", r.lhs);
        println!("  rhs      = {}", r.rhs);
        println!("  residual = {}", r.residual);
    }
    Ok(())
}
