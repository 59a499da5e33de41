//! Runs every identity suite on a small grid and summarises the reports.
//!
//! ```text
//! cargo run --release --example verify_identities
//! ```

use std::collections::BTreeMap;

use qbernoulli::identities::{ledger, Grid, Suite, Verifier};
use qbernoulli::rational::rat;
use qbernoulli::QParam;

fn main() -> qbernoulli::Result<()> {
    let grid = Grid::new(
        4,
        vec![1, 2],
        vec![1, 2],
        vec![QParam::new(rat(1, 2))?, QParam::new(rat(3, 4))?],
    )?;
    let reports = Verifier::new(grid).run(Suite::All)?;

    // id -> (checked, passed, literal form also held)
    let mut by_id: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for r in &reports {
        let e = by_id.entry(r.identity_id.as_str()).or_default();
        e.0 += 1;
        e.1 += r.pass as usize;
        e.2 += (r.literal_holds == Some(true)) as usize;
    }
    println!("{:<14} {:>7} {:>7}", "identity", "checked", "passed");
    for (id, (n, pass, _)) in &by_id {
        println!("{id:<14} {n:>7} {pass:>7}");
    }

    let failures = reports.iter().filter(|r| r.is_failure()).count();
    println!("\n{} reports, {failures} failures", reports.len());

    println!("\ncorrected forms (literal form held / checked):");
    for c in ledger::TYPO_LEDGER {
        for id in c.identities {
            if let Some((n, _, lit)) = by_id.get(id) {
                let has_literal = reports
                    .iter()
                    .any(|r| r.identity_id == *id && r.literal_holds.is_some());
                let lit = if has_literal {
                    format!("{lit}/{n}")
                } else {
                    "n/a".into()
                };
                println!("  {id:<14} {:<28} literal {lit}", c.id);
            }
        }
    }
    Ok(())
}
