//! q-Stirling numbers, the q-Bernstein basis, and the expansion of the
//! basis through order-`k` q-Bernoulli polynomials.
//!
//! ```text
//! cargo run --example bernstein
//! ```

use qbernoulli::identities::{check_bernstein, Grid};
use qbernoulli::qspecial::{classical_stirling2, q_bernstein, q_stirling2};
use qbernoulli::rational::{format_rational, rat};
use qbernoulli::QParam;

fn main() -> qbernoulli::Result<()> {
    let q = QParam::new(rat(1, 2))?;

    println!("S_2q(m, k) at q = {q}, with classical S_2 in brackets");
    for m in 0..=5 {
        let row: Vec<String> = (0..=m)
            .map(|k| {
                format!(
                    "{} [{}]",
                    format_rational(&q_stirling2(&q, m, k)),
                    format_rational(&classical_stirling2(m, k))
                )
            })
            .collect();
        println!("  m={m}: {}", row.join(", "));
    }

    println!("\nb_(3,k)(q; x) = x^k (1 - x)_q^(3-k)");
    for k in 0..=3 {
        println!("  k={k}: {}", q_bernstein(&q, 3, k)?);
    }

    let grid = Grid::new(5, vec![1], vec![1], vec![q])?;
    let reports = check_bernstein(&grid)?;
    let exact = reports.iter().filter(|r| r.pass).count();
    let literal = reports
        .iter()
        .filter(|r| r.literal_holds == Some(true))
        .count();
    println!(
        "\nexpansion checked at {} (n, k) pairs: {exact} exact with the [n k]_q factor, {literal} without it",
        reports.len()
    );
    Ok(())
}
