//! How fast the q-polynomials approach their classical limits.
//!
//! For each family, `n <= 6` and `x in {0, 1/2, 1}`, prints the error
//! `|P_n(x, 0; q) - P_n(x)|` along `q = 9/10, 99/100, 999/1000`, then the
//! same for q-Stirling numbers and the Stirling side of the Bernstein
//! expansion.
//!
//! ```text
//! cargo run --example limit_study
//! ```

use qbernoulli::limit::{
    bernstein_limit_errors, classical_limit, default_q_seq, non_increasing, stirling_limit_errors,
};
use qbernoulli::rational::{format_decimal, rat};
use qbernoulli::{Family, Rational};

fn row(errors: &[Rational]) -> String {
    errors
        .iter()
        .map(format_decimal)
        .collect::<Vec<_>>()
        .join("  ")
}

fn main() -> qbernoulli::Result<()> {
    let seq = default_q_seq();
    let xs = [rat(0, 1), rat(1, 2), rat(1, 1)];

    for kind in [Family::Bernoulli, Family::Euler] {
        println!("{kind}, order 1");
        let mut worst = rat(0, 1);
        for n in 0..=6 {
            for x in &xs {
                let s = classical_limit(kind, 1, n, x, &seq)?;
                let last = s.last_error().cloned().unwrap_or_default();
                worst = worst.max(last);
                let flag = if s.monotone { "" } else { "  NOT MONOTONE" };
                println!("  n={n} x={:<3} {}{flag}", x.to_string(), row(&s.errors()));
            }
        }
        println!(
            "  largest error at q = 999/1000: {}",
            format_decimal(&worst)
        );
    }

    println!("q-Stirling numbers, m, k <= 6");
    let mut worst = rat(0, 1);
    for m in 0..=6 {
        for k in 0..=m {
            let e = stirling_limit_errors(m, k, &seq);
            assert!(non_increasing(&e), "S({m},{k}) not monotone");
            worst = worst.max(e.last().cloned().unwrap_or_default());
        }
    }
    println!(
        "  largest error at q = 999/1000: {}",
        format_decimal(&worst)
    );

    println!("Bernstein expansion, Stirling side, n <= 6, x = 1/3");
    let mut worst = rat(0, 1);
    for n in 0..=6 {
        for k in 0..=n {
            let e = bernstein_limit_errors(n, k, &rat(1, 3), &seq)?;
            let flag = if non_increasing(&e) {
                ""
            } else {
                "  NOT MONOTONE"
            };
            println!("  n={n} k={k} {}{flag}", row(&e));
            worst = worst.max(e.last().cloned().unwrap_or_default());
        }
    }
    println!(
        "  largest error at q = 999/1000: {}",
        format_decimal(&worst)
    );
    Ok(())
}
