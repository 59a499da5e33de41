//! q-Bernoulli and q-Euler polynomials and numbers, next to the classical ones.
//!
//! ```text
//! cargo run --example tables
//! ```

use qbernoulli::qspecial::{classical_table, q_bernoulli_table, q_euler_table};
use qbernoulli::rational::{format_rational, rat};
use qbernoulli::{Family, QParam};

fn main() -> qbernoulli::Result<()> {
    let q = QParam::new(rat(1, 2))?;

    let b = q_bernoulli_table(&q, 1, 4)?;
    let e = q_euler_table(&q, 1, 4)?;
    println!("q = {q}, order 1");
    for n in 0..=4 {
        println!("  B_{n}(x,y) = {}", b.entry(n));
    }
    for n in 0..=4 {
        println!("  E_{n}(x,y) = {}", e.entry(n));
    }

    let numbers: Vec<String> = (0..=4).map(|n| format_rational(&b.number(n))).collect();
    println!("  q-Bernoulli numbers: {}", numbers.join(", "));

    let b2 = q_bernoulli_table(&q, 2, 3)?;
    println!("order 2: B_3(x,0) = {}", b2.at(3, None, Some(&rat(0, 1))));

    // the classical table stores B_n(x + y)
    let cb = classical_table(Family::Bernoulli, 1, 4)?;
    println!("classical B_4(x) = {}", cb.at(4, None, Some(&rat(0, 1))));
    Ok(())
}
