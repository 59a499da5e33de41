//! The truncated series and polynomial layers on their own: the two
//! q-exponentials, the Bernoulli kernel, and the Jackson derivative.
//!
//! ```text
//! cargo run --example series_algebra
//! ```

use qbernoulli::qspecial::{kernel, q_bernoulli_table};
use qbernoulli::rational::{int, rat};
use qbernoulli::series::{big_eq_series, eq_series, ExpArg};
use qbernoulli::{Deformation, Family, QParam, Var};

fn main() -> qbernoulli::Result<()> {
    let q = QParam::new(rat(1, 3))?;

    let e = eq_series(&q, &ExpArg::Const(int(1)), 8);
    let big_e = big_eq_series(&q, &ExpArg::Const(int(-1)), 8);
    let product = e.mul(&big_e);
    let coeffs: Vec<String> = product.coeffs().iter().map(|c| c.to_string()).collect();
    println!("e_q(t) E_q(-t) = [{}]", coeffs.join(", "));

    let k = kernel(&Deformation::Q(q.clone()), Family::Bernoulli, 5)?;
    let d = Deformation::Q(q.clone());
    let numbers: Vec<String> = (0..=5)
        .map(|n| k.egf_coefficient(n, &d).map(|c| c.to_string()))
        .collect::<qbernoulli::Result<_>>()?;
    println!(
        "t/(e_q(t) - 1) gives q-Bernoulli numbers {}",
        numbers.join(", ")
    );

    // D_q,x B_n(x, y) = [n]_q B_{n-1}(x, y)
    let t = q_bernoulli_table(&q, 1, 3)?;
    println!("B_3(x,y)         = {}", t.entry(3));
    println!(
        "D_q,x B_3(x,y)   = {}",
        t.entry(3).jackson_derivative(Var::X, &q)
    );
    println!(
        "[3]_q B_2(x,y)   = {}",
        t.entry(2).scale(&qbernoulli::qcore::q_number(&q, 3))
    );
    Ok(())
}
