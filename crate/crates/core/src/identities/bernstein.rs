//! q-Bernstein basis through q-Stirling numbers and order-`k` Bernoulli
//! polynomials, and its `q = 1` counterpart.

use crate::error::Result;
use crate::poly::Poly2;
use crate::qspecial::{classical_stirling2, q_bernstein, q_stirling2, Family, PolyTable};
use crate::rational::{binomial, int, Rational};

use super::ledger;
use super::{IdentityReport, Params, QOps, Verifier};

/// `x^k sum_m w(m) S(m, k) P_{n-m}(1, -x)` with `P` the order-`k` table.
fn stirling_side(
    t: &PolyTable,
    n: usize,
    k: usize,
    weight: impl Fn(usize) -> Rational,
    s2: impl Fn(usize, usize) -> Rational,
) -> Poly2 {
    let one = Poly2::one();
    let minus_x = Poly2::monomial(1, 0, int(-1));
    let sum: Poly2 = (0..=n)
        .map(|m| {
            let c = weight(m) * s2(m, k);
            t.entry(n - m).compose(&one, &minus_x).scale(&c)
        })
        .sum();
    &Poly2::monomial(k as u32, 0, int(1)) * &sum
}

impl Verifier {
    /// The right side equals Phillips' normalised basis
    /// `[n k]_q x^k (1 - x)_q^(n-k)`; the bare product is recorded as the
    /// literal form.
    pub fn check_bernstein(&mut self) -> Result<Vec<IdentityReport>> {
        let grid = self.grid.clone();
        let orders: Vec<i64> = (0..=grid.n_max as i64).collect();
        let mut out = Vec::new();
        for q in &grid.q_set {
            let tables = self.tables(q, &orders)?;
            let ops = QOps::new(q);
            for n in 0..=grid.n_max {
                for k in 0..=n {
                    let t = tables.get(Family::Bernoulli, k as i64);
                    let rhs =
                        stirling_side(t, n, k, |m| ops.bin(n, m), |m, k| q_stirling2(q, m, k));
                    let basis = q_bernstein(q, n, k)?;
                    let lhs = basis.scale(&ops.bin(n, k));
                    let literal = &basis - &rhs;
                    out.push(
                        IdentityReport::new("bb1", Params::new().n(n).k(k).q(q), lhs, rhs)
                            .corrected(&[ledger::BERNSTEIN_NORMALISATION], Some(literal)),
                    );
                }
            }
        }

        let tables = self.classical_tables(&orders)?;
        for n in 0..=grid.n_max {
            for k in 0..=n {
                let t = tables.get(Family::Bernoulli, k as i64);
                let ni = n as i64;
                let rhs = stirling_side(t, n, k, |m| binomial(ni, m as i64), classical_stirling2);
                // x^k (1 - x)^(n-k)
                let one_minus_x = Poly2::one() - Poly2::x();
                let basis =
                    &Poly2::monomial(k as u32, 0, int(1)) * &one_minus_x.pow((n - k) as u32);
                let lhs = basis.scale(&binomial(ni, k as i64));
                let literal = &basis - &rhs;
                out.push(
                    IdentityReport::new("bb1-classical", Params::new().n(n).k(k), lhs, rhs)
                        .corrected(
                            &[ledger::BERNSTEIN_NORMALISATION, ledger::CLASSICAL_FACTORIAL],
                            Some(literal),
                        ),
                );
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::Grid;
    use crate::qcore::QParam;
    use crate::rational::rat;

    #[test]
    fn normalised_form_holds_and_literal_only_at_edges() {
        let grid = Grid::new(4, vec![1], vec![1], vec![QParam::new(rat(1, 2)).unwrap()]).unwrap();
        let reports = Verifier::new(grid).check_bernstein().unwrap();
        for r in &reports {
            assert!(r.pass, "{} {:?}: {}", r.identity_id, r.params, r.residual);
            let (n, k) = (r.params.n.unwrap(), r.params.k.unwrap());
            // [n k] = 1 exactly when k is 0 or n
            assert_eq!(r.literal_holds, Some(k == 0 || k == n), "n={n} k={k}");
        }
    }
}
