//! Bernoulli polynomials expanded through Euler polynomials with a scaling
//! modulus `m`, and the converse.

use crate::error::Result;
use crate::poly::Poly2;
use crate::qspecial::{Family, PolyTable};
use crate::rational::{int, pow, Rational};

use super::ledger;
use super::{at_x, at_y, scaled_x, scaled_y, with_y, IdentityReport, Params, QOps, Verifier};

/// `sum_{j=0}^{top} [top j]_q m^j P_j`, where `f(j)` yields `P_j`.
pub(super) fn m_weighted(ops: &QOps, m: u32, top: usize, f: impl Fn(usize) -> Poly2) -> Poly2 {
    let mm = int(m as i64);
    (0..=top)
        .map(|j| f(j).scale(&(ops.bin(top, j) * pow(&mm, j as i64))))
        .sum()
}

/// `sum_{j=0}^{top} [top j]_q (1/m - 1)_q^(top - j) P_j`.
pub(super) fn shift_weighted(ops: &QOps, m: u32, top: usize, f: impl Fn(usize) -> Poly2) -> Poly2 {
    (0..=top)
        .map(|j| f(j).scale(&(ops.bin(top, j) * ops.inv_m_minus_one(m, top - j))))
        .sum()
}

/// The bracket of the first Bernoulli expansion,
/// `m^k B_k(x,0) + sum_j [k j] m^j B_j(x,-1) + [k] sum_j [k-1 j] m^(j+1) L_j`,
/// with `L_j` the lower-order term supplied by `lower`.
pub(super) fn sp1_bracket_x(
    ops: &QOps,
    m: u32,
    k: usize,
    b: &PolyTable,
    lower: impl Fn(usize) -> Poly2,
) -> Poly2 {
    let mm = int(m as i64);
    let mut s = at_x(b, k).scale(&pow(&mm, k as i64));
    s += m_weighted(ops, m, k, |j| with_y(b, j, int(-1)));
    if k > 0 {
        s += m_weighted(ops, m, k - 1, lower).scale(&(ops.num(k) * &mm));
    }
    s
}

/// `lead + sum_j [k j] (1/m-1)^(k-j) B_j(0,y) + [k] sum_j [k-1 j] (1/m-1)^(k-1-j) L_j`.
pub(super) fn sp1_bracket_y(
    ops: &QOps,
    m: u32,
    k: usize,
    b: &PolyTable,
    lead: Poly2,
    lower: impl Fn(usize) -> Poly2,
) -> Poly2 {
    let mut s = lead;
    s += shift_weighted(ops, m, k, |j| at_y(b, j));
    if k > 0 {
        s += shift_weighted(ops, m, k - 1, lower).scale(&ops.num(k));
    }
    s
}

impl Verifier {
    pub fn check_sp1(&mut self) -> Result<Vec<IdentityReport>> {
        let grid = self.grid.clone();
        let alphas = grid.positive_alphas();
        let mut orders: Vec<i64> = alphas.iter().flat_map(|&a| [a - 1, a]).collect();
        orders.push(1);
        let mut out = Vec::new();
        for q in &grid.q_set {
            let tables = self.tables(q, &orders)?;
            let ops = QOps::new(q);
            let e1 = tables.get(Family::Euler, 1);
            for &alpha in &alphas {
                let b = tables.get(Family::Bernoulli, alpha);
                let b_lo = tables.get(Family::Bernoulli, alpha - 1);
                for &m in &grid.m_set {
                    let mm = int(m as i64);
                    for n in 0..=grid.n_max {
                        let p = || Params::new().n(n).alpha(alpha).m(m).q(q);
                        let front = (int(2) * pow(&mm, n as i64)).recip();

                        let rhs: Poly2 = (0..=n)
                            .map(|k| {
                                let br = sp1_bracket_x(&ops, m, k, b, |j| with_y(b_lo, j, int(-1)));
                                (&br * &scaled_y(e1, n - k, m)).scale(&ops.bin(n, k))
                            })
                            .sum();
                        out.push(IdentityReport::new(
                            "sp1-a",
                            p(),
                            b.entry(n).clone(),
                            rhs.scale(&front),
                        ));

                        let rhs: Poly2 = (0..=n)
                            .map(|k| {
                                let br =
                                    sp1_bracket_y(&ops, m, k, b, at_y(b, k), |j| at_y(b_lo, j));
                                (&br * &scaled_x(e1, n - k, m))
                                    .scale(&(ops.bin(n, k) * pow(&mm, k as i64)))
                            })
                            .sum();
                        out.push(
                            IdentityReport::new(
                                "sp1-b",
                                p(),
                                b.entry(n).clone(),
                                rhs.scale(&front),
                            )
                            .corrected(&[ledger::BINOMIAL_INDEX_K], None),
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn check_sp2(&mut self) -> Result<Vec<IdentityReport>> {
        let grid = self.grid.clone();
        let alphas = grid.positive_alphas();
        let mut orders: Vec<i64> = alphas.iter().flat_map(|&a| [a - 1, a]).collect();
        orders.push(1);
        let mut out = Vec::new();
        for q in &grid.q_set {
            let tables = self.tables(q, &orders)?;
            let ops = QOps::new(q);
            let b1 = tables.get(Family::Bernoulli, 1);
            for &alpha in &alphas {
                let e = tables.get(Family::Euler, alpha);
                let e_lo = tables.get(Family::Euler, alpha - 1);
                for &m in &grid.m_set {
                    let mm = int(m as i64);
                    for n in 0..=grid.n_max {
                        let p = || Params::new().n(n).alpha(alpha).m(m).q(q);
                        let lhs = e.entry(n).clone();

                        // bracket_k * B_{n-k}(mx, 0) / [k+1], unweighted
                        let terms_a: Vec<Poly2> = (0..=n)
                            .map(|k| {
                                let br = shift_weighted(&ops, m, k + 1, |j| at_y(e_lo, j))
                                    .scale(&int(2))
                                    - shift_weighted(&ops, m, k + 1, |j| at_y(e, j))
                                    - at_y(e, k + 1);
                                (&br * &scaled_x(b1, n - k, m)).scale(&ops.num(k + 1).recip())
                            })
                            .collect();
                        let corrected: Poly2 = terms_a
                            .iter()
                            .enumerate()
                            .map(|(k, t)| {
                                let w = ops.bin(n, k) * pow(&mm, k as i64 + 1 - n as i64);
                                t.scale(&w)
                            })
                            .sum();
                        let literal: Poly2 = terms_a
                            .iter()
                            .map(|t| t.scale(&pow(&mm, 1 - n as i64)))
                            .sum();
                        out.push(
                            IdentityReport::new("sp2-a", p(), lhs.clone(), corrected)
                                .corrected(&[ledger::SP2A_WEIGHT], Some(&lhs - &literal)),
                        );

                        let rhs: Poly2 = (0..=n)
                            .map(|k| {
                                let br = m_weighted(&ops, m, k + 1, |j| with_y(e_lo, j, int(-1)))
                                    .scale(&int(2))
                                    - m_weighted(&ops, m, k + 1, |j| with_y(e, j, int(-1)))
                                    - at_x(e, k + 1).scale(&pow(&mm, k as i64 + 1));
                                let w: Rational =
                                    ops.bin(n, k) * pow(&mm, -(n as i64)) / ops.num(k + 1);
                                (&br * &scaled_y(b1, n - k, m)).scale(&w)
                            })
                            .sum();
                        out.push(IdentityReport::new("sp2-b", p(), lhs, rhs));
                    }
                }
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
    fn small_grid_passes() {
        let grid = Grid::new(
            3,
            vec![1, 2],
            vec![1, 2],
            vec![QParam::new(rat(1, 2)).unwrap()],
        )
        .unwrap();
        let mut v = Verifier::new(grid);
        for r in v
            .check_sp1()
            .unwrap()
            .iter()
            .chain(v.check_sp2().unwrap().iter())
        {
            assert!(
                r.pass,
                "{} {:?} residual {}",
                r.identity_id, r.params, r.residual
            );
        }
    }

    #[test]
    fn sp2a_literal_form_fails_beyond_n0() {
        let grid = Grid::new(3, vec![1], vec![2], vec![QParam::new(rat(1, 2)).unwrap()]).unwrap();
        let reports = Verifier::new(grid).check_sp2().unwrap();
        for r in reports.iter().filter(|r| r.identity_id == "sp2-a") {
            let n = r.params.n.unwrap();
            assert_eq!(r.literal_holds, Some(n == 0), "n = {n}");
        }
    }
}
