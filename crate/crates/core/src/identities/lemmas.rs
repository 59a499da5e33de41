//! Addition theorems, q-derivatives, difference equations, inversion
//! formulas and recurrences.

use crate::error::Result;
use crate::poly::{symbolic_pair_power, Poly2, Substitution, Var};
use crate::qspecial::Family;
use crate::rational::{binomial, int, pow, rat};

use super::ledger;
use super::{at_x, at_y, with_x, with_y, IdentityReport, Params, QOps, Verifier};

fn family_ids(kind: Family) -> (&'static str, &'static str) {
    match kind {
        Family::Bernoulli => ("b", "be1"),
        Family::Euler => ("e", "be2"),
    }
}

impl Verifier {
    pub fn check_addition(&mut self) -> Result<Vec<IdentityReport>> {
        let grid = self.grid.clone();
        let mut out = Vec::new();
        for q in &grid.q_set {
            let tables = self.tables(q, &grid.alpha_set)?;
            let ops = QOps::new(q);
            for &alpha in &grid.alpha_set {
                for kind in [Family::Bernoulli, Family::Euler] {
                    let t = tables.get(kind, alpha);
                    let (suffix, bivariate_id) = family_ids(kind);
                    let (x0_id, x1_id) = match kind {
                        Family::Bernoulli => ("be7", "be3"),
                        Family::Euler => ("be8", "be4"),
                    };
                    for n in 0..=grid.n_max {
                        let p = || Params::new().n(n).alpha(alpha).q(q);
                        let gauss =
                            |k: usize| ops.pow(((n - k) * (n - k).saturating_sub(1) / 2) as i64);
                        let full = t.entry(n).clone();

                        let rhs: Poly2 = (0..=n)
                            .map(|k| {
                                symbolic_pair_power(q, (n - k) as u32)
                                    .scale(&(ops.bin(n, k) * t.number(k)))
                            })
                            .sum();
                        out.push(IdentityReport::new(
                            &format!("add-{suffix}"),
                            p(),
                            full.clone(),
                            rhs,
                        ));

                        let rhs: Poly2 = (0..=n)
                            .map(|k| {
                                &at_x(t, k)
                                    * &Poly2::monomial(0, (n - k) as u32, ops.bin(n, k) * gauss(k))
                            })
                            .sum();
                        out.push(IdentityReport::new(
                            &format!("{bivariate_id}-a"),
                            p(),
                            full.clone(),
                            rhs,
                        ));

                        let rhs: Poly2 = (0..=n)
                            .map(|k| {
                                &at_y(t, k) * &Poly2::monomial((n - k) as u32, 0, ops.bin(n, k))
                            })
                            .sum();
                        out.push(IdentityReport::new(
                            &format!("{bivariate_id}-b"),
                            p(),
                            full.clone(),
                            rhs,
                        ));

                        let rhs: Poly2 = (0..=n)
                            .map(|k| {
                                Poly2::monomial((n - k) as u32, 0, ops.bin(n, k) * t.number(k))
                            })
                            .sum();
                        out.push(IdentityReport::new(
                            &format!("{x0_id}-a"),
                            p(),
                            at_x(t, n),
                            rhs,
                        ));

                        let rhs: Poly2 = (0..=n)
                            .map(|k| {
                                Poly2::monomial(
                                    0,
                                    (n - k) as u32,
                                    ops.bin(n, k) * gauss(k) * t.number(k),
                                )
                            })
                            .sum();
                        out.push(
                            IdentityReport::new(&format!("{x0_id}-b"), p(), at_y(t, n), rhs)
                                .corrected(&[ledger::GAUSS_EXPONENT], None),
                        );

                        let rhs: Poly2 = (0..=n)
                            .map(|k| at_x(t, k).scale(&(ops.bin(n, k) * gauss(k))))
                            .sum();
                        out.push(IdentityReport::new(
                            &format!("{x1_id}-a"),
                            p(),
                            with_y(t, n, int(1)),
                            rhs,
                        ));

                        let rhs: Poly2 = (0..=n).map(|k| at_y(t, k).scale(&ops.bin(n, k))).sum();
                        out.push(IdentityReport::new(
                            &format!("{x1_id}-b"),
                            p(),
                            with_x(t, n, int(1)),
                            rhs,
                        ));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn check_q_derivative(&mut self) -> Result<Vec<IdentityReport>> {
        let grid = self.grid.clone();
        let mut out = Vec::new();
        for q in &grid.q_set {
            let tables = self.tables(q, &grid.alpha_set)?;
            let ops = QOps::new(q);
            let q_scale = Substitution::Scale(q.value().clone());
            for &alpha in &grid.alpha_set {
                for kind in [Family::Bernoulli, Family::Euler] {
                    let t = tables.get(kind, alpha);
                    let (suffix, _) = family_ids(kind);
                    for n in 1..=grid.n_max {
                        let p = || Params::new().n(n).alpha(alpha).q(q);
                        let prev = t.entry(n - 1);
                        let lhs = t.entry(n).jackson_derivative(Var::X, q);
                        out.push(IdentityReport::new(
                            &format!("dq-x-{suffix}"),
                            p(),
                            lhs,
                            prev.scale(&ops.num(n)),
                        ));
                        let lhs = t.entry(n).jackson_derivative(Var::Y, q);
                        let rhs = prev.substitute(Var::Y, &q_scale).scale(&ops.num(n));
                        out.push(IdentityReport::new(
                            &format!("dq-y-{suffix}"),
                            p(),
                            lhs,
                            rhs,
                        ));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn check_difference(&mut self) -> Result<Vec<IdentityReport>> {
        let grid = self.grid.clone();
        let alphas = grid.positive_alphas();
        let orders: Vec<i64> = alphas.iter().flat_map(|&a| [a - 1, a]).collect();
        let mut out = Vec::new();
        for q in &grid.q_set {
            let tables = self.tables(q, &orders)?;
            let ops = QOps::new(q);
            for &alpha in &alphas {
                let b = tables.get(Family::Bernoulli, alpha);
                let b_lo = tables.get(Family::Bernoulli, alpha - 1);
                let e = tables.get(Family::Euler, alpha);
                let e_lo = tables.get(Family::Euler, alpha - 1);
                for n in 0..=grid.n_max {
                    let p = || Params::new().n(n).alpha(alpha).q(q);
                    let lower = |poly: Poly2| {
                        if n == 0 {
                            Poly2::zero()
                        } else {
                            poly.scale(&ops.num(n))
                        }
                    };

                    let lhs = with_x(b, n, int(1)) - at_y(b, n);
                    let rhs = lower(if n > 0 {
                        at_y(b_lo, n - 1)
                    } else {
                        Poly2::zero()
                    });
                    out.push(IdentityReport::new("be5", p(), lhs, rhs));

                    let lhs = with_x(e, n, int(1)) + at_y(e, n);
                    out.push(IdentityReport::new(
                        "be6",
                        p(),
                        lhs,
                        at_y(e_lo, n).scale(&int(2)),
                    ));

                    let lhs = at_x(b, n) - with_y(b, n, int(-1));
                    let rhs = lower(if n > 0 {
                        with_y(b_lo, n - 1, int(-1))
                    } else {
                        Poly2::zero()
                    });
                    out.push(IdentityReport::new("be5-x", p(), lhs, rhs));

                    let lhs = at_x(e, n) + with_y(e, n, int(-1));
                    let rhs = with_y(e_lo, n, int(-1)).scale(&int(2));
                    out.push(IdentityReport::new("be6-x", p(), lhs, rhs));
                }
            }
        }
        Ok(out)
    }

    pub fn check_inversion(&mut self) -> Result<Vec<IdentityReport>> {
        let grid = self.grid.clone();
        let alphas = grid.positive_alphas();
        let mut orders: Vec<i64> = alphas.iter().flat_map(|&a| [a - 1, a]).collect();
        orders.push(1);
        let mut out = Vec::new();
        for q in &grid.q_set {
            let tables = self.tables(q, &orders)?;
            let ops = QOps::new(q);
            for &alpha in &alphas {
                let b = tables.get(Family::Bernoulli, alpha);
                let b_lo = tables.get(Family::Bernoulli, alpha - 1);
                let e = tables.get(Family::Euler, alpha);
                let e_lo = tables.get(Family::Euler, alpha - 1);
                for n in 0..=grid.n_max {
                    let p = || Params::new().n(n).alpha(alpha).q(q);

                    let rhs: Poly2 = (0..=n)
                        .map(|k| at_y(b, k).scale(&ops.bin(n + 1, k)))
                        .sum::<Poly2>()
                        .scale(&ops.num(n + 1).recip());
                    let literal = (n > 0).then(|| &at_y(b_lo, n - 1) - &rhs);
                    out.push(
                        IdentityReport::new("be9", p(), at_y(b_lo, n), rhs)
                            .corrected(&[ledger::BE9_INDEX], literal),
                    );

                    let sum: Poly2 = (0..=n).map(|k| at_y(e, k).scale(&ops.bin(n, k))).sum();
                    let rhs = (sum + at_y(e, n)).scale(&rat(1, 2));
                    out.push(IdentityReport::new("be10", p(), at_y(e_lo, n), rhs));
                }
            }

            // order one, where the order-zero side collapses to a monomial
            let b1 = tables.get(Family::Bernoulli, 1);
            let e1 = tables.get(Family::Euler, 1);
            for n in 0..=grid.n_max {
                let p = || Params::new().n(n).alpha(1).q(q);
                let yn = Poly2::power_of(Var::Y, n as u32);
                let g = ops.pow((n * n.saturating_sub(1) / 2) as i64);

                let rhs: Poly2 = (0..=n).map(|k| at_y(b1, k).scale(&ops.bin(n + 1, k))).sum();
                let rhs = rhs.scale(&(g.clone() * ops.num(n + 1)).recip());
                out.push(IdentityReport::new("mono-b", p(), yn.clone(), rhs));

                let sum: Poly2 = (0..=n).map(|k| at_y(e1, k).scale(&ops.bin(n, k))).sum();
                let rhs = (sum + at_y(e1, n)).scale(&(int(2) * g).recip());
                out.push(IdentityReport::new("mono-e", p(), yn, rhs));
            }
        }

        let classical = self.classical_tables(&[1])?;
        let cb = classical.get(Family::Bernoulli, 1);
        let ce = classical.get(Family::Euler, 1);
        for n in 0..=grid.n_max {
            let p = || Params::new().n(n).alpha(1);
            let yn = Poly2::power_of(Var::Y, n as u32);
            let rhs: Poly2 = (0..=n)
                .map(|k| at_y(cb, k).scale(&binomial(n as i64 + 1, k as i64)))
                .sum::<Poly2>()
                .scale(&int(n as i64 + 1).recip());
            out.push(
                IdentityReport::new("cl1-b", p(), yn.clone(), rhs)
                    .corrected(&[ledger::CLASSICAL_FACTORIAL], None),
            );
            let sum: Poly2 = (0..=n)
                .map(|k| at_y(ce, k).scale(&binomial(n as i64, k as i64)))
                .sum();
            let rhs = (sum + at_y(ce, n)).scale(&rat(1, 2));
            out.push(
                IdentityReport::new("cl1-e", p(), yn, rhs)
                    .corrected(&[ledger::CLASSICAL_FACTORIAL], None),
            );
        }
        Ok(out)
    }

    pub fn check_recurrence(&mut self) -> Result<Vec<IdentityReport>> {
        let grid = self.grid.clone();
        let alphas = grid.positive_alphas();
        let orders: Vec<i64> = alphas.iter().flat_map(|&a| [a - 1, a]).collect();
        let mut out = Vec::new();
        for q in &grid.q_set {
            let tables = self.tables(q, &orders)?;
            let ops = QOps::new(q);
            for &alpha in &alphas {
                let b = tables.get(Family::Bernoulli, alpha);
                let b_lo = tables.get(Family::Bernoulli, alpha - 1);
                let e = tables.get(Family::Euler, alpha);
                let e_lo = tables.get(Family::Euler, alpha - 1);
                for &m in &grid.m_set {
                    let mm = int(m as i64);
                    let inv_m = rat(1, m as i64);
                    for k in 0..=grid.n_max {
                        let p = || Params::new().n(k).alpha(alpha).m(m).q(q);
                        // sum_j [k j] m^j P_j
                        let m_sum = |f: &dyn Fn(usize) -> Poly2, top: usize| -> Poly2 {
                            (0..=top)
                                .map(|j| f(j).scale(&(ops.bin(top, j) * pow(&mm, j as i64))))
                                .sum()
                        };
                        // sum_j [top j] (1/m - 1)_q^(top - j) P_j
                        let shift_sum = |f: &dyn Fn(usize) -> Poly2, top: usize| -> Poly2 {
                            (0..=top)
                                .map(|j| {
                                    f(j).scale(&(ops.bin(top, j) * ops.inv_m_minus_one(m, top - j)))
                                })
                                .sum()
                        };

                        let lhs = m_sum(&|j| at_x(b, j), k) - m_sum(&|j| with_y(b, j, int(-1)), k);
                        let rhs = if k == 0 {
                            Poly2::zero()
                        } else {
                            m_sum(&|j| with_y(b_lo, j, int(-1)), k - 1).scale(&(ops.num(k) * &mm))
                        };
                        out.push(IdentityReport::new("be11", p(), lhs, rhs));

                        let lhs = with_x(b, k, inv_m.clone()) - shift_sum(&|j| at_y(b, j), k);
                        let rhs = if k == 0 {
                            Poly2::zero()
                        } else {
                            shift_sum(&|j| at_y(b_lo, j), k - 1).scale(&ops.num(k))
                        };
                        out.push(IdentityReport::new("be11-1", p(), lhs, rhs));

                        let lhs = m_sum(&|j| at_x(e, j), k) + m_sum(&|j| with_y(e, j, int(-1)), k);
                        let rhs = m_sum(&|j| with_y(e_lo, j, int(-1)), k).scale(&int(2));
                        out.push(IdentityReport::new("be12", p(), lhs, rhs));

                        let lhs = with_x(e, k, inv_m.clone()) + shift_sum(&|j| at_y(e, j), k);
                        let rhs = shift_sum(&|j| at_y(e_lo, j), k).scale(&int(2));
                        out.push(IdentityReport::new("be12-1", p(), lhs, rhs));
                    }
                }
            }
        }
        Ok(out)
    }
}
