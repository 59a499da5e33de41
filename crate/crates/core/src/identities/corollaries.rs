//! Order-one special cases of the Bernoulli/Euler expansions, plus their
//! classical `q = 1` versions.

use crate::error::Result;
use crate::poly::{symbolic_pair_power, Poly2, Var};
use crate::qspecial::Family;
use crate::rational::{binomial, int, pow, rat, Rational};

use super::expansions::{m_weighted, sp1_bracket_x, sp1_bracket_y};
use super::ledger;
use super::{at_x, at_y, c, scaled_x, scaled_y, with_y, IdentityReport, Params, QOps, Verifier};

impl Verifier {
    pub fn check_corollaries(&mut self) -> Result<Vec<IdentityReport>> {
        let grid = self.grid.clone();
        let mut out = Vec::new();
        for q in &grid.q_set {
            let tables = self.tables(q, &[1])?;
            let ops = QOps::new(q);
            let b = tables.get(Family::Bernoulli, 1);
            let e = tables.get(Family::Euler, 1);
            // (x - 1)_q^j
            let x_minus_one = |j: usize| symbolic_pair_power(q, j as u32).at(None, Some(&int(-1)));

            for n in 0..=grid.n_max {
                for &m in &grid.m_set {
                    let mm = int(m as i64);
                    let p = || Params::new().n(n).alpha(1).m(m).q(q);
                    let front = (int(2) * pow(&mm, n as i64)).recip();

                    let rhs: Poly2 = (0..=n)
                        .map(|k| {
                            let br = sp1_bracket_x(&ops, m, k, b, x_minus_one);
                            (&br * &scaled_y(e, n - k, m)).scale(&ops.bin(n, k))
                        })
                        .sum();
                    out.push(IdentityReport::new(
                        "c1-a",
                        p(),
                        b.entry(n).clone(),
                        rhs.scale(&front),
                    ));

                    let gauss_y = |j: usize| {
                        Poly2::monomial(0, j as u32, ops.pow((j * j.saturating_sub(1) / 2) as i64))
                    };
                    let c1b = |lead_power: bool| -> Poly2 {
                        let rhs: Poly2 = (0..=n)
                            .map(|k| {
                                let lead_w = if lead_power {
                                    pow(&mm, k as i64)
                                } else {
                                    int(1)
                                };
                                let lead = at_y(b, k).scale(&lead_w);
                                let br = sp1_bracket_y(&ops, m, k, b, lead, gauss_y);
                                (&br * &scaled_x(e, n - k, m))
                                    .scale(&(ops.bin(n, k) * pow(&mm, k as i64)))
                            })
                            .sum();
                        rhs.scale(&front)
                    };
                    let corrected = c1b(false);
                    let literal = b.entry(n) - &c1b(true);
                    out.push(
                        IdentityReport::new("c1-b", p(), b.entry(n).clone(), corrected).corrected(
                            &[ledger::BINOMIAL_INDEX_K, ledger::C1B_POWER],
                            Some(literal),
                        ),
                    );

                    // Euler through Bernoulli, order one
                    let rhs: Poly2 = (0..=n)
                        .map(|k| {
                            let br = m_weighted(&ops, m, k + 1, x_minus_one).scale(&int(2))
                                - m_weighted(&ops, m, k + 1, |j| with_y(e, j, int(-1)))
                                - at_x(e, k + 1).scale(&pow(&mm, k as i64 + 1));
                            let w = ops.bin(n, k) * pow(&mm, -(n as i64)) / ops.num(k + 1);
                            (&br * &scaled_y(b, n - k, m)).scale(&w)
                        })
                        .sum();
                    out.push(IdentityReport::new("ce1", p(), e.entry(n).clone(), rhs));
                }

                let p = || Params::new().n(n).alpha(1).q(q);

                let rhs: Poly2 = (0..=n)
                    .map(|k| {
                        let mut br = at_y(b, k);
                        if k > 0 {
                            let w = ops.num(k)
                                * rat(1, 2)
                                * ops.pow(((k - 1) * (k.saturating_sub(2)) / 2) as i64);
                            br += Poly2::monomial(0, k as u32 - 1, w);
                        }
                        (&br * &at_x(e, n - k)).scale(&ops.bin(n, k))
                    })
                    .sum();
                out.push(IdentityReport::new("cw1", p(), b.entry(n).clone(), rhs));

                let b1_plus_half = b.number(1) + rat(1, 2);
                for (id, side) in [("cw2", Var::X), ("cw3", Var::Y)] {
                    let side_of = |t: &crate::qspecial::PolyTable, j: usize| match side {
                        Var::X => at_x(t, j),
                        Var::Y => at_y(t, j),
                    };
                    let base: Poly2 = (0..=n)
                        .filter(|&k| k != 1)
                        .map(|k| side_of(e, n - k).scale(&(ops.bin(n, k) * b.number(k))))
                        .sum();
                    let (corrected, literal) = if n == 0 {
                        (base.clone(), base)
                    } else {
                        let extra = side_of(e, n - 1).scale(&b1_plus_half);
                        (&base + &extra.scale(&ops.num(n)), &base + &extra)
                    };
                    let lhs = side_of(b, n);
                    let lit = &lhs - &literal;
                    out.push(
                        IdentityReport::new(id, p(), lhs, corrected)
                            .corrected(&[ledger::CHEON_EXTRA_TERM], Some(lit)),
                    );
                }

                let rhs: Poly2 = (0..=n)
                    .map(|k| {
                        let g = ops.pow((k * (k + 1) / 2) as i64);
                        let br = Poly2::monomial(0, k as u32 + 1, g) - at_y(e, k + 1);
                        let w = ops.bin(n, k) * int(2) / ops.num(k + 1);
                        (&br * &at_x(b, n - k)).scale(&w)
                    })
                    .sum();
                out.push(IdentityReport::new("ce2", p(), e.entry(n).clone(), rhs));

                for (id, side) in [("ce3-a", Var::X), ("ce3-b", Var::Y)] {
                    let side_of = |t: &crate::qspecial::PolyTable, j: usize| match side {
                        Var::X => at_x(t, j),
                        Var::Y => at_y(t, j),
                    };
                    let rhs: Poly2 = (0..=n)
                        .map(|k| {
                            let w = -(ops.bin(n, k) * int(2) * e.number(k + 1) / ops.num(k + 1));
                            side_of(b, n - k).scale(&w)
                        })
                        .sum();
                    out.push(IdentityReport::new(id, p(), side_of(e, n), rhs));
                }
            }
        }
        out.extend(self.check_classical_corollaries()?);
        Ok(out)
    }

    fn check_classical_corollaries(&mut self) -> Result<Vec<IdentityReport>> {
        let grid = self.grid.clone();
        let tables = self.classical_tables(&[1])?;
        let b = tables.get(Family::Bernoulli, 1);
        let e = tables.get(Family::Euler, 1);
        let fix = [ledger::CLASSICAL_FACTORIAL];
        let mut out = Vec::new();
        for n in 0..=grid.n_max {
            let ni = n as i64;
            let p = || Params::new().n(n).alpha(1);
            let rhs: Poly2 = (0..=n)
                .map(|k| {
                    let mut br = at_y(b, k);
                    if k > 0 {
                        br += Poly2::monomial(0, k as u32 - 1, rat(k as i64, 2));
                    }
                    (&br * &at_x(e, n - k)).scale(&binomial(ni, k as i64))
                })
                .sum();
            out.push(
                IdentityReport::new("c2-a", p(), b.entry(n).clone(), rhs).corrected(&fix, None),
            );

            let rhs: Poly2 = (0..=n)
                .map(|k| {
                    let br = Poly2::monomial(0, k as u32 + 1, int(1)) - at_y(e, k + 1);
                    let w = binomial(ni, k as i64) * rat(2, k as i64 + 1);
                    (&br * &at_x(b, n - k)).scale(&w)
                })
                .sum();
            out.push(
                IdentityReport::new("cle-a", p(), e.entry(n).clone(), rhs).corrected(&fix, None),
            );

            for &m in &grid.m_set {
                let p = || Params::new().n(n).alpha(1).m(m);
                let mm = int(m as i64);
                let shift: Rational = rat(1 - m as i64, m as i64);
                // 1 + m (x - 1)
                let affine = &c(int(1) - &mm) + &Poly2::monomial(1, 0, mm.clone());
                let rhs: Poly2 = (0..=n)
                    .map(|k| {
                        let mk = pow(&mm, k as i64);
                        let mut br = (at_x(b, k) + with_y(b, k, shift.clone())).scale(&mk);
                        if k > 0 {
                            br += affine.pow(k as u32 - 1).scale(&(int(k as i64) * &mm));
                        }
                        (&br * &scaled_y(e, n - k, m)).scale(&binomial(ni, k as i64))
                    })
                    .sum();
                let rhs = rhs.scale(&(int(2) * pow(&mm, ni)).recip());
                out.push(
                    IdentityReport::new("c2-b", p(), b.entry(n).clone(), rhs).corrected(&fix, None),
                );

                // x + (1 - m)/m
                let shifted_x = &Poly2::x() + &c(shift.clone());
                let rhs: Poly2 = (0..=n)
                    .map(|k| {
                        let br = shifted_x.pow(k as u32 + 1).scale(&int(2))
                            - with_y(e, k + 1, shift.clone())
                            - at_x(e, k + 1);
                        let w = binomial(ni, k as i64) * pow(&mm, k as i64 - ni + 1)
                            / int(k as i64 + 1);
                        (&br * &scaled_y(b, n - k, m)).scale(&w)
                    })
                    .sum();
                out.push(
                    IdentityReport::new("cle-b", p(), e.entry(n).clone(), rhs)
                        .corrected(&fix, None),
                );
            }
        }
        Ok(out)
    }
}
