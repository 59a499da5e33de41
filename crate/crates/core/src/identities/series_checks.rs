//! Checks that live on the level of series rather than polynomial tables.

use crate::error::Result;
use crate::poly::{symbolic_pair_power, Poly2, Var};
use crate::qcore::QParam;
use crate::qspecial::Family;
use crate::rational::int;
use crate::series::{big_eq_series, eq_series, ExpArg};

use super::{at_y, IdentityReport, Params, QOps, Verifier};

/// `e_q(t) E_q(-t) = 1`, coefficient by coefficient up to `t^n`.
pub fn check_exp_inverse(n: usize, q_set: &[QParam]) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for q in q_set {
        let one = ExpArg::Const(int(1));
        let minus_one = ExpArg::Const(int(-1));
        let product = eq_series(q, &one, n).mul(&big_eq_series(q, &minus_one, n));
        for (i, c) in product.coeffs().iter().enumerate() {
            let expected = if i == 0 { Poly2::one() } else { Poly2::zero() };
            out.push(IdentityReport::new(
                "exp-inverse",
                Params::new().n(i).q(q),
                c.clone(),
                expected,
            ));
        }
    }
    out
}

impl Verifier {
    /// At order zero the kernel is 1, so both families reduce to
    /// `(x + y)_q^n`.
    pub fn check_alpha_zero(&mut self) -> Result<Vec<IdentityReport>> {
        let grid = self.grid.clone();
        let mut out = Vec::new();
        for q in &grid.q_set {
            let tables = self.tables(q, &[0])?;
            let ops = QOps::new(q);
            for kind in [Family::Bernoulli, Family::Euler] {
                let t = tables.get(kind, 0);
                let (id, id_y) = match kind {
                    Family::Bernoulli => ("alpha0-b", "alpha0-y-b"),
                    Family::Euler => ("alpha0-e", "alpha0-y-e"),
                };
                for n in 0..=grid.n_max {
                    let p = || Params::new().n(n).alpha(0).q(q);
                    let pair = symbolic_pair_power(q, n as u32);
                    out.push(IdentityReport::new(id, p(), t.entry(n).clone(), pair));
                    let gauss = (n * n.saturating_sub(1) / 2) as u32;
                    let y_power = Poly2::power_of(Var::Y, n as u32).scale(&ops.pow(gauss as i64));
                    out.push(IdentityReport::new(id_y, p(), at_y(t, n), y_power));
                }
            }
        }
        Ok(out)
    }
}
