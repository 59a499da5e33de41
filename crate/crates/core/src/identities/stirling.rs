//! Expansion of the polynomials through classical Stirling numbers of the
//! second kind. The statement comes without proof, so the checker records
//! an empirical verdict instead of a pass/fail.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::Poly2;
use crate::qspecial::{classical_stirling2, generalized_binomial_poly, Family};
use crate::rational::{factorial, int, pow, rat, serde_rational_opt, Rational};

use super::{at_y, with_x, IdentityReport, Params, QOps, Verifier};

fn report_id(kind: Family) -> &'static str {
    match kind {
        Family::Bernoulli => "stirling-b",
        Family::Euler => "stirling-e",
    }
}

impl Verifier {
    /// Both sides are polynomials in `y` once `x = r/m` is fixed. For each
    /// tuple the `n + 2` points `r = 0..=n+1` pin down the `x`-dependence,
    /// since the left side has degree at most `n` in `x`.
    pub fn check_stirling_theorem(&mut self) -> Result<Vec<IdentityReport>> {
        let grid = self.grid.clone();
        let alphas = grid.alpha_set.clone();
        let mut out = Vec::new();
        for q in &grid.q_set {
            let tables = self.tables(q, &alphas)?;
            let ops = QOps::new(q);
            for kind in [Family::Bernoulli, Family::Euler] {
                for &alpha in &alphas {
                    let t = tables.get(kind, alpha);
                    for &m in &grid.m_set {
                        let mm = int(m as i64);
                        for n in 0..=grid.n_max {
                            for r in 0..=n as i64 + 1 {
                                let x0 = rat(r, m as i64);
                                let lhs = with_x(t, n, x0.clone());
                                let mut rhs = Poly2::zero();
                                for j in 0..=n {
                                    let choose =
                                        generalized_binomial_poly(j).eval(&int(r), &int(0));
                                    if choose.is_zero() {
                                        continue;
                                    }
                                    let inner: Poly2 = (0..=n - j)
                                        .map(|k| {
                                            let w = ops.bin(n, k)
                                                * pow(&mm, j as i64 - n as i64)
                                                * classical_stirling2(n - k, j);
                                            at_y(t, k).scale(&w)
                                        })
                                        .sum();
                                    rhs += inner.scale(&(choose * factorial(j as u32)));
                                }
                                let p = Params::new().n(n).alpha(alpha).m(m).q(q).x(x0);
                                out.push(
                                    IdentityReport::new(report_id(kind), p, lhs, rhs)
                                        .verdict_only(),
                                );
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Aggregated verdict for one `(family, n, alpha, m, q)` tuple: the
/// identity holds there iff it held at every sample point `x = r/m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StirlingVerdict {
    pub family: Family,
    pub n: usize,
    pub alpha: i64,
    pub m: u32,
    #[serde(with = "serde_rational_opt", default)]
    pub q: Option<Rational>,
    pub holds: bool,
    /// Sample points where the two sides differ.
    pub failing_points: usize,
}

/// Groups Stirling reports into per-tuple verdicts, in a stable order.
pub fn stirling_verdicts(reports: &[IdentityReport]) -> Vec<StirlingVerdict> {
    let mut out: Vec<StirlingVerdict> = Vec::new();
    let mut keyed = std::collections::BTreeMap::new();
    for r in reports {
        let family = match r.identity_id.as_str() {
            "stirling-b" => Family::Bernoulli,
            "stirling-e" => Family::Euler,
            _ => continue,
        };
        let p = &r.params;
        let key = (
            family,
            p.n.unwrap_or(0),
            p.alpha.unwrap_or(0),
            p.m.unwrap_or(1),
            p.q.clone(),
        );
        let entry = keyed.entry(key).or_insert((true, 0usize));
        if !r.pass {
            entry.0 = false;
            entry.1 += 1;
        }
    }
    for ((family, n, alpha, m, q), (holds, failing_points)) in keyed {
        out.push(StirlingVerdict {
            family,
            n,
            alpha,
            m,
            q,
            holds,
            failing_points,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::Grid;
    use crate::qcore::QParam;

    fn run(n_max: usize, alphas: Vec<i64>, ms: Vec<u32>) -> Vec<IdentityReport> {
        let grid = Grid::new(n_max, alphas, ms, vec![QParam::new(rat(1, 2)).unwrap()]).unwrap();
        Verifier::new(grid).check_stirling_theorem().unwrap()
    }

    #[test]
    fn reports_are_verdict_only() {
        let reports = run(2, vec![1], vec![1]);
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.verdict_only && !r.is_failure()));
    }

    #[test]
    fn n_zero_holds() {
        let reports = run(2, vec![1, 2], vec![1, 2]);
        let verdicts = stirling_verdicts(&reports);
        for v in verdicts.iter().filter(|v| v.n == 0) {
            assert!(v.holds, "{v:?}");
        }
    }

    #[test]
    fn one_verdict_per_tuple() {
        let reports = run(3, vec![1, 2], vec![1, 2]);
        // 2 families * 4 values of n * 2 alphas * 2 moduli * 1 q
        assert_eq!(stirling_verdicts(&reports).len(), 32);
    }
}
