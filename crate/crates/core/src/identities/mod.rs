//! Residual checkers for identities between the polynomial families.
//!
//! Every checker evaluates both sides of an identity as exact [`Poly2`]
//! values over a [`Grid`] of parameters and records the difference in an
//! [`IdentityReport`]. An identity holds at a grid point iff its residual is
//! the zero polynomial.

mod bernstein;
mod corollaries;
mod expansions;
pub mod ledger;
mod lemmas;
mod series_checks;
mod stirling;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Poly2, Substitution, Var};
use crate::qcore::{q_binomial, q_number, q_pair_power, Deformation, QParam};
use crate::qspecial::{build_table, Family, PolyTable};
use crate::rational::{int, rat, serde_rational_opt, Rational};

pub use stirling::{stirling_verdicts, StirlingVerdict};

/// Parameter ranges for a verification run.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub n_max: usize,
    pub alpha_set: Vec<i64>,
    pub m_set: Vec<u32>,
    pub q_set: Vec<QParam>,
}

impl Grid {
    pub fn new(
        n_max: usize,
        alpha_set: Vec<i64>,
        m_set: Vec<u32>,
        q_set: Vec<QParam>,
    ) -> Result<Self> {
        if n_max < 2 {
            return Err(Error::InvalidGrid(format!(
                "n_max must be >= 2, got {n_max}"
            )));
        }
        if alpha_set.is_empty() || m_set.is_empty() || q_set.is_empty() {
            return Err(Error::InvalidGrid("parameter sets must be nonempty".into()));
        }
        if m_set.contains(&0) {
            return Err(Error::InvalidGrid("m must be a positive integer".into()));
        }
        let mut alpha_set = alpha_set;
        alpha_set.sort_unstable();
        alpha_set.dedup();
        let mut m_set = m_set;
        m_set.sort_unstable();
        m_set.dedup();
        let mut q_set = q_set;
        q_set.sort();
        q_set.dedup();
        Ok(Grid {
            n_max,
            alpha_set,
            m_set,
            q_set,
        })
    }

    /// `n <= 8`, `alpha in {1,2,3}`, `m in {1,2,3}`, `q in {1/2, 1/3, 3/4}`.
    pub fn standard() -> Self {
        let qs = [rat(1, 2), rat(1, 3), rat(3, 4)]
            .into_iter()
            .map(|v| QParam::new(v).expect("valid q"))
            .collect();
        Grid::new(8, vec![1, 2, 3], vec![1, 2, 3], qs).expect("valid grid")
    }

    /// Orders `>= 1`: the ones for which `alpha - 1` identities make sense.
    pub fn positive_alphas(&self) -> Vec<i64> {
        self.alpha_set.iter().copied().filter(|&a| a >= 1).collect()
    }
}

/// The parameter tuple a report was computed at.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u32>,
    #[serde(
        with = "serde_rational_opt",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub q: Option<Rational>,
    #[serde(
        with = "serde_rational_opt",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub x: Option<Rational>,
}

impl Params {
    pub fn new() -> Self {
        Params::default()
    }
    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }
    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }
    pub fn alpha(mut self, a: i64) -> Self {
        self.alpha = Some(a);
        self
    }
    pub fn m(mut self, m: u32) -> Self {
        self.m = Some(m);
        self
    }
    pub fn q(mut self, q: &QParam) -> Self {
        self.q = Some(q.value().clone());
        self
    }
    pub fn x(mut self, x: Rational) -> Self {
        self.x = Some(x);
        self
    }
}

/// Outcome of checking one identity at one parameter tuple.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub params: Params,
    pub lhs: Poly2,
    pub rhs: Poly2,
    pub residual: Poly2,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub correction_applied: Option<String>,
    /// Whether the uncorrected formula also held here; `None` when the
    /// literal form has no meaning (e.g. an unbound index).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub literal_holds: Option<bool>,
    /// Verdict-only reports record an empirical answer; they do not count
    /// as failures.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub verdict_only: bool,
}

impl IdentityReport {
    pub fn new(id: &str, params: Params, lhs: Poly2, rhs: Poly2) -> Self {
        let residual = &lhs - &rhs;
        IdentityReport {
            identity_id: id.to_string(),
            params,
            pass: residual.is_zero(),
            lhs,
            rhs,
            residual,
            correction_applied: None,
            literal_holds: None,
            verdict_only: false,
        }
    }

    /// Marks the report as checking a ledger-corrected form. `literal` is the
    /// residual of the uncorrected form, if it can be formed at all.
    pub fn corrected(mut self, ledger_ids: &[&str], literal_residual: Option<Poly2>) -> Self {
        debug_assert!(ledger_ids.iter().all(|id| ledger::lookup(id).is_some()));
        self.correction_applied = Some(ledger_ids.join(","));
        self.literal_holds = literal_residual.map(|r| r.is_zero());
        self
    }

    pub fn verdict_only(mut self) -> Self {
        self.verdict_only = true;
        self
    }

    /// `true` when this report should make a run fail.
    pub fn is_failure(&self) -> bool {
        !self.pass && !self.verdict_only
    }

    fn sort_key(&self) -> (&str, &Params) {
        (&self.identity_id, &self.params)
    }
}

/// Sorts reports by identity id, then parameters.
pub fn sort_reports(reports: &mut [IdentityReport]) {
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

/// Polynomial tables for one deformation, built on demand.
#[derive(Debug, Clone)]
pub struct TableCache {
    deformation: Deformation,
    max_n: usize,
    tables: HashMap<(Family, i64), PolyTable>,
}

impl TableCache {
    pub fn new(deformation: Deformation, max_n: usize) -> Self {
        TableCache {
            deformation,
            max_n,
            tables: HashMap::new(),
        }
    }

    pub fn ensure(&mut self, kind: Family, alpha: i64) -> Result<()> {
        if !self.tables.contains_key(&(kind, alpha)) {
            let t = build_table(&self.deformation, kind, alpha, self.max_n)?;
            self.tables.insert((kind, alpha), t);
        }
        Ok(())
    }

    pub fn ensure_all(&mut self, orders: impl IntoIterator<Item = i64>) -> Result<()> {
        for a in orders {
            self.ensure(Family::Bernoulli, a)?;
            self.ensure(Family::Euler, a)?;
        }
        Ok(())
    }

    /// Panics unless [`TableCache::ensure`] was called for this key.
    pub fn get(&self, kind: Family, alpha: i64) -> &PolyTable {
        self.tables
            .get(&(kind, alpha))
            .unwrap_or_else(|| panic!("table {kind} order {alpha} not prepared"))
    }
}

/// Which group of identities to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
    Lemma5,
    Sp1,
    Sp2,
    Corollaries,
    StirlingTheorem,
    Bernstein,
    ExpInverse,
    AlphaZero,
    All,
}

impl Suite {
    pub const EACH: [Suite; 12] = [
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Lemma3,
        Suite::Lemma4,
        Suite::Lemma5,
        Suite::Sp1,
        Suite::Sp2,
        Suite::Corollaries,
        Suite::StirlingTheorem,
        Suite::Bernstein,
        Suite::ExpInverse,
        Suite::AlphaZero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Lemma3 => "lemma3",
            Suite::Lemma4 => "lemma4",
            Suite::Lemma5 => "lemma5",
            Suite::Sp1 => "sp1",
            Suite::Sp2 => "sp2",
            Suite::Corollaries => "corollaries",
            Suite::StirlingTheorem => "stirling-theorem",
            Suite::Bernstein => "bernstein",
            Suite::ExpInverse => "exp-inverse",
            Suite::AlphaZero => "alpha-zero",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::EACH
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Runs checkers against a grid, sharing polynomial tables between them.
pub struct Verifier {
    grid: Grid,
    caches: BTreeMap<QParam, TableCache>,
    classical: TableCache,
}

impl Verifier {
    pub fn new(grid: Grid) -> Self {
        // Some identities reach index n + 1.
        let max_n = grid.n_max + 1;
        Verifier {
            grid,
            caches: BTreeMap::new(),
            classical: TableCache::new(Deformation::Classical, max_n),
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    fn tables(&mut self, q: &QParam, orders: &[i64]) -> Result<&TableCache> {
        let max_n = self.grid.n_max + 1;
        let cache = self
            .caches
            .entry(q.clone())
            .or_insert_with(|| TableCache::new(Deformation::Q(q.clone()), max_n));
        cache.ensure_all(orders.iter().copied())?;
        Ok(cache)
    }

    fn classical_tables(&mut self, orders: &[i64]) -> Result<&TableCache> {
        self.classical.ensure_all(orders.iter().copied())?;
        Ok(&self.classical)
    }

    /// Runs one suite (or all of them); reports come back sorted.
    pub fn run(&mut self, suite: Suite) -> Result<Vec<IdentityReport>> {
        let mut reports = match suite {
            Suite::Lemma1 => self.check_addition()?,
            Suite::Lemma2 => self.check_q_derivative()?,
            Suite::Lemma3 => self.check_difference()?,
            Suite::Lemma4 => self.check_inversion()?,
            Suite::Lemma5 => self.check_recurrence()?,
            Suite::Sp1 => self.check_sp1()?,
            Suite::Sp2 => self.check_sp2()?,
            Suite::Corollaries => self.check_corollaries()?,
            Suite::StirlingTheorem => self.check_stirling_theorem()?,
            Suite::Bernstein => self.check_bernstein()?,
            Suite::ExpInverse => {
                let n = self.grid.n_max;
                let qs = self.grid.q_set.clone();
                series_checks::check_exp_inverse(n, &qs)
            }
            Suite::AlphaZero => self.check_alpha_zero()?,
            Suite::All => {
                let mut all = Vec::new();
                for s in Suite::EACH {
                    all.extend(self.run(s)?);
                }
                all
            }
        };
        sort_reports(&mut reports);
        Ok(reports)
    }
}

macro_rules! free_checker {
    ($($(#[$doc:meta])* $name:ident;)*) => {$(
        $(#[$doc])*
        pub fn $name(grid: &Grid) -> Result<Vec<IdentityReport>> {
            let mut reports = Verifier::new(grid.clone()).$name()?;
            sort_reports(&mut reports);
            Ok(reports)
        }
    )*};
}

free_checker! {
    /// Addition theorems and their `x`/`y` specialisations.
    check_addition;
    /// Jackson derivatives in `x` and `y`.
    check_q_derivative;
    /// Difference equations at `x in {0, 1}` and `y in {0, -1}`.
    check_difference;
    /// Inversion formulas and the monomial expansions.
    check_inversion;
    /// Recurrences with the modulus `m`.
    check_recurrence;
    /// Bernoulli-through-Euler expansions (both forms).
    check_sp1;
    /// Euler-through-Bernoulli expansions (both forms).
    check_sp2;
    /// Special cases of the two expansions, including the classical ones.
    check_corollaries;
    /// Stirling-number expansion; verdict only.
    check_stirling_theorem;
    /// q-Bernstein basis through q-Stirling numbers and Bernoulli polynomials.
    check_bernstein;
    /// Order-zero tables against `(x + y)_q^n`.
    check_alpha_zero;
}

pub use series_checks::check_exp_inverse;

/// Scalar helpers shared by the checkers, bound to one `q`.
pub(crate) struct QOps<'a> {
    pub q: &'a QParam,
}

impl<'a> QOps<'a> {
    pub fn new(q: &'a QParam) -> Self {
        QOps { q }
    }

    /// `[n k]_q`; callers keep `k` in range.
    pub fn bin(&self, n: usize, k: usize) -> Rational {
        q_binomial(self.q, n as i64, k as i64).expect("binomial index in range")
    }

    pub fn num(&self, n: usize) -> Rational {
        q_number(self.q, n as u32)
    }

    /// `q^(e)` for an integer exponent.
    pub fn pow(&self, e: i64) -> Rational {
        self.q.pow(e)
    }

    /// `(1/m - 1)_q^n`.
    pub fn inv_m_minus_one(&self, m: u32, n: usize) -> Rational {
        q_pair_power(self.q, &rat(1, m as i64), &int(-1), n as u32)
    }
}

pub(crate) fn c(r: Rational) -> Poly2 {
    Poly2::constant(r)
}

pub(crate) fn zero() -> Rational {
    Rational::zero()
}

/// `P(x, 0)`
pub(crate) fn at_x(t: &PolyTable, n: usize) -> Poly2 {
    t.at(n, None, Some(&zero()))
}

/// `P(0, y)`
pub(crate) fn at_y(t: &PolyTable, n: usize) -> Poly2 {
    t.at(n, Some(&zero()), None)
}

/// `P(x, y0)`
pub(crate) fn with_y(t: &PolyTable, n: usize, y0: Rational) -> Poly2 {
    t.at(n, None, Some(&y0))
}

/// `P(x0, y)`
pub(crate) fn with_x(t: &PolyTable, n: usize, x0: Rational) -> Poly2 {
    t.at(n, Some(&x0), None)
}

/// `P(m x, 0)`
pub(crate) fn scaled_x(t: &PolyTable, n: usize, m: u32) -> Poly2 {
    at_x(t, n).substitute(Var::X, &Substitution::Scale(int(m as i64)))
}

/// `P(0, m y)`
pub(crate) fn scaled_y(t: &PolyTable, n: usize, m: u32) -> Poly2 {
    at_y(t, n).substitute(Var::Y, &Substitution::Scale(int(m as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_validation() {
        let q = || vec![QParam::new(rat(1, 2)).unwrap()];
        assert!(Grid::new(1, vec![1], vec![1], q()).is_err());
        assert!(Grid::new(2, vec![], vec![1], q()).is_err());
        assert!(Grid::new(2, vec![1], vec![0], q()).is_err());
        assert!(Grid::new(2, vec![1], vec![1], vec![]).is_err());
        let g = Grid::new(2, vec![3, 1, 1], vec![2, 1], q()).unwrap();
        assert_eq!(g.alpha_set, vec![1, 3]);
        assert_eq!(g.m_set, vec![1, 2]);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!("lemma9".parse::<Suite>().is_err());
    }

    #[test]
    fn report_pass_iff_zero_residual() {
        let p = Poly2::x();
        let ok = IdentityReport::new("t", Params::new(), p.clone(), p.clone());
        assert!(ok.pass && ok.residual.is_zero());
        let bad = IdentityReport::new("t", Params::new(), p.clone(), Poly2::y());
        assert!(!bad.pass && bad.is_failure());
        assert!(!bad.clone().verdict_only().is_failure());
    }
}
