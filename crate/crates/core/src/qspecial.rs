//! q-Bernoulli and q-Euler polynomials of integer order, q-Stirling numbers,
//! q-Bernstein basis polynomials and their classical counterparts.
//!
//! Both polynomial families come from one generating series,
//!
//! ```text
//! K(t)^alpha * e_q(t x) * E_q(t y) = sum_n P_n(x, y) t^n / [n]_q!
//! ```
//!
//! with `K(t) = t / (e_q(t) - 1)` (Bernoulli) or `K(t) = 2 / (e_q(t) + 1)`
//! (Euler). The classical polynomials use the same code with `q -> 1`
//! ([`Deformation::Classical`]); there both exponentials are `exp`, so the
//! classical bivariate table holds `B_n^(alpha)(x + y)`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Poly2, Var};
use crate::qcore::{gauss_exponent, q_binomial, Deformation, QParam};
use crate::rational::{int, Rational};
use crate::series::{big_exp_series, exp_series, ExpArg, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Bernoulli,
    Euler,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Bernoulli => "bernoulli",
            Family::Euler => "euler",
        })
    }
}

/// Which polynomials to build: family, order and `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: Family,
    pub alpha: i64,
    pub q: QParam,
}

impl FamilySpec {
    pub fn new(kind: Family, alpha: i64, q: QParam) -> Self {
        FamilySpec { kind, alpha, q }
    }
}

/// `P_0, ..., P_max_n` of one family at fixed order and deformation.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyTable {
    kind: Family,
    alpha: i64,
    deformation: Deformation,
    entries: Vec<Poly2>,
}

impl PolyTable {
    pub fn kind(&self) -> Family {
        self.kind
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn deformation(&self) -> &Deformation {
        &self.deformation
    }

    pub fn max_n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[Poly2] {
        &self.entries
    }

    /// `P_n(x, y)`. Panics past `max_n`.
    pub fn entry(&self, n: usize) -> &Poly2 {
        &self.entries[n]
    }

    /// `P_n` with `x` and/or `y` fixed to constants.
    pub fn at(&self, n: usize, x0: Option<&Rational>, y0: Option<&Rational>) -> Poly2 {
        self.entries[n].at(x0, y0)
    }

    /// The number `P_n(0, 0)`.
    pub fn number(&self, n: usize) -> Rational {
        self.entries[n].constant_term()
    }
}

/// `t / (e(t) - 1)` or `2 / (e(t) + 1)` up to `t^order`.
pub fn kernel(d: &Deformation, kind: Family, order: usize) -> Result<Series> {
    match kind {
        Family::Bernoulli => {
            // (e(t) - 1) / t has raw coefficients 1/[n+1]!
            let shifted =
                Series::from_scalars((0..=order as u32).map(|n| d.factorial(n + 1).recip()));
            shifted.reciprocal()
        }
        Family::Euler => {
            let e = exp_series(d, &ExpArg::Const(Rational::one()), order);
            let denom = &e + &Series::one(order);
            Ok(denom.reciprocal()?.scale(&int(2)))
        }
    }
}

/// The full generating series `K(t)^alpha e(tx) E(ty)`.
pub fn generating_series(
    d: &Deformation,
    kind: Family,
    alpha: i64,
    order: usize,
) -> Result<Series> {
    let k = kernel(d, kind, order)?.int_power(alpha)?;
    let ex = exp_series(d, &ExpArg::Var(Var::X), order);
    let ey = big_exp_series(d, &ExpArg::Var(Var::Y), order);
    Ok(k.mul(&ex).mul(&ey))
}

/// Builds a table for any deformation.
pub fn build_table(d: &Deformation, kind: Family, alpha: i64, max_n: usize) -> Result<PolyTable> {
    let gf = generating_series(d, kind, alpha, max_n)?;
    let entries = (0..=max_n)
        .map(|n| gf.egf_coefficient(n, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyTable {
        kind,
        alpha,
        deformation: d.clone(),
        entries,
    })
}

pub fn family_table(spec: &FamilySpec, max_n: usize) -> Result<PolyTable> {
    build_table(
        &Deformation::Q(spec.q.clone()),
        spec.kind,
        spec.alpha,
        max_n,
    )
}

/// q-Bernoulli polynomials of order `alpha`.
pub fn q_bernoulli_table(q: &QParam, alpha: i64, max_n: usize) -> Result<PolyTable> {
    family_table(&FamilySpec::new(Family::Bernoulli, alpha, q.clone()), max_n)
}

/// q-Euler polynomials of order `alpha`.
pub fn q_euler_table(q: &QParam, alpha: i64, max_n: usize) -> Result<PolyTable> {
    family_table(&FamilySpec::new(Family::Euler, alpha, q.clone()), max_n)
}

/// Classical Bernoulli/Euler polynomials of order `alpha`; entry `n` is the
/// bivariate `P_n^(alpha)(x + y)`.
pub fn classical_table(kind: Family, alpha: i64, max_n: usize) -> Result<PolyTable> {
    build_table(&Deformation::Classical, kind, alpha, max_n)
}

/// The numbers `P_n(0, 0)` for `n = 0..=max_n`.
pub fn q_number_sequence(spec: &FamilySpec, max_n: usize) -> Result<Vec<Rational>> {
    let t = family_table(spec, max_n)?;
    Ok((0..=max_n).map(|n| t.number(n)).collect())
}

/// Classical `B_n^(alpha)(x)`, a polynomial in `x` only.
pub fn classical_bernoulli_poly(n: usize, alpha: i64) -> Result<Poly2> {
    Ok(classical_table(Family::Bernoulli, alpha, n)?.at(n, None, Some(&Rational::zero())))
}

/// Classical `E_n^(alpha)(x)`, a polynomial in `x` only.
pub fn classical_euler_poly(n: usize, alpha: i64) -> Result<Poly2> {
    Ok(classical_table(Family::Euler, alpha, n)?.at(n, None, Some(&Rational::zero())))
}

/// Stirling numbers of the second kind through the generating function
/// `(e(t) - 1)^k / [k]! = sum_m S(m, k) t^m / [m]!`.
pub fn stirling2_series(d: &Deformation, m: usize, k: usize) -> Rational {
    if m < k {
        return Rational::zero();
    }
    let e = exp_series(d, &ExpArg::Const(Rational::one()), m);
    let base = &e - &Series::one(m);
    let pow = base.int_power(k as i64).expect("nonnegative power");
    let c = pow.coeff(m).expect("in range").constant_term();
    c * d.factorial(m as u32) / d.factorial(k as u32)
}

/// q-Stirling number of the second kind `S_{2,q}(m, k)`.
pub fn q_stirling2(q: &QParam, m: usize, k: usize) -> Rational {
    stirling2_series(&Deformation::Q(q.clone()), m, k)
}

/// Classical `S_2(n, k)` by the recurrence `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn classical_stirling2(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut row = vec![Rational::one()];
    for i in 1..=n {
        let mut next = vec![Rational::zero(); i + 1];
        for j in 1..=i {
            let stay = if j < i {
                int(j as i64) * &row[j]
            } else {
                Rational::zero()
            };
            next[j] = stay + &row[j - 1];
        }
        row = next;
    }
    row[k].clone()
}

/// `b_{n,k}(q; x) = x^k (1 - x)_q^(n-k)`, as a polynomial in `x`.
///
/// This is the unnormalised basis; Phillips' normalised basis is
/// `[n k]_q b_{n,k}(q; x)`.
pub fn q_bernstein(q: &QParam, n: usize, k: usize) -> Result<Poly2> {
    if k > n {
        return Err(Error::BinomialOutOfRange {
            n: n as i64,
            k: k as i64,
        });
    }
    let r = (n - k) as u32;
    let mut out = Poly2::zero();
    for j in 0..=r {
        let sign = if j % 2 == 0 { int(1) } else { int(-1) };
        let c = q_binomial(q, r as i64, j as i64)? * gauss_exponent(q, j) * sign;
        out += Poly2::monomial(k as u32 + j, 0, c);
    }
    Ok(out)
}

/// `z (z - 1) ... (z - j + 1) / j!` with `z` stored as the variable `x`.
pub fn generalized_binomial_poly(j: usize) -> Poly2 {
    let mut acc = Poly2::one();
    for i in 0..j as i64 {
        let factor = Poly2::x() - Poly2::constant(int(i));
        acc = (&acc * &factor).scale(&int(i + 1).recip());
    }
    acc
}
