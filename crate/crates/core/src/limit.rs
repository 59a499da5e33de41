//! `q -> 1` studies: how far a q-object sits from its classical counterpart
//! along a sequence of `q` values approaching 1.
//!
//! Errors are exact rationals; the decimal rendering is for reading only.

use num_traits::Signed;
use serde::Serialize;

use crate::error::Result;
use crate::poly::Poly2;
use crate::qcore::QParam;
use crate::qcore::{q_binomial, Deformation};
use crate::qspecial::{
    build_table, classical_stirling2, classical_table, q_bernstein, q_stirling2, Family,
};
use crate::rational::{binomial, format_decimal, int, rat, serde_rational, Rational};

/// Default sequence `9/10, 99/100, 999/1000`.
pub fn default_q_seq() -> Vec<QParam> {
    [rat(9, 10), rat(99, 100), rat(999, 1000)]
        .into_iter()
        .map(|q| QParam::new(q).expect("inside (0, 1)"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitPoint {
    #[serde(with = "serde_rational")]
    pub q: Rational,
    #[serde(with = "serde_rational")]
    pub value: Rational,
    #[serde(with = "serde_rational")]
    pub error: Rational,
    pub error_decimal: String,
}

/// Distance of `P_n^(alpha)(x, 0; q)` from the classical `P_n^(alpha)(x)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitStudy {
    pub family: Family,
    pub alpha: i64,
    pub n: usize,
    #[serde(with = "serde_rational")]
    pub x: Rational,
    #[serde(with = "serde_rational")]
    pub classical: Rational,
    pub points: Vec<LimitPoint>,
    /// The errors never increase along the sequence.
    pub monotone: bool,
}

impl LimitStudy {
    pub fn errors(&self) -> Vec<Rational> {
        self.points.iter().map(|p| p.error.clone()).collect()
    }

    pub fn last_error(&self) -> Option<&Rational> {
        self.points.last().map(|p| &p.error)
    }
}

/// Whether `errors` is non-increasing. Exact zeros all the way count as
/// monotone, which covers `n = 0`.
pub fn non_increasing(errors: &[Rational]) -> bool {
    errors.windows(2).all(|w| w[1] <= w[0])
}

fn points(values: Vec<(Rational, Rational)>, target: &Rational) -> Vec<LimitPoint> {
    values
        .into_iter()
        .map(|(q, value)| {
            let error = (&value - target).abs();
            LimitPoint {
                q,
                error_decimal: format_decimal(&error),
                value,
                error,
            }
        })
        .collect()
}

pub fn classical_limit(
    kind: Family,
    alpha: i64,
    n: usize,
    x: &Rational,
    q_seq: &[QParam],
) -> Result<LimitStudy> {
    let zero = int(0);
    let classical = classical_table(kind, alpha, n)?.entry(n).eval(x, &zero);
    let mut values = Vec::with_capacity(q_seq.len());
    for q in q_seq {
        let t = build_table(&Deformation::Q(q.clone()), kind, alpha, n)?;
        values.push((q.value().clone(), t.entry(n).eval(x, &zero)));
    }
    let points = points(values, &classical);
    let monotone = non_increasing(&points.iter().map(|p| p.error.clone()).collect::<Vec<_>>());
    Ok(LimitStudy {
        family: kind,
        alpha,
        n,
        x: x.clone(),
        classical,
        points,
        monotone,
    })
}

/// `|S_{2,q}(m, k) - S_2(m, k)|` for each `q` in the sequence.
pub fn stirling_limit_errors(m: usize, k: usize, q_seq: &[QParam]) -> Vec<Rational> {
    let classical = classical_stirling2(m, k);
    q_seq
        .iter()
        .map(|q| (q_stirling2(q, m, k) - &classical).abs())
        .collect()
}

/// `x^k sum_m w(m) S(m, k) B^(k)_{n-m}(1, -x)` evaluated at `x0`, from a
/// table of order `k`.
fn bernstein_rhs_at(
    d: &Deformation,
    n: usize,
    k: usize,
    x0: &Rational,
    s2: impl Fn(usize) -> Rational,
) -> Result<Rational> {
    let t = build_table(d, Family::Bernoulli, k as i64, n)?;
    let mut sum = int(0);
    for m in 0..=n {
        let w = d.binomial(n as i64, m as i64)?;
        sum += w * s2(m) * t.entry(n - m).eval(&int(1), &-x0.clone());
    }
    Ok(crate::rational::pow(x0, k as i64) * sum)
}

/// Error of the Stirling-number side of the Bernstein expansion against its
/// classical form, at `x0`, for each `q`.
pub fn bernstein_limit_errors(
    n: usize,
    k: usize,
    x0: &Rational,
    q_seq: &[QParam],
) -> Result<Vec<Rational>> {
    let classical = bernstein_rhs_at(&Deformation::Classical, n, k, x0, |m| {
        classical_stirling2(m, k)
    })?;
    q_seq
        .iter()
        .map(|q| {
            let v = bernstein_rhs_at(&Deformation::Q(q.clone()), n, k, x0, |m| {
                q_stirling2(q, m, k)
            })?;
            Ok((v - &classical).abs())
        })
        .collect()
}

/// Normalised q-Bernstein basis `[n k]_q x^k (1 - x)_q^(n-k)`.
pub fn normalised_q_bernstein(q: &QParam, n: usize, k: usize) -> Result<Poly2> {
    Ok(q_bernstein(q, n, k)?.scale(&q_binomial(q, n as i64, k as i64)?))
}

/// Classical `C(n, k) x^k (1 - x)^(n-k)`.
pub fn classical_bernstein(n: usize, k: usize) -> Poly2 {
    let one_minus_x = Poly2::one() - Poly2::x();
    (&Poly2::power_of(crate::poly::Var::X, k as u32) * &one_minus_x.pow((n - k) as u32))
        .scale(&binomial(n as i64, k as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(v: &[(i64, i64)]) -> Vec<QParam> {
        v.iter()
            .map(|&(p, r)| QParam::new(rat(p, r)).unwrap())
            .collect()
    }

    #[test]
    fn euler_n2_closed_form() {
        let s = classical_limit(Family::Euler, 1, 2, &int(0), &qs(&[(9, 10), (99, 100)])).unwrap();
        assert_eq!(s.errors(), vec![rat(1, 40), rat(1, 400)]);
        assert!(s.monotone);
    }

    #[test]
    fn n0_has_zero_error() {
        let s = classical_limit(Family::Bernoulli, 1, 0, &rat(1, 2), &default_q_seq()).unwrap();
        assert!(s.errors().iter().all(|e| *e == int(0)));
        assert!(s.monotone);
    }

    #[test]
    fn bernoulli_n1_matches_closed_form() {
        let seq = default_q_seq();
        let s = classical_limit(Family::Bernoulli, 1, 1, &int(0), &seq).unwrap();
        for (p, q) in s.points.iter().zip(&seq) {
            let q = q.value();
            let expected = (int(1) - q) / (int(2) * (int(1) + q));
            assert_eq!(p.error, expected);
        }
        assert!(s.monotone);
    }

    #[test]
    fn stirling_errors_shrink() {
        let e = stirling_limit_errors(5, 2, &default_q_seq());
        assert!(non_increasing(&e));
        assert!(e[2] < rat(1, 10));
    }

    #[test]
    fn bernstein_side_converges() {
        let e = bernstein_limit_errors(4, 2, &rat(1, 3), &default_q_seq()).unwrap();
        assert!(non_increasing(&e), "{e:?}");
    }

    #[test]
    fn monotone_detection() {
        assert!(non_increasing(&[rat(1, 2), rat(1, 2), rat(1, 3)]));
        assert!(!non_increasing(&[rat(1, 3), rat(1, 2)]));
    }
}
