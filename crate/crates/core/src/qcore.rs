//! Scalar q-arithmetic: q-integers, q-factorials, Gaussian binomials,
//! q-shifted factorials and the q-analogue of `(a + b)^n`.
//!
//! All functions are exact; `q` is a rational number (see [`QParam`]).

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, parse_rational, pow, Rational};

/// The deformation parameter `q`: any rational other than 0 and 1.
///
/// Values outside `(0, 1)` are accepted, since every identity in this crate
/// is a formal one, but [`QParam::in_analytic_range`] reports `false`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QParam {
    value: Rational,
    strict: bool,
}

impl QParam {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_zero() || value.is_one() {
            return Err(Error::InvalidQ(format_rational(&value)));
        }
        let strict = value > Rational::zero() && value < Rational::one();
        Ok(QParam { value, strict })
    }

    /// Parses `"p/q"` and validates.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_rational(s)?)
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    /// `true` when `0 < q < 1`.
    pub fn in_analytic_range(&self) -> bool {
        self.strict
    }

    pub fn pow(&self, exp: i64) -> Rational {
        pow(&self.value, exp)
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.value))
    }
}

/// `[a]_q = (1 - q^a) / (1 - q)`, i.e. `1 + q + ... + q^(a-1)`.
pub fn q_number(q: &QParam, a: u32) -> Rational {
    let one = Rational::one();
    (&one - q.pow(a as i64)) / (&one - q.value())
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`, with `[0]_q! = 1`.
pub fn q_factorial(q: &QParam, n: u32) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * q_number(q, k))
}

/// Gaussian binomial coefficient `(q;q)_n / ((q;q)_{n-k} (q;q)_k)`.
///
/// Out-of-range `k` is an error, never a silent zero.
pub fn q_binomial(q: &QParam, n: i64, k: i64) -> Result<Rational> {
    if k < 0 || k > n {
        return Err(Error::BinomialOutOfRange { n, k });
    }
    let qq = q.value();
    let num = q_shifted_factorial(q, qq, n as u32);
    let den = q_shifted_factorial(q, qq, (n - k) as u32) * q_shifted_factorial(q, qq, k as u32);
    Ok(num / den)
}

/// `(a;q)_n = prod_{j=0}^{n-1} (1 - q^j a)`.
pub fn q_shifted_factorial(q: &QParam, a: &Rational, n: u32) -> Rational {
    (0..n as i64).fold(Rational::one(), |acc, j| {
        acc * (Rational::one() - q.pow(j) * a)
    })
}

/// `q^(k(k-1)/2)`.
pub fn gauss_exponent(q: &QParam, k: u32) -> Rational {
    let k = k as i64;
    q.pow(k * (k - 1) / 2)
}

/// `(a + b)_q^n = sum_k [n k]_q q^(k(k-1)/2) a^(n-k) b^k`.
pub fn q_pair_power(q: &QParam, a: &Rational, b: &Rational, n: u32) -> Rational {
    (0..=n)
        .map(|k| {
            q_binomial(q, n as i64, k as i64).expect("k in range")
                * gauss_exponent(q, k)
                * pow(a, (n - k) as i64)
                * pow(b, k as i64)
        })
        .sum()
}

/// Either a genuine q-deformation or its classical `q -> 1` limit.
///
/// The series and table machinery is written once against this type, so the
/// classical Bernoulli/Euler polynomials come out of the same code path as
/// their q-analogues.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Deformation {
    Q(QParam),
    Classical,
}

impl Deformation {
    pub fn number(&self, n: u32) -> Rational {
        match self {
            Deformation::Q(q) => q_number(q, n),
            Deformation::Classical => int(n as i64),
        }
    }

    pub fn factorial(&self, n: u32) -> Rational {
        match self {
            Deformation::Q(q) => q_factorial(q, n),
            Deformation::Classical => crate::rational::factorial(n),
        }
    }

    /// `[n k]_q` or `C(n, k)`; same range policy as [`q_binomial`].
    pub fn binomial(&self, n: i64, k: i64) -> Result<Rational> {
        match self {
            Deformation::Q(q) => q_binomial(q, n, k),
            Deformation::Classical if k < 0 || k > n => Err(Error::BinomialOutOfRange { n, k }),
            Deformation::Classical => Ok(crate::rational::binomial(n, k)),
        }
    }

    pub fn gauss_exponent(&self, k: u32) -> Rational {
        match self {
            Deformation::Q(q) => gauss_exponent(q, k),
            Deformation::Classical => Rational::one(),
        }
    }

    pub fn q(&self) -> Option<&QParam> {
        match self {
            Deformation::Q(q) => Some(q),
            Deformation::Classical => None,
        }
    }
}

impl From<QParam> for Deformation {
    fn from(q: QParam) -> Self {
        Deformation::Q(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn half() -> QParam {
        QParam::new(rat(1, 2)).unwrap()
    }

    #[test]
    fn rejects_zero_and_one() {
        assert!(matches!(QParam::new(int(1)), Err(Error::InvalidQ(_))));
        assert!(matches!(QParam::new(int(0)), Err(Error::InvalidQ(_))));
        assert!(matches!(QParam::parse("2/2"), Err(Error::InvalidQ(_))));
        let big = QParam::new(int(2)).unwrap();
        assert!(!big.in_analytic_range());
        assert!(QParam::new(rat(-1, 2)).is_ok());
        assert!(half().in_analytic_range());
    }

    #[test]
    fn q_number_examples() {
        let q = half();
        assert_eq!(q_number(&q, 0), int(0));
        assert_eq!(q_number(&q, 1), int(1));
        // 1 + 1/2 + 1/4
        assert_eq!(q_number(&q, 3), rat(7, 4));
    }

    #[test]
    fn q_factorial_examples() {
        let q = half();
        assert_eq!(q_factorial(&q, 0), int(1));
        assert_eq!(q_factorial(&q, 1), int(1));
        assert_eq!(q_factorial(&q, 3), rat(21, 8));
    }

    #[test]
    fn q_binomial_examples() {
        let q = half();
        assert_eq!(q_binomial(&q, 5, 0).unwrap(), int(1));
        assert_eq!(q_binomial(&q, 2, 1).unwrap(), rat(3, 2));
        // 1 + q + 2q^2 + q^3 + q^4 at q = 1/2
        assert_eq!(q_binomial(&q, 4, 2).unwrap(), rat(35, 16));
        assert_eq!(
            q_binomial(&q, 3, 4),
            Err(Error::BinomialOutOfRange { n: 3, k: 4 })
        );
        assert!(q_binomial(&q, 3, -1).is_err());
    }

    #[test]
    fn shifted_factorial_examples() {
        let q = half();
        assert_eq!(q_shifted_factorial(&q, &int(3), 0), int(1));
        assert_eq!(q_shifted_factorial(&q, &int(1), 2), int(0));
        assert_eq!(q_shifted_factorial(&q, &int(2), 2), int(0));
        assert_eq!(
            q_shifted_factorial(&q, &rat(1, 3), 2),
            rat(2, 3) * rat(5, 6)
        );
    }

    #[test]
    fn gauss_exponent_examples() {
        let q = half();
        assert_eq!(gauss_exponent(&q, 0), int(1));
        assert_eq!(gauss_exponent(&q, 1), int(1));
        assert_eq!(gauss_exponent(&q, 3), rat(1, 8));
    }

    #[test]
    fn pair_power_examples() {
        let q = half();
        assert_eq!(q_pair_power(&q, &int(1), &int(-1), 2), int(0));
        assert_eq!(q_pair_power(&q, &rat(1, 2), &int(-1), 1), rat(-1, 2));
        for n in 0..6 {
            assert_eq!(
                q_pair_power(&q, &rat(5, 3), &int(0), n),
                pow(&rat(5, 3), n as i64)
            );
        }
    }

    #[test]
    fn classical_deformation() {
        let c = Deformation::Classical;
        assert_eq!(c.number(4), int(4));
        assert_eq!(c.factorial(4), int(24));
        assert_eq!(c.binomial(4, 2).unwrap(), int(6));
        assert!(c.binomial(4, 5).is_err());
        assert_eq!(c.gauss_exponent(5), int(1));
    }
}
