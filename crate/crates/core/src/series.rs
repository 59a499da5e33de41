//! Truncated power series in `t` with [`Poly2`] coefficients.
//!
//! Coefficients are stored raw: `coeffs[n]` multiplies `t^n`. The
//! q-exponential view `a_n = [n]_q! * coeffs[n]`, which is how every family
//! in this crate is indexed, is available through [`Series::egf_coefficient`].

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly2, Var};
use crate::qcore::{Deformation, QParam};
use crate::rational::{pow, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    coeffs: Vec<Poly2>,
}

/// Argument of an exponential series: `exp(t*x)`, `exp(t*y)` or `exp(t*c)`.
#[derive(Debug, Clone, PartialEq)]
pub enum ExpArg {
    Var(Var),
    Const(Rational),
}

impl ExpArg {
    fn power(&self, n: u32) -> Poly2 {
        match self {
            ExpArg::Var(v) => Poly2::power_of(*v, n),
            ExpArg::Const(c) => Poly2::constant(pow(c, n as i64)),
        }
    }
}

impl Series {
    /// A series of truncation order `coeffs.len() - 1`. Panics if empty.
    pub fn new(coeffs: Vec<Poly2>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least t^0");
        Series { coeffs }
    }

    pub fn from_scalars<I: IntoIterator<Item = Rational>>(coeffs: I) -> Self {
        Series::new(coeffs.into_iter().map(Poly2::constant).collect())
    }

    pub fn constant(c: Poly2, order: usize) -> Self {
        let mut coeffs = vec![Poly2::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Poly2::one(), order)
    }

    /// Highest retained power of `t`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly2] {
        &self.coeffs
    }

    /// Raw coefficient of `t^n`.
    pub fn coeff(&self, n: usize) -> Result<&Poly2> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    /// `[n]! * coeffs[n]` for the given deformation (`n!` when classical).
    pub fn egf_coefficient(&self, n: usize, d: &Deformation) -> Result<Poly2> {
        Ok(self.coeff(n)?.scale(&d.factorial(n as u32)))
    }

    /// `[n]_q! * coeffs[n]`.
    pub fn coefficient_as_polynomial(&self, n: usize, q: &QParam) -> Result<Poly2> {
        self.egf_coefficient(n, &Deformation::Q(q.clone()))
    }

    pub fn truncate(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs[..=order.min(self.order())].to_vec();
        coeffs.resize(order + 1, Poly2::zero());
        Series { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// `a(t) -> a(c t)`.
    pub fn scale_arg(&self, c: &Rational) -> Series {
        let mut cn = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for p in &self.coeffs {
            coeffs.push(p.scale(&cn));
            cn *= c;
        }
        Series { coeffs }
    }

    /// `(a(t) - a(0)) / t`, losing one order of precision.
    pub fn shift_down(&self) -> Series {
        if self.order() == 0 {
            return Series::one(0).scale(&Rational::zero());
        }
        Series {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .map(|k| &self.coeffs[k] * &other.coeffs[n - k])
                    .sum()
            })
            .collect();
        Series { coeffs }
    }

    /// Multiplicative inverse; needs a nonzero constant `t^0` coefficient.
    pub fn reciprocal(&self) -> Result<Series> {
        let c0 = self.coeffs[0].as_constant().ok_or(Error::NotInvertible)?;
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = c0.recip();
        let neg_inv0 = -&inv0;
        let mut out: Vec<Poly2> = vec![Poly2::constant(inv0)];
        for n in 1..=self.order() {
            let s: Poly2 = (1..=n).map(|k| &self.coeffs[k] * &out[n - k]).sum();
            out.push(s.scale(&neg_inv0));
        }
        Ok(Series { coeffs: out })
    }

    /// `a^alpha` for any integer `alpha`; negative powers go through
    /// [`Series::reciprocal`].
    pub fn int_power(&self, alpha: i64) -> Result<Series> {
        let base = if alpha < 0 {
            self.reciprocal()?
        } else {
            self.clone()
        };
        let mut e = alpha.unsigned_abs();
        let mut acc = Series::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Substitutes `t = t0` in the truncated polynomial.
    pub fn eval_t(&self, t0: &Rational) -> Poly2 {
        let mut acc = Poly2::zero();
        for p in self.coeffs.iter().rev() {
            acc = acc.scale(t0) + p;
        }
        acc
    }
}

impl Add<&Series> for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Sub<&Series> for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Mul<&Series> for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

/// `sum arg^n t^n / [n]!` for any deformation.
pub fn exp_series(d: &Deformation, arg: &ExpArg, order: usize) -> Series {
    Series {
        coeffs: (0..=order as u32)
            .map(|n| arg.power(n).scale(&d.factorial(n).recip()))
            .collect(),
    }
}

/// `sum q^(n(n-1)/2) arg^n t^n / [n]!`; coincides with [`exp_series`]
/// in the classical case.
pub fn big_exp_series(d: &Deformation, arg: &ExpArg, order: usize) -> Series {
    Series {
        coeffs: (0..=order as u32)
            .map(|n| arg.power(n).scale(&(d.gauss_exponent(n) / d.factorial(n))))
            .collect(),
    }
}

/// `e_q(t*arg)`.
pub fn eq_series(q: &QParam, arg: &ExpArg, order: usize) -> Series {
    exp_series(&Deformation::Q(q.clone()), arg, order)
}

/// `E_q(t*arg)`.
pub fn big_eq_series(q: &QParam, arg: &ExpArg, order: usize) -> Series {
    big_exp_series(&Deformation::Q(q.clone()), arg, order)
}
