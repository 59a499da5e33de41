//! Sparse polynomials in two variables `x`, `y` over [`Rational`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::qcore::{gauss_exponent, q_binomial, q_number, QParam};
use crate::rational::{format_rational, pow, serde_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
}

/// What to put in place of a variable in [`Poly2::substitute`].
#[derive(Debug, Clone, PartialEq)]
pub enum Substitution {
    /// `v -> c`
    Const(Rational),
    /// `v -> c * v`
    Scale(Rational),
}

/// A polynomial `sum c_{i,j} x^i y^j`.
///
/// Terms live in a map keyed by `(deg_x, deg_y)`, so iteration order is the
/// canonical lexicographic order. Zero coefficients are never stored, which
/// makes structural equality the same as polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn one() -> Self {
        Poly2::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly2::monomial(0, 0, c)
    }

    pub fn x() -> Self {
        Poly2::monomial(1, 0, Rational::one())
    }

    pub fn y() -> Self {
        Poly2::monomial(0, 1, Rational::one())
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Poly2::x(),
            Var::Y => Poly2::y(),
        }
    }

    pub fn monomial(dx: u32, dy: u32, c: Rational) -> Self {
        let mut p = Poly2::zero();
        p.add_term(dx, dy, c);
        p
    }

    /// Builds from arbitrary `(dx, dy, coeff)` triples; duplicates are summed.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, Rational)>>(terms: I) -> Self {
        let mut p = Poly2::zero();
        for (dx, dy, c) in terms {
            p.add_term(dx, dy, c);
        }
        p
    }

    /// `v^n`
    pub fn power_of(v: Var, n: u32) -> Self {
        match v {
            Var::X => Poly2::monomial(n, 0, Rational::one()),
            Var::Y => Poly2::monomial(0, n, Rational::one()),
        }
    }

    fn add_term(&mut self, dx: u32, dy: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((dx, dy)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> + '_ {
        self.terms.iter().map(|(&(dx, dy), c)| (dx, dy, c))
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> Rational {
        self.terms
            .get(&(dx, dy))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    /// `Some(c)` if the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(dx, dy)| dx + dy).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(dx, dy)| if v == Var::X { dx } else { dy })
            .max()
    }

    pub fn scale(&self, c: &Rational) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly2 {
        let mut acc = Poly2::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x0: &Rational, y0: &Rational) -> Rational {
        self.terms()
            .map(|(dx, dy, c)| c * pow(x0, dx as i64) * pow(y0, dy as i64))
            .sum()
    }

    /// Replaces one variable by a constant or by a multiple of itself.
    pub fn substitute(&self, v: Var, s: &Substitution) -> Poly2 {
        let mut out = Poly2::zero();
        for (dx, dy, c) in self.terms() {
            let d = if v == Var::X { dx } else { dy };
            match s {
                Substitution::Const(a) => {
                    let c = c * pow(a, d as i64);
                    let (nx, ny) = if v == Var::X { (0, dy) } else { (dx, 0) };
                    out.add_term(nx, ny, c);
                }
                Substitution::Scale(a) => out.add_term(dx, dy, c * pow(a, d as i64)),
            }
        }
        out
    }

    /// Convenience for `p(x0, y0)` with both arguments given as optional
    /// constants: `None` leaves that variable symbolic.
    pub fn at(&self, x0: Option<&Rational>, y0: Option<&Rational>) -> Poly2 {
        let mut p = self.clone();
        if let Some(a) = x0 {
            p = p.substitute(Var::X, &Substitution::Const(a.clone()));
        }
        if let Some(b) = y0 {
            p = p.substitute(Var::Y, &Substitution::Const(b.clone()));
        }
        p
    }

    /// General substitution `x -> fx`, `y -> fy`.
    pub fn compose(&self, fx: &Poly2, fy: &Poly2) -> Poly2 {
        let max_x = self.degree_in(Var::X).unwrap_or(0);
        let max_y = self.degree_in(Var::Y).unwrap_or(0);
        let xs = powers(fx, max_x);
        let ys = powers(fy, max_y);
        let mut out = Poly2::zero();
        for (dx, dy, c) in self.terms() {
            out += (&xs[dx as usize] * &ys[dy as usize]).scale(c);
        }
        out
    }

    /// Jackson q-derivative in `v`: sends `v^n` to `[n]_q v^(n-1)`.
    pub fn jackson_derivative(&self, v: Var, q: &QParam) -> Poly2 {
        let mut out = Poly2::zero();
        for (dx, dy, c) in self.terms() {
            match v {
                Var::X if dx > 0 => out.add_term(dx - 1, dy, c * q_number(q, dx)),
                Var::Y if dy > 0 => out.add_term(dx, dy - 1, c * q_number(q, dy)),
                _ => {}
            }
        }
        out
    }

    /// Jackson derivative as the literal difference quotient
    /// `(f(qv) - f(v)) / ((q - 1) v)`; division by `v` is exact because the
    /// numerator has no `v`-free part.
    pub fn jackson_difference_quotient(&self, v: Var, q: &QParam) -> Poly2 {
        let shifted = self.substitute(v, &Substitution::Scale(q.value().clone()));
        let num = &shifted - self;
        let inv = (q.value() - Rational::one()).recip();
        let mut out = Poly2::zero();
        for (dx, dy, c) in num.terms() {
            let (nx, ny) = match v {
                Var::X => (dx - 1, dy),
                Var::Y => (dx, dy - 1),
            };
            out.add_term(nx, ny, c * &inv);
        }
        out
    }
}

fn powers(p: &Poly2, n: u32) -> Vec<Poly2> {
    let mut v = Vec::with_capacity(n as usize + 1);
    v.push(Poly2::one());
    for i in 0..n as usize {
        let next = &v[i] * p;
        v.push(next);
    }
    v
}

/// `(x + y)_q^n = sum_k [n k]_q q^(k(k-1)/2) x^(n-k) y^k`.
pub fn symbolic_pair_power(q: &QParam, n: u32) -> Poly2 {
    Poly2::from_terms((0..=n).map(|k| {
        let c = q_binomial(q, n as i64, k as i64).expect("k in range") * gauss_exponent(q, k);
        (n - k, k, c)
    }))
}

impl Add<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (ax, ay, a) in self.terms() {
            for (bx, by, b) in rhs.terms() {
                out.add_term(ax + bx, ay + by, a * b);
            }
        }
        out
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl AddAssign<&Poly2> for Poly2 {
    fn add_assign(&mut self, rhs: &Poly2) {
        for (dx, dy, c) in rhs.terms() {
            self.add_term(dx, dy, c.clone());
        }
    }
}

impl SubAssign<&Poly2> for Poly2 {
    fn sub_assign(&mut self, rhs: &Poly2) {
        for (dx, dy, c) in rhs.terms() {
            self.add_term(dx, dy, -c);
        }
    }
}

impl AddAssign<Poly2> for Poly2 {
    fn add_assign(&mut self, rhs: Poly2) {
        *self += &rhs;
    }
}

impl SubAssign<Poly2> for Poly2 {
    fn sub_assign(&mut self, rhs: Poly2) {
        *self -= &rhs;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly2> for Poly2 {
            type Output = Poly2;
            fn $m(self, rhs: Poly2) -> Poly2 {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly2> for Poly2 {
            type Output = Poly2;
            fn $m(self, rhs: &Poly2) -> Poly2 {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly2> for &Poly2 {
            type Output = Poly2;
            fn $m(self, rhs: Poly2) -> Poly2 {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        -&self
    }
}

impl std::iter::Sum for Poly2 {
    fn sum<I: Iterator<Item = Poly2>>(iter: I) -> Poly2 {
        let mut acc = Poly2::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl From<Rational> for Poly2 {
    fn from(c: Rational) -> Self {
        Poly2::constant(c)
    }
}

/// Plain-text rendering in canonical term order, e.g. `-2/3 + y + x`.
impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (dx, dy, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mono = monomial_text(dx, dy, "*", "^");
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{}", format_rational(&mag))?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{}*{}", format_rational(&mag), mono)?,
            }
        }
        Ok(())
    }
}

pub(crate) fn monomial_text(dx: u32, dy: u32, sep: &str, caret: &str) -> String {
    let part = |v: &str, d: u32| match d {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}{caret}{d}"),
    };
    let parts: Vec<String> = [part("x", dx), part("y", dy)]
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    parts.join(sep)
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    dx: u32,
    dy: u32,
    #[serde(with = "serde_rational")]
    coeff: Rational,
}

/// Serialised as a JSON array of `{dx, dy, coeff}` with `coeff` as `"p/q"`.
impl Serialize for Poly2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (dx, dy, c) in self.terms() {
            seq.serialize_element(&TermRepr {
                dx,
                dy,
                coeff: c.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Poly2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(d)?;
        Ok(Poly2::from_terms(
            terms.into_iter().map(|t| (t.dx, t.dy, t.coeff)),
        ))
    }
}
