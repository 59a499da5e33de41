//! Structural properties of the polynomial tables.

use proptest::prelude::*;
use qbernoulli::qspecial::{build_table, classical_bernoulli_poly, classical_euler_poly, kernel};
use qbernoulli::rational::rat;
use qbernoulli::series::{big_eq_series, eq_series, ExpArg};
use qbernoulli::{Deformation, Family, Poly2, QParam, Rational, Var};

fn q(p: i64, r: i64) -> QParam {
    QParam::new(rat(p, r)).unwrap()
}

fn qs() -> Vec<QParam> {
    vec![q(1, 2), q(1, 3), q(3, 4)]
}

/// `P^(a+b)_n(x, y) = sum_k [n k] P^(a)_k(x, 0) P^(b)_{n-k}(0, y)`.
#[test]
fn order_additivity() {
    let zero = Rational::from_integer(0.into());
    for q in [q(1, 2), q(3, 4)] {
        let d = Deformation::Q(q.clone());
        for kind in [Family::Bernoulli, Family::Euler] {
            let tables: Vec<_> = (0..=4)
                .map(|a| build_table(&d, kind, a, 8).unwrap())
                .collect();
            for a in 0..=2usize {
                for b in 0..=2usize {
                    for n in 0..=8 {
                        let rhs: Poly2 = (0..=n)
                            .map(|k| {
                                let left = tables[a].at(k, None, Some(&zero));
                                let right = tables[b].at(n - k, Some(&zero), None);
                                (&left * &right).scale(&d.binomial(n as i64, k as i64).unwrap())
                            })
                            .sum();
                        assert_eq!(
                            tables[a + b].entry(n),
                            &rhs,
                            "{kind} a={a} b={b} n={n} q={q}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn entries_have_total_degree_n() {
    for q in qs() {
        let d = Deformation::Q(q);
        for kind in [Family::Bernoulli, Family::Euler] {
            for alpha in 0..=3 {
                let t = build_table(&d, kind, alpha, 8).unwrap();
                for n in 0..=8 {
                    assert_eq!(t.entry(n).total_degree(), Some(n as u32));
                }
            }
        }
    }
}

#[test]
fn classical_low_order_polynomials() {
    let x = Poly2::x();
    let b2 = &(&x * &x) - &x + Poly2::constant(rat(1, 6));
    assert_eq!(classical_bernoulli_poly(2, 1).unwrap(), b2);
    assert_eq!(
        classical_euler_poly(1, 1).unwrap(),
        &x - &Poly2::constant(rat(1, 2))
    );
    assert_eq!(classical_bernoulli_poly(0, 1).unwrap(), Poly2::one());
}

#[test]
fn negative_order_is_supported() {
    // K^-1 e(tx) for Bernoulli: coefficients are sums of shifted powers
    let t = build_table(&Deformation::Q(q(1, 2)), Family::Bernoulli, -1, 4).unwrap();
    assert_eq!(t.number(0), rat(1, 1));
    assert_eq!(t.entry(1).degree_in(Var::X), Some(1));
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(p, r)| rat(p, r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5))]

    /// Evaluating a table entry agrees with extracting the coefficient of a
    /// scalar series `K^alpha e_q(t x0) E_q(t y0)`.
    #[test]
    fn scalar_series_matches_polynomial(x0 in small_rational(), y0 in small_rational(), qi in 0usize..3, alpha in 0i64..=3) {
        let q = qs()[qi].clone();
        let d = Deformation::Q(q.clone());
        for kind in [Family::Bernoulli, Family::Euler] {
            let t = build_table(&d, kind, alpha, 6).unwrap();
            let k = kernel(&d, kind, 6).unwrap().int_power(alpha).unwrap();
            let s = k
                .mul(&eq_series(&q, &ExpArg::Const(x0.clone()), 6))
                .mul(&big_eq_series(&q, &ExpArg::Const(y0.clone()), 6));
            for n in 0..=6 {
                let scalar = s.egf_coefficient(n, &d).unwrap().constant_term();
                prop_assert_eq!(t.entry(n).eval(&x0, &y0), scalar);
            }
        }
    }
}
