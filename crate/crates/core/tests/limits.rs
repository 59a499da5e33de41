//! `q -> 1` behaviour of the q-Stirling numbers and the Bernstein basis.

use qbernoulli::limit::{
    classical_bernstein, default_q_seq, non_increasing, normalised_q_bernstein,
    stirling_limit_errors,
};
use qbernoulli::rational::rat;

// Ten times the largest |S_{2,q}(m,k) - S_2(m,k)| measured at q = 999/1000
// for m, k <= 6 (0.3518, at m = 6).
const STIRLING_LIMIT_TOL: (i64, i64) = (36, 10);

#[test]
fn q_stirling_approaches_classical() {
    let seq = default_q_seq();
    let tol = rat(STIRLING_LIMIT_TOL.0, STIRLING_LIMIT_TOL.1);
    for m in 0..=6 {
        for k in 0..=m {
            let e = stirling_limit_errors(m, k, &seq);
            assert!(non_increasing(&e), "S({m},{k}): {e:?}");
            assert!(e[2] <= tol, "S({m},{k}): {}", e[2]);
        }
    }
}

#[test]
fn normalised_bernstein_approaches_classical() {
    let seq = default_q_seq();
    let x0 = rat(2, 5);
    let y0 = rat(0, 1);
    for n in 0..=6 {
        for k in 0..=n {
            let target = classical_bernstein(n, k).eval(&x0, &y0);
            let errors: Vec<_> = seq
                .iter()
                .map(|q| {
                    let v = normalised_q_bernstein(q, n, k).unwrap().eval(&x0, &y0);
                    num_traits::Signed::abs(&(v - &target))
                })
                .collect();
            assert!(non_increasing(&errors), "n={n} k={k}: {errors:?}");
        }
    }
}
