//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so every line appears in plain
//! `cargo test` output. Exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use qbernoulli::cli::{self, OutputDocument, TablePayload};
use qbernoulli::identities::{self, ledger, Grid, Suite, Verifier};
use qbernoulli::limit::{bernstein_limit_errors, classical_limit, default_q_seq, non_increasing};
use qbernoulli::qspecial::{q_bernoulli_table, q_number_sequence};
use qbernoulli::rational::{int, rat};
use qbernoulli::{Family, FamilySpec, QParam, Rational};

// Frozen at ten times the largest error measured at q = 999/1000 over
// n <= 6, x in {0, 1/2, 1}: 2.5013e-4 (Bernoulli) and 6.5475e-3 (Euler).
const BERNOULLI_LIMIT_TOL: (i64, i64) = (26, 10_000);
const EULER_LIMIT_TOL: (i64, i64) = (66, 1_000);

const ORACLE_BUDGET: Duration = Duration::from_secs(5);
const EXP_INVERSE_BUDGET: Duration = Duration::from_secs(1);
const LEMMA_BUDGET: Duration = Duration::from_secs(60);

fn q(p: i64, r: i64) -> QParam {
    QParam::new(rat(p, r)).unwrap()
}

fn three_qs() -> Vec<QParam> {
    vec![q(1, 2), q(1, 3), q(3, 4)]
}

fn default_grid() -> Grid {
    Grid::new(8, vec![1, 2, 3], vec![1, 2, 3], three_qs()).unwrap()
}

/// Gaussian binomials by the Pascal rule `[n k] = [n-1 k-1] + q^k [n-1 k]`,
/// kept separate from the library's product formula.
fn pascal(q: &Rational, n_max: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = vec![vec![int(1)]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![int(1); n + 1];
        let mut qk = int(1);
        for k in 1..n {
            qk *= q;
            row[k] = &prev[k - 1] + &qk * &prev[k];
        }
        rows.push(row);
    }
    rows
}

/// `sum_{k<=n} [n+1 k] b_k = delta_{n0}`, from `K(t) (e_q(t) - 1) = t`.
fn bernoulli_oracle(q: &Rational, n_max: usize) -> Vec<Rational> {
    let bin = pascal(q, n_max + 1);
    let mut b: Vec<Rational> = vec![int(1)];
    for n in 1..=n_max {
        let s: Rational = (0..n).map(|k| &bin[n + 1][k] * &b[k]).sum();
        b.push(-s / &bin[n + 1][n]);
    }
    b
}

/// `sum_{k<=n} [n k] e_k + e_n = 2 delta_{n0}`, from `K(t) (e_q(t) + 1) = 2`.
fn euler_oracle(q: &Rational, n_max: usize) -> Vec<Rational> {
    let bin = pascal(q, n_max);
    let mut e: Vec<Rational> = vec![int(1)];
    for row in bin.iter().skip(1) {
        let s: Rational = e.iter().zip(row).map(|(ek, b)| b * ek).sum();
        e.push(-s / int(2));
    }
    e
}

fn all_pass(reports: &[identities::IdentityReport]) -> Result<(), String> {
    match reports.iter().find(|r| r.is_failure()) {
        None if reports.is_empty() => Err("no reports produced".into()),
        None => Ok(()),
        Some(r) => Err(format!(
            "{} failed at {:?}: residual {}",
            r.identity_id, r.params, r.residual
        )),
    }
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed <= budget {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, budget {budget:?}"))
    }
}

fn c01_stated_constants() -> Result<String, String> {
    for q in three_qs() {
        let spec = FamilySpec::new(Family::Bernoulli, 1, q.clone());
        let b = q_number_sequence(&spec, 1).map_err(|e| e.to_string())?;
        let expected = -(int(1) + q.value()).recip();
        if b[0] != int(1) || b[1] != expected {
            return Err(format!("q = {q}: got {:?}", b));
        }
    }
    Ok("B_0 = 1 and B_1 = -1/[2]_q at q = 1/2, 1/3, 3/4".into())
}

fn c02_oracle_equivalence() -> Result<String, String> {
    let start = Instant::now();
    for q in three_qs() {
        for (kind, oracle) in [
            (Family::Bernoulli, bernoulli_oracle(q.value(), 12)),
            (Family::Euler, euler_oracle(q.value(), 12)),
        ] {
            let got = q_number_sequence(&FamilySpec::new(kind, 1, q.clone()), 12)
                .map_err(|e| e.to_string())?;
            if got != oracle {
                return Err(format!(
                    "{kind} numbers differ from the recurrence at q = {q}"
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, ORACLE_BUDGET)?;
    Ok(format!(
        "n <= 12, both families, 3 values of q, {elapsed:.2?}"
    ))
}

fn c03_exp_inverse() -> Result<String, String> {
    let start = Instant::now();
    let reports = identities::check_exp_inverse(16, &three_qs());
    let elapsed = start.elapsed();
    all_pass(&reports)?;
    if reports.len() != 3 * 17 {
        return Err(format!("expected 51 coefficients, got {}", reports.len()));
    }
    within(elapsed, EXP_INVERSE_BUDGET)?;
    Ok(format!("51 coefficients zero, {elapsed:.2?}"))
}

fn c04_lemmas() -> Result<String, String> {
    let start = Instant::now();
    let mut v = Verifier::new(default_grid());
    let mut count = 0;
    for suite in [
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Lemma3,
        Suite::Lemma4,
        Suite::Lemma5,
    ] {
        let reports = v.run(suite).map_err(|e| e.to_string())?;
        all_pass(&reports)?;
        count += reports.len();
    }
    let elapsed = start.elapsed();
    within(elapsed, LEMMA_BUDGET)?;
    Ok(format!("{count} exact residuals, {elapsed:.2?}"))
}

fn c05_alpha_zero() -> Result<String, String> {
    let grid = Grid::new(10, vec![0], vec![1], three_qs()).unwrap();
    let reports = Verifier::new(grid)
        .run(Suite::AlphaZero)
        .map_err(|e| e.to_string())?;
    all_pass(&reports)?;
    Ok(format!("{} reports for n <= 10", reports.len()))
}

/// Passes, and every correction names a ledger entry that lists the
/// identity and is echoed in the payload.
fn corrections_documented(payload: &cli::VerifyPayload) -> Result<(), String> {
    for r in &payload.reports {
        let Some(applied) = &r.correction_applied else {
            continue;
        };
        for id in applied.split(',') {
            let entry = ledger::lookup(id).ok_or_else(|| format!("{id} is not in the ledger"))?;
            if !entry.identities.contains(&r.identity_id.as_str()) {
                return Err(format!("{id} does not cover {}", r.identity_id));
            }
            if !payload.corrections.iter().any(|c| c.id == id) {
                return Err(format!("{id} missing from the emitted corrections"));
            }
        }
    }
    Ok(())
}

fn c06_expansion_theorems() -> Result<String, String> {
    let mut notes = Vec::new();
    for (suite, ids) in [
        (Suite::Sp1, ["sp1-a", "sp1-b"]),
        (Suite::Sp2, ["sp2-a", "sp2-b"]),
    ] {
        let payload = cli::verify_payload(suite, default_grid()).map_err(|e| e.to_string())?;
        all_pass(&payload.reports)?;
        for id in ids {
            if !payload.reports.iter().any(|r| r.identity_id == id) {
                return Err(format!("{id} not checked"));
            }
        }
        corrections_documented(&payload)?;
        notes.extend(payload.corrections.iter().map(|c| c.id));
    }
    Ok(format!(
        "four formulas exact; corrections: {}",
        notes.join(", ")
    ))
}

fn c07_corollaries() -> Result<String, String> {
    let payload =
        cli::verify_payload(Suite::Corollaries, default_grid()).map_err(|e| e.to_string())?;
    all_pass(&payload.reports)?;
    corrections_documented(&payload)?;
    let wanted = [
        "cw1", "cw2", "cw3", "c1-a", "c1-b", "ce1", "ce2", "ce3-a", "ce3-b", "c2-a", "c2-b",
        "cle-a", "cle-b",
    ];
    for id in wanted {
        if !payload.reports.iter().any(|r| r.identity_id == id) {
            return Err(format!("{id} not checked"));
        }
    }
    Ok(format!("{} reports exact", payload.reports.len()))
}

fn c08_bernstein() -> Result<String, String> {
    let grid = Grid::new(8, vec![1], vec![1], vec![q(1, 2), q(3, 4)]).unwrap();
    let payload = cli::verify_payload(Suite::Bernstein, grid).map_err(|e| e.to_string())?;
    all_pass(&payload.reports)?;
    corrections_documented(&payload)?;
    let exact = payload
        .reports
        .iter()
        .filter(|r| r.identity_id == "bb1")
        .count();
    if exact != 2 * 45 {
        return Err(format!("expected 90 (n, k, q) tuples, got {exact}"));
    }
    let seq = default_q_seq();
    for n in 0..=6 {
        for k in 0..=n {
            let e = bernstein_limit_errors(n, k, &rat(1, 3), &seq).map_err(|e| e.to_string())?;
            if !non_increasing(&e) {
                return Err(format!("limit error not monotone at n={n} k={k}: {e:?}"));
            }
        }
    }
    Ok("0 <= k <= n <= 8 exact at q = 1/2, 3/4; q -> 1 error monotone for n <= 6".into())
}

fn c09_stirling_verdict() -> Result<String, String> {
    let grid = Grid::new(6, vec![1, 2], vec![1, 2], vec![q(1, 2), q(3, 4)]).unwrap();
    let payload = cli::verify_payload(Suite::StirlingTheorem, grid).map_err(|e| e.to_string())?;
    if payload.reports.iter().any(|r| !r.verdict_only) {
        return Err("Stirling reports must be verdict-only".into());
    }
    let verdicts = &payload.stirling_verdicts;
    // 2 families, n = 0..=6, 2 orders, 2 moduli, 2 values of q
    if verdicts.len() != 2 * 7 * 2 * 2 * 2 {
        return Err(format!("expected 112 verdicts, got {}", verdicts.len()));
    }
    let holds = verdicts.iter().filter(|v| v.holds).count();
    Ok(format!(
        "{} verdicts: {holds} hold, {} fail",
        verdicts.len(),
        verdicts.len() - holds
    ))
}

fn c10_classical_limit() -> Result<String, String> {
    let seq = default_q_seq();
    let xs = [rat(0, 1), rat(1, 2), rat(1, 1)];
    let mut worst = Vec::new();
    for (kind, tol) in [
        (Family::Bernoulli, BERNOULLI_LIMIT_TOL),
        (Family::Euler, EULER_LIMIT_TOL),
    ] {
        let tol = rat(tol.0, tol.1);
        let mut max = int(0);
        for n in 0..=6 {
            for x in &xs {
                let s = classical_limit(kind, 1, n, x, &seq).map_err(|e| e.to_string())?;
                if !s.monotone {
                    return Err(format!(
                        "{kind} n={n} x={x}: errors {:?} not monotone",
                        s.errors()
                    ));
                }
                let last = s.last_error().cloned().unwrap_or_default();
                if last > tol {
                    return Err(format!("{kind} n={n} x={x}: error {last} above {tol}"));
                }
                max = max.max(last);
            }
        }
        worst.push(format!(
            "{kind} max {}",
            qbernoulli::rational::format_decimal(&max)
        ));
    }
    Ok(format!("monotone for n <= 6; {}", worst.join(", ")))
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("qbe").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, out)
}

fn c11_cli_determinism() -> Result<String, String> {
    let commands: [&[&str]; 4] = [
        &[
            "--no-meta",
            "table",
            "--family",
            "qbernoulli",
            "--alpha",
            "2",
            "--n-max",
            "6",
            "--q",
            "1/2",
        ],
        &[
            "--no-meta",
            "table",
            "--family",
            "qeuler",
            "--n-max",
            "5",
            "--q",
            "3/4",
            "--format",
            "latex",
        ],
        &[
            "--no-meta",
            "table",
            "--family",
            "qstirling",
            "--n-max",
            "5",
            "--q",
            "1/3",
            "--format",
            "csv",
        ],
        &[
            "--no-meta",
            "verify",
            "--suite",
            "lemma1",
            "--n-max",
            "3",
            "--alpha-set",
            "1,2",
            "--q-set",
            "1/2",
        ],
    ];
    for args in commands {
        let (c1, a) = run_cli(args);
        let (c2, b) = run_cli(args);
        if c1 != 0 || c2 != 0 {
            return Err(format!("{args:?} exited {c1}/{c2}"));
        }
        if a != b {
            return Err(format!("{args:?} output differs between runs"));
        }
    }

    let (_, json) = run_cli(&[
        "--no-meta",
        "table",
        "--family",
        "qbernoulli",
        "--alpha",
        "1",
        "--n-max",
        "8",
        "--q",
        "1/2",
    ]);
    let doc: OutputDocument<TablePayload> =
        serde_json::from_slice(&json).map_err(|e| e.to_string())?;
    let table = q_bernoulli_table(&q(1, 2), 1, 8).map_err(|e| e.to_string())?;
    for row in &doc.payload.rows {
        if row.poly.as_ref() != Some(table.entry(row.n)) {
            return Err(format!("row {} does not round-trip", row.n));
        }
    }
    Ok("4 commands byte-identical; q-Bernoulli JSON round-trips exactly".into())
}

type Criterion = (u32, &'static str, fn() -> Result<String, String>);

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "stated constants", c01_stated_constants),
        (2, "series vs recurrence oracle", c02_oracle_equivalence),
        (3, "e_q(t) E_q(-t) = 1", c03_exp_inverse),
        (4, "lemma suites on the default grid", c04_lemmas),
        (5, "order-zero reduction", c05_alpha_zero),
        (
            6,
            "Bernoulli/Euler expansion theorems",
            c06_expansion_theorems,
        ),
        (7, "corollaries, q and classical", c07_corollaries),
        (8, "Bernstein expansion and its limit", c08_bernstein),
        (9, "Stirling expansion verdict", c09_stirling_verdict),
        (10, "classical-limit study", c10_classical_limit),
        (
            11,
            "CLI determinism and JSON round trip",
            c11_cli_determinism,
        ),
    ];
    let mut failed = 0;
    for (n, name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
