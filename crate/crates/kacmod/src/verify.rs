//! The verification harness: the worked gl(4/5) example, the gl(2/2) row
//! case-lists, the closed-form row of the inverted matrix, the randomized
//! identity suites, and the exact character consistency checks, each as a
//! named check with a self-contained claim string.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::atypicality::{
    delta_set_oracle, gamma_chain, mu_zero, nabla_profile, odd_reflection_walk,
};
use crate::caps::Caps;
use crate::characters::{char_simple, decompose_g0, verify_kac_decomposition};
use crate::kl::{assemble_aq_on_interval, invert_unitriangular, kl_zero_closed_form};
use crate::multiplicity::{column_q, row_q};
use crate::qpoly::QPolynomial;
use crate::report::{run_check, CheckResult, VerificationReport};
use crate::weight::{enumerate_interval, two_rho_one_for, IntegralWeight, OddRoot};

/// Test-mode fault injection, used to demonstrate that the harness detects
/// a broken invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaultInjection {
    /// Inflates k_1 before the full-theta identity check.
    InflateK1,
}

fn w(eps: &[i64], delta: &[i64]) -> IntegralWeight {
    IntegralWeight::new(eps.to_vec(), delta.to_vec())
}

fn gl45_mu() -> IntegralWeight {
    w(&[2, 1, 0, 0], &[0, -2, -2, -2, -2])
}

fn roots(pairs: &[(usize, usize)]) -> Vec<OddRoot> {
    pairs.iter().map(|&(i, j)| OddRoot::new(i, j)).collect()
}

/// Deterministic sample of dominant weights with coordinates in [-5, 5].
fn sample_dominant(m: usize, n: usize, count: usize, seed: u64) -> Vec<IntegralWeight> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut eps: Vec<i64> = (0..m).map(|_| rng.gen_range(-5..=5)).collect();
            let mut delta: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
            eps.sort_unstable_by(|a, b| b.cmp(a));
            delta.sort_unstable_by(|a, b| b.cmp(a));
            IntegralWeight::new(eps, delta)
        })
        .collect()
}

const SUITE_ALGEBRAS: [(usize, usize); 4] = [(2, 2), (3, 2), (2, 3), (3, 3)];
const SUITE_SAMPLES: usize = 100;

fn suite_seed(m: usize, n: usize) -> u64 {
    0x6b61636d + (m * 16 + n) as u64
}

/// Criterion 1: the full gl(4/5) atypicality profile of
/// mu = (2,1,0,0|0,-2,-2,-2,-2).
pub fn check_gl45_profile() -> CheckResult {
    run_check(
        "gl(4/5) atypicality profile of mu = (2,1,0,0|0,-2,-2,-2,-2)",
        "atypicality matrix, gamma chain, Delta/nabla sets, k = (2,5,2), connectedness, mu_0, and d-dot(mu + sum k_i gamma_i)",
        || {
            let mu = gl45_mu();
            let matrix = crate::atypicality::atypicality_matrix(&mu)?;
            let expected_matrix = vec![
                vec![5, 2, 1, 0, -1],
                vec![3, 0, -1, -2, -3],
                vec![1, -2, -3, -4, -5],
                vec![0, -3, -4, -5, -6],
            ];
            let profile = nabla_profile(&mu)?;
            let expected_gamma = roots(&[(4, 1), (2, 2), (1, 4)]);
            let expected_delta1 =
                roots(&[(4, 1), (3, 1), (2, 2), (2, 3), (2, 4), (2, 5), (1, 3), (1, 4), (1, 5)]);
            let expected_delta2 = roots(&[(2, 2), (2, 3), (2, 4), (2, 5), (1, 3), (1, 4), (1, 5)]);
            let expected_delta3 = roots(&[(1, 4), (1, 5)]);
            let expected_nabla1 = roots(&[(4, 1), (3, 1)]);
            let expected_nabla2 = roots(&[(2, 2), (2, 3), (2, 4), (2, 5), (1, 3)]);
            let expected_nabla3 = roots(&[(1, 4), (1, 5)]);
            let expected_mu0 = w(&[0, 0, -4, -4], &[2, 1, 0, 0, 0]);
            let rel = profile.connectedness();
            let full_theta = crate::multiplicity::lambda_theta(&mu, &[1, 1, 1])?;
            let expected_top = w(&[5, 5, 1, 1], &[-2, -3, -4, -4, -4]);

            let ok = matrix == expected_matrix
                && profile.gamma == expected_gamma
                && profile.delta_sets == vec![expected_delta1, expected_delta2, expected_delta3]
                && profile.nabla_sets == vec![expected_nabla1, expected_nabla2, expected_nabla3]
                && profile.k == vec![2, 5, 2]
                && profile.mu_zero == expected_mu0
                && !rel[0][1]
                && !rel[0][2]
                && rel[1][2]
                && full_theta == expected_top;
            Ok((
                "k = (2,5,2), mu_0 = 0,0,-4,-4|2,1,0,0,0, top = 5,5,1,1|-2,-3,-4,-4,-4".into(),
                format!(
                    "k = {:?}, mu_0 = {}, top = {full_theta}",
                    profile.k, profile.mu_zero
                ),
                ok,
            ))
        },
    )
}

/// Criterion 2: the eight (theta, mu_theta, lambda_theta) rows of the
/// gl(4/5) example.
pub fn check_gl45_theta_table() -> CheckResult {
    run_check(
        "gl(4/5) theta table of mu = (2,1,0,0|0,-2,-2,-2,-2)",
        "all 8 rows (theta, mu_theta, lambda_theta) of the 2^3 column",
        || {
            let col = column_q(&gl45_mu())?;
            let expected: Vec<(Vec<u8>, IntegralWeight, IntegralWeight)> = vec![
                (
                    vec![0, 0, 0],
                    w(&[2, 1, 0, 0], &[0, -2, -2, -2, -2]),
                    w(&[2, 1, 0, 0], &[0, -2, -2, -2, -2]),
                ),
                (
                    vec![1, 0, 0],
                    w(&[2, 1, 0, 2], &[-2, -2, -2, -2, -2]),
                    w(&[2, 1, 1, 1], &[-2, -2, -2, -2, -2]),
                ),
                (
                    vec![0, 1, 0],
                    w(&[2, 6, 0, 0], &[0, -7, -2, -2, -2]),
                    w(&[5, 3, 0, 0], &[0, -3, -3, -3, -4]),
                ),
                (
                    vec![0, 0, 1],
                    w(&[4, 1, 0, 0], &[0, -2, -2, -4, -2]),
                    w(&[4, 1, 0, 0], &[0, -2, -2, -3, -3]),
                ),
                (
                    vec![1, 1, 0],
                    w(&[2, 6, 0, 2], &[-2, -7, -2, -2, -2]),
                    w(&[5, 3, 1, 1], &[-2, -3, -3, -3, -4]),
                ),
                (
                    vec![1, 0, 1],
                    w(&[4, 1, 0, 2], &[-2, -2, -2, -4, -2]),
                    w(&[4, 1, 1, 1], &[-2, -2, -2, -3, -3]),
                ),
                (
                    vec![0, 1, 1],
                    w(&[4, 6, 0, 0], &[0, -7, -2, -4, -2]),
                    w(&[5, 5, 0, 0], &[0, -3, -4, -4, -4]),
                ),
                (
                    vec![1, 1, 1],
                    w(&[4, 6, 0, 2], &[-2, -7, -2, -4, -2]),
                    w(&[5, 5, 1, 1], &[-2, -3, -4, -4, -4]),
                ),
            ];
            let mut bad = Vec::new();
            if col.entries.len() != expected.len() {
                bad.push(format!("{} rows instead of 8", col.entries.len()));
            }
            for (entry, (theta, mu_theta, lambda)) in col.entries.iter().zip(&expected) {
                if &entry.theta != theta
                    || &entry.mu_theta != mu_theta
                    || &entry.lambda_theta != lambda
                {
                    bad.push(format!("theta {theta:?}"));
                }
            }
            Ok((
                "the 8 printed rows".into(),
                if bad.is_empty() {
                    "all rows match".into()
                } else {
                    format!("mismatches: {bad:?}")
                },
                bad.is_empty(),
            ))
        },
    )
}

fn expected_gl22_row(x: i64, y: i64) -> Vec<(IntegralWeight, QPolynomial)> {
    let lambda = w(&[x, y], &[-y, -x]);
    let one = QPolynomial::one();
    let minus_q = QPolynomial::neg_q_pow(1);
    let q2 = QPolynomial::neg_q_pow(2);
    if x == y {
        vec![
            (lambda, one),
            (w(&[x, y - 1], &[-y + 1, -x]), minus_q),
            (w(&[x - 2, y - 2], &[-y + 2, -x + 2]), q2),
        ]
    } else if x == y + 1 {
        vec![
            (lambda, one),
            (w(&[x, y - 1], &[-y + 1, -x]), minus_q.clone()),
            (w(&[x - 1, y], &[-y, -x + 1]), minus_q.clone()),
            (w(&[x - 2, y - 1], &[-y + 1, -x + 2]), minus_q),
            (w(&[x - 1, y - 1], &[-y + 1, -x + 1]), q2),
        ]
    } else {
        vec![
            (lambda, one),
            (w(&[x - 1, y], &[-y, -x + 1]), minus_q.clone()),
            (w(&[x, y - 1], &[-y + 1, -x]), minus_q),
            (w(&[x - 1, y - 1], &[-y + 1, -x + 1]), q2),
        ]
    }
}

/// Criterion 3: rows of the doubly atypical gl(2/2) block match the three
/// case-lists.
pub fn check_gl22_rows(caps: &Caps) -> CheckResult {
    run_check(
        "gl(2/2) rows at (x,y|-y,-x)",
        "row coefficients are 1, -q (and q^2) exactly at the case-list weights, zero elsewhere",
        || {
            let cases = [(3i64, 3i64), (3, 2), (4, 1), (1, 0), (2, 1), (2, 2)];
            let mut bad = Vec::new();
            for (x, y) in cases {
                let lambda = w(&[x, y], &[-y, -x]);
                let actual: BTreeMap<IntegralWeight, QPolynomial> =
                    row_q(&lambda, caps.window)?.into_iter().collect();
                let expected: BTreeMap<IntegralWeight, QPolynomial> =
                    expected_gl22_row(x, y).into_iter().collect();
                if actual != expected {
                    bad.push(format!("(x,y) = ({x},{y})"));
                }
            }
            Ok((
                "6 case rows".into(),
                if bad.is_empty() {
                    "all rows match".into()
                } else {
                    format!("mismatches: {bad:?}")
                },
                bad.is_empty(),
            ))
        },
    )
}

/// Criterion 4: the row of the inverted matrix at the zero weight on a
/// gl(2/2) window covering the sigma-pattern weights with x + y <= 6.
pub fn check_kl_row_at_zero(caps: &Caps) -> CheckResult {
    run_check(
        "gl(2/2) inverted row at 0",
        "row at 0 of the inverse equals q^{x+y} at the (-x,-y|y,x) columns (0 <= x <= y, x+y <= 6) and 0 elsewhere",
        || {
            let lo = w(&[-3, -3], &[3, 3]);
            let hi = w(&[0, 0], &[0, 0]);
            let aq = assemble_aq_on_interval(&lo, &hi, caps.window)?;
            let kq = invert_unitriangular(&aq)?;
            let r0 = kq
                .index_of(&hi)
                .ok_or_else(|| crate::Error::Internal("zero weight missing from window".into()))?;
            // the window must contain all sixteen target columns
            let mut targets = 0usize;
            for x in 0i64..=3 {
                for y in x..=(6 - x) {
                    let mu = w(&[-x, -y], &[y, x]);
                    let c = kq
                        .index_of(&mu)
                        .ok_or_else(|| crate::Error::Internal(format!("{mu} missing from window")))?;
                    targets += 1;
                    let expected = QPolynomial::monomial(1, (x + y) as usize);
                    if kq.get(r0, c) != expected {
                        return Ok((
                            format!("K[0, {mu}] = {expected}"),
                            format!("K[0, {mu}] = {}", kq.get(r0, c)),
                            false,
                        ));
                    }
                }
            }
            // and vanish on every other column
            for (c, mu) in kq.window().iter().enumerate() {
                let closed = kl_zero_closed_form(mu);
                let actual = kq.get(r0, c);
                if closed.is_zero() && !actual.is_zero() {
                    return Ok((
                        format!("K[0, {mu}] = 0"),
                        format!("K[0, {mu}] = {actual}"),
                        false,
                    ));
                }
            }
            Ok((
                "16 sigma columns with q^{x+y}, zero elsewhere".into(),
                format!("{targets} sigma columns match on a window of {}", kq.len()),
                true,
            ))
        },
    )
}

/// Criterion 5: randomized identity suites over gl(2/2), gl(3/2), gl(2/3),
/// gl(3/3).
pub fn check_identity_suites(caps: &Caps, fault: Option<FaultInjection>) -> CheckResult {
    run_check(
        "identity suites on 100 random dominant weights per algebra",
        "sum_theta (-q)^|theta| = (1-q)^{#mu}; d-dot(mu + sum k_i gamma_i) = mu_0 + 2 rho_1; #lambda_theta = #mu; lambda_theta dominant and distinct; rule Delta-set = oracle Delta-set",
        || {
            let mut failures = Vec::new();
            let mut tested = 0usize;
            for (m, n) in SUITE_ALGEBRAS {
                for mu in sample_dominant(m, n, SUITE_SAMPLES, suite_seed(m, n)) {
                    tested += 1;
                    let profile = nabla_profile(&mu)?;
                    let col = column_q(&mu)?;
                    let r = col.degree();

                    let sum = col
                        .entries
                        .iter()
                        .fold(QPolynomial::zero(), |acc, e| acc.add(&e.coeff));
                    if sum != QPolynomial::one_minus_q_pow(r) {
                        failures.push(format!("column sum at {mu}"));
                    }

                    // full-theta identity, with optional fault injection on k_1
                    let mut k_eff: Vec<i64> = profile.k.iter().map(|&v| v as i64).collect();
                    if fault == Some(FaultInjection::InflateK1) {
                        if let Some(first) = k_eff.first_mut() {
                            *first += 1;
                        }
                    }
                    let shape = mu.shape();
                    let mut climbed = mu.clone();
                    for (idx, &k) in k_eff.iter().enumerate() {
                        climbed = climbed.add_scaled(&profile.gamma[idx].to_weight(shape), k);
                    }
                    let top = profile.mu_zero.add(&two_rho_one_for(shape));
                    match climbed.dot_dominant() {
                        Some(lambda) if lambda == top => {}
                        _ => failures.push(format!("full-theta identity at {mu}")),
                    }

                    let mut seen = HashSet::new();
                    for entry in &col.entries {
                        if gamma_chain(&entry.lambda_theta)?.len() != r {
                            failures.push(format!("atypicality degree at {mu}, theta {:?}", entry.theta));
                        }
                        if !entry.lambda_theta.is_dominant() || !seen.insert(entry.lambda_theta.clone()) {
                            failures.push(format!("dominance/distinctness at {mu}, theta {:?}", entry.theta));
                        }
                    }

                    for (idx, gamma) in profile.gamma.iter().enumerate() {
                        let rule: std::collections::BTreeSet<OddRoot> =
                            profile.delta_sets[idx].iter().copied().collect();
                        let oracle: std::collections::BTreeSet<OddRoot> =
                            delta_set_oracle(&mu, *gamma, caps.oracle_states)?.into_iter().collect();
                        if rule != oracle {
                            failures.push(format!("Delta-set rule vs oracle at {mu}, gamma {gamma}"));
                        }
                    }
                }
            }
            Ok((
                format!("0 failures over {tested} weights"),
                if failures.is_empty() {
                    format!("0 failures over {tested} weights")
                } else {
                    format!("{} failures, first: {}", failures.len(), failures[0])
                },
                failures.is_empty(),
            ))
        },
    )
}

/// Criterion 6: mu_0 computed by the Delta(gamma_1) formula agrees with the
/// odd-reflection walk on the same samples.
pub fn check_mu_zero_dual() -> CheckResult {
    run_check(
        "mu_0 dual computation on the 400 samples",
        "mu minus the odd roots outside Delta(gamma_1) equals the endpoint of the odd-reflection walk",
        || {
            let mut tested = 0usize;
            for (m, n) in SUITE_ALGEBRAS {
                for mu in sample_dominant(m, n, SUITE_SAMPLES, suite_seed(m, n)) {
                    tested += 1;
                    let direct = mu_zero(&mu)?;
                    let (walked, _) = odd_reflection_walk(&mu)?;
                    if direct != walked {
                        return Ok((
                            "agreement".into(),
                            format!("disagreement at {mu}: formula {direct}, walk {walked}"),
                            false,
                        ));
                    }
                }
            }
            Ok((format!("{tested} agreements"), format!("{tested} agreements"), true))
        },
    )
}

/// Criterion 7: positivity and branching of the doubly atypical gl(2/2)
/// simple characters.
pub fn check_gl22_characters(caps: &Caps) -> CheckResult {
    run_check(
        "gl(2/2) simple characters at (x,y|-y,-x), |x|,|y| <= 3",
        "nonnegative multiplicities, multiplicity 1 at mu, and smallest g0 constituent mu_0 with multiplicity 1",
        || {
            let mut tested = 0usize;
            for x in -3i64..=3 {
                for y in -3i64..=x {
                    tested += 1;
                    let mu = w(&[x, y], &[-y, -x]);
                    let chi = char_simple(&mu, caps)?;
                    if chi.multiplicity(&mu) != 1 {
                        return Ok((
                            "multiplicity 1 at mu".into(),
                            format!("multiplicity {} at {mu}", chi.multiplicity(&mu)),
                            false,
                        ));
                    }
                    let parts = decompose_g0(&chi, caps)?;
                    let mu0 = mu_zero(&mu)?;
                    let bottom_ok = matches!(parts.iter().find(|(nu, _)| *nu == mu0), Some((_, 1)));
                    let is_smallest = parts.iter().all(|(nu, _)| mu0.leq(nu).unwrap_or(false));
                    if !(bottom_ok && is_smallest) {
                        return Ok((
                            format!("smallest constituent {mu0} with multiplicity 1"),
                            format!("constituents of {mu}: {parts:?}"),
                            false,
                        ));
                    }
                }
            }
            Ok((format!("{tested} weights"), format!("{tested} weights pass"), true))
        },
    )
}

/// Criterion 8: ch V_lambda = sum a_{lambda,mu} ch L_mu exactly on small
/// windows of gl(1/1), gl(2/1), gl(1/2) and three gl(2/2) weights.
pub fn check_kac_consistency(caps: &Caps) -> CheckResult {
    run_check(
        "Kac decomposition consistency",
        "ch V_lambda equals the sum of its composition-factor characters, exactly",
        || {
            let mut lambdas: Vec<IntegralWeight> = Vec::new();
            for a in -2i64..=2 {
                for b in -2i64..=2 {
                    lambdas.push(w(&[a], &[b]));
                }
            }
            for a1 in -2i64..=2 {
                for a2 in -2i64..=a1 {
                    for b in -2i64..=2 {
                        lambdas.push(w(&[a1, a2], &[b]));
                        lambdas.push(w(&[b], &[a1, a2]));
                    }
                }
            }
            lambdas.push(w(&[1, 1], &[-1, -1]));
            lambdas.push(w(&[2, 1], &[-1, -2]));
            lambdas.push(w(&[1, 0], &[0, -1]));
            let total = lambdas.len();
            for lambda in lambdas {
                let report = verify_kac_decomposition(&lambda, caps)?;
                if !report.ok() {
                    return Ok((
                        "exact equality".into(),
                        format!(
                            "lambda = {lambda}: {} mismatching weights, first {:?}",
                            report.mismatches.len(),
                            report.mismatches.first()
                        ),
                        false,
                    ));
                }
            }
            Ok((
                format!("{total} weights"),
                format!("{total} weights pass"),
                true,
            ))
        },
    )
}

/// Criterion 9: the gl(1/1) simple characters at (a|-a) are one-dimensional.
pub fn check_gl11_simple(caps: &Caps) -> CheckResult {
    run_check(
        "gl(1/1) simple characters at (a|-a), |a| <= 5",
        "support is the single weight (a|-a) with multiplicity 1",
        || {
            for a in -5i64..=5 {
                let mu = w(&[a], &[-a]);
                let chi = char_simple(&mu, caps)?;
                if chi.support_len() != 1 || chi.multiplicity(&mu) != 1 {
                    return Ok((
                        "single weight, multiplicity 1".into(),
                        format!("a = {a}: support size {}", chi.support_len()),
                        false,
                    ));
                }
            }
            Ok((
                "11 one-dimensional characters".into(),
                "11 pass".into(),
                true,
            ))
        },
    )
}

/// Criterion 10: K entries agree across nested convex windows.
pub fn check_window_stability(caps: &Caps) -> CheckResult {
    run_check(
        "window stability of K entries",
        "K entries for pairs inside a window agree when recomputed from a convex superset",
        || {
            let cases: [(
                (IntegralWeight, IntegralWeight),
                (IntegralWeight, IntegralWeight),
            ); 3] = [
                (
                    (w(&[-1, -1], &[1, 1]), w(&[1, 1], &[-1, -1])),
                    (w(&[-2, -2], &[2, 2]), w(&[1, 1], &[-1, -1])),
                ),
                (
                    (w(&[-2, -2], &[2, 2]), w(&[1, 1], &[-1, -1])),
                    (w(&[-3, -3], &[3, 3]), w(&[2, 2], &[-2, -2])),
                ),
                (
                    (w(&[0, -1], &[1, 0]), w(&[1, 0], &[0, -1])),
                    (w(&[-1, -2], &[2, 1]), w(&[2, 1], &[-1, -2])),
                ),
            ];
            let mut pairs_checked = 0usize;
            for ((lo_a, hi_a), (lo_b, hi_b)) in cases {
                let inner = enumerate_interval(&lo_a, &hi_a, true, caps.window)?;
                let k_inner =
                    invert_unitriangular(&assemble_aq_on_interval(&lo_a, &hi_a, caps.window)?)?;
                let k_outer =
                    invert_unitriangular(&assemble_aq_on_interval(&lo_b, &hi_b, caps.window)?)?;
                for a in &inner {
                    for b in &inner {
                        let (ra, ca) = (
                            k_inner.index_of(a).expect("inner member"),
                            k_inner.index_of(b).expect("inner member"),
                        );
                        let rb = k_outer.index_of(a).ok_or_else(|| {
                            crate::Error::Internal(format!("{a} missing from the superset window"))
                        })?;
                        let cb = k_outer.index_of(b).ok_or_else(|| {
                            crate::Error::Internal(format!("{b} missing from the superset window"))
                        })?;
                        pairs_checked += 1;
                        if k_inner.get(ra, ca) != k_outer.get(rb, cb) {
                            return Ok((
                                "agreement on all inner pairs".into(),
                                format!("K[{a}, {b}] differs between windows"),
                                false,
                            ));
                        }
                    }
                }
            }
            Ok((
                "agreement on all inner pairs".into(),
                format!("{pairs_checked} pairs agree across 3 nested cases"),
                true,
            ))
        },
    )
}

/// The window identity suite (two-sided inversion, column sums, block
/// structure, truncated K sums, the zero-row closed form, coefficient
/// ranges) on a gl(1/1) chain and on the gl(2/2) sigma window.
pub fn identity_reports(caps: &Caps) -> VerificationReport {
    let mut report = VerificationReport::default();
    let windows = [
        (w(&[-3], &[3]), w(&[3], &[-3])),
        (w(&[-3, -3], &[3, 3]), w(&[0, 0], &[0, 0])),
    ];
    for (lo, hi) in windows {
        match enumerate_interval(&lo, &hi, true, caps.window)
            .and_then(|window| crate::kl::verify_identities(&window))
        {
            Ok(window_report) => report.merge(window_report),
            Err(err) => report.push(run_check(
                &format!("identity suite on [{lo}, {hi}]"),
                "window identities evaluate without error",
                move || Err(err),
            )),
        }
    }
    report
}

/// Runs every acceptance check plus the window identity suites and
/// collects the report.
pub fn run_all(caps: &Caps, fault: Option<FaultInjection>) -> VerificationReport {
    let mut report = VerificationReport::default();
    report.push(check_gl45_profile());
    report.push(check_gl45_theta_table());
    report.push(check_gl22_rows(caps));
    report.push(check_kl_row_at_zero(caps));
    report.push(check_identity_suites(caps, fault));
    report.push(check_mu_zero_dual());
    report.push(check_gl22_characters(caps));
    report.push(check_kac_consistency(caps));
    report.push(check_gl11_simple(caps));
    report.push(check_window_stability(caps));
    report.merge(identity_reports(caps));
    report
}
