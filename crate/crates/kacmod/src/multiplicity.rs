//! The conjectured composition-factor columns of the multiplicity matrix:
//! for an r-fold atypical dominant mu, the 2^r weights
//! lambda_theta = d-dot(mu + sum theta_i k_i gamma_i) carry multiplicity 1
//! (q-coefficient (-q)^|theta|), and every other entry of the column
//! vanishes. Rows are assembled from columns over finite windows.
//!
//! Any internal inconsistency — an undefined d-dot, a non-dominant or
//! colliding lambda_theta, an entry escaping [mu, mu_0 + 2 rho_1] — is
//! surfaced as a structured falsification diagnostic, never swallowed: a
//! counterexample to the multiplicity rule would be a first-class result.

use std::collections::HashSet;

use serde::Serialize;

use crate::atypicality::{nabla_profile, AtypicalityProfile};
use crate::error::{Error, Result};
use crate::qpoly::QPolynomial;
use crate::weight::{two_rho_one_for, IntegralWeight, OddRoot};

/// One theta-row of a multiplicity column.
#[derive(Debug, Clone, Serialize)]
pub struct ColumnEntry {
    pub theta: Vec<u8>,
    pub mu_theta: IntegralWeight,
    pub lambda_theta: IntegralWeight,
    pub coeff: QPolynomial,
}

/// The full column of the (q-)multiplicity matrix at a dominant weight mu:
/// exactly 2^r entries, ordered by |theta| and then by descending
/// lexicographic theta. The first entry is (mu, 1) and the last is
/// (mu_0 + 2 rho_1, (-q)^r).
#[derive(Debug, Clone, Serialize)]
pub struct MultiplicityColumn {
    pub mu: IntegralWeight,
    pub gamma: Vec<OddRoot>,
    pub k: Vec<usize>,
    pub mu_zero: IntegralWeight,
    pub entries: Vec<ColumnEntry>,
}

impl MultiplicityColumn {
    pub fn degree(&self) -> usize {
        self.gamma.len()
    }

    /// The coefficient attached to `lambda`, if present.
    pub fn coeff_at(&self, lambda: &IntegralWeight) -> Option<&QPolynomial> {
        self.entries
            .iter()
            .find(|e| &e.lambda_theta == lambda)
            .map(|e| &e.coeff)
    }

    /// The top entry mu_0 + 2 rho_1.
    pub fn top(&self) -> &IntegralWeight {
        &self
            .entries
            .last()
            .expect("columns are never empty")
            .lambda_theta
    }
}

/// All theta vectors of length r, ordered by weight |theta| ascending and
/// then by descending lexicographic order, matching the usual table layout.
pub fn canonical_thetas(r: usize) -> Vec<Vec<u8>> {
    let mut thetas: Vec<Vec<u8>> = (0u32..(1 << r))
        .map(|mask| (0..r).map(|i| ((mask >> i) & 1) as u8).collect())
        .collect();
    thetas.sort_by(|a, b| {
        let wa: u32 = a.iter().map(|&x| x as u32).sum();
        let wb: u32 = b.iter().map(|&x| x as u32).sum();
        wa.cmp(&wb).then_with(|| b.cmp(a))
    });
    thetas
}

fn mu_theta_of(profile: &AtypicalityProfile, theta: &[u8]) -> IntegralWeight {
    let shape = profile.mu.shape();
    let mut out = profile.mu.clone();
    for (idx, &bit) in theta.iter().enumerate() {
        if bit != 0 {
            out = out.add_scaled(&profile.gamma[idx].to_weight(shape), profile.k[idx] as i64);
        }
    }
    out
}

fn lambda_theta_of(
    profile: &AtypicalityProfile,
    theta: &[u8],
) -> Result<(IntegralWeight, IntegralWeight)> {
    let mu_theta = mu_theta_of(profile, theta);
    let lambda = mu_theta.dot_dominant().ok_or_else(|| {
        Error::falsification(
            profile.mu.clone(),
            Some(theta.to_vec()),
            format!("d-dot is undefined on mu_theta = {mu_theta}"),
        )
    })?;
    if !lambda.is_dominant() {
        return Err(Error::falsification(
            profile.mu.clone(),
            Some(theta.to_vec()),
            format!("lambda_theta = {lambda} is not dominant"),
        ));
    }
    Ok((mu_theta, lambda))
}

/// lambda_theta = d-dot(mu + sum theta_i k_i gamma_i).
pub fn lambda_theta(mu: &IntegralWeight, theta: &[u8]) -> Result<IntegralWeight> {
    let profile = nabla_profile(mu)?;
    if theta.len() != profile.degree() {
        return Err(Error::Config(format!(
            "theta has length {}, but #mu = {}",
            theta.len(),
            profile.degree()
        )));
    }
    Ok(lambda_theta_of(&profile, theta)?.1)
}

fn column_with(
    mu: &IntegralWeight,
    coeff: impl Fn(usize) -> QPolynomial,
) -> Result<MultiplicityColumn> {
    let profile = nabla_profile(mu)?;
    let r = profile.degree();
    let top = profile.mu_zero.add(&two_rho_one_for(mu.shape()));
    let mut entries = Vec::with_capacity(1 << r);
    let mut seen: HashSet<IntegralWeight> = HashSet::with_capacity(1 << r);
    for theta in canonical_thetas(r) {
        let (mu_theta, lambda) = lambda_theta_of(&profile, &theta)?;
        if !(mu.leq(&lambda)? && lambda.leq(&top)?) {
            return Err(Error::falsification(
                mu.clone(),
                Some(theta.clone()),
                format!("lambda_theta = {lambda} escapes the interval [mu, mu_0 + 2 rho_1]"),
            ));
        }
        if !seen.insert(lambda.clone()) {
            return Err(Error::falsification(
                mu.clone(),
                Some(theta.clone()),
                format!("lambda_theta = {lambda} collides with another theta"),
            ));
        }
        let weight: usize = theta.iter().map(|&x| x as usize).sum();
        entries.push(ColumnEntry {
            theta,
            mu_theta,
            lambda_theta: lambda,
            coeff: coeff(weight),
        });
    }
    let last = entries.last().expect("2^r >= 1 entries");
    if last.lambda_theta != top {
        return Err(Error::Internal(format!(
            "d-dot(mu + sum k_i gamma_i) = {} differs from mu_0 + 2 rho_1 = {top} for mu = {mu}",
            last.lambda_theta
        )));
    }
    Ok(MultiplicityColumn {
        mu: mu.clone(),
        gamma: profile.gamma,
        k: profile.k,
        mu_zero: profile.mu_zero,
        entries,
    })
}

/// The numeric column: every lambda_theta carries multiplicity 1.
pub fn column(mu: &IntegralWeight) -> Result<MultiplicityColumn> {
    column_with(mu, |_| QPolynomial::one())
}

/// The q-column: lambda_theta carries (-q)^|theta|.
pub fn column_q(mu: &IntegralWeight) -> Result<MultiplicityColumn> {
    column_with(mu, QPolynomial::neg_q_pow)
}

/// The row of the q-multiplicity matrix at a dominant lambda: all dominant
/// mu with a nonzero coefficient attached to lambda, found by scanning the
/// columns of every dominant candidate in [reverse_sorted(lambda) - 2rho_1,
/// lambda] (the support interval of the Kac module forces candidates into
/// this window). Entries are listed with lambda's own column first,
/// following the window's linear extension.
pub fn row_q(lambda: &IntegralWeight, cap: usize) -> Result<Vec<(IntegralWeight, QPolynomial)>> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let lo = lambda
        .reverse_sorted()
        .sub(&two_rho_one_for(lambda.shape()));
    let candidates = crate::weight::enumerate_interval(&lo, lambda, true, cap)?;
    let mut out = Vec::new();
    for mu in candidates {
        let col = column_q(&mu)?;
        if let Some(coeff) = col.coeff_at(lambda) {
            out.push((mu, coeff.clone()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(eps: &[i64], delta: &[i64]) -> IntegralWeight {
        IntegralWeight::new(eps.to_vec(), delta.to_vec())
    }

    fn example_mu() -> IntegralWeight {
        w(&[2, 1, 0, 0], &[0, -2, -2, -2, -2])
    }

    #[test]
    fn theta_order_matches_table_layout() {
        assert_eq!(
            canonical_thetas(3),
            vec![
                vec![0, 0, 0],
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 1, 1],
                vec![1, 1, 1],
            ]
        );
    }

    #[test]
    fn lambda_theta_examples() {
        let mu = example_mu();
        assert_eq!(
            lambda_theta(&mu, &[0, 1, 0]).unwrap(),
            w(&[5, 3, 0, 0], &[0, -3, -3, -3, -4])
        );
        assert_eq!(lambda_theta(&mu, &[0, 0, 0]).unwrap(), mu);
        assert_eq!(
            lambda_theta(&mu, &[1, 1, 1]).unwrap(),
            w(&[5, 5, 1, 1], &[-2, -3, -4, -4, -4])
        );
        assert!(matches!(lambda_theta(&mu, &[1, 0]), Err(Error::Config(_))));
    }

    #[test]
    fn full_gl45_table() {
        let col = column_q(&example_mu()).unwrap();
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
        assert_eq!(col.entries.len(), 8);
        for (entry, (theta, mu_theta, lambda)) in col.entries.iter().zip(&expected) {
            assert_eq!(&entry.theta, theta);
            assert_eq!(&entry.mu_theta, mu_theta);
            assert_eq!(&entry.lambda_theta, lambda);
            let weight: usize = theta.iter().map(|&x| x as usize).sum();
            assert_eq!(entry.coeff, QPolynomial::neg_q_pow(weight));
        }
    }

    #[test]
    fn numeric_column_is_all_ones() {
        let col = column(&example_mu()).unwrap();
        assert!(col.entries.iter().all(|e| e.coeff.is_one()));
        let sum: usize = col.entries.len();
        assert_eq!(sum, 1 << col.degree());
    }

    #[test]
    fn typical_column_is_a_single_one() {
        let col = column(&w(&[3, 1], &[0, -2])).unwrap();
        assert_eq!(col.entries.len(), 1);
        assert_eq!(col.entries[0].lambda_theta, col.mu);
        assert!(col.entries[0].coeff.is_one());
    }

    #[test]
    fn gl11_column() {
        for a in -3i64..=3 {
            let mu = w(&[a], &[-a]);
            let col = column(&mu).unwrap();
            assert_eq!(col.k, vec![1]);
            assert_eq!(col.entries.len(), 2);
            assert_eq!(col.entries[0].lambda_theta, mu);
            assert_eq!(col.entries[1].lambda_theta, w(&[a + 1], &[-a - 1]));
        }
    }

    #[test]
    fn gl22_equal_blocks_column() {
        // mu = (y,y|-y,-y): k = (3,1); theta = (1,0) climbs 3*beta(2,1)
        // and theta = (0,1) climbs beta(1,2)
        for y in [-2i64, 0, 2] {
            let mu = w(&[y, y], &[-y, -y]);
            let col = column_q(&mu).unwrap();
            assert_eq!(col.k, vec![3, 1]);
            let lambdas: Vec<IntegralWeight> =
                col.entries.iter().map(|e| e.lambda_theta.clone()).collect();
            assert_eq!(
                lambdas,
                vec![
                    mu.clone(),
                    w(&[y + 2, y + 1], &[-y - 1, -y - 2]),
                    w(&[y + 1, y], &[-y, -y - 1]),
                    w(&[y + 2, y + 2], &[-y - 2, -y - 2]),
                ]
            );
            let coeffs: Vec<QPolynomial> = col.entries.iter().map(|e| e.coeff.clone()).collect();
            assert_eq!(
                coeffs,
                vec![
                    QPolynomial::one(),
                    QPolynomial::neg_q_pow(1),
                    QPolynomial::neg_q_pow(1),
                    QPolynomial::neg_q_pow(2),
                ]
            );
        }
    }

    #[test]
    fn gl22_shifted_column_contains_equal_block_lambda() {
        // mu = (x, x-1 | -x+1, -x) has (x,x|-x,-x) as its theta = (1,0)
        // entry with coefficient -q
        let x = 2i64;
        let mu = w(&[x, x - 1], &[-x + 1, -x]);
        let col = column_q(&mu).unwrap();
        let lambda = w(&[x, x], &[-x, -x]);
        assert_eq!(col.coeff_at(&lambda), Some(&QPolynomial::neg_q_pow(1)));
    }

    #[test]
    fn column_sum_is_one_minus_q_to_r() {
        for mu in [
            example_mu(),
            w(&[0, 0], &[0, 0]),
            w(&[3, 1], &[0, -2]),
            w(&[2], &[-2]),
        ] {
            let col = column_q(&mu).unwrap();
            let sum = col
                .entries
                .iter()
                .fold(QPolynomial::zero(), |acc, e| acc.add(&e.coeff));
            assert_eq!(sum, QPolynomial::one_minus_q_pow(col.degree()), "mu = {mu}");
        }
    }

    #[test]
    fn row_gl22_equal_block_case() {
        let x = 3i64;
        let lambda = w(&[x, x], &[-x, -x]);
        let row = row_q(&lambda, 100_000).unwrap();
        let expected = vec![
            (lambda.clone(), QPolynomial::one()),
            (w(&[x, x - 1], &[-x + 1, -x]), QPolynomial::neg_q_pow(1)),
            (
                w(&[x - 2, x - 2], &[-x + 2, -x + 2]),
                QPolynomial::neg_q_pow(2),
            ),
        ];
        assert_eq!(row, expected);
    }

    #[test]
    fn row_typical_is_identity() {
        let lambda = w(&[3, 1], &[0, -2]);
        let row = row_q(&lambda, 100_000).unwrap();
        assert_eq!(row, vec![(lambda, QPolynomial::one())]);
    }

    #[test]
    fn row_column_transpose_consistency() {
        // every pair (lambda, mu) in a small window appears in the row of
        // lambda iff it appears in the column of mu, with the same
        // coefficient
        let windows = [
            (w(&[-1, -1], &[1, 1]), w(&[1, 1], &[-1, -1])),
            (w(&[0, -1, -1], &[1, 1]), w(&[1, 0, 0], &[0, -1])),
        ];
        for (lo, hi) in windows {
            let window = crate::weight::enumerate_interval(&lo, &hi, true, 100_000).unwrap();
            for lambda in &window {
                let row: std::collections::BTreeMap<_, _> =
                    row_q(lambda, 100_000).unwrap().into_iter().collect();
                for mu in &window {
                    let col = column_q(mu).unwrap();
                    let from_col = col.coeff_at(lambda);
                    let from_row = row.get(mu);
                    assert_eq!(from_col, from_row, "lambda = {lambda}, mu = {mu}");
                }
            }
        }
    }
}
