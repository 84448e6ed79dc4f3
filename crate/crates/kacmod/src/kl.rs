//! Triangular q-multiplicity matrices on order-convex weight windows, exact
//! unitriangular inversion over integer polynomials, Kazhdan-Lusztig
//! polynomial extraction, and closed-form checks.
//!
//! A window is a finite list of dominant weights, closed under dominant
//! weights lying between any two members, ordered by a linear extension of
//! the partial order (largest first). Inversion on such a window is exact:
//! a nonzero entry at (lambda, mu) requires mu <= lambda, and every
//! intermediate dominant weight is present, so the forward substitution
//! never references a truncated coefficient.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::Error as _;
use serde::{Deserialize, Serialize, Serializer};

use crate::atypicality::{gamma_chain, mu_zero};
use crate::error::{Error, Result};
use crate::multiplicity::column_q;
use crate::qpoly::QPolynomial;
use crate::report::{run_check, VerificationReport};
use crate::weight::{enumerate_interval, two_rho_one_for, IntegralWeight};

/// A sparse triangular matrix over integer q-polynomials, indexed by a
/// window of dominant weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularQMatrix {
    window: Vec<IntegralWeight>,
    entries: BTreeMap<(usize, usize), QPolynomial>,
}

#[derive(Serialize, Deserialize)]
struct MatrixEntryJson {
    row: IntegralWeight,
    col: IntegralWeight,
    poly: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    window: Vec<IntegralWeight>,
    entries: Vec<MatrixEntryJson>,
}

impl Serialize for TriangularQMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = self
            .entries
            .iter()
            .map(|(&(r, c), poly)| {
                Ok(MatrixEntryJson {
                    row: self.window[r].clone(),
                    col: self.window[c].clone(),
                    poly: poly.to_i64_coeffs().map_err(S::Error::custom)?,
                })
            })
            .collect::<std::result::Result<Vec<_>, S::Error>>()?;
        MatrixJson {
            window: self.window.clone(),
            entries,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TriangularQMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = MatrixJson::deserialize(deserializer)?;
        let index: BTreeMap<&IntegralWeight, usize> = json
            .window
            .iter()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        if index.len() != json.window.len() {
            return Err(D::Error::custom("window contains duplicate weights"));
        }
        let mut entries = BTreeMap::new();
        for entry in &json.entries {
            let r = *index.get(&entry.row).ok_or_else(|| {
                D::Error::custom(format!("row weight {} not in window", entry.row))
            })?;
            let c = *index.get(&entry.col).ok_or_else(|| {
                D::Error::custom(format!("col weight {} not in window", entry.col))
            })?;
            let poly = QPolynomial::from_i64_coeffs(&entry.poly);
            if poly.is_zero() {
                continue;
            }
            if entries.insert((r, c), poly).is_some() {
                return Err(D::Error::custom("duplicate matrix entry"));
            }
        }
        Ok(TriangularQMatrix {
            window: json.window,
            entries,
        })
    }
}

impl TriangularQMatrix {
    pub fn window(&self) -> &[IntegralWeight] {
        &self.window
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    pub fn index_of(&self, w: &IntegralWeight) -> Option<usize> {
        self.window.iter().position(|x| x == w)
    }

    /// Entry at (row, col); absent entries are zero.
    pub fn get(&self, row: usize, col: usize) -> QPolynomial {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(QPolynomial::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &QPolynomial)> {
        self.entries.iter().map(|(&(r, c), p)| (r, c, p))
    }

    /// Entries of one column, as (row, poly) pairs.
    pub fn column_entries(&self, col: usize) -> Vec<(usize, &QPolynomial)> {
        self.entries
            .iter()
            .filter(|(&(_, c), _)| c == col)
            .map(|(&(r, _), p)| (r, p))
            .collect()
    }

    /// Unit diagonal and index-triangularity (entries only at row <= col,
    /// where the window lists larger weights first).
    pub fn validate_unitriangular(&self) -> Result<()> {
        for i in 0..self.window.len() {
            if !self.get(i, i).is_one() {
                return Err(Error::NotUnitriangular(format!(
                    "diagonal entry at {} is {}, not 1",
                    self.window[i],
                    self.get(i, i)
                )));
            }
        }
        for &(r, c) in self.entries.keys() {
            if r > c {
                return Err(Error::NotUnitriangular(format!(
                    "entry at ({}, {}) lies below the diagonal",
                    self.window[r], self.window[c]
                )));
            }
            if r != c && !self.window[c].leq(&self.window[r])? {
                return Err(Error::NotUnitriangular(format!(
                    "entry at ({}, {}) violates the partial order",
                    self.window[r], self.window[c]
                )));
            }
        }
        Ok(())
    }

    /// Exact product; both matrices must share the window.
    pub fn matmul(&self, other: &TriangularQMatrix) -> Result<TriangularQMatrix> {
        if self.window != other.window {
            return Err(Error::Internal(
                "matrix product across different windows".into(),
            ));
        }
        let mut rows_of_other: Vec<Vec<(usize, &QPolynomial)>> =
            vec![Vec::new(); other.window.len()];
        for (&(r, c), p) in &other.entries {
            rows_of_other[r].push((c, p));
        }
        let mut acc: BTreeMap<(usize, usize), QPolynomial> = BTreeMap::new();
        for (&(r, s), p) in &self.entries {
            for &(c, q) in &rows_of_other[s] {
                let term = p.mul(q);
                acc.entry((r, c))
                    .and_modify(|e| *e = e.add(&term))
                    .or_insert(term);
            }
        }
        acc.retain(|_, p| !p.is_zero());
        Ok(TriangularQMatrix {
            window: self.window.clone(),
            entries: acc,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|(&(r, c), p)| r == c && p.is_one())
            && (0..self.window.len()).all(|i| self.entries.contains_key(&(i, i)))
    }
}

fn fill_aq(window: &[IntegralWeight]) -> Result<TriangularQMatrix> {
    let index: BTreeMap<&IntegralWeight, usize> =
        window.iter().enumerate().map(|(i, w)| (w, i)).collect();
    if index.len() != window.len() {
        return Err(Error::Internal("window contains duplicate weights".into()));
    }
    let mut entries = BTreeMap::new();
    for (c, mu) in window.iter().enumerate() {
        let col = column_q(mu)?;
        for entry in &col.entries {
            if let Some(&r) = index.get(&entry.lambda_theta) {
                if r > c {
                    return Err(Error::Internal(format!(
                        "window order is not a linear extension: {} listed after {}",
                        entry.lambda_theta, mu
                    )));
                }
                entries.insert((r, c), entry.coeff.clone());
            }
        }
    }
    Ok(TriangularQMatrix {
        window: window.to_vec(),
        entries,
    })
}

fn validate_window(window: &[IntegralWeight]) -> Result<()> {
    if window.is_empty() {
        return Err(Error::Internal("window must be non-empty".into()));
    }
    for w in window {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
    }
    // listing order must not place a smaller weight first
    for (i, a) in window.iter().enumerate() {
        for b in &window[i + 1..] {
            if a.lt(b)? {
                return Err(Error::Internal(format!(
                    "window order is not a linear extension: {a} listed before {b}"
                )));
            }
        }
    }
    // order-convexity: every dominant weight between two members is a member
    let member: std::collections::HashSet<&IntegralWeight> = window.iter().collect();
    for a in window {
        for b in window {
            if a == b || !a.leq(b)? {
                continue;
            }
            for nu in enumerate_interval(a, b, true, 10_000_000)? {
                if !member.contains(&nu) {
                    return Err(Error::NonConvexWindow { missing: nu });
                }
            }
        }
    }
    Ok(())
}

/// Assembles the q-multiplicity matrix on a window, writing for each column
/// mu the entries of column_q(mu) whose lambda_theta lies in the window.
/// The window is validated: dominant, duplicate-free, listed in a linear
/// extension, and order-convex.
pub fn assemble_aq(window: &[IntegralWeight]) -> Result<TriangularQMatrix> {
    validate_window(window)?;
    fill_aq(window)
}

/// Enumerates the dominant weights of [lo, hi] and assembles the
/// q-multiplicity matrix on them. Intervals are order-convex by
/// construction, so only the assembly itself is performed.
pub fn assemble_aq_on_interval(
    lo: &IntegralWeight,
    hi: &IntegralWeight,
    cap: usize,
) -> Result<TriangularQMatrix> {
    let window = enumerate_interval(lo, hi, true, cap)?;
    fill_aq(&window)
}

/// Exact inverse of a unitriangular matrix by forward substitution, column
/// by column, over integer polynomials.
pub fn invert_unitriangular(matrix: &TriangularQMatrix) -> Result<TriangularQMatrix> {
    matrix.validate_unitriangular()?;
    let n = matrix.len();
    let mut rows: Vec<Vec<(usize, &QPolynomial)>> = vec![Vec::new(); n];
    for (&(r, c), p) in &matrix.entries {
        if r != c {
            rows[r].push((c, p));
        }
    }
    let mut entries: BTreeMap<(usize, usize), QPolynomial> = BTreeMap::new();
    for c in 0..n {
        let mut col: Vec<QPolynomial> = vec![QPolynomial::zero(); c + 1];
        col[c] = QPolynomial::one();
        for r in (0..c).rev() {
            let mut acc = QPolynomial::zero();
            for &(s, p) in &rows[r] {
                if s <= c && !col[s].is_zero() {
                    acc = acc.add(&p.mul(&col[s]));
                }
            }
            col[r] = acc.neg();
        }
        for (r, poly) in col.into_iter().enumerate() {
            if !poly.is_zero() {
                entries.insert((r, c), poly);
            }
        }
    }
    Ok(TriangularQMatrix {
        window: matrix.window.clone(),
        entries,
    })
}

/// An integer matrix obtained by evaluating a polynomial matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializedMatrix {
    window: Vec<IntegralWeight>,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl SpecializedMatrix {
    pub fn window(&self) -> &[IntegralWeight] {
        &self.window
    }

    pub fn get(&self, row: usize, col: usize) -> BigInt {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn index_of(&self, w: &IntegralWeight) -> Option<usize> {
        self.window.iter().position(|x| x == w)
    }
}

#[derive(Serialize)]
struct SpecializedEntryJson<'a> {
    row: &'a IntegralWeight,
    col: &'a IntegralWeight,
    value: i64,
}

impl Serialize for SpecializedMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            window: &'a [IntegralWeight],
            entries: Vec<SpecializedEntryJson<'a>>,
        }
        let entries = self
            .entries
            .iter()
            .map(|(&(r, c), v)| {
                Ok(SpecializedEntryJson {
                    row: &self.window[r],
                    col: &self.window[c],
                    value: v
                        .to_i64()
                        .ok_or_else(|| S::Error::custom("specialized entry overflows i64"))?,
                })
            })
            .collect::<std::result::Result<Vec<_>, S::Error>>()?;
        Json {
            window: &self.window,
            entries,
        }
        .serialize(serializer)
    }
}

/// Entrywise evaluation at an integer point.
pub fn specialize(matrix: &TriangularQMatrix, value: i64) -> SpecializedMatrix {
    let mut entries = BTreeMap::new();
    for (&(r, c), p) in &matrix.entries {
        let v = p.eval(value);
        if !v.is_zero() {
            entries.insert((r, c), v);
        }
    }
    SpecializedMatrix {
        window: matrix.window.clone(),
        entries,
    }
}

/// Enumerates the partitions of `total` with at most `parts` parts, in
/// descending lexicographic order.
fn partitions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(
        remaining: usize,
        max_part: usize,
        slots: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = remaining.min(max_part);
        let lo = remaining.div_ceil(slots);
        for part in (lo..=hi).rev() {
            prefix.push(part);
            rec(remaining - part, part, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    rec(total, total, parts, &mut prefix, &mut out);
    out
}

fn sigma_weight(shape: (usize, usize), sigma: &[usize]) -> IntegralWeight {
    let (m, n) = shape;
    let p = m.min(n);
    let mut padded = vec![0i64; p];
    for (idx, &part) in sigma.iter().enumerate() {
        padded[idx] = part as i64;
    }
    let mut eps = vec![0i64; m];
    for (t, &part) in padded.iter().enumerate() {
        // eps block reads (-sigma_m, ..., -sigma_1)
        eps[m - 1 - t] = -part;
    }
    let mut delta = vec![0i64; n];
    delta[..p].copy_from_slice(&padded);
    IntegralWeight::new(eps, delta)
}

/// The g0 highest weights of the degree-i symmetric power of the odd
/// negative part: one summand (-sigma_m, ..., -sigma_1 | sigma_1, ...,
/// sigma_m, 0, ..., 0) for every partition sigma of i with at most
/// min(m, n) parts. For m > n the same pattern applies with the roles of
/// the blocks exchanged, which the padding realizes uniformly.
pub fn sym_decomposition(alg: &crate::weight::Superalgebra, degree: usize) -> Vec<IntegralWeight> {
    let shape = alg.shape();
    let p = shape.0.min(shape.1);
    partitions(degree, p)
        .iter()
        .map(|sigma| sigma_weight(shape, sigma))
        .collect()
}

/// Closed form for the Kazhdan-Lusztig polynomial at the zero weight:
/// q^|sigma| when mu matches the sigma pattern of [`sym_decomposition`],
/// zero otherwise.
pub fn kl_zero_closed_form(mu: &IntegralWeight) -> QPolynomial {
    let (m, n) = mu.shape();
    let p = m.min(n);
    let delta = mu.delta();
    if delta[p..].iter().any(|&v| v != 0) {
        return QPolynomial::zero();
    }
    let sigma: Vec<i64> = delta[..p].to_vec();
    if sigma.windows(2).any(|w| w[0] < w[1]) || sigma.iter().any(|&v| v < 0) {
        return QPolynomial::zero();
    }
    let expected = sigma_weight(
        (m, n),
        &sigma.iter().map(|&v| v as usize).collect::<Vec<_>>(),
    );
    if &expected != mu {
        return QPolynomial::zero();
    }
    let total: i64 = sigma.iter().sum();
    QPolynomial::monomial(1, total as usize)
}

fn binom(a: u64, b: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..b {
        num *= BigInt::from(a - t);
        den *= BigInt::from(t + 1);
    }
    num / den
}

/// Largest q-degree of the column sum of K at `mu` that the window
/// guarantees complete. A contribution to q^i comes from a chain of at
/// most i off-diagonal A-steps above mu, and a single step never climbs
/// past 2*rho_1, so every contributing lambda lies in [mu, mu + i*2rho_1];
/// the coefficient is complete once all dominant weights of that interval
/// are window members.
fn guaranteed_sum_degree(
    window_set: &std::collections::HashSet<&IntegralWeight>,
    mu: &IntegralWeight,
) -> usize {
    let two_rho = two_rho_one_for(mu.shape());
    let mut degree = 0usize;
    loop {
        let top = mu.add_scaled(&two_rho, degree as i64 + 1);
        let all = match enumerate_interval(mu, &top, true, 10_000_000) {
            Ok(all) => all,
            Err(_) => break,
        };
        if all.iter().all(|l| window_set.contains(l)) {
            degree += 1;
        } else {
            break;
        }
    }
    degree
}

/// Runs the identity suite on a window: exact two-sided inversion, column
/// sums (1-q)^{#mu} for columns whose top lies in the window, vanishing
/// across different atypicality degrees, truncated partial sums of
/// sum_lambda K_{lambda,mu}(q) against the power series of (1-q)^{-#mu},
/// the closed form of the K row at the zero weight when present, and the
/// observed range of K coefficients (a negative coefficient is flagged as
/// a falsification candidate).
pub fn verify_identities(window: &[IntegralWeight]) -> Result<VerificationReport> {
    validate_window(window)?;
    verify_identities_on_valid(window)
}

pub(crate) fn verify_identities_on_valid(window: &[IntegralWeight]) -> Result<VerificationReport> {
    let aq = fill_aq(window)?;
    let kq = invert_unitriangular(&aq)?;
    let degrees: Vec<usize> = window
        .iter()
        .map(|w| gamma_chain(w).map(|g| g.len()))
        .collect::<Result<_>>()?;
    let mut report = VerificationReport::default();

    report.push(run_check(
        "two-sided inversion on the window",
        "A_q * K_q = K_q * A_q = I, exactly, over integer polynomials",
        || {
            let left = aq.matmul(&kq)?.is_identity();
            let right = kq.matmul(&aq)?.is_identity();
            Ok((
                "identity".into(),
                format!("left: {left}, right: {right}"),
                left && right,
            ))
        },
    ));

    report.push(run_check(
        "column sums of A_q",
        "sum over lambda of a_{lambda,mu}(q) = (1-q)^{#mu} for every complete column",
        || {
            let mut checked = 0usize;
            for (c, mu) in window.iter().enumerate() {
                let top = mu_zero(mu)?.add(&two_rho_one_for(mu.shape()));
                if !window.contains(&top) {
                    continue;
                }
                checked += 1;
                let sum = aq
                    .column_entries(c)
                    .into_iter()
                    .fold(QPolynomial::zero(), |acc, (_, p)| acc.add(p));
                let expected = QPolynomial::one_minus_q_pow(degrees[c]);
                if sum != expected {
                    return Ok((
                        format!("column {mu}: {expected}"),
                        format!("column {mu}: {sum}"),
                        false,
                    ));
                }
            }
            Ok((
                format!("{checked} complete columns"),
                format!("{checked} columns match"),
                true,
            ))
        },
    ));

    report.push(run_check(
        "block structure",
        "a_{lambda,mu}(q) = K_{lambda,mu}(q) = 0 whenever #lambda != #mu",
        || {
            for matrix in [&aq, &kq] {
                for (r, c, _) in matrix.entries() {
                    if degrees[r] != degrees[c] {
                        return Ok((
                            "no entries across atypicality degrees".into(),
                            format!("entry at ({}, {})", window[r], window[c]),
                            false,
                        ));
                    }
                }
            }
            Ok((
                "no entries across atypicality degrees".into(),
                "none found".into(),
                true,
            ))
        },
    ));

    report.push(run_check(
        "truncated K column sums",
        "sum over lambda of K_{lambda,mu}(q) agrees with the series of (1-q)^{-#mu} through the window-guaranteed degree",
        || {
            let window_set: std::collections::HashSet<&IntegralWeight> = window.iter().collect();
            let mut checked_degrees = 0usize;
            for (c, mu) in window.iter().enumerate() {
                let max_degree = guaranteed_sum_degree(&window_set, mu);
                let mut sum = QPolynomial::zero();
                for (_, p) in kq.column_entries(c) {
                    sum = sum.add(p);
                }
                for i in 0..=max_degree {
                    let expected = if degrees[c] == 0 {
                        if i == 0 { BigInt::one() } else { BigInt::zero() }
                    } else {
                        binom((degrees[c] - 1 + i) as u64, i as u64)
                    };
                    if sum.coeff(i) != expected {
                        return Ok((
                            format!("column {mu}, q^{i}: {expected}"),
                            format!("column {mu}, q^{i}: {}", sum.coeff(i)),
                            false,
                        ));
                    }
                    checked_degrees += 1;
                }
            }
            Ok((format!("{checked_degrees} coefficients"), "all match".into(), true))
        },
    ));

    if let Some(r0) = window
        .iter()
        .position(|w| w.eps().iter().all(|&v| v == 0) && w.delta().iter().all(|&v| v == 0))
    {
        report.push(run_check(
            "K row at the zero weight",
            "K_{0,mu}(q) = q^|sigma| on sigma-pattern weights and 0 elsewhere",
            || {
                for (c, mu) in window.iter().enumerate() {
                    let expected = kl_zero_closed_form(mu);
                    let actual = kq.get(r0, c);
                    if actual != expected {
                        return Ok((
                            format!("K[0, {mu}] = {expected}"),
                            format!("K[0, {mu}] = {actual}"),
                            false,
                        ));
                    }
                }
                Ok((
                    "closed form".into(),
                    format!("all {} columns match", window.len()),
                    true,
                ))
            },
        ));
    }

    report.push(run_check(
        "K coefficient range",
        "all K coefficients are nonnegative (homology multiplicities)",
        || {
            let mut min: Option<BigInt> = None;
            let mut max: Option<BigInt> = None;
            for (_, _, p) in kq.entries() {
                for coeff in p.coeffs() {
                    if min.as_ref().is_none_or(|m| coeff < m) {
                        min = Some(coeff.clone());
                    }
                    if max.as_ref().is_none_or(|m| coeff > m) {
                        max = Some(coeff.clone());
                    }
                }
            }
            let min = min.unwrap_or_else(BigInt::zero);
            let max = max.unwrap_or_else(BigInt::zero);
            if min.is_negative() {
                return Err(Error::falsification(
                    window[0].clone(),
                    None,
                    format!("negative K coefficient observed (range [{min}, {max}])"),
                ));
            }
            Ok((
                "min >= 0".into(),
                format!("observed range [{min}, {max}]"),
                true,
            ))
        },
    ));

    Ok(report)
}
