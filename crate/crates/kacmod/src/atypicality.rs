//! Atypicality data of a dominant weight: the atypicality matrix, the gamma
//! chain, the maximal chain-closure sets Delta(gamma_i), the nabla partition
//! with its k-vector, connectedness, mu_0, and the odd-reflection walk.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weight::{rho_tilde_for, two_rho_one_for, IntegralWeight, OddRoot};

/// Entry (i, j) is the pairing (mu + rho, beta_{ij}); zeros mark the
/// atypical roots.
pub fn atypicality_matrix(mu: &IntegralWeight) -> Result<Vec<Vec<i64>>> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.clone()));
    }
    let shifted = mu.add(&rho_tilde_for(mu.shape()));
    let (m, n) = mu.shape();
    Ok((0..m)
        .map(|i| {
            (0..n)
                .map(|j| shifted.eps()[i] + shifted.delta()[j])
                .collect()
        })
        .collect())
}

/// The atypical roots gamma_1 < gamma_2 < ... < gamma_r. For dominant mu
/// the zeros of the atypicality matrix always form a chain in the root
/// order; a violation is reported as an internal error.
pub fn gamma_chain(mu: &IntegralWeight) -> Result<Vec<OddRoot>> {
    let matrix = atypicality_matrix(mu)?;
    let mut zeros: Vec<OddRoot> = Vec::new();
    for (i, row) in matrix.iter().enumerate() {
        for (j, &entry) in row.iter().enumerate() {
            if entry == 0 {
                zeros.push(OddRoot::new(i + 1, j + 1));
            }
        }
    }
    // chain order: strictly decreasing row index, strictly increasing column
    zeros.sort_by_key(|z| std::cmp::Reverse(z.i));
    for pair in zeros.windows(2) {
        if !(pair[1].i < pair[0].i && pair[1].j > pair[0].j) {
            return Err(Error::Internal(format!(
                "atypical roots of {mu} do not form a chain: {} vs {}",
                pair[0], pair[1]
            )));
        }
    }
    Ok(zeros)
}

fn check_atypical(mu: &IntegralWeight, gamma: OddRoot) -> Result<()> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.clone()));
    }
    let shifted = mu.add(&rho_tilde_for(mu.shape()));
    if shifted.pair_odd(gamma) != 0 {
        return Err(Error::NotAtypicalRoot {
            mu: mu.clone(),
            gamma,
        });
    }
    Ok(())
}

/// Candidates alpha > gamma, not yet chosen, with (w + rho, alpha) = 0.
fn zero_candidates(shifted: &IntegralWeight, gamma: OddRoot, chosen: &[OddRoot]) -> Vec<OddRoot> {
    let (m, n) = shifted.shape();
    let mut out = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            let alpha = OddRoot::new(i, j);
            if alpha.root_gt(gamma) && !chosen.contains(&alpha) && shifted.pair_odd(alpha) == 0 {
                out.push(alpha);
            }
        }
    }
    out
}

/// The maximal subset {gamma = alpha_0, alpha_1, ...} of odd positive roots
/// with every alpha_i > gamma (i > 0) satisfying the successive vanishing
/// conditions (mu + alpha_0 + ... + alpha_{k-1} + rho, alpha_k) = 0,
/// returned in insertion order.
///
/// The insertion rule is deterministic: among the current candidates take
/// the one with the largest row index, ties broken by the smallest column
/// index. Inserting an admissible candidate in the wrong order can
/// terminate prematurely (for gl(2/2) and mu = 0, taking beta(1,2) right
/// after beta(2,1) stops at two roots instead of four), so the final set is
/// checked against the dominance postcondition and, on failure, recomputed
/// with the exhaustive oracle.
pub fn delta_set(mu: &IntegralWeight, gamma: OddRoot) -> Result<Vec<OddRoot>> {
    check_atypical(mu, gamma)?;
    let rho = rho_tilde_for(mu.shape());
    let mut chosen = vec![gamma];
    let mut current = mu.add(&gamma.to_weight(mu.shape()));
    loop {
        let shifted = current.add(&rho);
        let mut candidates = zero_candidates(&shifted, gamma, &chosen);
        if candidates.is_empty() {
            break;
        }
        candidates.sort_by(|a, b| b.i.cmp(&a.i).then(a.j.cmp(&b.j)));
        let alpha = candidates[0];
        chosen.push(alpha);
        current = current.add(&alpha.to_weight(mu.shape()));
    }
    if current.is_dominant() {
        return Ok(chosen);
    }
    // Deterministic rule failed its postcondition; fall back to the
    // exhaustive search.
    let fallback = delta_set_oracle(mu, gamma, crate::Caps::default().oracle_states)?;
    let lambda = fallback
        .iter()
        .fold(mu.clone(), |acc, b| acc.add(&b.to_weight(mu.shape())));
    if !lambda.is_dominant() {
        return Err(Error::Internal(format!(
            "maximal chain closure of {gamma} for {mu} is not dominant even via the oracle"
        )));
    }
    Ok(fallback)
}

/// Exhaustive backtracking over all admissible insertion sequences,
/// returning the maximum-cardinality terminal set. Used as the permanent
/// correctness oracle for [`delta_set`]. Distinct terminal sets of maximal
/// size would contradict the uniqueness of the maximal subset and are
/// reported as an internal error.
pub fn delta_set_oracle(mu: &IntegralWeight, gamma: OddRoot, cap: usize) -> Result<Vec<OddRoot>> {
    check_atypical(mu, gamma)?;
    let shape = mu.shape();
    let (_, n) = shape;
    let rho = rho_tilde_for(shape);
    let bit = |alpha: OddRoot| -> u64 { 1u64 << ((alpha.i - 1) * n + (alpha.j - 1)) };

    struct Search {
        rho: IntegralWeight,
        gamma: OddRoot,
        shape: (usize, usize),
        visited: HashSet<u64>,
        states: usize,
        cap: usize,
        best: Option<(usize, u64, Vec<OddRoot>)>,
        /// All terminal masks of the current best cardinality.
        best_masks: HashSet<u64>,
    }

    impl Search {
        fn run(
            &mut self,
            mask: u64,
            current: &IntegralWeight,
            sequence: &mut Vec<OddRoot>,
        ) -> Result<()> {
            if !self.visited.insert(mask) {
                return Ok(());
            }
            self.states += 1;
            if self.states > self.cap {
                return Err(Error::CapExceeded {
                    what: "oracle states",
                    size: self.states as u128,
                    cap: self.cap,
                });
            }
            let shifted = current.add(&self.rho);
            let candidates = zero_candidates(&shifted, self.gamma, sequence);
            if candidates.is_empty() {
                let size = sequence.len();
                match &self.best {
                    Some((best_size, _, _)) if size < *best_size => {}
                    Some((best_size, _, _)) if size == *best_size => {
                        self.best_masks.insert(mask);
                    }
                    _ => {
                        self.best = Some((size, mask, sequence.clone()));
                        self.best_masks = HashSet::from([mask]);
                    }
                }
                return Ok(());
            }
            for alpha in candidates {
                sequence.push(alpha);
                let next = current.add(&alpha.to_weight(self.shape));
                let next_mask = mask | (1u64 << ((alpha.i - 1) * self.shape.1 + (alpha.j - 1)));
                self.run(next_mask, &next, sequence)?;
                sequence.pop();
            }
            Ok(())
        }
    }

    let mut search = Search {
        rho,
        gamma,
        shape,
        visited: HashSet::new(),
        states: 0,
        cap,
        best: None,
        best_masks: HashSet::new(),
    };
    let mut sequence = vec![gamma];
    let start = mu.add(&gamma.to_weight(shape));
    search.run(bit(gamma), &start, &mut sequence)?;
    if search.best_masks.len() > 1 {
        return Err(Error::Internal(format!(
            "two distinct maximal chain closures of {gamma} for {mu}: uniqueness violated"
        )));
    }
    Ok(search
        .best
        .expect("at least the singleton terminal set exists")
        .2)
}

/// Complete atypicality data of one dominant weight.
#[derive(Debug, Clone, Serialize)]
pub struct AtypicalityProfile {
    pub mu: IntegralWeight,
    pub gamma: Vec<OddRoot>,
    pub delta_sets: Vec<Vec<OddRoot>>,
    pub nabla_sets: Vec<Vec<OddRoot>>,
    pub k: Vec<usize>,
    pub mu_zero: IntegralWeight,
}

impl AtypicalityProfile {
    pub fn degree(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_typical(&self) -> bool {
        self.gamma.is_empty()
    }

    /// Entry (i, j) is true iff some pair of roots from
    /// nabla(gamma_i) x nabla(gamma_j) has a nonzero pairing.
    pub fn connectedness(&self) -> Vec<Vec<bool>> {
        let r = self.gamma.len();
        let mut rel = vec![vec![false; r]; r];
        for (i, row) in rel.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.nabla_sets[i]
                    .iter()
                    .any(|a| self.nabla_sets[j].iter().any(|b| a.pairing(*b) != 0));
            }
        }
        rel
    }
}

/// Assembles the gamma chain, the Delta and nabla sets, the k-vector and
/// mu_0 for a dominant weight.
pub fn nabla_profile(mu: &IntegralWeight) -> Result<AtypicalityProfile> {
    let gamma = gamma_chain(mu)?;
    let mut delta_sets: Vec<Vec<OddRoot>> = Vec::with_capacity(gamma.len());
    for &g in &gamma {
        delta_sets.push(delta_set(mu, g)?);
    }
    for w in delta_sets.windows(2) {
        let (outer, inner) = (&w[0], &w[1]);
        if !(inner.iter().all(|a| outer.contains(a)) && inner.len() < outer.len()) {
            return Err(Error::Internal(format!(
                "Delta sets of {mu} are not strictly nested"
            )));
        }
    }
    let mut nabla_sets: Vec<Vec<OddRoot>> = Vec::with_capacity(gamma.len());
    for (idx, outer) in delta_sets.iter().enumerate() {
        let nabla: Vec<OddRoot> = match delta_sets.get(idx + 1) {
            Some(inner) => outer
                .iter()
                .copied()
                .filter(|a| !inner.contains(a))
                .collect(),
            None => outer.clone(),
        };
        if nabla.is_empty() || nabla.iter().any(|a| !a.root_geq(gamma[idx])) {
            return Err(Error::Internal(format!(
                "nabla(gamma_{}) of {mu} violates the root order",
                idx + 1
            )));
        }
        nabla_sets.push(nabla);
    }
    let k = nabla_sets.iter().map(|s| s.len()).collect();
    let mu_zero =
        mu_zero_from_first_delta(mu, delta_sets.first().map(Vec::as_slice).unwrap_or(&[]));
    Ok(AtypicalityProfile {
        mu: mu.clone(),
        gamma,
        delta_sets,
        nabla_sets,
        k,
        mu_zero,
    })
}

fn mu_zero_from_first_delta(mu: &IntegralWeight, delta_one: &[OddRoot]) -> IntegralWeight {
    let shape = mu.shape();
    let (m, n) = shape;
    let mut out = mu.clone();
    for i in 1..=m {
        for j in 1..=n {
            let alpha = OddRoot::new(i, j);
            if !delta_one.contains(&alpha) {
                out = out.sub(&alpha.to_weight(shape));
            }
        }
    }
    out
}

/// mu_0 = mu - sum of the odd positive roots outside Delta(gamma_1); the
/// smallest g0 highest weight in the restriction of the simple module. For
/// typical mu the convention Delta(gamma_1) = {} makes this mu - 2*rho_1.
pub fn mu_zero(mu: &IntegralWeight) -> Result<IntegralWeight> {
    let gamma = gamma_chain(mu)?;
    let delta_one = match gamma.first() {
        Some(&g) => delta_set(mu, g)?,
        None => Vec::new(),
    };
    Ok(mu_zero_from_first_delta(mu, &delta_one))
}

/// One step of the odd-reflection walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WalkStep {
    pub alpha: OddRoot,
    /// True when the highest weight changed (the pairing was nonzero).
    pub subtracted: bool,
}

/// Walks the fixed odd-reflection sequence beta_{m,1}, ..., beta_{m,n},
/// beta_{m-1,1}, ..., beta_{1,n}. At each step the current rho gains alpha;
/// the current highest weight loses alpha exactly when the pairing
/// (lambda + rho, alpha) is nonzero. The final weight is mu_0, computed by
/// an independent route from the Delta(gamma_1) formula.
pub fn odd_reflection_walk(mu: &IntegralWeight) -> Result<(IntegralWeight, Vec<WalkStep>)> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.clone()));
    }
    let shape = mu.shape();
    let (m, n) = shape;
    let mut lambda = mu.clone();
    let mut rho = rho_tilde_for(shape);
    let mut trace = Vec::with_capacity(m * n);
    for i in (1..=m).rev() {
        for j in 1..=n {
            let alpha = OddRoot::new(i, j);
            let subtracted = lambda.add(&rho).pair_odd(alpha) != 0;
            if subtracted {
                lambda = lambda.sub(&alpha.to_weight(shape));
            }
            rho = rho.add(&alpha.to_weight(shape));
            trace.push(WalkStep { alpha, subtracted });
        }
    }
    let expected_rho = rho_tilde_for(shape).add(&two_rho_one_for(shape));
    if rho != expected_rho {
        return Err(Error::Internal(
            "odd-reflection walk did not add every odd root to rho".into(),
        ));
    }
    Ok((lambda, trace))
}
