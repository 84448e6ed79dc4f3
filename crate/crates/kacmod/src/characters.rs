//! Exact characters: gl(m)+gl(n) irreducibles by Gelfand-Tsetlin pattern
//! enumeration, Kac modules via the odd product factor, simple modules via
//! the inverted q-matrix specialized at q = -1 on exact finite supports,
//! and g0-branching.
//!
//! Every [`CharacterMap`] carries its exactness guarantee: either the map
//! is the whole character, or it is exact on a declared order interval.
//! The simple-module character is an a priori infinite alternating sum of
//! Kac characters; restricting to the interval [reverse_sorted(mu) -
//! 2rho_1, mu] makes it finite and exact, because every weight of the
//! simple module lies there and every Kac term meeting the interval comes
//! from a window column.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::kl::{assemble_aq_on_interval, invert_unitriangular, specialize};
use crate::multiplicity::row_q;
use crate::weight::{two_rho_one_for, IntegralWeight};

/// A finite weight-multiplicity map with an explicit exactness guarantee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterMap {
    support: BTreeMap<IntegralWeight, i64>,
    region: Option<(IntegralWeight, IntegralWeight)>,
    exact_everywhere: bool,
}

impl CharacterMap {
    fn from_support(support: BTreeMap<IntegralWeight, i64>) -> Self {
        CharacterMap {
            support,
            region: None,
            exact_everywhere: true,
        }
    }

    pub fn multiplicity(&self, w: &IntegralWeight) -> i64 {
        self.support.get(w).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (&IntegralWeight, i64)> {
        self.support.iter().map(|(w, &m)| (w, m))
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    pub fn is_exact_everywhere(&self) -> bool {
        self.exact_everywhere
    }

    pub fn region(&self) -> Option<(&IntegralWeight, &IntegralWeight)> {
        self.region.as_ref().map(|(lo, hi)| (lo, hi))
    }

    /// Total mass: the dimension when the map is a full character.
    pub fn dimension(&self) -> Result<i64> {
        let mut acc = 0i64;
        for &m in self.support.values() {
            acc = acc
                .checked_add(m)
                .ok_or_else(|| Error::Internal("dimension overflow".into()))?;
        }
        Ok(acc)
    }

    /// Convolution of two everywhere-exact characters.
    pub fn convolve(&self, other: &CharacterMap, cap: usize) -> Result<CharacterMap> {
        if !(self.exact_everywhere && other.exact_everywhere) {
            return Err(Error::Config(
                "convolution requires everywhere-exact characters".into(),
            ));
        }
        let mut support: BTreeMap<IntegralWeight, i64> = BTreeMap::new();
        for (wa, ma) in &self.support {
            for (wb, mb) in &other.support {
                let m = ma
                    .checked_mul(*mb)
                    .ok_or_else(|| Error::Internal("multiplicity overflow".into()))?;
                let entry = support.entry(wa.add(wb)).or_insert(0);
                *entry = entry
                    .checked_add(m)
                    .ok_or_else(|| Error::Internal("multiplicity overflow".into()))?;
                if support.len() > cap {
                    return Err(Error::CapExceeded {
                        what: "character support",
                        size: support.len() as u128,
                        cap,
                    });
                }
            }
        }
        support.retain(|_, m| *m != 0);
        Ok(CharacterMap::from_support(support))
    }

    fn add_scaled(&mut self, other: &CharacterMap, c: i64) -> Result<()> {
        for (w, m) in &other.support {
            let term = c
                .checked_mul(*m)
                .ok_or_else(|| Error::Internal("multiplicity overflow".into()))?;
            let entry = self.support.entry(w.clone()).or_insert(0);
            *entry = entry
                .checked_add(term)
                .ok_or_else(|| Error::Internal("multiplicity overflow".into()))?;
            if *entry == 0 {
                self.support.remove(w);
            }
        }
        Ok(())
    }

    /// Keeps only the weights of the order interval [lo, hi] and records
    /// the interval as the exactness region.
    fn restricted(
        mut self,
        lo: &IntegralWeight,
        hi: &IntegralWeight,
        exact_everywhere: bool,
    ) -> Result<CharacterMap> {
        let mut keep: BTreeMap<IntegralWeight, i64> = BTreeMap::new();
        for (w, m) in std::mem::take(&mut self.support) {
            if lo.leq(&w)? && w.leq(hi)? {
                keep.insert(w, m);
            }
        }
        Ok(CharacterMap {
            support: keep,
            region: Some((lo.clone(), hi.clone())),
            exact_everywhere,
        })
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    weight: &'a IntegralWeight,
    mult: i64,
}

impl Serialize for CharacterMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct RegionJson<'a> {
            lo: &'a IntegralWeight,
            hi: &'a IntegralWeight,
        }
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Json<'a> {
            Exact {
                exact: bool,
                terms: Vec<TermJson<'a>>,
            },
            Region {
                region: RegionJson<'a>,
                terms: Vec<TermJson<'a>>,
            },
        }
        let terms: Vec<TermJson> = self
            .support
            .iter()
            .map(|(w, &m)| TermJson { weight: w, mult: m })
            .collect();
        let json = if self.exact_everywhere {
            Json::Exact { exact: true, terms }
        } else {
            let (lo, hi) = self.region.as_ref().ok_or_else(|| {
                serde::ser::Error::custom("interval-exact character without a region")
            })?;
            Json::Region {
                region: RegionJson { lo, hi },
                terms,
            }
        };
        json.serialize(serializer)
    }
}

/// Dimension of the gl(k) irreducible with highest weight `top` by the Weyl
/// dimension formula; the independent scalar cross-check for the pattern
/// enumeration.
pub fn gl_weyl_dim(top: &[i64]) -> Result<i64> {
    let k = top.len();
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..k {
        for j in (i + 1)..k {
            num = num
                .checked_mul((top[i] - top[j]) as i128 + (j - i) as i128)
                .ok_or_else(|| Error::Internal("dimension overflow".into()))?;
            den *= (j - i) as i128;
        }
    }
    i64::try_from(num / den).map_err(|_| Error::Internal("dimension overflow".into()))
}

/// Weight multiplicities of the gl(k) irreducible with highest weight `top`
/// (weakly decreasing integers), by enumerating interleaving triangular
/// patterns. Entries may be negative; the interleaving conditions are
/// shift-equivariant, so no normalization is needed.
fn gl_block_char(top: &[i64], cap: usize) -> Result<BTreeMap<Vec<i64>, i64>> {
    if top.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Internal(format!(
            "block {top:?} is not weakly decreasing"
        )));
    }
    let dim = gl_weyl_dim(top)?;
    if dim as u128 > cap as u128 {
        return Err(Error::CapExceeded {
            what: "patterns",
            size: dim as u128,
            cap,
        });
    }
    let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();

    fn walk(row: &[i64], tail: &mut Vec<i64>, out: &mut BTreeMap<Vec<i64>, i64>) {
        if row.len() == 1 {
            let mut weight = Vec::with_capacity(tail.len() + 1);
            weight.push(row[0]);
            weight.extend(tail.iter().rev());
            *out.entry(weight).or_insert(0) += 1;
            return;
        }
        let l = row.len() - 1;
        let row_sum: i64 = row.iter().sum();
        let mut next: Vec<i64> = (0..l).map(|i| row[i + 1]).collect();
        loop {
            let next_sum: i64 = next.iter().sum();
            tail.push(row_sum - next_sum);
            walk(&next, tail, out);
            tail.pop();

            // odometer over the interleaving box row[i] >= next[i] >= row[i+1]
            let mut t = 0;
            loop {
                if t == l {
                    break;
                }
                if next[t] < row[t] {
                    next[t] += 1;
                    break;
                }
                next[t] = row[t + 1];
                t += 1;
            }
            if t == l {
                break;
            }
        }
    }

    let mut tail = Vec::with_capacity(top.len());
    walk(top, &mut tail, &mut out);
    debug_assert_eq!(out.values().sum::<i64>(), dim);
    Ok(out)
}

/// Exact character of the gl(m)+gl(n) irreducible with highest weight
/// `lambda`: the product of the per-block pattern characters.
pub fn char_g0(lambda: &IntegralWeight, caps: &Caps) -> Result<CharacterMap> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let eps_char = gl_block_char(lambda.eps(), caps.patterns)?;
    let delta_char = gl_block_char(lambda.delta(), caps.patterns)?;
    let mut support: BTreeMap<IntegralWeight, i64> = BTreeMap::new();
    for (we, ce) in &eps_char {
        for (wd, cd) in &delta_char {
            let m = ce
                .checked_mul(*cd)
                .ok_or_else(|| Error::Internal("multiplicity overflow".into()))?;
            let w = IntegralWeight::new(we.clone(), wd.clone());
            let entry = support.entry(w).or_insert(0);
            *entry = entry
                .checked_add(m)
                .ok_or_else(|| Error::Internal("multiplicity overflow".into()))?;
        }
    }
    Ok(CharacterMap::from_support(support))
}

/// The exact expansion of the product over all odd positive roots of
/// (1 + e^{-alpha}): the subset-sum character of the odd exterior factor.
pub fn odd_factor(alg: &crate::weight::Superalgebra, caps: &Caps) -> Result<CharacterMap> {
    let shape = alg.shape();
    let mut support: BTreeMap<IntegralWeight, i64> = BTreeMap::new();
    support.insert(alg.zero_weight(), 1);
    for beta in alg.odd_positive_roots() {
        let minus = alg.zero_weight().sub(&beta.to_weight(shape));
        let mut next = support.clone();
        for (w, m) in &support {
            let entry = next.entry(w.add(&minus)).or_insert(0);
            *entry = entry
                .checked_add(*m)
                .ok_or_else(|| Error::Internal("multiplicity overflow".into()))?;
        }
        if next.len() > caps.odd_support {
            return Err(Error::CapExceeded {
                what: "odd factor support",
                size: next.len() as u128,
                cap: caps.odd_support,
            });
        }
        support = next;
    }
    Ok(CharacterMap::from_support(support))
}

/// Exact Kac-module character: the odd factor convolved with the g0
/// character of the highest weight.
pub fn char_kac(lambda: &IntegralWeight, caps: &Caps) -> Result<CharacterMap> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let (m, n) = lambda.shape();
    let alg = crate::weight::Superalgebra::with_limit(m, n, usize::MAX)?;
    let odd = odd_factor(&alg, caps)?;
    odd.convolve(&char_g0(lambda, caps)?, caps.odd_support)
}

/// Exact character of the simple module with highest weight `mu`: the
/// alternating sum of Kac characters weighted by the q = -1 specialization
/// of the inverted window matrix, restricted to [reverse_sorted(mu) -
/// 2rho_1, mu]. A negative multiplicity in the result contradicts the
/// multiplicity rule and raises a falsification diagnostic.
pub fn char_simple(mu: &IntegralWeight, caps: &Caps) -> Result<CharacterMap> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.clone()));
    }
    let lo = mu.reverse_sorted().sub(&two_rho_one_for(mu.shape()));
    let aq = assemble_aq_on_interval(&lo, mu, caps.window)?;
    let kq = invert_unitriangular(&aq)?;
    let b = specialize(&kq, -1);
    let row = b
        .index_of(mu)
        .ok_or_else(|| Error::Internal("window does not contain its own top".into()))?;
    let mut acc = CharacterMap::from_support(BTreeMap::new());
    for (c, nu) in b.window().iter().enumerate() {
        let coeff = b.get(row, c);
        if coeff.is_zero() {
            continue;
        }
        let coeff = coeff
            .to_i64()
            .ok_or_else(|| Error::Internal("character coefficient overflows i64".into()))?;
        acc.add_scaled(&char_kac(nu, caps)?, coeff)?;
    }
    let restricted = acc.restricted(&lo, mu, true)?;
    for (w, m) in &restricted.support {
        if *m < 0 {
            return Err(Error::falsification(
                mu.clone(),
                None,
                format!("simple character has multiplicity {m} at {w}"),
            ));
        }
    }
    if restricted.multiplicity(mu) != 1 {
        return Err(Error::falsification(
            mu.clone(),
            None,
            format!(
                "simple character has multiplicity {} at its highest weight",
                restricted.multiplicity(mu)
            ),
        ));
    }
    Ok(restricted)
}

/// Greedy branching of an everywhere-exact character over gl(m)+gl(n):
/// repeatedly strip the maximal remaining weight. Fails when the input is
/// not a genuine g0 character.
pub fn decompose_g0(chi: &CharacterMap, caps: &Caps) -> Result<Vec<(IntegralWeight, i64)>> {
    if !chi.exact_everywhere {
        return Err(Error::Config(
            "decompose_g0 requires an everywhere-exact character".into(),
        ));
    }
    let mut work = chi.support.clone();
    let mut out = Vec::new();
    while let Some((nu, &c)) = work.last_key_value() {
        // the lexicographically greatest support weight is maximal in the
        // partial order
        let nu = nu.clone();
        if !nu.is_dominant() {
            return Err(Error::NotCharacter {
                weight: nu,
                detail: "maximal support weight is not dominant".into(),
            });
        }
        if c <= 0 {
            return Err(Error::NotCharacter {
                weight: nu,
                detail: format!("maximal support weight has multiplicity {c}"),
            });
        }
        let g0 = char_g0(&nu, caps)?;
        for (w, m) in &g0.support {
            let term = c
                .checked_mul(*m)
                .ok_or_else(|| Error::Internal("multiplicity overflow".into()))?;
            let entry = work.entry(w.clone()).or_insert(0);
            *entry -= term;
            if *entry == 0 {
                work.remove(w);
            }
        }
        out.push((nu, c));
    }
    Ok(out)
}

/// Outcome of comparing ch V_lambda with the sum of its composition-factor
/// characters.
#[derive(Debug, Clone, Serialize)]
pub struct KacDecompositionReport {
    pub lambda: IntegralWeight,
    /// The nonzero multiplicities a_{lambda,mu}.
    pub factors: Vec<(IntegralWeight, i64)>,
    /// Weights where the two sides differ, with both multiplicities.
    pub mismatches: Vec<(IntegralWeight, i64, i64)>,
}

impl KacDecompositionReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks ch V_lambda = sum over mu of a_{lambda,mu} ch L_mu exactly, with
/// the multiplicities read off the q-row at q = -1.
pub fn verify_kac_decomposition(
    lambda: &IntegralWeight,
    caps: &Caps,
) -> Result<KacDecompositionReport> {
    let row = row_q(lambda, caps.window)?;
    let mut factors = Vec::with_capacity(row.len());
    let mut rhs = CharacterMap::from_support(BTreeMap::new());
    for (mu, coeff) in row {
        let a = coeff
            .eval(-1)
            .to_i64()
            .ok_or_else(|| Error::Internal("multiplicity overflows i64".into()))?;
        if a == 0 {
            continue;
        }
        rhs.add_scaled(&char_simple(&mu, caps)?, a)?;
        factors.push((mu, a));
    }
    let lhs = char_kac(lambda, caps)?;
    let mut mismatches = Vec::new();
    let mut keys: Vec<&IntegralWeight> = lhs.support.keys().chain(rhs.support.keys()).collect();
    keys.sort();
    keys.dedup();
    for w in keys {
        let a = lhs.multiplicity(w);
        let b = rhs.multiplicity(w);
        if a != b {
            mismatches.push((w.clone(), a, b));
        }
    }
    Ok(KacDecompositionReport {
        lambda: lambda.clone(),
        factors,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(eps: &[i64], delta: &[i64]) -> IntegralWeight {
        IntegralWeight::new(eps.to_vec(), delta.to_vec())
    }

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn defining_representation_of_the_first_factor() {
        let chi = char_g0(&w(&[1, 0], &[0, 0]), &caps()).unwrap();
        assert_eq!(chi.dimension().unwrap(), 2);
        assert_eq!(chi.multiplicity(&w(&[1, 0], &[0, 0])), 1);
        assert_eq!(chi.multiplicity(&w(&[0, 1], &[0, 0])), 1);
    }

    /// Independent oracle for one-row highest weights: the character of
    /// Sym^k of the defining representation lists every exponent vector of
    /// total degree k exactly once.
    #[test]
    fn one_row_block_matches_monomial_expansion() {
        fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
            if parts == 1 {
                return vec![vec![total]];
            }
            let mut out = Vec::new();
            for first in 0..=total {
                for mut rest in compositions(total - first, parts - 1) {
                    let mut v = vec![first];
                    v.append(&mut rest);
                    out.push(v);
                }
            }
            out
        }
        for (k, m) in [(3i64, 3usize), (4, 2), (2, 4)] {
            let mut top = vec![0i64; m];
            top[0] = k;
            let chi = gl_block_char(&top, 1_000_000).unwrap();
            let expected: BTreeMap<Vec<i64>, i64> =
                compositions(k, m).into_iter().map(|v| (v, 1)).collect();
            assert_eq!(chi, expected, "k = {k}, m = {m}");
        }
    }

    #[test]
    fn product_dimension_example() {
        let chi = char_g0(&w(&[1, 0], &[1, 0]), &caps()).unwrap();
        assert_eq!(chi.dimension().unwrap(), 4);
    }

    #[test]
    fn pattern_count_equals_weyl_dimension() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let k = rng.gen_range(1..=4);
            let mut top: Vec<i64> = (0..k).map(|_| rng.gen_range(-4..=4)).collect();
            top.sort_unstable_by(|a, b| b.cmp(a));
            let chi = gl_block_char(&top, 1_000_000).unwrap();
            assert_eq!(
                chi.values().sum::<i64>(),
                gl_weyl_dim(&top).unwrap(),
                "top = {top:?}"
            );
        }
    }

    #[test]
    fn odd_factor_gl11_and_mass() {
        let alg = crate::weight::Superalgebra::new(1, 1).unwrap();
        let odd = odd_factor(&alg, &caps()).unwrap();
        assert_eq!(odd.dimension().unwrap(), 2);
        assert_eq!(odd.multiplicity(&w(&[0], &[0])), 1);
        assert_eq!(odd.multiplicity(&w(&[-1], &[1])), 1);

        let alg = crate::weight::Superalgebra::new(2, 3).unwrap();
        let odd = odd_factor(&alg, &caps()).unwrap();
        assert_eq!(odd.dimension().unwrap(), 1 << 6);
        // the lowest weight is -2rho_1, reached once
        let lowest = alg.zero_weight().sub(&alg.two_rho_one());
        assert_eq!(odd.multiplicity(&lowest), 1);
        for (weight, _) in odd.support() {
            assert!(lowest.leq(weight).unwrap());
        }
    }

    #[test]
    fn kac_character_gl11() {
        for a in -2i64..=2 {
            let chi = char_kac(&w(&[a], &[-a]), &caps()).unwrap();
            assert_eq!(chi.dimension().unwrap(), 2);
            assert_eq!(chi.multiplicity(&w(&[a], &[-a])), 1);
            assert_eq!(chi.multiplicity(&w(&[a - 1], &[-a + 1])), 1);
        }
    }

    #[test]
    fn kac_dimension_and_highest_weight() {
        let lambda = w(&[2, 0], &[0, -1]);
        let chi = char_kac(&lambda, &caps()).unwrap();
        let g0_dim = char_g0(&lambda, &caps()).unwrap().dimension().unwrap();
        assert_eq!(chi.dimension().unwrap(), (1 << 4) * g0_dim);
        assert_eq!(chi.multiplicity(&lambda), 1);
    }

    #[test]
    fn simple_character_gl11_is_one_dimensional() {
        for a in -5i64..=5 {
            let chi = char_simple(&w(&[a], &[-a]), &caps()).unwrap();
            assert_eq!(chi.support_len(), 1, "a = {a}");
            assert_eq!(chi.multiplicity(&w(&[a], &[-a])), 1);
            assert!(chi.is_exact_everywhere());
        }
    }

    #[test]
    fn simple_character_of_typical_weight_is_the_kac_character() {
        let lambda = w(&[3, 1], &[0, -2]);
        let simple = char_simple(&lambda, &caps()).unwrap();
        let kac = char_kac(&lambda, &caps()).unwrap();
        assert_eq!(simple.support_len(), kac.support_len());
        for (weight, m) in kac.support() {
            assert_eq!(simple.multiplicity(weight), m);
        }
    }

    #[test]
    fn decompose_g0_of_an_irreducible_is_itself() {
        let nu = w(&[2, 1], &[0, -1]);
        let chi = char_g0(&nu, &caps()).unwrap();
        assert_eq!(decompose_g0(&chi, &caps()).unwrap(), vec![(nu, 1)]);
    }

    #[test]
    fn decompose_g0_of_a_kac_module_bottom_constituent() {
        let lambda = w(&[1, 0], &[0, -1]);
        let chi = char_kac(&lambda, &caps()).unwrap();
        let parts = decompose_g0(&chi, &caps()).unwrap();
        let bottom = lambda.sub(&two_rho_one_for((2, 2)));
        // the smallest constituent is lambda - 2rho_1 with multiplicity 1
        assert!(parts.iter().any(|(nu, c)| *nu == bottom && *c == 1));
        for (nu, _) in &parts {
            assert!(bottom.leq(nu).unwrap(), "constituent {nu} below the bottom");
        }
        // mass check: constituent dimensions sum to the Kac dimension
        let total: i64 = parts
            .iter()
            .map(|(nu, c)| c * char_g0(nu, &caps()).unwrap().dimension().unwrap())
            .sum();
        assert_eq!(total, chi.dimension().unwrap());
    }

    #[test]
    fn decompose_g0_rejects_non_characters() {
        let mut support = BTreeMap::new();
        support.insert(w(&[0, 1], &[0, 0]), 1i64);
        let chi = CharacterMap::from_support(support);
        assert!(matches!(
            decompose_g0(&chi, &caps()),
            Err(Error::NotCharacter { .. })
        ));
    }

    #[test]
    fn simple_character_branching_hits_mu_zero() {
        // doubly atypical gl(2/2) weight
        let mu = w(&[1, 0], &[0, -1]);
        let chi = char_simple(&mu, &caps()).unwrap();
        let parts = decompose_g0(&chi, &caps()).unwrap();
        let mu0 = crate::atypicality::mu_zero(&mu).unwrap();
        assert!(parts.iter().any(|(nu, c)| *nu == mu0 && *c == 1));
        for (nu, _) in &parts {
            assert!(
                mu0.leq(nu).unwrap(),
                "constituent {nu} not above mu0 = {mu0}"
            );
        }
    }

    #[test]
    fn kac_decomposition_gl11() {
        for a in -2i64..=2 {
            let report = verify_kac_decomposition(&w(&[a], &[-a]), &caps()).unwrap();
            assert!(report.ok());
            assert_eq!(report.factors.len(), 2);
        }
        // typical lambda: a single factor
        let report = verify_kac_decomposition(&w(&[2], &[1]), &caps()).unwrap();
        assert!(report.ok());
        assert_eq!(report.factors.len(), 1);
    }

    #[test]
    fn kac_decomposition_gl22_doubly_atypical() {
        // lambda = (x,x|-x,-x): three composition factors (coefficients 1,
        // -q, q^2 in the q-row)
        let report = verify_kac_decomposition(&w(&[1, 1], &[-1, -1]), &caps()).unwrap();
        assert!(report.ok(), "mismatches: {:?}", report.mismatches);
        assert_eq!(report.factors.len(), 3);
        assert!(report.factors.iter().all(|(_, a)| *a == 1));

        // lambda = (x,y|-y,-x) with x = y+2: four factors
        let report = verify_kac_decomposition(&w(&[2, 0], &[0, -2]), &caps()).unwrap();
        assert!(report.ok(), "mismatches: {:?}", report.mismatches);
        assert_eq!(report.factors.len(), 4);
    }

    #[test]
    fn character_json_shapes() {
        let chi = char_kac(&w(&[0], &[0]), &caps()).unwrap();
        let json = serde_json::to_value(&chi).unwrap();
        assert_eq!(json["exact"], serde_json::Value::Bool(true));
        assert!(json["terms"].is_array());

        let simple = char_simple(&w(&[2], &[-2]), &caps()).unwrap();
        let json = serde_json::to_value(&simple).unwrap();
        assert_eq!(json["exact"], serde_json::Value::Bool(true));
    }
}
