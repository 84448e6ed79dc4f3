//! Weights, roots, the invariant bilinear form, rho-shifts, dominance, the
//! partial order and finite order intervals for gl(m/n).
//!
//! Weights are integer vectors split into an eps-block of length m and a
//! delta-block of length n. The form is (eps_i, eps_j) = delta_ij,
//! (delta_i, delta_j) = -delta_ij, (eps_i, delta_j) = 0.
//!
//! All pairings use the integral shift rho~ = (m-1, ..., 1, 0 | 0, -1, ...,
//! 1-n) instead of rho = rho_0 - rho_1. The difference rho~ - rho is a
//! multiple of (1,...,1 | -1,...,-1), which pairs to zero with every root
//! and is invariant under the Weyl group S_m x S_n, so dominance tests, all
//! pairings (lambda + rho, alpha) and the dot action are unchanged while
//! every computation stays in integers.

use std::cmp::Reverse;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::caps::Caps;
use crate::error::{Error, Result};

/// Block sizes (m, n) of gl(m/n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Superalgebra {
    m: usize,
    n: usize,
}

impl Superalgebra {
    /// Constructs gl(m/n) under the default desk-scale guard m*n <= 30.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        Self::with_limit(m, n, Caps::default().max_block_product)
    }

    /// Constructs gl(m/n) with an explicit guard on m*n.
    pub fn with_limit(m: usize, n: usize, limit: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidAlgebra {
                m,
                n,
                detail: "block sizes must be at least 1".into(),
            });
        }
        if m.saturating_mul(n) > limit {
            return Err(Error::InvalidAlgebra {
                m,
                n,
                detail: format!("m*n = {} exceeds the guard {}", m * n, limit),
            });
        }
        Ok(Superalgebra { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    /// The odd positive roots beta_{ij} = eps_i - delta_j in row-major
    /// order (i ascending, then j ascending).
    pub fn odd_positive_roots(&self) -> Vec<OddRoot> {
        let mut roots = Vec::with_capacity(self.m * self.n);
        for i in 1..=self.m {
            for j in 1..=self.n {
                roots.push(OddRoot { i, j });
            }
        }
        roots
    }

    /// All positive roots (even and odd).
    pub fn positive_roots(&self) -> Vec<Root> {
        let mut roots = Vec::new();
        for i in 1..=self.m {
            for j in (i + 1)..=self.m {
                roots.push(Root::EvenEps { i, j });
            }
        }
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                roots.push(Root::EvenDelta { i, j });
            }
        }
        for beta in self.odd_positive_roots() {
            roots.push(Root::Odd(beta));
        }
        roots
    }

    /// The integral rho-shift (m-1, m-2, ..., 1, 0 | 0, -1, ..., 1-n).
    pub fn rho_tilde(&self) -> IntegralWeight {
        rho_tilde_for((self.m, self.n))
    }

    /// 2*rho_1 = (n, ..., n | -m, ..., -m), the sum of all odd positive
    /// roots.
    pub fn two_rho_one(&self) -> IntegralWeight {
        two_rho_one_for((self.m, self.n))
    }

    pub fn zero_weight(&self) -> IntegralWeight {
        IntegralWeight::new(vec![0; self.m], vec![0; self.n])
    }

    /// The simple roots of the distinguished positive system, in order
    /// eps_1-eps_2, ..., eps_{m-1}-eps_m, eps_m-delta_1, delta_1-delta_2,
    /// ..., delta_{n-1}-delta_n.
    pub fn simple_roots(&self) -> Vec<IntegralWeight> {
        let (m, n) = (self.m, self.n);
        let mut out = Vec::with_capacity(m + n - 1);
        for t in 0..m - 1 {
            let mut eps = vec![0i64; m];
            eps[t] = 1;
            eps[t + 1] = -1;
            out.push(IntegralWeight::new(eps, vec![0; n]));
        }
        {
            let mut eps = vec![0i64; m];
            let mut delta = vec![0i64; n];
            eps[m - 1] = 1;
            delta[0] = -1;
            out.push(IntegralWeight::new(eps, delta));
        }
        for t in 0..n - 1 {
            let mut delta = vec![0i64; n];
            delta[t] = 1;
            delta[t + 1] = -1;
            out.push(IntegralWeight::new(vec![0; m], delta));
        }
        out
    }
}

pub(crate) fn rho_tilde_for(shape: (usize, usize)) -> IntegralWeight {
    let (m, n) = shape;
    let eps = (0..m).map(|i| (m - 1 - i) as i64).collect();
    let delta = (0..n).map(|j| -(j as i64)).collect();
    IntegralWeight::new(eps, delta)
}

pub(crate) fn two_rho_one_for(shape: (usize, usize)) -> IntegralWeight {
    let (m, n) = shape;
    IntegralWeight::new(vec![n as i64; m], vec![-(m as i64); n])
}

/// The odd positive root beta_{ij} = eps_i - delta_j. Indices are 1-based,
/// matching the usual atypicality-matrix labelling.
///
/// Serializes as the pair `[i, j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddRoot {
    pub i: usize,
    pub j: usize,
}

impl OddRoot {
    pub fn new(i: usize, j: usize) -> Self {
        OddRoot { i, j }
    }

    /// Root partial order: beta_{kl} >= beta_{ij} iff k <= i and l >= j.
    pub fn root_geq(self, other: OddRoot) -> bool {
        self.i <= other.i && self.j >= other.j
    }

    /// Strict version of [`OddRoot::root_geq`].
    pub fn root_gt(self, other: OddRoot) -> bool {
        self != other && self.root_geq(other)
    }

    /// Pairing (beta_{ij}, beta_{kl}) = [i == k] - [j == l].
    pub fn pairing(self, other: OddRoot) -> i64 {
        (self.i == other.i) as i64 - (self.j == other.j) as i64
    }

    pub fn to_weight(self, shape: (usize, usize)) -> IntegralWeight {
        let (m, n) = shape;
        let mut eps = vec![0i64; m];
        let mut delta = vec![0i64; n];
        eps[self.i - 1] = 1;
        delta[self.j - 1] = -1;
        IntegralWeight::new(eps, delta)
    }
}

impl fmt::Display for OddRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "beta({},{})", self.i, self.j)
    }
}

impl Serialize for OddRoot {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.i, self.j).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OddRoot {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (i, j) = <(usize, usize)>::deserialize(deserializer)?;
        if i == 0 || j == 0 {
            return Err(D::Error::custom("odd root indices are 1-based"));
        }
        Ok(OddRoot { i, j })
    }
}

/// A root of gl(m/n); even roots are stored with i < j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Root {
    EvenEps { i: usize, j: usize },
    EvenDelta { i: usize, j: usize },
    Odd(OddRoot),
}

impl Root {
    pub fn to_weight(self, shape: (usize, usize)) -> IntegralWeight {
        let (m, n) = shape;
        match self {
            Root::EvenEps { i, j } => {
                let mut eps = vec![0i64; m];
                eps[i - 1] = 1;
                eps[j - 1] = -1;
                IntegralWeight::new(eps, vec![0; n])
            }
            Root::EvenDelta { i, j } => {
                let mut delta = vec![0i64; n];
                delta[i - 1] = 1;
                delta[j - 1] = -1;
                IntegralWeight::new(vec![0; m], delta)
            }
            Root::Odd(beta) => beta.to_weight(shape),
        }
    }
}

/// An integral weight (lambda_1, ..., lambda_m | lambda'_1, ..., lambda'_n)
/// in the standard eps-delta basis.
///
/// The derived `Ord` is the coordinate-lexicographic order (eps block first),
/// used only as a deterministic storage order; the representation-theoretic
/// partial order is [`IntegralWeight::leq`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntegralWeight {
    eps: Vec<i64>,
    delta: Vec<i64>,
}

impl IntegralWeight {
    pub fn new(eps: Vec<i64>, delta: Vec<i64>) -> Self {
        assert!(
            !eps.is_empty() && !delta.is_empty(),
            "weight blocks must be non-empty"
        );
        IntegralWeight { eps, delta }
    }

    pub fn eps(&self) -> &[i64] {
        &self.eps
    }

    pub fn delta(&self) -> &[i64] {
        &self.delta
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.eps.len(), self.delta.len())
    }

    fn check_shape(&self, other: &IntegralWeight) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                expected: self.shape(),
                got: other.shape(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &IntegralWeight) -> IntegralWeight {
        assert_eq!(
            self.shape(),
            other.shape(),
            "shape mismatch in weight addition"
        );
        IntegralWeight {
            eps: self
                .eps
                .iter()
                .zip(&other.eps)
                .map(|(a, b)| a + b)
                .collect(),
            delta: self
                .delta
                .iter()
                .zip(&other.delta)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &IntegralWeight) -> IntegralWeight {
        assert_eq!(
            self.shape(),
            other.shape(),
            "shape mismatch in weight subtraction"
        );
        IntegralWeight {
            eps: self
                .eps
                .iter()
                .zip(&other.eps)
                .map(|(a, b)| a - b)
                .collect(),
            delta: self
                .delta
                .iter()
                .zip(&other.delta)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn add_scaled(&self, other: &IntegralWeight, k: i64) -> IntegralWeight {
        assert_eq!(
            self.shape(),
            other.shape(),
            "shape mismatch in weight addition"
        );
        IntegralWeight {
            eps: self
                .eps
                .iter()
                .zip(&other.eps)
                .map(|(a, b)| a + k * b)
                .collect(),
            delta: self
                .delta
                .iter()
                .zip(&other.delta)
                .map(|(a, b)| a + k * b)
                .collect(),
        }
    }

    /// The invariant symmetric form: sum over the eps block minus sum over
    /// the delta block.
    pub fn bilinear(&self, other: &IntegralWeight) -> Result<i64> {
        self.check_shape(other)?;
        let e: i64 = self.eps.iter().zip(&other.eps).map(|(a, b)| a * b).sum();
        let d: i64 = self
            .delta
            .iter()
            .zip(&other.delta)
            .map(|(a, b)| a * b)
            .sum();
        Ok(e - d)
    }

    /// Pairing with an odd root: (x, beta_{ij}) = x_i + x'_j.
    pub fn pair_odd(&self, beta: OddRoot) -> i64 {
        self.eps[beta.i - 1] + self.delta[beta.j - 1]
    }

    /// Dominant iff both blocks are weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        self.eps.windows(2).all(|w| w[0] >= w[1]) && self.delta.windows(2).all(|w| w[0] >= w[1])
    }

    /// The S_m x S_n orbit representative: both blocks sorted descending.
    pub fn dominant_rep(&self) -> IntegralWeight {
        let mut eps = self.eps.clone();
        let mut delta = self.delta.clone();
        eps.sort_unstable_by_key(|&v| Reverse(v));
        delta.sort_unstable_by_key(|&v| Reverse(v));
        IntegralWeight { eps, delta }
    }

    /// The anti-dominant orbit representative: both blocks sorted ascending.
    pub fn reverse_sorted(&self) -> IntegralWeight {
        let mut eps = self.eps.clone();
        let mut delta = self.delta.clone();
        eps.sort_unstable();
        delta.sort_unstable();
        IntegralWeight { eps, delta }
    }

    /// The dot-dominant map d(w + rho) - rho. Returns `None` when w + rho
    /// has a repeated entry in either block (w + rho lies on a wall); the
    /// result is dominant whenever it is defined.
    pub fn dot_dominant(&self) -> Option<IntegralWeight> {
        let rho = rho_tilde_for(self.shape());
        let shifted = self.add(&rho).dominant_rep();
        if shifted.eps.windows(2).any(|w| w[0] == w[1])
            || shifted.delta.windows(2).any(|w| w[0] == w[1])
        {
            return None;
        }
        Some(shifted.sub(&rho))
    }

    /// Prefix sums expressing `self` (as a difference vector) over the
    /// simple roots. Returns the m+n-1 coefficients and the total
    /// coordinate sum (which must vanish for the vector to lie in the root
    /// lattice).
    pub(crate) fn simple_root_coords(&self) -> (Vec<i64>, i64) {
        let (m, n) = self.shape();
        let mut coords = Vec::with_capacity(m + n - 1);
        let mut acc = 0i64;
        for &v in &self.eps {
            acc += v;
            coords.push(acc);
        }
        for &v in &self.delta[..n - 1] {
            acc += v;
            coords.push(acc);
        }
        (coords, acc + self.delta[n - 1])
    }

    /// Partial order: self <= other iff other - self is a nonnegative
    /// integer combination of positive roots.
    pub fn leq(&self, other: &IntegralWeight) -> Result<bool> {
        self.check_shape(other)?;
        let diff = other.sub(self);
        let (coords, total) = diff.simple_root_coords();
        Ok(total == 0 && coords.iter().all(|&c| c >= 0))
    }

    /// Strict partial order.
    pub fn lt(&self, other: &IntegralWeight) -> Result<bool> {
        Ok(self != other && self.leq(other)?)
    }

    /// Height of `other - self`: the total number of simple roots in the
    /// expansion. Only meaningful when `self <= other`.
    pub fn height_to(&self, other: &IntegralWeight) -> i64 {
        let (coords, _) = other.sub(self).simple_root_coords();
        coords.iter().sum()
    }

    /// Parses the grammar "i1,...,im|j1,...,jn" with optional surrounding
    /// parentheses and whitespace, validating the arity against `alg`.
    pub fn parse(alg: &Superalgebra, text: &str) -> Result<IntegralWeight> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let cleaned = cleaned
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(&cleaned);
        let (eps_part, delta_part) = cleaned
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing `|` separator in weight `{text}`")))?;
        let parse_block = |part: &str| -> Result<Vec<i64>> {
            part.split(',')
                .map(|tok| {
                    tok.parse::<i64>().map_err(|_| {
                        Error::Parse(format!("invalid integer `{tok}` in weight `{text}`"))
                    })
                })
                .collect()
        };
        let eps = parse_block(eps_part)?;
        let delta = parse_block(delta_part)?;
        if eps.len() != alg.m() || delta.len() != alg.n() {
            return Err(Error::Parse(format!(
                "arity mismatch for gl({}/{}): got {} eps and {} delta entries",
                alg.m(),
                alg.n(),
                eps.len(),
                delta.len()
            )));
        }
        Ok(IntegralWeight::new(eps, delta))
    }
}

impl fmt::Display for IntegralWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps: Vec<String> = self.eps.iter().map(|v| v.to_string()).collect();
        let delta: Vec<String> = self.delta.iter().map(|v| v.to_string()).collect();
        write!(f, "{}|{}", eps.join(","), delta.join(","))
    }
}

/// All integral weights nu with lo <= nu <= hi, optionally filtered to
/// dominant ones, in a fixed linear extension of the partial order: by
/// total simple-root distance from `hi` (ascending, so `hi` comes first),
/// ties broken by descending coordinate-lexicographic order.
///
/// The listing order is a genuine linear extension: whenever nu < nu' both
/// keys place nu' first, because the simple-root distance from the top is
/// strictly monotone and, for equal distances, the first nonzero
/// coordinate of nu' - nu is positive.
pub fn enumerate_interval(
    lo: &IntegralWeight,
    hi: &IntegralWeight,
    dominant_only: bool,
    cap: usize,
) -> Result<Vec<IntegralWeight>> {
    if lo.shape() != hi.shape() {
        return Err(Error::ShapeMismatch {
            expected: lo.shape(),
            got: hi.shape(),
        });
    }
    let diff = hi.sub(lo);
    let (box_dims, total) = diff.simple_root_coords();
    if total != 0 || box_dims.iter().any(|&c| c < 0) {
        return Err(Error::NotComparable {
            lo: lo.clone(),
            hi: hi.clone(),
        });
    }
    let mut size: u128 = 1;
    for &c in &box_dims {
        size = size.saturating_mul(c as u128 + 1);
        if size > cap as u128 {
            return Err(Error::CapExceeded {
                what: "window",
                size,
                cap,
            });
        }
    }
    let (m, n) = lo.shape();
    let k = box_dims.len();
    let height_total: i64 = box_dims.iter().sum();

    let mut out: Vec<(i64, IntegralWeight)> = Vec::new();
    let mut v = vec![0i64; k];
    loop {
        // Reconstruct nu = lo + sum v[t] * simple_root[t] directly from the
        // prefix-coefficient vector v.
        let mut eps = Vec::with_capacity(m);
        for i in 0..m {
            let inc = v[i] - if i > 0 { v[i - 1] } else { 0 };
            eps.push(lo.eps[i] + inc);
        }
        let mut delta = Vec::with_capacity(n);
        for j in 0..n {
            let plus = if j < n - 1 { v[m + j] } else { 0 };
            delta.push(lo.delta[j] + plus - v[m - 1 + j]);
        }
        let nu = IntegralWeight::new(eps, delta);
        if !dominant_only || nu.is_dominant() {
            let height_from_hi = height_total - v.iter().sum::<i64>();
            out.push((height_from_hi, nu));
        }

        // Odometer step over the box 0 <= v <= box_dims.
        let mut t = 0;
        loop {
            if t == k {
                break;
            }
            if v[t] < box_dims[t] {
                v[t] += 1;
                break;
            }
            v[t] = 0;
            t += 1;
        }
        if t == k {
            break;
        }
    }
    out.sort_by(|(ha, wa), (hb, wb)| ha.cmp(hb).then_with(|| wb.cmp(wa)));
    Ok(out.into_iter().map(|(_, w)| w).collect())
}
