//! The A_r weight lattice in the μ-basis.
//!
//! A horizontal weight is a sequence of `r + 1` integers `c_1..c_{r+1}`, the
//! coefficients on the fundamental weights `μ_I`. Because `Σ μ_I = 0`, two
//! sequences that differ by a constant in every entry name the same weight;
//! equality, hashing and ordering all work on the canonical representative
//! (minimum coordinate zero). The raw representative is kept so that sum-zero
//! root vectors and sum-aligned orbit representatives survive intact.
//!
//! The metric is `(μ_I, μ_J) = δ_IJ − 1/(r+1)`, so that
//! `(a, b) = Σ a_I b_I − (Σ a_I)(Σ b_I)/(r+1)`. Internally everything is kept
//! in integers by scaling with `r + 1`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Sub};

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_RANK: usize = 8;

/// Rank `r` of A_r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Rank(usize);

impl Rank {
    pub fn new(r: usize) -> Result<Self> {
        Self::with_max(r, DEFAULT_MAX_RANK)
    }

    pub fn with_max(r: usize, max: usize) -> Result<Self> {
        if r == 0 || r > max {
            return Err(Error::RankOutOfRange { rank: r, max });
        }
        Ok(Rank(r))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Number of μ-coordinates, `r + 1`.
    pub fn coords(self) -> usize {
        self.0 + 1
    }
}

impl TryFrom<usize> for Rank {
    type Error = Error;

    fn try_from(r: usize) -> Result<Self> {
        Rank::new(r)
    }
}

impl From<Rank> for usize {
    fn from(r: Rank) -> usize {
        r.0
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A weight of A_r written on the μ-basis, up to the all-ones shift.
#[derive(Debug, Clone)]
pub struct HorizontalWeight {
    coords: Vec<i64>,
}

impl HorizontalWeight {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        Rank::with_max(coords.len().saturating_sub(1), usize::MAX)?;
        Ok(HorizontalWeight { coords })
    }

    pub(crate) fn from_vec(coords: Vec<i64>) -> Self {
        debug_assert!(coords.len() >= 2);
        HorizontalWeight { coords }
    }

    pub fn zero(rank: Rank) -> Self {
        Self::from_vec(vec![0; rank.coords()])
    }

    /// The fundamental weight `μ_I` (1-based).
    pub fn mu(rank: Rank, index: usize) -> Self {
        assert!((1..=rank.coords()).contains(&index));
        let mut c = vec![0; rank.coords()];
        c[index - 1] = 1;
        Self::from_vec(c)
    }

    /// The simple root `α_i = μ_i − μ_{i+1}` (1-based).
    pub fn simple_root(rank: Rank, index: usize) -> Self {
        assert!((1..=rank.get()).contains(&index));
        let mut c = vec![0; rank.coords()];
        c[index - 1] = 1;
        c[index] = -1;
        Self::from_vec(c)
    }

    /// The fundamental dominant weight `λ_i = μ_1 + … + μ_i`; `λ_0` is zero.
    pub fn fundamental(rank: Rank, index: usize) -> Self {
        assert!(index <= rank.get());
        let c = (0..rank.coords()).map(|j| i64::from(j < index)).collect();
        Self::from_vec(c)
    }

    pub fn rank(&self) -> Rank {
        Rank(self.coords.len() - 1)
    }

    /// The raw representative as stored.
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn sum(&self) -> i64 {
        self.coords.iter().sum()
    }

    fn min(&self) -> i64 {
        *self.coords.iter().min().expect("at least two coordinates")
    }

    pub fn canonical(&self) -> HorizontalWeight {
        self.shifted(-self.min())
    }

    pub fn canonical_coords(&self) -> Vec<i64> {
        let m = self.min();
        self.coords.iter().map(|c| c - m).collect()
    }

    /// Adds `t` to every coordinate; the weight itself is unchanged.
    pub fn shifted(&self, t: i64) -> HorizontalWeight {
        Self::from_vec(self.coords.iter().map(|c| c + t).collect())
    }

    /// Representative whose coordinate sum is `target`, if one exists.
    pub fn aligned_to(&self, target: i64) -> Option<Vec<i64>> {
        let diff = target - self.sum();
        let m = self.coords.len() as i64;
        if diff % m != 0 {
            return None;
        }
        let t = diff / m;
        Some(self.coords.iter().map(|c| c + t).collect())
    }

    /// Weakly decreasing coordinates, i.e. non-negative Dynkin labels.
    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    /// Strictly decreasing coordinates, i.e. all Dynkin labels positive.
    pub fn is_regular_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] > w[1])
    }

    pub fn dynkin_labels(&self) -> DynkinLabels {
        DynkinLabels {
            labels: self.coords.windows(2).map(|w| w[0] - w[1]).collect(),
        }
    }

    pub fn partition(&self) -> Result<PartitionView> {
        if !self.is_dominant() {
            return Err(Error::NotDominant(self.coords.clone()));
        }
        let parts: Vec<i64> = self
            .canonical_coords()
            .into_iter()
            .filter(|&c| c > 0)
            .collect();
        let height = parts.iter().sum();
        Ok(PartitionView { parts, height })
    }

    pub fn height(&self) -> Result<i64> {
        self.partition().map(|p| p.height)
    }

    /// `(r + 1) · (self, self)`, always an integer.
    pub fn scaled_norm(&self) -> i64 {
        scaled_dot(&self.coords, &self.coords)
    }

    pub fn norm(&self) -> Rational64 {
        Rational64::new(self.scaled_norm(), self.coords.len() as i64)
    }

    pub fn scale(&self, k: i64) -> HorizontalWeight {
        Self::from_vec(self.coords.iter().map(|c| c * k).collect())
    }

    fn check_rank(&self, other: &HorizontalWeight) -> Result<()> {
        if self.coords.len() != other.coords.len() {
            return Err(Error::RankMismatch {
                left: self.coords.len() - 1,
                right: other.coords.len() - 1,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &HorizontalWeight) -> Result<HorizontalWeight> {
        self.check_rank(other)?;
        Ok(self + other)
    }
}

/// `(r + 1) · (a, b)` for equal-length coordinate slices.
pub(crate) fn scaled_dot(a: &[i64], b: &[i64]) -> i64 {
    let m = a.len() as i64;
    let dot: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    m * dot - a.iter().sum::<i64>() * b.iter().sum::<i64>()
}

pub fn inner_product(a: &HorizontalWeight, b: &HorizontalWeight) -> Result<Rational64> {
    scaled_inner_product(a, b).map(|s| Rational64::new(s, a.coords.len() as i64))
}

/// `(r + 1) · (a, b)`.
pub fn scaled_inner_product(a: &HorizontalWeight, b: &HorizontalWeight) -> Result<i64> {
    a.check_rank(b)?;
    Ok(scaled_dot(&a.coords, &b.coords))
}

impl<'a> Add<&'a HorizontalWeight> for &'a HorizontalWeight {
    type Output = HorizontalWeight;

    fn add(self, rhs: &'a HorizontalWeight) -> HorizontalWeight {
        assert_eq!(self.coords.len(), rhs.coords.len(), "rank mismatch");
        HorizontalWeight::from_vec(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl<'a> Sub<&'a HorizontalWeight> for &'a HorizontalWeight {
    type Output = HorizontalWeight;

    fn sub(self, rhs: &'a HorizontalWeight) -> HorizontalWeight {
        assert_eq!(self.coords.len(), rhs.coords.len(), "rank mismatch");
        HorizontalWeight::from_vec(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl PartialEq for HorizontalWeight {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HorizontalWeight {}

impl Ord for HorizontalWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        let (ma, mb) = (self.min(), other.min());
        self.coords.len().cmp(&other.coords.len()).then_with(|| {
            self.coords
                .iter()
                .map(|c| c - ma)
                .cmp(other.coords.iter().map(|c| c - mb))
        })
    }
}

impl PartialOrd for HorizontalWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for HorizontalWeight {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let m = self.min();
        self.coords.len().hash(state);
        for c in &self.coords {
            (c - m).hash(state);
        }
    }
}

impl fmt::Display for HorizontalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.canonical_coords())
    }
}

/// Serialized as the JSON array of canonical coordinates.
impl Serialize for HorizontalWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.canonical_coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for HorizontalWeight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<i64>::deserialize(d)?;
        HorizontalWeight::new(coords).map_err(serde::de::Error::custom)
    }
}

/// Coefficients `a_1..a_r` on the fundamental dominant weights `λ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DynkinLabels {
    labels: Vec<i64>,
}

impl DynkinLabels {
    pub fn new(labels: Vec<i64>) -> Result<Self> {
        Rank::with_max(labels.len(), usize::MAX)?;
        Ok(DynkinLabels { labels })
    }

    pub fn zero(rank: Rank) -> Self {
        DynkinLabels {
            labels: vec![0; rank.get()],
        }
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn rank(&self) -> Rank {
        Rank(self.labels.len())
    }

    pub fn is_dominant(&self) -> bool {
        self.labels.iter().all(|&a| a >= 0)
    }

    /// Canonical coordinates: `c_{r+1} = 0` and `c_i = a_i + c_{i+1}`.
    pub fn to_weight(&self) -> HorizontalWeight {
        let mut coords = vec![0; self.labels.len() + 1];
        for i in (0..self.labels.len()).rev() {
            coords[i] = coords[i + 1] + self.labels[i];
        }
        HorizontalWeight::from_vec(coords)
    }

    /// Labels in reverse order (the A_r diagram automorphism).
    pub fn reversed(&self) -> DynkinLabels {
        DynkinLabels {
            labels: self.labels.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for DynkinLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.labels)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// Partition view of a dominant weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionView {
    pub parts: Vec<i64>,
    pub height: i64,
}

/// ρ, with canonical coordinates `(r, r−1, …, 1, 0)`.
pub fn weyl_vector(rank: Rank) -> HorizontalWeight {
    let r = rank.get() as i64;
    HorizontalWeight::from_vec((0..=r).rev().collect())
}

/// All root-lattice vectors of squared length `2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootShell {
    pub n: u64,
    /// Sum-zero representatives, lexicographically sorted.
    pub members: Vec<HorizontalWeight>,
}

impl RootShell {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn root_shell(rank: Rank, n: u64) -> RootShell {
    let target = 2 * n as i64;
    let mut members = Vec::new();
    let mut buf = Vec::with_capacity(rank.coords());
    shell_search(
        rank.coords(),
        target,
        isqrt(target),
        0,
        0,
        &mut buf,
        &mut |v| members.push(HorizontalWeight::from_vec(v.to_vec())),
    );
    // The search emits in lexicographic order of the raw sum-zero vectors.
    RootShell { n, members }
}

/// Visits every sum-zero integer vector of length `len` with squared length `target`.
pub(crate) fn for_each_shell_vector(rank: Rank, n: u64, mut visit: impl FnMut(&[i64])) {
    let target = 2 * n as i64;
    let mut buf = Vec::with_capacity(rank.coords());
    shell_search(
        rank.coords(),
        target,
        isqrt(target),
        0,
        0,
        &mut buf,
        &mut visit,
    );
}

fn shell_search(
    len: usize,
    target: i64,
    bound: i64,
    sum: i64,
    norm: i64,
    buf: &mut Vec<i64>,
    visit: &mut dyn FnMut(&[i64]),
) {
    let left = len - buf.len();
    if left == 1 {
        let last = -sum;
        if norm + last * last == target {
            buf.push(last);
            visit(buf);
            buf.pop();
        }
        return;
    }
    for c in -bound..=bound {
        let norm2 = norm + c * c;
        if norm2 > target {
            continue;
        }
        // The remaining `left - 1` entries must cancel the running sum; by
        // Cauchy–Schwarz that costs at least sum² / (left − 1) in norm.
        let sum2 = sum + c;
        let rest = (left - 1) as i64;
        if sum2 * sum2 > rest * (target - norm2) {
            continue;
        }
        buf.push(c);
        shell_search(len, target, bound, sum2, norm2, buf, visit);
        buf.pop();
    }
}

pub(crate) fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as i64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}
