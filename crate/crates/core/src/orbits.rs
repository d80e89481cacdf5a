//! Permutation weights of shifted affine Weyl orbits.
//!
//! An affine dominant weight `Λ⁺ = kΛ_0 + λ⁺` is shifted by the affine Weyl
//! vector `ρ̃` (level `r + 1`, horizontal part ρ). The orbit of `ρ̃ + Λ⁺`
//! meets the horizontal dominant chamber in finitely many weights at each
//! depth `M`. Those are the permutation weights: a strictly dominant `μ⁺`,
//! its depth, and the signature of the Weyl element that produced it.
//!
//! Two independent enumerators are provided:
//!
//! * [`enumerate_translations`] walks root-lattice translations `k̃α`, sorts
//!   `λ̃ + k̃α` into the dominant chamber and reads the sign off the sort.
//! * [`compose_lemma`] splits `ρ̃ + Λ⁺` into level-one fundamental weights,
//!   adds up dominant members of their (unshifted) orbits, and keeps the sums
//!   whose norm gives back the summed depth. Signs come from residues of the
//!   coordinates mod `k̃`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{
    for_each_shell_vector, isqrt, weyl_vector, DynkinLabels, HorizontalWeight, Rank,
};

/// `kΛ_0 + λ⁺` with `λ⁺` dominant and `h(λ⁺) ≤ k`.
///
/// Level zero is allowed; its only weight is `0⁺`, whose shifted orbit is the
/// one of `ρ̃` itself (the character denominator).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineDominant {
    level: i64,
    lambda_plus: DynkinLabels,
}

impl AffineDominant {
    pub fn new(level: i64, lambda_plus: DynkinLabels) -> Result<Self> {
        if !lambda_plus.is_dominant() {
            return Err(Error::NegativeLabel(lambda_plus.labels().to_vec()));
        }
        let height = lambda_plus.to_weight().height()?;
        if level < 0 || height > level {
            return Err(Error::HeightExceedsLevel { height, level });
        }
        Ok(AffineDominant { level, lambda_plus })
    }

    /// `0⁺`: level 0, trivial horizontal part.
    pub fn zero(rank: Rank) -> Self {
        AffineDominant {
            level: 0,
            lambda_plus: DynkinLabels::zero(rank),
        }
    }

    /// The basic weight `Λ_0`.
    pub fn basic(rank: Rank) -> Self {
        AffineDominant {
            level: 1,
            lambda_plus: DynkinLabels::zero(rank),
        }
    }

    pub fn rank(&self) -> Rank {
        self.lambda_plus.rank()
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn lambda_plus(&self) -> &DynkinLabels {
        &self.lambda_plus
    }

    pub fn is_basic(&self) -> bool {
        self.level == 1 && self.lambda_plus.labels().iter().all(|&a| a == 0)
    }

    /// Multiplicities of `Λ_0, Λ_1, …, Λ_r` in `ρ̃ + Λ⁺`.
    pub fn shifted_fundamental_multiplicities(&self) -> Vec<i64> {
        let labels = self.lambda_plus.labels();
        let mut out = vec![self.level + 1 - labels.iter().sum::<i64>()];
        out.extend(labels.iter().map(|a| a + 1));
        out
    }

    /// All affine dominant weights of the given level and rank.
    pub fn all_at_level(rank: Rank, level: i64) -> Vec<AffineDominant> {
        let mut out = Vec::new();
        let mut labels = vec![0i64; rank.get()];
        loop {
            let dl = DynkinLabels::new(labels.clone()).expect("rank ≥ 1");
            if let Ok(dom) = AffineDominant::new(level, dl) {
                out.push(dom);
            }
            // odometer over labels in 0..=level
            let mut i = 0;
            while i < labels.len() && labels[i] == level {
                labels[i] = 0;
                i += 1;
            }
            if i == labels.len() {
                break;
            }
            labels[i] += 1;
        }
        out
    }
}

impl fmt::Display for AffineDominant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A{}(1) k={} λ⁺={}",
            self.rank(),
            self.level,
            self.lambda_plus
        )
    }
}

/// The shifted weight `ρ̃ + Λ⁺` that an orbit enumeration works with.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftedOrbitSpec {
    k_tilde: i64,
    lambda_tilde: HorizontalWeight,
    sum_ref: i64,
}

pub fn make_shifted_spec(dom: &AffineDominant) -> ShiftedOrbitSpec {
    let rank = dom.rank();
    let lambda_tilde = &weyl_vector(rank) + &dom.lambda_plus.to_weight();
    let lambda_tilde = lambda_tilde.canonical();
    let spec = ShiftedOrbitSpec {
        k_tilde: dom.level + rank.coords() as i64,
        sum_ref: lambda_tilde.sum(),
        lambda_tilde,
    };
    debug_assert!(spec.lambda_tilde.is_regular_dominant());
    debug_assert!(spec.lambda_tilde.coords()[0] < spec.k_tilde);
    spec
}

impl ShiftedOrbitSpec {
    pub fn k_tilde(&self) -> i64 {
        self.k_tilde
    }

    pub fn lambda_tilde(&self) -> &HorizontalWeight {
        &self.lambda_tilde
    }

    pub fn sum_ref(&self) -> i64 {
        self.sum_ref
    }

    pub fn rank(&self) -> Rank {
        self.lambda_tilde.rank()
    }

    fn check_dominant(&self, mu: &HorizontalWeight) -> Result<()> {
        if mu.coords().len() != self.rank().coords() {
            return Err(Error::RankMismatch {
                left: mu.rank().get(),
                right: self.rank().get(),
            });
        }
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.coords().to_vec()));
        }
        Ok(())
    }

    fn aligned(&self, mu: &HorizontalWeight) -> Result<Vec<i64>> {
        mu.aligned_to(self.sum_ref)
            .ok_or_else(|| Error::WrongCongruenceClass(mu.canonical_coords()))
    }

    fn residues(&self, coords: &[i64]) -> Vec<i64> {
        coords.iter().map(|c| c.rem_euclid(self.k_tilde)).collect()
    }

    /// Depth from the norm condition `(μ⁺,μ⁺) − (λ̃,λ̃) = 2k̃M`, provided the
    /// weight really lies on the orbit.
    pub fn depth_of(&self, mu: &HorizontalWeight) -> Result<Option<u32>> {
        self.check_dominant(mu)?;
        let Some(m) = self.norm_condition_depth(mu) else {
            return Ok(None);
        };
        match self.is_permutation_weight(mu) {
            Ok(true) => Ok(Some(m)),
            Ok(false) | Err(Error::WrongCongruenceClass(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// The norm condition alone: `Some(M)` when `M` is a non-negative integer.
    pub fn norm_condition_depth(&self, mu: &HorizontalWeight) -> Option<u32> {
        let diff = mu.scaled_norm() - self.lambda_tilde.scaled_norm();
        let denom = 2 * self.k_tilde * self.rank().coords() as i64;
        (diff >= 0 && diff % denom == 0).then(|| (diff / denom) as u32)
    }

    /// Residue-index signature of a dominant weight on this orbit.
    pub fn signature(&self, mu: &HorizontalWeight) -> Result<i8> {
        self.check_dominant(mu)?;
        let aligned = self.aligned(mu)?;
        Ok(signature_index(&self.residues(&aligned)))
    }

    /// True iff the sum-aligned coordinates reduce mod `k̃` to the same
    /// multiset as those of `λ̃`.
    pub fn is_permutation_weight(&self, mu: &HorizontalWeight) -> Result<bool> {
        self.check_dominant(mu)?;
        let mut got = self.residues(&self.aligned(mu)?);
        let mut want = self.residues(self.lambda_tilde.coords());
        got.sort_unstable();
        want.sort_unstable();
        Ok(got == want)
    }

    /// Depth of the orbit element reached by translating with `k̃α`:
    /// `(λ̃,α) + k̃(α,α)/2` for a sum-zero `α`.
    fn translation_depth(&self, alpha: &[i64], half_norm: u64) -> i64 {
        let dot: i64 = self
            .lambda_tilde
            .coords()
            .iter()
            .zip(alpha)
            .map(|(a, b)| a * b)
            .sum();
        dot + self.k_tilde * half_norm as i64
    }

    /// True once no shell `n' ≥ n` can reach depth `≤ bound`.
    ///
    /// Uses `depth ≥ k̃n − √(2n(λ̃,λ̃))`, which increases past its minimum at
    /// `n = (λ̃,λ̃)/(2k̃²)`.
    fn shells_exhausted(&self, n: u64, bound: i64) -> bool {
        let m = self.rank().coords() as i128;
        let scaled = self.lambda_tilde.scaled_norm() as i128;
        let k = self.k_tilde as i128;
        let n = n as i128;
        let past_minimum = 2 * n * k * k * m >= scaled;
        let excess = k * n - bound as i128;
        past_minimum && excess > 0 && m * excess * excess > 2 * n * scaled
    }

    /// Smallest translation depth over shells `n ≥ from`.
    pub fn min_depth_from_shell(&self, from: u64) -> i64 {
        let rank = self.rank();
        let mut best = i64::MAX;
        let mut n = from;
        loop {
            if best != i64::MAX && self.shells_exhausted(n, best) {
                break;
            }
            for_each_shell_vector(rank, n, |alpha| {
                best = best.min(self.translation_depth(alpha, n));
            });
            n += 1;
        }
        best
    }

    /// Smallest translation depth within shell `n`, if the shell is non-empty.
    pub fn min_depth_in_shell(&self, n: u64) -> Option<i64> {
        let mut best = None::<i64>;
        for_each_shell_vector(self.rank(), n, |alpha| {
            let d = self.translation_depth(alpha, n);
            best = Some(best.map_or(d, |b| b.min(d)));
        });
        best
    }

    /// Visits every orbit element `λ̃ + k̃α` for `α ∈ Γ_n`, as
    /// `(depth, sorted coordinates, sort sign)`.
    pub(crate) fn for_each_in_shell(&self, n: u64, mut visit: impl FnMut(i64, Vec<i64>, i8)) {
        let k = self.k_tilde;
        for_each_shell_vector(self.rank(), n, |alpha| {
            let depth = self.translation_depth(alpha, n);
            let v: Vec<i64> = self
                .lambda_tilde
                .coords()
                .iter()
                .zip(alpha)
                .map(|(l, a)| l + k * a)
                .collect();
            let (sorted, sign) = sort_descending_with_sign(v);
            visit(depth, sorted, sign);
        });
    }
}

/// Completely antisymmetric index, `+1` on strictly decreasing sequences and
/// `0` whenever two entries coincide.
pub fn signature_index(s: &[i64]) -> i8 {
    let mut sign = 1i8;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            match s[i].cmp(&s[j]) {
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Less => sign = -sign,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    sign
}

/// Sorts descending; the sign is the parity of the sort (0 on ties).
pub(crate) fn sort_descending_with_sign(v: Vec<i64>) -> (Vec<i64>, i8) {
    let sign = signature_index(&v);
    let mut sorted = v;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    (sorted, sign)
}

/// A dominant member `μ⁺` of a shifted orbit, with depth and signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationWeight {
    mu_plus: HorizontalWeight,
    depth: u32,
    sign: i8,
    lambda_labels: DynkinLabels,
}

impl PermutationWeight {
    fn new(mu_plus: HorizontalWeight, depth: u32, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        let lambda_labels = DynkinLabels::new(
            mu_plus
                .dynkin_labels()
                .labels()
                .iter()
                .map(|a| a - 1)
                .collect(),
        )
        .expect("rank ≥ 1");
        PermutationWeight {
            mu_plus: mu_plus.canonical(),
            depth,
            sign,
            lambda_labels,
        }
    }

    pub fn mu_plus(&self) -> &HorizontalWeight {
        &self.mu_plus
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// Dynkin labels of `μ⁺ − ρ`.
    pub fn lambda_labels(&self) -> &DynkinLabels {
        &self.lambda_labels
    }

    pub fn record(&self) -> PermutationWeightRecord {
        PermutationWeightRecord {
            labels: self.lambda_labels.labels().to_vec(),
            depth: self.depth,
            sign: self.sign,
        }
    }

    fn sort_key(&self) -> (u32, std::cmp::Reverse<&[i64]>) {
        (self.depth, std::cmp::Reverse(self.lambda_labels.labels()))
    }
}

/// `(n_1,…,n_r)_M`
impl fmt::Display for PermutationWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.lambda_labels, self.depth)
    }
}

impl Serialize for PermutationWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.record().serialize(s)
    }
}

/// JSON form `{"labels":[n1,...,nr],"depth":M,"sign":1|-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PermutationWeightRecord {
    pub labels: Vec<i64>,
    pub depth: u32,
    pub sign: i8,
}

/// All permutation weights of one shifted orbit up to a depth cutoff, sorted
/// by depth and then by descending `μ⁺ − ρ` labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationWeightSet {
    spec: ShiftedOrbitSpec,
    max_depth: u32,
    members: Vec<PermutationWeight>,
}

impl PermutationWeightSet {
    fn from_members(
        spec: ShiftedOrbitSpec,
        max_depth: u32,
        mut members: Vec<PermutationWeight>,
    ) -> Self {
        members.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        members.dedup();
        PermutationWeightSet {
            spec,
            max_depth,
            members,
        }
    }

    pub fn spec(&self) -> &ShiftedOrbitSpec {
        &self.spec
    }

    pub fn max_depth(&self) -> u32 {
        self.max_depth
    }

    pub fn members(&self) -> &[PermutationWeight] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn at_depth(&self, depth: u32) -> impl Iterator<Item = &PermutationWeight> {
        self.members.iter().filter(move |m| m.depth == depth)
    }

    /// The subset with depth `≤ max_depth`.
    pub fn restrict(&self, max_depth: u32) -> PermutationWeightSet {
        PermutationWeightSet {
            spec: self.spec.clone(),
            max_depth: max_depth.min(self.max_depth),
            members: self
                .members
                .iter()
                .filter(|m| m.depth <= max_depth)
                .cloned()
                .collect(),
        }
    }

    pub fn records(&self) -> Vec<PermutationWeightRecord> {
        self.members.iter().map(PermutationWeight::record).collect()
    }

    /// Space-separated `(n_1,…,n_r)_M` entries.
    pub fn notation(&self) -> String {
        self.members
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Serialize for PermutationWeightSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

pub fn enumerate_translations(spec: &ShiftedOrbitSpec, max_depth: u32) -> PermutationWeightSet {
    let bound = i64::from(max_depth);
    let mut members = Vec::new();
    let mut n = 0u64;
    while !spec.shells_exhausted(n, bound) {
        spec.for_each_in_shell(n, |depth, sorted, sign| {
            if depth <= bound {
                debug_assert!(depth >= 0 && sign != 0);
                members.push(PermutationWeight::new(
                    HorizontalWeight::from_vec(sorted),
                    depth as u32,
                    sign,
                ));
            }
        });
        n += 1;
    }
    PermutationWeightSet::from_members(spec.clone(), max_depth, members)
}

/// A dominant weight on the unshifted level-one orbit of some `Λ_ν`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelOneWeight {
    pub mu_plus: HorizontalWeight,
    pub depth: u32,
}

/// Dominant `μ⁺ ≡ λ_ν` modulo the root lattice with
/// `(μ⁺,μ⁺) − (λ_ν,λ_ν) = 2M`, `M ≤ max_depth`. At level one the norm condition
/// decides orbit membership, so no signature is attached.
pub fn enumerate_fundamental(nu: usize, rank: Rank, max_depth: u32) -> Vec<LevelOneWeight> {
    assert!(nu <= rank.get(), "ν = {nu} out of range for rank {rank}");
    let m = rank.coords() as i64;
    let base = HorizontalWeight::fundamental(rank, nu).scaled_norm();
    let bound = base + 2 * m * i64::from(max_depth);
    // (μ,μ) ≥ c_1²/2 when the smallest coordinate is 0
    let top = isqrt(2 * bound / m + 1);
    let mut out = Vec::new();
    for coords in weakly_decreasing(rank.coords(), top) {
        if coords.iter().sum::<i64>().rem_euclid(m) != nu as i64 {
            continue;
        }
        let w = HorizontalWeight::from_vec(coords);
        let diff = w.scaled_norm() - base;
        if diff < 0 || diff > bound - base || diff % (2 * m) != 0 {
            continue;
        }
        out.push(LevelOneWeight {
            mu_plus: w,
            depth: (diff / (2 * m)) as u32,
        });
    }
    out.sort_by(|a, b| {
        (a.depth, std::cmp::Reverse(a.mu_plus.coords()))
            .cmp(&(b.depth, std::cmp::Reverse(b.mu_plus.coords())))
    });
    out
}

/// Weakly decreasing sequences of the given length with entries in
/// `0..=top` and last entry 0.
fn weakly_decreasing(len: usize, top: i64) -> Vec<Vec<i64>> {
    fn rec(len: usize, cap: i64, buf: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if buf.len() == len - 1 {
            let mut v = buf.clone();
            v.push(0);
            out.push(v);
            return;
        }
        for c in 0..=cap {
            buf.push(c);
            rec(len, c, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, top, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Permutation weights of `ρ̃ + Λ⁺` assembled from level-one pieces.
///
/// `ρ̃ + Λ⁺` is written as a sum of fundamental `Λ_ν`; a candidate `μ⁺` is a
/// sum `θ_1 + … + θ_n` of dominant members of those level-one orbits with
/// depths `M_j`, and it is kept iff it lies on the orbit with depth exactly
/// `Σ M_j`. Partial sums are deduplicated as they are built.
pub fn compose_lemma(dom: &AffineDominant, max_depth: u32) -> PermutationWeightSet {
    let spec = make_shifted_spec(dom);
    let rank = dom.rank();
    let multiplicities = dom.shifted_fundamental_multiplicities();

    let mut states: HashSet<(Vec<i64>, u32)> = HashSet::new();
    states.insert((vec![0; rank.coords()], 0));
    for (nu, &mult) in multiplicities.iter().enumerate() {
        if mult == 0 {
            continue;
        }
        let pieces = enumerate_fundamental(nu, rank, max_depth);
        for _ in 0..mult {
            let mut next = HashSet::with_capacity(states.len() * 2);
            for (coords, depth) in &states {
                for piece in &pieces {
                    let d = depth + piece.depth;
                    if d > max_depth {
                        continue;
                    }
                    let sum: Vec<i64> = coords
                        .iter()
                        .zip(piece.mu_plus.coords())
                        .map(|(a, b)| a + b)
                        .collect();
                    let min = *sum.iter().min().expect("non-empty");
                    next.insert((sum.into_iter().map(|c| c - min).collect(), d));
                }
            }
            states = next;
        }
    }

    let mut members = Vec::new();
    let mut by_weight: BTreeMap<HorizontalWeight, u32> = BTreeMap::new();
    for (coords, depth) in states {
        let mu = HorizontalWeight::from_vec(coords);
        if !mu.is_regular_dominant() {
            continue;
        }
        if spec.depth_of(&mu).expect("dominant, matching rank") == Some(depth) {
            by_weight.insert(mu, depth);
        }
    }
    for (mu, depth) in by_weight {
        let sign = spec
            .signature(&mu)
            .expect("orbit member is in the right class");
        members.push(PermutationWeight::new(mu, depth, sign));
    }
    PermutationWeightSet::from_members(spec, max_depth, members)
}

/// Dominant weights in the orbit's congruence class that satisfy the norm
/// condition with `M ≤ max_depth` but are not on the orbit.
pub fn norm_condition_impostors(
    spec: &ShiftedOrbitSpec,
    max_depth: u32,
) -> Vec<(HorizontalWeight, u32)> {
    let rank = spec.rank();
    let m = rank.coords() as i64;
    let bound = spec.lambda_tilde.scaled_norm() + 2 * spec.k_tilde * m * i64::from(max_depth);
    let top = isqrt(2 * bound / m + 1);
    let mut out = Vec::new();
    for coords in weakly_decreasing(rank.coords(), top) {
        let mu = HorizontalWeight::from_vec(coords);
        if mu.aligned_to(spec.sum_ref).is_none() {
            continue;
        }
        let Some(depth) = spec.norm_condition_depth(&mu) else {
            continue;
        };
        if depth <= max_depth && !spec.is_permutation_weight(&mu).expect("aligned above") {
            out.push((mu, depth));
        }
    }
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    out
}
