//! Reference A_4 data used as golden values.
#![allow(dead_code)]

use affine_chars::{AffineDominant, DynkinLabels, QSeries, Rank};
use num_bigint::BigInt;

pub fn rank(r: usize) -> Rank {
    Rank::new(r).unwrap()
}

pub fn dom(level: i64, labels: &[i64]) -> AffineDominant {
    AffineDominant::new(level, DynkinLabels::new(labels.to_vec()).unwrap()).unwrap()
}

pub fn ints(q: &QSeries) -> Vec<i64> {
    q.coeffs()
        .iter()
        .map(|c| i64::try_from(c).unwrap())
        .collect()
}

pub fn series(coeffs: &[i64]) -> QSeries {
    QSeries::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

/// Dense coefficients `q^0..q^top` from sparse `(power, coefficient)` pairs.
pub fn dense(terms: &[(usize, i64)], top: usize) -> Vec<i64> {
    let mut out = vec![0; top + 1];
    for &(p, c) in terms {
        out[p] = c;
    }
    out
}

pub const THETA_A4: [i64; 9] = [1, 20, 30, 60, 60, 120, 40, 180, 150];

pub const CHI_A4_BASIC: [i64; 8] = [1, 24, 124, 500, 1625, 4752, 12524, 31000];

/// P(ρ̃, 8) for A_4 as (labels of μ⁺ − ρ, depth), in reference order.
pub const P_RHO_TILDE: [([i64; 4], u32); 32] = [
    ([0, 0, 0, 0], 0),
    ([1, 0, 0, 1], 1),
    ([2, 0, 1, 0], 2),
    ([0, 1, 0, 2], 2),
    ([3, 1, 0, 0], 3),
    ([1, 1, 1, 1], 3),
    ([0, 0, 1, 3], 3),
    ([5, 0, 0, 0], 4),
    ([2, 2, 0, 1], 4),
    ([1, 0, 2, 2], 4),
    ([0, 2, 2, 0], 4),
    ([0, 0, 0, 5], 4),
    ([1, 3, 1, 0], 5),
    ([0, 1, 3, 1], 5),
    ([1, 0, 0, 6], 6),
    ([0, 5, 0, 0], 6),
    ([2, 0, 2, 3], 6),
    ([3, 2, 0, 2], 6),
    ([6, 0, 0, 1], 6),
    ([0, 0, 5, 0], 6),
    ([2, 0, 1, 5], 7),
    ([3, 1, 1, 3], 7),
    ([1, 1, 3, 2], 7),
    ([5, 1, 0, 2], 7),
    ([2, 3, 1, 1], 7),
    ([3, 1, 0, 5], 8),
    ([1, 5, 0, 1], 8),
    ([0, 1, 0, 7], 8),
    ([5, 0, 1, 3], 8),
    ([2, 2, 2, 2], 8),
    ([1, 0, 5, 1], 8),
    ([7, 0, 1, 0], 8),
];

/// P(ρ̃ + Λ_0, 8) for A_4.
pub const P_RHO_TILDE_BASIC: [([i64; 4], u32); 23] = [
    ([0, 0, 0, 0], 0),
    ([2, 0, 0, 2], 2),
    ([3, 0, 1, 1], 3),
    ([1, 1, 0, 3], 3),
    ([4, 1, 0, 1], 4),
    ([2, 1, 1, 2], 4),
    ([1, 0, 1, 4], 4),
    ([6, 0, 0, 1], 5),
    ([3, 2, 0, 2], 5),
    ([2, 0, 2, 3], 5),
    ([1, 0, 0, 6], 5),
    ([0, 3, 3, 0], 6),
    ([1, 4, 2, 0], 7),
    ([0, 2, 4, 1], 7),
    ([2, 0, 0, 7], 7),
    ([3, 0, 2, 4], 7),
    ([4, 2, 0, 3], 7),
    ([7, 0, 0, 2], 7),
    ([0, 6, 1, 0], 8),
    ([0, 1, 6, 0], 8),
    ([3, 0, 1, 6], 8),
    ([4, 1, 1, 4], 8),
    ([6, 1, 0, 3], 8),
];

pub const T1_VACUUM: [(usize, i64); 8] = [
    (1, -24),
    (2, 252),
    (3, -1472),
    (4, 3654),
    (6, -19096),
    (7, 40128),
    (8, -34398),
    (9, 10976),
];

pub const T2_VACUUM: [(usize, i64); 13] = [
    (4, 1176),
    (5, -6048),
    (6, 2352),
    (7, 44352),
    (8, -83997),
    (9, -78848),
    (10, 360756),
    (11, -157248),
    (12, -530222),
    (13, 598752),
    (14, 123552),
    (15, -448448),
    (16, 173901),
];

pub const T1_BASIC: [(usize, i64); 8] = [
    (2, -200),
    (3, 2100),
    (4, -9625),
    (5, 19096),
    (7, -70200),
    (8, 128625),
    (9, -98000),
    (10, 28224),
];

pub const T2_BASIC: [(usize, i64); 13] = [
    (6, 9000),
    (7, -46200),
    (8, 23100),
    (9, 286000),
    (10, -530222),
    (11, -409500),
    (12, 1851850),
    (13, -754600),
    (14, -2281500),
    (15, 2354352),
    (16, 477750),
    (17, -1528800),
    (18, 548800),
];

/// (weight, shell, sparse terms, top power)
pub type ReferenceT = (AffineDominant, u64, &'static [(usize, i64)], usize);

pub fn reference_t_polynomials() -> [ReferenceT; 4] {
    let vacuum = AffineDominant::zero(rank(4));
    let basic = AffineDominant::basic(rank(4));
    [
        (vacuum.clone(), 1, &T1_VACUUM, 9),
        (vacuum, 2, &T2_VACUUM, 16),
        (basic.clone(), 1, &T1_BASIC, 10),
        (basic, 2, &T2_BASIC, 18),
    ]
}
