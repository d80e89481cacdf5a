//! Schur-function layer: complete homogeneous symmetric functions, the
//! Jacobi–Trudi determinant, the alternant `det[u_i^{c_j}]`, and Weyl
//! dimensions. Everything is evaluated at exact rational points; no symbolic
//! polynomials are built.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{DynkinLabels, HorizontalWeight, Rank};

/// Values `u_I` of the formal exponentials `e^{μ_I}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationPoint {
    u: Vec<BigRational>,
}

impl EvaluationPoint {
    pub fn new(u: Vec<BigRational>) -> Result<Self> {
        Rank::with_max(u.len().saturating_sub(1), usize::MAX)?;
        if u.iter().any(Zero::is_zero) {
            return Err(Error::ZeroEvaluationEntry);
        }
        Ok(EvaluationPoint { u })
    }

    pub fn from_integers(u: &[i64]) -> Result<Self> {
        Self::new(
            u.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    /// The homogeneous point `(1, …, 1)`.
    pub fn ones(rank: Rank) -> Self {
        EvaluationPoint {
            u: vec![BigRational::one(); rank.coords()],
        }
    }

    pub fn values(&self) -> &[BigRational] {
        &self.u
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    pub fn has_distinct_entries(&self) -> bool {
        self.u
            .iter()
            .enumerate()
            .all(|(i, a)| self.u[i + 1..].iter().all(|b| a != b))
    }

    /// Power sum `p_i = Σ_I u_I^i`.
    pub fn power_sum(&self, i: u32) -> BigRational {
        self.u.iter().map(|x| Pow::pow(x, i)).sum()
    }
}

/// `S_0..S_N`, the complete homogeneous symmetric polynomials at a point.
#[derive(Debug, Clone)]
pub struct HomogeneousTable {
    values: Vec<BigRational>,
}

impl HomogeneousTable {
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    /// `S_q`, zero for negative `q`.
    pub fn get(&self, q: i64) -> BigRational {
        if q < 0 {
            return BigRational::zero();
        }
        self.values
            .get(q as usize)
            .cloned()
            .unwrap_or_else(|| panic!("S_{q} beyond table order {}", self.order()))
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

/// Newton recurrence `q·S_q = Σ_{i=1}^{q} p_i S_{q−i}`.
pub fn homogeneous_table(u: &EvaluationPoint, order: usize) -> HomogeneousTable {
    let power_sums: Vec<BigRational> = (1..=order as u32).map(|i| u.power_sum(i)).collect();
    let mut values = vec![BigRational::one()];
    for q in 1..=order {
        let acc: BigRational = (1..=q).map(|i| &power_sums[i - 1] * &values[q - i]).sum();
        values.push(acc / BigRational::from_integer(q.into()));
    }
    HomogeneousTable { values }
}

/// Exact determinant by Gaussian elimination.
pub(crate) fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&row| !m[row][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        let (top, below) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in below.iter_mut().filter(|row| !row[col].is_zero()) {
            let factor = &row[col] / &p;
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

fn jacobi_trudi(parts: &[i64], entry: impl Fn(i64) -> BigRational) -> BigRational {
    let s = parts.len();
    let matrix = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| entry(parts[i] - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(matrix)
}

/// The Jacobi–Trudi determinant `det[S_{q_i − i + j}]`.
///
/// `parts` need not be a partition; for other sequences the determinant
/// straightens to ± a partition Schur value, or to zero.
pub fn schur_value(parts: &[i64], u: &EvaluationPoint) -> Result<BigRational> {
    if parts.len() > u.len() {
        return Err(Error::TooManyParts {
            parts: parts.len(),
            vars: u.len(),
        });
    }
    let top = parts.iter().copied().max().unwrap_or(0) + parts.len() as i64;
    let table = homogeneous_table(u, top.max(0) as usize);
    Ok(jacobi_trudi(parts, |q| table.get(q)))
}

/// `det[u_i^{c_j}]` for exponents `c_1..c_{r+1}`.
///
/// Repeated exponents give equal columns and hence zero.
pub fn alternant(exponents: &[i64], u: &EvaluationPoint) -> Result<BigRational> {
    if exponents.len() != u.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            got: exponents.len(),
        });
    }
    let matrix = u
        .values()
        .iter()
        .map(|x| exponents.iter().map(|&c| Pow::pow(x, c as i32)).collect())
        .collect();
    Ok(determinant(matrix))
}

/// Alternant of the canonical coordinates of a weight.
pub fn weight_alternant(w: &HorizontalWeight, u: &EvaluationPoint) -> Result<BigRational> {
    alternant(&w.canonical_coords(), u)
}

fn check_labels(labels: &DynkinLabels) -> Result<()> {
    if !labels.is_dominant() {
        return Err(Error::NegativeLabel(labels.labels().to_vec()));
    }
    Ok(())
}

/// Weyl product formula `Π_{i<j} (c_i − c_j)/(j − i)` on the coordinates of
/// `λ + ρ`.
pub fn weyl_dimension(labels: &DynkinLabels) -> Result<BigInt> {
    check_labels(labels)?;
    let r = labels.labels().len();
    // shifted[i] = c_i(λ) + (r − i)
    let shifted: Vec<i64> = labels
        .to_weight()
        .coords()
        .iter()
        .enumerate()
        .map(|(i, c)| c + (r - i) as i64)
        .collect();
    Ok(dimension_of_regular(&shifted))
}

/// Dimension attached to strictly decreasing coordinates `λ + ρ`.
pub(crate) fn dimension_of_regular(shifted: &[i64]) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..shifted.len() {
        for j in i + 1..shifted.len() {
            num *= BigInt::from(shifted[i] - shifted[j]);
            den *= BigInt::from((j - i) as i64);
        }
    }
    num / den
}

/// The same dimension from the Jacobi–Trudi determinant at `u = (1, …, 1)`,
/// where `S_q = C(q + r, r)`.
pub fn weyl_dimension_jacobi_trudi(labels: &DynkinLabels) -> Result<BigInt> {
    check_labels(labels)?;
    let r = labels.labels().len() as i64;
    let parts = labels.to_weight().partition()?.parts;
    let value = jacobi_trudi(&parts, |q| {
        if q < 0 {
            BigRational::zero()
        } else {
            BigRational::from_integer(binomial(BigInt::from(q + r), BigInt::from(r)))
        }
    });
    debug_assert!(value.is_integer() && value.is_positive());
    Ok(value.to_integer())
}
