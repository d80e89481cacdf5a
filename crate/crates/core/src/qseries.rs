//! Truncated power series in `q` with exact coefficients.
//!
//! A `QSeries` of order `N` knows its coefficients of `q^0..q^N` and nothing
//! beyond. Binary operations take the smaller order of their operands.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{root_shell, Rank};

/// Coefficient ring of a [`QSeries`].
pub trait Coefficient:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + fmt::Display + FromStr
{
    /// Multiplicative inverse, when the element is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Coefficient for BigInt {
    fn unit_inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }
}

impl Coefficient for BigRational {
    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries<C = BigInt> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> QSeries<C> {
    /// Series known through `q^{coeffs.len() − 1}`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the q^0 coefficient"
        );
        QSeries { coeffs }
    }

    pub fn zero(trunc: usize) -> Self {
        QSeries {
            coeffs: vec![C::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        Self::monomial(C::one(), 0, trunc)
    }

    /// `c·q^power`, truncated at `trunc`.
    pub fn monomial(c: C, power: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if power <= trunc {
            s.coeffs[power] = c;
        }
        s
    }

    /// Highest known power of `q`.
    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `q^n`; `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }

    pub(crate) fn coeff_mut(&mut self, n: usize) -> Option<&mut C> {
        self.coeffs.get_mut(n)
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        let n = trunc.min(self.trunc());
        QSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let n = self.trunc().min(rhs.trunc());
        let inv = rhs.coeffs[0].unit_inverse().ok_or(Error::NonUnitConstant)?;
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.coeffs[i].clone();
            for j in 1..=i {
                acc = acc - rhs.coeffs[j].clone() * out[i - j].clone();
            }
            out.push(acc * inv.clone());
        }
        Ok(QSeries { coeffs: out })
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::one(self.trunc()).checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.trunc());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl<C: Coefficient> Add for &QSeries<C> {
    type Output = QSeries<C>;

    fn add(self, rhs: Self) -> QSeries<C> {
        let n = self.trunc().min(rhs.trunc());
        QSeries {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<C: Coefficient> Sub for &QSeries<C> {
    type Output = QSeries<C>;

    fn sub(self, rhs: Self) -> QSeries<C> {
        let n = self.trunc().min(rhs.trunc());
        QSeries {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<C: Coefficient> Mul for &QSeries<C> {
    type Output = QSeries<C>;

    fn mul(self, rhs: Self) -> QSeries<C> {
        let n = self.trunc().min(rhs.trunc());
        let mut coeffs = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                let term = a.clone() * b.clone();
                coeffs[i + j] = std::mem::replace(&mut coeffs[i + j], C::zero()) + term;
            }
        }
        QSeries { coeffs }
    }
}

impl<C: Coefficient> Neg for QSeries<C> {
    type Output = QSeries<C>;

    fn neg(self) -> QSeries<C> {
        QSeries {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<C: Coefficient> fmt::Display for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match n {
                0 => write!(f, "{mag}")?,
                1 if mag == "1" => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if mag == "1" => write!(f, "q^{n}")?,
                _ => write!(f, "{mag}q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    trunc: usize,
    coeffs: Vec<String>,
}

/// `{"trunc":N,"coeffs":["1","24",...]}`, coefficients as decimal strings.
impl<C: Coefficient> Serialize for QSeries<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            trunc: self.trunc(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for QSeries<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SeriesJson::deserialize(d)?;
        if raw.coeffs.len() != raw.trunc + 1 {
            return Err(D::Error::custom(format!(
                "trunc {} needs {} coefficients, found {}",
                raw.trunc,
                raw.trunc + 1,
                raw.coeffs.len()
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| {
                c.parse::<C>()
                    .map_err(|_| D::Error::custom(format!("bad coefficient {c:?}")))
            })
            .collect::<std::result::Result<Vec<C>, _>>()?;
        Ok(QSeries { coeffs })
    }
}

/// Euler product `Φ = Π_{n≥1} (1 − q^n)` through `q^trunc`.
pub fn euler_phi(trunc: usize) -> QSeries {
    let mut phi: QSeries = QSeries::one(trunc);
    for n in 1..=trunc {
        // multiply in place by (1 − q^n), high powers first
        for i in (n..=trunc).rev() {
            let shifted = phi.coeffs[i - n].clone();
            phi.coeffs[i] -= shifted;
        }
    }
    phi
}

/// Lattice theta series of the A_r root lattice: `Σ_n |Γ_n| q^n`.
pub fn lattice_theta(rank: Rank, trunc: usize) -> QSeries {
    QSeries::from_coeffs(
        (0..=trunc as u64)
            .map(|n| BigInt::from(root_shell(rank, n).len()))
            .collect(),
    )
}

/// Closed form `Θ(A_r) / Φ^r` of the basic character.
pub fn basic_character_rhs(rank: Rank, trunc: usize) -> QSeries {
    let denominator = euler_phi(trunc).pow(rank.get() as u32);
    lattice_theta(rank, trunc)
        .checked_div(&denominator)
        .expect("Φ^r has constant term 1")
}
