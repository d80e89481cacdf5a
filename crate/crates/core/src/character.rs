//! Depth-organized characters built from permutation weights.
//!
//! At the homogeneous point every Schur value becomes a Weyl dimension, so the
//! coefficient of `q^M` in the numerator is `Σ ε · dim(μ⁺ − ρ)` over the
//! permutation weights of depth `M`. The normalized character is the ratio of
//! the series for `ρ̃ + Λ⁺` and for `ρ̃`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{inner_product, weyl_vector};
use crate::orbits::{
    compose_lemma, enumerate_translations, make_shifted_spec, AffineDominant, PermutationWeightSet,
};
use crate::qseries::QSeries;
use crate::symmetric::{weight_alternant, weyl_dimension, EvaluationPoint};

/// Which enumerator supplies the permutation weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Lemma,
    #[default]
    Translation,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lemma" => Ok(Method::Lemma),
            "translation" => Ok(Method::Translation),
            other => Err(format!(
                "unknown method {other:?} (expected lemma or translation)"
            )),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Lemma => "lemma",
            Method::Translation => "translation",
        })
    }
}

/// Permutation weights of `ρ̃ + Λ⁺` up to `max_depth`.
pub fn permutation_weights(
    dom: &AffineDominant,
    max_depth: u32,
    method: Method,
) -> PermutationWeightSet {
    match method {
        Method::Translation => enumerate_translations(&make_shifted_spec(dom), max_depth),
        Method::Lemma => compose_lemma(dom, max_depth),
    }
}

/// `Σ_M q^M Σ_{depth M} ε · dim(μ⁺ − ρ)` through `q^trunc`.
pub fn signed_dimension_series(pw: &PermutationWeightSet, trunc: usize) -> Result<QSeries> {
    if trunc > pw.max_depth() as usize {
        return Err(Error::DepthExceeded {
            requested: trunc,
            available: pw.max_depth() as usize,
        });
    }
    let mut series = QSeries::zero(trunc);
    for member in pw.members() {
        if let Some(c) = series.coeff_mut(member.depth() as usize) {
            let dim = weyl_dimension(member.lambda_labels())?;
            *c += BigInt::from(member.sign()) * dim;
        }
    }
    Ok(series)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterSeries {
    pub dom: AffineDominant,
    pub max_depth: u32,
    pub numerator: QSeries,
    pub denominator: QSeries,
    pub chi: QSeries,
}

impl CharacterSeries {
    pub fn anomaly(&self) -> Rational64 {
        anomaly(&self.dom)
    }

    /// Same character with every series cut down to `q^trunc`.
    pub fn truncated(&self, trunc: usize) -> CharacterSeries {
        CharacterSeries {
            dom: self.dom.clone(),
            max_depth: self.max_depth,
            numerator: self.numerator.truncate(trunc),
            denominator: self.denominator.truncate(trunc),
            chi: self.chi.truncate(trunc),
        }
    }
}

#[derive(Serialize)]
struct WeightJson<'a> {
    k: i64,
    labels: &'a [i64],
}

#[derive(Serialize)]
struct CharacterJson<'a> {
    algebra: String,
    weight: WeightJson<'a>,
    #[serde(rename = "M")]
    max_depth: u32,
    chi: &'a QSeries,
    numerator: &'a QSeries,
    denominator: &'a QSeries,
    anomaly: String,
}

impl Serialize for CharacterSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CharacterJson {
            algebra: format!("A{}(1)", self.dom.rank()),
            weight: WeightJson {
                k: self.dom.level(),
                labels: self.dom.lambda_plus().labels(),
            },
            max_depth: self.max_depth,
            chi: &self.chi,
            numerator: &self.numerator,
            denominator: &self.denominator,
            anomaly: self.anomaly().to_string(),
        }
        .serialize(s)
    }
}

/// `χ = N/D` through `q^max_depth`, with `N` from the orbit of `ρ̃ + Λ⁺` and
/// `D` from the orbit of `ρ̃`.
pub fn normalized_character(
    dom: &AffineDominant,
    max_depth: u32,
    method: Method,
) -> Result<CharacterSeries> {
    let trunc = max_depth as usize;
    let numerator = signed_dimension_series(&permutation_weights(dom, max_depth, method), trunc)?;
    let vacuum = AffineDominant::zero(dom.rank());
    let denominator =
        signed_dimension_series(&permutation_weights(&vacuum, max_depth, method), trunc)?;
    let chi = numerator.checked_div(&denominator)?;
    Ok(CharacterSeries {
        dom: dom.clone(),
        max_depth,
        numerator,
        denominator,
        chi,
    })
}

/// `a = [(λ⁺, λ⁺ + 2ρ) − k̃·r(r+2)/12] / (2k̃)`.
pub fn anomaly(dom: &AffineDominant) -> Rational64 {
    let rank = dom.rank();
    let r = rank.get() as i64;
    let k_tilde = make_shifted_spec(dom).k_tilde();
    let lambda = dom.lambda_plus().to_weight();
    let shifted = &lambda + &weyl_vector(rank).scale(2);
    let casimir = inner_product(&lambda, &shifted).expect("same rank");
    (casimir - Rational64::new(k_tilde * r * (r + 2), 12)) / Rational64::from_integer(2 * k_tilde)
}

/// Depth-graded alternating sums `Σ ε · A(μ⁺)(u)` for numerator and
/// denominator at a point with distinct entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCharacter {
    pub numerator: Vec<BigRational>,
    pub denominator: Vec<BigRational>,
}

impl PointCharacter {
    /// The ratio as a rational q-series.
    pub fn ratio(&self) -> Result<QSeries<BigRational>> {
        QSeries::from_coeffs(self.numerator.clone())
            .checked_div(&QSeries::from_coeffs(self.denominator.clone()))
    }
}

pub fn character_at_point(
    dom: &AffineDominant,
    u: &EvaluationPoint,
    max_depth: u32,
) -> Result<PointCharacter> {
    let rank = dom.rank();
    if u.len() != rank.coords() {
        return Err(Error::LengthMismatch {
            expected: rank.coords(),
            got: u.len(),
        });
    }
    if !u.has_distinct_entries() {
        return Err(Error::RepeatedEvaluationEntries);
    }
    let graded = |pw: PermutationWeightSet| -> Result<Vec<BigRational>> {
        let mut out = vec![BigRational::zero(); max_depth as usize + 1];
        for m in pw.members() {
            let a = weight_alternant(m.mu_plus(), u)?;
            out[m.depth() as usize] += BigRational::from_integer(m.sign().into()) * a;
        }
        Ok(out)
    };
    Ok(PointCharacter {
        numerator: graded(permutation_weights(dom, max_depth, Method::Translation))?,
        denominator: graded(permutation_weights(
            &AffineDominant::zero(rank),
            max_depth,
            Method::Translation,
        ))?,
    })
}
