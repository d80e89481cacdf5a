//! Shell-organized theta sums in the Kac–Peterson form.
//!
//! Every translation `α` in the root-lattice shell `Γ_n` contributes one
//! finite alternating sum over the Weyl group of A_r. At the homogeneous
//! point that sum collapses to the sort sign of `λ̃ + k̃α` times the Weyl
//! dimension of its dominant rearrangement minus ρ, at power
//! `q^{(λ̃,α) + k̃(α,α)/2}`. Grouping the same terms by shell instead of by
//! depth gives an independent route to the character.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice::DynkinLabels;
use crate::orbits::{make_shifted_spec, AffineDominant};
use crate::qseries::QSeries;
use crate::symmetric::weyl_dimension;

/// Shell-`n` contribution `T_{n,Λ⁺}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TPolynomial {
    pub shell: u64,
    pub series: QSeries,
}

pub fn t_polynomial(dom: &AffineDominant, n: u64, trunc: usize) -> TPolynomial {
    let spec = make_shifted_spec(dom);
    let mut series = QSeries::zero(trunc);
    spec.for_each_in_shell(n, |depth, sorted, sign| {
        if sign == 0 || depth < 0 || depth as usize > trunc {
            return;
        }
        let labels = DynkinLabels::new(sorted.windows(2).map(|w| w[0] - w[1] - 1).collect())
            .expect("rank ≥ 1");
        let dim = weyl_dimension(&labels).expect("strictly decreasing coordinates");
        if let Some(c) = series.coeff_mut(depth as usize) {
            *c += BigInt::from(sign) * dim;
        }
    });
    TPolynomial { shell: n, series }
}

/// `Σ_{n ≤ nmax} T_{n,Λ⁺}` (the `n = 0` term is the leading 1).
pub fn shell_sum(dom: &AffineDominant, nmax: u64, trunc: usize) -> QSeries {
    (0..=nmax).fold(QSeries::zero(trunc), |acc, n| {
        &acc + &t_polynomial(dom, n, trunc).series
    })
}

/// Highest power of `q` that shells `0..=nmax` already fix, for both the
/// numerator orbit of `dom` and the denominator orbit of `0⁺`.
pub fn guaranteed_order(dom: &AffineDominant, nmax: u64) -> i64 {
    let numerator = make_shifted_spec(dom).min_depth_from_shell(nmax + 1);
    let denominator =
        make_shifted_spec(&AffineDominant::zero(dom.rank())).min_depth_from_shell(nmax + 1);
    numerator.min(denominator) - 1
}

/// `(1 + Σ T_{n,Λ⁺}) / (1 + Σ T_{n,0⁺})`, cut at the guaranteed order.
pub fn oracle_character(dom: &AffineDominant, nmax: u64, trunc: usize) -> Result<QSeries> {
    let order = guaranteed_order(dom, nmax).max(0) as usize;
    let trunc = trunc.min(order);
    let numerator = shell_sum(dom, nmax, trunc);
    let denominator = shell_sum(&AffineDominant::zero(dom.rank()), nmax, trunc);
    numerator.checked_div(&denominator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Rank;

    fn rank(r: usize) -> Rank {
        Rank::new(r).unwrap()
    }

    fn ints(q: &QSeries) -> Vec<i64> {
        q.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn zeroth_shell_is_one() {
        let t = t_polynomial(&AffineDominant::basic(rank(3)), 0, 4);
        assert_eq!(ints(&t.series), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn first_shell_of_vacuum() {
        let t = t_polynomial(&AffineDominant::zero(rank(4)), 1, 9);
        assert_eq!(
            ints(&t.series),
            vec![0, -24, 252, -1472, 3654, 0, -19096, 40128, -34398, 10976]
        );
        let exponents = t
            .series
            .coeffs()
            .iter()
            .filter(|c| !num_traits::Zero::is_zero(*c))
            .count();
        assert_eq!(exponents, 8);
    }

    #[test]
    fn guaranteed_orders() {
        assert_eq!(guaranteed_order(&AffineDominant::basic(rank(4)), 2), 7);
        assert_eq!(guaranteed_order(&AffineDominant::zero(rank(4)), 0), 0);
        let d = AffineDominant::basic(rank(3));
        let orders: Vec<i64> = (0..5).map(|n| guaranteed_order(&d, n)).collect();
        assert!(orders.windows(2).all(|w| w[0] <= w[1]), "{orders:?}");
    }

    #[test]
    fn oracle_basic_a4() {
        let d = AffineDominant::basic(rank(4));
        let one_shell = oracle_character(&d, 1, 20).unwrap();
        assert_eq!(&ints(&one_shell)[..3], &[1, 24, 124]);
        let two_shells = oracle_character(&d, 2, 20).unwrap();
        assert_eq!(two_shells.trunc(), 7);
        assert_eq!(
            ints(&two_shells),
            vec![1, 24, 124, 500, 1625, 4752, 12524, 31000]
        );
    }

    #[test]
    fn json_shape() {
        let t = t_polynomial(&AffineDominant::zero(rank(2)), 1, 2);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"shell":1,"series":{"trunc":2,"coeffs":["0","-8","20"]}}"#
        );
    }
}
