//! Analytic conductors of standard and Rankin–Selberg data, and the
//! archimedean Weil-parameter rules behind the conductor inequality.

mod weil;

pub use weil::{
    conductor_inequality_margin, local_conductor, mu_helper_margin, weil_tensor, WeilDecomposition,
    WeilRepParameter, WeilSummand,
};

use num_complex::Complex64;

use crate::archimedean::PlaceKind;
use crate::repdata::{AutomorphicRepData, RankinSelbergPair};

fn log_archimedean_factor(places: &[PlaceKind], mus: &[Vec<Complex64>], t: f64) -> f64 {
    places
        .iter()
        .zip(mus)
        .map(|(place, list)| {
            let deg = place.degree() as f64;
            list.iter()
                .map(|mu| deg * ((mu + Complex64::new(0.0, t)).norm() + 3.0).ln())
                .sum::<f64>()
        })
        .sum()
}

/// log 𝔠(it, π) = m log D_F + log N𝔮_π + Σ_v Σ_j [F_v:ℝ] log(|μ_j(v) + it| + 3).
pub fn log_analytic_conductor(rep: &AutomorphicRepData, t: f64) -> f64 {
    let field = rep.field();
    rep.degree() as f64 * (field.abs_discriminant() as f64).ln()
        + (rep.conductor_norm() as f64).ln()
        + log_archimedean_factor(&field.places(), rep.langlands(), t)
}

/// 𝔠(it, π).
pub fn analytic_conductor(rep: &AutomorphicRepData, t: f64) -> f64 {
    log_analytic_conductor(rep, t).exp()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RsConductorCheck {
    /// 𝔠(it, π×π′).
    pub value: f64,
    /// 𝔠(π)^{m′}·𝔠(π′)^m·(|t|+3)^{mm′[F:ℚ]}.
    pub bound: f64,
    /// log(bound) − log(value).
    pub log_margin: f64,
    pub holds: bool,
}

/// 𝔠(it, π×π′) and its comparison with the product bound.
pub fn rs_analytic_conductor(pair: &RankinSelbergPair, t: f64) -> RsConductorCheck {
    let field = pair.field();
    let (m1, m2) = (pair.left().degree() as f64, pair.right().degree() as f64);
    let log_value = m1 * m2 * (field.abs_discriminant() as f64).ln()
        + (pair.conductor_norm() as f64).ln()
        + log_archimedean_factor(&field.places(), pair.rs_langlands(), t);
    let log_bound = m2 * log_analytic_conductor(pair.left(), 0.0)
        + m1 * log_analytic_conductor(pair.right(), 0.0)
        + m1 * m2 * field.degree() as f64 * (t.abs() + 3.0).ln();
    let log_margin = log_bound - log_value;
    RsConductorCheck {
        value: log_value.exp(),
        bound: log_bound.exp(),
        log_margin,
        holds: log_margin >= -1e-12 * log_bound.abs().max(1.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::{character_group, kronecker_character, NumberField};

    #[test]
    fn analytic_conductor_examples() {
        let t = AutomorphicRepData::trivial(NumberField::Rational);
        assert!((analytic_conductor(&t, 0.0) - 3.0).abs() < 1e-12);
        let gauss = AutomorphicRepData::trivial(NumberField::quadratic(-1).unwrap());
        assert!((analytic_conductor(&gauss, 0.0) - 36.0).abs() < 1e-11);
        let odd = AutomorphicRepData::from_character(&kronecker_character(-4).unwrap());
        assert!((analytic_conductor(&odd, 0.0) - 16.0).abs() < 1e-12);
    }

    #[test]
    fn rs_conductor_examples() {
        let t = AutomorphicRepData::trivial(NumberField::Rational);
        let pair = RankinSelbergPair::with_contragredient(&t);
        let c0 = rs_analytic_conductor(&pair, 0.0);
        assert!((c0.value - 3.0).abs() < 1e-12 && (c0.bound - 27.0).abs() < 1e-11 && c0.holds);
        let c10 = rs_analytic_conductor(&pair, 10.0);
        assert!((c10.value - 13.0).abs() < 1e-11 && (c10.bound - 117.0).abs() < 1e-10 && c10.holds);
    }

    #[test]
    fn conductor_increases_with_height() {
        let rep = AutomorphicRepData::from_character(&character_group(7)[1]);
        let mut last = 0.0;
        for i in 0..50 {
            let c = analytic_conductor(&rep, i as f64 * 0.7);
            assert!(c > last);
            last = c;
            assert_eq!(c, analytic_conductor(&rep, -(i as f64) * 0.7));
        }
    }
}
