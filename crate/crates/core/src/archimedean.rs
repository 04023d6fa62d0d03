//! Archimedean gamma factors: digamma, Γ_ℝ/Γ_ℂ logarithmic derivatives and
//! the upper bound on their real parts used in the Hadamard-product estimate.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::repdata::RankinSelbergPair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlaceKind {
    Real,
    Complex,
}

impl PlaceKind {
    /// Local degree [F_v : ℝ].
    pub fn degree(self) -> u32 {
        match self {
            PlaceKind::Real => 1,
            PlaceKind::Complex => 2,
        }
    }
}

/// B_{2n} for n = 1..=8.
const BERNOULLI: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

const ASYMPTOTIC_THRESHOLD: f64 = 10.0;

/// ψ(z) = Γ′(z)/Γ(z).
///
/// Shifts z upward with ψ(z) = ψ(z+1) − 1/z until Re z ≥ 10, then sums the
/// Stirling series ln z − 1/(2z) − Σ B_{2n}/(2n z^{2n}). Arguments with
/// Re z < −10 go through the reflection formula first.
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("digamma of non-finite {z}")));
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Err(Error::Pole(format!("digamma has a pole at {}", z.re)));
    }
    if z.re < -ASYMPTOTIC_THRESHOLD {
        // ψ(z) = ψ(1 − z) − π cot(πz)
        let w = Complex64::new(1.0, 0.0) - z;
        let pz = z * PI;
        return Ok(digamma(w)? - PI * pz.cos() / pz.sin());
    }
    let mut z = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < ASYMPTOTIC_THRESHOLD {
        shift += z.inv();
        z += 1.0;
    }
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut power = inv2;
    for (n, b) in BERNOULLI.iter().enumerate() {
        series += power * (b / (2.0 * (n as f64 + 1.0)));
        power *= inv2;
    }
    Ok(z.ln() - inv * 0.5 - series - shift)
}

/// Euler–Mascheroni constant, evaluated as −ψ(1).
pub fn euler_gamma() -> f64 {
    -digamma(Complex64::new(1.0, 0.0))
        .expect("ψ(1) is finite")
        .re
}

/// c₁ = log π + γ.
pub fn c1() -> f64 {
    PI.ln() + euler_gamma()
}

/// Γ′_v/Γ_v(s) for Γ_ℝ(s) = π^{−s/2}Γ(s/2) or Γ_ℂ(s) = 2(2π)^{−s}Γ(s).
pub fn gamma_factor_logderiv(place: PlaceKind, s: Complex64) -> Result<Complex64> {
    match place {
        PlaceKind::Real => Ok(digamma(s * 0.5)? * 0.5 - 0.5 * PI.ln()),
        PlaceKind::Complex => Ok(digamma(s)? - (2.0 * PI).ln()),
    }
}

/// [F_v:ℝ](−c₁/2 + ½ log|s+1|), the upper bound for Re Γ′_v/Γ_v(s).
pub fn hijt_bound(place: PlaceKind, s: Complex64) -> f64 {
    place.degree() as f64 * (-c1() / 2.0 + 0.5 * (s + 1.0).norm().ln())
}

/// Bound minus actual value; nonnegative wherever the bound holds.
pub fn hijt_margin(place: PlaceKind, s: Complex64) -> Result<f64> {
    Ok(hijt_bound(place, s) - gamma_factor_logderiv(place, s)?.re)
}

/// L′_∞/L_∞(s, π×π′) = Σ_v Σ_{j,j′} Γ′_v/Γ_v(s + μ_{j,j′}(v)).
pub fn linf_logderiv(pair: &RankinSelbergPair, s: Complex64) -> Result<Complex64> {
    let places = pair.field().places();
    let mut total = Complex64::new(0.0, 0.0);
    for (v, (place, mus)) in places.iter().zip(pair.rs_langlands()).enumerate() {
        for (idx, mu) in mus.iter().enumerate() {
            let m2 = pair.right().degree();
            let term = gamma_factor_logderiv(*place, s + mu).map_err(|e| match e {
                Error::Pole(msg) => Error::Pole(format!(
                    "place {v}, (j, j′) = ({}, {}): {msg}",
                    idx / m2,
                    idx % m2
                )),
                other => other,
            })?;
            total += term;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn digamma_at_one_and_two() {
        let g = 0.577_215_664_901_532_9;
        assert!((digamma(c(1.0, 0.0)).unwrap().re + g).abs() < 1e-14);
        assert!((digamma(c(2.0, 0.0)).unwrap().re - (1.0 - g)).abs() < 1e-14);
    }

    #[test]
    fn digamma_half() {
        // ψ(1/2) = −γ − 2 log 2
        let expected = -0.577_215_664_901_532_9 - 2.0 * 2f64.ln();
        assert!((digamma(c(0.5, 0.0)).unwrap().re - expected).abs() < 1e-13);
    }

    #[test]
    fn digamma_recurrence() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let z = c(rng.gen_range(-5.0..30.0), rng.gen_range(-40.0..40.0));
            if z.norm() < 0.1 {
                continue;
            }
            let lhs = digamma(z + 1.0).unwrap() - digamma(z).unwrap() - z.inv();
            assert!(lhs.norm() < 1e-13, "z = {z}, residual {}", lhs.norm());
        }
    }

    #[test]
    fn digamma_reflection_branch_is_consistent() {
        let z = c(-12.3, 0.7);
        let lhs = digamma(z + 1.0).unwrap() - digamma(z).unwrap() - z.inv();
        assert!(lhs.norm() < 1e-11);
    }

    #[test]
    fn digamma_poles() {
        for n in [0.0, -1.0, -7.0, -20.0] {
            assert!(matches!(digamma(c(n, 0.0)), Err(Error::Pole(_))));
        }
    }

    #[test]
    fn c1_interval() {
        let v = c1();
        assert!(v > 1.72194 && v < 1.72196, "{v}");
    }

    #[test]
    fn gamma_factor_examples() {
        let real = gamma_factor_logderiv(PlaceKind::Real, c(2.0, 0.0)).unwrap();
        assert!((real.re + c1() / 2.0).abs() < 1e-14);
        assert!((real.re + 0.86097).abs() < 1e-5);
        let cplx = gamma_factor_logderiv(PlaceKind::Complex, c(1.0, 0.0)).unwrap();
        assert!((cplx.re + (2.0 * std::f64::consts::PI).ln() + euler_gamma()).abs() < 1e-14);
        assert!((cplx.re + 2.415093).abs() < 1e-6);
    }

    #[test]
    fn duplication_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let s = c(rng.gen_range(0.2..5.0), rng.gen_range(-30.0..30.0));
            let lhs = gamma_factor_logderiv(PlaceKind::Complex, s).unwrap();
            let rhs = gamma_factor_logderiv(PlaceKind::Real, s).unwrap()
                + gamma_factor_logderiv(PlaceKind::Real, s + 1.0).unwrap();
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn hijt_examples() {
        let m = hijt_margin(PlaceKind::Real, c(2.0, 0.0)).unwrap();
        assert!((m - 0.5 * 3f64.ln()).abs() < 1e-13);
        assert!(hijt_margin(PlaceKind::Real, c(1.5, 10.0)).unwrap() >= 0.0);
        assert!(hijt_margin(PlaceKind::Complex, c(1.01, 0.0)).unwrap() >= 0.0);
    }
}
