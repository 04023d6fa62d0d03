//! Truncated Euler sums for −L′/L with rigorous tail bounds.
//!
//! All sums run over prime powers 𝔭^k with N𝔭^k ≤ X in ascending
//! (N𝔭^k, p, conjugate index) order and are accumulated with compensated
//! summation, so identical inputs give bit-identical values.

use num_complex::Complex64;

use crate::arithmetic::{prime_ideal, prime_ideals_up_to, NumberField, PrimeIdeal};
use crate::error::{Error, Result};
use crate::repdata::{AutomorphicRepData, RankinSelbergPair};
use crate::summation::{ComplexSum, CompensatedSum};

/// Chebyshev bound ψ(x) < 1.03883·x for all x > 0.
const CHEBYSHEV_PSI: f64 = 1.03883;

const K_SERIES_RELATIVE: f64 = 1e-14;
const K_SERIES_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedValue {
    pub value: Complex64,
    pub tail_bound: f64,
    pub cutoff: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridTerm {
    /// Position of 𝔭 in [`PrimePowerGrid::ideals`].
    pub ideal: usize,
    pub k: usize,
    pub norm_power: u64,
}

/// All prime powers 𝔭^k of a field with N𝔭^k ≤ X, in summation order.
#[derive(Debug, Clone)]
pub struct PrimePowerGrid {
    field: NumberField,
    cutoff: f64,
    ideals: Vec<PrimeIdeal>,
    max_power: Vec<usize>,
    terms: Vec<GridTerm>,
}

impl PrimePowerGrid {
    pub fn new(field: NumberField, x: f64) -> Result<Self> {
        let table = prime_ideals_up_to(field, x)?;
        let limit = x.floor() as u64;
        let mut terms = Vec::new();
        let mut max_power = Vec::with_capacity(table.len());
        for (idx, ideal) in table.iter().enumerate() {
            let mut q = ideal.norm;
            let mut k = 0;
            loop {
                k += 1;
                terms.push(GridTerm {
                    ideal: idx,
                    k,
                    norm_power: q,
                });
                match q.checked_mul(ideal.norm) {
                    Some(next) if next <= limit => q = next,
                    _ => break,
                }
            }
            max_power.push(k);
        }
        let ideals = table.entries;
        terms.sort_by_key(|t| (t.norm_power, ideals[t.ideal].residue_prime, ideals[t.ideal].index));
        Ok(Self {
            field,
            cutoff: x,
            ideals,
            max_power,
            terms,
        })
    }

    pub fn field(&self) -> NumberField {
        self.field
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn ideals(&self) -> &[PrimeIdeal] {
        &self.ideals
    }

    /// Largest k with N𝔭^k ≤ X for the ideal at `idx`.
    pub fn max_power(&self, idx: usize) -> usize {
        self.max_power[idx]
    }

    pub fn terms(&self) -> &[GridTerm] {
        &self.terms
    }

    /// Coefficient table c(𝔭^k), indexed [ideal][k − 1], from a per-ideal generator.
    pub fn coefficient_table<F>(&self, mut per_ideal: F) -> Result<Vec<Vec<Complex64>>>
    where
        F: FnMut(&PrimeIdeal, usize) -> Result<Vec<Complex64>>,
    {
        self.ideals
            .iter()
            .zip(&self.max_power)
            .map(|(ideal, &kmax)| per_ideal(ideal, kmax))
            .collect()
    }

    /// Σ c(𝔭^k) log N𝔭 · N𝔭^{−ks} in grid order.
    pub fn dirichlet_sum(&self, coefficients: &[Vec<Complex64>], s: Complex64) -> Complex64 {
        let mut acc = ComplexSum::new();
        for term in &self.terms {
            let c = coefficients[term.ideal][term.k - 1];
            if c.re == 0.0 && c.im == 0.0 {
                continue;
            }
            let log_norm = self.ideals[term.ideal].log_norm();
            acc.add(c * log_norm * norm_power_neg(log_norm * term.k as f64, s));
        }
        acc.value()
    }
}

/// e^{−s·L} for real L ≥ 0, computed so that conj(s) gives exactly the
/// conjugate result.
pub fn norm_power_neg(log_value: f64, s: Complex64) -> Complex64 {
    let magnitude = (-s.re * log_value).exp();
    let angle = s.im * log_value;
    let (sin, cos) = angle.abs().sin_cos();
    let sin = if angle < 0.0 { -sin } else { sin };
    Complex64::new(magnitude * cos, -magnitude * sin)
}

/// Upper bound for Σ_{n > X} Λ(n) n^{−u}, u > 1.
///
/// Returns the larger of 2(u−1)^{−2}X^{1−u}(1 + (u−1)log X) and
/// 1.03883·u·X^{1−u}/(u−1); the second follows from partial summation
/// with ψ(t) < 1.03883·t and holds for every X ≥ 1.
pub fn lambda_tail_bound(u: f64, x: f64) -> f64 {
    assert!(u > 1.0, "tail bound needs u > 1");
    let d = u - 1.0;
    let decay = x.powf(-d);
    let closed = 2.0 / (d * d) * decay * (1.0 + d * x.ln());
    let chebyshev = CHEBYSHEV_PSI * u * decay / d;
    closed.max(chebyshev)
}

fn check_convergence(s: Complex64, theta: f64) -> Result<()> {
    if s.re > 1.0 + theta {
        Ok(())
    } else {
        Err(Error::Divergence {
            sigma: s.re,
            threshold: 1.0 + theta,
        })
    }
}

/// −L′/L(s, π) truncated at N𝔭^k ≤ X.
pub fn log_derivative_standard(rep: &AutomorphicRepData, s: Complex64, x: f64) -> Result<TruncatedValue> {
    check_convergence(s, rep.theta())?;
    let grid = PrimePowerGrid::new(rep.field(), x)?;
    log_derivative_standard_on(&grid, rep, s)
}

/// As [`log_derivative_standard`] on a prebuilt grid.
pub fn log_derivative_standard_on(
    grid: &PrimePowerGrid,
    rep: &AutomorphicRepData,
    s: Complex64,
) -> Result<TruncatedValue> {
    check_convergence(s, rep.theta())?;
    let coefficients = grid.coefficient_table(|ideal, kmax| rep.power_sums(ideal, kmax))?;
    let scale = rep.field().degree() as f64 * rep.degree() as f64;
    Ok(TruncatedValue {
        value: grid.dirichlet_sum(&coefficients, s),
        tail_bound: scale * lambda_tail_bound(s.re - rep.theta(), grid.cutoff()),
        cutoff: grid.cutoff(),
    })
}

/// −L′/L(s, π×π′) truncated at N𝔭^k ≤ X.
pub fn log_derivative_rs(pair: &RankinSelbergPair, s: Complex64, x: f64) -> Result<TruncatedValue> {
    check_convergence(s, pair.theta())?;
    let grid = PrimePowerGrid::new(pair.field(), x)?;
    log_derivative_rs_on(&grid, pair, s)
}

pub fn log_derivative_rs_on(grid: &PrimePowerGrid, pair: &RankinSelbergPair, s: Complex64) -> Result<TruncatedValue> {
    check_convergence(s, pair.theta())?;
    let coefficients = grid.coefficient_table(|ideal, kmax| pair.coefficients(ideal, kmax))?;
    let scale = pair.field().degree() as f64 * pair.degree_product() as f64;
    Ok(TruncatedValue {
        value: grid.dirichlet_sum(&coefficients, s),
        tail_bound: scale * lambda_tail_bound(s.re - pair.theta(), grid.cutoff()),
        cutoff: grid.cutoff(),
    })
}

/// Running powers of a parameter list, yielding successive power sums.
struct PowerSums {
    alphas: Vec<Complex64>,
    powers: Vec<Complex64>,
}

impl PowerSums {
    fn new(alphas: Vec<Complex64>) -> Self {
        Self {
            powers: alphas.clone(),
            alphas,
        }
    }

    fn next_sum(&mut self) -> Complex64 {
        let s = self.powers.iter().sum();
        for (p, a) in self.powers.iter_mut().zip(&self.alphas) {
            *p *= a;
        }
        s
    }
}

/// E at one ramified ideal, summed over k ≤ `kmax` or to convergence.
fn ramified_term(pair: &RankinSelbergPair, ideal: &PrimeIdeal, s: Complex64, kmax: Option<usize>) -> Result<Complex64> {
    let mut left = PowerSums::new(pair.left().satake(ideal)?);
    let mut right = PowerSums::new(pair.right().satake(ideal)?);
    let mut joint = PowerSums::new(pair.ramified_params(ideal.key()).to_vec());
    let log_norm = ideal.log_norm();
    let ratio = (ideal.norm as f64).powf(pair.theta() - s.re);
    let majorant = 2.0 * pair.degree_product() as f64 * log_norm;
    let mut acc = ComplexSum::new();
    let mut k = 0;
    loop {
        k += 1;
        let c = left.next_sum() * right.next_sum() - joint.next_sum();
        acc.add(c * log_norm * norm_power_neg(log_norm * k as f64, s));
        if let Some(kmax) = kmax {
            if k >= kmax {
                break;
            }
            continue;
        }
        let tail = majorant * ratio.powi(k as i32 + 1) / (1.0 - ratio);
        let scale = acc.value().norm().max(majorant * ratio);
        if tail <= K_SERIES_RELATIVE * scale || k >= K_SERIES_CAP {
            break;
        }
    }
    Ok(acc.value())
}

/// E(s, π₁×π₂) = Σ_{𝔭 | 𝔮₁𝔮₂} Σ_k [a_{π₁}(𝔭^k)a_{π₂}(𝔭^k) − a_{π₁×π₂}(𝔭^k)] log N𝔭 · N𝔭^{−ks}.
pub fn ramified_correction(pair: &RankinSelbergPair, s: Complex64) -> Result<Complex64> {
    check_convergence(s, pair.theta())?;
    let mut acc = ComplexSum::new();
    for key in pair.ramified_keys() {
        let ideal = prime_ideal(pair.field(), *key)?;
        acc.add(ramified_term(pair, &ideal, s, None)?);
    }
    Ok(acc.value())
}

/// E restricted to N𝔭^k ≤ X, matching the truncation of the Euler sums.
pub fn ramified_correction_truncated(pair: &RankinSelbergPair, s: Complex64, x: f64) -> Result<Complex64> {
    check_convergence(s, pair.theta())?;
    if !(x >= 2.0) {
        return Err(Error::Domain(format!("cutoff X = {x} must be ≥ 2")));
    }
    let mut acc = ComplexSum::new();
    for key in pair.ramified_keys() {
        let ideal = prime_ideal(pair.field(), *key)?;
        let kmax = ((x.ln() / ideal.log_norm()) + 1e-12).floor() as usize;
        if kmax >= 1 {
            acc.add(ramified_term(pair, &ideal, s, Some(kmax))?);
        }
    }
    Ok(acc.value())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RamifiedBound {
    /// 2m₁m₂ Σ_{𝔭 | 𝔮₁𝔮₂} log N𝔭 / (N𝔭^{1−θ₁−θ₂} − 1).
    pub sharp: f64,
    /// 2m₁m₂ ω(𝔮₁𝔮₂) / (1 − θ₁ − θ₂).
    pub simplified: f64,
}

/// Bound for sup over Re(s) > 1 of |E(s, π₁×π₂)|.
pub fn ramified_correction_bound(pair: &RankinSelbergPair) -> Result<RamifiedBound> {
    let theta = pair.theta();
    if theta >= 1.0 {
        return Err(Error::Domain(format!("θ₁ + θ₂ = {theta} must be < 1")));
    }
    let scale = 2.0 * pair.degree_product() as f64;
    let mut sharp = CompensatedSum::new();
    for key in pair.ramified_keys() {
        let ideal = prime_ideal(pair.field(), *key)?;
        sharp.add(ideal.log_norm() / ((ideal.norm as f64).powf(1.0 - theta) - 1.0));
    }
    Ok(RamifiedBound {
        sharp: scale * sharp.value(),
        simplified: scale * pair.ramified_keys().len() as f64 / (1.0 - theta),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::{character_group, kronecker_character, IdealKey};
    use std::collections::BTreeMap;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Λ(n) for n ≤ limit by smallest-prime-factor sieve.
    fn von_mangoldt(limit: usize) -> Vec<f64> {
        let mut spf = vec![0usize; limit + 1];
        for i in 2..=limit {
            if spf[i] == 0 {
                let mut j = i;
                while j <= limit {
                    if spf[j] == 0 {
                        spf[j] = i;
                    }
                    j += i;
                }
            }
        }
        let mut out = vec![0.0; limit + 1];
        for n in 2..=limit {
            let p = spf[n];
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            if m == 1 {
                out[n] = (p as f64).ln();
            }
        }
        out
    }

    #[test]
    fn odd_kronecker_character_against_naive_loop() {
        let chi = kronecker_character(-4).unwrap();
        let rep = AutomorphicRepData::from_character(&chi);
        let v = log_derivative_standard(&rep, c(3.0, 0.0), 1e5).unwrap();
        let lambda = von_mangoldt(100_000);
        let oracle: f64 = (1..=100_000usize)
            .map(|n| chi.value(n as i64).re * lambda[n] * (n as f64).powi(-3))
            .sum();
        assert!((v.value.re - oracle).abs() < 1e-9, "{} vs {oracle}", v.value.re);
        assert!(v.value.im.abs() < 1e-15);
    }

    #[test]
    fn divergence_at_line_one() {
        let t = AutomorphicRepData::trivial(NumberField::Rational);
        assert!(matches!(
            log_derivative_standard(&t, c(1.0, 3.0), 100.0),
            Err(Error::Divergence { .. })
        ));
        assert!(matches!(
            log_derivative_standard(&t, c(2.0, 0.0), 1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn character_pair_drops_modulus() {
        let chi = &character_group(5)[1];
        let rep = AutomorphicRepData::from_character(chi);
        let pair = RankinSelbergPair::with_contragredient(&rep);
        let x = 1e5;
        let v = log_derivative_rs(&pair, c(2.0, 0.0), x).unwrap();
        let t = AutomorphicRepData::trivial(NumberField::Rational);
        let full = log_derivative_standard(&t, c(2.0, 0.0), x).unwrap();
        let fives: f64 = (1..)
            .map(|k| 5f64.powi(k))
            .take_while(|&q| q <= x)
            .map(|q| 5f64.ln() / (q * q))
            .sum();
        assert!((v.value.re - (full.value.re - fives)).abs() < 1e-9);
    }

    #[test]
    fn conjugation_is_exact() {
        let rep = AutomorphicRepData::synthetic(NumberField::quadratic(-3).unwrap(), 2, 0.1, 4).unwrap();
        let s = c(1.7, 12.25);
        let a = log_derivative_standard(&rep, s, 5e3).unwrap().value;
        let b = log_derivative_standard(&rep.contragredient(), s.conj(), 5e3).unwrap().value;
        assert_eq!(a.conj(), b);
    }

    #[test]
    fn ramified_correction_geometric_example() {
        let one = vec![c(1.0, 0.0)];
        let rep = AutomorphicRepData::builder(NumberField::Rational, 1)
            .ramified(IdealKey::new(2, 0), one)
            .conductor_norm(2)
            .theta(0.0)
            .build()
            .unwrap();
        let mut params = BTreeMap::new();
        params.insert(IdealKey::new(2, 0), Vec::new());
        let pair = RankinSelbergPair::explicit(&rep, &rep, params, 4).unwrap();
        let e = ramified_correction(&pair, c(2.0, 0.0)).unwrap();
        assert!((e.re - 2f64.ln() / 3.0).abs() < 1e-15);
        let bound = ramified_correction_bound(&pair).unwrap();
        assert!((bound.sharp - 2.0 * 2f64.ln()).abs() < 1e-15);
        assert!((bound.simplified - 2.0).abs() < 1e-15);
        for sigma in [1.01, 1.5, 2.0] {
            assert!(ramified_correction(&pair, c(sigma, 0.0)).unwrap().norm() <= bound.sharp);
        }
    }

    #[test]
    fn unramified_pairs_have_no_correction() {
        let t = AutomorphicRepData::trivial(NumberField::Rational);
        let pair = RankinSelbergPair::with_contragredient(&t);
        assert_eq!(ramified_correction(&pair, c(1.5, 2.0)).unwrap(), c(0.0, 0.0));
        assert_eq!(ramified_correction_bound(&pair).unwrap().sharp, 0.0);
        let chi = AutomorphicRepData::from_character(&character_group(5)[2]);
        let pair = RankinSelbergPair::with_contragredient(&chi);
        assert_eq!(ramified_correction(&pair, c(1.5, 0.0)).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn tail_bound_covers_doubling() {
        let t = AutomorphicRepData::trivial(NumberField::Rational);
        for sigma in [1.2, 1.5, 2.0] {
            let a = log_derivative_standard(&t, c(sigma, 0.0), 1e4).unwrap();
            let b = log_derivative_standard(&t, c(sigma, 0.0), 2e4).unwrap();
            assert!((a.value - b.value).norm() <= a.tail_bound);
        }
    }

    #[test]
    fn lambda_tail_bound_against_direct_sum() {
        let lambda = von_mangoldt(2_000_000);
        for u in [1.3, 2.0, 4.0, 8.0] {
            for x in [2.0, 10.0, 1000.0] {
                let direct: f64 = (x as usize + 1..=2_000_000).map(|n| lambda[n] * (n as f64).powf(-u)).sum();
                assert!(direct <= lambda_tail_bound(u, x), "u={u} x={x}");
            }
        }
    }
}
