//! The metric D_σ on twisted coefficient sequences, its expansion through
//! Rankin–Selberg log-derivatives, the D*_σ quantity and the PSD checks
//! behind its nonnegativity.
//!
//! A [`MetricPoint`] (π, γ, δ) stands for 𝔫 ↦ δ·a_π(𝔫)·N𝔫^{iγ}.

use num_complex::Complex64;

use crate::arithmetic::PrimeIdeal;
use crate::error::{Error, Result};
use crate::eulersum::{
    lambda_tail_bound, log_derivative_rs_on, log_derivative_standard_on, norm_power_neg,
    ramified_correction_truncated, PrimePowerGrid,
};
use crate::linalg::hermitian_eigenvalues;
use crate::repdata::{AutomorphicRepData, ConductorMode, RankinSelbergPair};
use crate::summation::CompensatedSum;

#[derive(Debug, Clone, Copy)]
pub struct MetricPoint<'a> {
    pub rep: &'a AutomorphicRepData,
    pub gamma: f64,
    pub sign: i8,
}

impl<'a> MetricPoint<'a> {
    pub fn new(rep: &'a AutomorphicRepData, gamma: f64, sign: i8) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::Domain(format!("sign must be ±1, got {sign}")));
        }
        if !gamma.is_finite() {
            return Err(Error::Domain("shift γ must be finite".into()));
        }
        Ok(Self { rep, gamma, sign })
    }

    fn sign_f64(&self) -> f64 {
        self.sign as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceResult {
    pub value: f64,
    pub value_sq: f64,
    /// The untruncated distance lies in [value, value + tail_bound].
    pub tail_bound: f64,
    pub tail_bound_sq: f64,
    pub cutoff: f64,
}

fn same_field(points: &[&MetricPoint]) -> Result<()> {
    let field = points[0].rep.field();
    if points.iter().any(|p| p.rep.field() != field) {
        return Err(Error::Domain("metric points live over different fields".into()));
    }
    Ok(())
}

fn check_sigma(sigma: f64, theta: f64) -> Result<()> {
    if sigma > 1.0 + theta {
        Ok(())
    } else {
        Err(Error::Divergence {
            sigma,
            threshold: 1.0 + theta,
        })
    }
}

/// D_σ(x₁, x₂) truncated at N𝔭^k ≤ X.
pub fn distance(x1: &MetricPoint, x2: &MetricPoint, sigma: f64, x: f64) -> Result<DistanceResult> {
    same_field(&[x1, x2])?;
    let grid = PrimePowerGrid::new(x1.rep.field(), x)?;
    distance_on(&grid, x1, x2, sigma)
}

pub fn distance_on(grid: &PrimePowerGrid, x1: &MetricPoint, x2: &MetricPoint, sigma: f64) -> Result<DistanceResult> {
    same_field(&[x1, x2])?;
    let theta = x1.rep.theta().max(x2.rep.theta());
    check_sigma(sigma, 2.0 * theta)?;
    let a1 = grid.coefficient_table(|ideal, kmax| x1.rep.power_sums(ideal, kmax))?;
    let a2 = grid.coefficient_table(|ideal, kmax| x2.rep.power_sums(ideal, kmax))?;
    let mut acc = CompensatedSum::new();
    for term in grid.terms() {
        let log_norm = grid.ideals()[term.ideal].log_norm();
        let log_power = log_norm * term.k as f64;
        let v1 = a1[term.ideal][term.k - 1] * x1.sign_f64() * norm_power_neg(log_power, Complex64::new(0.0, -x1.gamma));
        let v2 = a2[term.ideal][term.k - 1] * x2.sign_f64() * norm_power_neg(log_power, Complex64::new(0.0, -x2.gamma));
        acc.add((v1 - v2).norm_sqr() * log_norm * (-sigma * log_power).exp());
    }
    let value_sq = 0.5 * acc.value();
    let m_sum = (x1.rep.degree() + x2.rep.degree()) as f64;
    let tail_bound_sq =
        0.5 * m_sum * m_sum * grid.field().degree() as f64 * lambda_tail_bound(sigma - 2.0 * theta, grid.cutoff());
    let value = value_sq.sqrt();
    Ok(DistanceResult {
        value,
        value_sq,
        tail_bound: (value_sq + tail_bound_sq).sqrt() - value,
        tail_bound_sq,
        cutoff: grid.cutoff(),
    })
}

/// The three pairings π₁×π̃₁, π₂×π̃₂, π₁×π̃₂ entering the expansion of D².
#[derive(Debug, Clone)]
pub struct ExpansionPairs {
    pub first: RankinSelbergPair,
    pub second: RankinSelbergPair,
    pub cross: RankinSelbergPair,
}

/// π × π̃′ in the requested conductor mode.
pub fn pairing(a: &AutomorphicRepData, b: &AutomorphicRepData, mode: ConductorMode) -> Result<RankinSelbergPair> {
    let dual = b.contragredient();
    match mode {
        ConductorMode::UpperBound => RankinSelbergPair::new(a, &dual),
        ConductorMode::Explicit => RankinSelbergPair::explicit_characters(a, &dual),
    }
}

impl ExpansionPairs {
    pub fn new(r1: &AutomorphicRepData, r2: &AutomorphicRepData, mode: ConductorMode) -> Result<Self> {
        Ok(Self {
            first: pairing(r1, r1, mode)?,
            second: pairing(r2, r2, mode)?,
            cross: pairing(r1, r2, mode)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Expansion {
    /// −½L′/L(σ, π₁×π̃₁), −½L′/L(σ, π₂×π̃₂), δ₁δ₂ Re L′/L(σ+i(γ₂−γ₁), π₁×π̃₂).
    pub log_terms: [f64; 3],
    /// ½E(σ, π₁×π̃₁), ½E(σ, π₂×π̃₂), −δ₁δ₂ Re E(σ+i(γ₂−γ₁), π₁×π̃₂).
    pub e_terms: [f64; 3],
    pub total: f64,
    pub distance_sq: f64,
    /// |distance_sq − total|.
    pub residual: f64,
    /// Sum of the tail bounds of every truncated piece.
    pub tail_budget: f64,
}

/// Six-term decomposition of D_σ(x₁, x₂)², every piece truncated at X.
pub fn distance_sq_expansion(
    x1: &MetricPoint,
    x2: &MetricPoint,
    sigma: f64,
    x: f64,
    pairs: &ExpansionPairs,
) -> Result<Expansion> {
    same_field(&[x1, x2])?;
    let grid = PrimePowerGrid::new(x1.rep.field(), x)?;
    let d = distance_on(&grid, x1, x2, sigma)?;
    let s = Complex64::new(sigma, 0.0);
    let s_cross = Complex64::new(sigma, x2.gamma - x1.gamma);
    let signs = x1.sign_f64() * x2.sign_f64();
    let l11 = log_derivative_rs_on(&grid, &pairs.first, s)?;
    let l22 = log_derivative_rs_on(&grid, &pairs.second, s)?;
    let l12 = log_derivative_rs_on(&grid, &pairs.cross, s_cross)?;
    let e11 = ramified_correction_truncated(&pairs.first, s, x)?;
    let e22 = ramified_correction_truncated(&pairs.second, s, x)?;
    let e12 = ramified_correction_truncated(&pairs.cross, s_cross, x)?;
    let log_terms = [0.5 * l11.value.re, 0.5 * l22.value.re, -signs * l12.value.re];
    let e_terms = [0.5 * e11.re, 0.5 * e22.re, -signs * e12.re];
    let mut acc = CompensatedSum::new();
    for v in log_terms.iter().chain(&e_terms) {
        acc.add(*v);
    }
    let total = acc.value();
    Ok(Expansion {
        log_terms,
        e_terms,
        total,
        distance_sq: d.value_sq,
        residual: (d.value_sq - total).abs(),
        tail_budget: 0.5 * l11.tail_bound + 0.5 * l22.tail_bound + l12.tail_bound + d.tail_bound_sq,
    })
}

/// D(x₁,x₃) + D(x₃,x₂) − D(x₁,x₂) at a common cutoff.
pub fn triangle_defect(x1: &MetricPoint, x2: &MetricPoint, x3: &MetricPoint, sigma: f64, x: f64) -> Result<f64> {
    same_field(&[x1, x2, x3])?;
    let grid = PrimePowerGrid::new(x1.rep.field(), x)?;
    let d13 = distance_on(&grid, x1, x3, sigma)?.value;
    let d32 = distance_on(&grid, x3, x2, sigma)?.value;
    let d12 = distance_on(&grid, x1, x2, sigma)?.value;
    Ok(d13 + d32 - d12)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounded {
    pub value: f64,
    pub tail_bound: f64,
}

fn dstar_sq_on(
    grid: &PrimePowerGrid,
    t1: &MetricPoint,
    t2: &MetricPoint,
    sigma: f64,
    mode: ConductorMode,
) -> Result<Bounded> {
    let pairs = ExpansionPairs::new(t1.rep, t2.rep, mode)?;
    let theta = t1.rep.theta().max(t2.rep.theta());
    check_sigma(sigma, 2.0 * theta)?;
    let s = Complex64::new(sigma, 0.0);
    let l11 = log_derivative_rs_on(grid, &pairs.first, s)?;
    let l22 = log_derivative_rs_on(grid, &pairs.second, s)?;
    let l12 = log_derivative_rs_on(grid, &pairs.cross, Complex64::new(sigma, t2.gamma - t1.gamma))?;
    let signs = t1.sign_f64() * t2.sign_f64();
    Ok(Bounded {
        value: 0.5 * (l11.value.re + l22.value.re - 2.0 * signs * l12.value.re),
        tail_bound: 0.5 * (l11.tail_bound + l22.tail_bound + 2.0 * l12.tail_bound),
    })
}

/// D*_σ(t₁, t₂)² = ½[−L′/L(σ,π₁×π̃₁) − L′/L(σ,π₂×π̃₂) + 2δ₁δ₂ Re L′/L(σ+i(γ₂−γ₁), π₁×π̃₂)].
pub fn dstar_sq(t1: &MetricPoint, t2: &MetricPoint, sigma: f64, x: f64, mode: ConductorMode) -> Result<Bounded> {
    same_field(&[t1, t2])?;
    let grid = PrimePowerGrid::new(t1.rep.field(), x)?;
    dstar_sq_on(&grid, t1, t2, sigma, mode)
}

/// 2D*(t₁,t₃)² + 2D*(t₃,t₂)² − D*(t₁,t₂)², with the summed tail bounds.
pub fn dstar_combination_defect(
    t1: &MetricPoint,
    t2: &MetricPoint,
    t3: &MetricPoint,
    sigma: f64,
    x: f64,
    mode: ConductorMode,
) -> Result<Bounded> {
    same_field(&[t1, t2, t3])?;
    let grid = PrimePowerGrid::new(t1.rep.field(), x)?;
    let d13 = dstar_sq_on(&grid, t1, t3, sigma, mode)?;
    let d32 = dstar_sq_on(&grid, t3, t2, sigma, mode)?;
    let d12 = dstar_sq_on(&grid, t1, t2, sigma, mode)?;
    Ok(Bounded {
        value: 2.0 * d13.value + 2.0 * d32.value - d12.value,
        tail_bound: 2.0 * d13.tail_bound + 2.0 * d32.tail_bound + d12.tail_bound,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CombinationCheck {
    /// The D* combination for (π,−γ,1), (π̃,γ,1), (𝟙,0,−1).
    pub via_dstar: f64,
    /// −L′/L(σ,π×π̃) − 2ζ′_F/ζ_F(σ) − Re L′/L(σ+2iγ,π×π) − 4 Re L′/L(σ+iγ,π).
    pub direct: f64,
    pub residual: f64,
    pub tail_bound: f64,
}

/// Checks that the D* triangle combination for (π,−γ,1), (π̃,γ,1), (𝟙,0,−1)
/// equals the classical four-term starting inequality. The two agree
/// termwise at unramified prime powers.
pub fn standard_combination(rep: &AutomorphicRepData, gamma: f64, sigma: f64, x: f64) -> Result<CombinationCheck> {
    let dual = rep.contragredient();
    let trivial = AutomorphicRepData::trivial(rep.field());
    let t1 = MetricPoint::new(rep, -gamma, 1)?;
    let t2 = MetricPoint::new(&dual, gamma, 1)?;
    let t3 = MetricPoint::new(&trivial, 0.0, -1)?;
    let via = dstar_combination_defect(&t1, &t2, &t3, sigma, x, ConductorMode::UpperBound)?;
    let grid = PrimePowerGrid::new(rep.field(), x)?;
    let s = Complex64::new(sigma, 0.0);
    let own = log_derivative_rs_on(&grid, &RankinSelbergPair::with_contragredient(rep), s)?;
    let zeta = log_derivative_standard_on(&grid, &trivial, s)?;
    let square = log_derivative_rs_on(&grid, &RankinSelbergPair::new(rep, rep)?, Complex64::new(sigma, 2.0 * gamma))?;
    let single = log_derivative_standard_on(&grid, rep, Complex64::new(sigma, gamma))?;
    let direct = own.value.re + 2.0 * zeta.value.re + square.value.re + 4.0 * single.value.re;
    Ok(CombinationCheck {
        via_dstar: via.value,
        direct,
        residual: (via.value - direct).abs(),
        tail_bound: via.tail_bound
            + own.tail_bound
            + 2.0 * zeta.tail_bound
            + square.tail_bound
            + 4.0 * single.tail_bound,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeFourOneTerm {
    pub n: u64,
    /// Prime-power term of −3ζ′/ζ(σ) − 4Re ζ′/ζ(σ+iγ) − Re ζ′/ζ(σ+2iγ).
    pub combination: f64,
    /// Λ(n)n^{−σ}·2(1 + cos(γ log n))².
    pub closed_form: f64,
}

/// Termwise 3-4-1 combination for ζ over ℚ, every n = p^k ≤ X.
pub fn three_four_one_terms(sigma: f64, gamma: f64, x: f64) -> Result<Vec<ThreeFourOneTerm>> {
    check_sigma(sigma, 0.0)?;
    let grid = PrimePowerGrid::new(crate::arithmetic::NumberField::Rational, x)?;
    let mut out = Vec::with_capacity(grid.terms().len());
    for term in grid.terms() {
        let log_p = grid.ideals()[term.ideal].log_norm();
        let log_n = log_p * term.k as f64;
        let at = |t: f64| (log_p * norm_power_neg(log_n, Complex64::new(sigma, t))).re;
        let weight = log_p * (-sigma * log_n).exp();
        let c = (gamma * log_n).cos();
        out.push(ThreeFourOneTerm {
            n: term.norm_power,
            combination: 3.0 * at(0.0) + 4.0 * at(gamma) + at(2.0 * gamma),
            closed_form: weight * 2.0 * (1.0 + c) * (1.0 + c),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsdReport {
    pub hermitian_error: f64,
    pub min_eigenvalue: f64,
}

/// Hermitian error and smallest eigenvalue of M_{ij} = a_{π_i×π̃_j}(𝔭^k)·log N𝔭.
///
/// Only unramified ideals are accepted: the pairings carry no ramified
/// Rankin–Selberg data.
pub fn psd_check(family: &[AutomorphicRepData], ideal: &PrimeIdeal, k: usize) -> Result<PsdReport> {
    if family.iter().any(|r| r.is_ramified(ideal.key())) {
        return Err(Error::Coverage {
            prime: ideal.residue_prime,
            index: ideal.index,
        });
    }
    let n = family.len();
    let log_norm = ideal.log_norm();
    let mut m = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..n {
            let pair = pairing(&family[i], &family[j], ConductorMode::UpperBound)?;
            m[i][j] = pair.coefficient(ideal, k)? * log_norm;
        }
    }
    let mut hermitian_error: f64 = 0.0;
    let mut sym = m.clone();
    for i in 0..n {
        for j in 0..n {
            hermitian_error = hermitian_error.max((m[i][j] - m[j][i].conj()).norm());
            sym[i][j] = (m[i][j] + m[j][i].conj()) * 0.5;
        }
    }
    let eig = hermitian_eigenvalues(&sym);
    Ok(PsdReport {
        hermitian_error,
        min_eigenvalue: eig.first().copied().unwrap_or(0.0),
    })
}
