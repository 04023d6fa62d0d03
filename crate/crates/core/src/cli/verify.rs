//! Seeded invariant suites behind `verify`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::archimedean::{hijt_margin, PlaceKind};
use crate::arithmetic::{character_group, primes_up_to, prime_ideal, IdealKey, NumberField};
use crate::conductor::{conductor_inequality_margin, mu_helper_margin, rs_analytic_conductor, WeilRepParameter};
use crate::error::Result;
use crate::eulersum::{lambda_tail_bound, log_derivative_standard};
use crate::hadamard::{hadamard_bound, ZeroList};
use crate::metric::{
    distance, dstar_combination_defect, psd_check, three_four_one_terms, triangle_defect, MetricPoint,
};
use crate::repdata::{default_theta, AutomorphicRepData, ConductorMode, RankinSelbergPair};

/// Outcome of one suite: how many checks ran, the extreme values seen, and
/// a witness line for every failed check.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SuiteReport {
    pub checks: usize,
    pub extremes: Vec<(String, f64)>,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    fn track_min(&mut self, label: &str, v: f64) {
        self.track(label, v, f64::min);
    }

    fn track_max(&mut self, label: &str, v: f64) {
        self.track(label, v, f64::max);
    }

    fn track(&mut self, label: &str, v: f64, pick: fn(f64, f64) -> f64) {
        match self.extremes.iter_mut().find(|(l, _)| l == label) {
            Some((_, w)) => *w = pick(*w, v),
            None => self.extremes.push((label.to_string(), v)),
        }
    }

    pub fn extreme(&self, label: &str) -> Option<f64> {
        self.extremes.iter().find(|(l, _)| l == label).map(|(_, v)| *v)
    }
}

fn random_synthetic(rng: &mut ChaCha8Rng, max_theta: f64) -> Result<AutomorphicRepData> {
    let m = rng.gen_range(1..=3usize);
    let theta = rng.gen_range(0.0..default_theta(m).min(max_theta).max(1e-9));
    AutomorphicRepData::synthetic(NumberField::Rational, m, theta, rng.gen())
}

fn random_sign(rng: &mut ChaCha8Rng) -> i8 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// Nonnegativity, exact symmetry, D(x,x) = 0 and the triangle inequality.
pub fn metric_axioms(seed: u64, n: usize, sigma: f64, x: f64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = SuiteReport::default();
    // Keeps every synthetic point inside the convergence region σ > 1 + 2θ.
    let max_theta = (sigma - 1.0) / 2.0 - 0.01;
    for i in 0..n {
        let reps = [
            random_synthetic(&mut rng, max_theta)?,
            random_synthetic(&mut rng, max_theta)?,
            random_synthetic(&mut rng, max_theta)?,
        ];
        let pts: Vec<MetricPoint> = reps
            .iter()
            .map(|rep| MetricPoint::new(rep, rng.gen_range(-10.0..10.0), random_sign(&mut rng)))
            .collect::<Result<_>>()?;
        let d12 = distance(&pts[0], &pts[1], sigma, x)?.value;
        let d21 = distance(&pts[1], &pts[0], sigma, x)?.value;
        let d11 = distance(&pts[0], &pts[0], sigma, x)?.value;
        let defect = triangle_defect(&pts[0], &pts[1], &pts[2], sigma, x)?;
        r.check(d12 >= 0.0, || format!("triple {i}: D = {d12} < 0"));
        r.check(d12 == d21, || format!("triple {i}: D(x,y) = {d12} but D(y,x) = {d21}"));
        r.check(d11 == 0.0, || format!("triple {i}: D(x,x) = {d11}"));
        r.check(defect >= -1e-12, || format!("triple {i}: triangle defect {defect}"));
        r.track_min("triangle defect", defect);
        r.track_max("|D(x,x)|", d11.abs());
    }
    Ok(r)
}

/// Hermitian PSD matrices over the character groups mod 5 and mod 8 at every
/// unramified prime power ≤ X, and the D* combination on seeded triples.
pub fn psd(seed: u64, n: usize, sigma: f64, x: f64) -> Result<SuiteReport> {
    let mut r = SuiteReport::default();
    let families: Vec<(u64, Vec<AutomorphicRepData>)> = [5u64, 8]
        .iter()
        .map(|&q| (q, character_group(q).iter().map(AutomorphicRepData::from_character).collect()))
        .collect();
    for (q, family) in &families {
        for p in primes_up_to(x as u64) {
            if q % p == 0 {
                continue;
            }
            let ideal = prime_ideal(NumberField::Rational, IdealKey::new(p, 0))?;
            let mut k = 1;
            let mut pk = p;
            while pk as f64 <= x {
                let rep = psd_check(family, &ideal, k)?;
                r.check(rep.hermitian_error <= 1e-12, || {
                    format!("mod {q}, {p}^{k}: hermitian error {}", rep.hermitian_error)
                });
                r.check(rep.min_eigenvalue >= -1e-12, || {
                    format!("mod {q}, {p}^{k}: min eigenvalue {}", rep.min_eigenvalue)
                });
                r.track_max("hermitian error", rep.hermitian_error);
                r.track_min("min eigenvalue", rep.min_eigenvalue);
                k += 1;
                pk = pk.saturating_mul(p);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..n {
        let (_, family) = &families[rng.gen_range(0..families.len())];
        let picks: Vec<&AutomorphicRepData> = (0..3).map(|_| &family[rng.gen_range(0..family.len())]).collect();
        let pts: Vec<MetricPoint> = picks
            .iter()
            .map(|rep| MetricPoint::new(rep, rng.gen_range(-5.0..5.0), random_sign(&mut rng)))
            .collect::<Result<_>>()?;
        let d = dstar_combination_defect(&pts[0], &pts[1], &pts[2], sigma, x, ConductorMode::UpperBound)?;
        r.check(d.value >= -d.tail_bound, || {
            format!("triple {i}: D* combination {} below −tail {}", d.value, d.tail_bound)
        });
        r.track_min("D* combination + tail", d.value + d.tail_bound);
    }
    Ok(r)
}

/// |Re ψ_v(s) − log|s|| ≤ bound on σ ∈ [1.01, 1.99] step 0.01, t ∈ [−50, 50] step 0.5.
pub fn hijt() -> Result<SuiteReport> {
    let mut r = SuiteReport::default();
    for place in [PlaceKind::Real, PlaceKind::Complex] {
        for i in 1..=99 {
            let sigma = 1.0 + i as f64 / 100.0;
            for j in -100..=100 {
                let t = j as f64 * 0.5;
                let m = hijt_margin(place, Complex64::new(sigma, t))?;
                r.check(m >= 0.0, || format!("{place:?} place at {sigma} + {t}i: margin {m}"));
                r.track_min("hijt margin", m);
            }
        }
    }
    Ok(r)
}

fn random_weil(rng: &mut ChaCha8Rng, place: PlaceKind) -> Result<WeilRepParameter> {
    let nu = Complex64::new(rng.gen_range(-0.5..=0.5), rng.gen_range(-30.0..30.0));
    match place {
        PlaceKind::Complex => WeilRepParameter::complex(rng.gen_range(-8..=8), nu),
        PlaceKind::Real => {
            if rng.gen_bool(0.5) {
                WeilRepParameter::real_character(random_sign(rng), nu)
            } else {
                WeilRepParameter::real_induced(rng.gen_range(1..=8), nu)
            }
        }
    }
}

/// Local conductor inequality, the |μ| helper bound and the Rankin–Selberg
/// conductor bound for all pairs of characters mod q ≤ 20.
pub fn conductor(seed: u64, n: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = SuiteReport::default();
    for place in [PlaceKind::Real, PlaceKind::Complex] {
        let label = format!("{place:?} inequality margin").to_lowercase();
        for _ in 0..n {
            let (w1, w2) = (random_weil(&mut rng, place)?, random_weil(&mut rng, place)?);
            let t = rng.gen_range(-100.0..100.0);
            let m = conductor_inequality_margin(&w1, &w2, t)?;
            r.check(m >= -1e-12, || format!("{w1:?} ⊗ {w2:?} at t = {t}: margin {m}"));
            r.track_min(&label, m);
        }
    }
    for _ in 0..(n / 10).max(1) {
        let k: i64 = rng.gen_range(-8..=8);
        let re = if k.abs() >= 2 { rng.gen_range(-0.5..=0.5) } else { rng.gen_range(-3.0..3.0) };
        let nu = Complex64::new(re, rng.gen_range(-10.0..10.0));
        let m = mu_helper_margin(k, nu)?;
        r.check(m >= 0.0, || format!("k = {k}, ν = {nu}: helper margin {m}"));
        r.track_min("mu helper margin", m);
    }
    let witness = mu_helper_margin(1, Complex64::new(-0.5 + 1e-9, 0.0))?;
    r.check((0.0..1e-6).contains(&witness), || format!("helper witness margin {witness}"));
    r.track_min("mu helper witness (k=1, ν→−1/2)", witness);
    for q1 in 1..=20u64 {
        for q2 in 1..=20u64 {
            for a in character_group(q1) {
                for b in character_group(q2) {
                    let pair = RankinSelbergPair::explicit_characters(
                        &AutomorphicRepData::from_character(&a),
                        &AutomorphicRepData::from_character(&b),
                    )?;
                    for t in [-30.0, -7.5, 0.0, 2.0, 30.0] {
                        let c = rs_analytic_conductor(&pair, t);
                        r.check(c.holds, || format!("characters mod {q1}, {q2} at t = {t}: {c:?}"));
                        r.track_min("rs log margin", c.log_margin);
                    }
                }
            }
        }
    }
    Ok(r)
}

/// The Hadamard upper bound for −Re ζ′/ζ(σ+it), t ∈ {0, 5, 10}, and its
/// monotonicity in the number of zeros used.
pub fn hadamard(zeros: &ZeroList, sigma: f64, x: f64) -> Result<SuiteReport> {
    let mut r = SuiteReport::default();
    let zeta = AutomorphicRepData::trivial(NumberField::Rational);
    let pair = RankinSelbergPair::with_contragredient(&zeta);
    let zeros = zeros.with_conjugates();
    for t in [0.0, 5.0, 10.0] {
        let s = Complex64::new(sigma, t);
        let lhs = log_derivative_standard(&zeta, s, x)?;
        let mut previous = f64::INFINITY;
        for size in 0..=zeros.len() {
            let rhs = hadamard_bound(s, &zeros, &pair, size)?;
            r.check(rhs <= previous, || format!("t = {t}: RHS rises at subset size {size}"));
            previous = rhs;
        }
        let gap = previous - lhs.value.re;
        r.check(gap >= -lhs.tail_bound, || {
            format!("t = {t}: RHS − LHS = {gap} below −tail {}", lhs.tail_bound)
        });
        r.track_min("RHS − LHS", gap);
    }
    Ok(r)
}

/// |value(X) − value(2X)| ≤ tail_bound(X) for seeded representations.
pub fn tails(seed: u64, n: usize, x: f64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = SuiteReport::default();
    for sigma in [1.2, 1.5, 2.0] {
        for i in 0..n {
            let rep = random_synthetic(&mut rng, sigma - 1.0 - 0.05)?;
            let s = Complex64::new(sigma, rng.gen_range(-20.0..20.0));
            let a = log_derivative_standard(&rep, s, x)?;
            let b = log_derivative_standard(&rep, s, 2.0 * x)?;
            let diff = (a.value - b.value).norm();
            r.check(diff <= a.tail_bound, || {
                format!("σ = {sigma}, rep {i}: |Δ| = {diff} exceeds tail {}", a.tail_bound)
            });
            r.track_max("|Δ|/tail", diff / a.tail_bound);
        }
    }
    r.track_max("tail at σ=2, X", lambda_tail_bound(2.0, x));
    Ok(r)
}

/// Every prime-power term of −3ζ′/ζ(σ) − 4Re ζ′/ζ(σ+iγ) − Re ζ′/ζ(σ+2iγ).
pub fn three_four_one(sigma: f64, x: f64) -> Result<SuiteReport> {
    let mut r = SuiteReport::default();
    for gamma in [0.5, 1.0, 14.134725] {
        for term in three_four_one_terms(sigma, gamma, x)? {
            r.check(term.combination >= -1e-15, || {
                format!("γ = {gamma}, n = {}: term {}", term.n, term.combination)
            });
            let gap = (term.combination - term.closed_form).abs();
            r.check(gap <= 1e-12, || format!("γ = {gamma}, n = {}: differs from closed form by {gap}", term.n));
            r.track_min("worst term", term.combination);
        }
    }
    Ok(r)
}
