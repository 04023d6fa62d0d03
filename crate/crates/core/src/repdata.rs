//! Coefficient data for members of 𝔉*_m and their Rankin–Selberg pairings.
//!
//! A representation stores its unramified Satake parameters through a
//! generator rule rather than a fixed table, so any prime ideal can be
//! queried without rebuilding. Ramified ideals carry explicit (possibly
//! short) parameter lists.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

use crate::arithmetic::{
    factorize, prime_ideal, prime_ideals_up_to, DirichletCharacter, IdealKey, NumberField,
    PrimeIdeal,
};
use crate::error::{Error, Result};

const BOUND_SLACK: f64 = 1e-12;

/// Ideals with norm up to this are compared when deciding whether one
/// representation is the contragredient of another.
const DUALITY_CHECK_NORM: f64 = 200.0;

#[derive(Debug, Clone, PartialEq)]
pub enum SatakeRule {
    /// m = 1 over ℚ: α(p) = χ(p).
    Character(DirichletCharacter),
    /// The same parameters at every unramified ideal.
    Constant(Vec<Complex64>),
    /// α_j(𝔭) = N𝔭^{θu}·e^{2πiφ} with u ∈ [−1, 1], φ ∈ [0, 1) drawn from a
    /// hash of (seed, 𝔭, j).
    Seeded { seed: u64, conjugated: bool },
    /// Explicit parameters for every unramified ideal of norm ≤ cutoff.
    Table {
        entries: BTreeMap<IdealKey, Vec<Complex64>>,
        cutoff: u64,
    },
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn unit_interval(h: u64) -> f64 {
    (h >> 11) as f64 / (1u64 << 53) as f64
}

fn seeded_parameter(seed: u64, ideal: &PrimeIdeal, j: usize, theta: f64) -> Complex64 {
    let mut h = splitmix64(seed);
    h = splitmix64(h ^ ideal.residue_prime);
    h = splitmix64(h ^ ideal.index as u64);
    h = splitmix64(h ^ j as u64);
    let u = 2.0 * unit_interval(h) - 1.0;
    let phi = unit_interval(splitmix64(h));
    let radius = (ideal.norm as f64).powf(theta * u);
    Complex64::from_polar(radius, std::f64::consts::TAU * phi)
}

fn conj_all(v: &[Complex64]) -> Vec<Complex64> {
    v.iter().map(|z| z.conj()).collect()
}

/// Whether `b` equals the conjugate of `a` as a multiset, up to `tol`.
fn is_conjugate_multiset(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let target = x.conj();
        match (0..b.len()).find(|&i| !used[i] && (b[i] - target).norm() <= tol) {
            Some(i) => {
                used[i] = true;
                true
            }
            None => false,
        }
    })
}

fn is_conjugation_closed(a: &[Complex64]) -> bool {
    is_conjugate_multiset(a, a, 1e-12)
}

/// h_j(α), the complete homogeneous symmetric polynomial, via
/// j·h_j = Σ_{i=1}^{j} p_i h_{j−i}.
pub fn satake_to_lambda(alphas: &[Complex64], j: usize) -> Complex64 {
    let mut power_sums = Vec::with_capacity(j);
    let mut powers: Vec<Complex64> = alphas.to_vec();
    for _ in 0..j {
        power_sums.push(powers.iter().sum::<Complex64>());
        for (p, a) in powers.iter_mut().zip(alphas) {
            *p *= a;
        }
    }
    let mut h = vec![Complex64::new(1.0, 0.0)];
    for n in 1..=j {
        let s: Complex64 = (1..=n).map(|i| power_sums[i - 1] * h[n - i]).sum();
        h.push(s / n as f64);
    }
    h[j]
}

#[derive(Debug, Clone, PartialEq)]
pub struct AutomorphicRepData {
    degree: usize,
    field: NumberField,
    rule: SatakeRule,
    ramified: BTreeMap<IdealKey, Vec<Complex64>>,
    langlands: Vec<Vec<Complex64>>,
    conductor_norm: u64,
    theta: f64,
    self_dual: bool,
    is_trivial: bool,
}

/// GRC exponent 1/2 − 1/(m²+1).
pub fn default_theta(m: usize) -> f64 {
    0.5 - 1.0 / ((m * m) as f64 + 1.0)
}

#[derive(Debug, Clone)]
pub struct RepBuilder {
    degree: usize,
    field: NumberField,
    rule: Option<SatakeRule>,
    ramified: BTreeMap<IdealKey, Vec<Complex64>>,
    langlands: Option<Vec<Vec<Complex64>>>,
    conductor_norm: u64,
    theta: Option<f64>,
}

impl RepBuilder {
    pub fn rule(mut self, rule: SatakeRule) -> Self {
        self.rule = Some(rule);
        self
    }

    pub fn ramified(mut self, key: IdealKey, params: Vec<Complex64>) -> Self {
        self.ramified.insert(key, params);
        self
    }

    /// Langlands parameters, one list of m values per archimedean place.
    pub fn langlands(mut self, mu: Vec<Vec<Complex64>>) -> Self {
        self.langlands = Some(mu);
        self
    }

    pub fn conductor_norm(mut self, n: u64) -> Self {
        self.conductor_norm = n;
        self
    }

    pub fn theta(mut self, theta: f64) -> Self {
        self.theta = Some(theta);
        self
    }

    pub fn build(self) -> Result<AutomorphicRepData> {
        let m = self.degree;
        if m == 0 {
            return Err(Error::Domain("degree must be positive".into()));
        }
        let theta = self.theta.unwrap_or_else(|| default_theta(m));
        if !(0.0..0.5).contains(&theta) {
            return Err(Error::Domain(format!("θ = {theta} must lie in [0, 1/2)")));
        }
        if self.conductor_norm == 0 {
            return Err(Error::Domain("conductor norm must be positive".into()));
        }
        let rule = self.rule.unwrap_or(SatakeRule::Constant(vec![Complex64::new(1.0, 0.0); m]));
        let places = self.field.places();
        let langlands = self
            .langlands
            .unwrap_or_else(|| vec![vec![Complex64::new(0.0, 0.0); m]; places.len()]);
        if langlands.len() != places.len() {
            return Err(Error::Domain(format!(
                "{} Langlands lists given for {} archimedean places",
                langlands.len(),
                places.len()
            )));
        }
        for mus in &langlands {
            if mus.len() != m {
                return Err(Error::Domain(format!("expected {m} Langlands parameters per place")));
            }
            if let Some(mu) = mus.iter().find(|mu| mu.re < -theta - BOUND_SLACK) {
                return Err(Error::Domain(format!("Re μ = {} is below −θ = {}", mu.re, -theta)));
            }
        }
        let check_bound = |key: IdealKey, params: &[Complex64], norm: u64| -> Result<()> {
            let limit = (norm as f64).powf(theta) * (1.0 + BOUND_SLACK);
            match params.iter().find(|a| a.norm() > limit) {
                Some(a) => Err(Error::Domain(format!(
                    "|α| = {} exceeds N𝔭^θ = {limit} at prime {} (index {})",
                    a.norm(),
                    key.prime,
                    key.index
                ))),
                None => Ok(()),
            }
        };
        for (key, params) in &self.ramified {
            let ideal = prime_ideal(self.field, *key)?;
            if params.len() > m {
                return Err(Error::Domain(format!(
                    "{} ramified parameters at prime {} exceed degree {m}",
                    params.len(),
                    key.prime
                )));
            }
            check_bound(*key, params, ideal.norm)?;
        }
        match &rule {
            SatakeRule::Character(chi) => {
                if m != 1 || self.field != NumberField::Rational {
                    return Err(Error::Domain("character rules need m = 1 over ℚ".into()));
                }
                for (p, _) in factorize(chi.modulus()) {
                    if !self.ramified.contains_key(&IdealKey::new(p, 0)) {
                        return Err(Error::Domain(format!(
                            "prime {p} divides the character modulus but is not marked ramified"
                        )));
                    }
                }
            }
            SatakeRule::Constant(params) => {
                if params.len() != m {
                    return Err(Error::Domain(format!("expected {m} Satake parameters")));
                }
                check_bound(IdealKey::new(2, 0), params, 2)?;
            }
            SatakeRule::Seeded { .. } => {}
            SatakeRule::Table { entries, .. } => {
                for (key, params) in entries {
                    let ideal = prime_ideal(self.field, *key)?;
                    if params.len() != m {
                        return Err(Error::Domain(format!(
                            "expected {m} Satake parameters at prime {}",
                            key.prime
                        )));
                    }
                    check_bound(*key, params, ideal.norm)?;
                }
            }
        }

        let rule_self_dual = match &rule {
            SatakeRule::Character(chi) => chi.is_real(),
            SatakeRule::Constant(p) => is_conjugation_closed(p),
            SatakeRule::Seeded { .. } => false,
            SatakeRule::Table { entries, .. } => entries.values().all(|p| is_conjugation_closed(p)),
        };
        let self_dual = rule_self_dual
            && self.ramified.values().all(|p| is_conjugation_closed(p))
            && langlands.iter().all(|mus| is_conjugation_closed(mus));
        let one = Complex64::new(1.0, 0.0);
        let rule_trivial = match &rule {
            SatakeRule::Character(chi) => chi.modulus() == 1,
            SatakeRule::Constant(p) => p == &vec![one],
            _ => false,
        };
        let is_trivial = m == 1
            && rule_trivial
            && self.conductor_norm == 1
            && self.ramified.is_empty()
            && langlands.iter().flatten().all(|mu| *mu == Complex64::new(0.0, 0.0));
        Ok(AutomorphicRepData {
            degree: m,
            field: self.field,
            rule,
            ramified: self.ramified,
            langlands,
            conductor_norm: self.conductor_norm,
            theta,
            self_dual,
            is_trivial,
        })
    }
}

impl AutomorphicRepData {
    pub fn builder(field: NumberField, degree: usize) -> RepBuilder {
        RepBuilder {
            degree,
            field,
            rule: None,
            ramified: BTreeMap::new(),
            langlands: None,
            conductor_norm: 1,
            theta: None,
        }
    }

    /// The trivial representation 𝟙 of GL(1) over `field`; L(s, 𝟙) = ζ_F(s).
    pub fn trivial(field: NumberField) -> Self {
        Self::builder(field, 1)
            .theta(0.0)
            .build()
            .expect("trivial data is valid")
    }

    /// The GL(1) representation attached to a Dirichlet character.
    pub fn from_character(chi: &DirichletCharacter) -> Self {
        let mu = if chi.parity() == 1 { 0.0 } else { 1.0 };
        let mut b = Self::builder(NumberField::Rational, 1)
            .rule(SatakeRule::Character(chi.clone()))
            .langlands(vec![vec![Complex64::new(mu, 0.0)]])
            .conductor_norm(chi.conductor())
            .theta(0.0);
        for (p, _) in factorize(chi.modulus()) {
            b = b.ramified(IdealKey::new(p, 0), Vec::new());
        }
        b.build().expect("character data is valid")
    }

    /// Unramified pseudo-random data saturating |α| ≤ N𝔭^θ.
    pub fn synthetic(field: NumberField, degree: usize, theta: f64, seed: u64) -> Result<Self> {
        Self::builder(field, degree)
            .rule(SatakeRule::Seeded {
                seed,
                conjugated: false,
            })
            .theta(theta)
            .build()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn field(&self) -> NumberField {
        self.field
    }

    pub fn rule(&self) -> &SatakeRule {
        &self.rule
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn conductor_norm(&self) -> u64 {
        self.conductor_norm
    }

    pub fn langlands(&self) -> &[Vec<Complex64>] {
        &self.langlands
    }

    pub fn ramified(&self) -> &BTreeMap<IdealKey, Vec<Complex64>> {
        &self.ramified
    }

    pub fn is_ramified(&self, key: IdealKey) -> bool {
        self.ramified.contains_key(&key)
    }

    pub fn is_trivial(&self) -> bool {
        self.is_trivial
    }

    pub fn self_dual(&self) -> bool {
        self.self_dual
    }

    /// Largest norm for which unramified data is available.
    pub fn coverage_limit(&self) -> Option<u64> {
        match &self.rule {
            SatakeRule::Table { cutoff, .. } => Some(*cutoff),
            _ => None,
        }
    }

    /// Satake parameters at 𝔭; at ramified ideals the stored (possibly short) list.
    pub fn satake(&self, ideal: &PrimeIdeal) -> Result<Vec<Complex64>> {
        if let Some(params) = self.ramified.get(&ideal.key()) {
            return Ok(params.clone());
        }
        match &self.rule {
            SatakeRule::Character(chi) => Ok(vec![chi.value(ideal.residue_prime as i64)]),
            SatakeRule::Constant(params) => Ok(params.clone()),
            SatakeRule::Seeded { seed, conjugated } => Ok((0..self.degree)
                .map(|j| {
                    let a = seeded_parameter(*seed, ideal, j, self.theta);
                    if *conjugated {
                        a.conj()
                    } else {
                        a
                    }
                })
                .collect()),
            SatakeRule::Table { entries, .. } => {
                entries.get(&ideal.key()).cloned().ok_or(Error::Coverage {
                    prime: ideal.residue_prime,
                    index: ideal.index,
                })
            }
        }
    }

    /// a_π(𝔭^k) for k = 1..=kmax.
    pub fn power_sums(&self, ideal: &PrimeIdeal, kmax: usize) -> Result<Vec<Complex64>> {
        if let (SatakeRule::Character(chi), false) = (&self.rule, self.is_ramified(ideal.key())) {
            let p = ideal.residue_prime as i64;
            return Ok((1..=kmax as u64).map(|k| chi.value_pow(p, k)).collect());
        }
        let alphas = self.satake(ideal)?;
        let mut powers = alphas.clone();
        let mut out = Vec::with_capacity(kmax);
        for _ in 0..kmax {
            out.push(powers.iter().sum());
            for (p, a) in powers.iter_mut().zip(&alphas) {
                *p *= a;
            }
        }
        Ok(out)
    }

    /// a_π(𝔭^k) = Σ_j α_j(𝔭)^k; missing ramified parameters count as 0.
    pub fn power_sum(&self, ideal: &PrimeIdeal, k: usize) -> Result<Complex64> {
        if k == 0 {
            return Err(Error::Domain("power-sum index must be positive".into()));
        }
        Ok(self.power_sums(ideal, k)?[k - 1])
    }

    /// λ_π(𝔭^j) = h_j(α(𝔭)).
    pub fn lambda(&self, ideal: &PrimeIdeal, j: usize) -> Result<Complex64> {
        Ok(satake_to_lambda(&self.satake(ideal)?, j))
    }

    /// π̃: every Satake and Langlands parameter conjugated.
    pub fn contragredient(&self) -> Self {
        let rule = match &self.rule {
            SatakeRule::Character(chi) => SatakeRule::Character(chi.conj()),
            SatakeRule::Constant(p) => SatakeRule::Constant(conj_all(p)),
            SatakeRule::Seeded { seed, conjugated } => SatakeRule::Seeded {
                seed: *seed,
                conjugated: !conjugated,
            },
            SatakeRule::Table { entries, cutoff } => SatakeRule::Table {
                entries: entries.iter().map(|(k, v)| (*k, conj_all(v))).collect(),
                cutoff: *cutoff,
            },
        };
        Self {
            rule,
            ramified: self.ramified.iter().map(|(k, v)| (*k, conj_all(v))).collect(),
            langlands: self.langlands.iter().map(|v| conj_all(v)).collect(),
            ..self.clone()
        }
    }

    /// Whether `other` has the data of π̃, compared at ideals of small norm.
    pub fn is_contragredient_of(&self, other: &Self) -> bool {
        if self.degree != other.degree
            || self.field != other.field
            || self.conductor_norm != other.conductor_norm
            || self.ramified.keys().ne(other.ramified.keys())
        {
            return false;
        }
        let tol = 1e-10;
        let ramified_match = self
            .ramified
            .iter()
            .all(|(k, v)| is_conjugate_multiset(v, &other.ramified[k], tol));
        let langlands_match = self
            .langlands
            .iter()
            .zip(&other.langlands)
            .all(|(a, b)| is_conjugate_multiset(a, b, tol));
        if !ramified_match || !langlands_match {
            return false;
        }
        let limit = [self.coverage_limit(), other.coverage_limit()]
            .into_iter()
            .flatten()
            .fold(DUALITY_CHECK_NORM, |acc, c| acc.min(c as f64));
        if limit < 2.0 {
            return true;
        }
        let table = prime_ideals_up_to(self.field, limit).expect("limit ≥ 2");
        table.iter().all(|ideal| {
            match (
                self.power_sums(ideal, self.degree),
                other.power_sums(ideal, other.degree),
            ) {
                (Ok(a), Ok(b)) => a.iter().zip(&b).all(|(x, y)| (x.conj() - y).norm() <= tol),
                _ => false,
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConductorMode {
    /// N𝔮_{π×π′} taken as N𝔮_π^{m′}·N𝔮_{π′}^m, no ramified parameters.
    UpperBound,
    /// Ramified parameters and conductor supplied explicitly.
    Explicit,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankinSelbergPair {
    left: AutomorphicRepData,
    right: AutomorphicRepData,
    delta: bool,
    ramified_keys: BTreeSet<IdealKey>,
    ramified_params: BTreeMap<IdealKey, Vec<Complex64>>,
    rs_langlands: Vec<Vec<Complex64>>,
    conductor_norm: u64,
    mode: ConductorMode,
}

fn default_rs_langlands(left: &AutomorphicRepData, right: &AutomorphicRepData) -> Vec<Vec<Complex64>> {
    if let (SatakeRule::Character(a), SatakeRule::Character(b)) = (&left.rule, &right.rule) {
        let mu = if a.parity() * b.parity() == 1 { 0.0 } else { 1.0 };
        return vec![vec![Complex64::new(mu, 0.0)]];
    }
    left.langlands
        .iter()
        .zip(&right.langlands)
        .map(|(a, b)| a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect())
        .collect()
}

fn checked_conductor_bound(n1: u64, m1: usize, n2: u64, m2: usize) -> Result<u64> {
    let overflow = || Error::Domain("Rankin–Selberg conductor bound overflows u64".into());
    let a = n1.checked_pow(m2 as u32).ok_or_else(overflow)?;
    let b = n2.checked_pow(m1 as u32).ok_or_else(overflow)?;
    a.checked_mul(b).ok_or_else(overflow)
}

/// Whether n divides n1^{e1}·n2^{e2}, without forming the product.
fn divides_power_product(n: u64, n1: u64, e1: usize, n2: u64, e2: usize) -> bool {
    let valuation = |mut x: u64, p: u64| {
        let mut v = 0usize;
        while x % p == 0 {
            x /= p;
            v += 1;
        }
        v
    };
    factorize(n)
        .into_iter()
        .all(|(p, e)| e as usize <= e1 * valuation(n1, p) + e2 * valuation(n2, p))
}

impl RankinSelbergPair {
    /// Upper-bound mode pairing of π and π′.
    pub fn new(left: &AutomorphicRepData, right: &AutomorphicRepData) -> Result<Self> {
        if left.field != right.field {
            return Err(Error::Domain("representations live over different fields".into()));
        }
        let conductor_norm =
            checked_conductor_bound(left.conductor_norm, left.degree, right.conductor_norm, right.degree)?;
        let ramified_keys = left.ramified.keys().chain(right.ramified.keys()).copied().collect();
        Ok(Self {
            delta: left.is_contragredient_of(right),
            rs_langlands: default_rs_langlands(left, right),
            left: left.clone(),
            right: right.clone(),
            ramified_keys,
            ramified_params: BTreeMap::new(),
            conductor_norm,
            mode: ConductorMode::UpperBound,
        })
    }

    /// π × π̃.
    pub fn with_contragredient(rep: &AutomorphicRepData) -> Self {
        Self::new(rep, &rep.contragredient()).expect("same field, bounded conductor")
    }

    /// Explicit mode: ramified parameters α_{j,j′}(𝔭) and N𝔮_{π×π′} supplied.
    pub fn explicit(
        left: &AutomorphicRepData,
        right: &AutomorphicRepData,
        ramified_params: BTreeMap<IdealKey, Vec<Complex64>>,
        conductor_norm: u64,
    ) -> Result<Self> {
        let mut pair = Self::new(left, right)?;
        let mm = left.degree * right.degree;
        let theta = pair.theta();
        for (key, params) in &ramified_params {
            if !pair.ramified_keys.contains(key) {
                return Err(Error::Domain(format!(
                    "prime {} (index {}) is unramified for both factors",
                    key.prime, key.index
                )));
            }
            if params.len() > mm {
                return Err(Error::Domain(format!("more than {mm} parameters at prime {}", key.prime)));
            }
            let norm = prime_ideal(left.field, *key)?.norm as f64;
            let limit = norm.powf(theta) * (1.0 + BOUND_SLACK);
            if params.iter().any(|a| a.norm() > limit) {
                return Err(Error::Domain(format!(
                    "ramified parameter at prime {} exceeds N𝔭^(θ+θ′)",
                    key.prime
                )));
            }
        }
        if conductor_norm == 0
            || !divides_power_product(
                conductor_norm,
                left.conductor_norm,
                right.degree,
                right.conductor_norm,
                left.degree,
            )
        {
            return Err(Error::Domain(format!(
                "N𝔮 = {conductor_norm} does not divide N𝔮_π^m′·N𝔮_π′^m"
            )));
        }
        pair.ramified_params = ramified_params;
        pair.conductor_norm = conductor_norm;
        pair.mode = ConductorMode::Explicit;
        Ok(pair)
    }

    /// Explicit mode for two Dirichlet characters: L(s, χ×ψ) = L(s, (χψ)*),
    /// the L-function of the primitive character inducing χψ.
    pub fn explicit_characters(left: &AutomorphicRepData, right: &AutomorphicRepData) -> Result<Self> {
        let (SatakeRule::Character(a), SatakeRule::Character(b)) = (&left.rule, &right.rule) else {
            return Err(Error::Domain("explicit character pairing needs two character reps".into()));
        };
        let product = a.product(b);
        let f = product.conductor();
        let keys: BTreeSet<IdealKey> = left.ramified.keys().chain(right.ramified.keys()).copied().collect();
        let params = keys
            .into_iter()
            .map(|key| {
                let p = key.prime;
                let list = if f % p == 0 {
                    Vec::new()
                } else {
                    vec![product.primitive_value(p as i64)]
                };
                (key, list)
            })
            .collect();
        Self::explicit(left, right, params, f)
    }

    /// Replaces the default μ_{j,j′}(v).
    pub fn with_langlands(mut self, mu: Vec<Vec<Complex64>>) -> Result<Self> {
        let mm = self.left.degree * self.right.degree;
        let places = self.left.field.places().len();
        if mu.len() != places || mu.iter().any(|v| v.len() != mm) {
            return Err(Error::Domain(format!("expected {places} lists of {mm} parameters")));
        }
        let theta = self.theta();
        if mu.iter().flatten().any(|z| z.re < -theta - BOUND_SLACK) {
            return Err(Error::Domain(format!("Re μ below −(θ+θ′) = {}", -theta)));
        }
        self.rs_langlands = mu;
        Ok(self)
    }

    pub fn left(&self) -> &AutomorphicRepData {
        &self.left
    }

    pub fn right(&self) -> &AutomorphicRepData {
        &self.right
    }

    pub fn field(&self) -> NumberField {
        self.left.field
    }

    /// δ_{π×π′}: whether π′ = π̃.
    pub fn delta(&self) -> bool {
        self.delta
    }

    pub fn mode(&self) -> ConductorMode {
        self.mode
    }

    pub fn conductor_norm(&self) -> u64 {
        self.conductor_norm
    }

    pub fn rs_langlands(&self) -> &[Vec<Complex64>] {
        &self.rs_langlands
    }

    pub fn ramified_keys(&self) -> &BTreeSet<IdealKey> {
        &self.ramified_keys
    }

    pub fn ramified_params(&self, key: IdealKey) -> &[Complex64] {
        self.ramified_params.get(&key).map_or(&[], Vec::as_slice)
    }

    pub fn is_ramified(&self, key: IdealKey) -> bool {
        self.ramified_keys.contains(&key)
    }

    /// θ_m + θ_{m′}.
    pub fn theta(&self) -> f64 {
        self.left.theta + self.right.theta
    }

    pub fn degree_product(&self) -> usize {
        self.left.degree * self.right.degree
    }

    /// a_{π×π′}(𝔭^k) for k = 1..=kmax.
    pub fn coefficients(&self, ideal: &PrimeIdeal, kmax: usize) -> Result<Vec<Complex64>> {
        if self.is_ramified(ideal.key()) {
            let alphas = self.ramified_params(ideal.key());
            let mut powers = alphas.to_vec();
            let mut out = Vec::with_capacity(kmax);
            for _ in 0..kmax {
                out.push(powers.iter().sum());
                for (p, a) in powers.iter_mut().zip(alphas) {
                    *p *= a;
                }
            }
            return Ok(out);
        }
        let a = self.left.power_sums(ideal, kmax)?;
        let b = self.right.power_sums(ideal, kmax)?;
        Ok(a.iter().zip(&b).map(|(x, y)| x * y).collect())
    }

    pub fn coefficient(&self, ideal: &PrimeIdeal, k: usize) -> Result<Complex64> {
        if k == 0 {
            return Err(Error::Domain("power index must be positive".into()));
        }
        Ok(self.coefficients(ideal, k)?[k - 1])
    }
}
