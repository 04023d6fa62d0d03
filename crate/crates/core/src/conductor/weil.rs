//! Irreducible representations of the Weil groups of ℝ and ℂ, their
//! tensor products, and the local conductors 𝔠_v(it, φ).
//!
//! At a complex place every irreducible is a character χ_{k,ν}(z) =
//! (z/|z|)^k |z|^{2ν}, with μ = ν + |k|/2. At a real place the irreducibles
//! are characters of sign φ(j) = ±1, encoded by k = 1 − φ(j) ∈ {0, 2}, and
//! two-dimensional inductions Ind χ_{k,ν} with k ≥ 1; there μ = ν + k/2.

use num_complex::Complex64;

use crate::archimedean::PlaceKind;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeilRepParameter {
    place: PlaceKind,
    dim: u8,
    k: i64,
    nu: Complex64,
}

impl WeilRepParameter {
    /// Validated parameter. At a complex place |Re ν| ≤ 1/2 is required
    /// whenever |k| ≥ 2.
    pub fn new(place: PlaceKind, dim: u8, k: i64, nu: Complex64) -> Result<Self> {
        let w = Self::structural(place, dim, k, nu)?;
        if place == PlaceKind::Complex && k.abs() >= 2 && nu.re.abs() > 0.5 {
            return Err(Error::Domain(format!("|Re ν| = {} > 1/2 with |k| = {}", nu.re.abs(), k.abs())));
        }
        Ok(w)
    }

    fn structural(place: PlaceKind, dim: u8, k: i64, nu: Complex64) -> Result<Self> {
        let ok = match (place, dim) {
            (PlaceKind::Complex, 1) => true,
            (PlaceKind::Real, 1) => k == 0 || k == 2,
            (PlaceKind::Real, 2) => k >= 1,
            _ => false,
        };
        if !ok || !nu.re.is_finite() || !nu.im.is_finite() {
            return Err(Error::Domain(format!(
                "no irreducible Weil representation at a {place:?} place with dim {dim}, k = {k}, ν = {nu}"
            )));
        }
        Ok(Self { place, dim, k, nu })
    }

    pub fn complex(k: i64, nu: Complex64) -> Result<Self> {
        Self::new(PlaceKind::Complex, 1, k, nu)
    }

    /// Sign character of ℝ^× with φ(j) = `sign`, twisted by |·|^ν.
    pub fn real_character(sign: i8, nu: Complex64) -> Result<Self> {
        Self::new(PlaceKind::Real, 1, 1 - sign as i64, nu)
    }

    pub fn real_induced(k: i64, nu: Complex64) -> Result<Self> {
        Self::new(PlaceKind::Real, 2, k, nu)
    }

    pub fn place(&self) -> PlaceKind {
        self.place
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn nu(&self) -> Complex64 {
        self.nu
    }

    /// φ(j) for a real character.
    pub fn sign(&self) -> Option<i8> {
        (self.place == PlaceKind::Real && self.dim == 1).then(|| (1 - self.k) as i8)
    }

    pub fn mu(&self) -> Complex64 {
        match self.place {
            PlaceKind::Complex => self.nu + self.k.abs() as f64 / 2.0,
            PlaceKind::Real => self.nu + self.k as f64 / 2.0,
        }
    }
}

/// 𝔠_v(it, φ): (|μ+it|+3)² at a complex place or for a real 2-dimensional
/// φ, (|μ+it|+3) for a real character.
pub fn local_conductor(w: &WeilRepParameter, t: f64) -> f64 {
    let base = (w.mu() + Complex64::new(0.0, t)).norm() + 3.0;
    match (w.place, w.dim) {
        (PlaceKind::Real, 1) => base,
        _ => base * base,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeilSummand {
    pub param: WeilRepParameter,
    /// Set for the real 2⊗2 summand with k = k′, which is Ind of a
    /// character trivial on the circle and splits further.
    pub reducible: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeilDecomposition {
    pub summands: Vec<WeilSummand>,
}

impl WeilDecomposition {
    pub fn dimension(&self) -> u32 {
        self.summands.iter().map(|s| s.param.dim as u32).sum()
    }

    fn irreducible(param: WeilRepParameter) -> Self {
        Self {
            summands: vec![WeilSummand {
                param,
                reducible: false,
            }],
        }
    }
}

/// φ ⊗ φ′ split into the summands whose L-factors make up L_v(s, φ⊗φ′).
///
/// Real 2⊗2 is ordered so that k ≥ k′ and yields Ind χ_{k+k′, ν+ν′} and
/// Ind χ_{k−k′, ν−ν′}, whose factors are Γ_ℂ(s+μ+μ′) and Γ_ℂ(s+μ−μ′).
pub fn weil_tensor(w1: &WeilRepParameter, w2: &WeilRepParameter) -> Result<WeilDecomposition> {
    if w1.place != w2.place {
        return Err(Error::Domain("tensor product across different place kinds".into()));
    }
    let make = |dim, k, nu| WeilRepParameter::structural(w1.place, dim, k, nu);
    match (w1.place, w1.dim, w2.dim) {
        (PlaceKind::Complex, _, _) => Ok(WeilDecomposition::irreducible(make(1, w1.k + w2.k, w1.nu + w2.nu)?)),
        (PlaceKind::Real, 1, 1) => {
            let (s1, s2) = (1 - w1.k, 1 - w2.k);
            Ok(WeilDecomposition::irreducible(make(1, 1 - s1 * s2, w1.nu + w2.nu)?))
        }
        (PlaceKind::Real, 1, 2) => Ok(WeilDecomposition::irreducible(make(2, w2.k, w1.nu + w2.nu)?)),
        (PlaceKind::Real, 2, 1) => Ok(WeilDecomposition::irreducible(make(2, w1.k, w1.nu + w2.nu)?)),
        (PlaceKind::Real, _, _) => {
            let (a, b) = if w1.k >= w2.k { (w1, w2) } else { (w2, w1) };
            let sum = WeilSummand {
                param: make(2, a.k + b.k, a.nu + b.nu)?,
                reducible: false,
            };
            let diff_k = a.k - b.k;
            let diff_nu = a.nu - b.nu;
            // k = k′ gives Ind of a circle-trivial character; its L-factor is
            // still Γ_ℂ(s + ν − ν′), so it is kept as one summand.
            let diff = WeilSummand {
                param: WeilRepParameter {
                    place: PlaceKind::Real,
                    dim: 2,
                    k: diff_k,
                    nu: diff_nu,
                },
                reducible: diff_k == 0,
            };
            Ok(WeilDecomposition {
                summands: vec![sum, diff],
            })
        }
    }
}

/// log of 𝔠_v(φ)^{d′}𝔠_v(φ′)^{d}(|t|+3)^{dd′[F_v:ℝ]} minus log of 𝔠_v(it, φ⊗φ′).
pub fn conductor_inequality_margin(w1: &WeilRepParameter, w2: &WeilRepParameter, t: f64) -> Result<f64> {
    let decomposition = weil_tensor(w1, w2)?;
    let (d1, d2) = (w1.dim as f64, w2.dim as f64);
    let rhs = d2 * local_conductor(w1, 0.0).ln()
        + d1 * local_conductor(w2, 0.0).ln()
        + d1 * d2 * w1.place.degree() as f64 * (t.abs() + 3.0).ln();
    let lhs: f64 = decomposition
        .summands
        .iter()
        .map(|s| local_conductor(&s.param, t).ln())
        .sum();
    Ok(rhs - lhs)
}

/// 3|μ| + 1 − (|k|/2 + |ν|) with μ = ν + |k|/2.
///
/// Follows the three cases k = 0, |k| = 1, |k| ≥ 2; only the last needs
/// the hypothesis |Re ν| ≤ 1/2.
pub fn mu_helper_margin(k: i64, nu: Complex64) -> Result<f64> {
    let half_k = k.abs() as f64 / 2.0;
    match k.abs() {
        0 => Ok(2.0 * nu.norm() + 1.0),
        1 => {
            let mu = nu + 0.5;
            Ok(3.0 * mu.norm() + 1.0 - (0.5 + nu.norm()))
        }
        _ => {
            if nu.re.abs() > 0.5 {
                return Err(Error::Domain(format!(
                    "|Re ν| = {} exceeds 1/2 with |k| = {}",
                    nu.re.abs(),
                    k.abs()
                )));
            }
            let mu = nu + half_k;
            Ok(3.0 * mu.norm() + 1.0 - (half_k + nu.norm()))
        }
    }
}
