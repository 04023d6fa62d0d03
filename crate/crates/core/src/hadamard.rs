//! The Hadamard-product bound for −Re L′/L(s, π₁×π₂) evaluated against
//! supplied zeros, and the zero-table file format.
//!
//! Zero-table format: UTF-8 text, `#` starts a comment line, an optional
//! header line `delta=<int>` gives the order of the pole at s = 1 (default
//! 0), and each data line is `<gamma>` (β = 1/2 implied) or `<beta> <gamma>`.

use std::path::Path;

use num_complex::Complex64;

use crate::archimedean::c1;
use crate::conductor::rs_analytic_conductor;
use crate::error::{Error, Result};
use crate::repdata::RankinSelbergPair;

const ZETA_ZEROS: &str = include_str!("../data/zeta_zeros_100.txt");

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroList {
    zeros: Vec<(f64, f64)>,
    pole_order: i32,
    source_label: String,
}

impl ZeroList {
    /// Zeros ρ = β + iγ with 0 < β < 1, stored sorted by |γ| then β.
    pub fn new(mut zeros: Vec<(f64, f64)>, pole_order: i32, source_label: impl Into<String>) -> Result<Self> {
        if let Some((beta, gamma)) = zeros.iter().find(|(b, g)| !(*b > 0.0 && *b < 1.0) || !g.is_finite()) {
            return Err(Error::Domain(format!("ρ = {beta} + {gamma}i is not in the critical strip")));
        }
        zeros.sort_by(|a, b| a.1.abs().total_cmp(&b.1.abs()).then(a.0.total_cmp(&b.0)));
        Ok(Self {
            zeros,
            pole_order,
            source_label: source_label.into(),
        })
    }

    pub fn zeros(&self) -> &[(f64, f64)] {
        &self.zeros
    }

    pub fn pole_order(&self) -> i32 {
        self.pole_order
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// The list together with every conjugate ρ̄ not already present.
    pub fn with_conjugates(&self) -> Self {
        let mut all = self.zeros.clone();
        for &(b, g) in &self.zeros {
            if g != 0.0 && !self.zeros.contains(&(b, -g)) {
                all.push((b, -g));
            }
        }
        Self::new(all, self.pole_order, format!("{} (with conjugates)", self.source_label)).expect("same zeros")
    }
}

/// The first 100 nontrivial zeros of ζ in the upper half-plane, δ = 1.
pub fn zeta_zeros() -> ZeroList {
    parse_zero_table(ZETA_ZEROS, "bundled ζ zeros (mpmath)")
        .expect("bundled table parses")
        .zeros
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedZeros {
    pub zeros: ZeroList,
    pub warnings: Vec<String>,
}

pub fn parse_zero_table(text: &str, label: &str) -> Result<ParsedZeros> {
    let mut zeros = Vec::new();
    let mut delta: Option<i32> = None;
    let mut warnings = Vec::new();
    let mut last_ordinate: Option<f64> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        if let Some(value) = line.strip_prefix("delta=") {
            if delta.is_some() {
                return Err(parse_err("duplicate delta header".into()));
            }
            delta = Some(value.trim().parse().map_err(|_| parse_err(format!("bad delta value {value:?}")))?);
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let numbers: Vec<f64> = fields
            .iter()
            .map(|f| f.parse::<f64>().map_err(|_| parse_err(format!("not a number: {f:?}"))))
            .collect::<Result<_>>()?;
        let (beta, gamma) = match numbers.as_slice() {
            [g] => (0.5, *g),
            [b, g] => (*b, *g),
            _ => return Err(parse_err(format!("expected 1 or 2 columns, found {}", numbers.len()))),
        };
        if !(beta > 0.0 && beta < 1.0) || !gamma.is_finite() {
            return Err(parse_err(format!("β = {beta} outside (0, 1) or non-finite γ")));
        }
        if let Some(prev) = last_ordinate {
            if gamma.abs() < prev {
                warnings.push(format!("line {line_no}: ordinate |γ| = {} decreases", gamma.abs()));
            }
        }
        last_ordinate = Some(gamma.abs());
        zeros.push((beta, gamma));
    }
    Ok(ParsedZeros {
        zeros: ZeroList::new(zeros, delta.unwrap_or(0), label)?,
        warnings,
    })
}

pub fn load_zeros(path: &Path) -> Result<ParsedZeros> {
    let text = std::fs::read_to_string(path)?;
    parse_zero_table(&text, &path.display().to_string())
}

/// Re 1/(s − ρ) = (σ−β)/((σ−β)² + (t−γ)²).
pub fn zero_term(s: Complex64, rho: (f64, f64)) -> Result<f64> {
    let (db, dg) = (s.re - rho.0, s.im - rho.1);
    let denom = db * db + dg * dg;
    if denom == 0.0 {
        return Err(Error::Pole(format!("s coincides with the zero {} + {}i", rho.0, rho.1)));
    }
    Ok(db / denom)
}

/// Re(δ/(s−1)) − Σ_{first n zeros} Re(1/(s−ρ)) + (δ − c₁/2) + ½ log 𝔠(it, π₁×π₂),
/// with δ the pole order carried by the zero list.
///
/// Omitted zeros only contribute positive terms, so any prefix still gives
/// an upper bound for −Re L′/L(s, π₁×π₂).
pub fn hadamard_bound(s: Complex64, zeros: &ZeroList, pair: &RankinSelbergPair, subset_size: usize) -> Result<f64> {
    if !(s.re > 1.0 && s.re < 2.0) {
        return Err(Error::Domain(format!("Re(s) = {} must lie in (1, 2)", s.re)));
    }
    if subset_size > zeros.len() {
        return Err(Error::Domain(format!("subset of {subset_size} from {} zeros", zeros.len())));
    }
    if (zeros.pole_order == 1) != pair.delta() {
        return Err(Error::Domain(format!(
            "pole order {} is inconsistent with δ(π×π′) = {}",
            zeros.pole_order,
            pair.delta()
        )));
    }
    let delta = zeros.pole_order as f64;
    let pole = (Complex64::new(delta, 0.0) / (s - 1.0)).re;
    let mut zero_sum = 0.0;
    for rho in &zeros.zeros[..subset_size] {
        zero_sum += zero_term(s, *rho)?;
    }
    let conductor = rs_analytic_conductor(pair, s.im);
    Ok(pole - zero_sum + (delta - c1() / 2.0) + 0.5 * conductor.value.ln())
}
