//! RepConfig: TOML documents describing one representation or a pair.

use std::collections::BTreeMap;
use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;

use crate::arithmetic::{character_group, IdealKey, NumberField};
use crate::error::{Error, Result};
use crate::repdata::{AutomorphicRepData, SatakeRule};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RepConfig {
    pub schema_version: u32,
    #[serde(default)]
    pub field: FieldConfig,
    pub rep: Option<RepSpec>,
    pub left: Option<RepSpec>,
    pub right: Option<RepSpec>,
}

#[derive(Debug, Clone, Deserialize, PartialEq, Default)]
#[serde(deny_unknown_fields, rename_all = "lowercase", tag = "kind")]
pub enum FieldConfig {
    #[default]
    Rational,
    Quadratic { d: i64 },
}

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(deny_unknown_fields, rename_all = "lowercase", tag = "kind")]
pub enum RepSpec {
    Trivial {
        #[serde(default)]
        contragredient: bool,
    },
    Dirichlet {
        modulus: u64,
        index: usize,
        #[serde(default)]
        contragredient: bool,
    },
    Synthetic(SyntheticSpec),
}

/// A complex number written as `[re, im]`.
pub type ComplexPair = [f64; 2];

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SyntheticSpec {
    pub degree: usize,
    pub theta: Option<f64>,
    #[serde(default = "one")]
    pub conductor_norm: u64,
    /// Pseudo-random Satake parameters when no explicit table is given.
    #[serde(default)]
    pub seed: u64,
    /// Explicit Satake parameters; requires `cutoff`.
    #[serde(default)]
    pub satake: Vec<LocalEntry>,
    pub cutoff: Option<u64>,
    #[serde(default)]
    pub ramified: Vec<LocalEntry>,
    /// One list of `degree` parameters per archimedean place.
    pub langlands: Option<Vec<Vec<ComplexPair>>>,
    #[serde(default)]
    pub contragredient: bool,
}

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct LocalEntry {
    pub prime: u64,
    #[serde(default)]
    pub index: u8,
    pub params: Vec<ComplexPair>,
}

fn one() -> u64 {
    1
}

fn complexes(v: &[ComplexPair]) -> Vec<Complex64> {
    v.iter().map(|[re, im]| Complex64::new(*re, *im)).collect()
}

impl RepConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: RepConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        if cfg.schema_version != SCHEMA_VERSION {
            return Err(Error::Config(format!(
                "schema_version {} is not supported (expected {SCHEMA_VERSION})",
                cfg.schema_version
            )));
        }
        match (&cfg.rep, &cfg.left, &cfg.right) {
            (Some(_), None, None) | (None, Some(_), Some(_)) => Ok(cfg),
            _ => Err(Error::Config("give either [rep] or both [left] and [right]".into())),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn number_field(&self) -> Result<NumberField> {
        match self.field {
            FieldConfig::Rational => Ok(NumberField::Rational),
            FieldConfig::Quadratic { d } => NumberField::quadratic(d),
        }
    }

    /// The two representations described; a single `[rep]` is returned twice.
    pub fn build_pair(&self) -> Result<(AutomorphicRepData, AutomorphicRepData)> {
        let field = self.number_field()?;
        match (&self.rep, &self.left, &self.right) {
            (Some(rep), _, _) => {
                let r = rep.build(field)?;
                Ok((r.clone(), r))
            }
            (None, Some(l), Some(r)) => Ok((l.build(field)?, r.build(field)?)),
            _ => Err(Error::Config("give either [rep] or both [left] and [right]".into())),
        }
    }
}

impl RepSpec {
    pub fn build(&self, field: NumberField) -> Result<AutomorphicRepData> {
        let (rep, dual) = match self {
            RepSpec::Trivial { contragredient } => (AutomorphicRepData::trivial(field), *contragredient),
            RepSpec::Dirichlet {
                modulus,
                index,
                contragredient,
            } => {
                if field != NumberField::Rational {
                    return Err(Error::Config("Dirichlet characters need the rational field".into()));
                }
                if *modulus == 0 {
                    return Err(Error::Config("modulus must be positive".into()));
                }
                let group = character_group(*modulus);
                let chi = group.get(*index).ok_or_else(|| {
                    Error::Config(format!(
                        "character index {index} out of range: there are {} characters mod {modulus}",
                        group.len()
                    ))
                })?;
                (AutomorphicRepData::from_character(chi), *contragredient)
            }
            RepSpec::Synthetic(spec) => (spec.build(field)?, spec.contragredient),
        };
        Ok(if dual { rep.contragredient() } else { rep })
    }
}

impl SyntheticSpec {
    fn build(&self, field: NumberField) -> Result<AutomorphicRepData> {
        let rule = if self.satake.is_empty() {
            if self.cutoff.is_some() {
                return Err(Error::Config("cutoff given without satake entries".into()));
            }
            SatakeRule::Seeded {
                seed: self.seed,
                conjugated: false,
            }
        } else {
            let cutoff = self
                .cutoff
                .ok_or_else(|| Error::Config("explicit satake entries need a cutoff".into()))?;
            let entries: BTreeMap<IdealKey, Vec<Complex64>> = self
                .satake
                .iter()
                .map(|e| (IdealKey::new(e.prime, e.index), complexes(&e.params)))
                .collect();
            SatakeRule::Table { entries, cutoff }
        };
        let mut b = AutomorphicRepData::builder(field, self.degree)
            .rule(rule)
            .conductor_norm(self.conductor_norm);
        if let Some(theta) = self.theta {
            b = b.theta(theta);
        }
        for e in &self.ramified {
            b = b.ramified(IdealKey::new(e.prime, e.index), complexes(&e.params));
        }
        if let Some(l) = &self.langlands {
            b = b.langlands(l.iter().map(|v| complexes(v)).collect());
        }
        b.build()
    }
}
