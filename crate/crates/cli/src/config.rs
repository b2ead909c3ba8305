//! JSON job configuration.

use std::path::Path;

use num_rational::Rational64;
use serde::Deserialize;
use wkl_core::covering::CoveringDatum;
use wkl_core::rootdata::{LatticeKind, RootDatum};
use wkl_core::scattering::{NumericOptions, RankMode};
use wkl_core::whittaker::{exceptional_character, CharValue, GenuineCharacter, Setting};

use crate::CliError;

#[derive(Clone, Debug, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub covering: Option<CoveringSpec>,
    /// Degrees to sweep over instead of `covering.n`.
    pub ns: Option<Vec<i64>>,
    pub character: Option<CharacterSpec>,
    pub command: Option<String>,
    pub format: Option<String>,
    #[serde(default)]
    pub scattering: ScatteringSpec,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CoveringSpec {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    #[serde(default = "default_lattice")]
    pub lattice: String,
    /// `Q` on the simple coroots; defaults to all ones for simply laced types.
    #[serde(rename = "Q")]
    pub q: Option<Vec<i64>>,
    pub n: i64,
    #[serde(default = "default_xi")]
    pub xi: i64,
}

fn default_lattice() -> String {
    "sc".into()
}

fn default_xi() -> i64 {
    1
}

/// Either the simple roots (numbered from 1) where `chi` takes the value
/// `q^{-1}`, or explicit values on the Hermite basis of `Y_{Q,n}`.
#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum CharacterSpec {
    Exceptional(ExceptionalSpec),
    Values(ValuesSpec),
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ExceptionalSpec {
    pub exceptional_on: Vec<usize>,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ValuesSpec {
    pub values: Vec<ValueSpec>,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ValueSpec {
    pub q_exp: String,
    #[serde(default = "zero_string")]
    pub phase: String,
}

fn zero_string() -> String {
    "0".into()
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ScatteringSpec {
    #[serde(default = "default_mode")]
    pub mode: String,
    #[serde(default = "default_q")]
    pub q: u64,
    #[serde(default = "default_seeds")]
    pub seeds: u64,
    #[serde(default = "default_tol")]
    pub tol: f64,
}

fn default_mode() -> String {
    "numeric".into()
}

fn default_q() -> u64 {
    9
}

fn default_seeds() -> u64 {
    5
}

fn default_tol() -> f64 {
    1e-8
}

impl Default for ScatteringSpec {
    fn default() -> Self {
        ScatteringSpec {
            mode: default_mode(),
            q: default_q(),
            seeds: default_seeds(),
            tol: default_tol(),
        }
    }
}

impl ScatteringSpec {
    pub fn mode(&self) -> Result<RankMode, CliError> {
        self.mode.parse().map_err(|e: wkl_core::Error| CliError::Schema(e.to_string()))
    }

    pub fn options(&self) -> Result<NumericOptions, CliError> {
        if self.seeds == 0 {
            return Err(CliError::Schema("seeds must be positive".into()));
        }
        if self.q < 2 {
            return Err(CliError::Schema("q must be at least 2".into()));
        }
        Ok(NumericOptions {
            q: self.q as f64,
            seeds: (1..=self.seeds).collect(),
            tol: self.tol,
        })
    }
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn covering(&self) -> Result<&CoveringSpec, CliError> {
        self.covering
            .as_ref()
            .ok_or_else(|| CliError::Schema("missing `covering`".into()))
    }

    /// `ns` if given, else the single degree of the covering.
    pub fn degrees(&self) -> Result<Vec<i64>, CliError> {
        match &self.ns {
            Some(v) if v.is_empty() => Err(CliError::Schema("`ns` is empty".into())),
            Some(v) => Ok(v.clone()),
            None => Ok(vec![self.covering()?.n]),
        }
    }
}

impl CoveringSpec {
    pub fn cartan_type(&self) -> Result<char, CliError> {
        let mut it = self.ty.chars();
        match (it.next(), it.next()) {
            (Some(c), None) => Ok(c.to_ascii_uppercase()),
            _ => Err(CliError::Schema(format!("type must be one letter, got `{}`", self.ty))),
        }
    }

    pub fn root_datum(&self) -> Result<RootDatum, CliError> {
        let lattice: LatticeKind = self.lattice.parse().map_err(|e: wkl_core::Error| CliError::Schema(e.to_string()))?;
        Ok(RootDatum::new(self.cartan_type()?, self.rank, lattice)?)
    }

    pub fn q_simple(&self) -> Result<Vec<i64>, CliError> {
        match &self.q {
            Some(q) => Ok(q.clone()),
            None if matches!(self.cartan_type()?, 'A' | 'D' | 'E') => Ok(vec![1; self.rank]),
            None => Err(CliError::Schema(format!("`Q` is required for type {}", self.ty))),
        }
    }

    pub fn setting(&self, n: i64) -> Result<Setting, CliError> {
        let cov = CoveringDatum::new(self.root_datum()?, &self.q_simple()?, n, self.xi)?;
        Ok(Setting::new(cov)?)
    }
}

fn rational(s: &str) -> Result<Rational64, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Schema(format!("`{s}` is not a rational number")))
}

/// The character a job asks for, defaulting to `Phi(chi) = Delta`.
pub fn character(given: Option<&CharacterSpec>, setting: &Setting) -> Result<GenuineCharacter, CliError> {
    let rank = setting.weyl.rank;
    match given {
        None => Ok(exceptional_character(&setting.cov, &setting.weyl, &(0..rank).collect::<Vec<_>>())?),
        Some(CharacterSpec::Exceptional(e)) => {
            let phi = e
                .exceptional_on
                .iter()
                .map(|&j| {
                    if (1..=rank).contains(&j) {
                        Ok(j - 1)
                    } else {
                        Err(CliError::Schema(format!("simple roots are numbered 1..={rank}, got {j}")))
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(exceptional_character(&setting.cov, &setting.weyl, &phi)?)
        }
        Some(CharacterSpec::Values(v)) => {
            let vals = v
                .values
                .iter()
                .map(|v| Ok(CharValue::new(rational(&v.q_exp)?, rational(&v.phase)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(GenuineCharacter::new(&setting.cov, vals)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_keys_are_rejected() {
        let bad = r#"{"covering": {"type": "A", "rank": 2, "n": 2, "colour": 1}}"#;
        assert!(matches!(JobConfig::from_json(bad), Err(CliError::Schema(_))));
        let bad = r#"{"covering": {"type": "A", "rank": 2, "n": 2}, "extra": true}"#;
        assert!(matches!(JobConfig::from_json(bad), Err(CliError::Schema(_))));
    }

    #[test]
    fn character_specs_parse() {
        let c = JobConfig::from_json(
            r#"{"covering": {"type": "A", "rank": 2, "Q": [1, 1], "n": 2},
                "character": {"exceptional_on": [1, 2]}}"#,
        )
        .unwrap();
        assert_eq!(c.character, Some(CharacterSpec::Exceptional(ExceptionalSpec { exceptional_on: vec![1, 2] })));
        let c = JobConfig::from_json(
            r#"{"covering": {"type": "A", "rank": 1, "n": 1},
                "character": {"values": [{"q_exp": "-1/2", "phase": "1/4"}]}}"#,
        )
        .unwrap();
        let s = c.covering().unwrap().setting(1).unwrap();
        let chi = character(c.character.as_ref(), &s).unwrap();
        assert_eq!(chi.values[0].q_exp, Rational64::new(-1, 2));
    }

    #[test]
    fn non_simply_laced_types_need_q() {
        let c = JobConfig::from_json(r#"{"covering": {"type": "C", "rank": 2, "n": 3}}"#).unwrap();
        assert!(c.covering().unwrap().setting(3).is_err());
    }
}
