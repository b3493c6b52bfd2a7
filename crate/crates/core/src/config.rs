//! Algebra definitions read from TOML.
//!
//! ```toml
//! n = 2
//! r = 1
//! mode = "generic"        # or "root", together with m = <order>
//! E = [[[0, 1], [-1, 0]]] # r matrices; a single matrix is also accepted
//! seed = 7
//!
//! [split]
//! basis = [[1, 0], [0, 1]]
//! t = 2
//! ```
//!
//! A corpus file lists several algebras as `[[system]]` tables, each with an
//! extra `name` key.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{ExponentSystem, Split};
use crate::scalars::FieldMode;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Matrices {
    Many(Vec<Vec<Vec<i64>>>),
    One(Vec<Vec<i64>>),
}

impl Matrices {
    fn into_vec(self) -> Vec<Vec<Vec<i64>>> {
        match self {
            Matrices::Many(v) => v,
            Matrices::One(m) => vec![m],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitConfig {
    pub basis: Vec<Vec<i64>>,
    pub t: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraConfig {
    pub n: usize,
    #[serde(default)]
    pub r: Option<usize>,
    pub mode: String,
    #[serde(default)]
    pub m: Option<u32>,
    #[serde(rename = "E")]
    pub e: Matrices,
    #[serde(default)]
    pub split: Option<SplitConfig>,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusConfig {
    #[serde(default)]
    pub system: Vec<NamedEntry>,
}

/// Corpus entry: the algebra keys plus `name`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedEntry {
    pub name: String,
    pub n: usize,
    #[serde(default)]
    pub r: Option<usize>,
    pub mode: String,
    #[serde(default)]
    pub m: Option<u32>,
    #[serde(rename = "E")]
    pub e: Matrices,
    #[serde(default)]
    pub split: Option<SplitConfig>,
}

impl NamedEntry {
    pub fn algebra(&self) -> AlgebraConfig {
        AlgebraConfig {
            n: self.n,
            r: self.r,
            mode: self.mode.clone(),
            m: self.m,
            e: self.e.clone(),
            split: self.split.clone(),
            seed: None,
        }
    }
}

impl AlgebraConfig {
    pub fn parse(text: &str) -> Result<AlgebraConfig> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<AlgebraConfig> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn field_mode(&self) -> Result<FieldMode> {
        let mode = match self.mode.as_str() {
            "generic" => {
                if self.m.is_some() {
                    return Err(Error::Config(
                        "key m is only valid with mode = \"root\"".into(),
                    ));
                }
                FieldMode::Generic {
                    r: self.r.unwrap_or(1),
                }
            }
            "root" => {
                let m = self
                    .m
                    .ok_or_else(|| Error::Config("mode = \"root\" needs m".into()))?;
                if let Some(r) = self.r {
                    if r != 1 {
                        return Err(Error::Config(format!("root mode has r = 1, got r = {r}")));
                    }
                }
                FieldMode::RootOfUnity { m }
            }
            other => {
                return Err(Error::Config(format!(
                    "mode must be \"generic\" or \"root\", got \"{other}\""
                )))
            }
        };
        mode.validate()?;
        Ok(mode)
    }

    pub fn system(&self) -> Result<ExponentSystem> {
        let mode = self.field_mode()?;
        let e = self.e.clone().into_vec();
        if e.len() != mode.params() {
            return Err(Error::Config(format!(
                "E holds {} matrices, expected r = {}",
                e.len(),
                mode.params()
            )));
        }
        ExponentSystem::new(self.n, mode, e)
    }

    pub fn split(&self) -> Result<Split> {
        let s = match &self.split {
            None => Split::standard(self.n),
            Some(c) => Split {
                basis: c.basis.clone(),
                t: c.t,
            },
        };
        s.ordered_rows(self.n)?;
        Ok(s)
    }
}

impl CorpusConfig {
    pub fn parse(text: &str) -> Result<CorpusConfig> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<CorpusConfig> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}
