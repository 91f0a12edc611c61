//! Code description files and word formatting.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, FieldCtx, FieldElement, FieldError};
use crate::grs::{CodeError, GrsCode};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed code description: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0} has {1} entries, expected n = {2}")]
    Count(&'static str, usize, usize),
    #[error("invalid field element '{0}'")]
    Element(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u64,
    #[serde(default = "one")]
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

/// `{"field": {"p", "m", "modulus"?}, "n", "k", "alphas"?, "betas"?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpec {
    pub field: FieldSpec,
    pub n: usize,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphas: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betas: Option<Vec<u64>>,
}

impl CodeSpec {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn build_field(&self) -> Result<Field, ConfigError> {
        let f = &self.field;
        Ok(FieldCtx::shared(f.p, f.m, f.modulus.as_deref())?)
    }

    /// Builds the code. Without explicit points, uses `0..n-1`, or `1..n`
    /// when `nonzero_points` is set.
    pub fn build(&self, nonzero_points: bool) -> Result<GrsCode, ConfigError> {
        let field = self.build_field()?;
        let convert = |name: &'static str, v: &[u64]| -> Result<Vec<FieldElement>, ConfigError> {
            if v.len() != self.n {
                return Err(ConfigError::Count(name, v.len(), self.n));
            }
            Ok(v.iter().map(|&x| field.elem(x)).collect::<Result<_, _>>()?)
        };
        let betas = self.betas.as_deref().map(|b| convert("betas", b)).transpose()?;
        let alphas = match &self.alphas {
            Some(a) => convert("alphas", a)?,
            None => {
                let start = u64::from(nonzero_points);
                (start..start + self.n as u64)
                    .map(|v| field.elem(v))
                    .collect::<Result<_, _>>()
                    .map_err(|_| CodeError::Dimensions {
                        n: self.n,
                        k: self.k,
                        q: field.size(),
                    })?
            }
        };
        Ok(GrsCode::new(&field, self.k, alphas, betas)?)
    }
}

/// Parses comma-separated integers as field elements.
pub fn parse_word(field: &Field, text: &str) -> Result<Vec<FieldElement>, ConfigError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            let t = t.trim();
            let v: u64 = t.parse().map_err(|_| ConfigError::Element(t.to_string()))?;
            Ok(field.elem(v)?)
        })
        .collect()
}

pub fn format_word(word: &[FieldElement]) -> String {
    word.iter()
        .map(|v| v.value().to_string())
        .collect::<Vec<_>>()
        .join(",")
}
