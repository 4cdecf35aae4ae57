use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Front, FrontError, InfSet, Schema, SeqSchema};
use crate::ordinal::OrdinalCNF;

/// JSON form of a named front.
///
/// ```json
/// {"schema": "uniform", "k": 2, "base": "omega"}
/// {"schema": "seq", "rays": {"0": {"schema": "trivial"}}, "default": {"schema": "schreier"}, "rank": [1, 1]}
/// ```
///
/// Bases of ray descriptors are ignored: a ray at `n` always lives on
/// `base / n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "schema", rename_all = "lowercase", deny_unknown_fields)]
pub enum FrontDescriptor {
    Trivial {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base: Option<String>,
    },
    Uniform {
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base: Option<String>,
    },
    Schreier {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base: Option<String>,
    },
    Seq {
        #[serde(default)]
        rays: BTreeMap<String, FrontDescriptor>,
        default: Box<FrontDescriptor>,
        rank: Vec<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base: Option<String>,
    },
}

impl FrontDescriptor {
    fn base(&self) -> Option<&str> {
        match self {
            FrontDescriptor::Trivial { base }
            | FrontDescriptor::Uniform { base, .. }
            | FrontDescriptor::Schreier { base }
            | FrontDescriptor::Seq { base, .. } => base.as_deref(),
        }
    }

    fn schema(&self) -> Result<Schema, FrontError> {
        Ok(match self {
            FrontDescriptor::Trivial { .. } => Schema::Trivial,
            FrontDescriptor::Uniform { k, .. } => Schema::uniform(*k),
            FrontDescriptor::Schreier { .. } => Schema::Schreier,
            FrontDescriptor::Seq {
                rays,
                default,
                rank,
                ..
            } => {
                let mut table = BTreeMap::new();
                for (key, ray) in rays {
                    let n = key
                        .parse::<u64>()
                        .map_err(|_| FrontError::BadDescriptor(format!("ray key {key:?}")))?;
                    table.insert(n, ray.schema()?);
                }
                let rank = OrdinalCNF::from_coefficients(rank);
                Schema::Seq(Arc::new(SeqSchema {
                    rays: table,
                    default: default.schema()?,
                    rank,
                }))
            }
        })
    }

    pub fn to_front(&self) -> Result<Front, FrontError> {
        let base = match self.base() {
            Some(b) => InfSet::parse(b)?,
            None => InfSet::omega(),
        };
        Ok(Front::new(self.schema()?, base))
    }

    /// Descriptor of a front built from named schemas.
    pub fn from_front(front: &Front) -> Result<Self, FrontError> {
        let mut d = Self::from_schema(front.schema())?;
        let base = front.base().to_string();
        if base != "omega" {
            match &mut d {
                FrontDescriptor::Trivial { base: b }
                | FrontDescriptor::Uniform { base: b, .. }
                | FrontDescriptor::Schreier { base: b }
                | FrontDescriptor::Seq { base: b, .. } => *b = Some(base),
            }
        }
        Ok(d)
    }

    fn from_schema(schema: &Schema) -> Result<Self, FrontError> {
        Ok(match schema {
            Schema::Trivial => FrontDescriptor::Trivial { base: None },
            Schema::Uniform(k) => FrontDescriptor::Uniform { k: *k, base: None },
            Schema::Schreier => FrontDescriptor::Schreier { base: None },
            Schema::Seq(seq) => FrontDescriptor::Seq {
                rays: seq
                    .rays
                    .iter()
                    .map(|(n, s)| Ok((n.to_string(), Self::from_schema(s)?)))
                    .collect::<Result<_, FrontError>>()?,
                default: Box::new(Self::from_schema(&seq.default)?),
                rank: seq.rank.coefficients(),
                base: None,
            },
            other => {
                return Err(FrontError::BadDescriptor(format!(
                    "the {} schema has no descriptor",
                    other.name()
                )))
            }
        })
    }
}
