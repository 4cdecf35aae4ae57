//! Resolving command-line inputs: quasi-orders, fronts, valuations and
//! number lists, either by built-in name or from a file.

use std::fs;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value as Json;

use bqo::fronts::{Front, FrontDescriptor, InfSet};
use bqo::order::{antichain, chain, rado_cmp, CodedQO, FiniteQO, QuasiOrder, RadoPair};
use bqo::{SuperSeq, Value};

use crate::report::CliError;

/// A quasi-order on textual atoms.
pub struct Qo {
    pub order: CodedQO<String>,
    /// Present when the order is finite.
    pub finite: Option<FiniteQO<String>>,
    /// Elements the laws are checked on when the order is infinite.
    pub sample: Box<dyn Fn(u64) -> Vec<String>>,
}

impl Qo {
    pub fn name(&self) -> String {
        self.order.name()
    }

    pub fn leq(&self, a: &str, b: &str) -> bool {
        self.order.leq(&a.to_string(), &b.to_string())
    }

    fn from_finite(qo: FiniteQO<String>) -> Self {
        let q = Arc::new(qo.clone());
        let (c, l) = (q.clone(), q.clone());
        let order = CodedQO::new(
            qo.name(),
            move |x: &String| c.contains(x),
            move |a: &String, b: &String| l.leq(a, b),
        );
        let elements = qo.elements().to_vec();
        Qo {
            order,
            finite: Some(qo),
            sample: Box::new(move |_| elements.clone()),
        }
    }
}

pub fn parse_rado(s: &str) -> Option<RadoPair> {
    let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
    let (a, b) = inner.split_once(',')?;
    RadoPair::new(a.trim().parse().ok()?, b.trim().parse().ok()?).ok()
}

/// The atoms-only order in which each atom is comparable only to itself.
pub fn discrete() -> Qo {
    Qo {
        order: CodedQO::new(
            "discrete",
            |_: &String| true,
            |a: &String, b: &String| a == b,
        ),
        finite: None,
        sample: Box::new(|_| Vec::new()),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QoFile {
    #[serde(default)]
    name: Option<String>,
    elements: Vec<Json>,
    leq: Vec<(Json, Json)>,
}

fn atom_text(v: &Json) -> String {
    match v {
        Json::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// `rado`, `omega-leq`, `omega-eq`, `chain:k`, `antichain:k`, or a path to a
/// JSON file `{"elements": [...], "leq": [[a, b], ...]}`.
pub fn load_qo(src: &str) -> Result<Qo, CliError> {
    let count = |p: &str| -> Result<u64, CliError> {
        p.parse()
            .map_err(|_| CliError::usage(format!("bad size in {src:?}")))
    };
    let relabel = |q: FiniteQO<u64>| -> Result<Qo, CliError> {
        let name = q.name();
        Ok(Qo::from_finite(q.relabel(u64::to_string)?.with_name(name)))
    };
    match src {
        "rado" => Ok(Qo {
            order: CodedQO::new(
                "rado",
                |x: &String| parse_rado(x).is_some(),
                |a: &String, b: &String| match (parse_rado(a), parse_rado(b)) {
                    (Some(s), Some(t)) => rado_cmp(s, t),
                    _ => false,
                },
            ),
            finite: None,
            sample: Box::new(|w| {
                (0..w)
                    .flat_map(|m| (m + 1..w).map(move |n| format!("{{{m},{n}}}")))
                    .collect()
            }),
        }),
        "omega-leq" | "omega-eq" => {
            let eq = src == "omega-eq";
            Ok(Qo {
                order: CodedQO::new(
                    src,
                    |x: &String| x.parse::<u64>().is_ok(),
                    move |a: &String, b: &String| match (a.parse::<u64>(), b.parse::<u64>()) {
                        (Ok(a), Ok(b)) => {
                            if eq {
                                a == b
                            } else {
                                a <= b
                            }
                        }
                        _ => false,
                    },
                ),
                finite: None,
                sample: Box::new(|w| (0..w).map(|n| n.to_string()).collect()),
            })
        }
        _ => {
            if let Some(k) = src.strip_prefix("chain:") {
                return relabel(chain(count(k)?));
            }
            if let Some(k) = src.strip_prefix("antichain:") {
                return relabel(antichain(count(k)?));
            }
            Ok(Qo::from_finite(read_qo_file(src)?))
        }
    }
}

/// Reads and validates a quasi-order file.
pub fn read_qo_file(path: &str) -> Result<FiniteQO<String>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::domain("Io", format!("cannot read {path}: {e}")))?;
    let file: QoFile = serde_json::from_str(&text)?;
    let elements: Vec<String> = file.elements.iter().map(atom_text).collect();
    let pairs: Vec<(String, String)> = file
        .leq
        .iter()
        .map(|(a, b)| (atom_text(a), atom_text(b)))
        .collect();
    let qo = FiniteQO::validate(elements, &pairs).map_err(|e| {
        let detail = match &e {
            bqo::OrderError::MissingTransitive(a, b, c) => {
                Some(serde_json::json!({ "violating_triple": [a, b, c] }))
            }
            bqo::OrderError::MissingReflexive(a) => {
                Some(serde_json::json!({ "missing_reflexive": a }))
            }
            _ => None,
        };
        let err = CliError::from(e);
        match detail {
            Some(d) => err.with_detail(d),
            None => err,
        }
    })?;
    let name = file.name.unwrap_or_else(|| path.to_string());
    Ok(qo.with_name(name))
}

/// `trivial`, `uniform:k`, `schreier`, inline JSON (`{...}`) or a path to a
/// JSON front descriptor. `base` replaces the descriptor's base.
pub fn load_front(schema: &str, base: Option<&str>) -> Result<Front, CliError> {
    let descriptor: FrontDescriptor = match schema {
        "trivial" => FrontDescriptor::Trivial { base: None },
        "schreier" => FrontDescriptor::Schreier { base: None },
        _ => {
            if let Some(k) = schema.strip_prefix("uniform:") {
                let k = k
                    .parse()
                    .map_err(|_| CliError::usage(format!("bad uniform size in {schema:?}")))?;
                FrontDescriptor::Uniform { k, base: None }
            } else if schema.trim_start().starts_with('{') {
                serde_json::from_str(schema)?
            } else {
                let text = fs::read_to_string(schema).map_err(|e| {
                    CliError::usage(format!(
                        "unknown schema {schema:?} (expected trivial, uniform:k, schreier, JSON or a file): {e}"
                    ))
                })?;
                serde_json::from_str(&text)?
            }
        }
    };
    let front = descriptor.to_front()?;
    match base {
        Some(b) => Ok(Front::new(front.schema().clone(), InfSet::parse(b)?)),
        None => Ok(front),
    }
}

pub fn parse_infset(text: &str) -> Result<InfSet, CliError> {
    Ok(InfSet::parse(text)?)
}

/// `1,2,5`, `[1,2,5]`, `{1,2,5}` or the empty `{}`.
pub fn parse_list(text: &str) -> Result<Vec<u64>, CliError> {
    let inner = text
        .trim()
        .trim_start_matches(['[', '{'])
        .trim_end_matches([']', '}'])
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| CliError::usage(format!("not a list of naturals: {text:?}")))
        })
        .collect()
}

/// A named valuation with its values written as atoms.
pub fn load_seq(front: Front, rule: &str) -> Result<SuperSeq<String>, CliError> {
    let f = SuperSeq::named(front, rule)?;
    Ok(f.map(rule, |v: Value| v.to_string()))
}
