use std::collections::BTreeMap;

use clap::Subcommand;
use serde_json::json;

use bqo::order::{derived_relations, product_qo, sum_along_poset, Element, FiniteQO, QuasiOrder};

use crate::fixtures::{load_qo, Qo};
use crate::report::{CliError, CliResult, Report};
use crate::RunConfig;

#[derive(Subcommand)]
pub enum QoCmd {
    /// Check the laws of a quasi-order file or built-in order.
    Validate { source: String },
    /// The five relations between two elements.
    Relations {
        source: String,
        a: String,
        b: String,
    },
    /// The componentwise product of two finite orders.
    Product { left: String, right: String },
    /// The sum of finite orders along a finite poset.
    Sum {
        poset: String,
        /// One summand per poset element, as ELEM=QO.
        #[arg(long = "summand", value_name = "ELEM=QO")]
        summands: Vec<String>,
    },
}

impl QoCmd {
    pub fn name(&self) -> &'static str {
        match self {
            QoCmd::Validate { .. } => "validate",
            QoCmd::Relations { .. } => "relations",
            QoCmd::Product { .. } => "product",
            QoCmd::Sum { .. } => "sum",
        }
    }

    pub fn run(self, cfg: &RunConfig) -> CliResult {
        match self {
            QoCmd::Validate { source } => validate(&source, cfg),
            QoCmd::Relations { source, a, b } => relations(&source, &a, &b),
            QoCmd::Product { left, right } => {
                let (p, q) = (finite(&left)?, finite(&right)?);
                Ok(describe("qo product", &product_qo(&p, &q)))
            }
            QoCmd::Sum { poset, summands } => sum(&poset, &summands),
        }
    }
}

fn finite(src: &str) -> Result<FiniteQO<String>, CliError> {
    load_qo(src)?
        .finite
        .ok_or_else(|| CliError::domain("NotFinite", format!("{src} is not a finite quasi-order")))
}

/// The order in the file format, for chaining into other commands.
fn describe<T: Element>(command: &str, q: &FiniteQO<T>) -> Report {
    let elements: Vec<String> = q.elements().iter().map(T::to_string).collect();
    let leq: Vec<[String; 2]> = q
        .pairs()
        .iter()
        .map(|(a, b)| [a.to_string(), b.to_string()])
        .collect();
    let mut r = Report::new(command);
    r.line(format!(
        "{}: {} elements, {} pairs",
        q.name(),
        elements.len(),
        leq.len()
    ));
    for [a, b] in &leq {
        if a != b {
            r.line(format!("  {a} <= {b}"));
        }
    }
    r.field("name", q.name())
        .field("elements", &elements)
        .field("leq", &leq)
        .field("partial_order", q.is_partial_order());
    r
}

fn validate(source: &str, cfg: &RunConfig) -> CliResult {
    let qo = load_qo(source)?;
    if let Some(q) = &qo.finite {
        let mut r = describe("qo validate", q);
        r.field("valid", true)
            .field("finite", true)
            .field("fingerprint", format!("{:016x}", q.fingerprint()));
        r.line("valid: reflexive and transitive");
        return Ok(r);
    }
    let sample = (qo.sample)(cfg.window);
    let law = qo.order.validate_window(&sample);
    if let Some((a, b, c)) = &law.transitivity_violation {
        return Err(CliError::domain(
            "MissingTransitive",
            format!("{a} <= {b} and {b} <= {c} but not {a} <= {c}"),
        )
        .with_detail(json!({ "violating_triple": [a, b, c] })));
    }
    if let Some(a) = law
        .reflexivity_violation
        .as_ref()
        .or(law.outside_carrier.as_ref())
    {
        return Err(CliError::domain(
            "MissingReflexive",
            format!("law fails at {a}"),
        ));
    }
    let mut r = Report::new("qo validate");
    r.line(format!(
        "{}: laws hold on {} sampled elements",
        qo.name(),
        law.bound
    ));
    r.field("name", qo.name())
        .field("valid", true)
        .field("finite", false)
        .field("sampled_elements", law.bound);
    Ok(r)
}

fn relations(source: &str, a: &str, b: &str) -> CliResult {
    let qo: Qo = load_qo(source)?;
    let rel = derived_relations(&qo.order, &a.to_string(), &b.to_string())?;
    let mut r = Report::new("qo relations");
    let names = [
        ("leq", rel.leq),
        ("geq", rel.geq),
        ("equiv", rel.equiv),
        ("strict", rel.strict),
        ("incomparable", rel.incomparable),
    ];
    let holding: Vec<&str> = names.iter().filter(|p| p.1).map(|p| p.0).collect();
    r.line(format!(
        "{a} vs {b} in {}: {}",
        qo.name(),
        holding.join(", ")
    ));
    r.field("a", a).field("b", b).field("relations", rel);
    Ok(r)
}

fn sum(poset: &str, summands: &[String]) -> CliResult {
    let p = finite(poset)?;
    let mut family = BTreeMap::new();
    for s in summands {
        let (elem, src) = s
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("summand {s:?} is not ELEM=QO")))?;
        family.insert(elem.to_string(), finite(src)?);
    }
    Ok(describe("qo sum", &sum_along_poset(&p, &family)?))
}
