use clap::Subcommand;

use bqo::SuperSeq;

use super::{set_text, SeqArgs};
use crate::fixtures::{load_qo, parse_infset};
use crate::report::{CliResult, Report};
use crate::RunConfig;

const LIST_LIMIT: usize = 32;

#[derive(Subcommand)]
pub enum SeqCmd {
    /// The value of f^↑ on an infinite set.
    Eval {
        #[command(flatten)]
        seq: SeqArgs,
        infset: String,
    },
    /// Whether the sequence is ⊑-minimal on the window.
    Spare {
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// The spare sequence below the given one.
    Sparsify {
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// Search for s ◁ t with f(s) ≤ f(t).
    Bad {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value = "rado")]
        qo: String,
    },
    /// Search for s ◁ t with f(s) ≰ f(t).
    Perfect {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value = "rado")]
        qo: String,
    },
}

impl SeqCmd {
    pub fn name(&self) -> &'static str {
        match self {
            SeqCmd::Eval { .. } => "eval",
            SeqCmd::Spare { .. } => "spare",
            SeqCmd::Sparsify { .. } => "sparsify",
            SeqCmd::Bad { .. } => "bad",
            SeqCmd::Perfect { .. } => "perfect",
        }
    }

    pub fn run(self, cfg: &RunConfig) -> CliResult {
        match self {
            SeqCmd::Eval { seq, infset } => {
                let f = seq.seq()?;
                let y = parse_infset(&infset)?;
                let e = f.eval_up(&y)?;
                let mut r = Report::new("seq eval");
                r.line(format!(
                    "{}({y}) = {} via member {} ({} entries read)",
                    seq.rule,
                    e.value,
                    set_text(&e.member),
                    e.modulus
                ));
                header(&mut r, &f)
                    .field("infset", y.to_string())
                    .field("eval", e);
                Ok(r)
            }
            SeqCmd::Spare { seq } => {
                let f = seq.seq()?;
                let s = f.spare_check(cfg.window)?;
                let mut r = Report::new("seq spare");
                match &s.witness {
                    None => r.line(format!(
                        "{} on {}: spare on the window",
                        seq.rule,
                        f.front()
                    )),
                    Some((a, b)) => r.line(format!(
                        "{} on {}: not spare, {} and {} carry the same values",
                        seq.rule,
                        f.front(),
                        set_text(a),
                        set_text(b)
                    )),
                };
                header(&mut r, &f).field("spare", s);
                Ok(r)
            }
            SeqCmd::Sparsify { seq } => {
                let f = seq.seq()?;
                let g = f.sparsify(cfg.window);
                let members = g.front().members_below(cfg.window);
                let mut values = Vec::new();
                for m in members.iter().take(LIST_LIMIT) {
                    values.push((m.clone(), g.value(m)?));
                }
                let spare = g.spare_check(cfg.window)?;
                let mut r = Report::new("seq sparsify");
                r.line(format!(
                    "{} members of the sparsified front below {}",
                    members.len(),
                    cfg.window
                ));
                for (m, v) in &values {
                    r.line(format!("  {} -> {v}", set_text(m)));
                }
                if members.len() > LIST_LIMIT {
                    r.line(format!("  ... {} more", members.len() - LIST_LIMIT));
                }
                r.line(format!("result spare on window: {}", spare.spare));
                header(&mut r, &f)
                    .field("members_below_window", members.len())
                    .field("values", values)
                    .field("members_truncated", members.len() > LIST_LIMIT)
                    .field("result_spare", spare);
                Ok(r)
            }
            SeqCmd::Bad { seq, qo } => {
                let f = seq.seq()?;
                let q = load_qo(&qo)?;
                let b = f.badness_check(&q.order, cfg.window)?;
                let mut r = Report::new("seq bad");
                match &b.good_witness {
                    None => r.line(format!(
                        "{} into {}: bad on the window ({} pairs scanned)",
                        seq.rule,
                        q.name(),
                        b.pairs_scanned
                    )),
                    Some((s, t)) => r.line(format!(
                        "{} into {}: good, f({}) <= f({})",
                        seq.rule,
                        q.name(),
                        set_text(s),
                        set_text(t)
                    )),
                };
                header(&mut r, &f).field("qo", q.name()).field("badness", b);
                Ok(r)
            }
            SeqCmd::Perfect { seq, qo } => {
                let f = seq.seq()?;
                let q = load_qo(&qo)?;
                let p = f.perfect_check(|a, b| q.leq(a, b), cfg.window)?;
                let mut r = Report::new("seq perfect");
                match &p.counterexample {
                    None => r.line(format!(
                        "{} into {}: perfect on the window ({} pairs scanned)",
                        seq.rule,
                        q.name(),
                        p.pairs_scanned
                    )),
                    Some((s, t)) => r.line(format!(
                        "{} into {}: not perfect, f({}) is not <= f({})",
                        seq.rule,
                        q.name(),
                        set_text(s),
                        set_text(t)
                    )),
                };
                header(&mut r, &f).field("qo", q.name()).field("perfect", p);
                Ok(r)
            }
        }
    }
}

fn header<'a>(r: &'a mut Report, f: &SuperSeq<String>) -> &'a mut Report {
    r.field("front", f.front().to_string())
        .field("rule", f.label())
}
