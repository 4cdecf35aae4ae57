use clap::Subcommand;

use bqo::fronts::{Front, InfSet};
use bqo::ramsey::{dichotomy_extract, finite_ramsey, laver_embed, nw_extract, Coloring};

use super::{set_text, FrontArgs, SeqArgs};
use crate::fixtures::load_qo;
use crate::report::{CliError, CliResult, Report};
use crate::RunConfig;

#[derive(Subcommand)]
pub enum ExtractCmd {
    /// Homogeneous set for a coloring of the k-sets below the window.
    Ramsey {
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// sum-mod:r, size-mod:r, min-mod:r or max-mod:r.
        #[arg(long, default_value = "sum-mod:2")]
        coloring: String,
        /// Stop at the first homogeneous set of this size.
        #[arg(long)]
        target: Option<usize>,
    },
    /// Homogeneous set for a coloring of a front.
    Nw {
        #[command(flatten)]
        front: FrontArgs,
        #[arg(long, default_value = "sum-mod:2")]
        coloring: String,
        #[arg(long, default_value_t = 3)]
        target: usize,
    },
    /// A set on which f(s) ≤ f(t) for all s ◁ t, or on which it always fails.
    Dichotomy {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value = "rado")]
        qo: String,
    },
    /// A copy of Rado's order inside a bad sequence on pairs.
    Laver {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value = "rado")]
        qo: String,
    },
}

impl ExtractCmd {
    pub fn name(&self) -> &'static str {
        match self {
            ExtractCmd::Ramsey { .. } => "ramsey",
            ExtractCmd::Nw { .. } => "nw",
            ExtractCmd::Dichotomy { .. } => "dichotomy",
            ExtractCmd::Laver { .. } => "laver",
        }
    }

    pub fn run(self, cfg: &RunConfig) -> CliResult {
        match self {
            ExtractCmd::Ramsey {
                k,
                coloring,
                target,
            } => {
                let c = named(Front::uniform(k, InfSet::omega()), &coloring)?;
                let colors = c.colors();
                let res = finite_ramsey(
                    cfg.window,
                    k,
                    colors,
                    move |s| c.color(s).unwrap_or(colors),
                    target,
                )?;
                let mut r = Report::new("extract ramsey");
                r.line(format!(
                    "{coloring} on {k}-sets below {}: Z = {} has color {} (|Z| = {})",
                    cfg.window,
                    set_text(&res.z),
                    res.color,
                    res.z.len()
                ));
                r.field("coloring", &coloring)
                    .field("k", k)
                    .field("z", &res.z)
                    .field("color", res.color)
                    .field("search_exhaustive", res.exhaustive);
                Ok(r)
            }
            ExtractCmd::Nw {
                front,
                coloring,
                target,
            } => {
                let f = front.front()?;
                let c = named(f.clone(), &coloring)?;
                let res = nw_extract(&c, cfg.window, target)?;
                let mut r = Report::new("extract nw");
                r.line(format!(
                    "{coloring} on {f}: Z = {} with every member inside colored {} ({} members)",
                    set_text(&res.z),
                    res.side,
                    res.members_inside
                ));
                r.field("front", f.to_string())
                    .field("coloring", &coloring)
                    .field("z", &res.z)
                    .field("color", res.side)
                    .field("target", res.target)
                    .field("members_inside", res.members_inside)
                    .field("search_exhaustive", res.exhaustive);
                Ok(r)
            }
            ExtractCmd::Dichotomy { seq, qo } => {
                let f = seq.seq()?;
                let q = load_qo(&qo)?;
                let res = dichotomy_extract(&f, |a, b| q.leq(a, b), cfg.window)?;
                let mut r = Report::new("extract dichotomy");
                r.line(format!(
                    "{} into {}: side {:?} on Z = {} ({} colored members inside)",
                    seq.rule,
                    q.name(),
                    res.side,
                    set_text(&res.z),
                    res.members_inside
                ));
                r.field("front", f.front().to_string())
                    .field("rule", f.label())
                    .field("qo", q.name())
                    .field("result", res);
                Ok(r)
            }
            ExtractCmd::Laver { seq, qo } => {
                let f = seq.seq()?;
                let q = load_qo(&qo)?;
                let res = laver_embed(&f, &q.order, cfg.window)?;
                let mut r = Report::new("extract laver");
                r.line(format!(
                    "{} into {}: X = {} carries Rado's order ({} ordered pairs verified)",
                    seq.rule,
                    q.name(),
                    set_text(&res.x),
                    res.pairs_verified
                ));
                r.field("front", f.front().to_string())
                    .field("rule", f.label())
                    .field("qo", q.name())
                    .field("result", res);
                Ok(r)
            }
        }
    }
}

fn named(front: Front, rule: &str) -> Result<Coloring, CliError> {
    Coloring::named(front, rule).ok_or_else(|| {
        CliError::usage(format!(
            "unknown coloring {rule:?} (expected sum-mod:r, size-mod:r, min-mod:r or max-mod:r)"
        ))
    })
}
