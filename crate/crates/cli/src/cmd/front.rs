use clap::Subcommand;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bqo::fronts::{front_verify, Front, FrontDescriptor, InfSet, NodeClass};

use super::{set_text, FrontArgs};
use crate::fixtures::{parse_infset, parse_list};
use crate::report::{CliResult, Report};
use crate::RunConfig;

/// Members listed in full before a report switches to a count.
const LIST_LIMIT: usize = 32;

#[derive(Subcommand)]
pub enum FrontCmd {
    /// Classify a finite set as member, interior node or outside.
    Member {
        #[command(flatten)]
        front: FrontArgs,
        set: String,
    },
    /// The member that is an initial segment of an infinite set.
    Step {
        #[command(flatten)]
        front: FrontArgs,
        infset: String,
    },
    /// The ray at n.
    Ray {
        #[command(flatten)]
        front: FrontArgs,
        n: u64,
    },
    /// The restriction to an infinite subset of the base.
    Restrict {
        #[command(flatten)]
        front: FrontArgs,
        infset: String,
    },
    /// The rank of the front.
    Rank {
        #[command(flatten)]
        front: FrontArgs,
    },
    /// Check the front conditions on the window and on sampled sets.
    Verify {
        #[command(flatten)]
        front: FrontArgs,
        /// Number of sampled infinite sets.
        #[arg(long, default_value_t = 16)]
        samples: usize,
    },
}

impl FrontCmd {
    pub fn name(&self) -> &'static str {
        match self {
            FrontCmd::Member { .. } => "member",
            FrontCmd::Step { .. } => "step",
            FrontCmd::Ray { .. } => "ray",
            FrontCmd::Restrict { .. } => "restrict",
            FrontCmd::Rank { .. } => "rank",
            FrontCmd::Verify { .. } => "verify",
        }
    }

    pub fn run(self, cfg: &RunConfig) -> CliResult {
        match self {
            FrontCmd::Member { front, set } => {
                let f = front.front()?;
                let s = parse_list(&set)?;
                let class = f.classify(&s);
                let label = match class {
                    NodeClass::Member => "member",
                    NodeClass::Interior => "interior node",
                    NodeClass::Outside => "outside the tree",
                };
                let mut r = Report::new("front member");
                r.line(format!("{} in {f}: {label}", set_text(&s)));
                r.field("front", f.to_string())
                    .field("set", &s)
                    .field("class", class)
                    .field("member", f.member(&s));
                Ok(r)
            }
            FrontCmd::Step { front, infset } => {
                let f = front.front()?;
                let y = parse_infset(&infset)?;
                let step = f.step(&y)?;
                let mut r = Report::new("front step");
                r.line(format!(
                    "{} is the member of {f} below {y} (reads {} entries)",
                    set_text(&step.member),
                    step.modulus
                ));
                r.field("front", f.to_string())
                    .field("infset", y.to_string())
                    .field("member", &step.member)
                    .field("modulus", step.modulus);
                Ok(r)
            }
            FrontCmd::Ray { front, n } => {
                let f = front.front()?;
                let ray = f.ray(n)?;
                Ok(describe(
                    &format!("ray of {f} at {n}"),
                    "front ray",
                    &ray,
                    cfg,
                ))
            }
            FrontCmd::Restrict { front, infset } => {
                let f = front.front()?;
                let z = parse_infset(&infset)?;
                let g = f.restrict(&z)?;
                Ok(describe(
                    &format!("{f} restricted to {z}"),
                    "front restrict",
                    &g,
                    cfg,
                ))
            }
            FrontCmd::Rank { front } => {
                let f = front.front()?;
                let rank = f.rank()?;
                let mut r = Report::new("front rank");
                r.line(rank.to_string());
                r.field("front", f.to_string())
                    .field("rank", rank.to_string());
                Ok(r)
            }
            FrontCmd::Verify { front, samples } => verify(&front.front()?, samples, cfg),
        }
    }
}

fn describe(title: &str, command: &str, f: &Front, cfg: &RunConfig) -> Report {
    let members = f.members_below(cfg.window);
    let descriptor = FrontDescriptor::from_front(f).ok();
    let mut r = Report::new(command);
    r.line(format!("{title}: {f}"));
    r.line(format!("{} members below {}", members.len(), cfg.window));
    for m in members.iter().take(LIST_LIMIT) {
        r.line(format!("  {}", set_text(m)));
    }
    if members.len() > LIST_LIMIT {
        r.line(format!("  ... {} more", members.len() - LIST_LIMIT));
    }
    r.field("front", f.to_string())
        .field("schema", f.schema().name())
        .field("base", f.base().to_string())
        .field("descriptor", descriptor)
        .field("members_below_window", members.len())
        .field(
            "members",
            members.iter().take(LIST_LIMIT).collect::<Vec<_>>(),
        )
        .field("members_truncated", members.len() > LIST_LIMIT);
    r
}

/// Prefix of the base below the window followed by the rest of the base.
fn sample_sets(f: &Front, count: usize, cfg: &RunConfig) -> Vec<InfSet> {
    let ground = f.base().below(cfg.window);
    let close = |prefix: Vec<u64>| {
        let tail = match prefix.last() {
            Some(&m) => f.base().after(m),
            None => f.base().clone(),
        };
        InfSet::explicit(prefix, tail).expect("prefix is increasing")
    };
    if cfg.exhaustive {
        let k = ground.len().min(10);
        return (0u32..1 << k)
            .map(|mask| {
                (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| ground[i])
                    .collect()
            })
            .map(close)
            .collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..count)
        .map(|_| {
            let prefix: Vec<u64> = ground
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            close(prefix)
        })
        .collect()
}

fn verify(f: &Front, count: usize, cfg: &RunConfig) -> CliResult {
    let samples = sample_sets(f, count, cfg);
    let v = front_verify(f, &samples, cfg.window);
    let mut r = Report::new("front verify");
    r.line(format!(
        "{f}: {} members below {}, {} sampled sets",
        v.members_checked, cfg.window, v.samples
    ));
    r.line(format!(
        "base consistent {}, initial-segment free {}, dense {}",
        v.base_consistent(),
        v.initial_segment_free(),
        v.dense()
    ));
    r.field("front", f.to_string())
        .field("all_pass", v.all_pass())
        .field("base_consistent", v.base_consistent())
        .field("initial_segment_free", v.initial_segment_free())
        .field("dense", v.dense())
        .field("report", v);
    Ok(r)
}
