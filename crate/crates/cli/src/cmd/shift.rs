use clap::Subcommand;

use bqo::shifts::{
    compose, critical_point, g_perfect_extract, orbit_map, rho, sigma, sigma_chains,
};
use bqo::{IncInjBig, IncInjU64};

use super::{set_text, SeqArgs};
use crate::fixtures::load_qo;
use crate::report::{CliResult, Report};
use crate::RunConfig;

#[derive(Subcommand)]
pub enum ShiftCmd {
    /// ρ(f) = f ∘ G, with the check ρ(f ∘ g) = ρ(f) ∘ s.
    Rho {
        f: String,
        g: String,
        #[arg(long, default_value_t = 64)]
        probe: u64,
    },
    /// σ(f), with the check σ(f ∘ s) = σ(f) ∘ g and both boundary chains.
    Sigma {
        f: String,
        g: String,
        #[arg(long, default_value_t = 64)]
        probe: u64,
    },
    /// The least k with k < g(k).
    Critical {
        g: String,
        #[arg(long, default_value_t = 64)]
        probe: u64,
    },
    /// G(n) = g^n(k_g).
    Orbit {
        g: String,
        #[arg(long, default_value_t = 64)]
        probe: u64,
    },
    /// A set on which the sequence is perfect along every listed map.
    Perfect {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value = "omega-leq")]
        qo: String,
        /// Increasing injection descriptors (repeatable).
        #[arg(long = "g", default_value = "succ")]
        gs: Vec<String>,
        #[arg(long, default_value_t = 64)]
        probe: u64,
    },
}

impl ShiftCmd {
    pub fn name(&self) -> &'static str {
        match self {
            ShiftCmd::Rho { .. } => "rho",
            ShiftCmd::Sigma { .. } => "sigma",
            ShiftCmd::Critical { .. } => "critical",
            ShiftCmd::Orbit { .. } => "orbit",
            ShiftCmd::Perfect { .. } => "perfect",
        }
    }

    pub fn run(self, cfg: &RunConfig) -> CliResult {
        let w = cfg.window;
        match self {
            ShiftCmd::Rho { f, g, probe } => {
                let (f, g) = (IncInjBig::parse(&f)?, IncInjBig::parse(&g)?);
                let rf = rho(&f, &g, probe)?;
                let lhs = rho(&compose(&f, &g), &g, probe)?;
                let rhs = compose(&rf, &IncInjBig::successor());
                let disagreement = lhs.first_disagreement(&rhs, w)?;
                let values = strings(&rf, w)?;
                let mut r = Report::new("shift rho");
                r.line(format!("rho(f) = {}", values.join(" ")));
                r.line(identity_line("rho(f∘g) = rho(f)∘s", disagreement, w));
                r.field("f", f.label())
                    .field("g", g.label())
                    .field("values", values)
                    .field("identity_holds", disagreement.is_none())
                    .field("first_disagreement", disagreement);
                Ok(r)
            }
            ShiftCmd::Sigma { f, g, probe } => {
                let (f, g) = (IncInjBig::parse(&f)?, IncInjBig::parse(&g)?);
                let sf = sigma(&f, &g, probe)?;
                let lhs = sigma(&compose(&f, &IncInjBig::successor()), &g, probe)?;
                let rhs = compose(&sf, &g);
                let disagreement = lhs.first_disagreement(&rhs, w)?;
                sf.check_increasing(w)?;
                let chains = sigma_chains(&f, &g, probe, w)?;
                let values = strings(&sf, w)?;
                let mut r = Report::new("shift sigma");
                r.line(format!("sigma(f) = {}", values.join(" ")));
                r.line(identity_line("sigma(f∘s) = sigma(f)∘g", disagreement, w));
                r.line(format!(
                    "increasing on the window; boundary chains hold at {} boundaries",
                    chains.boundaries_checked
                ));
                r.field("f", f.label())
                    .field("g", g.label())
                    .field("values", values)
                    .field("identity_holds", disagreement.is_none())
                    .field("first_disagreement", disagreement)
                    .field("chains", chains);
                Ok(r)
            }
            ShiftCmd::Critical { g, probe } => {
                let g = IncInjBig::parse(&g)?;
                let k = critical_point(&g, probe)?;
                let mut r = Report::new("shift critical");
                r.line(format!("k_g = {k} for g = {}", g.label()));
                r.field("g", g.label())
                    .field("critical_point", k.to_string())
                    .field("probe", probe);
                Ok(r)
            }
            ShiftCmd::Orbit { g, probe } => {
                let g = IncInjBig::parse(&g)?;
                let orbit = orbit_map(&g, probe)?;
                let values = strings(&orbit, w)?;
                let mut r = Report::new("shift orbit");
                r.line(format!("G = {}", values.join(" ")));
                r.field("g", g.label()).field("values", values);
                Ok(r)
            }
            ShiftCmd::Perfect { seq, qo, gs, probe } => {
                let f = seq.seq()?;
                let q = load_qo(&qo)?;
                let maps = gs
                    .iter()
                    .map(|d| IncInjU64::parse(d))
                    .collect::<Result<Vec<_>, _>>()?;
                let res = g_perfect_extract(&f, &q.order, &maps, w, probe)?;
                let mut r = Report::new("shift perfect");
                r.line(format!(
                    "{} into {} along {}: h enumerates {} then the base",
                    seq.rule,
                    q.name(),
                    gs.join(", "),
                    set_text(&res.h)
                ));
                r.field("front", f.front().to_string())
                    .field("rule", f.label())
                    .field("qo", q.name())
                    .field("gs", &gs)
                    .field("h", &res.h)
                    .field("stages", &res.stages);
                Ok(r)
            }
        }
    }
}

fn strings(f: &IncInjBig, w: u64) -> Result<Vec<String>, bqo::ShiftError> {
    Ok(f.prefix(w)?.iter().map(|v| v.to_string()).collect())
}

fn identity_line(name: &str, disagreement: Option<u64>, w: u64) -> String {
    match disagreement {
        None => format!("{name} holds on [0,{w})"),
        Some(n) => format!("{name} fails at {n}"),
    }
}
