use clap::Subcommand;

use bqo::fronts::{Front, InfSet};
use bqo::order::{rado_antichain_witness, Rado, RadoPair};
use bqo::SuperSeq;

use crate::report::{CliError, CliResult, Report};
use crate::RunConfig;

#[derive(Subcommand)]
pub enum RadoCmd {
    /// Confirm {m,n} lies in D_m but not in D_n.
    Witness { m: u64, n: u64 },
    /// The antichain witnesses and badness of the identity on the window.
    Demo,
}

impl RadoCmd {
    pub fn name(&self) -> &'static str {
        match self {
            RadoCmd::Witness { .. } => "witness",
            RadoCmd::Demo => "demo",
        }
    }

    pub fn run(self, cfg: &RunConfig) -> CliResult {
        match self {
            RadoCmd::Witness { m, n } => {
                let w = rado_antichain_witness(m, n)?;
                let mut r = Report::new("rado witness");
                r.line(format!(
                    "{}: in D_{m} {}, in D_{n} {} (generators checked up to {})",
                    w.pair, w.in_d_m, w.in_d_n, w.generator_bound
                ));
                r.field("witness", w.pair.to_string())
                    .field("m", m)
                    .field("n", n)
                    .field("in_d_m", w.in_d_m)
                    .field("in_d_n", w.in_d_n)
                    .field("confirmed", w.in_d_m && !w.in_d_n)
                    .field("generator_bound", w.generator_bound);
                Ok(r)
            }
            RadoCmd::Demo => demo(cfg),
        }
    }
}

fn demo(cfg: &RunConfig) -> CliResult {
    let n = cfg.window;
    let mut confirmed = 0;
    let mut first_failure = None;
    for b in 1..n {
        for a in 0..b {
            let w = rado_antichain_witness(a, b)?;
            if w.in_d_m && !w.in_d_n {
                confirmed += 1;
            } else if first_failure.is_none() {
                first_failure = Some(w.pair.to_string());
            }
        }
    }
    let f = SuperSeq::new(Front::uniform(2, InfSet::omega()), "identity", |s| {
        RadoPair::from_slice(s).ok()
    });
    let bad = f.badness_check(&Rado, n).map_err(CliError::from)?;
    let mut r = Report::new("rado demo");
    r.line(format!(
        "antichain witnesses confirmed: {confirmed} pairs m < n < {n}"
    ));
    r.line(format!(
        "identity on pairs: bad on window {} ({} shift pairs scanned)",
        bad.bad_on_window, bad.pairs_scanned
    ));
    r.field("antichain_pairs_confirmed", confirmed)
        .field("antichain_failure", first_failure)
        .field("identity_badness", bad);
    Ok(r)
}
