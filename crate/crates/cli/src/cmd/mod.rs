pub mod extract;
pub mod front;
pub mod game;
pub mod qo;
pub mod rado;
pub mod seq;
pub mod shift;

use clap::Args;

use bqo::fronts::Front;
use bqo::SuperSeq;

use crate::fixtures::{load_front, load_seq};
use crate::report::CliError;

#[derive(Debug, Clone, Args)]
pub struct FrontArgs {
    /// trivial, uniform:k, schreier, inline JSON or a descriptor file.
    #[arg(long, default_value = "uniform:2")]
    pub schema: String,
    /// Base set, e.g. omega, evens, ap:3,2 or [1,4]+omega.
    #[arg(long)]
    pub base: Option<String>,
}

impl FrontArgs {
    pub fn front(&self) -> Result<Front, CliError> {
        load_front(&self.schema, self.base.as_deref())
    }
}

#[derive(Debug, Clone, Args)]
pub struct SeqArgs {
    #[command(flatten)]
    pub front: FrontArgs,
    /// identity, min, max, size, span, min-mod:k or constant:c.
    #[arg(long, default_value = "identity")]
    pub rule: String,
}

impl SeqArgs {
    pub fn seq(&self) -> Result<SuperSeq<String>, CliError> {
        load_seq(self.front.front()?, &self.rule)
    }
}

pub fn set_text(s: &[u64]) -> String {
    let items: Vec<String> = s.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(","))
}
