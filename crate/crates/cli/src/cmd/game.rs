use std::fs;
use std::io::Read;

use clap::Subcommand;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use bqo::hset::{
    game_play, parse_sexpr, string_strategies, supp, tilde_build, to_sexpr, GameSolver, HSet,
    Winner,
};

use super::SeqArgs;
use crate::fixtures::{discrete, load_qo, parse_list, Qo};
use crate::report::{CliError, CliResult, Report};
use crate::RunConfig;

#[derive(Subcommand)]
pub enum GameCmd {
    /// Decide X ≤ Y by solving the game; `-` reads both sets from stdin.
    Solve {
        x: String,
        y: Option<String>,
        /// Order on the atoms; by default atoms compare only to themselves.
        #[arg(long)]
        qo: Option<String>,
    },
    /// Replay the game with both solved strategies.
    Play {
        x: String,
        y: Option<String>,
        #[arg(long)]
        qo: Option<String>,
    },
    /// The atoms occurring in a set.
    Supp { x: String },
    /// Chain the winning strategies of I along a bad sequence of sets.
    String {
        /// File with one set per line; defaults to the Rado rows
        /// X_m = {{m,n} | m < n ≤ window}.
        #[arg(long)]
        sets: Option<String>,
        #[arg(long, default_value = "rado")]
        qo: String,
        /// Index tuple to evaluate, e.g. 0,2,5,7.
        #[arg(long)]
        tuple: Option<String>,
        /// Number of sampled tuples when no tuple is given.
        #[arg(long, default_value_t = 8)]
        samples: usize,
        /// Length of sampled tuples.
        #[arg(long, default_value_t = 5)]
        length: usize,
    },
    /// The truncated f̃ of a sequence and the games between its first level.
    Tilde {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, default_value = "rado")]
        qo: String,
    },
}

impl GameCmd {
    pub fn name(&self) -> &'static str {
        match self {
            GameCmd::Solve { .. } => "solve",
            GameCmd::Play { .. } => "play",
            GameCmd::Supp { .. } => "supp",
            GameCmd::String { .. } => "string",
            GameCmd::Tilde { .. } => "tilde",
        }
    }

    pub fn run(self, cfg: &RunConfig) -> CliResult {
        match self {
            GameCmd::Solve { x, y, qo } => {
                let (x, y) = read_pair(&x, y.as_deref())?;
                solve(&pick_qo(qo)?, &x, &y)
            }
            GameCmd::Play { x, y, qo } => {
                let (x, y) = read_pair(&x, y.as_deref())?;
                play(&pick_qo(qo)?, &x, &y)
            }
            GameCmd::Supp { x } => {
                let x = parse_sexpr(&read_arg(&x)?)?;
                let atoms: Vec<String> = supp(&x).into_iter().collect();
                let mut r = Report::new("game supp");
                r.line(format!("supp {} = {{{}}}", to_sexpr(&x), atoms.join(", ")));
                r.field("set", to_sexpr(&x))
                    .field("depth", x.depth())
                    .field("supp", atoms);
                Ok(r)
            }
            GameCmd::String {
                sets,
                qo,
                tuple,
                samples,
                length,
            } => stringing(cfg, sets, &qo, tuple, samples, length),
            GameCmd::Tilde { seq, qo } => tilde(cfg, &seq, &qo),
        }
    }
}

fn pick_qo(src: Option<String>) -> Result<Qo, CliError> {
    match src {
        Some(s) => load_qo(&s),
        None => Ok(discrete()),
    }
}

fn read_arg(x: &str) -> Result<String, CliError> {
    if x == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(x.to_string())
    }
}

/// Top-level s-expressions of `text`, in order.
fn split_sexprs(text: &str) -> Result<Vec<String>, CliError> {
    let (mut out, mut cur) = (Vec::new(), String::new());
    let (mut depth, mut quoted, mut escaped) = (0usize, false, false);
    for c in text.chars() {
        if depth == 0 && c.is_whitespace() {
            continue;
        }
        cur.push(c);
        if quoted {
            match (escaped, c) {
                (true, _) => escaped = false,
                (false, '\\') => escaped = true,
                (false, '"') => quoted = false,
                _ => {}
            }
            continue;
        }
        match c {
            '"' => quoted = true,
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| CliError::usage("unbalanced ')' in input"))?;
                if depth == 0 {
                    out.push(std::mem::take(&mut cur));
                }
            }
            _ if depth == 0 => return Err(CliError::usage(format!("stray {c:?} in input"))),
            _ => {}
        }
    }
    if depth != 0 || !cur.is_empty() {
        return Err(CliError::usage("unterminated s-expression in input"));
    }
    Ok(out)
}

fn read_pair(x: &str, y: Option<&str>) -> Result<(HSet<String>, HSet<String>), CliError> {
    let texts = match y {
        Some(y) => vec![read_arg(x)?, read_arg(y)?],
        None => split_sexprs(&read_arg(x)?)?,
    };
    match texts.as_slice() {
        [a, b] => Ok((parse_sexpr(a)?, parse_sexpr(b)?)),
        _ => Err(CliError::usage(format!(
            "expected two sets, found {}",
            texts.len()
        ))),
    }
}

fn solve(qo: &Qo, x: &HSet<String>, y: &HSet<String>) -> CliResult {
    let mut solver = GameSolver::new(&qo.order);
    let res = solver.solve(x, y)?;
    let mut r = Report::new("game solve");
    let (sx, sy) = (to_sexpr(x), to_sexpr(y));
    r.line(format!(
        "G({sx}, {sy}) over {}: player {} wins",
        qo.name(),
        res.winner
    ));
    r.field("qo", qo.name())
        .field("x", &sx)
        .field("y", &sy)
        .field("winner", res.winner)
        .field("leq", res.winner == Winner::II);
    match res.winner {
        Winner::I => {
            let m = solver.winning_move_i(x, y)?.map(|m| to_sexpr(&m));
            if let Some(m) = &m {
                r.line(format!("winning first move of I: {m}"));
            }
            r.field("winning_move_i", m);
        }
        Winner::II => {
            let mut replies = Vec::new();
            for xm in x.moves() {
                let reply = match y {
                    HSet::Atom(_) => Some(y.clone()),
                    HSet::Node(_) => res.strategy_ii.moves.get(&(xm.clone(), y.clone())).cloned(),
                };
                let reply = reply.map(|m| to_sexpr(&m));
                r.line(format!(
                    "  I plays {} -> II answers {}",
                    to_sexpr(xm),
                    reply.as_deref().unwrap_or("?")
                ));
                replies.push(json!({ "i_move": to_sexpr(xm), "ii_reply": reply }));
            }
            r.field("replies_ii", replies);
        }
    }
    Ok(r)
}

fn play(qo: &Qo, x: &HSet<String>, y: &HSet<String>) -> CliResult {
    let res = GameSolver::new(&qo.order).solve(x, y)?;
    let t = game_play(&qo.order, x, y, &res.strategy_i, &res.strategy_ii)?;
    let mut r = Report::new("game play");
    r.line(format!(
        "G({}, {}) over {}",
        to_sexpr(x),
        to_sexpr(y),
        qo.name()
    ));
    let mut rounds = Vec::new();
    for (i, round) in t.rounds.iter().enumerate() {
        let (a, b) = (to_sexpr(&round.i_move), to_sexpr(&round.ii_move));
        r.line(format!("  round {i}: I {a}, II {b}"));
        rounds.push(json!({ "i_move": a, "ii_move": b }));
    }
    r.line(format!("player {} wins", t.winner));
    r.field("qo", qo.name())
        .field("x", to_sexpr(x))
        .field("y", to_sexpr(y))
        .field("rounds", rounds)
        .field("winner", t.winner);
    Ok(r)
}

fn rado_rows(window: u64) -> Vec<HSet<String>> {
    (0..window)
        .map(|m| {
            HSet::of_atoms((m + 1..=window).map(|n| format!("{{{m},{n}}}"))).expect("nonempty row")
        })
        .collect()
}

fn all_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn stringing(
    cfg: &RunConfig,
    sets: Option<String>,
    qo: &str,
    tuple: Option<String>,
    samples: usize,
    length: usize,
) -> CliResult {
    let q = load_qo(qo)?;
    let xs = match &sets {
        None => rado_rows(cfg.window),
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::domain("Io", format!("cannot read {path}: {e}")))?;
            split_sexprs(&text)?
                .iter()
                .map(|s| parse_sexpr(s))
                .collect::<Result<_, _>>()?
        }
    };
    let g = string_strategies(&q.order, xs.clone())?;
    let tuples: Vec<Vec<usize>> = match tuple {
        Some(t) => vec![parse_list(&t)?.into_iter().map(|i| i as usize).collect()],
        None => {
            let k = length.min(xs.len()).max(1);
            if cfg.exhaustive {
                all_tuples(xs.len(), k)
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                (0..samples)
                    .map(|_| {
                        let mut t = sample(&mut rng, xs.len(), k).into_vec();
                        t.sort_unstable();
                        t
                    })
                    .collect()
            }
        }
    };
    let mut r = Report::new("game string");
    r.line(format!(
        "{} sets over {}, every pair won by I",
        xs.len(),
        q.name()
    ));
    let (mut evals, mut failures) = (Vec::new(), 0);
    for t in &tuples {
        let e = g.eval(t)?;
        let shifted = g.eval(&t[1..]).ok();
        let in_support = supp(&xs[t[0]]).contains(&e.value);
        let bad = shifted.as_ref().map(|s| !q.leq(&e.value, &s.value));
        if bad == Some(false) || !in_support {
            failures += 1;
        }
        r.line(format!(
            "  N = {t:?}: g(N) = {} (modulus {}), g(shift N) = {}, bad {}",
            e.value,
            e.modulus,
            shifted
                .as_ref()
                .map_or("n/a".to_string(), |s| s.value.clone()),
            bad.map_or("n/a".to_string(), |b| b.to_string())
        ));
        evals.push(json!({
            "tuple": t,
            "value": e.value,
            "modulus": e.modulus,
            "rounds": e.rounds,
            "shifted_value": shifted.map(|s| s.value),
            "bad": bad,
            "in_support": in_support,
        }));
    }
    r.line(format!("{} tuples, {failures} failures", tuples.len()));
    r.field("qo", q.name())
        .field("sets", xs.iter().map(to_sexpr).collect::<Vec<_>>())
        .field("tuples", evals)
        .field("failures", failures)
        .field("sampled", !cfg.exhaustive);
    Ok(r)
}

fn tilde(cfg: &RunConfig, seq: &SeqArgs, qo: &str) -> CliResult {
    let f = seq.seq()?;
    let q = load_qo(qo)?;
    let t = tilde_build(&f, cfg.window)?;
    let mut solver = GameSolver::new(&q.order);
    let mut r = Report::new("game tilde");
    r.line(format!(
        "f̃ of {} on {} truncated at {}: {} nodes, {} padded",
        seq.rule,
        f.front(),
        cfg.window,
        t.nodes.len(),
        t.padded.len()
    ));
    let mut games = Vec::new();
    let mut all_i = true;
    for (a, (m, x)) in t.first_level.iter().enumerate() {
        for (n, y) in &t.first_level[a + 1..] {
            let w = solver.solve(x, y)?.winner;
            all_i &= w == Winner::I;
            games.push(json!({ "m": m, "n": n, "winner": w }));
        }
    }
    r.line(format!(
        "{} games between first-level nodes, all won by I: {all_i}",
        games.len()
    ));
    let level: Vec<_> = t
        .first_level
        .iter()
        .map(|(m, x)| json!({ "m": m, "set": to_sexpr(x) }))
        .collect();
    r.field("front", f.front().to_string())
        .field("rule", f.label())
        .field("qo", q.name())
        .field("first_level", level)
        .field("padded", &t.padded)
        .field("games", games)
        .field("all_won_by_i", all_i);
    Ok(r)
}
