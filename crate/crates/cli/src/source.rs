//! Loading games from flags and resolving profiles against them.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use coalition_equilibria::builtin::{BuiltinGame, FdGame, FdParams, IocGame, IocParams};
use coalition_equilibria::nfg::parse_nfg_document;
use coalition_equilibria::{GameSpec, GameTable, Payoff, PureProfile, UtilityOracle};

use crate::cli::{BuiltinArgs, Family, SourceArgs};

#[allow(clippy::large_enum_variant)]
pub enum Loaded {
    Builtin(BuiltinGame),
    Table { title: String, table: GameTable },
}

impl Loaded {
    pub fn game(&self) -> &dyn UtilityOracle {
        match self {
            Loaded::Builtin(g) => g,
            Loaded::Table { table, .. } => table,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Loaded::Builtin(g) => g.describe(),
            Loaded::Table { title, .. } => title.clone(),
        }
    }
}

#[allow(clippy::large_enum_variant)]
pub enum Template {
    Ioc(IocParams),
    Fd(FdParams),
}

pub fn load(source: &SourceArgs) -> Result<Loaded> {
    match (&source.nfg, source.builtin.builtin) {
        (Some(path), None) => {
            if source.builtin.players.is_some() || !source.builtin.params.is_empty() {
                bail!("--players and --param only apply to --builtin games");
            }
            load_nfg(path)
        }
        (None, Some(_)) => {
            let players = source
                .builtin
                .players
                .ok_or_else(|| anyhow!("--builtin requires --players"))?;
            Ok(Loaded::Builtin(build(&template(
                &source.builtin,
                players,
            )?)?))
        }
        (None, None) => bail!("no game given; pass --nfg PATH or --builtin ioc|fd"),
        (Some(_), Some(_)) => bail!("pass only one of --nfg and --builtin"),
    }
}

fn load_nfg(path: &Path) -> Result<Loaded> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let doc = parse_nfg_document(&text).with_context(|| format!("{}", path.display()))?;
    let title = if doc.title.is_empty() {
        path.display().to_string()
    } else {
        doc.title
    };
    Ok(Loaded::Table {
        title,
        table: doc.table,
    })
}

/// Parameters for `family` with `--param` overrides applied; not yet validated.
pub fn template(args: &BuiltinArgs, players: usize) -> Result<Template> {
    let family = args
        .builtin
        .ok_or_else(|| anyhow!("a builtin game is required; pass --builtin ioc|fd"))?;
    let mut template = match family {
        Family::Ioc => Template::Ioc(IocParams::standard(players)),
        Family::Fd => Template::Fd(FdParams::standard(players)),
    };
    for raw in &args.params {
        let (key, value) = raw
            .split_once('=')
            .ok_or_else(|| anyhow!("--param expects key=value, got `{raw}`"))?;
        let (key, value) = (key.trim(), value.trim());
        let value: Payoff = value
            .parse()
            .with_context(|| format!("bad value for parameter `{key}`"))?;
        let slot = match &mut template {
            Template::Ioc(p) => match key {
                "cost_diligent" | "c1" => &mut p.cost_diligent,
                "cost_lazy" | "cq" => &mut p.cost_lazy,
                "q" => &mut p.q,
                "r" => &mut p.r,
                "b" => &mut p.b,
                "f" => &mut p.f,
                _ => bail!(
                    "unknown IOC parameter `{key}` (expected cost_diligent, cost_lazy, q, r, b, f)"
                ),
            },
            Template::Fd(p) => match key {
                "g" => &mut p.g,
                "c" => &mut p.c,
                _ => bail!("unknown FD parameter `{key}` (expected g, c)"),
            },
        };
        *slot = value;
    }
    Ok(template)
}

pub fn build(template: &Template) -> Result<BuiltinGame> {
    Ok(match template {
        Template::Ioc(p) => IocGame::new(p.clone())?.into(),
        Template::Fd(p) => FdGame::new(p.clone())?.into(),
    })
}

/// Each token is tried as a zero-based index when it is all digits, then as an action name.
pub fn parse_profile(spec: &GameSpec, text: &str) -> Result<PureProfile> {
    let tokens: Vec<&str> = text.split(',').map(str::trim).collect();
    let n = spec.num_players();
    if tokens.len() != n {
        bail!(
            "profile has {} entries but the game has {n} players",
            tokens.len()
        );
    }
    let mut actions = Vec::with_capacity(n);
    for (player, token) in tokens.into_iter().enumerate() {
        let names = spec.action_names(player);
        let index = token
            .parse::<usize>()
            .ok()
            .filter(|&i| token.bytes().all(|b| b.is_ascii_digit()) && i < names.len())
            .or_else(|| names.iter().position(|a| a == token));
        match index {
            Some(i) => actions.push(i),
            None => bail!(
                "unknown action `{token}` for {} (actions: {})",
                spec.player_names()[player],
                names.join(", ")
            ),
        }
    }
    Ok(spec.profile(actions)?)
}
