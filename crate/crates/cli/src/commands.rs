use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};

use anyhow::{anyhow, Context};
use coalition_equilibria::bench::{run_bench, write_csv, BenchConfig, GameFamily};
use coalition_equilibria::builtin::export_nfg;
use coalition_equilibria::nfg::write_nfg;
use coalition_equilibria::verify::verify_report;
use coalition_equilibria::{analyze, AnalysisReport, Check, PureProfile, UtilityOracle};
use serde_json::{json, Value};

use crate::cli::{AnalyzeArgs, BenchArgs, Format, GenerateArgs};
use crate::source::{self, Loaded, Template};
use crate::Failure;

pub fn run_analyze(args: AnalyzeArgs) -> Result<(), Failure> {
    let loaded = source::load(&args.source)?;
    let game = loaded.game();
    let profile = source::parse_profile(game.spec(), &args.profile)?;
    let checks = Check::parse_list(&args.check).map_err(anyhow::Error::from)?;
    if checks.is_empty() {
        return Err(anyhow!("--check names no checks").into());
    }

    let report = analyze(game, &profile, &checks);
    let out = match args.format {
        Format::Json => {
            let doc = analysis_json(&loaded, &profile, &report);
            serde_json::to_string(&doc).map_err(|e| Failure::Internal(e.into()))? + "\n"
        }
        Format::Text => analysis_text(&loaded, &profile, &report),
    };
    emit_stdout(&out)?;

    if args.verify.is_some() {
        let mismatches = verify_report(game, &profile, &report);
        if !mismatches.is_empty() {
            let lines: Vec<String> = mismatches.iter().map(|m| m.to_string()).collect();
            return Err(Failure::Mismatch(lines.join("\n")));
        }
        eprintln!("verified {} check(s) against the oracle", checks.len());
    }
    Ok(())
}

fn profile_names(game: &dyn UtilityOracle, profile: &PureProfile) -> Vec<String> {
    profile
        .actions()
        .iter()
        .enumerate()
        .map(|(i, &a)| game.spec().action_names(i)[a].clone())
        .collect()
}

fn analysis_json(loaded: &Loaded, profile: &PureProfile, report: &AnalysisReport) -> Value {
    let game = loaded.game();
    json!({
        "game": loaded.name(),
        "players": game.spec().player_names(),
        "profile": profile_names(game, profile),
        "results": report.results_json(),
        "evaluation_counts": report.counts_json(),
    })
}

fn analysis_text(loaded: &Loaded, profile: &PureProfile, report: &AnalysisReport) -> String {
    let game = loaded.game();
    let mut s = String::new();
    let _ = writeln!(s, "game:     {}", loaded.name());
    let _ = writeln!(s, "players:  {}", game.spec().player_names().join(", "));
    let _ = writeln!(s, "profile:  {}", profile_names(game, profile).join(", "));
    let results = report.results_json();
    for (check, evals) in &report.evaluation_counts {
        let value = match &results[check.name()] {
            Value::Array(pairs) if pairs.is_empty() => "none".to_string(),
            Value::Array(pairs) => pairs
                .iter()
                .map(|p| format!("({},{})", p[0], p[1]))
                .collect::<Vec<_>>()
                .join(" "),
            other => other.to_string(),
        };
        let _ = writeln!(
            s,
            "{:<11} {:<16} {} evaluations",
            check.name(),
            value,
            evals
        );
    }
    s
}

pub fn run_generate(args: GenerateArgs) -> Result<(), Failure> {
    let players = args
        .builtin
        .players
        .ok_or_else(|| anyhow!("generate requires --players"))?;
    let game = source::build(&source::template(&args.builtin, players)?)?;
    let table = export_nfg(&game).map_err(anyhow::Error::from)?;
    let title = args.title.unwrap_or_else(|| game.describe());
    let text = write_nfg(&table, &title);
    match &args.out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))
            .map_err(Failure::from),
        None => emit_stdout(&text),
    }
}

pub fn run_bench_command(args: BenchArgs) -> Result<(), Failure> {
    if args.check.contains(',') || args.check.trim() == "all" {
        return Err(anyhow!("bench times a single check, got `{}`", args.check).into());
    }
    let check: Check = args.check.trim().parse().map_err(anyhow::Error::from)?;
    let builtin = &args.source.builtin;
    let (family, default_range) = if builtin.builtin.is_some() {
        if builtin.players.is_some() {
            return Err(
                anyhow!("bench takes --min-players/--max-players instead of --players").into(),
            );
        }
        if args.profile.is_some() {
            return Err(anyhow!(
                "--profile only applies to NFG input; builtins use their own profile"
            )
            .into());
        }
        let min = args.min_players.unwrap_or(3);
        let family = match source::template(builtin, min)? {
            Template::Ioc(p) => GameFamily::Ioc(p),
            Template::Fd(p) => GameFamily::Fd(p),
        };
        (family, (3, 6))
    } else {
        let Loaded::Table { table, .. } = source::load(&args.source)? else {
            unreachable!("load returns a table for NFG input")
        };
        let profile = match &args.profile {
            Some(text) => Some(source::parse_profile(table.spec(), text)?),
            None => None,
        };
        let n = table.spec().num_players();
        (GameFamily::Nfg { table, profile }, (n, n))
    };

    let config = BenchConfig {
        family,
        check,
        min_players: args.min_players.unwrap_or(default_range.0),
        max_players: args.max_players.unwrap_or(default_range.1),
        repetitions: args.runs,
        output: args.out.clone(),
    };
    let records = run_bench(&config).map_err(anyhow::Error::from)?;
    match &config.output {
        Some(path) => {
            let file = fs::File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))?;
            write_csv(&records, io::BufWriter::new(file))
                .with_context(|| format!("cannot write {}", path.display()))?;
            Ok(())
        }
        None => write_csv(&records, io::stdout().lock()).map_err(|e| Failure::Internal(e.into())),
    }
}

fn emit_stdout(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::Internal(e.into()))
}
