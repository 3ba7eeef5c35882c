use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "coaleq",
    version,
    about = "Coalition and Byzantine equilibrium checks for normal-form games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the maximal equilibrium parameters of one pure profile.
    Analyze(AnalyzeArgs),
    /// Write a builtin game as an NFG file.
    Generate(GenerateArgs),
    /// Time one check over a range of player counts and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct BuiltinArgs {
    /// Builtin game family.
    #[arg(long, value_enum)]
    pub builtin: Option<Family>,
    /// Number of players for a builtin game.
    #[arg(long)]
    pub players: Option<usize>,
    /// Builtin parameter as key=value; repeatable. Unset keys keep their defaults.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    pub params: Vec<String>,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Read the game from an NFG file.
    #[arg(long, value_name = "PATH", conflicts_with = "builtin")]
    pub nfg: Option<PathBuf>,
    #[command(flatten)]
    pub builtin: BuiltinArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Ioc,
    Fd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verifier {
    Oracle,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Comma-separated action names or zero-based indices, one per player.
    #[arg(long)]
    pub profile: String,
    /// Comma-separated checks, or `all`.
    #[arg(long, default_value = "all")]
    pub check: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Re-run every requested check through the brute-force oracle; exit 2 on mismatch.
    #[arg(long, value_enum)]
    pub verify: Option<Verifier>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub builtin: BuiltinArgs,
    /// Output path; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Title written into the file; defaults to a description of the game.
    #[arg(long)]
    pub title: Option<String>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// The single check to time.
    #[arg(long)]
    pub check: String,
    /// Defaults to 3 for builtins and to the file's player count for NFG input.
    #[arg(long)]
    pub min_players: Option<usize>,
    /// Defaults to 6 for builtins and to the file's player count for NFG input.
    #[arg(long)]
    pub max_players: Option<usize>,
    #[arg(long, default_value_t = coalition_equilibria::bench::DEFAULT_REPETITIONS)]
    pub runs: usize,
    /// Profile for NFG input; everyone plays their first action when omitted.
    #[arg(long)]
    pub profile: Option<String>,
    /// CSV path; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
