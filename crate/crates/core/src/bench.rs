//! Timing sweeps over player counts.
//!
//! Each check is run `repetitions` times per player count and the mean wall-clock time is
//! reported next to the number of utility evaluations, which is the reproducible metric.
//! Game parameters other than `n` stay fixed across a sweep.

use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use thiserror::Error;

use crate::builtin::{BuiltinGame, FdGame, FdParams, IocGame, IocParams, ParamError};
use crate::equilibria::{analyze, Check};
use crate::game::{GameError, GameTable, PureProfile, UtilityOracle};

#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum GameFamily {
    /// `n` is overridden per sweep point.
    Ioc(IocParams),
    /// `n` is overridden per sweep point.
    Fd(FdParams),
    /// A fixed game; the profile defaults to everyone playing their first action.
    Nfg {
        table: GameTable,
        profile: Option<PureProfile>,
    },
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: GameFamily,
    pub check: Check,
    pub min_players: usize,
    pub max_players: usize,
    pub repetitions: usize,
    /// Where the CSV goes; standard output when `None`.
    pub output: Option<PathBuf>,
}

pub const DEFAULT_REPETITIONS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    /// Mean wall-clock seconds per run.
    pub mean: f64,
    pub evals: u64,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid player range {min}..={max} (need 2 <= min <= max)")]
    InvalidRange { min: usize, max: usize },
    #[error("repetitions must be at least 1")]
    NoRepetitions,
    #[error("the game file has {file} players but the range is {min}..={max}")]
    PlayerMismatch { file: usize, min: usize, max: usize },
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Game(#[from] GameError),
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), BenchError> {
        let (min, max) = (self.min_players, self.max_players);
        if min < 2 || min > max {
            return Err(BenchError::InvalidRange { min, max });
        }
        if self.repetitions == 0 {
            return Err(BenchError::NoRepetitions);
        }
        if let GameFamily::Nfg { table, .. } = &self.family {
            let file = table.spec().num_players();
            if min != file || max != file {
                return Err(BenchError::PlayerMismatch { file, min, max });
            }
        }
        Ok(())
    }
}

fn timed<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    check: Check,
    repetitions: usize,
) -> (f64, u64) {
    let mut total = 0.0;
    let mut evals = None;
    for _ in 0..repetitions {
        let start = Instant::now();
        let report = analyze(game, profile, &[check]);
        total += start.elapsed().as_secs_f64();
        let count = report.evaluation_counts.get(&check).copied().unwrap_or(0);
        debug_assert!(
            evals.is_none_or(|e| e == count),
            "sequential counts must repeat"
        );
        evals.get_or_insert(count);
    }
    (total / repetitions as f64, evals.unwrap_or(0))
}

/// One record per player count, ascending. Game construction is outside the timed region.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    config.validate()?;
    let mut records = Vec::new();
    for n in config.min_players..=config.max_players {
        let (mean, evals) = match &config.family {
            GameFamily::Ioc(template) => {
                let game = BuiltinGame::from(IocGame::new(IocParams {
                    n,
                    ..template.clone()
                })?);
                let profile = game.desired_profile();
                timed(&game, &profile, config.check, config.repetitions)
            }
            GameFamily::Fd(template) => {
                let game = BuiltinGame::from(FdGame::new(FdParams {
                    n,
                    ..template.clone()
                })?);
                let profile = game.desired_profile();
                timed(&game, &profile, config.check, config.repetitions)
            }
            GameFamily::Nfg { table, profile } => {
                let profile = match profile {
                    Some(p) => p.clone(),
                    None => table.spec().profile(vec![0; n])?,
                };
                timed(table, &profile, config.check, config.repetitions)
            }
        };
        records.push(BenchRecord { n, mean, evals });
    }
    Ok(records)
}

/// `n,mean,evals` header then one row per record in ascending `n`, seconds to six decimals.
pub fn write_csv<W: Write>(records: &[BenchRecord], mut out: W) -> io::Result<()> {
    let mut sorted: Vec<&BenchRecord> = records.iter().collect();
    sorted.sort_by_key(|r| r.n);
    writeln!(out, "n,mean,evals")?;
    for r in sorted {
        writeln!(out, "{},{:.6},{}", r.n, r.mean, r.evals)?;
    }
    Ok(())
}

pub fn csv_string(records: &[BenchRecord]) -> String {
    let mut buf = Vec::new();
    write_csv(records, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("CSV is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(
        family: GameFamily,
        check: Check,
        min: usize,
        max: usize,
        reps: usize,
    ) -> BenchConfig {
        BenchConfig {
            family,
            check,
            min_players: min,
            max_players: max,
            repetitions: reps,
            output: None,
        }
    }

    fn evals(records: &[BenchRecord]) -> Vec<u64> {
        records.iter().map(|r| r.evals).collect()
    }

    #[test]
    fn csv_formatting() {
        assert_eq!(csv_string(&[]), "n,mean,evals\n");
        let one = BenchRecord {
            n: 3,
            mean: 0.5,
            evals: 42,
        };
        assert_eq!(
            csv_string(std::slice::from_ref(&one)),
            "n,mean,evals\n3,0.500000,42\n"
        );
        let two = BenchRecord {
            n: 2,
            ..one.clone()
        };
        assert_eq!(
            csv_string(&[one, two]),
            "n,mean,evals\n2,0.500000,42\n3,0.500000,42\n"
        );
    }

    #[test]
    fn fd_resiliency_sweep() {
        let records = run_bench(&config(
            GameFamily::Fd(FdParams::standard(2)),
            Check::Resiliency,
            3,
            5,
            2,
        ))
        .unwrap();
        assert_eq!(
            records.iter().map(|r| r.n).collect::<Vec<_>>(),
            vec![3, 4, 5]
        );
        assert!(records.iter().all(|r| r.evals >= 1 && r.mean >= 0.0));
    }

    #[test]
    fn ioc_repellence_grows() {
        let records = run_bench(&config(
            GameFamily::Ioc(IocParams::standard(2)),
            Check::Repellence,
            3,
            6,
            1,
        ))
        .unwrap();
        let e = evals(&records);
        assert!(e.windows(2).all(|w| w[0] < w[1]), "{e:?}");
    }

    #[test]
    fn fd_immunity_stays_small() {
        let records = run_bench(&config(
            GameFamily::Fd(FdParams::standard(2)),
            Check::Immunity,
            3,
            10,
            1,
        ))
        .unwrap();
        assert!(
            records.iter().all(|r| r.evals < 1000),
            "{:?}",
            evals(&records)
        );
    }

    #[test]
    fn rejects_bad_configs() {
        let fd = || GameFamily::Fd(FdParams::standard(2));
        assert!(matches!(
            run_bench(&config(fd(), Check::Nash, 1, 3, 1)),
            Err(BenchError::InvalidRange { .. })
        ));
        assert!(matches!(
            run_bench(&config(fd(), Check::Nash, 5, 3, 1)),
            Err(BenchError::InvalidRange { .. })
        ));
        assert!(matches!(
            run_bench(&config(fd(), Check::Nash, 3, 3, 0)),
            Err(BenchError::NoRepetitions)
        ));
        let table = GameTable::from_oracle(&FdGame::new(FdParams::standard(3)).unwrap()).unwrap();
        let nfg = GameFamily::Nfg {
            table,
            profile: None,
        };
        assert!(matches!(
            run_bench(&config(nfg.clone(), Check::Nash, 3, 4, 1)),
            Err(BenchError::PlayerMismatch { file: 3, .. })
        ));
        assert_eq!(
            run_bench(&config(nfg, Check::Nash, 3, 3, 1)).unwrap().len(),
            1
        );
    }
}
