//! Cross-checks an [`AnalysisReport`] against the brute-force predicates in [`crate::oracle`].

use std::fmt;

use crate::equilibria::{AnalysisReport, Check, Frontier};
use crate::game::{PureProfile, UtilityOracle};
use crate::oracle::*;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub check: Check,
    pub reported: String,
    pub oracle: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: analysis gave {}, reference oracle gave {}",
            self.check, self.reported, self.oracle
        )
    }
}

fn pairs(f: &Frontier) -> Vec<(usize, usize)> {
    f.iter().map(|p| (p.k, p.t)).collect()
}

/// Recomputes every check present in `report` and lists the disagreements.
pub fn verify_report<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    report: &AnalysisReport,
) -> Vec<Mismatch> {
    let n = game.spec().num_players();
    let mut out = Vec::new();
    let mut compare = |check: Check, reported: String, oracle: String| {
        if reported != oracle {
            out.push(Mismatch {
                check,
                reported,
                oracle,
            });
        }
    };

    if let Some(v) = report.max_resiliency {
        let o = oracle_max(n, |k| oracle_is_k_resilient(game, profile, k));
        compare(Check::Resiliency, v.to_string(), o.to_string());
    }
    if let Some(v) = report.max_repellence {
        let o = oracle_max(n, |l| oracle_is_l_repellent(game, profile, l));
        compare(Check::Repellence, v.to_string(), o.to_string());
    }
    if let Some(v) = report.max_immunity {
        let o = oracle_max(n, |t| oracle_is_t_immune(game, profile, t));
        compare(Check::Immunity, v.to_string(), o.to_string());
    }
    if let Some(f) = &report.robustness_frontier {
        let o = oracle_frontier(n, |k, t| oracle_is_kt_robust(game, profile, k, t));
        compare(
            Check::Robustness,
            format!("{:?}", pairs(f)),
            format!("{o:?}"),
        );
    }
    if let Some(f) = &report.resistance_frontier {
        let o = oracle_frontier(n, |l, t| oracle_is_lt_resistant(game, profile, l, t));
        compare(
            Check::Resistance,
            format!("{:?}", pairs(f)),
            format!("{o:?}"),
        );
    }
    if let Some(v) = report.max_stability {
        let o = oracle_max(n, |m| oracle_is_m_stable(game, profile, m));
        compare(Check::Stability, v.to_string(), o.to_string());
    }
    if let Some(v) = report.is_nash {
        let o = oracle_is_nash(game, profile);
        compare(Check::Nash, v.to_string(), o.to_string());
    }
    out
}
