use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

use super::{
    is_pure_nash, max_immunity, max_repellence, max_resiliency, max_stability, resistance_frontier,
    robustness_frontier, Frontier,
};
use crate::game::{EvalCounter, PureProfile, UtilityOracle};

/// One of the seven analyses. Declaration order is the order `analyze` runs them in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Resiliency,
    Repellence,
    Immunity,
    Robustness,
    Resistance,
    Stability,
    Nash,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown check `{0}` (expected one of resiliency, repellence, immunity, robustness, resistance, stability, nash, all)")]
pub struct UnknownCheck(pub String);

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Resiliency,
        Check::Repellence,
        Check::Immunity,
        Check::Robustness,
        Check::Resistance,
        Check::Stability,
        Check::Nash,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Resiliency => "resiliency",
            Check::Repellence => "repellence",
            Check::Immunity => "immunity",
            Check::Robustness => "robustness",
            Check::Resistance => "resistance",
            Check::Stability => "stability",
            Check::Nash => "nash",
        }
    }

    /// Parses a comma-separated list; `all` expands to every check. Duplicates collapse and
    /// the result is in declaration order.
    pub fn parse_list(list: &str) -> Result<Vec<Check>, UnknownCheck> {
        let mut out = Vec::new();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(item.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

/// Results of the requested checks. Fields for checks that were not run stay `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnalysisReport {
    pub max_resiliency: Option<usize>,
    pub max_repellence: Option<usize>,
    pub max_immunity: Option<usize>,
    pub max_stability: Option<usize>,
    pub is_nash: Option<bool>,
    pub robustness_frontier: Option<Frontier>,
    pub resistance_frontier: Option<Frontier>,
    /// Utility evaluations spent by each check.
    pub evaluation_counts: BTreeMap<Check, u64>,
}

impl AnalysisReport {
    /// `{check name: value}` for every check that ran, frontiers as `[[k, t], ...]`.
    pub fn results_json(&self) -> Value {
        let mut map = Map::new();
        let mut put = |check: Check, value: Option<Value>| {
            if let Some(v) = value {
                map.insert(check.name().to_string(), v);
            }
        };
        put(Check::Resiliency, self.max_resiliency.map(|v| json!(v)));
        put(Check::Repellence, self.max_repellence.map(|v| json!(v)));
        put(Check::Immunity, self.max_immunity.map(|v| json!(v)));
        put(
            Check::Robustness,
            self.robustness_frontier.as_ref().map(|f| json!(f)),
        );
        put(
            Check::Resistance,
            self.resistance_frontier.as_ref().map(|f| json!(f)),
        );
        put(Check::Stability, self.max_stability.map(|v| json!(v)));
        put(Check::Nash, self.is_nash.map(|v| json!(v)));
        Value::Object(map)
    }

    pub fn counts_json(&self) -> Value {
        Value::Object(
            self.evaluation_counts
                .iter()
                .map(|(c, n)| (c.name().to_string(), json!(n)))
                .collect(),
        )
    }
}

/// Runs each requested check sequentially and records how many utility evaluations it took.
pub fn analyze<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    checks: &[Check],
) -> AnalysisReport {
    let counted = EvalCounter::new(game);
    let mut report = AnalysisReport::default();
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();

    for check in checks {
        match check {
            Check::Resiliency => report.max_resiliency = Some(max_resiliency(&counted, profile)),
            Check::Repellence => report.max_repellence = Some(max_repellence(&counted, profile)),
            Check::Immunity => report.max_immunity = Some(max_immunity(&counted, profile)),
            Check::Robustness => {
                report.robustness_frontier = Some(robustness_frontier(&counted, profile))
            }
            Check::Resistance => {
                report.resistance_frontier = Some(resistance_frontier(&counted, profile))
            }
            Check::Stability => report.max_stability = Some(max_stability(&counted, profile)),
            Check::Nash => report.is_nash = Some(is_pure_nash(&counted, profile)),
        }
        report.evaluation_counts.insert(check, counted.take());
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::IocParams;
    use crate::equilibria::tests::{fd, ioc};
    use crate::equilibria::FrontierPair;

    fn frontier(pairs: &[(usize, usize)]) -> Option<Frontier> {
        Some(pairs.iter().map(|&p| FrontierPair::from(p)).collect())
    }

    #[test]
    fn parse_check_lists() {
        assert_eq!(Check::parse_list("all").unwrap(), Check::ALL.to_vec());
        assert_eq!(
            Check::parse_list("nash, resiliency,nash").unwrap(),
            vec![Check::Resiliency, Check::Nash]
        );
        assert!(Check::parse_list("resiliency,bogus").is_err());
        assert!(Check::parse_list("").unwrap().is_empty());
    }

    #[test]
    fn fd_full_report() {
        let (g, p) = fd(3);
        let r = analyze(&g, &p, &Check::ALL);
        assert_eq!(r.max_resiliency, Some(1));
        assert_eq!(r.max_repellence, Some(3));
        assert_eq!(r.max_immunity, Some(0));
        assert_eq!(r.max_stability, Some(0));
        assert_eq!(r.is_nash, Some(true));
        assert_eq!(r.robustness_frontier, frontier(&[]));
        assert_eq!(r.resistance_frontier, frontier(&[]));
        assert_eq!(r.evaluation_counts.len(), 7);
        assert!(r.evaluation_counts.values().all(|&n| n >= 1));
    }

    #[test]
    fn ioc_full_report() {
        let (g, p) = ioc(IocParams::standard(3));
        let r = analyze(&g, &p, &Check::ALL);
        assert_eq!(r.max_resiliency, Some(1));
        assert_eq!(r.max_repellence, Some(2));
        assert_eq!(r.max_immunity, Some(3));
        assert_eq!(r.max_stability, Some(2));
        assert_eq!(r.is_nash, Some(true));
        assert_eq!(r.robustness_frontier, frontier(&[(1, 2)]));
        assert_eq!(r.resistance_frontier, frontier(&[(1, 2), (2, 1)]));
        assert_eq!(
            r.results_json().to_string(),
            r#"{"immunity":3,"nash":true,"repellence":2,"resiliency":1,"resistance":[[1,2],[2,1]],"robustness":[[1,2]],"stability":2}"#
        );
    }

    #[test]
    fn empty_check_set() {
        let (g, p) = fd(3);
        let r = analyze(&g, &p, &[]);
        assert_eq!(r, AnalysisReport::default());
        assert_eq!(r.results_json(), json!({}));
    }

    #[test]
    fn counts_repeat_exactly() {
        let (g, p) = ioc(IocParams::standard(4));
        let a = analyze(&g, &p, &Check::ALL);
        let b = analyze(&g, &p, &Check::ALL);
        assert_eq!(a.evaluation_counts, b.evaluation_counts);
    }
}
