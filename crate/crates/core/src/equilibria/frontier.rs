//! Joint coalition-plus-Byzantine searches: (k,t)-robustness and (l,t)-resistance.
//!
//! For each coalition bound k the search finds t_k, the largest Byzantine bound that survives
//! every coalition of size at most k. t_k never increases with k, so the scan for k starts
//! from t_{k-1}. Pairs are emitted while t_k >= 1.
//!
//! Once (k, t-1) and (k-1, t) are known to hold, (k, t) only adds the pairs with |C| = k and
//! |T| = t exactly, and that is all each step examines. The empty Byzantine set is covered by
//! size-t sets whose members keep their actions, since deviation scans include the identity.

use serde::Serialize;

use super::sum_over;
use crate::game::{coalitions_of_size, deviations, Coalition, PureProfile, UtilityOracle};
use crate::payoff::Payoff;

/// One (coalition bound, Byzantine bound) pair. Serializes as `[k, t]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "[usize; 2]")]
pub struct FrontierPair {
    pub k: usize,
    pub t: usize,
}

impl From<FrontierPair> for [usize; 2] {
    fn from(p: FrontierPair) -> Self {
        [p.k, p.t]
    }
}

impl From<(usize, usize)> for FrontierPair {
    fn from((k, t): (usize, usize)) -> Self {
        FrontierPair { k, t }
    }
}

/// Pairs with k strictly increasing and t non-increasing.
pub type Frontier = Vec<FrontierPair>;

#[derive(Clone, Copy, PartialEq, Eq)]
enum JointTest {
    Member,
    Total,
}

/// The (k,t)-robustness frontier of `profile`: for each k, the largest t such that, with at
/// most t Byzantine players deviating arbitrarily, no disjoint coalition of at most k players
/// can strictly improve any member.
pub fn robustness_frontier<G: UtilityOracle + ?Sized>(game: &G, profile: &PureProfile) -> Frontier {
    frontier(game, profile, JointTest::Member)
}

/// The (l,t)-resistance frontier: as [`robustness_frontier`] with the coalition's total
/// utility in place of each member's.
pub fn resistance_frontier<G: UtilityOracle + ?Sized>(game: &G, profile: &PureProfile) -> Frontier {
    frontier(game, profile, JointTest::Total)
}

fn frontier<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    test: JointTest,
) -> Frontier {
    let n = game.spec().num_players();
    let mut out = Frontier::new();
    if n < 2 {
        return out;
    }
    let mut cap = n - 1;
    for k in 1..n {
        let limit = cap.min(n - k);
        let mut best = 0;
        for t in 1..=limit {
            if exact_sizes_hold(game, profile, k, t, test) {
                best = t;
            } else {
                break;
            }
        }
        if best == 0 {
            break;
        }
        out.push(FrontierPair { k, t: best });
        cap = best;
    }
    out
}

/// Checks every disjoint (C, T) with |C| = k and |T| = t.
fn exact_sizes_hold<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    k: usize,
    t: usize,
    test: JointTest,
) -> bool {
    let spec = game.spec();
    let players = spec.all_players();
    for coalition in coalitions_of_size(&players, k) {
        let rest = coalition.complement(spec.num_players());
        for byzantine in coalitions_of_size(&rest, t) {
            if !pair_holds(game, profile, &coalition, &byzantine, test) {
                return false;
            }
        }
    }
    true
}

fn pair_holds<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    coalition: &Coalition,
    byzantine: &Coalition,
    test: JointTest,
) -> bool {
    let spec = game.spec();
    let members = coalition.members();
    for attacked in deviations(spec, profile, byzantine) {
        match test {
            JointTest::Member => {
                let held: Vec<Payoff> = members
                    .iter()
                    .map(|&i| game.utility(&attacked, i))
                    .collect();
                for response in deviations(spec, &attacked, coalition) {
                    if members
                        .iter()
                        .zip(&held)
                        .any(|(&i, h)| *h < game.utility(&response, i))
                    {
                        return false;
                    }
                }
            }
            JointTest::Total => {
                let held = sum_over(game, &attacked, members);
                for response in deviations(spec, &attacked, coalition) {
                    if held < sum_over(game, &response, members) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
