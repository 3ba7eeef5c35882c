#![allow(dead_code)]

use coalition_equilibria::{GameSpec, GameTable, Payoff, PureProfile, UtilityOracle};
use rand::Rng;

/// n in {2, 3}, two or three actions each, integer payoffs uniform in [-5, 5], plus a
/// uniformly random profile.
pub fn random_game<R: Rng>(rng: &mut R) -> (GameTable, PureProfile) {
    let n = rng.gen_range(2..=3);
    let counts: Vec<usize> = (0..n).map(|_| rng.gen_range(2..=3)).collect();
    random_game_with(rng, &counts, -5..=5)
}

pub fn random_game_with<R: Rng>(
    rng: &mut R,
    counts: &[usize],
    range: std::ops::RangeInclusive<i64>,
) -> (GameTable, PureProfile) {
    let spec = GameSpec::with_counts(counts).unwrap();
    let len = spec.profile_count().unwrap() * counts.len();
    let payoffs = (0..len)
        .map(|_| Payoff::from_integer(rng.gen_range(range.clone())))
        .collect();
    let table = GameTable::new(spec, payoffs).unwrap();
    let actions = counts.iter().map(|&m| rng.gen_range(0..m)).collect();
    let profile = table.spec().profile(actions).unwrap();
    (table, profile)
}

/// Random table with rational payoffs a/b, a in [-50, 50], b in [1, 8].
pub fn random_rational_table<R: Rng>(rng: &mut R) -> GameTable {
    let n = rng.gen_range(1..=4);
    let counts: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let spec = GameSpec::with_counts(&counts).unwrap();
    let len = spec.profile_count().unwrap() * n;
    let payoffs = (0..len)
        .map(|_| Payoff::ratio(rng.gen_range(-50..=50), rng.gen_range(1..=8)))
        .collect();
    GameTable::new(spec, payoffs).unwrap()
}

pub fn same_payoffs<A: UtilityOracle, B: UtilityOracle>(a: &A, b: &B) -> bool {
    a.spec().action_counts() == b.spec().action_counts()
        && coalition_equilibria::enumerate_profiles(a.spec())
            .all(|p| (0..a.spec().num_players()).all(|i| a.utility(&p, i) == b.utility(&p, i)))
}
