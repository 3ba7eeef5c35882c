//! Maximal-parameter searches for the security equilibria of a pure profile.
//!
//! Every search scans coalition sizes ascending, coalitions lexicographically and deviations in
//! mixed-radix order, returning at the first violation. The scan order is fixed so evaluation
//! counts are reproducible.

mod frontier;
mod report;

pub use frontier::{resistance_frontier, robustness_frontier, Frontier, FrontierPair};
pub use report::{analyze, AnalysisReport, Check, UnknownCheck};

use crate::game::{
    coalitions_of_size, deviations, deviations_over, enumerate_profiles, Coalition, PureProfile,
    UtilityOracle,
};
use crate::payoff::Payoff;

fn base_utilities<G: UtilityOracle + ?Sized>(game: &G, profile: &PureProfile) -> Vec<Payoff> {
    (0..game.spec().num_players())
        .map(|i| game.utility(profile, i))
        .collect()
}

fn sum_over<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    members: &[usize],
) -> Payoff {
    members.iter().map(|&i| game.utility(profile, i)).sum()
}

/// True iff no player strictly gains by a unilateral switch of action.
pub fn is_pure_nash<G: UtilityOracle + ?Sized>(game: &G, profile: &PureProfile) -> bool {
    let spec = game.spec();
    (0..spec.num_players()).all(|i| {
        let current = game.utility(profile, i);
        (0..spec.num_actions(i))
            .filter(|&a| a != profile.action(i))
            .all(|a| current >= game.utility(&profile.with_action(i, a), i))
    })
}

/// All pure Nash profiles, in enumeration order.
pub fn find_pure_nash<G: UtilityOracle + ?Sized>(game: &G) -> Vec<PureProfile> {
    enumerate_profiles(game.spec())
        .filter(|p| is_pure_nash(game, p))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CoalitionTest {
    /// Some member strictly improves.
    Member,
    /// The coalition's total strictly improves.
    Total,
}

fn max_coalition_bound<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    test: CoalitionTest,
) -> usize {
    let spec = game.spec();
    let n = spec.num_players();
    let base = base_utilities(game, profile);
    let players = spec.all_players();

    for size in 1..=n {
        for coalition in coalitions_of_size(&players, size) {
            let members = coalition.members();
            let base_total: Payoff = members.iter().map(|&i| &base[i]).sum();
            for deviation in deviations(spec, profile, &coalition) {
                let violated = match test {
                    CoalitionTest::Member => members
                        .iter()
                        .any(|&i| base[i] < game.utility(&deviation, i)),
                    CoalitionTest::Total => base_total < sum_over(game, &deviation, members),
                };
                if violated {
                    return size - 1;
                }
            }
        }
    }
    n
}

/// Largest k such that `profile` is k-resilient: no coalition of at most k players has a
/// joint deviation that strictly improves any one of its members.
pub fn max_resiliency<G: UtilityOracle + ?Sized>(game: &G, profile: &PureProfile) -> usize {
    max_coalition_bound(game, profile, CoalitionTest::Member)
}

/// Largest l such that `profile` is l-repellent: no coalition of at most l players can
/// strictly raise its total utility.
pub fn max_repellence<G: UtilityOracle + ?Sized>(game: &G, profile: &PureProfile) -> usize {
    max_coalition_bound(game, profile, CoalitionTest::Total)
}

/// Largest t such that `profile` is t-immune: no set of at most t Byzantine players can push
/// any outside player below its utility at `profile`.
///
/// A Byzantine set containing everyone has no outside player to hurt, so a profile with no
/// violation at smaller sizes returns `n`.
pub fn max_immunity<G: UtilityOracle + ?Sized>(game: &G, profile: &PureProfile) -> usize {
    let spec = game.spec();
    let n = spec.num_players();
    let base = base_utilities(game, profile);
    let players = spec.all_players();

    for size in 1..n {
        for byzantine in coalitions_of_size(&players, size) {
            let outsiders = byzantine.complement(n);
            for deviation in deviations(spec, profile, &byzantine) {
                if outsiders
                    .iter()
                    .any(|&i| game.utility(&deviation, i) < base[i])
                {
                    return size - 1;
                }
            }
        }
    }
    n
}

/// True iff the coalition's part of `profile` is weakly dominant for it: against every
/// behaviour of the outside players, no joint alternative yields a strictly larger total.
pub fn is_weakly_dominant<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    coalition: &Coalition,
) -> bool {
    let spec = game.spec();
    let members = coalition.members();
    let outside = coalition.complement(spec.num_players());

    for held in deviations_over(spec, profile, &outside) {
        let held_total = sum_over(game, &held, members);
        for alternative in deviations(spec, &held, coalition) {
            if held_total < sum_over(game, &alternative, members) {
                return false;
            }
        }
    }
    true
}

/// Largest m such that `profile` is m-stable: every coalition of at most m players plays a
/// weakly dominant joint strategy.
pub fn max_stability<G: UtilityOracle + ?Sized>(game: &G, profile: &PureProfile) -> usize {
    let spec = game.spec();
    let n = spec.num_players();
    let players = spec.all_players();

    for size in 1..=n {
        for coalition in coalitions_of_size(&players, size) {
            if !is_weakly_dominant(game, profile, &coalition) {
                return size - 1;
            }
        }
    }
    n
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::builtin::{FdGame, FdParams, IocGame, IocParams, DILIGENT, DROP, FORWARD};
    use crate::game::{GameSpec, GameTable};

    pub(crate) fn constant_game(n: usize) -> GameTable {
        let spec = GameSpec::with_counts(&vec![2; n]).unwrap();
        let len = spec.profile_count().unwrap() * n;
        GameTable::new(spec, vec![Payoff::from_integer(7); len]).unwrap()
    }

    pub(crate) fn fd(n: usize) -> (FdGame, PureProfile) {
        let g = FdGame::new(FdParams::standard(n)).unwrap();
        let mut actions = vec![DROP; n];
        actions[0] = FORWARD;
        let p = g.spec().profile(actions).unwrap();
        (g, p)
    }

    pub(crate) fn ioc(params: IocParams) -> (IocGame, PureProfile) {
        let n = params.n;
        let g = IocGame::new(params).unwrap();
        let p = g.spec().profile(vec![DILIGENT; n]).unwrap();
        (g, p)
    }

    #[test]
    fn nash_examples() {
        let (g, p) = fd(3);
        assert!(is_pure_nash(&g, &p));
        let all_drop = g.spec().profile(vec![DROP; 3]).unwrap();
        assert!(!is_pure_nash(&g, &all_drop));

        let c = constant_game(3);
        assert!(enumerate_profiles(c.spec()).all(|p| is_pure_nash(&c, &p)));
        assert_eq!(find_pure_nash(&c).len(), 8);
    }

    #[test]
    fn nash_enumeration() {
        let (g, _) = fd(3);
        let found: Vec<_> = find_pure_nash(&g)
            .into_iter()
            .map(|p| p.into_vec())
            .collect();
        assert_eq!(found, vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);

        let spec = GameSpec::with_counts(&[3]).unwrap();
        let one = GameTable::new(
            spec,
            vec![
                Payoff::from_integer(1),
                Payoff::from_integer(4),
                Payoff::from_integer(4),
            ],
        )
        .unwrap();
        let found: Vec<_> = find_pure_nash(&one)
            .into_iter()
            .map(|p| p.into_vec())
            .collect();
        assert_eq!(found, vec![vec![1], vec![2]]);
    }

    #[test]
    fn fd_values() {
        let (g, p) = fd(3);
        assert_eq!(max_resiliency(&g, &p), 1);
        assert_eq!(max_repellence(&g, &p), 3);
        assert_eq!(max_immunity(&g, &p), 0);
        assert_eq!(max_stability(&g, &p), 0);
    }

    #[test]
    fn ioc_values() {
        let (g, p) = ioc(IocParams::standard(3));
        assert_eq!(max_resiliency(&g, &p), 1);
        assert_eq!(max_repellence(&g, &p), 2);
        assert_eq!(max_immunity(&g, &p), 3);
        assert_eq!(max_stability(&g, &p), 2);
    }

    #[test]
    fn ioc_stability_theorem_parameters() {
        let params = IocParams {
            q: Payoff::ratio(1, 10),
            b: Payoff::from_integer(30),
            ..IocParams::standard(3)
        };
        let (g, p) = ioc(params);
        assert_eq!(max_stability(&g, &p), 2);
    }

    #[test]
    fn constant_game_is_maximal() {
        let c = constant_game(4);
        let p = c.spec().profile(vec![0, 1, 0, 1]).unwrap();
        assert_eq!(max_resiliency(&c, &p), 4);
        assert_eq!(max_repellence(&c, &p), 4);
        assert_eq!(max_immunity(&c, &p), 4);
        assert_eq!(max_stability(&c, &p), 4);
    }

    #[test]
    fn weak_dominance_examples() {
        let (g, _) = fd(3);
        let p1 = g.spec().coalition(vec![0]).unwrap();
        let forward = g.spec().profile(vec![FORWARD, DROP, DROP]).unwrap();
        assert!(!is_weakly_dominant(&g, &forward, &p1));

        let (g, p) = ioc(IocParams::standard(3));
        assert!(is_weakly_dominant(&g, &p, &p1));

        let c = constant_game(3);
        let p = c.spec().profile(vec![1, 1, 0]).unwrap();
        for members in [vec![0], vec![1, 2], vec![0, 1, 2]] {
            let coalition = c.spec().coalition(members).unwrap();
            assert!(is_weakly_dominant(&c, &p, &coalition));
        }
    }

    #[test]
    fn single_player_game() {
        let spec = GameSpec::with_counts(&[2]).unwrap();
        let g =
            GameTable::new(spec, vec![Payoff::from_integer(1), Payoff::from_integer(3)]).unwrap();
        let best = g.spec().profile(vec![1]).unwrap();
        let worst = g.spec().profile(vec![0]).unwrap();
        assert_eq!(max_resiliency(&g, &best), 1);
        assert_eq!(max_resiliency(&g, &worst), 0);
        assert_eq!(max_immunity(&g, &worst), 1);
        assert_eq!(max_stability(&g, &best), 1);
    }
}
