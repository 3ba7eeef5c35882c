//! Core game representation: players, actions, pure profiles, utility queries and the
//! deterministic enumeration of profiles, coalitions and coalition deviations.
//!
//! All orderings here are mixed-radix with the lowest player index varying fastest, which is
//! the order payoffs are listed in an NFG file.

use std::collections::HashSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use thiserror::Error;

use crate::payoff::Payoff;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("a game needs at least one player")]
    NoPlayers,
    #[error("player {player} has no actions")]
    NoActions { player: usize },
    #[error("duplicate player name `{0}`")]
    DuplicatePlayer(String),
    #[error("player {player} has duplicate action name `{action}`")]
    DuplicateAction { player: usize, action: String },
    #[error("profile has {found} entries but the game has {expected} players")]
    ProfileLength { expected: usize, found: usize },
    #[error("action index {index} out of range for player {player} ({count} actions)")]
    ActionOutOfRange {
        player: usize,
        index: usize,
        count: usize,
    },
    #[error("expected {expected} payoffs, found {found}")]
    PayoffCount { expected: usize, found: usize },
    #[error("invalid coalition: {0}")]
    InvalidCoalition(String),
    #[error("game has too many profiles to materialize")]
    TooLarge,
}

/// Players and their ordered action sets. Orders are fixed at construction and define every
/// index used elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameSpec {
    players: Vec<String>,
    actions: Vec<Vec<String>>,
}

impl GameSpec {
    pub fn new(players: Vec<String>, actions: Vec<Vec<String>>) -> Result<Self, GameError> {
        if players.is_empty() {
            return Err(GameError::NoPlayers);
        }
        if players.len() != actions.len() {
            return Err(GameError::ProfileLength {
                expected: players.len(),
                found: actions.len(),
            });
        }
        let mut seen = HashSet::new();
        for name in &players {
            if !seen.insert(name) {
                return Err(GameError::DuplicatePlayer(name.clone()));
            }
        }
        for (player, acts) in actions.iter().enumerate() {
            if acts.is_empty() {
                return Err(GameError::NoActions { player });
            }
            let mut seen = HashSet::new();
            for a in acts {
                if !seen.insert(a) {
                    return Err(GameError::DuplicateAction {
                        player,
                        action: a.clone(),
                    });
                }
            }
        }
        Ok(GameSpec { players, actions })
    }

    /// Players named `Player 1..n`, actions labelled `1..m_i`.
    pub fn with_counts(counts: &[usize]) -> Result<Self, GameError> {
        let players = (1..=counts.len()).map(|i| format!("Player {i}")).collect();
        let actions = counts
            .iter()
            .map(|&m| (1..=m).map(|a| a.to_string()).collect())
            .collect();
        Self::new(players, actions)
    }

    pub fn num_players(&self) -> usize {
        self.players.len()
    }

    pub fn num_actions(&self, player: usize) -> usize {
        self.actions[player].len()
    }

    pub fn action_counts(&self) -> Vec<usize> {
        self.actions.iter().map(Vec::len).collect()
    }

    pub fn player_names(&self) -> &[String] {
        &self.players
    }

    pub fn action_names(&self, player: usize) -> &[String] {
        &self.actions[player]
    }

    /// S, the number of pure profiles; `None` on overflow.
    pub fn profile_count(&self) -> Option<usize> {
        self.actions
            .iter()
            .try_fold(1usize, |acc, a| acc.checked_mul(a.len()))
    }

    pub fn profile(&self, actions: Vec<usize>) -> Result<PureProfile, GameError> {
        if actions.len() != self.num_players() {
            return Err(GameError::ProfileLength {
                expected: self.num_players(),
                found: actions.len(),
            });
        }
        for (player, &index) in actions.iter().enumerate() {
            let count = self.num_actions(player);
            if index >= count {
                return Err(GameError::ActionOutOfRange {
                    player,
                    index,
                    count,
                });
            }
        }
        Ok(PureProfile(actions))
    }

    /// Position of `profile` in [`enumerate_profiles`] order.
    pub fn profile_index(&self, profile: &PureProfile) -> usize {
        let mut index = 0;
        let mut stride = 1;
        for (player, &a) in profile.0.iter().enumerate() {
            index += a * stride;
            stride *= self.num_actions(player);
        }
        index
    }

    pub fn all_players(&self) -> Vec<usize> {
        (0..self.num_players()).collect()
    }

    pub fn coalition(&self, members: Vec<usize>) -> Result<Coalition, GameError> {
        Coalition::new(members, self.num_players())
    }
}

/// One action index per player.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureProfile(Vec<usize>);

impl PureProfile {
    pub fn actions(&self) -> &[usize] {
        &self.0
    }

    pub fn action(&self, player: usize) -> usize {
        self.0[player]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Copy of this profile with one player's action replaced.
    pub fn with_action(&self, player: usize, action: usize) -> PureProfile {
        let mut next = self.clone();
        next.0[player] = action;
        next
    }

    /// Copy of this profile taking `other`'s actions at the given positions.
    pub fn overlay(&self, other: &PureProfile, positions: &[usize]) -> PureProfile {
        let mut next = self.clone();
        for &p in positions {
            next.0[p] = other.0[p];
        }
        next
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for PureProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// A non-empty, strictly increasing set of player indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coalition(Vec<usize>);

impl Coalition {
    pub fn new(mut members: Vec<usize>, num_players: usize) -> Result<Self, GameError> {
        if members.is_empty() {
            return Err(GameError::InvalidCoalition("empty".into()));
        }
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(GameError::InvalidCoalition("duplicate member".into()));
        }
        if let Some(&last) = members.last() {
            if last >= num_players {
                return Err(GameError::InvalidCoalition(format!(
                    "player {last} out of range"
                )));
            }
        }
        Ok(Coalition(members))
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, player: usize) -> bool {
        self.0.binary_search(&player).is_ok()
    }

    /// Players of an `n`-player game not in this coalition, ascending.
    pub fn complement(&self, num_players: usize) -> Vec<usize> {
        (0..num_players).filter(|&p| !self.contains(p)).collect()
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// The game abstraction every analysis consumes.
///
/// Implementations must be total over valid profiles and deterministic.
pub trait UtilityOracle {
    fn spec(&self) -> &GameSpec;

    fn utility(&self, profile: &PureProfile, player: usize) -> Payoff;
}

impl<G: UtilityOracle + ?Sized> UtilityOracle for &G {
    fn spec(&self) -> &GameSpec {
        (**self).spec()
    }

    fn utility(&self, profile: &PureProfile, player: usize) -> Payoff {
        (**self).utility(profile, player)
    }
}

impl<G: UtilityOracle + ?Sized> UtilityOracle for Box<G> {
    fn spec(&self) -> &GameSpec {
        (**self).spec()
    }

    fn utility(&self, profile: &PureProfile, player: usize) -> Payoff {
        (**self).utility(profile, player)
    }
}

/// Dense payoff table: `n * S` values, grouped per profile in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameTable {
    spec: GameSpec,
    payoffs: Vec<Payoff>,
}

impl GameTable {
    pub fn new(spec: GameSpec, payoffs: Vec<Payoff>) -> Result<Self, GameError> {
        let expected = spec
            .profile_count()
            .and_then(|s| s.checked_mul(spec.num_players()))
            .ok_or(GameError::TooLarge)?;
        if payoffs.len() != expected {
            return Err(GameError::PayoffCount {
                expected,
                found: payoffs.len(),
            });
        }
        Ok(GameTable { spec, payoffs })
    }

    /// Materialize any oracle by querying it at every profile.
    pub fn from_oracle<G: UtilityOracle + ?Sized>(game: &G) -> Result<Self, GameError> {
        let spec = game.spec().clone();
        let n = spec.num_players();
        let total = spec
            .profile_count()
            .and_then(|s| s.checked_mul(n))
            .ok_or(GameError::TooLarge)?;
        let mut payoffs = Vec::with_capacity(total);
        for profile in enumerate_profiles(&spec) {
            for player in 0..n {
                payoffs.push(game.utility(&profile, player));
            }
        }
        Self::new(spec, payoffs)
    }

    pub fn payoffs(&self) -> &[Payoff] {
        &self.payoffs
    }

    pub fn into_parts(self) -> (GameSpec, Vec<Payoff>) {
        (self.spec, self.payoffs)
    }
}

impl UtilityOracle for GameTable {
    fn spec(&self) -> &GameSpec {
        &self.spec
    }

    fn utility(&self, profile: &PureProfile, player: usize) -> Payoff {
        let index = self.spec.profile_index(profile);
        self.payoffs[index * self.spec.num_players() + player].clone()
    }
}

/// Wraps an oracle and counts utility evaluations.
pub struct EvalCounter<G> {
    inner: G,
    evals: AtomicU64,
}

impl<G: UtilityOracle> EvalCounter<G> {
    pub fn new(inner: G) -> Self {
        EvalCounter {
            inner,
            evals: AtomicU64::new(0),
        }
    }

    pub fn evals(&self) -> u64 {
        self.evals.load(Ordering::Relaxed)
    }

    /// Returns the count accumulated so far and resets it to zero.
    pub fn take(&self) -> u64 {
        self.evals.swap(0, Ordering::Relaxed)
    }

    pub fn into_inner(self) -> G {
        self.inner
    }
}

impl<G: UtilityOracle> UtilityOracle for EvalCounter<G> {
    fn spec(&self) -> &GameSpec {
        self.inner.spec()
    }

    fn utility(&self, profile: &PureProfile, player: usize) -> Payoff {
        self.evals.fetch_add(1, Ordering::Relaxed);
        self.inner.utility(profile, player)
    }
}

/// Mixed-radix walk over the actions of a set of free positions, holding every other
/// position at its base value. The first free position varies fastest.
#[derive(Debug, Clone)]
pub struct Deviations {
    current: Vec<usize>,
    free: Vec<usize>,
    radices: Vec<usize>,
    done: bool,
}

impl Deviations {
    fn new(spec: &GameSpec, base: &PureProfile, free: Vec<usize>) -> Self {
        let mut current = base.actions().to_vec();
        for &p in &free {
            current[p] = 0;
        }
        let radices = free.iter().map(|&p| spec.num_actions(p)).collect();
        Deviations {
            current,
            free,
            radices,
            done: false,
        }
    }
}

impl Iterator for Deviations {
    type Item = PureProfile;

    fn next(&mut self) -> Option<PureProfile> {
        if self.done {
            return None;
        }
        let item = PureProfile(self.current.clone());
        self.done = true;
        for (&p, &radix) in self.free.iter().zip(&self.radices) {
            self.current[p] += 1;
            if self.current[p] < radix {
                self.done = false;
                break;
            }
            self.current[p] = 0;
        }
        Some(item)
    }
}

/// Every pure profile, first player's index varying fastest.
pub fn enumerate_profiles(spec: &GameSpec) -> Deviations {
    let base = PureProfile(vec![0; spec.num_players()]);
    Deviations::new(spec, &base, spec.all_players())
}

/// Every profile that agrees with `profile` outside `coalition`, including `profile` itself.
pub fn deviations(spec: &GameSpec, profile: &PureProfile, coalition: &Coalition) -> Deviations {
    Deviations::new(spec, profile, coalition.members().to_vec())
}

/// Same as [`deviations`] for an arbitrary (possibly empty) list of free positions.
pub fn deviations_over(spec: &GameSpec, profile: &PureProfile, positions: &[usize]) -> Deviations {
    Deviations::new(spec, profile, positions.to_vec())
}

/// All subsets of `players` with `size` members, lexicographic in member order.
/// `players` must be ascending. Out-of-range sizes yield nothing.
pub fn coalitions_of_size(players: &[usize], size: usize) -> impl Iterator<Item = Coalition> + '_ {
    let in_range = size >= 1 && size <= players.len();
    players
        .iter()
        .copied()
        .combinations(if in_range { size } else { 0 })
        .filter(move |_| in_range)
        .map(Coalition)
}

/// U_C(profile): the exact sum of the members' utilities.
pub fn coalition_utility<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    coalition: &Coalition,
) -> Payoff {
    coalition
        .members()
        .iter()
        .map(|&i| game.utility(profile, i))
        .sum()
}
