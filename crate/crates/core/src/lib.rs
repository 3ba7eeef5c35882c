//! Security equilibria of pure strategy profiles in n-player normal-form games.
//!
//! Given a game and a pure profile, the [`equilibria`] module finds the largest parameters for
//! which the profile is k-resilient, l-repellent, t-immune, (k,t)-robust, (l,t)-resistant and
//! m-stable, all by exhaustive search with early exit. [`oracle`] holds slow
//! definition-direct versions of the same predicates for cross-checking.
//!
//! Games come from a dense [`GameTable`] (typically parsed from an `.nfg` file by [`nfg`]) or
//! from the formula-driven games in [`builtin`].

pub mod bench;
pub mod builtin;
pub mod equilibria;
pub mod game;
pub mod nfg;
pub mod oracle;
pub mod payoff;
pub mod verify;

pub use equilibria::{analyze, AnalysisReport, Check, Frontier, FrontierPair};
pub use game::{
    coalition_utility, coalitions_of_size, deviations, enumerate_profiles, Coalition, EvalCounter,
    GameError, GameSpec, GameTable, PureProfile, UtilityOracle,
};
pub use payoff::Payoff;
