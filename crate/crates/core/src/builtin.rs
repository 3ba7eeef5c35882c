//! Formula-driven implementations of two benchmark games: Incentivized Outsourced
//! Computation (IOC) and the Forwarding Dilemma (FD).
//!
//! Both games are symmetric and anonymous, so utilities are computed on demand from the
//! closed-form expected payoffs instead of a materialized table.

use thiserror::Error;

use crate::game::{GameError, GameSpec, GameTable, PureProfile, UtilityOracle};
use crate::payoff::Payoff;

/// Largest player count [`export_nfg`] will materialize.
pub const MAX_EXPORT_PLAYERS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("at least 2 players are required, got {0}")]
    TooFewPlayers(usize),
    #[error("q must satisfy 0 < q < 1, got {0}")]
    ProbabilityOutOfRange(String),
    #[error("costs must satisfy cost_lazy < cost_diligent < r (got {cost_lazy} < {cost_diligent} < {r})")]
    CostOrdering {
        cost_lazy: String,
        cost_diligent: String,
        r: String,
    },
    #[error("forwarding cost must be below the gain (c < g), got c={c}, g={g}")]
    CostNotBelowGain { c: String, g: String },
    #[error("{players} players exceed the export limit of {limit}")]
    TooManyPlayers { players: usize, limit: usize },
}

pub const DILIGENT: usize = 0;
pub const LAZY: usize = 1;
pub const FORWARD: usize = 0;
pub const DROP: usize = 1;

fn player_spec(n: usize, actions: [&str; 2]) -> GameSpec {
    let players = (1..=n).map(|i| format!("Player {i}")).collect();
    let actions = (0..n)
        .map(|_| actions.iter().map(|a| a.to_string()).collect())
        .collect();
    GameSpec::new(players, actions).expect("builtin spec is well formed")
}

fn count_others(profile: &PureProfile, player: usize, action: usize) -> usize {
    profile
        .actions()
        .iter()
        .enumerate()
        .filter(|&(i, &a)| i != player && a == action)
        .count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IocParams {
    pub n: usize,
    /// c(1), the cost of running the correct algorithm.
    pub cost_diligent: Payoff,
    /// c(q), the cost of the cheaper algorithm.
    pub cost_lazy: Payoff,
    /// Probability the cheap algorithm is correct.
    pub q: Payoff,
    pub r: Payoff,
    pub b: Payoff,
    pub f: Payoff,
}

impl IocParams {
    /// cost(1)=10, cost(q)=5, q=1/2, r=20, b=20, f=5/2.
    pub fn standard(n: usize) -> Self {
        IocParams {
            n,
            cost_diligent: Payoff::from_integer(10),
            cost_lazy: Payoff::from_integer(5),
            q: Payoff::ratio(1, 2),
            r: Payoff::from_integer(20),
            b: Payoff::from_integer(20),
            f: Payoff::ratio(5, 2),
        }
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        if self.n < 2 {
            return Err(ParamError::TooFewPlayers(self.n));
        }
        if !(self.q > Payoff::zero() && self.q < Payoff::from_integer(1)) {
            return Err(ParamError::ProbabilityOutOfRange(self.q.to_string()));
        }
        if !(self.cost_lazy < self.cost_diligent && self.cost_diligent < self.r) {
            return Err(ParamError::CostOrdering {
                cost_lazy: self.cost_lazy.to_string(),
                cost_diligent: self.cost_diligent.to_string(),
                r: self.r.to_string(),
            });
        }
        Ok(())
    }
}

/// Incentivized Outsourced Computation with `n` contractors choosing Diligent or Lazy.
#[derive(Debug, Clone)]
pub struct IocGame {
    params: IocParams,
    spec: GameSpec,
}

impl IocGame {
    pub fn new(params: IocParams) -> Result<Self, ParamError> {
        params.validate()?;
        let spec = player_spec(params.n, ["Diligent", "Lazy"]);
        Ok(IocGame { params, spec })
    }

    pub fn params(&self) -> &IocParams {
        &self.params
    }

    /// Expected utility for a player taking `action` while `lazy_others` of the other
    /// `n - 1` players are lazy.
    pub fn expected_utility(&self, action: usize, lazy_others: usize) -> Payoff {
        let IocParams {
            n,
            cost_diligent,
            cost_lazy,
            q,
            r,
            b,
            f,
        } = &self.params;
        let one = Payoff::from_integer(1);
        let miss = &one - q;
        if action == DILIGENT {
            if lazy_others == 0 {
                r - cost_diligent
            } else {
                &(r + &(b * &miss)) - cost_diligent
            }
        } else if lazy_others == n - 1 {
            // Every lazy output agrees, so the boss accepts.
            r - cost_lazy
        } else {
            let k = lazy_others as i64;
            let share = if lazy_others == 0 {
                b * &Payoff::from_integer(*n as i64 - 1)
            } else {
                &(b * &Payoff::from_integer(*n as i64 - k - 1)) / &Payoff::from_integer(k + 1)
            };
            let penalty = &(f + &share) * &miss;
            &(&(r * q) - &penalty) - cost_lazy
        }
    }
}

impl UtilityOracle for IocGame {
    fn spec(&self) -> &GameSpec {
        &self.spec
    }

    fn utility(&self, profile: &PureProfile, player: usize) -> Payoff {
        let action = profile.action(player);
        self.expected_utility(action, count_others(profile, player, LAZY))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FdParams {
    pub n: usize,
    /// Network gain.
    pub g: Payoff,
    /// Forwarding cost.
    pub c: Payoff,
}

impl FdParams {
    /// g=2, c=1.
    pub fn standard(n: usize) -> Self {
        FdParams {
            n,
            g: Payoff::from_integer(2),
            c: Payoff::from_integer(1),
        }
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        if self.n < 2 {
            return Err(ParamError::TooFewPlayers(self.n));
        }
        if self.c >= self.g {
            return Err(ParamError::CostNotBelowGain {
                c: self.c.to_string(),
                g: self.g.to_string(),
            });
        }
        Ok(())
    }
}

/// Forwarding Dilemma: each node forwards a flooded packet (paying `c`) or drops it.
#[derive(Debug, Clone)]
pub struct FdGame {
    params: FdParams,
    spec: GameSpec,
}

impl FdGame {
    pub fn new(params: FdParams) -> Result<Self, ParamError> {
        params.validate()?;
        let spec = player_spec(params.n, ["Forward", "Drop"]);
        Ok(FdGame { params, spec })
    }

    pub fn params(&self) -> &FdParams {
        &self.params
    }
}

impl UtilityOracle for FdGame {
    fn spec(&self) -> &GameSpec {
        &self.spec
    }

    fn utility(&self, profile: &PureProfile, player: usize) -> Payoff {
        if profile.action(player) == FORWARD {
            &self.params.g - &self.params.c
        } else if count_others(profile, player, FORWARD) > 0 {
            self.params.g.clone()
        } else {
            Payoff::zero()
        }
    }
}

/// Either builtin game, chosen at runtime.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum BuiltinGame {
    Ioc(IocGame),
    Fd(FdGame),
}

impl BuiltinGame {
    /// The profile whose equilibrium properties are of interest: everyone diligent for IOC,
    /// the first player forwarding and the rest dropping for FD.
    pub fn desired_profile(&self) -> PureProfile {
        let n = self.spec().num_players();
        let actions = match self {
            BuiltinGame::Ioc(_) => vec![DILIGENT; n],
            BuiltinGame::Fd(_) => (0..n)
                .map(|i| if i == 0 { FORWARD } else { DROP })
                .collect(),
        };
        self.spec().profile(actions).expect("valid by construction")
    }

    pub fn describe(&self) -> String {
        match self {
            BuiltinGame::Ioc(g) => {
                let p = g.params();
                format!(
                    "IOC(n={}, cost_diligent={}, cost_lazy={}, q={}, r={}, b={}, f={})",
                    p.n, p.cost_diligent, p.cost_lazy, p.q, p.r, p.b, p.f
                )
            }
            BuiltinGame::Fd(g) => {
                let p = g.params();
                format!("FD(n={}, g={}, c={})", p.n, p.g, p.c)
            }
        }
    }
}

impl UtilityOracle for BuiltinGame {
    fn spec(&self) -> &GameSpec {
        match self {
            BuiltinGame::Ioc(g) => g.spec(),
            BuiltinGame::Fd(g) => g.spec(),
        }
    }

    fn utility(&self, profile: &PureProfile, player: usize) -> Payoff {
        match self {
            BuiltinGame::Ioc(g) => g.utility(profile, player),
            BuiltinGame::Fd(g) => g.utility(profile, player),
        }
    }
}

impl From<IocGame> for BuiltinGame {
    fn from(g: IocGame) -> Self {
        BuiltinGame::Ioc(g)
    }
}

impl From<FdGame> for BuiltinGame {
    fn from(g: FdGame) -> Self {
        BuiltinGame::Fd(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExportError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Game(#[from] GameError),
}

/// Dense table of a builtin game, refused above [`MAX_EXPORT_PLAYERS`] players.
pub fn export_nfg<G: UtilityOracle + ?Sized>(game: &G) -> Result<GameTable, ExportError> {
    let players = game.spec().num_players();
    if players > MAX_EXPORT_PLAYERS {
        return Err(ParamError::TooManyPlayers {
            players,
            limit: MAX_EXPORT_PLAYERS,
        }
        .into());
    }
    Ok(GameTable::from_oracle(game)?)
}
