//! Definition-direct predicates for every equilibrium notion.
//!
//! These are brute-force quantifier translations with no early exit and no code shared with
//! [`crate::equilibria`]: subsets are bitmasks, "all deviations of C" is every profile that
//! agrees with the base outside C, and maxima are taken over every parameter value. They are
//! only usable for a handful of players with two or three actions each.

use crate::game::{GameSpec, PureProfile, UtilityOracle};
use crate::payoff::Payoff;

type Mask = u32;

fn all_profiles(spec: &GameSpec) -> Vec<PureProfile> {
    let counts = spec.action_counts();
    let mut out = Vec::new();
    let mut digits = vec![0usize; counts.len()];
    loop {
        out.push(spec.profile(digits.clone()).expect("digits stay in range"));
        let mut pos = counts.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < counts[pos] {
                break;
            }
            digits[pos] = 0;
        }
    }
}

fn has(mask: Mask, i: usize) -> bool {
    mask >> i & 1 == 1
}

fn size(mask: Mask) -> usize {
    mask.count_ones() as usize
}

fn agree_outside(a: &PureProfile, b: &PureProfile, mask: Mask) -> bool {
    (0..a.len()).all(|i| has(mask, i) || a.action(i) == b.action(i))
}

fn total<G: UtilityOracle + ?Sized>(game: &G, profile: &PureProfile, mask: Mask) -> Payoff {
    (0..profile.len())
        .filter(|&i| has(mask, i))
        .map(|i| game.utility(profile, i))
        .sum()
}

fn subsets(n: usize) -> impl Iterator<Item = Mask> {
    0..(1 as Mask) << n
}

/// No player gains by switching to a different action alone.
pub fn oracle_is_nash<G: UtilityOracle + ?Sized>(game: &G, profile: &PureProfile) -> bool {
    oracle_is_k_resilient(game, profile, 1)
}

/// For every C with |C| <= k, every s'_C and every i in C: U_i(s) >= U_i(s'_C, s_-C).
pub fn oracle_is_k_resilient<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    k: usize,
) -> bool {
    let spec = game.spec();
    let n = spec.num_players();
    let profiles = all_profiles(spec);
    let mut ok = true;
    for c in subsets(n).filter(|&c| size(c) >= 1 && size(c) <= k) {
        for dev in profiles.iter().filter(|p| agree_outside(p, profile, c)) {
            for i in (0..n).filter(|&i| has(c, i)) {
                ok &= game.utility(profile, i) >= game.utility(dev, i);
            }
        }
    }
    ok
}

/// For every C with |C| <= l and every s'_C: U_C(s) >= U_C(s'_C, s_-C).
pub fn oracle_is_l_repellent<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    l: usize,
) -> bool {
    let spec = game.spec();
    let n = spec.num_players();
    let profiles = all_profiles(spec);
    let mut ok = true;
    for c in subsets(n).filter(|&c| size(c) >= 1 && size(c) <= l) {
        for dev in profiles.iter().filter(|p| agree_outside(p, profile, c)) {
            ok &= total(game, profile, c) >= total(game, dev, c);
        }
    }
    ok
}

/// For every T with |T| <= t, every s'_T and every i outside T: U_i(s'_T, s_-T) >= U_i(s).
pub fn oracle_is_t_immune<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    t: usize,
) -> bool {
    let spec = game.spec();
    let n = spec.num_players();
    let profiles = all_profiles(spec);
    let mut ok = true;
    for tm in subsets(n).filter(|&tm| size(tm) >= 1 && size(tm) <= t) {
        for dev in profiles.iter().filter(|p| agree_outside(p, profile, tm)) {
            for i in (0..n).filter(|&i| !has(tm, i)) {
                ok &= game.utility(dev, i) >= game.utility(profile, i);
            }
        }
    }
    ok
}

fn joint_predicate<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    k: usize,
    t: usize,
    by_total: bool,
) -> bool {
    let spec = game.spec();
    let n = spec.num_players();
    let profiles = all_profiles(spec);
    let mut ok = true;
    for c in subsets(n).filter(|&c| size(c) <= k) {
        for tm in subsets(n).filter(|&tm| size(tm) <= t && tm & c == 0) {
            // attacked = s_-T with s'_T; response additionally replaces C's part.
            for attacked in profiles.iter().filter(|p| agree_outside(p, profile, tm)) {
                for response in profiles.iter().filter(|p| agree_outside(p, attacked, c)) {
                    if by_total {
                        ok &= total(game, attacked, c) >= total(game, response, c);
                    } else {
                        for i in (0..n).filter(|&i| has(c, i)) {
                            ok &= game.utility(attacked, i) >= game.utility(response, i);
                        }
                    }
                }
            }
        }
    }
    ok
}

/// For all disjoint C, T with |C| <= k, |T| <= t, all s'_T, s'_C and all i in C:
/// U_i(s_-T, s'_T) >= U_i(s_-(C∪T), s'_C, s'_T).
pub fn oracle_is_kt_robust<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    k: usize,
    t: usize,
) -> bool {
    joint_predicate(game, profile, k, t, false)
}

/// As [`oracle_is_kt_robust`] comparing the coalition total U_C instead of each member.
pub fn oracle_is_lt_resistant<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    l: usize,
    t: usize,
) -> bool {
    joint_predicate(game, profile, l, t, true)
}

fn weakly_dominant_mask<G: UtilityOracle + ?Sized>(
    game: &G,
    profiles: &[PureProfile],
    profile: &PureProfile,
    c: Mask,
) -> bool {
    let n = profile.len();
    let mut ok = true;
    // `other` plays s'_C and s'_-C; `held` keeps s'_-C with C back on s_C.
    for other in profiles {
        let held = profiles
            .iter()
            .find(|p| {
                (0..n).all(|i| {
                    p.action(i)
                        == if has(c, i) {
                            profile.action(i)
                        } else {
                            other.action(i)
                        }
                })
            })
            .expect("held profile exists");
        ok &= total(game, held, c) >= total(game, other, c);
    }
    ok
}

/// Weak dominance of the coalition's part of `profile`, members given by index.
pub fn oracle_is_weakly_dominant<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    members: &[usize],
) -> bool {
    let c = members.iter().fold(0 as Mask, |m, &i| m | 1 << i);
    weakly_dominant_mask(game, &all_profiles(game.spec()), profile, c)
}

/// Every coalition with at most m members plays a weakly dominant joint strategy.
pub fn oracle_is_m_stable<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    m: usize,
) -> bool {
    let n = game.spec().num_players();
    let profiles = all_profiles(game.spec());
    let mut ok = true;
    for c in subsets(n).filter(|&c| size(c) >= 1 && size(c) <= m) {
        ok &= weakly_dominant_mask(game, &profiles, profile, c);
    }
    ok
}

/// The literal partition form of m-stability: for every partition of the players into blocks
/// of size 1..=m, every block plays a weakly dominant joint strategy.
pub fn oracle_is_m_stable_partitions<G: UtilityOracle + ?Sized>(
    game: &G,
    profile: &PureProfile,
    m: usize,
) -> bool {
    let n = game.spec().num_players();
    let profiles = all_profiles(game.spec());
    let mut ok = true;
    for blocks in set_partitions(n) {
        if blocks.iter().all(|&b| size(b) <= m) {
            for b in blocks {
                ok &= weakly_dominant_mask(game, &profiles, profile, b);
            }
        }
    }
    ok
}

/// All set partitions of `0..n` as lists of block masks, via restricted growth strings.
fn set_partitions(n: usize) -> Vec<Vec<Mask>> {
    fn grow(i: usize, n: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<Mask>>) {
        if i == n {
            let blocks = labels.iter().copied().max().map_or(0, |m| m + 1);
            let mut masks = vec![0 as Mask; blocks];
            for (player, &label) in labels.iter().enumerate() {
                masks[label] |= 1 << player;
            }
            out.push(masks);
            return;
        }
        let next = labels.iter().copied().max().map_or(0, |m| m + 1);
        for label in 0..=next {
            labels.push(label);
            grow(i + 1, n, labels, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    grow(0, n, &mut Vec::new(), &mut out);
    out
}

/// Largest v in 0..=n for which `holds(v)`; every v is evaluated.
pub fn oracle_max(n: usize, holds: impl Fn(usize) -> bool) -> usize {
    (0..=n).filter(|&v| holds(v)).max().unwrap_or(0)
}

/// (k, t_k) for k = 1.. while t_k >= 1, t_k being the largest t <= n - k for which
/// `holds(k, t)`.
pub fn oracle_frontier(n: usize, holds: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 1..n {
        let t = oracle_max(n - k, |t| holds(k, t));
        if t == 0 {
            break;
        }
        out.push((k, t));
    }
    out
}
