//! Reader and writer for the Gambit `.nfg` normal-form game format.
//!
//! Two body layouts are understood:
//!
//! * payoff list: `n * S` numbers, one group of `n` per profile;
//! * outcome list: a brace list of outcomes `{ "name" p1, p2, ... }` followed by `S` outcome
//!   indices (1-based, `0` is the null outcome paying zero to everyone).
//!
//! In both, profiles are listed with the first player's action varying fastest, matching
//! [`crate::game::enumerate_profiles`]. Output always uses the payoff list.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::game::{GameError, GameSpec, GameTable, UtilityOracle};
use crate::payoff::Payoff;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NfgVariant {
    PayoffList,
    OutcomeList,
}

/// A parsed file: metadata plus the dense table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NfgDocument {
    pub title: String,
    pub comment: Option<String>,
    pub variant: NfgVariant,
    pub table: GameTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NfgErrorKind {
    #[error("expected header `NFG 1 R` or `NFG 1 D`")]
    BadHeader,
    #[error("unterminated quoted string")]
    UnterminatedString,
    #[error("action list does not match players: {0}")]
    ActionListMismatch(String),
    #[error("invalid action count `{0}`")]
    BadActionCount(String),
    #[error("expected {expected} payoffs, found {found}")]
    PayoffCount { expected: usize, found: usize },
    #[error("expected {expected} outcome indices, found {found}")]
    OutcomeIndexCount { expected: usize, found: usize },
    #[error("outcome index {index} out of range (file defines {defined} outcomes)")]
    OutcomeIndexOutOfRange { index: String, defined: usize },
    #[error("non-numeric payoff `{0}`")]
    NonNumeric(String),
    #[error("expected {expected}, found {found}")]
    Unexpected {
        expected: &'static str,
        found: String,
    },
    #[error("unexpected end of input, expected {0}")]
    UnexpectedEof(&'static str),
    #[error("game is too large")]
    TooLarge,
    #[error(transparent)]
    InvalidGame(#[from] GameError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct NfgError {
    pub kind: NfgErrorKind,
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Comma,
    Str(String),
    Word(String),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Open => f.write_str("`{`"),
            Tok::Close => f.write_str("`}`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Str(s) => write!(f, "string \"{s}\""),
            Tok::Word(w) => write!(f, "`{w}`"),
        }
    }
}

fn tokenize(text: &str) -> Result<(Vec<(Tok, Pos)>, Pos), NfgError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut pos = Pos { line: 1, column: 1 };
    let advance = |c: char, pos: &mut Pos| {
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
        } else {
            pos.column += 1;
        }
    };

    while let Some(&c) = chars.peek() {
        let start = pos;
        if c.is_whitespace() {
            chars.next();
            advance(c, &mut pos);
            continue;
        }
        match c {
            '{' | '}' | ',' => {
                chars.next();
                advance(c, &mut pos);
                let tok = match c {
                    '{' => Tok::Open,
                    '}' => Tok::Close,
                    _ => Tok::Comma,
                };
                out.push((tok, start));
            }
            '"' => {
                chars.next();
                advance(c, &mut pos);
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('"') => {
                            advance('"', &mut pos);
                            break;
                        }
                        Some(ch) => {
                            advance(ch, &mut pos);
                            s.push(ch);
                        }
                        None => {
                            return Err(NfgError {
                                kind: NfgErrorKind::UnterminatedString,
                                line: start.line,
                                column: start.column,
                            })
                        }
                    }
                }
                out.push((Tok::Str(s), start));
            }
            _ => {
                let mut w = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_whitespace() || matches!(ch, '{' | '}' | ',' | '"') {
                        break;
                    }
                    chars.next();
                    advance(ch, &mut pos);
                    w.push(ch);
                }
                out.push((Tok::Word(w), start));
            }
        }
    }
    Ok((out, pos))
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.toks.get(self.at + offset).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn fail<T>(&self, kind: NfgErrorKind) -> Result<T, NfgError> {
        self.fail_at(self.pos(), kind)
    }

    fn fail_at<T>(&self, pos: Pos, kind: NfgErrorKind) -> Result<T, NfgError> {
        Err(NfgError {
            kind,
            line: pos.line,
            column: pos.column,
        })
    }

    fn next(&mut self, expected: &'static str) -> Result<(Tok, Pos), NfgError> {
        match self.toks.get(self.at) {
            Some(t) => {
                self.at += 1;
                Ok(t.clone())
            }
            None => self.fail(NfgErrorKind::UnexpectedEof(expected)),
        }
    }

    fn expect(&mut self, want: Tok, expected: &'static str) -> Result<(), NfgError> {
        let (tok, pos) = self.next(expected)?;
        if tok == want {
            Ok(())
        } else {
            self.fail_at(
                pos,
                NfgErrorKind::Unexpected {
                    expected,
                    found: tok.to_string(),
                },
            )
        }
    }

    fn string(&mut self, expected: &'static str) -> Result<String, NfgError> {
        match self.next(expected)? {
            (Tok::Str(s), _) => Ok(s),
            (tok, pos) => self.fail_at(
                pos,
                NfgErrorKind::Unexpected {
                    expected,
                    found: tok.to_string(),
                },
            ),
        }
    }

    /// `{ "a" "b" ... }`
    fn string_list(&mut self, expected: &'static str) -> Result<Vec<String>, NfgError> {
        self.expect(Tok::Open, "`{`")?;
        let mut out = Vec::new();
        loop {
            match self.next(expected)? {
                (Tok::Close, _) => return Ok(out),
                (Tok::Str(s), _) => out.push(s),
                (Tok::Comma, _) => {}
                (tok, pos) => {
                    return self.fail_at(
                        pos,
                        NfgErrorKind::Unexpected {
                            expected,
                            found: tok.to_string(),
                        },
                    )
                }
            }
        }
    }

    fn skip_commas(&mut self) {
        while self.peek() == Some(&Tok::Comma) {
            self.at += 1;
        }
    }
}

fn number(word: &str, pos: Pos) -> Result<Payoff, NfgError> {
    word.parse().map_err(|_| NfgError {
        kind: NfgErrorKind::NonNumeric(word.to_string()),
        line: pos.line,
        column: pos.column,
    })
}

enum Actions {
    Counts(Vec<usize>),
    Names(Vec<Vec<String>>),
}

/// Parses a document in either layout.
pub fn parse_nfg_document(text: &str) -> Result<NfgDocument, NfgError> {
    let (toks, end) = tokenize(text)?;
    let mut p = Parser { toks, at: 0, end };

    let header_pos = p.pos();
    let header: Vec<_> = (0..3).filter_map(|i| p.peek_at(i).cloned()).collect();
    let ok = matches!(
        header.as_slice(),
        [Tok::Word(a), Tok::Word(b), Tok::Word(c)]
            if a == "NFG" && b == "1" && (c == "R" || c == "D")
    );
    if !ok {
        return p.fail_at(header_pos, NfgErrorKind::BadHeader);
    }
    p.at += 3;

    let title = p.string("quoted title")?;
    let players_pos = p.pos();
    let players = p.string_list("quoted player name")?;
    if players.is_empty() {
        return p.fail_at(players_pos, GameError::NoPlayers.into());
    }

    let actions_pos = p.pos();
    let actions = if p.peek() == Some(&Tok::Open) && p.peek_at(1) == Some(&Tok::Open) {
        p.expect(Tok::Open, "`{`")?;
        let mut names = Vec::new();
        while p.peek() == Some(&Tok::Open) {
            names.push(p.string_list("quoted action name")?);
        }
        p.expect(Tok::Close, "`}`")?;
        Actions::Names(names)
    } else {
        p.expect(Tok::Open, "`{`")?;
        let mut counts = Vec::new();
        loop {
            match p.next("action count")? {
                (Tok::Close, _) => break,
                (Tok::Comma, _) => {}
                (Tok::Word(w), pos) => match w.parse::<usize>() {
                    Ok(m) if m >= 1 => counts.push(m),
                    _ => return p.fail_at(pos, NfgErrorKind::BadActionCount(w)),
                },
                (tok, pos) => {
                    return p.fail_at(
                        pos,
                        NfgErrorKind::Unexpected {
                            expected: "action count",
                            found: tok.to_string(),
                        },
                    )
                }
            }
        }
        Actions::Counts(counts)
    };

    let counts: Vec<usize> = match &actions {
        Actions::Counts(c) => c.clone(),
        Actions::Names(names) => names.iter().map(Vec::len).collect(),
    };
    if counts.len() != players.len() {
        return p.fail_at(
            actions_pos,
            NfgErrorKind::ActionListMismatch(format!(
                "{} players but {} action lists",
                players.len(),
                counts.len()
            )),
        );
    }
    if let Some(player) = counts.iter().position(|&m| m == 0) {
        return p.fail_at(actions_pos, GameError::NoActions { player }.into());
    }
    let n = players.len();
    let profiles = match counts.iter().try_fold(1usize, |acc, &m| acc.checked_mul(m)) {
        Some(s) if s.checked_mul(n).is_some() => s,
        _ => return p.fail_at(actions_pos, NfgErrorKind::TooLarge),
    };

    let comment = match p.peek() {
        Some(Tok::Str(_)) => Some(p.string("comment")?),
        _ => None,
    };

    let body_pos = p.pos();
    let (variant, payoffs) = if p.peek() == Some(&Tok::Open) {
        (NfgVariant::OutcomeList, outcome_body(&mut p, n, profiles)?)
    } else {
        (
            NfgVariant::PayoffList,
            payoff_body(&mut p, n * profiles, body_pos)?,
        )
    };

    // Payoff counts bound the action counts here, so synthesizing labels stays proportional
    // to the input size.
    let names = match actions {
        Actions::Names(names) => names,
        Actions::Counts(counts) => counts
            .iter()
            .map(|&m| (1..=m).map(|a| a.to_string()).collect())
            .collect(),
    };
    let spec = GameSpec::new(players, names).map_err(|e| NfgError {
        kind: e.into(),
        line: players_pos.line,
        column: players_pos.column,
    })?;
    let table = GameTable::new(spec, payoffs).map_err(|e| NfgError {
        kind: e.into(),
        line: body_pos.line,
        column: body_pos.column,
    })?;

    Ok(NfgDocument {
        title,
        comment,
        variant,
        table,
    })
}

fn payoff_body(p: &mut Parser, expected: usize, body_pos: Pos) -> Result<Vec<Payoff>, NfgError> {
    let mut payoffs = Vec::new();
    while let Some((tok, pos)) = p.toks.get(p.at).cloned() {
        p.at += 1;
        match tok {
            Tok::Comma => {}
            Tok::Word(w) => payoffs.push(number(&w, pos)?),
            other => {
                return p.fail_at(
                    pos,
                    NfgErrorKind::Unexpected {
                        expected: "payoff",
                        found: other.to_string(),
                    },
                )
            }
        }
    }
    if payoffs.len() != expected {
        return p.fail_at(
            if payoffs.len() > expected {
                body_pos
            } else {
                p.end
            },
            NfgErrorKind::PayoffCount {
                expected,
                found: payoffs.len(),
            },
        );
    }
    Ok(payoffs)
}

fn outcome_body(p: &mut Parser, n: usize, profiles: usize) -> Result<Vec<Payoff>, NfgError> {
    p.expect(Tok::Open, "`{`")?;
    let mut outcomes: Vec<Vec<Payoff>> = Vec::new();
    loop {
        p.skip_commas();
        let outcome_pos = p.pos();
        match p.next("outcome or `}`")? {
            (Tok::Close, _) => break,
            (Tok::Open, _) => {}
            (tok, pos) => {
                return p.fail_at(
                    pos,
                    NfgErrorKind::Unexpected {
                        expected: "outcome or `}`",
                        found: tok.to_string(),
                    },
                )
            }
        }
        p.string("quoted outcome name")?;
        let mut values = Vec::new();
        loop {
            match p.next("payoff or `}`")? {
                (Tok::Close, _) => break,
                (Tok::Comma, _) => {}
                (Tok::Word(w), pos) => values.push(number(&w, pos)?),
                (tok, pos) => {
                    return p.fail_at(
                        pos,
                        NfgErrorKind::Unexpected {
                            expected: "payoff or `}`",
                            found: tok.to_string(),
                        },
                    )
                }
            }
        }
        if values.len() != n {
            return p.fail_at(
                outcome_pos,
                NfgErrorKind::PayoffCount {
                    expected: n,
                    found: values.len(),
                },
            );
        }
        outcomes.push(values);
    }

    let mut payoffs = Vec::new();
    let mut found = 0;
    while let Some((tok, pos)) = p.toks.get(p.at).cloned() {
        p.at += 1;
        let w = match tok {
            Tok::Comma => continue,
            Tok::Word(w) => w,
            other => {
                return p.fail_at(
                    pos,
                    NfgErrorKind::Unexpected {
                        expected: "outcome index",
                        found: other.to_string(),
                    },
                )
            }
        };
        let index = match w.parse::<usize>() {
            Ok(i) if i <= outcomes.len() => i,
            Ok(_) => {
                return p.fail_at(
                    pos,
                    NfgErrorKind::OutcomeIndexOutOfRange {
                        index: w,
                        defined: outcomes.len(),
                    },
                )
            }
            Err(_) if w.bytes().all(|b| b.is_ascii_digit()) => {
                return p.fail_at(
                    pos,
                    NfgErrorKind::OutcomeIndexOutOfRange {
                        index: w,
                        defined: outcomes.len(),
                    },
                )
            }
            Err(_) => return p.fail_at(pos, NfgErrorKind::NonNumeric(w)),
        };
        found += 1;
        if found > profiles {
            continue;
        }
        match index {
            0 => payoffs.extend(std::iter::repeat_n(Payoff::zero(), n)),
            i => payoffs.extend(outcomes[i - 1].iter().cloned()),
        }
    }
    if found != profiles {
        return p.fail_at(
            p.end,
            NfgErrorKind::OutcomeIndexCount {
                expected: profiles,
                found,
            },
        );
    }
    Ok(payoffs)
}

/// Parses a document and keeps only the table.
pub fn parse_nfg(text: &str) -> Result<GameTable, NfgError> {
    parse_nfg_document(text).map(|d| d.table)
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "'"))
}

/// Payoff-list rendering of a table: header, then one line of `n` payoffs per profile.
pub fn write_nfg(game: &GameTable, title: &str) -> String {
    let spec = game.spec();
    let n = spec.num_players();
    let mut out = String::new();
    let players: Vec<_> = spec.player_names().iter().map(|p| quoted(p)).collect();
    let counts: Vec<_> = spec.action_counts().iter().map(usize::to_string).collect();
    let _ = writeln!(
        out,
        "NFG 1 R {} {{ {} }} {{ {} }}",
        quoted(title),
        players.join(" "),
        counts.join(" ")
    );
    out.push('\n');
    for group in game.payoffs().chunks(n) {
        let line: Vec<_> = group.iter().map(Payoff::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
