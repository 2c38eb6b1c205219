//! Positions and legal moves for Wythoff's game and its variant families.
//!
//! Every family allows the two nim moves (shrink one pile). They differ only
//! in which diagonal moves, removing `s >= 1` from both piles of `(a, b)` with
//! `a <= b`, are legal:
//!
//! | family          | diagonal `s` allowed when                                  |
//! |-----------------|------------------------------------------------------------|
//! | `Wythoff`       | `s <= a`                                                   |
//! | `Wk(k)`         | `a - s >= k`                                               |
//! | `WkPrime(k)`    | `s <= a`, unless `a == b` and `a - s < k`                  |
//! | `Wkl(k, l)`     | `a - s >= k` and `b - s >= l`                              |
//! | `Tk(k)`         | `a - s >= 1` and `|⌊(b-s)/(a-s)⌋ - ⌊b/a⌋| <= k`            |
//! | `TInfinity`     | `a - s >= 1`                                               |
//!
//! So the diagonal move all the way to `(0, b - a)` exists in `Wythoff` and
//! `WkPrime`, in `Wk`/`Wkl` only when `k == 0`, and never in `Tk`/`TInfinity`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Unordered pair of pile sizes, stored with `a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    a: u32,
    b: u32,
}

impl Position {
    pub const TERMINAL: Position = Position { a: 0, b: 0 };

    /// Normalizes any ordered pair.
    pub fn new(x: u32, y: u32) -> Self {
        if x <= y {
            Position { a: x, b: y }
        } else {
            Position { a: y, b: x }
        }
    }

    /// Smaller pile.
    pub fn a(self) -> u32 {
        self.a
    }

    /// Larger pile.
    pub fn b(self) -> u32 {
        self.b
    }

    pub fn tokens(self) -> u64 {
        self.a as u64 + self.b as u64
    }

    pub fn shifted(self, by: u32) -> Position {
        Position {
            a: self.a + by,
            b: self.b + by,
        }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Serialize for Position {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(serializer)
    }
}

impl From<(u32, u32)> for Position {
    fn from((x, y): (u32, u32)) -> Self {
        Position::new(x, y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Wythoff,
    Wk,
    WkPrime,
    Wkl,
    Tk,
    TInfinity,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Wythoff => "wythoff",
            Family::Wk => "wk",
            Family::WkPrime => "wkprime",
            Family::Wkl => "wkl",
            Family::Tk => "tk",
            Family::TInfinity => "tinf",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "wythoff" | "w" => Family::Wythoff,
            "wk" => Family::Wk,
            "wkprime" | "wk-prime" | "wk'" => Family::WkPrime,
            "wkl" => Family::Wkl,
            "tk" => Family::Tk,
            "tinf" | "tinfinity" | "t-inf" => Family::TInfinity,
            other => return Err(Error::InvalidRuleset(format!("unknown family '{other}'"))),
        })
    }
}

/// One rule family together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ruleset {
    Wythoff,
    Wk { k: u32 },
    WkPrime { k: u32 },
    /// Requires `k <= l`; see [`Ruleset::wkl`].
    Wkl { k: u32, l: u32 },
    Tk { k: u32 },
    TInfinity,
}

impl Ruleset {
    pub fn wkl(k: u32, l: u32) -> Result<Self> {
        Ruleset::Wkl { k, l }.validated()
    }

    /// Builds a ruleset from a family and optional parameters, rejecting
    /// missing, superfluous, or inconsistent ones.
    pub fn from_parts(family: Family, k: Option<u32>, l: Option<u32>) -> Result<Self> {
        let need_k = |k: Option<u32>| {
            k.ok_or_else(|| Error::InvalidRuleset(format!("family {family} requires k")))
        };
        let no_l = |l: Option<u32>| match l {
            Some(_) => Err(Error::InvalidRuleset(format!("family {family} takes no l"))),
            None => Ok(()),
        };
        let rs = match family {
            Family::Wythoff | Family::TInfinity => {
                if k.is_some() {
                    return Err(Error::InvalidRuleset(format!("family {family} takes no k")));
                }
                no_l(l)?;
                if family == Family::Wythoff {
                    Ruleset::Wythoff
                } else {
                    Ruleset::TInfinity
                }
            }
            Family::Wk => {
                no_l(l)?;
                Ruleset::Wk { k: need_k(k)? }
            }
            Family::WkPrime => {
                no_l(l)?;
                Ruleset::WkPrime { k: need_k(k)? }
            }
            Family::Tk => {
                no_l(l)?;
                Ruleset::Tk { k: need_k(k)? }
            }
            Family::Wkl => {
                let l = l.ok_or_else(|| Error::InvalidRuleset("family wkl requires l".into()))?;
                Ruleset::Wkl { k: need_k(k)?, l }
            }
        };
        rs.validated()
    }

    pub fn validated(self) -> Result<Self> {
        match self {
            Ruleset::Wkl { k, l } if k > l => Err(Error::InvalidRuleset(format!(
                "W_(k,l) requires k <= l, got k={k}, l={l}"
            ))),
            rs => Ok(rs),
        }
    }

    pub fn family(self) -> Family {
        match self {
            Ruleset::Wythoff => Family::Wythoff,
            Ruleset::Wk { .. } => Family::Wk,
            Ruleset::WkPrime { .. } => Family::WkPrime,
            Ruleset::Wkl { .. } => Family::Wkl,
            Ruleset::Tk { .. } => Family::Tk,
            Ruleset::TInfinity => Family::TInfinity,
        }
    }

    pub fn k(self) -> Option<u32> {
        match self {
            Ruleset::Wk { k } | Ruleset::WkPrime { k } | Ruleset::Wkl { k, .. } | Ruleset::Tk { k } => {
                Some(k)
            }
            Ruleset::Wythoff | Ruleset::TInfinity => None,
        }
    }

    pub fn l(self) -> Option<u32> {
        match self {
            Ruleset::Wkl { l, .. } => Some(l),
            _ => None,
        }
    }

    /// Whether removing `s` tokens from both piles of `(a, b)` is legal.
    #[inline]
    pub fn allows_diagonal(self, p: Position, s: u32) -> bool {
        let Position { a, b } = p;
        if s == 0 || s > a {
            return false;
        }
        match self {
            Ruleset::Wythoff => true,
            Ruleset::Wk { k } => a - s >= k,
            Ruleset::WkPrime { k } => !(a == b && a - s < k),
            Ruleset::Wkl { k, l } => a - s >= k && b - s >= l,
            Ruleset::Tk { k } => {
                // a - s >= 1 also makes both floor divisions well defined.
                a - s >= 1 && ((b - s) / (a - s)).abs_diff(b / a) <= k
            }
            Ruleset::TInfinity => a - s >= 1,
        }
    }

    /// Plain-language statement of the diagonal rule, used in diagnostics.
    pub fn diagonal_rule(self) -> String {
        match self {
            Ruleset::Wythoff => "any equal number of tokens may be removed from both piles".into(),
            Ruleset::Wk { k } => format!(
                "a diagonal move must leave both piles with at least {k} tokens"
            ),
            Ruleset::WkPrime { k } => format!(
                "a diagonal move may not end at an equal-pile position (i,i) with i < {k}"
            ),
            Ruleset::Wkl { k, l } => format!(
                "a diagonal move must leave the smaller pile with at least {k} and the larger with at least {l} tokens"
            ),
            Ruleset::Tk { k } => format!(
                "a diagonal move must leave the smaller pile nonempty and change the integer ratio larger/smaller by at most {k}"
            ),
            Ruleset::TInfinity => "a diagonal move must leave the smaller pile nonempty".into(),
        }
    }
}

impl fmt::Display for Ruleset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Ruleset::Wythoff => f.write_str("Wythoff"),
            Ruleset::Wk { k } => write!(f, "W_{k}"),
            Ruleset::WkPrime { k } => write!(f, "W'_{k}"),
            Ruleset::Wkl { k, l } => write!(f, "W_({k},{l})"),
            Ruleset::Tk { k } => write!(f, "T_{k}"),
            Ruleset::TInfinity => f.write_str("T_inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoveKind {
    /// Shrinks the smaller pile.
    NimFirst,
    /// Shrinks the larger pile.
    NimSecond,
    Diagonal,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::NimFirst => "nim-first",
            MoveKind::NimSecond => "nim-second",
            MoveKind::Diagonal => "diagonal",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    pub kind: MoveKind,
    /// Tokens removed (from each pile, for diagonal moves).
    pub amount: u32,
    pub target: Position,
}

/// Diagonal options with their removal amounts, ascending in `s`.
pub fn diagonal_moves(rs: Ruleset, p: Position) -> Vec<(u32, Position)> {
    (1..=p.a)
        .filter(|&s| rs.allows_diagonal(p, s))
        .map(|s| (s, Position::new(p.a - s, p.b - s)))
        .collect()
}

/// Every distinct legal move from `p`. Nim moves from `(a, a)` are listed
/// once, as `NimFirst`; a diagonal move is listed even if a nim move reaches
/// the same target.
pub fn options(rs: Ruleset, p: Position) -> Vec<Move> {
    let Position { a, b } = p;
    let mut out = Vec::with_capacity((a + b + a) as usize);
    out.extend((0..a).map(|x| Move {
        kind: MoveKind::NimFirst,
        amount: a - x,
        target: Position::new(x, b),
    }));
    if a < b {
        out.extend((0..b).map(|y| Move {
            kind: MoveKind::NimSecond,
            amount: b - y,
            target: Position::new(a, y),
        }));
    }
    out.extend(diagonal_moves(rs, p).into_iter().map(|(s, target)| Move {
        kind: MoveKind::Diagonal,
        amount: s,
        target,
    }));
    out
}

/// The set of positions reachable from `p` in one move.
pub fn moves(rs: Ruleset, p: Position) -> BTreeSet<Position> {
    options(rs, p).into_iter().map(|m| m.target).collect()
}

pub fn is_legal(rs: Ruleset, from: Position, to: Position) -> bool {
    if to.tokens() >= from.tokens() {
        return false;
    }
    // Nim move: one pile kept, the other shrunk.
    let nim = (to.a == from.a && to.b < from.b)
        || (to.a == from.b && to.b < from.a)
        || (to.b == from.a && to.a < from.b)
        || (to.b == from.b && to.a < from.a);
    if nim {
        return true;
    }
    let s = from.a.wrapping_sub(to.a);
    to.b.checked_add(s) == Some(from.b) && rs.allows_diagonal(from, s)
}
