//! Closed-form g-sets: every family here is a finite explicit part plus a
//! translate `{(A_n + c, B_n + c) : n >= 0}` of Wythoff's zero positions.
//!
//! Enumeration walks `n` upward until `B_n + c` leaves the bound. Membership
//! inverts `n = b - a`, which is valid because `B_n - A_n = n` survives any
//! common translation.

use std::fmt;
use std::str::FromStr;

use crate::beatty::{a_n, pairs, BeattyIndex};
use crate::error::{Error, Result};
use crate::grundy::{GSet, Source};
use crate::rulesets::Position;

/// Identifiers of the closed forms, in the order they are usually cited.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaId {
    PWythoff,
    PWk,
    PWkRecursion,
    PWkPrime,
    S1W1,
    S1WkShift,
    S1WkOdd,
    PWkl,
    PTk,
    S1Tk,
}

impl FormulaId {
    pub const ALL: [FormulaId; 10] = [
        FormulaId::PWythoff,
        FormulaId::PWk,
        FormulaId::PWkRecursion,
        FormulaId::PWkPrime,
        FormulaId::S1W1,
        FormulaId::S1WkShift,
        FormulaId::S1WkOdd,
        FormulaId::PWkl,
        FormulaId::PTk,
        FormulaId::S1Tk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::PWythoff => "p-wythoff",
            FormulaId::PWk => "p-wk",
            FormulaId::PWkRecursion => "p-wk-recursion",
            FormulaId::PWkPrime => "p-wkprime",
            FormulaId::S1W1 => "s1-w1",
            FormulaId::S1WkShift => "s1-wk-shift",
            FormulaId::S1WkOdd => "s1-wk-odd",
            FormulaId::PWkl => "p-wkl",
            FormulaId::PTk => "p-tk",
            FormulaId::S1Tk => "s1-tk",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        FormulaId::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::InvalidParams(format!("unknown formula '{s}'")))
    }
}

/// A closed form with its parameters bound. `S1WkShift` is a transformation
/// of a given set rather than a closed form, see [`formula_s1_wk_shift`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    PWythoff,
    PWk { k: u32 },
    PWkRecursion { k: u32, l: u32 },
    PWkPrime { k: u32 },
    S1W1,
    /// `k` odd.
    S1WkOdd { k: u32 },
    PWkl { k: u32, l: u32 },
    PTk,
    S1Tk,
}

impl ClosedForm {
    /// Binds parameters to a formula id, checking the formula's domain.
    pub fn new(id: FormulaId, k: Option<u32>, l: Option<u32>) -> Result<Self> {
        let need = |name: &str, v: Option<u32>| {
            v.ok_or_else(|| Error::InvalidParams(format!("formula {id} requires {name}")))
        };
        let form = match id {
            FormulaId::PWythoff => ClosedForm::PWythoff,
            FormulaId::PWk => ClosedForm::PWk { k: need("k", k)? },
            FormulaId::PWkRecursion => ClosedForm::PWkRecursion {
                k: need("k", k)?,
                l: need("l", l)?,
            },
            FormulaId::PWkPrime => ClosedForm::PWkPrime { k: need("k", k)? },
            FormulaId::S1W1 => ClosedForm::S1W1,
            FormulaId::S1WkOdd => ClosedForm::S1WkOdd { k: need("k", k)? },
            FormulaId::PWkl => ClosedForm::PWkl {
                k: need("k", k)?,
                l: need("l", l)?,
            },
            FormulaId::PTk => ClosedForm::PTk,
            FormulaId::S1Tk => ClosedForm::S1Tk,
            FormulaId::S1WkShift => {
                return Err(Error::InvalidParams(
                    "s1-wk-shift transforms an existing set and has no closed form".into(),
                ))
            }
        };
        form.validated()
    }

    fn validated(self) -> Result<Self> {
        match self {
            ClosedForm::PWkRecursion { l: 0, .. } => {
                Err(Error::InvalidParams("the P-position recursion requires l > 0".into()))
            }
            ClosedForm::S1WkOdd { k } if k % 2 == 0 => Err(Error::InvalidParams(format!(
                "the odd-k nim-value-1 formula requires odd k, got {k}"
            ))),
            ClosedForm::PWkl { k, l } if k > l => Err(Error::InvalidParams(format!(
                "W_(k,l) requires k <= l, got k={k}, l={l}"
            ))),
            f => Ok(f),
        }
    }

    /// The nim-value the set describes.
    pub fn g(self) -> u32 {
        match self {
            ClosedForm::S1W1 | ClosedForm::S1WkOdd { .. } | ClosedForm::S1Tk => 1,
            _ => 0,
        }
    }

    /// Explicit finite part (only members with larger pile `<= cap`) and the
    /// translation of the Wythoff part.
    fn parts(self, cap: u32) -> (Vec<Position>, u32) {
        let doubles = |n: u32| (0..n.min(cap.saturating_add(1))).map(|i| Position::new(i, i));
        match self {
            ClosedForm::PWythoff => (Vec::new(), 0),
            ClosedForm::PWk { k } | ClosedForm::PWkPrime { k } | ClosedForm::PWkl { l: k, .. } => {
                (doubles(k).collect(), k)
            }
            ClosedForm::PWkRecursion { k, l } => {
                let (inner, c) = ClosedForm::PWk { k }.parts(cap.saturating_sub(l));
                let mut explicit: Vec<Position> = doubles(l).collect();
                explicit.extend(inner.into_iter().map(|p| p.shifted(l)));
                (explicit, c.saturating_add(l))
            }
            ClosedForm::S1W1 | ClosedForm::S1Tk => (vec![Position::new(0, 1)], 2),
            ClosedForm::S1WkOdd { k } => {
                let pairs = (0..=(k / 2).min(cap / 2)).map(|i| Position::new(2 * i, 2 * i + 1));
                (pairs.collect(), k.saturating_add(1))
            }
            ClosedForm::PTk => (vec![Position::TERMINAL], 1),
        }
    }

    /// Members with larger pile `<= bound`, sorted.
    pub fn enumerate(self, bound: u32) -> GSet {
        let (explicit, shift) = self.parts(bound);
        let translated = shifted_wythoff(shift, bound);
        GSet::new(self.g(), bound, Source::Formula, explicit.into_iter().chain(translated))
    }

    /// Membership in the infinite set, without enumeration.
    pub fn contains(self, p: Position) -> bool {
        let (explicit, shift) = self.parts(p.b());
        explicit.contains(&p) || in_shifted_wythoff(p, shift)
    }
}

/// `{(A_n + c, B_n + c)}` with `B_n + c <= bound`.
fn shifted_wythoff(c: u32, bound: u32) -> impl Iterator<Item = Position> {
    let bound = bound as u64;
    pairs()
        .take_while(move |&(_, _, b)| b + c as u64 <= bound)
        .map(move |(_, a, b)| Position::new(a as u32 + c, b as u32 + c))
}

fn in_shifted_wythoff(p: Position, c: u32) -> bool {
    if p.a() < c {
        return false;
    }
    let n = BeattyIndex::from(p.b() - p.a());
    a_n(n) == (p.a() - c) as u64
}

pub fn formula_p_wythoff(bound: u32) -> GSet {
    ClosedForm::PWythoff.enumerate(bound)
}

pub fn formula_p_wk(k: u32, bound: u32) -> GSet {
    ClosedForm::PWk { k }.enumerate(bound)
}

/// `{(i,i) : i < l} ∪ ((P-positions of W_k up to N - l) + l)`, built from the
/// smaller set rather than from the closed form of `W_(k+l)`.
pub fn formula_p_wk_recursive(k: u32, l: u32, bound: u32) -> Result<GSet> {
    if l == 0 {
        return Err(Error::InvalidParams("the P-position recursion requires l > 0".into()));
    }
    let base = match bound.checked_sub(l) {
        Some(inner) => formula_p_wk(k, inner).positions().to_vec(),
        None => Vec::new(),
    };
    let diag = (0..l).map(|i| Position::new(i, i));
    Ok(GSet::new(
        0,
        bound,
        Source::Formula,
        diag.chain(base.into_iter().map(|p| p.shifted(l))),
    ))
}

pub fn formula_p_tk(bound: u32) -> GSet {
    ClosedForm::PTk.enumerate(bound)
}

pub fn formula_s1_w1(bound: u32) -> GSet {
    ClosedForm::S1W1.enumerate(bound)
}

/// `{(0,1)} ∪ (base + 2)`, truncated to `bound`. With `base` the nim-value-1
/// set of `W_k` up to `bound - 2`, this is the one of `W_(k+2)` up to `bound`.
pub fn formula_s1_wk_shift(base: &GSet, bound: u32) -> GSet {
    let unit = (bound >= 1).then_some(Position::new(0, 1));
    GSet::new(
        1,
        bound,
        Source::Formula,
        unit.into_iter()
            .chain(base.positions().iter().map(|p| p.shifted(2))),
    )
}

pub fn formula_s1_wk_odd(k: u32, bound: u32) -> Result<GSet> {
    Ok(ClosedForm::new(FormulaId::S1WkOdd, Some(k), None)?.enumerate(bound))
}

pub fn formula_s1_tk(bound: u32) -> GSet {
    ClosedForm::S1Tk.enumerate(bound)
}

pub fn membership(form: ClosedForm, p: Position) -> bool {
    form.contains(p)
}
