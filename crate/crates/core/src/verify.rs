//! Engine-versus-formula theorem checks, bounded conjecture searches, and
//! reproduction of individual published values.
//!
//! All comparisons are exact: both sides are truncated with the same
//! "larger pile `<= N`" convention and engine tables are exact.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::formulas::{
    formula_p_tk, formula_p_wk, formula_p_wk_recursive, formula_p_wythoff, formula_s1_tk,
    formula_s1_w1, formula_s1_wk_odd, formula_s1_wk_shift,
};
use crate::grundy::{g_set, GSet, GrundyTable};
use crate::report::{Report, Status, Witness};
use crate::rulesets::{Position, Ruleset};
use crate::store::TableStore;

pub const DEFAULT_THEOREM_BOUND: u32 = 200;
pub const DEFAULT_CONJECTURE_BOUND: u32 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// Wythoff's zero positions.
    Thm2,
    /// Zero positions of `W_k`.
    Thm3,
    /// `W'_k` has the zero positions of `W_k`.
    Thm4,
    /// Nim-value-1 positions of `W_1`.
    Thm5,
    /// Nim-value-1 positions of `W_(k+2)` from those of `W_k`.
    Thm6,
    /// Zero positions of `W_(k+l)` from those of `W_k`.
    Cor1,
    /// Nim-value-1 positions of `W_k`, `k` odd.
    Cor2,
    /// `W_(k,l)` has the zero positions of `W_l`.
    Thm7,
    /// Zero positions of `T_k`, independent of `k`.
    Thm8,
    /// Nim-value-1 positions of `T_k`, independent of `k`.
    Thm9,
    /// `W_1` and `T_k` share their zero positions.
    Cor3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::Thm2,
        TheoremId::Thm3,
        TheoremId::Thm4,
        TheoremId::Thm5,
        TheoremId::Thm6,
        TheoremId::Cor1,
        TheoremId::Cor2,
        TheoremId::Thm7,
        TheoremId::Thm8,
        TheoremId::Thm9,
        TheoremId::Cor3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Thm2 => "thm2",
            TheoremId::Thm3 => "thm3",
            TheoremId::Thm4 => "thm4",
            TheoremId::Thm5 => "thm5",
            TheoremId::Thm6 => "thm6",
            TheoremId::Cor1 => "cor1",
            TheoremId::Cor2 => "cor2",
            TheoremId::Thm7 => "thm7",
            TheoremId::Thm8 => "thm8",
            TheoremId::Thm9 => "thm9",
            TheoremId::Cor3 => "cor3",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown theorem '{s}'")))
    }
}

/// A theorem instance. For the ratio-game statements (`thm8`, `thm9`,
/// `cor3`) a missing `k` selects `T_inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Theorem {
    pub id: TheoremId,
    pub k: Option<u32>,
    pub l: Option<u32>,
}

impl Theorem {
    pub fn new(id: TheoremId, k: Option<u32>, l: Option<u32>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidParams(format!("{id}: {msg}")));
        match id {
            TheoremId::Thm2 | TheoremId::Thm5 => {
                if k.is_some() || l.is_some() {
                    return bad("takes no parameters".into());
                }
            }
            TheoremId::Thm3 | TheoremId::Thm4 | TheoremId::Thm6 | TheoremId::Cor2 => {
                if l.is_some() {
                    return bad("takes no l".into());
                }
                match k {
                    None => return bad("requires k".into()),
                    Some(k) if id == TheoremId::Cor2 && k % 2 == 0 => {
                        return bad(format!("requires odd k, got {k}"))
                    }
                    _ => {}
                }
            }
            TheoremId::Cor1 | TheoremId::Thm7 => match (k, l) {
                (Some(_), Some(0)) if id == TheoremId::Cor1 => return bad("requires l > 0".into()),
                (Some(k), Some(l)) if id == TheoremId::Thm7 && k > l => {
                    return bad(format!("requires k <= l, got k={k}, l={l}"))
                }
                (Some(_), Some(_)) => {}
                _ => return bad("requires k and l".into()),
            },
            TheoremId::Thm8 | TheoremId::Thm9 | TheoremId::Cor3 => {
                if l.is_some() {
                    return bad("takes no l".into());
                }
            }
        }
        Ok(Theorem { id, k, l })
    }

    fn ratio_game(&self) -> Ruleset {
        match self.k {
            Some(k) => Ruleset::Tk { k },
            None => Ruleset::TInfinity,
        }
    }

    fn subject(&self) -> String {
        match self.id {
            TheoremId::Thm8 | TheoremId::Thm9 | TheoremId::Cor3 if self.k.is_none() => {
                format!("{}:tinf", self.id)
            }
            id => id.name().to_owned(),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.subject())?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(l) = self.l {
            write!(f, " l={l}")?;
        }
        Ok(())
    }
}

fn set_witness(g: u32, left: &GSet, right: &GSet) -> Option<Witness> {
    left.first_difference(right).map(|position| Witness::GSetMismatch {
        g,
        position,
        in_left: left.contains(position),
        in_right: right.contains(position),
    })
}

/// Computes the engine side and the claimed side of a theorem at bound `n`
/// and compares them. The left side of a witness is always the engine.
pub fn verify_theorem(store: &TableStore, thm: &Theorem, n: u32) -> Result<Report> {
    let started = Instant::now();
    let engine = |rs: Ruleset, g: u32| -> Result<GSet> { Ok(g_set(&*store.get(rs, n)?, g)) };
    let (g, left, right) = match thm.id {
        TheoremId::Thm2 => (0, engine(Ruleset::Wythoff, 0)?, formula_p_wythoff(n)),
        TheoremId::Thm3 => {
            let k = thm.k.unwrap_or_default();
            (0, engine(Ruleset::Wk { k }, 0)?, formula_p_wk(k, n))
        }
        TheoremId::Thm4 => {
            let k = thm.k.unwrap_or_default();
            (0, engine(Ruleset::WkPrime { k }, 0)?, engine(Ruleset::Wk { k }, 0)?)
        }
        TheoremId::Thm5 => (1, engine(Ruleset::Wk { k: 1 }, 1)?, formula_s1_w1(n)),
        TheoremId::Thm6 => {
            let k = thm.k.unwrap_or_default();
            let base = match n.checked_sub(2) {
                Some(m) => g_set(&*store.get(Ruleset::Wk { k }, m)?, 1),
                None => GSet::new(1, 0, crate::grundy::Source::Engine, []),
            };
            (1, engine(Ruleset::Wk { k: k + 2 }, 1)?, formula_s1_wk_shift(&base, n))
        }
        TheoremId::Cor1 => {
            let (k, l) = (thm.k.unwrap_or_default(), thm.l.unwrap_or(1));
            (0, engine(Ruleset::Wk { k: k + l }, 0)?, formula_p_wk_recursive(k, l, n)?)
        }
        TheoremId::Cor2 => {
            let k = thm.k.unwrap_or(1);
            (1, engine(Ruleset::Wk { k }, 1)?, formula_s1_wk_odd(k, n)?)
        }
        TheoremId::Thm7 => {
            let (k, l) = (thm.k.unwrap_or_default(), thm.l.unwrap_or_default());
            (0, engine(Ruleset::wkl(k, l)?, 0)?, engine(Ruleset::Wk { k: l }, 0)?)
        }
        TheoremId::Thm8 => (0, engine(thm.ratio_game(), 0)?, formula_p_tk(n)),
        TheoremId::Thm9 => (1, engine(thm.ratio_game(), 1)?, formula_s1_tk(n)),
        TheoremId::Cor3 => (0, engine(Ruleset::Wk { k: 1 }, 0)?, engine(thm.ratio_game(), 0)?),
    };
    let mut report = Report::new(thm.subject(), n as u64);
    if let Some(k) = thm.k {
        report = report.param("k", k);
    }
    if let Some(l) = thm.l {
        report = report.param("l", l);
    }
    Ok(report
        .conclude(Status::Verified, set_witness(g, &left, &right))
        .timed(started))
}

/// Runs many theorem checks on a pool of scoped threads sharing one store.
/// Results come back in input order.
pub fn verify_many(store: &TableStore, theorems: &[Theorem], n: u32) -> Vec<Result<Report>> {
    let workers = thread::available_parallelism().map_or(1, |p| p.get()).min(theorems.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Result<Report>>>> = theorems.iter().map(|_| Mutex::new(None)).collect();
    thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(thm) = theorems.get(i) else { break };
                *slots[i].lock().expect("slot poisoned") = Some(verify_theorem(store, thm, n));
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.into_inner().expect("slot poisoned").expect("every slot is filled"))
        .collect()
}

/// The standard theorem sweep: every proven statement over its usual range
/// of parameters.
pub fn theorem_suite() -> Vec<Theorem> {
    let t = |id, k, l| Theorem::new(id, k, l).expect("suite parameters are valid");
    let mut out = vec![t(TheoremId::Thm2, None, None)];
    out.extend((0..=10).map(|k| t(TheoremId::Thm3, Some(k), None)));
    out.extend((0..=10).map(|k| t(TheoremId::Thm4, Some(k), None)));
    out.push(t(TheoremId::Thm5, None, None));
    out.extend((0..=8).map(|k| t(TheoremId::Thm6, Some(k), None)));
    for k in 0..=4 {
        out.extend((1..=4).map(|l| t(TheoremId::Cor1, Some(k), Some(l))));
    }
    out.extend((1..=9).step_by(2).map(|k| t(TheoremId::Cor2, Some(k), None)));
    for l in 0..=6 {
        out.extend((0..=l).map(|k| t(TheoremId::Thm7, Some(k), Some(l))));
    }
    let ratio_params = [Some(0), Some(1), Some(2), Some(3), Some(5), Some(10), None];
    for id in [TheoremId::Thm8, TheoremId::Thm9, TheoremId::Cor3] {
        out.extend(ratio_params.iter().map(|&k| t(id, k, None)));
    }
    out
}

/// First position (lexicographically) whose membership in the `g`-sets of
/// the two tables differs.
pub fn compare_gsets(t1: &GrundyTable, t2: &GrundyTable, g: u32) -> Result<Option<Position>> {
    if t1.bound() != t2.bound() {
        return Err(Error::BoundMismatch {
            left: t1.bound(),
            right: t2.bound(),
        });
    }
    Ok(t1
        .iter()
        .zip(t2.iter())
        .find(|((_, x), (_, y))| (*x == g) != (*y == g))
        .map(|((p, _), _)| p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConjectureId {
    /// `W_(k,l)` and `W_(k',l)` share g-sets for `g <= l - k'`.
    C1,
    /// `T_k` and `T_inf` share g-sets for `g <= k`.
    C2a,
    /// `W_1` and `T_k` share g-sets for `g <= k`.
    C2b,
    /// `T_k` and `T_l` share g-sets for `g <= min(k, l)`.
    C3,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 4] = [ConjectureId::C1, ConjectureId::C2a, ConjectureId::C2b, ConjectureId::C3];

    pub fn name(self) -> &'static str {
        match self {
            ConjectureId::C1 => "c1",
            ConjectureId::C2a => "c2a",
            ConjectureId::C2b => "c2b",
            ConjectureId::C3 => "c3",
        }
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConjectureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        ConjectureId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown conjecture '{s}'")))
    }
}

/// A conjecture instance: the two games compared and the range of g.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Conjecture {
    pub id: ConjectureId,
    pub left: Ruleset,
    pub right: Ruleset,
    pub max_g: u32,
    params: [Option<(&'static str, u32)>; 3],
}

impl Conjecture {
    pub fn c1(k: u32, kprime: u32, l: u32) -> Result<Self> {
        if !(k < kprime && kprime <= l) {
            return Err(Error::InvalidParams(format!(
                "c1 requires k < k' <= l, got k={k}, k'={kprime}, l={l}"
            )));
        }
        Ok(Conjecture {
            id: ConjectureId::C1,
            left: Ruleset::wkl(k, l)?,
            right: Ruleset::wkl(kprime, l)?,
            max_g: l - kprime,
            params: [Some(("k", k)), Some(("kprime", kprime)), Some(("l", l))],
        })
    }

    pub fn c2a(k: u32) -> Self {
        Conjecture {
            id: ConjectureId::C2a,
            left: Ruleset::Tk { k },
            right: Ruleset::TInfinity,
            max_g: k,
            params: [Some(("k", k)), None, None],
        }
    }

    pub fn c2b(k: u32) -> Self {
        Conjecture {
            id: ConjectureId::C2b,
            left: Ruleset::Wk { k: 1 },
            right: Ruleset::Tk { k },
            max_g: k,
            params: [Some(("k", k)), None, None],
        }
    }

    pub fn c3(k: u32, l: u32) -> Self {
        Conjecture {
            id: ConjectureId::C3,
            left: Ruleset::Tk { k },
            right: Ruleset::Tk { k: l },
            max_g: k.min(l),
            params: [Some(("k", k)), Some(("l", l)), None],
        }
    }

    /// Builds an instance from loosely supplied parameters.
    pub fn new(id: ConjectureId, k: Option<u32>, kprime: Option<u32>, l: Option<u32>) -> Result<Self> {
        let need = |name: &str, v: Option<u32>| {
            v.ok_or_else(|| Error::InvalidParams(format!("{id} requires {name}")))
        };
        let unused = |name: &str, v: Option<u32>| match v {
            Some(_) => Err(Error::InvalidParams(format!("{id} takes no {name}"))),
            None => Ok(()),
        };
        match id {
            ConjectureId::C1 => Conjecture::c1(need("k", k)?, need("kprime", kprime)?, need("l", l)?),
            ConjectureId::C2a | ConjectureId::C2b => {
                unused("kprime", kprime)?;
                unused("l", l)?;
                let k = need("k", k)?;
                Ok(if id == ConjectureId::C2a {
                    Conjecture::c2a(k)
                } else {
                    Conjecture::c2b(k)
                })
            }
            ConjectureId::C3 => {
                unused("kprime", kprime)?;
                Ok(Conjecture::c3(need("k", k)?, need("l", l)?))
            }
        }
    }

    /// Nim-values at or below which the statement is already proven
    /// (zero and one positions of the ratio games).
    pub fn proven_up_to(&self) -> Option<u32> {
        match self.id {
            ConjectureId::C2a | ConjectureId::C2b | ConjectureId::C3 => Some(1),
            // Only g = 0, through the shared zero positions of W_l.
            ConjectureId::C1 => Some(0),
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} vs {}, g <= {})", self.id, self.left, self.right, self.max_g)
    }
}

/// Compares the g-sets of the two games for every `g` in range, stopping at
/// the first difference.
pub fn explore_conjecture(store: &TableStore, conj: &Conjecture, n: u32) -> Result<Report> {
    let started = Instant::now();
    let left = store.get(conj.left, n)?;
    let right = store.get(conj.right, n)?;
    let mut witness = None;
    for g in 0..=conj.max_g {
        if let Some(position) = compare_gsets(&left, &right, g)? {
            witness = Some(Witness::GSetMismatch {
                g,
                position,
                in_left: left.value(position) == g,
                in_right: right.value(position) == g,
            });
            break;
        }
    }
    let mut report = Report::new(conj.id.name(), n as u64);
    for (name, v) in conj.params.iter().flatten() {
        report = report.param(name, *v);
    }
    Ok(report
        .conclude(Status::ConsistentUpToBound, witness)
        .timed(started))
}

/// The published single values: `g(20,30)` is 38 in `W_1` and 2 in `T_1`,
/// and reportedly 38 in `T_k` for large `k` (checked at `k = 38`, flagged
/// soft since it was stated as an observation).
pub fn check_paper_values(store: &TableStore) -> Result<Vec<Report>> {
    let position = Position::new(20, 30);
    let claims = [
        (Ruleset::Wk { k: 1 }, 38, false),
        (Ruleset::Tk { k: 1 }, 2, false),
        (Ruleset::Tk { k: 38 }, 38, true),
    ];
    claims
        .into_iter()
        .map(|(rs, expected, soft)| {
            let started = Instant::now();
            let actual = store.get(rs, 30)?.value(position);
            let witness = (actual != expected).then_some(Witness::ValueMismatch {
                position,
                expected,
                actual,
            });
            let mut report = Report::new(format!("paper-value:{}", rs.family()), 30)
                .param("a", 20)
                .param("b", 30);
            if let Some(k) = rs.k() {
                report = report.param("k", k);
            }
            if soft {
                report = report.soft();
            }
            Ok(report.conclude(Status::Verified, witness).timed(started))
        })
        .collect()
}

/// Index-wise distance between the nim-value-1 sequences of `W_(k,l)` and
/// `W_l` for odd `l`, both ordered by smaller pile. Verified when the
/// largest `|a_n - a'_n| + |b_n - b'_n|` is at most 1.
pub fn closeness_check(store: &TableStore, k: u32, l: u32, n: u32) -> Result<Report> {
    if k >= l || l % 2 == 0 {
        return Err(Error::InvalidParams(format!(
            "closeness check requires k < l with l odd, got k={k}, l={l}"
        )));
    }
    let started = Instant::now();
    let mixed = g_set(&*store.get(Ruleset::wkl(k, l)?, n)?, 1);
    let plain = g_set(&*store.get(Ruleset::Wk { k: l }, n)?, 1);
    let mut max_dev = 0;
    let mut witness = None;
    for (index, (&x, &y)) in mixed.positions().iter().zip(plain.positions()).enumerate() {
        let dev = x.a().abs_diff(y.a()) as u64 + x.b().abs_diff(y.b()) as u64;
        max_dev = max_dev.max(dev);
        if dev > 1 && witness.is_none() {
            witness = Some(Witness::Deviation {
                index,
                left: x,
                right: y,
                deviation: dev,
            });
        }
    }
    let mut report = Report::new("closeness", n as u64)
        .param("k", k)
        .param("l", l)
        .soft()
        .conclude(Status::Verified, witness);
    report.max_deviation = Some(max_dev);
    Ok(report.timed(started))
}

/// For even `l`, the nim-value-1 sets of `W_(k,l)` and `W_l` are claimed to
/// coincide.
pub fn coincidence_check(store: &TableStore, k: u32, l: u32, n: u32) -> Result<Report> {
    if k >= l || l % 2 == 1 {
        return Err(Error::InvalidParams(format!(
            "coincidence check requires k < l with l even, got k={k}, l={l}"
        )));
    }
    let started = Instant::now();
    let mixed = store.get(Ruleset::wkl(k, l)?, n)?;
    let plain = store.get(Ruleset::Wk { k: l }, n)?;
    let witness = compare_gsets(&mixed, &plain, 1)?.map(|position| Witness::GSetMismatch {
        g: 1,
        position,
        in_left: mixed.value(position) == 1,
        in_right: plain.value(position) == 1,
    });
    Ok(Report::new("coincidence", n as u64)
        .param("k", k)
        .param("l", l)
        .soft()
        .conclude(Status::Verified, witness)
        .timed(started))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn thm(id: TheoremId, k: Option<u32>, l: Option<u32>) -> Theorem {
        Theorem::new(id, k, l).unwrap()
    }

    #[test]
    fn theorem_examples() {
        let store = TableStore::new();
        let r = verify_theorem(&store, &thm(TheoremId::Thm3, Some(2), None), 100).unwrap();
        assert_eq!(r.status, Status::Verified);
        let r = verify_theorem(&store, &thm(TheoremId::Thm7, Some(3), Some(5)), 100).unwrap();
        assert_eq!(r.status, Status::Verified);
        let base = verify_theorem(&store, &thm(TheoremId::Thm8, Some(0), None), 50).unwrap();
        assert_eq!(base.status, Status::Verified);
        for k in 1..=5 {
            let r = verify_theorem(&store, &thm(TheoremId::Thm8, Some(k), None), 50).unwrap();
            assert_eq!(r.status, base.status);
            assert_eq!(r.witness, base.witness);
        }
    }

    #[test]
    fn theorem_param_validation() {
        assert!(Theorem::new(TheoremId::Thm7, Some(3), Some(2)).is_err());
        assert!(Theorem::new(TheoremId::Thm7, Some(2), Some(2)).is_ok());
        assert!(Theorem::new(TheoremId::Cor2, Some(4), None).is_err());
        assert!(Theorem::new(TheoremId::Cor1, Some(1), Some(0)).is_err());
        assert!(Theorem::new(TheoremId::Thm3, None, None).is_err());
        assert!(Theorem::new(TheoremId::Thm2, Some(1), None).is_err());
        assert_eq!("THM9".parse::<TheoremId>().unwrap(), TheoremId::Thm9);
    }

    #[test]
    fn small_bounds_do_not_underflow() {
        let store = TableStore::new();
        for n in 0..4 {
            for t in theorem_suite() {
                let r = verify_theorem(&store, &t, n).unwrap();
                assert_eq!(r.status, Status::Verified, "{t} at N={n}");
            }
        }
    }

    #[test]
    fn wrong_claim_yields_witness() {
        // W_2's zero set compared with the closed form for W_1.
        let store = TableStore::new();
        let engine = g_set(&store.get(Ruleset::Wk { k: 2 }, 20).unwrap(), 0);
        let w = set_witness(0, &engine, &formula_p_wk(1, 20)).unwrap();
        assert_eq!(
            w,
            Witness::GSetMismatch {
                g: 0,
                position: Position::new(2, 2),
                in_left: true,
                in_right: false
            }
        );
    }

    #[test]
    fn conjecture_examples() {
        let store = TableStore::new();
        let r = explore_conjecture(&store, &Conjecture::c3(1, 3), 60).unwrap();
        assert_eq!(r.status, Status::ConsistentUpToBound);
        let r = explore_conjecture(&store, &Conjecture::c1(0, 1, 3).unwrap(), 60).unwrap();
        assert_eq!(r.status, Status::ConsistentUpToBound);
        // g(20,30) = 2 in T_1 but 38 in W_1; out of range for k = 1.
        let r = explore_conjecture(&store, &Conjecture::c2b(1), 30).unwrap();
        assert_eq!(r.status, Status::ConsistentUpToBound);
        assert!(Conjecture::c1(3, 2, 4).is_err());
        assert!(Conjecture::new(ConjectureId::C2a, Some(1), None, Some(2)).is_err());
    }

    #[test]
    fn compare_gsets_examples() {
        let w1 = grundy_table_of(Ruleset::Wk { k: 1 }, 30);
        let t1 = grundy_table_of(Ruleset::Tk { k: 1 }, 30);
        assert_eq!(compare_gsets(&w1, &w1, 3).unwrap(), None);
        assert_eq!(compare_gsets(&w1, &t1, 0).unwrap(), None);
        let diff = compare_gsets(&w1, &t1, 2).unwrap().unwrap();
        assert!(diff <= Position::new(20, 30));
        assert_eq!(compare_gsets(&t1, &w1, 2).unwrap(), Some(diff));
        let small = grundy_table_of(Ruleset::Wk { k: 1 }, 29);
        assert!(matches!(compare_gsets(&w1, &small, 0), Err(Error::BoundMismatch { .. })));
    }

    fn grundy_table_of(rs: Ruleset, n: u32) -> GrundyTable {
        crate::grundy::grundy_table(rs, n).unwrap()
    }

    #[test]
    fn paper_values() {
        let store = TableStore::new();
        let reports = check_paper_values(&store).unwrap();
        assert_eq!(reports.len(), 3);
        for r in &reports {
            assert_eq!(r.status, Status::Verified, "{}", r.to_json());
        }
        assert!(reports[2].soft && !reports[0].soft);
    }

    #[test]
    fn closeness_examples() {
        let store = TableStore::new();
        for (k, l) in [(0, 3), (4, 5)] {
            let r = closeness_check(&store, k, l, 60).unwrap();
            assert_eq!(r.status, Status::Verified);
            assert!(r.max_deviation.unwrap() <= 1);
        }
        assert!(closeness_check(&store, 0, 2, 60).is_err());
        let r = coincidence_check(&store, 0, 2, 60).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert!(coincidence_check(&store, 0, 3, 60).is_err());
    }
}
