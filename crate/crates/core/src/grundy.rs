//! Sprague-Grundy tables over the triangle `0 <= a <= b <= N`.
//!
//! Moves never increase a pile, so every option of a position inside the
//! triangle is inside it too and the stored values are the exact values of
//! the unbounded game.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rulesets::{moves, Position, Ruleset};

/// Largest bound accepted by [`grundy_table`]: about 50M `u32` entries (200 MB).
pub const MAX_BOUND: u32 = 10_000;

/// Least nonnegative integer not in `vals`.
pub fn mex<I: IntoIterator<Item = u32>>(vals: I) -> u32 {
    let mut seen: Vec<u32> = vals.into_iter().collect();
    seen.sort_unstable();
    seen.dedup();
    seen.iter()
        .enumerate()
        .find(|&(i, &v)| v != i as u32)
        .map_or(seen.len() as u32, |(i, _)| i as u32)
}

/// Reusable mex accumulator. Marks are cleared by replaying the touched
/// slots, so a reset costs the number of options rather than the table size.
struct MexScratch {
    present: Vec<bool>,
    touched: Vec<u32>,
}

impl MexScratch {
    fn new(max_options: usize) -> Self {
        MexScratch {
            present: vec![false; max_options + 1],
            touched: Vec::with_capacity(max_options),
        }
    }

    #[inline]
    fn mark(&mut self, v: u32) {
        // The mex never exceeds the option count, so larger values are noise.
        if let Some(slot) = self.present.get_mut(v as usize) {
            if !*slot {
                *slot = true;
                self.touched.push(v);
            }
        }
    }

    fn take(&mut self) -> u32 {
        let m = self.present.iter().position(|&p| !p).unwrap_or(self.present.len()) as u32;
        for v in self.touched.drain(..) {
            self.present[v as usize] = false;
        }
        m
    }
}

/// Exact nim-values of one ruleset for all positions with larger pile `<= N`.
#[derive(Clone, PartialEq, Eq)]
pub struct GrundyTable {
    ruleset: Ruleset,
    bound: u32,
    // Row-major over (a, b), a <= b. Row a holds b = a..=N and starts at
    // a*(N+1) - a*(a-1)/2.
    values: Vec<u32>,
}

impl fmt::Debug for GrundyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GrundyTable")
            .field("ruleset", &self.ruleset)
            .field("bound", &self.bound)
            .field("entries", &self.values.len())
            .finish()
    }
}

#[inline]
fn row_start(bound: u32, a: u32) -> usize {
    let (n, a) = (bound as usize, a as usize);
    a * (n + 1) - a * a.saturating_sub(1) / 2
}

fn entry_count(bound: u32) -> usize {
    let n = bound as usize;
    (n + 1) * (n + 2) / 2
}

impl GrundyTable {
    pub fn ruleset(&self) -> Ruleset {
        self.ruleset
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    fn index(&self, p: Position) -> usize {
        row_start(self.bound, p.a()) + (p.b() - p.a()) as usize
    }

    pub fn get(&self, p: Position) -> Option<u32> {
        (p.b() <= self.bound).then(|| self.values[self.index(p)])
    }

    /// Nim-value of `p`; panics if `p` lies outside the table.
    pub fn value(&self, p: Position) -> u32 {
        self.get(p)
            .unwrap_or_else(|| panic!("{p} lies outside the table bound {}", self.bound))
    }

    /// `(position, value)` in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (Position, u32)> + '_ {
        let n = self.bound;
        (0..=n)
            .flat_map(move |a| (a..=n).map(move |b| Position::new(a, b)))
            .zip(self.values.iter().copied())
    }

    /// The sub-table with larger pile `<= m`.
    pub fn restrict(&self, m: u32) -> GrundyTable {
        let m = m.min(self.bound);
        let mut values = Vec::with_capacity(entry_count(m));
        for a in 0..=m {
            let start = row_start(self.bound, a);
            values.extend_from_slice(&self.values[start..start + (m - a + 1) as usize]);
        }
        GrundyTable {
            ruleset: self.ruleset,
            bound: m,
            values,
        }
    }

    pub(crate) fn from_values(ruleset: Ruleset, bound: u32, values: Vec<u32>) -> Result<Self> {
        if values.len() != entry_count(bound) {
            return Err(Error::Parse {
                line: 0,
                reason: format!(
                    "expected {} entries for bound {bound}, found {}",
                    entry_count(bound),
                    values.len()
                ),
            });
        }
        Ok(GrundyTable {
            ruleset,
            bound,
            values,
        })
    }
}

/// Computes the full table by a single row-major sweep; each option of
/// `(a, b)` either has a smaller first coordinate, or the same one and a
/// smaller second, so it is always already filled in.
pub fn grundy_table(rs: Ruleset, bound: u32) -> Result<GrundyTable> {
    let rs = rs.validated()?;
    if bound > MAX_BOUND {
        return Err(Error::BoundTooLarge {
            bound,
            max: MAX_BOUND,
        });
    }
    let mut t = GrundyTable {
        ruleset: rs,
        bound,
        values: vec![0; entry_count(bound)],
    };
    let mut scratch = MexScratch::new(3 * bound as usize + 1);
    for a in 0..=bound {
        let row = row_start(bound, a);
        for b in a..=bound {
            // Shrink the smaller pile: (x, b), x < a.
            for x in 0..a {
                scratch.mark(t.values[row_start(bound, x) + (b - x) as usize]);
            }
            // Shrink the larger pile below a: (y, a).
            for y in 0..a {
                scratch.mark(t.values[row_start(bound, y) + (a - y) as usize]);
            }
            // Shrink the larger pile to a..b: (a, y).
            for y in a..b {
                scratch.mark(t.values[row + (y - a) as usize]);
            }
            let p = Position::new(a, b);
            for s in 1..=a {
                if rs.allows_diagonal(p, s) {
                    let (x, y) = (a - s, b - s);
                    scratch.mark(t.values[row_start(bound, x) + (y - x) as usize]);
                }
            }
            t.values[row + (b - a) as usize] = scratch.take();
        }
    }
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Engine,
    Formula,
}

/// Sorted, deduplicated positions sharing one nim-value, truncated to
/// larger pile `<= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    pub g: u32,
    pub bound: u32,
    pub source: Source,
    positions: Vec<Position>,
}

impl GSet {
    pub fn new<I: IntoIterator<Item = Position>>(g: u32, bound: u32, source: Source, items: I) -> Self {
        let mut positions: Vec<Position> = items.into_iter().filter(|p| p.b() <= bound).collect();
        positions.sort_unstable();
        positions.dedup();
        GSet {
            g,
            bound,
            source,
            positions,
        }
    }

    pub fn positions(&self) -> &[Position] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, p: Position) -> bool {
        self.positions.binary_search(&p).is_ok()
    }

    /// Lexicographically first position in exactly one of the two sets.
    pub fn first_difference(&self, other: &GSet) -> Option<Position> {
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.positions, &other.positions);
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Less => return Some(x[i]),
                std::cmp::Ordering::Greater => return Some(y[j]),
            }
        }
        x.get(i).or(y.get(j)).copied()
    }
}

impl Serialize for GSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.positions.serialize(serializer)
    }
}

pub fn g_set(t: &GrundyTable, g: u32) -> GSet {
    GSet::new(
        g,
        t.bound,
        Source::Engine,
        t.iter().filter(|&(_, v)| v == g).map(|(p, _)| p),
    )
}

pub fn p_positions(t: &GrundyTable) -> GSet {
    g_set(t, 0)
}

/// Engine move from `p`: to a zero position when one exists, otherwise the
/// option leaving the opponent the fewest replies (ties go to the
/// lexicographically smallest target). `None` when `p` is terminal.
pub fn best_reply(t: &GrundyTable, p: Position) -> Option<Position> {
    let rs = t.ruleset();
    let options = moves(rs, p);
    if t.value(p) > 0 {
        let target = options.into_iter().find(|&q| t.value(q) == 0);
        debug_assert!(target.is_some(), "positive value without a zero option");
        return target;
    }
    options
        .into_iter()
        .min_by_key(|&q| (moves(rs, q).len(), q))
        .inspect(|&q| assert_ne!(t.value(q), 0, "zero position {p} has a zero option {q}"))
}
