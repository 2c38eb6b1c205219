#![allow(dead_code)]

use wythoff_core::{options, GrundyTable, Position};

/// Checks the defining property of every stored value directly from the move
/// generator: no option shares the value, and every smaller value is present
/// among the options. Returns the first offending position.
pub fn grundy_axioms(t: &GrundyTable) -> Result<(), Position> {
    let rs = t.ruleset();
    for (p, v) in t.iter() {
        let mut below = vec![false; v as usize];
        for m in options(rs, p) {
            let w = t.value(m.target);
            if w == v {
                return Err(p);
            }
            if let Some(slot) = below.get_mut(w as usize) {
                *slot = true;
            }
        }
        if below.contains(&false) {
            return Err(p);
        }
    }
    Ok(())
}

/// Every `(position, value)` pair with larger pile `<= bound`, built by
/// plain recursion over a hash map. Independent of the engine's sweep order
/// and triangular layout; only practical for small bounds.
pub fn naive_values(rs: wythoff_core::Ruleset, bound: u32) -> std::collections::HashMap<Position, u32> {
    fn go(
        rs: wythoff_core::Ruleset,
        p: Position,
        memo: &mut std::collections::HashMap<Position, u32>,
    ) -> u32 {
        if let Some(&v) = memo.get(&p) {
            return v;
        }
        let vals: Vec<u32> = wythoff_core::moves(rs, p).into_iter().map(|q| go(rs, q, memo)).collect();
        let v = (0..).find(|x| !vals.contains(x)).unwrap();
        memo.insert(p, v);
        v
    }
    let mut memo = std::collections::HashMap::new();
    for b in 0..=bound {
        for a in 0..=b {
            go(rs, Position::new(a, b), &mut memo);
        }
    }
    memo
}
