mod common;

use proptest::prelude::*;

use wythoff_core::beatty::{a_n, isqrt, BeattyIndex};
use wythoff_core::formulas::{
    formula_p_tk, formula_p_wk, formula_p_wk_recursive, formula_p_wythoff, formula_s1_w1,
    formula_s1_wk_odd, formula_s1_wk_shift,
};
use wythoff_core::{grundy_table, is_legal, moves, ClosedForm, GSet, Position, Ruleset};

fn ruleset() -> impl Strategy<Value = Ruleset> {
    prop_oneof![
        Just(Ruleset::Wythoff),
        (0u32..6).prop_map(|k| Ruleset::Wk { k }),
        (0u32..6).prop_map(|k| Ruleset::WkPrime { k }),
        (0u32..6, 0u32..6).prop_map(|(x, y)| Ruleset::Wkl { k: x.min(y), l: x.max(y) }),
        (0u32..40).prop_map(|k| Ruleset::Tk { k }),
        Just(Ruleset::TInfinity),
    ]
}

fn closed_form() -> impl Strategy<Value = (ClosedForm, Ruleset)> {
    prop_oneof![
        Just((ClosedForm::PWythoff, Ruleset::Wythoff)),
        (0u32..8).prop_map(|k| (ClosedForm::PWk { k }, Ruleset::Wk { k })),
        (0u32..5, 1u32..5).prop_map(|(k, l)| (ClosedForm::PWkRecursion { k, l }, Ruleset::Wk { k: k + l })),
        (0u32..8).prop_map(|k| (ClosedForm::PWkPrime { k }, Ruleset::WkPrime { k })),
        Just((ClosedForm::S1W1, Ruleset::Wk { k: 1 })),
        (0u32..5).prop_map(|h| (ClosedForm::S1WkOdd { k: 2 * h + 1 }, Ruleset::Wk { k: 2 * h + 1 })),
        (0u32..6, 0u32..6).prop_map(|(x, y)| {
            let (k, l) = (x.min(y), x.max(y));
            (ClosedForm::PWkl { k, l }, Ruleset::Wkl { k, l })
        }),
        (0u32..12).prop_map(|k| (ClosedForm::PTk, Ruleset::Tk { k })),
        (0u32..12).prop_map(|k| (ClosedForm::S1Tk, Ruleset::Tk { k })),
    ]
}

proptest! {
    #[test]
    fn isqrt_brackets(x in any::<u128>()) {
        let r = isqrt(x);
        prop_assert!(r * r <= x);
        prop_assert!((r + 1).checked_mul(r + 1).is_none_or(|sq| sq > x));
    }

    #[test]
    fn isqrt_brackets_small(x in 0u128..1 << 40) {
        let r = isqrt(x);
        prop_assert!(r * r <= x && x < (r + 1) * (r + 1));
    }

    #[test]
    fn beatty_exact_against_squares(n in 1u64..1 << 60) {
        // m = ⌊nφ⌋ iff (2m - n)² < 5n² < (2m + 2 - n)², which only needs
        // multiplication.
        let m = a_n(BeattyIndex::new(n).unwrap()) as i128;
        let n = n as i128;
        let lo = 2 * m - n;
        let hi = 2 * m + 2 - n;
        prop_assert!(lo >= 0);
        prop_assert!(lo * lo < 5 * n * n && 5 * n * n < hi * hi);
    }

    #[test]
    fn moves_ignore_presentation(rs in ruleset(), x in 0u32..40, y in 0u32..40) {
        let p = Position::new(x, y);
        let q = Position::new(y, x);
        prop_assert_eq!(moves(rs, p), moves(rs, q));
    }

    #[test]
    fn moves_shrink_and_diagonals_keep_offset(rs in ruleset(), x in 0u32..40, y in 0u32..40) {
        let p = Position::new(x, y);
        for m in wythoff_core::options(rs, p) {
            prop_assert!(m.amount >= 1);
            prop_assert!(m.target.tokens() < p.tokens());
            prop_assert!(is_legal(rs, p, m.target));
            if m.kind == wythoff_core::MoveKind::Diagonal {
                prop_assert_eq!(m.target.b() - m.target.a(), p.b() - p.a());
            }
        }
    }

    #[test]
    fn enumeration_agrees_with_membership((form, _) in closed_form(), n in 0u32..120) {
        let listed = form.enumerate(n);
        let mut scanned = Vec::new();
        for a in 0..=n {
            for b in a..=n {
                let p = Position::new(a, b);
                if form.contains(p) {
                    scanned.push(p);
                }
            }
        }
        prop_assert_eq!(listed.positions(), scanned.as_slice());
    }

    #[test]
    fn closed_forms_are_independent_sets((form, rs) in closed_form(), n in 0u32..80) {
        let set = form.enumerate(n);
        for &p in set.positions() {
            for &q in set.positions() {
                prop_assert!(!is_legal(rs, p, q), "{} -> {} inside {:?}", p, q, form);
            }
        }
    }

    #[test]
    fn recursion_identity(k in 0u32..20, l in 1u32..20, n in 0u32..200) {
        prop_assert_eq!(formula_p_wk_recursive(k, l, n).unwrap(), formula_p_wk(k + l, n));
    }

    #[test]
    fn translate_identities(n in 0u32..300) {
        prop_assert_eq!(formula_p_wk(0, n), formula_p_wythoff(n));
        prop_assert_eq!(formula_p_wk(1, n), formula_p_tk(n));
    }

    #[test]
    fn odd_formula_is_iterated_shift(h in 0u32..6, n in 0u32..150) {
        let k = 2 * h + 1;
        // l-fold shift of the W_1 set, each step adding 2 to the bound.
        let mut set = formula_s1_w1(n.saturating_sub(2 * h));
        for step in (0..h).rev() {
            let target = n.saturating_sub(2 * step);
            set = formula_s1_wk_shift(&set, target);
        }
        if n >= 2 * h {
            prop_assert_eq!(set, formula_s1_wk_odd(k, n).unwrap());
        }
    }

    #[test]
    fn grundy_axioms_hold(rs in ruleset(), n in 0u32..35) {
        let t = grundy_table(rs, n).unwrap();
        prop_assert_eq!(common::grundy_axioms(&t), Ok(()));
        prop_assert_eq!(t.value(Position::TERMINAL), 0);
        for (p, v) in t.iter() {
            prop_assert!(v as u64 <= p.tokens());
            let zero_option = moves(rs, p).into_iter().any(|q| t.value(q) == 0);
            prop_assert_eq!(v == 0, !zero_option);
        }
    }

    #[test]
    fn engine_matches_naive_recursion(rs in ruleset(), n in 0u32..18) {
        let t = grundy_table(rs, n).unwrap();
        let naive = common::naive_values(rs, n);
        for (p, v) in t.iter() {
            prop_assert_eq!(naive[&p], v, "{}", p);
        }
    }

    #[test]
    fn restriction_is_exact(rs in ruleset(), n in 0u32..40, m in 0u32..40) {
        let m = m.min(n);
        prop_assert_eq!(grundy_table(rs, n).unwrap().restrict(m), grundy_table(rs, m).unwrap());
    }

    #[test]
    fn gset_construction_sorts_and_dedups(items in proptest::collection::vec((0u32..30, 0u32..30), 0..40)) {
        let set = GSet::new(0, 20, wythoff_core::Source::Engine, items.iter().map(|&(x, y)| Position::new(x, y)));
        let ps = set.positions();
        prop_assert!(ps.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(ps.iter().all(|p| p.b() <= 20));
    }
}
