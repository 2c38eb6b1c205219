//! Interactive play against the engine over any line-based reader/writer.

use std::io::{BufRead, Write};

use anyhow::Result;
use wythoff_core::grundy::best_reply;
use wythoff_core::{grundy_table, is_legal, GrundyTable, Position, Ruleset};

fn status_line(table: &GrundyTable, p: Position) -> String {
    let g = table.value(p);
    if g == 0 {
        format!("{p} has nim-value 0: P-position, the player to move loses with best play")
    } else {
        format!("{p} has nim-value {g}: N-position, the player to move can win")
    }
}

/// Why `from -> to` is illegal under `rs`.
fn explain(rs: Ruleset, from: Position, to: Position) -> String {
    let (da, db) = (from.a().checked_sub(to.a()), from.b().checked_sub(to.b()));
    // The target is normalized, so also try it with the piles swapped.
    let (sa, sb) = (from.a().checked_sub(to.b()), from.b().checked_sub(to.a()));
    let is_diagonal = matches!((da, db), (Some(x), Some(y)) if x == y && x > 0)
        || matches!((sa, sb), (Some(x), Some(y)) if x == y && x > 0);
    if to == from || to.tokens() >= from.tokens() {
        "a move must remove at least one token".to_string()
    } else if is_diagonal {
        format!("diagonal move not allowed here: {}", rs.diagonal_rule())
    } else {
        "remove tokens from one pile, or the same number from both piles".to_string()
    }
}

fn parse_target(line: &str) -> Option<Position> {
    let nums: Vec<u32> = line
        .split(|c: char| c.is_whitespace() || c == ',' || c == '(' || c == ')')
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<Result<_, _>>()
        .ok()?;
    match nums[..] {
        [a, b] => Some(Position::new(a, b)),
        _ => None,
    }
}

/// Runs a game from `start`; the human moves first by typing the target
/// position as two pile sizes. Ends at a terminal position, on `q`, or at EOF.
pub fn run<R: BufRead, W: Write>(rs: Ruleset, start: Position, input: R, mut out: W) -> Result<()> {
    let table = grundy_table(rs, start.b())?;
    writeln!(out, "playing {rs}; diagonal rule: {}", rs.diagonal_rule())?;
    writeln!(out, "{}", status_line(&table, start))?;
    let mut current = start;
    if best_reply(&table, current).is_none() {
        writeln!(out, "no moves; previous player wins")?;
        return Ok(());
    }
    let mut lines = input.lines();
    loop {
        write!(out, "your move from {current} (target piles, or q)> ")?;
        out.flush()?;
        let Some(line) = lines.next().transpose()? else {
            writeln!(out)?;
            writeln!(out, "end of input")?;
            return Ok(());
        };
        let line = line.trim();
        if line.eq_ignore_ascii_case("q") || line.eq_ignore_ascii_case("quit") {
            writeln!(out, "bye")?;
            return Ok(());
        }
        let Some(target) = parse_target(line) else {
            writeln!(out, "could not read '{line}'; enter two pile sizes, e.g. 3 5")?;
            continue;
        };
        if !is_legal(rs, current, target) {
            writeln!(out, "illegal move {current} -> {target}: {}", explain(rs, current, target))?;
            continue;
        }
        current = target;
        writeln!(out, "you move to {current}; {}", status_line(&table, current))?;
        let before = table.value(current);
        let Some(reply) = best_reply(&table, current) else {
            writeln!(out, "no moves; you win")?;
            return Ok(());
        };
        assert!(
            before != 0 || table.value(reply) != 0,
            "engine moved from a zero position to a zero position"
        );
        current = reply;
        writeln!(out, "engine moves to {current}; {}", status_line(&table, current))?;
        if best_reply(&table, current).is_none() {
            writeln!(out, "no moves; engine wins")?;
            return Ok(());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn play(rs: Ruleset, start: (u32, u32), input: &str) -> String {
        let mut out = Vec::new();
        run(rs, Position::from(start), input.as_bytes(), &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn terminal_start() {
        let out = play(Ruleset::TInfinity, (0, 0), "");
        assert!(out.contains("no moves; previous player wins"));
    }

    #[test]
    fn illegal_diagonal_quotes_rule() {
        // W_3 forbids (2,5) -> (0,3): the smaller pile would drop below 3.
        let out = play(Ruleset::Wk { k: 3 }, (2, 5), "0 3\nq\n");
        assert!(out.contains("illegal move"), "{out}");
        assert!(out.contains(&Ruleset::Wk { k: 3 }.diagonal_rule()), "{out}");
    }

    #[test]
    fn engine_wins_from_p_position() {
        // (1,2) is a P-position in Wythoff; every human move loses.
        let out = play(Ruleset::Wythoff, (1, 2), "0 2\n");
        assert!(out.contains("engine moves to (0,0)"), "{out}");
        assert!(out.contains("no moves; engine wins"), "{out}");
    }

    #[test]
    fn parses_loose_formats() {
        assert_eq!(parse_target("(3, 5)"), Some(Position::new(3, 5)));
        assert_eq!(parse_target("5 3"), Some(Position::new(3, 5)));
        assert_eq!(parse_target("5"), None);
        assert_eq!(parse_target("x y"), None);
    }
}
