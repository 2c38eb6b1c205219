//! Wythoff's game and its translated variants: exact Sprague-Grundy tables,
//! closed-form g-sets, and machinery for checking one against the other.
//!
//! Families covered: Wythoff (`W_0`), `W_k` (diagonal moves must leave both
//! piles at least `k`), `W'_k`, `W_(k,l)`, and the ratio-constrained `T_k`
//! and `T_inf`.

pub mod beatty;
pub mod error;
pub mod formulas;
pub mod grundy;
pub mod report;
pub mod rulesets;
pub mod store;
pub mod table_io;
pub mod verify;

pub use error::{Error, Result};
pub use formulas::{ClosedForm, FormulaId};
pub use grundy::{g_set, grundy_table, mex, p_positions, GSet, GrundyTable, Source};
pub use report::{Report, Status, Witness};
pub use rulesets::{diagonal_moves, is_legal, moves, options, Family, Move, MoveKind, Position, Ruleset};
pub use store::TableStore;
pub use verify::{Conjecture, ConjectureId, Theorem, TheoremId};
