//! Toolkit for regular intersection emptiness: given a regular language
//! `L(A)` and a problem language `P`, is `L(A) ∩ P` nonempty?
//!
//! - [`automata`]: regexes, NFAs, total DFAs, PDAs and grammars.
//! - [`problems`]: membership checkers for the problem languages.
//! - [`deciders`]: the two decidable cases (sequential string equivalence
//!   modulo padding, unary shuffled string equivalence).
//! - [`reductions`]: instance generators for the undecidable cases.
//! - [`search`]: bounded shortlex witness search for everything else.

pub mod automata;
pub mod deciders;
pub mod problems;
pub mod reductions;
pub mod search;

pub use automata::{Alphabet, Automaton, AutomataError, Dfa, Nfa, Pda, RegexAst};
pub use deciders::{decide_intreg_sequential_string_eq, decide_intreg_unary_shuffled, Decision};
pub use problems::{PcpInstance, ProblemError, TileSet, TilingInstance, TmSpec};
pub use reductions::{GeneratedLanguage, ReductionError};
pub use search::{find_witness, find_witness_parallel, Outcome, SearchBudget, WitnessReport};
