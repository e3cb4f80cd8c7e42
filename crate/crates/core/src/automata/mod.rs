//! Finite automata, pushdown automata and context-free grammars.
//!
//! Everything regular is represented either as an [`Nfa`] (with silent
//! moves) or as a total [`Dfa`]. Pushdown automata accept by final state with
//! the stack reduced to its bottom marker; their emptiness goes through the
//! triple construction into a [`Cfg`].

mod alphabet;
mod cfg;
mod dfa;
mod json;
mod nfa;
mod pda;
pub mod regex;

use thiserror::Error;

pub use alphabet::Alphabet;
pub use cfg::{Cfg, CfgSymbol};
pub use dfa::{determinize, equivalent, intersect_dfa, Dfa};
pub use json::{AutomatonJson, TransitionJson};
pub use nfa::{erase_letters, regex_to_nfa, Nfa};
pub use pda::{pda_intersect_dfa, pda_is_empty, Pda, PdaTransition, BOTTOM};
pub use regex::{parse_regex, RegexAst, RegexError, RegexErrorKind, RegexNode};

#[derive(Debug, Error)]
pub enum AutomataError {
    #[error("symbol {0:?} is not in the alphabet")]
    SymbolNotInAlphabet(char),
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: Alphabet, right: Alphabet },
    #[error("invalid automaton: {0}")]
    Invalid(String),
    #[error(transparent)]
    Regex(#[from] RegexError),
    #[error("malformed automaton JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = AutomataError> = std::result::Result<T, E>;

/// Either kind of finite automaton, as loaded from the JSON interchange format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automaton {
    Nfa(Nfa),
    Dfa(Dfa),
}

impl Automaton {
    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Automaton::Nfa(n) => n.alphabet(),
            Automaton::Dfa(d) => d.alphabet(),
        }
    }

    pub fn state_count(&self) -> usize {
        match self {
            Automaton::Nfa(n) => n.state_count(),
            Automaton::Dfa(d) => d.state_count(),
        }
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        match self {
            Automaton::Nfa(n) => n.accepts(word),
            Automaton::Dfa(d) => d.accepts(word),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            Automaton::Nfa(n) => n.is_empty(),
            Automaton::Dfa(d) => d.is_empty(),
        }
    }

    pub fn to_dfa(&self) -> Dfa {
        match self {
            Automaton::Nfa(n) => determinize(n),
            Automaton::Dfa(d) => d.clone(),
        }
    }

    pub fn to_nfa(&self) -> Nfa {
        match self {
            Automaton::Nfa(n) => n.clone(),
            Automaton::Dfa(d) => Nfa::from_dfa(d),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: AutomatonJson = serde_json::from_str(text)?;
        raw.into_automaton()
    }

    pub fn to_json(&self) -> AutomatonJson {
        match self {
            Automaton::Nfa(n) => AutomatonJson::from_nfa(n),
            Automaton::Dfa(d) => AutomatonJson::from_dfa(d),
        }
    }
}

impl From<Nfa> for Automaton {
    fn from(nfa: Nfa) -> Self {
        Automaton::Nfa(nfa)
    }
}

impl From<Dfa> for Automaton {
    fn from(dfa: Dfa) -> Self {
        Automaton::Dfa(dfa)
    }
}

/// Returns the symbol index of every letter of `word`, or the first symbol
/// that is not part of `alphabet`.
pub(crate) fn encode_word(alphabet: &Alphabet, word: &str) -> Result<Vec<usize>> {
    word.chars()
        .map(|c| alphabet.index_of(c).ok_or(AutomataError::SymbolNotInAlphabet(c)))
        .collect()
}
