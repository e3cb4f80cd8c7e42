//! Instance generators from the undecidability reductions.
//!
//! Each generator produces a [`GeneratedLanguage`]: an NFA together with a
//! printable regular expression for the same language. The NFA is the
//! authoritative form.

mod machine;
mod pcp;
mod tiling;
mod tm_encoding;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automata::{regex_to_nfa, Alphabet, AutomataError, AutomatonJson, Nfa, RegexAst, RegexNode};
use crate::problems::ProblemError;

pub use machine::reduce_tm_to_machine_lang;
pub use pcp::{decode_blocks, reduce_pcp_to_bpcp_lang, reduce_pcp_to_shuffled_regex, shuffled_block};
pub use tiling::{
    normalize_tm, reduce_ntm_to_tiles, reduce_ntm_to_tiling_lang, tiling_instance_for_input,
    NormalizedMachine, WHITE_COLOR,
};
pub use tm_encoding::{decode_tm, encode_tm, TmDecodeError, CANONICAL_SYMBOLS};

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("invalid reduction input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Automata(#[from] AutomataError),
}

/// A regular language produced by a reduction.
#[derive(Debug, Clone)]
pub struct GeneratedLanguage {
    pub nfa: Nfa,
    pub regex_text: String,
    pub alphabet: Alphabet,
    /// Name of the construction that produced the language.
    pub provenance: String,
}

impl GeneratedLanguage {
    /// Builds both forms from one syntax tree. The alphabet is `extra` plus
    /// every literal of `node`.
    pub(crate) fn from_node(
        node: RegexNode,
        extra: &Alphabet,
        provenance: &str,
    ) -> Result<Self, ReductionError> {
        let alphabet = extra.union(&node.literals().into_iter().collect());
        let ast = RegexAst::new(node, alphabet.clone()).map_err(AutomataError::from)?;
        Ok(GeneratedLanguage {
            nfa: regex_to_nfa(&ast),
            regex_text: ast.to_text(),
            alphabet,
            provenance: provenance.to_string(),
        })
    }

    pub fn to_json(&self) -> GeneratedLanguageJson {
        GeneratedLanguageJson {
            automaton: AutomatonJson::from_nfa(&self.nfa),
            regex: self.regex_text.clone(),
            provenance: self.provenance.clone(),
        }
    }
}

/// Automaton JSON plus `"regex"` and `"provenance"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratedLanguageJson {
    #[serde(flatten)]
    pub automaton: AutomatonJson,
    pub regex: String,
    pub provenance: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{determinize, equivalent, parse_regex, Automaton};

    #[test]
    fn json_carries_the_automaton() {
        let node = RegexNode::plus(RegexNode::word("ab"));
        let lang = GeneratedLanguage::from_node(node, &Alphabet::from_str_chars("c"), "test").unwrap();
        assert_eq!(lang.regex_text, "ab(ab)*");
        let json = serde_json::to_string(&lang.to_json()).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["provenance"], "test");
        assert_eq!(value["kind"], "nfa");
        let automaton = Automaton::from_json_str(&json).unwrap();
        assert!(automaton.accepts("abab").unwrap());
        assert!(!automaton.accepts("c").unwrap());
        let reparsed = parse_regex(&lang.regex_text, &lang.alphabet).unwrap();
        assert!(equivalent(&determinize(&regex_to_nfa(&reparsed)), &automaton.to_dfa()).unwrap());
    }
}
