//! A machine as the language `{⟨M⟩} $ Σ* $ a*`.

use super::{encode_tm, GeneratedLanguage, ReductionError};
use crate::automata::{Alphabet, RegexNode};
use crate::problems::TmSpec;

/// `⟨M⟩ $ Σ* $ a*` over `{0, 1, $, a} ∪ Σ`, where `Σ` is the input alphabet of
/// the decoded machine (the encoding renames symbols canonically). The
/// machine language meets this set iff `M` accepts some input.
pub fn reduce_tm_to_machine_lang(tm: &TmSpec) -> Result<GeneratedLanguage, ReductionError> {
    if let Some(c) = tm.input_alphabet().iter().find(|&&c| c == '$' || c == 'a') {
        return Err(ReductionError::Invalid(format!(
            "input symbol {c:?} is reserved by the machine-word encoding; rename it"
        )));
    }
    let bits = encode_tm(tm)?;
    let canonical = tm.canonical()?;
    let inputs = canonical.input_alphabet().iter().map(|&c| RegexNode::Literal(c));
    let node = RegexNode::concat_all([
        RegexNode::word(&bits),
        RegexNode::Literal('$'),
        RegexNode::star(RegexNode::alternation_all(inputs)),
        RegexNode::Literal('$'),
        RegexNode::star(RegexNode::Literal('a')),
    ]);
    let alphabet: Alphabet = "01$a".chars().chain(canonical.input_alphabet().iter().copied()).collect();
    GeneratedLanguage::from_node(node, &alphabet, "tm-to-machine-lang")
}
