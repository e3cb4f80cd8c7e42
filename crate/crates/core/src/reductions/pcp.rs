//! PCP instances as regular languages over the shuffled-regex and the
//! bounded-PCP encodings.

use super::{GeneratedLanguage, ReductionError};
use crate::automata::{Alphabet, RegexNode};
use crate::problems::{interleave, pad_to_common_length, PcpInstance, ITEM_SEPARATOR, LIST_SEPARATOR};

/// `interleave(pad(a_i), pad(b_i))` for the 0-based pair `i`.
pub fn shuffled_block(pcp: &PcpInstance, i: usize, pad: char) -> String {
    let (a, b) = pad_to_common_length(&pcp.a()[i], &pcp.b()[i], pad);
    interleave(&a, &b)
}

/// `(block_1 | ... | block_k)+`. A word of this language is in the shuffled
/// string-equivalence language exactly when its blocks spell a solution.
pub fn reduce_pcp_to_shuffled_regex(pcp: &PcpInstance, pad: char) -> Result<GeneratedLanguage, ReductionError> {
    if pcp.alphabet().contains(pad) {
        return Err(ReductionError::Invalid(format!(
            "pad symbol {pad:?} occurs in the instance alphabet"
        )));
    }
    let blocks = (0..pcp.len()).map(|i| RegexNode::word(&shuffled_block(pcp, i, pad)));
    let node = RegexNode::plus(RegexNode::alternation_all(blocks));
    let alphabet = pcp.alphabet().union(&Alphabet::new([pad]));
    GeneratedLanguage::from_node(node, &alphabet, "pcp-to-shuffled-regex")
}

/// Splits `word` into blocks; returns the 1-based block indices of the
/// first decomposition in index order, or `None` if there is none.
pub fn decode_blocks(pcp: &PcpInstance, pad: char, word: &str) -> Option<Vec<usize>> {
    let blocks: Vec<Vec<char>> = (0..pcp.len())
        .map(|i| shuffled_block(pcp, i, pad).chars().collect())
        .collect();
    let chars: Vec<char> = word.chars().collect();
    if chars.is_empty() {
        return None;
    }
    // splits[p]: the suffix from p splits into blocks
    let mut splits = vec![false; chars.len() + 1];
    splits[chars.len()] = true;
    for p in (0..chars.len()).rev() {
        splits[p] = blocks
            .iter()
            .any(|b| chars[p..].starts_with(b) && splits[p + b.len()]);
    }
    if !splits[0] {
        return None;
    }
    let mut out = Vec::new();
    let mut p = 0;
    while p < chars.len() {
        let i = blocks
            .iter()
            .position(|b| chars[p..].starts_with(b) && splits[p + b.len()])
            .expect("a split exists");
        out.push(i + 1);
        p += blocks[i].len();
    }
    Some(out)
}

/// `a_1#...#a_n(#a_n)*$b_1#...#b_n(#b_n)*$(0|1)*`: the lists with the last
/// pair repeated any number of times, followed by any bound. Repetitions on
/// the two sides are independent; the membership checker rejects unequal
/// list lengths.
pub fn reduce_pcp_to_bpcp_lang(pcp: &PcpInstance) -> Result<GeneratedLanguage, ReductionError> {
    if pcp.alphabet().contains(ITEM_SEPARATOR) || pcp.alphabet().contains(LIST_SEPARATOR) {
        return Err(ReductionError::Invalid(
            "'#' and '$' are reserved by the bounded-PCP encoding".into(),
        ));
    }
    let list = |items: &[String]| {
        let sep = ITEM_SEPARATOR.to_string();
        let last = items.last().expect("nonempty list");
        RegexNode::concat(
            RegexNode::word(&items.join(&sep)),
            RegexNode::star(RegexNode::word(&format!("{sep}{last}"))),
        )
    };
    let bits = RegexNode::star(RegexNode::alternation(
        RegexNode::Literal('0'),
        RegexNode::Literal('1'),
    ));
    let node = RegexNode::concat_all([
        list(pcp.a()),
        RegexNode::Literal(LIST_SEPARATOR),
        list(pcp.b()),
        RegexNode::Literal(LIST_SEPARATOR),
        bits,
    ]);
    GeneratedLanguage::from_node(node, pcp.alphabet(), "pcp-to-bpcp")
}
