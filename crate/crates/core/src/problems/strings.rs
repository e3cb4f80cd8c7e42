//! String and regular-expression equivalence modulo padding.

use crate::automata::{determinize, equivalent, parse_regex, regex_to_nfa, Alphabet};

/// Letter-wise interleaving `s1 t1 s2 t2 ...`; both strings must have the
/// same length.
pub fn interleave(s: &str, t: &str) -> String {
    let (s, t): (Vec<char>, Vec<char>) = (s.chars().collect(), t.chars().collect());
    assert_eq!(s.len(), t.len(), "interleaved strings must have equal length");
    s.iter().zip(&t).flat_map(|(a, b)| [*a, *b]).collect()
}

/// Splits `word` into its odd-position and even-position letters (1-based).
/// Odd-length words have no such split.
pub fn deinterleave(word: &str) -> Option<(String, String)> {
    let chars: Vec<char> = word.chars().collect();
    if chars.len() % 2 != 0 {
        return None;
    }
    let s = chars.iter().step_by(2).collect();
    let t = chars.iter().skip(1).step_by(2).collect();
    Some((s, t))
}

/// Extends the shorter string with `pad` so both have the same length.
pub fn pad_to_common_length(s: &str, t: &str, pad: char) -> (String, String) {
    let (ls, lt) = (s.chars().count(), t.chars().count());
    let n = ls.max(lt);
    let extend = |x: &str, len: usize| {
        let mut out = x.to_string();
        out.extend(std::iter::repeat(pad).take(n - len));
        out
    };
    (extend(s, ls), extend(t, lt))
}

/// The erasing homomorphism deleting `pad`.
pub fn erase_pad(word: &str, pad: char) -> String {
    word.chars().filter(|&c| c != pad).collect()
}

fn over(word: &str, alphabet: &Alphabet, extra: &[char]) -> bool {
    word.chars().all(|c| alphabet.contains(c) || extra.contains(&c))
}

/// `s1 t1 ... sn tn` with `h(s1..sn) = h(t1..tn)`, `h` deleting `pad`.
///
/// Odd-length words and words with letters outside `alphabet ∪ {pad}` are
/// non-members. With a one-letter alphabet this is the unary variant.
pub fn member_shuffled_string_eq(word: &str, alphabet: &Alphabet, pad: char) -> bool {
    if !over(word, alphabet, &[pad]) {
        return false;
    }
    match deinterleave(word) {
        Some((s, t)) => erase_pad(&s, pad) == erase_pad(&t, pad),
        None => false,
    }
}

/// `u $ u'` with exactly one `$` and `h(u) = h(u')`. Both sides may be empty.
pub fn member_sequential_string_eq(word: &str, alphabet: &Alphabet, pad: char) -> bool {
    if !over(word, alphabet, &[pad, '$']) || word.matches('$').count() != 1 {
        return false;
    }
    let (u, v) = word.split_once('$').expect("one separator");
    erase_pad(u, pad) == erase_pad(v, pad)
}

/// `e1 f1 ... en fn` where `E = e1..en` and `F = f1..fn` are regular
/// expressions over `alphabet` with `L(E) = L(F)`. Unparsable halves and
/// odd-length words are non-members.
pub fn member_shuffled_regex_eq(word: &str, alphabet: &Alphabet) -> bool {
    let Some((e, f)) = deinterleave(word) else {
        return false;
    };
    let (Ok(e), Ok(f)) = (parse_regex(&e, alphabet), parse_regex(&f, alphabet)) else {
        return false;
    };
    let (de, df) = (determinize(&regex_to_nfa(&e)), determinize(&regex_to_nfa(&f)));
    equivalent(&de, &df).expect("both automata share the alphabet")
}
