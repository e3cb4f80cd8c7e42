//! The two decidable cases of regular intersection emptiness: sequential
//! string equivalence modulo padding, and the unary shuffled variant.

use std::collections::VecDeque;

use serde::Serialize;

use crate::automata::{pda_intersect_dfa, pda_is_empty, Alphabet, AutomataError, Dfa, Pda, BOTTOM};

/// Separator of the sequential encoding `u $ u'`.
pub const SEQUENTIAL_SEPARATOR: char = '$';

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub nonempty: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

fn require_subset(required: &Alphabet, dfa: &Dfa) -> Result<(), AutomataError> {
    if required.is_subset_of(dfa.alphabet()) {
        Ok(())
    } else {
        Err(AutomataError::AlphabetMismatch {
            left: required.clone(),
            right: dfa.alphabet().clone(),
        })
    }
}

/// Decides whether `L(a)` contains a word `u $ u'` whose two sides are equal
/// once `pad` is erased, and returns one such word.
///
/// `a` is first restricted to words of shape `(Σ ∪ {pad})* $ (Σ ∪ {pad})*`.
/// In that product every candidate splits at a `$`-edge `q -> q'`: `u` runs
/// from the start to `q` and `u'` from `q'` to a final state `q_f`. For each
/// `q'`, a 0-1 breadth-first search over pairs of product states reads a
/// common letter of `Σ` on both sides at cost 1, or a pad letter on either
/// side alone at cost 0. A reachable pair `(q, q_f)` with `q -$-> q'` is a
/// witness; among all of them the least `(q, q', q_f)` is reported, with the
/// fewest letters of `Σ`.
pub fn decide_intreg_sequential_string_eq(a: &Dfa, alphabet: &Alphabet, pad: char) -> Result<Decision, AutomataError> {
    let required = alphabet.union(&Alphabet::new([pad, SEQUENTIAL_SEPARATOR]));
    require_subset(&required, a)?;
    if alphabet.contains(pad) || alphabet.contains(SEQUENTIAL_SEPARATOR) {
        return Err(AutomataError::Invalid(
            "the pad and the separator must not be letters of the base alphabet".into(),
        ));
    }
    let shape = Dfa::from_fn(a.alphabet().clone(), 3, 0, &[1], |q, c| {
        if q == 2 {
            2
        } else if c == SEQUENTIAL_SEPARATOR {
            if q == 0 {
                1
            } else {
                2
            }
        } else if c == pad || alphabet.contains(c) {
            q
        } else {
            2
        }
    })?;
    let product = Dfa::product(a, &shape, |x, y| x && y)?;
    let k = product.alphabet();
    let dollar = k.index_of(SEQUENTIAL_SEPARATOR).expect("checked above");
    let pad_index = k.index_of(pad).expect("checked above");
    let letters: Vec<usize> = alphabet.iter().map(|c| k.index_of(c).expect("checked above")).collect();
    let reachable = product.reachable();
    let live = product.coreachable();
    let n = product.state_count();

    let mut best: Option<(usize, usize, usize, Vec<Option<Step>>)> = None;
    let mut targets: Vec<usize> = (0..n)
        .filter(|&q| reachable[q] && live[product.step(q, dollar)])
        .map(|q| product.step(q, dollar))
        .collect();
    targets.sort_unstable();
    targets.dedup();
    for q2 in targets {
        let parents = pair_search(&product, product.start(), q2, &letters, pad_index);
        for q in (0..n).filter(|&q| reachable[q] && product.step(q, dollar) == q2) {
            for qf in product.finals() {
                if parents[q * n + qf].is_some() && best.as_ref().is_none_or(|b| (q, q2, qf) < (b.0, b.1, b.2)) {
                    best = Some((q, q2, qf, parents.clone()));
                }
            }
        }
    }
    let Some((q, q2, qf, parents)) = best else {
        return Ok(Decision {
            nonempty: false,
            witness: None,
        });
    };
    let (mut left, mut right) = (Vec::new(), Vec::new());
    let mut pair = q * n + qf;
    let root = product.start() * n + q2;
    while pair != root {
        let step = parents[pair].expect("reached pairs have parents");
        match step.emit {
            Emit::Both(c) => {
                left.push(c);
                right.push(c);
            }
            Emit::Left(c) => left.push(c),
            Emit::Right(c) => right.push(c),
            Emit::Root => unreachable!("the root has no predecessor"),
        }
        pair = step.from;
    }
    left.reverse();
    right.reverse();
    let sym = |s: usize| k.symbol(s);
    let witness: String = left
        .into_iter()
        .map(sym)
        .chain([SEQUENTIAL_SEPARATOR])
        .chain(right.into_iter().map(sym))
        .collect();
    Ok(Decision {
        nonempty: true,
        witness: Some(witness),
    })
}

#[derive(Debug, Clone, Copy)]
enum Emit {
    Root,
    Both(usize),
    Left(usize),
    Right(usize),
}

#[derive(Debug, Clone, Copy)]
struct Step {
    from: usize,
    emit: Emit,
}

/// 0-1 BFS from `(s0, t0)`; returns the predecessor of every reached pair
/// `s * n + t` along a path with the fewest common letters.
fn pair_search(dfa: &Dfa, s0: usize, t0: usize, letters: &[usize], pad: usize) -> Vec<Option<Step>> {
    let n = dfa.state_count();
    let mut dist = vec![usize::MAX; n * n];
    let mut parent: Vec<Option<Step>> = vec![None; n * n];
    let root = s0 * n + t0;
    dist[root] = 0;
    parent[root] = Some(Step {
        from: root,
        emit: Emit::Root,
    });
    let mut deque = VecDeque::from([root]);
    let mut done = vec![false; n * n];
    while let Some(pair) = deque.pop_front() {
        if done[pair] {
            continue;
        }
        done[pair] = true;
        let (s, t) = (pair / n, pair % n);
        let mut relax = |next: usize, cost: usize, emit: Emit, deque: &mut VecDeque<usize>| {
            let d = dist[pair] + cost;
            if d < dist[next] {
                dist[next] = d;
                parent[next] = Some(Step { from: pair, emit });
                if cost == 0 {
                    deque.push_front(next);
                } else {
                    deque.push_back(next);
                }
            }
        };
        relax(dfa.step(s, pad) * n + t, 0, Emit::Left(pad), &mut deque);
        relax(s * n + dfa.step(t, pad), 0, Emit::Right(pad), &mut deque);
        for &c in letters {
            relax(dfa.step(s, c) * n + dfa.step(t, c), 1, Emit::Both(c), &mut deque);
        }
    }
    parent
}

const COUNTER: usize = 1;

/// Pushdown automaton for the shuffled string-equivalence language over one
/// letter: it tracks the count of `letter`s at odd positions minus the count
/// at even positions. The state holds the position parity and the sign of
/// the counter; the magnitude is the number of counter symbols above the
/// bottom marker. Accepting states are those of even parity, so acceptance
/// (which also needs the bare bottom marker) means equal counts.
pub fn unary_counter_pda(alphabet: &Alphabet, letter: char, pad: char) -> Result<Pda, AutomataError> {
    const NONNEG: usize = 0;
    const NEG: usize = 1;
    let id = |parity: usize, sign: usize| parity * 2 + sign;
    let mut pda = Pda::new(alphabet.clone(), 4, 2, id(0, NONNEG))?;
    for sign in [NONNEG, NEG] {
        pda.set_final(id(0, sign), true);
        for parity in [0, 1] {
            let next = 1 - parity;
            for top in [BOTTOM, COUNTER] {
                pda.add_transition(id(parity, sign), Some(pad), top, id(next, sign), &[top])?;
                // odd positions (parity 0) count up, even positions count down
                let up = parity == 0;
                let (new_sign, push): (usize, Vec<usize>) = match (up, sign, top) {
                    (true, NEG, COUNTER) | (false, NONNEG, COUNTER) => (sign, vec![]),
                    (true, _, BOTTOM) => (NONNEG, vec![COUNTER, BOTTOM]),
                    (false, _, BOTTOM) => (NEG, vec![COUNTER, BOTTOM]),
                    (_, _, _) => (sign, vec![COUNTER, COUNTER]),
                };
                pda.add_transition(id(parity, sign), Some(letter), top, id(next, new_sign), &push)?;
            }
        }
    }
    Ok(pda)
}

/// Decides whether `L(a)` over `{letter, pad}` contains a word whose
/// odd-position and even-position letters agree after erasing `pad`, by
/// emptiness of the counter automaton intersected with `a`.
pub fn decide_intreg_unary_shuffled(a: &Dfa, letter: char, pad: char) -> Result<bool, AutomataError> {
    let expected = Alphabet::new([letter, pad]);
    if a.alphabet() != &expected || letter == pad {
        return Err(AutomataError::AlphabetMismatch {
            left: expected,
            right: a.alphabet().clone(),
        });
    }
    let pda = unary_counter_pda(&expected, letter, pad)?;
    Ok(!pda_is_empty(&pda_intersect_dfa(&pda, a)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{determinize, parse_regex, regex_to_nfa};
    use crate::problems::{member_sequential_string_eq, member_shuffled_string_eq};
    use crate::search::enumerate_words;

    fn dfa(regex: &str, alphabet: &str) -> Dfa {
        let alphabet = Alphabet::from_str_chars(alphabet);
        determinize(&regex_to_nfa(&parse_regex(regex, &alphabet).unwrap()))
    }

    fn ab() -> Alphabet {
        Alphabet::from_str_chars("ab")
    }

    #[test]
    fn sequential_single_words() {
        let d = Dfa::single_word(Alphabet::from_str_chars("ab_$"), "ab$ab").unwrap();
        let decision = decide_intreg_sequential_string_eq(&d, &ab(), '_').unwrap();
        assert_eq!(decision.witness.as_deref(), Some("ab$ab"));
        let d = Dfa::single_word(Alphabet::from_str_chars("ab_$"), "a$b").unwrap();
        assert!(!decide_intreg_sequential_string_eq(&d, &ab(), '_').unwrap().nonempty);
    }

    #[test]
    fn sequential_with_padding() {
        let d = dfa("a\\_*$a", "ab_$");
        let decision = decide_intreg_sequential_string_eq(&d, &ab(), '_').unwrap();
        let w = decision.witness.unwrap();
        assert!(d.accepts(&w).unwrap());
        assert!(member_sequential_string_eq(&w, &ab(), '_'));
        // the oracle agrees
        assert!(enumerate_words(&d, 6).any(|w| member_sequential_string_eq(&w, &ab(), '_')));
    }

    #[test]
    fn sequential_needs_pad_on_both_sides() {
        let d = dfa("a\\_b$\\_\\_ab", "ab_$");
        let w = decide_intreg_sequential_string_eq(&d, &ab(), '_').unwrap().witness.unwrap();
        assert_eq!(w, "a_b$__ab");
    }

    #[test]
    fn sequential_empty_sides() {
        let d = dfa("$", "ab_$");
        assert_eq!(decide_intreg_sequential_string_eq(&d, &ab(), '_').unwrap().witness.as_deref(), Some("$"));
    }

    #[test]
    fn sequential_alphabet_checks() {
        let d = dfa("ab", "ab");
        assert!(decide_intreg_sequential_string_eq(&d, &ab(), '_').is_err());
    }

    #[test]
    fn unary_examples() {
        let a = Alphabet::from_str_chars("a_");
        let d = |w: &str| Dfa::single_word(a.clone(), w).unwrap();
        assert!(decide_intreg_unary_shuffled(&d("aa"), 'a', '_').unwrap());
        assert!(!decide_intreg_unary_shuffled(&d("a_"), 'a', '_').unwrap());
        assert!(decide_intreg_unary_shuffled(&d("a__a"), 'a', '_').unwrap());
        assert!(!decide_intreg_unary_shuffled(&d("_a_a"), 'a', '_').unwrap());
        assert!(decide_intreg_unary_shuffled(&d(""), 'a', '_').unwrap());
        let plus = dfa("(a\\_)(a\\_)*", "a_");
        assert!(!decide_intreg_unary_shuffled(&plus, 'a', '_').unwrap());
        assert!(!enumerate_words(&plus, 12).any(|w| member_shuffled_string_eq(&w, &Alphabet::from_str_chars("a"), '_')));
    }

    #[test]
    fn unary_negative_counter() {
        // even positions ahead first, then odd positions catch up
        let a = Alphabet::from_str_chars("a_");
        let d = Dfa::single_word(a, "_aa_").unwrap();
        assert!(decide_intreg_unary_shuffled(&d, 'a', '_').unwrap());
        let pda = unary_counter_pda(d.alphabet(), 'a', '_').unwrap();
        for (w, expected) in [("_aa_", true), ("_a", false), ("_a_a_aa_", false), ("_a_aaa", false), ("__aa", true)] {
            assert_eq!(pda.accepts(w).unwrap(), expected, "{w}");
            assert_eq!(member_shuffled_string_eq(w, &Alphabet::from_str_chars("a"), '_'), expected);
        }
    }

    #[test]
    fn unary_alphabet_checks() {
        let d = dfa("ab", "ab");
        assert!(decide_intreg_unary_shuffled(&d, 'a', '_').is_err());
    }
}
