//! Naive oracles, random generators and property bodies for the automata
//! toolkit, shared by the property suite and the acceptance run.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use regint_core::automata::{
    determinize, equivalent, erase_letters, intersect_dfa, pda_is_empty, regex_to_nfa, Alphabet, Dfa, Nfa, Pda,
    RegexAst, RegexNode, BOTTOM,
};

/// All words over `alphabet` of length at most `max_len`, shortest first.
pub fn all_words(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| alphabet.iter().map(move |&c| format!("{w}{c}")))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// End positions reachable after matching `node` from each start in `from`.
pub fn regex_ends(node: &RegexNode, word: &[char], from: &BTreeSet<usize>) -> BTreeSet<usize> {
    match node {
        RegexNode::Empty => BTreeSet::new(),
        RegexNode::Epsilon => from.clone(),
        RegexNode::Literal(c) => from
            .iter()
            .filter(|&&i| word.get(i) == Some(c))
            .map(|i| i + 1)
            .collect(),
        RegexNode::Concat(l, r) => regex_ends(r, word, &regex_ends(l, word, from)),
        RegexNode::Alternation(l, r) => {
            let mut s = regex_ends(l, word, from);
            s.extend(regex_ends(r, word, from));
            s
        }
        RegexNode::Star(inner) => {
            let mut reached = from.clone();
            let mut frontier = from.clone();
            while !frontier.is_empty() {
                frontier = regex_ends(inner, word, &frontier)
                    .difference(&reached)
                    .copied()
                    .collect();
                reached.extend(frontier.iter().copied());
            }
            reached
        }
    }
}

pub fn regex_matches(node: &RegexNode, word: &str) -> bool {
    let chars: Vec<char> = word.chars().collect();
    regex_ends(node, &chars, &BTreeSet::from([0])).contains(&chars.len())
}

pub fn regex_strategy(alphabet: &'static str) -> impl Strategy<Value = RegexNode> {
    let letters: Vec<char> = alphabet.chars().collect();
    let leaf = prop_oneof![
        1 => Just(RegexNode::Empty),
        1 => Just(RegexNode::Epsilon),
        6 => prop::sample::select(letters).prop_map(RegexNode::Literal),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| RegexNode::Concat(Box::new(l), Box::new(r))),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| RegexNode::Alternation(Box::new(l), Box::new(r))),
            inner.prop_map(|n| RegexNode::Star(Box::new(n))),
        ]
    })
}

#[derive(Debug, Clone)]
pub struct NfaSpec {
    pub alphabet: &'static str,
    pub states: usize,
    pub edges: Vec<(usize, Option<usize>, usize)>,
    pub finals: Vec<usize>,
}

impl NfaSpec {
    pub fn build(&self) -> Nfa {
        let letters: Vec<char> = self.alphabet.chars().collect();
        let mut nfa = Nfa::with_states(Alphabet::from_str_chars(self.alphabet), self.states);
        for &(from, label, to) in &self.edges {
            nfa.add_transition(from, label.map(|i| letters[i]), to).unwrap();
        }
        for &f in &self.finals {
            nfa.set_final(f, true);
        }
        nfa
    }
}

pub fn nfa_strategy(alphabet: &'static str, max_states: usize) -> impl Strategy<Value = NfaSpec> {
    let k = alphabet.chars().count();
    (1..=max_states).prop_flat_map(move |n| {
        let edge = (0..n, prop::option::weighted(0.8, 0..k), 0..n);
        (
            prop::collection::vec(edge, 0..=3 * n),
            prop::collection::vec(0..n, 0..=n),
        )
            .prop_map(move |(edges, finals)| NfaSpec {
                alphabet,
                states: n,
                edges,
                finals,
            })
    })
}

#[derive(Debug, Clone)]
pub struct DfaSpec {
    pub states: usize,
    pub table: Vec<usize>,
    pub finals: Vec<usize>,
}

impl DfaSpec {
    pub fn build(&self, alphabet: &str) -> Dfa {
        let letters: Vec<char> = alphabet.chars().collect();
        let k = letters.len();
        Dfa::from_fn(Alphabet::from_str_chars(alphabet), self.states, 0, &self.finals, |q, c| {
            self.table[q * k + letters.iter().position(|&x| x == c).unwrap()]
        })
        .unwrap()
    }
}

pub fn dfa_strategy(k: usize, max_states: usize) -> impl Strategy<Value = DfaSpec> {
    (1..=max_states).prop_flat_map(move |n| {
        (
            prop::collection::vec(0..n, n * k),
            prop::collection::vec(0..n, 0..=n),
        )
            .prop_map(move |(table, finals)| DfaSpec {
                states: n,
                table,
                finals,
            })
    })
}

/// Naive NFA simulation: sets of states closed under silent moves.
pub fn nfa_oracle_accepts(spec: &NfaSpec, word: &str) -> bool {
    let letters: Vec<char> = spec.alphabet.chars().collect();
    let close = |set: &mut BTreeSet<usize>| loop {
        let extra: Vec<usize> = spec
            .edges
            .iter()
            .filter(|(f, l, t)| l.is_none() && set.contains(f) && !set.contains(t))
            .map(|&(_, _, t)| t)
            .collect();
        if extra.is_empty() {
            break;
        }
        set.extend(extra);
    };
    let mut current = BTreeSet::from([0]);
    close(&mut current);
    for c in word.chars() {
        let i = letters.iter().position(|&x| x == c).unwrap();
        current = spec
            .edges
            .iter()
            .filter(|(f, l, _)| *l == Some(i) && current.contains(f))
            .map(|&(_, _, t)| t)
            .collect();
        close(&mut current);
    }
    current.iter().any(|q| spec.finals.contains(q))
}

#[derive(Debug, Clone)]
pub struct PdaSpec {
    pub states: usize,
    pub stack_symbols: usize,
    // (from, letter?, top, to, push) with push[0] on top
    pub moves: Vec<(usize, Option<char>, usize, usize, Vec<usize>)>,
    pub finals: Vec<usize>,
}

impl PdaSpec {
    pub fn build(&self) -> Pda {
        let mut p = Pda::new(Alphabet::from_str_chars("ab"), self.states, self.stack_symbols, 0).unwrap();
        for (from, input, top, to, push) in &self.moves {
            p.add_transition(*from, *input, *top, *to, push).unwrap();
        }
        for &f in &self.finals {
            p.set_final(f, true);
        }
        p
    }
}

/// Transitions keep the bottom marker at the bottom of the stack.
pub fn pda_strategy() -> impl Strategy<Value = PdaSpec> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(n, m)| {
        let upper = prop::collection::vec(1..m.max(2), 0..=2).prop_map(move |v| {
            if m == 1 {
                Vec::new()
            } else {
                v
            }
        });
        let mv = (
            0..n,
            prop::option::of(prop::sample::select(vec!['a', 'b'])),
            0..m,
            0..n,
            upper,
        )
            .prop_map(|(from, input, top, to, mut push)| {
                if top == BOTTOM {
                    push.push(BOTTOM);
                }
                (from, input, top, to, push)
            });
        (prop::collection::vec(mv, 0..=6), prop::collection::vec(0..n, 0..=n)).prop_map(move |(moves, finals)| PdaSpec {
            states: n,
            stack_symbols: m,
            moves,
            finals,
        })
    })
}

/// Whether an accepting configuration is reachable when the stack never
/// grows beyond `height_cap`.
pub fn pda_bfs_nonempty(spec: &PdaSpec, height_cap: usize) -> bool {
    let start = (0usize, vec![BOTTOM]);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some((q, stack)) = queue.pop_front() {
        if spec.finals.contains(&q) && stack == [BOTTOM] {
            return true;
        }
        let Some(&top) = stack.last() else { continue };
        for (_, _, _, to, push) in spec.moves.iter().filter(|m| m.0 == q && m.2 == top) {
            let mut next = stack.clone();
            next.pop();
            next.extend(push.iter().rev());
            if next.len() <= height_cap && seen.insert((*to, next.clone())) {
                queue.push_back((*to, next));
            }
        }
    }
    false
}

pub type Outcome = Result<(), TestCaseError>;

pub fn regex_round_trip(alphabet: &str, node: &RegexNode) -> Outcome {
    let ast = RegexAst::new(node.clone(), Alphabet::from_str_chars(alphabet)).unwrap();
    let nfa = regex_to_nfa(&ast);
    let dfa = determinize(&nfa);
    let letters: Vec<char> = alphabet.chars().collect();
    let max_len = if letters.len() == 3 { 6 } else { 8 };
    for w in all_words(&letters, max_len) {
        let expected = regex_matches(node, &w);
        prop_assert_eq!(nfa.accepts(&w).unwrap(), expected, "nfa on {:?} for {}", w, node);
        prop_assert_eq!(dfa.accepts(&w).unwrap(), expected, "dfa on {:?} for {}", w, node);
    }
    Ok(())
}

pub fn determinize_agrees(spec: &NfaSpec) -> Outcome {
    let nfa = spec.build();
    let dfa = determinize(&nfa);
    for w in all_words(&['a', 'b'], 7) {
        let expected = nfa_oracle_accepts(spec, &w);
        prop_assert_eq!(nfa.accepts(&w).unwrap(), expected, "{:?}", w);
        prop_assert_eq!(dfa.accepts(&w).unwrap(), expected, "{:?}", w);
    }
    Ok(())
}

pub fn intersection_is_conjunction(a: &DfaSpec, b: &DfaSpec) -> Outcome {
    let (a, b) = (a.build("ab"), b.build("ab"));
    let product = intersect_dfa(&a, &b).unwrap();
    for w in all_words(&['a', 'b'], 7) {
        prop_assert_eq!(
            product.accepts(&w).unwrap(),
            a.accepts(&w).unwrap() && b.accepts(&w).unwrap(),
            "{:?}", w
        );
    }
    Ok(())
}

pub fn nfa_emptiness(spec: &NfaSpec) -> Outcome {
    let nfa = spec.build();
    let letters: Vec<char> = spec.alphabet.chars().collect();
    let found = all_words(&letters, nfa.state_count())
        .iter()
        .any(|w| nfa_oracle_accepts(spec, w));
    prop_assert_eq!(nfa.is_empty(), !found);
    Ok(())
}

pub fn dfa_emptiness(spec: &DfaSpec) -> Outcome {
    let dfa = spec.build("abc");
    let found = all_words(&['a', 'b', 'c'], dfa.state_count())
        .iter()
        .any(|w| dfa.accepts(w).unwrap());
    prop_assert_eq!(dfa.is_empty(), !found);
    prop_assert_eq!(dfa.shortest_word().is_none(), !found);
    Ok(())
}

pub fn equivalence_is_empty_xor(a: &DfaSpec, b: &DfaSpec) -> Outcome {
    let (a, b) = (a.build("ab"), b.build("ab"));
    let xor = Dfa::product(&a, &b, |x, y| x != y).unwrap();
    let same = equivalent(&a, &b).unwrap();
    prop_assert_eq!(same, xor.is_empty());
    let differs = all_words(&['a', 'b'], a.state_count() * b.state_count())
        .iter()
        .any(|w| a.accepts(w).unwrap() != b.accepts(w).unwrap());
    prop_assert_eq!(same, !differs);
    // a round trip through an NFA never changes the language
    prop_assert!(equivalent(&a, &determinize(&Nfa::from_dfa(&a))).unwrap());
    prop_assert!(equivalent(&a, &a.complement().complement()).unwrap());
    Ok(())
}

pub fn pda_emptiness(spec: &PdaSpec) -> Outcome {
    let pda = spec.build();
    let cap = (spec.states * spec.states).max(2);
    prop_assert_eq!(pda_is_empty(&pda), !pda_bfs_nonempty(spec, cap), "{:?}", spec);
    Ok(())
}

/// Erases `c` from an NFA over `abc`.
pub fn erasing_is_an_image(spec: &NfaSpec) -> Outcome {
    let nfa = spec.build();
    let image = erase_letters(&nfa, &Alphabet::from_str_chars("c"));
    // a shortest preimage of w spends fewer than |Q| erased letters
    // between consecutive kept letters
    let n = nfa.state_count();
    let preimage_len = 2 + 3 * (n - 1);
    let mut images = HashSet::new();
    for w in all_words(&['a', 'b', 'c'], preimage_len) {
        if nfa_oracle_accepts(spec, &w) {
            let h: String = w.chars().filter(|&c| c != 'c').collect();
            prop_assert!(image.accepts(&h).unwrap(), "{:?} -> {:?}", w, h);
            images.insert(h);
        }
    }
    for w in all_words(&['a', 'b'], 2) {
        prop_assert_eq!(image.accepts(&w).unwrap(), images.contains(&w), "{:?}", w);
    }
    Ok(())
}

pub fn regex_case() -> impl Strategy<Value = (&'static str, RegexNode)> {
    prop::sample::select(vec!["a", "ab", "abc"]).prop_flat_map(|a| (Just(a), regex_strategy(a)))
}
