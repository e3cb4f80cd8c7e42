use std::collections::VecDeque;

use super::{encode_word, Alphabet, AutomataError, Dfa, RegexAst, RegexNode, Result};

/// Nondeterministic finite automaton with silent moves.
///
/// Transition labels are symbol indices into the alphabet; `None` is a
/// silent move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    transitions: Vec<Vec<(Option<usize>, usize)>>,
    start: usize,
    finals: Vec<bool>,
}

impl Nfa {
    /// An automaton with a single non-final start state and no transitions.
    pub fn new(alphabet: Alphabet) -> Self {
        Nfa {
            alphabet,
            transitions: vec![Vec::new()],
            start: 0,
            finals: vec![false],
        }
    }

    pub fn with_states(alphabet: Alphabet, states: usize) -> Self {
        assert!(states > 0, "an automaton needs at least one state");
        Nfa {
            alphabet,
            transitions: vec![Vec::new(); states],
            start: 0,
            finals: vec![false; states],
        }
    }

    pub fn add_state(&mut self) -> usize {
        self.transitions.push(Vec::new());
        self.finals.push(false);
        self.transitions.len() - 1
    }

    pub fn set_start(&mut self, state: usize) {
        assert!(state < self.state_count());
        self.start = state;
    }

    pub fn set_final(&mut self, state: usize, is_final: bool) {
        self.finals[state] = is_final;
    }

    /// Adds `from --label--> to`; `None` is a silent move.
    pub fn add_transition(&mut self, from: usize, label: Option<char>, to: usize) -> Result<()> {
        let label = match label {
            Some(c) => Some(
                self.alphabet
                    .index_of(c)
                    .ok_or(AutomataError::SymbolNotInAlphabet(c))?,
            ),
            None => None,
        };
        self.add_indexed(from, label, to);
        Ok(())
    }

    pub(crate) fn add_indexed(&mut self, from: usize, label: Option<usize>, to: usize) {
        assert!(from < self.state_count() && to < self.state_count());
        let edges = &mut self.transitions[from];
        if !edges.contains(&(label, to)) {
            edges.push((label, to));
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals.iter().enumerate().filter(|(_, f)| **f).map(|(q, _)| q)
    }

    pub fn edges(&self, state: usize) -> &[(Option<usize>, usize)] {
        &self.transitions[state]
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.iter().map(Vec::len).sum()
    }

    /// Extends `set` (a membership vector) by everything reachable through
    /// silent moves.
    pub(crate) fn close(&self, set: &mut [bool]) {
        let mut stack: Vec<usize> = (0..set.len()).filter(|&q| set[q]).collect();
        while let Some(q) = stack.pop() {
            for &(label, to) in &self.transitions[q] {
                if label.is_none() && !set[to] {
                    set[to] = true;
                    stack.push(to);
                }
            }
        }
    }

    pub(crate) fn step(&self, set: &[bool], symbol: usize) -> Vec<bool> {
        let mut next = vec![false; set.len()];
        for q in (0..set.len()).filter(|&q| set[q]) {
            for &(label, to) in &self.transitions[q] {
                if label == Some(symbol) {
                    next[to] = true;
                }
            }
        }
        self.close(&mut next);
        next
    }

    pub(crate) fn initial_set(&self) -> Vec<bool> {
        let mut set = vec![false; self.state_count()];
        set[self.start] = true;
        self.close(&mut set);
        set
    }

    /// Silent-closure simulation. Symbols outside the alphabet are an error.
    pub fn accepts(&self, word: &str) -> Result<bool> {
        let symbols = encode_word(&self.alphabet, word)?;
        let mut current = self.initial_set();
        for s in symbols {
            current = self.step(&current, s);
            if !current.iter().any(|&b| b) {
                return Ok(false);
            }
        }
        Ok(current
            .iter()
            .zip(&self.finals)
            .any(|(&live, &fin)| live && fin))
    }

    /// States reachable from the start state.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        seen[self.start] = true;
        let mut queue = VecDeque::from([self.start]);
        while let Some(q) = queue.pop_front() {
            for &(_, to) in &self.transitions[q] {
                if !seen[to] {
                    seen[to] = true;
                    queue.push_back(to);
                }
            }
        }
        seen
    }

    /// States from which some final state is reachable.
    pub fn coreachable(&self) -> Vec<bool> {
        let mut reverse = vec![Vec::new(); self.state_count()];
        for (q, edges) in self.transitions.iter().enumerate() {
            for &(_, to) in edges {
                reverse[to].push(q);
            }
        }
        let mut seen = self.finals.clone();
        let mut queue: VecDeque<usize> = self.finals().collect();
        while let Some(q) = queue.pop_front() {
            for &p in &reverse[q] {
                if !seen[p] {
                    seen[p] = true;
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    pub fn is_empty(&self) -> bool {
        !self
            .reachable()
            .iter()
            .zip(&self.finals)
            .any(|(&r, &f)| r && f)
    }

    pub fn from_dfa(dfa: &Dfa) -> Self {
        let k = dfa.alphabet().len();
        let mut nfa = Nfa::with_states(dfa.alphabet().clone(), dfa.state_count());
        nfa.start = dfa.start();
        for q in 0..dfa.state_count() {
            nfa.finals[q] = dfa.is_final(q);
            for s in 0..k {
                nfa.transitions[q].push((Some(s), dfa.step(q, s)));
            }
        }
        nfa
    }

    /// Same automaton over a larger alphabet; the new letters have no moves.
    pub fn with_alphabet(&self, alphabet: &Alphabet) -> Result<Nfa> {
        if !self.alphabet.is_subset_of(alphabet) {
            return Err(AutomataError::AlphabetMismatch {
                left: self.alphabet.clone(),
                right: alphabet.clone(),
            });
        }
        let remap: Vec<usize> = self
            .alphabet
            .iter()
            .map(|c| alphabet.index_of(c).expect("subset"))
            .collect();
        let mut out = self.clone();
        out.alphabet = alphabet.clone();
        for edges in &mut out.transitions {
            for (label, _) in edges.iter_mut() {
                *label = label.map(|s| remap[s]);
            }
        }
        Ok(out)
    }

    /// Thompson construction.
    pub fn from_regex(ast: &RegexAst) -> Nfa {
        let mut nfa = Nfa::new(ast.alphabet.clone());
        let (entry, exit) = thompson(&mut nfa, &ast.node);
        nfa.start = entry;
        nfa.finals[exit] = true;
        nfa
    }
}

fn thompson(nfa: &mut Nfa, node: &RegexNode) -> (usize, usize) {
    match node {
        RegexNode::Empty => (nfa.add_state(), nfa.add_state()),
        RegexNode::Epsilon => {
            let (a, b) = (nfa.add_state(), nfa.add_state());
            nfa.add_indexed(a, None, b);
            (a, b)
        }
        RegexNode::Literal(c) => {
            let (a, b) = (nfa.add_state(), nfa.add_state());
            let s = nfa
                .alphabet
                .index_of(*c)
                .expect("RegexAst literals belong to its alphabet");
            nfa.add_indexed(a, Some(s), b);
            (a, b)
        }
        RegexNode::Concat(l, r) => {
            let (la, lb) = thompson(nfa, l);
            let (ra, rb) = thompson(nfa, r);
            nfa.add_indexed(lb, None, ra);
            (la, rb)
        }
        RegexNode::Alternation(l, r) => {
            let (a, b) = (nfa.add_state(), nfa.add_state());
            let (la, lb) = thompson(nfa, l);
            let (ra, rb) = thompson(nfa, r);
            nfa.add_indexed(a, None, la);
            nfa.add_indexed(a, None, ra);
            nfa.add_indexed(lb, None, b);
            nfa.add_indexed(rb, None, b);
            (a, b)
        }
        RegexNode::Star(inner) => {
            let (a, b) = (nfa.add_state(), nfa.add_state());
            let (ia, ib) = thompson(nfa, inner);
            nfa.add_indexed(a, None, ia);
            nfa.add_indexed(a, None, b);
            nfa.add_indexed(ib, None, ia);
            nfa.add_indexed(ib, None, b);
            (a, b)
        }
    }
}

pub fn regex_to_nfa(ast: &RegexAst) -> Nfa {
    Nfa::from_regex(ast)
}

/// Image of `nfa` under the erasing homomorphism that deletes the letters in
/// `erase` and fixes every other letter.
///
/// Erased transitions become silent moves; the output alphabet is the input
/// alphabet minus `erase`. Letters of `erase` outside the alphabet are ignored.
pub fn erase_letters(nfa: &Nfa, erase: &Alphabet) -> Nfa {
    let kept = nfa.alphabet.without(erase.iter());
    let remap: Vec<Option<usize>> = nfa.alphabet.iter().map(|c| kept.index_of(c)).collect();
    let transitions = nfa
        .transitions
        .iter()
        .map(|edges| {
            let mut out: Vec<(Option<usize>, usize)> = Vec::with_capacity(edges.len());
            for &(label, to) in edges {
                let label = label.and_then(|s| remap[s]);
                if !out.contains(&(label, to)) {
                    out.push((label, to));
                }
            }
            out
        })
        .collect();
    Nfa {
        alphabet: kept,
        transitions,
        start: nfa.start,
        finals: nfa.finals.clone(),
    }
}
