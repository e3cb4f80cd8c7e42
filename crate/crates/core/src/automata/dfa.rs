use std::collections::{BTreeMap, VecDeque};

use super::{encode_word, Alphabet, AutomataError, Nfa, Result};

/// Total deterministic finite automaton.
///
/// `delta[q * k + s]` is the successor of state `q` on symbol index `s`,
/// where `k` is the alphabet size. Every pair has exactly one successor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    states: usize,
    delta: Vec<usize>,
    start: usize,
    finals: Vec<bool>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        states: usize,
        start: usize,
        delta: Vec<usize>,
        finals: Vec<bool>,
    ) -> Result<Self> {
        if states == 0 {
            return Err(AutomataError::Invalid("a DFA needs at least one state".into()));
        }
        if start >= states {
            return Err(AutomataError::Invalid(format!("start state {start} out of range")));
        }
        if delta.len() != states * alphabet.len() {
            return Err(AutomataError::Invalid(format!(
                "transition table has {} entries, expected {}",
                delta.len(),
                states * alphabet.len()
            )));
        }
        if let Some(bad) = delta.iter().find(|&&q| q >= states) {
            return Err(AutomataError::Invalid(format!("target state {bad} out of range")));
        }
        if finals.len() != states {
            return Err(AutomataError::Invalid("finals vector has wrong length".into()));
        }
        Ok(Dfa {
            alphabet,
            states,
            delta,
            start,
            finals,
        })
    }

    /// Builds a DFA from a successor function.
    pub fn from_fn(
        alphabet: Alphabet,
        states: usize,
        start: usize,
        finals: &[usize],
        mut next: impl FnMut(usize, char) -> usize,
    ) -> Result<Self> {
        let mut delta = Vec::with_capacity(states * alphabet.len());
        for q in 0..states {
            for c in alphabet.iter() {
                delta.push(next(q, c));
            }
        }
        let mut fin = vec![false; states];
        for &f in finals {
            if f >= states {
                return Err(AutomataError::Invalid(format!("final state {f} out of range")));
            }
            fin[f] = true;
        }
        Dfa::new(alphabet, states, start, delta, fin)
    }

    /// The automaton accepting nothing.
    pub fn empty_language(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa {
            alphabet,
            states: 1,
            delta: vec![0; k],
            start: 0,
            finals: vec![false],
        }
    }

    /// The automaton accepting every word.
    pub fn universal(alphabet: Alphabet) -> Self {
        let mut d = Dfa::empty_language(alphabet);
        d.finals[0] = true;
        d
    }

    /// The automaton accepting exactly `word`.
    pub fn single_word(alphabet: Alphabet, word: &str) -> Result<Self> {
        let symbols = encode_word(&alphabet, word)?;
        let n = symbols.len();
        let dead = n + 1;
        let k = alphabet.len();
        let mut delta = vec![dead; (n + 2) * k];
        for (i, &s) in symbols.iter().enumerate() {
            delta[i * k + s] = i + 1;
        }
        let mut finals = vec![false; n + 2];
        finals[n] = true;
        Dfa::new(alphabet, n + 2, 0, delta, finals)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states
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

    /// Successor on a symbol index.
    pub fn step(&self, state: usize, symbol: usize) -> usize {
        self.delta[state * self.alphabet.len() + symbol]
    }

    /// Successor on a letter, `None` if the letter is not in the alphabet.
    pub fn next(&self, state: usize, c: char) -> Option<usize> {
        self.alphabet.index_of(c).map(|s| self.step(state, s))
    }

    pub fn run(&self, word: &str) -> Result<usize> {
        let symbols = encode_word(&self.alphabet, word)?;
        Ok(symbols.into_iter().fold(self.start, |q, s| self.step(q, s)))
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        Ok(self.finals[self.run(word)?])
    }

    pub fn reachable(&self) -> Vec<bool> {
        let k = self.alphabet.len();
        let mut seen = vec![false; self.states];
        seen[self.start] = true;
        let mut queue = VecDeque::from([self.start]);
        while let Some(q) = queue.pop_front() {
            for s in 0..k {
                let to = self.step(q, s);
                if !seen[to] {
                    seen[to] = true;
                    queue.push_back(to);
                }
            }
        }
        seen
    }

    /// States from which a final state is reachable.
    pub fn coreachable(&self) -> Vec<bool> {
        let k = self.alphabet.len();
        let mut reverse = vec![Vec::new(); self.states];
        for q in 0..self.states {
            for s in 0..k {
                reverse[self.step(q, s)].push(q);
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
        self.shortest_word().is_none()
    }

    /// Shortlex-least accepted word.
    pub fn shortest_word(&self) -> Option<String> {
        let k = self.alphabet.len();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.states];
        let mut seen = vec![false; self.states];
        seen[self.start] = true;
        let mut queue = VecDeque::from([self.start]);
        while let Some(q) = queue.pop_front() {
            if self.finals[q] {
                let mut word = Vec::new();
                let mut cur = q;
                while let Some((p, s)) = parent[cur] {
                    word.push(self.alphabet.symbol(s));
                    cur = p;
                }
                word.reverse();
                return Some(word.into_iter().collect());
            }
            for s in 0..k {
                let to = self.step(q, s);
                if !seen[to] {
                    seen[to] = true;
                    parent[to] = Some((q, s));
                    queue.push_back(to);
                }
            }
        }
        None
    }

    pub fn complement(&self) -> Dfa {
        let mut out = self.clone();
        for f in &mut out.finals {
            *f = !*f;
        }
        out
    }

    /// Same language over a larger alphabet; new letters lead to a fresh dead
    /// state.
    pub fn with_alphabet(&self, alphabet: &Alphabet) -> Result<Dfa> {
        if !self.alphabet.is_subset_of(alphabet) {
            return Err(AutomataError::AlphabetMismatch {
                left: self.alphabet.clone(),
                right: alphabet.clone(),
            });
        }
        if alphabet == &self.alphabet {
            return Ok(self.clone());
        }
        let dead = self.states;
        Dfa::from_fn(
            alphabet.clone(),
            self.states + 1,
            self.start,
            &self.finals().collect::<Vec<_>>(),
            |q, c| {
                if q == dead {
                    dead
                } else {
                    self.next(q, c).unwrap_or(dead)
                }
            },
        )
    }

    /// Reachable part of the synchronous product, with acceptance decided by
    /// `combine`. State `i` of the output corresponds to the `i`-th pair
    /// discovered in breadth-first order.
    pub fn product(a: &Dfa, b: &Dfa, combine: impl Fn(bool, bool) -> bool) -> Result<Dfa> {
        Ok(Dfa::product_with_pairs(a, b, combine)?.0)
    }

    pub(crate) fn product_with_pairs(
        a: &Dfa,
        b: &Dfa,
        combine: impl Fn(bool, bool) -> bool,
    ) -> Result<(Dfa, Vec<(usize, usize)>)> {
        if a.alphabet != b.alphabet {
            return Err(AutomataError::AlphabetMismatch {
                left: a.alphabet.clone(),
                right: b.alphabet.clone(),
            });
        }
        let k = a.alphabet.len();
        let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut pairs = vec![(a.start, b.start)];
        index.insert((a.start, b.start), 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            for s in 0..k {
                let next = (a.step(p, s), b.step(q, s));
                let id = *index.entry(next).or_insert_with(|| {
                    pairs.push(next);
                    pairs.len() - 1
                });
                delta.push(id);
            }
            i += 1;
        }
        let finals = pairs
            .iter()
            .map(|&(p, q)| combine(a.finals[p], b.finals[q]))
            .collect();
        let dfa = Dfa::new(a.alphabet.clone(), pairs.len(), 0, delta, finals)?;
        Ok((dfa, pairs))
    }

    /// Shortlex-least word in the symmetric difference, `None` when the
    /// languages are equal.
    pub fn distinguishing_word(a: &Dfa, b: &Dfa) -> Result<Option<String>> {
        Ok(Dfa::product(a, b, |x, y| x != y)?.shortest_word())
    }

    /// Subset construction. State 0 is the start set; the empty set is
    /// materialized as a dead state when it is reachable.
    pub fn from_nfa(nfa: &Nfa) -> Dfa {
        let k = nfa.alphabet().len();
        let initial = nfa.initial_set();
        let mut index: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
        let mut sets = vec![initial.clone()];
        index.insert(initial, 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < sets.len() {
            for s in 0..k {
                let next = nfa.step(&sets[i], s);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        sets.push(next.clone());
                        index.insert(next, sets.len() - 1);
                        sets.len() - 1
                    }
                };
                delta.push(id);
            }
            i += 1;
        }
        let finals = sets
            .iter()
            .map(|set| set.iter().enumerate().any(|(q, &m)| m && nfa.is_final(q)))
            .collect();
        Dfa {
            alphabet: nfa.alphabet().clone(),
            states: sets.len(),
            delta,
            start: 0,
            finals,
        }
    }
}

pub fn determinize(nfa: &Nfa) -> Dfa {
    Dfa::from_nfa(nfa)
}

pub fn intersect_dfa(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    Dfa::product(a, b, |x, y| x && y)
}

/// Language equality, decided by searching the product for a reachable pair
/// on which exactly one side accepts.
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<bool> {
    Ok(Dfa::distinguishing_word(a, b)?.is_none())
}
