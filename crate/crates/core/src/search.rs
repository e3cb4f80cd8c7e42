//! Bounded semi-decision of `L(A) ∩ P ≠ ∅`: enumerate `L(A)` in shortlex
//! order and hand each word to a membership checker until one passes or the
//! budget runs out.

use std::fmt;
use std::thread;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::automata::{determinize, Automaton, Dfa, Nfa};

/// Anything that can be turned into a total DFA for enumeration.
pub trait Language {
    fn to_dfa(&self) -> Dfa;
}

impl Language for Dfa {
    fn to_dfa(&self) -> Dfa {
        self.clone()
    }
}

impl Language for Nfa {
    fn to_dfa(&self) -> Dfa {
        determinize(self)
    }
}

impl Language for Automaton {
    fn to_dfa(&self) -> Dfa {
        Automaton::to_dfa(self)
    }
}

/// Shortlex stream of the accepted words of length at most `max_len`.
///
/// Enumeration runs length by length, depth-first in alphabet order. A
/// precomputed table of the states that can reach a final state in exactly
/// `r` more letters prunes every branch that cannot produce a word of the
/// current length, so each step of the DFS is on the way to an output word.
pub struct WordEnumerator {
    dfa: Dfa,
    completes_in: Vec<Vec<bool>>,
    max_len: usize,
    length: usize,
    stack: Vec<(usize, usize)>,
    word: Vec<char>,
    active: bool,
}

impl WordEnumerator {
    pub fn new(dfa: Dfa, max_len: usize) -> Self {
        let k = dfa.alphabet().len();
        let n = dfa.state_count();
        let mut completes_in = Vec::with_capacity(max_len + 1);
        completes_in.push((0..n).map(|q| dfa.is_final(q)).collect::<Vec<bool>>());
        for r in 1..=max_len {
            let prev: &Vec<bool> = &completes_in[r - 1];
            let row = (0..n)
                .map(|q| (0..k).any(|s| prev[dfa.step(q, s)]))
                .collect();
            completes_in.push(row);
        }
        WordEnumerator {
            dfa,
            completes_in,
            max_len,
            length: 0,
            stack: Vec::new(),
            word: Vec::new(),
            active: false,
        }
    }

    fn finish_length(&mut self) {
        self.active = false;
        self.length += 1;
    }
}

impl Iterator for WordEnumerator {
    type Item = String;

    fn next(&mut self) -> Option<String> {
        let k = self.dfa.alphabet().len();
        loop {
            if self.length > self.max_len {
                return None;
            }
            if !self.active {
                if self.completes_in[self.length][self.dfa.start()] {
                    self.stack.push((self.dfa.start(), 0));
                    self.active = true;
                } else {
                    self.length += 1;
                    continue;
                }
            }
            let depth = self.stack.len() - 1;
            let (q, next_symbol) = *self.stack.last().expect("active search has a root");
            if depth == self.length {
                let word: String = self.word.iter().collect();
                self.stack.pop();
                self.word.pop();
                if self.stack.is_empty() {
                    self.finish_length();
                }
                return Some(word);
            }
            let remaining = self.length - depth - 1;
            let found = (next_symbol..k).find(|&s| self.completes_in[remaining][self.dfa.step(q, s)]);
            match found {
                Some(s) => {
                    self.stack.last_mut().expect("nonempty").1 = s + 1;
                    self.stack.push((self.dfa.step(q, s), 0));
                    self.word.push(self.dfa.alphabet().symbol(s));
                }
                None => {
                    self.stack.pop();
                    self.word.pop();
                    if self.stack.is_empty() {
                        self.finish_length();
                    }
                }
            }
        }
    }
}

pub fn enumerate_words<L: Language + ?Sized>(automaton: &L, max_len: usize) -> WordEnumerator {
    WordEnumerator::new(automaton.to_dfa(), max_len)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_word_length: usize,
    pub max_words_tested: u64,
    pub wall_clock_limit: Duration,
}

impl SearchBudget {
    pub fn new(max_word_length: usize, max_words_tested: u64, wall_clock_limit: Duration) -> Self {
        SearchBudget {
            max_word_length,
            max_words_tested,
            wall_clock_limit,
        }
    }

    /// Only the length bound matters.
    pub fn length_only(max_word_length: usize) -> Self {
        SearchBudget::new(max_word_length, u64::MAX, Duration::from_secs(u64::MAX / 4))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Witness(String),
    /// Every word up to `bound` letters was tested.
    Exhausted { bound: usize },
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub outcome: Outcome,
    pub words_tested: u64,
    pub elapsed: Duration,
}

impl WitnessReport {
    pub fn witness(&self) -> Option<&str> {
        match &self.outcome {
            Outcome::Witness(w) => Some(w),
            _ => None,
        }
    }

    /// JSON form. With `deterministic` set, the elapsed time is reported as 0
    /// so identical runs serialize identically.
    pub fn to_json(&self, deterministic: bool) -> serde_json::Value {
        #[derive(Serialize)]
        #[serde(rename_all = "camelCase")]
        struct Json<'a> {
            outcome: &'a str,
            witness: Option<&'a str>,
            #[serde(skip_serializing_if = "Option::is_none")]
            bound: Option<usize>,
            words_tested: u64,
            elapsed_ms: u128,
        }
        let (outcome, bound) = match &self.outcome {
            Outcome::Witness(_) => ("witness", None),
            Outcome::Exhausted { bound } => ("exhausted", Some(*bound)),
            Outcome::BudgetExceeded => ("budgetExceeded", None),
        };
        serde_json::to_value(Json {
            outcome,
            witness: self.witness(),
            bound,
            words_tested: self.words_tested,
            elapsed_ms: if deterministic { 0 } else { self.elapsed.as_millis() },
        })
        .expect("report serializes")
    }
}

/// A checker failure, tagged with the word it failed on.
#[derive(Debug)]
pub struct SearchError<E> {
    pub word: String,
    pub source: E,
}

impl<E: fmt::Display> fmt::Display for SearchError<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "checker failed on word {:?}: {}", self.word, self.source)
    }
}

impl<E: std::error::Error + 'static> std::error::Error for SearchError<E> {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.source)
    }
}

/// Tests the words of `L(automaton)` in shortlex order; the first word the
/// checker accepts is the witness.
pub fn find_witness<L, F, E>(
    automaton: &L,
    mut checker: F,
    budget: SearchBudget,
) -> Result<WitnessReport, SearchError<E>>
where
    L: Language + ?Sized,
    F: FnMut(&str) -> Result<bool, E>,
{
    let started = Instant::now();
    let mut tested = 0u64;
    for word in enumerate_words(automaton, budget.max_word_length) {
        if tested >= budget.max_words_tested || started.elapsed() > budget.wall_clock_limit {
            return Ok(report(Outcome::BudgetExceeded, tested, started));
        }
        tested += 1;
        match checker(&word) {
            Ok(true) => return Ok(report(Outcome::Witness(word), tested, started)),
            Ok(false) => {}
            Err(source) => return Err(SearchError { word, source }),
        }
    }
    Ok(report(
        Outcome::Exhausted {
            bound: budget.max_word_length,
        },
        tested,
        started,
    ))
}

/// Like [`find_witness`], but evaluates the checker speculatively on batches
/// of words spread over `workers` threads. Results are joined in enumeration
/// order, so the witness and `words_tested` match the sequential search.
pub fn find_witness_parallel<L, F, E>(
    automaton: &L,
    checker: F,
    budget: SearchBudget,
    workers: usize,
) -> Result<WitnessReport, SearchError<E>>
where
    L: Language + ?Sized,
    F: Fn(&str) -> Result<bool, E> + Sync,
    E: Send,
{
    if workers <= 1 {
        return find_witness(automaton, checker, budget);
    }
    const PER_WORKER: usize = 64;
    let started = Instant::now();
    let mut tested = 0u64;
    let mut words = enumerate_words(automaton, budget.max_word_length).peekable();
    while words.peek().is_some() {
        let remaining = budget.max_words_tested.saturating_sub(tested);
        if remaining == 0 || started.elapsed() > budget.wall_clock_limit {
            return Ok(report(Outcome::BudgetExceeded, tested, started));
        }
        let take = (workers * PER_WORKER).min(usize::try_from(remaining).unwrap_or(usize::MAX));
        let batch: Vec<String> = words.by_ref().take(take).collect();
        let chunk = batch.len().div_ceil(workers);
        let checker = &checker;
        let results: Vec<Result<bool, E>> = thread::scope(|scope| {
            let handles: Vec<_> = batch
                .chunks(chunk)
                .map(|part| scope.spawn(move || part.iter().map(|w| checker(w)).collect::<Vec<_>>()))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("checker worker panicked"))
                .collect()
        });
        for (word, result) in batch.into_iter().zip(results) {
            tested += 1;
            match result {
                Ok(true) => return Ok(report(Outcome::Witness(word), tested, started)),
                Ok(false) => {}
                Err(source) => return Err(SearchError { word, source }),
            }
        }
    }
    Ok(report(
        Outcome::Exhausted {
            bound: budget.max_word_length,
        },
        tested,
        started,
    ))
}

fn report(outcome: Outcome, words_tested: u64, started: Instant) -> WitnessReport {
    WitnessReport {
        outcome,
        words_tested,
        elapsed: started.elapsed(),
    }
}
