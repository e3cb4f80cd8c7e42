//! Nondeterministic single-tape Turing machines and the machine languages
//! `⟨M⟩$x$a^n` under time, space and logarithmic-space bounds.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::ProblemError;
use crate::reductions::decode_tm;

/// Separator between the machine encoding, the input and the unary bound.
const WORD_SEPARATOR: char = '$';
/// Letter of the unary bound `a^n`.
const UNARY_LETTER: char = 'a';

pub const DEFAULT_CONFIGURATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Move {
    L,
    R,
    S,
}

/// `(from, read) -> (to, write, move)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TmTransition {
    pub from: usize,
    pub read: char,
    pub to: usize,
    pub write: char,
    #[serde(rename = "move")]
    pub dir: Move,
}

/// JSON form of a [`TmSpec`], before validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TmJson {
    pub states: usize,
    pub input: Vec<char>,
    pub tape: Vec<char>,
    pub blank: char,
    pub start: usize,
    pub accept: usize,
    pub delta: Vec<TmTransition>,
}

/// A nondeterministic Turing machine with one tape that is infinite to the
/// right. Moving left from the first cell blocks the branch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TmJson", into = "TmJson")]
pub struct TmSpec {
    pub(crate) states: usize,
    pub(crate) input: Vec<char>,
    pub(crate) tape: Vec<char>,
    pub(crate) blank: char,
    pub(crate) start: usize,
    pub(crate) accept: usize,
    pub(crate) delta: Vec<TmTransition>,
}

impl TmSpec {
    pub fn new(
        states: usize,
        input: Vec<char>,
        tape: Vec<char>,
        blank: char,
        start: usize,
        accept: usize,
        delta: Vec<TmTransition>,
    ) -> Result<Self, ProblemError> {
        let invalid = |msg: String| Err(ProblemError::Invalid(msg));
        if states == 0 {
            return invalid("states: a machine needs at least one state".into());
        }
        if start >= states || accept >= states {
            return invalid("start/accept: state out of range".into());
        }
        if has_duplicates(&tape) || has_duplicates(&input) {
            return invalid("tape/input: duplicate symbols".into());
        }
        if !tape.contains(&blank) {
            return invalid(format!("blank: {blank:?} is not a tape symbol"));
        }
        if input.contains(&blank) {
            return invalid("input: the blank is not an input symbol".into());
        }
        if let Some(c) = input.iter().find(|c| !tape.contains(c)) {
            return invalid(format!("input: {c:?} is not a tape symbol"));
        }
        let mut unique = Vec::with_capacity(delta.len());
        for t in delta {
            if t.from >= states || t.to >= states {
                return invalid(format!("delta: state out of range in {t:?}"));
            }
            if !tape.contains(&t.read) || !tape.contains(&t.write) {
                return invalid(format!("delta: unknown tape symbol in {t:?}"));
            }
            if t.from == accept {
                return invalid("delta: the accepting state has no outgoing transitions".into());
            }
            if !unique.contains(&t) {
                unique.push(t);
            }
        }
        Ok(TmSpec {
            states,
            input,
            tape,
            blank,
            start,
            accept,
            delta: unique,
        })
    }

    pub fn from_json_str(text: &str) -> Result<Self, ProblemError> {
        serde_json::from_str(text).map_err(|e| ProblemError::Invalid(e.to_string()))
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn input_alphabet(&self) -> &[char] {
        &self.input
    }

    pub fn tape_alphabet(&self) -> &[char] {
        &self.tape
    }

    pub fn blank(&self) -> char {
        self.blank
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn accept(&self) -> usize {
        self.accept
    }

    pub fn transitions(&self) -> &[TmTransition] {
        &self.delta
    }

    fn symbol_index(&self, c: char) -> usize {
        self.tape.iter().position(|&t| t == c).expect("validated tape symbol")
    }
}

fn has_duplicates(symbols: &[char]) -> bool {
    symbols.iter().enumerate().any(|(i, c)| symbols[..i].contains(c))
}

impl TryFrom<TmJson> for TmSpec {
    type Error = ProblemError;

    fn try_from(j: TmJson) -> Result<Self, ProblemError> {
        TmSpec::new(j.states, j.input, j.tape, j.blank, j.start, j.accept, j.delta)
    }
}

impl From<TmSpec> for TmJson {
    fn from(tm: TmSpec) -> Self {
        TmJson {
            states: tm.states,
            input: tm.input,
            tape: tm.tape,
            blank: tm.blank,
            start: tm.start,
            accept: tm.accept,
            delta: tm.delta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MachineMode {
    /// At most `⌊log₂ n⌋` tape cells.
    Nl,
    /// At most `n` steps.
    Np,
    /// At most `n` tape cells.
    Pspace,
}

impl MachineMode {
    pub fn limits(self, n: usize) -> RunLimits {
        match self {
            MachineMode::Np => RunLimits {
                max_steps: Some(n),
                max_cells: None,
                configuration_cap: DEFAULT_CONFIGURATION_CAP,
            },
            MachineMode::Pspace => RunLimits {
                max_steps: None,
                max_cells: Some(n),
                configuration_cap: DEFAULT_CONFIGURATION_CAP,
            },
            MachineMode::Nl => RunLimits {
                max_steps: None,
                max_cells: Some(if n == 0 { 0 } else { n.ilog2() as usize }),
                configuration_cap: DEFAULT_CONFIGURATION_CAP,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunLimits {
    pub max_steps: Option<usize>,
    /// The head may only visit cells `0..max_cells`.
    pub max_cells: Option<usize>,
    /// Distinct configurations explored before giving up with an error.
    pub configuration_cap: usize,
}

impl RunLimits {
    pub fn unbounded() -> Self {
        RunLimits {
            max_steps: None,
            max_cells: None,
            configuration_cap: DEFAULT_CONFIGURATION_CAP,
        }
    }
}

/// Length and space of an accepting run: `steps` transitions, `space`
/// distinct cells visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunStats {
    pub steps: usize,
    pub space: usize,
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Config {
    state: usize,
    head: usize,
    /// Trailing blanks trimmed.
    tape: Vec<usize>,
    /// Cells visited so far.
    extent: usize,
}

/// Breadth-first search for a run from the initial configuration on `input`
/// to a configuration satisfying `goal(state, head, tape)`; `tape` is the
/// content with trailing blanks trimmed. Returns the shortest such run.
pub fn simulate(
    tm: &TmSpec,
    input: &str,
    limits: RunLimits,
    goal: impl Fn(usize, usize, &[char]) -> bool,
) -> Result<Option<RunStats>, ProblemError> {
    if let Some(c) = input.chars().find(|c| !tm.input.contains(c)) {
        return Err(ProblemError::Invalid(format!(
            "input symbol {c:?} is not in the machine's input alphabet"
        )));
    }
    if limits.max_cells == Some(0) {
        return Ok(None);
    }
    let blank = tm.symbol_index(tm.blank);
    let moves: Vec<Vec<(usize, usize, Move)>> = {
        let mut table = vec![Vec::new(); tm.states * tm.tape.len()];
        for t in &tm.delta {
            table[t.from * tm.tape.len() + tm.symbol_index(t.read)].push((
                t.to,
                tm.symbol_index(t.write),
                t.dir,
            ));
        }
        table
    };
    let is_goal = |c: &Config| {
        let tape: Vec<char> = c.tape.iter().map(|&s| tm.tape[s]).collect();
        goal(c.state, c.head, &tape)
    };

    let start = Config {
        state: tm.start,
        head: 0,
        tape: input.chars().map(|c| tm.symbol_index(c)).collect(),
        extent: 1,
    };
    let mut seen = HashSet::from([start.clone()]);
    let mut frontier = VecDeque::from([(start, 0usize)]);
    while let Some((config, steps)) = frontier.pop_front() {
        if is_goal(&config) {
            return Ok(Some(RunStats {
                steps,
                space: config.extent,
            }));
        }
        if limits.max_steps.is_some_and(|max| steps >= max) {
            continue;
        }
        let read = config.tape.get(config.head).copied().unwrap_or(blank);
        for &(to, write, dir) in &moves[config.state * tm.tape.len() + read] {
            let head = match dir {
                Move::L => match config.head.checked_sub(1) {
                    Some(h) => h,
                    None => continue,
                },
                Move::R => config.head + 1,
                Move::S => config.head,
            };
            if limits.max_cells.is_some_and(|max| head >= max) {
                continue;
            }
            let mut tape = config.tape.clone();
            if config.head >= tape.len() {
                tape.resize(config.head + 1, blank);
            }
            tape[config.head] = write;
            while tape.last() == Some(&blank) {
                tape.pop();
            }
            let next = Config {
                state: to,
                head,
                tape,
                extent: config.extent.max(head + 1),
            };
            if seen.insert(next.clone()) {
                if seen.len() > limits.configuration_cap {
                    return Err(ProblemError::ResourceLimit(format!(
                        "more than {} machine configurations",
                        limits.configuration_cap
                    )));
                }
                frontier.push_back((next, steps + 1));
            }
        }
    }
    Ok(None)
}

/// Shortest run reaching the accepting state.
pub fn run_stats(tm: &TmSpec, input: &str, limits: RunLimits) -> Result<Option<RunStats>, ProblemError> {
    let accept = tm.accept;
    simulate(tm, input, limits, |state, _, _| state == accept)
}

/// A parsed `⟨M⟩$x$a^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MachineWord {
    pub machine: TmSpec,
    pub input: String,
    pub pad: usize,
}

impl MachineWord {
    pub fn accepts(&self, mode: MachineMode) -> Result<bool, ProblemError> {
        Ok(run_stats(&self.machine, &self.input, mode.limits(self.pad))?.is_some())
    }
}

/// `None` unless the word has exactly three `$`-separated parts: a valid
/// machine encoding, an input over its input alphabet, and a block of `a`s.
pub fn parse_machine_word(word: &str) -> Option<MachineWord> {
    let parts: Vec<&str> = word.split(WORD_SEPARATOR).collect();
    let [bits, input, unary] = parts.as_slice() else {
        return None;
    };
    if !unary.chars().all(|c| c == UNARY_LETTER) {
        return None;
    }
    let machine = decode_tm(bits).ok()?;
    if !input.chars().all(|c| machine.input.contains(&c)) {
        return None;
    }
    Some(MachineWord {
        machine,
        input: input.to_string(),
        pad: unary.len(),
    })
}

/// Malformed words are non-members; exceeding the configuration cap is an
/// error.
pub fn member_machine_language(word: &str, mode: MachineMode) -> Result<bool, ProblemError> {
    match parse_machine_word(word) {
        Some(parsed) => parsed.accepts(mode),
        None => Ok(false),
    }
}
