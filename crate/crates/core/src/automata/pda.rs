use super::{Alphabet, AutomataError, Cfg, CfgSymbol, Dfa, Result};

/// Stack symbol every run starts with.
pub const BOTTOM: usize = 0;

/// `from --input, pop top--> to`, pushing `push` (first element ends up on
/// top).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PdaTransition {
    pub from: usize,
    pub input: Option<usize>,
    pub top: usize,
    pub to: usize,
    pub push: Vec<usize>,
}

/// Pushdown automaton accepting by final state with the stack reduced to the
/// bottom marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pda {
    alphabet: Alphabet,
    states: usize,
    stack_symbols: usize,
    transitions: Vec<PdaTransition>,
    start: usize,
    finals: Vec<bool>,
}

impl Pda {
    pub fn new(alphabet: Alphabet, states: usize, stack_symbols: usize, start: usize) -> Result<Self> {
        if states == 0 || start >= states {
            return Err(AutomataError::Invalid("PDA start state out of range".into()));
        }
        if stack_symbols == 0 {
            return Err(AutomataError::Invalid("PDA needs the bottom marker".into()));
        }
        Ok(Pda {
            alphabet,
            states,
            stack_symbols,
            transitions: Vec::new(),
            start,
            finals: vec![false; states],
        })
    }

    pub fn add_transition(
        &mut self,
        from: usize,
        input: Option<char>,
        top: usize,
        to: usize,
        push: &[usize],
    ) -> Result<()> {
        let input = match input {
            Some(c) => Some(
                self.alphabet
                    .index_of(c)
                    .ok_or(AutomataError::SymbolNotInAlphabet(c))?,
            ),
            None => None,
        };
        self.push_transition(PdaTransition {
            from,
            input,
            top,
            to,
            push: push.to_vec(),
        })
    }

    fn push_transition(&mut self, t: PdaTransition) -> Result<()> {
        if t.from >= self.states || t.to >= self.states {
            return Err(AutomataError::Invalid("PDA transition state out of range".into()));
        }
        if t.top >= self.stack_symbols || t.push.iter().any(|&s| s >= self.stack_symbols) {
            return Err(AutomataError::Invalid("PDA stack symbol out of range".into()));
        }
        if !self.transitions.contains(&t) {
            self.transitions.push(t);
        }
        Ok(())
    }

    pub fn set_final(&mut self, state: usize, is_final: bool) {
        self.finals[state] = is_final;
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn stack_symbol_count(&self) -> usize {
        self.stack_symbols
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn transitions(&self) -> &[PdaTransition] {
        &self.transitions
    }

    /// Triple construction.
    ///
    /// A fresh state `end` is entered from every final state by popping the
    /// bottom marker, so acceptance becomes "reach `end` with an empty stack".
    /// Nonterminal `[p, X, q]` derives exactly the inputs that take the
    /// automaton from `p` with `X` on top to `q` with `X` popped. Nonterminal 0
    /// is the start symbol, standing for `[start, BOTTOM, end]`.
    pub fn to_cfg(&self) -> Cfg {
        let q = self.states + 1;
        let end = self.states;
        let g = self.stack_symbols;
        let triple = |p: usize, x: usize, r: usize| 1 + (p * g + x) * q + r;

        let mut transitions = self.transitions.clone();
        for f in (0..self.states).filter(|&f| self.finals[f]) {
            transitions.push(PdaTransition {
                from: f,
                input: None,
                top: BOTTOM,
                to: end,
                push: Vec::new(),
            });
        }

        let mut cfg = Cfg::new(1 + q * g * q, self.alphabet.clone(), 0).expect("start in range");
        cfg.add_production(0, vec![CfgSymbol::NonTerminal(triple(self.start, BOTTOM, end))])
            .expect("valid production");
        for t in &transitions {
            let lead: Vec<CfgSymbol> = t
                .input
                .map(|s| CfgSymbol::Terminal(self.alphabet.symbol(s)))
                .into_iter()
                .collect();
            if t.push.is_empty() {
                cfg.add_production(triple(t.from, t.top, t.to), lead)
                    .expect("valid production");
                continue;
            }
            // choose the intermediate states r_1..r_{k-1} and the final state
            let k = t.push.len();
            let mut choice = vec![0usize; k];
            loop {
                let mut body = lead.clone();
                let mut current = t.to;
                for (i, &symbol) in t.push.iter().enumerate() {
                    body.push(CfgSymbol::NonTerminal(triple(current, symbol, choice[i])));
                    current = choice[i];
                }
                cfg.add_production(triple(t.from, t.top, current), body)
                    .expect("valid production");
                let mut i = 0;
                while i < k {
                    choice[i] += 1;
                    if choice[i] < q {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
        cfg
    }

    pub fn is_empty(&self) -> bool {
        self.to_cfg().is_empty()
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        let single = Dfa::single_word(self.alphabet.clone(), word)?;
        Ok(!pda_intersect_dfa(self, &single)?.is_empty())
    }
}

/// Product of a PDA with a DFA over the same alphabet. Product state
/// `(p, d)` is numbered `p * |D| + d`; silent PDA moves keep `d` fixed.
pub fn pda_intersect_dfa(pda: &Pda, dfa: &Dfa) -> Result<Pda> {
    if pda.alphabet() != dfa.alphabet() {
        return Err(AutomataError::AlphabetMismatch {
            left: pda.alphabet().clone(),
            right: dfa.alphabet().clone(),
        });
    }
    let m = dfa.state_count();
    let id = |p: usize, d: usize| p * m + d;
    let mut out = Pda::new(
        pda.alphabet.clone(),
        pda.states * m,
        pda.stack_symbols,
        id(pda.start, dfa.start()),
    )?;
    for t in &pda.transitions {
        for d in 0..m {
            let next = match t.input {
                Some(s) => dfa.step(d, s),
                None => d,
            };
            out.push_transition(PdaTransition {
                from: id(t.from, d),
                input: t.input,
                top: t.top,
                to: id(t.to, next),
                push: t.push.clone(),
            })?;
        }
    }
    for p in 0..pda.states {
        for d in 0..m {
            out.finals[id(p, d)] = pda.finals[p] && dfa.is_final(d);
        }
    }
    Ok(out)
}

pub fn pda_is_empty(pda: &Pda) -> bool {
    pda.is_empty()
}
