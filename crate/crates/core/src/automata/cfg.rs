use super::{Alphabet, AutomataError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CfgSymbol {
    Terminal(char),
    NonTerminal(usize),
}

/// Context-free grammar with nonterminals `0..nonterminals`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cfg {
    nonterminals: usize,
    terminals: Alphabet,
    productions: Vec<(usize, Vec<CfgSymbol>)>,
    start: usize,
}

impl Cfg {
    pub fn new(nonterminals: usize, terminals: Alphabet, start: usize) -> Result<Self> {
        if start >= nonterminals {
            return Err(AutomataError::Invalid(format!(
                "start symbol {start} is not a nonterminal"
            )));
        }
        Ok(Cfg {
            nonterminals,
            terminals,
            productions: Vec::new(),
            start,
        })
    }

    pub fn add_production(&mut self, head: usize, body: Vec<CfgSymbol>) -> Result<()> {
        if head >= self.nonterminals {
            return Err(AutomataError::Invalid(format!("production head {head} out of range")));
        }
        for symbol in &body {
            match *symbol {
                CfgSymbol::NonTerminal(n) if n >= self.nonterminals => {
                    return Err(AutomataError::Invalid(format!("nonterminal {n} out of range")))
                }
                CfgSymbol::Terminal(c) if !self.terminals.contains(c) => {
                    return Err(AutomataError::SymbolNotInAlphabet(c))
                }
                _ => {}
            }
        }
        self.productions.push((head, body));
        Ok(())
    }

    pub fn nonterminal_count(&self) -> usize {
        self.nonterminals
    }

    pub fn terminals(&self) -> &Alphabet {
        &self.terminals
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn productions(&self) -> &[(usize, Vec<CfgSymbol>)] {
        &self.productions
    }

    /// Nonterminals that derive some terminal string, by the usual fixpoint:
    /// a production whose body consists of terminals and generating
    /// nonterminals makes its head generating.
    pub fn generating(&self) -> Vec<bool> {
        let mut generating = vec![false; self.nonterminals];
        // number of body occurrences not yet known to be generating
        let mut pending: Vec<usize> = Vec::with_capacity(self.productions.len());
        let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); self.nonterminals];
        let mut worklist = Vec::new();
        for (i, (head, body)) in self.productions.iter().enumerate() {
            let mut count = 0;
            for symbol in body {
                if let CfgSymbol::NonTerminal(n) = *symbol {
                    occurrences[n].push(i);
                    count += 1;
                }
            }
            pending.push(count);
            if count == 0 && !generating[*head] {
                generating[*head] = true;
                worklist.push(*head);
            }
        }
        while let Some(n) = worklist.pop() {
            for &i in &occurrences[n] {
                pending[i] -= 1;
                let head = self.productions[i].0;
                if pending[i] == 0 && !generating[head] {
                    generating[head] = true;
                    worklist.push(head);
                }
            }
        }
        generating
    }

    pub fn is_empty(&self) -> bool {
        !self.generating()[self.start]
    }
}
