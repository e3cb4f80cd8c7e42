use serde::{Deserialize, Serialize};

use super::{Alphabet, AutomataError, Automaton, Dfa, Nfa, Result};

/// Interchange format shared by the CLI and the reduction generators.
///
/// `"on": null` is a silent move and is only legal for `"kind": "nfa"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonJson {
    pub kind: String,
    pub alphabet: Vec<String>,
    pub states: usize,
    pub start: usize,
    pub finals: Vec<usize>,
    pub transitions: Vec<TransitionJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionJson {
    pub from: usize,
    pub on: Option<String>,
    pub to: usize,
}

fn single_char(field: &str, s: &str) -> Result<char> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(AutomataError::Invalid(format!(
            "{field}: expected a single-character string, got {s:?}"
        ))),
    }
}

impl AutomatonJson {
    pub fn from_nfa(nfa: &Nfa) -> Self {
        let mut transitions = Vec::new();
        for q in 0..nfa.state_count() {
            for &(label, to) in nfa.edges(q) {
                transitions.push(TransitionJson {
                    from: q,
                    on: label.map(|s| nfa.alphabet().symbol(s).to_string()),
                    to,
                });
            }
        }
        AutomatonJson {
            kind: "nfa".into(),
            alphabet: nfa.alphabet().iter().map(String::from).collect(),
            states: nfa.state_count(),
            start: nfa.start(),
            finals: nfa.finals().collect(),
            transitions,
        }
    }

    pub fn from_dfa(dfa: &Dfa) -> Self {
        let mut transitions = Vec::new();
        for q in 0..dfa.state_count() {
            for (s, c) in dfa.alphabet().iter().enumerate() {
                transitions.push(TransitionJson {
                    from: q,
                    on: Some(c.to_string()),
                    to: dfa.step(q, s),
                });
            }
        }
        AutomatonJson {
            kind: "dfa".into(),
            alphabet: dfa.alphabet().iter().map(String::from).collect(),
            states: dfa.state_count(),
            start: dfa.start(),
            finals: dfa.finals().collect(),
            transitions,
        }
    }

    pub fn into_automaton(self) -> Result<Automaton> {
        let symbols = self
            .alphabet
            .iter()
            .map(|s| single_char("alphabet", s))
            .collect::<Result<Vec<char>>>()?;
        let alphabet = Alphabet::new(symbols.iter().copied());
        if alphabet.len() != symbols.len() {
            return Err(AutomataError::Invalid("alphabet: duplicate symbols".into()));
        }
        if self.states == 0 {
            return Err(AutomataError::Invalid("states: must be positive".into()));
        }
        if self.start >= self.states {
            return Err(AutomataError::Invalid(format!(
                "start: state {} out of range",
                self.start
            )));
        }
        if let Some(f) = self.finals.iter().find(|&&f| f >= self.states) {
            return Err(AutomataError::Invalid(format!("finals: state {f} out of range")));
        }
        for t in &self.transitions {
            if t.from >= self.states || t.to >= self.states {
                return Err(AutomataError::Invalid(format!(
                    "transitions: state out of range in {}->{}",
                    t.from, t.to
                )));
            }
        }
        match self.kind.as_str() {
            "nfa" => {
                let mut nfa = Nfa::with_states(alphabet, self.states);
                nfa.set_start(self.start);
                for &f in &self.finals {
                    nfa.set_final(f, true);
                }
                for t in &self.transitions {
                    let label = match &t.on {
                        Some(s) => Some(single_char("transitions.on", s)?),
                        None => None,
                    };
                    nfa.add_transition(t.from, label, t.to)?;
                }
                Ok(Automaton::Nfa(nfa))
            }
            "dfa" => {
                let k = alphabet.len();
                let mut delta: Vec<Option<usize>> = vec![None; self.states * k];
                for t in &self.transitions {
                    let Some(on) = &t.on else {
                        return Err(AutomataError::Invalid(
                            "transitions.on: silent moves are not allowed in a DFA".into(),
                        ));
                    };
                    let c = single_char("transitions.on", on)?;
                    let s = alphabet
                        .index_of(c)
                        .ok_or(AutomataError::SymbolNotInAlphabet(c))?;
                    let slot = &mut delta[t.from * k + s];
                    if slot.is_some() {
                        return Err(AutomataError::Invalid(format!(
                            "transitions: state {} has two moves on {c:?}",
                            t.from
                        )));
                    }
                    *slot = Some(t.to);
                }
                let delta = delta
                    .into_iter()
                    .enumerate()
                    .map(|(i, to)| {
                        to.ok_or_else(|| {
                            AutomataError::Invalid(format!(
                                "transitions: DFA is not total, state {} has no move on {:?}",
                                i / k,
                                alphabet.symbol(i % k)
                            ))
                        })
                    })
                    .collect::<Result<Vec<usize>>>()?;
                let mut finals = vec![false; self.states];
                for &f in &self.finals {
                    finals[f] = true;
                }
                Ok(Automaton::Dfa(Dfa::new(alphabet, self.states, self.start, delta, finals)?))
            }
            other => Err(AutomataError::Invalid(format!(
                "kind: expected \"dfa\" or \"nfa\", got {other:?}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dfa_must_be_total() {
        let text = r#"{"kind":"dfa","alphabet":["a","b"],"states":1,"start":0,"finals":[0],
            "transitions":[{"from":0,"on":"a","to":0}]}"#;
        let err = Automaton::from_json_str(text).unwrap_err();
        assert!(err.to_string().contains("not total"), "{err}");
    }

    #[test]
    fn dfa_rejects_silent_moves() {
        let text = r#"{"kind":"dfa","alphabet":["a"],"states":1,"start":0,"finals":[],
            "transitions":[{"from":0,"on":null,"to":0},{"from":0,"on":"a","to":0}]}"#;
        assert!(Automaton::from_json_str(text).is_err());
    }

    #[test]
    fn nfa_round_trip() {
        let text = r#"{"kind":"nfa","alphabet":["a","b"],"states":3,"start":0,"finals":[2],
            "transitions":[{"from":0,"on":null,"to":1},{"from":1,"on":"b","to":2}]}"#;
        let a = Automaton::from_json_str(text).unwrap();
        assert!(a.accepts("b").unwrap());
        let again = a.to_json().into_automaton().unwrap();
        assert_eq!(a, again);
    }

    #[test]
    fn dfa_round_trip() {
        let d = Dfa::single_word(Alphabet::from_str_chars("ab"), "ab").unwrap();
        let json = serde_json::to_string(&AutomatonJson::from_dfa(&d)).unwrap();
        assert_eq!(Automaton::from_json_str(&json).unwrap(), Automaton::Dfa(d));
    }

    #[test]
    fn multi_character_symbols_are_rejected() {
        let text = r#"{"kind":"nfa","alphabet":["ab"],"states":1,"start":0,"finals":[],"transitions":[]}"#;
        let err = Automaton::from_json_str(text).unwrap_err();
        assert!(err.to_string().contains("alphabet"));
    }
}
