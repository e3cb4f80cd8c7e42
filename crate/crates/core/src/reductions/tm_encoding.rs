//! Bit-string encoding `⟨M⟩` of Turing machines.
//!
//! A machine with `|Q|` states and `|Γ|` tape symbols is written as the
//! header `0^|Q| 1 0^|Γ| 11` followed by its transitions separated by `11`.
//! A transition `(q_i, a_j) -> (q_k, a_l, d_m)` is `0^i 1 0^j 1 0^k 1 0^l 1 0^m`
//! with `L = 1`, `R = 2`, `S = 3`.
//!
//! Numbering is canonical: `q_1` is the start state and `q_2` the accepting
//! state, `a_1` is the blank, and the other tape symbols follow in character
//! order. Since only the sizes survive, decoding names the symbols with
//! [`CANONICAL_SYMBOLS`] and treats every non-blank symbol as an input
//! symbol.

use std::fmt;

use thiserror::Error;

use super::ReductionError;
use crate::problems::{Move, TmSpec, TmTransition};

/// Names of `a_1, a_2, ...` in decoded machines; `a_1` is the blank. The
/// letter `a` is skipped because it spells the unary bound of machine words.
pub const CANONICAL_SYMBOLS: &str = "_0123456789bcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct TmDecodeError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for TmDecodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed machine encoding at bit {}: {}", self.position, self.message)
    }
}

fn direction_code(dir: Move) -> usize {
    match dir {
        Move::L => 1,
        Move::R => 2,
        Move::S => 3,
    }
}

/// Transitions as 1-based index tuples `(i, j, k, l, m)`, sorted.
fn numbered(tm: &TmSpec) -> Result<(usize, usize, Vec<[usize; 5]>), ReductionError> {
    let mut non_blank: Vec<char> = tm.tape.iter().copied().filter(|&c| c != tm.blank).collect();
    non_blank.sort_unstable();
    let mut input = tm.input.clone();
    input.sort_unstable();
    if input != non_blank {
        return Err(ReductionError::Invalid(
            "the encoding needs every non-blank tape symbol to be an input symbol".into(),
        ));
    }
    if tm.tape.len() > CANONICAL_SYMBOLS.len() {
        return Err(ReductionError::Invalid(format!(
            "at most {} tape symbols can be encoded",
            CANONICAL_SYMBOLS.len()
        )));
    }
    if tm.start == tm.accept {
        return Ok((1, tm.tape.len(), Vec::new()));
    }
    let symbol = |c: char| {
        if c == tm.blank {
            1
        } else {
            2 + non_blank.iter().position(|&x| x == c).expect("tape symbol")
        }
    };
    let state = |q: usize| {
        if q == tm.start {
            1
        } else if q == tm.accept {
            2
        } else {
            // remaining states keep their relative order after q_1, q_2
            3 + (0..q).filter(|&p| p != tm.start && p != tm.accept).count()
        }
    };
    let mut rows: Vec<[usize; 5]> = tm
        .delta
        .iter()
        .map(|t| {
            [
                state(t.from),
                symbol(t.read),
                state(t.to),
                symbol(t.write),
                direction_code(t.dir),
            ]
        })
        .collect();
    rows.sort_unstable();
    rows.dedup();
    Ok((tm.states, tm.tape.len(), rows))
}

fn build(states: usize, symbols: usize, rows: &[[usize; 5]]) -> Result<TmSpec, crate::problems::ProblemError> {
    let names: Vec<char> = CANONICAL_SYMBOLS.chars().take(symbols).collect();
    let delta = rows
        .iter()
        .map(|&[i, j, k, l, m]| TmTransition {
            from: i - 1,
            read: names[j - 1],
            to: k - 1,
            write: names[l - 1],
            dir: match m {
                1 => Move::L,
                2 => Move::R,
                _ => Move::S,
            },
        })
        .collect();
    let accept = if states >= 2 { 1 } else { 0 };
    TmSpec::new(states, names[1..].to_vec(), names.clone(), names[0], 0, accept, delta)
}

impl TmSpec {
    /// The machine that [`decode_tm`] returns for this machine's encoding.
    pub fn canonical(&self) -> Result<TmSpec, ReductionError> {
        let (states, symbols, rows) = numbered(self)?;
        Ok(build(states, symbols, &rows)?)
    }
}

pub fn encode_tm(tm: &TmSpec) -> Result<String, ReductionError> {
    let (states, symbols, rows) = numbered(tm)?;
    let zeros = |n: usize| "0".repeat(n);
    let mut out = format!("{}1{}11", zeros(states), zeros(symbols));
    let body: Vec<String> = rows
        .iter()
        .map(|r| r.map(zeros).join("1"))
        .collect();
    out.push_str(&body.join("11"));
    Ok(out)
}

struct Reader<'a> {
    bits: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn error(&self, message: impl Into<String>) -> TmDecodeError {
        TmDecodeError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn zeros(&mut self) -> Result<usize, TmDecodeError> {
        let start = self.pos;
        while self.bits.get(self.pos) == Some(&b'0') {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a block of 0s"));
        }
        Ok(self.pos - start)
    }

    fn one(&mut self) -> Result<(), TmDecodeError> {
        if self.bits.get(self.pos) == Some(&b'1') {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error("expected 1"))
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.bits.len()
    }
}

/// Parses a bit string produced by [`encode_tm`]. The result is canonical:
/// transitions are sorted and deduplicated.
pub fn decode_tm(bits: &str) -> Result<TmSpec, TmDecodeError> {
    if let Some(i) = bits.bytes().position(|b| b != b'0' && b != b'1') {
        return Err(TmDecodeError {
            position: i,
            message: "only 0 and 1 may occur".into(),
        });
    }
    let mut r = Reader {
        bits: bits.as_bytes(),
        pos: 0,
    };
    let states = r.zeros()?;
    r.one()?;
    let symbol_pos = r.pos;
    let symbols = r.zeros()?;
    if symbols > CANONICAL_SYMBOLS.len() {
        return Err(TmDecodeError {
            position: symbol_pos,
            message: format!("at most {} tape symbols are supported", CANONICAL_SYMBOLS.len()),
        });
    }
    r.one()?;
    r.one()?;
    let mut rows = Vec::new();
    while !r.at_end() {
        if !rows.is_empty() {
            r.one()?;
            r.one()?;
        }
        let start = r.pos;
        let mut row = [0usize; 5];
        for (field, slot) in row.iter_mut().enumerate() {
            if field > 0 {
                r.one()?;
            }
            *slot = r.zeros()?;
        }
        let [i, j, k, l, m] = row;
        let problem = if i > states || k > states {
            Some("state index out of range")
        } else if j > symbols || l > symbols {
            Some("symbol index out of range")
        } else if m > 3 {
            Some("direction must be 1, 2 or 3")
        } else {
            None
        };
        if let Some(message) = problem {
            return Err(TmDecodeError {
                position: start,
                message: message.into(),
            });
        }
        rows.push(row);
    }
    rows.sort_unstable();
    rows.dedup();
    build(states, symbols, &rows).map_err(|e| TmDecodeError {
        position: bits.len(),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn t(from: usize, read: char, to: usize, write: char, dir: Move) -> TmTransition {
        TmTransition {
            from,
            read,
            to,
            write,
            dir,
        }
    }

    #[test]
    fn single_transition_body() {
        let tm = TmSpec::new(2, vec![], vec!['_'], '_', 0, 1, vec![t(0, '_', 0, '_', Move::R)]).unwrap();
        let bits = encode_tm(&tm).unwrap();
        assert_eq!(bits, "0010110101010100");
        assert!(bits.ends_with("0101010100"));
        assert_eq!(decode_tm(&bits).unwrap(), tm);
    }

    #[test]
    fn malformed_encodings() {
        assert!(decode_tm("111").is_err());
        assert_eq!(decode_tm("111").unwrap_err().position, 0);
        assert!(decode_tm("").is_err());
        assert!(decode_tm("0101").is_err());
        assert!(decode_tm("010110").is_err());
        assert_eq!(decode_tm("0101x").unwrap_err().position, 4);
        // state index 2 in a one-state machine
        assert!(decode_tm("0101100101010100").is_err());
        // direction 4
        assert!(decode_tm("001011010101010000").is_err());
        // trailing separator
        assert!(decode_tm("0010110101010100011").is_err());
        // transition leaving the accepting state q_2
        assert!(decode_tm("00101100101010100").is_err());
    }

    #[test]
    fn header_only() {
        let tm = decode_tm("001011").unwrap();
        assert_eq!(tm.state_count(), 2);
        assert_eq!(tm.tape_alphabet(), &['_']);
        assert!(tm.transitions().is_empty());
    }

    #[test]
    fn renumbering() {
        // start = 2, accept = 0, symbols listed out of order
        let tm = TmSpec::new(
            3,
            vec!['y', 'x'],
            vec!['y', '#', 'x'],
            '#',
            2,
            0,
            vec![t(2, 'x', 1, 'y', Move::R), t(1, '#', 0, '#', Move::L)],
        )
        .unwrap();
        let canonical = tm.canonical().unwrap();
        assert_eq!(canonical.start(), 0);
        assert_eq!(canonical.accept(), 1);
        assert_eq!(canonical.tape_alphabet(), &['_', '0', '1']);
        assert_eq!(
            canonical.transitions(),
            &[t(0, '0', 2, '1', Move::R), t(2, '_', 1, '_', Move::L)]
        );
        assert_eq!(decode_tm(&encode_tm(&tm).unwrap()).unwrap(), canonical);
    }

    #[test]
    fn start_equal_to_accept_collapses() {
        let tm = TmSpec::new(2, vec!['0'], vec!['_', '0'], '_', 1, 1, vec![t(0, '0', 1, '0', Move::S)]).unwrap();
        assert_eq!(encode_tm(&tm).unwrap(), "010011");
    }

    #[test]
    fn input_alphabet_must_cover_the_tape() {
        let tm = TmSpec::new(2, vec![], vec!['_', '0'], '_', 0, 1, vec![]).unwrap();
        assert!(encode_tm(&tm).is_err());
    }

    #[test]
    fn random_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let states = rng.gen_range(2..6);
            let symbols = rng.gen_range(1..5);
            let names: Vec<char> = CANONICAL_SYMBOLS.chars().take(symbols).collect();
            let moves = [Move::L, Move::R, Move::S];
            let delta: Vec<TmTransition> = (0..rng.gen_range(0..8))
                .map(|_| {
                    let from = [0, 2, 3, 4, 5][rng.gen_range(0..states - 1)];
                    t(
                        from,
                        names[rng.gen_range(0..symbols)],
                        rng.gen_range(0..states),
                        names[rng.gen_range(0..symbols)],
                        moves[rng.gen_range(0..3)],
                    )
                })
                .collect();
            let tm = TmSpec::new(states, names[1..].to_vec(), names.clone(), '_', 0, 1, delta)
                .unwrap()
                .canonical()
                .unwrap();
            let bits = encode_tm(&tm).unwrap();
            assert_eq!(decode_tm(&bits).unwrap(), tm, "{bits}");
            assert_eq!(encode_tm(&decode_tm(&bits).unwrap()).unwrap(), bits);
        }
    }
}
