//! Post correspondence instances and the bounded variant.

use serde::{Deserialize, Serialize};

use super::ProblemError;
use crate::automata::Alphabet;

/// Separators of the bounded-PCP word encoding.
pub const ITEM_SEPARATOR: char = '#';
pub const LIST_SEPARATOR: char = '$';

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcpInstance {
    alphabet: Alphabet,
    a: Vec<String>,
    b: Vec<String>,
}

impl PcpInstance {
    pub fn new(alphabet: Alphabet, a: Vec<String>, b: Vec<String>) -> Result<Self, ProblemError> {
        if a.is_empty() || a.len() != b.len() {
            return Err(ProblemError::Invalid(format!(
                "lists must be nonempty and of equal length (got {} and {})",
                a.len(),
                b.len()
            )));
        }
        for s in a.iter().chain(&b) {
            if s.is_empty() {
                return Err(ProblemError::Invalid("list entries must be nonempty".into()));
            }
            if let Some(c) = s.chars().find(|&c| !alphabet.contains(c)) {
                return Err(ProblemError::Invalid(format!(
                    "entry {s:?} uses {c:?}, which is not in the alphabet"
                )));
            }
        }
        Ok(PcpInstance { alphabet, a, b })
    }

    /// Instance whose alphabet is the set of letters used by the lists.
    pub fn from_lists<S: AsRef<str>>(a: &[S], b: &[S]) -> Result<Self, ProblemError> {
        let a: Vec<String> = a.iter().map(|s| s.as_ref().to_string()).collect();
        let b: Vec<String> = b.iter().map(|s| s.as_ref().to_string()).collect();
        let alphabet = a.iter().chain(&b).flat_map(|s| s.chars()).collect();
        PcpInstance::new(alphabet, a, b)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn a(&self) -> &[String] {
        &self.a
    }

    pub fn b(&self) -> &[String] {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// Concatenations of both lists along 1-based `indices`; `None` if an
    /// index is out of range.
    pub fn concatenations(&self, indices: &[usize]) -> Option<(String, String)> {
        let mut top = String::new();
        let mut bottom = String::new();
        for &i in indices {
            if i == 0 || i > self.len() {
                return None;
            }
            top.push_str(&self.a[i - 1]);
            bottom.push_str(&self.b[i - 1]);
        }
        Some((top, bottom))
    }

    pub fn is_solution(&self, indices: &[usize]) -> bool {
        !indices.is_empty()
            && self
                .concatenations(indices)
                .is_some_and(|(top, bottom)| top == bottom)
    }

    /// `a_1#...#a_n$b_1#...#b_n$bin(K)`.
    pub fn encode_bpcp(&self, bound: usize) -> Result<String, ProblemError> {
        if bound == 0 {
            return Err(ProblemError::Invalid("the bound K must be positive".into()));
        }
        if self
            .alphabet
            .iter()
            .any(|c| c == ITEM_SEPARATOR || c == LIST_SEPARATOR)
        {
            return Err(ProblemError::Invalid(
                "'#' and '$' are reserved by the bounded-PCP encoding".into(),
            ));
        }
        let sep = ITEM_SEPARATOR.to_string();
        Ok(format!(
            "{}{LIST_SEPARATOR}{}{LIST_SEPARATOR}{bound:b}",
            self.a.join(&sep),
            self.b.join(&sep)
        ))
    }

    pub fn to_json(&self) -> PcpJson {
        PcpJson {
            alphabet: self.alphabet.iter().map(String::from).collect(),
            a: self.a.clone(),
            b: self.b.clone(),
            k: None,
        }
    }
}

/// `{"alphabet":[...],"a":[...],"b":[...]}`, optionally with the bound `"k"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PcpJson {
    pub alphabet: Vec<String>,
    pub a: Vec<String>,
    pub b: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl PcpJson {
    pub fn into_instance(self) -> Result<PcpInstance, ProblemError> {
        let mut symbols = Vec::new();
        for s in &self.alphabet {
            let mut chars = s.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => symbols.push(c),
                _ => {
                    return Err(ProblemError::Invalid(format!(
                        "alphabet: expected single-character strings, got {s:?}"
                    )))
                }
            }
        }
        PcpInstance::new(Alphabet::new(symbols), self.a, self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BpcpSolution {
    /// 1-based indices into the lists.
    pub indices: Vec<usize>,
    pub bound: usize,
}

/// Shortest solution with at most `bound` indices, lexicographically least
/// among the shortest.
///
/// Runs a depth-first search per target length. Along every branch one of
/// the two concatenations must stay a prefix of the other; only the unmatched
/// overhang is carried.
pub fn check_bpcp(instance: &PcpInstance, bound: usize) -> Option<BpcpSolution> {
    let mut path = Vec::new();
    for length in 1..=bound {
        if extend(instance, length, Overhang::default(), &mut path) {
            return Some(BpcpSolution {
                indices: path,
                bound,
            });
        }
    }
    None
}

/// Unmatched suffix of whichever concatenation is ahead.
#[derive(Debug, Clone, Default)]
struct Overhang {
    top_ahead: bool,
    rest: String,
}

impl Overhang {
    fn append(&self, a: &str, b: &str) -> Option<Overhang> {
        let (top, bottom) = if self.top_ahead {
            (format!("{}{a}", self.rest), b.to_string())
        } else {
            (a.to_string(), format!("{}{b}", self.rest))
        };
        if let Some(rest) = top.strip_prefix(bottom.as_str()) {
            Some(Overhang {
                top_ahead: true,
                rest: rest.to_string(),
            })
        } else {
            bottom.strip_prefix(top.as_str()).map(|rest| Overhang {
                top_ahead: false,
                rest: rest.to_string(),
            })
        }
    }
}

fn extend(instance: &PcpInstance, remaining: usize, overhang: Overhang, path: &mut Vec<usize>) -> bool {
    if remaining == 0 {
        return overhang.rest.is_empty();
    }
    for i in 0..instance.len() {
        if let Some(next) = overhang.append(&instance.a[i], &instance.b[i]) {
            // a matched prefix shorter than the target length was already
            // rejected by the previous, shorter round
            path.push(i + 1);
            if extend(instance, remaining - 1, next, path) {
                return true;
            }
            path.pop();
        }
    }
    false
}

/// Parses `a_1#...#a_n$b_1#...#b_n$bin(K)`. `None` for anything that is not
/// a well-formed encoding with equal list lengths and `1 <= K <= n`.
pub fn parse_bpcp_word(word: &str) -> Option<(PcpInstance, usize)> {
    let parts: Vec<&str> = word.split(LIST_SEPARATOR).collect();
    let [a, b, k] = parts.as_slice() else {
        return None;
    };
    let a: Vec<&str> = a.split(ITEM_SEPARATOR).collect();
    let b: Vec<&str> = b.split(ITEM_SEPARATOR).collect();
    if !k.starts_with('1') || !k.chars().all(|c| c == '0' || c == '1') {
        return None;
    }
    let bound = usize::from_str_radix(k, 2).ok()?;
    let instance = PcpInstance::from_lists(&a, &b).ok()?;
    (bound <= instance.len()).then_some((instance, bound))
}

pub fn member_bpcp(word: &str) -> bool {
    parse_bpcp_word(word).is_some_and(|(instance, bound)| check_bpcp(&instance, bound).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classic() -> PcpInstance {
        PcpInstance::from_lists(&["1", "10111", "10"], &["111", "10", "0"]).unwrap()
    }

    /// All index sequences of length 1..=bound, by plain enumeration.
    fn brute_force(instance: &PcpInstance, bound: usize) -> Vec<Vec<usize>> {
        let n = instance.len();
        let mut found = Vec::new();
        for length in 1..=bound {
            let total = n.pow(length as u32);
            for code in 0..total {
                let mut c = code;
                let mut seq = vec![0; length];
                for slot in seq.iter_mut().rev() {
                    *slot = c % n + 1;
                    c /= n;
                }
                if instance.is_solution(&seq) {
                    found.push(seq);
                }
            }
        }
        found
    }

    #[test]
    fn trivial_instance() {
        let p = PcpInstance::from_lists(&["a"], &["a"]).unwrap();
        assert_eq!(check_bpcp(&p, 1).unwrap().indices, vec![1]);
        assert_eq!(check_bpcp(&p, 0), None);
    }

    #[test]
    fn classic_instance_pins() {
        let p = classic();
        let solution = check_bpcp(&p, 4).unwrap();
        assert_eq!(solution.indices, vec![2, 1, 1, 3]);
        let (top, bottom) = p.concatenations(&solution.indices).unwrap();
        assert_eq!(top, "101111110");
        assert_eq!(bottom, "101111110");
        assert_eq!(check_bpcp(&p, 3), None);
        assert!(brute_force(&p, 3).is_empty());
        assert_eq!(brute_force(&p, 4), vec![vec![2, 1, 1, 3]]);
    }

    #[test]
    fn agrees_with_brute_force_on_small_instances() {
        let instances = [
            (vec!["a", "ab"], vec!["aa", "b"]),
            (vec!["a", "ba"], vec!["ab", "a"]),
            (vec!["ab", "b", "a"], vec!["a", "bb", "ba"]),
            (vec!["aa", "b"], vec!["a", "ab"]),
            (vec!["ab", "ba"], vec!["ba", "ab"]),
        ];
        for (a, b) in instances {
            let p = PcpInstance::from_lists(&a, &b).unwrap();
            for bound in 1..=5 {
                let brute = brute_force(&p, bound);
                let found = check_bpcp(&p, bound);
                assert_eq!(found.as_ref().map(|s| s.indices.clone()), brute.first().cloned());
            }
        }
    }

    #[test]
    fn encoding_and_membership() {
        let p = classic();
        let word = p.encode_bpcp(3).unwrap();
        assert_eq!(word, "1#10111#10$111#10#0$11");
        assert!(!member_bpcp(&word));
        // K = 4 exceeds the list length 3
        assert!(!member_bpcp("1#10111#10$111#10#0$100"));
        assert!(member_bpcp("1#10111#10#10$111#10#0#0$100"));
        assert!(member_bpcp("a$a$1"));
    }

    #[test]
    fn malformed_words_are_rejected() {
        for word in [
            "a$a$0",
            "a$a$01",
            "a$a$",
            "a$a",
            "a$a$1$1",
            "a#b$a$1",
            "a#$a#a$1",
            "a$a$1x",
        ] {
            assert!(!member_bpcp(word), "{word:?}");
        }
    }

    #[test]
    fn invalid_instances() {
        assert!(PcpInstance::from_lists::<&str>(&[], &[]).is_err());
        assert!(PcpInstance::from_lists(&["a"], &["a", "b"]).is_err());
        assert!(PcpInstance::from_lists(&[""], &["a"]).is_err());
        assert!(PcpInstance::new(Alphabet::from_str_chars("a"), vec!["b".into()], vec!["a".into()]).is_err());
    }
}
