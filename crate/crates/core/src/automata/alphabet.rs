use std::fmt;

use serde::{Deserialize, Serialize};

/// A finite, totally ordered set of single-character symbols.
///
/// Symbols are kept sorted by code point; that order is the canonical letter
/// order used by shortlex enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<char>", into = "Vec<char>")]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Self {
        let mut symbols: Vec<char> = symbols.into_iter().collect();
        symbols.sort_unstable();
        symbols.dedup();
        Alphabet { symbols }
    }

    pub fn from_str_chars(s: &str) -> Self {
        Self::new(s.chars())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn contains(&self, c: char) -> bool {
        self.index_of(c).is_some()
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.symbols.binary_search(&c).ok()
    }

    pub fn symbol(&self, index: usize) -> char {
        self.symbols[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = char> + '_ {
        self.symbols.iter().copied()
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet::new(self.iter().chain(other.iter()))
    }

    pub fn without<I: IntoIterator<Item = char>>(&self, removed: I) -> Alphabet {
        let removed: Vec<char> = removed.into_iter().collect();
        Alphabet::new(self.iter().filter(|c| !removed.contains(c)))
    }

    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.iter().all(|c| other.contains(c))
    }
}

impl From<Vec<char>> for Alphabet {
    fn from(symbols: Vec<char>) -> Self {
        Alphabet::new(symbols)
    }
}

impl From<Alphabet> for Vec<char> {
    fn from(alphabet: Alphabet) -> Self {
        alphabet.symbols
    }
}

impl FromIterator<char> for Alphabet {
    fn from_iter<T: IntoIterator<Item = char>>(iter: T) -> Self {
        Alphabet::new(iter)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_deduplicated() {
        let a = Alphabet::from_str_chars("ba$_ab");
        assert_eq!(a.symbols(), &['$', '_', 'a', 'b']);
        assert_eq!(a.index_of('a'), Some(2));
        assert_eq!(a.index_of('z'), None);
    }

    #[test]
    fn set_operations() {
        let a = Alphabet::from_str_chars("ab_");
        assert_eq!(a.without(['_']), Alphabet::from_str_chars("ab"));
        assert!(Alphabet::from_str_chars("a").is_subset_of(&a));
        assert_eq!(a.union(&Alphabet::from_str_chars("$")).len(), 4);
    }
}
