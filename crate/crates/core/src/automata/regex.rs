//! Regular expressions over single-character alphabets.
//!
//! Textual syntax: literals are alphabet symbols, `~` is the empty-set atom,
//! `_` is the empty-word atom, `|` is alternation, `*` is Kleene star and
//! juxtaposition is concatenation. Star binds tighter than concatenation,
//! which binds tighter than alternation. A backslash makes the next character
//! a literal, so `\_` denotes the letter `_` rather than the empty word.

use std::fmt;

use thiserror::Error;

use super::Alphabet;

pub const EMPTY_SET: char = '~';
pub const EPSILON: char = '_';
pub const ESCAPE: char = '\\';
pub const METACHARACTERS: [char; 7] = [EMPTY_SET, EPSILON, '(', ')', '|', '*', ESCAPE];

pub fn is_metacharacter(c: char) -> bool {
    METACHARACTERS.contains(&c)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RegexNode {
    Empty,
    Epsilon,
    Literal(char),
    Concat(Box<RegexNode>, Box<RegexNode>),
    Alternation(Box<RegexNode>, Box<RegexNode>),
    Star(Box<RegexNode>),
}

impl RegexNode {
    pub fn concat(left: RegexNode, right: RegexNode) -> RegexNode {
        RegexNode::Concat(Box::new(left), Box::new(right))
    }

    pub fn alternation(left: RegexNode, right: RegexNode) -> RegexNode {
        RegexNode::Alternation(Box::new(left), Box::new(right))
    }

    pub fn star(inner: RegexNode) -> RegexNode {
        RegexNode::Star(Box::new(inner))
    }

    /// `inner inner*`
    pub fn plus(inner: RegexNode) -> RegexNode {
        RegexNode::concat(inner.clone(), RegexNode::star(inner))
    }

    /// Left-nested concatenation; the empty sequence is the empty word.
    pub fn concat_all<I: IntoIterator<Item = RegexNode>>(parts: I) -> RegexNode {
        parts
            .into_iter()
            .reduce(RegexNode::concat)
            .unwrap_or(RegexNode::Epsilon)
    }

    /// Left-nested alternation; the empty sequence is the empty set.
    pub fn alternation_all<I: IntoIterator<Item = RegexNode>>(parts: I) -> RegexNode {
        parts
            .into_iter()
            .reduce(RegexNode::alternation)
            .unwrap_or(RegexNode::Empty)
    }

    /// Concatenation of the letters of `word`.
    pub fn word(word: &str) -> RegexNode {
        RegexNode::concat_all(word.chars().map(RegexNode::Literal))
    }

    pub fn literals(&self) -> Vec<char> {
        let mut out = Vec::new();
        self.collect_literals(&mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect_literals(&self, out: &mut Vec<char>) {
        match self {
            RegexNode::Empty | RegexNode::Epsilon => {}
            RegexNode::Literal(c) => out.push(*c),
            RegexNode::Concat(l, r) | RegexNode::Alternation(l, r) => {
                l.collect_literals(out);
                r.collect_literals(out);
            }
            RegexNode::Star(inner) => inner.collect_literals(out),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            RegexNode::Alternation(..) => 0,
            RegexNode::Concat(..) => 1,
            RegexNode::Star(..) => 2,
            _ => 3,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, context: u8) -> fmt::Result {
        let wrap = self.precedence() < context;
        if wrap {
            write!(f, "(")?;
        }
        match self {
            RegexNode::Empty => write!(f, "{EMPTY_SET}")?,
            RegexNode::Epsilon => write!(f, "{EPSILON}")?,
            RegexNode::Literal(c) => {
                if is_metacharacter(*c) {
                    write!(f, "{ESCAPE}")?;
                }
                write!(f, "{c}")?;
            }
            RegexNode::Concat(l, r) => {
                l.write_at(f, 1)?;
                r.write_at(f, 1)?;
            }
            RegexNode::Alternation(l, r) => {
                l.write_at(f, 0)?;
                write!(f, "|")?;
                r.write_at(f, 0)?;
            }
            RegexNode::Star(inner) => {
                inner.write_at(f, 3)?;
                write!(f, "*")?;
            }
        }
        if wrap {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for RegexNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

/// A parsed regular expression together with the alphabet it is read over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegexAst {
    pub node: RegexNode,
    pub alphabet: Alphabet,
}

impl RegexAst {
    /// Fails if a literal is outside `alphabet`.
    pub fn new(node: RegexNode, alphabet: Alphabet) -> Result<Self, RegexError> {
        if let Some(c) = node.literals().into_iter().find(|c| !alphabet.contains(*c)) {
            return Err(RegexError {
                position: 0,
                kind: RegexErrorKind::SymbolNotInAlphabet(c),
            });
        }
        Ok(RegexAst { node, alphabet })
    }

    pub fn to_text(&self) -> String {
        self.node.to_string()
    }
}

impl fmt::Display for RegexAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.node.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("regex error at position {position}: {kind}")]
pub struct RegexError {
    pub position: usize,
    pub kind: RegexErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegexErrorKind {
    #[error("unbalanced '('")]
    UnclosedParen,
    #[error("unbalanced ')'")]
    UnmatchedCloseParen,
    #[error("dangling alternation")]
    DanglingAlternation,
    #[error("dangling star")]
    DanglingStar,
    #[error("empty group")]
    EmptyGroup,
    #[error("empty expression")]
    EmptyExpression,
    #[error("dangling escape")]
    DanglingEscape,
    #[error("symbol {0:?} is not in the alphabet")]
    SymbolNotInAlphabet(char),
}

pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<RegexAst, RegexError> {
    let chars: Vec<char> = text.chars().collect();
    let mut parser = Parser {
        chars: &chars,
        pos: 0,
        alphabet,
    };
    if chars.is_empty() {
        return Err(parser.error(RegexErrorKind::EmptyExpression));
    }
    let node = parser.alternation()?;
    if parser.pos < chars.len() {
        // only a stray ')' can stop the top-level alternation early
        return Err(parser.error(RegexErrorKind::UnmatchedCloseParen));
    }
    Ok(RegexAst {
        node,
        alphabet: alphabet.clone(),
    })
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn error(&self, kind: RegexErrorKind) -> RegexError {
        RegexError {
            position: self.pos,
            kind,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn alternation(&mut self) -> Result<RegexNode, RegexError> {
        let mut node = self.concatenation()?;
        while self.peek() == Some('|') {
            let bar = self.pos;
            self.pos += 1;
            if matches!(self.peek(), None | Some('|') | Some(')')) {
                return Err(RegexError {
                    position: bar,
                    kind: RegexErrorKind::DanglingAlternation,
                });
            }
            let right = self.concatenation()?;
            node = RegexNode::alternation(node, right);
        }
        Ok(node)
    }

    fn concatenation(&mut self) -> Result<RegexNode, RegexError> {
        let mut node: Option<RegexNode> = None;
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            let item = self.repetition()?;
            node = Some(match node {
                None => item,
                Some(prev) => RegexNode::concat(prev, item),
            });
        }
        match node {
            Some(node) => Ok(node),
            None => match self.peek() {
                Some('|') => Err(self.error(RegexErrorKind::DanglingAlternation)),
                Some(')') => Err(self.error(RegexErrorKind::EmptyGroup)),
                _ => Err(self.error(RegexErrorKind::EmptyExpression)),
            },
        }
    }

    fn repetition(&mut self) -> Result<RegexNode, RegexError> {
        let mut node = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            node = RegexNode::star(node);
        }
        Ok(node)
    }

    fn atom(&mut self) -> Result<RegexNode, RegexError> {
        let c = self.peek().ok_or_else(|| self.error(RegexErrorKind::EmptyExpression))?;
        match c {
            '*' => Err(self.error(RegexErrorKind::DanglingStar)),
            '(' => {
                let open = self.pos;
                self.pos += 1;
                if self.peek() == Some(')') {
                    return Err(self.error(RegexErrorKind::EmptyGroup));
                }
                if self.peek().is_none() {
                    return Err(RegexError {
                        position: open,
                        kind: RegexErrorKind::UnclosedParen,
                    });
                }
                let inner = self.alternation()?;
                if self.peek() != Some(')') {
                    return Err(RegexError {
                        position: open,
                        kind: RegexErrorKind::UnclosedParen,
                    });
                }
                self.pos += 1;
                Ok(inner)
            }
            EMPTY_SET => {
                self.pos += 1;
                Ok(RegexNode::Empty)
            }
            EPSILON => {
                self.pos += 1;
                Ok(RegexNode::Epsilon)
            }
            ESCAPE => {
                self.pos += 1;
                let literal = self
                    .peek()
                    .ok_or_else(|| self.error(RegexErrorKind::DanglingEscape))?;
                self.literal(literal)
            }
            other => self.literal(other),
        }
    }

    fn literal(&mut self, c: char) -> Result<RegexNode, RegexError> {
        if !self.alphabet.contains(c) {
            return Err(self.error(RegexErrorKind::SymbolNotInAlphabet(c)));
        }
        self.pos += 1;
        Ok(RegexNode::Literal(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::from_str_chars("ab")
    }

    fn lit(c: char) -> RegexNode {
        RegexNode::Literal(c)
    }

    #[test]
    fn two_literal_concatenation() {
        let ast = parse_regex("ab", &ab()).unwrap();
        assert_eq!(ast.node, RegexNode::concat(lit('a'), lit('b')));
    }

    #[test]
    fn starred_alternation() {
        let ast = parse_regex("(a|b)*", &ab()).unwrap();
        assert_eq!(
            ast.node,
            RegexNode::star(RegexNode::alternation(lit('a'), lit('b')))
        );
    }

    #[test]
    fn precedence_star_concat_alternation() {
        let ast = parse_regex("a|ab*", &ab()).unwrap();
        assert_eq!(
            ast.node,
            RegexNode::alternation(lit('a'), RegexNode::concat(lit('a'), RegexNode::star(lit('b'))))
        );
    }

    #[test]
    fn atoms() {
        let ast = parse_regex("~*_a", &ab()).unwrap();
        assert_eq!(
            ast.node,
            RegexNode::concat(
                RegexNode::concat(RegexNode::star(RegexNode::Empty), RegexNode::Epsilon),
                lit('a')
            )
        );
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_regex("a|", &ab()).unwrap_err();
        assert_eq!(e.kind, RegexErrorKind::DanglingAlternation);
        assert_eq!(e.position, 1);

        let e = parse_regex("(ab", &ab()).unwrap_err();
        assert_eq!(e.kind, RegexErrorKind::UnclosedParen);
        assert_eq!(e.position, 0);

        let e = parse_regex("ab)", &ab()).unwrap_err();
        assert_eq!(e.kind, RegexErrorKind::UnmatchedCloseParen);
        assert_eq!(e.position, 2);

        let e = parse_regex("a*|*", &ab()).unwrap_err();
        assert_eq!(e.kind, RegexErrorKind::DanglingStar);
        assert_eq!(e.position, 3);

        let e = parse_regex("abc", &ab()).unwrap_err();
        assert_eq!(e.kind, RegexErrorKind::SymbolNotInAlphabet('c'));
        assert_eq!(e.position, 2);

        assert_eq!(parse_regex("", &ab()).unwrap_err().kind, RegexErrorKind::EmptyExpression);
        assert_eq!(parse_regex("()", &ab()).unwrap_err().kind, RegexErrorKind::EmptyGroup);
        assert_eq!(parse_regex("|a", &ab()).unwrap_err().kind, RegexErrorKind::DanglingAlternation);
        assert_eq!(parse_regex("a\\", &ab()).unwrap_err().kind, RegexErrorKind::DanglingEscape);
    }

    #[test]
    fn printing_uses_minimal_parentheses() {
        let alphabet = Alphabet::from_str_chars("a#$01");
        let text = "a(#a)*$a(#a)*$(0|1)*";
        let ast = parse_regex(text, &alphabet).unwrap();
        assert_eq!(ast.to_text(), text);
    }

    #[test]
    fn escaped_metacharacters_round_trip() {
        let alphabet = Alphabet::from_str_chars("a_");
        let ast = parse_regex("a\\_(\\_|_)*", &alphabet).unwrap();
        assert_eq!(
            ast.node,
            RegexNode::concat(
                RegexNode::concat(lit('a'), lit('_')),
                RegexNode::star(RegexNode::alternation(lit('_'), RegexNode::Epsilon))
            )
        );
        let reparsed = parse_regex(&ast.to_text(), &alphabet).unwrap();
        assert_eq!(reparsed.node, ast.node);
    }
}
