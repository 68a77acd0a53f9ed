//! Finite presentations and the presentation text format.
//!
//! The text format is line based:
//!
//! ```text
//! # comment
//! name: m27        (optional)
//! order: 27        (optional)
//! prime: 3         (optional)
//! gens: a b
//! rel: a^9
//! rel: b^3
//! rel: b^-1 a b a^-4
//! rel: [a,b]
//! rel: (a b)^2
//! ```
//!
//! A word is a juxtaposition of atoms; an atom is a generator name, a
//! parenthesized word or a commutator `[x,y]` (meaning `x^-1 y^-1 x y`),
//! optionally followed by `^k` with a signed integer exponent. Generator
//! names match `[a-z][a-z0-9_]*`; when names are juxtaposed without spaces
//! the longest declared name wins. Parse errors carry line and column.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone)]
pub struct Presentation {
    pub generator_count: usize,
    pub relators: Vec<Word>,
    pub names: Vec<String>,
    pub label: String,
}

impl Presentation {
    /// Builds a presentation, dropping relators that freely reduce to the
    /// empty word and deduplicating the rest (first occurrence wins).
    pub fn new(names: Vec<String>, relators: Vec<Word>, label: impl Into<String>) -> Self {
        let generator_count = names.len();
        let mut seen: HashSet<Word> = HashSet::new();
        let mut kept = Vec::new();
        for r in relators {
            if r.is_identity() {
                continue;
            }
            if let Some(max) = r.max_generator() {
                assert!(max < generator_count, "relator mentions undeclared generator");
            }
            if seen.insert(r.clone()) {
                kept.push(r);
            }
        }
        Presentation {
            generator_count,
            relators: kept,
            names,
            label: label.into(),
        }
    }

    /// Convenience constructor with generated names `g0, g1, ...`.
    pub fn with_default_names(generator_count: usize, relators: Vec<Word>, label: impl Into<String>) -> Self {
        let names = (0..generator_count).map(|i| format!("g{i}")).collect();
        Presentation::new(names, relators, label)
    }

    pub fn total_relator_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {}", self.names.join(" "))?;
        for r in &self.relators {
            write!(f, "\nrel: {}", r.display(&self.names))?;
        }
        Ok(())
    }
}

/// A parsed group description: presentation plus optional metadata lines.
#[derive(Debug, Clone)]
pub struct GroupInput {
    pub presentation: Presentation,
    pub expected_order: Option<u64>,
    pub prime: Option<u64>,
}

impl GroupInput {
    pub fn new(presentation: Presentation) -> Self {
        GroupInput {
            presentation,
            expected_order: None,
            prime: None,
        }
    }

    pub fn with_order(mut self, order: u64) -> Self {
        self.expected_order = Some(order);
        self
    }

    pub fn with_prime(mut self, p: u64) -> Self {
        self.prime = Some(p);
        self
    }
}

/// Parses a single group description from the text format.
pub fn parse_group(text: &str) -> Result<GroupInput> {
    let mut inputs = parse_corpus_file(text)?;
    match inputs.len() {
        1 => Ok(inputs.pop().unwrap()),
        0 => Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "no `gens:` line found".into(),
        }),
        n => Err(Error::Parse {
            line: 1,
            col: 1,
            msg: format!("expected one group description, found {n}"),
        }),
    }
}

/// Parses a file holding one or more group descriptions. A new entry starts
/// at each `name:` or `gens:` line that follows a completed entry.
pub fn parse_corpus_file(text: &str) -> Result<Vec<GroupInput>> {
    let mut entries: Vec<GroupInput> = Vec::new();
    let mut current: Option<EntryBuilder> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = match line.split_once(':') {
            Some((k, r)) => (k.trim(), r.trim()),
            None => {
                return Err(Error::Parse {
                    line: lineno,
                    col: 1,
                    msg: format!("expected `key: value`, got {line:?}"),
                })
            }
        };
        match key {
            "name" => {
                if let Some(b) = current.take() {
                    entries.push(b.finish(lineno)?);
                }
                let mut b = EntryBuilder::default();
                b.name = Some(rest.to_string());
                current = Some(b);
            }
            "order" | "prime" => {
                let b = current.get_or_insert_with(EntryBuilder::default);
                let value: u64 = rest.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    col: key.len() + 2,
                    msg: format!("invalid integer {rest:?}"),
                })?;
                if key == "order" {
                    b.order = Some(value);
                } else {
                    b.prime = Some(value);
                }
            }
            "gens" => {
                if current.as_ref().is_some_and(|b| !b.gens.is_empty()) {
                    entries.push(current.take().unwrap().finish(lineno)?);
                }
                let b = current.get_or_insert_with(EntryBuilder::default);
                for name in rest.split_whitespace() {
                    check_name(name, lineno)?;
                    if b.gens.iter().any(|g| g == name) {
                        return Err(Error::Parse {
                            line: lineno,
                            col: 1,
                            msg: format!("duplicate generator name {name:?}"),
                        });
                    }
                    b.gens.push(name.to_string());
                }
            }
            "rel" => {
                let b = current.get_or_insert_with(EntryBuilder::default);
                if b.gens.is_empty() {
                    return Err(Error::Parse {
                        line: lineno,
                        col: 1,
                        msg: "`rel:` before `gens:`".into(),
                    });
                }
                let col0 = raw.find("rel:").map(|p| p + 4).unwrap_or(0);
                let word = parse_word(rest, &b.gens, lineno, col0 + 1)?;
                b.relators.push(word);
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    col: 1,
                    msg: format!("unknown key {other:?}"),
                })
            }
        }
    }
    if let Some(b) = current.take() {
        entries.push(b.finish(text.lines().count())?);
    }
    Ok(entries)
}

#[derive(Default)]
struct EntryBuilder {
    name: Option<String>,
    order: Option<u64>,
    prime: Option<u64>,
    gens: Vec<String>,
    relators: Vec<Word>,
}

impl EntryBuilder {
    fn finish(self, lineno: usize) -> Result<GroupInput> {
        if self.gens.is_empty() && self.name.is_none() {
            return Err(Error::Parse {
                line: lineno,
                col: 1,
                msg: "entry without `gens:` line".into(),
            });
        }
        let label = self.name.unwrap_or_else(|| "group".to_string());
        let presentation = Presentation::new(self.gens, self.relators, label);
        Ok(GroupInput {
            presentation,
            expected_order: self.order,
            prime: self.prime,
        })
    }
}

fn check_name(name: &str, lineno: usize) -> Result<()> {
    let mut chars = name.chars();
    let ok = matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| matches!(c, 'a'..='z' | '0'..='9' | '_'));
    if ok {
        Ok(())
    } else {
        Err(Error::Parse {
            line: lineno,
            col: 1,
            msg: format!("invalid generator name {name:?} (want [a-z][a-z0-9_]*)"),
        })
    }
}

/// Parses a word in the relator grammar against the declared generator names.
pub fn parse_word(text: &str, names: &[String], line: usize, col_base: usize) -> Result<Word> {
    let mut p = WordParser {
        bytes: text.as_bytes(),
        pos: 0,
        names,
        line,
        col_base,
    };
    let w = p.word(&[])?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(w)
}

struct WordParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    names: &'a [String],
    line: usize,
    col_base: usize,
}

impl WordParser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col_base + self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    /// word := term+ ; stops at any byte in `stop`.
    fn word(&mut self, stop: &[u8]) -> Result<Word> {
        let mut acc = Word::identity();
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b) if stop.contains(&b) => break,
                _ => {}
            }
            let term = self.term()?;
            acc = acc.mul(&term);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Word> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.integer()?;
            Ok(atom.pow(exp))
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word(&[b')'])?;
                if self.peek() != Some(b')') {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let x = self.word(&[b','])?;
                if self.peek() != Some(b',') {
                    return Err(self.err("missing `,` in commutator"));
                }
                self.pos += 1;
                let y = self.word(&[b']'])?;
                if self.peek() != Some(b']') {
                    return Err(self.err("missing `]`"));
                }
                self.pos += 1;
                Ok(Word::commutator(&x, &y))
            }
            Some(b'a'..=b'z') => self.generator(),
            Some(other) => Err(self.err(format!("unexpected character {:?}", other as char))),
            None => Err(self.err("unexpected end of word")),
        }
    }

    /// Longest declared generator name starting at the current position.
    fn generator(&mut self) -> Result<Word> {
        let rest = &self.bytes[self.pos..];
        let mut best: Option<usize> = None;
        for (i, name) in self.names.iter().enumerate() {
            let nb = name.as_bytes();
            if rest.starts_with(nb) {
                match best {
                    Some(b) if self.names[b].len() >= nb.len() => {}
                    _ => best = Some(i),
                }
            }
        }
        match best {
            Some(i) => {
                self.pos += self.names[i].len();
                Ok(Word::generator(i))
            }
            None => Err(self.err("no declared generator name matches here")),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse().map_err(|_| self.err("invalid exponent"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(s: &[&str]) -> Vec<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn parses_powers_and_inverses() {
        let n = names(&["a", "b"]);
        let w = parse_word("b^-1 a b a^-4", &n, 1, 1).unwrap();
        assert_eq!(w.letters(), &[-2, 1, 2, -1, -1, -1, -1]);
    }

    #[test]
    fn parses_commutator_and_grouping() {
        let n = names(&["a", "b"]);
        let w = parse_word("[a,b]", &n, 1, 1).unwrap();
        assert_eq!(w.letters(), &[-1, -2, 1, 2]);
        let w = parse_word("(a b)^2", &n, 1, 1).unwrap();
        assert_eq!(w.letters(), &[1, 2, 1, 2]);
        let w = parse_word("[a,b]^-1", &n, 1, 1).unwrap();
        assert_eq!(w.letters(), &[-2, -1, 2, 1]);
    }

    #[test]
    fn juxtaposition_without_spaces() {
        let n = names(&["a", "b"]);
        let w = parse_word("aba", &n, 1, 1).unwrap();
        assert_eq!(w.letters(), &[1, 2, 1]);
    }

    #[test]
    fn longest_declared_name_wins() {
        let n = names(&["x", "x1"]);
        let w = parse_word("x1 x", &n, 1, 1).unwrap();
        assert_eq!(w.letters(), &[2, 1]);
    }

    #[test]
    fn nested_commutators() {
        let n = names(&["a", "b"]);
        let w = parse_word("[[a,b],a]", &n, 1, 1).unwrap();
        let inner = Word::commutator(&Word::generator(0), &Word::generator(1));
        assert_eq!(w, Word::commutator(&inner, &Word::generator(0)));
    }

    #[test]
    fn errors_carry_line_and_column() {
        let err = parse_group("gens: a\nrel: a c").unwrap_err();
        match err {
            Error::Parse { line, col, .. } => {
                assert_eq!(line, 2);
                assert!(col > 5);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_full_group_description() {
        let g = parse_group("name: q8\norder: 8\nprime: 2\ngens: a b\nrel: a^4\nrel: a^2 b^-2\nrel: b^-1 a b a\n").unwrap();
        assert_eq!(g.presentation.label, "q8");
        assert_eq!(g.expected_order, Some(8));
        assert_eq!(g.prime, Some(2));
        assert_eq!(g.presentation.relators.len(), 3);
    }

    #[test]
    fn relator_dedup_and_empty_drop() {
        let n = names(&["a"]);
        let w = parse_word("a a^-1", &n, 1, 1).unwrap();
        assert!(w.is_identity());
        let p = Presentation::new(
            n,
            vec![Word::generator(0).pow(2), Word::generator(0).pow(2), Word::identity()],
            "t",
        );
        assert_eq!(p.relators.len(), 1);
    }

    #[test]
    fn corpus_file_with_two_entries() {
        let text = "name: z2\norder: 2\ngens: a\nrel: a^2\n\nname: z3\norder: 3\ngens: a\nrel: a^3\n";
        let entries = parse_corpus_file(text).unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[1].presentation.label, "z3");
    }
}
