//! Boolean tag-filter expressions: `p=2 and not slow`, `abelian or potent`,
//! parentheses allowed.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum TagFilter {
    Tag(String),
    Not(Box<TagFilter>),
    And(Box<TagFilter>, Box<TagFilter>),
    Or(Box<TagFilter>, Box<TagFilter>),
    All,
}

impl TagFilter {
    pub fn parse(text: &str) -> Result<TagFilter> {
        let tokens = tokenize(text)?;
        if tokens.is_empty() {
            return Ok(TagFilter::All);
        }
        let mut p = Parser { tokens, pos: 0 };
        let f = p.or_expr()?;
        if p.pos != p.tokens.len() {
            return Err(err(format!("unexpected token {:?}", p.tokens[p.pos])));
        }
        Ok(f)
    }

    pub fn matches(&self, tags: &[String]) -> bool {
        match self {
            TagFilter::Tag(t) => tags.iter().any(|x| x == t),
            TagFilter::Not(f) => !f.matches(tags),
            TagFilter::And(a, b) => a.matches(tags) && b.matches(tags),
            TagFilter::Or(a, b) => a.matches(tags) || b.matches(tags),
            TagFilter::All => true,
        }
    }
}

fn err(msg: String) -> Error {
    Error::Parse {
        line: 1,
        col: 1,
        msg,
    }
}

fn tokenize(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' | ')' => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                out.push(c.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c if c.is_ascii_alphanumeric() || c == '=' || c == '_' => cur.push(c),
            other => return Err(err(format!("bad character {other:?} in filter"))),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<String>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&str> {
        self.tokens.get(self.pos).map(String::as_str)
    }

    fn or_expr(&mut self) -> Result<TagFilter> {
        let mut left = self.and_expr()?;
        while self.peek() == Some("or") {
            self.pos += 1;
            let right = self.and_expr()?;
            left = TagFilter::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn and_expr(&mut self) -> Result<TagFilter> {
        let mut left = self.not_expr()?;
        while self.peek() == Some("and") {
            self.pos += 1;
            let right = self.not_expr()?;
            left = TagFilter::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn not_expr(&mut self) -> Result<TagFilter> {
        if self.peek() == Some("not") {
            self.pos += 1;
            return Ok(TagFilter::Not(Box::new(self.not_expr()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<TagFilter> {
        match self.peek() {
            Some("(") => {
                self.pos += 1;
                let inner = self.or_expr()?;
                if self.peek() != Some(")") {
                    return Err(err("missing `)` in filter".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(tok) if tok != ")" && tok != "and" && tok != "or" => {
                let t = tok.to_string();
                self.pos += 1;
                Ok(TagFilter::Tag(t))
            }
            other => Err(err(format!("expected tag, got {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tags(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn simple_and_not() {
        let f = TagFilter::parse("p=2 and not slow").unwrap();
        assert!(f.matches(&tags(&["p=2", "abelian"])));
        assert!(!f.matches(&tags(&["p=2", "slow"])));
        assert!(!f.matches(&tags(&["p=3"])));
    }

    #[test]
    fn empty_filter_matches_everything() {
        let f = TagFilter::parse("").unwrap();
        assert!(f.matches(&tags(&[])));
    }

    #[test]
    fn parens_and_or() {
        let f = TagFilter::parse("(p=2 or p=3) and potent").unwrap();
        assert!(f.matches(&tags(&["p=3", "potent"])));
        assert!(!f.matches(&tags(&["p=5", "potent"])));
    }

    #[test]
    fn rejects_garbage() {
        assert!(TagFilter::parse("and and").is_err());
        assert!(TagFilter::parse("(p=2").is_err());
        assert!(TagFilter::parse("p=2 !").is_err());
    }
}
