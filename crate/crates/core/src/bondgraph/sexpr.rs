//! Prefix S-expressions, used to serialise terms and law fixtures.
//!
//! Terms read `(gen M)`, `(id 2)`, `(sigma 1 1)`, `(comp AFTER BEFORE)` and
//! `(tensor LEFT RIGHT)`. Strings are double-quoted; `;` starts a comment.

use std::fmt;

use super::term::Term;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SExpr {
    Atom(String),
    Str(String),
    List(Vec<SExpr>),
}

impl fmt::Display for SExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SExpr::Atom(a) => f.write_str(a),
            SExpr::Str(s) => {
                f.write_str("\"")?;
                for ch in s.chars() {
                    match ch {
                        '"' => f.write_str("\\\"")?,
                        '\\' => f.write_str("\\\\")?,
                        c => write!(f, "{c}")?,
                    }
                }
                f.write_str("\"")
            }
            SExpr::List(items) => {
                f.write_str("(")?;
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    text: &'a str,
}

impl<'a> Reader<'a> {
    fn error(&self, offset: usize, message: &str) -> Error {
        let before = &self.text[..offset.min(self.text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Error::Syntax {
            line,
            column,
            message: message.to_string(),
        }
    }

    fn skip_trivia(&mut self) {
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_whitespace() {
                self.chars.next();
            } else if c == ';' {
                while let Some((_, c)) = self.chars.next() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn read(&mut self) -> Result<Option<SExpr>> {
        self.skip_trivia();
        let Some(&(start, c)) = self.chars.peek() else {
            return Ok(None);
        };
        match c {
            '(' => {
                self.chars.next();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.chars.peek() {
                        Some(&(_, ')')) => {
                            self.chars.next();
                            return Ok(Some(SExpr::List(items)));
                        }
                        Some(_) => items.push(self.read()?.expect("non-empty input")),
                        None => return Err(self.error(start, "unclosed `(`")),
                    }
                }
            }
            ')' => Err(self.error(start, "unexpected `)`")),
            '"' => {
                self.chars.next();
                let mut s = String::new();
                loop {
                    match self.chars.next() {
                        Some((_, '"')) => return Ok(Some(SExpr::Str(s))),
                        Some((_, '\\')) => match self.chars.next() {
                            Some((_, c)) => s.push(c),
                            None => break,
                        },
                        Some((_, c)) => s.push(c),
                        None => break,
                    }
                }
                Err(self.error(start, "unterminated string"))
            }
            _ => {
                let mut atom = String::new();
                while let Some(&(_, c)) = self.chars.peek() {
                    if c.is_whitespace() || matches!(c, '(' | ')' | '"' | ';') {
                        break;
                    }
                    atom.push(c);
                    self.chars.next();
                }
                Ok(Some(SExpr::Atom(atom)))
            }
        }
    }
}

/// Reads every top-level expression in `text`.
pub fn parse_all(text: &str) -> Result<Vec<SExpr>> {
    let mut reader = Reader {
        chars: text.char_indices().peekable(),
        text,
    };
    let mut out = Vec::new();
    while let Some(expr) = reader.read()? {
        out.push(expr);
    }
    Ok(out)
}

pub fn parse_one(text: &str) -> Result<SExpr> {
    let mut all = parse_all(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        n => Err(Error::Malformed(format!(
            "expected one expression, found {n}"
        ))),
    }
}

pub fn term_to_sexpr(t: &Term) -> SExpr {
    let atom = |s: &str| SExpr::Atom(s.to_string());
    let num = |n: usize| SExpr::Atom(n.to_string());
    match t {
        Term::Generator(g) => SExpr::List(vec![atom("gen"), atom(g)]),
        Term::Identity(n) => SExpr::List(vec![atom("id"), num(*n)]),
        Term::Braiding(a, b) => SExpr::List(vec![atom("sigma"), num(*a), num(*b)]),
        Term::Compose(after, before) => SExpr::List(vec![
            atom("comp"),
            term_to_sexpr(after),
            term_to_sexpr(before),
        ]),
        Term::Tensor(l, r) => SExpr::List(vec![atom("tensor"), term_to_sexpr(l), term_to_sexpr(r)]),
    }
}

pub fn sexpr_to_term(e: &SExpr) -> Result<Term> {
    let malformed = || Error::Malformed(format!("not a term: {e}"));
    let SExpr::List(items) = e else {
        return Err(malformed());
    };
    let head = match items.first() {
        Some(SExpr::Atom(h)) => h.as_str(),
        _ => return Err(malformed()),
    };
    let nat = |k: usize| -> Result<usize> {
        match items.get(k) {
            Some(SExpr::Atom(a)) => a.parse().map_err(|_| malformed()),
            _ => Err(malformed()),
        }
    };
    match (head, items.len()) {
        ("gen", 2) => match &items[1] {
            SExpr::Atom(g) => Ok(Term::gen(g)),
            _ => Err(malformed()),
        },
        ("id", 2) => Ok(Term::id(nat(1)?)),
        ("sigma", 3) => Ok(Term::braid(nat(1)?, nat(2)?)),
        ("comp", 3) => Ok(Term::compose(
            sexpr_to_term(&items[1])?,
            sexpr_to_term(&items[2])?,
        )),
        ("tensor", 3) => Ok(sexpr_to_term(&items[1])?.tensor(sexpr_to_term(&items[2])?)),
        _ => Err(malformed()),
    }
}

pub fn parse_term(text: &str) -> Result<Term> {
    sexpr_to_term(&parse_one(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_text_form() {
        let t = Term::compose(Term::gen("E"), Term::gen("M"));
        assert_eq!(t.to_string(), "(comp (gen E) (gen M))");
        assert_eq!(parse_term("(comp (gen E) (gen M))").unwrap(), t);
        let u = parse_term("(tensor (id 2) ; comment\n (sigma 1 0))").unwrap();
        assert_eq!(u, Term::id(2).tensor(Term::braid(1, 0)));
    }

    #[test]
    fn strings_and_errors() {
        let all = parse_all(r#"(law "a \"quoted\" name") x"#).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].to_string(), r#"(law "a \"quoted\" name")"#);
        match parse_all("(gen M") {
            Err(Error::Syntax { line: 1, column: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_all("\n  )") {
            Err(Error::Syntax { line: 2, column: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_term("(comp (gen E))").is_err());
        assert!(parse_term("(id x)").is_err());
        assert!(parse_one("(id 1) (id 2)").is_err());
    }
}
