//! The infix term language.
//!
//! ```text
//! term := 'id(' nat ')' | 'sigma(' nat ',' nat ')' | IDENT
//!       | term ';' term | term '+' term | '(' term ')'
//! ```
//!
//! `f ; g` is diagrammatic composition (`f` happens first) and parses to
//! `Compose(g, f)`. `+` is the tensor and binds tighter than `;`. Both
//! operators associate to the left. `#` starts a comment running to the
//! end of the line.

use std::fmt::Write as _;

use crate::bondgraph::{Signature, Term};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Nat(usize),
    Semi,
    Plus,
    Comma,
    Open,
    Close,
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (start_line, start_column) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        let token = match c {
            c if c.is_whitespace() => {
                bump(&mut chars);
                continue;
            }
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    bump(&mut chars);
                }
                continue;
            }
            ';' | '+' | ',' | '(' | ')' => {
                bump(&mut chars);
                match c {
                    ';' => Token::Semi,
                    '+' => Token::Plus,
                    ',' => Token::Comma,
                    '(' => Token::Open,
                    _ => Token::Close,
                }
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(d);
                    bump(&mut chars);
                }
                let n = digits
                    .parse()
                    .map_err(|_| syntax(start_line, start_column, "number too large"))?;
                Token::Nat(n)
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&d) = chars
                    .peek()
                    .filter(|d| d.is_alphanumeric() || **d == '_' || **d == '\'')
                {
                    ident.push(d);
                    bump(&mut chars);
                }
                Token::Ident(ident)
            }
            other => return Err(syntax(line, column, format!("unexpected character `{other}`"))),
        };
        out.push(Spanned {
            token,
            line: start_line,
            column: start_column,
        });
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Spanned>,
    pos: usize,
    sig: &'a Signature,
    end: (usize, usize),
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|s| &s.token)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map_or(self.end, |s| (s.line, s.column))
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.here();
        syntax(line, column, message)
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn nat(&mut self) -> Result<usize> {
        match self.peek() {
            Some(&Token::Nat(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.error("expected a natural number")),
        }
    }

    /// Sequential composition, the loosest level.
    fn seq(&mut self) -> Result<(Term, (usize, usize))> {
        let (mut term, mut arity) = self.par()?;
        while self.peek() == Some(&Token::Semi) {
            let (line, column) = self.here();
            self.pos += 1;
            let (next, next_arity) = self.par()?;
            if arity.1 != next_arity.0 {
                return Err(Error::Type {
                    path: format!("line {line}, column {column}"),
                    message: format!(
                        "`;` joins codomain {} to domain {}",
                        arity.1, next_arity.0
                    ),
                });
            }
            term = term.then(next);
            arity = (arity.0, next_arity.1);
        }
        Ok((term, arity))
    }

    fn par(&mut self) -> Result<(Term, (usize, usize))> {
        let (mut term, mut arity) = self.atom()?;
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            let (next, next_arity) = self.atom()?;
            term = term.tensor(next);
            arity = (arity.0 + next_arity.0, arity.1 + next_arity.1);
        }
        Ok((term, arity))
    }

    fn atom(&mut self) -> Result<(Term, (usize, usize))> {
        let (line, column) = self.here();
        match self.peek().cloned() {
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.seq()?;
                self.expect(Token::Close, "`)`")?;
                Ok(inner)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "id" => {
                        self.expect(Token::Open, "`(` after `id`")?;
                        let n = self.nat()?;
                        self.expect(Token::Close, "`)`")?;
                        Ok((Term::id(n), (n, n)))
                    }
                    "sigma" => {
                        self.expect(Token::Open, "`(` after `sigma`")?;
                        let a = self.nat()?;
                        self.expect(Token::Comma, "`,`")?;
                        let b = self.nat()?;
                        self.expect(Token::Close, "`)`")?;
                        Ok((Term::braid(a, b), (a + b, a + b)))
                    }
                    _ => {
                        let resolved = self.sig.resolve(&name).map_err(|_| {
                            syntax(line, column, format!("unknown identifier `{name}`"))
                        })?;
                        let arity = self.sig.arity(&resolved)?;
                        Ok((Term::gen(&resolved), arity))
                    }
                }
            }
            Some(_) => Err(self.error("expected a term")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses and typechecks `text` against `sig`.
pub fn parse(text: &str, sig: &Signature) -> Result<Term> {
    let tokens = lex(text)?;
    let end = text.lines().enumerate().last().map_or((1, 1), |(k, l)| {
        let trailing_newline = text.ends_with('\n');
        if trailing_newline {
            (k + 2, 1)
        } else {
            (k + 1, l.chars().count() + 1)
        }
    });
    let mut parser = Parser {
        tokens,
        pos: 0,
        sig,
        end,
    };
    let (term, _) = parser.seq()?;
    if parser.pos < parser.tokens.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(term)
}

/// Prints `t` in the infix language with the fewest parentheses that
/// parse back to the same tree.
pub fn print(t: &Term) -> String {
    let mut out = String::new();
    write_term(t, 0, &mut out);
    out
}

/// Levels: 0 sequential, 1 parallel, 2 atomic.
fn write_term(t: &Term, min_level: u8, out: &mut String) {
    let level = match t {
        Term::Compose(..) => 0,
        Term::Tensor(..) => 1,
        _ => 2,
    };
    let wrap = level < min_level;
    if wrap {
        out.push('(');
    }
    match t {
        Term::Generator(g) => out.push_str(g),
        Term::Identity(n) => {
            let _ = write!(out, "id({n})");
        }
        Term::Braiding(a, b) => {
            let _ = write!(out, "sigma({a}, {b})");
        }
        Term::Compose(after, before) => {
            write_term(before, 0, out);
            out.push_str(" ; ");
            write_term(after, 1, out);
        }
        Term::Tensor(l, r) => {
            write_term(l, 1, out);
            out.push_str(" + ");
            write_term(r, 2, out);
        }
    }
    if wrap {
        out.push(')');
    }
}
