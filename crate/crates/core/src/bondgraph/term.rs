use std::fmt;

use super::signature::Signature;
use crate::error::{Error, Result};

/// A morphism of a free prop, written in classical order:
/// `Compose(after, before)` runs `before` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Generator(String),
    Identity(usize),
    Braiding(usize, usize),
    Compose(Box<Term>, Box<Term>),
    Tensor(Box<Term>, Box<Term>),
}

impl Term {
    pub fn gen(name: &str) -> Term {
        Term::Generator(name.to_string())
    }

    pub fn id(n: usize) -> Term {
        Term::Identity(n)
    }

    pub fn braid(a: usize, b: usize) -> Term {
        Term::Braiding(a, b)
    }

    /// `after . before`
    pub fn compose(after: Term, before: Term) -> Term {
        Term::Compose(Box::new(after), Box::new(before))
    }

    /// Diagrammatic order: `self` first.
    pub fn then(self, next: Term) -> Term {
        Term::compose(next, self)
    }

    pub fn tensor(self, other: Term) -> Term {
        Term::Tensor(Box::new(self), Box::new(other))
    }

    /// Number of generator, identity, and braiding leaves.
    pub fn size(&self) -> usize {
        match self {
            Term::Generator(_) | Term::Identity(_) | Term::Braiding(..) => 1,
            Term::Compose(a, b) | Term::Tensor(a, b) => a.size() + b.size(),
        }
    }

    /// Domain and codomain arities, checking every composite.
    pub fn typecheck(&self, sig: &Signature) -> Result<(usize, usize)> {
        self.typecheck_at(sig, &mut vec!["term"])
    }

    fn typecheck_at<'a>(&self, sig: &Signature, path: &mut Vec<&'a str>) -> Result<(usize, usize)> {
        match self {
            Term::Generator(name) => sig.arity(name).map_err(|_| Error::Type {
                path: path.join("."),
                message: format!("unknown generator `{name}` in signature `{}`", sig.name()),
            }),
            Term::Identity(n) => Ok((*n, *n)),
            Term::Braiding(a, b) => Ok((a + b, a + b)),
            Term::Compose(after, before) => {
                path.push("before");
                let (dom, mid) = before.typecheck_at(sig, path)?;
                path.pop();
                path.push("after");
                let (mid2, cod) = after.typecheck_at(sig, path)?;
                path.pop();
                if mid != mid2 {
                    return Err(Error::Type {
                        path: path.join("."),
                        message: format!("codomain {mid} does not match domain {mid2}"),
                    });
                }
                Ok((dom, cod))
            }
            Term::Tensor(left, right) => {
                path.push("left");
                let (a, b) = left.typecheck_at(sig, path)?;
                path.pop();
                path.push("right");
                let (c, d) = right.typecheck_at(sig, path)?;
                path.pop();
                Ok((a + c, b + d))
            }
        }
    }

    /// Vertical reflection, using the signature's generator duals.
    pub fn mirror(&self, sig: &Signature) -> Result<Term> {
        Ok(match self {
            Term::Generator(name) => match sig.dual(name) {
                Some(d) => Term::gen(d),
                None => return Err(Error::UnknownGenerator(format!("{name}†"))),
            },
            Term::Identity(n) => Term::Identity(*n),
            Term::Braiding(a, b) => Term::Braiding(*b, *a),
            Term::Compose(after, before) => Term::compose(before.mirror(sig)?, after.mirror(sig)?),
            Term::Tensor(l, r) => l.mirror(sig)?.tensor(r.mirror(sig)?),
        })
    }

    /// `self` composed with itself `k` times (`k >= 1`).
    pub fn power(&self, k: usize) -> Term {
        let mut acc = self.clone();
        for _ in 1..k {
            acc = Term::compose(self.clone(), acc);
        }
        acc
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::sexpr::term_to_sexpr(self).to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arities() {
        let wire = Signature::corel_wire();
        let bond = Signature::bond();
        assert_eq!(Term::compose(Term::gen("m"), Term::gen("d")).typecheck(&wire).unwrap(), (1, 1));
        assert_eq!(Term::gen("M").tensor(Term::gen("I")).typecheck(&bond).unwrap(), (2, 2));
        assert_eq!(Term::braid(2, 3).typecheck(&bond).unwrap(), (5, 5));
    }

    #[test]
    fn mismatch_reports_path() {
        let bond = Signature::bond();
        let bad = Term::gen("M").tensor(Term::compose(Term::gen("M"), Term::gen("M")));
        match bad.typecheck(&bond) {
            Err(Error::Type { path, message }) => {
                assert_eq!(path, "term.right");
                assert!(message.contains("codomain 1"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        let unknown = Term::compose(Term::gen("Q"), Term::id(1));
        match unknown.typecheck(&bond) {
            Err(Error::Type { path, .. }) => assert_eq!(path, "term.after"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mirror_reverses() {
        let bond = Signature::bond();
        let t = Term::gen("M").then(Term::gen("E")).tensor(Term::braid(1, 2));
        let m = t.mirror(&bond).unwrap();
        assert_eq!(m, Term::gen("I").then(Term::gen("D")).tensor(Term::braid(2, 1)));
        assert_eq!(m.mirror(&bond).unwrap(), t);
        assert_eq!(t.size(), 3);
    }
}
