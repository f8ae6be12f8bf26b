//! A catalog of equations between terms and a checker that evaluates both
//! sides in a semantic backend and compares them exactly.
//!
//! Suites are data: each one is an S-expression fixture under `laws/`,
//! loaded at compile time. The fixtures are generated from the builders in
//! [`families`], and a test keeps the two in agreement.

pub mod families;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::bondgraph::sexpr::{parse_all, sexpr_to_term, term_to_sexpr, SExpr};
use crate::bondgraph::{eval_corel, eval_lagrel, Signature, Term};
use crate::error::{Error, Result};

/// Every registered suite, in display order.
pub const SUITES: &[&str] = &[
    "wire-frobenius",
    "series",
    "parallel",
    "weak-bimonoid",
    "lagrel-frobenius",
    "lagrel-bimonoid",
    "lagrel-inverse",
    "bondgraph-presentation",
    "negative-controls",
];

fn fixture(suite: &str) -> Option<&'static str> {
    Some(match suite {
        "wire-frobenius" => include_str!("../../laws/wire-frobenius.sexp"),
        "series" => include_str!("../../laws/series.sexp"),
        "parallel" => include_str!("../../laws/parallel.sexp"),
        "weak-bimonoid" => include_str!("../../laws/weak-bimonoid.sexp"),
        "lagrel-frobenius" => include_str!("../../laws/lagrel-frobenius.sexp"),
        "lagrel-bimonoid" => include_str!("../../laws/lagrel-bimonoid.sexp"),
        "lagrel-inverse" => include_str!("../../laws/lagrel-inverse.sexp"),
        "bondgraph-presentation" => include_str!("../../laws/bondgraph-presentation.sexp"),
        "negative-controls" => include_str!("../../laws/negative-controls.sexp"),
        _ => return None,
    })
}

/// A semantic backend in which equations are decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Corelations; bond terms go through `G`.
    Corel,
    /// Linear relations; bond terms go through `F`, wire and port terms
    /// through the black box of their corelation.
    Lagrel,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Corel => "corel",
            Backend::Lagrel => "lagrel",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corel" => Ok(Backend::Corel),
            "lagrel" => Ok(Backend::Lagrel),
            other => Err(Error::Malformed(format!("unknown backend `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub name: String,
    pub citation: String,
    pub left: Term,
    pub right: Term,
    /// Name of the signature both sides are written over.
    pub signature: String,
    /// Backends in which the equation is expected to fail. Empty for the
    /// laws that are claimed to hold.
    pub fails_in: Vec<Backend>,
}

impl Equation {
    pub fn expected_to_hold(&self, backend: Backend) -> bool {
        !self.fails_in.contains(&backend)
    }

    /// Both sides typecheck with the same arity.
    pub fn typecheck(&self) -> Result<(usize, usize)> {
        let sig = Signature::by_name(&self.signature)?;
        let left = self.left.typecheck(&sig)?;
        let right = self.right.typecheck(&sig)?;
        if left != right {
            return Err(Error::Type {
                path: self.name.clone(),
                message: format!(
                    "sides have arities {}->{} and {}->{}",
                    left.0, left.1, right.0, right.1
                ),
            });
        }
        Ok(left)
    }

    fn to_sexpr(&self) -> SExpr {
        let atom = |s: &str| SExpr::Atom(s.to_string());
        let tagged = |tag: &str, rest: Vec<SExpr>| {
            let mut items = vec![atom(tag)];
            items.extend(rest);
            SExpr::List(items)
        };
        let mut items = vec![
            atom("law"),
            SExpr::Str(self.name.clone()),
            tagged("sig", vec![atom(&self.signature)]),
            tagged("cite", vec![SExpr::Str(self.citation.clone())]),
        ];
        if !self.fails_in.is_empty() {
            items.push(tagged(
                "fails",
                self.fails_in.iter().map(|b| atom(b.name())).collect(),
            ));
        }
        items.push(tagged("left", vec![term_to_sexpr(&self.left)]));
        items.push(tagged("right", vec![term_to_sexpr(&self.right)]));
        SExpr::List(items)
    }

    fn from_sexpr(e: &SExpr) -> Result<Self> {
        let malformed = || Error::Malformed(format!("not a law: {e}"));
        let SExpr::List(items) = e else {
            return Err(malformed());
        };
        let (Some(SExpr::Atom(head)), Some(SExpr::Str(name))) = (items.first(), items.get(1)) else {
            return Err(malformed());
        };
        if head != "law" {
            return Err(malformed());
        }
        let (mut signature, mut citation, mut left, mut right) = (None, None, None, None);
        let mut fails_in = Vec::new();
        for field in &items[2..] {
            let SExpr::List(parts) = field else {
                return Err(malformed());
            };
            match (parts.first(), parts.get(1), parts.len()) {
                (Some(SExpr::Atom(t)), Some(SExpr::Atom(s)), 2) if t == "sig" => {
                    signature = Some(s.clone())
                }
                (Some(SExpr::Atom(t)), Some(SExpr::Str(s)), 2) if t == "cite" => {
                    citation = Some(s.clone())
                }
                (Some(SExpr::Atom(t)), Some(term), 2) if t == "left" => {
                    left = Some(sexpr_to_term(term)?)
                }
                (Some(SExpr::Atom(t)), Some(term), 2) if t == "right" => {
                    right = Some(sexpr_to_term(term)?)
                }
                (Some(SExpr::Atom(t)), _, _) if t == "fails" => {
                    for b in &parts[1..] {
                        match b {
                            SExpr::Atom(b) => fails_in.push(b.parse()?),
                            _ => return Err(malformed()),
                        }
                    }
                }
                _ => return Err(malformed()),
            }
        }
        Ok(Equation {
            name: name.clone(),
            citation: citation.ok_or_else(malformed)?,
            left: left.ok_or_else(malformed)?,
            right: right.ok_or_else(malformed)?,
            signature: signature.ok_or_else(malformed)?,
            fails_in,
        })
    }
}

/// A parsed suite fixture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Suite {
    pub name: String,
    /// Backends the suite is claimed for.
    pub backends: Vec<Backend>,
    pub equations: Vec<Equation>,
}

impl Suite {
    pub fn parse(text: &str) -> Result<Suite> {
        let exprs = parse_all(text)?;
        let Some((first, rest)) = exprs.split_first() else {
            return Err(Error::Malformed("empty suite".to_string()));
        };
        let malformed = || Error::Malformed(format!("not a suite header: {first}"));
        let SExpr::List(items) = first else {
            return Err(malformed());
        };
        let (name, backends) = match items.as_slice() {
            [SExpr::Atom(h), SExpr::Str(name), SExpr::List(bs)]
                if h == "suite" && matches!(bs.first(), Some(SExpr::Atom(t)) if t == "backends") =>
            {
                let backends = bs[1..]
                    .iter()
                    .map(|b| match b {
                        SExpr::Atom(b) => b.parse(),
                        _ => Err(malformed()),
                    })
                    .collect::<Result<Vec<Backend>>>()?;
                (name.clone(), backends)
            }
            _ => return Err(malformed()),
        };
        let equations = rest.iter().map(Equation::from_sexpr).collect::<Result<_>>()?;
        Ok(Suite {
            name,
            backends,
            equations,
        })
    }

    /// One header line, then one law per line group.
    pub fn render(&self) -> String {
        let backends: Vec<&str> = self.backends.iter().map(|b| b.name()).collect();
        let mut out = format!(
            "(suite \"{}\" (backends {}))\n",
            self.name,
            backends.join(" ")
        );
        for eq in &self.equations {
            out.push('\n');
            out.push_str(&eq.to_sexpr().to_string());
            out.push('\n');
        }
        out
    }
}

/// Builds the in-memory suite from the family builders.
pub fn build(suite: &str) -> Result<Suite> {
    let header = families::header(suite).ok_or_else(|| Error::UnknownSuite(suite.to_string()))?;
    Ok(Suite {
        name: suite.to_string(),
        backends: header.backends.to_vec(),
        equations: families::build_suite(suite).expect("suite has a header"),
    })
}

/// The suite as stored in its fixture.
pub fn load(suite: &str) -> Result<Suite> {
    let text = fixture(suite).ok_or_else(|| Error::UnknownSuite(suite.to_string()))?;
    Suite::parse(text)
}

pub fn law_registry(suite: &str) -> Result<Vec<Equation>> {
    Ok(load(suite)?.equations)
}

/// The two evaluated sides of a failed equation, in the backend's JSON form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub left: Value,
    pub right: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub equation: String,
    pub backend: Backend,
    pub holds: bool,
    pub expected: bool,
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn as_expected(&self) -> bool {
        self.holds == self.expected
    }
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("values serialise")
}

pub fn check_equation(eq: &Equation, backend: Backend) -> Result<Verdict> {
    eq.typecheck()?;
    let sig = Signature::by_name(&eq.signature)?;
    let (holds, counterexample) = match backend {
        Backend::Corel => {
            let (l, r) = (eval_corel(&eq.left, &sig)?, eval_corel(&eq.right, &sig)?);
            let holds = l == r;
            (holds, (!holds).then(|| Counterexample { left: to_json(&l), right: to_json(&r) }))
        }
        Backend::Lagrel => {
            let (l, r) = (eval_lagrel(&eq.left, &sig)?, eval_lagrel(&eq.right, &sig)?);
            let holds = l == r;
            (holds, (!holds).then(|| Counterexample { left: to_json(&l), right: to_json(&r) }))
        }
    };
    Ok(Verdict {
        equation: eq.name.clone(),
        backend,
        holds,
        expected: eq.expected_to_hold(backend),
        counterexample,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub backend: Backend,
    pub total: usize,
    pub held: usize,
    pub failed: usize,
    /// Verdicts that disagree with the equation's expectation.
    pub unexpected: usize,
    pub verdicts: Vec<Verdict>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.unexpected == 0
    }

    /// One JSON object per verdict.
    pub fn json_lines(&self) -> String {
        self.verdicts
            .iter()
            .map(|v| serde_json::to_string(v).expect("verdicts serialise") + "\n")
            .collect()
    }
}

pub fn run_suite(suite: &str, backend: Backend) -> Result<SuiteReport> {
    let verdicts = law_registry(suite)?
        .iter()
        .map(|eq| check_equation(eq, backend))
        .collect::<Result<Vec<_>>>()?;
    let held = verdicts.iter().filter(|v| v.holds).count();
    Ok(SuiteReport {
        suite: suite.to_string(),
        backend,
        total: verdicts.len(),
        held,
        failed: verdicts.len() - held,
        unexpected: verdicts.iter().filter(|v| !v.as_expected()).count(),
        verdicts,
    })
}
