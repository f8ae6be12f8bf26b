//! Builders for the equation families shared by every suite: Frobenius
//! monoids, weak and strict bimonoids, and the extra identities that tie
//! the two junction structures together.

use super::{Backend, Equation, SUITES};
use crate::bondgraph::Term;

/// A monoid `(mul, unit)` and comonoid `(comul, counit)` on object `1`.
#[derive(Debug, Clone, Copy)]
pub struct Structure<'a> {
    pub mul: &'a str,
    pub unit: &'a str,
    pub comul: &'a str,
    pub counit: &'a str,
}

/// The extra pair of laws that distinguishes a Frobenius monoid family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    /// `mul . sigma = mul` and `sigma . comul = comul`.
    Commutative,
    /// `counit . mul . sigma = counit . mul` and `sigma . comul . unit = comul . unit`.
    Symmetric,
}

fn g(name: &str) -> Term {
    Term::gen(name)
}

fn x() -> Term {
    Term::id(1)
}

fn sigma() -> Term {
    Term::braid(1, 1)
}

/// Named `(left, right)` pairs before signatures and citations are attached.
type Laws = Vec<(String, Term, Term)>;

fn named(prefix: &str, laws: Vec<(&str, Term, Term)>) -> Laws {
    laws.into_iter()
        .map(|(name, l, r)| (format!("{prefix}.{name}"), l, r))
        .collect()
}

pub fn monoid(prefix: &str, s: Structure) -> Laws {
    let (m, u) = (g(s.mul), g(s.unit));
    named(
        prefix,
        vec![
            (
                "assoc",
                Term::compose(m.clone(), m.clone().tensor(x())),
                Term::compose(m.clone(), x().tensor(m.clone())),
            ),
            ("unit-left", Term::compose(m.clone(), u.clone().tensor(x())), x()),
            ("unit-right", Term::compose(m, x().tensor(u)), x()),
        ],
    )
}

pub fn comonoid(prefix: &str, s: Structure) -> Laws {
    let (d, e) = (g(s.comul), g(s.counit));
    named(
        prefix,
        vec![
            (
                "coassoc",
                Term::compose(d.clone().tensor(x()), d.clone()),
                Term::compose(x().tensor(d.clone()), d.clone()),
            ),
            ("counit-left", Term::compose(e.clone().tensor(x()), d.clone()), x()),
            ("counit-right", Term::compose(x().tensor(e), d), x()),
        ],
    )
}

/// Associativity, units, coassociativity, counits, both Frobenius laws,
/// special, extra, and the two laws of `symmetry`.
pub fn extraspecial_frobenius(prefix: &str, s: Structure, symmetry: Symmetry) -> Laws {
    let (m, u, d, e) = (g(s.mul), g(s.unit), g(s.comul), g(s.counit));
    let mut laws = monoid(prefix, s);
    laws.extend(comonoid(prefix, s));
    let zigzag = Term::compose(d.clone(), m.clone());
    let mut rest = vec![
        (
            "frobenius-left",
            Term::compose(x().tensor(m.clone()), d.clone().tensor(x())),
            zigzag.clone(),
        ),
        (
            "frobenius-right",
            Term::compose(m.clone().tensor(x()), x().tensor(d.clone())),
            zigzag,
        ),
        ("special", Term::compose(m.clone(), d.clone()), x()),
        ("extra", Term::compose(e.clone(), u.clone()), Term::id(0)),
    ];
    match symmetry {
        Symmetry::Commutative => {
            rest.push(("commutative", Term::compose(m.clone(), sigma()), m));
            rest.push(("cocommutative", Term::compose(sigma(), d.clone()), d));
        }
        Symmetry::Symmetric => {
            let pairing = Term::compose(e, m);
            let copairing = Term::compose(d, u);
            rest.push((
                "symmetric",
                Term::compose(pairing.clone(), sigma()),
                pairing,
            ));
            rest.push((
                "cosymmetric",
                Term::compose(sigma(), copairing.clone()),
                copairing,
            ));
        }
    }
    laws.extend(named(prefix, rest));
    laws
}

/// The three weak bimonoid axiom families, five equations in all.
pub fn weak_bimonoid(prefix: &str, s: Structure) -> Laws {
    let (m, u, d, e) = (g(s.mul), g(s.unit), g(s.comul), g(s.counit));
    let middle = Term::id(1).tensor(sigma()).tensor(Term::id(1));
    let pairing = Term::compose(e.clone(), m.clone());
    let copairing = Term::compose(d.clone(), u.clone());
    let triple_pairing = Term::compose(pairing.clone(), m.clone().tensor(x()));
    let triple_copairing = Term::compose(d.clone().tensor(x()), copairing.clone());
    let split = |inner: Term| {
        Term::compose(
            pairing.clone().tensor(pairing.clone()),
            x().tensor(inner).tensor(x()),
        )
    };
    let join = |inner: Term| {
        Term::compose(
            x().tensor(inner).tensor(x()),
            copairing.clone().tensor(copairing.clone()),
        )
    };
    named(
        prefix,
        vec![
            (
                "compatibility",
                Term::compose(d.clone(), m.clone()),
                Term::compose(
                    m.clone().tensor(m.clone()),
                    Term::compose(middle, d.clone().tensor(d.clone())),
                ),
            ),
            ("counit-weak", triple_pairing.clone(), split(d.clone())),
            (
                "counit-weak-opposite",
                triple_pairing,
                split(Term::compose(sigma(), d)),
            ),
            ("unit-weak", triple_copairing.clone(), join(m.clone())),
            (
                "unit-weak-opposite",
                triple_copairing,
                join(Term::compose(m, sigma())),
            ),
        ],
    )
}

/// Monoid, comonoid, and the four strict bimonoid compatibility laws.
pub fn bimonoid(prefix: &str, s: Structure) -> Laws {
    let (m, u, d, e) = (g(s.mul), g(s.unit), g(s.comul), g(s.counit));
    let mut laws = monoid(prefix, s);
    laws.extend(comonoid(prefix, s));
    let mut compatibility = weak_bimonoid(prefix, s);
    compatibility.truncate(1);
    laws.extend(compatibility);
    laws.extend(named(
        prefix,
        vec![
            (
                "counit-mul",
                Term::compose(e.clone(), m.clone()),
                e.clone().tensor(e.clone()),
            ),
            (
                "comul-unit",
                Term::compose(d, u.clone()),
                u.clone().tensor(u.clone()),
            ),
            ("counit-unit", Term::compose(e, u), Term::id(0)),
        ],
    ));
    laws
}

/// `(a . b)^2 = a . b` for a composite written in classical order.
pub fn idempotent(name: &str, factors: &[&str]) -> (String, Term, Term) {
    let composite = factors
        .iter()
        .map(|f| g(f))
        .reduce(Term::compose)
        .expect("nonempty composite");
    (name.to_string(), composite.power(2), composite)
}

fn equal(name: &str, left: Term, right: Term) -> (String, Term, Term) {
    (name.to_string(), left, right)
}

/// The suite header: signature name and default backends.
pub struct Header {
    pub signature: &'static str,
    pub backends: &'static [Backend],
    pub citation: &'static str,
}

pub fn header(suite: &str) -> Option<Header> {
    use Backend::*;
    let (signature, backends, citation): (_, &'static [Backend], _) = match suite {
        "wire-frobenius" => ("corel-wire", &[Corel], "obeying the Frobenius laws"),
        "series" => ("corel-port", &[Corel], "an extraspecial symmetric Frobenius monoid"),
        "parallel" => ("corel-port", &[Corel], "an extraspecial commutative Frobenius monoid"),
        "weak-bimonoid" => ("corel-port", &[Corel], "are weak bimonoids"),
        "lagrel-frobenius" => ("bond", &[Lagrel], "two extraspecial commutative Frobenius monoids"),
        "lagrel-bimonoid" => ("bond", &[Lagrel], "come together as two bimonoids"),
        "lagrel-inverse" => ("bond", &[Lagrel], "mutual inverses"),
        "bondgraph-presentation" => {
            ("bond", &[Corel, Lagrel], "the prop generated by the 8 morphisms")
        }
        "negative-controls" => ("bond", &[Corel, Lagrel], "deliberately absent equations"),
        _ => return None,
    };
    Some(Header {
        signature,
        backends,
        citation,
    })
}

const SERIES: Structure = Structure { mul: "m2", unit: "i2", comul: "d2", counit: "e2" };
const PARALLEL: Structure = Structure { mul: "mu2", unit: "iota2", comul: "delta2", counit: "eps2" };
const ONE_JUNCTION: Structure = Structure { mul: "M", unit: "I", comul: "D", counit: "E" };
const ZERO_JUNCTION: Structure = Structure { mul: "Mp", unit: "Ip", comul: "Dp", counit: "Ep" };

/// Builds a suite from the families. The fixtures under `laws/` are this
/// function's output, and a test keeps the two in sync.
pub fn build_suite(suite: &str) -> Option<Vec<Equation>> {
    let h = header(suite)?;
    let with = |laws: Laws| -> Vec<Equation> {
        laws.into_iter()
            .map(|(name, left, right)| Equation {
                name,
                citation: h.citation.to_string(),
                left,
                right,
                signature: h.signature.to_string(),
                fails_in: Vec::new(),
            })
            .collect()
    };
    let eqs = match suite {
        "wire-frobenius" => with(extraspecial_frobenius(
            "wire",
            Structure { mul: "m", unit: "i", comul: "d", counit: "e" },
            Symmetry::Commutative,
        )),
        "series" => with(extraspecial_frobenius("series", SERIES, Symmetry::Symmetric)),
        "parallel" => with(extraspecial_frobenius("parallel", PARALLEL, Symmetry::Commutative)),
        "weak-bimonoid" => {
            let mut laws = weak_bimonoid(
                "parallel-series",
                Structure { mul: "mu2", unit: "iota2", comul: "d2", counit: "e2" },
            );
            laws.extend(weak_bimonoid(
                "series-parallel",
                Structure { mul: "m2", unit: "i2", comul: "delta2", counit: "eps2" },
            ));
            laws.push(equal("extra.eps2-i2", Term::compose(g("eps2"), g("i2")), Term::id(0)));
            laws.push(equal("extra.e2-iota2", Term::compose(g("e2"), g("iota2")), Term::id(0)));
            laws.push(equal(
                "junction-swap",
                Term::compose(g("m2"), g("delta2")),
                Term::compose(g("mu2"), g("d2")),
            ));
            laws.push(idempotent("idempotent.m2-delta2", &["m2", "delta2"]));
            laws.push(idempotent("idempotent.mu2-d2", &["mu2", "d2"]));
            with(laws)
        }
        "lagrel-frobenius" => {
            let mut laws = extraspecial_frobenius("zero-junction", ZERO_JUNCTION, Symmetry::Commutative);
            laws.extend(extraspecial_frobenius("one-junction", ONE_JUNCTION, Symmetry::Commutative));
            with(laws)
        }
        "lagrel-bimonoid" => {
            let mut laws = bimonoid(
                "zero-one",
                Structure { mul: "Mp", unit: "Ip", comul: "D", counit: "E" },
            );
            laws.extend(bimonoid(
                "one-zero",
                Structure { mul: "M", unit: "I", comul: "Dp", counit: "Ep" },
            ));
            with(laws)
        }
        "lagrel-inverse" => with(vec![
            equal(
                "inverse.zero-first",
                Term::compose(Term::compose(g("M"), g("Dp")), Term::compose(g("Mp"), g("D"))),
                x(),
            ),
            equal(
                "inverse.one-first",
                Term::compose(Term::compose(g("Mp"), g("D")), Term::compose(g("M"), g("Dp"))),
                x(),
            ),
        ]),
        "bondgraph-presentation" => {
            let mut laws = extraspecial_frobenius("one-junction", ONE_JUNCTION, Symmetry::Symmetric);
            laws.extend(extraspecial_frobenius("zero-junction", ZERO_JUNCTION, Symmetry::Symmetric));
            laws.extend(weak_bimonoid(
                "one-zero",
                Structure { mul: "M", unit: "I", comul: "Dp", counit: "Ep" },
            ));
            laws.extend(weak_bimonoid(
                "zero-one",
                Structure { mul: "Mp", unit: "Ip", comul: "D", counit: "E" },
            ));
            laws.push(equal("extra.E-Ip", Term::compose(g("E"), g("Ip")), Term::id(0)));
            laws.push(equal("extra.Ep-I", Term::compose(g("Ep"), g("I")), Term::id(0)));
            laws.push(idempotent("idempotent.Mp-D-M-Dp", &["Mp", "D", "M", "Dp"]));
            laws.push(idempotent("idempotent.M-Dp-Mp-D", &["M", "Dp", "Mp", "D"]));
            with(laws)
        }
        "negative-controls" => {
            let port = |name: &str, left: Term, right: Term, fails_in: Vec<Backend>| Equation {
                name: name.to_string(),
                citation: h.citation.to_string(),
                left,
                right,
                signature: "corel-port".to_string(),
                fails_in,
            };
            let bond = |name: &str, left: Term, right: Term, fails_in: Vec<Backend>| Equation {
                signature: "bond".to_string(),
                ..port(name, left, right, fails_in)
            };
            vec![
                port(
                    "strict.comul-unit",
                    Term::compose(g("d2"), g("iota2")),
                    g("iota2").tensor(g("iota2")),
                    vec![Backend::Corel, Backend::Lagrel],
                ),
                port(
                    "series.commutative",
                    Term::compose(g("m2"), sigma()),
                    g("m2"),
                    vec![Backend::Corel, Backend::Lagrel],
                ),
                bond(
                    "junction-swap",
                    Term::compose(g("M"), g("Dp")),
                    Term::compose(g("Mp"), g("D")),
                    vec![Backend::Lagrel],
                ),
            ]
        }
        _ => unreachable!("every suite with a header has a builder"),
    };
    debug_assert!(SUITES.contains(&suite));
    Some(eqs)
}
