use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// How a signature's generators and objects are read in the semantic
/// backends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Interpretation {
    /// Object `n` is `n` wires; generators are `m, i, d, e`.
    Wire,
    /// Object `n` is `n` ports of two wires each; generators are the eight
    /// port corelations.
    Port,
    /// Bond graphs: object `n` is `n` bonds, read as `2n` wires by `G` and
    /// as `n` effort/flow pairs by `F`.
    Bond,
    /// No built-in semantics; only typechecking is available.
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    name: String,
    generators: BTreeMap<String, (usize, usize)>,
    duals: BTreeMap<String, String>,
    interpretation: Interpretation,
}

impl Signature {
    /// A signature with no semantics attached.
    pub fn new(name: &str, generators: impl IntoIterator<Item = (String, (usize, usize))>) -> Self {
        Self {
            name: name.to_string(),
            generators: generators.into_iter().collect(),
            duals: BTreeMap::new(),
            interpretation: Interpretation::Free,
        }
    }

    fn built_in(
        name: &str,
        interpretation: Interpretation,
        table: &[(&str, (usize, usize))],
        dual_pairs: &[(&str, &str)],
    ) -> Self {
        let generators = table
            .iter()
            .map(|&(g, arity)| (g.to_string(), arity))
            .collect();
        let mut duals = BTreeMap::new();
        for &(a, b) in dual_pairs {
            duals.insert(a.to_string(), b.to_string());
            duals.insert(b.to_string(), a.to_string());
        }
        Self {
            name: name.to_string(),
            generators,
            duals,
            interpretation,
        }
    }

    /// Series junctions `M, I, D, E` and parallel junctions `Mp, Ip, Dp, Ep`.
    pub fn bond() -> Self {
        Self::built_in(
            "bond",
            Interpretation::Bond,
            &[
                ("M", (2, 1)),
                ("I", (0, 1)),
                ("D", (1, 2)),
                ("E", (1, 0)),
                ("Mp", (2, 1)),
                ("Ip", (0, 1)),
                ("Dp", (1, 2)),
                ("Ep", (1, 0)),
            ],
            &[("M", "D"), ("I", "E"), ("Mp", "Dp"), ("Ip", "Ep")],
        )
    }

    pub fn corel_wire() -> Self {
        Self::built_in(
            "corel-wire",
            Interpretation::Wire,
            &[("m", (2, 1)), ("i", (0, 1)), ("d", (1, 2)), ("e", (1, 0))],
            &[("m", "d"), ("i", "e")],
        )
    }

    /// Arities counted in ports.
    pub fn corel_port() -> Self {
        Self::built_in(
            "corel-port",
            Interpretation::Port,
            &[
                ("m2", (2, 1)),
                ("i2", (0, 1)),
                ("d2", (1, 2)),
                ("e2", (1, 0)),
                ("mu2", (2, 1)),
                ("iota2", (0, 1)),
                ("delta2", (1, 2)),
                ("eps2", (1, 0)),
            ],
            &[("m2", "d2"), ("i2", "e2"), ("mu2", "delta2"), ("iota2", "eps2")],
        )
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "bond" => Ok(Self::bond()),
            "corel-wire" => Ok(Self::corel_wire()),
            "corel-port" => Ok(Self::corel_port()),
            other => Err(Error::UnknownSignature(other.to_string())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn interpretation(&self) -> Interpretation {
        self.interpretation
    }

    pub fn generators(&self) -> impl Iterator<Item = (&str, (usize, usize))> {
        self.generators.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn arity(&self, generator: &str) -> Result<(usize, usize)> {
        self.generators
            .get(generator)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(generator.to_string()))
    }

    /// Canonical generator name for an identifier, accepting a trailing
    /// prime as an alias for the `p` suffix (`M'` for `Mp`).
    pub fn resolve(&self, ident: &str) -> Result<String> {
        if self.generators.contains_key(ident) {
            return Ok(ident.to_string());
        }
        if let Some(stem) = ident.strip_suffix('\'') {
            let alias = format!("{stem}p");
            if self.generators.contains_key(&alias) {
                return Ok(alias);
            }
        }
        Err(Error::UnknownGenerator(ident.to_string()))
    }

    /// The generator's vertical reflection, when the signature records one.
    pub fn dual(&self, generator: &str) -> Option<&str> {
        self.duals.get(generator).map(String::as_str)
    }
}
