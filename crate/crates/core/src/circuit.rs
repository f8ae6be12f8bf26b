//! Ideal-wire circuits: finite graphs with input and output boundary maps.
//!
//! A circuit is a cospan of finite sets decorated by a graph. Circuits are
//! never compared directly; equality is only ever asked of their underlying
//! corelations.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::corelation::Corelation;
use crate::error::{Error, Result};
use crate::union_find::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCircuit")]
pub struct Circuit {
    #[serde(rename = "nodes")]
    node_count: usize,
    edges: Vec<(usize, usize)>,
    #[serde(rename = "inputs")]
    input_map: Vec<usize>,
    #[serde(rename = "outputs")]
    output_map: Vec<usize>,
}

#[derive(Deserialize)]
struct RawCircuit {
    nodes: usize,
    edges: Vec<(usize, usize)>,
    inputs: Vec<usize>,
    outputs: Vec<usize>,
}

impl TryFrom<RawCircuit> for Circuit {
    type Error = Error;

    fn try_from(raw: RawCircuit) -> Result<Self> {
        Circuit::new(raw.nodes, raw.edges, raw.inputs, raw.outputs)
    }
}

/// Connected components of a circuit's graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMap {
    pub component_count: usize,
    /// Component of each node, numbered by first appearance.
    pub assignment: Vec<usize>,
}

impl Circuit {
    pub fn new(
        node_count: usize,
        edges: Vec<(usize, usize)>,
        input_map: Vec<usize>,
        output_map: Vec<usize>,
    ) -> Result<Self> {
        let endpoints = edges.iter().flat_map(|&(s, t)| [s, t]);
        let boundary = input_map.iter().chain(&output_map).copied();
        if let Some(index) = endpoints.chain(boundary).find(|&x| x >= node_count) {
            return Err(Error::IndexOutOfRange {
                index,
                size: node_count,
            });
        }
        Ok(Self {
            node_count,
            edges,
            input_map,
            output_map,
        })
    }

    /// `n` nodes, each serving as both the `i`th input and `i`th output.
    pub fn identity(n: usize) -> Self {
        Self {
            node_count: n,
            edges: Vec::new(),
            input_map: (0..n).collect(),
            output_map: (0..n).collect(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn inputs(&self) -> &[usize] {
        &self.input_map
    }

    pub fn outputs(&self) -> &[usize] {
        &self.output_map
    }

    /// Glue `first`'s outputs to `self`'s inputs (pushout over the shared
    /// boundary). Nodes reached by the same boundary point are identified.
    pub fn after(&self, first: &Circuit) -> Result<Circuit> {
        if first.output_map.len() != self.input_map.len() {
            return Err(Error::ArityMismatch {
                cod: first.output_map.len(),
                dom: self.input_map.len(),
            });
        }
        let offset = first.node_count;
        let total = offset + self.node_count;
        let mut uf = UnionFind::new(total);
        for (&a, &b) in first.output_map.iter().zip(&self.input_map) {
            uf.union(a, offset + b);
        }
        let (count, labels) = uf.labels();
        let edges = first
            .edges
            .iter()
            .map(|&(s, t)| (labels[s], labels[t]))
            .chain(
                self.edges
                    .iter()
                    .map(|&(s, t)| (labels[offset + s], labels[offset + t])),
            )
            .collect();
        Ok(Circuit {
            node_count: count,
            edges,
            input_map: first.input_map.iter().map(|&x| labels[x]).collect(),
            output_map: self
                .output_map
                .iter()
                .map(|&x| labels[offset + x])
                .collect(),
        })
    }

    /// Stack `self` above `other`.
    pub fn tensor(&self, other: &Circuit) -> Circuit {
        let offset = self.node_count;
        let shift = |xs: &[usize]| xs.iter().map(|&x| x + offset).collect::<Vec<_>>();
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(s, t)| (s + offset, t + offset)));
        let mut input_map = self.input_map.clone();
        input_map.extend(shift(&other.input_map));
        let mut output_map = self.output_map.clone();
        output_map.extend(shift(&other.output_map));
        Circuit {
            node_count: offset + other.node_count,
            edges,
            input_map,
            output_map,
        }
    }

    /// Edge direction is ignored.
    pub fn connected_components(&self) -> ComponentMap {
        let mut uf = UnionFind::new(self.node_count);
        for &(s, t) in &self.edges {
            uf.union(s, t);
        }
        let (component_count, assignment) = uf.labels();
        ComponentMap {
            component_count,
            assignment,
        }
    }

    /// Boundary points land in the components of their nodes; components
    /// that touch no boundary point are discarded.
    pub fn underlying_corelation(&self) -> Corelation {
        let components = self.connected_components();
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); components.component_count];
        for (index, &node) in self.input_map.iter().chain(&self.output_map).enumerate() {
            members[components.assignment[node]].push(index);
        }
        let blocks = members.into_iter().filter(|b| !b.is_empty()).collect();
        Corelation::new(self.input_map.len(), self.output_map.len(), blocks)
            .expect("boundary points partition into components")
    }

    /// Graphviz rendering: nodes as circles, inputs as boxes on the left,
    /// outputs as diamonds on the right.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph circuit {\n  rankdir=LR;\n");
        for n in 0..self.node_count {
            let _ = writeln!(out, "  n{n} [shape=circle, label=\"{n}\"];");
        }
        for (k, _) in self.input_map.iter().enumerate() {
            let _ = writeln!(out, "  in{k} [shape=box, label=\"in {k}\"];");
        }
        for (k, _) in self.output_map.iter().enumerate() {
            let _ = writeln!(out, "  out{k} [shape=diamond, label=\"out {k}\"];");
        }
        for &(s, t) in &self.edges {
            let _ = writeln!(out, "  n{s} -- n{t};");
        }
        for (k, &n) in self.input_map.iter().enumerate() {
            let _ = writeln!(out, "  in{k} -- n{n} [style=dashed];");
        }
        for (k, &n) in self.output_map.iter().enumerate() {
            let _ = writeln!(out, "  n{n} -- out{k} [style=dashed];");
        }
        out.push_str("}\n");
        out
    }
}

impl ComponentMap {
    /// The quotient graph has one node per component and no edges.
    pub fn is_identity_assignment(&self) -> bool {
        self.assignment.iter().copied().eq(0..self.component_count)
    }
}
