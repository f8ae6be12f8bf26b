//! Enumeration of the corelations reachable from the eight port generators
//! by terms of bounded size.
//!
//! Terms are combined by value: the corelations reachable with exactly `s`
//! leaves are obtained by composing or tensoring the values reachable with
//! `i` and `s - i` leaves. Because evaluation respects composition and
//! tensor, this visits every value of every term without building the
//! terms themselves. Intermediate values are bounded to `max_ports` ports
//! on either side.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bondgraph::{eval_corel, Signature, Term};
use crate::corelation::Corelation;
use crate::dsl;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reached {
    pub corelation: Corelation,
    /// Fewest leaves of any term reaching this corelation.
    pub size: usize,
    /// A smallest term reaching it, in the infix language.
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub ports_in: usize,
    pub ports_out: usize,
    pub max_term_size: usize,
    pub max_ports: usize,
    pub count: usize,
    /// In canonical corelation order.
    pub corelations: Vec<Reached>,
}

pub fn default_max_ports(ports_in: usize, ports_out: usize) -> usize {
    ports_in.max(ports_out).max(2) + 1
}

/// Values first reached with exactly `size` leaves, keyed by value.
type Layer = BTreeMap<Corelation, Term>;

fn leaves(sig: &Signature, max_ports: usize) -> Vec<Term> {
    let mut out: Vec<Term> = sig.generators().map(|(g, _)| Term::gen(g)).collect();
    out.extend((0..=max_ports).map(Term::id));
    for a in 0..=max_ports {
        for b in 0..=max_ports - a {
            out.push(Term::braid(a, b));
        }
    }
    out
}

pub fn enumerate(
    ports_in: usize,
    ports_out: usize,
    max_term_size: usize,
    max_ports: Option<usize>,
) -> Enumeration {
    let sig = Signature::corel_port();
    let max_ports = max_ports
        .unwrap_or_else(|| default_max_ports(ports_in, ports_out))
        .max(ports_in)
        .max(ports_out);
    let max_wires = 2 * max_ports;
    let fits = |c: &Corelation| c.dom() <= max_wires && c.cod() <= max_wires;

    let mut seen: BTreeMap<Corelation, (usize, Term)> = BTreeMap::new();
    let mut layers: Vec<Layer> = vec![Layer::new()];
    for size in 1..=max_term_size {
        let mut layer = Layer::new();
        let offer = |value: Corelation, term: Term, layer: &mut Layer| {
            if fits(&value) && !seen.contains_key(&value) && !layer.contains_key(&value) {
                layer.insert(value, term);
            }
        };
        if size == 1 {
            for t in leaves(&sig, max_ports) {
                let value = eval_corel(&t, &sig).expect("leaves are well typed");
                offer(value, t, &mut layer);
            }
        }
        for i in 1..size {
            let j = size - i;
            for (f, tf) in &layers[i] {
                for (g, tg) in &layers[j] {
                    if let Ok(h) = g.after(f) {
                        offer(h, tf.clone().then(tg.clone()), &mut layer);
                    }
                    if f.dom() + g.dom() <= max_wires && f.cod() + g.cod() <= max_wires {
                        offer(f.tensor(g), tf.clone().tensor(tg.clone()), &mut layer);
                    }
                }
            }
        }
        for (value, term) in &layer {
            seen.insert(value.clone(), (size, term.clone()));
        }
        layers.push(layer);
    }

    let corelations: Vec<Reached> = seen
        .into_iter()
        .filter(|(c, _)| c.dom() == 2 * ports_in && c.cod() == 2 * ports_out)
        .map(|(corelation, (size, term))| Reached {
            corelation,
            size,
            witness: dsl::print(&term),
        })
        .collect();
    Enumeration {
        ports_in,
        ports_out,
        max_term_size,
        max_ports,
        count: corelations.len(),
        corelations,
    }
}
