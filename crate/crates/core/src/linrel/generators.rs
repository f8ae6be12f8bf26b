//! The duplicative and additive Frobenius structures on `k`, and the
//! junction relations on effort/flow pairs built from them.

use super::rational::int;
use super::relation::LinearRelation;
use super::subspace::Subspace;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarGenerator {
    /// `k -> k^2`, `x -> (x, x)`
    Dup,
    /// `k -> 0`
    Del,
    /// `k^2 -> k`, `{(x, x, x)}`
    Codup,
    /// `0 -> k`, all of `k`
    Codel,
    /// `k^2 -> k`, `(x, y) -> x + y`
    Add,
    /// `0 -> k`, `{0}`
    Zero,
    /// `k -> k^2`, `{(x + y, x, y)}`
    Coadd,
    /// `k -> 0`, `{0}`
    Cozero,
}

impl ScalarGenerator {
    pub const ALL: [ScalarGenerator; 8] = [
        Self::Dup,
        Self::Del,
        Self::Codup,
        Self::Codel,
        Self::Add,
        Self::Zero,
        Self::Coadd,
        Self::Cozero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Dup => "dup",
            Self::Del => "del",
            Self::Codup => "codup",
            Self::Codel => "codel",
            Self::Add => "add",
            Self::Zero => "zero",
            Self::Coadd => "coadd",
            Self::Cozero => "cozero",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|g| g.name() == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn relation(self) -> LinearRelation {
        let one = || vec![int(1)];
        match self {
            Self::Dup => LinearRelation::graph(1, 2, &[one(), one()]).unwrap(),
            Self::Del => LinearRelation::graph(1, 0, &[]).unwrap(),
            Self::Add => LinearRelation::graph(2, 1, &[vec![int(1), int(1)]]).unwrap(),
            Self::Zero => LinearRelation::from_subspace(0, 1, Subspace::zero(1)).unwrap(),
            Self::Codup => Self::Dup.relation().dagger(),
            Self::Codel => Self::Del.relation().dagger(),
            Self::Coadd => Self::Add.relation().dagger(),
            Self::Cozero => Self::Zero.relation().dagger(),
        }
    }
}

/// Generators on `k (+) k` with interleaved effort/flow coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairGenerator {
    /// `+ (+) codup`: efforts add, flows agree.
    M,
    /// `zero (+) codel`: effort zero.
    I,
    /// `coadd (+) dup`
    D,
    /// `cozero (+) del`
    E,
    /// `codup (+) +`: efforts agree, flows add.
    Mp,
    /// `codel (+) zero`: flow zero.
    Ip,
    /// `dup (+) coadd`
    Dp,
    /// `del (+) cozero`
    Ep,
    /// Swap of two effort/flow pairs.
    Braid,
}

impl PairGenerator {
    pub const ALL: [PairGenerator; 9] = [
        Self::M,
        Self::I,
        Self::D,
        Self::E,
        Self::Mp,
        Self::Ip,
        Self::Dp,
        Self::Ep,
        Self::Braid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::M => "M",
            Self::I => "I",
            Self::D => "D",
            Self::E => "E",
            Self::Mp => "Mp",
            Self::Ip => "Ip",
            Self::Dp => "Dp",
            Self::Ep => "Ep",
            Self::Braid => "braid",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|g| g.name() == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// The effort and flow components.
    pub fn components(self) -> Option<(ScalarGenerator, ScalarGenerator)> {
        use ScalarGenerator::*;
        Some(match self {
            Self::M => (Add, Codup),
            Self::I => (Zero, Codel),
            Self::D => (Coadd, Dup),
            Self::E => (Cozero, Del),
            Self::Mp => (Codup, Add),
            Self::Ip => (Codel, Zero),
            Self::Dp => (Dup, Coadd),
            Self::Ep => (Del, Cozero),
            Self::Braid => return None,
        })
    }

    pub fn relation(self) -> LinearRelation {
        match self.components() {
            Some((effort, flow)) => pair_sum(&effort.relation(), &flow.relation()).unwrap(),
            None => LinearRelation::braiding(2, 2),
        }
    }
}

/// Puts an effort relation and a flow relation of the same arity side by
/// side, interleaving coordinates so that each port reads `(effort, flow)`.
pub fn pair_sum(effort: &LinearRelation, flow: &LinearRelation) -> Result<LinearRelation> {
    if effort.dom() != flow.dom() || effort.cod() != flow.cod() {
        return Err(Error::ArityMismatch {
            cod: flow.dom(),
            dom: effort.dom(),
        });
    }
    let (a, b) = (effort.dom(), effort.cod());
    // tensor layout: (effort dom, flow dom, effort cod, flow cod)
    let summed = effort.tensor(flow);
    let mut order = Vec::with_capacity(2 * (a + b));
    for i in 0..a {
        order.push(i);
        order.push(a + i);
    }
    for j in 0..b {
        order.push(2 * a + j);
        order.push(2 * a + b + j);
    }
    summed.reorder(2 * a, 2 * b, &order)
}
