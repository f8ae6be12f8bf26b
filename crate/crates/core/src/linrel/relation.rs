//! Linear relations `k^a -> k^b`, stored as subspaces of `k^(a+b)` with
//! domain coordinates first.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::matrix::{self, Row};
use super::rational::{serde_rows, Rational};
use super::subspace::Subspace;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRelation", into = "RawRelation")]
pub struct LinearRelation {
    dom: usize,
    cod: usize,
    space: Subspace,
}

#[derive(Serialize, Deserialize)]
struct RawRelation {
    dom_dim: usize,
    cod_dim: usize,
    #[serde(with = "serde_rows")]
    basis: Vec<Row>,
}

impl TryFrom<RawRelation> for LinearRelation {
    type Error = Error;

    fn try_from(raw: RawRelation) -> Result<Self> {
        LinearRelation::span(raw.dom_dim, raw.cod_dim, raw.basis)
    }
}

impl From<LinearRelation> for RawRelation {
    fn from(r: LinearRelation) -> Self {
        RawRelation {
            dom_dim: r.dom,
            cod_dim: r.cod,
            basis: r.space.basis().to_vec(),
        }
    }
}

impl LinearRelation {
    pub fn from_subspace(dom: usize, cod: usize, space: Subspace) -> Result<Self> {
        if space.ambient() != dom + cod {
            return Err(Error::RowLength {
                row: 0,
                expected: dom + cod,
                found: space.ambient(),
            });
        }
        Ok(Self { dom, cod, space })
    }

    /// The relation spanned by vectors `(x, y)` with `x` in the domain.
    pub fn span(dom: usize, cod: usize, rows: Vec<Row>) -> Result<Self> {
        Ok(Self {
            dom,
            cod,
            space: Subspace::new(dom + cod, rows)?,
        })
    }

    /// The relation cut out by linear equations on `(x, y)`.
    pub fn from_constraints(dom: usize, cod: usize, constraints: Vec<Row>) -> Result<Self> {
        Ok(Self {
            dom,
            cod,
            space: Subspace::from_constraints(dom + cod, constraints)?,
        })
    }

    /// Graph of the linear map with the given matrix (`cod` rows of length
    /// `dom`).
    pub fn graph(dom: usize, cod: usize, matrix: &[Row]) -> Result<Self> {
        if matrix.len() != cod {
            return Err(Error::RowLength {
                row: 0,
                expected: cod,
                found: matrix.len(),
            });
        }
        super::subspace::check_rows(dom, matrix)?;
        let rows = (0..dom)
            .map(|j| {
                let mut v = super::subspace::unit(dom + cod, j);
                for (i, row) in matrix.iter().enumerate() {
                    v[dom + i] = row[j].clone();
                }
                v
            })
            .collect();
        Ok(Self {
            dom,
            cod,
            space: Subspace::span_unchecked(dom + cod, rows),
        })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut v = vec![Rational::zero(); 2 * n];
                v[i] = super::rational::int(1);
                v[n + i] = super::rational::int(1);
                v
            })
            .collect();
        Self {
            dom: n,
            cod: n,
            space: Subspace::span_unchecked(2 * n, rows),
        }
    }

    /// The coordinate swap `k^a (+) k^b -> k^b (+) k^a`.
    pub fn braiding(a: usize, b: usize) -> Self {
        let n = a + b;
        // output i of the swap reads input coordinate (i + a) mod n
        let mut order: Vec<usize> = (0..n).collect();
        order.extend((0..b).map(|j| n + a + j));
        order.extend((0..a).map(|i| n + i));
        Self {
            dom: n,
            cod: n,
            space: Self::identity(n).space.select_coordinates(&order),
        }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, x: &[Rational], y: &[Rational]) -> bool {
        let v: Vec<Rational> = x.iter().chain(y).cloned().collect();
        self.space.contains(&v)
    }

    /// `self . first`: the pairs `(x, z)` with some `y` such that
    /// `(x, y)` is in `first` and `(y, z)` is in `self`.
    ///
    /// Both relations are parameterised by their bases. Matching the middle
    /// coordinates gives one homogeneous system in the stacked coefficients;
    /// each solution maps to an outer pair.
    pub fn after(&self, first: &LinearRelation) -> Result<LinearRelation> {
        if first.cod != self.dom {
            return Err(Error::ArityMismatch {
                cod: first.cod,
                dom: self.dom,
            });
        }
        let (a, b, c) = (first.dom, first.cod, self.cod);
        let r = first.space.basis();
        let s = self.space.basis();
        let (p, q) = (r.len(), s.len());
        // middle coordinate j: sum_i lambda_i r_i[a+j] - sum_k mu_k s_k[j] = 0
        let system: Vec<Row> = (0..b)
            .map(|j| {
                r.iter()
                    .map(|ri| ri[a + j].clone())
                    .chain(s.iter().map(|sk| -sk[j].clone()))
                    .collect()
            })
            .collect();
        let solutions = if b == 0 {
            (0..p + q).map(|i| super::subspace::unit(p + q, i)).collect()
        } else {
            matrix::nullspace(&system, p + q)
        };
        let rows = solutions
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![Rational::zero(); a + c];
                for (lambda, ri) in coeffs[..p].iter().zip(r) {
                    if lambda.is_zero() {
                        continue;
                    }
                    for (slot, x) in v[..a].iter_mut().zip(&ri[..a]) {
                        *slot += lambda * x;
                    }
                }
                for (mu, sk) in coeffs[p..].iter().zip(s) {
                    if mu.is_zero() {
                        continue;
                    }
                    for (slot, z) in v[a..].iter_mut().zip(&sk[b..]) {
                        *slot += mu * z;
                    }
                }
                v
            })
            .collect();
        Ok(Self {
            dom: a,
            cod: c,
            space: Subspace::span_unchecked(a + c, rows),
        })
    }

    /// Classical order: `compose(s, r)` is `r` then `s`.
    pub fn compose(s: &LinearRelation, r: &LinearRelation) -> Result<LinearRelation> {
        s.after(r)
    }

    pub fn then(&self, next: &LinearRelation) -> Result<LinearRelation> {
        next.after(self)
    }

    /// Direct sum, laid out as `(dom_self, dom_other, cod_self, cod_other)`.
    pub fn tensor(&self, other: &LinearRelation) -> LinearRelation {
        let (a, b) = (self.dom, self.cod);
        let (c, d) = (other.dom, other.cod);
        let n = a + b + c + d;
        let mut rows: Vec<Row> = Vec::with_capacity(self.dim() + other.dim());
        for row in self.space.basis() {
            let mut v = vec![Rational::zero(); n];
            v[..a].clone_from_slice(&row[..a]);
            v[a + c..a + c + b].clone_from_slice(&row[a..]);
            rows.push(v);
        }
        for row in other.space.basis() {
            let mut v = vec![Rational::zero(); n];
            v[a..a + c].clone_from_slice(&row[..c]);
            v[a + c + b..].clone_from_slice(&row[c..]);
            rows.push(v);
        }
        Self {
            dom: a + c,
            cod: b + d,
            space: Subspace::span_unchecked(n, rows),
        }
    }

    /// Inputs and outputs exchanged.
    pub fn dagger(&self) -> LinearRelation {
        let order: Vec<usize> = (self.dom..self.dom + self.cod).chain(0..self.dom).collect();
        Self {
            dom: self.cod,
            cod: self.dom,
            space: self.space.select_coordinates(&order),
        }
    }

    /// Relabels coordinates: result coordinate `i` is input coordinate
    /// `order[i]`. The first `dom` entries of the result are the domain.
    pub fn reorder(&self, dom: usize, cod: usize, order: &[usize]) -> Result<LinearRelation> {
        if order.len() != self.dom + self.cod || dom + cod != order.len() {
            return Err(Error::RowLength {
                row: 0,
                expected: self.dom + self.cod,
                found: order.len(),
            });
        }
        Ok(Self {
            dom,
            cod,
            space: self.space.select_coordinates(order),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && *self == Self::identity(self.dom)
    }
}

impl fmt::Display for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k^{} -> k^{}: {}", self.dom, self.cod, self.space)
    }
}
