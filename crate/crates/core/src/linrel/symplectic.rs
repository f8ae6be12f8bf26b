//! The pair symplectic form on `k^(2n)` and Lagrangian checks.
//!
//! Coordinates come in consecutive pairs `(u, v)`. On one pair the form is
//! `omega((u, v), (u', v')) = u' v - u v'`; a conjugate pair carries the
//! negated form.

use num_traits::Zero;

use super::matrix::{self, Row};
use super::rational::Rational;
use super::relation::LinearRelation;
use super::subspace::Subspace;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticLayout {
    conjugate: Vec<bool>,
}

impl SymplecticLayout {
    pub fn standard(pairs: usize) -> Self {
        Self {
            conjugate: vec![false; pairs],
        }
    }

    pub fn conjugate(pairs: usize) -> Self {
        Self {
            conjugate: vec![true; pairs],
        }
    }

    /// `conj(k^dom) (+) k^cod`, the space a relation `k^dom -> k^cod` lives in.
    pub fn for_relation(dom: usize, cod: usize) -> Result<Self> {
        for d in [dom, cod] {
            if d % 2 != 0 {
                return Err(Error::OddDimension(d));
            }
        }
        let mut conjugate = vec![true; dom / 2];
        conjugate.extend(std::iter::repeat(false).take(cod / 2));
        Ok(Self { conjugate })
    }

    pub fn pair_count(&self) -> usize {
        self.conjugate.len()
    }

    pub fn dim(&self) -> usize {
        2 * self.conjugate.len()
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Result<Rational> {
        if u.len() != self.dim() || v.len() != self.dim() {
            return Err(Error::FormLength {
                left: u.len(),
                right: v.len(),
                dim: self.dim(),
            });
        }
        let mut total = Rational::zero();
        for (k, &conj) in self.conjugate.iter().enumerate() {
            let (p, q) = (2 * k, 2 * k + 1);
            let term = &v[p] * &u[q] - &u[p] * &v[q];
            if conj {
                total -= term;
            } else {
                total += term;
            }
        }
        Ok(total)
    }

    /// The functional `v -> omega(v, u)` as a coefficient row.
    fn pairing_row(&self, u: &[Rational]) -> Row {
        let mut row = vec![Rational::zero(); self.dim()];
        for (k, &conj) in self.conjugate.iter().enumerate() {
            let (p, q) = (2 * k, 2 * k + 1);
            // omega(v, u) = u_p v_q - v_p u_q on a standard pair
            let (cp, cq) = (-u[q].clone(), u[p].clone());
            if conj {
                row[p] = -cp;
                row[q] = -cq;
            } else {
                row[p] = cp;
                row[q] = cq;
            }
        }
        row
    }

    /// `W^perp = { v : omega(v, u) = 0 for all u in W }`.
    pub fn orthogonal(&self, w: &Subspace) -> Result<Subspace> {
        if w.ambient() != self.dim() {
            return Err(Error::FormLength {
                left: w.ambient(),
                right: w.ambient(),
                dim: self.dim(),
            });
        }
        let rows: Vec<Row> = w.basis().iter().map(|u| self.pairing_row(u)).collect();
        Ok(Subspace::span_unchecked(
            self.dim(),
            matrix::nullspace(&rows, self.dim()),
        ))
    }

    pub fn is_isotropic(&self, w: &Subspace) -> Result<bool> {
        let basis = w.basis();
        for (i, u) in basis.iter().enumerate() {
            for v in &basis[i + 1..] {
                if !self.eval(u, v)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Isotropic of half the ambient dimension, which is `W = W^perp`.
    pub fn is_lagrangian(&self, w: &Subspace) -> Result<bool> {
        Ok(2 * w.dim() == self.dim() && self.is_isotropic(w)?)
    }
}

impl LinearRelation {
    /// Whether this relation is a Lagrangian subspace of
    /// `conj(k^dom) (+) k^cod`.
    pub fn is_lagrangian(&self) -> Result<bool> {
        SymplecticLayout::for_relation(self.dom(), self.cod())?.is_lagrangian(self.space())
    }
}
