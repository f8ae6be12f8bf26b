use std::fmt;

use num_traits::Zero;

use super::matrix::{self, Row};
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// A subspace of `k^n`, stored as its reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Row>,
}

impl Subspace {
    /// The span of `rows`.
    pub fn new(ambient: usize, rows: Vec<Row>) -> Result<Self> {
        check_rows(ambient, &rows)?;
        Ok(Self::span_unchecked(ambient, rows))
    }

    pub(crate) fn span_unchecked(ambient: usize, mut rows: Vec<Row>) -> Self {
        matrix::rref(&mut rows, ambient);
        Self {
            ambient,
            basis: rows,
        }
    }

    /// The solution set of the homogeneous system `constraints · x = 0`.
    pub fn from_constraints(ambient: usize, constraints: Vec<Row>) -> Result<Self> {
        check_rows(ambient, &constraints)?;
        Ok(Self::span_unchecked(
            ambient,
            matrix::nullspace(&constraints, ambient),
        ))
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit(ambient, i)).collect();
        Self { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Row] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        matrix::rref(&mut rows, self.ambient);
        rows.len() == self.basis.len()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    /// A basis of linear functionals vanishing exactly on this subspace.
    pub fn annihilator(&self) -> Vec<Row> {
        matrix::nullspace(&self.basis, self.ambient)
    }

    /// Reorders coordinates: coordinate `i` of the result is coordinate
    /// `order[i]` of the input.
    pub fn select_coordinates(&self, order: &[usize]) -> Subspace {
        let rows = self
            .basis
            .iter()
            .map(|row| order.iter().map(|&i| row[i].clone()).collect())
            .collect();
        Self::span_unchecked(order.len(), rows)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span[")?;
        for (k, row) in self.basis.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let text: Vec<String> = row.iter().map(rational::format).collect();
            write!(f, "({})", text.join(" "))?;
        }
        write!(f, "] in k^{}", self.ambient)
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Row {
    let mut v = vec![Rational::zero(); n];
    v[i] = rational::int(1);
    v
}

pub(crate) fn check_rows(ambient: usize, rows: &[Row]) -> Result<()> {
    for (row, r) in rows.iter().enumerate() {
        if r.len() != ambient {
            return Err(Error::RowLength {
                row,
                expected: ambient,
                found: r.len(),
            });
        }
    }
    Ok(())
}
