//! Row reduction over the rationals.

use num_traits::{One, Zero};

use super::rational::Rational;

pub type Row = Vec<Rational>;

/// Reduced row-echelon form with zero rows removed. Returns the pivot
/// column of each remaining row.
pub fn rref(rows: &mut Vec<Row>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = Rational::one() / &rows[next][col];
        for x in rows[next].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    pivots
}

/// Basis of `{x : A x = 0}` for the matrix with the given rows.
pub fn nullspace(rows: &[Row], width: usize) -> Vec<Row> {
    let mut reduced = rows.to_vec();
    let pivots = rref(&mut reduced, width);
    let mut is_pivot = vec![false; width];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..width)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); width];
            v[free] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .fold(Rational::zero(), |acc, x| acc + x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linrel::rational::{frac, int};

    fn rows(data: &[&[i64]]) -> Vec<Row> {
        data.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn reduces_and_drops_zero_rows() {
        let mut m = rows(&[&[2, 4, 2], &[1, 2, 1], &[0, 0, 3]]);
        let pivots = rref(&mut m, 3);
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(m, rows(&[&[1, 2, 0], &[0, 0, 1]]));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = rows(&[&[1, 1, 1, 0], &[0, 2, 0, 1]]);
        let ns = nullspace(&m, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &m {
                assert!(dot(r, v).is_zero());
            }
        }
        assert_eq!(ns[0], vec![int(-1), int(0), int(1), int(0)]);
        assert_eq!(ns[1], vec![frac(1, 2), frac(-1, 2), int(0), int(1)]);
    }
}
