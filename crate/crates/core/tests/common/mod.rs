//! Test-only oracles, written without the library's union-find, row
//! reduction, or composition code.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use circsem::{Circuit, Corelation, LinearRelation};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Every set partition of `0..n`, as restricted growth strings turned into
/// blocks.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn go(k: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k == labels.len() {
            let blocks = (0..max)
                .map(|b| (0..labels.len()).filter(|&i| labels[i] == b).collect())
                .collect();
            out.push(blocks);
            return;
        }
        for b in 0..=max {
            labels[k] = b;
            go(k + 1, max.max(b + 1), labels, out);
        }
    }
    go(0, 0, &mut labels, &mut out);
    out
}

pub fn all_corelations(dom: usize, cod: usize) -> Vec<Corelation> {
    set_partitions(dom + cod)
        .into_iter()
        .map(|blocks| Corelation::new(dom, cod, blocks).expect("a partition"))
        .collect()
}

/// Composite of `f: A -> B` then `g: B -> C` by the reflexive, symmetric,
/// transitive closure of "same block in f or in g" on `A + B + C`, computed
/// with a boolean matrix and Warshall's algorithm.
pub fn closure_compose(g: &Corelation, f: &Corelation) -> Corelation {
    let (a, b, c) = (f.dom(), f.cod(), g.cod());
    assert_eq!(b, g.dom());
    let n = a + b + c;
    let mut related = vec![vec![false; n]; n];
    for i in 0..n {
        related[i][i] = true;
    }
    let mut link = |block: &[usize], shift: usize| {
        for &x in block {
            for &y in block {
                related[x + shift][y + shift] = true;
            }
        }
    };
    for block in f.blocks() {
        link(block, 0);
    }
    for block in g.blocks() {
        link(block, a);
    }
    for k in 0..n {
        for i in 0..n {
            if related[i][k] {
                for j in 0..n {
                    if related[k][j] {
                        related[i][j] = true;
                    }
                }
            }
        }
    }
    // outer element e of A + C sits at position e (inputs) or e + b (outputs)
    let outer: Vec<usize> = (0..a).chain(a + b..n).collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (e, &p) in outer.iter().enumerate() {
        match blocks.iter_mut().find(|blk| related[outer[blk[0]]][p]) {
            Some(blk) => blk.push(e),
            None => blocks.push(vec![e]),
        }
    }
    Corelation::new(a, c, blocks).expect("closure classes partition the boundary")
}

pub fn random_corelation(rng: &mut impl Rng, dom: usize, cod: usize) -> Corelation {
    let n = dom + cod;
    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n.max(1))).collect();
    let blocks = (0..n)
        .map(|l| (0..n).filter(|&i| labels[i] == l).collect::<Vec<_>>())
        .filter(|b| !b.is_empty())
        .collect();
    Corelation::new(dom, cod, blocks).expect("labels partition the boundary")
}

pub fn random_circuit(rng: &mut impl Rng, inputs: usize, outputs: usize) -> Circuit {
    let nodes = rng.gen_range(1..=5);
    let edges = (0..rng.gen_range(0..=6))
        .map(|_| (rng.gen_range(0..nodes), rng.gen_range(0..nodes)))
        .collect();
    let pick = |rng: &mut _, k| (0..k).map(|_| Rng::gen_range(rng, 0..nodes)).collect();
    let input_map = pick(rng, inputs);
    let output_map = pick(rng, outputs);
    Circuit::new(nodes, edges, input_map, output_map).expect("indices in range")
}

/// Reduced row echelon form by plain Gauss-Jordan elimination, returning
/// the nonzero rows.
pub fn reduce(mut rows: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x = &*x / &pivot;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..width {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// Constraints on `(x, z)` for the composite of the relations cut out by
/// `first` on `(x, y)` and `second` on `(y, z)`: stack both systems over
/// `(y, x, z)`, eliminate with `y` first, and keep the rows free of `y`.
pub fn eliminate_compose(
    first: &[Vec<Q>],
    second: &[Vec<Q>],
    a: usize,
    b: usize,
    c: usize,
) -> Vec<Vec<Q>> {
    let mut stacked = Vec::new();
    for row in first {
        let mut r = row[a..a + b].to_vec();
        r.extend_from_slice(&row[..a]);
        r.extend(std::iter::repeat(q(0)).take(c));
        stacked.push(r);
    }
    for row in second {
        let mut r = row[..b].to_vec();
        r.extend(std::iter::repeat(q(0)).take(a));
        r.extend_from_slice(&row[b..b + c]);
        stacked.push(r);
    }
    if stacked.is_empty() {
        return Vec::new();
    }
    reduce(stacked)
        .into_iter()
        .filter(|r| r[..b].iter().all(Zero::is_zero))
        .map(|r| r[b..].to_vec())
        .collect()
}

/// True when `rel` is exactly the solution set of `constraints`: every
/// basis vector satisfies them and the dimensions agree.
pub fn matches_constraints(rel: &LinearRelation, constraints: &[Vec<Q>]) -> bool {
    let width = rel.dom() + rel.cod();
    let rank = if constraints.is_empty() { 0 } else { reduce(constraints.to_vec()).len() };
    let satisfied = rel.space().basis().iter().all(|v| {
        constraints.iter().all(|c| {
            c.iter()
                .zip(v)
                .fold(q(0), |acc, (x, y)| acc + x * y)
                .is_zero()
        })
    });
    satisfied && rel.dim() == width - rank
}

/// Constraint rows built from `(coordinate, coefficient)` pairs.
pub fn constraint(width: usize, terms: &[(usize, i64)]) -> Vec<Q> {
    let mut row = vec![q(0); width];
    for &(i, coeff) in terms {
        row[i] += q(coeff);
    }
    row
}

pub fn random_rational(rng: &mut impl Rng) -> Q {
    let num = rng.gen_range(-3i64..=3);
    let den = rng.gen_range(1i64..=3);
    Q::new(num.into(), den.into())
}

pub fn random_constraints(rng: &mut impl Rng, width: usize) -> Vec<Vec<Q>> {
    let count = rng.gen_range(0..=width);
    (0..count)
        .map(|_| (0..width).map(|_| random_rational(rng)).collect())
        .collect()
}
