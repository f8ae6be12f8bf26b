//! The transformation from effort/flow to potential/current semantics, and
//! a checker for its naturality square.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::eval::{eval_lagrel, eval_potential_current};
use super::random::random_term;
use super::signature::{Interpretation, Signature};
use super::term::Term;
use crate::error::{Error, Result};
use crate::linrel::matrix::Row;
use crate::linrel::rational::int;
use crate::linrel::LinearRelation;

/// One bond `(V, I)` against its two terminals `(phi1, I1, phi2, I2)`:
/// `V = phi2 - phi1` and `I = I1 = -I2`.
fn alpha_one() -> LinearRelation {
    let r = |xs: [i64; 6]| -> Row { xs.iter().map(|&x| int(x)).collect() };
    LinearRelation::from_constraints(
        2,
        4,
        vec![
            r([1, 0, 1, 0, -1, 0]),
            r([0, 1, 0, -1, 0, 0]),
            r([0, 1, 0, 0, 0, 1]),
        ],
    )
    .expect("six coordinates")
}

/// `alpha_n : k^(2n) -> k^(4n)`, the direct sum of `n` copies of the
/// single-bond relation.
pub fn alpha(n: usize) -> LinearRelation {
    let one = alpha_one();
    (0..n).fold(LinearRelation::identity(0), |acc, _| acc.tensor(&one))
}

#[derive(Debug, Clone, Serialize)]
pub struct NaturalityReport {
    pub term: String,
    pub dom: usize,
    pub cod: usize,
    /// `alpha_n . F(t)`
    pub left: LinearRelation,
    /// `KiG(t) . alpha_m`
    pub right: LinearRelation,
    pub equal: bool,
    /// Whether `alpha_n^† . KiG(t) . alpha_m = F(t)`.
    pub pulled_back: bool,
    /// Basis vectors of `left` missing from `right`, and vice versa.
    #[serde(with = "crate::linrel::rational::serde_rows")]
    pub left_only: Vec<Row>,
    #[serde(with = "crate::linrel::rational::serde_rows")]
    pub right_only: Vec<Row>,
}

/// Compares `alpha_n . F(t)` with `KiG(t) . alpha_m` for a bond term
/// `t : m -> n`.
pub fn check_naturality(t: &Term, sig: &Signature) -> Result<NaturalityReport> {
    if sig.interpretation() != Interpretation::Bond {
        return Err(Error::Uninterpretable {
            signature: sig.name().to_string(),
            backend: "naturality".to_string(),
        });
    }
    let (m, n) = t.typecheck(sig)?;
    let effort_flow = eval_lagrel(t, sig)?;
    let potential_current = eval_potential_current(t, sig)?;
    let (alpha_m, alpha_n) = (alpha(m), alpha(n));
    let left = alpha_n.after(&effort_flow)?;
    let right = potential_current.after(&alpha_m)?;
    let pulled_back = alpha_n.dagger().after(&right)? == effort_flow;
    let missing = |a: &LinearRelation, b: &LinearRelation| -> Vec<Row> {
        a.space()
            .basis()
            .iter()
            .filter(|v| !b.space().contains(v))
            .cloned()
            .collect()
    };
    Ok(NaturalityReport {
        term: t.to_string(),
        dom: m,
        cod: n,
        equal: left == right,
        pulled_back,
        left_only: missing(&left, &right),
        right_only: missing(&right, &left),
        left,
        right,
    })
}

/// Sizes and seeds of the terms visited by [`sweep`]: term `k` has size
/// drawn uniformly from `1..=max_size` and its own derived seed.
pub fn sweep_plan(count: usize, max_size: usize, seed: u64) -> Vec<(usize, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (rng.gen_range(1..=max_size.max(1)), rng.gen()))
        .collect()
}

/// Checks naturality on `count` random bond terms of size at most
/// `max_size`, deterministically in `seed`.
pub fn sweep(count: usize, max_size: usize, seed: u64) -> Vec<NaturalityReport> {
    let bond = Signature::bond();
    sweep_plan(count, max_size, seed)
        .into_iter()
        .map(|(size, term_seed)| {
            let t = random_term(size, term_seed, &bond);
            check_naturality(&t, &bond).expect("random terms are well typed")
        })
        .collect()
}
