use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::signature::Signature;
use super::term::Term;

/// Largest domain picked for the outermost term.
const MAX_START_DOMAIN: usize = 3;

/// A well-typed term with exactly `size` leaves, determined by `seed`.
///
/// Terms are grown top-down from a chosen domain: a composite splits its
/// leaf budget between a first factor on that domain and a second factor on
/// the first factor's codomain; a tensor splits both the budget and the
/// domain. Leaves are generators, identities, or braidings on the required
/// domain.
pub fn random_term(size: usize, seed: u64, sig: &Signature) -> Term {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dom = rng.gen_range(0..=MAX_START_DOMAIN);
    grow(size.max(1), dom, sig, &mut rng)
}

fn grow(size: usize, dom: usize, sig: &Signature, rng: &mut ChaCha8Rng) -> Term {
    if size == 1 {
        return leaf(dom, sig, rng);
    }
    let split = rng.gen_range(1..size);
    if rng.gen_bool(0.5) {
        let first = grow(split, dom, sig, rng);
        let (_, mid) = first.typecheck(sig).expect("grown terms are well typed");
        let second = grow(size - split, mid, sig, rng);
        first.then(second)
    } else {
        let left_dom = rng.gen_range(0..=dom);
        let left = grow(split, left_dom, sig, rng);
        let right = grow(size - split, dom - left_dom, sig, rng);
        left.tensor(right)
    }
}

fn leaf(dom: usize, sig: &Signature, rng: &mut ChaCha8Rng) -> Term {
    let mut options: Vec<Term> = sig
        .generators()
        .filter(|&(_, (d, _))| d == dom)
        .map(|(g, _)| Term::gen(g))
        .collect();
    // weight generators above the structural leaves
    options.extend(options.clone());
    options.push(Term::id(dom));
    options.extend((1..dom).map(|a| Term::braid(a, dom - a)));
    options.choose(rng).cloned().expect("identity is always available")
}
