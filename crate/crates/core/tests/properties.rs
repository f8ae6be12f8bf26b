mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use circsem::bondgraph::{black_box, eval_corel, eval_lagrel, random_term, Signature, Term};
use circsem::{dsl, Corelation, LinearRelation, Subspace, SymplecticLayout};
use common::*;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random relation `dom -> cod` cut out by random rational constraints.
fn random_relation(r: &mut ChaCha8Rng, dom: usize, cod: usize) -> LinearRelation {
    LinearRelation::from_constraints(dom, cod, random_constraints(r, dom + cod)).unwrap()
}

/// A random Lagrangian relation between pair spaces: the black box of a
/// random corelation.
fn random_lagrangian(r: &mut ChaCha8Rng, ports_in: usize, ports_out: usize) -> LinearRelation {
    black_box(&random_corelation(r, ports_in, ports_out))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn corelation_category_laws(seed: u64, a in 0usize..4, b in 0usize..4, c in 0usize..4, d in 0usize..4) {
        let mut r = rng(seed);
        let f = random_corelation(&mut r, a, b);
        let g = random_corelation(&mut r, b, c);
        let h = random_corelation(&mut r, c, d);
        let left = h.after(&g.after(&f).unwrap()).unwrap();
        let right = h.after(&g).unwrap().after(&f).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(Corelation::identity(b).after(&f).unwrap(), f.clone());
        prop_assert_eq!(f.after(&Corelation::identity(a)).unwrap(), f.clone());
        prop_assert_eq!(g.after(&f).unwrap().dagger(), f.dagger().after(&g.dagger()).unwrap());
        prop_assert_eq!(f.dagger().dagger(), f.clone());
        prop_assert!(g.after(&f).unwrap().blocks().iter().all(|blk| !blk.is_empty()));
    }

    #[test]
    fn corelation_monoidal_laws(seed: u64, m in 0usize..3, n in 0usize..3, p in 0usize..3, q in 0usize..3, k in 0usize..3) {
        let mut r = rng(seed);
        let f = random_corelation(&mut r, m, n);
        let f2 = random_corelation(&mut r, n, k);
        let g = random_corelation(&mut r, p, q);
        let g2 = random_corelation(&mut r, q, k);
        prop_assert_eq!(
            f2.after(&f).unwrap().tensor(&g2.after(&g).unwrap()),
            f2.tensor(&g2).after(&f.tensor(&g)).unwrap()
        );
        prop_assert_eq!(
            Corelation::braiding(n, q).after(&f.tensor(&g)).unwrap(),
            g.tensor(&f).after(&Corelation::braiding(m, p)).unwrap()
        );
        prop_assert!(Corelation::braiding(m, p).then(&Corelation::braiding(p, m)).unwrap().is_identity());
    }

    #[test]
    fn circuit_functor(seed: u64, a in 0usize..4, b in 0usize..4, c in 0usize..4) {
        let mut r = rng(seed);
        let f = random_circuit(&mut r, a, b);
        let g = random_circuit(&mut r, b, c);
        prop_assert_eq!(
            g.after(&f).unwrap().underlying_corelation(),
            g.underlying_corelation().after(&f.underlying_corelation()).unwrap()
        );
        prop_assert_eq!(
            f.tensor(&g).underlying_corelation(),
            f.underlying_corelation().tensor(&g.underlying_corelation())
        );
    }

    #[test]
    fn relation_category_laws(seed: u64, a in 0usize..3, b in 0usize..3, c in 0usize..3, d in 0usize..3) {
        let mut r = rng(seed);
        let f = random_relation(&mut r, a, b);
        let g = random_relation(&mut r, b, c);
        let h = random_relation(&mut r, c, d);
        prop_assert_eq!(
            h.after(&g.after(&f).unwrap()).unwrap(),
            h.after(&g).unwrap().after(&f).unwrap()
        );
        prop_assert_eq!(LinearRelation::identity(b).after(&f).unwrap(), f.clone());
        prop_assert_eq!(f.after(&LinearRelation::identity(a)).unwrap(), f.clone());
        prop_assert_eq!(g.after(&f).unwrap().dagger(), f.dagger().after(&g.dagger()).unwrap());
        prop_assert_eq!(f.dagger().dagger(), f.clone());
    }

    #[test]
    fn relation_interchange(seed: u64, m in 0usize..3, n in 0usize..3, p in 0usize..3, q in 0usize..3) {
        let mut r = rng(seed);
        let f = random_relation(&mut r, m, n);
        let f2 = random_relation(&mut r, n, 2);
        let g = random_relation(&mut r, p, q);
        let g2 = random_relation(&mut r, q, 1);
        prop_assert_eq!(
            f2.after(&f).unwrap().tensor(&g2.after(&g).unwrap()),
            f2.tensor(&g2).after(&f.tensor(&g)).unwrap()
        );
        prop_assert_eq!(
            LinearRelation::braiding(n, q).after(&f.tensor(&g)).unwrap(),
            g.tensor(&f).after(&LinearRelation::braiding(m, p)).unwrap()
        );
    }

    #[test]
    fn symplectic_complements(seed: u64, pairs in 1usize..4) {
        let mut r = rng(seed);
        let dim = 2 * pairs;
        let rows: Vec<Vec<Q>> = (0..r.gen_range(0..=dim))
            .map(|_| (0..dim).map(|_| random_rational(&mut r)).collect())
            .collect();
        let w = Subspace::new(dim, rows).unwrap();
        for layout in [SymplecticLayout::standard(pairs), SymplecticLayout::conjugate(pairs)] {
            let perp = layout.orthogonal(&w).unwrap();
            prop_assert_eq!(w.dim() + perp.dim(), dim);
            prop_assert_eq!(layout.orthogonal(&perp).unwrap(), w.clone());
            for u in w.basis() {
                prop_assert!(layout.eval(u, u).unwrap() == q(0));
            }
        }
    }

    #[test]
    fn lagrangian_closure(seed: u64, a in 0usize..3, b in 0usize..3, c in 0usize..3) {
        let mut r = rng(seed);
        let f = random_lagrangian(&mut r, a, b);
        let g = random_lagrangian(&mut r, b, c);
        prop_assert!(f.is_lagrangian().unwrap());
        prop_assert!(g.is_lagrangian().unwrap());
        prop_assert!(g.after(&f).unwrap().is_lagrangian().unwrap());
        let bond = Signature::bond();
        let t = random_term(r.gen_range(1..8), r.gen(), &bond);
        prop_assert!(eval_lagrel(&t, &bond).unwrap().is_lagrangian().unwrap());
    }

    #[test]
    fn black_box_is_a_dagger_functor(seed: u64, a in 0usize..4, b in 0usize..4, c in 0usize..4) {
        let mut r = rng(seed);
        let f = random_corelation(&mut r, a, b);
        let g = random_corelation(&mut r, b, c);
        prop_assert_eq!(
            black_box(&g.after(&f).unwrap()),
            black_box(&g).after(&black_box(&f)).unwrap()
        );
        prop_assert_eq!(black_box(&f.dagger()), black_box(&f).dagger());
        prop_assert_eq!(
            black_box(&f.tensor(&g)),
            black_box(&f).tensor(&black_box(&g))
        );
        prop_assert!(black_box(&f).is_lagrangian().unwrap());
    }

    #[test]
    fn term_functors(seed: u64, size in 1usize..10) {
        for sig in [Signature::bond(), Signature::corel_port(), Signature::corel_wire()] {
            let t = random_term(size, seed, &sig);
            let u = random_term(size, seed.wrapping_add(1), &sig);
            let (_, cod) = t.typecheck(&sig).unwrap();
            let next = Term::id(cod);
            prop_assert_eq!(
                eval_corel(&t.clone().then(next.clone()), &sig).unwrap(),
                eval_corel(&next, &sig).unwrap().after(&eval_corel(&t, &sig).unwrap()).unwrap()
            );
            prop_assert_eq!(
                eval_corel(&t.clone().tensor(u.clone()), &sig).unwrap(),
                eval_corel(&t, &sig).unwrap().tensor(&eval_corel(&u, &sig).unwrap())
            );
            prop_assert_eq!(
                eval_lagrel(&t.clone().tensor(u.clone()), &sig).unwrap(),
                eval_lagrel(&t, &sig).unwrap().tensor(&eval_lagrel(&u, &sig).unwrap())
            );
            let mirrored = t.mirror(&sig).unwrap();
            prop_assert_eq!(eval_corel(&mirrored, &sig).unwrap(), eval_corel(&t, &sig).unwrap().dagger());
            prop_assert_eq!(eval_lagrel(&mirrored, &sig).unwrap(), eval_lagrel(&t, &sig).unwrap().dagger());
        }
    }

    #[test]
    fn dsl_round_trip(seed: u64, size in 1usize..14) {
        for sig in [Signature::bond(), Signature::corel_port(), Signature::corel_wire()] {
            let t = random_term(size, seed, &sig);
            let text = dsl::print(&t);
            prop_assert_eq!(dsl::parse(&text, &sig).unwrap(), t);
        }
    }

    #[test]
    fn random_terms_are_well_formed(seed: u64, size in 1usize..20) {
        let bond = Signature::bond();
        let t = random_term(size, seed, &bond);
        prop_assert_eq!(t.size(), size);
        prop_assert!(t.typecheck(&bond).is_ok());
        prop_assert_eq!(random_term(size, seed, &bond), t);
    }
}
