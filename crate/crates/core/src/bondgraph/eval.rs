//! The two semantic functors out of the term language: into corelations
//! (`G` for bond graphs) and into linear relations (`F` for bond graphs,
//! the black box of the corelation image otherwise).

use super::blackbox::black_box;
use super::signature::{Interpretation, Signature};
use super::term::Term;
use crate::corelation::{Corelation, PortGenerator, WireGenerator};
use crate::error::{Error, Result};
use crate::linrel::{LinearRelation, PairGenerator};

/// The port corelation a bond-graph generator is sent to by `G`.
pub fn bond_to_port(generator: &str) -> Result<PortGenerator> {
    use PortGenerator::*;
    Ok(match generator {
        "M" => M2,
        "I" => I2,
        "D" => D2,
        "E" => E2,
        "Mp" => Mu2,
        "Ip" => Iota2,
        "Dp" => Delta2,
        "Ep" => Eps2,
        other => return Err(Error::UnknownGenerator(other.to_string())),
    })
}

fn uninterpretable(sig: &Signature, backend: &str) -> Error {
    Error::Uninterpretable {
        signature: sig.name().to_string(),
        backend: backend.to_string(),
    }
}

/// Wires per prop object.
fn wire_scale(sig: &Signature) -> Result<usize> {
    match sig.interpretation() {
        Interpretation::Wire => Ok(1),
        Interpretation::Port | Interpretation::Bond => Ok(2),
        Interpretation::Free => Err(uninterpretable(sig, "corel")),
    }
}

pub fn eval_corel(t: &Term, sig: &Signature) -> Result<Corelation> {
    t.typecheck(sig)?;
    let scale = wire_scale(sig)?;
    corel_rec(t, sig, scale)
}

fn corel_rec(t: &Term, sig: &Signature, scale: usize) -> Result<Corelation> {
    Ok(match t {
        Term::Generator(g) => match sig.interpretation() {
            Interpretation::Wire => Corelation::generator(WireGenerator::from_name(g)?),
            Interpretation::Port => Corelation::port_generator(PortGenerator::from_name(g)?),
            Interpretation::Bond => Corelation::port_generator(bond_to_port(g)?),
            Interpretation::Free => return Err(uninterpretable(sig, "corel")),
        },
        Term::Identity(n) => Corelation::identity(scale * n),
        Term::Braiding(a, b) => Corelation::braiding(scale * a, scale * b),
        Term::Compose(after, before) => {
            corel_rec(after, sig, scale)?.after(&corel_rec(before, sig, scale)?)?
        }
        Term::Tensor(l, r) => corel_rec(l, sig, scale)?.tensor(&corel_rec(r, sig, scale)?),
    })
}

/// Bond terms go through `F`; wire and port terms through the black box of
/// their corelation.
pub fn eval_lagrel(t: &Term, sig: &Signature) -> Result<LinearRelation> {
    match sig.interpretation() {
        Interpretation::Bond => {
            t.typecheck(sig)?;
            Ok(effort_flow_rec(t))
        }
        Interpretation::Wire | Interpretation::Port => Ok(black_box(&eval_corel(t, sig)?)),
        Interpretation::Free => Err(uninterpretable(sig, "lagrel")),
    }
}

fn effort_flow_rec(t: &Term) -> LinearRelation {
    match t {
        Term::Generator(g) => PairGenerator::from_name(g)
            .expect("typechecked bond generator")
            .relation(),
        Term::Identity(n) => LinearRelation::identity(2 * n),
        Term::Braiding(a, b) => LinearRelation::braiding(2 * a, 2 * b),
        Term::Compose(after, before) => effort_flow_rec(after)
            .after(&effort_flow_rec(before))
            .expect("typechecked composite"),
        Term::Tensor(l, r) => effort_flow_rec(l).tensor(&effort_flow_rec(r)),
    }
}

/// Potentials and currents of a bond term: the black box of `G(t)`.
pub fn eval_potential_current(t: &Term, sig: &Signature) -> Result<LinearRelation> {
    Ok(black_box(&eval_corel(t, sig)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linrel::rational::int;
    use crate::linrel::matrix::Row;

    fn row(xs: &[i64]) -> Row {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn g_on_generators() {
        let bond = Signature::bond();
        assert_eq!(
            eval_corel(&Term::gen("M"), &bond).unwrap(),
            Corelation::port_generator(PortGenerator::M2)
        );
        assert_eq!(eval_corel(&Term::id(1), &bond).unwrap(), Corelation::identity(2));
        let em = eval_corel(&Term::gen("M").then(Term::gen("E")), &bond).unwrap();
        assert_eq!(em, Corelation::new(4, 0, vec![vec![0, 3], vec![1, 2]]).unwrap());
    }

    #[test]
    fn f_on_generators() {
        let bond = Signature::bond();
        let m = eval_lagrel(&Term::gen("M"), &bond).unwrap();
        assert_eq!(m, PairGenerator::M.relation());
        let ip = eval_lagrel(&Term::gen("Ip"), &bond).unwrap();
        assert_eq!(ip, LinearRelation::from_constraints(0, 2, vec![row(&[0, 1])]).unwrap());
    }

    #[test]
    fn f_of_d_after_i() {
        // (E2, F2, E3, F3) with E2 + E3 = 0, F2 = F3
        let bond = Signature::bond();
        let r = eval_lagrel(&Term::gen("I").then(Term::gen("D")), &bond).unwrap();
        let expected = LinearRelation::from_constraints(
            0,
            4,
            vec![row(&[1, 0, 1, 0]), row(&[0, 1, 0, -1])],
        )
        .unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn wire_terms_in_both_backends() {
        let wire = Signature::corel_wire();
        let md = Term::gen("d").then(Term::gen("m"));
        assert!(eval_corel(&md, &wire).unwrap().is_identity());
        assert!(eval_lagrel(&md, &wire).unwrap().is_identity());
        assert_eq!(eval_corel(&Term::braid(1, 1), &wire).unwrap(), Corelation::braiding(1, 1));
    }

    #[test]
    fn free_signature_is_rejected() {
        let toy = Signature::new("toy", [("f".to_string(), (1, 1))]);
        assert!(matches!(
            eval_corel(&Term::gen("f"), &toy),
            Err(Error::Uninterpretable { .. })
        ));
        assert!(matches!(
            eval_lagrel(&Term::gen("f"), &toy),
            Err(Error::Uninterpretable { .. })
        ));
    }

    #[test]
    fn ill_typed_terms_fail_before_evaluation() {
        let bond = Signature::bond();
        let bad = Term::gen("M").then(Term::gen("M"));
        assert!(matches!(eval_corel(&bad, &bond), Err(Error::Type { .. })));
        assert!(matches!(eval_lagrel(&bad, &bond), Err(Error::Type { .. })));
    }
}
