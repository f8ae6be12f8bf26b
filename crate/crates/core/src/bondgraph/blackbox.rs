use num_traits::Zero;

use crate::corelation::Corelation;
use crate::linrel::rational::{int, Rational};
use crate::linrel::LinearRelation;

/// The behaviour of an ideal-wire corelation on boundary potentials and
/// currents.
///
/// Terminal `t` owns coordinates `2t` (potential) and `2t + 1` (current).
/// Within each block all potentials agree, and the currents entering on the
/// input side sum to the currents leaving on the output side.
pub fn black_box(c: &Corelation) -> LinearRelation {
    let terminals = c.dom() + c.cod();
    let width = 2 * terminals;
    let mut constraints = Vec::with_capacity(terminals);
    for block in c.blocks() {
        let first = block[0];
        for &t in &block[1..] {
            let mut row = vec![Rational::zero(); width];
            row[2 * first] = int(1);
            row[2 * t] = int(-1);
            constraints.push(row);
        }
        let mut row = vec![Rational::zero(); width];
        for &t in block {
            row[2 * t + 1] = if t < c.dom() { int(1) } else { int(-1) };
        }
        constraints.push(row);
    }
    LinearRelation::from_constraints(2 * c.dom(), 2 * c.cod(), constraints)
        .expect("constraint rows have the terminal width")
}
