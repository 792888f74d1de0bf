//! Operator residuation on P6: the canonical M and R pass the axioms on
//! the whole powerset, and a broken R is caught with a witness.

use relres::constructions::{fixture, FixtureName, STAR};
use relres::operator::{
    canonical_operators, check_operator_axioms, operator_consequences, SubsetOperator,
};

pub fn main() -> relres::Result<()> {
    let p6 = fixture(FixtureName::P6)?;
    let poset = &p6.poset;
    let op = canonical_operators(poset, p6.table(STAR).unwrap())?;
    print!("{}", check_operator_axioms(&op, true)?.render(poset));
    print!("{}", operator_consequences(&op)?.render(poset));

    let broken = op.with_r(SubsetOperator::tabulate_elements(poset.len(), |_, y| {
        poset.down(y)
    }));
    print!("{}", check_operator_axioms(&broken, false)?.render(poset));
    Ok(())
}
