//! Relative residuation on the three-element chain with a non-idempotent
//! product, and on N5 with the meet as product.

use relres::constructions::{fixture, FixtureName, IMP, MUL, STAR};
use relres::residuation::{
    check_divisible, check_rrl, check_variety_v, one_sided_adjointness, residuation_consequences,
    rrl_from_sectional, RrlCandidate,
};

pub fn main() -> relres::Result<()> {
    let ex1 = fixture(FixtureName::Ex1)?;
    let lattice = ex1.lattice();
    let poset = lattice.poset().clone();
    let cand = RrlCandidate::new(
        lattice.clone(),
        ex1.table(MUL).unwrap().clone(),
        ex1.table(IMP).unwrap().clone(),
    )?;
    print!("{}", check_rrl(&cand).render(&poset));
    println!("divisible: {}", check_divisible(&cand, None).render(&poset));
    let meet = lattice.meet_table();
    println!(
        "divisible with meet: {}",
        check_divisible(&cand, Some(&meet)).render(&poset)
    );
    print!("{}", residuation_consequences(&cand)?.render(&poset));
    print!("{}", check_variety_v(&cand).render(&poset));
    println!(
        "lemma: {}",
        one_sided_adjointness(&lattice, cand.mult_table(), cand.imp_table())?.render(&poset)
    );

    let n5 = fixture(FixtureName::N5)?;
    let n5_cand = rrl_from_sectional(&n5.lattice(), n5.table(STAR).unwrap())?;
    println!(
        "N5 with * is relatively residuated: {}",
        check_rrl(&n5_cand).all_hold()
    );
    Ok(())
}
