//! Sectional pseudocomplements on the pentagon N5: synthesize the table,
//! see that relative pseudocomplements are missing, and read off the
//! classification.

use relres::constructions::{fixture, FixtureName, STAR};
use relres::pseudocomplement::{classify_with, relative_pc, synthesize_sectional, Flag};

pub fn main() -> relres::Result<()> {
    let n5 = fixture(FixtureName::N5)?;
    let lattice = n5.lattice();
    let poset = lattice.poset();

    let synthesis = synthesize_sectional(&lattice)?;
    let star = synthesis.table().expect("N5 is meet-semidistributive");
    println!("{}", star.display(poset).with_symbol("*"));
    assert_eq!(Some(star), n5.table(STAR));

    let (c, a) = (poset.index_of("c").unwrap(), poset.index_of("a").unwrap());
    println!(
        "c -> a relative pseudocomplement: {:?}",
        relative_pc(&lattice, c, a)
    );

    let report = classify_with(poset, Some(star));
    for flag in [
        Flag::MeetSemidistributive,
        Flag::SectionallyPc,
        Flag::RelativelyPc,
    ] {
        println!("{flag}: {:?}", report.flag(flag));
    }
    Ok(())
}
