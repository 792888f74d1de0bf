//! The six-element poset P6 is not a lattice, yet every pair has a sectional
//! and a relative pseudocomplement. Its product with N5 keeps the first
//! property and loses the second.

use relres::constructions::{direct_product, fixture, FixtureName};
use relres::pseudocomplement::{classify, sectional_table_poset, Flag};

pub fn main() -> relres::Result<()> {
    let p6 = fixture(FixtureName::P6)?.poset;
    match p6.as_lattice() {
        Ok(_) => unreachable!(),
        Err(e) => println!("P6: {e}"),
    }
    println!(
        "{}",
        sectional_table_poset(&p6).display(&p6).with_symbol("*")
    );

    let n5 = fixture(FixtureName::N5)?.poset;
    let product = direct_product(&p6, &n5)?;
    let report = classify(&product);
    println!("P6 x N5 has {} elements", product.len());
    for flag in [Flag::Lattice, Flag::SectionallyPc, Flag::RelativelyPc] {
        let w = report.witness(flag).map(|w| product.fmt_tuple(w));
        println!("{flag}: {:?} {}", report.flag(flag), w.unwrap_or_default());
    }
    Ok(())
}
