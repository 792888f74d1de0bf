//! Congruence lattices: adding the sectional pseudocomplement to N5 cuts
//! Con down to a three-element chain and makes the algebra weakly regular.

use relres::congruence::{all_congruences, FiniteAlgebra};
use relres::constructions::{fixture, FixtureName, STAR};

pub fn main() -> relres::Result<()> {
    let n5 = fixture(FixtureName::N5)?;
    let lattice = FiniteAlgebra::from_lattice(&n5.lattice());
    let sectional = lattice
        .clone()
        .with_op(STAR, n5.table(STAR).unwrap().clone())?;

    for (label, alg) in [("lattice", &lattice), ("with *", &sectional)] {
        let con = all_congruences(alg)?;
        println!("{label}: |Con| = {}", con.len());
        for c in con.iter() {
            println!("  {}", c.render(alg.names()));
        }
        println!("  permutable: {}", con.check_permutable().is_ok());
        println!("  distributive: {}", con.check_distributive().is_ok());
        println!(
            "  weakly regular: {}",
            con.check_weakly_regular(alg)?.holds()
        );
        println!(
            "  maltsev mismatches: {:?}",
            con.maltsev_replay(alg).map(|m| m.len())
        );
    }
    Ok(())
}
