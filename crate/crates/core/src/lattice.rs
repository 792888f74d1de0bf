//! Join/meet tables for posets that are lattices.

use crate::binop::BinOp;
use crate::poset::{MissingBound, NotALattice, Poset};

/// A poset together with its tabulated join and meet.
///
/// Only obtainable through [`Poset::as_lattice`], so the tables are always
/// the least upper and greatest lower bounds of the underlying order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeOps {
    base: Poset,
    join: Vec<usize>,
    meet: Vec<usize>,
    top: Option<usize>,
    bottom: Option<usize>,
}

impl LatticeOps {
    pub(crate) fn from_poset(poset: &Poset) -> Result<Self, NotALattice> {
        let n = poset.len();
        let mut join = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let j = poset
                    .join(a, b)
                    .ok_or_else(|| NotALattice::new(poset, a, b, MissingBound::Join))?;
                let m = poset
                    .meet(a, b)
                    .ok_or_else(|| NotALattice::new(poset, a, b, MissingBound::Meet))?;
                join.push(j);
                meet.push(m);
            }
        }
        Ok(LatticeOps {
            base: poset.clone(),
            join,
            meet,
            top: poset.top(),
            bottom: poset.bottom(),
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.base.leq(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    /// Join of a set; `None` only for the empty set in a lattice without bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> Option<usize> {
        items
            .into_iter()
            .reduce(|acc, x| self.join(acc, x))
            .or(self.bottom)
    }

    pub fn join_table(&self) -> BinOp {
        BinOp::total_from_fn(self.len(), |a, b| self.join(a, b))
    }

    pub fn meet_table(&self) -> BinOp {
        BinOp::total_from_fn(self.len(), |a, b| self.meet(a, b))
    }

    /// Re-verify the lattice identities on the stored tables. Returns the
    /// first failing law with its witness.
    pub fn check_laws(&self) -> Result<(), (&'static str, Vec<usize>)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                if self.join(a, b) != self.join(b, a) {
                    return Err(("join commutative", vec![a, b]));
                }
                if self.meet(a, b) != self.meet(b, a) {
                    return Err(("meet commutative", vec![a, b]));
                }
                if self.join(a, self.meet(a, b)) != a || self.meet(a, self.join(a, b)) != a {
                    return Err(("absorption", vec![a, b]));
                }
                for c in 0..n {
                    if self.join(a, self.join(b, c)) != self.join(self.join(a, b), c) {
                        return Err(("join associative", vec![a, b, c]));
                    }
                    if self.meet(a, self.meet(b, c)) != self.meet(self.meet(a, b), c) {
                        return Err(("meet associative", vec![a, b, c]));
                    }
                }
            }
        }
        Ok(())
    }
}
