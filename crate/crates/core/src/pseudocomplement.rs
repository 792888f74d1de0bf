//! Sectional and relative pseudocomplements on finite lattices and posets,
//! meet-semidistributivity, and synthesis of the `*` table.
//!
//! In a lattice the sectional pseudocomplement `a * b` is the greatest `x`
//! with `(a ∨ b) ∧ x = b`; the relative pseudocomplement is the greatest `x`
//! with `a ∧ x ≤ b`. The poset version of `a * b` is the unique `d` such that
//! for every `c`, `L(U(a,b) ∪ U(c,b)) = L(b)` holds exactly when `d ∈ U(c,b)`.
//! Whenever an extremum does not exist the result is `None`.

use std::collections::BTreeMap;
use std::fmt;

use crate::binop::BinOp;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::LatticeOps;
use crate::poset::Poset;

/// Greatest `x` with `(a ∨ b) ∧ x = b`, if the set of such `x` has a maximum.
pub fn sectional_pc_lattice(lattice: &LatticeOps, a: usize, b: usize) -> Option<usize> {
    let ab = lattice.join(a, b);
    let solutions: ElemSet = (0..lattice.len())
        .filter(|&x| lattice.meet(ab, x) == b)
        .collect();
    lattice.poset().maximum(solutions)
}

/// Greatest `x` with `a ∧ x ≤ b`.
pub fn relative_pc(lattice: &LatticeOps, a: usize, b: usize) -> Option<usize> {
    let solutions: ElemSet = (0..lattice.len())
        .filter(|&x| lattice.leq(lattice.meet(a, x), b))
        .collect();
    lattice.poset().maximum(solutions)
}

/// Does `L(U(a,b) ∪ U(c,b)) = L(b)` hold?
fn sectional_condition(poset: &Poset, a: usize, b: usize, c: usize) -> bool {
    let bounds = poset.upper_pair(a, b).union(poset.upper_pair(c, b));
    poset.lower_set(bounds) == poset.down(b)
}

/// `⋂ { U(c,b) | L(U(a,b) ∪ U(c,b)) = L(b) }`, the filter that must equal
/// `U(a * b)` whenever the pseudocomplement exists.
pub fn sectional_filter(poset: &Poset, a: usize, b: usize) -> ElemSet {
    (0..poset.len())
        .filter(|&c| sectional_condition(poset, a, b, c))
        .fold(poset.carrier(), |acc, c| {
            acc.intersection(poset.upper_pair(c, b))
        })
}

/// Sectional pseudocomplement of `a` with respect to `b` in a poset.
///
/// The candidate is the least element of [`sectional_filter`]; it is accepted
/// only if that filter is principal and the defining biconditional holds for
/// every `c`. Any solution has this filter as its up-set, so no other
/// element needs to be tried.
pub fn sectional_pc_poset(poset: &Poset, a: usize, b: usize) -> Option<usize> {
    let filter = sectional_filter(poset, a, b);
    let d = poset.minimum(filter)?;
    if poset.up(d) != filter {
        return None;
    }
    let ok = (0..poset.len())
        .all(|c| sectional_condition(poset, a, b, c) == poset.upper_pair(c, b).contains(d));
    ok.then_some(d)
}

/// Greatest `x` with `L(a, x) ⊆ L(b)`.
pub fn relative_pc_poset(poset: &Poset, a: usize, b: usize) -> Option<usize> {
    let down_b = poset.down(b);
    let solutions: ElemSet = (0..poset.len())
        .filter(|&x| poset.lower_pair(a, x).is_subset(down_b))
        .collect();
    poset.maximum(solutions)
}

/// Tabulate `f` over all pairs.
fn tabulate<F: Fn(usize, usize) -> Option<usize>>(n: usize, f: F) -> BinOp {
    BinOp::from_fn(n, f)
}

/// Full sectional pseudocomplement table of a lattice (cells may be undefined).
pub fn sectional_table_lattice(lattice: &LatticeOps) -> BinOp {
    tabulate(lattice.len(), |a, b| sectional_pc_lattice(lattice, a, b))
}

/// Full sectional pseudocomplement table of a poset (cells may be undefined).
pub fn sectional_table_poset(poset: &Poset) -> BinOp {
    tabulate(poset.len(), |a, b| sectional_pc_poset(poset, a, b))
}

pub fn relative_table(lattice: &LatticeOps) -> BinOp {
    tabulate(lattice.len(), |a, b| relative_pc(lattice, a, b))
}

pub fn relative_table_poset(poset: &Poset) -> BinOp {
    tabulate(poset.len(), |a, b| relative_pc_poset(poset, a, b))
}

/// Least triple `(a, b, c)` with `a ∧ b = a ∧ c` but `a ∧ (b ∨ c) ≠ a ∧ b`,
/// or `None` when the lattice is meet-semidistributive.
pub fn meet_semidistributivity_witness(lattice: &LatticeOps) -> Option<[usize; 3]> {
    let n = lattice.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let ab = lattice.meet(a, b);
                if ab == lattice.meet(a, c) && lattice.meet(a, lattice.join(b, c)) != ab {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

pub fn is_meet_semidistributive(lattice: &LatticeOps) -> bool {
    meet_semidistributivity_witness(lattice).is_none()
}

/// Least triple with `a ≤ c` and `a ∨ (b ∧ c) ≠ (a ∨ b) ∧ c`.
pub fn modularity_witness(lattice: &LatticeOps) -> Option<[usize; 3]> {
    let n = lattice.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if lattice.leq(a, c)
                    && lattice.join(a, lattice.meet(b, c)) != lattice.meet(lattice.join(a, b), c)
                {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Least triple with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
pub fn distributivity_witness(lattice: &LatticeOps) -> Option<[usize; 3]> {
    let n = lattice.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = lattice.meet(a, lattice.join(b, c));
                let rhs = lattice.join(lattice.meet(a, b), lattice.meet(a, c));
                if lhs != rhs {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Outcome of [`synthesize_sectional`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Synthesis {
    /// The total `*` table.
    Total(BinOp),
    /// Least pair whose join-candidate `⋁{x ≥ b | (a ∨ b) ∧ x = b}` does not
    /// itself satisfy `(a ∨ b) ∧ x = b`.
    Failed { a: usize, b: usize },
}

impl Synthesis {
    pub fn table(&self) -> Option<&BinOp> {
        match self {
            Synthesis::Total(t) => Some(t),
            Synthesis::Failed { .. } => None,
        }
    }
}

/// Build `a * b := ⋁{x ∈ [b, 1] | (a ∨ b) ∧ x = b}` for every pair.
///
/// The join always exists in a finite lattice; it is a sectional
/// pseudocomplement exactly when it still satisfies the defining equation,
/// which holds for every pair precisely when the lattice is
/// meet-semidistributive.
pub fn synthesize_sectional(lattice: &LatticeOps) -> Result<Synthesis> {
    let top = lattice.top().ok_or(Error::NoTop)?;
    let n = lattice.len();
    let mut table = BinOp::undefined(n);
    for a in 0..n {
        for b in 0..n {
            let ab = lattice.join(a, b);
            let candidate = lattice
                .poset()
                .up(b)
                .iter()
                .filter(|&x| lattice.meet(ab, x) == b)
                .fold(b, |acc, x| lattice.join(acc, x));
            debug_assert!(lattice.leq(candidate, top));
            if lattice.meet(ab, candidate) != b {
                return Ok(Synthesis::Failed { a, b });
            }
            table.set(a, b, Some(candidate));
        }
    }
    Ok(Synthesis::Total(table))
}

/// A classification flag. Each flag that is false in a
/// [`ClassificationReport`] carries a witness tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flag {
    Lattice,
    HasTop,
    HasBottom,
    Modular,
    Distributive,
    MeetSemidistributive,
    SectionallyPc,
    RelativelyPc,
    /// A supplied `*` table equals the computed sectional pseudocomplement.
    StarTableMatches,
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flag::Lattice => "lattice",
            Flag::HasTop => "top",
            Flag::HasBottom => "bottom",
            Flag::Modular => "modular",
            Flag::Distributive => "distributive",
            Flag::MeetSemidistributive => "meet-semidistributive",
            Flag::SectionallyPc => "sectionally pc",
            Flag::RelativelyPc => "relatively pc",
            Flag::StarTableMatches => "* table matches",
        })
    }
}

/// Witness tuples by flag:
///
/// * `Lattice`: the least pair without a join or meet;
/// * `HasTop` / `HasBottom`: the maximal / minimal elements;
/// * `Modular`, `Distributive`, `MeetSemidistributive`: the least failing triple;
/// * `SectionallyPc`, `RelativelyPc`: the least undefined pair;
/// * `StarTableMatches`: the least mismatching pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub is_lattice: bool,
    pub has_top: bool,
    pub has_bottom: bool,
    /// Lattice-only flags are `None` for non-lattices.
    pub is_modular: Option<bool>,
    pub is_distributive: Option<bool>,
    pub is_meet_semidistributive: Option<bool>,
    pub is_sectionally_pc: bool,
    pub is_relatively_pc: bool,
    /// Present only when a `*` table was supplied.
    pub star_table_matches: Option<bool>,
    pub witnesses: BTreeMap<Flag, Vec<usize>>,
}

impl ClassificationReport {
    pub fn flag(&self, flag: Flag) -> Option<bool> {
        match flag {
            Flag::Lattice => Some(self.is_lattice),
            Flag::HasTop => Some(self.has_top),
            Flag::HasBottom => Some(self.has_bottom),
            Flag::Modular => self.is_modular,
            Flag::Distributive => self.is_distributive,
            Flag::MeetSemidistributive => self.is_meet_semidistributive,
            Flag::SectionallyPc => Some(self.is_sectionally_pc),
            Flag::RelativelyPc => Some(self.is_relatively_pc),
            Flag::StarTableMatches => self.star_table_matches,
        }
    }

    pub fn witness(&self, flag: Flag) -> Option<&[usize]> {
        self.witnesses.get(&flag).map(Vec::as_slice)
    }
}

pub fn classify(poset: &Poset) -> ClassificationReport {
    classify_with(poset, None)
}

/// Classify a poset by exhaustive scans, optionally checking a supplied `*`
/// table against the computed sectional pseudocomplements.
pub fn classify_with(poset: &Poset, star: Option<&BinOp>) -> ClassificationReport {
    let mut witnesses = BTreeMap::new();
    let mut record = |flag: Flag, witness: Option<Vec<usize>>| -> bool {
        match witness {
            Some(w) => {
                witnesses.insert(flag, w);
                false
            }
            None => true,
        }
    };

    let lattice = poset.as_lattice();
    let is_lattice = record(
        Flag::Lattice,
        lattice.as_ref().err().map(|e| vec![e.a, e.b]),
    );
    let has_top = record(
        Flag::HasTop,
        poset
            .top()
            .is_none()
            .then(|| poset.maximal(poset.carrier()).iter().collect()),
    );
    let has_bottom = record(
        Flag::HasBottom,
        poset
            .bottom()
            .is_none()
            .then(|| poset.minimal(poset.carrier()).iter().collect()),
    );

    let (is_modular, is_distributive, is_msd) = match &lattice {
        Ok(l) => (
            Some(record(Flag::Modular, modularity_witness(l).map(Vec::from))),
            Some(record(
                Flag::Distributive,
                distributivity_witness(l).map(Vec::from),
            )),
            Some(record(
                Flag::MeetSemidistributive,
                meet_semidistributivity_witness(l).map(Vec::from),
            )),
        ),
        Err(_) => (None, None, None),
    };

    // The poset forms coincide with the lattice forms on lattices, so one
    // route serves both.
    let sectional = sectional_table_poset(poset);
    let relative = relative_table_poset(poset);
    let is_sectionally_pc = record(
        Flag::SectionallyPc,
        sectional.first_undefined().map(|(a, b)| vec![a, b]),
    );
    let is_relatively_pc = record(
        Flag::RelativelyPc,
        relative.first_undefined().map(|(a, b)| vec![a, b]),
    );

    let star_table_matches = star.map(|given| {
        let mismatch = if given.size() != poset.len() {
            Some(vec![])
        } else {
            (0..poset.len())
                .flat_map(|a| (0..poset.len()).map(move |b| (a, b)))
                .find(|&(a, b)| given.get(a, b) != sectional.get(a, b))
                .map(|(a, b)| vec![a, b])
        };
        record(Flag::StarTableMatches, mismatch)
    });

    ClassificationReport {
        is_lattice,
        has_top,
        has_bottom,
        is_modular,
        is_distributive,
        is_meet_semidistributive: is_msd,
        is_sectionally_pc,
        is_relatively_pc,
        star_table_matches,
        witnesses,
    }
}
