//! Operator residuation on posets.
//!
//! On a poset there may be no join to feed into a multiplication, so the
//! multiplication `M` acts on subsets and the residual `R` returns a subset.
//! The canonical pair built from a `*` table is `M(A, B) = L(A ∪ B)` and
//! `R(x, y) = L(x * y)`. Operator relative adjointness reads
//!
//! ```text
//! M(U(a,b), U(c,b)) ⊆ L(b)   iff   L(U(c,b)) ⊆ R(a,b)
//! ```

use std::collections::BTreeMap;

use crate::binop::BinOp;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::verdict::{AxiomReport, Verdict, Witness};

/// Largest carrier for which the full powerset may be scanned.
pub const EXHAUSTIVE_SUBSET_LIMIT: usize = 12;

pub const M_COMMUTATIVE: &str = "M commutative";
pub const M_UNIT: &str = "M unit";
/// `M(U(a,b),U(c,b)) ⊆ L(b)` implies `LU(c,b) ⊆ R(a,b)`.
pub const OP_ADJOINT_FORWARD: &str = "operator adjointness forward";
/// `LU(c,b) ⊆ R(a,b)` implies `M(U(a,b),U(c,b)) ⊆ L(b)`.
pub const OP_ADJOINT_BACKWARD: &str = "operator adjointness backward";

/// A map into subsets of the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubsetOperator {
    /// `M(A, B) = L(A ∪ B)`.
    CanonicalM,
    /// `R(x, y) = L(x * y)` for a total `*`.
    CanonicalR { star: BinOp },
    /// Explicit values on a finite family of argument pairs; element
    /// arguments are looked up as singletons. Missing entries are undefined.
    Table(BTreeMap<(ElemSet, ElemSet), ElemSet>),
}

impl SubsetOperator {
    /// Store `f` on every pair drawn from `family`.
    pub fn tabulate<F>(family: &[ElemSet], mut f: F) -> Self
    where
        F: FnMut(ElemSet, ElemSet) -> ElemSet,
    {
        let mut map = BTreeMap::new();
        for &a in family {
            for &b in family {
                map.insert((a, b), f(a, b));
            }
        }
        SubsetOperator::Table(map)
    }

    /// Store `f` on every pair of elements of an `n`-element carrier.
    pub fn tabulate_elements<F>(n: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> ElemSet,
    {
        let mut map = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                map.insert((ElemSet::singleton(x), ElemSet::singleton(y)), f(x, y));
            }
        }
        SubsetOperator::Table(map)
    }

    pub fn apply_sets(&self, poset: &Poset, a: ElemSet, b: ElemSet) -> Option<ElemSet> {
        match self {
            SubsetOperator::CanonicalM => Some(poset.lower_set(a.union(b))),
            SubsetOperator::CanonicalR { star } => {
                let (x, y) = (single(a)?, single(b)?);
                Some(poset.down(star.get(x, y)?))
            }
            SubsetOperator::Table(map) => map.get(&(a, b)).copied(),
        }
    }

    pub fn apply(&self, poset: &Poset, x: usize, y: usize) -> Option<ElemSet> {
        self.apply_sets(poset, ElemSet::singleton(x), ElemSet::singleton(y))
    }
}

fn single(s: ElemSet) -> Option<usize> {
    (s.len() == 1).then(|| s.first()).flatten()
}

/// `(P, ≤, M, R, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorPoset {
    base: Poset,
    top: usize,
    m: SubsetOperator,
    r: SubsetOperator,
}

impl OperatorPoset {
    pub fn new(base: Poset, m: SubsetOperator, r: SubsetOperator) -> Result<Self> {
        let top = base.top().ok_or(Error::NoTop)?;
        Ok(OperatorPoset { base, top, m, r })
    }

    pub fn poset(&self) -> &Poset {
        &self.base
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn m(&self, a: ElemSet, b: ElemSet) -> Option<ElemSet> {
        self.m.apply_sets(&self.base, a, b)
    }

    pub fn r(&self, x: usize, y: usize) -> Option<ElemSet> {
        self.r.apply(&self.base, x, y)
    }

    pub fn with_r(&self, r: SubsetOperator) -> Self {
        OperatorPoset { r, ..self.clone() }
    }

    pub fn with_m(&self, m: SubsetOperator) -> Self {
        OperatorPoset { m, ..self.clone() }
    }
}

/// The canonical operators of a poset with top and a total `*` table.
pub fn canonical_operators(poset: &Poset, star: &BinOp) -> Result<OperatorPoset> {
    poset.top().ok_or(Error::NoTop)?;
    star.require_total("*", poset)?;
    OperatorPoset::new(
        poset.clone(),
        SubsetOperator::CanonicalM,
        SubsetOperator::CanonicalR { star: star.clone() },
    )
}

/// Subsets the adjointness argument actually feeds to `M`: every `U(x, y)`,
/// every singleton, `∅` and the carrier. Sorted, without duplicates.
pub fn generated_family(poset: &Poset) -> Vec<ElemSet> {
    let n = poset.len();
    let mut family: Vec<ElemSet> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| poset.upper_pair(x, y))
        .chain((0..n).map(ElemSet::singleton))
        .chain([ElemSet::EMPTY, poset.carrier()])
        .collect();
    family.sort();
    family.dedup();
    family
}

fn all_subsets(n: usize) -> Vec<ElemSet> {
    (0..1u64 << n).map(ElemSet::from_bits).collect()
}

fn product_side(op: &OperatorPoset, a: usize, b: usize, c: usize) -> Option<bool> {
    let p = &op.base;
    let m = op.m(p.upper_pair(a, b), p.upper_pair(c, b))?;
    Some(m.is_subset(p.down(b)))
}

fn residual_side(op: &OperatorPoset, a: usize, b: usize, c: usize) -> Option<bool> {
    let p = &op.base;
    let lu = p.lower_set(p.upper_pair(c, b));
    Some(lu.is_subset(op.r(a, b)?))
}

/// Least `c` at which operator adjointness fails for the pair `(a, b)`, in
/// either direction (an undefined operator value counts as a failure).
pub fn operator_adjointness_at(op: &OperatorPoset, a: usize, b: usize) -> Option<usize> {
    (0..op.base.len()).find(
        |&c| match (product_side(op, a, b, c), residual_side(op, a, b, c)) {
            (Some(x), Some(y)) => x != y,
            _ => true,
        },
    )
}

/// Check commutativity and unit laws of `M` and both directions of operator
/// adjointness. Adjointness is always checked over all element triples; the
/// `M` laws range over the full powerset when `exhaustive_subsets` is set
/// (carriers up to [`EXHAUSTIVE_SUBSET_LIMIT`]) and over
/// [`generated_family`] otherwise.
pub fn check_operator_axioms(op: &OperatorPoset, exhaustive_subsets: bool) -> Result<AxiomReport> {
    check_operator_axioms_with_limit(op, exhaustive_subsets, EXHAUSTIVE_SUBSET_LIMIT)
}

/// [`check_operator_axioms`] with a caller-chosen powerset limit.
pub fn check_operator_axioms_with_limit(
    op: &OperatorPoset,
    exhaustive_subsets: bool,
    subset_limit: usize,
) -> Result<AxiomReport> {
    let p = &op.base;
    let n = p.len();
    let family = if exhaustive_subsets {
        if n > subset_limit {
            return Err(Error::SubsetBudgetExceeded {
                size: n,
                limit: subset_limit,
            });
        }
        all_subsets(n)
    } else {
        generated_family(p)
    };

    let mut report = AxiomReport::new();

    let commutative = family.iter().find_map(|&a| {
        family.iter().find_map(|&b| {
            let ab = op.m(a, b);
            (ab.is_none() || ab != op.m(b, a)).then(|| Witness::Subsets(vec![a, b]))
        })
    });
    report.push(
        M_COMMUTATIVE,
        commutative.map_or(Verdict::Holds, Verdict::Fails),
    );

    let one = ElemSet::singleton(op.top);
    let unit = family.iter().find_map(|&a| {
        let la = Some(p.lower_set(a));
        (op.m(one, a) != la || op.m(a, one) != la).then(|| Witness::Subsets(vec![a]))
    });
    report.push(M_UNIT, unit.map_or(Verdict::Holds, Verdict::Fails));

    let mut forward = None;
    let mut backward = None;
    'scan: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (lhs, rhs) = (product_side(op, a, b, c), residual_side(op, a, b, c));
                let (lhs, rhs) = match (lhs, rhs) {
                    (Some(l), Some(r)) => (l, r),
                    // an undefined value counts as a forward failure
                    _ => (true, false),
                };
                if forward.is_none() && lhs && !rhs {
                    forward = Some(vec![a, b, c]);
                }
                if backward.is_none() && rhs && !lhs {
                    backward = Some(vec![a, b, c]);
                }
                if forward.is_some() && backward.is_some() {
                    break 'scan;
                }
            }
        }
    }
    report.push(OP_ADJOINT_FORWARD, Verdict::from_witness(forward));
    report.push(OP_ADJOINT_BACKWARD, Verdict::from_witness(backward));
    Ok(report)
}

/// Consequences of operator residuation, checked exhaustively on a structure
/// that passes [`check_operator_axioms`] over the generated family.
pub fn operator_consequences(op: &OperatorPoset) -> Result<AxiomReport> {
    if !check_operator_axioms(op, false)?.all_hold() {
        return Err(Error::NotVerifiedOperatorPoset);
    }
    let p = &op.base;
    let n = p.len();
    let one = op.top;
    let r = |x, y| {
        op.r(x, y)
            .expect("verified operators are total on elements")
    };
    let m = |a, b| op.m(a, b).expect("verified operators are total on U-sets");
    let pairs = || (0..n).flat_map(|a| (0..n).map(move |b| (a, b)));

    let mut report = AxiomReport::new();
    report.push(
        "(i) L(a) ⊆ R(1,a)",
        Verdict::from_witness(
            (0..n)
                .find(|&a| !p.down(a).is_subset(r(one, a)))
                .map(|a| vec![a]),
        ),
    );
    report.push(
        "(ii) a ≤ b iff R(a,b) = P",
        Verdict::from_witness(
            pairs()
                .find(|&(a, b)| p.leq(a, b) != (r(a, b) == p.carrier()))
                .map(|(a, b)| vec![a, b]),
        ),
    );
    report.push(
        "(iii) M(U(a),U(a,b)) ⊆ L(a)",
        Verdict::from_witness(
            pairs()
                .find(|&(a, b)| !m(p.up(a), p.upper_pair(a, b)).is_subset(p.down(a)))
                .map(|(a, b)| vec![a, b]),
        ),
    );
    report.push(
        "(iv) L(b) ⊆ R(a,b)",
        Verdict::from_witness(
            pairs()
                .find(|&(a, b)| !p.down(b).is_subset(r(a, b)))
                .map(|(a, b)| vec![a, b]),
        ),
    );
    let v = match p.bottom() {
        None => Verdict::Skipped("no bottom"),
        Some(zero) => Verdict::from_witness(
            pairs()
                .find(|&(a, b)| {
                    let lhs = m(p.up(a), p.up(b)).is_subset(ElemSet::singleton(zero));
                    let rhs = p.down(a).is_subset(r(b, zero));
                    lhs != rhs
                })
                .map(|(a, b)| vec![a, b]),
        ),
    };
    report.push("(v) M(U(a),U(b)) ⊆ {0} iff L(a) ⊆ R(b,0)", v);
    Ok(report)
}
