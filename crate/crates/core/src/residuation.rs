//! Relatively residuated lattices.
//!
//! A candidate is a lattice with top `1` carrying a multiplication `⊙` and a
//! residual `→`. It is relatively residuated when `⊙` is commutative with
//! neutral element `1`, monotone, and relative adjointness holds:
//!
//! ```text
//! (a ∨ b) ⊙ (c ∨ b) ≤ b   iff   c ∨ b ≤ a → b
//! ```
//!
//! The two directions of adjointness are reported separately.

use crate::binop::BinOp;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::LatticeOps;
use crate::verdict::{AxiomReport, Verdict};

pub const COMMUTATIVE: &str = "commutative";
pub const UNIT: &str = "unit";
pub const MONOTONE: &str = "monotone";
/// `(a ∨ b) ⊙ (c ∨ b) ≤ b` implies `c ∨ b ≤ a → b`.
pub const ADJOINT_FORWARD: &str = "adjointness forward";
/// `c ∨ b ≤ a → b` implies `(a ∨ b) ⊙ (c ∨ b) ≤ b`.
pub const ADJOINT_BACKWARD: &str = "adjointness backward";

/// A lattice with top and two total operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrlCandidate {
    lattice: LatticeOps,
    mult: BinOp,
    imp: BinOp,
    top: usize,
}

impl RrlCandidate {
    pub fn new(lattice: LatticeOps, mult: BinOp, imp: BinOp) -> Result<Self> {
        let top = lattice.top().ok_or(Error::NoTop)?;
        mult.require_total("mul", lattice.poset())?;
        imp.require_total("imp", lattice.poset())?;
        Ok(RrlCandidate {
            lattice,
            mult,
            imp,
            top,
        })
    }

    pub fn lattice(&self) -> &LatticeOps {
        &self.lattice
    }

    pub fn mult_table(&self) -> &BinOp {
        &self.mult
    }

    pub fn imp_table(&self) -> &BinOp {
        &self.imp
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult.at(a, b)
    }

    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp.at(a, b)
    }

    fn join(&self, a: usize, b: usize) -> usize {
        self.lattice.join(a, b)
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice.leq(a, b)
    }
}

/// Candidate with `⊙ := ∧` and `→ := *`.
pub fn rrl_from_sectional(lattice: &LatticeOps, star: &BinOp) -> Result<RrlCandidate> {
    RrlCandidate::new(lattice.clone(), lattice.meet_table(), star.clone())
}

fn first_pair(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<[usize; 2]> {
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| bad(a, b))
        .map(|(a, b)| [a, b])
}

fn first_triple(n: usize, mut bad: impl FnMut(usize, usize, usize) -> bool) -> Option<[usize; 3]> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if bad(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Exhaustive check of every relatively residuated lattice axiom.
pub fn check_rrl(cand: &RrlCandidate) -> AxiomReport {
    let n = cand.len();
    let one = cand.top;
    let mut report = AxiomReport::new();
    report.push(
        COMMUTATIVE,
        Verdict::from_witness(first_pair(n, |a, b| cand.mul(a, b) != cand.mul(b, a))),
    );
    report.push(
        UNIT,
        Verdict::from_witness(
            (0..n)
                .find(|&x| cand.mul(one, x) != x || cand.mul(x, one) != x)
                .map(|x| vec![x]),
        ),
    );
    report.push(
        MONOTONE,
        Verdict::from_witness(first_triple(n, |a, b, c| {
            cand.leq(a, b)
                && !(cand.leq(cand.mul(a, c), cand.mul(b, c))
                    && cand.leq(cand.mul(c, a), cand.mul(c, b)))
        })),
    );
    report.push(
        ADJOINT_FORWARD,
        Verdict::from_witness(first_triple(n, |a, b, c| {
            product_below(cand, a, b, c) && !residual_above(cand, a, b, c)
        })),
    );
    report.push(
        ADJOINT_BACKWARD,
        Verdict::from_witness(first_triple(n, |a, b, c| {
            residual_above(cand, a, b, c) && !product_below(cand, a, b, c)
        })),
    );
    report
}

/// `(a ∨ b) ⊙ (c ∨ b) ≤ b`
fn product_below(cand: &RrlCandidate, a: usize, b: usize, c: usize) -> bool {
    cand.leq(cand.mul(cand.join(a, b), cand.join(c, b)), b)
}

/// `c ∨ b ≤ a → b`
fn residual_above(cand: &RrlCandidate, a: usize, b: usize, c: usize) -> bool {
    cand.leq(cand.join(c, b), cand.imp(a, b))
}

/// Values `d` for which relative adjointness holds at `(a, b, c)` for every
/// `c` when `a → b` is set to `d`. Each adjointness instance only reads the
/// single cell `a → b`, so the residual can be chosen cell by cell; the set
/// is either empty or a singleton (the greatest `x ≥ b` with
/// `(a ∨ b) ⊙ x ≤ b`).
pub fn residual_candidates(lattice: &LatticeOps, mult: &BinOp, a: usize, b: usize) -> ElemSet {
    let n = lattice.len();
    let ab = lattice.join(a, b);
    (0..n)
        .filter(|&d| {
            (0..n).all(|c| {
                let cb = lattice.join(c, b);
                let product_below = lattice.leq(mult.at(ab, cb), b);
                product_below == lattice.leq(cb, d)
            })
        })
        .collect()
}

/// The unique residual making `mult` relatively adjoint, cell by cell;
/// undefined where no value works.
pub fn residual_from_mult(lattice: &LatticeOps, mult: &BinOp) -> BinOp {
    let n = lattice.len();
    BinOp::from_fn(n, |a, b| {
        let cands = residual_candidates(lattice, mult, a, b);
        debug_assert!(cands.len() <= 1);
        cands.first()
    })
}

/// Check `(x ∨ y) ⊙ (x → y) = y` for all pairs, using `mult_override` in
/// place of `⊙` when given.
pub fn check_divisible(cand: &RrlCandidate, mult_override: Option<&BinOp>) -> Verdict {
    let mult = mult_override.unwrap_or(&cand.mult);
    Verdict::from_witness(first_pair(cand.len(), |x, y| {
        mult.at(cand.join(x, y), cand.imp(x, y)) != y
    }))
}

/// Consequences of relative residuation, each checked exhaustively on a
/// structure that has passed [`check_rrl`]. A failure here on a verified
/// structure means a bug somewhere, so every verdict keeps its replay tuple.
pub fn residuation_consequences(cand: &RrlCandidate) -> Result<AxiomReport> {
    if !check_rrl(cand).all_hold() {
        return Err(Error::NotVerifiedRrl);
    }
    let n = cand.len();
    let one = cand.top;
    let (join, leq) = (|a, b| cand.join(a, b), |a, b| cand.leq(a, b));
    let (mul, imp) = (|a, b| cand.mul(a, b), |a, b| cand.imp(a, b));

    let mut report = AxiomReport::new();
    report.push(
        "(i) 1 → x = x",
        Verdict::from_witness((0..n).find(|&x| imp(one, x) != x).map(|x| vec![x])),
    );
    report.push(
        "(ii) a ≤ b iff a → b = 1",
        Verdict::from_witness(first_pair(n, |a, b| leq(a, b) != (imp(a, b) == one))),
    );
    report.push(
        "(iii) a ⊙ (a ∨ b) ≤ a",
        Verdict::from_witness(first_pair(n, |a, b| !leq(mul(a, join(a, b)), a))),
    );
    report.push(
        "(iv) b ≤ a → b",
        Verdict::from_witness(first_pair(n, |a, b| !leq(b, imp(a, b)))),
    );
    report.push(
        "(v) (a ∨ b) ⊙ (a → b) ≤ b",
        Verdict::from_witness(first_pair(n, |a, b| !leq(mul(join(a, b), imp(a, b)), b))),
    );
    report.push(
        "(vi) x → y = (x ∨ y) → y",
        Verdict::from_witness(first_pair(n, |x, y| imp(x, y) != imp(join(x, y), y))),
    );
    report.push(
        "(vii) a ∨ b ≤ (a → b) → b",
        Verdict::from_witness(first_pair(n, |a, b| !leq(join(a, b), imp(imp(a, b), b)))),
    );
    report.push(
        "(viii) a ≤ b implies b → c ≤ a → c",
        Verdict::from_witness(first_triple(n, |a, b, c| {
            leq(a, b) && !leq(imp(b, c), imp(a, c))
        })),
    );
    let ix = match cand.lattice.bottom() {
        None => Verdict::Skipped("no bottom"),
        Some(zero) => {
            let adj = first_pair(n, |a, b| (mul(a, b) == zero) != leq(a, imp(b, zero)));
            let absorbing = (0..n).find(|&x| mul(zero, x) != zero).map(|x| vec![x]);
            match (adj, absorbing) {
                (Some(w), _) => Verdict::fails(w),
                (None, w) => Verdict::from_witness(w),
            }
        }
    };
    report.push("(ix) a ⊙ b = 0 iff a ≤ b → 0, and 0 ⊙ x = 0", ix);
    Ok(report)
}

/// Given `⊙` monotone in its second argument and `(a ∨ b) ⊙ (a → b) ≤ b`,
/// verify `c ∨ b ≤ a → b` implies `(a ∨ b) ⊙ (c ∨ b) ≤ b` for all triples.
pub fn one_sided_adjointness(lattice: &LatticeOps, mult: &BinOp, imp: &BinOp) -> Result<Verdict> {
    mult.require_total("mul", lattice.poset())?;
    imp.require_total("imp", lattice.poset())?;
    let n = lattice.len();
    let (join, leq) = (|a, b| lattice.join(a, b), |a, b| lattice.leq(a, b));
    if let Some(w) = first_triple(n, |a, b, c| leq(b, c) && !leq(mult.at(a, b), mult.at(a, c))) {
        return Err(Error::PreconditionFailed {
            hypothesis: "b ≤ c implies a ⊙ b ≤ a ⊙ c",
            witness: w.to_vec(),
        });
    }
    if let Some(w) = first_pair(n, |a, b| !leq(mult.at(join(a, b), imp.at(a, b)), b)) {
        return Err(Error::PreconditionFailed {
            hypothesis: "(a ∨ b) ⊙ (a → b) ≤ b",
            witness: w.to_vec(),
        });
    }
    Ok(Verdict::from_witness(first_triple(n, |a, b, c| {
        leq(join(c, b), imp.at(a, b)) && !leq(mult.at(join(a, b), join(c, b)), b)
    })))
}

pub const VARIETY_CONCLUSION: &str = "conclusion: relatively residuated";

/// The four defining conditions of the variety, plus a check of its
/// conclusion: when all four hold together with the commutative-groupoid
/// identities, [`check_rrl`] must pass.
pub fn check_variety_v(cand: &RrlCandidate) -> AxiomReport {
    let n = cand.len();
    let one = cand.top;
    let (join, leq) = (|a, b| cand.join(a, b), |a, b| cand.leq(a, b));
    let (mul, imp) = (|a, b| cand.mul(a, b), |a, b| cand.imp(a, b));

    let mut report = AxiomReport::new();
    report.push(
        "(i) ((a ∨ b) ⊙ (c ∨ b)) → b ≤ (c ∨ b) → (a → b)",
        Verdict::from_witness(first_triple(n, |a, b, c| {
            let lhs = imp(mul(join(a, b), join(c, b)), b);
            let rhs = imp(join(c, b), imp(a, b));
            !leq(lhs, rhs)
        })),
    );
    report.push(
        "(ii) (a ∨ b) ⊙ (a → b) ≤ b",
        Verdict::from_witness(first_pair(n, |a, b| !leq(mul(join(a, b), imp(a, b)), b))),
    );
    report.push(
        "(iii) a ⊙ b ≤ a ⊙ (b ∨ c)",
        Verdict::from_witness(first_triple(n, |a, b, c| {
            !leq(mul(a, b), mul(a, join(b, c)))
        })),
    );
    report.push(
        "(iv) x → (x ∨ y) = 1",
        Verdict::from_witness(first_pair(n, |x, y| imp(x, join(x, y)) != one)),
    );

    let rrl = check_rrl(cand);
    let groupoid_ok = rrl.get(COMMUTATIVE).is_some_and(Verdict::holds)
        && rrl.get(UNIT).is_some_and(Verdict::holds);
    let conclusion = if !(report.all_hold() && groupoid_ok) {
        Verdict::Skipped("hypotheses do not hold")
    } else {
        match rrl.failures().next() {
            None => Verdict::Holds,
            Some((_, w)) => Verdict::Fails(w.clone()),
        }
    };
    report.push(VARIETY_CONCLUSION, conclusion);
    report
}
