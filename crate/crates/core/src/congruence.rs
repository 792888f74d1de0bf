//! Congruences of finite algebras: principal congruences, the full
//! congruence lattice, permutability, congruence distributivity and weak
//! regularity.

use std::collections::BTreeSet;
use std::fmt;

use crate::binop::BinOp;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::LatticeOps;
use crate::residuation::RrlCandidate;

pub const JOIN: &str = "join";
pub const MEET: &str = "meet";
/// Constant naming the top element.
pub const ONE: &str = "one";
pub const ZERO: &str = "zero";

/// Default carrier limit for [`all_congruences`].
pub const DEFAULT_BUDGET: usize = 16;

/// A finite algebra: a carrier with named total binary operations and named
/// constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    names: Vec<String>,
    ops: Vec<(String, BinOp)>,
    constants: Vec<(String, usize)>,
}

impl FiniteAlgebra {
    pub fn new(names: Vec<String>) -> Self {
        FiniteAlgebra {
            names,
            ops: Vec::new(),
            constants: Vec::new(),
        }
    }

    /// `(L, ∨, ∧)` with constants `one` / `zero` for top and bottom.
    pub fn from_lattice(lattice: &LatticeOps) -> Self {
        let mut alg = Self::new(lattice.poset().names().to_vec());
        alg.ops.push((JOIN.into(), lattice.join_table()));
        alg.ops.push((MEET.into(), lattice.meet_table()));
        if let Some(t) = lattice.top() {
            alg.constants.push((ONE.into(), t));
        }
        if let Some(b) = lattice.bottom() {
            alg.constants.push((ZERO.into(), b));
        }
        alg
    }

    /// `(L, ∨, ∧, ⊙, →, 1)` with `⊙` named `mul` and `→` named `imp`.
    pub fn from_rrl(cand: &RrlCandidate) -> Self {
        let mut alg = Self::from_lattice(cand.lattice());
        alg.ops.push(("mul".into(), cand.mult_table().clone()));
        alg.ops.push(("imp".into(), cand.imp_table().clone()));
        alg
    }

    pub fn with_op(mut self, name: &str, table: BinOp) -> Result<Self> {
        if table.size() != self.len() {
            return Err(Error::TableSize {
                expected: self.len(),
                found: table.size(),
            });
        }
        if let Some((a, b)) = table.first_undefined() {
            return Err(Error::PartialTable {
                name: name.into(),
                a: self.names[a].clone(),
                b: self.names[b].clone(),
            });
        }
        if let Some(v) = table.cells().iter().flatten().find(|&&v| v >= self.len()) {
            return Err(Error::CellOutOfRange(*v));
        }
        self.ops.retain(|(n, _)| n != name);
        self.ops.push((name.into(), table));
        Ok(self)
    }

    pub fn with_constant(mut self, name: &str, value: usize) -> Result<Self> {
        if value >= self.len() {
            return Err(Error::CellOutOfRange(value));
        }
        self.constants.retain(|(n, _)| n != name);
        self.constants.push((name.into(), value));
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ops(&self) -> &[(String, BinOp)] {
        &self.ops
    }

    pub fn op(&self, name: &str) -> Option<&BinOp> {
        self.ops.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    pub fn constant(&self, name: &str) -> Option<usize> {
        self.constants
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
    }

    pub fn constants(&self) -> &[(String, usize)] {
        &self.constants
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn from_labels(labels: &[usize]) -> Self {
        UnionFind(labels.to_vec())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    /// Merge, keeping the smaller index as root. True if two classes merged.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = (rx.min(ry), rx.max(ry));
        self.0[hi] = lo;
        true
    }

    fn labels(mut self) -> Vec<usize> {
        (0..self.0.len()).map(|x| self.find(x)).collect()
    }
}

/// A partition of the carrier, labeled by least block member so that equal
/// partitions compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Congruence {
    labels: Vec<usize>,
}

impl Congruence {
    pub fn identity(n: usize) -> Self {
        Congruence {
            labels: (0..n).collect(),
        }
    }

    pub fn all(n: usize) -> Self {
        Congruence { labels: vec![0; n] }
    }

    /// Canonicalize arbitrary block labels.
    pub fn from_blocks(block_of: &[usize]) -> Self {
        let mut first = std::collections::HashMap::new();
        let labels = block_of
            .iter()
            .enumerate()
            .map(|(i, b)| *first.entry(*b).or_insert(i))
            .collect();
        Congruence { labels }
    }

    /// The partition as a congruence of `alg`, if it is compatible.
    pub fn from_partition(alg: &FiniteAlgebra, block_of: &[usize]) -> Option<Self> {
        let c = Self::from_blocks(block_of);
        (c.labels.len() == alg.len() && c.is_compatible(alg)).then_some(c)
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.labels[x] == self.labels[y]
    }

    pub fn class_of(&self, x: usize) -> ElemSet {
        let l = self.labels[x];
        (0..self.labels.len())
            .filter(|&y| self.labels[y] == l)
            .collect()
    }

    /// Blocks ordered by least member.
    pub fn blocks(&self) -> Vec<ElemSet> {
        (0..self.labels.len())
            .filter(|&x| self.labels[x] == x)
            .map(|x| self.class_of(x))
            .collect()
    }

    pub fn block_count(&self) -> usize {
        self.labels
            .iter()
            .enumerate()
            .filter(|(i, l)| *i == **l)
            .count()
    }

    pub fn is_identity(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, l)| i == *l)
    }

    pub fn is_all(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    pub fn is_subset(&self, other: &Congruence) -> bool {
        (0..self.labels.len()).all(|x| other.related(x, self.labels[x]))
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let pairs: Vec<(usize, usize)> = self
            .labels
            .iter()
            .zip(&other.labels)
            .map(|(a, b)| (*a, *b))
            .collect();
        let mut index = std::collections::HashMap::new();
        let block_of: Vec<usize> = pairs
            .iter()
            .map(|p| {
                let next = index.len();
                *index.entry(*p).or_insert(next)
            })
            .collect();
        Congruence::from_blocks(&block_of)
    }

    /// Transitive closure of the union.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::from_labels(&self.labels);
        for (x, &l) in other.labels.iter().enumerate() {
            uf.union(x, l);
        }
        Congruence {
            labels: uf.labels(),
        }
    }

    /// Relation rows: `row[x]` is the class of `x`.
    pub fn rows(&self) -> Vec<ElemSet> {
        (0..self.labels.len()).map(|x| self.class_of(x)).collect()
    }

    /// Every operation maps related arguments to related results.
    pub fn is_compatible(&self, alg: &FiniteAlgebra) -> bool {
        let n = alg.len();
        alg.ops.iter().all(|(_, op)| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    let (lx, ly) = (self.labels[x], self.labels[y]);
                    self.related(op.at(x, y), op.at(lx, ly))
                })
            })
        })
    }

    /// Blocks written with element names, e.g. `{0,b} {a,c,1}`.
    pub fn render(&self, names: &[String]) -> String {
        self.blocks()
            .iter()
            .map(|b| {
                let parts: Vec<&str> = b.iter().map(|x| names[x].as_str()).collect();
                format!("{{{}}}", parts.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.blocks()).finish()
    }
}

/// Least congruence containing all given pairs.
pub fn generated_congruence(alg: &FiniteAlgebra, pairs: &[(usize, usize)]) -> Congruence {
    let n = alg.len();
    let mut uf = UnionFind::new(n);
    for &(a, b) in pairs {
        uf.union(a, b);
    }
    // Close under translations x ↦ f(x, y) and x ↦ f(y, x) until stable.
    loop {
        let mut changed = false;
        for (_, op) in &alg.ops {
            for x in 0..n {
                let rx = uf.find(x);
                if rx == x {
                    continue;
                }
                for y in 0..n {
                    changed |= uf.union(op.at(x, y), op.at(rx, y));
                    changed |= uf.union(op.at(y, x), op.at(y, rx));
                }
            }
        }
        if !changed {
            break;
        }
    }
    Congruence {
        labels: uf.labels(),
    }
}

/// Least congruence relating `a` and `b`.
pub fn principal_congruence(alg: &FiniteAlgebra, a: usize, b: usize) -> Congruence {
    generated_congruence(alg, &[(a, b)])
}

/// The congruence lattice of an algebra, as a sorted list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConLattice {
    pub congruences: Vec<Congruence>,
}

/// All congruences, computed as the join-closure of the principal
/// congruences together with the identity.
///
/// Ordered by decreasing number of blocks (identity first, total relation
/// last), ties broken by label vectors.
pub fn all_congruences(alg: &FiniteAlgebra) -> Result<ConLattice> {
    all_congruences_with_budget(alg, DEFAULT_BUDGET)
}

pub fn all_congruences_with_budget(alg: &FiniteAlgebra, budget: usize) -> Result<ConLattice> {
    let n = alg.len();
    if n > budget {
        return Err(Error::BudgetExceeded {
            what: "congruence enumeration",
            size: n,
            limit: budget,
        });
    }
    let mut found: BTreeSet<Congruence> = BTreeSet::new();
    found.insert(Congruence::identity(n));
    for a in 0..n {
        for b in a + 1..n {
            found.insert(principal_congruence(alg, a, b));
        }
    }
    let mut work: Vec<Congruence> = found.iter().cloned().collect();
    while let Some(theta) = work.pop() {
        let snapshot: Vec<Congruence> = found.iter().cloned().collect();
        for phi in snapshot {
            let j = theta.join(&phi);
            if found.insert(j.clone()) {
                work.push(j);
            }
        }
    }
    let mut congruences: Vec<Congruence> = found.into_iter().collect();
    congruences.sort_by(|x, y| {
        y.block_count()
            .cmp(&x.block_count())
            .then_with(|| x.labels.cmp(&y.labels))
    });
    Ok(ConLattice { congruences })
}

/// `(a, c)` lies in `θ ∘ φ` (some `b` with `a θ b φ c`) but not in `φ ∘ θ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonPermuting {
    pub theta: usize,
    pub phi: usize,
    pub a: usize,
    pub c: usize,
}

/// `θ ∧ (φ ∨ ψ) ≠ (θ ∧ φ) ∨ (θ ∧ ψ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonDistributive {
    pub theta: usize,
    pub phi: usize,
    pub psi: usize,
}

/// Two distinct congruences with the same class of `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SameKernel {
    pub theta: usize,
    pub phi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakRegularity {
    pub kernel: Result<(), SameKernel>,
    /// `x → y = 1` and `y → x = 1` exactly when `x = y`; `None` when the
    /// algebra has no residual (`imp` or `*`). The error is the least
    /// offending pair.
    pub terms: Option<Result<(), (usize, usize)>>,
}

impl WeakRegularity {
    pub fn holds(&self) -> bool {
        self.kernel.is_ok() && !matches!(self.terms, Some(Err(_)))
    }
}

/// A Maltsev-chain instance that did not behave as expected: with
/// `a θ b φ c` and `m = ((a → b) → c) ∧ ((c → b) → a)`, expected `m φ a`
/// and `m θ c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaltsevMismatch {
    pub theta: usize,
    pub phi: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub m: usize,
}

fn compose(theta: &[ElemSet], phi: &[ElemSet]) -> Vec<ElemSet> {
    theta
        .iter()
        .map(|row| row.iter().fold(ElemSet::EMPTY, |acc, y| acc.union(phi[y])))
        .collect()
}

fn residual_op(alg: &FiniteAlgebra) -> Option<&BinOp> {
    alg.op("imp").or_else(|| alg.op("*"))
}

impl ConLattice {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Congruence> {
        self.congruences.iter()
    }

    /// `θ ∘ φ = φ ∘ θ` for every pair, compared as relation matrices.
    pub fn check_permutable(&self) -> Result<(), NonPermuting> {
        let rows: Vec<Vec<ElemSet>> = self.congruences.iter().map(Congruence::rows).collect();
        for (i, ti) in rows.iter().enumerate() {
            for (j, tj) in rows.iter().enumerate().skip(i + 1) {
                let ij = compose(ti, tj);
                let ji = compose(tj, ti);
                if ij == ji {
                    continue;
                }
                for a in 0..ij.len() {
                    if let Some(c) = ij[a].difference(ji[a]).first() {
                        return Err(NonPermuting {
                            theta: i,
                            phi: j,
                            a,
                            c,
                        });
                    }
                    if let Some(c) = ji[a].difference(ij[a]).first() {
                        return Err(NonPermuting {
                            theta: j,
                            phi: i,
                            a,
                            c,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Distributive law of `(Con A, ∧, ∨)` over all triples.
    pub fn check_distributive(&self) -> Result<(), NonDistributive> {
        let cs = &self.congruences;
        for (i, t) in cs.iter().enumerate() {
            for (j, p) in cs.iter().enumerate() {
                for (k, q) in cs.iter().enumerate() {
                    if t.meet(&p.join(q)) != t.meet(p).join(&t.meet(q)) {
                        return Err(NonDistributive {
                            theta: i,
                            phi: j,
                            psi: k,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Congruences are determined by the class of the constant `one`; when a
    /// residual is present also check the two-term characterization.
    pub fn check_weakly_regular(&self, alg: &FiniteAlgebra) -> Result<WeakRegularity> {
        let one = alg
            .constant(ONE)
            .ok_or_else(|| Error::MissingConstant(ONE.into()))?;
        let mut kernel = Ok(());
        'outer: for (i, t) in self.congruences.iter().enumerate() {
            for (j, p) in self.congruences.iter().enumerate().skip(i + 1) {
                if t.class_of(one) == p.class_of(one) {
                    kernel = Err(SameKernel { theta: i, phi: j });
                    break 'outer;
                }
            }
        }
        let terms = residual_op(alg).map(|imp| {
            let n = alg.len();
            (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .find(|&(x, y)| (imp.at(x, y) == one && imp.at(y, x) == one) != (x == y))
                .map_or(Ok(()), Err)
        });
        Ok(WeakRegularity { kernel, terms })
    }

    /// Replay the permutability argument on concrete congruences: for every
    /// `θ, φ` and `a θ b φ c`, the element `((a → b) → c) ∧ ((c → b) → a)`
    /// should be `φ`-related to `a` and `θ`-related to `c`. Returns every
    /// mismatch.
    pub fn maltsev_replay(&self, alg: &FiniteAlgebra) -> Result<Vec<MaltsevMismatch>> {
        let imp = residual_op(alg).ok_or_else(|| Error::MissingOperation("imp".into()))?;
        let meet = alg
            .op(MEET)
            .ok_or_else(|| Error::MissingOperation(MEET.into()))?;
        let n = alg.len();
        let mut out = Vec::new();
        for (i, theta) in self.congruences.iter().enumerate() {
            for (j, phi) in self.congruences.iter().enumerate() {
                for a in 0..n {
                    for b in theta.class_of(a) {
                        for c in phi.class_of(b) {
                            let left = imp.at(imp.at(a, b), c);
                            let right = imp.at(imp.at(c, b), a);
                            let m = meet.at(left, right);
                            if !(phi.related(m, a) && theta.related(m, c)) {
                                out.push(MaltsevMismatch {
                                    theta: i,
                                    phi: j,
                                    a,
                                    b,
                                    c,
                                    m,
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}
