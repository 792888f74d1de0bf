//! Finite posets and the order-theoretic bound operators `U` and `L`.

use std::collections::HashMap;
use std::fmt;

use crate::elemset::{ElemSet, MAX_CARRIER};
use crate::error::{Error, Result};
use crate::lattice::LatticeOps;

/// A finite partially ordered set on the dense carrier `0..n`.
///
/// Element order is the declaration order and is fixed for the lifetime of
/// the value; every scan in the crate walks elements in this order, which is
/// what makes reported witnesses deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    names: Vec<String>,
    /// `up[a]` = principal filter `{x | a <= x}`.
    up: Vec<ElemSet>,
    /// `down[a]` = principal ideal `{x | x <= a}`.
    down: Vec<ElemSet>,
}

/// Build a poset from a Hasse diagram given by element names and cover pairs
/// `(lower, upper)`. The order is the reflexive-transitive closure of the
/// covers.
pub fn make_poset<S: AsRef<str>>(names: &[S], cover_pairs: &[(S, S)]) -> Result<Poset> {
    let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    let index = name_index(&names)?;
    let lookup = |s: &str| {
        index
            .get(s)
            .copied()
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    };
    let mut pairs = Vec::with_capacity(cover_pairs.len());
    for (lo, hi) in cover_pairs {
        pairs.push((lookup(lo.as_ref())?, lookup(hi.as_ref())?));
    }
    Poset::from_covers(names, &pairs)
}

fn name_index(names: &[String]) -> Result<HashMap<&str, usize>> {
    if names.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    if names.len() > MAX_CARRIER {
        return Err(Error::CarrierTooLarge {
            size: names.len(),
            limit: MAX_CARRIER,
        });
    }
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(Error::DuplicateName(name.clone()));
        }
    }
    Ok(index)
}

impl Poset {
    /// Closure of index-based cover pairs.
    pub fn from_covers(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Poset> {
        name_index(&names)?;
        let n = names.len();
        let mut up: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(Error::UnknownName(format!("#{}", lo.max(hi))));
            }
            if lo == hi {
                return Err(Error::CycleDetected(names[lo].clone(), names[hi].clone()));
            }
            up[lo].insert(hi);
        }
        // Warshall over bit rows.
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row = row.union(row_k);
                }
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    let (x, y) = (a.min(b), a.max(b));
                    return Err(Error::CycleDetected(names[x].clone(), names[y].clone()));
                }
            }
        }
        Ok(Self::from_up_rows(names, up))
    }

    /// Build from an explicit order relation, validating the partial order laws.
    pub fn from_leq<F>(names: Vec<String>, leq: F) -> Result<Poset>
    where
        F: Fn(usize, usize) -> bool,
    {
        name_index(&names)?;
        let n = names.len();
        let up: Vec<ElemSet> = (0..n)
            .map(|a| (0..n).filter(|&b| leq(a, b)).collect())
            .collect();
        for a in 0..n {
            if !up[a].contains(a) {
                return Err(Error::NotAPartialOrder(format!(
                    "`{}` is not reflexive",
                    names[a]
                )));
            }
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    return Err(Error::NotAPartialOrder(format!(
                        "`{}` and `{}` violate antisymmetry",
                        names[a], names[b]
                    )));
                }
                if !up[b].is_subset(up[a]) {
                    return Err(Error::NotAPartialOrder(format!(
                        "transitivity fails above `{}` <= `{}`",
                        names[a], names[b]
                    )));
                }
            }
        }
        Ok(Self::from_up_rows(names, up))
    }

    fn from_up_rows(names: Vec<String>, up: Vec<ElemSet>) -> Poset {
        let n = names.len();
        let down = (0..n)
            .map(|b| (0..n).filter(|&a| up[a].contains(b)).collect())
            .collect();
        Poset { names, up, down }
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

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn carrier(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Principal filter `U(a)`.
    pub fn up(&self, a: usize) -> ElemSet {
        self.up[a]
    }

    /// Principal ideal `L(a)`.
    pub fn down(&self, a: usize) -> ElemSet {
        self.down[a]
    }

    /// `U(A)`: common upper bounds of `A`. `U(∅)` is the carrier.
    pub fn upper_set(&self, set: ElemSet) -> ElemSet {
        set.iter()
            .fold(self.carrier(), |acc, a| acc.intersection(self.up[a]))
    }

    /// `L(A)`: common lower bounds of `A`. `L(∅)` is the carrier.
    pub fn lower_set(&self, set: ElemSet) -> ElemSet {
        set.iter()
            .fold(self.carrier(), |acc, a| acc.intersection(self.down[a]))
    }

    /// `U(a, b)`.
    pub fn upper_pair(&self, a: usize, b: usize) -> ElemSet {
        self.up[a].intersection(self.up[b])
    }

    /// `L(a, b)`.
    pub fn lower_pair(&self, a: usize, b: usize) -> ElemSet {
        self.down[a].intersection(self.down[b])
    }

    /// The element of `set` above every other member, if there is one.
    pub fn maximum(&self, set: ElemSet) -> Option<usize> {
        set.iter().find(|&m| set.is_subset(self.down[m]))
    }

    /// The element of `set` below every other member, if there is one.
    pub fn minimum(&self, set: ElemSet) -> Option<usize> {
        set.iter().find(|&m| set.is_subset(self.up[m]))
    }

    /// Maximal members of `set`.
    pub fn maximal(&self, set: ElemSet) -> ElemSet {
        set.iter()
            .filter(|&m| self.up[m].intersection(set) == ElemSet::singleton(m))
            .collect()
    }

    /// Minimal members of `set`.
    pub fn minimal(&self, set: ElemSet) -> ElemSet {
        set.iter()
            .filter(|&m| self.down[m].intersection(set) == ElemSet::singleton(m))
            .collect()
    }

    /// Least upper bound of `{a, b}` if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.minimum(self.upper_pair(a, b))
    }

    /// Greatest lower bound of `{a, b}` if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.maximum(self.lower_pair(a, b))
    }

    pub fn top(&self) -> Option<usize> {
        self.maximum(self.carrier())
    }

    pub fn bottom(&self) -> Option<usize> {
        self.minimum(self.carrier())
    }

    /// `(bottom, top)`, each absent when the poset has no such element.
    pub fn bounds(&self) -> (Option<usize>, Option<usize>) {
        (self.bottom(), self.top())
    }

    /// Cover pairs `(lower, upper)` of the Hasse diagram, i.e. the transitive
    /// reduction, in lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            let above = self.up[a].difference(ElemSet::singleton(a));
            for b in self.minimal(above).iter() {
                out.push((a, b));
            }
        }
        out
    }

    /// Tabulate join and meet, or report the least pair lacking one.
    pub fn as_lattice(&self) -> Result<LatticeOps, NotALattice> {
        LatticeOps::from_poset(self)
    }

    /// Same order with every element renamed.
    pub fn renamed(&self, names: Vec<String>) -> Result<Poset> {
        if names.len() != self.len() {
            return Err(Error::TableSize {
                expected: self.len(),
                found: names.len(),
            });
        }
        name_index(&names)?;
        Ok(Poset {
            names,
            up: self.up.clone(),
            down: self.down.clone(),
        })
    }

    /// Format a set using element names, e.g. `{a, c}`.
    pub fn fmt_set(&self, set: ElemSet) -> String {
        let parts: Vec<&str> = set.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Format an index tuple using element names, e.g. `c,a`.
    pub fn fmt_tuple(&self, tuple: &[usize]) -> String {
        let parts: Vec<&str> = tuple.iter().map(|&x| self.name(x)).collect();
        parts.join(",")
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.names[a], self.names[b]))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.names)
            .field("covers", &covers)
            .finish()
    }
}

/// Which bound is missing for the offending pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MissingBound {
    Join,
    Meet,
}

/// Witness that a poset is not a lattice: the least pair `(a, b)` (in element
/// order) lacking a join or meet, with the antichain of minimal upper bounds
/// (for a missing join) or maximal lower bounds (for a missing meet).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a lattice: `{a_name}` and `{b_name}` have no {kind_name}, candidate bounds {bound_names:?}")]
pub struct NotALattice {
    pub a: usize,
    pub b: usize,
    pub missing: MissingBound,
    pub bounds: ElemSet,
    a_name: String,
    b_name: String,
    kind_name: &'static str,
    bound_names: Vec<String>,
}

impl NotALattice {
    pub(crate) fn new(poset: &Poset, a: usize, b: usize, missing: MissingBound) -> Self {
        let bounds = match missing {
            MissingBound::Join => poset.minimal(poset.upper_pair(a, b)),
            MissingBound::Meet => poset.maximal(poset.lower_pair(a, b)),
        };
        NotALattice {
            a,
            b,
            missing,
            bounds,
            a_name: poset.name(a).to_string(),
            b_name: poset.name(b).to_string(),
            kind_name: match missing {
                MissingBound::Join => "least upper bound",
                MissingBound::Meet => "greatest lower bound",
            },
            bound_names: bounds.iter().map(|x| poset.name(x).to_string()).collect(),
        }
    }
}
