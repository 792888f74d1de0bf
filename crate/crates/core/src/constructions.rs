//! Named fixtures, direct products and exhaustive enumeration of small
//! posets and lattices.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::binop::BinOp;
use crate::elemset::{ElemSet, MAX_CARRIER};
use crate::error::{Error, Result};
use crate::lattice::LatticeOps;
use crate::poset::{make_poset, Poset};

/// Name of the sectional pseudocomplement table in fixtures and files.
pub const STAR: &str = "*";
/// Name of the multiplication table.
pub const MUL: &str = "mul";
/// Name of the residual (implication) table.
pub const IMP: &str = "imp";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixtureName {
    /// The pentagon, with its sectional pseudocomplement table.
    N5,
    /// The six-element non-lattice poset, with its `*` table.
    P6,
    /// Three-element chain with non-meet multiplication and residual.
    Ex1,
    Chain(usize),
    /// The diamond.
    M3,
    /// Boolean lattice of subsets of a `k`-set.
    Boole(usize),
}

impl FromStr for FixtureName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        let param = |prefix: &str| -> Option<usize> {
            upper
                .strip_prefix(prefix)?
                .strip_prefix('(')?
                .strip_suffix(')')?
                .trim()
                .parse()
                .ok()
        };
        match upper.as_str() {
            "N5" => Ok(FixtureName::N5),
            "P6" => Ok(FixtureName::P6),
            "EX1" => Ok(FixtureName::Ex1),
            "M3" => Ok(FixtureName::M3),
            _ => param("CHAIN")
                .map(FixtureName::Chain)
                .or_else(|| param("BOOLE").map(FixtureName::Boole))
                .ok_or_else(|| Error::UnknownFixture(s.to_string())),
        }
    }
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureName::N5 => write!(f, "N5"),
            FixtureName::P6 => write!(f, "P6"),
            FixtureName::Ex1 => write!(f, "EX1"),
            FixtureName::Chain(k) => write!(f, "CHAIN({k})"),
            FixtureName::M3 => write!(f, "M3"),
            FixtureName::Boole(k) => write!(f, "BOOLE({k})"),
        }
    }
}

/// A structure together with the operation tables printed for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub poset: Poset,
    pub tables: Vec<(String, BinOp)>,
}

impl Fixture {
    pub fn table(&self, name: &str) -> Option<&BinOp> {
        self.tables.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    /// Lattice view; panics for non-lattice fixtures (P6).
    pub fn lattice(&self) -> LatticeOps {
        self.poset
            .as_lattice()
            .unwrap_or_else(|e| panic!("fixture is not a lattice: {e}"))
    }
}

pub fn fixture_by_name(name: &str) -> Result<Fixture> {
    fixture(name.parse()?)
}

pub fn fixture(name: FixtureName) -> Result<Fixture> {
    match name {
        FixtureName::N5 => {
            let poset = make_poset(
                &["0", "a", "b", "c", "1"],
                &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
            )?;
            let star = BinOp::from_named_rows(
                &poset,
                &[
                    &["1", "1", "1", "1", "1"],
                    &["b", "1", "b", "1", "1"],
                    &["c", "a", "1", "c", "1"],
                    &["b", "a", "b", "1", "1"],
                    &["0", "a", "b", "c", "1"],
                ],
            )?;
            Ok(Fixture {
                poset,
                tables: vec![(STAR.into(), star)],
            })
        }
        FixtureName::P6 => {
            let poset = make_poset(
                &["0", "a", "b", "c", "d", "1"],
                &[
                    ("0", "a"),
                    ("0", "b"),
                    ("a", "c"),
                    ("a", "d"),
                    ("b", "c"),
                    ("b", "d"),
                    ("c", "1"),
                    ("d", "1"),
                ],
            )?;
            let star = BinOp::from_named_rows(
                &poset,
                &[
                    &["1", "1", "1", "1", "1", "1"],
                    &["b", "1", "b", "1", "1", "1"],
                    &["a", "a", "1", "1", "1", "1"],
                    &["0", "a", "b", "1", "d", "1"],
                    &["0", "a", "b", "c", "1", "1"],
                    &["0", "a", "b", "c", "d", "1"],
                ],
            )?;
            Ok(Fixture {
                poset,
                tables: vec![(STAR.into(), star)],
            })
        }
        FixtureName::Ex1 => {
            let poset = make_poset(&["0", "a", "1"], &[("0", "a"), ("a", "1")])?;
            let mul = BinOp::from_named_rows(
                &poset,
                &[&["0", "0", "0"], &["0", "0", "a"], &["0", "a", "1"]],
            )?;
            let imp = BinOp::from_named_rows(
                &poset,
                &[&["1", "1", "1"], &["a", "1", "1"], &["0", "a", "1"]],
            )?;
            Ok(Fixture {
                poset,
                tables: vec![(MUL.into(), mul), (IMP.into(), imp)],
            })
        }
        FixtureName::Chain(k) => Ok(Fixture {
            poset: chain(k)?,
            tables: vec![],
        }),
        FixtureName::M3 => {
            let poset = make_poset(
                &["0", "a", "b", "c", "1"],
                &[
                    ("0", "a"),
                    ("0", "b"),
                    ("0", "c"),
                    ("a", "1"),
                    ("b", "1"),
                    ("c", "1"),
                ],
            )?;
            Ok(Fixture {
                poset,
                tables: vec![],
            })
        }
        FixtureName::Boole(k) => Ok(Fixture {
            poset: boolean_lattice(k)?,
            tables: vec![],
        }),
    }
}

/// The chain `0 < 1 < .. < k-1`.
pub fn chain(k: usize) -> Result<Poset> {
    if k > MAX_CARRIER {
        return Err(Error::BudgetExceeded {
            what: "chain",
            size: k,
            limit: MAX_CARRIER,
        });
    }
    let names = (0..k).map(|i| i.to_string()).collect();
    Poset::from_leq(names, |a, b| a <= b)
}

/// Subsets of a `k`-set ordered by inclusion, named by bit strings.
pub fn boolean_lattice(k: usize) -> Result<Poset> {
    let size = 1usize.checked_shl(k as u32).unwrap_or(usize::MAX);
    if size > MAX_CARRIER {
        return Err(Error::BudgetExceeded {
            what: "boolean lattice",
            size,
            limit: MAX_CARRIER,
        });
    }
    let names = (0..size)
        .map(|m| {
            if k == 0 {
                "0".to_string()
            } else {
                (0..k)
                    .rev()
                    .map(|i| if m >> i & 1 == 1 { '1' } else { '0' })
                    .collect()
            }
        })
        .collect();
    Poset::from_leq(names, |a, b| a & !b == 0)
}

/// Cartesian product ordered componentwise; element `(p, q)` sits at index
/// `p * |Q| + q` and is named `p.q`.
pub fn direct_product(p: &Poset, q: &Poset) -> Result<Poset> {
    let size = p.len() * q.len();
    if size > MAX_CARRIER {
        return Err(Error::BudgetExceeded {
            what: "direct product",
            size,
            limit: MAX_CARRIER,
        });
    }
    let m = q.len();
    let names = (0..size)
        .map(|i| format!("{}.{}", p.name(i / m), q.name(i % m)))
        .collect();
    Poset::from_leq(names, |x, y| p.leq(x / m, y / m) && q.leq(x % m, y % m))
}

/// Componentwise product of two tables, matching the indexing of
/// [`direct_product`]. Undefined if either component is.
pub fn product_op(left: &BinOp, right: &BinOp) -> BinOp {
    let m = right.size();
    BinOp::from_fn(left.size() * m, |x, y| {
        let l = left.get(x / m, y / m)?;
        let r = right.get(x % m, y % m)?;
        Some(l * m + r)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    AllPosets,
    /// Posets with a greatest element.
    PosetsWithTop,
    Lattices,
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all-posets" | "posets" => Ok(Filter::AllPosets),
            "posets-with-top" => Ok(Filter::PosetsWithTop),
            // every finite non-empty lattice is bounded
            "lattices" | "lattices-with-top" => Ok(Filter::Lattices),
            other => Err(Error::Parse {
                line: 0,
                column: 0,
                message: format!("unknown filter `{other}`"),
            }),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::AllPosets => "all-posets",
            Filter::PosetsWithTop => "posets-with-top",
            Filter::Lattices => "lattices",
        })
    }
}

/// Largest size accepted by [`enumerate`] in deduplicating mode.
pub const DEDUP_LIMIT: usize = 8;
/// Largest size accepted by [`enumerate`] without deduplication.
pub const LABELED_LIMIT: usize = 7;

#[derive(Debug, Clone)]
pub struct Catalog {
    pub size: usize,
    pub filter: Filter,
    pub dedup: bool,
    pub structures: Vec<Poset>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.structures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.structures.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Poset> {
        self.structures.iter()
    }
}

/// All posets of size `n` passing `filter`.
///
/// Candidates are generated over the fixed linear extension `0 < 1 < .. < n-1`:
/// element `k` is attached below nothing earlier and above a down-closed
/// subset of `0..k`. Every poset has a linear extension, so this covers every
/// isomorphism type. Without `dedup` the catalog lists every such naturally
/// labeled poset; with `dedup` it keeps the first representative of each
/// isomorphism class.
pub fn enumerate(n: usize, filter: Filter, dedup: bool) -> Result<Catalog> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    let limit = if dedup { DEDUP_LIMIT } else { LABELED_LIMIT };
    if n > limit {
        return Err(Error::BudgetExceeded {
            what: "enumeration",
            size: n,
            limit,
        });
    }

    let mut structures = Vec::new();
    let mut seen = HashSet::new();
    let mut down = Vec::with_capacity(n);
    extend(n, filter, &mut down, &mut |rows: &[ElemSet]| {
        let poset = Poset::from_leq(default_names(rows), |a, b| rows[b].contains(a))
            .expect("down-closed extension yields a partial order");
        if filter == Filter::Lattices && poset.as_lattice().is_err() {
            return;
        }
        if dedup && !seen.insert(canonical_code(&poset)) {
            return;
        }
        structures.push(poset);
    });
    Ok(Catalog {
        size: n,
        filter,
        dedup,
        structures,
    })
}

fn extend(n: usize, filter: Filter, down: &mut Vec<ElemSet>, emit: &mut dyn FnMut(&[ElemSet])) {
    let k = down.len();
    if k == n {
        emit(down);
        return;
    }
    let earlier = ElemSet::full(k);
    for bits in 0..(1u64 << k) {
        let d = ElemSet::from_bits(bits);
        let is_last = k + 1 == n;
        if is_last && filter != Filter::AllPosets && d != earlier {
            continue;
        }
        if filter == Filter::Lattices && k > 0 && !d.contains(0) {
            continue;
        }
        if !d.iter().all(|x| down[x].is_subset(d)) {
            continue;
        }
        down.push(d.with(k));
        extend(n, filter, down, emit);
        down.pop();
    }
}

/// `0` for a bottom at index 0, `1` for a top at the last index, letters for
/// the rest.
fn default_names(down: &[ElemSet]) -> Vec<String> {
    let n = down.len();
    let all = ElemSet::full(n);
    let has_bottom = down.iter().all(|d| d.contains(0));
    let has_top = down[n - 1] == all;
    let mut letters = (b'a'..=b'z').map(|c| (c as char).to_string());
    (0..n)
        .map(|i| {
            if i == 0 && has_bottom {
                "0".to_string()
            } else if i == n - 1 && has_top {
                "1".to_string()
            } else {
                letters.next().unwrap_or_else(|| format!("e{i}"))
            }
        })
        .collect()
}

/// Isomorphism-invariant encoding of the order relation.
///
/// Elements are first partitioned by iterated colour refinement (sizes of
/// principal ideals and filters, then the colour multisets inside them);
/// the code is the lexicographically least lower-triangular comparability
/// matrix over all colour-respecting orderings.
pub fn canonical_code(poset: &Poset) -> Vec<u8> {
    let n = poset.len();
    let colors = refine_colors(poset);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| colors[x]);
    for x in order {
        match classes.last_mut() {
            Some(class) if colors[class[0]] == colors[x] => class.push(x),
            _ => classes.push(vec![x]),
        }
    }
    let slots: Vec<usize> = classes
        .iter()
        .enumerate()
        .flat_map(|(i, c)| std::iter::repeat_n(i, c.len()))
        .collect();

    let mut search = CanonSearch {
        poset,
        classes,
        slots,
        used: vec![false; n],
        placed: Vec::with_capacity(n),
        code: Vec::with_capacity(n * n),
        best: None,
    };
    search.run();
    let mut out: Vec<u8> = vec![n as u8];
    out.extend(search.best.unwrap_or_default());
    out
}

pub fn is_isomorphic(p: &Poset, q: &Poset) -> bool {
    p.len() == q.len() && canonical_code(p) == canonical_code(q)
}

fn refine_colors(poset: &Poset) -> Vec<usize> {
    let n = poset.len();
    let mut colors: Vec<usize> = {
        let keys: Vec<(usize, usize)> = (0..n)
            .map(|x| (poset.down(x).len(), poset.up(x).len()))
            .collect();
        rank(&keys)
    };
    loop {
        let keys: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|x| {
                let mut below: Vec<usize> = poset.down(x).iter().map(|y| colors[y]).collect();
                let mut above: Vec<usize> = poset.up(x).iter().map(|y| colors[y]).collect();
                below.sort_unstable();
                above.sort_unstable();
                (colors[x], below, above)
            })
            .collect();
        let next = rank(&keys);
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

struct CanonSearch<'a> {
    poset: &'a Poset,
    classes: Vec<Vec<usize>>,
    /// class index for each position
    slots: Vec<usize>,
    used: Vec<bool>,
    placed: Vec<usize>,
    code: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl CanonSearch<'_> {
    fn run(&mut self) {
        let pos = self.placed.len();
        if pos == self.slots.len() {
            if self.best.as_ref().is_none_or(|b| self.code < *b) {
                self.best = Some(self.code.clone());
            }
            return;
        }
        let class = self.slots[pos];
        for i in 0..self.classes[class].len() {
            let x = self.classes[class][i];
            if self.used[x] {
                continue;
            }
            let mark = self.code.len();
            for &y in &self.placed {
                let cell = u8::from(self.poset.leq(y, x)) | u8::from(self.poset.leq(x, y)) << 1;
                self.code.push(cell);
            }
            // prune when the prefix is already worse than the best code
            let worse = self
                .best
                .as_ref()
                .is_some_and(|b| self.code.as_slice() > &b[..self.code.len()]);
            if !worse {
                self.used[x] = true;
                self.placed.push(x);
                self.run();
                self.placed.pop();
                self.used[x] = false;
            }
            self.code.truncate(mark);
        }
    }
}
