//! Binary operation tables over a finite carrier, possibly partial.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// An `n × n` operation table. A cell is either an element index or
/// undefined (`None`); partiality is an ordinary outcome, e.g. a missing
/// relative pseudocomplement.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinOp {
    n: usize,
    cells: Vec<Option<usize>>,
}

impl BinOp {
    /// A table with every cell undefined.
    pub fn undefined(n: usize) -> Self {
        BinOp {
            n,
            cells: vec![None; n * n],
        }
    }

    pub fn from_fn<F>(n: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Option<usize>,
    {
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push(f(a, b));
            }
        }
        BinOp { n, cells }
    }

    pub fn total_from_fn<F>(n: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> usize,
    {
        Self::from_fn(n, |a, b| Some(f(a, b)))
    }

    /// Build a total table from index rows; rows must be square and in range.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::TableSize {
                    expected: n,
                    found: row.len(),
                });
            }
            for &v in row {
                if v >= n {
                    return Err(Error::CellOutOfRange(v));
                }
                cells.push(Some(v));
            }
        }
        Ok(BinOp { n, cells })
    }

    /// Build a total table from rows of element names, rows and columns in
    /// element order.
    pub fn from_named_rows(poset: &Poset, rows: &[&[&str]]) -> Result<Self> {
        let mut idx = Vec::with_capacity(rows.len());
        for row in rows {
            let mut r = Vec::with_capacity(row.len());
            for name in row.iter() {
                r.push(
                    poset
                        .index_of(name)
                        .ok_or_else(|| Error::UnknownName(name.to_string()))?,
                );
            }
            idx.push(r);
        }
        if idx.len() != poset.len() {
            return Err(Error::TableSize {
                expected: poset.len(),
                found: idx.len(),
            });
        }
        Self::from_rows(&idx)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> Option<usize> {
        self.cells[a * self.n + b]
    }

    /// Value of a cell known to be defined.
    ///
    /// Panics on an undefined cell; callers that accept partial tables use
    /// [`BinOp::get`].
    pub fn at(&self, a: usize, b: usize) -> usize {
        self.get(a, b)
            .unwrap_or_else(|| panic!("operation undefined at ({a}, {b})"))
    }

    pub fn set(&mut self, a: usize, b: usize, value: Option<usize>) {
        self.cells[a * self.n + b] = value;
    }

    pub fn is_total(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    /// Least undefined cell, if any.
    pub fn first_undefined(&self) -> Option<(usize, usize)> {
        self.cells
            .iter()
            .position(Option::is_none)
            .map(|i| (i / self.n, i % self.n))
    }

    /// Fails with `PartialTable` unless every cell is defined and in range.
    pub fn require_total(&self, name: &str, poset: &Poset) -> Result<()> {
        if self.n != poset.len() {
            return Err(Error::TableSize {
                expected: poset.len(),
                found: self.n,
            });
        }
        if let Some(v) = self.cells.iter().flatten().find(|&&v| v >= self.n) {
            return Err(Error::CellOutOfRange(*v));
        }
        match self.first_undefined() {
            None => Ok(()),
            Some((a, b)) => Err(Error::PartialTable {
                name: name.to_string(),
                a: poset.name(a).to_string(),
                b: poset.name(b).to_string(),
            }),
        }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[Option<usize>] {
        &self.cells
    }

    /// Render as a table using element names, `?` for undefined cells.
    pub fn display<'a>(&'a self, poset: &'a Poset) -> TableDisplay<'a> {
        TableDisplay {
            op: self,
            poset,
            symbol: ".",
        }
    }
}

impl fmt::Debug for BinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for a in 0..self.n {
            list.entry(&&self.cells[a * self.n..(a + 1) * self.n]);
        }
        list.finish()
    }
}

pub struct TableDisplay<'a> {
    op: &'a BinOp,
    poset: &'a Poset,
    symbol: &'a str,
}

impl<'a> TableDisplay<'a> {
    pub fn with_symbol(mut self, symbol: &'a str) -> Self {
        self.symbol = symbol;
        self
    }
}

impl fmt::Display for TableDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.op.size();
        let width = self
            .poset
            .names()
            .iter()
            .map(|s| s.chars().count())
            .chain([1, self.symbol.chars().count()])
            .max()
            .unwrap_or(1);
        write!(f, "{:>width$}", self.symbol)?;
        for b in 0..n {
            write!(f, " {:>width$}", self.poset.name(b))?;
        }
        writeln!(f)?;
        for a in 0..n {
            write!(f, "{:>width$}", self.poset.name(a))?;
            for b in 0..n {
                let cell = self.op.get(a, b).map_or("?", |v| self.poset.name(v));
                write!(f, " {cell:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
