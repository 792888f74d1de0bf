//! Line-oriented text format for finite structures.
//!
//! ```text
//! # the pentagon
//! elements: 0 a b c 1
//! covers: 0<a a<c c<1 0<b b<1
//! op *:
//! . 0 a b c 1
//! 0 1 1 1 1 1
//! a b 1 b 1 1
//! b c a 1 c 1
//! c b a b 1 1
//! 1 0 a b c 1
//! constants: one=1 zero=0
//! ```
//!
//! `#` starts a comment. `elements:` comes first; `covers:` is optional
//! (an antichain when omitted); any number of `op <name>:` tables follow,
//! each a header row starting with `.` and one row per element, `?` marking
//! an undefined cell; `constants:` is optional. Header and row order inside a
//! table is free, but every element must appear exactly once.

use std::collections::HashMap;

use crate::binop::BinOp;
use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFile {
    pub elements: Vec<String>,
    pub covers: Vec<(usize, usize)>,
    pub ops: Vec<(String, BinOp)>,
    pub constants: Vec<(String, usize)>,
}

impl StructureFile {
    /// Elements and covers of `poset`, no tables or constants.
    pub fn from_poset(poset: &Poset) -> Self {
        StructureFile {
            elements: poset.names().to_vec(),
            covers: poset.covers(),
            ops: Vec::new(),
            constants: Vec::new(),
        }
    }

    pub fn poset(&self) -> Result<Poset> {
        Poset::from_covers(self.elements.clone(), &self.covers)
    }

    pub fn op(&self, name: &str) -> Option<&BinOp> {
        self.ops.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    /// Insert or replace a table, keeping the position of an existing one.
    pub fn set_op(&mut self, name: &str, table: BinOp) {
        match self.ops.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = table,
            None => self.ops.push((name.to_string(), table)),
        }
    }

    pub fn constant(&self, name: &str) -> Option<usize> {
        self.constants
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("elements:");
        for e in &self.elements {
            out.push(' ');
            out.push_str(e);
        }
        out.push('\n');
        out.push_str("covers:");
        for &(lo, hi) in &self.covers {
            out.push_str(&format!(" {}<{}", self.elements[lo], self.elements[hi]));
        }
        out.push('\n');

        let width = self
            .elements
            .iter()
            .map(|e| e.chars().count())
            .max()
            .unwrap_or(1);
        for (name, table) in &self.ops {
            out.push_str(&format!("op {name}:\n"));
            let row = |head: &str, cells: &mut dyn Iterator<Item = &str>| {
                let mut line = format!("{head:<width$}");
                for c in cells {
                    line.push_str(&format!(" {c:<width$}"));
                }
                line.trim_end().to_string() + "\n"
            };
            out.push_str(&row(".", &mut self.elements.iter().map(String::as_str)));
            for (a, head) in self.elements.iter().enumerate() {
                let mut cells = (0..self.elements.len())
                    .map(|b| table.get(a, b).map_or("?", |v| self.elements[v].as_str()));
                out.push_str(&row(head, &mut cells));
            }
        }
        if !self.constants.is_empty() {
            out.push_str("constants:");
            for (name, v) in &self.constants {
                out.push_str(&format!(" {name}={}", self.elements[*v]));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokenize(line_no: usize, line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in content.char_indices().chain([(content.len(), ' ')]) {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                tokens.push(Token {
                    text: &content[s..i],
                    line: line_no,
                    column: content[..s].chars().count() + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    tokens
}

fn err(tok: Token<'_>, message: impl Into<String>) -> Error {
    Error::Parse {
        line: tok.line,
        column: tok.column,
        message: message.into(),
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name != "." && name != "?" && !name.contains(['<', '=', ':', '#'])
}

struct Parser<'a> {
    lines: Vec<Vec<Token<'a>>>,
    pos: usize,
    index: HashMap<&'a str, usize>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&[Token<'a>]> {
        self.lines.get(self.pos).map(Vec::as_slice)
    }

    fn next_line(&mut self) -> Option<Vec<Token<'a>>> {
        let l = self.lines.get(self.pos).cloned();
        self.pos += 1;
        l
    }

    fn element(&self, tok: Token<'a>, text: &str, offset: usize) -> Result<usize> {
        self.index
            .get(text)
            .copied()
            .ok_or_else(|| Error::UnknownElement {
                line: tok.line,
                column: tok.column + offset,
                name: text.to_string(),
            })
    }

    fn table(&mut self, header_tok: Token<'a>) -> Result<BinOp> {
        let n = self.index.len();
        let header = self
            .next_line()
            .ok_or_else(|| err(header_tok, "table header row missing"))?;
        if header[0].text != "." {
            return Err(err(header[0], "table header must start with `.`"));
        }
        if header.len() != n + 1 {
            return Err(Error::RaggedTable {
                line: header[0].line,
                expected: n,
                found: header.len() - 1,
            });
        }
        let mut columns = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for &t in &header[1..] {
            let c = self.element(t, t.text, 0)?;
            if std::mem::replace(&mut seen[c], true) {
                return Err(err(t, format!("column `{}` repeated", t.text)));
            }
            columns.push(c);
        }

        let mut table = BinOp::undefined(n);
        let mut rows_seen = vec![false; n];
        for _ in 0..n {
            let row = self
                .next_line()
                .ok_or_else(|| err(header[0], "table has fewer rows than elements"))?;
            let head = row[0];
            let a = self.element(head, head.text, 0)?;
            if std::mem::replace(&mut rows_seen[a], true) {
                return Err(err(head, format!("row `{}` repeated", head.text)));
            }
            if row.len() != n + 1 {
                return Err(Error::RaggedTable {
                    line: head.line,
                    expected: n,
                    found: row.len() - 1,
                });
            }
            for (&t, &b) in row[1..].iter().zip(&columns) {
                let v = if t.text == "?" {
                    None
                } else {
                    Some(self.element(t, t.text, 0)?)
                };
                table.set(a, b, v);
            }
        }
        Ok(table)
    }
}

pub fn parse(text: &str) -> Result<StructureFile> {
    let lines: Vec<Vec<Token<'_>>> = text
        .lines()
        .enumerate()
        .map(|(i, l)| tokenize(i + 1, l))
        .filter(|t| !t.is_empty())
        .collect();
    let mut p = Parser {
        lines,
        pos: 0,
        index: HashMap::new(),
    };

    let first = p.next_line().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "expected `elements:`".into(),
    })?;
    if first[0].text != "elements:" {
        return Err(err(first[0], "expected `elements:`"));
    }
    let mut elements = Vec::new();
    for &t in &first[1..] {
        if !valid_name(t.text) {
            return Err(err(t, format!("invalid element name `{}`", t.text)));
        }
        if p.index.insert(t.text, elements.len()).is_some() {
            return Err(err(t, format!("duplicate element `{}`", t.text)));
        }
        elements.push(t.text.to_string());
    }
    if elements.is_empty() {
        return Err(err(first[0], "no elements declared"));
    }

    let mut covers = Vec::new();
    if p.peek().is_some_and(|l| l[0].text == "covers:") {
        let line = p.next_line().unwrap_or_default();
        for &t in &line[1..] {
            let (lo, hi) = t
                .text
                .split_once('<')
                .filter(|(l, h)| !l.is_empty() && !h.is_empty() && !h.contains('<'))
                .ok_or_else(|| err(t, format!("expected `lower<upper`, found `{}`", t.text)))?;
            covers.push((
                p.element(t, lo, 0)?,
                p.element(t, hi, lo.chars().count() + 1)?,
            ));
        }
    }

    let mut ops: Vec<(String, BinOp)> = Vec::new();
    let mut constants = Vec::new();
    while let Some(line) = p.next_line() {
        let head = line[0];
        match head.text {
            "op" => {
                let name = line
                    .get(1)
                    .and_then(|t| t.text.strip_suffix(':'))
                    .filter(|n| !n.is_empty() && line.len() == 2)
                    .ok_or_else(|| err(head, "expected `op <name>:`"))?;
                if ops.iter().any(|(n, _)| n == name) {
                    return Err(err(line[1], format!("operation `{name}` defined twice")));
                }
                let table = p.table(head)?;
                ops.push((name.to_string(), table));
            }
            "constants:" => {
                if !constants.is_empty() {
                    return Err(err(head, "constants declared twice"));
                }
                for &t in &line[1..] {
                    let (name, value) = t
                        .text
                        .split_once('=')
                        .filter(|(n, v)| !n.is_empty() && !v.is_empty())
                        .ok_or_else(|| {
                            err(t, format!("expected `name=element`, found `{}`", t.text))
                        })?;
                    let v = p.element(t, value, name.chars().count() + 1)?;
                    constants.push((name.to_string(), v));
                }
            }
            other => return Err(err(head, format!("unexpected `{other}`"))),
        }
    }

    Ok(StructureFile {
        elements,
        covers,
        ops,
        constants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fixture, FixtureName, STAR};

    const N5: &str = "\
# pentagon
elements: 0 a b c 1
covers: 0<a a<c c<1 0<b b<1
op *:
. 0 a b c 1
0 1 1 1 1 1
a b 1 b 1 1
b c a 1 c 1
c b a b 1 1
1 0 a b c 1
constants: one=1 zero=0
";

    #[test]
    fn parses_printed_table() {
        let s = parse(N5).unwrap();
        let f = fixture(FixtureName::N5).unwrap();
        assert_eq!(s.poset().unwrap(), f.poset);
        assert_eq!(s.op(STAR), f.table(STAR));
        assert_eq!(s.constant("one"), Some(4));
    }

    #[test]
    fn render_round_trip() {
        let s = parse(N5).unwrap();
        let text = s.render();
        assert_eq!(parse(&text).unwrap(), s);
        assert_eq!(parse(&text).unwrap().render(), text);
    }

    #[test]
    fn permuted_columns_and_partial_cells() {
        let text = "elements: 0 1\ncovers: 0<1\nop f:\n. 1 0\n1 ? 0\n0 1 1\n";
        let s = parse(text).unwrap();
        let f = s.op("f").unwrap();
        assert_eq!(
            (f.get(0, 0), f.get(0, 1), f.get(1, 0), f.get(1, 1)),
            (Some(1), Some(1), Some(0), None)
        );
    }

    #[test]
    fn errors_carry_positions() {
        let ragged = N5.replace("a b 1 b 1 1", "a b 1 b 1");
        assert_eq!(
            parse(&ragged),
            Err(Error::RaggedTable {
                line: 7,
                expected: 5,
                found: 4
            })
        );

        let unknown = N5.replace("c<1 0<b", "c<1 0<q");
        assert_eq!(
            parse(&unknown),
            Err(Error::UnknownElement {
                line: 3,
                column: 23,
                name: "q".into()
            })
        );

        assert!(matches!(
            parse("covers: a<b\n"),
            Err(Error::Parse {
                line: 1,
                column: 1,
                ..
            })
        ));
        assert!(matches!(
            parse("elements: a b\ncovers: a<<b\n"),
            Err(Error::Parse {
                line: 2,
                column: 9,
                ..
            })
        ));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse("elements: a a\n"),
            Err(Error::Parse {
                line: 1,
                column: 13,
                ..
            })
        ));
    }

    #[test]
    fn covers_are_optional() {
        let s = parse("elements: x y\n").unwrap();
        assert!(s.covers.is_empty());
        assert_eq!(s.render(), "elements: x y\ncovers:\n");
    }
}
