//! Partitions, boxes, and multipartitions.
//!
//! Coordinates follow the usual English convention: a box is `(col, row)`
//! with `(0, 0)` the top-left corner, columns growing rightwards and rows
//! growing downwards. Components are 0-based here and 1-based in any
//! human-facing output.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};

/// A partition, stored as weakly decreasing positive row lengths.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zero rows.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.contains(&0) {
            return Err(Error::Precondition(format!("zero row inside {rows:?}")));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "rows {rows:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<usize>) -> Self {
        debug_assert!(Partition::new(rows.clone())
            .map(|p| p.rows == rows)
            .unwrap_or(false));
        Partition { rows }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Length of row `y`, zero past the last row.
    pub fn row(&self, y: usize) -> usize {
        self.rows.get(y).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, col: usize, row: usize) -> bool {
        col < self.row(row)
    }

    /// Boxes `(col, row)` whose removal leaves a Young diagram, top to bottom.
    pub fn removable_boxes(&self) -> Vec<(usize, usize)> {
        (0..self.rows.len())
            .filter(|&y| self.row(y) > self.row(y + 1))
            .map(|y| (self.rows[y] - 1, y))
            .collect()
    }

    /// Boxes `(col, row)` whose addition yields a Young diagram, top to bottom.
    pub fn addable_boxes(&self) -> Vec<(usize, usize)> {
        (0..=self.rows.len())
            .filter(|&y| y == 0 || self.row(y - 1) > self.row(y))
            .map(|y| (self.row(y), y))
            .collect()
    }

    pub fn remove_box(&self, row: usize) -> Result<Partition> {
        if self.row(row) == 0 || self.row(row) <= self.row(row + 1) {
            return Err(Error::Precondition(format!(
                "row {row} of {self} has no removable box"
            )));
        }
        let mut rows = self.rows.clone();
        rows[row] -= 1;
        Partition::new(rows)
    }

    pub fn add_box(&self, row: usize) -> Result<Partition> {
        if row > self.rows.len() || (row > 0 && self.row(row - 1) <= self.row(row)) {
            return Err(Error::Precondition(format!(
                "row {row} of {self} has no addable box"
            )));
        }
        let mut rows = self.rows.clone();
        if row == rows.len() {
            rows.push(1);
        } else {
            rows[row] += 1;
        }
        Ok(Partition { rows })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.rows
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_partition(s, 0)
    }
}

/// Parses `(a,b,c)`, `()`, `(0)`, `0`, and the exponent form `(2,1^3)`.
/// `base` is the offset of `s` inside the enclosing literal, for error reporting.
fn parse_partition(s: &str, base: usize) -> Result<Partition, ParseError> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    let fail = |off: usize, msg: &str| ParseError::new(s, base + lead + off, msg);
    if t == "0" {
        return Ok(Partition::empty());
    }
    let inner = t
        .strip_prefix('(')
        .ok_or_else(|| fail(0, "expected '('"))?
        .strip_suffix(')')
        .ok_or_else(|| fail(t.len(), "expected ')'"))?;
    let mut rows = Vec::new();
    if !inner.trim().is_empty() {
        let mut off = 1;
        for item in inner.split(',') {
            let item_t = item.trim();
            let (len, mult) = match item_t.split_once('^') {
                Some((a, k)) => (a.trim(), k.trim()),
                None => (item_t, "1"),
            };
            let len: usize = len
                .parse()
                .map_err(|_| fail(off, "expected a row length"))?;
            let mult: usize = mult
                .parse()
                .map_err(|_| fail(off, "expected a multiplicity"))?;
            rows.extend(std::iter::repeat_n(len, mult));
            off += item.len() + 1;
        }
    }
    if rows == [0] {
        rows.clear();
    }
    Partition::new(rows).map_err(|e| fail(0, &e.to_string()))
}

/// A box of a multipartition: 0-based component, column, and row.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Cell {
    pub comp: usize,
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub fn new(comp: usize, col: usize, row: usize) -> Self {
        Cell { comp, col, row }
    }
}

impl fmt::Display for Cell {
    /// Human-facing form with a 1-based component.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{},{}]", self.comp + 1, self.col, self.row)
    }
}

/// An ordered tuple of `r` partitions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition {
    comps: Vec<Partition>,
}

impl Multipartition {
    pub fn new(comps: Vec<Partition>) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::Precondition(
                "a multipartition needs r >= 1 components".into(),
            ));
        }
        Ok(Multipartition { comps })
    }

    /// Convenience constructor from nested row vectors.
    pub fn from_rows(rows: &[&[usize]]) -> Result<Self> {
        let comps = rows
            .iter()
            .map(|r| Partition::new(r.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Multipartition::new(comps)
    }

    pub fn empty(r: usize) -> Self {
        assert!(r >= 1);
        Multipartition {
            comps: vec![Partition::empty(); r],
        }
    }

    pub fn r(&self) -> usize {
        self.comps.len()
    }

    pub fn size(&self) -> usize {
        self.comps.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.comps
    }

    pub fn component(&self, l: usize) -> &Partition {
        &self.comps[l]
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.comp < self.comps.len() && self.comps[cell.comp].contains(cell.col, cell.row)
    }

    /// All boxes, ordered by component, then row, then column.
    pub fn boxes(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (l, p) in self.comps.iter().enumerate() {
            for (y, &len) in p.rows().iter().enumerate() {
                out.extend((0..len).map(|x| Cell::new(l, x, y)));
            }
        }
        out
    }

    /// Position of `cell` in [`Multipartition::boxes`], if present.
    pub fn box_index(&self, cell: Cell) -> Option<usize> {
        if !self.contains(cell) {
            return None;
        }
        let before: usize = self.comps[..cell.comp].iter().map(Partition::size).sum();
        let rows_above: usize = self.comps[cell.comp].rows()[..cell.row].iter().sum();
        Some(before + rows_above + cell.col)
    }

    pub fn with_component(&self, l: usize, p: Partition) -> Multipartition {
        let mut comps = self.comps.clone();
        comps[l] = p;
        Multipartition { comps }
    }
}

impl fmt::Display for Multipartition {
    /// `(2,1)|()|(1,1,1)|(2)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.comps.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Multipartition {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut comps = Vec::new();
        let mut off = 0;
        for piece in s.split('|') {
            comps.push(parse_partition(piece, off).map_err(|mut e| {
                e.input = s.to_string();
                e
            })?);
            off += piece.len() + 1;
        }
        Ok(Multipartition { comps })
    }
}

/// All partitions of `n` in reverse-lexicographic order of their row sequences.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_rows_unchecked(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Weak compositions of `n` into `r` parts, reverse-lexicographic.
fn compositions(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=rest).rev() {
            prefix.push(first);
            rec(rest - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, r, &mut Vec::new(), &mut out);
    out
}

/// All `r`-multipartitions of `n`.
///
/// Order: weak compositions of `n` (reverse-lexicographic), then for each
/// composition the product of per-component partition lists with the first
/// component varying slowest. Matrix indices built on this are stable.
pub fn enumerate_multipartitions(n: usize, r: usize) -> Vec<Multipartition> {
    assert!(r >= 1, "r must be positive");
    let tables: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();
    let mut out = Vec::new();
    for comp in compositions(n, r) {
        let mut idx = vec![0usize; r];
        'odometer: loop {
            out.push(Multipartition {
                comps: (0..r).map(|l| tables[comp[l]][idx[l]].clone()).collect(),
            });
            // last component fastest
            let mut l = r;
            loop {
                if l == 0 {
                    break 'odometer;
                }
                l -= 1;
                idx[l] += 1;
                if idx[l] < tables[comp[l]].len() {
                    break;
                }
                idx[l] = 0;
            }
        }
    }
    out
}
