//! Standard Young tableaux: validation, enumeration in a canonical order,
//! and the restriction/transpose operators.
//!
//! Entries are stored row-major in one flat array; a tableau of shape
//! `(3,2)` holding rows `[1,2,4]` and `[3,5]` stores `[1,2,4,3,5]`.
//! The canonical order on `SYT(λ)` is lexicographic on that flat reading
//! word, which gives every tableau a stable index in `[0, N)`.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default ceiling on the number of tableaux `enumerate` will materialize.
pub const DEFAULT_ENUM_CAP: u64 = 5_000_000;

/// A standard Young tableau: a bijective filling of a shape by `1..=n`,
/// strictly increasing along rows and down columns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct StandardTableau {
    shape: Partition,
    entries: Vec<u32>,
}

/// Position of a tableau in the canonical order of its shape.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TableauIndex(pub u32);

impl StandardTableau {
    /// Builds a tableau from its shape and flat row-major entries,
    /// validating standardness.
    pub fn new(shape: Partition, entries: Vec<u32>) -> Result<Self> {
        let n = shape.n();
        if entries.len() != n {
            return Err(Error::InvalidTableau(format!(
                "shape {shape} has {n} boxes but {} entries were given",
                entries.len()
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidTableau(format!(
                    "entries are not a bijection onto 1..={n}"
                )));
            }
            seen[v as usize] = true;
        }
        let t = StandardTableau { shape, entries };
        for i in 1..=t.shape.len() {
            for j in 1..=t.shape.row(i) {
                if j > 1 && t.value(i, j - 1) >= t.value(i, j) {
                    return Err(Error::InvalidTableau(format!(
                        "row {i} is not strictly increasing"
                    )));
                }
                if i > 1 && t.shape.row(i - 1) >= j && t.value(i - 1, j) >= t.value(i, j) {
                    return Err(Error::InvalidTableau(format!(
                        "column {j} is not strictly increasing"
                    )));
                }
            }
        }
        Ok(t)
    }

    /// Builds a tableau from explicit rows, deriving the shape.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        let entries = rows.into_iter().flatten().collect();
        StandardTableau::new(shape, entries)
    }

    pub(crate) fn from_parts_unchecked(shape: Partition, entries: Vec<u32>) -> Self {
        debug_assert!(StandardTableau::new(shape.clone(), entries.clone()).is_ok());
        StandardTableau { shape, entries }
    }

    pub fn empty() -> Self {
        StandardTableau {
            shape: Partition::empty(),
            entries: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// Flat row-major entries.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entry at 1-based `(row, col)`. Panics if the box is outside the shape.
    pub fn value(&self, row: usize, col: usize) -> u32 {
        assert!(
            row >= 1 && col >= 1 && col <= self.shape.row(row),
            "box ({row},{col}) outside shape {}",
            self.shape
        );
        self.entries[self.flat_index(row, col)]
    }

    fn flat_index(&self, row: usize, col: usize) -> usize {
        let offset: usize = self.shape.rows()[..row - 1].iter().sum();
        offset + col - 1
    }

    /// 1-based `(row, col)` of value `v`.
    pub fn position_of(&self, v: u32) -> Option<(usize, usize)> {
        let flat = self.entries.iter().position(|&x| x == v)?;
        let mut remaining = flat;
        for (i, &len) in self.shape.rows().iter().enumerate() {
            if remaining < len {
                return Some((i + 1, remaining + 1));
            }
            remaining -= len;
        }
        None
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(self.shape.len());
        let mut rest = self.entries.as_slice();
        for &len in self.shape.rows() {
            let (row, tail) = rest.split_at(len);
            out.push(row.to_vec());
            rest = tail;
        }
        out
    }

    /// The transpose tableau, of the conjugate shape.
    pub fn transpose(&self) -> StandardTableau {
        let shape = self.shape.transpose();
        let mut entries = vec![0u32; self.n()];
        let mut offsets = Vec::with_capacity(shape.len());
        let mut acc = 0;
        for &len in shape.rows() {
            offsets.push(acc);
            acc += len;
        }
        for i in 1..=self.shape.len() {
            for j in 1..=self.shape.row(i) {
                entries[offsets[j - 1] + (i - 1)] = self.value(i, j);
            }
        }
        StandardTableau { shape, entries }
    }

    /// Deletes the box holding `n`, leaving a tableau on `n-1` boxes.
    pub fn restrict(&self) -> StandardTableau {
        if self.n() == 0 {
            return self.clone();
        }
        let n = self.n() as u32;
        let (i, j) = self.position_of(n).expect("n present in a valid tableau");
        let flat = self.flat_index(i, j);
        let shape = self
            .shape
            .remove_corner(i, j)
            .expect("largest entry sits in a corner");
        let mut entries = self.entries.clone();
        entries.remove(flat);
        StandardTableau { shape, entries }
    }
}

/// The row-reading tableau: row `i` holds the consecutive values following
/// everything in earlier rows, so `T(i,j) = j + r₁ + … + r_{i-1}`.
pub fn superstandard(shape: &Partition) -> StandardTableau {
    let entries = (1..=shape.n() as u32).collect();
    StandardTableau {
        shape: shape.clone(),
        entries,
    }
}

/// All standard tableaux of `shape`, sorted in canonical order.
///
/// Errors with `CapExceeded` when `|SYT(shape)|` is larger than `cap`,
/// signalling callers to use counting-only paths.
pub fn enumerate(shape: &Partition, cap: u64) -> Result<Vec<StandardTableau>> {
    let count = shape.syt_count();
    if count > cap.into() {
        return Err(Error::CapExceeded {
            what: "tableau enumeration",
            required: count,
            cap,
        });
    }
    let n = shape.n();
    let rows = shape.rows();
    let mut offsets = Vec::with_capacity(rows.len());
    let mut acc = 0;
    for &len in rows {
        offsets.push(acc);
        acc += len;
    }

    let mut out = Vec::new();
    let mut entries = vec![0u32; n];
    let mut fill = vec![0usize; rows.len()];

    fn rec(
        v: u32,
        n: usize,
        rows: &[usize],
        offsets: &[usize],
        fill: &mut [usize],
        entries: &mut [u32],
        out: &mut Vec<StandardTableau>,
        shape: &Partition,
    ) {
        if v as usize > n {
            out.push(StandardTableau {
                shape: shape.clone(),
                entries: entries.to_vec(),
            });
            return;
        }
        for r in 0..rows.len() {
            // value v is placeable at the end of row r when the row has
            // room and the row above is strictly longer so far
            if fill[r] < rows[r] && (r == 0 || fill[r] < fill[r - 1]) {
                entries[offsets[r] + fill[r]] = v;
                fill[r] += 1;
                rec(v + 1, n, rows, offsets, fill, entries, out, shape);
                fill[r] -= 1;
            }
        }
    }
    rec(1, n, rows, &offsets, &mut fill, &mut entries, &mut out, shape);
    out.sort_unstable_by(|a, b| a.entries.cmp(&b.entries));
    debug_assert_eq!(BigUint::from(out.len()), count);
    Ok(out)
}

/// The full canonically ordered list of `SYT(shape)` with index lookups in
/// both directions. This is the index space every permutation in the crate
/// acts on.
pub struct SytTable {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
}

impl SytTable {
    pub fn new(shape: &Partition, cap: u64) -> Result<Self> {
        Ok(SytTable {
            shape: shape.clone(),
            tableaux: enumerate(shape, cap)?,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn tableau_at(&self, index: TableauIndex) -> Result<&StandardTableau> {
        self.tableaux
            .get(index.0 as usize)
            .ok_or(Error::IndexOutOfRange {
                index: index.0 as u64,
                len: self.tableaux.len() as u64,
            })
    }

    pub fn index_of(&self, t: &StandardTableau) -> Result<TableauIndex> {
        if t.shape() != &self.shape {
            return Err(Error::ShapeMismatch(format!(
                "tableau of shape {} looked up in table for {}",
                t.shape(),
                self.shape
            )));
        }
        self.index_of_entries(t.entries())
    }

    pub(crate) fn index_of_entries(&self, entries: &[u32]) -> Result<TableauIndex> {
        self.tableaux
            .binary_search_by(|probe| probe.entries.as_slice().cmp(entries))
            .map(|i| TableauIndex(i as u32))
            .map_err(|_| {
                Error::InvalidTableau(format!(
                    "entries {entries:?} not found in SYT({})",
                    self.shape
                ))
            })
    }
}

/// Convenience form of [`SytTable::tableau_at`] that enumerates internally.
pub fn tableau_at(shape: &Partition, index: TableauIndex) -> Result<StandardTableau> {
    let table = SytTable::new(shape, DEFAULT_ENUM_CAP)?;
    table.tableau_at(index).cloned()
}

/// Convenience form of [`SytTable::index_of`] that enumerates internally.
pub fn index_of(t: &StandardTableau) -> Result<TableauIndex> {
    let table = SytTable::new(t.shape(), DEFAULT_ENUM_CAP)?;
    table.index_of(t)
}

/// Wire format: `{"shape":[3,2],"rows":[[1,2,4],[3,5]]}`.
#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<TableauRepr> for StandardTableau {
    type Error = Error;

    fn try_from(repr: TableauRepr) -> Result<Self> {
        let t = StandardTableau::from_rows(repr.rows)?;
        let declared = Partition::new(repr.shape)?;
        if t.shape() != &declared {
            return Err(Error::ShapeMismatch(format!(
                "declared shape {declared} does not match rows with shape {}",
                t.shape()
            )));
        }
        Ok(t)
    }
}

impl From<StandardTableau> for TableauRepr {
    fn from(t: StandardTableau) -> TableauRepr {
        TableauRepr {
            shape: t.shape.rows().to_vec(),
            rows: t.rows(),
        }
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{row:?}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
