//! Integer partitions (Young diagrams) and the shape predicates the rest of
//! the crate dispatches on: hooks, almost hooks, self-transpose shapes, and
//! the `2√2·√n` genericity bound.
//!
//! Rows are stored as weakly decreasing positive lengths; the empty
//! partition is the unique shape with zero boxes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `n`: weakly decreasing positive row lengths.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    rows: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Validates that `rows` is weakly decreasing with all parts positive.
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.iter().any(|&r| r == 0) {
            return Err(Error::InvalidPartition(format!(
                "zero row in {rows:?}; drop empty rows"
            )));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "rows {rows:?} are not weakly decreasing"
            )));
        }
        let n = rows.iter().sum();
        Ok(Partition { rows, n })
    }

    /// The empty partition (zero boxes).
    pub fn empty() -> Self {
        Partition { rows: Vec::new(), n: 0 }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Total number of boxes.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Length of row `i` (1-based), zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        if i >= 1 && i <= self.rows.len() {
            self.rows[i - 1]
        } else {
            0
        }
    }

    /// Length of column `j` (1-based), zero beyond the first row.
    pub fn col(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.rows.iter().take_while(|&&r| r >= j).count()
    }

    /// The conjugate partition: column lengths become row lengths.
    pub fn transpose(&self) -> Partition {
        let mut rows = Vec::with_capacity(self.row(1));
        for j in 1..=self.row(1) {
            rows.push(self.col(j));
        }
        Partition { rows, n: self.n }
    }

    /// True iff the diagram has no box at (2,2).
    pub fn is_hook(&self) -> bool {
        self.row(2) <= 1
    }

    /// True iff the diagram is a hook plus the single box at (2,2),
    /// i.e. the second row has exactly two boxes and every later row at
    /// most one. The class is closed under transposition, so the column
    /// reading gives the same predicate.
    pub fn is_almost_hook(&self) -> bool {
        self.row(2) == 2 && self.row(3) <= 1
    }

    pub fn is_self_transpose(&self) -> bool {
        *self == self.transpose()
    }

    /// True iff the diagram fits in a `2√2·√n` square grid. Compared in
    /// exact integer arithmetic: `a ≤ 2√2·√n  ⟺  a² ≤ 8n`.
    pub fn is_generic(&self) -> bool {
        let n = self.n as u128;
        let width = self.row(1) as u128;
        let height = self.rows.len() as u128;
        width * width <= 8 * n && height * height <= 8 * n
    }

    /// True iff removing the box `(i, j)` (1-based) leaves a valid diagram.
    pub fn is_corner(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.row(i) == j && self.row(i + 1) < j
    }

    /// The removable boxes, as 1-based `(row, col)` pairs in row order.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.rows.len() {
            if self.row(i) > self.row(i + 1) {
                out.push((i, self.row(i)));
            }
        }
        out
    }

    /// Corners `(i,j)` such that some standard tableau of this shape has `n`
    /// at `(i,j)` and `n-1` directly above or directly to the left.
    /// Equivalently: removing the corner together with its upper or left
    /// neighbor leaves a valid diagram.
    pub fn extended_corners(&self) -> Result<Vec<(usize, usize)>> {
        if self.n < 2 {
            return Err(Error::InvalidPartition(format!(
                "extended corners need n >= 2, got n = {}",
                self.n
            )));
        }
        let k = self.rows.len();
        let out = self
            .corners()
            .into_iter()
            .filter(|&(i, j)| {
                // n-1 above n: rows i-1 and i both end at column j.
                let above = i >= 2 && self.row(i - 1) == j && (j >= 2 || i == k);
                // n-1 left of n: row i alone loses two boxes.
                let left = j >= 2 && self.row(i + 1) <= j - 2 && (j >= 3 || i == k);
                above || left
            })
            .collect();
        Ok(out)
    }

    /// The diagram with corner `(i,j)` removed.
    pub fn remove_corner(&self, i: usize, j: usize) -> Result<Partition> {
        if !self.is_corner(i, j) {
            return Err(Error::InvalidPartition(format!(
                "({i},{j}) is not a corner of {self}"
            )));
        }
        let mut rows = self.rows.clone();
        rows[i - 1] -= 1;
        if rows[i - 1] == 0 {
            rows.truncate(i - 1);
        }
        Ok(Partition { rows, n: self.n - 1 })
    }

    /// Whether this diagram is contained in `other` row by row.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, &r)| r <= other.row(i + 1))
    }

    /// `|SYT(λ)|` by the hook length formula, exact.
    pub fn syt_count(&self) -> BigUint {
        let mut numerator = BigUint::one();
        for v in 1..=self.n {
            numerator *= BigUint::from(v);
        }
        let cols = self.transpose();
        let mut denominator = BigUint::one();
        for (i, &len) in self.rows.iter().enumerate() {
            for j in 1..=len {
                let hook = (len - j) + (cols.rows[j - 1] - (i + 1)) + 1;
                denominator *= BigUint::from(hook);
            }
        }
        numerator / denominator
    }
}

/// All partitions of `n`, in ascending lexicographic order of their rows
/// (so `(1,1,…,1)` first and `(n)` last). This is the canonical shape
/// ordering used for deterministic batch output.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                rows: current.clone(),
                n: current.iter().sum(),
            });
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out.sort();
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self)
    }
}

/// Parses the comma-separated text form, e.g. `4,2,1`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let rows = trimmed
            .split(',')
            .map(|part| {
                part.trim().parse::<usize>().map_err(|e| Error::Parse {
                    what: "partition",
                    detail: format!("bad row length {part:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
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
