//! The cactus group action on standard Young tableaux.
//!
//! Bender-Knuth involutions `t_i` swap the values `i` and `i+1` when they
//! share neither a row nor a column. The interval generators `s_{[i,j]}`
//! act by the Schützenberger involution of the subtableau holding the
//! values `i..=j`; the prefix case `s_{[1,i]}` is evacuation of a straight
//! shape and the general case is obtained by conjugation,
//! `s_{[i,j]} = s_{[1,j]} s_{[1,j-i+1]} s_{[1,j]}`.
//!
//! Evacuation runs the classical delete-slide-record loop: remove the box
//! at (1,1), slide the hole outward moving the smaller of its right and
//! below neighbors, and record the complemented value at the freed corner.
//! The textbook negative-entry phase is folded into a single complement
//! `m ↦ i+1-m` at recording time.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm;
use crate::tableau::{StandardTableau, SytTable};

/// One letter of a cactus word.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CactusAtom {
    /// Bender-Knuth involution `t_i`, `1 ≤ i ≤ n-1`.
    Bk(usize),
    /// Interval generator `s_{[i,j]}`, `1 ≤ i < j ≤ n`.
    Interval(usize, usize),
}

/// A word in the generators, applied leftmost letter first.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct GeneratorWord {
    letters: Vec<CactusAtom>,
}

impl GeneratorWord {
    pub fn new(letters: Vec<CactusAtom>) -> Self {
        GeneratorWord { letters }
    }

    pub fn letters(&self) -> &[CactusAtom] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }
}

/// Word grammar: atoms `tK` and `sI:J`, separated by optional whitespace,
/// so both `"t2 t3 s1:4"` and `"t2t4"` parse.
impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        fn bad(detail: String) -> Error {
            Error::Parse {
                what: "generator word",
                detail,
            }
        }
        fn read_number(chars: &[char], pos: &mut usize) -> Result<usize> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            chars[start..*pos]
                .iter()
                .collect::<String>()
                .parse::<usize>()
                .map_err(|_| bad("expected an index after atom prefix".into()))
        }

        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let mut letters = Vec::new();
        while pos < chars.len() {
            let c = chars[pos];
            if c.is_whitespace() {
                pos += 1;
                continue;
            }
            match c {
                't' => {
                    pos += 1;
                    letters.push(CactusAtom::Bk(read_number(&chars, &mut pos)?));
                }
                's' => {
                    pos += 1;
                    let lo = read_number(&chars, &mut pos)?;
                    if pos >= chars.len() || chars[pos] != ':' {
                        return Err(bad(format!("expected ':' in s-atom of {s:?}")));
                    }
                    pos += 1;
                    let hi = read_number(&chars, &mut pos)?;
                    letters.push(CactusAtom::Interval(lo, hi));
                }
                other => return Err(bad(format!("unexpected character {other:?} in {s:?}"))),
            }
        }
        Ok(GeneratorWord { letters })
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, atom) in self.letters.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            match atom {
                CactusAtom::Bk(i) => write!(f, "t{i}")?,
                CactusAtom::Interval(i, j) => write!(f, "s{i}:{j}")?,
            }
        }
        Ok(())
    }
}

/// The Bender-Knuth involution `t_i`: swaps `i` and `i+1` when they lie in
/// neither the same row nor the same column, otherwise the identity.
pub fn bender_knuth(t: &StandardTableau, i: usize) -> Result<StandardTableau> {
    let n = t.n();
    if i < 1 || i >= n {
        return Err(Error::GeneratorOutOfRange { index: i, n });
    }
    let (r1, c1) = t.position_of(i as u32).expect("value present");
    let (r2, c2) = t.position_of(i as u32 + 1).expect("value present");
    if r1 == r2 || c1 == c2 {
        return Ok(t.clone());
    }
    let mut entries = t.entries().to_vec();
    let a = entries.iter().position(|&v| v == i as u32).unwrap();
    let b = entries.iter().position(|&v| v == i as u32 + 1).unwrap();
    entries.swap(a, b);
    Ok(StandardTableau::from_parts_unchecked(
        t.shape().clone(),
        entries,
    ))
}

/// Core of evacuation: replaces the values `1..=limit` by the evacuation of
/// the straight subtableau they form, leaving larger values in place.
fn evacuate_prefix(t: &StandardTableau, limit: usize) -> Vec<u32> {
    let rows = t.shape().rows();
    let mut offsets = Vec::with_capacity(rows.len());
    let mut acc = 0;
    for &len in rows {
        offsets.push(acc);
        acc += len;
    }

    let mut work = t.entries().to_vec();
    let mut result = t.entries().to_vec();

    // Row lengths of the subdiagram holding 1..=limit. Standardness makes
    // each such set a left prefix of its row and the lengths a partition.
    let mut active: Vec<usize> = rows
        .iter()
        .enumerate()
        .map(|(r, &len)| work[offsets[r]..offsets[r] + len].partition_point(|&v| v as usize <= limit))
        .collect();
    while active.last() == Some(&0) {
        active.pop();
    }

    for _ in 0..limit {
        let m = work[offsets[0]];
        let (mut r, mut c) = (0usize, 0usize);
        loop {
            let right = (c + 1 < active[r]).then(|| work[offsets[r] + c + 1]);
            let below = (r + 1 < active.len() && c < active[r + 1]).then(|| work[offsets[r + 1] + c]);
            match (right, below) {
                (None, None) => break,
                (Some(v), None) => {
                    work[offsets[r] + c] = v;
                    c += 1;
                }
                (None, Some(v)) => {
                    work[offsets[r] + c] = v;
                    r += 1;
                }
                (Some(rv), Some(bv)) => {
                    // the smaller neighbor slides into the hole
                    if rv < bv {
                        work[offsets[r] + c] = rv;
                        c += 1;
                    } else {
                        work[offsets[r] + c] = bv;
                        r += 1;
                    }
                }
            }
        }
        result[offsets[r] + c] = limit as u32 + 1 - m;
        active[r] -= 1;
        if active[r] == 0 {
            active.truncate(r);
        }
    }
    result
}

/// The Schützenberger involution `ξ` (full evacuation).
pub fn evacuate(t: &StandardTableau) -> StandardTableau {
    let entries = evacuate_prefix(t, t.n());
    StandardTableau::from_parts_unchecked(t.shape().clone(), entries)
}

/// The action of `s_{[1,i]}`: evacuation of the subtableau on values
/// `1..=i`, values above `i` unchanged.
pub fn partial_schutzenberger(t: &StandardTableau, i: usize) -> Result<StandardTableau> {
    let n = t.n();
    if i < 1 || i > n {
        return Err(Error::GeneratorOutOfRange { index: i, n });
    }
    let entries = evacuate_prefix(t, i);
    Ok(StandardTableau::from_parts_unchecked(
        t.shape().clone(),
        entries,
    ))
}

/// The action of `s_{[i,j]}`, realized as the conjugation
/// `s_{[1,j]} s_{[1,j-i+1]} s_{[1,j]}`. Only boxes holding values in
/// `[i, j]` move.
pub fn cactus_generator(t: &StandardTableau, i: usize, j: usize) -> Result<StandardTableau> {
    let n = t.n();
    if i < 1 || i >= j || j > n {
        return Err(Error::InvalidInterval { lo: i, hi: j, n });
    }
    if i == 1 {
        return partial_schutzenberger(t, j);
    }
    let outer = partial_schutzenberger(t, j)?;
    let inner = partial_schutzenberger(&outer, j - i + 1)?;
    partial_schutzenberger(&inner, j)
}

/// Applies a word left to right (first letter acts first).
pub fn apply_word(t: &StandardTableau, word: &GeneratorWord) -> Result<StandardTableau> {
    let mut current = t.clone();
    for atom in word.letters() {
        current = match *atom {
            CactusAtom::Bk(i) => bender_knuth(&current, i)?,
            CactusAtom::Interval(i, j) => cactus_generator(&current, i, j)?,
        };
    }
    Ok(current)
}

/// The Bender-Knuth word whose action equals `s_{[1,i]}`: the descending
/// runs `t_k t_{k-1} … t_1` concatenated for `k = 1, …, i-1`.
pub fn bk_word_for_prefix(i: usize) -> GeneratorWord {
    let mut letters = Vec::new();
    for k in 1..i {
        for m in (1..=k).rev() {
            letters.push(CactusAtom::Bk(m));
        }
    }
    GeneratorWord { letters }
}

/// Result of checking the defining cactus relations on one shape.
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub shape: Partition,
    pub tableau_count: u64,
    pub involution_checks: usize,
    pub commutation_checks: usize,
    pub nesting_checks: usize,
    pub counterexample: Option<String>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Exhaustively checks, as permutation identities on `SYT(p)`:
/// squares of generators, commutation of disjoint intervals, and the
/// nesting relation `s_{[i,j]} s_{[k,l]} s_{[i,j]} = s_{[i+j-l, i+j-k]}`.
pub fn verify_cactus_relations(p: &Partition, cap: u64) -> Result<RelationReport> {
    let table = SytTable::new(p, cap)?;
    let n = p.n();

    let mut perms: HashMap<(usize, usize), Vec<u32>> = HashMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            perms.insert((i, j), perm::interval_images(&table, i, j)?);
        }
    }
    let identity: Vec<u32> = (0..table.len() as u32).collect();
    let compose = |outer: &[u32], inner: &[u32]| -> Vec<u32> {
        inner.iter().map(|&x| outer[x as usize]).collect()
    };

    let mut report = RelationReport {
        shape: p.clone(),
        tableau_count: table.len() as u64,
        involution_checks: 0,
        commutation_checks: 0,
        nesting_checks: 0,
        counterexample: None,
    };

    for (&(i, j), perm_ij) in &perms {
        report.involution_checks += 1;
        if compose(perm_ij, perm_ij) != identity {
            report.counterexample = Some(format!("s{i}:{j} squared is not the identity"));
            return Ok(report);
        }
    }

    for (&(i, j), perm_ij) in &perms {
        for (&(k, l), perm_kl) in &perms {
            if j < k {
                report.commutation_checks += 1;
                if compose(perm_ij, perm_kl) != compose(perm_kl, perm_ij) {
                    report.counterexample =
                        Some(format!("disjoint s{i}:{j} and s{k}:{l} do not commute"));
                    return Ok(report);
                }
            }
            if i <= k && l <= j && (i, j) != (k, l) {
                report.nesting_checks += 1;
                let target = &perms[&(i + j - l, i + j - k)];
                let conjugated = compose(perm_ij, &compose(perm_kl, perm_ij));
                if &conjugated != target {
                    report.counterexample = Some(format!(
                        "s{i}:{j} s{k}:{l} s{i}:{j} differs from s{}:{}",
                        i + j - l,
                        i + j - k
                    ));
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

/// Result of checking the Bender-Knuth factorization of `s_{[1,i]}`.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub shape: Partition,
    pub tableau_count: u64,
    pub checks: u64,
    pub counterexample: Option<String>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `s_{[1,i]} = t_1 (t_2 t_1) ⋯ (t_{i-1} ⋯ t_1)` pointwise on
/// `SYT(p)` for every `i ≤ n`.
pub fn verify_bk_identity(p: &Partition, cap: u64) -> Result<IdentityReport> {
    let table = SytTable::new(p, cap)?;
    let mut report = IdentityReport {
        shape: p.clone(),
        tableau_count: table.len() as u64,
        checks: 0,
        counterexample: None,
    };
    for i in 1..=p.n() {
        let word = bk_word_for_prefix(i);
        for t in table.tableaux() {
            report.checks += 1;
            let direct = partial_schutzenberger(t, i)?;
            let via_bk = apply_word(t, &word)?;
            if direct != via_bk {
                report.counterexample = Some(format!(
                    "s1:{i} and its Bender-Knuth word disagree on {t} (shape {p})"
                ));
                return Ok(report);
            }
        }
    }
    Ok(report)
}
