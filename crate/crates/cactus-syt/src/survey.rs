//! Batch classification of shapes: is the permutation group generated by
//! the Bender-Knuth involutions on `SYT(λ)` the full symmetric group or
//! the alternating group?
//!
//! For non-hook, non-self-transpose shapes the group is one of the two, so
//! a single parity bit per generator decides the verdict: the group is
//! `S_N` exactly when some `t_i` is odd. The fast path computes those
//! parities without enumerating tableaux: `t_i` is a product of
//! `(N - F_i)/2` transpositions where `F_i` counts tableaux with `i` and
//! `i+1` adjacent in a row or column, and `F_i` is a sum over subdiagram
//! lattice paths — `Σ_μ U(μ) · D(μ + domino)` with `U` counting chains
//! from the empty shape up to `μ` and `D` chains from the domino extension
//! up to `λ`. All counts are exact big integers; parity is taken last.

use std::collections::HashMap;
use std::io;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::{bk_images, Parity, TableauPermutation};
use crate::tableau::SytTable;

/// Largest `n` the survey accepts per mode; beyond these the per-shape
/// costs leave desk scale.
pub const DEFAULT_SURVEY_N_CAP_ENUMERATION: usize = 14;
pub const DEFAULT_SURVEY_N_CAP_FAST: usize = 30;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    SymmetricGroup,
    AlternatingGroup,
    /// Hook-shaped or self-transpose; the dichotomy does not apply.
    NotApplicable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::SymmetricGroup => "SymmetricGroup",
            Verdict::AlternatingGroup => "AlternatingGroup",
            Verdict::NotApplicable => "NotApplicable",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassifyMethod {
    Enumeration,
    FastParity,
}

impl ClassifyMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClassifyMethod::Enumeration => "enumeration",
            ClassifyMethod::FastParity => "fast_parity",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct GeneratorParity {
    pub generator: usize,
    pub parity: Parity,
}

fn serialize_biguint<S: Serializer>(value: &BigUint, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&value.to_string())
}

/// Per-shape verdict with the parity evidence behind it.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub shape: Partition,
    pub n: usize,
    #[serde(serialize_with = "serialize_biguint")]
    pub syt: BigUint,
    pub verdict: Verdict,
    pub evidence: Vec<GeneratorParity>,
    pub method: ClassifyMethod,
    pub generic: bool,
}

/// Classifies one shape. Hook and self-transpose shapes come back
/// `NotApplicable`; otherwise the verdict is `SymmetricGroup` iff some
/// Bender-Knuth generator acts by an odd permutation.
pub fn classify(p: &Partition, method: ClassifyMethod, enum_cap: u64) -> Result<ClassificationReport> {
    let syt = p.syt_count();
    let generic = p.is_generic();
    let mut report = ClassificationReport {
        shape: p.clone(),
        n: p.n(),
        syt,
        verdict: Verdict::NotApplicable,
        evidence: Vec::new(),
        method,
        generic,
    };
    if p.is_hook() || p.is_self_transpose() {
        return Ok(report);
    }

    match method {
        ClassifyMethod::Enumeration => {
            let table = SytTable::new(p, enum_cap)?;
            for k in 2..p.n() {
                let perm =
                    TableauPermutation::from_images(p.clone(), bk_images(&table, k)?);
                report.evidence.push(GeneratorParity {
                    generator: k,
                    parity: perm.parity(),
                });
            }
        }
        ClassifyMethod::FastParity => {
            let counts = bk_fixed_point_counts(p);
            for k in 2..p.n() {
                report.evidence.push(GeneratorParity {
                    generator: k,
                    parity: involution_parity(&report.syt, &counts[k - 1]),
                });
            }
        }
    }

    report.verdict = if report
        .evidence
        .iter()
        .any(|e| e.parity == Parity::Odd)
    {
        Verdict::SymmetricGroup
    } else {
        Verdict::AlternatingGroup
    };
    Ok(report)
}

/// Parity of an involution with `fixed` fixed points on `total` points:
/// the sign of `(total - fixed) / 2` transpositions.
fn involution_parity(total: &BigUint, fixed: &BigUint) -> Parity {
    let moved = total - fixed;
    let swaps: BigUint = moved >> 1;
    if swaps.bit(0) {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Parity of `t_i` on `SYT(p)` without enumerating tableaux.
pub fn fast_parity_bk(p: &Partition, i: usize) -> Result<Parity> {
    let n = p.n();
    if i < 1 || i >= n {
        return Err(Error::GeneratorOutOfRange { index: i, n });
    }
    let counts = bk_fixed_point_counts(p);
    Ok(involution_parity(&p.syt_count(), &counts[i - 1]))
}

/// Exact fixed-point counts of every `t_i`, `i = 1, …, n-1`, via the
/// subdiagram lattice: `F_i = Σ_{|μ| = i-1} U(μ) · Σ_domino D(μ+domino)`.
pub fn bk_fixed_point_counts(p: &Partition) -> Vec<BigUint> {
    let n = p.n();
    if n < 2 {
        return Vec::new();
    }
    let lambda = p.rows();

    // all subdiagrams μ ⊆ λ, as trimmed row vectors
    let mut diagrams: Vec<Vec<usize>> = Vec::new();
    fn gen(lambda: &[usize], r: usize, prev: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        if r == lambda.len() {
            return;
        }
        for len in 1..=lambda[r].min(prev) {
            current.push(len);
            gen(lambda, r + 1, len, current, out);
            current.pop();
        }
    }
    gen(lambda, 0, usize::MAX, &mut Vec::new(), &mut diagrams);

    let id_of: HashMap<Vec<usize>, usize> = diagrams
        .iter()
        .enumerate()
        .map(|(i, d)| (d.clone(), i))
        .collect();
    let size_of = |d: &[usize]| -> usize { d.iter().sum() };
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, d) in diagrams.iter().enumerate() {
        by_size[size_of(d)].push(i);
    }

    let row = |d: &[usize], r: usize| -> usize { d.get(r).copied().unwrap_or(0) };
    let lam = |r: usize| -> usize { lambda.get(r).copied().unwrap_or(0) };

    // U: chains from the empty diagram, by removing corners
    let mut up = vec![BigUint::default(); diagrams.len()];
    up[id_of[&Vec::new()]] = BigUint::one();
    for m in 1..=n {
        for &id in &by_size[m] {
            let d = &diagrams[id];
            let mut total = BigUint::default();
            for r in 0..d.len() {
                if d[r] > row(d, r + 1) {
                    let mut smaller = d.clone();
                    smaller[r] -= 1;
                    if smaller[r] == 0 {
                        smaller.truncate(r);
                    }
                    total += &up[id_of[&smaller]];
                }
            }
            up[id] = total;
        }
    }

    // D: chains up to λ, by adding boxes
    let mut down = vec![BigUint::default(); diagrams.len()];
    down[id_of[lambda]] = BigUint::one();
    for m in (0..n).rev() {
        for &id in &by_size[m] {
            let d = &diagrams[id];
            let mut total = BigUint::default();
            for r in 0..=d.len() {
                let here = row(d, r);
                let above = if r == 0 { usize::MAX } else { d[r - 1] };
                if above > here && here + 1 <= lam(r) {
                    let mut bigger = d.clone();
                    if r == d.len() {
                        bigger.push(1);
                    } else {
                        bigger[r] += 1;
                    }
                    total += &down[id_of[&bigger]];
                }
            }
            down[id] = total;
        }
    }

    let mut fixed = vec![BigUint::default(); n - 1];
    for (id, d) in diagrams.iter().enumerate() {
        let m = size_of(d);
        if m + 2 > n {
            continue;
        }
        // generator index i = m + 1; the domino holds values i, i+1
        let mut reachable = BigUint::default();
        for r in 0..=d.len() {
            let here = row(d, r);
            let above = if r == 0 { usize::MAX } else { d[r - 1] };
            // horizontal domino on row r
            if above >= here + 2 && here + 2 <= lam(r) {
                let mut bigger = d.clone();
                if r == d.len() {
                    bigger.push(2);
                } else {
                    bigger[r] += 2;
                }
                reachable += &down[id_of[&bigger]];
            }
            // vertical domino on rows r, r+1
            if here == row(d, r + 1)
                && above > here
                && here + 1 <= lam(r)
                && here + 1 <= lam(r + 1)
            {
                let mut bigger = d.clone();
                while bigger.len() < r + 2 {
                    bigger.push(0);
                }
                bigger[r] += 1;
                bigger[r + 1] += 1;
                reachable += &down[id_of[&bigger]];
            }
        }
        // each product term is exact; parity is taken by the caller
        fixed[m] += &up[id] * reachable;
    }
    fixed
}

#[derive(Clone, Debug)]
pub struct SurveyConfig {
    pub n_min: usize,
    pub n_max: usize,
    /// Only survey shapes fitting the `2√2·√n` grid.
    pub generic_only: bool,
    pub fast: bool,
    pub enum_cap: u64,
    /// Worker threads; 0 uses the rayon default.
    pub threads: usize,
    /// Fill the `ms` column with wall-clock times. Off by default because
    /// it makes the output non-reproducible byte for byte.
    pub timings: bool,
    /// Override of the per-mode `n` ceiling.
    pub n_cap: Option<usize>,
}

impl SurveyConfig {
    pub fn new(n_min: usize, n_max: usize) -> Self {
        SurveyConfig {
            n_min,
            n_max,
            generic_only: false,
            fast: false,
            enum_cap: crate::tableau::DEFAULT_ENUM_CAP,
            threads: 0,
            timings: false,
            n_cap: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurveySummary {
    pub classified: usize,
    pub skipped: usize,
}

struct SurveyRow {
    n: usize,
    shape: Partition,
    syt: BigUint,
    verdict: Option<Verdict>,
    generic: bool,
    ms: Option<u128>,
}

/// Streams one CSV row per applicable shape (non-hook, non-self-transpose)
/// plus one aggregate row per `n`, columns
/// `n,shape,N,verdict,generic,method,ms`. Shapes whose state space exceeds
/// the enumeration cap are emitted with verdict `skipped`.
pub fn run_survey<W: io::Write>(cfg: &SurveyConfig, out: W) -> Result<SurveySummary> {
    let n_cap = cfg.n_cap.unwrap_or(if cfg.fast {
        DEFAULT_SURVEY_N_CAP_FAST
    } else {
        DEFAULT_SURVEY_N_CAP_ENUMERATION
    });
    if cfg.n_min > cfg.n_max {
        return Err(Error::InvalidConfig(format!(
            "empty range {}..={}",
            cfg.n_min, cfg.n_max
        )));
    }
    if cfg.n_max > n_cap {
        return Err(Error::InvalidConfig(format!(
            "n_max = {} exceeds the survey cap {} for this mode",
            cfg.n_max, n_cap
        )));
    }
    let method = if cfg.fast {
        ClassifyMethod::FastParity
    } else {
        ClassifyMethod::Enumeration
    };

    let jobs: Vec<Partition> = (cfg.n_min..=cfg.n_max)
        .flat_map(partitions_of)
        .filter(|p| !p.is_hook() && !p.is_self_transpose())
        .filter(|p| !cfg.generic_only || p.is_generic())
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
    let rows: Vec<SurveyRow> = pool.install(|| {
        jobs.par_iter()
            .map(|shape| {
                let started = Instant::now();
                let verdict = match classify(shape, method, cfg.enum_cap) {
                    Ok(report) => Some(report.verdict),
                    Err(Error::CapExceeded { .. }) => None,
                    Err(_) => None,
                };
                SurveyRow {
                    n: shape.n(),
                    shape: shape.clone(),
                    syt: shape.syt_count(),
                    verdict,
                    generic: shape.is_generic(),
                    ms: cfg.timings.then(|| started.elapsed().as_millis()),
                }
            })
            .collect()
    });

    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["n", "shape", "N", "verdict", "generic", "method", "ms"])?;
    let mut summary = SurveySummary {
        classified: 0,
        skipped: 0,
    };
    for n in cfg.n_min..=cfg.n_max {
        let mut symmetric = 0usize;
        let mut alternating = 0usize;
        let mut skipped = 0usize;
        let mut applicable = 0usize;
        for row in rows.iter().filter(|r| r.n == n) {
            applicable += 1;
            let verdict = match row.verdict {
                Some(Verdict::SymmetricGroup) => {
                    symmetric += 1;
                    "SymmetricGroup"
                }
                Some(Verdict::AlternatingGroup) => {
                    alternating += 1;
                    "AlternatingGroup"
                }
                Some(Verdict::NotApplicable) => unreachable!("filtered beforehand"),
                None => {
                    skipped += 1;
                    "skipped"
                }
            };
            writer.write_record([
                row.n.to_string(),
                row.shape.to_string(),
                row.syt.to_string(),
                verdict.to_string(),
                row.generic.to_string(),
                method.as_str().to_string(),
                row.ms.map(|ms| ms.to_string()).unwrap_or_default(),
            ])?;
        }
        let mut tally = format!("SymmetricGroup={symmetric};AlternatingGroup={alternating}");
        if skipped > 0 {
            tally.push_str(&format!(";skipped={skipped}"));
        }
        writer.write_record([
            n.to_string(),
            "aggregate".to_string(),
            applicable.to_string(),
            tally,
            String::new(),
            method.as_str().to_string(),
            String::new(),
        ])?;
        summary.classified += symmetric + alternating;
        summary.skipped += skipped;
    }
    writer.flush()?;
    Ok(summary)
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(crate::error::IoError(e.to_string()))
    }
}

/// Counts of even `|SYT|` among the partitions of `n` fitting a
/// `c√n × c√n` grid, with `c² = c_squared_num / c_squared_den` kept exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EvenSytStatistic {
    pub even_count: u64,
    pub total: u64,
}

impl EvenSytStatistic {
    pub fn fraction(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.even_count as f64 / self.total as f64
        }
    }
}

/// Empirical data for the even-`|SYT|` behavior of grid-bounded shapes.
/// The default generic bound `c = 2√2` corresponds to `c² = 8/1`.
pub fn even_syt_statistic(n: usize, c_squared_num: u64, c_squared_den: u64) -> EvenSytStatistic {
    let mut stat = EvenSytStatistic {
        even_count: 0,
        total: 0,
    };
    let fits = |len: usize| -> bool {
        (len as u128).pow(2) * c_squared_den as u128 <= c_squared_num as u128 * n as u128
    };
    for shape in partitions_of(n) {
        if !fits(shape.row(1)) || !fits(shape.len()) {
            continue;
        }
        stat.total += 1;
        if !shape.syt_count().bit(0) {
            stat.even_count += 1;
        }
    }
    stat
}
