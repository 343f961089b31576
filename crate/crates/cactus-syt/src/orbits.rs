//! Orbit decomposition of the diagonal cactus action on pairs and triples
//! of standard Young tableaux, with the viability predicates and the
//! hook-pair invariants.
//!
//! Orbits are computed with the Bender-Knuth generators `t_2, …, t_{n-1}`
//! only (`t_1` is the identity): they generate the same permutation group
//! as the interval generators and cost O(1) per application. Pairs go
//! through a flat union-find over the encoded product space; triples are
//! swept by BFS with a bitset so the cube is never labeled in full.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::bk_images;
use crate::tableau::{superstandard, StandardTableau, SytTable, TableauIndex};

/// Default ceiling on the pair product space `N₁·N₂`.
pub const DEFAULT_PAIR_CAP: u64 = 10_000_000;
/// Default ceiling on the triple product space `N₁·N₂·N₃`.
pub const DEFAULT_TRIPLE_CAP: u64 = 100_000_000;

/// A point of a pair or triple space: one tableau index per shape.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TuplePoint {
    pub shapes: Vec<Partition>,
    pub indices: Vec<TableauIndex>,
}

/// Invariant labels attached to an orbit, evaluated at its representative.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct OrbitLabels {
    /// The representative is a viable tuple.
    pub viable: bool,
    /// Some two coordinates are the same tableau.
    pub any_equal: bool,
    /// Some two coordinates are transposes of each other.
    pub any_transposed: bool,
    /// `|S_{A,B}|` for pairs of hook shapes, absent otherwise.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shared_first_row: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitInfo {
    pub size: u64,
    /// How many members of the orbit are viable tuples. Viability is a
    /// cactus invariant, so this is `0` or `size`.
    pub viable_points: u64,
    pub representative: TuplePoint,
    pub labels: OrbitLabels,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitDecomposition {
    pub shapes: Vec<Partition>,
    pub total_points: u64,
    /// Ordered by the smallest encoded member of each orbit.
    pub orbits: Vec<OrbitInfo>,
    /// Dense orbit id per encoded point; kept for pairs, skipped for
    /// triples to avoid materializing the cube.
    #[serde(skip)]
    orbit_of_point: Option<Vec<u32>>,
}

impl OrbitDecomposition {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit_of_point(&self) -> Option<&[u32]> {
        self.orbit_of_point.as_deref()
    }

    pub fn orbit_sizes(&self) -> Vec<u64> {
        self.orbits.iter().map(|o| o.size).collect()
    }

    pub fn viable_points_total(&self) -> u64 {
        self.orbits.iter().map(|o| o.viable_points).sum()
    }

    /// True iff the viable tuples form a single full orbit (vacuously true
    /// when there are none).
    pub fn viable_single_orbit(&self) -> bool {
        let carriers: Vec<&OrbitInfo> = self
            .orbits
            .iter()
            .filter(|o| o.viable_points > 0)
            .collect();
        carriers.len() <= 1 && carriers.iter().all(|o| o.viable_points == o.size)
    }
}

/// The set of values lying in the first row of both hook tableaux.
pub fn shared_first_row(a: &StandardTableau, b: &StandardTableau) -> Result<BTreeSet<u32>> {
    if !a.shape().is_hook() || !b.shape().is_hook() {
        return Err(Error::NotHookShaped(format!(
            "({}) and ({})",
            a.shape(),
            b.shape()
        )));
    }
    if a.n() != b.n() {
        return Err(Error::ShapeMismatch(format!(
            "tableaux on {} and {} boxes",
            a.n(),
            b.n()
        )));
    }
    let row = |t: &StandardTableau| -> BTreeSet<u32> {
        (1..=t.shape().row(1)).map(|j| t.value(1, j)).collect()
    };
    Ok(row(a).intersection(&row(b)).copied().collect())
}

/// At most one of the two shapes may be a hook.
pub fn is_viable_shape_pair(p1: &Partition, p2: &Partition) -> bool {
    !(p1.is_hook() && p2.is_hook())
}

/// At most one of the three shapes may be a hook.
pub fn is_viable_shape_triple(p1: &Partition, p2: &Partition, p3: &Partition) -> bool {
    [p1, p2, p3].iter().filter(|p| p.is_hook()).count() <= 1
}

/// Shape pair viable, tableaux distinct and not transposes of each other.
/// Both tableaux must have the same number of boxes.
pub fn is_viable_pair(a: &StandardTableau, b: &StandardTableau) -> bool {
    assert_eq!(a.n(), b.n(), "viability needs tableaux of the same n");
    is_viable_shape_pair(a.shape(), b.shape()) && a != b && &a.transpose() != b
}

/// Shape triple viable, no two tableaux equal, no two transposed.
pub fn is_viable_triple(a: &StandardTableau, b: &StandardTableau, c: &StandardTableau) -> bool {
    assert!(
        a.n() == b.n() && b.n() == c.n(),
        "viability needs tableaux of the same n"
    );
    is_viable_shape_triple(a.shape(), b.shape(), c.shape())
        && a != b
        && b != c
        && a != c
        && &a.transpose() != b
        && &b.transpose() != c
        && &a.transpose() != c
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len as u32).collect(),
            size: vec![1; len],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grandparent = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grandparent;
            x = grandparent;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let mut ra = self.find(a);
        let mut rb = self.find(b);
        if ra == rb {
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
    }
}

/// Index map sending each tableau of `from` to its transpose in `to`,
/// when the shapes are conjugate.
fn transpose_index_map(from: &SytTable, to: &SytTable) -> Result<Option<Vec<u32>>> {
    if from.shape().transpose() != *to.shape() {
        return Ok(None);
    }
    let mut map = Vec::with_capacity(from.len());
    for t in from.tableaux() {
        map.push(to.index_of(&t.transpose())?.0);
    }
    Ok(Some(map))
}

fn check_same_n(shapes: &[&Partition]) -> Result<()> {
    if shapes.windows(2).any(|w| w[0].n() != w[1].n()) {
        return Err(Error::ShapeMismatch(format!(
            "shapes {} do not all have the same number of boxes",
            shapes
                .iter()
                .map(|p| format!("({p})"))
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    Ok(())
}

fn bk_generator_images(table: &SytTable) -> Result<Vec<Vec<u32>>> {
    (2..table.shape().n())
        .map(|k| bk_images(table, k))
        .collect()
}

/// Orbits of the diagonal action on `SYT(p1) × SYT(p2)`.
pub fn orbit_decompose_pairs(
    p1: &Partition,
    p2: &Partition,
    cap: u64,
) -> Result<OrbitDecomposition> {
    check_same_n(&[p1, p2])?;
    let required = p1.syt_count() * p2.syt_count();
    if required > cap.into() {
        return Err(Error::CapExceeded {
            what: "pair orbit decomposition",
            required,
            cap,
        });
    }

    let table1 = SytTable::new(p1, cap)?;
    let table2 = SytTable::new(p2, cap)?;
    let (n1, n2) = (table1.len(), table2.len());
    let total = n1 * n2;

    let gens1 = bk_generator_images(&table1)?;
    let gens2 = bk_generator_images(&table2)?;

    let mut uf = UnionFind::new(total);
    for (g1, g2) in gens1.iter().zip(&gens2) {
        for e in 0..total as u32 {
            let (i, j) = (e as usize / n2, e as usize % n2);
            let image = g1[i] * n2 as u32 + g2[j];
            uf.union(e, image);
        }
    }

    let same_shape = p1 == p2;
    let both_hooks = p1.is_hook() && p2.is_hook();
    let shape_viable = is_viable_shape_pair(p1, p2);
    let transpose_map = transpose_index_map(&table1, &table2)?;

    let mut orbit_of_point = vec![u32::MAX; total];
    let mut id_of_root = vec![u32::MAX; total];
    let mut orbits: Vec<OrbitInfo> = Vec::new();

    for e in 0..total as u32 {
        let root = uf.find(e);
        let (i, j) = (e as usize / n2, e as usize % n2);
        let equal = same_shape && i == j;
        let transposed = transpose_map
            .as_ref()
            .map_or(false, |m| m[i] == j as u32);
        let viable = shape_viable && !equal && !transposed;

        let id = if id_of_root[root as usize] == u32::MAX {
            let id = orbits.len() as u32;
            id_of_root[root as usize] = id;
            let shared = if both_hooks {
                let s = shared_first_row(
                    &table1.tableaux()[i],
                    &table2.tableaux()[j],
                )?;
                Some(s.len() as u64)
            } else {
                None
            };
            orbits.push(OrbitInfo {
                size: uf.size[root as usize] as u64,
                viable_points: 0,
                representative: TuplePoint {
                    shapes: vec![p1.clone(), p2.clone()],
                    indices: vec![TableauIndex(i as u32), TableauIndex(j as u32)],
                },
                labels: OrbitLabels {
                    viable,
                    any_equal: equal,
                    any_transposed: transposed,
                    shared_first_row: shared,
                },
            });
            id
        } else {
            id_of_root[root as usize]
        };
        orbit_of_point[e as usize] = id;
        if viable {
            orbits[id as usize].viable_points += 1;
        }
    }

    Ok(OrbitDecomposition {
        shapes: vec![p1.clone(), p2.clone()],
        total_points: total as u64,
        orbits,
        orbit_of_point: Some(orbit_of_point),
    })
}

/// Orbits of the diagonal action on `SYT(p1) × SYT(p2) × SYT(p3)`,
/// computed by BFS from each unvisited point over a bitset.
pub fn orbit_decompose_triples(
    p1: &Partition,
    p2: &Partition,
    p3: &Partition,
    cap: u64,
) -> Result<OrbitDecomposition> {
    check_same_n(&[p1, p2, p3])?;
    let required = p1.syt_count() * p2.syt_count() * p3.syt_count();
    if required > cap.into() {
        return Err(Error::CapExceeded {
            what: "triple orbit decomposition",
            required,
            cap,
        });
    }

    let tables = [
        SytTable::new(p1, cap)?,
        SytTable::new(p2, cap)?,
        SytTable::new(p3, cap)?,
    ];
    let sizes = [tables[0].len(), tables[1].len(), tables[2].len()];
    let total = sizes[0] * sizes[1] * sizes[2];

    let gens: Vec<[Vec<u32>; 3]> = {
        let mut per_table = [
            bk_generator_images(&tables[0])?,
            bk_generator_images(&tables[1])?,
            bk_generator_images(&tables[2])?,
        ];
        let count = per_table[0].len();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            // pop from the back of each list, then restore order
            let g3 = per_table[2].pop().unwrap();
            let g2 = per_table[1].pop().unwrap();
            let g1 = per_table[0].pop().unwrap();
            out.push([g1, g2, g3]);
        }
        out.reverse();
        out
    };

    let shape_viable = is_viable_shape_triple(p1, p2, p3);
    let equal_shapes = [p1 == p2, p2 == p3, p1 == p3];
    let maps = [
        transpose_index_map(&tables[0], &tables[1])?,
        transpose_index_map(&tables[1], &tables[2])?,
        transpose_index_map(&tables[0], &tables[2])?,
    ];

    let decode = |e: usize| -> (usize, usize, usize) {
        let k = e % sizes[2];
        let rest = e / sizes[2];
        (rest / sizes[1], rest % sizes[1], k)
    };
    let is_viable_point = |i: usize, j: usize, k: usize| -> bool {
        if !shape_viable {
            return false;
        }
        let equal = (equal_shapes[0] && i == j)
            || (equal_shapes[1] && j == k)
            || (equal_shapes[2] && i == k);
        let transposed = maps[0].as_ref().map_or(false, |m| m[i] == j as u32)
            || maps[1].as_ref().map_or(false, |m| m[j] == k as u32)
            || maps[2].as_ref().map_or(false, |m| m[i] == k as u32);
        !equal && !transposed
    };

    let mut visited = vec![0u64; total.div_ceil(64)];
    let mut orbits: Vec<OrbitInfo> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();

    for start in 0..total {
        if visited[start / 64] >> (start % 64) & 1 == 1 {
            continue;
        }
        visited[start / 64] |= 1 << (start % 64);
        stack.push(start);
        let mut size = 0u64;
        let mut viable_points = 0u64;
        while let Some(e) = stack.pop() {
            size += 1;
            let (i, j, k) = decode(e);
            if is_viable_point(i, j, k) {
                viable_points += 1;
            }
            for g in &gens {
                let image = (g[0][i] as usize * sizes[1] + g[1][j] as usize) * sizes[2]
                    + g[2][k] as usize;
                if visited[image / 64] >> (image % 64) & 1 == 0 {
                    visited[image / 64] |= 1 << (image % 64);
                    stack.push(image);
                }
            }
        }
        let (i, j, k) = decode(start);
        orbits.push(OrbitInfo {
            size,
            viable_points,
            representative: TuplePoint {
                shapes: vec![p1.clone(), p2.clone(), p3.clone()],
                indices: vec![
                    TableauIndex(i as u32),
                    TableauIndex(j as u32),
                    TableauIndex(k as u32),
                ],
            },
            labels: OrbitLabels {
                viable: is_viable_point(i, j, k),
                any_equal: (equal_shapes[0] && i == j)
                    || (equal_shapes[1] && j == k)
                    || (equal_shapes[2] && i == k),
                any_transposed: maps[0].as_ref().map_or(false, |m| m[i] == j as u32)
                    || maps[1].as_ref().map_or(false, |m| m[j] == k as u32)
                    || maps[2].as_ref().map_or(false, |m| m[i] == k as u32),
                shared_first_row: None,
            },
        });
    }

    Ok(OrbitDecomposition {
        shapes: vec![p1.clone(), p2.clone(), p3.clone()],
        total_points: total as u64,
        orbits,
        orbit_of_point: None,
    })
}

/// True iff BFS from the superstandard tableau under `t_2, …, t_{n-1}`
/// reaches all of `SYT(p)`.
pub fn single_orbit_check(p: &Partition, cap: u64) -> Result<bool> {
    let table = SytTable::new(p, cap)?;
    let gens = bk_generator_images(&table)?;
    let start = table.index_of(&superstandard(p))?.0 as usize;
    let mut visited = vec![false; table.len()];
    visited[start] = true;
    let mut stack = vec![start];
    let mut seen = 1usize;
    while let Some(x) = stack.pop() {
        for g in &gens {
            let y = g[x] as usize;
            if !visited[y] {
                visited[y] = true;
                seen += 1;
                stack.push(y);
            }
        }
    }
    Ok(seen == table.len())
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut result = BigUint::one();
    for step in 1..=k {
        result = result * BigUint::from(n - k + step) / BigUint::from(step);
    }
    result
}

/// Orbit sizes for pairs of a single hook shape with itself:
/// `N·C(k-1,i)·C(l-1,i)` for `i = 0, …, k-1`, where `k` and `l` are the
/// smaller and larger of the first row and first column lengths.
pub fn hook_pair_orbit_sizes(p: &Partition) -> Result<Vec<BigUint>> {
    if !p.is_hook() || p.n() == 0 {
        return Err(Error::NotHookShaped(format!("({p})")));
    }
    let r = p.row(1) as u64;
    let c = p.col(1) as u64;
    let (k, l) = (r.min(c), r.max(c));
    let count = p.syt_count();
    Ok((0..k)
        .map(|i| &count * binomial(k - 1, i) * binomial(l - 1, i))
        .collect())
}
