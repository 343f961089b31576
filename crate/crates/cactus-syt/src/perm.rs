//! Group elements as permutations of the canonical index space of
//! `SYT(λ)`: construction from words, fixed points, sign, and exact order
//! of the generated group at small degree via a stabilizer chain.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::cactus::{self, GeneratorWord};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{SytTable, TableauIndex};

/// Default degree ceiling for [`exact_group_order`].
pub const DEFAULT_GROUP_ORDER_POINT_CAP: u64 = 200;

/// Sign of a permutation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity of a product of two permutations with these signs.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A permutation of the index space `[0, N)` of `SYT(shape)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableauPermutation {
    shape: Partition,
    images: Vec<u32>,
}

impl TableauPermutation {
    pub(crate) fn from_images(shape: Partition, images: Vec<u32>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images.iter().all(|&v| {
                let fresh = !seen[v as usize];
                seen[v as usize] = true;
                fresh
            })
        });
        TableauPermutation { shape, images }
    }

    pub fn identity(shape: Partition, degree: usize) -> Self {
        TableauPermutation {
            shape,
            images: (0..degree as u32).collect(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of points acted on (`N = |SYT(shape)|`).
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, index: TableauIndex) -> TableauIndex {
        TableauIndex(self.images[index.0 as usize])
    }

    /// `(self ∘ inner)(x) = self(inner(x))`: `inner` acts first.
    pub fn compose(&self, inner: &TableauPermutation) -> TableauPermutation {
        debug_assert_eq!(self.shape, inner.shape);
        TableauPermutation {
            shape: self.shape.clone(),
            images: inner
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Number of indices with `images[i] = i`.
    pub fn fixed_points(&self) -> u64 {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i as u32 == v)
            .count() as u64
    }

    /// Sign, by cycle traversal with a visited bitmap.
    pub fn parity(&self) -> Parity {
        let n = self.images.len();
        let mut visited = vec![false; n];
        let mut transpositions = 0usize;
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle_len = 0usize;
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                x = self.images[x] as usize;
                cycle_len += 1;
            }
            transpositions += cycle_len - 1;
        }
        if transpositions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

fn images_of(
    table: &SytTable,
    mut act: impl FnMut(&crate::tableau::StandardTableau) -> Result<crate::tableau::StandardTableau>,
) -> Result<Vec<u32>> {
    let mut images = Vec::with_capacity(table.len());
    for t in table.tableaux() {
        let moved = act(t)?;
        images.push(table.index_of_entries(moved.entries())?.0);
    }
    Ok(images)
}

/// Raw image array of the Bender-Knuth involution `t_k` on the table's
/// index space.
pub(crate) fn bk_images(table: &SytTable, k: usize) -> Result<Vec<u32>> {
    images_of(table, |t| cactus::bender_knuth(t, k))
}

/// Raw image array of the interval generator `s_{[i,j]}`.
pub(crate) fn interval_images(table: &SytTable, i: usize, j: usize) -> Result<Vec<u32>> {
    images_of(table, |t| cactus::cactus_generator(t, i, j))
}

/// The permutation a word induces on the canonical index space of a table.
pub fn word_permutation(table: &SytTable, word: &GeneratorWord) -> Result<TableauPermutation> {
    let images = images_of(table, |t| cactus::apply_word(t, word))?;
    Ok(TableauPermutation::from_images(table.shape().clone(), images))
}

/// Convenience form of [`word_permutation`] that enumerates internally.
pub fn permutation_of_word(
    p: &Partition,
    word: &GeneratorWord,
    cap: u64,
) -> Result<TableauPermutation> {
    let table = SytTable::new(p, cap)?;
    word_permutation(&table, word)
}

/// Exact order of the subgroup of `S_N` generated by the Bender-Knuth
/// involutions `t_2, …, t_{n-1}` acting on `SYT(p)`, computed with a
/// stabilizer chain. Rejects shapes with more than `point_cap` tableaux.
pub fn exact_group_order(p: &Partition, point_cap: u64) -> Result<BigUint> {
    let count = p.syt_count();
    if count > point_cap.into() {
        return Err(Error::CapExceeded {
            what: "exact group order",
            required: count,
            cap: point_cap,
        });
    }
    let table = SytTable::new(p, point_cap)?;
    let mut gens = Vec::new();
    for k in 2..p.n() {
        gens.push(bk_images(&table, k)?);
    }
    Ok(schreier::group_order(table.len(), gens))
}

/// Deterministic Schreier-Sims over raw image arrays. Points are stored
/// in the smallest width that fits the degree (u16 below 65536, u32
/// otherwise); the hot loops are all memory bound.
mod schreier {
    use num_bigint::BigUint;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(super) trait Point: Copy + Eq {
        fn from_usize(x: usize) -> Self;
        fn index(self) -> usize;
    }

    impl Point for u16 {
        fn from_usize(x: usize) -> Self {
            x as u16
        }
        fn index(self) -> usize {
            self as usize
        }
    }

    impl Point for u32 {
        fn from_usize(x: usize) -> Self {
            x as u32
        }
        fn index(self) -> usize {
            self as usize
        }
    }

    fn compose_into<P: Point>(outer: &[P], inner: &[P], out: &mut Vec<P>) {
        out.clear();
        out.extend(inner.iter().map(|&x| outer[x.index()]));
    }

    fn invert<P: Point>(p: &[P]) -> Vec<P> {
        let mut inv = vec![P::from_usize(0); p.len()];
        for (i, &v) in p.iter().enumerate() {
            inv[v.index()] = P::from_usize(i);
        }
        inv
    }

    fn is_identity<P: Point>(p: &[P]) -> bool {
        p.iter().enumerate().all(|(i, &v)| i == v.index())
    }

    struct Level<P> {
        base: P,
        gens: Vec<Vec<P>>,
        /// `transversal[p] = (u, u⁻¹)` with `u(base) = p`.
        transversal: Vec<Option<(Vec<P>, Vec<P>)>>,
        orbit: Vec<P>,
        /// Schreier generators of pairs (point, gen) below these marks have
        /// already been sifted into the deeper levels.
        points_done: usize,
        gens_done: usize,
    }

    impl<P: Point> Level<P> {
        fn new(degree: usize, base: P) -> Self {
            let id: Vec<P> = (0..degree).map(P::from_usize).collect();
            let mut transversal = vec![None; degree];
            transversal[base.index()] = Some((id.clone(), id));
            Level {
                base,
                gens: Vec::new(),
                transversal,
                orbit: vec![base],
                points_done: 0,
                gens_done: 0,
            }
        }

        /// Closes the orbit under the current generators, keeping existing
        /// transversal entries.
        fn close_orbit(&mut self) {
            let mut head = 0;
            let mut u = Vec::new();
            while head < self.orbit.len() {
                let delta = self.orbit[head];
                head += 1;
                for gen_idx in 0..self.gens.len() {
                    let g = &self.gens[gen_idx];
                    let gamma = g[delta.index()];
                    if self.transversal[gamma.index()].is_none() {
                        let u_delta = &self.transversal[delta.index()].as_ref().unwrap().0;
                        compose_into(g, u_delta, &mut u);
                        let u_inv = invert(&u);
                        self.transversal[gamma.index()] = Some((u.clone(), u_inv));
                        self.orbit.push(gamma);
                    }
                }
            }
        }
    }

    struct Chain<P> {
        degree: usize,
        levels: Vec<Level<P>>,
        rng: ChaCha8Rng,
    }

    impl<P: Point> Chain<P> {
        /// A random point moved by `g`; seeded for reproducible runs.
        fn pick_base(&mut self, g: &[P]) -> P {
            let moved: Vec<usize> = g
                .iter()
                .enumerate()
                .filter(|&(i, &v)| i != v.index())
                .map(|(i, _)| i)
                .collect();
            P::from_usize(moved[self.rng.gen_range(0..moved.len())])
        }

        /// Adds generators to level `lev` and restores completeness of the
        /// chain from `lev` downward: every new Schreier generator is
        /// sifted through the deeper levels and its residue, if any, is
        /// inserted one level down. Levels above `lev` are untouched.
        fn extend(&mut self, lev: usize, new_gens: Vec<Vec<P>>) {
            let new_gens: Vec<Vec<P>> =
                new_gens.into_iter().filter(|g| !is_identity(g)).collect();
            if new_gens.is_empty() {
                return;
            }
            if lev == self.levels.len() {
                let base = self.pick_base(&new_gens[0]);
                self.levels.push(Level::new(self.degree, base));
            }
            self.levels[lev].gens.extend(new_gens);
            self.levels[lev].close_orbit();

            // Sweep the Schreier generators not covered yet: new points
            // against all generators, old points against new generators.
            // Neither the orbit nor the generator list of this level can
            // change while the sweep runs (recursion only touches deeper
            // levels), so the marks are stable.
            let points_done = self.levels[lev].points_done;
            let gens_done = self.levels[lev].gens_done;
            let point_count = self.levels[lev].orbit.len();
            let gen_count = self.levels[lev].gens.len();
            let mut half = Vec::new();
            let mut schreier_gen = Vec::new();
            for point_idx in 0..point_count {
                for gen_idx in 0..gen_count {
                    if point_idx < points_done && gen_idx < gens_done {
                        continue;
                    }
                    let level = &self.levels[lev];
                    let delta = level.orbit[point_idx];
                    let g = &level.gens[gen_idx];
                    let gamma = g[delta.index()];
                    let u_delta = &level.transversal[delta.index()].as_ref().unwrap().0;
                    let u_gamma_inv = &level.transversal[gamma.index()].as_ref().unwrap().1;
                    compose_into(g, u_delta, &mut half);
                    compose_into(u_gamma_inv, &half, &mut schreier_gen);
                    if is_identity(&schreier_gen) {
                        continue;
                    }
                    let (residue, _) = self.sift(lev + 1, &schreier_gen);
                    if !is_identity(&residue) {
                        self.extend(lev + 1, vec![residue]);
                    }
                }
            }
            self.levels[lev].points_done = point_count;
            self.levels[lev].gens_done = gen_count;
        }

        /// Strips `h` through levels `start..`; returns the residue and the
        /// level where stripping stopped.
        fn sift(&self, start: usize, h: &[P]) -> (Vec<P>, usize) {
            let mut h = h.to_vec();
            let mut scratch = Vec::with_capacity(h.len());
            for lev in start..self.levels.len() {
                let level = &self.levels[lev];
                let delta = h[level.base.index()];
                if delta == level.base {
                    // the transversal element is the identity
                    continue;
                }
                match &level.transversal[delta.index()] {
                    None => return (h, lev),
                    Some((_, u_inv)) => {
                        compose_into(u_inv, &h, &mut scratch);
                        std::mem::swap(&mut h, &mut scratch);
                    }
                }
            }
            (h, self.levels.len())
        }
    }

    fn group_order_impl<P: Point>(degree: usize, gens: Vec<Vec<P>>) -> BigUint {
        let mut chain: Chain<P> = Chain {
            degree,
            levels: Vec::new(),
            rng: ChaCha8Rng::seed_from_u64(0x5EED_CAC7),
        };
        chain.extend(0, gens);
        chain
            .levels
            .iter()
            .map(|l| BigUint::from(l.orbit.len()))
            .product()
    }

    /// Order of the group generated by `gens` as permutations of
    /// `0..degree`.
    pub fn group_order(degree: usize, gens: Vec<Vec<u32>>) -> BigUint {
        if degree <= u16::MAX as usize {
            let narrow: Vec<Vec<u16>> = gens
                .into_iter()
                .map(|g| g.into_iter().map(|v| v as u16).collect())
                .collect();
            group_order_impl(degree, narrow)
        } else {
            group_order_impl(degree, gens)
        }
    }

    #[cfg(test)]
    mod tests {
        use super::*;
        use num_traits::One;

        #[test]
        fn symmetric_group_from_adjacent_transpositions() {
            // S_6 generated by (0 1) and the 6-cycle
            let n = 6;
            let mut swap: Vec<u32> = (0..n as u32).collect();
            swap.swap(0, 1);
            let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
            assert_eq!(group_order(n, vec![swap, cycle]), BigUint::from(720u32));
        }

        #[test]
        fn alternating_group_from_three_cycles() {
            // A_5 generated by (0 1 2) and (2 3 4)
            let mut a: Vec<u32> = (0..5).collect();
            a[0] = 1;
            a[1] = 2;
            a[2] = 0;
            let mut b: Vec<u32> = (0..5).collect();
            b[2] = 3;
            b[3] = 4;
            b[4] = 2;
            assert_eq!(group_order(5, vec![a, b]), BigUint::from(60u32));
        }

        #[test]
        fn trivial_cases() {
            assert_eq!(group_order(4, vec![]), BigUint::one());
            let id: Vec<u32> = (0..4).collect();
            assert_eq!(group_order(4, vec![id]), BigUint::one());
        }
    }
}
