//! The lattice of flats of a matroid and its Möbius function.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matroid::{Matroid, RankTable};
use crate::subset::Subset;

/// Flats sorted by `(rank, mask)`, with cover relations and a lazily filled
/// Möbius table.
///
/// The Möbius table is keyed by the lower flat: the first request for any
/// `μ(x, ·)` fills the whole row for `x` exactly once; every later read is
/// lock-free.
pub struct FlatsLattice {
    size: usize,
    rank: usize,
    flats: Vec<Subset>,
    ranks: Vec<usize>,
    index: HashMap<Subset, usize>,
    table: RankTable,
    up_covers: Vec<Vec<usize>>,
    down_covers: Vec<Vec<usize>>,
    /// strictly smaller flats of each flat, in index order
    below: Vec<Vec<u32>>,
    mobius_rows: Vec<OnceLock<Arc<Vec<BigInt>>>>,
}

impl FlatsLattice {
    pub fn build(m: &Matroid) -> Result<FlatsLattice> {
        let table = m.rank_table()?;
        let flats = table.flats();
        let ranks: Vec<usize> = flats.iter().map(|&f| table.rank(f)).collect();
        let index: HashMap<Subset, usize> = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let n = flats.len();
        let mut up_covers = vec![Vec::new(); n];
        let mut down_covers = vec![Vec::new(); n];
        let mut below = vec![Vec::new(); n];
        for j in 0..n {
            for i in 0..j {
                if flats[i].is_proper_subset_of(flats[j]) {
                    below[j].push(i as u32);
                    if ranks[i] + 1 == ranks[j] {
                        up_covers[i].push(j);
                        down_covers[j].push(i);
                    }
                }
            }
        }
        Ok(FlatsLattice {
            size: m.size(),
            rank: m.rank(),
            flats,
            ranks,
            index,
            table,
            up_covers,
            down_covers,
            below,
            mobius_rows: (0..n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    pub fn flat(&self, i: usize) -> Subset {
        self.flats[i]
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.ranks[i]
    }

    /// Rank of the matroid (= rank of the top element).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground_size(&self) -> usize {
        self.size
    }

    pub fn index_of(&self, f: Subset) -> Result<usize> {
        self.index.get(&f).copied().ok_or(Error::NotAFlat(f))
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn up_covers(&self, i: usize) -> &[usize] {
        &self.up_covers[i]
    }

    pub fn down_covers(&self, i: usize) -> &[usize] {
        &self.down_covers[i]
    }

    /// Indices of flats of rank `k`, in mask order.
    pub fn of_rank(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.flats.len()).filter(move |&i| self.ranks[i] == k)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.flats[i].is_subset_of(self.flats[j])
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.index[&(self.flats[i] & self.flats[j])]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.index[&self.table.closure(self.flats[i] | self.flats[j])]
    }

    /// `μ(x, y)` for flats `x`, `y`.
    pub fn mobius(&self, x: Subset, y: Subset) -> Result<BigInt> {
        let i = self.index_of(x)?;
        let j = self.index_of(y)?;
        Ok(self.mobius_row(i)[j].clone())
    }

    /// The row `y ↦ μ(x_i, y)` over all flats (zero where `x_i ⊄ y`).
    pub fn mobius_row(&self, i: usize) -> Arc<Vec<BigInt>> {
        self.mobius_rows[i].get_or_init(|| Arc::new(self.compute_mobius_row(i))).clone()
    }

    /// `μ(0̂, F)` for every flat.
    pub fn mobius_bottom(&self) -> Arc<Vec<BigInt>> {
        self.mobius_row(self.bottom())
    }

    /// Fill `μ(x_i, ·)` by the defining recursion `μ(x,y) = -Σ_{x≤z<y} μ(x,z)`,
    /// with a 128-bit fast path.
    fn compute_mobius_row(&self, i: usize) -> Vec<BigInt> {
        if let Some(row) = self.mobius_row_small(i) {
            return row.into_iter().map(BigInt::from).collect();
        }
        let x = self.flats[i];
        let mut row = vec![BigInt::zero(); self.flats.len()];
        row[i] = BigInt::one();
        for j in i + 1..self.flats.len() {
            if !x.is_subset_of(self.flats[j]) {
                continue;
            }
            let mut sum = BigInt::zero();
            for &z in &self.below[j] {
                let z = z as usize;
                if z >= i && !row[z].is_zero() {
                    sum += &row[z];
                }
            }
            row[j] = -sum;
        }
        row
    }

    fn mobius_row_small(&self, i: usize) -> Option<Vec<i128>> {
        let x = self.flats[i];
        let mut row = vec![0i128; self.flats.len()];
        row[i] = 1;
        for j in i + 1..self.flats.len() {
            if !x.is_subset_of(self.flats[j]) {
                continue;
            }
            let mut sum: i128 = 0;
            for &z in &self.below[j] {
                let z = z as usize;
                if z >= i {
                    sum = sum.checked_add(row[z])?;
                }
            }
            row[j] = sum.checked_neg()?;
        }
        Some(row)
    }

    /// Weisner: `Σ_{y : x ∨ y = 1̂} μ(0̂, y) = 0` for every `x ≠ 0̂`.
    pub fn check_weisner(&self) -> bool {
        self.weisner_failure().is_none()
    }

    /// First flat violating Weisner's identity.
    pub fn weisner_failure(&self) -> Option<Subset> {
        let mu = self.mobius_bottom();
        // x ∨ y = 1̂ iff x ∪ y spans
        let spans = |x: usize, y: usize| self.table.rank(self.flats[x] | self.flats[y]) == self.rank;
        (1..self.flats.len()).find_map(|x| {
            let sum: BigInt = (0..self.flats.len()).filter(|&y| spans(x, y)).map(|y| &mu[y]).sum();
            (!sum.is_zero()).then_some(self.flats[x])
        })
    }

    /// Rota: `(-1)^{r(y)-r(x)} μ(x, y) > 0` for all `x ≤ y`.
    pub fn check_rota_sign(&self) -> bool {
        self.rota_sign_failure().is_none()
    }

    pub fn rota_sign_failure(&self) -> Option<(Subset, Subset)> {
        // rows computed here are not cached, to keep memory linear
        for i in 0..self.flats.len() {
            let bad = match self.mobius_row_small(i) {
                Some(row) => self.first_sign_violation(i, |j| row[j].signum() as i32),
                None => {
                    let row = self.compute_mobius_row(i);
                    self.first_sign_violation(i, |j| if row[j].is_zero() { 0 } else if row[j].is_positive() { 1 } else { -1 })
                }
            };
            if let Some(j) = bad {
                return Some((self.flats[i], self.flats[j]));
            }
        }
        None
    }

    fn first_sign_violation(&self, i: usize, sign: impl Fn(usize) -> i32) -> Option<usize> {
        (i..self.flats.len()).filter(|&j| self.leq(i, j)).find(|&j| {
            let expected = if (self.ranks[j] - self.ranks[i]) % 2 == 1 { -1 } else { 1 };
            sign(j) != expected
        })
    }

    /// (L1): if `x`, `y` both cover `x ∧ y` then `x ∨ y` covers both.
    pub fn check_semimodular(&self) -> bool {
        (0..self.flats.len()).all(|z| {
            let ups = &self.up_covers[z];
            ups.iter().enumerate().all(|(a, &x)| {
                ups[a + 1..].iter().all(|&y| {
                    if self.meet(x, y) != z {
                        return true;
                    }
                    let j = self.join(x, y);
                    self.up_covers[x].contains(&j) && self.up_covers[y].contains(&j)
                })
            })
        })
    }

    /// (L2): every flat is the join of the atoms below it.
    pub fn check_atomic(&self) -> bool {
        let atoms: Vec<usize> = self.up_covers[self.bottom()].clone();
        (0..self.flats.len()).all(|f| {
            let union = atoms
                .iter()
                .filter(|&&a| self.leq(a, f))
                .fold(self.flats[self.bottom()], |acc, &a| acc | self.flats[a]);
            self.table.closure(union) == self.flats[f]
        })
    }

    /// Every maximal chain has length `r(M)`: check that covers raise rank
    /// by one and that maximal/minimal elements are unique.
    pub fn check_graded(&self) -> bool {
        let top = self.top();
        let covers_ok = (0..self.flats.len()).all(|i| {
            self.flats
                .iter()
                .enumerate()
                .filter(|&(j, g)| self.flats[i].is_proper_subset_of(*g) && !self.up_covers[i].contains(&j))
                .all(|(j, _)| self.ranks[j] > self.ranks[i] + 1)
        });
        covers_ok
            && (0..top).all(|i| !self.up_covers[i].is_empty())
            && self.ranks[top] == self.rank
            && self.flats[top] == Subset::full(self.size)
            && self.ranks[0] == 0
    }

    /// Number of flats of each rank `0..=r`.
    pub fn whitney_second(&self) -> Vec<usize> {
        let mut counts = vec![0; self.rank + 1];
        for &r in &self.ranks {
            counts[r] += 1;
        }
        counts
    }
}
