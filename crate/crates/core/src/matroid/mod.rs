//! Matroids stored as their family of bases.
//!
//! The bases family is the only stored data; rank, closure, flats and the
//! minors are all derived from it. Exhaustive operations (anything that
//! scans all `2^|E|` subsets) are guarded by [`EXHAUSTIVE_LIMIT`].

mod axioms;
mod construct;

pub use axioms::{
    bases_from_closure, check_axioms, check_axioms_raw, closure_is_closure_operator, AxiomFailure, AxiomReport,
};
pub use construct::{complete_graph, fano_matrix, petersen_graph, FpMatrix, NAMED_MATROIDS};

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::subset::{k_subsets, Subset, MAX_ELEMENTS};

/// Largest ground set for which `2^|E|` scans are attempted.
pub const EXHAUSTIVE_LIMIT: usize = 20;

/// A matroid on `{0, .., size-1}` given by its bases.
///
/// Bases are kept sorted and deduplicated, so two matroids with the same
/// labelled bases compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matroid {
    size: usize,
    rank: usize,
    bases: Vec<Subset>,
}

/// Result of [`Matroid::simplify`]: the simple matroid plus, for each new
/// label, the old label that represents it.
#[derive(Clone, Debug)]
pub struct Simplification {
    pub matroid: Matroid,
    pub labels: Vec<usize>,
}

impl Matroid {
    /// Validated constructor: bases must be nonempty, equicardinal, inside the
    /// ground set, and satisfy the exchange axiom.
    pub fn from_bases(size: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Matroid> {
        if size > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge { size, limit: MAX_ELEMENTS });
        }
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let first = bases.first().ok_or(Error::EmptyBases)?;
        let full = Subset::full(size);
        let rank = first.len();
        for &b in &bases {
            if !b.is_subset_of(full) {
                return Err(Error::NotInGroundSet { subset: b, size });
            }
            if b.len() != rank {
                return Err(Error::UnequalCardinality { first: rank, other: b.len() });
            }
        }
        if let Some((b1, b2, x)) = exchange_violation(&bases) {
            return Err(Error::ExchangeFailure { b1, b2, x });
        }
        Ok(Matroid { size, rank, bases })
    }

    /// Constructor for families already known to be matroid bases.
    pub(crate) fn from_bases_unchecked(size: usize, mut bases: Vec<Subset>) -> Matroid {
        bases.sort_unstable();
        bases.dedup();
        debug_assert!(!bases.is_empty());
        let rank = bases[0].len();
        Matroid { size, rank, bases }
    }

    /// Build bases by depth-first search over independent sets, given an
    /// independence oracle and the rank.
    pub(crate) fn from_independence_oracle(
        size: usize,
        rank: usize,
        mut independent: impl FnMut(Subset) -> bool,
    ) -> Matroid {
        fn extend(
            cur: Subset,
            next: usize,
            size: usize,
            rank: usize,
            independent: &mut dyn FnMut(Subset) -> bool,
            out: &mut Vec<Subset>,
        ) {
            if cur.len() == rank {
                out.push(cur);
                return;
            }
            let need = rank - cur.len();
            for e in next..size {
                if size - e < need {
                    break;
                }
                let grown = cur.with(e);
                if independent(grown) {
                    extend(grown, e + 1, size, rank, independent, out);
                }
            }
        }
        let mut bases = Vec::new();
        extend(Subset::EMPTY, 0, size, rank, &mut independent, &mut bases);
        Matroid::from_bases_unchecked(size, bases)
    }

    /// Number of elements of the ground set.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.size)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    fn check_subset(&self, a: Subset) -> Result<()> {
        if a.is_subset_of(self.ground()) {
            Ok(())
        } else {
            Err(Error::NotInGroundSet { subset: a, size: self.size })
        }
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e < self.size {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element: e, size: self.size })
        }
    }

    /// `r(A) = max_B |B ∩ A|`.
    pub fn rank_of(&self, a: Subset) -> usize {
        self.bases.iter().map(|&b| (b & a).len()).max().unwrap_or(0)
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.bases.iter().any(|&b| a.is_subset_of(b))
    }

    pub fn closure(&self, x: Subset) -> Subset {
        let r = self.rank_of(x);
        (self.ground() - x)
            .iter()
            .filter(|&e| self.rank_of(x.with(e)) == r)
            .fold(x, Subset::with)
    }

    pub fn is_flat(&self, x: Subset) -> bool {
        self.closure(x) == x
    }

    /// Elements in no basis.
    pub fn loops(&self) -> Subset {
        let union = self.bases.iter().fold(Subset::EMPTY, |acc, &b| acc | b);
        self.ground() - union
    }

    /// Elements in every basis.
    pub fn coloops(&self) -> Subset {
        self.bases.iter().fold(self.ground(), |acc, &b| acc & b)
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        if !self.is_loopless() {
            return false;
        }
        if self.rank >= 2 {
            // every pair must be independent
            (0..self.size).all(|i| (i + 1..self.size).all(|j| self.rank_of(Subset::from_elements([i, j])) == 2))
        } else {
            self.size <= 1
        }
    }

    /// Rank lookup table over all subsets (requires `|E| <= EXHAUSTIVE_LIMIT`).
    pub fn rank_table(&self) -> Result<RankTable> {
        RankTable::from_family(self.size, &self.bases)
    }

    pub fn dual(&self) -> Matroid {
        let full = self.ground();
        Matroid::from_bases_unchecked(self.size, self.bases.iter().map(|&b| full - b).collect())
    }

    /// `M \ e`, relabelling elements above `e` down by one.
    pub fn delete(&self, e: usize) -> Result<Matroid> {
        self.check_element(e)?;
        let is_coloop = self.coloops().contains(e);
        let bases = self
            .bases
            .iter()
            .filter(|b| is_coloop || !b.contains(e))
            .map(|b| b.remove_and_compress(e))
            .collect();
        Ok(Matroid::from_bases_unchecked(self.size - 1, bases))
    }

    /// `M / e`, relabelling elements above `e` down by one.
    pub fn contract(&self, e: usize) -> Result<Matroid> {
        self.check_element(e)?;
        let is_loop = self.loops().contains(e);
        let bases = self
            .bases
            .iter()
            .filter(|b| is_loop || b.contains(e))
            .map(|b| b.remove_and_compress(e))
            .collect();
        Ok(Matroid::from_bases_unchecked(self.size - 1, bases))
    }

    /// Restriction `M | S`, relabelled onto `0..|S|` in increasing order.
    pub fn restrict(&self, keep: Subset) -> Result<Matroid> {
        self.check_subset(keep)?;
        let r = self.rank_of(keep);
        let bases = self
            .bases
            .iter()
            .map(|&b| b & keep)
            .filter(|b| b.len() == r)
            .map(|b| b.compress_onto(keep))
            .collect();
        Ok(Matroid::from_bases_unchecked(keep.len(), bases))
    }

    /// `M1 ⊕ M2`; elements of `other` are shifted up by `self.size()`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let size = self.size + other.size;
        if size > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge { size, limit: MAX_ELEMENTS });
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                bases.push(b1 | b2.shifted(self.size));
            }
        }
        Ok(Matroid::from_bases_unchecked(size, bases))
    }

    /// Remove loops and keep the smallest element of each parallel class.
    pub fn simplify(&self) -> Simplification {
        let loops = self.loops();
        let mut keep = Subset::EMPTY;
        let mut covered = loops;
        for e in 0..self.size {
            if covered.contains(e) {
                continue;
            }
            keep = keep.with(e);
            covered = covered.with(e);
            for f in e + 1..self.size {
                if !covered.contains(f) && self.rank_of(Subset::from_elements([e, f])) == 1 {
                    covered = covered.with(f);
                }
            }
        }
        let labels: Vec<usize> = keep.iter().collect();
        let matroid = self.restrict(keep).expect("kept elements lie in the ground set");
        Simplification { matroid, labels }
    }

    /// Free extension `M + e`: the new element gets label `size()` and lies in
    /// general position.
    pub fn free_extension(&self) -> Result<Matroid> {
        let size = self.size + 1;
        if size > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge { size, limit: MAX_ELEMENTS });
        }
        let e = self.size;
        let mut bases: HashSet<Subset> = self.bases.iter().copied().collect();
        if self.rank > 0 {
            for &b in &self.bases {
                for x in b.iter() {
                    bases.insert(b.without(x).with(e));
                }
            }
        }
        Ok(Matroid::from_bases_unchecked(size, bases.into_iter().collect()))
    }

    /// Free co-extension `M × e = (M* + e)*`.
    pub fn free_coextension(&self) -> Result<Matroid> {
        Ok(self.dual().free_extension()?.dual())
    }

    /// All independent sets, grouped by no particular order.
    pub fn independent_sets(&self) -> Vec<Subset> {
        let mut seen: HashSet<Subset> = HashSet::new();
        let mut stack: Vec<Subset> = self.bases.clone();
        while let Some(s) = stack.pop() {
            if seen.insert(s) {
                for x in s.iter() {
                    let t = s.without(x);
                    if !seen.contains(&t) {
                        stack.push(t);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }
}

/// Ranks of every subset of a small ground set.
#[derive(Clone, Debug)]
pub struct RankTable {
    size: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    /// Ranks induced by `r(A) = max |B ∩ A|` over an arbitrary family (which
    /// need not be a matroid).
    pub fn from_family(size: usize, family: &[Subset]) -> Result<RankTable> {
        if size > EXHAUSTIVE_LIMIT {
            return Err(Error::GroundSetTooLarge { size, limit: EXHAUSTIVE_LIMIT });
        }
        let n = 1usize << size;
        let mut independent = vec![false; n];
        for b in family {
            independent[b.bits() as usize] = true;
        }
        for a in (0..n).rev() {
            if independent[a] {
                let mut rest = a;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    independent[a ^ bit] = true;
                    rest ^= bit;
                }
            }
        }
        let mut ranks = vec![0u8; n];
        for a in 1..n {
            ranks[a] = if independent[a] {
                a.count_ones() as u8
            } else {
                let mut best = 0;
                let mut rest = a;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    best = best.max(ranks[a ^ bit]);
                    rest ^= bit;
                }
                best
            };
        }
        Ok(RankTable { size, ranks })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn rank(&self, a: Subset) -> usize {
        self.ranks[a.bits() as usize] as usize
    }

    #[inline]
    pub fn is_independent(&self, a: Subset) -> bool {
        self.rank(a) == a.len()
    }

    pub fn closure(&self, x: Subset) -> Subset {
        let r = self.rank(x);
        (Subset::full(self.size) - x)
            .iter()
            .filter(|&e| self.rank(x.with(e)) == r)
            .fold(x, Subset::with)
    }

    /// All closed sets, sorted by (rank, mask).
    pub fn flats(&self) -> Vec<Subset> {
        let mut seen = vec![false; self.ranks.len()];
        let mut flats = Vec::new();
        for a in 0..self.ranks.len() {
            let c = self.closure(Subset(a as u64));
            let idx = c.bits() as usize;
            if !seen[idx] {
                seen[idx] = true;
                flats.push(c);
            }
        }
        flats.sort_unstable_by_key(|f| (self.rank(*f), *f));
        flats
    }
}

/// First violation of the basis exchange axiom, if any.
fn exchange_violation(bases: &[Subset]) -> Option<(Subset, Subset, usize)> {
    let set: HashSet<Subset> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            for x in (b1 - b2).iter() {
                let base = b1.without(x);
                if !(b2 - b1).iter().any(|y| set.contains(&base.with(y))) {
                    return Some((b1, b2, x));
                }
            }
        }
    }
    None
}

/// All `k`-subsets of an `n`-set as bases; shared by the uniform constructor.
pub(crate) fn uniform_bases(rank: usize, size: usize) -> Vec<Subset> {
    k_subsets(size, rank).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(elems: &[usize]) -> Subset {
        Subset::from_elements(elems.iter().copied())
    }

    #[test]
    fn from_bases_accepts_u23() {
        let m = Matroid::from_bases(3, [s(&[0, 1]), s(&[0, 2]), s(&[1, 2])]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());
    }

    #[test]
    fn from_bases_single_coloop() {
        let m = Matroid::from_bases(1, [s(&[0])]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.coloops(), s(&[0]));
    }

    #[test]
    fn from_bases_rejects_bad_families() {
        assert_eq!(Matroid::from_bases(3, []), Err(Error::EmptyBases));
        assert!(matches!(
            Matroid::from_bases(3, [s(&[0, 1]), s(&[2])]),
            Err(Error::UnequalCardinality { .. })
        ));
        match Matroid::from_bases(4, [s(&[0, 1]), s(&[2, 3])]) {
            Err(Error::ExchangeFailure { b1, b2, x }) => {
                assert!(b1.contains(x) && !b2.contains(x));
            }
            other => panic!("expected exchange failure, got {other:?}"),
        }
        assert!(matches!(Matroid::from_bases(2, [s(&[3])]), Err(Error::NotInGroundSet { .. })));
    }

    #[test]
    fn rank_and_closure_basics() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.rank_of(Subset::EMPTY), 0);
        assert_eq!(u23.rank_of(u23.ground()), 2);
        assert_eq!(u23.closure(s(&[0])), s(&[0]));
        assert_eq!(u23.closure(s(&[0, 1])), u23.ground());

        let u02 = Matroid::uniform(0, 2).unwrap();
        assert_eq!(u02.closure(Subset::EMPTY), s(&[0, 1]));
        assert_eq!(u02.loops(), s(&[0, 1]));
    }

    #[test]
    fn minors_of_u23() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.dual(), Matroid::uniform(1, 3).unwrap());
        assert_eq!(u23.contract(0).unwrap(), Matroid::uniform(1, 2).unwrap());
        assert_eq!(u23.delete(0).unwrap(), Matroid::uniform(2, 2).unwrap());
        assert!(matches!(u23.delete(3), Err(Error::ElementOutOfRange { .. })));
    }

    #[test]
    fn deleting_a_coloop_is_allowed() {
        let m = Matroid::uniform(1, 1).unwrap();
        let d = m.delete(0).unwrap();
        assert_eq!(d.size(), 0);
        assert_eq!(d.rank(), 0);
        assert_eq!(d.bases(), &[Subset::EMPTY]);
    }

    #[test]
    fn simplify_merges_parallel_and_drops_loops() {
        // 0 loop, {1,2} parallel, 3 independent of them
        let m = Matroid::from_bases(4, [s(&[1, 3]), s(&[2, 3])]).unwrap();
        let simple = m.simplify();
        assert_eq!(simple.labels, vec![1, 3]);
        assert_eq!(simple.matroid, Matroid::uniform(2, 2).unwrap());
        assert!(simple.matroid.is_simple());
        assert!(!m.is_simple());
    }

    #[test]
    fn direct_sum_and_free_extension() {
        let a = Matroid::uniform(1, 1).unwrap();
        let b = Matroid::uniform(0, 1).unwrap();
        let sum = a.direct_sum(&b).unwrap();
        assert_eq!(sum.bases(), &[s(&[0])]);
        assert_eq!(sum.loops(), s(&[1]));
        assert_eq!(a.free_extension().unwrap(), Matroid::uniform(1, 2).unwrap());
        assert_eq!(Matroid::uniform(2, 3).unwrap().free_extension().unwrap(), Matroid::uniform(2, 4).unwrap());
    }

    #[test]
    fn rank_table_matches_rank_of() {
        let fano = Matroid::named("fano").unwrap();
        let table = fano.rank_table().unwrap();
        for a in crate::subset::all_subsets(7) {
            assert_eq!(table.rank(a), fano.rank_of(a));
        }
        assert_eq!(table.flats().len(), 16);
    }
}
