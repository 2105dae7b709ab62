//! Bit-mask subsets of a ground set `{0, .., n-1}`.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Serialize};

/// Largest ground set a [`Subset`] can address.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of the ground set, stored as a bit mask (bit `i` set iff `i` is a member).
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1u64 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        elems.into_iter().fold(Subset::EMPTY, |s, e| s.with(e))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn with(self, e: usize) -> Subset {
        Subset(self.0 | 1u64 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> Subset {
        Subset(self.0 & !(1u64 << e))
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    /// True if one of the two sets contains the other.
    #[inline]
    pub fn comparable(self, other: Subset) -> bool {
        self.is_subset_of(other) || other.is_subset_of(self)
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Drop element `e` and shift every larger element down by one.
    pub fn remove_and_compress(self, e: usize) -> Subset {
        let low = self.0 & ((1u64 << e) - 1);
        let high = if e + 1 >= MAX_ELEMENTS { 0 } else { (self.0 >> (e + 1)) << e };
        Subset(low | high)
    }

    /// Re-index the members of `self` that lie in `keep`, packing the kept
    /// elements into `0..keep.len()` in increasing order.
    pub fn compress_onto(self, keep: Subset) -> Subset {
        let mut out = 0u64;
        for (new, old) in keep.iter().enumerate() {
            if self.contains(old) {
                out |= 1 << new;
            }
        }
        Subset(out)
    }

    /// Shift all elements up by `offset` (used for direct sums).
    pub fn shifted(self, offset: usize) -> Subset {
        Subset(self.0 << offset)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the members of a [`Subset`] in increasing order.
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// All subsets of `{0, .., n-1}` in increasing mask order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    assert!(n < MAX_ELEMENTS);
    (0..1u64 << n).map(Subset)
}

/// All `k`-element subsets of `{0, .., n-1}`, in increasing mask order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Subset> {
    assert!(n < MAX_ELEMENTS);
    let limit = 1u64 << n;
    let mut cur = if k > n {
        limit
    } else if k == 0 {
        0
    } else {
        (1u64 << k) - 1
    };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        if k == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
        }
        Some(Subset(out))
    })
}

/// All subsets of `set`, each exactly once (including `set` and the empty set).
pub fn subsets_of(set: Subset) -> impl Iterator<Item = Subset> {
    let mask = set.0;
    let mut cur = 0u64;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        cur = cur.wrapping_sub(mask) & mask;
        if cur == 0 {
            done = true;
        }
        Some(Subset(out))
    })
}
