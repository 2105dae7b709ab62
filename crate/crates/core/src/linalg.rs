//! Exact linear algebra: dense rational matrices, an incremental sparse
//! echelon form, and integer lattice membership.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use crate::rational::Rational;

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Counts of positive, negative and zero eigenvalues of a real symmetric
/// matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Primes for the modular rank certificate.
const RANK_PRIMES: [u64; 3] = [2_305_843_009_213_693_951, 4_611_686_018_427_387_847, 1_000_000_007];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn reduce_mod(x: &Rational, p: u64) -> Option<u64> {
    let modulus = BigInt::from(p);
    let to_u64 = |v: BigInt| -> u64 { v.mod_floor(&modulus).try_into().expect("reduced below p") };
    let d = to_u64(x.denom());
    if d == 0 {
        return None;
    }
    Some(mul_mod(to_u64(x.numer()), pow_mod(d, p - 2, p), p))
}

fn update(row: &mut BTreeMap<usize, Rational>, col: usize, a: &Rational, b: &Rational) {
    let entry = row.entry(col).or_insert_with(Rational::zero);
    entry.sub_product(a, b);
    if entry.is_zero() {
        row.remove(&col);
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: QMatrix,
    pub pivots: Vec<usize>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> QMatrix {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> QMatrix {
        QMatrix::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> QMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    /// Builds from equal-length rows; `cols` is needed for the zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> QMatrix {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        QMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> QMatrix {
        QMatrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_product(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_product(a, b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Gauss-Jordan elimination; the pivot in each column is the first
    /// nonzero entry at or below the current row.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let pivot_entry = m.get(r, j).clone();
                    m.data[i * m.cols + j].sub_product(&factor, &pivot_entry);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel: one vector per free column, with a 1 in
    /// that column and zeros in the other free columns.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix.get(i, f);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(QMatrix::zeros(0, 0));
        }
        let augmented =
            QMatrix::from_fn(n, 2 * n, |i, j| if j < n { self.get(i, j).clone() } else if j - n == i { Rational::one() } else { Rational::zero() });
        let Rref { matrix, pivots } = augmented.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(QMatrix::from_fn(n, n, |i, j| matrix.get(i, n + j).clone()))
    }

    /// Pivots of the symmetric elimination `A = L D Lᵀ` without row
    /// exchanges, stopping at the first nonpositive pivot.
    ///
    /// Returns the pivots computed so far; the matrix is positive definite
    /// iff all `n` pivots are returned and are positive.
    pub fn ldlt_pivots(&self) -> Vec<Rational> {
        assert!(self.is_symmetric(), "LDLᵀ needs a symmetric matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut pivots = Vec::with_capacity(n);
        for k in 0..n {
            let d = a.get(k, k).clone();
            let positive = d.is_positive();
            pivots.push(d.clone());
            if !positive {
                break;
            }
            let inv = d.recip();
            let col: Vec<Rational> = (k + 1..n).map(|i| a.get(i, k) * &inv).collect();
            for (ii, i) in (k + 1..n).enumerate() {
                if col[ii].is_zero() {
                    continue;
                }
                let aik = a.get(i, k).clone();
                for j in k + 1..=i {
                    let l = &col[j - k - 1];
                    if l.is_zero() {
                        continue;
                    }
                    // a[i][j] -= a[i][k] a[j][k] / d, kept symmetric
                    let mut v = a.get(i, j).clone();
                    v.sub_product(&aik, l);
                    a.set(i, j, v.clone());
                    a.set(j, i, v);
                }
            }
        }
        pivots
    }

    pub fn is_positive_definite(&self) -> bool {
        let pivots = self.ldlt_pivots();
        pivots.len() == self.rows && pivots.iter().all(Rational::is_positive)
    }

    /// Sylvester inertia of a symmetric matrix by exact symmetric
    /// elimination on a sparse copy. Each step takes the nonzero diagonal
    /// entry with the sparsest row (ties to the smaller index); when every
    /// remaining diagonal entry vanishes a 2x2 pivot `[[0, b], [b, 0]]`
    /// is used instead.
    pub fn inertia(&self) -> Inertia {
        assert!(self.is_symmetric(), "inertia needs a symmetric matrix");
        let n = self.rows;
        let mut rows: Vec<BTreeMap<usize, Rational>> = (0..n)
            .map(|i| (0..n).filter(|&j| !self.get(i, j).is_zero()).map(|j| (j, self.get(i, j).clone())).collect())
            .collect();
        let mut alive: Vec<bool> = vec![true; n];
        let mut remaining = n;
        let mut out = Inertia::default();
        while remaining > 0 {
            let pick = (0..n).filter(|&i| alive[i] && rows[i].contains_key(&i)).min_by_key(|&i| (rows[i].len(), i));
            if let Some(i) = pick {
                let d = rows[i].remove(&i).expect("diagonal entry present");
                alive[i] = false;
                remaining -= 1;
                if d.is_positive() {
                    out.positive += 1;
                } else {
                    out.negative += 1;
                }
                let neighbours: Vec<(usize, Rational)> = std::mem::take(&mut rows[i]).into_iter().collect();
                let inv = d.recip();
                let scaled: Vec<Rational> = neighbours.iter().map(|(_, v)| v * &inv).collect();
                for (a, _) in &neighbours {
                    rows[*a].remove(&i);
                }
                for (x, (a, _)) in neighbours.iter().enumerate() {
                    for (b, vb) in &neighbours {
                        // M[a][b] -= M[a][i] M[i][b] / d
                        update(&mut rows[*a], *b, &scaled[x], vb);
                    }
                }
                continue;
            }
            let Some(i) = (0..n).filter(|&i| alive[i] && !rows[i].is_empty()).min_by_key(|&i| (rows[i].len(), i)) else {
                out.zero += remaining;
                break;
            };
            let (&j, b) = rows[i].iter().next().expect("row is nonempty");
            let inv = b.recip();
            let ri = std::mem::take(&mut rows[i]);
            let rj = std::mem::take(&mut rows[j]);
            alive[i] = false;
            alive[j] = false;
            remaining -= 2;
            out.positive += 1;
            out.negative += 1;
            let u: BTreeMap<usize, Rational> = ri.into_iter().filter(|(k, _)| *k != j).collect();
            let v: BTreeMap<usize, Rational> = rj.into_iter().filter(|(k, _)| *k != i).collect();
            let touched: Vec<usize> = u.keys().chain(v.keys()).copied().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
            for &a in &touched {
                rows[a].remove(&i);
                rows[a].remove(&j);
            }
            // M[a][e] -= (u_a v_e + v_a u_e) / b
            for &a in &touched {
                for &e in &touched {
                    if let (Some(ua), Some(ve)) = (u.get(&a), v.get(&e)) {
                        update(&mut rows[a], e, &(ua * &inv), ve);
                    }
                    if let (Some(va), Some(ue)) = (v.get(&a), u.get(&e)) {
                        update(&mut rows[a], e, &(va * &inv), ue);
                    }
                }
            }
        }
        out
    }

    /// `Some(rank)` of the reduction modulo `p`, or `None` if `p` divides a
    /// denominator.
    pub fn rank_mod(&self, p: u64) -> Option<usize> {
        let mut m = Vec::with_capacity(self.data.len());
        for x in &self.data {
            m.push(reduce_mod(x, p)?);
        }
        let cols = self.cols;
        let mut rank = 0;
        for c in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(piv) = (rank..self.rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            for j in 0..cols {
                m.swap(rank * cols + j, piv * cols + j);
            }
            let inv = pow_mod(m[rank * cols + c], p - 2, p);
            for i in rank + 1..self.rows {
                let f = mul_mod(m[i * cols + c], inv, p);
                if f == 0 {
                    continue;
                }
                for j in c..cols {
                    let t = mul_mod(f, m[rank * cols + j], p);
                    m[i * cols + j] = (m[i * cols + j] + p - t) % p;
                }
            }
            rank += 1;
        }
        Some(rank)
    }

    /// Exact rank. Full rank modulo a prime certifies full rank over `Q`;
    /// otherwise falls back to rational elimination.
    pub fn certified_rank(&self) -> usize {
        let full = self.rows.min(self.cols);
        for p in RANK_PRIMES {
            if self.rank_mod(p) == Some(full) {
                return full;
            }
        }
        self.rank()
    }
}

/// A sparse row: strictly increasing column indices with nonzero values.
pub type SparseRow = Vec<(u32, Rational)>;

/// Incrementally maintained row echelon form of a sparse matrix.
///
/// The pivot of every row is its smallest column, normalized to 1. After all
/// relations are inserted, [`SparseEchelon::normal_forms`] expresses every
/// column modulo the row space in terms of the non-pivot columns.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    cols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<u32>>,
}

impl SparseEchelon {
    pub fn new(cols: usize) -> SparseEchelon {
        SparseEchelon { cols, rows: Vec::new(), pivot_row: vec![None; cols] }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Reduces `row` until its leading column is not a pivot, then records it.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (u32, Rational)>) -> bool {
        let mut acc: BTreeMap<u32, Rational> = BTreeMap::new();
        for (c, v) in row {
            if !v.is_zero() {
                let slot = acc.entry(c).or_insert_with(Rational::zero);
                *slot += &v;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        while let Some((c, v)) = acc.pop_first() {
            match self.pivot_row[c as usize] {
                Some(r) => {
                    for (cc, a) in &self.rows[r as usize][1..] {
                        let slot = acc.entry(*cc).or_insert_with(Rational::zero);
                        slot.sub_product(&v, a);
                        if slot.is_zero() {
                            acc.remove(cc);
                        }
                    }
                }
                None => {
                    let inv = v.recip();
                    let mut new_row = Vec::with_capacity(acc.len() + 1);
                    new_row.push((c, Rational::one()));
                    new_row.extend(acc.into_iter().map(|(cc, a)| (cc, a * &inv)));
                    self.pivot_row[c as usize] = Some(self.rows.len() as u32);
                    self.rows.push(new_row);
                    return true;
                }
            }
        }
        false
    }

    /// For every column, its coordinates on [`Self::free_columns`] modulo
    /// the row space, as sparse vectors indexed by position in that list.
    pub fn normal_forms(&self) -> Vec<SparseRow> {
        let free = self.free_columns();
        let mut position = vec![u32::MAX; self.cols];
        for (i, &f) in free.iter().enumerate() {
            position[f] = i as u32;
        }
        let mut nf: Vec<SparseRow> = vec![Vec::new(); self.cols];
        for &f in &free {
            nf[f] = vec![(position[f], Rational::one())];
        }
        // every pivot row only refers to larger columns
        for c in (0..self.cols).rev() {
            let Some(r) = self.pivot_row[c] else { continue };
            let mut acc: BTreeMap<u32, Rational> = BTreeMap::new();
            for (cc, a) in &self.rows[r as usize][1..] {
                for (k, b) in &nf[*cc as usize] {
                    acc.entry(*k).or_insert_with(Rational::zero).sub_product(a, b);
                }
            }
            nf[c] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        nf
    }
}

/// Sublattice of `Z^n` given by generators, kept in Hermite normal form.
#[derive(Clone, Debug)]
pub struct IntLattice {
    dim: usize,
    /// Echelon basis: increasing pivot columns, positive pivots.
    basis: Vec<Vec<BigInt>>,
}

impl IntLattice {
    pub fn new(dim: usize, generators: &[Vec<i64>]) -> IntLattice {
        let mut lattice = IntLattice { dim, basis: Vec::new() };
        for g in generators {
            assert_eq!(g.len(), dim, "generator of wrong length");
            lattice.add(g.iter().map(|&x| BigInt::from(x)).collect());
        }
        lattice
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn pivot(v: &[BigInt]) -> Option<usize> {
        v.iter().position(|x| !x.is_zero())
    }

    fn add(&mut self, mut v: Vec<BigInt>) {
        let mut i = 0;
        while let Some(p) = Self::pivot(&v) {
            while i < self.basis.len() && Self::pivot(&self.basis[i]).unwrap() < p {
                i += 1;
            }
            if i == self.basis.len() || Self::pivot(&self.basis[i]).unwrap() > p {
                if v[p].is_negative() {
                    v.iter_mut().for_each(|x| *x = -&*x);
                }
                self.basis.insert(i, v);
                return;
            }
            // combine with the basis row of equal pivot by the extended gcd
            let b = std::mem::take(&mut self.basis[i]);
            let e = b[p].extended_gcd(&v[p]);
            let (bp, vp) = (&b[p] / &e.gcd, &v[p] / &e.gcd);
            let merged: Vec<BigInt> = b.iter().zip(&v).map(|(x, y)| &e.x * x + &e.y * y).collect();
            let rest: Vec<BigInt> = b.iter().zip(&v).map(|(x, y)| &vp * x - &bp * y).collect();
            self.basis[i] = if merged[p].is_negative() { merged.into_iter().map(|x| -x).collect() } else { merged };
            v = rest;
        }
    }

    pub fn contains(&self, target: &[i64]) -> bool {
        assert_eq!(target.len(), self.dim);
        let mut v: Vec<BigInt> = target.iter().map(|&x| BigInt::from(x)).collect();
        for b in &self.basis {
            let p = Self::pivot(b).unwrap();
            if v[p].is_zero() {
                continue;
            }
            let (q, r) = v[p].div_rem(&b[p]);
            if !r.is_zero() {
                return false;
            }
            for (x, y) in v.iter_mut().zip(b) {
                *x -= &q * y;
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Exact rank of an integer matrix given by rows, via rational elimination.
pub fn int_rank(rows: &[Vec<i64>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    QMatrix::from_fn(rows.len(), cols, |i, j| Rational::from(rows[i][j])).rank()
}

pub fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0i64, |g, &x| g.gcd(&x))
}
