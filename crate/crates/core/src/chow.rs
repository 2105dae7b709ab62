//! The Chow ring `A*(M)` of a loopless matroid.
//!
//! Generators are `x_F` for nonempty proper flats `F`. Products of
//! incomparable generators vanish, so every degree is spanned by monomials
//! supported on chains of flats; the linear relations are the multiples
//! `m · ρ_b` of `ρ_b = Σ_{F ∋ b} x_F - Σ_{F ∋ 0} x_F` by chain monomials `m`.
//! Each degree is reduced by exact sparse elimination, pivoting on the
//! smallest monomial, and the surviving monomials form the quotient basis.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::FlatsLattice;
use crate::linalg::{QMatrix, SparseEchelon, SparseRow};
use crate::matroid::Matroid;
use crate::rational::Rational;
use crate::subset::Subset;

/// Default cap on the number of chain monomials in a single degree.
pub const DEFAULT_MONOMIAL_LIMIT: usize = 50_000;

/// A monomial supported on a chain of flats, stored as the nondecreasing
/// list of its flat indices (with repetition for exponents).
///
/// Flats are indexed in (rank, mask) order, so the list is also in chain
/// order, and monomials compare lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainMonomial(Vec<u32>);

impl ChainMonomial {
    pub fn one() -> ChainMonomial {
        ChainMonomial(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    /// Pairs `(flat index, exponent)` in chain order.
    pub fn factors(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &i in &self.0 {
            match out.last_mut() {
                Some((j, e)) if *j == i => *e += 1,
                _ => out.push((i, 1)),
            }
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }
}

/// An element of `A^k(M)` in coordinates on the quotient basis of degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowElement {
    degree: usize,
    coeffs: Vec<Rational>,
}

impl ChowElement {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &ChowElement) -> ChowElement {
        assert_eq!(self.degree, other.degree, "adding elements of different degree");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        ChowElement { degree: self.degree, coeffs }
    }

    pub fn sub(&self, other: &ChowElement) -> ChowElement {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> ChowElement {
        ChowElement { degree: self.degree, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }
}

#[derive(Clone, Debug)]
struct Graded {
    monomials: Vec<ChainMonomial>,
    lookup: HashMap<ChainMonomial, u32>,
    /// Monomial indices of the quotient basis, increasing.
    basis: Vec<u32>,
    /// Coordinates of every monomial on `basis`.
    normal_forms: Vec<SparseRow>,
    relation_rank: usize,
}

/// `A*(M)` with its quotient bases, normal forms and degree map.
#[derive(Clone, Debug)]
pub struct ChowRing {
    size: usize,
    d: usize,
    flats: Vec<Subset>,
    flat_index: HashMap<Subset, u32>,
    /// For each flat index, the larger flat indices strictly above it.
    above: Vec<Vec<u32>>,
    /// CH1 relation `ρ_b` for `b = 1..size`, as (flat index, ±1) terms.
    ch1: Vec<Vec<(u32, i64)>>,
    graded: Vec<Graded>,
    /// `deg(a) = top_scale · (coordinate of a on the A^d basis)`.
    top_scale: Rational,
}

impl ChowRing {
    pub fn build(m: &Matroid) -> Result<ChowRing> {
        ChowRing::build_with_limit(m, DEFAULT_MONOMIAL_LIMIT)
    }

    pub fn build_with_limit(m: &Matroid, limit: usize) -> Result<ChowRing> {
        if m.size() == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if let Some(e) = m.loops().min() {
            return Err(Error::HasLoop(e));
        }
        let lattice = FlatsLattice::build(m)?;
        let (bottom, top) = (lattice.bottom(), lattice.top());
        let flats: Vec<Subset> =
            (0..lattice.len()).filter(|&i| i != bottom && i != top).map(|i| lattice.flat(i)).collect();
        let flat_index = flats.iter().enumerate().map(|(i, &f)| (f, i as u32)).collect();
        let above = (0..flats.len())
            .map(|i| (i + 1..flats.len()).filter(|&j| flats[i].is_proper_subset_of(flats[j])).map(|j| j as u32).collect())
            .collect();
        let ch1 = (1..m.size())
            .map(|b| {
                let mut terms = Vec::new();
                for (i, f) in flats.iter().enumerate() {
                    match (f.contains(b), f.contains(0)) {
                        (true, false) => terms.push((i as u32, 1)),
                        (false, true) => terms.push((i as u32, -1)),
                        _ => {}
                    }
                }
                terms
            })
            .collect();
        let mut ring = ChowRing {
            size: m.size(),
            d: m.rank() - 1,
            flats,
            flat_index,
            above,
            ch1,
            graded: Vec::new(),
            top_scale: Rational::one(),
        };
        let monomials: Vec<Vec<ChainMonomial>> =
            (0..=ring.d).map(|k| ring.enumerate_monomials(k, limit)).collect::<Result<_>>()?;
        let graded: Vec<Graded> = monomials.into_par_iter().enumerate().map(|(k, mons)| ring.reduce_degree(k, mons)).collect();
        ring.graded = graded;
        ring.normalize_degree()?;
        Ok(ring)
    }

    /// `d = r(M) - 1`, the top degree.
    pub fn top_degree(&self) -> usize {
        self.d
    }

    pub fn ground_size(&self) -> usize {
        self.size
    }

    /// The nonempty proper flats indexing the generators.
    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    pub fn flat_index(&self, f: Subset) -> Result<u32> {
        self.flat_index.get(&f).copied().ok_or(Error::NotAFlat(f))
    }

    pub fn dim(&self, k: usize) -> usize {
        self.graded.get(k).map_or(0, |g| g.basis.len())
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.d).map(|k| self.dim(k)).collect()
    }

    /// All chain monomials of degree `k`, in increasing order.
    pub fn monomials(&self, k: usize) -> &[ChainMonomial] {
        &self.graded[k].monomials
    }

    /// The monomials forming the quotient basis of `A^k`.
    pub fn basis(&self, k: usize) -> Vec<&ChainMonomial> {
        let g = &self.graded[k];
        g.basis.iter().map(|&i| &g.monomials[i as usize]).collect()
    }

    /// Rank of the relation space in degree `k`.
    pub fn relation_rank(&self, k: usize) -> usize {
        self.graded[k].relation_rank
    }

    /// Monomial from (flat, exponent) pairs; `None` unless the flats are
    /// nonempty, proper and form a chain.
    pub fn monomial(&self, factors: &[(Subset, usize)]) -> Option<ChainMonomial> {
        let mut idx = Vec::new();
        for &(f, e) in factors {
            let i = *self.flat_index.get(&f)?;
            idx.extend(std::iter::repeat_n(i, e));
        }
        idx.sort_unstable();
        self.is_chain(&idx).then_some(ChainMonomial(idx))
    }

    fn is_chain(&self, idx: &[u32]) -> bool {
        idx.windows(2).all(|w| w[0] == w[1] || self.flats[w[0] as usize].is_proper_subset_of(self.flats[w[1] as usize]))
    }

    fn enumerate_monomials(&self, k: usize, limit: usize) -> Result<Vec<ChainMonomial>> {
        let mut out = Vec::new();
        if k == 0 {
            out.push(ChainMonomial::one());
            return Ok(out);
        }
        let mut stack = Vec::with_capacity(k);
        for i in 0..self.flats.len() as u32 {
            stack.push(i);
            self.extend_chain(&mut stack, k, limit, &mut out)?;
            stack.pop();
        }
        Ok(out)
    }

    fn extend_chain(&self, stack: &mut Vec<u32>, k: usize, limit: usize, out: &mut Vec<ChainMonomial>) -> Result<()> {
        if stack.len() == k {
            if out.len() == limit {
                return Err(Error::TooLarge { degree: k, monomials: limit + 1, limit });
            }
            out.push(ChainMonomial(stack.clone()));
            return Ok(());
        }
        let last = *stack.last().expect("nonempty stack");
        // repeating the last flat comes first in lexicographic order
        stack.push(last);
        self.extend_chain(stack, k, limit, out)?;
        stack.pop();
        for &j in &self.above[last as usize] {
            stack.push(j);
            self.extend_chain(stack, k, limit, out)?;
            stack.pop();
        }
        Ok(())
    }

    /// Insert `f` into the chain monomial `m` if it stays a chain.
    fn times_generator(&self, m: &[u32], f: u32) -> Option<Vec<u32>> {
        let flat = self.flats[f as usize];
        if !m.iter().all(|&g| self.flats[g as usize].comparable(flat)) {
            return None;
        }
        let pos = m.partition_point(|&g| g <= f);
        let mut out = Vec::with_capacity(m.len() + 1);
        out.extend_from_slice(&m[..pos]);
        out.push(f);
        out.extend_from_slice(&m[pos..]);
        Some(out)
    }

    /// The spanning set `{m · ρ_b}` of the degree-`k` relations, as rows over
    /// the degree-`k` monomials.
    pub fn relation_rows(&self, k: usize) -> Vec<SparseRow> {
        assert!(k >= 1 && k <= self.d, "relations live in degrees 1..=d");
        self.relation_rows_for(&self.graded[k - 1].monomials, &self.graded[k].lookup)
    }

    fn relation_rows_for(&self, lower: &[ChainMonomial], lookup: &HashMap<ChainMonomial, u32>) -> Vec<SparseRow> {
        let mut rows = Vec::with_capacity(lower.len() * self.ch1.len());
        for m in lower {
            for rho in &self.ch1 {
                let mut row: SparseRow = rho
                    .iter()
                    .filter_map(|&(f, sign)| {
                        let product = self.times_generator(&m.0, f)?;
                        let col = lookup[&ChainMonomial(product)];
                        Some((col, Rational::from(sign)))
                    })
                    .collect();
                if !row.is_empty() {
                    row.sort_unstable_by_key(|e| e.0);
                    rows.push(row);
                }
            }
        }
        rows
    }

    fn reduce_degree(&self, k: usize, monomials: Vec<ChainMonomial>) -> Graded {
        let lookup: HashMap<ChainMonomial, u32> =
            monomials.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
        let mut echelon = SparseEchelon::new(monomials.len());
        if k >= 1 {
            let lower = self.enumerate_monomials(k - 1, usize::MAX).expect("no limit");
            for row in self.relation_rows_for(&lower, &lookup) {
                echelon.insert(row);
            }
        }
        let basis = echelon.free_columns().into_iter().map(|c| c as u32).collect();
        Graded { relation_rank: echelon.rank(), normal_forms: echelon.normal_forms(), monomials, lookup, basis }
    }

    /// Fix the degree map by its value on the lexicographically smallest
    /// maximal flag, then require value 1 on every maximal flag and integral
    /// values on every top-degree monomial.
    fn normalize_degree(&mut self) -> Result<()> {
        let top = &self.graded[self.d];
        if top.basis.len() != 1 {
            return Err(Error::InconsistentDegree(format!("dim A^{} = {}, expected 1", self.d, top.basis.len())));
        }
        let coordinate = |i: usize| top.normal_forms[i].first().map_or_else(Rational::zero, |(_, v)| v.clone());
        let first_flag = top
            .monomials
            .iter()
            .position(ChainMonomial::is_squarefree)
            .ok_or_else(|| Error::InconsistentDegree("no maximal flag".into()))?;
        let value = coordinate(first_flag);
        if value.is_zero() {
            return Err(Error::InconsistentDegree("a maximal flag vanishes in top degree".into()));
        }
        let scale = value.recip();
        for (i, m) in top.monomials.iter().enumerate() {
            let deg = &coordinate(i) * &scale;
            if m.is_squarefree() && !deg.is_one() {
                return Err(Error::InconsistentDegree(format!("maximal flag {} has degree {deg}", self.display(m))));
            }
            if !deg.is_integer() {
                return Err(Error::InconsistentDegree(format!("monomial {} has degree {deg}", self.display(m))));
            }
        }
        self.top_scale = scale;
        Ok(())
    }

    /// The degree map on a top-degree monomial.
    pub fn monomial_degree(&self, m: &ChainMonomial) -> Result<Rational> {
        self.degree(&self.normal_form(m)?)
    }

    /// Normal form of a chain monomial.
    pub fn normal_form(&self, m: &ChainMonomial) -> Result<ChowElement> {
        let k = m.degree();
        if k > self.d {
            return Ok(self.zero(k));
        }
        let g = &self.graded[k];
        let i = *g.lookup.get(m).ok_or_else(|| Error::InvalidArgument("not a chain monomial of this ring".into()))?;
        Ok(self.element_from_sparse(k, &g.normal_forms[i as usize]))
    }

    fn element_from_sparse(&self, k: usize, row: &SparseRow) -> ChowElement {
        let mut e = self.zero(k);
        for (c, v) in row {
            e.coeffs[*c as usize] = v.clone();
        }
        e
    }

    pub fn zero(&self, k: usize) -> ChowElement {
        ChowElement { degree: k, coeffs: vec![Rational::zero(); self.dim(k)] }
    }

    pub fn one(&self) -> ChowElement {
        self.normal_form(&ChainMonomial::one()).expect("unit monomial")
    }

    /// The class of `x_F`.
    pub fn generator(&self, f: Subset) -> Result<ChowElement> {
        let i = self.flat_index(f)?;
        self.normal_form(&ChainMonomial(vec![i]))
    }

    /// `Σ_F c(F) x_F` over the nonempty proper flats.
    pub fn linear_class(&self, mut c: impl FnMut(Subset) -> Rational) -> ChowElement {
        let mut acc = self.zero(1);
        if self.d == 0 {
            return acc;
        }
        for (i, &f) in self.flats.iter().enumerate() {
            let w = c(f);
            if w.is_zero() {
                continue;
            }
            for (col, v) in &self.graded[1].normal_forms[i] {
                acc.coeffs[*col as usize].add_product(&w, v);
            }
        }
        acc
    }

    /// `α(e) = Σ_{F ∋ e} x_F`.
    pub fn alpha_at(&self, e: usize) -> ChowElement {
        self.linear_class(|f| if f.contains(e) { Rational::one() } else { Rational::zero() })
    }

    /// `β(e) = Σ_{F ∌ e} x_F`.
    pub fn beta_at(&self, e: usize) -> ChowElement {
        self.linear_class(|f| if f.contains(e) { Rational::zero() } else { Rational::one() })
    }

    pub fn alpha(&self) -> ChowElement {
        self.alpha_at(0)
    }

    pub fn beta(&self) -> ChowElement {
        self.beta_at(0)
    }

    /// Whether `α(e)` and `β(e)` are the same class for every `e`.
    pub fn alpha_beta_independent_of_element(&self) -> bool {
        let (a, b) = (self.alpha(), self.beta());
        (1..self.size).all(|e| self.alpha_at(e) == a && self.beta_at(e) == b)
    }

    /// Product of two chain monomials, `None` when the supports are not a chain.
    pub fn monomial_product(&self, x: &ChainMonomial, y: &ChainMonomial) -> Option<ChainMonomial> {
        let mut idx = Vec::with_capacity(x.degree() + y.degree());
        let (mut i, mut j) = (0, 0);
        while i < x.0.len() || j < y.0.len() {
            if j == y.0.len() || (i < x.0.len() && x.0[i] <= y.0[j]) {
                idx.push(x.0[i]);
                i += 1;
            } else {
                idx.push(y.0[j]);
                j += 1;
            }
        }
        self.is_chain(&idx).then_some(ChainMonomial(idx))
    }

    /// Add `w · NF(x · y)` into `out`, a vector on the basis of degree `deg x + deg y`.
    fn accumulate_product(&self, out: &mut [Rational], w: &Rational, x: &ChainMonomial, y: &ChainMonomial) {
        let k = x.degree() + y.degree();
        if k > self.d {
            return;
        }
        if let Some(p) = self.monomial_product(x, y) {
            let g = &self.graded[k];
            for (c, v) in &g.normal_forms[g.lookup[&p] as usize] {
                out[*c as usize].add_product(w, v);
            }
        }
    }

    pub fn multiply(&self, a: &ChowElement, b: &ChowElement) -> Result<ChowElement> {
        let k = a.degree + b.degree;
        if k > self.d {
            return Err(Error::DegreeOverflow { left: a.degree, right: b.degree, top: self.d });
        }
        let mut out = self.zero(k);
        let (ba, bb) = (self.basis(a.degree), self.basis(b.degree));
        for (x, ca) in ba.iter().zip(&a.coeffs) {
            if ca.is_zero() {
                continue;
            }
            for (y, cb) in bb.iter().zip(&b.coeffs) {
                if !cb.is_zero() {
                    self.accumulate_product(&mut out.coeffs, &(ca * cb), x, y);
                }
            }
        }
        Ok(out)
    }

    pub fn power(&self, a: &ChowElement, n: usize) -> Result<ChowElement> {
        (0..n).try_fold(self.one(), |acc, _| self.multiply(&acc, a))
    }

    /// The degree map `A^d → Q`.
    pub fn degree(&self, a: &ChowElement) -> Result<Rational> {
        if a.degree != self.d {
            return Err(Error::WrongDegree { expected: self.d, actual: a.degree });
        }
        Ok(&a.coeffs[0] * &self.top_scale)
    }

    /// `deg(α^{d-k} β^k)`.
    pub fn mk_via_chow(&self, k: usize) -> Result<Rational> {
        if k > self.d {
            return Err(Error::InvalidArgument(format!("k = {k} exceeds d = {}", self.d)));
        }
        let product = self.multiply(&self.power(&self.alpha(), self.d - k)?, &self.power(&self.beta(), k)?)?;
        self.degree(&product)
    }

    /// Matrix of `a ↦ a · c` from `A^k` to `A^{k + deg c}`, one column per
    /// basis monomial of `A^k`.
    pub fn multiplication_matrix(&self, c: &ChowElement, k: usize) -> Result<QMatrix> {
        let target = k + c.degree;
        if target > self.d {
            return Err(Error::DegreeOverflow { left: k, right: c.degree, top: self.d });
        }
        let source = self.basis(k);
        let factors = self.basis(c.degree);
        let columns: Vec<Vec<Rational>> = source
            .par_iter()
            .map(|x| {
                let mut col = vec![Rational::zero(); self.dim(target)];
                for (y, w) in factors.iter().zip(&c.coeffs) {
                    if !w.is_zero() {
                        self.accumulate_product(&mut col, w, x, y);
                    }
                }
                col
            })
            .collect();
        Ok(QMatrix::from_columns(self.dim(target), &columns))
    }

    /// `P[i][j] = deg(b_i · c_j)` for the bases of `A^k` and `A^{d-k}`.
    /// The entries depend on the chosen quotient bases; rank does not.
    pub fn poincare_pairing(&self, k: usize) -> Result<QMatrix> {
        if k > self.d {
            return Err(Error::InvalidArgument(format!("k = {k} exceeds d = {}", self.d)));
        }
        let (left, right) = (self.basis(k), self.basis(self.d - k));
        let rows: Vec<Vec<Rational>> = left
            .par_iter()
            .map(|x| {
                right
                    .iter()
                    .map(|y| {
                        let mut v = [Rational::zero()];
                        self.accumulate_product(&mut v, &Rational::one(), x, y);
                        let [v] = v;
                        &v * &self.top_scale
                    })
                    .collect()
            })
            .collect();
        Ok(QMatrix::from_rows(right.len(), rows))
    }

    /// Human-readable form such as `x{0}^2 x{0,1}`.
    pub fn display(&self, m: &ChainMonomial) -> String {
        if m.degree() == 0 {
            return "1".into();
        }
        let parts: Vec<String> = m
            .factors()
            .into_iter()
            .map(|(i, e)| {
                let f = self.flats[i as usize];
                if e == 1 {
                    format!("x{f}")
                } else {
                    format!("x{f}^{e}")
                }
            })
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for ChainMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::m_sequence;
    use crate::matroid::complete_graph;
    use num_bigint::BigInt;

    fn s(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn u23_ring() {
        let u = Matroid::uniform(2, 3).unwrap();
        let r = ChowRing::build(&u).unwrap();
        assert_eq!(r.dims(), vec![1, 1]);
        let x0 = r.generator(s(&[0])).unwrap();
        assert_eq!(x0, r.generator(s(&[1])).unwrap());
        assert_eq!(x0, r.generator(s(&[2])).unwrap());
        assert_eq!(r.degree(&x0).unwrap(), Rational::one());
        assert_eq!(r.alpha(), x0);
        assert_eq!(r.beta(), x0.scale(&Rational::from(2)));
        assert_eq!(r.mk_via_chow(0).unwrap(), Rational::one());
        assert_eq!(r.mk_via_chow(1).unwrap(), Rational::from(2));
        assert!(r.alpha_beta_independent_of_element());
    }

    #[test]
    fn boolean_rank_three() {
        let r = ChowRing::build(&Matroid::uniform(3, 3).unwrap()).unwrap();
        assert_eq!(r.dims(), vec![1, 4, 1]);
        let m = r.monomial(&[(s(&[0]), 1), (s(&[0, 1]), 1)]).unwrap();
        assert_eq!(r.monomial_degree(&m).unwrap(), Rational::one());
        let sq = r.monomial(&[(s(&[0]), 2)]).unwrap();
        assert_eq!(r.monomial_degree(&sq).unwrap(), Rational::from(-1));
        assert_eq!(r.poincare_pairing(1).unwrap().rank(), 4);
        assert!(r.monomial(&[(s(&[0]), 1), (s(&[1]), 1)]).is_none());
    }

    #[test]
    fn fano_ring() {
        let fano = Matroid::named("fano").unwrap();
        let r = ChowRing::build(&fano).unwrap();
        assert_eq!(r.dims(), vec![1, 8, 1]);
        assert_eq!(r.relation_rank(1), 6);
        let m: Vec<BigInt> = m_sequence(&fano).unwrap();
        for k in 0..=2 {
            assert_eq!(r.mk_via_chow(k).unwrap(), Rational::from(m[k].clone()));
        }
        // a point off a line: incomparable, so the product vanishes
        let p = r.generator(s(&[0])).unwrap();
        let line = fano_line_avoiding(&r, 0);
        let l = r.generator(line).unwrap();
        assert!(r.multiply(&p, &l).unwrap().is_zero());
        assert_eq!(r.multiply(&r.one(), &p).unwrap(), p);
        assert!(matches!(r.multiply(&p, &r.multiply(&p, &l).unwrap()), Err(Error::DegreeOverflow { .. })));
        assert!(matches!(r.degree(&p), Err(Error::WrongDegree { expected: 2, actual: 1 })));
    }

    fn fano_line_avoiding(r: &ChowRing, e: usize) -> Subset {
        *r.flats().iter().find(|f| f.len() == 3 && !f.contains(e)).unwrap()
    }

    #[test]
    fn rank_one_is_degenerate() {
        let r = ChowRing::build(&Matroid::uniform(1, 3).unwrap()).unwrap();
        assert_eq!(r.dims(), vec![1]);
        assert!(r.flats().is_empty());
        assert!(r.alpha().is_zero() && r.beta().is_zero());
        assert_eq!(r.degree(&r.one()).unwrap(), Rational::one());
        assert_eq!(r.mk_via_chow(0).unwrap(), Rational::one());
    }

    #[test]
    fn errors() {
        assert!(matches!(ChowRing::build(&Matroid::uniform(0, 2).unwrap()), Err(Error::HasLoop(0))));
        let (n, edges) = complete_graph(5);
        let k5 = Matroid::from_graph(n, &edges).unwrap();
        assert!(matches!(ChowRing::build_with_limit(&k5, 100), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn k4_agrees_with_reduced_polynomial() {
        let (n, edges) = complete_graph(4);
        let m = Matroid::from_graph(n, &edges).unwrap();
        let r = ChowRing::build(&m).unwrap();
        // (t-1)(t-2)(t-3)/(t-1) = t^2 - 5t + 6
        let expected = [1, 5, 6];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(r.mk_via_chow(k).unwrap(), Rational::from(*e));
        }
    }
}
