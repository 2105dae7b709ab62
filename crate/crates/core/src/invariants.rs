//! Polynomial invariants: characteristic (three routes), chromatic, reduced
//! characteristic, Tutte, Whitney numbers, f-vectors, and the sequence
//! audits built on them.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::FlatsLattice;
use crate::matroid::{FpMatrix, Matroid, RankTable};
use crate::poly::{IntPolynomial, IntPolynomial2};
use crate::subset::all_subsets;

/// Ground-set cap for the Mason-Welsh co-extension check.
pub const MASON_WELSH_LIMIT: usize = 16;
/// Cap on the number of row-space vectors enumerated by [`finite_field_count`].
pub const POINT_COUNT_LIMIT: u128 = 1 << 22;

/// `χ_M(t) = Σ_F μ(∅, F) t^{r - r(F)}` over the lattice of flats.
pub fn char_poly_flats(m: &Matroid) -> Result<IntPolynomial> {
    if !m.is_loopless() {
        return Ok(IntPolynomial::zero());
    }
    let lattice = FlatsLattice::build(m)?;
    Ok(char_poly_from_lattice(&lattice))
}

pub(crate) fn char_poly_from_lattice(lattice: &FlatsLattice) -> IntPolynomial {
    let mu = lattice.mobius_bottom();
    let r = lattice.rank();
    let mut coeffs = vec![BigInt::zero(); r + 1];
    for (i, value) in mu.iter().enumerate() {
        coeffs[r - lattice.rank_of(i)] += value;
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// `χ_M(t) = Σ_{A ⊆ E} (-1)^{|A|} t^{r - r(A)}`.
pub fn char_poly_subsets(m: &Matroid) -> Result<IntPolynomial> {
    let table = m.rank_table()?;
    let r = m.rank();
    let mut coeffs = vec![0i64; r + 1];
    for a in all_subsets(m.size()) {
        let sign = if a.len() % 2 == 0 { 1 } else { -1 };
        coeffs[r - table.rank(a)] += sign;
    }
    Ok(IntPolynomial::from_i64(&coeffs))
}

/// Deletion-contraction on the smallest element that is neither a loop nor a
/// coloop, with coloops split off as factors `t - 1`.
pub fn char_poly_delcon(m: &Matroid) -> IntPolynomial {
    let mut memo = HashMap::new();
    delcon(m.clone(), &mut memo)
}

fn delcon(m: Matroid, memo: &mut HashMap<Matroid, IntPolynomial>) -> IntPolynomial {
    if !m.is_loopless() {
        return IntPolynomial::zero();
    }
    let coloops = m.coloops();
    let mut core = m;
    for c in coloops.iter().collect::<Vec<_>>().into_iter().rev() {
        core = core.contract(c).expect("coloop is an element");
    }
    let factor = IntPolynomial::linear_root(1).pow(coloops.len());
    if core.size() == 0 {
        return factor;
    }
    if let Some(p) = memo.get(&core) {
        return &factor * p;
    }
    // no loops or coloops remain, so 0 is eligible
    let deleted = delcon(core.delete(0).expect("0 is an element"), memo);
    let contracted = delcon(core.contract(0).expect("0 is an element"), memo);
    let p = &deleted - &contracted;
    memo.insert(core, p.clone());
    &factor * &p
}

/// `χ_G(t) = t^{c(G)} χ_{M(G)}(t)`.
pub fn chromatic_polynomial(num_vertices: usize, edges: &[(usize, usize)]) -> Result<IntPolynomial> {
    let m = Matroid::from_graph(num_vertices, edges)?;
    let chi = if m.size() <= crate::matroid::EXHAUSTIVE_LIMIT { char_poly_subsets(&m)? } else { char_poly_delcon(&m) };
    let components = num_vertices - m.rank();
    Ok(&IntPolynomial::monomial(components) * &chi)
}

/// `χ̄_M(t) = χ_M(t) / (t - 1)`.
pub fn reduced_char_poly(m: &Matroid) -> Result<IntPolynomial> {
    if m.size() == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if let Some(e) = m.loops().min() {
        return Err(Error::HasLoop(e));
    }
    char_poly_best(m)?.div_exact_linear(1)
}

/// The fastest available route for `χ_M`.
pub(crate) fn char_poly_best(m: &Matroid) -> Result<IntPolynomial> {
    if m.size() <= crate::matroid::EXHAUSTIVE_LIMIT {
        char_poly_subsets(m)
    } else {
        Ok(char_poly_delcon(m))
    }
}

/// `m_k = |[t^{d-k}] χ̄_M|` for `k = 0..=d`, where `d = r - 1`.
pub fn m_sequence(m: &Matroid) -> Result<Vec<BigInt>> {
    Ok(reduced_char_poly(m)?.abs_descending())
}

/// Corank-nullity expansion `Σ_A (x-1)^{r-r(A)} (y-1)^{|A|-r(A)}`.
pub fn tutte(m: &Matroid) -> Result<IntPolynomial2> {
    let table = m.rank_table()?;
    tutte_from_table(m.size(), m.rank(), &table)
}

fn tutte_from_table(size: usize, r: usize, table: &RankTable) -> Result<IntPolynomial2> {
    let mut counts = vec![vec![0u64; size + 1]; r + 1];
    for a in all_subsets(size) {
        let ra = table.rank(a);
        counts[r - ra][a.len() - ra] += 1;
    }
    let mut coeffs = vec![vec![BigInt::zero(); size + 1]; r + 1];
    for (i, row) in counts.iter().enumerate() {
        for (j, &n) in row.iter().enumerate() {
            if n == 0 {
                continue;
            }
            // n (x-1)^i (y-1)^j
            for a in 0..=i {
                for b in 0..=j {
                    let sign = if (i - a + j - b) % 2 == 0 { 1 } else { -1 };
                    let c = binomial(BigInt::from(i), BigInt::from(a)) * binomial(BigInt::from(j), BigInt::from(b));
                    coeffs[a][b] += c * BigInt::from(n) * sign;
                }
            }
        }
    }
    Ok(IntPolynomial2::from_coeffs(coeffs))
}

/// `w_k` = coefficient of `t^{r-k}` in `χ_M`, for `k = 0..=r`.
pub fn whitney_first(m: &Matroid) -> Result<Vec<BigInt>> {
    let chi = char_poly_best(m)?;
    Ok((0..=m.rank()).map(|k| chi.coeff(m.rank() - k)).collect())
}

/// Number of rank-`k` flats of the simplification.
pub fn whitney_second(m: &Matroid) -> Result<Vec<usize>> {
    let simple = m.simplify().matroid;
    Ok(FlatsLattice::build(&simple)?.whitney_second())
}

/// `ρ(t) = Σ_F t^{r - r(F)}` over the flats of the simplification.
pub fn rank_polynomial(m: &Matroid) -> Result<IntPolynomial> {
    let w = whitney_second(m)?;
    let r = w.len() - 1;
    let mut coeffs = vec![BigInt::zero(); r + 1];
    for (k, &n) in w.iter().enumerate() {
        coeffs[r - k] = BigInt::from(n);
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// `f_k` = number of independent sets of size `k`, for `k = 0..=r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(pub Vec<BigInt>);

impl FVector {
    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    /// `f_0 t^r - f_1 t^{r-1} + ... + (-1)^r f_r`.
    pub fn signed_polynomial(&self) -> IntPolynomial {
        let r = self.0.len() - 1;
        let mut coeffs = vec![BigInt::zero(); r + 1];
        for (k, f) in self.0.iter().enumerate() {
            coeffs[r - k] = if k % 2 == 0 { f.clone() } else { -f };
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

pub fn f_vector(m: &Matroid) -> FVector {
    let mut f = vec![BigInt::zero(); m.rank() + 1];
    for i in m.independent_sets() {
        f[i.len()] += 1;
    }
    FVector(f)
}

/// Whether the signed f-polynomial of `M` equals `χ̄` of the free
/// co-extension `M × e`.
pub fn mason_welsh_check(m: &Matroid) -> Result<bool> {
    if m.size() > MASON_WELSH_LIMIT {
        return Err(Error::GroundSetTooLarge { size: m.size(), limit: MASON_WELSH_LIMIT });
    }
    let lhs = f_vector(m).signed_polynomial();
    let coext = m.free_coextension()?;
    Ok(lhs == reduced_char_poly(&coext)?)
}

/// Result of [`finite_field_count`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCount {
    pub count: BigInt,
    pub chi_at_p: BigInt,
    pub matches: bool,
}

/// Count vectors of the row space of `matrix` with every coordinate in
/// `F_p^×`, and compare with `χ_M(p)` for the column matroid.
pub fn finite_field_count(matrix: &FpMatrix) -> Result<PointCount> {
    let p = matrix.prime;
    let basis = matrix.row_space_basis();
    let points = (p as u128).checked_pow(basis.len() as u32).unwrap_or(u128::MAX);
    if points > POINT_COUNT_LIMIT {
        return Err(Error::TooManyPoints { points, limit: POINT_COUNT_LIMIT });
    }
    let m = matrix.num_cols();
    let mut count = 0u64;
    let mut coeffs = vec![0u64; basis.len()];
    let mut v = vec![0u64; m];
    loop {
        v.iter_mut().for_each(|x| *x = 0);
        for (c, row) in coeffs.iter().zip(&basis) {
            for (x, a) in v.iter_mut().zip(row) {
                *x = (*x + c * a) % p;
            }
        }
        if v.iter().all(|&x| x != 0) {
            count += 1;
        }
        // odometer over F_p^k
        let mut i = 0;
        while i < coeffs.len() {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        if i == coeffs.len() {
            break;
        }
    }
    let matroid = Matroid::from_matrix(matrix)?;
    let chi_at_p = char_poly_best(&matroid)?.eval_i64(p as i64);
    let count = BigInt::from(count);
    let matches = count == chi_at_p;
    Ok(PointCount { count, chi_at_p, matches })
}

fn check_sequence(seq: &[BigInt]) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    match seq.iter().position(Signed::is_negative) {
        Some(i) => Err(Error::NegativeEntry(i)),
        None => Ok(()),
    }
}

/// `a_i² ≥ a_{i-1} a_{i+1}` for every interior index.
pub fn is_log_concave(seq: &[BigInt]) -> Result<bool> {
    check_sequence(seq)?;
    Ok(seq.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2]))
}

/// `a_0 ≤ ... ≤ a_i ≥ ... ≥ a_d` for some `i`.
pub fn is_unimodal(seq: &[BigInt]) -> Result<bool> {
    check_sequence(seq)?;
    let peak = seq.windows(2).take_while(|w| w[0] <= w[1]).count();
    Ok(seq[peak..].windows(2).all(|w| w[0] >= w[1]))
}

pub fn is_log_concave_usize(seq: &[usize]) -> Result<bool> {
    is_log_concave(&seq.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
}

/// Number of flags `F_1 ⊊ ... ⊊ F_k` with `r(F_i) = i` and
/// `min F_1 > min F_2 > ... > min F_k > 0`.
pub fn bjorner_mk(m: &Matroid, k: usize) -> Result<BigInt> {
    Ok(bjorner_sequence(m)?.get(k).cloned().unwrap_or_else(BigInt::zero))
}

/// [`bjorner_mk`] for every `k = 0..=r`.
pub fn bjorner_sequence(m: &Matroid) -> Result<Vec<BigInt>> {
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    let lattice = FlatsLattice::build(m)?;
    let min = |i: usize| lattice.flat(i).min().expect("nonempty flat");
    let mut counts = vec![BigInt::zero(); lattice.len()];
    let mut out = vec![BigInt::one()];
    for rank in 1..=lattice.rank() {
        let mut total = BigInt::zero();
        for g in lattice.of_rank(rank).collect::<Vec<_>>() {
            let c = if min(g) == 0 {
                BigInt::zero()
            } else if rank == 1 {
                BigInt::one()
            } else {
                lattice.down_covers(g).iter().filter(|&&f| min(f) > min(g)).map(|&f| &counts[f]).sum()
            };
            total += &c;
            counts[g] = c;
        }
        out.push(total);
    }
    Ok(out)
}

/// Whitney numbers of the second kind audited against the two
/// inequalities known for representable matroids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuhWangReport {
    pub whitney_second: Vec<usize>,
    /// `W_1 ≤ W_2 ≤ ... ≤ W_{⌊r/2⌋}`.
    pub first_half_increasing: bool,
    /// `W_k ≤ W_{r-k}` for all `k < r/2`.
    pub top_heavy: bool,
}

impl HuhWangReport {
    pub fn holds(&self) -> bool {
        self.first_half_increasing && self.top_heavy
    }
}

/// Runs on the simplification, which has the same lattice of flats.
pub fn huh_wang_check(m: &Matroid) -> Result<HuhWangReport> {
    let w = whitney_second(m)?;
    let r = w.len() - 1;
    let first_half_increasing = (1..r / 2).all(|k| w[k] <= w[k + 1]);
    let top_heavy = (0..r).filter(|&k| 2 * k < r).all(|k| w[k] <= w[r - k]);
    Ok(HuhWangReport { whitney_second: w, first_half_increasing, top_heavy })
}

/// Signs of `w_k` alternate strictly on a loopless matroid.
pub fn whitney_signs_alternate(w: &[BigInt]) -> bool {
    w.iter().enumerate().all(|(k, x)| if k % 2 == 0 { x.is_positive() } else { x.is_negative() })
}
