//! Ample classes from strictly submodular functions, and exact checks of
//! Hard Lefschetz and the Hodge-Riemann relations on `A*(M)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chow::{ChowElement, ChowRing};
use crate::error::{Error, Result};
use crate::invariants::{is_log_concave, m_sequence};
use crate::linalg::{Inertia, QMatrix};
use crate::matroid::Matroid;
use crate::rational::Rational;
use crate::subset::{all_subsets, Subset};

/// Ground-set cap for validating a submodular function.
pub const SUBMODULAR_LIMIT: usize = 16;

/// A function `c : 2^E → Q`, stored by subset mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmodularWitness {
    size: usize,
    values: Vec<Rational>,
}

impl SubmodularWitness {
    pub fn from_fn(size: usize, mut c: impl FnMut(Subset) -> Rational) -> Result<SubmodularWitness> {
        if size > SUBMODULAR_LIMIT {
            return Err(Error::GroundSetTooLarge { size, limit: SUBMODULAR_LIMIT });
        }
        Ok(SubmodularWitness { size, values: all_subsets(size).map(&mut c).collect() })
    }

    /// `c(S) = |S| (|E| - |S|)`.
    pub fn default_for(size: usize) -> Result<SubmodularWitness> {
        SubmodularWitness::from_fn(size, |s| Rational::from((s.len() * (size - s.len())) as i64))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn value(&self, s: Subset) -> &Rational {
        &self.values[s.bits() as usize]
    }

    pub fn scaled(&self, lambda: &Rational) -> SubmodularWitness {
        SubmodularWitness { size: self.size, values: self.values.iter().map(|v| v * lambda).collect() }
    }
}

/// Strict submodularity with `c(∅) = c(E) = 0` and nonnegative values.
///
/// The inequality on incomparable pairs is checked through the local form
/// `c(S+i) + c(S+j) > c(S) + c(S+i+j)`: for incomparable `A, B` the gap
/// `c(A) + c(B) - c(A∪B) - c(A∩B)` is a nonempty sum of local gaps.
pub fn is_strictly_submodular(c: &SubmodularWitness) -> bool {
    submodular_failure(c).is_none()
}

/// First violation found by [`is_strictly_submodular`], described in words.
pub fn submodular_failure(c: &SubmodularWitness) -> Option<String> {
    let n = c.size;
    let full = Subset::full(n);
    if !c.value(Subset::EMPTY).is_zero() || !c.value(full).is_zero() {
        return Some("c(∅) and c(E) must vanish".into());
    }
    if let Some(s) = all_subsets(n).find(|&s| c.value(s).is_negative()) {
        return Some(format!("c({s}) is negative"));
    }
    for s in all_subsets(n) {
        for i in (full - s).iter() {
            for j in (full - s).iter().filter(|&j| j > i) {
                let lhs = c.value(s.with(i)) + c.value(s.with(j));
                let rhs = c.value(s) + c.value(s.with(i).with(j));
                if lhs <= rhs {
                    return Some(format!("A = {}, B = {}", s.with(i), s.with(j)));
                }
            }
        }
    }
    None
}

/// Direct scan over all incomparable pairs; exponential in `2 |E|`.
pub fn is_strictly_submodular_exhaustive(c: &SubmodularWitness) -> bool {
    let n = c.size;
    if !c.value(Subset::EMPTY).is_zero() || !c.value(Subset::full(n)).is_zero() {
        return false;
    }
    if all_subsets(n).any(|s| c.value(s).is_negative()) {
        return false;
    }
    all_subsets(n).all(|a| {
        all_subsets(n)
            .filter(|&b| b > a && !a.comparable(b))
            .all(|b| c.value(a | b) + c.value(a & b) < c.value(a) + c.value(b))
    })
}

/// `ℓ(c) = Σ_F c(F) x_F` for a validated strictly submodular `c`.
#[derive(Clone, Debug)]
pub struct AmpleClass {
    pub element: ChowElement,
    pub witness: SubmodularWitness,
}

impl AmpleClass {
    pub fn new(ring: &ChowRing, witness: SubmodularWitness) -> Result<AmpleClass> {
        if witness.size() != ring.ground_size() {
            return Err(Error::DimensionMismatch(witness.size(), ring.ground_size()));
        }
        if let Some(why) = submodular_failure(&witness) {
            return Err(Error::InvalidArgument(format!("witness is not strictly submodular: {why}")));
        }
        let element = ring.linear_class(|f| witness.value(f).clone());
        Ok(AmpleClass { element, witness })
    }
}

/// The ample class of `c(S) = |S| (|E| - |S|)`.
pub fn default_ample(ring: &ChowRing) -> Result<AmpleClass> {
    AmpleClass::new(ring, SubmodularWitness::default_for(ring.ground_size())?)
}

fn check_k(ring: &ChowRing, k: usize) -> Result<()> {
    if 2 * k > ring.top_degree() {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds d/2 = {}/2", ring.top_degree())));
    }
    Ok(())
}

/// Outcome of the Hard Lefschetz check in degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzOutcome {
    pub k: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl LefschetzOutcome {
    pub fn passed(&self) -> bool {
        self.source_dim == self.target_dim && self.rank == self.source_dim
    }
}

pub fn hard_lefschetz(ring: &ChowRing, ell: &AmpleClass, k: usize) -> Result<LefschetzOutcome> {
    check_k(ring, k)?;
    let d = ring.top_degree();
    let power = ring.power(&ell.element, d - 2 * k)?;
    let matrix = ring.multiplication_matrix(&power, k)?;
    Ok(LefschetzOutcome { k, source_dim: matrix.cols(), target_dim: matrix.rows(), rank: matrix.certified_rank() })
}

/// Multiplication by `ℓ^{d-2k}` is a bijection `A^k → A^{d-k}`.
pub fn hard_lefschetz_check(ring: &ChowRing, ell: &AmpleClass, k: usize) -> Result<bool> {
    Ok(hard_lefschetz(ring, ell, k)?.passed())
}

/// Primitive spaces up to this dimension are checked through their Gram
/// matrix; larger ones through the signature of the Lefschetz decomposition.
pub const GRAM_LIMIT: usize = 200;

/// Evidence behind a Hodge-Riemann verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HodgeRiemannCertificate {
    /// LDLᵀ pivots of the Gram matrix on a basis of `P^k`, up to and
    /// including the first nonpositive one.
    Gram { pivots: Vec<Rational> },
    /// Inertia of the form `Q_k` on all of `A^k` and of `Q_{k-1}` on
    /// `A^{k-1}`, with the rank of `ℓ : A^{k-1} → A^k`. As
    /// `A^k = ℓ A^{k-1} ⊕ P^k` orthogonally and `Q_k(ℓa, ℓb) = -Q_{k-1}(a, b)`,
    /// `Q_k` is positive definite on `P^k` iff it has
    /// `dim P^k + n₋(Q_{k-1})` positive eigenvalues and both forms are
    /// nondegenerate.
    Signature { form: Inertia, lower: Inertia, lefschetz_rank: usize },
}

/// Outcome of the Hodge-Riemann check in degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeRiemannOutcome {
    pub k: usize,
    pub primitive_dim: usize,
    pub certificate: HodgeRiemannCertificate,
}

impl HodgeRiemannOutcome {
    pub fn passed(&self) -> bool {
        match &self.certificate {
            HodgeRiemannCertificate::Gram { pivots } => {
                pivots.len() == self.primitive_dim && pivots.iter().all(Rational::is_positive)
            }
            HodgeRiemannCertificate::Signature { form, lower, lefschetz_rank } => {
                let lower_dim = lower.positive + lower.negative + lower.zero;
                form.zero == 0
                    && lower.zero == 0
                    && *lefschetz_rank == lower_dim
                    && form.positive + form.negative == self.primitive_dim + lower_dim
                    && form.positive == self.primitive_dim + lower.negative
            }
        }
    }
}

/// The Hodge-Riemann form `(a, b) ↦ (-1)^k deg(a · ℓ^{d-2k} · b)` on the
/// basis of `A^k`.
pub fn hodge_riemann_form(ring: &ChowRing, ell: &AmpleClass, k: usize) -> Result<QMatrix> {
    check_k(ring, k)?;
    let d = ring.top_degree();
    let pairing = ring.poincare_pairing(k)?;
    let mut form = if d == 2 * k {
        pairing
    } else {
        let power = ring.power(&ell.element, d - 2 * k)?;
        pairing.mul(&ring.multiplication_matrix(&power, k)?)
    };
    if k % 2 == 1 {
        form = QMatrix::from_fn(form.rows(), form.cols(), |i, j| -form.get(i, j));
    }
    Ok(form)
}

/// Basis of the primitive classes `P^k = ker(ℓ^{d-2k+1} : A^k → A^{d-k+1})`,
/// as coordinate vectors on the basis of `A^k`.
pub fn primitive_basis(ring: &ChowRing, ell: &AmpleClass, k: usize) -> Result<Vec<Vec<Rational>>> {
    check_k(ring, k)?;
    let d = ring.top_degree();
    let dim = ring.dim(k);
    if d - k + 1 > d {
        // A^{d+1} = 0
        return Ok((0..dim).map(|i| (0..dim).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect());
    }
    let power = ring.power(&ell.element, d - 2 * k + 1)?;
    Ok(ring.multiplication_matrix(&power, k)?.kernel())
}

/// `Kᵀ Q K` for a sparse-ish family of column vectors `K`.
fn restrict_form(form: &QMatrix, vectors: &[Vec<Rational>]) -> QMatrix {
    let support: Vec<Vec<usize>> =
        vectors.iter().map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()).collect();
    let qk: Vec<Vec<Rational>> = vectors
        .iter()
        .zip(&support)
        .map(|(v, sup)| {
            (0..form.rows())
                .map(|i| {
                    let mut acc = Rational::zero();
                    for &j in sup {
                        let a = form.get(i, j);
                        if !a.is_zero() {
                            acc.add_product(a, &v[j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    QMatrix::from_fn(vectors.len(), vectors.len(), |a, b| {
        let mut acc = Rational::zero();
        for &i in &support[a] {
            if !qk[b][i].is_zero() {
                acc.add_product(&vectors[a][i], &qk[b][i]);
            }
        }
        acc
    })
}

/// `dim P^k`, from an exact rank.
pub fn primitive_dim(ring: &ChowRing, ell: &AmpleClass, k: usize) -> Result<usize> {
    check_k(ring, k)?;
    let d = ring.top_degree();
    if k == 0 {
        return Ok(ring.dim(0));
    }
    let power = ring.power(&ell.element, d - 2 * k + 1)?;
    Ok(ring.dim(k) - ring.multiplication_matrix(&power, k)?.certified_rank())
}

/// Hodge-Riemann in degree `k`, by the Gram matrix when `dim P^k` is at most
/// [`GRAM_LIMIT`] and by the signature otherwise.
pub fn hodge_riemann(ring: &ChowRing, ell: &AmpleClass, k: usize) -> Result<HodgeRiemannOutcome> {
    if primitive_dim(ring, ell, k)? <= GRAM_LIMIT {
        hodge_riemann_gram(ring, ell, k)
    } else {
        hodge_riemann_signature(ring, ell, k)
    }
}

/// Exact LDLᵀ of the Gram matrix of `Q_k` on the kernel basis of `P^k`.
pub fn hodge_riemann_gram(ring: &ChowRing, ell: &AmpleClass, k: usize) -> Result<HodgeRiemannOutcome> {
    let form = hodge_riemann_form(ring, ell, k)?;
    let primitive = primitive_basis(ring, ell, k)?;
    let gram = restrict_form(&form, &primitive);
    let certificate = HodgeRiemannCertificate::Gram { pivots: gram.ldlt_pivots() };
    Ok(HodgeRiemannOutcome { k, primitive_dim: primitive.len(), certificate })
}

/// Inertia of `Q_k` on `A^k` against that of `Q_{k-1}` on `A^{k-1}`.
pub fn hodge_riemann_signature(ring: &ChowRing, ell: &AmpleClass, k: usize) -> Result<HodgeRiemannOutcome> {
    let primitive_dim = primitive_dim(ring, ell, k)?;
    let form = hodge_riemann_form(ring, ell, k)?.inertia();
    let (lower, lefschetz_rank) = if k == 0 {
        (Inertia::default(), 0)
    } else {
        let lower = hodge_riemann_form(ring, ell, k - 1)?.inertia();
        (lower, ring.multiplication_matrix(&ell.element, k - 1)?.certified_rank())
    };
    let certificate = HodgeRiemannCertificate::Signature { form, lower, lefschetz_rank };
    Ok(HodgeRiemannOutcome { k, primitive_dim, certificate })
}

/// The Hodge-Riemann form is positive definite on `P^k`.
pub fn hodge_riemann_check(ring: &ChowRing, ell: &AmpleClass, k: usize) -> Result<bool> {
    Ok(hodge_riemann(ring, ell, k)?.passed())
}

/// The pieces of the deduction of log-concavity of the m-sequence from
/// Hodge-Riemann in degrees 0 and 1.
#[derive(Clone, Debug)]
pub struct RotaWelshReport {
    pub m_sequence: Vec<BigInt>,
    pub log_concave: bool,
    /// `(k, passed)` for every `k ≤ min(1, d/2)`.
    pub hodge_riemann: Vec<(usize, bool)>,
}

impl RotaWelshReport {
    pub fn passed(&self) -> bool {
        self.log_concave && self.hodge_riemann.iter().all(|&(_, ok)| ok)
    }
}

pub fn rota_welsh_via_hr(m: &Matroid) -> Result<RotaWelshReport> {
    let ring = ChowRing::build(m)?;
    let ell = default_ample(&ring)?;
    let m_sequence = m_sequence(m)?;
    let log_concave = is_log_concave(&m_sequence)?;
    let top = (ring.top_degree() / 2).min(1);
    let hodge_riemann = (0..=top).map(|k| Ok((k, hodge_riemann_check(&ring, &ell, k)?))).collect::<Result<_>>()?;
    Ok(RotaWelshReport { m_sequence, log_concave, hodge_riemann })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(m: &Matroid) -> ChowRing {
        ChowRing::build(m).unwrap()
    }

    #[test]
    fn default_witness_is_strictly_submodular() {
        for n in 1..=5 {
            let c = SubmodularWitness::default_for(n).unwrap();
            assert!(is_strictly_submodular(&c));
            assert_eq!(is_strictly_submodular(&c), is_strictly_submodular_exhaustive(&c));
        }
        let c = SubmodularWitness::default_for(3).unwrap();
        let (a, b) = (Subset::singleton(0), Subset::singleton(1));
        assert_eq!(c.value(a | b) + c.value(a & b), Rational::from(2));
        assert_eq!(c.value(a) + c.value(b), Rational::from(4));
    }

    #[test]
    fn validator_rejects_bad_witnesses() {
        let zero = SubmodularWitness::from_fn(3, |_| Rational::zero()).unwrap();
        assert!(!is_strictly_submodular(&zero));
        let modular = SubmodularWitness::from_fn(3, |s| Rational::from(s.len() as i64)).unwrap();
        assert!(!is_strictly_submodular(&modular));
        let shifted = SubmodularWitness::from_fn(3, |s| Rational::from((s.len() * (3 - s.len())) as i64 + i64::from(s.len() == 3))).unwrap();
        assert!(!is_strictly_submodular(&shifted));
        assert!(SubmodularWitness::default_for(17).is_err());
        let r = ring(&Matroid::uniform(2, 3).unwrap());
        assert!(AmpleClass::new(&r, zero).is_err());
    }

    #[test]
    fn u23_and_u33() {
        let r = ring(&Matroid::uniform(2, 3).unwrap());
        let ell = default_ample(&r).unwrap();
        assert!(r.degree(&ell.element).unwrap().is_positive());
        assert!(hard_lefschetz_check(&r, &ell, 0).unwrap());
        assert!(hodge_riemann_check(&r, &ell, 0).unwrap());
        let r = ring(&Matroid::uniform(3, 3).unwrap());
        let ell = default_ample(&r).unwrap();
        let sq = r.power(&ell.element, 2).unwrap();
        assert!(r.degree(&sq).unwrap().is_positive());
        assert!(hard_lefschetz_check(&r, &ell, 0).unwrap());
        assert!(hodge_riemann_check(&r, &ell, 0).unwrap());
        assert!(hard_lefschetz_check(&r, &ell, 1).unwrap());
        assert!(hard_lefschetz_check(&r, &ell, 2).is_err());
    }

    #[test]
    fn fano_degree_one() {
        let fano = Matroid::named("fano").unwrap();
        let r = ring(&fano);
        let ell = default_ample(&r).unwrap();
        assert!(hard_lefschetz_check(&r, &ell, 1).unwrap());
        let hr = hodge_riemann(&r, &ell, 1).unwrap();
        assert_eq!(hr.primitive_dim, 7);
        assert!(hr.passed());
        assert!(hodge_riemann_signature(&r, &ell, 1).unwrap().passed());
        let report = rota_welsh_via_hr(&fano).unwrap();
        assert!(report.passed());
        assert_eq!(report.hodge_riemann, vec![(0, true), (1, true)]);
    }

    #[test]
    fn a_non_ample_class_can_fail() {
        // x_F for a single flat is not ample; HR in degree 0 needs deg(ℓ^d) > 0
        let r = ring(&Matroid::uniform(3, 3).unwrap());
        let f = r.flats()[0];
        let x = r.generator(f).unwrap();
        let sq = r.power(&x, 2).unwrap();
        assert!(r.degree(&sq).unwrap().is_negative());
    }

    #[test]
    fn primitive_part_is_orthogonal_to_lefschetz_image() {
        let fano = Matroid::named("fano").unwrap();
        let r = ring(&fano);
        let ell = default_ample(&r).unwrap();
        let form = hodge_riemann_form(&r, &ell, 1).unwrap();
        let primitive = primitive_basis(&r, &ell, 1).unwrap();
        // ℓ · A^0 in coordinates of A^1
        let image = ell.element.coeffs().to_vec();
        for p in &primitive {
            let value: Rational = (0..form.rows())
                .flat_map(|i| (0..form.cols()).map(move |j| (i, j)))
                .map(|(i, j)| form.get(i, j) * &image[i] * &p[j])
                .sum();
            assert!(value.is_zero());
        }
    }

    #[test]
    fn scaling_the_witness_keeps_verdicts() {
        let m = Matroid::named("vamos").unwrap().contract(0).unwrap();
        let r = ring(&m);
        let base = SubmodularWitness::default_for(r.ground_size()).unwrap();
        for lambda in [Rational::new(1, 3), Rational::from(7)] {
            let ell = AmpleClass::new(&r, base.scaled(&lambda)).unwrap();
            for k in 0..=r.top_degree() / 2 {
                assert!(hard_lefschetz_check(&r, &ell, k).unwrap());
                assert!(hodge_riemann_check(&r, &ell, k).unwrap());
            }
        }
    }
}
