//! Bergman fans and the permutohedral fan in `N = Z^E / Z·(1,…,1)`.

use std::collections::{HashMap, HashSet};

use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::FlatsLattice;
use crate::linalg::IntLattice;
use crate::matroid::Matroid;
use crate::subset::{all_subsets, Subset};

/// Default cap on the number of cones materialized for one fan.
pub const DEFAULT_CONE_LIMIT: usize = 2_000_000;
/// Largest ground set for which [`permutohedral_fan`] is materialized.
pub const PERMUTOHEDRAL_LIMIT: usize = 8;

/// A class in `Z^E / Z·(1,…,1)`, represented with last coordinate 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    /// Canonical representative of the class of `v`.
    pub fn canonical(mut v: Vec<i64>) -> LatticePoint {
        let last = *v.last().expect("nonempty ground set");
        v.iter_mut().for_each(|x| *x -= last);
        LatticePoint(v)
    }

    /// The class of `e_S = Σ_{i ∈ S} e_i`.
    pub fn indicator(size: usize, s: Subset) -> LatticePoint {
        LatticePoint::canonical((0..size).map(|i| i64::from(s.contains(i))).collect())
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Coordinates with the (zero) last entry dropped.
    pub fn reduced(&self) -> &[i64] {
        &self.0[..self.0.len() - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Divide by the gcd of the entries.
    pub fn primitive(&self) -> LatticePoint {
        let g = self.0.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g <= 1 {
            return self.clone();
        }
        LatticePoint(self.0.iter().map(|x| x / g).collect())
    }

    /// The nonempty proper subset `S` with `self = e_S`, if any.
    pub fn decode_subset(&self) -> Option<Subset> {
        let size = self.0.len();
        if self.is_zero() {
            return None;
        }
        if self.0.iter().all(|&x| x == 0 || x == 1) {
            Some(Subset::from_elements((0..size).filter(|&i| self.0[i] == 1)))
        } else if self.0.iter().all(|&x| x == 0 || x == -1) {
            Some(Subset::full(size) - Subset::from_elements((0..size).filter(|&i| self.0[i] == -1)))
        } else {
            None
        }
    }

    fn add(&mut self, other: &LatticePoint) {
        self.0.iter_mut().zip(&other.0).for_each(|(a, b)| *a += b);
    }
}

/// A simplicial cone, given by ray indices into its fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    /// The flag producing the cone, in increasing order.
    pub flag: Vec<Subset>,
    pub rays: Vec<u32>,
}

impl Cone {
    pub fn dim(&self) -> usize {
        self.rays.len()
    }
}

/// A fan of simplicial cones on the ground set `{0, …, size-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    size: usize,
    rays: Vec<LatticePoint>,
    cones: Vec<Cone>,
}

impl Fan {
    /// Fan whose cones are spanned by `e_F` along each of the given flags.
    pub fn from_flags(size: usize, flags: impl IntoIterator<Item = Vec<Subset>>) -> Fan {
        let mut rays = Vec::new();
        let mut index: HashMap<Subset, u32> = HashMap::new();
        let mut cones = Vec::new();
        for flag in flags {
            let ids = flag
                .iter()
                .map(|&f| {
                    *index.entry(f).or_insert_with(|| {
                        rays.push(LatticePoint::indicator(size, f));
                        (rays.len() - 1) as u32
                    })
                })
                .collect();
            cones.push(Cone { flag, rays: ids });
        }
        Fan { size, rays, cones }
    }

    pub fn ground_size(&self) -> usize {
        self.size
    }

    /// Dimension of `N_R`, one less than the ground set size.
    pub fn ambient_dim(&self) -> usize {
        self.size - 1
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    pub fn ray(&self, i: u32) -> &LatticePoint {
        &self.rays[i as usize]
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn dim(&self) -> usize {
        self.cones.iter().map(Cone::dim).max().unwrap_or(0)
    }

    pub fn cones_of_dim(&self, k: usize) -> impl Iterator<Item = &Cone> {
        self.cones.iter().filter(move |c| c.dim() == k)
    }

    /// Number of cones of each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim() + 1];
        for c in &self.cones {
            f[c.dim()] += 1;
        }
        f
    }

    /// Nonzero rays spanning 1-dimensional cones.
    pub fn ray_points(&self) -> Vec<&LatticePoint> {
        self.cones_of_dim(1).map(|c| self.ray(c.rays[0])).collect()
    }

    /// The same fan without cone `i` (faces are kept).
    pub fn without_cone(&self, i: usize) -> Fan {
        let mut fan = self.clone();
        fan.cones.remove(i);
        fan
    }

    fn cone_key(&self, cone: &Cone) -> Vec<&LatticePoint> {
        let mut key: Vec<&LatticePoint> = cone.rays.iter().map(|&r| self.ray(r)).collect();
        key.sort_unstable();
        key
    }

    pub fn to_json(&self) -> Value {
        let cones: Vec<Value> = self
            .cones
            .iter()
            .map(|c| {
                json!({
                    "flag": c.flag.iter().map(|f| f.bits()).collect::<Vec<_>>(),
                    "rays": c.rays.iter().map(|&r| self.ray(r).reduced().to_vec()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "ambient_dim": self.ambient_dim(), "cones": cones })
    }
}

/// Number of flags of nonempty proper flats, including the empty flag.
pub fn flag_count(lattice: &FlatsLattice) -> u128 {
    let (bottom, top) = (lattice.bottom(), lattice.top());
    // chains ending at each flat, computed in increasing (rank, mask) order
    let mut ending = vec![0u128; lattice.len()];
    let mut total = 1u128;
    for j in 0..lattice.len() {
        if j == bottom || j == top {
            continue;
        }
        let below: u128 =
            (0..j).filter(|&i| i != bottom && lattice.leq(i, j) && i != j).map(|i| ending[i]).fold(0u128, u128::saturating_add);
        ending[j] = below.saturating_add(1);
        total = total.saturating_add(ending[j]);
    }
    total
}

/// All flags of nonempty proper flats with at most `max_len` members.
fn flags_of(lattice: &FlatsLattice, max_len: usize, limit: usize) -> Result<Vec<Vec<Subset>>> {
    let (bottom, top) = (lattice.bottom(), lattice.top());
    let proper: Vec<usize> = (0..lattice.len()).filter(|&i| i != bottom && i != top).collect();
    let mut out = vec![Vec::new()];
    let mut stack: Vec<usize> = Vec::new();
    fn extend(
        lattice: &FlatsLattice,
        proper: &[usize],
        stack: &mut Vec<usize>,
        max_len: usize,
        limit: usize,
        out: &mut Vec<Vec<Subset>>,
    ) -> Result<()> {
        if out.len() > limit {
            return Err(Error::TooManyCones { limit });
        }
        out.push(stack.iter().map(|&i| lattice.flat(i)).collect());
        if stack.len() == max_len {
            return Ok(());
        }
        let last = *stack.last().expect("nonempty");
        for &j in proper.iter().filter(|&&j| j > last && lattice.leq(last, j)) {
            stack.push(j);
            extend(lattice, proper, stack, max_len, limit, out)?;
            stack.pop();
        }
        Ok(())
    }
    if max_len == 0 {
        return Ok(out);
    }
    for &i in &proper {
        stack.push(i);
        extend(lattice, &proper, &mut stack, max_len, limit, &mut out)?;
        stack.pop();
    }
    Ok(out)
}

/// `Σ_M`: one cone per flag of nonempty proper flats.
pub fn bergman_fan(m: &Matroid) -> Result<Fan> {
    bergman_fan_with_limit(m, DEFAULT_CONE_LIMIT)
}

pub fn bergman_fan_with_limit(m: &Matroid, limit: usize) -> Result<Fan> {
    bergman_skeleton_with_limit(m, usize::MAX, limit)
}

/// Cones of `Σ_M` of dimension at most `k`.
pub fn bergman_skeleton(m: &Matroid, k: usize) -> Result<Fan> {
    bergman_skeleton_with_limit(m, k, DEFAULT_CONE_LIMIT)
}

fn bergman_skeleton_with_limit(m: &Matroid, k: usize, limit: usize) -> Result<Fan> {
    if m.size() == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if let Some(e) = m.loops().min() {
        return Err(Error::HasLoop(e));
    }
    let lattice = FlatsLattice::build(m)?;
    Ok(Fan::from_flags(m.size(), flags_of(&lattice, k, limit)?))
}

/// Normal fan of the permutohedron: flags of nonempty proper subsets of
/// `{0, …, n}`.
pub fn permutohedral_fan(n: usize) -> Result<Fan> {
    let size = n + 1;
    if n == 0 {
        return Err(Error::InvalidArgument("permutohedral fan needs n >= 1".into()));
    }
    if size > PERMUTOHEDRAL_LIMIT {
        return Err(Error::GroundSetTooLarge { size, limit: PERMUTOHEDRAL_LIMIT });
    }
    let full = Subset::full(size);
    let mut proper: Vec<Subset> = all_subsets(size).filter(|&s| !s.is_empty() && s != full).collect();
    proper.sort_unstable_by_key(|s| (s.len(), *s));
    let mut flags = vec![Vec::new()];
    let mut frontier: Vec<Vec<Subset>> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for flag in &frontier {
            let last = flag.last().copied().unwrap_or(Subset::EMPTY);
            for &s in proper.iter().filter(|&&s| last.is_proper_subset_of(s)) {
                let mut f = flag.clone();
                f.push(s);
                next.push(f);
            }
        }
        flags.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(Fan::from_flags(size, flags))
}

/// Every cone of `inner` is a cone of `outer`.
pub fn is_subfan(inner: &Fan, outer: &Fan) -> Result<bool> {
    if inner.size != outer.size {
        return Err(Error::DimensionMismatch(inner.size, outer.size));
    }
    let keys: HashSet<Vec<&LatticePoint>> = outer.cones.iter().map(|c| outer.cone_key(c)).collect();
    Ok(inner.cones.iter().all(|c| keys.contains(&inner.cone_key(c))))
}

/// Membership of every cone in the permutohedral fan without building it:
/// a simplicial cone belongs to it iff its rays are `e_S` for nonempty
/// proper subsets `S` forming a chain.
pub fn is_in_permutohedral_fan(fan: &Fan) -> bool {
    let decoded: Vec<Option<Subset>> = fan.rays.iter().map(LatticePoint::decode_subset).collect();
    fan.cones.iter().all(|c| {
        let sets: Option<Vec<Subset>> = c.rays.iter().map(|&r| decoded[r as usize]).collect();
        match sets {
            Some(mut sets) => {
                sets.sort_unstable_by_key(|s| (s.len(), *s));
                sets.windows(2).all(|w| w[0].is_proper_subset_of(w[1]))
            }
            None => false,
        }
    })
}

fn validate(fan: &Fan) -> Result<()> {
    let full = Subset::full(fan.size);
    for c in &fan.cones {
        let chain = c.flag.windows(2).all(|w| w[0].is_proper_subset_of(w[1]));
        let proper = c.flag.iter().all(|&f| !f.is_empty() && f != full);
        let rays_match = c.flag.len() == c.rays.len()
            && c.flag.iter().zip(&c.rays).all(|(&f, &r)| *fan.ray(r) == LatticePoint::indicator(fan.size, f));
        if !(chain && proper && rays_match) {
            let flag: Vec<String> = c.flag.iter().map(ToString::to_string).collect();
            return Err(Error::NotAMatroidFan(format!("cone on flag [{}]", flag.join(", "))));
        }
    }
    Ok(())
}

/// First codimension-one cone at which unit-weight balancing fails.
pub fn balancing_failure(fan: &Fan) -> Result<Option<Vec<Subset>>> {
    validate(fan)?;
    let top = fan.dim();
    if top == 0 {
        return Ok(None);
    }
    // for every facet of every top cone, add the primitive generator of the
    // ray opposite to it
    let mut sums: HashMap<Vec<u32>, LatticePoint> = HashMap::new();
    for c in fan.cones_of_dim(top) {
        for (i, &r) in c.rays.iter().enumerate() {
            let mut facet: Vec<u32> = c.rays.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            facet.sort_unstable();
            let u = fan.ray(r).primitive();
            sums.entry(facet).and_modify(|s| s.add(&u)).or_insert(u);
        }
    }
    for tau in fan.cones_of_dim(top - 1) {
        let mut key = tau.rays.clone();
        key.sort_unstable();
        let Some(sum) = sums.get(&key) else { continue };
        let gens: Vec<Vec<i64>> = tau.rays.iter().map(|&r| fan.ray(r).coords().to_vec()).collect();
        if !IntLattice::new(fan.size, &gens).contains(sum.coords()) {
            return Ok(Some(tau.flag.clone()));
        }
    }
    Ok(None)
}

/// Unit-weight balancing at every codimension-one cone.
pub fn balancing_check(fan: &Fan) -> Result<bool> {
    Ok(balancing_failure(fan)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u23_rays() {
        let fan = bergman_fan(&Matroid::uniform(2, 3).unwrap()).unwrap();
        assert_eq!(fan.f_vector(), vec![1, 3]);
        let mut rays: Vec<Vec<i64>> = fan.ray_points().iter().map(|r| r.reduced().to_vec()).collect();
        rays.sort();
        assert_eq!(rays, vec![vec![-1, -1], vec![0, 1], vec![1, 0]]);
        assert!(balancing_check(&fan).unwrap());
        let broken = fan.without_cone(1);
        assert!(!balancing_check(&broken).unwrap());
    }

    #[test]
    fn canonical_points() {
        assert!(LatticePoint::indicator(4, Subset::full(4)).is_zero());
        let p = LatticePoint::canonical(vec![3, 5, 2]);
        assert_eq!(LatticePoint::canonical(p.coords().to_vec()), p);
        assert_eq!(LatticePoint::canonical(vec![2, 4, 0]).primitive().coords(), &[1, 2, 0][..]);
        let s = Subset::from_elements([1, 3]);
        assert_eq!(LatticePoint::indicator(4, s).decode_subset(), Some(s));
        let s = Subset::from_elements([0, 3]);
        assert_eq!(LatticePoint::indicator(4, s).decode_subset(), Some(s));
    }

    #[test]
    fn fano_fan() {
        let fan = bergman_fan(&Matroid::named("fano").unwrap()).unwrap();
        assert_eq!(fan.f_vector(), vec![1, 14, 21]);
        assert!(balancing_check(&fan).unwrap());
    }

    #[test]
    fn permutohedral() {
        let p2 = permutohedral_fan(2).unwrap();
        assert_eq!(p2.cones_of_dim(2).count(), 6);
        let u = bergman_fan(&Matroid::uniform(2, 3).unwrap()).unwrap();
        assert!(is_subfan(&u, &p2).unwrap());
        assert!(!is_subfan(&p2, &u).unwrap());
        assert!(is_in_permutohedral_fan(&u));
        let p3 = permutohedral_fan(3).unwrap();
        assert_eq!(p3.cones_of_dim(3).count(), 24);
        let b4 = bergman_fan(&Matroid::uniform(4, 4).unwrap()).unwrap();
        assert!(is_subfan(&b4, &p3).unwrap() && is_subfan(&p3, &b4).unwrap());
        assert!(balancing_check(&p3).unwrap());
        assert!(matches!(is_subfan(&u, &p3), Err(Error::DimensionMismatch(3, 4))));
    }

    #[test]
    fn flag_counts_match_enumeration() {
        for m in [Matroid::named("fano").unwrap(), Matroid::named("vamos").unwrap(), Matroid::uniform(3, 5).unwrap()] {
            let lattice = FlatsLattice::build(&m).unwrap();
            assert_eq!(flag_count(&lattice), bergman_fan(&m).unwrap().cones().len() as u128);
        }
    }

    #[test]
    fn rejects_non_matroid_input() {
        assert!(matches!(bergman_fan(&Matroid::uniform(0, 2).unwrap()), Err(Error::HasLoop(0))));
        let fan = Fan::from_flags(3, vec![vec![Subset::singleton(0), Subset::singleton(1)]]);
        assert!(matches!(balancing_check(&fan), Err(Error::NotAMatroidFan(_))));
    }
}
