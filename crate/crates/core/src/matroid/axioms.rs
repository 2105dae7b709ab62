//! Exhaustive verification of the independence (I1-I3), closure (S1-S4) and
//! flat (F1-F3) axiom systems on a concrete family.

use super::{Matroid, RankTable, EXHAUSTIVE_LIMIT};
use crate::error::{Error, Result};
use crate::subset::{all_subsets, k_subsets, subsets_of, Subset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub witness: String,
}

/// Outcome of [`check_axioms`]. Each axiom system reports at most one
/// failure: its first counterexample.
#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub checked: Vec<&'static str>,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failure(&self, axiom: &str) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }
}

pub fn check_axioms(m: &Matroid) -> Result<AxiomReport> {
    check_axioms_raw(m.size(), m.bases())
}

/// Check all three axiom systems for the structure generated by an
/// arbitrary family of "bases" (independent sets = subsets of members).
pub fn check_axioms_raw(size: usize, family: &[Subset]) -> Result<AxiomReport> {
    if size > EXHAUSTIVE_LIMIT {
        return Err(Error::GroundSetTooLarge { size, limit: EXHAUSTIVE_LIMIT });
    }
    if family.is_empty() {
        return Err(Error::EmptyBases);
    }
    let table = RankTable::from_family(size, family)?;
    let mut report = AxiomReport::default();
    let record = |report: &mut AxiomReport, names: &[&'static str], failure: Option<AxiomFailure>| {
        report.checked.extend_from_slice(names);
        report.failures.extend(failure);
    };
    let f = independence_failure(size, &table);
    record(&mut report, &["I1", "I2", "I3"], f);
    let f = closure_failure(size, &table);
    record(&mut report, &["S1", "S2", "S3", "S4"], f);
    let f = flat_failure(size, &table);
    record(&mut report, &["F1", "F2", "F3"], f);
    Ok(report)
}

fn independence_failure(size: usize, table: &RankTable) -> Option<AxiomFailure> {
    let full = Subset::full(size);
    if !table.is_independent(Subset::EMPTY) {
        return Some(AxiomFailure { axiom: "I1", witness: "empty set is dependent".into() });
    }
    for i in all_subsets(size).filter(|&i| table.is_independent(i)) {
        if let Some(x) = i.iter().find(|&x| !table.is_independent(i.without(x))) {
            return Some(AxiomFailure { axiom: "I2", witness: format!("{i} independent but {} is not", i.without(x)) });
        }
        // I3: any larger independent J avoiding the one-element extensions of I
        // must fit inside the complement of those extensions.
        let extensions = (full - i).iter().filter(|&y| table.is_independent(i.with(y))).fold(Subset::EMPTY, Subset::with);
        let blocked = full - extensions;
        if table.rank(blocked) > i.len() {
            let j = k_subsets(size, i.len() + 1)
                .find(|&j| j.is_subset_of(blocked) && table.is_independent(j))
                .expect("rank of blocked region exceeds |I|");
            return Some(AxiomFailure {
                axiom: "I3",
                witness: format!("I = {i}, J = {j}: no y in J \\ I keeps I + y independent"),
            });
        }
    }
    None
}

fn closure_failure(size: usize, table: &RankTable) -> Option<AxiomFailure> {
    let fail = |axiom, witness: String| Some(AxiomFailure { axiom, witness });
    for x in all_subsets(size) {
        let cx = table.closure(x);
        if !x.is_subset_of(cx) {
            return fail("S1", format!("X = {x}, cl(X) = {cx}"));
        }
        if table.closure(cx) != cx {
            return fail("S3", format!("X = {x}"));
        }
        for e in (Subset::full(size) - x).iter() {
            let cxe = table.closure(x.with(e));
            if !cx.is_subset_of(cxe) {
                return fail("S2", format!("cl({x}) not inside cl({})", x.with(e)));
            }
            for y in (cxe - cx).iter() {
                if !table.closure(x.with(y)).contains(e) {
                    return fail("S4", format!("X = {x}, x = {e}, y = {y}"));
                }
            }
        }
    }
    None
}

fn flat_failure(size: usize, table: &RankTable) -> Option<AxiomFailure> {
    let fail = |axiom, witness: String| Some(AxiomFailure { axiom, witness });
    let full = Subset::full(size);
    let mut is_flat = vec![false; 1usize << size];
    let mut flats = Vec::new();
    for x in all_subsets(size) {
        if table.closure(x) == x {
            is_flat[x.bits() as usize] = true;
            flats.push(x);
        }
    }
    if !is_flat[full.bits() as usize] {
        return fail("F1", "E is not a flat".into());
    }
    for (i, &a) in flats.iter().enumerate() {
        if let Some(&b) = flats[i + 1..].iter().find(|&&b| !is_flat[(a & b).bits() as usize]) {
            return fail("F2", format!("{a} ∩ {b} is not a flat"));
        }
    }
    for &f in &flats {
        // least flat above f containing x, as an intersection of flats
        let above: Vec<Subset> = flats.iter().copied().filter(|&g| f.is_proper_subset_of(g)).collect();
        let least: Vec<Subset> = (full - f)
            .iter()
            .map(|x| above.iter().filter(|g| g.contains(x)).fold(full, |acc, &g| acc & g))
            .collect();
        let mut covers: Vec<Subset> =
            least.iter().copied().filter(|&g| !least.iter().any(|&h| h.is_proper_subset_of(g))).collect();
        covers.sort_unstable();
        covers.dedup();
        let mut seen = Subset::EMPTY;
        for &g in &covers {
            let part = g - f;
            if !(part & seen).is_empty() {
                return fail("F3", format!("covers of {f} overlap outside it"));
            }
            seen = seen | part;
        }
        if seen != full - f {
            return fail("F3", format!("covers of {f} miss {}", (full - f) - seen));
        }
    }
    None
}

/// Rebuild the bases from the closure operator alone: `I` is independent iff
/// no `x ∈ I` lies in `cl(I - x)`.
pub fn bases_from_closure(m: &Matroid) -> Result<Vec<Subset>> {
    let table = m.rank_table()?;
    let independent = |i: Subset| i.iter().all(|x| !table.closure(i.without(x)).contains(x));
    let indep: Vec<Subset> = all_subsets(m.size()).filter(|&i| independent(i)).collect();
    let max = indep.iter().map(|i| i.len()).max().unwrap_or(0);
    let mut bases: Vec<Subset> = indep.into_iter().filter(|i| i.len() == max).collect();
    bases.sort_unstable();
    Ok(bases)
}

/// Exhaustive check that `cl` is extensive, monotone on all pairs and idempotent.
pub fn closure_is_closure_operator(m: &Matroid) -> Result<bool> {
    let table = m.rank_table()?;
    for x in all_subsets(m.size()) {
        let cx = table.closure(x);
        if !x.is_subset_of(cx) || table.closure(cx) != cx {
            return Ok(false);
        }
        if !subsets_of(x).all(|y| table.closure(y).is_subset_of(cx)) {
            return Ok(false);
        }
    }
    Ok(true)
}
