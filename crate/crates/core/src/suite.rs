//! Report-producing checks, shared by the command-line tool and the corpus
//! run.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::chow::ChowRing;
use crate::corpus::{CorpusEntry, Fingerprint};
use crate::error::{Error, Result};
use crate::fan::{self, Fan};
use crate::hodge::{self, AmpleClass, HodgeRiemannCertificate, HodgeRiemannOutcome, SubmodularWitness};
use crate::invariants::{self, is_log_concave};
use crate::lattice::FlatsLattice;
use crate::matroid::{check_axioms, closure_is_closure_operator, Matroid, EXHAUSTIVE_LIMIT};
use crate::poly::IntPolynomial;
use crate::report::{bigs_json, Report};
use crate::subset::Subset;

/// Chow ring and Hodge checks in the corpus run are limited to `d <= 4`.
pub const CORPUS_TOP_DEGREE: usize = 4;
/// The Mason-Welsh comparison is run up to this ground-set size.
pub const CORPUS_MASON_WELSH: usize = 10;
/// Fans are balanced-checked up to this ground-set size.
pub const CORPUS_BALANCING: usize = 8;
/// Fans with more cones than this are replaced by their 2-skeleton.
pub const FULL_FAN_LIMIT: u128 = 200_000;

fn poly_json(p: &IntPolynomial) -> Value {
    bigs_json(&p.descending())
}

fn timed(name: &str, f: impl FnOnce() -> Result<Report>) -> Report {
    let start = Instant::now();
    Report::catch(name, f).timed(start.elapsed())
}

/// Matroid-level checks: axioms, lattice, polynomials and sequences.
pub fn invariants_report(m: &Matroid, expected: Option<&Fingerprint>, representable: bool) -> Report {
    let mut children = vec![
        timed("axioms", || axioms_section(m)),
        timed("char-poly", || char_poly_section(m, expected)),
        timed("tutte", || tutte_section(m)),
        timed("sequences", || sequences_section(m, representable)),
    ];
    if m.size() > EXHAUSTIVE_LIMIT {
        children = vec![Report::skip("invariants", format!("ground set of size {} exceeds {EXHAUSTIVE_LIMIT}", m.size()))];
    }
    Report::group("invariants", children)
}

fn axioms_section(m: &Matroid) -> Result<Report> {
    let axioms = check_axioms(m)?;
    let failures: Vec<Value> =
        axioms.failures.iter().map(|f| json!({"axiom": f.axiom, "witness": f.witness})).collect();
    let mut children = vec![
        Report::check("independence-closure-flats", axioms.passed(), Value::Array(failures)),
        Report::check("closure-operator", closure_is_closure_operator(m)?, Value::Null),
    ];
    if m.size() > 0 {
        let lattice = FlatsLattice::build(m)?;
        let weisner = lattice.weisner_failure();
        children.push(Report::check("weisner", weisner.is_none(), json!(weisner.map(|s| s.to_string()))));
        let rota = lattice.rota_sign_failure();
        children.push(Report::check(
            "rota-sign",
            rota.is_none(),
            json!(rota.map(|(x, y)| [x.to_string(), y.to_string()])),
        ));
        let geometric = lattice.check_graded() && lattice.check_semimodular() && lattice.check_atomic();
        children.push(Report::check("geometric-lattice", geometric, json!({"flats": lattice.len()})));
    }
    Ok(Report::group("axioms", children))
}

fn char_poly_section(m: &Matroid, expected: Option<&Fingerprint>) -> Result<Report> {
    let flats = invariants::char_poly_flats(m)?;
    let subsets = invariants::char_poly_subsets(m)?;
    let delcon = invariants::char_poly_delcon(m);
    let agree = flats == subsets && subsets == delcon;
    let witness = if agree {
        poly_json(&flats)
    } else {
        json!({"flats": poly_json(&flats), "subsets": poly_json(&subsets), "deletion-contraction": poly_json(&delcon)})
    };
    let mut children = vec![Report::check("three-routes", agree, witness)];
    if let Some(coeffs) = expected.and_then(|e| e.char_poly.as_ref()) {
        let pinned = IntPolynomial::from_i64(coeffs);
        children.push(Report::check("pinned", pinned == flats, json!({"expected": poly_json(&pinned)})));
    }
    Ok(Report::group("char-poly", children))
}

fn tutte_section(m: &Matroid) -> Result<Report> {
    let t = invariants::tutte(m)?;
    let dual = invariants::tutte(&m.dual())?;
    let duality = t.swap_variables() == dual;
    let chi = invariants::char_poly_subsets(m)?;
    let sign = if m.rank().is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let specialised = t.specialize_y(&BigInt::from(0)).compose_one_minus_t().scale(&sign);
    // T(2, 2) = 2^|E|
    let total = t.eval(&BigInt::from(2), &BigInt::from(2)) == BigInt::from(2).pow(m.size() as u32);
    Ok(Report::group(
        "tutte",
        vec![
            Report::check("dual-swap", duality, Value::Null),
            Report::check("char-poly-specialisation", specialised == chi, poly_json(&specialised)),
            Report::check("subset-count", total, Value::Null),
            Report::check("nonnegative", t.all_nonnegative(), Value::Null),
        ],
    ))
}

fn sequences_section(m: &Matroid, representable: bool) -> Result<Report> {
    let f = invariants::f_vector(m);
    let mut children = vec![Report::check("f-vector-log-concave", is_log_concave(f.entries())?, bigs_json(f.entries()))];
    if m.size() <= CORPUS_MASON_WELSH {
        children.push(Report::check("mason-welsh", invariants::mason_welsh_check(m)?, Value::Null));
    } else {
        children.push(Report::skip("mason-welsh", format!("|E| = {} > {CORPUS_MASON_WELSH}", m.size())));
    }
    if !m.is_loopless() {
        children.push(Report::skip("whitney", "matroid has a loop, so χ = 0"));
        return Ok(Report::group("sequences", children));
    }
    let w = invariants::whitney_first(m)?;
    let abs: Vec<BigInt> = w.iter().map(Signed::abs).collect();
    children.push(Report::check("whitney-signs", invariants::whitney_signs_alternate(&w), bigs_json(&w)));
    children.push(Report::check("whitney-log-concave", is_log_concave(&abs)?, Value::Null));
    let seq = invariants::m_sequence(m)?;
    let bjorner = invariants::bjorner_sequence(&m.simplify().matroid)?;
    let agree = bjorner.len() == seq.len() + 1 && bjorner[..seq.len()] == seq[..];
    children.push(Report::check("m-sequence-flags", agree, json!({"m": bigs_json(&seq), "flags": bigs_json(&bjorner)})));
    children.push(Report::check("m-sequence-log-concave", is_log_concave(&seq)?, Value::Null));
    let hw = invariants::huh_wang_check(m)?;
    let w2 = json!(hw.whitney_second);
    if representable {
        children.push(Report::check("huh-wang", hw.holds(), w2));
    } else {
        let verdict = if hw.holds() { "holds" } else { "fails" };
        children.push(Report::skip("huh-wang", format!("not known representable; inequalities {verdict} on {w2}")));
    }
    Ok(Report::group("sequences", children))
}

/// Reason for skipping Chow-ring checks, if any.
pub fn chow_skip_reason(m: &Matroid, max_degree: Option<usize>) -> Option<String> {
    if m.size() == 0 {
        return Some("empty ground set".into());
    }
    if let Some(e) = m.loops().min() {
        return Some(format!("element {e} is a loop"));
    }
    let d = m.rank() - 1;
    match max_degree {
        Some(max) if d > max => Some(format!("top degree {d} exceeds {max}")),
        _ => None,
    }
}

/// Graded dimensions, Poincaré duality, the degree map and the m-sequence
/// through `deg(α^{d-k} β^k)`.
pub fn chow_report(m: &Matroid, expected: Option<&Fingerprint>, max_degree: Option<usize>) -> Report {
    if let Some(why) = chow_skip_reason(m, max_degree) {
        return Report::skip("chow", why);
    }
    let start = Instant::now();
    match ChowRing::build(m) {
        Ok(ring) => chow_checks(m, &ring, expected, start.elapsed()),
        Err(e) => Report::error("chow", &e),
    }
}

fn chow_checks(m: &Matroid, ring: &ChowRing, expected: Option<&Fingerprint>, build_time: Duration) -> Report {
    let build = Report::check("build", true, json!({"dims": ring.dims()})).timed(build_time);
    let children = vec![
        build,
        timed("poincare-duality", || poincare_section(ring, expected)),
        timed("degree-on-flags", || flags_degree_section(m, ring)),
        timed("m-sequence-triangle", || triangle_section(m, ring)),
    ];
    Report::group("chow", children)
}

fn poincare_section(ring: &ChowRing, expected: Option<&Fingerprint>) -> Result<Report> {
    let d = ring.top_degree();
    let dims = ring.dims();
    let symmetric = (0..=d).all(|k| dims[k] == dims[d - k]);
    let mut children = vec![Report::check("dims-symmetric", symmetric, json!(dims))];
    let mut ranks = Vec::new();
    let mut full = true;
    for k in 0..=d / 2 {
        let rank = ring.poincare_pairing(k)?.certified_rank();
        full &= rank == dims[k] && rank == dims[d - k];
        ranks.push(rank);
    }
    children.push(Report::check("pairing-full-rank", full, json!(ranks)));
    if let Some(pinned) = expected.and_then(|e| e.chow_dims.as_ref()) {
        children.push(Report::check("pinned-dims", *pinned == dims, json!(pinned)));
    }
    Ok(Report::group("poincare-duality", children))
}

/// Saturated chains `F_1 ⊊ … ⊊ F_d` of nonempty proper flats.
pub fn maximal_flags(lattice: &FlatsLattice) -> Vec<Vec<Subset>> {
    let d = lattice.rank().saturating_sub(1);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn walk(lattice: &FlatsLattice, i: usize, d: usize, stack: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
        stack.push(lattice.flat(i));
        if stack.len() == d {
            out.push(stack.clone());
        } else {
            for &j in lattice.up_covers(i) {
                walk(lattice, j, d, stack, out);
            }
        }
        stack.pop();
    }
    if d == 0 {
        return vec![Vec::new()];
    }
    for i in lattice.of_rank(1).collect::<Vec<_>>() {
        walk(lattice, i, d, &mut stack, &mut out);
    }
    out
}

fn flags_degree_section(m: &Matroid, ring: &ChowRing) -> Result<Report> {
    let lattice = FlatsLattice::build(m)?;
    let flags = maximal_flags(&lattice);
    for flag in &flags {
        let factors: Vec<(Subset, usize)> = flag.iter().map(|&f| (f, 1)).collect();
        let mono = ring.monomial(&factors).ok_or_else(|| Error::InvalidArgument("flag is not a chain".into()))?;
        let deg = ring.monomial_degree(&mono)?;
        if !deg.is_one() {
            let names: Vec<String> = flag.iter().map(ToString::to_string).collect();
            return Ok(Report::check("degree-on-flags", false, json!({"flag": names, "degree": deg.to_string()})));
        }
    }
    Ok(Report::check("degree-on-flags", true, json!({"flags": flags.len()})))
}

fn triangle_section(m: &Matroid, ring: &ChowRing) -> Result<Report> {
    let division = invariants::m_sequence(m)?;
    let flags = invariants::bjorner_sequence(&m.simplify().matroid)?;
    let d = ring.top_degree();
    let mut chow = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let v = ring.mk_via_chow(k)?;
        if !v.is_integer() {
            return Ok(Report::check("m-sequence-triangle", false, json!({"k": k, "chow": v.to_string()})));
        }
        chow.push(v.to_integer());
    }
    let ok = division.len() == d + 1 && flags[..=d] == division[..] && chow == division;
    Ok(Report::check(
        "m-sequence-triangle",
        ok,
        json!({"division": bigs_json(&division), "flags": bigs_json(&flags[..=d.min(flags.len() - 1)]), "chow": bigs_json(&chow)}),
    ))
}

/// Hard Lefschetz and Hodge-Riemann in degree `k` (all `k ≤ d/2` when
/// `None`), with the default ample class unless a witness is given.
pub fn hodge_report(
    m: &Matroid,
    k: Option<usize>,
    witness: Option<SubmodularWitness>,
    max_degree: Option<usize>,
) -> Report {
    if let Some(why) = chow_skip_reason(m, max_degree) {
        return Report::skip("hodge", why);
    }
    match ChowRing::build(m) {
        Ok(ring) => hodge_checks(&ring, k, witness),
        Err(e) => Report::error("hodge", &e),
    }
}

fn hodge_checks(ring: &ChowRing, k: Option<usize>, witness: Option<SubmodularWitness>) -> Report {
    Report::catch("hodge", || {
        let ell = match witness {
            Some(w) => AmpleClass::new(ring, w)?,
            None => hodge::default_ample(ring)?,
        };
        let d = ring.top_degree();
        let ks: Vec<usize> = match k {
            Some(k) => vec![k],
            None => (0..=d / 2).collect(),
        };
        let mut children = Vec::new();
        for k in ks {
            children.push(timed(&format!("hard-lefschetz-{k}"), || {
                let hl = hodge::hard_lefschetz(ring, &ell, k)?;
                Ok(Report::check(
                    format!("hard-lefschetz-{k}"),
                    hl.passed(),
                    json!({"source": hl.source_dim, "target": hl.target_dim, "rank": hl.rank}),
                ))
            }));
            children.push(timed(&format!("hodge-riemann-{k}"), || {
                let hr = hodge::hodge_riemann(ring, &ell, k)?;
                Ok(Report::check(format!("hodge-riemann-{k}"), hr.passed(), certificate_json(&hr)))
            }));
        }
        Ok(Report::group("hodge", children))
    })
}

fn certificate_json(hr: &HodgeRiemannOutcome) -> Value {
    match &hr.certificate {
        HodgeRiemannCertificate::Gram { pivots } => json!({
            "primitive_dim": hr.primitive_dim,
            "method": "gram",
            "min_pivot": pivots.iter().min().map(ToString::to_string),
        }),
        HodgeRiemannCertificate::Signature { form, lower, lefschetz_rank } => json!({
            "primitive_dim": hr.primitive_dim,
            "method": "signature",
            "form": [form.positive, form.negative, form.zero],
            "lower": [lower.positive, lower.negative, lower.zero],
            "lefschetz_rank": lefschetz_rank,
        }),
    }
}

/// The full fan when it is small enough, otherwise its 2-skeleton.
pub fn fan_for_checks(m: &Matroid) -> Result<(Fan, bool)> {
    let lattice = FlatsLattice::build(m)?;
    if fan::flag_count(&lattice) <= FULL_FAN_LIMIT {
        Ok((fan::bergman_fan(m)?, true))
    } else {
        Ok((fan::bergman_skeleton(m, 2)?, false))
    }
}

/// Balancing and containment in the permutohedral fan.
pub fn fan_report(m: &Matroid) -> Report {
    if let Some(why) = chow_skip_reason(m, None) {
        return Report::skip("fan", why);
    }
    Report::catch("fan", || {
        let start = Instant::now();
        let (fan, full) = fan_for_checks(m)?;
        let shape = Report::check(
            "shape",
            true,
            json!({"f_vector": fan.f_vector(), "complete": full, "ambient_dim": fan.ambient_dim()}),
        )
        .timed(start.elapsed());
        let balancing = if !full {
            Report::skip("balancing", "only the 2-skeleton was built")
        } else if m.size() > CORPUS_BALANCING {
            Report::skip("balancing", format!("|E| = {} > {CORPUS_BALANCING}", m.size()))
        } else {
            timed("balancing", || {
                let failure = fan::balancing_failure(&fan)?;
                Ok(Report::check(
                    "balancing",
                    failure.is_none(),
                    json!(failure.map(|f| f.iter().map(ToString::to_string).collect::<Vec<_>>())),
                ))
            })
        };
        let subfan = timed("permutohedral-subfan", || {
            if m.size() >= 2 && m.size() <= fan::PERMUTOHEDRAL_LIMIT {
                let outer = fan::permutohedral_fan(m.size() - 1)?;
                Ok(Report::check("permutohedral-subfan", fan::is_subfan(&fan, &outer)?, json!("explicit")))
            } else {
                Ok(Report::check("permutohedral-subfan", fan::is_in_permutohedral_fan(&fan), json!("structural")))
            }
        });
        Ok(Report::group("fan", vec![shape, balancing, subfan]))
    })
}

/// Every check on one corpus entry.
pub fn entry_report(entry: &CorpusEntry) -> Report {
    let start = Instant::now();
    let m = match entry.build() {
        Ok(m) => m,
        Err(e) => return Report::error(&entry.name, &e),
    };
    let expected = entry.expected.as_ref();
    let mut children = vec![invariants_report(&m, expected, entry.representable)];
    if let Some(why) = chow_skip_reason(&m, Some(CORPUS_TOP_DEGREE)) {
        children.push(Report::skip("chow", why.clone()));
        children.push(Report::skip("hodge", why));
    } else {
        let built = Instant::now();
        match ChowRing::build(&m) {
            Ok(ring) => {
                children.push(chow_checks(&m, &ring, expected, built.elapsed()));
                children.push(hodge_checks(&ring, None, None));
            }
            Err(e) => {
                children.push(Report::error("chow", &e));
                children.push(Report::error("hodge", &e));
            }
        }
    }
    children.push(fan_report(&m));
    Report::group(&entry.name, children).timed(start.elapsed())
}

/// All checks over the corpus entries whose names contain `filter`, in
/// corpus order.
pub fn verify_all(entries: &[CorpusEntry]) -> Report {
    let start = Instant::now();
    let children: Vec<Report> = entries.par_iter().map(entry_report).collect();
    Report::group("verify-all", children).timed(start.elapsed())
}
