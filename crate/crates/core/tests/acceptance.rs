//! End-to-end acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hodge_matroid::chow::ChowRing;
use hodge_matroid::corpus::{self, CorpusEntry};
use hodge_matroid::fan::{self, PERMUTOHEDRAL_LIMIT};
use hodge_matroid::hodge::{self, default_ample};
use hodge_matroid::invariants::{self, is_log_concave, is_unimodal};
use hodge_matroid::matroid::{check_axioms, complete_graph, fano_matrix, petersen_graph, FpMatrix};
use hodge_matroid::suite::{fan_for_checks, maximal_flags};
use hodge_matroid::{FlatsLattice, IntPolynomial, Matroid, Subset};
use num_bigint::BigInt;
use num_traits::{One, Zero};

const LIMIT_PETERSEN: Duration = Duration::from_secs(5);
const LIMIT_THREE_ROUTES: Duration = Duration::from_secs(60);
const LIMIT_CHOW: Duration = Duration::from_secs(5 * 60);
const LIMIT_HODGE: Duration = Duration::from_secs(10 * 60);

const MAX_TOP_DEGREE: usize = 4;
const MASON_WELSH_MAX: usize = 10;
const BALANCING_MAX: usize = 8;

type Check = Result<String, String>;

struct Entry {
    name: String,
    representable: bool,
    m: Matroid,
}

struct Ring {
    name: String,
    m: Matroid,
    ring: ChowRing,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(ctx: &str) -> impl Fn(E) -> String + '_ {
    move |e| format!("{ctx}: {e}")
}

fn report(id: usize, title: &str, limit: Option<Duration>, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let result = match (result, limit) {
        (Ok(_), Some(l)) if elapsed > l => Err(format!("took {:.2}s, limit {}s", elapsed.as_secs_f64(), l.as_secs())),
        (r, _) => r,
    };
    let time = match limit {
        Some(l) => format!("{:.2}s / {}s", elapsed.as_secs_f64(), l.as_secs()),
        None => format!("{:.2}s", elapsed.as_secs_f64()),
    };
    let (label, detail) = match &result {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    println!("{label} {id:>2} {title} [{time}] {detail}");
    result.is_ok()
}

fn petersen() -> Check {
    let (v, edges) = petersen_graph();
    let p = invariants::chromatic_polynomial(v, &edges).map_err(err("chromatic"))?;
    let expected =
        IntPolynomial::from_descending(&[1, -15, 105, -455, 1353, -2861, 4275, -4305, 2606, -704, 0]);
    ensure(p == expected, || format!("got {:?}", p.descending()))?;
    let abs = p.abs_descending();
    ensure(is_log_concave(&abs).map_err(err("log-concave"))?, || "not log-concave".into())?;
    ensure(is_unimodal(&abs).map_err(err("unimodal"))?, || "not unimodal".into())?;
    Ok("exact coefficients, |coefficients| log-concave and unimodal".into())
}

fn three_routes(entries: &[Entry]) -> Check {
    for e in entries {
        let a = invariants::char_poly_flats(&e.m).map_err(err(&e.name))?;
        let b = invariants::char_poly_subsets(&e.m).map_err(err(&e.name))?;
        let c = invariants::char_poly_delcon(&e.m);
        ensure(a == b && b == c, || format!("{}: routes disagree", e.name))?;
    }
    Ok(format!("{} matroids", entries.len()))
}

fn stirling() -> Check {
    let s1 = common::stirling_first(6);
    let s2 = common::stirling_second(6);
    for n in 2..=6 {
        let (v, edges) = complete_graph(n);
        let m = Matroid::from_graph(v, &edges).map_err(err("K_n"))?;
        let w = invariants::whitney_first(&m).map_err(err("whitney"))?;
        let big_w = invariants::whitney_second(&m).map_err(err("whitney"))?;
        ensure(w.len() == n && big_w.len() == n, || format!("K{n}: rank is not {}", n - 1))?;
        for k in 0..n {
            ensure(w[k] == s1[n][n - k], || format!("K{n}: w_{k} = {} vs s = {}", w[k], s1[n][n - k]))?;
            ensure(BigInt::from(big_w[k]) == s2[n][n - k], || format!("K{n}: W_{k} = {} vs S = {}", big_w[k], s2[n][n - k]))?;
        }
    }
    Ok("w_k = s(n, n-k) and W_k = S(n, n-k) for n = 2..6".into())
}

fn f_vectors(entries: &[Entry]) -> Check {
    let pg = Matroid::from_matrix(&fano_matrix()).map_err(err("PG(2,2)"))?;
    let f = invariants::f_vector(&pg);
    let expected: Vec<BigInt> = [1, 7, 21, 28].into_iter().map(BigInt::from).collect();
    ensure(f.entries() == expected.as_slice(), || format!("F_2^3 minus 0: {:?}", f.entries()))?;
    let mut mason = 0;
    for e in entries {
        let f = invariants::f_vector(&e.m);
        ensure(is_log_concave(f.entries()).map_err(err(&e.name))?, || format!("{}: f-vector not log-concave", e.name))?;
        if e.m.size() <= MASON_WELSH_MAX {
            ensure(invariants::mason_welsh_check(&e.m).map_err(err(&e.name))?, || format!("{}: Mason-Welsh", e.name))?;
            mason += 1;
        }
    }
    Ok(format!("(1,7,21,28); Mason-Welsh on {mason}; log-concave on {}", entries.len()))
}

fn tutte(entries: &[Entry]) -> Check {
    for e in entries {
        let t = invariants::tutte(&e.m).map_err(err(&e.name))?;
        let td = invariants::tutte(&e.m.dual()).map_err(err(&e.name))?;
        ensure(t.swap_variables() == td, || format!("{}: T_M(x,y) != T_M*(y,x)", e.name))?;
        let sign = if e.m.rank().is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        let specialised = t.specialize_y(&BigInt::zero()).compose_one_minus_t().scale(&sign);
        let chi = invariants::char_poly_flats(&e.m).map_err(err(&e.name))?;
        ensure(specialised == chi, || format!("{}: (-1)^r T(1-t, 0) != chi", e.name))?;
    }
    Ok(format!("{} matroids", entries.len()))
}

fn chow(rings: &mut Vec<Ring>, entries: &[Entry]) -> Check {
    for e in entries {
        if e.m.size() == 0 || !e.m.is_loopless() || e.m.rank() - 1 > MAX_TOP_DEGREE {
            continue;
        }
        let ring = ChowRing::build(&e.m).map_err(err(&e.name))?;
        let d = ring.top_degree();
        let dims = ring.dims();
        ensure((0..=d).all(|k| dims[k] == dims[d - k]), || format!("{}: dims {dims:?}", e.name))?;
        for k in 0..=d {
            let rank = ring.poincare_pairing(k).map_err(err(&e.name))?.certified_rank();
            ensure(rank == dims[k], || format!("{}: pairing in degree {k} has rank {rank} < {}", e.name, dims[k]))?;
        }
        let lattice = FlatsLattice::build(&e.m).map_err(err(&e.name))?;
        for flag in maximal_flags(&lattice) {
            let factors: Vec<(Subset, usize)> = flag.iter().map(|&f| (f, 1)).collect();
            let mono = ring.monomial(&factors).ok_or_else(|| format!("{}: flag is not a chain", e.name))?;
            let deg = ring.monomial_degree(&mono).map_err(err(&e.name))?;
            ensure(deg.is_one(), || format!("{}: flag degree {deg}", e.name))?;
        }
        rings.push(Ring { name: e.name.clone(), m: e.m.clone(), ring });
    }
    let u33 = rings.iter().find(|r| r.name == "U3,3").ok_or("U3,3 missing")?;
    let brute = common::chow_dims_brute_force(&u33.m);
    let euler = common::eulerian(3);
    ensure(u33.ring.dims() == [1, 4, 1], || format!("U3,3 dims {:?}", u33.ring.dims()))?;
    ensure(brute == [1, 4, 1, 0], || format!("U3,3 brute force {brute:?}"))?;
    ensure(euler == [1, 4, 1], || format!("Eulerian {euler:?}"))?;
    Ok(format!("{} rings; U3,3 = (1,4,1) by basis, brute force and Eulerian numbers", rings.len()))
}

fn triangle(rings: &[Ring]) -> Check {
    for r in rings {
        let division = invariants::m_sequence(&r.m).map_err(err(&r.name))?;
        let flags = invariants::bjorner_sequence(&r.m.simplify().matroid).map_err(err(&r.name))?;
        let d = r.ring.top_degree();
        ensure(division.len() == d + 1, || format!("{}: m-sequence length", r.name))?;
        for k in 0..=d {
            let chow = r.ring.mk_via_chow(k).map_err(err(&r.name))?;
            let agree = chow.is_integer() && chow.to_integer() == division[k] && flags[k] == division[k];
            ensure(agree, || format!("{}: m_{k} = {} / {} / {chow}", r.name, division[k], flags[k]))?;
        }
    }
    Ok(format!("{} matroids", rings.len()))
}

fn hodge(rings: &[Ring]) -> Check {
    let mut vamos = false;
    for r in rings {
        let ell = default_ample(&r.ring).map_err(err(&r.name))?;
        for k in 0..=r.ring.top_degree() / 2 {
            let hl = hodge::hard_lefschetz(&r.ring, &ell, k).map_err(err(&r.name))?;
            ensure(hl.passed(), || format!("{}: hard Lefschetz fails in degree {k}", r.name))?;
            let hr = hodge::hodge_riemann(&r.ring, &ell, k).map_err(err(&r.name))?;
            ensure(hr.passed(), || format!("{}: Hodge-Riemann fails in degree {k}", r.name))?;
        }
        if r.name == "vamos" {
            ensure(r.ring.top_degree() == 3, || "vamos: d != 3".into())?;
            let seq = invariants::m_sequence(&r.m).map_err(err("vamos"))?;
            ensure(is_log_concave(&seq).map_err(err("vamos"))?, || format!("vamos m-sequence {seq:?}"))?;
            vamos = true;
        }
    }
    ensure(vamos, || "vamos missing".into())?;
    Ok(format!("{} matroids, Vamos included and log-concave", rings.len()))
}

fn finite_fields() -> Check {
    let fano = invariants::finite_field_count(&fano_matrix()).map_err(err("fano"))?;
    ensure(fano.count.is_zero() && fano.chi_at_p.is_zero(), || format!("fano: {} vs {}", fano.count, fano.chi_at_p))?;
    let u22 = FpMatrix::new(3, vec![vec![1, 0], vec![0, 1]]).map_err(err("U2,2"))?;
    let u22 = invariants::finite_field_count(&u22).map_err(err("U2,2"))?;
    let four = BigInt::from(4);
    ensure(u22.count == four && u22.chi_at_p == four, || format!("U2,2: {} vs {}", u22.count, u22.chi_at_p))?;
    Ok("fano over F_2: 0 = chi(2); U2,2 over F_3: 4 = chi(3)".into())
}

fn fans(entries: &[Entry]) -> Check {
    let u23 = fan::bergman_fan(&Matroid::uniform(2, 3).map_err(err("U2,3"))?).map_err(err("U2,3"))?;
    let mut rays: Vec<Vec<i64>> = u23.ray_points().iter().map(|r| r.reduced().to_vec()).collect();
    rays.sort();
    ensure(rays == [vec![-1, -1], vec![0, 1], vec![1, 0]], || format!("U2,3 rays {rays:?}"))?;
    let (mut balanced, mut explicit, mut structural) = (0, 0, 0);
    for e in entries {
        if e.m.size() == 0 || !e.m.is_loopless() {
            continue;
        }
        let (fan, full) = fan_for_checks(&e.m).map_err(err(&e.name))?;
        if e.m.size() <= BALANCING_MAX {
            ensure(full, || format!("{}: full fan not built", e.name))?;
            ensure(fan::balancing_check(&fan).map_err(err(&e.name))?, || format!("{}: unbalanced", e.name))?;
            balanced += 1;
        }
        if (2..=PERMUTOHEDRAL_LIMIT).contains(&e.m.size()) {
            let outer = fan::permutohedral_fan(e.m.size() - 1).map_err(err(&e.name))?;
            ensure(fan::is_subfan(&fan, &outer).map_err(err(&e.name))?, || format!("{}: not a subfan", e.name))?;
            explicit += 1;
        } else {
            ensure(fan::is_in_permutohedral_fan(&fan), || format!("{}: not a subfan", e.name))?;
            structural += 1;
        }
    }
    Ok(format!("U2,3 rays exact; {balanced} balanced; subfan {explicit} explicit + {structural} structural"))
}

fn axioms(entries: &[Entry]) -> Check {
    let mut hw = 0;
    for e in entries {
        let a = check_axioms(&e.m).map_err(err(&e.name))?;
        ensure(a.passed(), || format!("{}: axiom failures {:?}", e.name, a.failures))?;
        let lattice = FlatsLattice::build(&e.m).map_err(err(&e.name))?;
        ensure(lattice.check_weisner(), || format!("{}: Weisner", e.name))?;
        ensure(lattice.check_rota_sign(), || format!("{}: Rota sign", e.name))?;
        if e.representable {
            let r = invariants::huh_wang_check(&e.m).map_err(err(&e.name))?;
            ensure(r.holds(), || format!("{}: Huh-Wang on {:?}", e.name, r.whitney_second))?;
            hw += 1;
        }
    }
    Ok(format!("{} matroids; Huh-Wang on {hw} representable", entries.len()))
}

fn load(corpus: Vec<CorpusEntry>) -> Result<Vec<Entry>, String> {
    corpus
        .into_iter()
        .map(|c| {
            let m = c.build().map_err(err(&c.name))?;
            Ok(Entry { name: c.name, representable: c.representable, m })
        })
        .collect()
}

fn main() -> ExitCode {
    let entries = match load(corpus::corpus()) {
        Ok(e) => e,
        Err(e) => {
            println!("FAIL corpus does not build: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut rings = Vec::new();
    let results = [
        report(1, "Petersen chromatic polynomial", Some(LIMIT_PETERSEN), petersen),
        report(2, "three-route characteristic polynomial", Some(LIMIT_THREE_ROUTES), || three_routes(&entries)),
        report(3, "Stirling identities for K_n", None, stirling),
        report(4, "f-vectors and Mason-Welsh", None, || f_vectors(&entries)),
        report(5, "Tutte identities", None, || tutte(&entries)),
        report(6, "Chow ring duality and degree", Some(LIMIT_CHOW), || chow(&mut rings, &entries)),
        report(7, "m-sequence triangle", None, || triangle(&rings)),
        report(8, "hard Lefschetz and Hodge-Riemann", Some(LIMIT_HODGE), || hodge(&rings)),
        report(9, "finite-field point counts", None, finite_fields),
        report(10, "Bergman fans", None, || fans(&entries)),
        report(11, "axioms, lattices and Huh-Wang", None, || axioms(&entries)),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
