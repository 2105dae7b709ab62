mod common;

use hodge_matroid::chow::ChowRing;
use hodge_matroid::hodge::{self, default_ample, AmpleClass};
use hodge_matroid::invariants::{self, chromatic_polynomial};
use hodge_matroid::matroid::{complete_graph, petersen_graph};
use hodge_matroid::subset::all_subsets;
use hodge_matroid::{FlatsLattice, Matroid, Rational};
use num_bigint::BigInt;

fn small_matroids() -> Vec<(&'static str, Matroid)> {
    let (v, e) = complete_graph(4);
    vec![
        ("U2,3", Matroid::uniform(2, 3).unwrap()),
        ("U2,5", Matroid::uniform(2, 5).unwrap()),
        ("U3,3", Matroid::uniform(3, 3).unwrap()),
        ("U3,4", Matroid::uniform(3, 4).unwrap()),
        ("U4,4", Matroid::uniform(4, 4).unwrap()),
        ("fano", Matroid::named("fano").unwrap()),
        ("K4", Matroid::from_graph(v, &e).unwrap()),
    ]
}

#[test]
fn chow_dims_match_full_polynomial_ring_quotient() {
    for (name, m) in small_matroids() {
        let ring = ChowRing::build(&m).unwrap();
        let mut dims = ring.dims();
        dims.push(0);
        assert_eq!(common::chow_dims_brute_force(&m), dims, "{name}");
    }
}

#[test]
fn boolean_chow_dims_are_eulerian_numbers() {
    for n in 1..=5 {
        let ring = ChowRing::build(&Matroid::uniform(n, n).unwrap()).unwrap();
        let expected: Vec<usize> = common::eulerian(n).into_iter().map(|x| x as usize).collect();
        assert_eq!(ring.dims(), expected, "n = {n}");
    }
    assert_eq!(common::eulerian(4), [1, 11, 11, 1]);
}

#[test]
fn stirling_numbers_are_whitney_numbers_of_complete_graphs() {
    let s1 = common::stirling_first(7);
    let s2 = common::stirling_second(7);
    assert_eq!(s1[4][2], BigInt::from(11));
    assert_eq!(s2[5][3], BigInt::from(25));
    for n in 2..=6 {
        let (v, e) = complete_graph(n);
        let m = Matroid::from_graph(v, &e).unwrap();
        let w = invariants::whitney_first(&m).unwrap();
        let big_w = invariants::whitney_second(&m).unwrap();
        for k in 0..n {
            assert_eq!(w[k], s1[n][n - k], "K{n} w_{k}");
            assert_eq!(BigInt::from(big_w[k]), s2[n][n - k], "K{n} W_{k}");
        }
    }
}

#[test]
fn chromatic_polynomial_counts_colourings() {
    let cycle: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let (pv, pe) = petersen_graph();
    let (kv, ke) = complete_graph(5);
    let graphs = [(5, cycle), (pv, pe), (kv, ke), (3, vec![(0, 1), (0, 1), (1, 2)])];
    for (v, edges) in graphs {
        let p = chromatic_polynomial(v, &edges).unwrap();
        for q in 0..=4 {
            assert_eq!(p.eval_i64(q as i64), BigInt::from(common::count_colourings(v, &edges, q)), "{edges:?} q={q}");
        }
    }
}

#[test]
fn dual_rank_formula() {
    for (name, m) in small_matroids() {
        let d = m.dual();
        let full = m.ground();
        for a in all_subsets(m.size()) {
            let expected = a.len() + m.rank_of(full - a) - m.rank();
            assert_eq!(d.rank_of(a), expected, "{name} {a}");
        }
    }
}

#[test]
fn mobius_inverts_zeta() {
    for (name, m) in small_matroids() {
        let l = FlatsLattice::build(&m).unwrap();
        for x in 0..l.len() {
            for z in 0..l.len() {
                let sum: BigInt = (0..l.len())
                    .filter(|&y| l.leq(x, y) && l.leq(y, z))
                    .map(|y| l.mobius(l.flat(x), l.flat(y)).unwrap())
                    .sum();
                assert_eq!(sum, BigInt::from(i32::from(x == z)), "{name}");
            }
        }
    }
}

#[test]
fn gram_and_signature_routes_agree_on_ample_classes() {
    for (name, m) in small_matroids() {
        let ring = ChowRing::build(&m).unwrap();
        let ell = default_ample(&ring).unwrap();
        for k in 0..=ring.top_degree() / 2 {
            let gram = hodge::hodge_riemann_gram(&ring, &ell, k).unwrap();
            let sig = hodge::hodge_riemann_signature(&ring, &ell, k).unwrap();
            assert!(gram.passed() && sig.passed(), "{name} k={k}");
            assert_eq!(gram.primitive_dim, sig.primitive_dim);
        }
    }
}

#[test]
fn negated_ample_class_fails_in_odd_top_degree() {
    let m = Matroid::uniform(4, 4).unwrap();
    let ring = ChowRing::build(&m).unwrap();
    let ell = default_ample(&ring).unwrap();
    let neg = AmpleClass { element: ell.element.scale(&Rational::from(-1)), witness: ell.witness.clone() };
    assert!(!hodge::hodge_riemann_gram(&ring, &neg, 0).unwrap().passed());
    assert!(!hodge::hodge_riemann_signature(&ring, &neg, 0).unwrap().passed());
    // -ℓ is still a Lefschetz element; only the sign of the form flips.
    assert!(hodge::hard_lefschetz(&ring, &neg, 1).unwrap().passed());
    assert!(!hodge::hodge_riemann_gram(&ring, &neg, 1).unwrap().passed());
    assert!(!hodge::hodge_riemann_signature(&ring, &neg, 1).unwrap().passed());
}

#[test]
fn zero_class_fails_hard_lefschetz() {
    let ring = ChowRing::build(&Matroid::named("fano").unwrap()).unwrap();
    let ell = default_ample(&ring).unwrap();
    let zero = AmpleClass { element: ring.zero(1), witness: ell.witness };
    assert!(!hodge::hard_lefschetz(&ring, &zero, 0).unwrap().passed());
    assert!(!hodge::hodge_riemann(&ring, &zero, 0).unwrap().passed());
}

#[test]
fn rota_welsh_through_hodge_riemann() {
    for (name, m) in small_matroids() {
        let r = hodge::rota_welsh_via_hr(&m).unwrap();
        assert!(r.passed(), "{name}: {r:?}");
    }
}
