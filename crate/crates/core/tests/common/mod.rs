//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use hodge_matroid::linalg::QMatrix;
use hodge_matroid::{FlatsLattice, Matroid, Rational, Subset};
use num_bigint::BigInt;

/// Signed Stirling numbers of the first kind, `x(x-1)...(x-n+1) = Σ s(n,k) x^k`.
pub fn stirling_first(n: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::from(0); n + 1]; n + 1];
    s[0][0] = BigInt::from(1);
    for i in 0..n {
        for k in 1..=i + 1 {
            s[i + 1][k] = &s[i][k - 1] - BigInt::from(i) * &s[i][k];
        }
    }
    s
}

/// Stirling numbers of the second kind.
pub fn stirling_second(n: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::from(0); n + 1]; n + 1];
    s[0][0] = BigInt::from(1);
    for i in 0..n {
        for k in 1..=i + 1 {
            s[i + 1][k] = BigInt::from(k) * &s[i][k] + &s[i][k - 1];
        }
    }
    s
}

/// Eulerian numbers `A(n, k)`, `k = 0..n`.
pub fn eulerian(n: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for m in 2..=n as u64 {
        let prev = row.clone();
        row = (0..m as usize)
            .map(|k| {
                let a = prev.get(k).copied().unwrap_or(0) * (k as u64 + 1);
                let b = if k > 0 { prev.get(k - 1).copied().unwrap_or(0) * (m - k as u64) } else { 0 };
                a + b
            })
            .collect();
    }
    row
}

/// Proper colourings of a graph with `q` colours, by enumeration.
pub fn count_colourings(vertices: usize, edges: &[(usize, usize)], q: usize) -> u64 {
    let mut colour = vec![0usize; vertices];
    fn go(v: usize, colour: &mut [usize], edges: &[(usize, usize)], q: usize) -> u64 {
        if v == colour.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..q {
            let clash = edges.iter().any(|&(a, b)| (a == v && b < v && colour[b] == c) || (b == v && a < v && colour[a] == c));
            if !clash {
                colour[v] = c;
                total += go(v + 1, colour, edges, q);
            }
        }
        total
    }
    if vertices == 0 {
        return 1;
    }
    go(0, &mut colour, edges, q)
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn merged(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v
}

/// Graded dimensions of the Chow ring computed in the full polynomial ring
/// `Q[x_F]`: all monomials of degree `k` modulo the degree-`k` part of the
/// ideal generated by the linear relations and the incomparable products.
/// Runs up to degree `r(M)`, which must come out zero.
pub fn chow_dims_brute_force(m: &Matroid) -> Vec<usize> {
    let lattice = FlatsLattice::build(m).unwrap();
    let (bottom, top) = (lattice.flat(lattice.bottom()), lattice.flat(lattice.top()));
    let flats: Vec<Subset> = lattice.flats().iter().copied().filter(|&f| f != bottom && f != top).collect();
    let n = flats.len();
    let mut linear: Vec<Vec<(usize, i64)>> = Vec::new();
    for b in 1..m.size() {
        let mut row = HashMap::new();
        for (i, f) in flats.iter().enumerate() {
            *row.entry(i).or_insert(0) += i64::from(f.contains(0)) - i64::from(f.contains(b));
        }
        linear.push(row.into_iter().filter(|&(_, c)| c != 0).collect());
    }
    let mut incomparable = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !flats[i].comparable(flats[j]) {
                incomparable.push(vec![i, j]);
            }
        }
    }
    let mut dims = Vec::new();
    for k in 0..=m.rank() {
        let monos = multisets(n, k);
        let index: HashMap<&Vec<usize>, usize> = monos.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        if k >= 1 {
            for lower in multisets(n, k - 1) {
                for rel in &linear {
                    let mut row = vec![Rational::from(0); monos.len()];
                    for &(i, c) in rel {
                        row[index[&merged(&lower, &[i])]] += &Rational::from(c);
                    }
                    rows.push(row);
                }
            }
        }
        if k >= 2 {
            for lower in multisets(n, k - 2) {
                for pair in &incomparable {
                    let mut row = vec![Rational::from(0); monos.len()];
                    row[index[&merged(&lower, pair)]] = Rational::from(1);
                    rows.push(row);
                }
            }
        }
        let rank = if rows.is_empty() { 0 } else { QMatrix::from_rows(monos.len(), rows).rank() };
        dims.push(monos.len() - rank);
    }
    dims
}
