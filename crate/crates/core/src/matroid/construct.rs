//! Constructors: uniform, graphic, linear over a prime field, and a few
//! named matroids.

use serde::{Deserialize, Serialize};

use super::{uniform_bases, Matroid};
use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_ELEMENTS};

/// Names accepted by [`Matroid::named`]; the last two are patterns.
pub const NAMED_MATROIDS: &[&str] = &["fano", "vamos", "petersen-graphic", "uniform-R-M", "boolean-N"];

/// A matrix over the prime field `F_p`; column `j` is ground-set element `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpMatrix {
    pub prime: u64,
    pub rows: Vec<Vec<u64>>,
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime
    let mut result = 1u128;
    let mut base = a as u128 % p as u128;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        exp >>= 1;
    }
    result as u64
}

impl FpMatrix {
    pub fn new(prime: u64, rows: Vec<Vec<u64>>) -> Result<FpMatrix> {
        if !is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::RaggedMatrix);
        }
        let rows = rows.into_iter().map(|r| r.into_iter().map(|x| x % prime).collect()).collect();
        Ok(FpMatrix { prime, rows })
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// Reduced row echelon form, returning the nonzero rows (a basis of the row space).
    pub fn row_space_basis(&self) -> Vec<Vec<u64>> {
        let p = self.prime;
        let mut m = self.rows.clone();
        let cols = self.num_cols();
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
            m.swap(rank, piv);
            let inv = inv_mod(m[rank][c], p);
            for x in m[rank].iter_mut() {
                *x = *x * inv % p;
            }
            for i in 0..m.len() {
                if i != rank && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        m[i][j] = (m[i][j] + (p - f) * m[rank][j] % p) % p;
                    }
                }
            }
            rank += 1;
        }
        m.truncate(rank);
        m
    }

    /// Are the given columns linearly independent over `F_p`?
    pub fn columns_independent(&self, cols: Subset) -> bool {
        let p = self.prime;
        let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
        for j in cols.iter() {
            let mut v = self.column(j);
            for (pc, b) in &basis {
                if v[*pc] != 0 {
                    let f = v[*pc];
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = (*x + (p - f) * y % p) % p;
                    }
                }
            }
            match v.iter().position(|&x| x != 0) {
                None => return false,
                Some(pc) => {
                    let inv = inv_mod(v[pc], p);
                    for x in v.iter_mut() {
                        *x = *x * inv % p;
                    }
                    basis.push((pc, v));
                }
            }
        }
        true
    }
}

impl Matroid {
    /// `U_{r,m}`: every `r`-subset of `{0..m-1}` is a basis.
    pub fn uniform(rank: usize, size: usize) -> Result<Matroid> {
        if rank > size {
            return Err(Error::InvalidRank { rank, size });
        }
        if size == 0 || size > MAX_ELEMENTS - 1 {
            return Err(Error::InvalidArgument(format!("uniform matroid size {size} out of range")));
        }
        Ok(Matroid::from_bases_unchecked(size, uniform_bases(rank, size)))
    }

    /// Cycle matroid of a multigraph; edge `i` is element `i`. Loops and
    /// parallel edges are allowed.
    pub fn from_graph(num_vertices: usize, edges: &[(usize, usize)]) -> Result<Matroid> {
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= num_vertices {
                    return Err(Error::BadVertexIndex { vertex: w, num_vertices });
                }
            }
        }
        if edges.len() > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge { size: edges.len(), limit: MAX_ELEMENTS });
        }
        let components = count_components(num_vertices, edges);
        let rank = num_vertices - components;
        Ok(Matroid::from_independence_oracle(edges.len(), rank, |set| is_forest(num_vertices, edges, set)))
    }

    /// Column matroid of a matrix over `F_p`.
    pub fn from_matrix(matrix: &FpMatrix) -> Result<Matroid> {
        let size = matrix.num_cols();
        if size > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge { size, limit: MAX_ELEMENTS });
        }
        let rank = matrix.row_space_basis().len();
        Ok(Matroid::from_independence_oracle(size, rank, |set| matrix.columns_independent(set)))
    }

    /// Hard-coded constructions: `fano`, `vamos`, `petersen-graphic`,
    /// `uniform-R-M`, `boolean-N`.
    pub fn named(name: &str) -> Result<Matroid> {
        let unknown = || Error::UnknownName(name.to_string());
        match name {
            "fano" => Matroid::from_matrix(&fano_matrix()),
            "vamos" => Ok(vamos()),
            "petersen-graphic" => {
                let (n, edges) = petersen_graph();
                Matroid::from_graph(n, &edges)
            }
            _ => {
                if let Some(rest) = name.strip_prefix("uniform-") {
                    let (r, m) = rest.split_once('-').ok_or_else(unknown)?;
                    let r = r.parse().map_err(|_| unknown())?;
                    let m = m.parse().map_err(|_| unknown())?;
                    Matroid::uniform(r, m)
                } else if let Some(n) = name.strip_prefix("boolean-") {
                    let n = n.parse().map_err(|_| unknown())?;
                    Matroid::uniform(n, n)
                } else {
                    Err(unknown())
                }
            }
        }
    }
}

/// The 3x7 matrix over `F_2` whose column `j` is the binary expansion of `j+1`.
pub fn fano_matrix() -> FpMatrix {
    let rows = (0..3).map(|bit| (1..=7u64).map(|c| c >> bit & 1).collect()).collect();
    FpMatrix::new(2, rows).expect("2 is prime")
}

/// Rank-4 matroid on 8 elements: all 4-sets are bases except five of the six
/// unions of two of the pairs {0,1},{2,3},{4,5},{6,7} ({4,5,6,7} stays a basis).
fn vamos() -> Matroid {
    let pair = |i: usize| Subset::from_elements([2 * i, 2 * i + 1]);
    let faces = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)].map(|(a, b)| pair(a) | pair(b));
    let bases = uniform_bases(4, 8).into_iter().filter(|b| !faces.contains(b)).collect();
    Matroid::from_bases_unchecked(8, bases)
}

/// Petersen graph: outer 5-cycle, spokes, inner pentagram.
pub fn petersen_graph() -> (usize, Vec<(usize, usize)>) {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    (10, edges)
}

/// Complete graph `K_n` with edges in lexicographic order.
pub fn complete_graph(n: usize) -> (usize, Vec<(usize, usize)>) {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (n, edges)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub(crate) fn count_components(num_vertices: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..num_vertices).collect();
    let mut comps = num_vertices;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps
}

fn is_forest(num_vertices: usize, edges: &[(usize, usize)], set: Subset) -> bool {
    let mut parent: Vec<usize> = (0..num_vertices).collect();
    for i in set.iter() {
        let (u, v) = edges[i];
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}
