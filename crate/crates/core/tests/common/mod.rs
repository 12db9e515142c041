//! Independent reference implementations used as test oracles.
//!
//! Nothing here calls into the library's homology, Takayama or profile code:
//! complexes are explicit face sets, localization is literal substitution,
//! and ranks come from rational or prime-field elimination written afresh.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serre_core::{Exponent, MonomialIdeal, SimplicialComplex, VarSet};

pub type Face = Vec<usize>;

/// A complex as an explicit set of faces; the void complex has none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Faces {
    pub n: usize,
    pub faces: BTreeSet<Face>,
}

impl Faces {
    pub fn closure(n: usize, facets: &[Face]) -> Self {
        let mut faces = BTreeSet::new();
        for facet in facets {
            for mask in 0u32..1 << facet.len() {
                let face: Face = (0..facet.len())
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| facet[k])
                    .collect();
                faces.insert(face);
            }
        }
        Faces { n, faces }
    }

    pub fn of(complex: &SimplicialComplex) -> Self {
        Faces {
            n: complex.n(),
            faces: complex.faces().iter().map(|f| f.to_vec()).collect(),
        }
    }

    pub fn facets(&self) -> Vec<Face> {
        self.faces
            .iter()
            .filter(|f| {
                !self
                    .faces
                    .iter()
                    .any(|g| g.len() == f.len() + 1 && f.iter().all(|v| g.contains(v)))
            })
            .cloned()
            .collect()
    }

    pub fn link(&self, face: &Face) -> Faces {
        let faces = self
            .faces
            .iter()
            .filter(|g| g.iter().all(|v| !face.contains(v)))
            .filter(|g| {
                let mut union: Face = g.iter().chain(face).copied().collect();
                union.sort();
                self.faces.contains(&union)
            })
            .cloned()
            .collect();
        Faces { n: self.n, faces }
    }

    /// Monomials of the minimal non-faces, as exponent rows.
    pub fn nonface_generators(&self) -> Vec<Vec<i32>> {
        let mut out = Vec::new();
        for mask in 0u32..1 << self.n {
            let s: Face = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
            if self.faces.contains(&s) {
                continue;
            }
            let minimal = s.iter().all(|&v| {
                let sub: Face = s.iter().copied().filter(|&w| w != v).collect();
                self.faces.contains(&sub)
            });
            if minimal {
                out.push((0..self.n).map(|v| s.contains(&v) as i32).collect());
            }
        }
        out
    }
}

/// Rank of an integer matrix over `Q` (`p = 0`) or `GF(p)`.
pub fn rank(rows: &[Vec<i64>], p: u64) -> usize {
    if p == 0 {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        eliminate(
            &mut m,
            |x| x == &BigRational::from_integer(BigInt::from(0)),
            |a, b| a / b,
            |a, b| a * b,
            |a, b| a - b,
        )
    } else {
        let mut m: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
            .collect();
        let inv = |a: &u64| {
            let (mut r, mut base, mut e) = (1u64, *a % p, p - 2);
            while e > 0 {
                if e & 1 == 1 {
                    r = r * base % p;
                }
                base = base * base % p;
                e >>= 1;
            }
            r
        };
        eliminate(
            &mut m,
            |x| *x == 0,
            |a, b| a * inv(b) % p,
            |a, b| a * b % p,
            |a, b| (a + p - b) % p,
        )
    }
}

fn eliminate<T: Clone>(
    m: &mut [Vec<T>],
    is_zero: impl Fn(&T) -> bool,
    div: impl Fn(&T, &T) -> T,
    mul: impl Fn(&T, &T) -> T,
    sub: impl Fn(&T, &T) -> T,
) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| !is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pivot);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom {
            if is_zero(&row[c]) {
                continue;
            }
            let factor = div(&row[c], &pivot_row[c]);
            for (v, q) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *v = sub(v, &mul(&factor, q));
            }
        }
        r += 1;
    }
    r
}

/// `dim H̃_j` for `j = -1, ..., n-1`, indexed by `j + 1`.
pub fn homology(complex: &Faces, p: u64) -> Vec<usize> {
    let n = complex.n;
    let by_size: Vec<Vec<&Face>> = (0..=n)
        .map(|s| complex.faces.iter().filter(|f| f.len() == s).collect())
        .collect();
    let boundary_rank = |size: usize| -> usize {
        if size == 0 || size > n || by_size[size].is_empty() {
            return 0;
        }
        let index: BTreeMap<&Face, usize> = by_size[size - 1].iter().enumerate().map(|(k, f)| (*f, k)).collect();
        let mut m = vec![vec![0i64; by_size[size].len()]; by_size[size - 1].len()];
        for (col, face) in by_size[size].iter().enumerate() {
            for pos in 0..face.len() {
                let mut sub = (*face).clone();
                sub.remove(pos);
                m[index[&sub]][col] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        rank(&m, p)
    };
    let ranks: Vec<usize> = (0..=n + 1).map(boundary_rank).collect();
    (0..=n).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect()
}

pub fn homology_at(h: &[usize], j: i64) -> usize {
    if j < -1 {
        0
    } else {
        h.get((j + 1) as usize).copied().unwrap_or(0)
    }
}

/// Membership of `x^m` in the ideal generated by `gens`.
pub fn member(gens: &[Vec<i32>], m: &[i32]) -> bool {
    gens.iter().any(|u| u.iter().zip(m).all(|(a, b)| a <= b))
}

/// `I_H`: every variable in `h` set to one.
pub fn localize(gens: &[Vec<i32>], h: &[usize]) -> Vec<Vec<i32>> {
    gens.iter()
        .map(|u| {
            u.iter()
                .enumerate()
                .map(|(i, &e)| if h.contains(&i) { 0 } else { e })
                .collect()
        })
        .collect()
}

/// The Takayama complex straight from its definition: `F ⊆ [n] \ G_a` is a
/// face iff `x^{a⁺} ∉ I_{F ∪ G_a}`.
pub fn takayama(gens: &[Vec<i32>], a: &[i32]) -> Faces {
    let n = a.len();
    let neg: Face = (0..n).filter(|&i| a[i] < 0).collect();
    let plus: Vec<i32> = a.iter().map(|&v| v.max(0)).collect();
    let mut faces = BTreeSet::new();
    for mask in 0u32..1 << n {
        let f: Face = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if f.iter().any(|i| neg.contains(i)) {
            continue;
        }
        let h: Face = f.iter().chain(&neg).copied().collect();
        if !member(&localize(gens, &h), &plus) {
            faces.insert(f);
        }
    }
    Faces { n, faces }
}

pub fn rows(ideal: &MonomialIdeal) -> Vec<Vec<i32>> {
    ideal.gens().iter().map(|g| g.entries().to_vec()).collect()
}

/// `dim D(H^j_m(S/I))_a` by the dual Takayama formula on the definitional complex.
pub fn dual_piece(gens: &[Vec<i32>], a: &[i32], j: usize, p: u64) -> usize {
    let neg: Vec<i32> = a.iter().map(|v| -v).collect();
    let h = a.iter().filter(|&&v| v > 0).count() as i64;
    homology_at(&homology(&takayama(gens, &neg), p), j as i64 - h - 1)
}

/// All integer points of `∏ [-bound_i, bound_i]`.
pub fn box_points(bound: &[i32]) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i32>| {
                (-b..=b).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

/// All integer points of `∏ [0, bound_i]`.
pub fn nonneg_points(bound: &[i32]) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i32>| {
                (0..=b).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

/// Degrees `i` with `H^i_m(K[x_1, ..., x_m] / (gens)) ≠ 0`, by sweeping a box
/// that holds a representative of every degree class.
pub fn nonzero_cohomology(gens: &[Vec<i32>], m: usize, p: u64) -> Vec<bool> {
    if m == 0 {
        return vec![true];
    }
    let bound: Vec<i32> = (0..m)
        .map(|i| gens.iter().map(|u| u[i]).max().unwrap_or(0).max(1) + 1)
        .collect();
    let mut out = vec![false; m + 1];
    for a in box_points(&bound) {
        for (i, slot) in out.iter_mut().enumerate() {
            if !*slot && dual_piece(gens, &a, i, p) > 0 {
                *slot = true;
            }
        }
    }
    out
}

/// Dual dimensions `dim D(H^j_m(S/I))` for `j = 0..=n`, with `None` for `-∞`.
///
/// By local duality at the monomial prime `P_F`, the dual of `H^j` survives
/// localization at `P_F` iff `H^{j-|F|}` of the localized quotient is
/// nonzero; that quotient lives on the variables outside `F`. The dimension
/// is the largest such `|F|`.
pub fn dual_dims(gens: &[Vec<i32>], n: usize, p: u64) -> Vec<Option<usize>> {
    let mut dims = vec![None; n + 1];
    for mask in 0u32..1 << n {
        let f: Face = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let keep: Vec<usize> = (0..n).filter(|i| !f.contains(i)).collect();
        let local: Vec<Vec<i32>> = gens.iter().map(|u| keep.iter().map(|&i| u[i]).collect()).collect();
        if local.iter().any(|u| u.iter().all(|&v| v == 0)) {
            continue;
        }
        for (i, nonzero) in nonzero_cohomology(&local, keep.len(), p).into_iter().enumerate() {
            let j = i + f.len();
            if nonzero && dims[j].is_none_or(|d| d < f.len()) {
                dims[j] = Some(f.len());
            }
        }
    }
    dims
}

/// `min{j : dims[j] ≥ j - r + 1}`.
pub fn serre_depth(dims: &[Option<usize>], r: usize) -> usize {
    (0..dims.len())
        .find(|&j| dims[j].is_some_and(|d| d as i64 > j as i64 - r as i64))
        .expect("nonzero module")
}

pub fn depth(dims: &[Option<usize>]) -> usize {
    (0..dims.len()).find(|&j| dims[j].is_some()).expect("nonzero module")
}

/// Depth of `K[Δ]` from links: `min{|F| + i + 1 : H̃_i(lk F) ≠ 0}`.
pub fn reisner_depth(complex: &Faces, p: u64) -> usize {
    complex
        .faces
        .iter()
        .filter_map(|f| {
            let h = homology(&complex.link(f), p);
            (0..h.len()).find(|&k| h[k] > 0).map(|k| f.len() + k)
        })
        .min()
        .expect("nonvoid complex")
}

/// Exhaustive minimal vertex covers of the generators: `dim S/I`.
pub fn krull_dim(gens: &[Vec<i32>], n: usize) -> usize {
    (0u32..1 << n)
        .filter(|mask| gens.iter().all(|u| (0..n).any(|i| mask >> i & 1 == 1 && u[i] > 0)))
        .map(|mask| n - mask.count_ones() as usize)
        .max()
        .expect("proper ideal")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A proper nonzero ideal in `min(2, max_n)..=max_n` variables with exponents `≤ max_exp`
/// and at most `max_gens` generators.
pub fn random_ideal(rng: &mut ChaCha8Rng, max_n: usize, max_exp: i32, max_gens: usize) -> MonomialIdeal {
    let n = rng.gen_range(max_n.min(2)..=max_n);
    let count = rng.gen_range(1..=max_gens);
    let mut gens = Vec::with_capacity(count);
    while gens.len() < count {
        // Sparse rows keep minimization from collapsing to one generator.
        let row: Vec<i32> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    0
                } else {
                    rng.gen_range(1..=max_exp)
                }
            })
            .collect();
        if row.iter().any(|&v| v > 0) {
            gens.push(Exponent::new(row));
        }
    }
    MonomialIdeal::new(n, gens).expect("valid generators")
}

pub fn random_ideals(seed: u64, count: usize, max_n: usize) -> Vec<MonomialIdeal> {
    let mut r = rng(seed);
    (0..count).map(|_| random_ideal(&mut r, max_n, 3, 6)).collect()
}

/// A random complex on `1..=max_vertices` vertices given by up to five facets.
pub fn random_complex(rng: &mut ChaCha8Rng, max_vertices: usize) -> Faces {
    let n = rng.gen_range(1..=max_vertices);
    let count = rng.gen_range(0..=5);
    let facets: Vec<Face> = (0..count)
        .map(|_| (0..n).filter(|_| rng.gen_bool(0.5)).collect())
        .collect();
    Faces::closure(n, &facets)
}

pub fn to_library(complex: &Faces) -> SimplicialComplex {
    if complex.faces.is_empty() {
        return SimplicialComplex::void(complex.n);
    }
    SimplicialComplex::from_facets(complex.n, &complex.facets()).expect("vertices in range")
}

pub fn varset(face: &[usize]) -> VarSet {
    face.iter().copied().collect()
}

/// The six-vertex triangulation of the real projective plane.
pub fn rp2() -> Faces {
    let facets: Vec<Face> = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [2, 3, 5],
        [1, 3, 4],
        [2, 4, 5],
        [1, 3, 5],
    ]
    .iter()
    .map(|f| f.to_vec())
    .collect();
    Faces::closure(6, &facets)
}
