//! Reduced simplicial homology over a field.
//!
//! The chain complex is augmented: `C_{-1}` is spanned by the empty face.
//! Hence the void complex is acyclic while `{∅}` has `H̃_{-1} = K`.

use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::exponent::VarSet;
use crate::field::FieldSpec;
use crate::linalg::{rank, IntMatrix};
use crate::memo::Memo;

/// `dim_K H̃_j(Δ; K)` for `j = -1, ..., n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    dims: Vec<usize>,
}

impl ReducedHomology {
    /// Dimension in degree `j`; zero outside `-1..=n-1`.
    pub fn get(&self, j: i64) -> usize {
        if j < -1 {
            return 0;
        }
        self.dims.get((j + 1) as usize).copied().unwrap_or(0)
    }

    /// `(j, dim)` pairs for `j = -1, ..., n-1`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.dims.iter().enumerate().map(|(k, &d)| (k as i64 - 1, d))
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `Σ_j (-1)^j dim H̃_j`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(j, d)| if j.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Sign of `v` in the boundary of `face`: `(-1)^{position of v in face}`.
fn boundary_sign(face: VarSet, v: usize) -> i64 {
    let below = face.bits() & ((1u64 << v) - 1);
    if below.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Matrix of `∂: C_{size-1} → C_{size-2}` with rows indexed by faces of
/// `size - 1` vertices and columns by faces of `size` vertices.
fn boundary_matrix(complex: &SimplicialComplex, size: usize) -> IntMatrix {
    let targets = complex.faces_of_size(size - 1);
    let sources = complex.faces_of_size(size);
    let mut m = alloc::vec![alloc::vec![0i64; sources.len()]; targets.len()];
    for (col, &face) in sources.iter().enumerate() {
        for v in face.iter() {
            let row = targets
                .binary_search(&face.without(v))
                .expect("complex is closed under subsets");
            m[row][col] = boundary_sign(face, v);
        }
    }
    m
}

pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> ReducedHomology {
    let n = complex.n();
    let p = field.characteristic();
    // ranks[s] = rank of ∂ out of faces with s vertices, s = 1..=n+1.
    let mut ranks = alloc::vec![0usize; n + 2];
    for (size, slot) in ranks.iter_mut().enumerate().take(n + 1).skip(1) {
        if complex.faces_of_size(size).is_empty() {
            break;
        }
        *slot = rank(&boundary_matrix(complex, size), p);
    }
    let dims = (0..=n)
        .map(|size| complex.faces_of_size(size).len() - ranks[size] - ranks[size + 1])
        .collect();
    ReducedHomology { dims }
}

/// Memo of reduced homology keyed by the facet list and characteristic.
pub struct HomologyCache {
    table: Memo<(u32, usize, Vec<VarSet>), ReducedHomology>,
}

impl HomologyCache {
    pub fn new() -> Self {
        HomologyCache { table: Memo::new() }
    }

    pub fn reduced_homology(&self, complex: &SimplicialComplex, field: FieldSpec) -> ReducedHomology {
        let key = (field.characteristic(), complex.n(), complex.facets().to_vec());
        self.table.get_or_insert_with(key, || reduced_homology(complex, field))
    }

    /// Every cached complex with its homology, in key order.
    pub fn entries(&self) -> Vec<(FieldSpec, SimplicialComplex, ReducedHomology)> {
        self.table
            .snapshot()
            .into_iter()
            .map(|((p, n, facets), h)| {
                let field = FieldSpec::new(p as u64).expect("cached characteristic is valid");
                (field, SimplicialComplex::from_facet_sets(n, facets), h)
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for HomologyCache {
    fn default() -> Self {
        Self::new()
    }
}
