//! Simplicial complexes on `[n]`, Stanley–Reisner ideals and Takayama
//! complexes.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exponent::{check_var_count, Exponent, VarSet};
use crate::ideal::MonomialIdeal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// No faces at all, not even `∅`.
    Void,
    /// Exactly `{∅}`.
    Irrelevant,
    /// `∅` and at least one vertex.
    Ordinary,
}

/// A downward-closed family of subsets of `[n]`.
///
/// Both the facets and the full face list are kept, the latter sorted by
/// cardinality then lexicographically, which fixes boundary-matrix layouts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
    faces: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Downward closure of `facets`, given as lists of 0-based vertices.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        check_var_count(n)?;
        let mut sets = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut set = VarSet::EMPTY;
            for &v in facet {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                set = set.with(v);
            }
            sets.push(set);
        }
        Ok(Self::from_facet_sets(n, sets))
    }

    pub(crate) fn from_facet_sets(n: usize, facets: Vec<VarSet>) -> Self {
        let faces: BTreeSet<VarSet> = facets.iter().flat_map(|f| f.subsets()).collect();
        Self::from_closed_faces(n, faces.into_iter().collect())
    }

    /// `faces` must be sorted, deduplicated and closed under subsets.
    fn from_closed_faces(n: usize, faces: Vec<VarSet>) -> Self {
        debug_assert!(faces.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(faces
            .iter()
            .all(|f| f.iter().all(|v| faces.binary_search(&f.without(v)).is_ok())));
        let facets = faces
            .iter()
            .copied()
            .filter(|f| {
                let outside = f.complement(n);
                outside.iter().all(|v| faces.binary_search(&f.with(v)).is_err())
            })
            .collect();
        SimplicialComplex { n, facets, faces }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: Vec::new(),
            faces: Vec::new(),
        }
    }

    pub fn irrelevant(n: usize) -> Self {
        Self::from_facet_sets(n, alloc::vec![VarSet::EMPTY])
    }

    /// The full simplex on `vertices`.
    pub fn simplex(n: usize, vertices: VarSet) -> Self {
        Self::from_facet_sets(n, alloc::vec![vertices])
    }

    /// All proper faces of the simplex on `vertices`.
    pub fn simplex_boundary(n: usize, vertices: VarSet) -> Self {
        Self::from_facet_sets(n, vertices.iter().map(|v| vertices.without(v)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn faces(&self) -> &[VarSet] {
        &self.faces
    }

    /// Faces with exactly `size` vertices, in canonical order.
    pub fn faces_of_size(&self, size: usize) -> &[VarSet] {
        let start = self.faces.partition_point(|f| f.len() < size);
        let end = self.faces.partition_point(|f| f.len() <= size);
        &self.faces[start..end]
    }

    pub fn contains(&self, face: VarSet) -> bool {
        self.faces.binary_search(&face).is_ok()
    }

    pub fn regime(&self) -> Regime {
        match self.faces.len() {
            0 => Regime::Void,
            1 => Regime::Irrelevant,
            _ => Regime::Ordinary,
        }
    }

    /// Largest face cardinality, `None` for the void complex.
    pub fn max_face_size(&self) -> Option<usize> {
        self.faces.last().map(|f| f.len())
    }

    /// `Δ^{(i)} = {F ∈ Δ : |F| ≤ i}`. The void complex maps to itself.
    pub fn skeleton(&self, i: usize) -> Self {
        let faces = self.faces.iter().copied().filter(|f| f.len() <= i).collect();
        Self::from_closed_faces(self.n, faces)
    }

    /// `I_Δ`, generated by the squarefree monomials of the minimal non-faces.
    pub fn stanley_reisner(&self) -> MonomialIdeal {
        let n = self.n;
        let gens = VarSet::full(n)
            .subsets()
            .filter(|s| !self.contains(*s) && s.iter().all(|v| self.contains(s.without(v))))
            .map(|s| Exponent::indicator(n, s, 1))
            .collect();
        MonomialIdeal::minimized(n, gens)
    }

    /// The complex `Δ` with `I_Δ = ideal`, for a proper squarefree ideal.
    pub fn complex_of(ideal: &MonomialIdeal) -> Result<Self> {
        ideal.require_proper()?;
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let n = ideal.n();
        let nonfaces: Vec<VarSet> = ideal.gens().iter().map(Exponent::support).collect();
        Ok(Self::avoiding(n, VarSet::full(n), &nonfaces))
    }

    /// Subsets of `vertices` containing none of `nonfaces`.
    fn avoiding(n: usize, vertices: VarSet, nonfaces: &[VarSet]) -> Self {
        if nonfaces.iter().any(|s| s.is_empty()) {
            return Self::void(n);
        }
        let mut faces: Vec<VarSet> = vertices
            .subsets()
            .filter(|f| !nonfaces.iter().any(|s| s.is_subset(*f)))
            .collect();
        faces.sort();
        Self::from_closed_faces(n, faces)
    }

    /// The Takayama complex
    /// `Δ_a(I) = {H \ G_a : G_a ⊆ H ⊆ [n], x^{a⁺} ∉ I_H}`.
    ///
    /// `x^{a⁺} ∈ I_H` exactly when some generator `u` has `u(i) ≤ a⁺(i)` for
    /// every `i ∉ H`, i.e. when the set `V_u = {i : u(i) > a⁺(i)}` lies in `H`.
    /// The faces are therefore the subsets of `[n] \ G_a` containing no
    /// `V_u \ G_a`, and the result is void when some `V_u ⊆ G_a`.
    pub fn takayama(ideal: &MonomialIdeal, a: &Exponent) -> Self {
        let n = ideal.n();
        debug_assert_eq!(a.len(), n);
        let g = a.negative_support();
        let plus = a.positive_part();
        let blockers: Vec<VarSet> = ideal
            .gens()
            .iter()
            .map(|u| (0..n).filter(|&i| u[i] > plus[i]).collect::<VarSet>().difference(g))
            .collect();
        Self::avoiding(n, g.complement(n), &blockers)
    }
}

impl core::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets={:?})", self.n, self.facets)
    }
}
