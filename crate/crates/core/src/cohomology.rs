//! Local cohomology of `S/I` through its graded Matlis duals.
//!
//! For `a ∈ Z^n` with `H_a = {i : a(i) > 0}`,
//!
//! ```text
//! D(H^j_m(S/I))_a  ≅  H̃_{j-|H_a|-1}(Δ_{-a}(I); K).
//! ```
//!
//! The right side depends on `a` only through `H_a` and the values
//! `min(max(-a(i), 0), g_i)` with `g = deg(I)`, because a generator exponent
//! never exceeds `g_i`. Each coordinate therefore falls into one of
//! `g'_i + 2` classes (`g'_i = max(g_i, 1)`):
//!
//! - `Pos`: `a(i) ≥ 1`;
//! - `Fin(v)`: `a(i) = -v` for `0 ≤ v < g'_i`;
//! - `NegCap`: `a(i) ≤ -g'_i`.
//!
//! The dual is a finitely generated module, so `NegCap` classes carry nothing,
//! and multiplication by `x_i` is an isomorphism between degrees with
//! `a(i) ≥ 1`. Localizing at `P_F` is then nonzero exactly when some class
//! with `Pos` on all of `F` is nonzero, so `dim D(H^j_m(S/I))` is the largest
//! number of `Pos` coordinates over nonzero classes.

use alloc::vec::Vec;
use core::fmt;

use crate::complex::SimplicialComplex;
use crate::decompose::{assoc_primes, classify_components};
use crate::dim::KrullDim;
use crate::error::{Error, Result};
use crate::exponent::{Exponent, VarSet};
use crate::field::FieldSpec;
use crate::homology::{HomologyCache, ReducedHomology};
use crate::ideal::MonomialIdeal;
use crate::memo::Memo;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassTag {
    /// `a(i) ≥ 1`.
    Pos,
    /// `a(i) = -v`.
    Fin(u32),
    /// `a(i) ≤ -cap`.
    NegCap(u32),
}

impl ClassTag {
    pub fn representative(self) -> i32 {
        match self {
            ClassTag::Pos => 1,
            ClassTag::Fin(v) => -(v as i32),
            ClassTag::NegCap(cap) => -(cap as i32),
        }
    }

    pub fn contains(self, value: i32) -> bool {
        match self {
            ClassTag::Pos => value >= 1,
            ClassTag::Fin(v) => value == -(v as i32),
            ClassTag::NegCap(cap) => value <= -(cap as i32),
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Pos => f.write_str("POS"),
            ClassTag::Fin(v) => write!(f, "FIN(-{v})"),
            ClassTag::NegCap(cap) => write!(f, "NEGCAP(<=-{cap})"),
        }
    }
}

/// A region of `Z^n` on which every dual piece `D(H^j_m(S/I))_a` is constant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeClass {
    tags: Vec<ClassTag>,
}

impl DegreeClass {
    pub fn new(tags: Vec<ClassTag>) -> Self {
        DegreeClass { tags }
    }

    pub fn tags(&self) -> &[ClassTag] {
        &self.tags
    }

    pub fn representative(&self) -> Exponent {
        Exponent::new(self.tags.iter().map(|t| t.representative()).collect())
    }

    /// Coordinates tagged `Pos`, the directions in which the class is
    /// closed under multiplication.
    pub fn positive_directions(&self) -> VarSet {
        (0..self.tags.len())
            .filter(|&i| self.tags[i] == ClassTag::Pos)
            .collect()
    }

    pub fn contains(&self, a: &Exponent) -> bool {
        a.len() == self.tags.len() && self.tags.iter().zip(a.entries()).all(|(t, &v)| t.contains(v))
    }

    /// The class of `a` for an ideal with bounding multidegree `bound`.
    pub fn of(a: &Exponent, bound: &Exponent) -> Self {
        let tags = a
            .entries()
            .iter()
            .zip(bound.entries())
            .map(|(&v, &g)| {
                let cap = g.max(1) as u32;
                if v >= 1 {
                    ClassTag::Pos
                } else if (-v as u32) < cap {
                    ClassTag::Fin(-v as u32)
                } else {
                    ClassTag::NegCap(cap)
                }
            })
            .collect();
        DegreeClass { tags }
    }
}

impl fmt::Display for DegreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, t) in self.tags.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

/// Mixed-radix indexing of all degree classes of an ideal, last coordinate
/// fastest; per coordinate the order is `Pos, Fin(0), ..., Fin(g'-1), NegCap`.
#[derive(Clone, Debug)]
struct ClassIndex {
    caps: Vec<u32>,
    count: u128,
}

impl ClassIndex {
    fn new(ideal: &MonomialIdeal) -> Self {
        let caps: Vec<u32> = ideal
            .bounding_multidegree()
            .entries()
            .iter()
            .map(|&g| g.max(1) as u32)
            .collect();
        let count = ideal.degree_class_count();
        ClassIndex { caps, count }
    }

    fn class_at(&self, mut index: u128) -> DegreeClass {
        let mut tags = alloc::vec![ClassTag::Pos; self.caps.len()];
        for (slot, &cap) in tags.iter_mut().zip(&self.caps).rev() {
            let radix = cap as u128 + 2;
            let digit = (index % radix) as u32;
            index /= radix;
            *slot = match digit {
                0 => ClassTag::Pos,
                d if d <= cap => ClassTag::Fin(d - 1),
                _ => ClassTag::NegCap(cap),
            };
        }
        DegreeClass { tags }
    }
}

/// All `∏ (g'_i + 2)` degree classes of a proper ideal.
pub fn enumerate_degree_classes(ideal: &MonomialIdeal) -> Result<Vec<DegreeClass>> {
    ideal.require_proper()?;
    let index = ClassIndex::new(ideal);
    Ok((0..index.count).map(|k| index.class_at(k)).collect())
}

/// `dim D(H^j_m(S/I))` for `j = 0, ..., n`, with a witness class per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyProfile {
    dual_dims: Vec<KrullDim>,
    witnesses: Vec<Option<DegreeClass>>,
}

impl CohomologyProfile {
    pub fn from_dual_dims(dual_dims: Vec<KrullDim>) -> Self {
        let witnesses = alloc::vec![None; dual_dims.len()];
        CohomologyProfile { dual_dims, witnesses }
    }

    /// Number of variables of the ambient ring.
    pub fn n(&self) -> usize {
        self.dual_dims.len() - 1
    }

    pub fn dual_dims(&self) -> &[KrullDim] {
        &self.dual_dims
    }

    pub fn dual_dim(&self, j: usize) -> KrullDim {
        self.dual_dims.get(j).copied().unwrap_or(KrullDim::NegInfinity)
    }

    pub fn nonzero(&self, j: usize) -> bool {
        !self.dual_dim(j).is_neg_infinity()
    }

    /// A class attaining `dual_dim(j)`, if the module is nonzero.
    pub fn witness(&self, j: usize) -> Option<&DegreeClass> {
        self.witnesses.get(j).and_then(Option::as_ref)
    }

    /// `min{j : H^j_m(S/I) ≠ 0}`.
    pub fn depth(&self) -> Option<usize> {
        (0..self.dual_dims.len()).find(|&j| self.nonzero(j))
    }

    /// `max{j : H^j_m(S/I) ≠ 0}`, which equals `dim(S/I)`.
    pub fn top_degree(&self) -> Option<usize> {
        (0..self.dual_dims.len()).rev().find(|&j| self.nonzero(j))
    }

    /// `S_r-depth(S/I) = min{j : dim D(H^j_m(S/I)) ≥ j - r + 1}`.
    pub fn serre_depth(&self, r: usize) -> Option<usize> {
        (0..self.dual_dims.len()).find(|&j| self.dual_dims[j].at_least(j as i64 - r as i64 + 1))
    }

    /// `S_r-depth(I)` for the ideal as a module, from
    /// `H^{j}_m(I) ≅ H^{j-1}_m(S/I)` for `1 ≤ j ≤ n-1` and `dim D(H^n_m(I)) = n`.
    pub fn ideal_serre_depth(&self, r: usize) -> usize {
        let n = self.n();
        (1..n)
            .find(|&j| self.dual_dims[j - 1].at_least(j as i64 - r as i64 + 1))
            .unwrap_or(n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SerreMode {
    /// `S_r-depth = dim`, i.e. equidimensional and `(S_r)`.
    Theorem,
    /// For `r = 1`: no embedded associated primes.
    LiteralS1,
}

/// Computation context: coefficient field, an optional degree-class budget
/// and memo tables for homology and profiles.
pub struct Analyzer {
    field: FieldSpec,
    budget: Option<u128>,
    homology: HomologyCache,
    profiles: Memo<MonomialIdeal, CohomologyProfile>,
}

impl Analyzer {
    pub fn new(field: FieldSpec) -> Self {
        Analyzer {
            field,
            budget: None,
            homology: HomologyCache::new(),
            profiles: Memo::new(),
        }
    }

    /// Refuse profiles needing more than `budget` degree classes.
    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn budget(&self) -> Option<u128> {
        self.budget
    }

    pub fn homology_cache(&self) -> &HomologyCache {
        &self.homology
    }

    pub fn reduced_homology(&self, complex: &SimplicialComplex) -> ReducedHomology {
        self.homology.reduced_homology(complex, self.field)
    }

    /// Homology of `Δ_{-a}(I)`, whose degree `j - |H_a| - 1` carries the dual
    /// piece of `H^j` at `a`.
    fn dual_homology(&self, ideal: &MonomialIdeal, a: &Exponent) -> ReducedHomology {
        self.reduced_homology(&SimplicialComplex::takayama(ideal, &a.negated()))
    }

    /// `dim_K D(H^j_m(S/I))_a = dim_K H̃_{j-|H_a|-1}(Δ_{-a}(I); K)`.
    pub fn dual_piece_dim(&self, ideal: &MonomialIdeal, a: &Exponent, j: usize) -> Result<usize> {
        ideal.require_proper()?;
        let n = ideal.n();
        if a.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: a.len(),
            });
        }
        if j > n {
            return Err(Error::DegreeOutOfRange { j, n });
        }
        let h = a.positive_support().len() as i64;
        Ok(self.dual_homology(ideal, a).get(j as i64 - h - 1))
    }

    /// Bit `j` is set when the dual piece of `H^j` at the class is nonzero.
    fn class_mask(&self, ideal: &MonomialIdeal, class: &DegreeClass) -> u64 {
        let a = class.representative();
        let h = a.positive_support().len() as i64;
        let homology = self.dual_homology(ideal, &a);
        (0..=ideal.n())
            .filter(|&j| homology.get(j as i64 - h - 1) > 0)
            .fold(0u64, |mask, j| mask | 1 << j)
    }

    fn check_budget(&self, ideal: &MonomialIdeal) -> Result<()> {
        let patterns = ideal.degree_class_count();
        match self.budget {
            Some(budget) if patterns > budget => Err(Error::BudgetExceeded {
                k: None,
                patterns,
                budget,
            }),
            _ => Ok(()),
        }
    }

    pub fn profile(&self, ideal: &MonomialIdeal) -> Result<CohomologyProfile> {
        ideal.require_proper()?;
        if let Some(p) = self.profiles.get(ideal) {
            return Ok(p);
        }
        self.check_budget(ideal)?;
        let profile = self.compute_profile(ideal);
        self.profiles.insert(ideal.clone(), profile.clone());
        Ok(profile)
    }

    fn compute_profile(&self, ideal: &MonomialIdeal) -> CohomologyProfile {
        let n = ideal.n();
        let index = ClassIndex::new(ideal);
        let masks = self.sweep(ideal, &index);

        // Per degree j: most Pos coordinates over nonzero classes, and the
        // first class attaining it.
        let mut best: Vec<Option<(usize, u128)>> = alloc::vec![None; n + 1];
        for (k, &mask) in masks.iter().enumerate() {
            if mask == 0 {
                continue;
            }
            let directions = index.class_at(k as u128).positive_directions().len();
            for j in (0..=n).filter(|&j| mask >> j & 1 == 1) {
                if best[j].is_none_or(|(d, _)| directions > d) {
                    best[j] = Some((directions, k as u128));
                }
            }
        }
        let dual_dims = best
            .iter()
            .map(|b| b.map_or(KrullDim::NegInfinity, |(d, _)| KrullDim::Finite(d)))
            .collect();
        let witnesses = best.iter().map(|b| b.map(|(_, k)| index.class_at(k))).collect();
        CohomologyProfile { dual_dims, witnesses }
    }

    #[cfg(feature = "parallel")]
    fn sweep(&self, ideal: &MonomialIdeal, index: &ClassIndex) -> Vec<u64> {
        use rayon::prelude::*;
        let count = index.count as u64;
        (0..count)
            .into_par_iter()
            .map(|k| self.class_mask(ideal, &index.class_at(k as u128)))
            .collect()
    }

    #[cfg(not(feature = "parallel"))]
    fn sweep(&self, ideal: &MonomialIdeal, index: &ClassIndex) -> Vec<u64> {
        (0..index.count)
            .map(|k| self.class_mask(ideal, &index.class_at(k)))
            .collect()
    }

    pub fn depth(&self, ideal: &MonomialIdeal) -> Result<usize> {
        Ok(self.profile(ideal)?.depth().expect("S/I is nonzero"))
    }

    pub fn serre_depth(&self, ideal: &MonomialIdeal, r: usize) -> Result<usize> {
        if r == 0 {
            return Err(Error::InvalidSerreIndex);
        }
        Ok(self.profile(ideal)?.serre_depth(r).expect("S/I is nonzero"))
    }

    /// `S_r-depth(I)` of the ideal itself as an `S`-module.
    pub fn serre_depth_ideal_module(&self, ideal: &MonomialIdeal, r: usize) -> Result<usize> {
        if r == 0 {
            return Err(Error::InvalidSerreIndex);
        }
        ideal.require_proper_nonzero()?;
        Ok(self.profile(ideal)?.ideal_serre_depth(r))
    }

    /// `(S_1-depth, ..., S_d-depth)` of `S/I` with `d = max(1, dim S/I)`.
    pub fn depth_strata_point(&self, ideal: &MonomialIdeal) -> Result<Vec<usize>> {
        let profile = self.profile(ideal)?;
        let d = strata_length(ideal);
        Ok((1..=d)
            .map(|r| profile.serre_depth(r).expect("S/I is nonzero"))
            .collect())
    }

    pub fn is_serre_condition(&self, ideal: &MonomialIdeal, r: usize, mode: SerreMode) -> Result<bool> {
        if r == 0 {
            return Err(Error::InvalidSerreIndex);
        }
        ideal.require_proper()?;
        if r == 1 && mode == SerreMode::LiteralS1 {
            if ideal.is_zero() {
                return Ok(true);
            }
            return Ok(!classify_components(ideal)?.has_embedded);
        }
        let dim = ideal.dim_quotient().finite().expect("proper ideal");
        Ok(self.serre_depth(ideal, r)? == dim)
    }

    /// Depth and dimension of `(S/I)_{P_F}`, computed on
    /// `K[x_i : i ∉ F] / I_F`; `None` when `I ⊄ P_F`.
    pub fn localized_depth_dim(&self, ideal: &MonomialIdeal, face: VarSet) -> Result<Option<(usize, usize)>> {
        ideal.require_proper()?;
        let local = ideal.localize(face);
        if local.is_unit() {
            return Ok(None);
        }
        let keep = face.complement(ideal.n());
        if keep.is_empty() {
            return Ok(Some((0, 0)));
        }
        let reduced = local.restrict(keep);
        let dim = reduced.dim_quotient().finite().expect("proper ideal");
        Ok(Some((self.depth(&reduced)?, dim)))
    }

    /// `depth (S/I)_P ≥ min(r, dim (S/I)_P)` at every monomial prime `P ⊇ I`.
    pub fn direct_serre_check(&self, ideal: &MonomialIdeal, r: usize) -> Result<bool> {
        if r == 0 {
            return Err(Error::InvalidSerreIndex);
        }
        for face in VarSet::full(ideal.n()).subsets() {
            if let Some((depth, dim)) = self.localized_depth_dim(ideal, face)? {
                if depth < r.min(dim) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Faces `F` with `I ⊆ P_F` and `depth (S/I)_{P_F} = 0`; equals `Ass(S/I)`.
    pub fn depth_zero_localizations(&self, ideal: &MonomialIdeal) -> Result<Vec<VarSet>> {
        let mut out = Vec::new();
        for face in VarSet::full(ideal.n()).subsets() {
            if let Some((0, _)) = self.localized_depth_dim(ideal, face)? {
                out.push(face);
            }
        }
        out.sort();
        Ok(out)
    }

    /// `Ass(S/I)` as faces, from the irreducible decomposition.
    pub fn associated_faces(&self, ideal: &MonomialIdeal) -> Result<Vec<VarSet>> {
        let mut faces: Vec<VarSet> = assoc_primes(ideal)?.into_iter().map(|p| p.face()).collect();
        faces.sort();
        Ok(faces)
    }
}

/// `max(1, dim S/I)` for a proper ideal.
pub fn strata_length(ideal: &MonomialIdeal) -> usize {
    ideal.dim_quotient().finite().unwrap_or(0).max(1)
}
