//! Irreducible decomposition, associated primes and component classification.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::Result;
use crate::exponent::{Exponent, VarSet};
use crate::ideal::MonomialIdeal;

/// A monomial prime `P_F = (x_i : i ∉ F)`, stored through its complement
/// face `F`, so that `dim(S/P_F) = |F|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeFace {
    face: VarSet,
}

impl PrimeFace {
    pub fn new(face: VarSet) -> Self {
        PrimeFace { face }
    }

    /// The prime generated by the variables in `vars`.
    pub fn from_variables(n: usize, vars: VarSet) -> Self {
        PrimeFace {
            face: vars.complement(n),
        }
    }

    pub fn face(self) -> VarSet {
        self.face
    }

    pub fn variables(self, n: usize) -> VarSet {
        self.face.complement(n)
    }

    pub fn dim(self) -> usize {
        self.face.len()
    }

    /// `P_self ⊆ P_other`.
    pub fn is_contained_in(self, other: PrimeFace) -> bool {
        other.face.is_subset(self.face)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentClassification {
    pub unmixed: bool,
    pub equidimensional: bool,
    pub has_embedded: bool,
    pub min_primes: Vec<PrimeFace>,
}

/// Irredundant decomposition of `I` into ideals generated by pure powers of
/// variables.
///
/// Works by splitting: a generator `u = x_i^e · v` with `v ≠ 1` coprime to
/// `x_i` gives `I = (I + x_i^e) ∩ (I + v)`.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    ideal.require_proper_nonzero()?;
    let n = ideal.n();
    let mut pending = alloc::vec![ideal.clone()];
    let mut seen: BTreeSet<MonomialIdeal> = BTreeSet::new();
    let mut irreducible: BTreeSet<MonomialIdeal> = BTreeSet::new();
    while let Some(current) = pending.pop() {
        if !seen.insert(current.clone()) {
            continue;
        }
        let Some(mixed) = current.gens().iter().find(|g| g.support().len() >= 2) else {
            irreducible.insert(current);
            continue;
        };
        let i = mixed.support().iter().next().expect("support has two elements");
        let pure = Exponent::indicator(n, VarSet::singleton(i), mixed[i]);
        let rest = mixed.zero_out(VarSet::singleton(i));
        for extra in [pure, rest] {
            pending.push(current.sum(&MonomialIdeal::minimized(n, alloc::vec![extra])));
        }
    }
    Ok(remove_redundant(irreducible.into_iter().collect()))
}

/// Drops components containing the intersection of the remaining ones.
fn remove_redundant(mut components: Vec<MonomialIdeal>) -> Vec<MonomialIdeal> {
    // Any component that strictly contains another is redundant; dropping
    // those first keeps the intersection tests below small.
    let snapshot = components.clone();
    components.retain(|c| !snapshot.iter().any(|d| d != c && c.contains_ideal(d)));
    let mut idx = 0;
    while idx < components.len() {
        let others = components
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, c)| c.clone())
            .reduce(|a, b| a.intersect(&b));
        match others {
            Some(rest) if components[idx].contains_ideal(&rest) => {
                components.remove(idx);
            }
            _ => idx += 1,
        }
    }
    components
}

fn component_prime(n: usize, component: &MonomialIdeal) -> PrimeFace {
    let vars = component
        .gens()
        .iter()
        .fold(VarSet::EMPTY, |acc, g| acc.union(g.support()));
    PrimeFace::from_variables(n, vars)
}

/// `Ass(S/I)`, read off an irredundant irreducible decomposition.
pub fn assoc_primes(ideal: &MonomialIdeal) -> Result<Vec<PrimeFace>> {
    let n = ideal.n();
    let primes: BTreeSet<PrimeFace> = irreducible_decomposition(ideal)?
        .iter()
        .map(|c| component_prime(n, c))
        .collect();
    Ok(primes.into_iter().collect())
}

pub fn classify_components(ideal: &MonomialIdeal) -> Result<ComponentClassification> {
    let ass = assoc_primes(ideal)?;
    let min_primes: Vec<PrimeFace> = ass
        .iter()
        .copied()
        .filter(|p| !ass.iter().any(|q| q != p && q.is_contained_in(*p)))
        .collect();
    let dim = ideal.dim_quotient().finite().expect("proper ideal");
    let equidimensional = min_primes.iter().all(|p| p.dim() == min_primes[0].dim());
    let unmixed = ass.iter().all(|p| p.dim() == dim);
    Ok(ComponentClassification {
        unmixed,
        equidimensional,
        has_embedded: ass.len() > min_primes.len(),
        min_primes,
    })
}
