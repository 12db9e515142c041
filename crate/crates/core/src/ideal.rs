//! Monomial ideals represented by their minimal generating sets.

use alloc::vec::Vec;
use core::fmt;

use crate::dim::KrullDim;
use crate::error::{Error, Result};
use crate::exponent::{check_var_count, Exponent, VarSet};

/// A monomial ideal of `K[x_1, ..., x_n]`, stored as its minimal generators
/// `G(I)` in lexicographic order.
///
/// The zero ideal has no generators; the unit ideal is generated by the
/// all-zero exponent.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Exponent>,
}

impl MonomialIdeal {
    /// Minimal generators of the ideal spanned by `raw`.
    pub fn new(n: usize, raw: impl IntoIterator<Item = Exponent>) -> Result<Self> {
        check_var_count(n)?;
        let mut gens = Vec::new();
        for m in raw {
            gens.push(Exponent::monomial(m.into_entries(), n)?);
        }
        Ok(Self::minimized(n, gens))
    }

    /// Convenience constructor from literal exponent rows.
    pub fn from_rows(n: usize, rows: &[&[i32]]) -> Result<Self> {
        Self::new(n, rows.iter().map(|r| Exponent::new(r.to_vec())))
    }

    /// `gens` must already hold valid monomials of length `n`.
    pub(crate) fn minimized(n: usize, mut gens: Vec<Exponent>) -> Self {
        gens.sort_by_key(Exponent::total_degree);
        let mut kept: Vec<Exponent> = Vec::with_capacity(gens.len());
        for g in gens {
            // A divisor of g has total degree at most deg(g), so it is
            // already in `kept` if it exists.
            if !kept.iter().any(|h| h.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort();
        MonomialIdeal { n, gens: kept }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: alloc::vec![Exponent::zeros(n)],
        }
    }

    /// The ideal `(x_i : i ∈ vars)`.
    pub fn prime(n: usize, vars: VarSet) -> Self {
        Self::minimized(
            n,
            vars.iter()
                .map(|i| Exponent::indicator(n, VarSet::singleton(i), 1))
                .collect(),
        )
    }

    /// The homogeneous maximal ideal `m = (x_1, ..., x_n)`.
    pub fn maximal(n: usize) -> Self {
        Self::prime(n, VarSet::full(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].entries().iter().all(|&v| v == 0)
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Exponent::is_squarefree)
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::NotProper)
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_proper_nonzero(&self) -> Result<()> {
        self.require_proper()?;
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    /// Whether the monomial `x^m` lies in the ideal.
    pub fn contains(&self, m: &Exponent) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Whether `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `deg(I)`: the coordinatewise maximum of the generators. The zero ideal
    /// maps to the zero vector.
    pub fn bounding_multidegree(&self) -> Exponent {
        self.gens.iter().fold(Exponent::zeros(self.n), |acc, g| acc.join(g))
    }

    /// The monomial localization `I_H`: substitute `x_i = 1` for `i ∈ H`.
    pub fn localize(&self, h: VarSet) -> MonomialIdeal {
        Self::minimized(self.n, self.gens.iter().map(|g| g.zero_out(h)).collect())
    }

    /// The image of `I_{[n] \ keep}` in the polynomial ring on the variables
    /// of `keep`, re-indexed in increasing order.
    pub fn restrict(&self, keep: VarSet) -> MonomialIdeal {
        let m = keep.len();
        Self::minimized(m, self.gens.iter().map(|g| g.restrict(keep)).collect())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.n, other.n);
        Self::minimized(self.n, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.n, other.n);
        let mut products = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                products.push(a.add(b));
            }
        }
        Self::minimized(self.n, products)
    }

    /// Monomial ideals intersect generator-wise through least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert_eq!(self.n, other.n);
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.join(b));
            }
        }
        Self::minimized(self.n, lcms)
    }

    pub fn power(&self, k: i64) -> Result<MonomialIdeal> {
        if k < 1 {
            return Err(Error::NonPositivePower(k));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.multiply(self);
        }
        Ok(acc)
    }

    /// `dim(S/I)`: the largest `|F|` such that no generator is supported
    /// inside `F`. The unit ideal gives `-∞`, the zero ideal gives `n`.
    pub fn dim_quotient(&self) -> KrullDim {
        if self.is_unit() {
            return KrullDim::NegInfinity;
        }
        let supports: Vec<VarSet> = self.gens.iter().map(Exponent::support).collect();
        KrullDim::Finite(self.n - min_transversal(&supports))
    }

    /// Number of degree classes `∏ (max(g_i, 1) + 2)` swept for this ideal.
    pub fn degree_class_count(&self) -> u128 {
        self.bounding_multidegree()
            .entries()
            .iter()
            .map(|&g| g.max(1) as u128 + 2)
            .fold(1u128, |acc, c| acc.saturating_mul(c))
    }
}

/// Size of a smallest set meeting every set in `sets` (none may be empty).
fn min_transversal(sets: &[VarSet]) -> usize {
    fn go(sets: &[VarSet], chosen: VarSet, depth: usize, best: &mut usize) {
        if depth >= *best {
            return;
        }
        let Some(open) = sets.iter().find(|s| s.intersection(chosen).is_empty()) else {
            *best = depth;
            return;
        };
        for v in open.iter() {
            go(sets, chosen.with(v), depth + 1, best);
        }
    }
    let mut best = usize::MAX;
    go(sets, VarSet::EMPTY, 0, &mut best);
    best
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(n={}, {})", self.n, self)
    }
}

/// Generators written with the default names `x1, ..., xn`.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write_monomial(f, g)?;
        }
        f.write_str(")")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Exponent) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.entries().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ideal(n: usize, rows: &[&[i32]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(n, rows).unwrap()
    }

    #[test]
    fn minimize_drops_multiples() {
        let i = ideal(2, &[&[2, 0], &[3, 0], &[1, 1]]);
        assert_eq!(i, ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(i.gens().len(), 2);
        assert!(ideal(2, &[]).is_zero());
        assert!(ideal(2, &[&[0, 0], &[1, 0]]).is_unit());
    }

    #[test]
    fn minimize_rejects_bad_input() {
        assert_eq!(
            MonomialIdeal::from_rows(2, &[&[1, -1]]),
            Err(Error::NegativeExponent { index: 1, value: -1 })
        );
        assert_eq!(
            MonomialIdeal::from_rows(2, &[&[1]]),
            Err(Error::LengthMismatch { expected: 2, found: 1 })
        );
        assert_eq!(MonomialIdeal::from_rows(0, &[]), Err(Error::VariableCount(0)));
    }

    #[test]
    fn membership() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(i.contains(&Exponent::new(vec![3, 0])));
        assert!(!i.contains(&Exponent::new(vec![1, 0])));
        assert!(!MonomialIdeal::zero(2).contains(&Exponent::new(vec![5, 5])));
    }

    #[test]
    fn bounding_multidegree_examples() {
        assert_eq!(
            ideal(2, &[&[2, 0], &[1, 1]]).bounding_multidegree(),
            Exponent::new(vec![2, 1])
        );
        assert_eq!(
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]).bounding_multidegree(),
            Exponent::new(vec![1, 1, 1])
        );
        assert_eq!(MonomialIdeal::zero(2).bounding_multidegree(), Exponent::new(vec![0, 0]));
    }

    #[test]
    fn localize_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(i.localize(VarSet::singleton(1)), ideal(3, &[&[1, 0, 0], &[0, 0, 1]]));
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(j.localize(VarSet::singleton(0)).is_unit());
        assert_eq!(j.localize(VarSet::EMPTY), j);
    }

    #[test]
    fn powers() {
        let x = ideal(1, &[&[1]]);
        assert_eq!(x.power(3).unwrap(), ideal(1, &[&[3]]));
        let m = MonomialIdeal::maximal(2);
        assert_eq!(m.power(2).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.power(2).unwrap(), ideal(2, &[&[4, 0], &[3, 1], &[2, 2]]));
        assert_eq!(i.power(1).unwrap(), i);
        assert_eq!(i.power(0), Err(Error::NonPositivePower(0)));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(ideal(2, &[&[2, 0], &[1, 1]]).dim_quotient(), KrullDim::Finite(1));
        assert_eq!(MonomialIdeal::maximal(3).dim_quotient(), KrullDim::Finite(0));
        assert_eq!(MonomialIdeal::zero(4).dim_quotient(), KrullDim::Finite(4));
        assert_eq!(MonomialIdeal::unit(2).dim_quotient(), KrullDim::NegInfinity);
        assert_eq!(
            ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]).dim_quotient(),
            KrullDim::Finite(2)
        );
    }

    #[test]
    fn intersection_of_coprime_primes() {
        let a = MonomialIdeal::prime(3, VarSet::singleton(1));
        let b = MonomialIdeal::prime(3, VarSet::from_iter([0, 2]));
        assert_eq!(a.intersect(&b), ideal(3, &[&[1, 1, 0], &[0, 1, 1]]));
    }

    #[test]
    fn display_uses_default_names() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(alloc::format!("{i}"), "(x1*x2, x1^2)");
    }
}
