//! Skeleton ideals `Σ_i^g(I) = I + (x^a : ρ_g(a) > i)` and the skeleton
//! characterization of Serre depth.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cohomology::{strata_length, Analyzer, SerreMode};
use crate::error::{Error, Result};
use crate::exponent::{Exponent, VarSet};
use crate::ideal::MonomialIdeal;
use crate::verify::{Check, CheckReport};

/// `ρ_g(a) = |{s : g(s) = a(s)}|`.
pub fn rho(g: &Exponent, a: &Exponent) -> usize {
    g.entries().iter().zip(a.entries()).filter(|(x, y)| x == y).count()
}

fn check_grading(ideal: &MonomialIdeal, g: &Exponent) -> Result<()> {
    let bound = ideal.bounding_multidegree();
    if g.len() != ideal.n() {
        return Err(Error::LengthMismatch {
            expected: ideal.n(),
            found: g.len(),
        });
    }
    if !bound.divides(g) {
        return Err(Error::GradingTooSmall {
            g: g.entries().to_vec(),
            bound: bound.into_entries(),
        });
    }
    Ok(())
}

/// `Σ_i^g(I)`.
///
/// A monomial `x^a` with `ρ_g(a) > i` is divisible by `∏_{s ∈ T} x_s^{g_s}`
/// for any `i + 1` of its matched coordinates `T`, and each such product has
/// `ρ_g ≥ i + 1` itself; these products generate the added part.
pub fn skeleton_ideal(ideal: &MonomialIdeal, g: &Exponent, i: usize) -> Result<MonomialIdeal> {
    ideal.require_proper()?;
    check_grading(ideal, g)?;
    let dim = ideal.dim_quotient().finite().expect("proper ideal");
    if i > dim {
        return Err(Error::SkeletonIndex { i, dim });
    }
    let n = ideal.n();
    let mut gens: Vec<Exponent> = ideal.gens().to_vec();
    for t in VarSet::full(n).subsets_of_size(i + 1) {
        gens.push(Exponent::new(
            (0..n).map(|s| if t.contains(s) { g[s] } else { 0 }).collect(),
        ));
    }
    Ok(MonomialIdeal::minimized(n, gens))
}

/// Result of the skeleton route to `S_r-depth(S/I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonDepth {
    /// `max{i : S/Σ_i satisfies (S_r)}`.
    pub value: usize,
    /// Test outcome per index `i = 0, ..., d`.
    pub passes: Vec<bool>,
    /// Indices where `Σ_i` is the unit ideal (zero quotient, passes vacuously).
    pub vacuous: Vec<usize>,
}

impl SkeletonDepth {
    /// Every index up to `value` passes.
    pub fn furthermore_holds(&self) -> bool {
        self.passes[..=self.value].iter().all(|&p| p)
    }
}

/// Whether `S/Σ` satisfies `(S_r)` in the sense `S_r-depth(S/Σ) = dim(S/Σ) = i`.
/// A unit ideal (zero quotient) passes vacuously; this happens only when `g`
/// has zero entries.
fn skeleton_test(an: &Analyzer, sigma: &MonomialIdeal, i: usize, r: usize) -> Result<Option<bool>> {
    if sigma.is_unit() {
        return Ok(None);
    }
    let dim = sigma.dim_quotient().finite().expect("proper ideal");
    Ok(Some(dim == i && an.serre_depth(sigma, r)? == i))
}

pub fn serre_depth_via_skeletons(
    an: &Analyzer,
    ideal: &MonomialIdeal,
    g: &Exponent,
    r: usize,
) -> Result<SkeletonDepth> {
    if r == 0 {
        return Err(Error::InvalidSerreIndex);
    }
    ideal.require_proper_nonzero()?;
    check_grading(ideal, g)?;
    let d = ideal.dim_quotient().finite().expect("proper ideal");
    let mut passes = Vec::with_capacity(d + 1);
    let mut vacuous = Vec::new();
    for i in 0..=d {
        let sigma = skeleton_ideal(ideal, g, i)?;
        match skeleton_test(an, &sigma, i, r)? {
            Some(ok) => passes.push(ok),
            None => {
                vacuous.push(i);
                passes.push(true);
            }
        }
    }
    let value = passes.iter().rposition(|&p| p).unwrap_or(0);
    Ok(SkeletonDepth { value, passes, vacuous })
}

/// Outcome of checking the skeleton characterization on one ideal.
#[derive(Clone, Debug)]
pub struct SkeletonReport {
    pub g: Exponent,
    /// `S_r-depth(S/I)` from local cohomology, `r = 1, ..., max(1, d)`.
    pub direct: Vec<usize>,
    /// The same quantities through skeletons.
    pub via_skeletons: Vec<SkeletonDepth>,
    pub checks: CheckReport,
    /// Indices `i` where `S/Σ_i` has no embedded primes yet `S_1-depth ≠ dim`.
    pub s1_divergences: Vec<usize>,
}

impl SkeletonReport {
    pub fn passed(&self) -> bool {
        self.checks.passed()
    }
}

pub fn verify_skeleton_theorem(an: &Analyzer, ideal: &MonomialIdeal, g: &Exponent) -> Result<SkeletonReport> {
    ideal.require_proper_nonzero()?;
    check_grading(ideal, g)?;
    let d = ideal.dim_quotient().finite().expect("proper ideal");
    let skeletons: Vec<MonomialIdeal> = (0..=d).map(|i| skeleton_ideal(ideal, g, i)).collect::<Result<_>>()?;
    let mut checks = CheckReport::default();

    let top_is_ideal = skeletons[d] == *ideal;
    checks.push(Check::new(
        "skeleton_top_equals_ideal",
        top_is_ideal,
        format!("Σ_{d} = {}", skeletons[d]),
    ));
    let nested = skeletons.windows(2).all(|w| w[0].contains_ideal(&w[1]));
    checks.push(Check::new(
        "skeleton_filtration",
        nested,
        String::from("Σ_d ⊆ ... ⊆ Σ_0"),
    ));
    for (i, sigma) in skeletons.iter().enumerate() {
        if sigma.is_unit() {
            continue;
        }
        let dim = sigma.dim_quotient();
        checks.push(Check::new(
            format!("skeleton_dimension[i={i}]"),
            dim.finite() == Some(i),
            format!("dim S/Σ_{i} = {dim} for Σ_{i} = {sigma}"),
        ));
    }

    let mut direct = Vec::new();
    let mut via_skeletons = Vec::new();
    for r in 1..=strata_length(ideal) {
        let value = an.serre_depth(ideal, r)?;
        let via = serre_depth_via_skeletons(an, ideal, g, r)?;
        checks.push(Check::new(
            format!("skeleton_characterization[r={r}]"),
            via.value == value,
            format!(
                "S_{r}-depth = {value}, skeleton value = {}, passes = {:?}",
                via.value, via.passes
            ),
        ));
        let furthermore = value <= d && via.passes[..=value].iter().all(|&p| p);
        checks.push(Check::new(
            format!("skeleton_furthermore[r={r}]"),
            furthermore,
            format!("indices 0..={value} must pass, passes = {:?}", via.passes),
        ));

        let mut chain = Vec::with_capacity(d + 1);
        for sigma in &skeletons {
            if sigma.is_unit() {
                continue;
            }
            chain.push(an.serre_depth(sigma, r)?);
        }
        let monotone = chain.windows(2).all(|w| w[0] <= w[1]);
        checks.push(Check::new(
            format!("skeleton_chain[r={r}]"),
            monotone,
            format!("S_{r}-depths along Σ_0, ..., Σ_d: {chain:?}"),
        ));
        direct.push(value);
        via_skeletons.push(via);
    }

    let mut s1_divergences = Vec::new();
    for (i, sigma) in skeletons.iter().enumerate() {
        if sigma.is_unit() {
            continue;
        }
        let theorem = an.is_serre_condition(sigma, 1, SerreMode::Theorem)?;
        let literal = an.is_serre_condition(sigma, 1, SerreMode::LiteralS1)?;
        if theorem != literal {
            s1_divergences.push(i);
        }
    }

    Ok(SkeletonReport {
        g: g.clone(),
        direct,
        via_skeletons,
        checks,
        s1_divergences,
    })
}
