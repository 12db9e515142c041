//! Cross-checks between independent routes to the same invariants.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cohomology::{strata_length, Analyzer, DegreeClass, SerreMode};
use crate::decompose::irreducible_decomposition;
use crate::error::Result;
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::skeleton::verify_skeleton_theorem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Values compared, kept for failures.
    pub witness: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            witness: witness.into(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Intersection of the irreducible components equals `I`.
pub fn check_decomposition(ideal: &MonomialIdeal) -> Result<Check> {
    let parts = irreducible_decomposition(ideal)?;
    let meet = parts
        .iter()
        .cloned()
        .reduce(|a, b| a.intersect(&b))
        .expect("nonempty decomposition");
    Ok(Check::new(
        "decomposition_intersection",
        meet == *ideal,
        format!("∩ components = {meet}, I = {ideal}"),
    ))
}

/// `Ass(S/I)` from the decomposition against depth-zero localizations.
pub fn check_associated_primes(an: &Analyzer, ideal: &MonomialIdeal) -> Result<Check> {
    let from_decomposition = an.associated_faces(ideal)?;
    let from_depth = an.depth_zero_localizations(ideal)?;
    Ok(Check::new(
        "ass_equals_depth_zero_localizations",
        from_decomposition == from_depth,
        format!("decomposition: {from_decomposition:?}, depth zero: {from_depth:?}"),
    ))
}

/// Structural identities every profile of a proper ideal must satisfy.
pub fn check_profile_invariants(an: &Analyzer, ideal: &MonomialIdeal) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let profile = an.profile(ideal)?;
    let n = ideal.n();
    let dim = ideal.dim_quotient().finite().expect("proper ideal");
    let depth = profile.depth().expect("nonzero module");

    let bounded = (0..=n).all(|j| !profile.dual_dim(j).at_least(j as i64 + 1));
    report.push(Check::new(
        "dual_dim_at_most_degree",
        bounded,
        format!("{:?}", profile.dual_dims()),
    ));
    report.push(Check::new(
        "top_nonzero_degree_is_dim",
        profile.top_degree() == Some(dim),
        format!("top = {:?}, dim = {dim}", profile.top_degree()),
    ));

    let rmax = dim.max(1) + 1;
    let serre: Vec<usize> = (1..=rmax)
        .map(|r| profile.serre_depth(r).expect("nonzero module"))
        .collect();
    let chain = serre[0] <= dim && serre.windows(2).all(|w| w[0] >= w[1]);
    report.push(Check::new(
        "serre_depth_chain",
        chain,
        format!("dim = {dim}, S_r = {serre:?}"),
    ));
    let stable = (dim.max(1)..=rmax).all(|r| serre[r - 1] == depth);
    report.push(Check::new(
        "serre_depth_equals_depth_beyond_dim",
        stable,
        format!("depth = {depth}, S_r = {serre:?}"),
    ));
    let zero = serre.iter().all(|&s| (s == 0) == (depth == 0));
    report.push(Check::new(
        "serre_depth_zero_iff_depth_zero",
        zero,
        format!("depth = {depth}, S_r = {serre:?}"),
    ));

    if !ideal.is_zero() {
        let mut identity = true;
        let mut values = Vec::new();
        for r in 1..=3 {
            let lhs = an.serre_depth_ideal_module(ideal, r + 1)?;
            let rhs = an.serre_depth(ideal, r)? + 1;
            identity &= lhs == rhs;
            values.push((lhs, rhs));
        }
        report.push(Check::new(
            "ideal_quotient_serre_shift",
            identity,
            format!("(S_(r+1)-depth(I), S_r-depth(S/I)+1) for r=1..3: {values:?}"),
        ));
    }
    Ok(report)
}

/// Every degree in `[-g-2, g+2]^n` gets the dual pieces of its class
/// representative.
pub fn check_class_constancy(an: &Analyzer, ideal: &MonomialIdeal) -> Result<Check> {
    let n = ideal.n();
    let g = ideal.bounding_multidegree();
    let mut mismatches = Vec::new();
    let mut visited = 0u64;
    for a in box_points(&g, 2) {
        visited += 1;
        let class = DegreeClass::of(&a, &g);
        let rep = class.representative();
        for j in 0..=n {
            let at_a = an.dual_piece_dim(ideal, &a, j)?;
            let at_rep = an.dual_piece_dim(ideal, &rep, j)?;
            if at_a != at_rep {
                mismatches.push((a.clone(), j, at_a, at_rep));
            }
        }
    }
    Ok(Check::new(
        "degree_class_constancy",
        mismatches.is_empty(),
        format!("{visited} degrees swept, mismatches: {mismatches:?}"),
    ))
}

/// All integer points of `[-g-margin, g+margin]`.
pub fn box_points(g: &Exponent, margin: i32) -> impl Iterator<Item = Exponent> + '_ {
    let n = g.len();
    let lo: Vec<i32> = g.entries().iter().map(|&v| -v - margin).collect();
    let hi: Vec<i32> = g.entries().iter().map(|&v| v + margin).collect();
    let mut current = Some(lo.clone());
    core::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut k = n;
        loop {
            if k == 0 {
                current = None;
                break;
            }
            k -= 1;
            if next[k] < hi[k] {
                next[k] += 1;
                current = Some(next);
                break;
            }
            next[k] = lo[k];
        }
        Some(Exponent::new(out))
    })
}

/// `(S_r)` at monomial primes against the cohomological verdicts.
pub fn check_serre_conditions(an: &Analyzer, ideal: &MonomialIdeal) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let equidimensional = ideal.is_zero() || crate::decompose::classify_components(ideal)?.equidimensional;
    for r in 1..=strata_length(ideal) + 1 {
        let direct = an.direct_serre_check(ideal, r)?;
        let theorem = an.is_serre_condition(ideal, r, SerreMode::Theorem)?;
        if r >= 2 {
            report.push(Check::new(
                format!("direct_serre_matches_theorem[r={r}]"),
                direct == theorem,
                format!("direct = {direct}, S_r-depth = dim: {theorem}"),
            ));
        } else {
            let literal = an.is_serre_condition(ideal, 1, SerreMode::LiteralS1)?;
            report.push(Check::new(
                "direct_s1_matches_literal",
                direct == literal,
                format!("direct = {direct}, no embedded primes: {literal}"),
            ));
            if equidimensional {
                report.push(Check::new(
                    "direct_s1_matches_theorem_when_equidimensional",
                    direct == theorem,
                    format!("direct = {direct}, S_1-depth = dim: {theorem}"),
                ));
            }
        }
    }
    Ok(report)
}

/// Every cross-check applicable to `ideal`.
pub fn verify_ideal(an: &Analyzer, ideal: &MonomialIdeal) -> Result<CheckReport> {
    ideal.require_proper()?;
    let mut report = CheckReport::default();
    if !ideal.is_zero() {
        report.push(check_decomposition(ideal)?);
    }
    report.push(check_associated_primes(an, ideal)?);
    report.extend(check_profile_invariants(an, ideal)?);
    report.push(check_class_constancy(an, ideal)?);
    report.extend(check_serre_conditions(an, ideal)?);
    if !ideal.is_zero() {
        let g = ideal.bounding_multidegree();
        let g_plus: Exponent = Exponent::new(g.entries().iter().map(|v| v + 1).collect());
        for grading in [g, g_plus] {
            let skeleton = verify_skeleton_theorem(an, ideal, &grading)?;
            for mut check in skeleton.checks.checks {
                check.name = format!("{} g={:?}", check.name, grading);
                report.push(check);
            }
        }
    }
    Ok(report)
}
