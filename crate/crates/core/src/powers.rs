//! Depth strata along the powers `I^k`.

use alloc::vec::Vec;

use crate::cohomology::{strata_length, Analyzer};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// Default number of trailing rows that must agree for a stable verdict.
pub const DEFAULT_WINDOW: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerRow {
    pub k: usize,
    pub dim: usize,
    pub depth: usize,
    /// `(S_1-depth, ..., S_d-depth)` of `S/I^k`, `d = max(1, dim)`.
    pub strata: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerTable {
    pub rows: Vec<PowerRow>,
}

/// Rows for `k = 1, ..., k_max`. Each power is checked against the
/// analyzer's class budget before its profile is computed.
pub fn power_table(an: &Analyzer, ideal: &MonomialIdeal, k_max: usize) -> Result<PowerTable> {
    ideal.require_proper_nonzero()?;
    if k_max == 0 {
        return Err(Error::NonPositivePower(0));
    }
    let mut rows = Vec::with_capacity(k_max);
    let mut power = ideal.clone();
    for k in 1..=k_max {
        if k > 1 {
            power = power.multiply(ideal);
        }
        if let Some(budget) = an.budget() {
            let patterns = power.degree_class_count();
            if patterns > budget {
                return Err(Error::BudgetExceeded {
                    k: Some(k),
                    patterns,
                    budget,
                });
            }
        }
        let profile = an.profile(&power)?;
        let d = strata_length(&power);
        rows.push(PowerRow {
            k,
            dim: power.dim_quotient().finite().expect("proper ideal"),
            depth: profile.depth().expect("nonzero module"),
            strata: (1..=d)
                .map(|r| profile.serre_depth(r).expect("nonzero module"))
                .collect(),
        });
    }
    Ok(PowerTable { rows })
}

/// Empirical stabilization verdict. Eventual constancy of the strata is
/// guaranteed, but no bound on the onset is known, so a stable suffix is
/// evidence only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationReport {
    pub stable: bool,
    pub window: usize,
    /// First `k` of the maximal constant suffix, when stable.
    pub onset: Option<usize>,
    pub limit: Option<Vec<usize>>,
}

impl StabilizationReport {
    pub const NOTE: &'static str =
        "empirical: the strata are eventually constant, but no effective bound on the onset is known";
}

pub fn stabilization_report(table: &PowerTable, window: usize) -> Result<StabilizationReport> {
    let rows = &table.rows;
    if window < 2 || window > rows.len() {
        return Err(Error::InvalidWindow {
            window,
            rows: rows.len(),
        });
    }
    let last = &rows[rows.len() - 1].strata;
    let suffix = rows.iter().rev().take_while(|row| &row.strata == last).count();
    let stable = suffix >= window;
    Ok(StabilizationReport {
        stable,
        window,
        onset: stable.then(|| rows[rows.len() - suffix].k),
        limit: stable.then(|| last.clone()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrataProperties {
    /// `dim ≥ S_1 ≥ ... ≥ S_d` in every row.
    pub monotone: bool,
    /// A zero entry forces the whole row to vanish.
    pub zero_propagation: bool,
    /// The last `min(DEFAULT_WINDOW, rows)` rows agree.
    pub eventually_constant: bool,
}

impl StrataProperties {
    pub fn all(self) -> bool {
        self.monotone && self.zero_propagation && self.eventually_constant
    }
}

pub fn strata_properties_check(table: &PowerTable) -> StrataProperties {
    let monotone = table
        .rows
        .iter()
        .all(|row| row.strata.first().is_none_or(|&s| s <= row.dim) && row.strata.windows(2).all(|w| w[0] >= w[1]));
    let zero_propagation = table
        .rows
        .iter()
        .all(|row| !row.strata.contains(&0) || row.strata.iter().all(|&s| s == 0));
    let tail = DEFAULT_WINDOW.min(table.rows.len());
    let eventually_constant = table.rows[table.rows.len() - tail..]
        .windows(2)
        .all(|w| w[0].strata == w[1].strata);
    StrataProperties {
        monotone,
        zero_propagation,
        eventually_constant,
    }
}
