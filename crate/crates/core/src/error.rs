use alloc::vec::Vec;

use crate::exponent::MAX_VARS;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable count {0} is outside 1..={MAX_VARS}")]
    VariableCount(usize),
    #[error("exponent has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("negative exponent {value} at position {index}")]
    NegativeExponent { index: usize, value: i32 },
    #[error("vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("power exponent must be at least 1, got {0}")]
    NonPositivePower(i64),
    #[error("operation requires a proper ideal")]
    NotProper,
    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("Serre index r must be at least 1")]
    InvalidSerreIndex,
    #[error("cohomological degree {j} is outside 0..={n}")]
    DegreeOutOfRange { j: usize, n: usize },
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    InvalidCharacteristic(u64),
    #[error("grading vector {g:?} is not above the bounding multidegree {bound:?}")]
    GradingTooSmall { g: Vec<i32>, bound: Vec<i32> },
    #[error("skeleton index {i} is outside 0..={dim}")]
    SkeletonIndex { i: usize, dim: usize },
    #[error("stabilization window {window} is invalid for a table of {rows} rows")]
    InvalidWindow { window: usize, rows: usize },
    #[error("{patterns} degree classes exceed the budget of {budget}{}", power_suffix(*.k))]
    BudgetExceeded {
        k: Option<usize>,
        patterns: u128,
        budget: u128,
    },
}

fn power_suffix(k: Option<usize>) -> alloc::string::String {
    match k {
        Some(k) => alloc::format!(" at power k = {k}"),
        None => alloc::string::String::new(),
    }
}

pub type Result<T> = core::result::Result<T, Error>;
