use core::fmt;

/// A Krull dimension, where the zero module has dimension `-∞`.
///
/// The derived order puts `NegInfinity` below every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KrullDim {
    NegInfinity,
    Finite(usize),
}

impl KrullDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            KrullDim::NegInfinity => None,
            KrullDim::Finite(d) => Some(d),
        }
    }

    pub fn is_neg_infinity(self) -> bool {
        matches!(self, KrullDim::NegInfinity)
    }

    /// `self ≥ bound`, with `-∞` failing every comparison.
    pub fn at_least(self, bound: i64) -> bool {
        match self {
            KrullDim::NegInfinity => false,
            KrullDim::Finite(d) => d as i64 >= bound,
        }
    }
}

impl From<usize> for KrullDim {
    fn from(d: usize) -> Self {
        KrullDim::Finite(d)
    }
}

impl fmt::Display for KrullDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KrullDim::NegInfinity => f.write_str("-inf"),
            KrullDim::Finite(d) => write!(f, "{d}"),
        }
    }
}
