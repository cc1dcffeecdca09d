//! Linear extensions, realizers and order dimension.

mod adjunct;
mod exact;
mod extension;
mod two_dim;

pub use adjunct::{
    adjunct_dimension_bounds, adjunct_dimension_loose_bounds, adjunct_on_existing_pair_realizer,
    adjunct_realizer, compress_run, doubly_irreducible_run,
};
pub use exact::{dimension_exact, ExactOptions, DEFAULT_EXTENSION_CAP};
pub use extension::{
    enumerate_linear_extensions, verify_realizer, LinearExtension, LinearExtensions, Realizer,
    RealizerFailure,
};
pub use two_dim::{has_dim_le_2, transitive_orientation, two_realizer};

use std::fmt;

use crate::lattice::LatticeError;
use crate::poset::ElementId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DimensionError {
    #[error("more than {cap} linear extensions")]
    ExtensionCapExceeded { cap: usize },
    #[error("dimension exceeds the limit {max_dim}")]
    DimensionAboveLimit { max_dim: usize },
    #[error("({a}, {b}) is not an adjunct pair with an ear of doubly irreducible elements")]
    PairNotAdjunct { a: ElementId, b: ElementId },
    #[error("the host lattice is a chain")]
    ChainHost,
    #[error("invalid realizer: {0}")]
    InvalidRealizer(RealizerFailure),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Chain,
    Dim2Test,
    ExplicitConstruction,
    BruteForce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Chain => "chain",
            Method::Dim2Test => "dim2-test",
            Method::ExplicitConstruction => "explicit-construction",
            Method::BruteForce => "brute-force",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub dim: usize,
    /// Exactly `dim` extensions.
    pub witness: Realizer,
    pub method: Method,
    /// `Some(dim <= 2)` for lattices, `None` for other posets.
    pub planar: Option<bool>,
}
