//! The complete fundamental basic block `L_r`, and reduction of RC-lattices to
//! their basic and fundamental basic blocks.

mod basic;
mod lr;

pub use basic::{
    basic_block_of_rc, basic_block_of_skeleton, fundamental_basic_block_of,
    incomparable_reducibles, BasicBlockForm, RcSkeleton,
};
pub use lr::{
    binom2, build_lr, closed_form_a, closed_form_b, is_embedding_onto_induced, lower_embedding,
    lr_realizer, lr_stats, lr_witness, upper_embedding, LrBlock, LR_REALIZER_MAX_RANK,
};

use crate::lattice::LatticeError;
use crate::poset::{ElementId, PosetError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BlockError {
    #[error("not an RC-lattice: reducibles {x} and {y} are incomparable")]
    NotRc { x: ElementId, y: ElementId },
    #[error("r = {r} is below the minimum {min}")]
    RankTooSmall { r: usize, min: usize },
    #[error("r = {r} is above the largest supported rank {max}")]
    RankTooLarge { r: usize, max: usize },
    #[error("inconsistent block: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl From<PosetError> for BlockError {
    fn from(e: PosetError) -> Self {
        BlockError::Lattice(LatticeError::Poset(e))
    }
}
