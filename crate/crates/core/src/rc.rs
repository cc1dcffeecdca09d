//! RC-lattices: recognition and the dimension classifier.

use crate::blocks::{build_lr, lr_realizer, BlockError, LrBlock, RcSkeleton, LR_REALIZER_MAX_RANK};
use crate::dimension::{
    dimension_exact, two_realizer, verify_realizer, DimensionError, DimensionReport, ExactOptions,
    LinearExtension, Method, Realizer,
};
use crate::lattice::Lattice;
use crate::poset::{ElementId, Poset};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RcError {
    #[error("not an RC-lattice: reducibles {x} and {y} are incomparable")]
    NotRc { x: ElementId, y: ElementId },
    #[error("{reducibles} reducibles; the explicit realizer covers at most {max}")]
    TooManyReducibles { reducibles: usize, max: usize },
    #[error("expanded realizer failed verification: {0}")]
    Expansion(String),
    #[error(transparent)]
    Block(#[from] BlockError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RcVerdict {
    pub is_rc: bool,
    /// Two incomparable reducibles when `is_rc` is false.
    pub witness: Option<(ElementId, ElementId)>,
    pub report: Option<DimensionReport>,
}

/// Whether the reducibles of `l` are pairwise comparable.
pub fn is_rc(l: &Lattice) -> RcVerdict {
    let witness = crate::blocks::incomparable_reducibles(l.poset());
    RcVerdict {
        is_rc: witness.is_none(),
        witness,
        report: None,
    }
}

/// [`is_rc`] plus the dimension report when the answer is yes.
pub fn rc_verdict(l: &Lattice) -> Result<RcVerdict, RcError> {
    let mut v = is_rc(l);
    if v.is_rc {
        v.report = Some(rc_dimension(l)?);
    }
    Ok(v)
}

/// Dimension of an RC-lattice with a verified witness.
///
/// Chains get one extension and planar lattices the conjugate-order pair. Anything
/// else is realized through `L_r`, `r = |Red(L)|`: see [`rc_realizer_via_lr`].
pub fn rc_dimension(l: &Lattice) -> Result<DimensionReport, RcError> {
    if let Some((x, y)) = crate::blocks::incomparable_reducibles(l.poset()) {
        return Err(RcError::NotRc { x, y });
    }
    let p = l.poset();
    if p.is_chain() {
        let witness = Realizer::new(vec![LinearExtension::new(p.topological_order())]);
        return Ok(DimensionReport {
            dim: 1,
            witness,
            method: Method::Chain,
            planar: Some(true),
        });
    }
    if let Some(witness) = two_realizer(p) {
        return Ok(DimensionReport {
            dim: 2,
            witness,
            method: Method::Dim2Test,
            planar: Some(true),
        });
    }
    let witness = rc_realizer_via_lr(l)?;
    Ok(DimensionReport {
        dim: witness.len(),
        witness,
        method: Method::ExplicitConstruction,
        planar: Some(false),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Rc(#[from] RcError),
    #[error(transparent)]
    Exact(#[from] DimensionError),
}

/// Dimension of any poset: chains and the dimension-two test first, then the RC
/// classifier for RC-lattices, and the exhaustive search for everything else.
pub fn dimension_of(p: &Poset, opts: &ExactOptions) -> Result<DimensionReport, ClassifyError> {
    let lattice = Lattice::new(p.clone()).ok();
    if let Some(l) = lattice.as_ref().filter(|l| is_rc(l).is_rc) {
        return match rc_dimension(l) {
            Err(RcError::TooManyReducibles { .. }) => exact_with_planarity(p, opts, true),
            other => Ok(other?),
        };
    }
    if p.is_chain() {
        let witness = Realizer::new(vec![LinearExtension::new(p.topological_order())]);
        return Ok(DimensionReport {
            dim: 1,
            witness,
            method: Method::Chain,
            planar: lattice.map(|_| true),
        });
    }
    if let Some(witness) = two_realizer(p) {
        return Ok(DimensionReport {
            dim: 2,
            witness,
            method: Method::Dim2Test,
            planar: lattice.map(|_| true),
        });
    }
    exact_with_planarity(p, opts, lattice.is_some())
}

fn exact_with_planarity(
    p: &Poset,
    opts: &ExactOptions,
    is_lattice: bool,
) -> Result<DimensionReport, ClassifyError> {
    let mut rep = dimension_exact(p, opts)?;
    if is_lattice {
        rep.planar = Some(rep.dim <= 2);
    }
    Ok(rep)
}

/// Which element of `L_r` each piece of the skeleton stands in for.
#[derive(Debug, Clone)]
pub struct LrImage {
    pub block: LrBlock,
    /// Chains of `l` standing in for each element of `L_r`; twins are separate chains.
    pub preimage: Vec<Vec<Vec<ElementId>>>,
    pub below: Vec<ElementId>,
    pub above: Vec<ElementId>,
}

/// Maps the skeleton of an RC-lattice onto `L_r`: the `k`-th reducible to `A_k`,
/// the chain run between the `k`-th and `(k+1)`-th reducibles to `x_k`, an ear on
/// the `p`-th and `q`-th reducibles to the ear on `(A_p, A_q)`.
pub fn lr_image(l: &Lattice) -> Result<LrImage, RcError> {
    let sk = RcSkeleton::of(l).map_err(|e| match e {
        BlockError::NotRc { x, y } => RcError::NotRc { x, y },
        e => RcError::Block(e),
    })?;
    let r = sk.reducibles.len();
    let block = build_lr(r.max(1))?;
    let mut preimage = vec![Vec::new(); block.poset().len()];
    let index = |e: ElementId| {
        sk.reducibles
            .iter()
            .position(|&x| x == e)
            .expect("ears sit on reducibles")
    };
    for (k, &red) in sk.reducibles.iter().enumerate() {
        preimage[block.a(k + 1)].push(vec![red]);
    }
    for (k, run) in sk.runs.iter().enumerate() {
        if !run.is_empty() {
            preimage[block.x(k + 1)].push(run.clone());
        }
    }
    for (ear, pair) in &sk.ears {
        let (p, q) = (index(pair.a) + 1, index(pair.b) + 1);
        preimage[block.c(LrBlock::ear_index(p, q))].push(ear.clone());
    }
    Ok(LrImage {
        block,
        preimage,
        below: sk.below,
        above: sk.above,
    })
}

/// Pulls a realizer of `L_r` back to `l`. Every element of `L_r` is replaced by
/// the chains standing in for it; twin chains go in ascending order in even
/// extensions and descending order in odd ones. The pendant ends of the chain are
/// comparable to everything and go first and last.
pub fn pull_back(image: &LrImage, lr: &Realizer) -> Realizer {
    let exts = lr
        .extensions
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut out = image.below.clone();
            for &y in e.order() {
                let chains = &image.preimage[y];
                if i % 2 == 0 {
                    chains.iter().for_each(|c| out.extend(c));
                } else {
                    chains.iter().rev().for_each(|c| out.extend(c));
                }
            }
            out.extend(&image.above);
            LinearExtension::new(out)
        })
        .collect();
    Realizer::new(exts)
}

/// A 3-realizer of a non-planar RC-lattice with at most 12 reducibles, from the
/// explicit realizer of `L_r`.
pub fn rc_realizer_via_lr(l: &Lattice) -> Result<Realizer, RcError> {
    let image = lr_image(l)?;
    let r = image.block.r();
    if r > LR_REALIZER_MAX_RANK {
        return Err(RcError::TooManyReducibles {
            reducibles: r,
            max: LR_REALIZER_MAX_RANK,
        });
    }
    let lr = if r >= 5 {
        lr_realizer(&image.block)?
    } else {
        // not reached for non-planar lattices, kept for completeness
        crate::blocks::lr_witness(&image.block).expect("small blocks have a witness")
    };
    let out = pull_back(&image, &lr);
    verify_realizer(l.poset(), &out).map_err(|e| RcError::Expansion(e.to_string()))?;
    Ok(out)
}
