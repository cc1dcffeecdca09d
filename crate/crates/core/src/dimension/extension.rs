use std::fmt;

use crate::poset::{ElementId, Poset};

use super::DimensionError;

/// A total order on the ground set, least element first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExtension {
    order: Vec<ElementId>,
}

impl LinearExtension {
    pub fn new(order: Vec<ElementId>) -> Self {
        LinearExtension { order }
    }

    pub fn order(&self) -> &[ElementId] {
        &self.order
    }

    pub fn into_order(self) -> Vec<ElementId> {
        self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `pos[x]` is the index of `x`. `None` unless the order is a permutation of `0..n`.
    pub fn positions(&self, n: usize) -> Option<Vec<usize>> {
        if self.order.len() != n {
            return None;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &x) in self.order.iter().enumerate() {
            if x >= n || pos[x] != usize::MAX {
                return None;
            }
            pos[x] = i;
        }
        Some(pos)
    }

    pub fn is_extension_of(&self, p: &Poset) -> bool {
        self.positions(p.len())
            .is_some_and(|pos| p.covers().iter().all(|&(u, v)| pos[u] < pos[v]))
    }
}

impl fmt::Display for LinearExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// A family of linear extensions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Realizer {
    pub extensions: Vec<LinearExtension>,
}

impl Realizer {
    pub fn new(extensions: Vec<LinearExtension>) -> Self {
        Realizer { extensions }
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealizerFailure {
    #[error("no extensions")]
    Empty,
    #[error("extension {index} is not a permutation of the ground set")]
    NotAPermutation { index: usize },
    #[error("extension {index} puts {upper} before {lower}")]
    NotAnExtension {
        index: usize,
        lower: ElementId,
        upper: ElementId,
    },
    #[error("no extension puts {x} before {y}")]
    NotARealizer { x: ElementId, y: ElementId },
}

/// Checks that every member is a linear extension of `p` and that every ordered
/// incomparable pair appears in some member.
pub fn verify_realizer(p: &Poset, r: &Realizer) -> Result<(), RealizerFailure> {
    if r.is_empty() {
        return Err(RealizerFailure::Empty);
    }
    let n = p.len();
    let mut positions = Vec::with_capacity(r.len());
    for (index, ext) in r.extensions.iter().enumerate() {
        let pos = ext
            .positions(n)
            .ok_or(RealizerFailure::NotAPermutation { index })?;
        if let Some(&(lower, upper)) = p.covers().iter().find(|&&(u, v)| pos[u] > pos[v]) {
            return Err(RealizerFailure::NotAnExtension {
                index,
                lower,
                upper,
            });
        }
        positions.push(pos);
    }
    for x in 0..n {
        for y in x + 1..n {
            if !p.incomparable(x, y) {
                continue;
            }
            if !positions.iter().any(|pos| pos[x] < pos[y]) {
                return Err(RealizerFailure::NotARealizer { x, y });
            }
            if !positions.iter().any(|pos| pos[y] < pos[x]) {
                return Err(RealizerFailure::NotARealizer { x: y, y: x });
            }
        }
    }
    Ok(())
}

/// Lazily enumerates the linear extensions of a poset in lexicographic order.
pub struct LinearExtensions<'a> {
    p: &'a Poset,
    // lower covers not yet placed
    pending: Vec<usize>,
    prefix: Vec<ElementId>,
    // frames[d] holds the candidates for position d and the one in use
    frames: Vec<(Vec<ElementId>, usize)>,
    started: bool,
}

impl<'a> LinearExtensions<'a> {
    pub fn new(p: &'a Poset) -> Self {
        let pending: Vec<usize> = p.elements().map(|x| p.lower_covers(x).len()).collect();
        let minimal = p.elements().filter(|&x| pending[x] == 0).collect();
        LinearExtensions {
            p,
            pending,
            prefix: Vec::with_capacity(p.len()),
            frames: vec![(minimal, 0)],
            started: false,
        }
    }

    fn descend(&mut self) {
        while self.prefix.len() < self.p.len() {
            let (cands, idx) = self.frames.last().expect("frame per position");
            let x = cands[*idx];
            let mut next: Vec<ElementId> = cands.iter().copied().filter(|&c| c != x).collect();
            self.prefix.push(x);
            for &u in self.p.upper_covers(x) {
                self.pending[u] -= 1;
                if self.pending[u] == 0 {
                    next.push(u);
                }
            }
            next.sort_unstable();
            self.frames.push((next, 0));
        }
    }

    fn unplace(&mut self) {
        let x = self.prefix.pop().expect("nonempty prefix");
        for &u in self.p.upper_covers(x) {
            self.pending[u] += 1;
        }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        if !self.started {
            self.started = true;
        } else {
            // drop the leaf frame, then advance the deepest frame that has a next candidate
            self.frames.pop();
            loop {
                let (cands, idx) = self.frames.last_mut()?;
                *idx += 1;
                let exhausted = *idx >= cands.len();
                self.unplace();
                if !exhausted {
                    break;
                }
                self.frames.pop();
                if self.frames.is_empty() {
                    return None;
                }
            }
        }
        self.descend();
        Some(LinearExtension::new(self.prefix.clone()))
    }
}

/// All linear extensions, or an error once more than `cap` have been produced.
pub fn enumerate_linear_extensions(
    p: &Poset,
    cap: usize,
) -> Result<Vec<LinearExtension>, DimensionError> {
    let mut out = Vec::new();
    for ext in LinearExtensions::new(p) {
        if out.len() == cap {
            return Err(DimensionError::ExtensionCapExceeded { cap });
        }
        out.push(ext);
    }
    Ok(out)
}
